//! Maximum bipartite matching (Hopcroft-Karp).

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// Mate of each left vertex.
    pub left: Vec<Option<usize>>,
    /// Mate of each right vertex.
    pub right: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left.iter().flatten().count()
    }

    /// Matched `(left, right)` pairs in left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left.iter().enumerate().filter_map(|(l, r)| r.map(|r| (l, r))).collect()
    }
}

/// Maximum-cardinality matching of the bipartite graph with parts `0..left`, `0..right`.
///
/// Panics if an edge endpoint is out of range.
pub fn hopcroft_karp(left: usize, right: usize, edges: &[(usize, usize)]) -> Matching {
    let mut adj = vec![Vec::new(); left];
    for &(l, r) in edges {
        assert!(l < left && r < right, "edge ({l}, {r}) out of range");
        adj[l].push(r);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    let mut ml: Vec<Option<usize>> = vec![None; left];
    let mut mr: Vec<Option<usize>> = vec![None; right];
    let mut dist = vec![usize::MAX; left];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for l in 0..left {
            if ml[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match mr[r] {
                    None => found = true,
                    Some(l2) if dist[l2] == usize::MAX => {
                        dist[l2] = dist[l] + 1;
                        queue.push_back(l2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut iter = vec![0usize; left];
        for l in 0..left {
            if ml[l].is_none() {
                augment(l, &adj, &mut ml, &mut mr, &mut dist, &mut iter);
            }
        }
    }
    Matching { left: ml, right: mr }
}

/// Iterative layered DFS for one augmenting path starting at free vertex `start`.
fn augment(
    start: usize,
    adj: &[Vec<usize>],
    ml: &mut [Option<usize>],
    mr: &mut [Option<usize>],
    dist: &mut [usize],
    iter: &mut [usize],
) -> bool {
    let mut path: Vec<usize> = vec![start];
    while let Some(&l) = path.last() {
        if iter[l] == adj[l].len() {
            dist[l] = usize::MAX;
            path.pop();
            continue;
        }
        let r = adj[l][iter[l]];
        iter[l] += 1;
        match mr[r] {
            None => {
                // Flip along the path: each left vertex takes the right vertex it last tried.
                for &pl in path.iter().rev() {
                    let pr = adj[pl][iter[pl] - 1];
                    mr[pr] = Some(pl);
                    ml[pl] = Some(pr);
                }
                return true;
            }
            Some(l2) if dist[l2] == dist[l] + 1 => path.push(l2),
            _ => {}
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_two_by_two() {
        let m = hopcroft_karp(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(m.size(), 2);
    }

    #[test]
    fn no_edges() {
        let m = hopcroft_karp(3, 2, &[]);
        assert_eq!(m.size(), 0);
        assert!(m.pairs().is_empty());
    }

    #[test]
    fn needs_augmenting_path() {
        // Greedy would match 0-0 and leave 1 unmatched.
        let m = hopcroft_karp(2, 2, &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(m.pairs(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn mates_are_consistent() {
        let edges = [(0, 1), (1, 1), (1, 2), (2, 0), (3, 2), (3, 3)];
        let m = hopcroft_karp(4, 4, &edges);
        assert_eq!(m.size(), 4);
        for (l, r) in m.pairs() {
            assert_eq!(m.right[r], Some(l));
            assert!(edges.contains(&(l, r)));
        }
    }
}
