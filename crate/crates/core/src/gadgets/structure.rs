//! Structural predicates used to check generated instances.

use crate::graph::{colour_multiplicity, ColouredGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub split: bool,
    pub bipartite: bool,
    pub tree: bool,
    pub connected: bool,
    pub max_degree: usize,
    pub multiplicity: usize,
}

pub fn structural_report(g: &ColouredGraph) -> StructureReport {
    StructureReport {
        split: is_split(g),
        bipartite: is_bipartite(g),
        tree: is_tree(g),
        connected: g.is_connected(),
        max_degree: g.max_degree(),
        multiplicity: colour_multiplicity(g),
    }
}

/// Degree-sequence test of Hammer and Simeone.
pub fn is_split(g: &ColouredGraph) -> bool {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = (0..d.len()).take_while(|&i| d[i] >= i).count();
    d[..m].iter().sum::<usize>() == m * m.saturating_sub(1) + d[m..].iter().sum::<usize>()
}

pub fn is_bipartite(g: &ColouredGraph) -> bool {
    let mut side = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let here = side[v].expect("visited");
            for &u in g.neighbours(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!here);
                        stack.push(u);
                    }
                    Some(x) if x == here => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn is_tree(g: &ColouredGraph) -> bool {
    g.n() > 0 && g.m() + 1 == g.n() && g.is_connected()
}
