use super::GadgetError;
use crate::graph::ColouredGraph;

/// Vertices `u_1..u_k` (ids `0..k`), `v_1..v_k` (ids `k..2k`), `w = 2k`, `w' = 2k+1`.
/// `u_i` and `v_i` share colour `i`; every `u_i`, `v_i` is adjacent to both `w` and `w'`.
pub fn gen_example1(k: usize) -> Result<ColouredGraph, GadgetError> {
    if k == 0 {
        return Err(GadgetError::InvalidParameter("k must be at least 1".into()));
    }
    let kk = k as u32;
    let mut colours: Vec<u32> = (1..=kk).chain(1..=kk).collect();
    colours.extend([kk + 1, kk + 2]);
    let (w, w2) = (2 * k, 2 * k + 1);
    let mut edges = vec![(w, w2)];
    for x in 0..2 * k {
        edges.extend([(x, w), (x, w2)]);
    }
    Ok(ColouredGraph::new(&colours, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let g = gen_example1(1).unwrap();
        assert_eq!((g.n(), g.m()), (4, 5));
        let g = gen_example1(5).unwrap();
        assert_eq!((g.n(), g.m(), g.num_colours()), (12, 21, 7));
        assert!(gen_example1(0).is_err());
    }
}
