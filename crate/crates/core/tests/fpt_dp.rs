use colourful::decomposition::{exact_tree_decomposition, to_nice, TreeDecomposition};
use colourful::fpt::{dp_components, dp_partition};
use colourful::oracle::{brute_min_deletions, brute_min_partition};
use colourful::random::{permutation, random_graph, random_partial_ktree, relabel, rng};
use colourful::ColouredGraph;
use proptest::prelude::*;
use rand::Rng;

fn check_against_oracle(g: &ColouredGraph, td: &TreeDecomposition) {
    let ntd = to_nice(td).unwrap();
    let p = dp_partition(g, &ntd).unwrap();
    assert!(p.validate(g).unwrap());
    assert_eq!(p.value, brute_min_partition(g).unwrap().value, "partition on {g:?}");
    let c = dp_components(g, &ntd).unwrap();
    assert!(c.validate(g).unwrap());
    assert_eq!(c.value, brute_min_deletions(g).unwrap().value, "deletions on {g:?}");
}

#[test]
fn partial_ktrees_match_oracle() {
    let mut r = rng(31);
    for _ in 0..250 {
        let n = r.gen_range(1..=10);
        let k = r.gen_range(1..=3);
        let colours = r.gen_range(1..=5);
        let (g, td) = random_partial_ktree(&mut r, n, k, 0.6, colours);
        check_against_oracle(&g, &td);
    }
}

#[test]
fn disconnected_graphs_match_oracle() {
    let mut r = rng(32);
    for _ in 0..150 {
        let n = r.gen_range(0..=9);
        let colours = r.gen_range(1..=4);
        let g = random_graph(&mut r, n, 0.25, colours);
        let td = exact_tree_decomposition(&g, 4).unwrap().unwrap();
        check_against_oracle(&g, &td);
    }
}

#[test]
fn trivial_decomposition_matches_oracle() {
    let mut r = rng(33);
    for _ in 0..60 {
        let n = r.gen_range(1..=6);
        let g = random_graph(&mut r, n, 0.5, 3);
        check_against_oracle(&g, &TreeDecomposition::trivial(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn values_do_not_depend_on_vertex_names(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=9);
        let (g, td) = random_partial_ktree(&mut r, n, 2, 0.7, 4);
        let perm = permutation(&mut r, n);
        let h = relabel(&g, &perm);
        let th = exact_tree_decomposition(&h, 4).unwrap().unwrap();
        let (ng, nh) = (to_nice(&td).unwrap(), to_nice(&th).unwrap());
        prop_assert_eq!(dp_partition(&g, &ng).unwrap().value, dp_partition(&h, &nh).unwrap().value);
        prop_assert_eq!(dp_components(&g, &ng).unwrap().value, dp_components(&h, &nh).unwrap().value);
    }

    #[test]
    fn bounds_hold(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=10);
        let (g, td) = random_partial_ktree(&mut r, n, 3, 0.5, 5);
        let ntd = to_nice(&td).unwrap();
        let p = dp_partition(&g, &ntd).unwrap().value;
        let c = dp_components(&g, &ntd).unwrap().value;
        prop_assert!(p >= colourful::colour_multiplicity(&g));
        prop_assert!(p >= g.components().len());
        prop_assert!(c <= g.m());
        if g.m() + 1 == g.n() && g.is_connected() {
            prop_assert_eq!(p, c + 1);
        }
    }
}
