use colourful::decomposition::{exact_tree_decomposition, normalize_for_2cp};
use colourful::oracle::{brute_max_matching, brute_min_deletions, brute_min_partition, brute_sat};
use colourful::poly::{build_phi, hopcroft_karp, solve_2cp_treewidth2, solve_two_coloured, two_sat_solve, Lit, TwoSatFormula};
use colourful::random::{permutation, random_connected_graph, random_series_parallel, relabel, rng};
use colourful::{is_colourful_partition, Problem};
use rand::Rng;

#[test]
fn two_sat_matches_enumeration() {
    let mut r = rng(11);
    for _ in 0..300 {
        let n = r.gen_range(1..=10);
        let mut f = TwoSatFormula::new(n);
        for _ in 0..r.gen_range(0..=20) {
            let a = Lit::new(r.gen_range(0..n), r.gen_bool(0.5));
            let b = Lit::new(r.gen_range(0..n), r.gen_bool(0.5));
            f.add_clause(a, b);
        }
        let fast = two_sat_solve(&f);
        assert_eq!(fast.is_some(), brute_sat(&f).is_some());
        if let Some(a) = fast {
            assert!(f.is_satisfied_by(&a));
        }
    }
}

#[test]
fn hopcroft_karp_matches_enumeration() {
    let mut r = rng(12);
    for _ in 0..200 {
        let (l, rr) = (r.gen_range(0..=8), r.gen_range(0..=8));
        let mut edges = Vec::new();
        for a in 0..l {
            for b in 0..rr {
                if r.gen_bool(0.3) {
                    edges.push((a, b));
                }
            }
        }
        assert_eq!(hopcroft_karp(l, rr, &edges).size(), brute_max_matching(l, rr, &edges));
    }
}

#[test]
fn two_coloured_matches_oracle() {
    let mut r = rng(13);
    for _ in 0..300 {
        let n = r.gen_range(1..=10);
        let g = random_connected_graph(&mut r, n, 0.2, 2);
        let p = solve_two_coloured(&g, Problem::Partition).unwrap();
        assert!(p.validate(&g).unwrap());
        assert_eq!(p.value, brute_min_partition(&g).unwrap().value, "{g:?}");
        let c = solve_two_coloured(&g, Problem::Components).unwrap();
        assert!(c.validate(&g).unwrap());
        assert_eq!(c.value, brute_min_deletions(&g).unwrap().value, "{g:?}");
    }
}

#[test]
fn treewidth_two_solver_matches_oracle() {
    let mut r = rng(14);
    for i in 0..300 {
        let steps = r.gen_range(0..=8);
        let colours = r.gen_range(2..=5);
        let g = random_series_parallel(&mut r, steps, colours);
        let td = exact_tree_decomposition(&g, 2).unwrap().unwrap();
        for &(a, b) in g.edges() {
            let rd = normalize_for_2cp(&td, &g, a, b).unwrap();
            rd.check(&g).unwrap_or_else(|e| panic!("instance {i}: {e}\n{g:?}\n{rd:?}"));
        }
        let expected = brute_min_partition(&g).unwrap().value <= 2;
        let got = solve_2cp_treewidth2(&g).unwrap();
        assert_eq!(got.is_some(), expected, "instance {i}: {g:?}");
        if let Some(p) = got {
            assert!(p.len() <= 2 && is_colourful_partition(&g, &p).unwrap());
        }
    }
}

#[test]
fn phi_satisfiability_is_invariant_under_relabelling() {
    let mut r = rng(15);
    for _ in 0..100 {
        let g = random_series_parallel(&mut r, 6, 3);
        let perm = permutation(&mut r, g.n());
        let h = relabel(&g, &perm);
        let (a, b) = g.edges()[0];
        let sat = |g: &colourful::ColouredGraph, a, b| {
            let td = exact_tree_decomposition(g, 2).unwrap().unwrap();
            two_sat_solve(&build_phi(g, &normalize_for_2cp(&td, g, a, b).unwrap())).is_some()
        };
        assert_eq!(sat(&g, a, b), sat(&h, perm[a], perm[b]));
    }
}
