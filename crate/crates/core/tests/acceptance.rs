//! Acceptance suite: one pass/fail line per criterion. Runs without the libtest harness.

use std::process::ExitCode;
use std::time::Instant;

use colourful::decomposition::{exact_tree_decomposition, to_nice};
use colourful::fpt::{
    dp_components, dp_partition, kernel_bound, solve_min_partition_nonunique, solve_partition_nonunique,
    solve_partition_vc, solve_partition_vc_report,
};
use colourful::gadgets::{
    gen_example1, k4_instance, reduce_3sat_split, reduce_multicut_tree, reduce_nae3sat_pathwidth, reduce_vc,
    MulticutInstance,
};
use colourful::oracle::{
    brute_cnf_sat, brute_max_matching, brute_min_deletions, brute_min_multicut, brute_min_partition, brute_nae_sat,
    brute_sat, search_partition_at_most,
};
use colourful::poly::{hopcroft_karp, solve_2cp_treewidth2, solve_two_coloured, two_sat_solve, Lit, TwoSatFormula};
use colourful::random::{
    all_unlabeled_trees, random_3cnf, random_binary_tree, random_colours, random_connected_graph, random_partial_ktree,
    random_planted_cover, random_series_parallel, rng,
};
use colourful::{is_colourful_graph, is_colourful_partition, ColouredGraph, Problem};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<(), String>;
type Criterion = fn() -> Outcome;

const BUDGET: u64 = 50_000_000;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// Partition and deletion optima from the decomposition DP.
fn dp_optima(g: &ColouredGraph, max_width: usize) -> Result<(usize, usize), String> {
    let td = exact_tree_decomposition(g, max_width).map_err(e)?.ok_or("treewidth above cap")?;
    let ntd = to_nice(&td).map_err(e)?;
    let p = dp_partition(g, &ntd).map_err(e)?;
    let c = dp_components(g, &ntd).map_err(e)?;
    ensure(p.validate(g).map_err(e)? && c.validate(g).map_err(e)?, || "DP witness invalid".into())?;
    Ok((p.value, c.value))
}

fn example_one() -> Outcome {
    for k in 2..=6 {
        let g = gen_example1(k).map_err(e)?;
        let dp = dp_optima(&g, 4)?;
        ensure(dp == (2, 2 * k), || format!("k = {k}: DP gives {dp:?}"))?;
        if k <= 3 {
            let brute = (brute_min_partition(&g).map_err(e)?.value, brute_min_deletions(&g).map_err(e)?.value);
            ensure(brute == (2, 2 * k), || format!("k = {k}: oracle gives {brute:?}"))?;
        }
    }
    Ok(())
}

/// Recolours so that about `q` vertices share colours and the rest are unique.
fn with_non_unique<R: Rng>(r: &mut R, g: &ColouredGraph, q: usize) -> ColouredGraph {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(r);
    let q = if q == 1 { 2 } else { q }.min(n);
    let q = if q < 2 { 0 } else { q };
    let shared = (q / 2).max(1) as u32;
    let mut colours = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        colours[v] = if i < q { 1 + (i as u32 % shared) } else { 100 + i as u32 };
    }
    ColouredGraph::new(&colours, g.edges()).expect("same edges")
}

fn partition_equivalence() -> Outcome {
    let mut r = rng(1002);
    for i in 0..300 {
        let n = r.gen_range(1..=10);
        let colours = r.gen_range(2..=5);
        let g = random_connected_graph(&mut r, n, 0.25, colours);
        let opt = brute_min_partition(&g).map_err(e)?.value;
        let (dp, _) = dp_optima(&g, 10)?;
        ensure(dp == opt, || format!("dp #{i}: {dp} vs {opt} on {g:?}"))?;
    }
    for i in 0..300 {
        let n = r.gen_range(1..=10);
        let s = r.gen_range(1..=4).min(n);
        let colours = r.gen_range(1..=6);
        let density = r.gen_range(0.2..0.9);
        let g = random_planted_cover(&mut r, n, s, density, colours);
        let res = solve_partition_vc(&g).map_err(e)?;
        let opt = brute_min_partition(&g).map_err(e)?.value;
        ensure(res.validate(&g).map_err(e)? && res.value == opt, || format!("vc #{i}: {} vs {opt} on {g:?}", res.value))?;
    }
    for i in 0..300 {
        let n = r.gen_range(1..=10);
        let base = random_connected_graph(&mut r, n, 0.3, 1);
        let q = r.gen_range(0..=4);
        let g = with_non_unique(&mut r, &base, q);
        let opt = brute_min_partition(&g).map_err(e)?.value;
        let res = solve_min_partition_nonunique(&g).map_err(e)?;
        ensure(res.validate(&g).map_err(e)? && res.value == opt, || format!("nonunique #{i}: {} vs {opt}", res.value))?;
        let at = solve_partition_nonunique(&g, opt).map_err(e)?.is_some();
        let below = opt > 0 && solve_partition_nonunique(&g, opt - 1).map_err(e)?.is_some();
        ensure(at && !below, || format!("nonunique decision #{i} on {g:?}"))?;
    }
    for i in 0..300 {
        let n = r.gen_range(1..=10);
        let g = random_connected_graph(&mut r, n, 0.25, 2);
        let res = solve_two_coloured(&g, Problem::Partition).map_err(e)?;
        let opt = brute_min_partition(&g).map_err(e)?.value;
        ensure(res.validate(&g).map_err(e)? && res.value == opt, || format!("two-coloured #{i} on {g:?}"))?;
    }
    for i in 0..300 {
        let steps = r.gen_range(0..=8);
        let colours = r.gen_range(2..=5);
        let g = random_series_parallel(&mut r, steps, colours);
        let expected = brute_min_partition(&g).map_err(e)?.value <= 2;
        let got = solve_2cp_treewidth2(&g).map_err(e)?;
        ensure(got.is_some() == expected, || format!("tw2 #{i} on {g:?}"))?;
        if let Some(p) = got {
            ensure(p.len() <= 2 && is_colourful_partition(&g, &p).map_err(e)?, || format!("tw2 witness #{i}"))?;
        }
    }
    Ok(())
}

fn components_equivalence() -> Outcome {
    let mut r = rng(1003);
    for i in 0..300 {
        let n = r.gen_range(1..=10);
        let k = r.gen_range(1..=3);
        let colours = r.gen_range(1..=5);
        let (g, td) = random_partial_ktree(&mut r, n, k, 0.6, colours);
        let res = dp_components(&g, &to_nice(&td).map_err(e)?).map_err(e)?;
        let opt = brute_min_deletions(&g).map_err(e)?.value;
        ensure(res.validate(&g).map_err(e)? && res.value == opt, || format!("#{i}: {} vs {opt} on {g:?}", res.value))?;
    }
    Ok(())
}

fn tree_equivalence() -> Outcome {
    let mut r = rng(1004);
    for n in 1..=8 {
        for edges in all_unlabeled_trees(n) {
            for _ in 0..20 {
                let palette = r.gen_range(1..=n as u32);
                let colours = random_colours(&mut r, n, palette);
                let g = ColouredGraph::new(&colours, &edges).map_err(e)?;
                let parts = brute_min_partition(&g).map_err(e)?.value;
                let dels = brute_min_deletions(&g).map_err(e)?.value;
                ensure(parts == dels + 1, || format!("{parts} parts, {dels} deletions on {g:?}"))?;
            }
        }
    }
    Ok(())
}

fn reduction_round_trips() -> Outcome {
    let mut r = rng(1005);
    for i in 0..50 {
        let vars = r.gen_range(3..=4);
        let clauses = r.gen_range(1..=4);
        let f = random_3cnf(&mut r, vars, clauses, false);
        let (g, k) = reduce_3sat_split(&f).map_err(e)?;
        let found = search_partition_at_most(&g, k, BUDGET).map_err(e)?;
        ensure(found.is_some() == brute_cnf_sat(&f).is_some(), || format!("split #{i}: {f:?}"))?;
    }
    for i in 0..30 {
        let clauses = r.gen_range(1..=3);
        let f = random_3cnf(&mut r, 3, clauses, true);
        let red = reduce_nae3sat_pathwidth(&f).map_err(e)?;
        red.path_decomposition.check(&red.graph).map_err(e)?;
        ensure(red.path_decomposition.width() == 3, || format!("nae #{i}: width {}", red.path_decomposition.width()))?;
        let found = search_partition_at_most(&red.graph, red.k, BUDGET).map_err(e)?;
        ensure(found.is_some() == brute_nae_sat(&f).is_some(), || format!("nae #{i}: {f:?}"))?;
    }
    for i in 0..30 {
        let n = r.gen_range(2..=7);
        let tree = random_binary_tree(&mut r, n);
        let pairs: Vec<(usize, usize)> = (0..r.gen_range(1..=4))
            .map(|_| {
                let a = r.gen_range(0..n);
                (a, (a + r.gen_range(1..n)) % n)
            })
            .collect();
        let mc = brute_min_multicut(n, &tree, &pairs).map_err(e)?;
        let inst = MulticutInstance { n, tree, pairs };
        for rr in 0..=3 {
            for hardened in [false, true] {
                let (g, k) = reduce_multicut_tree(&inst, rr, hardened).map_err(e)?;
                let (opt, _) = dp_optima(&g, 2)?;
                ensure((opt <= k) == (mc <= rr), || format!("multicut #{i}, r = {rr}, hardened = {hardened}"))?;
            }
        }
    }
    let red = reduce_vc(&k4_instance(), 3).map_err(e)?;
    let p = red.cover_witness(&[0, 1, 2]).map_err(e)?;
    ensure(red.k == 15 && p.len() == 15, || format!("K4 witness has {} blocks", p.len()))?;
    ensure(is_colourful_partition(&red.graph, &p).map_err(e)?, || "K4 witness invalid".into())
}

fn deletion_witness_size() -> Outcome {
    let red = reduce_vc(&k4_instance(), 3).map_err(e)?;
    let f = red.deletion_witness();
    ensure(f.len() == 6 + 3 * 4, || format!("{} deletions", f.len()))?;
    ensure(is_colourful_graph(&red.graph.without_edges(&f).map_err(e)?), || "not colourful".into())
}

fn kernel_bound_check() -> Outcome {
    let mut r = rng(1007);
    for i in 0..100 {
        let n = r.gen_range(1..=12);
        let s = r.gen_range(1..=3).min(n);
        let colours = r.gen_range(1..=6);
        let density = r.gen_range(0.2..0.9);
        let g = random_planted_cover(&mut r, n, s, density, colours);
        let (res, rep) = solve_partition_vc_report(&g, 64).map_err(e)?;
        let cover = rep.cover.len();
        ensure(cover <= 2 * s, || format!("#{i}: greedy cover {cover} for planted {s}"))?;
        ensure(rep.kernel_vertices as u128 <= kernel_bound(cover), || format!("#{i}: kernel {}", rep.kernel_vertices))?;
        let opt = brute_min_partition(&g).map_err(e)?.value;
        ensure(res.validate(&g).map_err(e)? && res.value == opt, || format!("#{i}: {} vs {opt}", res.value))?;
    }
    Ok(())
}

fn engines() -> Outcome {
    let mut r = rng(1008);
    for i in 0..1000 {
        let n = r.gen_range(1..=10);
        let mut f = TwoSatFormula::new(n);
        for _ in 0..r.gen_range(0..=20) {
            f.add_clause(Lit::new(r.gen_range(0..n), r.gen_bool(0.5)), Lit::new(r.gen_range(0..n), r.gen_bool(0.5)));
        }
        let fast = two_sat_solve(&f);
        ensure(fast.is_some() == brute_sat(&f).is_some(), || format!("2-SAT #{i}"))?;
        if let Some(a) = fast {
            ensure(f.is_satisfied_by(&a), || format!("2-SAT assignment #{i}"))?;
        }
    }
    for i in 0..200 {
        let (left, right) = (r.gen_range(0..=8), r.gen_range(0..=8));
        let edges: Vec<(usize, usize)> =
            (0..left).flat_map(|a| (0..right).map(move |b| (a, b))).filter(|_| r.gen_bool(0.3)).collect();
        let m = hopcroft_karp(left, right, &edges);
        ensure(m.size() == brute_max_matching(left, right, &edges), || format!("matching #{i}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("example1 family optima for k = 2..6", example_one),
        ("partition solvers agree with the oracle", partition_equivalence),
        ("components DP agrees with the oracle", components_equivalence),
        ("trees: parts = deletions + 1", tree_equivalence),
        ("reduction round trips", reduction_round_trips),
        ("K4 deletion witness of size 18", deletion_witness_size),
        ("vertex cover kernel bound", kernel_bound_check),
        ("2-SAT and matching engines", engines),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: pass ({name}, {secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: fail ({name}, {secs:.2}s): {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
