use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use colourful::io::{parse_solution, serialize_instance};
use colourful::oracle::brute_min_partition;
use colourful::random::{random_series_parallel, rng};
use tempfile::TempDir;

fn colourful(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colourful")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn example1(dir: &TempDir, k: usize) -> PathBuf {
    let path = dir.path().join(format!("example1_k{k}.cg"));
    let o = colourful(&["gen", "example1", "--k", &k.to_string(), "--out", p(&path)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn example1_k5_optima() {
    let dir = TempDir::new().unwrap();
    let inst = example1(&dir, 5);
    let o = colourful(&["solve", "--problem", "partition", p(&inst)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("partition 2\n"));
    let o = colourful(&["solve", "--problem", "components", p(&inst)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("deletions 10\n"));
}

#[test]
fn solve_then_check_round_trip() {
    let dir = TempDir::new().unwrap();
    for k in 2..=5 {
        let inst = example1(&dir, k);
        for problem in ["partition", "components"] {
            let sol = dir.path().join(format!("k{k}_{problem}.sol"));
            let o = colourful(&["solve", "--problem", problem, p(&inst), "--out", p(&sol)]);
            assert!(o.status.success());
            let o = colourful(&["check", p(&inst), p(&sol)]);
            assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        }
    }
}

#[test]
fn infeasible_k_is_not_an_error() {
    let dir = TempDir::new().unwrap();
    let inst = example1(&dir, 3);
    let o = colourful(&["solve", "--problem", "partition", "--k", "1", p(&inst)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("infeasible"));
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("path.cg");
    fs::write(&inst, "cgraph 3 2\nv 0 1\nv 1 2\nv 2 3\ne 0 1\ne 1 2\n").unwrap();
    let cases = [
        ("partition 2\nblock 0 1\nblock 2\n", 0),
        ("partition 2\nblock 0 2\nblock 1\n", 1),
        ("partition 3\nblock 0 1\nblock 2\n", 1),
        ("partition 1\nblock 0 1\n", 1),
        ("deletions 0\n", 0),
        ("deletions 1\ne 0 2\n", 1),
        ("partition x\n", 2),
    ];
    for (i, (text, code)) in cases.iter().enumerate() {
        let sol = dir.path().join(format!("{i}.sol"));
        fs::write(&sol, text).unwrap();
        let o = colourful(&["check", p(&inst), p(&sol)]);
        assert_eq!(o.status.code(), Some(*code), "case {i}: {text:?}");
        if *code == 1 {
            assert!(!o.stderr.is_empty());
        }
    }
    let sol = dir.path().join("0.sol");
    assert_eq!(colourful(&["check", "--k", "1", p(&inst), p(&sol)]).status.code(), Some(1));
}

#[test]
fn parse_error_and_refusal_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.cg");
    fs::write(&bad, "cgraph 2 1\nv 0 1\n").unwrap();
    assert_eq!(colourful(&["solve", "--problem", "partition", p(&bad)]).status.code(), Some(2));
    let inst = example1(&dir, 6);
    let o = colourful(&["solve", "--problem", "components", p(&inst)]);
    assert_eq!(o.status.code(), Some(3));
    let o = colourful(&["solve", "--problem", "components", "--max-colours", "8", p(&inst)]);
    assert!(stdout(&o).starts_with("deletions 12\n"));
}

#[test]
fn tw2_two_sat_matches_oracle() {
    let dir = TempDir::new().unwrap();
    let mut r = rng(7);
    for i in 0..40 {
        let g = random_series_parallel(&mut r, 2 + i % 7, 3 + (i % 3) as u32);
        let inst = dir.path().join(format!("sp{i}.cg"));
        fs::write(&inst, serialize_instance(&g)).unwrap();
        let o = colourful(&["solve", "--problem", "partition", "--k", "2", "--algo", "tw2-2sat", p(&inst)]);
        assert_eq!(o.status.code(), Some(0));
        let feasible = brute_min_partition(&g).unwrap().value <= 2;
        let out = stdout(&o);
        assert_eq!(!out.starts_with("infeasible"), feasible, "instance {i}: {out}");
        if feasible {
            assert!(parse_solution(&out).unwrap().claimed <= 2);
        }
    }
}

#[test]
fn gen_families() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let cnf = d.join("f.cnf");
    fs::write(&cnf, "p cnf 3 2\n1 2 3 0\n1 2 -3 0\n").unwrap();
    let pos = d.join("pos.cnf");
    fs::write(&pos, "p cnf 3 1\n1 2 3 0\n").unwrap();
    let tree = d.join("t.cg");
    fs::write(&tree, "cgraph 4 3\nv 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 1\ne 1 2\ne 2 3\n").unwrap();
    let pairs = d.join("p.txt");
    fs::write(&pairs, "0 3\n1 2\n").unwrap();
    let runs: Vec<(&str, Vec<&str>)> = vec![
        ("split", vec!["split-3sat", "--formula", p(&cnf)]),
        ("nae", vec!["nae-pathwidth", "--formula", p(&pos)]),
        ("mc", vec!["multicut", "--tree", p(&tree), "--pairs", p(&pairs), "--r", "2", "--hardened"]),
        ("vc", vec!["vc", "--cubic", "k4", "--s", "3"]),
        ("rand", vec!["random", "--n", "7", "--seed", "3"]),
    ];
    for (name, args) in runs {
        let out = d.join(format!("{name}.cg"));
        let mut full = vec!["gen"];
        full.extend(args);
        full.extend(["--out", p(&out)]);
        let o = colourful(&full);
        assert!(o.status.success(), "{name}: {}", String::from_utf8_lossy(&o.stderr));
        colourful::io::parse_instance(&fs::read_to_string(&out).unwrap()).unwrap();
        let meta = fs::read_to_string(d.join(format!("{name}.cg.meta.jsonl"))).unwrap();
        let v: serde_json::Value = serde_json::from_str(meta.trim()).unwrap();
        assert!(v["family"].is_string() && v["vertices"].is_u64(), "{name}: {meta}");
    }
    let td = d.join("nae.cg.td");
    let o = colourful(&["td", p(&d.join("nae.cg")), "--check", p(&td)]);
    assert_eq!(stdout(&o), "ok width 3\n");
    let meta = fs::read_to_string(d.join("mc.cg.meta.jsonl")).unwrap();
    assert!(meta.contains("\"k\":6"));
}

#[test]
fn random_gen_honours_seed_env() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_colourful"))
            .args(["gen", "random", "--n", "9"])
            .env("CG_SEED", seed)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("11"), run("11"));
    assert_ne!(run("11"), run("12"));
}

#[test]
fn td_emits_valid_decomposition() {
    let dir = TempDir::new().unwrap();
    let inst = example1(&dir, 4);
    let td = dir.path().join("x.td");
    let o = colourful(&["td", p(&inst), "--out", p(&td)]);
    assert!(o.status.success());
    assert_eq!(stdout(&colourful(&["td", p(&inst), "--check", p(&td)])), "ok width 2\n");
    fs::write(&td, "td 1 1\nbag 0 0 1\n").unwrap();
    assert_eq!(colourful(&["td", p(&inst), "--check", p(&td)]).status.code(), Some(1));
}

#[test]
fn bench_oracle_vs_dp() {
    let dir = TempDir::new().unwrap();
    let mut manifest = String::new();
    for i in 0..50 {
        let name = format!("r{i}.cg");
        let n = (5 + i % 5).to_string();
        let seed = (100 + i).to_string();
        let o = colourful(&["gen", "random", "--n", &n, "--p", "0.35", "--colours", "4", "--seed", &seed, "--out", p(&dir.path().join(&name))]);
        assert!(o.status.success());
        let problem = if i % 2 == 0 { "partition" } else { "components" };
        manifest.push_str(&format!("{name} {problem} oracle,dp\n"));
    }
    let mpath = dir.path().join("suite.txt");
    fs::write(&mpath, manifest).unwrap();
    let o = colourful(&["bench", p(&mpath), "--jobs", "4", "--max-tw", "8"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "instance\tsolver\tproblem\toptimum\twall_ms\texplored\tstatus");
    let mut optima: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for line in lines {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 7);
        assert_eq!(cols[6], "ok", "{line}");
        optima.entry(cols[0]).or_default().push(cols[3]);
    }
    assert_eq!(optima.len(), 50);
    for (inst, vals) in optima {
        assert_eq!(vals.len(), 2);
        assert_eq!(vals[0], vals[1], "{inst}");
    }
}

#[test]
fn bench_records_failures_and_empty_suites() {
    let dir = TempDir::new().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "# nothing\n").unwrap();
    let o = colourful(&["bench", p(&empty)]);
    assert_eq!(stdout(&o), "instance\tsolver\tproblem\toptimum\twall_ms\texplored\tstatus\n");
    let inst = example1(&dir, 2);
    let suite = dir.path().join("suite.txt");
    fs::write(&suite, format!("missing.cg partition dp\n{} components vc,oracle\n", p(&inst))).unwrap();
    let o = colourful(&["bench", p(&suite)]);
    assert!(o.status.success());
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].contains("error:"));
    assert!(rows[1].contains("error:"));
    assert!(rows[2].ends_with("\tok") && rows[2].contains("\t4\t"));
}
