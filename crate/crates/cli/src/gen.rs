//! `gen`: writes instance files for the reduction families.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Subcommand;
use colourful::decomposition::serialize_td;
use colourful::gadgets::{
    gen_example1, k4_instance, parse_dimacs, prism_instance, reduce_3sat_split, reduce_multicut_tree,
    reduce_nae3sat_pathwidth, reduce_vc, CubicInstance, MulticutInstance,
};
use colourful::io::{parse_instance, serialize_instance};
use colourful::random::{random_connected_graph, rng};
use colourful::ColouredGraph;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Two-coloured hub graph whose best partition has two blocks.
    Example1 {
        #[arg(long)]
        k: usize,
    },
    /// Split graph from a 3-CNF formula (DIMACS).
    #[command(name = "split-3sat")]
    Split3Sat {
        #[arg(long)]
        formula: PathBuf,
    },
    /// Bipartite width-3 graph from a positive 3-CNF formula; also writes `<out>.td`.
    NaePathwidth {
        #[arg(long)]
        formula: PathBuf,
    },
    /// Tree from a multicut instance on a tree of maximum degree 3.
    Multicut {
        /// Tree as an instance file; colours are ignored.
        #[arg(long)]
        tree: PathBuf,
        /// One pair `u v` per line.
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        hardened: bool,
    },
    /// Three-coloured graph from vertex cover on a cubic graph.
    Vc {
        /// `k4`, `prism`, or a file with `cubic <n> <m>` then `e <u> <v> <colour>` lines.
        #[arg(long)]
        cubic: String,
        #[arg(long)]
        s: usize,
    },
    /// Random connected graph; the seed defaults to `CG_SEED`, then 0.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 3)]
        colours: u32,
        #[arg(long)]
        seed: Option<u64>,
    },
}

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn seed_from_env() -> u64 {
    std::env::var("CG_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let t: Vec<&str> = body.split_whitespace().collect();
        match t.as_slice() {
            [] => {}
            [u, v] => {
                let num = |s: &str| s.parse::<usize>().map_err(|_| CliError::Parse(format!("line {}: bad vertex `{s}`", i + 1)));
                pairs.push((num(u)?, num(v)?));
            }
            _ => return Err(CliError::Parse(format!("line {}: expected `u v`", i + 1))),
        }
    }
    Ok(pairs)
}

fn parse_cubic(text: &str) -> Result<CubicInstance, CliError> {
    let bad = |line: usize, what: &str| CliError::Parse(format!("line {line}: {what}"));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| CliError::Parse("empty cubic file".into()))?;
    let num = |s: &str, line: usize| s.parse::<usize>().map_err(|_| bad(line, "expected a number"));
    let n = match header.as_slice() {
        ["cubic", n, _] => num(n, hl)?,
        _ => return Err(bad(hl, "expected `cubic <n> <m>`")),
    };
    let (mut edges, mut colours) = (Vec::new(), Vec::new());
    for (ln, t) in lines {
        match t.as_slice() {
            ["e", u, v, c] => {
                edges.push((num(u, ln)?, num(v, ln)?));
                colours.push(u8::try_from(num(c, ln)?).map_err(|_| bad(ln, "colour out of range"))?);
            }
            _ => return Err(bad(ln, "expected `e <u> <v> <colour>`")),
        }
    }
    CubicInstance::new(n, edges, colours).map_err(|e| CliError::Parse(e.to_string()))
}

/// Writes the instance to `out` (plus a `.meta.jsonl` sidecar), or to stdout when `out` is absent.
pub fn run(family: &Family, out: Option<&Path>) -> Result<(), CliError> {
    let gadget = |e: colourful::gadgets::GadgetError| CliError::Parse(e.to_string());
    let (g, meta): (ColouredGraph, Value) = match family {
        Family::Example1 { k } => (gen_example1(*k).map_err(gadget)?, json!({"family": "example1", "k": 2, "param_k": k})),
        Family::Split3Sat { formula } => {
            let f = parse_dimacs(&read(formula)?).map_err(|e| CliError::Parse(e.to_string()))?;
            let (g, k) = reduce_3sat_split(&f).map_err(gadget)?;
            (g, json!({"family": "split-3sat", "source": formula, "k": k}))
        }
        Family::NaePathwidth { formula } => {
            let f = parse_dimacs(&read(formula)?).map_err(|e| CliError::Parse(e.to_string()))?;
            let r = reduce_nae3sat_pathwidth(&f).map_err(gadget)?;
            let out = out.ok_or_else(|| CliError::Usage("nae-pathwidth needs --out for the decomposition".into()))?;
            let td_path = with_suffix(out, ".td");
            write(&td_path, &serialize_td(&r.path_decomposition))?;
            (r.graph, json!({"family": "nae-pathwidth", "source": formula, "k": r.k, "td": td_path}))
        }
        Family::Multicut { tree, pairs, r, hardened } => {
            let t = parse_instance(&read(tree)?).map_err(|e| CliError::Parse(e.to_string()))?;
            let pairs = parse_pairs(&read(pairs)?)?;
            let inst = MulticutInstance { n: t.n(), tree: t.edges().to_vec(), pairs };
            let (g, k) = reduce_multicut_tree(&inst, *r, *hardened).map_err(gadget)?;
            (g, json!({"family": "multicut", "source": tree, "r": r, "hardened": hardened, "k": k}))
        }
        Family::Vc { cubic, s } => {
            let inst = match cubic.as_str() {
                "k4" => k4_instance(),
                "prism" => prism_instance(),
                path => parse_cubic(&read(Path::new(path))?)?,
            };
            let r = reduce_vc(&inst, *s).map_err(gadget)?;
            (r.graph, json!({"family": "vc", "source": cubic, "s": s, "k": r.k}))
        }
        Family::Random { n, p, colours, seed } => {
            let seed = seed.unwrap_or_else(seed_from_env);
            let g = random_connected_graph(&mut rng(seed), *n, *p, *colours);
            (g, json!({"family": "random", "n": n, "p": p, "colours": colours, "seed": seed}))
        }
    };
    let Some(out) = out else {
        print!("{}", serialize_instance(&g));
        return Ok(());
    };
    write(out, &serialize_instance(&g))?;
    let mut meta = meta;
    meta["vertices"] = json!(g.n());
    meta["edges"] = json!(g.m());
    write(&with_suffix(out, ".meta.jsonl"), &format!("{meta}\n"))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_file() {
        let inst = parse_cubic("cubic 4 6\ne 0 1 1\ne 2 3 1\ne 0 2 2\ne 1 3 2\ne 0 3 3\ne 1 2 3\n").unwrap();
        assert_eq!(inst, k4_instance());
        assert!(parse_cubic("cubic 2 1\ne 0 1 1\n").is_err());
    }

    #[test]
    fn pairs_file() {
        assert_eq!(parse_pairs("0 2\n# c\n1 3\n").unwrap(), vec![(0, 2), (1, 3)]);
        assert!(parse_pairs("0 1 2\n").is_err());
    }
}
