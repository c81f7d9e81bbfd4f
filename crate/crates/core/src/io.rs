//! Line-oriented text formats for instances and solutions.
//!
//! Instance:
//! ```text
//! cgraph <n> <m>
//! v <id> <colour>      (n lines)
//! e <u> <v>            (m lines)
//! ```
//! Solution: `partition <k>` followed by `block <ids...>` lines, or
//! `deletions <p>` followed by `e <u> <v>` lines. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{ColouredGraph, EdgeSet, GraphError, Partition, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Non-empty, comment-stripped lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub(crate) fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, ParseError> {
    tok.parse().map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

fn expect_tokens(tokens: &[&str], keyword: &str, count: usize, line: usize) -> Result<(), ParseError> {
    if tokens[0] != keyword {
        return Err(syntax(line, format!("expected `{keyword}`, found `{}`", tokens[0])));
    }
    if tokens.len() != count + 1 {
        return Err(syntax(line, format!("`{keyword}` takes {count} fields, found {}", tokens.len() - 1)));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<ColouredGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::Truncated("missing `cgraph` header".into()))?;
    expect_tokens(&header, "cgraph", 2, hl)?;
    let n: usize = parse_num(header[1], hl, "vertex count")?;
    let m: usize = parse_num(header[2], hl, "edge count")?;

    let mut colours: Vec<Option<u32>> = vec![None; n];
    for _ in 0..n {
        let (ln, t) = lines.next().ok_or_else(|| ParseError::Truncated(format!("expected {n} vertex lines")))?;
        expect_tokens(&t, "v", 2, ln)?;
        let id: usize = parse_num(t[1], ln, "vertex id")?;
        let colour: u32 = parse_num(t[2], ln, "colour")?;
        if id >= n {
            return Err(syntax(ln, format!("vertex {id} out of range 0..{n}")));
        }
        if colour == 0 {
            return Err(syntax(ln, "colours must be positive"));
        }
        if colours[id].replace(colour).is_some() {
            return Err(syntax(ln, format!("vertex {id} declared twice")));
        }
    }
    let colours: Vec<u32> = colours.into_iter().map(|c| c.expect("all n ids seen once")).collect();

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, t) = lines.next().ok_or_else(|| ParseError::Truncated(format!("expected {m} edge lines")))?;
        expect_tokens(&t, "e", 2, ln)?;
        let u: usize = parse_num(t[1], ln, "vertex id")?;
        let v: usize = parse_num(t[2], ln, "vertex id")?;
        if u >= n || v >= n {
            return Err(syntax(ln, format!("edge {u}-{v} has an endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(syntax(ln, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after the declared edges"));
    }
    Ok(ColouredGraph::new(&colours, &edges)?)
}

/// Canonical text: vertices by id, edges sorted lexicographically.
pub fn serialize_instance(g: &ColouredGraph) -> String {
    let mut out = format!("cgraph {} {}\n", g.n(), g.m());
    for v in 0..g.n() {
        let _ = writeln!(out, "v {v} {}", g.colour_label(v));
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

/// A solution file: the value it claims and the certificate it lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFile {
    pub claimed: usize,
    pub witness: Witness,
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::Truncated("empty solution".into()))?;
    if header.len() != 2 {
        return Err(syntax(hl, "expected `partition <k>` or `deletions <p>`"));
    }
    let claimed: usize = parse_num(header[1], hl, "solution value")?;
    match header[0] {
        "partition" => {
            let mut blocks = Vec::new();
            for (ln, t) in lines {
                if t[0] != "block" {
                    return Err(syntax(ln, format!("expected `block`, found `{}`", t[0])));
                }
                let block = t[1..].iter().map(|s| parse_num(s, ln, "vertex id")).collect::<Result<Vec<usize>, _>>()?;
                blocks.push(block);
            }
            Ok(SolutionFile { claimed, witness: Witness::Partition(Partition::new(blocks)?) })
        }
        "deletions" => {
            let mut edges = Vec::new();
            for (ln, t) in lines {
                expect_tokens(&t, "e", 2, ln)?;
                edges.push((parse_num(t[1], ln, "vertex id")?, parse_num(t[2], ln, "vertex id")?));
            }
            Ok(SolutionFile { claimed, witness: Witness::Deletions(EdgeSet::new(edges)) })
        }
        other => Err(syntax(hl, format!("unknown solution kind `{other}`"))),
    }
}

pub fn serialize_solution(w: &Witness) -> String {
    let mut out = String::new();
    match w {
        Witness::Partition(p) => {
            let _ = writeln!(out, "partition {}", p.len());
            for b in p.blocks() {
                let ids: Vec<String> = b.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "block {}", ids.join(" "));
            }
        }
        Witness::Deletions(f) => {
            let _ = writeln!(out, "deletions {}", f.len());
            for &(u, v) in f.iter() {
                let _ = writeln!(out, "e {u} {v}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only_is_empty_graph() {
        let g = parse_instance("cgraph 0 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
    }

    #[test]
    fn singleton_with_comment() {
        let g = parse_instance("# one vertex\ncgraph 1 0\nv 0 7  # colour seven\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.colour_label(0), 7);
    }

    #[test]
    fn canonical_output_sorts_edges() {
        let g = parse_instance("cgraph 3 2\nv 2 1\nv 0 3\nv 1 2\ne 2 1\ne 0 2\n").unwrap();
        assert_eq!(serialize_instance(&g), "cgraph 3 2\nv 0 3\nv 1 2\nv 2 1\ne 0 2\ne 1 2\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_instance("cgraph 2 1\nv 0 1\nv 1 1\ne 0 5\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 4, .. }), "{err}");
        let err = parse_instance("cgraph 2 0\nv 0 1\nv 0 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
        let err = parse_instance("cgraph 1 0\nv 0 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        assert!(matches!(parse_instance("cgraph 2 0\nv 0 1\n"), Err(ParseError::Truncated(_))));
        assert!(matches!(parse_instance("graph 1 0\n"), Err(ParseError::Syntax { line: 1, .. })));
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let err = parse_instance("cgraph 2 2\nv 0 1\nv 1 2\ne 0 1\ne 1 0\n").unwrap_err();
        assert_eq!(err, ParseError::Graph(GraphError::DuplicateEdge(0, 1)));
    }

    #[test]
    fn solution_round_trip() {
        let p = Partition::new(vec![vec![2, 0], vec![1]]).unwrap();
        let text = serialize_solution(&Witness::Partition(p.clone()));
        assert_eq!(text, "partition 2\nblock 0 2\nblock 1\n");
        assert_eq!(parse_solution(&text).unwrap(), SolutionFile { claimed: 2, witness: Witness::Partition(p) });

        let f = EdgeSet::new([(3, 1), (0, 2)]);
        let text = serialize_solution(&Witness::Deletions(f.clone()));
        assert_eq!(text, "deletions 2\ne 0 2\ne 1 3\n");
        assert_eq!(parse_solution(&text).unwrap().witness, Witness::Deletions(f));
    }
}
