// SPDX-License-Identifier: Apache-2.0

//! Line-oriented text formats. Vertices and edges are 1-based on disk and
//! 0-based in memory. Lines starting with `c` are comments everywhere.
//!
//! ```text
//! c a path on three vertices
//! p hce 3 2
//! e 2 1 2
//! e 2 2 3
//! t 1 1
//! l 2 middle
//! ```

use std::fmt::Write as _;

use hypercore::filtration::Filtration;
use hypercore::reductions::{CnfFormula, MinrepInstance, SetCoverInstance};
use hypercore::{CoreSet, Edge, Hypergraph, PropagationTrace, ThresholdMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

pub type ParseResult<T> = Result<T, ParseError>;

fn err<T>(line: usize, message: impl Into<String>) -> ParseResult<T> {
    Err(ParseError { line, message: message.into() })
}

/// Non-comment lines as (1-based line number, tag, remaining tokens, raw rest).
fn records(text: &str) -> impl Iterator<Item = (usize, &str, Vec<&str>, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        let mut parts = line.splitn(2, char::is_whitespace);
        let tag = parts.next().filter(|t| !t.is_empty())?;
        if tag == "c" || tag.starts_with('%') {
            return None;
        }
        let rest = parts.next().unwrap_or("").trim_start();
        Some((i + 1, tag, rest.split_whitespace().collect(), rest))
    })
}

fn number(line: usize, token: Option<&&str>, what: &str) -> ParseResult<usize> {
    match token {
        None => err(line, format!("missing {what}")),
        Some(t) => t.parse().or_else(|_| err(line, format!("{what} '{t}' is not a non-negative integer"))),
    }
}

fn one_based(line: usize, token: Option<&&str>, what: &str, bound: usize) -> ParseResult<usize> {
    let v = number(line, token, what)?;
    if v == 0 || v > bound {
        return err(line, format!("{what} {v} outside 1..={bound}"));
    }
    Ok(v - 1)
}

/// Counted list `k x1 .. xk` of 1-based ids below `bound`.
fn counted_list(line: usize, tokens: &[&str], what: &str, bound: usize) -> ParseResult<Vec<usize>> {
    let k = number(line, tokens.first(), "count")?;
    if tokens.len() != k + 1 {
        return err(line, format!("count says {k} entries, found {}", tokens.len().saturating_sub(1)));
    }
    tokens[1..].iter().map(|t| one_based(line, Some(t), what, bound)).collect()
}

fn expect_len(line: usize, tokens: &[&str], n: usize, shape: &str) -> ParseResult<()> {
    if tokens.len() != n {
        return err(line, format!("expected '{shape}'"));
    }
    Ok(())
}

/// A hypergraph file: edges, optional thresholds and labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HceFile {
    pub hypergraph: Hypergraph,
    /// Present when the file has `t` lines; edges without one keep `|e| - 1`.
    pub thresholds: Option<ThresholdMap>,
}

pub fn parse_hce(text: &str) -> ParseResult<HceFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut t_lines: Vec<(usize, usize, usize)> = Vec::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut last_line = 0;
    for (line, tag, tokens, rest) in records(text) {
        last_line = line;
        if tag == "p" {
            if header.is_some() {
                return err(line, "second 'p' line");
            }
            if tokens.first() != Some(&"hce") || tokens.len() != 3 {
                return err(line, "expected 'p hce <n> <m>'");
            }
            let n = number(line, tokens.get(1), "vertex count")?;
            let m = number(line, tokens.get(2), "edge count")?;
            labels = vec![None; n];
            header = Some((n, m));
            continue;
        }
        let Some((n, m)) = header else {
            return err(line, "'p hce' header must come first");
        };
        match tag {
            "e" => {
                if edges.len() == m {
                    return err(line, format!("more than {m} edges"));
                }
                let vs = counted_list(line, &tokens, "vertex", n)?;
                let e = Edge::new(vs).or_else(|_| err(line, "edge is empty or repeats a vertex"))?;
                edges.push(e);
            }
            "t" => {
                expect_len(line, &tokens, 2, "t <edge> <threshold>")?;
                let e = one_based(line, tokens.first(), "edge", m)?;
                let t = number(line, tokens.get(1), "threshold")?;
                t_lines.push((line, e, t));
            }
            "l" => {
                let v = one_based(line, tokens.first(), "vertex", n)?;
                let label = rest[tokens[0].len()..].trim();
                if label.is_empty() {
                    return err(line, "empty label");
                }
                labels[v] = Some(label.to_string());
            }
            other => return err(line, format!("unknown line type '{other}'")),
        }
    }
    let Some((n, m)) = header else {
        return err(last_line.max(1), "missing 'p hce' header");
    };
    if edges.len() != m {
        return err(last_line.max(1), format!("header promises {m} edges, found {}", edges.len()));
    }
    let hypergraph = Hypergraph::new(n, edges)
        .and_then(|h| h.with_labels(labels))
        .or_else(|e| err(last_line, e.to_string()))?;
    let thresholds = if t_lines.is_empty() {
        None
    } else {
        let mut t: Vec<usize> = hypergraph.edges().iter().map(|e| e.len() - 1).collect();
        for &(_, e, value) in &t_lines {
            t[e] = value;
        }
        match ThresholdMap::new(&hypergraph, t) {
            Ok(map) => Some(map),
            Err(hypercore::Error::InvalidThreshold { edge, threshold, size }) => {
                let line = t_lines.iter().rev().find(|x| x.1 == edge).map_or(last_line, |x| x.0);
                return err(line, format!("threshold {threshold} invalid for edge {} of size {size}", edge + 1));
            }
            Err(e) => return err(last_line, e.to_string()),
        }
    };
    Ok(HceFile { hypergraph, thresholds })
}

pub fn write_hce(h: &Hypergraph, thresholds: Option<&ThresholdMap>) -> String {
    let mut out = String::new();
    writeln!(out, "p hce {} {}", h.n(), h.m()).unwrap();
    for e in h.edges() {
        write!(out, "e {}", e.len()).unwrap();
        for &v in e.vertices() {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    if let Some(t) = thresholds {
        for (i, x) in t.as_slice().iter().enumerate() {
            writeln!(out, "t {} {}", i + 1, x).unwrap();
        }
    }
    for (v, label) in h.labels().iter().enumerate() {
        if let Some(label) = label {
            writeln!(out, "l {} {}", v + 1, label).unwrap();
        }
    }
    out
}

/// Reads the single `s k v..` line; other record lines (`radius`, `layer`,
/// ...) are skipped so command output can be fed back in.
pub fn parse_vertex_set(text: &str, n: usize) -> ParseResult<CoreSet> {
    let mut found: Option<CoreSet> = None;
    for (line, tag, tokens, _) in records(text) {
        if tag != "s" {
            continue;
        }
        if found.is_some() {
            return err(line, "second 's' line");
        }
        let vs = counted_list(line, &tokens, "vertex", n)?;
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return err(line, "vertex listed twice");
        }
        found = Some(CoreSet::new(vs));
    }
    found.ok_or(ParseError { line: text.lines().count().max(1), message: "missing 's' line".into() })
}

pub fn write_vertex_set(set: &CoreSet) -> String {
    let mut out = format!("s {}", set.len());
    for &v in set.vertices() {
        write!(out, " {}", v + 1).unwrap();
    }
    out.push('\n');
    out
}

fn join_one_based(items: &[usize]) -> String {
    items.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn tagged(tag: &str, items: &[usize]) -> String {
    if items.is_empty() {
        format!("{tag}\n")
    } else {
        format!("{tag} {}\n", join_one_based(items))
    }
}

pub fn parse_filtration(text: &str, h: &Hypergraph) -> ParseResult<Filtration> {
    let mut foundation: Option<Vec<usize>> = None;
    let mut edge_order = Vec::new();
    let mut added_vertex = Vec::new();
    for (line, tag, tokens, _) in records(text) {
        match tag {
            "f" => {
                if foundation.is_some() {
                    return err(line, "second 'f' line");
                }
                foundation = Some(counted_list(line, &tokens, "vertex", h.n())?);
            }
            "o" => {
                if foundation.is_none() {
                    return err(line, "'f' line must come first");
                }
                if tokens.is_empty() || tokens.len() > 2 {
                    return err(line, "expected 'o <edge> [<added vertex>]'");
                }
                edge_order.push(one_based(line, tokens.first(), "edge", h.m())?);
                added_vertex.push(match tokens.get(1) {
                    Some(t) => Some(one_based(line, Some(t), "vertex", h.n())?),
                    None => None,
                });
            }
            "radius" => {}
            other => return err(line, format!("unknown line type '{other}'")),
        }
    }
    let foundation = foundation.ok_or(ParseError { line: 1, message: "missing 'f' line".into() })?;
    Ok(Filtration { foundation, edge_order, added_vertex })
}

pub fn write_filtration(f: &Filtration) -> String {
    let mut out = format!("f {}", f.foundation.len());
    for &v in &f.foundation {
        write!(out, " {}", v + 1).unwrap();
    }
    out.push('\n');
    for (e, added) in f.edge_order.iter().zip(&f.added_vertex) {
        match added {
            Some(v) => writeln!(out, "o {} {}", e + 1, v + 1).unwrap(),
            None => writeln!(out, "o {}", e + 1).unwrap(),
        }
    }
    out
}

/// What `check-core` and `radius` print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    pub is_core: bool,
    pub radius: Option<usize>,
    pub initially_covered: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
    /// `(vertex, layer)` for every reached vertex, layer 0 for the core.
    pub assimilated: Vec<(usize, usize)>,
    pub unreached: Vec<usize>,
    pub uncovered: Vec<usize>,
}

impl TraceReport {
    pub fn from_trace(trace: &PropagationTrace) -> TraceReport {
        let assimilated = trace
            .assimilated_at
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.map(|l| (v, l)))
            .collect();
        let unreached = (0..trace.assimilated_at.len()).filter(|&v| trace.assimilated_at[v].is_none()).collect();
        let uncovered = (0..trace.edge_layer.len()).filter(|&e| trace.edge_layer[e].is_none()).collect();
        TraceReport {
            is_core: trace.verdict,
            radius: trace.radius(),
            initially_covered: trace.initially_covered.clone(),
            layers: trace.layers.clone(),
            assimilated,
            unreached,
            uncovered,
        }
    }
}

pub fn write_trace_report(r: &TraceReport) -> String {
    let mut out = format!("core {}\n", if r.is_core { "yes" } else { "no" });
    if let Some(radius) = r.radius {
        writeln!(out, "radius {radius}").unwrap();
    }
    if !r.initially_covered.is_empty() {
        out.push_str(&tagged("initial", &r.initially_covered));
    }
    for (i, layer) in r.layers.iter().enumerate() {
        writeln!(out, "layer {} {}", i + 1, join_one_based(layer)).unwrap();
    }
    for &(v, l) in &r.assimilated {
        writeln!(out, "a {} {}", v + 1, l).unwrap();
    }
    if !r.is_core {
        out.push_str(&tagged("unreached", &r.unreached));
        out.push_str(&tagged("uncovered", &r.uncovered));
    }
    out
}

pub fn parse_trace_report(text: &str) -> ParseResult<TraceReport> {
    let mut r = TraceReport {
        is_core: false,
        radius: None,
        initially_covered: vec![],
        layers: vec![],
        assimilated: vec![],
        unreached: vec![],
        uncovered: vec![],
    };
    let ids = |line: usize, tokens: &[&str]| -> ParseResult<Vec<usize>> {
        tokens.iter().map(|t| one_based(line, Some(t), "index", usize::MAX)).collect()
    };
    let mut saw_verdict = false;
    for (line, tag, tokens, _) in records(text) {
        match tag {
            "core" => {
                r.is_core = match tokens.as_slice() {
                    ["yes"] => true,
                    ["no"] => false,
                    _ => return err(line, "expected 'core yes' or 'core no'"),
                };
                saw_verdict = true;
            }
            "radius" => r.radius = Some(number(line, tokens.first(), "radius")?),
            "initial" => r.initially_covered = ids(line, &tokens)?,
            "layer" => {
                let i = number(line, tokens.first(), "layer")?;
                if i != r.layers.len() + 1 {
                    return err(line, "layers out of order");
                }
                r.layers.push(ids(line, &tokens[1..])?);
            }
            "a" => {
                expect_len(line, &tokens, 2, "a <vertex> <layer>")?;
                let v = one_based(line, tokens.first(), "vertex", usize::MAX)?;
                r.assimilated.push((v, number(line, tokens.get(1), "layer")?));
            }
            "unreached" => r.unreached = ids(line, &tokens)?,
            "uncovered" => r.uncovered = ids(line, &tokens)?,
            other => return err(line, format!("unknown line type '{other}'")),
        }
    }
    if !saw_verdict {
        return err(1, "missing 'core' line");
    }
    Ok(r)
}

pub fn parse_setcover(text: &str) -> ParseResult<SetCoverInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut sets = Vec::new();
    let mut last_line = 1;
    for (line, tag, tokens, _) in records(text) {
        last_line = line;
        match (tag, header) {
            ("p", None) => {
                if tokens.len() != 3 || tokens[0] != "sc" {
                    return err(line, "expected 'p sc <|U|> <|S|>'");
                }
                header = Some((number(line, tokens.get(1), "universe size")?, number(line, tokens.get(2), "set count")?));
            }
            ("p", Some(_)) => return err(line, "second 'p' line"),
            ("s", Some((u, count))) => {
                if sets.len() == count {
                    return err(line, format!("more than {count} sets"));
                }
                sets.push(counted_list(line, &tokens, "element", u)?);
            }
            ("s", None) => return err(line, "'p sc' header must come first"),
            (other, _) => return err(line, format!("unknown line type '{other}'")),
        }
    }
    let Some((u, count)) = header else {
        return err(last_line, "missing 'p sc' header");
    };
    if sets.len() != count {
        return err(last_line, format!("header promises {count} sets, found {}", sets.len()));
    }
    SetCoverInstance::new(u, sets).or_else(|e| err(last_line, e.to_string()))
}

pub fn write_setcover(inst: &SetCoverInstance) -> String {
    let mut out = format!("p sc {} {}\n", inst.universe_size(), inst.sets().len());
    for s in inst.sets() {
        writeln!(out, "s {} {}", s.len(), join_one_based(s)).unwrap();
    }
    out.replace(" \n", "\n")
}

/// `p minrep <|A|> <|B|> <qA> <qB> <edges>`, then `a <v> <group>` per
/// `A`-vertex, `b <v> <group>` per `B`-vertex and `e <a> <b>` per edge.
pub fn parse_minrep(text: &str) -> ParseResult<MinrepInstance> {
    let mut header: Option<[usize; 5]> = None;
    let (mut a_groups, mut b_groups): (Vec<Option<usize>>, Vec<Option<usize>>) = (vec![], vec![]);
    let mut edges = Vec::new();
    let mut last_line = 1;
    for (line, tag, tokens, _) in records(text) {
        last_line = line;
        if tag == "p" {
            if header.is_some() {
                return err(line, "second 'p' line");
            }
            if tokens.len() != 6 || tokens[0] != "minrep" {
                return err(line, "expected 'p minrep <|A|> <|B|> <qA> <qB> <edges>'");
            }
            let mut h = [0; 5];
            for (i, slot) in h.iter_mut().enumerate() {
                *slot = number(line, tokens.get(i + 1), "header field")?;
            }
            a_groups = vec![None; h[0]];
            b_groups = vec![None; h[1]];
            header = Some(h);
            continue;
        }
        let Some([na, nb, qa, qb, ne]) = header else {
            return err(line, "'p minrep' header must come first");
        };
        match tag {
            "a" | "b" => {
                expect_len(line, &tokens, 2, "a|b <vertex> <group>")?;
                let (side, n, q) = if tag == "a" { (&mut a_groups, na, qa) } else { (&mut b_groups, nb, qb) };
                let v = one_based(line, tokens.first(), "vertex", n)?;
                let g = one_based(line, tokens.get(1), "group", q)?;
                if side[v].replace(g).is_some() {
                    return err(line, "vertex assigned twice");
                }
            }
            "e" => {
                expect_len(line, &tokens, 2, "e <a> <b>")?;
                if edges.len() == ne {
                    return err(line, format!("more than {ne} edges"));
                }
                edges.push((one_based(line, tokens.first(), "A-vertex", na)?, one_based(line, tokens.get(1), "B-vertex", nb)?));
            }
            other => return err(line, format!("unknown line type '{other}'")),
        }
    }
    let Some([_, _, qa, qb, ne]) = header else {
        return err(last_line, "missing 'p minrep' header");
    };
    if edges.len() != ne {
        return err(last_line, format!("header promises {ne} edges, found {}", edges.len()));
    }
    let collect = |side: Vec<Option<usize>>| side.into_iter().collect::<Option<Vec<usize>>>();
    let (Some(a), Some(b)) = (collect(a_groups), collect(b_groups)) else {
        return err(last_line, "every vertex needs a group");
    };
    MinrepInstance::new(qa, qb, a, b, edges).or_else(|e| err(last_line, e.to_string()))
}

pub fn write_minrep(inst: &MinrepInstance) -> String {
    let mut out = format!(
        "p minrep {} {} {} {} {}\n",
        inst.a_count(),
        inst.b_count(),
        inst.q_a(),
        inst.q_b(),
        inst.edges().len()
    );
    for (v, g) in inst.a_groups().iter().enumerate() {
        writeln!(out, "a {} {}", v + 1, g + 1).unwrap();
    }
    for (v, g) in inst.b_groups().iter().enumerate() {
        writeln!(out, "b {} {}", v + 1, g + 1).unwrap();
    }
    for &(a, b) in inst.edges() {
        writeln!(out, "e {} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// DIMACS CNF restricted to clauses of three distinct literals.
pub fn parse_cnf(text: &str) -> ParseResult<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[i32; 3]> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 1;
    for (line, tag, tokens, _) in records(text) {
        last_line = line;
        if tag == "p" {
            if header.is_some() || tokens.len() != 3 || tokens[0] != "cnf" {
                return err(line, "expected a single 'p cnf <vars> <clauses>'");
            }
            header = Some((number(line, tokens.get(1), "variable count")?, number(line, tokens.get(2), "clause count")?));
            continue;
        }
        let Some((vars, _)) = header else {
            return err(line, "'p cnf' header must come first");
        };
        for t in std::iter::once(tag).chain(tokens) {
            let lit: i32 = t.parse().or_else(|_| err(line, format!("'{t}' is not a literal")))?;
            if lit == 0 {
                let Ok(c) = <[i32; 3]>::try_from(current.as_slice()) else {
                    return err(line, format!("clause {} has {} literals, expected 3", clauses.len() + 1, current.len()));
                };
                clauses.push(c);
                current.clear();
            } else if lit.unsigned_abs() as usize > vars {
                return err(line, format!("literal {lit} exceeds {vars} variables"));
            } else {
                current.push(lit);
            }
        }
    }
    let Some((vars, count)) = header else {
        return err(last_line, "missing 'p cnf' header");
    };
    if !current.is_empty() {
        return err(last_line, "last clause is not terminated by 0");
    }
    if clauses.len() != count {
        return err(last_line, format!("header promises {count} clauses, found {}", clauses.len()));
    }
    CnfFormula::new(vars, clauses).map_err(|e| match e {
        hypercore::Error::MalformedClause { clause } => {
            ParseError { line: last_line, message: format!("clause {} must have three distinct literals", clause + 1) }
        }
        other => ParseError { line: last_line, message: other.to_string() },
    })
}

pub fn write_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for c in f.clauses() {
        writeln!(out, "{} {} {} 0", c[0], c[1], c[2]).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PATH: &str = "c path\np hce 3 2\ne 2 1 2\ne 2 2 3\nl 2 the middle\n";

    #[test]
    fn hce_round_trip() {
        let f = parse_hce(PATH).unwrap();
        assert_eq!(f.hypergraph.n(), 3);
        assert_eq!(f.hypergraph.edge(1).vertices(), &[1, 2]);
        assert_eq!(f.hypergraph.label(1), Some("the middle"));
        assert!(f.thresholds.is_none());
        let text = write_hce(&f.hypergraph, None);
        assert_eq!(parse_hce(&text).unwrap(), f);
    }

    #[test]
    fn hce_thresholds() {
        let f = parse_hce("p hce 3 1\ne 3 1 2 3\nt 1 1\n").unwrap();
        assert_eq!(f.thresholds.unwrap().as_slice(), &[1]);
        let e = parse_hce("p hce 3 1\ne 3 1 2 3\nt 1 3\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn hce_errors_carry_line_numbers() {
        let cases = [
            ("e 2 1 2\n", 1),
            ("p hce 3 1\ne 2 1 4\n", 2),
            ("p hce 3 1\ne 3 1 2\n", 2),
            ("p hce 3 1\ne 2 1 1\n", 2),
            ("p hce 3 2\ne 2 1 2\n", 2),
            ("p hce 3 1\nx 1\n", 2),
            ("p hce 3 0\nl 4 far\n", 2),
            ("p hce 2 0\np hce 2 0\n", 2),
        ];
        for (text, line) in cases {
            assert_eq!(parse_hce(text).unwrap_err().line, line, "{text:?}");
        }
    }

    #[test]
    fn vertex_sets() {
        let s = parse_vertex_set("c core\ns 2 3 1\nradius 4\n", 3).unwrap();
        assert_eq!(s.vertices(), &[0, 2]);
        assert_eq!(write_vertex_set(&s), "s 2 1 3\n");
        assert_eq!(write_vertex_set(&CoreSet::empty()), "s 0\n");
        assert!(parse_vertex_set("s 1 4\n", 3).is_err());
        assert!(parse_vertex_set("s 2 1 1\n", 3).is_err());
        assert!(parse_vertex_set("radius 1\n", 3).is_err());
    }

    #[test]
    fn filtration_round_trip() {
        let h = parse_hce(PATH).unwrap().hypergraph;
        let f = Filtration { foundation: vec![1], edge_order: vec![0, 1], added_vertex: vec![Some(0), Some(2)] };
        let text = write_filtration(&f);
        assert_eq!(text, "f 1 2\no 1 1\no 2 3\n");
        assert_eq!(parse_filtration(&text, &h).unwrap(), f);
        assert!(parse_filtration("o 1\n", &h).is_err());
    }

    #[test]
    fn trace_report_round_trip() {
        let h = parse_hce(PATH).unwrap().hypergraph;
        for core in [CoreSet::new(vec![0]), CoreSet::new(vec![2]), CoreSet::empty()] {
            let trace = hypercore::propagation::propagate(&h, &core, None).unwrap();
            let r = TraceReport::from_trace(&trace);
            assert_eq!(parse_trace_report(&write_trace_report(&r)).unwrap(), r);
        }
    }

    #[test]
    fn setcover_format() {
        let inst = parse_setcover("p sc 3 3\ns 1 1\ns 2 1 2\ns 1 3\n").unwrap();
        assert_eq!(inst.sets()[1], vec![0, 1]);
        assert_eq!(parse_setcover(&write_setcover(&inst)).unwrap(), inst);
        assert_eq!(parse_setcover("p sc 3 1\ns 2 1 2\n").unwrap_err().line, 2);
    }

    #[test]
    fn minrep_format() {
        let text = "p minrep 2 1 1 1 2\na 1 1\na 2 1\nb 1 1\ne 1 1\ne 2 1\n";
        let inst = parse_minrep(text).unwrap();
        assert_eq!(inst.super_edges(), vec![(0, 0)]);
        assert_eq!(write_minrep(&inst), text);
        assert!(parse_minrep("p minrep 3 1 2 1 0\na 1 1\na 2 1\na 3 2\nb 1 1\n").is_err());
    }

    #[test]
    fn cnf_format() {
        let f = parse_cnf("c demo\np cnf 3 2\n1 -2 3 0\n-1 2\n-3 0\n").unwrap();
        assert_eq!(f.clauses(), &[[1, -2, 3], [-1, 2, -3]]);
        assert_eq!(parse_cnf(&write_cnf(&f)).unwrap(), f);
        assert!(parse_cnf("p cnf 3 1\n1 1 2 0\n").is_err());
        assert!(parse_cnf("p cnf 3 1\n1 2 0\n").is_err());
        assert!(parse_cnf("p cnf 2 1\n1 2 3 0\n").is_err());
    }
}
