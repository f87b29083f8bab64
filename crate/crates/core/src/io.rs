//! Line-oriented text formats for embedded graphs, colourings and traces,
//! plus CSV export of discharging ledgers.
//!
//! Graph document:
//!
//! ```text
//! graph 5 5 yes
//! 0: 1 4
//! 1: 0 2
//! ...
//! ```
//!
//! The header gives vertex count, edge count and whether girth ≥ 5 is to be
//! enforced on load. Each vertex line lists the rotation in cyclic order; a
//! neighbour written `~w` is joined by a twisted edge. Blank lines and lines
//! starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::colorer::{ColoringTrace, ReductionKind};
use crate::coloring::{Coloring, ColoringError, DefectVector};
use crate::discharge::{Charge, ChargeLedger, Transfer};
use crate::graph::{Adjacency, EmbeddedGraph, GraphError, Neighbor, RotationSpec};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("document requires girth at least 5, graph has girth {girth}")]
    GirthBelowFive { girth: usize },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A parsed graph file: the embedding plus the header's girth flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: EmbeddedGraph,
    pub girth_checked: bool,
}

impl GraphDocument {
    pub fn new(graph: EmbeddedGraph) -> Self {
        let girth_checked = graph.girth().is_none_or(|g| g >= 5);
        GraphDocument { graph, girth_checked }
    }
}

/// Meaningful lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number(line: usize, (col, tok): (usize, &str), what: &str) -> Result<usize, FormatError> {
    tok.parse()
        .map_err(|_| perr(line, col, format!("expected {what}, found `{tok}`")))
}

pub fn parse_document(text: &str) -> Result<GraphDocument, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(1, 1, "empty document"))?;
    let ht = tokens(header);
    if ht.first().map(|t| t.1) != Some("graph") {
        return Err(perr(hl, 1, "expected `graph` header"));
    }
    if ht.len() != 4 {
        return Err(perr(
            hl,
            header.len() + 1,
            "header needs vertex count, edge count and girth flag",
        ));
    }
    let n = number(hl, ht[1], "vertex count")?;
    let m = number(hl, ht[2], "edge count")?;
    let girth_checked = match ht[3].1 {
        "yes" => true,
        "no" => false,
        other => {
            return Err(perr(
                hl,
                ht[3].0,
                format!("girth flag must be yes or no, found `{other}`"),
            ))
        }
    };

    let mut spec: RotationSpec = Vec::with_capacity(n);
    let mut last_line = hl;
    for v in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| perr(last_line + 1, 1, format!("missing line for vertex {v} of {n}")))?;
        last_line = ln;
        let toks = tokens(line);
        let (col, id) = toks[0];
        let id = id
            .strip_suffix(':')
            .ok_or_else(|| perr(ln, col + id.len(), "expected `:` after vertex id"))?;
        let id: usize = id.parse().map_err(|_| perr(ln, col, format!("bad vertex id `{id}`")))?;
        if id != v {
            return Err(perr(ln, col, format!("expected vertex {v}, found {id}")));
        }
        let mut rot = Vec::with_capacity(toks.len() - 1);
        for &(c, tok) in &toks[1..] {
            let (twisted, digits, off) = match tok.strip_prefix('~') {
                Some(rest) => (true, rest, 1),
                None => (false, tok, 0),
            };
            let w: usize = digits
                .parse()
                .map_err(|_| perr(ln, c + off, format!("bad neighbour `{tok}`")))?;
            rot.push(Neighbor { vertex: w, twisted });
        }
        spec.push(rot);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(perr(ln, 1, format!("unexpected content after {n} vertex lines")));
    }
    let graph = EmbeddedGraph::new(spec)?;
    if graph.edge_count() != m {
        return Err(perr(
            hl,
            ht[2].0,
            format!("header says {m} edges, rotations give {}", graph.edge_count()),
        ));
    }
    if girth_checked {
        if let Some(girth) = graph.girth().filter(|&g| g < 5) {
            return Err(FormatError::GirthBelowFive { girth });
        }
    }
    Ok(GraphDocument { graph, girth_checked })
}

pub fn parse_graph(text: &str) -> Result<EmbeddedGraph, FormatError> {
    parse_document(text).map(|d| d.graph)
}

/// Canonical text form; `parse_document` inverts it byte for byte.
pub fn serialize_document(doc: &GraphDocument) -> String {
    let g = &doc.graph;
    let mut out = String::new();
    let flag = if doc.girth_checked { "yes" } else { "no" };
    writeln!(out, "graph {} {} {}", g.vertex_count(), g.edge_count(), flag).unwrap();
    for v in 0..g.vertex_count() {
        write!(out, "{v}:").unwrap();
        for nb in g.rotation(v) {
            let tw = if nb.twisted { "~" } else { "" };
            write!(out, " {tw}{}", nb.vertex).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn serialize_graph(g: &EmbeddedGraph) -> String {
    serialize_document(&GraphDocument::new(g.clone()))
}

/// `coloring <n> defects d1,d2` followed by `<v> <class>` lines with
/// 1-based classes. Uncoloured vertices are written as `-`.
pub fn serialize_coloring(phi: &Coloring) -> String {
    let defects: Vec<String> = phi.defects().as_slice().iter().map(usize::to_string).collect();
    let mut out = format!("coloring {} defects {}\n", phi.len(), defects.join(","));
    for v in 0..phi.len() {
        match phi.class(v) {
            Some(c) => writeln!(out, "{v} {}", c + 1).unwrap(),
            None => writeln!(out, "{v} -").unwrap(),
        }
    }
    out
}

pub fn parse_defects(text: &str) -> Result<DefectVector, FormatError> {
    let mut ds = Vec::new();
    let mut col = 1;
    for part in text.split(',') {
        let d = part
            .trim()
            .parse()
            .map_err(|_| perr(1, col, format!("bad defect `{part}`")))?;
        ds.push(d);
        col += part.len() + 1;
    }
    Ok(DefectVector::new(ds)?)
}

pub fn parse_coloring(text: &str) -> Result<Coloring, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(1, 1, "empty colouring"))?;
    let ht = tokens(header);
    if ht.len() != 4 || ht[0].1 != "coloring" || ht[2].1 != "defects" {
        return Err(perr(hl, 1, "expected `coloring <n> defects <d1,d2,...>`"));
    }
    let n = number(hl, ht[1], "vertex count")?;
    let defects = parse_defects(ht[3].1).map_err(|e| match e {
        FormatError::Parse { column, message, .. } => perr(hl, ht[3].0 + column - 1, message),
        other => other,
    })?;
    let mut assignment = vec![None; n];
    let mut seen = vec![false; n];
    for (ln, line) in lines {
        let toks = tokens(line);
        if toks.len() != 2 {
            return Err(perr(ln, 1, "expected `<vertex> <class>`"));
        }
        let v = number(ln, toks[0], "vertex")?;
        if v >= n {
            return Err(perr(ln, toks[0].0, format!("vertex {v} out of range")));
        }
        if seen[v] {
            return Err(perr(ln, toks[0].0, format!("vertex {v} listed twice")));
        }
        seen[v] = true;
        if toks[1].1 != "-" {
            let c = number(ln, toks[1], "class")?;
            if c == 0 || c > defects.classes() {
                return Err(perr(
                    ln,
                    toks[1].0,
                    format!("class {c} outside 1..={}", defects.classes()),
                ));
            }
            assignment[v] = Some(c - 1);
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(perr(hl, 1, format!("vertex {v} missing")));
    }
    Ok(Coloring::from_partial(assignment, defects)?)
}

/// One line per reduction: kind, deleted vertices, labels and the classes
/// set when it was undone (1-based, `-` for previously uncoloured).
pub fn serialize_trace(trace: &ColoringTrace) -> String {
    let mut out = format!(
        "trace {} t {} steps {}\n",
        trace.vertex_count,
        trace.t,
        trace.entries.len()
    );
    for (i, e) in trace.entries.iter().enumerate() {
        let del: Vec<String> = e.step.deleted.iter().map(usize::to_string).collect();
        let labels: Vec<String> = e.step.labels.iter().map(|(n, v)| format!("{n}={v}")).collect();
        let acts: Vec<String> = e
            .actions
            .iter()
            .map(|a| {
                format!(
                    "{}:{}>{}",
                    a.vertex,
                    a.from.map_or("-".to_string(), |c| (c + 1).to_string()),
                    a.to + 1
                )
            })
            .collect();
        writeln!(
            out,
            "{i} {} deleted={} labels={} set={}",
            kind_name(e.step.kind),
            del.join(","),
            labels.join(","),
            acts.join(",")
        )
        .unwrap();
    }
    out
}

fn kind_name(k: ReductionKind) -> &'static str {
    match k {
        ReductionKind::DegreeAtMostOne => "degree-at-most-one",
        ReductionKind::AdjacentTwoVertices => "adjacent-two-vertices",
        ReductionKind::AllLowDegreeNeighbors => "all-low-degree-neighbors",
        ReductionKind::TerribleRichHighVertex => "terrible-rich-high-vertex",
        ReductionKind::BadRichHighVertex => "bad-rich-high-vertex",
    }
}

/// Exact rational as `p/q`, always with a denominator.
pub fn rational(q: &Charge) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn ledger_csv(ledger: &ChargeLedger) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["element_kind", "element_id", "initial", "final"])?;
    for (e, init, fin) in ledger.rows() {
        w.write_record([
            e.kind().to_string(),
            e.id().to_string(),
            rational(&init),
            rational(&fin),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8"))
}

pub fn transfers_csv(transfers: &[Transfer]) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "rule",
        "tag",
        "source_kind",
        "source_id",
        "target_kind",
        "target_id",
        "amount",
        "witness",
    ])?;
    for t in transfers {
        let tag = match t.tag {
            Some(crate::discharge::R5Tag::Independent) => "independent",
            Some(crate::discharge::R5Tag::Coupled) => "coupled",
            None => "",
        };
        w.write_record([
            t.rule.to_string(),
            tag.to_string(),
            t.source.kind().to_string(),
            t.source.id().to_string(),
            t.target.kind().to_string(),
            t.target.id().to_string(),
            rational(&t.amount),
            t.witness.to_string(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8"))
}
