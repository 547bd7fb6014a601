//! Line-oriented text formats: graph files, k-tree traces and reduction
//! reports. Everything is LF-terminated and ids are 0-based.
//!
//! Graph file:
//!
//! ```text
//! n m k
//! u v        (m lines, u < v, strictly increasing)
//! ```
//!
//! `k = 0` means the file does not claim to be a k-tree.
//!
//! Trace file:
//!
//! ```text
//! k
//! b0 b1 ... bk
//! vertex: a1 ... ak   (one line per addition, in order)
//! ```
//!
//! Report file:
//!
//! ```text
//! n=<n> m=<m> k=<k> mode=<paper-faithful|verified> algorithm=<tri|degree>
//! removed u v
//! skipped u v degree <deg u> <deg v>
//! skipped u v cut side=<a,b,...> edges=<u-v,...>
//! deviation u v <mode that removed it> [cut side=... edges=...]
//! note <free text>
//! final_edges=<count> minimal=<yes|no|unchecked>
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use ktree_core::ktree::Addition;
use ktree_core::{
    Algorithm, CutCertificate, Deviation, Edge, Graph, GraphError, KTreeTrace, Mode,
    ReductionReport, SkipReason,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("empty input")]
    Empty,
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, FormatError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Asserted k, or 0.
    pub k: usize,
}

/// Strict parser: header counts must match and edges must be canonical and
/// strictly increasing.
pub fn parse_graph_file(text: &str) -> Result<GraphFile, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or(FormatError::Empty)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(syntax(1, "header must be `n m k`"));
    }
    let n: usize = parse_num(1, fields[0], "vertex count")?;
    let m: usize = parse_num(1, fields[1], "edge count")?;
    let k: usize = parse_num(1, fields[2], "k")?;

    let mut graph = Graph::empty(n);
    let mut prev: Option<Edge> = None;
    let mut seen = 0;
    for (line, text) in lines {
        if text.trim().is_empty() {
            return Err(syntax(line, "blank line"));
        }
        let parts: Vec<&str> = text.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(syntax(line, "edge line must be `u v`"));
        }
        let u: usize = parse_num(line, parts[0], "vertex id")?;
        let v: usize = parse_num(line, parts[1], "vertex id")?;
        if u >= v {
            return Err(syntax(
                line,
                format!("edge `{u} {v}` is not written with u < v"),
            ));
        }
        let e = Edge::new(u, v).map_err(|source| FormatError::Graph { line, source })?;
        if prev.is_some_and(|p| p >= e) {
            return Err(syntax(line, format!("edge {e} out of order or repeated")));
        }
        graph = graph
            .add_edge(e)
            .map_err(|source| FormatError::Graph { line, source })?;
        prev = Some(e);
        seen += 1;
    }
    if seen != m {
        return Err(syntax(
            1,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(GraphFile { graph, k })
}

pub fn write_graph_file(graph: &Graph, k: usize) -> String {
    let mut out = format!("{} {} {}\n", graph.vertex_count(), graph.edge_count(), k);
    for e in graph.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn parse_trace(text: &str) -> Result<KTreeTrace, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, first) = lines.next().ok_or(FormatError::Empty)?;
    let k: usize = parse_num(1, first.trim(), "k")?;
    let (_, base_line) = lines.next().ok_or_else(|| syntax(2, "missing base line"))?;
    let base = base_line
        .split_whitespace()
        .map(|t| parse_num(2, t, "vertex id"))
        .collect::<Result<Vec<usize>, _>>()?;
    let mut additions = Vec::new();
    for (line, text) in lines {
        let (head, tail) = text
            .split_once(':')
            .ok_or_else(|| syntax(line, "addition must be `vertex: a1 ... ak`"))?;
        let vertex = parse_num(line, head.trim(), "vertex id")?;
        let attach = tail
            .split_whitespace()
            .map(|t| parse_num(line, t, "vertex id"))
            .collect::<Result<Vec<usize>, _>>()?;
        additions.push(Addition { vertex, attach });
    }
    Ok(KTreeTrace::new(k, base, additions))
}

pub fn write_trace(trace: &KTreeTrace) -> String {
    let mut out = format!("{}\n", trace.k);
    out.push_str(&join(trace.base.iter(), " "));
    out.push('\n');
    for add in &trace.additions {
        let _ = writeln!(out, "{}: {}", add.vertex, join(add.attach.iter(), " "));
    }
    out
}

fn join<T: ToString>(items: impl Iterator<Item = T>, sep: &str) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn algorithm_str(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Triangle => "tri",
        Algorithm::Degree => "degree",
    }
}

fn write_cut(cut: &CutCertificate) -> String {
    format!(
        "cut side={} edges={}",
        join(cut.side.iter(), ","),
        join(
            cut.cut_edges.iter().map(|e| format!("{}-{}", e.u(), e.v())),
            ","
        )
    )
}

pub fn write_report(report: &ReductionReport) -> String {
    let mut out = format!(
        "n={} m={} k={} mode={} algorithm={}\n",
        report.input_n,
        report.input_m,
        report.k,
        report.mode,
        algorithm_str(report.algorithm)
    );
    for e in &report.removed {
        let _ = writeln!(out, "removed {} {}", e.u(), e.v());
    }
    for (e, reason) in &report.skipped {
        let why = match reason {
            SkipReason::DegreeDropped { degree_u, degree_v } => {
                format!("degree {degree_u} {degree_v}")
            }
            SkipReason::WouldDisconnect(cut) => write_cut(cut),
        };
        let _ = writeln!(out, "skipped {} {} {}", e.u(), e.v(), why);
    }
    for d in &report.deviations {
        let _ = write!(
            out,
            "deviation {} {} {}",
            d.edge.u(),
            d.edge.v(),
            d.removed_by
        );
        if let Some(cut) = &d.certificate {
            let _ = write!(out, " {}", write_cut(cut));
        }
        out.push('\n');
    }
    for note in &report.notes {
        let _ = writeln!(out, "note {note}");
    }
    let minimal = match report.final_minimal {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unchecked",
    };
    let _ = writeln!(out, "final_edges={} minimal={}", report.final_m, minimal);
    out
}

fn key_value<'a>(line: usize, tok: &'a str, key: &str) -> Result<&'a str, FormatError> {
    tok.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| syntax(line, format!("expected `{key}=...`, found `{tok}`")))
}

fn parse_edge_tokens(line: usize, u: &str, v: &str) -> Result<Edge, FormatError> {
    let u = parse_num(line, u, "vertex id")?;
    let v = parse_num(line, v, "vertex id")?;
    Edge::new(u, v).map_err(|source| FormatError::Graph { line, source })
}

fn parse_cut(line: usize, toks: &[&str]) -> Result<CutCertificate, FormatError> {
    if toks.len() != 3 || toks[0] != "cut" {
        return Err(syntax(line, "expected `cut side=... edges=...`"));
    }
    let side_text = key_value(line, toks[1], "side")?;
    let side = side_text
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|t| parse_num(line, t, "vertex id"))
        .collect::<Result<BTreeSet<usize>, _>>()?;
    let edge_text = key_value(line, toks[2], "edges")?;
    let cut_edges = edge_text
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|t| {
            let (u, v) = t
                .split_once('-')
                .ok_or_else(|| syntax(line, format!("bad edge `{t}`")))?;
            parse_edge_tokens(line, u, v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CutCertificate { side, cut_edges })
}

/// Reads a report back. Fields that the text form does not carry
/// (`final_k_edge_connected`) come back as `None`.
pub fn parse_report(text: &str) -> Result<ReductionReport, FormatError> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let (&(_, header), rest) = lines.split_first().ok_or(FormatError::Empty)?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 5 {
        return Err(syntax(1, "header must be `n= m= k= mode= algorithm=`"));
    }
    let input_n = parse_num(1, key_value(1, h[0], "n")?, "n")?;
    let input_m = parse_num(1, key_value(1, h[1], "m")?, "m")?;
    let k = parse_num(1, key_value(1, h[2], "k")?, "k")?;
    let mode: Mode = key_value(1, h[3], "mode")?
        .parse()
        .map_err(|e: String| syntax(1, e))?;
    let algorithm = match key_value(1, h[4], "algorithm")? {
        "tri" => Algorithm::Triangle,
        "degree" => Algorithm::Degree,
        other => return Err(syntax(1, format!("unknown algorithm `{other}`"))),
    };

    let (&(last_no, trailer), body) = rest
        .split_last()
        .ok_or_else(|| syntax(1, "missing trailer"))?;
    let t: Vec<&str> = trailer.split_whitespace().collect();
    if t.len() != 2 {
        return Err(syntax(
            last_no,
            "trailer must be `final_edges=<count> minimal=<yes|no|unchecked>`",
        ));
    }
    let final_m = parse_num(
        last_no,
        key_value(last_no, t[0], "final_edges")?,
        "edge count",
    )?;
    let final_minimal = match key_value(last_no, t[1], "minimal")? {
        "yes" => Some(true),
        "no" => Some(false),
        "unchecked" => None,
        other => return Err(syntax(last_no, format!("unknown minimality `{other}`"))),
    };

    let mut report = ReductionReport {
        k,
        algorithm,
        mode,
        input_n,
        input_m,
        removed: Vec::new(),
        skipped: Vec::new(),
        final_m,
        final_minimal,
        final_k_edge_connected: None,
        deviations: Vec::new(),
        notes: Vec::new(),
    };
    for &(line, text) in body {
        if let Some(note) = text.strip_prefix("note ") {
            report.notes.push(note.to_string());
            continue;
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks.as_slice() {
            ["removed", u, v] => report.removed.push(parse_edge_tokens(line, u, v)?),
            ["skipped", u, v, "degree", du, dv] => {
                let e = parse_edge_tokens(line, u, v)?;
                let reason = SkipReason::DegreeDropped {
                    degree_u: parse_num(line, du, "degree")?,
                    degree_v: parse_num(line, dv, "degree")?,
                };
                report.skipped.push((e, reason));
            }
            ["skipped", u, v, cut @ ..] => {
                let e = parse_edge_tokens(line, u, v)?;
                report
                    .skipped
                    .push((e, SkipReason::WouldDisconnect(parse_cut(line, cut)?)));
            }
            ["deviation", u, v, by, cut @ ..] => {
                let edge = parse_edge_tokens(line, u, v)?;
                let removed_by: Mode = by.parse().map_err(|e: String| syntax(line, e))?;
                let certificate = if cut.is_empty() {
                    None
                } else {
                    Some(parse_cut(line, cut)?)
                };
                report.deviations.push(Deviation {
                    edge,
                    removed_by,
                    certificate,
                });
            }
            _ => return Err(syntax(line, format!("unrecognized report line `{text}`"))),
        }
    }
    Ok(report)
}
