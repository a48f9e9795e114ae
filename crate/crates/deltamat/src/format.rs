//! Line-oriented text formats.
//!
//! ```text
//! setsystem n=3
//! phi 0x0 0x3 0x5
//!
//! f2matrix n=2
//! 01
//! 10
//!
//! ribbon v=1 e=1
//! v 0: 0 1
//! e 0: (0,1) +
//!
//! chords: a b a b
//! signs: a=+ b=-
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Masks are lowercase
//! hex with a `0x` prefix, strictly increasing. A chord file without a
//! `signs:` line has every chord untwisted.

use std::fmt::Write as _;
use std::str::FromStr;

use deltamat_core::f2::MatrixF2;
use deltamat_core::graph::FramedGraph;
use deltamat_core::ribbon::{ChordDiagram, RibbonEdge, RibbonGraph, Sign};
use deltamat_core::{CanonicalCode, Rational, SetSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header_field(
    line: usize,
    text: &str,
    keyword: &str,
    fields: &[&str],
) -> Result<Vec<usize>, ParseError> {
    let mut parts = text.split_whitespace();
    if parts.next() != Some(keyword) {
        return err(line, format!("expected `{keyword}` header"));
    }
    let mut out = Vec::with_capacity(fields.len());
    for &field in fields {
        let Some(tok) = parts.next() else {
            return err(line, format!("missing `{field}=`"));
        };
        let Some(value) = tok.strip_prefix(field).and_then(|t| t.strip_prefix('=')) else {
            return err(line, format!("expected `{field}=<int>`, found `{tok}`"));
        };
        match value.parse() {
            Ok(v) => out.push(v),
            Err(_) => return err(line, format!("`{value}` is not a nonnegative integer")),
        }
    }
    if let Some(extra) = parts.next() {
        return err(line, format!("unexpected `{extra}`"));
    }
    Ok(out)
}

/// Parses `0x` followed by lowercase hex digits.
pub fn parse_mask(tok: &str) -> Result<u32, String> {
    let digits = tok
        .strip_prefix("0x")
        .ok_or_else(|| format!("`{tok}` lacks the 0x prefix"))?;
    if digits.is_empty()
        || !digits
            .bytes()
            .all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b))
    {
        return Err(format!("`{tok}` is not lowercase hex"));
    }
    u32::from_str_radix(digits, 16).map_err(|e| format!("`{tok}`: {e}"))
}

pub fn format_mask(mask: u32) -> String {
    format!("{mask:#x}")
}

/// Ground-set size and family as written, before any validation beyond
/// syntax and ordering. The family may be empty.
pub fn parse_set_system_raw(text: &str) -> Result<(usize, Vec<u32>), ParseError> {
    let mut lines = content_lines(text);
    let Some((l1, header)) = lines.next() else {
        return err(1, "empty input");
    };
    let n = header_field(l1, header, "setsystem", &["n"])?[0];
    let Some((l2, body)) = lines.next() else {
        return err(l1 + 1, "missing `phi` line");
    };
    let mut toks = body.split_whitespace();
    if toks.next() != Some("phi") {
        return err(l2, "expected `phi`");
    }
    let mut phi: Vec<u32> = Vec::new();
    for tok in toks {
        let m = parse_mask(tok).or_else(|m| err(l2, m))?;
        if n < 32 && m >> n != 0 {
            return err(
                l2,
                format!("{tok} has elements outside a ground set of size {n}"),
            );
        }
        if phi.last().is_some_and(|&p| p >= m) {
            return err(l2, format!("{tok} breaks strictly increasing order"));
        }
        phi.push(m);
    }
    if let Some((l, _)) = lines.next() {
        return err(l, "trailing content");
    }
    Ok((n, phi))
}

pub fn parse_set_system(text: &str) -> Result<SetSystem, ParseError> {
    let (n, phi) = parse_set_system_raw(text)?;
    SetSystem::new(n, phi).or_else(|e| err(2, e.to_string()))
}

pub fn write_set_system(s: &SetSystem) -> String {
    let mut out = format!("setsystem n={}\nphi", s.n());
    for &m in s.feasible() {
        write!(out, " {}", format_mask(m)).unwrap();
    }
    out.push('\n');
    out
}

/// One-line form `n=<int> phi <masks>` used in reports.
pub fn inline_code(code: &CanonicalCode) -> String {
    let mut out = format!("n={} phi", code.n());
    for &m in code.code() {
        write!(out, " {}", format_mask(m)).unwrap();
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<MatrixF2, ParseError> {
    let mut lines = content_lines(text);
    let Some((l1, header)) = lines.next() else {
        return err(1, "empty input");
    };
    let n = header_field(l1, header, "f2matrix", &["n"])?[0];
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(n);
    let mut last = l1;
    for _ in 0..n {
        let Some((l, row)) = lines.next() else {
            return err(last + 1, format!("expected {n} rows"));
        };
        last = l;
        if row.len() != n || !row.bytes().all(|b| b == b'0' || b == b'1') {
            return err(l, format!("expected {n} characters 0 or 1"));
        }
        rows.push(row.bytes().map(|b| b - b'0').collect());
    }
    if let Some((l, _)) = lines.next() {
        return err(l, "trailing content");
    }
    let refs: Vec<&[u8]> = rows.iter().map(Vec::as_slice).collect();
    let m = if n == 0 {
        MatrixF2::zero(0, 0)
    } else {
        MatrixF2::from_entries(&refs).or_else(|e| err(l1, e.to_string()))?
    };
    if !m.is_symmetric() {
        return err(l1, "matrix is not symmetric");
    }
    Ok(m)
}

pub fn parse_framed_graph(text: &str) -> Result<FramedGraph, ParseError> {
    FramedGraph::new(parse_matrix(text)?).or_else(|e| err(1, e.to_string()))
}

pub fn write_matrix(m: &MatrixF2) -> String {
    let mut out = format!("f2matrix n={}\n", m.rows());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(if m.get(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

fn parse_sign(line: usize, tok: &str) -> Result<Sign, ParseError> {
    match tok {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        _ => err(line, format!("expected `+` or `-`, found `{tok}`")),
    }
}

fn sign_char(s: Sign) -> char {
    match s {
        Sign::Plus => '+',
        Sign::Minus => '-',
    }
}

fn parse_index(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse()
        .or_else(|_| err(line, format!("`{tok}` is not a nonnegative integer")))
}

pub fn parse_ribbon(text: &str) -> Result<RibbonGraph, ParseError> {
    let mut lines = content_lines(text);
    let Some((l1, header)) = lines.next() else {
        return err(1, "empty input");
    };
    let dims = header_field(l1, header, "ribbon", &["v", "e"])?;
    let (v, e) = (dims[0], dims[1]);
    let mut rotations = Vec::with_capacity(v);
    let mut edges = Vec::with_capacity(e);
    let mut last = l1;
    for i in 0..v {
        let Some((l, row)) = lines.next() else {
            return err(last + 1, format!("expected line `v {i}: ...`"));
        };
        last = l;
        let Some(rest) = row.strip_prefix(&format!("v {i}:")) else {
            return err(l, format!("expected `v {i}:`"));
        };
        rotations.push(
            rest.split_whitespace()
                .map(|t| parse_index(l, t))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    for j in 0..e {
        let Some((l, row)) = lines.next() else {
            return err(last + 1, format!("expected line `e {j}: ...`"));
        };
        last = l;
        let Some(rest) = row.strip_prefix(&format!("e {j}:")) else {
            return err(l, format!("expected `e {j}:`"));
        };
        let rest = rest.trim();
        let Some((pair, sign)) = rest.strip_prefix('(').and_then(|r| r.split_once(')')) else {
            return err(l, "expected `(h,h') <sign>`");
        };
        let Some((h, k)) = pair.split_once(',') else {
            return err(l, "expected `(h,h')`");
        };
        let ends = [parse_index(l, h.trim())?, parse_index(l, k.trim())?];
        edges.push(RibbonEdge {
            ends,
            sign: parse_sign(l, sign.trim())?,
        });
    }
    if let Some((l, _)) = lines.next() {
        return err(l, "trailing content");
    }
    RibbonGraph::new(rotations, edges).or_else(|e| err(l1, e.to_string()))
}

pub fn write_ribbon(g: &RibbonGraph) -> String {
    let mut out = format!("ribbon v={} e={}\n", g.vertex_count(), g.edge_count());
    for (i, rot) in g.rotations().iter().enumerate() {
        write!(out, "v {i}:").unwrap();
        for h in rot {
            write!(out, " {h}").unwrap();
        }
        out.push('\n');
    }
    for (j, e) in g.edges().iter().enumerate() {
        writeln!(
            out,
            "e {j}: ({},{}) {}",
            e.ends[0],
            e.ends[1],
            sign_char(e.sign)
        )
        .unwrap();
    }
    out
}

/// A chord diagram with the labels used in its file; chord `i` carries
/// `labels[i]`, in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledChords {
    pub labels: Vec<String>,
    pub diagram: ChordDiagram,
}

pub fn parse_chords(text: &str) -> Result<LabelledChords, ParseError> {
    let mut lines = content_lines(text);
    let Some((l1, first)) = lines.next() else {
        return err(1, "empty input");
    };
    let Some(rest) = first.strip_prefix("chords:") else {
        return err(l1, "expected `chords:`");
    };
    let mut labels: Vec<String> = Vec::new();
    let mut word = Vec::new();
    for tok in rest.split_whitespace() {
        let idx = match labels.iter().position(|x| x == tok) {
            Some(i) => i,
            None => {
                labels.push(tok.to_string());
                labels.len() - 1
            }
        };
        word.push(idx);
    }
    let mut signs = vec![Sign::Plus; labels.len()];
    if let Some((l2, line)) = lines.next() {
        let Some(rest) = line.strip_prefix("signs:") else {
            return err(l2, "expected `signs:`");
        };
        let mut seen = vec![false; labels.len()];
        for tok in rest.split_whitespace() {
            let Some((label, sign)) = tok.split_once('=') else {
                return err(l2, format!("expected `<label>=<sign>`, found `{tok}`"));
            };
            let Some(i) = labels.iter().position(|x| x == label) else {
                return err(l2, format!("unknown chord `{label}`"));
            };
            if std::mem::replace(&mut seen[i], true) {
                return err(l2, format!("chord `{label}` signed twice"));
            }
            signs[i] = parse_sign(l2, sign)?;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return err(l2, format!("chord `{}` has no sign", labels[i]));
        }
        if let Some((l, _)) = lines.next() {
            return err(l, "trailing content");
        }
    }
    let diagram = ChordDiagram::new(&word, &signs).or_else(|e| err(l1, e.to_string()))?;
    Ok(LabelledChords { labels, diagram })
}

pub fn write_chords(c: &LabelledChords) -> String {
    let mut out = String::from("chords:");
    for i in c.diagram.word() {
        write!(out, " {}", c.labels[i]).unwrap();
    }
    out.push_str("\nsigns:");
    for (label, s) in c.labels.iter().zip(c.diagram.signs()) {
        write!(out, " {label}={}", sign_char(s)).unwrap();
    }
    out.push('\n');
    out
}

/// `p/q` or an integer.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    Rational::from_str(text.trim()).map_err(|_| format!("`{text}` is not a rational p/q"))
}
