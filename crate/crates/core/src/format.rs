//! Text formats for diagrams and decompositions.
//!
//! Diagram files are UTF-8 lines. `#` starts a comment. The first
//! non-comment line is `codim <p>`; every other line is `<i> <j> <value>`
//! with the value a non-zero rational `n` or `n/d` in lowest terms.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::decomposition::{PureDecomposition, Term};
use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::pure::DegreeSequence;
use crate::rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Display {
    /// One `i j value` line per entry.
    #[default]
    Absolute,
    /// Entry `(i, j)` drawn in column `i`, row `j - i`; zeros as `-`.
    PaperRows,
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(n, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((n + 1, body))
    })
}

pub fn parse_diagram(text: &str) -> Result<BettiDiagram> {
    let mut lines = content_lines(text);
    let (n, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `codim` line"))?;
    let codim = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["codim", p] => p
            .parse::<usize>()
            .map_err(|_| parse_err(n, format!("bad codimension `{p}`")))?,
        _ => return Err(parse_err(n, "expected `codim <p>`")),
    };
    let mut seen = BTreeMap::new();
    let mut d = BettiDiagram::zero(codim);
    for (n, line) in lines {
        let fields: Vec<_> = line.split_whitespace().collect();
        let [i, j, v] = fields.as_slice() else {
            return Err(parse_err(n, "expected `<i> <j> <value>`"));
        };
        let i: usize = i
            .parse()
            .map_err(|_| parse_err(n, format!("bad homological degree `{i}`")))?;
        let j: i64 = j
            .parse()
            .map_err(|_| parse_err(n, format!("bad internal degree `{j}`")))?;
        let v = rational::parse(v).map_err(|r| parse_err(n, r))?;
        if num_traits::Zero::is_zero(&v) {
            return Err(parse_err(n, "zero entries are not written"));
        }
        if i > codim {
            return Err(parse_err(
                n,
                format!("homological degree {i} exceeds codim {codim}"),
            ));
        }
        if let Some(first) = seen.insert((i, j), n) {
            return Err(parse_err(
                n,
                format!("duplicate entry ({i},{j}), first on line {first}"),
            ));
        }
        d.accumulate(i, j, v)?;
    }
    Ok(d)
}

pub fn render_diagram(d: &BettiDiagram, display: Display) -> String {
    let mut out = format!("codim {}\n", d.codim());
    match display {
        Display::Absolute => {
            for (i, j, v) in d.entries() {
                let _ = writeln!(out, "{i} {j} {}", rational::format(v));
            }
        }
        Display::PaperRows => render_rows(d, &mut out),
    }
    out
}

fn render_rows(d: &BettiDiagram, out: &mut String) {
    let rows: Vec<i64> = d.entries().map(|(i, j, _)| j - i as i64).collect();
    let (Some(&lo), Some(&hi)) = (rows.iter().min(), rows.iter().max()) else {
        return;
    };
    let cols = d.codim() + 1;
    let cell = |i: usize, r: i64| {
        let v = d.get(i, r + i as i64);
        if num_traits::Zero::is_zero(&v) {
            "-".to_string()
        } else {
            rational::format(&v)
        }
    };
    let widths: Vec<usize> = (0..cols)
        .map(|i| (lo..=hi).map(|r| cell(i, r).len()).max().unwrap_or(1))
        .collect();
    let label = (lo..=hi).map(|r| r.to_string().len()).max().unwrap_or(1);
    for r in lo..=hi {
        let _ = write!(out, "{r:>label$}:");
        for (i, w) in widths.iter().enumerate() {
            let _ = write!(out, " {:>w$}", cell(i, r));
        }
        out.push('\n');
    }
}

/// One `<c> * pi(<d0>,...,<dp>)` line per term.
pub fn render_decomposition(dec: &PureDecomposition) -> String {
    dec.to_string()
}

/// `NOT-IN-CONE`, the partial terms as comments, then the remainder as a
/// diagram file.
pub fn render_not_in_cone(partial: &PureDecomposition, remainder: &BettiDiagram) -> String {
    let mut out = String::from("NOT-IN-CONE\n");
    for t in partial.terms() {
        let _ = writeln!(out, "# partial {t}");
    }
    out.push_str(&render_diagram(remainder, Display::Absolute));
    out
}

pub fn parse_decomposition(text: &str) -> Result<PureDecomposition> {
    let terms = content_lines(text)
        .map(|(n, line)| {
            let (c, rest) = line
                .split_once('*')
                .ok_or_else(|| parse_err(n, "expected `<c> * pi(...)`"))?;
            let coeff = rational::parse(c.trim()).map_err(|r| parse_err(n, r))?;
            let inner = rest
                .trim()
                .strip_prefix("pi(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| parse_err(n, "expected `pi(...)`"))?;
            let degrees: DegreeSequence = inner
                .parse()
                .map_err(|e: Error| parse_err(n, e.to_string()))?;
            Ok(Term::new(coeff, degrees))
        })
        .collect::<Result<Vec<_>>>()?;
    PureDecomposition::new(terms)
}
