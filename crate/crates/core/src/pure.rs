//! Pure diagrams, the componentwise order on degree sequences, and the
//! poset of degree sequences between two bounds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_traits::One;

use crate::diagram::{BettiDiagram, ShiftBounds};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rational::{self, Rational};

/// Posets larger than this are rejected instead of materialized.
pub const MAX_POSET_ELEMENTS: u128 = 1_000_000;

/// A strictly increasing tuple `(d_0, ..., d_p)`, the type of a pure diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        if degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(degrees));
        }
        Ok(Self(degrees))
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `p`, one less than the length.
    pub fn codim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn translate(&self, c: i64) -> Self {
        Self(self.0.iter().map(|d| d + c).collect())
    }

    /// The sequence with position `k` removed.
    pub fn without(&self, k: usize) -> Result<Self> {
        let mut v = self.0.clone();
        v.remove(k);
        Self::new(v)
    }

    /// The sequence with `d` appended.
    pub fn push(&self, d: i64) -> Result<Self> {
        let mut v = self.0.clone();
        v.push(d);
        Self::new(v)
    }

    /// Sum of the entries; increases by one along each cover relation.
    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sequences covering `self` inside `bounds`, in lexicographic order.
    fn covers(&self, bounds: &ShiftBounds) -> Vec<DegreeSequence> {
        let n = self.0.len();
        (0..n)
            .rev()
            .filter(|&k| {
                let bumped = self.0[k] + 1;
                bumped <= bounds.high()[k] && (k + 1 == n || bumped < self.0[k + 1])
            })
            .map(|k| {
                let mut v = self.0.clone();
                v[k] += 1;
                DegreeSequence(v)
            })
            .collect()
    }
}

impl Index<usize> for DegreeSequence {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Comma-separated integers, e.g. `0,2,5`.
    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|e| Error::Parse {
                    line: 0,
                    reason: format!("bad degree `{t}`: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(degrees)
    }
}

/// Verdict of the componentwise partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Less,
    Equal,
    Greater,
    Incomparable,
}

pub fn compare(d: &DegreeSequence, other: &DegreeSequence) -> Result<Order> {
    if d.len() != other.len() {
        return Err(Error::LengthMismatch(d.len(), other.len()));
    }
    let mut le = true;
    let mut ge = true;
    for (a, b) in d.0.iter().zip(&other.0) {
        match a.cmp(b) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (le, ge) {
        (true, true) => Order::Equal,
        (true, false) => Order::Less,
        (false, true) => Order::Greater,
        (false, false) => Order::Incomparable,
    })
}

/// Herzog-Kuhl entry of `pi(d)` in column `i >= 1`:
/// `prod_{k != 0, i} (d_k - d_0) / |d_k - d_i|`.
fn pure_entry(d: &[i64], i: usize) -> Rational {
    let mut acc = Rational::one();
    for (k, &dk) in d.iter().enumerate().skip(1) {
        if k != i {
            acc *= rational::frac(dk - d[0], (dk - d[i]).abs());
        }
    }
    acc
}

/// The pure diagram `pi(d)`: one positive entry `b[i][d_i]` per column,
/// normalized so that `b[0][d_0] = 1`.
pub fn pure_diagram(d: &DegreeSequence) -> BettiDiagram {
    let entries = d.0.iter().enumerate().map(|(i, &di)| {
        let v = if i == 0 {
            Rational::one()
        } else {
            pure_entry(&d.0, i)
        };
        (i, di, v)
    });
    BettiDiagram::from_entries(d.codim(), entries).expect("columns within codimension")
}

/// `e(pi(d)) = (1/p!) prod_{i>=1} (d_i - d_0)`.
pub fn pure_multiplicity(d: &DegreeSequence) -> Rational {
    let prod = d.0[1..]
        .iter()
        .fold(Rational::one(), |acc, di| acc * rational::int(di - d.0[0]));
    prod / rational::factorial(d.codim())
}

/// `1 + sum (high_i - low_i)`, the dimension of the diagram space and the
/// length of every maximal chain.
pub fn space_dimension(bounds: &ShiftBounds) -> usize {
    let spread: i64 = (0..bounds.low().len())
        .map(|i| bounds.high()[i] - bounds.low()[i])
        .sum();
    1 + spread as usize
}

/// All degree sequences between two bounds, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetView {
    bounds: ShiftBounds,
    elements: Vec<DegreeSequence>,
}

impl PosetView {
    pub fn bounds(&self) -> &ShiftBounds {
        &self.bounds
    }

    pub fn elements(&self) -> &[DegreeSequence] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Number of strictly increasing sequences inside `bounds`.
pub fn poset_size(bounds: &ShiftBounds) -> u128 {
    // ways[v - lo] = number of valid suffixes from position k starting at value v
    let n = bounds.low().len();
    let mut next: Vec<(i64, u128)> = (bounds.low()[n - 1]..=bounds.high()[n - 1])
        .map(|v| (v, 1))
        .collect();
    for k in (0..n - 1).rev() {
        next = (bounds.low()[k]..=bounds.high()[k])
            .map(|v| {
                let count = next.iter().filter(|(w, _)| *w > v).map(|(_, c)| c).sum();
                (v, count)
            })
            .collect();
    }
    next.iter().map(|(_, c)| c).sum()
}

pub fn enumerate_poset(bounds: &ShiftBounds) -> Result<PosetView> {
    let size = poset_size(bounds);
    if size > MAX_POSET_ELEMENTS {
        return Err(Error::PosetTooLarge(size));
    }
    let mut elements = Vec::with_capacity(size as usize);
    let mut prefix = Vec::with_capacity(bounds.low().len());
    fill(bounds, &mut prefix, &mut elements);
    Ok(PosetView {
        bounds: bounds.clone(),
        elements,
    })
}

fn fill(bounds: &ShiftBounds, prefix: &mut Vec<i64>, out: &mut Vec<DegreeSequence>) {
    let k = prefix.len();
    if k == bounds.low().len() {
        out.push(DegreeSequence(prefix.clone()));
        return;
    }
    let start = match prefix.last() {
        Some(&prev) => bounds.low()[k].max(prev + 1),
        None => bounds.low()[k],
    };
    for v in start..=bounds.high()[k] {
        prefix.push(v);
        fill(bounds, prefix, out);
        prefix.pop();
    }
}

/// All maximal chains from `low` to `high`, in lexicographic order.
pub fn maximal_chains(view: &PosetView) -> Vec<Vec<DegreeSequence>> {
    maximal_chains_with(view, Exec::default())
}

/// As [`maximal_chains`], splitting the search over the covers of `low`.
pub fn maximal_chains_with(view: &PosetView, exec: Exec) -> Vec<Vec<DegreeSequence>> {
    let bounds = view.bounds();
    let low = bounds.low().clone();
    let first = low.covers(bounds);
    if first.is_empty() {
        return vec![vec![low]];
    }
    exec.flat_map(&first, |start| {
        let mut out = Vec::new();
        let mut path = vec![low.clone(), start.clone()];
        extend_chains(bounds, &mut path, &mut out);
        out
    })
}

fn extend_chains(
    bounds: &ShiftBounds,
    path: &mut Vec<DegreeSequence>,
    out: &mut Vec<Vec<DegreeSequence>>,
) {
    let covers = path.last().expect("non-empty path").covers(bounds);
    if covers.is_empty() {
        out.push(path.clone());
        return;
    }
    for c in covers {
        path.push(c);
        extend_chains(bounds, path, out);
        path.pop();
    }
}

/// True when the sequences form a strictly increasing chain.
pub fn is_chain(seqs: &[DegreeSequence]) -> bool {
    seqs.windows(2)
        .all(|w| compare(&w[0], &w[1]) == Ok(Order::Less))
}
