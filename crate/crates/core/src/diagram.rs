//! Sparse exact Betti diagrams and the linear conditions they satisfy.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{HVector, LaurentPoly};
use crate::pure::DegreeSequence;
use crate::rational::{self, Rational};

/// A table `b[i][j]` of rationals indexed by homological degree `i` and
/// internal degree `j`, with a declared codimension `p` (so `0 <= i <= p`).
///
/// Only non-zero entries are stored, so two diagrams are equal exactly when
/// their entries agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiDiagram {
    codim: usize,
    entries: BTreeMap<(usize, i64), Rational>,
}

/// Outcome of checking the alternating power-sum equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    /// Exponents `m` whose equation `sum (-1)^i j^m b[i][j] = 0` fails.
    pub violated: Vec<usize>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violated.is_empty()
    }
}

/// Componentwise lower and upper shift bounds `low <= high`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftBounds {
    low: DegreeSequence,
    high: DegreeSequence,
}

impl ShiftBounds {
    pub fn new(low: DegreeSequence, high: DegreeSequence) -> Result<Self> {
        if low.len() != high.len() {
            return Err(Error::LengthMismatch(low.len(), high.len()));
        }
        if low.degrees().iter().zip(high.degrees()).any(|(l, h)| l > h) {
            return Err(Error::BoundsNotOrdered {
                low: low.degrees().to_vec(),
                high: high.degrees().to_vec(),
            });
        }
        Ok(Self { low, high })
    }

    pub fn low(&self) -> &DegreeSequence {
        &self.low
    }

    pub fn high(&self) -> &DegreeSequence {
        &self.high
    }

    pub fn codim(&self) -> usize {
        self.low.codim()
    }

    pub fn contains(&self, d: &DegreeSequence) -> bool {
        d.len() == self.low.len()
            && (0..d.len()).all(|i| self.low[i] <= d[i] && d[i] <= self.high[i])
    }
}

impl BettiDiagram {
    pub fn zero(codim: usize) -> Self {
        Self {
            codim,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a diagram from `(i, j, value)` triples; repeated positions are summed.
    pub fn from_entries<I>(codim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut d = Self::zero(codim);
        for (i, j, v) in entries {
            d.accumulate(i, j, v)?;
        }
        Ok(d)
    }

    pub(crate) fn accumulate(&mut self, i: usize, j: i64, v: Rational) -> Result<()> {
        if i > self.codim {
            return Err(Error::HomologicalDegreeOutOfRange {
                i,
                codim: self.codim,
            });
        }
        if v.is_zero() {
            return Ok(());
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
        Ok(())
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Non-zero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Non-zero entries of column `i`, by increasing degree.
    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rational)> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), v)| (j, v))
    }

    /// Number of non-zero entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_non_negative(&self) -> bool {
        self.entries.values().all(rational::is_non_negative)
    }

    /// Checks `sum (-1)^i j^m b[i][j] = 0` for `m = 0, ..., p-1`.
    pub fn validate(&self) -> Validation {
        let violated = (0..self.codim)
            .filter(|&m| !self.power_sum(m as u32).is_zero())
            .collect();
        Validation { violated }
    }

    /// `sum (-1)^i j^m b[i][j]`.
    pub fn power_sum(&self, m: u32) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), v) in &self.entries {
            let term = v * Rational::from_integer(BigInt::from(j).pow(m));
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// `S_D(t) = sum (-1)^i b[i][j] t^j`.
    pub fn s_polynomial(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.entries
                .iter()
                .map(|(&(i, j), v)| (j, if i % 2 == 0 { v.clone() } else { -v.clone() })),
        )
    }

    /// `S_D(t) / (1-t)^p`; fails when the division is not exact.
    pub fn h_vector(&self) -> Result<HVector> {
        self.s_polynomial().div_one_minus_t_pow(self.codim)
    }

    pub fn multiplicity(&self) -> Result<Rational> {
        Ok(self.h_vector()?.eval(&Rational::one()))
    }

    /// `beta_0 = sum_j b[0][j]`.
    pub fn beta0(&self) -> Rational {
        self.column(0).fold(Rational::zero(), |acc, (_, v)| acc + v)
    }

    fn shifts(&self, pick_max: bool) -> Result<Vec<i64>> {
        (0..=self.codim)
            .map(|i| {
                let mut col = self.column(i).map(|(j, _)| j);
                let found = if pick_max { col.last() } else { col.next() };
                found.ok_or(Error::MissingColumn(i))
            })
            .collect()
    }

    /// Smallest degree with a non-zero entry, per column. Not necessarily increasing.
    pub fn min_shifts(&self) -> Result<Vec<i64>> {
        self.shifts(false)
    }

    /// Largest degree with a non-zero entry, per column. Not necessarily increasing.
    pub fn max_shifts(&self) -> Result<Vec<i64>> {
        self.shifts(true)
    }

    /// Minimal and maximal shifts as bounds, when both are strictly increasing.
    pub fn shift_bounds(&self) -> Result<ShiftBounds> {
        let low = DegreeSequence::new(self.min_shifts()?)
            .map_err(|_| Error::ShiftsNotIncreasing(self.min_shifts().unwrap_or_default()))?;
        let high = DegreeSequence::new(self.max_shifts()?)
            .map_err(|_| Error::ShiftsNotIncreasing(self.max_shifts().unwrap_or_default()))?;
        ShiftBounds::new(low, high)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.codim != other.codim {
            return Err(Error::CodimMismatch(self.codim, other.codim));
        }
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.accumulate(i, j, v.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.codim);
        }
        Self {
            codim: self.codim,
            entries: self.entries.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Divides by `beta_0`.
    pub fn normalize(&self) -> Result<Self> {
        let b0 = self.beta0();
        if b0.is_zero() {
            return Err(Error::ZeroRowZero);
        }
        Ok(self.scale(&b0.recip()))
    }

    /// Smallest positive integer `s` making every entry of `s * D` integral.
    pub fn integer_rescale(&self) -> (Self, BigInt) {
        let s = self
            .entries
            .values()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        (self.scale(&Rational::from_integer(s.clone())), s)
    }

    /// `D - b * C^{k,l}` where `C^{k,l}` has ones at `(k,l)` and `(k+1,l)`.
    /// The S-polynomial is unchanged.
    pub fn apply_cancellation(&self, k: usize, l: i64, b: &Rational) -> Result<Self> {
        if k + 1 > self.codim {
            return Err(Error::ColumnOutOfRange {
                k,
                codim: self.codim,
            });
        }
        if b.is_negative() || self.get(k, l) < *b || self.get(k + 1, l) < *b {
            return Err(Error::NegativeEntry { k, l });
        }
        let mut out = self.clone();
        out.accumulate(k, l, -b.clone())?;
        out.accumulate(k + 1, l, -b.clone())?;
        Ok(out)
    }

    /// Adds `c` to every internal degree.
    pub fn translate(&self, c: i64) -> Self {
        Self {
            codim: self.codim,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((i, j + c), v.clone()))
                .collect(),
        }
    }

    /// The diagram with every column moved one homological step to the
    /// right, seen in codimension `p + 1`.
    pub fn shift_columns(&self) -> Self {
        Self {
            codim: self.codim + 1,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((i + 1, j), v.clone()))
                .collect(),
        }
    }

    /// Same entries, declared in a larger codimension.
    pub fn with_codim(&self, codim: usize) -> Result<Self> {
        Self::from_entries(codim, self.entries().map(|(i, j, v)| (i, j, v.clone())))
    }
}
