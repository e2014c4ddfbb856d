//! Greedy expansion of a diagram along a chain of pure diagrams, and the
//! multiplicity bounds that hold on the cone of pure diagrams.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::pure::{self, pure_diagram, DegreeSequence};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub degrees: DegreeSequence,
}

impl Term {
    pub fn new(coeff: Rational, degrees: DegreeSequence) -> Self {
        Self { coeff, degrees }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * pi({})",
            rational::format(&self.coeff),
            self.degrees
        )
    }
}

/// Positive combination `sum c_k pi(d_k)` whose types form a chain
/// `d_1 < d_2 < ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PureDecomposition {
    terms: Vec<Term>,
}

impl PureDecomposition {
    /// Checks that coefficients are positive, lengths agree and the types
    /// form a chain in the given order.
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        check_positive(&terms)?;
        let types: Vec<_> = terms.iter().map(|t| t.degrees.clone()).collect();
        if !pure::is_chain(&types) {
            return Err(Error::InvalidDecomposition(
                "types do not form a chain".to_string(),
            ));
        }
        Ok(Self { terms })
    }

    /// Sums repeated types, drops zero coefficients and sorts the result into
    /// chain order. Fails when the surviving types are not a chain.
    pub fn merge<I: IntoIterator<Item = Term>>(terms: I) -> Result<Self> {
        Self::new(merge_terms(terms))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, t| acc + &t.coeff)
    }
}

impl fmt::Display for PureDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

fn check_positive(terms: &[Term]) -> Result<()> {
    match terms.iter().find(|t| !t.coeff.is_positive()) {
        Some(t) => Err(Error::InvalidDecomposition(format!(
            "coefficient {} is not positive",
            rational::format(&t.coeff)
        ))),
        None => Ok(()),
    }
}

/// Sums repeated types, drops zeros, sorts by weight and then lexicographically.
fn merge_terms<I: IntoIterator<Item = Term>>(terms: I) -> Vec<Term> {
    let mut acc: BTreeMap<(i64, DegreeSequence), Rational> = BTreeMap::new();
    for t in terms {
        *acc.entry((t.degrees.weight(), t.degrees))
            .or_insert_with(Rational::zero) += t.coeff;
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((_, d), c)| Term::new(c, d))
        .collect()
}

/// Positive combination of pure diagrams with no order condition on the
/// types. This is what explicit constructions produce before the expansion
/// is straightened into a chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PureCombination {
    terms: Vec<Term>,
}

impl PureCombination {
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        check_positive(&terms)?;
        Ok(Self { terms })
    }

    /// Sums repeated types and sorts them by weight, then lexicographically.
    pub fn merge<I: IntoIterator<Item = Term>>(terms: I) -> Result<Self> {
        Self::new(merge_terms(terms))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, t| acc + &t.coeff)
    }

    pub fn recombine(&self, codim: usize) -> Result<BettiDiagram> {
        recombine_terms(&self.terms, codim)
    }

    /// Succeeds when the types happen to form a chain.
    pub fn into_chain(self) -> Result<PureDecomposition> {
        PureDecomposition::new(self.terms)
    }
}

impl From<PureDecomposition> for PureCombination {
    fn from(dec: PureDecomposition) -> Self {
        Self { terms: dec.terms }
    }
}

impl fmt::Display for PureCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

/// `sum c_k pi(d_k)` as a diagram of codimension `codim`.
pub fn recombine(dec: &PureDecomposition, codim: usize) -> Result<BettiDiagram> {
    recombine_terms(dec.terms(), codim)
}

fn recombine_terms(terms: &[Term], codim: usize) -> Result<BettiDiagram> {
    let mut out = BettiDiagram::zero(codim);
    for t in terms {
        if t.degrees.codim() != codim {
            return Err(Error::CodimMismatch(codim, t.degrees.codim()));
        }
        out = out.add(&pure_diagram(&t.degrees).scale(&t.coeff))?;
    }
    Ok(out)
}

/// Peels pure diagrams off `d` along its minimal shifts.
///
/// At every step the type is the minimal-shift sequence of the remainder
/// and the coefficient is the largest rational keeping the remainder
/// non-negative. Fails with [`Error::NotInCone`] when the remainder gets a
/// negative entry, loses a column, or has minimal shifts that are not
/// strictly increasing. Failure is a report about this expansion only.
pub fn greedy_decompose(d: &BettiDiagram) -> Result<PureDecomposition> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::InvalidInput {
            violated: report.violated,
        });
    }
    let mut remainder = d.clone();
    let mut terms = Vec::new();
    while !remainder.is_zero() {
        let stuck = |terms: Vec<Term>, remainder: BettiDiagram| Error::NotInCone {
            partial: Box::new(PureDecomposition { terms }),
            remainder: Box::new(remainder),
        };
        if !remainder.is_non_negative() {
            return Err(stuck(terms, remainder));
        }
        let Some(shifts) = remainder
            .min_shifts()
            .ok()
            .and_then(|s| DegreeSequence::new(s).ok())
        else {
            return Err(stuck(terms, remainder));
        };
        let pi = pure_diagram(&shifts);
        let coeff = pi
            .entries()
            .map(|(i, j, v)| remainder.get(i, j) / v)
            .min()
            .expect("pure diagrams are non-empty");
        remainder = remainder.sub(&pi.scale(&coeff))?;
        terms.push(Term::new(coeff, shifts));
    }
    Ok(PureDecomposition { terms })
}

/// Greedy expansion of many diagrams.
pub fn decompose_batch(diagrams: &[BettiDiagram], exec: Exec) -> Vec<Result<PureDecomposition>> {
    exec.map(diagrams, greedy_decompose)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundsVerdict {
    StrictlyInside,
    EqualLower,
    EqualUpper,
    /// Both bounds coincide with the value; only possible when they agree.
    EqualBoth,
    Violated(BoundSide),
}

impl BoundsVerdict {
    pub fn is_equality(self) -> bool {
        matches!(
            self,
            BoundsVerdict::EqualLower | BoundsVerdict::EqualUpper | BoundsVerdict::EqualBoth
        )
    }
}

/// `prod (low_i - low_0) <= p! e(D) / beta_0 <= prod (high_i - high_0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower: Rational,
    pub upper: Rational,
    pub scaled_multiplicity: Rational,
    pub verdict: BoundsVerdict,
    pub is_pure: bool,
    /// Set when column 0 spans several degrees, so the bounds were taken
    /// relative to different generator degrees at the two ends.
    pub extended: bool,
}

pub fn check_bounds(d: &BettiDiagram) -> Result<BoundsReport> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::InvalidInput {
            violated: report.violated,
        });
    }
    let bounds = d.shift_bounds()?;
    let (low, high) = (bounds.low(), bounds.high());
    let b0 = d.beta0();
    if b0.is_zero() {
        return Err(Error::ZeroRowZero);
    }
    let p = d.codim();
    let scaled = d.multiplicity()? * rational::factorial(p) / b0;
    let product = |s: &DegreeSequence| {
        s.degrees()[1..]
            .iter()
            .fold(rational::int(1), |acc, v| acc * rational::int(v - s[0]))
    };
    let lower = product(low);
    let upper = product(high);
    let verdict = if scaled < lower {
        BoundsVerdict::Violated(BoundSide::Lower)
    } else if scaled > upper {
        BoundsVerdict::Violated(BoundSide::Upper)
    } else {
        match (scaled == lower, scaled == upper) {
            (true, true) => BoundsVerdict::EqualBoth,
            (true, false) => BoundsVerdict::EqualLower,
            (false, true) => BoundsVerdict::EqualUpper,
            (false, false) => BoundsVerdict::StrictlyInside,
        }
    };
    Ok(BoundsReport {
        lower,
        upper,
        scaled_multiplicity: scaled,
        verdict,
        is_pure: low == high,
        extended: low[0] != high[0],
    })
}

/// `high_{i-1} <= low_i` for every `1 <= i <= p`.
pub fn is_quasipure(d: &BettiDiagram) -> Result<bool> {
    let (low, high) = (d.min_shifts()?, d.max_shifts()?);
    Ok((1..low.len()).all(|i| high[i - 1] <= low[i]))
}

/// `high_{i-1} < low_i` for every `1 <= i <= p`.
pub fn is_strictly_quasipure(d: &BettiDiagram) -> Result<bool> {
    let (low, high) = (d.min_shifts()?, d.max_shifts()?);
    Ok((1..low.len()).all(|i| high[i - 1] < low[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn seq(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    fn diagram(codim: usize, e: &[(usize, i64, i64)]) -> BettiDiagram {
        BettiDiagram::from_entries(codim, e.iter().map(|&(i, j, v)| (i, j, int(v)))).unwrap()
    }

    fn beta_a() -> BettiDiagram {
        diagram(2, &[(0, 0, 1), (1, 2, 2), (2, 3, 1), (1, 4, 1), (2, 5, 1)])
    }

    fn terms(t: &[(Rational, &[i64])]) -> Vec<Term> {
        t.iter()
            .map(|(c, d)| Term::new(c.clone(), seq(d)))
            .collect()
    }

    #[test]
    fn greedy_on_worked_example() {
        let dec = greedy_decompose(&beta_a()).unwrap();
        assert_eq!(
            dec.terms(),
            terms(&[
                (frac(1, 2), &[0, 2, 3]),
                (frac(3, 10), &[0, 2, 5]),
                (frac(1, 5), &[0, 4, 5])
            ])
            .as_slice()
        );
        assert_eq!(recombine(&dec, 2).unwrap(), beta_a());
        assert_eq!(dec.coefficient_sum(), int(1));
    }

    #[test]
    fn greedy_on_scaled_pure() {
        let d = pure_diagram(&seq(&[0, 3, 4, 9])).scale(&frac(7, 2));
        let dec = greedy_decompose(&d).unwrap();
        assert_eq!(
            dec.terms(),
            terms(&[(frac(7, 2), &[0, 3, 4, 9])]).as_slice()
        );
    }

    #[test]
    fn greedy_on_koszul_two_three() {
        let d = diagram(2, &[(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)]);
        let dec = greedy_decompose(&d).unwrap();
        assert_eq!(
            dec.terms(),
            terms(&[(frac(3, 5), &[0, 2, 5]), (frac(2, 5), &[0, 3, 5])]).as_slice()
        );
    }

    #[test]
    fn greedy_rejects_invalid_and_reports_stuck() {
        let bad = diagram(1, &[(0, 0, 1)]);
        assert_eq!(
            greedy_decompose(&bad),
            Err(Error::InvalidInput { violated: vec![0] })
        );
        // pi(0,1) - pi(0,2) + pi(0,3): valid but not non-negative
        let d = diagram(1, &[(0, 0, 1), (1, 1, 1), (1, 2, -1), (1, 3, 1)]);
        match greedy_decompose(&d) {
            Err(Error::NotInCone { remainder, .. }) => assert_eq!(*remainder, d),
            other => panic!("unexpected {other:?}"),
        }
        // min shifts not strictly increasing
        let d = diagram(1, &[(0, 0, 1), (0, 1, 1), (1, 1, 2)]);
        assert!(d.validate().is_valid());
        assert!(matches!(greedy_decompose(&d), Err(Error::NotInCone { .. })));
    }

    #[test]
    fn recombine_examples() {
        assert!(recombine(&PureDecomposition::default(), 2)
            .unwrap()
            .is_zero());
        let single = PureDecomposition::new(terms(&[(int(3), &[0, 2, 5])])).unwrap();
        assert_eq!(
            recombine(&single, 2).unwrap(),
            diagram(2, &[(0, 0, 3), (1, 2, 5), (2, 5, 2)])
        );
        assert_eq!(recombine(&single, 3), Err(Error::CodimMismatch(3, 2)));
    }

    #[test]
    fn decomposition_invariants_enforced() {
        assert!(PureDecomposition::new(terms(&[(int(0), &[0, 1])])).is_err());
        assert!(PureDecomposition::new(terms(&[(int(1), &[0, 2]), (int(1), &[0, 1])])).is_err());
        let merged = PureDecomposition::merge(terms(&[
            (int(1), &[0, 2]),
            (int(1), &[0, 1]),
            (int(2), &[0, 2]),
        ]))
        .unwrap();
        assert_eq!(
            merged.terms(),
            terms(&[(int(1), &[0, 1]), (int(3), &[0, 2])]).as_slice()
        );
    }

    #[test]
    fn bounds_examples() {
        let r = check_bounds(&beta_a()).unwrap();
        assert_eq!(r.scaled_multiplicity, int(10));
        assert_eq!((r.lower.clone(), r.upper.clone()), (int(6), int(20)));
        assert_eq!(r.verdict, BoundsVerdict::StrictlyInside);
        assert!(!r.is_pure && !r.extended);

        let r = check_bounds(&pure_diagram(&seq(&[0, 2, 3]))).unwrap();
        assert_eq!(r.scaled_multiplicity, int(6));
        assert_eq!(r.verdict, BoundsVerdict::EqualBoth);
        assert!(r.is_pure);

        let ci = diagram(2, &[(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)]);
        let r = check_bounds(&ci).unwrap();
        assert_eq!(r.scaled_multiplicity, int(12));
        assert_eq!((r.lower, r.upper), (int(10), int(15)));
        assert_eq!(r.verdict, BoundsVerdict::StrictlyInside);
    }

    #[test]
    fn bounds_on_translated_and_extended_inputs() {
        let r = check_bounds(&beta_a().translate(3)).unwrap();
        assert_eq!(r.verdict, BoundsVerdict::StrictlyInside);
        assert_eq!(r.scaled_multiplicity, int(10));

        let two_gens = pure_diagram(&seq(&[0, 2, 3]))
            .add(&pure_diagram(&seq(&[1, 3, 4])))
            .unwrap();
        let r = check_bounds(&two_gens).unwrap();
        assert!(r.extended);
        assert_eq!(r.scaled_multiplicity, int(6));
    }

    #[test]
    fn quasipurity() {
        assert!(!is_quasipure(&beta_a()).unwrap());
        assert!(!is_strictly_quasipure(&beta_a()).unwrap());
        let pi = pure_diagram(&seq(&[0, 2, 4]));
        assert!(is_strictly_quasipure(&pi).unwrap());
        let q = pure_diagram(&seq(&[0, 2, 4]))
            .add(&pure_diagram(&seq(&[0, 3, 4])))
            .unwrap();
        // max (0,3,4), min (0,2,4): 0 <= 2, 3 <= 4
        assert!(is_quasipure(&q).unwrap());
        assert!(is_strictly_quasipure(&q).unwrap());
        let touching = pure_diagram(&seq(&[0, 2, 4]))
            .add(&pure_diagram(&seq(&[0, 2, 5])))
            .unwrap()
            .add(&pure_diagram(&seq(&[0, 4, 5])))
            .unwrap();
        // max column 1 is 4, min column 2 is 4
        assert!(is_quasipure(&touching).unwrap());
        assert!(!is_strictly_quasipure(&touching).unwrap());
    }

    #[test]
    fn batch_matches_single() {
        let ds = vec![beta_a(), pure_diagram(&seq(&[0, 1, 5]))];
        let seq_out = decompose_batch(&ds, Exec::Sequential);
        assert_eq!(seq_out, decompose_batch(&ds, Exec::Parallel));
        assert_eq!(seq_out[0], greedy_decompose(&ds[0]));
    }
}
