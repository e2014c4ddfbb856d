//! The codimension-lowering isomorphism `phi_k` and the step-up pairing of
//! two pure diagrams into one diagram of codimension `p + 1`.
//!
//! When column `k` of a diagram is concentrated in a single degree `pivot`,
//! `phi_k` drops that column and multiplies every remaining entry
//! `b[i][j]` by `|pivot - j|`. On S-polynomials this is
//! `S -> pivot * S - t S'`, which lowers the order of vanishing at `t = 1`
//! by exactly one.

use num_traits::{One, Zero};

use crate::decomposition::{PureCombination, Term};
use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::pure::{pure_diagram, pure_multiplicity, DegreeSequence};
use crate::rational::{self, Rational};

/// Column index and the single degree its entries sit in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiContext {
    pub k: usize,
    pub pivot: i64,
}

impl PhiContext {
    /// Reads the pivot off column `k`. `None` for the zero diagram.
    pub fn infer(d: &BettiDiagram, k: usize) -> Result<Option<Self>> {
        if d.codim() == 0 || k > d.codim() {
            return Err(Error::ColumnOutOfRange {
                k,
                codim: d.codim(),
            });
        }
        if d.is_zero() {
            return Ok(None);
        }
        let mut degrees = d.column(k).map(|(j, _)| j);
        let pivot = degrees.next().ok_or(Error::ColumnNotConcentrated(k))?;
        if degrees.next().is_some() {
            return Err(Error::ColumnNotConcentrated(k));
        }
        Ok(Some(Self { k, pivot }))
    }
}

/// Errors unless columns before `k` sit strictly below `pivot` and columns
/// from `first_after` on sit strictly above it.
fn check_separation(d: &BettiDiagram, k: usize, first_after: usize, pivot: i64) -> Result<()> {
    let ok = d.entries().all(|(i, j, _)| {
        (i < k && j < pivot) || (i >= first_after && j > pivot) || (i >= k && i < first_after)
    });
    if ok {
        Ok(())
    } else {
        Err(Error::PivotNotSeparating { pivot })
    }
}

/// `phi_k(D)`: codimension `p - 1`, entries `|pivot - j|` times the
/// surviving entries of `D`.
pub fn phi(d: &BettiDiagram, k: usize) -> Result<BettiDiagram> {
    match PhiContext::infer(d, k)? {
        None => Ok(BettiDiagram::zero(d.codim() - 1)),
        Some(ctx) => phi_with(d, ctx),
    }
}

pub fn phi_with(d: &BettiDiagram, ctx: PhiContext) -> Result<BettiDiagram> {
    let PhiContext { k, pivot } = ctx;
    if d.codim() == 0 || k > d.codim() {
        return Err(Error::ColumnOutOfRange {
            k,
            codim: d.codim(),
        });
    }
    if d.column(k).any(|(j, _)| j != pivot) {
        return Err(Error::ColumnNotConcentrated(k));
    }
    check_separation(d, k, k + 1, pivot)?;
    BettiDiagram::from_entries(
        d.codim() - 1,
        d.entries().filter(|(i, _, _)| *i != k).map(|(i, j, v)| {
            let target = if i < k { i } else { i - 1 };
            (target, j, v * rational::int((pivot - j).abs()))
        }),
    )
}

/// Inverse of `phi_k`: divides by `|pivot - j|`, reinserts column `k` and
/// fills its single entry at `pivot` from the `m = 0` equation.
pub fn phi_inverse(e: &BettiDiagram, k: usize, pivot: i64) -> Result<BettiDiagram> {
    let codim = e.codim() + 1;
    if k > codim {
        return Err(Error::ColumnOutOfRange { k, codim });
    }
    if e.entries().any(|(_, j, _)| j == pivot) {
        return Err(Error::DegreeCollision(pivot));
    }
    check_separation(e, k, k, pivot)?;
    let mut out = BettiDiagram::from_entries(
        codim,
        e.entries().map(|(i, j, v)| {
            let target = if i < k { i } else { i + 1 };
            (target, j, v / rational::int((pivot - j).abs()))
        }),
    )?;
    // (-1)^k x + sum_{i != k} (-1)^i b_i = 0
    let others = out.power_sum(0);
    let forced = if k.is_multiple_of(2) { -others } else { others };
    out.accumulate(k, pivot, forced)?;
    Ok(out)
}

fn check_pair(d: &DegreeSequence, d_prime: &DegreeSequence) -> Result<()> {
    if d.len() != d_prime.len() {
        return Err(Error::LengthMismatch(d.len(), d_prime.len()));
    }
    if (0..d.len()).any(|i| d[i] >= d_prime[i]) {
        return Err(Error::NotDominated {
            d: d.degrees().to_vec(),
            d_prime: d_prime.degrees().to_vec(),
        });
    }
    Ok(())
}

/// `D[i][j] = pi(d)[i][j] + e(pi(d)) / e(pi(d')) * pi(d')[i-1][j]`, a diagram of
/// codimension `p + 1` whenever `d_i < d'_i` for all `i`.
pub fn step_up_combine(d: &DegreeSequence, d_prime: &DegreeSequence) -> Result<BettiDiagram> {
    check_pair(d, d_prime)?;
    let ratio = pure_multiplicity(d) / pure_multiplicity(d_prime);
    pure_diagram(d)
        .with_codim(d.len())?
        .add(&pure_diagram(d_prime).shift_columns().scale(&ratio))
}

/// Non-negative expansion of [`step_up_combine`] into pure diagrams.
///
/// With `d_0 = 0`, the pure diagram `pi(d_0, ..., d_p, d'_p)` is removed with
/// coefficient `(d'_p - d_p) / d'_p`; applying `phi` to the last column of the
/// rest gives `d_p` times the step-up pair of the truncated sequences, which
/// is expanded recursively and mapped back. Other inputs are translated to
/// `d_0 = 0` first. The resulting types need not be comparable.
pub fn step_up_expand(d: &DegreeSequence, d_prime: &DegreeSequence) -> Result<PureCombination> {
    check_pair(d, d_prime)?;
    let shift = d[0];
    let terms = expand_normalized(&d.translate(-shift), &d_prime.translate(-shift))?;
    PureCombination::merge(
        terms
            .into_iter()
            .map(|t| Term::new(t.coeff, t.degrees.translate(shift))),
    )
}

fn expand_normalized(d: &DegreeSequence, d_prime: &DegreeSequence) -> Result<Vec<Term>> {
    debug_assert_eq!(d[0], 0);
    let p = d.codim();
    if p == 0 {
        return Ok(vec![Term::new(
            Rational::one(),
            DegreeSequence::new(vec![d[0], d_prime[0]])?,
        )]);
    }
    let (top, top_prime) = (d[p], d_prime[p]);
    let top_prime_q = rational::int(top_prime);
    let mut terms = vec![Term::new(
        rational::int(top_prime - top) / &top_prime_q,
        d.push(top_prime)?,
    )];
    let lifted_scale = rational::int(top) / &top_prime_q;
    for t in expand_normalized(&d.without(p)?, &d_prime.without(p)?)? {
        debug_assert!(t.degrees[0] == 0);
        let coeff = &t.coeff * &lifted_scale;
        if !coeff.is_zero() {
            terms.push(Term::new(coeff, t.degrees.push(top_prime)?));
        }
    }
    Ok(terms)
}
