//! Diagrams of specific module families: complete intersections, powers of
//! the maximal ideal, explicit two-variable monomial modules with pure
//! resolutions, and Gorenstein algebras of codimension three.

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::One;

use crate::decomposition::{greedy_decompose, PureCombination, PureDecomposition, Term};
use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::poly::HVector;
use crate::pure::{pure_diagram, DegreeSequence};
use crate::rational::{self, Rational};
use crate::reductions::{phi, phi_inverse, step_up_expand};

/// Koszul complex of a regular sequence of the given degrees:
/// `b[i][j]` counts the `i`-subsets of `degrees` summing to `j`.
pub fn koszul_diagram(degrees: &[i64]) -> Result<BettiDiagram> {
    if degrees.is_empty() || degrees.iter().any(|&d| d <= 0) {
        return Err(Error::InvalidDegrees);
    }
    let mut current = BettiDiagram::from_entries(0, [(0, 0, Rational::one())])?;
    for &d in degrees {
        current = koszul_step(&current, d)?;
    }
    Ok(current)
}

/// `b'[i][j] = b[i][j] + b[i-1][j-d]`: adjoining one more element of degree `d`.
pub fn koszul_step(prev: &BettiDiagram, d: i64) -> Result<BettiDiagram> {
    prev.with_codim(prev.codim() + 1)?
        .add(&prev.shift_columns().translate(d))
}

/// Diagram of `R / m^(j+1-g) (-g)` in `p` variables: `pi(g, j+1, ..., j+p)`.
pub fn power_ideal_diagram(g: i64, j: i64, p: usize) -> Result<BettiDiagram> {
    if j < g || p == 0 {
        return Err(Error::InvalidDegrees);
    }
    let mut d = vec![g];
    d.extend((1..=p as i64).map(|k| j + k));
    Ok(pure_diagram(&DegreeSequence::new(d)?))
}

/// A module `I / J` of monomial ideals in `k[x, y]`, twisted so that its
/// Betti diagram should be `scale * pi(d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialModuleSpec {
    /// Generators of `I` as `(x exponent, y exponent)`.
    pub gens_i: Vec<(u64, u64)>,
    pub gens_j: Vec<(u64, u64)>,
    /// `a - d_0`; degree `t` of the twisted module is degree `t + twist` of `I / J`.
    pub twist: i64,
    pub claimed_scale: i64,
    pub claimed_type: DegreeSequence,
}

fn divides(g: (u64, u64), m: (u64, u64)) -> bool {
    g.0 <= m.0 && g.1 <= m.1
}

fn in_ideal(gens: &[(u64, u64)], m: (u64, u64)) -> bool {
    gens.iter().any(|&g| divides(g, m))
}

impl MonomialModuleSpec {
    /// The h-vector of `claimed_scale * pi(claimed_type)`.
    pub fn claimed_h_vector(&self) -> Result<HVector> {
        pure_diagram(&self.claimed_type)
            .scale(&rational::int(self.claimed_scale))
            .h_vector()
    }

    /// A degree window containing every non-zero value of the Hilbert
    /// function and of the claimed h-vector, with one zero on each side.
    pub fn support_window(&self) -> RangeInclusive<i64> {
        let top = self
            .gens_j
            .iter()
            .map(|&(u, v)| (u + v) as i64)
            .max()
            .unwrap_or(0);
        let d = self.claimed_type.degrees();
        let lo = d[0].min(-self.twist) - 1;
        let hi = (2 * top - self.twist).max(d[d.len() - 1]) + 1;
        lo..=hi
    }

    /// Compares the Hilbert function with the claimed h-vector on
    /// [`Self::support_window`].
    pub fn certify(&self) -> Result<bool> {
        let window = self.support_window();
        let hf = hilbert_function(self, window.clone())?;
        let h = self.claimed_h_vector()?;
        Ok(window.zip(hf).all(|(t, v)| h.coeff(t) == rational::int(v)))
    }
}

fn monomial(u: u64, v: u64) -> String {
    let var = |name: &str, e: u64| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    };
    let s = format!("{}{}", var("x", u), var("y", v));
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

impl fmt::Display for MonomialModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |gens: &[(u64, u64)]| {
            gens.iter()
                .map(|&(u, v)| monomial(u, v))
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(f, "I = ({})", list(&self.gens_i))?;
        writeln!(f, "J = ({})", list(&self.gens_j))?;
        writeln!(f, "twist {}", self.twist)?;
        write!(
            f,
            "claimed {} * pi({})",
            self.claimed_scale, self.claimed_type
        )
    }
}

/// For `d = (d_0, d_1, d_2)` with `a = (d_1-d_0)(d_2-d_1-1)` and
/// `b = (d_1-d_0)(d_2-d_1)`:
/// `I = (x^(a-i(d_1-d_0)) y^(i(d_1-d_0)))` for `i < d_2-d_1` and
/// `J = (x^(b-i(d_2-d_1)) y^(i(d_2-d_1)))` for `i <= d_1-d_0`.
///
/// When `d_2 = d_1 + 1`, `a = 0` and `I` is the whole ring.
pub fn codim2_pure_construction(d: &DegreeSequence) -> Result<MonomialModuleSpec> {
    if d.len() != 3 {
        return Err(Error::LengthMismatch(d.len(), 3));
    }
    let g1 = (d[1] - d[0]) as u64;
    let g2 = (d[2] - d[1]) as u64;
    let a = g1 * (g2 - 1);
    let b = g1 * g2;
    Ok(MonomialModuleSpec {
        gens_i: (0..g2).map(|i| (a - i * g1, i * g1)).collect(),
        gens_j: (0..=g1).map(|i| (b - i * g2, i * g2)).collect(),
        twist: a as i64 - d[0],
        claimed_scale: g2 as i64,
        claimed_type: d.clone(),
    })
}

/// Number of monomials of degree `t + twist` in `I` but not in `J`, for each
/// `t` in `range`.
pub fn hilbert_function(spec: &MonomialModuleSpec, range: RangeInclusive<i64>) -> Result<Vec<i64>> {
    if let Some(&g) = spec.gens_j.iter().find(|&&m| !in_ideal(&spec.gens_i, m)) {
        return Err(Error::NotContained(g));
    }
    Ok(range
        .map(|t| {
            let total = t + spec.twist;
            if total < 0 {
                return 0;
            }
            let total = total as u64;
            (0..=total)
                .filter(|&u| {
                    let m = (u, total - u);
                    in_ideal(&spec.gens_i, m) && !in_ideal(&spec.gens_j, m)
                })
                .count() as i64
        })
        .collect())
}

/// Socle degree `f` and generator degrees `a_1 <= ... <= a_{2k+1}` of a
/// height-three Gorenstein ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinData {
    socle_degree: i64,
    gen_degrees: Vec<i64>,
}

impl GorensteinData {
    /// Accepts data with an odd number `2k+1 >= 3` of positive sorted degrees,
    /// `sum a_i = k f`, and `r_i + r_{2k+3-i} > 0` for `i = 2..=k+1` where
    /// `r_i = f - 2 a_i`.
    pub fn new(socle_degree: i64, gen_degrees: Vec<i64>) -> Result<Self> {
        let n = gen_degrees.len();
        let invalid = |msg: &str| Err(Error::InvalidSocle(msg.to_string()));
        if n < 3 || n.is_multiple_of(2) {
            return invalid("need an odd number of at least three generators");
        }
        if gen_degrees.windows(2).any(|w| w[0] > w[1]) {
            return invalid("generator degrees must be sorted");
        }
        if gen_degrees[0] <= 0 {
            return invalid("generator degrees must be positive");
        }
        let k = (n as i64 - 1) / 2;
        if gen_degrees.iter().sum::<i64>() != k * socle_degree {
            return invalid("generator degrees must sum to k times the socle degree");
        }
        let r = |i: usize| socle_degree - 2 * gen_degrees[i - 1];
        if (2..=(k as usize + 1)).any(|i| r(i) + r(2 * k as usize + 3 - i) <= 0) {
            return invalid("r_i + r_(2k+3-i) > 0 fails");
        }
        Ok(Self {
            socle_degree,
            gen_degrees,
        })
    }

    pub fn socle_degree(&self) -> i64 {
        self.socle_degree
    }

    pub fn gen_degrees(&self) -> &[i64] {
        &self.gen_degrees
    }

    pub fn k(&self) -> usize {
        (self.gen_degrees.len() - 1) / 2
    }

    /// Diagram of `0 -> F_2 -> F_1 -> R` with `F_1` on the first `k+1`
    /// generator degrees and `F_2` on `f - a_i` for the last `k`.
    pub fn codim2_part(&self) -> Result<BettiDiagram> {
        let k = self.k();
        let f = self.socle_degree;
        let mut d = BettiDiagram::zero(2);
        d.accumulate(0, 0, Rational::one())?;
        for &a in &self.gen_degrees[..=k] {
            d.accumulate(1, a, Rational::one())?;
        }
        for &a in &self.gen_degrees[k + 1..] {
            d.accumulate(2, f - a, Rational::one())?;
        }
        Ok(d)
    }
}

/// `1` at `(0,0)`, `1` at `(1, a_i)` and at `(2, f - a_i)` per generator,
/// `1` at `(3, f)`.
pub fn gorenstein3_diagram(g: &GorensteinData) -> Result<BettiDiagram> {
    let f = g.socle_degree;
    let mut d = BettiDiagram::zero(3);
    d.accumulate(0, 0, Rational::one())?;
    d.accumulate(3, f, Rational::one())?;
    for &a in &g.gen_degrees {
        d.accumulate(1, a, Rational::one())?;
        d.accumulate(2, f - a, Rational::one())?;
    }
    Ok(d)
}

/// The split of the resolution into the codimension-two part and its
/// `f`-twisted dual: the codimension-two part is expanded greedily and each
/// term `pi(0, x, y)` is paired with `pi(f-y, f-x, f)` through the step-up
/// expansion. The result is a non-negative combination of pure diagrams
/// summing to [`gorenstein3_diagram`], with duplicate types merged. The types
/// need not be comparable.
pub fn gorenstein3_split(g: &GorensteinData) -> Result<PureCombination> {
    let f = g.socle_degree;
    let inner = greedy_decompose(&g.codim2_part()?)?;
    let mut terms = Vec::new();
    for t in inner.terms() {
        let d = t.degrees.degrees();
        let dual = DegreeSequence::new(vec![f - d[2], f - d[1], f])?;
        for piece in step_up_expand(&t.degrees, &dual)?.terms() {
            terms.push(Term::new(&t.coeff * &piece.coeff, piece.degrees.clone()));
        }
    }
    PureCombination::merge(terms)
}

/// Chain decomposition of [`gorenstein3_diagram`].
///
/// The last column sits at `f` alone, so `phi_3` carries the diagram to
/// codimension two, where greedy expansion succeeds; each term `c * pi(e)` is
/// carried back to a multiple of `pi(e, f)`. The types stay a chain because
/// appending `f` preserves the order.
pub fn gorenstein3_decompose(g: &GorensteinData) -> Result<PureDecomposition> {
    let f = g.socle_degree;
    let reduced = phi(&gorenstein3_diagram(g)?, 3)?;
    let inner = greedy_decompose(&reduced)?;
    let mut terms = Vec::with_capacity(inner.len());
    for t in inner.terms() {
        let lifted = phi_inverse(&pure_diagram(&t.degrees).scale(&t.coeff), 3, f)?;
        terms.push(Term::new(lifted.get(0, t.degrees[0]), t.degrees.push(f)?));
    }
    PureDecomposition::new(terms)
}
