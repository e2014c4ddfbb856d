//! Laurent polynomials in one variable with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Sparse Laurent polynomial; stored coefficients are never zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

/// The h-vector `S_D(t) / (1-t)^p` of a diagram.
pub type HVector = LaurentPoly;

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            acc += c * pow(t, *e);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, v)| (*e, v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .map(|(e, c)| (e - 1, c * rational::int(*e))),
        )
    }

    /// Euler operator `t d/dt`: multiplies the coefficient of `t^j` by `j`.
    pub fn euler_derivative(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, c)| (*e, c * rational::int(*e))))
    }

    /// Exact quotient by `(1 - t)`, or `None` when the division leaves a remainder.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(Self::zero()),
        };
        // (1 - t) q = s  <=>  q_n = s_n + q_{n-1}
        let mut out = Self::zero();
        let mut running = Rational::zero();
        for e in lo..hi {
            running += self.coeff(e);
            out.add_term(e, running.clone());
        }
        running += self.coeff(hi);
        running.is_zero().then_some(out)
    }

    /// Exact quotient by `(1 - t)^p`.
    pub fn div_one_minus_t_pow(&self, p: usize) -> Result<Self> {
        let mut q = self.clone();
        for _ in 0..p {
            q = q.div_one_minus_t().ok_or(Error::NonDivisible(p))?;
        }
        Ok(q)
    }
}

fn pow(t: &Rational, e: i64) -> Rational {
    let base = if e < 0 { t.recip() } else { t.clone() };
    (0..e.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &base)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let body = rational::format(&mag);
            let power = if *e == 1 {
                "t".to_string()
            } else {
                format!("t^{e}")
            };
            match *e {
                0 => write!(f, "{body}")?,
                _ if mag.is_one() => write!(f, "{power}")?,
                _ => write!(f, "{body}*{power}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn divides_by_one_minus_t_squared() {
        // 1 - 3t^2 + 2t^3 = (1-t)^2 (1 + 2t)
        let s = poly(&[(0, 1), (2, -3), (3, 2)]);
        assert_eq!(s.div_one_minus_t_pow(2).unwrap(), poly(&[(0, 1), (1, 2)]));
    }

    #[test]
    fn division_reports_remainder() {
        let s = poly(&[(0, 1)]);
        assert_eq!(s.div_one_minus_t_pow(1), Err(Error::NonDivisible(1)));
    }

    #[test]
    fn laurent_division_with_negative_exponents() {
        // t^-2 (1-t) = t^-2 - t^-1
        let s = poly(&[(-2, 1), (-1, -1)]);
        assert_eq!(s.div_one_minus_t().unwrap(), poly(&[(-2, 1)]));
    }

    #[test]
    fn derivatives() {
        let s = poly(&[(0, 1), (2, -3), (3, 2)]);
        assert_eq!(s.derivative(), poly(&[(1, -6), (2, 6)]));
        assert_eq!(s.euler_derivative(), poly(&[(2, -6), (3, 6)]));
    }

    #[test]
    fn display() {
        let s = poly(&[(0, 1), (2, -3), (3, 2)]);
        assert_eq!(s.to_string(), "1 - 3*t^2 + 2*t^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            poly(&[(0, 3), (1, 6), (2, 4)]).to_string(),
            "3 + 6*t + 4*t^2"
        );
    }
}
