//! Independent oracles shared by the integration tests. None of these call
//! into the code paths they are used to check.

#![allow(dead_code)]

use betti_core::rational::{self, Rational};
use betti_core::{BettiDiagram, DegreeSequence, PureDecomposition, ShiftBounds, Term};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

pub fn seq(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).unwrap()
}

pub fn bounds(lo: &[i64], hi: &[i64]) -> ShiftBounds {
    ShiftBounds::new(seq(lo), seq(hi)).unwrap()
}

/// Coefficients of `t^c S_D(t)` as a dense polynomial, `c` chosen so every
/// exponent is non-negative.
fn dense_s(d: &BettiDiagram) -> Vec<Rational> {
    let lo = d.entries().map(|(_, j, _)| j).min().unwrap_or(0);
    let hi = d.entries().map(|(_, j, _)| j).max().unwrap_or(0);
    let mut c = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (i, j, v) in d.entries() {
        let slot = &mut c[(j - lo) as usize];
        if i % 2 == 0 {
            *slot += v;
        } else {
            *slot -= v;
        }
    }
    c
}

/// `d^m/dt^m S(1) = 0` for each `m < p`, by repeated symbolic
/// differentiation of the dense polynomial.
pub fn derivative_conditions(d: &BettiDiagram) -> Vec<bool> {
    let mut poly = dense_s(d);
    let mut out = Vec::new();
    for _ in 0..d.codim() {
        let at_one = poly.iter().fold(Rational::zero(), |a, c| a + c);
        out.push(at_one.is_zero());
        poly = poly
            .iter()
            .enumerate()
            .skip(1)
            .map(|(e, c)| c * rational::int(e as i64))
            .collect();
    }
    out
}

/// `e = (-1)^p / p! * sum (-1)^i j^p b[i][j]`, valid on diagrams satisfying
/// the lower equations.
pub fn multiplicity_oracle(d: &BettiDiagram) -> Rational {
    let p = d.codim();
    let mut acc = Rational::zero();
    for (i, j, v) in d.entries() {
        let t = v * Rational::from_integer(BigInt::from(j).pow(p as u32));
        if i % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    let fact = (1..=p as i64).fold(Rational::one(), |a, k| a * rational::int(k));
    let sign = if p.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    acc * sign / fact
}

/// Every strictly increasing tuple of the given length inside `[0, max]`.
pub fn increasing_tuples(len: usize, max: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, start: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..=max {
            cur.push(v);
            go(len, v + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 0, max, &mut Vec::new(), &mut out);
    out
}

/// Brute-force poset: all tuples in the box, filtered.
pub fn brute_force_poset(b: &ShiftBounds) -> Vec<Vec<i64>> {
    let n = b.low().len();
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (b.low()[k]..=b.high()[k]).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.retain(|v| v.windows(2).all(|w| w[0] < w[1]));
    out
}

pub fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Entry matrix of the pure diagrams of `chain` over the positions they use.
pub fn entry_matrix(chain: &[DegreeSequence]) -> Vec<Vec<Rational>> {
    let mut positions: Vec<(usize, i64)> = chain
        .iter()
        .flat_map(|d| {
            d.degrees()
                .iter()
                .enumerate()
                .map(|(i, &j)| (i, j))
                .collect::<Vec<_>>()
        })
        .collect();
    positions.sort();
    positions.dedup();
    chain
        .iter()
        .map(|d| {
            let pi = betti_core::pure_diagram(d);
            positions.iter().map(|&(i, j)| pi.get(i, j)).collect()
        })
        .collect()
}

/// Random walk from `low` to `high` through covers.
pub fn random_maximal_chain<R: Rng>(b: &ShiftBounds, rng: &mut R) -> Vec<DegreeSequence> {
    let mut cur = b.low().degrees().to_vec();
    let mut chain = vec![seq(&cur)];
    loop {
        let n = cur.len();
        let options: Vec<usize> = (0..n)
            .filter(|&k| cur[k] < b.high()[k] && (k + 1 == n || cur[k] + 1 < cur[k + 1]))
            .collect();
        if options.is_empty() {
            return chain;
        }
        let k = options[rng.gen_range(0..options.len())];
        cur[k] += 1;
        chain.push(seq(&cur));
    }
}

/// Random bounds with `d_0 = 0`, codimension `p`, per-position width at most
/// `max_width`.
pub fn random_bounds<R: Rng>(p: usize, max_width: i64, rng: &mut R) -> ShiftBounds {
    loop {
        let mut low = vec![0];
        for _ in 0..p {
            let last = *low.last().unwrap();
            low.push(last + rng.gen_range(1..=3));
        }
        let high: Vec<i64> = low
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                if i == 0 {
                    l
                } else {
                    l + rng.gen_range(0..=max_width)
                }
            })
            .collect();
        if high.windows(2).all(|w| w[0] < w[1]) {
            return bounds(&low, &high);
        }
    }
}

pub fn random_positive_rational<R: Rng>(rng: &mut R) -> Rational {
    rational::frac(rng.gen_range(1..=30), rng.gen_range(1..=12))
}

/// Terms from a random sub-chain of a random maximal chain.
pub fn random_chain_decomposition<R: Rng>(p: usize, rng: &mut R) -> PureDecomposition {
    let b = random_bounds(p, 4, rng);
    let chain = random_maximal_chain(&b, rng);
    let mut terms: Vec<Term> = chain
        .into_iter()
        .filter_map(|d| rng.gen_bool(0.5).then_some(d))
        .collect::<Vec<_>>()
        .into_iter()
        .map(|d| Term::new(random_positive_rational(rng), d))
        .collect();
    if terms.is_empty() {
        terms.push(Term::new(random_positive_rational(rng), b.high().clone()));
    }
    PureDecomposition::new(terms).unwrap()
}

/// Number of poset elements outside `face` that keep it a chain.
pub fn extension_count(poset: &[Vec<i64>], face: &[Vec<i64>]) -> usize {
    poset
        .iter()
        .filter(|e| !face.contains(e))
        .filter(|e| face.iter().all(|f| leq(f, e) || leq(e, f)))
        .count()
}
