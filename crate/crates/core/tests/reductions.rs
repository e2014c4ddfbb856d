mod common;

use betti_core::rational::{self, Rational};
use betti_core::reductions::phi_with;
use betti_core::{
    greedy_decompose, phi, phi_inverse, pure_diagram, recombine, step_up_combine, step_up_expand,
    BettiDiagram, DegreeSequence, Exec, PhiContext,
};
use common::{increasing_tuples, random_positive_rational, seq};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Valid diagram whose column `k` sits at one degree: a positive
/// combination of pure diagrams sharing `d_k = pivot`.
fn random_concentrated(rng: &mut ChaCha8Rng) -> (BettiDiagram, usize, i64) {
    let p = rng.gen_range(1..=4);
    let k = rng.gen_range(0..=p);
    let pivot = 6;
    let pool: Vec<Vec<i64>> = increasing_tuples(p + 1, 12)
        .into_iter()
        .filter(|t| t[k] == pivot)
        .collect();
    let n = rng.gen_range(1..=4);
    let d = (0..n).fold(BettiDiagram::zero(p), |acc, _| {
        let t = &pool[rng.gen_range(0..pool.len())];
        let c = if rng.gen_bool(0.2) {
            -random_positive_rational(rng)
        } else {
            random_positive_rational(rng)
        };
        acc.add(&pure_diagram(&seq(t)).scale(&c)).unwrap()
    });
    (d, k, pivot)
}

#[test]
fn phi_identity_and_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 150 {
        let (d, k, pivot) = random_concentrated(&mut rng);
        if d.column(k).next().is_none() {
            continue;
        }
        checked += 1;
        let img = phi(&d, k).unwrap();
        assert_eq!(img.codim(), d.codim() - 1);
        assert!(img.validate().is_valid());
        let s = d.s_polynomial();
        let expected = s.scale(&rational::int(pivot)).sub(&s.euler_derivative());
        assert_eq!(img.s_polynomial(), expected);
        assert_eq!(phi_inverse(&img, k, pivot).unwrap(), d);
        let again = phi_inverse(&img, k, pivot).unwrap();
        assert_eq!(phi(&again, k).unwrap(), img);
        assert_eq!(
            PhiContext::infer(&d, k).unwrap(),
            Some(PhiContext { k, pivot })
        );
        assert_eq!(phi_with(&d, PhiContext { k, pivot }).unwrap(), img);
    }
}

#[test]
fn phi_inverse_then_phi_on_low_codimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        // arbitrary valid diagram with every degree away from the pivot
        let p = rng.gen_range(0..=3);
        let k = rng.gen_range(0..=p + 1);
        let pivot = 7;
        let pool: Vec<Vec<i64>> = increasing_tuples(p + 2, 14)
            .into_iter()
            .filter(|t| t[k] == pivot)
            .map(|mut t| {
                t.remove(k);
                t
            })
            .collect();
        let e = (0..3).fold(BettiDiagram::zero(p), |acc, _| {
            let t = &pool[rng.gen_range(0..pool.len())];
            acc.add(&pure_diagram(&seq(t)).scale(&random_positive_rational(&mut rng)))
                .unwrap()
        });
        let d = phi_inverse(&e, k, pivot).unwrap();
        assert!(d.validate().is_valid());
        assert_eq!(phi(&d, k).unwrap(), e);
    }
}

fn shifted_by_one(d: &DegreeSequence) -> bool {
    d.degrees().iter().all(|&x| x >= 0)
}

#[test]
fn step_up_expansions_for_all_small_pairs() {
    let mut pairs = Vec::new();
    for len in 1..=5 {
        let tuples = increasing_tuples(len, 12);
        for a in tuples.iter().filter(|t| t[0] == 0) {
            for b in &tuples {
                if a.iter().zip(b).all(|(x, y)| x < y) {
                    pairs.push((seq(a), seq(b)));
                }
            }
        }
    }
    let ok = Exec::Parallel.all(&pairs, |(d, dp)| {
        let dec = step_up_expand(d, dp).unwrap();
        let combined = step_up_combine(d, dp).unwrap();
        combined.validate().is_valid()
            && dec
                .terms()
                .iter()
                .all(|t| t.coeff > Rational::zero() && shifted_by_one(&t.degrees))
            && dec.coefficient_sum() == rational::int(1)
            && dec.recombine(d.len()).unwrap() == combined
    });
    assert!(ok);
}

#[test]
fn greedy_agrees_with_step_up() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..300 {
        let len = rng.gen_range(1..=5);
        let tuples = increasing_tuples(len, 12);
        let a = &tuples[rng.gen_range(0..tuples.len())];
        let above: Vec<_> = tuples
            .iter()
            .filter(|b| a.iter().zip(b.iter()).all(|(x, y)| x < y))
            .collect();
        if above.is_empty() {
            continue;
        }
        let b = above[rng.gen_range(0..above.len())];
        let (d, dp) = (seq(a), seq(b));
        let combined = step_up_combine(&d, &dp).unwrap();
        let greedy = greedy_decompose(&combined).unwrap();
        assert_eq!(recombine(&greedy, len).unwrap(), combined);
        // the step-up terms may be incomparable; when they do form a chain
        // the expansion is the unique one
        if let Ok(chain) = step_up_expand(&d, &dp).unwrap().into_chain() {
            assert_eq!(greedy, chain);
        }
    }
}

#[test]
fn translation_identity() {
    for t in increasing_tuples(4, 9) {
        let d = seq(&t);
        for c in [-5, 3] {
            assert_eq!(pure_diagram(&d.translate(c)), pure_diagram(&d).translate(c));
        }
    }
}
