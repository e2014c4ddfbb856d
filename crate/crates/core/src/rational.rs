//! Exact rational numbers and their text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` when integral, `n/d` otherwise.
pub fn format(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/d`. Rejects zero denominators, a sign on the
/// denominator and fractions not in lowest terms.
pub fn parse(s: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(num)?;
    let denom = match den {
        Some(d) => {
            if d.starts_with('-') {
                return Err(format!("negative denominator in `{s}`"));
            }
            parse_int(d)?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    let q = Rational::new(numer.clone(), denom.clone());
    if q.numer() != &numer || q.denom() != &denom {
        return Err(format!("`{s}` is not in lowest terms"));
    }
    Ok(q)
}

fn parse_int(s: &str) -> std::result::Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("malformed integer `{s}`"));
    }
    s.parse::<BigInt>().map_err(|e| e.to_string())
}

pub fn is_non_negative(q: &Rational) -> bool {
    !q.is_negative()
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}
