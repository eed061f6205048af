//! High-precision complex embedding of cyclotomic values.
//!
//! This is a numerical cross-check used by the test suites only; nothing in
//! the verification logic depends on it. Values are evaluated in fixed-point
//! arithmetic with 45 decimal digits, comfortably beyond the 1e-30 agreement
//! demanded of the canonical-form soundness checks.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cyclo::{Cyclotomic, Rational};

/// Fixed-point scale: all values are integers times `10^-45`.
const DIGITS: u32 = 45;

/// pi * 10^45, truncated.
const PI_FIXED: &str = "3141592653589793238462643383279502884197169399";

pub fn fixed_scale() -> BigInt {
    BigInt::from(10u32).pow(DIGITS)
}

pub fn fixed_from_f64(v: f64) -> BigInt {
    // split to keep f64 rounding harmless at this scale
    let whole = v.trunc() as i64;
    let frac = ((v - v.trunc()) * 1e15).round() as i64;
    BigInt::from(whole) * fixed_scale() + BigInt::from(frac) * BigInt::from(10u32).pow(DIGITS - 15)
}

fn fixed_from_rational(r: &Rational) -> BigInt {
    r.numer() * fixed_scale() / r.denom()
}

fn fixed_mul(a: &BigInt, b: &BigInt) -> BigInt {
    a * b / fixed_scale()
}

/// |a - b| < 10^-30 at this scale.
pub fn fixed_close(a: &BigInt, b: &BigInt) -> bool {
    (a - b).abs() < BigInt::from(10u32).pow(DIGITS - 30)
}

pub fn close_to_f64(a: &BigInt, v: f64) -> bool {
    // f64 carries ~1e-16 relative precision; compare at 1e-12
    (a - fixed_from_f64(v)).abs() < BigInt::from(10u32).pow(DIGITS - 12)
}

fn pi_fixed() -> BigInt {
    PI_FIXED.parse().expect("valid pi literal")
}

/// (cos x, sin x) for fixed-point `x`, by Taylor series after reduction to
/// [-pi, pi]. Truncation error per operation is one ulp; with the term count
/// capped the total error stays far below the 1e-30 comparison threshold.
fn cos_sin(x: &BigInt) -> (BigInt, BigInt) {
    let pi = pi_fixed();
    let two_pi = &pi * 2;
    let mut x = x.clone();
    while x > pi {
        x -= &two_pi;
    }
    while x < -&pi {
        x += &two_pi;
    }
    let x2 = fixed_mul(&x, &x);
    // cos
    let mut cos = BigInt::zero();
    let mut term = fixed_scale();
    let mut k: u32 = 0;
    while !term.is_zero() && k < 200 {
        cos += &term;
        term = -fixed_mul(&term, &x2) / ((2 * k + 1) * (2 * k + 2));
        k += 1;
    }
    // sin
    let mut sin = BigInt::zero();
    let mut term = x.clone();
    let mut k: u32 = 0;
    while !term.is_zero() && k < 200 {
        sin += &term;
        term = -fixed_mul(&term, &x2) / ((2 * k + 2) * (2 * k + 3));
        k += 1;
    }
    (cos, sin)
}

/// Evaluate raw (exponent, coefficient) terms at the embedding sending
/// `zeta_n` to `exp(2 pi i k / n)`. For `gcd(k, n) = 1` this is a primitive
/// complex embedding of `Q(zeta_n)`.
pub fn evaluate_terms(n: u32, terms: &[(i64, Rational)], k: i64) -> (BigInt, BigInt) {
    let two_pi = pi_fixed() * 2;
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    for (e, c) in terms {
        let em = (e * k).rem_euclid(i64::from(n));
        let angle = &two_pi * em / n;
        let (cos, sin) = cos_sin(&angle);
        let cf = fixed_from_rational(c);
        re += fixed_mul(&cf, &cos);
        im += fixed_mul(&cf, &sin);
    }
    (re, im)
}

/// Evaluate a canonical-form value at the embedding `zeta_n -> e^{2 pi i k/n}`.
pub fn evaluate(v: &Cyclotomic, k: i64) -> (BigInt, BigInt) {
    let terms: Vec<(i64, Rational)> =
        v.terms().map(|(e, c)| (i64::from(e), c.clone())).collect();
    evaluate_terms(v.order(), &terms, k)
}
