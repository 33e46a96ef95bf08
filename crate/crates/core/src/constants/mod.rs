//! Numeric constants: ζ at integers, Catalan's constant, the digamma
//! function, and evaluation of exact [`ZetaExpr`]/[`PiExpr`] values.

pub mod precise;

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial, PiExpr, Rational, ZetaExpr};

pub use precise::{eval_pi_expr_precise, eval_zeta_expr_precise};

/// Euler–Mascheroni constant, stored rather than computed.
pub const EULER_GAMMA_DIGITS: &str =
    "0.577215664901532860606512090082402431042159335939923598805767";
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// A double-precision value with an a priori truncation bound.
///
/// The bound covers series truncation and a few ulps of rounding; it is
/// not a rigorous enclosure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericValue {
    pub value: f64,
    pub err_bound: f64,
}

impl NumericValue {
    pub fn exact(value: f64) -> Self {
        NumericValue {
            value,
            err_bound: 0.0,
        }
    }
}

const ZETA_CUTOFF: u32 = 16;

/// `ζ(s)` for integer `s ≥ 2`.
///
/// Direct summation to `N = 16` with an Euler–Maclaurin tail; corrections
/// are added until they fall below double precision, and the first omitted
/// correction bounds the truncation error.
pub fn zeta_int(s: u32) -> Result<NumericValue> {
    if s < 2 {
        return Err(Error::domain("zeta_int", format!("s = {s} must be at least 2")));
    }
    let sf = s as f64;
    let n = ZETA_CUTOFF as f64;
    let mut sum: f64 = (1..ZETA_CUTOFF).rev().map(|k| (k as f64).powf(-sf)).sum();
    let tail_base = n.powf(1.0 - sf);
    sum += tail_base / (sf - 1.0) + 0.5 * n.powf(-sf);

    let mut rising = sf;
    let mut npow = n.powf(-sf - 1.0);
    let mut omitted = 0.0;
    for j in 1..=20u32 {
        let b = (bernoulli(2 * j as usize) / Rational::from(factorial(2 * j))).to_f64();
        let term = b * rising * npow;
        if term.abs() < f64::EPSILON * 1e-3 * sum {
            omitted = term.abs();
            break;
        }
        sum += term;
        omitted = term.abs();
        rising *= (sf + 2.0 * j as f64 - 1.0) * (sf + 2.0 * j as f64);
        npow /= n * n;
    }
    Ok(NumericValue {
        value: sum,
        err_bound: omitted + 4.0 * f64::EPSILON * sum,
    })
}

/// `ζ(2n) = (−1)^{n−1} 2^{2n} B_{2n} / (2 (2n)!) · π^{2n}` exactly.
pub fn zeta_even_exact(n: u32) -> PiExpr {
    assert!(n >= 1);
    let b = bernoulli(2 * n as usize);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let c = b * Rational::new(
        num_bigint::BigInt::from(sign) << (2 * n) as usize,
        factorial(2 * n) * 2,
    );
    PiExpr::term(c, 2 * n as i32)
}

/// Catalan's constant `G = Σ (−1)^k/(2k+1)²`.
///
/// Uses the Cohen–Rodriguez Villegas–Zagier acceleration for alternating
/// series; the error after `n` terms is at most `2/(3+√8)^n`.
pub fn catalan() -> NumericValue {
    const TERMS: u32 = 24;
    let n = TERMS as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(n);
    let trunc = 2.0 / d;
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..TERMS {
        let kf = k as f64;
        c = b - c;
        s += c / ((2.0 * kf + 1.0) * (2.0 * kf + 1.0));
        b *= (kf + n) * (kf - n) / ((kf + 0.5) * (kf + 1.0));
    }
    NumericValue {
        value: s / d,
        err_bound: trunc + 8.0 * f64::EPSILON,
    }
}

const DIGAMMA_SHIFT: f64 = 12.0;

/// Digamma `ψ(x)` for `x > 0`: upward recurrence to `x ≥ 12`, then the
/// asymptotic series with Bernoulli coefficients.
pub fn digamma(x: f64) -> Result<NumericValue> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("digamma", format!("x = {x} must be positive and finite")));
    }
    let mut x = x;
    let mut shift = 0.0;
    while x < DIGAMMA_SHIFT {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut series = 0.0;
    let mut pow = inv2;
    let mut last = 0.0;
    for k in 1..=10u32 {
        let b = bernoulli(2 * k as usize).to_f64();
        last = b / (2.0 * k as f64) * pow;
        series += last;
        pow *= inv2;
    }
    let value = x.ln() - 0.5 / x - series + shift;
    Ok(NumericValue {
        value,
        err_bound: last.abs() + 8.0 * f64::EPSILON * (x.ln().abs() + shift.abs()),
    })
}

/// Double-precision value of `Σ coeff · π^j · ζ(m)`.
///
/// The bound propagates the zeta truncation bounds and rounding of each
/// term linearly, so heavy cancellation shows up as a large bound; use
/// [`eval_zeta_expr_precise`] when that matters.
pub fn eval_zeta_expr(e: &ZetaExpr) -> NumericValue {
    let mut value = 0.0;
    let mut err = 0.0;
    for (m, coeff) in e.terms() {
        let z = zeta_int(m).expect("zeta index is at least 3");
        for (p, r) in coeff.terms() {
            let c = r.to_f64() * PI.powi(p);
            let t = c * z.value;
            value += t;
            err += c.abs() * z.err_bound + 4.0 * f64::EPSILON * t.abs();
        }
    }
    NumericValue {
        value,
        err_bound: err,
    }
}

/// Double-precision value of a [`PiExpr`].
pub fn eval_pi_expr(e: &PiExpr) -> NumericValue {
    let mut value = 0.0;
    let mut err = 0.0;
    for (p, r) in e.terms() {
        let t = r.to_f64() * PI.powi(p);
        value += t;
        err += 4.0 * f64::EPSILON * t.abs();
    }
    NumericValue {
        value,
        err_bound: err,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const APERY: f64 = 1.202_056_903_159_594_3;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn zeta_examples() {
        assert!(rel(zeta_int(3).unwrap().value, APERY) <= 1e-15);
        assert!(rel(zeta_int(2).unwrap().value, PI * PI / 6.0) <= 1e-15);
        assert!(matches!(zeta_int(1), Err(Error::Domain { .. })));
        assert!(matches!(zeta_int(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn zeta_five_by_direct_summation() {
        // Σ_{k<N} k^{-5} plus the integral tail bound ∫_N^∞ t^{-5} dt; the
        // midpoint of [sum + N^{-5}, sum + N^{-4}/4 + N^{-5}] tightens it.
        let n = 2000u32;
        let head: f64 = (1..n).rev().map(|k| (k as f64).powi(-5)).sum();
        let nf = n as f64;
        let lo = head + nf.powi(-5);
        let hi = head + nf.powi(-4) / 4.0 + nf.powi(-5);
        let z5 = zeta_int(5).unwrap().value;
        assert!(z5 >= lo - 1e-15 && z5 <= hi + 1e-15);
        assert!((z5 - 1.036_927_755_1).abs() < 1e-10);
    }

    #[test]
    fn zeta_even_examples() {
        assert_eq!(zeta_even_exact(1), PiExpr::term(Rational::new(1, 6), 2));
        assert_eq!(zeta_even_exact(2), PiExpr::term(Rational::new(1, 90), 4));
        assert_eq!(zeta_even_exact(3), PiExpr::term(Rational::new(1, 945), 6));
    }

    #[test]
    fn zeta_even_agrees_with_bernoulli_formula() {
        for n in 1..=6u32 {
            let direct = zeta_int(2 * n).unwrap().value;
            let exact = zeta_even_exact(n).to_f64();
            assert!(rel(direct, exact) <= 1e-14, "n={n}");
        }
    }

    #[test]
    fn zeta_monotone_towards_one() {
        let vals: Vec<f64> = (2..=40).map(|s| zeta_int(s).unwrap().value).collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]));
        assert!(zeta_int(15).unwrap().value - 1.0 < 1e-4);
        assert!(vals.iter().all(|&v| v > 1.0));
    }

    #[test]
    fn zeta_matches_fixed_point_route() {
        for s in 2..=30u32 {
            let hp = precise::fixed_to_f64(&precise::zeta_fixed(s, 128), 128);
            let z = zeta_int(s).unwrap();
            assert!((z.value - hp).abs() <= z.err_bound.max(2.0 * f64::EPSILON), "s={s}");
        }
    }

    #[test]
    fn catalan_value() {
        let g = catalan();
        assert!((g.value - 0.915_965_594_177_219).abs() < 1e-14);
        assert!(g.value > 0.0 && g.value < 1.0);
        assert!(g.err_bound < 1e-14);
    }

    #[test]
    fn digamma_examples() {
        let ln2 = std::f64::consts::LN_2;
        let half = digamma(0.5).unwrap().value;
        assert!((half - (-EULER_GAMMA - 2.0 * ln2)).abs() < 1e-14);
        assert!((digamma(1.0).unwrap().value + EULER_GAMMA).abs() < 1e-13);
        let three_halves = digamma(1.5).unwrap().value;
        assert!((three_halves - (-EULER_GAMMA - 2.0 * ln2 + 2.0)).abs() < 1e-14);
        assert!(digamma(0.0).is_err());
        assert!(digamma(-1.5).is_err());
        assert!(digamma(f64::NAN).is_err());
    }

    #[test]
    fn digamma_recurrence() {
        for i in 1..200 {
            let x = i as f64 * 0.25;
            let a = digamma(x).unwrap().value;
            let b = digamma(x + 1.0).unwrap().value;
            assert!((b - a - 1.0 / x).abs() < 1e-13 * (1.0 + 1.0 / x), "x={x}");
        }
    }

    #[test]
    fn gamma_constant_digits() {
        let parsed: f64 = EULER_GAMMA_DIGITS.parse().unwrap();
        assert_eq!(parsed, EULER_GAMMA);
        assert!(EULER_GAMMA_DIGITS.len() > 32);
    }

    #[test]
    fn zeta_expr_examples() {
        let e: ZetaExpr = "7/8 * zeta(3)".parse().unwrap();
        assert!((eval_zeta_expr(&e).value - 1.051_799_790_264_644_9).abs() < 1e-14);
        assert_eq!(eval_zeta_expr(&ZetaExpr::zero()).value, 0.0);
        let e: ZetaExpr = "7/16 * pi * zeta(3)".parse().unwrap();
        assert!((eval_zeta_expr(&e).value - 1.652_163_247_071_347).abs() < 1e-14);
    }

    #[test]
    fn precise_and_plain_agree_without_cancellation() {
        let e: ZetaExpr = "21/64 * pi^2 * zeta(3) - 93/64 * zeta(5)".parse().unwrap();
        let plain = eval_zeta_expr(&e);
        let precise = eval_zeta_expr_precise(&e);
        assert!((plain.value - precise).abs() <= plain.err_bound);
    }

    #[test]
    fn plain_bound_reflects_cancellation() {
        let e = crate::closed_forms::legendre_l_coeff(19);
        let plain = eval_zeta_expr(&e);
        let precise = eval_zeta_expr_precise(&e);
        // L(P̃_19) ≈ 8.2673e-3 while individual terms reach ~1e18
        assert!((precise - 0.008_267_349_088_394_1).abs() < 1e-15);
        assert!(plain.err_bound > 1.0);
        assert!((plain.value - precise).abs() <= plain.err_bound);
    }
}
