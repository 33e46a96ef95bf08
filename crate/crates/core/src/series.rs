//! Series forms of log-tangent integrals: the Fourier primitive of
//! `log tan`, its power series, the parameterised exponential, hyperbolic
//! and cosine integrals, and the derivative series for smooth integrands.
//!
//! Every truncation order is supplied by the caller; nothing here stops
//! adaptively.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::closed_forms::odd_factor;
use crate::constants::{digamma, zeta_int};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_logtan, FunctionSpec};

/// Tolerance used when a series is compared with the quadrature oracle.
pub const ORACLE_TOL: f64 = 1e-12;

fn zeta(s: u32) -> f64 {
    zeta_int(s).expect("zeta index is at least 2").value
}

fn check_unit_disc(op: &'static str, z: f64) -> Result<()> {
    if z.is_finite() && z.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(op, format!("need |z| < 1, got z = {z}")))
    }
}

/// A truncated series with its last included term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesPartialSum {
    pub order: usize,
    pub value: f64,
    pub last_term: f64,
}

/// `−Σ_{n=0}^{N} sin(2(2n+1)x)/(2n+1)²`, which converges to `∫₀^x log tan`
/// for every real `x`.
pub fn bradley_primitive(x: f64, order: usize) -> f64 {
    -(0..=order)
        .rev()
        .map(|n| {
            let m = (2 * n + 1) as f64;
            (2.0 * m * x).sin() / (m * m)
        })
        .sum::<f64>()
}

/// `log x + 2 Σ_{k=1}^{K} (2^{2k−1} − 1)/k · ζ(2k) (x/π)^{2k}`, a series for
/// `log tan x` on `(0, π/2)` with ratio `(2x/π)²`.
pub fn logtan_power_series(x: f64, order: usize) -> Result<f64> {
    if !(x > 0.0 && x < FRAC_PI_2) {
        return Err(Error::domain(
            "logtan_power_series",
            format!("x = {x} is outside (0, pi/2)"),
        ));
    }
    let r = x / PI;
    let r2 = r * r;
    let q2 = 4.0 * r2;
    let (mut rp, mut qp) = (1.0, 1.0);
    let mut sum = 0.0;
    for k in 1..=order {
        rp *= r2;
        qp *= q2;
        // (2^{2k−1} − 1)(x/π)^{2k} = (2x/π)^{2k}/2 − (x/π)^{2k}
        sum += (0.5 * qp - rp) / k as f64 * zeta(2 * k as u32);
    }
    Ok(x.ln() + 2.0 * sum)
}

/// `S_N(z) = Σ_{n=1}^{N} (1 − 2^{−(2n+1)}) ζ(2n+1) z^{2n−1}`.
pub fn partial_sum_s(z: f64, order: usize) -> SeriesPartialSum {
    let z2 = z * z;
    let mut zp = z;
    let mut value = 0.0;
    let mut last_term = 0.0;
    for n in 1..=order as u32 {
        last_term = odd_factor(2 * n + 1).to_f64() * zeta(2 * n + 1) * zp;
        value += last_term;
        zp *= z2;
    }
    SeriesPartialSum {
        order,
        value,
        last_term,
    }
}

/// `Σ_{n=1}^{N} (−1)^{n−1} (1 − 2^{−(2n+1)}) ζ(2n+1) z^{2n−1}`, which is
/// `S_N(iz)/i`.
fn alternating_s(z: f64, order: usize) -> f64 {
    let z2 = z * z;
    let mut zp = z;
    let mut value = 0.0;
    for n in 1..=order as u32 {
        let t = odd_factor(2 * n + 1).to_f64() * zeta(2 * n + 1) * zp;
        value += if n % 2 == 1 { t } else { -t };
        zp *= z2;
    }
    value
}

/// Series value of `∫₀^{π/2} e^{2zx} log tan x dx`:
/// `(e^{πz} + 1) Σ_{n=1}^{N} (−1)^{n−1} (1 − 2^{−(2n+1)}) ζ(2n+1) z^{2n−1}`.
pub fn exp_integral_series(z: f64, order: usize) -> Result<f64> {
    check_unit_disc("exp_integral_series", z)?;
    Ok(((PI * z).exp() + 1.0) * alternating_s(z, order))
}

/// Both sides of
/// `∫₀^{π/2} sinh(2xz − πz/2) log tan x dx = 2 cosh(πz/2) Σ (−1)^{n−1} (1 − 2^{−(2n+1)}) ζ(2n+1) z^{2n−1}`,
/// the left by quadrature and the right truncated after `N` terms.
pub fn sinh_identity_check(z: f64, order: usize) -> Result<(f64, f64)> {
    check_unit_disc("sinh_identity_check", z)?;
    let lhs = integrate_logtan(&FunctionSpec::SinhShift(z), 0.0, FRAC_PI_2, ORACLE_TOL)?.value;
    let rhs = 2.0 * (FRAC_PI_2 * z).cosh() * alternating_s(z, order);
    Ok((lhs, rhs))
}

/// Closed form of `∫₀^{π/2} cos(2zx) log tan x dx`:
/// `sin(πz)/(4z) · [ψ((1+z)/2) + ψ((1−z)/2) − 2ψ(1/2)]`.
///
/// The removable singularity at `z = 0` returns the limit `0`.
pub fn cos_integral_f(z: f64) -> Result<f64> {
    check_unit_disc("cos_integral_f", z)?;
    if z == 0.0 {
        return Ok(0.0);
    }
    let a = z.abs();
    // sin(πa) = sin(π(1 − a)) keeps relative accuracy as a → 1
    let sin = if a > 0.5 { (PI * (1.0 - a)).sin() } else { (PI * a).sin() };
    let bracket = digamma((1.0 + a) / 2.0)?.value + digamma((1.0 - a) / 2.0)?.value
        - 2.0 * digamma(0.5)?.value;
    Ok(sin / (4.0 * a) * bracket)
}

/// `Σ_{k=1}^{K} (−1)^{k−1}/2^{2k−1} · [f^{(2k−1)}(π/2) + f^{(2k−1)}(0)] · (1 − 2^{−(2k+1)}) ζ(2k+1)`.
///
/// For polynomials this terminates at `k = ⌈deg/2⌉` and equals `L(f)`.
/// For `e^{2zx}`, `cos(2zx)` and `sinh(2zx − πz/2)` the derivatives grow like
/// `(2|z|)^k`, so the series converges for `|z| < 1`.
pub fn smooth_l_series(f: &FunctionSpec, order: usize) -> Result<f64> {
    match f {
        FunctionSpec::Polynomial(_)
        | FunctionSpec::Monomial(_)
        | FunctionSpec::ShiftedLegendre(_) => {}
        FunctionSpec::Exp2z(z) | FunctionSpec::Cos2z(z) | FunctionSpec::SinhShift(z) => {
            check_unit_disc("smooth_l_series", *z)?;
        }
        other => {
            return Err(Error::domain(
                "smooth_l_series",
                format!("{other} has no usable derivative bound"),
            ))
        }
    }
    let mut sum = 0.0;
    for k in 1..=order as u32 {
        let d = 2 * k - 1;
        let ends = f.derivative(d, FRAC_PI_2).expect("smooth kind")
            + f.derivative(d, 0.0).expect("smooth kind");
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let w = sign * 0.5f64.powi(d as i32) * odd_factor(2 * k + 1).to_f64();
        sum += w * ends * zeta(2 * k + 1);
    }
    Ok(sum)
}

/// `(π²/7) (1 − 2 Σ_{n=1}^{N} ζ(2n) / (2^{2n} (2n+1)(n+1)))`, converging to `ζ(3)`.
pub fn euler_zeta3_series(order: usize) -> f64 {
    let mut quarter = 1.0;
    let sum: f64 = (1..=order)
        .map(|n| {
            quarter *= 0.25;
            let nf = n as f64;
            zeta(2 * n as u32) * quarter / ((2.0 * nf + 1.0) * (nf + 1.0))
        })
        .sum();
    PI * PI / 7.0 * (1.0 - 2.0 * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{cos_lemma, exact_l};
    use crate::constants::{catalan, eval_pi_expr, eval_zeta_expr_precise};
    use crate::exact::{Polynomial, Rational};
    use crate::quadrature::oracle_l;
    use std::f64::consts::FRAC_PI_4;

    const APERY: f64 = 1.202_056_903_159_594_3;

    fn oracle_primitive(x: f64) -> f64 {
        let one = FunctionSpec::Monomial(0);
        integrate_logtan(&one, 0.0, x, ORACLE_TOL).unwrap().value
    }

    #[test]
    fn bradley_examples() {
        for n in [0, 7, 100] {
            assert!(bradley_primitive(FRAC_PI_2, n).abs() < 1e-12);
        }
        let g = catalan().value;
        assert!((bradley_primitive(FRAC_PI_4, 20_000) + g).abs() < 1e-8);
        let x = PI / 8.0;
        assert!((bradley_primitive(x, 2000) - oracle_primitive(x)).abs() < 1e-6);
    }

    #[test]
    fn bradley_agrees_with_oracle() {
        for x in [PI / 12.0, PI / 8.0, PI / 6.0, PI / 3.0] {
            let d = (bradley_primitive(x, 5000) - oracle_primitive(x)).abs();
            assert!(d < 1e-7, "x={x} d={d}");
        }
    }

    #[test]
    fn power_series_examples() {
        assert!(logtan_power_series(FRAC_PI_4, 60).unwrap().abs() < 1e-10);
        for (x, k) in [(0.5, 60), (1.2, 200)] {
            let v = logtan_power_series(x, k).unwrap();
            assert!((v - x.tan().ln()).abs() < 1e-10, "x={x}");
        }
        assert!(logtan_power_series(0.0, 10).is_err());
        assert!(logtan_power_series(FRAC_PI_2, 10).is_err());
    }

    #[test]
    fn exp_series_against_oracle() {
        assert_eq!(exp_integral_series(0.0, 10).unwrap(), 0.0);
        for (z, n, tol) in [(0.3, 25, 1e-10), (-0.5, 30, 1e-9), (0.2, 40, 1e-8), (0.5, 40, 1e-8)] {
            let oracle = oracle_l(&FunctionSpec::Exp2z(z), ORACLE_TOL).unwrap().value;
            let v = exp_integral_series(z, n).unwrap();
            assert!((v - oracle).abs() < tol, "z={z} diff={}", (v - oracle).abs());
        }
        assert!(exp_integral_series(1.0, 10).is_err());
    }

    #[test]
    fn sinh_identity() {
        let (l, r) = sinh_identity_check(0.0, 10).unwrap();
        assert!(l.abs() < 1e-14 && r == 0.0);
        let (l, r) = sinh_identity_check(0.4, 30).unwrap();
        assert!((l - r).abs() < 1e-9);
        // alternating tail: the first omitted term bounds the error
        let z: f64 = 0.9;
        let (l, r) = sinh_identity_check(z, 60).unwrap();
        let next = 2.0 * (FRAC_PI_2 * z).cosh() * zeta(123) * z.powi(121);
        assert!((l - r).abs() <= next, "{} vs {next}", (l - r).abs());
        assert!(sinh_identity_check(-1.5, 10).is_err());
    }

    #[test]
    fn cos_integral_closed_form() {
        assert_eq!(cos_integral_f(0.0).unwrap(), 0.0);
        for z in [0.1, 0.25, 0.5, 0.75] {
            let oracle = oracle_l(&FunctionSpec::Cos2z(z), ORACLE_TOL).unwrap().value;
            let f = cos_integral_f(z).unwrap();
            assert!((f - oracle).abs() < 1e-9, "z={z}");
            let s = partial_sum_s(z, 50).value;
            assert!((-(PI * z).sin() * s - f).abs() < 1e-9, "z={z}");
        }
        let near_one = cos_integral_f(1.0 - 1e-6).unwrap();
        let lemma = eval_pi_expr(&cos_lemma(1)).value;
        assert!((near_one - lemma).abs() < 1e-4);
        assert!((cos_integral_f(-0.3).unwrap() - cos_integral_f(0.3).unwrap()).abs() < 1e-15);
        assert!(cos_integral_f(1.0).is_err());
    }

    #[test]
    fn small_z_limit() {
        let z = 1e-3;
        let f = cos_integral_f(z).unwrap();
        let series = -(PI * z).sin() * partial_sum_s(z, 10).value;
        assert!((f / z - series / z).abs() < 1e-6);
        // F(z) ~ −π (7/8) ζ(3) z²
        assert!((f / (z * z) + PI * 0.875 * APERY).abs() < 1e-4);
    }

    #[test]
    fn partial_sum_examples() {
        let s = partial_sum_s(0.1, 10);
        let bound = odd_factor(5).to_f64() * zeta(5) * 0.01 * 1.1;
        assert!((s.value / 0.1 - 0.875 * APERY).abs() < bound);
        assert_eq!(s.order, 10);
        assert!(s.last_term.abs() < 1e-15);
        let s = partial_sum_s(0.5, 30).value;
        assert!((-(PI * 0.5).sin() * s - cos_integral_f(0.5).unwrap()).abs() < 1e-10);
        assert_eq!(partial_sum_s(0.0, 7).value, 0.0);
    }

    #[test]
    fn smooth_series() {
        let x = FunctionSpec::Monomial(1);
        for k in [1, 3, 8] {
            assert!((smooth_l_series(&x, k).unwrap() - 0.875 * APERY).abs() < 1e-15);
        }
        let e = FunctionSpec::Exp2z(0.3);
        let oracle = oracle_l(&e, ORACLE_TOL).unwrap().value;
        let v = smooth_l_series(&e, 25).unwrap();
        assert!((v - oracle).abs() < 1e-9);
        assert!((v - exp_integral_series(0.3, 25).unwrap()).abs() < 1e-13);

        let c = smooth_l_series(&FunctionSpec::Cos2z(0.5), 25).unwrap();
        assert!((c - cos_integral_f(0.5).unwrap()).abs() < 1e-9);

        let s = smooth_l_series(&FunctionSpec::SinhShift(0.4), 30).unwrap();
        let (lhs, _) = sinh_identity_check(0.4, 30).unwrap();
        assert!((s - lhs).abs() < 1e-9);

        assert!(smooth_l_series(&FunctionSpec::Sqrt, 5).is_err());
        assert!(smooth_l_series(&FunctionSpec::Exp2z(1.0), 5).is_err());
    }

    #[test]
    fn smooth_series_reduces_to_exact_value() {
        let p = Polynomial::from_rationals([
            Rational::from(2),
            Rational::new(-1, 3),
            Rational::new(5, 7),
            Rational::from(-4),
            Rational::new(1, 2),
            Rational::new(3, 5),
        ]);
        let want = eval_zeta_expr_precise(&exact_l(&p));
        let got = smooth_l_series(&FunctionSpec::polynomial(p), 3).unwrap();
        assert!((got - want).abs() < 1e-12 * want.abs().max(1.0));
    }

    #[test]
    fn euler_series() {
        let z3 = zeta(3);
        assert!((euler_zeta3_series(40) - z3).abs() < 1e-12);
        assert!((euler_zeta3_series(1) - 1.216_671_479_850_062).abs() < 1e-14);
        let e2 = (euler_zeta3_series(2) - z3).abs();
        let e10 = (euler_zeta3_series(10) - z3).abs();
        assert!(e10 < e2);
    }
}
