//! Double-exponential (tanh-sinh) quadrature for integrands on `[0, π/2]`
//! with logarithmic endpoint singularities.
//!
//! Ranges are split at `π/4`; the upper half is integrated in the reflected
//! variable `u = π/2 − x`, so every singular endpoint sits at a node offset
//! that is computed without cancellation. Nodes never touch an endpoint.

mod function;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

pub use function::{parse_coefficients, shifted_legendre_value, FunctionSpec, PolySpec, CATALOG};

use crate::error::{Error, Result};

/// Environment variable overriding [`Integrator::max_levels`].
pub const MAX_LEVELS_ENV: &str = "LOGTAN_MAX_LEVELS";
pub const DEFAULT_MAX_LEVELS: u32 = 12;
/// Smallest tolerance accepted; double-precision rounding dominates below.
pub const MIN_TOL: f64 = 1e-13;

// sinh/cosh range in t; at t = 4 the node offset is ~1e-37 of the
// interval and the weight is far below double precision.
const T_MAX: f64 = 4.0;
const MIN_LEVELS: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Difference between the last two refinement levels.
    pub est_error: f64,
    pub levels_used: u32,
    pub converged: bool,
}

/// Something that can be sampled on either half of `[0, π/2]`.
pub trait Integrand {
    /// Value at `x`.
    fn at(&self, x: f64) -> f64;
    /// Value at `π/2 − u`.
    fn at_reflected(&self, u: f64) -> f64;
}

impl Integrand for FunctionSpec {
    fn at(&self, x: f64) -> f64 {
        self.eval(x)
    }
    fn at_reflected(&self, u: f64) -> f64 {
        self.eval_reflected(u)
    }
}

/// `f(x) · log(tan x)`.
pub struct LogTanWeighted<'a>(pub &'a FunctionSpec);

impl Integrand for LogTanWeighted<'_> {
    fn at(&self, x: f64) -> f64 {
        self.0.eval(x) * x.tan().ln()
    }
    fn at_reflected(&self, u: f64) -> f64 {
        -self.0.eval_reflected(u) * u.tan().ln()
    }
}

/// `f(x) · g(x)`.
pub struct Product<'a>(pub &'a FunctionSpec, pub &'a FunctionSpec);

impl Integrand for Product<'_> {
    fn at(&self, x: f64) -> f64 {
        self.0.eval(x) * self.1.eval(x)
    }
    fn at_reflected(&self, u: f64) -> f64 {
        self.0.eval_reflected(u) * self.1.eval_reflected(u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Integrator {
    pub max_levels: u32,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator {
            max_levels: DEFAULT_MAX_LEVELS,
        }
    }
}

impl Integrator {
    pub fn new(max_levels: u32) -> Self {
        Integrator {
            max_levels: max_levels.max(1),
        }
    }

    /// Default depth, overridden by `LOGTAN_MAX_LEVELS` when it parses.
    pub fn from_env() -> Self {
        std::env::var(MAX_LEVELS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Integrator::new)
            .unwrap_or_default()
    }

    /// `∫_a^b f(x) log(tan x) dx`.
    pub fn integrate_logtan(
        &self,
        f: &FunctionSpec,
        a: f64,
        b: f64,
        tol: f64,
    ) -> Result<QuadratureResult> {
        self.integrate(&LogTanWeighted(f), a, b, tol)
    }

    /// `∫_a^b f(x) dx`.
    pub fn integrate_plain(
        &self,
        f: &FunctionSpec,
        a: f64,
        b: f64,
        tol: f64,
    ) -> Result<QuadratureResult> {
        self.integrate(f, a, b, tol)
    }

    /// `⟨f, g⟩ = (2/π) ∫₀^{π/2} f g`.
    pub fn inner_product(
        &self,
        f: &FunctionSpec,
        g: &FunctionSpec,
        tol: f64,
    ) -> Result<QuadratureResult> {
        let r = self.integrate(&Product(f, g), 0.0, FRAC_PI_2, tol * FRAC_PI_2)?;
        Ok(QuadratureResult {
            value: r.value * 2.0 / PI,
            est_error: r.est_error * 2.0 / PI,
            ..r
        })
    }

    /// `∫_a^b` of any [`Integrand`] with `0 ≤ a < b ≤ π/2`.
    pub fn integrate(
        &self,
        g: &dyn Integrand,
        a: f64,
        b: f64,
        tol: f64,
    ) -> Result<QuadratureResult> {
        validate(a, b, tol)?;
        let b = b.min(FRAC_PI_2);
        let mut pieces = Vec::with_capacity(2);
        if a < FRAC_PI_4 {
            let hi = b.min(FRAC_PI_4);
            pieces.push(self.tanh_sinh(a, hi, tol / 2.0, |x| g.at(x), |x| x)?);
        }
        if b > FRAC_PI_4 {
            let lo = FRAC_PI_2 - b;
            let hi = FRAC_PI_2 - a.max(FRAC_PI_4);
            pieces.push(self.tanh_sinh(lo, hi, tol / 2.0, |u| g.at_reflected(u), |u| FRAC_PI_2 - u)?);
        }
        Ok(pieces.into_iter().fold(
            QuadratureResult {
                value: 0.0,
                est_error: 0.0,
                levels_used: 0,
                converged: true,
            },
            |acc, p| QuadratureResult {
                value: acc.value + p.value,
                est_error: acc.est_error + p.est_error,
                levels_used: acc.levels_used.max(p.levels_used),
                converged: acc.converged && p.converged,
            },
        ))
    }

    /// Tanh-sinh on `[c, d]`. Each level halves the step and only samples
    /// the new odd nodes; summation runs in ascending `t` for determinism.
    fn tanh_sinh(
        &self,
        c: f64,
        d: f64,
        tol: f64,
        g: impl Fn(f64) -> f64,
        report_x: impl Fn(f64) -> f64,
    ) -> Result<QuadratureResult> {
        let width = d - c;
        let node = |t: f64| -> Result<f64> {
            let s = FRAC_PI_2 * t.sinh();
            let w = 0.5 * width * FRAC_PI_2 * t.cosh() / (s.cosh() * s.cosh());
            let x = if t <= 0.0 {
                c + width / (1.0 + (-2.0 * s).exp())
            } else {
                d - width / (1.0 + (2.0 * s).exp())
            };
            if w == 0.0 {
                return Ok(0.0);
            }
            let v = g(x);
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    x: report_x(x),
                    value: v,
                });
            }
            Ok(w * v)
        };

        let mut sum = 0.0;
        let k_max = T_MAX as i64;
        for k in -k_max..=k_max {
            sum += node(k as f64)?;
        }
        let mut h = 1.0;
        let mut estimate = sum * h;
        let mut diff = f64::INFINITY;
        let mut level = 1;
        while level < self.max_levels {
            h /= 2.0;
            let count = (T_MAX / h) as i64;
            let mut fresh = 0.0;
            let mut i = -count + 1;
            while i <= count {
                fresh += node(i as f64 * h)?;
                i += 2;
            }
            sum += fresh;
            let next = sum * h;
            diff = (next - estimate).abs();
            estimate = next;
            level += 1;
            if level >= MIN_LEVELS && diff <= tol {
                return Ok(QuadratureResult {
                    value: estimate,
                    est_error: diff,
                    levels_used: level,
                    converged: true,
                });
            }
        }
        Ok(QuadratureResult {
            value: estimate,
            est_error: diff,
            levels_used: level,
            converged: false,
        })
    }
}

fn validate(a: f64, b: f64, tol: f64) -> Result<()> {
    const SLACK: f64 = 1e-15;
    if !(a.is_finite() && b.is_finite()) || a < 0.0 || b > FRAC_PI_2 + SLACK || a >= b {
        return Err(Error::domain(
            "integrate",
            format!("need 0 <= a < b <= pi/2, got a = {a}, b = {b}"),
        ));
    }
    if !(tol >= MIN_TOL * (1.0 - 1e-9)) {
        return Err(Error::domain(
            "integrate",
            format!("tolerance {tol} is below {MIN_TOL}"),
        ));
    }
    Ok(())
}

/// [`Integrator::integrate_logtan`] with the default depth.
pub fn integrate_logtan(f: &FunctionSpec, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    Integrator::default().integrate_logtan(f, a, b, tol)
}

/// [`Integrator::integrate_plain`] with the default depth.
pub fn integrate_plain(f: &FunctionSpec, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    Integrator::default().integrate_plain(f, a, b, tol)
}

/// [`Integrator::inner_product`] with the default depth.
pub fn inner_product(f: &FunctionSpec, g: &FunctionSpec, tol: f64) -> Result<QuadratureResult> {
    Integrator::default().inner_product(f, g, tol)
}

/// `L(f)` over the full range with the default depth.
pub fn oracle_l(f: &FunctionSpec, tol: f64) -> Result<QuadratureResult> {
    integrate_logtan(f, 0.0, FRAC_PI_2, tol)
}
