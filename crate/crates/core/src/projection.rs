//! Shifted-Legendre expansions on `[0, π/2]`.
//!
//! With `⟨f, g⟩ = (2/π) ∫₀^{π/2} f g` the polynomials `P̃ₙ` are orthogonal
//! with `‖P̃ₙ‖² = 1/(2n+1)`, so `f = Σ cₙ P̃ₙ` with `cₙ = (2n+1)⟨f, P̃ₙ⟩`.
//! Because `L(P̃ₙ)` is known in closed form and vanishes for even `n`,
//! truncating the expansion gives a zeta series for `L(f)`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::{OnceLock, RwLock};

use crate::closed_forms::{byerly_coeff, legendre_l_coeff, odd_factor};
use crate::constants::eval_zeta_expr_precise;
use crate::error::{Error, Result};
use crate::exact::{factorial, shifted_legendre, PiExpr, Rational, ZetaExpr};
use crate::quadrature::{shifted_legendre_value, FunctionSpec, Integrator};

/// Tolerance for the coefficient inner products.
pub const COEFF_TOL: f64 = 1e-12;

/// `(π/2)⁴ = (2/π) ∫₀^{π/2} log² tan · (π/2)²`, the Parseval total for `log tan`.
pub const LOGTAN_PARSEVAL_TOTAL: f64 = FRAC_PI_2 * FRAC_PI_2 * FRAC_PI_2 * FRAC_PI_2;

/// Coefficients `c₀ … c_N` of `f` in the shifted Legendre basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LegendreCoeffs {
    pub coeffs: Vec<f64>,
    pub source: FunctionSpec,
    pub order: usize,
}

impl LegendreCoeffs {
    /// `⟨f, P̃ₙ⟩ = cₙ/(2n+1)`.
    pub fn inner_products(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c / (2 * n + 1) as f64)
            .collect()
    }

    /// Running sums `Σ_{n≤k} cₙ²/(2n+1)`, one per `k`.
    pub fn parseval_partial_sums(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .enumerate()
            .scan(0.0, |acc, (n, c)| {
                *acc += c * c / (2 * n + 1) as f64;
                Some(*acc)
            })
            .collect()
    }

    /// `f_N(x) = Σ cₙ P̃ₙ(x)`.
    pub fn reconstruct(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * shifted_legendre_value(n as u32, x))
            .sum()
    }
}

/// Expands `f` up to `P̃_N`.
pub fn expand(f: &FunctionSpec, order: usize) -> Result<LegendreCoeffs> {
    expand_with(&Integrator::default(), f, order)
}

/// [`expand`] with an explicit integrator.
pub fn expand_with(q: &Integrator, f: &FunctionSpec, order: usize) -> Result<LegendreCoeffs> {
    let coeffs = (0..=order)
        .map(|n| {
            let ip = q.inner_product(f, &FunctionSpec::ShiftedLegendre(n as u32), COEFF_TOL)?;
            Ok((2 * n + 1) as f64 * ip.value)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LegendreCoeffs {
        coeffs,
        source: f.clone(),
        order,
    })
}

/// `L(f_N)` for the expansion truncated after `N` odd terms.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxL {
    /// Number of odd-index terms, i.e. `f` is expanded up to `P̃_{2N−1}`.
    pub order: usize,
    /// `c_{N,k}` for `k = 1..=N`, stored at index `k − 1`.
    pub c_table: Vec<f64>,
    /// `Σ_k c_{N,k} (−1)^{k−1} π^{−(2k−1)} (1 − 2^{−(2k+1)}) ζ(2k+1)`.
    pub value: f64,
    /// The same value summed over the Legendre index instead:
    /// `Σ_j (4j−1) ⟨f, P̃_{2j−1}⟩ L(P̃_{2j−1})`.
    pub index_sum: f64,
}

/// Coefficients `c_{N,k} = 2 Σ_{j=k}^{N} (4j−1) ⟨f, P̃_{2j−1}⟩ (2(j+k−1))! / ((2k−1)! (2(j−k))!)`
/// from the odd-index inner products `ips[j−1] = ⟨f, P̃_{2j−1}⟩`.
pub fn c_table_exact(ips: &[Rational]) -> Vec<Rational> {
    let n = ips.len() as u32;
    (1..=n)
        .map(|k| {
            let mut acc = Rational::zero();
            for j in k..=n {
                let ratio = Rational::new(
                    factorial(2 * (j + k - 1)),
                    factorial(2 * k - 1) * factorial(2 * (j - k)),
                );
                acc += &(ratio * Rational::from(4 * j as i64 - 1) * &ips[j as usize - 1]);
            }
            acc * Rational::from(2)
        })
        .collect()
}

/// The zeta series `Σ_k c_k (−1)^{k−1} π^{−(2k−1)} (1 − 2^{−(2k+1)}) ζ(2k+1)`.
pub fn c_table_series(c: &[Rational]) -> ZetaExpr {
    let mut out = ZetaExpr::zero();
    for (i, ck) in c.iter().enumerate() {
        let k = i as u32 + 1;
        let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
        let coeff = sign * ck * odd_factor(2 * k + 1);
        out.add_term(&PiExpr::term(coeff, -(2 * k as i32 - 1)), 2 * k + 1);
    }
    out
}

/// Approximates `L(f)` from the first `N` odd-index Legendre coefficients.
///
/// No extrapolation is done; convergence in `N` need not be uniform.
pub fn approx_l(f: &FunctionSpec, order: usize) -> Result<ApproxL> {
    approx_l_with(&Integrator::default(), f, order)
}

/// [`approx_l`] with an explicit integrator.
pub fn approx_l_with(q: &Integrator, f: &FunctionSpec, order: usize) -> Result<ApproxL> {
    if order == 0 {
        return Err(Error::domain("approx_l", "need at least one odd term"));
    }
    let ips = (1..=order)
        .map(|j| {
            let n = 2 * j as u32 - 1;
            Ok(q.inner_product(f, &FunctionSpec::ShiftedLegendre(n), COEFF_TOL)?.value)
        })
        .collect::<Result<Vec<f64>>>()?;

    let exact_ips: Vec<Rational> = ips
        .iter()
        .map(|&v| Rational::from_f64(v).expect("inner products are finite"))
        .collect();
    let c = c_table_exact(&exact_ips);
    let value = eval_zeta_expr_precise(&c_table_series(&c));
    let index_sum = ips
        .iter()
        .enumerate()
        .map(|(i, ip)| (4 * i + 3) as f64 * ip * legendre_l_value(2 * i as u32 + 1))
        .sum();

    Ok(ApproxL {
        order,
        c_table: c.iter().map(Rational::to_f64).collect(),
        value,
        index_sum,
    })
}

/// `L(P̃ₙ)` in double precision, cached.
pub fn legendre_l_value(index: u32) -> f64 {
    static CACHE: OnceLock<RwLock<Vec<f64>>> = OnceLock::new();
    if index % 2 == 0 {
        return 0.0;
    }
    let slot = (index / 2) as usize;
    let cache = CACHE.get_or_init(|| RwLock::new(Vec::new()));
    if let Some(v) = cache.read().unwrap().get(slot) {
        return *v;
    }
    let mut w = cache.write().unwrap();
    while w.len() <= slot {
        let i = 2 * w.len() as u32 + 1;
        w.push(eval_zeta_expr_precise(&legendre_l_coeff(i)));
    }
    w[slot]
}

/// `(π/2)⁴ − Σ_{n=1}^{N} (4n−1) L(P̃_{2n−1})²`.
///
/// This is the Parseval remainder of `log tan`; it is positive and
/// decreases to zero, slowly (roughly like `1/N²`).
pub fn parseval_defect(order: usize) -> f64 {
    let partial: f64 = (1..=order)
        .map(|n| {
            let l = legendre_l_value(2 * n as u32 - 1);
            (4 * n - 1) as f64 * l * l
        })
        .sum();
    LOGTAN_PARSEVAL_TOTAL - partial
}

/// `Σ_{n=1}^{N} (4n−1) b_n L(P̃_{2n−1})` with `b_n` from [`byerly_coeff`].
///
/// This is `−(2/π) ∫₀^{π/4} (log tan)_N`, a partial sum converging to
/// Catalan's constant.
pub fn catalan_series(order: usize) -> f64 {
    (1..=order)
        .map(|n| {
            let b = byerly_coeff(n as u32).to_f64();
            (4 * n - 1) as f64 * b * legendre_l_value(2 * n as u32 - 1)
        })
        .sum()
}

/// `(log tan)_N(x) = (2/π) Σ_{n=1}^{N} (4n−1) L(P̃_{2n−1}) P̃_{2n−1}(x)`.
pub fn logtan_expansion(order: usize, x: f64) -> f64 {
    let s: f64 = (1..=order)
        .map(|n| {
            let i = 2 * n as u32 - 1;
            (4 * n - 1) as f64 * legendre_l_value(i) * shifted_legendre_value(i, x)
        })
        .sum();
    2.0 / PI * s
}

/// Largest `|log tan x − (log tan)_N(x)|` over `samples`.
pub fn logtan_reconstruction_error(order: usize, samples: &[f64]) -> Result<f64> {
    samples.iter().try_fold(0.0f64, |worst, &x| {
        if !(x > 0.0 && x < FRAC_PI_2) {
            return Err(Error::domain(
                "logtan_reconstruction_error",
                format!("sample {x} is outside (0, pi/2)"),
            ));
        }
        Ok(worst.max((x.tan().ln() - logtan_expansion(order, x)).abs()))
    })
}

/// 41 equispaced points on `[0.2, π/2 − 0.2]`.
pub fn default_sample_grid() -> Vec<f64> {
    const POINTS: usize = 41;
    let (a, b) = (0.2, FRAC_PI_2 - 0.2);
    (0..POINTS)
        .map(|i| a + (b - a) * i as f64 / (POINTS - 1) as f64)
        .collect()
}

/// Rational `rₙ` with `⟨√x, P̃ₙ⟩ = √(2π) · rₙ`.
///
/// Uses `⟨√x, xᵏ⟩ = √(2π) (π/2)ᵏ / (2k+3)`.
pub fn sqrt_inner_product_exact(n: usize) -> Rational {
    let half_pi = PiExpr::half_pi();
    shifted_legendre(n)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let scaled = (a * &half_pi.pow(k as u32))
                .as_rational()
                .expect("shifted Legendre coefficients scale to rationals");
            scaled / Rational::from(2 * k as i64 + 3)
        })
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Exact `L(f_N)` for `f = √x` truncated after `N` odd terms, returned as
/// `X` with `L(f_N) = X / √(2π)`.
pub fn sqrt_approx_l_exact(order: usize) -> ZetaExpr {
    let two_pi = Rational::from(2);
    let mut out = ZetaExpr::zero();
    for j in 1..=order {
        let i = 2 * j - 1;
        let w = sqrt_inner_product_exact(i) * Rational::from(4 * j as i64 - 1);
        // √(2π) · w · L(P̃ᵢ) = 2π w L(P̃ᵢ) / √(2π)
        let term = legendre_l_coeff(i as u32).scale(&PiExpr::term(w * &two_pi, 1));
        out = out + term;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    use crate::closed_forms::exact_l;
    use crate::constants::catalan;
    use crate::exact::Polynomial;

    const APERY: f64 = 1.202_056_903_159_594_3;

    #[test]
    fn sqrt_inner_products_closed_form() {
        let c = expand(&FunctionSpec::Sqrt, 5).unwrap();
        let s = (2.0 * PI).sqrt();
        let want = [s / 3.0, s / 15.0, -s / 105.0, s / 315.0, -s / 693.0, s / 1287.0];
        for (got, want) in c.inner_products().iter().zip(want) {
            assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        }
        let exact: Vec<String> = (0..6).map(|n| sqrt_inner_product_exact(n).to_string()).collect();
        assert_eq!(exact, ["1/3", "1/15", "-1/105", "1/315", "-1/693", "1/1287"]);
    }

    #[test]
    fn basis_reproduces_itself() {
        let c = expand(&FunctionSpec::polynomial(shifted_legendre(2)), 3).unwrap();
        for (n, v) in c.coeffs.iter().enumerate() {
            let want = if n == 2 { 1.0 } else { 0.0 };
            assert!((v - want).abs() < 1e-12);
        }
    }

    #[test]
    fn linear_reconstruction_is_exact() {
        let c = expand(&FunctionSpec::Monomial(1), 1).unwrap();
        assert!((c.coeffs[0] - PI / 4.0).abs() < 1e-13);
        assert!((c.coeffs[1] - PI / 4.0).abs() < 1e-13);
        for x in [0.1, 0.7, 1.3] {
            assert!((c.reconstruct(x) - x).abs() < 1e-12);
        }
    }

    #[test]
    fn sqrt_degree_five_expansion() {
        let exact = sqrt_approx_l_exact(3);
        assert_eq!(exact.coeff(3), PiExpr::rational(Rational::new(42, 13)));
        assert_eq!(exact.coeff(5), PiExpr::term(Rational::new(-1581, 13), -2));
        assert_eq!(exact.coeff(7), PiExpr::term(Rational::new(13335, 13), -4));
        let v = eval_zeta_expr_precise(&exact) / (2.0 * PI).sqrt();
        assert!((v - 0.688_084_888_082_269_5).abs() < 1e-15);

        let a = approx_l(&FunctionSpec::Sqrt, 3).unwrap();
        assert!((a.value - v).abs() < 1e-12);
        assert!((a.index_sum - a.value).abs() < 1e-12);
    }

    #[test]
    fn linear_input_is_exact_for_every_order() {
        for n in 1..=4 {
            let a = approx_l(&FunctionSpec::Monomial(1), n).unwrap();
            assert!((a.value - 0.875 * APERY).abs() < 1e-12, "n={n}");
        }
        let even = FunctionSpec::polynomial(shifted_legendre(2));
        for n in 1..=3 {
            assert!(approx_l(&even, n).unwrap().value.abs() < 1e-12);
        }
    }

    #[test]
    fn polynomial_projection_matches_exact_value() {
        let p = Polynomial::from_rationals([
            Rational::new(1, 2),
            Rational::from(-3),
            Rational::new(2, 7),
            Rational::from(1),
            Rational::new(-1, 3),
        ]);
        let want = eval_zeta_expr_precise(&exact_l(&p));
        let a = approx_l(&FunctionSpec::polynomial(p), 2).unwrap();
        assert!((a.value - want).abs() < 1e-10);
        assert!((a.index_sum - a.value).abs() < 1e-12);
    }

    #[test]
    fn parseval_defect_behaviour() {
        let d1 = parseval_defect(1);
        let want = LOGTAN_PARSEVAL_TOTAL - 3.0 * (7.0 * APERY / (2.0 * PI)).powi(2);
        assert!((d1 - want).abs() < 1e-14);
        assert!((d1 - 0.707_753_8).abs() < 1e-6);
        let mut prev = d1;
        for n in 2..=40 {
            let d = parseval_defect(n);
            assert!(d > 0.0 && d < prev, "n={n}");
            prev = d;
        }
        assert!((parseval_defect(30) - 1.347_938_423_47e-3).abs() < 1e-12);
    }

    #[test]
    fn catalan_series_values() {
        let first = 0.75 * 7.0 * APERY / (2.0 * PI);
        assert!((catalan_series(1) - first).abs() < 1e-15);
        // high-precision reference for the tenth partial sum
        assert!((catalan_series(10) - 0.915_312_751_760_083).abs() < 1e-13);
        let g = catalan().value;
        assert!((catalan_series(40) - g).abs() < (catalan_series(10) - g).abs());
    }

    #[test]
    fn reconstruction_error() {
        let grid = default_sample_grid();
        assert_eq!(grid.len(), 41);
        for n in [1, 5, 20] {
            assert!(logtan_expansion(n, FRAC_PI_4).abs() < 1e-12);
        }
        assert!(logtan_reconstruction_error(1, &[FRAC_PI_4]).unwrap() < 1e-12);
        let e2 = logtan_reconstruction_error(2, &grid).unwrap();
        let e10 = logtan_reconstruction_error(10, &grid).unwrap();
        assert!(e10 < e2);
        assert!(logtan_reconstruction_error(3, &[0.0]).is_err());
    }

    #[test]
    fn bessel_inequality() {
        for f in [FunctionSpec::Sqrt, FunctionSpec::Exp2z(0.4), FunctionSpec::LogTanPower(1)] {
            let norm2 = Integrator::default().inner_product(&f, &f, 1e-12).unwrap().value;
            let sums = expand(&f, 12).unwrap().parseval_partial_sums();
            assert!(sums.windows(2).all(|w| w[1] >= w[0]));
            assert!(*sums.last().unwrap() <= norm2 + 1e-10, "{f}");
        }
    }
}
