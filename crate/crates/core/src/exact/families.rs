//! Bernoulli numbers, Euler polynomials and shifted Legendre polynomials.

use std::sync::{OnceLock, RwLock};

use super::rational::{binomial, factorial};
use super::{PiExpr, Polynomial, Rational};
use crate::error::{Error, Result};

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Builds the table by `Σ_{k=0}^{n} C(n+1, k) B_k = 0`.
    pub fn up_to(n: usize) -> Self {
        let mut values: Vec<Rational> = Vec::with_capacity(n + 1);
        values.push(Rational::one());
        for m in 1..=n {
            values.push(next_bernoulli(&values, m));
        }
        BernoulliTable { values }
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

fn next_bernoulli(prev: &[Rational], m: usize) -> Rational {
    if m > 1 && m % 2 == 1 {
        return Rational::zero();
    }
    let mut acc = Rational::zero();
    for (k, b) in prev.iter().enumerate().take(m) {
        if !b.is_zero() {
            acc += &(b * &Rational::from(binomial(m as u32 + 1, k as u32)));
        }
    }
    -(acc / Rational::from(m as i64 + 1))
}

fn bernoulli_cache() -> &'static RwLock<Vec<Rational>> {
    static CACHE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Exact `B_n`, memoised process-wide.
pub fn bernoulli(n: usize) -> Rational {
    if let Some(b) = bernoulli_cache().read().unwrap().get(n) {
        return b.clone();
    }
    let mut table = bernoulli_cache().write().unwrap();
    while table.len() <= n {
        let m = table.len();
        let b = next_bernoulli(&table, m);
        table.push(b);
    }
    table[n].clone()
}

/// `E_0..=E_n` by `E_n(x) = x^n − ½ Σ_{k<n} C(n,k) E_k(x)`.
pub fn euler_polys(n: usize) -> Vec<Polynomial> {
    let half = Rational::new(1, 2);
    let mut out: Vec<Polynomial> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut p = Polynomial::monomial(m);
        for (k, ek) in out.iter().enumerate() {
            let c = &half * &Rational::from(binomial(m as u32, k as u32));
            p = &p - &ek.scale_rational(&c);
        }
        out.push(p);
    }
    out
}

/// Euler polynomial `E_n(x)`; its coefficients are rational.
pub fn euler_poly(n: usize) -> Polynomial {
    euler_polys(n).pop().expect("non-empty")
}

/// `E_n(2x/π)` as a polynomial in `x`; the `x^k` coefficient carries `π^-k`.
pub fn euler_poly_scaled(n: usize) -> Polynomial {
    euler_poly(n).compose_linear(&PiExpr::term(Rational::from(2), -1), &PiExpr::zero())
}

/// Shifted Legendre polynomial on `[0, π/2]` from the explicit sum
/// `(−1)^n Σ_k C(n,k) C(n+k,k) (−2/π)^k x^k`.
pub fn shifted_legendre(n: usize) -> Polynomial {
    let n32 = n as u32;
    Polynomial::new(
        (0..=n32)
            .map(|k| {
                let mag = binomial(n32, k) * binomial(n32 + k, k) << k as usize;
                let sign = if (n32 + k) % 2 == 0 { 1 } else { -1 };
                PiExpr::term(Rational::from(mag * sign), -(k as i32))
            })
            .collect(),
    )
}

/// The same polynomial from Rodrigues' formula
/// `(−1)^n/n! (2/π)^n dⁿ/dxⁿ [xⁿ (π/2 − x)ⁿ]`.
pub fn shifted_legendre_rodrigues(n: usize) -> Polynomial {
    let base = &Polynomial::monomial(1)
        * &Polynomial::linear(PiExpr::integer(-1), PiExpr::half_pi());
    let power = (0..n).fold(Polynomial::one(), |acc, _| &acc * &base);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let scale = PiExpr::term(
        Rational::new(sign * (num_bigint::BigInt::from(1) << n), factorial(n as u32)),
        -(n as i32),
    );
    power.nth_derivative(n).scale(&scale)
}

/// `P̃_n^{(m)}(0) = (−1)^{n+m} (2/π)^m (n+m)! / (m! (n−m)!)`.
pub fn shifted_legendre_deriv_at_zero(n: usize, m: usize) -> Result<PiExpr> {
    if m > n {
        return Err(Error::domain(
            "shifted_legendre_deriv_at_zero",
            format!("derivative order {m} exceeds degree {n}"),
        ));
    }
    let (n32, m32) = (n as u32, m as u32);
    let mag = factorial(n32 + m32) << m;
    let den = factorial(m32) * factorial(n32 - m32);
    let sign = if (n + m) % 2 == 0 { 1 } else { -1 };
    Ok(PiExpr::term(Rational::new(mag * sign, den), -(m as i32)))
}

/// Exact `order`-th derivative of `p` at `point`; zero once `order` exceeds
/// the degree.
pub fn poly_derivative_at(p: &Polynomial, order: usize, point: &PiExpr) -> PiExpr {
    p.derivative_at(order, point)
}
