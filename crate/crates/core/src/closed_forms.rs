//! Exact values of `L(f) = ∫₀^{π/2} f(x) log(tan x) dx` for polynomial `f`.
//!
//! [`exact_l`] is the general evaluator. The moment, Euler-polynomial and
//! shifted-Legendre formulas below are kept as separate derivations so they
//! can be checked against it structurally.

use num_bigint::BigInt;

use crate::exact::{binomial, factorial, PiExpr, Polynomial, Rational, ZetaExpr};

/// `1 − 2^{−m}`, the factor turning `ζ(m)` into `Σ_{n≥0} (2n+1)^{−m}`.
pub fn odd_factor(m: u32) -> Rational {
    Rational::one() - Rational::pow2_inv(m)
}

fn sign(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `L(P)` for a polynomial with [`PiExpr`] coefficients.
///
/// Sums `(−1)^{k−1} / 2^{2k−1} · [P^{(2k−1)}(π/2) + P^{(2k−1)}(0)] · (1 − 2^{−(2k+1)}) ζ(2k+1)`
/// over `k = 1..=⌊(deg+1)/2⌋`. Constants map to zero.
pub fn exact_l(p: &Polynomial) -> ZetaExpr {
    let mut out = ZetaExpr::zero();
    let half_pi = PiExpr::half_pi();
    let kmax = (p.degree() as u32 + 1) / 2;
    let mut deriv = p.derivative();
    for k in 1..=kmax {
        let ends = &deriv.eval(&half_pi) + &deriv.eval(&PiExpr::zero());
        let w = Rational::from(sign(k - 1)) * Rational::pow2_inv(2 * k - 1) * odd_factor(2 * k + 1);
        out.add_term(&ends.scale(&w), 2 * k + 1);
        deriv = deriv.derivative().derivative();
    }
    out
}

/// A moment `L(xⁿ)` together with its degree.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentResult {
    pub value: ZetaExpr,
    pub degree: u32,
}

/// `L(xⁿ)` from the floor-indexed moment formula:
/// an optional `ζ(n+2)` term for odd `n`, plus
/// `n!/2ⁿ Σ_{k=1}^{⌊n/2⌋} (−1)^{k−1} π^{n−2k+1}/(n−2k+1)! (1 − 2^{−(2k+1)}) ζ(2k+1)`.
pub fn moment(n: u32) -> MomentResult {
    assert!(n >= 1, "moment order must be positive");
    let nf = Rational::from(factorial(n));
    let mut value = ZetaExpr::zero();
    if n % 2 == 1 {
        let c = Rational::from(sign((n - 1) / 2)) * &nf * Rational::pow2_inv(n - 1) * odd_factor(n + 2);
        value.add_term(&PiExpr::rational(c), n + 2);
    }
    for k in 1..=n / 2 {
        let c = Rational::from(sign(k - 1)) * &nf * Rational::pow2_inv(n)
            / Rational::from(factorial(n - 2 * k + 1))
            * odd_factor(2 * k + 1);
        value.add_term(&PiExpr::term(c, (n - 2 * k + 1) as i32), 2 * k + 1);
    }
    MomentResult { value, degree: n }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// `L(E_{2n}(2x/π)) = 0` and
/// `L(E_{2n−1}(2x/π)) = (−1)^{n−1} (2n−1)! π^{−(2n−1)} (2 − 2^{−2n}) ζ(2n+1)`.
pub fn euler_integral(n: u32, parity: Parity) -> ZetaExpr {
    assert!(n >= 1);
    match parity {
        Parity::Even => ZetaExpr::zero(),
        Parity::Odd => {
            let c = Rational::from(sign(n - 1)) * Rational::from(factorial(2 * n - 1))
                * (Rational::from(2) - Rational::pow2_inv(2 * n));
            ZetaExpr::term(PiExpr::term(c, -(2 * n as i32 - 1)), 2 * n + 1)
        }
    }
}

/// `∫₀^{π/4} E_{2n−1}(2x/π) log(tan x) dx`, which is exactly half of the
/// full-interval value.
pub fn euler_integral_half(n: u32) -> ZetaExpr {
    assert!(n >= 1);
    let c = Rational::from(sign(n - 1)) * Rational::from(factorial(2 * n - 1)) * odd_factor(2 * n + 1);
    ZetaExpr::term(PiExpr::term(c, -(2 * n as i32 - 1)), 2 * n + 1)
}

/// `L(E_{2n}(2x/π + y))` (even) or `L(E_{2n−1}(2x/π + y))` (odd).
///
/// Expanding by the translation property leaves only odd-index Euler
/// integrals, giving
/// `2 (2n)! Σ_k (−1)^{k−1} π^{−(2k−1)} (1 − 2^{−(2k+1)}) ζ(2k+1) y^{2n−2k+1}/(2n−2k+1)!`
/// and the analogous odd sum with `y^{2n−2k}/(2n−2k)!`.
pub fn euler_translated(n: u32, parity: Parity, y: &Rational) -> ZetaExpr {
    assert!(n >= 1);
    let (top, extra) = match parity {
        Parity::Even => (2 * n, 1),
        Parity::Odd => (2 * n - 1, 0),
    };
    let lead = Rational::from(2) * Rational::from(factorial(top));
    let mut out = ZetaExpr::zero();
    for k in 1..=n {
        let e = 2 * n - 2 * k + extra;
        let c = Rational::from(sign(k - 1)) * &lead * odd_factor(2 * k + 1) * y.pow(e as i32)
            / Rational::from(factorial(e));
        out.add_term(&PiExpr::term(c, -(2 * k as i32 - 1)), 2 * k + 1);
    }
    out
}

/// `∫₀^{π/2} cos(2kx) log(tan x) dx`: zero for even `k`, `−π/(2k)` for odd.
pub fn cos_lemma(k: u32) -> PiExpr {
    assert!(k >= 1);
    if k % 2 == 0 {
        PiExpr::zero()
    } else {
        PiExpr::term(Rational::new(-1, 2 * k as i64), 1)
    }
}

/// `L(P̃_index)` from the closed coefficient formula.
///
/// Even indices vanish. For `index = 2n − 1`,
/// `2 Σ_{k=1}^{n} (−1)^{k−1} π^{−(2k−1)} (2(n+k−1))! / ((2k−1)! (2(n−k))!) (1 − 2^{−(2k+1)}) ζ(2k+1)`.
pub fn legendre_l_coeff(index: u32) -> ZetaExpr {
    if index % 2 == 0 {
        return ZetaExpr::zero();
    }
    let n = (index + 1) / 2;
    let mut out = ZetaExpr::zero();
    for k in 1..=n {
        let ratio = Rational::new(
            factorial(2 * (n + k - 1)) * 2 * sign(k - 1),
            factorial(2 * k - 1) * factorial(2 * (n - k)),
        );
        out.add_term(
            &PiExpr::term(ratio * odd_factor(2 * k + 1), -(2 * k as i32 - 1)),
            2 * k + 1,
        );
    }
    out
}

/// `(−1)^{n−1} C(2n−2, n−1) / (2^{2n} n) = −(2/π) ∫₀^{π/4} P̃_{2n−1}(x) dx`.
pub fn byerly_coeff(n: u32) -> Rational {
    assert!(n >= 1);
    Rational::new(
        binomial(2 * n - 2, n - 1) * sign(n - 1),
        BigInt::from(n) << (2 * n) as usize,
    )
}
