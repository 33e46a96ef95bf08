use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{PiExpr, Rational};

/// Dense univariate polynomial in `x` with [`PiExpr`] coefficients.
///
/// `coeffs[k]` multiplies `x^k`. Trailing zeros are stripped, so the zero
/// polynomial has no coefficients and the last stored one is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<PiExpr>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<PiExpr>) -> Self {
        while coeffs.last().is_some_and(PiExpr::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_rationals(coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Polynomial::new(coeffs.into_iter().map(PiExpr::rational).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: PiExpr) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn one() -> Self {
        Polynomial::constant(PiExpr::one())
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![PiExpr::zero(); n + 1];
        coeffs[n] = PiExpr::one();
        Polynomial { coeffs }
    }

    /// `a·x + b`.
    pub fn linear(a: PiExpr, b: PiExpr) -> Self {
        Polynomial::new(vec![b, a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[PiExpr] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> PiExpr {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &PiExpr) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&PiExpr::rational(r.clone()))
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from(k as i64)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(PiExpr::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1, k as i64 + 1)));
        }
        Polynomial::new(coeffs)
    }

    /// Exact `∫_a^b P(x) dx`.
    pub fn integrate(&self, a: &PiExpr, b: &PiExpr) -> PiExpr {
        let anti = self.antiderivative();
        &anti.eval(b) - &anti.eval(a)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &PiExpr) -> PiExpr {
        self.coeffs
            .iter()
            .rev()
            .fold(PiExpr::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Exact value of the `order`-th derivative at `x`; zero past the degree.
    pub fn derivative_at(&self, order: usize, x: &PiExpr) -> PiExpr {
        if order >= self.coeffs.len() {
            return PiExpr::zero();
        }
        self.nth_derivative(order).eval(x)
    }

    /// `P(a·x + b)` as a polynomial in `x`.
    pub fn compose_linear(&self, a: &PiExpr, b: &PiExpr) -> Self {
        let inner = Polynomial::linear(a.clone(), b.clone());
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * &inner) + &Polynomial::constant(c.clone())
        })
    }

    /// Floating-point coefficients, lowest degree first.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(PiExpr::to_f64).collect()
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![PiExpr::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Polynomial[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x^{k}: {c}")?;
        }
        f.write_str("]")
    }
}
