use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// A finite sum `Σ_j r_j · π^j` with rational `r_j` and integer `j`.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PiExpr {
    terms: BTreeMap<i32, Rational>,
}

impl PiExpr {
    pub fn zero() -> Self {
        PiExpr::default()
    }

    pub fn one() -> Self {
        PiExpr::rational(Rational::one())
    }

    pub fn rational(r: Rational) -> Self {
        PiExpr::term(r, 0)
    }

    pub fn integer(n: i64) -> Self {
        PiExpr::rational(Rational::from(n))
    }

    /// `r · π^power`.
    pub fn term(r: Rational, power: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(power, r);
        }
        PiExpr { terms }
    }

    /// `π^power`.
    pub fn pi_pow(power: i32) -> Self {
        PiExpr::term(Rational::one(), power)
    }

    /// `π / 2`, the right endpoint of the integration range.
    pub fn half_pi() -> Self {
        PiExpr::term(Rational::new(1, 2), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(power, coefficient)` in ascending power.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(&p, r)| (p, r))
    }

    pub fn coeff(&self, power: i32) -> Rational {
        self.terms.get(&power).cloned().unwrap_or_default()
    }

    /// The rational value when no π power is present.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, r: &Rational, power: i32) {
        if r.is_zero() {
            return;
        }
        let entry = self.terms.entry(power).or_default();
        *entry += r;
        if entry.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return PiExpr::zero();
        }
        PiExpr {
            terms: self.terms.iter().map(|(&p, c)| (p, c * r)).collect(),
        }
    }

    /// Multiplies by `π^shift`.
    pub fn shift_pi(&self, shift: i32) -> Self {
        PiExpr {
            terms: self.terms.iter().map(|(&p, c)| (p + shift, c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(PiExpr::one(), |acc, _| &acc * self)
    }

    /// Numeric value with `π` at full double precision.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&p, r)| r.to_f64() * std::f64::consts::PI.powi(p))
            .sum()
    }
}

impl From<Rational> for PiExpr {
    fn from(r: Rational) -> Self {
        PiExpr::rational(r)
    }
}

impl Add for &PiExpr {
    type Output = PiExpr;
    fn add(self, rhs: &PiExpr) -> PiExpr {
        let mut out = self.clone();
        for (&p, r) in &rhs.terms {
            out.add_term(r, p);
        }
        out
    }
}

impl Add for PiExpr {
    type Output = PiExpr;
    fn add(self, rhs: PiExpr) -> PiExpr {
        &self + &rhs
    }
}

impl Sub for &PiExpr {
    type Output = PiExpr;
    fn sub(self, rhs: &PiExpr) -> PiExpr {
        self + &(-rhs)
    }
}

impl Sub for PiExpr {
    type Output = PiExpr;
    fn sub(self, rhs: PiExpr) -> PiExpr {
        &self - &rhs
    }
}

impl Mul for &PiExpr {
    type Output = PiExpr;
    fn mul(self, rhs: &PiExpr) -> PiExpr {
        let mut out = PiExpr::zero();
        for (&p, a) in &self.terms {
            for (&q, b) in &rhs.terms {
                out.add_term(&(a * b), p + q);
            }
        }
        out
    }
}

impl Mul for PiExpr {
    type Output = PiExpr;
    fn mul(self, rhs: PiExpr) -> PiExpr {
        &self * &rhs
    }
}

impl Neg for &PiExpr {
    type Output = PiExpr;
    fn neg(self) -> PiExpr {
        PiExpr {
            terms: self.terms.iter().map(|(&p, c)| (p, -c)).collect(),
        }
    }
}

impl Neg for PiExpr {
    type Output = PiExpr;
    fn neg(self) -> PiExpr {
        -&self
    }
}

/// Writes a signed product `[p/q][ * pi^j][ * tail]`, omitting unit factors.
/// The sign is returned separately so callers can join with ` + ` / ` - `.
pub(crate) fn write_monomial(
    out: &mut String,
    coeff: &Rational,
    power: i32,
    tail: Option<&str>,
) -> bool {
    let negative = coeff.is_negative();
    let mag = coeff.abs();
    let mut parts: Vec<String> = Vec::new();
    if !mag.is_one() || (power == 0 && tail.is_none()) {
        parts.push(mag.to_string());
    }
    match power {
        0 => {}
        1 => parts.push("pi".to_owned()),
        p => parts.push(format!("pi^{p}")),
    }
    if let Some(t) = tail {
        parts.push(t.to_owned());
    }
    out.push_str(&parts.join(" * "));
    negative
}

/// Joins signed monomials with ` + ` / ` - `; an empty list renders `0`.
pub(crate) fn join_signed(items: Vec<(bool, String)>) -> String {
    if items.is_empty() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, (neg, body)) in items.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for PiExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self
            .terms
            .iter()
            .rev()
            .map(|(&p, r)| {
                let mut s = String::new();
                let neg = write_monomial(&mut s, r, p, None);
                (neg, s)
            })
            .collect();
        f.write_str(&join_signed(items))
    }
}

impl fmt::Debug for PiExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiExpr({self})")
    }
}
