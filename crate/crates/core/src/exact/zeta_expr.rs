use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use super::pi_expr::{join_signed, write_monomial};
use super::{PiExpr, Rational};
use crate::error::{Error, Result};

/// A finite combination `Σ_m c_m · ζ(m)` over odd `m ≥ 3`, with each
/// `c_m` a [`PiExpr`].
///
/// This is the exact codomain of `L` on polynomials. Equality is
/// structural; there is no numeric fallback.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZetaExpr {
    terms: BTreeMap<u32, PiExpr>,
}

impl ZetaExpr {
    pub fn zero() -> Self {
        ZetaExpr::default()
    }

    /// `coeff · ζ(m)`.
    ///
    /// # Panics
    /// If `m` is even or below 3.
    pub fn term(coeff: PiExpr, m: u32) -> Self {
        let mut e = ZetaExpr::zero();
        e.add_term(&coeff, m);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: &PiExpr, m: u32) {
        assert!(m >= 3 && m % 2 == 1, "zeta index must be odd and >= 3, got {m}");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Iterates `(m, coefficient of ζ(m))` in ascending `m`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &PiExpr)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, m: u32) -> PiExpr {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Largest zeta index present.
    pub fn max_index(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &PiExpr) -> Self {
        let mut out = ZetaExpr::zero();
        for (&m, e) in &self.terms {
            out.add_term(&(e * c), m);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&PiExpr::rational(r.clone()))
    }
}

impl Add for &ZetaExpr {
    type Output = ZetaExpr;
    fn add(self, rhs: &ZetaExpr) -> ZetaExpr {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(c, m);
        }
        out
    }
}

impl Add for ZetaExpr {
    type Output = ZetaExpr;
    fn add(self, rhs: ZetaExpr) -> ZetaExpr {
        &self + &rhs
    }
}

impl Sub for &ZetaExpr {
    type Output = ZetaExpr;
    fn sub(self, rhs: &ZetaExpr) -> ZetaExpr {
        self + &(-rhs)
    }
}

impl Sub for ZetaExpr {
    type Output = ZetaExpr;
    fn sub(self, rhs: ZetaExpr) -> ZetaExpr {
        &self - &rhs
    }
}

impl Neg for &ZetaExpr {
    type Output = ZetaExpr;
    fn neg(self) -> ZetaExpr {
        ZetaExpr {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for ZetaExpr {
    type Output = ZetaExpr;
    fn neg(self) -> ZetaExpr {
        -&self
    }
}

impl fmt::Display for ZetaExpr {
    /// Renders `7/16 * pi * zeta(3) - 93/64 * zeta(5)`: one monomial per
    /// `(π-power, ζ-index)` pair, unit factors omitted, `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        for (&m, coeff) in &self.terms {
            let zeta = format!("zeta({m})");
            let mut powers: Vec<_> = coeff.terms().collect();
            powers.reverse();
            for (p, r) in powers {
                let mut s = String::new();
                let neg = write_monomial(&mut s, r, p, Some(&zeta));
                items.push((neg, s));
            }
        }
        f.write_str(&join_signed(items))
    }
}

impl fmt::Debug for ZetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZetaExpr({self})")
    }
}

impl FromStr for ZetaExpr {
    type Err = Error;

    /// Parses the rendering produced by `Display`. Factors inside a term
    /// may come in any order, but each term needs exactly one `zeta(m)`.
    fn from_str(s: &str) -> Result<Self> {
        Parser { src: s, pos: 0 }.expr()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{token}`")))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && bytes[end] == b'-' {
            end += 1;
        }
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        let text = &self.src[start..end];
        let value = text
            .parse()
            .map_err(|_| Error::parse(start, "expected an integer"))?;
        self.pos = end;
        Ok(value)
    }

    fn small_int(&mut self) -> Result<i64> {
        let at = self.pos;
        let n = self.integer()?;
        i64::try_from(n).map_err(|_| Error::parse(at, "exponent out of range"))
    }

    fn expr(&mut self) -> Result<ZetaExpr> {
        let mut out = ZetaExpr::zero();
        let mut negative = self.eat("-");
        loop {
            self.term(negative, &mut out)?;
            self.skip_ws();
            if self.pos == self.src.len() {
                return Ok(out);
            }
            negative = if self.eat("+") {
                false
            } else if self.eat("-") {
                true
            } else {
                return Err(Error::parse(self.pos, "expected `+`, `-` or end of input"));
            };
        }
    }

    fn term(&mut self, negative: bool, out: &mut ZetaExpr) -> Result<()> {
        let start = self.pos;
        let mut coeff = Rational::one();
        let mut power = 0i32;
        let mut zeta: Option<u32> = None;
        let mut only_zero = false;
        loop {
            self.skip_ws();
            let at = self.pos;
            if self.eat("zeta") {
                self.expect("(")?;
                let m = self.small_int()?;
                if m < 3 || m % 2 == 0 {
                    return Err(Error::parse(at, format!("zeta index {m} is not odd and >= 3")));
                }
                self.expect(")")?;
                if zeta.replace(m as u32).is_some() {
                    return Err(Error::parse(at, "more than one zeta factor in a term"));
                }
            } else if self.eat("pi") {
                let p = if self.eat("^") { self.small_int()? } else { 1 };
                power += i32::try_from(p).map_err(|_| Error::parse(at, "exponent out of range"))?;
            } else {
                let numer = self.integer()?;
                let denom = if self.eat("/") {
                    let d_at = self.pos;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(Error::parse(d_at, "zero denominator"));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                let r = Rational::new(numer, denom);
                only_zero = r.is_zero();
                coeff = &coeff * &r;
            }
            if !self.eat("*") {
                break;
            }
        }
        match zeta {
            Some(m) => {
                let c = if negative { -coeff } else { coeff };
                out.add_term(&PiExpr::term(c, power), m);
                Ok(())
            }
            None if only_zero && power == 0 => Ok(()),
            None => Err(Error::parse(start, "term has no zeta factor")),
        }
    }
}
