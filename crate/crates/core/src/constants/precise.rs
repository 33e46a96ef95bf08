//! Fixed-point evaluation of π, ζ(s) and exact zeta combinations.
//!
//! Shifted-Legendre coefficients of log tan are tiny differences of huge
//! terms (index 59 already cancels about 85 decimal digits), so they are
//! evaluated here with a working precision chosen from the largest term.
//! A value `v` at `bits` of precision stands for `v / 2^bits`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{bernoulli, factorial, PiExpr, Rational, ZetaExpr};

const GUARD_BITS: u32 = 32;
const MIN_BITS: u32 = 128;

/// A fixed-point value kept at the highest precision computed so far.
struct Cached {
    bits: u32,
    value: BigInt,
}

fn rescale(c: &Cached, bits: u32) -> BigInt {
    &c.value >> (c.bits - bits) as usize
}

fn round_bits(bits: u32) -> u32 {
    bits.max(MIN_BITS).div_ceil(128) * 128
}

fn pi_cache() -> &'static RwLock<Option<Cached>> {
    static CACHE: OnceLock<RwLock<Option<Cached>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(None))
}

fn zeta_cache() -> &'static RwLock<HashMap<u32, Cached>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Cached>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `atan(1/x)` scaled by `2^bits`.
fn atan_inv(x: u32, bits: u32) -> BigInt {
    let x2 = BigInt::from(x) * x;
    let mut power = (BigInt::one() << bits as usize) / x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// `π · 2^bits` (truncated), from Machin's formula.
pub fn pi_fixed(bits: u32) -> BigInt {
    if let Some(c) = pi_cache().read().unwrap().as_ref() {
        if c.bits >= bits {
            return rescale(c, bits);
        }
    }
    let work = round_bits(bits);
    let wb = work + GUARD_BITS;
    let value = ((atan_inv(5, wb) << 4) - (atan_inv(239, wb) << 2)) >> GUARD_BITS as usize;
    let cached = Cached { bits: work, value };
    let out = rescale(&cached, bits);
    let mut slot = pi_cache().write().unwrap();
    if slot.as_ref().is_none_or(|c| c.bits < work) {
        *slot = Some(cached);
    }
    out
}

fn rational_to_fixed(r: &Rational, bits: u32) -> BigInt {
    (r.numer() << bits as usize) / r.denom()
}

/// `ζ(s) · 2^bits` for integer `s ≥ 2` by Euler–Maclaurin summation with
/// exact Bernoulli corrections.
pub fn zeta_fixed(s: u32, bits: u32) -> BigInt {
    assert!(s >= 2, "zeta_fixed needs s >= 2");
    if let Some(c) = zeta_cache().read().unwrap().get(&s) {
        if c.bits >= bits {
            return rescale(c, bits);
        }
    }
    let work = round_bits(bits);
    let wb = work + GUARD_BITS;
    let one = BigInt::one() << wb as usize;
    let n = work / 2 + s;
    let big_n = BigInt::from(n);

    let mut sum = BigInt::zero();
    for k in (1..n).rev() {
        sum += &one / BigInt::from(k).pow(s);
    }
    let n_pow = big_n.pow(s - 1);
    sum += &one / (&n_pow * (s - 1));
    sum += &one / (&n_pow * &big_n * 2u32);

    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · N^{−(s+2j−1)}
    let mut rising = BigInt::from(s);
    let mut denom_pow = &n_pow * &big_n * &big_n;
    let mut prev: Option<BigInt> = None;
    for j in 1u32.. {
        let b = bernoulli(2 * j as usize);
        let c = Rational::new(b.numer() * &rising, b.denom() * factorial(2 * j) * &denom_pow);
        let term = rational_to_fixed(&c, wb);
        if term.is_zero() {
            break;
        }
        if let Some(p) = &prev {
            assert!(term.abs() < p.abs(), "Euler-Maclaurin terms stopped decreasing");
        }
        sum += &term;
        prev = Some(term);
        rising *= BigInt::from(s + 2 * j - 1) * (s + 2 * j);
        denom_pow *= &big_n * &big_n;
    }
    let cached = Cached {
        bits: work,
        value: sum >> GUARD_BITS as usize,
    };
    let out = rescale(&cached, bits);
    let mut map = zeta_cache().write().unwrap();
    if map.get(&s).is_none_or(|c| c.bits < work) {
        map.insert(s, cached);
    }
    out
}

/// Nearest-ish `f64` to `v / 2^bits` (within one ulp).
pub fn fixed_to_f64(v: &BigInt, bits: u32) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let shift = v.bits().saturating_sub(64);
    let top = (v >> shift as usize).to_f64().expect("64-bit value fits");
    let e = shift as i64 - bits as i64;
    let half = (e / 2) as i32;
    top * 2f64.powi(half) * 2f64.powi((e - half as i64) as i32)
}

fn log2_magnitude(r: &Rational, power: i32) -> i64 {
    r.numer().bits() as i64 - r.denom().bits() as i64 + 2 * power.max(0) as i64 + 2
}

struct Workspace {
    bits: u32,
    pi: BigInt,
    inv_pi: BigInt,
    pi_powers: HashMap<i32, BigInt>,
}

impl Workspace {
    fn new(bits: u32) -> Self {
        let pi = pi_fixed(bits);
        let inv_pi = (BigInt::one() << (2 * bits) as usize) / &pi;
        Workspace {
            bits,
            pi,
            inv_pi,
            pi_powers: HashMap::new(),
        }
    }

    fn pi_pow(&mut self, p: i32) -> BigInt {
        if let Some(v) = self.pi_powers.get(&p) {
            return v.clone();
        }
        let base = if p >= 0 { &self.pi } else { &self.inv_pi };
        let mut acc = BigInt::one() << self.bits as usize;
        for _ in 0..p.unsigned_abs() {
            acc = (acc * base) >> self.bits as usize;
        }
        self.pi_powers.insert(p, acc.clone());
        acc
    }

    fn pi_expr(&mut self, e: &PiExpr) -> BigInt {
        let mut sum = BigInt::zero();
        for (p, r) in e.terms() {
            let v = r.numer() * self.pi_pow(p);
            sum += v.div_floor(r.denom());
        }
        sum
    }
}

fn bits_for(magnitude: i64) -> u32 {
    (magnitude.max(0) as u32 + 96 + GUARD_BITS).max(MIN_BITS)
}

/// Value of `e` correct to double precision regardless of cancellation.
pub fn eval_zeta_expr_precise(e: &ZetaExpr) -> f64 {
    let magnitude = e
        .terms()
        .flat_map(|(_, c)| c.terms().map(|(p, r)| log2_magnitude(r, p)))
        .max()
        .unwrap_or(0);
    let bits = bits_for(magnitude);
    let mut ws = Workspace::new(bits);
    let mut sum = BigInt::zero();
    for (m, coeff) in e.terms() {
        let c = ws.pi_expr(coeff);
        sum += (c * zeta_fixed(m, bits)) >> bits as usize;
    }
    fixed_to_f64(&sum, bits)
}

/// Value of `e` correct to double precision regardless of cancellation.
pub fn eval_pi_expr_precise(e: &PiExpr) -> f64 {
    let magnitude = e.terms().map(|(p, r)| log2_magnitude(r, p)).max().unwrap_or(0);
    let bits = bits_for(magnitude);
    let mut ws = Workspace::new(bits);
    let v = ws.pi_expr(e);
    fixed_to_f64(&v, bits)
}
