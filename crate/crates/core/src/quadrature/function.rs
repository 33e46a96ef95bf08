use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{shifted_legendre, Polynomial, Rational};

/// A polynomial integrand with its double-precision coefficients cached.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySpec {
    exact: Polynomial,
    coeffs: Vec<f64>,
}

impl PolySpec {
    pub fn new(exact: Polynomial) -> Self {
        let coeffs = exact.to_f64_coeffs();
        PolySpec { exact, coeffs }
    }

    pub fn exact(&self) -> &Polynomial {
        &self.exact
    }

    fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// The catalogue of integrands understood by the quadrature and projection
/// code.
#[derive(Clone, Debug, PartialEq)]
pub enum FunctionSpec {
    Polynomial(PolySpec),
    /// `xⁿ`
    Monomial(u32),
    /// `P̃ₙ(x)`, evaluated by the three-term recurrence.
    ShiftedLegendre(u32),
    /// `√x`
    Sqrt,
    /// `e^{2zx}`
    Exp2z(f64),
    /// `cos(2zx)`
    Cos2z(f64),
    /// `sinh(2zx − πz/2)`
    SinhShift(f64),
    /// `(log tan x)^p`
    LogTanPower(u32),
    /// `x · log sin x`
    LogSineX,
}

/// Names accepted by [`FunctionSpec::from_str`].
pub const CATALOG: &[&str] = &[
    "x",
    "x^N",
    "sqrt",
    "legendreN",
    "exp2z:Z",
    "cos2z:Z",
    "sinh:Z",
    "logtan",
    "logtan^2",
    "logsine",
    "poly:c0,c1,...",
];

/// `P̃ₙ(x)` via `(k+1) P_{k+1}(t) = (2k+1) t P_k(t) − k P_{k−1}(t)` with
/// `t = 4x/π − 1`.
pub fn shifted_legendre_value(n: u32, x: f64) -> f64 {
    legendre_value(n, 4.0 * x / PI - 1.0)
}

fn legendre_value(n: u32, t: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, t);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * t * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn falling(n: u32, k: u32) -> f64 {
    (0..k).map(|i| (n - i) as f64).product()
}

impl FunctionSpec {
    pub fn polynomial(p: Polynomial) -> Self {
        FunctionSpec::Polynomial(PolySpec::new(p))
    }

    /// Value at `x ∈ (0, π/2)`.
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            FunctionSpec::Polynomial(p) => p.eval(x),
            FunctionSpec::Monomial(n) => x.powi(*n as i32),
            FunctionSpec::ShiftedLegendre(n) => shifted_legendre_value(*n, x),
            FunctionSpec::Sqrt => x.sqrt(),
            FunctionSpec::Exp2z(z) => (2.0 * z * x).exp(),
            FunctionSpec::Cos2z(z) => (2.0 * z * x).cos(),
            FunctionSpec::SinhShift(z) => (2.0 * z * x - FRAC_PI_2 * z).sinh(),
            FunctionSpec::LogTanPower(p) => x.tan().ln().powi(*p as i32),
            FunctionSpec::LogSineX => x * x.sin().ln(),
        }
    }

    /// Value at `π/2 − u`, accurate when `u` is tiny.
    pub fn eval_reflected(&self, u: f64) -> f64 {
        match self {
            FunctionSpec::ShiftedLegendre(n) => {
                let s = if n % 2 == 0 { 1.0 } else { -1.0 };
                s * shifted_legendre_value(*n, u)
            }
            FunctionSpec::LogTanPower(p) => (-u.tan().ln()).powi(*p as i32),
            FunctionSpec::LogSineX => (FRAC_PI_2 - u) * u.cos().ln(),
            other => other.eval(FRAC_PI_2 - u),
        }
    }

    /// `sup |f|` on `[0, π/2]`, or `None` when `f` is unbounded.
    pub fn sup_norm(&self) -> Option<f64> {
        match self {
            FunctionSpec::Monomial(n) => Some(FRAC_PI_2.powi(*n as i32)),
            FunctionSpec::ShiftedLegendre(_) => Some(1.0),
            FunctionSpec::Sqrt => Some(FRAC_PI_2.sqrt()),
            FunctionSpec::Exp2z(z) => Some((PI * z).exp().max(1.0)),
            FunctionSpec::Cos2z(_) => Some(1.0),
            FunctionSpec::SinhShift(z) => Some((FRAC_PI_2 * z.abs()).sinh()),
            FunctionSpec::LogTanPower(_) => None,
            FunctionSpec::Polynomial(_) | FunctionSpec::LogSineX => {
                const SAMPLES: usize = 20_000;
                let max = (1..SAMPLES)
                    .map(|i| self.eval(FRAC_PI_2 * i as f64 / SAMPLES as f64).abs())
                    .fold(0.0, f64::max);
                let ends = match self {
                    FunctionSpec::Polynomial(p) => p.eval(0.0).abs().max(p.eval(FRAC_PI_2).abs()),
                    _ => 0.0,
                };
                Some(max.max(ends))
            }
        }
    }

    /// `f^{(order)}(x)` for the smooth kinds; `None` for the rest.
    pub fn derivative(&self, order: u32, x: f64) -> Option<f64> {
        let k = order as i32;
        match self {
            FunctionSpec::Polynomial(p) => Some(p.exact().nth_derivative(order as usize).eval_f64(x)),
            FunctionSpec::Monomial(n) => Some(if order > *n {
                0.0
            } else {
                falling(*n, order) * x.powi((*n - order) as i32)
            }),
            FunctionSpec::ShiftedLegendre(n) => Some(
                shifted_legendre(*n as usize)
                    .nth_derivative(order as usize)
                    .eval_f64(x),
            ),
            FunctionSpec::Exp2z(z) => Some((2.0 * z).powi(k) * (2.0 * z * x).exp()),
            FunctionSpec::Cos2z(z) => {
                Some((2.0 * z).powi(k) * (2.0 * z * x + order as f64 * FRAC_PI_2).cos())
            }
            FunctionSpec::SinhShift(z) => {
                let arg = 2.0 * z * x - FRAC_PI_2 * z;
                let v = if order % 2 == 0 { arg.sinh() } else { arg.cosh() };
                Some((2.0 * z).powi(k) * v)
            }
            FunctionSpec::Sqrt | FunctionSpec::LogTanPower(_) | FunctionSpec::LogSineX => None,
        }
    }

    /// The exact polynomial behind polynomial-type kinds.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        match self {
            FunctionSpec::Polynomial(p) => Some(p.exact().clone()),
            FunctionSpec::Monomial(n) => Some(Polynomial::monomial(*n as usize)),
            FunctionSpec::ShiftedLegendre(n) => Some(shifted_legendre(*n as usize)),
            _ => None,
        }
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSpec::Polynomial(p) => {
                let parts: Vec<String> = p
                    .exact()
                    .coeffs()
                    .iter()
                    .map(|c| match c.as_rational() {
                        Some(r) => r.to_string(),
                        None => format!("({c})"),
                    })
                    .collect();
                write!(f, "poly:{}", parts.join(","))
            }
            FunctionSpec::Monomial(1) => f.write_str("x"),
            FunctionSpec::Monomial(n) => write!(f, "x^{n}"),
            FunctionSpec::ShiftedLegendre(n) => write!(f, "legendre{n}"),
            FunctionSpec::Sqrt => f.write_str("sqrt"),
            FunctionSpec::Exp2z(z) => write!(f, "exp2z:{z}"),
            FunctionSpec::Cos2z(z) => write!(f, "cos2z:{z}"),
            FunctionSpec::SinhShift(z) => write!(f, "sinh:{z}"),
            FunctionSpec::LogTanPower(1) => f.write_str("logtan"),
            FunctionSpec::LogTanPower(p) => write!(f, "logtan^{p}"),
            FunctionSpec::LogSineX => f.write_str("logsine"),
        }
    }
}

fn unknown(s: &str) -> Error {
    Error::parse(
        0,
        format!("unknown function `{s}`; expected one of: {}", CATALOG.join(", ")),
    )
}

fn parse_param(s: &str, at: usize) -> Result<f64> {
    let z: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::parse(at, format!("invalid parameter `{s}`")))?;
    if !z.is_finite() {
        return Err(Error::parse(at, "parameter must be finite"));
    }
    Ok(z)
}

/// Parses a comma-separated list of rational coefficients, lowest degree
/// first, reporting the byte offset of the first bad entry.
pub fn parse_coefficients(spec: &str) -> Result<Polynomial> {
    if spec.trim().is_empty() {
        return Err(Error::parse(0, "empty coefficient list"));
    }
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for part in spec.split(',') {
        let r: Rational = part.parse().map_err(|e| match e {
            Error::Parse { position, message } => Error::parse(offset + position, message),
            other => other,
        })?;
        coeffs.push(r);
        offset += part.len() + 1;
    }
    Ok(Polynomial::from_rationals(coeffs))
}

impl FromStr for FunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((head, arg)) = t.split_once(':') {
            let at = head.len() + 1;
            return match head {
                "exp2z" => Ok(FunctionSpec::Exp2z(parse_param(arg, at)?)),
                "cos2z" => Ok(FunctionSpec::Cos2z(parse_param(arg, at)?)),
                "sinh" => Ok(FunctionSpec::SinhShift(parse_param(arg, at)?)),
                "poly" => parse_coefficients(arg)
                    .map(FunctionSpec::polynomial)
                    .map_err(|e| match e {
                        Error::Parse { position, message } => Error::parse(at + position, message),
                        other => other,
                    }),
                _ => Err(unknown(t)),
            };
        }
        match t {
            "x" => Ok(FunctionSpec::Monomial(1)),
            "sqrt" => Ok(FunctionSpec::Sqrt),
            "logtan" => Ok(FunctionSpec::LogTanPower(1)),
            "logtan^2" => Ok(FunctionSpec::LogTanPower(2)),
            "logsine" => Ok(FunctionSpec::LogSineX),
            _ => {
                if let Some(n) = t.strip_prefix("x^") {
                    n.parse().map(FunctionSpec::Monomial).map_err(|_| unknown(t))
                } else if let Some(n) = t.strip_prefix("legendre") {
                    n.parse().map(FunctionSpec::ShiftedLegendre).map_err(|_| unknown(t))
                } else {
                    Err(unknown(t))
                }
            }
        }
    }
}
