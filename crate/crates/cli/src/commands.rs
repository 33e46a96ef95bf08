use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use clap::{Subcommand, ValueEnum};

use logtan::closed_forms::{cos_lemma, exact_l};
use logtan::constants::{
    catalan, digamma, eval_pi_expr, eval_zeta_expr_precise, zeta_even_exact, zeta_int,
    EULER_GAMMA,
};
use logtan::exact::{PiExpr, Rational};
use logtan::projection::{approx_l_with, expand_with};
use logtan::quadrature::{parse_coefficients, FunctionSpec, Integrator};
use logtan::series::cos_integral_f;

use crate::report::{Check, Numeric, Report};

/// Any failure that maps to exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<logtan::Error> for UsageError {
    fn from(e: logtan::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub type CmdResult = Result<Report, UsageError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Var {
    /// Coefficients of powers of x.
    Plain,
    /// Coefficients of powers of 2x/pi.
    Scaled,
}

#[derive(Clone, Copy, Debug, Subcommand)]
pub enum ConstantCmd {
    /// Riemann zeta at an integer s >= 2.
    Zeta { s: u32 },
    /// Catalan's constant.
    Catalan,
    /// Digamma at x > 0.
    Digamma {
        #[arg(allow_negative_numbers = true)]
        x: f64,
    },
}

fn parse_function(name: &str) -> Result<FunctionSpec, UsageError> {
    name.parse::<FunctionSpec>().map_err(UsageError::from)
}

fn precise_numeric(value: f64) -> Numeric {
    Numeric {
        value,
        err_bound: Some(f64::EPSILON * value.abs()),
        coefficients: None,
    }
}

pub fn cmd_exact(q: &Integrator, spec: &str, var: Var, tol: f64) -> CmdResult {
    let parsed = parse_coefficients(spec)
        .map_err(|e| UsageError(format!("coefficient list `{spec}`: {e}")))?;
    let poly = match var {
        Var::Plain => parsed,
        Var::Scaled => parsed.compose_linear(&PiExpr::term(Rational::from(2), -1), &PiExpr::zero()),
    };
    let expr = exact_l(&poly);
    let mut report = Report::new("exact")
        .input("spec", spec)
        .input("var", format!("{var:?}").to_lowercase());
    report.exact = Some(expr.to_string());
    report.numeric = Some(precise_numeric(eval_zeta_expr_precise(&expr)));
    let oracle = q.integrate_logtan(&FunctionSpec::polynomial(poly), 0.0, FRAC_PI_2, tol)?;
    Ok(report.with_oracle(oracle.value))
}

/// `terms` is the degree of the truncated expansion; only odd indices
/// contribute to `L`.
pub fn cmd_project(q: &Integrator, function: &str, terms: usize, tol: f64) -> CmdResult {
    if terms == 0 {
        return Err(UsageError("--terms must be at least 1".into()));
    }
    let f = parse_function(function)?;
    let coeffs = expand_with(q, &f, terms)?;
    let approx = approx_l_with(q, &f, terms.div_ceil(2))?;
    let mut report = Report::new("project")
        .input("function", &f)
        .input("terms", terms);
    report.numeric = Some(Numeric {
        value: approx.value,
        err_bound: None,
        coefficients: Some(coeffs.coeffs),
    });
    let oracle = q.integrate_logtan(&f, 0.0, FRAC_PI_2, tol)?;
    Ok(report.with_oracle(oracle.value))
}

fn closed_form(f: &FunctionSpec, plain: bool) -> Option<f64> {
    if plain {
        return match f {
            FunctionSpec::LogTanPower(2) => Some(PI.powi(3) / 8.0),
            FunctionSpec::LogSineX => {
                Some(7.0 / 16.0 * zeta_int(3).ok()?.value - PI * PI / 8.0 * LN_2)
            }
            _ => None,
        };
    }
    if let Some(p) = f.as_polynomial() {
        return Some(eval_zeta_expr_precise(&exact_l(&p)));
    }
    match f {
        FunctionSpec::LogTanPower(1) => Some(PI.powi(3) / 8.0),
        FunctionSpec::Cos2z(z) if z.fract() == 0.0 && *z >= 1.0 => {
            Some(eval_pi_expr(&cos_lemma(*z as u32)).value)
        }
        FunctionSpec::Cos2z(z) => cos_integral_f(*z).ok(),
        _ => None,
    }
}

pub fn cmd_quad(
    q: &Integrator,
    function: &str,
    from: f64,
    to: f64,
    plain: bool,
    tol: f64,
) -> CmdResult {
    let f = parse_function(function)?;
    let r = if plain {
        q.integrate_plain(&f, from, to, tol)?
    } else {
        q.integrate_logtan(&f, from, to, tol)?
    };
    let mut report = Report::new("quad")
        .input("function", &f)
        .input("from", from)
        .input("to", to)
        .input("weight", if plain { "none" } else { "logtan" });
    report.numeric = Some(Numeric {
        value: r.value,
        err_bound: Some(r.est_error),
        coefficients: None,
    });
    report.checks.push(Check::custom(
        "converged",
        "true",
        format!("{} after {} levels", r.converged, r.levels_used),
        Some(tol),
        r.converged,
    ));
    let full = from == 0.0 && (to - FRAC_PI_2).abs() < 1e-15;
    match closed_form(&f, plain) {
        Some(c) if full => Ok(report.with_oracle(c)),
        _ => Ok(report),
    }
}

/// Digamma at small positive integers and half-integers in closed form.
fn digamma_reference(x: f64) -> Option<f64> {
    if x <= 0.0 || x > 50.0 || (2.0 * x).fract() != 0.0 {
        return None;
    }
    let n = x.floor() as u32;
    if x.fract() == 0.0 {
        Some(-EULER_GAMMA + (1..n).map(|k| 1.0 / k as f64).sum::<f64>())
    } else {
        let tail: f64 = (0..n).map(|k| 2.0 / (2 * k + 1) as f64).sum();
        Some(-EULER_GAMMA - 2.0 * LN_2 + tail)
    }
}

pub fn cmd_constants(q: &Integrator, which: ConstantCmd, tol: f64) -> CmdResult {
    let numeric = |v: logtan::constants::NumericValue| Numeric {
        value: v.value,
        err_bound: Some(v.err_bound),
        coefficients: None,
    };
    match which {
        ConstantCmd::Zeta { s } => {
            let v = zeta_int(s)?;
            let mut report = Report::new("constants").input("name", "zeta").input("s", s);
            report.numeric = Some(numeric(v));
            if s % 2 == 0 {
                let exact = zeta_even_exact(s / 2);
                report.exact = Some(exact.to_string());
                Ok(report.with_oracle(eval_pi_expr(&exact).value))
            } else {
                report.exact = Some(format!("zeta({s})"));
                Ok(report)
            }
        }
        ConstantCmd::Catalan => {
            let mut report = Report::new("constants").input("name", "catalan");
            report.numeric = Some(numeric(catalan()));
            let one = FunctionSpec::Monomial(0);
            let quad = q.integrate_logtan(&one, 0.0, std::f64::consts::FRAC_PI_4, tol)?;
            Ok(report.with_oracle(-quad.value))
        }
        ConstantCmd::Digamma { x } => {
            let v = digamma(x)?;
            let mut report = Report::new("constants").input("name", "digamma").input("x", x);
            report.numeric = Some(numeric(v));
            match digamma_reference(x) {
                Some(r) => Ok(report.with_oracle(r)),
                None => Ok(report),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digamma_references() {
        assert!((digamma_reference(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        assert!((digamma_reference(0.5).unwrap() + EULER_GAMMA + 2.0 * LN_2).abs() < 1e-15);
        for x in [2.0, 3.5, 7.0] {
            let d = digamma(x).unwrap().value;
            assert!((digamma_reference(x).unwrap() - d).abs() < 1e-13);
        }
        assert_eq!(digamma_reference(0.3), None);
    }
}
