use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use logtan::closed_forms::{
    cos_lemma, euler_integral, euler_translated, exact_l, legendre_l_coeff, moment, Parity,
};
use logtan::constants::{
    catalan, digamma, eval_pi_expr, eval_zeta_expr_precise, zeta_even_exact, zeta_int,
    EULER_GAMMA,
};
use logtan::exact::{euler_poly_scaled, shifted_legendre, Polynomial, Rational};
use logtan::projection::{approx_l_with, catalan_series, parseval_defect, sqrt_approx_l_exact};
use logtan::quadrature::{FunctionSpec, Integrator};
use logtan::series::{
    bradley_primitive, cos_integral_f, euler_zeta3_series, exp_integral_series, partial_sum_s,
    sinh_identity_check,
};

use crate::report::{fmt15, Check};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Exact,
    Series,
    Constants,
}

const ORACLE_TOL: f64 = 1e-13;
const APERY_DIGITS: f64 = 1.202_056_903_159_594_285;
const CATALAN_DIGITS: f64 = 0.915_965_594_177_219_015;

pub fn run(q: &Integrator, suite: Suite) -> Vec<Check> {
    match suite {
        Suite::All => {
            let mut all = exact_suite(q);
            all.extend(series_suite(q));
            all.extend(constants_suite(q));
            all
        }
        Suite::Exact => exact_suite(q),
        Suite::Series => series_suite(q),
        Suite::Constants => constants_suite(q),
    }
}

fn oracle(q: &Integrator, f: &FunctionSpec) -> f64 {
    q.integrate_logtan(f, 0.0, FRAC_PI_2, ORACLE_TOL)
        .map(|r| r.value)
        .unwrap_or(f64::NAN)
}

fn zeta(s: u32) -> f64 {
    zeta_int(s).map(|v| v.value).unwrap_or(f64::NAN)
}

fn worst(name: &str, tol: f64, deltas: impl IntoIterator<Item = f64>) -> Check {
    let w = deltas.into_iter().fold(0.0f64, |a, d| if d.is_nan() { f64::NAN } else { a.max(d) });
    Check::custom(name, format!("<= {tol:e}"), format!("{w:.3e}"), Some(tol), w <= tol)
}

fn exact_suite(q: &Integrator) -> Vec<Check> {
    let x = Polynomial::monomial(1);
    let x2 = Polynomial::monomial(2);
    let mut checks = vec![
        Check::exact("L(x)=7/8 zeta(3)", "7/8 * zeta(3)", exact_l(&x)),
        Check::exact("L(x^2)=7/16 pi zeta(3)", "7/16 * pi * zeta(3)", exact_l(&x2)),
        Check::numeric(
            "L(x) oracle",
            eval_zeta_expr_precise(&exact_l(&x)),
            oracle(q, &FunctionSpec::Monomial(1)),
            1e-9,
        ),
        Check::numeric(
            "L(x^2) oracle",
            eval_zeta_expr_precise(&exact_l(&x2)),
            oracle(q, &FunctionSpec::Monomial(2)),
            1e-9,
        ),
    ];

    let moments_ok = (1..=12u32).all(|n| moment(n).value == exact_l(&Polynomial::monomial(n as usize)));
    checks.push(Check::custom("moment(n) = L(x^n), n<=12", "equal", moments_ok.to_string(), None, moments_ok));

    let euler_ok = (1..=5u32).all(|n| {
        euler_integral(n, Parity::Odd) == exact_l(&euler_poly_scaled(2 * n as usize - 1))
            && euler_integral(n, Parity::Even).is_zero()
            && exact_l(&euler_poly_scaled(2 * n as usize)).is_zero()
    });
    checks.push(Check::custom("Euler integrals = L(E_n(2x/pi)), n<=5", "equal", euler_ok.to_string(), None, euler_ok));

    let translated_ok = (1..=5u32).all(|n| {
        euler_translated(n, Parity::Odd, &Rational::zero()) == euler_integral(n, Parity::Odd)
    });
    checks.push(Check::custom("translation at y=0 reduces", "equal", translated_ok.to_string(), None, translated_ok));

    let legendre_ok = (1..=9u32).all(|i| legendre_l_coeff(i) == exact_l(&shifted_legendre(i as usize)));
    checks.push(Check::custom("L(P_n) closed form, n<=9", "equal", legendre_ok.to_string(), None, legendre_ok));

    checks.push(worst(
        "cosine lemma k=1..8",
        1e-9,
        (1..=8u32).map(|k| {
            (oracle(q, &FunctionSpec::Cos2z(k as f64)) - eval_pi_expr(&cos_lemma(k)).value).abs()
        }),
    ));

    let norm = q
        .integrate_plain(&FunctionSpec::LogTanPower(2), 0.0, FRAC_PI_2, ORACLE_TOL)
        .map(|r| 2.0 / PI * r.value)
        .unwrap_or(f64::NAN);
    checks.push(Check::numeric("(2/pi) int log^2 tan = pi^2/4", PI * PI / 4.0, norm, 1e-10));

    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let deltas: Vec<f64> = (0..50)
        .map(|_| {
            let degree = rng.gen_range(0..=10usize);
            let p = Polynomial::from_rationals((0..=degree).map(|_| {
                let d = rng.gen_range(1..=7i64);
                Rational::new(rng.gen_range(-5 * d..=5 * d), d)
            }));
            let exact = eval_zeta_expr_precise(&exact_l(&p));
            (exact - oracle(q, &FunctionSpec::polynomial(p))).abs()
        })
        .collect();
    checks.push(worst("50 random polynomials vs oracle", 1e-8, deltas));
    checks
}

fn series_suite(q: &Integrator) -> Vec<Check> {
    let g = catalan().value;
    let c10 = catalan_series(10);
    let mut checks = vec![
        Check::numeric("catalan_series N=10 = 0.914611602803", 0.914_611_602_803, c10, 1e-11),
        Check::numeric("|catalan_series N=10 - G| = 1.3539e-3", 1.3539e-3, (c10 - g).abs(), 1e-7),
    ];

    let reference = 0.688_084_888_082_269_488;
    let exact = eval_zeta_expr_precise(&sqrt_approx_l_exact(3)) / (2.0 * PI).sqrt();
    checks.push(Check::numeric("L(sqrt) degree-5 exact rationals", reference, exact, 1e-12));
    let projected = approx_l_with(q, &FunctionSpec::Sqrt, 3).map(|a| a.value).unwrap_or(f64::NAN);
    checks.push(Check::numeric("L(sqrt) degree-5 projected", reference, projected, 1e-12));
    checks.push(Check::numeric("L(sqrt) oracle = 0.689247", 0.689_247, oracle(q, &FunctionSpec::Sqrt), 5e-6));

    let defects: Vec<f64> = (1..=30).map(parseval_defect).collect();
    let shape = defects.iter().all(|&d| d > 0.0) && defects.windows(2).all(|w| w[1] < w[0]);
    checks.push(Check::custom("parseval defect positive, decreasing", "true", shape.to_string(), None, shape));
    checks.push(Check::custom(
        "parseval defect(30) <= 1e-4",
        "<= 1e-4",
        fmt15(defects[29]),
        Some(1e-4),
        defects[29] <= 1e-4,
    ));

    let zs = [0.1, 0.25, 0.5, 0.75];
    checks.push(worst(
        "F(z) vs oracle",
        1e-9,
        zs.map(|z| (cos_integral_f(z).unwrap_or(f64::NAN) - oracle(q, &FunctionSpec::Cos2z(z))).abs()),
    ));
    checks.push(worst(
        "-sin(pi z) S_50(z) = F(z)",
        1e-9,
        zs.map(|z| {
            (-(PI * z).sin() * partial_sum_s(z, 50).value - cos_integral_f(z).unwrap_or(f64::NAN)).abs()
        }),
    ));
    checks.push(Check::numeric(
        "F(1 - 1e-6) -> -pi/2",
        -FRAC_PI_2,
        cos_integral_f(1.0 - 1e-6).unwrap_or(f64::NAN),
        1e-4,
    ));

    let pm = [-0.5, -0.2, 0.2, 0.5];
    checks.push(worst(
        "exp series vs oracle",
        1e-8,
        pm.map(|z| {
            (exp_integral_series(z, 40).unwrap_or(f64::NAN) - oracle(q, &FunctionSpec::Exp2z(z))).abs()
        }),
    ));
    checks.push(worst(
        "sinh identity",
        1e-8,
        pm.map(|z| sinh_identity_check(z, 40).map_or(f64::NAN, |(l, r)| (l - r).abs())),
    ));

    checks.push(worst(
        "Bradley primitive N=5000 vs oracle",
        1e-5,
        [PI / 12.0, PI / 8.0, PI / 6.0, PI / 3.0].map(|x| {
            let o = q
                .integrate_logtan(&FunctionSpec::Monomial(0), 0.0, x, ORACLE_TOL)
                .map_or(f64::NAN, |r| r.value);
            (bradley_primitive(x, 5000) - o).abs()
        }),
    ));
    checks.push(Check::numeric("Bradley primitive at pi/4 = -G", -g, bradley_primitive(FRAC_PI_4, 20_000), 1e-8));

    let logsine = q
        .integrate_plain(&FunctionSpec::LogSineX, 0.0, FRAC_PI_2, ORACLE_TOL)
        .map_or(f64::NAN, |r| r.value);
    checks.push(Check::numeric(
        "int x log sin x = 7/16 zeta(3) - pi^2/8 log 2",
        7.0 / 16.0 * zeta(3) - PI * PI / 8.0 * LN_2,
        logsine,
        1e-9,
    ));
    checks.push(Check::numeric("Euler zeta(3) series N=40", zeta(3), euler_zeta3_series(40), 1e-12));
    checks
}

fn constants_suite(q: &Integrator) -> Vec<Check> {
    let psi = |x: f64| digamma(x).map_or(f64::NAN, |v| v.value);
    let mut checks = vec![
        Check::numeric("zeta(3) = 1.202056903159594285", APERY_DIGITS, zeta(3), 1e-15),
        Check::numeric("catalan = 0.915965594177219015", CATALAN_DIGITS, catalan().value, 1e-15),
        Check::numeric("psi(1/2) = -gamma - 2 log 2", -EULER_GAMMA - 2.0 * LN_2, psi(0.5), 1e-13),
        Check::numeric("psi(1) = -gamma", -EULER_GAMMA, psi(1.0), 1e-13),
    ];
    checks.push(worst(
        "zeta(2n) closed form, n<=6",
        1e-14,
        (1..=6u32).map(|n| {
            let e = eval_pi_expr(&zeta_even_exact(n)).value;
            (zeta(2 * n) - e).abs() / e
        }),
    ));
    let decreasing = (2..40u32).all(|s| zeta(s + 1) < zeta(s));
    checks.push(Check::custom("zeta(s) decreasing in s", "true", decreasing.to_string(), None, decreasing));
    let f_half = (PI * 0.5).sin() / 2.0 * (psi(0.75) + psi(0.25) - 2.0 * psi(0.5));
    checks.push(Check::numeric(
        "digamma form of int cos(x) log tan",
        oracle(q, &FunctionSpec::Cos2z(0.5)),
        f_half,
        1e-9,
    ));
    let quad_g = q
        .integrate_logtan(&FunctionSpec::Monomial(0), 0.0, FRAC_PI_4, ORACLE_TOL)
        .map_or(f64::NAN, |r| -r.value);
    checks.push(Check::numeric("catalan = -int_0^{pi/4} log tan", quad_g, catalan().value, 1e-13));
    checks
}
