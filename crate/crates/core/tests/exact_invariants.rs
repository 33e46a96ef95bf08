use proptest::prelude::*;

use logtan::exact::{
    binomial, euler_polys, shifted_legendre, shifted_legendre_rodrigues, PiExpr, Polynomial,
    Rational, ZetaExpr,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=97).prop_map(|(n, d)| Rational::new(n, d))
}

fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=1000).prop_flat_map(|d| (0..=d).prop_map(move |n| Rational::new(n, d)))
}

fn at(p: &Polynomial, x: &Rational) -> Rational {
    p.eval(&PiExpr::rational(x.clone()))
        .as_rational()
        .expect("rational polynomial at a rational point")
}

proptest! {
    #[test]
    fn rational_arithmetic_is_exact(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }

    #[test]
    fn euler_reflection(x in unit_rational()) {
        let polys = euler_polys(12);
        let one_minus = Rational::one() - x.clone();
        for (n, e) in polys.iter().enumerate() {
            let lhs = at(e, &one_minus);
            let rhs = at(e, &x);
            let rhs = if n % 2 == 0 { rhs } else { -rhs };
            prop_assert_eq!(lhs, rhs, "n = {}", n);
        }
    }

    #[test]
    fn euler_translation(y in rational()) {
        let polys = euler_polys(8);
        let yp = PiExpr::rational(y.clone());
        for n in 0..=8usize {
            let shifted = polys[n].compose_linear(&PiExpr::one(), &yp);
            let mut sum = Polynomial::zero();
            for (k, ek) in polys.iter().enumerate().take(n + 1) {
                let c = Rational::from(binomial(n as u32, k as u32)) * y.pow((n - k) as i32);
                sum = &sum + &ek.scale_rational(&c);
            }
            prop_assert_eq!(shifted, sum, "n = {}", n);
        }
    }

    #[test]
    fn zeta_expr_render_parse(coeffs in proptest::collection::vec((rational(), -4i32..=4), 1..5)) {
        let mut e = ZetaExpr::zero();
        for (i, (c, p)) in coeffs.into_iter().enumerate() {
            e.add_term(&PiExpr::term(c, p), 2 * (i as u32 % 4) + 3);
        }
        let back: ZetaExpr = e.to_string().parse().unwrap();
        prop_assert_eq!(back, e);
    }
}

#[test]
fn monomials_from_euler_polynomials() {
    // xⁿ = Eₙ(x) + ½ Σ_{k<n} C(n,k) E_k(x)
    let polys = euler_polys(10);
    for n in 0..=10usize {
        let mut sum = polys[n].clone();
        for (k, ek) in polys.iter().enumerate().take(n) {
            let c = Rational::from(binomial(n as u32, k as u32)) * Rational::new(1, 2);
            sum = &sum + &ek.scale_rational(&c);
        }
        assert_eq!(sum, Polynomial::monomial(n), "n = {n}");
    }
}

#[test]
fn rodrigues_matches_explicit() {
    for n in 0..=6 {
        assert_eq!(shifted_legendre_rodrigues(n), shifted_legendre(n), "n = {n}");
    }
}

#[test]
fn shifted_legendre_reflection() {
    let half_pi = PiExpr::half_pi();
    for n in 0..=8 {
        let p = shifted_legendre(n);
        let reflected = p.compose_linear(&PiExpr::integer(-1), &half_pi);
        let want = if n % 2 == 0 { p.clone() } else { -&p };
        assert_eq!(reflected, want, "n = {n}");
    }
}

#[test]
fn shifted_legendre_is_orthogonal() {
    let zero = PiExpr::zero();
    let half_pi = PiExpr::half_pi();
    for n in 0..=8 {
        for m in 0..=8 {
            let ip = (&shifted_legendre(n) * &shifted_legendre(m)).integrate(&zero, &half_pi);
            let want = if n == m {
                PiExpr::term(Rational::new(1, 2 * (2 * n as i64 + 1)), 1)
            } else {
                PiExpr::zero()
            };
            assert_eq!(ip, want, "n = {n}, m = {m}");
        }
    }
}
