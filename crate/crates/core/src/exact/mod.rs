//! Exact arithmetic: rationals, π-graded scalars, polynomials over them,
//! odd-zeta combinations, and the Euler and shifted Legendre families.

mod families;
mod pi_expr;
mod polynomial;
mod rational;
mod zeta_expr;

pub use families::{
    bernoulli, euler_poly, euler_poly_scaled, euler_polys, poly_derivative_at, shifted_legendre,
    shifted_legendre_deriv_at_zero, shifted_legendre_rodrigues, BernoulliTable,
};
pub use pi_expr::PiExpr;
pub use polynomial::Polynomial;
pub use rational::{binomial, factorial, Rational};
pub use zeta_expr::ZetaExpr;
