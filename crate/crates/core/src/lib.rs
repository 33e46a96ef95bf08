//! Log-tangent integrals `L(f) = ∫₀^{π/2} f(x) log(tan x) dx`.
//!
//! Polynomial integrands are evaluated exactly, as finite rational
//! combinations of powers of π and odd zeta values. Everything else goes
//! through shifted Legendre projection or one of the parameterised series
//! in [`series`]. Every closed form can be checked against the
//! double-exponential oracle in [`quadrature`].
//!
//! ```
//! use logtan::{closed_forms::exact_l, exact::Polynomial};
//!
//! let l = exact_l(&Polynomial::monomial(1));
//! assert_eq!(l.to_string(), "7/8 * zeta(3)");
//! ```

pub mod closed_forms;
pub mod constants;
pub mod error;
pub mod exact;
pub mod projection;
pub mod quadrature;
pub mod series;

pub use error::{Error, Result};
