//! Exact coefficient arithmetic: Laurent polynomials in the deformation
//! parameter `q`, their fraction field, and q-binomial coefficients.
//!
//! * [`LaurentPoly`] - `sum_n c_n q^n` with exact rational `c_n`;
//! * [`RatQ`] - reduced fractions of Laurent polynomials, a field;
//! * [`qbinom`] - Gaussian binomial coefficients `C(l, m)_{q^e}` via the
//!   defining product expansion.

mod laurent;
mod qbinom;
mod ratq;

pub use laurent::LaurentPoly;
pub(crate) use laurent::rational_to_f64;
pub(crate) use qbinom::expand_linear_product;
pub use qbinom::qbinom;
pub use ratq::RatQ;
