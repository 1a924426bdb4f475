//! Exact computational models of the quantum teardrop algebras
//! `O(WP_q(k, l))`, the quantum lens spaces `O(L_q(l; 1, l))` and quantum
//! `SU_q(2)`, together with the analytic apparatus built on top of them:
//! bounded-operator representations, strong connections, the associated
//! idempotents and the Chern number pairings that certify them.
//!
//! The crate is organised in layers:
//!
//! * [`qlaurent`] — Laurent polynomials in the deformation parameter `q`
//!   with exact rational coefficients, their fraction field [`RatQ`], and
//!   Gaussian q-binomial coefficients.
//! * [`ncalg`] — the three finitely presented *-algebras as confluent
//!   rewriting systems, normal forms, circle gradings, tensor square
//!   elements and the embeddings between the algebras.
//! * [`principal`] — strong connections on the quantum principal
//!   `U(1)`-bundle over the teardrop, projector matrices built from them,
//!   and an exact linear-algebra decision procedure for the Hopf–Galois
//!   condition at bounded degree.
//! * [`chern`] — the `tau_s` functionals on the teardrop algebra, their
//!   Jackson-integral form, and the exact pairing with projector traces.
//! * [`repr`] — truncated Hilbert-space representations over `f32`/`f64`,
//!   residual checks for every defining relation, spectral data and the
//!   numerical index pairing.
//! * [`suites`] — the verification suites shared by the test-suite and the
//!   command line front end, reported as [`report::SuiteReport`] values.
//!
//! Everything symbolic is computed over exact arithmetic: coefficients are
//! arbitrary-precision rationals and equality of elements is decidable.
//! Floating point appears only in [`repr`].

pub mod chern;
pub mod error;
pub mod ncalg;
pub mod principal;
pub mod qlaurent;
pub mod report;
pub mod repr;
pub mod suites;

pub use error::{Error, Result};
pub use ncalg::{
    AlgebraKind, NcElement, NfWord, Presentation, TensorElement, Word,
};
pub use qlaurent::{qbinom, LaurentPoly, RatQ};
