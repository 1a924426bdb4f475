//! Principality data for the circle action on the lens-space algebra:
//! the inductive strong connection, the idempotents it produces over the
//! teardrop subalgebra, and bounded-degree decision procedures for the
//! translation-map and almost-freeness conditions of the weighted
//! coactions.

pub mod connection;
pub mod galois;
pub mod idempotent;
pub(crate) mod linsolve;

pub use connection::{strong_connection, verify_strong, ConnectionCheck, StrongConnection};
pub use galois::{
    almost_free_witness, galois_membership, AlmostFreeCheck, GaloisCertificate, GaloisVerdict,
};
pub use idempotent::{idempotent, trace_idempotent, IdempotentMatrix};
