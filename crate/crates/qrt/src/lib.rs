//! Exact computations with representations of bound quivers.
//!
//! Scalars are exact (rationals or prime fields). On top of dense linear
//! algebra the crate provides path categories of bound quivers, the
//! homological algebra of their representations (Hom, Ext, the
//! Auslander-Reiten translate), Tits forms, tube combinatorics for the
//! catalog of tame canonical algebras, determinantal semi-invariants,
//! orbit-closure equation systems and a brute-force finite-field oracle.

pub mod error;
pub mod exactfield;
pub mod cli;
pub mod forms;
pub mod geometry;
pub mod linalg;
pub mod oracle;
pub mod par;
pub mod quiver;
pub mod rep;
pub mod semiinv;
pub mod suites;
pub mod tubes;

pub use error::{Error, Result};
pub use exactfield::{FieldSpec, Scalar};
pub use linalg::{Matrix, Poly};
