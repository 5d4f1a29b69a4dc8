//! Pure-cycle Hurwitz factorizations: exact enumeration, braid and pure braid
//! orbits, the closed-form four-point classification, monodromy group
//! identification and the combinatorics of limit series on a chain of lines.

pub mod braid;
pub mod degeneration;
pub mod enumerate;
pub mod error;
pub mod explicit;
pub mod factorization;
pub mod groupid;
pub mod perm;

pub use error::{Error, Result};
pub use factorization::{EquivalenceClass, Factorization, HurwitzProblem};
pub use perm::{CycleType, Permutation, PointSet};
