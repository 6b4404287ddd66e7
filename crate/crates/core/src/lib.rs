//! Combinatorics of Kazhdan–Lusztig cells in affine type A.
//!
//! The crate provides window notation for (partial) affine permutations,
//! the affine matrix-ball construction `Φ`/`Ψ`, partial rotations, sign
//! insertion, and RSK-related operations on tabloids.

pub mod ambc;
pub mod error;
pub mod group;
pub mod rotations;
pub mod sign;
pub mod tableaux;
pub mod tabloid;
pub mod window;

pub use ambc::{phi, psi, AmbcTriple, Stream};
pub use error::{Error, Result};
pub use tabloid::{Composition, Partition, Tabloid};
pub use window::{residue, Ball, Window};
