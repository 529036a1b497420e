//! Orbits, subdegrees, coprime factorizations and module orbit structure
//! for finite permutation and matrix groups.

pub mod analysis;
pub mod constructions;
pub mod data;
pub mod error;
pub mod format;
pub mod gf;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
