//! Computations with bound quiver algebras and their one-point extensions:
//! representations, Ext groups, projectively Wakamatsu tilting modules and
//! their mutations.

pub mod error;
pub mod homology;
pub mod modrep;
pub mod opext;
pub mod quivalg;
pub mod tilting;
pub mod xfield;

pub use error::{Error, Result};
pub use xfield::{Field, Matrix, Scalar};
