//! Exact computations with preprojective algebras: injective and projective
//! modules, Demazure submodules, quiver grassmannians over prime fields, and
//! the Lie-theoretic checks that tie them to highest-weight representations.

pub mod cli;
pub mod demazure;
pub mod error;
pub mod field;
pub mod geomrep;
pub mod grassmann;
pub mod hull;
pub mod linalg;
pub mod palg;
pub mod poly;
pub mod quiver;
pub mod repmod;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
