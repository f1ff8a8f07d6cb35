#![allow(clippy::needless_range_loop)]

pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod zn;

pub use cyclotomic::{cyc, cyclotomic_polynomial, CycMatrix, CycNum, Rational};
pub use error::{Error, Result};
pub mod hopf;
pub use hopf::{Character, KnAlgebra, KnBasis, KnElement, TensorElement};
pub mod nichols;
pub mod racks;
pub mod yd;
pub use nichols::BraidedSpace;
pub use yd::{SimpleLabel, YDModule};
