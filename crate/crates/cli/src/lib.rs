//! Verification batteries and reports behind the `kn` binary.

pub mod battery;
pub mod report;

pub use report::{Check, VerificationReport};
