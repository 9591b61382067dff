//! Verification toolkit for the closed form `π(n) = n / ⌊ln n − 1/2⌋`,
//! which holds at every `n >= 67` where `π(n)` divides `n`.
//!
//! * [`prime_engine`] counts primes two independent ways (segmented sieve and
//!   Legendre's φ recursion).
//! * [`formula`] evaluates `⌊ln n − 1/2⌋` through exact integer thresholds
//!   and checks the explicit bounds `n/(ln n − 1/2) < π(n) < n/(ln n − 3/2)`.
//! * [`scanner`] walks ranges, sharded and resumable, and builds reports.
//! * [`cli`] is the command-line front end behind the `pi-formula` binary.
//!
//! See the crate's `examples/` directory for one runnable program per
//! capability.

pub mod cli;
pub mod error;
pub mod formula;
pub mod prime_engine;
pub mod scanner;

pub use error::{Error, Result};
pub use formula::{GolombPoint, ThresholdTable};
pub use prime_engine::{pi_point, pi_stream, PiCheckpoint};
pub use scanner::{Scanner, VerificationReport};
