//! Crate-wide error type.
//!
//! Every fallible operation in this crate returns [`Result`]. Variants are
//! deliberately specific so that callers (the CLI in particular) can map them
//! onto distinct exit codes without string matching.

use std::error;
use std::fmt;

use num_bigint::{BigInt, BigUint};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by representation-counting operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A positional base must be at least 2.
    BaseTooSmall { d: u32 },
    /// The operation is only defined for even bases.
    EvenBaseRequired { d: u32, what: &'static str },
    /// Balanced digit sets need d = 2*l with l >= 2; base 2 admits
    /// infinitely many balanced representations and odd bases none at all.
    BalancedBaseUnsupported { d: u32 },
    /// The operation is pinned to base 4.
    Base4Only { what: &'static str },
    /// An argument fell outside the operation's domain.
    OutOfRange { what: &'static str },
    /// A digit vector contained a digit outside the admissible alphabet.
    DigitOutOfRange { digit: i64, lo: i64, hi: i64 },
    /// Pattern text failed to parse; `offset` is a byte offset into the input.
    Pattern { offset: usize, message: String },
    /// A scan would touch more points than the caller's budget allows.
    BudgetExceeded { needed: BigUint, budget: u64 },
    /// Interval endpoints were out of order.
    EmptyInterval { lo: BigInt, hi: BigInt },
    /// A constructed counterexample failed its own numeric verification.
    /// This indicates a bug in the construction and should never fire.
    WitnessFailed { k: BigInt, n: BigInt },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BaseTooSmall { d } => {
                write!(f, "base must be at least 2, got {d}")
            }
            Error::EvenBaseRequired { d, what } => {
                write!(f, "{what} requires an even base, got {d}")
            }
            Error::BalancedBaseUnsupported { d } => {
                write!(f, "balanced digits require an even base of at least 4, got {d}")
            }
            Error::Base4Only { what } => {
                write!(f, "{what} is only defined for base 4")
            }
            Error::OutOfRange { what } => write!(f, "{what}"),
            Error::DigitOutOfRange { digit, lo, hi } => {
                write!(f, "digit {digit} outside admissible range {lo}..={hi}")
            }
            Error::Pattern { offset, message } => {
                write!(f, "pattern parse error at byte {offset}: {message}")
            }
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "scan needs {needed} points but the budget is {budget}")
            }
            Error::EmptyInterval { lo, hi } => {
                write!(f, "interval endpoints out of order: lo = {lo}, hi = {hi}")
            }
            Error::WitnessFailed { k, n } => {
                write!(
                    f,
                    "internal error: constructed witness n = {n} for shift k = {k} \
                     failed verification"
                )
            }
        }
    }
}

impl error::Error for Error {}
