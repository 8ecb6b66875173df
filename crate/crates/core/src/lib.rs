//! Generation and statistical analysis of finite binary sequences over
//! `{-1,+1}`.
//!
//! The crate has three layers:
//!
//! * number-theoretic building blocks ([`numtheory`], [`ecurve`]) and the
//!   sequence constructions built on them ([`sequence`]),
//! * the combinatorial pseudorandomness measures `W`, `C_k`, `Q_k`, `N_k`
//!   with witnessed, search-bounded maximization ([`measures`]),
//! * five NIST-style statistical tests plus Berlekamp-Massey and the
//!   special functions their P-values need ([`nist`]), inequality checks
//!   connecting the two worlds ([`verify`]), and suite-level aggregation
//!   ([`report`]).
//!
//! The crate is `no_std` + `alloc`; all floating-point math goes through
//! `libm`. File I/O and the command-line front end live in the companion
//! `prseq-cli` crate. The byte-level ASCII/PACKED codecs are here (pure
//! functions of byte slices) so they can be tested without a filesystem.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ecurve;
pub mod measures;
pub mod nist;
pub mod numtheory;
pub mod report;
pub mod sequence;
pub mod verify;

use alloc::string::String;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a valid prime modulus")]
    InvalidModulus(u64),
    #[error("{0} is not invertible modulo the given prime")]
    NotInvertible(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("invalid curve: singular over F_{0}")]
    InvalidCurve(u64),
    #[error("point is not on the curve")]
    InvalidPoint,
    #[error("parameter too large: {0}")]
    TooLarge(&'static str),
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
    #[error("unbounded search too expensive: estimated {estimate} inner operations, budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u64 },
    #[error("mismatched test sets: {0}")]
    MismatchedTests(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Errors from the ASCII and PACKED sequence codecs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("bad symbol at offset {0}")]
    BadSymbol(usize),
    #[error("malformed header: need 8 length bytes, got {0}")]
    MalformedHeader(usize),
    #[error("truncated payload: {declared} declared bits need {expected} bytes, got {actual}")]
    TruncatedPayload {
        declared: u64,
        expected: usize,
        actual: usize,
    },
    #[error("trailing data: {0} bytes past declared payload")]
    TrailingData(usize),
    #[error("nonzero padding bits in final payload byte")]
    BadPadding,
    #[error("invalid sequence length {0}")]
    InvalidLength(u64),
}

pub type Result<T> = core::result::Result<T, Error>;
