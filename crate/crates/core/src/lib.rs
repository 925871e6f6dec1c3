//! Exact arithmetic for modular data.
//!
//! Takes the modular data of a modular tensor category — an unnormalized
//! S-matrix over a cyclotomic field together with a diagonal T-matrix of
//! roots of unity — and derives its invariants (dimensions, Gauss sums,
//! anomaly, Frobenius-Schur exponent, fusion rules), constructs the twelve
//! SL2(Z) representations lifting the projective one, certifies their
//! congruence levels by exhaustive BFS over SL2(Z_n), and checks the Galois
//! symmetry and anomaly identities on concrete data, including Drinfeld
//! doubles.
//!
//! All verdicts come from exact cyclotomic arithmetic with arbitrary
//! precision rational coefficients; floating point appears only in display
//! output and in locating root-of-unity candidates that are then confirmed
//! exactly.

pub mod arith;
pub mod catalog;
pub mod cyclo;
pub mod data;
pub mod double;
pub mod galois;
pub mod io;
pub mod matrix;
pub mod reps;
pub mod sl2;

pub(crate) mod nt;
pub(crate) mod poly;

pub use cyclo::{CycloNum, Rational, RootOfUnity};
pub use data::{AxiomCheck, AxiomReport, DerivedInvariants, FusionTensor, ModularData};


use thiserror::Error;

/// Errors distinguish malformed input (parse/shape problems) from
/// mathematical failures (data that is not genuine modular data, or a
/// theorem identity that does not hold on it).
#[derive(Debug, Error)]
pub enum Error {
    #[error("order mismatch: Q_{0} vs Q_{1} (promote first)")]
    OrderMismatch(u64, u64),
    #[error("division by zero in Q_{0}")]
    DivisionByZero(u64),
    #[error("sigma_{a} is not an automorphism of Q_{m}: gcd(a, m) != 1")]
    InvalidAutomorphism { a: i64, m: u64 },
    #[error("Q_{d} is not a subfield of Q_{m}: {d} does not divide {m}")]
    NotSubfieldOrder { d: u64, m: u64 },
    #[error("cannot promote Q_{from} into Q_{to}: {from} does not divide {to}")]
    BadPromotion { from: u64, to: u64 },
    #[error("not modular data: {0}")]
    NotModular(String),
    #[error("degenerate data: global dimension is zero")]
    Degenerate,
    #[error("Verlinde coefficient N[{i},{j}]^{k} = {value} is not a non-negative integer")]
    VerlindeFailure {
        i: usize,
        j: usize,
        k: usize,
        value: String,
    },
    #[error("theorem violation (input is not genuine modular data): {0}")]
    TheoremViolation(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unknown builtin '{0}'")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that indicate malformed input rather than a failed
    /// mathematical check. The CLI maps these to exit code 2.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Io(_)
                | Error::InvalidInput(_)
                | Error::UnknownBuiltin(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
