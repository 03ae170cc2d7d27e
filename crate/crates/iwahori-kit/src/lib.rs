//! Exact arithmetic for Iwahori-Hecke algebras of extended affine Weyl groups
//! of GL(d) and GSp(2d), over the Laurent ring Z[v, v^-1] with q = v^2.
//!
//! The crate covers, end to end at desk scale:
//!
//! * root data and dominance order for GL(d) and GSp(2d) cocharacter lattices,
//! * the extended affine Weyl group (lengths, reduced words, Bruhat order,
//!   Kottwitz-Rapoport admissible sets),
//! * the Iwahori-Hecke algebra in the T-basis with exact scalars,
//! * weight multiplicities (Freudenthal), Weyl characters, and Lusztig
//!   q-analogs of weight multiplicity,
//! * Bernstein elements `theta`, the central elements `z_lambda`, and the
//!   signed central character sums on the Bernstein side of the Satake
//!   isomorphism,
//! * the spherical projector `e_K`, double-coset characteristic functions,
//!   and the Iwahori-to-spherical transition matrix,
//! * brute-force enumeration and group-orbit stratification of lattice
//!   models over F_q[t]/(t^N) for small q.
//!
//! Every runnable capability has an example; start with
//!
//! ```text
//! cargo run -p iwahori-kit --example admissible_sets
//! cargo run -p iwahori-kit --example bernstein_central
//! cargo run -p iwahori-kit --example minuscule_identity
//! cargo run -p iwahori-kit --example main_theorem_rhs
//! cargo run -p iwahori-kit --example satake_triangle
//! cargo run -p iwahori-kit --example weight_multiplicities
//! cargo run -p iwahori-kit --example lattice_point_counts
//! ```
//!
//! The same functionality is scriptable through the `iwahori-kit` binary,
//! which prints versioned JSON (`"schema": "iwahori-kit/1"`) and uses exit
//! codes 0 (ok), 1 (verification failure), 2 (invalid input), 3 (budget
//! refusal).

pub mod affine_weyl;
pub mod bernstein;
pub mod characters;
pub mod cli;
pub mod hecke;
pub mod lattice_models;
pub mod laurent;
pub mod root_data;
pub mod spherical;

pub use affine_weyl::AffineWeylElement;
pub use hecke::{HeckeCtx, HeckeElement};
pub use lattice_models::{
    LatticeChain, LatticeModelParams, MatchReport, ModelKind, DEFAULT_ENUMERATION_BUDGET,
};
pub use laurent::LaurentScalar;
pub use root_data::{Coweight, GroupKind, RootDatum};

use thiserror::Error;

/// Crate-wide error type. Anything that violates a documented precondition
/// is reported here rather than panicking, so the CLI can map it to a
/// machine-readable body and a stable exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank: {0}")]
    InvalidRank(String),

    #[error("coweight {got:?} does not belong to this root datum: {reason}")]
    DatumMismatch { got: Vec<i64>, reason: String },

    #[error("coweight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("coweight {0:?} is not minuscule")]
    NotMinuscule(Vec<i64>),

    #[error("no simple reflection with index {0}")]
    NoSuchReflection(usize),

    #[error("invalid coweight window: n_minus={n_minus}, n_plus={n_plus} (need n_minus <= 0 < n_plus)")]
    InvalidWindow { n_minus: i64, n_plus: i64 },

    #[error("unsupported field size q={0} (supported: 2, 3, 4)")]
    UnsupportedField(u64),

    #[error("enumeration budget exceeded: estimated cost {estimate} > budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("invalid lattice model parameters: {0}")]
    InvalidModelParams(String),

    #[error("transition-matrix elimination left a nonzero residual: {0}")]
    TriangleResidual(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
