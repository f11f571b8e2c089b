//! Exact computer algebra for level-`k` `(q,t)`-Catalan polynomials.
//!
//! The kernel computes `C_n^{(k)}(q,t)`, the partition-indexed `C_λ(q,t)`,
//! generalized parking and Schröder polynomials via the nabla operator acting
//! on column k-Schur functions, and cross-checks them against independent
//! combinatorial models (Dyck-path statistics, nested Dyck configurations)
//! and a representation-theoretic one (bigraded ranks of spaces of diagonal
//! harmonic alternants).
//!
//! Modules:
//! - [`qtpoly`]: exact sparse bivariate polynomials in `q`, `t` and reduced
//!   rational functions over them — the coefficient field everywhere.
//! - [`partition`]: integer partitions, their statistics, and rim-hook
//!   dissection combinatorics.
//! - [`symfunc`]: symmetric functions over `Q(q,t)`: basis changes, Hall and
//!   (q,t) inner products, Macdonald and Hall–Littlewood polynomials, nabla,
//!   column k-Schur functions.
//! - [`dyck`]: Dyck sequences, `area`/`dinv`, bounded enumeration, nested
//!   Dyck configurations with `area_bar`/`dinv_bar`.
//! - [`catalan`]: the level polynomials, specializations and the
//!   conjecture-verification reports.
//! - [`harmonics`]: the Vandermonde determinant, the operators `E_p`, and
//!   exact bigraded dimensions of operator closures.

pub mod catalan;
pub mod dyck;
pub mod harmonics;
pub mod partition;
pub mod qtpoly;
pub mod symfunc;

pub use partition::Partition;
pub use qtpoly::{QTMono, QTPoly, QTRat};
pub use symfunc::{Basis, SymEngine, SymExpr};

/// Errors shared across the kernel.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes under substitution {0}")]
    Pole(String),
    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(Partition, Partition),
    #[error("empty partition not allowed here")]
    EmptyPartition,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal consistency: {0}")]
    InternalConsistency(String),
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
