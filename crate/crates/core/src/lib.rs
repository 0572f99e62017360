//! Numerical semigroups with a fixed Frobenius number.
//!
//! The crate models numerical semigroups as canonical membership bitsets and
//! builds, on top of that, the family of perfect numerical semigroups with
//! Frobenius number `F` together with its rooted tree, the Arf and saturated
//! subfamilies, generator systems with their closure operator and rank, and a
//! definition-level brute-force oracle that certifies every fast path on
//! small instances.
//!
//! Entry points:
//! - [`NumericalSemigroup`]: the universal value type and its invariants.
//! - [`covariety::enumerate`]: tree enumeration of a family at fixed `F`.
//! - [`generators::closure`]: least perfect semigroup containing a set.
//! - [`oracle::crosscheck`]: exhaustive certification of the fast paths.

mod bitset;

pub mod arf_sat;
pub mod covariety;
pub mod generators;
pub mod oracle;
pub mod perfect;
pub mod semigroup;

pub use covariety::{CovarietyTree, ExportFormat, Family, FamilySpec};
pub use perfect::PerfectClosure;
pub use semigroup::{GapProfile, NumericalSemigroup};

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty generating set")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd of the generators is {0}, not 1: not a numerical semigroup")]
    NotCoprime(u64),
    /// The value at hand is all of the natural numbers, which has
    /// Frobenius number < 2 and cannot be represented.
    #[error("Frobenius number < 2: the semigroup is all of N")]
    Naturals,
    #[error("Frobenius number must be at least {min} (got {got})")]
    FrobeniusTooSmall { got: u64, min: u64 },
    #[error("closure window exceeded; generators are too large")]
    WindowExceeded,
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAnElement(u64),
    #[error("{0} is not a special gap")]
    NotASpecialGap(u64),
    #[error("not a perfect numerical semigroup")]
    NotPerfect,
    #[error("expected Frobenius number {expected}, got {actual}")]
    FrobeniusMismatch { expected: u64, actual: u64 },
    #[error("not a P({frobenius})-set")]
    NotPfSet { frobenius: u64 },
    #[error("small elements are not additively closed: {x} + {y} is missing")]
    NotClosed { x: u64, y: u64 },
    #[error("invalid small elements: {0}")]
    InvalidSmallElements(String),
    #[error("invalid canonical JSON: {0}")]
    Json(String),
    #[error("oracle refuses F = {frobenius}: cap is {cap} (exponential beyond that)")]
    OracleCap { frobenius: u64, cap: u64 },
    #[error("{sub} is not a sub-family of {ambient}")]
    InvalidFamilyPair { ambient: &'static str, sub: &'static str },
    #[error("chain decomposition disagrees with direct enumeration (library bug)")]
    DecompositionMismatch,
    #[error("unknown export format {0:?} (expected jsonl, dot or count)")]
    UnknownFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
