//! Exact continued fractions over arbitrary-precision integers, the integer
//! sequences that show up in their convergents (Fibonacci, Lucas, Gibonacci,
//! scaled Fibonacci), brute-force tiling counters, and a machine-checked
//! catalog of continued-fraction identities.
//!
//! The arithmetic core is generic over an exact integer [`Scalar`]
//! (`i64`, `i128`, [`BigInt`]). The identity catalog and the CLI work in
//! [`BigInt`] throughout; the aliases below name the concrete types they use.
//!
//! ```
//! use cfib::{parse_cf, BigInt};
//!
//! let cf = parse_cf::<BigInt>("[2; 3, 7]").unwrap();
//! assert_eq!(cf.eval().unwrap().to_string(), "51/22");
//! ```

pub mod cli;
pub mod contfrac;
pub mod identities;
pub mod rational;
pub mod report;
pub mod scalar;
pub mod sequences;
pub mod tiling;

pub use num_bigint::BigInt;

pub use contfrac::{
    build_uniform, parse_cf, surd_cf, CfError, CfTerms, ConvergentTable, SurdExpansion,
};
pub use identities::{
    check, check_lemma, fit_uniform, lhs_terms, rhs_value, sweep, CaseParams, CheckOutcome, Counts,
    IdentityError, IdentityId, Status, SweepReport,
};
pub use rational::{ArithError, Rational};
pub use scalar::Scalar;
pub use sequences::{SeqError, SequenceKind};
pub use tiling::{HeightVector, TilingError};

/// Reduced fraction of arbitrary-precision integers.
pub type BigRational = Rational<BigInt>;
/// Reduced fraction of machine integers; overflow panics.
pub type Rational64 = Rational<i64>;
/// Continued fraction with arbitrary-precision partial quotients.
pub type BigCfTerms = CfTerms<BigInt>;
/// Convergent table over arbitrary-precision integers.
pub type BigConvergents = ConvergentTable<BigInt>;
/// Periodic expansion of an arbitrary-precision square root.
pub type BigSurdExpansion = SurdExpansion<BigInt>;
