//! Catalog of continued-fraction, Fibonacci and Lucas identities, checked in
//! exact arithmetic.
//!
//! Continued-fraction identities compare the forward evaluation of a term list
//! ([`lhs_terms`]) against a closed-form ratio ([`rhs_value`]). Lemmas are
//! integer equations between sequence values at a single index `m`
//! ([`check_lemma`]). [`sweep`] runs either kind over a parameter grid.

mod catalog;
mod fit;
mod sweep;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::BigRational;

pub use catalog::{check, check_lemma, lhs_terms, rhs_value};
pub use fit::fit_uniform;
pub use sweep::{sweep, sweep_jobs, Counts, SweepReport};

macro_rules! identity_ids {
    ($($variant:ident => $tag:literal),+ $(,)?) => {
        /// Stable identifiers; [`IdentityId::tag`] is the string used on the
        /// command line and in JSON reports.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant),+
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),+];

            pub fn tag(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $tag),+
                }
            }
        }
    };
}

identity_ids! {
    Id117 => "ID117",
    Id118 => "ID118",
    IdLucas7 => "ID_LUCAS7",
    Thm1Gibonacci => "THM1_GIBONACCI",
    Thm2FibForm => "THM2_FIB_FORM",
    Thm3Ones => "THM3_ONES",
    Thm4Eleven3 => "THM4_ELEVEN3",
    Thm5SwappedLucas => "THM5_SWAPPED_LUCAS",
    Thm6ElevenFib => "THM6_ELEVEN_FIB",
    Thm7Fours => "THM7_FOURS",
    Thm8TwentyNines => "THM8_TWENTYNINES",
    CorGeneralLucas => "COR_GENERAL_LUCAS",
    ExtEleven8 => "EXT_ELEVEN8",
    ExtEleven13 => "EXT_ELEVEN13",
    Lem3F => "LEM_3F",
    Lem4F => "LEM_4F",
    LemL32 => "LEM_L32",
    LemF9 => "LEM_F9",
    Lem11F => "LEM_11F",
    Lem29F => "LEM_29F",
    LemBridge => "LEM_BRIDGE",
}

impl IdentityId {
    pub fn is_lemma(self) -> bool {
        self.tag().starts_with("LEM_")
    }

    /// Whether the identity is a family indexed by `k` as well as `m`.
    pub fn takes_k(self) -> bool {
        matches!(
            self,
            Self::Thm1Gibonacci | Self::Thm2FibForm | Self::Thm3Ones | Self::CorGeneralLucas
        )
    }

    /// Human-readable statement, `m` and `k` as in [`CaseParams`].
    pub fn statement(self) -> &'static str {
        match self {
            Self::Id117 => "[4 x m, 3] = f(3m+3) / f(3m)",
            Self::Id118 => "[4 x m, 5] = f(3m+4) / f(3m+1)",
            Self::IdLucas7 => "[4 x m, 7] = L(3m+4) / L(3m+1)",
            Self::Thm1Gibonacci => "[4 x m, 2k+3] = G(3m+4) / G(3m+1), G0 = k, G1 = 1",
            Self::Thm2FibForm => "[4 x m, 2k+3] = (F(3m+4) + k F(3m+3)) / (F(3m+1) + k F(3m))",
            Self::Thm3Ones => "[1 x m, k] = (F(m+2) + (k-1) F(m+1)) / (F(m+1) + (k-1) F(m))",
            Self::Thm4Eleven3 => "[11 x m, 3] = F(5m+4) / F(5m-1)",
            Self::Thm5SwappedLucas => {
                "[11 x (m+1)] = (l(5m+5) - l(5m-5)) / (l(5m) - l(5m-10)), l(n<0) = 0"
            }
            Self::Thm6ElevenFib => "[11 x (m+1)] = F(5m+10) / F(5m+5)",
            Self::Thm7Fours => "[4 x (m+1)] = a(m+2) / a(m+1), a(n) = F(3n) / 2",
            Self::Thm8TwentyNines => "[29 x (m+1)] = a(m+2) / a(m+1), a(n) = F(7n) / 13",
            Self::CorGeneralLucas => {
                "[L(2k+1) x (m+1)] = a(m+2) / a(m+1), a(n) = F((2k+1)n) / F(2k+1)"
            }
            Self::ExtEleven8 => "[11 x m, 8] = F(5m+6) / F(5m+1)",
            Self::ExtEleven13 => "[11 x m, 13] = F(5m+7) / F(5m+2)",
            Self::Lem3F => "3 F(m) = F(m+2) + F(m-2)",
            Self::Lem4F => "4 F(m) = F(m+2) + F(m) + F(m-2)",
            Self::LemL32 => "L(m) = F(m+1) + F(m-1)",
            Self::LemF9 => "F(m+9) = F(m-1) + 11 F(m+4)",
            Self::Lem11F => "11 F(m+4) = F(m) + F(m+2) + F(m+4) + F(m+6) + F(m+8)",
            Self::Lem29F => "F(m) + 29 F(m+7) = F(m+14)",
            Self::LemBridge => "5 (l(m) - l(m-10)) = F(m+5), m a multiple of 5",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown identity '{0}'")]
pub struct UnknownIdentity(pub String);

impl FromStr for IdentityId {
    type Err = UnknownIdentity;

    /// Accepts the full tag (any case) or a theorem's short form such as `THM1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        Self::ALL
            .iter()
            .copied()
            .find(|id| {
                let tag = id.tag();
                tag == upper
                    || (tag.starts_with("THM") && tag.split('_').next() == Some(upper.as_str()))
            })
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("{0} is a lemma, not a continued-fraction identity")]
    NotACfIdentity(IdentityId),
    #[error("{0} is a continued-fraction identity, not a lemma")]
    NotALemma(IdentityId),
    #[error("{id} requires parameter {param}")]
    MissingParam { id: IdentityId, param: &'static str },
    #[error("{id} does not take parameter {param}")]
    ExtraParam { id: IdentityId, param: &'static str },
    #[error("{id}: {reason}")]
    BadDomain { id: IdentityId, reason: String },
}

/// One instance of an identity: the repetition count `m` and, for families,
/// the parameter `k`. Ordered lexicographically by `(m, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseParams {
    pub m: u32,
    pub k: Option<i64>,
}

impl CaseParams {
    pub fn m(m: u32) -> Self {
        Self { m, k: None }
    }

    pub fn mk(m: u32, k: i64) -> Self {
        Self { m, k: Some(k) }
    }
}

impl fmt::Display for CaseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}", self.m)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Skipped => "SKIPPED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict with both sides; `None` marks an undefined side (zero denominator).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub status: Status,
    pub lhs: Option<BigRational>,
    pub rhs: Option<BigRational>,
    pub note: String,
}

impl CheckOutcome {
    pub fn compare(lhs: Option<BigRational>, rhs: Option<BigRational>) -> Self {
        let (status, note) = match (&lhs, &rhs) {
            (Some(a), Some(b)) if a == b => (Status::Pass, ""),
            (Some(_), Some(_)) => (Status::Fail, "sides differ"),
            (None, None) => (Status::Skipped, "both sides undefined"),
            (None, Some(_)) => (Status::Fail, "left side undefined"),
            (Some(_), None) => (Status::Fail, "right side undefined"),
        };
        Self {
            status,
            lhs,
            rhs,
            note: note.to_string(),
        }
    }
}
