//! Finite continued fractions `[a_0, a_1, ..., a_n]` with integer partial quotients.
//!
//! Evaluation runs forward through the convergent recurrence
//!
//! ```text
//! p_i = a_i·p_{i-1} + p_{i-2},   p_{-1} = 1, p_{-2} = 0
//! q_i = a_i·q_{i-1} + q_{i-2},   q_{-1} = 0, q_{-2} = 1
//! ```
//!
//! which is total for any terms, including zero and negative ones; only a
//! vanishing final `q_n` leaves the value undefined. [`CfTerms::eval_fold`]
//! nests right to left instead and is kept as a cross-check.

mod parse;
mod surd;

use std::fmt;
use std::ops::Index;

use thiserror::Error;

use crate::rational::Rational;
use crate::scalar::Scalar;

pub use parse::parse_cf;
pub use surd::{surd_cf, SurdExpansion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("continued fraction has no terms")]
    EmptyCf,
    #[error("continued fraction value is undefined (final denominator is zero)")]
    UndefinedValue,
    #[error("backward evaluation hit zero before a reciprocal at term {index}")]
    IntermediateZero { index: usize },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("{0} is a perfect square")]
    PerfectSquare(String),
    #[error("no period found within {0} terms")]
    PeriodNotFound(usize),
    #[error("square root expansion needs d >= 2, got {0}")]
    SurdDomain(String),
}

/// Non-empty list of partial quotients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfTerms<T>(Vec<T>);

impl<T: Scalar> CfTerms<T> {
    pub fn new(terms: Vec<T>) -> Result<Self, CfError> {
        if terms.is_empty() {
            Err(CfError::EmptyCf)
        } else {
            Ok(Self(terms))
        }
    }

    pub fn terms(&self) -> &[T] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<T> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept alongside `len` for the usual pairing.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn convergents(&self) -> ConvergentTable<T> {
        let (mut p, mut q) = (
            Vec::with_capacity(self.len()),
            Vec::with_capacity(self.len()),
        );
        let (mut p1, mut p2) = (T::one(), T::zero());
        let (mut q1, mut q2) = (T::zero(), T::one());
        for a in &self.0 {
            let pi = a.clone() * p1.clone() + p2;
            let qi = a.clone() * q1.clone() + q2;
            p.push(pi.clone());
            q.push(qi.clone());
            (p2, p1) = (p1, pi);
            (q2, q1) = (q1, qi);
        }
        ConvergentTable { p, q }
    }

    /// Final convergent `p_n/q_n`, reduced.
    pub fn eval(&self) -> Result<Rational<T>, CfError> {
        let (p, q) = self.continuant_pair();
        Rational::new(p, q).map_err(|_| CfError::UndefinedValue)
    }

    /// Unreduced final `(p_n, q_n)` without materializing the whole table.
    pub fn continuant_pair(&self) -> (T, T) {
        let (mut p1, mut p2) = (T::one(), T::zero());
        let (mut q1, mut q2) = (T::zero(), T::one());
        for a in &self.0 {
            let pi = a.clone() * p1.clone() + p2;
            let qi = a.clone() * q1.clone() + q2;
            (p2, p1) = (p1, pi);
            (q2, q1) = (q1, qi);
        }
        (p1, q1)
    }

    /// Right-to-left nesting `x <- a_i + 1/x`. Fails as soon as a partial value
    /// is zero, even where the forward evaluation is defined.
    pub fn eval_fold(&self) -> Result<Rational<T>, CfError> {
        let (last, rest) = self.0.split_last().expect("non-empty");
        let mut x = Rational::from_integer(last.clone());
        for (index, a) in rest.iter().enumerate().rev() {
            let inv = x
                .recip()
                .map_err(|_| CfError::IntermediateZero { index: index + 1 })?;
            x = inv.add_int(a);
        }
        Ok(x)
    }

    /// Canonical expansion by the Euclidean algorithm with floor division:
    /// `a_0` may have any sign, later terms are positive and the last one is at
    /// least 2 unless the expansion has a single term.
    pub fn expand(r: &Rational<T>) -> Self {
        let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
        let mut terms = Vec::new();
        loop {
            let (a, rem) = num.div_mod_floor(&den);
            terms.push(a);
            if rem.is_zero() {
                break;
            }
            num = den;
            den = rem;
        }
        Self(terms)
    }

    pub fn is_canonical(&self) -> bool {
        let tail = &self.0[1..];
        tail.iter().all(|a| a.is_positive())
            && (tail.is_empty() || tail.last().is_some_and(|a| a > &T::one()))
    }
}

impl<T> Index<usize> for CfTerms<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: fmt::Display> fmt::Display for CfTerms<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// `count` copies of `c`, then `tail` if present.
pub fn build_uniform<T: Scalar>(
    c: &T,
    count: usize,
    tail: Option<T>,
) -> Result<CfTerms<T>, CfError> {
    let mut terms = vec![c.clone(); count];
    terms.extend(tail);
    CfTerms::new(terms)
}

/// Numerators and denominators of every convergent, index `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable<T> {
    pub p: Vec<T>,
    pub q: Vec<T>,
}

impl<T: Scalar> ConvergentTable<T> {
    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn last(&self) -> (&T, &T) {
        (
            self.p.last().expect("non-empty"),
            self.q.last().expect("non-empty"),
        )
    }

    /// `p_i q_{i-1} - p_{i-1} q_i = (-1)^{i+1}` for every `1 <= i <= n`.
    pub fn determinant_holds(&self) -> bool {
        (1..self.len()).all(|i| {
            let det = self.p[i].clone() * self.q[i - 1].clone()
                - self.p[i - 1].clone() * self.q[i].clone();
            let expected = if i % 2 == 1 { T::one() } else { -T::one() };
            det == expected
        })
    }
}
