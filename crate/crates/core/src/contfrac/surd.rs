use std::fmt;

use super::CfError;
use crate::scalar::Scalar;

/// `√d = [a0; period, period, ...]` with the minimal repeating block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdExpansion<T> {
    pub a0: T,
    pub period: Vec<T>,
}

impl<T: Scalar> SurdExpansion<T> {
    /// The first `n` partial quotients.
    pub fn prefix(&self, n: usize) -> Vec<T> {
        std::iter::once(self.a0.clone())
            .chain(self.period.iter().cloned().cycle())
            .take(n)
            .collect()
    }
}

impl<T: fmt::Display> fmt::Display for SurdExpansion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; (", self.a0)?;
        for (i, a) in self.period.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")]")
    }
}

/// Periodic expansion of `√d` through the `(P, Q)` state recurrence
///
/// ```text
/// a_i     = floor((a0 + P_i) / Q_i)
/// P_{i+1} = a_i·Q_i - P_i
/// Q_{i+1} = (d - P_{i+1}^2) / Q_i
/// ```
///
/// starting from `(P_0, Q_0) = (0, 1)`. The expansion is purely periodic from
/// index 1, so the period closes when the state returns to `(P_1, Q_1)`.
pub fn surd_cf<T: Scalar>(d: &T, max_terms: usize) -> Result<SurdExpansion<T>, CfError> {
    if d < &T::from_small(2) {
        return Err(CfError::SurdDomain(d.to_string()));
    }
    let a0 = d.sqrt();
    if a0.clone() * a0.clone() == *d {
        return Err(CfError::PerfectSquare(d.to_string()));
    }
    let start = (a0.clone(), d.clone() - a0.clone() * a0.clone());
    let (mut p, mut q) = start.clone();
    let mut period = Vec::new();
    while period.len() < max_terms {
        let a = (a0.clone() + p.clone()) / q.clone();
        let next_p = a.clone() * q.clone() - p;
        let next_q = (d.clone() - next_p.clone() * next_p.clone()) / q;
        period.push(a);
        (p, q) = (next_p, next_q);
        if (&p, &q) == (&start.0, &start.1) {
            return Ok(SurdExpansion { a0, period });
        }
    }
    Err(CfError::PeriodNotFound(max_terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn root_nineteen() {
        let e = surd_cf(&BigInt::from(19), 100).unwrap();
        assert_eq!(e.a0, BigInt::from(4));
        assert_eq!(ints(&e.period), [2, 1, 3, 1, 2, 8]);
        assert_eq!(ints(&e.prefix(13)), [4, 2, 1, 3, 1, 2, 8, 2, 1, 3, 1, 2, 8]);
        assert_eq!(e.to_string(), "[4; (2, 1, 3, 1, 2, 8)]");
    }

    #[test]
    fn root_two() {
        let e = surd_cf(&2i64, 10).unwrap();
        assert_eq!((e.a0, e.period), (1, vec![2]));
    }

    #[test]
    fn errors() {
        assert_eq!(
            surd_cf(&16i64, 10),
            Err(CfError::PerfectSquare("16".into()))
        );
        assert_eq!(surd_cf(&1i64, 10), Err(CfError::SurdDomain("1".into())));
        assert_eq!(surd_cf(&19i64, 5), Err(CfError::PeriodNotFound(5)));
        assert!(surd_cf(&19i64, 6).is_ok());
    }

    #[test]
    fn convergents_approach_the_root() {
        // the convergent just before the end of the first period solves Pell's equation
        let d = BigInt::from(19);
        let e = surd_cf(&d, 100).unwrap();
        let cf = crate::contfrac::CfTerms::new(e.prefix(6)).unwrap();
        let (p, q) = cf.continuant_pair();
        assert_eq!(&p * &p - &d * &q * &q, BigInt::from(1));
    }

    #[test]
    fn classical_period_shape() {
        for d in 2i64..=200 {
            let Ok(e) = surd_cf(&d, 1000) else { continue };
            let (last, body) = e.period.split_last().unwrap();
            assert_eq!(*last, 2 * e.a0, "d={d}");
            assert!(body.iter().eq(body.iter().rev()), "d={d}");
        }
    }
}
