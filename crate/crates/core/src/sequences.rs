//! Integer sequences under explicitly named index conventions.
//!
//! | function            | seeds                 | negative indices            |
//! |---------------------|-----------------------|-----------------------------|
//! | [`fib`]             | F_0 = 0, F_1 = 1      | F_{-n} = (-1)^{n+1} F_n     |
//! | [`fib_comb`]        | f_0 = 1, f_1 = 1      | rejected                    |
//! | [`lucas`]           | L_0 = 2, L_1 = 1      | L_{-n} = (-1)^n L_n         |
//! | [`lucas_swapped`]   | l_0..l_3 = 1, 2, 3, 4 | clamped to 0                |
//! | [`gibonacci`]       | G_0 = k, G_1 = 1      | rejected                    |
//! | [`scaled_fib`]      | F_{tn} / F_t, t odd   | rejected                    |
//!
//! Everything is a plain linear loop; indices stay in the low thousands.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("negative index {0} is outside the sequence's domain")]
    NegativeIndex(i64),
    #[error("scaled Fibonacci order must be odd and at least 1, got {0}")]
    EvenOrder(i64),
}

/// Advances `(a, b)` by the Fibonacci recurrence `steps` times and returns the first slot.
fn walk<T: Scalar>(mut a: T, mut b: T, steps: u64) -> T {
    for _ in 0..steps {
        let next = a + b.clone();
        a = b;
        b = next;
    }
    a
}

pub fn fib<T: Scalar>(n: i64) -> T {
    let value: T = walk(T::zero(), T::one(), n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        -value
    } else {
        value
    }
}

/// Square/domino tilings of an `n`-board: `f_n = F_{n+1}`.
pub fn fib_comb<T: Scalar>(n: i64) -> Result<T, SeqError> {
    if n < 0 {
        return Err(SeqError::NegativeIndex(n));
    }
    Ok(fib(n + 1))
}

pub fn lucas<T: Scalar>(n: i64) -> T {
    let value: T = walk(T::from_small(2), T::one(), n.unsigned_abs());
    if n < 0 && n % 2 != 0 {
        -value
    } else {
        value
    }
}

/// Lucas numbers with the first two seeds exchanged. The recurrence only applies
/// from index 4 (`l_3 = 4 != l_1 + l_2`), and every negative index maps to 0.
pub fn lucas_swapped<T: Scalar>(n: i64) -> T {
    match n {
        n if n < 0 => T::zero(),
        0..=3 => T::from_small(n + 1),
        _ => walk(T::from_small(3), T::from_small(4), (n - 2) as u64),
    }
}

pub fn gibonacci<T: Scalar>(k: i64, n: i64) -> Result<T, SeqError> {
    if n < 0 {
        return Err(SeqError::NegativeIndex(n));
    }
    Ok(walk(T::from_small(k), T::one(), n as u64))
}

/// `F_n + k·F_{n-1}`, which agrees with [`gibonacci`] on its whole domain.
pub fn gibonacci_closed<T: Scalar>(k: i64, n: i64) -> Result<T, SeqError> {
    if n < 0 {
        return Err(SeqError::NegativeIndex(n));
    }
    Ok(fib::<T>(n) + T::from_small(k) * fib::<T>(n - 1))
}

/// `F_{t·n} / F_t` for odd `t`. `F_t` divides `F_{tn}` for every `t`, so the
/// division is exact.
pub fn scaled_fib<T: Scalar>(t: i64, n: i64) -> Result<T, SeqError> {
    if t < 1 || t % 2 == 0 {
        return Err(SeqError::EvenOrder(t));
    }
    if n < 0 {
        return Err(SeqError::NegativeIndex(n));
    }
    let (q, r) = fib::<T>(t * n).div_rem(&fib::<T>(t));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// The odd `t` with `L_t = c`, if any. Scans upward until `L_t` exceeds `c`.
pub fn lucas_odd_index_of<T: Scalar>(c: &T) -> Option<i64> {
    let (mut a, mut b) = (T::from_small(2), T::one());
    let mut t = 0i64;
    loop {
        if t >= 1 && &a > c {
            return None;
        }
        if &a == c && t % 2 == 1 {
            return Some(t);
        }
        let next = a + b.clone();
        a = b;
        b = next;
        t += 1;
    }
}

/// A sequence selected by name, as exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    FibClassical,
    FibCombinatorial,
    Lucas,
    LucasSwapped,
    Gibonacci { k: i64 },
    ScaledFib { t: i64 },
}

impl SequenceKind {
    pub fn term<T: Scalar>(&self, n: i64) -> Result<T, SeqError> {
        match *self {
            Self::FibClassical => Ok(fib(n)),
            Self::FibCombinatorial => fib_comb(n),
            Self::Lucas => Ok(lucas(n)),
            Self::LucasSwapped => Ok(lucas_swapped(n)),
            Self::Gibonacci { k } => gibonacci(k, n),
            Self::ScaledFib { t } => scaled_fib(t, n),
        }
    }

    /// First index from which `term(n) = term(n-1) + term(n-2)` holds.
    pub fn recurrence_start(&self) -> i64 {
        match self {
            Self::LucasSwapped => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FibClassical => f.write_str("fib"),
            Self::FibCombinatorial => f.write_str("fibc"),
            Self::Lucas => f.write_str("lucas"),
            Self::LucasSwapped => f.write_str("lucas-swapped"),
            Self::Gibonacci { k } => write!(f, "gib(k={k})"),
            Self::ScaledFib { t } => write!(f, "scaled(t={t})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib::<BigInt>(10), b(55));
        assert_eq!(fib::<BigInt>(-1), b(1));
        assert_eq!(fib::<BigInt>(-2), b(-1));
        assert_eq!(fib::<BigInt>(0), b(0));
        assert_eq!(fib::<i64>(-7), 13);
    }

    #[test]
    fn combinatorial_fibonacci_values() {
        assert_eq!(fib_comb::<BigInt>(4).unwrap(), b(5));
        assert_eq!(fib_comb::<BigInt>(0).unwrap(), b(1));
        assert_eq!(fib_comb::<BigInt>(11).unwrap(), b(144));
        assert_eq!(fib_comb::<BigInt>(-1), Err(SeqError::NegativeIndex(-1)));
    }

    #[test]
    fn lucas_values() {
        assert_eq!(lucas::<BigInt>(11), b(199));
        assert_eq!(lucas::<BigInt>(0), b(2));
        assert_eq!(lucas::<BigInt>(-3), b(-4));
        assert_eq!(lucas::<BigInt>(-4), b(7));
    }

    #[test]
    fn swapped_lucas_values() {
        let head: Vec<i64> = (0..8).map(lucas_swapped::<i64>).collect();
        assert_eq!(head, [1, 2, 3, 4, 7, 11, 18, 29]);
        assert_eq!(lucas_swapped::<BigInt>(10), b(123));
        assert_eq!(lucas_swapped::<BigInt>(15), b(1364));
        assert_eq!(lucas_swapped::<BigInt>(-5), b(0));
        assert_eq!(lucas_swapped::<BigInt>(-10), b(0));
    }

    #[test]
    fn gibonacci_values() {
        assert_eq!(gibonacci::<BigInt>(3, 7).unwrap(), b(37));
        assert_eq!(gibonacci::<BigInt>(-4, 10).unwrap(), b(-81));
        assert_eq!(gibonacci::<BigInt>(1, -1), Err(SeqError::NegativeIndex(-1)));
        for n in 0..=20 {
            assert_eq!(gibonacci::<BigInt>(0, n).unwrap(), fib::<BigInt>(n));
        }
    }

    #[test]
    fn gibonacci_closed_values() {
        assert_eq!(gibonacci_closed::<BigInt>(3, 0).unwrap(), b(3));
        assert_eq!(gibonacci_closed::<BigInt>(-2, 10).unwrap(), b(-13));
        assert_eq!(gibonacci_closed::<BigInt>(5, 11).unwrap(), b(364));
    }

    #[test]
    fn scaled_fib_values() {
        assert_eq!(scaled_fib::<BigInt>(5, 4).unwrap(), b(1353));
        assert_eq!(scaled_fib::<BigInt>(3, 2).unwrap(), b(4));
        assert_eq!(scaled_fib::<BigInt>(7, 2).unwrap(), b(29));
        assert_eq!(scaled_fib::<BigInt>(4, 2), Err(SeqError::EvenOrder(4)));
        assert_eq!(scaled_fib::<BigInt>(-1, 2), Err(SeqError::EvenOrder(-1)));
        let a049666: Vec<BigInt> = (0..5).map(|n| scaled_fib(5, n).unwrap()).collect();
        assert_eq!(a049666, [b(0), b(1), b(11), b(122), b(1353)]);
    }

    #[test]
    fn odd_lucas_index_lookup() {
        assert_eq!(lucas_odd_index_of(&b(29)), Some(7));
        assert_eq!(lucas_odd_index_of(&b(4)), Some(3));
        assert_eq!(lucas_odd_index_of(&b(1)), Some(1));
        assert_eq!(lucas_odd_index_of(&b(199)), Some(11));
        for even in [2, 3, 7, 18, 47] {
            assert_eq!(lucas_odd_index_of(&b(even)), None, "{even}");
        }
        assert_eq!(lucas_odd_index_of(&b(30)), None);
    }

    #[test]
    fn recurrence_holds_for_every_kind() {
        let kinds = [
            SequenceKind::FibClassical,
            SequenceKind::FibCombinatorial,
            SequenceKind::Lucas,
            SequenceKind::LucasSwapped,
            SequenceKind::Gibonacci { k: -7 },
            SequenceKind::Gibonacci { k: 12 },
        ];
        for kind in kinds {
            for n in kind.recurrence_start()..120 {
                let t = |i| kind.term::<BigInt>(i).unwrap();
                assert_eq!(t(n), t(n - 1) + t(n - 2), "{kind} at {n}");
            }
        }
        assert_ne!(
            lucas_swapped::<i64>(3),
            lucas_swapped::<i64>(2) + lucas_swapped::<i64>(1)
        );
    }

    #[test]
    fn gibonacci_matches_closed_form() {
        for k in -50..=50 {
            for n in 0..=200 {
                assert_eq!(
                    gibonacci::<BigInt>(k, n).unwrap(),
                    gibonacci_closed::<BigInt>(k, n).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn conventions_agree() {
        for n in 0..=200 {
            assert_eq!(fib_comb::<BigInt>(n).unwrap(), fib::<BigInt>(n + 1));
        }
        for n in -20..=200 {
            assert_eq!(
                lucas::<BigInt>(n),
                fib::<BigInt>(n + 1) + fib::<BigInt>(n - 1),
                "n={n}"
            );
        }
        for n in 2..=40 {
            assert_eq!(lucas_swapped::<BigInt>(n), lucas::<BigInt>(n));
        }
    }

    #[test]
    fn swapped_lucas_is_nearest_power_of_phi() {
        // φ^n = (L_n + F_n·√5)/2, so l_n = round(φ^n) iff |2·l_n - L_n - F_n√5| < 1;
        // compare the squares of the integer parts to stay exact.
        for n in 0..=40i64 {
            let l = lucas_swapped::<BigInt>(n);
            let lucas_n = lucas::<BigInt>(n);
            let f = fib::<BigInt>(n);
            let five_f2 = b(5) * &f * &f;
            let lower = &b(2) * &l - &lucas_n - b(1);
            let upper = &b(2) * &l - &lucas_n + b(1);
            // lower < F_n√5 < upper, with F_n√5 >= 0
            let above_lower = lower < b(0) || &lower * &lower < five_f2;
            let below_upper = upper > b(0) && five_f2 < &upper * &upper;
            assert!(above_lower && below_upper, "n={n}");
        }
    }

    #[test]
    fn scaled_fib_obeys_lucas_recurrence() {
        // brute-force check that F_{t(n+1)}/F_t = L_t·F_{tn}/F_t + F_{t(n-1)}/F_t
        for t in (1..=11).step_by(2) {
            let lt = lucas::<BigInt>(t);
            for n in 1..=100 {
                let direct = |i: i64| fib::<BigInt>(t * i) / fib::<BigInt>(t);
                assert_eq!(
                    direct(n + 1),
                    &lt * direct(n) + direct(n - 1),
                    "t={t} n={n}"
                );
                assert_eq!(scaled_fib::<BigInt>(t, n).unwrap(), direct(n));
            }
        }
    }
}
