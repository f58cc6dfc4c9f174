use num_bigint::BigInt;

use super::{CaseParams, CheckOutcome, IdentityError, IdentityId};
use crate::contfrac::build_uniform;
use crate::sequences::{fib, fib_comb, gibonacci, lucas, lucas_swapped, scaled_fib};
use crate::{BigCfTerms, BigRational, Rational};

fn f(n: i64) -> BigInt {
    fib(n)
}

fn fc(n: i64) -> BigInt {
    fib_comb(n).expect("non-negative index")
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ratio(num: BigInt, den: BigInt) -> Option<BigRational> {
    Rational::new(num, den).ok()
}

fn validate(id: IdentityId, p: &CaseParams) -> Result<(), IdentityError> {
    match (id.takes_k(), p.k) {
        (true, None) => Err(IdentityError::MissingParam { id, param: "k" }),
        (false, Some(_)) => Err(IdentityError::ExtraParam { id, param: "k" }),
        _ => Ok(()),
    }
}

fn cf_params(id: IdentityId, p: &CaseParams) -> Result<(i64, i64), IdentityError> {
    if id.is_lemma() {
        return Err(IdentityError::NotACfIdentity(id));
    }
    validate(id, p)?;
    let k = p.k.unwrap_or(0);
    if id == IdentityId::CorGeneralLucas && k < 0 {
        return Err(IdentityError::BadDomain {
            id,
            reason: format!("k must be >= 0, got {k}"),
        });
    }
    Ok((i64::from(p.m), k))
}

/// The term list the identity prescribes for `p`.
pub fn lhs_terms(id: IdentityId, p: &CaseParams) -> Result<BigCfTerms, IdentityError> {
    use IdentityId::*;
    let (_, k) = cf_params(id, p)?;
    let reps = p.m as usize;
    let (base, count, tail) = match id {
        Id117 => (big(4), reps, Some(big(3))),
        Id118 => (big(4), reps, Some(big(5))),
        IdLucas7 => (big(4), reps, Some(big(7))),
        Thm1Gibonacci | Thm2FibForm => (big(4), reps, Some(big(2 * k + 3))),
        Thm3Ones => (big(1), reps, Some(big(k))),
        Thm4Eleven3 => (big(11), reps, Some(big(3))),
        Thm5SwappedLucas | Thm6ElevenFib => (big(11), reps + 1, None),
        Thm7Fours => (big(4), reps + 1, None),
        Thm8TwentyNines => (big(29), reps + 1, None),
        CorGeneralLucas => (lucas(2 * k + 1), reps + 1, None),
        ExtEleven8 => (big(11), reps, Some(big(8))),
        ExtEleven13 => (big(11), reps, Some(big(13))),
        Lem3F | Lem4F | LemL32 | LemF9 | Lem11F | Lem29F | LemBridge => unreachable!(),
    };
    Ok(build_uniform(&base, count, tail).expect("at least one term"))
}

/// The closed-form right side, or `None` when its denominator vanishes.
pub fn rhs_value(id: IdentityId, p: &CaseParams) -> Result<Option<BigRational>, IdentityError> {
    use IdentityId::*;
    let (m, k) = cf_params(id, p)?;
    let kb = big(k);
    let scaled = |t: i64, n: i64| scaled_fib::<BigInt>(t, n).expect("odd order");
    let l = lucas_swapped::<BigInt>;
    let value = match id {
        Id117 => ratio(fc(3 * m + 3), fc(3 * m)),
        Id118 => ratio(fc(3 * m + 4), fc(3 * m + 1)),
        // printed as L(3m+5)/L(3m+2); its own base cases 7/1, 29/7, 123/29 are L(4)/L(1), ...
        IdLucas7 => ratio(lucas(3 * m + 4), lucas(3 * m + 1)),
        Thm1Gibonacci => {
            let g = |n| gibonacci::<BigInt>(k, n).expect("non-negative index");
            ratio(g(3 * m + 4), g(3 * m + 1))
        }
        Thm2FibForm => ratio(
            f(3 * m + 4) + &kb * f(3 * m + 3),
            f(3 * m + 1) + &kb * f(3 * m),
        ),
        Thm3Ones => {
            let k1 = &kb - 1;
            ratio(f(m + 2) + &k1 * f(m + 1), f(m + 1) + &k1 * f(m))
        }
        Thm4Eleven3 => ratio(f(5 * m + 4), f(5 * m - 1)),
        Thm5SwappedLucas => ratio(l(5 * m + 5) - l(5 * m - 5), l(5 * m) - l(5 * m - 10)),
        Thm6ElevenFib => ratio(f(5 * m + 10), f(5 * m + 5)),
        Thm7Fours => ratio(scaled(3, m + 2), scaled(3, m + 1)),
        Thm8TwentyNines => ratio(scaled(7, m + 2), scaled(7, m + 1)),
        CorGeneralLucas => ratio(scaled(2 * k + 1, m + 2), scaled(2 * k + 1, m + 1)),
        ExtEleven8 => ratio(f(5 * m + 6), f(5 * m + 1)),
        ExtEleven13 => ratio(f(5 * m + 7), f(5 * m + 2)),
        Lem3F | Lem4F | LemL32 | LemF9 | Lem11F | Lem29F | LemBridge => unreachable!(),
    };
    Ok(value)
}

/// PASS iff both sides are defined and equal, SKIPPED iff both are undefined.
pub fn check(id: IdentityId, p: &CaseParams) -> Result<CheckOutcome, IdentityError> {
    let lhs = lhs_terms(id, p)?.eval().ok();
    let rhs = rhs_value(id, p)?;
    Ok(CheckOutcome::compare(lhs, rhs))
}

fn lemma_sides(id: IdentityId, m: i64) -> (BigInt, BigInt) {
    use IdentityId::*;
    match id {
        Lem3F => (3 * f(m), f(m + 2) + f(m - 2)),
        Lem4F => (4 * f(m), f(m + 2) + f(m) + f(m - 2)),
        LemL32 => (lucas(m), f(m + 1) + f(m - 1)),
        LemF9 => (f(m + 9), f(m - 1) + 11 * f(m + 4)),
        Lem11F => (
            11 * f(m + 4),
            f(m) + f(m + 2) + f(m + 4) + f(m + 6) + f(m + 8),
        ),
        Lem29F => (f(m) + 29 * f(m + 7), f(m + 14)),
        LemBridge => {
            let l = lucas_swapped::<BigInt>;
            (5 * (l(m) - l(m - 10)), f(m + 5))
        }
        _ => unreachable!(),
    }
}

/// Integer lemma at index `p.m`, both sides reported as integers.
pub fn check_lemma(id: IdentityId, p: &CaseParams) -> Result<CheckOutcome, IdentityError> {
    if !id.is_lemma() {
        return Err(IdentityError::NotALemma(id));
    }
    validate(id, p)?;
    if id == IdentityId::LemBridge && !p.m.is_multiple_of(5) {
        return Err(IdentityError::BadDomain {
            id,
            reason: format!("m must be a multiple of 5, got {}", p.m),
        });
    }
    let (lhs, rhs) = lemma_sides(id, i64::from(p.m));
    Ok(CheckOutcome::compare(Some(lhs.into()), Some(rhs.into())))
}

/// Dispatches to [`check`] or [`check_lemma`].
pub(crate) fn check_any(id: IdentityId, p: &CaseParams) -> Result<CheckOutcome, IdentityError> {
    if id.is_lemma() {
        check_lemma(id, p)
    } else {
        check(id, p)
    }
}
