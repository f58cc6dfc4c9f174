use num_bigint::BigInt;

use crate::contfrac::build_uniform;
use crate::sequences::{lucas_odd_index_of, scaled_fib};
use crate::Rational;

/// Finds the odd `t` with `L_t = c` such that `[c x n] = a(n+1)/a(n)` with
/// `a(n) = F(tn)/F(t)` for every `1 <= n <= n_max`.
pub fn fit_uniform(c: &BigInt, n_max: u32) -> Option<i64> {
    let t = lucas_odd_index_of(c)?;
    let a = |n: i64| scaled_fib::<BigInt>(t, n).expect("odd order");
    let fits = (1..=i64::from(n_max)).all(|n| {
        let cf = build_uniform(c, n as usize, None).expect("n >= 1");
        let expected = Rational::new(a(n + 1), a(n)).expect("a(n) > 0 for n >= 1");
        cf.eval().is_ok_and(|v| v == expected)
    });
    fits.then_some(t)
}
