//! The two integer polynomial sequences behind every diagonal form in the
//! crate, evaluated exactly at integer points.
//!
//! * `f(n, x, y)`: the tridiagonal determinant recurrence
//!   `f_n = x f_{n-1} - y^2 f_{n-2}` with `f_{-1} = 0`, `f_0 = 1`.
//! * `p(m, n, x, y)`: the power coefficient of the identity-plus-all-ones
//!   matrix ring, `p_m = (x + n y) p_{m-1} + y x^{m-1}` with `p_0 = 0`.
//!
//! Both also come in closed (binomial sum) form; the harness treats
//! recurrence and closed form as independent routes and sweeps them against
//! each other. Evaluation is iterative bottom-up, so indices in the
//! thousands stay cheap.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ipow;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyseqError {
    #[error("index {name} = {value} out of range (minimum {min})")]
    IndexOutOfRange { name: &'static str, value: i64, min: i64 },
}

fn check_min(name: &'static str, value: i64, min: i64) -> Result<(), PolyseqError> {
    if value < min {
        Err(PolyseqError::IndexOutOfRange { name, value, min })
    } else {
        Ok(())
    }
}

/// `f_n(x, y)` by the recurrence; defined for `n >= -1`.
pub fn f(n: i64, x: &BigInt, y: &BigInt) -> Result<BigInt, PolyseqError> {
    check_min("n", n, -1)?;
    if n == -1 {
        return Ok(BigInt::zero());
    }
    let y2 = y * y;
    let mut prev = BigInt::zero(); // f_{-1}
    let mut cur = BigInt::one(); // f_0
    for _ in 0..n {
        let next = x * &cur - &y2 * &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `f_n(x, y)` as the alternating binomial sum
/// `sum_i (-1)^i C(n-i, i) x^(n-2i) y^(2i)`; defined for `n >= 0`.
pub fn f_closed(n: i64, x: &BigInt, y: &BigInt) -> Result<BigInt, PolyseqError> {
    check_min("n", n, 0)?;
    let n = n as u64;
    let mut acc = BigInt::zero();
    for i in 0..=n / 2 {
        let term = binomial(n - i, i) * ipow(x, n - 2 * i) * ipow(y, 2 * i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `p_m(x, y)` for ring size `n >= 1` by the recurrence; `m >= 0`.
pub fn p(m: u64, n: u64, x: &BigInt, y: &BigInt) -> Result<BigInt, PolyseqError> {
    check_min("n", n as i64, 1)?;
    let shift = x + BigInt::from(n) * y;
    let mut acc = BigInt::zero();
    let mut xpow = BigInt::one(); // x^(k-1) as k runs 1..=m
    for k in 1..=m {
        acc = &shift * acc + y * &xpow;
        if k < m {
            xpow *= x;
        }
    }
    Ok(acc)
}

/// `p_m(x, y)` as the binomial sum `sum_{i=1}^m n^(i-1) C(m, i) x^(m-i) y^i`.
pub fn p_closed(m: u64, n: u64, x: &BigInt, y: &BigInt) -> Result<BigInt, PolyseqError> {
    check_min("n", n as i64, 1)?;
    let n = BigInt::from(n);
    let mut acc = BigInt::zero();
    for i in 1..=m {
        acc += ipow(&n, i - 1) * binomial(m, i) * ipow(x, m - i) * ipow(y, i);
    }
    Ok(acc)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::big;
    use proptest::prelude::*;

    #[test]
    fn f_initial_values_and_anchors() {
        assert_eq!(f(-1, &big(9), &big(7)).unwrap(), big(0));
        assert_eq!(f(0, &big(9), &big(7)).unwrap(), big(1));
        for n in 0..=10 {
            assert_eq!(f(n, &big(2), &big(1)).unwrap(), big(n + 1));
        }
        assert_eq!(f(3, &big(3), &big(1)).unwrap(), big(21));
        assert_eq!(f(-2, &big(0), &big(0)), Err(PolyseqError::IndexOutOfRange {
            name: "n",
            value: -2,
            min: -1
        }));
    }

    #[test]
    fn f_closed_anchors() {
        assert_eq!(f_closed(2, &big(3), &big(1)).unwrap(), big(8)); // x^2 - y^2
        assert_eq!(f_closed(0, &big(7), &big(5)).unwrap(), big(1));
        for n in 0..=8 {
            assert_eq!(f_closed(n, &big(-3), &big(0)).unwrap(), crate::ipow(&big(-3), n as u64));
        }
        assert!(f_closed(-1, &big(1), &big(1)).is_err());
    }

    #[test]
    fn p_anchors() {
        for n in 1..=5u64 {
            assert_eq!(p(1, n, &big(4), &big(9)).unwrap(), big(9));
            assert_eq!(p(0, n, &big(4), &big(9)).unwrap(), big(0));
        }
        assert_eq!(p(2, 3, &big(2), &big(1)).unwrap(), big(7)); // 2xy + ny^2
        for m in 1..=6u64 {
            for n in 2..=5u64 {
                let expect = -crate::ipow(&big(n as i64), m - 1);
                assert_eq!(p(m, n, &big(n as i64), &big(-1)).unwrap(), expect);
            }
        }
    }

    #[test]
    fn p_closed_anchors() {
        assert_eq!(p_closed(2, 3, &big(2), &big(1)).unwrap(), big(7));
        assert_eq!(p_closed(0, 4, &big(11), &big(13)).unwrap(), big(0));
        assert_eq!(p_closed(3, 2, &big(1), &big(1)).unwrap(), big(13)); // 3 + 6 + 4
        assert!(p(1, 0, &big(1), &big(1)).is_err());
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(4, 7), big(0));
        assert_eq!(binomial(40, 20), "137846528820".parse().unwrap());
    }

    proptest! {
        #[test]
        fn f_matches_closed_form(n in 0i64..25, x in -50i64..=50, y in -50i64..=50) {
            let (x, y) = (big(x), big(y));
            prop_assert_eq!(f(n, &x, &y).unwrap(), f_closed(n, &x, &y).unwrap());
        }

        #[test]
        fn p_matches_closed_form(m in 0u64..20, n in 1u64..6, x in -50i64..=50, y in -50i64..=50) {
            let (x, y) = (big(x), big(y));
            prop_assert_eq!(p(m, n, &x, &y).unwrap(), p_closed(m, n, &x, &y).unwrap());
        }

        #[test]
        fn f_product_rule(n in 0i64..20, k in 0i64..20, x in -20i64..=20, y in -20i64..=20) {
            // splitting identity: f_n = f_k f_{n-k} - y^2 f_{k-1} f_{n-k-1}
            prop_assume!(k <= n);
            let (x, y) = (big(x), big(y));
            let lhs = f(n, &x, &y).unwrap();
            let rhs = f(k, &x, &y).unwrap() * f(n - k, &x, &y).unwrap()
                - &y * &y * f(k - 1, &x, &y).unwrap() * f(n - k - 1, &x, &y).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
