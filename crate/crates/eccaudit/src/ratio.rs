//! Small helpers around `num_rational::BigRational`.
//!
//! All exact values in this crate are either checked `i128` integers or
//! `BigRational`s. These helpers build rationals from machine integers and
//! format them the way every report in this crate serializes rationals:
//! `p/q` in lowest terms with positive `q`, plain `p` when `q == 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Exact rational from an integer.
pub fn rat_int(x: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Exact rational `a/b`. Panics if `b == 0`.
pub fn rat(a: i128, b: i128) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Canonical text form: `p` when the denominator is 1, else `p/q`.
pub fn fmt_rat(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Checked accumulation helpers for integer-valued invariant sums.
/// Every supported graph keeps these far below `i128::MAX`; hitting the
/// checks means the input is outside the supported size envelope, and the
/// only sound response is to stop.
pub fn add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer invariant overflowed i128")
}

/// Checked multiplication (see [`add`]).
pub fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer invariant overflowed i128")
}
