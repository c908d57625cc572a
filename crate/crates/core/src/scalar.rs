//! The exact integer scalar that every computation in this crate is generic over.
//!
//! Degrees, genera and intersection numbers live in an integer type `I`; slopes
//! and every derived quantity live in [`Ratio<I>`], which is always kept in
//! reduced form with a positive denominator. Fixed-width instantiations
//! (`i64`, `i128`) are fast but overflow like native integers; the crate-root
//! aliases use [`BigInt`] and never overflow.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact signed integer type usable as the scalar of the crate.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + FromStr
    + From<i64>
    + TryFrom<BigInt>
    + Into<BigInt>
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromStr
        + From<i64>
        + TryFrom<BigInt>
        + Into<BigInt>
        + Send
        + Sync
        + 'static
{
}

/// Converts a count (rank, index, twist level) into the scalar.
pub fn int<I: Scalar>(n: usize) -> I {
    I::from(i64::try_from(n).expect("count exceeds i64"))
}

pub fn int_u64<I: Scalar>(n: u64) -> I {
    I::from(i64::try_from(n).expect("count exceeds i64"))
}

/// Converts an unbounded combinatorial count into the scalar.
pub fn from_biguint<I: Scalar>(n: &BigUint) -> Result<I, Error> {
    I::try_from(BigInt::from(n.clone())).map_err(|_| Error::Overflow {
        value: n.to_string(),
    })
}

pub fn ratio_int<I: Scalar>(n: I) -> Ratio<I> {
    Ratio::from_integer(n)
}

/// Largest integer `<= q`.
pub fn floor<I: Scalar>(q: &Ratio<I>) -> I {
    q.floor().to_integer()
}

/// Renders `q` as `p/q` with an explicit denominator, even when it is 1.
pub fn fraction<I: Scalar>(q: &Ratio<I>) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Renders an approximate decimal expansion of `q`, rounded half away from
/// zero to `digits` fractional digits. Exact integer arithmetic throughout.
pub fn decimal<I: Scalar>(q: &Ratio<I>, digits: usize) -> String {
    let numer: BigInt = q.numer().clone().into();
    let denom: BigInt = q.denom().clone().into();
    let negative = numer.is_negative();
    let numer = numer.abs();
    let scale = num_traits::pow(BigInt::from(10u8), digits);
    let scaled = numer * &scale;
    let (mut units, rem) = scaled.div_rem(&denom);
    if rem * 2 >= denom {
        units += 1;
    }
    let (whole, frac) = units.div_rem(&scale);
    let sign = if negative && !(whole.is_zero() && frac.is_zero()) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        let frac = frac.to_biguint().expect("non-negative remainder");
        format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = digits)
    }
}

/// True when `q` is a reduced fraction with positive denominator.
pub fn is_canonical<I: Scalar>(q: &Ratio<I>) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

pub(crate) fn to_usize<I: Scalar>(n: &I) -> Option<usize> {
    let big: BigInt = n.clone().into();
    big.to_usize()
}
