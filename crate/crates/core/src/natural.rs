//! The unsigned integer abstraction shared by every numeric routine.
//!
//! Routines are written once over [`Natural`] and instantiated for `u64`,
//! `u128` and [`BigUint`]; callers pick the narrowest type that holds their
//! values.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Shr;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, ToPrimitive};

/// Exact nonnegative integers.
pub trait Natural:
    Integer
    + Roots
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedMul
    + Shr<usize, Output = Self>
    + Into<BigUint>
    + Send
    + Sync
    + 'static
{
    fn small(v: u32) -> Self {
        <Self as FromPrimitive>::from_u32(v).expect("every Natural holds a u32")
    }

    fn word(v: u64) -> Self {
        <Self as FromPrimitive>::from_u64(v).expect("every Natural holds a u64")
    }

    /// Narrowing conversion from an arbitrary-precision value.
    fn try_from_big(v: &BigUint) -> Option<Self>;

    fn to_big(&self) -> BigUint {
        self.clone().into()
    }
}

impl Natural for u64 {
    fn try_from_big(v: &BigUint) -> Option<Self> {
        v.to_u64()
    }
}

impl Natural for u128 {
    fn try_from_big(v: &BigUint) -> Option<Self> {
        v.to_u128()
    }
}

impl Natural for BigUint {
    fn try_from_big(v: &BigUint) -> Option<Self> {
        Some(v.clone())
    }
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow<T: Natural>(base: u32, exp: u32) -> Option<T> {
    let b = T::small(base);
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc.checked_mul(&b)?;
    }
    Some(acc)
}

/// Floor square root, exact at any precision.
pub fn isqrt<T: Natural>(n: &T) -> T {
    n.sqrt()
}
