//! Pandigital, penholodigital, subpandigital and subpenholodigital numbers
//! in arbitrary bases.
//!
//! - [`digits`]: representation, digit sums, classification.
//! - [`residues`]: the residue set that square roots of strict members must
//!   fall into, and its closed-form shape.
//! - [`squares`]: enumeration of strict squares by residue-filtered root scan.
//! - [`primality`]: exact below `2^64`, Baillie-PSW above.
//! - [`search`]: lower bounds and smallest-prime search.
//! - [`oeis`]: b-file parsing and comparison.
//! - [`cli`]: the `pandigital` command line.
//!
//! Numeric routines are generic over [`Natural`], implemented for `u64`,
//! `u128` and [`BigUint`].

pub mod cli;
pub mod digits;
pub mod error;
pub mod natural;
pub mod oeis;
pub mod primality;
pub mod residues;
pub mod search;
mod serde_decimal;
pub mod squares;

pub use num_bigint::BigUint;

pub use digits::{DigitClass, DigitString, Family};
pub use error::{Error, Result};
pub use natural::Natural;

/// Machine word values: strict squares up to base 16, Table-scale searches
/// up to base 16.
pub type Word = u64;
/// Default value type; holds every search value through base 20.
pub type Value = u128;
/// Unbounded values.
pub type BigValue = BigUint;

pub type WordScan = squares::SquareScanResult<Word>;
pub type ValueReport = search::SearchReport<Value>;
