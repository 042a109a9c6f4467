//! Square roots of `b(b-1)/2` modulo `b-1`.
//!
//! Any strict member of the four families has digit sum `b(b-1)/2` or
//! `(b-1)(b-2)/2`, and both are congruent modulo `b-1`. Since a number is
//! congruent to its digit sum modulo `b-1`, the root `n` of a strict square
//! must reduce into the set computed by [`aset`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest argument [`is_squarefree`] accepts.
pub const SQUAREFREE_LIMIT: u64 = 1_000_000_000_000;

/// Closed-form expectation for the residue set of a base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prediction {
    /// `b` odd and `v2(b-1)` even.
    Empty,
    /// `b` even and `b-1` squarefree.
    ZeroOnly,
    /// `b` odd and `b-1` squarefree.
    HalfOnly,
    Unconstrained,
}

impl Prediction {
    pub fn label(self) -> &'static str {
        match self {
            Prediction::Empty => "empty",
            Prediction::ZeroOnly => "zero-only",
            Prediction::HalfOnly => "half-only",
            Prediction::Unconstrained => "unconstrained",
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSet {
    pub base: u32,
    /// Sorted residues in `[0, b-2]`.
    pub members: Vec<u64>,
    pub prediction: Prediction,
}

impl ResidueSet {
    pub fn modulus(&self) -> u64 {
        self.base as u64 - 1
    }

    pub fn contains(&self, m: u64) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether `members` is what the prediction says it must be.
    pub fn agrees_with_prediction(&self) -> bool {
        let half = (self.base as u64 - 1) / 2;
        match self.prediction {
            Prediction::Empty => self.members.is_empty(),
            Prediction::ZeroOnly => self.members == [0],
            Prediction::HalfOnly => self.members == [half],
            Prediction::Unconstrained => true,
        }
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members.iter().map(u64::to_string).collect();
        write!(
            f,
            "A_{} = {{{}}} (theory: {})",
            self.base,
            items.join(", "),
            self.prediction
        )
    }
}

/// `b(b-1)/2 mod (b-1)`.
pub fn target_residue(base: u32) -> u64 {
    let b = base as u64;
    let m = b - 1;
    ((b as u128 * m as u128 / 2) % m as u128) as u64
}

/// Exhaustive scan of `[0, b-2]`.
pub fn aset(base: u32) -> Result<ResidueSet> {
    if base < 3 {
        return Err(Error::BaseTooSmall { base, min: 3 });
    }
    let modulus = base as u64 - 1;
    let target = target_residue(base);
    let members = (0..modulus)
        .filter(|&m| (m as u128 * m as u128 % modulus as u128) as u64 == target)
        .collect();
    Ok(ResidueSet {
        base,
        members,
        prediction: aset_theory(base)?,
    })
}

pub fn two_adic_valuation(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(n.trailing_zeros())
}

/// Trial division up to `sqrt(n)`, for `1 <= n <= SQUAREFREE_LIMIT`.
pub fn is_squarefree(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n > SQUAREFREE_LIMIT {
        return Err(Error::OutsideBudget {
            value: n,
            limit: SQUAREFREE_LIMIT,
        });
    }
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return Ok(false);
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Ok(true)
}

/// Predicted shape of `A_b`.
///
/// The squarefree cases are conditioned on `b-1`: for even `b` the target is
/// `0 mod (b-1)` and for odd `b` it is `(b-1)/2`, and the root is pinned only
/// when every odd prime of `b-1` appears once. An even squarefree `b-1` has
/// `v2 = 1`, so `HalfOnly` and `Empty` never overlap.
pub fn aset_theory(base: u32) -> Result<Prediction> {
    if base < 3 {
        return Err(Error::BaseTooSmall { base, min: 3 });
    }
    let m = base as u64 - 1;
    let odd = base % 2 == 1;
    if odd && two_adic_valuation(m)? % 2 == 0 {
        return Ok(Prediction::Empty);
    }
    let squarefree = is_squarefree(m)?;
    Ok(match (odd, squarefree) {
        (false, true) => Prediction::ZeroOnly,
        (true, true) => Prediction::HalfOnly,
        _ => Prediction::Unconstrained,
    })
}
