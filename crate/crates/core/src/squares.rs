//! Strict family squares, found by scanning square roots.
//!
//! A strict member has a fixed digit sum that reduces to `b(b-1)/2` modulo
//! `b-1`, so a root `m` can only produce one when `m mod (b-1)` lies in
//! `A_b`. The scan visits only those residue classes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digits::{value_of, Family};
use crate::error::{Error, Result};
use crate::natural::Natural;
use crate::residues::{aset, ResidueSet};
use crate::search::RowStatus;

pub use crate::natural::isqrt;

/// Default ceiling on post-filter candidates.
pub const DEFAULT_SCAN_BUDGET: u128 = 2_000_000_000;

/// Roots per parallel work unit. Output does not depend on it.
const CHUNK_ROOTS: u64 = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SquareScanResult<T: Natural> {
    pub base: u32,
    pub family: Family,
    #[serde(with = "crate::serde_decimal::vec")]
    pub roots: Vec<T>,
    pub count: u64,
    /// Roots whose square was tested.
    pub scanned: u64,
    /// Roots skipped by the residue filter.
    pub filtered: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Ceiling on post-filter candidates; `None` disables it.
    pub budget: Option<u128>,
    /// Return immediately when `A_b` is empty.
    pub short_circuit: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            budget: Some(DEFAULT_SCAN_BUDGET),
            short_circuit: true,
        }
    }
}

/// Smallest and largest strict members of `family` in base `b`.
pub fn strict_value_range<T: Natural>(base: u32, family: Family) -> Result<(T, T)> {
    if family.is_sub() && base < 3 {
        return Err(Error::FamilyUndefined {
            family: family.name(),
            base,
        });
    }
    let (lo_digit, hi_digit) = family.check_defined(base)?;
    let ascending: Vec<u32> = (lo_digit..=hi_digit).collect();
    let mut smallest = ascending.clone();
    if smallest[0] == 0 && smallest.len() > 1 {
        smallest.swap(0, 1);
    }
    let descending: Vec<u32> = ascending.into_iter().rev().collect();
    Ok((value_of(base, &smallest)?, value_of(base, &descending)?))
}

/// Root interval `[first, last]` whose squares cover the strict range.
pub fn root_range<T: Natural>(base: u32, family: Family) -> Result<(T, T)> {
    let (lo, hi) = strict_value_range::<T>(base, family)?;
    let first = if lo.is_zero() {
        T::zero()
    } else {
        isqrt(&(lo - T::one())) + T::one()
    };
    Ok((first, isqrt(&hi)))
}

/// Post-filter candidate count, without scanning.
pub fn estimate_candidates<T: Natural>(base: u32, family: Family) -> Result<u128> {
    let set = aset(base)?;
    let (first, last) = root_range::<T>(base, family)?;
    if last < first {
        return Ok(0);
    }
    let width = (last - first + T::one()).to_big();
    let est = width * set.members.len() / set.modulus();
    Ok(est.try_into().unwrap_or(u128::MAX))
}

/// Checks whether `n` has exactly the digits of `family`'s strict members.
/// `seen` is scratch space of length `base`.
fn is_strict_member<T: Natural>(n: &T, base: &T, lo: u32, hi: u32, seen: &mut [bool]) -> bool {
    seen.fill(false);
    let want = (hi - lo + 1) as usize;
    let mut rest = n.clone();
    let mut len = 0usize;
    while !rest.is_zero() {
        if len == want {
            return false;
        }
        let (q, r) = rest.div_rem(base);
        let d = r.to_u32().expect("remainder below base");
        if d < lo || d > hi || seen[d as usize] {
            return false;
        }
        seen[d as usize] = true;
        len += 1;
        rest = q;
    }
    // zero itself
    if len == 0 {
        return lo == 0 && hi == 0;
    }
    len == want
}

/// All roots in `[first, last]` congruent to a member of `set`, whose squares
/// are strict members.
fn scan_chunk<T: Natural>(first: &T, last: &T, set: &ResidueSet, family: Family) -> (Vec<T>, u64) {
    let base = set.base;
    let (lo, hi) = family.digit_range(base).expect("checked by caller");
    let base_t = T::small(base);
    let modulus = T::word(set.modulus());
    let mut seen = vec![false; base as usize];
    let mut roots = Vec::new();
    let mut scanned = 0u64;

    // Walk blocks of `modulus` consecutive roots starting at a multiple.
    let mut block = first.clone() - first.clone() % modulus.clone();
    while block <= *last {
        for &r in &set.members {
            let m = block.clone() + T::word(r);
            if m < *first || m > *last {
                continue;
            }
            scanned += 1;
            let sq = m.clone() * m.clone();
            if is_strict_member(&sq, &base_t, lo, hi, &mut seen) {
                roots.push(m);
            }
        }
        block = block + modulus.clone();
    }
    (roots, scanned)
}

pub fn enumerate_strict_squares<T: Natural>(
    base: u32,
    family: Family,
    options: ScanOptions,
) -> Result<SquareScanResult<T>> {
    let set = aset(base)?;
    let (first, last) = root_range::<T>(base, family)?;
    let total = if last < first {
        0
    } else {
        (last.clone() - first.clone() + T::one())
            .to_u64()
            .ok_or(Error::Overflow)?
    };
    let empty = |scanned| SquareScanResult {
        base,
        family,
        roots: Vec::new(),
        count: 0,
        scanned,
        filtered: total - scanned,
    };
    if total == 0 || (set.is_empty() && options.short_circuit) {
        return Ok(empty(0));
    }
    if let Some(budget) = options.budget {
        let estimated = estimate_candidates::<T>(base, family)?;
        if estimated > budget {
            return Err(Error::ScanBudgetExceeded { estimated, budget });
        }
    }

    let chunks = total.div_ceil(CHUNK_ROOTS);
    let parts: Vec<(Vec<T>, u64)> = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let start = first.clone() + T::word(i * CHUNK_ROOTS);
            let end = (start.clone() + T::word(CHUNK_ROOTS - 1)).min(last.clone());
            scan_chunk(&start, &end, &set, family)
        })
        .collect();

    let mut roots = Vec::new();
    let mut scanned = 0;
    for (r, s) in parts {
        roots.extend(r);
        scanned += s;
    }
    Ok(SquareScanResult {
        base,
        family,
        count: roots.len() as u64,
        roots,
        scanned,
        filtered: total - scanned,
    })
}

pub fn count_strict_squares<T: Natural>(base: u32, family: Family, options: ScanOptions) -> Result<u64> {
    enumerate_strict_squares::<T>(base, family, options).map(|r| r.count)
}

/// Runs `enumerate_strict_squares` in the narrowest integer type that holds
/// the largest strict member's square root squared.
pub fn enumerate_auto(
    base: u32,
    family: Family,
    options: ScanOptions,
) -> Result<SquareScanResult<num_bigint::BigUint>> {
    fn widen<T: Natural>(r: SquareScanResult<T>) -> SquareScanResult<num_bigint::BigUint> {
        SquareScanResult {
            base: r.base,
            family: r.family,
            roots: r.roots.iter().map(Natural::to_big).collect(),
            count: r.count,
            scanned: r.scanned,
            filtered: r.filtered,
        }
    }
    match strict_value_range::<u64>(base, family) {
        Ok(_) => enumerate_strict_squares::<u64>(base, family, options).map(widen),
        Err(Error::Overflow) => match strict_value_range::<u128>(base, family) {
            Ok(_) => enumerate_strict_squares::<u128>(base, family, options).map(widen),
            Err(Error::Overflow) => enumerate_strict_squares(base, family, options),
            Err(e) => Err(e),
        },
        Err(e) => Err(e),
    }
}

/// Conjectured existence of strict squares: present exactly when `b` is even
/// or `v2(b-1)` is odd. `None` below the bases the conjecture covers
/// (`b > 4` for the full families, `b > 7` for the sub families).
pub fn predicted_existence(base: u32, family: Family) -> Option<bool> {
    let min_base = if family.is_sub() { 8 } else { 5 };
    if base < min_base {
        return None;
    }
    Some(base.is_multiple_of(2) || (base - 1).trailing_zeros() % 2 == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceRow {
    pub base: u32,
    pub family: Family,
    pub count: u64,
    pub predicted: Option<bool>,
    pub status: RowStatus,
}

/// Observed versus conjectured existence of strict squares. Reports, never
/// asserts.
pub fn conjecture_existence_report(
    bases: std::ops::RangeInclusive<u32>,
    family: Family,
    options: ScanOptions,
) -> Result<Vec<ExistenceRow>> {
    bases
        .map(|base| {
            let count = enumerate_auto(base, family, options)?.count;
            let predicted = predicted_existence(base, family);
            let status = match predicted {
                None => RowStatus::OutOfScope,
                Some(p) if p == (count > 0) => RowStatus::Match,
                Some(_) => RowStatus::Mismatch,
            };
            Ok(ExistenceRow {
                base,
                family,
                count,
                predicted,
                status,
            })
        })
        .collect()
}
