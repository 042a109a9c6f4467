//! Smallest primes per base and family.
//!
//! The search walks digit counts upward from the family's minimum and, at
//! each count, drains the ascending [`CandidateStream`] with multisets whose
//! digit sum forces a common divisor removed up front. The first candidate
//! that passes [`is_prime`] is the minimum.

mod bounds;
mod stream;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use bounds::{bound_pattern, lower_bound, BoundRule, BoundSpec, Fraction};
pub use stream::{
    candidate_stream, combinations_with_repetition, family_multisets, prune_multiset, CandidateStream,
    Prune,
};

use crate::digits::{DigitString, Family};
use crate::error::{Error, Result};
use crate::natural::Natural;
use crate::primality::{is_prime, PrimalityVerdict};

/// Default number of primality tests per invocation.
pub const DEFAULT_TEST_BUDGET: u64 = 100_000_000;

/// Candidates tested concurrently. The result does not depend on it.
pub const DEFAULT_BATCH: usize = 64;

pub const STATE_FORMAT: &str = "pandigital-search-state";
pub const STATE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SearchReport<T: Natural> {
    pub base: u32,
    pub family: Family,
    #[serde(with = "crate::serde_decimal")]
    pub smallest_prime: T,
    pub digits: DigitString,
    pub digit_sum: u64,
    pub verdict: PrimalityVerdict,
    pub candidates_tested: u64,
    pub multisets_pruned: u64,
    pub digit_length: usize,
}

/// Where an interrupted search picks up again.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchState {
    pub format: String,
    pub version: u32,
    pub base: u32,
    pub family: Family,
    /// Digit count being searched.
    pub k: usize,
    /// Next arrangement of each live multiset at `k`; `None` when `k` has
    /// not been started.
    pub cursors: Option<Vec<Vec<u32>>>,
    pub candidates_tested: u64,
    pub multisets_pruned: u64,
}

impl SearchState {
    pub fn fresh(base: u32, family: Family) -> Result<Self> {
        if base < 3 {
            return Err(Error::BaseTooSmall { base, min: 3 });
        }
        let k = family.check_defined(base).map(|(lo, hi)| (hi - lo + 1) as usize)?;
        Ok(SearchState {
            format: STATE_FORMAT.to_string(),
            version: STATE_VERSION,
            base,
            family,
            k,
            cursors: None,
            candidates_tested: 0,
            multisets_pruned: 0,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let state: SearchState =
            serde_json::from_str(text).map_err(|e| Error::BadState(e.to_string()))?;
        if state.format != STATE_FORMAT || state.version != STATE_VERSION {
            return Err(Error::BadState(format!(
                "unsupported format {} v{}",
                state.format, state.version
            )));
        }
        Ok(state)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Primality tests allowed in this run; `None` is unlimited.
    pub budget: Option<u64>,
    pub batch: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Some(DEFAULT_TEST_BUDGET),
            batch: DEFAULT_BATCH,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T: Natural> {
    Found(SearchReport<T>),
    BudgetExhausted(SearchState),
}

impl<T: Natural> SearchOutcome<T> {
    pub fn found(self) -> Option<SearchReport<T>> {
        match self {
            SearchOutcome::Found(r) => Some(r),
            SearchOutcome::BudgetExhausted(_) => None,
        }
    }
}

/// Continues `state` in type `T`. On [`Error::Overflow`] the returned state
/// is still valid and can be resumed in a wider type.
#[allow(clippy::result_large_err)]
pub fn resume<T: Natural>(
    state: SearchState,
    options: SearchOptions,
) -> std::result::Result<SearchOutcome<T>, (Error, SearchState)> {
    let mut state = state;
    let mut remaining = options.budget;
    let batch = options.batch.max(1);
    loop {
        let mut stream = match &state.cursors {
            None => match CandidateStream::<T>::pruned(state.base, state.family, state.k) {
                Ok(s) => {
                    state.multisets_pruned += s.pruned_count();
                    s
                }
                Err(e) => return Err((e, state)),
            },
            Some(heads) => match CandidateStream::<T>::from_heads(state.base, state.k, heads.clone()) {
                Ok(s) => s,
                Err(e) => return Err((e, state)),
            },
        };

        loop {
            let take = match remaining {
                Some(0) => {
                    state.cursors = Some(stream.cursors());
                    return Ok(SearchOutcome::BudgetExhausted(state));
                }
                Some(r) => batch.min(usize::try_from(r).unwrap_or(usize::MAX)),
                None => batch,
            };
            let chunk: Vec<(T, Vec<u32>)> = stream.by_ref_with_digits().take(take).collect();
            if chunk.is_empty() {
                break;
            }
            let hit = chunk
                .par_iter()
                .map(|(n, _)| is_prime(n))
                .enumerate()
                .find_first(|(_, v)| v.passes());
            match hit {
                Some((i, verdict)) => {
                    state.candidates_tested += i as u64 + 1;
                    let (value, digits) = chunk.into_iter().nth(i).expect("index in chunk");
                    let digits = DigitString::new(state.base, digits).expect("stream digits are valid");
                    return Ok(SearchOutcome::Found(SearchReport {
                        base: state.base,
                        family: state.family,
                        smallest_prime: value,
                        digit_sum: digits.digit_sum(),
                        digit_length: digits.len(),
                        digits,
                        verdict,
                        candidates_tested: state.candidates_tested,
                        multisets_pruned: state.multisets_pruned,
                    }));
                }
                None => {
                    state.candidates_tested += chunk.len() as u64;
                    if let Some(r) = remaining.as_mut() {
                        *r -= chunk.len() as u64;
                    }
                }
            }
        }
        state.k += 1;
        state.cursors = None;
    }
}

/// Smallest prime (loose) member of `family` in base `b >= 3`.
pub fn smallest_prime<T: Natural>(base: u32, family: Family, options: SearchOptions) -> Result<SearchOutcome<T>> {
    resume(SearchState::fresh(base, family)?, options).map_err(|(e, _)| e)
}

/// Like [`resume`], widening from `u64` through `u128` to [`BigUint`] as
/// digit counts grow.
pub fn resume_auto(state: SearchState, options: SearchOptions) -> Result<SearchOutcome<BigUint>> {
    fn widen<T: Natural>(o: SearchOutcome<T>) -> SearchOutcome<BigUint> {
        match o {
            SearchOutcome::Found(r) => SearchOutcome::Found(SearchReport {
                base: r.base,
                family: r.family,
                smallest_prime: r.smallest_prime.to_big(),
                digits: r.digits,
                digit_sum: r.digit_sum,
                verdict: r.verdict,
                candidates_tested: r.candidates_tested,
                multisets_pruned: r.multisets_pruned,
                digit_length: r.digit_length,
            }),
            SearchOutcome::BudgetExhausted(s) => SearchOutcome::BudgetExhausted(s),
        }
    }
    // Budget is per run, so what the narrow pass spent is charged to the
    // wider pass.
    let spent = |before: &SearchState, after: &SearchState| after.candidates_tested - before.candidates_tested;
    let start = state.clone();
    match resume::<u64>(state, options) {
        Ok(o) => Ok(widen(o)),
        Err((Error::Overflow, s)) => {
            let opts = shrink(options, spent(&start, &s));
            let mid = s.clone();
            match resume::<u128>(s, opts) {
                Ok(o) => Ok(widen(o)),
                Err((Error::Overflow, s)) => {
                    let opts = shrink(opts, spent(&mid, &s));
                    resume::<BigUint>(s, opts).map_err(|(e, _)| e)
                }
                Err((e, _)) => Err(e),
            }
        }
        Err((e, _)) => Err(e),
    }
}

fn shrink(options: SearchOptions, spent: u64) -> SearchOptions {
    SearchOptions {
        budget: options.budget.map(|b| b.saturating_sub(spent)),
        ..options
    }
}

pub fn smallest_prime_auto(base: u32, family: Family, options: SearchOptions) -> Result<SearchOutcome<BigUint>> {
    resume_auto(SearchState::fresh(base, family)?, options)
}

impl<T: Natural> CandidateStream<T> {
    fn by_ref_with_digits(&mut self) -> impl Iterator<Item = (T, Vec<u32>)> + '_ {
        std::iter::from_fn(move || self.next_with_digits())
    }
}

/// Sum of the family's digit range, i.e. the digit sum of strict members.
pub fn strict_digit_sum(base: u32, family: Family) -> Option<u64> {
    family
        .digit_range(base)
        .map(|(lo, hi)| (lo as u64..=hi as u64).sum())
}

/// Conjectured digit sum of the smallest prime: one above the strict sum,
/// two above for `b = 4k+3`. `None` outside the bases the conjecture covers
/// (`b > 3` for the full families, `b > 4` for the sub families).
pub fn predicted_digit_sum(base: u32, family: Family) -> Option<u64> {
    let min_base = if family.is_sub() { 5 } else { 4 };
    if base < min_base {
        return None;
    }
    let extra = if base % 4 == 3 { 2 } else { 1 };
    strict_digit_sum(base, family).map(|s| s + extra)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    Mismatch,
    OutOfScope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitSumRow {
    pub base: u32,
    pub family: Family,
    #[serde(with = "crate::serde_decimal")]
    pub smallest_prime: BigUint,
    pub digits: String,
    pub digit_sum: u64,
    pub predicted: Option<u64>,
    pub status: RowStatus,
}

/// Found versus conjectured digit sums of smallest primes. Reports, never
/// asserts.
pub fn conjecture_digit_sum_report(
    bases: std::ops::RangeInclusive<u32>,
    family: Family,
    options: SearchOptions,
) -> Result<Vec<DigitSumRow>> {
    let mut rows = Vec::new();
    for base in bases {
        let report = match smallest_prime_auto(base, family, options)? {
            SearchOutcome::Found(r) => r,
            SearchOutcome::BudgetExhausted(s) => {
                return Err(Error::BadState(format!(
                    "budget exhausted at base {} after {} tests",
                    s.base, s.candidates_tested
                )))
            }
        };
        let predicted = predicted_digit_sum(base, family);
        let status = match predicted {
            None => RowStatus::OutOfScope,
            Some(p) if p == report.digit_sum => RowStatus::Match,
            Some(_) => RowStatus::Mismatch,
        };
        rows.push(DigitSumRow {
            base,
            family,
            digits: report.digits.render(),
            smallest_prime: report.smallest_prime,
            digit_sum: report.digit_sum,
            predicted,
            status,
        });
    }
    Ok(rows)
}
