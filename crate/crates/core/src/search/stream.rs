//! Ascending enumeration of fixed-length family members.
//!
//! Every `k`-digit member of a family uses the family's digit range, each
//! digit at least once, plus `k - |range|` extra digits from the same range.
//! Each such digit multiset is walked in lexicographic order (which is
//! numeric order at fixed length), and the per-multiset walks are merged
//! through a min-heap.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;

use crate::digits::{value_of, Family};
use crate::error::{Error, Result};
use crate::natural::Natural;

/// Outcome of the digit-sum test on a multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prune {
    Keep,
    /// Every arrangement is a proper multiple of this divisor.
    Drop(u64),
}

/// Drops a multiset when `g = gcd(b-1, digit sum) > 1` and every arrangement
/// exceeds `g`: all arrangements are congruent to the digit sum modulo
/// `b-1`, hence all are divisible by `g`.
pub fn prune_multiset(base: u32, digits: &[u32]) -> Prune {
    if base < 3 || digits.is_empty() {
        return Prune::Keep;
    }
    let sum: u64 = digits.iter().map(|&d| d as u64).sum();
    let g = (base as u64 - 1).gcd(&sum);
    if g <= 1 {
        return Prune::Keep;
    }
    // With two or more digits and a nonzero lead, every arrangement is at
    // least b > b-1 >= g.
    let above = if digits.len() >= 2 {
        true
    } else {
        digits[0] as u64 > g
    };
    if above {
        Prune::Drop(g)
    } else {
        Prune::Keep
    }
}

/// All nondecreasing sequences of length `len` over `lo..=hi`, in
/// lexicographic order.
pub fn combinations_with_repetition(lo: u32, hi: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![lo; len];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..len).rev().find(|&i| cur[i] < hi) else {
            break;
        };
        let next = cur[i] + 1;
        for slot in &mut cur[i..] {
            *slot = next;
        }
    }
    out
}

/// Sorted digit multisets for `k`-digit members of `family`.
pub fn family_multisets(base: u32, family: Family, k: usize) -> Result<Vec<Vec<u32>>> {
    let (lo, hi) = family.check_defined(base)?;
    let required = (hi - lo + 1) as usize;
    if k < required {
        return Err(Error::DigitCountTooSmall {
            family: family.name(),
            min: required,
            k,
        });
    }
    Ok(combinations_with_repetition(lo, hi, k - required)
        .into_iter()
        .map(|extra| {
            let mut m: Vec<u32> = (lo..=hi).chain(extra).collect();
            m.sort_unstable();
            m
        })
        .collect())
}

/// In-place lexicographic successor; `false` once the last arrangement has
/// been reached.
fn next_permutation(digits: &mut [u32]) -> bool {
    let n = digits.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| digits[i] < digits[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| digits[j] > digits[i]).expect("pivot has a successor");
    digits.swap(i, j);
    digits[i + 1..].reverse();
    true
}

/// Smallest arrangement of a sorted multiset without a leading zero.
fn first_arrangement(sorted: &[u32]) -> Option<Vec<u32>> {
    if sorted.len() == 1 {
        return Some(sorted.to_vec());
    }
    let lead = sorted.iter().position(|&d| d != 0)?;
    let mut digits = Vec::with_capacity(sorted.len());
    digits.push(sorted[lead]);
    digits.extend(sorted.iter().enumerate().filter(|&(i, _)| i != lead).map(|(_, &d)| d));
    Some(digits)
}

/// Arrangements of one multiset, ascending.
#[derive(Debug, Clone)]
struct Arrangements {
    next: Option<Vec<u32>>,
}

impl Arrangements {
    fn take(&mut self) -> Option<Vec<u32>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(cur)
    }
}

/// Merged ascending stream of `k`-digit members of a family.
#[derive(Debug, Clone)]
pub struct CandidateStream<T: Natural> {
    base: u32,
    k: usize,
    sources: Vec<Arrangements>,
    heap: BinaryHeap<Reverse<(T, usize)>>,
    /// Pending head digits per source, aligned with the heap entries.
    heads: Vec<Option<Vec<u32>>>,
    pruned: u64,
}

impl<T: Natural> CandidateStream<T> {
    /// Every `k`-digit member of `family`, no pruning.
    pub fn new(base: u32, family: Family, k: usize) -> Result<Self> {
        Self::build(base, family, k, false)
    }

    /// Same as [`new`](Self::new) but skipping multisets that
    /// [`prune_multiset`] drops.
    pub fn pruned(base: u32, family: Family, k: usize) -> Result<Self> {
        Self::build(base, family, k, true)
    }

    fn build(base: u32, family: Family, k: usize, prune: bool) -> Result<Self> {
        let multisets = family_multisets(base, family, k)?;
        Self::check_width(base, k)?;
        let mut pruned = 0;
        let mut starts = Vec::new();
        for m in multisets {
            if prune && matches!(prune_multiset(base, &m), Prune::Drop(_)) {
                pruned += 1;
                continue;
            }
            if let Some(first) = first_arrangement(&m) {
                starts.push(first);
            }
        }
        let mut stream = Self::from_heads(base, k, starts)?;
        stream.pruned = pruned;
        Ok(stream)
    }

    /// Largest `k`-digit value must fit in `T`.
    fn check_width(base: u32, k: usize) -> Result<()> {
        value_of::<T>(base, &vec![base - 1; k]).map(|_| ())
    }

    /// Rebuilds a stream from the next arrangement of each live source.
    pub fn from_heads(base: u32, k: usize, heads: Vec<Vec<u32>>) -> Result<Self> {
        Self::check_width(base, k)?;
        let mut stream = CandidateStream {
            base,
            k,
            sources: Vec::with_capacity(heads.len()),
            heap: BinaryHeap::with_capacity(heads.len()),
            heads: Vec::with_capacity(heads.len()),
            pruned: 0,
        };
        for head in heads {
            if head.len() != k || head.iter().any(|&d| d >= base) || (k > 1 && head[0] == 0) {
                return Err(Error::BadState(format!("invalid cursor {head:?}")));
            }
            let mut src = Arrangements { next: Some(head) };
            let idx = stream.sources.len();
            let first = src.take().expect("just seeded");
            stream.heap.push(Reverse((value_of(base, &first)?, idx)));
            stream.heads.push(Some(first));
            stream.sources.push(src);
        }
        Ok(stream)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digit_count(&self) -> usize {
        self.k
    }

    /// Multisets skipped at construction.
    pub fn pruned_count(&self) -> u64 {
        self.pruned
    }

    /// Number of multisets still producing values.
    pub fn live_sources(&self) -> usize {
        self.heap.len()
    }

    /// Next value still to be yielded from every live source, enough to
    /// resume the stream with [`from_heads`](Self::from_heads).
    pub fn cursors(&self) -> Vec<Vec<u32>> {
        let mut live: Vec<(T, usize)> = self.heap.iter().map(|Reverse(e)| e.clone()).collect();
        live.sort();
        live.into_iter()
            .map(|(_, i)| self.heads[i].clone().expect("live source has a head"))
            .collect()
    }

    /// Next value together with its digits.
    pub fn next_with_digits(&mut self) -> Option<(T, Vec<u32>)> {
        let Reverse((value, idx)) = self.heap.pop()?;
        let digits = self.heads[idx].take().expect("live source has a head");
        if let Some(succ) = self.sources[idx].take() {
            let v = value_of(self.base, &succ).expect("width checked at construction");
            self.heads[idx] = Some(succ);
            self.heap.push(Reverse((v, idx)));
        }
        Some((value, digits))
    }
}

impl<T: Natural> Iterator for CandidateStream<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        self.next_with_digits().map(|(v, _)| v)
    }
}

/// Ascending stream of every `k`-digit number whose digits make it a (loose)
/// member of `family`.
pub fn candidate_stream<T: Natural>(base: u32, family: Family, k: usize) -> Result<CandidateStream<T>> {
    CandidateStream::new(base, family, k)
}
