//! OEIS b-files: parsing, writing, and comparison with computed values.
//!
//! A b-file holds one `index value` pair per line. Lines starting with `#`
//! and blank lines are ignored.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BfileError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: index {index} does not follow {previous}")]
    NonIncreasing { line: usize, index: i64, previous: i64 },
    #[error("no index is present in both sequences")]
    EmptyIntersection,
    #[error("{0} is empty")]
    Empty(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfileSeq {
    pub sequence_id: String,
    pub entries: Vec<(i64, BigUint)>,
}

impl BfileSeq {
    pub fn get(&self, index: i64) -> Option<&BigUint> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|at| &self.entries[at].1)
    }

    /// Writes the entries back in b-file form, with a header comment.
    pub fn serialize(&self) -> String {
        let mut out = format!("# {}\n", self.sequence_id);
        for (i, v) in &self.entries {
            out.push_str(&format!("{i} {v}\n"));
        }
        out
    }
}

pub fn parse_bfile(text: &str, sequence_id: &str) -> Result<BfileSeq, BfileError> {
    let mut entries: Vec<(i64, BigUint)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let malformed = |reason: String| BfileError::Malformed { line, reason };
        let (Some(idx), Some(val)) = (tokens.next(), tokens.next()) else {
            return Err(malformed("expected `index value`".into()));
        };
        if let Some(extra) = tokens.next() {
            return Err(malformed(format!("unexpected token {extra:?}")));
        }
        let index: i64 = idx
            .parse()
            .map_err(|_| malformed(format!("index {idx:?} is not an integer")))?;
        let value: BigUint = val
            .parse()
            .map_err(|_| malformed(format!("value {val:?} is not a nonnegative integer")))?;
        if let Some(&(previous, _)) = entries.last() {
            if index <= previous {
                return Err(BfileError::NonIncreasing { line, index, previous });
            }
        }
        entries.push((index, value));
    }
    Ok(BfileSeq {
        sequence_id: sequence_id.to_string(),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexDiff {
    pub index: i64,
    #[serde(with = "crate::serde_decimal")]
    pub computed: BigUint,
    #[serde(with = "crate::serde_decimal")]
    pub reference: BigUint,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub sequence_id: String,
    pub rows: Vec<IndexDiff>,
    pub matched: usize,
    pub mismatched: usize,
}

impl DiffReport {
    pub fn all_match(&self) -> bool {
        self.mismatched == 0
    }

    pub fn mismatched_indices(&self) -> Vec<i64> {
        self.rows.iter().filter(|r| !r.matches).map(|r| r.index).collect()
    }
}

/// Compares over the indices present in both.
pub fn compare(computed: &[(i64, BigUint)], reference: &BfileSeq) -> Result<DiffReport, BfileError> {
    if computed.is_empty() {
        return Err(BfileError::Empty("computed sequence"));
    }
    if reference.entries.is_empty() {
        return Err(BfileError::Empty("reference sequence"));
    }
    let ours: BTreeMap<i64, &BigUint> = computed.iter().map(|(i, v)| (*i, v)).collect();
    let rows: Vec<IndexDiff> = ours
        .iter()
        .filter_map(|(&index, &c)| {
            reference.get(index).map(|r| IndexDiff {
                index,
                computed: c.clone(),
                reference: r.clone(),
                matches: c == r,
            })
        })
        .collect();
    if rows.is_empty() {
        return Err(BfileError::EmptyIntersection);
    }
    let matched = rows.iter().filter(|r| r.matches).count();
    Ok(DiffReport {
        sequence_id: reference.sequence_id.clone(),
        mismatched: rows.len() - matched,
        matched,
        rows,
    })
}
