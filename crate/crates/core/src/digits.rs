//! Positional base-b representation, digit sums and digit-class predicates.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::natural::Natural;

/// The four digit families. Each one admits a contiguous range of digits and
/// requires every digit of that range to appear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Pandigital,
    Penholodigital,
    Subpandigital,
    Subpenholodigital,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Pandigital,
        Family::Penholodigital,
        Family::Subpandigital,
        Family::Subpenholodigital,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Pandigital => "pandigital",
            Family::Penholodigital => "penholodigital",
            Family::Subpandigital => "subpandigital",
            Family::Subpenholodigital => "subpenholodigital",
        }
    }

    /// True for the two families that exclude the digit `b-1`.
    pub fn is_sub(self) -> bool {
        matches!(self, Family::Subpandigital | Family::Subpenholodigital)
    }

    /// Inclusive range `(lo, hi)` of digits a member may use. Every digit in
    /// the range must occur at least once. `None` when the range is empty.
    pub fn digit_range(self, base: u32) -> Option<(u32, u32)> {
        let lo = match self {
            Family::Pandigital | Family::Subpandigital => 0,
            Family::Penholodigital | Family::Subpenholodigital => 1,
        };
        let hi = if self.is_sub() {
            base.checked_sub(2)?
        } else {
            base - 1
        };
        (lo <= hi).then_some((lo, hi))
    }

    /// Size of the required digit set, i.e. the length of strict members.
    pub fn required_len(self, base: u32) -> Option<usize> {
        self.digit_range(base).map(|(lo, hi)| (hi - lo + 1) as usize)
    }

    pub(crate) fn check_defined(self, base: u32) -> Result<(u32, u32)> {
        if base < 2 {
            return Err(Error::BaseTooSmall { base, min: 2 });
        }
        self.digit_range(base).ok_or(Error::FamilyUndefined {
            family: self.name(),
            base,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DigitClass {
    pub family: Family,
    pub strict: bool,
}

impl DigitClass {
    pub fn strict(family: Family) -> Self {
        DigitClass { family, strict: true }
    }

    pub fn loose(family: Family) -> Self {
        DigitClass { family, strict: false }
    }
}

impl fmt::Display for DigitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.strict { "strict" } else { "loose" };
        write!(f, "{} ({kind})", self.family)
    }
}

/// How digit strings are written out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderMode {
    /// Alphanumeric up to base 36, dotted above.
    #[default]
    Auto,
    /// `0-9` then `a-z`.
    Alphanumeric,
    /// Decimal digits joined by `.`, e.g. `1.0.12.3`.
    Dotted,
}

/// A base together with its digits, most significant first.
///
/// Leading zeros are unrepresentable: the only string starting with `0` is
/// `[0]` itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitString {
    base: u32,
    digits: Vec<u32>,
}

impl DigitString {
    pub fn new(base: u32, digits: Vec<u32>) -> Result<Self> {
        if base < 2 {
            return Err(Error::BaseTooSmall { base, min: 2 });
        }
        if digits.is_empty() {
            return Err(Error::EmptyDigits);
        }
        if let Some(&digit) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::DigitOutOfRange { digit, base });
        }
        if digits.len() > 1 && digits[0] == 0 {
            return Err(Error::LeadingZero);
        }
        Ok(DigitString { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value<T: Natural>(&self) -> Result<T> {
        from_digits(self)
    }

    pub fn digit_sum(&self) -> u64 {
        digit_sum(self)
    }

    pub fn classify(&self) -> BTreeSet<DigitClass> {
        classify(self)
    }

    pub fn render(&self) -> String {
        render(self, RenderMode::Auto).expect("auto mode always renders")
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn to_digits<T: Natural>(n: &T, base: u32) -> Result<DigitString> {
    if base < 2 {
        return Err(Error::BaseTooSmall { base, min: 2 });
    }
    if n.is_zero() {
        return Ok(DigitString { base, digits: vec![0] });
    }
    let b = T::small(base);
    let mut rest = n.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&b);
        digits.push(r.to_u32().expect("remainder below base"));
        rest = q;
    }
    digits.reverse();
    Ok(DigitString { base, digits })
}

/// Evaluates the digits; fails only if the value overflows `T`.
pub fn from_digits<T: Natural>(ds: &DigitString) -> Result<T> {
    value_of(ds.base, &ds.digits)
}

/// Horner evaluation of a raw digit slice. Digits are assumed in range.
pub(crate) fn value_of<T: Natural>(base: u32, digits: &[u32]) -> Result<T> {
    let b = T::small(base);
    let mut acc = T::zero();
    for &d in digits {
        acc = acc
            .checked_mul(&b)
            .and_then(|v| v.checked_add(&T::small(d)))
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

pub fn digit_sum(ds: &DigitString) -> u64 {
    ds.digits.iter().map(|&d| d as u64).sum()
}

/// Every label whose predicate holds for `ds`.
pub fn classify(ds: &DigitString) -> BTreeSet<DigitClass> {
    let mut counts = vec![0usize; ds.base as usize];
    for &d in &ds.digits {
        counts[d as usize] += 1;
    }
    let mut out = BTreeSet::new();
    for family in Family::ALL {
        let Some((lo, hi)) = family.digit_range(ds.base) else {
            continue;
        };
        let inside = |d: usize| (lo as usize..=hi as usize).contains(&d);
        let fits = counts
            .iter()
            .enumerate()
            .all(|(d, &c)| if inside(d) { c >= 1 } else { c == 0 });
        if fits {
            out.insert(DigitClass::loose(family));
            if counts.iter().all(|&c| c <= 1) {
                out.insert(DigitClass::strict(family));
            }
        }
    }
    out
}

const ALPHABET: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

pub fn render(ds: &DigitString, mode: RenderMode) -> Result<String> {
    let dotted = match mode {
        RenderMode::Auto => ds.base > 36,
        RenderMode::Dotted => true,
        RenderMode::Alphanumeric if ds.base > 36 => return Err(Error::AlphabetTooSmall(ds.base)),
        RenderMode::Alphanumeric => false,
    };
    if dotted {
        let parts: Vec<String> = ds.digits.iter().map(u32::to_string).collect();
        Ok(parts.join("."))
    } else {
        Ok(ds.digits.iter().map(|&d| ALPHABET[d as usize] as char).collect())
    }
}

/// Inverse of [`render`]. Dotted text is recognised by the presence of `.`,
/// and is the only accepted form above base 36.
pub fn parse(text: &str, base: u32) -> Result<DigitString> {
    if base < 2 {
        return Err(Error::BaseTooSmall { base, min: 2 });
    }
    let digits = if base > 36 || text.contains('.') {
        let mut digits = Vec::new();
        let mut pos = 0;
        for part in text.split('.') {
            if part.is_empty() {
                return Err(Error::InvalidChar { ch: '.', pos: pos.max(1) - 1 });
            }
            if let Some((i, ch)) = part.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
                return Err(Error::InvalidChar { ch, pos: pos + i });
            }
            let digit: u32 = part
                .parse()
                .map_err(|_| Error::DigitOutOfRange { digit: u32::MAX, base })?;
            digits.push(digit);
            pos += part.len() + 1;
        }
        digits
    } else {
        text.chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                '0'..='9' => Ok(ch as u32 - '0' as u32),
                'a'..='z' => Ok(ch as u32 - 'a' as u32 + 10),
                _ => Err(Error::InvalidChar { ch, pos }),
            })
            .collect::<Result<Vec<_>>>()?
    };
    DigitString::new(base, digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(n: u64, b: u32) -> DigitString {
        to_digits(&n, b).unwrap()
    }

    #[test]
    fn to_digits_examples() {
        assert_eq!(ds(0, 10).digits(), &[0]);
        assert_eq!(ds(37, 4).digits(), &[2, 1, 1]);
        assert_eq!(
            ds(68_057_976_031, 12).digits(),
            &[1, 1, 2, 3, 4, 5, 8, 10, 9, 6, 7]
        );
        assert_eq!(to_digits(&5u64, 1), Err(Error::BaseTooSmall { base: 1, min: 2 }));
    }

    #[test]
    fn from_digits_examples() {
        let v = |b, d: &[u32]| from_digits::<u64>(&DigitString::new(b, d.to_vec()).unwrap()).unwrap();
        assert_eq!(v(2, &[1, 0]), 2);
        assert_eq!(v(4, &[2, 1, 1]), 37);
        assert_eq!(v(10, &[1, 0, 2, 3, 4, 5, 6, 7, 9, 8]), 1_023_456_798);
        assert_eq!(
            DigitString::new(10, vec![1, 10]),
            Err(Error::DigitOutOfRange { digit: 10, base: 10 })
        );
        assert_eq!(DigitString::new(10, vec![0, 1]), Err(Error::LeadingZero));
    }

    #[test]
    fn from_digits_overflow() {
        let ds = DigitString::new(10, vec![9; 25]).unwrap();
        assert_eq!(from_digits::<u64>(&ds), Err(Error::Overflow));
        assert!(from_digits::<u128>(&ds).is_ok());
    }

    #[test]
    fn digit_sum_examples() {
        assert_eq!(ds(1_023_456_798, 10).digit_sum(), 45);
        assert_eq!(ds(123_456_798, 10).digit_sum(), 45);
        assert_eq!(ds(112_345_687, 10).digit_sum(), 37);
    }

    #[test]
    fn classify_examples() {
        use Family::*;
        let set = |v: &[DigitClass]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(
            ds(1_023_456_798, 10).classify(),
            set(&[DigitClass::strict(Pandigital), DigitClass::loose(Pandigital)])
        );
        assert_eq!(ds(10_023_546_789, 10).classify(), set(&[DigitClass::loose(Pandigital)]));
        assert_eq!(
            ds(1_323_546_789, 10).classify(),
            set(&[DigitClass::loose(Penholodigital)])
        );
        assert_eq!(
            ds(120_345_687, 10).classify(),
            set(&[DigitClass::strict(Subpandigital), DigitClass::loose(Subpandigital)])
        );
        assert_eq!(
            ds(87_654_123, 10).classify(),
            set(&[
                DigitClass::strict(Subpenholodigital),
                DigitClass::loose(Subpenholodigital)
            ])
        );
        assert!(ds(12_345, 10).classify().is_empty());
    }

    #[test]
    fn degenerate_small_bases() {
        use Family::*;
        // 0 is the only subpandigital number in base 2.
        assert!(ds(0, 2).classify().contains(&DigitClass::strict(Subpandigital)));
        assert!(!ds(1, 2).classify().contains(&DigitClass::loose(Subpandigital)));
        assert!(ds(1, 2).classify().contains(&DigitClass::strict(Penholodigital)));
        assert!(ds(7, 2).classify().contains(&DigitClass::loose(Penholodigital)));
        assert!(ds(4, 3).classify().contains(&DigitClass::loose(Subpenholodigital)));
        assert_eq!(Subpenholodigital.digit_range(2), None);
    }

    #[test]
    fn render_examples() {
        assert_eq!(ds(749_149_003_087, 12).render(), "10123459a867");
        assert_eq!(ds(5_455_573, 9).render(), "11234567");
        let d = DigitString::new(13, vec![1, 0, 12, 3]).unwrap();
        assert_eq!(render(&d, RenderMode::Dotted).unwrap(), "1.0.12.3");
        assert_eq!(render(&d, RenderMode::Alphanumeric).unwrap(), "10c3");
        assert_eq!(parse("1.0.12.3", 13).unwrap(), d);
        assert_eq!(parse("10c3", 13).unwrap(), d);
        let wide = DigitString::new(40, vec![39, 0, 7]).unwrap();
        assert_eq!(wide.render(), "39.0.7");
        assert_eq!(render(&wide, RenderMode::Alphanumeric), Err(Error::AlphabetTooSmall(40)));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse("1x", 10), Err(Error::DigitOutOfRange { digit: 33, base: 10 }));
        assert_eq!(parse("1A", 16), Err(Error::InvalidChar { ch: 'A', pos: 1 }));
        assert_eq!(parse("1-", 10), Err(Error::InvalidChar { ch: '-', pos: 1 }));
        assert_eq!(parse("12", 2), Err(Error::DigitOutOfRange { digit: 2, base: 2 }));
        assert_eq!(parse("1..2", 40), Err(Error::InvalidChar { ch: '.', pos: 1 }));
        assert_eq!(parse("", 10), Err(Error::EmptyDigits));
        assert_eq!(parse("012", 10), Err(Error::LeadingZero));
    }

    #[test]
    fn family_parse() {
        assert_eq!("Subpandigital".parse::<Family>(), Ok(Family::Subpandigital));
        assert!("hexadigital".parse::<Family>().is_err());
    }
}
