//! Lower bounds for primes in each family.
//!
//! Any arrangement of a family's required digits alone has digit sum `S`
//! with `gcd(S, b-1) > 1` once `b > 3`, so a prime needs at least one extra
//! digit and the cheapest extra is a `1`. For `b = 4k+3` the sum `S+1` is
//! even while `b-1` is even too, so the extra digit must be at least `2`.
//! The bound is the smallest arrangement of that digit multiset.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::digits::{DigitString, Family};
use crate::error::{Error, Result};

/// Which extra digit the bound pattern carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundRule {
    /// Digit sum one above the strict sum: pattern `10123...` / `1123...`.
    ExtraOne,
    /// `b = 4k+3`: digit sum two above, pattern `10223...` / `1223...`.
    ExtraTwo,
}

impl BoundRule {
    pub fn for_base(base: u32) -> Self {
        if base % 4 == 3 {
            BoundRule::ExtraTwo
        } else {
            BoundRule::ExtraOne
        }
    }

    pub fn extra_digit(self) -> u32 {
        match self {
            BoundRule::ExtraOne => 1,
            BoundRule::ExtraTwo => 2,
        }
    }
}

/// An exact fraction, kept unreduced as the closed form writes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    #[serde(with = "crate::serde_decimal")]
    pub numerator: BigUint,
    #[serde(with = "crate::serde_decimal")]
    pub denominator: BigUint,
}

impl Fraction {
    pub fn is_integral(&self) -> bool {
        (&self.numerator % &self.denominator).is_zero()
    }

    pub fn floor(&self) -> BigUint {
        &self.numerator / &self.denominator
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSpec {
    pub base: u32,
    pub family: Family,
    #[serde(with = "crate::serde_decimal")]
    pub bound_value: BigUint,
    pub bound_digits: DigitString,
    pub rule: BoundRule,
    /// Closed form of the pattern's value; always equals `bound_value`.
    #[serde(with = "crate::serde_decimal")]
    pub closed_form: BigUint,
    /// The published closed form, as a single fraction.
    pub published_form: Fraction,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub warning: Option<String>,
}

/// Pattern digits: a leading `1`, then the family's digits in ascending
/// order with `extra` inserted and one `1` removed.
pub fn bound_pattern(base: u32, family: Family, rule: BoundRule) -> Result<DigitString> {
    let (lo, hi) = family.check_defined(base)?;
    let mut tail: Vec<u32> = (lo..=hi).collect();
    let extra = rule.extra_digit();
    let at = tail.partition_point(|&d| d <= extra);
    tail.insert(at, extra);
    let one = tail.iter().position(|&d| d == 1).expect("families contain 1");
    tail.remove(one);
    let mut digits = vec![1];
    digits.extend(tail);
    DigitString::new(base, digits)
}

fn pow(base: u32, exp: u32) -> BigUint {
    BigUint::from(base).pow(exp)
}

/// `(b^(n+1) - (n+1)b + n) / (b-1)^2`: the value of the digits `0, 1, ..., n`
/// written in base `b`.
fn ascending_run(base: u32, top: u32) -> BigUint {
    let b = BigUint::from(base);
    let num = pow(base, top + 1) + BigUint::from(top) - &b * (top + 1);
    let den = BigUint::from(base - 1).pow(2);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Powers of `b` that turn the run `0..top` into the pattern: the leading
/// `1`, plus the bump from `1` to `2` under [`BoundRule::ExtraTwo`].
fn leading_terms(base: u32, family: Family, rule: BoundRule) -> BigUint {
    let sub = family.is_sub() as u32;
    let holo = matches!(family, Family::Penholodigital | Family::Subpenholodigital);
    // Pattern length minus one, for the pandigital shapes.
    let top = base - sub;
    let mut terms = if holo { pow(base, top - 1) } else { pow(base, top) };
    if rule == BoundRule::ExtraTwo {
        terms += pow(base, base - 2 - sub);
    }
    terms
}

fn published_form(base: u32, family: Family, rule: BoundRule) -> Fraction {
    let den = BigUint::from(base - 1).pow(2);
    let b = BigUint::from(base);
    let num = if family.is_sub() {
        pow(base, base - 1) - &b
    } else {
        pow(base, base) + BigUint::from(base - 1) - &b * &b
    };
    let terms = leading_terms(base, family, rule);
    Fraction {
        numerator: num + &den * terms,
        denominator: den,
    }
}

pub fn lower_bound(base: u32, family: Family) -> Result<BoundSpec> {
    if base <= 3 {
        return Err(Error::BaseTooSmall { base, min: 4 });
    }
    let rule = BoundRule::for_base(base);
    let bound_digits = bound_pattern(base, family, rule)?;
    let bound_value: BigUint = bound_digits.value()?;

    let top = if family.is_sub() { base - 2 } else { base - 1 };
    let closed_form = ascending_run(base, top) + leading_terms(base, family, rule);
    let published_form = published_form(base, family, rule);

    let warning = if !published_form.is_integral() {
        Some(format!(
            "published closed form {}/{} is not an integer; the digit pattern value {} is used",
            published_form.numerator, published_form.denominator, bound_value
        ))
    } else if published_form.floor() != bound_value {
        Some(format!(
            "published closed form evaluates to {}, digit pattern gives {}",
            published_form.floor(),
            bound_value
        ))
    } else {
        None
    };

    Ok(BoundSpec {
        base,
        family,
        bound_value,
        bound_digits,
        rule,
        closed_form,
        published_form,
        warning,
    })
}

impl BoundSpec {
    pub fn is_respected_by(&self, n: &BigUint) -> bool {
        *n >= self.bound_value
    }
}
