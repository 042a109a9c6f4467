//! Primality decisions with an explicit certainty contract.
//!
//! * `n < 10^6`: trial division, exact.
//! * `n < 2^64`: deterministic Miller-Rabin, exact.
//! * otherwise: Baillie-PSW. Passing values are reported as
//!   [`Classification::ProbablePrime`]; failures carry a [`CompositeWitness`]
//!   that [`verify_witness`] re-checks independently.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::natural::Natural;

/// Below this bound verdicts come from trial division.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Jim Sinclair's seven bases; strong pseudoprime tests to all of them are
/// exact for every `n < 2^64` (verified exhaustively against the Feitsma
/// base-2 pseudoprime list).
pub const MR64_WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Prime,
    Composite,
    ProbablePrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TrialDivision,
    DeterministicMr,
    Bpsw,
}

/// Evidence that a large `n` is composite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CompositeWitness {
    SmallFactor { factor: u64 },
    /// `n` fails the strong probable-prime test to this base.
    StrongBase { base: u64 },
    PerfectSquare,
    /// `gcd(|d|, n)` is a proper factor, found while selecting `d`.
    SharedFactor { d: i64 },
    /// `n` fails the strong Lucas test with `P = 1`, `Q = (1 - d)/4`.
    Lucas { d: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimalityVerdict {
    pub classification: Classification,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<CompositeWitness>,
}

impl PrimalityVerdict {
    fn exact(prime: bool, method: Method) -> Self {
        PrimalityVerdict {
            classification: if prime {
                Classification::Prime
            } else {
                Classification::Composite
            },
            method,
            witness: None,
        }
    }

    /// Prime or probable prime.
    pub fn passes(&self) -> bool {
        self.classification != Classification::Composite
    }

    pub fn label(&self) -> &'static str {
        match self.classification {
            Classification::Prime => "prime",
            Classification::Composite => "composite",
            Classification::ProbablePrime => "probable-prime",
        }
    }
}

pub fn is_prime<T: Natural>(n: &T) -> PrimalityVerdict {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => {
            let big = n.to_big();
            match bpsw(&big) {
                None => PrimalityVerdict {
                    classification: Classification::ProbablePrime,
                    method: Method::Bpsw,
                    witness: None,
                },
                Some(w) => PrimalityVerdict {
                    classification: Classification::Composite,
                    method: Method::Bpsw,
                    witness: Some(w),
                },
            }
        }
    }
}

pub fn is_prime_u64(n: u64) -> PrimalityVerdict {
    if n < TRIAL_DIVISION_LIMIT {
        return PrimalityVerdict::exact(trial_division(n), Method::TrialDivision);
    }
    for p in SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return PrimalityVerdict::exact(false, Method::DeterministicMr);
        }
    }
    PrimalityVerdict::exact(miller_rabin_u64(n), Method::DeterministicMr)
}

fn trial_division(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic for odd `n > 2` below `2^64`.
pub fn miller_rabin_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR64_WITNESSES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Modular arithmetic over a [`Natural`]; `T` must hold `(n-1)^2`.
struct Modulus<T: Natural> {
    n: T,
}

impl<T: Natural> Modulus<T> {
    fn mul(&self, a: &T, b: &T) -> T {
        (a.clone() * b.clone()) % self.n.clone()
    }

    fn add(&self, a: &T, b: &T) -> T {
        (a.clone() + b.clone()) % self.n.clone()
    }

    fn sub(&self, a: &T, b: &T) -> T {
        if a >= b {
            a.clone() - b.clone()
        } else {
            self.n.clone() - (b.clone() - a.clone())
        }
    }

    fn half(&self, a: &T) -> T {
        if a.is_even() {
            a.clone() >> 1
        } else {
            (a.clone() + self.n.clone()) >> 1
        }
    }

    /// Reduces a signed machine integer.
    fn signed(&self, v: i64) -> T {
        let r = T::word(v.unsigned_abs()) % self.n.clone();
        if v < 0 && !r.is_zero() {
            self.n.clone() - r
        } else {
            r
        }
    }

    fn pow(&self, base: &T, exp: &T) -> T {
        let mut acc = T::one() % self.n.clone();
        let mut b = base.clone() % self.n.clone();
        let mut e = exp.clone();
        while !e.is_zero() {
            if e.is_odd() {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e = e >> 1;
        }
        acc
    }
}

fn bits_of<T: Natural>(v: &T) -> Vec<bool> {
    let mut bits = Vec::new();
    let mut rest = v.clone();
    while !rest.is_zero() {
        bits.push(rest.is_odd());
        rest = rest >> 1;
    }
    bits.reverse();
    bits
}

/// Strong probable-prime test to `base` for odd `n > 2`.
pub fn strong_probable_prime<T: Natural>(n: &T, base: u64) -> bool {
    let md = Modulus { n: n.clone() };
    let one = T::one();
    let n_minus_1 = n.clone() - one.clone();
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d = d >> 1;
        s += 1;
    }
    let a = T::word(base) % n.clone();
    if a.is_zero() {
        return true;
    }
    let mut x = md.pow(&a, &d);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = md.mul(&x, &x);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
pub fn jacobi<T: Natural>(a: &T, n: &T) -> i32 {
    let eight = T::small(8);
    let mut a = a.clone() % n.clone();
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        while a.is_even() {
            a = a >> 1;
            let r = (n.clone() % eight.clone()).to_u32().unwrap_or(0);
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        let three = T::small(3);
        if a.clone() % T::small(4) == three && n.clone() % T::small(4) == three {
            result = -result;
        }
        a = a % n.clone();
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Selfridge's method A: first `d` in `5, -7, 9, -11, ...` with
/// `(d / n) = -1`. `Err` carries a `d` sharing a proper factor with `n`.
fn selfridge_d<T: Natural>(n: &T) -> Result<i64, i64> {
    let md = Modulus { n: n.clone() };
    let mut d: i64 = 5;
    loop {
        let j = jacobi(&md.signed(d), n);
        if j == -1 {
            return Ok(d);
        }
        if j == 0 && T::word(d.unsigned_abs()) != *n {
            return Err(d);
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters, for odd
/// non-square `n` and a `d` with `(d / n) = -1`.
pub fn strong_lucas<T: Natural>(n: &T, d: i64) -> bool {
    let md = Modulus { n: n.clone() };
    let dm = md.signed(d);
    let q = md.signed((1 - d) / 4);
    let two = T::small(2) % n.clone();

    let mut k = n.clone() + T::one();
    let mut s = 0u32;
    while k.is_even() {
        k = k >> 1;
        s += 1;
    }

    // Ladder over the bits of k, starting at index 1: U_1 = 1, V_1 = P = 1.
    let bits = bits_of(&k);
    let mut u = T::one();
    let mut v = T::one();
    let mut qk = q.clone();
    for &bit in &bits[1..] {
        u = md.mul(&u, &v);
        v = md.sub(&md.mul(&v, &v), &md.mul(&two, &qk));
        qk = md.mul(&qk, &qk);
        if bit {
            let nu = md.half(&md.add(&u, &v));
            let nv = md.half(&md.add(&md.mul(&dm, &u), &v));
            u = nu;
            v = nv;
            qk = md.mul(&qk, &q);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = md.sub(&md.mul(&v, &v), &md.mul(&two, &qk));
        if v.is_zero() {
            return true;
        }
        qk = md.mul(&qk, &qk);
    }
    false
}

/// Baillie-PSW. `None` means probable prime. `T` must hold `n^2`, so pass
/// `u128` for 64-bit inputs and `BigUint` beyond.
pub fn bpsw<T: Natural>(n: &T) -> Option<CompositeWitness> {
    if *n < T::small(2) {
        return Some(CompositeWitness::SmallFactor { factor: 1 });
    }
    for p in SMALL_PRIMES {
        let pt = T::word(p);
        if *n == pt {
            return None;
        }
        if (n.clone() % pt).is_zero() {
            return Some(CompositeWitness::SmallFactor { factor: p });
        }
    }
    if !strong_probable_prime(n, 2) {
        return Some(CompositeWitness::StrongBase { base: 2 });
    }
    let r = n.sqrt();
    if r.clone() * r == *n {
        return Some(CompositeWitness::PerfectSquare);
    }
    match selfridge_d(n) {
        Err(d) => Some(CompositeWitness::SharedFactor { d }),
        Ok(d) if !strong_lucas(n, d) => Some(CompositeWitness::Lucas { d }),
        Ok(_) => None,
    }
}

/// Re-checks a composite witness from scratch.
pub fn verify_witness(n: &BigUint, witness: &CompositeWitness) -> bool {
    match *witness {
        CompositeWitness::SmallFactor { factor } => {
            factor == 1 && *n < BigUint::from(2u32)
                || factor > 1 && BigUint::from(factor) != *n && (n % factor).is_zero()
        }
        CompositeWitness::StrongBase { base } => {
            num_integer::Integer::is_odd(n) && !strong_probable_prime(n, base)
        }
        CompositeWitness::PerfectSquare => {
            let r = num_integer::Roots::sqrt(n);
            &r * &r == *n && !r.is_one()
        }
        CompositeWitness::SharedFactor { d } => {
            let g = num_integer::Integer::gcd(&BigUint::from(d.unsigned_abs()), n);
            !g.is_one() && g != *n
        }
        CompositeWitness::Lucas { d } => {
            let md = Modulus { n: n.clone() };
            jacobi(&md.signed(d), n) == -1 && !strong_lucas(n, d)
        }
    }
}
