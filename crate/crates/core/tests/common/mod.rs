//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's digit, residue or primality code.

#![allow(dead_code)]

use pandigital::Family;

pub fn digits_of(mut n: u128, base: u32) -> Vec<u32> {
    if n == 0 {
        return vec![0];
    }
    let b = base as u128;
    let mut out = Vec::new();
    while n > 0 {
        out.push((n % b) as u32);
        n /= b;
    }
    out.reverse();
    out
}

fn digit_bounds(base: u32, family: Family) -> (u32, u32) {
    match family {
        Family::Pandigital => (0, base - 1),
        Family::Penholodigital => (1, base - 1),
        Family::Subpandigital => (0, base - 2),
        Family::Subpenholodigital => (1, base - 2),
    }
}

/// Every digit of the family's range occurs and nothing else does.
pub fn is_loose_member(n: u128, base: u32, family: Family) -> bool {
    let (lo, hi) = digit_bounds(base, family);
    let mut seen = vec![0u32; base as usize];
    for d in digits_of(n, base) {
        seen[d as usize] += 1;
    }
    (0..base).all(|d| {
        let inside = (lo..=hi).contains(&d);
        (seen[d as usize] > 0) == inside
    })
}

/// Each digit of the range exactly once.
pub fn is_strict_member(n: u128, base: u32, family: Family) -> bool {
    let (lo, hi) = digit_bounds(base, family);
    let mut ds = digits_of(n, base);
    ds.sort_unstable();
    ds == (lo..=hi).collect::<Vec<_>>()
}

fn floor_sqrt(n: u128) -> u128 {
    let mut r = (n as f64).sqrt() as u128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Roots of strict squares by checking every root whose square has the right
/// number of digits.
pub fn unfiltered_square_roots(base: u32, family: Family) -> Vec<u128> {
    let (lo, hi) = digit_bounds(base, family);
    let len = hi - lo + 1;
    let b = base as u128;
    let min = b.pow(len - 1);
    let max = b.pow(len) - 1;
    let mut root = floor_sqrt(min);
    if root * root < min {
        root += 1;
    }
    let mut out = Vec::new();
    while root * root <= max {
        if is_strict_member(root * root, base, family) {
            out.push(root);
        }
        root += 1;
    }
    out
}

/// All `k`-digit loose members, ascending.
pub fn loose_members_of_length(base: u32, family: Family, k: u32) -> Vec<u128> {
    let b = base as u128;
    let start = if k == 1 { 0 } else { b.pow(k - 1) };
    (start..b.pow(k))
        .filter(|&n| is_loose_member(n, base, family))
        .collect()
}

/// Sieve of Eratosthenes, `limit` exclusive.
pub fn sieve(limit: usize) -> Vec<bool> {
    let mut p = vec![true; limit];
    for slot in p.iter_mut().take(2) {
        *slot = false;
    }
    let mut i = 2;
    while i * i < limit {
        if p[i] {
            let mut j = i * i;
            while j < limit {
                p[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    p
}

pub fn trial_division_is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest loose member that is prime, by walking upward from the smallest
/// value with enough digits.
pub fn brute_smallest_prime(base: u32, family: Family) -> u128 {
    let (lo, hi) = digit_bounds(base, family);
    let mut k = hi - lo + 1;
    loop {
        for n in loose_members_of_length(base, family, k) {
            if trial_division_is_prime(n) {
                return n;
            }
        }
        k += 1;
    }
}

pub fn render_oracle(n: u128, base: u32) -> String {
    digits_of(n, base)
        .into_iter()
        .map(|d| char::from_digit(d, base).unwrap())
        .collect()
}
