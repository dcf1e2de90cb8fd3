//! Small integer number theory used across the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Euler's totient.
pub fn totient(k: u64) -> u64 {
    assert!(k >= 1, "totient of zero");
    factorize(k)
        .into_iter()
        .fold(k, |acc, (p, _)| acc / p * (p - 1))
}

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Radical (product of the distinct prime divisors).
pub fn radical(n: u64) -> u64 {
    factorize(n).into_iter().map(|(p, _)| p).product()
}

/// Prime powers `p^e` with `2 <= p^e <= bound`, ascending.
pub fn prime_powers_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&k| prime_power(k).is_some()).collect()
}

/// Smallest non-negative integer `n` with `n^k >= value` (`k >= 1`).
pub fn ceil_root(value: &BigInt, k: u32) -> BigInt {
    assert!(k >= 1);
    if value <= &BigInt::zero() {
        return BigInt::zero();
    }
    let r = value.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) >= *value {
        r
    } else {
        r + BigInt::one()
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(10), 4);
        assert_eq!(totient(21), 12);
    }

    #[test]
    fn totient_matches_unit_count() {
        for k in 1..300u64 {
            let count = (1..=k).filter(|&a| a.gcd(&k) == 1).count() as u64;
            assert_eq!(totient(k), count, "k = {k}");
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(10), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_powers_up_to(10), vec![2, 3, 4, 5, 7, 8, 9]);
    }

    #[test]
    fn ceil_root_is_least() {
        for v in 0..200i64 {
            for k in 1..5u32 {
                let r = ceil_root(&BigInt::from(v), k);
                let r64: i64 = r.try_into().unwrap();
                assert!(r64.pow(k) >= v);
                if r64 > 0 {
                    assert!((r64 - 1).pow(k) < v);
                }
            }
        }
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }
}
