//! Probabilistic primality testing.
//!
//! Miller-Rabin with 64 witness rounds: the error probability for a composite
//! is below 4^-64 = 2^-128. Witnesses are the first primes plus bases derived
//! deterministically from the candidate, so results are reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

const WITNESS_ROUNDS: usize = 64;

/// Miller-Rabin primality test; `false` is certain, `true` has error < 2^-128.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n <= &BigInt::one() {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let n_minus_1: BigInt = n - 1;
    let mut d = n_minus_1.clone();
    let mut s = 0u64;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    let witness = |a: &BigInt| -> bool {
        // returns true when `a` passes (n still possibly prime)
        let a = a.mod_floor(n);
        if a.is_zero() || a.is_one() {
            return true;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                return true;
            }
        }
        false
    };
    for &p in &SMALL_PRIMES {
        if !witness(&BigInt::from(p)) {
            return false;
        }
    }
    // Deterministic pseudo-random bases seeded from n itself.
    let mut state = n.mod_floor(&BigInt::from(u64::MAX)).to_string();
    for round in 0..WITNESS_ROUNDS - SMALL_PRIMES.len() {
        state = format!("{state}:{round}");
        let mut acc: u128 = 0xcbf29ce484222325;
        for b in state.bytes() {
            acc ^= u128::from(b);
            acc = acc.wrapping_mul(0x100000001b3);
        }
        let base = BigInt::from(acc % u128::from(u64::MAX)) + 2;
        if !witness(&base) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn agrees_with_trial_division_on_small_range() {
        for n in 0u64..5000 {
            assert_eq!(
                is_probable_prime(&BigInt::from(n)),
                trial_division(n),
                "mismatch at {n}"
            );
        }
    }

    #[test]
    fn known_larger_cases() {
        assert!(is_probable_prime(&BigInt::from(1_000_000_007u64)));
        assert!(is_probable_prime(&(BigInt::from(2u64).pow(61) - 1)));
        // Carmichael numbers must be rejected
        for c in [561u64, 1105, 1729, 2465, 2821, 6601, 8911, 41041] {
            assert!(!is_probable_prime(&BigInt::from(c)), "{c}");
        }
    }
}
