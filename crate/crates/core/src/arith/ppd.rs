//! Primitive prime divisors of `a^n - 1`.
//!
//! The primitive part of `a^n - 1` divides the cyclotomic value `Phi_n(a)`,
//! whose degree is `phi(n)`, so for the ranges used here the numbers stay
//! inside `u128` and factor quickly by Pollard's rho.

use std::collections::BTreeSet;

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if let Some(p) = a.checked_mul(b) {
        return p % m;
    }
    let (mut a, mut b) = (a % m, b % m);
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let (s, over) = a.overflowing_add(b);
    if over || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Miller-Rabin with the first thirteen prime bases, deterministic below
/// 3.3 * 10^24.
pub fn is_prime(n: u128) -> bool {
    const BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
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

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A nontrivial factor of the composite odd `n` (Brent's variant of rho).
fn rho(n: u128) -> u128 {
    for c in 1u128.. {
        let f = |x: u128| add_mod(mul_mod(x, x, n), c, n);
        let (mut x, mut y, mut d) = (2u128, 2u128, 1u128);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

/// Prime factors (without multiplicity) of `n`.
pub fn prime_factors(mut n: u128) -> BTreeSet<u128> {
    let mut out = BTreeSet::new();
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if n.is_multiple_of(p) {
            out.insert(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            out.insert(m);
            continue;
        }
        let d = rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out
}

/// `Phi_n(a)` by dividing `a^n - 1` by `Phi_d(a)` for proper divisors `d`.
pub fn cyclotomic_value(a: u128, n: u32) -> Option<u128> {
    let mut vals: Vec<u128> = vec![0; n as usize + 1];
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut v = a.checked_pow(d)?.checked_sub(1)?;
        for e in 1..d {
            if d % e == 0 {
                v /= vals[e as usize];
            }
        }
        vals[d as usize] = v;
    }
    Some(vals[n as usize])
}

/// Primes dividing `a^n - 1` but no `a^i - 1` with `i < n`; by convention
/// `ppd(2, 6) = {7}`.
pub fn ppd(a: u64, n: u32) -> BTreeSet<u128> {
    assert!(a >= 2 && n >= 1, "ppd needs a >= 2 and n >= 1");
    if (a, n) == (2, 6) {
        return BTreeSet::from([7]);
    }
    let phi = cyclotomic_value(a as u128, n).expect("Phi_n(a) fits in 128 bits");
    // a prime dividing Phi_n(a) is primitive unless it divides n
    prime_factors(phi).into_iter().filter(|&r| !(n as u128).is_multiple_of(r)).collect()
}

/// Brute-force cross-check of [`ppd`] from the definition.
pub fn ppd_naive(a: u64, n: u32) -> BTreeSet<u128> {
    let a = a as u128;
    let target = a.pow(n) - 1;
    prime_factors(target)
        .into_iter()
        .filter(|&r| (1..n).all(|i| (a.pow(i) - 1) % r != 0))
        .collect()
}

/// Every `r` in `ppd(a, n)` satisfies `n | r - 1`, hence `r > n`.
pub fn ppd_lemma_check(a: u64, n: u32) -> bool {
    ppd(a, n).iter().all(|&r| (r - 1) % n as u128 == 0 && r > n as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(ppd(2, 6), BTreeSet::from([7]));
        assert!(ppd_naive(2, 6).is_empty());
        assert_eq!(ppd(2, 4), BTreeSet::from([5]));
        assert_eq!(ppd(4, 3), BTreeSet::from([7]));
        assert_eq!(ppd(3, 5), BTreeSet::from([11]));
        assert_eq!(ppd(2, 11), BTreeSet::from([23, 89]));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(is_prime(170_141_183_460_469_231_731_687_303_715_884_105_727)); // 2^127 - 1
    }

    #[test]
    fn cyclotomic() {
        assert_eq!(cyclotomic_value(2, 6), Some(3));
        assert_eq!(cyclotomic_value(2, 12), Some(13));
        assert_eq!(cyclotomic_value(10, 3), Some(111));
    }

    #[test]
    fn agrees_with_definition_on_a_small_range() {
        for a in 2..=7u64 {
            for n in 3..=12u32 {
                if (a, n) != (2, 6) {
                    assert_eq!(ppd(a, n), ppd_naive(a, n), "a={a} n={n}");
                }
            }
        }
    }
}
