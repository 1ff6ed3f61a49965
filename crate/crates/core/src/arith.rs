//! Integer helpers for orders and indices.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Distinct prime factors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Distinct prime factors of an arbitrary-precision integer, ascending.
pub fn big_prime_factors(n: &BigUint) -> Vec<BigUint> {
    if let Some(small) = n.to_u64() {
        return prime_factors(small).into_iter().map(BigUint::from).collect();
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        if (&n % &d) == BigUint::ZERO {
            while (&n % &d) == BigUint::ZERO {
                n /= &d;
            }
            out.push(d.clone());
        }
        d += 1u32;
    }
    if n > BigUint::one() {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: &BigUint, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut part = BigUint::one();
    while n > BigUint::ZERO && (&n % &p) == BigUint::ZERO {
        n /= &p;
        part *= &p;
    }
    part
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(61) && !is_prime(1) && !is_prime(91));
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(1024), vec![2]);
        let big = BigUint::from(u64::MAX) * BigUint::from(6u32);
        let f = big_prime_factors(&big);
        assert_eq!(f[0], BigUint::from(2u32));
        assert_eq!(f[1], BigUint::from(3u32));
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(&BigUint::from(360u32), 2), BigUint::from(8u32));
        assert_eq!(p_part(&BigUint::from(360u32), 7), BigUint::one());
        assert_eq!(gcd(132, 110), 22);
    }
}
