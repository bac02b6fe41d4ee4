use alloc::vec::Vec;

use crate::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

pub(crate) fn rem(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::InvalidParameter(
            "Legendre symbol needs an odd prime".into(),
        ));
    }
    Ok(match mod_pow(rem(a, p), (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

/// Smallest positive `i` with `i² ≡ -1 (mod p)`.
pub fn sqrt_minus_one(p: u64) -> Option<u64> {
    (1..p).find(|&i| i * i % p == p - 1)
}

/// Some `s` with `s² ≡ a (mod p)`, the smallest one.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (0..p).find(|&s| s * s % p == a)
}

/// All integer `(α₀, α₁, α₂, α₃)` with `α₀² + α₁² + α₂² + α₃² = q`, `α₀ > 0`
/// odd and the others even. There are exactly `q + 1` of them.
pub fn sum_of_squares_solutions(q: u64) -> Result<Vec<[i64; 4]>> {
    require_prime(q)?;
    if q % 4 != 1 {
        return Err(Error::Constraint(alloc::format!("q = {q} is not 1 mod 4")));
    }
    let q = q as i64;
    let mut r = 0;
    while (r + 1) * (r + 1) <= q {
        r += 1;
    }
    let mut out = Vec::new();
    for a0 in (1..=r).step_by(2) {
        for a1 in (-r..=r).filter(|x| x % 2 == 0) {
            for a2 in (-r..=r).filter(|x| x % 2 == 0) {
                for a3 in (-r..=r).filter(|x| x % 2 == 0) {
                    if a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == q {
                        out.push([a0, a1, a2, a3]);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(5, 13).unwrap(), -1);
        assert_eq!(legendre(17, 13).unwrap(), 1);
        assert_eq!(legendre(13, 13).unwrap(), 0);
        assert_eq!(legendre(-1, 13).unwrap(), 1);
        assert!(legendre(3, 9).is_err());
        assert!(legendre(3, 2).is_err());
    }

    #[test]
    fn legendre_agrees_with_squares() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in 1..p {
                let square = (1..p).any(|x| x * x % p == a);
                assert_eq!(legendre(a as i64, p).unwrap() == 1, square);
            }
        }
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_minus_one(5), Some(2));
        assert_eq!(sqrt_minus_one(13), Some(5));
        assert_eq!(sqrt_minus_one(7), None);
        assert_eq!(sqrt_mod(4, 13), Some(2));
    }

    #[test]
    fn four_squares_q5() {
        let mut s = sum_of_squares_solutions(5).unwrap();
        s.sort();
        assert_eq!(
            s,
            alloc::vec![
                [1, -2, 0, 0],
                [1, 0, -2, 0],
                [1, 0, 0, -2],
                [1, 0, 0, 2],
                [1, 0, 2, 0],
                [1, 2, 0, 0],
            ]
        );
        assert_eq!(sum_of_squares_solutions(13).unwrap().len(), 14);
        assert!(sum_of_squares_solutions(13)
            .unwrap()
            .contains(&[3, 2, 0, 0]));
        assert!(sum_of_squares_solutions(13)
            .unwrap()
            .contains(&[1, -2, 2, -2]));
        assert!(sum_of_squares_solutions(7).is_err());
    }
}
