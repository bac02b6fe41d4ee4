//! Finite fields `GF(p^e)` with `e ≤ 4`.
//!
//! An element is a coefficient vector `(c₀, …, c_{e-1})` over `GF(p)`,
//! stored as the index `Σ cᵢ pⁱ`. Index order is the canonical element order.

use alloc::vec;
use alloc::vec::Vec;

use super::numtheory::{mod_inv, require_prime};
use crate::{Error, Result};

pub type Elem = u32;

const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    e: usize,
    /// Low-order coefficients of the monic modulus; the leading 1 is implicit.
    modulus: Vec<u64>,
}

impl Field {
    /// `GF(p^e)` reduced by the least monic irreducible of degree `e`, ordering
    /// polynomials by `(c_{e-1}, …, c₀)`.
    pub fn new(p: u64, e: usize) -> Result<Self> {
        require_prime(p)?;
        if !(1..=4).contains(&e) {
            return Err(Error::InvalidParameter(alloc::format!(
                "extension degree {e} outside 1..=4"
            )));
        }
        let q = p.pow(e as u32);
        if q > MAX_ORDER {
            return Err(Error::TooLarge {
                n: q as usize,
                limit: MAX_ORDER as usize,
            });
        }
        for idx in 0..q {
            let low = digits(idx, p, e);
            let mut poly = low.clone();
            poly.push(1);
            if is_irreducible(&poly, p) {
                return Ok(Field { p, e, modulus: low });
            }
        }
        Err(Error::InvalidParameter(
            "no irreducible modulus found".into(),
        ))
    }

    /// The field of order `q` when `q` is a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("{q} is not a prime power")))?;
        Field::new(p, e)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.e as u32)
    }

    /// Full modulus coefficients, constant term first, leading 1 last.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order() as Elem
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u64> {
        digits(a as u64, self.p, self.e)
    }

    pub fn from_coeffs(&self, c: &[u64]) -> Elem {
        c.iter()
            .rev()
            .fold(0u64, |acc, &x| acc * self.p + x % self.p) as Elem
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.from_coeffs(&s)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let s: Vec<u64> = self
            .coeffs(a)
            .iter()
            .map(|&u| (self.p - u) % self.p)
            .collect();
        self.from_coeffs(&s)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let e = self.e;
        let mut prod = vec![0u64; 2 * e - 1];
        for i in 0..e {
            for j in 0..e {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % self.p;
            }
        }
        // x^e = -Σ mᵢ xⁱ
        for d in (e..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                let t = c * m % self.p;
                prod[d - e + i] = (prod[d - e + i] + self.p - t) % self.p;
            }
        }
        self.from_coeffs(&prod[..e])
    }

    pub fn pow(&self, a: Elem, mut exp: u64) -> Elem {
        let (mut base, mut acc) = (a, self.one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        if self.e == 1 {
            return Some(mod_inv(a as u64, self.p) as Elem);
        }
        Some(self.pow(a, self.order() - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Least element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> Elem {
        let target = self.order() - 1;
        self.elements()
            .skip(1)
            .find(|&a| self.multiplicative_order(a) == Some(target))
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

fn digits(mut x: u64, p: u64, e: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(e);
    for _ in 0..e {
        out.push(x % p);
        x /= p;
    }
    out
}

/// `(p, e)` with `q = p^e`.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

// Remainder of `a` by a monic `b` over GF(p).
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && r.len() > 1 {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r.pop();
        r = trim(r);
        if r.len() == 1 && r[0] == 0 {
            break;
        }
    }
    trim(r)
}

/// Trial division of a monic polynomial by every monic polynomial of degree
/// `1..=deg/2`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut div = digits(idx, p, d);
            div.push(1);
            let r = poly_rem(poly, &div, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.order(), 5);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.primitive_element(), 2);
        assert_eq!(Field::new(13, 1).unwrap().primitive_element(), 2);
        assert_eq!(Field::new(2, 1).unwrap().primitive_element(), 1);
        assert_eq!(Field::new(4, 1), Err(Error::NotPrime(4)));
    }

    #[test]
    fn gf9_modulus_and_generator() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), vec![1, 0, 1]);
        // x is index 3; x² = -1 = 2
        assert_eq!(f.mul(3, 3), 2);
        // x + 1 has order 8
        assert_eq!(f.primitive_element(), 4);
        assert_eq!(Field::of_order(9).unwrap(), f);
    }

    #[test]
    fn irreducibility_by_roots_for_small_degree() {
        // degrees 2 and 3 are irreducible exactly when rootless
        for p in [2u64, 3, 5] {
            for e in [2usize, 3] {
                for idx in 0..p.pow(e as u32) {
                    let mut poly = digits(idx, p, e);
                    poly.push(1);
                    let has_root =
                        (0..p).any(|x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0);
                    assert_eq!(is_irreducible(&poly, p), !has_root, "{poly:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn degree_four_counts() {
        // Gauss: (p^4 - p^2) / 4 monic irreducible quartics
        for p in [2u64, 3] {
            let count = (0..p.pow(4))
                .filter(|&idx| {
                    let mut poly = digits(idx, p, 4);
                    poly.push(1);
                    is_irreducible(&poly, p)
                })
                .count() as u64;
            assert_eq!(count, (p.pow(4) - p * p) / 4);
        }
    }

    #[test]
    fn field_axioms_small() {
        for (p, e) in [(2, 3), (3, 2), (5, 2), (2, 4)] {
            let f = Field::new(p, e).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
            let z = f.primitive_element();
            let powers: alloc::collections::BTreeSet<_> =
                (0..f.order() - 1).map(|i| f.pow(z, i)).collect();
            assert_eq!(powers.len() as u64, f.order() - 1);
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
