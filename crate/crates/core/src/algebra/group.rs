//! Finite groups used as Cayley-graph vertex sets.

use alloc::vec::Vec;

use super::numtheory::{mod_inv, require_prime};
use crate::{Error, Result};

pub trait FiniteGroup {
    type Elem: Copy + Ord + core::fmt::Debug;

    /// Every element exactly once, in ascending order.
    fn elements(&self) -> Vec<Self::Elem>;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inverse(&self, a: Self::Elem) -> Self::Elem;
    fn identity(&self) -> Self::Elem;
}

/// `ℤ_a × ℤ_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicProduct {
    pub a: u32,
    pub b: u32,
}

impl CyclicProduct {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter(
                "cyclic factors must be nonzero".into(),
            ));
        }
        Ok(CyclicProduct { a, b })
    }

    pub fn reduce(&self, x: i64, y: i64) -> (u32, u32) {
        (
            x.rem_euclid(self.a as i64) as u32,
            y.rem_euclid(self.b as i64) as u32,
        )
    }
}

impl FiniteGroup for CyclicProduct {
    type Elem = (u32, u32);

    fn elements(&self) -> Vec<(u32, u32)> {
        (0..self.a)
            .flat_map(|x| (0..self.b).map(move |y| (x, y)))
            .collect()
    }

    fn mul(&self, s: (u32, u32), t: (u32, u32)) -> (u32, u32) {
        ((s.0 + t.0) % self.a, (s.1 + t.1) % self.b)
    }

    fn inverse(&self, s: (u32, u32)) -> (u32, u32) {
        ((self.a - s.0) % self.a, (self.b - s.1) % self.b)
    }

    fn identity(&self) -> (u32, u32) {
        (0, 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectiveKind {
    Psl,
    Pgl,
}

/// 2×2 matrix over `GF(p)`, row-major.
pub type Mat2 = [u32; 4];

/// Largest prime accepted for the projective groups.
pub const PROJECTIVE_MAX_P: u64 = 31;

/// `PSL(2, p)` or `PGL(2, p)` on canonical representatives.
///
/// PGL: the matrix is scaled so its first nonzero entry (row-major) is 1.
/// PSL: the determinant is 1 and of `M`, `-M` the one whose first nonzero
/// entry is smaller is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectiveGroup {
    pub kind: ProjectiveKind,
    pub p: u64,
}

impl ProjectiveGroup {
    pub fn new(kind: ProjectiveKind, p: u64) -> Result<Self> {
        require_prime(p)?;
        if p == 2 {
            return Err(Error::InvalidParameter(
                "projective groups need an odd prime".into(),
            ));
        }
        if p > PROJECTIVE_MAX_P {
            return Err(Error::TooLarge {
                n: p as usize,
                limit: PROJECTIVE_MAX_P as usize,
            });
        }
        Ok(ProjectiveGroup { kind, p })
    }

    /// `p(p²-1)` for PGL, half that for PSL.
    pub fn order(&self) -> u64 {
        let full = self.p * (self.p * self.p - 1);
        match self.kind {
            ProjectiveKind::Pgl => full,
            ProjectiveKind::Psl => full / 2,
        }
    }

    pub fn det(&self, m: Mat2) -> u64 {
        let p = self.p;
        let ad = m[0] as u64 * m[3] as u64 % p;
        let bc = m[1] as u64 * m[2] as u64 % p;
        (ad + p - bc) % p
    }

    fn scale(&self, m: Mat2, c: u64) -> Mat2 {
        m.map(|x| (x as u64 * c % self.p) as u32)
    }

    fn first_nonzero(m: &Mat2) -> u32 {
        *m.iter()
            .find(|&&x| x != 0)
            .expect("invertible matrix has a nonzero entry")
    }

    /// Canonical representative of the class of an invertible matrix. Fails if
    /// the matrix is singular, or for PSL if its determinant is not a square.
    pub fn canonical(&self, m: Mat2) -> Result<Mat2> {
        let p = self.p;
        let m = m.map(|x| (x as u64 % p) as u32);
        let det = self.det(m);
        if det == 0 {
            return Err(Error::InvalidParameter("singular matrix".into()));
        }
        match self.kind {
            ProjectiveKind::Pgl => {
                let f = Self::first_nonzero(&m) as u64;
                Ok(self.scale(m, mod_inv(f, p)))
            }
            ProjectiveKind::Psl => {
                // c² det = 1
                let target = mod_inv(det, p);
                let c = (1..p)
                    .find(|&c| c * c % p == target)
                    .ok_or_else(|| Error::InvalidParameter("determinant is not a square".into()))?;
                let m = self.scale(m, c);
                let neg = self.scale(m, p - 1);
                Ok(if Self::first_nonzero(&m) <= Self::first_nonzero(&neg) {
                    m
                } else {
                    neg
                })
            }
        }
    }

    fn raw_mul(&self, a: Mat2, b: Mat2) -> Mat2 {
        let p = self.p;
        let e = |i: usize, j: usize| {
            (a[2 * i] as u64 * b[j] as u64 + a[2 * i + 1] as u64 * b[2 + j] as u64) % p
        };
        [
            e(0, 0) as u32,
            e(0, 1) as u32,
            e(1, 0) as u32,
            e(1, 1) as u32,
        ]
    }
}

impl FiniteGroup for ProjectiveGroup {
    type Elem = Mat2;

    fn elements(&self) -> Vec<Mat2> {
        let p = self.p as u32;
        let mut out = Vec::with_capacity(self.order() as usize);
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let m = [a, b, c, d];
                        if let Ok(canon) = self.canonical(m) {
                            if canon == m {
                                out.push(m);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn mul(&self, a: Mat2, b: Mat2) -> Mat2 {
        self.canonical(self.raw_mul(a, b))
            .expect("product of group elements")
    }

    fn inverse(&self, m: Mat2) -> Mat2 {
        // adjugate; the scalar 1/det is absorbed by the projective class
        let p = self.p as u32;
        let adj = [m[3], (p - m[1]) % p, (p - m[2]) % p, m[0]];
        self.canonical(adj).expect("inverse of a group element")
    }

    fn identity(&self) -> Mat2 {
        [1, 0, 0, 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_orders() {
        let psl5 = ProjectiveGroup::new(ProjectiveKind::Psl, 5).unwrap();
        let pgl5 = ProjectiveGroup::new(ProjectiveKind::Pgl, 5).unwrap();
        assert_eq!(psl5.elements().len(), 60);
        assert_eq!(pgl5.elements().len(), 120);
        let psl13 = ProjectiveGroup::new(ProjectiveKind::Psl, 13).unwrap();
        assert_eq!(psl13.elements().len() as u64, psl13.order());
        assert_eq!(psl13.order(), 1092);
        assert!(ProjectiveGroup::new(ProjectiveKind::Psl, 37).is_err());
        assert_eq!(
            ProjectiveGroup::new(ProjectiveKind::Pgl, 9),
            Err(Error::NotPrime(9))
        );
    }

    #[test]
    fn elements_are_sorted_and_canonical() {
        for kind in [ProjectiveKind::Psl, ProjectiveKind::Pgl] {
            let g = ProjectiveGroup::new(kind, 7).unwrap();
            let els = g.elements();
            assert!(els.windows(2).all(|w| w[0] < w[1]));
            for &m in &els {
                assert_eq!(g.canonical(m).unwrap(), m);
            }
        }
    }

    #[test]
    fn group_laws_pgl5() {
        let g = ProjectiveGroup::new(ProjectiveKind::Pgl, 5).unwrap();
        let els = g.elements();
        let id = g.identity();
        for &a in &els {
            assert_eq!(g.mul(a, g.inverse(a)), id);
            assert_eq!(g.mul(id, a), a);
        }
        for &a in els.iter().step_by(7) {
            for &b in els.iter().step_by(11) {
                for &c in els.iter().step_by(13) {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn psl_representative_choice() {
        let g = ProjectiveGroup::new(ProjectiveKind::Psl, 5).unwrap();
        // -I is identified with I
        assert_eq!(g.canonical([4, 0, 0, 4]).unwrap(), [1, 0, 0, 1]);
        // det 2 is not a square mod 5
        assert!(g.canonical([2, 0, 0, 1]).is_err());
    }

    #[test]
    fn cyclic_product_laws() {
        let g = CyclicProduct::new(3, 4).unwrap();
        assert_eq!(g.elements().len(), 12);
        assert_eq!(g.mul((2, 3), (2, 2)), (1, 1));
        assert_eq!(g.inverse((1, 0)), (2, 0));
        assert_eq!(g.reduce(-1, -5), (2, 3));
    }
}
