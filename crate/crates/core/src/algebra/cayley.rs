use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::group::{CyclicProduct, FiniteGroup, Mat2, ProjectiveGroup, ProjectiveKind};
use super::numtheory::{
    legendre, mod_inv, rem, sqrt_minus_one, sqrt_mod, sum_of_squares_solutions,
};
use crate::graph::{Edge, Graph};
use crate::math::{cos, PI};
use crate::spectral::Spectrum;
use crate::{Error, Result};

/// A multiset of group elements used as Cayley-graph generators.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet<E> {
    pub elements: Vec<E>,
    pub inverse_closed: bool,
}

impl<E: Copy + Ord> GeneratorSet<E> {
    pub fn new<G: FiniteGroup<Elem = E>>(group: &G, elements: Vec<E>) -> Self {
        let inverse_closed = is_inverse_closed(group, &elements);
        GeneratorSet {
            elements,
            inverse_closed,
        }
    }
}

fn multiset<E: Ord + Copy>(items: impl Iterator<Item = E>) -> BTreeMap<E, usize> {
    let mut m = BTreeMap::new();
    for x in items {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

/// `S = S⁻¹` as multisets.
pub fn is_inverse_closed<G: FiniteGroup>(group: &G, s: &[G::Elem]) -> bool {
    multiset(s.iter().copied()) == multiset(s.iter().map(|&x| group.inverse(x)))
}

/// Cayley graph with one vertex per element (index = position in
/// `group.elements()`).
///
/// For every vertex `g` and generator `s` the edge `{g, gs}` is added once,
/// from its lower-indexed end, so a pair `s, s⁻¹` yields one edge per vertex
/// pair and an involution listed once yields one edge. The identity in `S`
/// gives a unit loop. The result is `|S|`-regular.
pub fn cayley_graph<G: FiniteGroup>(group: &G, s: &[G::Elem]) -> Result<Graph> {
    if !is_inverse_closed(group, s) {
        return Err(Error::NotInverseClosed);
    }
    let els = group.elements();
    let index = |x: G::Elem| els.binary_search(&x).expect("closed under multiplication");
    let mut edges = Vec::with_capacity(els.len() * s.len() / 2);
    for (i, &g) in els.iter().enumerate() {
        for &t in s {
            let j = index(group.mul(g, t));
            if i <= j {
                edges.push(Edge { u: i, v: j, w: 1.0 });
            }
        }
    }
    Ok(Graph::from_edges_unchecked(els.len(), edges))
}

/// Adjacency spectrum of the Cayley graph on `ℤ_a × ℤ_b` via characters:
/// `Σ_{(s,t)∈S} cos(2π(xs/a + yt/b))` for each `(x, y)`.
pub fn abelian_cayley_spectrum(a: u32, b: u32, s: &[(i64, i64)]) -> Result<Spectrum> {
    let group = CyclicProduct::new(a, b)?;
    let reduced: Vec<(u32, u32)> = s.iter().map(|&(x, y)| group.reduce(x, y)).collect();
    if !is_inverse_closed(&group, &reduced) {
        return Err(Error::NotInverseClosed);
    }
    let mut values = Vec::with_capacity((a * b) as usize);
    for x in 0..a {
        for y in 0..b {
            let v = reduced
                .iter()
                .map(|&(s, t)| {
                    let fx = (x as u64 * s as u64 % a as u64) as f64 / a as f64;
                    let fy = (y as u64 * t as u64 % b as u64) as f64 / b as f64;
                    cos(2.0 * PI * (fx + fy))
                })
                .sum();
            values.push(v);
        }
    }
    Ok(Spectrum::new(values))
}

fn require_one_mod_four(x: u64, name: &str) -> Result<()> {
    if x % 4 != 1 {
        return Err(Error::Constraint(alloc::format!(
            "{name} = {x} is not 1 mod 4"
        )));
    }
    Ok(())
}

/// The `q + 1` generators of the LPS graph `X^{p,q}` with the group they
/// live in: PSL(2, p) when `q` is a square mod `p`, PGL(2, p) otherwise.
pub fn lps_generators(p: u64, q: u64) -> Result<(ProjectiveGroup, GeneratorSet<Mat2>)> {
    super::numtheory::require_prime(p)?;
    super::numtheory::require_prime(q)?;
    if p == q {
        return Err(Error::Constraint("p and q must differ".into()));
    }
    require_one_mod_four(p, "p")?;
    require_one_mod_four(q, "q")?;
    let kind = if legendre(q as i64, p)? == 1 {
        ProjectiveKind::Psl
    } else {
        ProjectiveKind::Pgl
    };
    let group = ProjectiveGroup::new(kind, p)?;
    let i = sqrt_minus_one(p).expect("p = 1 mod 4") as i64;
    // scale by s with s² = 1/q so PSL generators have determinant 1
    let s = match kind {
        ProjectiveKind::Psl => sqrt_mod(mod_inv(q % p, p), p).expect("q is a square mod p"),
        ProjectiveKind::Pgl => 1,
    } as i64;

    let mut gens = Vec::with_capacity(q as usize + 1);
    for (idx, a) in sum_of_squares_solutions(q)?.into_iter().enumerate() {
        let raw = [
            a[0] + i * a[1],
            a[2] + i * a[3],
            -a[2] + i * a[3],
            a[0] - i * a[1],
        ];
        let m = raw.map(|x| rem(x * s, p) as u32);
        let canon = group
            .canonical(m)
            .map_err(|_| Error::DegenerateGenerator(idx))?;
        gens.push(canon);
    }
    let set = GeneratorSet::new(&group, gens);
    if !set.inverse_closed {
        return Err(Error::NotInverseClosed);
    }
    Ok((group, set))
}
