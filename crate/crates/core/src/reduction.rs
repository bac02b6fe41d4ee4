//! Automorphism orbits, quotient graphs and spectrum containment.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::graph::{Graph, SymMatrix};
use crate::math::{fabs, sqrt};
use crate::spectral::Spectrum;
use crate::{Error, Result};

/// A bijection on `0..n`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = alloc::vec![false; n];
        for &x in &image {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for n = {n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }
}

/// Total weight per unordered vertex pair, loops on the diagonal. Weights of
/// a pair are summed in sorted order so that the result does not depend on
/// edge order.
fn pair_weights(g: &Graph, map: impl Fn(usize) -> usize) -> BTreeMap<(usize, usize), f64> {
    let mut parts: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
    for e in g.edges() {
        let (a, b) = (map(e.u), map(e.v));
        parts.entry((a.min(b), a.max(b))).or_default().push(e.w);
    }
    parts
        .into_iter()
        .map(|(k, mut ws)| {
            ws.sort_by(f64::total_cmp);
            (k, ws.iter().sum())
        })
        .collect()
}

/// Whether `p` preserves the weighted adjacency relation exactly, loops
/// included.
pub fn check_automorphism(g: &Graph, p: &Permutation) -> bool {
    if p.len() != g.vertex_count() {
        return false;
    }
    pair_weights(g, |v| v) == pair_weights(g, |v| p.apply(v))
}

/// Orbit label per vertex, orbits numbered in order of their least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    orbit_of: Vec<usize>,
    sizes: Vec<usize>,
}

impl OrbitPartition {
    /// Normalizes arbitrary labels into a partition.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut rename = BTreeMap::new();
        let mut sizes = Vec::new();
        let orbit_of = labels
            .iter()
            .map(|l| {
                let next = rename.len();
                let id = *rename.entry(*l).or_insert(next);
                if id == sizes.len() {
                    sizes.push(0);
                }
                sizes[id] += 1;
                id
            })
            .collect();
        OrbitPartition { orbit_of, sizes }
    }

    pub fn vertex_count(&self) -> usize {
        self.orbit_of.len()
    }

    pub fn orbit_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbit_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.orbit_of
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new(); self.orbit_count()];
        for (v, &o) in self.orbit_of.iter().enumerate() {
            out[o].push(v);
        }
        out
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbits of the group generated by `gens` on `0..n`.
pub fn orbits(n: usize, gens: &[Permutation]) -> Result<OrbitPartition> {
    let mut parent: Vec<usize> = (0..n).collect();
    for p in gens {
        if p.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "permutation on {} points used on {n} vertices",
                p.len()
            )));
        }
        for (i, &j) in p.image().iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    Ok(OrbitPartition::from_labels(&labels))
}

/// Weighted directed quotient: `B(i, j)` is the weight from one vertex of
/// orbit `i` into orbit `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientGraph {
    sizes: Vec<usize>,
    b: Vec<f64>,
}

impl QuotientGraph {
    pub fn orbit_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.b[i * self.orbit_count() + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.b
            .chunks(self.orbit_count().max(1))
            .map(<[f64]>::to_vec)
            .collect()
    }

    /// Nonzero entries `(i, j, B(i, j))` in row-major order.
    pub fn arcs(&self) -> Vec<(usize, usize, f64)> {
        let m = self.orbit_count();
        (0..m * m)
            .filter(|&x| self.b[x] != 0.0)
            .map(|x| (x / m, x % m, self.b[x]))
            .collect()
    }

    /// Checks `n_i·B(i, j) = n_j·B(j, i)` up to `tol` relative to the entry.
    pub fn check_detailed_balance(&self, tol: f64) -> Result<()> {
        let m = self.orbit_count();
        for i in 0..m {
            for j in i + 1..m {
                let a = self.sizes[i] as f64 * self.weight(i, j);
                let b = self.sizes[j] as f64 * self.weight(j, i);
                if fabs(a - b) > tol * a.abs().max(b.abs()).max(1.0) {
                    return Err(Error::DetailedBalance { i, j });
                }
            }
        }
        Ok(())
    }
}

/// Per-vertex weights into each orbit, as sorted `(orbit, weight)` lists.
fn orbit_rows(g: &Graph, part: &OrbitPartition) -> Vec<Vec<(usize, f64)>> {
    let mut raw: Vec<Vec<(usize, f64)>> = alloc::vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        if e.is_loop() {
            raw[e.u].push((part.orbit_of(e.u), e.w));
        } else {
            raw[e.u].push((part.orbit_of(e.v), e.w));
            raw[e.v].push((part.orbit_of(e.u), e.w));
        }
    }
    raw.into_iter()
        .map(|mut r| {
            r.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.total_cmp(&y.1)));
            let mut merged: Vec<(usize, f64)> = Vec::new();
            for (o, w) in r {
                match merged.last_mut() {
                    Some(last) if last.0 == o => last.1 += w,
                    _ => merged.push((o, w)),
                }
            }
            merged
        })
        .collect()
}

fn check_partition(g: &Graph, part: &OrbitPartition) -> Result<()> {
    if part.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "partition covers {} vertices, graph has {}",
            part.vertex_count(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// The equitable quotient. Every member of an orbit must see the same weight
/// into every other orbit; otherwise [`Error::NotEquitable`] names the first
/// offending pair.
pub fn quotient(g: &Graph, part: &OrbitPartition) -> Result<QuotientGraph> {
    check_partition(g, part)?;
    let m = part.orbit_count();
    let rows = orbit_rows(g, part);
    let mut rep: Vec<Option<usize>> = alloc::vec![None; m];
    let same = |x: f64, y: f64| fabs(x - y) <= 1e-9 * x.abs().max(y.abs()).max(1.0);
    for (v, row) in rows.iter().enumerate() {
        let o = part.orbit_of(v);
        let Some(r) = rep[o] else {
            rep[o] = Some(v);
            continue;
        };
        let first = &rows[r];
        let mut i = 0;
        let mut j = 0;
        while i < first.len() || j < row.len() {
            let (a, b) = (first.get(i), row.get(j));
            match (a, b) {
                (Some(&(t, x)), Some(&(u, y))) if t == u => {
                    if !same(x, y) {
                        return Err(Error::NotEquitable { from: o, to: t });
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&(t, _)), Some(&(u, _))) => {
                    return Err(Error::NotEquitable {
                        from: o,
                        to: t.min(u),
                    });
                }
                (Some(&(t, _)), None) | (None, Some(&(t, _))) => {
                    return Err(Error::NotEquitable { from: o, to: t });
                }
                (None, None) => unreachable!(),
            }
        }
    }
    let mut b = alloc::vec![0.0; m * m];
    for (o, r) in rep.iter().enumerate() {
        for &(t, w) in &rows[r.expect("orbits are nonempty")] {
            b[o * m + t] = w;
        }
    }
    Ok(QuotientGraph {
        sizes: part.sizes().to_vec(),
        b,
    })
}

/// Haemers' averaged quotient `b_ij = 1ᵀA_ij1 / n_i`, defined for any
/// partition.
pub fn haemers_quotient(g: &Graph, part: &OrbitPartition) -> Result<QuotientGraph> {
    check_partition(g, part)?;
    let m = part.orbit_count();
    let mut b = alloc::vec![0.0; m * m];
    for (v, row) in orbit_rows(g, part).into_iter().enumerate() {
        let o = part.orbit_of(v);
        for (t, w) in row {
            b[o * m + t] += w;
        }
    }
    for (i, &size) in part.sizes().iter().enumerate() {
        for x in &mut b[i * m..(i + 1) * m] {
            *x /= size as f64;
        }
    }
    Ok(QuotientGraph {
        sizes: part.sizes().to_vec(),
        b,
    })
}

/// `D^{1/2} B D^{-1/2}` with `D` the orbit sizes; symmetric under detailed
/// balance.
pub fn symmetrized(q: &QuotientGraph) -> Result<SymMatrix> {
    q.check_detailed_balance(1e-9)?;
    let m = q.orbit_count();
    let s = |i: usize, j: usize| sqrt(q.sizes[i] as f64 / q.sizes[j] as f64) * q.weight(i, j);
    let rows: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| 0.5 * (s(i, j) + s(j, i))).collect())
        .collect();
    SymMatrix::from_rows(&rows)
}

pub fn quotient_spectrum(q: &QuotientGraph) -> Result<Spectrum> {
    Spectrum::of(&symmetrized(q)?)
}

/// Every value of `sub` matches a distinct value of `full` within `tol`.
pub fn verify_containment(sub: &Spectrum, full: &Spectrum, tol: f64) -> bool {
    full.contains(sub, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topologies::basic::{cycle, fat_tree, path};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(alloc::vec![0, 0]).is_err());
        assert!(Permutation::new(alloc::vec![2, 0]).is_err());
        let p = perm(&[1, 2, 0]);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
    }

    #[test]
    fn orbit_examples() {
        let o = orbits(4, &[perm(&[1, 0, 3, 2])]).unwrap();
        assert_eq!(o.labels(), &[0, 0, 1, 1]);
        let o = orbits(3, &[]).unwrap();
        assert_eq!(o.sizes(), &[1, 1, 1]);
        assert!(orbits(3, &[perm(&[1, 0])]).is_err());
    }

    #[test]
    fn automorphism_checks() {
        let c5 = cycle(5).unwrap();
        assert!(check_automorphism(&c5, &perm(&[1, 2, 3, 4, 0])));
        let p3 = path(3).unwrap();
        assert!(!check_automorphism(&p3, &perm(&[1, 0, 2])));
        assert!(check_automorphism(&p3, &perm(&[2, 1, 0])));
    }

    #[test]
    fn single_orbit_quotient() {
        let c6 = cycle(6).unwrap();
        let shift: Vec<usize> = (0..6).map(|i| (i + 1) % 6).collect();
        let o = orbits(6, &[perm(&shift)]).unwrap();
        let q = quotient(&c6, &o).unwrap();
        assert_eq!(q.rows(), alloc::vec![alloc::vec![2.0]]);
        assert_eq!(quotient_spectrum(&q).unwrap().values(), &[2.0]);
    }

    #[test]
    fn fat_tree_levels() {
        let g = fat_tree(4).unwrap();
        let labels: Vec<usize> = (0..31usize)
            .map(|v| (usize::BITS - 1 - (v + 1).leading_zeros()) as usize)
            .collect();
        let q = quotient(&g, &OrbitPartition::from_labels(&labels)).unwrap();
        for (i, (up, down)) in [(8.0, 16.0), (4.0, 8.0), (2.0, 4.0), (1.0, 2.0)]
            .iter()
            .enumerate()
        {
            assert_eq!(q.weight(i + 1, i), *up);
            assert_eq!(q.weight(i, i + 1), *down);
        }
    }

    #[test]
    fn non_equitable_is_rejected() {
        let p3 = path(3).unwrap();
        let part = OrbitPartition::from_labels(&[0, 0, 1]);
        assert!(matches!(
            quotient(&p3, &part),
            Err(Error::NotEquitable { .. })
        ));
        let h = haemers_quotient(&p3, &part).unwrap();
        assert_eq!(
            h.rows(),
            alloc::vec![alloc::vec![1.0, 0.5], alloc::vec![1.0, 0.0]]
        );
        h.check_detailed_balance(1e-12).unwrap();
    }

    #[test]
    fn containment() {
        let a = Spectrum::new(alloc::vec![0.0]);
        let b = Spectrum::new(alloc::vec![1.0]);
        assert!(!verify_containment(&a, &b, 0.5));
        assert!(verify_containment(&b, &b, 0.0));
    }
}
