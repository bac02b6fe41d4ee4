use alloc::vec::Vec;

use super::basic::complete;
use super::{check_nodes, constraint};
use crate::graph::{Edge, Graph, SymMatrix};
use crate::spectral::Spectrum;
use crate::Result;

/// Entry `M_{(i,j),(a,b)}` of the level-coupling matrix.
pub fn clex_m_entry(i: usize, j: usize, a: usize, b: usize) -> u32 {
    u32::from(i == b) + u32::from(j == a)
}

/// The `k²×k²` coupling matrix, pair `(i, j)` at index `i·k + j`.
pub fn clex_m_matrix(k: usize) -> SymMatrix {
    let kk = k * k;
    let mut rows = alloc::vec![alloc::vec![0.0; kk]; kk];
    for (r, row) in rows.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x = clex_m_entry(r / k, r % k, c / k, c % k) as f64;
        }
    }
    SymMatrix::from_rows(&rows).expect("M is symmetric")
}

/// `{2k, k^(k-1), (-k)^(k-1), 0^((k-1)²)}`.
pub fn clex_m_spectrum(k: usize) -> Result<Spectrum> {
    if !(2..=20).contains(&k) {
        return Err(constraint("M spectrum needs 2 <= k <= 20"));
    }
    let kf = k as f64;
    let mut v = alloc::vec![2.0 * kf];
    v.extend(core::iter::repeat_n(kf, k - 1));
    v.extend(core::iter::repeat_n(-kf, k - 1));
    v.extend(core::iter::repeat_n(0.0, (k - 1) * (k - 1)));
    Ok(Spectrum::new(v))
}

/// `C(K_k, ℓ)`.
pub fn clex(k: usize, l: u32) -> Result<Graph> {
    if k < 2 || l == 0 {
        return Err(constraint("clex needs k >= 2 and l >= 1"));
    }
    clex_general(&complete(k)?, l)
}

/// `C(G, ℓ)` with adjacency `A_G ⊗ I + Σ_j I_{k^j} ⊗ M ⊗ I_{k^{ℓ-2-j}}` on
/// tuples `(v₁, …, v_ℓ)` in row-major order. Diagonal entries of `M` become
/// loops of weight 2, other entries edges of that weight.
pub fn clex_general(g: &Graph, l: u32) -> Result<Graph> {
    let k = g.vertex_count();
    if k < 2 || l == 0 {
        return Err(constraint(
            "clex needs a base with >= 2 vertices and l >= 1",
        ));
    }
    if g.has_loops() {
        return Err(constraint("clex needs a loop-free base"));
    }
    let n = (k as u64).checked_pow(l).unwrap_or(u64::MAX);
    check_nodes(n)?;
    let n = n as usize;
    let l = l as usize;
    let rest = n / k;
    let mut edges = Vec::new();
    for e in g.edges() {
        for r in 0..rest {
            edges.push(Edge {
                u: e.u * rest + r,
                v: e.v * rest + r,
                w: e.w,
            });
        }
    }
    let kk = k * k;
    for j in 0..l.saturating_sub(1) {
        let (prefixes, suffixes) = (k.pow(j as u32), k.pow((l - 2 - j) as u32));
        for p in 0..prefixes {
            for s in 0..suffixes {
                let at = |x: usize| (p * kk + x) * suffixes + s;
                for x in 0..kk {
                    for y in x..kk {
                        let w = clex_m_entry(x / k, x % k, y / k, y % k);
                        if w > 0 {
                            edges.push(Edge {
                                u: at(x),
                                v: at(y),
                                w: w as f64,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::eigenvalues;
    use crate::metrics::{diameter, Diameter};

    #[test]
    fn base_case_is_complete() {
        assert_eq!(clex(4, 1).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn clex_3_2() {
        let g = clex(3, 2).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.degree_profile().regularity(), Some(8.0));
        assert_eq!(diameter(&g), Diameter::Finite(2));
        assert_eq!(
            g.adjacency_matrix(),
            complete(3)
                .unwrap()
                .adjacency_matrix()
                .kron(&SymMatrix::identity(3))
                .plus(&clex_m_matrix(3))
        );
    }

    #[test]
    fn m_spectrum_k2() {
        let s = clex_m_spectrum(2).unwrap();
        assert_eq!(s.values(), &[-2.0, 0.0, 2.0, 4.0]);
        let numeric = Spectrum::new(eigenvalues(&clex_m_matrix(2)).unwrap());
        assert!(numeric.matches(&s, 1e-12));
        assert!(clex_m_spectrum(1).is_err());
    }
}
