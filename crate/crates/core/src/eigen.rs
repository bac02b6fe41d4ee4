//! Dense symmetric eigensolver.
//!
//! Householder reduction to tridiagonal form followed by implicit-shift QL
//! iteration, after the EISPACK `tred2`/`tql2` pair. The working matrix is kept
//! column-major so the hot loops walk contiguous memory.

use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering};

use crate::graph::SymMatrix;
use crate::math::{fabs, hypot, sqrt};
use crate::{Error, Result};

/// Default upper limit on the matrix dimension accepted by the solver.
pub const DEFAULT_MAX_DIMENSION: usize = 2500;

static MAX_DIMENSION: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DIMENSION);

const MAX_SWEEPS: usize = 64;

pub fn max_dimension() -> usize {
    MAX_DIMENSION.load(Ordering::Relaxed)
}

/// Overrides the dimension guard process-wide. Memory use is `O(n^2)` and time
/// `O(n^3)`, so large values are at the caller's risk.
pub fn set_max_dimension(n: usize) {
    MAX_DIMENSION.store(n, Ordering::Relaxed);
}

/// Eigenvalues and orthonormal eigenvectors, values ascending.
#[derive(Debug, Clone)]
pub struct Eigen {
    n: usize,
    pub values: Vec<f64>,
    // column j holds the eigenvector of values[j]
    vectors: Vec<f64>,
}

impl Eigen {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vector(&self, j: usize) -> &[f64] {
        &self.vectors[j * self.n..(j + 1) * self.n]
    }

    /// `‖Mv - λv‖₂` for pair `j`.
    pub fn residual(&self, m: &SymMatrix, j: usize) -> f64 {
        let v = self.vector(j);
        let mv = m.mul_vec(v);
        sqrt(
            mv.iter()
                .zip(v)
                .map(|(a, b)| {
                    let r = a - self.values[j] * b;
                    r * r
                })
                .sum(),
        )
    }
}

fn check(m: &SymMatrix) -> Result<usize> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let limit = max_dimension();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    for i in 0..n {
        for j in 0..=i {
            if !m.get(i, j).is_finite() {
                return Err(Error::NonFiniteEntry { i, j });
            }
            if fabs(m.get(i, j) - m.get(j, i)) > 1e-12 {
                return Err(Error::Asymmetric { i, j });
            }
        }
    }
    Ok(n)
}

/// All eigenvalues, ascending.
pub fn eigenvalues(m: &SymMatrix) -> Result<Vec<f64>> {
    let n = check(m)?;
    let mut v = m.as_slice().to_vec();
    let (mut d, mut e) = (vec![0.0; n], vec![0.0; n]);
    tred2(n, &mut v, &mut d, &mut e, false);
    tql2(n, None, &mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Full decomposition.
pub fn eigen(m: &SymMatrix) -> Result<Eigen> {
    let n = check(m)?;
    let mut v = m.as_slice().to_vec();
    let (mut d, mut e) = (vec![0.0; n], vec![0.0; n]);
    tred2(n, &mut v, &mut d, &mut e, true);
    tql2(n, Some(&mut v), &mut d, &mut e)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let values = order.iter().map(|&j| d[j]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &j in &order {
        vectors.extend_from_slice(&v[j * n..(j + 1) * n]);
    }
    Ok(Eigen { n, values, vectors })
}

// `a[c * n + r]` is entry (r, c). The input is symmetric so the initial
// row-major copy doubles as column-major.
fn tred2(n: usize, a: &mut [f64], d: &mut [f64], e: &mut [f64], accumulate: bool) {
    macro_rules! at {
        ($r:expr, $c:expr) => {
            a[($c) * n + ($r)]
        };
    }

    for j in 0..n {
        d[j] = at!(n - 1, j);
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for k in 0..i {
            scale += fabs(d[k]);
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = at!(i - 1, j);
                at!(i, j) = 0.0;
                at!(j, i) = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = sqrt(h);
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }

            for j in 0..i {
                f = d[j];
                at!(j, i) = f;
                g = e[j] + at!(j, j) * f;
                let col = &a[j * n..j * n + i];
                for k in (j + 1)..i {
                    g += col[k] * d[k];
                    e[k] += col[k] * f;
                }
                e[j] = g;
            }

            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                let col = &mut a[j * n..j * n + i];
                for k in j..i {
                    col[k] -= f * e[k] + g * d[k];
                }
                d[j] = at!(i - 1, j);
                at!(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    if !accumulate {
        for i in 0..n {
            d[i] = at!(i, i);
        }
        e[0] = 0.0;
        return;
    }

    for i in 0..n.saturating_sub(1) {
        at!(n - 1, i) = at!(i, i);
        at!(i, i) = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = at!(k, i + 1) / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += at!(k, i + 1) * at!(k, j);
                }
                for k in 0..=i {
                    at!(k, j) -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            at!(k, i + 1) = 0.0;
        }
    }
    for j in 0..n {
        d[j] = at!(n - 1, j);
        at!(n - 1, j) = 0.0;
    }
    at!(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

fn tql2(n: usize, mut v: Option<&mut [f64]>, d: &mut [f64], e: &mut [f64]) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;

    for l in 0..n {
        tst1 = tst1.max(fabs(d[l]) + fabs(e[l]));
        let mut m = l;
        while m < n - 1 && fabs(e[m]) > eps * tst1 {
            m += 1;
        }

        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(Error::NoConvergence);
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    if let Some(v) = v.as_deref_mut() {
                        let (left, right) = v.split_at_mut((i + 1) * n);
                        let ci = &mut left[i * n..];
                        let ci1 = &mut right[..n];
                        for k in 0..n {
                            let t = ci1[k];
                            ci1[k] = s * ci[k] + c * t;
                            ci[k] = c * ci[k] - s * t;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if fabs(e[l]) <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{cos, PI};

    fn cycle_adjacency(n: usize) -> SymMatrix {
        let mut rows = vec![vec![0.0; n]; n];
        for i in 0..n {
            rows[i][(i + 1) % n] += 1.0;
            rows[(i + 1) % n][i] += 1.0;
        }
        SymMatrix::from_rows(&rows).unwrap()
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{x} vs {y}");
        }
    }

    #[test]
    fn c4_spectrum() {
        let ev = eigenvalues(&cycle_adjacency(4)).unwrap();
        assert_close(&ev, &[-2.0, 0.0, 0.0, 2.0], 1e-12);
    }

    #[test]
    fn p3_spectrum() {
        let m = SymMatrix::from_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
        ])
        .unwrap();
        let s2 = 2f64.sqrt();
        assert_close(&eigenvalues(&m).unwrap(), &[-s2, 0.0, s2], 1e-12);
    }

    #[test]
    fn zero_and_one_by_one() {
        assert_eq!(eigenvalues(&SymMatrix::zeros(3)).unwrap(), vec![0.0; 3]);
        let m = SymMatrix::from_rows(&[vec![-4.5]]).unwrap();
        assert_eq!(eigenvalues(&m).unwrap(), vec![-4.5]);
        let e = eigen(&m).unwrap();
        assert_eq!(e.vector(0), &[1.0]);
    }

    #[test]
    fn empty_is_rejected() {
        assert_eq!(eigenvalues(&SymMatrix::zeros(0)), Err(Error::EmptyMatrix));
    }

    #[test]
    fn long_cycle_matches_cosines() {
        let n = 37;
        let ev = eigenvalues(&cycle_adjacency(n)).unwrap();
        let mut want: Vec<f64> = (0..n)
            .map(|j| 2.0 * cos(2.0 * PI * j as f64 / n as f64))
            .collect();
        want.sort_by(f64::total_cmp);
        assert_close(&ev, &want, 1e-12);
    }

    #[test]
    fn decomposition_residuals_and_orthogonality() {
        // a dense, non-structured symmetric matrix
        let n = 12;
        let mut rows = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let x = ((i * 7 + j * 13) % 11) as f64 - 5.0 + 0.25 * (i as f64);
                rows[i][j] = x;
                rows[j][i] = x;
            }
        }
        let m = SymMatrix::from_rows(&rows).unwrap();
        let e = eigen(&m).unwrap();
        let only = eigenvalues(&m).unwrap();
        assert_close(&e.values, &only, 1e-10);
        for j in 0..n {
            assert!(e.residual(&m, j) <= 1e-10 * m.frobenius_norm());
            for k in 0..n {
                let dot: f64 = e
                    .vector(j)
                    .iter()
                    .zip(e.vector(k))
                    .map(|(a, b)| a * b)
                    .sum();
                let want = if j == k { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-10);
            }
        }
        // trace is preserved
        let trace: f64 = (0..n).map(|i| m.get(i, i)).sum();
        assert!((only.iter().sum::<f64>() - trace).abs() < 1e-9);
    }

    #[test]
    fn guard_rejects_large() {
        // the guard is global, so only read it here
        let limit = max_dimension();
        let m = SymMatrix::zeros(limit + 1);
        assert_eq!(
            eigenvalues(&m),
            Err(Error::TooLarge {
                n: limit + 1,
                limit
            })
        );
    }
}
