use alloc::vec::Vec;

use super::{check_nodes, constraint};
use crate::algebra::field::{prime_power, Field};
use crate::graph::{Edge, Graph};
use crate::Result;

/// Index of `(s, x, y)`: `s·q² + x·q + y`, field elements by their integer
/// encoding.
pub fn slimfly_index(q: usize, s: usize, x: usize, y: usize) -> usize {
    s * q * q + x * q + y
}

/// The field used for `SF(q)` after checking `q` is a prime power `≡ 1 mod 4`.
pub fn slimfly_field(q: u64) -> Result<Field> {
    if prime_power(q).is_none() {
        return Err(constraint("slimfly needs q to be a prime power"));
    }
    if q % 4 != 1 {
        return Err(constraint("slimfly needs q = 1 mod 4"));
    }
    Field::of_order(q)
}

/// `SF(q)` on `{0,1} × 𝔽_q × 𝔽_q`.
///
/// Inside block 0, `(0,x,y) ~ (0,x,y')` when `y - y'` is an even power of a
/// primitive element `ζ`; inside block 1 the odd powers are used. Across,
/// `(0,x,y) ~ (1,m,c)` when `y = mx + c`.
pub fn slimfly(q: u64) -> Result<Graph> {
    let field = slimfly_field(q)?;
    check_nodes(2 * q * q)?;
    let qs = q as usize;
    let zeta = field.primitive_element();
    let powers: Vec<u32> = (0..q - 1).map(|i| field.pow(zeta, i)).collect();
    let even: Vec<u32> = powers.iter().step_by(2).copied().collect();
    let odd: Vec<u32> = powers.iter().skip(1).step_by(2).copied().collect();

    let n = 2 * qs * qs;
    let mut edges = Vec::with_capacity(n * (3 * qs - 1) / 4);
    for (s, diffs) in [(0, &even), (1, &odd)] {
        for x in 0..qs {
            for y in field.elements() {
                for &d in diffs.iter() {
                    let y2 = field.add(y, d);
                    if y < y2 {
                        edges.push(Edge {
                            u: slimfly_index(qs, s, x, y as usize),
                            v: slimfly_index(qs, s, x, y2 as usize),
                            w: 1.0,
                        });
                    }
                }
            }
        }
    }
    for x in field.elements() {
        for m in field.elements() {
            let mx = field.mul(m, x);
            for c in field.elements() {
                let y = field.add(mx, c);
                edges.push(Edge {
                    u: slimfly_index(qs, 0, x as usize, y as usize),
                    v: slimfly_index(qs, 1, m as usize, c as usize),
                    w: 1.0,
                });
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for q in [5u64, 9, 13] {
            let g = slimfly(q).unwrap();
            assert_eq!(g.vertex_count() as u64, 2 * q * q);
            assert_eq!(
                g.degree_profile().regularity(),
                Some(((3 * q - 1) / 2) as f64)
            );
            assert!(!g.has_loops());
        }
        assert!(slimfly(7).is_err());
        assert!(slimfly(21).is_err());
    }

    #[test]
    fn one_cross_edge_per_orbit_pair() {
        let g = slimfly(5).unwrap();
        let mut counts = [[0u32; 5]; 5];
        for e in g.edges() {
            if e.u < 25 && e.v >= 25 {
                counts[e.u / 5][(e.v - 25) / 5] += 1;
            }
        }
        assert!(counts.iter().flatten().all(|&c| c == 5));
    }
}
