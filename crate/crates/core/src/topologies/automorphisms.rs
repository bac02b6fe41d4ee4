//! Automorphism generators for the reduction fixtures.

use alloc::vec::Vec;

use super::butterfly::butterfly_index;
use super::constraint;
use super::slimfly::{slimfly_field, slimfly_index};
use crate::reduction::Permutation;
use crate::Result;

fn perm(image: Vec<usize>) -> Permutation {
    Permutation::new(image).expect("fixture maps are bijections")
}

/// For each coordinate `j`, the shift `a_j ↦ a_j + 1` on every layer. The
/// orbits are the `s` layers.
pub fn butterfly_layer_shifts(k: usize, s: usize) -> Vec<Permutation> {
    let per_layer = k.pow(s as u32);
    (0..s)
        .map(|j| {
            let place = k.pow((s - 1 - j) as u32);
            perm(
                (0..s * per_layer)
                    .map(|v| {
                        let (layer, off) = (v / per_layer, v % per_layer);
                        let digit = off / place % k;
                        let off = off - digit * place + (digit + 1) % k * place;
                        layer * per_layer + off
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Layer index of each butterfly vertex.
pub fn butterfly_layers(k: usize, s: usize) -> Vec<usize> {
    let per_layer = butterfly_index(k, s, 1, &alloc::vec![0; s]);
    (0..s * per_layer).map(|v| v / per_layer).collect()
}

/// Height bit flips `h ↦ h ⊕ e_b`, one per bit. The orbits are the `A·C`
/// fibres `{(a, c)} × ℤ₂^{C-1}`.
pub fn data_vortex_bit_flips(a_total: usize, c_total: usize) -> Vec<Permutation> {
    let heights = 1usize << (c_total - 1);
    let n = a_total * c_total * heights;
    (0..c_total - 1)
        // h sits in the low C-1 bits of the index
        .map(|b| perm((0..n).map(|v| v ^ (1 << b)).collect()))
        .collect()
}

/// Translations `y ↦ y + ζ^i` on both blocks for `i < e` where `q = p^e`.
/// The `ζ^i` span `𝔽_q` over `𝔽_p`, so the orbits are the `2q` lines
/// `{s} × {x} × 𝔽_q`.
pub fn slimfly_shifts(q: u64) -> Result<Vec<Permutation>> {
    let field = slimfly_field(q)?;
    let qs = q as usize;
    let zeta = field.primitive_element();
    Ok((0..field.degree() as u64)
        .map(|i| {
            let t = field.pow(zeta, i);
            let mut image = alloc::vec![0; 2 * qs * qs];
            for s in 0..2 {
                for x in 0..qs {
                    for y in field.elements() {
                        image[slimfly_index(qs, s, x, y as usize)] =
                            slimfly_index(qs, s, x, field.add(y, t) as usize);
                    }
                }
            }
            perm(image)
        })
        .collect())
}

fn swap_subtrees(image: &mut [usize], a: usize, b: usize) {
    if b >= image.len() {
        return;
    }
    image[a] = b;
    image[b] = a;
    swap_subtrees(image, 2 * a + 1, 2 * b + 1);
    swap_subtrees(image, 2 * a + 2, 2 * b + 2);
}

/// For each internal node, the swap of its two child subtrees. The orbits are
/// the tree levels.
pub fn fat_tree_swaps(levels: u32) -> Result<Vec<Permutation>> {
    if !(2..=10).contains(&levels) {
        return Err(constraint("fat tree needs 2 <= levels <= 10"));
    }
    let n = (1usize << (levels + 1)) - 1;
    let internal = (1usize << levels) - 1;
    Ok((0..internal)
        .map(|v| {
            let mut image: Vec<usize> = (0..n).collect();
            swap_subtrees(&mut image, 2 * v + 1, 2 * v + 2);
            perm(image)
        })
        .collect())
}

/// Depth of each fat-tree vertex in heap order.
pub fn fat_tree_levels(levels: u32) -> Vec<usize> {
    let n = (1usize << (levels + 1)) - 1;
    (0..n)
        .map(|v| (usize::BITS - 1 - (v + 1).leading_zeros()) as usize)
        .collect()
}
