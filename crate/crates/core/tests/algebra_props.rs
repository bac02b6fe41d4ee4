use proptest::prelude::*;
use spectre_core::algebra::*;
use spectre_core::Spectrum;

fn raw_mul(p: u64, a: Mat2, b: Mat2) -> Mat2 {
    let e = |i: usize, j: usize| {
        ((a[2 * i] as u64 * b[j] as u64 + a[2 * i + 1] as u64 * b[2 + j] as u64) % p) as u32
    };
    [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
}

#[test]
fn four_square_counts() {
    for q in (5..=101u64).filter(|&q| is_prime(q) && q % 4 == 1) {
        assert_eq!(
            sum_of_squares_solutions(q).unwrap().len() as u64,
            q + 1,
            "q = {q}"
        );
    }
}

#[test]
fn lps_generators_are_invertible_and_closed() {
    for (p, q) in [(5, 13), (13, 17), (13, 5), (17, 13), (29, 5)] {
        let (group, set) = lps_generators(p, q).unwrap();
        assert_eq!(set.elements.len() as u64, q + 1);
        assert!(set.inverse_closed);
        assert!(is_inverse_closed(&group, &set.elements));
        for m in &set.elements {
            assert_ne!(group.det(*m), 0);
            assert_eq!(group.canonical(*m).unwrap(), *m);
        }
    }
}

fn arb_mat(p: u32) -> impl Strategy<Value = Mat2> {
    prop::array::uniform4(0..p)
}

proptest! {
    #[test]
    fn canonical_form_respects_multiplication(
        p in prop::sample::select(vec![5u64, 7, 13]),
        psl in any::<bool>(),
        x in arb_mat(13),
        y in arb_mat(13),
    ) {
        let kind = if psl { ProjectiveKind::Psl } else { ProjectiveKind::Pgl };
        let g = ProjectiveGroup::new(kind, p).unwrap();
        let x = x.map(|v| v % p as u32);
        let y = y.map(|v| v % p as u32);
        let (Ok(cx), Ok(cy)) = (g.canonical(x), g.canonical(y)) else { return Ok(()) };
        prop_assert_eq!(g.canonical(cx).unwrap(), cx);
        let whole = g.canonical(raw_mul(p, x, y)).unwrap();
        prop_assert_eq!(g.mul(cx, cy), whole);
        prop_assert_eq!(g.mul(cx, g.inverse(cx)), g.identity());
    }

    #[test]
    fn abelian_cayley_spectrum_matches_eigensolve(
        a in 2u32..8,
        b in 1u32..6,
        raw in prop::collection::vec((0i64..8, 0i64..6), 1..4),
    ) {
        let group = CyclicProduct::new(a, b).unwrap();
        let mut s = Vec::new();
        for (x, y) in raw {
            let e = group.reduce(x, y);
            s.push(e);
            s.push(group.inverse(e));
        }
        let g = cayley_graph(&group, &s).unwrap();
        prop_assert!(g.degree_profile().is_regular());
        let pairs: Vec<(i64, i64)> = s.iter().map(|&(x, y)| (x as i64, y as i64)).collect();
        let closed = abelian_cayley_spectrum(a, b, &pairs).unwrap();
        prop_assert!(Spectrum::adjacency(&g).unwrap().matches(&closed, 1e-8));
    }

    #[test]
    fn field_axioms(q in prop::sample::select(vec![4u64, 8, 9, 25, 27, 49]), i in 0u64..64, j in 0u64..64, l in 0u64..64) {
        let f = Field::of_order(q).unwrap();
        let els: Vec<_> = f.elements().collect();
        let (x, y, z) = (els[(i % q) as usize], els[(j % q) as usize], els[(l % q) as usize]);
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.add(x, f.neg(x)), f.zero());
        if x != f.zero() {
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        }
        prop_assert_eq!(f.multiplicative_order(f.primitive_element()), Some(q - 1));
    }
}
