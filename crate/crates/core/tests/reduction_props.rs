mod common;

use proptest::prelude::*;
use spectre_core::reduction::*;
use spectre_core::topologies::automorphisms::*;
use spectre_core::topologies::*;
use spectre_core::{Graph, Spectrum};

fn fixtures() -> Vec<(&'static str, Graph, Vec<Permutation>)> {
    vec![
        (
            "butterfly(2,3)",
            butterfly(2, 3).unwrap(),
            butterfly_layer_shifts(2, 3),
        ),
        (
            "butterfly(3,4)",
            butterfly(3, 4).unwrap(),
            butterfly_layer_shifts(3, 4),
        ),
        (
            "datavortex(4,3)",
            data_vortex(4, 3).unwrap(),
            data_vortex_bit_flips(4, 3),
        ),
        (
            "datavortex(3,4)",
            data_vortex(3, 4).unwrap(),
            data_vortex_bit_flips(3, 4),
        ),
        (
            "slimfly(5)",
            slimfly(5).unwrap(),
            slimfly_shifts(5).unwrap(),
        ),
        (
            "slimfly(9)",
            slimfly(9).unwrap(),
            slimfly_shifts(9).unwrap(),
        ),
        (
            "fattree(4)",
            fat_tree(4).unwrap(),
            fat_tree_swaps(4).unwrap(),
        ),
    ]
}

#[test]
fn fixture_quotients_are_contained_and_balanced() {
    for (name, g, gens) in fixtures() {
        assert!(gens.iter().all(|p| check_automorphism(&g, p)), "{name}");
        let part = orbits(g.vertex_count(), &gens).unwrap();
        for (o, members) in part.members().iter().enumerate() {
            for p in &gens {
                assert!(
                    members.iter().all(|&v| part.orbit_of(p.apply(v)) == o),
                    "{name}"
                );
            }
        }
        let q = quotient(&g, &part).unwrap();
        q.check_detailed_balance(0.0).unwrap();
        let sub = quotient_spectrum(&q).unwrap();
        assert!(
            verify_containment(&sub, &Spectrum::adjacency(&g).unwrap(), 1e-7),
            "{name}"
        );
    }
}

#[test]
fn haemers_interlacing_on_copy_partitions() {
    for text in [
        "dragonfly:h=K4",
        "dragonfly:h=C4",
        "dragonfly:h=petersen",
        "gconnh:g=K4,h=C6,k=1",
        "gconnh:g=C4,h=petersen,k=2",
        "gconnh:g=petersen,h=C3,k=1",
        "ccc:d=4",
        "clexg:g=C4,l=2",
    ] {
        let spec = spectre_core::TopologySpec::parse(text).unwrap();
        let g = spec.build().unwrap();
        let copy = match &spec {
            spectre_core::TopologySpec::DragonFly { h } => h.vertex_count(),
            spectre_core::TopologySpec::GConnH { h, .. } => h.vertex_count(),
            spectre_core::TopologySpec::Ccc { d } => *d as usize,
            spectre_core::TopologySpec::ClexGeneral { g, .. } => g.vertex_count(),
            _ => unreachable!(),
        };
        let labels: Vec<usize> = (0..g.vertex_count()).map(|v| v / copy).collect();
        let part = OrbitPartition::from_labels(&labels);
        let q = haemers_quotient(&g, &part).unwrap();
        let b = Spectrum::of(&symmetrized(&q).unwrap()).unwrap();
        let a = Spectrum::adjacency(&g).unwrap();
        assert!(
            b.largest(1).unwrap() <= a.largest(1).unwrap() + 1e-7,
            "{text}"
        );
    }
}

#[test]
fn non_automorphisms_and_bad_partitions_are_rejected() {
    let g = path(4).unwrap();
    let shift = Permutation::new(vec![1, 2, 3, 0]).unwrap();
    assert!(!check_automorphism(&g, &shift));
    assert!(Permutation::new(vec![0, 0, 1]).is_err());
    let part = OrbitPartition::from_labels(&[0, 1, 1, 0]);
    assert!(quotient(&g, &part).is_ok());
    let part = OrbitPartition::from_labels(&[0, 0, 1, 1]);
    assert!(quotient(&g, &part).is_err());
}

#[test]
fn fat_tree_level_weights() {
    let g = fat_tree(4).unwrap();
    let part = OrbitPartition::from_labels(&fat_tree_levels(4));
    let q = quotient(&g, &part).unwrap();
    let up: Vec<f64> = (1..5).map(|i| q.weight(i, i - 1)).collect();
    let down: Vec<f64> = (0..4).map(|i| q.weight(i, i + 1)).collect();
    assert_eq!(up, [8.0, 4.0, 2.0, 1.0]);
    assert_eq!(down, [16.0, 8.0, 4.0, 2.0]);
}

proptest! {
    #[test]
    fn haemers_quotients_balance(
        raw in prop::collection::vec((0usize..10, 0usize..10, 1u32..5), 1..30),
        labels in prop::collection::vec(0usize..4, 10),
    ) {
        let g = Graph::new(10, raw.into_iter().map(|(u, v, w)| (u, v, w as f64))).unwrap();
        let part = OrbitPartition::from_labels(&labels);
        let q = haemers_quotient(&g, &part).unwrap();
        prop_assert!(q.check_detailed_balance(1e-12).is_ok());
        let total: f64 = (0..q.orbit_count())
            .flat_map(|i| (0..q.orbit_count()).map(move |j| (i, j)))
            .map(|(i, j)| q.sizes()[i] as f64 * q.weight(i, j))
            .sum();
        let adj_total: f64 = g.adjacency_matrix().as_slice().iter().sum();
        prop_assert!((total - adj_total).abs() < 1e-9);
    }

    #[test]
    fn orbits_are_invariant(images in prop::collection::vec(Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(), 1..3)) {
        let gens: Vec<Permutation> = images.into_iter().map(|v| Permutation::new(v).unwrap()).collect();
        let part = orbits(8, &gens).unwrap();
        for p in &gens {
            prop_assert_eq!(p.compose(&p.inverse()), Permutation::identity(8));
            for v in 0..8 {
                prop_assert_eq!(part.orbit_of(p.apply(v)), part.orbit_of(v));
            }
        }
        prop_assert_eq!(part.sizes().iter().sum::<usize>(), 8);
    }
}
