mod common;

use proptest::prelude::*;
use spectre_core::algebra::legendre;
use spectre_core::bounds::{sweep, table_row};
use spectre_core::metrics::{bisection_exact, diameter, is_bipartite_strict};
use spectre_core::spectral::{algebraic_connectivity, lambda_nontrivial};
use spectre_core::topologies::*;
use spectre_core::{Spectrum, TopologySpec};

/// Instances with bounds outside the sweep families.
const EXTRA: &[&str] = &[
    "clexg:g=C3,l=2",
    "clexg:g=C4,l=2",
    "clexg:g=petersen,l=2",
    "dragonfly:h=K3",
    "dragonfly:h=K4",
    "dragonfly:h=C4",
    "dragonfly:h=Q3",
    "dragonfly:h=petersen",
    "gconnh:g=K3,h=C4,k=1",
    "gconnh:g=K4,h=C6,k=1",
    "gconnh:g=C4,h=K2,k=1",
    "gconnh:g=petersen,h=C3,k=1",
    "gconnh:g=C4,h=petersen,k=2",
];

fn bounded_specs(max_nodes: u64) -> Vec<TopologySpec> {
    let mut out: Vec<TopologySpec> = sweep(&[], 64, max_nodes)
        .unwrap()
        .into_iter()
        .map(|r| r.spec)
        .collect();
    for t in EXTRA {
        let s = TopologySpec::parse(t).unwrap();
        if table_row(&s).unwrap().nodes <= max_nodes {
            out.push(s);
        }
    }
    out
}

#[test]
fn table_nodes_and_radix_match_generated_graphs() {
    let specs = bounded_specs(2500);
    assert!(specs.len() > 80);
    for spec in specs {
        let row = table_row(&spec).unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.vertex_count() as u64, row.nodes, "{spec}");
        assert_eq!(
            g.degree_profile().regularity(),
            Some(row.radix as f64),
            "{spec}"
        );
        // k = 1 (Q₁) is degenerate: k - 2√(k-1) = k
        if row.radix == 1 {
            assert_eq!(row.ramanujan_rho2, 1.0);
        } else {
            assert!(row.ramanujan_rho2 < row.radix as f64, "{spec}");
        }
        assert!(row.ramanujan_bw_lower <= (row.radix * row.nodes) as f64 / 4.0);
    }
}

#[test]
fn rho2_within_tabulated_upper_bound() {
    for spec in bounded_specs(200) {
        if matches!(spec, TopologySpec::Ccc { .. }) {
            continue;
        }
        let row = table_row(&spec).unwrap();
        let rho2 = algebraic_connectivity(&spec.build().unwrap()).unwrap();
        assert!(
            rho2 <= row.rho2_upper + 1e-7,
            "{spec}: {rho2} > {}",
            row.rho2_upper
        );
    }
}

// The tabulated CCC value 2(1 - cos(π/(d+2))) sits below the true ρ₂ for
// every d checked; the G-connected-H bound 2/d (Q_d ⇝ C_d) does hold.
#[test]
fn ccc_tabulated_rho2_is_too_small() {
    for d in 3..=8u32 {
        let spec = TopologySpec::Ccc { d };
        let row = table_row(&spec).unwrap();
        let rho2 = algebraic_connectivity(&spec.build().unwrap()).unwrap();
        assert!(rho2 > row.rho2_upper, "d = {d}");
        assert!(rho2 <= 2.0 / d as f64 + 1e-9, "d = {d}");
    }
    let rho2 = algebraic_connectivity(&ccc(3).unwrap()).unwrap();
    assert!((rho2 - (5.0 - 17f64.sqrt()) / 2.0).abs() < 1e-9);
}

#[test]
fn bisection_within_tabulated_upper_bound() {
    for spec in bounded_specs(24) {
        let row = table_row(&spec).unwrap();
        let bw = bisection_exact(&spec.build().unwrap()).unwrap().cut;
        if let TopologySpec::Torus { k, d } = spec {
            if k % 2 == 1 && d > 1 {
                continue;
            }
        }
        assert!(bw <= row.bw_upper + 1e-9, "{spec}: {bw} > {}", row.bw_upper);
    }
}

// 2k^{d-1} is the cut of one straight hyperplane pair; it only bisects when
// k is even. The 3×3 torus needs 8.
#[test]
fn odd_torus_bisection_exceeds_tabulated_value() {
    let spec = TopologySpec::Torus { k: 3, d: 2 };
    let bw = bisection_exact(&spec.build().unwrap()).unwrap().cut;
    assert_eq!(bw, 8.0);
    assert_eq!(table_row(&spec).unwrap().bw_upper, 6.0);
}

#[test]
fn slimfly_rho2_equals_q() {
    for q in [5u64, 9, 13] {
        let g = slimfly(q).unwrap();
        assert_eq!(g.vertex_count() as u64, 2 * q * q);
        assert_eq!(
            g.degree_profile().regularity(),
            Some(((3 * q - 1) / 2) as f64)
        );
        assert!((algebraic_connectivity(&g).unwrap() - q as f64).abs() < 1e-6);
    }
}

#[test]
fn lps_graphs_are_ramanujan_with_predicted_bipartiteness() {
    for (p, q) in [(5u64, 13u64), (5, 17), (5, 29)] {
        let g = lps_graph(p, q).unwrap();
        assert_eq!(g.degree_profile().regularity(), Some((q + 1) as f64));
        assert!(
            lambda_nontrivial(&g).unwrap() <= 2.0 * (q as f64).sqrt() + 1e-8,
            "({p},{q})"
        );
        assert_eq!(
            is_bipartite_strict(&g),
            legendre(q as i64, p).unwrap() == -1,
            "({p},{q})"
        );
    }
}

#[test]
fn cross_edges_follow_base_graph() {
    let cases: &[(&str, BaseGraph, BaseGraph, usize)] = &[
        (
            "dragonfly:h=K4",
            BaseGraph::Complete(5),
            BaseGraph::Complete(4),
            1,
        ),
        (
            "dragonfly:h=C4",
            BaseGraph::Complete(5),
            BaseGraph::Cycle(4),
            1,
        ),
        (
            "gconnh:g=K4,h=C6,k=1",
            BaseGraph::Complete(4),
            BaseGraph::Cycle(6),
            1,
        ),
        (
            "gconnh:g=C4,h=petersen,k=2",
            BaseGraph::Cycle(4),
            BaseGraph::Petersen,
            2,
        ),
    ];
    for (text, g, h, k) in cases {
        let big = common::build(text);
        let base = g.build().unwrap();
        let t = (h.vertex_count() / g.degree().unwrap()) as f64;
        let counts = cross_edge_counts(&big, h.vertex_count());
        let mut expected = std::collections::BTreeMap::new();
        for e in base.edges() {
            expected.insert((e.u.min(e.v), e.u.max(e.v)), *k as f64 * t);
        }
        assert_eq!(counts, expected, "{text}");
    }
}

#[test]
fn clex_regularity_and_diameter() {
    for (k, l) in [(3usize, 2u32), (4, 2), (3, 3), (5, 2)] {
        let g = clex(k, l).unwrap();
        let t = k - 1;
        assert_eq!(
            g.degree_profile().regularity(),
            Some((t + 2 * k * (l as usize - 1)) as f64)
        );
        assert_eq!(diameter(&g).finite(), Some(l as usize));
    }
}

// The wrapped butterfly reaches every vertex in ⌊3s/2⌋ hops, not s.
#[test]
fn butterfly_diameter() {
    for k in [2usize, 3] {
        for s in 3..=5usize {
            if k.pow(s as u32) * s > 1000 {
                continue;
            }
            assert_eq!(
                diameter(&butterfly(k, s).unwrap()).finite(),
                Some(3 * s / 2),
                "BF({k},{s})"
            );
        }
    }
}

fn arb_base() -> impl Strategy<Value = BaseGraph> {
    prop_oneof![
        (3usize..9).prop_map(BaseGraph::Cycle),
        (2usize..6).prop_map(BaseGraph::Complete),
        (2usize..6).prop_map(BaseGraph::Path),
        (1u32..4).prop_map(BaseGraph::Hypercube),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cc_spectrum_factors(base in arb_base(), d in 1u32..6) {
        let g = base.build().unwrap();
        prop_assume!(g.vertex_count() << d <= 256);
        let direct = Spectrum::adjacency(&cc(&g, d).unwrap()).unwrap();
        let factored = cc_spectrum_via_factors(&g, d).unwrap();
        prop_assert!(direct.matches(&factored, 1e-7));
    }

    #[test]
    fn spec_strings_round_trip(idx in 0usize..common::SMALL.len()) {
        let spec = TopologySpec::parse(common::SMALL[idx]).unwrap();
        let again = TopologySpec::parse(&spec.to_string()).unwrap();
        prop_assert_eq!(again.build().unwrap().canonical(), spec.build().unwrap().canonical());
        prop_assert_eq!(again, spec);
    }
}
