//! Closed-form per-family bounds, the Ramanujan comparison columns and
//! parameter sweeps.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::field::prime_power;
use crate::math::{cos, PI};
use crate::spectral::{fiedler_bw_lower, ramanujan_bound};
use crate::topologies::{BaseGraph, TopologySpec};
use crate::{Error, Result};

/// One row of the bounds table.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRow {
    pub spec: TopologySpec,
    pub nodes: u64,
    pub radix: u64,
    pub rho2_upper: f64,
    pub bw_upper: f64,
    pub ramanujan_rho2: f64,
    pub ramanujan_bw_lower: f64,
    pub prop_bw_upper: f64,
    pub ramanujan_prop_bw_lower: f64,
    /// Alternative values and caveats for this row's cells.
    pub notes: Vec<String>,
}

impl BoundsRow {
    fn new(spec: &TopologySpec, nodes: u64, radix: u64, rho2_upper: f64, bw_upper: f64) -> Self {
        let k = radix as f64;
        let n = nodes as f64;
        let ramanujan_rho2 = k - ramanujan_bound(k);
        let ramanujan_bw_lower = fiedler_bw_lower(ramanujan_rho2, nodes as usize);
        BoundsRow {
            spec: spec.clone(),
            nodes,
            radix,
            rho2_upper,
            bw_upper,
            ramanujan_rho2,
            ramanujan_bw_lower,
            prop_bw_upper: bw_upper / (k * n),
            ramanujan_prop_bw_lower: ramanujan_bw_lower / (k * n),
            notes: Vec::new(),
        }
    }

    fn note(mut self, text: String) -> Self {
        self.notes.push(text);
        self
    }
}

/// `(1 - 2√(k-1)/k) / 4`, the Ramanujan proportional bisection floor.
pub fn ramanujan_prop_bw(k: f64) -> f64 {
    (1.0 - ramanujan_bound(k) / k) / 4.0
}

/// `k - k·λ₂(G)/d`.
pub fn gconnh_rho2_upper(lambda2_g: f64, d: u64, k: u64) -> f64 {
    k as f64 - k as f64 * lambda2_g / d as f64
}

/// `(|G|·|H| / (2‖G‖))·k·BW(G) + BW(H)`.
pub fn gconnh_bw_upper(
    size_g: u64,
    order_g: u64,
    size_h: u64,
    k: u64,
    bw_g: f64,
    bw_h: f64,
) -> f64 {
    (size_g * size_h) as f64 / (2 * order_g) as f64 * k as f64 * bw_g + bw_h
}

/// `1 + k Σ_{i<d} (k-1)^i`.
pub fn moore_bound(k: u64, d: u32) -> u64 {
    1 + k * (0..d).map(|i| (k - 1).pow(i)).sum::<u64>()
}

/// Bisection bound for a `q`-regular Moore graph of diameter `d`.
pub fn moore_graph_bw_upper(q: u64, d: u32) -> f64 {
    let qf = q as f64;
    let tail = (q - 1).pow(d.saturating_sub(1)) as f64;
    if q.is_multiple_of(2) {
        qf / 2.0 + qf * qf / 4.0 * tail
    } else {
        qf + (qf * qf - 1.0) / 4.0 * tail
    }
}

fn rule(msg: &str) -> Error {
    Error::Constraint(String::from(msg))
}

fn base_degree(b: &BaseGraph) -> Result<u64> {
    b.degree()
        .map(|d| d as u64)
        .ok_or_else(|| rule("base graph must be regular"))
}

/// Edge count of a regular base graph.
fn base_order(b: &BaseGraph) -> Result<u64> {
    Ok(b.vertex_count() as u64 * base_degree(b)? / 2)
}

fn checked_pow(b: u64, e: u32) -> Result<u64> {
    b.checked_pow(e)
        .ok_or_else(|| rule("parameters overflow the node count"))
}

/// The bounds row for `spec`, every column from closed forms.
pub fn table_row(spec: &TopologySpec) -> Result<BoundsRow> {
    let row = match spec {
        TopologySpec::Butterfly { k, s } => {
            let (k, s) = (*k as u64, *s as u64);
            if s < 3 {
                return Err(rule("butterfly bounds need s >= 3"));
            }
            if k < 2 {
                return Err(rule("butterfly needs k >= 2"));
            }
            let kf = k as f64;
            let ks = checked_pow(k, s as u32)?;
            let rho = 2.0 * kf - 2.0 * kf * cos(2.0 * PI / s as f64);
            BoundsRow::new(spec, s * ks, 2 * k, rho, ((k + 1) * ks) as f64 / 2.0).note(format!(
                "rho2 asymptotic form 4*pi^2*k/s^2 = {}",
                4.0 * PI * PI * kf / (s * s) as f64
            ))
        }
        TopologySpec::Ccc { d } => {
            if *d < 3 {
                return Err(rule("ccc needs d >= 3"));
            }
            let df = *d as f64;
            let rho = 2.0 * (1.0 - cos(PI / (df + 2.0)));
            BoundsRow::new(spec, *d as u64 * checked_pow(2, *d)?, 3, rho, checked_pow(2, d - 1)? as f64)
                .note(format!("rho2 asymptotic form pi^2/(d+2)^2 = {}", PI * PI / ((df + 2.0) * (df + 2.0))))
                .note(format!(
                    "rho2 bound from CCC = Q_d ~> C_d, which unlike the tabulated value holds for every d: {}",
                    gconnh_rho2_upper(df - 2.0, *d as u64, 1)
                ))
        }
        TopologySpec::Clex { k, l } => {
            let (k, l) = (*k as u64, *l);
            if k < 3 {
                return Err(rule("clex bounds need a complete base on k >= 3 vertices"));
            }
            if l < 2 {
                return Err(rule("clex bounds need l >= 2"));
            }
            let t = k - 1;
            BoundsRow::new(
                spec,
                checked_pow(k, l)?,
                t + 2 * k * (l as u64 - 1),
                (t + 3 * k - 1) as f64,
                checked_pow(k, l + 1)? as f64,
            )
            .note(format!(
                "rho2 value from the proof's last line t+3k+1 = {}",
                t + 3 * k + 1
            ))
        }
        TopologySpec::ClexGeneral { g, l } => {
            if *l < 2 {
                return Err(rule("clex bounds need l >= 2"));
            }
            let t = base_degree(g)?;
            let k = g.vertex_count() as u64;
            BoundsRow::new(
                spec,
                checked_pow(k, *l)?,
                t + 2 * k * (*l as u64 - 1),
                (t + 3 * k - 1) as f64,
                checked_pow(k, l + 1)? as f64,
            )
            .note(format!(
                "rho2 value from the proof's last line t+3k+1 = {}",
                t + 3 * k + 1
            ))
        }
        TopologySpec::DataVortex { a, c } => {
            let (a, c) = (*a as u64, *c as u64);
            if c < 3 {
                return Err(rule("data vortex bounds need C >= 3"));
            }
            if a < 3 {
                return Err(rule("data vortex needs A >= 3"));
            }
            let rho = (2.0 - 2.0 * cos(PI / c as f64)).min(2.0 - 2.0 * cos(2.0 * PI / a as f64));
            let h = checked_pow(2, c as u32 - 2)?;
            BoundsRow::new(spec, a * c * 2 * h, 4, rho, (a * h) as f64)
        }
        TopologySpec::DragonFly { h } => {
            if let BaseGraph::Butterfly(_, s) = h {
                if *s < 3 {
                    return Err(rule("dragonfly over a butterfly needs s >= 3"));
                }
            }
            let r = base_degree(h)?;
            let nh = h.vertex_count() as u64;
            let half = (nh as f64 + 1.0) / 2.0;
            BoundsRow::new(
                spec,
                nh * nh + nh,
                r + 1,
                1.0 + 1.0 / nh as f64,
                half * half + h.bw_upper(),
            )
        }
        TopologySpec::GConnH { g, h, k } => {
            let d = base_degree(g)?;
            let r = base_degree(h)?;
            let (ng, nh, k) = (g.vertex_count() as u64, h.vertex_count() as u64, *k as u64);
            if d == 0 || nh % d != 0 {
                return Err(rule("|V(H)| must be a positive multiple of deg(G)"));
            }
            let rho = gconnh_rho2_upper(g.lambda2()?, d, k);
            let bw = gconnh_bw_upper(ng, base_order(g)?, nh, k, g.bw_upper(), h.bw_upper());
            BoundsRow::new(spec, ng * nh, r + k, rho, bw)
        }
        TopologySpec::Hypercube { d } => {
            if *d < 1 {
                return Err(rule("hypercube needs d >= 1"));
            }
            BoundsRow::new(
                spec,
                checked_pow(2, *d)?,
                *d as u64,
                2.0,
                checked_pow(2, d - 1)? as f64,
            )
        }
        TopologySpec::PetersonTorus { a, b } => {
            let (a, b) = (*a as u64, *b as u64);
            if b < 2 || a < b || a < 3 {
                return Err(rule("Peterson torus bounds need a >= b >= 2 and a >= 3"));
            }
            if a % 2 == 0 && b % 2 == 0 {
                return Err(rule("Peterson torus needs a or b odd"));
            }
            let af = a as f64;
            let rho = (4.0 - 3.0 * cos(4.0 * PI / af) - cos(2.0 * PI / af)) / 5.0;
            BoundsRow::new(spec, 10 * a * b, 4, rho, (6 * b + a * b + 5) as f64)
        }
        TopologySpec::SlimFly { q } => {
            let q = *q;
            if prime_power(q).is_none() || q % 4 != 1 {
                return Err(rule("slimfly needs a prime power q = 1 mod 4"));
            }
            BoundsRow::new(
                spec,
                2 * q * q,
                (3 * q - 1) / 2,
                q as f64,
                (q * q * q + q) as f64 / 2.0,
            )
        }
        TopologySpec::Torus { k, d } => {
            let (k, d) = (*k as u64, *d);
            if k < 3 {
                return Err(rule("torus needs k >= 3"));
            }
            if d < 1 {
                return Err(rule("torus needs d >= 1"));
            }
            let rho = 2.0 * (1.0 - cos(2.0 * PI / k as f64));
            BoundsRow::new(
                spec,
                checked_pow(k, d)?,
                2 * d as u64,
                rho,
                2.0 * checked_pow(k, d - 1)? as f64,
            )
        }
        other => return Err(Error::NoBounds(String::from(other.family()))),
    };
    Ok(row)
}

/// Families enumerated by [`sweep`].
pub const SWEEP_FAMILIES: [&str; 9] = [
    "butterfly",
    "ccc",
    "clex",
    "datavortex",
    "dragonfly",
    "hypercube",
    "pt",
    "slimfly",
    "torus",
];

/// Largest value of a family's free size parameter (`k` for tori, `A` for
/// the Data Vortex, `a` for the Peterson torus) in a sweep.
pub const SWEEP_MAX_SIDE: usize = 64;

fn family_specs(family: &str, max_radix: u64, max_nodes: u64) -> Vec<TopologySpec> {
    let mut out = Vec::new();
    let fits = |nodes: u64, radix: u64| nodes <= max_nodes && radix <= max_radix;
    match family {
        "hypercube" => {
            for d in 1..=63u32 {
                if fits(1 << d, d as u64) {
                    out.push(TopologySpec::Hypercube { d });
                }
            }
        }
        "torus" => {
            for k in 3..=SWEEP_MAX_SIDE {
                for d in 1..=(max_radix / 2) as u32 {
                    match (k as u64).checked_pow(d) {
                        Some(n) if n <= max_nodes => out.push(TopologySpec::Torus { k, d }),
                        _ => break,
                    }
                }
            }
        }
        "butterfly" => {
            for k in 2..=(max_radix / 2) as usize {
                for s in 3..=64usize {
                    match (k as u64)
                        .checked_pow(s as u32)
                        .and_then(|x| x.checked_mul(s as u64))
                    {
                        Some(n) if n <= max_nodes => out.push(TopologySpec::Butterfly { k, s }),
                        _ => break,
                    }
                }
            }
        }
        "ccc" => {
            for d in 3..=40u32 {
                if fits(d as u64 * (1 << d), 3) {
                    out.push(TopologySpec::Ccc { d });
                }
            }
        }
        "clex" => {
            for k in 3..=max_radix as usize {
                for l in 2..=64u32 {
                    let radix = (2 * l as u64 * k as u64).saturating_sub(k as u64 + 1);
                    match (k as u64).checked_pow(l) {
                        Some(n) if fits(n, radix) => out.push(TopologySpec::Clex { k, l }),
                        _ => break,
                    }
                }
            }
        }
        "datavortex" => {
            if max_radix >= 4 {
                for a in 3..=SWEEP_MAX_SIDE {
                    for c in 3..=40usize {
                        if (a * c) as u64 * (1u64 << (c - 1)) > max_nodes {
                            break;
                        }
                        out.push(TopologySpec::DataVortex { a, c });
                    }
                }
            }
        }
        "dragonfly" => {
            for n in 2..=max_radix as usize {
                if fits((n * n + n) as u64, n as u64) {
                    out.push(TopologySpec::DragonFly {
                        h: BaseGraph::Complete(n),
                    });
                }
            }
            for k in 2..=(max_radix as usize).saturating_sub(1) / 2 {
                for s in 3..=16usize {
                    let nh = (k as u64).checked_pow(s as u32).map(|x| x * s as u64);
                    match nh.and_then(|x| x.checked_mul(x + 1)) {
                        Some(n) if fits(n, 2 * k as u64 + 1) => out.push(TopologySpec::DragonFly {
                            h: BaseGraph::Butterfly(k, s),
                        }),
                        _ => break,
                    }
                }
            }
        }
        "pt" => {
            if max_radix >= 4 {
                for a in 3..=SWEEP_MAX_SIDE {
                    for b in 2..=a {
                        if (a % 2 == 1 || b % 2 == 1) && 10 * (a * b) as u64 <= max_nodes {
                            out.push(TopologySpec::PetersonTorus { a, b });
                        }
                    }
                }
            }
        }
        "slimfly" => {
            let mut q = 5u64;
            while 2 * q * q <= max_nodes {
                if prime_power(q).is_some() && (3 * q - 1) / 2 <= max_radix {
                    out.push(TopologySpec::SlimFly { q });
                }
                q += 4;
            }
        }
        _ => {}
    }
    out
}

/// Rows for every admissible parameter point of the chosen families (all of
/// [`SWEEP_FAMILIES`] when `families` is empty) with radix at most
/// `max_radix` and at most `max_nodes` nodes, sorted by family, then nodes,
/// then parameters.
pub fn sweep(families: &[&str], max_radix: u64, max_nodes: u64) -> Result<Vec<BoundsRow>> {
    let chosen: Vec<&str> = if families.is_empty() {
        SWEEP_FAMILIES.to_vec()
    } else {
        families.to_vec()
    };
    let mut rows = Vec::new();
    for f in chosen {
        if !SWEEP_FAMILIES.contains(&f) {
            return Err(Error::NoBounds(String::from(f)));
        }
        for spec in family_specs(f, max_radix, max_nodes) {
            let row = table_row(&spec)?;
            if row.radix <= max_radix && row.nodes <= max_nodes {
                rows.push(row);
            }
        }
    }
    rows.sort_by(|a, b| {
        (a.spec.family(), a.nodes, a.spec.params()).cmp(&(
            b.spec.family(),
            b.nodes,
            b.spec.params(),
        ))
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::sqrt;

    fn row(text: &str) -> BoundsRow {
        table_row(&TopologySpec::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn table_examples() {
        let r = row("torus:k=4,d=2");
        assert_eq!((r.nodes, r.radix), (16, 4));
        assert!((r.rho2_upper - 2.0).abs() < 1e-12);
        assert_eq!(r.bw_upper, 8.0);
        assert!((r.ramanujan_rho2 - (4.0 - 2.0 * sqrt(3.0))).abs() < 1e-15);

        let r = row("slimfly:q=5");
        assert_eq!(
            (r.nodes, r.radix, r.rho2_upper, r.bw_upper),
            (50, 7, 5.0, 65.0)
        );

        let r = row("clex:k=3,l=2");
        assert_eq!(
            (r.nodes, r.radix, r.rho2_upper, r.bw_upper),
            (9, 8, 10.0, 27.0)
        );
    }

    #[test]
    fn constraints() {
        let bad = [
            "torus:k=2,d=2",
            "butterfly:k=2,s=2",
            "clex:k=2,l=2",
            "clex:k=3,l=1",
            "datavortex:a=4,c=2",
        ];
        for t in bad {
            assert!(
                matches!(
                    table_row(&TopologySpec::parse(t).unwrap()),
                    Err(Error::Constraint(_))
                ),
                "{t}"
            );
        }
        assert!(matches!(
            table_row(&TopologySpec::Petersen),
            Err(Error::NoBounds(_))
        ));
    }

    #[test]
    fn gconnh_formulas() {
        assert!((gconnh_rho2_upper(-1.0, 4, 1) - 1.25).abs() < 1e-15);
        assert_eq!(gconnh_rho2_upper(3.0, 3, 2), 0.0);
        assert_eq!(gconnh_bw_upper(5, 10, 4, 1, 6.0, 4.0), 10.0);
        assert_eq!(gconnh_bw_upper(5, 10, 4, 0, 6.0, 4.0), 4.0);
        assert_eq!(gconnh_bw_upper(8, 12, 3, 1, 4.0, 2.0), 6.0);
    }

    #[test]
    fn moore() {
        assert_eq!(moore_bound(3, 2), 10);
        assert_eq!(moore_bound(7, 2), 50);
        assert_eq!(moore_bound(5, 1), 6);
        assert_eq!(moore_graph_bw_upper(3, 2), 7.0);
        assert_eq!(moore_graph_bw_upper(2, 2), 2.0);
        assert_eq!(moore_graph_bw_upper(4, 2), 14.0);
    }

    #[test]
    fn hypercube_sweep() {
        let rows = sweep(&["hypercube"], 64, 1 << 10).unwrap();
        assert_eq!(rows.len(), 10);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.prop_bw_upper, 1.0 / (2.0 * (i + 1) as f64));
        }
        let rows = sweep(&["torus"], 64, 1000).unwrap();
        assert!(rows
            .iter()
            .all(|r| !matches!(r.spec, TopologySpec::Torus { k: 2, .. })));
        assert!((ramanujan_prop_bw(32.0) - 0.163).abs() < 1e-3);
    }
}
