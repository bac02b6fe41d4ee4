//! The six verbs. Each returns what it would print so the CLI and the tests
//! share one code path.

use std::path::Path;
use std::str::FromStr;

use serde_json::Value;
use spectre_core::algebra::{lps_generators, ProjectiveKind};
use spectre_core::bounds::{self, BoundsRow};
use spectre_core::metrics::{self, bisection_exact, bisection_fiedler, diameter, is_connected};
use spectre_core::reduction::{
    self, check_automorphism, OrbitPartition, Permutation, QuotientGraph,
};
use spectre_core::spectral::{self, Spectrum};
use spectre_core::topologies::lps_graph;
use spectre_core::{Graph, TopologySpec};

use crate::error::{CliError, Result};
use crate::json::{self, real, reals, Obj};
use crate::{edgelist, CSV_HEADER};

const TOL: f64 = 1e-9;

/// Text for stdout plus warnings for stderr.
#[derive(Debug, Default, Clone, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl Output {
    fn text(stdout: String) -> Self {
        Output {
            stdout,
            warnings: Vec::new(),
        }
    }
}

/// A graph from an edge-list path or, if no such file exists, a topology spec.
pub fn load_graph(input: &str) -> Result<(Graph, Option<TopologySpec>)> {
    let path = Path::new(input);
    if path.is_file() {
        return Ok((edgelist::read(path)?, None));
    }
    let spec = TopologySpec::parse(input)?;
    Ok((spec.build()?, Some(spec)))
}

pub fn gen(spec: &str, out: Option<&Path>, automorphisms: Option<&Path>) -> Result<Output> {
    let spec = TopologySpec::parse(spec)?;
    let g = spec.build()?;
    if let Some(path) = automorphisms {
        let gens = spec.automorphisms()?.ok_or_else(|| {
            CliError::Unsupported(format!("no automorphism fixture for {}", spec.family()))
        })?;
        std::fs::write(path, json::render_automorphisms(&gens))
            .map_err(|e| CliError::io(path, e))?;
    }
    match out {
        Some(path) => {
            edgelist::write(path, &g)?;
            Ok(Output::default())
        }
        None => Ok(Output::text(edgelist::render(&g))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Metric {
    Spectrum,
    Rho2,
    Gap,
    Lambda,
    Ramanujan,
    Diameter,
    BwExact,
    BwFiedler,
    Iso,
    BoundsCheck,
}

impl Metric {
    pub const ALL: [Metric; 10] = [
        Metric::Spectrum,
        Metric::Rho2,
        Metric::Gap,
        Metric::Lambda,
        Metric::Ramanujan,
        Metric::Diameter,
        Metric::BwExact,
        Metric::BwFiedler,
        Metric::Iso,
        Metric::BoundsCheck,
    ];

    pub const DEFAULT: [Metric; 5] = [
        Metric::Rho2,
        Metric::Gap,
        Metric::Lambda,
        Metric::Ramanujan,
        Metric::Diameter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Spectrum => "spectrum",
            Metric::Rho2 => "rho2",
            Metric::Gap => "gap",
            Metric::Lambda => "lambda",
            Metric::Ramanujan => "ramanujan",
            Metric::Diameter => "diameter",
            Metric::BwExact => "bw-exact",
            Metric::BwFiedler => "bw-fiedler",
            Metric::Iso => "iso",
            Metric::BoundsCheck => "bounds-check",
        }
    }

    fn key(self) -> String {
        self.name().replace('-', "_")
    }

    /// Comma-separated names; duplicates collapse.
    pub fn parse_list(text: &str) -> Result<Vec<Metric>> {
        let mut out: Vec<Metric> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Metric {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase().replace('_', "-");
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Metric::ALL.iter().map(|m| m.name()).collect();
                CliError::Usage(format!(
                    "unknown metric '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

fn bisection_json(b: &metrics::Bisection) -> Value {
    Obj::new()
        .real("cut", b.cut)
        .set("side", b.side_a.clone())
        .build()
}

struct Check {
    name: &'static str,
    lhs: f64,
    rhs: f64,
}

impl Check {
    fn holds(&self) -> bool {
        self.lhs <= self.rhs + TOL
    }

    fn json(&self) -> Value {
        Obj::new()
            .set("name", self.name)
            .real("lhs", self.lhs)
            .real("rhs", self.rhs)
            .set("holds", self.holds())
            .build()
    }
}

/// Worst `deviation - bound` over a deterministic family of prefix/suffix
/// vertex sets.
fn discrepancy_margin(g: &Graph) -> Result<f64> {
    let n = g.vertex_count();
    let cuts: Vec<usize> = [0, 1, n / 4, n / 3, n / 2, 2 * n / 3, n - 1, n]
        .into_iter()
        .collect();
    let mut worst = f64::NEG_INFINITY;
    for &a in &cuts {
        for &b in &cuts {
            let x: Vec<usize> = (0..a).collect();
            for y in [(0..b).collect::<Vec<_>>(), (n - b..n).collect()] {
                let d = spectral::discrepancy_check(g, &x, &y)?;
                worst = worst.max(d.deviation - d.bound);
            }
        }
    }
    Ok(worst)
}

/// Every applicable spectral inequality, evaluated on `g`.
fn bounds_check(g: &Graph) -> Result<Value> {
    let n = g.vertex_count();
    let profile = g.degree_profile();
    let k = profile.regularity();
    let connected = is_connected(g);
    let loop_free = !g.has_loops();
    let adj = Spectrum::adjacency(g)?;
    let rho2 = spectral::algebraic_connectivity(g)?;
    let mut checks = Vec::new();

    if n <= metrics::BISECTION_MAX_N {
        let bw = bisection_exact(g)?.cut;
        // the balanced form; it is ρ₂n/4 for even n
        checks.push(Check {
            name: "fiedler_bw_lower",
            lhs: spectral::fiedler_bw_lower_balanced(rho2, n),
            rhs: bw,
        });
        if let Some(k) = k {
            checks.push(Check {
                name: "cheeger_bw_upper",
                lhs: bw,
                rhs: spectral::cheeger_bw_upper(k, rho2, n),
            });
        }
    }
    if connected {
        let d = diameter(g).finite().expect("connected") as f64;
        checks.push(Check {
            name: "mckay_diameter_lower",
            lhs: spectral::mckay_diameter_lower(n, rho2)?,
            rhs: d,
        });
        let am = spectral::alon_milman_diameter_upper(n, profile.max, rho2)? as f64;
        checks.push(Check {
            name: "alon_milman_diameter_upper",
            lhs: d,
            rhs: am,
        });
    }
    if let (Some(k), true) = (k, loop_free) {
        let lambda2 = adj.largest(1).unwrap_or(k);
        if n <= metrics::ISO_MAX_N && lambda2 < k {
            let h = metrics::vertex_iso_number(g)?.ratio();
            checks.push(Check {
                name: "tanner_iso_lower",
                lhs: spectral::tanner_iso_lower(k, lambda2)?,
                rhs: h,
            });
            checks.push(Check {
                name: "lambda2_upper_from_h",
                lhs: lambda2,
                rhs: spectral::lambda2_upper_from_h(k, h),
            });
        }
        if connected && k >= 2.0 && k.fract() == 0.0 {
            let lambda = spectral::lambda_nontrivial(g)?;
            let d = diameter(g).finite().expect("connected") as u32;
            if d >= 1 {
                let floor = spectral::alon_boppana_floor(k as u32, Some(d));
                checks.push(Check {
                    name: "alon_boppana_floor",
                    lhs: floor,
                    rhs: lambda,
                });
            }
            if spectral::is_ramanujan(g)? {
                checks.push(Check {
                    name: "discrepancy",
                    lhs: discrepancy_margin(g)?,
                    rhs: 0.0,
                });
            }
        }
    }

    let all = checks.iter().all(Check::holds);
    Ok(Obj::new()
        .set("all_hold", all)
        .set("checks", checks.iter().map(Check::json).collect::<Vec<_>>())
        .build())
}

pub fn analyze(input: &str, metrics: &[Metric]) -> Result<Output> {
    let (g, spec) = load_graph(input)?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(CliError::Unsupported(
            "analysis needs at least 2 vertices".into(),
        ));
    }
    let metrics = if metrics.is_empty() {
        &Metric::DEFAULT[..]
    } else {
        metrics
    };
    let mut warnings = Vec::new();
    let profile = g.degree_profile();
    let connected = is_connected(&g);
    let regular_connected = profile.is_regular() && connected;

    let mut report = Obj::new()
        .set(
            "input",
            spec.as_ref()
                .map_or_else(|| input.to_string(), ToString::to_string),
        )
        .set("n", n)
        .set("m", g.edge_count())
        .set("connected", connected)
        .set("k", profile.regularity().map_or(Value::Null, real));

    let mut adj: Option<Spectrum> = None;
    let mut adjacency = |g: &Graph| -> Result<Spectrum> {
        if adj.is_none() {
            adj = Some(Spectrum::adjacency(g)?);
        }
        Ok(adj.clone().expect("just computed"))
    };

    for &m in metrics {
        let value = match m {
            Metric::Spectrum => reals(adjacency(&g)?.values()),
            Metric::Rho2 => {
                if !connected {
                    warnings.push("graph is disconnected; rho2 = 0".to_string());
                }
                real(if connected {
                    spectral::algebraic_connectivity(&g)?
                } else {
                    0.0
                })
            }
            Metric::Gap => {
                let s = adjacency(&g)?;
                real(s.largest(0).unwrap_or(0.0) - s.largest(1).unwrap_or(0.0))
            }
            Metric::Lambda | Metric::Ramanujan if !regular_connected => {
                warnings.push(format!("{} needs a connected regular graph", m.name()));
                Value::Null
            }
            Metric::Lambda => real(spectral::lambda_nontrivial(&g)?),
            Metric::Ramanujan => {
                let k = profile.regularity().expect("regular");
                let lambda = spectral::lambda_nontrivial(&g)?;
                let bound = spectral::ramanujan_bound(k);
                Obj::new()
                    .real("lambda", lambda)
                    .real("bound", bound)
                    .set("ramanujan", k >= 2.0 && lambda <= bound + TOL)
                    .build()
            }
            Metric::Diameter => match diameter(&g).finite() {
                Some(d) => Value::from(d),
                None => {
                    warnings.push("graph is disconnected; diameter is infinite".to_string());
                    Value::Null
                }
            },
            Metric::BwExact => bisection_json(&bisection_exact(&g)?),
            Metric::BwFiedler => {
                if !connected {
                    warnings.push("graph is disconnected; bw-fiedler skipped".to_string());
                    Value::Null
                } else {
                    bisection_json(&bisection_fiedler(&g)?)
                }
            }
            Metric::Iso => {
                let iso = metrics::vertex_iso_number(&g)?;
                Obj::new()
                    .real("h", iso.ratio())
                    .set("numerator", iso.numerator)
                    .set("denominator", iso.denominator)
                    .set("witness", iso.witness)
                    .build()
            }
            Metric::BoundsCheck => bounds_check(&g)?,
        };
        report.insert(&m.key(), value);
    }
    if !warnings.is_empty() {
        report.insert("warnings", warnings.clone());
    }
    Ok(Output {
        stdout: json::pretty(&report.build()),
        warnings,
    })
}

fn row_json(row: &BoundsRow) -> Value {
    Obj::new()
        .set("spec", row.spec.to_string())
        .set("family", row.spec.family())
        .set("params", row.spec.params())
        .set("nodes", row.nodes)
        .set("radix", row.radix)
        .real("rho2_upper", row.rho2_upper)
        .real("bw_upper", row.bw_upper)
        .real("ramanujan_rho2", row.ramanujan_rho2)
        .real("ramanujan_bw_lower", row.ramanujan_bw_lower)
        .real("prop_bw_upper", row.prop_bw_upper)
        .real("ramanujan_prop_bw_lower", row.ramanujan_prop_bw_lower)
        .set("notes", row.notes.clone())
        .build()
}

pub fn bounds(spec: &str) -> Result<Output> {
    let row = bounds::table_row(&TopologySpec::parse(spec)?)?;
    Ok(Output::text(json::pretty(&row_json(&row))))
}

/// Families split on commas; an empty list selects every sweep family.
pub fn sweep(
    families: &[String],
    max_radix: u64,
    max_nodes: u64,
    out: Option<&Path>,
) -> Result<Output> {
    let names: Vec<String> = families
        .iter()
        .flat_map(|f| f.split(','))
        .map(|f| f.trim().to_ascii_lowercase().replace(['_', '-'], ""))
        .filter(|f| !f.is_empty())
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    for f in &refs {
        if !bounds::SWEEP_FAMILIES.contains(f) {
            return Err(CliError::Usage(format!(
                "unknown sweep family '{f}' (expected one of {})",
                bounds::SWEEP_FAMILIES.join(", ")
            )));
        }
    }
    let rows = bounds::sweep(&refs, max_radix, max_nodes)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in &rows {
        w.write_record([
            r.spec.family().to_string(),
            r.spec.params(),
            r.nodes.to_string(),
            r.radix.to_string(),
            r.rho2_upper.to_string(),
            r.bw_upper.to_string(),
            r.prop_bw_upper.to_string(),
            r.ramanujan_rho2.to_string(),
            bounds::ramanujan_prop_bw(r.radix as f64).to_string(),
        ])?;
    }
    let text = String::from_utf8(
        w.into_inner()
            .map_err(|e| CliError::io("<csv buffer>", e.into_error()))?,
    )
    .expect("csv output is utf-8");
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError::io(path, e))?;
            Ok(Output::default())
        }
        None => Ok(Output::text(text)),
    }
}

/// Where `reduce` takes its vertex partition from.
#[derive(Debug, Clone, Copy)]
pub enum PartitionSource<'a> {
    /// JSON array of image arrays.
    Automorphisms(&'a Path),
    /// JSON array with one class label per vertex.
    Labels(&'a Path),
    /// The fixture shipped with the spec's family.
    Builtin,
}

fn read_labels(path: &Path, n: usize) -> Result<OrbitPartition> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let labels: Vec<usize> = serde_json::from_str(&text)?;
    if labels.len() != n {
        return Err(CliError::Usage(format!(
            "partition has {} labels, graph has {n} vertices",
            labels.len()
        )));
    }
    Ok(OrbitPartition::from_labels(&labels))
}

fn validated(g: &Graph, gens: Vec<Permutation>) -> Result<Vec<Permutation>> {
    for (i, p) in gens.iter().enumerate() {
        if p.len() != g.vertex_count() {
            return Err(CliError::Unsupported(format!(
                "permutation {i} acts on {} points, graph has {} vertices",
                p.len(),
                g.vertex_count()
            )));
        }
        if !check_automorphism(g, p) {
            return Err(CliError::Unsupported(format!(
                "permutation {i} is not an automorphism"
            )));
        }
    }
    Ok(gens)
}

/// `λ_i(A) ≥ λ_i(B) ≥ λ_{n-m+i}(A)` with both spectra in descending order.
fn interlaces(b: &Spectrum, a: &Spectrum, tol: f64) -> bool {
    let (n, m) = (a.len(), b.len());
    (0..m).all(|i| {
        let bi = b.largest(i).expect("in range");
        bi <= a.largest(i).expect("in range") + tol
            && bi >= a.largest(n - m + i).expect("in range") - tol
    })
}

fn render_quotient(q: &QuotientGraph) -> String {
    let arcs = q.arcs();
    let mut s = format!(
        "# directed quotient; sizes {:?}\n{} {}\n",
        q.sizes(),
        q.orbit_count(),
        arcs.len()
    );
    for (i, j, w) in arcs {
        s.push_str(&format!("{i} {j} {w}\n"));
    }
    s
}

pub fn reduce(
    input: &str,
    source: PartitionSource<'_>,
    haemers: bool,
    out: Option<&Path>,
) -> Result<Output> {
    let (g, spec) = load_graph(input)?;
    let n = g.vertex_count();
    let part = match source {
        PartitionSource::Automorphisms(path) => {
            let gens = validated(&g, json::read_automorphisms(path)?)?;
            reduction::orbits(n, &gens)?
        }
        PartitionSource::Labels(path) => read_labels(path, n)?,
        PartitionSource::Builtin => {
            let spec = spec.ok_or_else(|| {
                CliError::Usage("a graph file needs --automorphisms or --partition".into())
            })?;
            let gens = spec.automorphisms()?.ok_or_else(|| {
                CliError::Unsupported(format!("no automorphism fixture for {}", spec.family()))
            })?;
            reduction::orbits(n, &validated(&g, gens)?)?
        }
    };
    let q = if haemers {
        reduction::haemers_quotient(&g, &part)?
    } else {
        reduction::quotient(&g, &part)?
    };
    let sub = reduction::quotient_spectrum(&q)?;
    let full = Spectrum::adjacency(&g)?;

    let arcs: Vec<Value> = q
        .arcs()
        .into_iter()
        .map(|(i, j, w)| Value::from(vec![Value::from(i), Value::from(j), real(w)]))
        .collect();
    let mut report = Obj::new()
        .set("n", n)
        .set("orbits", q.orbit_count())
        .set("sizes", q.sizes().to_vec())
        .set("arcs", arcs)
        .set("quotient_spectrum", reals(sub.values()))
        .set("mode", if haemers { "haemers" } else { "equitable" });
    if haemers {
        report.insert("interlaces", interlaces(&sub, &full, 1e-7));
    } else {
        report.insert(
            "contained",
            reduction::verify_containment(&sub, &full, 1e-7),
        );
    }
    if let Some(path) = out {
        std::fs::write(path, render_quotient(&q)).map_err(|e| CliError::io(path, e))?;
    }
    Ok(Output::text(json::pretty(&report.build())))
}

pub fn certify(p: u64, q: u64) -> Result<Output> {
    let (group, _) = lps_generators(p, q)?;
    let g = lps_graph(p, q)?;
    let k = g
        .degree_profile()
        .regularity()
        .ok_or_else(|| CliError::Unsupported("LPS graph is not regular".into()))?;
    let lambda = spectral::lambda_nontrivial(&g)?;
    let bound = spectral::ramanujan_bound(k);
    let name = match group.kind {
        ProjectiveKind::Psl => "PSL",
        ProjectiveKind::Pgl => "PGL",
    };
    let report = Obj::new()
        .set("p", p)
        .set("q", q)
        .set("group", format!("{name}(2,{p})"))
        .set("n", g.vertex_count())
        .real("k", k)
        .real("lambda", lambda)
        .real("bound", bound)
        .set("ramanujan", lambda <= bound + TOL)
        .set("bipartite", metrics::is_bipartite_strict(&g))
        .set("connected", is_connected(&g))
        .build();
    Ok(Output::text(json::pretty(&report)))
}
