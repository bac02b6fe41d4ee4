use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::automorphisms::{
    butterfly_layer_shifts, data_vortex_bit_flips, fat_tree_swaps, slimfly_shifts,
};
use super::basic::{
    complete, cycle, fat_tree, grid, hypercube, path, petersen, random_regular, torus,
};
use super::butterfly::butterfly;
use super::clex::{clex, clex_general};
use super::cube::{cc, ccc};
use super::gconnh::{dragonfly, g_conn_h, peterson_torus, ConnectionRule};
use super::lps::lps_graph;
use super::slimfly::slimfly;
use super::vortex::data_vortex;
use crate::graph::Graph;
use crate::math::{cos, PI};
use crate::reduction::Permutation;
use crate::spectral::Spectrum;
use crate::{Error, Result};

/// A small named graph used as a parameter of another family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseGraph {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Hypercube(u32),
    Petersen,
    Butterfly(usize, usize),
}

impl BaseGraph {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            BaseGraph::Complete(n) => complete(n),
            BaseGraph::Cycle(n) => cycle(n),
            BaseGraph::Path(n) => path(n),
            BaseGraph::Hypercube(d) => hypercube(d),
            BaseGraph::Petersen => Ok(petersen()),
            BaseGraph::Butterfly(k, s) => butterfly(k, s),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            BaseGraph::Complete(n) | BaseGraph::Cycle(n) | BaseGraph::Path(n) => n,
            BaseGraph::Hypercube(d) => 1 << d,
            BaseGraph::Petersen => 10,
            BaseGraph::Butterfly(k, s) => s * k.pow(s as u32),
        }
    }

    /// Degree, for the regular members.
    pub fn degree(&self) -> Option<usize> {
        match *self {
            BaseGraph::Complete(n) => Some(n - 1),
            BaseGraph::Cycle(_) => Some(2),
            BaseGraph::Path(2) => Some(1),
            BaseGraph::Path(_) => None,
            BaseGraph::Hypercube(d) => Some(d as usize),
            BaseGraph::Petersen => Some(3),
            BaseGraph::Butterfly(k, _) => Some(2 * k),
        }
    }

    /// Bisection bandwidth: exact for all but the butterfly, where it is the
    /// family's upper bound.
    pub fn bw_upper(&self) -> f64 {
        match *self {
            BaseGraph::Complete(n) => (n.div_ceil(2) * (n / 2)) as f64,
            BaseGraph::Cycle(_) => 2.0,
            BaseGraph::Path(_) => 1.0,
            BaseGraph::Hypercube(d) => (1u64 << (d - 1)) as f64,
            BaseGraph::Petersen => 5.0,
            BaseGraph::Butterfly(k, s) => ((k + 1) * k.pow(s as u32)) as f64 / 2.0,
        }
    }

    /// Second-largest adjacency eigenvalue.
    pub fn lambda2(&self) -> Result<f64> {
        match *self {
            BaseGraph::Complete(_) => Ok(-1.0),
            BaseGraph::Cycle(n) => Ok(2.0 * cos(2.0 * PI / n as f64)),
            BaseGraph::Path(n) => Ok(2.0 * cos(2.0 * PI / (n + 1) as f64)),
            BaseGraph::Hypercube(d) => Ok(d as f64 - 2.0),
            BaseGraph::Petersen => Ok(1.0),
            BaseGraph::Butterfly(..) => {
                let s = Spectrum::adjacency(&self.build()?)?;
                s.largest(1).ok_or(Error::EmptyMatrix)
            }
        }
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseGraph::Complete(n) => write!(f, "K{n}"),
            BaseGraph::Cycle(n) => write!(f, "C{n}"),
            BaseGraph::Path(n) => write!(f, "P{n}"),
            BaseGraph::Hypercube(d) => write!(f, "Q{d}"),
            BaseGraph::Petersen => write!(f, "petersen"),
            BaseGraph::Butterfly(k, s) => write!(f, "BF{k}x{s}"),
        }
    }
}

impl FromStr for BaseGraph {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let t = token.trim().to_ascii_lowercase();
        let bad = || Error::SpecSyntax(format!("unknown base graph '{token}'"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        if t == "petersen" {
            return Ok(BaseGraph::Petersen);
        }
        if let Some(rest) = t.strip_prefix("bf") {
            let (k, s) = rest.split_once('x').ok_or_else(bad)?;
            return Ok(BaseGraph::Butterfly(num(k)?, num(s)?));
        }
        let (head, rest) = t.split_at(t.char_indices().nth(1).map_or(t.len(), |(i, _)| i));
        match head {
            "k" => Ok(BaseGraph::Complete(num(rest)?)),
            "c" => Ok(BaseGraph::Cycle(num(rest)?)),
            "p" => Ok(BaseGraph::Path(num(rest)?)),
            "q" => Ok(BaseGraph::Hypercube(num(rest)? as u32)),
            _ => Err(bad()),
        }
    }
}

/// A topology family with its parameters.
///
/// The string form is `family:key=value,...` with case-insensitive family
/// names, for example `torus:k=4,d=2`, `grid:k=3x4`, `gconnh:g=Q3,h=C3,k=1`
/// or just `petersen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologySpec {
    Hypercube {
        d: u32,
    },
    Grid {
        dims: Vec<usize>,
    },
    Torus {
        k: usize,
        d: u32,
    },
    Butterfly {
        k: usize,
        s: usize,
    },
    DataVortex {
        a: usize,
        c: usize,
    },
    Cc {
        g: BaseGraph,
        d: u32,
    },
    Ccc {
        d: u32,
    },
    Clex {
        k: usize,
        l: u32,
    },
    ClexGeneral {
        g: BaseGraph,
        l: u32,
    },
    GConnH {
        g: BaseGraph,
        h: BaseGraph,
        k: usize,
    },
    PetersonTorus {
        a: usize,
        b: usize,
    },
    DragonFly {
        h: BaseGraph,
    },
    SlimFly {
        q: u64,
    },
    FatTree {
        levels: u32,
    },
    Petersen,
    RandomRegular {
        n: usize,
        k: usize,
        seed: u64,
    },
    Lps {
        p: u64,
        q: u64,
    },
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
}

/// Family names accepted by the parser, in canonical spelling.
pub const FAMILIES: [&str; 20] = [
    "butterfly",
    "cc",
    "ccc",
    "clex",
    "clexg",
    "complete",
    "cycle",
    "datavortex",
    "dragonfly",
    "fattree",
    "gconnh",
    "grid",
    "hypercube",
    "lps",
    "path",
    "petersen",
    "pt",
    "random",
    "slimfly",
    "torus",
];

struct Params<'a> {
    family: &'a str,
    map: BTreeMap<String, String>,
}

impl Params<'_> {
    fn raw(&mut self, key: &str) -> Result<String> {
        self.map
            .remove(key)
            .ok_or_else(|| Error::SpecSyntax(format!("{} needs parameter '{key}'", self.family)))
    }

    fn num<T: FromStr>(&mut self, key: &str) -> Result<T> {
        let v = self.raw(key)?;
        v.parse().map_err(|_| {
            Error::SpecSyntax(format!(
                "{}: '{key}={v}' is not a valid number",
                self.family
            ))
        })
    }

    fn base(&mut self, key: &str) -> Result<BaseGraph> {
        self.raw(key)?.parse()
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            Some(k) => Err(Error::SpecSyntax(format!(
                "{} does not take parameter '{k}'",
                self.family
            ))),
            None => Ok(()),
        }
    }
}

impl FromStr for TopologySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (family, rest) = text.split_once(':').unwrap_or((text, ""));
        let family = family.trim().to_ascii_lowercase().replace(['_', '-'], "");
        let mut map = BTreeMap::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::SpecSyntax(format!("expected key=value, got '{part}'")))?;
            let k = k.trim().to_ascii_lowercase().replace('ℓ', "l");
            if map.insert(k.clone(), v.trim().to_string()).is_some() {
                return Err(Error::SpecSyntax(format!("parameter '{k}' given twice")));
            }
        }
        let mut p = Params {
            family: &family,
            map,
        };
        let spec = match family.as_str() {
            "hypercube" => TopologySpec::Hypercube { d: p.num("d")? },
            "grid" => {
                let raw = p.raw("k")?;
                let dims = raw
                    .split('x')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<core::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::SpecSyntax(format!("grid: bad sides '{raw}'")))?;
                TopologySpec::Grid { dims }
            }
            "torus" => TopologySpec::Torus {
                k: p.num("k")?,
                d: p.num("d")?,
            },
            "butterfly" => TopologySpec::Butterfly {
                k: p.num("k")?,
                s: p.num("s")?,
            },
            "datavortex" => TopologySpec::DataVortex {
                a: p.num("a")?,
                c: p.num("c")?,
            },
            "cc" => TopologySpec::Cc {
                g: p.base("g")?,
                d: p.num("d")?,
            },
            "ccc" => TopologySpec::Ccc { d: p.num("d")? },
            "clex" => TopologySpec::Clex {
                k: p.num("k")?,
                l: p.num("l")?,
            },
            "clexg" => TopologySpec::ClexGeneral {
                g: p.base("g")?,
                l: p.num("l")?,
            },
            "gconnh" => TopologySpec::GConnH {
                g: p.base("g")?,
                h: p.base("h")?,
                k: p.num("k")?,
            },
            "pt" | "petersontorus" | "petersentorus" => TopologySpec::PetersonTorus {
                a: p.num("a")?,
                b: p.num("b")?,
            },
            "dragonfly" | "df" => TopologySpec::DragonFly { h: p.base("h")? },
            "slimfly" | "sf" => TopologySpec::SlimFly { q: p.num("q")? },
            "fattree" => TopologySpec::FatTree {
                levels: p.num("levels")?,
            },
            "petersen" => TopologySpec::Petersen,
            "random" | "randomregular" => TopologySpec::RandomRegular {
                n: p.num("n")?,
                k: p.num("k")?,
                seed: p.num("seed")?,
            },
            "lps" => TopologySpec::Lps {
                p: p.num("p")?,
                q: p.num("q")?,
            },
            "complete" => TopologySpec::Complete { n: p.num("n")? },
            "cycle" => TopologySpec::Cycle { n: p.num("n")? },
            "path" => TopologySpec::Path { n: p.num("n")? },
            _ => return Err(Error::UnknownFamily(family.clone())),
        };
        p.finish()?;
        Ok(spec)
    }
}

impl TopologySpec {
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    /// Canonical family name.
    pub fn family(&self) -> &'static str {
        match self {
            TopologySpec::Hypercube { .. } => "hypercube",
            TopologySpec::Grid { .. } => "grid",
            TopologySpec::Torus { .. } => "torus",
            TopologySpec::Butterfly { .. } => "butterfly",
            TopologySpec::DataVortex { .. } => "datavortex",
            TopologySpec::Cc { .. } => "cc",
            TopologySpec::Ccc { .. } => "ccc",
            TopologySpec::Clex { .. } => "clex",
            TopologySpec::ClexGeneral { .. } => "clexg",
            TopologySpec::GConnH { .. } => "gconnh",
            TopologySpec::PetersonTorus { .. } => "pt",
            TopologySpec::DragonFly { .. } => "dragonfly",
            TopologySpec::SlimFly { .. } => "slimfly",
            TopologySpec::FatTree { .. } => "fattree",
            TopologySpec::Petersen => "petersen",
            TopologySpec::RandomRegular { .. } => "random",
            TopologySpec::Lps { .. } => "lps",
            TopologySpec::Complete { .. } => "complete",
            TopologySpec::Cycle { .. } => "cycle",
            TopologySpec::Path { .. } => "path",
        }
    }

    /// Canonical parameter list, `key=value` joined by commas.
    pub fn params(&self) -> String {
        match self {
            TopologySpec::Hypercube { d } | TopologySpec::Ccc { d } => format!("d={d}"),
            TopologySpec::Grid { dims } => {
                let sides: Vec<String> = dims.iter().map(ToString::to_string).collect();
                format!("k={}", sides.join("x"))
            }
            TopologySpec::Torus { k, d } => format!("k={k},d={d}"),
            TopologySpec::Butterfly { k, s } => format!("k={k},s={s}"),
            TopologySpec::DataVortex { a, c } => format!("a={a},c={c}"),
            TopologySpec::Cc { g, d } => format!("g={g},d={d}"),
            TopologySpec::Clex { k, l } => format!("k={k},l={l}"),
            TopologySpec::ClexGeneral { g, l } => format!("g={g},l={l}"),
            TopologySpec::GConnH { g, h, k } => format!("g={g},h={h},k={k}"),
            TopologySpec::PetersonTorus { a, b } => format!("a={a},b={b}"),
            TopologySpec::DragonFly { h } => format!("h={h}"),
            TopologySpec::SlimFly { q } => format!("q={q}"),
            TopologySpec::FatTree { levels } => format!("levels={levels}"),
            TopologySpec::Petersen => String::new(),
            TopologySpec::RandomRegular { n, k, seed } => format!("n={n},k={k},seed={seed}"),
            TopologySpec::Lps { p, q } => format!("p={p},q={q}"),
            TopologySpec::Complete { n } | TopologySpec::Cycle { n } | TopologySpec::Path { n } => {
                format!("n={n}")
            }
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            TopologySpec::Hypercube { d } => hypercube(*d),
            TopologySpec::Grid { dims } => grid(dims),
            TopologySpec::Torus { k, d } => torus(*k, *d),
            TopologySpec::Butterfly { k, s } => butterfly(*k, *s),
            TopologySpec::DataVortex { a, c } => data_vortex(*a, *c),
            TopologySpec::Cc { g, d } => cc(&g.build()?, *d),
            TopologySpec::Ccc { d } => ccc(*d),
            TopologySpec::Clex { k, l } => clex(*k, *l),
            TopologySpec::ClexGeneral { g, l } => clex_general(&g.build()?, *l),
            TopologySpec::GConnH { g, h, k } => {
                g_conn_h(&g.build()?, &h.build()?, *k, &ConnectionRule::Default)
            }
            TopologySpec::PetersonTorus { a, b } => peterson_torus(*a, *b),
            TopologySpec::DragonFly { h } => dragonfly(&h.build()?),
            TopologySpec::SlimFly { q } => slimfly(*q),
            TopologySpec::FatTree { levels } => fat_tree(*levels),
            TopologySpec::Petersen => Ok(petersen()),
            TopologySpec::RandomRegular { n, k, seed } => random_regular(*n, *k, *seed),
            TopologySpec::Lps { p, q } => lps_graph(*p, *q),
            TopologySpec::Complete { n } => complete(*n),
            TopologySpec::Cycle { n } => cycle(*n),
            TopologySpec::Path { n } => path(*n),
        }
    }

    /// Automorphism generators shipped for the reduction fixtures, if the
    /// family has any.
    pub fn automorphisms(&self) -> Result<Option<Vec<Permutation>>> {
        Ok(match *self {
            TopologySpec::Butterfly { k, s } => {
                butterfly(k, s)?;
                Some(butterfly_layer_shifts(k, s))
            }
            TopologySpec::DataVortex { a, c } => {
                data_vortex(a, c)?;
                Some(data_vortex_bit_flips(a, c))
            }
            TopologySpec::SlimFly { q } => Some(slimfly_shifts(q)?),
            TopologySpec::FatTree { levels } => Some(fat_tree_swaps(levels)?),
            _ => None,
        })
    }
}

impl fmt::Display for TopologySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            f.write_str(self.family())
        } else {
            write!(f, "{}:{}", self.family(), params)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for text in [
            "torus:k=4,d=2",
            "slimfly:q=5",
            "grid:k=3x4",
            "gconnh:g=Q3,h=C3,k=1",
            "dragonfly:h=K4",
            "petersen",
            "random:n=10,k=3,seed=1",
            "cc:g=BF2x3,d=2",
        ] {
            let spec: TopologySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn case_and_errors() {
        assert_eq!(
            TopologySpec::parse("SlimFly:Q=5").unwrap(),
            TopologySpec::SlimFly { q: 5 }
        );
        assert!(matches!(
            TopologySpec::parse("moebius:n=3"),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            TopologySpec::parse("torus:k=4"),
            Err(Error::SpecSyntax(_))
        ));
        assert!(matches!(
            TopologySpec::parse("torus:k=4,d=2,z=1"),
            Err(Error::SpecSyntax(_))
        ));
        assert!(matches!(
            TopologySpec::parse("torus:k=x,d=2"),
            Err(Error::SpecSyntax(_))
        ));
        let e = TopologySpec::parse("torus:k=2,d=2")
            .unwrap()
            .build()
            .unwrap_err();
        assert!(e.to_string().contains("k >= 3"));
    }

    #[test]
    fn base_graph_closed_forms() {
        for b in ["K5", "C6", "Q3", "petersen"] {
            let base: BaseGraph = b.parse().unwrap();
            let g = base.build().unwrap();
            let s = Spectrum::adjacency(&g).unwrap();
            assert!(
                (s.largest(1).unwrap() - base.lambda2().unwrap()).abs() < 1e-9,
                "{b}"
            );
            assert_eq!(g.vertex_count(), base.vertex_count());
            assert_eq!(
                g.degree_profile().regularity(),
                base.degree().map(|d| d as f64)
            );
        }
    }
}
