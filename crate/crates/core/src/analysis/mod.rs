//! Edge bounds for bipartite visibility graphs, the green/red counting
//! inequalities behind them, and classifiers that return checkable
//! certificates.

mod bounds;
mod classify;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::constructors::ConstructError;
use crate::geometry::{extract_visibility_graph, GeometryError, Layout, Surface};
use crate::graph::{Graph, GraphError};

pub use bounds::{bipartite_bound, edge_bound, gseer_check, gseer_check_auto, GseerInstance, GseerReport, SeeCounts};
pub use classify::{
    classify_complement_power, classify_complete_bipartite, fixed_obstructions, find_bipartite_obstruction,
};

/// The surface a verdict refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    Plane,
    Torus,
}

impl SurfaceKind {
    pub fn of(surface: &Surface) -> Self {
        match surface {
            Surface::Plane => SurfaceKind::Plane,
            Surface::Torus { .. } => SurfaceKind::Torus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::Plane => "plane",
            SurfaceKind::Torus => "torus",
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Trvg,
    NotTrvg,
    Unknown,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Trvg => "TRVG",
            Verdict::NotTrvg => "NotTRVG",
            Verdict::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A bipartite graph with more edges than any representable one allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundViolation {
    pub vertices: usize,
    pub edges: usize,
    pub bound: usize,
    pub surface: SurfaceKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Evidence {
    Witness(Layout),
    BoundViolation(BoundViolation),
    /// `map` sends each pattern label to a vertex of the queried graph; the
    /// image induces a copy of `pattern`, which violates the edge bound.
    InducedObstruction {
        name: String,
        pattern: Graph,
        map: Vec<(String, String)>,
        violation: BoundViolation,
    },
    Citation(String),
    /// Every combinatorially distinct layout on `vertices` rectangles was tried.
    Exhaustion {
        vertices: usize,
        interleavings_per_axis: usize,
        realizable_graphs: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub surface: SurfaceKind,
    pub evidence: Evidence,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("not a bipartition of the layout: {0}")]
    NotABipartition(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Why a certificate fails to check against a graph.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("certificate rejected: {0}")]
pub struct CheckError(pub String);

fn reject<T>(msg: impl Into<String>) -> Result<T, CheckError> {
    Err(CheckError(msg.into()))
}

impl Certificate {
    pub fn new(verdict: Verdict, surface: SurfaceKind, evidence: Evidence) -> Self {
        Certificate {
            verdict,
            surface,
            evidence,
        }
    }

    pub fn unknown(surface: SurfaceKind, why: impl Into<String>) -> Self {
        Certificate::new(Verdict::Unknown, surface, Evidence::Citation(why.into()))
    }

    /// Checks the evidence against `g` from scratch.
    ///
    /// Exhaustion evidence is checked by re-running the exact search.
    pub fn check(&self, g: &Graph) -> Result<(), CheckError> {
        let expected = match &self.evidence {
            Evidence::Witness(_) => Verdict::Trvg,
            Evidence::Citation(_) => Verdict::Unknown,
            _ => Verdict::NotTrvg,
        };
        if self.verdict != expected {
            return reject(format!("{} verdict with the wrong kind of evidence", self.verdict));
        }
        match &self.evidence {
            Evidence::Witness(layout) => {
                if SurfaceKind::of(&layout.surface) != self.surface {
                    return reject("witness lies on the wrong surface");
                }
                let got = extract_visibility_graph(layout).map_err(|e| CheckError(e.to_string()))?;
                if &got != g {
                    return reject("witness extracts to a different graph");
                }
                Ok(())
            }
            Evidence::BoundViolation(v) => check_violation(g, v, self.surface),
            Evidence::InducedObstruction {
                pattern,
                map,
                violation,
                ..
            } => {
                check_violation(pattern, violation, self.surface)?;
                check_induced_map(g, pattern, map)
            }
            Evidence::Citation(_) => Ok(()),
            Evidence::Exhaustion { vertices, .. } => {
                if *vertices != g.vertex_count() {
                    return reject("exhaustion covers a different vertex count");
                }
                if self.surface != SurfaceKind::Plane {
                    return reject("exhaustive search covers the plane only");
                }
                match crate::search::is_trvg_exact(g, *vertices) {
                    Ok(c) if c.verdict == Verdict::NotTrvg => Ok(()),
                    Ok(_) => reject("exact search finds a layout"),
                    Err(e) => reject(e.to_string()),
                }
            }
        }
    }
}

fn check_violation(g: &Graph, v: &BoundViolation, surface: SurfaceKind) -> Result<(), CheckError> {
    if v.surface != surface {
        return reject("bound for the wrong surface");
    }
    if !g.is_bipartite() {
        return reject("bound applies to bipartite graphs only");
    }
    if v.vertices != g.vertex_count() || v.edges != g.edge_count() {
        return reject("recorded counts do not match the graph");
    }
    if v.bound != edge_bound(v.vertices, surface) {
        return reject("recorded bound is wrong");
    }
    if v.edges <= v.bound {
        return reject("edge count does not exceed the bound");
    }
    Ok(())
}

/// `map` must be injective, total on `pattern` and preserve adjacency and
/// non-adjacency.
pub fn check_induced_map(g: &Graph, pattern: &Graph, map: &[(String, String)]) -> Result<(), CheckError> {
    if map.len() != pattern.vertex_count() {
        return reject("map does not cover the pattern");
    }
    let mut seen = HashSet::new();
    let mut image = vec![usize::MAX; pattern.vertex_count()];
    for (from, to) in map {
        let Some(i) = pattern.index_of(from) else {
            return reject(format!("{from:?} is not a pattern vertex"));
        };
        let Some(j) = g.index_of(to) else {
            return reject(format!("{to:?} is not a vertex of the graph"));
        };
        if !seen.insert(j) || image[i] != usize::MAX {
            return reject("map is not injective");
        }
        image[i] = j;
    }
    let n = pattern.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            if pattern.adjacent(a, b) != g.adjacent(image[a], image[b]) {
                return reject(format!(
                    "pair {:?}, {:?} is not preserved",
                    pattern.label(a),
                    pattern.label(b)
                ));
            }
        }
    }
    Ok(())
}
