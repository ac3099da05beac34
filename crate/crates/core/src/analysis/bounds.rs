use std::collections::HashMap;

use crate::geometry::{extract_visibility_graph, visibility_pairs, Layout, Sight};
use crate::graph::Graph;

use super::{AnalysisError, BoundViolation, SurfaceKind};

/// Most edges a bipartite visibility graph on `n` vertices can have:
/// `2n - 2` on the plane and `2n` on the torus.
pub fn edge_bound(n: usize, surface: SurfaceKind) -> usize {
    match surface {
        SurfaceKind::Plane => (2 * n).saturating_sub(2),
        SurfaceKind::Torus => 2 * n,
    }
}

/// `Ok(None)` if `g` respects the bound, otherwise the violation.
pub fn bipartite_bound(g: &Graph, surface: SurfaceKind) -> Result<Option<BoundViolation>, AnalysisError> {
    if !g.is_bipartite() {
        return Err(AnalysisError::NotBipartite);
    }
    let (n, e) = (g.vertex_count(), g.edge_count());
    let bound = edge_bound(n, surface);
    Ok((e > bound).then_some(BoundViolation {
        vertices: n,
        edges: e,
        bound,
        surface,
    }))
}

/// How many rectangles of the other colour one rectangle sees along each axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeeCounts {
    pub id: String,
    pub horizontal: usize,
    pub vertical: usize,
}

/// One counting inequality `q >= sum(alpha) - (p - 1)` (plane) or
/// `q >= sum(alpha) - p` (torus), where the `p` greens see `alpha_i` reds
/// along `axis` and there are `q` reds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GseerInstance {
    /// Index (0 or 1) of the part playing the green role.
    pub green_part: usize,
    pub axis: Sight,
    pub p: usize,
    pub q: usize,
    pub alpha: Vec<usize>,
    pub rhs: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GseerReport {
    pub surface: SurfaceKind,
    pub parts: [Vec<String>; 2],
    pub counts: Vec<SeeCounts>,
    pub instances: Vec<GseerInstance>,
}

impl GseerReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.holds)
    }
}

/// Evaluates all four counting inequalities (two colourings, two axes) on a
/// layout whose graph is bipartite with the given parts.
pub fn gseer_check(layout: &Layout, part_a: &[String], part_b: &[String]) -> Result<GseerReport, AnalysisError> {
    let surface = SurfaceKind::of(&layout.surface);
    let pairs = visibility_pairs(layout)?;
    let index: HashMap<&str, usize> = layout.rects.iter().enumerate().map(|(k, r)| (r.id.as_str(), k)).collect();

    let mut side = vec![None; layout.len()];
    for (s, part) in [part_a, part_b].iter().enumerate() {
        for id in part.iter() {
            let Some(&k) = index.get(id.as_str()) else {
                return Err(AnalysisError::NotABipartition(format!("{id:?} is not in the layout")));
            };
            if side[k].replace(s).is_some() {
                return Err(AnalysisError::NotABipartition(format!("{id:?} is listed twice")));
            }
        }
    }
    if let Some(k) = side.iter().position(Option::is_none) {
        return Err(AnalysisError::NotABipartition(format!("{:?} is in neither part", layout.rects[k].id)));
    }
    let side: Vec<usize> = side.into_iter().map(|s| s.expect("checked")).collect();

    let mut h = vec![0usize; layout.len()];
    let mut v = vec![0usize; layout.len()];
    for &(i, j, sight) in &pairs {
        if side[i] == side[j] {
            return Err(AnalysisError::NotABipartition(format!(
                "{:?} and {:?} are in the same part but see each other",
                layout.rects[i].id, layout.rects[j].id
            )));
        }
        let c = if sight == Sight::Horizontal { &mut h } else { &mut v };
        c[i] += 1;
        c[j] += 1;
    }

    let counts = layout
        .rects
        .iter()
        .enumerate()
        .map(|(k, r)| SeeCounts {
            id: r.id.clone(),
            horizontal: h[k],
            vertical: v[k],
        })
        .collect();

    let mut instances = Vec::with_capacity(4);
    for green_part in 0..2 {
        let greens: Vec<usize> = (0..layout.len()).filter(|&k| side[k] == green_part).collect();
        let (p, q) = (greens.len(), layout.len() - greens.len());
        for axis in [Sight::Horizontal, Sight::Vertical] {
            let c = if axis == Sight::Horizontal { &h } else { &v };
            let alpha: Vec<usize> = greens.iter().map(|&k| c[k]).collect();
            let sum: i64 = alpha.iter().map(|&a| a as i64).sum();
            let slack = match surface {
                SurfaceKind::Plane => p as i64 - 1,
                SurfaceKind::Torus => p as i64,
            };
            let rhs = sum - slack;
            instances.push(GseerInstance {
                green_part,
                axis,
                p,
                q,
                alpha,
                rhs,
                holds: p == 0 || q as i64 >= rhs,
            });
        }
    }
    Ok(GseerReport {
        surface,
        parts: [part_a.to_vec(), part_b.to_vec()],
        counts,
        instances,
    })
}

/// [`gseer_check`] with the parts taken from the extracted graph's
/// breadth-first 2-colouring.
pub fn gseer_check_auto(layout: &Layout) -> Result<GseerReport, AnalysisError> {
    let g = extract_visibility_graph(layout)?;
    let (a, b) = g.bipartition_labels().ok_or(AnalysisError::NotBipartite)?;
    gseer_check(layout, &a, &b)
}
