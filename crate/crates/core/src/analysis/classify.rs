use crate::constructors::{construct, construct_torus, ConstructError};
use crate::graph::{contains_induced, isomorphic, vertex, Graph, GraphFamily};

use super::bounds::{bipartite_bound, edge_bound};
use super::{check_induced_map, AnalysisError, BoundViolation, Certificate, Evidence, SurfaceKind, Verdict};

fn complete_bipartite(p: usize, q: usize) -> Graph {
    GraphFamily::CompleteBipartite(p, q).expected_graph().expect("valid")
}

/// The two smallest complete bipartite graphs over the edge bound:
/// `K3,5` and `K4,4` on the plane, `K3,7` and `K4,5` on the torus.
pub fn fixed_obstructions(surface: SurfaceKind) -> Vec<(String, Graph)> {
    let pairs = match surface {
        SurfaceKind::Plane => [(3, 5), (4, 4)],
        SurfaceKind::Torus => [(3, 7), (4, 5)],
    };
    pairs
        .iter()
        .map(|&(p, q)| (format!("K{p},{q}"), complete_bipartite(p, q)))
        .collect()
}

fn violation_of(pattern: &Graph, surface: SurfaceKind) -> BoundViolation {
    BoundViolation {
        vertices: pattern.vertex_count(),
        edges: pattern.edge_count(),
        bound: edge_bound(pattern.vertex_count(), surface),
        surface,
    }
}

fn obstruction(name: String, pattern: Graph, image: &[usize], g: &Graph, surface: SurfaceKind) -> Certificate {
    let map = image
        .iter()
        .enumerate()
        .map(|(i, &j)| (pattern.label(i).to_string(), g.label(j).to_string()))
        .collect();
    let violation = violation_of(&pattern, surface);
    Certificate::new(
        Verdict::NotTrvg,
        surface,
        Evidence::InducedObstruction {
            name,
            pattern,
            map,
            violation,
        },
    )
}

/// Searches `g` for an induced bipartite subgraph over the edge bound.
///
/// Tries, in order: `g` itself (when bipartite), the fixed minimal
/// obstructions of the surface, then every vertex subset of size at most
/// `max_k`, smallest and lexicographically first winning.
pub fn find_bipartite_obstruction(g: &Graph, surface: SurfaceKind, max_k: usize) -> Option<Certificate> {
    if let Ok(Some(v)) = bipartite_bound(g, surface) {
        return Some(Certificate::new(Verdict::NotTrvg, surface, Evidence::BoundViolation(v)));
    }
    for (name, pattern) in fixed_obstructions(surface) {
        if let Some(image) = contains_induced(g, &pattern) {
            return Some(obstruction(name, pattern, &image, g, surface));
        }
    }
    let n = g.vertex_count();
    for k in 1..=max_k.min(n) {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let h = g.induced(&subset);
            if h.edge_count() > edge_bound(k, surface) && h.is_bipartite() {
                let name = format!("induced bipartite subgraph on {k} vertices");
                let image = subset.clone();
                return Some(obstruction(name, h, &image, g, surface));
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    None
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

fn witness(layout: crate::geometry::Layout, surface: SurfaceKind) -> Certificate {
    Certificate::new(Verdict::Trvg, surface, Evidence::Witness(layout))
}

/// Decides `K_{p,q}`. Representable cases carry a layout; the others carry
/// the whole-graph bound violation when `K_{p,q}` is itself minimal, and an
/// induced minimal obstruction otherwise, the one with four vertices on its
/// small side preferred.
pub fn classify_complete_bipartite(p: usize, q: usize, surface: SurfaceKind) -> Result<Certificate, AnalysisError> {
    let g = complete_bipartite(p, q);
    let family = GraphFamily::CompleteBipartite(p, q);
    let built = match surface {
        SurfaceKind::Plane => construct(&family),
        SurfaceKind::Torus => construct_torus(&family),
    };
    match built {
        Ok(layout) => return Ok(witness(layout, surface)),
        Err(ConstructError::NotRepresentable(_)) => {}
        Err(e) => return Err(e.into()),
    }
    for (name, pattern) in fixed_obstructions(surface).into_iter().rev() {
        if isomorphic(&g, &pattern) {
            break;
        }
        if let Some(image) = contains_induced(&g, &pattern) {
            return Ok(obstruction(name, pattern, &image, &g, surface));
        }
    }
    let v = bipartite_bound(&g, surface)?.expect("non-representable complete bipartite graphs exceed the bound");
    Ok(Certificate::new(Verdict::NotTrvg, surface, Evidence::BoundViolation(v)))
}

/// Decides `D^a_n`, the complement of the `a`-th power of `C_n`, where the
/// answer is known, and returns `Unknown` elsewhere.
///
/// On the plane: representable for `a = 1`, for `n <= 2a + 4` and for
/// `D^2_9`; for `a >= 3` and `n >= 2a + 8` the vertices `v1..v4` and
/// `v_{a+5}..v_{a+8}` induce `K4,4`. On the torus every plane layout carries
/// over, `D^2_10` has its own layout, and for `a >= 4`, `n >= 2a + 9` the
/// vertices `v1..v4`, `v_{a+5}..v_{a+9}` induce `K4,5`.
pub fn classify_complement_power(n: usize, a: usize, surface: SurfaceKind) -> Result<Certificate, AnalysisError> {
    let family = GraphFamily::ComplementPowerCycle { n, a };
    let g = family.expected_graph()?;
    let plane_known = a == 1 || n <= 2 * a + 4 || (a, n) == (2, 9);
    match surface {
        SurfaceKind::Plane => {
            if plane_known {
                return Ok(witness(construct(&family)?, surface));
            }
            if a >= 3 && n >= 2 * a + 8 {
                return Ok(block_obstruction(&g, a, 4, 4, surface));
            }
            if a >= 3 {
                return Ok(Certificate::unknown(
                    surface,
                    format!("D^{a}_{n} lies in the range 2a+5 <= n <= 2a+7, conjectured not representable on the plane"),
                ));
            }
            Ok(Certificate::unknown(
                surface,
                format!("D^2_{n} with n >= 10 is conjectured not representable on the plane"),
            ))
        }
        SurfaceKind::Torus => {
            if plane_known || (a, n) == (2, 10) {
                return Ok(witness(construct_torus(&family)?, surface));
            }
            if a >= 4 && n >= 2 * a + 9 {
                return Ok(block_obstruction(&g, a, 4, 5, surface));
            }
            Ok(Certificate::unknown(
                surface,
                format!("no torus layout and no induced K3,7 or K4,5 known for D^{a}_{n}"),
            ))
        }
    }
}

/// `v1..vs` against `v_{a+5}..v_{a+4+t}`: both blocks are cliques of
/// `C^a_n`, hence independent in `D^a_n`, and every cross pair is more than
/// `a` apart around the cycle, hence adjacent.
fn block_obstruction(g: &Graph, a: usize, s: usize, t: usize, surface: SurfaceKind) -> Certificate {
    let pattern = complete_bipartite(s, t);
    let image: Vec<usize> = (1..=s)
        .chain(a + 5..a + 5 + t)
        .map(|k| g.index_of(&vertex(k)).expect("vertex exists"))
        .collect();
    let cert = obstruction(format!("K{s},{t}"), pattern.clone(), &image, g, surface);
    if let Evidence::InducedObstruction { map, .. } = &cert.evidence {
        debug_assert!(check_induced_map(g, &pattern, map).is_ok());
    }
    cert
}
