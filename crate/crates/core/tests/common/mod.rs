#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use trvg::constructors::*;
use trvg::geometry::{Layout, Rect, Surface};
use trvg::graph::{vertex, CreationStep, Graph, GraphFamily};
use trvg::rational::{q, qi, Rational};

pub fn goldens_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens")
}

pub fn family(f: GraphFamily) -> Graph {
    f.expected_graph().unwrap()
}

/// Every checked-in layout, with the graph it must realize.
pub fn golden_cases() -> Vec<(&'static str, Layout, Graph)> {
    use GraphFamily::*;
    let three_squares = Layout::plane(
        (0..3)
            .map(|k| Rect::plane(vertex(k + 1), qi(k as i64), qi(k as i64 + 1), qi(0), qi(1)).unwrap())
            .collect(),
    );
    let tree = vec![0, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 6, 6, 8, 10, 14, 14, 14, 15, 18];
    vec![
        ("three_squares", three_squares, family(Complete(3))),
        ("tree_20", construct_tree(&tree).unwrap(), family(Tree(tree))),
        ("cycle_6", construct_cycle(6).unwrap(), family(Cycle(6))),
        ("threshold_iuiuu", construct_threshold(&steps("iuiuu")).unwrap(), family(Threshold(steps("iuiuu")))),
        ("rect_grid_3x3", construct_rect_grid(3, 3).unwrap(), family(RectGrid(3, 3))),
        ("tri_grid_3x3", construct_tri_grid(3, 3).unwrap(), family(TriGrid { rows: 3, cols: 3 })),
        ("hex_grid_4x5", construct_hex_grid(4, 5).unwrap(), family(HexGrid { rows: 4, cols: 5 })),
        ("extremal_7", construct_extremal_bipartite(7).unwrap(), family(ExtremalBipartite(7))),
        ("k15", construct_complete_bipartite(1, 5).unwrap(), family(CompleteBipartite(1, 5))),
        ("k24", construct_complete_bipartite(2, 4).unwrap(), family(CompleteBipartite(2, 4))),
        ("k34", construct_complete_bipartite(3, 4).unwrap(), family(CompleteBipartite(3, 4))),
        ("power_cycle_9_3", construct_power_cycle(9, 3).unwrap(), family(PowerCycle { n: 9, a: 3 })),
        ("complement_cycle_8", construct_complement_cycle(8).unwrap(), family(ComplementPowerCycle { n: 8, a: 1 })),
        ("complement_cycle_9", construct_complement_cycle(9).unwrap(), family(ComplementPowerCycle { n: 9, a: 1 })),
        (
            "complement_power_12_4",
            construct_complement_power_small(12, 4).unwrap(),
            family(ComplementPowerCycle { n: 12, a: 4 }),
        ),
        ("d2_9", fixed_layout(FixedLayout::D2_9).unwrap(), family(ComplementPowerCycle { n: 9, a: 2 })),
        (
            "d2_10_torus",
            fixed_layout(FixedLayout::D2_10Torus).unwrap(),
            family(ComplementPowerCycle { n: 10, a: 2 }),
        ),
        (
            "extremal_torus_11",
            construct_extremal_bipartite_torus(11).unwrap(),
            family(ExtremalBipartiteTorus(11)),
        ),
        ("k35_torus", construct_complete_bipartite_torus(3, 5).unwrap(), family(CompleteBipartite(3, 5))),
        ("k36_torus", construct_complete_bipartite_torus(3, 6).unwrap(), family(CompleteBipartite(3, 6))),
        ("k44_torus", construct_complete_bipartite_torus(4, 4).unwrap(), family(CompleteBipartite(4, 4))),
    ]
}

pub fn steps(s: &str) -> Vec<CreationStep> {
    s.chars().map(|c| c.to_string().parse().unwrap()).collect()
}

/// Canonical representatives of the unlabeled graphs on `n` vertices, as
/// edge masks over pairs `(i, j)`, `i < j`, in row order. The representative
/// is the smallest mask over all relabelings.
pub fn unlabeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut reps = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let best = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).fold(0u64, |m, (_, &(i, j))| {
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    m | 1 << pairs.iter().position(|&x| x == (a, b)).unwrap()
                })
            })
            .min()
            .unwrap();
        reps.insert(best);
    }
    reps.into_iter()
        .map(|m| {
            let mut g = Graph::numbered(n);
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if m >> b & 1 == 1 {
                    g.add_edge_idx(i, j);
                }
            }
            g
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn coord(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    let den = [1, 2, 3, 4][rng.gen_range(0..4)];
    q(rng.gen_range(lo * den..=hi * den), den)
}

fn fits(layout: &Layout, r: &Rect) -> bool {
    layout.rects.iter().all(|o| !o.interiors_overlap(r).unwrap())
}

/// A random valid plane layout on at most `n` rectangles with small
/// rational coordinates, shared boundaries included.
pub fn random_plane_layout(rng: &mut ChaCha8Rng, n: usize) -> Layout {
    let mut l = Layout::plane(vec![]);
    let mut tries = 0;
    while l.len() < n && tries < 20 * n {
        tries += 1;
        let x0 = coord(rng, 0, 12);
        let y0 = coord(rng, 0, 12);
        let r = Rect::plane(
            vertex(l.len() + 1),
            x0.clone(),
            &x0 + &coord(rng, 0, 4) + q(1, 4),
            y0.clone(),
            &y0 + &coord(rng, 0, 4) + q(1, 4),
        )
        .unwrap();
        if fits(&l, &r) {
            l.rects.push(r);
        }
    }
    l
}

/// A random valid layout whose visibility graph is bipartite, together with
/// its two colour classes. Each new rectangle is kept only if everything it
/// sees has one colour; it takes the other.
pub fn random_bipartite_layout(rng: &mut ChaCha8Rng, n: usize, torus: bool) -> (Layout, [Vec<String>; 2]) {
    let surface = if torus {
        let w = qi(rng.gen_range(6..=16));
        let h = qi(rng.gen_range(6..=16));
        Surface::torus(w, h)
    } else {
        Surface::Plane
    };
    let mut l = Layout::new(surface.clone(), vec![]);
    let mut colour: Vec<usize> = Vec::new();
    let mut tries = 0;
    while l.len() < n && tries < 40 * n {
        tries += 1;
        let id = vertex(l.len() + 1);
        // Long thin slabs make dense bipartite layouts likely.
        let (wx, wy) = if rng.gen_bool(0.3) {
            (coord(rng, 2, 8), q(1, 2))
        } else if rng.gen_bool(0.4) {
            (q(1, 2), coord(rng, 2, 8))
        } else {
            (coord(rng, 0, 2) + q(1, 4), coord(rng, 0, 2) + q(1, 4))
        };
        let r = match &surface {
            Surface::Plane => {
                let (x0, y0) = (coord(rng, 0, 12), coord(rng, 0, 12));
                Rect::plane(id, x0.clone(), &x0 + &wx, y0.clone(), &y0 + &wy).unwrap()
            }
            Surface::Torus { w, h } => {
                let wx = if wx < *w { wx } else { w - q(1, 2) };
                let wy = if wy < *h { wy } else { h - q(1, 2) };
                let x0 = coord(rng, 0, 16);
                let y0 = coord(rng, 0, 16);
                Rect::torus(id, x0.rem_euclid(w), wx, y0.rem_euclid(h), wy, w, h).unwrap()
            }
        };
        if !fits(&l, &r) {
            continue;
        }
        let seen: BTreeSet<usize> = l
            .rects
            .iter()
            .enumerate()
            .filter(|(_, o)| trvg::geometry::sees(o, &r, &surface).unwrap().is_some())
            .map(|(k, _)| colour[k])
            .collect();
        let c = match seen.len() {
            0 => rng.gen_range(0..2),
            1 => 1 - seen.into_iter().next().unwrap(),
            _ => continue,
        };
        l.rects.push(r);
        colour.push(c);
    }
    let mut parts = [Vec::new(), Vec::new()];
    for (r, c) in l.rects.iter().zip(&colour) {
        parts[*c].push(r.id.clone());
    }
    (l, parts)
}
