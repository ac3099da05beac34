use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CreationStep {
    Isolated,
    Universal,
}

impl FromStr for CreationStep {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i" | "I" | "isolated" => Ok(CreationStep::Isolated),
            "u" | "U" | "universal" => Ok(CreationStep::Universal),
            _ => Err(GraphError::InvalidFamily(format!("unknown creation step {s:?}"))),
        }
    }
}

/// Parameterised graph families whose labeled graphs the layout builders
/// must reproduce exactly.
///
/// Vertices are `v1..vn` except for the grids, which use `v_{i},{j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFamily {
    Path(usize),
    Cycle(usize),
    /// `parents[k]` is the 1-based parent of `v{k+1}`; the root `v1` has 0.
    Tree(Vec<usize>),
    Threshold(Vec<CreationStep>),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `m` columns by `n` rows, indices from 1.
    RectGrid(usize, usize),
    /// Triangular lattice patch, column `i` in `0..cols`, row `j` in `0..rows`.
    TriGrid { rows: usize, cols: usize },
    /// The triangular patch with every `v_{i},{j}` where `i ≡ j (mod 3)` removed.
    HexGrid { rows: usize, cols: usize },
    PowerCycle { n: usize, a: usize },
    ComplementPowerCycle { n: usize, a: usize },
    ExtremalBipartite(usize),
    ExtremalBipartiteTorus(usize),
}

pub fn vertex(k: usize) -> String {
    format!("v{k}")
}

pub fn grid_vertex(i: impl fmt::Display, j: impl fmt::Display) -> String {
    format!("v_{i},{j}")
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidFamily(msg.into())
}

/// Vertices `v1..vn` in order.
fn numbered(n: usize) -> Graph {
    Graph::numbered(n)
}

fn tri_neighbours_forward(i: usize, j: usize) -> impl Iterator<Item = (isize, isize)> {
    let (i, j) = (i as isize, j as isize);
    [(i + 1, j), (i, j + 1), (i - 1, j + 1)].into_iter()
}

pub(crate) fn tri_grid_graph(rows: usize, cols: usize, keep: impl Fn(usize, usize) -> bool) -> Graph {
    let mut labels = Vec::new();
    for j in 0..rows {
        for i in 0..cols {
            if keep(i, j) {
                labels.push(grid_vertex(i, j));
            }
        }
    }
    let mut g = Graph::with_vertices(labels).expect("distinct");
    for j in 0..rows {
        for i in 0..cols {
            if !keep(i, j) {
                continue;
            }
            for (ni, nj) in tri_neighbours_forward(i, j) {
                if ni < 0 || ni as usize >= cols || nj as usize >= rows {
                    continue;
                }
                let (ni, nj) = (ni as usize, nj as usize);
                if keep(ni, nj) {
                    g.add_edge(&grid_vertex(i, j), &grid_vertex(ni, nj)).expect("present");
                }
            }
        }
    }
    g
}

/// Whether `v_{i},{j}` is deleted from the triangular patch to form the hexagonal one.
pub fn hex_removed(i: usize, j: usize) -> bool {
    (i + 2 * j).is_multiple_of(3)
}

/// Cyclic index distance between `i` and `j` modulo `n`.
fn cyclic_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

impl GraphFamily {
    pub fn validate(&self) -> Result<(), GraphError> {
        use GraphFamily::*;
        match self {
            Path(n) if *n < 1 => Err(invalid("path needs n >= 1")),
            Cycle(n) if *n < 3 => Err(invalid("cycle needs n >= 3")),
            Tree(parents) => validate_parents(parents),
            Threshold(seq) if seq.is_empty() => Err(invalid("creation sequence must be nonempty")),
            RectGrid(m, n) if *m < 1 || *n < 1 => Err(invalid("grid needs m, n >= 1")),
            TriGrid { rows, cols } | HexGrid { rows, cols } if *rows < 1 || *cols < 2 => {
                Err(invalid("triangular patch needs rows >= 1 and cols >= 2"))
            }
            PowerCycle { n, a } | ComplementPowerCycle { n, a } if *n < 3 || *a < 1 => {
                Err(invalid("cycle powers need n >= 3 and a >= 1"))
            }
            ExtremalBipartite(n) if *n < 7 => Err(invalid("extremal bipartite family needs n >= 7")),
            ExtremalBipartiteTorus(n) if *n < 8 => {
                Err(invalid("extremal torus bipartite family needs n >= 8"))
            }
            _ => Ok(()),
        }
    }

    pub fn expected_graph(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        use GraphFamily::*;
        let g = match self {
            Path(n) => {
                let mut g = numbered(*n);
                for k in 1..*n {
                    g.add_edge_idx(k - 1, k);
                }
                g
            }
            Cycle(n) => PowerCycle { n: *n, a: 1 }.expected_graph()?,
            Tree(parents) => {
                let mut g = numbered(parents.len());
                for (k, &p) in parents.iter().enumerate().skip(1) {
                    g.add_edge_idx(k, p - 1);
                }
                g
            }
            Threshold(seq) => {
                let mut g = numbered(seq.len());
                for (k, step) in seq.iter().enumerate() {
                    if *step == CreationStep::Universal {
                        for j in 0..k {
                            g.add_edge_idx(j, k);
                        }
                    }
                }
                g
            }
            Complete(n) => numbered(*n).complement(),
            CompleteBipartite(p, q) => {
                let mut g = numbered(p + q);
                for i in 0..*p {
                    for j in *p..p + q {
                        g.add_edge_idx(i, j);
                    }
                }
                g
            }
            RectGrid(m, n) => {
                let mut labels = Vec::new();
                for j in 1..=*n {
                    for i in 1..=*m {
                        labels.push(grid_vertex(i, j));
                    }
                }
                let mut g = Graph::with_vertices(labels)?;
                for j in 1..=*n {
                    for i in 1..=*m {
                        if i < *m {
                            g.add_edge(&grid_vertex(i, j), &grid_vertex(i + 1, j))?;
                        }
                        if j < *n {
                            g.add_edge(&grid_vertex(i, j), &grid_vertex(i, j + 1))?;
                        }
                    }
                }
                g
            }
            TriGrid { rows, cols } => tri_grid_graph(*rows, *cols, |_, _| true),
            HexGrid { rows, cols } => tri_grid_graph(*rows, *cols, |i, j| !hex_removed(i, j)),
            PowerCycle { n, a } => {
                let mut g = numbered(*n);
                for i in 0..*n {
                    for j in i + 1..*n {
                        if cyclic_distance(i, j, *n) <= *a {
                            g.add_edge_idx(i, j);
                        }
                    }
                }
                g
            }
            ComplementPowerCycle { n, a } => PowerCycle { n: *n, a: *a }.expected_graph()?.complement(),
            ExtremalBipartite(n) => extremal(*n, 3),
            ExtremalBipartiteTorus(n) => extremal(*n, 4),
        };
        Ok(g)
    }

    pub fn name(&self) -> String {
        use GraphFamily::*;
        match self {
            Path(n) => format!("P{n}"),
            Cycle(n) => format!("C{n}"),
            Tree(p) => format!("tree on {} vertices", p.len()),
            Threshold(s) => format!("threshold graph on {} vertices", s.len()),
            Complete(n) => format!("K{n}"),
            CompleteBipartite(p, q) => format!("K{p},{q}"),
            RectGrid(m, n) => format!("{m}x{n} grid"),
            TriGrid { rows, cols } => format!("{rows}x{cols} triangular patch"),
            HexGrid { rows, cols } => format!("{rows}x{cols} hexagonal patch"),
            PowerCycle { n, a } => format!("C^{a}_{n}"),
            ComplementPowerCycle { n, a } => format!("D^{a}_{n}"),
            ExtremalBipartite(n) => format!("extremal bipartite graph on {n} vertices"),
            ExtremalBipartiteTorus(n) => format!("extremal torus bipartite graph on {n} vertices"),
        }
    }
}

/// Four reds `v1..v4` completely joined to `greens` large greens; every
/// remaining vertex is a small green adjacent to `v1` and `v3`.
fn extremal(n: usize, greens: usize) -> Graph {
    let mut g = numbered(n);
    for r in 0..4 {
        for k in 4..4 + greens {
            g.add_edge_idx(r, k);
        }
    }
    for k in 4 + greens..n {
        g.add_edge_idx(0, k);
        g.add_edge_idx(2, k);
    }
    g
}

fn validate_parents(parents: &[usize]) -> Result<(), GraphError> {
    let n = parents.len();
    if n == 0 {
        return Err(invalid("tree needs at least one vertex"));
    }
    if parents[0] != 0 {
        return Err(invalid("v1 must be the root (parent 0)"));
    }
    for (k, &p) in parents.iter().enumerate().skip(1) {
        if p == 0 || p > n || p == k + 1 {
            return Err(invalid(format!("v{} has invalid parent {p}", k + 1)));
        }
    }
    for start in 1..n {
        let mut v = start;
        for _ in 0..n {
            if v == 0 {
                break;
            }
            v = parents[v] - 1;
        }
        if v != 0 {
            return Err(invalid(format!("parent array has a cycle through v{}", start + 1)));
        }
    }
    Ok(())
}
