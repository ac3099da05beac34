//! Layout builders for graph families that are known to be transparent
//! rectangle visibility graphs. Every builder's output re-extracts to the
//! family's labeled graph.

mod basic;
mod bipartite;
mod fixed;
mod grids;
mod powers;

use thiserror::Error;

use crate::geometry::{GeometryError, Layout, Rect};
use crate::graph::{GraphError, GraphFamily};
use crate::rational::{decimal, Rational};

pub use basic::{construct_cycle, construct_threshold, construct_tree, merge_at_vertex};
pub use bipartite::{
    construct_complete_bipartite, construct_complete_bipartite_torus, construct_extremal_bipartite,
    construct_extremal_bipartite_torus,
};
pub use fixed::{fixed_layout, FixedLayout};
pub use grids::{construct_hex_grid, construct_rect_grid, construct_tri_grid};
pub use powers::{construct_complement_cycle, construct_complement_power_small, construct_power_cycle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    /// The requested graph is not a visibility graph on the requested surface.
    #[error("no layout exists: {0}")]
    NotRepresentable(String),
    /// The requested graph lies in a range where no layout is known.
    #[error("no layout known: {0}")]
    Unknown(String),
    #[error("{vertex:?} sees {horizontal:?} horizontally and {vertical:?} vertically in the {side} layout")]
    MergeBlocked {
        side: &'static str,
        vertex: String,
        horizontal: String,
        vertical: String,
    },
    #[error("unknown fixed layout {0:?}")]
    UnknownFixed(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> ConstructError {
    ConstructError::InvalidParameters(msg.into())
}

/// Plane rectangle `(x0, x1) x (y0, y1)`.
fn rect(id: impl Into<String>, x0: Rational, x1: Rational, y0: Rational, y1: Rational) -> Result<Rect, ConstructError> {
    Ok(Rect::plane(id, x0, x1, y0, y1)?)
}

fn irect(id: impl Into<String>, x0: i64, x1: i64, y0: i64, y1: i64) -> Result<Rect, ConstructError> {
    rect(id, x0.into(), x1.into(), y0.into(), y1.into())
}

/// Plane rectangle from decimal literals `(x0, x1) x (y0, y1)`.
fn drect(id: impl Into<String>, x0: &str, x1: &str, y0: &str, y1: &str) -> Result<Rect, ConstructError> {
    rect(id, decimal(x0), decimal(x1), decimal(y0), decimal(y1))
}

/// Builds a plane layout for any family with a known plane construction.
pub fn construct(family: &GraphFamily) -> Result<Layout, ConstructError> {
    family.validate()?;
    use GraphFamily::*;
    match family {
        Path(n) => construct_tree(&(0..*n).collect::<Vec<_>>()),
        Cycle(n) => construct_cycle(*n),
        Tree(parents) => construct_tree(parents),
        Threshold(seq) => construct_threshold(seq),
        Complete(0) => Ok(Layout::plane(vec![])),
        Complete(n) => construct_power_cycle_or_complete(*n),
        CompleteBipartite(p, q) => construct_complete_bipartite(*p, *q),
        RectGrid(m, n) => construct_rect_grid(*m, *n),
        TriGrid { rows, cols } => construct_tri_grid(*rows, *cols),
        HexGrid { rows, cols } => construct_hex_grid(*rows, *cols),
        PowerCycle { n, a } => construct_power_cycle(*n, *a),
        ComplementPowerCycle { n, a: 1 } => construct_complement_cycle(*n),
        ComplementPowerCycle { n, a } if *n <= 2 * a + 4 => construct_complement_power_small(*n, *a),
        ComplementPowerCycle { n: 9, a: 2 } => fixed_layout(FixedLayout::D2_9),
        ComplementPowerCycle { n, a } if *a >= 3 && *n >= 2 * a + 8 => Err(ConstructError::NotRepresentable(
            format!("D^{a}_{n} contains an induced K4,4"),
        )),
        ComplementPowerCycle { n, a } => Err(ConstructError::Unknown(format!(
            "D^{a}_{n} on the plane is conjectured not to be representable"
        ))),
        ExtremalBipartite(n) => construct_extremal_bipartite(*n),
        ExtremalBipartiteTorus(_) => Err(invalid("this family is built on the torus only")),
    }
}

/// Builds a torus layout. Families without a dedicated torus construction are
/// taken from the plane and placed on a torus larger than their bounding box.
pub fn construct_torus(family: &GraphFamily) -> Result<Layout, ConstructError> {
    family.validate()?;
    use GraphFamily::*;
    match family {
        ExtremalBipartiteTorus(n) => construct_extremal_bipartite_torus(*n),
        CompleteBipartite(p, q) => construct_complete_bipartite_torus(*p, *q),
        ComplementPowerCycle { n: 10, a: 2 } => fixed_layout(FixedLayout::D2_10Torus),
        ComplementPowerCycle { n, a } if *a >= 2 && *n > 2 * a + 4 && (*a, *n) != (2, 9) => {
            Err(ConstructError::Unknown(format!("no torus layout known for D^{a}_{n}")))
        }
        ExtremalBipartite(n) => Ok(construct_extremal_bipartite(*n)?.to_torus()?),
        _ => Ok(construct(family)?.to_torus()?),
    }
}

fn construct_power_cycle_or_complete(n: usize) -> Result<Layout, ConstructError> {
    if n < 3 {
        return construct_threshold(&vec![crate::graph::CreationStep::Universal; n]);
    }
    construct_power_cycle(n, n / 2)
}

#[cfg(test)]
pub(crate) fn assert_builds(layout: &Layout, family: &GraphFamily) {
    layout.ensure_valid().unwrap();
    let got = crate::geometry::extract_visibility_graph(layout).unwrap();
    let want = family.expected_graph().unwrap();
    assert_eq!(got, want, "{}", family.name());
}
