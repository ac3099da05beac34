//! Rectangle layouts on the plane and the flat torus, and extraction of their
//! transparent visibility graphs.
//!
//! Two rectangles see each other when a horizontal or vertical line meets
//! both interiors. Nothing blocks a line of sight, so adjacency reduces to an
//! open-overlap test on one of the two axis projections.

mod canonical;
mod layout;
mod span;

use thiserror::Error;

use crate::rational::Rational;

pub use canonical::canonicalize;
pub use layout::{
    extract_visibility_graph, natural_cmp, sees, visibility_pairs, Layout, Rect, Sight, Surface,
    Violation,
};
pub use span::{CircularArc, Interval, Span};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    /// `(lo, hi)` with `lo >= hi`.
    #[error("degenerate interval ({}, {})", .0.0, .0.1)]
    DegenerateInterval(Box<(Rational, Rational)>),
    /// `(length, period)`.
    #[error("arc length {} must lie strictly between 0 and the period {}", .0.0, .0.1)]
    BadArcLength(Box<(Rational, Rational)>),
    #[error("period {0} must be positive")]
    BadPeriod(Rational),
    #[error("cannot compare an interval with an arc")]
    MixedSpans,
    #[error("arc periods differ: {} vs {}", .0.0, .0.1)]
    PeriodMismatch(Box<(Rational, Rational)>),
    #[error("operation requires a plane layout")]
    NotPlane,
    #[error("scale factors must be positive")]
    NonPositiveScale,
    #[error("invalid layout: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidLayout(Vec<Violation>),
    #[error("graph error: {0}")]
    Graph(String),
}
