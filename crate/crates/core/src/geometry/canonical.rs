use crate::rational::Rational;

use super::layout::{Layout, Rect, Surface};
use super::GeometryError;

// Soundness of rank compression.
//
// Let g > 0 be the smallest positive gap between two distinct endpoint values
// on an axis. Shrink every interval inward by a distinct amount below g/2:
// a closing endpoint at value c moves to c - e, an opening endpoint at c moves
// to c + e. A strict overlap max(lo) < min(hi) has positive length at least g
// and survives any such shrink. A non-overlap max(lo) >= min(hi) cannot turn
// into an overlap, because lower endpoints only grow and upper endpoints only
// shrink. Every interval keeps positive length since its two endpoints were at
// least g apart. Hence the shrunk layout has all 2n endpoints distinct per axis,
// stays interior-disjoint and has exactly the same visibility graph.
//
// The tie order realised by the shrink is: at a shared value, closing
// endpoints precede opening ones; within one kind, ties are broken by the
// rectangle's position in the layout. Replacing each endpoint by its rank
// preserves that order, which is all the visibility graph depends on.

/// Endpoint sort key: value, then closing (0) before opening (1), then the
/// rectangle index.
fn ranks(spans: &[(Rational, Rational)]) -> Vec<(i64, i64)> {
    let mut events: Vec<(&Rational, u8, usize)> = Vec::with_capacity(spans.len() * 2);
    for (k, (lo, hi)) in spans.iter().enumerate() {
        events.push((lo, 1, k));
        events.push((hi, 0, k));
    }
    events.sort();
    let mut out = vec![(0i64, 0i64); spans.len()];
    for (rank, (_, kind, k)) in events.into_iter().enumerate() {
        if kind == 1 {
            out[k].0 = rank as i64;
        } else {
            out[k].1 = rank as i64;
        }
    }
    out
}

/// Rank-compresses a plane layout onto integer coordinates `0..2n` per axis
/// with all endpoints distinct, preserving the visibility graph.
pub fn canonicalize(layout: &Layout) -> Result<Layout, GeometryError> {
    if layout.surface != Surface::Plane {
        return Err(GeometryError::NotPlane);
    }
    layout.ensure_valid()?;
    let xs: Vec<_> = layout.rects.iter().map(|r| (r.x.lo().clone(), r.x.hi())).collect();
    let ys: Vec<_> = layout.rects.iter().map(|r| (r.y.lo().clone(), r.y.hi())).collect();
    let (rx, ry) = (ranks(&xs), ranks(&ys));
    let rects = layout
        .rects
        .iter()
        .enumerate()
        .map(|(k, r)| {
            Rect::plane(
                r.id.clone(),
                Rational::integer(rx[k].0),
                Rational::integer(rx[k].1),
                Rational::integer(ry[k].0),
                Rational::integer(ry[k].1),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Layout::plane(rects))
}
