use std::collections::HashMap;

use crate::geometry::{Interval, Layout};
use crate::graph::{grid_vertex, hex_removed};
use crate::rational::{q, Rational};

use super::{invalid, rect, ConstructError};

fn u(k: usize) -> Rational {
    Rational::pow2_neg(k as i64 + 2)
}

/// `m x n` grid patch. `v_{i},{j}` sits inside the unit box at `(i, j)` as
/// `(i + u_{j+1}, i + u_{j-1}) x (j + u_{i+1}, j + u_{i-1})` with
/// `u_k = 2^-k / 4`, so its spans overlap those of its two neighbours on each
/// axis and merely touch those two steps away.
pub fn construct_rect_grid(m: usize, n: usize) -> Result<Layout, ConstructError> {
    if m < 1 || n < 1 {
        return Err(invalid("grid needs m, n >= 1"));
    }
    let mut rects = Vec::with_capacity(m * n);
    for j in 1..=n {
        for i in 1..=m {
            let (x, y) = (Rational::integer(i as i64), Rational::integer(j as i64));
            rects.push(rect(
                grid_vertex(i, j),
                &x + &u(j + 1),
                &x + &u(j - 1),
                &y + &u(i + 1),
                &y + &u(i - 1),
            )?);
        }
    }
    Ok(Layout::plane(rects))
}

/// Triangular patch with `rows` rows and `cols` columns; `v_{i},{j}` is
/// adjacent to `v_{i±1},{j}`, `v_{i},{j-1}`, `v_{i+1},{j-1}`, `v_{i-1},{j+1}`
/// and `v_{i},{j+1}`.
///
/// Row `j` lives in the unit box centred at `(ceil(j/2), floor(j/2))`. Even
/// rows are staircases: abutting x-segments, y-spans overlapping only their
/// row neighbours. An odd row takes its y-span from the overlap of its two
/// lower neighbours and its x-span from the hull of its two upper ones.
/// Even rows are padded by one column on each side and a top even row is
/// added when needed, so every odd rectangle has all four neighbours; the
/// padding is removed at the end, which leaves the induced patch.
pub fn construct_tri_grid(rows: usize, cols: usize) -> Result<Layout, ConstructError> {
    if rows < 1 || cols < 2 {
        return Err(invalid("triangular patch needs rows >= 1 and cols >= 2"));
    }
    let last = rows as i64 - 1;
    let top = if last % 2 == 0 { last } else { last + 1 };
    let cols = cols as i64;
    // Even rows hold columns -1..=cols.
    let count = cols + 2;
    let seg = q(1, count);
    let h = q(1, count + 1);

    let mut spans: HashMap<(i64, i64), (Interval, Interval)> = HashMap::new();
    for j in (0..=top).step_by(2) {
        let c = Rational::integer(j / 2);
        let (bx, by) = (&c - &q(1, 2), &c - &q(1, 2));
        for i in -1..=cols {
            let p = i + 1;
            let x = Interval::new(&bx + &(&seg * p), &bx + &(&seg * (p + 1)))?;
            let y = Interval::new(&by + &(&h * p), &by + &(&h * (p + 2)))?;
            spans.insert((i, j), (x, y));
        }
    }
    for j in (1..top).step_by(2) {
        for i in 0..cols {
            let (_, lo_a) = &spans[&(i, j - 1)];
            let (_, lo_b) = &spans[&(i + 1, j - 1)];
            let (up_a, _) = &spans[&(i - 1, j + 1)];
            let (up_b, _) = &spans[&(i, j + 1)];
            let y0 = lo_a.lo.clone().max(lo_b.lo.clone());
            let y1 = lo_a.hi.clone().min(lo_b.hi.clone());
            let x0 = up_a.lo.clone().min(up_b.lo.clone());
            let x1 = up_a.hi.clone().max(up_b.hi.clone());
            let x = Interval::new(x0, x1)?;
            let y = Interval::new(y0, y1)?;
            spans.insert((i, j), (x, y));
        }
    }

    let mut rects = Vec::with_capacity((rows * cols as usize).max(1));
    for j in 0..=last {
        for i in 0..cols {
            let (x, y) = spans[&(i, j)].clone();
            rects.push(rect(grid_vertex(i, j), x.lo, x.hi, y.lo, y.hi)?);
        }
    }
    Ok(Layout::plane(rects))
}

/// Hexagonal patch: the triangular patch without the vertices `v_{i},{j}`
/// with `i ≡ j (mod 3)`.
pub fn construct_hex_grid(rows: usize, cols: usize) -> Result<Layout, ConstructError> {
    let tri = construct_tri_grid(rows, cols)?;
    Ok(tri.retain(|id| {
        let (i, j) = parse_grid_label(id).expect("grid label");
        !hex_removed(i, j)
    }))
}

fn parse_grid_label(id: &str) -> Option<(usize, usize)> {
    let (i, j) = id.strip_prefix("v_")?.split_once(',')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::assert_builds;
    use crate::geometry::extract_visibility_graph;
    use crate::graph::{contains_induced, GraphFamily};

    #[test]
    fn rect_grids() {
        for (m, n) in [(1, 1), (1, 5), (3, 3), (5, 4), (2, 7)] {
            assert_builds(&construct_rect_grid(m, n).unwrap(), &GraphFamily::RectGrid(m, n));
        }
        let g = extract_visibility_graph(&construct_rect_grid(5, 4).unwrap()).unwrap();
        assert_eq!(g.edge_count(), 31);
    }

    #[test]
    fn tri_grids() {
        for rows in 1..=5 {
            for cols in 2..=5 {
                assert_builds(&construct_tri_grid(rows, cols).unwrap(), &GraphFamily::TriGrid { rows, cols });
            }
        }
        let g = extract_visibility_graph(&construct_tri_grid(2, 2).unwrap()).unwrap();
        let k3 = GraphFamily::Complete(3).expected_graph().unwrap();
        assert!(contains_induced(&g, &k3).is_some());
    }

    #[test]
    fn hex_grids() {
        for (rows, cols) in [(3, 3), (4, 5), (6, 6)] {
            assert_builds(&construct_hex_grid(rows, cols).unwrap(), &GraphFamily::HexGrid { rows, cols });
        }
        let g = extract_visibility_graph(&construct_hex_grid(3, 3).unwrap()).unwrap();
        let c6 = GraphFamily::Cycle(6).expected_graph().unwrap();
        assert!(contains_induced(&g, &c6).is_some());
    }

    #[test]
    fn parses_grid_labels() {
        assert_eq!(parse_grid_label("v_12,3"), Some((12, 3)));
        assert_eq!(parse_grid_label("v3"), None);
    }
}
