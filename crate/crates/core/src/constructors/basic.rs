use std::collections::HashSet;

use crate::geometry::{sees, Interval, Layout, Rect, Sight, Surface};
use crate::graph::{vertex, CreationStep, GraphFamily};
use crate::rational::Rational;

use super::{invalid, irect, rect, ConstructError};

/// Threshold graph from its creation sequence. An isolated vertex goes
/// diagonally past the bounding box; a universal one is a slab covering a full
/// side of it, cycling right, top, left, bottom.
pub fn construct_threshold(seq: &[CreationStep]) -> Result<Layout, ConstructError> {
    if seq.is_empty() {
        return Err(invalid("creation sequence must be nonempty"));
    }
    let mut rects = vec![irect(vertex(1), 0, 1, 0, 1)?];
    let (mut x0, mut x1, mut y0, mut y1) = (Rational::zero(), Rational::one(), Rational::zero(), Rational::one());
    let mut side = 0;
    for (k, step) in seq.iter().enumerate().skip(1) {
        let id = vertex(k + 1);
        let r = match step {
            CreationStep::Isolated => rect(id, &x1 + 1, &x1 + 2, &y1 + 1, &y1 + 2)?,
            CreationStep::Universal => {
                side += 1;
                match side % 4 {
                    1 => rect(id, x1.clone(), &x1 + 1, y0.clone(), y1.clone())?,
                    2 => rect(id, x0.clone(), x1.clone(), y1.clone(), &y1 + 1)?,
                    3 => rect(id, &x0 - 1, x0.clone(), y0.clone(), y1.clone())?,
                    _ => rect(id, x0.clone(), x1.clone(), &y0 - 1, y0.clone())?,
                }
            }
        };
        x0 = x0.min(r.x.lo().clone());
        x1 = x1.max(r.x.hi());
        y0 = y0.min(r.y.lo().clone());
        y1 = y1.max(r.y.hi());
        rects.push(r);
    }
    Ok(Layout::plane(rects))
}

/// Rooted tree from a parent array (`parents[k]` is the 1-based parent of
/// `v{k+1}`, 0 for the root `v1`).
///
/// Breadth-first layers alternate between the parent's horizontal and
/// vertical vision. A child takes a private slice of its parent's span on the
/// shared axis and a fresh unit slot past the bounding box on the other, so it
/// sees its parent and nothing else placed so far.
pub fn construct_tree(parents: &[usize]) -> Result<Layout, ConstructError> {
    GraphFamily::Tree(parents.to_vec()).validate()?;
    let n = parents.len();
    let mut children = vec![Vec::new(); n];
    for (k, &p) in parents.iter().enumerate().skip(1) {
        children[p - 1].push(k);
    }

    let mut xs: Vec<Option<Interval>> = vec![None; n];
    let mut ys: Vec<Option<Interval>> = vec![None; n];
    xs[0] = Some(Interval::new(Rational::zero(), Rational::one())?);
    ys[0] = Some(Interval::new(Rational::zero(), Rational::one())?);
    let (mut xmax, mut ymax) = (Rational::one(), Rational::one());

    let mut layer = vec![0usize];
    let mut horizontal = true;
    while !layer.is_empty() {
        let mut next = Vec::new();
        let mut slot = if horizontal { &xmax + 1 } else { &ymax + 1 };
        for &p in &layer {
            let d = children[p].len();
            if d == 0 {
                continue;
            }
            let shared = if horizontal { ys[p].clone() } else { xs[p].clone() }.expect("placed");
            let piece = shared.len() / Rational::integer(d as i64);
            for (t, &c) in children[p].iter().enumerate() {
                let lo = &shared.lo + &(&piece * t as i64);
                let inherited = Interval::new(lo.clone(), &lo + &piece)?;
                let fresh = Interval::new(slot.clone(), &slot + 1)?;
                slot = &slot + 1;
                if horizontal {
                    xs[c] = Some(fresh);
                    ys[c] = Some(inherited);
                } else {
                    xs[c] = Some(inherited);
                    ys[c] = Some(fresh);
                }
                next.push(c);
            }
        }
        if horizontal {
            xmax = slot;
        } else {
            ymax = slot;
        }
        horizontal = !horizontal;
        layer = next;
    }

    let rects = (0..n)
        .map(|k| {
            let (x, y) = (xs[k].clone().expect("placed"), ys[k].clone().expect("placed"));
            rect(vertex(k + 1), x.lo, x.hi, y.lo, y.hi)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Layout::plane(rects))
}

/// Cycle `C_n`: a staircase `v1..v_{n-1}` of consecutively overlapping
/// y-spans and a closing rectangle under the last column reaching back to
/// `v1` horizontally.
pub fn construct_cycle(n: usize) -> Result<Layout, ConstructError> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    let n = n as i64;
    let mut rects = (1..n)
        .map(|k| irect(vertex(k as usize), k - 1, k, k - 1, k + 1))
        .collect::<Result<Vec<_>, _>>()?;
    rects.push(irect(vertex(n as usize), n - 2, n - 1, 0, 1)?);
    Ok(Layout::plane(rects))
}

fn blockers(layout: &Layout, v: &Rect) -> Result<(Option<String>, Option<String>), ConstructError> {
    let (mut h, mut w) = (None, None);
    for r in &layout.rects {
        if r.id == v.id {
            continue;
        }
        match sees(v, r, &layout.surface)? {
            Some(Sight::Horizontal) if h.is_none() => h = Some(r.id.clone()),
            Some(Sight::Vertical) if w.is_none() => w = Some(r.id.clone()),
            _ => {}
        }
    }
    Ok((h, w))
}

/// Rotates `layout` if needed so that `v` sees nothing along `free`, then maps
/// `v` onto the unit square.
fn normalise(layout: &Layout, v: &str, free: Sight, side: &'static str) -> Result<Layout, ConstructError> {
    if layout.surface != Surface::Plane {
        return Err(invalid("merging needs plane layouts"));
    }
    layout.ensure_valid()?;
    let vr = layout
        .get(v)
        .ok_or_else(|| invalid(format!("{v:?} is missing from the {side} layout")))?;
    let (h, w) = blockers(layout, vr)?;
    let blocked_along_free = match free {
        Sight::Horizontal => h.is_some(),
        Sight::Vertical => w.is_some(),
    };
    let turned = if !blocked_along_free {
        layout.clone()
    } else if h.is_none() || w.is_none() {
        layout.rotate_quarter()?
    } else {
        return Err(ConstructError::MergeBlocked {
            side,
            vertex: v.to_string(),
            horizontal: h.unwrap_or_default(),
            vertical: w.unwrap_or_default(),
        });
    };
    let vr = turned.get(v).expect("present");
    let (sx, sy) = (Rational::one() / vr.x.len(), Rational::one() / vr.y.len());
    let moved = turned.translate(&-vr.x.lo(), &-vr.y.lo())?;
    Ok(moved.scale(&sx, &sy)?)
}

fn max_abs(layout: &Layout) -> Rational {
    let mut m = Rational::zero();
    for r in &layout.rects {
        for c in [r.x.lo().clone(), r.x.hi(), r.y.lo().clone(), r.y.hi()] {
            m = m.max(c.abs());
        }
    }
    m
}

/// Glues two layouts at their common vertex `v`. The result represents the
/// union of the two graphs.
///
/// In each input, `v` must see nothing along at least one axis. The first
/// layout is turned so that `v` has no horizontal sight, the second so that it
/// has no vertical sight; both copies of `v` are mapped to the unit square,
/// then the first layout's rectangles are pushed away vertically and the
/// second's horizontally until no cross pair shares a projection.
pub fn merge_at_vertex(l1: &Layout, v: &str, l2: &Layout) -> Result<Layout, ConstructError> {
    let ids1: HashSet<&str> = l1.rects.iter().map(|r| r.id.as_str()).collect();
    if let Some(r) = l2.rects.iter().find(|r| r.id != v && ids1.contains(r.id.as_str())) {
        return Err(invalid(format!("{:?} occurs in both layouts", r.id)));
    }
    let a = normalise(l1, v, Sight::Horizontal, "first")?;
    let b = normalise(l2, v, Sight::Vertical, "second")?;
    let d = max_abs(&a).max(max_abs(&b)) + 1;
    let zero = Rational::zero();

    let mut rects = Vec::with_capacity(a.len() + b.len() - 1);
    for r in &a.rects {
        if r.id == v {
            rects.push(r.clone());
            continue;
        }
        let dy = if r.y.lo() >= &Rational::one() { d.clone() } else { -&d };
        rects.push(shift(r, &zero, &dy)?);
    }
    for r in &b.rects {
        if r.id == v {
            continue;
        }
        let dx = if r.x.lo() >= &Rational::one() { d.clone() } else { -&d };
        rects.push(shift(r, &dx, &zero)?);
    }
    Ok(Layout::plane(rects))
}

fn shift(r: &Rect, dx: &Rational, dy: &Rational) -> Result<Rect, ConstructError> {
    rect(r.id.clone(), r.x.lo() + dx, r.x.hi() + dx, r.y.lo() + dy, r.y.hi() + dy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::assert_builds;
    use crate::geometry::extract_visibility_graph;
    use crate::graph::Graph;
    use CreationStep::*;

    #[test]
    fn threshold_examples() {
        for seq in [
            vec![Isolated],
            vec![Isolated, Universal, Universal],
            vec![Isolated, Isolated, Universal],
            vec![Isolated, Universal, Isolated, Isolated, Universal, Universal, Isolated, Universal, Universal],
        ] {
            assert_builds(&construct_threshold(&seq).unwrap(), &GraphFamily::Threshold(seq));
        }
    }

    #[test]
    fn tree_examples() {
        assert_builds(&construct_tree(&[0, 1, 2, 3, 4]).unwrap(), &GraphFamily::Path(5));
        let star = vec![0, 1, 1, 1, 1, 1, 1, 1, 1, 1];
        assert_builds(&construct_tree(&star).unwrap(), &GraphFamily::Tree(star.clone()));
        let deep = vec![0, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 6, 6, 8, 10, 14, 14, 14, 15, 18];
        assert_builds(&construct_tree(&deep).unwrap(), &GraphFamily::Tree(deep.clone()));
    }

    #[test]
    fn cycles() {
        for n in [3, 4, 5, 12] {
            assert_builds(&construct_cycle(n).unwrap(), &GraphFamily::Cycle(n));
        }
        assert!(construct_cycle(2).is_err());
    }

    fn edge(a: &str, b: &str) -> Layout {
        Layout::plane(vec![irect(a, 0, 1, 0, 1).unwrap(), irect(b, 2, 3, 0, 1).unwrap()])
    }

    fn star(center: &str, leaves: &[&str]) -> Layout {
        let mut rects = vec![irect(center, 0, leaves.len() as i64, 0, 1).unwrap()];
        for (k, l) in leaves.iter().enumerate() {
            let k = k as i64;
            rects.push(irect(*l, k, k + 1, 1 + 2 * k, 2 + 2 * k).unwrap());
        }
        Layout::plane(rects)
    }

    fn merged_graph_is_union(l1: &Layout, v: &str, l2: &Layout) {
        let m = merge_at_vertex(l1, v, l2).unwrap();
        m.ensure_valid().unwrap();
        let g1 = extract_visibility_graph(l1).unwrap();
        let g2 = extract_visibility_graph(l2).unwrap();
        assert_eq!(extract_visibility_graph(&m).unwrap(), g1.union(&g2));
    }

    #[test]
    fn merge_two_edges_into_a_path() {
        let m = merge_at_vertex(&edge("a", "v"), "v", &edge("v", "b")).unwrap();
        let g = extract_visibility_graph(&m).unwrap();
        let p3 = Graph::from_edges(["a", "v", "b"], &[("a", "v"), ("v", "b")]).unwrap();
        assert_eq!(g, p3);
    }

    #[test]
    fn merge_stars() {
        merged_graph_is_union(&star("c", &["a1", "a2", "a3"]), "c", &star("c", &["b1", "b2", "b3"]));
        merged_graph_is_union(&star("c", &["v", "a2", "a3"]), "v", &star("v", &["b1", "b2"]));
    }

    #[test]
    fn merge_rejects_blocked_vertex() {
        let l = Layout::plane(vec![
            irect("v", 0, 1, 0, 1).unwrap(),
            irect("h", 2, 3, 0, 1).unwrap(),
            irect("w", 0, 1, 2, 3).unwrap(),
        ]);
        let err = merge_at_vertex(&l, "v", &edge("v", "b")).unwrap_err();
        assert!(matches!(err, ConstructError::MergeBlocked { ref horizontal, ref vertical, .. }
            if horizontal == "h" && vertical == "w"));
    }
}
