use std::collections::HashMap;

use crate::geometry::{Layout, Rect, Surface};
use crate::graph::vertex;
use crate::rational::{decimal, q, qi, Rational};

use super::{drect, invalid, irect, rect, ConstructError};

/// Builds `K_{q,p}` and renames it so that the `p` side comes first.
fn swapped(p: usize, q: usize, build: impl Fn(usize, usize) -> Result<Layout, ConstructError>) -> Result<Layout, ConstructError> {
    let base = build(q, p)?;
    let map: HashMap<String, String> = (1..=p + q)
        .map(|k| {
            let to = if k <= q { p + k } else { k - q };
            (vertex(k), vertex(to))
        })
        .collect();
    Ok(base.relabel(&map).sorted_by_id())
}

/// `K_{p,q}` on the plane, for `min(p, q) <= 2` and for `K_{3,3}`, `K_{3,4}`.
///
/// Greens (the `p` side) are `v1..vp`, reds `v{p+1}..v{p+q}`.
pub fn construct_complete_bipartite(p: usize, q: usize) -> Result<Layout, ConstructError> {
    if p > q {
        return swapped(p, q, construct_complete_bipartite);
    }
    match (p, q) {
        (0..=2, _) => {
            let qi_ = q as i64;
            let mut rects = Vec::with_capacity(p + q);
            if p >= 1 {
                rects.push(irect(vertex(1), qi_, qi_ + 1, 0, qi_.max(1))?);
            }
            if p == 2 {
                rects.push(irect(vertex(2), 0, qi_.max(1), -1, 0)?);
            }
            for i in 0..qi_ {
                rects.push(irect(vertex(p + 1 + i as usize), i, i + 1, i, i + 1)?);
            }
            Ok(Layout::plane(rects))
        }
        (3, 3) => Ok(k34()?.retain(|id| id != "v7")),
        (3, 4) => k34(),
        _ => Err(ConstructError::NotRepresentable(format!(
            "K{p},{q} contains K3,5 or K4,4, which have more than 2n - 2 edges"
        ))),
    }
}

fn k34() -> Result<Layout, ConstructError> {
    // (x0, y0, x1, y1)
    let coords = [
        ("10.5", "-1.5", "11.5", "-0.5"),
        ("11.5", "-0.5", "12.5", "0.5"),
        ("9.5", "-2.5", "10.5", "-1.5"),
        ("9", "-1", "10", "0"),
        ("10", "0", "11", "1"),
        ("11", "-3", "12", "-2"),
        ("12", "-2", "13", "-1"),
    ];
    let rects = coords
        .iter()
        .enumerate()
        .map(|(k, (x0, y0, x1, y1))| drect(vertex(k + 1), x0, x1, y0, y1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Layout::plane(rects))
}

/// Decimal `(x0, x1, y0, y1)`.
type Corners = (&'static str, &'static str, &'static str, &'static str);

/// The rectangle `c` shifted by `(dx, dy)` on the `w x w` torus.
fn torus_rect(id: String, c: &Corners, (dx, dy): (&Rational, &Rational), w: &Rational) -> Result<Rect, ConstructError> {
    let (x0, x1, y0, y1) = (decimal(c.0), decimal(c.1), decimal(c.2), decimal(c.3));
    Ok(Rect::torus(id, &x0 + dx, &x1 - &x0, &y0 + dy, &y1 - &y0, w, w)?)
}

/// `K_{p,q}` on the torus. `K_{3,5}`, `K_{3,6}` and `K_{4,4}` have dedicated
/// layouts on a `6 x 6` torus; the plane cases are wrapped onto a torus
/// larger than their bounding box.
pub fn construct_complete_bipartite_torus(p: usize, q: usize) -> Result<Layout, ConstructError> {
    if p > q {
        return swapped(p, q, construct_complete_bipartite_torus);
    }
    let w = qi(6);
    // (x0, x1, y0, y1) in a fundamental square [-3, 3)^2 or shifted copy.
    let (coords, dx, dy): (&[Corners], Rational, Rational) = match (p, q) {
        (3, 5) | (3, 6) => (
            &[
                ("2.5", "4.5", "1.5", "3.5"),
                ("-1.5", "0.5", "-0.5", "1.5"),
                ("0.5", "2.5", "-2.5", "-0.5"),
                ("0", "1", "2", "3"),
                ("1", "2", "1", "2"),
                ("2", "3", "0", "1"),
                ("-3", "-2", "-1", "0"),
                ("-2", "-1", "-2", "-1"),
                ("-1", "0", "-3", "-2"),
            ],
            qi(3),
            qi(3),
        ),
        (4, 4) => (
            &[
                ("9.75", "11.25", "2.25", "3.75"),
                ("5.25", "6.75", "0.75", "2.25"),
                ("6.75", "8.25", "-0.75", "0.75"),
                ("8.25", "9.75", "-2.25", "-0.75"),
                ("7.5", "9", "1.5", "3"),
                ("9", "10.5", "0", "1.5"),
                ("4.5", "6", "-1.5", "0"),
                ("6", "7.5", "-3", "-1.5"),
            ],
            Rational::new(-9, 2),
            qi(3),
        ),
        _ => {
            if p <= 2 || (p, q) == (3, 3) || (p, q) == (3, 4) {
                return Ok(construct_complete_bipartite(p, q)?.to_torus()?);
            }
            return Err(ConstructError::NotRepresentable(format!(
                "K{p},{q} contains K3,7 or K4,5, which have more than 2n edges"
            )));
        }
    };
    let rects = coords
        .iter()
        .take(p + q)
        .enumerate()
        .map(|(k, c)| torus_rect(vertex(k + 1), c, (&dx, &dy), &w))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Layout::new(Surface::torus(w.clone(), w), rects))
}

/// Bipartite layout with `2n - 2` edges for `n >= 7`: four reds `v1..v4`
/// completely joined to three greens `v5..v7`, and `n - 7` small greens in a
/// corner-touching chain, each seeing `v1` vertically and `v3` horizontally.
pub fn construct_extremal_bipartite(n: usize) -> Result<Layout, ConstructError> {
    if n < 7 {
        return Err(invalid("needs n >= 7"));
    }
    let mut rects = vec![
        drect(vertex(1), "0.5", "1.5", "3", "4")?,
        drect(vertex(2), "1.5", "2.5", "4", "5")?,
        drect(vertex(3), "2.5", "3.5", "1", "2")?,
        drect(vertex(4), "3.5", "4.5", "2", "3")?,
        drect(vertex(5), "2", "3", "2.5", "3.5")?,
        drect(vertex(6), "3", "4", "3.5", "4.5")?,
        drect(vertex(7), "1.3", "2", "1.8", "2.5")?,
    ];
    let k = (n - 7) as i64;
    if k > 0 {
        let s = q(4, 5 * k);
        for i in 0..k {
            let x0 = q(1, 2) + &s * i;
            let y0 = qi(1) + &s * i;
            rects.push(rect(vertex(8 + i as usize), x0.clone(), &x0 + &s, y0.clone(), &y0 + &s)?);
        }
    }
    Ok(Layout::plane(rects))
}

/// Bipartite torus layout with `2n` edges for `n >= 8`, on an `S x S` torus
/// with `S = n`: four red slabs `v1..v4`, four greens `v5..v8` seeing all of
/// them, and `n - 8` unit squares on a diagonal, each seeing `v1` and `v3`.
pub fn construct_extremal_bipartite_torus(n: usize) -> Result<Layout, ConstructError> {
    if n < 8 {
        return Err(invalid("needs n >= 8"));
    }
    let k = (n - 8) as i64;
    let s = k + 8;
    let w = qi(s);
    let t = |id: usize, x0: i64, x1: i64, y0: i64, y1: i64| {
        Rect::torus(vertex(id), qi(x0), qi(x1 - x0), qi(y0), qi(y1 - y0), &w, &w)
    };
    let mut rects = vec![
        t(1, 0, k + 2, 2, 4)?,
        t(2, k + 2, k + 4, 0, 2)?,
        t(3, k + 4, k + 6, 6, s)?,
        t(4, k + 6, s, 4, 6)?,
        t(5, s - 1, s + 1, s - 1, s + 1)?,
        t(6, k + 1, k + 3, 5, 7)?,
        t(7, k + 3, k + 5, 3, 5)?,
        t(8, k + 5, k + 7, 1, 3)?,
    ];
    for i in 1..=k {
        rects.push(t(8 + i as usize, i, i + 1, 7 + k - i, 8 + k - i)?);
    }
    Ok(Layout::new(Surface::torus(w.clone(), w), rects))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::assert_builds;
    use crate::geometry::extract_visibility_graph;
    use crate::graph::GraphFamily;

    #[test]
    fn plane_complete_bipartite() {
        for (p, q) in [(0, 3), (1, 1), (1, 5), (2, 2), (2, 7), (3, 3), (3, 4), (4, 2), (1, 0)] {
            let l = construct_complete_bipartite(p, q).unwrap();
            assert_builds(&l, &GraphFamily::CompleteBipartite(p, q));
        }
        assert!(matches!(construct_complete_bipartite(3, 5), Err(ConstructError::NotRepresentable(_))));
        assert!(construct_complete_bipartite(4, 4).is_err());
    }

    #[test]
    fn torus_complete_bipartite() {
        for (p, q) in [(3, 5), (3, 6), (4, 4), (2, 9), (3, 4), (6, 3)] {
            let l = construct_complete_bipartite_torus(p, q).unwrap();
            assert!(l.surface.is_torus());
            assert_builds(&l, &GraphFamily::CompleteBipartite(p, q));
        }
        assert!(construct_complete_bipartite_torus(3, 7).is_err());
        assert!(construct_complete_bipartite_torus(4, 5).is_err());
    }

    #[test]
    fn extremal_layouts_meet_the_bounds() {
        for n in [7, 8, 9, 20] {
            let l = construct_extremal_bipartite(n).unwrap();
            assert_builds(&l, &GraphFamily::ExtremalBipartite(n));
            assert_eq!(extract_visibility_graph(&l).unwrap().edge_count(), 2 * n - 2);
        }
        for n in [8, 9, 11, 12, 30] {
            let l = construct_extremal_bipartite_torus(n).unwrap();
            assert_builds(&l, &GraphFamily::ExtremalBipartiteTorus(n));
            assert_eq!(extract_visibility_graph(&l).unwrap().edge_count(), 2 * n);
        }
    }
}
