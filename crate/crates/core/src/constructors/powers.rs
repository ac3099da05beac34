use std::collections::HashMap;

use crate::geometry::Layout;
use crate::graph::{vertex, CreationStep};
use crate::rational::{q, qi, Rational};

use super::basic::{construct_cycle, construct_threshold};
use super::{invalid, irect, rect, ConstructError, Rect};

/// `C^a_n`. For `n <= 2a + 1` this is `K_n`, built as a threshold graph.
/// Otherwise `v1..v_{n-a}` form a staircase whose y-spans have height `a + 1`
/// and `v_{n-a+1}..v_n` are slabs under it reaching back to the first columns.
pub fn construct_power_cycle(n: usize, a: usize) -> Result<Layout, ConstructError> {
    if n < 3 || a < 1 {
        return Err(invalid("power of a cycle needs n >= 3 and a >= 1"));
    }
    if n <= 2 * a + 1 {
        return construct_threshold(&vec![CreationStep::Universal; n]);
    }
    let (n, a) = (n as i64, a as i64);
    let mut rects = Vec::with_capacity(n as usize);
    for k in 1..=n - a {
        rects.push(irect(vertex(k as usize), k - 1, k, k - 1, k + a)?);
    }
    for m in 1..=a {
        rects.push(irect(vertex((n - a + m) as usize), n - 2 * a + m - 1, n - a, m - 1, m)?);
    }
    Ok(Layout::plane(rects))
}

fn relabel(layout: &Layout, f: impl Fn(usize) -> usize) -> Layout {
    let map: HashMap<String, String> = (0..layout.len())
        .map(|s| (vertex(s + 1), vertex(f(s) + 1)))
        .collect();
    layout.relabel(&map).sorted_by_id()
}

/// Unit squares on the diagonal; no two of them see each other.
fn independent(n: usize) -> Result<Layout, ConstructError> {
    let rects = (0..n as i64)
        .map(|i| irect(vertex(i as usize + 1), i, i + 1, i, i + 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Layout::plane(rects))
}

/// `D^1_n`, the complement of `C_n`.
///
/// For odd `n` it is `C^{(n-3)/2}_n` under `i -> 2i (mod n)`. For even `n`,
/// each new rectangle is placed in the vision of the bounding box of all but
/// its predecessor, alternating between the right and the top.
pub fn construct_complement_cycle(n: usize) -> Result<Layout, ConstructError> {
    if n < 3 {
        return Err(invalid("complement of a cycle needs n >= 3"));
    }
    if n == 3 {
        return independent(3);
    }
    if n % 2 == 1 {
        let base = construct_power_cycle(n, (n - 3) / 2)?;
        return Ok(relabel(&base, |s| 2 * s % n));
    }
    let m = (n / 2) as i64;
    let mut rects = vec![irect(vertex(1), 0, 1, 0, 1)?, irect(vertex(2), 1, 2, 1, 2)?];
    for k in 3..n as i64 {
        let r = if k % 2 == 1 {
            let m = (k + 1) / 2;
            irect(vertex(k as usize), m, m + 1, 0, m - 1)?
        } else {
            let l = k / 2;
            irect(vertex(k as usize), 0, l, l, l + 1)?
        };
        rects.push(r);
    }
    rects.push(irect(vertex(n), 1, m, m, m + 1)?);
    Ok(Layout::plane(rects))
}

/// `D^a_n` for `a >= 2` and `n <= 2a + 4`.
///
/// Up to `2a + 1` vertices the graph has no edges; at `2a + 2` it is a perfect
/// matching and at `2a + 3` a cycle. At `2a + 4` the vertices split into a
/// diagonal chain `v1..v_{a+1}`, the corner `v_{a+2}`, alternating blue and
/// green ladders above and to the right of the chain, and `v_n`.
pub fn construct_complement_power_small(n: usize, a: usize) -> Result<Layout, ConstructError> {
    if a < 2 || n < 3 || n > 2 * a + 4 {
        return Err(invalid("needs a >= 2 and 3 <= n <= 2a + 4"));
    }
    if n <= 2 * a + 1 {
        return independent(n);
    }
    if n == 2 * a + 2 {
        let mut rects = Vec::with_capacity(n);
        for i in 0..=a as i64 {
            rects.push(irect(vertex(i as usize + 1), 2 * i, 2 * i + 1, 2 * i, 2 * i + 1)?);
        }
        for i in 0..=a as i64 {
            rects.push(irect(vertex(i as usize + a + 2), 2 * i, 2 * i + 1, -2 * i - 2, -2 * i - 1)?);
        }
        return Ok(Layout::plane(rects));
    }
    if n == 2 * a + 3 {
        let base = construct_cycle(n)?;
        return Ok(relabel(&base, |t| t * (a + 1) % n));
    }
    ladder(a)
}

fn half(k: i64) -> Rational {
    q(k, 2)
}

fn ladder(a: usize) -> Result<Layout, ConstructError> {
    let ai = a as i64;
    let mut rects: Vec<Rect> = Vec::with_capacity(2 * a + 4);
    for k in 1..=ai + 1 {
        rects.push(rect(vertex(k as usize), half(2 * k - 1), half(2 * k + 1), qi(k - 1), qi(k))?);
    }
    rects.push(irect(vertex(a + 2), 0, 1, ai + 1, ai + 2)?);
    // Green columns to the right of the chain: x = (a + 1/2 + s, a + 3/2 + s).
    let green_x = |s: i64| (half(2 * ai + 1 + 2 * s), half(2 * ai + 3 + 2 * s));
    if a % 2 == 1 {
        for t in 1..=(ai + 1) / 2 {
            let (x0, x1) = if t == 1 { (qi(1), qi(2)) } else { (qi(2 * t - 2), qi(2 * t)) };
            rects.push(rect(vertex((ai + 1 + 2 * t) as usize), x0, x1, qi(ai + 1 + t), qi(ai + 2 + t))?);
            let (gx0, gx1) = green_x(t);
            rects.push(rect(vertex((ai + 2 + 2 * t) as usize), gx0, gx1, half(4 * t - 3), half(4 * t + 1))?);
        }
        rects.push(rect(vertex(2 * a + 4), qi(ai + 1), half(2 * ai + 3), half(2 * ai + 3), half(2 * ai + 5))?);
    } else {
        for t in 1..=ai / 2 {
            rects.push(irect(vertex((ai + 2 + 2 * t) as usize), 2 * t - 1, 2 * t + 1, ai + 1 + t, ai + 2 + t)?);
        }
        for s in 1..=ai / 2 + 1 {
            let (gx0, gx1) = green_x(s);
            let (y0, y1) = if s == 1 { (half(1), half(3)) } else { (half(4 * s - 5), half(4 * s - 1)) };
            rects.push(rect(vertex((ai + 1 + 2 * s) as usize), gx0, gx1, y0, y1)?);
        }
        rects.push(rect(vertex(2 * a + 4), qi(ai + 1), qi(ai + 2), half(2 * ai + 3), qi(ai + 2))?);
    }
    Ok(Layout::plane(rects).sorted_by_id())
}
