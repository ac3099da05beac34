use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::graph::Graph;
use crate::rational::Rational;

use super::span::{Interval, Span};
use super::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Surface {
    Plane,
    /// Flat torus with fundamental domain `[0, w) x [0, h)`.
    Torus { w: Rational, h: Rational },
}

impl Surface {
    pub fn torus(w: Rational, h: Rational) -> Self {
        Surface::Torus { w, h }
    }

    pub fn is_torus(&self) -> bool {
        matches!(self, Surface::Torus { .. })
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Plane => write!(f, "plane"),
            Surface::Torus { w, h } => write!(f, "torus({w} x {h})"),
        }
    }
}

/// Direction of the line of sight between two rectangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sight {
    /// A horizontal line meets both interiors (the y-projections overlap).
    Horizontal,
    /// A vertical line meets both interiors (the x-projections overlap).
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rect {
    pub id: String,
    pub x: Span,
    pub y: Span,
}

impl Rect {
    /// Plane rectangle `(x0, x1) x (y0, y1)`.
    pub fn plane(
        id: impl Into<String>,
        x0: Rational,
        x1: Rational,
        y0: Rational,
        y1: Rational,
    ) -> Result<Self, GeometryError> {
        Ok(Rect {
            id: id.into(),
            x: Span::interval(x0, x1)?,
            y: Span::interval(y0, y1)?,
        })
    }

    /// Torus rectangle whose arcs start at `(x0, y0)` and run for the given
    /// lengths; starts are reduced modulo `(w, h)`.
    #[allow(clippy::too_many_arguments)]
    pub fn torus(
        id: impl Into<String>,
        x0: Rational,
        xlen: Rational,
        y0: Rational,
        ylen: Rational,
        w: &Rational,
        h: &Rational,
    ) -> Result<Self, GeometryError> {
        Ok(Rect {
            id: id.into(),
            x: Span::arc(x0, xlen, w.clone())?,
            y: Span::arc(y0, ylen, h.clone())?,
        })
    }

    pub fn interiors_overlap(&self, other: &Rect) -> Result<bool, GeometryError> {
        Ok(self.x.open_overlap(&other.x)? && self.y.open_overlap(&other.y)?)
    }
}

/// A reason a layout fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateId(String),
    InteriorOverlap(String, String),
    /// Span kind does not match the surface (interval on a torus or vice versa).
    WrongSpanKind(String),
    DegenerateSpan(String),
    /// Arc period differs from the torus side, or the start lies outside the
    /// fundamental domain, or the arc covers the whole circle.
    BadArc(String),
    BadSurface,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateId(id) => write!(f, "duplicate id {id:?}"),
            Violation::InteriorOverlap(a, b) => write!(f, "interiors of {a:?} and {b:?} overlap"),
            Violation::WrongSpanKind(id) => write!(f, "{id:?} has spans of the wrong kind for the surface"),
            Violation::DegenerateSpan(id) => write!(f, "{id:?} has a zero or negative extent"),
            Violation::BadArc(id) => write!(f, "{id:?} has an arc incompatible with the torus"),
            Violation::BadSurface => write!(f, "torus sides must be positive"),
        }
    }
}

/// A labeled collection of axis-parallel rectangles on one surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub surface: Surface,
    pub rects: Vec<Rect>,
}

impl Layout {
    pub fn new(surface: Surface, rects: Vec<Rect>) -> Self {
        Layout { surface, rects }
    }

    pub fn plane(rects: Vec<Rect>) -> Self {
        Layout::new(Surface::Plane, rects)
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn ids(&self) -> Vec<String> {
        self.rects.iter().map(|r| r.id.clone()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Rect> {
        self.rects.iter().find(|r| r.id == id)
    }

    /// Checks every layout invariant and lists each violation found.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if let Surface::Torus { w, h } = &self.surface {
            if !w.is_positive() || !h.is_positive() {
                return Err(vec![Violation::BadSurface]);
            }
        }
        let mut seen = HashSet::new();
        let mut shape_ok = vec![true; self.rects.len()];
        for (k, r) in self.rects.iter().enumerate() {
            if !seen.insert(r.id.as_str()) {
                out.push(Violation::DuplicateId(r.id.clone()));
            }
            if let Some(v) = self.check_rect_shape(r) {
                out.push(v);
                shape_ok[k] = false;
            }
        }
        for i in 0..self.rects.len() {
            for j in i + 1..self.rects.len() {
                if !(shape_ok[i] && shape_ok[j]) {
                    continue;
                }
                let (a, b) = (&self.rects[i], &self.rects[j]);
                if a.interiors_overlap(b).unwrap_or(false) {
                    out.push(Violation::InteriorOverlap(a.id.clone(), b.id.clone()));
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    fn check_rect_shape(&self, r: &Rect) -> Option<Violation> {
        match &self.surface {
            Surface::Plane => match (&r.x, &r.y) {
                (Span::Interval(x), Span::Interval(y)) => {
                    (x.lo >= x.hi || y.lo >= y.hi).then(|| Violation::DegenerateSpan(r.id.clone()))
                }
                _ => Some(Violation::WrongSpanKind(r.id.clone())),
            },
            Surface::Torus { w, h } => match (&r.x, &r.y) {
                (Span::Arc(x), Span::Arc(y)) => {
                    if !x.length.is_positive() || !y.length.is_positive() {
                        return Some(Violation::DegenerateSpan(r.id.clone()));
                    }
                    let arc_ok = |a: &super::CircularArc, p: &Rational| {
                        &a.period == p && !a.start.is_negative() && &a.start < p && &a.length < p
                    };
                    (!(arc_ok(x, w) && arc_ok(y, h))).then(|| Violation::BadArc(r.id.clone()))
                }
                _ => Some(Violation::WrongSpanKind(r.id.clone())),
            },
        }
    }

    pub fn ensure_valid(&self) -> Result<(), GeometryError> {
        self.validate().map_err(GeometryError::InvalidLayout)
    }

    /// Axis-aligned bounding box of a plane layout.
    pub fn bounding_box(&self) -> Option<(Interval, Interval)> {
        let mut it = self.rects.iter();
        let first = it.next()?;
        let (mut x0, mut x1) = (first.x.lo().clone(), first.x.hi());
        let (mut y0, mut y1) = (first.y.lo().clone(), first.y.hi());
        for r in it {
            x0 = x0.min(r.x.lo().clone());
            x1 = x1.max(r.x.hi());
            y0 = y0.min(r.y.lo().clone());
            y1 = y1.max(r.y.hi());
        }
        Some((Interval { lo: x0, hi: x1 }, Interval { lo: y0, hi: y1 }))
    }

    /// Sub-layout keeping only the rectangles whose ids satisfy `keep`.
    pub fn retain(&self, mut keep: impl FnMut(&str) -> bool) -> Layout {
        Layout {
            surface: self.surface.clone(),
            rects: self.rects.iter().filter(|r| keep(&r.id)).cloned().collect(),
        }
    }

    /// Renames rectangles; ids missing from `map` are kept.
    pub fn relabel(&self, map: &HashMap<String, String>) -> Layout {
        Layout {
            surface: self.surface.clone(),
            rects: self
                .rects
                .iter()
                .map(|r| Rect {
                    id: map.get(&r.id).cloned().unwrap_or_else(|| r.id.clone()),
                    ..r.clone()
                })
                .collect(),
        }
    }

    /// Rectangles sorted by id with natural ordering of numeric suffixes.
    pub fn sorted_by_id(&self) -> Layout {
        let mut rects = self.rects.clone();
        rects.sort_by(|a, b| natural_cmp(&a.id, &b.id));
        Layout {
            surface: self.surface.clone(),
            rects,
        }
    }

    /// Applies `f` to every plane coordinate pair `(x-span, y-span)`.
    fn map_plane(
        &self,
        f: impl Fn(&Interval, &Interval) -> (Interval, Interval),
    ) -> Result<Layout, GeometryError> {
        if self.surface != Surface::Plane {
            return Err(GeometryError::NotPlane);
        }
        let rects = self
            .rects
            .iter()
            .map(|r| {
                let (x, y) = match (&r.x, &r.y) {
                    (Span::Interval(x), Span::Interval(y)) => f(x, y),
                    _ => return Err(GeometryError::MixedSpans),
                };
                Ok(Rect {
                    id: r.id.clone(),
                    x: Span::interval(x.lo, x.hi)?,
                    y: Span::interval(y.lo, y.hi)?,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Layout::plane(rects))
    }

    /// Quarter turn counter-clockwise: `(x, y) -> (-y, x)`.
    pub fn rotate_quarter(&self) -> Result<Layout, GeometryError> {
        self.map_plane(|x, y| {
            (
                Interval {
                    lo: -&y.hi,
                    hi: -&y.lo,
                },
                x.clone(),
            )
        })
    }

    /// Multiplies x by `sx` and y by `sy`; both factors must be positive.
    pub fn scale(&self, sx: &Rational, sy: &Rational) -> Result<Layout, GeometryError> {
        if !sx.is_positive() || !sy.is_positive() {
            return Err(GeometryError::NonPositiveScale);
        }
        self.map_plane(|x, y| {
            (
                Interval {
                    lo: &x.lo * sx,
                    hi: &x.hi * sx,
                },
                Interval {
                    lo: &y.lo * sy,
                    hi: &y.hi * sy,
                },
            )
        })
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Result<Layout, GeometryError> {
        self.map_plane(|x, y| {
            (
                Interval {
                    lo: &x.lo + dx,
                    hi: &x.hi + dx,
                },
                Interval {
                    lo: &y.lo + dy,
                    hi: &y.hi + dy,
                },
            )
        })
    }

    /// Places a plane layout on a torus one unit wider and taller than its
    /// bounding box, so no new lines of sight appear through the wrap.
    pub fn to_torus(&self) -> Result<Layout, GeometryError> {
        if self.surface.is_torus() {
            return Ok(self.clone());
        }
        let Some((bx, by)) = self.bounding_box() else {
            return Ok(Layout::new(
                Surface::torus(Rational::one(), Rational::one()),
                vec![],
            ));
        };
        let w = bx.len() + 1;
        let h = by.len() + 1;
        let rects = self
            .rects
            .iter()
            .map(|r| {
                Rect::torus(
                    r.id.clone(),
                    r.x.lo() - &bx.lo,
                    r.x.len(),
                    r.y.lo() - &by.lo,
                    r.y.len(),
                    &w,
                    &h,
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Layout::new(Surface::torus(w, h), rects))
    }
}

/// Line of sight between two rectangles of one valid layout.
///
/// Transparent visibility: no blocking test is performed, so this is a pure
/// projection-overlap check.
pub fn sees(a: &Rect, b: &Rect, surface: &Surface) -> Result<Option<Sight>, GeometryError> {
    let kinds_ok = match surface {
        Surface::Plane => a.x.as_interval().is_some() && b.x.as_interval().is_some(),
        Surface::Torus { .. } => a.x.as_arc().is_some() && b.x.as_arc().is_some(),
    };
    if !kinds_ok {
        return Err(GeometryError::MixedSpans);
    }
    let horizontal = a.y.open_overlap(&b.y)?;
    let vertical = a.x.open_overlap(&b.x)?;
    match (horizontal, vertical) {
        (true, true) => Err(GeometryError::InvalidLayout(vec![Violation::InteriorOverlap(
            a.id.clone(),
            b.id.clone(),
        )])),
        (true, false) => Ok(Some(Sight::Horizontal)),
        (false, true) => Ok(Some(Sight::Vertical)),
        (false, false) => Ok(None),
    }
}

/// Open-overlap pairs of plane intervals, found by sweeping sorted endpoints.
///
/// At equal coordinates closing endpoints are processed before opening ones,
/// so touching intervals are not reported.
pub(crate) fn sweep_overlaps(spans: &[(&Rational, &Rational)]) -> Vec<(usize, usize)> {
    let mut events: Vec<(&Rational, u8, usize)> = Vec::with_capacity(spans.len() * 2);
    for (k, (lo, hi)) in spans.iter().enumerate() {
        events.push((lo, 1, k));
        events.push((hi, 0, k));
    }
    events.sort();
    let mut active: BTreeMap<usize, ()> = BTreeMap::new();
    let mut pairs = Vec::new();
    for (_, kind, k) in events {
        if kind == 0 {
            active.remove(&k);
        } else {
            for &other in active.keys() {
                pairs.push((other.min(k), other.max(k)));
            }
            active.insert(k, ());
        }
    }
    pairs
}

/// All pairs that see each other, with the direction of sight.
pub fn visibility_pairs(layout: &Layout) -> Result<Vec<(usize, usize, Sight)>, GeometryError> {
    layout.ensure_valid()?;
    let mut out = Vec::new();
    match layout.surface {
        Surface::Plane => {
            let xs: Vec<_> = layout.rects.iter().map(|r| (r.x.lo(), &r.x.as_interval().unwrap().hi)).collect();
            let ys: Vec<_> = layout.rects.iter().map(|r| (r.y.lo(), &r.y.as_interval().unwrap().hi)).collect();
            out.extend(sweep_overlaps(&ys).into_iter().map(|(i, j)| (i, j, Sight::Horizontal)));
            out.extend(sweep_overlaps(&xs).into_iter().map(|(i, j)| (i, j, Sight::Vertical)));
        }
        Surface::Torus { .. } => {
            for i in 0..layout.rects.len() {
                for j in i + 1..layout.rects.len() {
                    if let Some(s) = sees(&layout.rects[i], &layout.rects[j], &layout.surface)? {
                        out.push((i, j, s));
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The transparent rectangle visibility graph of a layout. Vertices follow
/// the layout's rectangle order.
pub fn extract_visibility_graph(layout: &Layout) -> Result<Graph, GeometryError> {
    let pairs = visibility_pairs(layout)?;
    let mut g = Graph::with_vertices(layout.ids()).map_err(|e| GeometryError::Graph(e.to_string()))?;
    for (i, j, _) in pairs {
        g.add_edge_idx(i, j);
    }
    Ok(g)
}

/// Orders strings by their non-digit prefix, then numerically by digit runs,
/// so `v2 < v10`.
pub fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    fn chunks(s: &str) -> Vec<Result<u128, String>> {
        let mut out = Vec::new();
        let mut cur = String::new();
        let mut digit = false;
        for ch in s.chars() {
            if ch.is_ascii_digit() != digit && !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            digit = ch.is_ascii_digit();
            cur.push(ch);
        }
        if !cur.is_empty() {
            out.push(cur);
        }
        out.into_iter()
            .map(|c| c.parse::<u128>().map_err(|_| c))
            .collect()
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(cb.iter()) {
        let ord = match (x, y) {
            (Ok(p), Ok(q)) => p.cmp(q),
            (Err(p), Err(q)) => p.cmp(q),
            (Ok(_), Err(_)) => std::cmp::Ordering::Less,
            (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        };
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}
