//! SVG drawings of layouts, with `y` pointing up.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::geometry::{extract_visibility_graph, natural_cmp, Layout, Rect, Surface};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    /// Pixels per unit; must be positive.
    pub scale: Rational,
    /// Fill colours. With `colour_by_part`, the two sides of a bipartite
    /// graph take the first two entries; otherwise everything takes the first.
    pub palette: Vec<String>,
    pub colour_by_part: bool,
    /// Draw the fundamental domain and its wrap arrows on a torus.
    pub torus_decoration: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            scale: Rational::integer(40),
            palette: vec!["#7cb342".into(), "#e53935".into()],
            colour_by_part: true,
            torus_decoration: true,
        }
    }
}

/// Pieces of a span inside `[0, period)`, or the span itself on the plane.
fn pieces(lo: f64, hi: f64, period: Option<f64>) -> Vec<(f64, f64)> {
    match period {
        Some(p) if hi > p => vec![(lo, p), (0.0, hi - p)],
        _ => vec![(lo, hi)],
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders `layout`; the output depends only on the arguments.
///
/// Rectangles are emitted in natural id order. A torus rectangle that wraps
/// is split into up to two pieces per axis, all sharing one `<g>` and title.
pub fn render_svg(layout: &Layout, spec: &RenderSpec) -> String {
    let scale = if spec.scale.is_positive() { spec.scale.to_f64() } else { 1.0 };
    let margin = 1.0;
    let period = match &layout.surface {
        Surface::Plane => None,
        Surface::Torus { w, h } => Some((w.to_f64(), h.to_f64())),
    };
    let (x0, y0, x1, y1) = match (&period, layout.bounding_box()) {
        (Some((w, h)), _) => (0.0, 0.0, *w, *h),
        (None, Some((bx, by))) => (bx.lo.to_f64(), by.lo.to_f64(), bx.hi.to_f64(), by.hi.to_f64()),
        (None, None) => (0.0, 0.0, 0.0, 0.0),
    };
    let (vw, vh) = ((x1 - x0 + 2.0 * margin) * scale, (y1 - y0 + 2.0 * margin) * scale);
    let px = |x: f64| (x - x0 + margin) * scale;
    let py = |y: f64| (y1 - y + margin) * scale;

    let part: HashMap<String, usize> = match extract_visibility_graph(layout).ok().and_then(|g| g.bipartition_labels()) {
        Some((a, b)) if spec.colour_by_part => a
            .into_iter()
            .map(|s| (s, 0))
            .chain(b.into_iter().map(|s| (s, 1)))
            .collect(),
        _ => HashMap::new(),
    };
    let colour = |id: &str| {
        let k = part.get(id).copied().unwrap_or(0);
        spec.palette
            .get(k)
            .or_else(|| spec.palette.first())
            .cloned()
            .unwrap_or_else(|| "#999999".into())
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(vw),
        num(vh),
        num(vw),
        num(vh)
    );
    if let (Some((w, h)), true) = (period, spec.torus_decoration) {
        let _ = writeln!(
            out,
            r##"  <rect class="domain" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#333" stroke-dasharray="4 3"/>"##,
            num(px(0.0)),
            num(py(h)),
            num(w * scale),
            num(h * scale)
        );
        let a = 0.15 * scale;
        // One arrow on the horizontal sides, two on the vertical sides.
        for y in [0.0, h] {
            let (cx, cy) = (px(w / 2.0), py(y));
            let _ = writeln!(
                out,
                r##"  <path class="wrap" d="M{} {} L{} {} L{} {} Z" fill="#333"/>"##,
                num(cx + a),
                num(cy),
                num(cx - a),
                num(cy - a),
                num(cx - a),
                num(cy + a)
            );
        }
        for x in [0.0, w] {
            for dy in [-a, a] {
                let (cx, cy) = (px(x), py(h / 2.0) + 1.5 * dy);
                let _ = writeln!(
                    out,
                    r##"  <path class="wrap" d="M{} {} L{} {} L{} {} Z" fill="#333"/>"##,
                    num(cx),
                    num(cy - a),
                    num(cx - a),
                    num(cy + a),
                    num(cx + a),
                    num(cy + a)
                );
            }
        }
    }

    let mut rects: Vec<&Rect> = layout.rects.iter().collect();
    rects.sort_by(|a, b| natural_cmp(&a.id, &b.id));
    for r in rects {
        let id = escape(&r.id);
        let (xp, yp) = (period.map(|p| p.0), period.map(|p| p.1));
        let xs = pieces(r.x.lo().to_f64(), r.x.hi().to_f64(), xp);
        let ys = pieces(r.y.lo().to_f64(), r.y.hi().to_f64(), yp);
        let _ = writeln!(out, r#"  <g class="rect" id="{id}"><title>{id}</title>"#);
        for &(a, b) in &xs {
            for &(c, d) in &ys {
                let _ = writeln!(
                    out,
                    r##"    <rect x="{}" y="{}" width="{}" height="{}" fill="{}" fill-opacity="0.6" stroke="#000"/>"##,
                    num(px(a)),
                    num(py(d)),
                    num((b - a) * scale),
                    num((d - c) * scale),
                    escape(&colour(&r.id))
                );
            }
        }
        let ((a, b), (c, d)) = (xs[0], ys[0]);
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}" font-size="{}" text-anchor="middle" dominant-baseline="middle">{id}</text>"#,
            num(px((a + b) / 2.0)),
            num(py((c + d) / 2.0)),
            num(0.3 * scale)
        );
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}
