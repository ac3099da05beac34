//! JSON formats for layouts, graphs and certificates. Rationals are written
//! as `"p/q"` strings in lowest terms, so parsing what was written gives back
//! the same values exactly.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::analysis::{BoundViolation, Certificate, Evidence, GseerReport, SurfaceKind, Verdict};
use crate::geometry::{GeometryError, Layout, Rect, Sight, Span, Surface};
use crate::graph::{Graph, GraphError};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("malformed JSON at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        }
    }
}

fn format_err<T>(msg: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Format(msg.into()))
}

fn rat(s: &str) -> Result<Rational, IoError> {
    s.parse().map_err(|_| IoError::Format(format!("{s:?} is not a rational")))
}

#[derive(Serialize, Deserialize)]
struct RectJson {
    id: String,
    x: [String; 2],
    y: [String; 2],
}

#[derive(Serialize, Deserialize)]
struct LayoutJson {
    surface: String,
    #[serde(rename = "W", skip_serializing_if = "Option::is_none", default)]
    w: Option<String>,
    #[serde(rename = "H", skip_serializing_if = "Option::is_none", default)]
    h: Option<String>,
    rects: Vec<RectJson>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

/// Spans are written as `[lo, hi]`; a torus arc as `[start, start + length]`.
fn span_pair(s: &Span) -> [String; 2] {
    [s.lo().to_string(), s.hi().to_string()]
}

fn layout_json(layout: &Layout) -> LayoutJson {
    let (surface, w, h) = match &layout.surface {
        Surface::Plane => ("plane", None, None),
        Surface::Torus { w, h } => ("torus", Some(w.to_string()), Some(h.to_string())),
    };
    LayoutJson {
        surface: surface.to_string(),
        w,
        h,
        rects: layout
            .rects
            .iter()
            .map(|r| RectJson {
                id: r.id.clone(),
                x: span_pair(&r.x),
                y: span_pair(&r.y),
            })
            .collect(),
    }
}

fn layout_from(j: LayoutJson) -> Result<Layout, IoError> {
    let surface = match (j.surface.as_str(), &j.w, &j.h) {
        ("plane", None, None) => Surface::Plane,
        ("plane", _, _) => return format_err("a plane layout has no W or H"),
        ("torus", Some(w), Some(h)) => Surface::torus(rat(w)?, rat(h)?),
        ("torus", _, _) => return format_err("a torus layout needs W and H"),
        (other, _, _) => return format_err(format!("unknown surface {other:?}")),
    };
    let mut rects = Vec::with_capacity(j.rects.len());
    for r in j.rects {
        let [x0, x1] = [rat(&r.x[0])?, rat(&r.x[1])?];
        let [y0, y1] = [rat(&r.y[0])?, rat(&r.y[1])?];
        rects.push(match &surface {
            Surface::Plane => Rect::plane(r.id, x0, x1, y0, y1)?,
            Surface::Torus { w, h } => {
                let (xl, yl) = (&x1 - &x0, &y1 - &y0);
                Rect::torus(r.id, x0, xl, y0, yl, w, h)?
            }
        });
    }
    Ok(Layout::new(surface, rects))
}

pub fn layout_to_value(layout: &Layout) -> Value {
    serde_json::to_value(layout_json(layout)).expect("plain data")
}

/// Pretty JSON with one line per list item.
fn lines(head: &[(&str, String)], list_key: &str, items: &[String]) -> String {
    let mut out = String::from("{\n");
    for (k, v) in head {
        out += &format!("  {}: {},\n", json!(k), v);
    }
    out += &format!("  {}: [", json!(list_key));
    for (i, item) in items.iter().enumerate() {
        out += if i == 0 { "\n    " } else { ",\n    " };
        out += item;
    }
    out += if items.is_empty() { "]\n}" } else { "\n  ]\n}" };
    out
}

pub fn layout_to_json(layout: &Layout) -> String {
    let j = layout_json(layout);
    let mut head = vec![("surface", json!(j.surface).to_string())];
    if let (Some(w), Some(h)) = (&j.w, &j.h) {
        head.push(("W", json!(w).to_string()));
        head.push(("H", json!(h).to_string()));
    }
    let pair = |p: &[String; 2]| format!("[{}, {}]", json!(p[0]), json!(p[1]));
    let rects: Vec<String> = j
        .rects
        .iter()
        .map(|r| format!(r#"{{"id": {}, "x": {}, "y": {}}}"#, json!(r.id), pair(&r.x), pair(&r.y)))
        .collect();
    lines(&head, "rects", &rects)
}

/// Parses a layout. Validation is left to the caller.
pub fn layout_from_json(s: &str) -> Result<Layout, IoError> {
    layout_from(serde_json::from_str(s)?)
}

fn layout_from_value(v: Value) -> Result<Layout, IoError> {
    layout_from(serde_json::from_value(v)?)
}

fn graph_json(g: &Graph) -> GraphJson {
    GraphJson {
        vertices: g.labels().to_vec(),
        edges: g.edge_labels().into_iter().map(|(a, b)| [a, b]).collect(),
    }
}

fn graph_from(j: GraphJson) -> Result<Graph, IoError> {
    let mut g = Graph::with_vertices(j.vertices)?;
    for [a, b] in &j.edges {
        g.add_edge(a, b)?;
    }
    Ok(g)
}

pub fn graph_to_value(g: &Graph) -> Value {
    serde_json::to_value(graph_json(g)).expect("plain data")
}

pub fn graph_to_json(g: &Graph) -> String {
    let j = graph_json(g);
    let edges: Vec<String> = j.edges.iter().map(|[a, b]| format!("[{}, {}]", json!(a), json!(b))).collect();
    lines(&[("vertices", json!(j.vertices).to_string())], "edges", &edges)
}

pub fn graph_from_json(s: &str) -> Result<Graph, IoError> {
    graph_from(serde_json::from_str(s)?)
}

fn violation_value(v: &BoundViolation) -> Value {
    json!({ "vertices": v.vertices, "edges": v.edges, "bound": v.bound })
}

fn violation_from(v: &Value, surface: SurfaceKind) -> Result<BoundViolation, IoError> {
    let field = |k: &str| {
        v.get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| IoError::Format(format!("violation needs an integer {k:?}")))
    };
    Ok(BoundViolation {
        vertices: field("vertices")?,
        edges: field("edges")?,
        bound: field("bound")?,
        surface,
    })
}

pub fn certificate_to_value(c: &Certificate) -> Value {
    let evidence = match &c.evidence {
        Evidence::Witness(layout) => json!({ "kind": "witness", "layout": layout_to_value(layout) }),
        Evidence::BoundViolation(v) => {
            let mut e = violation_value(v);
            e["kind"] = json!("bound_violation");
            e
        }
        Evidence::InducedObstruction {
            name,
            pattern,
            map,
            violation,
        } => json!({
            "kind": "induced_obstruction",
            "name": name,
            "pattern": graph_to_value(pattern),
            "map": map.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
            "violation": violation_value(violation),
        }),
        Evidence::Citation(text) => json!({ "kind": "citation", "text": text }),
        Evidence::Exhaustion {
            vertices,
            interleavings_per_axis,
            realizable_graphs,
        } => json!({
            "kind": "exhaustion",
            "vertices": vertices,
            "interleavings_per_axis": interleavings_per_axis,
            "realizable_graphs": realizable_graphs,
        }),
    };
    json!({ "verdict": c.verdict.name(), "surface": c.surface.name(), "evidence": evidence })
}

pub fn certificate_to_json(c: &Certificate) -> String {
    to_compact_json(&certificate_to_value(c))
}

/// Indented JSON that keeps any nested value fitting in 80 columns on one
/// line, so rectangles and edges read one per line.
pub fn to_compact_json(v: &Value) -> String {
    let mut out = String::new();
    write_compact(v, 0, &mut out);
    out
}

fn write_compact(v: &Value, depth: usize, out: &mut String) {
    let flat = v.to_string();
    if depth > 0 && flat.len() + 2 * depth <= 80 {
        *out += &spaced(v);
        return;
    }
    let pad = "  ".repeat(depth + 1);
    let (open, close, items): (_, _, Vec<(Option<&String>, &Value)>) = match v {
        Value::Array(a) if !a.is_empty() => ('[', ']', a.iter().map(|x| (None, x)).collect()),
        Value::Object(m) if !m.is_empty() => ('{', '}', m.iter().map(|(k, x)| (Some(k), x)).collect()),
        _ => {
            *out += &flat;
            return;
        }
    };
    out.push(open);
    for (i, (k, x)) in items.into_iter().enumerate() {
        *out += if i == 0 { "\n" } else { ",\n" };
        *out += &pad;
        if let Some(k) = k {
            *out += &format!("{}: ", json!(k));
        }
        write_compact(x, depth + 1, out);
    }
    out.push('\n');
    *out += &"  ".repeat(depth);
    out.push(close);
}

/// One-line JSON with a space after each separator.
fn spaced(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(spaced).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => format!(
            "{{{}}}",
            m.iter().map(|(k, x)| format!("{}: {}", json!(k), spaced(x))).collect::<Vec<_>>().join(", ")
        ),
        _ => v.to_string(),
    }
}

pub fn certificate_from_json(s: &str) -> Result<Certificate, IoError> {
    let v: Value = serde_json::from_str(s)?;
    let text = |v: &Value, k: &str| -> Result<String, IoError> {
        v.get(k)
            .and_then(Value::as_str)
            .map(str::to_string)
            .ok_or_else(|| IoError::Format(format!("missing string {k:?}")))
    };
    let verdict = match text(&v, "verdict")?.as_str() {
        "TRVG" => Verdict::Trvg,
        "NotTRVG" => Verdict::NotTrvg,
        "Unknown" => Verdict::Unknown,
        other => return format_err(format!("unknown verdict {other:?}")),
    };
    let surface = match text(&v, "surface")?.as_str() {
        "plane" => SurfaceKind::Plane,
        "torus" => SurfaceKind::Torus,
        other => return format_err(format!("unknown surface {other:?}")),
    };
    let e = v.get("evidence").ok_or_else(|| IoError::Format("missing evidence".into()))?;
    let count = |k: &str| -> Result<usize, IoError> {
        e.get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| IoError::Format(format!("missing integer {k:?}")))
    };
    let evidence = match text(e, "kind")?.as_str() {
        "witness" => Evidence::Witness(layout_from_value(e.get("layout").cloned().unwrap_or(Value::Null))?),
        "bound_violation" => Evidence::BoundViolation(violation_from(e, surface)?),
        "induced_obstruction" => {
            let pattern = graph_from(serde_json::from_value(e.get("pattern").cloned().unwrap_or(Value::Null))?)?;
            let map: Vec<[String; 2]> = serde_json::from_value(e.get("map").cloned().unwrap_or(Value::Null))?;
            Evidence::InducedObstruction {
                name: text(e, "name")?,
                pattern,
                map: map.into_iter().map(|[a, b]| (a, b)).collect(),
                violation: violation_from(e.get("violation").unwrap_or(&Value::Null), surface)?,
            }
        }
        "citation" => Evidence::Citation(text(e, "text")?),
        "exhaustion" => Evidence::Exhaustion {
            vertices: count("vertices")?,
            interleavings_per_axis: count("interleavings_per_axis")?,
            realizable_graphs: count("realizable_graphs")?,
        },
        other => return format_err(format!("unknown evidence kind {other:?}")),
    };
    Ok(Certificate::new(verdict, surface, evidence))
}

pub fn gseer_to_value(r: &GseerReport) -> Value {
    let axis = |s: Sight| match s {
        Sight::Horizontal => "horizontal",
        Sight::Vertical => "vertical",
    };
    json!({
        "surface": r.surface.name(),
        "passed": r.passed(),
        "parts": r.parts,
        "counts": r.counts.iter().map(|c| json!({
            "id": c.id, "horizontal": c.horizontal, "vertical": c.vertical,
        })).collect::<Vec<_>>(),
        "instances": r.instances.iter().map(|i| json!({
            "green_part": i.green_part,
            "axis": axis(i.axis),
            "p": i.p,
            "q": i.q,
            "alpha": i.alpha,
            "rhs": i.rhs,
            "holds": i.holds,
        })).collect::<Vec<_>>(),
    })
}

pub fn read_to_string(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_string(path: &Path, s: &str) -> Result<(), IoError> {
    std::fs::write(path, s).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_layout(path: &Path) -> Result<Layout, IoError> {
    layout_from_json(&read_to_string(path)?)
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    graph_from_json(&read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{construct_cycle, construct_extremal_bipartite_torus, fixed_layout, FixedLayout};
    use crate::rational::q;

    #[test]
    fn compact_json_keeps_short_values_inline() {
        let v = json!({"a": [1, 2], "b": {"c": "d"}, "long": (0..40).collect::<Vec<_>>()});
        let text = to_compact_json(&v);
        assert!(text.contains("\"a\": [1, 2],\n"), "{text}");
        assert!(text.contains("\"b\": {\"c\": \"d\"},\n"), "{text}");
        assert!(text.contains("\"long\": [\n    0,\n"), "{text}");
        assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
    }

    #[test]
    fn plane_format() {
        let l = Layout::plane(vec![Rect::plane("v1", q(0, 1), q(1, 2), q(0, 1), q(3, 1)).unwrap()]);
        let v = layout_to_value(&l);
        assert_eq!(
            v,
            json!({"surface": "plane", "rects": [{"id": "v1", "x": ["0/1", "1/2"], "y": ["0/1", "3/1"]}]})
        );
        assert_eq!(layout_from_json(&layout_to_json(&l)).unwrap(), l);
    }

    #[test]
    fn torus_round_trip() {
        for l in [
            construct_extremal_bipartite_torus(11).unwrap(),
            fixed_layout(FixedLayout::D2_10Torus).unwrap(),
        ] {
            let s = layout_to_json(&l);
            let back = layout_from_json(&s).unwrap();
            assert_eq!(back, l);
            assert_eq!(layout_to_json(&back), s);
        }
        let v = layout_to_value(&construct_extremal_bipartite_torus(11).unwrap());
        assert_eq!(v["W"], json!("11/1"));
    }

    #[test]
    fn graph_round_trip() {
        let g = crate::geometry::extract_visibility_graph(&construct_cycle(5).unwrap()).unwrap();
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
        assert!(graph_from_json(r#"{"vertices":["a"],"edges":[["a","b"]]}"#).is_err());
        let odd = Graph::from_edges(["a\":", "b\",\"c", "x y"], &[("a\":", "x y")]).unwrap();
        assert_eq!(graph_from_json(&graph_to_json(&odd)).unwrap(), odd);
    }

    #[test]
    fn malformed_input_reports_location() {
        match layout_from_json("{\n  \"surface\": \"plane\",\n  \"rects\": [\n") {
            Err(IoError::Json { line, .. }) => assert!(line >= 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(layout_from_json(r#"{"surface":"torus","rects":[]}"#), Err(IoError::Format(_))));
        assert!(matches!(
            layout_from_json(r#"{"surface":"plane","rects":[{"id":"a","x":["1/0","1"],"y":["0","1"]}]}"#),
            Err(IoError::Format(_))
        ));
    }

    #[test]
    fn certificates_round_trip() {
        use crate::analysis::{classify_complement_power, classify_complete_bipartite};
        let certs = [
            classify_complete_bipartite(3, 5, SurfaceKind::Plane).unwrap(),
            classify_complete_bipartite(3, 4, SurfaceKind::Plane).unwrap(),
            classify_complete_bipartite(7, 9, SurfaceKind::Torus).unwrap(),
            classify_complement_power(11, 3, SurfaceKind::Plane).unwrap(),
            Certificate::new(
                Verdict::NotTrvg,
                SurfaceKind::Plane,
                Evidence::Exhaustion {
                    vertices: 4,
                    interleavings_per_axis: 2520,
                    realizable_graphs: 64,
                },
            ),
        ];
        for c in certs {
            assert_eq!(certificate_from_json(&certificate_to_json(&c)).unwrap(), c);
        }
    }
}
