//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trvg::analysis::{
    bipartite_bound, classify_complement_power, classify_complete_bipartite, gseer_check, Evidence, SurfaceKind,
    Verdict,
};
use trvg::constructors::*;
use trvg::geometry::{canonicalize, extract_visibility_graph, sees, Layout, Sight};
use trvg::graph::{CreationStep, GraphFamily};
use trvg::io::{layout_from_json, layout_to_json};
use trvg::rational::q;
use trvg::search::is_trvg_exact;

use common::family;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn builds(layout: Result<Layout, ConstructError>, f: &GraphFamily) -> Result<(), String> {
    let layout = layout.map_err(|e| format!("{f:?}: {e}"))?;
    layout.ensure_valid().map_err(|e| format!("{f:?}: {e}"))?;
    let got = extract_visibility_graph(&layout).map_err(|e| format!("{f:?}: {e}"))?;
    ensure(got == family(f.clone()), || format!("{f:?}: extraction differs from the expected graph"))
}

fn constructor_sweep() -> Outcome {
    use GraphFamily::*;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut count = 0;
    let mut check = |layout, f: GraphFamily| -> Result<(), String> {
        count += 1;
        builds(layout, &f)
    };
    for _ in 0..500 {
        let len = rng.gen_range(1..=20);
        let seq: Vec<CreationStep> = (0..len)
            .map(|_| if rng.gen_bool(0.5) { CreationStep::Isolated } else { CreationStep::Universal })
            .collect();
        check(construct_threshold(&seq), Threshold(seq))?;
    }
    for _ in 0..300 {
        let n = rng.gen_range(1..=40);
        let parents: Vec<usize> = (0..n).map(|k| if k == 0 { 0 } else { rng.gen_range(1..=k) }).collect();
        check(construct_tree(&parents), Tree(parents))?;
    }
    for n in 3..=60 {
        check(construct_cycle(n), Cycle(n))?;
    }
    for m in 1..=8 {
        for n in 1..=8 {
            check(construct_rect_grid(m, n), RectGrid(m, n))?;
        }
    }
    for rows in 1..=6 {
        for cols in 2..=6 {
            check(construct_tri_grid(rows, cols), TriGrid { rows, cols })?;
        }
    }
    for (rows, cols) in [(3, 3), (4, 5), (6, 6)] {
        check(construct_hex_grid(rows, cols), HexGrid { rows, cols })?;
    }
    for n in 3..=40 {
        for a in 1..=(n - 1) / 2 {
            check(construct_power_cycle(n, a), PowerCycle { n, a })?;
        }
        check(construct_complement_cycle(n), ComplementPowerCycle { n, a: 1 })?;
    }
    for a in 2..=12 {
        for n in 3..=2 * a + 4 {
            check(construct_complement_power_small(n, a), ComplementPowerCycle { n, a })?;
        }
    }
    for p in 0..=10 {
        for q in 0..=10 {
            if p.min(q) <= 2 || (p.min(q), p.max(q)) == (3, 3) || (p.min(q), p.max(q)) == (3, 4) {
                check(construct_complete_bipartite(p, q), CompleteBipartite(p, q))?;
            }
            let torus = [(3, 3), (3, 4), (3, 5), (3, 6), (4, 4)];
            if p.min(q) <= 2 || torus.contains(&(p.min(q), p.max(q))) {
                let l = construct_complete_bipartite_torus(p, q);
                ensure(l.as_ref().map(|l| l.surface.is_torus()).unwrap_or(true), || "not a torus".into())?;
                check(l, CompleteBipartite(p, q))?;
            }
        }
    }
    check(fixed_layout(FixedLayout::D2_9), ComplementPowerCycle { n: 9, a: 2 })?;
    check(fixed_layout(FixedLayout::D2_10Torus), ComplementPowerCycle { n: 10, a: 2 })?;
    Ok(format!("{count} layouts re-extract to their expected graphs"))
}

fn tightness() -> Outcome {
    for n in 7..=60 {
        let g = extract_visibility_graph(&construct_extremal_bipartite(n).map_err(|e| e.to_string())?).unwrap();
        ensure(g.is_bipartite() && g.edge_count() == 2 * n - 2, || format!("plane n = {n}: {} edges", g.edge_count()))?;
    }
    for n in 8..=60 {
        let l = construct_extremal_bipartite_torus(n).map_err(|e| e.to_string())?;
        let g = extract_visibility_graph(&l).unwrap();
        ensure(l.surface.is_torus() && g.is_bipartite() && g.edge_count() == 2 * n, || {
            format!("torus n = {n}: {} edges", g.edge_count())
        })?;
    }
    Ok("2n - 2 edges for n = 7..60 on the plane, 2n for n = 8..60 on the torus, all bipartite".into())
}

fn bound_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut instances = 0;
    let mut tight = 0;
    for (runs, torus) in [(1000, false), (500, true)] {
        let kind = if torus { SurfaceKind::Torus } else { SurfaceKind::Plane };
        for run in 0..runs {
            let n = rng.gen_range(1..=30);
            let (layout, parts) = common::random_bipartite_layout(&mut rng, n, torus);
            layout.ensure_valid().map_err(|e| e.to_string())?;
            let g = extract_visibility_graph(&layout).unwrap();
            let v = bipartite_bound(&g, kind).map_err(|e| format!("{kind} run {run}: {e}"))?;
            ensure(v.is_none(), || format!("{kind} run {run}: bound violated: {v:?}"))?;
            if g.edge_count() + 2 >= trvg::analysis::edge_bound(g.vertex_count(), kind) {
                tight += 1;
            }
            let report = gseer_check(&layout, &parts[0], &parts[1]).map_err(|e| format!("{kind} run {run}: {e}"))?;
            instances += report.instances.len();
            if let Some(bad) = report.instances.iter().find(|i| !i.holds) {
                return Err(format!("{kind} run {run}: counting inequality fails: {bad:?}"));
            }
        }
    }
    Ok(format!(
        "1000 plane and 500 torus bipartite layouts, {instances} inequality instances, {tight} within 2 edges of the bound"
    ))
}

fn classification_tables() -> Outcome {
    let plane_yes = |p: usize, q: usize| p <= 2 || (p, q) == (3, 3) || (p, q) == (3, 4);
    let torus_yes = |p: usize, q: usize| plane_yes(p, q) || [(3, 5), (3, 6), (4, 4)].contains(&(p, q));
    let mut checked = 0;
    for (kind, yes) in [(SurfaceKind::Plane, &plane_yes as &dyn Fn(usize, usize) -> bool), (SurfaceKind::Torus, &torus_yes)] {
        for p in 1..=10 {
            for q in p..=10 {
                let c = classify_complete_bipartite(p, q, kind).map_err(|e| e.to_string())?;
                let g = family(GraphFamily::CompleteBipartite(p, q));
                let want = if yes(p, q) { Verdict::Trvg } else { Verdict::NotTrvg };
                ensure(c.verdict == want, || format!("K{p},{q} on the {kind}: {}", c.verdict))?;
                c.check(&g).map_err(|e| format!("K{p},{q} on the {kind}: {e}"))?;
                checked += 1;
            }
        }
    }
    let numbers = |p, q, kind| -> Result<(usize, usize), String> {
        let c = classify_complete_bipartite(p, q, kind).map_err(|e| e.to_string())?;
        match c.evidence {
            Evidence::BoundViolation(v) => Ok((v.edges, v.bound)),
            other => Err(format!("K{p},{q}: expected a bound violation, got {other:?}")),
        }
    };
    ensure(numbers(4, 4, SurfaceKind::Plane)? == (16, 14), || "K4,4 plane".into())?;
    ensure(numbers(3, 5, SurfaceKind::Plane)? == (15, 14), || "K3,5 plane".into())?;
    ensure(numbers(4, 5, SurfaceKind::Torus)? == (20, 18), || "K4,5 torus".into())?;
    ensure(numbers(3, 7, SurfaceKind::Torus)? == (21, 20), || "K3,7 torus".into())?;
    Ok(format!("{checked} certificates checked; 16 > 14, 15 > 14, 20 > 18, 21 > 20"))
}

fn complement_powers() -> Outcome {
    let mut counts = [0usize; 3];
    let mut tally = |v: Verdict| {
        counts[match v {
            Verdict::Trvg => 0,
            Verdict::NotTrvg => 1,
            Verdict::Unknown => 2,
        }] += 1
    };
    for a in 1..=12 {
        let top = if a == 1 { 40 } else { 2 * a + 20 };
        for n in (2 * a + 1).max(3)..=top {
            let c = classify_complement_power(n, a, SurfaceKind::Plane).map_err(|e| e.to_string())?;
            let g = family(GraphFamily::ComplementPowerCycle { n, a });
            let want = if a == 1 || n <= 2 * a + 4 || (a, n) == (2, 9) {
                Verdict::Trvg
            } else if a >= 3 && n >= 2 * a + 8 {
                Verdict::NotTrvg
            } else {
                Verdict::Unknown
            };
            ensure(c.verdict == want, || format!("D^{a}_{n}: {} instead of {want}", c.verdict))?;
            c.check(&g).map_err(|e| format!("D^{a}_{n}: {e}"))?;
            if want == Verdict::NotTrvg {
                ensure(matches!(&c.evidence, Evidence::InducedObstruction { name, .. } if name == "K4,4"), || {
                    format!("D^{a}_{n}: expected an induced K4,4")
                })?;
            }
            tally(c.verdict);
        }
    }
    let t = classify_complement_power(10, 2, SurfaceKind::Torus).map_err(|e| e.to_string())?;
    ensure(t.verdict == Verdict::Trvg, || "D^2_10 on the torus".into())?;
    t.check(&family(GraphFamily::ComplementPowerCycle { n: 10, a: 2 })).map_err(|e| e.to_string())?;
    Ok(format!(
        "plane: {} TRVG with witnesses, {} NotTRVG with K4,4 maps, {} Unknown; D^2_10 torus witness checked",
        counts[0], counts[1], counts[2]
    ))
}

/// Graphs on at most four vertices that some builder produces.
fn small_constructible() -> Vec<(GraphFamily, Layout)> {
    use GraphFamily::*;
    let mut fams = Vec::new();
    for n in 1..=4 {
        fams.push(Path(n));
        fams.push(Complete(n));
        for mask in 0u32..1 << n {
            fams.push(Threshold(
                (0..n)
                    .map(|k| if mask >> k & 1 == 1 { CreationStep::Universal } else { CreationStep::Isolated })
                    .collect(),
            ));
        }
    }
    for parents in [vec![0, 1, 1, 1], vec![0, 1, 2, 3], vec![0, 1, 2, 2], vec![0, 1, 1], vec![0, 1]] {
        fams.push(Tree(parents));
    }
    fams.extend([Cycle(3), Cycle(4), RectGrid(2, 2), RectGrid(1, 4), TriGrid { rows: 2, cols: 2 }]);
    for (n, a) in [(3, 1), (4, 1)] {
        fams.push(PowerCycle { n, a });
        fams.push(ComplementPowerCycle { n, a });
    }
    for p in 0..=4 {
        for q in 0..=4 - p {
            if p + q >= 1 {
                fams.push(CompleteBipartite(p, q));
            }
        }
    }
    fams.into_iter()
        .filter_map(|f| construct(&f).ok().map(|l| (f, l)))
        .filter(|(_, l)| l.len() <= 4)
        .collect()
}

fn oracle() -> Outcome {
    let start = Instant::now();
    let golden: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(common::goldens_dir().join("oracle_small.json")).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    let mut per_n = [0usize; 5];
    for (n, count) in per_n.iter_mut().enumerate() {
        for g in common::unlabeled_graphs(n) {
            let c = is_trvg_exact(&g, 4).map_err(|e| e.to_string())?;
            c.check(&g).map_err(|e| e.to_string())?;
            if g.is_bipartite() {
                let v = bipartite_bound(&g, SurfaceKind::Plane).unwrap();
                ensure(v.is_none() || c.verdict != Verdict::Trvg, || "TRVG verdict on a bound violation".into())?;
            }
            let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect();
            rows.push(serde_json::json!({ "vertices": n, "edges": edges, "verdict": c.verdict.name() }));
            *count += 1;
        }
    }
    ensure(per_n[0] + per_n[1] + per_n[2] + per_n[3] == 8, || format!("{per_n:?} graphs on <= 3 vertices"))?;
    ensure(per_n[4] == 11, || format!("{} graphs on 4 vertices", per_n[4]))?;
    ensure(serde_json::Value::Array(rows) == golden, || "oracle results differ from the pinned golden".into())?;
    let built = small_constructible();
    for (f, l) in &built {
        let g = extract_visibility_graph(l).unwrap();
        let c = is_trvg_exact(&g, 4).map_err(|e| e.to_string())?;
        ensure(c.verdict == Verdict::Trvg, || format!("{f:?} has a layout but the oracle says {}", c.verdict))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 600.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "8 graphs on <= 3 vertices and 11 on 4 vertices all TRVG, matching the pinned golden; {} constructor witnesses agree; {secs:.2} s",
        built.len()
    ))
}

fn geometry_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0usize;
    for run in 0..10_000 {
        let n = rng.gen_range(0..=9);
        let l = common::random_plane_layout(&mut rng, n);
        let fail = |what: &str| format!("layout {run}: {what}");
        l.ensure_valid().map_err(|e| fail(&e.to_string()))?;
        let g = extract_visibility_graph(&l).unwrap();
        for a in &l.rects {
            for b in &l.rects {
                if a.id == b.id {
                    continue;
                }
                let ab = sees(a, b, &l.surface).unwrap();
                ensure(ab == sees(b, a, &l.surface).unwrap(), || fail("sees is not symmetric"))?;
                let h = a.y.open_overlap(&b.y).unwrap();
                let v = a.x.open_overlap(&b.x).unwrap();
                ensure(!(h && v), || fail("a pair sees both ways"))?;
                let want = if h {
                    Some(Sight::Horizontal)
                } else if v {
                    Some(Sight::Vertical)
                } else {
                    None
                };
                ensure(ab == want, || fail("sight disagrees with the projections"))?;
                pairs += 1;
            }
        }
        let rotated = l.rotate_quarter().map_err(|e| e.to_string())?;
        ensure(extract_visibility_graph(&rotated).unwrap() == g, || fail("rotation changes the graph"))?;
        let s = q(rng.gen_range(1..=9), rng.gen_range(1..=9));
        let scaled = l.scale(&s, &q(1, 1)).map_err(|e| e.to_string())?;
        ensure(extract_visibility_graph(&scaled).unwrap() == g, || fail("rescaling changes the graph"))?;
        let keep: BTreeSet<String> = l.ids().into_iter().filter(|_| rng.gen_bool(0.6)).collect();
        let sub = l.retain(|id| keep.contains(id));
        let idx: Vec<usize> = (0..g.vertex_count()).filter(|&i| keep.contains(g.label(i))).collect();
        ensure(extract_visibility_graph(&sub).unwrap() == g.induced(&idx), || fail("deletion is not induced"))?;
        let c = canonicalize(&l).map_err(|e| e.to_string())?;
        c.ensure_valid().map_err(|e| fail(&e.to_string()))?;
        ensure(extract_visibility_graph(&c).unwrap() == g, || fail("canonicalize changes the graph"))?;
        ensure(canonicalize(&c).unwrap() == c, || fail("canonicalize is not idempotent"))?;
    }
    Ok(format!("10000 random layouts, {pairs} ordered pairs; all five properties hold"))
}

fn io_goldens() -> Outcome {
    let dir = common::goldens_dir();
    let bin = env!("CARGO_BIN_EXE_trvg");
    let mut n = 0;
    for (name, layout, _) in common::golden_cases() {
        let lp = dir.join("layouts").join(format!("{name}.json"));
        let gp = dir.join("graphs").join(format!("{name}.json"));
        let text = std::fs::read_to_string(&lp).map_err(|e| format!("{name}: {e}"))?;
        let parsed = layout_from_json(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(parsed == layout, || format!("{name}: golden differs from the builder"))?;
        ensure(layout_to_json(&parsed) + "\n" == text, || format!("{name}: round trip is not byte-identical"))?;
        let status = Command::new(bin)
            .args(["--quiet", "verify"])
            .arg(&lp)
            .arg(&gp)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.code() == Some(0), || format!("{name}: verify exited with {status}"))?;
        n += 1;
    }
    Ok(format!("{n} golden layouts round-trip byte for byte and verify against their graphs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("constructor correctness sweep", constructor_sweep),
        ("extremal bipartite layouts are tight", tightness),
        ("edge bounds and counting inequalities on random layouts", bound_soundness),
        ("complete bipartite classification tables", classification_tables),
        ("complement power classification", complement_powers),
        ("exact oracle on graphs with at most four vertices", oracle),
        ("geometry properties on random layouts", geometry_properties),
        ("JSON round trip and verify on goldens", io_goldens),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.1} s): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1} s): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
