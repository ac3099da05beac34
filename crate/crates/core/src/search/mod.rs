//! Brute-force recognition of small TRVGs on the plane, plus a seeded local
//! search for larger graphs and for the torus.
//!
//! A plane layout with distinct endpoints is determined, as far as its
//! visibility graph goes, by the order of its `2n` endpoints on each axis.
//! Each axis order gives the set of pairs whose spans overlap; a pair of
//! orders is a layout iff no pair overlaps on both axes, and the graph is
//! the union of the two sets. Orders are encoded as sequences of rectangle
//! indices, the first occurrence of `i` opening it and the second closing it.

mod random;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{find_bipartite_obstruction, Certificate, Evidence, SurfaceKind, Verdict};
use crate::geometry::{extract_visibility_graph, GeometryError, Layout, Rect};
use crate::graph::{vertex, Graph};
use crate::rational::qi;

pub use random::random_search;

/// Largest vertex count the exact search accepts, whatever `n_max` says.
pub const EXACT_LIMIT: usize = 6;

pub const DEFAULT_EXACT_MAX: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has {n} vertices, exact search is limited to {max}")]
    TooLarge { n: usize, max: usize },
    #[error("malformed endpoint order: {0}")]
    BadOrder(String),
    #[error("rectangles {0} and {1} overlap on both axes")]
    Overlap(usize, usize),
    #[error("{labels} labels for {n} rectangles")]
    LabelCount { labels: usize, n: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Endpoint orders for both axes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalConfig {
    pub x: Vec<u8>,
    pub y: Vec<u8>,
}

impl CanonicalConfig {
    pub fn len(&self) -> usize {
        self.x.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Checks both orders and disjointness; returns the overlap masks.
    pub fn validate(&self) -> Result<(u64, u64), SearchError> {
        let n = self.len();
        if self.y.len() != self.x.len() || !self.x.len().is_multiple_of(2) {
            return Err(SearchError::BadOrder("orders of different or odd length".into()));
        }
        let mx = order_mask(&self.x, n)?;
        let my = order_mask(&self.y, n)?;
        if let Some(bit) = first_bit(mx & my) {
            let (i, j) = pair_of(bit, n);
            return Err(SearchError::Overlap(i, j));
        }
        Ok((mx, my))
    }
}

fn first_bit(m: u64) -> Option<usize> {
    (m != 0).then(|| m.trailing_zeros() as usize)
}

/// Bit position of the pair `i < j` among the `n(n-1)/2` pairs.
pub fn pair_bit(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pair_of(bit: usize, n: usize) -> (usize, usize) {
    for i in 0..n {
        for j in i + 1..n {
            if pair_bit(i, j, n) == bit {
                return (i, j);
            }
        }
    }
    unreachable!("bit out of range")
}

/// Overlap mask of one axis order, checking that each index occurs twice.
fn order_mask(order: &[u8], n: usize) -> Result<u64, SearchError> {
    if n > 11 {
        return Err(SearchError::BadOrder(format!("{n} rectangles do not fit a 64-bit pair mask")));
    }
    let mut seen = vec![0u8; n];
    let mut open: u64 = 0;
    let mut mask = 0;
    for &t in order {
        let i = t as usize;
        if i >= n {
            return Err(SearchError::BadOrder(format!("index {i} out of range")));
        }
        seen[i] += 1;
        match seen[i] {
            1 => open |= 1 << i,
            2 => {
                open &= !(1 << i);
                mask |= close_bits(i, open, n);
            }
            _ => return Err(SearchError::BadOrder(format!("index {i} occurs more than twice"))),
        }
    }
    if open != 0 || seen.iter().any(|&s| s != 2) {
        return Err(SearchError::BadOrder("some rectangle is never closed".into()));
    }
    Ok(mask)
}

/// Pairs formed by closing `i` while the rectangles in `open` are open.
fn close_bits(i: usize, mut open: u64, n: usize) -> u64 {
    let mut m = 0;
    while open != 0 {
        let j = open.trailing_zeros() as usize;
        open &= open - 1;
        m |= 1 << if i < j { pair_bit(i, j, n) } else { pair_bit(j, i, n) };
    }
    m
}

/// Every single-axis order on `n` rectangles, in lexicographic order.
/// There are `(2n)! / 2^n` of them.
pub fn interleavings(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(2 * n);
    let mut left = vec![2u8; n];
    fn rec(seq: &mut Vec<u8>, left: &mut [u8], out: &mut Vec<Vec<u8>>) {
        if left.iter().all(|&l| l == 0) {
            out.push(seq.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                seq.push(i as u8);
                rec(seq, left, out);
                seq.pop();
                left[i] += 1;
            }
        }
    }
    rec(&mut seq, &mut left, &mut out);
    out
}

/// Every valid config on `n` rectangles, without any pruning.
pub fn all_configs(n: usize) -> Vec<CanonicalConfig> {
    let orders: Vec<(Vec<u8>, u64)> = interleavings(n)
        .into_iter()
        .map(|o| {
            let m = order_mask(&o, n).expect("generated order");
            (o, m)
        })
        .collect();
    let mut out = Vec::new();
    for (x, mx) in &orders {
        for (y, my) in &orders {
            if mx & my == 0 {
                out.push(CanonicalConfig { x: x.clone(), y: y.clone() });
            }
        }
    }
    out
}

/// Single-axis orders grouped by overlap mask, keeping the lexicographically
/// smallest order of each group.
struct AxisTable {
    interleavings: usize,
    masks: BTreeMap<u64, Vec<u8>>,
}

/// The search fans out over the first two tokens of each order; shards are
/// merged by taking the smallest order per mask, so the result does not
/// depend on scheduling.
fn build_table(n: usize) -> AxisTable {
    type Shard = (usize, HashMap<u64, Vec<u8>>);
    fn rec(seq: &mut Vec<u8>, left: &mut [u8], open: u64, mask: u64, n: usize, acc: &mut Shard) {
        if seq.len() == 2 * n {
            acc.0 += 1;
            acc.1.entry(mask).or_insert_with(|| seq.clone());
            return;
        }
        for i in 0..n {
            if left[i] == 0 {
                continue;
            }
            left[i] -= 1;
            seq.push(i as u8);
            if left[i] == 1 {
                rec(seq, left, open | 1 << i, mask, n, acc);
            } else {
                let o = open & !(1 << i);
                rec(seq, left, o, mask | close_bits(i, o, n), n, acc);
            }
            seq.pop();
            left[i] += 1;
        }
    }
    if n == 0 {
        return AxisTable {
            interleavings: 1,
            masks: BTreeMap::from([(0, Vec::new())]),
        };
    }
    let mut prefixes = Vec::new();
    for a in 0..n as u8 {
        for b in 0..n as u8 {
            if n > 1 || a == b {
                prefixes.push([a, b]);
            }
        }
    }
    let run = |p: &[u8; 2]| -> Shard {
        let mut left = vec![2u8; n];
        let mut seq = Vec::with_capacity(2 * n);
        let mut open = 0u64;
        let mut mask = 0u64;
        for &t in p {
            let i = t as usize;
            left[i] -= 1;
            seq.push(t);
            if left[i] == 1 {
                open |= 1 << i;
            } else {
                open &= !(1 << i);
                mask |= close_bits(i, open, n);
            }
        }
        let mut acc = (0, HashMap::new());
        rec(&mut seq, &mut left, open, mask, n, &mut acc);
        acc
    };
    let shards: Vec<Shard> = if n >= 5 {
        with_pool(|| prefixes.par_iter().map(run).collect())
    } else {
        prefixes.iter().map(run).collect()
    };
    let mut table = AxisTable {
        interleavings: 0,
        masks: BTreeMap::new(),
    };
    for (count, masks) in shards {
        table.interleavings += count;
        for (m, seq) in masks {
            table
                .masks
                .entry(m)
                .and_modify(|s| {
                    if seq < *s {
                        *s = seq.clone();
                    }
                })
                .or_insert(seq);
        }
    }
    table
}

/// Runs `f` on a pool capped by `TRVG_THREADS` when it is set.
fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("TRVG_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok());
    match cap {
        Some(k) if k >= 1 => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

fn table(n: usize) -> &'static AxisTable {
    static TABLES: [OnceLock<AxisTable>; EXACT_LIMIT + 1] = [const { OnceLock::new() }; EXACT_LIMIT + 1];
    assert!(n <= EXACT_LIMIT, "no table beyond {EXACT_LIMIT} rectangles");
    TABLES[n].get_or_init(|| build_table(n))
}

/// One config per realizable pair of overlap masks: every visibility graph
/// on `n` labeled rectangles appears at least once. Orders are the
/// lexicographically smallest for their masks; output is sorted.
pub fn enumerate_configs(n: usize) -> Result<Vec<CanonicalConfig>, SearchError> {
    if n > EXACT_LIMIT {
        return Err(SearchError::TooLarge { n, max: EXACT_LIMIT });
    }
    let t = table(n);
    let mut out = Vec::new();
    for (mx, x) in &t.masks {
        for (my, y) in &t.masks {
            if mx & my == 0 {
                out.push(CanonicalConfig { x: x.clone(), y: y.clone() });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Edge masks of every visibility graph on `n` labeled rectangles.
pub fn realizable_masks(n: usize) -> Result<BTreeSet<u64>, SearchError> {
    if n > EXACT_LIMIT {
        return Err(SearchError::TooLarge { n, max: EXACT_LIMIT });
    }
    let masks: Vec<u64> = table(n).masks.keys().copied().collect();
    let merged = |mx: &u64| -> BTreeSet<u64> { masks.iter().filter(|&&my| mx & my == 0).map(|my| mx | my).collect() };
    Ok(with_pool(|| {
        masks.par_iter().map(merged).reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
    }))
}

/// Endpoint of rank `r` sits at `r`. `labels` default to `v1..vn`.
pub fn config_to_layout(c: &CanonicalConfig, labels: Option<&[String]>) -> Result<Layout, SearchError> {
    c.validate()?;
    let n = c.len();
    let names: Vec<String> = match labels {
        Some(l) if l.len() != n => return Err(SearchError::LabelCount { labels: l.len(), n }),
        Some(l) => l.to_vec(),
        None => (1..=n).map(vertex).collect(),
    };
    let spans = |order: &[u8]| {
        let mut s = vec![(None, 0i64); n];
        for (r, &t) in order.iter().enumerate() {
            let e = &mut s[t as usize];
            match e.0 {
                None => e.0 = Some(r as i64),
                Some(_) => e.1 = r as i64,
            }
        }
        s.into_iter().map(|(a, b)| (a.expect("validated"), b)).collect::<Vec<_>>()
    };
    let (xs, ys) = (spans(&c.x), spans(&c.y));
    let rects = (0..n)
        .map(|i| Rect::plane(names[i].clone(), qi(xs[i].0), qi(xs[i].1), qi(ys[i].0), qi(ys[i].1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Layout::plane(rects))
}

/// Edge mask of `g` in its own vertex order.
fn graph_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    g.edges().iter().fold(0, |m, &(i, j)| m | 1 << pair_bit(i, j, n))
}

/// Decides whether `g` is a plane TRVG by exhausting endpoint orders.
///
/// Every relabeling of a layout is a layout, so `g` is a TRVG iff its own
/// edge mask splits into an x-mask and a disjoint y-mask that some orders
/// realize. The witness carries `g`'s labels and is checked by extraction.
pub fn is_trvg_exact(g: &Graph, n_max: usize) -> Result<Certificate, SearchError> {
    let n = g.vertex_count();
    let max = n_max.min(EXACT_LIMIT);
    if n > max {
        return Err(SearchError::TooLarge { n, max });
    }
    let t = table(n);
    let gm = graph_mask(g);
    let found = t
        .masks
        .iter()
        .filter(|(mx, _)| *mx & !gm == 0)
        .find_map(|(mx, x)| t.masks.get(&(gm ^ mx)).map(|y| CanonicalConfig { x: x.clone(), y: y.clone() }));
    if let Some(c) = found {
        let layout = config_to_layout(&c, Some(g.labels()))?;
        let got = extract_visibility_graph(&layout)?;
        assert_eq!(&got, g, "exact search produced a layout for another graph");
        return Ok(Certificate::new(Verdict::Trvg, SurfaceKind::Plane, Evidence::Witness(layout)));
    }
    Ok(Certificate::new(
        Verdict::NotTrvg,
        SurfaceKind::Plane,
        Evidence::Exhaustion {
            vertices: n,
            interleavings_per_axis: t.interleavings,
            realizable_graphs: realizable_masks(n)?.len(),
        },
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub surface: SurfaceKind,
    pub exact_max: usize,
    pub budget: u64,
    pub seed: u64,
    /// Largest induced subgraph tried when looking for an obstruction.
    pub obstruction_max_k: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            surface: SurfaceKind::Plane,
            exact_max: DEFAULT_EXACT_MAX,
            budget: 100_000,
            seed: 0,
            obstruction_max_k: 10,
        }
    }
}

/// Exact search when `g` is small enough and on the plane, otherwise a
/// bipartite obstruction search followed by a random search. Falls back to
/// `Unknown`.
pub fn search_graph(g: &Graph, opts: &SearchOptions) -> Result<Certificate, SearchError> {
    if opts.surface == SurfaceKind::Plane && g.vertex_count() <= opts.exact_max.min(EXACT_LIMIT) {
        return is_trvg_exact(g, opts.exact_max);
    }
    if let Some(c) = find_bipartite_obstruction(g, opts.surface, opts.obstruction_max_k) {
        return Ok(c);
    }
    if let Some(layout) = random_search(g, opts.budget, opts.seed, opts.surface) {
        return Ok(Certificate::new(Verdict::Trvg, opts.surface, Evidence::Witness(layout)));
    }
    Ok(Certificate::unknown(
        opts.surface,
        format!(
            "no obstruction found and {} random moves (seed {}) found no layout",
            opts.budget, opts.seed
        ),
    ))
}
