use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::SurfaceKind;
use crate::geometry::{extract_visibility_graph, Layout, Rect, Surface};
use crate::graph::Graph;
use crate::rational::qi;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Tok {
    rect: usize,
    close: bool,
}

/// Endpoint order of one axis. On the torus the order is cyclic and each
/// arc runs forward from its opening token to its closing token.
#[derive(Debug, Clone)]
struct Axis {
    seq: Vec<Tok>,
    pos: Vec<[usize; 2]>,
    cyclic: bool,
}

impl Axis {
    fn random(n: usize, cyclic: bool, rng: &mut ChaCha8Rng) -> Self {
        let mut rects: Vec<usize> = (0..n).flat_map(|i| [i, i]).collect();
        rects.shuffle(rng);
        let mut opened = vec![false; n];
        let seq = rects
            .into_iter()
            .map(|r| {
                let close = opened[r];
                opened[r] = true;
                Tok { rect: r, close }
            })
            .collect();
        let mut a = Axis {
            seq,
            pos: vec![[0, 0]; n],
            cyclic,
        };
        for p in 0..a.seq.len() {
            a.place(p);
        }
        a
    }

    fn place(&mut self, p: usize) {
        let t = self.seq[p];
        self.pos[t.rect][t.close as usize] = p;
    }

    fn overlap(&self, i: usize, j: usize) -> bool {
        let ([oi, ci], [oj, cj]) = (self.pos[i], self.pos[j]);
        if !self.cyclic {
            return oi.max(oj) < ci.min(cj);
        }
        let l = self.seq.len();
        let inside = |p: usize, o: usize, c: usize| {
            let d = (p + l - o) % l;
            d > 0 && d < (c + l - o) % l
        };
        inside(oj, oi, ci) || inside(oi, oj, cj)
    }

    fn swap(&mut self, p: usize, q: usize) {
        self.seq.swap(p, q);
        self.place(p);
        self.place(q);
    }
}

struct State<'a> {
    g: &'a Graph,
    axes: [Axis; 2],
    over: [Vec<bool>; 2],
    cost: i64,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph, axes: [Axis; 2]) -> Self {
        let n = g.vertex_count();
        let mut s = State {
            g,
            axes,
            over: [vec![false; n * n], vec![false; n * n]],
            cost: 0,
        };
        for i in 0..n {
            for j in i + 1..n {
                for a in 0..2 {
                    let o = s.axes[a].overlap(i, j);
                    s.over[a][i * n + j] = o;
                }
                s.cost += s.pair_cost(i, j);
            }
        }
        s
    }

    fn pair_cost(&self, i: usize, j: usize) -> i64 {
        let n = self.g.vertex_count();
        let (x, y) = (self.over[0][i * n + j], self.over[1][i * n + j]);
        2 * (x && y) as i64 + ((x || y) != self.g.adjacent(i, j)) as i64
    }

    /// Re-evaluates the pairs between `i` and each of `others` on `axis`,
    /// returning the change in cost.
    fn refresh(&mut self, axis: usize, i: usize, others: impl Iterator<Item = usize>) -> i64 {
        let n = self.g.vertex_count();
        let mut delta = 0;
        for j in others {
            if j == i {
                continue;
            }
            let (a, b) = (i.min(j), i.max(j));
            let before = self.pair_cost(a, b);
            self.over[axis][a * n + b] = self.axes[axis].overlap(a, b);
            delta += self.pair_cost(a, b) - before;
        }
        delta
    }

    /// Swaps positions `p` and `p + 1` (cyclically on the torus). Returns
    /// `None` if the swap would close a plane interval before opening it.
    fn swap(&mut self, axis: usize, p: usize) -> Option<i64> {
        let l = self.axes[axis].seq.len();
        let q = (p + 1) % l;
        let (a, b) = (self.axes[axis].seq[p], self.axes[axis].seq[q]);
        if a.rect == b.rect && !self.axes[axis].cyclic {
            return None;
        }
        self.axes[axis].swap(p, q);
        let n = self.g.vertex_count();
        let delta = if a.rect == b.rect {
            self.refresh(axis, a.rect, 0..n)
        } else {
            self.refresh(axis, a.rect, std::iter::once(b.rect))
        };
        self.cost += delta;
        Some(delta)
    }

    fn layout(&self, surface: SurfaceKind) -> Layout {
        let n = self.g.vertex_count();
        let l = 2 * n as i64;
        let rects = (0..n).map(|i| {
            let id = self.g.label(i).to_string();
            let [xo, xc] = self.axes[0].pos[i].map(|p| p as i64);
            let [yo, yc] = self.axes[1].pos[i].map(|p| p as i64);
            match surface {
                SurfaceKind::Plane => Rect::plane(id, qi(xo), qi(xc), qi(yo), qi(yc)),
                SurfaceKind::Torus => {
                    let len = |o: i64, c: i64| qi((c - o).rem_euclid(l));
                    Rect::torus(id, qi(xo), len(xo, xc), qi(yo), len(yo, yc), &qi(l), &qi(l))
                }
            }
            .expect("positive integer spans")
        });
        let surface = match surface {
            SurfaceKind::Plane => Surface::Plane,
            SurfaceKind::Torus => Surface::torus(qi(l), qi(l)),
        };
        Layout::new(surface, rects.collect())
    }
}

/// Simulated annealing over pairs of endpoint orders, moving by adjacent
/// swaps. Returns a layout only after it re-extracts to `g` exactly; `None`
/// proves nothing. The same `(g, budget, seed, surface)` always gives the
/// same answer.
pub fn random_search(g: &Graph, budget: u64, seed: u64, surface: SurfaceKind) -> Option<Layout> {
    let n = g.vertex_count();
    let cyclic = surface == SurfaceKind::Torus;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let axes = [Axis::random(n, cyclic, &mut rng), Axis::random(n, cyclic, &mut rng)];
    let mut s = State::new(g, axes);
    let verified = |s: &State| {
        let layout = s.layout(surface);
        (layout.validate().is_ok() && extract_visibility_graph(&layout).ok().as_ref() == Some(g)).then_some(layout)
    };
    if s.cost == 0 {
        return verified(&s);
    }
    if n < 2 {
        return None;
    }
    let (t0, t1) = (2.0f64, 0.05f64);
    for step in 0..budget {
        let frac = step as f64 / budget as f64;
        let temp = t0 * (t1 / t0).powf(frac);
        let axis = rng.gen_range(0..2);
        let l = 2 * n;
        let p = rng.gen_range(0..if cyclic { l } else { l - 1 });
        let Some(delta) = s.swap(axis, p) else {
            continue;
        };
        let accept = delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp();
        if !accept {
            s.swap(axis, p);
            continue;
        }
        if s.cost == 0 {
            if let Some(layout) = verified(&s) {
                return Some(layout);
            }
        }
    }
    None
}
