use std::collections::{HashMap, VecDeque};

use super::Graph;

struct Matcher {
    big: Vec<Vec<bool>>,
    small: Vec<Vec<bool>>,
    big_deg: Vec<usize>,
    small_deg: Vec<usize>,
    order: Vec<usize>,
    exact_degree: bool,
}

impl Matcher {
    fn new(big: &Graph, small: &Graph, exact_degree: bool) -> Self {
        let small_deg = small.degrees();
        Matcher {
            big: big.adjacency_matrix(),
            small: small.adjacency_matrix(),
            big_deg: big.degrees(),
            order: search_order(small, &small_deg),
            small_deg,
            exact_degree,
        }
    }

    fn run(&self) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.small.len()];
        let mut used = vec![false; self.big.len()];
        self.extend(0, &mut map, &mut used).then_some(map)
    }

    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for c in 0..self.big.len() {
            if used[c] {
                continue;
            }
            let ok_deg = if self.exact_degree {
                self.big_deg[c] == self.small_deg[v]
            } else {
                self.big_deg[c] >= self.small_deg[v]
            };
            if !ok_deg {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.small[v][u] == self.big[c][map[u]]);
            if !consistent {
                continue;
            }
            map[v] = c;
            used[c] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[c] = false;
            map[v] = usize::MAX;
        }
        false
    }
}

/// Breadth-first order, starting each component at its highest-degree vertex,
/// so that every placed vertex after the first is constrained by a neighbour.
fn search_order(g: &Graph, deg: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    for s in by_degree {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// An injective map `V(h) -> V(g)` (by index) preserving adjacency and
/// non-adjacency, if `h` is an induced subgraph of `g`. Exhaustive.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.vertex_count() > g.vertex_count() {
        return None;
    }
    Matcher::new(g, h, false).run()
}

/// [`contains_induced`] keyed by labels.
pub fn contains_induced_labeled(g: &Graph, h: &Graph) -> Option<HashMap<String, String>> {
    let map = contains_induced(g, h)?;
    Some(
        map.iter()
            .enumerate()
            .map(|(i, &j)| (h.label(i).to_string(), g.label(j).to_string()))
            .collect(),
    )
}

/// A bijection `V(g) -> V(h)` (by index) that is an isomorphism.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    Matcher::new(h, g, true).run()
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}
