//! Finite simple graphs with stable string labels, family generators and the
//! structural queries the classifiers rely on.

mod families;
mod iso;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use families::{grid_vertex, hex_removed, vertex, CreationStep, GraphFamily};
pub use iso::{contains_induced, contains_induced_labeled, isomorphic, isomorphism};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("self-loop on {0:?}")]
    SelfLoop(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

/// A simple undirected graph. Vertices keep the order they were inserted in;
/// equality compares labels and labeled edges and ignores that order.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn with_vertices<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (k, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), k).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let adj = vec![BTreeSet::new(); labels.len()];
        Ok(Graph { labels, index, adj })
    }

    /// Vertices `v1..vn`, no edges.
    pub fn numbered(n: usize) -> Self {
        Graph::with_vertices((1..=n).map(|k| format!("v{k}"))).expect("distinct labels")
    }

    pub fn from_edges<S: AsRef<str>>(
        labels: impl IntoIterator<Item = S>,
        edges: &[(S, S)],
    ) -> Result<Self, GraphError> {
        let mut g = Graph::with_vertices(labels.into_iter().map(|s| s.as_ref().to_string()))?;
        for (a, b) in edges {
            g.add_edge(a.as_ref(), b.as_ref())?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn idx(&self, label: &str) -> Result<usize, GraphError> {
        self.index_of(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let (i, j) = (self.idx(a)?, self.idx(b)?);
        if i == j {
            return Err(GraphError::SelfLoop(a.to_string()));
        }
        self.add_edge_idx(i, j);
        Ok(())
    }

    /// Panics on a self-loop.
    pub fn add_edge_idx(&mut self, i: usize, j: usize) {
        assert_ne!(i, j, "self-loop");
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn remove_edge_idx(&mut self, i: usize, j: usize) {
        self.adj[i].remove(&j);
        self.adj[j].remove(&i);
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].iter().copied()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.range(i + 1..).map(|&j| (i, j)));
        }
        out
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut m = vec![vec![false; n]; n];
        for (i, j) in self.edges() {
            m[i][j] = true;
            m[j][i] = true;
        }
        m
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::with_vertices(vertices.iter().map(|&v| self.labels[v].clone()))
            .expect("distinct vertices");
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.adjacent(u, v) {
                    g.add_edge_idx(a, b);
                }
            }
        }
        g
    }

    pub fn induced_by_labels(&self, labels: &[&str]) -> Result<Graph, GraphError> {
        let idx = labels.iter().map(|l| self.idx(l)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.induced(&idx))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::with_vertices(self.labels.clone()).expect("distinct");
        for i in 0..n {
            for j in i + 1..n {
                if !self.adjacent(i, j) {
                    g.add_edge_idx(i, j);
                }
            }
        }
        g
    }

    /// `(V1 ∪ V2, E1 ∪ E2)`, matching vertices by label.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut labels = self.labels.clone();
        for l in &other.labels {
            if !self.index.contains_key(l) {
                labels.push(l.clone());
            }
        }
        let mut g = Graph::with_vertices(labels).expect("distinct");
        for src in [self, other] {
            for (a, b) in src.edge_labels() {
                g.add_edge(&a, &b).expect("known labels");
            }
        }
        g
    }

    /// Renames vertices; labels missing from `map` are kept.
    pub fn relabel(&self, map: &HashMap<String, String>) -> Result<Graph, GraphError> {
        let labels = self
            .labels
            .iter()
            .map(|l| map.get(l).cloned().unwrap_or_else(|| l.clone()));
        let mut g = Graph::with_vertices(labels)?;
        for (i, j) in self.edges() {
            g.add_edge_idx(i, j);
        }
        Ok(g)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|s| s.len() == d)
    }

    /// Proper 2-colouring by breadth-first search, or `None` when an odd cycle
    /// exists. The first vertex of every component (in vertex order) goes to
    /// the first part.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("coloured");
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| colour[v] == Some(false));
        Some((a, b))
    }

    pub fn bipartition_labels(&self) -> Option<(Vec<String>, Vec<String>)> {
        let (a, b) = self.bipartition()?;
        let names = |s: Vec<usize>| s.into_iter().map(|v| self.labels[v].clone()).collect();
        Some((names(a), names(b)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut map = Vec::with_capacity(self.vertex_count());
        for l in &self.labels {
            match other.index_of(l) {
                Some(j) => map.push(j),
                None => return false,
            }
        }
        self.edges()
            .into_iter()
            .all(|(i, j)| other.adjacent(map[i], map[j]))
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edge_labels())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        GraphFamily::Cycle(n).expected_graph().unwrap()
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let (a, b) = cycle(4).bipartition_labels().unwrap();
        assert_eq!(a, vec!["v1", "v3"]);
        assert_eq!(b, vec!["v2", "v4"]);
    }

    #[test]
    fn odd_cycle_is_not_bipartite() {
        assert!(cycle(3).bipartition().is_none());
        assert!(cycle(7).bipartition().is_none());
    }

    #[test]
    fn k34_parts() {
        let g = GraphFamily::CompleteBipartite(3, 4).expected_graph().unwrap();
        let (a, b) = g.bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (3, 4));
    }

    #[test]
    fn bipartition_handles_isolated_vertices() {
        let g = Graph::numbered(3);
        let (a, b) = g.bipartition().unwrap();
        assert_eq!(a, vec![0, 1, 2]);
        assert!(b.is_empty());
    }

    #[test]
    fn equality_ignores_vertex_order() {
        let g = Graph::from_edges(["a", "b", "c"], &[("a", "b")]).unwrap();
        let h = Graph::from_edges(["c", "b", "a"], &[("b", "a")]).unwrap();
        assert_eq!(g, h);
        let k = Graph::from_edges(["c", "b", "a"], &[("b", "c")]).unwrap();
        assert_ne!(g, k);
    }

    #[test]
    fn edge_errors() {
        let mut g = Graph::numbered(2);
        assert_eq!(g.add_edge("v1", "v1"), Err(GraphError::SelfLoop("v1".into())));
        assert_eq!(g.add_edge("v1", "x"), Err(GraphError::UnknownVertex("x".into())));
        assert!(matches!(
            Graph::with_vertices(["a", "a"]),
            Err(GraphError::DuplicateVertex(_))
        ));
    }

    #[test]
    fn union_merges_on_labels() {
        let g = Graph::from_edges(["a", "v"], &[("a", "v")]).unwrap();
        let h = Graph::from_edges(["v", "b"], &[("v", "b")]).unwrap();
        let u = g.union(&h);
        assert_eq!(u.vertex_count(), 3);
        assert_eq!(u.edge_count(), 2);
        assert!(u.has_edge("a", "v") && u.has_edge("b", "v"));
    }
}
