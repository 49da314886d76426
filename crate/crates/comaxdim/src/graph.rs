//! Immutable simple graphs with positional vertex identity.
//!
//! Labels are metadata only; all algorithms work on indices. The all-pairs
//! distance matrix is computed once on first use and shared read-only.

use std::collections::VecDeque;
use std::sync::OnceLock;

use crate::bitset::Bitset;
use crate::{Error, Result};

/// Sentinel distance for unreachable pairs; printed as `inf` in reports.
pub const INF: u32 = u32::MAX;

/// An undirected simple graph.
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Bitset>,
    edge_count: usize,
    dist: OnceLock<Vec<u32>>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            labels: self.labels.clone(),
            adj: self.adj.clone(),
            edge_count: self.edge_count,
            dist: OnceLock::new(),
        }
    }
}

impl PartialEq for Graph {
    /// Labeled-graph equality: same labels in the same order, same edges.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Build a graph from labels and an edge list.
    ///
    /// Rejects loops, out-of-range endpoints, and duplicate edges.
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![Bitset::new(n); n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::InvalidGraphData(format!("loop at vertex {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidGraphData(format!("duplicate edge {u}-{v}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            edge_count += 1;
        }
        Ok(Graph {
            labels,
            adj,
            edge_count,
            dist: OnceLock::new(),
        })
    }

    fn index_labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph::new(Self::index_labels(n), &[]).expect("edgeless graph is always valid")
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(Self::index_labels(n), &edges).expect("complete graph is always valid")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(Self::index_labels(n), &edges).expect("path is always valid")
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::new(Self::index_labels(n), &edges)
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("empty part in multipartite graph".into()));
        }
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (pi, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(pi, size));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(Self::index_labels(n), &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * (n - 1) / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Adjacency row of `v` as a bit set.
    pub fn neighbors_bits(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.vertex_count() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Open and closed neighborhoods of `v`, each sorted ascending.
    pub fn neighborhoods(&self, v: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        if v >= self.vertex_count() {
            return Err(Error::UnknownVertex(v));
        }
        let open = self.adj[v].to_vec();
        let mut closed = open.clone();
        let pos = closed.partition_point(|&u| u < v);
        closed.insert(pos, v);
        Ok((open, closed))
    }

    /// All-pairs distance matrix (row-major, `INF` for unreachable),
    /// computed once by breadth-first search from every vertex.
    pub fn distances(&self) -> &[u32] {
        self.dist.get_or_init(|| {
            let n = self.vertex_count();
            let mut matrix = vec![INF; n * n];
            let mut queue = VecDeque::new();
            for src in 0..n {
                let row = &mut matrix[src * n..(src + 1) * n];
                row[src] = 0;
                queue.clear();
                queue.push_back(src);
                while let Some(u) = queue.pop_front() {
                    let du = row[u];
                    for w in self.adj[u].iter() {
                        if row[w] == INF {
                            row[w] = du + 1;
                            queue.push_back(w);
                        }
                    }
                }
            }
            matrix
        })
    }

    /// Distance between two vertices (`INF` when unreachable).
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        let n = self.vertex_count();
        debug_assert!(u < n && v < n);
        self.distances()[u * n + v]
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        self.distances()[..n].iter().all(|&d| d != INF)
    }

    /// Largest distance; `INF` when disconnected, error on zero vertices.
    pub fn diameter(&self) -> Result<u32> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph(
                "diameter is undefined on zero vertices".into(),
            ));
        }
        Ok(self.distances().iter().copied().max().unwrap_or(0))
    }

    /// Subgraph induced on `keep`, preserving the given vertex order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = Bitset::new(n);
        for &v in keep {
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if seen.contains(v) {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} repeated in induced subgraph"
                )));
            }
            seen.insert(v);
        }
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(labels, &edges)
    }

    /// Complement graph on the same labels.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u].contains(v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.labels.clone(), &edges).expect("complement of a valid graph is valid")
    }

    /// Vertices of each connected component, components ordered by their
    /// smallest vertex, vertices ascending within a component.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut assigned = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            let mut comp = vec![start];
            assigned[start] = true;
            queue.clear();
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if !assigned[w] {
                        assigned[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Vertices with no neighbors, ascending.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }
}

/// Format a distance value, rendering `INF` as `inf`.
pub fn display_distance(d: u32) -> String {
    if d == INF {
        "inf".to_string()
    } else {
        d.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates() {
        assert!(matches!(
            Graph::new(vec!["a".into()], &[(0, 0)]),
            Err(Error::InvalidGraphData(_))
        ));
        assert!(matches!(
            Graph::new(vec!["a".into(), "b".into()], &[(0, 2)]),
            Err(Error::UnknownVertex(2))
        ));
        assert!(matches!(
            Graph::new(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]),
            Err(Error::InvalidGraphData(_))
        ));
    }

    #[test]
    fn basic_accessors() {
        let g = Graph::complete(4);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_complete());
        assert!(g.has_edge(0, 3));
        assert_eq!(g.degree(2), 3);
        assert_eq!(g.edges().len(), 6);
        assert!(!Graph::path(3).is_complete());
    }

    #[test]
    fn distances_on_known_graphs() {
        let p4 = Graph::path(4);
        assert_eq!(p4.dist(0, 3), 3);
        assert_eq!(p4.dist(1, 1), 0);
        assert_eq!(p4.diameter().unwrap(), 3);
        assert!(p4.is_connected());

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.dist(0, 2), 2);
        assert_eq!(c5.dist(0, 3), 2);
        assert_eq!(c5.diameter().unwrap(), 2);

        let k3 = Graph::complete(3);
        assert_eq!(k3.diameter().unwrap(), 1);
    }

    #[test]
    fn disconnected_and_empty() {
        let g = Graph::edgeless(3);
        assert_eq!(g.dist(0, 1), INF);
        assert_eq!(g.diameter().unwrap(), INF);
        assert!(!g.is_connected());
        assert_eq!(display_distance(g.diameter().unwrap()), "inf");

        let single = Graph::edgeless(1);
        assert_eq!(single.diameter().unwrap(), 0);
        assert!(single.is_connected());

        assert!(matches!(
            Graph::edgeless(0).diameter(),
            Err(Error::EmptyGraph(_))
        ));
    }

    #[test]
    fn neighborhoods_sorted() {
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[(1, 3), (1, 0)],
        )
        .unwrap();
        let (open, closed) = g.neighborhoods(1).unwrap();
        assert_eq!(open, vec![0, 3]);
        assert_eq!(closed, vec![0, 1, 3]);
        let (open, closed) = g.neighborhoods(2).unwrap();
        assert!(open.is_empty());
        assert_eq!(closed, vec![2]);
        assert!(matches!(g.neighborhoods(9), Err(Error::UnknownVertex(9))));
    }

    #[test]
    fn induced_subgraph_preserves_order() {
        let g = Graph::path(4);
        let sub = g.induced_subgraph(&[3, 1, 2]).unwrap();
        assert_eq!(sub.labels(), &["3", "1", "2"]);
        assert_eq!(sub.edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(g.induced_subgraph(&[]).unwrap().vertex_count(), 0);
        assert!(g.induced_subgraph(&[0, 0]).is_err());
        assert!(g.induced_subgraph(&[7]).is_err());
        let full = g.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(full, g);
    }

    #[test]
    fn complement_of_path() {
        let g = Graph::path(3);
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2)]);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn components_and_isolated() {
        let g = Graph::new(
            (0..5).map(|i| i.to_string()).collect(),
            &[(0, 1), (3, 4)],
        )
        .unwrap();
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 1], vec![2], vec![3, 4]]
        );
        assert_eq!(g.isolated_vertices(), vec![2]);
    }

    #[test]
    fn multipartite_construction() {
        let g = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(0, 2));
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
        let k222 = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(k222.edge_count(), 12);
        assert_eq!(k222.diameter().unwrap(), 2);
    }

    #[test]
    fn cycle_needs_three() {
        assert!(Graph::cycle(2).is_err());
        assert_eq!(Graph::cycle(3).unwrap().edge_count(), 3);
    }
}
