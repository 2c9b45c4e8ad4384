//! Immutable simple undirected graphs with per-vertex neighbor bit rows.
//!
//! Vertices are dense indices `0..order`. Graphs are never mutated after
//! construction; every derived structure (distances, twin partitions, ...)
//! is computed on demand.

use std::collections::VecDeque;
use std::fmt;

use crate::bits::BitRow;
use crate::error::{Error, Result};

/// An immutable simple undirected graph.
///
/// Invariants enforced at construction: no self-loops, symmetric adjacency,
/// order at least 1. Equality compares order and adjacency rows under the
/// fixed vertex numbering; labels are display metadata and do not take part
/// in equality.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    adj: Vec<BitRow>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Duplicate edges (in either orientation) are collapsed; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![BitRow::new(order); order];
        for &(u, v) in edges {
            if u >= order {
                return Err(Error::VertexOutOfRange { vertex: u, order });
            }
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].set(v);
            adj[v].set(u);
        }
        Ok(Graph {
            order,
            adj,
            labels: None,
        })
    }

    /// Builds a graph from an adjacency predicate over vertex pairs `i < j`.
    pub(crate) fn from_predicate(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(order >= 1);
        let mut adj = vec![BitRow::new(order); order];
        for i in 0..order {
            for j in (i + 1)..order {
                if adjacent(i, j) {
                    adj[i].set(j);
                    adj[j].set(i);
                }
            }
        }
        Graph {
            order,
            adj,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter_ones()
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &BitRow {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in self.adj[u].iter_ones() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The complement graph; labels carry over.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::from_predicate(self.order, |i, j| !self.has_edge(i, j));
        g.labels = self.labels.clone();
        g
    }

    /// The line graph: one vertex per edge, ordered lexicographically by
    /// endpoint pair; vertices adjacent when the edges share an endpoint.
    ///
    /// Labels record the endpoint pair, using the source graph's labels when
    /// present. An edgeless input is rejected, since the result would have
    /// order 0.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::LineGraphOfEdgeless);
        }
        let mut g = Graph::from_predicate(edges.len(), |i, j| {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            a == c || a == d || b == c || b == d
        });
        let name = |v: usize| match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        };
        g.labels = Some(
            edges
                .iter()
                .map(|&(u, v)| format!("{{{},{}}}", name(u), name(v)))
                .collect(),
        );
        Ok(g)
    }

    /// All-pairs hop distances by breadth-first search from every vertex.
    pub fn bfs_distances(&self) -> DistanceMatrix {
        let n = self.order;
        let mut dist = vec![RAW_INF; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut dist[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let next = row[u] + 1;
                for v in self.adj[u].iter_ones() {
                    if row[v] == RAW_INF {
                        row[v] = next;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { order: n, dist }
    }

    /// Vertices reachable from `start` while staying inside `allowed`.
    ///
    /// `start` must itself be in `allowed`.
    pub(crate) fn component_within(&self, start: usize, allowed: &BitRow) -> BitRow {
        debug_assert!(allowed.contains(start));
        let mut seen = BitRow::new(self.order);
        seen.set(start);
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            for v in self.adj[u].iter_ones() {
                if allowed.contains(v) && !seen.contains(v) {
                    seen.set(v);
                    frontier.push(v);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let all = BitRow::full(self.order);
        self.component_within(0, &all).count() == self.order
    }

    /// The diameter of a connected graph; errors on disconnected input.
    pub fn diameter(&self) -> Result<u32> {
        let d = self.bfs_distances();
        match d.max_finite_checked() {
            Some(m) => Ok(m),
            None => Err(Error::Disconnected {
                context: "diameter is undefined",
            }),
        }
    }

    /// Parses the edge-list text format: first line `n m`, then `m` lines
    /// `u v` with 0-based indices. `#` starts a comment; blank lines are
    /// skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let parse = |s: Option<&str>, what: &str| -> Result<usize> {
                s.and_then(|t| t.parse().ok()).ok_or(Error::EdgeListParse {
                    line: line_no,
                    msg: format!("expected {what}"),
                })
            };
            match header {
                None => {
                    let n = parse(fields.next(), "vertex count")?;
                    let m = parse(fields.next(), "edge count")?;
                    if fields.next().is_some() {
                        return Err(Error::EdgeListParse {
                            line: line_no,
                            msg: "trailing tokens after header".into(),
                        });
                    }
                    header = Some((n, m));
                }
                Some(_) => {
                    let u = parse(fields.next(), "edge endpoint")?;
                    let v = parse(fields.next(), "edge endpoint")?;
                    if fields.next().is_some() {
                        return Err(Error::EdgeListParse {
                            line: line_no,
                            msg: "trailing tokens after edge".into(),
                        });
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or(Error::EdgeListParse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::EdgeListParse {
                line: 0,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.order, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

const RAW_INF: u32 = u32::MAX;

/// A hop distance, with a dedicated sentinel for unreachable pairs so
/// arithmetic misuse is detectable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

/// All-pairs shortest-path hop counts.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        match self.raw(u, v) {
            RAW_INF => Distance::Unreachable,
            d => Distance::Finite(d),
        }
    }

    #[inline]
    pub(crate) fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn all_finite(&self) -> bool {
        self.dist.iter().all(|&d| d != RAW_INF)
    }

    /// Largest distance when every pair is reachable, `None` otherwise.
    pub fn max_finite_checked(&self) -> Option<u32> {
        if self.all_finite() {
            self.dist.iter().copied().max()
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn from_edge_list_builds_p3() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g, generators::path(3).unwrap());
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn from_edge_list_single_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn from_edge_list_dedups_symmetric_pairs() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn from_edge_list_rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edge_list(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn construction_invariants_hold() {
        let g = generators::kneser(5, 2).unwrap();
        for u in g.vertices() {
            assert!(!g.has_edge(u, u));
            for v in g.vertices() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn complement_of_k3_is_empty() {
        let g = generators::complete(3).unwrap().complement();
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn c5_complement_is_a_5_cycle() {
        let g = generators::cycle(5).unwrap().complement();
        assert_eq!(g.size(), 5);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn complement_is_an_involution() {
        let g = generators::path(4).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn line_graph_of_p4_is_p3() {
        let lg = generators::path(4).unwrap().line_graph().unwrap();
        assert_eq!(lg, generators::path(3).unwrap());
    }

    #[test]
    fn line_graph_of_k3_is_k3() {
        let lg = generators::complete(3).unwrap().line_graph().unwrap();
        assert_eq!(lg, generators::complete(3).unwrap());
    }

    #[test]
    fn line_graph_rejects_edgeless() {
        let g = generators::empty(4).unwrap();
        assert_eq!(g.line_graph(), Err(Error::LineGraphOfEdgeless));
    }

    #[test]
    fn bfs_distances_on_small_graphs() {
        let p3 = generators::path(3).unwrap().bfs_distances();
        assert_eq!(p3.get(0, 2), Distance::Finite(2));

        let c6 = generators::cycle(6).unwrap();
        assert_eq!(c6.diameter().unwrap(), 3);

        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let d = two_k2.bfs_distances();
        assert_eq!(d.get(0, 2), Distance::Unreachable);
        assert!(!d.all_finite());
    }

    #[test]
    fn connectivity_and_diameter() {
        assert!(generators::path(5).unwrap().is_connected());
        assert!(!generators::empty(2).unwrap().is_connected());
        assert_eq!(generators::path(5).unwrap().diameter().unwrap(), 4);
        assert!(generators::empty(2).unwrap().diameter().is_err());
    }

    /// Independent oracle: reachability within k hops via boolean matrix
    /// powers must agree with BFS distances.
    fn reach_by_matrix_power(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.order();
        let mut reach: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| i == j).collect())
            .collect();
        let mut dist = vec![vec![RAW_INF; n]; n];
        for i in 0..n {
            dist[i][i] = 0;
        }
        for step in 1..=n as u32 {
            let prev = reach.clone();
            for i in 0..n {
                for j in 0..n {
                    if !reach[i][j] && (0..n).any(|k| prev[i][k] && g.has_edge(k, j)) {
                        reach[i][j] = true;
                        dist[i][j] = step;
                    }
                }
            }
        }
        dist
    }

    #[test]
    fn bfs_agrees_with_matrix_power_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.random_range(1..=8);
            let g = Graph::from_predicate(n, |_, _| rng.random_bool(0.4));
            let d = g.bfs_distances();
            let oracle = reach_by_matrix_power(&g);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(d.raw(i, j), oracle[i][j], "mismatch at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = generators::petersen();
        let parsed = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn edge_list_parses_comments_and_blanks() {
        let text = "# a path\n3 2\n0 1  # first\n\n1 2\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, generators::path(3).unwrap());
    }

    #[test]
    fn edge_list_rejects_malformed() {
        assert!(matches!(
            Graph::parse_edge_list(""),
            Err(Error::EdgeListParse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("2 1\n"),
            Err(Error::EdgeListParse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("2 1\n0 x\n"),
            Err(Error::EdgeListParse { .. })
        ));
    }
}
