//! Total graphs: simple graphs whose vertices are partitioned into *full*
//! vertices (which participate in total colorings) and *empty* vertices
//! (which only ever contribute their incident edges).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Vertex identifier. File formats and generators assign dense ids starting at
/// 0; derived subgraphs keep the ids of their parent graph.
pub type VertexId = u32;

/// Unordered edge key: endpoints in ascending order.
pub fn ekey(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple graph with a full/empty marking on every vertex.
///
/// No self-loops, no parallel edges, and every edge endpoint must have been
/// declared as a vertex first. Iteration over vertices, neighbors, and edges
/// is always in ascending id order, so algorithms built on top are
/// deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TotalGraph {
    full: BTreeMap<VertexId, bool>,
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl TotalGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with vertices `0..n`, all full, and no edges.
    pub fn with_full_vertices(n: u32) -> Self {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(v, true);
        }
        g
    }

    /// Convenience constructor: vertices `0..n` (all full) plus the given
    /// edges. Panics on malformed edges; intended for literal graphs in tests
    /// and generators.
    pub fn from_edges(n: u32, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Self::with_full_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v).expect("literal edge list must be valid");
        }
        g
    }

    /// Adds (or re-marks) a vertex.
    pub fn add_vertex(&mut self, v: VertexId, full: bool) {
        self.full.insert(v, full);
        self.adj.entry(v).or_default();
    }

    /// Adds an edge between two existing, distinct vertices.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::Input(format!("self-loop at vertex {u}")));
        }
        if !self.has_vertex(u) || !self.has_vertex(v) {
            return Err(Error::Input(format!(
                "edge ({u}, {v}) references an undeclared vertex"
            )));
        }
        self.adj.get_mut(&u).expect("endpoint exists").insert(v);
        self.adj.get_mut(&v).expect("endpoint exists").insert(u);
        Ok(())
    }

    /// Removes a vertex together with its incident edges. No-op if absent.
    pub fn remove_vertex(&mut self, v: VertexId) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                self.adj.get_mut(&u).expect("neighbor exists").remove(&v);
            }
        }
        self.full.remove(&v);
    }

    /// Removes an edge. No-op if absent.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        if let Some(s) = self.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.full.contains_key(&v)
    }

    /// Whether the vertex is full. Unknown vertices are reported as not full.
    pub fn is_full(&self, v: VertexId) -> bool {
        self.full.get(&v).copied().unwrap_or(false)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn vertex_count(&self) -> usize {
        self.full.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.full.keys().copied()
    }

    /// Neighbors of `v` in ascending id order; empty for unknown vertices.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    /// All edges as ascending `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&u, nbrs) in &self.adj {
            for &v in nbrs.iter().filter(|&&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of incident edges, plus one when the vertex is full.
    pub fn total_degree(&self, v: VertexId) -> Result<u32> {
        if !self.has_vertex(v) {
            return Err(Error::Input(format!("unknown vertex {v}")));
        }
        Ok(self.degree(v) as u32 + u32::from(self.is_full(v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|s| s.len()).max().unwrap_or(0)
    }

    /// True when every vertex is full.
    pub fn all_full(&self) -> bool {
        self.full.values().all(|&f| f)
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![v];
            while let Some(w) = stack.pop() {
                if !comp.insert(w) {
                    continue;
                }
                seen.insert(w);
                stack.extend(self.neighbors(w));
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `keep` (fullness markings preserved).
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> TotalGraph {
        let mut g = TotalGraph::new();
        for &v in keep {
            if self.has_vertex(v) {
                g.add_vertex(v, self.is_full(v));
            }
        }
        for &v in keep {
            for u in self.neighbors(v) {
                if u > v && keep.contains(&u) {
                    g.add_edge(v, u).expect("induced edge endpoints kept");
                }
            }
        }
        g
    }

    /// True when the graph contains no cycle.
    pub fn is_acyclic(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }
}
