//! Graph-class recognizers with checkable certificates: bipartitions, split
//! partitions (degree-sequence method), cacti, regularity, and the summary
//! report driving automatic algorithm dispatch.

use std::collections::BTreeSet;

use crate::blocks::block_cut_tree;
use crate::graph::{TotalGraph, VertexId};

/// Everything the dispatcher wants to know about a graph, with certificates
/// for the positive flags.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub is_tree: bool,
    pub is_bipartite: bool,
    /// Two independent sides covering all vertices, when bipartite.
    pub bipartition: Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)>,
    pub is_cactus: bool,
    pub is_subcubic: bool,
    /// Common degree, when every vertex has the same one.
    pub regular_degree: Option<usize>,
    /// (clique, independent set) covering all vertices, when split.
    pub split_partition: Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)>,
    pub max_degree: usize,
}

/// Two-colors each component by BFS; the smallest vertex of every component
/// lands in the first side. `None` when an odd cycle exists.
pub fn bipartition_sets(
    g: &TotalGraph,
) -> Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
    let mut side: std::collections::BTreeMap<VertexId, bool> = Default::default();
    for root in g.vertices().collect::<Vec<_>>() {
        if side.contains_key(&root) {
            continue;
        }
        side.insert(root, false);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let sv = side[&v];
            for w in g.neighbors(v) {
                match side.get(&w) {
                    Some(&sw) if sw == sv => return None,
                    Some(_) => {}
                    None => {
                        side.insert(w, !sv);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let mut x = BTreeSet::new();
    let mut y = BTreeSet::new();
    for (v, s) in side {
        if s {
            y.insert(v);
        } else {
            x.insert(v);
        }
    }
    Some((x, y))
}

fn is_clique(g: &TotalGraph, vs: &BTreeSet<VertexId>) -> bool {
    vs.iter()
        .all(|&u| vs.iter().all(|&v| v <= u || g.has_edge(u, v)))
}

fn is_independent(g: &TotalGraph, vs: &BTreeSet<VertexId>) -> bool {
    vs.iter()
        .all(|&u| vs.iter().all(|&v| v <= u || !g.has_edge(u, v)))
}

/// Split recognition by the degree-sequence criterion: with degrees sorted
/// nonincreasing and m the largest index i with d_i ≥ i−1, the graph is split
/// exactly when the first m degrees sum to m(m−1) plus the remaining degrees.
/// The m largest-degree vertices then form a clique (ties by smaller id); the
/// clique side is grown maximal before returning.
pub fn split_partition_sets(
    g: &TotalGraph,
) -> Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let mut by_degree: Vec<VertexId> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d = |i: usize| g.degree(by_degree[i]);
    let m = (0..n).take_while(|&i| d(i) >= i).count();
    debug_assert!(m >= 1);
    let head: usize = (0..m).map(d).sum();
    let tail: usize = (m..n).map(d).sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let mut x: BTreeSet<VertexId> = by_degree[..m].iter().copied().collect();
    let mut y: BTreeSet<VertexId> = by_degree[m..].iter().copied().collect();
    if !is_clique(g, &x) || !is_independent(g, &y) {
        return None;
    }
    // Grow the clique maximal: an independent-side vertex adjacent to the
    // whole clique moves over (at most one can exist at a time).
    loop {
        let movable = y
            .iter()
            .copied()
            .find(|&v| x.iter().all(|&u| g.has_edge(u, v)));
        match movable {
            Some(v) => {
                y.remove(&v);
                x.insert(v);
            }
            None => break,
        }
    }
    Some((x, y))
}

/// Full classification with re-verified certificates.
pub fn classify(g: &TotalGraph) -> ClassReport {
    let bct = block_cut_tree(g);
    let bipartition = bipartition_sets(g);
    let split = split_partition_sets(g);
    let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let regular_degree = match (degrees.first(), degrees.iter().all(|&d| Some(&d) == degrees.first())) {
        (Some(&d), true) => Some(d),
        _ => None,
    };
    ClassReport {
        is_tree: g.is_connected() && g.is_acyclic() && g.vertex_count() > 0,
        is_bipartite: bipartition.is_some(),
        bipartition,
        is_cactus: bct.is_cactus(),
        is_subcubic: max_degree <= 3,
        regular_degree,
        split_partition: split,
        max_degree,
    }
}
