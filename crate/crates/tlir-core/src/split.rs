//! Two-color construction for split graphs — graphs whose vertices divide
//! into a clique and an independent set.
//!
//! The construction dispatches on the outside-degree profile of the clique.
//! Small cliques make the graph a tree, an empty independent side makes it
//! complete, and two narrow profiles get bespoke treatment: a single
//! pendant-carrying clique vertex rides on a permuted complete-graph
//! coloring, and the twin-pendant shapes on cliques of six to eight are
//! finished by exhaustive completion around a permuted complete-graph
//! coloring.  Every remaining split graph admits a two-color locally
//! irregular edge coloring, found by exact search and lifted to a total
//! coloring by painting all vertices with the first color.

use std::collections::{BTreeMap, BTreeSet};

use crate::bipartite::bipartite_tlir2;
use crate::bipartite::Bipartition;
use crate::classify::{bipartition_sets, split_partition_sets};
use crate::coloring::{
    total_color_degree, verify_tlir, EdgeColoring, TotalColoring, BLUE, RED,
};
use crate::error::{Error, Result};
use crate::graph::{ekey, TotalGraph, VertexId};
use crate::oracle::{complete_partial_tlir, exact_lir, Element, LirOracle, SearchBudget};
use crate::subcubic::regular_layered_tlir2;

/// A split partition: the clique listed by outside-degree, the independent
/// side, and the outside-degree sequence itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    /// Clique vertices, sorted by nonincreasing outside-degree and then by
    /// id.  The clique is maximal: no independent-side vertex is adjacent
    /// to all of it.
    pub x: Vec<VertexId>,
    /// The independent side.
    pub y: BTreeSet<VertexId>,
    /// `d[i]` counts the neighbors of `x[i]` on the independent side.
    pub d: Vec<usize>,
}

/// Computes the split partition of `G`: a maximal clique whose complement
/// is independent, with the clique sorted by outside-degree.
///
/// # Errors
///
/// [`Error::ClassPrecondition`] when `G` is not a split graph.
pub fn split_partition(g: &TotalGraph) -> Result<SplitPartition> {
    let (x_set, y) = split_partition_sets(g).ok_or_else(|| {
        Error::ClassPrecondition("the graph is not a split graph".into())
    })?;
    let outside = |v: VertexId| g.neighbors(v).filter(|w| y.contains(w)).count();
    let mut x: Vec<VertexId> = x_set.into_iter().collect();
    x.sort_by_key(|&v| (std::cmp::Reverse(outside(v)), v));
    let d: Vec<usize> = x.iter().map(|&v| outside(v)).collect();
    Ok(SplitPartition { x, y, d })
}

/// Lifts a locally irregular edge coloring to a total coloring by giving
/// every vertex the first color.  Color-1 totals shift uniformly by one,
/// so each class stays locally irregular.
///
/// # Errors
///
/// [`Error::Precondition`] when a vertex is empty, an edge is missing from
/// `ec`, `ec` colors a non-edge, or some class is not locally irregular by
/// edge degrees.
pub fn lir_to_tlir(g: &TotalGraph, ec: &EdgeColoring) -> Result<TotalColoring> {
    if !g.all_full() {
        return Err(Error::Precondition(
            "the uniform vertex shift needs every vertex full".into(),
        ));
    }
    let edges = g.edges();
    let edge_set: BTreeSet<(VertexId, VertexId)> = edges.iter().copied().collect();
    for e in ec.keys() {
        if !edge_set.contains(&ekey(e.0, e.1)) {
            return Err(Error::Precondition(format!(
                "({}, {}) is colored but is not an edge",
                e.0, e.1
            )));
        }
    }
    let class_degree = |v: VertexId, k: u32| {
        g.neighbors(v)
            .filter(|&w| ec.get(&ekey(v, w)) == Some(&k))
            .count()
    };
    for &(u, v) in &edges {
        match ec.get(&ekey(u, v)) {
            None => {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) is uncolored"
                )))
            }
            Some(&k) => {
                if class_degree(u, k) == class_degree(v, k) {
                    return Err(Error::Precondition(format!(
                        "class {k} ties across edge ({u}, {v})"
                    )));
                }
            }
        }
    }
    let mut c = TotalColoring::new();
    for v in g.vertices() {
        c.set_vertex(v, RED);
    }
    for (&(u, v), &k) in ec {
        c.set_edge(u, v, k);
    }
    finish(g, c)
}

/// Colors a split graph with red and blue so that every edge's endpoints
/// differ in the edge's own color class.
///
/// Dispatch on the maximal-clique size `n` and the outside-degree profile
/// `d`: `n ≤ 2` gives a tree (parity recipe); an empty independent side
/// gives a complete graph (layered recipe); `d_1 < ⌊n/2⌋` with `d_2 = 0`
/// rides a permuted complete-graph coloring with red pendant edges and
/// blue pendant vertices; the twin-pendant profile (`d_1 = d_2 = 1`,
/// `d_3 = 0`, `n ∈ {6,7,8}`) is completed exhaustively around a permuted
/// complete-graph coloring; every other split graph has a two-color
/// locally irregular edge coloring, found exactly and lifted.
///
/// Isolated vertices are colored 1; the graph may not have two nontrivial
/// components (no split graph does).
///
/// # Errors
///
/// [`Error::ClassPrecondition`] when the graph is not split,
/// [`Error::Precondition`] when a vertex is empty.
pub fn split_tlir2(g: &TotalGraph) -> Result<TotalColoring> {
    if g.vertex_count() == 0 {
        return Err(Error::Input("the graph has no vertices".into()));
    }
    if !g.all_full() {
        return Err(Error::Precondition(
            "every vertex must carry a color slot".into(),
        ));
    }
    if g.is_connected() {
        return split_connected(g);
    }
    // A split graph has at most one component with an edge; color it and
    // give every isolated vertex the first color.
    split_partition(g)?;
    let components = g.components();
    let nontrivial: Vec<&BTreeSet<VertexId>> =
        components.iter().filter(|comp| comp.len() > 1).collect();
    if nontrivial.len() > 1 {
        return Err(Error::ClassPrecondition(
            "two components carry edges; no split graph does that".into(),
        ));
    }
    let mut c = match nontrivial.first() {
        Some(comp) => split_connected(&g.induced(comp))?,
        None => TotalColoring::new(),
    };
    for comp in &components {
        if comp.len() == 1 {
            c.set_vertex(*comp.first().expect("singleton"), RED);
        }
    }
    finish(g, c)
}

fn split_connected(g: &TotalGraph) -> Result<TotalColoring> {
    let part = split_partition(g)?;
    let n = part.x.len();

    // A maximal clique of at most two vertices makes the graph a tree.
    if n <= 2 {
        let (bx, by) = bipartition_sets(g).ok_or_else(|| {
            Error::InternalInvariant("a split graph with a tiny clique must be a tree".into())
        })?;
        return bipartite_tlir2(g, &Bipartition::new(bx, by));
    }
    // No independent side: the graph is complete.
    if part.y.is_empty() {
        return regular_layered_tlir2(g, &BTreeSet::new());
    }

    if part.d[0] < n / 2 && part.d[1] == 0 {
        return one_loaded_vertex(g, &part);
    }
    if part.d[0] == 1 && part.d[1] == 1 && part.d[2] == 0 && (6..=8).contains(&n) {
        return twin_pendants(g, &part);
    }

    // Everything else has a two-color locally irregular edge coloring.
    debug_assert!(!(part.d[0] < n / 2 && part.d[1] == 0));
    let shape = (g.vertex_count(), g.edge_count(), g.max_degree());
    if shape == (2, 1, 1) || shape == (3, 3, 2) || shape == (4, 3, 2) {
        return Err(Error::InternalInvariant(
            "an edge-uncolorable split graph slipped past the dispatch".into(),
        ));
    }
    match exact_lir(g, &SearchBudget::colors(2)) {
        LirOracle::Min(_, ec) => lir_to_tlir(g, &ec),
        _ => Err(Error::InternalInvariant(
            "a split graph outside both narrow profiles has no 2-color edge coloring".into(),
        )),
    }
}

/// Profile `d_1 < ⌊n/2⌋`, `d_2 = 0`: all pendants hang off one clique
/// vertex.  The complete-graph coloring is permuted so its reddest vertex
/// lands on the loaded one; red pendant edges then push it strictly past
/// the whole clique, and blue pendant vertices stay out of red's way.
fn one_loaded_vertex(g: &TotalGraph, part: &SplitPartition) -> Result<TotalColoring> {
    let clique: BTreeSet<VertexId> = part.x.iter().copied().collect();
    let gx = g.induced(&clique);
    let cx = regular_layered_tlir2(&gx, &BTreeSet::new())?;
    let loaded = part.x[0];
    let reddest = clique_by_red_rank(&gx, &cx)[0];
    let mut sigma: BTreeMap<VertexId, VertexId> =
        clique.iter().map(|&v| (v, v)).collect();
    sigma.insert(reddest, loaded);
    sigma.insert(loaded, reddest);
    let before = total_color_degree(&gx, &cx, reddest, RED);
    debug_assert!(clique.iter().all(
        |&w| w == reddest || total_color_degree(&gx, &cx, w, RED) < before + part.d[0] as u32
    ));
    let mut c = permute_clique(&cx, &sigma);
    for &y in &part.y {
        c.set_edge(loaded, y, RED);
        c.set_vertex(y, BLUE);
    }
    finish(g, c)
}

/// Profile `d_1 = d_2 = 1`, `d_3 = 0`, `n ∈ {6,7,8}`: two clique vertices
/// carry one pendant neighbor each (possibly the same one).  Every way of
/// permuting the complete-graph coloring's red ranks onto the two loaded
/// vertices is tried, and the pendant elements are filled in by exhaustive
/// completion; the first valid combination wins.
fn twin_pendants(g: &TotalGraph, part: &SplitPartition) -> Result<TotalColoring> {
    let clique: BTreeSet<VertexId> = part.x.iter().copied().collect();
    let gx = g.induced(&clique);
    let cx = regular_layered_tlir2(&gx, &BTreeSet::new())?;
    let ranked = clique_by_red_rank(&gx, &cx);
    let (x1, x2) = (part.x[0], part.x[1]);
    let pendant = |x: VertexId| {
        g.neighbors(x)
            .find(|w| part.y.contains(w))
            .expect("a loaded vertex has an outside neighbor")
    };
    let (y1, y2) = (pendant(x1), pendant(x2));
    let mut elements = vec![
        Element::Edge(x1, y1),
        Element::Edge(x2, y2),
        Element::Vertex(y1),
    ];
    if y2 != y1 {
        elements.push(Element::Vertex(y2));
    }
    let others: Vec<VertexId> = part.x[2..].to_vec();
    for a in 0..ranked.len() {
        for b in 0..ranked.len() {
            if a == b {
                continue;
            }
            let mut sigma: BTreeMap<VertexId, VertexId> = BTreeMap::new();
            sigma.insert(ranked[a], x1);
            sigma.insert(ranked[b], x2);
            let rest: Vec<VertexId> = ranked
                .iter()
                .copied()
                .filter(|v| !sigma.contains_key(v))
                .collect();
            for (from, &to) in rest.into_iter().zip(others.iter()) {
                sigma.insert(from, to);
            }
            let seeded = permute_clique(&cx, &sigma);
            if let Some(c) = complete_partial_tlir(g, &seeded, &elements, &[RED, BLUE]) {
                return finish(g, c);
            }
        }
    }
    Err(Error::InternalInvariant(
        "no permuted clique coloring extends over the twin pendants".into(),
    ))
}

/// Clique vertices sorted by total red degree, reddest first, ties by id.
fn clique_by_red_rank(gx: &TotalGraph, cx: &TotalColoring) -> Vec<VertexId> {
    let mut ranked: Vec<VertexId> = gx.vertices().collect();
    ranked.sort_by_key(|&v| (std::cmp::Reverse(total_color_degree(gx, cx, v, RED)), v));
    ranked
}

/// Carries a clique coloring across a vertex bijection.  Complete graphs
/// are vertex-transitive, so validity survives any permutation.
fn permute_clique(
    cx: &TotalColoring,
    sigma: &BTreeMap<VertexId, VertexId>,
) -> TotalColoring {
    let mut out = TotalColoring::new();
    for (v, k) in cx.vertex_colors() {
        out.set_vertex(sigma[&v], k);
    }
    for ((u, v), k) in cx.edge_colors() {
        out.set_edge(sigma[&u], sigma[&v], k);
    }
    out
}

fn finish(g: &TotalGraph, c: TotalColoring) -> Result<TotalColoring> {
    let issues = verify_tlir(g, &c, true);
    if let Some(issue) = issues.first() {
        return Err(Error::InternalInvariant(format!(
            "assembled split coloring is invalid: {issue:?}"
        )));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_valid_tlir;
    use crate::oracle::exact_lir;

    fn complete(n: u32) -> TotalGraph {
        let edges: Vec<(u32, u32)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        TotalGraph::from_edges(n, &edges)
    }

    /// K_n with pendant vertices attached: `loads[i]` pendants on clique
    /// vertex i.
    fn clique_with_pendants(n: u32, loads: &[u32]) -> TotalGraph {
        let mut g = complete(n);
        let mut next = n;
        for (i, &count) in loads.iter().enumerate() {
            for _ in 0..count {
                g.add_vertex(next, true);
                g.add_edge(i as u32, next).unwrap();
                next += 1;
            }
        }
        g
    }

    fn assert_two_color_valid(g: &TotalGraph, label: &str) {
        let c = split_tlir2(g).unwrap_or_else(|e| panic!("{label}: {e}"));
        assert!(is_valid_tlir(g, &c, true), "{label}");
        assert!(
            c.colors_used().is_subset(&BTreeSet::from([RED, BLUE])),
            "{label}"
        );
    }

    #[test]
    fn partition_of_a_complete_graph_has_no_outside() {
        let part = split_partition(&complete(3)).unwrap();
        assert_eq!(part.x, vec![0, 1, 2]);
        assert!(part.y.is_empty());
        assert_eq!(part.d, vec![0, 0, 0]);
    }

    #[test]
    fn partition_of_a_star_takes_a_two_clique() {
        let star = TotalGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let part = split_partition(&star).unwrap();
        assert_eq!(part.x.len(), 2);
        assert!(part.x.contains(&0), "the center is in every maximal clique");
        assert_eq!(part.y.len(), 2);
    }

    #[test]
    fn five_cycle_is_not_split() {
        let c5 = TotalGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(matches!(
            split_partition(&c5),
            Err(Error::ClassPrecondition(_))
        ));
    }

    #[test]
    fn partition_orders_the_clique_by_outside_degree() {
        // Pendants: two on clique vertex 3, one on clique vertex 1.
        let g = clique_with_pendants(4, &[0, 1, 0, 2]);
        let part = split_partition(&g).unwrap();
        assert_eq!(part.x, vec![3, 1, 0, 2]);
        assert_eq!(part.d, vec![2, 1, 0, 0]);
    }

    #[test]
    fn lift_keeps_edge_colors_and_paints_vertices_first_color() {
        let star = TotalGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let ec: EdgeColoring = star.edges().into_iter().map(|e| (e, 1)).collect();
        let c = lir_to_tlir(&star, &ec).unwrap();
        assert!(is_valid_tlir(&star, &c, true));
        assert_eq!(c.colors_used(), BTreeSet::from([1]));
    }

    #[test]
    fn lift_of_an_edgeless_graph_is_all_first_color() {
        let mut g = TotalGraph::new();
        for v in 0..3 {
            g.add_vertex(v, true);
        }
        let c = lir_to_tlir(&g, &EdgeColoring::new()).unwrap();
        assert!(is_valid_tlir(&g, &c, true));
        assert_eq!(c.colors_used(), BTreeSet::from([1]));
    }

    #[test]
    fn lift_preserves_the_color_count_of_an_exact_witness() {
        let g = crate::blocks::bow_tie();
        let LirOracle::Min(k, ec) = exact_lir(&g, &SearchBudget::colors(6)) else {
            panic!("the bow tie has an exact edge coloring");
        };
        assert_eq!(k, 4);
        let c = lir_to_tlir(&g, &ec).unwrap();
        assert!(is_valid_tlir(&g, &c, true));
        assert_eq!(c.colors_used().len(), 4);
    }

    #[test]
    fn lift_rejects_a_tying_class() {
        // Monochrome P4: both middle vertices see two class-1 edges.
        let p4 = TotalGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let ec: EdgeColoring = p4.edges().into_iter().map(|e| (e, 1)).collect();
        assert!(matches!(lir_to_tlir(&p4, &ec), Err(Error::Precondition(_))));
    }

    #[test]
    fn pendant_on_a_clique_gets_red_edge_blue_vertex() {
        let g = clique_with_pendants(4, &[1]);
        let c = split_tlir2(&g).unwrap();
        assert!(is_valid_tlir(&g, &c, true));
        assert_eq!(c.edge_color(0, 4), Some(RED));
        assert_eq!(c.vertex_color(4), Some(BLUE));
    }

    #[test]
    fn small_named_shapes_color_validly() {
        assert_two_color_valid(&complete(2), "K2");
        assert_two_color_valid(&complete(3), "K3");
        let p4 = TotalGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_two_color_valid(&p4, "P4");
        for n in 4..=7 {
            assert_two_color_valid(&complete(n), &format!("K{n}"));
        }
    }

    #[test]
    fn twin_pendant_profiles_color_validly_at_every_size() {
        for n in 6..=8u32 {
            let distinct = clique_with_pendants(n, &[1, 1]);
            assert_two_color_valid(&distinct, &format!("K{n} with separate pendants"));
            let mut shared = complete(n);
            shared.add_vertex(n, true);
            shared.add_edge(0, n).unwrap();
            shared.add_edge(1, n).unwrap();
            assert_two_color_valid(&shared, &format!("K{n} with a shared pendant"));
        }
    }

    #[test]
    fn profiles_outside_both_special_cases_use_the_exact_lift() {
        // d = (2, 0, 0, 0): d_1 reaches ⌊n/2⌋, so the one-vertex route is out.
        assert_two_color_valid(&clique_with_pendants(4, &[2]), "double pendant");
        // d = (1, 1, 0, 0): twin pendants but the clique is too small.
        assert_two_color_valid(&clique_with_pendants(4, &[1, 1]), "small twins");
        // d = (1, 1, 1, 0, 0): three loaded vertices.
        assert_two_color_valid(&clique_with_pendants(5, &[1, 1, 1]), "triple");
    }

    #[test]
    fn isolated_vertices_ride_along() {
        let mut g = clique_with_pendants(4, &[1]);
        g.add_vertex(40, true);
        let c = split_tlir2(&g).unwrap();
        assert!(is_valid_tlir(&g, &c, true));
        assert_eq!(c.vertex_color(40), Some(RED));
    }

    #[test]
    fn two_edged_components_are_rejected() {
        let mut g = complete(3);
        for v in [10, 11, 12] {
            g.add_vertex(v, true);
        }
        for (u, v) in [(10, 11), (11, 12), (10, 12)] {
            g.add_edge(u, v).unwrap();
        }
        assert!(split_tlir2(&g).is_err());
    }

    #[test]
    fn permuting_a_complete_graph_coloring_keeps_it_valid() {
        let g = complete(6);
        let cx = regular_layered_tlir2(&g, &BTreeSet::new()).unwrap();
        let perms: [Vec<u32>; 3] = [
            vec![1, 2, 3, 4, 5, 0],
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 0, 4, 1, 5, 3],
        ];
        for p in perms {
            let sigma: BTreeMap<VertexId, VertexId> =
                (0u32..6).zip(p.iter().copied()).collect();
            let c = permute_clique(&cx, &sigma);
            assert!(is_valid_tlir(&g, &c, true), "permutation {sigma:?}");
        }
    }

    /// Every connected split graph on up to six vertices gets a valid
    /// red-blue coloring.
    #[test]
    fn exhaustive_sweep_over_small_split_graphs() {
        let mut solved = 0usize;
        for n in 1..=6u32 {
            let pairs: Vec<(u32, u32)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(u32, u32)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = TotalGraph::from_edges(n, &edges);
                if !g.is_connected() || split_partition_sets(&g).is_none() {
                    continue;
                }
                let c = split_tlir2(&g).unwrap_or_else(|e| {
                    panic!("n={n} edges={edges:?}: {e}");
                });
                assert!(is_valid_tlir(&g, &c, true), "n={n} edges={edges:?}");
                assert!(c.colors_used().is_subset(&BTreeSet::from([RED, BLUE])));
                solved += 1;
            }
        }
        assert!(solved > 1000, "swept only {solved} graphs");
    }
}
