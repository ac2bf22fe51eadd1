//! From acyclic vertex colorings to star-forest edge colorings to valid
//! total colorings.
//!
//! A proper vertex coloring is *acyclic* when every two color classes
//! induce a forest.  Orienting each such forest away from a root and
//! coloring every edge by its root-closer endpoint yields a star-forest
//! edge coloring whose nontrivial stars are centered on a vertex of their
//! own color — and the combination of the two colorings is locally
//! irregular outright.  This drops the color budget for graph classes
//! with small acyclic chromatic number: 3 for outerplanar graphs (via a
//! degeneracy peel and a greedy pass), 5 for planar ones (via search).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::coloring::{
    verify_acyclic, verify_proper, verify_star, verify_tlir, EdgeColoring, TotalColoring,
    VertexColoring,
};
use crate::error::{Error, Result};
use crate::graph::{ekey, TotalGraph, VertexId};
use crate::oracle::{exact_acyclic, AcyclicOracle, SearchBudget};

/// A vertex ordering in which every vertex has few earlier neighbors and
/// those neighbors are pairwise adjacent.
///
/// Coloring greedily along such an ordering can never give two earlier
/// neighbors the same color, which is what makes the result acyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOrder {
    /// The vertices, earliest first.
    pub order: Vec<VertexId>,
    /// For each position, the neighbors that appear earlier in `order`.
    pub back: Vec<Vec<VertexId>>,
}

impl CliqueOrder {
    /// Builds the back-neighbor lists for `order` and checks the clique
    /// condition with width `k`.
    pub fn new(g: &TotalGraph, order: Vec<VertexId>, k: usize) -> Result<Self> {
        let back = back_lists(g, &order)?;
        let co = CliqueOrder { order, back };
        co.validate(g, k)?;
        Ok(co)
    }

    /// Checks that the ordering covers the graph, that the stored back
    /// lists are accurate, that none is longer than `k`, and that each
    /// forms a clique.
    pub fn validate(&self, g: &TotalGraph, k: usize) -> Result<()> {
        let derived = back_lists(g, &self.order)?;
        if derived != self.back {
            return Err(Error::Precondition(
                "back-neighbor lists do not match the ordering".into(),
            ));
        }
        for (i, list) in self.back.iter().enumerate() {
            if list.len() > k {
                return Err(Error::Precondition(format!(
                    "vertex {} has {} earlier neighbors, more than {k}",
                    self.order[i],
                    list.len()
                )));
            }
            for (a, &u) in list.iter().enumerate() {
                for &v in &list[a + 1..] {
                    if !g.has_edge(u, v) {
                        return Err(Error::Precondition(format!(
                            "earlier neighbors {u} and {v} of vertex {} are not adjacent",
                            self.order[i]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Earlier-neighbor lists for an ordering, after checking it is a
/// permutation of the vertex set.
fn back_lists(g: &TotalGraph, order: &[VertexId]) -> Result<Vec<Vec<VertexId>>> {
    if order.len() != g.vertex_count() {
        return Err(Error::Precondition(format!(
            "ordering has {} entries for {} vertices",
            order.len(),
            g.vertex_count()
        )));
    }
    let mut pos: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, &v) in order.iter().enumerate() {
        if !g.has_vertex(v) {
            return Err(Error::Precondition(format!("unknown vertex {v} in ordering")));
        }
        if pos.insert(v, i).is_some() {
            return Err(Error::Precondition(format!("vertex {v} appears twice in ordering")));
        }
    }
    Ok(order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut earlier: Vec<VertexId> = g.neighbors(v).filter(|w| pos[w] < i).collect();
            earlier.sort_unstable();
            earlier
        })
        .collect())
}

/// Orders the vertices of a maximal outerplanar graph (or K1/K2) by
/// repeatedly peeling a degree-2 vertex whose neighbors are adjacent.
///
/// The reversed peel is a width-2 [`CliqueOrder`].  Peeling getting stuck
/// is the recognizer: it happens exactly when the graph is not maximal
/// outerplanar.
///
/// # Errors
///
/// [`Error::ClassPrecondition`] when no peelable vertex remains while more
/// than two vertices are left, or the last two vertices are not adjacent.
pub fn maximal_outerplanar_order(g: &TotalGraph) -> Result<CliqueOrder> {
    if g.vertex_count() == 0 {
        return Err(Error::Input("the graph has no vertices".into()));
    }
    let mut work = g.clone();
    let mut peeled: Vec<VertexId> = Vec::new();
    while work.vertex_count() > 2 {
        let ear = work.vertices().find(|&v| {
            let nbrs: Vec<VertexId> = work.neighbors(v).collect();
            nbrs.len() == 2 && work.has_edge(nbrs[0], nbrs[1])
        });
        match ear {
            Some(v) => {
                work.remove_vertex(v);
                peeled.push(v);
            }
            None => {
                return Err(Error::ClassPrecondition(format!(
                    "peeling stuck with {} vertices left: no degree-2 vertex has adjacent neighbors",
                    work.vertex_count()
                )));
            }
        }
    }
    let base: Vec<VertexId> = work.vertices().collect();
    if base.len() == 2 && !work.has_edge(base[0], base[1]) {
        return Err(Error::ClassPrecondition(
            "peeling left two nonadjacent vertices instead of an edge".into(),
        ));
    }
    let order: Vec<VertexId> = base.into_iter().chain(peeled.into_iter().rev()).collect();
    CliqueOrder::new(g, order, 2)
}

/// Colors the vertices greedily along a width-`k` clique ordering with the
/// smallest color from `{1, …, k+1}` not used by an earlier neighbor.
///
/// Because earlier neighbors form a clique, no two of them ever share a
/// color, so a freshly colored vertex cannot close a two-colored cycle:
/// the result is proper and acyclic.
///
/// # Errors
///
/// [`Error::Precondition`] when the ordering is not valid for width `k`.
pub fn greedy_clique_acyclic(
    g: &TotalGraph,
    order: &CliqueOrder,
    k: usize,
) -> Result<VertexColoring> {
    order.validate(g, k)?;
    let mut vc = VertexColoring::new();
    for (i, &v) in order.order.iter().enumerate() {
        let taken: BTreeSet<u32> = order.back[i].iter().map(|w| vc[w]).collect();
        if taken.len() != order.back[i].len() {
            return Err(Error::InternalInvariant(format!(
                "two earlier neighbors of vertex {v} share a color despite being adjacent"
            )));
        }
        let c = (1..=k as u32 + 1)
            .find(|c| !taken.contains(c))
            .expect("at most k earlier neighbors block at most k colors");
        vc.insert(v, c);
    }
    if let Some((u, v)) = verify_proper(g, &vc) {
        return Err(Error::InternalInvariant(format!(
            "greedy pass left edge ({u}, {v}) monochromatic"
        )));
    }
    if let Some(cycle) = verify_acyclic(g, &vc)? {
        return Err(Error::InternalInvariant(format!(
            "greedy pass left a two-colored cycle {cycle:?}"
        )));
    }
    Ok(vc)
}

/// Star-forest edge coloring from an acyclic vertex coloring, rooting
/// every two-class forest component at its smallest vertex.
pub fn star_from_acyclic(g: &TotalGraph, vc: &VertexColoring) -> Result<EdgeColoring> {
    star_from_acyclic_with(g, vc, |comp| comp[0])
}

/// As [`star_from_acyclic`], with the root of each two-class forest
/// component chosen by `pick` (called with the component's sorted
/// vertices).  Any choice yields a valid star coloring.
///
/// Every edge lies in exactly one two-class forest; a breadth-first pass
/// from the root colors it with the root-closer endpoint's vertex color.
/// Two same-colored edges at a vertex of the other color would contradict
/// the orientation, so each class is a forest of stars, and a nontrivial
/// star's center carries the class color on its vertex.
///
/// # Errors
///
/// [`Error::Precondition`] when `vc` is partial, improper, or has a
/// two-colored cycle; [`Error::Input`] when `pick` steps outside its
/// component.
pub fn star_from_acyclic_with(
    g: &TotalGraph,
    vc: &VertexColoring,
    mut pick: impl FnMut(&[VertexId]) -> VertexId,
) -> Result<EdgeColoring> {
    if let Some(cycle) = verify_acyclic(g, vc)? {
        return Err(Error::Precondition(format!(
            "vertex coloring has the two-colored cycle {cycle:?}"
        )));
    }
    let palette: Vec<u32> = vc.values().copied().collect::<BTreeSet<u32>>().into_iter().collect();
    let mut ec = EdgeColoring::new();
    for (ai, &a) in palette.iter().enumerate() {
        for &b in &palette[ai + 1..] {
            let members: BTreeSet<VertexId> = g
                .vertices()
                .filter(|v| vc[v] == a || vc[v] == b)
                .collect();
            let sub = g.induced(&members);
            for comp in sub.components() {
                if comp.len() < 2 {
                    continue;
                }
                let comp_sorted: Vec<VertexId> = comp.iter().copied().collect();
                let root = pick(&comp_sorted);
                if !comp.contains(&root) {
                    return Err(Error::Input(format!(
                        "root {root} lies outside its forest component"
                    )));
                }
                let dist = bfs_distances(&sub, root);
                for &v in &comp_sorted {
                    for w in sub.neighbors(v) {
                        if v < w {
                            let closer = if dist[&v] < dist[&w] { v } else { w };
                            ec.insert(ekey(v, w), vc[&closer]);
                        }
                    }
                }
            }
        }
    }
    if ec.len() != g.edge_count() {
        return Err(Error::InternalInvariant(format!(
            "{} of {} edges colored",
            ec.len(),
            g.edge_count()
        )));
    }
    let issues = verify_star(g, &ec, Some(vc));
    if let Some(issue) = issues.first() {
        return Err(Error::InternalInvariant(format!(
            "edge classes are not centered star forests: {issue:?}"
        )));
    }
    Ok(ec)
}

fn bfs_distances(g: &TotalGraph, root: VertexId) -> BTreeMap<VertexId, usize> {
    let mut dist = BTreeMap::from([(root, 0usize)]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for w in g.neighbors(v) {
            if !dist.contains_key(&w) {
                dist.insert(w, d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Combines an acyclic vertex coloring with its star-forest edge coloring
/// into a valid total coloring using no new colors.
pub fn acyclic_to_tlir(g: &TotalGraph, vc: &VertexColoring) -> Result<TotalColoring> {
    acyclic_to_tlir_with(g, vc, |comp| comp[0])
}

/// As [`acyclic_to_tlir`], with forest roots chosen by `pick`.
pub fn acyclic_to_tlir_with(
    g: &TotalGraph,
    vc: &VertexColoring,
    pick: impl FnMut(&[VertexId]) -> VertexId,
) -> Result<TotalColoring> {
    if !g.all_full() {
        return Err(Error::Precondition(
            "every vertex must carry a color slot".into(),
        ));
    }
    let ec = star_from_acyclic_with(g, vc, pick)?;
    let mut c = TotalColoring::new();
    for (&v, &col) in vc {
        c.set_vertex(v, col);
    }
    for (&(u, v), &col) in &ec {
        c.set_edge(u, v, col);
    }
    let vertex_max = vc.values().copied().max().unwrap_or(0);
    if c.colors_used().iter().any(|&col| col > vertex_max) {
        return Err(Error::InternalInvariant(
            "edge colors stepped outside the vertex palette".into(),
        ));
    }
    let issues = verify_tlir(g, &c, true);
    if let Some(issue) = issues.first() {
        return Err(Error::InternalInvariant(format!(
            "combined coloring is invalid: {issue:?}"
        )));
    }
    Ok(c)
}

/// Colors an outerplanar graph with at most three colors.
///
/// Maximal outerplanar graphs take the constructive route: peel to a
/// width-2 clique ordering, color greedily with three colors, convert.
/// Everything else falls back to an exact acyclic 3-coloring search
/// (such a coloring always exists for outerplanar graphs, since they
/// embed in maximal ones).
///
/// # Errors
///
/// [`Error::ClassPrecondition`] when no acyclic 3-coloring exists — the
/// graph is not outerplanar.
pub fn outerplanar_tlir3(g: &TotalGraph) -> Result<TotalColoring> {
    if g.vertex_count() == 0 {
        return Err(Error::Input("the graph has no vertices".into()));
    }
    if !g.all_full() {
        return Err(Error::Precondition(
            "every vertex must carry a color slot".into(),
        ));
    }
    if let Ok(order) = maximal_outerplanar_order(g) {
        let vc = greedy_clique_acyclic(g, &order, 2)?;
        return acyclic_to_tlir(g, &vc);
    }
    match exact_acyclic(g, &SearchBudget::colors(3)) {
        AcyclicOracle::Min(_, vc) => acyclic_to_tlir(g, &vc),
        AcyclicOracle::Unknown => Err(Error::ClassPrecondition(
            "no acyclic 3-coloring exists: the graph is not outerplanar".into(),
        )),
    }
}

/// Colors a graph with at most `k ∈ {5, 7}` colors via exact acyclic
/// search: 5 serves planar graphs, 7 serves maximum degree 5.
///
/// Planarity itself is not tested; the 5-color entry point screens by the
/// edge-count bound 3n−6 and the 7-color one by maximum degree, and a
/// failed search reports the hypothesis as violated.  Intended for small
/// instances (the search is exponential).
///
/// # Errors
///
/// [`Error::Input`] for other values of `k`; [`Error::ClassPrecondition`]
/// when a screen fails or the search proves no `k`-coloring exists.
pub fn planar_tlir_k(g: &TotalGraph, k: u32) -> Result<TotalColoring> {
    if k != 5 && k != 7 {
        return Err(Error::Input(format!("unsupported color budget {k}: expected 5 or 7")));
    }
    if g.vertex_count() == 0 {
        return Err(Error::Input("the graph has no vertices".into()));
    }
    if !g.all_full() {
        return Err(Error::Precondition(
            "every vertex must carry a color slot".into(),
        ));
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    if k == 5 && n >= 3 && m > 3 * n - 6 {
        return Err(Error::ClassPrecondition(format!(
            "{m} edges exceed the planar bound of {}",
            3 * n - 6
        )));
    }
    if k == 7 && g.max_degree() > 5 {
        return Err(Error::ClassPrecondition(format!(
            "maximum degree {} exceeds 5",
            g.max_degree()
        )));
    }
    match exact_acyclic(g, &SearchBudget::colors(k)) {
        AcyclicOracle::Min(_, vc) => acyclic_to_tlir(g, &vc),
        AcyclicOracle::Unknown => Err(Error::ClassPrecondition(format!(
            "no acyclic {k}-coloring exists: the class hypothesis does not hold"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_valid_tlir;

    fn path_graph(n: u32) -> TotalGraph {
        let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        TotalGraph::from_edges(n, &edges)
    }

    fn cycle(n: u32) -> TotalGraph {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        TotalGraph::from_edges(n, &edges)
    }

    fn complete(n: u32) -> TotalGraph {
        let edges: Vec<(u32, u32)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        TotalGraph::from_edges(n, &edges)
    }

    /// Path 0..=n−2 plus an apex adjacent to every path vertex.
    fn fan(n: u32) -> TotalGraph {
        let apex = n - 1;
        let edges: Vec<(u32, u32)> = (0..n - 2)
            .map(|i| (i, i + 1))
            .chain((0..n - 1).map(|i| (i, apex)))
            .collect();
        TotalGraph::from_edges(n, &edges)
    }

    #[test]
    fn triangle_peels_in_any_leftover_order() {
        let order = maximal_outerplanar_order(&complete(3)).unwrap();
        assert_eq!(order.order.len(), 3);
        order.validate(&complete(3), 2).unwrap();
    }

    #[test]
    fn fan_peels_from_the_ears() {
        let g = fan(5);
        let order = maximal_outerplanar_order(&g).unwrap();
        order.validate(&g, 2).unwrap();
    }

    #[test]
    fn chordless_square_gets_stuck() {
        assert!(matches!(
            maximal_outerplanar_order(&cycle(4)),
            Err(Error::ClassPrecondition(_))
        ));
    }

    #[test]
    fn greedy_on_a_triangle_uses_all_three_colors() {
        let g = complete(3);
        let order = CliqueOrder::new(&g, vec![0, 1, 2], 2).unwrap();
        let vc = greedy_clique_acyclic(&g, &order, 2).unwrap();
        let used: BTreeSet<u32> = vc.values().copied().collect();
        assert_eq!(used, BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn greedy_on_a_fan_stays_within_three_colors_and_acyclic() {
        let g = fan(5);
        let order = maximal_outerplanar_order(&g).unwrap();
        let vc = greedy_clique_acyclic(&g, &order, 2).unwrap();
        assert!(vc.values().all(|&c| c <= 3));
        assert_eq!(verify_acyclic(&g, &vc).unwrap(), None);
    }

    #[test]
    fn greedy_on_an_edgeless_graph_uses_one_color() {
        let mut g = TotalGraph::new();
        for v in 0..4 {
            g.add_vertex(v, true);
        }
        let order = CliqueOrder::new(&g, vec![0, 1, 2, 3], 2).unwrap();
        let vc = greedy_clique_acyclic(&g, &order, 2).unwrap();
        assert!(vc.values().all(|&c| c == 1));
    }

    #[test]
    fn path_rooted_at_the_middle_makes_one_star() {
        let g = path_graph(3);
        let vc = VertexColoring::from([(0, 1), (1, 2), (2, 1)]);
        let ec = star_from_acyclic_with(&g, &vc, |_| 1).unwrap();
        assert_eq!(ec, EdgeColoring::from([((0, 1), 2), ((1, 2), 2)]));
    }

    #[test]
    fn path_rooted_at_an_endpoint_makes_two_trivial_stars() {
        let g = path_graph(3);
        let vc = VertexColoring::from([(0, 1), (1, 2), (2, 1)]);
        let ec = star_from_acyclic(&g, &vc).unwrap();
        assert_eq!(ec, EdgeColoring::from([((0, 1), 1), ((1, 2), 2)]));
    }

    #[test]
    fn rainbow_triangle_colors_each_edge_from_its_smaller_endpoint() {
        let g = complete(3);
        let vc = VertexColoring::from([(0, 1), (1, 2), (2, 3)]);
        let ec = star_from_acyclic(&g, &vc).unwrap();
        assert_eq!(
            ec,
            EdgeColoring::from([((0, 1), 1), ((0, 2), 1), ((1, 2), 2)])
        );
        assert!(verify_star(&g, &ec, Some(&vc)).is_empty());
    }

    #[test]
    fn two_colored_cycles_are_rejected() {
        let g = cycle(4);
        let vc = VertexColoring::from([(0, 1), (1, 2), (2, 1), (3, 2)]);
        assert!(matches!(
            star_from_acyclic(&g, &vc),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn conversion_keeps_the_vertex_palette() {
        let g = path_graph(3);
        let vc = VertexColoring::from([(0, 1), (1, 2), (2, 1)]);
        let c = acyclic_to_tlir(&g, &vc).unwrap();
        assert!(is_valid_tlir(&g, &c, true));
        assert!(c.colors_used().iter().all(|&col| col <= 2));

        let rainbow = VertexColoring::from([(0, 1), (1, 2), (2, 3)]);
        let c = acyclic_to_tlir(&complete(3), &rainbow).unwrap();
        assert!(is_valid_tlir(&complete(3), &c, true));
    }

    #[test]
    fn any_root_choice_converts_validly() {
        let g = fan(6);
        let order = maximal_outerplanar_order(&g).unwrap();
        let vc = greedy_clique_acyclic(&g, &order, 2).unwrap();
        for turn in 0..4usize {
            let mut calls = 0usize;
            let c = acyclic_to_tlir_with(&g, &vc, |comp| {
                calls += 1;
                comp[(turn + calls) % comp.len()]
            })
            .unwrap();
            assert!(is_valid_tlir(&g, &c, true));
        }
    }

    #[test]
    fn outerplanar_graphs_fit_three_colors() {
        for (label, g) in [
            ("K3", complete(3)),
            ("fan6", fan(6)),
            ("C5", cycle(5)),
            ("C6", cycle(6)),
            ("P7", path_graph(7)),
        ] {
            let c = outerplanar_tlir3(&g).unwrap_or_else(|e| panic!("{label}: {e}"));
            assert!(is_valid_tlir(&g, &c, true), "{label}");
            assert!(
                c.colors_used().iter().all(|&col| col <= 3),
                "{label}: {:?}",
                c.colors_used()
            );
        }
    }

    #[test]
    fn non_outerplanar_input_is_diagnosed() {
        assert!(matches!(
            outerplanar_tlir3(&complete(4)),
            Err(Error::ClassPrecondition(_))
        ));
    }

    #[test]
    fn small_planar_graphs_fit_five_colors() {
        let c = planar_tlir_k(&complete(4), 5).unwrap();
        assert!(is_valid_tlir(&complete(4), &c, true));
        assert!(c.colors_used().iter().all(|&col| col <= 5));

        // Octahedron: 4-regular, planar.
        let pairs: Vec<(u32, u32)> = (0..6u32)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| v != u + 3)
            .collect();
        let octa = TotalGraph::from_edges(6, &pairs);
        let c = planar_tlir_k(&octa, 5).unwrap();
        assert!(is_valid_tlir(&octa, &c, true));
        assert!(c.colors_used().iter().all(|&col| col <= 5));
    }

    #[test]
    fn dense_input_fails_the_edge_screen() {
        assert!(matches!(
            planar_tlir_k(&complete(5), 5),
            Err(Error::ClassPrecondition(_))
        ));
    }

    #[test]
    fn high_degree_input_fails_the_degree_screen() {
        assert!(matches!(
            planar_tlir_k(&complete(7), 7),
            Err(Error::ClassPrecondition(_))
        ));
    }

    #[test]
    fn only_the_two_published_budgets_are_accepted() {
        assert!(matches!(planar_tlir_k(&complete(4), 6), Err(Error::Input(_))));
    }
}
