//! Red-blue building blocks on bipartite graphs.
//!
//! Three constructions recur throughout the crate: the all-edges-one-color
//! coloring whose vertex colors are chosen by degree parity
//! ([`bipartite_tlir2`]), a partial variant that leaves one side of the
//! bipartition uncolored ([`partial_bipartite_tlir`]), and the attachment of
//! a pendant tree to an already colored graph ([`attach_pendant_tree`]).

use std::collections::{BTreeMap, BTreeSet};

use crate::coloring::{other, total_color_degree, verify_tlir, TotalColoring, BLUE, RED};
use crate::error::{Error, Result};
use crate::graph::{ekey, TotalGraph, VertexId};

/// A two-sided vertex partition with no edge inside either side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x: BTreeSet<VertexId>,
    pub y: BTreeSet<VertexId>,
}

impl Bipartition {
    pub fn new(x: BTreeSet<VertexId>, y: BTreeSet<VertexId>) -> Self {
        Bipartition { x, y }
    }

    /// Checks that the two sides are disjoint, cover the graph, and that no
    /// edge runs inside either side.
    pub fn validate(&self, g: &TotalGraph) -> Result<()> {
        if self.x.intersection(&self.y).next().is_some() {
            return Err(Error::Precondition("bipartition sides overlap".into()));
        }
        let covered = g
            .vertices()
            .all(|v| self.x.contains(&v) || self.y.contains(&v));
        let no_extras = self.x.union(&self.y).all(|&v| g.has_vertex(v));
        if !covered || !no_extras {
            return Err(Error::Precondition(
                "bipartition does not match the vertex set".into(),
            ));
        }
        for (u, v) in g.edges() {
            if self.x.contains(&u) == self.x.contains(&v) {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) lies inside one side of the bipartition"
                )));
            }
        }
        Ok(())
    }
}

/// Colors every edge with `edge_color` and every vertex by degree parity:
/// vertices on the `x` side get the other color exactly when their degree is
/// even, vertices on the `y` side exactly when their degree is odd.
///
/// In the resulting coloring every `x` vertex has an even total
/// `edge_color`-degree and every `y` vertex an odd one, so all edges are
/// irregular and the other color class is edgeless.
pub(crate) fn monochrome_parity_coloring(
    g: &TotalGraph,
    x_side: &BTreeSet<VertexId>,
    edge_color: u32,
) -> TotalColoring {
    let alt = other(edge_color);
    let mut c = TotalColoring::new();
    for (u, v) in g.edges() {
        c.set_edge(u, v, edge_color);
    }
    for v in g.vertices() {
        let even = g.degree(v) % 2 == 0;
        let keep = if x_side.contains(&v) { even } else { !even };
        c.set_vertex(v, if keep { alt } else { edge_color });
    }
    c
}

/// Red-blue coloring of a bipartite graph in which every edge is red, `x`
/// vertices end with even total red-degree, and `y` vertices with odd total
/// red-degree.
///
/// Requires all vertices to be full and `parts` to be a valid bipartition.
pub fn bipartite_tlir2(g: &TotalGraph, parts: &Bipartition) -> Result<TotalColoring> {
    parts.validate(g)?;
    if !g.all_full() {
        return Err(Error::Precondition(
            "parity coloring needs every vertex full".into(),
        ));
    }
    let c = monochrome_parity_coloring(g, &parts.x, RED);
    for &v in &parts.x {
        if total_color_degree(g, &c, v, RED) % 2 != 0 {
            return Err(Error::InternalInvariant(format!(
                "vertex {v} should have even total red-degree"
            )));
        }
    }
    for &v in &parts.y {
        if total_color_degree(g, &c, v, RED) % 2 != 1 {
            return Err(Error::InternalInvariant(format!(
                "vertex {v} should have odd total red-degree"
            )));
        }
    }
    if !verify_tlir(g, &c, true).is_empty() {
        return Err(Error::InternalInvariant(
            "parity coloring failed verification".into(),
        ));
    }
    Ok(c)
}

/// Partial red-blue coloring of a bipartite graph that colors the `x` side
/// and all but a matching of the edges, leaving the `y` side uncolored.
///
/// Guarantees, given that `y` has no isolated vertices:
///
/// - every `x` vertex is colored and has even total red-degree;
/// - every `y` vertex is uncolored and has odd red-degree;
/// - the uncolored edges form a matching (returned sorted);
/// - the partial coloring passes the verifier.
///
/// Construction: every even-degree `y` vertex donates its smallest-id
/// incident edge; the donated edges group into stars centered on the `x`
/// side. Stars with at least two edges turn blue, single-edge stars stay
/// uncolored, everything else turns red, and `x` vertices are colored so
/// their total red-degree comes out even.
pub fn partial_bipartite_tlir(
    g: &TotalGraph,
    parts: &Bipartition,
) -> Result<(TotalColoring, Vec<(VertexId, VertexId)>)> {
    parts.validate(g)?;
    if !g.all_full() {
        return Err(Error::Precondition(
            "partial parity coloring needs every vertex full".into(),
        ));
    }
    if let Some(&v) = parts.y.iter().find(|&&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!(
            "vertex {v} on the uncolored side is isolated"
        )));
    }

    // Donated edges, grouped by their x endpoint.
    let mut donated: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &y in &parts.y {
        if g.degree(y) % 2 == 0 {
            let x = g.neighbors(y).next().expect("no isolated y vertices");
            donated.entry(x).or_default().push(y);
        }
    }

    let mut c = TotalColoring::new();
    let mut uncolored = Vec::new();
    for (&x, ys) in &donated {
        if ys.len() >= 2 {
            for &y in ys {
                c.set_edge(x, y, BLUE);
            }
        } else {
            uncolored.push(ekey(x, ys[0]));
        }
    }
    for (u, v) in g.edges() {
        if c.edge_color(u, v).is_none() && !uncolored.contains(&(u, v)) {
            c.set_edge(u, v, RED);
        }
    }
    for &x in &parts.x {
        let red_edges = g
            .neighbors(x)
            .filter(|&y| c.edge_color(x, y) == Some(RED))
            .count();
        c.set_vertex(x, if red_edges % 2 == 0 { BLUE } else { RED });
    }
    uncolored.sort_unstable();

    // Re-check every promised property before handing the coloring out.
    for &x in &parts.x {
        if total_color_degree(g, &c, x, RED) % 2 != 0 {
            return Err(Error::InternalInvariant(format!(
                "vertex {x} should have even total red-degree"
            )));
        }
    }
    for &y in &parts.y {
        if c.vertex_color(y).is_some() || total_color_degree(g, &c, y, RED) % 2 != 1 {
            return Err(Error::InternalInvariant(format!(
                "vertex {y} should be uncolored with odd red-degree"
            )));
        }
    }
    let mut touched = BTreeSet::new();
    for &(u, v) in &uncolored {
        if !touched.insert(u) || !touched.insert(v) {
            return Err(Error::InternalInvariant(
                "uncolored edges are not a matching".into(),
            ));
        }
    }
    if !verify_tlir(g, &c, false).is_empty() {
        return Err(Error::InternalInvariant(
            "partial parity coloring failed verification".into(),
        ));
    }
    Ok((c, uncolored))
}

/// Extends a valid red-blue coloring of `g` to `g ∪ t`, where `t` is a tree
/// meeting `g` exactly in the anchor vertex `v` and `v` has degree at most 2
/// in `g`.
///
/// All tree edges receive one common color. Tree neighbors of `v` whose
/// degrees share a parity also share a color; in particular all leaf
/// neighbors of `v` in the tree look alike.
///
/// When at most one color appears on `g`-edges at `v`, the tree is colored
/// with the other color and `v` keeps its old vertex color. Otherwise `v` is
/// recolored: four candidate tree colorings (edges red with `v` blue then
/// red, edges blue with `v` blue then red) are tried in that fixed order
/// against the two `g`-edges at `v`, and if the winner leaves `v` tied with
/// a tree neighbor, all tree vertex colors except `v` are swapped.
pub fn attach_pendant_tree(
    g: &TotalGraph,
    c: &TotalColoring,
    v: VertexId,
    t: &TotalGraph,
) -> Result<TotalColoring> {
    let shared: Vec<VertexId> = t.vertices().filter(|&u| g.has_vertex(u)).collect();
    if shared != [v] {
        return Err(Error::Input(format!(
            "tree and host must share exactly the anchor vertex {v}"
        )));
    }
    if !t.is_connected() || !t.is_acyclic() {
        return Err(Error::Input("attachment must be a tree".into()));
    }
    if g.degree(v) > 2 {
        return Err(Error::Precondition(format!(
            "anchor vertex {v} has degree {} > 2",
            g.degree(v)
        )));
    }
    if !g.all_full() || !t.all_full() {
        return Err(Error::Precondition(
            "tree attachment needs every vertex full".into(),
        ));
    }
    c.validate_against(g)?;
    if !verify_tlir(g, c, true).is_empty() {
        return Err(Error::Precondition(
            "host coloring is not a valid total coloring".into(),
        ));
    }

    let mut union = g.clone();
    for u in t.vertices() {
        if u != v {
            union.add_vertex(u, true);
        }
    }
    for (a, b) in t.edges() {
        union.add_edge(a, b)?;
    }

    if t.vertex_count() == 1 {
        return Ok(c.clone());
    }

    let incident: BTreeSet<u32> = g
        .neighbors(v)
        .filter_map(|u| c.edge_color(v, u))
        .collect();
    let mut out = c.clone();
    if incident.len() <= 1 {
        // One edge color at the anchor: tree turns the other color and the
        // anchor keeps its vertex color.
        let beta = other(incident.first().copied().unwrap_or(BLUE));
        let keep = c.vertex_color(v).expect("anchor is colored");
        out.absorb(&tree_coloring(t, v, beta, keep));
    } else {
        // Both colors at the anchor: re-choose its vertex color. The four
        // candidates give the anchor red/blue degree pairs (1, d+1), (2, d),
        // (d, 2), and (d+1, 1) inside the union, so at least one avoids both
        // host edges' totals.
        let mut hosts = g.neighbors(v);
        let (u1, u2) = (hosts.next().unwrap(), hosts.next().unwrap());
        out.uncolor_vertex(v);
        let candidates = [(RED, BLUE), (RED, RED), (BLUE, BLUE), (BLUE, RED)];
        let mut done = false;
        'candidates: for (beta, gamma) in candidates {
            let mut trial = out.clone();
            trial.absorb(&tree_coloring(t, v, beta, gamma));
            for u in [u1, u2] {
                let k = trial.edge_color(v, u).expect("host edges stay colored");
                if total_color_degree(&union, &trial, v, k)
                    == total_color_degree(&union, &trial, u, k)
                {
                    continue 'candidates;
                }
            }
            // The anchor gained one edge of its tree color beyond what the
            // parity construction planned for, which can tie it with tree
            // neighbors; swapping every tree vertex color except the
            // anchor's restores all tree edges at once.
            let tied = t.neighbors(v).any(|w| {
                total_color_degree(&union, &trial, v, beta)
                    == total_color_degree(&union, &trial, w, beta)
            });
            if tied {
                for w in t.vertices() {
                    if w != v {
                        let old = trial.vertex_color(w).expect("tree vertices are colored");
                        trial.set_vertex(w, other(old));
                    }
                }
            }
            out = trial;
            done = true;
            break;
        }
        if !done {
            return Err(Error::InternalInvariant(
                "no tree candidate coloring fits the anchor".into(),
            ));
        }
    }

    if !verify_tlir(&union, &out, true).is_empty() {
        return Err(Error::InternalInvariant(
            "tree attachment failed verification".into(),
        ));
    }
    Ok(out)
}

/// Parity coloring of the tree `t` with all edges `beta` and the anchor `v`
/// forced to the vertex color `gamma` by picking the side of the bipartition
/// that the parity rule maps to `gamma`.
fn tree_coloring(t: &TotalGraph, v: VertexId, beta: u32, gamma: u32) -> TotalColoring {
    let anchor_even = t.degree(v) % 2 == 0;
    // On the x side an even degree yields the non-edge color.
    let v_on_x = if anchor_even {
        gamma == other(beta)
    } else {
        gamma == beta
    };
    let mut x_side = BTreeSet::new();
    let mut depth = BTreeMap::new();
    depth.insert(v, 0usize);
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        let d = depth[&u];
        if (d % 2 == 0) == v_on_x {
            x_side.insert(u);
        }
        for w in t.neighbors(u) {
            if !depth.contains_key(&w) {
                depth.insert(w, d + 1);
                queue.push_back(w);
            }
        }
    }
    let c = monochrome_parity_coloring(t, &x_side, beta);
    debug_assert_eq!(c.vertex_color(v), Some(gamma));
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_valid_tlir;

    fn parts(x: &[VertexId], y: &[VertexId]) -> Bipartition {
        Bipartition::new(x.iter().copied().collect(), y.iter().copied().collect())
    }

    fn red_totals(g: &TotalGraph, c: &TotalColoring) -> Vec<u32> {
        g.vertices()
            .map(|v| total_color_degree(g, c, v, RED))
            .collect()
    }

    #[test]
    fn lone_edge_parity_coloring() {
        let g = TotalGraph::from_edges(2, &[(0, 1)]);
        let c = bipartite_tlir2(&g, &parts(&[0], &[1])).unwrap();
        assert_eq!(c.edge_color(0, 1), Some(RED));
        assert_eq!(c.vertex_color(0), Some(RED));
        assert_eq!(c.vertex_color(1), Some(BLUE));
        assert_eq!(red_totals(&g, &c), vec![2, 1]);
    }

    #[test]
    fn two_leaf_star_parity_coloring() {
        let g = TotalGraph::from_edges(3, &[(0, 1), (0, 2)]);
        let c = bipartite_tlir2(&g, &parts(&[0], &[1, 2])).unwrap();
        assert_eq!(c.vertex_color(0), Some(BLUE));
        assert_eq!(c.vertex_color(1), Some(BLUE));
        assert_eq!(c.vertex_color(2), Some(BLUE));
        assert_eq!(red_totals(&g, &c), vec![2, 1, 1]);
    }

    #[test]
    fn square_parity_coloring() {
        let g = TotalGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let c = bipartite_tlir2(&g, &parts(&[0, 2], &[1, 3])).unwrap();
        assert_eq!(c.vertex_color(0), Some(BLUE));
        assert_eq!(c.vertex_color(2), Some(BLUE));
        assert_eq!(c.vertex_color(1), Some(RED));
        assert_eq!(c.vertex_color(3), Some(RED));
        assert_eq!(red_totals(&g, &c), vec![2, 3, 2, 3]);
    }

    #[test]
    fn bad_bipartitions_are_rejected() {
        let g = TotalGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            bipartite_tlir2(&g, &parts(&[0, 1], &[2])),
            Err(Error::Precondition(_))
        ));
        let p4 = TotalGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(
            bipartite_tlir2(&p4, &parts(&[0, 2], &[1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn partial_coloring_star_with_odd_leaves() {
        let g = TotalGraph::from_edges(3, &[(0, 1), (0, 2)]);
        let (c, uncolored) = partial_bipartite_tlir(&g, &parts(&[0], &[1, 2])).unwrap();
        assert!(uncolored.is_empty());
        assert_eq!(c.edge_color(0, 1), Some(RED));
        assert_eq!(c.edge_color(0, 2), Some(RED));
        assert_eq!(c.vertex_color(0), Some(BLUE));
        assert_eq!(c.vertex_color(1), None);
    }

    #[test]
    fn partial_coloring_leaves_one_donated_edge_uncolored() {
        // Path 0 - 1 - 2 with the middle on the uncolored side: its even
        // degree donates the edge toward vertex 0, a single-edge star.
        let g = TotalGraph::from_edges(3, &[(0, 1), (1, 2)]);
        let (c, uncolored) = partial_bipartite_tlir(&g, &parts(&[0, 2], &[1])).unwrap();
        assert_eq!(uncolored, vec![(0, 1)]);
        assert_eq!(c.edge_color(0, 1), None);
        assert_eq!(c.edge_color(1, 2), Some(RED));
        assert_eq!(c.vertex_color(0), Some(BLUE));
        assert_eq!(c.vertex_color(2), Some(RED));
        assert_eq!(total_color_degree(&g, &c, 1, RED), 1);
    }

    #[test]
    fn partial_coloring_groups_donations_into_blue_stars() {
        // Vertices 1 and 5 both have even degree and donate their smallest
        // neighbor 0, forming a two-edge star that turns blue.
        let g = TotalGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (1, 3), (1, 4), (0, 5), (2, 5)],
        );
        let parts = parts(&[0, 2, 3, 4], &[1, 5]);
        let (c, uncolored) = partial_bipartite_tlir(&g, &parts).unwrap();
        assert!(uncolored.is_empty());
        assert_eq!(c.edge_color(0, 1), Some(BLUE));
        assert_eq!(c.edge_color(0, 5), Some(BLUE));
        assert_eq!(c.edge_color(1, 2), Some(RED));
        assert_eq!(total_color_degree(&g, &c, 1, RED), 3);
        assert_eq!(total_color_degree(&g, &c, 5, RED), 1);
    }

    #[test]
    fn partial_coloring_rejects_isolated_uncolored_vertices() {
        let mut g = TotalGraph::from_edges(2, &[(0, 1)]);
        g.add_vertex(2, true);
        assert!(matches!(
            partial_bipartite_tlir(&g, &parts(&[0], &[1, 2])),
            Err(Error::Precondition(_))
        ));
        // An isolated vertex on the colored side is fine and turns blue.
        let (c, _) = partial_bipartite_tlir(&g, &parts(&[0, 2], &[1])).unwrap();
        assert_eq!(c.vertex_color(2), Some(BLUE));
    }

    #[test]
    fn attach_tree_to_a_lone_vertex() {
        let mut g = TotalGraph::new();
        g.add_vertex(0, true);
        let mut c = TotalColoring::new();
        c.set_vertex(0, RED);
        let t = TotalGraph::from_edges(2, &[(0, 1)]);
        let out = attach_pendant_tree(&g, &c, 0, &t).unwrap();
        assert_eq!(out.vertex_color(0), Some(RED));
        assert_eq!(out.edge_color(0, 1), Some(RED));
        assert_eq!(out.vertex_color(1), Some(BLUE));
    }

    #[test]
    fn attach_tree_to_a_monochrome_cycle() {
        let g = TotalGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let c = bipartite_tlir2(&g, &parts(&[0, 2], &[1, 3])).unwrap();
        let mut t = TotalGraph::new();
        for v in [1, 4, 5] {
            t.add_vertex(v, true);
        }
        t.add_edge(1, 4).unwrap();
        t.add_edge(4, 5).unwrap();
        let out = attach_pendant_tree(&g, &c, 1, &t).unwrap();
        // All cycle edges are red, so the tree turns blue.
        assert_eq!(out.edge_color(1, 4), Some(BLUE));
        assert_eq!(out.edge_color(4, 5), Some(BLUE));
        let mut union = g.clone();
        for v in [4, 5] {
            union.add_vertex(v, true);
        }
        union.add_edge(1, 4).unwrap();
        union.add_edge(4, 5).unwrap();
        assert!(is_valid_tlir(&union, &out, true));
    }

    /// All valid red-blue colorings of the path 0 - 1 - 2.
    fn all_path3_colorings() -> Vec<(TotalGraph, TotalColoring)> {
        let g = TotalGraph::from_edges(3, &[(0, 1), (1, 2)]);
        let mut found = Vec::new();
        for bits in 0u32..2u32.pow(5) {
            let mut c = TotalColoring::new();
            for (i, v) in [0, 1, 2].into_iter().enumerate() {
                c.set_vertex(v, 1 + (bits >> i & 1));
            }
            c.set_edge(0, 1, 1 + (bits >> 3 & 1));
            c.set_edge(1, 2, 1 + (bits >> 4 & 1));
            if is_valid_tlir(&g, &c, true) {
                found.push((g.clone(), c));
            }
        }
        assert!(!found.is_empty());
        found
    }

    #[test]
    fn attach_handles_every_anchor_coloring_and_small_tree() {
        // Middle vertex of a path sees all mixes of edge colors across the
        // valid host colorings; every small tree must attach cleanly.
        let trees: Vec<TotalGraph> = vec![
            {
                let mut t = TotalGraph::new();
                for v in [1, 3] {
                    t.add_vertex(v, true);
                }
                t.add_edge(1, 3).unwrap();
                t
            },
            {
                let mut t = TotalGraph::new();
                for v in [1, 3, 4] {
                    t.add_vertex(v, true);
                }
                t.add_edge(1, 3).unwrap();
                t.add_edge(3, 4).unwrap();
                t
            },
            {
                let mut t = TotalGraph::new();
                for v in [1, 3, 4, 5] {
                    t.add_vertex(v, true);
                }
                for leaf in [3, 4, 5] {
                    t.add_edge(1, leaf).unwrap();
                }
                t
            },
            {
                // Leaf and a depth-two branch: anchor neighbors of unequal
                // degree parity.
                let mut t = TotalGraph::new();
                for v in [1, 3, 4, 5] {
                    t.add_vertex(v, true);
                }
                t.add_edge(1, 3).unwrap();
                t.add_edge(1, 4).unwrap();
                t.add_edge(4, 5).unwrap();
                t
            },
        ];
        for (g, c) in all_path3_colorings() {
            for t in &trees {
                // Rebuild the tree's vertex ids around anchor 1.
                let out = attach_pendant_tree(&g, &c, 1, t).unwrap();
                let mut union = g.clone();
                for v in t.vertices() {
                    if v != 1 {
                        union.add_vertex(v, true);
                    }
                }
                for (a, b) in t.edges() {
                    union.add_edge(a, b).unwrap();
                }
                assert!(is_valid_tlir(&union, &out, true));
                // One color on all tree edges.
                let colors: BTreeSet<u32> = t
                    .edges()
                    .iter()
                    .map(|&(a, b)| out.edge_color(a, b).unwrap())
                    .collect();
                assert_eq!(colors.len(), 1);
                // Tree neighbors of the anchor with equal degree parity
                // share a vertex color; leaves in particular.
                let leaf_colors: BTreeSet<u32> = t
                    .neighbors(1)
                    .filter(|&w| t.degree(w) % 2 == 1)
                    .map(|w| out.vertex_color(w).unwrap())
                    .collect();
                assert!(leaf_colors.len() <= 1);
            }
        }
    }

    #[test]
    fn attach_rejects_bad_shapes() {
        let g = TotalGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let c = bipartite_tlir2(&g, &parts(&[0], &[1, 2, 3])).unwrap();
        let mut t = TotalGraph::new();
        for v in [0, 4] {
            t.add_vertex(v, true);
        }
        t.add_edge(0, 4).unwrap();
        // Anchor degree 3.
        assert!(matches!(
            attach_pendant_tree(&g, &c, 0, &t),
            Err(Error::Precondition(_))
        ));
        // Tree reusing a host vertex beyond the anchor.
        let p2 = TotalGraph::from_edges(2, &[(0, 1)]);
        let cp = bipartite_tlir2(&p2, &parts(&[0], &[1])).unwrap();
        let clash = TotalGraph::from_edges(2, &[(0, 1)]);
        assert!(matches!(
            attach_pendant_tree(&p2, &cp, 0, &clash),
            Err(Error::Input(_))
        ));
        // Non-tree attachment.
        let mut cyc = TotalGraph::new();
        for v in [0, 4, 5] {
            cyc.add_vertex(v, true);
        }
        cyc.add_edge(0, 4).unwrap();
        cyc.add_edge(4, 5).unwrap();
        cyc.add_edge(0, 5).unwrap();
        assert!(matches!(
            attach_pendant_tree(&p2, &cp, 0, &cyc),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn attach_single_vertex_tree_is_identity() {
        let g = TotalGraph::from_edges(2, &[(0, 1)]);
        let c = bipartite_tlir2(&g, &parts(&[0], &[1])).unwrap();
        let mut t = TotalGraph::new();
        t.add_vertex(0, true);
        assert_eq!(attach_pendant_tree(&g, &c, 0, &t).unwrap(), c);
    }
}
