//! Recursive two-color construction for cactus graphs.
//!
//! The algorithm peels the graph from its rim inward: hanging trees are
//! split off and reattached with the pendant-tree extension, pendant cycles
//! around a well-chosen vertex are opened into a tree, the remaining
//! smaller cactus is colored recursively, and finally every opened cycle is
//! reinstated by one of four length-keyed extension recipes.  Each recipe
//! is applied literally first and re-verified; an exhaustive completion
//! over the cycle's elements stands behind it as a guarded fallback.

use std::collections::BTreeSet;

use crate::bipartite::{attach_pendant_tree, bipartite_tlir2, Bipartition};
use crate::blocks::{block_cut_tree, find_good_vertex, BlockKind};
use crate::classify::bipartition_sets;
use crate::coloring::{other, total_color_degree, verify_tlir, TotalColoring, BLUE, RED};
use crate::error::{Error, Result};
use crate::graph::{ekey, TotalGraph, VertexId};
use crate::oracle::{complete_partial_tlir, Element};

/// Length class of a pendant cycle awaiting reinstatement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleLengthCase {
    /// A triangle.
    Len3,
    /// A five-cycle.
    Len5,
    /// Any even length.
    EvenLength,
    /// Odd length of at least seven.
    OddLengthLong,
}

/// One opened pendant cycle scheduled for extension: its vertices starting
/// at the anchor, its length class, and the colors the two reattachment
/// leaves carry in the pre-extension coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantCycleCase {
    /// The cycle as `[x, x1, …, xn]`; consecutive entries and the ends are
    /// adjacent in the full graph.
    pub cycle: Vec<VertexId>,
    pub tag: CycleLengthCase,
    /// Color of `x1` before the extension.
    pub first_leaf: u32,
    /// Color of `xn` (`x2` for a triangle) before the extension.
    pub last_leaf: u32,
}

impl PendantCycleCase {
    /// Classifies `cycle` and records the current colors of its two
    /// attachment leaves.
    ///
    /// # Errors
    ///
    /// [`Error::Input`] when the cycle is shorter than three vertices or
    /// its leaves are uncolored.
    pub fn new(cycle: Vec<VertexId>, c: &TotalColoring) -> Result<PendantCycleCase> {
        let tag = match cycle.len() {
            0..=2 => return Err(Error::Input("a cycle needs at least three vertices".into())),
            3 => CycleLengthCase::Len3,
            5 => CycleLengthCase::Len5,
            n if n % 2 == 0 => CycleLengthCase::EvenLength,
            _ => CycleLengthCase::OddLengthLong,
        };
        let leaf = |v: VertexId| {
            c.vertex_color(v)
                .ok_or_else(|| Error::Input(format!("cycle leaf {v} is uncolored")))
        };
        Ok(PendantCycleCase {
            first_leaf: leaf(cycle[1])?,
            last_leaf: leaf(cycle[cycle.len() - 1])?,
            cycle,
            tag,
        })
    }
}

/// Colors a connected cactus with red and blue so that every edge's
/// endpoints differ in the edge's own color class.
///
/// Trees go through the degree-parity recipe.  Otherwise, a hanging tree at
/// a cycle vertex is split off and reattached after recursing; once no
/// cycle vertex carries a hanging tree, the pendant cycles around the
/// chosen anchor are opened, the rest is colored recursively, the opened
/// legs are normalized to blue, and each cycle is reinstated by its
/// length's extension recipe.
///
/// # Errors
///
/// [`Error::ClassPrecondition`] when the graph is not a cactus,
/// [`Error::Precondition`] when it is disconnected or has empty vertices.
pub fn cactus_tlir2(g: &TotalGraph) -> Result<TotalColoring> {
    if g.vertex_count() == 0 {
        return Err(Error::Input("the graph has no vertices".into()));
    }
    let bct = block_cut_tree(g);
    if !bct.is_cactus() {
        return Err(Error::ClassPrecondition(
            "an edge lies on two cycles".into(),
        ));
    }
    if !bct.connected {
        return Err(Error::Precondition("the graph is disconnected".into()));
    }
    if !g.all_full() {
        return Err(Error::Precondition(
            "every vertex must carry a color slot".into(),
        ));
    }

    if g.is_acyclic() {
        let (x, y) = bipartition_sets(g).expect("trees are bipartite");
        return bipartite_tlir2(g, &Bipartition::new(x, y));
    }

    // Split one hanging tree off a cycle vertex, recurse, reattach.
    if let Some((root, branch)) = find_hanging_tree(g, &bct) {
        let mut survivors: BTreeSet<VertexId> = g.vertices().collect();
        for v in &branch {
            if *v != root {
                survivors.remove(v);
            }
        }
        let host = g.induced(&survivors);
        let inner = cactus_tlir2(&host)?;
        let c = attach_pendant_tree(&host, &inner, root, &g.induced(&branch))?;
        return finish(g, c);
    }

    // Open the pendant cycles around the anchor.
    let good = find_good_vertex(g)?;
    if good.cycles.is_empty() {
        return Err(Error::InternalInvariant(
            "a cyclic cactus produced an anchor without pendant cycles".into(),
        ));
    }
    for cycle in &good.cycles {
        if cycle[1..].iter().any(|&v| g.degree(v) != 2) {
            return Err(Error::InternalInvariant(
                "a pendant cycle still carries a vertex of degree three or more".into(),
            ));
        }
    }
    let x = good.x;
    let mut opened = g.clone();
    let mut tree_side: BTreeSet<VertexId> = BTreeSet::from([x]);
    for cycle in &good.cycles {
        if cycle.len() == 3 {
            opened.remove_edge(cycle[1], cycle[2]);
            tree_side.extend([cycle[1], cycle[2]]);
        } else {
            for &v in &cycle[2..cycle.len() - 1] {
                opened.remove_vertex(v);
            }
            tree_side.extend([cycle[1], cycle[cycle.len() - 1]]);
        }
    }
    for tree in &good.trees {
        tree_side.extend(tree);
    }
    let keep: BTreeSet<VertexId> = opened
        .vertices()
        .filter(|v| *v == x || !tree_side.contains(v))
        .collect();
    let host = opened.induced(&keep);
    let legs = opened.induced(&tree_side);
    let inner = cactus_tlir2(&host)?;
    let mut c = attach_pendant_tree(&host, &inner, x, &legs)?;

    // The extension recipes assume the opened legs are blue.
    let (lu, lv) = legs.edges().first().copied().expect("legs are never empty");
    if c.edge_color(lu, lv) == Some(RED) {
        c.swap_colors();
    }

    let mut cycles = good.cycles.clone();
    cycles.sort_by_key(|cycle| cycle.iter().min().copied());
    for cycle in cycles {
        let case = PendantCycleCase::new(cycle, &c)?;
        c = extend_cycle_case(g, &c, &case)?;
    }
    finish(g, c)
}

fn finish(g: &TotalGraph, c: TotalColoring) -> Result<TotalColoring> {
    let issues = verify_tlir(g, &c, true);
    if let Some(issue) = issues.first() {
        return Err(Error::InternalInvariant(format!(
            "assembled cactus coloring is invalid: {issue:?}"
        )));
    }
    Ok(c)
}

/// Finds a cycle vertex of degree at least three whose component, after the
/// cycle's edges are removed, is a tree — the shape that can be split off
/// and reattached with the pendant-tree extension.  Returns the vertex and
/// the component (vertex included).
fn find_hanging_tree(
    g: &TotalGraph,
    bct: &crate::blocks::BlockCutTree,
) -> Option<(VertexId, BTreeSet<VertexId>)> {
    let mut cycle_blocks: Vec<usize> = (0..bct.blocks.len())
        .filter(|&i| bct.blocks[i].kind == BlockKind::Cycle)
        .collect();
    cycle_blocks.sort_by_key(|&i| bct.blocks[i].vertices.iter().min().copied());
    for i in cycle_blocks {
        let block_edges: BTreeSet<(VertexId, VertexId)> = bct.blocks[i]
            .edges
            .iter()
            .map(|&(u, v)| ekey(u, v))
            .collect();
        let mut members = bct.blocks[i].vertices.clone();
        members.sort_unstable();
        for &v in &members {
            if g.degree(v) <= 2 {
                continue;
            }
            // Flood from v without using the cycle's own edges.
            let mut comp = BTreeSet::from([v]);
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                for w in g.neighbors(u) {
                    if !block_edges.contains(&ekey(u, w)) && comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            if comp.len() > 1 && g.induced(&comp).is_acyclic() {
                return Some((v, comp));
            }
        }
    }
    None
}

/// Reinstates one opened pendant cycle on top of the coloring `c`.
///
/// The recipe keyed by the cycle's length class is written first; every
/// edge touching the cycle is then re-checked.  If the literal recipe does
/// not verify, the cycle's elements (anchor vertex included) are uncolored
/// and recolored by exhaustive completion, which is guaranteed to succeed
/// for cycles reattached at a well-chosen vertex.
///
/// # Errors
///
/// [`Error::InternalInvariant`] when even the fallback completion finds no
/// valid extension.
pub fn extend_cycle_case(
    g: &TotalGraph,
    c: &TotalColoring,
    case: &PendantCycleCase,
) -> Result<TotalColoring> {
    let cycle = &case.cycle;
    let x = cycle[0];
    let n = cycle.len() - 1;
    let mut out = c.clone();
    let blue_at_x = total_color_degree(g, c, x, BLUE);
    match case.tag {
        CycleLengthCase::Len3 => {
            let (x1, x2) = (cycle[1], cycle[2]);
            if blue_at_x != 2 {
                out.set_vertex(x1, BLUE);
                out.set_edge(x1, x2, RED);
                out.set_vertex(x2, RED);
            } else {
                // Trading the anchor's own color against one leg keeps both
                // of its color degrees while freeing a red edge for x2.
                out.set_vertex(x, BLUE);
                out.set_edge(x, x2, RED);
                out.set_vertex(x1, BLUE);
                out.set_edge(x1, x2, BLUE);
                out.set_vertex(x2, RED);
                if total_color_degree(g, &out, x2, RED) == total_color_degree(g, &out, x, RED) {
                    out.set_vertex(x2, BLUE);
                }
            }
        }
        CycleLengthCase::Len5 => {
            let (x1, x2, x3, x4) = (cycle[1], cycle[2], cycle[3], cycle[4]);
            if blue_at_x == 2 {
                out.set_vertex(x1, BLUE);
                out.set_edge(x1, x2, BLUE);
                for v in [x2, x3, x4] {
                    out.set_vertex(v, RED);
                }
                out.set_edge(x2, x3, RED);
                out.set_edge(x3, x4, RED);
            } else {
                for v in [x1, x3, x4] {
                    out.set_vertex(v, BLUE);
                }
                out.set_vertex(x2, RED);
                for (u, v) in [(x1, x2), (x2, x3), (x3, x4)] {
                    out.set_edge(u, v, RED);
                }
            }
        }
        CycleLengthCase::EvenLength => {
            path_red_interior_alternating(&mut out, cycle, BLUE);
        }
        CycleLengthCase::OddLengthLong => {
            if case.first_leaf == BLUE && case.last_leaf == BLUE {
                path_red_interior_alternating(&mut out, cycle, BLUE);
            } else if case.first_leaf == RED && case.last_leaf == RED {
                let (x1, x2, x3, x4) = (cycle[1], cycle[2], cycle[3], cycle[4]);
                out.set_edge(x1, x2, RED);
                out.set_vertex(x2, RED);
                out.set_edge(x2, x3, RED);
                out.set_vertex(x3, BLUE);
                out.set_edge(x3, x4, BLUE);
                out.set_vertex(x4, RED);
                for i in 4..n {
                    out.set_edge(cycle[i], cycle[i + 1], RED);
                }
                for i in 5..n {
                    out.set_vertex(cycle[i], if i % 2 == 1 { RED } else { BLUE });
                }
            }
            // Mixed leaf colors fall through to the completion below.
        }
    }
    if extension_valid(g, &out, cycle) {
        return Ok(out);
    }
    // Guarded fallback: recolor the whole cycle, anchor's color included.
    let mut bare = c.clone();
    let mut elements = vec![Element::Vertex(x)];
    bare.uncolor_vertex(x);
    for &v in &cycle[1..] {
        bare.uncolor_vertex(v);
        elements.push(Element::Vertex(v));
    }
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        bare.uncolor_edge(u, v);
        elements.push(Element::Edge(u, v));
    }
    complete_partial_tlir(g, &bare, &elements, &[RED, BLUE]).ok_or_else(|| {
        Error::InternalInvariant("no extension reinstates an opened cycle".into())
    })
}

/// The shared long-cycle pattern: all path edges red, interior vertices
/// alternating starting from `odd_color` at the third cycle vertex.
fn path_red_interior_alternating(out: &mut TotalColoring, cycle: &[VertexId], odd_color: u32) {
    let n = cycle.len() - 1;
    for i in 1..n {
        out.set_edge(cycle[i], cycle[i + 1], RED);
    }
    for i in 2..n {
        out.set_vertex(cycle[i], if i % 2 == 1 { odd_color } else { other(odd_color) });
    }
}

/// Checks every colored edge with an endpoint on the cycle; edges of not
/// yet reinstated cycles are still uncolored and skipped.
fn extension_valid(g: &TotalGraph, c: &TotalColoring, cycle: &[VertexId]) -> bool {
    let on_cycle: BTreeSet<VertexId> = cycle.iter().copied().collect();
    g.edges().into_iter().all(|(u, v)| {
        if !on_cycle.contains(&u) && !on_cycle.contains(&v) {
            return true;
        }
        match c.edge_color(u, v) {
            None => true,
            Some(k) => total_color_degree(g, c, u, k) != total_color_degree(g, c, v, k),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{bow_tie, butterfly};
    use crate::coloring::is_valid_tlir;

    fn cycle(n: u32) -> TotalGraph {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        TotalGraph::from_edges(n, &edges)
    }

    fn assert_two_color_valid(g: &TotalGraph, label: &str) {
        let c = cactus_tlir2(g).unwrap_or_else(|e| panic!("{label}: {e}"));
        assert!(is_valid_tlir(g, &c, true), "{label}");
        assert!(
            c.colors_used().is_subset(&BTreeSet::from([RED, BLUE])),
            "{label}"
        );
    }

    #[test]
    fn case_tags_follow_the_cycle_length() {
        let mut c = TotalColoring::new();
        for v in 0..9 {
            c.set_vertex(v, BLUE);
        }
        let tag = |k: usize| {
            PendantCycleCase::new((0..k as u32).collect(), &c)
                .unwrap()
                .tag
        };
        assert_eq!(tag(3), CycleLengthCase::Len3);
        assert_eq!(tag(4), CycleLengthCase::EvenLength);
        assert_eq!(tag(5), CycleLengthCase::Len5);
        assert_eq!(tag(6), CycleLengthCase::EvenLength);
        assert_eq!(tag(7), CycleLengthCase::OddLengthLong);
        assert_eq!(tag(9), CycleLengthCase::OddLengthLong);
        assert!(PendantCycleCase::new(vec![0, 1], &c).is_err());
    }

    #[test]
    fn leaf_colors_are_recorded_from_the_coloring() {
        let mut c = TotalColoring::new();
        c.set_vertex(1, RED);
        c.set_vertex(4, BLUE);
        for v in [0, 2, 3] {
            c.set_vertex(v, BLUE);
        }
        let case = PendantCycleCase::new(vec![0, 1, 2, 3, 4], &c).unwrap();
        assert_eq!(case.first_leaf, RED);
        assert_eq!(case.last_leaf, BLUE);
    }

    #[test]
    fn plain_cycles_of_every_small_length_color_validly() {
        for n in 3..=10 {
            assert_two_color_valid(&cycle(n), &format!("cycle on {n}"));
        }
    }

    #[test]
    fn trees_use_the_parity_recipe() {
        let star = TotalGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_two_color_valid(&star, "star");
        let mut lone = TotalGraph::new();
        lone.add_vertex(7, true);
        assert_two_color_valid(&lone, "single vertex");
    }

    #[test]
    fn shapes_from_the_block_library_color_validly() {
        assert_two_color_valid(&butterfly(), "butterfly");
        assert_two_color_valid(&bow_tie(), "bow tie");
    }

    #[test]
    fn hanging_trees_are_split_off_first() {
        // A triangle with a tail of two edges at vertex 2.
        let g = TotalGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        let bct = block_cut_tree(&g);
        let (root, branch) = find_hanging_tree(&g, &bct).unwrap();
        assert_eq!(root, 2);
        assert_eq!(branch, BTreeSet::from([2, 3, 4]));
        assert_two_color_valid(&g, "triangle with tail");
    }

    #[test]
    fn cycles_with_tails_color_validly_at_every_length() {
        for n in 3..=9u32 {
            for tail in 1..=2u32 {
                let mut g = cycle(n);
                for t in 0..tail {
                    g.add_vertex(n + t, true);
                    g.add_edge(if t == 0 { 0 } else { n + t - 1 }, n + t).unwrap();
                }
                assert_two_color_valid(&g, &format!("cycle {n} with tail {tail}"));
            }
        }
    }

    #[test]
    fn cycles_chained_through_bridges_color_validly() {
        // Two cycles of different parity joined by a bridge path.
        for (a, b) in [(3u32, 4u32), (5, 6), (7, 3), (6, 6), (9, 5)] {
            let mut edges: Vec<(u32, u32)> = (0..a).map(|i| (i, (i + 1) % a)).collect();
            edges.extend((0..b).map(|i| (a + i, a + (i + 1) % b)));
            edges.push((0, a));
            let g = TotalGraph::from_edges(a + b, &edges);
            assert_two_color_valid(&g, &format!("bridge between {a} and {b}"));
        }
    }

    #[test]
    fn non_cactus_input_is_rejected() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let k4 = TotalGraph::from_edges(4, &edges);
        assert!(matches!(
            cactus_tlir2(&k4),
            Err(Error::ClassPrecondition(_))
        ));
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let mut g = cycle(3);
        for v in [10, 11, 12] {
            g.add_vertex(v, true);
        }
        g.add_edge(10, 11).unwrap();
        g.add_edge(11, 12).unwrap();
        g.add_edge(10, 12).unwrap();
        assert!(matches!(cactus_tlir2(&g), Err(Error::Precondition(_))));
    }

    /// Every connected cactus on up to six vertices gets a valid red-blue
    /// coloring.
    #[test]
    fn exhaustive_sweep_over_small_cacti() {
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
                if !g.is_connected() || !block_cut_tree(&g).is_cactus() {
                    continue;
                }
                let c = cactus_tlir2(&g).unwrap_or_else(|e| {
                    panic!("n={n} edges={edges:?}: {e}");
                });
                assert!(is_valid_tlir(&g, &c, true), "n={n} edges={edges:?}");
                assert!(c.colors_used().is_subset(&BTreeSet::from([RED, BLUE])));
                solved += 1;
            }
        }
        assert!(solved > 2000, "swept only {solved} graphs");
    }
}
