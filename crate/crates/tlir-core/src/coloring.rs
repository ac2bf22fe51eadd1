//! Partial total colorings, per-class color degrees, and the verifiers the
//! rest of the crate is checked against: local irregularity, properness,
//! acyclicity, and star-forest structure.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{ekey, TotalGraph, VertexId};

/// Color of the first class. Two-color constructions talk about "red" and
/// "blue"; numerically red is 1 and blue is 2.
pub const RED: u32 = 1;
/// Color of the second class.
pub const BLUE: u32 = 2;

/// The other color of the two-color palette.
pub fn other(color: u32) -> u32 {
    debug_assert!(color == RED || color == BLUE);
    RED + BLUE - color
}

/// A plain (possibly partial) vertex coloring, used by the proper/acyclic/
/// star pipeline where fullness plays no role.
pub type VertexColoring = BTreeMap<VertexId, u32>;
/// A plain edge coloring keyed by ascending endpoint pairs.
pub type EdgeColoring = BTreeMap<(VertexId, VertexId), u32>;

/// A partial coloring of vertices and edges with positive integer colors.
/// "Uncolored" is the absence of an entry, never color 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TotalColoring {
    vertex: BTreeMap<VertexId, u32>,
    edge: BTreeMap<(VertexId, VertexId), u32>,
}

impl TotalColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_vertex(&mut self, v: VertexId, color: u32) {
        assert!(color >= 1, "colors are positive");
        self.vertex.insert(v, color);
    }

    pub fn set_edge(&mut self, u: VertexId, v: VertexId, color: u32) {
        assert!(color >= 1, "colors are positive");
        self.edge.insert(ekey(u, v), color);
    }

    pub fn uncolor_vertex(&mut self, v: VertexId) {
        self.vertex.remove(&v);
    }

    pub fn uncolor_edge(&mut self, u: VertexId, v: VertexId) {
        self.edge.remove(&ekey(u, v));
    }

    pub fn vertex_color(&self, v: VertexId) -> Option<u32> {
        self.vertex.get(&v).copied()
    }

    pub fn edge_color(&self, u: VertexId, v: VertexId) -> Option<u32> {
        self.edge.get(&ekey(u, v)).copied()
    }

    pub fn vertex_colors(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.vertex.iter().map(|(&v, &c)| (v, c))
    }

    pub fn edge_colors(&self) -> impl Iterator<Item = ((VertexId, VertexId), u32)> + '_ {
        self.edge.iter().map(|(&e, &c)| (e, c))
    }

    /// Distinct colors appearing on vertices or edges.
    pub fn colors_used(&self) -> BTreeSet<u32> {
        self.vertex
            .values()
            .chain(self.edge.values())
            .copied()
            .collect()
    }

    /// Exchanges the two colors of the red/blue palette everywhere.
    pub fn swap_colors(&mut self) {
        self.map_colors(|c| if c == RED { BLUE } else if c == BLUE { RED } else { c });
    }

    /// Applies a color renaming to every colored element.
    pub fn map_colors(&mut self, f: impl Fn(u32) -> u32) {
        for c in self.vertex.values_mut().chain(self.edge.values_mut()) {
            let n = f(*c);
            assert!(n >= 1, "colors are positive");
            *c = n;
        }
    }

    /// Copies every assignment of `other` into `self` (later wins).
    pub fn absorb(&mut self, other: &TotalColoring) {
        for (v, c) in other.vertex_colors() {
            self.vertex.insert(v, c);
        }
        for (e, c) in other.edge_colors() {
            self.edge.insert(e, c);
        }
    }

    /// Structural fit: every colored element exists in `g`, and vertex colors
    /// sit only on full vertices. Empty vertices never carry a vertex color.
    pub fn validate_against(&self, g: &TotalGraph) -> Result<()> {
        for (v, _) in self.vertex_colors() {
            if !g.has_vertex(v) {
                return Err(Error::Input(format!("colored vertex {v} is not in the graph")));
            }
            if !g.is_full(v) {
                return Err(Error::Input(format!("empty vertex {v} must stay uncolored")));
            }
        }
        for ((u, v), _) in self.edge_colors() {
            if !g.has_edge(u, v) {
                return Err(Error::Input(format!(
                    "colored edge ({u}, {v}) is not in the graph"
                )));
            }
        }
        Ok(())
    }
}

/// Number of incident edges of color `k`, plus one when `v` itself is colored
/// `k`. Uncolored elements contribute nothing.
pub fn total_color_degree(g: &TotalGraph, c: &TotalColoring, v: VertexId, k: u32) -> u32 {
    let from_edges = g
        .neighbors(v)
        .filter(|&u| c.edge_color(v, u) == Some(k))
        .count() as u32;
    from_edges + u32::from(c.vertex_color(v) == Some(k))
}

/// A colored edge whose endpoints agree in its class's total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub edge: (VertexId, VertexId),
    pub class: u32,
    /// Total class-degree at the smaller endpoint.
    pub left_degree: u32,
    /// Total class-degree at the larger endpoint.
    pub right_degree: u32,
}

/// Everything that can be wrong with a (possibly required-total) coloring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TlirIssue {
    Conflict(Violation),
    UncoloredEdge { edge: (VertexId, VertexId) },
    UncoloredVertex { vertex: VertexId },
}

/// Checks local irregularity: every *colored* edge must see different total
/// class-degrees at its two endpoints. With `require_total`, additionally
/// every edge and every full vertex must be colored. Violations are reported
/// exhaustively, sorted by edge.
pub fn verify_tlir(g: &TotalGraph, c: &TotalColoring, require_total: bool) -> Vec<TlirIssue> {
    let mut issues = Vec::new();
    for (u, v) in g.edges() {
        match c.edge_color(u, v) {
            Some(k) => {
                let du = total_color_degree(g, c, u, k);
                let dv = total_color_degree(g, c, v, k);
                if du == dv {
                    issues.push(TlirIssue::Conflict(Violation {
                        edge: (u, v),
                        class: k,
                        left_degree: du,
                        right_degree: dv,
                    }));
                }
            }
            None if require_total => issues.push(TlirIssue::UncoloredEdge { edge: (u, v) }),
            None => {}
        }
    }
    if require_total {
        for v in g.vertices() {
            if g.is_full(v) && c.vertex_color(v).is_none() {
                issues.push(TlirIssue::UncoloredVertex { vertex: v });
            }
        }
    }
    issues
}

/// Convenience wrapper: structural fit plus an empty issue list.
pub fn is_valid_tlir(g: &TotalGraph, c: &TotalColoring, require_total: bool) -> bool {
    c.validate_against(g).is_ok() && verify_tlir(g, c, require_total).is_empty()
}

/// Standard properness over colored vertices: returns the first edge whose
/// endpoints share a color, if any.
pub fn verify_proper(g: &TotalGraph, vc: &VertexColoring) -> Option<(VertexId, VertexId)> {
    g.edges().into_iter().find(|&(u, v)| {
        matches!((vc.get(&u), vc.get(&v)), (Some(a), Some(b)) if a == b)
    })
}

/// Checks that no cycle alternates between exactly two color classes.
/// Requires a total, proper vertex coloring; returns a witness cycle (as a
/// vertex sequence) when one exists.
pub fn verify_acyclic(g: &TotalGraph, vc: &VertexColoring) -> Result<Option<Vec<VertexId>>> {
    for v in g.vertices() {
        if !vc.contains_key(&v) {
            return Err(Error::Precondition(format!(
                "acyclicity requires a total vertex coloring; vertex {v} is uncolored"
            )));
        }
    }
    if let Some((u, v)) = verify_proper(g, vc) {
        return Err(Error::Precondition(format!(
            "acyclicity requires a proper coloring; edge ({u}, {v}) is monochromatic"
        )));
    }
    let palette: BTreeSet<u32> = vc.values().copied().collect();
    let colors: Vec<u32> = palette.into_iter().collect();
    for (i, &a) in colors.iter().enumerate() {
        for &b in &colors[i + 1..] {
            let keep: BTreeSet<VertexId> = g
                .vertices()
                .filter(|v| vc[v] == a || vc[v] == b)
                .collect();
            if let Some(cycle) = find_cycle(&g.induced(&keep)) {
                return Ok(Some(cycle));
            }
        }
    }
    Ok(None)
}

/// Any cycle of `g`, as a vertex sequence, found by DFS back-edge detection.
fn find_cycle(g: &TotalGraph) -> Option<Vec<VertexId>> {
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    for root in g.vertices().collect::<Vec<_>>() {
        if seen.contains(&root) {
            continue;
        }
        let mut stack = vec![(root, None::<VertexId>)];
        while let Some((v, from)) = stack.pop() {
            if seen.contains(&v) {
                continue;
            }
            seen.insert(v);
            if let Some(f) = from {
                parent.insert(v, f);
            }
            for w in g.neighbors(v) {
                if Some(w) == from {
                    continue;
                }
                if seen.contains(&w) {
                    // Back edge; w may be an ancestor of v (stack discipline
                    // can also surface finished branches, so walk defensively).
                    let mut path = vec![v];
                    let mut cur = v;
                    while cur != w {
                        match parent.get(&cur) {
                            Some(&p) => {
                                cur = p;
                                path.push(cur);
                            }
                            None => break,
                        }
                    }
                    if *path.last().expect("nonempty") == w {
                        return Some(path);
                    }
                } else {
                    stack.push((w, Some(v)));
                }
            }
        }
    }
    None
}

/// What can be wrong with a star-forest edge coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarIssue {
    UncoloredEdge { edge: (VertexId, VertexId) },
    /// A color class has a component that is not a star.
    NotAStar { class: u32, vertices: Vec<VertexId> },
    /// A nontrivial star's center is not vertex-colored with the class color.
    WrongCenter { class: u32, center: VertexId },
}

/// Checks that every edge color class induces a star forest; with a vertex
/// coloring supplied, additionally that every star with at least two edges
/// has its center colored in the class color.
pub fn verify_star(
    g: &TotalGraph,
    ec: &EdgeColoring,
    vc: Option<&VertexColoring>,
) -> Vec<StarIssue> {
    let mut issues = Vec::new();
    let mut classes: BTreeMap<u32, Vec<(VertexId, VertexId)>> = BTreeMap::new();
    for (u, v) in g.edges() {
        match ec.get(&(u, v)) {
            Some(&k) => classes.entry(k).or_default().push((u, v)),
            None => issues.push(StarIssue::UncoloredEdge { edge: (u, v) }),
        }
    }
    for (k, edges) in classes {
        let mut sub = TotalGraph::new();
        for &(u, v) in &edges {
            sub.add_vertex(u, true);
            sub.add_vertex(v, true);
            sub.add_edge(u, v).expect("edge of g");
        }
        for comp in sub.components() {
            let n = comp.len();
            let center = comp
                .iter()
                .copied()
                .find(|&v| sub.degree(v) == n - 1 && n >= 2);
            let edge_total: usize = comp.iter().map(|&v| sub.degree(v)).sum::<usize>() / 2;
            match center {
                Some(c) if edge_total == n - 1 => {
                    if n > 2 {
                        // Nontrivial star: the center is forced and must
                        // match the class color when vertex colors are given.
                        if let Some(vc) = vc {
                            if vc.get(&c) != Some(&k) {
                                issues.push(StarIssue::WrongCenter { class: k, center: c });
                            }
                        }
                    }
                }
                _ => issues.push(StarIssue::NotAStar {
                    class: k,
                    vertices: comp.into_iter().collect(),
                }),
            }
        }
    }
    issues
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> TotalGraph {
        let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        TotalGraph::from_edges(n, &edges)
    }

    #[test]
    fn color_degree_counts_edges_and_the_vertex_itself() {
        let g = path(3);
        let mut c = TotalColoring::new();
        c.set_vertex(1, 1);
        c.set_edge(0, 1, 1);
        c.set_edge(1, 2, 1);
        assert_eq!(total_color_degree(&g, &c, 1, 1), 3);
        c.set_vertex(1, 2);
        assert_eq!(total_color_degree(&g, &c, 1, 1), 2);
        assert_eq!(total_color_degree(&g, &c, 1, 2), 1);
        assert_eq!(total_color_degree(&g, &c, 0, 2), 0);
    }

    #[test]
    fn monochromatic_p4_fails_exactly_on_the_middle_edge() {
        let g = path(4);
        let mut c = TotalColoring::new();
        for v in 0..4 {
            c.set_vertex(v, 1);
        }
        for (u, v) in g.edges() {
            c.set_edge(u, v, 1);
        }
        let issues = verify_tlir(&g, &c, true);
        assert_eq!(
            issues,
            vec![TlirIssue::Conflict(Violation {
                edge: (1, 2),
                class: 1,
                left_degree: 3,
                right_degree: 3,
            })]
        );
    }

    #[test]
    fn lone_colored_vertex_is_valid() {
        let g = TotalGraph::with_full_vertices(1);
        let mut c = TotalColoring::new();
        c.set_vertex(0, 1);
        assert!(is_valid_tlir(&g, &c, true));
    }

    #[test]
    fn partial_colorings_skip_uncolored_edges() {
        let g = path(4);
        let mut c = TotalColoring::new();
        // Only the middle edge colored; endpoints tie, so it still fails...
        c.set_edge(1, 2, 1);
        assert_eq!(verify_tlir(&g, &c, false).len(), 1);
        // ...but coloring one endpoint breaks the tie, and the uncolored
        // edges and vertices are not reported in partial mode.
        c.set_vertex(1, 1);
        assert!(verify_tlir(&g, &c, false).is_empty());
        assert!(!verify_tlir(&g, &c, true).is_empty());
    }

    #[test]
    fn totality_reporting() {
        let mut g = path(2);
        g.add_vertex(2, false);
        g.add_edge(1, 2).unwrap();
        let mut c = TotalColoring::new();
        c.set_vertex(0, 2);
        c.set_edge(0, 1, 1);
        c.set_edge(1, 2, 1);
        let issues = verify_tlir(&g, &c, true);
        // Vertex 1 is full and uncolored; vertex 2 is empty, so not required.
        assert_eq!(issues, vec![TlirIssue::UncoloredVertex { vertex: 1 }]);
    }

    #[test]
    fn empty_vertices_must_stay_uncolored() {
        let mut g = TotalGraph::new();
        g.add_vertex(0, false);
        let mut c = TotalColoring::new();
        c.set_vertex(0, 1);
        assert!(c.validate_against(&g).is_err());
    }

    #[test]
    fn uncoloring_an_edge_only_disturbs_its_neighborhood() {
        let g = path(6);
        let mut c = TotalColoring::new();
        for v in 0..6 {
            c.set_vertex(v, 1 + (v % 2));
        }
        for (i, (u, v)) in g.edges().into_iter().enumerate() {
            c.set_edge(u, v, 1 + (i as u32 % 2));
        }
        let before = verify_tlir(&g, &c, false);
        c.uncolor_edge(2, 3);
        let after = verify_tlir(&g, &c, false);
        let touches = |e: (u32, u32)| e.0 == 2 || e.0 == 3 || e.1 == 2 || e.1 == 3;
        let edge_of = |i: &TlirIssue| match i {
            TlirIssue::Conflict(v) => v.edge,
            TlirIssue::UncoloredEdge { edge } => *edge,
            TlirIssue::UncoloredVertex { .. } => unreachable!(),
        };
        for issue in before.iter().filter(|i| !touches(edge_of(i))) {
            assert!(after.contains(issue));
        }
        for issue in after.iter().filter(|i| !touches(edge_of(i))) {
            assert!(before.contains(issue));
        }
    }

    #[test]
    fn swap_exchanges_red_and_blue_only() {
        let mut c = TotalColoring::new();
        c.set_vertex(0, RED);
        c.set_vertex(1, BLUE);
        c.set_vertex(2, 3);
        c.swap_colors();
        assert_eq!(c.vertex_color(0), Some(BLUE));
        assert_eq!(c.vertex_color(1), Some(RED));
        assert_eq!(c.vertex_color(2), Some(3));
    }

    #[test]
    fn properness() {
        let tri = TotalGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let vc: VertexColoring = [(0, 1), (1, 2), (2, 3)].into_iter().collect();
        assert_eq!(verify_proper(&tri, &vc), None);
        let k2 = TotalGraph::from_edges(2, &[(0, 1)]);
        let same: VertexColoring = [(0, 1), (1, 1)].into_iter().collect();
        assert_eq!(verify_proper(&k2, &same), Some((0, 1)));
        assert_eq!(verify_proper(&TotalGraph::with_full_vertices(3), &same), None);
    }

    #[test]
    fn two_colored_cycle_is_caught() {
        let c4 = TotalGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let alt: VertexColoring = [(0, 1), (1, 2), (2, 1), (3, 2)].into_iter().collect();
        let witness = verify_acyclic(&c4, &alt).unwrap().unwrap();
        assert_eq!(witness.len(), 4);
        let three: VertexColoring = [(0, 1), (1, 2), (2, 1), (3, 3)].into_iter().collect();
        assert_eq!(verify_acyclic(&c4, &three).unwrap(), None);
    }

    #[test]
    fn acyclicity_preconditions() {
        let k2 = TotalGraph::from_edges(2, &[(0, 1)]);
        let partial: VertexColoring = [(0, 1)].into_iter().collect();
        assert!(verify_acyclic(&k2, &partial).is_err());
        let improper: VertexColoring = [(0, 1), (1, 1)].into_iter().collect();
        assert!(verify_acyclic(&k2, &improper).is_err());
    }

    #[test]
    fn trees_are_acyclic_under_any_proper_coloring() {
        let t = path(5);
        let vc: VertexColoring = (0..5).map(|v| (v, 1 + (v % 2))).collect();
        assert_eq!(verify_acyclic(&t, &vc).unwrap(), None);
    }

    #[test]
    fn star_forest_checks() {
        let p3 = path(3);
        let ec: EdgeColoring = [((0, 1), 1), ((1, 2), 1)].into_iter().collect();
        assert!(verify_star(&p3, &ec, None).is_empty());
        let vc_ok: VertexColoring = [(0, 2), (1, 1), (2, 2)].into_iter().collect();
        assert!(verify_star(&p3, &ec, Some(&vc_ok)).is_empty());
        let vc_bad: VertexColoring = [(0, 1), (1, 2), (2, 1)].into_iter().collect();
        assert_eq!(
            verify_star(&p3, &ec, Some(&vc_bad)),
            vec![StarIssue::WrongCenter { class: 1, center: 1 }]
        );

        let p4 = path(4);
        let mono: EdgeColoring = p4.edges().into_iter().map(|e| (e, 1)).collect();
        assert!(matches!(
            verify_star(&p4, &mono, None).as_slice(),
            [StarIssue::NotAStar { class: 1, .. }]
        ));
    }

    #[test]
    fn class_degrees_sum_to_total_degree() {
        let g = path(4);
        let mut c = TotalColoring::new();
        c.set_vertex(1, 2);
        c.set_edge(0, 1, 1);
        c.set_edge(1, 2, 2);
        let sum: u32 = c
            .colors_used()
            .into_iter()
            .map(|k| total_color_degree(&g, &c, 1, k))
            .sum();
        assert_eq!(sum, g.total_degree(1).unwrap());
    }
}
