//! Exhaustive desk-scale solvers: minimum colors for locally irregular total
//! colorings, locally irregular edge colorings, and acyclic vertex colorings,
//! plus exhaustive completion of partial colorings over a small element set.
//!
//! These are ground truth for the constructive algorithms. They trade speed
//! for trustworthiness: tiny search cores that delegate every acceptance
//! check to the verifiers in [`crate::coloring`].

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::coloring::{
    total_color_degree, EdgeColoring, TotalColoring, VertexColoring,
};
use crate::graph::{ekey, TotalGraph, VertexId};

/// Limits for one exact-search call: the largest palette to try, and optional
/// node/time caps shared across the whole call.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_colors: u32,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn colors(max_colors: u32) -> Self {
        assert!(max_colors >= 1);
        Self {
            max_colors,
            node_limit: None,
            time_limit: None,
        }
    }

    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        assert!(nodes >= 1);
        self.node_limit = Some(nodes);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        assert!(limit > Duration::ZERO);
        self.time_limit = Some(limit);
        self
    }
}

/// A colorable element of a total graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Edge(VertexId, VertexId),
}

/// Outcome of the minimum-TLIR search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TlirOracle {
    /// Smallest color count together with a witness coloring.
    Min(u32, TotalColoring),
    /// The budget ran out (or no palette within `max_colors` works).
    Unknown,
}

/// Outcome of the minimum locally-irregular edge-coloring search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LirOracle {
    Min(u32, EdgeColoring),
    /// No palette of any size works: certified by exhausting every k up to
    /// the edge count, beyond which some class would be a lone edge and lone
    /// edges always tie.
    Uncolorable,
    Unknown,
}

/// Outcome of the acyclic-chromatic-number search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AcyclicOracle {
    Min(u32, VertexColoring),
    Unknown,
}

/// Shared accounting for one oracle call.
struct Gas {
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Gas {
    fn new(budget: &SearchBudget) -> Self {
        Self {
            nodes: 0,
            node_limit: budget.node_limit,
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            exhausted: false,
        }
    }

    /// Accounts one search node; false once the budget is gone.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.node_limit.is_some_and(|limit| self.nodes > limit) {
            self.exhausted = true;
        }
        // Clock checks are amortized; node budgets stay exact.
        if self.nodes & 0xff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }
}

enum Outcome {
    Found,
    Exhausted,
    OutOfGas,
}

/// Backtracking searcher for locally irregular total colorings.
///
/// Elements are assigned vertex-by-vertex: a vertex's own color first, then
/// its edges toward already-processed vertices. That way every vertex's class
/// degrees become final at a known depth, and each edge is checked at the
/// earliest depth where both endpoint degrees are final — orders of magnitude
/// earlier than any schedule that leaves all vertex colors to the end.
struct TlirSearch<'a> {
    g: &'a TotalGraph,
    k: u32,
    order: Vec<Element>,
    /// Edges whose endpoint degrees are final once position `d` is assigned.
    check_after: Vec<Vec<(VertexId, VertexId)>>,
}

impl<'a> TlirSearch<'a> {
    fn new(g: &'a TotalGraph, k: u32) -> Self {
        let verts: Vec<VertexId> = g.vertices().collect();
        let pos_of: std::collections::BTreeMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut order = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            if g.is_full(v) {
                order.push(Element::Vertex(v));
            }
            for u in g.neighbors(v) {
                if pos_of[&u] < i {
                    order.push(Element::Edge(u, v));
                }
            }
        }
        // Depth after which a vertex's class degrees can no longer change.
        let mut final_at: std::collections::BTreeMap<VertexId, usize> = Default::default();
        for (d, el) in order.iter().enumerate() {
            match *el {
                Element::Vertex(v) => {
                    final_at.insert(v, d);
                }
                Element::Edge(u, v) => {
                    final_at.insert(u, d.max(final_at.get(&u).copied().unwrap_or(0)));
                    final_at.insert(v, d.max(final_at.get(&v).copied().unwrap_or(0)));
                }
            }
        }
        let mut check_after = vec![Vec::new(); order.len()];
        for (u, v) in g.edges() {
            let d = final_at[&u].max(final_at[&v]);
            check_after[d].push((u, v));
        }
        Self {
            g,
            k,
            order,
            check_after,
        }
    }

    fn run(&self, c: &mut TotalColoring, gas: &mut Gas) -> Outcome {
        self.step(0, 0, c, gas)
    }

    fn step(&self, d: usize, used_max: u32, c: &mut TotalColoring, gas: &mut Gas) -> Outcome {
        if d == self.order.len() {
            return Outcome::Found;
        }
        // Palettes are interchangeable, so only allow one fresh color per
        // depth: assignments are forced into first-use canonical form.
        let cap = self.k.min(used_max + 1);
        for color in 1..=cap {
            if !gas.tick() {
                return Outcome::OutOfGas;
            }
            match self.order[d] {
                Element::Vertex(v) => c.set_vertex(v, color),
                Element::Edge(u, v) => c.set_edge(u, v, color),
            }
            let ok = self.check_after[d].iter().all(|&(u, v)| {
                match c.edge_color(u, v) {
                    Some(class) => {
                        total_color_degree(self.g, c, u, class)
                            != total_color_degree(self.g, c, v, class)
                    }
                    None => true,
                }
            });
            if ok {
                match self.step(d + 1, used_max.max(color), c, gas) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            match self.order[d] {
                Element::Vertex(v) => c.uncolor_vertex(v),
                Element::Edge(u, v) => c.uncolor_edge(u, v),
            }
        }
        Outcome::Exhausted
    }
}

/// Smallest number of colors in a locally irregular total coloring, searched
/// exhaustively for k = 1, 2, … within the budget.
pub fn exact_tlir(g: &TotalGraph, budget: &SearchBudget) -> TlirOracle {
    let element_count = g.edge_count() + g.vertices().filter(|&v| g.is_full(v)).count();
    if element_count == 0 {
        return TlirOracle::Min(0, TotalColoring::new());
    }
    let mut gas = Gas::new(budget);
    for k in 1..=budget.max_colors {
        let search = TlirSearch::new(g, k);
        let mut c = TotalColoring::new();
        match search.run(&mut c, &mut gas) {
            Outcome::Found => return TlirOracle::Min(k, c),
            Outcome::Exhausted => {}
            Outcome::OutOfGas => return TlirOracle::Unknown,
        }
    }
    TlirOracle::Unknown
}

/// Smallest number of colors in a locally irregular edge coloring (degrees
/// count incident class edges only). Runs the total-coloring search over a
/// copy of the graph with every vertex marked empty, which removes vertex
/// elements and vertex terms at once.
pub fn exact_lir(g: &TotalGraph, budget: &SearchBudget) -> LirOracle {
    let m = g.edge_count() as u32;
    if m == 0 {
        return LirOracle::Min(0, EdgeColoring::new());
    }
    let mut hollow = TotalGraph::new();
    for v in g.vertices() {
        hollow.add_vertex(v, false);
    }
    for (u, v) in g.edges() {
        hollow.add_edge(u, v).expect("copied edge");
    }
    let mut gas = Gas::new(budget);
    let cap = budget.max_colors.min(m);
    for k in 1..=cap {
        let search = TlirSearch::new(&hollow, k);
        let mut c = TotalColoring::new();
        match search.run(&mut c, &mut gas) {
            Outcome::Found => return LirOracle::Min(k, c.edge_colors().collect()),
            Outcome::Exhausted => {}
            Outcome::OutOfGas => return LirOracle::Unknown,
        }
    }
    if budget.max_colors >= m {
        // Every k up to the edge count is exhausted; more colors would force
        // a lone-edge class, and a lone edge ties 1–1.
        LirOracle::Uncolorable
    } else {
        LirOracle::Unknown
    }
}

/// Smallest number of colors in a proper vertex coloring where every two
/// classes induce a forest.
pub fn exact_acyclic(g: &TotalGraph, budget: &SearchBudget) -> AcyclicOracle {
    let verts: Vec<VertexId> = g.vertices().collect();
    if verts.is_empty() {
        return AcyclicOracle::Min(0, VertexColoring::new());
    }
    let mut gas = Gas::new(budget);
    for k in 1..=budget.max_colors {
        let mut vc = VertexColoring::new();
        match acyclic_step(g, &verts, 0, k, 0, &mut vc, &mut gas) {
            Outcome::Found => return AcyclicOracle::Min(k, vc),
            Outcome::Exhausted => {}
            Outcome::OutOfGas => return AcyclicOracle::Unknown,
        }
    }
    AcyclicOracle::Unknown
}

fn acyclic_step(
    g: &TotalGraph,
    verts: &[VertexId],
    d: usize,
    k: u32,
    used_max: u32,
    vc: &mut VertexColoring,
    gas: &mut Gas,
) -> Outcome {
    if d == verts.len() {
        return Outcome::Found;
    }
    let v = verts[d];
    let cap = k.min(used_max + 1);
    for color in 1..=cap {
        if !gas.tick() {
            return Outcome::OutOfGas;
        }
        if g.neighbors(v).any(|u| vc.get(&u) == Some(&color)) {
            continue; // properness
        }
        if closes_bicolored_cycle(g, vc, v, color) {
            continue;
        }
        vc.insert(v, color);
        match acyclic_step(g, verts, d + 1, k, used_max.max(color), vc, gas) {
            Outcome::Exhausted => {}
            other => {
                if matches!(other, Outcome::OutOfGas) {
                    vc.remove(&v);
                }
                return other;
            }
        }
        vc.remove(&v);
    }
    Outcome::Exhausted
}

/// Would coloring `v` with `a` close a cycle inside some two-class subgraph?
/// Since each partial state is kept cycle-free, a new cycle must pass through
/// `v`, i.e. two of `v`'s b-colored neighbors are already connected inside
/// the {a, b} subgraph avoiding `v`.
fn closes_bicolored_cycle(
    g: &TotalGraph,
    vc: &VertexColoring,
    v: VertexId,
    a: u32,
) -> bool {
    let b_colors: BTreeSet<u32> = g
        .neighbors(v)
        .filter_map(|u| vc.get(&u).copied())
        .filter(|&b| b != a)
        .collect();
    for b in b_colors {
        let targets: Vec<VertexId> = g
            .neighbors(v)
            .filter(|u| vc.get(u) == Some(&b))
            .collect();
        if targets.len() < 2 {
            continue;
        }
        let in_sub = |w: VertexId| {
            w != v && matches!(vc.get(&w), Some(&c) if c == a || c == b)
        };
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        for &start in &targets {
            if seen.contains(&start) {
                // Reached from an earlier target: two targets share a
                // component.
                return true;
            }
            let mut stack = vec![start];
            while let Some(w) = stack.pop() {
                if !seen.insert(w) {
                    continue;
                }
                stack.extend(g.neighbors(w).filter(|&x| in_sub(x) && !seen.contains(&x)));
            }
        }
    }
    false
}

/// Exhaustively completes `c` on exactly the given uncolored elements using
/// colors from `palette`, so that afterwards every colored edge incident to
/// the touched vertices passes the local-irregularity check. Elements are
/// assigned edges first, then vertices, ascending; palette colors are tried
/// in the given order; the first valid completion wins. `None` when no
/// assignment works.
pub fn complete_partial_tlir(
    g: &TotalGraph,
    c: &TotalColoring,
    elements: &[Element],
    palette: &[u32],
) -> Option<TotalColoring> {
    let mut touched: BTreeSet<VertexId> = BTreeSet::new();
    for el in elements {
        match *el {
            Element::Vertex(v) => {
                assert!(g.has_vertex(v) && g.is_full(v), "vertex element {v} must be full");
                assert!(c.vertex_color(v).is_none(), "vertex element {v} must be uncolored");
                touched.insert(v);
            }
            Element::Edge(u, v) => {
                assert!(g.has_edge(u, v), "edge element ({u}, {v}) must exist");
                assert!(c.edge_color(u, v).is_none(), "edge element ({u}, {v}) must be uncolored");
                touched.insert(u);
                touched.insert(v);
            }
        }
    }
    let mut order: Vec<Element> = elements
        .iter()
        .map(|el| match *el {
            Element::Edge(u, v) => Element::Edge(ekey(u, v).0, ekey(u, v).1),
            other => other,
        })
        .collect();
    order.sort_by_key(|el| match *el {
        Element::Edge(u, v) => (0, u, v),
        Element::Vertex(v) => (1, v, 0),
    });
    order.dedup();
    assert_eq!(order.len(), elements.len(), "elements must be distinct");

    // Every affected edge is checked at the depth where the last element
    // influencing either endpoint is assigned.
    let influences = |el: &Element, w: VertexId| match *el {
        Element::Vertex(v) => v == w,
        Element::Edge(u, v) => u == w || v == w,
    };
    let mut check_after: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); order.len()];
    for (eu, ev) in g.edges() {
        if !touched.contains(&eu) && !touched.contains(&ev) {
            continue;
        }
        let last = order
            .iter()
            .rposition(|el| influences(el, eu) || influences(el, ev));
        if let Some(d) = last {
            check_after[d].push((eu, ev));
        }
    }

    let mut trial = c.clone();
    fn step(
        g: &TotalGraph,
        order: &[Element],
        check_after: &[Vec<(VertexId, VertexId)>],
        palette: &[u32],
        d: usize,
        trial: &mut TotalColoring,
    ) -> bool {
        if d == order.len() {
            return true;
        }
        for &color in palette {
            match order[d] {
                Element::Vertex(v) => trial.set_vertex(v, color),
                Element::Edge(u, v) => trial.set_edge(u, v, color),
            }
            let ok = check_after[d].iter().all(|&(u, v)| match trial.edge_color(u, v) {
                Some(class) => {
                    total_color_degree(g, trial, u, class)
                        != total_color_degree(g, trial, v, class)
                }
                None => true,
            });
            if ok && step(g, order, check_after, palette, d + 1, trial) {
                return true;
            }
            match order[d] {
                Element::Vertex(v) => trial.uncolor_vertex(v),
                Element::Edge(u, v) => trial.uncolor_edge(u, v),
            }
        }
        false
    }
    if order.is_empty() {
        // Nothing to assign; the coloring is returned unchanged.
        return Some(trial);
    }
    step(g, &order, &check_after, palette, 0, &mut trial).then_some(trial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{bow_tie, butterfly};
    use crate::coloring::{is_valid_tlir, verify_acyclic, verify_proper, verify_tlir};

    fn path(n: u32) -> TotalGraph {
        let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        TotalGraph::from_edges(n, &edges)
    }

    fn cycle(n: u32) -> TotalGraph {
        let mut edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        TotalGraph::from_edges(n, &edges)
    }

    fn complete(n: u32) -> TotalGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        TotalGraph::from_edges(n, &edges)
    }

    /// Blind reference enumerator: no ordering tricks, no symmetry breaking,
    /// no pruning. Everything the fast search reports is measured against
    /// this on small inputs.
    fn dumb_min_tlir(g: &TotalGraph, kmax: u32) -> Option<u32> {
        let mut elements: Vec<Element> = Vec::new();
        for v in g.vertices().filter(|&v| g.is_full(v)) {
            elements.push(Element::Vertex(v));
        }
        for (u, v) in g.edges() {
            elements.push(Element::Edge(u, v));
        }
        if elements.is_empty() {
            return Some(0);
        }
        for k in 1..=kmax {
            let mut assignment = vec![1u32; elements.len()];
            loop {
                let mut c = TotalColoring::new();
                for (el, &col) in elements.iter().zip(&assignment) {
                    match *el {
                        Element::Vertex(v) => c.set_vertex(v, col),
                        Element::Edge(u, v) => c.set_edge(u, v, col),
                    }
                }
                if verify_tlir(g, &c, true).is_empty() {
                    return Some(k);
                }
                // Odometer increment over {1..k}^n.
                let mut i = 0;
                loop {
                    if i == assignment.len() {
                        break;
                    }
                    if assignment[i] < k {
                        assignment[i] += 1;
                        break;
                    }
                    assignment[i] = 1;
                    i += 1;
                }
                if i == assignment.len() {
                    break;
                }
            }
        }
        None
    }

    fn dumb_min_acyclic(g: &TotalGraph, kmax: u32) -> Option<u32> {
        let verts: Vec<VertexId> = g.vertices().collect();
        for k in 1..=kmax {
            let mut assignment = vec![1u32; verts.len()];
            loop {
                let vc: VertexColoring =
                    verts.iter().zip(&assignment).map(|(&v, &c)| (v, c)).collect();
                if verify_proper(g, &vc).is_none()
                    && verify_acyclic(g, &vc).unwrap().is_none()
                {
                    return Some(k);
                }
                let mut i = 0;
                loop {
                    if i == assignment.len() {
                        break;
                    }
                    if assignment[i] < k {
                        assignment[i] += 1;
                        break;
                    }
                    assignment[i] = 1;
                    i += 1;
                }
                if i == assignment.len() {
                    break;
                }
            }
        }
        None
    }

    #[test]
    fn single_full_vertex_needs_one_color() {
        let g = TotalGraph::with_full_vertices(1);
        match exact_tlir(&g, &SearchBudget::colors(2)) {
            TlirOracle::Min(1, c) => assert!(is_valid_tlir(&g, &c, true)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn p4_needs_two_colors() {
        let g = path(4);
        assert_eq!(dumb_min_tlir(&g, 2), Some(2));
        match exact_tlir(&g, &SearchBudget::colors(3)) {
            TlirOracle::Min(2, c) => assert!(is_valid_tlir(&g, &c, true)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn butterfly_needs_two_total_colors() {
        let g = butterfly();
        assert_eq!(dumb_min_tlir(&g, 2), Some(2));
        match exact_tlir(&g, &SearchBudget::colors(3)) {
            TlirOracle::Min(2, c) => assert!(is_valid_tlir(&g, &c, true)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bow_tie_needs_two_total_colors() {
        // Too large for blind enumeration; one color already fails on the
        // adjacent degree-two triangle vertices, so a verified two-color
        // witness pins the minimum.
        let g = bow_tie();
        match exact_tlir(&g, &SearchBudget::colors(2)) {
            TlirOracle::Min(2, c) => assert!(is_valid_tlir(&g, &c, true)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn stars_are_locally_irregular_as_is() {
        let star = TotalGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(matches!(
            exact_tlir(&star, &SearchBudget::colors(2)),
            TlirOracle::Min(1, _)
        ));
        assert!(matches!(
            exact_lir(&star, &SearchBudget::colors(2)),
            LirOracle::Min(1, _)
        ));
    }

    #[test]
    fn fast_search_matches_blind_enumeration() {
        let samples: Vec<TotalGraph> = vec![
            path(2),
            path(3),
            path(5),
            cycle(3),
            cycle(4),
            cycle(5),
            complete(4),
            butterfly(),
            TotalGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
        ];
        for g in &samples {
            let dumb = dumb_min_tlir(g, 2);
            let fast = match exact_tlir(g, &SearchBudget::colors(2)) {
                TlirOracle::Min(k, c) => {
                    assert!(is_valid_tlir(g, &c, true));
                    Some(k)
                }
                TlirOracle::Unknown => None,
            };
            assert_eq!(fast, dumb, "graph with edges {:?}", g.edges());
        }
    }

    #[test]
    fn empty_vertices_carry_no_vertex_elements() {
        // Path of three vertices whose middle is empty: only the middle
        // vertex's degree separates the edges, so one color cannot work but
        // two can.
        let mut g = TotalGraph::new();
        g.add_vertex(0, true);
        g.add_vertex(1, false);
        g.add_vertex(2, true);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        match exact_tlir(&g, &SearchBudget::colors(3)) {
            TlirOracle::Min(k, c) => {
                assert!(c.vertex_color(1).is_none());
                assert!(is_valid_tlir(&g, &c, true));
                assert_eq!(k, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lone_edge_between_empty_vertices_never_colors() {
        let mut g = TotalGraph::new();
        g.add_vertex(0, false);
        g.add_vertex(1, false);
        g.add_edge(0, 1).unwrap();
        assert_eq!(exact_tlir(&g, &SearchBudget::colors(4)), TlirOracle::Unknown);
    }

    fn assert_locally_irregular(g: &TotalGraph, ec: &EdgeColoring) {
        for (&(u, v), &k) in ec {
            let du = g.neighbors(u).filter(|&w| ec.get(&ekey(u, w)) == Some(&k)).count();
            let dv = g.neighbors(v).filter(|&w| ec.get(&ekey(v, w)) == Some(&k)).count();
            assert_ne!(du, dv, "edge ({u}, {v}) ties in class {k}");
        }
    }

    #[test]
    fn bow_tie_needs_four_edge_colors() {
        let g = bow_tie();
        match exact_lir(&g, &SearchBudget::colors(6)) {
            LirOracle::Min(4, ec) => assert_locally_irregular(&g, &ec),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn butterfly_needs_three_edge_colors() {
        let g = butterfly();
        match exact_lir(&g, &SearchBudget::colors(6)) {
            LirOracle::Min(3, ec) => assert_locally_irregular(&g, &ec),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn a_lone_edge_has_no_irregular_edge_coloring() {
        assert_eq!(
            exact_lir(&path(2), &SearchBudget::colors(4)),
            LirOracle::Uncolorable
        );
    }

    #[test]
    fn low_color_caps_cannot_certify_uncolorability() {
        // P3 has two edges; a cap of 1 color cannot exhaust the certificate
        // bound, and indeed one red class colors P3 (degrees 1 and 2).
        match exact_lir(&path(3), &SearchBudget::colors(1)) {
            LirOracle::Min(1, _) => {}
            other => panic!("unexpected {other:?}"),
        }
        // The odd path P4 needs the full certificate sweep.
        assert_eq!(
            exact_lir(&path(4), &SearchBudget::colors(3)),
            LirOracle::Uncolorable
        );
    }

    #[test]
    fn acyclic_minimums() {
        assert_eq!(dumb_min_acyclic(&path(3), 3), Some(2));
        assert!(matches!(
            exact_acyclic(&path(3), &SearchBudget::colors(3)),
            AcyclicOracle::Min(2, _)
        ));

        assert_eq!(dumb_min_acyclic(&cycle(4), 4), Some(3));
        match exact_acyclic(&cycle(4), &SearchBudget::colors(4)) {
            AcyclicOracle::Min(3, vc) => {
                assert!(verify_proper(&cycle(4), &vc).is_none());
                assert_eq!(verify_acyclic(&cycle(4), &vc).unwrap(), None);
            }
            other => panic!("unexpected {other:?}"),
        }

        assert_eq!(dumb_min_acyclic(&complete(4), 4), Some(4));
        assert!(matches!(
            exact_acyclic(&complete(4), &SearchBudget::colors(5)),
            AcyclicOracle::Min(4, _)
        ));
    }

    #[test]
    fn budgets_cut_searches_short() {
        let g = complete(4);
        assert_eq!(
            exact_tlir(&g, &SearchBudget::colors(2).with_node_limit(3)),
            TlirOracle::Unknown
        );
        assert_eq!(
            exact_acyclic(&g, &SearchBudget::colors(4).with_node_limit(2)),
            AcyclicOracle::Unknown
        );
    }

    #[test]
    fn searches_are_deterministic() {
        let g = bow_tie();
        let a = exact_tlir(&g, &SearchBudget::colors(2));
        let b = exact_tlir(&g, &SearchBudget::colors(2));
        assert_eq!(a, b);
    }

    #[test]
    fn completion_with_no_elements_is_identity() {
        let g = path(2);
        let mut c = TotalColoring::new();
        c.set_vertex(0, 2);
        c.set_vertex(1, 1);
        c.set_edge(0, 1, 1);
        let done = complete_partial_tlir(&g, &c, &[], &[1, 2]).unwrap();
        assert_eq!(done, c);
    }

    #[test]
    fn completion_reports_impossible_palettes() {
        // Both endpoints full, everything forced into one class: the edge
        // sees 2 on both sides.
        let g = path(2);
        let c = TotalColoring::new();
        let elements = [
            Element::Vertex(0),
            Element::Vertex(1),
            Element::Edge(0, 1),
        ];
        assert_eq!(complete_partial_tlir(&g, &c, &elements, &[1]), None);
        assert!(complete_partial_tlir(&g, &c, &elements, &[1, 2]).is_some());
    }

    #[test]
    fn completion_extends_partial_middles() {
        let g = path(4);
        let mut c = TotalColoring::new();
        c.set_vertex(0, 2);
        c.set_vertex(3, 2);
        c.set_edge(0, 1, 1);
        c.set_edge(2, 3, 1);
        let elements = [
            Element::Edge(1, 2),
            Element::Vertex(1),
            Element::Vertex(2),
        ];
        let done = complete_partial_tlir(&g, &c, &elements, &[1, 2]).unwrap();
        assert!(is_valid_tlir(&g, &done, true));
        // Untouched assignments survive.
        assert_eq!(done.vertex_color(0), Some(2));
        assert_eq!(done.edge_color(2, 3), Some(1));
    }

    #[test]
    fn completion_must_not_break_prior_edges() {
        // Vertex 1 is shared with the already-red edge (0,1) whose balance
        // depends on vertex 1 staying red: totals 2 vs 3. A completion that
        // needs vertex 1 blue must be rejected unless the red edge stays
        // irregular; verify against the full verifier for every palette.
        let g = path(3);
        let mut c = TotalColoring::new();
        c.set_vertex(0, 1);
        c.set_edge(0, 1, 1);
        let elements = [Element::Edge(1, 2), Element::Vertex(1), Element::Vertex(2)];
        if let Some(done) = complete_partial_tlir(&g, &c, &elements, &[1, 2]) {
            assert!(verify_tlir(&g, &done, true).is_empty());
        } else {
            panic!("a completion exists for the 3-path");
        }
    }
}
