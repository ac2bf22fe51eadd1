//! Two-color constructions for regular graphs and for graphs of maximum
//! degree three.
//!
//! The regular half ([`regular_layered_tlir2`]) peels the graph into layers
//! of maximum independent sets and realizes one red-degree target per layer.
//! The subcubic half ([`subcubic_tlir2`]) shrinks the graph through a fixed
//! menu of local reductions ([`find_reduction`]) until a base case remains,
//! then lifts the coloring back across each reduction.  Every lift is
//! re-verified from scratch; a lift that does not produce a valid coloring
//! is reported as [`Error::InternalInvariant`] rather than papered over.

use std::collections::{BTreeMap, BTreeSet};

use crate::bipartite::{bipartite_tlir2, Bipartition};
use crate::classify::bipartition_sets;
use crate::coloring::{is_valid_tlir, other, total_color_degree, verify_tlir, TotalColoring, BLUE, RED};
use crate::error::{Error, Result};
use crate::graph::{TotalGraph, VertexId};
use crate::mis::max_independent_set;
use crate::oracle::{complete_partial_tlir, Element};

/// A partition of the vertices into successive maximum independent sets.
///
/// Layer `0` is a maximum independent set of the whole graph, layer `i` a
/// maximum independent set of what is left after the first `i` layers are
/// removed.  Every vertex appears in exactly one layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    /// The layers in peel order; every layer is nonempty.
    pub layers: Vec<BTreeSet<VertexId>>,
    /// Layer index of each vertex.
    pub index: BTreeMap<VertexId, usize>,
}

impl Layering {
    fn from_seed(g: &TotalGraph, v0: BTreeSet<VertexId>) -> Layering {
        let mut layers = Vec::new();
        let mut residual = g.clone();
        let mut seed = Some(v0);
        while residual.vertex_count() > 0 {
            let layer = match seed.take() {
                Some(s) => s,
                None => max_independent_set(&residual, &BTreeSet::new()),
            };
            for &v in &layer {
                residual.remove_vertex(v);
            }
            layers.push(layer);
        }
        let index = layers
            .iter()
            .enumerate()
            .flat_map(|(i, layer)| layer.iter().map(move |&v| (v, i)))
            .collect();
        Layering { layers, index }
    }
}

/// Colors a `d`-regular graph with red and blue so that a vertex in layer
/// `i` of the independent-set layering ends up with total red degree
/// `d + 1 - i`.
///
/// Adjacent vertices always sit in different layers, so their red degrees
/// differ and the coloring is valid with two colors.  The first layer is
/// chosen among all maximum independent sets to overlap `avoid` as little
/// as possible; later layers are unconstrained.
///
/// # Errors
///
/// [`Error::ClassPrecondition`] when the graph is empty or not regular, and
/// [`Error::Precondition`] when some vertex is empty.
pub fn regular_layered_tlir2(g: &TotalGraph, avoid: &BTreeSet<VertexId>) -> Result<TotalColoring> {
    regular_layered_with_layers(g, avoid).map(|(c, _)| c)
}

/// Same as [`regular_layered_tlir2`], but also returns the layering that
/// drove the red-degree targets.
pub fn regular_layered_with_layers(
    g: &TotalGraph,
    avoid: &BTreeSet<VertexId>,
) -> Result<(TotalColoring, Layering)> {
    check_regular(g)?;
    let v0 = max_independent_set(g, avoid);
    layered_from_v0(g, v0)
}

fn check_regular(g: &TotalGraph) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::ClassPrecondition("the graph has no vertices".into()));
    }
    if !g.all_full() {
        return Err(Error::Precondition(
            "every vertex must carry a color slot".into(),
        ));
    }
    let d = g.degree(g.vertices().next().expect("nonempty"));
    if g.vertices().any(|v| g.degree(v) != d) {
        return Err(Error::ClassPrecondition(
            "vertex degrees are not all equal".into(),
        ));
    }
    Ok(d)
}

/// Builds the layered coloring from a caller-supplied first layer.  The
/// caller guarantees that `v0` is a maximum independent set; the remaining
/// layers are peeled internally.
pub(crate) fn layered_from_v0(
    g: &TotalGraph,
    v0: BTreeSet<VertexId>,
) -> Result<(TotalColoring, Layering)> {
    let d = check_regular(g)?;
    let layering = Layering::from_seed(g, v0);
    let mut targets = BTreeMap::new();
    for (&v, &i) in &layering.index {
        if i > d {
            return Err(Error::InternalInvariant(format!(
                "vertex {v} sits in layer {i} of a {d}-regular graph"
            )));
        }
        targets.insert(v, (d + 1 - i) as u32);
    }
    // Peel order makes a good search order: the first layer is fully forced
    // to red, which cascades into the later, looser layers.
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|v| (layering.index[v], *v));
    let c = color_to_red_targets(g, &targets, &order).ok_or_else(|| {
        Error::InternalInvariant("no red-blue coloring meets the layer targets".into())
    })?;
    for (&v, &t) in &targets {
        if total_color_degree(g, &c, v, RED) != t {
            return Err(Error::InternalInvariant(format!(
                "vertex {v} missed its red-degree target {t}"
            )));
        }
    }
    let issues = verify_tlir(g, &c, true);
    if !issues.is_empty() {
        return Err(Error::InternalInvariant(format!(
            "layered coloring is invalid: {:?}",
            issues[0]
        )));
    }
    Ok((c, layering))
}

/// Backtracking search for a red-blue total coloring in which every vertex
/// hits an exact total red degree.  `order` lists every vertex exactly once;
/// each vertex's own color slot and its edges to earlier vertices are decided
/// when the vertex's block is reached.  Red is tried first, so forced choices
/// come out deterministic.
fn color_to_red_targets(
    g: &TotalGraph,
    targets: &BTreeMap<VertexId, u32>,
    order: &[VertexId],
) -> Option<TotalColoring> {
    let pos: BTreeMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut elements = Vec::new();
    for &v in order {
        let mut back: Vec<VertexId> = g.neighbors(v).filter(|u| pos[u] < pos[&v]).collect();
        back.sort_by_key(|u| pos[u]);
        elements.extend(back.into_iter().map(|u| Element::Edge(u, v)));
        elements.push(Element::Vertex(v));
    }
    let mut red: BTreeMap<VertexId, u32> = g.vertices().map(|v| (v, 0)).collect();
    let mut remaining: BTreeMap<VertexId, u32> =
        g.vertices().map(|v| (v, g.degree(v) as u32 + 1)).collect();
    let mut c = TotalColoring::new();
    if assign(g, targets, &elements, 0, &mut red, &mut remaining, &mut c) {
        Some(c)
    } else {
        None
    }
}

fn assign(
    g: &TotalGraph,
    targets: &BTreeMap<VertexId, u32>,
    elements: &[Element],
    at: usize,
    red: &mut BTreeMap<VertexId, u32>,
    remaining: &mut BTreeMap<VertexId, u32>,
    c: &mut TotalColoring,
) -> bool {
    let Some(&el) = elements.get(at) else {
        return true;
    };
    let touched: Vec<VertexId> = match el {
        Element::Vertex(v) => vec![v],
        Element::Edge(u, v) => vec![u, v],
    };
    'colors: for color in [RED, BLUE] {
        for &w in &touched {
            *remaining.get_mut(&w).expect("known vertex") -= 1;
            if color == RED {
                *red.get_mut(&w).expect("known vertex") += 1;
            }
        }
        let feasible = touched
            .iter()
            .all(|w| red[w] <= targets[w] && targets[w] <= red[w] + remaining[w]);
        if feasible {
            match el {
                Element::Vertex(v) => c.set_vertex(v, color),
                Element::Edge(u, v) => c.set_edge(u, v, color),
            }
            if assign(g, targets, elements, at + 1, red, remaining, c) {
                return true;
            }
            match el {
                Element::Vertex(v) => c.uncolor_vertex(v),
                Element::Edge(u, v) => c.uncolor_edge(u, v),
            }
        }
        for &w in &touched {
            *remaining.get_mut(&w).expect("known vertex") += 1;
            if color == RED {
                *red.get_mut(&w).expect("known vertex") -= 1;
            }
        }
        if !feasible {
            continue 'colors;
        }
    }
    false
}

/// The local patterns that shrink a subcubic graph toward a base case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionKind {
    /// A tree hangs off `anchor`; the tree minus the anchor is removed and
    /// reattached afterwards.
    PendantTree { anchor: VertexId },
    /// Two adjacent degree-two vertices `x[1]`, `x[2]` on a path
    /// `x[0]-x[1]-x[2]-x[3]` whose ends are distinct and nonadjacent; the
    /// interior pair is removed and the ends are bridged.
    TwoPath { x: [VertexId; 4] },
    /// The same path closes into a four-cycle and both ends have degree
    /// three; the interior pair is removed.
    SquareBothCubic { x: [VertexId; 4] },
    /// The path closes into a four-cycle, `x[0]` has degree three and
    /// `x[3]` degree two; all three degree-two vertices are removed.
    SquarePendant { x: [VertexId; 4] },
    /// The path closes into a triangle at a degree-three apex `x[0]`; the
    /// two degree-two vertices are removed.
    TriangleApex { x: [VertexId; 3] },
    /// Every degree-two vertex is isolated from the others; each gets a
    /// five-vertex gadget that raises it to degree three, making the whole
    /// graph cubic.
    WGadget { gadgets: Vec<Gadget> },
}

/// One attached gadget: a four-clique with one edge subdivided by a hub,
/// joined to the host vertex `x` through the hub `w[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub x: VertexId,
    /// `w[0]` is the hub; `w[1]`, `w[2]` are the subdivided edge's ends;
    /// `w[3]`, `w[4]` complete the clique.
    pub w: [VertexId; 5],
}

impl Gadget {
    fn edges(&self) -> [(VertexId, VertexId); 8] {
        let [w0, w1, w2, w3, w4] = self.w;
        [
            (self.x, w0),
            (w0, w1),
            (w0, w2),
            (w1, w3),
            (w1, w4),
            (w2, w3),
            (w2, w4),
            (w3, w4),
        ]
    }
}

/// A reversible graph surgery: the vertices and edges it removes and adds,
/// together with the pattern that triggered it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub kind: ReductionKind,
    pub removed_vertices: BTreeSet<VertexId>,
    /// Every removed edge has at least one endpoint in `removed_vertices`,
    /// recorded so [`Reduction::undo`] can restore them.
    pub removed_edges: Vec<(VertexId, VertexId)>,
    pub added_vertices: BTreeSet<VertexId>,
    pub added_edges: Vec<(VertexId, VertexId)>,
}

impl Reduction {
    fn new(kind: ReductionKind) -> Reduction {
        Reduction {
            kind,
            removed_vertices: BTreeSet::new(),
            removed_edges: Vec::new(),
            added_vertices: BTreeSet::new(),
            added_edges: Vec::new(),
        }
    }

    fn record_removals(&mut self, g: &TotalGraph) {
        self.removed_edges = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| {
                self.removed_vertices.contains(&u) || self.removed_vertices.contains(&v)
            })
            .collect();
    }

    /// Performs the surgery on a copy of `g`.
    ///
    /// # Errors
    ///
    /// [`Error::Input`] when the recorded vertices and edges do not match
    /// the graph.
    pub fn apply(&self, g: &TotalGraph) -> Result<TotalGraph> {
        let mut out = g.clone();
        for &v in &self.removed_vertices {
            if !out.has_vertex(v) {
                return Err(Error::Input(format!("vertex {v} to remove is missing")));
            }
            out.remove_vertex(v);
        }
        for &v in &self.added_vertices {
            if out.has_vertex(v) {
                return Err(Error::Input(format!("vertex {v} to add already exists")));
            }
            out.add_vertex(v, true);
        }
        for &(u, v) in &self.added_edges {
            out.add_edge(u, v)?;
        }
        Ok(out)
    }

    /// Reverses [`Reduction::apply`]; `undo(apply(g)) == g`.
    ///
    /// # Errors
    ///
    /// [`Error::Input`] when `reduced` is not the result of applying this
    /// reduction.
    pub fn undo(&self, reduced: &TotalGraph) -> Result<TotalGraph> {
        let mut out = reduced.clone();
        for &(u, v) in &self.added_edges {
            if !out.has_edge(u, v) {
                return Err(Error::Input(format!("edge ({u}, {v}) to drop is missing")));
            }
        }
        for &v in &self.added_vertices {
            if !out.has_vertex(v) {
                return Err(Error::Input(format!("vertex {v} to drop is missing")));
            }
            out.remove_vertex(v);
        }
        for &(u, v) in &self.added_edges {
            // Edges between surviving vertices; gadget-internal ones went
            // away with their vertices.
            if out.has_edge(u, v) {
                out.remove_edge(u, v);
            }
        }
        for &v in &self.removed_vertices {
            if out.has_vertex(v) {
                return Err(Error::Input(format!("vertex {v} to restore already exists")));
            }
            out.add_vertex(v, true);
        }
        for &(u, v) in &self.removed_edges {
            out.add_edge(u, v)?;
        }
        Ok(out)
    }
}

/// Finds the first applicable reduction for a connected subcubic graph, in
/// a fixed priority order: split off a pendant tree, then handle a pair of
/// adjacent degree-two vertices (bridging, square, or triangle pattern,
/// depending on how the pattern closes), and finally attach gadgets to the
/// remaining pairwise nonadjacent degree-two vertices.
///
/// Regular graphs (including cycles and cubic graphs), single vertices, and
/// trees without an applicable pattern yield `None`; those are base cases
/// handled elsewhere.
pub fn find_reduction(g: &TotalGraph) -> Option<Reduction> {
    let n = g.vertex_count();
    if n <= 1 {
        return None;
    }
    let first_degree = g.degree(g.vertices().next()?);
    if g.vertices().all(|v| g.degree(v) == first_degree) {
        return None;
    }

    // Pendant tree: strip degree-at-most-one vertices to find the core; a
    // nonempty core with stripped vertices next to it gives an anchor.
    let mut core = g.clone();
    loop {
        let strip: Vec<VertexId> = core.vertices().filter(|&v| core.degree(v) <= 1).collect();
        if strip.is_empty() {
            break;
        }
        for v in strip {
            core.remove_vertex(v);
        }
    }
    if core.vertex_count() > 0 && g.vertices().any(|v| g.degree(v) == 1) {
        let anchor = core
            .vertices()
            .find(|&v| g.neighbors(v).any(|u| !core.has_vertex(u)))
            .expect("a stripped vertex hangs off some core vertex");
        // Collect the stripped subtree reachable from the anchor.
        let mut tree = BTreeSet::new();
        let mut queue: Vec<VertexId> =
            g.neighbors(anchor).filter(|u| !core.has_vertex(*u)).collect();
        while let Some(u) = queue.pop() {
            if tree.insert(u) {
                queue.extend(g.neighbors(u).filter(|w| !core.has_vertex(*w) && !tree.contains(w)));
            }
        }
        let mut r = Reduction::new(ReductionKind::PendantTree { anchor });
        r.removed_vertices = tree;
        r.record_removals(g);
        return Some(r);
    }

    // Adjacent degree-two pair, smallest ids first.
    let two: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    for &x1 in &two {
        let Some(x2) = g.neighbors(x1).filter(|&u| g.degree(u) == 2).min() else {
            continue;
        };
        let x0 = g.neighbors(x1).find(|&u| u != x2).expect("degree two");
        let x3 = g.neighbors(x2).find(|&u| u != x1).expect("degree two");
        if x0 == x3 {
            debug_assert_eq!(g.degree(x0), 3, "a degree-two apex would make a plain cycle");
            let mut r = Reduction::new(ReductionKind::TriangleApex { x: [x0, x1, x2] });
            r.removed_vertices = [x1, x2].into();
            r.record_removals(g);
            return Some(r);
        }
        if g.has_edge(x0, x3) {
            let (d0, d3) = (g.degree(x0), g.degree(x3));
            debug_assert!(d0 == 3 || d3 == 3, "two degree-two ends would make a plain cycle");
            let mut r = if d0 == 3 && d3 == 3 {
                let mut r = Reduction::new(ReductionKind::SquareBothCubic { x: [x0, x1, x2, x3] });
                r.removed_vertices = [x1, x2].into();
                r
            } else {
                // Orient the pattern so the degree-three end comes first.
                let x = if d0 == 3 { [x0, x1, x2, x3] } else { [x3, x2, x1, x0] };
                let mut r = Reduction::new(ReductionKind::SquarePendant { x });
                r.removed_vertices = [x[1], x[2], x[3]].into();
                r
            };
            r.record_removals(g);
            return Some(r);
        }
        let mut r = Reduction::new(ReductionKind::TwoPath { x: [x0, x1, x2, x3] });
        r.removed_vertices = [x1, x2].into();
        r.record_removals(g);
        r.added_edges.push((x0, x3));
        return Some(r);
    }

    // No degree-one vertex survives the pendant check and no two degree-two
    // vertices are adjacent, so gadgets lift every remaining degree-two
    // vertex to degree three at once.
    if two.is_empty() || g.vertices().any(|v| g.degree(v) < 2) {
        return None;
    }
    let mut next = g.vertices().max().expect("nonempty") + 1;
    let mut gadgets = Vec::new();
    let mut r = Reduction::new(ReductionKind::WGadget { gadgets: Vec::new() });
    for &x in &two {
        let w = [next, next + 1, next + 2, next + 3, next + 4];
        next += 5;
        let gadget = Gadget { x, w };
        r.added_vertices.extend(w);
        r.added_edges.extend(gadget.edges());
        gadgets.push(gadget);
    }
    r.kind = ReductionKind::WGadget { gadgets };
    Some(r)
}

/// The termination measure: total degree deficit against three, then the
/// vertex count.  Every recursive reduction strictly shrinks it.
fn measure(g: &TotalGraph) -> (usize, usize) {
    let deficit = g.vertices().map(|v| 3 - g.degree(v)).sum();
    (deficit, g.vertex_count())
}

/// Colors a graph of maximum degree three with red and blue so that every
/// edge's endpoints differ in the edge's own color class.
///
/// Regular components (cycles, cubic graphs, single vertices and edges) go
/// through the layered recipe, trees through the degree-parity recipe, and
/// everything else shrinks by one [`find_reduction`] step at a time, with
/// the coloring lifted back across each step and re-verified.
///
/// # Errors
///
/// [`Error::ClassPrecondition`] when some degree exceeds three and
/// [`Error::Precondition`] when some vertex is empty.
pub fn subcubic_tlir2(g: &TotalGraph) -> Result<TotalColoring> {
    if g.max_degree() > 3 {
        return Err(Error::ClassPrecondition(
            "a vertex of degree four or more is present".into(),
        ));
    }
    if !g.all_full() {
        return Err(Error::Precondition(
            "every vertex must carry a color slot".into(),
        ));
    }
    let mut c = TotalColoring::new();
    for component in g.components() {
        let piece = g.induced(&component);
        c.absorb(&solve_connected(&piece)?);
    }
    let issues = verify_tlir(g, &c, true);
    if let Some(issue) = issues.first() {
        return Err(Error::InternalInvariant(format!(
            "assembled coloring is invalid: {issue:?}"
        )));
    }
    Ok(c)
}

fn solve_connected(g: &TotalGraph) -> Result<TotalColoring> {
    let first = g.vertices().next().expect("components are nonempty");
    if g.vertices().all(|v| g.degree(v) == g.degree(first)) {
        return regular_layered_tlir2(g, &BTreeSet::new());
    }
    if g.is_acyclic() {
        let (x, y) = bipartition_sets(g).expect("forests are bipartite");
        return bipartite_tlir2(g, &Bipartition::new(x, y));
    }
    let reduction = find_reduction(g).ok_or_else(|| {
        Error::InternalInvariant("no reduction applies to a non-regular, non-tree graph".into())
    })?;
    if let ReductionKind::WGadget { ref gadgets } = reduction.kind {
        return solve_with_gadgets(g, &reduction, gadgets);
    }
    let reduced = reduction.apply(g)?;
    if measure(&reduced) >= measure(g) {
        return Err(Error::InternalInvariant(
            "a reduction failed to shrink the termination measure".into(),
        ));
    }
    let inner = subcubic_tlir2(&reduced)?;
    let c = match reduction.kind {
        ReductionKind::PendantTree { anchor } => {
            let mut keep = reduction.removed_vertices.clone();
            keep.insert(anchor);
            let tree = g.induced(&keep);
            crate::bipartite::attach_pendant_tree(&reduced, &inner, anchor, &tree)?
        }
        ReductionKind::TwoPath { x } => lift_two_path(&reduced, x, inner)?,
        ReductionKind::SquareBothCubic { x } => lift_square_both_cubic(g, x, inner)?,
        ReductionKind::SquarePendant { x } => lift_square_pendant(g, &reduced, x, inner)?,
        ReductionKind::TriangleApex { x } => lift_triangle_apex(g, &reduced, x, inner)?,
        ReductionKind::WGadget { .. } => unreachable!("handled above"),
    };
    let issues = verify_tlir(g, &c, true);
    if let Some(issue) = issues.first() {
        return Err(Error::InternalInvariant(format!(
            "a lifted coloring is invalid: {issue:?}"
        )));
    }
    Ok(c)
}

/// Reinserts a bridged-out degree-two pair.  The bridge edge is normalized
/// to red, the endpoint with the larger total red degree is called `x0`,
/// and the interior pair is colored by one of two fixed patterns keyed on
/// the smaller red degree.  Both patterns keep the red degrees of the two
/// ends exactly as they were, so nothing outside the path is disturbed.
fn lift_two_path(
    reduced: &TotalGraph,
    x: [VertexId; 4],
    mut c: TotalColoring,
) -> Result<TotalColoring> {
    let [mut x0, mut x1, mut x2, mut x3] = x;
    if c.edge_color(x0, x3) == Some(BLUE) {
        c.swap_colors();
    }
    let mut a = total_color_degree(reduced, &c, x0, RED);
    let mut b = total_color_degree(reduced, &c, x3, RED);
    if a < b {
        (x0, x3, x1, x2) = (x3, x0, x2, x1);
        (a, b) = (b, a);
    }
    if a == b {
        return Err(Error::InternalInvariant(
            "a red edge joins two vertices of equal red degree".into(),
        ));
    }
    c.uncolor_edge(x0, x3);
    c.set_edge(x0, x1, RED);
    c.set_edge(x2, x3, RED);
    c.set_vertex(x1, BLUE);
    c.set_vertex(x2, RED);
    c.set_edge(x1, x2, if b == 2 { RED } else { BLUE });
    Ok(c)
}

/// Reinserts the degree-two pair of a four-cycle whose other two corners
/// both have degree three.  The two corners, their shared edge, and the
/// whole reinserted path are recolored by exhaustive completion; the rest
/// of the coloring is left untouched.
fn lift_square_both_cubic(
    g: &TotalGraph,
    x: [VertexId; 4],
    mut c: TotalColoring,
) -> Result<TotalColoring> {
    let [x0, x1, x2, x3] = x;
    c.uncolor_vertex(x0);
    c.uncolor_vertex(x3);
    c.uncolor_edge(x0, x3);
    let elements = [
        Element::Edge(x0, x1),
        Element::Edge(x1, x2),
        Element::Edge(x2, x3),
        Element::Edge(x0, x3),
        Element::Vertex(x0),
        Element::Vertex(x1),
        Element::Vertex(x2),
        Element::Vertex(x3),
    ];
    complete_partial_tlir(g, &c, &elements, &[RED, BLUE]).ok_or_else(|| {
        Error::InternalInvariant("no completion recolors the reinserted square".into())
    })
}

/// Reinserts a four-cycle that hangs off a single degree-three corner.
/// The corner's one outside edge is normalized to blue, the cycle edges all
/// go red, and the three new vertices alternate so that red degrees around
/// the cycle alternate between two and three.
fn lift_square_pendant(
    g: &TotalGraph,
    reduced: &TotalGraph,
    x: [VertexId; 4],
    mut c: TotalColoring,
) -> Result<TotalColoring> {
    let [x0, x1, x2, x3] = x;
    let y = reduced
        .neighbors(x0)
        .next()
        .expect("the corner keeps one outside edge");
    if c.edge_color(x0, y) == Some(RED) {
        c.swap_colors();
    }
    let fallback = c.clone();
    for (u, v) in [(x0, x1), (x1, x2), (x2, x3), (x0, x3)] {
        c.set_edge(u, v, RED);
    }
    let across = c.vertex_color(x0).expect("the corner is colored");
    c.set_vertex(x2, across);
    c.set_vertex(x1, other(across));
    c.set_vertex(x3, other(across));
    if is_valid_tlir(g, &c, true) {
        return Ok(c);
    }
    let elements = [
        Element::Edge(x0, x1),
        Element::Edge(x1, x2),
        Element::Edge(x2, x3),
        Element::Edge(x0, x3),
        Element::Vertex(x1),
        Element::Vertex(x2),
        Element::Vertex(x3),
    ];
    complete_partial_tlir(g, &fallback, &elements, &[RED, BLUE]).ok_or_else(|| {
        Error::InternalInvariant("no completion recolors the reinserted pendant square".into())
    })
}

/// Reinserts the two degree-two vertices of a triangle hanging off a
/// degree-three apex.  The apex's one outside edge is normalized to blue,
/// the apex is uncolored, and the triangle is recolored by exhaustive
/// completion.
fn lift_triangle_apex(
    g: &TotalGraph,
    reduced: &TotalGraph,
    x: [VertexId; 3],
    mut c: TotalColoring,
) -> Result<TotalColoring> {
    let [x0, x1, x2] = x;
    let y = reduced
        .neighbors(x0)
        .next()
        .expect("the apex keeps one outside edge");
    if c.edge_color(x0, y) == Some(RED) {
        c.swap_colors();
    }
    c.uncolor_vertex(x0);
    let elements = [
        Element::Edge(x0, x1),
        Element::Edge(x0, x2),
        Element::Edge(x1, x2),
        Element::Vertex(x0),
        Element::Vertex(x1),
        Element::Vertex(x2),
    ];
    complete_partial_tlir(g, &c, &elements, &[RED, BLUE]).ok_or_else(|| {
        Error::InternalInvariant("no completion recolors the reinserted triangle".into())
    })
}

/// Colors a graph whose degree-two vertices are pairwise nonadjacent by
/// making it cubic with one gadget per such vertex, running the layered
/// recipe on the cubic graph, and then deleting the gadgets one at a time.
///
/// The first layer is chosen to overlap the gadgeted vertices as little as
/// possible, and within each gadget the first layer is normalized to the
/// two clique ends of the subdivided edge — both choices keep the later
/// repairs local to the gadgeted vertex and its two neighbors.
fn solve_with_gadgets(
    g: &TotalGraph,
    reduction: &Reduction,
    gadgets: &[Gadget],
) -> Result<TotalColoring> {
    let cubic = reduction.apply(g)?;
    if cubic.vertices().any(|v| cubic.degree(v) != 3) {
        return Err(Error::InternalInvariant(
            "gadget attachment did not produce a cubic graph".into(),
        ));
    }
    let xs: BTreeSet<VertexId> = gadgets.iter().map(|gad| gad.x).collect();
    let mut v0 = max_independent_set(&cubic, &xs);
    for gad in gadgets {
        let picked: Vec<VertexId> = gad.w.iter().copied().filter(|w| v0.contains(w)).collect();
        if picked.len() != 2 {
            return Err(Error::InternalInvariant(format!(
                "a gadget contributes {} vertices to the first layer instead of two",
                picked.len()
            )));
        }
        let ends = [gad.w[1], gad.w[2]];
        if v0.contains(&gad.x) {
            if picked != ends {
                return Err(Error::InternalInvariant(
                    "a gadget with its host in the first layer must contribute the clique ends"
                        .into(),
                ));
            }
        } else if picked != ends {
            // Any two independent gadget vertices can be swapped for the
            // clique ends: the swap keeps the set independent, maximum, and
            // no closer to the avoided hosts.
            for w in picked {
                v0.remove(&w);
            }
            v0.extend(ends);
        }
    }
    let (mut c, layering) = layered_from_v0(&cubic, v0)?;
    for (&v, &i) in &layering.index {
        if total_color_degree(&cubic, &c, v, RED) != (4 - i) as u32 {
            return Err(Error::InternalInvariant(format!(
                "vertex {v} in layer {i} missed red degree {}",
                4 - i
            )));
        }
    }

    let mut work = cubic;
    for gad in gadgets {
        let x = gad.x;
        let neighbors: Vec<VertexId> = work.neighbors(x).filter(|&u| u != gad.w[0]).collect();
        let before: Vec<Snapshot> = neighbors
            .iter()
            .map(|&u| snapshot(&work, &c, x, u))
            .collect();
        for &w in &gad.w {
            let incident: Vec<VertexId> = work.neighbors(w).collect();
            for u in incident {
                c.uncolor_edge(w, u);
            }
            c.uncolor_vertex(w);
            work.remove_vertex(w);
        }
        // Deleting the gadget only changes color degrees at the host, so
        // any new conflict sits on one of the host's two remaining edges.
        if !host_edges_valid(&work, &c, x) {
            repair_host(&work, &mut c, x, &neighbors)?;
        }
        // Whatever the repair did, a neighbor's color degrees may move only
        // by what the repair wrote onto that neighbor's own elements.
        for (&u, was) in neighbors.iter().zip(&before) {
            let now = snapshot(&work, &c, x, u);
            if now.red != was.red + was.shift(&now, RED)
                || now.blue != was.blue + was.shift(&now, BLUE)
            {
                return Err(Error::InternalInvariant(
                    "a gadget repair leaked beyond the host's elements".into(),
                ));
            }
        }
    }
    if work != *g {
        return Err(Error::InternalInvariant(
            "gadget removal did not restore the original graph".into(),
        ));
    }
    let issues = verify_tlir(g, &c, true);
    if let Some(issue) = issues.first() {
        return Err(Error::InternalInvariant(format!(
            "gadget-removal coloring is invalid: {issue:?}"
        )));
    }
    Ok(c)
}

/// The color degrees of a host's neighbor, together with the two elements a
/// repair is allowed to rewrite on it: the edge to the host and the
/// neighbor's own vertex color.
struct Snapshot {
    red: i64,
    blue: i64,
    edge: Option<u32>,
    vertex: Option<u32>,
}

fn snapshot(g: &TotalGraph, c: &TotalColoring, x: VertexId, u: VertexId) -> Snapshot {
    Snapshot {
        red: total_color_degree(g, c, u, RED) as i64,
        blue: total_color_degree(g, c, u, BLUE) as i64,
        edge: c.edge_color(x, u),
        vertex: c.vertex_color(u),
    }
}

impl Snapshot {
    /// Color-degree change in class `k` implied by rewriting the host edge
    /// and the vertex color between two snapshots.
    fn shift(&self, now: &Snapshot, k: u32) -> i64 {
        let delta = |old: Option<u32>, new: Option<u32>| {
            i64::from(new == Some(k)) - i64::from(old == Some(k))
        };
        delta(self.edge, now.edge) + delta(self.vertex, now.vertex)
    }
}

fn host_edges_valid(g: &TotalGraph, c: &TotalColoring, x: VertexId) -> bool {
    g.neighbors(x).all(|u| {
        let k = c.edge_color(x, u).expect("edges around a host stay colored");
        total_color_degree(g, c, x, k) != total_color_degree(g, c, u, k)
    })
}

/// Repairs a host left in conflict by a gadget removal, cheapest move
/// first.  Flipping the host's own color settles a conflict with one
/// neighbor.  When both colors clash, the named rotation — a blue
/// degree-two-red neighbor goes red, the shared edge blue, the host red —
/// resolves the clash while leaving that neighbor's color degrees exactly
/// as they were.  Hosts that share a neighbor can invalidate each other's
/// rotation shape, so the final rung recolors the host's vertex and both
/// edges exhaustively, re-verified on every edge around the host and its
/// neighbors.
fn repair_host(
    g: &TotalGraph,
    c: &mut TotalColoring,
    x: VertexId,
    neighbors: &[VertexId],
) -> Result<()> {
    let original = c.vertex_color(x).expect("hosts stay colored");
    c.set_vertex(x, other(original));
    if host_edges_valid(g, c, x) {
        return Ok(());
    }
    c.set_vertex(x, original);
    let rotatable = neighbors.iter().copied().find(|&u| {
        total_color_degree(g, c, u, RED) == 2 && c.vertex_color(u) == Some(BLUE)
    });
    if let Some(low) = rotatable {
        if neighbors.iter().all(|&u| c.edge_color(x, u) == Some(RED)) {
            c.set_vertex(low, RED);
            c.set_edge(x, low, BLUE);
            c.set_vertex(x, RED);
            if host_edges_valid(g, c, x) && host_edges_valid(g, c, low) {
                return Ok(());
            }
            c.set_vertex(low, BLUE);
            c.set_edge(x, low, RED);
            c.set_vertex(x, original);
        }
    }
    c.uncolor_vertex(x);
    let mut elements = vec![Element::Vertex(x)];
    for &u in neighbors {
        c.uncolor_edge(x, u);
        elements.push(Element::Edge(x, u));
    }
    *c = complete_partial_tlir(g, c, &elements, &[RED, BLUE]).ok_or_else(|| {
        Error::InternalInvariant("no local recoloring fits the host after gadget removal".into())
    })?;
    Ok(())
}
