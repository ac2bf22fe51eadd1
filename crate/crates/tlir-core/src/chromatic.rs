//! Coloring bound driven by a proper vertex coloring: a graph whose
//! vertices fall into k proper color classes gets a locally irregular
//! total coloring with at most 2k−2 colors.
//!
//! The classes are first made *maximal*: every vertex of a later class has
//! a neighbor in each earlier class (vertices that could move down, do).
//! The construction then works through the classes in order, coloring the
//! bipartite graph between one class and everything after it with a fresh
//! color pair via the partial parity recipe, which leaves a matching of
//! edges uncolored to be swept up by later rounds.  The last two classes
//! are finished together with an all-edges-one-color parity coloring whose
//! borrowed outside endpoints are uncolored again afterwards, with a
//! one-vertex repair where that uncovers a tie.

use std::collections::{BTreeMap, BTreeSet};

use crate::bipartite::{
    bipartite_tlir2, monochrome_parity_coloring, partial_bipartite_tlir, Bipartition,
};
use crate::coloring::{total_color_degree, verify_tlir, TotalColoring, BLUE, RED};
use crate::error::{Error, Result};
use crate::graph::{TotalGraph, VertexId};

/// Beyond this many vertices the chromatic number is approximated greedily
/// instead of searched exactly.
const EXACT_LIMIT: usize = 18;

/// An ordered proper partition of the vertices with the downward-neighbor
/// property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperClasses {
    /// The classes in order; every class is nonempty.
    pub classes: Vec<BTreeSet<VertexId>>,
    /// Class position per vertex.
    pub index: BTreeMap<VertexId, usize>,
}

impl ProperClasses {
    /// Checks that the classes partition the vertex set, that no edge runs
    /// inside a class, and that every vertex has a neighbor in each
    /// earlier class.
    pub fn validate(&self, g: &TotalGraph) -> Result<()> {
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::Precondition(format!("class {i} is empty")));
            }
            for &v in class {
                if !seen.insert(v) {
                    return Err(Error::Precondition(format!("vertex {v} appears twice")));
                }
                if self.index.get(&v) != Some(&i) {
                    return Err(Error::Precondition(format!("vertex {v} has a stale index")));
                }
            }
        }
        if seen != g.vertices().collect() {
            return Err(Error::Precondition(
                "classes do not cover the vertex set".into(),
            ));
        }
        for (u, v) in g.edges() {
            if self.index[&u] == self.index[&v] {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) lies inside class {}",
                    self.index[&u]
                )));
            }
        }
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                for j in 0..i {
                    if !g.neighbors(v).any(|w| self.classes[j].contains(&w)) {
                        return Err(Error::Precondition(format!(
                            "vertex {v} in class {i} has no neighbor in class {j}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Partitions the vertices into proper color classes with the maximality
/// property: every vertex of class i has a neighbor in each class j < i.
///
/// With `k` unset, the class count is the chromatic number for graphs of
/// up to [`EXACT_LIMIT`] vertices (exact search) and a greedy upper bound
/// beyond that.  With `k` set, a greedy coloring with that palette is
/// attempted, falling back to exact search at desk scale.
///
/// # Errors
///
/// [`Error::NoColoring`] when `k` is given and no proper coloring with `k`
/// colors is found.
pub fn maximal_proper_classes(g: &TotalGraph, k: Option<u32>) -> Result<ProperClasses> {
    if g.vertex_count() == 0 {
        return Err(Error::Input("the graph has no vertices".into()));
    }
    let assignment = match k {
        None => {
            if g.vertex_count() <= EXACT_LIMIT {
                exact_chromatic(g)
            } else {
                greedy_proper(g, None).expect("unbounded greedy always colors")
            }
        }
        Some(cap) => match greedy_proper(g, Some(cap)) {
            Some(a) => a,
            None if g.vertex_count() <= EXACT_LIMIT => {
                exact_proper(g, cap).ok_or_else(|| {
                    Error::NoColoring(format!("{cap} colors are too few for this graph"))
                })?
            }
            None => {
                return Err(Error::NoColoring(format!(
                    "no proper {cap}-coloring found greedily"
                )))
            }
        },
    };
    let count = assignment.values().copied().max().expect("nonempty") as usize;
    let mut classes: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); count];
    for (&v, &c) in &assignment {
        classes[c as usize - 1].insert(v);
    }
    // Maximalize: pull every vertex into the earliest class where it has
    // no neighbor, until nothing moves.
    let mut index: BTreeMap<VertexId, usize> =
        assignment.iter().map(|(&v, &c)| (v, c as usize - 1)).collect();
    loop {
        let mut moved = false;
        let verts: Vec<VertexId> = g.vertices().collect();
        for v in verts {
            let i = index[&v];
            for j in 0..i {
                if !g.neighbors(v).any(|w| index[&w] == j) {
                    classes[i].remove(&v);
                    classes[j].insert(v);
                    index.insert(v, j);
                    moved = true;
                    break;
                }
            }
        }
        if !moved {
            break;
        }
    }
    classes.retain(|class| !class.is_empty());
    let index = classes
        .iter()
        .enumerate()
        .flat_map(|(i, class)| class.iter().map(move |&v| (v, i)))
        .collect();
    let pc = ProperClasses { classes, index };
    pc.validate(g)?;
    Ok(pc)
}

/// Greedy proper coloring, largest degree first; `None` when a vertex
/// needs a color beyond `cap`.
fn greedy_proper(g: &TotalGraph, cap: Option<u32>) -> Option<BTreeMap<VertexId, u32>> {
    let mut verts: Vec<VertexId> = g.vertices().collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors: BTreeMap<VertexId, u32> = BTreeMap::new();
    for v in verts {
        let taken: BTreeSet<u32> = g.neighbors(v).filter_map(|w| colors.get(&w).copied()).collect();
        let c = (1..).find(|c| !taken.contains(c)).expect("some color is free");
        if cap.is_some_and(|cap| c > cap) {
            return None;
        }
        colors.insert(v, c);
    }
    Some(colors)
}

/// Exact chromatic coloring by trying palettes of increasing size.
fn exact_chromatic(g: &TotalGraph) -> BTreeMap<VertexId, u32> {
    (1..)
        .find_map(|k| exact_proper(g, k))
        .expect("n colors always suffice")
}

/// Backtracking proper coloring with exactly `k` colors available.
fn exact_proper(g: &TotalGraph, k: u32) -> Option<BTreeMap<VertexId, u32>> {
    let mut verts: Vec<VertexId> = g.vertices().collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    fn step(
        g: &TotalGraph,
        verts: &[VertexId],
        d: usize,
        k: u32,
        used_max: u32,
        colors: &mut BTreeMap<VertexId, u32>,
    ) -> bool {
        if d == verts.len() {
            return true;
        }
        let v = verts[d];
        // Color classes are interchangeable: allow one fresh color per depth.
        for c in 1..=k.min(used_max + 1) {
            if g.neighbors(v).any(|w| colors.get(&w) == Some(&c)) {
                continue;
            }
            colors.insert(v, c);
            if step(g, verts, d + 1, k, used_max.max(c), colors) {
                return true;
            }
            colors.remove(&v);
        }
        false
    }
    let mut colors = BTreeMap::new();
    step(g, &verts, 0, k, 0, &mut colors).then_some(colors)
}

/// Colors a connected graph with at most 2k−2 colors, where k is the
/// number of maximal proper classes found for it.
///
/// Classes are processed in order: class j is colored together with all
/// edges toward later classes (plus uncolored leftovers from earlier
/// rounds) using the fresh pair 2j−1/2j and the partial parity recipe.
/// The last two classes share one all-red parity coloring; borrowed
/// endpoints from earlier classes are then uncolored again, recoloring a
/// neighbor once when that uncovers a tie.
///
/// # Errors
///
/// [`Error::Precondition`] when the graph is disconnected or has empty
/// vertices.
pub fn chromatic_tlir(g: &TotalGraph) -> Result<TotalColoring> {
    if g.vertex_count() == 0 {
        return Err(Error::Input("the graph has no vertices".into()));
    }
    if !g.all_full() {
        return Err(Error::Precondition(
            "every vertex must carry a color slot".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("the graph is disconnected".into()));
    }
    let pc = maximal_proper_classes(g, None)?;
    let k = pc.classes.len();
    if k == 1 {
        // Edgeless: a lone color class.
        let mut c = TotalColoring::new();
        for v in g.vertices() {
            c.set_vertex(v, RED);
        }
        return finish(g, c, 1);
    }
    if k == 2 {
        let parts = Bipartition::new(pc.classes[0].clone(), pc.classes[1].clone());
        let c = bipartite_tlir2(g, &parts)?;
        return finish(g, c, 2);
    }

    let mut c = TotalColoring::new();
    for j in 0..k - 2 {
        assert_stage_front(g, &pc, &c, j)?;
        let (b, outside) = stage_graph(g, &pc, &c, j)?;
        if b.edge_count() == 0 {
            // Nothing to pair up: the round's colors still cover the
            // class's vertices so the pair indexing stays aligned.
            for &v in &pc.classes[j] {
                c.set_vertex(v, 2 * j as u32 + 1);
            }
            continue;
        }
        let parts = Bipartition::new(pc.classes[j].clone(), outside);
        let (mut cj, _matching) = partial_bipartite_tlir(&b, &parts)?;
        let (lo, hi) = (2 * j as u32 + 1, 2 * j as u32 + 2);
        cj.map_colors(|col| if col == RED { lo } else { hi });
        c.absorb(&cj);
    }
    final_stage(g, &pc, &mut c)?;
    finish(g, c, 2 * k as u32 - 2)
}

/// Every vertex before class `j` is colored; none from `j` on is.
fn assert_stage_front(
    g: &TotalGraph,
    pc: &ProperClasses,
    c: &TotalColoring,
    j: usize,
) -> Result<()> {
    for v in g.vertices() {
        let colored = c.vertex_color(v).is_some();
        if colored != (pc.index[&v] < j) {
            return Err(Error::InternalInvariant(format!(
                "vertex {v} breaks the coloring front before round {j}"
            )));
        }
    }
    Ok(())
}

/// The bipartite round graph for class `j`: all edges toward later
/// classes, plus edges left uncolored by earlier rounds.  Returns it with
/// the outside endpoints (the `y` side).
fn stage_graph(
    g: &TotalGraph,
    pc: &ProperClasses,
    c: &TotalColoring,
    j: usize,
) -> Result<(TotalGraph, BTreeSet<VertexId>)> {
    let mut b = TotalGraph::new();
    let mut outside = BTreeSet::new();
    for &v in &pc.classes[j] {
        b.add_vertex(v, true);
    }
    for &v in &pc.classes[j] {
        for w in g.neighbors(v) {
            let wi = pc.index[&w];
            let wanted = if wi > j {
                debug_assert!(c.edge_color(v, w).is_none(), "upward edges are still blank");
                true
            } else {
                wi < j && c.edge_color(v, w).is_none()
            };
            if wanted {
                if !b.has_vertex(w) {
                    b.add_vertex(w, true);
                    outside.insert(w);
                }
                b.add_edge(v, w)?;
            }
        }
    }
    // A leftover edge's early endpoint was in a matching, so it sees this
    // round exactly once.
    for &w in &outside {
        if pc.index[&w] < j && b.degree(w) != 1 {
            return Err(Error::InternalInvariant(format!(
                "leftover endpoint {w} has degree {} in round {j}",
                b.degree(w)
            )));
        }
    }
    Ok((b, outside))
}

/// The last two classes, colored together with the pair 2k−3/2k−2: all
/// remaining blank edges get the first color, vertices follow degree
/// parity, and borrowed early endpoints are blanked again afterwards.
fn final_stage(g: &TotalGraph, pc: &ProperClasses, c: &mut TotalColoring) -> Result<()> {
    let k = pc.classes.len();
    assert_stage_front(g, pc, c, k - 2)?;
    let (last, second) = (&pc.classes[k - 1], &pc.classes[k - 2]);
    let mut b = TotalGraph::new();
    for &v in second.iter().chain(last.iter()) {
        b.add_vertex(v, true);
    }
    // Borrowed endpoints of blank edges, keyed by which class they touch.
    let mut borrowed_by_second: BTreeSet<VertexId> = BTreeSet::new();
    let mut borrowed_by_last: BTreeSet<VertexId> = BTreeSet::new();
    for (u, v) in g.edges() {
        if c.edge_color(u, v).is_some() {
            continue;
        }
        let (iu, iv) = (pc.index[&u], pc.index[&v]);
        let (early, late) = if iu < iv { (u, v) } else { (v, u) };
        if pc.index[&early] >= k - 2 {
            // Both endpoints in the last two classes.
        } else if pc.index[&late] == k - 2 {
            borrowed_by_second.insert(early);
        } else if pc.index[&late] == k - 1 {
            borrowed_by_last.insert(early);
        } else {
            return Err(Error::InternalInvariant(format!(
                "edge ({u}, {v}) is still blank but touches neither of the last classes"
            )));
        }
        for w in [u, v] {
            if !b.has_vertex(w) {
                b.add_vertex(w, true);
            }
        }
        b.add_edge(u, v)?;
    }
    if borrowed_by_second.intersection(&borrowed_by_last).next().is_some() {
        return Err(Error::InternalInvariant(
            "a vertex lends blank edges to both of the last classes".into(),
        ));
    }
    for &u in borrowed_by_second.union(&borrowed_by_last) {
        if b.degree(u) != 1 {
            return Err(Error::InternalInvariant(format!(
                "borrowed endpoint {u} has degree {} in the last round",
                b.degree(u)
            )));
        }
    }
    // Second-to-last class with the last class's borrowers: even parity
    // side; the rest: odd.
    let x_side: BTreeSet<VertexId> = second.union(&borrowed_by_last).copied().collect();
    let mut cb = monochrome_parity_coloring(&b, &x_side, RED);
    for &u in &borrowed_by_second {
        // Odd side, degree one: the lone edge is red and `u` is blue, so
        // blanking `u` leaves both classes untouched.
        debug_assert_eq!(cb.vertex_color(u), Some(BLUE));
        cb.uncolor_vertex(u);
    }
    for &u in &borrowed_by_last {
        // Even side, degree one: `u` and its edge are red; blanking drops
        // its red total to 1, which can tie the neighbor.
        cb.uncolor_vertex(u);
        let y = b.neighbors(u).next().expect("degree one");
        if total_color_degree(&b, &cb, y, RED) == total_color_degree(&b, &cb, u, RED) {
            if cb.vertex_color(y) != Some(BLUE) || b.degree(y) != 1 {
                return Err(Error::InternalInvariant(format!(
                    "tie at {y} is not the repairable degree-one shape"
                )));
            }
            cb.set_vertex(y, RED);
        }
    }
    let (lo, hi) = (2 * k as u32 - 3, 2 * k as u32 - 2);
    cb.map_colors(|col| if col == RED { lo } else { hi });
    c.absorb(&cb);
    Ok(())
}

fn finish(g: &TotalGraph, c: TotalColoring, bound: u32) -> Result<TotalColoring> {
    if let Some(&max) = c.colors_used().iter().max() {
        if max > bound {
            return Err(Error::InternalInvariant(format!(
                "color {max} exceeds the {bound}-color budget"
            )));
        }
    }
    let issues = verify_tlir(g, &c, true);
    if let Some(issue) = issues.first() {
        return Err(Error::InternalInvariant(format!(
            "assembled staged coloring is invalid: {issue:?}"
        )));
    }
    Ok(c)
}
