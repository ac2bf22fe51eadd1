//! Seeded graph generators and a small-order exhaustive enumerator.
//!
//! Every generator is a pure function of its parameters and a 64-bit
//! seed, using a fixed self-contained PRNG so the same inputs produce the
//! same graph on every platform and run.  Each output is certified
//! against the matching recognizer before it is returned.

use std::collections::BTreeSet;

use crate::acyclic::maximal_outerplanar_order;
use crate::blocks::block_cut_tree;
use crate::classify::{bipartition_sets, split_partition_sets};
use crate::error::{Error, Result};
use crate::graph::{ekey, TotalGraph, VertexId};

/// Deterministic 64-bit PRNG (the splitmix64 step function): tiny state,
/// full-period, identical everywhere.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// True with probability `num`/`den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.below(i + 1));
        }
    }

    /// A uniformly chosen element of a nonempty slice.
    pub fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        items[self.below(items.len())]
    }
}

/// The graph classes with a seeded generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Tree,
    Bipartite,
    Cactus,
    Subcubic,
    Split,
    Regular { d: usize },
    MaximalOuterplanar,
    PlanarTriangulation,
}

/// A reproducible generation request: the same spec always builds the
/// same graph, vertex ids included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub class: GraphClass,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn build(&self) -> Result<TotalGraph> {
        gen(self.class, self.n, self.seed)
    }
}

/// Generates a connected member of `class` on `n` vertices (ids `0..n`,
/// all full), deterministically in `seed`.
///
/// # Errors
///
/// [`Error::Input`] for infeasible parameters (zero size, odd `n·d` for
/// regular graphs, triangulations below three vertices, …).
pub fn gen(class: GraphClass, n: usize, seed: u64) -> Result<TotalGraph> {
    if n == 0 {
        return Err(Error::Input("cannot generate an empty graph".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let g = match class {
        GraphClass::Tree => gen_tree(n, &mut rng),
        GraphClass::Bipartite => gen_bipartite(n, &mut rng),
        GraphClass::Cactus => gen_cactus(n, &mut rng),
        GraphClass::Subcubic => gen_subcubic(n, &mut rng),
        GraphClass::Split => gen_split(n, &mut rng)?,
        GraphClass::Regular { d } => gen_regular(n, d, &mut rng)?,
        GraphClass::MaximalOuterplanar => gen_maximal_outerplanar(n, &mut rng),
        GraphClass::PlanarTriangulation => gen_planar_triangulation(n, &mut rng)?,
    };
    certify(class, &g)?;
    Ok(g)
}

/// Runs the class recognizer over a generated graph.
fn certify(class: GraphClass, g: &TotalGraph) -> Result<()> {
    let ok = match class {
        GraphClass::Tree => g.is_connected() && g.edge_count() == g.vertex_count() - 1,
        GraphClass::Bipartite => g.is_connected() && bipartition_sets(g).is_some(),
        GraphClass::Cactus => g.is_connected() && block_cut_tree(g).is_cactus(),
        GraphClass::Subcubic => g.is_connected() && g.max_degree() <= 3,
        GraphClass::Split => split_partition_sets(g).is_some(),
        GraphClass::Regular { d } => {
            g.vertices().all(|v| g.degree(v) == d) && (d == 0 || g.is_connected())
        }
        GraphClass::MaximalOuterplanar => maximal_outerplanar_order(g).is_ok(),
        GraphClass::PlanarTriangulation => {
            g.is_connected()
                && g.edge_count() == 3 * g.vertex_count() - 6
                && g.vertices().all(|v| g.degree(v) >= 3)
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InternalInvariant(format!(
            "generated graph fails its class recognizer for {class:?}"
        )))
    }
}

/// Random attachment tree: each new vertex picks an earlier parent.
fn gen_tree(n: usize, rng: &mut SplitMix64) -> TotalGraph {
    let mut g = TotalGraph::new();
    g.add_vertex(0, true);
    for v in 1..n as VertexId {
        g.add_vertex(v, true);
        let parent = rng.below(v as usize) as VertexId;
        g.add_edge(parent, v).expect("fresh edge");
    }
    g
}

/// Connected bipartite graph: random part sizes, a cross-attachment
/// spanning tree, then extra cross edges with probability 1/3.
fn gen_bipartite(n: usize, rng: &mut SplitMix64) -> TotalGraph {
    let mut g = TotalGraph::new();
    for v in 0..n as VertexId {
        g.add_vertex(v, true);
    }
    if n == 1 {
        return g;
    }
    let split = 1 + rng.below(n - 1);
    let side = |v: VertexId| (v as usize) < split;
    let mut joined: Vec<VertexId> = vec![0];
    let mut waiting: Vec<VertexId> = (1..n as VertexId).collect();
    rng.shuffle(&mut waiting);
    while let Some(pos) = waiting
        .iter()
        .position(|&v| joined.iter().any(|&u| side(u) != side(v)))
    {
        let v = waiting.remove(pos);
        let candidates: Vec<VertexId> =
            joined.iter().copied().filter(|&u| side(u) != side(v)).collect();
        g.add_edge(rng.pick(&candidates), v).expect("fresh edge");
        joined.push(v);
    }
    for u in 0..split as VertexId {
        for w in split as VertexId..n as VertexId {
            if !g.has_edge(u, w) && rng.chance(1, 3) {
                g.add_edge(u, w).expect("fresh edge");
            }
        }
    }
    g
}

/// Random tree skeleton, then chords that close vertex- and edge-disjoint
/// tree paths into cycles.
fn gen_cactus(n: usize, rng: &mut SplitMix64) -> TotalGraph {
    let mut g = gen_tree(n, rng);
    if n < 3 {
        return g;
    }
    let mut used: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for _ in 0..2 * n {
        let u = rng.below(n) as VertexId;
        let v = rng.below(n) as VertexId;
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let Some(path) = tree_path(&g, &used, u, v) else {
            continue;
        };
        if path.len() < 3 {
            continue;
        }
        for pair in path.windows(2) {
            used.insert(ekey(pair[0], pair[1]));
        }
        // The chord joins the cycle too: later paths must not cross it.
        used.insert(ekey(u, v));
        g.add_edge(u, v).expect("fresh edge");
    }
    g
}

/// The unique tree path from `u` to `v` avoiding already-cycled edges;
/// `None` if the walk would cross one.
fn tree_path(
    g: &TotalGraph,
    used: &BTreeSet<(VertexId, VertexId)>,
    u: VertexId,
    v: VertexId,
) -> Option<Vec<VertexId>> {
    // BFS over bridge edges only: the skeleton minus closed-off paths.
    let mut parent: std::collections::BTreeMap<VertexId, VertexId> =
        std::collections::BTreeMap::from([(u, u)]);
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            let mut path = vec![v];
            let mut cur = v;
            while cur != u {
                cur = parent[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(x) {
            if !parent.contains_key(&w) && !used.contains(&ekey(x, w)) {
                parent.insert(w, x);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Connected graph with maximum degree three: a degree-capped random
/// tree plus a few extra edges between low-degree vertices.
fn gen_subcubic(n: usize, rng: &mut SplitMix64) -> TotalGraph {
    let mut g = TotalGraph::new();
    g.add_vertex(0, true);
    for v in 1..n as VertexId {
        g.add_vertex(v, true);
        let candidates: Vec<VertexId> = (0..v).filter(|&u| g.degree(u) < 3).collect();
        g.add_edge(rng.pick(&candidates), v).expect("fresh edge");
    }
    let extras = rng.below(n / 2 + 1);
    for _ in 0..extras {
        let candidates: Vec<(VertexId, VertexId)> = {
            let verts: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) < 3).collect();
            verts
                .iter()
                .flat_map(|&u| verts.iter().map(move |&w| (u, w)))
                .filter(|&(u, w)| u < w && !g.has_edge(u, w))
                .collect()
        };
        if candidates.is_empty() {
            break;
        }
        let (u, w) = rng.pick(&candidates);
        g.add_edge(u, w).expect("fresh edge");
    }
    g
}

/// How the independent side of a generated split graph attaches to the
/// clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitProfile {
    /// Clique size and attachments all random.
    Random,
    /// All `count` outside vertices hang as pendants off one clique
    /// vertex, with `count` below half the clique size.
    PendantsOnOne { count: usize },
    /// Exactly two pendant edges into the clique, from one shared outside
    /// vertex or from two separate ones; the clique has 6–8 vertices.
    TwoPendantEdges { shared: bool },
}

fn gen_split(n: usize, rng: &mut SplitMix64) -> Result<TotalGraph> {
    gen_split_profile(n, SplitProfile::Random, rng.next_u64())
}

/// Generates a split graph on `n` vertices with the given attachment
/// profile, deterministically in `seed`.
///
/// # Errors
///
/// [`Error::Input`] when the profile does not fit `n` (pendant count too
/// large for the remaining clique, clique size outside 6–8 for
/// [`SplitProfile::TwoPendantEdges`], …).
pub fn gen_split_profile(n: usize, profile: SplitProfile, seed: u64) -> Result<TotalGraph> {
    if n == 0 {
        return Err(Error::Input("cannot generate an empty graph".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let g = match profile {
        SplitProfile::Random => {
            let q = 1 + rng.below(n);
            let mut g = clique_plus_isolates(q, n);
            for y in q as VertexId..n as VertexId {
                let mut picks = BTreeSet::new();
                picks.insert(rng.below(q) as VertexId);
                for x in 0..q as VertexId {
                    if rng.chance(1, 4) {
                        picks.insert(x);
                    }
                }
                for x in picks {
                    g.add_edge(x, y).expect("fresh edge");
                }
            }
            g
        }
        SplitProfile::PendantsOnOne { count } => {
            if count == 0 || count >= n {
                return Err(Error::Input(format!(
                    "{count} pendants do not fit a {n}-vertex graph"
                )));
            }
            let q = n - count;
            if q < 3 || count >= q / 2 {
                return Err(Error::Input(format!(
                    "{count} pendants need a clique larger than {q}"
                )));
            }
            let mut g = clique_plus_isolates(q, n);
            let loaded = rng.below(q) as VertexId;
            for y in q as VertexId..n as VertexId {
                g.add_edge(loaded, y).expect("fresh edge");
            }
            g
        }
        SplitProfile::TwoPendantEdges { shared } => {
            let outside = if shared { 1 } else { 2 };
            if n <= outside {
                return Err(Error::Input(format!("{n} vertices leave no room for a clique")));
            }
            let q = n - outside;
            if !(6..=8).contains(&q) {
                return Err(Error::Input(format!(
                    "two pendant edges need a clique of 6 to 8 vertices, got {q}"
                )));
            }
            let mut g = clique_plus_isolates(q, n);
            let a = rng.below(q) as VertexId;
            let b = (a as usize + 1 + rng.below(q - 1)) as VertexId % q as VertexId;
            if shared {
                g.add_edge(a, q as VertexId).expect("fresh edge");
                g.add_edge(b, q as VertexId).expect("fresh edge");
            } else {
                g.add_edge(a, q as VertexId).expect("fresh edge");
                g.add_edge(b, q as VertexId + 1).expect("fresh edge");
            }
            g
        }
    };
    certify(GraphClass::Split, &g)?;
    Ok(g)
}

/// A clique on `0..q` plus isolated full vertices up to `n`.
fn clique_plus_isolates(q: usize, n: usize) -> TotalGraph {
    let mut g = TotalGraph::new();
    for v in 0..n as VertexId {
        g.add_vertex(v, true);
    }
    for u in 0..q as VertexId {
        for w in u + 1..q as VertexId {
            g.add_edge(u, w).expect("fresh edge");
        }
    }
    g
}

/// Pairing model: `d` stubs per vertex, shuffled and paired, rejecting
/// loops, parallel edges, and (for `d ≥ 1`) disconnected outcomes.
fn gen_regular(n: usize, d: usize, rng: &mut SplitMix64) -> Result<TotalGraph> {
    if d >= n.max(1) && !(d == 0 && n == 1) {
        return Err(Error::Input(format!("{d}-regular needs more than {n} vertices")));
    }
    if n * d % 2 != 0 {
        return Err(Error::Input(format!(
            "no {d}-regular graph on {n} vertices: odd stub count"
        )));
    }
    if d == 0 {
        if n > 1 {
            return Err(Error::Input("a 0-regular graph on several vertices is disconnected".into()));
        }
        let mut g = TotalGraph::new();
        g.add_vertex(0, true);
        return Ok(g);
    }
    // The two densest profiles defeat rejection sampling; they are unique
    // up to relabeling, so build them directly.
    if d == n - 1 {
        return Ok(clique_plus_isolates(n, n));
    }
    if d == n - 2 {
        let mut verts: Vec<VertexId> = (0..n as VertexId).collect();
        rng.shuffle(&mut verts);
        let mut g = TotalGraph::new();
        for v in 0..n as VertexId {
            g.add_vertex(v, true);
        }
        for u in 0..n as VertexId {
            for w in u + 1..n as VertexId {
                let matched = (0..n / 2).any(|i| {
                    (verts[2 * i], verts[2 * i + 1]) == (u, w)
                        || (verts[2 * i], verts[2 * i + 1]) == (w, u)
                });
                if !matched {
                    g.add_edge(u, w).expect("fresh edge");
                }
            }
        }
        return Ok(g);
    }
    'attempt: for _ in 0..2000 {
        let mut stubs: Vec<VertexId> = (0..n as VertexId).flat_map(|v| [v].repeat(d)).collect();
        rng.shuffle(&mut stubs);
        let mut g = TotalGraph::new();
        for v in 0..n as VertexId {
            g.add_vertex(v, true);
        }
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v).expect("checked fresh");
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Input(format!(
        "no connected {d}-regular graph on {n} vertices found within the retry budget"
    )))
}

/// Random triangulation of a convex polygon: the n-cycle plus recursively
/// chosen chords — maximal outerplanar by construction.
fn gen_maximal_outerplanar(n: usize, rng: &mut SplitMix64) -> TotalGraph {
    let mut g = TotalGraph::new();
    for v in 0..n as VertexId {
        g.add_vertex(v, true);
    }
    if n >= 2 {
        for v in 0..n as VertexId - 1 {
            g.add_edge(v, v + 1).expect("fresh edge");
        }
    }
    if n >= 3 {
        g.add_edge(0, n as VertexId - 1).expect("fresh edge");
        fan_chords(&mut g, 0, n as VertexId - 1, rng);
    }
    g
}

/// Triangulates the sub-polygon `lo, lo+1, …, hi` (the side `lo–hi` is
/// already an edge) by picking an apex and recursing on both halves.
fn fan_chords(g: &mut TotalGraph, lo: VertexId, hi: VertexId, rng: &mut SplitMix64) {
    if hi - lo < 2 {
        return;
    }
    let apex = lo + 1 + rng.below((hi - lo - 1) as usize) as VertexId;
    if apex > lo + 1 {
        g.add_edge(lo, apex).expect("fresh chord");
    }
    if apex < hi - 1 {
        g.add_edge(apex, hi).expect("fresh chord");
    }
    fan_chords(g, lo, apex, rng);
    fan_chords(g, apex, hi, rng);
}

/// Stacked triangulation: start from a triangle and repeatedly place a
/// vertex inside a random face, joined to its three corners.
fn gen_planar_triangulation(n: usize, rng: &mut SplitMix64) -> Result<TotalGraph> {
    if n < 3 {
        return Err(Error::Input(format!("a triangulation needs at least 3 vertices, got {n}")));
    }
    let mut g = TotalGraph::new();
    for v in 0..3 {
        g.add_vertex(v, true);
    }
    g.add_edge(0, 1).expect("fresh edge");
    g.add_edge(1, 2).expect("fresh edge");
    g.add_edge(0, 2).expect("fresh edge");
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 2]];
    for v in 3..n as VertexId {
        g.add_vertex(v, true);
        let [a, b, c] = faces.swap_remove(rng.below(faces.len()));
        for corner in [a, b, c] {
            g.add_edge(corner, v).expect("fresh edge");
        }
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    Ok(g)
}

/// Every connected simple graph on `n ≤ 7` vertices, one representative
/// per isomorphism class, in a deterministic order.
///
/// Brute force over edge subsets with canonicalization; vertices are
/// first bucketed by degree profile so only profile-preserving
/// relabelings are tried.
///
/// # Errors
///
/// [`Error::Input`] for `n` outside `1..=7`.
pub fn enumerate_connected(n: usize) -> Result<Vec<TotalGraph>> {
    if n == 0 || n > 7 {
        return Err(Error::Input(format!("enumeration is limited to 1..=7 vertices, got {n}")));
    }
    let pairs: Vec<(VertexId, VertexId)> = (0..n as VertexId)
        .flat_map(|u| (u + 1..n as VertexId).map(move |v| (u, v)))
        .collect();
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    for mask in 0..(1u32 << pairs.len()) {
        let g = graph_of_mask(n, &pairs, mask);
        if !g.is_connected() {
            continue;
        }
        seen.insert(canonical_mask(n, &pairs, &g));
    }
    Ok(seen
        .into_iter()
        .map(|mask| graph_of_mask(n, &pairs, mask))
        .collect())
}

fn graph_of_mask(n: usize, pairs: &[(VertexId, VertexId)], mask: u32) -> TotalGraph {
    let edges: Vec<(VertexId, VertexId)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    TotalGraph::from_edges(n as u32, &edges)
}

/// The lexicographically smallest edge mask over all relabelings that
/// respect the degree-profile bucketing (an isomorphism invariant, so the
/// minimum is a canonical form).
fn canonical_mask(n: usize, pairs: &[(VertexId, VertexId)], g: &TotalGraph) -> u32 {
    let profile = |v: VertexId| {
        let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut buckets: Vec<(usize, Vec<usize>, Vec<VertexId>)> = Vec::new();
    for v in g.vertices() {
        let (d, nd) = profile(v);
        match buckets.iter_mut().find(|(bd, bnd, _)| *bd == d && *bnd == nd) {
            Some((_, _, members)) => members.push(v),
            None => buckets.push((d, nd, Vec::from([v]))),
        }
    }
    buckets.sort();
    let pair_index: std::collections::BTreeMap<(VertexId, VertexId), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut best = u32::MAX;
    // One relabeling per combination of within-bucket orderings.
    let mut perm: Vec<VertexId> = vec![0; n];
    fn assign(
        buckets: &[(usize, Vec<usize>, Vec<VertexId>)],
        bi: usize,
        next: usize,
        remaining: &mut Vec<Vec<VertexId>>,
        perm: &mut Vec<VertexId>,
        g: &TotalGraph,
        pair_index: &std::collections::BTreeMap<(VertexId, VertexId), usize>,
        best: &mut u32,
    ) {
        if bi == buckets.len() {
            let mut mask = 0u32;
            for (new_u, &old_u) in perm.iter().enumerate() {
                for old_w in g.neighbors(old_u) {
                    let new_w = perm.iter().position(|&x| x == old_w).expect("in perm");
                    if new_u < new_w {
                        mask |= 1 << pair_index[&(new_u as VertexId, new_w as VertexId)];
                    }
                }
            }
            *best = (*best).min(mask);
            return;
        }
        let slots = buckets[bi].2.len();
        // Recursively place each unused bucket member into the next slot.
        fn place(
            buckets: &[(usize, Vec<usize>, Vec<VertexId>)],
            bi: usize,
            next: usize,
            left: usize,
            remaining: &mut Vec<Vec<VertexId>>,
            perm: &mut Vec<VertexId>,
            g: &TotalGraph,
            pair_index: &std::collections::BTreeMap<(VertexId, VertexId), usize>,
            best: &mut u32,
        ) {
            if left == 0 {
                assign(buckets, bi + 1, next, remaining, perm, g, pair_index, best);
                return;
            }
            for i in 0..remaining[bi].len() {
                let v = remaining[bi].remove(i);
                perm[next] = v;
                place(buckets, bi, next + 1, left - 1, remaining, perm, g, pair_index, best);
                remaining[bi].insert(i, v);
            }
        }
        place(buckets, bi, next, slots, remaining, perm, g, pair_index, best);
    }
    let mut remaining: Vec<Vec<VertexId>> = buckets.iter().map(|(_, _, m)| m.clone()).collect();
    assign(&buckets, 0, 0, &mut remaining, &mut perm, g, &pair_index, &mut best);
    best
}
