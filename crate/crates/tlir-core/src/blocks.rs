//! Block–cut trees and the structural queries built on them: pendant-cycle
//! detection and the "good vertex" whose incident edges almost all lie on
//! pendant cycles or pendant trees.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{ekey, TotalGraph, VertexId};

/// What a biconnected block looks like.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// The block is a single cycle (as many edges as vertices).
    Cycle,
    /// The block is a single edge.
    Bridge,
    /// Anything denser; never occurs in a cactus.
    Other,
}

/// One biconnected block: its vertices, its edges, and its shape tag.
#[derive(Debug, Clone)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
    pub kind: BlockKind,
}

/// A node of the block–cut tree: either a block (by index) or a cut vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BcNode {
    Block(usize),
    Cut(VertexId),
}

/// Block–cut decomposition of a graph, together with the reduced tree kept
/// after repeatedly deleting leaves that are bridge blocks or cut vertices.
/// In the reduced tree every leaf is a cycle block.
#[derive(Debug, Clone)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<VertexId>,
    /// Adjacency of the full block–cut tree (forest when G is disconnected).
    pub incidence: BTreeMap<BcNode, BTreeSet<BcNode>>,
    /// Nodes surviving the leaf-pruning reduction.
    pub pruned: BTreeSet<BcNode>,
    pub connected: bool,
}

impl BlockCutTree {
    /// True when every block is a cycle or a bridge, i.e. every edge lies on
    /// at most one cycle.
    pub fn is_cactus(&self) -> bool {
        self.blocks.iter().all(|b| b.kind != BlockKind::Other)
    }

    /// Pruned-tree neighbors of `n`.
    fn pruned_neighbors(&self, n: BcNode) -> Vec<BcNode> {
        self.incidence
            .get(&n)
            .into_iter()
            .flatten()
            .filter(|m| self.pruned.contains(m))
            .copied()
            .collect()
    }
}

/// Computes blocks, cut vertices, the block–cut tree, and its reduction.
/// Disconnected graphs yield a forest with `connected = false`.
pub fn block_cut_tree(g: &TotalGraph) -> BlockCutTree {
    let mut disc: BTreeMap<VertexId, u32> = BTreeMap::new();
    let mut low: BTreeMap<VertexId, u32> = BTreeMap::new();
    let mut timer = 0u32;
    let mut estack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut cut_vertices: BTreeSet<VertexId> = BTreeSet::new();

    struct Frame {
        v: VertexId,
        parent: Option<VertexId>,
        nbrs: Vec<VertexId>,
        idx: usize,
        children: usize,
    }

    let mut roots = 0usize;
    for root in g.vertices().collect::<Vec<_>>() {
        if disc.contains_key(&root) {
            continue;
        }
        roots += 1;
        disc.insert(root, timer);
        low.insert(root, timer);
        timer += 1;
        let mut stack = vec![Frame {
            v: root,
            parent: None,
            nbrs: g.neighbors(root).collect(),
            idx: 0,
            children: 0,
        }];
        while let Some(top) = stack.last_mut() {
            if top.idx < top.nbrs.len() {
                let v = top.v;
                let w = top.nbrs[top.idx];
                top.idx += 1;
                if Some(w) == top.parent {
                    continue;
                }
                if let Some(&dw) = disc.get(&w) {
                    // Back edge to an ancestor (or cross to a finished
                    // sibling, which a DFS on an undirected graph never sees
                    // as a *new* edge going downward).
                    if dw < disc[&v] {
                        estack.push((v, w));
                        let lv = low[&v].min(dw);
                        low.insert(v, lv);
                    }
                } else {
                    top.children += 1;
                    estack.push((v, w));
                    disc.insert(w, timer);
                    low.insert(w, timer);
                    timer += 1;
                    stack.push(Frame {
                        v: w,
                        parent: Some(v),
                        nbrs: g.neighbors(w).collect(),
                        idx: 0,
                        children: 0,
                    });
                }
            } else {
                let done = stack.pop().expect("frame present");
                if let Some(p) = done.parent {
                    let lw = low[&done.v];
                    if lw < low[&p] {
                        low.insert(p, lw);
                    }
                    if lw >= disc[&p] {
                        // p separates done.v's subtree: close a block.
                        let parent_frame = stack.last().expect("parent frame");
                        let is_root = parent_frame.parent.is_none();
                        if !is_root || parent_frame.children >= 2 {
                            cut_vertices.insert(p);
                        }
                        let mut be: Vec<(VertexId, VertexId)> = Vec::new();
                        while let Some(&(a, b)) = estack.last() {
                            estack.pop();
                            be.push(ekey(a, b));
                            if (a, b) == (p, done.v) {
                                break;
                            }
                        }
                        blocks.push(make_block(be));
                    }
                }
            }
        }
        debug_assert!(estack.is_empty(), "all edges assigned to blocks");
    }

    let blocks = {
        // Deterministic block order regardless of DFS discovery order.
        let mut b = blocks;
        b.sort_by(|x, y| x.vertices.cmp(&y.vertices));
        b
    };

    let mut incidence: BTreeMap<BcNode, BTreeSet<BcNode>> = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        incidence.entry(BcNode::Block(i)).or_default();
        for &v in &b.vertices {
            if cut_vertices.contains(&v) {
                incidence
                    .entry(BcNode::Block(i))
                    .or_default()
                    .insert(BcNode::Cut(v));
                incidence
                    .entry(BcNode::Cut(v))
                    .or_default()
                    .insert(BcNode::Block(i));
            }
        }
    }

    // Reduce: repeatedly delete leaves (degree ≤ 1) that are bridge blocks or
    // cut vertices. Left over: a tree whose every leaf is a cycle block,
    // empty exactly when the component is acyclic.
    let mut pruned: BTreeSet<BcNode> = incidence.keys().copied().collect();
    let mut deg: BTreeMap<BcNode, usize> = incidence
        .iter()
        .map(|(n, s)| (*n, s.len()))
        .collect();
    let mut queue: VecDeque<BcNode> = pruned.iter().copied().collect();
    while let Some(n) = queue.pop_front() {
        if !pruned.contains(&n) || deg[&n] > 1 {
            continue;
        }
        let removable = match n {
            BcNode::Cut(_) => true,
            BcNode::Block(i) => blocks[i].kind == BlockKind::Bridge,
        };
        if !removable {
            continue;
        }
        pruned.remove(&n);
        for m in incidence[&n].clone() {
            if pruned.contains(&m) {
                let d = deg.get_mut(&m).expect("tracked degree");
                *d -= 1;
                if *d <= 1 {
                    queue.push_back(m);
                }
            }
        }
    }

    BlockCutTree {
        blocks,
        cut_vertices,
        incidence,
        pruned,
        connected: roots <= 1,
    }
}

fn make_block(mut edges: Vec<(VertexId, VertexId)>) -> Block {
    edges.sort_unstable();
    let mut vs: BTreeSet<VertexId> = BTreeSet::new();
    for &(a, b) in &edges {
        vs.insert(a);
        vs.insert(b);
    }
    let kind = if edges.len() == 1 {
        BlockKind::Bridge
    } else if edges.len() == vs.len() {
        BlockKind::Cycle
    } else {
        BlockKind::Other
    };
    Block {
        vertices: vs.into_iter().collect(),
        edges,
        kind,
    }
}

/// Walks a cycle block as a vertex sequence starting at `start`, moving first
/// to the smaller of `start`'s two neighbors within the block.
fn walk_cycle(block: &Block, start: VertexId) -> Vec<VertexId> {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(a, b) in &block.edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut seq = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min().expect("cycle has neighbors");
    while cur != start {
        seq.push(cur);
        let next = adj[&cur]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("interior cycle vertex has two neighbors");
        prev = cur;
        cur = next;
    }
    seq
}

/// Finds a cycle whose edge-deletion leaves at most one component containing
/// cycles: a leaf of the reduced block–cut tree. Ties are broken by the
/// smallest vertex id in the cycle. Returns `None` exactly when the graph is
/// acyclic.
pub fn find_pendant_cycle(g: &TotalGraph) -> Result<Option<Vec<VertexId>>> {
    let bct = block_cut_tree(g);
    if !bct.is_cactus() {
        return Err(Error::ClassPrecondition(
            "pendant-cycle search requires a cactus".into(),
        ));
    }
    let mut best: Option<usize> = None;
    for &n in &bct.pruned {
        let BcNode::Block(i) = n else { continue };
        if bct.blocks[i].kind != BlockKind::Cycle {
            continue;
        }
        // A leaf of the reduced tree (a single surviving node counts).
        let deg: usize = bct
            .pruned_neighbors(n)
            .len();
        if deg <= 1 && best.is_none_or(|j| bct.blocks[i].vertices < bct.blocks[j].vertices) {
            best = Some(i);
        }
    }
    Ok(best.map(|i| {
        let start = bct.blocks[i].vertices[0];
        walk_cycle(&bct.blocks[i], start)
    }))
}

/// A vertex `x` together with the classification of its incident edges:
/// pendant cycles through `x`, pendant-tree branches at `x`, and at most two
/// leftover edges toward the rest of the graph.
#[derive(Debug, Clone)]
pub struct GoodVertex {
    pub x: VertexId,
    /// Each cycle as a sequence starting at `x`, second entry the smaller
    /// neighbor of `x` on the cycle.
    pub cycles: Vec<Vec<VertexId>>,
    /// Vertex sets of tree branches hanging at `x` (`x` excluded).
    pub trees: Vec<BTreeSet<VertexId>>,
    /// Edges at `x` leading into the one branch that may contain more cycles.
    pub leftover: Vec<(VertexId, VertexId)>,
}

/// BFS over the pruned (or full) block–cut forest restricted to `nodes`,
/// returning the farthest node from `from` (smallest on ties) and parent
/// pointers of the BFS tree.
fn bc_bfs(
    bct: &BlockCutTree,
    nodes: &BTreeSet<BcNode>,
    from: BcNode,
) -> (BcNode, BTreeMap<BcNode, BcNode>) {
    let mut parent: BTreeMap<BcNode, BcNode> = BTreeMap::new();
    let mut dist: BTreeMap<BcNode, usize> = BTreeMap::new();
    dist.insert(from, 0);
    let mut queue = VecDeque::from([from]);
    let mut far = from;
    while let Some(n) = queue.pop_front() {
        if dist[&n] > dist[&far] {
            far = n;
        }
        for m in bct.incidence.get(&n).into_iter().flatten() {
            if nodes.contains(m) && !dist.contains_key(m) {
                dist.insert(*m, dist[&n] + 1);
                parent.insert(*m, n);
                queue.push_back(*m);
            }
        }
    }
    (far, parent)
}

/// Chooses a vertex `x` such that all but at most two of its incident edges
/// lie on pendant cycles or pendant trees attached at `x`: the cut vertex
/// next to the end of a longest path in the reduced block–cut tree, with
/// degenerate cases (single cycle, acyclic graph) resolved toward the
/// smallest vertex id.
pub fn find_good_vertex(g: &TotalGraph) -> Result<GoodVertex> {
    if g.vertex_count() == 0 {
        return Err(Error::Input("empty graph has no vertices".into()));
    }
    let bct = block_cut_tree(g);
    if !bct.is_cactus() {
        return Err(Error::ClassPrecondition(
            "good-vertex search requires a cactus".into(),
        ));
    }
    if !bct.connected {
        return Err(Error::Precondition(
            "good-vertex search requires a connected graph".into(),
        ));
    }

    let x = choose_good_vertex(g, &bct);
    classify_branches(g, x)
}

fn choose_good_vertex(g: &TotalGraph, bct: &BlockCutTree) -> VertexId {
    // Second node on a longest path of the reduced tree; for acyclic graphs
    // the same rule on the unreduced tree. Longest paths in trees come from
    // two BFS sweeps.
    let second_on_longest = |nodes: &BTreeSet<BcNode>| -> Option<BcNode> {
        let &start = nodes.iter().next()?;
        let (u, _) = bc_bfs(bct, nodes, start);
        let (w, parent) = bc_bfs(bct, nodes, u);
        // Path from w back to u; the node after u on the u→w path is u's
        // parent-side neighbor, i.e. the predecessor chain from w ending at u.
        let mut cur = w;
        let mut prev = w;
        while let Some(&p) = parent.get(&cur) {
            prev = cur;
            cur = p;
        }
        // cur == u; prev is the second vertex walking u → w (equal to u when
        // the path is a single node).
        (prev != cur).then_some(prev)
    };

    if !bct.pruned.is_empty() {
        if let Some(BcNode::Cut(x)) = second_on_longest(&bct.pruned) {
            return x;
        }
        // Reduced tree is a single cycle block: any of its vertices works.
        if let Some(BcNode::Block(i)) = bct.pruned.iter().next() {
            return bct.blocks[*i].vertices[0];
        }
    }
    // Acyclic graph: use the full block–cut tree.
    let all: BTreeSet<BcNode> = bct.incidence.keys().copied().collect();
    if let Some(BcNode::Cut(x)) = second_on_longest(&all) {
        return x;
    }
    // Single block (one edge) or single vertex.
    g.vertices().next().expect("nonempty graph")
}

fn classify_branches(g: &TotalGraph, x: VertexId) -> Result<GoodVertex> {
    let mut rest: BTreeSet<VertexId> = g.vertices().collect();
    rest.remove(&x);
    let beheaded = g.induced(&rest);
    let mut cycles = Vec::new();
    let mut trees = Vec::new();
    let mut leftover = Vec::new();
    for comp in beheaded.components() {
        let attach: Vec<VertexId> = g
            .neighbors(x)
            .filter(|v| comp.contains(v))
            .collect();
        let sub = beheaded.induced(&comp);
        match (attach.len(), sub.is_acyclic()) {
            (0, _) => unreachable!("connected graph: every branch touches x"),
            (1, true) => trees.push(comp),
            (2, true) => {
                // x plus this branch is unicyclic; recover the cycle through
                // x by walking from the smaller attachment to the other along
                // the unique path inside the branch's cycle block.
                let mut keep = comp.clone();
                keep.insert(x);
                let branch_bct = block_cut_tree(&g.induced(&keep));
                let cycle_block = branch_bct
                    .blocks
                    .iter()
                    .find(|b| b.kind == BlockKind::Cycle && b.vertices.contains(&x))
                    .ok_or_else(|| {
                        Error::InternalInvariant(
                            "two-attachment acyclic branch must close a cycle through x".into(),
                        )
                    })?;
                cycles.push(walk_cycle(cycle_block, x));
            }
            _ => leftover.extend(attach.into_iter().map(|v| ekey(x, v))),
        }
    }
    if leftover.len() > 2 {
        return Err(Error::InternalInvariant(format!(
            "good vertex {x} has {} unclassified edges",
            leftover.len()
        )));
    }
    Ok(GoodVertex {
        x,
        cycles,
        trees,
        leftover,
    })
}

/// Two triangles sharing a single vertex (the smallest "butterfly").
#[cfg(test)]
pub(crate) fn butterfly() -> TotalGraph {
    TotalGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
}

/// The bow-tie graph: an edge whose two endpoints each lie on two otherwise
/// disjoint triangles. The smallest locally irregular colorable graph whose
/// edge colorings need four classes (unique among all cacti on up to eleven
/// vertices, established by exhaustive search).
#[cfg(test)]
pub(crate) fn bow_tie() -> TotalGraph {
    TotalGraph::from_edges(
        10,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 6),
            (1, 7),
            (1, 8),
            (1, 9),
            (2, 3),
            (4, 5),
            (6, 7),
            (8, 9),
        ],
    )
}
