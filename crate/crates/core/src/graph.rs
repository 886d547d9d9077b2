//! Finite balls in the 1-skeleton `Y` of the Coxeter complex and in the
//! right Cayley graph of `W`.
//!
//! Vertices of `Y` are cosets `gP` of the three maximal standard parabolics,
//! each stored by its minimal-length representative. Two edge notions exist
//! and are kept apart by [`CosetMode`]: coset-intersection adjacency of the
//! Coxeter complex, and the pentagon-tiling edges `{wP_rs, wtP_rs}`.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;

use hashbrown::HashMap;

use crate::coxeter::{min_coset_rep, min_double_coset_rep, Generator, GroupElement, ParabolicId};

/// Default cap on the number of vertices a slab may hold.
pub const DEFAULT_VERTEX_CAP: usize = 500_000;

/// A vertex of `Y`: the coset `rep · P`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    parabolic: ParabolicId,
    rep: GroupElement,
}

impl Vertex {
    /// The coset `g · P`, canonicalised to its minimal representative.
    pub fn new(parabolic: ParabolicId, g: &GroupElement) -> Self {
        Vertex { parabolic, rep: min_coset_rep(g, parabolic) }
    }

    /// The vertex fixed by the parabolic itself (`FixD8`, `FixD10`, `FixD4`).
    pub fn fixed_by(parabolic: ParabolicId) -> Self {
        Vertex { parabolic, rep: GroupElement::identity() }
    }

    pub fn parabolic(&self) -> ParabolicId {
        self.parabolic
    }

    pub fn rep(&self) -> &GroupElement {
        &self.rep
    }

    /// Left action `w · (gP) = (wg)P`.
    pub fn act(&self, w: &GroupElement) -> Vertex {
        Vertex::new(self.parabolic, &w.mul(&self.rep))
    }

    /// Text label `D8:<word>` used in reports and certificate files.
    pub fn label(&self) -> String {
        alloc::format!("{}:{}", self.parabolic, self.rep.canonical_word())
    }

    /// Parses a label `P:<word>`; the word need not be the minimal representative.
    pub fn parse_label(s: &str) -> Option<Vertex> {
        let (p, w) = s.split_once(':')?;
        let p = ParabolicId::from_name(p)?;
        let g = GroupElement::parse(w).ok()?;
        Some(Vertex::new(p, &g))
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({})", self.label())
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Which edges of `Y` a coset ball uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CosetMode {
    /// All three vertex types; coset-intersection adjacency plus pentagon edges.
    FullY,
    /// Only `W·FixD8`, with edges `{wFixD8, wtFixD8}`: the (5,4) pentagonal tiling.
    Pentagon,
}

/// Coxeter-complex adjacency: distinct cosets with nonempty intersection.
///
/// Same-type cosets never intersect unless equal, so they are never adjacent.
pub fn adjacent(u: &Vertex, v: &Vertex) -> bool {
    if u.parabolic == v.parabolic {
        return false;
    }
    let g = u.rep.inverse().mul(&v.rep);
    min_double_coset_rep(&g, u.parabolic, v.parabolic).is_identity()
}

/// Whether `{u, v}` is an edge of the pentagon tiling.
pub fn pentagon_adjacent(u: &Vertex, v: &Vertex) -> bool {
    u.parabolic == ParabolicId::Rs
        && v.parabolic == ParabolicId::Rs
        && pentagon_neighbors(u).iter().any(|n| n == v)
}

/// The four tiling neighbours of a `D8` vertex in rotation order.
pub fn pentagon_neighbors(v: &Vertex) -> [Vertex; 4] {
    debug_assert_eq!(v.parabolic, ParabolicId::Rs);
    let mut turned = v.rep.clone();
    core::array::from_fn(|k| {
        if k > 0 {
            turned = turned.mul_gen(Generator::R).mul_gen(Generator::S);
        }
        Vertex::new(ParabolicId::Rs, &turned.mul_gen(Generator::T))
    })
}

/// Coxeter-complex neighbours of a vertex (cosets of the other two types
/// meeting it).
pub fn complex_neighbors(v: &Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = Vec::new();
    for q in ParabolicId::ALL {
        if q == v.parabolic {
            continue;
        }
        for p in v.parabolic.elements() {
            let n = Vertex::new(q, &v.rep.mul(p));
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    out
}

/// Nodes a [`GraphSlab`] can hold.
pub trait SlabNode: Clone + Eq + Hash {
    fn label(&self) -> String;
}

impl SlabNode for Vertex {
    fn label(&self) -> String {
        Vertex::label(self)
    }
}

impl SlabNode for GroupElement {
    fn label(&self) -> String {
        alloc::format!("{}", self.canonical_word())
    }
}

/// Errors from building or querying a slab.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlabError {
    /// The ball would exceed the configured vertex cap.
    VertexCapExceeded { cap: usize, radius_reached: usize },
    /// A queried vertex is not in the slab.
    NotInSlab(String),
    /// Pentagon mode needs a `D8` centre.
    WrongCenterType(String),
}

impl fmt::Display for SlabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlabError::VertexCapExceeded { cap, radius_reached } => {
                write!(f, "vertex cap {cap} exceeded while building layer {radius_reached}")
            }
            SlabError::NotInSlab(v) => write!(f, "vertex {v} is not in the slab"),
            SlabError::WrongCenterType(v) => write!(f, "pentagon mode needs a D8 centre, got {v}"),
        }
    }
}

/// A BFS distance that is exact only when certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distance {
    Exact(usize),
    /// The true distance is at least this value; a shorter path might leave the slab.
    AtLeast(usize),
}

impl Distance {
    pub fn exact(self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::AtLeast(_) => None,
        }
    }
}

/// A finite, BFS-complete ball around a centre.
#[derive(Clone)]
pub struct GraphSlab<N> {
    nodes: Vec<N>,
    index: HashMap<N, usize>,
    depth: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    radius: usize,
}

impl<N: SlabNode> fmt::Debug for GraphSlab<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphSlab")
            .field("center", &self.nodes[0].label())
            .field("radius", &self.radius)
            .field("vertices", &self.nodes.len())
            .finish()
    }
}

impl<N: SlabNode> GraphSlab<N> {
    /// BFS to `radius` using `neighbors`; vertices are numbered in discovery
    /// order, so the numbering is as deterministic as `neighbors`.
    pub fn build<F>(center: N, radius: usize, cap: usize, mut neighbors: F) -> Result<Self, SlabError>
    where
        F: FnMut(&N) -> Vec<N>,
    {
        let mut nodes = alloc::vec![center.clone()];
        let mut index = HashMap::new();
        index.insert(center, 0usize);
        let mut depth = alloc::vec![0usize];
        let mut raw_adj: Vec<Vec<N>> = Vec::new();
        let mut layer_start = 0;
        for d in 0..=radius {
            let layer_end = nodes.len();
            for i in layer_start..layer_end {
                let ns = neighbors(&nodes[i]);
                if d < radius {
                    for n in &ns {
                        if !index.contains_key(n) {
                            if nodes.len() == cap {
                                return Err(SlabError::VertexCapExceeded { cap, radius_reached: d + 1 });
                            }
                            index.insert(n.clone(), nodes.len());
                            nodes.push(n.clone());
                            depth.push(d + 1);
                        }
                    }
                }
                raw_adj.push(ns);
            }
            layer_start = layer_end;
            if layer_start == nodes.len() {
                break;
            }
        }
        // Frontier vertices may still be unexpanded when BFS stops early.
        while raw_adj.len() < nodes.len() {
            let i = raw_adj.len();
            raw_adj.push(neighbors(&nodes[i]));
        }
        let mut adjacency: Vec<Vec<usize>> = raw_adj
            .iter()
            .enumerate()
            .map(|(i, ns)| {
                let mut row: Vec<usize> = ns.iter().filter_map(|n| index.get(n).copied()).filter(|&j| j != i).collect();
                row.sort_unstable();
                row.dedup();
                row
            })
            .collect();
        // Symmetrise in case a neighbour function is only one-sided on the frontier.
        for i in 0..adjacency.len() {
            for k in 0..adjacency[i].len() {
                let j = adjacency[i][k];
                if adjacency[j].binary_search(&i).is_err() {
                    let pos = adjacency[j].binary_search(&i).unwrap_err();
                    adjacency[j].insert(pos, i);
                }
            }
        }
        Ok(GraphSlab { nodes, index, depth, adjacency, radius })
    }

    pub fn center(&self) -> &N {
        &self.nodes[0]
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[N] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &N {
        &self.nodes[i]
    }

    pub fn index_of(&self, n: &N) -> Option<usize> {
        self.index.get(n).copied()
    }

    pub fn contains(&self, n: &N) -> bool {
        self.index.contains_key(n)
    }

    /// Hop distance from the centre.
    pub fn depth(&self, i: usize) -> usize {
        self.depth[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// BFS distances inside the slab from node `i`.
    pub fn distances_from(&self, i: usize) -> Vec<Option<usize>> {
        let mut dist = alloc::vec![None; self.nodes.len()];
        dist[i] = Some(0);
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued nodes have distances");
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distance between slab nodes, certified exact when no path leaving the
    /// ball could be shorter than the in-slab path.
    pub fn distance(&self, u: &N, v: &N) -> Result<Distance, SlabError> {
        let iu = self.index_of(u).ok_or_else(|| SlabError::NotInSlab(u.label()))?;
        let iv = self.index_of(v).ok_or_else(|| SlabError::NotInSlab(v.label()))?;
        Ok(self.distance_by_index(iu, iv))
    }

    pub fn distance_by_index(&self, iu: usize, iv: usize) -> Distance {
        let inside = self.distances_from(iu)[iv].expect("a BFS ball is connected");
        // Any path through a vertex outside the ball has length at least this.
        let escape = (self.radius + 1 - self.depth[iu]) + (self.radius + 1 - self.depth[iv]);
        if inside <= escape {
            Distance::Exact(inside)
        } else {
            Distance::AtLeast(escape)
        }
    }
}

/// Builds a ball of `Y` (full or pentagon subcomplex) around `center`.
pub fn build_coset_ball(
    center: Vertex,
    radius: usize,
    mode: CosetMode,
    cap: usize,
) -> Result<GraphSlab<Vertex>, SlabError> {
    match mode {
        CosetMode::Pentagon => {
            if center.parabolic != ParabolicId::Rs {
                return Err(SlabError::WrongCenterType(center.label()));
            }
            GraphSlab::build(center, radius, cap, |v| pentagon_neighbors(v).to_vec())
        }
        CosetMode::FullY => GraphSlab::build(center, radius, cap, full_neighbors),
    }
}

/// Builds a ball of the right Cayley graph (edges `g — g·x` for generators `x`).
pub fn build_cayley_ball(center: GroupElement, radius: usize, cap: usize) -> Result<GraphSlab<GroupElement>, SlabError> {
    GraphSlab::build(center, radius, cap, |g| Generator::ALL.iter().map(|&x| g.mul_gen(x)).collect())
}

/// Exact graph distance by bidirectional BFS, or `None` if it exceeds `max`.
pub fn bfs_distance<N, F>(u: &N, v: &N, max: usize, mut neighbors: F) -> Option<usize>
where
    N: SlabNode,
    F: FnMut(&N) -> Vec<N>,
{
    if u == v {
        return Some(0);
    }
    let mut seen = [HashMap::new(), HashMap::new()];
    seen[0].insert(u.clone(), 0usize);
    seen[1].insert(v.clone(), 0usize);
    let mut frontier = [alloc::vec![u.clone()], alloc::vec![v.clone()]];
    let mut depth = [0usize, 0usize];
    while depth[0] + depth[1] < max {
        let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        if frontier[side].is_empty() {
            return None;
        }
        let next_depth = depth[side] + 1;
        let mut next = Vec::new();
        let mut best: Option<usize> = None;
        for x in &frontier[side] {
            for y in neighbors(x) {
                if seen[side].contains_key(&y) {
                    continue;
                }
                if let Some(&d) = seen[1 - side].get(&y) {
                    let total = next_depth + d;
                    best = Some(best.map_or(total, |b: usize| b.min(total)));
                }
                seen[side].insert(y.clone(), next_depth);
                next.push(y);
            }
        }
        if let Some(total) = best {
            return (total <= max).then_some(total);
        }
        frontier[side] = next;
        depth[side] = next_depth;
    }
    None
}

/// Distance in `Y` (full or pentagon subcomplex), if at most `max`.
pub fn coset_distance(u: &Vertex, v: &Vertex, mode: CosetMode, max: usize) -> Option<usize> {
    match mode {
        CosetMode::Pentagon => bfs_distance(u, v, max, |x| pentagon_neighbors(x).to_vec()),
        CosetMode::FullY => bfs_distance(u, v, max, full_neighbors),
    }
}

fn full_neighbors(v: &Vertex) -> Vec<Vertex> {
    let mut ns = complex_neighbors(v);
    if v.parabolic == ParabolicId::Rs {
        ns.extend(pentagon_neighbors(v));
    }
    ns
}
