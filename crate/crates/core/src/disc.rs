//! Triangulated discs: validity, combinatorial curvature, isomorphism up to
//! boundary symmetry, and exhaustive enumeration under local constraints.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

/// Largest triangle budget `enumerate_discs` accepts.
pub const MAX_TRIANGLES: usize = 16;

/// A triangulated disc on vertices `0..vertex_count`. `boundary` lists the
/// boundary cycle in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriDisc {
    pub vertex_count: usize,
    pub boundary: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscError {
    Invalid(String),
    CapExceeded { requested: usize, cap: usize },
    BoundaryTooShort(usize),
    Parse(String),
}

impl fmt::Display for DiscError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiscError::Invalid(why) => write!(f, "invalid disc: {why}"),
            DiscError::CapExceeded { requested, cap } => write!(f, "triangle budget {requested} exceeds the cap {cap}"),
            DiscError::BoundaryTooShort(b) => write!(f, "boundary length {b} is below 3"),
            DiscError::Parse(why) => write!(f, "bad disc text: {why}"),
        }
    }
}

fn invalid<T>(why: String) -> Result<T, DiscError> {
    Err(DiscError::Invalid(why))
}

fn edge(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Curvature at every vertex. Interior `κ(v) = 6 − ∠(v)`, boundary
/// `κ∂(v) = 3 − ∠(v)`, with `∠(v)` the number of triangles at `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureProfile {
    pub interior: BTreeMap<usize, i64>,
    pub boundary: BTreeMap<usize, i64>,
}

impl CurvatureProfile {
    pub fn total(&self) -> i64 {
        self.interior.values().sum::<i64>() + self.boundary.values().sum::<i64>()
    }
}

impl TriDisc {
    pub fn boundary_len(&self) -> usize {
        self.boundary.len()
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        let on_boundary: BTreeSet<usize> = self.boundary.iter().copied().collect();
        (0..self.vertex_count).filter(move |v| !on_boundary.contains(v))
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.triangles.iter().flat_map(|&[a, b, c]| [edge(a, b), edge(b, c), edge(a, c)]).collect()
    }

    /// Number of triangles at each vertex.
    pub fn angles(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.vertex_count];
        for t in &self.triangles {
            for &v in t {
                out[v] += 1;
            }
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges().len() as i64 + self.triangles.len() as i64
    }

    /// Checks the simplicial and disc conditions: distinct triangles on
    /// distinct vertices, boundary edges in one triangle and the rest in two,
    /// a simple boundary cycle, vertex links that are cycles (interior) or
    /// paths (boundary), and `χ = 1`.
    pub fn validate(&self) -> Result<(), DiscError> {
        let n = self.vertex_count;
        let b = self.boundary.len();
        if b < 3 {
            return invalid(format!("boundary has {b} vertices"));
        }
        if self.boundary.iter().any(|&v| v >= n) || self.boundary.iter().collect::<BTreeSet<_>>().len() != b {
            return invalid("boundary is not a simple cycle".into());
        }
        let mut faces = BTreeSet::new();
        for t in &self.triangles {
            if t.iter().any(|&v| v >= n) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return invalid(format!("degenerate triangle {t:?}"));
            }
            let mut s = *t;
            s.sort_unstable();
            if !faces.insert(s) {
                return invalid(format!("repeated triangle {s:?}"));
            }
        }
        let mut uses: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &[a, c, d] in &self.triangles {
            for e in [edge(a, c), edge(c, d), edge(a, d)] {
                *uses.entry(e).or_default() += 1;
            }
        }
        let boundary_edges: BTreeSet<(usize, usize)> = (0..b).map(|i| edge(self.boundary[i], self.boundary[(i + 1) % b])).collect();
        for e in &boundary_edges {
            if uses.get(e) != Some(&1) {
                return invalid(format!("boundary edge {e:?} is not in exactly one triangle"));
            }
        }
        for (e, &k) in &uses {
            if !boundary_edges.contains(e) && k != 2 {
                return invalid(format!("interior edge {e:?} lies in {k} triangles"));
            }
        }
        for v in 0..n {
            let link: Vec<(usize, usize)> = self
                .triangles
                .iter()
                .filter(|t| t.contains(&v))
                .map(|t| {
                    let mut o = t.iter().copied().filter(|&x| x != v);
                    (o.next().unwrap_or(v), o.next().unwrap_or(v))
                })
                .collect();
            if link.is_empty() {
                return invalid(format!("vertex {v} is in no triangle"));
            }
            if !link_is_connected(&link) {
                return invalid(format!("link of vertex {v} is not connected"));
            }
        }
        if self.euler_characteristic() != 1 {
            return invalid(format!("Euler characteristic {}", self.euler_characteristic()));
        }
        Ok(())
    }

    /// Exact curvature, with the Gauss–Bonnet sum checked against 6.
    pub fn curvature_profile(&self) -> Result<CurvatureProfile, DiscError> {
        self.validate()?;
        let angles = self.angles();
        let on_boundary: BTreeSet<usize> = self.boundary.iter().copied().collect();
        let mut profile = CurvatureProfile { interior: BTreeMap::new(), boundary: BTreeMap::new() };
        for (v, &a) in angles.iter().enumerate() {
            if on_boundary.contains(&v) {
                profile.boundary.insert(v, 3 - a as i64);
            } else {
                profile.interior.insert(v, 6 - a as i64);
            }
        }
        if profile.total() != 6 {
            return invalid(format!("curvature sums to {}", profile.total()));
        }
        Ok(profile)
    }

    /// Whether some edge joins two non-consecutive boundary vertices.
    pub fn has_boundary_chord(&self) -> bool {
        let b = self.boundary.len();
        let pos: BTreeMap<usize, usize> = self.boundary.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        self.edges().iter().any(|(x, y)| match (pos.get(x), pos.get(y)) {
            (Some(&i), Some(&j)) => {
                let d = i.abs_diff(j);
                d != 1 && d != b - 1
            }
            _ => false,
        })
    }

    pub fn satisfies(&self, c: &DiscConstraints) -> bool {
        let angles = self.angles();
        let on_boundary: BTreeSet<usize> = self.boundary.iter().copied().collect();
        if c.locally_6_large && (0..self.vertex_count).any(|v| !on_boundary.contains(&v) && angles[v] < 6) {
            return false;
        }
        if self.boundary.iter().any(|&v| angles[v] < c.min_boundary_angle) {
            return false;
        }
        !(c.forbid_boundary_chords && self.has_boundary_chord())
    }

    /// Map `(v, u) ↦ w` for the oriented triangles `(v, u, w)`, oriented so
    /// the boundary runs in the listed direction.
    fn rotation(&self, boundary: &[usize]) -> BTreeMap<(usize, usize), usize> {
        let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, &[a, b, c]) in self.triangles.iter().enumerate() {
            for e in [edge(a, b), edge(b, c), edge(a, c)] {
                by_edge.entry(e).or_default().push(i);
            }
        }
        let mut oriented: Vec<Option<[usize; 3]>> = alloc::vec![None; self.triangles.len()];
        let (b0, b1) = (boundary[0], boundary[1]);
        let first = by_edge[&edge(b0, b1)][0];
        let third = self.triangles[first].iter().copied().find(|&x| x != b0 && x != b1).expect("triangle");
        oriented[first] = Some([b0, b1, third]);
        let mut stack = alloc::vec![first];
        while let Some(i) = stack.pop() {
            let t = oriented[i].expect("oriented before pushing");
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                for &j in &by_edge[&edge(a, b)] {
                    if oriented[j].is_none() {
                        let c = self.triangles[j].iter().copied().find(|&x| x != a && x != b).expect("triangle");
                        oriented[j] = Some([b, a, c]);
                        stack.push(j);
                    }
                }
            }
        }
        let mut next = BTreeMap::new();
        for t in oriented.into_iter().flatten() {
            for k in 0..3 {
                next.insert((t[k], t[(k + 1) % 3]), t[(k + 2) % 3]);
            }
        }
        next
    }

    /// Relabels with the given boundary sequence as `0..b` and interior
    /// vertices in fan order, breadth first.
    fn relabel_from(&self, boundary: &[usize]) -> TriDisc {
        let next = self.rotation(boundary);
        let mut label: Vec<Option<usize>> = alloc::vec![None; self.vertex_count];
        let mut order: Vec<usize> = Vec::new();
        for (i, &v) in boundary.iter().enumerate() {
            label[v] = Some(i);
            order.push(v);
        }
        let b = boundary.len();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            let start = if head < b {
                boundary[(head + 1) % b]
            } else {
                let mut nbrs: Vec<usize> = next.keys().filter(|(x, _)| *x == v).map(|&(_, u)| u).collect();
                nbrs.sort_by_key(|&u| label[u].unwrap_or(usize::MAX));
                nbrs[0]
            };
            let mut u = start;
            while let Some(&w) = next.get(&(v, u)) {
                if label[w].is_none() {
                    label[w] = Some(order.len());
                    order.push(w);
                }
                u = w;
                if u == start {
                    break;
                }
            }
            head += 1;
        }
        let map = |v: usize| label[v].expect("every vertex is reached");
        let mut triangles: Vec<[usize; 3]> = self
            .triangles
            .iter()
            .map(|t| {
                let mut s = t.map(map);
                s.sort_unstable();
                s
            })
            .collect();
        triangles.sort_unstable();
        TriDisc { vertex_count: self.vertex_count, boundary: (0..b).collect(), triangles }
    }

    /// The least relabelling over all rotations and reflections of the boundary.
    pub fn canonical(&self) -> TriDisc {
        let b = self.boundary.len();
        let mut best: Option<TriDisc> = None;
        for reflect in [false, true] {
            for shift in 0..b {
                let seq: Vec<usize> = (0..b)
                    .map(|i| if reflect { self.boundary[(shift + b - i) % b] } else { self.boundary[(shift + i) % b] })
                    .collect();
                let d = self.relabel_from(&seq);
                if best.as_ref().is_none_or(|cur| d.triangles < cur.triangles) {
                    best = Some(d);
                }
            }
        }
        best.expect("boundary is nonempty")
    }

    pub fn is_isomorphic(&self, other: &TriDisc) -> bool {
        self.vertex_count == other.vertex_count
            && self.boundary.len() == other.boundary.len()
            && self.triangles.len() == other.triangles.len()
            && self.canonical() == other.canonical()
    }

    /// Recognises the two octagon diagrams.
    pub fn name(&self) -> Option<&'static str> {
        if self.boundary.len() == 8 {
            if self.is_isomorphic(&p8()) {
                return Some("P8");
            }
            if self.is_isomorphic(&p10()) {
                return Some("P10");
            }
        }
        None
    }
}

fn link_is_connected(link: &[(usize, usize)]) -> bool {
    let mut reached: BTreeSet<usize> = BTreeSet::new();
    reached.insert(link[0].0);
    loop {
        let before = reached.len();
        for &(a, b) in link {
            if reached.contains(&a) || reached.contains(&b) {
                reached.insert(a);
                reached.insert(b);
            }
        }
        if reached.len() == before {
            break;
        }
    }
    link.iter().all(|(a, _)| reached.contains(a))
}

impl fmt::Display for TriDisc {
    /// `V E F B`, then the boundary, then one triangle per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {} {}", self.vertex_count, self.edges().len(), self.triangles.len(), self.boundary.len())?;
        let words: Vec<String> = self.boundary.iter().map(|v| format!("{v}")).collect();
        write!(f, "{}", words.join(" "))?;
        for [a, b, c] in &self.triangles {
            write!(f, "\n{a} {b} {c}")?;
        }
        Ok(())
    }
}

impl FromStr for TriDisc {
    type Err = DiscError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| DiscError::Parse(why.into());
        let nums = |line: &str| -> Result<Vec<usize>, DiscError> {
            line.split_whitespace().map(|w| w.parse::<usize>().map_err(|_| bad(w))).collect()
        };
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let head = nums(lines.next().ok_or_else(|| bad("empty"))?)?;
        let [v, e, f, b] = head[..] else { return Err(bad("header needs V E F B")) };
        let boundary = nums(lines.next().ok_or_else(|| bad("missing boundary"))?)?;
        let triangles = lines
            .map(|l| nums(l).and_then(|t| <[usize; 3]>::try_from(t).map_err(|_| bad(l))))
            .collect::<Result<Vec<_>, _>>()?;
        let disc = TriDisc { vertex_count: v, boundary, triangles };
        if disc.boundary.len() != b || disc.triangles.len() != f || disc.edges().len() != e {
            return Err(bad("counts disagree with the body"));
        }
        Ok(disc)
    }
}

/// The single triangle.
pub fn triangle() -> TriDisc {
    TriDisc { vertex_count: 3, boundary: alloc::vec![0, 1, 2], triangles: alloc::vec![[0, 1, 2]] }
}

/// An `n`-gon coned to one interior vertex `n`.
pub fn wheel(n: usize) -> TriDisc {
    TriDisc { vertex_count: n + 1, boundary: (0..n).collect(), triangles: (0..n).map(|i| [i, (i + 1) % n, n]).collect() }
}

/// The octagon wheel.
pub fn p8() -> TriDisc {
    wheel(8)
}

/// The octagon filled by two adjacent interior vertices `x = 8` (joined to
/// `0..=4`) and `w = 9` (joined to `4..=7` and `0`).
pub fn p10() -> TriDisc {
    let (x, w) = (8, 9);
    let mut triangles: Vec<[usize; 3]> = (0..4).map(|i| [i, i + 1, x]).collect();
    triangles.extend((4..8).map(|i| [i, (i + 1) % 8, w]));
    triangles.extend([[x, 4, w], [x, w, 0]]);
    TriDisc { vertex_count: 10, boundary: (0..8).collect(), triangles }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscConstraints {
    pub locally_6_large: bool,
    pub min_boundary_angle: usize,
    pub forbid_boundary_chords: bool,
}

/// A partial filling: polygon regions still to triangulate.
#[derive(Debug, Clone)]
pub struct Branch {
    regions: Vec<Vec<usize>>,
    triangles: Vec<[usize; 3]>,
    edges: BTreeSet<(usize, usize)>,
    next_vertex: usize,
}

#[derive(Debug, Clone, Copy)]
struct Limits {
    boundary: usize,
    max_triangles: usize,
    constraints: DiscConstraints,
}

impl Limits {
    /// Triangles a disc needs once it has `interior` interior vertices.
    fn triangles_for(&self, interior: usize) -> usize {
        self.boundary - 2 + 2 * interior
    }

    fn is_chord(&self, a: usize, b: usize) -> bool {
        let n = self.boundary;
        a < n && b < n && {
            let d = a.abs_diff(b);
            d != 1 && d != n - 1
        }
    }
}

impl Branch {
    fn root(boundary: usize) -> Self {
        Branch {
            regions: alloc::vec![(0..boundary).collect()],
            triangles: Vec::new(),
            edges: (0..boundary).map(|i| edge(i, (i + 1) % boundary)).collect(),
            next_vertex: boundary,
        }
    }

    fn add_edge(&mut self, a: usize, b: usize, limits: &Limits) -> bool {
        if limits.constraints.forbid_boundary_chords && limits.is_chord(a, b) {
            return false;
        }
        self.edges.insert(edge(a, b))
    }

    /// Every way to place the triangle on the first edge of the last region.
    fn children(&self, limits: &Limits) -> Vec<Branch> {
        let mut out = Vec::new();
        let mut rest = self.clone();
        let Some(region) = rest.regions.pop() else { return out };
        let k = region.len();
        let (p0, p1) = (region[0], region[1]);
        let interior = self.next_vertex - limits.boundary;
        if limits.triangles_for(interior + 1) <= limits.max_triangles {
            let x = self.next_vertex;
            let mut child = rest.clone();
            child.next_vertex += 1;
            child.triangles.push([p0, p1, x]);
            child.edges.insert(edge(p0, x));
            child.edges.insert(edge(p1, x));
            let mut grown = alloc::vec![p0, x];
            grown.extend_from_slice(&region[1..]);
            child.regions.push(grown);
            out.push(child);
        }
        for j in 2..k {
            let pj = region[j];
            let mut child = rest.clone();
            if j > 2 && !child.add_edge(p1, pj, limits) {
                continue;
            }
            if j < k - 1 && !child.add_edge(pj, p0, limits) {
                continue;
            }
            child.triangles.push([p0, p1, pj]);
            if j < k - 1 {
                let mut tail = region[j..].to_vec();
                tail.push(p0);
                child.regions.push(tail);
            }
            if j > 2 {
                child.regions.push(region[1..=j].to_vec());
            }
            if child.closed_vertices_ok(&region, limits) {
                out.push(child);
            }
        }
        out
    }

    /// Vertices of a filled region that no open region touches have their
    /// final angle; reject the branch if one already breaks a constraint.
    fn closed_vertices_ok(&self, region: &[usize], limits: &Limits) -> bool {
        let c = &limits.constraints;
        if !c.locally_6_large && c.min_boundary_angle == 0 {
            return true;
        }
        region.iter().all(|&v| {
            if self.regions.iter().any(|r| r.contains(&v)) {
                return true;
            }
            let angle = self.triangles.iter().filter(|t| t.contains(&v)).count();
            if v < limits.boundary {
                angle >= c.min_boundary_angle
            } else {
                !c.locally_6_large || angle >= 6
            }
        })
    }

    fn finish(self, limits: &Limits) -> Option<TriDisc> {
        let disc = TriDisc { vertex_count: self.next_vertex, boundary: (0..limits.boundary).collect(), triangles: self.triangles };
        disc.satisfies(&limits.constraints).then_some(disc)
    }
}

fn check_request(boundary: usize, max_triangles: usize) -> Result<(), DiscError> {
    if boundary < 3 {
        return Err(DiscError::BoundaryTooShort(boundary));
    }
    if max_triangles > MAX_TRIANGLES {
        return Err(DiscError::CapExceeded { requested: max_triangles, cap: MAX_TRIANGLES });
    }
    Ok(())
}

/// Independent subtrees of the enumeration, for running concurrently with
/// [`enumerate_branch`].
pub fn enumeration_branches(boundary: usize, max_triangles: usize, constraints: DiscConstraints) -> Result<Vec<Branch>, DiscError> {
    check_request(boundary, max_triangles)?;
    let limits = Limits { boundary, max_triangles, constraints };
    if limits.triangles_for(0) > max_triangles {
        return Ok(Vec::new());
    }
    Ok(Branch::root(boundary).children(&limits))
}

/// Canonical forms of every valid disc below `branch`.
pub fn enumerate_branch(branch: Branch, boundary: usize, max_triangles: usize, constraints: DiscConstraints) -> BTreeSet<TriDisc> {
    let limits = Limits { boundary, max_triangles, constraints };
    let mut found = BTreeSet::new();
    let mut stack = alloc::vec![branch];
    while let Some(b) = stack.pop() {
        if b.regions.is_empty() {
            if let Some(d) = b.finish(&limits) {
                debug_assert!(d.validate().is_ok(), "{d}");
                found.insert(d.canonical());
            }
        } else {
            stack.extend(b.children(&limits));
        }
    }
    found
}

/// All discs with the given boundary length and at most `max_triangles`
/// triangles meeting the constraints, one per isomorphism class, in
/// canonical form and sorted.
pub fn enumerate_discs(boundary: usize, max_triangles: usize, constraints: DiscConstraints) -> Result<Vec<TriDisc>, DiscError> {
    let mut all = BTreeSet::new();
    for branch in enumeration_branches(boundary, max_triangles, constraints)? {
        all.extend(enumerate_branch(branch, boundary, max_triangles, constraints));
    }
    Ok(sorted_discs(all))
}

/// Merged results ordered by triangle count, then canonical form.
pub fn sorted_discs(discs: BTreeSet<TriDisc>) -> Vec<TriDisc> {
    let mut out: Vec<TriDisc> = discs.into_iter().collect();
    out.sort_by(|a, b| (a.triangles.len(), a).cmp(&(b.triangles.len(), b)));
    out
}
