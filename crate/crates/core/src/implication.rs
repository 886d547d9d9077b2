//! Elementary and chain implications between edge types.
//!
//! A 4- or 5-cycle whose sides all carry known types and whose diagonals all
//! carry one type `E` implies `E`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::coxeter::GroupElement;
use crate::edge_type::{EdgeTypeKey, Endpoint};
use crate::graph::GraphSlab;

/// A hypothetical cycle; consecutive vertices (cyclically) are its sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness<N> {
    pub vertices: Vec<N>,
    pub claimed_target: Option<EdgeTypeKey>,
}

impl<N: Endpoint> CycleWitness<N> {
    pub fn new(vertices: Vec<N>) -> Self {
        CycleWitness { vertices, claimed_target: None }
    }

    pub fn claiming(vertices: Vec<N>, target: EdgeTypeKey) -> Self {
        CycleWitness { vertices, claimed_target: Some(target) }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True if some vertex repeats.
    pub fn is_degenerate(&self) -> bool {
        let v = &self.vertices;
        (0..v.len()).any(|i| (i + 1..v.len()).any(|j| v[i] == v[j]))
    }

    /// Index pairs of the sides.
    pub fn side_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    /// Index pairs of the diagonals.
    pub fn diagonal_pairs(&self) -> Vec<(usize, usize)> {
        diagonal_pairs(self.vertices.len())
    }

    pub fn side_keys(&self) -> Vec<EdgeTypeKey> {
        self.side_pairs().into_iter().map(|(i, j)| self.vertices[i].type_key(&self.vertices[j])).collect()
    }

    pub fn diagonal_keys(&self) -> Vec<EdgeTypeKey> {
        self.diagonal_pairs().into_iter().map(|(i, j)| self.vertices[i].type_key(&self.vertices[j])).collect()
    }
}

fn diagonal_pairs(n: usize) -> Vec<(usize, usize)> {
    match n {
        4 => alloc::vec![(0, 2), (1, 3)],
        5 => alloc::vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)],
        _ => Vec::new(),
    }
}

/// Why a cycle fails to imply anything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImplicationError {
    BadLength(usize),
    SideNotKnown { index: usize, key: EdgeTypeKey },
    DiagonalsNotUniform { keys: Vec<EdgeTypeKey> },
    TargetMismatch { claimed: EdgeTypeKey, derived: EdgeTypeKey },
    /// Replay found keys that no logged step accounts for.
    UnexplainedKeys { keys: Vec<EdgeTypeKey> },
}

impl fmt::Display for ImplicationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImplicationError::BadLength(n) => write!(f, "cycles must have 4 or 5 vertices, got {n}"),
            ImplicationError::SideNotKnown { index, key } => write!(f, "side {index} has type {key}, which is not known"),
            ImplicationError::DiagonalsNotUniform { keys } => {
                f.write_str("diagonals carry several types:")?;
                for k in keys {
                    write!(f, " {k}")?;
                }
                Ok(())
            }
            ImplicationError::TargetMismatch { claimed, derived } => {
                write!(f, "cycle implies {derived}, not the claimed {claimed}")
            }
            ImplicationError::UnexplainedKeys { keys } => {
                f.write_str("keys without a derivation:")?;
                for k in keys {
                    write!(f, " {k}")?;
                }
                Ok(())
            }
        }
    }
}

/// A failed step of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainError {
    pub step: usize,
    pub error: ImplicationError,
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.error)
    }
}

/// One accepted derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogEntry<N> {
    pub witness: CycleWitness<N>,
    pub derived: EdgeTypeKey,
    pub degenerate: bool,
    pub already_known: bool,
}

/// A growing set of edge types with the derivations that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationState<N> {
    initial: BTreeSet<EdgeTypeKey>,
    known: BTreeSet<EdgeTypeKey>,
    log: Vec<LogEntry<N>>,
}

impl<N: Endpoint> ImplicationState<N> {
    pub fn new<I: IntoIterator<Item = EdgeTypeKey>>(initial: I) -> Self {
        let initial: BTreeSet<EdgeTypeKey> = initial.into_iter().collect();
        ImplicationState { known: initial.clone(), initial, log: Vec::new() }
    }

    pub fn initial(&self) -> &BTreeSet<EdgeTypeKey> {
        &self.initial
    }

    pub fn known(&self) -> &BTreeSet<EdgeTypeKey> {
        &self.known
    }

    pub fn contains(&self, key: &EdgeTypeKey) -> bool {
        self.known.contains(key)
    }

    pub fn log(&self) -> &[LogEntry<N>] {
        &self.log
    }

    /// The type implied by `cycle`, if the cycle is a valid witness here.
    pub fn check_elementary(&self, cycle: &CycleWitness<N>) -> Result<EdgeTypeKey, ImplicationError> {
        check_against(&self.known, cycle)
    }

    /// Checks `cycle` and records its conclusion.
    pub fn apply(&mut self, cycle: CycleWitness<N>) -> Result<EdgeTypeKey, ImplicationError> {
        let derived = self.check_elementary(&cycle)?;
        let already_known = self.known.contains(&derived);
        self.known.insert(derived.clone());
        self.log.push(LogEntry { degenerate: cycle.is_degenerate(), witness: cycle, derived: derived.clone(), already_known });
        Ok(derived)
    }

    /// Applies `cycles` in order; on failure `self` is left untouched.
    pub fn close_chain<I: IntoIterator<Item = CycleWitness<N>>>(&mut self, cycles: I) -> Result<(), ChainError> {
        let mut next = self.clone();
        for (step, cycle) in cycles.into_iter().enumerate() {
            next.apply(cycle).map_err(|error| ChainError { step, error })?;
        }
        *self = next;
        Ok(())
    }

    /// Replays the log from the initial set, checking every entry against
    /// the state at its position and that `known` is exactly what was derived.
    pub fn replay(&self) -> Result<(), ChainError> {
        let mut known = self.initial.clone();
        for (step, entry) in self.log.iter().enumerate() {
            let derived = check_against(&known, &entry.witness).map_err(|error| ChainError { step, error })?;
            if derived != entry.derived {
                return Err(ChainError {
                    step,
                    error: ImplicationError::TargetMismatch { claimed: entry.derived.clone(), derived },
                });
            }
            known.insert(derived);
        }
        if known != self.known {
            return Err(ChainError {
                step: self.log.len(),
                error: ImplicationError::UnexplainedKeys { keys: self.known.symmetric_difference(&known).cloned().collect() },
            });
        }
        Ok(())
    }
}

fn check_against<N: Endpoint>(known: &BTreeSet<EdgeTypeKey>, cycle: &CycleWitness<N>) -> Result<EdgeTypeKey, ImplicationError> {
    let n = cycle.len();
    if n != 4 && n != 5 {
        return Err(ImplicationError::BadLength(n));
    }
    for (index, key) in cycle.side_keys().into_iter().enumerate() {
        if !known.contains(&key) {
            return Err(ImplicationError::SideNotKnown { index, key });
        }
    }
    let diagonals = cycle.diagonal_keys();
    let distinct: BTreeSet<EdgeTypeKey> = diagonals.iter().cloned().collect();
    if distinct.len() != 1 {
        return Err(ImplicationError::DiagonalsNotUniform { keys: distinct.into_iter().collect() });
    }
    let derived = diagonals.into_iter().next().expect("cycles have diagonals");
    if let Some(claimed) = &cycle.claimed_target {
        if *claimed != derived {
            return Err(ImplicationError::TargetMismatch { claimed: claimed.clone(), derived });
        }
    }
    Ok(derived)
}

/// Candidate generation for witness search: typed neighbours, possibly
/// filtered to a region and reordered.
struct Neighborhoods<'a, N, F> {
    known: &'a BTreeSet<EdgeTypeKey>,
    typed: F,
    cache: HashMap<N, Vec<N>>,
}

impl<'a, N: Endpoint, F: Fn(&N, &EdgeTypeKey) -> Vec<N>> Neighborhoods<'a, N, F> {
    fn known_neighbors(&mut self, v: &N) -> Vec<N> {
        if let Some(found) = self.cache.get(v) {
            return found.clone();
        }
        let mut all: Vec<N> = Vec::new();
        for key in self.known {
            for n in (self.typed)(v, key) {
                if !all.contains(&n) {
                    all.push(n);
                }
            }
        }
        self.cache.insert(v.clone(), all.clone());
        all
    }

    fn is_known(&self, u: &N, v: &N) -> bool {
        self.known.contains(&u.type_key(v))
    }
}

fn common<N: Endpoint>(a: &[N], b: &[N]) -> Vec<N> {
    a.iter().filter(|x| b.contains(x)).cloned().collect()
}

/// Every witness of the given length with first vertex `anchor`, in
/// generation order.
fn cycles_through<N: Endpoint, F: Fn(&N, &EdgeTypeKey) -> Vec<N>>(
    space: &mut Neighborhoods<'_, N, F>,
    anchor: &N,
    target: &EdgeTypeKey,
    len: usize,
) -> Vec<Vec<N>> {
    let mut out = Vec::new();
    let far = (space.typed)(anchor, target);
    let around = space.known_neighbors(anchor);
    if len == 4 {
        for v2 in &far {
            let both = common(&around, &space.known_neighbors(v2));
            for v1 in &both {
                for v3 in &both {
                    if v1.type_key(v3) == *target {
                        out.push(alloc::vec![anchor.clone(), v1.clone(), v2.clone(), v3.clone()]);
                    }
                }
            }
        }
        return out;
    }
    for v2 in &far {
        let left = common(&around, &space.known_neighbors(v2));
        for v3 in &far {
            if !space.is_known(v2, v3) {
                continue;
            }
            let firsts: Vec<&N> = left.iter().filter(|v1| v1.type_key(v3) == *target).collect();
            if firsts.is_empty() {
                continue;
            }
            let right = common(&space.known_neighbors(v3), &around);
            let lasts: Vec<&N> = right.iter().filter(|v4| v2.type_key(v4) == *target).collect();
            for v1 in &firsts {
                for v4 in &lasts {
                    if v1.type_key(v4) == *target {
                        out.push(alloc::vec![anchor.clone(), (*v1).clone(), v2.clone(), v3.clone(), (*v4).clone()]);
                    }
                }
            }
        }
    }
    out
}

/// Searches for a cycle of slab vertices within `radius` of `anchor` that
/// implies `target` from the known types of `state`.
///
/// Cycles through the anchor are tried first, 4-cycles before 5-cycles, the
/// lexicographically least slab indices winning. Failing that, cycles
/// through the anchor are built without a radius bound, again 4 before 5,
/// and the first that has a translate inside the ball is returned, trying
/// translations that move each slab vertex (in BFS order) onto the anchor.
pub fn find_witness<N: Endpoint>(
    state: &ImplicationState<N>,
    target: &EdgeTypeKey,
    slab: &GraphSlab<N>,
    anchor: &N,
    radius: usize,
) -> Option<CycleWitness<N>> {
    search(state, target, slab, anchor, radius, true)
}

/// [`find_witness`] restricted to cycles through the anchor.
pub fn find_witness_through_anchor<N: Endpoint>(
    state: &ImplicationState<N>,
    target: &EdgeTypeKey,
    slab: &GraphSlab<N>,
    anchor: &N,
    radius: usize,
) -> Option<CycleWitness<N>> {
    search(state, target, slab, anchor, radius, false)
}

fn search<N: Endpoint>(
    state: &ImplicationState<N>,
    target: &EdgeTypeKey,
    slab: &GraphSlab<N>,
    anchor: &N,
    radius: usize,
    translates: bool,
) -> Option<CycleWitness<N>> {
    let a = slab.index_of(anchor)?;
    let within: Vec<bool> = if a == 0 {
        (0..slab.len()).map(|i| slab.depth(i) <= radius).collect()
    } else {
        slab.distances_from(a).into_iter().map(|d| d.is_some_and(|d| d <= radius)).collect()
    };
    let inside = |v: &N| slab.index_of(v).filter(|&i| within[i]);

    let mut bounded = Neighborhoods {
        known: state.known(),
        typed: |v: &N, key: &EdgeTypeKey| {
            let mut found: Vec<(usize, N)> = v.type_neighbors(key).into_iter().filter_map(|n| inside(&n).map(|i| (i, n))).collect();
            found.sort_by_key(|(i, _)| *i);
            found.into_iter().map(|(_, n)| n).collect()
        },
        cache: HashMap::new(),
    };
    for len in [4, 5] {
        let best = cycles_through(&mut bounded, anchor, target, len)
            .into_iter()
            .min_by_key(|c| c.iter().map(|v| inside(v).expect("bounded candidates are inside")).collect::<Vec<_>>());
        if let Some(vertices) = best {
            return Some(CycleWitness::claiming(vertices, target.clone()));
        }
    }

    if !translates {
        return None;
    }
    let mut unbounded = Neighborhoods { known: state.known(), typed: |v: &N, key: &EdgeTypeKey| v.type_neighbors(key), cache: HashMap::new() };
    for len in [4, 5] {
        for cycle in cycles_through(&mut unbounded, anchor, target, len) {
            if let Some(moved) = fit_translate(&cycle, slab, &within) {
                return Some(CycleWitness::claiming(moved, target.clone()));
            }
        }
    }
    None
}

/// A translate of `cycle` (whose first vertex is the slab's anchor) lying in
/// the marked ball: the first marked slab vertex `y`, in BFS order, that is
/// within the radius of every cycle vertex is moved onto the anchor.
fn fit_translate<N: Endpoint>(cycle: &[N], slab: &GraphSlab<N>, within: &[bool]) -> Option<Vec<N>> {
    let anchor = &cycle[0];
    // d(y, v) = d(w·y, anchor) for w carrying v to the anchor.
    let to_anchor: Vec<GroupElement> = cycle[1..].iter().map(|v| v.carrier_to(anchor)).collect::<Option<_>>()?;
    let near = |n: &N| slab.index_of(n).is_some_and(|j| within[j]);
    for (i, y) in slab.nodes().iter().enumerate() {
        if !within[i] || !to_anchor.iter().all(|w| near(&y.act(w))) {
            continue;
        }
        let Some(w) = y.carrier_to(anchor) else { continue };
        return Some(cycle.iter().map(|v| v.act(&w)).collect());
    }
    None
}

/// Element `x ↦ ±x + shift` of the dihedral group of order `2m`, generated by
/// `a: x ↦ -x` and `b: x ↦ 1 - x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub flip: bool,
    pub shift: u8,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement { flip: false, shift: 0 };
    pub const A: DihedralElement = DihedralElement { flip: true, shift: 0 };
    pub const B: DihedralElement = DihedralElement { flip: true, shift: 1 };

    /// `self ∘ other`.
    pub fn compose(self, other: DihedralElement, m: u8) -> DihedralElement {
        let moved = if self.flip { (m - other.shift) % m } else { other.shift };
        DihedralElement { flip: self.flip ^ other.flip, shift: (self.shift + moved) % m }
    }

    pub fn inverse(self, m: u8) -> DihedralElement {
        if self.flip {
            self
        } else {
            DihedralElement { flip: false, shift: (m - self.shift) % m }
        }
    }
}

/// The alternating word in `a`, `b` of an element: `(starts with a, length)`.
fn dihedral_words(m: u8) -> BTreeMap<DihedralElement, String> {
    let mut out = BTreeMap::new();
    out.insert(DihedralElement::IDENTITY, String::new());
    for first in [true, false] {
        let mut word = String::new();
        let mut g = DihedralElement::IDENTITY;
        for k in 0..m {
            let use_a = (k % 2 == 0) == first;
            g = g.compose(if use_a { DihedralElement::A } else { DihedralElement::B }, m);
            word.push(if use_a { 'a' } else { 'b' });
            out.entry(g).or_insert_with(|| word.clone());
        }
    }
    out
}

/// Orbit of an unordered pair of points of the `2m`-gon, named as in the
/// chord labelling: `1a`, `1b` are the two kinds of side, `2` is `(v, abv)`,
/// `3` is `(v, abav)`, `3'` is `(v, babv)`, `4` is `(v, ababv)`, `5` is
/// `(v, ababav)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordClass(String);

impl ChordClass {
    pub fn label(&self) -> &str {
        &self.0
    }

    /// Parses a label and checks it exists for the `2m`-gon.
    pub fn parse(label: &str, m: u8) -> Result<ChordClass, DihedralError> {
        if m != 4 && m != 5 {
            return Err(DihedralError::UnsupportedOrder(m));
        }
        let all = chord_classes(m)?;
        all.into_iter().find(|c| c.0 == label).ok_or_else(|| DihedralError::InvalidSeed(String::from(label)))
    }

    fn of_element(g: DihedralElement, m: u8, words: &BTreeMap<DihedralElement, String>) -> Option<ChordClass> {
        let w = &words[&g];
        let label = match (w.len(), w.starts_with('a')) {
            (0, _) => return None,
            (1, true) => String::from("1a"),
            (1, false) => String::from("1b"),
            (n, true) if n % 2 == 1 && n < m as usize => alloc::format!("{n}"),
            (n, false) if n % 2 == 1 && n < m as usize => alloc::format!("{n}'"),
            (n, _) => alloc::format!("{n}"),
        };
        Some(ChordClass(label))
    }

    /// Sides are not chords.
    pub fn is_side(&self) -> bool {
        self.0.starts_with('1')
    }

    /// A word in `a`, `b` whose element represents this class.
    pub fn representative(&self) -> String {
        let len: usize = self.0.trim_end_matches('\'').parse().expect("labels start with a length");
        let first = if self.0 == "1b" || self.0.ends_with('\'') { 'b' } else { 'a' };
        let other = if first == 'a' { 'b' } else { 'a' };
        (0..len).map(|i| if i % 2 == 0 { first } else { other }).collect()
    }
}

impl fmt::Display for ChordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DihedralError {
    UnsupportedOrder(u8),
    InvalidSeed(String),
}

impl fmt::Display for DihedralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DihedralError::UnsupportedOrder(m) => write!(f, "dihedral order {m} is not 4 or 5"),
            DihedralError::InvalidSeed(s) => write!(f, "`{s}` is not a chord class"),
        }
    }
}

/// All chord classes (sides excluded) of the `2m`-gon, `m ∈ {4, 5}`.
pub fn chord_classes(m: u8) -> Result<Vec<ChordClass>, DihedralError> {
    if m != 4 && m != 5 {
        return Err(DihedralError::UnsupportedOrder(m));
    }
    let words = dihedral_words(m);
    let mut out: Vec<ChordClass> =
        words.keys().filter_map(|&g| ChordClass::of_element(g, m, &words)).filter(|c| !c.is_side()).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// A derivation in the abstract `2m`-gon: the cycle (as group elements
/// applied to the base point) and the class it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralStep {
    pub cycle: Vec<DihedralElement>,
    pub derived: ChordClass,
}

impl DihedralStep {
    /// The cycle vertices as alternating words in `a`, `b`.
    pub fn cycle_words(&self, m: u8) -> Vec<String> {
        let words = dihedral_words(m);
        self.cycle.iter().map(|g| words[g].clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralClosure {
    pub order: u8,
    pub seed: ChordClass,
    pub classes: BTreeSet<ChordClass>,
    pub steps: Vec<DihedralStep>,
}

impl DihedralClosure {
    pub fn is_complete(&self) -> bool {
        chord_classes(self.order).map(|all| all.iter().all(|c| self.classes.contains(c))).unwrap_or(false)
    }
}

/// Closes `{1a, 1b, seed}` under elementary implications by cycles in the
/// orbit of a point under the dihedral group of order `2m`.
///
/// Each round adds the first new class found scanning 4-cycles then
/// 5-cycles with first vertex at the base point.
pub fn dihedral_closure(m: u8, seed: &str) -> Result<DihedralClosure, DihedralError> {
    let seed = ChordClass::parse(seed, m)?;
    let words = dihedral_words(m);
    let points: Vec<DihedralElement> = words.keys().copied().collect();
    let class = |x: DihedralElement, y: DihedralElement| ChordClass::of_element(x.inverse(m).compose(y, m), m, &words);

    let mut known: BTreeSet<ChordClass> = BTreeSet::new();
    known.insert(ChordClass(String::from("1a")));
    known.insert(ChordClass(String::from("1b")));
    known.insert(seed.clone());
    let mut steps = Vec::new();

    'rounds: loop {
        for len in [4usize, 5] {
            let diagonals = diagonal_pairs(len);
            let mut idx = alloc::vec![0usize; len - 1];
            loop {
                let mut cycle = alloc::vec![DihedralElement::IDENTITY];
                cycle.extend(idx.iter().map(|&i| points[i]));
                let sides_ok = (0..len).all(|i| class(cycle[i], cycle[(i + 1) % len]).is_some_and(|c| known.contains(&c)));
                if sides_ok {
                    let diag: Vec<Option<ChordClass>> = diagonals.iter().map(|&(i, j)| class(cycle[i], cycle[j])).collect();
                    if let Some(Some(first)) = diag.first() {
                        if diag.iter().all(|d| d.as_ref() == Some(first)) && !known.contains(first) {
                            known.insert(first.clone());
                            steps.push(DihedralStep { cycle, derived: first.clone() });
                            continue 'rounds;
                        }
                    }
                }
                let mut pos = idx.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < points.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
                if idx.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        break;
    }

    let classes = known.into_iter().filter(|c| !c.is_side()).collect();
    Ok(DihedralClosure { order: m, seed, classes, steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> GroupElement {
        GroupElement::parse(s).unwrap()
    }

    fn key(s: &str) -> EdgeTypeKey {
        EdgeTypeKey::of_word(s).unwrap()
    }

    fn cycle(words: &[&str]) -> CycleWitness<GroupElement> {
        CycleWitness::new(words.iter().map(|w| el(w)).collect())
    }

    #[test]
    fn first_connecting_step() {
        let state = ImplicationState::new([key("tr"), key("tst"), key("rsr")]);
        let derived = state.check_elementary(&cycle(&["", "tr", "tsr", "tst"])).unwrap();
        assert_eq!(derived, key("tsr"));
    }

    #[test]
    fn unknown_side_is_reported() {
        let state = ImplicationState::new([key("tr"), key("tst")]);
        let err = state.check_elementary(&cycle(&["", "tr", "tsr", "tst"])).unwrap_err();
        assert!(matches!(err, ImplicationError::SideNotKnown { .. }));
    }

    #[test]
    fn wrong_lengths_are_rejected() {
        let state = ImplicationState::<GroupElement>::new([key("r")]);
        assert_eq!(state.check_elementary(&cycle(&["", "r", "rs"])).unwrap_err(), ImplicationError::BadLength(3));
    }

    #[test]
    fn chains_are_atomic() {
        let mut state = ImplicationState::new([key("tr"), key("tst"), key("rsr")]);
        let before = state.clone();
        let err = state.close_chain([cycle(&["", "tr", "tsr", "tst"]), cycle(&["", "r", "rs", "s"])]).unwrap_err();
        assert_eq!(err.step, 1);
        assert_eq!(state, before);
        state.close_chain(Vec::new()).unwrap();
        assert_eq!(state, before);
        state.close_chain([cycle(&["", "tr", "tsr", "tst"])]).unwrap();
        assert!(state.contains(&key("tsr")));
        state.replay().unwrap();
    }

    #[test]
    fn dihedral_words_cover_the_group() {
        for m in [4u8, 5] {
            assert_eq!(dihedral_words(m).len(), 2 * m as usize);
        }
        let labels: Vec<String> = chord_classes(4).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(labels, ["2", "3", "3'", "4"]);
        let labels: Vec<String> = chord_classes(5).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(labels, ["2", "3", "3'", "4", "5"]);
    }

    #[test]
    fn dihedral_seeds() {
        assert!(dihedral_closure(4, "3").unwrap().is_complete());
        assert!(dihedral_closure(4, "4").unwrap().is_complete());
        assert!(dihedral_closure(5, "5").unwrap().is_complete());
        assert_eq!(dihedral_closure(4, "5").unwrap_err(), DihedralError::InvalidSeed("5".into()));
        assert_eq!(dihedral_closure(4, "1a").unwrap_err(), DihedralError::InvalidSeed("1a".into()));
        assert_eq!(dihedral_closure(6, "2").unwrap_err(), DihedralError::UnsupportedOrder(6));
    }

    #[test]
    fn class_representatives() {
        assert_eq!(ChordClass::parse("3'", 5).unwrap().representative(), "bab");
        assert_eq!(ChordClass::parse("4", 4).unwrap().representative(), "abab");
    }
}
