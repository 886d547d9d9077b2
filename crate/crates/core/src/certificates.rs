//! Certificate suites: the pentagon families and the `d_n` chain, replay of
//! implication schedules, and an exploratory search from the `D10` seed.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{GroupElement, ParabolicId, Word};
use crate::edge_type::{type_key_complex, EdgeTypeKey, Endpoint};
use crate::graph::{build_coset_ball, coset_distance, CosetMode, GraphSlab, SlabError, SlabNode, Vertex};
use crate::implication::{
    chord_classes, dihedral_closure, find_witness, find_witness_through_anchor, ChordClass, CycleWitness, ImplicationState,
};
use crate::pentagon::{family_string, string_key, trace_unbounded, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Failed,
    Inconclusive,
}

impl Verdict {
    /// The worse of two verdicts (`failed` beats `inconclusive` beats `verified`).
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Failed, _) | (_, Verdict::Failed) => Verdict::Failed,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Verified,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Failed => "failed",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A term `a_n … f_n` of the pentagon string sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub series: Series,
    pub index: usize,
}

impl Term {
    pub fn new(series: Series, index: usize) -> Self {
        Term { series, index }
    }

    pub fn key(&self) -> EdgeTypeKey {
        string_key(&family_string(self.series, self.index))
    }

    pub fn describe(&self) -> TermKey {
        TermKey {
            term: self.to_string(),
            string: family_string(self.series, self.index).to_string(),
            key: self.key(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.series, self.index)
    }
}

/// A term with its turn string and edge-type key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermKey {
    pub term: String,
    pub string: String,
    pub key: EdgeTypeKey,
}

/// The six cycle families of the pentagon tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    Pent,
    Sq,
    Rect,
    TrapA,
    TrapB,
    TrapC,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [FamilyId::Pent, FamilyId::Sq, FamilyId::Rect, FamilyId::TrapA, FamilyId::TrapB, FamilyId::TrapC];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Pent => "Pent",
            FamilyId::Sq => "Sq",
            FamilyId::Rect => "Rect",
            FamilyId::TrapA => "TrapA",
            FamilyId::TrapB => "TrapB",
            FamilyId::TrapC => "TrapC",
        }
    }

    pub fn from_name(s: &str) -> Option<FamilyId> {
        FamilyId::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s))
    }

    /// The side types the `n`-th cycle uses.
    pub fn sources(self, n: usize) -> Vec<Term> {
        use Series::*;
        match self {
            FamilyId::Pent => alloc::vec![Term::new(A, n)],
            FamilyId::Sq => alloc::vec![Term::new(C, n)],
            FamilyId::Rect => alloc::vec![Term::new(D, n), Term::new(E, n + 1)],
            FamilyId::TrapA => alloc::vec![Term::new(E, n), Term::new(A, n), Term::new(C, n)],
            FamilyId::TrapB => alloc::vec![Term::new(E, n), Term::new(F, n + 1), Term::new(C, n)],
            FamilyId::TrapC => alloc::vec![Term::new(C, n), Term::new(B, n + 1), Term::new(E, n + 1)],
        }
    }

    /// The type the `n`-th cycle implies.
    pub fn target(self, n: usize) -> Term {
        use Series::*;
        match self {
            FamilyId::Pent => Term::new(B, n),
            FamilyId::Sq => Term::new(D, n),
            FamilyId::Rect => Term::new(F, n + 1),
            FamilyId::TrapA => Term::new(E, n + 1),
            FamilyId::TrapB => Term::new(A, n + 1),
            FamilyId::TrapC => Term::new(C, n + 1),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: FamilyId,
    pub n: usize,
    pub sources: Vec<TermKey>,
    pub target: TermKey,
    /// Witness vertices as `D8:<word>` labels.
    pub witness: Option<Vec<String>>,
    pub degenerate: bool,
    pub status: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub n: usize,
    /// Whether each of `a_n … f_n` is known after the stage.
    pub bookkeeping: Vec<(String, bool)>,
    /// Distance between the ends of the `d_n` path in the pentagon tiling.
    pub d_distance_pentagon: Option<usize>,
    /// The same distance in the whole of `Y`.
    pub d_distance_full: Option<usize>,
}

impl StageReport {
    pub fn complete(&self) -> bool {
        self.bookkeeping.iter().all(|(_, ok)| *ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub max_n: usize,
    pub radius: usize,
    pub initial: EdgeTypeKey,
    pub steps: Vec<FamilyReport>,
    pub stages: Vec<StageReport>,
    pub distances_increasing: bool,
    pub status: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A ball of the pentagon tiling around `FixD8` in which family witnesses
/// are searched.
#[derive(Debug, Clone)]
pub struct PentagonSearch {
    slab: GraphSlab<Vertex>,
    radius: usize,
}

impl PentagonSearch {
    pub fn new(radius: usize, cap: usize) -> Result<Self, SlabError> {
        let slab = build_coset_ball(Vertex::fixed_by(ParabolicId::Rs), radius, CosetMode::Pentagon, cap)?;
        Ok(PentagonSearch { slab, radius })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn slab(&self) -> &GraphSlab<Vertex> {
        &self.slab
    }

    /// Looks for a cycle deriving the family's target from exactly its
    /// source types.
    pub fn verify_family(&self, family: FamilyId, n: usize) -> FamilyReport {
        let sources: Vec<TermKey> = family.sources(n).iter().map(Term::describe).collect();
        let target = family.target(n).describe();
        let state: ImplicationState<Vertex> = ImplicationState::new(sources.iter().map(|s| s.key.clone()));
        let anchor = self.slab.center().clone();
        let mut report =
            FamilyReport { family, n, sources, target, witness: None, degenerate: false, status: Verdict::Inconclusive, detail: None };
        match find_witness(&state, &report.target.key, &self.slab, &anchor, self.radius) {
            None => report.detail = Some(format!("no witness within radius {}", self.radius)),
            Some(w) => {
                report.witness = Some(w.vertices.iter().map(Vertex::label).collect());
                report.degenerate = w.is_degenerate();
                match state.check_elementary(&w) {
                    Ok(k) if k == report.target.key => report.status = Verdict::Verified,
                    Ok(k) => {
                        report.status = Verdict::Failed;
                        report.detail = Some(format!("witness implies {k}"));
                    }
                    Err(e) => {
                        report.status = Verdict::Failed;
                        report.detail = Some(e.to_string());
                    }
                }
            }
        }
        report
    }

    /// Replays the chain from the base edge: `Pent_0, Sq_0`, then for each
    /// `n = 1..=max_n` the cycles `TrapA_{n-1}, Rect_{n-1}, TrapB_{n-1},
    /// Pent_n, TrapC_{n-1}, Sq_n`. After every stage all of `a_n … f_n` must
    /// be known. `max_distance` bounds the endpoint distance computations.
    pub fn verify_d8_chain(&self, max_n: usize, max_distance: usize) -> ChainReport {
        self.verify_d8_chain_with(max_n, max_distance, |family, n| self.verify_family(family, n))
    }

    /// As [`Self::verify_d8_chain`], taking family reports from `family_report`
    /// (for instance precomputed in parallel). Every witness is still
    /// replayed against the running state.
    pub fn verify_d8_chain_with<F>(&self, max_n: usize, max_distance: usize, mut family_report: F) -> ChainReport
    where
        F: FnMut(FamilyId, usize) -> FamilyReport,
    {
        let initial = Term::new(Series::A, 0).key();
        let mut state: ImplicationState<Vertex> = ImplicationState::new([initial.clone()]);
        let mut report = ChainReport {
            max_n,
            radius: self.radius,
            initial,
            steps: Vec::new(),
            stages: Vec::new(),
            distances_increasing: true,
            status: Verdict::Verified,
            detail: None,
        };
        'stages: for stage in 0..=max_n {
            let schedule: Vec<(FamilyId, usize)> = if stage == 0 {
                alloc::vec![(FamilyId::Pent, 0), (FamilyId::Sq, 0)]
            } else {
                let m = stage - 1;
                alloc::vec![
                    (FamilyId::TrapA, m),
                    (FamilyId::Rect, m),
                    (FamilyId::TrapB, m),
                    (FamilyId::Pent, stage),
                    (FamilyId::TrapC, m),
                    (FamilyId::Sq, stage),
                ]
            };
            for (family, n) in schedule {
                let missing: Vec<String> =
                    family.sources(n).iter().filter(|t| !state.contains(&t.key())).map(|t| t.to_string()).collect();
                let mut step = family_report(family, n);
                if !missing.is_empty() {
                    step.status = Verdict::Failed;
                    step.detail = Some(format!("sources not yet derived: {}", missing.join(", ")));
                } else if step.status == Verdict::Verified {
                    let labels = step.witness.as_ref().expect("verified steps carry witnesses");
                    let vertices = labels.iter().map(|l| Vertex::parse_label(l).expect("labels round trip")).collect();
                    if let Err(e) = state.apply(CycleWitness::claiming(vertices, step.target.key.clone())) {
                        step.status = Verdict::Failed;
                        step.detail = Some(e.to_string());
                    }
                }
                let status = step.status;
                let name = format!("{family}_{n}");
                report.steps.push(step);
                if status != Verdict::Verified {
                    report.status = status;
                    report.detail = Some(format!("stage {stage}: {name} is {status}"));
                    break 'stages;
                }
            }
            let bookkeeping = Series::ALL
                .iter()
                .map(|&s| {
                    let t = Term::new(s, stage);
                    (t.to_string(), state.contains(&t.key()))
                })
                .collect();
            let trace = trace_unbounded(&family_string(Series::D, stage));
            let (start, end) = (&trace.vertices[0], trace.last());
            let stage_report = StageReport {
                n: stage,
                bookkeeping,
                d_distance_pentagon: coset_distance(start, end, CosetMode::Pentagon, max_distance),
                d_distance_full: coset_distance(start, end, CosetMode::FullY, max_distance),
            };
            if !stage_report.complete() {
                report.status = Verdict::Failed;
                report.detail = Some(format!("stage {stage}: some of a_{stage} … f_{stage} missing"));
            }
            report.stages.push(stage_report);
            if report.status != Verdict::Verified {
                break;
            }
        }
        state.replay().expect("every logged step was checked when applied");
        report.distances_increasing = strictly_increasing(report.stages.iter().map(|s| s.d_distance_pentagon))
            && strictly_increasing(report.stages.iter().map(|s| s.d_distance_full));
        if report.status == Verdict::Verified && !report.distances_increasing {
            report.status = Verdict::Failed;
            report.detail = Some("d_n endpoint distances are not strictly increasing".into());
        }
        report
    }
}

fn strictly_increasing<I: Iterator<Item = Option<usize>>>(values: I) -> bool {
    let mut prev: Option<usize> = None;
    for v in values {
        let Some(v) = v else { return false };
        if prev.is_some_and(|p| p >= v) {
            return false;
        }
        prev = Some(v);
    }
    true
}

/// Which graph a schedule lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateMode {
    Cayley,
    Complex,
}

/// The `2m`-gon `⟨a, b⟩ · base` of a clique step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralRecord {
    pub order: u8,
    pub a: String,
    pub b: String,
    pub base: String,
}

/// One line of a certificate file.
///
/// An ordinary record lists its claimed sources, the cycle and the implied
/// type. A record with `dihedral` set instead closes the orbit polygon from
/// the chord type in `sources`, and `target` must be among the results.
/// Types are written as key text or, in cayley mode, as a word `g` standing
/// for the type of `(e, g)`; cycle entries are words (cayley) or vertex
/// labels `D8:<word>` (complex).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub mode: CertificateMode,
    pub sources: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cycle: Vec<String>,
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dihedral: Option<DihedralRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CertificateRecord {
    /// A one-line human rendering, `{srcs} ↦ (cycle) target`.
    pub fn display_line(&self) -> String {
        match &self.dihedral {
            Some(d) => format!(
                "{{{}}} ↦ clique ⟨{}, {}⟩{} (order {}) ∋ {}",
                self.sources.join(", "),
                d.a,
                d.b,
                d.base,
                d.order,
                self.target
            ),
            None => format!("{{{}}} ↦ ({}) {}", self.sources.join(", "), self.cycle.join(", "), self.target),
        }
    }
}

fn parse_word(s: &str) -> Option<GroupElement> {
    let s = s.trim();
    GroupElement::parse(if s == "e" { "" } else { s }).ok()
}

fn parse_type(s: &str, mode: CertificateMode) -> Option<EdgeTypeKey> {
    let s = s.trim();
    if s.starts_with("CAY:") || s.starts_with("CPLX:") {
        let key: EdgeTypeKey = s.parse().ok()?;
        let fits = matches!((mode, &key), (CertificateMode::Cayley, EdgeTypeKey::Cayley { .. }) | (CertificateMode::Complex, EdgeTypeKey::Complex { .. }));
        return fits.then(|| key.canonical());
    }
    match mode {
        CertificateMode::Cayley => parse_word(s).map(|g| EdgeTypeKey::of_element(&g)),
        CertificateMode::Complex => None,
    }
}

/// A hypothesis of a schedule and the standard parabolic it lies in, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedAudit {
    pub key: EdgeTypeKey,
    pub parabolic: Option<ParabolicId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleStep {
    pub index: usize,
    pub line: String,
    /// Types of the cycle's sides (for clique steps, the polygon's sides and chord).
    pub side_keys: Vec<EdgeTypeKey>,
    /// Whether the listed sources are exactly the side types.
    pub sources_match: bool,
    pub derived: Vec<EdgeTypeKey>,
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub status: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleReport {
    pub seeds: Vec<SeedAudit>,
    pub steps: Vec<ScheduleStep>,
    pub known: Vec<EdgeTypeKey>,
    pub status: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ScheduleReport {
    pub fn contains(&self, key: &EdgeTypeKey) -> bool {
        self.known.contains(key)
    }
}

/// A record with its cycles resolved into group elements.
enum Resolved {
    Cycle { cycle: CycleWitness<GroupElement>, sources: BTreeSet<EdgeTypeKey> },
    Clique { cycles: Vec<CycleWitness<GroupElement>>, polygon: Vec<EdgeTypeKey>, classes: Vec<EdgeTypeKey>, target: EdgeTypeKey },
    VertexCycle { cycle: CycleWitness<Vertex>, sources: BTreeSet<EdgeTypeKey> },
}

fn resolve(record: &CertificateRecord) -> Result<Resolved, String> {
    let mode = record.mode;
    let target = parse_type(&record.target, mode).ok_or_else(|| format!("bad target `{}`", record.target))?;
    let sources = record
        .sources
        .iter()
        .map(|s| parse_type(s, mode).ok_or_else(|| format!("bad source `{s}`")))
        .collect::<Result<BTreeSet<_>, _>>()?;
    if let Some(d) = &record.dihedral {
        if mode != CertificateMode::Cayley {
            return Err("clique steps are only defined in cayley mode".into());
        }
        let [a, b, base] = [&d.a, &d.b, &d.base].map(|w| parse_word(w));
        let (Some(a), Some(b), Some(base)) = (a, b, base) else {
            return Err("bad polygon generators".into());
        };
        let seed = sources.iter().next().ok_or("clique steps need a chord type")?.clone();
        if sources.len() != 1 {
            return Err("clique steps take exactly one chord type".into());
        }
        return resolve_clique(d.order, &a, &b, &base, &seed, target);
    }
    let cycle_len = record.cycle.len();
    match mode {
        CertificateMode::Cayley => {
            let vertices = record
                .cycle
                .iter()
                .map(|w| parse_word(w).ok_or_else(|| format!("bad cycle element `{w}`")))
                .collect::<Result<Vec<_>, _>>()?;
            if cycle_len != 4 && cycle_len != 5 {
                return Err(format!("cycles must have 4 or 5 vertices, got {cycle_len}"));
            }
            Ok(Resolved::Cycle { cycle: CycleWitness::claiming(vertices, target), sources })
        }
        CertificateMode::Complex => {
            let vertices = record
                .cycle
                .iter()
                .map(|l| Vertex::parse_label(l).ok_or_else(|| format!("bad vertex `{l}`")))
                .collect::<Result<Vec<_>, _>>()?;
            if cycle_len != 4 && cycle_len != 5 {
                return Err(format!("cycles must have 4 or 5 vertices, got {cycle_len}"));
            }
            Ok(Resolved::VertexCycle { cycle: CycleWitness::claiming(vertices, target), sources })
        }
    }
}

/// Maps the abstract polygon closure onto the points `x · base`, `x ∈ ⟨a, b⟩`.
fn resolve_clique(
    order: u8,
    a: &GroupElement,
    b: &GroupElement,
    base: &GroupElement,
    seed: &EdgeTypeKey,
    target: EdgeTypeKey,
) -> Result<Resolved, String> {
    let realise = |word: &str| {
        word.chars().fold(GroupElement::identity(), |g, c| g.mul(if c == 'a' { a } else { b }))
    };
    let chord_key = |class: &ChordClass| {
        let x = realise(&class.representative());
        EdgeTypeKey::of_element(&base.inverse().mul(&x).mul(base))
    };
    let classes = chord_classes(order).map_err(|e| e.to_string())?;
    let seed_class = classes
        .iter()
        .find(|c| chord_key(c) == *seed)
        .ok_or_else(|| format!("{seed} is not a chord of the polygon"))?
        .clone();
    let closure = dihedral_closure(order, seed_class.label()).map_err(|e| e.to_string())?;
    let cycles = closure
        .steps
        .iter()
        .map(|step| {
            let points = step.cycle_words(order).iter().map(|w| realise(w).mul(base)).collect();
            CycleWitness::claiming(points, chord_key(&step.derived))
        })
        .collect();
    let side = |w: &GroupElement| EdgeTypeKey::of_element(&base.inverse().mul(w).mul(base));
    let polygon = alloc::vec![side(a), side(b), seed.clone()];
    let classes = closure.classes.iter().map(chord_key).collect();
    Ok(Resolved::Clique { cycles, polygon, classes, target })
}

fn parabolic_of(key: &EdgeTypeKey) -> Option<ParabolicId> {
    let EdgeTypeKey::Cayley { word } = key else { return None };
    let g = GroupElement::from_word(word);
    ParabolicId::ALL.into_iter().find(|p| p.elements().contains(&g))
}

/// Replays a certificate schedule.
///
/// The hypotheses are computed from the schedule itself: every side type no
/// line derives. Each is audited for membership in a standard
/// parabolic subgroup. Lines are then checked in order; the first failure
/// stops the replay.
pub fn replay_schedule(records: &[CertificateRecord]) -> ScheduleReport {
    let mut report = ScheduleReport { seeds: Vec::new(), steps: Vec::new(), known: Vec::new(), status: Verdict::Verified, detail: None };
    let mut resolved = Vec::new();
    for (index, record) in records.iter().enumerate() {
        match resolve(record) {
            Ok(r) => resolved.push(r),
            Err(e) => {
                report.status = Verdict::Failed;
                report.detail = Some(format!("line {}: {e}", index + 1));
                report.steps.push(ScheduleStep {
                    index,
                    line: record.display_line(),
                    side_keys: Vec::new(),
                    sources_match: false,
                    derived: Vec::new(),
                    degenerate: false,
                    note: record.note.clone(),
                    status: Verdict::Failed,
                    error: Some(e),
                });
                return report;
            }
        }
    }

    // A side type is a hypothesis only if no line derives it; a type used
    // before the line deriving it then fails at that use.
    let mut sides: Vec<EdgeTypeKey> = Vec::new();
    let mut derived: BTreeSet<EdgeTypeKey> = BTreeSet::new();
    for r in &resolved {
        match r {
            Resolved::Cycle { cycle, .. } => {
                sides.extend(cycle.side_keys());
                derived.extend(cycle.claimed_target.iter().cloned());
            }
            Resolved::VertexCycle { cycle, .. } => {
                sides.extend(cycle.side_keys());
                derived.extend(cycle.claimed_target.iter().cloned());
            }
            Resolved::Clique { polygon, classes, .. } => {
                sides.extend(polygon.iter().cloned());
                derived.extend(classes.iter().filter(|k| !polygon.contains(k)).cloned());
            }
        }
    }
    let mut seeds: Vec<EdgeTypeKey> = sides.into_iter().filter(|k| !derived.contains(k)).collect();
    seeds.sort();
    seeds.dedup();
    report.seeds = seeds.iter().map(|k| SeedAudit { key: k.clone(), parabolic: parabolic_of(k) }).collect();
    if report.seeds.iter().any(|s| s.parabolic.is_none() && s.key.is_cayley()) {
        report.status = Verdict::Failed;
        report.detail = Some("a hypothesis lies outside the standard parabolic subgroups".into());
    }

    let mut cayley: ImplicationState<GroupElement> = ImplicationState::new(seeds.iter().filter(|k| k.is_cayley()).cloned());
    let mut complex: ImplicationState<Vertex> = ImplicationState::new(seeds.iter().filter(|k| !k.is_cayley()).cloned());
    for (index, (record, r)) in records.iter().zip(resolved).enumerate() {
        let mut step = ScheduleStep {
            index,
            line: record.display_line(),
            side_keys: Vec::new(),
            sources_match: true,
            derived: Vec::new(),
            degenerate: false,
            note: record.note.clone(),
            status: Verdict::Verified,
            error: None,
        };
        let outcome = match r {
            Resolved::Cycle { cycle, sources } => {
                step.side_keys = cycle.side_keys();
                step.sources_match = step.side_keys.iter().cloned().collect::<BTreeSet<_>>() == sources;
                step.degenerate = cycle.is_degenerate();
                cayley.apply(cycle).map(|k| alloc::vec![k]).map_err(|e| e.to_string())
            }
            Resolved::VertexCycle { cycle, sources } => {
                step.side_keys = cycle.side_keys();
                step.sources_match = step.side_keys.iter().cloned().collect::<BTreeSet<_>>() == sources;
                step.degenerate = cycle.is_degenerate();
                complex.apply(cycle).map(|k| alloc::vec![k]).map_err(|e| e.to_string())
            }
            Resolved::Clique { cycles, polygon, target, .. } => {
                step.side_keys = polygon;
                let mut out = Vec::new();
                let mut result = Ok(());
                for c in cycles {
                    step.degenerate |= c.is_degenerate();
                    match cayley.apply(c) {
                        Ok(k) => out.push(k),
                        Err(e) => {
                            result = Err(e.to_string());
                            break;
                        }
                    }
                }
                result.and_then(|_| {
                    if cayley.contains(&target) {
                        Ok(out)
                    } else {
                        Err(format!("the clique does not contain {target}"))
                    }
                })
            }
        };
        match outcome {
            Ok(keys) => step.derived = keys,
            Err(e) => {
                step.status = Verdict::Failed;
                step.error = Some(e);
            }
        }
        let failed = step.status == Verdict::Failed;
        report.steps.push(step);
        if failed {
            report.status = Verdict::Failed;
            report.detail = Some(format!("line {} failed: {}", index + 1, record.display_line()));
            break;
        }
    }
    if report.status == Verdict::Verified {
        cayley.replay().expect("steps were checked when applied");
        complex.replay().expect("steps were checked when applied");
    }
    report.known = cayley.known().iter().chain(complex.known().iter()).cloned().collect();
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub depth: usize,
    pub key: EdgeTypeKey,
    /// Distance in `Y` between `FixD10` and the nearest partner of this type.
    pub distance: usize,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct D10SearchReport {
    pub max_depth: usize,
    pub radius: usize,
    pub seed: EdgeTypeKey,
    pub seed_distance: usize,
    pub candidates: usize,
    pub derived: Vec<Derivation>,
    pub max_distance: usize,
    /// Largest distance reached after each depth.
    pub distance_by_depth: Vec<usize>,
    pub status: Verdict,
    pub detail: String,
}

/// Breadth-first closure from the type of `(FixD10, r·FixD10)`.
///
/// Every type of a pair `(FixD10, v)` with `v` a `D10` vertex of the ball is
/// a candidate; each round derives every candidate that has a witness
/// through `FixD10` against the previous round's set. The result is
/// observational, so the verdict is always `inconclusive`.
pub fn auto_search_d10(max_depth: usize, radius: usize, cap: usize) -> Result<D10SearchReport, SlabError> {
    let anchor = Vertex::fixed_by(ParabolicId::St);
    let slab = build_coset_ball(anchor.clone(), radius, CosetMode::FullY, cap)?;
    let r = GroupElement::parse("r").expect("valid word");
    let seed_vertex = anchor.act(&r);
    let seed = type_key_complex(&anchor, &seed_vertex);

    let mut candidates: Vec<(EdgeTypeKey, usize)> = Vec::new();
    for i in 1..slab.len() {
        let v = slab.node(i);
        if v.parabolic() != ParabolicId::St {
            continue;
        }
        let k = anchor.type_key(v);
        if !candidates.iter().any(|(c, _)| *c == k) {
            candidates.push((k, slab.depth(i)));
        }
    }
    let seed_distance = candidates.iter().find(|(k, _)| *k == seed).map_or_else(
        || coset_distance(&anchor, &seed_vertex, CosetMode::FullY, 8).unwrap_or(0),
        |(_, d)| *d,
    );

    let mut state: ImplicationState<Vertex> = ImplicationState::new([seed.clone()]);
    let mut derived = Vec::new();
    let mut distance_by_depth = alloc::vec![seed_distance];
    let mut max_distance = seed_distance;
    for depth in 1..=max_depth {
        let round: Vec<(EdgeTypeKey, usize, CycleWitness<Vertex>)> = candidates
            .iter()
            .filter(|(k, _)| !state.contains(k))
            .filter_map(|(k, d)| find_witness_through_anchor(&state, k, &slab, &anchor, radius).map(|w| (k.clone(), *d, w)))
            .collect();
        if round.is_empty() {
            break;
        }
        for (key, distance, witness) in round {
            let labels = witness.vertices.iter().map(SlabNode::label).collect();
            state.apply(witness).expect("witnesses were found against an earlier subset of this state");
            max_distance = max_distance.max(distance);
            derived.push(Derivation { depth, key, distance, witness: labels });
        }
        distance_by_depth.push(max_distance);
    }
    let detail = if derived.is_empty() {
        String::from("no derivation found within bounds")
    } else {
        format!("{} types derived; largest distance {}", derived.len(), max_distance)
    };
    Ok(D10SearchReport {
        max_depth,
        radius,
        seed,
        seed_distance,
        candidates: candidates.len(),
        derived,
        max_distance,
        distance_by_depth,
        status: Verdict::Inconclusive,
        detail,
    })
}

/// Word of a Cayley key, for display.
pub fn key_word(key: &EdgeTypeKey) -> &Word {
    key.word()
}
