//! Suite runners. Each returns a finished [`Report`].

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;
use tricox_core::certificates::{
    auto_search_d10, replay_schedule, CertificateRecord, FamilyId, FamilyReport, PentagonSearch, Verdict,
};
use tricox_core::disc::{enumerate_branch, enumeration_branches, sorted_discs, wheel, DiscConstraints, TriDisc};
use tricox_core::graph::DEFAULT_VERTEX_CAP;
use tricox_core::implication::{chord_classes, dihedral_closure};
use tricox_core::EdgeTypeKey;

use crate::report::{Report, StepRecord};

/// The connecting-cliques schedule shipped with the tool.
pub const CONNECTING_CLIQUES: &str = include_str!("../data/connecting_cliques.jsonl");

/// Types the built-in schedule must end up containing.
pub const CONNECTING_FINAL: [&str; 27] = [
    "tsr", "trs", "trsr", "trst", "trsrst", "rtstsr", "tsrst", "trsrs", "tsrs", "rtsts", "rtststr", "rtstst", "rsts", "rstst",
    "strs", "srsts", "strst", "srstst", "strsts", "srststs", "rsrsts", "rstrs", "rstrst", "rsrstst", "rstsr", "rstrsts",
    "rstrstst",
];

/// The hypothesis set as usually stated for the list, kept for comparison
/// with the one computed from the schedule.
pub const STATED_SEEDS: [&str; 14] =
    ["tr", "tst", "rsr", "ts", "r", "rs", "tstst", "t", "srs", "sts", "srsr", "rsr", "s", "tst"];

pub fn parse_certificates(text: &str) -> Result<Vec<CertificateRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).with_context(|| format!("certificate line {}", i + 1)))
        .collect()
}

fn key_of(word: &str) -> EdgeTypeKey {
    EdgeTypeKey::of_word(word).expect("built-in words parse")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyConfig {
    /// `None` means the built-in list.
    pub certs: Option<String>,
}

pub fn cayley_certs(config: &CayleyConfig) -> Result<Report> {
    let started = Instant::now();
    let text = match &config.certs {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => CONNECTING_CLIQUES.to_owned(),
    };
    let records = parse_certificates(&text)?;
    let schedule = replay_schedule(&records);
    let steps = schedule
        .steps
        .iter()
        .map(|s| StepRecord::new(format!("line {}", s.index + 1), s.status, s))
        .collect();
    let mut status = schedule.status;
    let mut summary = json!({
        "lines": records.len(),
        "hypotheses": schedule.seeds,
        "known": schedule.known.len(),
        "sources_mismatch": schedule.steps.iter().filter(|s| !s.sources_match).map(|s| s.index + 1).collect::<Vec<_>>(),
    });
    if let Some(detail) = &schedule.detail {
        summary["detail"] = json!(detail);
    }
    if config.certs.is_none() {
        let missing: Vec<&str> = CONNECTING_FINAL.iter().copied().filter(|w| !schedule.contains(&key_of(w))).collect();
        let computed: BTreeSet<EdgeTypeKey> = schedule.seeds.iter().map(|s| s.key.clone()).collect();
        let stated: BTreeSet<EdgeTypeKey> = STATED_SEEDS.iter().map(|w| key_of(w)).collect();
        summary["final_key"] = json!(key_of("rstrstst"));
        summary["missing_final"] = json!(missing);
        summary["stated_not_needed"] = json!(stated.difference(&computed).collect::<Vec<_>>());
        summary["needed_not_stated"] = json!(computed.difference(&stated).collect::<Vec<_>>());
        if !missing.is_empty() {
            status = status.and(Verdict::Failed);
        }
    }
    Ok(Report::new("verify cayley-certs", status, steps, summary, config).with_elapsed(started))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DihedralConfig {
    pub order: u8,
}

pub fn dihedral(config: &DihedralConfig) -> Result<Report> {
    let started = Instant::now();
    let m = config.order;
    let classes = chord_classes(m).map_err(|e| anyhow::anyhow!("{e}"))?;
    let steps: Vec<StepRecord> = classes
        .iter()
        .map(|seed| {
            let closure = dihedral_closure(m, seed.label()).expect("seeds come from the class list");
            let status = if closure.is_complete() { Verdict::Verified } else { Verdict::Failed };
            let derivations: Vec<_> = closure
                .steps
                .iter()
                .map(|s| json!({ "cycle": s.cycle_words(m), "derived": s.derived.label() }))
                .collect();
            let record = json!({
                "seed": seed.label(),
                "closure": closure.classes.iter().map(|c| c.label()).collect::<Vec<_>>(),
                "derivations": derivations,
            });
            StepRecord::new(format!("seed {seed}"), status, &record)
        })
        .collect();
    let summary = json!({ "polygon": 2 * m as usize, "classes": classes.iter().map(|c| c.label()).collect::<Vec<_>>() });
    Ok(Report::new(&format!("verify dihedral {m}"), Verdict::Verified, steps, summary, config).with_elapsed(started))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PentagonConfig {
    pub max_n: usize,
    pub radius: usize,
    pub vertex_cap: usize,
}

impl Default for PentagonConfig {
    fn default() -> Self {
        PentagonConfig { max_n: 5, radius: 10, vertex_cap: DEFAULT_VERTEX_CAP }
    }
}

/// All six families for `n ≤ max_n`, then the chain replay, which reuses the
/// family witnesses.
pub fn pentagon(config: &PentagonConfig) -> Result<Report> {
    let started = Instant::now();
    let search = PentagonSearch::new(config.radius, config.vertex_cap).map_err(|e| anyhow::anyhow!("{e}"))?;
    let jobs: Vec<(FamilyId, usize)> =
        (0..=config.max_n).flat_map(|n| FamilyId::ALL.into_iter().map(move |f| (f, n))).collect();
    let families: HashMap<(FamilyId, usize), FamilyReport> =
        jobs.par_iter().map(|&(f, n)| ((f, n), search.verify_family(f, n))).collect();
    let chain = search.verify_d8_chain_with(config.max_n, 2 * config.max_n + 6, |f, n| {
        families.get(&(f, n)).cloned().unwrap_or_else(|| search.verify_family(f, n))
    });

    let mut steps: Vec<StepRecord> = jobs
        .iter()
        .map(|key| {
            let r = &families[key];
            StepRecord::new(format!("{}_{}", r.family, r.n), r.status, r)
        })
        .collect();
    steps.extend(chain.stages.iter().map(|s| {
        let status = if s.complete() { Verdict::Verified } else { Verdict::Failed };
        StepRecord::new(format!("stage {}", s.n), status, s)
    }));
    let distances: Vec<_> = chain
        .stages
        .iter()
        .map(|s| json!({ "n": s.n, "pentagon": s.d_distance_pentagon, "full": s.d_distance_full }))
        .collect();
    let mut summary = json!({
        "slab_vertices": search.slab().len(),
        "chain": chain.status,
        "stages": chain.stages.len(),
        "d_distances": distances,
        "distances_increasing": chain.distances_increasing,
    });
    if let Some(d) = &chain.detail {
        summary["chain_detail"] = json!(d);
    }
    Ok(Report::new("verify pentagon", chain.status, steps, summary, config).with_elapsed(started))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiscConfig {
    pub boundary: usize,
    pub max_triangles: usize,
    pub constraints: DiscConstraints,
}

/// The octagon setting in which only `P8` and `P10` may appear.
fn octagon_surrogate(c: &DiscConfig) -> bool {
    c.boundary == 8 && c.constraints.locally_6_large && c.constraints.min_boundary_angle >= 2 && c.constraints.forbid_boundary_chords
}

pub fn enumerate(config: &DiscConfig) -> Result<Vec<TriDisc>> {
    let (b, t, c) = (config.boundary, config.max_triangles, config.constraints);
    let branches = enumeration_branches(b, t, c).map_err(|e| anyhow::anyhow!("{e}"))?;
    let found: BTreeSet<TriDisc> = branches.into_par_iter().map(|br| enumerate_branch(br, b, t, c)).reduce(BTreeSet::new, |mut a, x| {
        a.extend(x);
        a
    });
    Ok(sorted_discs(found))
}

pub fn discs(config: &DiscConfig) -> Result<Report> {
    let started = Instant::now();
    let found = enumerate(config)?;
    let surrogate = octagon_surrogate(config);
    let steps: Vec<StepRecord> = found
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let name = d.name().or_else(|| d.is_isomorphic(&wheel(d.boundary_len())).then_some("wheel"));
            let profile = d.curvature_profile();
            let mut problems = Vec::new();
            if let Err(e) = &profile {
                problems.push(e.to_string());
            }
            if !d.satisfies(&config.constraints) {
                problems.push("constraints violated".into());
            }
            if surrogate && name.is_none() {
                problems.push("octagon disc other than P8 and P10".into());
            }
            let status = if problems.is_empty() { Verdict::Verified } else { Verdict::Failed };
            let record = json!({
                "name": name,
                "disc": d.to_string(),
                "curvature": profile.ok(),
                "detail": if problems.is_empty() { None } else { Some(problems.join("; ")) },
            });
            StepRecord::new(format!("disc {}", i + 1), status, &record)
        })
        .collect();
    let summary = json!({
        "count": found.len(),
        "names": found.iter().map(|d| d.name().unwrap_or("-")).collect::<Vec<_>>(),
        "triangles": found.iter().map(|d| d.triangles.len()).collect::<Vec<_>>(),
    });
    Ok(Report::new("discs enumerate", Verdict::Verified, steps, summary, config).with_elapsed(started))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchConfig {
    pub depth: usize,
    pub radius: usize,
    pub vertex_cap: usize,
}

pub fn search_d10(config: &SearchConfig) -> Result<Report> {
    let started = Instant::now();
    let report = auto_search_d10(config.depth, config.radius, config.vertex_cap).map_err(|e| anyhow::anyhow!("{e}"))?;
    let steps = report
        .derived
        .iter()
        .map(|d| StepRecord::new(format!("{} (depth {})", d.key, d.depth), Verdict::Verified, d))
        .collect();
    let summary = json!({
        "seed": report.seed,
        "seed_distance": report.seed_distance,
        "candidates": report.candidates,
        "derived": report.derived.len(),
        "max_distance": report.max_distance,
        "distance_by_depth": report.distance_by_depth,
        "detail": report.detail,
    });
    Ok(Report::new("search d10", report.status, steps, summary, config).with_elapsed(started))
}
