//! Certificate suites at small settings.

use tricox_core::certificates::{
    auto_search_d10, replay_schedule, CertificateMode, CertificateRecord, FamilyId, PentagonSearch, Term, Verdict,
};
use tricox_core::implication::{chord_classes, dihedral_closure};
use tricox_core::pentagon::Series;
use tricox_core::EdgeTypeKey;

fn line(sources: &[&str], cycle: &[&str], target: &str) -> CertificateRecord {
    CertificateRecord {
        mode: CertificateMode::Cayley,
        sources: sources.iter().map(|s| s.to_string()).collect(),
        cycle: cycle.iter().map(|s| s.to_string()).collect(),
        target: target.into(),
        dihedral: None,
        note: None,
    }
}

/// The schedule up to the `rsrsts` line.
fn prefix() -> Vec<CertificateRecord> {
    vec![
        line(&["ts", "srs", "r"], &["e", "ts", "trs", "r"], "trs"),
        line(&["rsr", "strs", "tstst"], &["e", "strs", "srsts", "rsr"], "srsts"),
        line(&["srs", "sts"], &["e", "srs", "strs", "sts"], "strs"),
        line(&["srs", "srsts", "r"], &["e", "srsts", "rsrsts", "r"], "rsrsts"),
    ]
}

#[test]
fn out_of_order_schedules_fail() {
    // srsts needs strs, derived one line later
    let report = replay_schedule(&prefix());
    assert_eq!(report.status, Verdict::Failed);
    assert_eq!(report.steps.len(), 2);
}

#[test]
fn printed_rstrs_cycle_fails_and_the_corrected_one_verifies() {
    let mut records = prefix();
    records.swap(1, 2);
    assert_eq!(replay_schedule(&records).status, Verdict::Verified);

    let mut printed = records.clone();
    printed.push(line(&["rsrsts", "tstst", "s"], &["e", "rsrstst", "rstrs", "s"], "rstrs"));
    let report = replay_schedule(&printed);
    assert_eq!(report.status, Verdict::Failed);
    let last = report.steps.last().unwrap();
    assert!(last.line.contains("rsrstst"));

    let mut fixed = records;
    fixed.push(line(&["rsrsts", "tstst", "s"], &["e", "rsrsts", "rstrs", "s"], "rstrs"));
    let report = replay_schedule(&fixed);
    assert_eq!(report.status, Verdict::Verified, "{:?}", report.detail);
    assert!(report.steps.last().unwrap().sources_match);
    assert!(report.contains(&EdgeTypeKey::of_word("rstrs").unwrap()));
}

#[test]
fn every_dihedral_seed_closes() {
    for m in [4u8, 5] {
        for seed in chord_classes(m).unwrap() {
            let closure = dihedral_closure(m, seed.label()).unwrap();
            assert!(closure.is_complete(), "m = {m}, seed {seed}");
        }
    }
    assert!(dihedral_closure(6, "2").is_err());
    assert!(dihedral_closure(4, "5").is_err());
}

#[test]
fn first_families_at_radius_eight() {
    let search = PentagonSearch::new(8, 100_000).unwrap();
    for (family, n) in [(FamilyId::Pent, 1), (FamilyId::Sq, 1), (FamilyId::TrapA, 1)] {
        let r = search.verify_family(family, n);
        assert_eq!(r.status, Verdict::Verified, "{family}_{n}: {:?}", r.detail);
        assert_eq!(r.target.key, family.target(n).key());
    }
    assert_eq!(FamilyId::Sq.target(1).key(), Term::new(Series::D, 1).key());
}

#[test]
fn chain_to_stage_one() {
    let search = PentagonSearch::new(8, 100_000).unwrap();
    let report = search.verify_d8_chain(1, 8);
    assert_eq!(report.status, Verdict::Verified, "{:?}", report.detail);
    assert!(report.stages.iter().all(|s| s.complete()));
    assert_eq!(report.stages[1].d_distance_pentagon, Some(4));
    assert_eq!(report.stages[1].d_distance_full, Some(4));
}

#[test]
fn small_radius_is_inconclusive_not_false() {
    let search = PentagonSearch::new(2, 100_000).unwrap();
    let report = search.verify_d8_chain(1, 8);
    assert_eq!(report.status, Verdict::Inconclusive, "{report:?}");
}

#[test]
fn d10_search_with_no_depth_keeps_only_the_seed() {
    let report = auto_search_d10(0, 3, 100_000).unwrap();
    assert!(report.derived.is_empty());
    assert_eq!(report.status, Verdict::Inconclusive);
    // two cosets of the same parabolic are never adjacent in Y
    assert_eq!(report.seed_distance, 2);
    assert_eq!(report.detail, "no derivation found within bounds");
}
