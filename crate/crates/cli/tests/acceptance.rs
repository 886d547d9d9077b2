//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed; exits nonzero if any fails.

use std::collections::{HashMap, HashSet};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricox::suites::{self, DiscConfig, PentagonConfig};
use tricox::Report;
use tricox_core::certificates::{FamilyId, Verdict};
use tricox_core::disc::{p10, p8, wheel, DiscConstraints};
use tricox_core::graph::{build_cayley_ball, build_coset_ball, CosetMode};
use tricox_core::{EdgeTypeKey, Endpoint, GroupElement, ParabolicId, Vertex};

// Time limits; all other comparisons are exact.
const KERNEL_LIMIT: Duration = Duration::from_secs(60);
const CAYLEY_LIMIT: Duration = Duration::from_secs(5);
const DIHEDRAL_LIMIT: Duration = Duration::from_secs(1);
const FAMILIES_LIMIT: Duration = Duration::from_secs(300);
const DISCS_LIMIT: Duration = Duration::from_secs(180);
const ORBIT_SAMPLES: usize = 1000;
const RNG_SEED: u64 = 0x245;

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.into())
    }
}

fn within(started: Instant, limit: Duration) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took <= limit, format!("took {took:?}, limit {limit:?}"))
}

fn run_cli(args: &[&str]) -> Result<(Option<i32>, Report), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_tricox")).args(args).arg("--json").output().map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let line = stdout.lines().next().ok_or("no report printed")?;
    let report = Report::from_json_line(line).map_err(|e| e.to_string())?;
    ensure(Report::from_json_line(&report.to_json_line()).ok().as_ref() == Some(&report), "report does not round-trip")?;
    Ok((out.status.code(), report))
}

fn kernel_soundness() -> Outcome {
    let started = Instant::now();
    let ball = build_cayley_ball(GroupElement::identity(), 10, 1_000_000).map_err(|e| e.to_string())?;
    let mut words = HashMap::new();
    let mut elements = HashSet::new();
    for i in 0..ball.len() {
        let g = ball.node(i);
        let w = g.canonical_word().to_string();
        ensure(words.insert(w.clone(), i).is_none(), format!("word {w} repeated"))?;
        ensure(elements.insert(g.clone()), format!("matrix of {w} repeated"))?;
        let sign_ok = if g.length() % 2 == 0 { g.determinant().is_one() } else { (-&g.determinant()).is_one() };
        ensure(sign_ok, format!("det parity fails at {w}"))?;
    }
    for i in 0..ball.len() {
        for j in i + 1..ball.len() {
            ensure(ball.node(i).matrix() != ball.node(j).matrix(), "equal matrices for distinct words")?;
        }
    }
    let sizes: Vec<usize> = ParabolicId::ALL.iter().map(|p| p.elements().len()).collect();
    ensure(sizes == [8, 10, 4], format!("parabolic sizes {sizes:?}"))?;
    within(started, KERNEL_LIMIT)?;
    Ok(format!("{} elements, parabolics {sizes:?}", ball.len()))
}

fn cayley_certificates() -> Outcome {
    let started = Instant::now();
    let (code, report) = run_cli(&["verify", "cayley-certs"])?;
    within(started, CAYLEY_LIMIT)?;
    ensure(code == Some(0) && report.status == Verdict::Verified, format!("status {}", report.status))?;
    ensure(report.steps.len() == 27, format!("{} steps", report.steps.len()))?;
    let clique = report.steps.iter().find(|s| s.record["line"].as_str().is_some_and(|l| l.contains("clique"))).ok_or("no clique step")?;
    let rstsr = EdgeTypeKey::of_word("rstsr").unwrap().to_string();
    ensure(clique.record["derived"].as_array().is_some_and(|d| d.iter().any(|k| k == &rstsr[..])), "clique step does not give rstsr")?;
    let last = report.steps.last().unwrap();
    let final_key = EdgeTypeKey::of_word("rstrstst").unwrap().to_string();
    ensure(last.record["derived"][0] == final_key[..], format!("last step derives {}", last.record["derived"]))?;
    ensure(report.summary["missing_final"].as_array().is_some_and(|m| m.is_empty()), "some listed types missing")?;
    Ok(format!("27 lines, ends at {final_key}"))
}

fn dihedral_closures() -> Outcome {
    for order in ["4", "5"] {
        let (code, report) = run_cli(&["verify", "dihedral", "--order", order])?;
        ensure(code == Some(0) && report.status == Verdict::Verified, format!("order {order}: {}", report.status))?;
        ensure(report.elapsed_ms as u128 <= DIHEDRAL_LIMIT.as_millis(), format!("order {order} took {} ms", report.elapsed_ms))?;
    }
    Ok("every seed closes for m = 4 and m = 5".into())
}

fn pentagon_families() -> Outcome {
    let started = Instant::now();
    let report = suites::pentagon(&PentagonConfig { max_n: 5, radius: 10, ..PentagonConfig::default() }).map_err(|e| e.to_string())?;
    within(started, FAMILIES_LIMIT)?;
    let mut count = 0;
    for n in 0..=5 {
        for family in FamilyId::ALL {
            let name = format!("{family}_{n}");
            let step = report.steps.iter().find(|s| s.name == name).ok_or(format!("{name} missing"))?;
            ensure(step.status == Verdict::Verified, format!("{name} is {}", step.status))?;
            let expected = family.target(n).key().to_string();
            ensure(step.record["target"]["key"] == expected[..], format!("{name} target"))?;
            count += 1;
        }
    }
    Ok(format!("{count} family instances, n <= 5, radius 10"))
}

fn chain_lemma() -> Outcome {
    let (code, report) = run_cli(&["verify", "pentagon", "--max-n", "3", "--radius", "10"])?;
    ensure(code == Some(0) && report.status == Verdict::Verified, format!("status {}", report.status))?;
    let mut rows = Vec::new();
    for n in 0..=3 {
        let stage = report.steps.iter().find(|s| s.name == format!("stage {n}")).ok_or(format!("stage {n} missing"))?;
        let book = stage.record["bookkeeping"].as_array().ok_or("no bookkeeping")?;
        ensure(book.len() == 6 && book.iter().all(|e| e[1] == true), format!("stage {n} incomplete"))?;
        let p = stage.record["d_distance_pentagon"].as_u64().ok_or("no pentagon distance")?;
        let f = stage.record["d_distance_full"].as_u64().ok_or("no full distance")?;
        rows.push((p, f));
    }
    let increasing = rows[1..].windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
    ensure(increasing, format!("distances {rows:?}"))?;
    let shown: Vec<String> = rows[1..].iter().map(|(p, f)| format!("{p}/{f}")).collect();
    Ok(format!("d_1..d_3 endpoint distances (pentagon/full) {}", shown.join(", ")))
}

fn disc_classification() -> Outcome {
    let started = Instant::now();
    let mut checked = 0;
    for boundary in 3..=10 {
        for (l6, angle, chords) in [(false, 0, false), (true, 0, false), (true, 2, true), (false, 2, true)] {
            let constraints = DiscConstraints { locally_6_large: l6, min_boundary_angle: angle, forbid_boundary_chords: chords };
            for d in suites::enumerate(&DiscConfig { boundary, max_triangles: 10, constraints }).map_err(|e| e.to_string())? {
                let total = d.curvature_profile().map_err(|e| e.to_string())?.total();
                ensure(total == 6, format!("curvature {total} for\n{d}"))?;
                checked += 1;
            }
        }
    }
    let hexagon = DiscConstraints { locally_6_large: true, min_boundary_angle: 0, forbid_boundary_chords: true };
    let found = suites::enumerate(&DiscConfig { boundary: 6, max_triangles: 8, constraints: hexagon }).map_err(|e| e.to_string())?;
    ensure(found.len() == 1 && found[0].is_isomorphic(&wheel(6)), format!("{} hexagon discs", found.len()))?;
    let octagon = DiscConstraints { locally_6_large: true, min_boundary_angle: 2, forbid_boundary_chords: true };
    let found = suites::enumerate(&DiscConfig { boundary: 8, max_triangles: 10, constraints: octagon }).map_err(|e| e.to_string())?;
    let exact = found.len() == 2 && found[0].is_isomorphic(&p8()) && found[1].is_isomorphic(&p10());
    ensure(exact, format!("{} octagon discs", found.len()))?;
    within(started, DISCS_LIMIT)?;
    Ok(format!("Gauss-Bonnet on {checked} discs; hexagon: wheel only; octagon: P8, P10"))
}

fn orbit_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED);
    let random_element = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(0..9);
        let w: String = (0..len).map(|_| ['r', 's', 't'][rng.gen_range(0..3)]).collect();
        GroupElement::parse(&w).unwrap()
    };
    let slabs: Vec<_> = ParabolicId::ALL
        .iter()
        .map(|&p| build_coset_ball(Vertex::fixed_by(p), 4, CosetMode::FullY, 100_000).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let cayley = build_cayley_ball(GroupElement::identity(), 4, 100_000).map_err(|e| e.to_string())?;
    for k in 0..ORBIT_SAMPLES {
        let slab = &slabs[k % slabs.len()];
        let (u, v) = (slab.node(rng.gen_range(0..slab.len())), slab.node(rng.gen_range(0..slab.len())));
        let w = random_element(&mut rng);
        let key = u.type_key(v);
        ensure(v.type_key(u) == key && u.act(&w).type_key(&v.act(&w)) == key, format!("complex pair {u}, {v} moved by {w}"))?;
        let (g, h) = (cayley.node(rng.gen_range(0..cayley.len())), cayley.node(rng.gen_range(0..cayley.len())));
        let key = g.type_key(h);
        ensure(h.type_key(g) == key && g.act(&w).type_key(&h.act(&w)) == key, format!("cayley pair {g}, {h} moved by {w}"))?;
    }
    Ok(format!("{ORBIT_SAMPLES} complex and {ORBIT_SAMPLES} Cayley samples"))
}

fn d10_exploration() -> Outcome {
    let (code, report) = run_cli(&["search", "d10", "--depth", "2", "--radius", "4"])?;
    ensure(report.suite == "search d10", "wrong suite")?;
    ensure(matches!(report.status, Verdict::Inconclusive | Verdict::Verified), format!("status {}", report.status))?;
    ensure((code == Some(0)) == (report.status == Verdict::Verified), "exit code disagrees with status")?;
    let by_depth: Vec<u64> = report.summary["distance_by_depth"].as_array().ok_or("no distances")?.iter().filter_map(|v| v.as_u64()).collect();
    ensure(by_depth.windows(2).all(|w| w[0] <= w[1]), format!("distances {by_depth:?}"))?;
    Ok(format!("status {}, {} derived, distances by depth {by_depth:?}", report.status, report.summary["derived"]))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 kernel soundness", kernel_soundness),
        ("2 connecting-cliques certificate", cayley_certificates),
        ("3 dihedral closure", dihedral_closures),
        ("4 pentagon families", pentagon_families),
        ("5 chain lemma and distances", chain_lemma),
        ("6 disc classification", disc_classification),
        ("7 orbit invariance", orbit_invariance),
        ("8 D10 exploration report", d10_exploration),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {name}: {detail} ({:.1?})", started.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
