//! The binary: exit codes, JSON reports, external certificate files.

use std::io::Write;
use std::process::{Command, Output};

use tricox::Report;
use tricox_core::certificates::Verdict;

fn tricox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricox")).args(args).output().expect("binary runs")
}

fn json_report(out: &Output) -> Report {
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text.lines().next().expect("one report line");
    let report = Report::from_json_line(line).expect("well-formed report");
    // printing and parsing again is lossless
    assert_eq!(Report::from_json_line(&report.to_json_line()).unwrap(), report);
    report
}

#[test]
fn hexagon_wheel_is_the_only_disc() {
    let out = tricox(&["discs", "enumerate", "--boundary", "6", "--locally-6-large", "--no-chords", "--max-triangles", "8", "--json"]);
    assert!(out.status.success());
    let report = json_report(&out);
    assert_eq!(report.summary["count"], 1);
    assert_eq!(report.steps[0].record["name"], "wheel");
    assert_eq!(report.config["boundary"], 6);
}

#[test]
fn dihedral_reports_every_seed() {
    let out = tricox(&["verify", "dihedral", "--order", "5", "--json"]);
    assert!(out.status.success());
    let report = json_report(&out);
    assert_eq!(report.status, Verdict::Verified);
    assert_eq!(report.steps.len(), 5);
}

#[test]
fn bad_arguments_exit_with_a_usage_error() {
    let out = tricox(&["verify", "dihedral", "--order", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tricox(&["discs", "enumerate", "--boundary", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("below 3"));
}

#[test]
fn external_certificate_with_the_printed_cycle_fails() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let lines = [
        r#"{"mode":"cayley","sources":["ts","srs","r"],"cycle":["e","ts","trs","r"],"target":"trs"}"#,
        r#"{"mode":"cayley","sources":["srs","sts"],"cycle":["e","srs","strs","sts"],"target":"strs"}"#,
        r#"{"mode":"cayley","sources":["rsr","strs","tstst"],"cycle":["e","strs","srsts","rsr"],"target":"srsts"}"#,
        r#"{"mode":"cayley","sources":["srs","srsts","r"],"cycle":["e","srsts","rsrsts","r"],"target":"rsrsts"}"#,
        r#"{"mode":"cayley","sources":["rsrsts","tstst","s"],"cycle":["e","rsrstst","rstrs","s"],"target":"rstrs"}"#,
    ];
    writeln!(file, "{}", lines.join("\n")).unwrap();
    let path = file.path().to_str().unwrap();
    let out = tricox(&["verify", "cayley-certs", "--certs", path, "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json_report(&out);
    assert_eq!(report.status, Verdict::Failed);
    assert!(report.summary["detail"].as_str().unwrap().contains("line 5"));

    // the first four lines alone are fine
    let mut short = tempfile::NamedTempFile::new().unwrap();
    writeln!(short, "{}", lines[..4].join("\n")).unwrap();
    let out = tricox(&["verify", "cayley-certs", "--certs", short.path().to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn inconclusive_search_exits_nonzero() {
    let out = tricox(&["search", "d10", "--depth", "0", "--radius", "2", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json_report(&out);
    assert_eq!(report.status, Verdict::Inconclusive);
}

#[test]
fn thread_count_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_tricox"))
        .args(["verify", "dihedral", "--order", "4"])
        .env("TRICOX_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}
