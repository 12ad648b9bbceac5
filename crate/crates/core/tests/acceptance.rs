//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::naive_interval_colorable;
use interval_edge::cli::{self, EXIT_NEGATIVE};
use interval_edge::enumerator::{canonical_code, enumerate, tally, Check, EnumerationReport};
use interval_edge::format::{parse_graph, serialize_graph};
use interval_edge::multigraph::families::*;
use interval_edge::solver::{Reason, Verdict};
use interval_edge::{EnumerationBounds, Harness, Solver, SolverConfig};

fn report_line(id: u32, name: &str, ok: bool, detail: &str) {
    println!(
        "[{}] criterion {id}: {name} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn golden_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", "golden"]
        .iter()
        .collect()
}

fn golden(name: &str) -> String {
    golden_dir()
        .join(format!("{name}.graph"))
        .display()
        .to_string()
}

fn run_cli(args: &[&str]) -> (u8, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = cli::run(
        std::iter::once("interval-edge").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (status, String::from_utf8(out).unwrap())
}

fn bypass() -> Solver {
    Solver::new(SolverConfig {
        parity_precheck: false,
        ..Default::default()
    })
}

/// Criterion-2 censuses: all connected multigraphs in both bound sets.
fn census_bounds() -> [EnumerationBounds; 2] {
    [
        EnumerationBounds::new(4, 7, 2),
        EnumerationBounds::new(5, 8, 1).simple(),
    ]
}

fn census_report(checks: &[Check]) -> EnumerationReport {
    let h = Harness::default();
    let mut report = EnumerationReport::default();
    for b in census_bounds() {
        report.merge(h.verify(&b, checks).unwrap());
    }
    report
}

#[test]
fn criterion_1_k5_has_no_interval_coloring() {
    let start = Instant::now();
    let (status, out) = run_cli(&["solve", &golden("k5"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let k5 = complete(5);
    let every_t_empty =
        (4..=10).all(|t| Solver::default().find_interval_coloring(&k5, t) == Ok(None));
    let elapsed = start.elapsed();
    let ok = status == EXIT_NEGATIVE
        && v["verdict"] == "not_colorable_exhausted"
        && every_t_empty
        && elapsed < Duration::from_secs(60);
    report_line(
        1,
        "K5 not interval colorable",
        ok,
        &format!("exit {status}, t=4..10 exhausted, {elapsed:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_2_odd_eulerian_graphs_are_never_colorable() {
    let h = Harness::default();
    let mut checked = 0;
    let mut clean = true;
    for b in census_bounds() {
        let r = h.verify_theorem2(&b).unwrap();
        let t = r.tally(tally::THEOREM2);
        checked += t.checked;
        clean &= r.is_clean() && t.passed == t.checked;
    }
    let ok = clean && checked > 0;
    report_line(
        2,
        "odd Eulerian graphs have no interval coloring",
        ok,
        &format!("{checked} odd Eulerian graphs, no witnesses"),
    );
    assert!(ok);
}

#[test]
fn criterion_3_oracle_equivalence() {
    let b = EnumerationBounds::new(7, 6, 2).connected();
    let mut graphs = 0;
    let mut disagreements = Vec::new();
    for g in enumerate(&b).unwrap() {
        graphs += 1;
        let solver = Solver::default()
            .is_interval_colorable(&g)
            .unwrap()
            .is_colorable();
        if solver != naive_interval_colorable(&g) {
            disagreements.push(serialize_graph(&g));
        }
    }
    let ok = disagreements.is_empty() && graphs == 123;
    report_line(
        3,
        "solver matches brute force",
        ok,
        &format!("{graphs} graphs, {} disagreements", disagreements.len()),
    );
    assert!(ok, "{disagreements:?}");
}

#[test]
fn criterion_4_degree_bounds_and_regular_case() {
    let r = census_report(&[Check::Theorem1]);
    let nec = r.tally(tally::THEOREM1_NECESSARY);
    let iff = r.tally(tally::THEOREM1_REGULAR_IFF);
    let ok = r.is_clean() && nec.checked > 0 && iff.checked > 0;
    report_line(
        4,
        "t-range necessary condition and regular iff",
        ok,
        &format!(
            "{}/{} necessary, {}/{} regular iff",
            nec.passed, nec.checked, iff.passed, iff.checked
        ),
    );
    assert!(ok, "{:?}", r.counterexamples);
}

#[test]
fn criterion_5_parity_internals() {
    let mut r = census_report(&Check::ALL);
    r.merge(
        Harness::default()
            .verify(&EnumerationBounds::new(7, 6, 2), &[Check::Theorem1])
            .unwrap(),
    );
    let t = r.tally(tally::PARITY_INTERNALS);
    let ok = r.is_clean() && t.checked > 0 && t.passed == t.checked;
    report_line(
        5,
        "spectra split d/2 odd, odd edges = m/2",
        ok,
        &format!("{} Eulerian witnesses", t.checked),
    );
    assert!(ok, "{:?}", r.counterexamples);
}

#[test]
fn criterion_6_line_graph_index() {
    let mut ok = true;
    let mut found = Vec::new();
    for (g, r, expect) in [(complete(4), 3, 4), (cycle(4), 2, 2)] {
        let l = g.line_graph().unwrap();
        let (k, _) = Solver::default().chromatic_index(&l).unwrap();
        let colorable = bypass().is_interval_colorable(&l).unwrap().is_colorable();
        ok &= k == expect
            && k == 2 * r - 2
            && l.is_eulerian()
            && l.edge_count() % 2 == 0
            && colorable;
        found.push(k);
    }
    report_line(
        6,
        "chromatic index of L(K4), L(C4)",
        ok,
        &format!("{found:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_7_subdivisions() {
    let h = Harness::default();
    let mut r = EnumerationReport::default();
    for b in census_bounds() {
        r.merge(h.verify_corollary3(&b).unwrap());
    }
    let c5 = cycle(4).subdivide(0).unwrap();
    let c7 = cycle(6).subdivide(3).unwrap();
    let named = [(&c5, cycle(5)), (&c7, cycle(7))].iter().all(|(sub, cyc)| {
        canonical_code(sub) == canonical_code(cyc)
            && bypass().is_interval_colorable(sub)
                == Ok(Verdict::NotColorable(Reason::ExhaustedSearch))
    });
    let t = r.tally(tally::COROLLARY3);
    let ok = r.is_clean() && t.checked > 0 && named;
    report_line(
        7,
        "subdivisions of Eulerian colorable graphs",
        ok,
        &format!("{} subdivisions", t.checked),
    );
    assert!(ok, "{:?}", r.counterexamples);
}

#[test]
fn criterion_8_star_augmentation() {
    let star = path(2).star_augment();
    let iso = canonical_code(&star) == canonical_code(&cycle(3));
    let blocked =
        bypass().is_interval_colorable(&star) == Ok(Verdict::NotColorable(Reason::ExhaustedSearch));
    let r = Harness::default()
        .verify_corollary4(&EnumerationBounds::new(4, 5, 2))
        .unwrap();
    let t = r.tally(tally::COROLLARY4);
    let ok = iso && blocked && r.is_clean() && t.checked > 0;
    report_line(
        8,
        "star augmentation",
        ok,
        &format!("K2* = C3: {iso}; {} graphs checked", t.checked),
    );
    assert!(ok, "{:?}", r.counterexamples);
}

#[test]
fn criterion_9_round_trip_and_determinism() {
    let mut files: Vec<PathBuf> = std::fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "graph"))
        .collect();
    files.sort();
    let mut round_trips = 0;
    let mut ok = true;
    for f in &files {
        let text = std::fs::read_to_string(f).unwrap();
        let g = parse_graph(&text).unwrap();
        let again = serialize_graph(&g);
        let canonical = !text.lines().any(|l| l.starts_with('#') || l.is_empty());
        // canonical files must reproduce byte for byte; commented ones re-parse identically
        ok &= if canonical {
            again == text
        } else {
            parse_graph(&again).unwrap() == g
        };
        round_trips += 1;

        let path = f.display().to_string();
        let args = ["solve", path.as_str(), "--format", "json", "--no-timing"];
        ok &= run_cli(&args) == run_cli(&args);
    }
    let verify = [
        "verify",
        "--max-n",
        "4",
        "--max-m",
        "6",
        "--max-mult",
        "2",
        "--format",
        "json",
        "--no-timing",
    ];
    ok &= run_cli(&verify) == run_cli(&verify);
    report_line(
        9,
        "golden round trips and byte-identical JSON",
        ok,
        &format!("{round_trips} golden files"),
    );
    assert!(ok);
}
