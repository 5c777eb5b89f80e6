//! End-to-end acceptance checks: golden-table reproduction, the bound
//! conclusion, the Figure-1 fixture, the property suites at full scale,
//! and the extended-search smoke test. Run with `--nocapture` to see one
//! line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use weylshape::bracket::f_poly;
use weylshape::geometry::{en, leading, st, Direction};
use weylshape::parse::parse_element;
use weylshape::selftest::{run_suites, SuiteResult};
use weylshape::shape::check_bound;

const BIN: &str = env!("CARGO_BIN_EXE_weylshape");
const SEED: u64 = 0xD1C3;

struct Report {
    failures: Vec<String>,
}

impl Report {
    fn record(&mut self, criterion: u32, ok: bool, label: &str, detail: String) {
        let status = if ok { "PASS" } else { "FAIL" };
        println!("criterion {criterion:>2}: {status} — {label}");
        if !ok {
            self.failures.push(format!("criterion {criterion} ({label}): {detail}"));
        }
    }

    fn suites(&mut self, criterion: u32, label: &str, names: &[&str], budget: Option<Duration>) {
        let start = Instant::now();
        let results = run_suites(SEED, 500, Some(names));
        let elapsed = start.elapsed();
        let ok = results.len() == names.len()
            && results.iter().all(SuiteResult::passed)
            && budget.map_or(true, |b| elapsed <= b);
        let detail = results
            .iter()
            .map(|r| format!("{}: {} cases, {} failures {:?}", r.name, r.cases, r.failures, r.detail))
            .collect::<Vec<_>>()
            .join("; ");
        self.record(criterion, ok, label, format!("{detail}; elapsed {elapsed:?}"));
    }
}

fn run_check_bound(args: &[&str]) -> (Vec<u8>, Option<i32>, Duration) {
    let start = Instant::now();
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (out.stdout, out.status.code(), start.elapsed())
}

#[test]
fn acceptance() {
    let mut report = Report { failures: Vec::new() };

    // 1: the 13-row refutation table is byte-identical to the golden file
    let golden = include_bytes!("golden/check_bound_15.md").to_vec();
    let (stdout, code, elapsed) = run_check_bound(&["check-bound", "--max-sum", "15"]);
    report.record(
        1,
        stdout == golden && code == Some(0) && elapsed < Duration::from_secs(1),
        "refutation table matches the golden file",
        format!("exit {code:?}, elapsed {elapsed:?}, bytes equal: {}", stdout == golden),
    );

    // 2: the bound conclusion — no unresolved candidate up to 15
    let summary = check_bound(15, 1).unwrap();
    report.record(
        2,
        summary.unresolved == 0
            && summary.candidates == 13
            && summary.bound_conclusion().as_deref() == Some("B > 15")
            && code == Some(0),
        "bound conclusion B > 15 with zero unresolved",
        format!("{} candidates, {} unresolved", summary.candidates, summary.unresolved),
    );

    // 3: the Figure-1 fixture at direction (3,2)
    let p = parse_element("X^3+X^5+X^6*Y+X*Y^3+X^6*Y^3+X^3*Y^4+X*Y^6+X^4*Y^6+X^2*Y^7").unwrap();
    let d = Direction::new(3, 2).unwrap();
    let lead = leading(&p, &d).unwrap().to_string();
    let st_p = st(&p, &d).unwrap().to_string();
    let en_p = en(&p, &d).unwrap().to_string();
    let f = f_poly(&p, &d).unwrap().to_string();
    report.record(
        3,
        lead == "x^6*y^3 + x^4*y^6" && st_p == "(6,3)" && en_p == "(4,6)" && f == "x^3 + 1",
        "leading edge fixture",
        format!("leading {lead}, st {st_p}, en {en_p}, f {f}"),
    );

    // 4–12: the property suites at full scale with the fixed seed
    report.suites(
        4,
        "Ore relation and product associativity",
        &["ore-relation", "mul-associativity"],
        Some(Duration::from_secs(5)),
    );
    report.suites(5, "degree/corner multiplicativity", &["degree-multiplicativity"], None);
    report.suites(6, "commutator corners and degree bound", &["commutator-corner"], None);
    report.suites(7, "bracket equivalence and leading-only dependence", &["bracket-equivalence"], None);
    report.suites(8, "first bracket identity", &["identity-f1"], None);
    report.suites(9, "consecutive-direction geometry", &["consecutive-directions"], None);
    report.suites(10, "automorphism leading transport", &["automorphism-transport"], None);
    report.suites(11, "subrectangularity equivalence", &["subrectangular"], None);
    report.suites(12, "PE instances and multiplicity layers", &["pe-multiplicity"], None);

    // 13: extended search — fast, deterministic across --jobs, monotone
    let (out1, code1, elapsed) = run_check_bound(&["check-bound", "--max-sum", "30"]);
    let (out2, code2, _) = run_check_bound(&["check-bound", "--max-sum", "30", "--jobs", "4"]);
    let (out3, code3, _) = run_check_bound(&["check-bound", "--max-sum", "30", "--jobs", "7"]);
    let wide = check_bound(30, 3).unwrap();
    let key = |s: &weylshape::shape::BoundSummary| {
        s.reports
            .iter()
            .map(|r| (r.candidate.u, r.candidate.v, r.candidate.f1, r.candidate.f2))
            .collect::<Vec<_>>()
    };
    let narrow_keys = key(&summary);
    let wide_keys = key(&wide);
    let monotone = narrow_keys.iter().all(|k| wide_keys.contains(k));
    report.record(
        13,
        out1 == out2
            && out2 == out3
            && code1 == code2
            && code2 == code3
            && elapsed < Duration::from_secs(10)
            && monotone,
        "extended search: deterministic, fast, monotone",
        format!(
            "elapsed {elapsed:?}, exits {code1:?}/{code2:?}/{code3:?}, monotone {monotone}"
        ),
    );

    assert!(report.failures.is_empty(), "{:#?}", report.failures);
}
