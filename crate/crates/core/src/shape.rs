//! The closing enumeration: generate every candidate corner configuration
//! permitted by the final-shape conditions up to a bound on `u+v`, refute
//! each one, and render the resulting table.

use crate::geometry::{dir_of, Direction};
use crate::rational::{format_rat, rat, Rat};
use crate::weyl::Point;
use crate::{Error, Result};
use num::BigInt;

/// One candidate corner configuration `C₀ = (u,v)` with fixed-point end
/// corner `(f₁,f₂)`, its direction, and the solutions `C₁ = (r',s')` of
/// `v_{ρ,σ}(C₁) = v_{ρ,σ}(C₀)` with `0 ≤ s' < r' < u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerCandidate {
    pub u: i64,
    pub v: i64,
    pub f1: i64,
    pub f2: i64,
    pub dir: Direction,
    pub c1_solutions: Vec<(i64, i64)>,
    pub d: i64,
}

/// Cut data derived from one `C₁` solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutData {
    pub c1: (i64, i64),
    pub gamma: Rat,
    pub c2: (Rat, Rat),
    /// Whether `C₂` has the forbidden form `(r̄ - 1/ρ, r̄)` with `r̄ ≥ 2`.
    pub forbidden: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Refuted(&'static str),
    Unresolved,
}

pub const REASON_NO_C1: &str = "no C1";
pub const REASON_CONDITION_6: &str = "condition (6)";

/// One row of the enumeration output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateReport {
    pub candidate: CornerCandidate,
    /// Cut data per `C₁` solution (empty when there is none); only computed
    /// when `d = 1`, matching the scope of the condition-(6) test.
    pub cuts: Vec<CutData>,
    pub verdict: Verdict,
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// Enumerates every candidate with `v > u ≥ 3`, `gcd(u,v) > 1`,
/// `u + v ≤ max_sum`, and `(f₁,f₂) = t·(u,v)/gcd(u,v)` for
/// `t = 1, …, gcd(u,v)-1` with `f₁ ≥ 2`, sorted by `(u, v, f₁)`.
pub fn enumerate_candidates(max_sum: i64) -> Result<Vec<CornerCandidate>> {
    if max_sum < 5 {
        return Err(Error::PreconditionViolated("max_sum must be at least 5".into()));
    }
    let mut out = Vec::new();
    for u in 3..=max_sum {
        for v in (u + 1)..=(max_sum - u) {
            let g = gcd_i64(u, v);
            if g <= 1 {
                continue;
            }
            for t in 1..g {
                let f1 = t * u / g;
                let f2 = t * v / g;
                if f1 < 2 {
                    continue;
                }
                let dir = dir_of(&Point::from_ints(f1 - 1, f2 - 1))
                    .expect("(f1-1, f2-1) is off the diagonal since f1 < f2");
                debug_assert!(dir.sigma() < 0, "sigma < 0 is automatic for f1 >= 2");
                let d = gcd_i64(f1 - 1, f2 - 1);
                let target = dir.rho() * u + dir.sigma() * v;
                let mut c1_solutions = Vec::new();
                for r in 0..u {
                    for s in 0..r {
                        if dir.rho() * r + dir.sigma() * s == target {
                            c1_solutions.push((r, s));
                        }
                    }
                }
                c1_solutions.sort_unstable();
                out.push(CornerCandidate { u, v, f1, f2, dir, c1_solutions, d });
            }
        }
    }
    out.sort_by_key(|c| (c.u, c.v, c.f1));
    Ok(out)
}

/// Applies the refutation conditions to one candidate. A candidate is
/// refuted when it admits no `C₁`, or when `d = 1` and every `C₁` leads to a
/// `C₂` of the forbidden form `(r̄ - 1/ρ, r̄)` with `r̄ ≥ 2`; it is reported
/// unresolved otherwise.
pub fn refute(c: &CornerCandidate) -> CandidateReport {
    if c.c1_solutions.is_empty() {
        return CandidateReport {
            candidate: c.clone(),
            cuts: Vec::new(),
            verdict: Verdict::Refuted(REASON_NO_C1),
        };
    }
    if c.d != 1 {
        return CandidateReport {
            candidate: c.clone(),
            cuts: Vec::new(),
            verdict: Verdict::Unresolved,
        };
    }
    let rho = rat(c.dir.rho());
    let sigma = rat(c.dir.sigma());
    let mut cuts = Vec::new();
    let mut all_forbidden = true;
    for &(r, s) in &c.c1_solutions {
        let gamma = (rat(c.v) - rat(s)) / &rho;
        let step = &gamma - rat(s);
        let c2 = (rat(r) + &step * (-&sigma / &rho), rat(s) + &step);
        let rho_inv = Rat::new(BigInt::from(1), BigInt::from(c.dir.rho()));
        let forbidden = c2.1 >= rat(2) && c2.0 == &c2.1 - rho_inv;
        all_forbidden &= forbidden;
        cuts.push(CutData { c1: (r, s), gamma, c2, forbidden });
    }
    let verdict = if all_forbidden {
        Verdict::Refuted(REASON_CONDITION_6)
    } else {
        Verdict::Unresolved
    };
    CandidateReport { candidate: c.clone(), cuts, verdict }
}

/// Summary of a full run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundSummary {
    pub max_sum: i64,
    pub candidates: usize,
    pub refuted: usize,
    pub unresolved: usize,
    pub reports: Vec<CandidateReport>,
}

impl BoundSummary {
    /// `Some("B > max_sum")` exactly when nothing was left unresolved.
    pub fn bound_conclusion(&self) -> Option<String> {
        (self.unresolved == 0).then(|| format!("B > {}", self.max_sum))
    }
}

/// Runs the enumeration and refutation, optionally in parallel; the merge
/// order is the candidate sort order regardless of `jobs`.
pub fn check_bound(max_sum: i64, jobs: usize) -> Result<BoundSummary> {
    let candidates = enumerate_candidates(max_sum)?;
    let jobs = jobs.max(1).min(candidates.len().max(1));
    let reports: Vec<CandidateReport> = if jobs == 1 {
        candidates.iter().map(refute).collect()
    } else {
        let mut reports: Vec<Option<CandidateReport>> = vec![None; candidates.len()];
        std::thread::scope(|scope| {
            for (w, chunk) in reports.chunks_mut(candidates.len().div_ceil(jobs)).enumerate() {
                let chunk_size = candidates.len().div_ceil(jobs);
                let candidates = &candidates;
                scope.spawn(move || {
                    for (i, slot) in chunk.iter_mut().enumerate() {
                        *slot = Some(refute(&candidates[w * chunk_size + i]));
                    }
                });
            }
        });
        reports.into_iter().map(Option::unwrap).collect()
    };
    let refuted = reports.iter().filter(|r| matches!(r.verdict, Verdict::Refuted(_))).count();
    let unresolved = reports.len() - refuted;
    Ok(BoundSummary {
        max_sum,
        candidates: reports.len(),
        refuted,
        unresolved,
        reports,
    })
}

fn fmt_point_rat(p: &(Rat, Rat)) -> String {
    format!("({},{})", format_rat(&p.0), format_rat(&p.1))
}

fn row_cells(r: &CandidateReport) -> [String; 7] {
    let c = &r.candidate;
    let cross = "×".to_string();
    if c.c1_solutions.is_empty() {
        return [
            format!("({},{})", c.u, c.v),
            format!("({},{})", c.f1, c.f2),
            format!("{}", c.dir),
            cross.clone(),
            cross.clone(),
            cross.clone(),
            cross,
        ];
    }
    let c1 = c
        .c1_solutions
        .iter()
        .map(|&(r, s)| format!("({r},{s})"))
        .collect::<Vec<_>>()
        .join(";");
    let (gamma, c2) = match r.cuts.first() {
        Some(cut) => (format_rat(&cut.gamma), fmt_point_rat(&cut.c2)),
        None => (cross.clone(), cross.clone()),
    };
    [
        format!("({},{})", c.u, c.v),
        format!("({},{})", c.f1, c.f2),
        format!("{}", c.dir),
        c1,
        c.d.to_string(),
        gamma,
        c2,
    ]
}

fn verdict_string(v: &Verdict) -> String {
    match v {
        Verdict::Refuted(reason) => format!("refuted:{reason}"),
        Verdict::Unresolved => "unresolved".to_string(),
    }
}

/// Renders reports as a Markdown table, CSV, or JSON.
pub fn emit_table(reports: &[CandidateReport], format: &str) -> Result<String> {
    match format {
        "md" => {
            let mut out = String::new();
            out.push_str("| C0 | (f1,f2) | (rho,sigma) | C1 | d | gamma | C2 |\n");
            out.push_str("|----|---------|-------------|----|---|-------|----|\n");
            for r in reports {
                let cells = row_cells(r);
                out.push_str(&format!("| {} |\n", cells.join(" | ")));
            }
            Ok(out)
        }
        "csv" => {
            let mut out = String::from("C0,F,dir,C1,d,gamma,C2,verdict\n");
            for r in reports {
                let mut cells = row_cells(r).to_vec();
                cells.push(verdict_string(&r.verdict));
                let quoted: Vec<String> = cells
                    .into_iter()
                    .map(|c| {
                        if c.contains(',') {
                            format!("\"{c}\"")
                        } else {
                            c
                        }
                    })
                    .collect();
                out.push_str(&quoted.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        "json" => {
            let mut rows = Vec::new();
            for r in reports {
                let c = &r.candidate;
                let c1 = c
                    .c1_solutions
                    .iter()
                    .map(|&(x, y)| format!("[{x},{y}]"))
                    .collect::<Vec<_>>()
                    .join(",");
                let (gamma, c2) = match r.cuts.first() {
                    Some(cut) => (
                        format!("\"{}\"", format_rat(&cut.gamma)),
                        format!(
                            "[\"{}\",\"{}\"]",
                            format_rat(&cut.c2.0),
                            format_rat(&cut.c2.1)
                        ),
                    ),
                    None => ("null".to_string(), "null".to_string()),
                };
                rows.push(format!(
                    "{{\"C0\":[{},{}],\"F\":[{},{}],\"dir\":[{},{}],\"C1\":[{}],\"d\":{},\"gamma\":{},\"C2\":{},\"verdict\":\"{}\"}}",
                    c.u,
                    c.v,
                    c.f1,
                    c.f2,
                    c.dir.rho(),
                    c.dir.sigma(),
                    c1,
                    c.d,
                    gamma,
                    c2,
                    verdict_string(&r.verdict),
                ));
            }
            Ok(format!("[{}]", rows.join(",")))
        }
        other => Err(Error::UnknownFormat(other.to_string())),
    }
}

/// The complete text output of a run: table, counts, and the bound line.
pub fn render_summary(summary: &BoundSummary, format: &str) -> Result<String> {
    let mut out = emit_table(&summary.reports, format)?;
    if format == "json" {
        out.push('\n');
        return Ok(out);
    }
    out.push_str(&format!(
        "candidates: {}  refuted: {}  unresolved: {}\n",
        summary.candidates, summary.refuted, summary.unresolved
    ));
    if let Some(bound) = summary.bound_conclusion() {
        out.push_str(&bound);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn bound_fifteen_is_fully_refuted() {
        let summary = check_bound(15, 1).unwrap();
        assert_eq!(summary.candidates, 13);
        assert_eq!(summary.refuted, 13);
        assert_eq!(summary.unresolved, 0);
        assert_eq!(summary.bound_conclusion(), Some("B > 15".to_string()));
        // nine distinct (u,v)
        let mut pairs: Vec<(i64, i64)> =
            summary.reports.iter().map(|r| (r.candidate.u, r.candidate.v)).collect();
        pairs.dedup();
        assert_eq!(pairs.len(), 9);
    }

    #[test]
    fn first_row_data() {
        let candidates = enumerate_candidates(15).unwrap();
        let first = &candidates[0];
        assert_eq!((first.u, first.v, first.f1, first.f2), (3, 6, 2, 4));
        assert_eq!(first.dir, Direction::new(3, -1).unwrap());
        assert_eq!(first.c1_solutions, vec![(1, 0)]);
        assert_eq!(first.d, 1);
        let report = refute(first);
        assert_eq!(report.verdict, Verdict::Refuted(REASON_CONDITION_6));
        let cut = &report.cuts[0];
        assert_eq!(cut.gamma, rat(2));
        assert_eq!(cut.c2, (frac(5, 3), rat(2)));
        assert!(cut.forbidden);
    }

    #[test]
    fn no_c1_row() {
        let candidates = enumerate_candidates(15).unwrap();
        let row = candidates
            .iter()
            .find(|c| (c.u, c.v, c.f1) == (3, 9, 2))
            .unwrap();
        assert_eq!(row.dir, Direction::new(5, -1).unwrap());
        assert!(row.c1_solutions.is_empty());
        assert_eq!(refute(row).verdict, Verdict::Refuted(REASON_NO_C1));
    }

    #[test]
    fn six_nine_row() {
        let candidates = enumerate_candidates(15).unwrap();
        let row = candidates
            .iter()
            .find(|c| (c.u, c.v, c.f1) == (6, 9, 2))
            .unwrap();
        assert_eq!(row.dir, Direction::new(2, -1).unwrap());
        assert_eq!(row.c1_solutions, vec![(2, 1)]);
        let report = refute(row);
        assert_eq!(report.cuts[0].gamma, rat(4));
        assert_eq!(report.cuts[0].c2, (frac(7, 2), rat(4)));
        assert_eq!(report.verdict, Verdict::Refuted(REASON_CONDITION_6));
    }

    #[test]
    fn five_ten_contributes_three() {
        let candidates = enumerate_candidates(15).unwrap();
        let fs: Vec<(i64, i64)> = candidates
            .iter()
            .filter(|c| (c.u, c.v) == (5, 10))
            .map(|c| (c.f1, c.f2))
            .collect();
        assert_eq!(fs, vec![(2, 4), (3, 6), (4, 8)]);
    }

    #[test]
    fn small_bounds() {
        assert!(enumerate_candidates(8).unwrap().is_empty());
        assert!(enumerate_candidates(4).is_err());
        let summary = check_bound(9, 1).unwrap();
        assert_eq!(summary.candidates, 1);
        assert_eq!(summary.unresolved, 0);
    }

    #[test]
    fn candidate_invariants() {
        for c in enumerate_candidates(20).unwrap() {
            assert!(c.dir.sigma() < 0);
            assert!(c.dir.is_strict());
            assert_eq!(
                c.dir,
                dir_of(&Point::from_ints(c.f1 - 1, c.f2 - 1)).unwrap()
            );
            for (r, s) in c.c1_solutions {
                assert_eq!(
                    c.dir.rho() * r + c.dir.sigma() * s,
                    c.dir.rho() * c.u + c.dir.sigma() * c.v
                );
                assert!(0 <= s && s < r && r < c.u);
            }
        }
    }

    #[test]
    fn monotonicity_and_parallel_agreement() {
        let base = enumerate_candidates(15).unwrap();
        let wider = enumerate_candidates(20).unwrap();
        for c in &base {
            assert!(wider.contains(c));
        }
        let serial = check_bound(20, 1).unwrap();
        let parallel = check_bound(20, 4).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn formats() {
        let summary = check_bound(15, 1).unwrap();
        let md = emit_table(&summary.reports, "md").unwrap();
        assert_eq!(md.lines().count(), 15); // header + separator + 13 rows
        assert!(md.contains("| (3,6) | (2,4) | (3,-1) | (1,0) | 1 | 2 | (5/3,2) |"));
        let csv = emit_table(&[], "csv").unwrap();
        assert_eq!(csv, "C0,F,dir,C1,d,gamma,C2,verdict\n");
        let json = emit_table(&summary.reports[..1], "json").unwrap();
        assert_eq!(
            json,
            "[{\"C0\":[3,6],\"F\":[2,4],\"dir\":[3,-1],\"C1\":[[1,0]],\"d\":1,\
             \"gamma\":\"2\",\"C2\":[\"5/3\",\"2\"],\"verdict\":\"refuted:condition (6)\"}]"
        );
        assert!(emit_table(&[], "xml").is_err());
    }
}
