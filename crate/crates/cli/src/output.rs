//! Human and machine renderings of reports.
//!
//! Machine output is one JSON object per line: a `report` record per suite,
//! a `violation` record per violated identity, and a single trailing `timing`
//! record. Everything except the timing record is a pure function of the
//! inputs.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use trihom::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    record: &'static str,
    suite: &'a str,
    status: String,
    identities_checked: usize,
    tuples_enumerated: u64,
    violations: usize,
}

#[derive(Serialize)]
struct ViolationRecord<'a> {
    record: &'static str,
    suite: &'a str,
    identity: &'a str,
    tuple: &'a [usize],
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Serialize)]
struct TimingRecord {
    record: &'static str,
    wall_time_us: u128,
}

fn json_line(out: &mut String, value: &impl Serialize) {
    let line = serde_json::to_string(value).expect("records serialize");
    out.push_str(&line);
    out.push('\n');
}

pub fn render(reports: &[Report], format: Format) -> String {
    let mut out = String::new();
    let total: Duration = reports.iter().map(|r| r.stats.wall_time).sum();
    match format {
        Format::Human => {
            for r in reports {
                let _ = writeln!(out, "{}: {}", r.suite, r.status);
                for v in &r.violations {
                    let _ = writeln!(out, "  {} at {:?}: {} != {}", v.identity, v.tuple, v.lhs, v.rhs);
                }
                let _ = writeln!(
                    out,
                    "  {} identities over {} tuples",
                    r.stats.identities_checked, r.stats.tuples_enumerated
                );
            }
            let _ = writeln!(out, "wall time: {:.3} ms", total.as_secs_f64() * 1e3);
        }
        Format::Machine => {
            for r in reports {
                json_line(
                    &mut out,
                    &ReportRecord {
                        record: "report",
                        suite: &r.suite,
                        status: r.status.to_string(),
                        identities_checked: r.stats.identities_checked,
                        tuples_enumerated: r.stats.tuples_enumerated,
                        violations: r.violations.len(),
                    },
                );
                for v in &r.violations {
                    json_line(
                        &mut out,
                        &ViolationRecord {
                            record: "violation",
                            suite: &r.suite,
                            identity: &v.identity,
                            tuple: &v.tuple,
                            lhs: &v.lhs,
                            rhs: &v.rhs,
                        },
                    );
                }
            }
            json_line(
                &mut out,
                &TimingRecord {
                    record: "timing",
                    wall_time_us: total.as_micros(),
                },
            );
        }
    }
    out
}
