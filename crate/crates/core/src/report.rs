//! Structured verdicts of identity suites.

use std::fmt;
use std::time::{Duration, Instant};

use crate::linalg::{render_vec, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One failing instance of an identity: the basis tuple and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub identities_checked: usize,
    pub tuples_enumerated: u64,
    pub wall_time: Duration,
}

/// Verdict of a suite. Only the first violating tuple of each identity is
/// kept; the remaining identities are still checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub status: Status,
    pub violations: Vec<Violation>,
    pub stats: Stats,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Whether the named identity has a recorded violation.
    pub fn violates(&self, identity: &str) -> bool {
        self.violations.iter().any(|v| v.identity == identity)
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// A passing report with no checks, for vacuous suites.
    pub fn vacuous(suite: &str) -> Self {
        Checker::new(suite).finish()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.suite, self.status)?;
        if let Some(v) = self.first_violation() {
            write!(
                f,
                " ({} at {:?}: {} != {})",
                v.identity, v.tuple, v.lhs, v.rhs
            )?;
        }
        Ok(())
    }
}

/// Accumulates checks into a [`Report`].
pub struct Checker {
    suite: String,
    identities: Vec<String>,
    violations: Vec<Violation>,
    passed_elsewhere: usize,
    tuples: u64,
    start: Instant,
}

impl Checker {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            identities: Vec::new(),
            violations: Vec::new(),
            passed_elsewhere: 0,
            tuples: 0,
            start: Instant::now(),
        }
    }

    fn touch(&mut self, identity: &str) {
        if !self.identities.iter().any(|i| i == identity) {
            self.identities.push(identity.to_string());
        }
    }

    /// Whether the identity has already failed, so callers can skip work.
    pub fn failed(&self, identity: &str) -> bool {
        self.violations.iter().any(|v| v.identity == identity)
    }

    pub fn count_tuple(&mut self) {
        self.tuples += 1;
    }

    fn record(&mut self, identity: &str, tuple: &[usize], lhs: String, rhs: String) {
        if !self.failed(identity) {
            self.violations.push(Violation {
                identity: identity.to_string(),
                tuple: tuple.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    pub fn vec_eq<S: Scalar>(&mut self, identity: &str, tuple: &[usize], lhs: &[S], rhs: &[S]) -> bool {
        self.touch(identity);
        if lhs == rhs {
            return true;
        }
        self.record(identity, tuple, render_vec(lhs), render_vec(rhs));
        false
    }

    pub fn mat_eq<S: Scalar>(
        &mut self,
        identity: &str,
        tuple: &[usize],
        lhs: &Matrix<S>,
        rhs: &Matrix<S>,
    ) -> bool {
        self.touch(identity);
        if lhs == rhs {
            return true;
        }
        self.record(identity, tuple, lhs.to_string(), rhs.to_string());
        false
    }

    pub fn scalar_eq<S: Scalar>(&mut self, identity: &str, tuple: &[usize], lhs: &S, rhs: &S) -> bool {
        self.touch(identity);
        if lhs == rhs {
            return true;
        }
        self.record(identity, tuple, lhs.render(), rhs.render());
        false
    }

    /// Records a predicate without numeric sides.
    pub fn holds(&mut self, identity: &str, tuple: &[usize], ok: bool, lhs: &str, rhs: &str) -> bool {
        self.touch(identity);
        if !ok {
            self.record(identity, tuple, lhs.to_string(), rhs.to_string());
        }
        ok
    }

    /// Folds a sub-report in, prefixing its identity names.
    pub fn include(&mut self, prefix: &str, report: &Report) {
        let name = |id: &str| {
            if prefix.is_empty() {
                id.to_string()
            } else {
                format!("{prefix}.{id}")
            }
        };
        self.tuples += report.stats.tuples_enumerated;
        for v in &report.violations {
            let id = name(&v.identity);
            self.touch(&id);
            self.record(&id, &v.tuple, v.lhs.clone(), v.rhs.clone());
        }
        self.passed_elsewhere += report.stats.identities_checked - report.violations.len();
    }

    pub fn finish(self) -> Report {
        let status = if self.violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            suite: self.suite,
            status,
            violations: self.violations,
            stats: Stats {
                identities_checked: self.identities.len() + self.passed_elsewhere,
                tuples_enumerated: self.tuples,
                wall_time: self.start.elapsed(),
            },
        }
    }
}

/// Calls `f` on every `k`-tuple over `0..dim` in lexicographic order.
pub fn for_each_tuple(dim: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > 0 && dim == 0 {
        return;
    }
    let mut t = vec![0usize; k];
    loop {
        f(&t);
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < dim {
                break;
            }
            t[pos] = 0;
        }
    }
}
