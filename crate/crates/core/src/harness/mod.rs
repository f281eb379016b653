//! Theorem-verification harness: instantiates every closed formula, bound,
//! and construction on generated instance families, compares against the
//! certified exact solvers, and emits a deterministic structured report.

mod checks;

use serde::{Deserialize, Serialize};

use crate::config::SolverCaps;
use crate::error::Result;

/// How a check's comparisons are judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssertionKind {
    Equality,
    Bound,
    Biconditional,
    /// Annotates discrepancies without failing the run; used only for the
    /// statements whose reading is ambiguous.
    ReportedOnly,
}

/// Static description of one check.
#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub kind: AssertionKind,
    runner: fn(&Ctx, &mut Rec),
}

/// Suite configuration. The seed drives every random family; two runs with
/// the same config produce byte-identical reports.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub caps: SolverCaps,
    /// Restrict to these check ids (e.g. ["T9"]); None runs all.
    pub filter: Option<Vec<String>>,
    /// Maximum number of checks evaluated concurrently.
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            caps: SolverCaps::default(),
            filter: None,
            jobs: 1,
        }
    }
}

/// Outcome of one instance under one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// Out of hypothesis or over a solver cap; the reason is mandatory.
    Skip,
    /// Reported-only annotation; never affects the exit status.
    Note,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Detail {
    pub instance: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub anchor: String,
    pub kind: AssertionKind,
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub details: Vec<Detail>,
}

impl CheckReport {
    /// A check is vacuous when nothing in its instance set exercised the
    /// hypothesis; vacuity is treated as failure at the suite level.
    pub fn vacuous(&self) -> bool {
        self.pass == 0
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteMeta {
    pub seed: u64,
    pub caps: SolverCaps,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremReport {
    pub suite: SuiteMeta,
    pub checks: Vec<CheckReport>,
}

impl TheoremReport {
    /// True iff no hard check failed and no check is vacuous.
    pub fn is_clean(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.fail == 0 && !c.vacuous())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Per-run context handed to each check.
pub(crate) struct Ctx {
    pub caps: SolverCaps,
    pub seed: u64,
}

/// Accumulator for one check's outcomes.
pub(crate) struct Rec {
    details: Vec<Detail>,
}

impl Rec {
    fn new() -> Self {
        Rec { details: Vec::new() }
    }

    pub fn pass(&mut self, instance: String, expected: impl ToString, actual: impl ToString) {
        self.details.push(Detail {
            instance,
            outcome: Outcome::Pass,
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            note: None,
        });
    }

    pub fn fail(&mut self, instance: String, expected: impl ToString, actual: impl ToString) {
        self.details.push(Detail {
            instance,
            outcome: Outcome::Fail,
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            note: None,
        });
    }

    pub fn skip(&mut self, instance: String, reason: impl ToString) {
        self.details.push(Detail {
            instance,
            outcome: Outcome::Skip,
            expected: None,
            actual: None,
            note: Some(reason.to_string()),
        });
    }

    pub fn note(&mut self, instance: String, text: impl ToString) {
        self.details.push(Detail {
            instance,
            outcome: Outcome::Note,
            expected: None,
            actual: None,
            note: Some(text.to_string()),
        });
    }

    /// Equality assertion helper.
    pub fn eq(&mut self, instance: String, expected: usize, actual: usize) {
        if expected == actual {
            self.pass(instance, expected, actual);
        } else {
            self.fail(instance, expected, actual);
        }
    }

    /// Bound assertion helper: lo <= actual <= hi.
    pub fn within(&mut self, instance: String, lo: usize, hi: usize, actual: usize) {
        if lo <= actual && actual <= hi {
            self.pass(instance, format!("[{lo},{hi}]"), actual);
        } else {
            self.fail(instance, format!("[{lo},{hi}]"), actual);
        }
    }

    /// Boolean assertion helper.
    pub fn holds(&mut self, instance: String, statement: impl ToString, ok: bool) {
        if ok {
            self.pass(instance, statement, "holds");
        } else {
            self.fail(instance, statement, "violated");
        }
    }

    /// Runs a fallible instance computation; solver caps and hypothesis
    /// violations become skips, anything else a failure.
    pub fn run(&mut self, instance: String, f: impl FnOnce(&mut Rec, String) -> Result<()>) {
        let inst = instance.clone();
        if let Err(e) = f(self, inst) {
            match e {
                crate::error::Error::SizeCap { .. }
                | crate::error::Error::Inapplicable(_)
                | crate::error::Error::Disconnected { .. } => self.skip(instance, e),
                other => self.fail(instance, "no solver error", other),
            }
        }
    }
}

/// The full check catalog in id order.
pub fn catalog() -> Vec<CheckSpec> {
    checks::catalog()
}

/// Runs the configured checks and assembles the report. Checks are
/// independent; with jobs > 1 they are evaluated concurrently and merged
/// back in catalog order, so the report is identical either way.
pub fn run_suite(config: &SuiteConfig) -> TheoremReport {
    let ctx = Ctx {
        caps: config.caps.clone(),
        seed: config.seed,
    };
    let specs: Vec<CheckSpec> = catalog()
        .into_iter()
        .filter(|s| match &config.filter {
            None => true,
            Some(ids) => ids.iter().any(|id| id == s.id),
        })
        .collect();
    let jobs = config.jobs.max(1);
    let mut reports: Vec<Option<CheckReport>> = (0..specs.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in specs.chunks(specs.len().div_ceil(jobs).max(1)) {
            let ctx = &ctx;
            handles.push(scope.spawn(move || {
                chunk.iter().map(|spec| run_check(ctx, spec)).collect::<Vec<_>>()
            }));
        }
        let mut idx = 0;
        for handle in handles {
            for report in handle.join().expect("check thread") {
                reports[idx] = Some(report);
                idx += 1;
            }
        }
    });
    TheoremReport {
        suite: SuiteMeta {
            seed: config.seed,
            caps: config.caps.clone(),
        },
        checks: reports.into_iter().map(|r| r.expect("all checks ran")).collect(),
    }
}

fn run_check(ctx: &Ctx, spec: &CheckSpec) -> CheckReport {
    let mut rec = Rec::new();
    (spec.runner)(ctx, &mut rec);
    let count = |o: Outcome| rec.details.iter().filter(|d| d.outcome == o).count();
    CheckReport {
        id: spec.id.to_string(),
        anchor: spec.anchor.to_string(),
        kind: spec.kind,
        instances: rec.details.iter().filter(|d| d.outcome != Outcome::Note).count(),
        pass: count(Outcome::Pass),
        fail: count(Outcome::Fail),
        skip: count(Outcome::Skip),
        details: rec.details,
    }
}
