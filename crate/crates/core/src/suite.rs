//! Verification suite plumbing: per-check records, summaries, exit status,
//! and a bounded worker pool.

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::oracle::{Verdict, VerdictKind};

/// Exit status for a refuted check.
pub const EXIT_REFUTED: i32 = 1;
/// Exit status for an Unknown check under `--strict`.
pub const EXIT_UNKNOWN: i32 = 2;

#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub id: String,
    pub verdict: Verdict,
    /// Whether both sides already agreed after free reduction.
    pub free: Option<bool>,
    /// How a proof was obtained when not by direct search.
    pub note: Option<String>,
    pub wall_ms: f64,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, verdict: Verdict) -> Self {
        CheckRecord {
            id: id.into(),
            verdict,
            free: None,
            note: None,
            wall_ms: 0.0,
        }
    }

    pub fn with_free(mut self, free: bool) -> Self {
        self.free = Some(free);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub proven_trivial: usize,
    pub proven_nontrivial: usize,
    pub unknown: usize,
    /// Checks settled by free reduction alone.
    pub free: usize,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
}

/// What to include in the JSON form beyond the deterministic core.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    pub timings: bool,
    pub traces: bool,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckRecord>) -> Self {
        SuiteReport {
            suite: suite.into(),
            checks,
        }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            total: self.checks.len(),
            ..Summary::default()
        };
        for c in &self.checks {
            match c.verdict.kind() {
                VerdictKind::ProvenTrivial => s.proven_trivial += 1,
                VerdictKind::ProvenNontrivial => s.proven_nontrivial += 1,
                VerdictKind::Unknown => s.unknown += 1,
            }
            if c.free == Some(true) {
                s.free += 1;
            }
        }
        s
    }

    /// 0 when nothing is refuted (and, under `strict`, nothing is Unknown).
    pub fn exit_status(&self, strict: bool) -> i32 {
        let s = self.summary();
        if s.proven_nontrivial > 0 {
            EXIT_REFUTED
        } else if strict && s.unknown > 0 {
            EXIT_UNKNOWN
        } else {
            0
        }
    }

    /// Every verdict re-checked from scratch.
    pub fn all_replay(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.replay())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.verdict.is_trivial())
    }

    pub fn to_json(&self, opts: ReportOptions) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = verdict_json(&c.verdict, opts.traces);
                let obj = v.as_object_mut().expect("verdicts serialize as objects");
                obj.insert("id".into(), json!(c.id));
                if let Some(f) = c.free {
                    obj.insert("free".into(), json!(f));
                }
                if let Some(n) = &c.note {
                    obj.insert("note".into(), json!(n));
                }
                if opts.timings {
                    obj.insert("wall_ms".into(), json!(c.wall_ms));
                }
                v
            })
            .collect();
        json!({
            "suite": self.suite,
            "summary": self.summary(),
            "checks": checks,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.verdict.kind() {
                VerdictKind::ProvenTrivial => "ok",
                VerdictKind::ProvenNontrivial => "REFUTED",
                VerdictKind::Unknown => "unknown",
            };
            let how = match (&c.verdict, c.free) {
                (_, Some(true)) => " (free)".to_string(),
                (Verdict::ProvenTrivial { trace, .. }, _) => format!(" ({} steps)", trace.len()),
                (Verdict::ProvenNontrivial { oracle, .. }, _) => format!(" ({oracle})"),
                (Verdict::Unknown { diagnostics, .. }, _) => format!(" ({})", diagnostics.reason),
            };
            let note = c.note.as_deref().map(|n| format!(" [{n}]")).unwrap_or_default();
            out.push_str(&format!("{tag:<8} {}{how}{note}\n", c.id));
        }
        let s = self.summary();
        out.push_str(&format!(
            "{}: {} checks, {} proven, {} refuted, {} unknown, {} free\n",
            self.suite, s.total, s.proven_trivial, s.proven_nontrivial, s.unknown, s.free
        ));
        out
    }
}

/// JSON for a verdict, with the derivation trace dropped unless requested.
pub fn verdict_json(v: &Verdict, traces: bool) -> Value {
    let mut j = serde_json::to_value(v).expect("verdicts serialize");
    if !traces {
        if let Some(obj) = j.as_object_mut() {
            if let Some(Value::Object(t)) = obj.remove("trace") {
                let steps = t.get("steps").and_then(Value::as_array).map_or(0, Vec::len);
                obj.insert("trace_steps".into(), json!(steps));
            }
        }
    }
    j
}

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let jobs = std::env::var("VPB_JOBS")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&j| j > 0)
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
    })
}

/// Evaluate independent checks on the shared pool (capped by `VPB_JOBS`),
/// returning records in input order.
pub fn run_checks<T, F>(jobs: Vec<T>, f: F) -> Result<Vec<CheckRecord>>
where
    T: Send,
    F: Fn(T) -> Result<CheckRecord> + Sync,
{
    pool().install(|| {
        jobs.into_par_iter()
            .map(|job| {
                let t0 = Instant::now();
                let mut rec = f(job)?;
                rec.wall_ms = t0.elapsed().as_secs_f64() * 1e3;
                Ok(rec)
            })
            .collect()
    })
}

/// Map over independent items on the shared pool, preserving order.
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    pool().install(|| items.into_par_iter().map(&f).collect())
}
