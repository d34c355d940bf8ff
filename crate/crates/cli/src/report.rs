//! Claim evaluation outcomes and their two renderings: a fixed-width text
//! table and a schema-conforming JSON document.  Both are deterministic;
//! timing goes to stderr so repeated runs are byte-identical on stdout.

use crate::claims::{evaluate, Claim, CLAIMS, SELFTEST_REFUTED};
use dpcolor::{Budget, Error};
use serde_json::json;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Confirmed,
    Refuted,
    BudgetExceeded,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::Refuted => "refuted",
            Status::BudgetExceeded => "budget-exceeded",
        }
    }
}

pub struct Outcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub expected: &'static str,
    pub computed: String,
    pub status: Status,
    pub certificate: &'static str,
}

/// Runs the claim table, optionally filtered by id substring, in id order.
pub fn run_claims(only: Option<&str>, budget: &Budget) -> Vec<Outcome> {
    let mut claims: Vec<&Claim> = CLAIMS.iter().collect();
    if std::env::var_os("DPCOLOR_SELFTEST_REFUTE").is_some() {
        claims.push(&SELFTEST_REFUTED);
    }
    claims.sort_by_key(|c| c.id);
    debug_assert!(claims.windows(2).all(|w| w[0].id < w[1].id), "claim ids must be unique");
    claims
        .into_iter()
        .filter(|c| only.is_none_or(|f| c.id.contains(f)))
        .map(|c| {
            let start = Instant::now();
            let (computed, status) = match evaluate(&c.check, budget) {
                Ok(s) if s == c.expected => (s, Status::Confirmed),
                Ok(s) => (s, Status::Refuted),
                Err(Error::Budget { resource, limit }) => (
                    format!("(stopped: {resource} budget {limit})"),
                    Status::BudgetExceeded,
                ),
                Err(e) => (format!("(error: {e})"), Status::Refuted),
            };
            eprintln!("{}: {} in {:?}", c.id, status.label(), start.elapsed());
            Outcome {
                id: c.id,
                statement: c.statement,
                expected: c.expected,
                computed,
                status,
                certificate: c.rerun,
            }
        })
        .collect()
}

pub fn counts(outcomes: &[Outcome]) -> (usize, usize, usize) {
    let confirmed = outcomes.iter().filter(|o| o.status == Status::Confirmed).count();
    let refuted = outcomes.iter().filter(|o| o.status == Status::Refuted).count();
    let budget = outcomes.iter().filter(|o| o.status == Status::BudgetExceeded).count();
    (confirmed, refuted, budget)
}

pub fn render_table(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<26} {:<16} {:<40} {}\n",
        "claim", "status", "expected", "computed"
    ));
    for o in outcomes {
        out.push_str(&format!(
            "{:<26} {:<16} {:<40} {}\n",
            o.id,
            o.status.label(),
            o.expected,
            o.computed
        ));
    }
    for o in outcomes.iter().filter(|o| o.status != Status::Confirmed) {
        out.push('\n');
        out.push_str(&format!("{} is {}\n", o.id, o.status.label()));
        out.push_str(&format!("  claim:    {}\n", o.statement));
        out.push_str(&format!("  expected: {}\n", o.expected));
        out.push_str(&format!("  computed: {}\n", o.computed));
        out.push_str(&format!("  rerun:    {}\n", o.certificate));
    }
    let (confirmed, refuted, budget) = counts(outcomes);
    out.push_str(&format!(
        "\n{} claims: {confirmed} confirmed, {refuted} refuted, {budget} budget-exceeded\n",
        outcomes.len()
    ));
    out
}

pub fn render_json(outcomes: &[Outcome]) -> String {
    let (confirmed, refuted, budget) = counts(outcomes);
    let doc = json!({
        "claims": outcomes.iter().map(|o| json!({
            "id": o.id,
            "statement": o.statement,
            "expected": o.expected,
            "computed": o.computed,
            "status": o.status.label(),
            "certificate": o.certificate,
        })).collect::<Vec<_>>(),
        "summary": {
            "total": outcomes.len(),
            "confirmed": confirmed,
            "refuted": refuted,
            "budget_exceeded": budget,
        },
    });
    serde_json::to_string_pretty(&doc).expect("report serializes")
}
