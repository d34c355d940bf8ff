//! dpcolor: exact DP-coloring computations from the command line.
//!
//! Exit codes: 0 success (all claims confirmed for `verify-paper`), 1 usage
//! or input error, 2 budget exhausted, 3 a verified claim was refuted.

mod claims;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use dpcolor::bounds::bound_report;
use dpcolor::cover::Cover;
use dpcolor::export::{cover_to_dot, graph_to_dot};
use dpcolor::families;
use dpcolor::invariants::feedback_vertex_number;
use dpcolor::transversal::{
    alpha_t_dp, chi_dp, max_transversal, nice_verdict_bounded, NiceEvidence,
};
use dpcolor::twist::{
    alpha_2_dp_fast, feasible, max_partial_twist, TwistAssignment, TwistVerdict,
};
use dpcolor::{Budget, Error, Graph};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dpcolor",
    version,
    about = "Exact DP-coloring and partial DP-coloring of small graphs"
)]
struct Cli {
    /// Cap on search-node expansions per operation (env DPCOLOR_MAX_NODES).
    #[arg(long, global = true, value_name = "N")]
    max_nodes: Option<u64>,

    /// Cap on covers examined per enumeration (env DPCOLOR_MAX_COVERS).
    #[arg(long, global = true, value_name = "N")]
    max_covers: Option<u64>,

    /// Make verify-paper fail (exit 2) when any claim hits its budget.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Worst-cover maximum partial transversal at fold t, as a certificate.
    Alpha {
        /// Graph spec: q3, v8, gadget, m, gstar:N, cycle:N, path:N,
        /// complete:N, star:N, mobius:N, chordal:N:D:seedS, file:PATH.
        #[arg(long)]
        graph: String,
        /// Fold: slots per vertex list.
        #[arg(long)]
        t: usize,
    },
    /// Least fold at which every cover admits a full transversal.
    ChiDp {
        #[arg(long)]
        graph: String,
    },
    /// Proportional-share verdict for every fold up to chi_dp.
    Nice {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether one 2-fold twist admits a full transversal.
    TwistFeasible {
        #[arg(long)]
        graph: String,
        /// One 0/1 character per edge, in edge order.
        #[arg(long)]
        bits: String,
    },
    /// Maximum partial transversal of one 2-fold twist.
    MaxPartial {
        #[arg(long)]
        graph: String,
        /// One 0/1 character per edge, in edge order.
        #[arg(long)]
        bits: String,
    },
    /// Feedback vertex number: fewest deletions leaving a forest.
    Tau {
        #[arg(long)]
        graph: String,
    },
    /// Exact per-fold values next to the lower bounds they must dominate.
    Bounds {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Join K_p for p = 0, 1, ... until the share test passes at every fold.
    JoinThreshold {
        #[arg(long)]
        graph: String,
        /// Largest p to try.
        #[arg(long, default_value_t = 4)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Render a graph or a cover (from a JSON file) as DOT or JSON.
    Export {
        #[arg(long, conflicts_with = "cover")]
        graph: Option<String>,
        /// Path to a cover JSON file, e.g. the worst_cover of a certificate.
        #[arg(long)]
        cover: Option<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Re-derive every frozen claim and compare against its expected value.
    VerifyPaper {
        /// Only run claims whose id contains this substring.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e @ Error::Budget { .. }) => {
            eprintln!("dpcolor: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("dpcolor: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> dpcolor::Result<u8> {
    let budget = resolve_budget(&cli)?;
    let strict = cli.strict;
    match cli.cmd {
        Cmd::Alpha { graph, t } => cmd_alpha(&graph, t, &budget),
        Cmd::ChiDp { graph } => cmd_chi_dp(&graph, &budget),
        Cmd::Nice { graph, json } => cmd_nice(&graph, json, &budget),
        Cmd::TwistFeasible { graph, bits } => cmd_twist_feasible(&graph, &bits),
        Cmd::MaxPartial { graph, bits } => cmd_max_partial(&graph, &bits, &budget),
        Cmd::Tau { graph } => cmd_tau(&graph, &budget),
        Cmd::Bounds { graph, json } => cmd_bounds(&graph, json, &budget),
        Cmd::JoinThreshold { graph, cap, json } => cmd_join_threshold(&graph, cap, json, &budget),
        Cmd::Export { graph, cover, format } => cmd_export(graph.as_deref(), cover.as_deref(), format, &budget),
        Cmd::VerifyPaper { only, json } => cmd_verify_paper(only.as_deref(), json, strict, &budget),
    }
}

fn resolve_budget(cli: &Cli) -> dpcolor::Result<Budget> {
    let mut b = Budget::default();
    if let Some(v) = env_limit("DPCOLOR_MAX_NODES")? {
        b = b.with_max_nodes(v);
    }
    if let Some(v) = env_limit("DPCOLOR_MAX_COVERS")? {
        b = b.with_max_covers(v);
    }
    if let Some(v) = cli.max_nodes {
        b = b.with_max_nodes(v);
    }
    if let Some(v) = cli.max_covers {
        b = b.with_max_covers(v);
    }
    Ok(b)
}

fn env_limit(name: &str) -> dpcolor::Result<Option<u64>> {
    match std::env::var(name) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidArg(format!("{name} must be an integer, got `{s}`"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(Error::InvalidArg(format!("{name} is not valid UTF-8")))
        }
    }
}

fn parse_twist(spec: &str, bits: &str) -> dpcolor::Result<TwistAssignment> {
    let g = families::from_spec(spec)?;
    let bits = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(0u8),
            '1' => Ok(1u8),
            other => Err(Error::InvalidArg(format!(
                "twist bits must be 0 or 1, got `{other}`"
            ))),
        })
        .collect::<dpcolor::Result<Vec<u8>>>()?;
    TwistAssignment::new(g, bits)
}

fn cmd_alpha(spec: &str, t: usize, budget: &Budget) -> dpcolor::Result<u8> {
    let g = families::from_spec(spec)?;
    let cert = if t == 2 {
        alpha_2_dp_fast(&g, budget)?
    } else {
        alpha_t_dp(&g, t, budget)?
    };
    println!("{}", cert.to_json());
    Ok(0)
}

fn cmd_chi_dp(spec: &str, budget: &Budget) -> dpcolor::Result<u8> {
    let g = families::from_spec(spec)?;
    let value = chi_dp(&g, budget)?;
    println!("{}", json!({ "graph": spec, "n": g.n(), "chi_dp": value }));
    Ok(0)
}

fn cmd_tau(spec: &str, budget: &Budget) -> dpcolor::Result<u8> {
    let g = families::from_spec(spec)?;
    let (tau, set) = feedback_vertex_number(&g, budget)?;
    println!(
        "{}",
        json!({ "graph": spec, "n": g.n(), "tau": tau, "feedback_set": set.to_vec() })
    );
    Ok(0)
}

fn cmd_twist_feasible(spec: &str, bits: &str) -> dpcolor::Result<u8> {
    let tw = parse_twist(spec, bits)?;
    let doc = match feasible(&tw)? {
        TwistVerdict::Feasible(tr) => json!({
            "graph": spec, "bits": bits, "feasible": true, "witness": tr.slots,
        }),
        TwistVerdict::Infeasible(ob) => json!({
            "graph": spec, "bits": bits, "feasible": false,
            "obstruction": {
                "cycle": ob.cycle,
                "twist_parity": ob.twist_parity,
                "length_parity": ob.length_parity,
            },
        }),
    };
    println!("{doc}");
    Ok(0)
}

fn cmd_max_partial(spec: &str, bits: &str, budget: &Budget) -> dpcolor::Result<u8> {
    let tw = parse_twist(spec, bits)?;
    let (value, set, tr) = max_partial_twist(&tw, budget)?;
    println!(
        "{}",
        json!({
            "graph": spec, "bits": bits, "value": value,
            "vertices": set.to_vec(), "witness": tr.slots,
        })
    );
    Ok(0)
}

fn evidence_text(e: &NiceEvidence) -> String {
    match e {
        NiceEvidence::Exact(v) => format!("exact {v}"),
        NiceEvidence::SubgraphBound(v) => format!("at least {v} (subgraph)"),
    }
}

fn cmd_nice(spec: &str, as_json: bool, budget: &Budget) -> dpcolor::Result<u8> {
    let g = families::from_spec(spec)?;
    let rep = nice_verdict_bounded(&g, budget)?;
    if as_json {
        let rows = rep
            .rows
            .iter()
            .map(|r| {
                let (kind, value) = match r.evidence {
                    NiceEvidence::Exact(v) => ("exact", v),
                    NiceEvidence::SubgraphBound(v) => ("subgraph-bound", v),
                };
                json!({
                    "t": r.t,
                    "evidence": { "kind": kind, "value": value },
                    "threshold": r.threshold.to_string(),
                    "satisfied": r.satisfied,
                })
            })
            .collect::<Vec<_>>();
        let failure = match &rep.failure {
            Some((t, cert)) => json!({
                "t": t,
                "certificate": serde_json::from_str::<serde_json::Value>(&cert.to_json())?,
            }),
            None => serde_json::Value::Null,
        };
        println!(
            "{}",
            json!({
                "graph": spec, "n": g.n(), "chi_dp": rep.chi_dp,
                "nice": rep.is_nice(), "failing_folds": rep.failing_folds(),
                "rows": rows, "failure": failure,
            })
        );
        return Ok(0);
    }
    println!("graph {spec}: {} vertices, chi_dp = {}", g.n(), rep.chi_dp);
    println!("{:>5}  {:<24} {:>10}  {}", "fold", "evidence", "threshold", "share met");
    for r in &rep.rows {
        println!(
            "{:>5}  {:<24} {:>10}  {}",
            r.t,
            evidence_text(&r.evidence),
            r.threshold.to_string(),
            if r.satisfied { "yes" } else { "no" }
        );
    }
    if rep.is_nice() {
        println!("partially DP-nice: yes");
    } else {
        println!(
            "partially DP-nice: no (failing folds {})",
            claims::fmt_folds(&rep.failing_folds())
        );
        if let Some((t, cert)) = &rep.failure {
            println!("fold {t} worst-cover certificate: {}", cert.to_json());
        }
    }
    Ok(0)
}

fn cmd_bounds(spec: &str, as_json: bool, budget: &Budget) -> dpcolor::Result<u8> {
    let g = families::from_spec(spec)?;
    let rep = bound_report(&g, budget)?;
    if as_json {
        let rows = rep
            .rows
            .iter()
            .map(|r| {
                json!({
                    "t": r.t,
                    "alpha": r.alpha,
                    "bounds": r.bounds.iter().map(|b| json!({
                        "name": b.name,
                        "value": b.value.to_string(),
                        "satisfied": b.satisfied,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>();
        println!(
            "{}",
            json!({ "graph": spec, "n": rep.n, "chi_dp": rep.chi_dp, "rows": rows })
        );
        return Ok(0);
    }
    println!("graph {spec}: n = {}, chi_dp = {}", rep.n, rep.chi_dp);
    for r in &rep.rows {
        let mut line = format!("t={} alpha={}", r.t, r.alpha);
        for b in &r.bounds {
            line.push_str(&format!(
                "  {}={} {}",
                b.name,
                b.value,
                if b.satisfied { "ok" } else { "miss" }
            ));
        }
        println!("{line}");
    }
    Ok(0)
}

fn cmd_join_threshold(spec: &str, cap: usize, as_json: bool, budget: &Budget) -> dpcolor::Result<u8> {
    let g = families::from_spec(spec)?;
    let scan = claims::scan_join(&g, cap, true, budget)?;
    if as_json {
        let rows = scan
            .rows
            .iter()
            .map(|r| {
                json!({
                    "p": r.p, "n": r.n, "chi_dp": r.chi_dp,
                    "nice": r.nice, "failing_folds": r.failing,
                })
            })
            .collect::<Vec<_>>();
        println!(
            "{}",
            json!({
                "graph": spec, "cap": cap, "rows": rows,
                "threshold": scan.threshold, "chain_holds": scan.chain_holds,
            })
        );
        return Ok(0);
    }
    println!("{:>3} {:>3} {:>7}  verdict", "p", "n", "chi_dp");
    for r in &scan.rows {
        let verdict = if r.nice {
            "nice".to_string()
        } else {
            format!("not nice, failing folds {}", claims::fmt_folds(&r.failing))
        };
        println!("{:>3} {:>3} {:>7}  {verdict}", r.p, r.n, r.chi_dp);
    }
    println!(
        "failing-fold chain: {}",
        if scan.chain_holds { "holds (each join's failing set shrinks)" } else { "broken" }
    );
    match scan.threshold {
        Some(p) => println!("threshold: p={p}"),
        None => println!("threshold: none at p <= {cap}"),
    }
    Ok(0)
}

fn cmd_export(
    graph: Option<&str>,
    cover: Option<&str>,
    format: Format,
    budget: &Budget,
) -> dpcolor::Result<u8> {
    match (graph, cover) {
        (Some(spec), None) => {
            let g = families::from_spec(spec)?;
            match format {
                Format::Dot => {
                    let names = families::names_from_spec(spec);
                    print!("{}", graph_to_dot(&g, names.as_deref()));
                }
                Format::Json => println!("{}", graph_json(&g)),
            }
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let cover = Cover::from_json(&text)?;
            match format {
                Format::Dot => {
                    let (_, witness) = max_transversal(&cover, budget)?;
                    print!("{}", cover_to_dot(&cover, Some(&witness)));
                }
                Format::Json => println!("{}", cover.to_json()),
            }
        }
        (None, None) => {
            return Err(Error::InvalidArg("export needs --graph or --cover".into()));
        }
        (Some(_), Some(_)) => unreachable!("clap rejects --graph with --cover"),
    }
    Ok(0)
}

fn graph_json(g: &Graph) -> String {
    json!({ "n": g.n(), "edges": g.edges() }).to_string()
}

fn cmd_verify_paper(
    only: Option<&str>,
    as_json: bool,
    strict: bool,
    budget: &Budget,
) -> dpcolor::Result<u8> {
    let outcomes = report::run_claims(only, budget);
    if outcomes.is_empty() {
        return Err(Error::InvalidArg(format!(
            "--only `{}` matches no claim id",
            only.unwrap_or_default()
        )));
    }
    if as_json {
        println!("{}", report::render_json(&outcomes));
    } else {
        print!("{}", report::render_table(&outcomes));
    }
    let (_, refuted, budget_exceeded) = report::counts(&outcomes);
    Ok(if refuted > 0 {
        3
    } else if budget_exceeded > 0 && strict {
        2
    } else {
        0
    })
}
