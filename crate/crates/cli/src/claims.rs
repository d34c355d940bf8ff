//! The frozen claim table and its evaluation engine.  Each claim is data:
//! an id, a human statement, a frozen expected string, a check recipe, and
//! the command that reproduces the number.  Evaluation renders a computed
//! string; a claim is confirmed exactly when the strings match.

use dpcolor::families;
use dpcolor::invariants::feedback_vertex_number;
use dpcolor::transversal::{alpha_t_dp, chi_dp, nice_verdict_bounded, BoundedNiceReport};
use dpcolor::twist::{alpha_2_dp_fast, feasible_on, TwistAssignment};
use dpcolor::{Budget, Graph, Ratio, VertexSet};

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub expected: &'static str,
    pub check: Check,
    pub rerun: &'static str,
}

pub enum Check {
    /// Worst-cover maximum partial transversal at the given fold.
    Alpha { spec: &'static str, t: usize },
    /// Least fold at which every cover admits a full transversal.
    ChiDp { spec: &'static str },
    /// Feedback vertex number.
    Tau { spec: &'static str },
    /// Proportional-share verdict over all folds.
    Nice { spec: &'static str },
    /// The pinned cube twist leaves every face square without a full
    /// assignment.
    SquareTwistObstructions,
    /// Every twist of the 8-vertex ladder leaves one of three 6-vertex
    /// pieces feasible, so at least 6 vertices always survive.
    ThreeCyclePatch,
    /// Fold-2 value strictly above the induced-forest size.
    ForestBoundGap { spec: &'static str },
    /// Fold-2 value meets the (5n-2)/8 share exactly.
    ShareSharpness { spec: &'static str },
    /// Smallest p <= cap whose join with K_p passes the share test at
    /// every fold.
    JoinThreshold { spec: &'static str, cap: usize },
    /// Failing-fold sets along the join tower shrink monotonically.
    FailingFoldChain { spec: &'static str, cap: usize },
    /// Least full fold along the join tower.
    JoinFoldPattern { spec: &'static str, cap: usize },
}

pub const CLAIMS: &[Claim] = &[
    Claim {
        id: "alpha1-path5",
        statement: "at fold 1 the 5-path keeps 3 vertices, its independence number",
        expected: "3",
        check: Check::Alpha { spec: "path:5", t: 1 },
        rerun: "dpcolor alpha --graph path:5 --t 1",
    },
    Claim {
        id: "alpha2-c5",
        statement: "the 5-cycle keeps 4 vertices in its worst 2-fold cover",
        expected: "4",
        check: Check::Alpha { spec: "cycle:5", t: 2 },
        rerun: "dpcolor alpha --graph cycle:5 --t 2",
    },
    Claim {
        id: "alpha2-complete4",
        statement: "complete graphs keep exactly t vertices: K4 at fold 2",
        expected: "2",
        check: Check::Alpha { spec: "complete:4", t: 2 },
        rerun: "dpcolor alpha --graph complete:4 --t 2",
    },
    Claim {
        id: "alpha2-complete5",
        statement: "complete graphs keep exactly t vertices: K5 at fold 2",
        expected: "2",
        check: Check::Alpha { spec: "complete:5", t: 2 },
        rerun: "dpcolor alpha --graph complete:5 --t 2",
    },
    Claim {
        id: "alpha2-gadget",
        statement: "the gadget (K4 with one edge subdivided) keeps only 3 of 5 vertices at fold 2",
        expected: "3",
        check: Check::Alpha { spec: "gadget", t: 2 },
        rerun: "dpcolor alpha --graph gadget --t 2",
    },
    Claim {
        id: "alpha2-gstar1",
        statement: "a 1-block gadget chain keeps 3 vertices at fold 2",
        expected: "3",
        check: Check::Alpha { spec: "gstar:1", t: 2 },
        rerun: "dpcolor alpha --graph gstar:1 --t 2",
    },
    Claim {
        id: "alpha2-gstar2",
        statement: "a 2-block gadget chain keeps 6 vertices at fold 2",
        expected: "6",
        check: Check::Alpha { spec: "gstar:2", t: 2 },
        rerun: "dpcolor alpha --graph gstar:2 --t 2",
    },
    Claim {
        id: "alpha2-gstar3",
        statement: "a 3-block gadget chain keeps 9 vertices at fold 2",
        expected: "9",
        check: Check::Alpha { spec: "gstar:3", t: 2 },
        rerun: "dpcolor alpha --graph gstar:3 --t 2",
    },
    Claim {
        id: "alpha2-m",
        statement: "the 10-vertex two-block chain keeps 6 vertices in its worst 2-fold cover",
        expected: "6",
        check: Check::Alpha { spec: "m", t: 2 },
        rerun: "dpcolor alpha --graph m --t 2",
    },
    Claim {
        id: "alpha2-path5",
        statement: "trees keep every vertex at fold 2",
        expected: "5",
        check: Check::Alpha { spec: "path:5", t: 2 },
        rerun: "dpcolor alpha --graph path:5 --t 2",
    },
    Claim {
        id: "alpha2-q3",
        statement: "the 3-cube keeps 5 of 8 vertices in its worst 2-fold cover",
        expected: "5",
        check: Check::Alpha { spec: "q3", t: 2 },
        rerun: "dpcolor alpha --graph q3 --t 2",
    },
    Claim {
        id: "alpha2-v8",
        statement: "the 8-vertex Moebius ladder keeps 6 vertices in its worst 2-fold cover",
        expected: "6",
        check: Check::Alpha { spec: "v8", t: 2 },
        rerun: "dpcolor alpha --graph v8 --t 2",
    },
    Claim {
        id: "alpha3-complete5",
        statement: "complete graphs keep exactly t vertices: K5 at fold 3",
        expected: "3",
        check: Check::Alpha { spec: "complete:5", t: 3 },
        rerun: "dpcolor alpha --graph complete:5 --t 3",
    },
    Claim {
        id: "chi-dp-cycle3",
        statement: "every cycle needs fold 3 before all covers admit a full transversal: C3",
        expected: "3",
        check: Check::ChiDp { spec: "cycle:3" },
        rerun: "dpcolor chi-dp --graph cycle:3",
    },
    Claim {
        id: "chi-dp-cycle4",
        statement: "every cycle needs fold 3 before all covers admit a full transversal: C4",
        expected: "3",
        check: Check::ChiDp { spec: "cycle:4" },
        rerun: "dpcolor chi-dp --graph cycle:4",
    },
    Claim {
        id: "chi-dp-cycle5",
        statement: "every cycle needs fold 3 before all covers admit a full transversal: C5",
        expected: "3",
        check: Check::ChiDp { spec: "cycle:5" },
        rerun: "dpcolor chi-dp --graph cycle:5",
    },
    Claim {
        id: "chi-dp-cycle6",
        statement: "every cycle needs fold 3 before all covers admit a full transversal: C6",
        expected: "3",
        check: Check::ChiDp { spec: "cycle:6" },
        rerun: "dpcolor chi-dp --graph cycle:6",
    },
    Claim {
        id: "chi-dp-cycle7",
        statement: "every cycle needs fold 3 before all covers admit a full transversal: C7",
        expected: "3",
        check: Check::ChiDp { spec: "cycle:7" },
        rerun: "dpcolor chi-dp --graph cycle:7",
    },
    Claim {
        id: "chi-dp-cycle8",
        statement: "every cycle needs fold 3 before all covers admit a full transversal: C8",
        expected: "3",
        check: Check::ChiDp { spec: "cycle:8" },
        rerun: "dpcolor chi-dp --graph cycle:8",
    },
    Claim {
        id: "chi-dp-gadget",
        statement: "the gadget reaches full transversals at fold 3",
        expected: "3",
        check: Check::ChiDp { spec: "gadget" },
        rerun: "dpcolor chi-dp --graph gadget",
    },
    Claim {
        id: "chi-dp-m",
        statement: "the two-block chain reaches full transversals at fold 3",
        expected: "3",
        check: Check::ChiDp { spec: "m" },
        rerun: "dpcolor chi-dp --graph m",
    },
    Claim {
        id: "chi-dp-q3",
        statement: "the 3-cube reaches full transversals at fold 3",
        expected: "3",
        check: Check::ChiDp { spec: "q3" },
        rerun: "dpcolor chi-dp --graph q3",
    },
    Claim {
        id: "chi-dp-v8",
        statement: "the Moebius ladder reaches full transversals at fold 3",
        expected: "3",
        check: Check::ChiDp { spec: "v8" },
        rerun: "dpcolor chi-dp --graph v8",
    },
    Claim {
        id: "join-chain-c5",
        statement: "failing folds along the 5-cycle join tower only shrink",
        expected: "B0={} B1={} B2={} B3={}; chain holds",
        check: Check::FailingFoldChain { spec: "cycle:5", cap: 3 },
        rerun: "dpcolor verify-paper --only join-chain-c5",
    },
    Claim {
        id: "join-chain-gadget",
        statement: "failing folds along the gadget join tower only shrink",
        expected: "B0={2} B1={} B2={} B3={}; chain holds",
        check: Check::FailingFoldChain { spec: "gadget", cap: 3 },
        rerun: "dpcolor verify-paper --only join-chain-gadget",
    },
    Claim {
        id: "join-pattern-c5",
        statement: "each added apex raises the 5-cycle's least full fold by exactly one",
        expected: "3,4,5,6,7",
        check: Check::JoinFoldPattern { spec: "cycle:5", cap: 4 },
        rerun: "dpcolor verify-paper --only join-pattern-c5",
    },
    Claim {
        id: "join-pattern-gadget",
        statement: "each added apex raises the gadget's least full fold by exactly one",
        expected: "3,4,5,6,7",
        check: Check::JoinFoldPattern { spec: "gadget", cap: 4 },
        rerun: "dpcolor verify-paper --only join-pattern-gadget",
    },
    Claim {
        id: "join-threshold-c5",
        statement: "the 5-cycle passes the share test without any apex",
        expected: "p=0",
        check: Check::JoinThreshold { spec: "cycle:5", cap: 4 },
        rerun: "dpcolor join-threshold --graph cycle:5",
    },
    Claim {
        id: "join-threshold-complete4",
        statement: "complete graphs pass the share test without any apex",
        expected: "p=0",
        check: Check::JoinThreshold { spec: "complete:4", cap: 4 },
        rerun: "dpcolor join-threshold --graph complete:4",
    },
    Claim {
        id: "join-threshold-gadget",
        statement: "one apex is enough to make the gadget pass the share test",
        expected: "p=1",
        check: Check::JoinThreshold { spec: "gadget", cap: 4 },
        rerun: "dpcolor join-threshold --graph gadget",
    },
    Claim {
        id: "join-threshold-v8",
        statement: "the Moebius ladder passes the share test without any apex",
        expected: "p=0",
        check: Check::JoinThreshold { spec: "v8", cap: 4 },
        rerun: "dpcolor join-threshold --graph v8",
    },
    Claim {
        id: "m-sharp",
        statement: "the two-block chain meets the general (5n-2)/8 share bound with equality",
        expected: "alpha 6, share 6",
        check: Check::ShareSharpness { spec: "m" },
        rerun: "dpcolor verify-paper --only m-sharp",
    },
    Claim {
        id: "nice-chordal:7:1/2:seed1",
        statement: "a seeded chordal instance carries every fold's share (n=7, density 1/2, seed 1)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:7:1/2:seed1" },
        rerun: "dpcolor nice --graph chordal:7:1/2:seed1",
    },
    Claim {
        id: "nice-chordal:7:2/5:seed0",
        statement: "a seeded chordal instance carries every fold's share (n=7, density 2/5, seed 0)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:7:2/5:seed0" },
        rerun: "dpcolor nice --graph chordal:7:2/5:seed0",
    },
    Claim {
        id: "nice-chordal:7:3/5:seed0",
        statement: "a seeded chordal instance carries every fold's share (n=7, density 3/5, seed 0)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:7:3/5:seed0" },
        rerun: "dpcolor nice --graph chordal:7:3/5:seed0",
    },
    Claim {
        id: "nice-chordal:8:1/2:seed0",
        statement: "a seeded chordal instance carries every fold's share (n=8, density 1/2, seed 0)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:8:1/2:seed0" },
        rerun: "dpcolor nice --graph chordal:8:1/2:seed0",
    },
    Claim {
        id: "nice-chordal:8:2/5:seed3",
        statement: "a seeded chordal instance carries every fold's share (n=8, density 2/5, seed 3)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:8:2/5:seed3" },
        rerun: "dpcolor nice --graph chordal:8:2/5:seed3",
    },
    Claim {
        id: "nice-chordal:8:3/5:seed2",
        statement: "a seeded chordal instance carries every fold's share (n=8, density 3/5, seed 2)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:8:3/5:seed2" },
        rerun: "dpcolor nice --graph chordal:8:3/5:seed2",
    },
    Claim {
        id: "nice-chordal:9:1/2:seed2",
        statement: "a seeded chordal instance carries every fold's share (n=9, density 1/2, seed 2)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:9:1/2:seed2" },
        rerun: "dpcolor nice --graph chordal:9:1/2:seed2",
    },
    Claim {
        id: "nice-chordal:9:1/2:seed4",
        statement: "a seeded chordal instance carries every fold's share (n=9, density 1/2, seed 4)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:9:1/2:seed4" },
        rerun: "dpcolor nice --graph chordal:9:1/2:seed4",
    },
    Claim {
        id: "nice-chordal:9:2/5:seed5",
        statement: "a seeded chordal instance carries every fold's share (n=9, density 2/5, seed 5)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:9:2/5:seed5" },
        rerun: "dpcolor nice --graph chordal:9:2/5:seed5",
    },
    Claim {
        id: "nice-chordal:9:3/5:seed0",
        statement: "a seeded chordal instance carries every fold's share (n=9, density 3/5, seed 0)",
        expected: "nice",
        check: Check::Nice { spec: "chordal:9:3/5:seed0" },
        rerun: "dpcolor nice --graph chordal:9:3/5:seed0",
    },
    Claim {
        id: "nice-complete1",
        statement: "complete graphs carry every fold's share: K1",
        expected: "nice",
        check: Check::Nice { spec: "complete:1" },
        rerun: "dpcolor nice --graph complete:1",
    },
    Claim {
        id: "nice-complete2",
        statement: "complete graphs carry every fold's share: K2",
        expected: "nice",
        check: Check::Nice { spec: "complete:2" },
        rerun: "dpcolor nice --graph complete:2",
    },
    Claim {
        id: "nice-complete3",
        statement: "complete graphs carry every fold's share: K3",
        expected: "nice",
        check: Check::Nice { spec: "complete:3" },
        rerun: "dpcolor nice --graph complete:3",
    },
    Claim {
        id: "nice-complete4",
        statement: "complete graphs carry every fold's share: K4",
        expected: "nice",
        check: Check::Nice { spec: "complete:4" },
        rerun: "dpcolor nice --graph complete:4",
    },
    Claim {
        id: "nice-complete5",
        statement: "complete graphs carry every fold's share: K5",
        expected: "nice",
        check: Check::Nice { spec: "complete:5" },
        rerun: "dpcolor nice --graph complete:5",
    },
    Claim {
        id: "nice-gadget",
        statement: "the gadget misses its fold-2 share",
        expected: "not nice, failing folds {2}",
        check: Check::Nice { spec: "gadget" },
        rerun: "dpcolor nice --graph gadget",
    },
    Claim {
        id: "nice-gstar2",
        statement: "the 2-block gadget chain misses its fold-2 share",
        expected: "not nice, failing folds {2}",
        check: Check::Nice { spec: "gstar:2" },
        rerun: "dpcolor nice --graph gstar:2",
    },
    Claim {
        id: "nice-q3",
        statement: "the 3-cube misses its fold-2 share",
        expected: "not nice, failing folds {2}",
        check: Check::Nice { spec: "q3" },
        rerun: "dpcolor nice --graph q3",
    },
    Claim {
        id: "nice-v8",
        statement: "the Moebius ladder carries every fold's share",
        expected: "nice",
        check: Check::Nice { spec: "v8" },
        rerun: "dpcolor nice --graph v8",
    },
    Claim {
        id: "q3-square-twist",
        statement: "one twist of the cube leaves all six face squares without a full assignment",
        expected: "6/6 squares infeasible",
        check: Check::SquareTwistObstructions,
        rerun: "dpcolor verify-paper --only q3-square-twist",
    },
    Claim {
        id: "tau-gadget",
        statement: "two deletions make the gadget a forest",
        expected: "2",
        check: Check::Tau { spec: "gadget" },
        rerun: "dpcolor tau --graph gadget",
    },
    Claim {
        id: "tau-gstar2",
        statement: "four deletions make the 2-block gadget chain a forest",
        expected: "4",
        check: Check::Tau { spec: "gstar:2" },
        rerun: "dpcolor tau --graph gstar:2",
    },
    Claim {
        id: "tau-gstar3",
        statement: "six deletions make the 3-block gadget chain a forest",
        expected: "6",
        check: Check::Tau { spec: "gstar:3" },
        rerun: "dpcolor tau --graph gstar:3",
    },
    Claim {
        id: "tau-m",
        statement: "four deletions make the two-block chain a forest",
        expected: "4",
        check: Check::Tau { spec: "m" },
        rerun: "dpcolor tau --graph m",
    },
    Claim {
        id: "tau-q3",
        statement: "three deletions make the 3-cube a forest",
        expected: "3",
        check: Check::Tau { spec: "q3" },
        rerun: "dpcolor tau --graph q3",
    },
    Claim {
        id: "tau-v8",
        statement: "three deletions make the Moebius ladder a forest",
        expected: "3",
        check: Check::Tau { spec: "v8" },
        rerun: "dpcolor tau --graph v8",
    },
    Claim {
        id: "v8-forest-gap",
        statement: "the ladder's fold-2 value strictly beats its induced-forest bound",
        expected: "alpha 6, bound 5",
        check: Check::ForestBoundGap { spec: "v8" },
        rerun: "dpcolor verify-paper --only v8-forest-gap",
    },
    Claim {
        id: "v8-three-cycle-patch",
        statement: "for every 2-fold twist of the ladder, dropping {2,7}, {5,7} or {0,6} leaves a feasible piece",
        expected: "4096/4096 twists patched",
        check: Check::ThreeCyclePatch,
        rerun: "dpcolor verify-paper --only v8-three-cycle-patch",
    },
];

/// Known-false row appended when DPCOLOR_SELFTEST_REFUTE is set, so the
/// refutation path to exit code 3 can be exercised end to end.
pub const SELFTEST_REFUTED: Claim = Claim {
    id: "selftest-refuted-row",
    statement: "deliberately wrong expectation used to test refutation reporting",
    expected: "4",
    check: Check::Alpha { spec: "q3", t: 2 },
    rerun: "dpcolor alpha --graph q3 --t 2",
};

pub fn fmt_folds(folds: &[usize]) -> String {
    let inner = folds.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
    format!("{{{inner}}}")
}

fn nice_string(rep: &BoundedNiceReport) -> String {
    if rep.is_nice() {
        "nice".into()
    } else {
        format!("not nice, failing folds {}", fmt_folds(&rep.failing_folds()))
    }
}

pub struct JoinRow {
    pub p: usize,
    pub n: usize,
    pub chi_dp: usize,
    pub nice: bool,
    pub failing: Vec<usize>,
}

pub struct JoinScan {
    pub rows: Vec<JoinRow>,
    pub threshold: Option<usize>,
    pub chain_holds: bool,
}

/// Tests G joined with K_p for p = 0, 1, ... in order.  With
/// `stop_at_nice` the scan ends at the first passing join (the threshold
/// answer); otherwise it runs through the whole cap, which is what the
/// chain claims need.
pub fn scan_join(
    g: &Graph,
    cap: usize,
    stop_at_nice: bool,
    budget: &Budget,
) -> dpcolor::Result<JoinScan> {
    let mut rows = Vec::new();
    for p in 0..=cap {
        let joined = families::join_complete(g, p)?;
        let rep = nice_verdict_bounded(&joined, budget)?;
        let nice = rep.is_nice();
        rows.push(JoinRow {
            p,
            n: joined.n(),
            chi_dp: rep.chi_dp,
            nice,
            failing: rep.failing_folds(),
        });
        if nice && stop_at_nice {
            break;
        }
    }
    let chain_holds = rows
        .windows(2)
        .all(|w| w[1].failing.iter().all(|t| w[0].failing.contains(t)));
    let threshold = rows.iter().find(|r| r.nice).map(|r| r.p);
    Ok(JoinScan { rows, threshold, chain_holds })
}

pub fn evaluate(check: &Check, budget: &Budget) -> dpcolor::Result<String> {
    match check {
        Check::Alpha { spec, t } => {
            let g = families::from_spec(spec)?;
            let cert = if *t == 2 {
                alpha_2_dp_fast(&g, budget)?
            } else {
                alpha_t_dp(&g, *t, budget)?
            };
            Ok(cert.value.to_string())
        }
        Check::ChiDp { spec } => {
            let g = families::from_spec(spec)?;
            Ok(chi_dp(&g, budget)?.to_string())
        }
        Check::Tau { spec } => {
            let g = families::from_spec(spec)?;
            Ok(feedback_vertex_number(&g, budget)?.0.to_string())
        }
        Check::Nice { spec } => {
            let g = families::from_spec(spec)?;
            Ok(nice_string(&nice_verdict_bounded(&g, budget)?))
        }
        Check::SquareTwistObstructions => {
            let g = families::q3();
            let swapped = [(0, 1), (1, 2), (2, 3), (4, 7)];
            let bits = g
                .edges()
                .iter()
                .map(|&(u, v)| u8::from(swapped.contains(&(u, v))))
                .collect();
            let tw = TwistAssignment::new(g, bits)?;
            let squares: [[usize; 4]; 6] = [
                [0, 1, 2, 3],
                [4, 5, 6, 7],
                [0, 1, 5, 4],
                [1, 2, 6, 5],
                [2, 3, 7, 6],
                [0, 3, 7, 4],
            ];
            let mut infeasible = 0;
            for sq in &squares {
                let (twist, len) = tw.cycle_parity_sum(sq)?;
                if twist != len {
                    infeasible += 1;
                }
            }
            Ok(format!("{infeasible}/6 squares infeasible"))
        }
        Check::ThreeCyclePatch => {
            let g = families::wagner_v8();
            let m = g.edges().len();
            let pieces = [(2usize, 7usize), (5, 7), (0, 6)]
                .map(|(a, b)| VertexSet::full(8).without(a).without(b));
            let mut patched = 0u32;
            for code in 0u32..1 << m {
                let bits = (0..m).map(|e| ((code >> e) & 1) as u8).collect();
                let tw = TwistAssignment::new(g.clone(), bits)?;
                let mut ok = false;
                for &s in &pieces {
                    if feasible_on(&tw, s)?.is_feasible() {
                        ok = true;
                        break;
                    }
                }
                if ok {
                    patched += 1;
                }
            }
            Ok(format!("{patched}/{} twists patched", 1u32 << m))
        }
        Check::ForestBoundGap { spec } => {
            let g = families::from_spec(spec)?;
            let alpha = alpha_2_dp_fast(&g, budget)?.value;
            let bound = g.n() - feedback_vertex_number(&g, budget)?.0;
            Ok(format!("alpha {alpha}, bound {bound}"))
        }
        Check::ShareSharpness { spec } => {
            let g = families::from_spec(spec)?;
            let alpha = alpha_2_dp_fast(&g, budget)?.value;
            let share = Ratio::new(5 * g.n() as i64 - 2, 8);
            Ok(format!("alpha {alpha}, share {share}"))
        }
        Check::JoinThreshold { spec, cap } => {
            let g = families::from_spec(spec)?;
            let scan = scan_join(&g, *cap, true, budget)?;
            Ok(match scan.threshold {
                Some(p) => format!("p={p}"),
                None => format!("none <= {cap}"),
            })
        }
        Check::FailingFoldChain { spec, cap } => {
            let g = families::from_spec(spec)?;
            let scan = scan_join(&g, *cap, false, budget)?;
            let sets = scan
                .rows
                .iter()
                .map(|r| format!("B{}={}", r.p, fmt_folds(&r.failing)))
                .collect::<Vec<_>>()
                .join(" ");
            let verdict = if scan.chain_holds { "chain holds" } else { "chain broken" };
            Ok(format!("{sets}; {verdict}"))
        }
        Check::JoinFoldPattern { spec, cap } => {
            let g = families::from_spec(spec)?;
            let scan = scan_join(&g, *cap, false, budget)?;
            Ok(scan
                .rows
                .iter()
                .map(|r| r.chi_dp.to_string())
                .collect::<Vec<_>>()
                .join(","))
        }
    }
}
