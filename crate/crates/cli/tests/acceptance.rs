//! End-to-end acceptance checks, one test per numbered criterion, so the
//! harness output reads as a pass/fail checklist.  Each test also prints a
//! `criterion N: PASS` line with the measured values for `--nocapture` runs,
//! and every assert message carries its criterion number.

use dpcolor::bounds::{ceiling_bound, subadditivity_check};
use dpcolor::cover::{CoverEnumeration, GaugeTransform};
use dpcolor::families::{self, Lcg};
use dpcolor::invariants::{
    chromatic_number, coloring_number, feedback_vertex_number, independence_number,
    partial_t_chromatic,
};
use dpcolor::transversal::{
    alpha_t_dp, alpha_t_dp_with_hint, chi_dp, exists_full_transversal, max_transversal,
    nice_verdict_bounded,
};
use dpcolor::twist::{
    alpha_2_dp_fast, cover_to_twist, feasible, feasible_on, max_partial_twist, TwistAssignment,
};
use dpcolor::{Budget, Graph, Ratio, VertexSet};
use std::time::Instant;

fn b() -> Budget {
    Budget::default()
}

fn done(criterion: usize, start: Instant, limit_secs: Option<u64>, detail: &str) {
    let elapsed = start.elapsed();
    if let Some(limit) = limit_secs {
        assert!(
            elapsed.as_secs_f64() < limit as f64,
            "criterion {criterion}: FAIL, took {elapsed:?} against a {limit} s limit"
        );
        println!("criterion {criterion}: PASS ({detail}; {elapsed:.2?} < {limit} s)");
    } else {
        println!("criterion {criterion}: PASS ({detail}; {elapsed:.2?})");
    }
}

#[test]
fn criterion_1_cube_fold2_exhaustive() {
    let start = Instant::now();
    // No hint, so the scan provably touches every canonical cover.
    let cert = alpha_t_dp_with_hint(&families::q3(), 2, None, &b()).unwrap();
    assert_eq!(cert.value, 5, "criterion 1: FAIL, alpha_2(Q3) = {}", cert.value);
    assert_eq!(cert.covers_total, 32, "criterion 1: FAIL, canonical cover count");
    assert_eq!(cert.covers_examined, 32, "criterion 1: FAIL, scan was not exhaustive");
    assert!(cert.recheck(&b()).unwrap(), "criterion 1: FAIL, certificate recheck");
    done(1, start, Some(5), "alpha_2(Q3) = 5 over all 32 canonical covers");
}

#[test]
fn criterion_2_ladder_fold2_structural_and_exhaustive() {
    let start = Instant::now();
    let g = families::wagner_v8();
    let m = g.edges().len();
    assert_eq!(m, 12, "criterion 2: FAIL, ladder edge count");
    // Dropping {2,7}, {5,7} or {0,6} leaves a one-cycle graph whose single
    // cycle the three-cycle parity argument says cannot be violated by every
    // twist at once.
    let pieces = [(2usize, 7usize), (5, 7), (0, 6)]
        .map(|(a, b)| VertexSet::full(8).without(a).without(b));
    for code in 0u32..1 << m {
        let bits = (0..m).map(|e| ((code >> e) & 1) as u8).collect();
        let tw = TwistAssignment::new(g.clone(), bits).unwrap();
        assert!(
            pieces.iter().any(|&s| feasible_on(&tw, s).unwrap().is_feasible()),
            "criterion 2: FAIL, twist {code:#014b} escapes all three 6-vertex pieces"
        );
    }
    let cert = alpha_t_dp_with_hint(&g, 2, None, &b()).unwrap();
    assert_eq!(cert.value, 6, "criterion 2: FAIL, alpha_2(V8) = {}", cert.value);
    assert_eq!(cert.covers_examined, 32, "criterion 2: FAIL, scan was not exhaustive");
    done(
        2,
        start,
        Some(10),
        "all 4096 twists keep a 6-vertex piece, and exhaustive alpha_2(V8) = 6",
    );
}

#[test]
fn criterion_3_gadget_invariants() {
    let start = Instant::now();
    let g = families::gadget_g();
    let alpha2 = alpha_2_dp_fast(&g, &b()).unwrap().value;
    assert_eq!(alpha2, 3, "criterion 3: FAIL, alpha_2(gadget) = {alpha2}");
    let cd = chi_dp(&g, &b()).unwrap();
    assert_eq!(cd, 3, "criterion 3: FAIL, chi_dp(gadget) = {cd}");
    let (tau, _) = feedback_vertex_number(&g, &b()).unwrap();
    assert_eq!(tau, 2, "criterion 3: FAIL, tau(gadget) = {tau}");
    done(3, start, Some(2), "gadget: alpha_2 = 3, chi_dp = 3, tau = 2");
}

#[test]
fn criterion_4_gadget_chains() {
    let start = Instant::now();
    for blocks in 1..=3usize {
        let g = families::chain_gstar(blocks).unwrap();
        let cert = alpha_2_dp_fast(&g, &b()).unwrap();
        assert_eq!(
            cert.value,
            3 * blocks,
            "criterion 4: FAIL, alpha_2 of the {blocks}-block chain is {}",
            cert.value
        );
        // The stated iteration allowance for the largest chain: one pass
        // over the canonical covers, 2^(m - n + 1) of them.
        let free = (g.edges().len() - g.n() + 1) as u32;
        assert!(
            cert.covers_examined as u128 <= 2u128.pow(free),
            "criterion 4: FAIL, {} covers examined exceeds 2^{free}",
            cert.covers_examined
        );
        assert!(cert.recheck(&b()).unwrap(), "criterion 4: FAIL, recheck at {blocks} blocks");
    }
    for blocks in 1..=2usize {
        let g = families::chain_gstar(blocks).unwrap();
        let rep = nice_verdict_bounded(&g, &b()).unwrap();
        assert!(
            !rep.is_nice() && rep.failing_folds() == [2],
            "criterion 4: FAIL, the {blocks}-block chain should fail exactly fold 2"
        );
    }
    done(
        4,
        start,
        Some(60),
        "alpha_2 = 3n for 1..3 blocks within the 2^(m-n+1) allowance; 1- and 2-block chains miss fold 2",
    );
}

#[test]
fn criterion_5_ten_vertex_sharpness() {
    let start = Instant::now();
    let g = families::m_graph();
    let cert = alpha_2_dp_fast(&g, &b()).unwrap();
    assert_eq!(cert.value, 6, "criterion 5: FAIL, alpha_2(M) = {}", cert.value);
    let share = Ratio::new(5 * g.n() as i64 - 2, 8);
    assert_eq!(
        Ratio::from_int(cert.value as i64),
        share,
        "criterion 5: FAIL, value does not meet (5n-2)/8 = {share} exactly"
    );
    done(5, start, Some(30), "alpha_2(M) = 6 = (5*10-2)/8, the general bound met with equality");
}

#[test]
fn criterion_6_cycles_need_fold_three() {
    let start = Instant::now();
    for n in 3..=8usize {
        let value = chi_dp(&families::cycle(n).unwrap(), &b()).unwrap();
        assert_eq!(value, 3, "criterion 6: FAIL, chi_dp(C{n}) = {value}");
    }
    done(6, start, Some(5), "chi_dp(C_n) = 3 for n = 3..8");
}

#[test]
fn criterion_7_niceness_verdicts() {
    let start = Instant::now();
    let q3 = nice_verdict_bounded(&families::q3(), &b()).unwrap();
    assert!(
        !q3.is_nice() && q3.failing_folds() == [2],
        "criterion 7: FAIL, the cube should fail exactly fold 2"
    );
    assert!(
        nice_verdict_bounded(&families::wagner_v8(), &b()).unwrap().is_nice(),
        "criterion 7: FAIL, the ladder should be nice"
    );
    for q in 1..=5usize {
        assert!(
            nice_verdict_bounded(&families::complete(q).unwrap(), &b()).unwrap().is_nice(),
            "criterion 7: FAIL, K{q} should be nice"
        );
    }
    let chordal_specs = [
        "chordal:7:1/2:seed1",
        "chordal:7:2/5:seed0",
        "chordal:7:3/5:seed0",
        "chordal:8:1/2:seed0",
        "chordal:8:2/5:seed3",
        "chordal:8:3/5:seed2",
        "chordal:9:1/2:seed2",
        "chordal:9:1/2:seed4",
        "chordal:9:2/5:seed5",
        "chordal:9:3/5:seed0",
    ];
    for spec in chordal_specs {
        let g = families::from_spec(spec).unwrap();
        assert!(
            nice_verdict_bounded(&g, &b()).unwrap().is_nice(),
            "criterion 7: FAIL, {spec} should be nice"
        );
    }
    done(
        7,
        start,
        Some(180),
        "Q3 fails exactly fold 2; V8, K1..K5 and 10 seeded chordal graphs are nice",
    );
}

// ---------------------------------------------------------------------------
// Criterion 8: the property suite.

struct Data {
    name: String,
    g: Graph,
    n: usize,
    chi: usize,
    col: usize,
    chi_dp: usize,
    /// Independence number.
    alpha: usize,
    tau: usize,
    alpha2: usize,
    /// alpha_t for t = 1..=chi_dp, when every fold's enumeration is small
    /// enough to afford exactly.
    full_alphas: Option<Vec<usize>>,
}

impl Data {
    /// Cached exact value up to chi_dp; beyond it the value is n because
    /// every cover is full from chi_dp on (and the cached chi_dp entry is
    /// itself asserted equal to n by the full-iff property).
    fn alpha_at(&self, t: usize) -> usize {
        if t > self.chi_dp {
            self.n
        } else {
            self.full_alphas.as_ref().expect("cached folds")[t - 1]
        }
    }

    fn share_met(&self, t: usize) -> bool {
        self.alpha_at(t) as i64 * self.chi_dp as i64 >= t as i64 * self.n as i64
    }
}

fn factorial(t: usize) -> u128 {
    (1..=t as u128).product()
}

fn alpha_exact(g: &Graph, t: usize) -> usize {
    if t == 2 {
        alpha_2_dp_fast(g, &b()).unwrap().value
    } else {
        alpha_t_dp(g, t, &b()).unwrap().value
    }
}

fn instance(name: String, g: Graph) -> Data {
    let n = g.n();
    let chi = chromatic_number(&g, &b()).unwrap();
    let col = coloring_number(&g);
    let chi_dp = chi_dp(&g, &b()).unwrap();
    let alpha = independence_number(&g, &b()).unwrap().0;
    let tau = feedback_vertex_number(&g, &b()).unwrap().0;
    let alpha2 = alpha_exact(&g, 2);
    let free = (g.edges().len() + g.components().len() - n) as u32;
    let affordable = (1..=chi_dp).all(|t| factorial(t).saturating_pow(free) <= 400_000);
    let full_alphas = affordable.then(|| (1..=chi_dp).map(|t| alpha_exact(&g, t)).collect());
    Data { name, g, n, chi, col, chi_dp, alpha, tau, alpha2, full_alphas }
}

/// Uniform random spanning tree shape plus up to four extra edges, so the
/// fold-2 enumeration and the raw twist scan stay small while cycles are
/// plentiful.
fn tree_plus(n: usize, extras: usize, seed: u64) -> Graph {
    let mut rng = Lcg::new(seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.below(v as u32) as usize, v)).collect();
    let mut added = 0;
    let mut guard = 0;
    while added < extras && guard < 200 {
        guard += 1;
        let a = rng.below(n as u32) as usize;
        let c = rng.below(n as u32) as usize;
        let (u, v) = (a.min(c), a.max(c));
        if u == v || edges.contains(&(u, v)) {
            continue;
        }
        edges.push((u, v));
        added += 1;
    }
    Graph::new(n, edges).unwrap()
}

fn corpus() -> Vec<Data> {
    let mut out = Vec::new();
    for i in 0..52u64 {
        let n = 5 + (i as usize % 5);
        let extras = i as usize % 5;
        let g = tree_plus(n, extras, 0xACCE55 + 31 * i);
        out.push(instance(format!("sparse{i}(n={n},extras={extras})"), g));
    }
    for k in 0..12usize {
        let n = 7 + k % 3;
        let (p, q) = [(2, 5), (1, 2), (3, 5)][k / 4];
        let g = families::random_chordal(n, Ratio::new(p, q), 40 + k as u64).unwrap();
        out.push(instance(format!("chordal{k}(n={n},{p}/{q})"), g));
    }
    for spec in ["q3", "v8", "gadget", "gstar:1", "cycle:5", "cycle:7", "path:6", "complete:4"] {
        out.push(instance(spec.to_string(), families::from_spec(spec).unwrap()));
    }
    out
}

#[test]
fn criterion_8_property_suite() {
    let start = Instant::now();
    let data = corpus();
    let full: Vec<&Data> = data.iter().filter(|d| d.full_alphas.is_some()).collect();
    // Instances small enough for whole-cover-space scans: every canonical
    // fold-2 cover, and every one of the 2^m raw twists.
    let scan: Vec<&Data> = data.iter().filter(|d| d.g.edges().len() <= 12).collect();
    let all: Vec<&Data> = data.iter().collect();
    for (label, set) in [("all", &all), ("full", &full), ("scan", &scan)] {
        let seeded = set
            .iter()
            .filter(|d| d.name.starts_with("sparse") || d.name.starts_with("chordal"))
            .count();
        assert!(
            set.len() >= 50 && seeded >= 50,
            "criterion 8: FAIL, `{label}` set has {} instances ({seeded} seeded)",
            set.len()
        );
    }

    // 1. Subadditivity: splitting the fold can only help the adversary.
    for d in &scan {
        let check = subadditivity_check(&d.g, &[1, 1], &b()).unwrap();
        assert!(check.holds, "criterion 8 (subadditivity): FAIL on {}", d.name);
        assert_eq!(check.alpha_t, d.alpha2, "criterion 8 (subadditivity): FAIL on {}", d.name);
        assert_eq!(check.parts, vec![(1, d.alpha), (1, d.alpha)]);
    }
    for d in &data {
        assert!(d.alpha2 <= 2 * d.alpha, "criterion 8 (subadditivity): FAIL on {}", d.name);
    }
    for d in &full {
        if d.chi_dp >= 3 {
            assert!(
                d.alpha_at(3) <= d.alpha + d.alpha2,
                "criterion 8 (subadditivity): FAIL on {} at partition 1+2",
                d.name
            );
        }
    }

    // 2. Ceiling bound at every fold.
    for d in &full {
        for t in 1..=d.chi_dp {
            let bound = ceiling_bound(d.n, d.chi_dp, t).unwrap();
            assert!(
                Ratio::from_int(d.alpha_at(t) as i64) >= bound,
                "criterion 8 (ceiling): FAIL on {} at fold {t}: {} < {bound}",
                d.name,
                d.alpha_at(t)
            );
        }
    }

    // 3. At least half the folds below chi_dp reach their share.
    for d in &full {
        let satisfying = (1..d.chi_dp).filter(|&t| d.share_met(t)).count();
        assert!(
            satisfying >= d.chi_dp / 2,
            "criterion 8 (half count): FAIL on {}: {satisfying} of {} folds",
            d.name,
            d.chi_dp - 1
        );
    }

    // 4. Folds dividing chi_dp always reach their share.
    for d in &full {
        for t in (1..=d.chi_dp).filter(|t| d.chi_dp % t == 0) {
            assert!(d.share_met(t), "criterion 8 (divides): FAIL on {} at fold {t}", d.name);
        }
    }

    // 5. For every fold, it or its complement reaches the share.
    for d in &full {
        for t in 1..d.chi_dp {
            assert!(
                d.share_met(t) || d.share_met(d.chi_dp - t),
                "criterion 8 (complement pair): FAIL on {} at fold {t}",
                d.name
            );
        }
    }

    // 6. Fold 1 is the independence number.
    for d in &full {
        assert_eq!(d.alpha_at(1), d.alpha, "criterion 8 (fold one): FAIL on {}", d.name);
    }

    // 7. Full value exactly from chi_dp on.
    for d in &full {
        for t in 1..d.chi_dp {
            assert!(
                d.alpha_at(t) < d.n,
                "criterion 8 (full iff): FAIL on {}: full at fold {t} below chi_dp",
                d.name
            );
        }
        assert_eq!(
            d.alpha_at(d.chi_dp),
            d.n,
            "criterion 8 (full iff): FAIL on {} at its chi_dp",
            d.name
        );
    }

    // 8. Fold 2 keeps everything outside a minimum feedback set.
    for d in &data {
        assert!(
            d.alpha2 >= d.n - d.tau,
            "criterion 8 (feedback bound): FAIL on {}: {} < {} - {}",
            d.name,
            d.alpha2,
            d.n,
            d.tau
        );
    }

    // 9. Adversarial lists never beat plain colors.
    for d in &full {
        for t in 1..=d.chi_dp.min(3) {
            let classical = partial_t_chromatic(&d.g, t, &b()).unwrap();
            assert!(
                d.alpha_at(t) <= classical,
                "criterion 8 (colors dominate): FAIL on {} at fold {t}",
                d.name
            );
        }
    }

    // 10. Chromatic sandwich.
    for d in &data {
        assert!(
            d.chi <= d.chi_dp && d.chi_dp <= d.col,
            "criterion 8 (sandwich): FAIL on {}: chi {} chi_dp {} col {}",
            d.name,
            d.chi,
            d.chi_dp,
            d.col
        );
    }

    // 11. Deleting one vertex moves fold 2 by at most one, never up.
    for d in &data {
        let v = d.n / 2;
        let (sub, _) = d.g.induced(d.g.vertices().without(v)).unwrap();
        let sub_alpha2 = alpha_exact(&sub, 2);
        assert!(
            sub_alpha2 <= d.alpha2 && d.alpha2 <= sub_alpha2 + 1,
            "criterion 8 (one vertex): FAIL on {} dropping {v}: {} vs {}",
            d.name,
            sub_alpha2,
            d.alpha2
        );
    }

    // 12. Gauge transformations do not move the maximum transversal.
    for (i, d) in data.iter().enumerate() {
        let en = CoverEnumeration::new(&d.g, 2, &b()).unwrap();
        let cover = en.cover_at(i as u128 % en.total());
        let mut rng = Lcg::new(77 + i as u64);
        let perms = (0..d.n)
            .map(|_| if rng.below(2) == 1 { vec![1u8, 0] } else { vec![0u8, 1] })
            .collect();
        let twisted = cover.apply_gauge(&GaugeTransform::new(perms).unwrap()).unwrap();
        let (before, _) = max_transversal(&cover, &b()).unwrap();
        let (after, _) = max_transversal(&twisted, &b()).unwrap();
        assert_eq!(before, after, "criterion 8 (gauge): FAIL on {}", d.name);
    }

    // 13. Cycle-parity feasibility agrees with full-transversal existence on
    //     every canonical fold-2 cover.
    for d in &scan {
        let en = CoverEnumeration::new(&d.g, 2, &b()).unwrap();
        for k in 0..en.total() {
            let cover = en.cover_at(k);
            let by_parity = feasible(&cover_to_twist(&cover).unwrap()).unwrap().is_feasible();
            let by_search = exists_full_transversal(&cover, &b()).unwrap().is_some();
            assert_eq!(
                by_parity, by_search,
                "criterion 8 (parity vs search): FAIL on {} cover {k}",
                d.name
            );
        }
    }

    // 14. The fold-2 fast path agrees with the generic solver.
    for d in &scan {
        let fast = alpha_2_dp_fast(&d.g, &b()).unwrap();
        let generic = alpha_t_dp(&d.g, 2, &b()).unwrap();
        assert_eq!(fast.value, generic.value, "criterion 8 (fast path): FAIL on {}", d.name);
        assert_eq!(
            fast.cover_index, generic.cover_index,
            "criterion 8 (fast path): FAIL on {}, certificates disagree",
            d.name
        );
        assert!(fast.recheck(&b()).unwrap(), "criterion 8 (fast path): FAIL on {} recheck", d.name);
    }

    // 15. The canonical enumeration loses nothing against all 2^m raw twists.
    for d in &scan {
        let m = d.g.edges().len();
        let mut raw_min = d.n;
        for code in 0u32..1 << m {
            let bits = (0..m).map(|e| ((code >> e) & 1) as u8).collect();
            let tw = TwistAssignment::new(d.g.clone(), bits).unwrap();
            let (value, _, _) = max_partial_twist(&tw, &b()).unwrap();
            raw_min = raw_min.min(value);
        }
        assert_eq!(raw_min, d.alpha2, "criterion 8 (canonical vs raw): FAIL on {}", d.name);
    }

    done(
        8,
        start,
        None,
        &format!(
            "15 properties, zero violations: {} instances ({} with all folds cached, {} whole-space scans)",
            data.len(),
            full.len(),
            scan.len()
        ),
    );
}

#[test]
fn criterion_9_join_tower_monotonicity() {
    let start = Instant::now();
    for spec in ["gadget", "cycle:5"] {
        let g = families::from_spec(spec).unwrap();
        let chi = chromatic_number(&g, &b()).unwrap();
        let mut prev_failing: Option<Vec<usize>> = None;
        let mut prev_chi_dp: Option<usize> = None;
        for p in 0..=3usize {
            let joined = families::join_complete(&g, p).unwrap();
            let rep = nice_verdict_bounded(&joined, &b()).unwrap();
            let failing = rep.failing_folds();
            if let Some(prev) = &prev_failing {
                assert!(
                    failing.iter().all(|t| prev.contains(t)),
                    "criterion 9: FAIL, failing folds grew from {prev:?} to {failing:?} at {spec} + K{p}"
                );
            }
            // The +1 step is asserted wherever the previous join already sat
            // at chi + p, which here is everywhere.
            if prev_chi_dp == Some(chi + p - 1) {
                assert_eq!(
                    rep.chi_dp,
                    chi + p,
                    "criterion 9: FAIL, fold pattern broke at {spec} + K{p}"
                );
            }
            assert_eq!(rep.chi_dp, chi + p, "criterion 9: FAIL, chi_dp({spec} + K{p})");
            prev_failing = Some(failing);
            prev_chi_dp = Some(rep.chi_dp);
        }
    }
    done(
        9,
        start,
        None,
        "failing-fold chains only shrink and chi_dp steps by one along both join towers, p <= 3",
    );
}
