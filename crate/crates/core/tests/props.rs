//! Randomized invariants over small graphs.  Sizes are capped so the worst
//! case stays inside the default budget deterministically.

use dpcolor::bounds::{bound_report, half_values_report, subadditivity_check};
use dpcolor::cover::{Cover, CoverEnumeration, GaugeTransform};
use dpcolor::invariants::{chromatic_number, coloring_number, independence_number};
use dpcolor::transversal::{alpha_t_dp, alpha_t_dp_with_hint, chi_dp, max_transversal};
use dpcolor::twist::alpha_2_dp_fast;
use dpcolor::{Budget, Graph};
use proptest::prelude::*;

fn b() -> Budget {
    Budget::default()
}

fn graph_from(n: usize, picks: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if picks[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |picks| graph_from(n, &picks))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn fold_one_reduces_to_independence(g in small_graph(6)) {
        let cert = alpha_t_dp(&g, 1, &b()).unwrap();
        let (mis, _) = independence_number(&g, &b()).unwrap();
        prop_assert_eq!(cert.covers_total, 1);
        prop_assert_eq!(cert.value, mis);
    }

    #[test]
    fn parity_path_agrees_with_generic_solver(g in small_graph(6)) {
        let fast = alpha_2_dp_fast(&g, &b()).unwrap();
        let slow = alpha_t_dp_with_hint(&g, 2, None, &b()).unwrap();
        prop_assert_eq!(fast.value, slow.value);
        prop_assert_eq!(fast.cover_index, slow.cover_index);
        prop_assert!(fast.recheck(&b()).unwrap());
    }

    #[test]
    fn least_full_fold_sits_between_chromatic_and_coloring_number(g in small_graph(5)) {
        let x = chi_dp(&g, &b()).unwrap();
        prop_assert!(chromatic_number(&g, &b()).unwrap() <= x);
        prop_assert!(x <= coloring_number(&g));
    }

    #[test]
    fn max_transversal_is_gauge_invariant(
        g in small_graph(6),
        index in any::<u64>(),
        flips in proptest::collection::vec(any::<bool>(), 6),
    ) {
        let en = CoverEnumeration::new(&g, 2, &b()).unwrap();
        let cover = en.cover_at(index as u128 % en.total());
        let perms = (0..g.n())
            .map(|v| if flips[v] { vec![1u8, 0] } else { vec![0u8, 1] })
            .collect();
        let twisted = cover.apply_gauge(&GaugeTransform::new(perms).unwrap()).unwrap();
        let (a, _) = max_transversal(&cover, &b()).unwrap();
        let (c, _) = max_transversal(&twisted, &b()).unwrap();
        prop_assert_eq!(a, c);
    }

    #[test]
    fn canonical_form_undoes_any_gauge(
        g in small_graph(6),
        index in any::<u64>(),
        flips in proptest::collection::vec(any::<bool>(), 6),
    ) {
        let en = CoverEnumeration::new(&g, 2, &b()).unwrap();
        let cover = en.cover_at(index as u128 % en.total());
        let perms = (0..g.n())
            .map(|v| if flips[v] { vec![1u8, 0] } else { vec![0u8, 1] })
            .collect();
        let twisted = cover.apply_gauge(&GaugeTransform::new(perms).unwrap()).unwrap();
        let (canon, _) = twisted.canonicalize().unwrap();
        prop_assert_eq!(canon, cover);
    }

    #[test]
    fn cover_json_round_trips(g in small_graph(6), index in any::<u64>()) {
        let en = CoverEnumeration::new(&g, 2, &b()).unwrap();
        let cover = en.cover_at(index as u128 % en.total());
        let back = Cover::from_json(&cover.to_json()).unwrap();
        prop_assert_eq!(back, cover);
    }

    #[test]
    fn doubling_the_fold_is_subadditive(g in small_graph(6)) {
        prop_assert!(subadditivity_check(&g, &[1, 1], &b()).unwrap().holds);
    }

    #[test]
    fn bound_rows_hold_ceiling_and_agree_on_shares(g in small_graph(5)) {
        // The ceiling bound is guaranteed; proportional-share may fail on
        // folds below chi_dp, but its verdicts must match the half-values
        // analysis, and the final fold (alpha = n) satisfies everything.
        let report = bound_report(&g, &b()).unwrap();
        let half = half_values_report(&g, &b()).unwrap();
        prop_assert_eq!(report.rows.len(), report.chi_dp);
        for row in &report.rows {
            let ceiling = &row.bounds[0];
            prop_assert!(ceiling.satisfied, "fold {} bound {}", row.t, ceiling.name);
            let share = &row.bounds[1];
            if row.t == report.chi_dp {
                prop_assert!(share.satisfied, "final fold misses its share");
            } else {
                prop_assert_eq!(share.satisfied, half.rows[row.t - 1].satisfies);
            }
        }
    }

    #[test]
    fn half_of_the_folds_reach_their_share(g in small_graph(5)) {
        let report = half_values_report(&g, &b()).unwrap();
        prop_assert!(report.guarantee_met());
        prop_assert!(report.pair_disjunction_holds);
    }
}
