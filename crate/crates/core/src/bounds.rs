//! Relations between the partial values at different folds: cover gluing,
//! the ceiling quotient bound, the half-the-values analysis, subadditivity
//! across fold partitions, and the per-graph report the CLI prints.

use crate::budget::{Budget, Meter};
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Ratio;
use crate::transversal;
use crate::transversal::alpha_t_dp_auto as alpha_auto;

/// Stacks covers of the same base into one cover whose fold is the sum:
/// layer i keeps its matchings, with slots offset by the preceding folds.
/// Any transversal of the glued cover splits by layer into transversals of
/// the parts, so its maximum is at most the sum of the parts' maxima.
pub fn glue_covers(covers: &[Cover]) -> Result<Cover> {
    let first = covers
        .first()
        .ok_or_else(|| Error::InvalidArg("glue needs at least one cover".into()))?;
    if covers.iter().any(|c| c.base() != first.base()) {
        return Err(Error::InvalidArg("glued covers need the same base".into()));
    }
    let fold: usize = covers.iter().map(|c| c.fold()).sum();
    if fold > 255 {
        return Err(Error::InvalidArg(format!("glued fold {fold} exceeds 255")));
    }
    let matchings = (0..first.base().edges().len())
        .map(|e| {
            let mut m: Vec<Option<u8>> = Vec::with_capacity(fold);
            let mut off = 0u8;
            for c in covers {
                m.extend(c.matching(e).iter().map(|s| s.map(|x| x + off)));
                off += c.fold() as u8;
            }
            m
        })
        .collect();
    Cover::new(first.base().clone(), fold, matchings)
}

/// `n / ceil(chi_dp / t)`: splitting a chi_dp-fold cover's slots into
/// blocks of size at most t, some block colors its proportional share.
pub fn ceiling_bound(n: usize, chi_dp: usize, t: usize) -> Result<Ratio> {
    if n < 1 || chi_dp < 1 {
        return Err(Error::InvalidArg("ceiling bound needs n, chi_dp >= 1".into()));
    }
    if t < 1 || t > chi_dp {
        return Err(Error::InvalidArg(format!(
            "fold {t} outside 1..={chi_dp}"
        )));
    }
    let q = Ratio::new(chi_dp as i64, t as i64).ceil();
    Ok(Ratio::new(n as i64, q))
}

#[derive(Clone, Debug)]
pub struct HalfValuesRow {
    pub t: usize,
    pub alpha: usize,
    /// Proportional share `t * n / chi_dp` the fold must reach.
    pub threshold: Ratio,
    pub satisfies: bool,
}

#[derive(Debug)]
pub struct HalfValuesReport {
    pub n: usize,
    pub chi_dp: usize,
    pub rows: Vec<HalfValuesRow>,
    pub satisfying: usize,
    /// At least half of the folds in 1..chi_dp must satisfy, rounded up.
    pub required: usize,
    /// For every fold t, t or chi_dp - t satisfies.
    pub pair_disjunction_holds: bool,
}

impl HalfValuesReport {
    pub fn guarantee_met(&self) -> bool {
        self.satisfying >= self.required && self.pair_disjunction_holds
    }
}

/// Exact per-fold proportionality verdicts over 1..chi_dp, with the
/// half-count guarantee and the complementary-pair disjunction.
pub fn half_values_report(g: &Graph, budget: &Budget) -> Result<HalfValuesReport> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    let chi_dp = transversal::chi_dp_inner(g, &mut meter)?;
    let n = g.n();
    let mut rows = Vec::new();
    for t in 1..chi_dp {
        let alpha = alpha_auto(g, t, &mut meter)?.value;
        let satisfies = alpha as i64 * chi_dp as i64 >= t as i64 * n as i64;
        rows.push(HalfValuesRow {
            t,
            alpha,
            threshold: Ratio::new(t as i64 * n as i64, chi_dp as i64),
            satisfies,
        });
    }
    let satisfying = rows.iter().filter(|r| r.satisfies).count();
    let required = chi_dp / 2;
    // For t in 1..chi_dp the complement chi_dp - t is also in 1..chi_dp.
    let pair_disjunction_holds = rows
        .iter()
        .all(|r| r.satisfies || rows[chi_dp - r.t - 1].satisfies);
    Ok(HalfValuesReport {
        n,
        chi_dp,
        rows,
        satisfying,
        required,
        pair_disjunction_holds,
    })
}

#[derive(Clone, Debug)]
pub struct SubadditivityCheck {
    pub t: usize,
    pub alpha_t: usize,
    /// (fold, exact value) per part of the partition.
    pub parts: Vec<(usize, usize)>,
    pub holds: bool,
}

/// `alpha_t <= sum of alpha_ti` over the given fold partition; gluing one
/// worst cover per part builds a t-fold cover witnessing the inequality.
pub fn subadditivity_check(
    g: &Graph,
    partition: &[usize],
    budget: &Budget,
) -> Result<SubadditivityCheck> {
    if partition.is_empty() || partition.iter().any(|&t| t == 0) {
        return Err(Error::InvalidArg("partition needs positive folds".into()));
    }
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    let t: usize = partition.iter().sum();
    let alpha_t = alpha_auto(g, t, &mut meter)?.value;
    let mut parts = Vec::with_capacity(partition.len());
    for &ti in partition {
        parts.push((ti, alpha_auto(g, ti, &mut meter)?.value));
    }
    let sum: usize = parts.iter().map(|&(_, a)| a).sum();
    Ok(SubadditivityCheck {
        t,
        alpha_t,
        parts,
        holds: alpha_t <= sum,
    })
}

#[derive(Clone, Debug)]
pub struct NamedBound {
    pub name: &'static str,
    pub value: Ratio,
    pub satisfied: bool,
}

#[derive(Clone, Debug)]
pub struct BoundRow {
    pub t: usize,
    pub alpha: usize,
    pub bounds: Vec<NamedBound>,
}

#[derive(Debug)]
pub struct BoundReport {
    pub n: usize,
    pub chi_dp: usize,
    pub rows: Vec<BoundRow>,
}

/// Exact values for every fold up to chi_dp next to the lower bounds they
/// must dominate; "proportional-share" is the niceness threshold, which an
/// exact value may legitimately miss.
pub fn bound_report(g: &Graph, budget: &Budget) -> Result<BoundReport> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    let chi_dp = transversal::chi_dp_inner(g, &mut meter)?;
    let n = g.n();
    let mut rows = Vec::with_capacity(chi_dp);
    for t in 1..=chi_dp {
        let alpha = if t == chi_dp {
            n
        } else {
            alpha_auto(g, t, &mut meter)?.value
        };
        let value = Ratio::from_int(alpha as i64);
        let ceiling = ceiling_bound(n, chi_dp, t)?;
        let proportional = Ratio::new(t as i64 * n as i64, chi_dp as i64);
        rows.push(BoundRow {
            t,
            alpha,
            bounds: vec![
                NamedBound {
                    name: "ceiling",
                    satisfied: value >= ceiling,
                    value: ceiling,
                },
                NamedBound {
                    name: "proportional-share",
                    satisfied: value >= proportional,
                    value: proportional,
                },
            ],
        });
    }
    Ok(BoundReport { n, chi_dp, rows })
}
