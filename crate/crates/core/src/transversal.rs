//! Maximum partial transversals of covers, and the worst-cover invariants
//! built from them: `alpha_t_dp`, `chi_dp`, and the partial-niceness verdict.

use crate::budget::{Budget, Meter};
use crate::cover::{Cover, CoverEnumeration};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::invariants;
use crate::rational::Ratio;
use crate::subsets::combinations;
use serde::{Deserialize, Serialize};

/// A choice of at most one slot per base vertex, independent in the cover
/// graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Transversal {
    pub slots: Vec<Option<u8>>,
}

impl Transversal {
    pub fn empty(n: usize) -> Self {
        Transversal { slots: vec![None; n] }
    }

    pub fn size(&self) -> usize {
        self.slots.iter().flatten().count()
    }

    pub fn support(&self) -> VertexSet {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.map(|_| v))
            .collect()
    }

    /// Independent validation against the cover alone: slot ranges and, for
    /// every edge with both endpoints chosen, non-linkage of the chosen pair.
    pub fn is_valid_for(&self, cover: &Cover) -> bool {
        if self.slots.len() != cover.base().n() {
            return false;
        }
        if self
            .slots
            .iter()
            .flatten()
            .any(|&s| s as usize >= cover.fold())
        {
            return false;
        }
        for (e, &(u, v)) in cover.base().edges().iter().enumerate() {
            if let (Some(su), Some(sv)) = (self.slots[u], self.slots[v]) {
                if cover.matching(e)[su as usize] == Some(sv) {
                    return false;
                }
            }
        }
        true
    }
}

struct Solver<'a> {
    cover: &'a Cover,
    order: Vec<usize>,
    /// Per vertex: (neighbor, edge index, vertex is the stored lower endpoint).
    nbrs: Vec<Vec<(usize, usize, bool)>>,
    slots: Vec<Option<u8>>,
    size: usize,
    best: usize,
    best_slots: Vec<Option<u8>>,
    /// Once `best` reaches this, the search may stop with a lower bound.
    stop_at: Option<usize>,
    stopped: bool,
}

impl<'a> Solver<'a> {
    fn new(cover: &'a Cover, stop_at: Option<usize>) -> Self {
        let g = cover.base();
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
        let mut nbrs = vec![Vec::new(); n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            nbrs[u].push((v, e, true));
            nbrs[v].push((u, e, false));
        }
        Solver {
            cover,
            order,
            nbrs,
            slots: vec![None; n],
            size: 0,
            best: 0,
            best_slots: vec![None; n],
            stop_at,
            stopped: false,
        }
    }

    fn linked(&self, v: usize, slot: u8) -> bool {
        for &(u, e, v_is_lower) in &self.nbrs[v] {
            if let Some(su) = self.slots[u] {
                let m = self.cover.matching(e);
                let clash = if v_is_lower {
                    m[slot as usize] == Some(su)
                } else {
                    m[su as usize] == Some(slot)
                };
                if clash {
                    return true;
                }
            }
        }
        false
    }

    fn run(&mut self, meter: &mut Meter) -> Result<()> {
        self.go(0, meter)
    }

    fn go(&mut self, depth: usize, meter: &mut Meter) -> Result<()> {
        meter.charge_nodes(1)?;
        if self.stopped {
            return Ok(());
        }
        let n = self.order.len();
        if self.size + (n - depth) <= self.best {
            return Ok(());
        }
        if depth == n {
            if self.size > self.best {
                self.best = self.size;
                self.best_slots = self.slots.clone();
                if let Some(stop) = self.stop_at {
                    if self.best >= stop {
                        self.stopped = true;
                    }
                }
            }
            return Ok(());
        }
        let v = self.order[depth];
        for slot in 0..self.cover.fold() as u8 {
            if self.linked(v, slot) {
                continue;
            }
            self.slots[v] = Some(slot);
            self.size += 1;
            self.go(depth + 1, meter)?;
            self.size -= 1;
            self.slots[v] = None;
            if self.stopped {
                return Ok(());
            }
        }
        // Leaving the vertex uncolored comes last.
        self.go(depth + 1, meter)
    }
}

/// Largest partial transversal of one cover, with a deterministic witness
/// (fixed branch order, strict improvement only).
pub fn max_transversal(cover: &Cover, budget: &Budget) -> Result<(usize, Transversal)> {
    let mut meter = Meter::new(budget);
    meter.check_size(cover.base().n())?;
    max_transversal_inner(cover, &mut meter)
}

pub(crate) fn max_transversal_inner(
    cover: &Cover,
    meter: &mut Meter,
) -> Result<(usize, Transversal)> {
    let mut s = Solver::new(cover, None);
    s.run(meter)?;
    Ok((s.best, Transversal { slots: s.best_slots }))
}

/// Either the exact maximum (when below `stop_at`) or proof it is at least
/// `stop_at`.
fn max_transversal_bounded(
    cover: &Cover,
    stop_at: usize,
    meter: &mut Meter,
) -> Result<BoundedMax> {
    let mut s = Solver::new(cover, Some(stop_at));
    s.run(meter)?;
    if s.stopped {
        Ok(BoundedMax::AtLeast)
    } else {
        Ok(BoundedMax::Exact(s.best, Transversal { slots: s.best_slots }))
    }
}

enum BoundedMax {
    Exact(usize, Transversal),
    AtLeast,
}

/// Full transversal existence for one cover (backtracking without the
/// uncolored branch).
pub fn exists_full_transversal(cover: &Cover, budget: &Budget) -> Result<Option<Transversal>> {
    let mut meter = Meter::new(budget);
    meter.check_size(cover.base().n())?;
    exists_full_inner(cover, &mut meter)
}

pub(crate) fn exists_full_inner(cover: &Cover, meter: &mut Meter) -> Result<Option<Transversal>> {
    fn go(s: &mut Solver, depth: usize, meter: &mut Meter) -> Result<bool> {
        meter.charge_nodes(1)?;
        if depth == s.order.len() {
            return Ok(true);
        }
        let v = s.order[depth];
        for slot in 0..s.cover.fold() as u8 {
            if s.linked(v, slot) {
                continue;
            }
            s.slots[v] = Some(slot);
            if go(s, depth + 1, meter)? {
                return Ok(true);
            }
            s.slots[v] = None;
        }
        Ok(false)
    }
    let mut s = Solver::new(cover, None);
    if go(&mut s, 0, meter)? {
        Ok(Some(Transversal { slots: s.slots }))
    } else {
        Ok(None)
    }
}

/// Worst cover over the whole enumeration, with everything needed to
/// re-check the claim.
#[derive(Clone, Debug)]
pub struct AlphaCertificate {
    pub value: usize,
    pub cover_index: u128,
    pub covers_total: u128,
    pub covers_examined: u64,
    pub worst_cover: Cover,
    pub witness: Transversal,
}

impl AlphaCertificate {
    /// Re-derives the certificate's own claims: the witness is valid and of
    /// the stated size, and the stated cover admits nothing larger.
    pub fn recheck(&self, budget: &Budget) -> Result<bool> {
        if !self.witness.is_valid_for(&self.worst_cover) || self.witness.size() != self.value {
            return Ok(false);
        }
        let (max, _) = max_transversal(&self.worst_cover, budget)?;
        Ok(max == self.value)
    }

    pub fn to_json(&self) -> String {
        let dto = CertificateDto {
            value: self.value,
            cover_index: self.cover_index.to_string(),
            covers_total: self.covers_total.to_string(),
            covers_examined: self.covers_examined,
            worst_cover: serde_json::from_str(&self.worst_cover.to_json()).expect("cover json"),
            witness: self.witness.slots.clone(),
        };
        serde_json::to_string(&dto).expect("certificate serializes")
    }
}

#[derive(Serialize)]
struct CertificateDto {
    value: usize,
    cover_index: String,
    covers_total: String,
    covers_examined: u64,
    worst_cover: serde_json::Value,
    witness: Vec<Option<u8>>,
}

/// Largest induced subgraph whose coloring number is at most `t`.  Greedy
/// coloring of such a subgraph succeeds in every `t`-fold cover, so its
/// order is a sound lower bound for `alpha_t_dp`; at `t = 2` it equals
/// `n - feedback_vertex_number`.
pub fn max_low_coloring_number_subgraph(
    g: &Graph,
    t: usize,
    budget: &Budget,
) -> Result<(usize, VertexSet)> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    max_low_col_inner(g, t, &mut meter)
}

pub(crate) fn max_low_col_inner(
    g: &Graph,
    t: usize,
    meter: &mut Meter,
) -> Result<(usize, VertexSet)> {
    for size in (1..=g.n()).rev() {
        for mask in combinations(g.n(), size) {
            meter.charge_nodes(1)?;
            let s = VertexSet::from_bits(mask);
            if coloring_number_within(g, s) <= t {
                return Ok((size, s));
            }
        }
    }
    unreachable!("a single vertex has coloring number 1")
}

fn coloring_number_within(g: &Graph, s: VertexSet) -> usize {
    let mut remaining = s;
    let mut worst = 0;
    while let Some(v) = remaining
        .iter()
        .min_by_key(|&v| ((g.adj_mask(v) & remaining.bits()).count_ones(), v))
    {
        worst = worst.max((g.adj_mask(v) & remaining.bits()).count_ones() as usize);
        remaining.remove(v);
    }
    worst + 1
}

/// `alpha_t_dp` with the default lower-bound hook wired in.
pub fn alpha_t_dp(g: &Graph, t: usize, budget: &Budget) -> Result<AlphaCertificate> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    alpha_t_dp_auto(g, t, &mut meter)
}

pub(crate) fn alpha_t_dp_auto(g: &Graph, t: usize, meter: &mut Meter) -> Result<AlphaCertificate> {
    // The subgraph scan is exponential in n on its own; skip the hook when
    // it would cost more than it could save.
    let hint = if t >= 2 && g.n() <= 16 {
        Some(max_low_col_inner(g, t, meter)?.0)
    } else {
        None
    };
    alpha_t_dp_inner(g, t, hint, meter)
}

/// `alpha_t_dp` with an explicit lower-bound hint (`None` disables the
/// early exit; per-cover pruning against the running minimum still applies,
/// which never changes the result).
pub fn alpha_t_dp_with_hint(
    g: &Graph,
    t: usize,
    hint: Option<usize>,
    budget: &Budget,
) -> Result<AlphaCertificate> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    alpha_t_dp_inner(g, t, hint, &mut meter)
}

pub(crate) fn alpha_t_dp_inner(
    g: &Graph,
    t: usize,
    hint: Option<usize>,
    meter: &mut Meter,
) -> Result<AlphaCertificate> {
    let en = CoverEnumeration::new_unbounded(g, t)?;
    let total = en.total();
    let mut examined: u64 = 0;
    let mut best: Option<(usize, u128, Cover, Transversal)> = None;
    let mut k: u128 = 0;
    while k < total {
        meter.charge_cover()?;
        examined += 1;
        let cover = en.cover_at(k);
        match &best {
            None => {
                let (value, witness) = max_transversal_inner(&cover, meter)?;
                best = Some((value, k, cover, witness));
            }
            Some((min, ..)) => {
                if let BoundedMax::Exact(value, witness) =
                    max_transversal_bounded(&cover, *min, meter)?
                {
                    debug_assert!(value < *min);
                    best = Some((value, k, cover, witness));
                }
            }
        }
        if let (Some(lb), Some((min, ..))) = (hint, &best) {
            if *min <= lb {
                debug_assert_eq!(*min, lb, "hint must be a sound lower bound");
                break;
            }
        }
        k += 1;
    }
    let (value, cover_index, worst_cover, witness) = best.expect("at least one cover");
    Ok(AlphaCertificate {
        value,
        cover_index,
        covers_total: total,
        covers_examined: examined,
        worst_cover,
        witness,
    })
}

/// Minimum over a cover-index subrange, for split/parallel scans: returns
/// the smallest maximum-transversal value in `lo..hi` and the first index
/// attaining it.
pub fn alpha_t_dp_range(
    g: &Graph,
    t: usize,
    lo: u128,
    hi: u128,
    budget: &Budget,
) -> Result<Option<(usize, u128)>> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    let en = CoverEnumeration::new_unbounded(g, t)?;
    let mut best: Option<(usize, u128)> = None;
    for k in lo..hi.min(en.total()) {
        meter.charge_cover()?;
        let cover = en.cover_at(k);
        match best {
            None => {
                let (value, _) = max_transversal_inner(&cover, &mut meter)?;
                best = Some((value, k));
            }
            Some((min, _)) => {
                if let BoundedMax::Exact(value, _) =
                    max_transversal_bounded(&cover, min, &mut meter)?
                {
                    best = Some((value, k));
                }
            }
        }
    }
    Ok(best)
}

/// Least fold at which every cover admits a full transversal.  Searches
/// upward from the chromatic number; the coloring number always succeeds,
/// so it is returned without enumeration when reached.
pub fn chi_dp(g: &Graph, budget: &Budget) -> Result<usize> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    chi_dp_inner(g, &mut meter)
}

pub(crate) fn chi_dp_inner(g: &Graph, meter: &mut Meter) -> Result<usize> {
    let chi = invariants::chromatic_number_inner(g, meter)?;
    let col = crate::invariants::coloring_number(g);
    for t in chi..col {
        if all_covers_admit_full(g, t, meter)? {
            return Ok(t);
        }
    }
    Ok(col)
}

pub(crate) fn all_covers_admit_full(g: &Graph, t: usize, meter: &mut Meter) -> Result<bool> {
    let en = CoverEnumeration::new_unbounded(g, t)?;
    for k in 0..en.total() {
        meter.charge_cover()?;
        if exists_full_inner(&en.cover_at(k), meter)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of the niceness table: the proportionality test at one fold.
#[derive(Clone, Debug)]
pub struct NiceRow {
    pub t: usize,
    pub alpha: usize,
    /// `t * n / chi_dp`, the proportional share the fold must reach.
    pub threshold: Ratio,
    pub satisfied: bool,
}

#[derive(Debug)]
pub struct NiceReport {
    pub chi_dp: usize,
    pub rows: Vec<NiceRow>,
    /// Smallest failing fold with its worst cover, when not nice.
    pub failure: Option<(usize, AlphaCertificate)>,
}

impl NiceReport {
    pub fn is_nice(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exact proportionality verdict: `alpha_t_dp(g) * chi_dp(g) >= t * n` for
/// every fold `t` up to `chi_dp(g)`, compared in integers.
pub fn is_partially_dp_nice(g: &Graph, budget: &Budget) -> Result<NiceReport> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    let chi_dp = chi_dp_inner(g, &mut meter)?;
    let n = g.n();
    let mut rows = Vec::with_capacity(chi_dp);
    let mut failure = None;
    for t in 1..=chi_dp {
        let (alpha, cert) = if t == chi_dp {
            // Every cover at this fold admits a full transversal; that is
            // what chi_dp just established.
            (n, None)
        } else {
            let cert = alpha_t_dp_auto(g, t, &mut meter)?;
            (cert.value, Some(cert))
        };
        let satisfied = alpha as i64 * chi_dp as i64 >= t as i64 * n as i64;
        rows.push(NiceRow {
            t,
            alpha,
            threshold: Ratio::new(t as i64 * n as i64, chi_dp as i64),
            satisfied,
        });
        if !satisfied && failure.is_none() {
            failure = Some((t, cert.expect("failing fold is below chi_dp")));
        }
    }
    Ok(NiceReport { chi_dp, rows, failure })
}

/// Largest induced subgraph certified fully colorable at fold `t`, so its
/// order bounds `alpha_t_dp` from below.  Certification is by coloring
/// number, else by a bounded enumeration of the subgraph's own covers;
/// subsets whose certification would exceed the internal allowance are
/// skipped, so the result is sound but possibly smaller than the true
/// maximum.
pub fn colorable_subgraph_order(g: &Graph, t: usize, budget: &Budget) -> Result<usize> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    colorable_subgraph_inner(g, t, &mut meter)
}

pub(crate) fn colorable_subgraph_inner(g: &Graph, t: usize, meter: &mut Meter) -> Result<usize> {
    let hook_budget = Budget::default()
        .with_max_nodes(2_000_000)
        .with_max_covers(20_000);
    for size in (1..=g.n()).rev() {
        for mask in combinations(g.n(), size) {
            meter.charge_nodes(1)?;
            let s = VertexSet::from_bits(mask);
            if coloring_number_within(g, s) <= t {
                return Ok(size);
            }
            let (sub, _) = g.induced(s)?;
            let mut hook = Meter::new(&hook_budget);
            if chi_dp_at_most(&sub, t, &mut hook) == Some(true) {
                return Ok(size);
            }
        }
    }
    unreachable!("a single vertex is fully colorable at any fold")
}

/// Decides `chi_dp(g) <= t` within the given meter, or gives up (None)
/// when the meter runs out.  Never wrong, sometimes silent.
fn chi_dp_at_most(g: &Graph, t: usize, meter: &mut Meter) -> Option<bool> {
    match invariants::chromatic_number_inner(g, meter) {
        Ok(chi) if chi > t => return Some(false),
        Ok(_) => {}
        Err(_) => return None,
    }
    if invariants::coloring_number(g) <= t {
        return Some(true);
    }
    all_covers_admit_full(g, t, meter).ok()
}

/// How a bounded niceness row was settled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceEvidence {
    /// Exact `alpha_t_dp` value.
    Exact(usize),
    /// A fully colorable induced subgraph of this order already met the
    /// threshold, so the enumeration was skipped; the exact value is at
    /// least this.
    SubgraphBound(usize),
}

#[derive(Clone, Debug)]
pub struct BoundedNiceRow {
    pub t: usize,
    pub evidence: NiceEvidence,
    pub threshold: Ratio,
    pub satisfied: bool,
}

#[derive(Debug)]
pub struct BoundedNiceReport {
    pub chi_dp: usize,
    pub rows: Vec<BoundedNiceRow>,
    /// Smallest failing fold with its worst cover, when not nice.
    pub failure: Option<(usize, AlphaCertificate)>,
}

impl BoundedNiceReport {
    pub fn failing_folds(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.satisfied).map(|r| r.t).collect()
    }

    pub fn is_nice(&self) -> bool {
        self.rows.iter().all(|r| r.satisfied)
    }
}

/// Niceness verdict that certifies folds by the subgraph order bound where
/// it already meets the threshold and enumerates exactly otherwise.  The
/// failing-fold set is still exact; only satisfied rows may carry a bound
/// instead of a value.  This keeps join towers tractable: joining with a
/// complete graph raises the fold range, but each fold below the top finds
/// a smaller join of the same shape as its colorable subgraph.
pub fn nice_verdict_bounded(g: &Graph, budget: &Budget) -> Result<BoundedNiceReport> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    let chi_dp = chi_dp_inner(g, &mut meter)?;
    let n = g.n() as i64;
    let mut rows = Vec::with_capacity(chi_dp);
    let mut failure = None;
    for t in 1..=chi_dp {
        let threshold = Ratio::new(t as i64 * n, chi_dp as i64);
        let row = if t == chi_dp {
            BoundedNiceRow {
                t,
                evidence: NiceEvidence::Exact(g.n()),
                threshold,
                satisfied: true,
            }
        } else {
            let lb = if g.n() <= 12 {
                colorable_subgraph_inner(g, t, &mut meter)?
            } else if g.n() <= 16 {
                max_low_col_inner(g, t, &mut meter)?.0
            } else {
                1
            };
            if lb as i64 * chi_dp as i64 >= t as i64 * n {
                BoundedNiceRow {
                    t,
                    evidence: NiceEvidence::SubgraphBound(lb),
                    threshold,
                    satisfied: true,
                }
            } else {
                let cert = alpha_t_dp_inner(g, t, Some(lb), &mut meter)?;
                let satisfied = cert.value as i64 * chi_dp as i64 >= t as i64 * n;
                let value = cert.value;
                if !satisfied && failure.is_none() {
                    failure = Some((t, cert));
                }
                BoundedNiceRow {
                    t,
                    evidence: NiceEvidence::Exact(value),
                    threshold,
                    satisfied,
                }
            }
        };
        rows.push(row);
    }
    Ok(BoundedNiceReport { chi_dp, rows, failure })
}
