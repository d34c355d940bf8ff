//! The 2-fold case in its compact form: a cover is a swap/keep bit per
//! edge, a full transversal is a parity labelling, and existence reduces to
//! cycle parity checks solvable by union-find.

use crate::budget::{Budget, Meter};
use crate::cover::{Cover, CoverEnumeration};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subsets::combinations;
use crate::transversal::{self, AlphaCertificate, Transversal};

/// One bit per edge, in edge order: 0 keeps slots aligned, 1 swaps them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistAssignment {
    base: Graph,
    bits: Vec<u8>,
}

impl TwistAssignment {
    pub fn new(base: Graph, bits: Vec<u8>) -> Result<Self> {
        if bits.len() != base.edges().len() {
            return Err(Error::InvalidArg(format!(
                "{} twist bits for {} edges",
                bits.len(),
                base.edges().len()
            )));
        }
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidArg(format!("twist bit {b} is not 0 or 1")));
        }
        Ok(TwistAssignment { base, bits })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn bit(&self, e: usize) -> u8 {
        self.bits[e]
    }

    /// (bit sum mod 2, length mod 2) along a closed vertex walk.  A full
    /// assignment on the cycle exists exactly when the two parities agree.
    pub fn cycle_parity_sum(&self, cycle: &[usize]) -> Result<(u8, u8)> {
        if cycle.len() < 3 {
            return Err(Error::NotACycle(format!(
                "{} vertices is too short",
                cycle.len()
            )));
        }
        let mut sum = 0u32;
        for i in 0..cycle.len() {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            let e = self
                .base
                .edge_index(u, v)
                .ok_or_else(|| Error::NotACycle(format!("({u}, {v}) is not an edge")))?;
            sum += self.bits[e] as u32;
        }
        Ok(((sum % 2) as u8, (cycle.len() % 2) as u8))
    }
}

/// Reads the swap bits off a 2-fold perfect cover.
pub fn cover_to_twist(cover: &Cover) -> Result<TwistAssignment> {
    if cover.fold() != 2 {
        return Err(Error::Unsupported(format!(
            "twist form needs fold 2, got {}",
            cover.fold()
        )));
    }
    if !cover.is_perfect() {
        return Err(Error::Unsupported("twist form needs perfect matchings".into()));
    }
    let bits = (0..cover.base().edges().len())
        .map(|e| if cover.matching(e)[0] == Some(1) { 1 } else { 0 })
        .collect();
    TwistAssignment::new(cover.base().clone(), bits)
}

pub fn twist_to_cover(tw: &TwistAssignment) -> Cover {
    let matchings = tw
        .bits
        .iter()
        .map(|&b| {
            if b == 1 {
                vec![Some(1), Some(0)]
            } else {
                vec![Some(0), Some(1)]
            }
        })
        .collect();
    Cover::new(tw.base.clone(), 2, matchings).expect("bits came from a valid cover shape")
}

/// Why a twist admits no full transversal: a cycle whose bit-sum parity
/// disagrees with its length parity.
#[derive(Clone, Debug)]
pub struct OddCycleObstruction {
    pub cycle: Vec<usize>,
    pub twist_parity: u8,
    pub length_parity: u8,
}

#[derive(Clone, Debug)]
pub enum TwistVerdict {
    Feasible(Transversal),
    Infeasible(OddCycleObstruction),
}

impl TwistVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, TwistVerdict::Feasible(_))
    }
}

/// Union-find over vertices with a parity offset to the root, plus the
/// forest of merge edges so an inconsistent edge closes to a concrete
/// cycle.
struct ParityUf {
    parent: Vec<usize>,
    /// Parity of the path from the node to its parent pointer.
    to_parent: Vec<u8>,
    forest: Vec<Vec<usize>>,
}

impl ParityUf {
    fn new(n: usize) -> Self {
        ParityUf {
            parent: (0..n).collect(),
            to_parent: vec![0; n],
            forest: vec![Vec::new(); n],
        }
    }

    /// Returns (root, parity of v relative to root), compressing paths.
    fn find(&mut self, v: usize) -> (usize, u8) {
        if self.parent[v] == v {
            return (v, 0);
        }
        let (root, p) = self.find(self.parent[v]);
        self.parent[v] = root;
        self.to_parent[v] ^= p;
        (root, self.to_parent[v])
    }

    /// Requires parity(u) xor parity(v) == want.  False on contradiction.
    fn union(&mut self, u: usize, v: usize, want: u8) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            return pu ^ pv == want;
        }
        self.parent[ru] = rv;
        self.to_parent[ru] = pu ^ pv ^ want;
        self.forest[u].push(v);
        self.forest[v].push(u);
        true
    }

    /// Path u..v through the merge forest (connected when this is called).
    fn forest_path(&self, u: usize, v: usize) -> Vec<usize> {
        let mut prev = vec![usize::MAX; self.parent.len()];
        let mut queue = std::collections::VecDeque::from([u]);
        prev[u] = u;
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in &self.forest[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = prev[x];
            path.push(x);
        }
        path.reverse();
        path
    }
}

/// Full-transversal existence for a twist, restricted to the vertex set
/// `within`.  A chosen pair across an edge must differ in slot exactly when
/// the edge keeps slots aligned, so slots propagate as parities.
pub fn feasible_on(tw: &TwistAssignment, within: VertexSet) -> Result<TwistVerdict> {
    let g = tw.base();
    if !within.is_subset_of(VertexSet::full(g.n())) {
        return Err(Error::InvalidArg("vertex set exceeds the graph".into()));
    }
    let mut uf = ParityUf::new(g.n());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !within.contains(u) || !within.contains(v) {
            continue;
        }
        let want = 1 ^ tw.bit(e);
        if !uf.union(u, v, want) {
            // The constraint path u..v in the merge forest closes with this
            // edge into a cycle of disagreeing parities.
            let cycle = uf.forest_path(u, v);
            debug_assert!(cycle.len() >= 3);
            let (twist_parity, length_parity) = tw.cycle_parity_sum(&cycle)?;
            debug_assert_ne!(twist_parity, length_parity);
            return Ok(TwistVerdict::Infeasible(OddCycleObstruction {
                cycle,
                twist_parity,
                length_parity,
            }));
        }
    }
    let mut slots = vec![None; g.n()];
    for v in within.iter() {
        let (_, p) = uf.find(v);
        slots[v] = Some(p);
    }
    Ok(TwistVerdict::Feasible(Transversal { slots }))
}

pub fn feasible(tw: &TwistAssignment) -> Result<TwistVerdict> {
    feasible_on(tw, VertexSet::full(tw.base().n()))
}

/// Feasible set built by deleting one vertex per obstruction cycle found;
/// its size is a quick lower bound for the subset search.
fn greedy_feasible_set(tw: &TwistAssignment, meter: &mut Meter) -> Result<VertexSet> {
    let mut s = VertexSet::full(tw.base().n());
    loop {
        meter.charge_nodes(1)?;
        match feasible_on(tw, s)? {
            TwistVerdict::Feasible(_) => return Ok(s),
            TwistVerdict::Infeasible(obs) => {
                let v = *obs.cycle.iter().min().expect("cycle is nonempty");
                s.remove(v);
            }
        }
    }
}

fn exists_feasible_of_size(tw: &TwistAssignment, size: usize, meter: &mut Meter) -> Result<bool> {
    let n = tw.base().n();
    for mask in combinations(n, size) {
        meter.charge_nodes(1)?;
        if feasible_on(tw, VertexSet::from_bits(mask))?.is_feasible() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Largest vertex set the twist colors fully; at this fold that is the
/// maximum partial transversal.  Scans sizes downward, stopping at the
/// greedy bound, inside each size in subset-lexicographic order.
pub fn max_partial_twist(
    tw: &TwistAssignment,
    budget: &Budget,
) -> Result<(usize, VertexSet, Transversal)> {
    let mut meter = Meter::new(budget);
    meter.check_size(tw.base().n())?;
    max_partial_twist_inner(tw, &mut meter)
}

fn max_partial_twist_inner(
    tw: &TwistAssignment,
    meter: &mut Meter,
) -> Result<(usize, VertexSet, Transversal)> {
    let n = tw.base().n();
    let greedy = greedy_feasible_set(tw, meter)?;
    for size in (greedy.len() + 1..=n).rev() {
        for mask in combinations(n, size) {
            meter.charge_nodes(1)?;
            let s = VertexSet::from_bits(mask);
            if let TwistVerdict::Feasible(tr) = feasible_on(tw, s)? {
                return Ok((size, s, tr));
            }
        }
    }
    match feasible_on(tw, greedy)? {
        TwistVerdict::Feasible(tr) => Ok((greedy.len(), greedy, tr)),
        TwistVerdict::Infeasible(_) => unreachable!("greedy set is feasible by construction"),
    }
}

/// `alpha_t_dp` at fold 2 through parity space instead of the generic
/// backtracker.  Cover indices agree with the generic enumeration, so the
/// two paths return interchangeable certificates.
pub fn alpha_2_dp_fast(g: &Graph, budget: &Budget) -> Result<AlphaCertificate> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    // Same lower bound the generic path uses at this fold.
    let hint = if g.n() <= 16 {
        Some(transversal::max_low_col_inner(g, 2, &mut meter)?.0)
    } else {
        None
    };
    let en = CoverEnumeration::new_unbounded(g, 2)?;
    let total = en.total();
    let mut best: Option<(usize, u128)> = None;
    let mut examined: u64 = 0;
    let mut k: u128 = 0;
    while k < total {
        meter.charge_cover()?;
        examined += 1;
        let tw = cover_to_twist(&en.cover_at(k))?;
        match best {
            None => {
                let (value, _, _) = max_partial_twist_inner(&tw, &mut meter)?;
                best = Some((value, k));
            }
            Some((min, _)) => {
                // The cover improves only if no feasible set of size `min`
                // exists; then its exact value lies in greedy..min.
                let glb = greedy_feasible_set(&tw, &mut meter)?.len();
                if glb < min && !exists_feasible_of_size(&tw, min, &mut meter)? {
                    let mut value = glb;
                    for size in (glb + 1..min).rev() {
                        if exists_feasible_of_size(&tw, size, &mut meter)? {
                            value = size;
                            break;
                        }
                    }
                    best = Some((value, k));
                }
            }
        }
        if let (Some(lb), Some((min, _))) = (hint, best) {
            if min <= lb {
                debug_assert_eq!(min, lb, "hint must be a sound lower bound");
                break;
            }
        }
        k += 1;
    }
    let (value, cover_index) = best.expect("at least one cover");
    let worst_cover = en.cover_at(cover_index);
    let tw = cover_to_twist(&worst_cover)?;
    let (v, _, witness) = max_partial_twist_inner(&tw, &mut meter)?;
    debug_assert_eq!(v, value);
    Ok(AlphaCertificate {
        value,
        cover_index,
        covers_total: total,
        covers_examined: examined,
        worst_cover,
        witness,
    })
}
