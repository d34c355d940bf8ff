//! Covers of a graph: per-vertex slot lists plus per-edge matchings, with
//! gauge transformations, a canonical form, and indexed enumeration of all
//! canonical covers of a given fold.
//!
//! A gauge transformation permutes every vertex's slots independently; it
//! preserves all transversal structure.  Canonical covers carry the identity
//! matching on a fixed spanning forest (BFS from the smallest vertex of each
//! component, neighbors scanned in increasing order), so enumerating
//! `(t!)^(m - n + c)` canonical covers reaches every cover up to gauge.

use crate::budget::{Budget, Meter};
use crate::error::{CoverViolation, Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use serde::{Deserialize, Serialize};

/// Matching along one edge `(u, v)`: `m[i] = Some(j)` links slot `i` of `u`
/// to slot `j` of `v`.  `None` leaves the slot unmatched (partial matching).
pub type EdgeMatching = Vec<Option<u8>>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cover {
    base: Graph,
    fold: usize,
    matchings: Vec<EdgeMatching>,
}

impl Cover {
    /// Builds a cover, checking shape only (lengths and slot ranges); use
    /// [`Cover::validate`] for the matching axiom.
    pub fn new(base: Graph, fold: usize, matchings: Vec<EdgeMatching>) -> Result<Self> {
        if fold == 0 || fold > u8::MAX as usize {
            return Err(Error::InvalidArg(format!("fold {fold} out of range")));
        }
        if matchings.len() != base.edge_count() {
            return Err(Error::InvalidArg(format!(
                "{} matchings for {} edges",
                matchings.len(),
                base.edge_count()
            )));
        }
        for (e, m) in matchings.iter().enumerate() {
            if m.len() != fold {
                return Err(Error::InvalidArg(format!(
                    "matching {e} has {} entries for fold {fold}",
                    m.len()
                )));
            }
            if m.iter().flatten().any(|&j| j as usize >= fold) {
                return Err(Error::InvalidArg(format!("matching {e} has a slot >= {fold}")));
            }
        }
        Ok(Cover { base, fold, matchings })
    }

    /// The cover whose every matching is the identity permutation.
    pub fn identity(base: Graph, fold: usize) -> Self {
        let m = base.edge_count();
        let id: EdgeMatching = (0..fold as u8).map(Some).collect();
        Cover::new(base, fold, vec![id; m]).expect("identity cover is well formed")
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn fold(&self) -> usize {
        self.fold
    }

    pub fn matching(&self, edge_idx: usize) -> &EdgeMatching {
        &self.matchings[edge_idx]
    }

    pub fn matchings(&self) -> &[EdgeMatching] {
        &self.matchings
    }

    pub fn is_perfect(&self) -> bool {
        self.matchings.iter().all(|m| m.iter().all(Option::is_some))
    }

    /// Checks the matching axiom: every edge's links must be injective.
    /// The list-partition and list-clique axioms hold by construction.
    pub fn validate(&self) -> std::result::Result<(), CoverViolation> {
        for (e, m) in self.matchings.iter().enumerate() {
            let mut hit = vec![false; self.fold];
            for j in m.iter().flatten() {
                if hit[*j as usize] {
                    let (u, v) = self.base.edges()[e];
                    return Err(CoverViolation {
                        axiom: 3,
                        edge: Some((u, v)),
                        detail: format!("two slots of {u} link to slot {j} of {v}"),
                    });
                }
                hit[*j as usize] = true;
            }
        }
        Ok(())
    }

    /// The cover graph: node `v*fold + i` is slot `i` of vertex `v`; each
    /// list is a clique and each edge matching contributes its links.
    pub fn expand(&self) -> Result<CoverGraph> {
        let n = self.base.n();
        let t = self.fold;
        if n * t > MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "cover graph on {} nodes exceeds the {MAX_VERTICES}-node representation",
                n * t
            )));
        }
        let mut edges = Vec::new();
        for v in 0..n {
            for i in 0..t {
                for j in i + 1..t {
                    edges.push((v * t + i, v * t + j));
                }
            }
        }
        for (e, &(u, v)) in self.base.edges().iter().enumerate() {
            for (i, j) in self.matchings[e].iter().enumerate() {
                if let Some(j) = j {
                    edges.push((u * t + i, v * t + *j as usize));
                }
            }
        }
        Ok(CoverGraph {
            graph: Graph::new(n * t, edges)?,
            base_n: n,
            fold: t,
        })
    }

    /// Conjugates every matching by the per-vertex slot permutations:
    /// `m'(g_u(i)) = g_v(m(i))` along each edge `(u, v)`.
    pub fn apply_gauge(&self, gauge: &GaugeTransform) -> Result<Cover> {
        if gauge.perms.len() != self.base.n() || gauge.fold() != self.fold {
            return Err(Error::InvalidArg("gauge shape does not match cover".into()));
        }
        let mut matchings = Vec::with_capacity(self.matchings.len());
        for (e, &(u, v)) in self.base.edges().iter().enumerate() {
            let gu = &gauge.perms[u];
            let gv = &gauge.perms[v];
            let mut m: EdgeMatching = vec![None; self.fold];
            for (i, j) in self.matchings[e].iter().enumerate() {
                if let Some(j) = j {
                    m[gu[i] as usize] = Some(gv[*j as usize]);
                }
            }
            matchings.push(m);
        }
        Cover::new(self.base.clone(), self.fold, matchings)
    }

    /// Gauge-equivalent canonical form of a perfect cover: identity
    /// matchings on the spanning forest.  Also returns the gauge that maps
    /// this cover onto the canonical one.
    pub fn canonicalize(&self) -> Result<(Cover, GaugeTransform)> {
        if !self.is_perfect() {
            return Err(Error::Unsupported(
                "canonical form requires a perfect cover".into(),
            ));
        }
        let forest = spanning_forest(&self.base);
        let t = self.fold;
        let identity: Vec<u8> = (0..t as u8).collect();
        let mut perms: Vec<Option<Vec<u8>>> = vec![None; self.base.n()];
        for &v in &forest.bfs_order {
            match forest.parent[v] {
                None => perms[v] = Some(identity.clone()),
                Some((p, e)) => {
                    let gp = perms[p].clone().expect("BFS visits parents first");
                    // Matching oriented parent -> child.
                    let (a, _) = self.base.edges()[e];
                    let m_pc = if a == p {
                        self.matchings[e].clone()
                    } else {
                        invert(&self.matchings[e], t)
                    };
                    // Want g_c(m_pc(i)) = g_p(i), i.e. g_c = g_p o m_pc^-1.
                    let inv = invert(&m_pc, t);
                    let gc: Vec<u8> = (0..t).map(|i| gp[inv[i].unwrap() as usize]).collect();
                    perms[v] = Some(gc);
                }
            }
        }
        let gauge = GaugeTransform::new(perms.into_iter().map(Option::unwrap).collect())?;
        let canonical = self.apply_gauge(&gauge)?;
        debug_assert!(forest
            .in_forest
            .iter()
            .enumerate()
            .all(|(e, &in_f)| !in_f || is_identity(canonical.matching(e))));
        Ok((canonical, gauge))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CoverDto::from(self)).expect("cover serializes")
    }

    pub fn from_json(text: &str) -> Result<Cover> {
        let dto: CoverDto = serde_json::from_str(text)?;
        dto.try_into()
    }
}

fn invert(m: &EdgeMatching, fold: usize) -> EdgeMatching {
    let mut inv: EdgeMatching = vec![None; fold];
    for (i, j) in m.iter().enumerate() {
        if let Some(j) = j {
            inv[*j as usize] = Some(i as u8);
        }
    }
    inv
}

fn is_identity(m: &EdgeMatching) -> bool {
    m.iter().enumerate().all(|(i, j)| *j == Some(i as u8))
}

#[derive(Serialize, Deserialize)]
struct CoverDto {
    fold: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
    matchings: Vec<EdgeMatching>,
}

impl From<&Cover> for CoverDto {
    fn from(c: &Cover) -> Self {
        CoverDto {
            fold: c.fold,
            n: c.base.n(),
            edges: c.base.edges().to_vec(),
            matchings: c.matchings.clone(),
        }
    }
}

impl TryFrom<CoverDto> for Cover {
    type Error = Error;

    fn try_from(dto: CoverDto) -> Result<Cover> {
        let base = Graph::new(dto.n, dto.edges.iter().copied())?;
        if base.edges() != dto.edges.as_slice() {
            return Err(Error::InvalidArg(
                "cover edges must be listed sorted, matching the edge index order".into(),
            ));
        }
        Cover::new(base, dto.fold, dto.matchings)
    }
}

/// Expanded cover graph; `graph` is an ordinary [`Graph`] so every classical
/// solver applies to it unchanged.
#[derive(Clone, Debug)]
pub struct CoverGraph {
    pub graph: Graph,
    pub base_n: usize,
    pub fold: usize,
}

impl CoverGraph {
    pub fn node(&self, v: usize, slot: usize) -> usize {
        v * self.fold + slot
    }

    pub fn list(&self, v: usize) -> VertexSet {
        (0..self.fold).map(|i| self.node(v, i)).collect()
    }
}

/// Per-vertex slot permutations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaugeTransform {
    perms: Vec<Vec<u8>>,
}

impl GaugeTransform {
    pub fn new(perms: Vec<Vec<u8>>) -> Result<Self> {
        let Some(first) = perms.first() else {
            return Err(Error::InvalidArg("gauge needs at least one vertex".into()));
        };
        let t = first.len();
        for (v, p) in perms.iter().enumerate() {
            let mut hit = vec![false; t];
            if p.len() != t {
                return Err(Error::InvalidArg(format!("gauge at vertex {v} has wrong length")));
            }
            for &i in p {
                if (i as usize) >= t || hit[i as usize] {
                    return Err(Error::InvalidArg(format!(
                        "gauge at vertex {v} is not a permutation"
                    )));
                }
                hit[i as usize] = true;
            }
        }
        Ok(GaugeTransform { perms })
    }

    pub fn identity(n: usize, fold: usize) -> Self {
        GaugeTransform {
            perms: vec![(0..fold as u8).collect(); n],
        }
    }

    pub fn fold(&self) -> usize {
        self.perms.first().map_or(0, Vec::len)
    }

    pub fn perm(&self, v: usize) -> &[u8] {
        &self.perms[v]
    }

    pub fn is_identity(&self) -> bool {
        self.perms
            .iter()
            .all(|p| p.iter().enumerate().all(|(i, &j)| i as u8 == j))
    }
}

/// Spanning forest fixed for canonicalization: BFS from the smallest
/// unvisited vertex, neighbors in increasing order.
pub(crate) struct Forest {
    /// Per vertex: BFS parent and the edge index to it (roots: `None`).
    pub parent: Vec<Option<(usize, usize)>>,
    pub bfs_order: Vec<usize>,
    pub in_forest: Vec<bool>,
    /// Edge indices outside the forest, increasing.
    pub free: Vec<usize>,
}

pub(crate) fn spanning_forest(g: &Graph) -> Forest {
    let n = g.n();
    let mut parent = vec![None; n];
    let mut visited = vec![false; n];
    let mut bfs_order = Vec::with_capacity(n);
    let mut in_forest = vec![false; g.edge_count()];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        bfs_order.push(root);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    let e = g.edge_index(v, w).unwrap();
                    parent[w] = Some((v, e));
                    in_forest[e] = true;
                    bfs_order.push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    let free = (0..g.edge_count()).filter(|&e| !in_forest[e]).collect();
    Forest { parent, bfs_order, in_forest, free }
}

fn factorial(t: usize) -> u128 {
    (1..=t as u128).product()
}

/// Lexicographically ordered permutations of `0..t`; `perm_unrank(t, 0)` is
/// the identity.
fn perm_unrank(t: usize, mut rank: u128) -> Vec<u8> {
    let mut avail: Vec<u8> = (0..t as u8).collect();
    let mut out = Vec::with_capacity(t);
    for pos in (0..t).rev() {
        let f = factorial(pos);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(avail.remove(idx));
    }
    out
}

/// The canonical covers of `(g, fold)`, indexed `0..count`.  Index digits
/// run over the non-forest edges in increasing edge order, most significant
/// first, each digit a lexicographic permutation rank; index 0 is the
/// all-identity cover.  Any index subrange can be evaluated independently,
/// so scans parallelize by splitting the range and combining by minimum.
pub struct CoverEnumeration {
    base: Graph,
    fold: usize,
    free: Vec<usize>,
    total: u128,
}

impl CoverEnumeration {
    /// Checks `fold!^(free edges)` against the budget before anything is
    /// enumerated.
    pub fn new(g: &Graph, fold: usize, budget: &Budget) -> Result<Self> {
        let meter = Meter::new(budget);
        let en = CoverEnumeration::new_unbounded(g, fold)?;
        if en.total > meter.covers_limit() as u128 {
            return Err(Error::Budget {
                resource: crate::error::Resource::Covers,
                limit: meter.covers_limit(),
            });
        }
        Ok(en)
    }

    pub(crate) fn new_unbounded(g: &Graph, fold: usize) -> Result<Self> {
        if fold == 0 || fold > 20 {
            return Err(Error::InvalidArg(format!("fold {fold} out of range")));
        }
        let forest = spanning_forest(g);
        let per_edge = factorial(fold);
        let mut total: u128 = 1;
        for _ in &forest.free {
            total = total
                .checked_mul(per_edge)
                .ok_or(Error::Budget {
                    resource: crate::error::Resource::Covers,
                    limit: u64::MAX,
                })?;
        }
        Ok(CoverEnumeration {
            base: g.clone(),
            fold,
            free: forest.free,
            total,
        })
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn free_edges(&self) -> &[usize] {
        &self.free
    }

    pub fn cover_at(&self, index: u128) -> Cover {
        assert!(index < self.total, "cover index out of range");
        let t = self.fold;
        let id: EdgeMatching = (0..t as u8).map(Some).collect();
        let mut matchings = vec![id; self.base.edge_count()];
        let per_edge = factorial(t);
        let mut rest = index;
        let mut weight = self.total;
        for &e in &self.free {
            weight /= per_edge;
            let digit = rest / weight;
            rest %= weight;
            matchings[e] = perm_unrank(t, digit).into_iter().map(Some).collect();
        }
        Cover::new(self.base.clone(), t, matchings).expect("enumerated covers are well formed")
    }

    pub fn iter(&self) -> impl Iterator<Item = Cover> + '_ {
        (0..self.total).map(move |k| self.cover_at(k))
    }
}
