//! Exact classical invariants, each by explicit search against the budget
//! meter.  These double as independent oracles for the cover solvers.

use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::subsets::combinations;

/// Largest independent set, with the lexicographically least maximum set as
/// witness.
pub fn independence_number(g: &Graph, budget: &Budget) -> Result<(usize, VertexSet)> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    independence_number_inner(g, &mut meter)
}

pub(crate) fn independence_number_inner(
    g: &Graph,
    meter: &mut Meter,
) -> Result<(usize, VertexSet)> {
    let alpha = mis_size(g, g.vertices().bits(), meter)?;
    // Lexicographically least witness: keep a vertex exactly when some
    // maximum independent set extends the kept prefix through it.
    let mut chosen = VertexSet::EMPTY;
    let mut cand = g.vertices();
    for v in 0..g.n() {
        if chosen.len() == alpha {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        let rest = cand.without(v).minus(VertexSet::from_bits(g.adj_mask(v)));
        if chosen.len() + 1 + mis_size(g, rest.bits(), meter)? == alpha {
            chosen.insert(v);
            cand = rest;
        } else {
            cand.remove(v);
        }
    }
    debug_assert_eq!(chosen.len(), alpha);
    Ok((alpha, chosen))
}

fn mis_size(g: &Graph, cand: u64, meter: &mut Meter) -> Result<usize> {
    let mut best = 0;
    mis_go(g, cand, 0, &mut best, meter)?;
    Ok(best)
}

fn mis_go(g: &Graph, cand: u64, size: usize, best: &mut usize, meter: &mut Meter) -> Result<()> {
    meter.charge_nodes(1)?;
    if size + cand.count_ones() as usize <= *best {
        return Ok(());
    }
    if cand == 0 {
        *best = size;
        return Ok(());
    }
    // Branch on the highest-degree candidate: include it or drop it.
    let v = VertexSet::from_bits(cand)
        .iter()
        .max_by_key(|&v| ((g.adj_mask(v) & cand).count_ones(), usize::MAX - v))
        .unwrap();
    mis_go(g, cand & !g.adj_mask(v) & !(1 << v), size + 1, best, meter)?;
    mis_go(g, cand & !(1 << v), size, best, meter)
}

pub fn clique_number(g: &Graph, budget: &Budget) -> Result<usize> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    clique_number_inner(g, &mut meter)
}

pub(crate) fn clique_number_inner(g: &Graph, meter: &mut Meter) -> Result<usize> {
    mis_size(&g.complement(), g.vertices().bits(), meter)
}

/// Exact chromatic number: clique lower bound, greedy upper bound, then
/// k-colorability tests in between.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    chromatic_number_inner(g, &mut meter)
}

pub(crate) fn chromatic_number_inner(g: &Graph, meter: &mut Meter) -> Result<usize> {
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let lb = clique_number_inner(g, meter)?;
    let ub = greedy_coloring_bound(g);
    for k in lb..ub {
        if colorable_with(g, g.vertices(), k, meter)? {
            return Ok(k);
        }
    }
    Ok(ub)
}

fn greedy_coloring_bound(g: &Graph) -> usize {
    // Color in reverse peeling order; each vertex sees at most `degeneracy`
    // colored neighbors.
    let (order, _) = g.degeneracy();
    let mut color = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in order.iter().rev() {
        let mut taken = 0u64;
        for w in g.neighbors(v) {
            if color[w] != usize::MAX {
                taken |= 1 << color[w];
            }
        }
        let c = (0..).find(|&c| taken >> c & 1 == 0).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Can the vertices of `within` be properly colored with `k` colors?
/// Branches in degree-descending order with the fresh-color symmetry cap.
pub(crate) fn colorable_with(
    g: &Graph,
    within: VertexSet,
    k: usize,
    meter: &mut Meter,
) -> Result<bool> {
    if k == 0 {
        return Ok(within.is_empty());
    }
    let mut order: Vec<usize> = within.to_vec();
    order.sort_by_key(|&v| (usize::MAX - (g.adj_mask(v) & within.bits()).count_ones() as usize, v));
    let mut color = vec![usize::MAX; g.n()];
    color_go(g, &order, 0, k, 0, &mut color, meter)
}

fn color_go(
    g: &Graph,
    order: &[usize],
    pos: usize,
    k: usize,
    used: usize,
    color: &mut Vec<usize>,
    meter: &mut Meter,
) -> Result<bool> {
    meter.charge_nodes(1)?;
    if pos == order.len() {
        return Ok(true);
    }
    let v = order[pos];
    // Trying one fresh color is enough: the rest are symmetric.
    let limit = k.min(used + 1);
    for c in 0..limit {
        if g.neighbors(v).any(|w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if color_go(g, order, pos + 1, k, used.max(c + 1), color, meter)? {
            color[v] = usize::MAX;
            return Ok(true);
        }
        color[v] = usize::MAX;
    }
    Ok(false)
}

/// Largest vertex set whose induced subgraph is `t`-colorable (the classical
/// partial `t`-chromatic count).
pub fn partial_t_chromatic(g: &Graph, t: usize, budget: &Budget) -> Result<usize> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    if t == 0 {
        return Ok(0);
    }
    for size in (1..=g.n()).rev() {
        for mask in combinations(g.n(), size) {
            meter.charge_nodes(1)?;
            if colorable_with(g, VertexSet::from_bits(mask), t, &mut meter)? {
                return Ok(size);
            }
        }
    }
    unreachable!("single vertices are always 1-colorable")
}

/// Degeneracy plus one.
pub fn coloring_number(g: &Graph) -> usize {
    g.degeneracy().1 + 1
}

/// Minimum feedback vertex set: fewest vertices whose removal leaves a
/// forest.  Witness is the lexicographically least optimal set.
pub fn feedback_vertex_number(g: &Graph, budget: &Budget) -> Result<(usize, VertexSet)> {
    let mut meter = Meter::new(budget);
    meter.check_size(g.n())?;
    feedback_vertex_number_inner(g, &mut meter)
}

pub(crate) fn feedback_vertex_number_inner(
    g: &Graph,
    meter: &mut Meter,
) -> Result<(usize, VertexSet)> {
    for k in 0..=g.n() {
        for mask in combinations(g.n(), k) {
            meter.charge_nodes(1)?;
            let s = VertexSet::from_bits(mask);
            if g.is_acyclic_within(g.vertices().minus(s)) {
                return Ok((k, s));
            }
        }
    }
    unreachable!("removing every vertex leaves the empty forest")
}

/// Chordality verdict with a certificate either way: a perfect elimination
/// ordering, or a chordless cycle of length at least four.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalResult {
    Chordal { elimination_order: Vec<usize> },
    NotChordal { chordless_cycle: Vec<usize> },
}

impl ChordalResult {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalResult::Chordal { .. })
    }
}

/// Decides chordality by hunting for a chordless cycle directly; when none
/// exists the lex-BFS ordering is returned as the elimination certificate.
pub fn is_chordal(g: &Graph) -> ChordalResult {
    if let Some(cycle) = find_chordless_cycle(g) {
        return ChordalResult::NotChordal { chordless_cycle: cycle };
    }
    let order = lex_bfs(g);
    let elimination_order: Vec<usize> = order.into_iter().rev().collect();
    debug_assert!(is_perfect_elimination_order(g, &elimination_order));
    ChordalResult::Chordal { elimination_order }
}

/// Every cycle of length >= 4 without a chord arises, for some vertex `v`
/// and nonadjacent neighbors `x, y`, as `v` plus a shortest x-y path that
/// avoids the rest of `N[v]`; shortest paths are induced, so scanning those
/// triples finds a chordless cycle exactly when one exists.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let forbidden = VertexSet::from_bits(g.adj_mask(v))
                    .with(v)
                    .without(x)
                    .without(y);
                let allowed = g.vertices().minus(forbidden);
                if let Some(path) = shortest_path_within(g, x, y, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    debug_assert!(cycle.len() >= 4);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path_within(g: &Graph, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::single(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in VertexSet::from_bits(g.adj_mask(v)).intersect(allowed).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| label[a].cmp(&label[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                label[w].push(n - step);
            }
        }
    }
    order
}

/// Checks that for each vertex, its neighbors occurring later in the order
/// form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    if pos.iter().any(|&p| p == usize::MAX) {
        return false;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        for (i, &x) in later.iter().enumerate() {
            for &y in &later[i + 1..] {
                if !g.has_edge(x, y) {
                    return false;
                }
            }
        }
    }
    true
}
