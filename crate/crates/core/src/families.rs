//! Named graph constructors with frozen vertex numbering, parameterized
//! families, a seeded chordal generator, and the `name[:arg]` spec parser
//! the CLI exposes.
//!
//! Frozen numbering tables:
//!   cube          x y z w x' y' z' w'  = 0..8; two 4-cycles x-y-z-w and
//!                 x'-y'-z'-w' plus the matching x-x', y-y', z-z', w-w'
//!   wagner        v1..v8 = 0..8; rim v1-v2-...-v8-v1 plus diameters v1v5,
//!                 v2v6, v3v7, v4v8
//!   gadget        u v x y z = 0..5; K4 on u,v,x,y with the edge xy
//!                 subdivided by z
//!   gstar blocks  block i occupies 5i..5i+5 as u v x y z; connector edges
//!                 z_i-u_{i+1}
//!   m graph       two gadget blocks 0..5 and 5..10 joined by z1-z2

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Ratio;

/// The subdivided edge yz of the gadget.  A single swap there is the worst
/// 2-fold cover of the block.
pub const GADGET_TWIST_EDGE: (usize, usize) = (3, 4);

pub fn q3() -> Graph {
    Graph::new(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .expect("cube is a valid graph")
}

pub fn q3_names() -> Vec<String> {
    ["x", "y", "z", "w", "x'", "y'", "z'", "w'"]
        .map(String::from)
        .to_vec()
}

pub fn wagner_v8() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend((0..4).map(|i| (i, i + 4)));
    Graph::new(8, edges).expect("wagner graph is valid")
}

pub fn wagner_names() -> Vec<String> {
    (1..=8).map(|i| format!("v{i}")).collect()
}

pub fn gadget_g() -> Graph {
    Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])
        .expect("gadget is a valid graph")
}

pub fn gadget_names() -> Vec<String> {
    ["u", "v", "x", "y", "z"].map(String::from).to_vec()
}

pub fn chain_gstar(blocks: usize) -> Result<Graph> {
    if blocks < 1 {
        return Err(Error::InvalidArg("chain needs at least one block".into()));
    }
    let mut edges = Vec::new();
    for b in 0..blocks {
        let o = 5 * b;
        edges.extend(
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
                .map(|(u, v)| (o + u, o + v)),
        );
        if b + 1 < blocks {
            edges.push((o + 4, o + 5));
        }
    }
    Graph::new(5 * blocks, edges)
}

pub fn gstar_names(blocks: usize) -> Vec<String> {
    (1..=blocks)
        .flat_map(|b| ["u", "v", "x", "y", "z"].map(|s| format!("{s}{b}")))
        .collect()
}

/// Per-block copies of the gadget's subdivided edge.
pub fn gstar_handles(blocks: usize) -> Vec<(usize, usize)> {
    (0..blocks).map(|b| (5 * b + 3, 5 * b + 4)).collect()
}

pub fn m_graph() -> Graph {
    let mut edges = Vec::new();
    for o in [0, 5] {
        edges.extend(
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
                .map(|(u, v)| (o + u, o + v)),
        );
    }
    edges.push((4, 9));
    Graph::new(10, edges).expect("m graph is valid")
}

pub fn m_names() -> Vec<String> {
    gstar_names(2)
}

/// Join with a complete graph: p new mutually adjacent vertices, each
/// adjacent to everything, taking the highest indices.
pub fn join_complete(g: &Graph, p: usize) -> Result<Graph> {
    let n = g.n() + p;
    let mut edges = g.edges().to_vec();
    for a in g.n()..n {
        for v in 0..a {
            edges.push((v, a));
        }
    }
    Graph::new(n, edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArg(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArg("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArg("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// K_{1,leaves} with the center at index 0.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)).collect::<Vec<_>>())
}

/// Rungs + rim on 2k vertices: cycle 0..2k plus chords (i, i+k).
pub fn mobius_ladder(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidArg(format!(
            "mobius ladder needs k >= 2 rungs, got {k}"
        )));
    }
    let n = 2 * k;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..k).map(|i| (i, i + k)));
    Graph::new(n, edges)
}

/// Linear congruential generator (Knuth's MMIX constants), drawing the high
/// 32 bits per step.  Fixed here so seeded inputs are reproducible across
/// implementations.
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.state >> 32) as u32
    }

    /// Uniform draw in 0..bound (bound >= 1), by multiply-shift.
    pub fn below(&mut self, bound: u32) -> u32 {
        ((self.next_u32() as u64 * bound as u64) >> 32) as u32
    }
}

/// Chordal graph built vertex by vertex: each new vertex picks its earlier
/// neighborhood as a clique, scanning candidates in ascending order and
/// keeping those adjacent to everything picked so far with probability
/// `density` (exact comparison draw * den < num * 2^32, no floats).
/// Reversing the insertion order gives a perfect elimination order, so the
/// output is chordal by construction; density 1 yields the complete graph.
pub fn random_chordal(n: usize, density: Ratio, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArg("chordal generator needs n >= 1".into()));
    }
    if density < 0 || density > 1 {
        return Err(Error::InvalidArg(format!(
            "density {density} outside [0, 1]"
        )));
    }
    let num = density.num() as u64;
    let den = density.den() as u64;
    let mut rng = Lcg::new(seed);
    let mut adj = vec![0u64; n];
    let mut edges = Vec::new();
    for i in 1..n {
        let mut picked = 0u64;
        for j in 0..i {
            if adj[j] & picked != picked {
                continue;
            }
            let draw = rng.next_u32() as u64;
            if draw * den < num * (1u64 << 32) {
                picked |= 1 << j;
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
                edges.push((j, i));
            }
        }
    }
    Graph::new(n, edges)
}

/// Parses the CLI graph grammar: `q3`, `v8`, `gadget`, `m`, `gstar:N`,
/// `cycle:N`, `path:N`, `complete:N`, `star:N`, `mobius:N`,
/// `chordal:N:D:seedS` (D a decimal or fraction), `file:PATH` in edge-list
/// format.
pub fn from_spec(spec: &str) -> Result<Graph> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)?;
        return Graph::from_edge_list(&text);
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let arity = |want: usize| -> Result<()> {
        if parts.len() == want {
            Ok(())
        } else {
            Err(Error::UnknownSpec(format!(
                "`{spec}` takes {} argument(s)",
                want - 1
            )))
        }
    };
    match parts[0] {
        "q3" => arity(1).map(|_| q3()),
        "v8" => arity(1).map(|_| wagner_v8()),
        "gadget" => arity(1).map(|_| gadget_g()),
        "m" => arity(1).map(|_| m_graph()),
        "gstar" => {
            arity(2)?;
            chain_gstar(parse_count(parts[1])?)
        }
        "cycle" => {
            arity(2)?;
            cycle(parse_count(parts[1])?)
        }
        "path" => {
            arity(2)?;
            path(parse_count(parts[1])?)
        }
        "complete" => {
            arity(2)?;
            complete(parse_count(parts[1])?)
        }
        "star" => {
            arity(2)?;
            star(parse_count(parts[1])?)
        }
        "mobius" => {
            arity(2)?;
            mobius_ladder(parse_count(parts[1])?)
        }
        "chordal" => {
            arity(4)?;
            let n = parse_count(parts[1])?;
            let density = parse_density(parts[2])?;
            let seed_text = parts[3].strip_prefix("seed").unwrap_or(parts[3]);
            let seed: u64 = seed_text
                .parse()
                .map_err(|_| Error::UnknownSpec(format!("bad seed `{}`", parts[3])))?;
            random_chordal(n, density, seed)
        }
        other => Err(Error::UnknownSpec(format!("unknown graph `{other}`"))),
    }
}

/// Frozen vertex-name tables for the named graphs; None for parameterized
/// families, which use bare indices.
pub fn names_from_spec(spec: &str) -> Option<Vec<String>> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts[0] {
        "q3" => Some(q3_names()),
        "v8" => Some(wagner_names()),
        "gadget" => Some(gadget_names()),
        "m" => Some(m_names()),
        "gstar" if parts.len() == 2 => parse_count(parts[1]).ok().map(gstar_names),
        _ => None,
    }
}

fn parse_count(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::UnknownSpec(format!("bad count `{s}`")))
}

/// Accepts `0.4`, `.4`, `1`, or `2/5`; always an exact rational.
fn parse_density(s: &str) -> Result<Ratio> {
    let bad = || Error::UnknownSpec(format!("bad density `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: i64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10i64.pow(frac.len() as u32);
        let num: i64 = frac.parse().map_err(|_| bad())?;
        return Ok(Ratio::new(whole * den + num, den));
    }
    let whole: i64 = s.parse().map_err(|_| bad())?;
    Ok(Ratio::from_int(whole))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::invariants;
    use crate::subsets::combinations;

    #[test]
    fn cube_shape() {
        let g = q3();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edges().len(), 12);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert_eq!(invariants::chromatic_number(&g, &Default::default()).unwrap(), 2);
        // Exactly six induced 4-cycles.
        let mut squares = 0;
        for mask in combinations(8, 4) {
            let s = VertexSet::from_bits(mask);
            let within = g.edges_within(s);
            if within == 4 && s.iter().all(|v| (g.adj_mask(v) & s.bits()).count_ones() == 2) {
                squares += 1;
            }
        }
        assert_eq!(squares, 6);
    }

    #[test]
    fn wagner_shape() {
        let g = wagner_v8();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edges().len(), 12);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert_eq!(invariants::clique_number(&g, &Default::default()).unwrap(), 2);
    }

    #[test]
    fn wagner_minus_v3_v8_has_one_cycle_the_square_v1_v2_v6_v5() {
        let g = wagner_v8();
        let s = VertexSet::full(8).without(2).without(7);
        assert_eq!(g.cycle_space_dim_within(s), 1);
        let square = VertexSet::from_iter([0, 1, 5, 4]);
        assert_eq!(g.edges_within(square), 4);
    }

    #[test]
    fn gadget_shape() {
        let g = gadget_g();
        assert_eq!((g.n(), g.edges().len()), (5, 7));
        assert!(g.has_edge(GADGET_TWIST_EDGE.0, GADGET_TWIST_EDGE.1));
        // z is the subdivision vertex: degree 2, adjacent to x and y.
        assert_eq!(g.degree(4), 2);
        assert_eq!(invariants::coloring_number(&g), 3);
        let (tau, _) = invariants::feedback_vertex_number(&g, &Default::default()).unwrap();
        assert_eq!(tau, 2);
    }

    #[test]
    fn gstar_shape() {
        assert_eq!(chain_gstar(1).unwrap(), gadget_g());
        for blocks in 1..=4 {
            let g = chain_gstar(blocks).unwrap();
            assert_eq!(g.n(), 5 * blocks);
            assert_eq!(g.edges().len(), 7 * blocks + blocks - 1);
            assert!(g.is_connected());
            assert!(g.max_degree() <= 4);
            assert_eq!(invariants::coloring_number(&g), 3);
            let (tau, _) = invariants::feedback_vertex_number(&g, &Default::default()).unwrap();
            assert_eq!(tau, 2 * blocks);
        }
        assert_eq!(gstar_handles(2), vec![(3, 4), (8, 9)]);
        assert!(chain_gstar(0).is_err());
    }

    #[test]
    fn m_graph_shape() {
        let g = m_graph();
        assert_eq!((g.n(), g.edges().len()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn join_shapes() {
        let g = gadget_g();
        assert_eq!(join_complete(&g, 0).unwrap(), g);
        let j = join_complete(&g, 2).unwrap();
        assert_eq!((j.n(), j.edges().len()), (7, 7 + 10 + 1));
        assert!(j.has_edge(5, 6));
        assert!((5..7).all(|a| (0..5).all(|v| j.has_edge(v, a))));
        let k = join_complete(&complete(3).unwrap(), 2).unwrap();
        assert_eq!(k, complete(5).unwrap());
    }

    #[test]
    fn standard_families() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert!(cycle(2).is_err());
        assert_eq!(path(1).unwrap().edges().len(), 0);
        assert_eq!(star(3).unwrap().degree(0), 3);
        assert_eq!(mobius_ladder(2).unwrap(), complete(4).unwrap());
        assert_eq!(mobius_ladder(4).unwrap(), wagner_v8());
        assert!(mobius_ladder(1).is_err());
    }

    #[test]
    fn chordal_generator() {
        for seed in 0..20 {
            let g = random_chordal(8, Ratio::new(2, 5), seed).unwrap();
            assert!(matches!(
                invariants::is_chordal(&g),
                invariants::ChordalResult::Chordal { .. }
            ));
            assert_eq!(g, random_chordal(8, Ratio::new(2, 5), seed).unwrap());
        }
        assert_eq!(
            random_chordal(6, Ratio::from_int(1), 7).unwrap(),
            complete(6).unwrap()
        );
        let empty = random_chordal(6, Ratio::from_int(0), 7).unwrap();
        assert_eq!(empty.edges().len(), 0);
        assert!(random_chordal(5, Ratio::new(3, 2), 1).is_err());
    }

    #[test]
    fn chordal_chromatic_equals_clique() {
        let b = Default::default();
        for seed in [1, 2, 3, 4, 5] {
            let g = random_chordal(9, Ratio::new(1, 2), seed).unwrap();
            let chi = invariants::chromatic_number(&g, &b).unwrap();
            let omega = invariants::clique_number(&g, &b).unwrap();
            assert_eq!(chi, omega);
        }
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(from_spec("q3").unwrap(), q3());
        assert_eq!(from_spec("v8").unwrap(), wagner_v8());
        assert_eq!(from_spec("gstar:3").unwrap(), chain_gstar(3).unwrap());
        assert_eq!(from_spec("cycle:5").unwrap(), cycle(5).unwrap());
        assert_eq!(from_spec("mobius:4").unwrap(), wagner_v8());
        assert_eq!(
            from_spec("chordal:8:0.4:seed7").unwrap(),
            random_chordal(8, Ratio::new(2, 5), 7).unwrap()
        );
        assert_eq!(
            from_spec("chordal:8:2/5:7").unwrap(),
            random_chordal(8, Ratio::new(2, 5), 7).unwrap()
        );
        for bad in ["nope", "cycle", "cycle:x", "q3:1", "chordal:8:1.5:3", "chordal:8"] {
            assert!(from_spec(bad).is_err(), "{bad} should fail");
        }
        assert_eq!(names_from_spec("v8").unwrap()[0], "v1");
        assert_eq!(names_from_spec("gstar:2").unwrap()[9], "z2");
        assert!(names_from_spec("cycle:5").is_none());
    }

    #[test]
    fn spec_file_round_trip() {
        let dir = std::env::temp_dir().join("dpcolor-spec-test");
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join("g.edges");
        std::fs::write(&p, q3().to_edge_list()).unwrap();
        let loaded = from_spec(&format!("file:{}", p.display())).unwrap();
        assert_eq!(loaded, q3());
    }

    #[test]
    fn lcg_is_deterministic() {
        let mut a = Lcg::new(42);
        let mut b = Lcg::new(42);
        let xs: Vec<u32> = (0..5).map(|_| a.next_u32()).collect();
        let ys: Vec<u32> = (0..5).map(|_| b.next_u32()).collect();
        assert_eq!(xs, ys);
        assert!(Lcg::new(1).below(10) < 10);
    }
}
