//! Undirected simple graphs and vertex-cover solvers.
//!
//! Vertices are 1-based ids in `1..=n`, matching the usual `v_1..v_n`
//! naming; edges are stored with the smaller endpoint first. The exact
//! solvers are deterministic: among all optimal solutions they return
//! the one whose sorted vertex list is lexicographically smallest.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Exhaustive-search guard for the exact solvers.
pub const EXACT_VC_MAX_N: usize = 24;

/// A set of vertex ids.
pub type VertexSet = BTreeSet<usize>;

/// An undirected edge, stored with `u < v`. Serializes as `[u, v]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.u, self.v).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a, b) = <(usize, usize)>::deserialize(d)?;
        Edge::new(a, b).map_err(serde::de::Error::custom)
    }
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.u == vertex || self.v == vertex
    }

    /// The endpoint that is not `vertex`; panics if `vertex` is not an endpoint.
    pub fn other(&self, vertex: usize) -> usize {
        if vertex == self.u {
            self.v
        } else {
            assert_eq!(vertex, self.v);
            self.u
        }
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.u, self.v]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

/// An undirected simple graph on vertex set `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph, validating ranges and rejecting self-loops and
    /// duplicate edges. Edges are kept sorted.
    pub fn new(n: usize, edge_list: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, b) in edge_list {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            edges.push(Edge::new(a, b)?);
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph { n, edges: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `m`.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        Edge::new(a, b).is_ok_and(|e| self.edges.binary_search(&e).is_ok())
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(vertex)).count()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex == 0 || vertex > self.n {
            return Err(Error::VertexOutOfRange {
                vertex,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Text format: first line `n m`, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph text".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), "n")?;
        let m: usize = parse_field(it.next(), "m")?;
        let mut edge_list = Vec::with_capacity(m);
        for line in lines.take(m) {
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), "u")?;
            let v: usize = parse_field(it.next(), "v")?;
            edge_list.push((u, v));
        }
        if edge_list.len() != m {
            return Err(Error::Parse(format!(
                "expected {m} edge lines, found {}",
                edge_list.len()
            )));
        }
        Graph::new(n, edge_list)
    }
}

fn parse_field(field: Option<&str>, name: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("missing field {name}")))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad field {name}: {e}")))
}

/// True iff every edge of `g` has at least one endpoint in `cover`.
pub fn is_vertex_cover(g: &Graph, cover: &VertexSet) -> Result<bool> {
    for &v in cover {
        g.check_vertex(v)?;
    }
    Ok(g.edges
        .iter()
        .all(|e| cover.contains(&e.u) || cover.contains(&e.v)))
}

fn guard_n(g: &Graph) -> Result<()> {
    if g.n > EXACT_VC_MAX_N {
        return Err(Error::SizeGuard {
            what: "graph vertex count",
            got: g.n,
            limit: EXACT_VC_MAX_N,
        });
    }
    Ok(())
}

/// Size of a greedy maximal matching among `edges`; a lower bound on the
/// number of vertices needed to cover them.
fn matching_lower_bound(edges: &[Edge]) -> usize {
    let mut used = BTreeSet::new();
    let mut size = 0;
    for e in edges {
        if !used.contains(&e.u) && !used.contains(&e.v) {
            used.insert(e.u);
            used.insert(e.v);
            size += 1;
        }
    }
    size
}

/// A minimum vertex cover, found by branch and bound over candidate
/// vertices in ascending id order with a matching lower bound for
/// pruning. Returns the lexicographically smallest optimum.
pub fn min_vertex_cover_exact(g: &Graph) -> Result<VertexSet> {
    guard_n(g)?;
    // Iterative deepening keeps the first (lex-smallest) cover of optimal size.
    let lb = matching_lower_bound(&g.edges);
    for budget in lb..=g.n {
        let mut chosen = Vec::new();
        if search_full_cover(g, 1, budget, &mut chosen) {
            return Ok(chosen.into_iter().collect());
        }
    }
    Ok(g.vertices().collect()) // unreachable: the full vertex set always covers
}

/// Depth-first lexicographic search for a cover of size <= budget using
/// only vertices >= `next`, given `chosen` so far. Leaves `chosen` with
/// the solution on success.
fn search_full_cover(g: &Graph, next: usize, budget: usize, chosen: &mut Vec<usize>) -> bool {
    let uncovered: Vec<Edge> = g
        .edges
        .iter()
        .filter(|e| !chosen.contains(&e.u) && !chosen.contains(&e.v))
        .copied()
        .collect();
    if uncovered.is_empty() {
        return true;
    }
    if matching_lower_bound(&uncovered) > budget {
        return false;
    }
    // An edge with both endpoints below `next` can no longer be covered.
    if uncovered.iter().any(|e| e.v < next) {
        return false;
    }
    for v in next..=g.n {
        if budget == 0 {
            break;
        }
        // Only consider vertices that still cover something.
        if !uncovered.iter().any(|e| e.contains(v)) {
            continue;
        }
        chosen.push(v);
        if search_full_cover(g, v + 1, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Classic matching-based 2-approximation: repeatedly take an uncovered
/// edge (smallest first) and add both endpoints.
pub fn greedy_vertex_cover(g: &Graph) -> VertexSet {
    let mut cover = VertexSet::new();
    for e in &g.edges {
        if !cover.contains(&e.u) && !cover.contains(&e.v) {
            cover.insert(e.u);
            cover.insert(e.v);
        }
    }
    cover
}

/// A fraction in `[0, 1)` used as the allowed uncovered-edge share.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alpha {
    num: u64,
    den: u64,
}

impl Alpha {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num >= den {
            return Err(Error::AlphaOutOfRange(format!("{num}/{den}")));
        }
        Ok(Alpha { num, den })
    }

    pub fn zero() -> Self {
        Alpha { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Number of edges a valid alpha-partial cover must cover:
    /// `ceil((1 - alpha) * m)`.
    pub fn required_edges(&self, m: usize) -> usize {
        let m = m as u64;
        (((self.den - self.num) * m).div_ceil(self.den)) as usize
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn covered_count(g: &Graph, chosen: &[usize]) -> usize {
    g.edges
        .iter()
        .filter(|e| chosen.contains(&e.u) || chosen.contains(&e.v))
        .count()
}

/// A minimum alpha-partial vertex cover: the smallest set covering at
/// least `ceil((1 - alpha) * m)` edges. Lexicographically smallest
/// optimum, like the full solver.
pub fn min_partial_vertex_cover_exact(g: &Graph, alpha: Alpha) -> Result<VertexSet> {
    guard_n(g)?;
    let required = alpha.required_edges(g.m());
    let max_deg = g.max_degree();
    for budget in 0..=g.n {
        // Even taking `budget` vertices of maximum degree cannot reach the target.
        if budget * max_deg < required {
            continue;
        }
        let mut chosen = Vec::new();
        if search_partial_cover(g, 1, budget, required, &mut chosen) {
            return Ok(chosen.into_iter().collect());
        }
    }
    Ok(g.vertices().collect()) // unreachable for alpha in [0,1)
}

fn search_partial_cover(
    g: &Graph,
    next: usize,
    budget: usize,
    required: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let covered = covered_count(g, chosen);
    if covered >= required {
        return true;
    }
    if budget == 0 {
        return false;
    }
    for v in next..=g.n {
        chosen.push(v);
        if search_partial_cover(g, v + 1, budget - 1, required, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Upgrades an alpha-partial cover to a full cover by adding both
/// endpoints of every uncovered edge. The result satisfies
/// `|C'| <= |C| + 2 * alpha * m`.
pub fn upgrade_partial_cover(g: &Graph, cover: &VertexSet, alpha: Alpha) -> Result<VertexSet> {
    for &v in cover {
        g.check_vertex(v)?;
    }
    let uncovered: Vec<Edge> = g
        .edges
        .iter()
        .filter(|e| !cover.contains(&e.u) && !cover.contains(&e.v))
        .copied()
        .collect();
    let covered = g.m() - uncovered.len();
    let required = alpha.required_edges(g.m());
    if covered < required {
        return Err(Error::NotAPartialCover { covered, required });
    }
    let mut full = cover.clone();
    for e in uncovered {
        full.insert(e.u);
        full.insert(e.v);
    }
    Ok(full)
}

/// The restricted edge neighborhood `E(center; excluded)`: edges at
/// `center` avoiding every vertex in `excluded`.
pub fn restricted_edge_neighborhood(
    g: &Graph,
    center: usize,
    excluded: &[usize],
) -> Result<Vec<Edge>> {
    g.check_vertex(center)?;
    for &v in excluded {
        g.check_vertex(v)?;
    }
    Ok(g.edges
        .iter()
        .filter(|e| e.contains(center) && !excluded.iter().any(|&x| e.contains(x)))
        .copied()
        .collect())
}

/// The restricted vertex neighborhood `V(center; excluded)`; satisfies
/// `E(center; excluded) = {{center, v} : v in V(center; excluded)}`.
pub fn restricted_vertex_neighborhood(
    g: &Graph,
    center: usize,
    excluded: &[usize],
) -> Result<Vec<usize>> {
    let edges = restricted_edge_neighborhood(g, center, excluded)?;
    let mut out: Vec<usize> = edges.iter().map(|e| e.other(center)).collect();
    out.sort_unstable();
    Ok(out)
}

/// One part of the edge partition induced by an ordered vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePart {
    pub vertex: usize,
    pub edges: Vec<Edge>,
}

/// Result of [`check_edge_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    pub parts: Vec<EdgePart>,
    /// Whether the parts exhaust the edge set (they are always disjoint).
    pub is_partition: bool,
}

/// Computes `E_kappa = E(v_kappa; v_1..v_{kappa-1})` for each position of
/// the ordered list and reports whether the parts exhaust `E`. They do
/// exactly when the list is a vertex cover.
pub fn check_edge_partition(g: &Graph, ordered: &[usize]) -> Result<EdgePartition> {
    let mut parts = Vec::with_capacity(ordered.len());
    let mut seen = 0usize;
    for (k, &v) in ordered.iter().enumerate() {
        let edges = restricted_edge_neighborhood(g, v, &ordered[..k])?;
        seen += edges.len();
        parts.push(EdgePart { vertex: v, edges });
    }
    Ok(EdgePartition {
        parts,
        is_partition: seen == g.m(),
    })
}

/// A random simple graph with maximum degree at most `d`, deterministic
/// for a fixed seed. Candidate pairs are visited in shuffled order and
/// kept with probability 1/2 while the degree bound allows.
pub fn random_bounded_degree_graph(n: usize, d: usize, seed: u64) -> Graph {
    assert!(d >= 1, "degree bound must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut degree = vec![0usize; n + 1];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u] < d && degree[v] < d && rng.gen_bool(0.5) {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("generator produces valid simple graphs")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 11-vertex, 10-edge graph with a unique size-3 cover: three
    /// centers in a path, with 3, 2, and 3 pendant leaves.
    pub(crate) fn three_center_graph() -> Graph {
        // centers 1, 2, 3; leaves 4..=11
        Graph::new(
            11,
            vec![
                (1, 2),
                (2, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 7),
                (2, 8),
                (3, 9),
                (3, 10),
                (3, 11),
            ],
        )
        .unwrap()
    }

    /// Four vertices, edges {1,2}, {1,4}, {2,4}, {3,4}; VC = 2.
    pub(crate) fn four_cycle_chord_graph() -> Graph {
        Graph::new(4, vec![(1, 2), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    /// Independent oracle: scan all 2^n subsets for the smallest cover.
    fn naive_min_vc(g: &Graph) -> usize {
        (0u32..(1 << g.n))
            .filter(|mask| {
                let set: VertexSet = (1..=g.n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                is_vertex_cover(g, &set).unwrap()
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// Independent oracle for the partial variant.
    fn naive_min_partial_vc(g: &Graph, alpha: Alpha) -> usize {
        let required = alpha.required_edges(g.m());
        (0u32..(1 << g.n))
            .filter(|mask| {
                let set: Vec<usize> = (1..=g.n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                covered_count(g, &set) >= required
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
            .collect();
        (0u32..(1 << pairs.len()))
            .map(|mask| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p);
                Graph::new(n, edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn cover_checks_on_named_graphs() {
        let g = three_center_graph();
        let centers: VertexSet = [1, 2, 3].into_iter().collect();
        assert!(is_vertex_cover(&g, &centers).unwrap());
        assert!(is_vertex_cover(&Graph::edgeless(3), &VertexSet::new()).unwrap());

        let g = four_cycle_chord_graph();
        let just_v1: VertexSet = [1].into_iter().collect();
        assert!(!is_vertex_cover(&g, &just_v1).unwrap()); // {3,4} uncovered
    }

    #[test]
    fn cover_check_rejects_out_of_range() {
        let g = Graph::edgeless(3);
        let bad: VertexSet = [4].into_iter().collect();
        assert!(is_vertex_cover(&g, &bad).is_err());
    }

    #[test]
    fn exact_cover_on_named_graphs() {
        let g = three_center_graph();
        let c = min_vertex_cover_exact(&g).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c, [1, 2, 3].into_iter().collect());

        assert!(min_vertex_cover_exact(&Graph::edgeless(4)).unwrap().is_empty());

        let g = four_cycle_chord_graph();
        let c = min_vertex_cover_exact(&g).unwrap();
        assert_eq!(c.len(), 2);
        assert!(is_vertex_cover(&g, &c).unwrap());
        assert_eq!(c, [1, 4].into_iter().collect()); // lex-smallest optimum
    }

    #[test]
    fn exact_cover_matches_naive_on_all_small_graphs() {
        for n in 1..=4 {
            for g in all_graphs(n) {
                let c = min_vertex_cover_exact(&g).unwrap();
                assert!(is_vertex_cover(&g, &c).unwrap());
                assert_eq!(c.len(), naive_min_vc(&g), "graph {g:?}");
            }
        }
    }

    #[test]
    fn exact_cover_guard() {
        let g = Graph::edgeless(25);
        assert!(matches!(
            min_vertex_cover_exact(&g),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn greedy_is_a_cover_within_twice_optimum() {
        assert!(greedy_vertex_cover(&Graph::edgeless(5)).is_empty());

        let single = Graph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(greedy_vertex_cover(&single), [1, 2].into_iter().collect());

        let g = three_center_graph();
        let greedy = greedy_vertex_cover(&g);
        assert!(is_vertex_cover(&g, &greedy).unwrap());
        assert!(greedy.len() <= 2 * min_vertex_cover_exact(&g).unwrap().len());
        assert!(greedy.len() <= 6);
    }

    #[test]
    fn partial_cover_on_named_graphs() {
        // One fifth of the edges may stay uncovered on the 10-edge graph.
        let g = three_center_graph();
        let c = min_partial_vertex_cover_exact(&g, Alpha::new(1, 5).unwrap()).unwrap();
        assert_eq!(c.len(), 2);

        let g = four_cycle_chord_graph();
        let c = min_partial_vertex_cover_exact(&g, Alpha::new(1, 4).unwrap()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c, [4].into_iter().collect()); // v4 covers 3 of 4 edges
    }

    #[test]
    fn partial_cover_with_alpha_zero_is_full_cover() {
        for n in 1..=4 {
            for g in all_graphs(n) {
                let full = min_vertex_cover_exact(&g).unwrap();
                let partial = min_partial_vertex_cover_exact(&g, Alpha::zero()).unwrap();
                assert_eq!(full.len(), partial.len());
            }
        }
    }

    #[test]
    fn partial_cover_matches_naive_and_never_exceeds_full() {
        let alphas = [Alpha::new(1, 8).unwrap(), Alpha::new(1, 4).unwrap()];
        for n in 2..=4 {
            for g in all_graphs(n) {
                let full = min_vertex_cover_exact(&g).unwrap().len();
                for &alpha in &alphas {
                    let c = min_partial_vertex_cover_exact(&g, alpha).unwrap();
                    assert_eq!(c.len(), naive_min_partial_vc(&g, alpha));
                    assert!(c.len() <= full);
                }
            }
        }
    }

    #[test]
    fn alpha_validation() {
        assert!(Alpha::new(1, 1).is_err());
        assert!(Alpha::new(2, 1).is_err());
        assert!(Alpha::new(0, 4).is_ok());
        assert_eq!(Alpha::new(1, 5).unwrap().required_edges(10), 8);
        assert_eq!(Alpha::new(1, 4).unwrap().required_edges(4), 3);
    }

    #[test]
    fn upgrade_produces_full_cover_within_bound() {
        let g = four_cycle_chord_graph();
        let alpha = Alpha::new(1, 4).unwrap();
        let partial: VertexSet = [4].into_iter().collect();
        let full = upgrade_partial_cover(&g, &partial, alpha).unwrap();
        assert!(is_vertex_cover(&g, &full).unwrap());
        assert_eq!(full, [1, 2, 4].into_iter().collect());

        // A full cover passes through unchanged.
        let already = min_vertex_cover_exact(&g).unwrap();
        assert_eq!(
            upgrade_partial_cover(&g, &already, alpha).unwrap(),
            already
        );

        // The purple size-2 partial cover of the 10-edge graph.
        let g = three_center_graph();
        let alpha = Alpha::new(1, 5).unwrap();
        let partial: VertexSet = [1, 3].into_iter().collect();
        let full = upgrade_partial_cover(&g, &partial, alpha).unwrap();
        assert!(is_vertex_cover(&g, &full).unwrap());
        assert!(full.len() <= partial.len() + 2 * 2); // 2 uncovered edges
        assert!(full.len() as f64 <= partial.len() as f64 + 2.0 * alpha.as_f64() * g.m() as f64);
    }

    #[test]
    fn upgrade_rejects_non_partial_cover() {
        let g = three_center_graph();
        let not_partial: VertexSet = [4].into_iter().collect(); // covers 1 of 10
        assert!(matches!(
            upgrade_partial_cover(&g, &not_partial, Alpha::new(1, 5).unwrap()),
            Err(Error::NotAPartialCover { .. })
        ));
    }

    #[test]
    fn restricted_neighborhoods_by_enumeration() {
        let g = four_cycle_chord_graph();
        let e41 = restricted_edge_neighborhood(&g, 4, &[1]).unwrap();
        assert_eq!(
            e41,
            vec![Edge::new(2, 4).unwrap(), Edge::new(3, 4).unwrap()]
        );
        let e1 = restricted_edge_neighborhood(&g, 1, &[]).unwrap();
        assert_eq!(
            e1,
            vec![Edge::new(1, 2).unwrap(), Edge::new(1, 4).unwrap()]
        );
        let all: Vec<usize> = (1..=4).collect();
        assert!(restricted_edge_neighborhood(&g, 2, &all).unwrap().is_empty());

        // E and V neighborhoods agree through the defining identity.
        let v41 = restricted_vertex_neighborhood(&g, 4, &[1]).unwrap();
        assert_eq!(v41, vec![2, 3]);
        for &v in &v41 {
            assert!(e41.contains(&Edge::new(4, v).unwrap()));
        }
    }

    #[test]
    fn edge_partition_examples() {
        let g = four_cycle_chord_graph();
        let p = check_edge_partition(&g, &[1, 4]).unwrap();
        assert!(p.is_partition);
        assert_eq!(
            p.parts[0].edges,
            vec![Edge::new(1, 2).unwrap(), Edge::new(1, 4).unwrap()]
        );
        assert_eq!(
            p.parts[1].edges,
            vec![Edge::new(2, 4).unwrap(), Edge::new(3, 4).unwrap()]
        );

        let p = check_edge_partition(&g, &[1, 2]).unwrap();
        assert!(!p.is_partition); // {3,4} in no part

        assert!(check_edge_partition(&Graph::edgeless(2), &[]).unwrap().is_partition);
    }

    #[test]
    fn edge_partition_iff_vertex_cover_exhaustive() {
        // Fact: an ordered list induces an edge partition iff it covers.
        for n in 1..=4 {
            for g in all_graphs(n) {
                for mask in 0u32..(1 << n) {
                    let list: Vec<usize> =
                        (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    let set: VertexSet = list.iter().copied().collect();
                    let p = check_edge_partition(&g, &list).unwrap();
                    assert_eq!(p.is_partition, is_vertex_cover(&g, &set).unwrap());
                }
            }
        }
    }

    #[test]
    fn edge_partition_iff_vertex_cover_random_orders() {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for seed in 0..40 {
            let g = random_bounded_degree_graph(12, 4, seed);
            let mut list: Vec<usize> = (1..=12).filter(|_| rng.gen_bool(0.6)).collect();
            list.shuffle(&mut rng);
            let set: VertexSet = list.iter().copied().collect();
            let p = check_edge_partition(&g, &list).unwrap();
            assert_eq!(p.is_partition, is_vertex_cover(&g, &set).unwrap());
        }
    }

    #[test]
    fn degree_lower_bound_on_cover_size() {
        // An m-edge degree-d graph needs at least m/d cover vertices.
        for seed in 0..50 {
            let g = random_bounded_degree_graph(10, 3, seed);
            let d = g.max_degree().max(1);
            let vc = min_vertex_cover_exact(&g).unwrap().len();
            assert!(vc * d >= g.m(), "vc={vc} d={d} m={}", g.m());
        }
    }

    #[test]
    fn generator_is_deterministic_and_degree_bounded() {
        let a = random_bounded_degree_graph(6, 2, 0);
        let b = random_bounded_degree_graph(6, 2, 0);
        assert_eq!(a, b);

        let single = random_bounded_degree_graph(1, 3, 9);
        assert_eq!(single.m(), 0);

        for seed in 0..30 {
            let g = random_bounded_degree_graph(14, 3, seed);
            assert!(g.max_degree() <= 3);
        }
    }

    #[test]
    fn text_format_roundtrip() {
        let g = four_cycle_chord_graph();
        let text = g.to_text();
        assert!(text.starts_with("4 4\n"));
        assert_eq!(Graph::from_text(&text).unwrap(), g);
    }

    #[test]
    fn json_format_roundtrip() {
        let g = four_cycle_chord_graph();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[1,2],[1,4],[2,4],[3,4]]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        // malformed edges are rejected on the way in
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn constructor_rejects_invalid_graphs() {
        assert!(Graph::new(3, vec![(1, 1)]).is_err());
        assert!(Graph::new(3, vec![(1, 4)]).is_err());
        assert!(Graph::new(3, vec![(1, 2), (2, 1)]).is_err());
    }
}
