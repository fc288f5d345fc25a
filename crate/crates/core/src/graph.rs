//! Simple undirected graphs with stable integer vertex and edge identifiers,
//! the named graph families, and the graph operations used throughout the
//! crate.
//!
//! Vertices are `0..n`. Each edge is an unordered pair stored as `(u, v)`
//! with `u < v`, and its identifier is its position in the edge list. Edge
//! identifiers are dense and never change for the lifetime of a value, which
//! is what makes cut sets reproducible across runs.

use std::collections::{HashSet, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Immutable simple undirected graph.
///
/// Values are canonical on construction: every stored pair satisfies
/// `u < v`, endpoints are in range, and there are no loops or duplicates.
/// All operations are pure and return new values.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `n` vertices from unordered vertex pairs.
    ///
    /// Pairs are canonicalized to `u < v`; the edge id of a pair is its
    /// position in the input.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            let pair = (a.min(b), a.max(b));
            if !seen.insert(pair) {
                return Err(Error::DuplicateEdge(pair.0, pair.1));
            }
            edges.push(pair);
        }
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(id);
            incident[v].push(id);
        }
        Ok(Graph { n, edges, incident })
    }

    /// The graph with no vertices and no edges.
    pub fn null() -> Graph {
        Graph {
            n: 0,
            edges: Vec::new(),
            incident: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    /// All edges as canonical `(u, v)` pairs, indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> Result<(usize, usize)> {
        self.edges
            .get(edge)
            .copied()
            .ok_or(Error::BadEdgeId { edge, m: self.m() })
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    /// Neighbor vertices of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incident[v]
            .iter()
            .map(|&e| {
                let (a, b) = self.edges[e];
                if a == v {
                    b
                } else {
                    a
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Edge id joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n || u == v {
            return None;
        }
        let (probe, other) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.incident[probe]
            .iter()
            .copied()
            .find(|&e| self.edges[e] == (probe.min(other), probe.max(other)))
    }

    /// The trivial cut at `v`: the ascending list of edge ids incident to it.
    pub fn star(&self, v: usize) -> Vec<usize> {
        self.incident[v].clone()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let delta_min = degrees.iter().copied().min().unwrap_or(0);
        let delta_max = degrees.iter().copied().max().unwrap_or(0);
        let v_delta = (0..self.n).filter(|&v| degrees[v] == delta_min).collect();
        DegreeProfile {
            degrees,
            delta_min,
            delta_max,
            v_delta,
        }
    }

    /// Breadth-first connectivity; graphs with at most one vertex count as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.incident[v] {
                let (a, b) = self.edges[e];
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Intersection graph of the edge set: vertex `i` of the result is edge
    /// id `i` of `self`, adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut pairs = std::collections::BTreeSet::new();
        for v in 0..self.n {
            let inc = &self.incident[v];
            for i in 0..inc.len() {
                for j in i + 1..inc.len() {
                    pairs.insert((inc[i], inc[j]));
                }
            }
        }
        Graph::new(self.m(), pairs).expect("line graph pairs are canonical")
    }

    /// Two disjoint copies of `self` joined by a perfect matching.
    ///
    /// Copy B vertex ids are copy A ids plus `n`. Edge id layout: the copy A
    /// edges (`0..m`, matching `self`), the copy B edges (`m..2m`), then the
    /// matching edges `(v, v + n)` for `v = 0..n` (ids `2m..2m+n`).
    pub fn cartesian_product_k2(&self) -> Graph {
        let n = self.n;
        let mut pairs: Vec<(usize, usize)> = self.edges.clone();
        pairs.extend(self.edges.iter().map(|&(u, v)| (u + n, v + n)));
        pairs.extend((0..n).map(|v| (v, v + n)));
        Graph::new(2 * n, pairs).expect("product pairs are canonical")
    }

    /// Adds one new vertex (id `n`) adjacent to every existing vertex.
    ///
    /// New edge ids are `m..m+n` in vertex order.
    pub fn vertex_join(&self) -> Graph {
        let mut pairs = self.edges.clone();
        pairs.extend((0..self.n).map(|v| (v, self.n)));
        Graph::new(self.n + 1, pairs).expect("join pairs are canonical")
    }

    /// Disjoint union; `other`'s vertex ids are shifted by `self.n()` and its
    /// edge ids by `self.m()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut pairs = self.edges.clone();
        pairs.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::new(self.n + other.n, pairs).expect("union pairs are canonical")
    }

    /// Contracts edge `e`, merging its endpoints into the smaller one.
    ///
    /// Loops and parallel duplicates created by the merge are dropped, so the
    /// result stays simple. Vertices and edge ids are renumbered densely;
    /// surviving edges keep their relative order.
    pub fn contract_edge(&self, e: usize) -> Result<Graph> {
        let (u, v) = self.endpoints(e)?;
        let remap = |w: usize| -> usize {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut seen = HashSet::new();
        let mut pairs = Vec::new();
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if id == e {
                continue;
            }
            let (a, b) = (remap(a), remap(b));
            if a == b {
                continue;
            }
            let pair = (a.min(b), a.max(b));
            if seen.insert(pair) {
                pairs.push(pair);
            }
        }
        Graph::new(self.n - 1, pairs)
    }

    /// Subgraph induced by `vs`; kept vertices are renumbered in ascending
    /// order of their old ids, kept edges keep their relative order.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return Err(Error::BadVertexSet("duplicate vertex".into()));
        }
        if let Some(&v) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(Error::BadVertexSet(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n
            )));
        }
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            new_id[v] = i;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]));
        Graph::new(sorted.len(), pairs)
    }

    /// Applies a vertex permutation (`perm[old] = new`) and renumbers edges
    /// in ascending pair order.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::BadVertexSet("permutation length mismatch".into()));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return Err(Error::BadVertexSet("not a permutation".into()));
            }
            hit[p] = true;
        }
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        Graph::new(self.n, pairs)
    }

    /// Per-vertex adjacency bitmasks; requires `n <= 64`.
    pub(crate) fn bit_rows(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::SizeLimitExceeded(format!(
                "bitmask routines handle at most 64 vertices, got {}",
                self.n
            )));
        }
        let mut rows = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(rows)
    }
}

/// Degree summary of a graph: per-vertex degrees, the extremes, and the set
/// of minimum-degree vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub delta_min: usize,
    pub delta_max: usize,
    pub v_delta: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        if repr.n > MAX_IO_VERTICES {
            return Err(D::Error::custom(format!(
                "vertex count {} exceeds the input bound {MAX_IO_VERTICES}",
                repr.n
            )));
        }
        Graph::new(repr.n, repr.edges).map_err(D::Error::custom)
    }
}

/// Input bound (deserialization and parsers): everything here is desk
/// scale, and accepting arbitrary counts would allocate before any
/// validation can run.
pub(crate) const MAX_IO_VERTICES: usize = 1 << 20;

// ---- named families -------------------------------------------------------

/// Path on `n` vertices, edges `(i, i+1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("path needs n >= 1".into()));
    }
    Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams("cycle needs n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star on `n` vertices with center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("star needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|v| (0, v)))
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Complete bipartite graph; part A is `0..a`, part B is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::BadParams("bipartite parts must be nonempty".into()));
    }
    Graph::new(a + b, (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))))
}

/// Wheel on `n >= 4` vertices total: hub 0 joined to the rim cycle `1..n`.
///
/// With this convention the wheel on four vertices is the complete graph on
/// four vertices.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::BadParams("wheel needs n >= 4".into()));
    }
    let spokes = (1..n).map(|v| (0, v));
    let rim = (1..n).map(|v| (v, if v + 1 < n { v + 1 } else { 1 }));
    Graph::new(n, spokes.chain(rim))
}

/// Edgeless graph on `n` vertices.
pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::new(n, std::iter::empty())
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
pub fn petersen() -> Graph {
    let pairs = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (0, 4),
        (5, 7),
        (7, 9),
        (6, 9),
        (6, 8),
        (5, 8),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
    ];
    Graph::new(10, pairs).expect("petersen pairs are canonical")
}

/// The paw: a triangle 0,1,2 with a pendant vertex 3 attached to 0.
pub fn paw() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).expect("paw pairs are canonical")
}

/// Uniformly random labeled tree on `n` vertices, deterministic in `seed`.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("tree needs n >= 1".into()));
    }
    if n == 1 {
        return Graph::new(1, std::iter::empty());
    }
    if n == 2 {
        return Graph::new(2, [(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(decode_pruefer(n, &seq))
}

/// Standard Prüfer-sequence decoding; yields each labeled tree once when the
/// sequence is uniform.
fn decode_pruefer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut pairs = Vec::with_capacity(n - 1);
    for &x in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("tree decode invariant");
        pairs.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(std::cmp::Reverse(x));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    pairs.push((a, b));
    Graph::new(n, pairs).expect("decoded tree is simple")
}

/// Builds a named family graph from an integer parameter list.
///
/// Known names: `path n`, `cycle n`, `star n`, `complete n`,
/// `complete_bipartite m n`, `wheel n`, `empty n`, `petersen`, `paw`,
/// `random_tree n seed`.
pub fn family(name: &str, params: &[u64]) -> Result<Graph> {
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::BadParams(format!(
                "family '{name}' expects {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    // Size parameters are capped; seeds (handled separately) are not.
    if name != "random_tree" {
        if let Some(&p) = params.iter().find(|&&p| p > 1024) {
            return Err(Error::BadParams(format!(
                "family size parameter {p} exceeds the bound 1024"
            )));
        }
    } else if params.first().copied().unwrap_or(0) > 1024 {
        return Err(Error::BadParams(
            "tree size parameter exceeds the bound 1024".into(),
        ));
    }
    let p = |i: usize| params[i] as usize;
    match name {
        "path" => {
            want(1)?;
            path(p(0))
        }
        "cycle" => {
            want(1)?;
            cycle(p(0))
        }
        "star" => {
            want(1)?;
            star(p(0))
        }
        "complete" => {
            want(1)?;
            complete(p(0))
        }
        "complete_bipartite" => {
            want(2)?;
            complete_bipartite(p(0), p(1))
        }
        "wheel" => {
            want(1)?;
            wheel(p(0))
        }
        "empty" => {
            want(1)?;
            empty_graph(p(0))
        }
        "petersen" => {
            want(0)?;
            Ok(petersen())
        }
        "paw" => {
            want(0)?;
            Ok(paw())
        }
        "random_tree" => {
            want(2)?;
            random_tree(p(0), params[1])
        }
        _ => Err(Error::BadParams(format!("unknown family '{name}'"))),
    }
}
