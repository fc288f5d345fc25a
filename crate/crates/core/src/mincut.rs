//! Edge connectivity and complete minimum edge-cut enumeration.
//!
//! Two independent routes are provided on purpose: [`enumerate_mincuts`]
//! sweeps all vertex bipartitions and keeps the minimum boundaries, while
//! [`brute_force_mincuts`] tests every edge subset of increasing cardinality.
//! [`edge_connectivity`] is a third route via unit-capacity max-flow. Tests
//! cross-check all three.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::{Error, Graph, Limits, Result};

/// The complete family of minimum edge-cuts of a graph.
///
/// Each cut is an ascending list of edge ids; the family is sorted
/// lexicographically. A disconnected or single-vertex graph has `lambda = 0`
/// and an empty family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MincutFamily {
    pub lambda: usize,
    #[serde(rename = "mincuts")]
    pub cuts: Vec<Vec<usize>>,
}

impl MincutFamily {
    fn empty() -> Self {
        MincutFamily {
            lambda: 0,
            cuts: Vec::new(),
        }
    }

    /// Number of mincuts.
    pub fn count(&self) -> usize {
        self.cuts.len()
    }
}

/// Edge connectivity via unit-capacity max-flow from vertex 0 to every other
/// vertex; 0 for disconnected or single-vertex graphs.
pub fn edge_connectivity(g: &Graph) -> usize {
    if g.n() < 2 || !g.is_connected() {
        return 0;
    }
    (1..g.n())
        .map(|t| max_flow_unit(g, 0, t))
        .min()
        .expect("n >= 2")
}

/// Shortest-augmenting-path max-flow where every edge carries one unit in
/// each direction; the value is the number of edge-disjoint s-t paths.
fn max_flow_unit(g: &Graph, s: usize, t: usize) -> usize {
    // Arc 2e runs u -> v for edge e = (u, v); arc 2e+1 runs v -> u.
    let mut cap = vec![1u8; 2 * g.m()];
    let mut flow = 0;
    loop {
        let mut parent_arc: Vec<Option<usize>> = vec![None; g.n()];
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &e in g.incident_edges(u) {
                let (a, b) = g.edges()[e];
                let (arc, w) = if a == u { (2 * e, b) } else { (2 * e + 1, a) };
                if !seen[w] && cap[arc] > 0 {
                    seen[w] = true;
                    parent_arc[w] = Some(arc);
                    if w == t {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            return flow;
        }
        let mut w = t;
        while w != s {
            let arc = parent_arc[w].expect("path exists");
            cap[arc] -= 1;
            cap[arc ^ 1] += 1;
            let (a, b) = g.edges()[arc / 2];
            w = if arc & 1 == 0 { a } else { b };
        }
        flow += 1;
    }
}

/// Enumerates every minimum edge-cut by sweeping all vertex subsets that
/// contain vertex 0 and collecting the minimum-size boundaries.
///
/// Every mincut is the boundary of a bipartition with both sides connected,
/// and such a boundary is seen exactly once by the sweep, so the family is
/// complete. Errors with [`Error::SizeLimitExceeded`] when `n` exceeds
/// `limits.max_n`.
pub fn enumerate_mincuts(g: &Graph, limits: Limits) -> Result<MincutFamily> {
    if g.n() <= 1 || !g.is_connected() {
        return Ok(MincutFamily::empty());
    }
    if g.n() > limits.max_n {
        return Err(Error::SizeLimitExceeded(format!(
            "bipartition sweep limited to {} vertices, got {}",
            limits.max_n,
            g.n()
        )));
    }
    if g.n() > 64 {
        return Err(Error::SizeLimitExceeded(
            "bipartition sweep limited to 64 vertices".into(),
        ));
    }
    let n = g.n();
    let edges = g.edges();
    let full = u64::MAX >> (64 - n);
    let mut best = usize::MAX;
    let mut cuts: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut boundary = Vec::new();
    // Vertex 0 is always inside; the remaining n-1 memberships sweep.
    for mask in 0..(1u64 << (n - 1)) {
        let side = (mask << 1) | 1;
        if side == full {
            continue; // complement empty
        }
        boundary.clear();
        for (e, &(u, v)) in edges.iter().enumerate() {
            if (side >> u) & 1 != (side >> v) & 1 {
                boundary.push(e);
                if boundary.len() > best {
                    break;
                }
            }
        }
        let size = boundary.len();
        if size > best {
            continue;
        }
        if size < best {
            best = size;
            cuts.clear();
        }
        cuts.insert(boundary.clone());
    }
    Ok(MincutFamily {
        lambda: best,
        cuts: cuts.into_iter().collect(),
    })
}

/// Test oracle: finds the minimum cut cardinality by trying every edge
/// subset of size 1, 2, ... and returns all disconnecting subsets of that
/// size. Output contract identical to [`enumerate_mincuts`].
pub fn brute_force_mincuts(g: &Graph, limits: Limits) -> Result<MincutFamily> {
    if g.n() <= 1 || !g.is_connected() {
        return Ok(MincutFamily::empty());
    }
    let rows = g.bit_rows()?;
    let full = u64::MAX >> (64 - g.n());
    let m = g.m();
    let mut scratch = vec![0u64; g.n()];
    for k in 1..=m {
        if binomial(m, k) > limits.max_subsets as u128 {
            return Err(Error::SizeLimitExceeded(format!(
                "C({m}, {k}) edge subsets exceed the {} subset budget",
                limits.max_subsets
            )));
        }
        let mut found: Vec<Vec<usize>> = Vec::new();
        for_each_combination(m, k, |subset| {
            if removal_disconnects(&rows, g.edges(), subset, &mut scratch, full) {
                found.push(subset.to_vec());
            }
        });
        if !found.is_empty() {
            // Lexicographic combination order already yields canonical order.
            return Ok(MincutFamily {
                lambda: k,
                cuts: found,
            });
        }
    }
    unreachable!("a connected graph on >= 2 vertices has a disconnecting edge subset")
}

fn removal_disconnects(
    rows: &[u64],
    edges: &[(usize, usize)],
    subset: &[usize],
    scratch: &mut [u64],
    full: u64,
) -> bool {
    scratch.copy_from_slice(rows);
    for &e in subset {
        let (u, v) = edges[e];
        scratch[u] &= !(1u64 << v);
        scratch[v] &= !(1u64 << u);
    }
    let mut reach = 1u64;
    loop {
        let mut next = reach;
        let mut frontier = reach;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            next |= scratch[v];
            frontier &= frontier - 1;
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    reach != full
}

/// Visits all k-subsets of `0..m` in lexicographic order.
fn for_each_combination(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance odometer
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub(crate) fn binomial(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul((m - i) as u128) / (i as u128 + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn lambda_of_cycles_wheels_trees() {
        assert_eq!(edge_connectivity(&graph::cycle(7).unwrap()), 2);
        assert_eq!(edge_connectivity(&graph::wheel(6).unwrap()), 3);
        for seed in 0..5 {
            let t = graph::random_tree(6, seed).unwrap();
            assert_eq!(edge_connectivity(&t), 1);
        }
        assert_eq!(edge_connectivity(&graph::path(1).unwrap()), 0);
        assert_eq!(edge_connectivity(&graph::empty_graph(3).unwrap()), 0);
    }

    #[test]
    fn cycle4_has_all_six_pairs() {
        let fam = enumerate_mincuts(&graph::cycle(4).unwrap(), limits()).unwrap();
        assert_eq!(fam.lambda, 2);
        assert_eq!(
            fam.cuts,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn path3_cuts_are_single_edges() {
        let fam = enumerate_mincuts(&graph::path(3).unwrap(), limits()).unwrap();
        assert_eq!(fam.lambda, 1);
        assert_eq!(fam.cuts, vec![vec![0], vec![1]]);
    }

    #[test]
    fn petersen_cuts_are_the_vertex_stars() {
        let g = graph::petersen();
        let fam = enumerate_mincuts(&g, limits()).unwrap();
        assert_eq!(fam.lambda, 3);
        assert_eq!(fam.count(), 10);
        let stars: BTreeSet<Vec<usize>> = (0..10).map(|v| g.star(v)).collect();
        let got: BTreeSet<Vec<usize>> = fam.cuts.iter().cloned().collect();
        assert_eq!(got, stars);
        // Cross-check with the subset oracle.
        assert_eq!(brute_force_mincuts(&g, limits()).unwrap(), fam);
    }

    #[test]
    fn k4_cuts_are_the_four_stars() {
        let g = graph::complete(4).unwrap();
        let fam = brute_force_mincuts(&g, limits()).unwrap();
        assert_eq!(fam.lambda, 3);
        assert_eq!(fam.count(), 4);
        for v in 0..4 {
            assert!(fam.cuts.contains(&g.star(v)));
        }
    }

    #[test]
    fn w6_cuts_are_the_rim_stars() {
        let g = graph::wheel(6).unwrap();
        let fam = brute_force_mincuts(&g, limits()).unwrap();
        assert_eq!(fam.lambda, 3);
        assert_eq!(fam.count(), 5);
        for v in 1..6 {
            assert!(fam.cuts.contains(&g.star(v)));
        }
        assert_eq!(fam, enumerate_mincuts(&g, limits()).unwrap());
    }

    /// Five-edge cuts that are minimal (no proper subset disconnects) exist
    /// in both the wheel on six vertices and the Petersen graph, yet they
    /// are not minimum cuts and must not be enumerated.
    #[test]
    fn minimal_but_not_minimum_cuts_are_excluded() {
        let w6 = graph::wheel(6).unwrap();
        // Boundary of three consecutive rim vertices: three spokes plus the
        // two rim edges leaving the arc.
        let arc_cut = boundary_of(&w6, &[1, 2, 3]);
        assert_eq!(arc_cut.len(), 5);
        assert_minimal_cut(&w6, &arc_cut);
        let fam = enumerate_mincuts(&w6, limits()).unwrap();
        assert!(!fam.cuts.contains(&arc_cut));
        assert!(fam.cuts.iter().all(|c| c.len() == 3));

        let pet = graph::petersen();
        // The five spokes separate the outer cycle from the inner one.
        let spokes = boundary_of(&pet, &[0, 1, 2, 3, 4]);
        assert_eq!(spokes.len(), 5);
        assert_minimal_cut(&pet, &spokes);
        let fam = enumerate_mincuts(&pet, limits()).unwrap();
        assert!(!fam.cuts.contains(&spokes));
    }

    fn boundary_of(g: &Graph, side: &[usize]) -> Vec<usize> {
        let inside: std::collections::HashSet<usize> = side.iter().copied().collect();
        g.edges()
            .iter()
            .enumerate()
            .filter(|&(_, &(u, v))| inside.contains(&u) != inside.contains(&v))
            .map(|(e, _)| e)
            .collect()
    }

    fn removal_leaves_connected(g: &Graph, cut: &[usize]) -> bool {
        let keep: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(e, _)| !cut.contains(e))
            .map(|(_, &p)| p)
            .collect();
        Graph::new(g.n(), keep).unwrap().is_connected()
    }

    fn assert_minimal_cut(g: &Graph, cut: &[usize]) {
        assert!(!removal_leaves_connected(g, cut), "must disconnect");
        for skip in 0..cut.len() {
            let sub: Vec<usize> = cut
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &e)| e)
                .collect();
            assert!(
                removal_leaves_connected(g, &sub),
                "proper subset must not disconnect"
            );
        }
    }

    #[test]
    fn complete_bipartite_cuts_are_large_side_stars() {
        for m in 2..4usize {
            for n in (m + 1)..6 {
                let g = graph::complete_bipartite(m, n).unwrap();
                let fam = enumerate_mincuts(&g, limits()).unwrap();
                assert_eq!(fam.lambda, m);
                assert_eq!(fam.count(), n, "K({m},{n})");
                for v in m..m + n {
                    assert!(fam.cuts.contains(&g.star(v)));
                }
            }
        }
    }

    #[test]
    fn disconnected_and_tiny_graphs_yield_empty_families() {
        for g in [
            graph::empty_graph(3).unwrap(),
            graph::complete(1).unwrap(),
            Graph::null(),
        ] {
            let fam = enumerate_mincuts(&g, limits()).unwrap();
            assert_eq!(fam, MincutFamily::empty());
            assert_eq!(brute_force_mincuts(&g, limits()).unwrap(), fam);
        }
    }

    #[test]
    fn every_cut_splits_into_exactly_two_components() {
        for g in [
            graph::cycle(6).unwrap(),
            graph::wheel(7).unwrap(),
            graph::petersen(),
            graph::complete_bipartite(2, 4).unwrap(),
        ] {
            let fam = enumerate_mincuts(&g, limits()).unwrap();
            for cut in &fam.cuts {
                let keep: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(e, _)| !cut.contains(e))
                    .map(|(_, &p)| p)
                    .collect();
                let h = Graph::new(g.n(), keep).unwrap();
                assert_eq!(h.connected_components().len(), 2);
            }
        }
    }

    #[test]
    fn size_guards_fire() {
        let big = graph::cycle(30).unwrap();
        assert!(matches!(
            enumerate_mincuts(&big, Limits::default()),
            Err(Error::SizeLimitExceeded(_))
        ));
        let tight = Limits {
            max_n: 24,
            max_subsets: 3,
        };
        assert!(matches!(
            brute_force_mincuts(&graph::cycle(6).unwrap(), tight),
            Err(Error::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(15, 3), 455);
        assert_eq!(binomial(28, 7), 1_184_040);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn combination_visitor_is_exhaustive() {
        let mut seen = Vec::new();
        for_each_combination(5, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen.first().unwrap(), &vec![0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &vec![2, 3, 4]);
        let sorted = {
            let mut s = seen.clone();
            s.sort();
            s
        };
        assert_eq!(seen, sorted);
    }
}
