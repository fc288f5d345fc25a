//! Inverse construction and set-representation search.
//!
//! [`synthesize_host`] builds, for a target graph `G`, a host graph `H`
//! whose mincut graph is isomorphic to `G`: take the disjoint union of `G`
//! with a clique whose connectivity exceeds a target degree `t`, raise every
//! `G`-vertex to degree `t` with edges into the clique, verify by full cut
//! enumeration, and bump `t` when verification fails.
//!
//! [`r_intersection_number`] finds the smallest universe admitting an
//! r-uniform set family whose intersection graph is exactly `G`, optionally
//! under the cut-style constraints (pairwise intersections of at most one
//! element, no element in three or more subsets).

use serde::Serialize;

use crate::intersection::build_mincut_graph;
use crate::iso::IsoResult;
use crate::{Error, Graph, Limits, Result};

/// A verified host construction.
#[derive(Clone, Debug, Serialize)]
pub struct SynthesisReport {
    pub host: Graph,
    /// Host vertex carrying each target vertex; the embedding is identity.
    pub embedded_vertices: Vec<usize>,
    /// Degree every embedded vertex was raised to.
    pub target_degree: usize,
    /// Order of the attached clique (`target_degree + 2`).
    pub clique_size: usize,
    /// Number of target-degree bumps spent before verification succeeded.
    pub retries: usize,
    /// Witness that the host's mincut graph is isomorphic to the target.
    pub verified: IsoResult,
}

/// Builds and verifies a host whose mincut graph is isomorphic to `g`.
///
/// The target degree starts at `max(maximum degree of g, 2)` and is bumped
/// by one after each failed verification, up to `max_retries` bumps.
/// Disconnected targets work unchanged: every component attaches to the one
/// clique.
pub fn synthesize_host(g: &Graph, max_retries: usize, limits: Limits) -> Result<SynthesisReport> {
    if g.n() == 0 {
        return Err(Error::BadParams(
            "synthesis needs at least one vertex".into(),
        ));
    }
    if max_retries < 1 {
        return Err(Error::BadParams("max_retries must be at least 1".into()));
    }
    let base_degree = g.degree_profile().delta_max.max(2);
    for bumps in 0..=max_retries {
        let t = base_degree + bumps;
        let host = build_host(g, t);
        let x = build_mincut_graph(&host, limits)?;
        let verified = crate::iso::isomorphic(&x.graph, g)?;
        if verified.isomorphic {
            return Ok(SynthesisReport {
                host,
                embedded_vertices: (0..g.n()).collect(),
                target_degree: t,
                clique_size: t + 2,
                retries: bumps,
                verified,
            });
        }
    }
    Err(Error::RetriesExhausted(max_retries))
}

/// Disjoint union of `g` and a clique of order `t + 2`, with `t - deg(v)`
/// edges added from each target vertex `v` into the clique, targets chosen
/// round-robin. Edge id layout: the edges of `g` (ids as in `g`), the clique
/// edges, then the cross edges in vertex order.
fn build_host(g: &Graph, t: usize) -> Graph {
    let n = g.n();
    let clique = t + 2; // smallest clique with connectivity above t
    let mut pairs = g.edges().to_vec();
    for i in 0..clique {
        for j in i + 1..clique {
            pairs.push((n + i, n + j));
        }
    }
    let mut next_target = 0usize;
    for v in 0..n {
        for _ in g.degree(v)..t {
            pairs.push((v, n + next_target % clique));
            next_target += 1;
        }
    }
    Graph::new(n + clique, pairs).expect("host pairs are canonical")
}

/// Upper bound on the universe size of a cut-style representation obtained
/// from the host construction: `n * D - m` edges with target degree `D`, or
/// `n * (D + 1) - m` when the degree had to be bumped once.
pub fn ix_upper_bound(g: &Graph, bumped: bool) -> usize {
    let d = g.degree_profile().delta_max + usize::from(bumped);
    g.n() * d - g.m()
}

/// An r-uniform set family realizing a graph as an intersection graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionCertificate {
    pub universe_size: usize,
    pub r: usize,
    pub constrained: bool,
    /// One sorted subset of `1..=universe_size` per vertex.
    pub subsets: Vec<Vec<u32>>,
}

/// Finds the minimum universe size admitting an r-uniform family of distinct
/// subsets whose intersection graph is exactly `g`, by exhaustive search
/// over universe sizes `r..=max_universe`.
///
/// With `constrained` set, every pairwise intersection has at most one
/// element and no element appears in three or more subsets. Symmetry is
/// pruned by fixing vertex 0 to `{1..r}` and forcing unused universe
/// elements to enter in consecutive ascending blocks.
pub fn r_intersection_number(
    g: &Graph,
    r: usize,
    constrained: bool,
    max_universe: usize,
    limits: Limits,
) -> Result<IntersectionCertificate> {
    if r == 0 {
        return Err(Error::BadParams("subset size r must be at least 1".into()));
    }
    if g.n() == 0 {
        return Ok(IntersectionCertificate {
            universe_size: 0,
            r,
            constrained,
            subsets: Vec::new(),
        });
    }
    let mut budget = limits.max_subsets;
    for s in r..=max_universe {
        let mut state = Search {
            g,
            r,
            s,
            constrained,
            budget: &mut budget,
            chosen: Vec::with_capacity(g.n()),
            use_count: vec![0u8; s + 1],
            max_used: r,
        };
        let first: Vec<u32> = (1..=r as u32).collect();
        for e in 1..=r {
            state.use_count[e] = 1;
        }
        state.chosen.push(first);
        if state.extend(1)? {
            return Ok(IntersectionCertificate {
                universe_size: s,
                r,
                constrained,
                subsets: state.chosen,
            });
        }
    }
    Err(Error::NotFoundWithinBound(max_universe))
}

struct Search<'a> {
    g: &'a Graph,
    r: usize,
    s: usize,
    constrained: bool,
    budget: &'a mut u64,
    chosen: Vec<Vec<u32>>,
    use_count: Vec<u8>,
    max_used: usize,
}

impl Search<'_> {
    fn extend(&mut self, vertex: usize) -> Result<bool> {
        if vertex == self.g.n() {
            return Ok(true);
        }
        for cand in self.candidates() {
            if *self.budget == 0 {
                return Err(Error::SizeLimitExceeded(
                    "set-family search exceeded the subset budget".into(),
                ));
            }
            *self.budget -= 1;
            if !self.compatible(vertex, &cand) {
                continue;
            }
            let saved_max = self.max_used;
            for &e in &cand {
                self.use_count[e as usize] += 1;
                self.max_used = self.max_used.max(e as usize);
            }
            self.chosen.push(cand);
            if self.extend(vertex + 1)? {
                return Ok(true);
            }
            let cand = self.chosen.pop().expect("just pushed");
            for &e in &cand {
                self.use_count[e as usize] -= 1;
            }
            self.max_used = saved_max;
        }
        Ok(false)
    }

    /// All admissible subsets for the next vertex, ascending
    /// lexicographically: any combination of already-introduced elements
    /// padded with the next consecutive block of fresh ones.
    fn candidates(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for fresh in 0..=self.r {
            let old = self.r - fresh;
            if old > self.max_used || self.max_used + fresh > self.s {
                continue;
            }
            let block: Vec<u32> =
                (self.max_used as u32 + 1..=(self.max_used + fresh) as u32).collect();
            let mut cur = Vec::with_capacity(old);
            collect_combinations(self.max_used as u32, old, 1, &mut cur, &mut |combo| {
                let mut cand = combo.to_vec();
                cand.extend_from_slice(&block);
                out.push(cand);
            });
        }
        out.sort();
        out
    }

    fn compatible(&self, vertex: usize, cand: &[u32]) -> bool {
        if self.constrained {
            for &e in cand {
                if self.use_count[e as usize] >= 2 {
                    return false;
                }
            }
        }
        for (other, subset) in self.chosen.iter().enumerate() {
            let inter = count_intersection(cand, subset);
            if inter == self.r {
                return false; // identical subsets are never allowed
            }
            let adjacent = self.g.has_edge(vertex, other);
            let ok = if adjacent {
                if self.constrained {
                    inter == 1
                } else {
                    inter >= 1
                }
            } else {
                inter == 0
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Visits all k-subsets of `from..=max` in lexicographic order.
fn collect_combinations(
    max: u32,
    k: usize,
    from: u32,
    cur: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if cur.len() == k {
        f(cur);
        return;
    }
    let mut x = from;
    while x <= max {
        if (max - x + 1) as usize + cur.len() < k {
            break;
        }
        cur.push(x);
        collect_combinations(max, k, x + 1, cur, f);
        cur.pop();
        x += 1;
    }
}

fn count_intersection(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Rebuilds the intersection graph of a certificate; used to validate
/// certificates independently of the search.
pub fn certificate_intersection_graph(cert: &IntersectionCertificate) -> Graph {
    let k = cert.subsets.len();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if count_intersection(&cert.subsets[i], &cert.subsets[j]) > 0 {
                pairs.push((i, j));
            }
        }
    }
    Graph::new(k, pairs).expect("certificate pairs are canonical")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mincut::enumerate_mincuts;
    use crate::{graph, iso};
    use std::collections::BTreeSet;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn star_target_verifies_without_bumps() {
        let g = graph::star(4).unwrap();
        let rep = synthesize_host(&g, 4, limits()).unwrap();
        assert_eq!(rep.target_degree, 3);
        assert_eq!(rep.clique_size, 5);
        assert_eq!(rep.retries, 0);
        assert!(rep.verified.isomorphic);
        for &v in &rep.embedded_vertices {
            assert_eq!(rep.host.degree(v), rep.target_degree);
        }
    }

    #[test]
    fn paw_needs_one_bump() {
        let rep = synthesize_host(&graph::paw(), 4, limits()).unwrap();
        assert_eq!(rep.target_degree, 4);
        assert_eq!(rep.retries, 1);
        assert!(rep.verified.isomorphic);
        // The degree-3 attempt fails because of a cross mincut.
        let host3 = build_host(&graph::paw(), 3);
        let x3 = build_mincut_graph(&host3, limits()).unwrap();
        assert!(
            !iso::isomorphic(&x3.graph, &graph::paw())
                .unwrap()
                .isomorphic
        );
        assert_eq!(x3.graph.n(), 5, "one extra mincut beyond the four stars");
    }

    #[test]
    fn single_edge_target_needs_one_bump() {
        let g = graph::complete(2).unwrap();
        // Verified against full enumeration of each candidate host.
        let host2 = build_host(&g, 2);
        let fam2 = enumerate_mincuts(&host2, limits()).unwrap();
        assert_eq!(fam2.count(), 3, "cross pair forms a third cut at t=2");
        let rep = synthesize_host(&g, 4, limits()).unwrap();
        assert_eq!(rep.target_degree, 3);
        assert_eq!(rep.retries, 1);
    }

    #[test]
    fn verified_hosts_have_exactly_the_embedded_stars_as_cuts() {
        for g in [
            graph::star(4).unwrap(),
            graph::paw(),
            graph::cycle(5).unwrap(),
            graph::complete(4).unwrap(),
        ] {
            let rep = synthesize_host(&g, 4, limits()).unwrap();
            let fam = enumerate_mincuts(&rep.host, limits()).unwrap();
            assert_eq!(fam.count(), g.n());
            let stars: BTreeSet<Vec<usize>> = rep
                .embedded_vertices
                .iter()
                .map(|&v| rep.host.star(v))
                .collect();
            let cuts: BTreeSet<Vec<usize>> = fam.cuts.iter().cloned().collect();
            assert_eq!(cuts, stars);
        }
    }

    #[test]
    fn disconnected_targets_attach_to_one_clique() {
        let g = graph::complete(3)
            .unwrap()
            .disjoint_union(&graph::complete(3).unwrap());
        let rep = synthesize_host(&g, 4, limits()).unwrap();
        assert!(rep.verified.isomorphic);
        assert!(rep.host.is_connected());
    }

    #[test]
    fn retries_can_exhaust() {
        // With a single allowed bump the regular 4-clique cannot verify:
        // t=3 leaves the host disconnected and t=4 has a cross mincut.
        let res = synthesize_host(&graph::complete(4).unwrap(), 1, limits());
        assert_eq!(res.unwrap_err(), Error::RetriesExhausted(1));
    }

    #[test]
    fn bad_synthesis_params() {
        assert!(matches!(
            synthesize_host(&Graph::null(), 4, limits()),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            synthesize_host(&graph::paw(), 0, limits()),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn ix_bounds_arithmetic() {
        let paw = graph::paw();
        assert_eq!(ix_upper_bound(&paw, true), 12);
        assert_eq!(ix_upper_bound(&paw, false), 8);
        assert_eq!(ix_upper_bound(&graph::cycle(5).unwrap(), false), 5);
        for g in [paw, graph::wheel(6).unwrap(), graph::star(5).unwrap()] {
            assert_eq!(ix_upper_bound(&g, true) - ix_upper_bound(&g, false), g.n());
        }
    }

    /// Unpruned reference search: tries every assignment of r-subsets of
    /// `1..=s` to the vertices. Exists so the pruned search can be
    /// cross-checked on small cases.
    fn oracle_family_exists(g: &Graph, r: usize, s: usize, constrained: bool) -> bool {
        let universe: Vec<u32> = (1..=s as u32).collect();
        let mut all_subsets = Vec::new();
        subsets_of_size(&universe, r, &mut Vec::new(), 0, &mut all_subsets);
        fn subsets_of_size(
            u: &[u32],
            r: usize,
            cur: &mut Vec<u32>,
            from: usize,
            out: &mut Vec<Vec<u32>>,
        ) {
            if cur.len() == r {
                out.push(cur.clone());
                return;
            }
            for i in from..u.len() {
                cur.push(u[i]);
                subsets_of_size(u, r, cur, i + 1, out);
                cur.pop();
            }
        }
        fn assign(g: &Graph, all: &[Vec<u32>], constrained: bool, chosen: &mut Vec<usize>) -> bool {
            let v = chosen.len();
            if v == g.n() {
                return true;
            }
            'next: for (si, subset) in all.iter().enumerate() {
                for (w, &wi) in chosen.iter().enumerate() {
                    if wi == si {
                        continue 'next;
                    }
                    let inter = count_intersection(subset, &all[wi]);
                    let ok = if g.has_edge(v, w) {
                        if constrained {
                            inter == 1
                        } else {
                            inter >= 1
                        }
                    } else {
                        inter == 0
                    };
                    if !ok {
                        continue 'next;
                    }
                }
                if constrained {
                    let mut counts = std::collections::HashMap::new();
                    for &wi in chosen.iter() {
                        for &e in &all[wi] {
                            *counts.entry(e).or_insert(0) += 1;
                        }
                    }
                    for &e in subset {
                        if *counts.get(&e).unwrap_or(&0) >= 2 {
                            continue 'next;
                        }
                    }
                }
                chosen.push(si);
                if assign(g, all, constrained, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        assign(g, &all_subsets, constrained, &mut Vec::new())
    }

    #[test]
    fn paw_constrained_minimum_is_eight() {
        let paw = graph::paw();
        // Oracle: no constrained family exists on 7 or fewer elements.
        for s in 3..=7 {
            assert!(!oracle_family_exists(&paw, 3, s, true), "s={s}");
        }
        assert!(oracle_family_exists(&paw, 3, 8, true));
        let cert = r_intersection_number(&paw, 3, true, 12, limits()).unwrap();
        assert_eq!(cert.universe_size, 8);
        let rebuilt = certificate_intersection_graph(&cert);
        assert!(iso::isomorphic(&rebuilt, &paw).unwrap().isomorphic);
        // Constraint audit on the returned family.
        let mut counts = std::collections::HashMap::new();
        for subset in &cert.subsets {
            for &e in subset {
                *counts.entry(e).or_insert(0usize) += 1;
            }
        }
        assert!(counts.values().all(|&c| c <= 2));
    }

    #[test]
    fn paw_unconstrained_minimum_is_seven() {
        let paw = graph::paw();
        assert!(!oracle_family_exists(&paw, 3, 6, false));
        assert!(oracle_family_exists(&paw, 3, 7, false));
        let cert = r_intersection_number(&paw, 3, false, 12, limits()).unwrap();
        assert!(cert.universe_size <= 7);
        assert_eq!(cert.universe_size, 7);
        let rebuilt = certificate_intersection_graph(&cert);
        assert!(iso::isomorphic(&rebuilt, &paw).unwrap().isomorphic);
    }

    #[test]
    fn star_unconstrained_needs_nine() {
        let g = graph::star(4).unwrap();
        let cert = r_intersection_number(&g, 3, false, 9, limits()).unwrap();
        assert_eq!(cert.universe_size, 9);
        assert!(!oracle_family_exists(&g, 3, 8, false));
        let rebuilt = certificate_intersection_graph(&cert);
        assert!(iso::isomorphic(&rebuilt, &g).unwrap().isomorphic);
    }

    #[test]
    fn constraints_never_shrink_the_universe() {
        for g in [
            graph::paw(),
            graph::cycle(4).unwrap(),
            graph::path(3).unwrap(),
        ] {
            let free = r_intersection_number(&g, 3, false, 12, limits()).unwrap();
            let tight = r_intersection_number(&g, 3, true, 12, limits()).unwrap();
            assert!(free.universe_size <= tight.universe_size);
        }
    }

    #[test]
    fn unreachable_bounds_error_out() {
        // Two adjacent vertices cannot carry distinct 1-subsets that meet.
        let res = r_intersection_number(&graph::complete(2).unwrap(), 1, false, 6, limits());
        assert_eq!(res.unwrap_err(), Error::NotFoundWithinBound(6));
    }

    #[test]
    fn certificates_are_deterministic() {
        let a = r_intersection_number(&graph::paw(), 3, true, 12, limits()).unwrap();
        let b = r_intersection_number(&graph::paw(), 3, true, 12, limits()).unwrap();
        assert_eq!(a, b);
    }
}
