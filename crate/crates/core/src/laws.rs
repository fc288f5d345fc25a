//! Verifiers for the structural laws connecting graph families to their
//! mincut graphs, plus per-graph property reports and the small-graph dual
//! search.
//!
//! Every verifier builds both sides of its claim independently: the left via
//! cut enumeration and intersection, the right via direct construction, and
//! then demands an exact isomorphism witness.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::atlas::connected_atlas;
use crate::intersection::build_mincut_graph;
use crate::iso::{canonical_certificate, isomorphic};
use crate::mincut::enumerate_mincuts;
use crate::{graph, Error, Graph, Limits, Result};

/// Structural summary of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub lambda: usize,
    pub delta: usize,
    pub is_regular: bool,
    /// Common degree when regular.
    pub r: Option<usize>,
    /// `lambda == delta`.
    pub is_maximally_edge_connected: bool,
    /// Maximally edge-connected and every mincut is the star of a
    /// minimum-degree vertex.
    pub is_super_lambda: bool,
    /// The mincut graph is isomorphic to the graph itself.
    pub is_self_dual: bool,
}

/// Computes the property report; errors on disconnected input.
pub fn property_report(g: &Graph, limits: Limits) -> Result<PropertyReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let profile = g.degree_profile();
    let family = enumerate_mincuts(g, limits)?;
    let lambda = family.lambda;
    let delta = profile.delta_min;
    let is_regular = profile.delta_min == profile.delta_max;
    let is_maximally_edge_connected = lambda == delta;
    let trivial: HashSet<Vec<usize>> = profile.v_delta.iter().map(|&v| g.star(v)).collect();
    let is_super_lambda =
        is_maximally_edge_connected && family.cuts.iter().all(|c| trivial.contains(c));
    let x = build_mincut_graph(g, limits)?;
    let is_self_dual = isomorphic(&x.graph, g)?.isomorphic;
    Ok(PropertyReport {
        lambda,
        delta,
        is_regular,
        r: if is_regular { Some(delta) } else { None },
        is_maximally_edge_connected,
        is_super_lambda,
        is_self_dual,
    })
}

/// Outcome of one law verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawVerdict {
    pub holds: bool,
    /// Isomorphism witness between the two constructed sides, when one was
    /// produced.
    pub witness: Option<Vec<usize>>,
    pub detail: String,
}

impl LawVerdict {
    fn fail(detail: impl Into<String>) -> Self {
        LawVerdict {
            holds: false,
            witness: None,
            detail: detail.into(),
        }
    }

    fn from_iso(lhs: &Graph, rhs: &Graph, detail: impl Into<String>) -> Result<Self> {
        let iso = isomorphic(lhs, rhs)?;
        Ok(LawVerdict {
            holds: iso.isomorphic,
            witness: iso.mapping,
            detail: detail.into(),
        })
    }
}

/// The mincut graph of a tree on `n` vertices is edgeless on `n - 1`
/// vertices.
pub fn verify_tree_law(tree: &Graph, limits: Limits) -> Result<LawVerdict> {
    if !tree.is_connected() || tree.m() + 1 != tree.n() {
        return Ok(LawVerdict::fail("input is not a tree"));
    }
    let x = build_mincut_graph(tree, limits)?;
    let rhs = graph::empty_graph(tree.n() - 1)?;
    LawVerdict::from_iso(
        &x.graph,
        &rhs,
        format!(
            "mincut graph of a {}-vertex tree vs {} isolated vertices",
            tree.n(),
            tree.n() - 1
        ),
    )
}

/// The mincut graph of the complete bipartite graph with parts `m < n` is
/// edgeless on `n` vertices.
pub fn verify_complete_bipartite_law(m: usize, n: usize, limits: Limits) -> Result<LawVerdict> {
    if m == 0 || m >= n {
        return Err(Error::BadParams("requires 1 <= m < n".into()));
    }
    let g = graph::complete_bipartite(m, n)?;
    let x = build_mincut_graph(&g, limits)?;
    let rhs = graph::empty_graph(n)?;
    LawVerdict::from_iso(
        &x.graph,
        &rhs,
        format!("mincut graph of K({m},{n}) vs {n} isolated vertices"),
    )
}

/// The mincut graph of the `n`-cycle is the line graph of the complete graph
/// on `n` vertices.
pub fn verify_cycle_law(n: usize, limits: Limits) -> Result<LawVerdict> {
    let g = graph::cycle(n)?;
    let x = build_mincut_graph(&g, limits)?;
    let rhs = graph::complete(n)?.line_graph();
    LawVerdict::from_iso(
        &x.graph,
        &rhs,
        format!("mincut graph of C{n} vs line graph of K{n}"),
    )
}

/// The mincut graph of the wheel on `n >= 5` vertices is the cycle on
/// `n - 1` vertices.
pub fn verify_wheel_law(n: usize, limits: Limits) -> Result<LawVerdict> {
    if n < 5 {
        return Err(Error::BadParams(
            "wheel law needs n >= 5; the 4-wheel is complete".into(),
        ));
    }
    let g = graph::wheel(n)?;
    let x = build_mincut_graph(&g, limits)?;
    let rhs = graph::cycle(n - 1)?;
    LawVerdict::from_iso(
        &x.graph,
        &rhs,
        format!("mincut graph of W{n} vs C{}", n - 1),
    )
}

/// A regular super-lambda graph is isomorphic to its own mincut graph.
pub fn verify_self_dual_law(g: &Graph, limits: Limits) -> Result<LawVerdict> {
    let report = property_report(g, limits)?;
    if !report.is_regular || !report.is_super_lambda {
        return Ok(LawVerdict::fail(
            "precondition failed: graph is not regular and super-lambda",
        ));
    }
    let x = build_mincut_graph(g, limits)?;
    LawVerdict::from_iso(&x.graph, g, "mincut graph vs the graph itself")
}

/// The mincut graph of `K_n x K_2` (`n >= 3`) is the vertex join of the
/// product, and the cut not accounted for by a vertex star is exactly the
/// matching between the two copies.
pub fn verify_cartesian_law(n: usize, limits: Limits) -> Result<LawVerdict> {
    if n < 3 {
        return Err(Error::BadParams("cartesian law needs n >= 3".into()));
    }
    let product = graph::complete(n)?.cartesian_product_k2();
    let family = enumerate_mincuts(&product, limits)?;
    let stars: BTreeSet<Vec<usize>> = (0..product.n()).map(|v| product.star(v)).collect();
    let extras: Vec<&Vec<usize>> = family.cuts.iter().filter(|c| !stars.contains(*c)).collect();
    let matching: Vec<usize> = (2 * graph::complete(n)?.m()..product.m()).collect();
    if extras.len() != 1 || extras[0] != &matching {
        return Ok(LawVerdict::fail(format!(
            "expected exactly the copy-matching as the extra mincut, found {extras:?}"
        )));
    }
    let x = build_mincut_graph(&product, limits)?;
    let rhs = product.vertex_join();
    LawVerdict::from_iso(
        &x.graph,
        &rhs,
        format!("mincut graph of K{n} x K2 vs its vertex join; extra cut is the matching"),
    )
}

/// For a super-lambda graph the mincut graph is the subgraph induced by the
/// minimum-degree vertices.
pub fn verify_vdelta_law(g: &Graph, limits: Limits) -> Result<LawVerdict> {
    let report = property_report(g, limits)?;
    if !report.is_super_lambda {
        return Ok(LawVerdict::fail(
            "precondition failed: graph is not super-lambda",
        ));
    }
    let profile = g.degree_profile();
    let induced = g.induced_subgraph(&profile.v_delta)?;
    let x = build_mincut_graph(g, limits)?;
    LawVerdict::from_iso(
        &x.graph,
        &induced,
        format!(
            "mincut graph vs subgraph induced by the {} minimum-degree vertices",
            profile.v_delta.len()
        ),
    )
}

/// Two super-lambda graphs whose minimum-degree-induced subgraphs are
/// isomorphic have isomorphic mincut graphs.
pub fn verify_vdelta_pair_law(g: &Graph, h: &Graph, limits: Limits) -> Result<LawVerdict> {
    for (name, gr) in [("first", g), ("second", h)] {
        if !property_report(gr, limits)?.is_super_lambda {
            return Ok(LawVerdict::fail(format!(
                "precondition failed: {name} graph is not super-lambda"
            )));
        }
    }
    let sub_g = g.induced_subgraph(&g.degree_profile().v_delta)?;
    let sub_h = h.induced_subgraph(&h.degree_profile().v_delta)?;
    if !isomorphic(&sub_g, &sub_h)?.isomorphic {
        return Ok(LawVerdict::fail(
            "precondition failed: induced minimum-degree subgraphs differ",
        ));
    }
    let xg = build_mincut_graph(g, limits)?;
    let xh = build_mincut_graph(h, limits)?;
    LawVerdict::from_iso(&xg.graph, &xh.graph, "mincut graphs of the two hosts")
}

/// One row of the law-suite table.
#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub params: String,
    pub holds: bool,
    pub witness_size: usize,
    pub detail: String,
}

fn report(law: &str, params: String, verdict: LawVerdict) -> LawReport {
    LawReport {
        law: law.to_string(),
        params,
        holds: verdict.holds,
        witness_size: verdict.witness.map(|w| w.len()).unwrap_or(0),
        detail: verdict.detail,
    }
}

/// Cycle with two extra vertices each adjacent to every cycle vertex; a
/// non-wheel graph whose minimum-degree vertices induce the same cycle as a
/// wheel's rim.
fn two_hub_cycle(rim: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    for hub in [rim, rim + 1] {
        pairs.extend((0..rim).map(|v| (v, hub)));
    }
    Graph::new(rim + 2, pairs).expect("gadget pairs are canonical")
}

/// Runs the whole default grid of law checks; `seed` controls the random
/// trees.
pub fn run_default_suite(seed: u64, limits: Limits) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for i in 0..20u64 {
        let n = 3 + (i as usize % 8);
        let tree = graph::random_tree(n, seed.wrapping_add(i))?;
        out.push(report(
            "tree-edgeless",
            format!("n={n} seed={}", seed.wrapping_add(i)),
            verify_tree_law(&tree, limits)?,
        ));
    }
    for m in 1..=5usize {
        for n in m + 1..=6 {
            out.push(report(
                "bipartite-edgeless",
                format!("m={m} n={n}"),
                verify_complete_bipartite_law(m, n, limits)?,
            ));
        }
    }
    for n in 3..=8usize {
        out.push(report(
            "cycle-line-complete",
            format!("n={n}"),
            verify_cycle_law(n, limits)?,
        ));
    }
    for n in 5..=9usize {
        out.push(report(
            "wheel-cycle",
            format!("n={n}"),
            verify_wheel_law(n, limits)?,
        ));
    }
    for n in 3..=5usize {
        out.push(report(
            "self-dual-complete",
            format!("n={n}"),
            verify_self_dual_law(&graph::complete(n)?, limits)?,
        ));
        out.push(report(
            "self-dual-bipartite",
            format!("n={n}"),
            verify_self_dual_law(&graph::complete_bipartite(n, n)?, limits)?,
        ));
        out.push(report(
            "self-dual-line-complete",
            format!("n={n}"),
            verify_self_dual_law(&graph::complete(n)?.line_graph(), limits)?,
        ));
    }
    out.push(report(
        "self-dual-petersen",
        String::new(),
        verify_self_dual_law(&graph::petersen(), limits)?,
    ));
    for n in 3..=5usize {
        out.push(report(
            "cartesian-vertex-join",
            format!("n={n}"),
            verify_cartesian_law(n, limits)?,
        ));
    }
    for n in 5..=9usize {
        out.push(report(
            "vdelta-induced",
            format!("wheel n={n}"),
            verify_vdelta_law(&graph::wheel(n)?, limits)?,
        ));
    }
    out.push(report(
        "vdelta-pair",
        "wheel n=6 vs two-hub 5-cycle".into(),
        verify_vdelta_pair_law(&graph::wheel(6)?, &two_hub_cycle(5), limits)?,
    ));
    Ok(out)
}

/// Result of the exhaustive dual search over the connected atlas.
#[derive(Clone, Debug, Serialize)]
pub struct DualSearchReport {
    pub max_n: usize,
    /// Graphs isomorphic to their own mincut graph.
    pub self_dual: Vec<Graph>,
    /// Unordered pairs of non-isomorphic graphs that are each other's
    /// mincut graphs.
    pub dual_pairs: Vec<(Graph, Graph)>,
}

/// Searches all connected graphs on up to `max_n <= 7` vertices for dual
/// pairs and self-dual graphs.
pub fn search_mincut_duals(max_n: usize, limits: Limits) -> Result<DualSearchReport> {
    if max_n == 0 {
        return Err(Error::BadParams("dual search needs max_n >= 1".into()));
    }
    if max_n > 7 {
        return Err(Error::SizeLimitExceeded(
            "dual search capped at 7 vertices".into(),
        ));
    }
    let atlas = connected_atlas(max_n)?;
    let certs: Vec<Vec<u8>> = atlas
        .iter()
        .map(canonical_certificate)
        .collect::<Result<_>>()?;
    let index: HashMap<&[u8], usize> = certs
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();
    // Index of the atlas member isomorphic to X(G), when there is one.
    let mut image: Vec<Option<usize>> = Vec::with_capacity(atlas.len());
    for g in &atlas {
        let x = build_mincut_graph(g, limits)?.graph;
        if x.n() == 0 || x.n() > max_n {
            image.push(None);
            continue;
        }
        let cert = canonical_certificate(&x)?;
        image.push(index.get(cert.as_slice()).copied());
    }
    let mut self_dual = Vec::new();
    let mut dual_pairs = Vec::new();
    for (i, img) in image.iter().enumerate() {
        match img {
            Some(j) if *j == i => self_dual.push(atlas[i].clone()),
            Some(j) if *j > i && image[*j] == Some(i) => {
                dual_pairs.push((atlas[i].clone(), atlas[*j].clone()));
            }
            _ => {}
        }
    }
    Ok(DualSearchReport {
        max_n,
        self_dual,
        dual_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn k5_report() {
        let rep = property_report(&graph::complete(5).unwrap(), limits()).unwrap();
        assert_eq!(rep.lambda, 4);
        assert_eq!(rep.delta, 4);
        assert!(rep.is_regular);
        assert_eq!(rep.r, Some(4));
        assert!(rep.is_maximally_edge_connected);
        assert!(rep.is_super_lambda);
        assert!(rep.is_self_dual);
    }

    #[test]
    fn c4_is_maximally_connected_but_not_super() {
        let rep = property_report(&graph::cycle(4).unwrap(), limits()).unwrap();
        assert!(rep.is_maximally_edge_connected);
        assert!(!rep.is_super_lambda);
        assert!(!rep.is_self_dual);
        // Two of the six mincuts are opposite edge pairs, not stars.
        let g = graph::cycle(4).unwrap();
        let fam = enumerate_mincuts(&g, limits()).unwrap();
        let stars: HashSet<Vec<usize>> = (0..4).map(|v| g.star(v)).collect();
        let non_stars = fam.cuts.iter().filter(|c| !stars.contains(*c)).count();
        assert_eq!(non_stars, 2);
    }

    #[test]
    fn middle_bridge_of_p4_breaks_super_lambda() {
        let rep = property_report(&graph::path(4).unwrap(), limits()).unwrap();
        assert!(rep.is_maximally_edge_connected);
        assert!(!rep.is_super_lambda);
    }

    #[test]
    fn disconnected_input_is_an_error() {
        assert_eq!(
            property_report(&graph::empty_graph(3).unwrap(), limits()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn sample_laws_hold() {
        assert!(verify_cycle_law(6, limits()).unwrap().holds);
        assert!(verify_wheel_law(7, limits()).unwrap().holds);
        assert!(verify_complete_bipartite_law(2, 5, limits()).unwrap().holds);
        assert!(
            verify_tree_law(&graph::random_tree(8, 5).unwrap(), limits())
                .unwrap()
                .holds
        );
        assert!(
            verify_self_dual_law(&graph::petersen(), limits())
                .unwrap()
                .holds
        );
        let cart = verify_cartesian_law(4, limits()).unwrap();
        assert!(cart.holds, "{}", cart.detail);
        assert!(
            verify_vdelta_law(&graph::wheel(6).unwrap(), limits())
                .unwrap()
                .holds
        );
        let pair =
            verify_vdelta_pair_law(&graph::wheel(6).unwrap(), &two_hub_cycle(5), limits()).unwrap();
        assert!(pair.holds, "{}", pair.detail);
    }

    #[test]
    fn four_wheel_is_complete_and_self_dual() {
        // The smallest wheel coincides with K4, so the self-dual law covers
        // it instead of the rim-cycle law.
        let w4 = graph::wheel(4).unwrap();
        assert!(
            isomorphic(&w4, &graph::complete(4).unwrap())
                .unwrap()
                .isomorphic
        );
        let x = build_mincut_graph(&w4, limits()).unwrap();
        assert!(isomorphic(&x.graph, &w4).unwrap().isomorphic);
    }

    #[test]
    fn preconditions_are_reported() {
        let v = verify_self_dual_law(&graph::cycle(4).unwrap(), limits()).unwrap();
        assert!(!v.holds);
        assert!(v.detail.contains("precondition"));
        let v = verify_tree_law(&graph::cycle(4).unwrap(), limits()).unwrap();
        assert!(!v.holds);
        assert!(matches!(
            verify_wheel_law(4, limits()),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn default_suite_is_all_green() {
        let reports = run_default_suite(99, limits()).unwrap();
        assert!(reports.len() >= 50);
        for r in &reports {
            assert!(r.holds, "{} [{}]: {}", r.law, r.params, r.detail);
        }
    }

    #[test]
    fn dual_search_small() {
        let report = search_mincut_duals(4, limits()).unwrap();
        let names: Vec<(usize, usize)> = report.self_dual.iter().map(|g| (g.n(), g.m())).collect();
        // K3 and K4 are the only self-dual graphs this small.
        assert_eq!(names, vec![(3, 3), (4, 6)]);
        assert!(report.dual_pairs.is_empty());
        assert!(matches!(
            search_mincut_duals(8, limits()),
            Err(Error::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn trees_never_pair_up() {
        let report = search_mincut_duals(5, limits()).unwrap();
        for (g, h) in &report.dual_pairs {
            assert!(g.m() >= g.n(), "trees cannot appear in dual pairs");
            assert!(h.m() >= h.n(), "trees cannot appear in dual pairs");
        }
        for g in &report.self_dual {
            assert!(g.m() >= g.n());
        }
    }

    /// The search over seven vertices turns up exactly one dual pair: the
    /// triangular prism and its vertex join are each other's mincut graphs.
    /// Both directions are re-verified here from scratch.
    #[test]
    fn prism_and_its_join_are_the_only_small_dual_pair() {
        let prism = graph::complete(3).unwrap().cartesian_product_k2();
        let join = prism.vertex_join();
        let x_prism = build_mincut_graph(&prism, limits()).unwrap();
        let x_join = build_mincut_graph(&join, limits()).unwrap();
        assert!(isomorphic(&x_prism.graph, &join).unwrap().isomorphic);
        assert!(isomorphic(&x_join.graph, &prism).unwrap().isomorphic);

        let report = search_mincut_duals(7, limits()).unwrap();
        assert_eq!(report.dual_pairs.len(), 1);
        let (g, h) = &report.dual_pairs[0];
        assert!(isomorphic(g, &prism).unwrap().isomorphic);
        assert!(isomorphic(h, &join).unwrap().isomorphic);
        // Self-dual graphs this small are exactly the regular super-lambda
        // classes: K3, K4, K5, K(3,3), the octahedron, K6, the two
        // 4-regular graphs on seven vertices, and K7.
        assert_eq!(report.self_dual.len(), 9);
        for g in &report.self_dual {
            let rep = property_report(g, limits()).unwrap();
            assert!(rep.is_regular && rep.is_super_lambda && rep.is_self_dual);
        }
    }
}
