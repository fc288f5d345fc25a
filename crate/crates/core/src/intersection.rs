//! The mincut graph construction and its iteration as an operator.
//!
//! The mincut graph of `G` has one vertex per minimum edge-cut of `G`, two
//! vertices adjacent exactly when the cuts share an edge. Iterating the
//! construction either reaches the null graph after finitely many steps,
//! revisits an earlier iterate up to isomorphism (the index is infinite), or
//! hits the iteration cap.

use serde::Serialize;

use crate::iso::isomorphic;
use crate::mincut::enumerate_mincuts;
use crate::{Error, Graph, Limits, Result};

/// Intersection graph of the canonical mincut family; vertex `i` is labeled
/// by the cut it represents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MincutGraph {
    pub graph: Graph,
    /// `labels[i]` is the i-th cut of the canonical family (ascending edge
    /// ids, family in lexicographic order).
    pub labels: Vec<Vec<usize>>,
}

/// Builds the mincut graph; the null graph when the cut family is empty.
pub fn build_mincut_graph(g: &Graph, limits: Limits) -> Result<MincutGraph> {
    let family = enumerate_mincuts(g, limits)?;
    let k = family.cuts.len();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if sorted_sets_intersect(&family.cuts[i], &family.cuts[j]) {
                pairs.push((i, j));
            }
        }
    }
    Ok(MincutGraph {
        graph: Graph::new(k, pairs).expect("intersection pairs are canonical"),
        labels: family.cuts,
    })
}

fn sorted_sets_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// How an operator iteration ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorIndex {
    /// The iteration reached the null graph; the value counts applications
    /// performed up to and including the one producing it.
    Finite(usize),
    /// Some iterate is isomorphic to an earlier one, so the chain never
    /// reaches the null graph.
    Infinite {
        /// Index into the iterate sequence that repeats.
        repeats_iterate: usize,
        /// Number of applications performed when the repeat was detected.
        detected_at: usize,
    },
    /// The cap was hit before either outcome.
    Indeterminate,
}

/// The iterate sequence `G, X(G), XX(G), ...` and the detected index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTrace {
    pub iterates: Vec<Graph>,
    pub index: OperatorIndex,
    pub cap: usize,
}

/// Applies the mincut-graph construction repeatedly, stopping at the null
/// graph, at the first iterate isomorphic to any earlier iterate, or at
/// `cap` applications.
pub fn operator_trace(g: &Graph, cap: usize, limits: Limits) -> Result<OperatorTrace> {
    if cap < 1 {
        return Err(Error::BadParams("iteration cap must be at least 1".into()));
    }
    let mut iterates = vec![g.clone()];
    for step in 1..=cap {
        let next = build_mincut_graph(iterates.last().expect("nonempty"), limits)?.graph;
        if next.is_null() {
            iterates.push(next);
            return Ok(OperatorTrace {
                iterates,
                index: OperatorIndex::Finite(step),
                cap,
            });
        }
        for (i, prev) in iterates.iter().enumerate() {
            if prev.n() == next.n() && prev.m() == next.m() && isomorphic(prev, &next)?.isomorphic {
                iterates.push(next);
                return Ok(OperatorTrace {
                    iterates,
                    index: OperatorIndex::Infinite {
                        repeats_iterate: i,
                        detected_at: step,
                    },
                    cap,
                });
            }
        }
        iterates.push(next);
    }
    Ok(OperatorTrace {
        iterates,
        index: OperatorIndex::Indeterminate,
        cap,
    })
}
