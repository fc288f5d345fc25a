//! Exhaustive atlases of small graphs up to isomorphism.
//!
//! Graphs on `k` vertices are generated by attaching a new vertex to every
//! graph on `k - 1` vertices in all `2^(k-1)` ways and deduplicating by
//! canonical certificate. Every graph arises this way because deleting the
//! last vertex of any graph leaves a graph on one fewer vertex.

use std::collections::HashSet;

use crate::iso::canonical_form;
use crate::{Error, Graph, Result};

/// Hard ceiling; one level higher than this squares the runtime.
const MAX_ATLAS_N: usize = 9;

/// All graphs (connected or not) up to isomorphism, grouped by vertex count;
/// entry `k` of the result holds the graphs on `k` vertices, canonical
/// representatives sorted by edge count then certificate.
pub fn graph_atlas(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n == 0 {
        return Err(Error::BadParams("atlas needs max_n >= 1".into()));
    }
    if max_n > MAX_ATLAS_N {
        return Err(Error::SizeLimitExceeded(format!(
            "atlas enumeration capped at {MAX_ATLAS_N} vertices, got {max_n}"
        )));
    }
    let mut levels: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::new(1, [])?]];
    for k in 2..=max_n {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut reps: Vec<(usize, Vec<u8>, Graph)> = Vec::new();
        for g in &levels[k - 1] {
            for mask in 0u64..(1 << (k - 1)) {
                let mut pairs = g.edges().to_vec();
                for v in 0..k - 1 {
                    if (mask >> v) & 1 == 1 {
                        pairs.push((v, k - 1));
                    }
                }
                let cand = Graph::new(k, pairs).expect("extension pairs are canonical");
                let (cert, perm) = canonical_form(&cand)?;
                if seen.insert(cert.clone()) {
                    let rep = cand.relabel(&perm).expect("canonical relabeling");
                    reps.push((rep.m(), cert, rep));
                }
            }
        }
        reps.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        levels.push(reps.into_iter().map(|(_, _, g)| g).collect());
    }
    levels.truncate(max_n + 1);
    Ok(levels)
}

/// All connected graphs on `1..=max_n` vertices up to isomorphism, ordered
/// by vertex count, then edge count, then certificate.
pub fn connected_atlas(max_n: usize) -> Result<Vec<Graph>> {
    Ok(graph_atlas(max_n)?
        .into_iter()
        .flatten()
        .filter(Graph::is_connected)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_values() {
        let levels = graph_atlas(7).unwrap();
        let counts: Vec<usize> = levels.iter().skip(1).map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn connected_counts_match_known_values() {
        let atlas = connected_atlas(7).unwrap();
        let mut by_n = [0usize; 8];
        for g in &atlas {
            by_n[g.n()] += 1;
        }
        assert_eq!(by_n[1..].to_vec(), vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let atlas = connected_atlas(5).unwrap();
        let mut certs = HashSet::new();
        for g in &atlas {
            let (cert, _) = canonical_form(g).unwrap();
            assert!(certs.insert(cert));
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(graph_atlas(0), Err(Error::BadParams(_))));
        assert!(matches!(
            graph_atlas(MAX_ATLAS_N + 1),
            Err(Error::SizeLimitExceeded(_))
        ));
    }
}
