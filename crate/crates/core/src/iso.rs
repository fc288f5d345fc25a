//! Exact isomorphism testing and canonical certificates for small graphs.
//!
//! [`isomorphic`] runs a backtracking mapping search with degree and
//! neighbor-degree pruning and returns a verified vertex bijection.
//! [`canonical_certificate`] computes a canonical form by an
//! individualization-refinement search: two graphs have equal certificates
//! exactly when they are isomorphic. Both are exact and intended for graphs
//! of at most 64 vertices.

use serde::Serialize;

use crate::{Error, Graph, Result};

/// Outcome of an isomorphism test; `mapping[u]` is the image of vertex `u`
/// of the first graph when the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoResult {
    pub isomorphic: bool,
    pub mapping: Option<Vec<usize>>,
}

impl IsoResult {
    fn no() -> Self {
        IsoResult {
            isomorphic: false,
            mapping: None,
        }
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > 64 {
        return Err(Error::SizeLimitExceeded(format!(
            "isomorphism routines handle at most 64 vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// Exact isomorphism test with a mapping witness.
///
/// The returned mapping is re-validated edge by edge before it is reported.
/// Candidates are tried in ascending order, so the result is deterministic.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<IsoResult> {
    check_size(g)?;
    check_size(h)?;
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(IsoResult::no());
    }
    if g.n() == 0 {
        return Ok(IsoResult {
            isomorphic: true,
            mapping: Some(Vec::new()),
        });
    }
    let n = g.n();
    let deg_g: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let deg_h: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    if sorted(&deg_g) != sorted(&deg_h) {
        return Ok(IsoResult::no());
    }
    // Neighbor-degree multisets refine plain degrees.
    let sig = |gr: &Graph, degs: &[usize], v: usize| -> Vec<usize> {
        sorted(&gr.neighbors(v).iter().map(|&w| degs[w]).collect::<Vec<_>>())
    };
    let sig_g: Vec<Vec<usize>> = (0..n).map(|v| sig(g, &deg_g, v)).collect();
    let sig_h: Vec<Vec<usize>> = (0..n).map(|v| sig(h, &deg_h, v)).collect();
    {
        let mut a = sig_g.clone();
        let mut b = sig_h.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(IsoResult::no());
        }
    }

    let rows_g = g.bit_rows()?;
    let rows_h = h.bit_rows()?;
    let order = search_order(g, &deg_g);

    let mut map = vec![usize::MAX; n];
    let mut used: u64 = 0;
    if extend(
        &order, 0, &rows_g, &rows_h, &deg_g, &deg_h, &sig_g, &sig_h, &mut map, &mut used,
    ) {
        debug_assert!(mapping_is_exact(g, h, &map));
        if !mapping_is_exact(g, h, &map) {
            return Ok(IsoResult::no());
        }
        return Ok(IsoResult {
            isomorphic: true,
            mapping: Some(map),
        });
    }
    Ok(IsoResult::no())
}

fn sorted(xs: &[usize]) -> Vec<usize> {
    let mut out = xs.to_vec();
    out.sort_unstable();
    out
}

/// Static vertex order: start from the rarest degree class, then always take
/// the unplaced vertex with the most already-placed neighbors.
fn search_order(g: &Graph, deg: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut class_size = std::collections::HashMap::new();
    for &d in deg {
        *class_size.entry(d).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut placed_nbrs = vec![0usize; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                (
                    usize::MAX - placed_nbrs[v],
                    class_size[&deg[v]],
                    usize::MAX - deg[v],
                    v,
                )
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for w in g.neighbors(next) {
            placed_nbrs[w] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    order: &[usize],
    depth: usize,
    rows_g: &[u64],
    rows_h: &[u64],
    deg_g: &[usize],
    deg_h: &[usize],
    sig_g: &[Vec<usize>],
    sig_h: &[Vec<usize>],
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    // Image of u's already-mapped neighborhood.
    let mut required: u64 = 0;
    let mut nbrs = rows_g[u];
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if map[w] != usize::MAX {
            required |= 1 << map[w];
        }
    }
    for v in 0..rows_h.len() {
        if (*used >> v) & 1 == 1 || deg_h[v] != deg_g[u] || sig_h[v] != sig_g[u] {
            continue;
        }
        if rows_h[v] & *used != required {
            continue;
        }
        map[u] = v;
        *used |= 1 << v;
        if extend(
            order,
            depth + 1,
            rows_g,
            rows_h,
            deg_g,
            deg_h,
            sig_g,
            sig_h,
            map,
            used,
        ) {
            return true;
        }
        map[u] = usize::MAX;
        *used &= !(1 << v);
    }
    false
}

/// Exhaustive witness validation: edges to edges, non-edges to non-edges.
fn mapping_is_exact(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) != h.has_edge(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

/// Canonical certificate: equal bytes exactly when the graphs are
/// isomorphic.
pub fn canonical_certificate(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_form(g)?.0)
}

/// Canonical certificate together with the relabeling (`perm[old] = new`)
/// that realizes it.
pub fn canonical_form(g: &Graph) -> Result<(Vec<u8>, Vec<usize>)> {
    check_size(g)?;
    let n = g.n();
    if n == 0 {
        return Ok((encode(0, &[]), Vec::new()));
    }
    // Any ordering of an edgeless or complete graph gives the same bytes.
    if g.m() == 0 || g.m() == n * (n - 1) / 2 {
        let perm: Vec<usize> = (0..n).collect();
        let bits = adjacency_bits(&g.bit_rows()?, &perm);
        return Ok((encode(n, &bits), perm));
    }
    let rows = g.bit_rows()?;
    let initial = refine(&rows, vec![(0..n).collect()]);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    descend(&rows, initial, &mut best);
    let (bits, inverse) = best.expect("search visits at least one leaf");
    // inverse[k] = old vertex with new label k; flip to perm[old] = new.
    let mut perm = vec![0usize; n];
    for (new, &old) in inverse.iter().enumerate() {
        perm[old] = new;
    }
    Ok((encode(n, &bits), perm))
}

/// Equitable refinement of an ordered partition. Every splitting decision
/// depends only on cell indices and neighbor counts, so isomorphic graphs
/// refine identically.
fn refine(rows: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = rows.len();
    loop {
        let mut cell_of = vec![0usize; n];
        let mut masks = vec![0u64; cells.len()];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
                masks[ci] |= 1 << v;
            }
        }
        use std::collections::BTreeMap;
        let mut groups: BTreeMap<(usize, Vec<u32>), Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let counts: Vec<u32> = masks.iter().map(|&m| (rows[v] & m).count_ones()).collect();
            groups.entry((cell_of[v], counts)).or_default().push(v);
        }
        let next: Vec<Vec<usize>> = groups.into_values().collect();
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Individualization-refinement search over all branches of the first
/// smallest non-singleton cell; keeps the minimum adjacency bitstring.
fn descend(rows: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    match target {
        None => {
            let inverse: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bits = adjacency_bits(rows, &inverse_to_perm(&inverse));
            if best.as_ref().map(|(b, _)| bits < *b).unwrap_or(true) {
                *best = Some((bits, inverse));
            }
        }
        Some(t) => {
            for &x in &cells[t] {
                let mut branched = Vec::with_capacity(cells.len() + 1);
                for (i, cell) in cells.iter().enumerate() {
                    if i == t {
                        branched.push(vec![x]);
                        branched.push(cell.iter().copied().filter(|&v| v != x).collect());
                    } else {
                        branched.push(cell.clone());
                    }
                }
                descend(rows, refine(rows, branched), best);
            }
        }
    }
}

fn inverse_to_perm(inverse: &[usize]) -> Vec<usize> {
    let mut perm = vec![0usize; inverse.len()];
    for (new, &old) in inverse.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

/// Upper-triangle adjacency bits under `perm[old] = new`, packed row-major
/// into u64 words for cheap lexicographic comparison.
fn adjacency_bits(rows: &[u64], perm: &[usize]) -> Vec<u64> {
    let n = rows.len();
    let mut inverse = vec![0usize; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let total = n * (n - 1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut pos = 0usize;
    for i in 0..n {
        let row = rows[inverse[i]];
        for &old_j in inverse.iter().take(n).skip(i + 1) {
            if (row >> old_j) & 1 == 1 {
                bits[pos / 64] |= 1u64 << (63 - pos % 64);
            }
            pos += 1;
        }
    }
    bits
}

fn encode(n: usize, bits: &[u64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + bits.len() * 8);
    out.extend_from_slice(&(n as u32).to_le_bytes());
    for w in bits {
        out.extend_from_slice(&w.to_be_bytes());
    }
    out
}
