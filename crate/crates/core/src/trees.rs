//! Free trees: Prüfer decoding, canonical encodings, exhaustive enumeration
//! of isomorphism classes and uniform sampling of labeled trees.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Graph;
use crate::par::{self, Exec};

/// Largest order served by [`all_trees`].
pub const EXHAUSTIVE_MAX: usize = 9;

const CHUNK: u64 = 1 << 15;

/// Decodes a Prüfer sequence of length `n - 2` into a labeled tree on `n`
/// vertices. `n = 1` and `n = 2` take the empty sequence.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Range(format!("tree order {n}")));
    }
    if seq.len() != n.saturating_sub(2) {
        return Err(Error::Range(format!(
            "Prüfer sequence of length {} for {n} vertices",
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidVertex { vertex: bad, n });
    }
    if n == 1 {
        return Graph::edgeless(1);
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges)
}

/// The one or two centers of a tree, by repeated leaf removal.
pub fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in t.neighbors(leaf) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU encoding of `t` rooted at `root`: `0 children… 1` with children
/// sorted lexicographically.
fn rooted_code(t: &Graph, root: usize, parent: Option<usize>, out: &mut Vec<u8>) {
    let mut kids: Vec<Vec<u8>> = t
        .neighbors(root)
        .iter()
        .filter(|&c| Some(c) != parent)
        .map(|c| {
            let mut code = Vec::new();
            rooted_code(t, c, Some(root), &mut code);
            code
        })
        .collect();
    kids.sort_unstable();
    out.push(0);
    for k in kids {
        out.extend_from_slice(&k);
    }
    out.push(1);
}

/// Canonical encoding of a free tree: the smallest center-rooted AHU code.
/// Two trees are isomorphic iff their codes are equal.
pub fn canonical_code(t: &Graph) -> Vec<u8> {
    centers(t)
        .into_iter()
        .map(|c| {
            let mut code = Vec::with_capacity(2 * t.n());
            rooted_code(t, c, None, &mut code);
            code
        })
        .min()
        .unwrap_or_default()
}

fn prufer_from_index(n: usize, mut idx: u64, seq: &mut [usize]) {
    for slot in seq.iter_mut().rev() {
        *slot = (idx % n as u64) as usize;
        idx /= n as u64;
    }
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// ordered by canonical code. Exhaustive over all `n^(n-2)` Prüfer sequences.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    all_trees_with(n, Exec::default())
}

pub fn all_trees_with(n: usize, exec: Exec) -> Result<Vec<Graph>> {
    if n == 0 || n > EXHAUSTIVE_MAX {
        return Err(Error::Range(format!(
            "exhaustive tree enumeration supports 1 <= n <= {EXHAUSTIVE_MAX}, got {n}"
        )));
    }
    let total = (n as u64).pow(n.saturating_sub(2) as u32);
    let chunks: Vec<u64> = (0..total.div_ceil(CHUNK)).collect();
    let found = par::map_with(exec, &chunks, |&c| {
        let mut local: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        let mut seq = vec![0usize; n.saturating_sub(2)];
        for idx in c * CHUNK..((c + 1) * CHUNK).min(total) {
            prufer_from_index(n, idx, &mut seq);
            let t = prufer_decode(n, &seq).expect("valid Prüfer sequence");
            local.entry(canonical_code(&t)).or_insert(t);
        }
        local
    });
    // First occurrence by Prüfer index wins, so the result does not depend
    // on how chunks were scheduled.
    let mut merged: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for local in found {
        for (code, t) in local {
            merged.entry(code).or_insert(t);
        }
    }
    Ok(merged.into_values().collect())
}

/// `count` uniformly random labeled trees on `n` vertices.
pub fn sample_trees(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Range(format!("tree order {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        })
        .collect()
}

/// Backtracking isomorphism test with degree pruning. Independent of the
/// canonical encoding; meant for cross-checks on small graphs.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence()
    {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut u64) -> bool {
        let v = map.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if *used >> w & 1 == 1 || a.degree(v) != b.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
            if consistent {
                map.push(w);
                *used |= 1 << w;
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                *used &= !(1 << w);
            }
        }
        false
    }
    extend(a, b, &mut Vec::with_capacity(n), &mut 0)
}

/// Number of isomorphism classes of labeled trees on `n` vertices, found by
/// pairwise brute-force isomorphism over every Prüfer sequence.
pub fn count_classes_brute_force(n: usize) -> Result<usize> {
    let total = (n as u64).pow(n.saturating_sub(2) as u32);
    let mut reps: Vec<Graph> = Vec::new();
    let mut seq = vec![0usize; n.saturating_sub(2)];
    for idx in 0..total {
        prufer_from_index(n, idx, &mut seq);
        let t = prufer_decode(n, &seq)?;
        if !reps.iter().any(|r| brute_force_isomorphic(r, &t)) {
            reps.push(t);
        }
    }
    Ok(reps.len())
}
