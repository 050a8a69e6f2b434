//! Isomorph-free exhaustive generation of connected ℓ-graphs by edge
//! augmentation with canonical-form deduplication.
//!
//! Every connected graph admits an edge order whose prefixes are connected,
//! so growing by one edge (touching at least one existing vertex, new
//! vertices appended) reaches every isomorphism class exactly once after
//! dedup against [`crate::iso::canonical_form`].

use crate::hypergraph::{Hypergraph, VertexId};
use crate::iso::{canonical_form, CanonicalForm};
use std::collections::HashSet;

pub fn count_subsets(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

/// All connected ℓ-graphs (no isolated vertices) with at most `v_max`
/// vertices and at most `e_max` edges, up to isomorphism. Representatives
/// are canonically labeled.
pub fn connected_hypergraphs(ell: usize, v_max: usize, e_max: usize) -> Vec<Hypergraph> {
    assert!(ell >= 2 && v_max >= ell);
    let mut out: Vec<Hypergraph> = Vec::new();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();

    let seed = Hypergraph::new(ell, ell, &[(0..ell as u32).collect::<Vec<_>>()]).unwrap();
    seen.insert(canonical_form(&seed));
    out.push(seed.clone());
    let mut frontier = vec![seed];

    for _level in 2..=e_max {
        let mut next = Vec::new();
        for g in &frontier {
            for child in augmentations(g, v_max) {
                let cf = canonical_form(&child);
                if seen.insert(cf.clone()) {
                    let canon = Hypergraph::from_sorted_unchecked(cf.ell, cf.n, cf.edges.clone());
                    out.push(canon.clone());
                    next.push(canon);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out
}

/// All graphs obtained from `g` by adding one edge: `t ≥ 1` existing
/// vertices plus `ℓ − t` fresh ones.
fn augmentations(g: &Hypergraph, v_max: usize) -> Vec<Hypergraph> {
    let ell = g.ell();
    let n = g.n_vertices();
    let mut out = Vec::new();
    for t in 1..=ell.min(n) {
        let fresh = ell - t;
        if n + fresh > v_max {
            continue;
        }
        let mut subset: Vec<usize> = (0..t).collect();
        loop {
            let mut edge: Vec<VertexId> = subset.iter().map(|&i| i as u32).collect();
            for j in 0..fresh {
                edge.push((n + j) as u32);
            }
            let exists = fresh == 0 && g.has_edge(&edge);
            if !exists {
                let mut edges: Vec<Vec<VertexId>> = g.edges().map(|e| e.to_vec()).collect();
                edges.push(edge);
                out.push(Hypergraph::new(ell, n + fresh, &edges).unwrap());
            }
            // next t-subset of [0, n)
            let mut i = t;
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                if subset[i] < n - t + i {
                    subset[i] += 1;
                    for j in i + 1..t {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break false;
                }
            };
            if done {
                break;
            }
        }
    }
    out
}
