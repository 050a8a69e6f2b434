//! Independent oracles used by the test and acceptance suites.
//!
//! Everything here is deliberately naive — enumeration over subsets,
//! injective maps, or all colorings — and shares no code path with the
//! implementations it cross-checks.

use crate::experiments::splitmix64;
use crate::hypergraph::{Hypergraph, VertexId};
use crate::rat::Rat;
use num_rational::Ratio;
use std::collections::BTreeSet;

/// Deterministic G(n, p)-style test graph with expected average degree
/// `avg_deg` (p = avg_deg / (n-1)).
pub fn random_graph_2(n: usize, seed: u64, avg_deg: u32) -> Hypergraph {
    let mut edges = Vec::new();
    let mut state = seed;
    let p_num = avg_deg as u64;
    let p_den = (n.max(2) - 1) as u64;
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            state = splitmix64(state);
            if (state % p_den.max(1)) < p_num {
                edges.push(vec![a, b]);
            }
        }
    }
    Hypergraph::new(2, n, &edges).unwrap()
}

/// Deterministic random 3-graph: each triple kept with probability
/// `num/den`.
pub fn random_graph_3(n: usize, seed: u64, num: u64, den: u64) -> Hypergraph {
    let mut edges = Vec::new();
    let mut state = seed;
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            for c in b + 1..n as u32 {
                state = splitmix64(state);
                if state % den < num {
                    edges.push(vec![a, b, c]);
                }
            }
        }
    }
    Hypergraph::new(3, n, &edges).unwrap()
}

/// Breadth-first 2-coloring. Returns the two classes, or `None` when an odd
/// cycle exists. Only for 2-graphs.
pub fn bipartition(g: &Hypergraph) -> Option<[Vec<VertexId>; 2]> {
    assert_eq!(g.ell(), 2);
    let adj = g.adjacency();
    let n = g.n_vertices();
    let mut side = vec![u8::MAX; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                let w = w as usize;
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    let mut classes = [Vec::new(), Vec::new()];
    for v in 0..n {
        classes[side[v] as usize].push(v as u32);
    }
    Some(classes)
}

/// Number of distinct subgraph copies of `f` in `g` (identified by edge
/// set), by enumerating all injective vertex maps. Exponential; hosts should
/// stay at or below ~8 vertices.
pub fn brute_force_copy_count(g: &Hypergraph, f: &Hypergraph) -> usize {
    assert_eq!(g.ell(), f.ell());
    let nf = f.n_vertices();
    let ng = g.n_vertices();
    if nf > ng {
        return 0;
    }
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut map = vec![u32::MAX; nf];
    let mut used = vec![false; ng];

    fn rec(
        pos: usize,
        g: &Hypergraph,
        f: &Hypergraph,
        map: &mut [u32],
        used: &mut [bool],
        found: &mut BTreeSet<Vec<u32>>,
    ) {
        if pos == map.len() {
            let mut edge_refs: Vec<u32> = Vec::with_capacity(f.n_edges());
            for e in f.edges() {
                let mut img: Vec<u32> = e.iter().map(|&v| map[v as usize]).collect();
                img.sort_unstable();
                match g.edge_index(&img) {
                    Some(r) => edge_refs.push(r),
                    None => return,
                }
            }
            edge_refs.sort_unstable();
            found.insert(edge_refs);
            return;
        }
        for x in 0..g.n_vertices() {
            if !used[x] {
                used[x] = true;
                map[pos] = x as u32;
                rec(pos + 1, g, f, map, used, found);
                used[x] = false;
            }
        }
    }

    rec(0, g, f, &mut map, &mut used, &mut found);
    found.len()
}

/// Exhaustive max density over non-empty vertex subsets. Only for
/// `v(G) <= ~20`.
pub fn exhaustive_max_density(g: &Hypergraph) -> (Rat, Vec<VertexId>) {
    let n = g.n_vertices();
    assert!((1..=24).contains(&n), "exhaustive max density needs 1 <= v <= 24");
    let edge_masks: Vec<u32> = g
        .edges()
        .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let mut best = Ratio::new(-1, 1);
    let mut best_mask = 0u32;
    for mask in 1u32..(1u32 << n) {
        let ecount = edge_masks.iter().filter(|&&em| em & mask == em).count();
        let d = Ratio::new(ecount as i64, mask.count_ones() as i64);
        if d > best {
            best = d;
            best_mask = mask;
        }
    }
    let witness = (0..n as u32).filter(|&v| best_mask >> v & 1 == 1).collect();
    (best, witness)
}

/// Decides `G -> F` for 2-colorings by enumerating all 2^m colorings with
/// no pruning. Exponential; for ~16 edges or fewer.
pub fn brute_force_ramsey2(g: &Hypergraph, copies: &[Vec<u32>]) -> bool {
    let m = g.n_edges();
    assert!(m <= 20);
    if copies.is_empty() {
        return false;
    }
    'colorings: for mask in 0u32..(1u32 << m) {
        for c in copies {
            let first = mask >> c[0] & 1;
            if c.iter().all(|&e| (mask >> e & 1) == first) {
                continue 'colorings; // monochromatic copy, try next coloring
            }
        }
        return false; // this coloring avoids monochromatic copies
    }
    true
}

/// Decides `G -> F` for 2-bounded colorings by enumerating *all* partitions
/// of the edges into classes of size at most 2 (not just maximal pairings).
/// Exponential; for ~7 edges or fewer.
pub fn brute_force_bounded2_arrow(g: &Hypergraph, copies: &[Vec<u32>]) -> bool {
    let m = g.n_edges();
    assert!(m <= 12);
    let mut partner = vec![usize::MAX; m];

    fn rec(next: usize, partner: &mut [usize], copies: &[Vec<u32>]) -> bool {
        // find first unassigned edge
        let m = partner.len();
        let mut a = next;
        while a < m && partner[a] != usize::MAX {
            a += 1;
        }
        if a == m {
            // complete: every class has <= 2; rainbow copy iff no copy
            // contains a matched pair
            let all_rainbowable = copies.iter().any(|c| {
                c.iter().all(|&e| {
                    let p = partner[e as usize];
                    p == e as usize || !c.contains(&(p as u32))
                })
            });
            // this coloring avoids rainbow iff no copy is rainbow
            return all_rainbowable;
        }
        // singleton
        partner[a] = a;
        let mut some_rainbow_always = rec(a + 1, partner, copies);
        partner[a] = usize::MAX;
        if !some_rainbow_always {
            return false; // found an avoiding coloring
        }
        for b in a + 1..m {
            if partner[b] == usize::MAX {
                partner[a] = b;
                partner[b] = a;
                some_rainbow_always = rec(a + 1, partner, copies);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
                if !some_rainbow_always {
                    return false;
                }
            }
        }
        true
    }

    if copies.is_empty() {
        return false;
    }
    rec(0, &mut partner, copies)
}
