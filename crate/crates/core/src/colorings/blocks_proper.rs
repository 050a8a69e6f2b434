//! Constructive proper block colorers for large cliques and cycles, with an
//! exhaustive proper-coloring search as the fallback.

use super::{find_rainbow_copy, verify, ColorerConfig, Coloring, ColoringVariant, UNASSIGNED};
use crate::copies::{complete_order, enumerate_copies, is_cycle};
use crate::decide::{decide_anti_ramsey_proper, DecideConfig};
use crate::density::{degeneracy_ordering, max_density, max_ell_density};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexId};
use crate::rat::{fmt_rat, rat};

/// Proper coloring of the block `b` with no rainbow `f`-copy, if the
/// cascade finds one: (i) the inductive construction for complete `f` on at
/// least 19 vertices, (ii) peeling for cycles on at least 7, then (iii) an
/// exhaustive backtracking search over proper colorings. Requires
/// `m(B) ≤ m_2(F)`.
pub fn proper_block_colorer(
    b: &Hypergraph,
    f: &Hypergraph,
    cfg: &ColorerConfig,
) -> Result<Option<Coloring>> {
    if b.ell() != 2 || f.ell() != 2 {
        return Err(Error::Unsupported("proper block coloring is for 2-graphs".into()));
    }
    let m_b = max_density(b)?.0;
    let m2_f = max_ell_density(f)?.0;
    if m_b > m2_f {
        return Err(Error::contract(format!(
            "proper block colorer needs m(B) <= m_2(F), got {} > {}",
            fmt_rat(&m_b),
            fmt_rat(&m2_f)
        )));
    }
    if b.n_edges() == 0 {
        return Ok(Some(Coloring { variant: ColoringVariant::Proper, colors: Vec::new() }));
    }
    let accept = |colors: Vec<u32>| -> Result<Option<Coloring>> {
        let c = Coloring { variant: ColoringVariant::Proper, colors };
        let idx = enumerate_copies(b, f)?;
        if verify(b, &c)? && find_rainbow_copy(&idx, &c)?.is_none() {
            Ok(Some(c))
        } else {
            Ok(None)
        }
    };

    if let Some(k) = complete_order(f) {
        if k >= 19 {
            if let Some(colors) = clique_coloring(b, k)? {
                if let Some(c) = accept(colors)? {
                    return Ok(Some(c));
                }
            }
        }
    }
    if is_cycle(f) && f.n_vertices() >= 7 {
        if let Some(colors) = cycle_peel_coloring(b, f)? {
            if let Some(c) = accept(colors)? {
                return Ok(Some(c));
            }
        }
    }
    if b.n_edges() <= cfg.exhaustive_max_edges {
        let dcfg = DecideConfig { node_budget: cfg.node_budget, parallel: false };
        if let Ok(dec) = decide_anti_ramsey_proper(b, f, &dcfg) {
            if !dec.holds {
                let w = dec.witness.expect("false decision carries a witness");
                if let Some(c) = accept(w.colors)? {
                    return Ok(Some(c));
                }
            }
        }
    }
    Ok(None)
}

/// The inductive proper coloring avoiding rainbow `K_k` (k ≥ 19), along a
/// degeneracy ordering with back-degree at most k+1. Each vertex colors its
/// back-edges: all but at most three get brand-new colors; each remaining
/// edge either provably closes no clique (new color) or reuses the color of
/// a reserved pair inside the first k−2 back-neighbours, so any clique
/// through it repeats a color.
fn clique_coloring(b: &Hypergraph, k: usize) -> Result<Option<Vec<u32>>> {
    // m(B) ≤ m_2(K_k) = (k+1)/2 gives back-degree ≤ k+1
    let order = degeneracy_ordering(b, rat(k as i64 + 1, 2))?;
    let n = b.n_vertices();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    let adj = b.adjacency();
    let m = b.n_edges();
    let mut colors = vec![UNASSIGNED; m];
    let mut count: Vec<u32> = Vec::new(); // occurrences per color
    let fresh = |count: &mut Vec<u32>| {
        count.push(0);
        (count.len() - 1) as u32
    };
    let eix = |a: VertexId, c: VertexId| -> EdgeRef {
        let mut t = [a, c];
        t.sort_unstable();
        b.edge_index(&t).unwrap()
    };
    let set_color = |e: EdgeRef, c: u32, colors: &mut Vec<u32>, count: &mut Vec<u32>| {
        colors[e as usize] = c;
        count[c as usize] += 1;
    };

    for (k_idx, &vk) in order.iter().enumerate() {
        let mut earlier: Vec<VertexId> = adj[vk as usize]
            .iter()
            .copied()
            .filter(|&w| pos[w as usize] < k_idx)
            .collect();
        earlier.sort_by_key(|&w| pos[w as usize]);
        let q = earlier.len();
        if q > k + 1 {
            return Ok(None); // ordering bound violated; bail out
        }
        if q <= k - 2 {
            for &w in &earlier {
                let c = fresh(&mut count);
                set_color(eix(vk, w), c, &mut colors, &mut count);
            }
            continue;
        }
        let w_set: Vec<VertexId> = earlier[..k - 2].to_vec();
        let rest: Vec<VertexId> = earlier[k - 2..].to_vec();
        for &w in &w_set {
            let c = fresh(&mut count);
            set_color(eix(vk, w), c, &mut colors, &mut count);
        }
        // clean: drop back-neighbours that close no K_k through {vj, vk}
        let mut r_kept: Vec<VertexId> = Vec::new();
        for &vj in &rest {
            let a_set: Vec<VertexId> = adj[vj as usize]
                .iter()
                .copied()
                .filter(|&x| {
                    pos[x as usize] < pos[vj as usize] && adj[vk as usize].contains(&x)
                })
                .collect();
            if has_clique(b, &a_set, k - 2) {
                r_kept.push(vj);
            } else {
                let c = fresh(&mut count);
                set_color(eix(vk, vj), c, &mut colors, &mut count);
            }
        }
        if r_kept.is_empty() {
            continue;
        }
        // reserve pairwise-disjoint 2-sets inside W
        let mut w_avail = w_set.clone();
        w_avail.sort_unstable();
        let mut used_pair_colors: Vec<u32> = Vec::new();
        for &vj in &r_kept {
            // colors at vj that also occur away from vj
            let c_j: Vec<u32> = adj[vj as usize]
                .iter()
                .filter_map(|&x| {
                    let e = eix(vj, x);
                    let c = colors[e as usize];
                    (c != UNASSIGNED && count[c as usize] >= 2).then_some(c)
                })
                .collect();
            let mut chosen: Option<(usize, usize, Option<u32>)> = None;
            'pairs: for i in 0..w_avail.len() {
                for j in i + 1..w_avail.len() {
                    let mut t = [w_avail[i], w_avail[j]];
                    t.sort_unstable();
                    if !b.has_edge(&t) {
                        chosen = Some((i, j, None));
                        break 'pairs;
                    }
                }
            }
            if chosen.is_none() {
                'pairs2: for i in 0..w_avail.len() {
                    for j in i + 1..w_avail.len() {
                        let mut t = [w_avail[i], w_avail[j]];
                        t.sort_unstable();
                        let pc = colors[b.edge_index(&t).unwrap() as usize];
                        if pc != UNASSIGNED && !c_j.contains(&pc) && !used_pair_colors.contains(&pc)
                        {
                            chosen = Some((i, j, Some(pc)));
                            break 'pairs2;
                        }
                    }
                }
            }
            let Some((i, j, reuse)) = chosen else { return Ok(None) };
            match reuse {
                Some(pc) => {
                    used_pair_colors.push(pc);
                    set_color(eix(vk, vj), pc, &mut colors, &mut count);
                }
                None => {
                    let c = fresh(&mut count);
                    set_color(eix(vk, vj), c, &mut colors, &mut count);
                }
            }
            // remove the reserved pair (larger index first)
            w_avail.remove(j);
            w_avail.remove(i);
        }
    }
    Ok(Some(colors))
}

/// Does `cand` contain a clique of size `size`?
fn has_clique(b: &Hypergraph, cand: &[VertexId], size: usize) -> bool {
    if cand.len() < size {
        return false;
    }
    if size == 0 {
        return true;
    }
    let adj = b.adjacency();
    fn rec(adj: &[Vec<VertexId>], cand: &[VertexId], size: usize) -> bool {
        if size == 0 {
            return true;
        }
        if cand.len() < size {
            return false;
        }
        for (i, &v) in cand.iter().enumerate() {
            let rest: Vec<VertexId> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| adj[v as usize].binary_search(&w).is_ok())
                .collect();
            if rec(adj, &rest, size - 1) {
                return true;
            }
        }
        false
    }
    rec(&adj, cand, size)
}

/// Cycle-case peeling: fresh-color the edges of vertices that lie in no
/// copy; pair the outer edges of adjacent degree-2 vertices with one fresh
/// color; repeat. Returns `None` if neither reduction applies while copies
/// remain (the density argument says this cannot happen under the
/// precondition).
fn cycle_peel_coloring(b: &Hypergraph, f: &Hypergraph) -> Result<Option<Vec<u32>>> {
    let m = b.n_edges();
    let mut colors = vec![UNASSIGNED; m];
    let mut next = 0u32;
    let mut alive: Vec<EdgeRef> = (0..m as u32).collect();

    loop {
        if alive.is_empty() {
            return Ok(Some(colors));
        }
        let (h, vmap, emap) = b.edge_induced_subgraph(&alive)?;
        let idx = enumerate_copies(&h, f)?;
        if idx.copies.is_empty() {
            for &e in &alive {
                colors[e as usize] = next;
                next += 1;
            }
            return Ok(Some(colors));
        }
        let nh = h.n_vertices();
        let mut in_copy = vec![false; nh];
        for c in &idx.copies {
            for &e in c.iter() {
                for &v in h.edge(e) {
                    in_copy[v as usize] = true;
                }
            }
        }
        if let Some(v) = (0..nh).find(|&v| !in_copy[v]) {
            // fresh colors on its edges, drop the vertex
            let inc = h.incidence();
            let mut removed = Vec::new();
            for &e in &inc[v] {
                colors[emap[e as usize] as usize] = next;
                next += 1;
                removed.push(emap[e as usize]);
            }
            alive.retain(|e| !removed.contains(e));
            let _ = vmap;
            continue;
        }
        // adjacent degree-2 vertices
        let deg = h.degrees();
        let adj = h.adjacency();
        let mut found = None;
        'outer: for v1 in 0..nh {
            if deg[v1] != 2 {
                continue;
            }
            for &v2 in &adj[v1] {
                if (v2 as usize) > v1 && deg[v2 as usize] == 2 {
                    found = Some((v1 as u32, v2));
                    break 'outer;
                }
            }
        }
        let Some((v1, v2)) = found else {
            return Ok(None);
        };
        let other = |v: u32, not: u32| -> u32 {
            *adj[v as usize].iter().find(|&&w| w != not).unwrap()
        };
        let x = other(v1, v2);
        let y = other(v2, v1);
        let e1 = h.edge_index(&{
            let mut t = [v1, x];
            t.sort_unstable();
            t
        })
        .unwrap();
        let e2 = h.edge_index(&{
            let mut t = [v2, y];
            t.sort_unstable();
            t
        })
        .unwrap();
        let mid = h.edge_index(&{
            let mut t = [v1, v2];
            t.sort_unstable();
            t
        })
        .unwrap();
        colors[emap[e1 as usize] as usize] = next;
        colors[emap[e2 as usize] as usize] = next;
        next += 1;
        colors[emap[mid as usize] as usize] = next;
        next += 1;
        let removed = [emap[e1 as usize], emap[e2 as usize], emap[mid as usize]];
        alive.retain(|e| !removed.contains(e));
    }
}
