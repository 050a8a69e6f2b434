//! Constructive 2-bounded block colorers: a cascade of strategies extracted
//! from the density lemmas, each self-verifying before it returns, with an
//! exhaustive pairing search as the last resort.

use super::{find_rainbow_copy, verify, Coloring, ColoringVariant, UNASSIGNED};
use crate::copies::{complete_order, enumerate_copies};
use crate::corpus;
use crate::decide::{decide_anti_ramsey_bounded, DecideConfig};
use crate::density::{bounded_orientation, max_density};
use crate::error::Result;
use crate::hypergraph::{EdgeRef, Hypergraph, VertexId};
use crate::iso::iso_map;
use crate::rat::{ceil_int, rat, Rat};

#[derive(Clone, Copy, Debug)]
pub struct ColorerConfig {
    /// Edge-count cap for the exhaustive fallback stages.
    pub exhaustive_max_edges: usize,
    pub node_budget: u64,
}

impl Default for ColorerConfig {
    fn default() -> Self {
        ColorerConfig { exhaustive_max_edges: 24, node_budget: 100_000_000 }
    }
}

/// 2-bounded coloring of the block `b` with no rainbow `f`-copy, if the
/// cascade finds one. Every candidate is re-checked by the independent
/// verifier and rainbow finder before being returned.
///
/// Stages: (a) min-degree peeling when `m(B) < δ(F) − 1/2`; (b) orientation
/// pairing under the ceiling conditions; (c) the K4-specific recursion when
/// `m(B) ≤ 5/2`; then explicit library colorings, link lifting for
/// hypergraph cliques, and the exhaustive pairing search.
pub fn bounded_block_colorer(
    b: &Hypergraph,
    f: &Hypergraph,
    cfg: &ColorerConfig,
) -> Result<Option<Coloring>> {
    let m = b.n_edges();
    if m == 0 {
        return Ok(Some(Coloring { variant: ColoringVariant::Bounded(2), colors: Vec::new() }));
    }
    let m_b = max_density(b)?.0;
    let accept = |colors: Vec<u32>| -> Result<Option<Coloring>> {
        let c = Coloring { variant: ColoringVariant::Bounded(2), colors };
        let idx = enumerate_copies(b, f)?;
        if verify(b, &c)? && find_rainbow_copy(&idx, &c)?.is_none() {
            Ok(Some(c))
        } else {
            Ok(None)
        }
    };

    if b.ell() == 2 {
        // (a) min-degree peeling under m(B) < δ(F) − 1/2
        if let Some((_, delta_f)) = f.min_degree() {
            if m_b < rat(2 * delta_f as i64 - 1, 2) {
                if let Some(c) = accept(peel_min_degree(b))? {
                    return Ok(Some(c));
                }
            }
        }
        // (b) orientation pairing
        let m_f = max_density(f)?.0;
        let half_ceil = Rat::from_integer(ceil_int(&(m_b / rat(2, 1))));
        let k_ceil = ceil_int(&m_b);
        if half_ceil < m_f {
            if let Some(colors) = orientation_pairing(b, k_ceil as usize, false) {
                if let Some(c) = accept(colors)? {
                    return Ok(Some(c));
                }
            }
        } else if half_ceil == m_f && m_b < Rat::from_integer(k_ceil) && k_ceil % 2 == 1 {
            if let Some(colors) = orientation_pairing(b, k_ceil as usize, true) {
                if let Some(c) = accept(colors)? {
                    return Ok(Some(c));
                }
            }
        }
        // (c) F = K4 specifics
        if complete_order(f) == Some(4) && f.ell() == 2 && m_b <= rat(5, 2) {
            if let Some(colors) = k4_block_colors(b) {
                if let Some(c) = accept(colors)? {
                    return Ok(Some(c));
                }
            }
        }
    }

    // explicit library colorings transferred along an isomorphism
    for named in corpus::explicit_colorings() {
        if crate::iso::are_isomorphic(&named.pattern, f) {
            if let Some(colors) = transfer_colors(&named, b) {
                if let Some(c) = accept(colors)? {
                    return Ok(Some(c));
                }
            }
        }
    }

    // hypergraph cliques: recursive link lifting
    if b.ell() >= 3 {
        if let Some(r) = complete_order(f) {
            if r > b.ell() {
                if let Some(colors) = link_lift(b, f, r, cfg)? {
                    if let Some(c) = accept(colors)? {
                        return Ok(Some(c));
                    }
                }
            }
        }
    }

    // exhaustive fallback
    if m <= cfg.exhaustive_max_edges {
        let dcfg = DecideConfig { node_budget: cfg.node_budget, parallel: false };
        if let Ok(dec) = decide_anti_ramsey_bounded(b, f, 2, &dcfg) {
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

/// Repeatedly colors the edges at a minimum-degree vertex with a maximal
/// 2-bounded batch of fresh colors (all but at most one color used exactly
/// twice) and removes the vertex. Sound against rainbow F-copies whenever
/// `m(B) < δ(F) − 1/2`.
pub(crate) fn peel_min_degree(b: &Hypergraph) -> Vec<u32> {
    let m = b.n_edges();
    let n = b.n_vertices();
    let inc = b.incidence();
    let mut alive = vec![true; m];
    let mut deg: Vec<usize> = b.degrees();
    let mut colors = vec![UNASSIGNED; m];
    let mut next = 0u32;
    while let Some(v) = (0..n).filter(|&v| deg[v] > 0).min_by_key(|&v| (deg[v], v)) {
        let edges: Vec<EdgeRef> = inc[v].iter().copied().filter(|&e| alive[e as usize]).collect();
        for pair in edges.chunks(2) {
            for &e in pair {
                colors[e as usize] = next;
            }
            next += 1;
        }
        for &e in &edges {
            alive[e as usize] = false;
            for &w in b.edge(e) {
                deg[w as usize] -= 1;
            }
        }
    }
    colors
}

/// Orients with out-degree ≤ k, then pairs the out-edges at every vertex
/// with fresh colors. With `order_variant`, vertices are arranged so each
/// has at most k−1 out-neighbours later in the order, and those out-edges
/// are paired among themselves first.
fn orientation_pairing(b: &Hypergraph, k: usize, order_variant: bool) -> Option<Vec<u32>> {
    let orient = bounded_orientation(b, k).ok()?;
    let m = b.n_edges();
    let n = b.n_vertices();
    let mut out_edges: Vec<Vec<EdgeRef>> = vec![Vec::new(); n];
    for e in 0..m as u32 {
        out_edges[orient.tail[e as usize] as usize].push(e);
    }
    let mut colors = vec![UNASSIGNED; m];
    let mut next = 0u32;
    if !order_variant {
        for edges in out_edges.iter().take(n) {
            for pair in edges.chunks(2) {
                for &e in pair {
                    colors[e as usize] = next;
                }
                next += 1;
            }
        }
        return Some(colors);
    }
    // greedy order: repeatedly take a vertex with at most k−1 out-neighbours
    // among the remaining vertices
    let mut remaining = vec![true; n];
    let mut out_to_remaining: Vec<usize> = (0..n).map(|v| out_edges[v].len()).collect();
    let mut in_edges: Vec<Vec<EdgeRef>> = vec![Vec::new(); n]; // edges whose head is v
    for e in 0..m as u32 {
        in_edges[orient.head(b, e) as usize].push(e);
    }
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).find(|&v| remaining[v] && out_to_remaining[v] < k)?;
        remaining[v] = false;
        order.push(v);
        for &e in &in_edges[v] {
            let t = orient.tail[e as usize] as usize;
            if remaining[t] {
                out_to_remaining[t] -= 1;
            }
        }
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let (later, earlier): (Vec<EdgeRef>, Vec<EdgeRef>) = out_edges[v]
            .iter()
            .partition(|&&e| pos[orient.head(b, e) as usize] > pos[v]);
        let mut queue = later;
        queue.extend(earlier);
        for pair in queue.chunks(2) {
            for &e in pair {
                colors[e as usize] = next;
            }
            next += 1;
        }
    }
    Some(colors)
}

/// Transfers a named coloring along an isomorphism from its host onto `target`.
fn transfer_colors(named: &corpus::NamedColoring, target: &Hypergraph) -> Option<Vec<u32>> {
    let map = iso_map(&named.host, target)?;
    let mut colors = vec![UNASSIGNED; target.n_edges()];
    for (e, &c) in named.coloring.colors.iter().enumerate() {
        let mut img: Vec<VertexId> = named
            .host
            .edge(e as u32)
            .iter()
            .map(|&v| map[v as usize])
            .collect();
        img.sort_unstable();
        let t = target.edge_index(&img)?;
        colors[t as usize] = c;
    }
    colors.iter().all(|&c| c != UNASSIGNED).then_some(colors)
}

/// The K4 case: peel degree-< 5 vertices with maximal batches; a 5-regular
/// remainder is either K6 (explicit coloring) or splits around the
/// neighbourhood of any vertex.
fn k4_block_colors(b: &Hypergraph) -> Option<Vec<u32>> {
    let m = b.n_edges();
    if m == 0 {
        return Some(Vec::new());
    }
    let deg = b.degrees();
    let n = b.n_vertices();

    // peel a vertex of degree < 5
    if let Some(v) = (0..n).filter(|&v| deg[v] > 0 && deg[v] < 5).min_by_key(|&v| (deg[v], v)) {
        let inc = b.incidence();
        let edges: Vec<EdgeRef> = inc[v].clone();
        let rest: Vec<EdgeRef> = (0..m as u32).filter(|e| !edges.contains(e)).collect();
        let (restg, _, emap) = b.edge_induced_subgraph(&rest).ok()?;
        let sub = k4_block_colors(&restg)?;
        let mut colors = vec![UNASSIGNED; m];
        let mut next = 0u32;
        for pair in edges.chunks(2) {
            for &e in pair {
                colors[e as usize] = next;
            }
            next += 1;
        }
        for (i, &host_e) in emap.iter().enumerate() {
            colors[host_e as usize] = next + sub[i];
        }
        return Some(colors);
    }

    // all positive degrees are ≥ 5
    let used: Vec<usize> = (0..n).filter(|&v| deg[v] > 0).collect();
    if used.iter().any(|&v| deg[v] != 5) {
        return None; // density precondition must have been violated
    }
    if used.len() == 6 && m == 15 {
        // K6 on the used vertices
        let named = corpus::k6_no_rainbow_k4();
        return transfer_colors(&named, b);
    }
    let v = used[0];
    let adj = b.adjacency();
    let nv: Vec<VertexId> = adj[v].clone();
    debug_assert_eq!(nv.len(), 5);
    let subdeg: Vec<usize> = nv
        .iter()
        .map(|&w| adj[w as usize].iter().filter(|x| nv.contains(x)).count())
        .collect();
    if let Some(i1) = (0..5).filter(|&i| subdeg[i] <= 2).min_by_key(|&i| (subdeg[i], nv[i])) {
        // star trick: {v,w1} singleton; pair {v,w2},{v,w3} over w1's
        // non-neighbours; pair the remaining two
        let w1 = nv[i1];
        let non: Vec<VertexId> = nv
            .iter()
            .copied()
            .filter(|&w| w != w1 && !adj[w1 as usize].contains(&w))
            .collect();
        let (w2, w3) = (non[0], non[1]);
        let rest_w: Vec<VertexId> =
            nv.iter().copied().filter(|&w| w != w1 && w != w2 && w != w3).collect();
        let (w4, w5) = (rest_w[0], rest_w[1]);
        let eix = |a: VertexId, c: VertexId| {
            let mut t = [a, c];
            t.sort_unstable();
            b.edge_index(&t).unwrap()
        };
        let mut colors = vec![UNASSIGNED; m];
        colors[eix(v as u32, w1) as usize] = 0;
        colors[eix(v as u32, w2) as usize] = 1;
        colors[eix(v as u32, w3) as usize] = 1;
        colors[eix(v as u32, w4) as usize] = 2;
        colors[eix(v as u32, w5) as usize] = 2;
        let rest: Vec<EdgeRef> = (0..m as u32).filter(|&e| colors[e as usize] == UNASSIGNED).collect();
        let (restg, _, emap) = b.edge_induced_subgraph(&rest).ok()?;
        let sub = k4_block_colors(&restg)?;
        for (i, &host_e) in emap.iter().enumerate() {
            colors[host_e as usize] = 3 + sub[i];
        }
        return Some(colors);
    }
    // δ(B[N(v)]) ≥ 3: no K4 crosses between N(v) ∪ {v} and the rest
    let mut a_side = vec![false; n];
    a_side[v] = true;
    for &w in &nv {
        a_side[w as usize] = true;
    }
    let mut inside_a = Vec::new();
    let mut inside_z = Vec::new();
    let mut crossing = Vec::new();
    for e in 0..m as u32 {
        let t = b.edge(e);
        match (a_side[t[0] as usize], a_side[t[1] as usize]) {
            (true, true) => inside_a.push(e),
            (false, false) => inside_z.push(e),
            _ => crossing.push(e),
        }
    }
    if inside_z.is_empty() && crossing.is_empty() {
        return None; // should have been the K6 case
    }
    let mut colors = vec![UNASSIGNED; m];
    let mut next = 0u32;
    for &e in &crossing {
        colors[e as usize] = next;
        next += 1;
    }
    let (ga, _, ema) = b.edge_induced_subgraph(&inside_a).ok()?;
    let suba = k4_block_colors(&ga)?;
    let mut max_a = 0;
    for (i, &host_e) in ema.iter().enumerate() {
        colors[host_e as usize] = next + suba[i];
        max_a = max_a.max(suba[i] + 1);
    }
    next += max_a;
    if !inside_z.is_empty() {
        let (gz, _, emz) = b.edge_induced_subgraph(&inside_z).ok()?;
        let subz = k4_block_colors(&gz)?;
        for (i, &host_e) in emz.iter().enumerate() {
            colors[host_e as usize] = next + subz[i];
        }
    }
    Some(colors)
}

/// Recursive link lifting for `F = K_r^(ℓ)`: color the link of a
/// minimum-degree vertex against `K_{r−1}^(ℓ−1)` with a fresh palette, lift
/// those colors to the edges at the vertex, and recurse on the rest.
fn link_lift(
    b: &Hypergraph,
    f: &Hypergraph,
    r: usize,
    cfg: &ColorerConfig,
) -> Result<Option<Vec<u32>>> {
    let m = b.n_edges();
    if m == 0 {
        return Ok(Some(Vec::new()));
    }
    let deg = b.degrees();
    let n = b.n_vertices();
    let Some(u) = (0..n).filter(|&v| deg[v] > 0).min_by_key(|&v| (deg[v], v)) else {
        return Ok(Some(vec![UNASSIGNED; m]));
    };
    let link = b.link(u as u32)?;
    let (linkc, vmap) = link.compact();
    let link_pattern = corpus::hyperclique(r - 1, b.ell() - 1);
    let Some(link_coloring) = bounded_block_colorer(&linkc, &link_pattern, cfg)? else {
        return Ok(None);
    };
    let mut old_to_new = vec![u32::MAX; n];
    for (new, &old) in vmap.iter().enumerate() {
        old_to_new[old as usize] = new as u32;
    }
    let mut colors = vec![UNASSIGNED; m];
    let mut link_colors_used = 0;
    for e in 0..m as u32 {
        let t = b.edge(e);
        if t.contains(&(u as u32)) {
            let mut reduced: Vec<u32> =
                t.iter().filter(|&&x| x != u as u32).map(|&x| old_to_new[x as usize]).collect();
            reduced.sort_unstable();
            let le = linkc.edge_index(&reduced).expect("link edge");
            let c = link_coloring.colors[le as usize];
            colors[e as usize] = c;
            link_colors_used = link_colors_used.max(c + 1);
        }
    }
    let rest: Vec<EdgeRef> =
        (0..m as u32).filter(|&e| !b.edge(e).contains(&(u as u32))).collect();
    if rest.is_empty() {
        return Ok(Some(colors));
    }
    let (restg, _, emap) = b.edge_induced_subgraph(&rest)?;
    let Some(rest_coloring) = bounded_block_colorer(&restg, f, cfg)? else {
        return Ok(None);
    };
    for (i, &host_e) in emap.iter().enumerate() {
        colors[host_e as usize] = link_colors_used + rest_coloring.colors[i];
    }
    Ok(Some(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::find_rainbow_copy;
    use crate::corpus;
    use proptest::prelude::*;

    fn assert_good(b: &Hypergraph, f: &Hypergraph) -> Coloring {
        let c = bounded_block_colorer(b, f, &ColorerConfig::default())
            .unwrap()
            .unwrap_or_else(|| panic!("colorer failed on {b:?}"));
        assert!(verify(b, &c).unwrap());
        let idx = enumerate_copies(b, f).unwrap();
        assert!(find_rainbow_copy(&idx, &c).unwrap().is_none());
        c
    }

    #[test]
    fn k6_vs_k4_uses_explicit_coloring() {
        let c = assert_good(&corpus::clique(6), &corpus::clique(4));
        // seven pairs and one singleton
        assert_eq!(c.colors_used(), 8);
    }

    #[test]
    fn k5_3_vs_k4_3_explicit() {
        let c = assert_good(&corpus::hyperclique(5, 3), &corpus::hyperclique(4, 3));
        assert_eq!(c.colors_used(), 5);
    }

    #[test]
    fn k4_vs_k3_is_obstruction() {
        let out = bounded_block_colorer(&corpus::clique(4), &corpus::clique(3), &ColorerConfig::default())
            .unwrap();
        assert!(out.is_none());
    }

    #[test]
    fn doubled_k5_3_vs_k4_3_is_obstruction() {
        let out = bounded_block_colorer(
            &corpus::doubled_k5_3(),
            &corpus::hyperclique(4, 3),
            &ColorerConfig::default(),
        )
        .unwrap();
        assert!(out.is_none());
    }

    #[test]
    fn c6_3plus_vs_c4_is_obstruction() {
        let out = bounded_block_colorer(&corpus::c6_3plus(), &corpus::cycle(4), &ColorerConfig::default())
            .unwrap();
        assert!(out.is_none());
    }

    #[test]
    fn peeling_handles_sparse_blocks() {
        // diamond with a pendant: m < δ(K4) − 1/2 = 5/2
        let g = Hypergraph::new(
            2,
            5,
            &[vec![0, 1], vec![0, 2], vec![1, 2], vec![1, 3], vec![2, 3], vec![3, 4]],
        )
        .unwrap();
        assert_good(&g, &corpus::clique(4));
    }

    #[test]
    fn orientation_pairing_distinct_colors_per_out_set() {
        // checkable form of the orientation argument: the pairing leaves
        // at most ceil(k/2) distinct colors among each vertex's out-edges
        let b = corpus::clique(5); // m = 2
        let k = 2usize;
        let colors = orientation_pairing(&b, k, false).unwrap();
        let orient = bounded_orientation(&b, k).unwrap();
        let mut per: Vec<Vec<u32>> = vec![Vec::new(); b.n_vertices()];
        for e in 0..b.n_edges() as u32 {
            per[orient.tail[e as usize] as usize].push(colors[e as usize]);
        }
        for mut cols in per {
            cols.sort_unstable();
            cols.dedup();
            assert!(cols.len() <= k.div_ceil(2));
        }
    }

    #[test]
    fn orientation_stage_handles_low_degree_pattern() {
        // F with a degree-1 vertex never triggers the peeling stage;
        // m(B) = 3/2 and m(F) = 3/2 give ceil(m/2) = 1 < m(F)
        let mut edges: Vec<Vec<u32>> = corpus::clique(4).edges().map(|e| e.to_vec()).collect();
        edges.push(vec![3, 4]);
        let f = Hypergraph::new(2, 5, &edges).unwrap(); // K4 plus pendant
        let b = f.clone();
        assert_good(&b, &f);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        // constructive totality: every graph with m <= 5/2 gets a verified
        // 2-bounded coloring without a rainbow K4
        #[test]
        fn every_sparse_graph_colors_against_k4(n in 3usize..9, seed in any::<u64>(), deg in 2u32..6) {
            let g = crate::oracle::random_graph_2(n, seed, deg);
            prop_assume!(g.n_edges() > 0);
            let (m, _) = max_density(&g).unwrap();
            prop_assume!(m <= rat(5, 2));
            let out = bounded_block_colorer(&g, &corpus::clique(4), &ColorerConfig::default()).unwrap();
            prop_assert!(out.is_some(), "colorer must succeed under the density bound");
        }
    }

    #[test]
    fn k5_4_vs_k5_4_link_lift() {
        // F = K5^(4) on host K6^(4): blocks of the hyper pipeline
        let b = corpus::hyperclique(6, 4);
        let f = corpus::hyperclique(5, 4);
        // m(K6^4) = 15/6 = 5/2 ≤ m_4(K5^4) = 4
        assert_good(&b, &f);
    }
}
