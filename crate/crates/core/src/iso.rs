//! Isomorphism testing and canonical forms for small uniform hypergraphs.
//!
//! Both use iterated color refinement (degree, then multisets of incident
//! edge signatures) plus backtracking over the refined cells. No external
//! canonical-labeling tool; instances in this crate are tiny, and the
//! enumeration in [`crate::decide`] dedups against [`canonical_form`].
//! Intended for graphs up to roughly 12 vertices; larger inputs work but may
//! be slow when highly symmetric.

use crate::hypergraph::{Hypergraph, VertexId};

/// Stable vertex coloring under iterated refinement. Returns one color id
/// per vertex; equal colors mean "not separated by the refinement".
fn refine(g: &Hypergraph, init: &[u32]) -> Vec<u32> {
    let n = g.n_vertices();
    let inc = g.incidence();
    let mut colors = init.to_vec();
    loop {
        // edge signature: sorted colors of members
        let edge_sigs: Vec<Vec<u32>> = g
            .edges()
            .map(|e| {
                let mut s: Vec<u32> = e.iter().map(|&v| colors[v as usize]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        let mut vert_sigs: Vec<(u32, Vec<&Vec<u32>>)> = (0..n)
            .map(|v| {
                let mut s: Vec<&Vec<u32>> = inc[v].iter().map(|&e| &edge_sigs[e as usize]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| vert_sigs[a].cmp(&vert_sigs[b]));
        let mut new_colors = vec![0u32; n];
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && vert_sigs[order[i]] != vert_sigs[order[i - 1]] {
                next += 1;
            }
            new_colors[order[i]] = next;
        }
        // sort keys are consumed; drop before the stability check borrows colors
        vert_sigs.clear();
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

fn color_histogram(colors: &[u32]) -> Vec<(u32, usize)> {
    let mut h = std::collections::BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0usize) += 1;
    }
    h.into_iter().collect()
}

/// Finds an edge-preserving bijection `V(g1) -> V(g2)` if one exists.
pub fn iso_map(g1: &Hypergraph, g2: &Hypergraph) -> Option<Vec<VertexId>> {
    if g1.ell() != g2.ell() || g1.n_vertices() != g2.n_vertices() || g1.n_edges() != g2.n_edges() {
        return None;
    }
    let n = g1.n_vertices();
    if n == 0 {
        return Some(Vec::new());
    }
    let init1 = vec![0u32; n];
    let c1 = refine(g1, &init1);
    let c2 = refine(g2, &init1);
    if color_histogram(&c1) != color_histogram(&c2) {
        return None;
    }
    // match rarest-color vertices first
    let hist = color_histogram(&c1);
    let freq = |c: u32| hist.iter().find(|(k, _)| *k == c).map(|(_, v)| *v).unwrap();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (freq(c1[v]), c1[v], v));

    let inc1 = g1.incidence();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn extend(
        pos: usize,
        order: &[usize],
        g1: &Hypergraph,
        g2: &Hypergraph,
        c1: &[u32],
        c2: &[u32],
        inc1: &[Vec<u32>],
        map: &mut [u32],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        for x in 0..g2.n_vertices() {
            if used[x] || c2[x] != c1[u] {
                continue;
            }
            // every fully-mapped edge through u must land on an edge of g2
            map[u] = x as u32;
            let ok = inc1[u].iter().all(|&e| {
                let edge = g1.edge(e);
                if edge.iter().any(|&w| map[w as usize] == u32::MAX) {
                    return true;
                }
                let mut img: Vec<u32> = edge.iter().map(|&w| map[w as usize]).collect();
                img.sort_unstable();
                g2.has_edge(&img)
            });
            if ok {
                used[x] = true;
                if extend(pos + 1, order, g1, g2, c1, c2, inc1, map, used) {
                    return true;
                }
                used[x] = false;
            }
            map[u] = u32::MAX;
        }
        false
    }

    if extend(0, &order, g1, g2, &c1, &c2, &inc1, &mut map, &mut used) {
        debug_assert!(g2.edges().all(|e| {
            let mut inv = vec![u32::MAX; n];
            for (a, &b) in map.iter().enumerate() {
                inv[b as usize] = a as u32;
            }
            let mut pre: Vec<u32> = e.iter().map(|&w| inv[w as usize]).collect();
            pre.sort_unstable();
            g1.has_edge(&pre)
        }));
        Some(map)
    } else {
        None
    }
}

/// True iff an edge-preserving bijection exists. Backtracking with
/// degree/refinement pruning; may be slow well above ~12 vertices.
pub fn are_isomorphic(g1: &Hypergraph, g2: &Hypergraph) -> bool {
    iso_map(g1, g2).is_some()
}

/// Canonical encoding of a hypergraph: `(ell, n, canonical edge list)`.
/// Two graphs are isomorphic iff their canonical forms are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    pub ell: usize,
    pub n: usize,
    pub edges: Vec<VertexId>,
}

pub fn canonical_form(g: &Hypergraph) -> CanonicalForm {
    let n = g.n_vertices();
    // ordered partition as vertex -> cell id; refinement keys cells canonically
    let init = vec![0u32; n];
    let stable = refine(g, &init);
    let mut best: Option<Vec<VertexId>> = None;
    search_canonical(g, stable, &mut best);
    CanonicalForm { ell: g.ell(), n, edges: best.unwrap_or_default() }
}

fn search_canonical(g: &Hypergraph, colors: Vec<u32>, best: &mut Option<Vec<VertexId>>) {
    let n = g.n_vertices();
    // discrete iff all colors distinct
    let mut seen = vec![false; n + 1];
    let mut discrete = true;
    for &c in &colors {
        if seen[c as usize] {
            discrete = false;
            break;
        }
        seen[c as usize] = true;
    }
    if discrete {
        let mut label = vec![0u32; n];
        for (v, &c) in colors.iter().enumerate() {
            label[v] = c;
        }
        let mut tuples: Vec<Vec<VertexId>> = g
            .edges()
            .map(|e| {
                let mut t: Vec<VertexId> = e.iter().map(|&v| label[v as usize]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        tuples.sort_unstable();
        let flat = tuples.concat();
        if best.as_ref().is_none_or(|b| flat < *b) {
            *best = Some(flat);
        }
        return;
    }
    // first smallest non-singleton cell
    let hist = color_histogram(&colors);
    let target = hist
        .iter()
        .filter(|(_, cnt)| *cnt > 1)
        .min_by_key(|(c, cnt)| (*cnt, *c))
        .map(|(c, _)| *c)
        .unwrap();
    let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    for &v in &members {
        // individualize v: give it a fresh color below its cell
        let mut c2: Vec<u32> = colors.iter().map(|&c| c * 2 + 1).collect();
        c2[v] = colors[v] * 2;
        let refined = refine(g, &c2);
        search_canonical(g, refined, best);
    }
}
