//! Enumeration of pattern copies and the structural predicates built on
//! them: F-equivalence of edges, closedness of edges / copies / graphs, and
//! the block decomposition of the copy-overlap structure.
//!
//! Copies are identified by their *edge sets* (automorphism-quotiented),
//! not by embeddings: the structural definitions quantify over copies as
//! subgraphs, and embedding multiplicity would distort closedness counts.

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, UnionFind, VertexId};
use crate::density;
use std::collections::{BTreeSet, HashMap};

/// All copies of `pattern` in `host`, deduplicated by edge set and sorted
/// lexicographically by their sorted edge-ref tuples, plus the inverse
/// edge → copies incidence.
pub struct CopyIndex<'g> {
    pub host: &'g Hypergraph,
    pub pattern: Hypergraph,
    /// Each copy as a sorted tuple of edge refs into `host`.
    pub copies: Vec<Box<[EdgeRef]>>,
    /// Copy ids (ascending) per host edge; edges in no copy are absent.
    pub edge_to_copies: HashMap<EdgeRef, Vec<u32>>,
}

/// Enumerates all subgraphs of `host` isomorphic to `pattern`.
///
/// Complete ℓ-graphs and cycles take dedicated duplication-free paths (these
/// are the patterns that occur at scale); everything else goes through
/// embedding backtracking with edge-set deduplication, intended for patterns
/// up to ~12 vertices on moderate hosts.
pub fn enumerate_copies<'g>(host: &'g Hypergraph, pattern: &Hypergraph) -> Result<CopyIndex<'g>> {
    if host.ell() != pattern.ell() {
        return Err(Error::input(format!(
            "uniformity mismatch: host is {}-uniform, pattern {}-uniform",
            host.ell(),
            pattern.ell()
        )));
    }
    let mut copies: Vec<Box<[EdgeRef]>> = if let Some(r) = complete_order(pattern) {
        clique_copies(host, r)
    } else if is_cycle(pattern) {
        cycle_copies(host, pattern.n_vertices())
    } else {
        generic_copies(host, pattern)
    };
    copies.sort_unstable();
    copies.dedup();
    let mut edge_to_copies: HashMap<EdgeRef, Vec<u32>> = HashMap::new();
    for (id, c) in copies.iter().enumerate() {
        for &e in c.iter() {
            edge_to_copies.entry(e).or_default().push(id as u32);
        }
    }
    Ok(CopyIndex { host, pattern: pattern.clone(), copies, edge_to_copies })
}

/// `Some(r)` when the pattern is the complete ℓ-graph on its `r` vertices.
pub(crate) fn complete_order(f: &Hypergraph) -> Option<usize> {
    let (v, ell) = (f.n_vertices(), f.ell());
    if v < ell {
        return None;
    }
    let mut binom: u128 = 1;
    for i in 0..ell {
        binom = binom * (v - i) as u128 / (i + 1) as u128;
    }
    (f.n_edges() as u128 == binom).then_some(v)
}

pub(crate) fn is_cycle(f: &Hypergraph) -> bool {
    f.ell() == 2
        && f.n_vertices() >= 3
        && f.n_edges() == f.n_vertices()
        && f.is_connected()
        && f.degrees().iter().all(|&d| d == 2)
}

/// Duplication-free r-clique enumeration: grow vertex sets in ascending
/// order, keeping the candidate set of common extensions.
fn clique_copies(host: &Hypergraph, r: usize) -> Vec<Box<[EdgeRef]>> {
    let ell = host.ell();
    let mut out = Vec::new();
    if r == ell {
        // every edge is a copy
        return host.edge_refs().map(|e| vec![e].into_boxed_slice()).collect();
    }
    match ell {
        2 => {
            let adj = host.adjacency();
            for (i, e) in host.edges().enumerate() {
                let (a, b) = (e[0], e[1]);
                let cand: Vec<VertexId> = intersect_gt(&adj[a as usize], &adj[b as usize], b);
                extend_clique_2(host, &adj, &mut vec![a, b], cand, r, &mut out);
                let _ = i;
            }
        }
        3 => clique_copies_3(host, r, &mut out),
        _ => {
            for i in 0..host.n_edges() {
                let base: Vec<VertexId> = host.edge(i as u32).to_vec();
                let top = *base.last().unwrap();
                let cand: Vec<VertexId> = (top + 1..host.n_vertices() as u32)
                    .filter(|&x| all_subedges_present(host, &base, x))
                    .collect();
                extend_clique_gen(host, &mut base.clone(), cand, r, &mut out);
            }
        }
    }
    out
}

fn intersect_gt(a: &[VertexId], b: &[VertexId], gt: VertexId) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if a[i] > gt {
                    out.push(a[i]);
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn intersect_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// 3-uniform clique enumeration over the sorted edge array. Edges sharing a
/// pair prefix are contiguous, so the extension candidates for an edge
/// (a,b,c) are three index ranges whose third coordinates get merged; for
/// r = 4 the matched positions are exactly the edge refs of the new copy.
fn clique_copies_3(host: &Hypergraph, r: usize, out: &mut Vec<Box<[EdgeRef]>>) {
    let m = host.n_edges();
    let n = host.n_vertices();
    if m == 0 {
        return;
    }
    // block boundaries by first coordinate
    let mut first_start = vec![0u32; n + 2];
    for e in host.edges() {
        first_start[e[0] as usize + 1] += 1;
    }
    for i in 0..=n {
        first_start[i + 1] += first_start[i];
    }
    let third = |i: u32| host.edge(i)[2];
    // subrange of the x-block with second coordinate y
    let pair_range = |x: VertexId, y: VertexId| -> (u32, u32) {
        let (blk_lo, blk_hi) = (first_start[x as usize], first_start[x as usize + 1]);
        let (mut lo, mut hi) = (blk_lo, blk_hi);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if host.edge(mid)[1] < y {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        let start = lo;
        let (mut lo2, mut hi2) = (start, blk_hi);
        while lo2 < hi2 {
            let mid = (lo2 + hi2) / 2;
            if host.edge(mid)[1] <= y {
                lo2 = mid + 1;
            } else {
                hi2 = mid;
            }
        }
        (start, lo2)
    };
    // trim an index range to third coordinates > c
    let after = |range: (u32, u32), c: VertexId| -> (u32, u32) {
        let (mut lo, hi) = range;
        let mut high = hi;
        while lo < high {
            let mid = (lo + high) / 2;
            if third(mid) <= c {
                lo = mid + 1;
            } else {
                high = mid;
            }
        }
        (lo, hi)
    };

    let mut group_end = 0u32;
    for i in 0..m as u32 {
        let e = host.edge(i);
        let (a, b, c) = (e[0], e[1], e[2]);
        if i >= group_end {
            // walk to the end of the (a, b) group
            let mut j = i + 1;
            while (j as usize) < m {
                let f = host.edge(j);
                if f[0] != a || f[1] != b {
                    break;
                }
                j += 1;
            }
            group_end = j;
        }
        let (mut p1, e1) = (i + 1, group_end);
        if p1 >= e1 {
            continue;
        }
        let (mut p2, e2) = after(pair_range(a, c), c);
        if p2 >= e2 {
            continue;
        }
        let (mut p3, e3) = after(pair_range(b, c), c);
        if p3 >= e3 {
            continue;
        }
        // 3-way merge on third coordinates
        while p1 < e1 && p2 < e2 && p3 < e3 {
            let (d1, d2, d3) = (third(p1), third(p2), third(p3));
            let dmax = d1.max(d2).max(d3);
            if d1 == d2 && d2 == d3 {
                if r == 4 {
                    let mut refs = vec![i, p1, p2, p3];
                    refs.sort_unstable();
                    out.push(refs.into_boxed_slice());
                } else {
                    // collect larger extensions through the generic path
                    let base = vec![a, b, c, d1];
                    let cand: Vec<VertexId> = collect_common_tail(host, &base, &pair_range);
                    extend_clique_3(host, &mut base.clone(), cand, r, out);
                }
                p1 += 1;
                p2 += 1;
                p3 += 1;
            } else {
                if d1 < dmax {
                    p1 += 1;
                }
                if d2 < dmax {
                    p2 += 1;
                }
                if d3 < dmax {
                    p3 += 1;
                }
            }
        }
    }
}

/// Vertices x beyond max(base) completing every pair of `base` to an edge.
fn collect_common_tail(
    host: &Hypergraph,
    base: &[VertexId],
    pair_range: &dyn Fn(VertexId, VertexId) -> (u32, u32),
) -> Vec<VertexId> {
    let top = *base.last().unwrap();
    let mut cand: Option<Vec<VertexId>> = None;
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            let (lo, hi) = pair_range(base[i], base[j]);
            let tail: Vec<VertexId> = (lo..hi)
                .map(|t| host.edge(t)[2])
                .filter(|&x| x > top)
                .collect();
            cand = Some(match cand {
                None => tail,
                Some(prev) => intersect_sorted(&prev, &tail),
            });
            if cand.as_ref().unwrap().is_empty() {
                return Vec::new();
            }
        }
    }
    cand.unwrap_or_default()
}

/// Third coordinates `> gt` of edges `(a, b, *)` in a sorted 3-graph.
fn pair_tail(host: &Hypergraph, a: VertexId, b: VertexId, gt: VertexId) -> Vec<VertexId> {
    let m = host.n_edges();
    let target = [a, b, gt];
    // lower bound for (a, b, gt+1): first edge > [a, b, gt]
    let (mut lo, mut hi) = (0usize, m);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if host.edge(mid as u32) <= &target[..] {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let mut out = Vec::new();
    let mut i = lo;
    while i < m {
        let e = host.edge(i as u32);
        if e[0] != a || e[1] != b {
            break;
        }
        out.push(e[2]);
        i += 1;
    }
    out
}

fn extend_clique_2(
    host: &Hypergraph,
    adj: &[Vec<VertexId>],
    set: &mut Vec<VertexId>,
    cand: Vec<VertexId>,
    r: usize,
    out: &mut Vec<Box<[EdgeRef]>>,
) {
    if set.len() == r {
        out.push(clique_edge_refs(host, set));
        return;
    }
    for (i, &x) in cand.iter().enumerate() {
        let next: Vec<VertexId> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&y| adj[x as usize].binary_search(&y).is_ok())
            .collect();
        if set.len() + 1 + next.len() >= r {
            set.push(x);
            extend_clique_2(host, adj, set, next, r, out);
            set.pop();
        } else if set.len() + 1 == r {
            set.push(x);
            extend_clique_2(host, adj, set, Vec::new(), r, out);
            set.pop();
        }
    }
}

fn extend_clique_3(
    host: &Hypergraph,
    set: &mut Vec<VertexId>,
    cand: Vec<VertexId>,
    r: usize,
    out: &mut Vec<Box<[EdgeRef]>>,
) {
    if set.len() == r {
        out.push(clique_edge_refs(host, set));
        return;
    }
    for (i, &x) in cand.iter().enumerate() {
        let mut next: Vec<VertexId> = cand[i + 1..].to_vec();
        for &s in set.iter() {
            if next.is_empty() {
                break;
            }
            next = intersect_sorted(&next, &pair_tail(host, s.min(x), s.max(x), x));
        }
        if set.len() + 1 + next.len() >= r || set.len() + 1 == r {
            set.push(x);
            extend_clique_3(host, set, next, r, out);
            set.pop();
        }
    }
}

fn all_subedges_present(host: &Hypergraph, set: &[VertexId], x: VertexId) -> bool {
    // every (ℓ-1)-subset of `set` plus x must be an edge
    let ell = host.ell();
    let k = ell - 1;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut edge: Vec<VertexId> = idx.iter().map(|&i| set[i]).collect();
        edge.push(x);
        edge.sort_unstable();
        if !host.has_edge(&edge) {
            return false;
        }
        // next k-subset of set
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] < set.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn extend_clique_gen(
    host: &Hypergraph,
    set: &mut Vec<VertexId>,
    cand: Vec<VertexId>,
    r: usize,
    out: &mut Vec<Box<[EdgeRef]>>,
) {
    if set.len() == r {
        out.push(clique_edge_refs(host, set));
        return;
    }
    for (i, &x) in cand.iter().enumerate() {
        set.push(x);
        let next: Vec<VertexId> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&y| all_subedges_present(host, set, y))
            .collect();
        extend_clique_gen(host, set, next, r, out);
        set.pop();
    }
}

fn clique_edge_refs(host: &Hypergraph, set: &[VertexId]) -> Box<[EdgeRef]> {
    let ell = host.ell();
    let mut refs = Vec::new();
    let mut idx: Vec<usize> = (0..ell).collect();
    loop {
        let edge: Vec<VertexId> = idx.iter().map(|&i| set[i]).collect();
        refs.push(host.edge_index(&edge).expect("clique edge present"));
        let mut i = ell;
        loop {
            if i == 0 {
                refs.sort_unstable();
                return refs.into_boxed_slice();
            }
            i -= 1;
            if idx[i] < set.len() - ell + i {
                idx[i] += 1;
                for j in i + 1..ell {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// k-cycles rooted at their smallest vertex, direction-canonicalized.
fn cycle_copies(host: &Hypergraph, k: usize) -> Vec<Box<[EdgeRef]>> {
    let adj = host.adjacency();
    let n = host.n_vertices();
    let mut out = Vec::new();
    let mut path: Vec<VertexId> = Vec::with_capacity(k);
    let mut on_path = vec![false; n];

    fn dfs(
        host: &Hypergraph,
        adj: &[Vec<VertexId>],
        k: usize,
        path: &mut Vec<VertexId>,
        on_path: &mut [bool],
        out: &mut Vec<Box<[EdgeRef]>>,
    ) {
        let root = path[0];
        let last = *path.last().unwrap();
        if path.len() == k {
            if adj[last as usize].binary_search(&root).is_ok() && path[1] < last {
                let mut refs: Vec<EdgeRef> = path
                    .windows(2)
                    .map(|w| {
                        let mut e = [w[0], w[1]];
                        e.sort_unstable();
                        host.edge_index(&e).unwrap()
                    })
                    .collect();
                let mut e = [root.min(last), root.max(last)];
                e.sort_unstable();
                refs.push(host.edge_index(&e).unwrap());
                refs.sort_unstable();
                out.push(refs.into_boxed_slice());
            }
            return;
        }
        for &w in &adj[last as usize] {
            if w > root && !on_path[w as usize] {
                path.push(w);
                on_path[w as usize] = true;
                dfs(host, adj, k, path, on_path, out);
                on_path[w as usize] = false;
                path.pop();
            }
        }
    }

    for v in 0..n as u32 {
        path.push(v);
        on_path[v as usize] = true;
        dfs(host, &adj, k, &mut path, &mut on_path, &mut out);
        on_path[v as usize] = false;
        path.pop();
    }
    out
}

/// Backtracking embedding enumeration with per-edge incremental checks and
/// edge-set deduplication.
pub(crate) fn generic_copies(host: &Hypergraph, pattern: &Hypergraph) -> Vec<Box<[EdgeRef]>> {
    let nf = pattern.n_vertices();
    let ng = host.n_vertices();
    if nf > ng || pattern.n_edges() > host.n_edges() {
        return Vec::new();
    }
    // search order: repeatedly take the unplaced vertex with the most placed
    // co-edge neighbours (ties by degree, then id)
    let f_inc = pattern.incidence();
    let f_deg: Vec<usize> = f_inc.iter().map(|v| v.len()).collect();
    let mut order: Vec<usize> = Vec::with_capacity(nf);
    let mut placed = vec![false; nf];
    for _ in 0..nf {
        let u = (0..nf)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| {
                let attached = f_inc[u]
                    .iter()
                    .filter(|&&e| {
                        pattern.edge(e).iter().any(|&w| placed[w as usize])
                    })
                    .count();
                (attached, f_deg[u], std::cmp::Reverse(u))
            })
            .unwrap();
        placed[u] = true;
        order.push(u);
    }
    let g_inc = host.incidence();
    let g_deg: Vec<usize> = g_inc.iter().map(|v| v.len()).collect();

    let mut map = vec![u32::MAX; nf];
    let mut used = vec![false; ng];
    let mut found: BTreeSet<Vec<EdgeRef>> = BTreeSet::new();

    struct Ctx<'a> {
        host: &'a Hypergraph,
        pattern: &'a Hypergraph,
        order: &'a [usize],
        f_inc: &'a [Vec<u32>],
        f_deg: &'a [usize],
        g_inc: &'a [Vec<u32>],
        g_deg: &'a [usize],
    }

    fn rec(ctx: &Ctx, pos: usize, map: &mut [u32], used: &mut [bool], found: &mut BTreeSet<Vec<EdgeRef>>) {
        if pos == ctx.order.len() {
            let mut refs: Vec<EdgeRef> = ctx
                .pattern
                .edges()
                .map(|e| {
                    let mut img: Vec<u32> = e.iter().map(|&v| map[v as usize]).collect();
                    img.sort_unstable();
                    ctx.host.edge_index(&img).expect("checked incrementally")
                })
                .collect();
            refs.sort_unstable();
            refs.dedup();
            found.insert(refs);
            return;
        }
        let u = ctx.order[pos];
        // candidates: if some pattern edge at u has all other vertices
        // placed, host images must extend that edge
        let anchor = ctx.f_inc[u].iter().find(|&&e| {
            ctx.pattern.edge(e).iter().all(|&w| w as usize == u || map[w as usize] != u32::MAX)
        });
        let cands: Vec<u32> = match anchor {
            Some(&e) => {
                let imgs: Vec<u32> = ctx
                    .pattern
                    .edge(e)
                    .iter()
                    .filter(|&&w| w as usize != u)
                    .map(|&w| map[w as usize])
                    .collect();
                let probe = imgs[0] as usize;
                let mut cs = Vec::new();
                for &he in &ctx.g_inc[probe] {
                    let hedge = ctx.host.edge(he);
                    if imgs.iter().all(|i| hedge.contains(i)) {
                        for &x in hedge {
                            if !imgs.contains(&x) {
                                cs.push(x);
                            }
                        }
                    }
                }
                cs.sort_unstable();
                cs.dedup();
                cs
            }
            None => (0..ctx.host.n_vertices() as u32).collect(),
        };
        'cand: for x in cands {
            if used[x as usize] || ctx.g_deg[x as usize] < ctx.f_deg[u] {
                continue;
            }
            map[u] = x;
            // every pattern edge that just became fully mapped must land on
            // a host edge
            for &e in &ctx.f_inc[u] {
                let pe = ctx.pattern.edge(e);
                if pe.iter().all(|&w| map[w as usize] != u32::MAX) {
                    let mut img: Vec<u32> = pe.iter().map(|&w| map[w as usize]).collect();
                    img.sort_unstable();
                    if !ctx.host.has_edge(&img) {
                        map[u] = u32::MAX;
                        continue 'cand;
                    }
                }
            }
            used[x as usize] = true;
            rec(ctx, pos + 1, map, used, found);
            used[x as usize] = false;
            map[u] = u32::MAX;
        }
    }

    let ctx = Ctx { host, pattern, order: &order, f_inc: &f_inc, f_deg: &f_deg, g_inc: &g_inc, g_deg: &g_deg };
    rec(&ctx, 0, &mut map, &mut used, &mut found);
    found.into_iter().map(|v| v.into_boxed_slice()).collect()
}

impl<'g> CopyIndex<'g> {
    /// Rebuilds an index from an already-enumerated copy list (sorted edge
    /// ref tuples, deduplicated, in lexicographic order).
    pub fn from_parts(
        host: &'g Hypergraph,
        pattern: Hypergraph,
        copies: Vec<Box<[EdgeRef]>>,
    ) -> CopyIndex<'g> {
        let mut edge_to_copies: HashMap<EdgeRef, Vec<u32>> = HashMap::new();
        for (id, c) in copies.iter().enumerate() {
            for &e in c.iter() {
                edge_to_copies.entry(e).or_default().push(id as u32);
            }
        }
        CopyIndex { host, pattern, copies, edge_to_copies }
    }

    pub fn n_copies(&self) -> usize {
        self.copies.len()
    }

    pub fn copies_of(&self, e: EdgeRef) -> &[u32] {
        self.edge_to_copies.get(&e).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// True iff the copy lists of `e1` and `e2` are identical as sets.
    /// Two edges lying in no copy at all are (vacuously) equivalent.
    pub fn f_equivalent(&self, e1: EdgeRef, e2: EdgeRef) -> bool {
        self.copies_of(e1) == self.copies_of(e2)
    }
}

#[derive(Debug)]
pub struct ClosednessReport {
    pub closed_edges: Vec<EdgeRef>,
    pub closed_copies: Vec<u32>,
    pub graph_closed: bool,
    pub uncovered_vertices: Vec<VertexId>,
    pub uncovered_edges: Vec<EdgeRef>,
}

/// Closedness per the γ(F) case split: an edge is closed when it lies in at
/// least two copies, and — when γ(F) < ℓ−1 — additionally no other edge is
/// F-equivalent to it. A copy is closed when at least three of its edges
/// are; the graph is closed when everything is covered and every copy is
/// closed.
pub fn closedness(idx: &CopyIndex) -> Result<ClosednessReport> {
    let gamma = density::gamma(&idx.pattern)?;
    let split_case = gamma == idx.pattern.ell() - 1;
    let host = idx.host;
    let m = host.n_edges();

    // group covered edges by copy list for the equivalence check
    let mut class_size: HashMap<&[u32], usize> = HashMap::new();
    if !split_case {
        for lists in idx.edge_to_copies.values() {
            *class_size.entry(lists.as_slice()).or_insert(0) += 1;
        }
    }

    let mut closed_edge = vec![false; m];
    for (&e, lists) in &idx.edge_to_copies {
        if lists.len() < 2 {
            continue;
        }
        if split_case || class_size[lists.as_slice()] == 1 {
            closed_edge[e as usize] = true;
        }
    }

    let mut closed_copies = Vec::new();
    let mut all_copies_closed = true;
    for (id, c) in idx.copies.iter().enumerate() {
        let k = c.iter().filter(|&&e| closed_edge[e as usize]).count();
        if k >= 3 {
            closed_copies.push(id as u32);
        } else {
            all_copies_closed = false;
        }
    }

    let mut covered_vertex = vec![false; host.n_vertices()];
    let mut uncovered_edges = Vec::new();
    for e in host.edge_refs() {
        if idx.edge_to_copies.contains_key(&e) {
            for &v in host.edge(e) {
                covered_vertex[v as usize] = true;
            }
        } else {
            uncovered_edges.push(e);
        }
    }
    let uncovered_vertices: Vec<VertexId> = (0..host.n_vertices() as u32)
        .filter(|&v| !covered_vertex[v as usize])
        .collect();

    let graph_closed =
        all_copies_closed && uncovered_edges.is_empty() && uncovered_vertices.is_empty();
    let closed_edges = (0..m as u32).filter(|&e| closed_edge[e as usize]).collect();
    Ok(ClosednessReport {
        closed_edges,
        closed_copies,
        graph_closed,
        uncovered_vertices,
        uncovered_edges,
    })
}

#[derive(Debug)]
pub struct BlockDecomposition {
    /// Edge-ref sets, each sorted; blocks ordered by smallest edge ref.
    pub blocks: Vec<Vec<EdgeRef>>,
    /// Edges lying in no copy (excluded from blocks).
    pub uncovered_edges: Vec<EdgeRef>,
}

/// Union-find over edges, uniting the edges of every copy. Edges in no copy
/// are excluded from blocks and reported separately, which keeps the
/// operation total on non-closed inputs.
pub fn block_decomposition(idx: &CopyIndex) -> BlockDecomposition {
    let m = idx.host.n_edges();
    let mut uf = UnionFind::new(m);
    for c in &idx.copies {
        for w in c.windows(2) {
            uf.union(w[0] as usize, w[1] as usize);
        }
    }
    let mut groups: HashMap<usize, Vec<EdgeRef>> = HashMap::new();
    let mut uncovered = Vec::new();
    for e in 0..m as u32 {
        if idx.edge_to_copies.contains_key(&e) {
            groups.entry(uf.find(e as usize)).or_default().push(e);
        } else {
            uncovered.push(e);
        }
    }
    let mut blocks: Vec<Vec<EdgeRef>> = groups.into_values().collect();
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_by_key(|b| b[0]);
    debug_assert!(idx.copies.iter().all(|c| {
        blocks
            .iter()
            .any(|b| c.iter().all(|e| b.binary_search(e).is_ok()))
    }));
    BlockDecomposition { blocks, uncovered_edges: uncovered }
}

/// True iff `g` is F-closed and its copy structure forms a single block
/// spanning all edges.
pub fn is_block(g: &Hypergraph, f: &Hypergraph) -> Result<bool> {
    let idx = enumerate_copies(g, f)?;
    let report = closedness(&idx)?;
    if !report.graph_closed {
        return Ok(false);
    }
    let dec = block_decomposition(&idx);
    Ok(dec.blocks.len() == 1 && dec.blocks[0].len() == g.n_edges())
}

/// Copy index with edge deletion: removing an edge kills exactly the copies
/// containing it. Signature queries ("which copies is this edge still in")
/// drive the stripping loops.
pub struct LiveCopies<'g> {
    pub idx: CopyIndex<'g>,
    copy_alive: Vec<bool>,
    edge_alive: Vec<bool>,
    n_live_copies: usize,
}

impl<'g> LiveCopies<'g> {
    pub fn new(idx: CopyIndex<'g>) -> Self {
        let m = idx.host.n_edges();
        let nc = idx.copies.len();
        LiveCopies {
            copy_alive: vec![true; nc],
            edge_alive: vec![true; m],
            n_live_copies: nc,
            idx,
        }
    }

    pub fn edge_alive(&self, e: EdgeRef) -> bool {
        self.edge_alive[e as usize]
    }

    pub fn copy_alive(&self, c: u32) -> bool {
        self.copy_alive[c as usize]
    }

    pub fn n_live_copies(&self) -> usize {
        self.n_live_copies
    }

    /// Live copies containing `e`, ascending.
    pub fn live_copies_of(&self, e: EdgeRef) -> Vec<u32> {
        self.idx
            .copies_of(e)
            .iter()
            .copied()
            .filter(|&c| self.copy_alive[c as usize])
            .collect()
    }

    pub fn live_copy_count(&self, e: EdgeRef) -> usize {
        self.idx
            .copies_of(e)
            .iter()
            .filter(|&&c| self.copy_alive[c as usize])
            .count()
    }

    /// Deletes an edge; returns the copies that died and, for each, the
    /// other edges whose copy lists changed.
    pub fn delete_edge(&mut self, e: EdgeRef) -> Vec<u32> {
        assert!(self.edge_alive[e as usize], "edge deleted twice");
        self.edge_alive[e as usize] = false;
        let mut died = Vec::new();
        for &c in self.idx.copies_of(e) {
            if self.copy_alive[c as usize] {
                self.copy_alive[c as usize] = false;
                self.n_live_copies -= 1;
                died.push(c);
            }
        }
        died
    }

    /// Edges (other than `e`) touched by the death of copy `c`.
    pub fn copy_edges(&self, c: u32) -> &[EdgeRef] {
        &self.idx.copies[c as usize]
    }

    /// Consumes the incremental state, handing back the full copy list.
    pub fn into_copies(self) -> Vec<Box<[EdgeRef]>> {
        self.idx.copies
    }
}
