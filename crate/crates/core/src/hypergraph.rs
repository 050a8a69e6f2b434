//! ℓ-uniform hypergraphs with canonically sorted edge storage.
//!
//! Edges are strictly increasing ℓ-tuples of vertex ids, stored flattened and
//! sorted lexicographically. All identity downstream (copy deduplication,
//! F-equivalence) is by this canonical form. A `Hypergraph` is immutable
//! after construction; operations return new graphs.

use crate::error::{Error, Result};
use std::fmt::Write as _;

pub type VertexId = u32;
/// Index into the edge list of a fixed [`Hypergraph`]. Valid while the
/// owning graph is unmodified (graphs are immutable, so effectively always).
pub type EdgeRef = u32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    ell: usize,
    n: usize,
    /// Flattened edge list, `m * ell` entries. Each edge strictly increasing,
    /// edges sorted lexicographically, no duplicates.
    edges: Vec<VertexId>,
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(ell={}, n={}, m={}, edges=[", self.ell, self.n, self.n_edges())?;
        for i in 0..self.n_edges().min(30) {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{:?}", self.edge(i as EdgeRef))?;
        }
        if self.n_edges() > 30 {
            write!(f, " ...")?;
        }
        write!(f, "])")
    }
}

impl Hypergraph {
    /// Builds a graph from edge tuples, canonicalizing each tuple and the
    /// edge order. Rejects out-of-range ids, repeated vertices inside an
    /// edge, and duplicate edges.
    pub fn new(ell: usize, n: usize, edge_list: &[Vec<VertexId>]) -> Result<Self> {
        if ell < 1 {
            return Err(Error::input("uniformity must be at least 1"));
        }
        let mut tuples: Vec<Vec<VertexId>> = Vec::with_capacity(edge_list.len());
        for e in edge_list {
            if e.len() != ell {
                return Err(Error::input(format!(
                    "edge {e:?} has {} vertices, expected {ell}",
                    e.len()
                )));
            }
            let mut t = e.clone();
            t.sort_unstable();
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("edge {e:?} repeats a vertex")));
            }
            if let Some(&v) = t.last() {
                if v as usize >= n {
                    return Err(Error::input(format!(
                        "vertex id {v} out of range [0, {n})"
                    )));
                }
            }
            tuples.push(t);
        }
        tuples.sort_unstable();
        if tuples.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("duplicate edge"));
        }
        let mut edges = Vec::with_capacity(tuples.len() * ell);
        for t in &tuples {
            edges.extend_from_slice(t);
        }
        Ok(Hypergraph { ell, n, edges })
    }

    /// Like [`Hypergraph::new`] but silently drops duplicate edges. Handy
    /// when building unions.
    pub fn from_edges_dedup(ell: usize, n: usize, edge_list: &[Vec<VertexId>]) -> Result<Self> {
        let mut tuples: Vec<Vec<VertexId>> = Vec::with_capacity(edge_list.len());
        for e in edge_list {
            let mut t = e.clone();
            t.sort_unstable();
            tuples.push(t);
        }
        tuples.sort_unstable();
        tuples.dedup();
        Hypergraph::new(ell, n, &tuples)
    }

    /// Fast path for edges already in canonical order (each tuple strictly
    /// increasing, tuples sorted, no duplicates). Validated in debug builds.
    pub fn from_sorted_unchecked(ell: usize, n: usize, edges: Vec<VertexId>) -> Self {
        debug_assert_eq!(edges.len() % ell, 0);
        debug_assert!(edges.iter().all(|&v| (v as usize) < n));
        debug_assert!(edges.chunks_exact(ell).all(|e| e.windows(2).all(|w| w[0] < w[1])));
        debug_assert!({
            let mut ok = true;
            let mut prev: Option<&[VertexId]> = None;
            for e in edges.chunks_exact(ell) {
                if let Some(p) = prev {
                    ok &= p < e;
                }
                prev = Some(e);
            }
            ok
        });
        Hypergraph { ell, n, edges }
    }

    pub fn empty(ell: usize, n: usize) -> Self {
        Hypergraph { ell, n, edges: Vec::new() }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len() / self.ell
    }

    pub fn edge(&self, e: EdgeRef) -> &[VertexId] {
        let i = e as usize * self.ell;
        &self.edges[i..i + self.ell]
    }

    pub fn edges(&self) -> impl Iterator<Item = &[VertexId]> {
        self.edges.chunks_exact(self.ell)
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> {
        0..self.n_edges() as EdgeRef
    }

    /// Binary search for a canonical (sorted) tuple.
    pub fn edge_index(&self, edge: &[VertexId]) -> Option<EdgeRef> {
        debug_assert_eq!(edge.len(), self.ell);
        let m = self.n_edges();
        let (mut lo, mut hi) = (0usize, m);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.edge(mid as EdgeRef) < edge {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if lo < m && self.edge(lo as EdgeRef) == edge {
            Some(lo as EdgeRef)
        } else {
            None
        }
    }

    pub fn has_edge(&self, edge: &[VertexId]) -> bool {
        self.edge_index(edge).is_some()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges().filter(|e| e.contains(&v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in self.edges() {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// Minimum degree with its witness vertex; ties broken by smallest id.
    pub fn min_degree(&self) -> Option<(VertexId, usize)> {
        let deg = self.degrees();
        deg.iter()
            .enumerate()
            .min_by_key(|(v, d)| (**d, *v))
            .map(|(v, d)| (v as VertexId, *d))
    }

    /// Edge lists per vertex (CSR-ish; built on demand).
    pub fn incidence(&self) -> Vec<Vec<EdgeRef>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v as usize].push(i as EdgeRef);
            }
        }
        inc
    }

    /// For 2-graphs: adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        assert_eq!(self.ell, 2, "adjacency is for 2-graphs");
        let mut adj = vec![Vec::new(); self.n];
        for e in self.edges() {
            adj[e[0] as usize].push(e[1]);
            adj[e[1] as usize].push(e[0]);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// `G[S]`: edges fully inside `S`, vertex ids relabeled densely.
    /// Returns the relabeling as `map[new] = old`.
    pub fn induced_subgraph(&self, s: &[VertexId]) -> Result<(Hypergraph, Vec<VertexId>)> {
        let mut sel = s.to_vec();
        sel.sort_unstable();
        sel.dedup();
        if let Some(&v) = sel.last() {
            if v as usize >= self.n {
                return Err(Error::input(format!("vertex id {v} out of range")));
            }
        }
        let mut old_to_new = vec![u32::MAX; self.n];
        for (new, &old) in sel.iter().enumerate() {
            old_to_new[old as usize] = new as u32;
        }
        let mut edges = Vec::new();
        for e in self.edges() {
            if e.iter().all(|&v| old_to_new[v as usize] != u32::MAX) {
                edges.extend(e.iter().map(|&v| old_to_new[v as usize]));
            }
        }
        // relabeling preserves order, so edges stay canonical
        Ok((
            Hypergraph::from_sorted_unchecked(self.ell, sel.len(), edges),
            sel,
        ))
    }

    /// `G[E']`: the chosen edges on the union of their vertices (no isolated
    /// vertices). Returns `(graph, vertex map new -> old, edge map new -> old)`.
    pub fn edge_induced_subgraph(
        &self,
        refs: &[EdgeRef],
    ) -> Result<(Hypergraph, Vec<VertexId>, Vec<EdgeRef>)> {
        let mut rs = refs.to_vec();
        rs.sort_unstable();
        rs.dedup();
        if let Some(&r) = rs.last() {
            if r as usize >= self.n_edges() {
                return Err(Error::input(format!("edge ref {r} out of range")));
            }
        }
        let mut verts: Vec<VertexId> = rs.iter().flat_map(|&r| self.edge(r).iter().copied()).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut old_to_new = vec![u32::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            old_to_new[old as usize] = new as u32;
        }
        let mut edges = Vec::with_capacity(rs.len() * self.ell);
        for &r in &rs {
            edges.extend(self.edge(r).iter().map(|&v| old_to_new[v as usize]));
        }
        Ok((
            Hypergraph::from_sorted_unchecked(self.ell, verts.len(), edges),
            verts,
            rs,
        ))
    }

    /// Drops isolated vertices, relabeling the rest densely.
    /// Returns `map[new] = old`.
    pub fn compact(&self) -> (Hypergraph, Vec<VertexId>) {
        let mut used: Vec<VertexId> = self.edges.clone();
        used.sort_unstable();
        used.dedup();
        let mut old_to_new = vec![u32::MAX; self.n];
        for (new, &old) in used.iter().enumerate() {
            old_to_new[old as usize] = new as u32;
        }
        let edges = self.edges.iter().map(|&v| old_to_new[v as usize]).collect();
        (
            Hypergraph::from_sorted_unchecked(self.ell, used.len(), edges),
            used,
        )
    }

    /// The link `G_v`: edges `{ e \ {v} : v ∈ e }` as an (ℓ−1)-graph on the
    /// same vertex set (the result is not compacted; use [`Hypergraph::compact`]
    /// explicitly if needed). Errors for ℓ = 2, where the link degenerates to
    /// a vertex set.
    pub fn link(&self, v: VertexId) -> Result<Hypergraph> {
        if self.ell < 3 {
            return Err(Error::Unsupported(
                "link of a 2-graph degenerates to a vertex set".into(),
            ));
        }
        if v as usize >= self.n {
            return Err(Error::input(format!("vertex id {v} out of range")));
        }
        let mut edges = Vec::new();
        for e in self.edges() {
            if e.contains(&v) {
                edges.extend(e.iter().filter(|&&w| w != v));
            }
        }
        // distinct ℓ-edges through v yield distinct (ℓ−1)-tuples
        let mut tuples: Vec<&[VertexId]> = edges.chunks_exact(self.ell - 1).collect();
        tuples.sort_unstable();
        let flat = tuples.concat();
        Ok(Hypergraph::from_sorted_unchecked(self.ell - 1, self.n, flat))
    }

    /// The two-vertex link `G_{v,w}` as an (ℓ−2)-graph. For ℓ = 3 the result
    /// has uniformity 1, i.e. it encodes the vertex set of the pair link.
    pub fn link2(&self, v: VertexId, w: VertexId) -> Result<Hypergraph> {
        if v == w {
            return Err(Error::input("link2 requires two distinct vertices"));
        }
        if self.ell < 3 {
            return Err(Error::Unsupported("link2 needs uniformity at least 3".into()));
        }
        if v as usize >= self.n || w as usize >= self.n {
            return Err(Error::input("vertex id out of range"));
        }
        let mut tuples: Vec<Vec<VertexId>> = Vec::new();
        for e in self.edges() {
            if e.contains(&v) && e.contains(&w) {
                tuples.push(e.iter().copied().filter(|&x| x != v && x != w).collect());
            }
        }
        tuples.sort_unstable();
        let flat = tuples.concat();
        Ok(Hypergraph::from_sorted_unchecked(self.ell - 2, self.n, flat))
    }

    /// Connectivity of the non-isolated part: every edge reachable from every
    /// other through shared vertices. Graphs without edges count as connected
    /// only if they have at most one vertex.
    pub fn is_connected(&self) -> bool {
        if self.n_edges() == 0 {
            return self.n <= 1;
        }
        let mut uf = UnionFind::new(self.n);
        for e in self.edges() {
            for w in e.windows(2) {
                uf.union(w[0] as usize, w[1] as usize);
            }
        }
        let used: Vec<usize> = (0..self.n).filter(|&v| self.degree(v as u32) > 0).collect();
        if self.n != used.len() {
            return false; // isolated vertices break connectivity
        }
        let root = uf.find(used[0]);
        used.iter().all(|&v| uf.find(v) == root)
    }

    /// Text format: `ℓ n m` on the first line, then one edge per line as ℓ
    /// space-separated 0-based ids. Lines starting with `#` are comments.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {}", self.ell, self.n, self.n_edges());
        for e in self.edges() {
            let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", parts.join(" "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut lines = text
            .lines()
            .map(|l| l.trim())
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::input("empty graph file"))?;
        let head: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::input(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        if head.len() != 3 {
            return Err(Error::input(format!("header must be `ell n m`, got {header:?}")));
        }
        let (ell, n, m) = (head[0], head[1], head[2]);
        let mut edge_list = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines.next().ok_or_else(|| Error::input("truncated edge list"))?;
            let e: Vec<VertexId> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::input(format!("bad vertex id {t:?}"))))
                .collect::<Result<_>>()?;
            edge_list.push(e);
        }
        if lines.next().is_some() {
            return Err(Error::input("trailing data after edge list"));
        }
        Hypergraph::new(ell, n, &edge_list)
    }
}

#[derive(Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use proptest::prelude::*;

    #[test]
    fn construction_canonicalizes() {
        let g = Hypergraph::new(2, 4, &[vec![3, 0], vec![1, 0]]).unwrap();
        assert_eq!(g.edge(0), &[0, 1]);
        assert_eq!(g.edge(1), &[0, 3]);
        assert!(Hypergraph::new(2, 4, &[vec![0, 1], vec![1, 0]]).is_err());
        assert!(Hypergraph::new(2, 4, &[vec![0, 4]]).is_err());
        assert!(Hypergraph::new(2, 4, &[vec![2, 2]]).is_err());
    }

    #[test]
    fn induced_k4_examples() {
        let k4 = corpus::clique(4);
        let (h, map) = k4.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h.n_vertices(), 3);
        assert_eq!(h.n_edges(), 3); // K3
        assert_eq!(map, vec![0, 1, 2]);
        let (h1, _) = k4.induced_subgraph(&[0]).unwrap();
        assert_eq!((h1.n_vertices(), h1.n_edges()), (1, 0));
        assert!(k4.induced_subgraph(&[5]).is_err());
        // identity
        let (h2, _) = k4.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(h2, k4);
    }

    #[test]
    fn c6_3plus_is_bipartite_and_class_is_independent() {
        let g = corpus::c6_3plus();
        let classes = crate::oracle::bipartition(&g).expect("C6^3+ is bipartite");
        for class in &classes {
            let (h, _) = g.induced_subgraph(class).unwrap();
            assert_eq!(h.n_edges(), 0);
            assert_eq!(h.n_vertices(), 3);
        }
    }

    #[test]
    fn edge_induced_examples() {
        let k4 = corpus::clique(4);
        let all: Vec<EdgeRef> = k4.edge_refs().collect();
        let (h, _, _) = k4.edge_induced_subgraph(&all).unwrap();
        assert_eq!(h, k4);
        let (h0, _, _) = k4.edge_induced_subgraph(&[]).unwrap();
        assert_eq!((h0.n_vertices(), h0.n_edges()), (0, 0));
        // one triangle of K4
        let tri: Vec<EdgeRef> = [&[0u32, 1][..], &[0, 2], &[1, 2]]
            .iter()
            .map(|e| k4.edge_index(e).unwrap())
            .collect();
        let (h3, _, _) = k4.edge_induced_subgraph(&tri).unwrap();
        assert_eq!((h3.n_vertices(), h3.n_edges()), (3, 3));
        assert!(k4.edge_induced_subgraph(&[17]).is_err());
    }

    #[test]
    fn link_examples() {
        let k53 = corpus::hyperclique(5, 3);
        let link = k53.link(0).unwrap();
        assert_eq!(link.ell(), 2);
        assert_eq!(link.n_edges(), 6); // K4
        let (c, _) = link.compact();
        assert!(crate::iso::are_isomorphic(&c, &corpus::clique(4)));

        let single = Hypergraph::new(3, 3, &[vec![0, 1, 2]]).unwrap();
        let l0 = single.link(0).unwrap();
        assert_eq!(l0.n_edges(), 1);
        assert_eq!(l0.edge(0), &[1, 2]);

        assert!(corpus::clique(4).link(0).is_err()); // ell = 2 unsupported
        assert!(k53.link(9).is_err());

        // e(G_v) = deg(v) on the doubled K5^(3)
        let dbl = corpus::doubled_k5_3();
        for v in 0..dbl.n_vertices() as u32 {
            assert_eq!(dbl.link(v).unwrap().n_edges(), dbl.degree(v));
        }
    }

    #[test]
    fn link2_examples() {
        let k54 = corpus::hyperclique(5, 4);
        let l = k54.link2(0, 1).unwrap();
        assert_eq!(l.ell(), 2);
        assert_eq!(l.n_edges(), 3); // K3
        let k64 = corpus::hyperclique(6, 4);
        let l2 = k64.link2(0, 1).unwrap();
        assert_eq!(l2.n_edges(), 6); // K4, one per 4-set through {0,1}
        let (c, _) = l2.compact();
        assert!(crate::iso::are_isomorphic(&c, &corpus::clique(4)));
        assert!(k64.link2(2, 2).is_err());
        // no common edge
        let g = Hypergraph::new(3, 6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(g.link2(0, 3).unwrap().n_edges(), 0);
    }

    #[test]
    fn degrees_and_min_degree() {
        let k4 = corpus::clique(4);
        assert!(k4.edge_refs().all(|_| true));
        for v in 0..4 {
            assert_eq!(k4.degree(v), 3);
        }
        let c6p = corpus::c6_3plus();
        for v in 0..6 {
            assert_eq!(c6p.degree(v), 3); // 3-regular
        }
        let k53 = corpus::hyperclique(5, 3);
        for v in 0..5 {
            assert_eq!(k53.degree(v), 6); // C(4,2)
        }
        let g = Hypergraph::new(2, 3, &[vec![0, 1]]).unwrap();
        assert_eq!(g.min_degree(), Some((2, 0)));
    }

    proptest! {
        #[test]
        fn parse_round_trip(n in 1usize..9, seed in any::<u64>()) {
            let g = crate::oracle::random_graph_2(n, seed, 2);
            let text = g.to_text();
            let back = Hypergraph::parse(&text).unwrap();
            prop_assert_eq!(g, back);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Hypergraph::parse("").is_err());
        assert!(Hypergraph::parse("2 3").is_err());
        assert!(Hypergraph::parse("2 3 1\n0 1\n0 2").is_err());
        assert!(Hypergraph::parse("2 3 2\n0 1").is_err());
        // comments ok
        let g = Hypergraph::parse("# a triangle\n2 3 3\n0 1\n0 2\n# mid\n1 2\n").unwrap();
        assert_eq!(g.n_edges(), 3);
    }
}
