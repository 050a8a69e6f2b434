//! Exact density functionals: `d`, `m`, `d_ℓ`, `m_ℓ`, balancedness, the
//! edge-intersection parameter γ, and the two structural facts colorers rely
//! on (degeneracy orderings and bounded-out-degree orientations).
//!
//! `max_density` is exact at every size: feasibility of "some subgraph
//! denser than a/b" is a max-flow question (source → edge nodes, edge nodes
//! → their ℓ vertices, vertices → sink), and the optimum is localized by
//! bisection over the finite candidate set {a/b : a ≤ e(G), b ≤ v(G)}. An
//! exhaustive subset sweep is kept in [`crate::oracle`] for cross-checking.

use crate::error::{Error, Result};
use crate::flow::Dinic;
use crate::hypergraph::{Hypergraph, VertexId};
use crate::rat::{fmt_rat, rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

pub fn density(g: &Hypergraph) -> Result<Rat> {
    if g.n_vertices() == 0 {
        return Err(Error::input("density of an empty vertex set"));
    }
    Ok(rat(g.n_edges() as i64, g.n_vertices() as i64))
}

/// Compares rationals held as BigInt pairs (den > 0).
fn frac_lt(an: &BigInt, ad: &BigInt, bn: &BigInt, bd: &BigInt) -> bool {
    an * bd < bn * ad
}

/// Feasibility test for `max_density`: is there a non-empty `S` with
/// `e(G[S]) * den > num * |S|`? If so, returns a witness `S`.
fn denser_than(g: &Hypergraph, num: i128, den: i128) -> Option<Vec<VertexId>> {
    let m = g.n_edges();
    let n = g.n_vertices();
    // nodes: 0 = source, 1..=m edge nodes, m+1..=m+n vertex nodes, m+n+1 sink
    let s = 0;
    let t = m + n + 1;
    let mut dinic = Dinic::new(m + n + 2);
    for (i, e) in g.edges().enumerate() {
        dinic.add_edge(s, 1 + i, den);
        for &v in e {
            dinic.add_edge(1 + i, 1 + m + v as usize, i128::MAX / 4);
        }
    }
    for v in 0..n {
        dinic.add_edge(1 + m + v, t, num);
    }
    let flow = dinic.max_flow(s, t);
    if flow >= den * m as i128 {
        return None;
    }
    let side = dinic.min_cut_source_side(s);
    let witness: Vec<VertexId> = (0..n)
        .filter(|&v| side[1 + m + v])
        .map(|v| v as VertexId)
        .collect();
    debug_assert!(!witness.is_empty());
    Some(witness)
}

fn count_edges_inside(g: &Hypergraph, s: &[VertexId]) -> usize {
    let mut inside = vec![false; g.n_vertices()];
    for &v in s {
        inside[v as usize] = true;
    }
    g.edges().filter(|e| e.iter().all(|&v| inside[v as usize])).count()
}

/// `m(G) = max_{∅ ≠ S} e(G[S]) / |S|`, with a maximizing vertex set.
///
/// Bisection invariant: `lo` is always an achieved density (with witness),
/// `m(G) ≤ hi`. Any two distinct achievable densities differ by at least
/// `1/v(G)^2`, so once `hi - lo` drops below that, `lo` is the maximum.
/// Midpoints are dyadics `q/2^64`, keeping flow capacities in `i128`.
pub fn max_density(g: &Hypergraph) -> Result<(Rat, Vec<VertexId>)> {
    let n = g.n_vertices();
    let m = g.n_edges();
    if n == 0 {
        return Err(Error::input("max_density of an empty vertex set"));
    }
    if m == 0 {
        return Ok((Rat::zero(), (0..n as u32).collect()));
    }
    let mut lo_val = rat(m as i64, n as i64);
    let mut lo_wit: Vec<VertexId> = (0..n as u32).collect();
    let (mut lo_n, mut lo_d) = (BigInt::from(m), BigInt::from(n));
    let (mut hi_n, mut hi_d) = (BigInt::from(m), BigInt::one());
    let gap_num = BigInt::one();
    let gap_den = BigInt::from(n) * BigInt::from(n);
    let two_pow = BigInt::one() << 64;
    loop {
        // stop when hi - lo < 1/n^2
        let diff_n = &hi_n * &lo_d - &lo_n * &hi_d;
        let diff_d = &hi_d * &lo_d;
        if &diff_n * &gap_den < &gap_num * &diff_d {
            return Ok((lo_val, lo_wit));
        }
        // dyadic midpoint strictly inside (lo, hi)
        let mid_n = &lo_n * &hi_d + &hi_n * &lo_d;
        let mid_d = BigInt::from(2) * &lo_d * &hi_d;
        let mut q: BigInt = (&mid_n * &two_pow) / &mid_d;
        // ensure q/2^64 > lo
        if &q * &lo_d <= &lo_n * &two_pow {
            q += 1;
        }
        debug_assert!(frac_lt(&q, &two_pow, &hi_n, &hi_d));
        let q_i = q.to_i128().expect("dyadic numerator fits i128");
        match denser_than(g, q_i, 1i128 << 64) {
            Some(wit) => {
                let e_in = count_edges_inside(g, &wit);
                let d = rat(e_in as i64, wit.len() as i64);
                debug_assert!(
                    BigInt::from(e_in) * &two_pow > BigInt::from(wit.len()) * &q,
                    "flow witness must beat the tested density"
                );
                lo_val = d;
                lo_n = BigInt::from(*d.numer());
                lo_d = BigInt::from(*d.denom());
                lo_wit = wit;
            }
            None => {
                hi_n = q;
                hi_d = two_pow.clone();
            }
        }
    }
}

/// `d_ℓ(G) = (e(G) - 1) / (v(G) - ℓ)`; needs `v(G) ≥ ℓ + 1`.
pub fn ell_density(g: &Hypergraph) -> Result<Rat> {
    let (v, e, ell) = (g.n_vertices(), g.n_edges(), g.ell());
    if v < ell + 1 {
        return Err(Error::input(format!(
            "ell-density needs at least {} vertices, got {v}",
            ell + 1
        )));
    }
    Ok(rat(e as i64 - 1, (v - ell) as i64))
}

const MAX_ELL_EXHAUSTIVE_VERTICES: usize = 24;

/// `m_ℓ(G)`: maximum of `d_ℓ` over induced subgraphs on ≥ ℓ+1 vertices,
/// with a maximizing vertex set. Exhaustive over vertex subsets; meant for
/// pattern graphs (documented for v ≤ 12, hard cap 24).
pub fn max_ell_density(g: &Hypergraph) -> Result<(Rat, Vec<VertexId>)> {
    let (v, ell) = (g.n_vertices(), g.ell());
    if v < ell + 1 {
        return Err(Error::input(format!(
            "max_ell_density needs a subgraph on at least {} vertices",
            ell + 1
        )));
    }
    if v > MAX_ELL_EXHAUSTIVE_VERTICES {
        return Err(Error::Unsupported(format!(
            "max_ell_density is exhaustive and capped at {MAX_ELL_EXHAUSTIVE_VERTICES} vertices, got {v}"
        )));
    }
    let edge_masks: Vec<u64> = g
        .edges()
        .map(|e| e.iter().fold(0u64, |m, &x| m | (1 << x)))
        .collect();
    let mut best: Option<(Rat, u64)> = None;
    for mask in 1u64..(1u64 << v) {
        let size = mask.count_ones() as usize;
        if size < ell + 1 {
            continue;
        }
        let e_in = edge_masks.iter().filter(|&&em| em & mask == em).count();
        let d = rat(e_in as i64 - 1, (size - ell) as i64);
        if best.as_ref().is_none_or(|(b, _)| d > *b) {
            best = Some((d, mask));
        }
    }
    let (d, mask) = best.unwrap();
    let witness = (0..v as u32).filter(|&x| mask >> x & 1 == 1).collect();
    Ok((d, witness))
}

/// `(balanced, strictly balanced)`: balanced iff `m_ℓ(G) = d_ℓ(G)`; strict
/// iff additionally every proper induced subgraph on ≥ ℓ+1 vertices has
/// strictly smaller ℓ-density.
pub fn balancedness(g: &Hypergraph) -> Result<(bool, bool)> {
    let d = ell_density(g)?;
    let (m, _) = max_ell_density(g)?;
    let balanced = m == d;
    if !balanced {
        return Ok((false, false));
    }
    let (v, ell) = (g.n_vertices(), g.ell());
    let edge_masks: Vec<u64> = g
        .edges()
        .map(|e| e.iter().fold(0u64, |mm, &x| mm | (1 << x)))
        .collect();
    let full = (1u64 << v) - 1;
    let mut strict = true;
    for mask in 1u64..(1u64 << v) {
        if mask == full {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size < ell + 1 {
            continue;
        }
        let e_in = edge_masks.iter().filter(|&&em| em & mask == em).count();
        if rat(e_in as i64 - 1, (size - ell) as i64) >= m {
            strict = false;
            break;
        }
    }
    Ok((true, strict))
}

pub fn is_strictly_balanced(g: &Hypergraph) -> Result<bool> {
    Ok(balancedness(g)?.1)
}

/// γ(F): the largest intersection of two distinct edges.
pub fn gamma(f: &Hypergraph) -> Result<usize> {
    let m = f.n_edges();
    if m < 2 {
        return Err(Error::input("gamma needs at least two edges"));
    }
    let mut best = 0usize;
    for i in 0..m {
        let ei = f.edge(i as u32);
        for j in i + 1..m {
            let ej = f.edge(j as u32);
            let inter = ei.iter().filter(|v| ej.contains(v)).count();
            best = best.max(inter);
        }
    }
    Ok(best)
}

/// Ordering `(v_1, ..., v_n)` in which every vertex has at most `⌊2k⌋`
/// neighbours among its predecessors. Exists whenever `m(G) ≤ k`; computed
/// by repeatedly removing a minimum-degree vertex (ties to the smallest id)
/// and reversing the removal order.
pub fn degeneracy_ordering(g: &Hypergraph, k: Rat) -> Result<Vec<VertexId>> {
    if g.ell() != 2 {
        return Err(Error::Unsupported("degeneracy ordering is for 2-graphs".into()));
    }
    let (m, _) = max_density(g)?;
    if m > k {
        return Err(Error::contract(format!(
            "degeneracy ordering needs m(G) <= k, but m(G) = {} > {}",
            fmt_rat(&m),
            fmt_rat(&k)
        )));
    }
    let n = g.n_vertices();
    let adj = g.adjacency();
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v as VertexId);
        for &w in &adj[v] {
            if !removed[w as usize] {
                deg[w as usize] -= 1;
            }
        }
    }
    order.reverse();
    debug_assert!(check_back_degree(g, &order, crate::rat::floor_int(&(k * rat(2, 1))) as usize));
    Ok(order)
}

/// True iff each vertex has at most `bound` neighbours among its
/// predecessors in `order`.
pub fn check_back_degree(g: &Hypergraph, order: &[VertexId], bound: usize) -> bool {
    let mut pos = vec![usize::MAX; g.n_vertices()];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    let adj = g.adjacency();
    order.iter().all(|&v| {
        adj[v as usize]
            .iter()
            .filter(|&&w| pos[w as usize] < pos[v as usize])
            .count()
            <= bound
    })
}

/// An orientation of a 2-graph: `tail[e]` is the vertex the edge points out
/// of; out-degree of `v` = number of edges with tail `v`.
#[derive(Clone, Debug)]
pub struct Orientation {
    pub tail: Vec<VertexId>,
}

impl Orientation {
    pub fn out_degrees(&self, g: &Hypergraph) -> Vec<usize> {
        let mut out = vec![0usize; g.n_vertices()];
        for &t in &self.tail {
            out[t as usize] += 1;
        }
        out
    }

    pub fn head(&self, g: &Hypergraph, e: u32) -> VertexId {
        let edge = g.edge(e);
        if edge[0] == self.tail[e as usize] {
            edge[1]
        } else {
            edge[0]
        }
    }
}

/// Produced when no orientation with the requested out-degree bound exists;
/// the witness vertices induce more than `k · |W|` edges.
#[derive(Debug)]
pub struct OrientationFailure {
    pub witness_vertices: Vec<VertexId>,
}

impl From<OrientationFailure> for Error {
    fn from(f: OrientationFailure) -> Error {
        Error::Contract(format!(
            "no orientation with the requested out-degree bound; vertices {:?} induce too many edges",
            f.witness_vertices
        ))
    }
}

/// Orients every edge so that each vertex has out-degree at most `k`
/// (possible whenever `m(G) ≤ k`). Hall-style augmenting paths assigning
/// each edge to one endpoint with vertex capacity `k`.
pub fn bounded_orientation(
    g: &Hypergraph,
    k: usize,
) -> std::result::Result<Orientation, OrientationFailure> {
    assert_eq!(g.ell(), 2, "orientation is for 2-graphs");
    let m = g.n_edges();
    let n = g.n_vertices();

    struct State<'a> {
        g: &'a Hypergraph,
        k: usize,
        tail_of: Vec<Option<VertexId>>,
        load: Vec<usize>,
        assigned: Vec<Vec<u32>>,
        visited: Vec<bool>,
        expanded: Vec<VertexId>,
    }

    impl State<'_> {
        fn other(&self, e: u32, v: VertexId) -> VertexId {
            let t = self.g.edge(e);
            if t[0] == v {
                t[1]
            } else {
                t[0]
            }
        }

        fn take(&mut self, e: u32, v: VertexId) {
            self.tail_of[e as usize] = Some(v);
            self.load[v as usize] += 1;
            self.assigned[v as usize].push(e);
        }

        /// Moves `e` off `from` to its other endpoint, freeing a slot at
        /// `from`; displaces further along alternating paths as needed.
        fn displace(&mut self, e: u32, from: VertexId) -> bool {
            let w = self.other(e, from);
            if self.load[w as usize] < self.k {
                self.assigned[from as usize].retain(|&x| x != e);
                self.load[from as usize] -= 1;
                self.take(e, w);
                return true;
            }
            self.expanded.push(w);
            let here = self.assigned[w as usize].clone();
            for &e2 in &here {
                if self.visited[e2 as usize] {
                    continue;
                }
                self.visited[e2 as usize] = true;
                if self.displace(e2, w) {
                    self.assigned[from as usize].retain(|&x| x != e);
                    self.load[from as usize] -= 1;
                    self.take(e, w);
                    return true;
                }
            }
            false
        }

        fn augment(&mut self, e: u32) -> bool {
            let ends: [VertexId; 2] = [self.g.edge(e)[0], self.g.edge(e)[1]];
            for &v in &ends {
                if self.load[v as usize] < self.k {
                    self.take(e, v);
                    return true;
                }
            }
            for &v in &ends {
                self.expanded.push(v);
                let here = self.assigned[v as usize].clone();
                for &e2 in &here {
                    if self.visited[e2 as usize] {
                        continue;
                    }
                    self.visited[e2 as usize] = true;
                    if self.displace(e2, v) {
                        self.take(e, v);
                        return true;
                    }
                }
            }
            false
        }
    }

    let mut st = State {
        g,
        k,
        tail_of: vec![None; m],
        load: vec![0; n],
        assigned: vec![Vec::new(); n],
        visited: Vec::new(),
        expanded: Vec::new(),
    };
    for e in 0..m as u32 {
        st.visited = vec![false; m];
        st.expanded.clear();
        if !st.augment(e) {
            // every expanded vertex is saturated, and every edge assigned
            // to one has both endpoints expanded: these vertices induce
            // more than k·|W| edges
            let mut wit = std::mem::take(&mut st.expanded);
            wit.sort_unstable();
            wit.dedup();
            return Err(OrientationFailure { witness_vertices: wit });
        }
    }
    let tail = st.tail_of.into_iter().map(|t| t.unwrap()).collect();
    Ok(Orientation { tail })
}

/// Everything the `density` CLI command reports about a graph.
#[derive(Serialize)]
pub struct DensityReport {
    pub d: String,
    pub m: String,
    pub witness_m: Vec<VertexId>,
    pub d_ell: Option<String>,
    pub m_ell: Option<String>,
    pub witness_m_ell: Vec<VertexId>,
    pub gamma: Option<usize>,
    pub balanced: Option<bool>,
    pub strictly_balanced: Option<bool>,
}

impl DensityReport {
    /// The ℓ-density block is filled only when the exhaustive sweep is
    /// within its size cap; the plain densities are exact at any size.
    pub fn compute(g: &Hypergraph) -> Result<DensityReport> {
        let d = density(g)?;
        let (m, witness_m) = max_density(g)?;
        let d_ell = ell_density(g).ok();
        let ell_part = if g.n_vertices() <= MAX_ELL_EXHAUSTIVE_VERTICES {
            max_ell_density(g).ok()
        } else {
            None
        };
        let (m_ell, witness_m_ell) = match ell_part {
            Some((m, w)) => (Some(m), w),
            None => (None, Vec::new()),
        };
        let bal = if m_ell.is_some() { balancedness(g).ok() } else { None };
        Ok(DensityReport {
            d: fmt_rat(&d),
            m: fmt_rat(&m),
            witness_m,
            d_ell: d_ell.map(|r| fmt_rat(&r)),
            m_ell: m_ell.map(|r| fmt_rat(&r)),
            witness_m_ell,
            gamma: gamma(g).ok(),
            balanced: bal.map(|b| b.0),
            strictly_balanced: bal.map(|b| b.1),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::oracle;
    use proptest::prelude::*;

    #[test]
    fn density_examples() {
        assert_eq!(density(&corpus::clique(4)).unwrap(), rat(3, 2));
        assert_eq!(density(&corpus::c6_3plus()).unwrap(), rat(3, 2));
        assert_eq!(density(&corpus::hyperclique(5, 3)).unwrap(), rat(2, 1));
        assert!(density(&Hypergraph::empty(2, 0)).is_err());
    }

    #[test]
    fn max_density_examples() {
        // two disjoint edges
        let forest = Hypergraph::new(2, 4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let (d, _) = max_density(&forest).unwrap();
        assert_eq!(d, rat(1, 2));

        let (d, w) = max_density(&corpus::c6_3plus()).unwrap();
        assert_eq!(d, rat(3, 2));
        assert_eq!(w, vec![0, 1, 2, 3, 4, 5]);

        // K4 plus pendant edge: maximizer is the K4
        let mut edges: Vec<Vec<u32>> = corpus::clique(4).edges().map(|e| e.to_vec()).collect();
        edges.push(vec![3, 4]);
        let g = Hypergraph::new(2, 5, &edges).unwrap();
        let (d, w) = max_density(&g).unwrap();
        assert_eq!(d, rat(3, 2));
        assert_eq!(w, vec![0, 1, 2, 3]);
        let (od, ow) = oracle::exhaustive_max_density(&g);
        assert_eq!((od, ow), (d, w.clone()));
    }

    #[test]
    fn max_density_no_edges() {
        let g = Hypergraph::empty(2, 3);
        let (d, w) = max_density(&g).unwrap();
        assert_eq!(d, rat(0, 1));
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn ell_density_closed_forms() {
        assert_eq!(max_ell_density(&corpus::clique(4)).unwrap().0, rat(5, 2));
        assert_eq!(max_ell_density(&corpus::cycle(4)).unwrap().0, rat(3, 2));
        assert_eq!(max_ell_density(&corpus::hyperclique(4, 3)).unwrap().0, rat(3, 1));
        for ell in 2..=5usize {
            let g = corpus::hyperclique(ell + 1, ell);
            assert_eq!(max_ell_density(&g).unwrap().0, rat(ell as i64, 1));
        }
        // (binom(r, ell) - 1) / (r - ell)
        for (ell, r) in [(2usize, 5usize), (3, 5), (4, 6)] {
            let g = corpus::hyperclique(r, ell);
            let binom = g.n_edges() as i64;
            assert_eq!(
                max_ell_density(&g).unwrap().0,
                rat(binom - 1, (r - ell) as i64)
            );
        }
        assert!(max_ell_density(&corpus::clique(2)).is_err());
    }

    #[test]
    fn strictly_balanced_witness_is_whole_graph() {
        for g in [corpus::clique(4), corpus::cycle(4), corpus::hyperclique(4, 3)] {
            let (b, s) = balancedness(&g).unwrap();
            assert!(b && s);
            let (m, w) = max_ell_density(&g).unwrap();
            assert_eq!(m, ell_density(&g).unwrap());
            assert_eq!(w.len(), g.n_vertices());
        }
        // K3 plus pendant edge: not balanced
        let g = Hypergraph::new(2, 4, &[vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(balancedness(&g).unwrap(), (false, false));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&corpus::clique(3)).unwrap(), 1);
        assert_eq!(gamma(&corpus::hyperclique(4, 3)).unwrap(), 2);
        let matching = Hypergraph::new(3, 6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(gamma(&matching).unwrap(), 0);
        let single = Hypergraph::new(2, 2, &[vec![0, 1]]).unwrap();
        assert!(gamma(&single).is_err());
    }

    #[test]
    fn degeneracy_examples() {
        let p3 = corpus::path(3);
        let order = degeneracy_ordering(&p3, rat(1, 1)).unwrap();
        assert!(check_back_degree(&p3, &order, 2));

        let k4 = corpus::clique(4);
        let order = degeneracy_ordering(&k4, rat(3, 2)).unwrap();
        assert!(check_back_degree(&k4, &order, 3));

        let k19 = corpus::clique(19);
        let order = degeneracy_ordering(&k19, rat(10, 1)).unwrap();
        assert!(check_back_degree(&k19, &order, 18));

        // precondition checked
        assert!(degeneracy_ordering(&k4, rat(1, 1)).is_err());
    }

    #[test]
    fn orientation_examples() {
        let c4 = corpus::cycle(4);
        let o = bounded_orientation(&c4, 1).unwrap();
        assert!(o.out_degrees(&c4).iter().all(|&d| d <= 1));

        let k4 = corpus::clique(4);
        let o = bounded_orientation(&k4, 2).unwrap();
        assert!(o.out_degrees(&k4).iter().all(|&d| d <= 2));

        let c6p = corpus::c6_3plus();
        let o = bounded_orientation(&c6p, 2).unwrap();
        assert!(o.out_degrees(&c6p).iter().all(|&d| d <= 2));

        // infeasible: K4 has m = 3/2 > 1
        let err = bounded_orientation(&k4, 1).unwrap_err();
        let (h, _) = k4.induced_subgraph(&err.witness_vertices).unwrap();
        assert!(h.n_edges() > h.n_vertices()); // density > k = 1
    }

    proptest! {
        // Oracle equivalence: flow-based max_density equals the exhaustive
        // subset sweep on small random graphs.
        #[test]
        fn flow_matches_exhaustive(n in 1usize..9, seed in any::<u64>(), deg in 1u32..5) {
            let g = oracle::random_graph_2(n, seed, deg);
            let (d, w) = max_density(&g).unwrap();
            let (od, _) = oracle::exhaustive_max_density(&g);
            prop_assert_eq!(d, od);
            // witness reproduces the value
            let inside = count_edges_inside(&g, &w);
            prop_assert_eq!(rat(inside as i64, w.len() as i64), d);
            prop_assert!(d >= density(&g).unwrap());
        }
    }
}
