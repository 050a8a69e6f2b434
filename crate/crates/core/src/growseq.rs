//! Grow sequences for F-blocks: the copy-by-copy reconstruction of a block,
//! the first/regular/degenerate step taxonomy, fully-open bookkeeping, and
//! checkers for the combinatorial bounds the block-size argument rests on.
//!
//! Construction resolves every "arbitrary" choice lexicographically (by copy
//! edge set, then edge id, then step index), so a `(B, F)` pair always
//! yields the same sequence.

use crate::copies::{block_decomposition, closedness, enumerate_copies, CopyIndex};
use crate::density;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexId};
use crate::rat::rat;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StepKind {
    First,
    /// Regular step chosen while some copy was still open (line with the
    /// prescribed attachment edge).
    RegularOpen,
    /// Regular step chosen with everything closed (arbitrary attachment).
    RegularClosed,
    Degenerate,
}

#[derive(Clone, Debug)]
pub struct Step {
    /// Edge refs (into the block) of this copy, sorted.
    pub edges: Vec<EdgeRef>,
    pub kind: StepKind,
    /// The single shared edge, for regular steps.
    pub attachment: Option<EdgeRef>,
    /// Vertices first touched by this step.
    pub inner_vertices: Vec<VertexId>,
    /// Intersection with the union of earlier steps.
    pub shared_vertices: Vec<VertexId>,
    pub shared_edges: Vec<EdgeRef>,
}

#[derive(Clone, Debug)]
pub struct GrowSequence {
    pub block: Hypergraph,
    pub pattern: Hypergraph,
    pub steps: Vec<Step>,
    /// reg(S_i), deg(S_i), fo(S_i) per prefix, and Δ(i) per step
    /// (index 0 entries are the S_0 values; Δ(0) = 0 by convention).
    pub reg_prefix: Vec<usize>,
    pub deg_prefix: Vec<usize>,
    pub fo_prefix: Vec<usize>,
    pub delta: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GrowOptions {
    /// Proceed even when the pattern fails the qualifying hypotheses
    /// (strictly ℓ-balanced with e(F) ≥ 4, or e(F) = 3 and γ(F) = ℓ−1).
    pub allow_nonqualifying_pattern: bool,
}

/// Closedness of edges and copies inside the subgraph spanned by `in_sub`
/// (an edge-membership mask over the block's edges).
struct SubClosedness {
    copy_live: Vec<bool>,
    copy_closed: Vec<bool>,
    edge_closed: Vec<bool>,
}

fn sub_closedness(idx: &CopyIndex, in_sub: &[bool], split_case: bool) -> SubClosedness {
    let m = idx.host.n_edges();
    let copy_live: Vec<bool> = idx
        .copies
        .iter()
        .map(|c| c.iter().all(|&e| in_sub[e as usize]))
        .collect();
    let live_list = |e: EdgeRef| -> Vec<u32> {
        idx.copies_of(e)
            .iter()
            .copied()
            .filter(|&c| copy_live[c as usize])
            .collect()
    };
    // group live-copy signatures for the equivalence side condition
    let mut class_count: std::collections::HashMap<Vec<u32>, usize> = std::collections::HashMap::new();
    if !split_case {
        for e in 0..m as u32 {
            if in_sub[e as usize] {
                *class_count.entry(live_list(e)).or_insert(0) += 1;
            }
        }
    }
    let mut edge_closed = vec![false; m];
    for e in 0..m as u32 {
        if !in_sub[e as usize] {
            continue;
        }
        let lists = live_list(e);
        if lists.len() < 2 {
            continue;
        }
        if split_case || class_count[&lists] == 1 {
            edge_closed[e as usize] = true;
        }
    }
    let copy_closed: Vec<bool> = idx
        .copies
        .iter()
        .enumerate()
        .map(|(id, c)| {
            copy_live[id] && c.iter().filter(|&&e| edge_closed[e as usize]).count() >= 3
        })
        .collect();
    SubClosedness { copy_live, copy_closed, edge_closed }
}

fn pattern_qualifies(f: &Hypergraph) -> Result<bool> {
    let strict = density::is_strictly_balanced(f)?;
    let e = f.n_edges();
    let g = density::gamma(f)?;
    Ok(strict && (e >= 4 || (e == 3 && g == f.ell() - 1)))
}

/// Runs the grow-sequence construction for an F-block `b`.
///
/// Preconditions: `b` must be an F-block (hard error naming the violated
/// property otherwise); the pattern must satisfy the qualifying hypotheses
/// unless `allow_nonqualifying_pattern` is set.
pub fn build_grow_sequence(
    b: &Hypergraph,
    f: &Hypergraph,
    opts: GrowOptions,
) -> Result<GrowSequence> {
    let idx = enumerate_copies(b, f)?;
    let report = closedness(&idx)?;
    if !report.uncovered_edges.is_empty() || !report.uncovered_vertices.is_empty() {
        return Err(Error::contract(format!(
            "not a block: {} edges and {} vertices lie in no copy",
            report.uncovered_edges.len(),
            report.uncovered_vertices.len()
        )));
    }
    if !report.graph_closed {
        let bad = (0..idx.copies.len() as u32)
            .find(|c| !report.closed_copies.contains(c))
            .unwrap();
        return Err(Error::contract(format!(
            "not a block: copy {bad} (edges {:?}) is not closed",
            idx.copies[bad as usize]
        )));
    }
    let dec = block_decomposition(&idx);
    if dec.blocks.len() != 1 || dec.blocks[0].len() != b.n_edges() {
        return Err(Error::contract(format!(
            "not a block: the edge set splits into {} blocks",
            dec.blocks.len()
        )));
    }
    if !pattern_qualifies(f)? && !opts.allow_nonqualifying_pattern {
        return Err(Error::contract(
            "pattern does not satisfy the qualifying hypotheses (strictly ℓ-balanced with at \
             least 4 edges, or exactly 3 edges and γ(F) = ℓ−1); pass the override to proceed",
        ));
    }

    let split_case = density::gamma(f)? == f.ell() - 1;
    let m = b.n_edges();
    // closedness with respect to the full block
    let full = vec![true; m];
    let b_closed = sub_closedness(&idx, &full, split_case);

    let mut in_sub = vec![false; m];
    let mut step_copies: Vec<u32> = vec![0];
    for &e in idx.copies[0].iter() {
        in_sub[e as usize] = true;
    }
    let mut edges_in = idx.copies[0].len();

    while edges_in < m {
        let cur = sub_closedness(&idx, &in_sub, split_case);
        let any_open = cur.copy_live.iter().enumerate().any(|(c, &live)| live && !cur.copy_closed[c]);
        let next: u32 = if any_open {
            let j = step_copies
                .iter()
                .position(|&c| !cur.copy_closed[c as usize])
                .ok_or_else(|| {
                    Error::contract(
                        "grow sequence stuck: an open copy exists but no step copy is open",
                    )
                })?;
            let fj = &idx.copies[step_copies[j] as usize];
            let mut chosen = None;
            'edges: for &e in fj.iter() {
                if cur.edge_closed[e as usize] || !b_closed.edge_closed[e as usize] {
                    continue;
                }
                for &c in idx.copies_of(e) {
                    if !idx.copies[c as usize].iter().all(|&x| in_sub[x as usize]) {
                        chosen = Some(c);
                        break 'edges;
                    }
                }
            }
            chosen.ok_or_else(|| {
                Error::contract("grow sequence stuck: no extending copy through an open edge")
            })?
        } else {
            (0..idx.copies.len() as u32)
                .find(|&c| {
                    let copy = &idx.copies[c as usize];
                    !copy.iter().all(|&x| in_sub[x as usize])
                        && copy.iter().any(|&x| in_sub[x as usize])
                })
                .ok_or_else(|| {
                    Error::contract("grow sequence stuck: no copy extends the current subgraph")
                })?
        };
        step_copies.push(next);
        for &e in idx.copies[next as usize].iter() {
            if !in_sub[e as usize] {
                in_sub[e as usize] = true;
                edges_in += 1;
            }
        }
    }

    let copy_sets: Vec<Vec<EdgeRef>> = step_copies
        .iter()
        .map(|&c| idx.copies[c as usize].to_vec())
        .collect();
    classify_copy_sequence(b, f, &copy_sets)
}

/// Rebuilds all step bookkeeping (kinds, attachments, inner vertices, Δ,
/// prefix counters) from the raw copy sequence; shared by construction and
/// by the independent re-classification.
pub fn classify_copy_sequence(
    b: &Hypergraph,
    f: &Hypergraph,
    copy_sets: &[Vec<EdgeRef>],
) -> Result<GrowSequence> {
    if copy_sets.is_empty() {
        return Err(Error::input("empty grow sequence"));
    }
    let idx = enumerate_copies(b, f)?;
    let split_case = density::gamma(f)? == f.ell() - 1;
    let m = b.n_edges();
    let n = b.n_vertices();

    let mut in_sub = vec![false; m];
    let mut vert_in = vec![false; n];
    let mut steps: Vec<Step> = Vec::with_capacity(copy_sets.len());
    let mut fully_open: Vec<Option<Vec<VertexId>>> = Vec::new(); // inner vertices per open step
    let mut reg_prefix = Vec::new();
    let mut deg_prefix = Vec::new();
    let mut fo_prefix = Vec::new();
    let mut delta = Vec::new();
    let (mut reg, mut deg) = (0usize, 0usize);

    for (i, copy) in copy_sets.iter().enumerate() {
        let verts = copy_vertices(b, copy);
        let shared_edges: Vec<EdgeRef> =
            copy.iter().copied().filter(|&e| in_sub[e as usize]).collect();
        let shared_vertices: Vec<VertexId> =
            verts.iter().copied().filter(|&v| vert_in[v as usize]).collect();
        let inner: Vec<VertexId> =
            verts.iter().copied().filter(|&v| !vert_in[v as usize]).collect();

        let kind = if i == 0 {
            StepKind::First
        } else {
            if shared_edges.is_empty() {
                return Err(Error::contract(format!(
                    "step {i} shares no edge with the union of earlier steps"
                )));
            }
            if copy.iter().all(|&e| in_sub[e as usize]) {
                return Err(Error::contract(format!("step {i} contributes no new edge")));
            }
            let regular = shared_edges.len() == 1
                && shared_vertices.len() == b.ell()
                && b.edge(shared_edges[0]).iter().all(|v| shared_vertices.contains(v));
            if regular {
                // branch attribution: open iff some copy inside the union
                // was not yet closed
                let cur = sub_closedness(&idx, &in_sub, split_case);
                let any_open = cur
                    .copy_live
                    .iter()
                    .enumerate()
                    .any(|(c, &live)| live && !cur.copy_closed[c]);
                if any_open {
                    StepKind::RegularOpen
                } else {
                    StepKind::RegularClosed
                }
            } else {
                StepKind::Degenerate
            }
        };

        // Δ(i): fully-open steps whose inner vertices this copy touches
        let mut destroyed = 0;
        for slot in fully_open.iter_mut() {
            if let Some(inner_j) = slot {
                if inner_j.iter().any(|v| verts.contains(v)) {
                    destroyed += 1;
                    *slot = None;
                }
            }
        }
        delta.push(if i == 0 { 0 } else { destroyed });

        match kind {
            StepKind::First => fully_open.push(Some(inner.clone())),
            StepKind::RegularOpen | StepKind::RegularClosed => {
                reg += 1;
                fully_open.push(Some(inner.clone()));
            }
            StepKind::Degenerate => {
                deg += 1;
                fully_open.push(None);
            }
        }
        reg_prefix.push(reg);
        deg_prefix.push(deg);
        fo_prefix.push(fully_open.iter().filter(|s| s.is_some()).count());

        steps.push(Step {
            edges: copy.clone(),
            kind,
            attachment: (matches!(kind, StepKind::RegularOpen | StepKind::RegularClosed))
                .then(|| shared_edges[0]),
            inner_vertices: inner,
            shared_vertices,
            shared_edges,
        });
        for &e in copy {
            in_sub[e as usize] = true;
        }
        for &v in &verts {
            vert_in[v as usize] = true;
        }
    }

    if !in_sub.iter().all(|&x| x) {
        return Err(Error::contract("steps do not reconstruct the block"));
    }
    Ok(GrowSequence {
        block: b.clone(),
        pattern: f.clone(),
        steps,
        reg_prefix,
        deg_prefix,
        fo_prefix,
        delta,
    })
}

fn copy_vertices(b: &Hypergraph, copy: &[EdgeRef]) -> Vec<VertexId> {
    let mut vs: Vec<VertexId> = copy.iter().flat_map(|&e| b.edge(e).iter().copied()).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Re-derives all bookkeeping from the raw copy sequence, independent of
/// whatever counters the sequence carries.
pub fn classify_steps(seq: &GrowSequence) -> Result<GrowSequence> {
    let copy_sets: Vec<Vec<EdgeRef>> = seq.steps.iter().map(|s| s.edges.clone()).collect();
    classify_copy_sequence(&seq.block, &seq.pattern, &copy_sets)
}

#[derive(Debug, Serialize)]
pub struct ClaimReport {
    pub violations: Vec<String>,
    pub steps: usize,
    pub regular: usize,
    pub degenerate: usize,
}

impl ClaimReport {
    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies, against an independent re-classification of the sequence:
/// the fully-open lower bound `fo(S_i) ≥ reg(S_i)/2 − deg(S_i)·v(F)`; the
/// Δ bounds per step kind; the consecutive-regular rule (Δ(i)=1 forces
/// Δ(i+1)=0); the length bound `s ≤ 3d·v(F)`; and that regular steps with
/// index ≥ 3d·v(F)+2 within a d-degenerate prefix use the open branch.
/// Violations are reported, not thrown.
pub fn check_claims(seq: &GrowSequence) -> Result<ClaimReport> {
    let fresh = classify_steps(seq)?;
    let mut violations = Vec::new();
    let vf = seq.pattern.n_vertices();
    let ell = seq.pattern.ell();
    let s = fresh.steps.len() - 1;

    // stored counters must match the recomputation
    if seq.reg_prefix != fresh.reg_prefix
        || seq.deg_prefix != fresh.deg_prefix
        || seq.fo_prefix != fresh.fo_prefix
        || seq.delta != fresh.delta
    {
        violations.push("stored counters disagree with recomputation".into());
    }
    for (i, (a, b)) in seq.steps.iter().zip(fresh.steps.iter()).enumerate() {
        if a.kind != b.kind {
            violations.push(format!("step {i}: stored kind {:?} but recomputed {:?}", a.kind, b.kind));
        }
    }

    for i in 1..=s {
        let step = &fresh.steps[i];
        let d = fresh.delta[i];
        match step.kind {
            StepKind::RegularOpen | StepKind::RegularClosed => {
                if d > 1 {
                    violations.push(format!("step {i}: regular step destroyed {d} > 1 fully-open steps"));
                }
            }
            StepKind::Degenerate => {
                if d > vf - ell + 1 {
                    violations.push(format!(
                        "step {i}: degenerate step destroyed {d} > v(F) − ℓ + 1 = {}",
                        vf - ell + 1
                    ));
                }
            }
            StepKind::First => {}
        }
        // fo(S_i) ≥ reg(S_i)/2 − deg(S_i)·v(F), compared exactly
        let fo = rat(fresh.fo_prefix[i] as i64, 1);
        let bound = rat(fresh.reg_prefix[i] as i64, 2) - rat((fresh.deg_prefix[i] * vf) as i64, 1);
        if fo < bound {
            violations.push(format!(
                "prefix {i}: fo = {} below reg/2 − deg·v(F) = {}/2 − {}·{}",
                fresh.fo_prefix[i], fresh.reg_prefix[i], fresh.deg_prefix[i], vf
            ));
        }
    }
    for i in 1..s {
        let both_regular = matches!(
            fresh.steps[i].kind,
            StepKind::RegularOpen | StepKind::RegularClosed
        ) && matches!(
            fresh.steps[i + 1].kind,
            StepKind::RegularOpen | StepKind::RegularClosed
        );
        if both_regular && fresh.delta[i] == 1 && fresh.delta[i + 1] != 0 {
            violations.push(format!(
                "steps {i},{}: consecutive regular steps with Δ = 1 then Δ = {}",
                i + 1,
                fresh.delta[i + 1]
            ));
        }
    }
    let d_total = *fresh.deg_prefix.last().unwrap();
    if s > 3 * d_total * vf {
        violations.push(format!(
            "length bound violated: s = {s} > 3·d·v(F) = {}",
            3 * d_total * vf
        ));
    }
    for i in 1..=s {
        if fresh.steps[i].kind == StepKind::RegularClosed {
            let d_here = fresh.deg_prefix[i];
            if i >= 3 * d_here * vf + 2 {
                violations.push(format!(
                    "step {i}: closed-branch regular step beyond 3d·v(F)+1 = {}",
                    3 * d_here * vf + 1
                ));
            }
        }
    }

    Ok(ClaimReport {
        violations,
        steps: fresh.steps.len(),
        regular: *fresh.reg_prefix.last().unwrap(),
        degenerate: d_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn k4_k3_sequence_golden() {
        // K3 qualifies through the 3-edge clause: strictly balanced, γ = ℓ−1
        let b = corpus::clique(4);
        let f = corpus::clique(3);
        let seq = build_grow_sequence(&b, &f, GrowOptions::default()).unwrap();
        assert_eq!(seq.steps.len(), 3);
        assert_eq!(seq.steps[0].kind, StepKind::First);
        assert_eq!(seq.steps[1].kind, StepKind::RegularOpen);
        assert_eq!(seq.steps[2].kind, StepKind::Degenerate);
        // F_0 = triangle 012, F_1 attaches at edge {0,1}
        let e01 = b.edge_index(&[0, 1]).unwrap();
        assert_eq!(seq.steps[1].attachment, Some(e01));
        assert_eq!(seq.delta, vec![0, 1, 1]);
        assert_eq!(seq.fo_prefix, vec![1, 1, 0]);
        let report = check_claims(&seq).unwrap();
        assert!(report.all_hold(), "violations: {:?}", report.violations);
    }

    #[test]
    fn c6_3plus_c4_sequence_checks() {
        let b = corpus::c6_3plus();
        let f = corpus::cycle(4);
        let seq = build_grow_sequence(&b, &f, GrowOptions::default()).unwrap();
        // union reconstructs all 9 edges
        let mut covered: Vec<EdgeRef> = seq.steps.iter().flat_map(|s| s.edges.clone()).collect();
        covered.sort_unstable();
        covered.dedup();
        assert_eq!(covered.len(), 9);
        let report = check_claims(&seq).unwrap();
        assert!(report.all_hold(), "violations: {:?}", report.violations);
    }

    #[test]
    fn doubled_k5_3_sequence_checks() {
        let b = corpus::doubled_k5_3();
        let f = corpus::hyperclique(4, 3);
        let seq = build_grow_sequence(&b, &f, GrowOptions::default()).unwrap();
        let report = check_claims(&seq).unwrap();
        assert!(report.all_hold(), "violations: {:?}", report.violations);
    }

    #[test]
    fn non_block_rejected() {
        // two disjoint K4s
        let mut edges: Vec<Vec<u32>> = corpus::clique(4).edges().map(|e| e.to_vec()).collect();
        for e in corpus::clique(4).edges() {
            edges.push(vec![e[0] + 4, e[1] + 4]);
        }
        let g = Hypergraph::new(2, 8, &edges).unwrap();
        let err = build_grow_sequence(&g, &corpus::clique(3), GrowOptions {
            allow_nonqualifying_pattern: true,
        });
        assert!(matches!(err, Err(Error::Contract(_))));
    }

    #[test]
    fn nonqualifying_pattern_needs_override() {
        // the 3-edge star is not strictly balanced (a path ties its
        // 2-density), so it fails the hypotheses; the 4-star is still a
        // block for it, and the override lets exploration proceed
        let star4 = Hypergraph::new(2, 5, &[vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]]).unwrap();
        let star3 = Hypergraph::new(2, 4, &[vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert!(crate::copies::is_block(&star4, &star3).unwrap());
        let res = build_grow_sequence(&star4, &star3, GrowOptions::default());
        assert!(matches!(res, Err(Error::Contract(_))));
        let seq = build_grow_sequence(
            &star4,
            &star3,
            GrowOptions { allow_nonqualifying_pattern: true },
        )
        .unwrap();
        assert_eq!(seq.steps.len(), 2);
    }

    #[test]
    fn determinism() {
        let b = corpus::c6_3plus();
        let f = corpus::cycle(4);
        let s1 = build_grow_sequence(&b, &f, GrowOptions::default()).unwrap();
        let s2 = build_grow_sequence(&b, &f, GrowOptions::default()).unwrap();
        let e1: Vec<Vec<EdgeRef>> = s1.steps.iter().map(|s| s.edges.clone()).collect();
        let e2: Vec<Vec<EdgeRef>> = s2.steps.iter().map(|s| s.edges.clone()).collect();
        assert_eq!(e1, e2);
    }

    #[test]
    fn forged_counter_detected() {
        let b = corpus::clique(4);
        let f = corpus::clique(3);
        let mut seq =
            build_grow_sequence(&b, &f, GrowOptions { allow_nonqualifying_pattern: true }).unwrap();
        seq.fo_prefix[1] += 5;
        let report = check_claims(&seq).unwrap();
        assert!(!report.all_hold());
    }

    /// Attaching a fresh copy at a single edge creates only copies of the
    /// form (new copy − attachment + ẽ) with |ẽ ∩ e| > γ(F).
    #[test]
    fn regular_attachment_copy_shapes() {
        for (host, f) in [
            (corpus::clique(5), corpus::clique(4)),
            (corpus::c6_3plus(), corpus::cycle(4)),
            (corpus::hyperclique(5, 3), corpus::hyperclique(4, 3)),
        ] {
            let gamma = density::gamma(&f).unwrap();
            let e0: Vec<u32> = host.edge(0).to_vec();
            // glue a fresh pattern copy along host edge 0
            let n0 = host.n_vertices() as u32;
            let mut map: Vec<u32> = Vec::new(); // pattern vertex -> new host id
            let fe0: Vec<u32> = f.edge(0).to_vec();
            let mut next = n0;
            for v in 0..f.n_vertices() as u32 {
                if let Some(pos) = fe0.iter().position(|&x| x == v) {
                    map.push(e0[pos]);
                } else {
                    map.push(next);
                    next += 1;
                }
            }
            let mut edges: Vec<Vec<u32>> = host.edges().map(|e| e.to_vec()).collect();
            for fe in f.edges() {
                let img: Vec<u32> = fe.iter().map(|&v| map[v as usize]).collect();
                edges.push(img);
            }
            let union = Hypergraph::from_edges_dedup(2.max(host.ell()), next as usize, &edges).unwrap();
            let new_edge_refs: Vec<u32> = f
                .edges()
                .map(|fe| {
                    let mut img: Vec<u32> = fe.iter().map(|&v| map[v as usize]).collect();
                    img.sort_unstable();
                    union.edge_index(&img).unwrap()
                })
                .collect();
            let attach_ref = union.edge_index(&{
                let mut s = e0.clone();
                s.sort_unstable();
                s
            })
            .unwrap();
            let host_refs: Vec<u32> = host
                .edges()
                .map(|e| union.edge_index(e).unwrap())
                .collect();

            let idx = enumerate_copies(&union, &f).unwrap();
            let mut sorted_new: Vec<u32> = new_edge_refs.clone();
            sorted_new.sort_unstable();
            for copy in &idx.copies {
                let inside_host = copy.iter().all(|e| host_refs.contains(e));
                if inside_host || copy.as_ref() == sorted_new.as_slice() {
                    continue;
                }
                // must be (new copy − attachment) + ẽ with big intersection
                let mut uses: Vec<u32> = copy
                    .iter()
                    .copied()
                    .filter(|e| sorted_new.contains(e) && *e != attach_ref)
                    .collect();
                uses.sort_unstable();
                let expected: Vec<u32> = sorted_new
                    .iter()
                    .copied()
                    .filter(|&e| e != attach_ref)
                    .collect();
                assert_eq!(uses, expected, "copy {copy:?} is not of the projected shape");
                let extra: Vec<u32> = copy
                    .iter()
                    .copied()
                    .filter(|e| !expected.contains(e))
                    .collect();
                assert_eq!(extra.len(), 1);
                let tilde = union.edge(extra[0]);
                let inter = tilde
                    .iter()
                    .filter(|v| {
                        let mut s = e0.clone();
                        s.sort_unstable();
                        s.contains(v)
                    })
                    .count();
                assert!(inter > gamma, "|ẽ ∩ e| = {inter} not above γ = {gamma}");
            }
        }
    }
}
