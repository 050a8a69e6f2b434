//! The two stripping loops shared by the coloring algorithms.
//!
//! Loop 1 repeatedly removes the lexicographically smallest qualifying pair
//! of F-equivalent edges (disjointness required for the proper variant),
//! re-evaluating equivalence against the live copies after each removal.
//! Loop 2 removes edges lying in no live copy, one at a time, in edge order.
//!
//! The machinery keeps two selection structures: a queue for the (usually
//! huge) class of copy-free edges, and signature buckets for edges still in
//! copies. Copy deaths move edges between them incrementally, so the whole
//! run costs roughly one queue operation per removed edge.

use super::{Coloring, ColoringVariant, StripVariant};
use crate::copies::{enumerate_copies, LiveCopies};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, UnionFind};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairRule {
    /// Any two F-equivalent edges qualify (2-bounded / ramsey stripping).
    AnyEquivalent,
    /// The pair must additionally be vertex-disjoint (proper stripping).
    DisjointEquivalent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StripEvent {
    Pair(EdgeRef, EdgeRef),
    Single(EdgeRef),
}

/// Ascending queue over alive copy-free edges: a frontier cursor over the
/// (sorted) edge ids plus a small set of edges that lost their last copy
/// behind the cursor.
struct ZeroQueue {
    cursor: EdgeRef,
    late: BTreeSet<EdgeRef>,
    m: EdgeRef,
}

impl ZeroQueue {
    fn new(m: usize) -> Self {
        ZeroQueue { cursor: 0, late: BTreeSet::new(), m: m as EdgeRef }
    }

    /// Smallest alive zero-count edge `>= from`; does not consume.
    fn peek_from(&mut self, from: EdgeRef, live: &LiveCopies) -> Option<EdgeRef> {
        let late_best = self.late.range(from..).next().copied();
        let mut s = self.cursor.max(from);
        let advancing = s == self.cursor;
        let scan_best = loop {
            if s >= self.m {
                break None;
            }
            if let Some(lb) = late_best {
                if lb < s {
                    break None; // the late hit already wins
                }
            }
            if live.edge_alive(s) && live.live_copy_count(s) == 0 {
                break Some(s);
            }
            if advancing && s == self.cursor {
                self.cursor += 1;
            }
            s += 1;
        };
        match (late_best, scan_best) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn on_deleted(&mut self, e: EdgeRef) {
        self.late.remove(&e);
        if e == self.cursor {
            self.cursor += 1;
        }
    }

    fn on_became_zero(&mut self, e: EdgeRef) {
        if e < self.cursor {
            self.late.insert(e);
        }
    }
}

/// Signature buckets for edges still lying in live copies.
struct Buckets {
    sig_of: HashMap<EdgeRef, Vec<u32>>,
    sets: HashMap<Vec<u32>, BTreeSet<EdgeRef>>,
    /// Cached best qualifying pair across buckets; `None` = dirty.
    best: Option<Option<(EdgeRef, EdgeRef)>>,
}

impl Buckets {
    fn new(live: &LiveCopies) -> Self {
        let mut sig_of = HashMap::new();
        let mut sets: HashMap<Vec<u32>, BTreeSet<EdgeRef>> = HashMap::new();
        for (&e, list) in &live.idx.edge_to_copies {
            sig_of.insert(e, list.clone());
            sets.entry(list.clone()).or_default().insert(e);
        }
        Buckets { sig_of, sets, best: None }
    }

    fn contains(&self, e: EdgeRef) -> bool {
        self.sig_of.contains_key(&e)
    }

    fn remove_edge(&mut self, e: EdgeRef) {
        if let Some(sig) = self.sig_of.remove(&e) {
            if let Some(set) = self.sets.get_mut(&sig) {
                set.remove(&e);
                if set.is_empty() {
                    self.sets.remove(&sig);
                }
            }
            self.best = None;
        }
    }

    /// Recomputes `e`'s signature from the live copies. Returns true when
    /// the edge dropped out of all copies (and so left the buckets).
    fn rebucket(&mut self, e: EdgeRef, live: &LiveCopies) -> bool {
        let Some(old) = self.sig_of.get(&e).cloned() else {
            return false;
        };
        let new = live.live_copies_of(e);
        if new == old {
            return false;
        }
        if let Some(set) = self.sets.get_mut(&old) {
            set.remove(&e);
            if set.is_empty() {
                self.sets.remove(&old);
            }
        }
        self.best = None;
        if new.is_empty() {
            self.sig_of.remove(&e);
            true
        } else {
            self.sets.entry(new.clone()).or_default().insert(e);
            self.sig_of.insert(e, new);
            false
        }
    }

    fn best_pair(&mut self, rule: PairRule, g: &Hypergraph) -> Option<(EdgeRef, EdgeRef)> {
        if let Some(cached) = self.best {
            return cached;
        }
        let mut best: Option<(EdgeRef, EdgeRef)> = None;
        for set in self.sets.values() {
            if set.len() < 2 {
                continue;
            }
            let cand = match rule {
                PairRule::AnyEquivalent => {
                    let mut it = set.iter();
                    let a = *it.next().unwrap();
                    let b = *it.next().unwrap();
                    Some((a, b))
                }
                PairRule::DisjointEquivalent => {
                    let mut found = None;
                    'outer: for &a in set {
                        for &b in set.range(a + 1..) {
                            if disjoint(g.edge(a), g.edge(b)) {
                                found = Some((a, b));
                                break 'outer;
                            }
                        }
                    }
                    found
                }
            };
            if let Some(p) = cand {
                if best.is_none_or(|b| p < b) {
                    best = Some(p);
                }
            }
        }
        self.best = Some(best);
        best
    }
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|v| !b.contains(v))
}

fn zero_pair(
    rule: PairRule,
    g: &Hypergraph,
    live: &LiveCopies,
    zq: &mut ZeroQueue,
) -> Option<(EdgeRef, EdgeRef)> {
    match rule {
        PairRule::AnyEquivalent => {
            let z1 = zq.peek_from(0, live)?;
            let z2 = zq.peek_from(z1 + 1, live)?;
            Some((z1, z2))
        }
        PairRule::DisjointEquivalent => {
            let mut start = 0;
            loop {
                let z1 = zq.peek_from(start, live)?;
                let mut probe = z1 + 1;
                while let Some(z) = zq.peek_from(probe, live) {
                    if disjoint(g.edge(z1), g.edge(z)) {
                        return Some((z1, z));
                    }
                    probe = z + 1;
                }
                start = z1 + 1;
            }
        }
    }
}

/// Runs both stripping loops, coloring removed edges as the variant
/// dictates. Returns the removal trace, the partial coloring (block edges
/// unassigned), and the next fresh color id.
pub(super) fn run_strip(
    live: &mut LiveCopies,
    rule: PairRule,
    variant: StripVariant,
    g: &Hypergraph,
) -> (Vec<StripEvent>, Coloring, u32) {
    let m = g.n_edges();
    let out_variant = match variant {
        StripVariant::Proper => ColoringVariant::Proper,
        StripVariant::Bounded => ColoringVariant::Bounded(2),
        StripVariant::Ramsey { r } => ColoringVariant::RColor(r),
    };
    let mut coloring = Coloring::unassigned(out_variant, m);
    let mut next_color = match variant {
        StripVariant::Ramsey { .. } => 2, // strip uses colors 0 and 1
        _ => 0,
    };
    let mut events = Vec::new();
    let mut zq = ZeroQueue::new(m);
    let mut buckets = Buckets::new(live);

    let delete = |e: EdgeRef, live: &mut LiveCopies, zq: &mut ZeroQueue, buckets: &mut Buckets| {
        if buckets.contains(e) {
            buckets.remove_edge(e);
        } else {
            zq.on_deleted(e);
        }
        let died = live.delete_edge(e);
        for c in died {
            for &e2 in live.copy_edges(c).to_vec().iter() {
                if e2 != e && live.edge_alive(e2) && buckets.rebucket(e2, live) {
                    zq.on_became_zero(e2);
                }
            }
        }
    };

    // loop 1: equivalent pairs
    loop {
        let covered = buckets.best_pair(rule, g);
        let zero = zero_pair(rule, g, live, &mut zq);
        let pick = match (covered, zero) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let Some((e1, e2)) = pick else { break };
        match variant {
            StripVariant::Ramsey { .. } => {
                coloring.colors[e1 as usize] = 0;
                coloring.colors[e2 as usize] = 1;
            }
            _ => {
                coloring.colors[e1 as usize] = next_color;
                coloring.colors[e2 as usize] = next_color;
                next_color += 1;
            }
        }
        events.push(StripEvent::Pair(e1, e2));
        delete(e1, live, &mut zq, &mut buckets);
        delete(e2, live, &mut zq, &mut buckets);
    }

    // loop 2: edges in no copy
    while let Some(z) = zq.peek_from(0, live) {
        match variant {
            StripVariant::Ramsey { .. } => coloring.colors[z as usize] = 0,
            _ => {
                coloring.colors[z as usize] = next_color;
                next_color += 1;
            }
        }
        events.push(StripEvent::Single(z));
        delete(z, live, &mut zq, &mut buckets);
    }

    (events, coloring, next_color)
}

/// Block decomposition of the surviving edges over the surviving copies.
pub(super) fn live_blocks(live: &LiveCopies) -> Vec<Vec<EdgeRef>> {
    // dense ids for alive covered edges
    let mut alive_edges: Vec<EdgeRef> = live
        .idx
        .edge_to_copies
        .keys()
        .copied()
        .filter(|&e| live.edge_alive(e) && live.live_copy_count(e) > 0)
        .collect();
    alive_edges.sort_unstable();
    let dense: HashMap<EdgeRef, usize> =
        alive_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut uf = UnionFind::new(alive_edges.len());
    for (id, copy) in live.idx.copies.iter().enumerate() {
        if !live.copy_alive(id as u32) {
            continue;
        }
        for w in copy.windows(2) {
            uf.union(dense[&w[0]], dense[&w[1]]);
        }
    }
    let mut groups: HashMap<usize, Vec<EdgeRef>> = HashMap::new();
    for &e in &alive_edges {
        groups.entry(uf.find(dense[&e])).or_default().push(e);
    }
    let mut blocks: Vec<Vec<EdgeRef>> = groups.into_values().collect();
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// Replays a removal trace against a fresh copy index, checking that every
/// pair was F-equivalent (and disjoint, under the proper rule) at its
/// removal time, and every single edge lay in no copy at its removal time.
pub fn validate_strip_events(
    g: &Hypergraph,
    f: &Hypergraph,
    rule: PairRule,
    events: &[StripEvent],
) -> Result<()> {
    let idx = enumerate_copies(g, f)?;
    validate_strip_events_with(idx, g, rule, events)
}

/// [`validate_strip_events`] against an existing copy index.
pub fn validate_strip_events_with(
    idx: crate::copies::CopyIndex,
    g: &Hypergraph,
    rule: PairRule,
    events: &[StripEvent],
) -> Result<()> {
    let mut live = LiveCopies::new(idx);
    for (step, ev) in events.iter().enumerate() {
        match *ev {
            StripEvent::Pair(e1, e2) => {
                if e1 == e2 || !live.edge_alive(e1) || !live.edge_alive(e2) {
                    return Err(Error::contract(format!("step {step}: pair edges not both alive")));
                }
                if live.live_copies_of(e1) != live.live_copies_of(e2) {
                    return Err(Error::contract(format!(
                        "step {step}: edges {e1} and {e2} were not equivalent at removal time"
                    )));
                }
                if rule == PairRule::DisjointEquivalent && !disjoint(g.edge(e1), g.edge(e2)) {
                    return Err(Error::contract(format!(
                        "step {step}: pair {e1},{e2} is not vertex-disjoint"
                    )));
                }
                live.delete_edge(e1);
                live.delete_edge(e2);
            }
            StripEvent::Single(e) => {
                if !live.edge_alive(e) {
                    return Err(Error::contract(format!("step {step}: single edge not alive")));
                }
                if live.live_copy_count(e) != 0 {
                    return Err(Error::contract(format!(
                        "step {step}: edge {e} still lay in a copy at removal time"
                    )));
                }
                live.delete_edge(e);
            }
        }
    }
    Ok(())
}
