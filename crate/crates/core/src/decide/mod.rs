//! Exhaustive decision procedures for the arrow properties, and the
//! small-obstruction searcher.
//!
//! For 2-bounded colorings the search runs over *maximal pairings* of the
//! edge set (all color classes of size two, at most one singleton): merging
//! two singleton classes only removes rainbow copies, so an avoiding
//! coloring exists iff an avoiding maximal pairing does. For 9 edges that is
//! 945 pairings instead of all 2-bounded colorings; the agreement is
//! property-tested against the full enumeration in [`crate::oracle`].
//!
//! "Undecided" (budget exhausted) is a first-class outcome, never a guess.

pub mod gen;

use crate::colorings::{Coloring, ColoringVariant, ColorerConfig, UNASSIGNED};
use crate::copies::enumerate_copies;
use crate::density::max_density;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rat::Rat;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DecideVariant {
    Bounded { r: u32 },
    Proper,
    Ramsey { r: u32 },
}

#[derive(Clone, Copy, Debug)]
pub struct DecideConfig {
    pub node_budget: u64,
    pub parallel: bool,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig { node_budget: 400_000_000, parallel: true }
    }
}

#[derive(Debug, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u128,
}

/// Outcome of a decision: `holds` answers "does every coloring of this kind
/// contain the target copy"; a false decision carries a verified avoiding
/// coloring, a true one a search-exhaustion certificate in `stats`.
#[derive(Debug)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<Coloring>,
    pub variant: DecideVariant,
    pub stats: SearchStats,
}

// ---------------------------------------------------------------------------
// maximal-pairing search (2-bounded)

const SELF: u32 = u32::MAX - 1;

struct PairState {
    partner: Vec<u32>,
    copy_edges: Vec<Vec<u32>>,
    edge_copies: Vec<Vec<u32>>,
    assigned: Vec<u32>,
    killed: Vec<bool>,
    killed_count: usize,
    singles_allowed: usize,
    singles_used: usize,
    nodes: u64,
    budget: u64,
    exceeded: bool,
}

impl PairState {
    fn new(m: usize, copies: &[Box<[u32]>], budget: u64) -> Self {
        let copy_edges: Vec<Vec<u32>> = copies.iter().map(|c| c.to_vec()).collect();
        let mut edge_copies = vec![Vec::new(); m];
        for (id, c) in copy_edges.iter().enumerate() {
            for &e in c {
                edge_copies[e as usize].push(id as u32);
            }
        }
        PairState {
            partner: vec![UNASSIGNED; m],
            assigned: vec![0; copy_edges.len()],
            killed: vec![false; copy_edges.len()],
            killed_count: 0,
            singles_allowed: m % 2,
            singles_used: 0,
            copy_edges,
            edge_copies,
            nodes: 0,
            budget,
            exceeded: false,
        }
    }

    /// Applies an assignment; returns (doomed, kill trail) for undo.
    fn assign(&mut self, a: u32, b: u32) -> (bool, Vec<u32>) {
        let mut kills = Vec::new();
        if b == SELF {
            self.partner[a as usize] = SELF;
            self.singles_used += 1;
        } else {
            self.partner[a as usize] = b;
            self.partner[b as usize] = a;
            for &c in &self.edge_copies[a as usize] {
                if !self.killed[c as usize]
                    && self.copy_edges[c as usize].binary_search(&b).is_ok()
                {
                    self.killed[c as usize] = true;
                    self.killed_count += 1;
                    kills.push(c);
                }
            }
        }
        let mut doomed = false;
        for &c in &self.edge_copies[a as usize] {
            self.assigned[c as usize] += 1;
        }
        if b != SELF {
            for &c in &self.edge_copies[b as usize] {
                self.assigned[c as usize] += 1;
            }
        }
        for &c in self.edge_copies[a as usize].iter().chain(if b != SELF {
            self.edge_copies[b as usize].iter()
        } else {
            [].iter()
        }) {
            if !self.killed[c as usize]
                && self.assigned[c as usize] == self.copy_edges[c as usize].len() as u32
            {
                doomed = true;
            }
        }
        (doomed, kills)
    }

    fn unassign(&mut self, a: u32, b: u32, kills: Vec<u32>) {
        for c in kills {
            self.killed[c as usize] = false;
            self.killed_count -= 1;
        }
        for &c in &self.edge_copies[a as usize] {
            self.assigned[c as usize] -= 1;
        }
        self.partner[a as usize] = UNASSIGNED;
        if b == SELF {
            self.singles_used -= 1;
        } else {
            for &c in &self.edge_copies[b as usize] {
                self.assigned[c as usize] -= 1;
            }
            self.partner[b as usize] = UNASSIGNED;
        }
    }

    fn all_killed(&self) -> bool {
        self.killed_count == self.copy_edges.len()
    }

    fn dfs(&mut self) -> Option<Vec<u32>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exceeded = true;
            return None;
        }
        if self.all_killed() {
            return Some(self.partner.clone());
        }
        let m = self.partner.len();
        let Some(a) = (0..m as u32).find(|&x| self.partner[x as usize] == UNASSIGNED) else {
            // complete maximal pairing with a surviving (rainbow) copy
            return None;
        };
        for b in a + 1..m as u32 {
            if self.partner[b as usize] != UNASSIGNED {
                continue;
            }
            let (doomed, kills) = self.assign(a, b);
            if self.all_killed() {
                let w = self.partner.clone();
                self.unassign(a, b, kills);
                return Some(w);
            }
            if !doomed {
                if let Some(w) = self.dfs() {
                    self.unassign(a, b, kills);
                    return Some(w);
                }
            }
            self.unassign(a, b, kills);
            if self.exceeded {
                return None;
            }
        }
        if self.singles_used < self.singles_allowed {
            let (doomed, kills) = self.assign(a, SELF);
            if self.all_killed() {
                let w = self.partner.clone();
                self.unassign(a, SELF, kills);
                return Some(w);
            }
            if !doomed {
                if let Some(w) = self.dfs() {
                    self.unassign(a, SELF, kills);
                    return Some(w);
                }
            }
            self.unassign(a, SELF, kills);
        }
        None
    }
}

fn pairing_to_coloring(partner: &[u32]) -> Coloring {
    let m = partner.len();
    let mut colors = vec![UNASSIGNED; m];
    let mut next = 0u32;
    for e in 0..m {
        if colors[e] != UNASSIGNED {
            continue;
        }
        colors[e] = next;
        let p = partner[e];
        if p != UNASSIGNED && p != SELF {
            colors[p as usize] = next;
        }
        next += 1;
    }
    Coloring { variant: ColoringVariant::Bounded(2), colors }
}

/// Exact decision of `G -> F` for 2-bounded colorings via maximal pairings.
fn decide_bounded_2(
    g: &Hypergraph,
    f: &Hypergraph,
    cfg: &DecideConfig,
) -> Result<(bool, Option<Coloring>, u64)> {
    let idx = enumerate_copies(g, f)?;
    let m = g.n_edges();
    if idx.copies.is_empty() {
        // nothing can ever be rainbow
        let all_fresh = Coloring {
            variant: ColoringVariant::Bounded(2),
            colors: (0..m as u32).collect(),
        };
        return Ok((false, Some(all_fresh), 0));
    }
    if m < 2 {
        return Ok((true, None, 0)); // the single copy is always rainbow
    }

    // top-level branches: edge 0 paired with each other edge, then singleton
    let mut branches: Vec<u32> = (1..m as u32).collect();
    if m % 2 == 1 {
        branches.push(SELF);
    }
    let run_branch = |&b: &u32| -> (Option<Vec<u32>>, u64, bool) {
        let mut st = PairState::new(m, &idx.copies, cfg.node_budget);
        let (doomed, _kills) = st.assign(0, b);
        if st.all_killed() {
            return (Some(st.partner.clone()), st.nodes, false);
        }
        if doomed {
            return (None, st.nodes, false);
        }
        let w = st.dfs();
        (w, st.nodes, st.exceeded)
    };

    let results: Vec<(Option<Vec<u32>>, u64, bool)> = if cfg.parallel && m >= 12 {
        branches.par_iter().map(run_branch).collect()
    } else {
        branches.iter().map(run_branch).collect()
    };

    let nodes: u64 = results.iter().map(|r| r.1).sum();
    if let Some((w, _, _)) = results.iter().find(|r| r.0.is_some()) {
        return Ok((false, Some(pairing_to_coloring(w.as_ref().unwrap())), nodes));
    }
    if results.iter().any(|r| r.2) {
        return Err(Error::Undecided(format!(
            "pairing search exceeded the {}-node budget",
            cfg.node_budget
        )));
    }
    Ok((true, None, nodes))
}

// ---------------------------------------------------------------------------
// partition searches (general r-bounded, proper)

struct PartitionState<'a> {
    g: &'a Hypergraph,
    proper: bool,
    class_cap: usize,
    classes: Vec<Vec<u32>>,
    class_of: Vec<u32>,
    copy_edges: Vec<Vec<u32>>,
    edge_copies: Vec<Vec<u32>>,
    assigned: Vec<u32>,
    killed: Vec<bool>,
    killed_count: usize,
    nodes: u64,
    budget: u64,
    exceeded: bool,
}

impl<'a> PartitionState<'a> {
    fn compatible(&self, e: u32, class: usize) -> bool {
        if self.classes[class].len() >= self.class_cap {
            return false;
        }
        if self.proper {
            let edge = self.g.edge(e);
            self.classes[class]
                .iter()
                .all(|&x| self.g.edge(x).iter().all(|v| !edge.contains(v)))
        } else {
            true
        }
    }

    fn assign(&mut self, e: u32, class: usize) -> (bool, Vec<u32>) {
        let mut kills = Vec::new();
        for &x in &self.classes[class] {
            for &c in &self.edge_copies[e as usize] {
                if !self.killed[c as usize]
                    && self.copy_edges[c as usize].binary_search(&x).is_ok()
                {
                    self.killed[c as usize] = true;
                    self.killed_count += 1;
                    kills.push(c);
                }
            }
        }
        self.classes[class].push(e);
        self.class_of[e as usize] = class as u32;
        let mut doomed = false;
        for &c in &self.edge_copies[e as usize] {
            self.assigned[c as usize] += 1;
            if !self.killed[c as usize]
                && self.assigned[c as usize] == self.copy_edges[c as usize].len() as u32
            {
                doomed = true;
            }
        }
        (doomed, kills)
    }

    fn unassign(&mut self, e: u32, class: usize, kills: Vec<u32>) {
        for c in kills {
            self.killed[c as usize] = false;
            self.killed_count -= 1;
        }
        for &c in &self.edge_copies[e as usize] {
            self.assigned[c as usize] -= 1;
        }
        self.classes[class].pop();
        self.class_of[e as usize] = UNASSIGNED;
    }

    fn all_killed(&self) -> bool {
        self.killed_count == self.copy_edges.len()
    }

    fn dfs(&mut self, next: u32) -> Option<Vec<u32>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exceeded = true;
            return None;
        }
        if self.all_killed() {
            return Some(self.class_of.clone());
        }
        let m = self.class_of.len() as u32;
        if next == m {
            return None; // complete, some copy rainbow
        }
        // existing classes in order, then one fresh class
        for class in 0..=self.classes.len() {
            if class == self.classes.len() {
                self.classes.push(Vec::new());
            } else if !self.compatible(next, class) {
                continue;
            }
            let (doomed, kills) = self.assign(next, class);
            let hit = if self.all_killed() {
                Some(self.class_of.clone())
            } else if !doomed {
                self.dfs(next + 1)
            } else {
                None
            };
            self.unassign(next, class, kills);
            if self.classes.last().is_some_and(|c| c.is_empty()) {
                self.classes.pop();
            }
            if hit.is_some() || self.exceeded {
                return hit;
            }
        }
        None
    }
}

fn partition_to_coloring(class_of: &[u32], variant: ColoringVariant) -> Coloring {
    // reuse class indices as colors; unassigned edges get fresh colors
    let mut max_class = 0u32;
    for &c in class_of {
        if c != UNASSIGNED {
            max_class = max_class.max(c + 1);
        }
    }
    let mut next = max_class;
    let colors = class_of
        .iter()
        .map(|&c| {
            if c == UNASSIGNED {
                let col = next;
                next += 1;
                col
            } else {
                c
            }
        })
        .collect();
    Coloring { variant, colors }
}

fn decide_partition(
    g: &Hypergraph,
    f: &Hypergraph,
    proper: bool,
    class_cap: usize,
    variant: ColoringVariant,
    cfg: &DecideConfig,
) -> Result<(bool, Option<Coloring>, u64)> {
    let idx = enumerate_copies(g, f)?;
    let m = g.n_edges();
    if idx.copies.is_empty() {
        let all_fresh = Coloring { variant, colors: (0..m as u32).collect() };
        return Ok((false, Some(all_fresh), 0));
    }
    let copy_edges: Vec<Vec<u32>> = idx.copies.iter().map(|c| c.to_vec()).collect();
    let mut edge_copies = vec![Vec::new(); m];
    for (id, c) in copy_edges.iter().enumerate() {
        for &e in c {
            edge_copies[e as usize].push(id as u32);
        }
    }
    let mut st = PartitionState {
        g,
        proper,
        class_cap,
        classes: Vec::new(),
        class_of: vec![UNASSIGNED; m],
        assigned: vec![0; copy_edges.len()],
        killed: vec![false; copy_edges.len()],
        killed_count: 0,
        copy_edges,
        edge_copies,
        nodes: 0,
        budget: cfg.node_budget,
        exceeded: false,
    };
    let witness = st.dfs(0);
    if st.exceeded && witness.is_none() {
        return Err(Error::Undecided(format!(
            "partition search exceeded the {}-node budget",
            cfg.node_budget
        )));
    }
    match witness {
        Some(w) => Ok((false, Some(partition_to_coloring(&w, variant)), st.nodes)),
        None => Ok((true, None, st.nodes)),
    }
}

// ---------------------------------------------------------------------------
// r-coloring (monochromatic) search

struct RColorState {
    r: u32,
    colors: Vec<u32>,
    copy_edges: Vec<Vec<u32>>,
    edge_copies: Vec<Vec<u32>>,
    assigned: Vec<u32>,
    first_color: Vec<u32>,
    mixed: Vec<bool>,
    safe_count: usize,
    nodes: u64,
    budget: u64,
    exceeded: bool,
}

impl RColorState {
    fn assign(&mut self, e: u32, col: u32) -> (bool, Vec<u32>) {
        self.colors[e as usize] = col;
        let mut mono = false;
        let mut newly_mixed = Vec::new();
        for &c in &self.edge_copies[e as usize] {
            let cu = c as usize;
            self.assigned[cu] += 1;
            if self.assigned[cu] == 1 {
                self.first_color[cu] = col;
            } else if !self.mixed[cu] && self.first_color[cu] != col {
                self.mixed[cu] = true;
                self.safe_count += 1;
                newly_mixed.push(c);
            }
            if self.assigned[cu] == self.copy_edges[cu].len() as u32 && !self.mixed[cu] {
                mono = true;
            }
        }
        (mono, newly_mixed)
    }

    fn unassign(&mut self, e: u32, newly_mixed: Vec<u32>) {
        for c in newly_mixed {
            self.mixed[c as usize] = false;
            self.safe_count -= 1;
        }
        for &c in &self.edge_copies[e as usize] {
            self.assigned[c as usize] -= 1;
        }
        self.colors[e as usize] = UNASSIGNED;
    }

    fn dfs(&mut self, next: u32, used: u32) -> Option<Vec<u32>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exceeded = true;
            return None;
        }
        if self.safe_count == self.copy_edges.len() {
            // every copy already sees two colors; finish with color 0
            let mut w = self.colors.clone();
            for c in w.iter_mut() {
                if *c == UNASSIGNED {
                    *c = 0;
                }
            }
            return Some(w);
        }
        let m = self.colors.len() as u32;
        if next == m {
            return Some(self.colors.clone()); // complete and mono-free
        }
        // canonical color order: existing colors, then one fresh (if < r)
        let limit = (used + 1).min(self.r);
        for col in 0..limit {
            let (mono, newly_mixed) = self.assign(next, col);
            let hit = if mono { None } else { self.dfs(next + 1, used.max(col + 1)) };
            self.unassign(next, newly_mixed);
            if hit.is_some() || self.exceeded {
                return hit;
            }
        }
        None
    }
}

fn decide_ramsey_inner(
    g: &Hypergraph,
    f: &Hypergraph,
    r: u32,
    cfg: &DecideConfig,
) -> Result<(bool, Option<Coloring>, u64)> {
    let idx = enumerate_copies(g, f)?;
    let m = g.n_edges();
    if idx.copies.is_empty() {
        let w = Coloring { variant: ColoringVariant::RColor(r), colors: vec![0; m] };
        return Ok((false, Some(w), 0));
    }
    let copy_edges: Vec<Vec<u32>> = idx.copies.iter().map(|c| c.to_vec()).collect();
    let mut edge_copies = vec![Vec::new(); m];
    for (id, c) in copy_edges.iter().enumerate() {
        for &e in c {
            edge_copies[e as usize].push(id as u32);
        }
    }
    let n_copies = copy_edges.len();
    let mut st = RColorState {
        r,
        colors: vec![UNASSIGNED; m],
        assigned: vec![0; n_copies],
        first_color: vec![0; n_copies],
        mixed: vec![false; n_copies],
        safe_count: 0,
        copy_edges,
        edge_copies,
        nodes: 0,
        budget: cfg.node_budget,
        exceeded: false,
    };
    let witness = st.dfs(0, 0);
    if st.exceeded && witness.is_none() {
        return Err(Error::Undecided(format!(
            "r-coloring search exceeded the {}-node budget",
            cfg.node_budget
        )));
    }
    match witness {
        Some(w) => Ok((
            false,
            Some(Coloring { variant: ColoringVariant::RColor(r), colors: w }),
            st.nodes,
        )),
        None => Ok((true, None, st.nodes)),
    }
}

// ---------------------------------------------------------------------------
// public decisions

fn finish(
    variant: DecideVariant,
    res: (bool, Option<Coloring>, u64),
    start: std::time::Instant,
    g: &Hypergraph,
    f: &Hypergraph,
) -> Result<Decision> {
    let (holds, witness, nodes) = res;
    // a false decision's witness must verify and avoid the target copy
    if let Some(w) = &witness {
        debug_assert!(crate::colorings::verify(g, w).unwrap());
        let idx = enumerate_copies(g, f)?;
        let hit = match variant {
            DecideVariant::Ramsey { .. } => crate::colorings::find_monochromatic_copy(&idx, w)?,
            _ => crate::colorings::find_rainbow_copy(&idx, w)?,
        };
        if hit.is_some() {
            return Err(Error::contract("search produced an invalid witness"));
        }
    }
    Ok(Decision {
        holds,
        witness,
        variant,
        stats: SearchStats { nodes, elapsed_ms: start.elapsed().as_millis() },
    })
}

/// Does every r-bounded coloring of `g` contain a rainbow `f`-copy?
pub fn decide_anti_ramsey_bounded(
    g: &Hypergraph,
    f: &Hypergraph,
    r: u32,
    cfg: &DecideConfig,
) -> Result<Decision> {
    if r < 2 {
        return Err(Error::input("bounded anti-Ramsey needs r >= 2"));
    }
    let start = std::time::Instant::now();
    let res = if r == 2 {
        decide_bounded_2(g, f, cfg)?
    } else {
        decide_partition(g, f, false, r as usize, ColoringVariant::Bounded(r), cfg)?
    };
    finish(DecideVariant::Bounded { r }, res, start, g, f)
}

/// Does every proper coloring of `g` contain a rainbow `f`-copy?
pub fn decide_anti_ramsey_proper(
    g: &Hypergraph,
    f: &Hypergraph,
    cfg: &DecideConfig,
) -> Result<Decision> {
    let start = std::time::Instant::now();
    let res = decide_partition(g, f, true, usize::MAX, ColoringVariant::Proper, cfg)?;
    finish(DecideVariant::Proper, res, start, g, f)
}

/// Does every r-coloring of `g` contain a monochromatic `f`-copy?
pub fn decide_ramsey(
    g: &Hypergraph,
    f: &Hypergraph,
    r: u32,
    cfg: &DecideConfig,
) -> Result<Decision> {
    if r < 1 {
        return Err(Error::input("ramsey decision needs r >= 1"));
    }
    let start = std::time::Instant::now();
    let res = decide_ramsey_inner(g, f, r, cfg)?;
    finish(DecideVariant::Ramsey { r }, res, start, g, f)
}

/// Block colorer for the ramsey stripping pipeline: a monochromatic-free
/// r-coloring of the block found by exhaustive search, or `None`.
pub fn ramsey_block_coloring(
    block: &Hypergraph,
    f: &Hypergraph,
    r: u32,
    cfg: &ColorerConfig,
) -> Option<Coloring> {
    if block.n_edges() > cfg.exhaustive_max_edges {
        return None;
    }
    let dcfg = DecideConfig { node_budget: cfg.node_budget, parallel: false };
    match decide_ramsey_inner(block, f, r, &dcfg) {
        Ok((false, w, _)) => w,
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// obstruction search

#[derive(Debug)]
pub struct ObstructionScan {
    /// Connected graphs with `m(G) ≤ cap` for which the arrow holds.
    pub obstructions: Vec<Hypergraph>,
    /// Graphs whose decision ran out of budget.
    pub undecided: Vec<Hypergraph>,
    pub examined: usize,
}

/// Enumerates connected ℓ-graphs up to isomorphism with at most `v_max`
/// vertices, keeps those with `m(G) ≤ density_cap`, and decides each.
pub fn search_obstructions(
    f: &Hypergraph,
    variant: DecideVariant,
    v_max: usize,
    density_cap: Rat,
    cfg: &DecideConfig,
) -> Result<ObstructionScan> {
    let ell = f.ell();
    let cap = match ell {
        2 => 8,
        3 => 6,
        _ => 5,
    };
    if v_max > cap {
        return Err(Error::input(format!(
            "v_max {v_max} above the enumeration cap {cap} for {ell}-graphs"
        )));
    }
    let max_edges = gen::count_subsets(v_max, ell);
    let graphs = gen::connected_hypergraphs(ell, v_max, max_edges);
    let mut scan = ObstructionScan { obstructions: Vec::new(), undecided: Vec::new(), examined: 0 };
    for g in graphs {
        let (m, _) = max_density(&g)?;
        if m > density_cap {
            continue;
        }
        scan.examined += 1;
        let dec = match variant {
            DecideVariant::Bounded { r } => decide_anti_ramsey_bounded(&g, f, r, cfg),
            DecideVariant::Proper => decide_anti_ramsey_proper(&g, f, cfg),
            DecideVariant::Ramsey { r } => decide_ramsey(&g, f, r, cfg),
        };
        match dec {
            Ok(d) if d.holds => scan.obstructions.push(g),
            Ok(_) => {}
            Err(Error::Undecided(_)) => scan.undecided.push(g),
            Err(e) => return Err(e),
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings;
    use crate::corpus;
    use crate::oracle;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn cfg() -> DecideConfig {
        DecideConfig { node_budget: 50_000_000, parallel: false }
    }

    #[test]
    fn bounded_k4_k3_is_obstruction() {
        let d = decide_anti_ramsey_bounded(&corpus::clique(4), &corpus::clique(3), 2, &cfg()).unwrap();
        assert!(d.holds);
        assert!(d.witness.is_none());
    }

    #[test]
    fn bounded_c6_3plus_c4_is_obstruction() {
        let d = decide_anti_ramsey_bounded(&corpus::c6_3plus(), &corpus::cycle(4), 2, &cfg()).unwrap();
        assert!(d.holds);
    }

    #[test]
    fn bounded_k5_3_is_not_obstruction() {
        let d = decide_anti_ramsey_bounded(
            &corpus::hyperclique(5, 3),
            &corpus::hyperclique(4, 3),
            2,
            &cfg(),
        )
        .unwrap();
        assert!(!d.holds);
        assert!(d.witness.is_some());
    }

    #[test]
    fn bounded_low_density_c4_false() {
        // a tree has m < 3/2 and no C4-copy at all
        let d = decide_anti_ramsey_bounded(&corpus::path(5), &corpus::cycle(4), 2, &cfg()).unwrap();
        assert!(!d.holds);
        // K4 minus an edge has m = 5/4? (5 edges, 4 vertices) -> 5/4 < 3/2, one C4-copy
        let diamond =
            Hypergraph::new(2, 4, &[vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![2, 3]])
                .unwrap();
        let d = decide_anti_ramsey_bounded(&diamond, &corpus::cycle(4), 2, &cfg()).unwrap();
        assert!(!d.holds);
    }

    #[test]
    fn bounded_r3_k4_k3_false() {
        // with three repetitions per color the triangle can be saved
        let d = decide_anti_ramsey_bounded(&corpus::clique(4), &corpus::clique(3), 3, &cfg()).unwrap();
        assert!(!d.holds);
    }

    #[test]
    fn proper_examples() {
        let d = decide_anti_ramsey_proper(&corpus::clique(3), &corpus::clique(3), &cfg()).unwrap();
        assert!(d.holds); // K3 is an obstruction for proper colorings

        let d = decide_anti_ramsey_proper(&corpus::clique(4), &corpus::clique(3), &cfg()).unwrap();
        assert!(d.holds);

        let d = decide_anti_ramsey_proper(&corpus::cycle(7), &corpus::cycle(7), &cfg()).unwrap();
        assert!(!d.holds);
        let w = d.witness.unwrap();
        assert!(colorings::verify(&corpus::cycle(7), &w).unwrap());
    }

    #[test]
    fn ramsey_examples() {
        let d = decide_ramsey(&corpus::clique(6), &corpus::clique(3), 2, &cfg()).unwrap();
        assert!(d.holds);
        let d = decide_ramsey(&corpus::clique(5), &corpus::clique(3), 2, &cfg()).unwrap();
        assert!(!d.holds);
        let w = d.witness.unwrap();
        assert!(colorings::verify(&corpus::clique(5), &w).unwrap());
    }

    #[test]
    fn monotone_under_edge_addition() {
        // spot-check: adding edges preserves a true arrow
        let base = decide_anti_ramsey_bounded(&corpus::clique(4), &corpus::clique(3), 2, &cfg())
            .unwrap()
            .holds;
        assert!(base);
        let bigger = decide_anti_ramsey_bounded(&corpus::clique(5), &corpus::clique(3), 2, &cfg())
            .unwrap()
            .holds;
        assert!(bigger);
        let ram6 = decide_ramsey(&corpus::clique(6), &corpus::clique(3), 2, &cfg()).unwrap().holds;
        let ram7 = decide_ramsey(&corpus::clique(7), &corpus::clique(3), 2, &cfg()).unwrap().holds;
        assert!(ram6 && ram7);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        // pairing-coarsening soundness: the maximal-pairing search agrees
        // with enumeration of all 2-bounded colorings on small graphs
        #[test]
        fn pairing_matches_full_enumeration(n in 4usize..7, seed in any::<u64>()) {
            let g = oracle::random_graph_2(n, seed, 3);
            prop_assume!(g.n_edges() <= 7 && g.n_edges() >= 2);
            let idx = enumerate_copies(&g, &corpus::clique(3)).unwrap();
            let copies: Vec<Vec<u32>> = idx.copies.iter().map(|c| c.to_vec()).collect();
            let expected = oracle::brute_force_bounded2_arrow(&g, &copies);
            let got = decide_anti_ramsey_bounded(&g, &corpus::clique(3), 2, &cfg()).unwrap();
            prop_assert_eq!(got.holds, expected);
        }

        // ramsey soundness against the no-pruning enumeration of all
        // 2-colorings
        #[test]
        fn ramsey_matches_full_enumeration(n in 4usize..6, seed in any::<u64>()) {
            let g = oracle::random_graph_2(n, seed, 4);
            prop_assume!(g.n_edges() >= 1);
            let idx = enumerate_copies(&g, &corpus::clique(3)).unwrap();
            let copies: Vec<Vec<u32>> = idx.copies.iter().map(|c| c.to_vec()).collect();
            let expected = oracle::brute_force_ramsey2(&g, &copies);
            let got = decide_ramsey(&g, &corpus::clique(3), 2, &cfg()).unwrap();
            prop_assert_eq!(got.holds, expected);
        }
    }

    #[test]
    fn pairing_coarsening_exhaustive_up_to_7_edges() {
        // every connected graph with at most 7 edges: the maximal-pairing
        // decision equals the full 2-bounded enumeration
        for g in crate::decide::gen::connected_hypergraphs(2, 8, 7) {
            let idx = enumerate_copies(&g, &corpus::clique(3)).unwrap();
            let copies: Vec<Vec<u32>> = idx.copies.iter().map(|c| c.to_vec()).collect();
            let expected = oracle::brute_force_bounded2_arrow(&g, &copies);
            let got = decide_anti_ramsey_bounded(&g, &corpus::clique(3), 2, &cfg()).unwrap();
            assert_eq!(got.holds, expected, "disagreement on {g:?}");
        }
    }

    #[test]
    fn ramsey_k6_matches_exhaustive_32768_colorings() {
        let k6 = corpus::clique(6);
        let idx = enumerate_copies(&k6, &corpus::clique(3)).unwrap();
        let copies: Vec<Vec<u32>> = idx.copies.iter().map(|c| c.to_vec()).collect();
        assert!(oracle::brute_force_ramsey2(&k6, &copies));
        let k5 = corpus::clique(5);
        let idx = enumerate_copies(&k5, &corpus::clique(3)).unwrap();
        let copies: Vec<Vec<u32>> = idx.copies.iter().map(|c| c.to_vec()).collect();
        assert!(!oracle::brute_force_ramsey2(&k5, &copies));
    }

    #[test]
    fn obstruction_search_finds_k4() {
        let scan = search_obstructions(
            &corpus::clique(3),
            DecideVariant::Bounded { r: 2 },
            5,
            rat(2, 1),
            &cfg(),
        )
        .unwrap();
        assert!(scan.undecided.is_empty());
        assert!(scan
            .obstructions
            .iter()
            .any(|g| crate::iso::are_isomorphic(g, &corpus::clique(4))));
    }

    #[test]
    fn undecided_is_explicit() {
        let tiny = DecideConfig { node_budget: 5, parallel: false };
        let res = decide_anti_ramsey_bounded(&corpus::clique(6), &corpus::clique(4), 2, &tiny);
        assert!(matches!(res, Err(Error::Undecided(_))));
    }
}
