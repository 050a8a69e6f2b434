//! Edge colorings, their verification predicates, and the stripping
//! algorithms that produce rainbow-free (or monochromatic-free) colorings
//! by removing equivalent pairs and copy-free edges before handing the
//! remaining blocks to dedicated block colorers.
//!
//! A 2-bounded coloring with no rainbow copy is more than a static
//! certificate: it doubles as a pairing strategy for the second player in
//! the achievement game on the host (answer every claimed edge with its
//! color partner; the opponent's edges then form a rainbow subgraph, which
//! by construction contains no copy of the pattern).

mod blocks_bounded;
mod blocks_proper;
mod strip;

pub use blocks_bounded::{bounded_block_colorer, ColorerConfig};
pub use blocks_proper::proper_block_colorer;
pub use strip::{validate_strip_events, validate_strip_events_with, PairRule, StripEvent};

pub use crate::corpus::{explicit_colorings, NamedColoring};

use crate::copies::{enumerate_copies, CopyIndex, LiveCopies};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph};
use serde::Serialize;

pub const UNASSIGNED: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ColoringVariant {
    /// Intersecting edges receive distinct colors.
    Proper,
    /// Each color used at most r times.
    Bounded(u32),
    /// Color ids drawn from [0, r).
    RColor(u32),
}

/// An edge coloring of a fixed host graph; `colors[e]` is the color of edge
/// `e`, or [`UNASSIGNED`]. A coloring is bound to the edge list of the graph
/// it was built for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub variant: ColoringVariant,
    pub colors: Vec<u32>,
}

impl Coloring {
    pub fn unassigned(variant: ColoringVariant, m: usize) -> Self {
        Coloring { variant, colors: vec![UNASSIGNED; m] }
    }

    pub fn color(&self, e: EdgeRef) -> Option<u32> {
        let c = self.colors[e as usize];
        (c != UNASSIGNED).then_some(c)
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != UNASSIGNED)
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        let mut cs: Vec<u32> = self.colors.iter().copied().filter(|&c| c != UNASSIGNED).collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    /// Text format: header `coloring <variant> [r]`, then `edge color`
    /// lines for assigned edges.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        match self.variant {
            ColoringVariant::Proper => s.push_str("coloring proper\n"),
            ColoringVariant::Bounded(r) => {
                let _ = writeln!(s, "coloring bounded {r}");
            }
            ColoringVariant::RColor(r) => {
                let _ = writeln!(s, "coloring rcolor {r}");
            }
        }
        for (e, &c) in self.colors.iter().enumerate() {
            if c != UNASSIGNED {
                let _ = writeln!(s, "{e} {c}");
            }
        }
        s
    }

    /// Parses the text format against a host with `m` edges.
    pub fn parse(text: &str, m: usize) -> Result<Coloring> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::input("empty coloring file"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let variant = match toks.as_slice() {
            ["coloring", "proper"] => ColoringVariant::Proper,
            ["coloring", "bounded", r] => ColoringVariant::Bounded(
                r.parse().map_err(|_| Error::input("bad r in coloring header"))?,
            ),
            ["coloring", "rcolor", r] => ColoringVariant::RColor(
                r.parse().map_err(|_| Error::input("bad r in coloring header"))?,
            ),
            _ => return Err(Error::input(format!("bad coloring header {header:?}"))),
        };
        let mut colors = vec![UNASSIGNED; m];
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(Error::input(format!("bad coloring line {line:?}")));
            }
            let e: usize = parts[0]
                .parse()
                .map_err(|_| Error::input(format!("bad edge index {:?}", parts[0])))?;
            let c: u32 = parts[1]
                .parse()
                .map_err(|_| Error::input(format!("bad color {:?}", parts[1])))?;
            if e >= m {
                return Err(Error::input(format!("edge index {e} out of range [0, {m})")));
            }
            if colors[e] != UNASSIGNED {
                return Err(Error::input(format!("edge {e} colored twice")));
            }
            colors[e] = c;
        }
        Ok(Coloring { variant, colors })
    }
}

/// Exact check of the variant invariant. Requires a total assignment.
pub fn verify(g: &Hypergraph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n_edges() {
        return Err(Error::input("coloring length does not match edge count"));
    }
    if !c.is_total() {
        return Err(Error::input("verify requires a total assignment"));
    }
    match c.variant {
        ColoringVariant::Proper => {
            let inc = g.incidence();
            for edges in &inc {
                let mut seen: Vec<u32> = edges.iter().map(|&e| c.colors[e as usize]).collect();
                seen.sort_unstable();
                if seen.windows(2).any(|w| w[0] == w[1]) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ColoringVariant::Bounded(r) => {
            let mut counts: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
            for &col in &c.colors {
                let n = counts.entry(col).or_insert(0);
                *n += 1;
                if *n > r {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ColoringVariant::RColor(r) => Ok(c.colors.iter().all(|&col| col < r)),
    }
}

fn require_copies_colored(idx: &CopyIndex, c: &Coloring) -> Result<()> {
    if c.colors.len() != idx.host.n_edges() {
        return Err(Error::input("coloring length does not match edge count"));
    }
    for copy in &idx.copies {
        if copy.iter().any(|&e| c.colors[e as usize] == UNASSIGNED) {
            return Err(Error::input("edge inside a copy is uncolored"));
        }
    }
    Ok(())
}

/// First copy (in the deterministic copy order) whose edges have pairwise
/// distinct colors, if any.
pub fn find_rainbow_copy(idx: &CopyIndex, c: &Coloring) -> Result<Option<u32>> {
    require_copies_colored(idx, c)?;
    for (id, copy) in idx.copies.iter().enumerate() {
        let mut cols: Vec<u32> = copy.iter().map(|&e| c.colors[e as usize]).collect();
        cols.sort_unstable();
        if cols.windows(2).all(|w| w[0] != w[1]) {
            return Ok(Some(id as u32));
        }
    }
    Ok(None)
}

/// First copy whose edges all share one color, if any.
pub fn find_monochromatic_copy(idx: &CopyIndex, c: &Coloring) -> Result<Option<u32>> {
    require_copies_colored(idx, c)?;
    for (id, copy) in idx.copies.iter().enumerate() {
        let first = c.colors[copy[0] as usize];
        if copy.iter().all(|&e| c.colors[e as usize] == first) {
            return Ok(Some(id as u32));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StripVariant {
    Proper,
    Bounded,
    Ramsey { r: u32 },
}

#[derive(Debug, Default, Clone, Serialize)]
pub struct StripStats {
    pub pairs_removed: usize,
    pub singles_removed: usize,
    pub blocks: usize,
    pub remaining_edges: usize,
}

/// Output of the strip-and-color pipeline: either a total verified-shape
/// coloring, or the first block no colorer handled (as host edge refs).
pub struct StripColorOutcome {
    pub coloring: Option<Coloring>,
    pub failed_block: Option<Vec<EdgeRef>>,
    pub events: Vec<StripEvent>,
    pub blocks: Vec<Vec<EdgeRef>>,
    /// The enumerated copies of the pattern in the host (sorted edge-ref
    /// tuples), for downstream verification without re-enumeration.
    pub copies: Vec<Box<[EdgeRef]>>,
    pub stats: StripStats,
}

/// Proper coloring without a rainbow `F`-copy: strips disjoint equivalent
/// pairs (same fresh color) and copy-free edges (fresh colors), decomposes
/// the remainder into blocks, and colors each block with a disjoint fresh
/// palette via [`proper_block_colorer`].
pub fn strip_and_color_proper(g: &Hypergraph, f: &Hypergraph) -> Result<StripColorOutcome> {
    if g.ell() != 2 {
        return Err(Error::Unsupported("proper stripping is for 2-graphs".into()));
    }
    run_strip_pipeline(g, f, StripVariant::Proper, &ColorerConfig::default())
}

/// 2-bounded coloring without a rainbow `F`-copy: like the proper variant
/// but pairs may intersect and blocks go to [`bounded_block_colorer`].
pub fn strip_and_color_bounded(g: &Hypergraph, f: &Hypergraph) -> Result<StripColorOutcome> {
    run_strip_pipeline(g, f, StripVariant::Bounded, &ColorerConfig::default())
}

/// r-coloring without a monochromatic `F`-copy: the bounded stripping with
/// paired edges split across two colors (0 and 1), stripped singles colored
/// 0, and blocks colored monochromatic-free by exhaustive r-color search.
pub fn ramsey_two_coloring(g: &Hypergraph, f: &Hypergraph, r: u32) -> Result<StripColorOutcome> {
    if r < 2 {
        return Err(Error::input("ramsey coloring needs r >= 2"));
    }
    run_strip_pipeline(g, f, StripVariant::Ramsey { r }, &ColorerConfig::default())
}

pub fn run_strip_pipeline(
    g: &Hypergraph,
    f: &Hypergraph,
    variant: StripVariant,
    config: &ColorerConfig,
) -> Result<StripColorOutcome> {
    let idx = enumerate_copies(g, f)?;
    let mut live = LiveCopies::new(idx);
    let rule = match variant {
        StripVariant::Proper => PairRule::DisjointEquivalent,
        _ => PairRule::AnyEquivalent,
    };
    let (events, mut coloring, mut next_color) = strip::run_strip(&mut live, rule, variant, g);
    let pairs_removed = events.iter().filter(|e| matches!(e, StripEvent::Pair(_, _))).count();
    let singles_removed = events.len() - pairs_removed;

    // block decomposition of the remainder over live copies
    let blocks = strip::live_blocks(&live);
    let mut stats = StripStats {
        pairs_removed,
        singles_removed,
        blocks: blocks.len(),
        remaining_edges: blocks.iter().map(|b| b.len()).sum(),
    };

    for block_refs in &blocks {
        let (block, _vmap, emap) = g.edge_induced_subgraph(block_refs)?;
        let local = match variant {
            // a block violating the density precondition is a coloring
            // failure (the above-threshold regime), not a pipeline error
            StripVariant::Proper => match proper_block_colorer(&block, f, config) {
                Ok(c) => c,
                Err(Error::Contract(_)) => None,
                Err(e) => return Err(e),
            },
            StripVariant::Bounded => bounded_block_colorer(&block, f, config)?,
            StripVariant::Ramsey { r } => crate::decide::ramsey_block_coloring(&block, f, r, config),
        };
        let Some(local) = local else {
            stats.remaining_edges = blocks.iter().map(|b| b.len()).sum();
            return Ok(StripColorOutcome {
                coloring: None,
                failed_block: Some(block_refs.clone()),
                events,
                blocks,
                copies: live.into_copies(),
                stats,
            });
        };
        // map block colors onto the host with a disjoint palette
        // (ramsey colorings stay inside [0, r))
        let offset = match variant {
            StripVariant::Ramsey { .. } => 0,
            _ => next_color,
        };
        let mut max_used = 0;
        for (local_e, &host_e) in emap.iter().enumerate() {
            let c = local.colors[local_e];
            debug_assert_ne!(c, UNASSIGNED);
            coloring.colors[host_e as usize] = offset + c;
            max_used = max_used.max(c + 1);
        }
        if !matches!(variant, StripVariant::Ramsey { .. }) {
            next_color += max_used;
        }
    }
    Ok(StripColorOutcome {
        coloring: Some(coloring),
        failed_block: None,
        events,
        blocks,
        copies: live.into_copies(),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn verify_examples() {
        let k4 = corpus::clique(4);
        let all_distinct = Coloring {
            variant: ColoringVariant::Proper,
            colors: (0..6).collect(),
        };
        assert!(verify(&k4, &all_distinct).unwrap());

        // one color on two intersecting edges is not proper
        let mut bad = all_distinct.clone();
        let e01 = k4.edge_index(&[0, 1]).unwrap() as usize;
        let e02 = k4.edge_index(&[0, 2]).unwrap() as usize;
        bad.colors[e02] = bad.colors[e01];
        assert!(!verify(&k4, &bad).unwrap());

        // partial assignment is an input error
        let mut partial = all_distinct.clone();
        partial.colors[0] = UNASSIGNED;
        assert!(verify(&k4, &partial).is_err());
    }

    #[test]
    fn figure_coloring_is_2_bounded_and_rainbow_free() {
        let named = corpus::k6_no_rainbow_k4();
        assert!(verify(&named.host, &named.coloring).unwrap());
        let idx = enumerate_copies(&named.host, &named.pattern).unwrap();
        assert_eq!(find_rainbow_copy(&idx, &named.coloring).unwrap(), None);
        // 7 pairs + singleton {1,2}
        assert_eq!(named.coloring.colors_used(), 8);
    }

    #[test]
    fn k5_3_coloring_is_2_bounded_and_rainbow_free() {
        let named = corpus::k5_3_no_rainbow_k4_3();
        assert!(verify(&named.host, &named.coloring).unwrap());
        let idx = enumerate_copies(&named.host, &named.pattern).unwrap();
        assert_eq!(find_rainbow_copy(&idx, &named.coloring).unwrap(), None);
        assert_eq!(named.coloring.colors_used(), 5);
    }

    #[test]
    fn rainbow_finder_examples() {
        let k4 = corpus::clique(4);
        let idx = enumerate_copies(&k4, &corpus::clique(3)).unwrap();
        let all_distinct = Coloring { variant: ColoringVariant::Proper, colors: (0..6).collect() };
        assert!(find_rainbow_copy(&idx, &all_distinct).unwrap().is_some());

        let mono = Coloring { variant: ColoringVariant::Bounded(6), colors: vec![0; 6] };
        assert!(find_monochromatic_copy(&idx, &mono).unwrap().is_some());
        assert!(find_rainbow_copy(&idx, &mono).unwrap().is_none());

        // any proper coloring makes every triangle rainbow
        let proper = Coloring {
            variant: ColoringVariant::Proper,
            colors: vec![0, 1, 2, 2, 1, 0],
        };
        assert!(verify(&k4, &proper).unwrap());
        assert!(find_rainbow_copy(&idx, &proper).unwrap().is_some());
        assert!(find_monochromatic_copy(&idx, &proper).unwrap().is_none());
    }

    #[test]
    fn proper_pipeline_reports_dense_blocks_as_failures() {
        // K8 is far above m_2(C7); the surviving block must surface as a
        // failure witness, not an error
        let g = corpus::clique(8);
        let f = corpus::cycle(7);
        let out = strip_and_color_proper(&g, &f).unwrap();
        assert!(out.coloring.is_none());
        assert!(out.failed_block.is_some());
    }

    #[test]
    fn strip_replay_validates_and_rejects_tampering() {
        let g = corpus::clique(6);
        let f = corpus::clique(4);
        let out = strip_and_color_bounded(&g, &f).unwrap();
        validate_strip_events(&g, &f, PairRule::AnyEquivalent, &out.events).unwrap();

        // C7 vs C7 under the proper rule
        let c7 = corpus::cycle(7);
        let out = strip_and_color_proper(&c7, &c7).unwrap();
        validate_strip_events(&c7, &c7, PairRule::DisjointEquivalent, &out.events).unwrap();
        assert!(!out.events.is_empty());

        // tamper: claim a pair that was never equivalent
        let k4 = corpus::clique(4);
        let bad = vec![StripEvent::Pair(0, 1)]; // edges {0,1},{0,2} share triangles unevenly
        assert!(validate_strip_events(&k4, &corpus::clique(3), PairRule::AnyEquivalent, &bad).is_err());
        // tamper: a single removal while the edge still lies in copies
        let bad = vec![StripEvent::Single(0)];
        assert!(validate_strip_events(&k4, &corpus::clique(3), PairRule::AnyEquivalent, &bad).is_err());
    }

    #[test]
    fn block_palettes_are_disjoint() {
        // two disjoint K6 blocks against K4: each keeps its own colors
        let mut edges: Vec<Vec<u32>> = corpus::clique(6).edges().map(|e| e.to_vec()).collect();
        for e in corpus::clique(6).edges() {
            edges.push(vec![e[0] + 6, e[1] + 6]);
        }
        let g = crate::Hypergraph::new(2, 12, &edges).unwrap();
        let f = corpus::clique(4);
        let out = strip_and_color_bounded(&g, &f).unwrap();
        assert_eq!(out.blocks.len(), 2);
        let c = out.coloring.unwrap();
        let palette = |block: &Vec<u32>| -> std::collections::BTreeSet<u32> {
            block.iter().map(|&e| c.colors[e as usize]).collect()
        };
        let p0 = palette(&out.blocks[0]);
        let p1 = palette(&out.blocks[1]);
        assert!(p0.is_disjoint(&p1), "block palettes overlap");
        let idx = enumerate_copies(&g, &f).unwrap();
        assert_eq!(find_rainbow_copy(&idx, &c).unwrap(), None);
    }

    #[test]
    fn coloring_text_round_trip() {
        let named = corpus::k6_no_rainbow_k4();
        let text = named.coloring.to_text();
        let back = Coloring::parse(&text, named.host.n_edges()).unwrap();
        assert_eq!(named.coloring, back);
        assert!(Coloring::parse("coloring bounded 2\n0 0\n0 1\n", 3).is_err());
        assert!(Coloring::parse("coloring nope\n", 3).is_err());
        assert!(Coloring::parse("coloring bounded 2\n99 0\n", 3).is_err());
    }
}
