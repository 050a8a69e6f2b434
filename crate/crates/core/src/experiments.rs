//! Random-hypergraph sampling and the end-to-end pipeline: sample, strip,
//! decompose into blocks, color, verify, and aggregate across seeds.
//!
//! Everything is reproducible: a master seed derives one seed per sample
//! through a splitmix64 step, the edge probability is quantized exactly to
//! a 64-bit threshold (computed in integer arithmetic), and aggregation is
//! order-independent, so reports are identical across thread counts.

use crate::colorings::{
    self, run_strip_pipeline, validate_strip_events_with, ColorerConfig, PairRule, StripVariant,
};
use crate::copies::CopyIndex;
use crate::density::max_density;
use crate::error::{Error, Result};
use crate::growseq::{build_grow_sequence, check_claims, GrowOptions};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::rat::{fmt_rat, parse_rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

/// Seed for the i-th sample of a run.
pub fn sample_seed(master: u64, index: usize) -> u64 {
    splitmix64(master.wrapping_add((index as u64 + 1).wrapping_mul(0x9E3779B97F4A7C15)))
}

/// Edge probability: a constant rational, or the scaled form `c · n^(-a/b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PSpec {
    Const(Rat),
    Scaled { c: Rat, exp: Rat },
}

impl PSpec {
    pub fn describe(&self) -> String {
        match self {
            PSpec::Const(c) => fmt_rat(c),
            PSpec::Scaled { c, exp } => format!("{}*n^(-{})", fmt_rat(c), fmt_rat(exp)),
        }
    }
}

/// Parses `0.1`, `1/4`, `n^(-2/5)` or `0.1*n^(-2/5)`.
pub fn parse_p(s: &str) -> Result<PSpec> {
    let s = s.trim();
    let (c_str, rest) = match s.split_once('*') {
        Some((c, rest)) => (Some(c), rest.trim()),
        None => (None, s),
    };
    if let Some(tail) = rest.strip_prefix("n^(-").and_then(|t| t.strip_suffix(')')) {
        let c = match c_str {
            Some(c) => parse_rat(c)?,
            None => Rat::one(),
        };
        let exp = parse_rat(tail)?;
        if exp.is_negative() || exp.is_zero() {
            return Err(Error::input("exponent in n^(-a/b) must be positive"));
        }
        return Ok(PSpec::Scaled { c, exp });
    }
    if c_str.is_some() {
        return Err(Error::input(format!("bad probability expression {s:?}")));
    }
    Ok(PSpec::Const(parse_rat(rest)?))
}

#[derive(Clone, Debug)]
pub struct SampleSpec {
    pub ell: usize,
    pub n: usize,
    pub p: PSpec,
    pub seed: u64,
}

/// The probability quantized to 64-bit resolution: each ℓ-set is an edge
/// iff the next u64 draw is below the threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threshold {
    All,
    Frac(u64),
}

/// `floor(p · 2^64)` in exact integer arithmetic; `All` when p = 1.
/// Rejects p outside [0, 1].
pub fn threshold(p: &PSpec, n: usize) -> Result<Threshold> {
    let two64: BigInt = BigInt::one() << 64;
    match p {
        PSpec::Const(c) => {
            if c.is_negative() || *c > Rat::one() {
                return Err(Error::input("probability must lie in [0, 1]"));
            }
            if *c == Rat::one() {
                return Ok(Threshold::All);
            }
            let t: BigInt = BigInt::from(*c.numer()) * &two64 / BigInt::from(*c.denom());
            Ok(Threshold::Frac(t.to_u64().expect("p < 1 gives a 64-bit threshold")))
        }
        PSpec::Scaled { c, exp } => {
            if c.is_negative() {
                return Err(Error::input("probability must lie in [0, 1]"));
            }
            let a = *exp.numer() as u32;
            let b = *exp.denom() as u32;
            if b > 1000 || a > 1000 {
                return Err(Error::input("exponent too wild"));
            }
            // p = c_n / (c_d · n^(a/b)):  p ≤ 1  ⟺  c_n^b ≤ c_d^b · n^a
            let cn = BigInt::from(*c.numer());
            let cd = BigInt::from(*c.denom());
            let lhs = cn.pow(b);
            let rhs = cd.pow(b) * BigInt::from(n).pow(a);
            if lhs > rhs {
                return Err(Error::input("probability above 1 for this n"));
            }
            if lhs == rhs {
                return Ok(Threshold::All);
            }
            // largest T with (T · c_d)^b · n^a ≤ (c_n · 2^64)^b
            let scaled_cn: BigInt = cn * &two64;
            let bound = scaled_cn.pow(b);
            let (mut lo, mut hi) = (BigInt::zero(), two64.clone());
            while &lo + 1 < hi {
                let mid: BigInt = (&lo + &hi) / 2;
                let val = (&mid * &cd).pow(b) * BigInt::from(n).pow(a);
                if val <= bound {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Ok(Threshold::Frac(lo.to_u64().expect("p < 1 gives a 64-bit threshold")))
        }
    }
}

/// Advances an ℓ-combination `k` positions in lexicographic order; false
/// when running off the end.
fn advance_by(cur: &mut [u32], n: usize, mut k: u64) -> bool {
    let ell = cur.len();
    loop {
        let cap = (n as u64 - 1) - cur[ell - 1] as u64;
        if k <= cap {
            cur[ell - 1] += k as u32;
            return true;
        }
        k -= cap + 1;
        let mut i = ell - 1;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if (cur[i] as usize) < n - (ell - i) {
                cur[i] += 1;
                for j in i + 1..ell {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// G^(ℓ)(n, p) with p quantized to `t / 2^64`: every ℓ-set is an edge
/// independently. Geometric skipping keeps the work proportional to the
/// number of edges; the skip lengths come from a ChaCha8 stream, so a seed
/// fixes the graph.
pub fn sample_hypergraph(ell: usize, n: usize, thr: Threshold, seed: u64) -> Hypergraph {
    assert!(ell >= 1 && n >= ell);
    let mut edges: Vec<VertexId> = Vec::new();
    match thr {
        Threshold::All => {
            let mut cur: Vec<u32> = (0..ell as u32).collect();
            loop {
                edges.extend_from_slice(&cur);
                if !advance_by(&mut cur, n, 1) {
                    break;
                }
            }
        }
        Threshold::Frac(0) => {}
        Threshold::Frac(t) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p = t as f64 / 2f64.powi(64);
            let ln_q = (-p).ln_1p(); // ln(1 - p) < 0
            let mut cur: Vec<u32> = (0..ell as u32).collect();
            loop {
                let u = ((rng.next_u64() >> 11) + 1) as f64 * 2f64.powi(-53); // (0, 1]
                let ratio = u.ln() / ln_q;
                if !ratio.is_finite() || ratio >= u64::MAX as f64 {
                    break;
                }
                if !advance_by(&mut cur, n, ratio as u64) {
                    break;
                }
                edges.extend_from_slice(&cur);
                if !advance_by(&mut cur, n, 1) {
                    break;
                }
            }
        }
    }
    Hypergraph::from_sorted_unchecked(ell, n, edges)
}

pub fn sample(spec: &SampleSpec) -> Result<Hypergraph> {
    let thr = threshold(&spec.p, spec.n)?;
    Ok(sample_hypergraph(spec.ell, spec.n, thr, spec.seed))
}

#[derive(Clone, Debug)]
#[derive(Default)]
pub struct PipelineOptions {
    pub colorer: ColorerConfig,
    /// Build and check a grow sequence for every block.
    pub check_grow_claims: bool,
    /// Replay the strip trace and re-check every removal condition.
    pub validate_strip: bool,
}


#[derive(Debug, Serialize)]
pub struct SampleReport {
    pub seed: u64,
    pub n: usize,
    pub edges: usize,
    pub copies: usize,
    pub pairs_removed: usize,
    pub singles_removed: usize,
    pub block_count: usize,
    pub max_block_vertices: usize,
    pub max_block_edges: usize,
    pub max_block_m: Option<String>,
    pub coloring_success: bool,
    pub verified: bool,
    pub coloring_hash: Option<String>,
    pub grow_claims_ok: Option<bool>,
    pub grow_notes: Vec<String>,
    pub strip_replay_ok: Option<bool>,
    pub runtime_ms: u128,
}

fn coloring_hash(c: &colorings::Coloring) -> String {
    let mut h = Sha256::new();
    for &col in &c.colors {
        h.update(col.to_le_bytes());
    }
    hex_string(&h.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// One sample end to end: sample, strip, decompose, color every block,
/// verify the result against the independent finders.
pub fn run_sample(
    spec: &SampleSpec,
    f: &Hypergraph,
    variant: StripVariant,
    opts: &PipelineOptions,
) -> Result<SampleReport> {
    let start = std::time::Instant::now();
    let g = sample(spec)?;
    let outcome = run_strip_pipeline(&g, f, variant, &opts.colorer)?;

    let mut max_block_vertices = 0;
    let mut max_block_edges = 0;
    let mut max_block_m: Option<Rat> = None;
    let mut grow_claims_ok = None;
    let mut grow_notes = Vec::new();
    for block_refs in &outcome.blocks {
        let (block, _, _) = g.edge_induced_subgraph(block_refs)?;
        max_block_vertices = max_block_vertices.max(block.n_vertices());
        max_block_edges = max_block_edges.max(block.n_edges());
        let (m, _) = max_density(&block)?;
        if max_block_m.is_none_or(|cur| m > cur) {
            max_block_m = Some(m);
        }
        if opts.check_grow_claims {
            let ok = match build_grow_sequence(&block, f, GrowOptions::default()) {
                Ok(seq) => match check_claims(&seq) {
                    Ok(rep) => {
                        for v in &rep.violations {
                            grow_notes.push(v.clone());
                        }
                        rep.all_hold()
                    }
                    Err(e) => {
                        grow_notes.push(e.to_string());
                        false
                    }
                },
                Err(e) => {
                    grow_notes.push(e.to_string());
                    false
                }
            };
            grow_claims_ok = Some(grow_claims_ok.unwrap_or(true) && ok);
        }
    }
    if opts.check_grow_claims && outcome.blocks.is_empty() {
        grow_claims_ok = Some(true);
    }

    let copies = CopyIndex::from_parts(&g, f.clone(), outcome.copies.clone());
    let (success, verified, hash) = match &outcome.coloring {
        Some(c) => {
            let valid = colorings::verify(&g, c)?;
            let clean = match variant {
                StripVariant::Ramsey { .. } => {
                    colorings::find_monochromatic_copy(&copies, c)?.is_none()
                }
                _ => colorings::find_rainbow_copy(&copies, c)?.is_none(),
            };
            (true, valid && clean, Some(coloring_hash(c)))
        }
        None => (false, false, None),
    };

    let strip_replay_ok = if opts.validate_strip {
        let rule = match variant {
            StripVariant::Proper => PairRule::DisjointEquivalent,
            _ => PairRule::AnyEquivalent,
        };
        let replay_idx = CopyIndex::from_parts(&g, f.clone(), outcome.copies.clone());
        Some(validate_strip_events_with(replay_idx, &g, rule, &outcome.events).is_ok())
    } else {
        None
    };

    Ok(SampleReport {
        seed: spec.seed,
        n: spec.n,
        edges: g.n_edges(),
        copies: copies.n_copies(),
        pairs_removed: outcome.stats.pairs_removed,
        singles_removed: outcome.stats.singles_removed,
        block_count: outcome.blocks.len(),
        max_block_vertices,
        max_block_edges,
        max_block_m: max_block_m.map(|m| fmt_rat(&m)),
        coloring_success: success,
        verified,
        coloring_hash: hash,
        grow_claims_ok,
        grow_notes,
        strip_replay_ok,
        runtime_ms: start.elapsed().as_millis(),
    })
}

#[derive(Debug, Serialize)]
pub struct ExperimentReport {
    pub ell: usize,
    pub n: usize,
    pub p: String,
    pub variant: StripVariant,
    pub master_seed: u64,
    pub reps: usize,
    pub samples: Vec<SampleReport>,
    pub success_fraction: f64,
    pub all_verified: bool,
    pub block_vertex_histogram: BTreeMap<usize, usize>,
}

/// Runs `reps` independent samples (parallel over samples; per-sample seeds
/// derived from the master seed) and aggregates.
#[allow(clippy::too_many_arguments)]
pub fn run_experiment(
    ell: usize,
    n: usize,
    p: &PSpec,
    f: &Hypergraph,
    variant: StripVariant,
    reps: usize,
    master_seed: u64,
    opts: &PipelineOptions,
) -> Result<ExperimentReport> {
    let replay_idx = (splitmix64(master_seed) % reps.max(1) as u64) as usize;
    let runs: Vec<Result<SampleReport>> = (0..reps)
        .into_par_iter()
        .map(|i| {
            let spec = SampleSpec { ell, n, p: p.clone(), seed: sample_seed(master_seed, i) };
            let mut o = opts.clone();
            o.validate_strip = opts.validate_strip || i == replay_idx;
            run_sample(&spec, f, variant, &o)
        })
        .collect();
    let mut samples = Vec::with_capacity(reps);
    for r in runs {
        samples.push(r?);
    }
    let successes = samples.iter().filter(|s| s.coloring_success && s.verified).count();
    let mut block_vertex_histogram = BTreeMap::new();
    for s in &samples {
        *block_vertex_histogram.entry(s.max_block_vertices).or_insert(0) += 1;
    }
    Ok(ExperimentReport {
        ell,
        n,
        p: p.describe(),
        variant,
        master_seed,
        reps,
        success_fraction: successes as f64 / reps.max(1) as f64,
        all_verified: samples.iter().all(|s| !s.coloring_success || s.verified),
        block_vertex_histogram,
        samples,
    })
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub c: String,
    pub success_fraction: f64,
    pub reps: usize,
    pub max_block_m: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("c,success_fraction,reps,max_block_m\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{}\n",
                r.c,
                r.success_fraction,
                r.reps,
                r.max_block_m.clone().unwrap_or_default()
            ));
        }
        s
    }
}

/// Success-fraction-vs-c table over a grid of scale constants (the
/// exponent stays fixed).
#[allow(clippy::too_many_arguments)]
pub fn sweep(
    c_grid: &[Rat],
    ell: usize,
    n: usize,
    exp: Rat,
    f: &Hypergraph,
    variant: StripVariant,
    reps: usize,
    master_seed: u64,
    opts: &PipelineOptions,
) -> Result<SweepReport> {
    let mut rows = Vec::new();
    for &c in c_grid {
        let p = PSpec::Scaled { c, exp };
        let report = run_experiment(ell, n, &p, f, variant, reps, master_seed, opts)?;
        let max_m = report
            .samples
            .iter()
            .filter_map(|s| s.max_block_m.clone())
            .max_by_key(|m| parse_rat(m).unwrap_or_default());
        rows.push(SweepRow {
            c: fmt_rat(&c),
            success_fraction: report.success_fraction,
            reps,
            max_block_m: max_m,
        });
    }
    Ok(SweepReport { rows })
}
