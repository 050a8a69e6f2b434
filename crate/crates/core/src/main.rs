//! Command-line entry point. Graphs and colorings are read from files in
//! the text formats documented on [`ramsey_zero::Hypergraph`] and
//! [`ramsey_zero::colorings::Coloring`], or taken from the built-in corpus
//! via `corpus:<name>`.
//!
//! Exit codes: 0 success, 1 negative verification, 2 input error,
//! 3 undecided.

use clap::{Args, Parser, Subcommand};
use ramsey_zero::colorings::{
    self, ramsey_two_coloring, strip_and_color_bounded, strip_and_color_proper, Coloring,
    StripVariant,
};
use ramsey_zero::copies::{block_decomposition, closedness, enumerate_copies};
use ramsey_zero::decide::{
    decide_anti_ramsey_bounded, decide_anti_ramsey_proper, decide_ramsey, search_obstructions,
    DecideConfig, DecideVariant,
};
use ramsey_zero::density::{max_density, DensityReport};
use ramsey_zero::error::Error;
use ramsey_zero::experiments::{parse_p, run_experiment, sweep, PipelineOptions};
use ramsey_zero::growseq::{build_grow_sequence, check_claims, GrowOptions};
use ramsey_zero::rat::{fmt_rat, parse_rat};
use ramsey_zero::{corpus, Hypergraph};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ramsey-zero", version, about = "block structure and avoiding colorings for Ramsey-type problems")]
struct Cli {
    /// Worker threads for decide/experiment (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct JsonFlag {
    /// Machine-readable JSON on stdout.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact densities, balancedness and gamma of a graph.
    Density {
        graph: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Block sizes, densities and closedness summary for a host/pattern pair.
    Blocks {
        graph: String,
        pattern: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Grow sequence of a block: step table and claim checks.
    Growseq {
        block: String,
        pattern: String,
        /// Proceed even when the pattern fails the qualifying hypotheses.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Strip-and-color a graph (proper | bounded | ramsey).
    Color {
        variant: String,
        graph: String,
        pattern: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
        /// Write the coloring to this file.
        #[arg(long)]
        out: Option<String>,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Check a coloring: variant validity plus rainbow/monochromatic copies.
    Verify {
        graph: String,
        pattern: String,
        coloring: String,
        /// rainbow | mono
        #[arg(long)]
        mode: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Decide an arrow property exhaustively (bounded | proper | ramsey).
    Decide {
        variant: String,
        graph: String,
        pattern: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Enumerate small connected graphs and report the obstructions.
    SearchObstructions {
        variant: String,
        pattern: String,
        #[arg(long)]
        vmax: usize,
        /// Density cap as a rational, e.g. 5/2.
        #[arg(long)]
        density: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
    },
    /// Random-hypergraph pipeline: sample, strip, color, verify.
    Experiment {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
        /// Probability, e.g. "0.1*n^(-2/5)" or "1/100".
        #[arg(long)]
        p: String,
        #[arg(long = "F")]
        f: String,
        /// proper | bounded | ramsey
        #[arg(long)]
        variant: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        /// Master seed (required: runs must be reproducible).
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
        /// Check grow-sequence claims on every block.
        #[arg(long)]
        check_claims: bool,
        /// Sweep over these scale constants c (comma-separated rationals);
        /// requires a scaled probability and emits a CSV table.
        #[arg(long)]
        c_grid: Option<String>,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Built-in graphs and colorings.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Show { name: String },
}

fn load_graph(arg: &str) -> Result<Hypergraph, Error> {
    if let Some(name) = arg.strip_prefix("corpus:") {
        return corpus::lookup_graph(name);
    }
    let text = std::fs::read_to_string(arg)?;
    Hypergraph::parse(&text)
}

fn load_coloring(arg: &str, m: usize) -> Result<Coloring, Error> {
    if let Some(name) = arg.strip_prefix("corpus:") {
        let named = corpus::lookup_coloring(name)?;
        if named.host.n_edges() != m {
            return Err(Error::input(format!(
                "corpus coloring {name} is for a host with {} edges, not {m}",
                named.host.n_edges()
            )));
        }
        return Ok(named.coloring);
    }
    let text = std::fs::read_to_string(arg)?;
    Coloring::parse(&text, m)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Undecided(_) => 3,
        _ => 2,
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .ok();
    }
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    std::process::exit(code);
}

fn run(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::Density { graph, json } => {
            let g = load_graph(&graph)?;
            let report = DensityReport::compute(&g)?;
            if json.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("d = {}", report.d);
                println!("m = {}  (witness {:?})", report.m, report.witness_m);
                match (&report.d_ell, &report.m_ell) {
                    (Some(d), Some(m)) => {
                        println!("d_ell = {d}");
                        println!("m_ell = {m}  (witness {:?})", report.witness_m_ell);
                        println!(
                            "balanced = {}, strictly balanced = {}",
                            report.balanced.unwrap_or(false),
                            report.strictly_balanced.unwrap_or(false)
                        );
                    }
                    _ => println!("ell-densities unavailable (too few or too many vertices)"),
                }
                match report.gamma {
                    Some(g) => println!("gamma = {g}"),
                    None => println!("gamma undefined (fewer than two edges)"),
                }
            }
            Ok(0)
        }
        Command::Blocks { graph, pattern, json } => {
            let g = load_graph(&graph)?;
            let f = load_graph(&pattern)?;
            let idx = enumerate_copies(&g, &f)?;
            let rep = closedness(&idx)?;
            let dec = block_decomposition(&idx);
            let mut blocks = Vec::new();
            for b in &dec.blocks {
                let (h, _, _) = g.edge_induced_subgraph(b)?;
                let (m, _) = max_density(&h)?;
                blocks.push(json!({
                    "edges": b.len(),
                    "vertices": h.n_vertices(),
                    "m": fmt_rat(&m),
                }));
            }
            let out = json!({
                "copies": idx.n_copies(),
                "graph_closed": rep.graph_closed,
                "closed_edges": rep.closed_edges.len(),
                "uncovered_edges": dec.uncovered_edges.len(),
                "blocks": blocks,
            });
            if json.json {
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "{} copies, graph_closed = {}, {} blocks, {} uncovered edges",
                    idx.n_copies(),
                    rep.graph_closed,
                    dec.blocks.len(),
                    dec.uncovered_edges.len()
                );
                for b in out["blocks"].as_array().unwrap() {
                    println!("  block: {} edges, {} vertices, m = {}", b["edges"], b["vertices"], b["m"]);
                }
            }
            Ok(0)
        }
        Command::Growseq { block, pattern, force, json } => {
            let b = load_graph(&block)?;
            let f = load_graph(&pattern)?;
            let seq = build_grow_sequence(&b, &f, GrowOptions { allow_nonqualifying_pattern: force })?;
            let claims = check_claims(&seq)?;
            if json.json {
                let steps: Vec<_> = seq
                    .steps
                    .iter()
                    .enumerate()
                    .map(|(i, s)| {
                        json!({
                            "index": i,
                            "kind": format!("{:?}", s.kind),
                            "edges": s.edges,
                            "attachment": s.attachment,
                            "delta": seq.delta[i],
                            "reg": seq.reg_prefix[i],
                            "deg": seq.deg_prefix[i],
                            "fo": seq.fo_prefix[i],
                        })
                    })
                    .collect();
                let out = json!({ "steps": steps, "claims_hold": claims.all_hold(), "violations": claims.violations });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("step  kind            attach  Δ  reg deg fo");
                for (i, s) in seq.steps.iter().enumerate() {
                    println!(
                        "{:>4}  {:<14} {:>6}  {}  {:>3} {:>3} {:>2}   edges {:?}",
                        i,
                        format!("{:?}", s.kind),
                        s.attachment.map(|a| a.to_string()).unwrap_or_else(|| "-".into()),
                        seq.delta[i],
                        seq.reg_prefix[i],
                        seq.deg_prefix[i],
                        seq.fo_prefix[i],
                        s.edges
                    );
                }
                if claims.all_hold() {
                    println!("all claims hold");
                } else {
                    for v in &claims.violations {
                        println!("VIOLATION: {v}");
                    }
                }
            }
            Ok(if claims.all_hold() { 0 } else { 1 })
        }
        Command::Color { variant, graph, pattern, r, out, json } => {
            let g = load_graph(&graph)?;
            let f = load_graph(&pattern)?;
            let outcome = match variant.as_str() {
                "proper" => strip_and_color_proper(&g, &f)?,
                "bounded" => strip_and_color_bounded(&g, &f)?,
                "ramsey" => ramsey_two_coloring(&g, &f, r)?,
                other => return Err(Error::input(format!("unknown color variant {other:?}"))),
            };
            let summary = json!({
                "success": outcome.coloring.is_some(),
                "pairs_removed": outcome.stats.pairs_removed,
                "singles_removed": outcome.stats.singles_removed,
                "blocks": outcome.blocks.len(),
                "failed_block": outcome.failed_block,
            });
            if json.json {
                println!("{}", serde_json::to_string_pretty(&summary).unwrap());
            } else if let Some(fb) = &outcome.failed_block {
                println!("no coloring: block with {} edges resisted (refs {:?})", fb.len(), fb);
            } else {
                println!(
                    "colored: {} pairs, {} singles, {} blocks",
                    outcome.stats.pairs_removed,
                    outcome.stats.singles_removed,
                    outcome.blocks.len()
                );
            }
            match outcome.coloring {
                Some(c) => {
                    if let Some(path) = out {
                        std::fs::write(path, c.to_text())?;
                    } else if !json.json {
                        print!("{}", c.to_text());
                    }
                    Ok(0)
                }
                None => Ok(1),
            }
        }
        Command::Verify { graph, pattern, coloring, mode, json } => {
            let g = load_graph(&graph)?;
            let f = load_graph(&pattern)?;
            let c = load_coloring(&coloring, g.n_edges())?;
            let valid = colorings::verify(&g, &c)?;
            let idx = enumerate_copies(&g, &f)?;
            let witness = match mode.as_str() {
                "rainbow" => colorings::find_rainbow_copy(&idx, &c)?,
                "mono" => colorings::find_monochromatic_copy(&idx, &c)?,
                other => return Err(Error::input(format!("unknown mode {other:?}"))),
            };
            let out = json!({
                "variant_valid": valid,
                "witness_copy": witness.map(|w| idx.copies[w as usize].to_vec()),
            });
            if json.json {
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else if !valid {
                println!("coloring violates its variant invariant");
            } else {
                match witness {
                    Some(w) => println!("{mode} copy found: edges {:?}", idx.copies[w as usize]),
                    None => println!("no {mode} copy"),
                }
            }
            Ok(if valid && witness.is_none() { 0 } else { 1 })
        }
        Command::Decide { variant, graph, pattern, r, json } => {
            let g = load_graph(&graph)?;
            let f = load_graph(&pattern)?;
            let cfg = DecideConfig::default();
            let dec = match variant.as_str() {
                "bounded" => decide_anti_ramsey_bounded(&g, &f, r, &cfg)?,
                "proper" => decide_anti_ramsey_proper(&g, &f, &cfg)?,
                "ramsey" => decide_ramsey(&g, &f, r, &cfg)?,
                other => return Err(Error::input(format!("unknown decide variant {other:?}"))),
            };
            let out = json!({
                "arrow": dec.holds,
                "variant": format!("{:?}", dec.variant),
                "nodes": dec.stats.nodes,
                "elapsed_ms": dec.stats.elapsed_ms,
                "witness": dec.witness.as_ref().map(|c| c.to_text()),
            });
            if json.json {
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "arrow = {} ({} nodes, {} ms)",
                    dec.holds, dec.stats.nodes, dec.stats.elapsed_ms
                );
                if let Some(w) = &dec.witness {
                    print!("{}", w.to_text());
                }
            }
            Ok(0)
        }
        Command::SearchObstructions { variant, pattern, vmax, density, r } => {
            let f = load_graph(&pattern)?;
            let cap = parse_rat(&density)?;
            let var = match variant.as_str() {
                "bounded" => DecideVariant::Bounded { r },
                "proper" => DecideVariant::Proper,
                "ramsey" => DecideVariant::Ramsey { r },
                other => return Err(Error::input(format!("unknown variant {other:?}"))),
            };
            let scan = search_obstructions(&f, var, vmax, cap, &DecideConfig::default())?;
            for g in &scan.obstructions {
                println!(
                    "{}",
                    json!({
                        "status": "obstruction",
                        "vertices": g.n_vertices(),
                        "edges": g.edges().map(|e| e.to_vec()).collect::<Vec<_>>(),
                    })
                );
            }
            for g in &scan.undecided {
                println!(
                    "{}",
                    json!({
                        "status": "undecided",
                        "vertices": g.n_vertices(),
                        "edges": g.edges().map(|e| e.to_vec()).collect::<Vec<_>>(),
                    })
                );
            }
            eprintln!(
                "examined {} graphs under the density cap; {} obstructions, {} undecided",
                scan.examined,
                scan.obstructions.len(),
                scan.undecided.len()
            );
            Ok(if scan.undecided.is_empty() { 0 } else { 3 })
        }
        Command::Experiment {
            ell,
            n,
            p,
            f,
            variant,
            r,
            reps,
            seed,
            out,
            check_claims: cc,
            c_grid,
            json,
        } => {
            let f = load_graph(&f)?;
            let pspec = parse_p(&p)?;
            let var = match variant.as_str() {
                "proper" => StripVariant::Proper,
                "bounded" => StripVariant::Bounded,
                "ramsey" => StripVariant::Ramsey { r },
                other => return Err(Error::input(format!("unknown variant {other:?}"))),
            };
            let opts = PipelineOptions { check_grow_claims: cc, ..Default::default() };
            if let Some(grid) = c_grid {
                let exp = match &pspec {
                    ramsey_zero::experiments::PSpec::Scaled { exp, .. } => *exp,
                    _ => return Err(Error::input("--c-grid needs a scaled probability")),
                };
                let cs: Vec<_> = grid
                    .split(',')
                    .map(|t| parse_rat(t.trim()))
                    .collect::<Result<_, _>>()?;
                let table = sweep(&cs, ell, n, exp, &f, var, reps, seed, &opts)?;
                let text = if json.json {
                    serde_json::to_string_pretty(&table).unwrap()
                } else {
                    table.to_csv()
                };
                match out {
                    Some(path) => std::fs::write(path, text)?,
                    None => print!("{text}"),
                }
                return Ok(0);
            }
            let report = run_experiment(ell, n, &pspec, &f, var, reps, seed, &opts)?;
            let text = serde_json::to_string_pretty(&report).unwrap();
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => println!("{text}"),
            }
            Ok(if report.success_fraction == 1.0 { 0 } else { 1 })
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for name in corpus::graph_names() {
                    println!("{name}");
                }
                for name in corpus::coloring_names() {
                    println!("{name}");
                }
                Ok(0)
            }
            CorpusAction::Show { name } => {
                if let Ok(g) = corpus::lookup_graph(&name) {
                    print!("{}", g.to_text());
                    return Ok(0);
                }
                let named = corpus::lookup_coloring(&name)?;
                println!("# host: {}", named.host_description);
                print!("{}", named.coloring.to_text());
                Ok(0)
            }
        },
    }
}
