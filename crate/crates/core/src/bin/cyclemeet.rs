use clap::{Args, Parser, Subcommand};
use cyclemeet::generate::{census_connected, named, random_k_connected, Family};
use cyclemeet::graph6::{emit_graph6, parse_graph6};
use cyclemeet::report::{default_cap, run_scan, verify_graph, CheckSet, ScanOptions};
use cyclemeet::Graph;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cyclemeet", version, about = "Longest path/cycle intersection checks on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a graph6 stream and emit one JSON record per graph
    Scan(ScanArgs),
    /// Report on a single graph given as graph6 or a named family
    Inspect(InspectArgs),
    /// Emit graph6 lines for named families, random graphs, or a census
    Generate(GenerateArgs),
}

#[derive(Args)]
struct ScanArgs {
    /// comma-separated: conjectures,dirac,separator,reduction,proofkit,all
    #[arg(long, default_value = "conjectures,dirac")]
    checks: String,
    /// enumeration cap per graph and kind
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// per-graph wall-clock budget; exceeding it marks the record inconclusive
    #[arg(long)]
    budget_ms: Option<u64>,
    /// write records here instead of stdout (summary still goes to both)
    #[arg(long)]
    out: Option<String>,
    /// input file, or "-" for stdin
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct InspectArgs {
    /// graph6 string, or a family name followed by its parameters
    spec: Vec<String>,
    /// skip optimum-set enumeration: lengths only, no pair statistics
    #[arg(long)]
    no_enum: bool,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct GenerateArgs {
    /// family spec: e.g. "cycle 6", "petersen", "random-kconn 10 3",
    /// "census-connected 6"
    spec: Vec<String>,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn graph_from_spec(spec: &[String]) -> Result<Graph, String> {
    if spec.is_empty() {
        return Err("empty graph specification".into());
    }
    if spec.len() == 1 {
        if let Ok(g) = parse_graph6(&spec[0]) {
            return Ok(g);
        }
    }
    let family: Family = spec[0]
        .parse()
        .map_err(|e: cyclemeet::Error| format!("not graph6 and not a family: {e}"))?;
    let params: Vec<usize> = spec[1..]
        .iter()
        .map(|s| s.parse().map_err(|_| format!("bad parameter '{s}'")))
        .collect::<Result<_, _>>()?;
    named(family, &params).map_err(|e| e.to_string())
}

fn cmd_scan(args: ScanArgs) -> ExitCode {
    let checks = match CheckSet::parse(&args.checks) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = ScanOptions {
        checks,
        cap: args.cap.unwrap_or_else(default_cap),
        workers: args.workers.max(1),
        budget_ms: args.budget_ms,
    };
    let input: Box<dyn BufRead> = if args.input == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        match File::open(&args.input) {
            Ok(f) => Box::new(BufReader::new(f)),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", args.input);
                return ExitCode::from(2);
            }
        }
    };
    let summary = if let Some(path) = &args.out {
        let mut file = match File::create(path) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: cannot create {path}: {e}");
                return ExitCode::from(2);
            }
        };
        let summary = match run_scan(input, &mut file, &opts) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        };
        println!("{}", serde_json::to_string(&summary).unwrap());
        summary
    } else {
        let stdout = io::stdout();
        let mut lock = stdout.lock();
        match run_scan(input, &mut lock, &opts) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    };
    if summary.violations() > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_inspect(args: InspectArgs) -> ExitCode {
    let g = match graph_from_spec(&args.spec) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = ScanOptions {
        checks: CheckSet::all(),
        cap: args.cap.unwrap_or_else(default_cap),
        workers: 1,
        budget_ms: None,
    };
    let report = if args.no_enum {
        let mut r = verify_graph(
            &g,
            &ScanOptions {
                checks: CheckSet {
                    conjectures: false,
                    dirac: true,
                    separator: false,
                    reduction: false,
                    proofkit: false,
                },
                ..opts
            },
            true,
        );
        r.path_pairs = None;
        r.cycle_pairs = None;
        r
    } else {
        verify_graph(&g, &opts, true)
    };
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    ExitCode::SUCCESS
}

fn cmd_generate(args: GenerateArgs) -> ExitCode {
    let spec = &args.spec;
    if spec.is_empty() {
        eprintln!("error: empty generation spec");
        return ExitCode::from(2);
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result: Result<(), String> = (|| {
        match spec[0].as_str() {
            "random-kconn" => {
                if spec.len() != 3 {
                    return Err("usage: generate random-kconn <n> <k> [--count N] [--seed S]".into());
                }
                let n: usize = spec[1].parse().map_err(|_| "bad n".to_string())?;
                let k: usize = spec[2].parse().map_err(|_| "bad k".to_string())?;
                for i in 0..args.count {
                    let g = random_k_connected(n, k, args.seed.wrapping_add(i as u64))
                        .map_err(|e| e.to_string())?;
                    writeln!(out, "{}", emit_graph6(&g)).map_err(|e| e.to_string())?;
                }
            }
            "census-connected" => {
                if spec.len() != 2 {
                    return Err("usage: generate census-connected <n>".into());
                }
                let n: usize = spec[1].parse().map_err(|_| "bad n".to_string())?;
                for g in census_connected(n).map_err(|e| e.to_string())? {
                    writeln!(out, "{}", emit_graph6(&g)).map_err(|e| e.to_string())?;
                }
            }
            _ => {
                let g = graph_from_spec(spec)?;
                writeln!(out, "{}", emit_graph6(&g)).map_err(|e| e.to_string())?;
            }
        }
        Ok(())
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Scan(args) => cmd_scan(args),
        Command::Inspect(args) => cmd_inspect(args),
        Command::Generate(args) => cmd_generate(args),
    }
}
