use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chordsep::chordality::Bound;
use chordsep::error::Error;
use chordsep::graph::{Graph, GraphSpec};
use chordsep::harness::{profile, run_check, run_corpus, CorpusConfig, GraphProfile, CHECK_IDS};
use chordsep::{Caps, Status};

#[derive(Parser)]
#[command(
    name = "chordsep",
    version,
    about = "Chordality, separators, bottlenecks and hyperbolicity of finite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every invariant of one graph.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Subdivision used for geodesic-triangle corners (even).
        #[arg(long, default_value_t = 4)]
        resolution: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one theorem check.
    Check {
        /// One of the ids listed by `chordsep check --list`.
        #[arg(required_unless_present = "list")]
        id: Option<String>,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        list: bool,
    },
    /// Write a generated graph as an edge list.
    Generate {
        /// Generator spec such as `cycle:8` or `erdos_renyi:10,0.3`.
        spec: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a corpus config; exits non-zero on any failing check.
    Corpus {
        config: PathBuf,
        /// Overrides the config's `output`.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct Input {
    /// Edge-list file.
    #[arg(conflicts_with = "generate")]
    file: Option<PathBuf>,
    /// Generator spec instead of a file.
    #[arg(long)]
    generate: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let root = match &e {
            Error::InGraph { source, .. } => source.as_ref(),
            other => other,
        };
        match root {
            Error::EmptyInput
            | Error::Parse { .. }
            | Error::SelfLoop { .. }
            | Error::DuplicateEdge { .. }
            | Error::Disconnected { .. }
            | Error::InvalidParams(_)
            | Error::UnknownFamily(_)
            | Error::UnknownCheck(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn load(input: &Input) -> Result<(String, Graph), Failure> {
    match (&input.file, &input.generate) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok((path.display().to_string(), Graph::parse_edge_list(&text)?))
        }
        (None, Some(spec)) => {
            let spec = GraphSpec::parse(spec)?;
            let g = spec.build(input.seed)?;
            let id = match input.seed {
                Some(s) if spec.is_random() => format!("{spec}@{s}"),
                _ => spec.to_string(),
            };
            Ok((id, g))
        }
        _ => Err(Failure::Usage(
            "give an edge-list file or --generate SPEC".into(),
        )),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(|e| Failure::Internal(e.to_string()))
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn bound<T: std::fmt::Display + Copy>(b: Bound<T>) -> String {
    match b {
        Bound::Vacuous => "-".into(),
        Bound::Finite(x) => x.to_string(),
        Bound::Infinite => "inf".into(),
    }
}

fn opt<T: std::fmt::Display>(x: Option<T>) -> String {
    x.map_or_else(|| "none".into(), |x| x.to_string())
}

fn print_profile(id: &str, p: &GraphProfile) {
    println!(
        "graph {id}: {} vertices, {} edges, mu {}, diameter {}",
        p.vertices, p.edges, p.mu, p.diameter
    );
    let c = &p.chordality;
    println!(
        "cycles: {}{}",
        c.cycles,
        if c.truncated { " (truncated)" } else { "" }
    );
    for e in &c.entries {
        let rho: Vec<String> = e
            .min_rho
            .iter()
            .map(|(m, r)| format!("{m}:{}", bound(*r)))
            .collect();
        println!(
            "  {:?} k={} min_m={} min_rho=[{}]",
            e.family,
            e.k,
            bound(e.min_m),
            rho.join(" ")
        );
    }
    for s in &p.separators {
        println!(
            "separators r={}: {} minimal, max diameter {}, max split diameter {}{}",
            s.r,
            s.separators,
            opt(s.max_diameter),
            opt(s.max_split_diameter),
            if s.truncated { " (truncated)" } else { "" }
        );
    }
    let h = &p.hyperbolicity;
    println!(
        "delta_hat {} at resolution {} over {} triangles{}",
        h.delta_hat,
        h.resolution,
        h.triangles,
        if h.complete { "" } else { " (incomplete)" }
    );
    let b = &p.bottleneck;
    println!(
        "bottleneck: vertex constant {}, point constant at most {}",
        b.delta_prime, b.delta
    );
    for s in &p.stability {
        println!(
            "stability {:?}: R = {}{}",
            s.mode,
            s.r,
            if s.caps_hit { " (capped)" } else { "" }
        );
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let caps = Caps::from_env();
    match cli.command {
        Command::Analyze {
            input,
            resolution,
            format,
        } => {
            let (id, g) = load(&input)?;
            let p = profile(&g, &caps, resolution)?;
            match format {
                Format::Json => println!("{}", to_json(&p)?),
                Format::Text => print_profile(&id, &p),
            }
            Ok(true)
        }
        Command::Check { list: true, .. } => {
            CHECK_IDS.iter().for_each(|id| println!("{id}"));
            Ok(true)
        }
        Command::Check {
            id, input, format, ..
        } => {
            let check = id.expect("clap requires an id without --list");
            let (graph_id, g) = load(&input)?;
            let r = run_check(&g, &graph_id, &check, &caps)?;
            match format {
                Format::Json => println!("{}", to_json(&r)?),
                Format::Text => {
                    let params = serde_json::to_string(&r.params)
                        .map_err(|e| Failure::Internal(e.to_string()))?;
                    println!(
                        "{} on {}: {} {params} ({} ms)",
                        r.check_id, r.graph_id, r.status, r.runtime_ms
                    );
                    if let Some(note) = &r.note {
                        println!("  {note}");
                    }
                    if let Some(w) = &r.witness {
                        println!("  witness {}", to_json(w)?);
                    }
                }
            }
            Ok(r.status != Status::Fail)
        }
        Command::Generate { spec, seed, output } => {
            let g = GraphSpec::parse(&spec)?.build(seed)?;
            let text = g.to_edge_list();
            match output {
                Some(path) => write_out(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Corpus {
            config,
            output,
            format,
        } => {
            let text = fs::read_to_string(&config)
                .map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
            let cfg: CorpusConfig = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
            let report = run_corpus(&cfg)?;
            let json = to_json(&report)?;
            if let Some(path) = output.or(cfg.output.clone()) {
                write_out(&path, &json)?;
            }
            match format {
                Format::Json => println!("{json}"),
                Format::Text => {
                    println!("{} graphs, {} failing checks", report.graphs, report.fails);
                    for (id, s) in &report.summary {
                        println!(
                            "  {id:<14} pass {:>4}  fail {:>3}  vacuous {:>4}  inconclusive {:>4}",
                            s.pass, s.fail, s.vacuous, s.inconclusive
                        );
                    }
                    for r in report.reports.iter().filter(|r| r.status == Status::Fail) {
                        println!("FAIL {} on {}", r.check_id, r.graph_id);
                    }
                }
            }
            Ok(!report.alarm())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
