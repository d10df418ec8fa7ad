//! Thin command-line front end over the library; all logic lives in the
//! library modules. Exit codes: 0 success, 2 precondition violated,
//! 3 internal contradiction, 4 I/O or parse failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use monopart::error::Error;
use monopart::generators::GeneratorSpec;
use monopart::harness::{falsify, run_experiment, Conjecture, ExperimentConfig, ModuleUnderTest};
use monopart::io::{parse_graph, write_graph, ParsedGraph};
use monopart::perturbed::PerturbedGraph;
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "monopart", version, about = "Monochromatic covers and partitions of 2-edge-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file (see README for the format); `-` reads stdin.
    #[arg(long)]
    input: PathBuf,
    /// Emit full JSON instead of a summary.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Write a catalog or random instance as a graph file.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        p_edge: Option<f64>,
        #[arg(long)]
        p_red: Option<f64>,
        #[arg(long)]
        delta_frac: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Minimum monochromatic-component cover with its König certificate.
    Cover(InputArgs),
    /// Partition into at most 2*alpha monochromatic pieces (runs the
    /// perturbed variant when the input marks perturbed edges).
    Partition(InputArgs),
    /// Perfect matching split into a red and a blue connected matching.
    Degmatch(InputArgs),
    /// Two disjoint monochromatic paths of different colors.
    Twopaths {
        #[command(flatten)]
        input: InputArgs,
        /// c4: cover n-1 vertices when the complement has no C4;
        /// kpp: maximize coverage when the complement has no K_{p,p}.
        #[arg(long, value_enum, default_value_t = TwoPathEngine::C4)]
        engine: TwoPathEngine,
        #[arg(long, default_value_t = 2)]
        p: usize,
    },
    /// Longest-feasible majority-color cycle (complement K_{p,p}-free).
    Cycle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        p: usize,
    },
    /// Compare a module's output against the exact oracle.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        module: VerifyModule,
        /// Oracle size cap (default 10; MONO_ORACLE_CAP overrides).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run seeded trials of a module against a generator family.
    Experiment {
        /// JSON config file; overrides the individual flags.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum)]
        module: Option<ExperimentModule>,
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        p_edge: Option<f64>,
        #[arg(long)]
        p_red: Option<f64>,
        #[arg(long)]
        delta_frac: Option<f64>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cap: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search for counterexamples to a conjecture at oracle scale.
    Falsify {
        #[arg(long, value_enum)]
        conjecture: CliConjecture,
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sharpness4,
    KsBlocks,
    Remark2,
    G5,
    G6,
    Colored,
    MinDegree,
    KppFreeComplement,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwoPathEngine {
    C4,
    Kpp,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyModule {
    Cover,
    Partition,
    Twopaths,
    Degmatch,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentModule {
    Cover,
    Partition,
    Degmatch,
    TwopathsC4,
    TwopathsKpp,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn read_input(path: &PathBuf) -> monopart::Result<ParsedGraph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    parse_graph(&text)
}

fn env_cap(cli_cap: Option<usize>) -> Option<usize> {
    cli_cap.or_else(|| {
        std::env::var("MONO_ORACLE_CAP").ok().and_then(|s| s.parse().ok())
    })
}

fn emit(value: serde_json::Value, output: Option<&PathBuf>) -> monopart::Result<()> {
    let text = serde_json::to_string_pretty(&value).expect("report serializes");
    match output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn build_generator_spec(
    family: Family,
    n: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    s: Option<usize>,
    p: Option<usize>,
    p_edge: Option<f64>,
    p_red: Option<f64>,
    delta_frac: Option<f64>,
) -> monopart::Result<GeneratorSpec> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| Error::InvalidParams(format!("--{name} is required for this family")))
    };
    let needf = |opt: Option<f64>, name: &str| {
        opt.ok_or_else(|| Error::InvalidParams(format!("--{name} is required for this family")))
    };
    Ok(match family {
        Family::Sharpness4 => GeneratorSpec::Sharpness4 { m: need(m, "m")? },
        Family::KsBlocks => GeneratorSpec::KsBlocks { k: need(k, "k")?, s: need(s, "s")? },
        Family::Remark2 => GeneratorSpec::Remark2 { n: need(n, "n")? },
        Family::G5 => GeneratorSpec::G5,
        Family::G6 => GeneratorSpec::G6,
        Family::Colored => GeneratorSpec::Colored {
            n: need(n, "n")?,
            p_edge: needf(p_edge, "p-edge")?,
            p_red: needf(p_red, "p-red")?,
        },
        Family::MinDegree => GeneratorSpec::MinDegree {
            n: need(n, "n")?,
            delta_frac: needf(delta_frac, "delta-frac")?,
        },
        Family::KppFreeComplement => {
            GeneratorSpec::KppFreeComplement { n: need(n, "n")?, p: need(p, "p")? }
        }
    })
}

fn run(cli: Cli) -> monopart::Result<()> {
    match cli.command {
        Command::Generate {
            family, n, m, k, s, p, p_edge, p_red, delta_frac, seed, output,
        } => {
            let spec = build_generator_spec(family, n, m, k, s, p, p_edge, p_red, delta_frac)?;
            let g = spec.generate(seed)?;
            let text = write_graph(&g, &[]);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Cover(args) => {
            let parsed = read_input(&args.input)?;
            let cover = monopart::cover::component_cover(&parsed.graph)?;
            let value = json!({
                "size": cover.size(),
                "components": cover.components.iter().map(|(c, vs)| json!({
                    "color": c.to_string(),
                    "vertices": vs,
                })).collect::<Vec<_>>(),
                "matching": cover.matching,
            });
            if args.json {
                emit(value, None)?;
            } else {
                println!(
                    "cover size {} (certificate matching of {} vertices)",
                    cover.size(),
                    cover.matching.len()
                );
                for (c, vs) in &cover.components {
                    println!("  {c}: {vs:?}");
                }
            }
            Ok(())
        }
        Command::Partition(args) => {
            let parsed = read_input(&args.input)?;
            let (pieces, leftover) = if parsed.perturbed.is_empty() {
                (monopart::partition::connected_matching_partition(&parsed.graph)?, vec![])
            } else {
                let pg = PerturbedGraph::with_minimal_eps(
                    parsed.graph.clone(),
                    parsed.perturbed.clone(),
                )?;
                let pp = monopart::perturbed::perturbed_partition(&pg)?;
                (pp.pieces, pp.leftover)
            };
            if args.json {
                emit(
                    json!({
                        "pieces": pieces,
                        "piece_count": pieces.len(),
                        "leftover": leftover,
                    }),
                    None,
                )?;
            } else {
                println!("{} pieces, {} leftover vertices", pieces.len(), leftover.len());
                for piece in &pieces {
                    println!(
                        "  {:?} {} {:?}",
                        piece.kind,
                        piece.color.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
                        piece.vertices
                    );
                }
            }
            Ok(())
        }
        Command::Degmatch(args) => {
            let parsed = read_input(&args.input)?;
            let (split, trace) = monopart::degree::degmatch_split(&parsed.graph)?;
            if args.json {
                emit(json!({ "split": split, "case_trace": trace }), None)?;
            } else {
                println!(
                    "case {}: {} red + {} blue matching edges",
                    trace.case,
                    split.red_edges.len(),
                    split.blue_edges.len()
                );
            }
            Ok(())
        }
        Command::Twopaths { input, engine, p } => {
            let parsed = read_input(&input.input)?;
            match engine {
                TwoPathEngine::C4 => {
                    let out = monopart::twopaths::c4free_two_paths(&parsed.graph)?;
                    if input.json {
                        emit(
                            json!({
                                "blue_path": out.pair.blue_path.vertices,
                                "red_path": out.pair.red_path.vertices,
                                "uncovered": out.pair.uncovered,
                                "guaranteed": out.guaranteed,
                                "trace": out.trace,
                            }),
                            None,
                        )?;
                    } else {
                        println!(
                            "covered {} of {} ({} guaranteed)",
                            out.pair.covered(),
                            parsed.graph.n(),
                            if out.guaranteed { "n-1" } else { "not" }
                        );
                    }
                }
                TwoPathEngine::Kpp => {
                    let out = monopart::twopaths::two_path_cover_kpp(&parsed.graph, p)?;
                    if input.json {
                        emit(
                            json!({
                                "blue_path": out.pair.blue_path.vertices,
                                "red_path": out.pair.red_path.vertices,
                                "uncovered": out.pair.uncovered,
                                "uncovered_bound": out.uncovered_bound,
                                "trace": out.trace,
                            }),
                            None,
                        )?;
                    } else {
                        println!(
                            "covered {} of {}, {} uncovered",
                            out.pair.covered(),
                            parsed.graph.n(),
                            out.uncovered_count
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Cycle { input, p } => {
            let parsed = read_input(&input.input)?;
            let q = monopart::extremal::mono_cycle_quarter(&parsed.graph, p)?;
            if input.json {
                emit(
                    json!({
                        "color": q.color.to_string(),
                        "cycle": q.cycle.vertices,
                        "guaranteed": q.guaranteed,
                    }),
                    None,
                )?;
            } else {
                println!(
                    "{} cycle of length {} (quarter guarantee: {})",
                    q.color,
                    q.cycle.len(),
                    q.guaranteed
                );
            }
            Ok(())
        }
        Command::Verify { input, module, cap } => {
            let parsed = read_input(&input.input)?;
            let g = &parsed.graph;
            let cap = env_cap(cap);
            let value = match module {
                VerifyModule::Cover => {
                    let cover = monopart::cover::component_cover(g)?;
                    let brute = monopart::oracle::brute_alpha_star(g);
                    json!({
                        "module": "cover",
                        "constructed": cover.size(),
                        "oracle": brute,
                        "agreement": cover.size() == brute,
                    })
                }
                VerifyModule::Partition => {
                    let pieces = monopart::partition::connected_matching_partition(g)?;
                    let alpha = g.independence_number()?;
                    json!({
                        "module": "partition",
                        "pieces": pieces.len(),
                        "bound_2alpha": 2 * alpha,
                        "agreement": pieces.len() <= 2 * alpha,
                    })
                }
                VerifyModule::Twopaths => {
                    let out = monopart::twopaths::c4free_two_paths(g)?;
                    let oracle = monopart::oracle::brute_max_two_path_cover(g, cap)?;
                    json!({
                        "module": "twopaths",
                        "constructed": out.pair.covered(),
                        "oracle": oracle,
                        "guaranteed": out.guaranteed,
                        "agreement": out.pair.covered() <= oracle
                            && (!out.guaranteed || out.pair.covered() + 1 >= g.n()),
                    })
                }
                VerifyModule::Degmatch => {
                    let (split, trace) = monopart::degree::degmatch_split(g)?;
                    json!({
                        "module": "degmatch",
                        "case": trace.case,
                        "red_edges": split.red_edges.len(),
                        "blue_edges": split.blue_edges.len(),
                        "agreement": true,
                    })
                }
            };
            emit(value, None)
        }
        Command::Experiment {
            config, module, family, n, m, k, s, p, p_edge, p_red, delta_frac,
            trials, seed, cap, output,
        } => {
            let cfg: ExperimentConfig = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)?;
                    serde_json::from_str(&text)
                        .map_err(|e| Error::Config(format!("bad config {path:?}: {e}")))?
                }
                None => {
                    let family = family.ok_or_else(|| {
                        Error::Config("--family (or --config) is required".into())
                    })?;
                    let module = module.ok_or_else(|| {
                        Error::Config("--module (or --config) is required".into())
                    })?;
                    let generator =
                        build_generator_spec(family, n, m, k, s, p, p_edge, p_red, delta_frac)?;
                    ExperimentConfig {
                        generator,
                        trials,
                        seed,
                        module: match module {
                            ExperimentModule::Cover => ModuleUnderTest::Cover,
                            ExperimentModule::Partition => ModuleUnderTest::Partition,
                            ExperimentModule::Degmatch => ModuleUnderTest::Degmatch,
                            ExperimentModule::TwopathsC4 => ModuleUnderTest::TwopathsC4,
                            ExperimentModule::TwopathsKpp => ModuleUnderTest::TwopathsKpp,
                        },
                        cap: env_cap(cap),
                        p,
                    }
                }
            };
            let report = run_experiment(&cfg)?;
            emit(serde_json::to_value(&report).expect("report serializes"), output.as_ref())
        }
        Command::Falsify { conjecture, budget, seed, cap } => {
            let conjecture = match conjecture {
                CliConjecture::Saconj1 => Conjecture::Saconj1,
                CliConjecture::Schconj => Conjecture::Schconj,
            };
            let report = falsify(conjecture, budget, seed, env_cap(cap))?;
            emit(serde_json::to_value(&report).expect("report serializes"), None)
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CliConjecture {
    Saconj1,
    Schconj,
}
