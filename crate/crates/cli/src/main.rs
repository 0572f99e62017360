//! Command-line surface for the numerical semigroup library.
//!
//! Exit codes: 0 success (and "true" for `check`), 1 a failed `check`,
//! 2 usage errors, 3 domain errors such as non-coprime generators or
//! inadmissible sets. Output is deterministic for fixed flags regardless of
//! the thread count.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use numsg::{
    arf_sat, covariety, generators, oracle, perfect, Family, FamilySpec, NumericalSemigroup,
    PerfectClosure,
};

#[derive(Parser)]
#[command(name = "numsg", version, about = "Perfect numerical semigroups with fixed Frobenius number")]
struct Cli {
    /// Worker threads (default: hardware count).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Perfect,
    Arf,
    #[value(alias = "saturated")]
    Sat,
    Parf,
    Psat,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Perfect => Family::Perfect,
            FamilyArg::Arf => Family::Arf,
            FamilyArg::Sat => Family::Saturated,
            FamilyArg::Parf => Family::Parf,
            FamilyArg::Psat => Family::Psat,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    Jsonl,
    Dot,
    Count,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    Perfect,
    Arf,
    #[value(alias = "sat")]
    Saturated,
}

/// A semigroup given either by generators or by its small elements plus the
/// Frobenius number.
#[derive(Args)]
struct SemigroupInput {
    /// Generators, comma separated (e.g. 4,5,11).
    #[arg(long)]
    gens: Option<String>,
    /// Small elements including 0, comma separated; requires --frobenius.
    #[arg(long)]
    small_elements: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a family, or one genus slice of the perfect family.
    Enumerate {
        #[arg(long)]
        frobenius: u64,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Restrict to members of this genus (perfect family only).
        #[arg(long)]
        genus: Option<u64>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: FormatArg,
    },
    /// The maximal members of the perfect family together with beta(F).
    Maximal {
        #[arg(long)]
        frobenius: u64,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: FormatArg,
    },
    /// The least perfect member with Frobenius number F containing the set.
    Closure {
        #[arg(long)]
        frobenius: u64,
        /// Comma-separated positive integers; empty for the minimum.
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Rank of a perfect member, with one smallest generating set.
    Rank {
        #[arg(long)]
        frobenius: u64,
        #[command(flatten)]
        input: SemigroupInput,
    },
    /// Inclusion-minimal generating sets of a perfect member.
    MinimalSystems {
        #[arg(long)]
        frobenius: u64,
        #[command(flatten)]
        input: SemigroupInput,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Test a predicate; prints true/false and exits 0/1.
    Check {
        #[command(flatten)]
        input: SemigroupInput,
        /// Frobenius number, required with --small-elements.
        #[arg(long)]
        frobenius: Option<u64>,
        #[arg(long, value_enum)]
        predicate: PredicateArg,
    },
    /// The least perfect semigroup containing the input.
    PerfectClosure {
        #[command(flatten)]
        input: SemigroupInput,
        /// Frobenius number, required with --small-elements.
        #[arg(long)]
        frobenius: Option<u64>,
    },
    /// Brute-force certification of the fast paths.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Recompute everything by definition at one Frobenius number and report
    /// disagreements as JSON.
    Crosscheck {
        #[arg(long)]
        frobenius: u64,
    },
}

enum AppError {
    Usage(String),
    Domain(numsg::Error),
}

impl From<numsg::Error> for AppError {
    fn from(e: numsg::Error) -> Self {
        AppError::Domain(e)
    }
}

fn parse_list(text: &str) -> Result<Vec<u64>, AppError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| AppError::Usage(format!("not a nonnegative integer: {part:?}")))
        })
        .collect()
}

fn resolve_semigroup(
    input: &SemigroupInput,
    frobenius: Option<u64>,
) -> Result<NumericalSemigroup, AppError> {
    match (&input.gens, &input.small_elements) {
        (Some(_), Some(_)) => Err(AppError::Usage(
            "--gens and --small-elements are mutually exclusive".into(),
        )),
        (None, None) => Err(AppError::Usage(
            "one of --gens or --small-elements is required".into(),
        )),
        (Some(gens), None) => Ok(NumericalSemigroup::from_generators(&parse_list(gens)?)?),
        (None, Some(smalls)) => {
            let f = frobenius.ok_or_else(|| {
                AppError::Usage("--small-elements requires --frobenius".into())
            })?;
            Ok(NumericalSemigroup::from_small_elements(f, &parse_list(smalls)?)?)
        }
    }
}

#[derive(Serialize)]
struct SliceRecord {
    frobenius: u64,
    genus: u64,
    depth: u64,
    small_elements: Vec<u64>,
    min_generators: Vec<u64>,
}

fn print_slice(f: u64, g: u64, members: &[NumericalSemigroup], format: FormatArg) -> Result<(), AppError> {
    match format {
        FormatArg::Count => println!("{}", members.len()),
        FormatArg::Jsonl => {
            for s in members {
                let rec = SliceRecord {
                    frobenius: f,
                    genus: g,
                    depth: f - g,
                    small_elements: s.small_elements(),
                    min_generators: s.min_generators(),
                };
                println!("{}", serde_json::to_string(&rec).expect("plain data"));
            }
        }
        FormatArg::Pretty => {
            for s in members {
                println!("genus={g} {s}");
            }
        }
        FormatArg::Dot => {
            return Err(AppError::Usage(
                "dot output is only available for whole-tree enumeration".into(),
            ))
        }
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, AppError> {
    match command {
        Command::Enumerate { frobenius, family, genus, format } => {
            let family = Family::from(family);
            if let Some(g) = genus {
                if family != Family::Perfect {
                    return Err(AppError::Usage(
                        "genus slices are defined for the perfect family".into(),
                    ));
                }
                let members = covariety::genus_slice(frobenius, g)?;
                print_slice(frobenius, g, &members, format)?;
                return Ok(ExitCode::SUCCESS);
            }
            let spec = FamilySpec::new(frobenius, family)?;
            let tree = covariety::enumerate(&spec);
            match format {
                FormatArg::Jsonl => {
                    print!("{}", covariety::export_tree(&tree, covariety::ExportFormat::Jsonl))
                }
                FormatArg::Dot => {
                    print!("{}", covariety::export_tree(&tree, covariety::ExportFormat::Dot))
                }
                FormatArg::Count => {
                    print!("{}", covariety::export_tree(&tree, covariety::ExportFormat::Count))
                }
                FormatArg::Pretty => {
                    for node in tree.sorted_nodes() {
                        println!("genus={} depth={} {}", node.genus, node.depth, node.semigroup);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Maximal { frobenius, format } => {
            let members = covariety::maximal_elements(frobenius)?;
            let beta = covariety::beta(frobenius)?;
            match format {
                FormatArg::Jsonl => {
                    for s in &members {
                        println!("{}", s.to_canonical_json());
                    }
                    println!("{{\"beta\":{beta}}}");
                }
                FormatArg::Count => println!("{}", members.len()),
                FormatArg::Pretty => {
                    for s in &members {
                        println!("genus={} {s}", s.genus());
                    }
                    println!("beta({frobenius}) = {beta}");
                }
                FormatArg::Dot => {
                    return Err(AppError::Usage(
                        "dot output is only available for whole-tree enumeration".into(),
                    ))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Closure { frobenius, set } => {
            let xs = parse_list(&set)?;
            let s = generators::closure(frobenius, &xs)?;
            println!("{}", s.to_canonical_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank { frobenius, input } => {
            let s = resolve_semigroup(&input, Some(frobenius))?;
            let (rank, witness) = generators::rank_with_witness(frobenius, &s)?;
            #[derive(Serialize)]
            struct RankOut {
                frobenius: u64,
                rank: usize,
                witness: Vec<u64>,
            }
            let out = RankOut { frobenius, rank, witness };
            println!("{}", serde_json::to_string(&out).expect("plain data"));
            Ok(ExitCode::SUCCESS)
        }
        Command::MinimalSystems { frobenius, input, limit } => {
            let s = resolve_semigroup(&input, Some(frobenius))?;
            let systems = generators::minimal_systems(frobenius, &s, limit)?;
            #[derive(Serialize)]
            struct SystemsOut {
                frobenius: u64,
                count: usize,
                systems: Vec<Vec<u64>>,
            }
            let out = SystemsOut { frobenius, count: systems.len(), systems };
            println!("{}", serde_json::to_string(&out).expect("plain data"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, frobenius, predicate } => {
            let s = resolve_semigroup(&input, frobenius)?;
            let holds = match predicate {
                PredicateArg::Perfect => perfect::is_perfect(&s),
                PredicateArg::Arf => arf_sat::is_arf(&s),
                PredicateArg::Saturated => arf_sat::is_saturated(&s),
            };
            println!("{holds}");
            Ok(if holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::PerfectClosure { input, frobenius } => {
            let s = resolve_semigroup(&input, frobenius)?;
            match perfect::perfect_closure(&s) {
                PerfectClosure::Semigroup(t) => println!("{}", t.to_canonical_json()),
                PerfectClosure::Naturals => println!("{{\"naturals\":true}}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { command } => match command {
            OracleCommand::Crosscheck { frobenius } => {
                let report = oracle::crosscheck(frobenius)?;
                println!("{}", serde_json::to_string(&report).expect("plain data"));
                Ok(if report.mismatches.is_empty() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
