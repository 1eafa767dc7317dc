use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nmrel::doc::{self, Parsed};
use nmrel::verify::{self, GenConfig};
use nmrel::{cartesian_product, NmRelation, NmSet};

/// Batch interface over the neutrosophic multi set and relation algebra.
#[derive(Parser)]
#[command(name = "nmrel", version, about)]
struct Cli {
    /// Write the output document here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Enforce non-decreasing truth sequences when parsing sets
    #[arg(long, global = true)]
    strict_ordering: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetOpKind {
    Union,
    Intersection,
    Addition,
    Multiplication,
    Complement,
    Subset,
    Equal,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelOpKind {
    Union,
    Intersection,
    Addition,
    Multiplication,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Reflexive,
    Symmetric,
    Transitive,
    Equivalence,
}

#[derive(Args)]
struct GenArgs {
    /// Master seed (defaults to NMREL_SEED, then 0)
    #[arg(long)]
    seed: Option<u64>,

    #[arg(long, default_value_t = 3)]
    universe_size: usize,

    #[arg(long, default_value_t = 1)]
    dimension: usize,

    /// Draw components from this grid instead of uniformly
    #[arg(long, value_delimiter = ',')]
    grid: Option<Vec<f64>>,

    /// Chance that a generated pair is omitted
    #[arg(long, default_value_t = 0.25)]
    partial_probability: f64,
}

impl GenArgs {
    fn config(&self) -> GenConfig {
        let seed = self.seed.unwrap_or_else(|| {
            std::env::var("NMREL_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
                .unwrap_or(0)
        });
        GenConfig {
            seed,
            universe_size: self.universe_size,
            dimension: self.dimension,
            value_grid: self.grid.clone(),
            partial_probability: self.partial_probability,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply a set operation
    Op {
        #[arg(long, value_enum)]
        kind: SetOpKind,
        left: PathBuf,
        /// Second operand (all kinds except complement)
        right: Option<PathBuf>,
    },
    /// Apply a relation operation
    Relop {
        #[arg(long, value_enum)]
        kind: RelOpKind,
        left: PathBuf,
        right: PathBuf,
    },
    /// Cartesian product of two sets
    Product { left: PathBuf, right: PathBuf },
    /// Composition S∘R of relations S: B→C and R: A→B
    Compose { s: PathBuf, r: PathBuf },
    /// Inverse (transpose) of a relation
    Inverse { relation: PathBuf },
    /// k-th composition power of a square relation
    Power {
        #[arg(short, long)]
        k: usize,
        relation: PathBuf,
    },
    /// Transitive closure of a square relation
    Closure { relation: PathBuf },
    /// Evaluate a property predicate; exits 1 when the property is false
    Check {
        #[arg(long, value_enum)]
        property: Property,
        relation: PathBuf,
    },
    /// Run a law suite on seeded random inputs; exits 1 on any failure
    Verify {
        #[arg(long)]
        law: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Search for a counterexample to a negative claim; exits 1 when found
    Hunt {
        #[arg(long)]
        claim: String,
        #[arg(long, default_value_t = 10000)]
        max_trials: u64,
        #[command(flatten)]
        gen: GenArgs,
    },
}

fn load(path: &PathBuf, strict: bool) -> nmrel::Result<Parsed> {
    let text = fs::read_to_string(path).map_err(|e| {
        nmrel::Error::Schema(format!("cannot read {}: {e}", path.display()))
    })?;
    doc::parse_with_options(&text, strict)
}

fn load_set(path: &PathBuf, strict: bool) -> nmrel::Result<NmSet> {
    load(path, strict)?.into_set()
}

fn load_relation(path: &PathBuf, strict: bool) -> nmrel::Result<NmRelation> {
    load(path, strict)?.into_relation()
}

fn emit(out: &Option<PathBuf>, text: &str) -> nmrel::Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| {
            nmrel::Error::Schema(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn boolean_report(result: bool) -> String {
    let mut text = serde_json::to_string_pretty(&json!({ "result": result })).unwrap();
    text.push('\n');
    text
}

fn run(cli: &Cli) -> nmrel::Result<u8> {
    let strict = cli.strict_ordering;
    match &cli.command {
        Command::Op { kind, left, right } => {
            let a = load_set(left, strict)?;
            let need_right = !matches!(kind, SetOpKind::Complement);
            let b = match (need_right, right) {
                (true, Some(path)) => Some(load_set(path, strict)?),
                (true, None) => {
                    return Err(nmrel::Error::Schema(
                        "this operation needs two set documents".into(),
                    ))
                }
                (false, _) => None,
            };
            match kind {
                SetOpKind::Union => emit(&cli.out, &doc::serialize_set(&a.union(b.as_ref().unwrap())?))?,
                SetOpKind::Intersection => {
                    emit(&cli.out, &doc::serialize_set(&a.intersection(b.as_ref().unwrap())?))?
                }
                SetOpKind::Addition => {
                    emit(&cli.out, &doc::serialize_set(&a.addition(b.as_ref().unwrap())?))?
                }
                SetOpKind::Multiplication => {
                    emit(&cli.out, &doc::serialize_set(&a.multiplication(b.as_ref().unwrap())?))?
                }
                SetOpKind::Complement => emit(&cli.out, &doc::serialize_set(&a.complement()))?,
                SetOpKind::Subset => {
                    let result = a.is_subset_of(b.as_ref().unwrap())?;
                    emit(&cli.out, &boolean_report(result))?;
                    return Ok(if result { 0 } else { 1 });
                }
                SetOpKind::Equal => {
                    let result = a.nm_equal(b.as_ref().unwrap())?;
                    emit(&cli.out, &boolean_report(result))?;
                    return Ok(if result { 0 } else { 1 });
                }
            }
            Ok(0)
        }
        Command::Relop { kind, left, right } => {
            let r = load_relation(left, strict)?;
            let s = load_relation(right, strict)?;
            let result = match kind {
                RelOpKind::Union => r.union(&s)?,
                RelOpKind::Intersection => r.intersection(&s)?,
                RelOpKind::Addition => r.addition(&s)?,
                RelOpKind::Multiplication => r.multiplication(&s)?,
            };
            emit(&cli.out, &doc::serialize_relation(&result))?;
            Ok(0)
        }
        Command::Product { left, right } => {
            let a = load_set(left, strict)?;
            let b = load_set(right, strict)?;
            emit(&cli.out, &doc::serialize_relation(&cartesian_product(&a, &b)?))?;
            Ok(0)
        }
        Command::Compose { s, r } => {
            let s = load_relation(s, strict)?;
            let r = load_relation(r, strict)?;
            emit(&cli.out, &doc::serialize_relation(&s.compose(&r)?))?;
            Ok(0)
        }
        Command::Inverse { relation } => {
            let r = load_relation(relation, strict)?;
            emit(&cli.out, &doc::serialize_relation(&r.inverse()))?;
            Ok(0)
        }
        Command::Power { k, relation } => {
            let r = load_relation(relation, strict)?;
            emit(&cli.out, &doc::serialize_relation(&r.power(*k)?))?;
            Ok(0)
        }
        Command::Closure { relation } => {
            let r = load_relation(relation, strict)?;
            emit(&cli.out, &doc::serialize_relation(&r.transitive_closure()?))?;
            Ok(0)
        }
        Command::Check { property, relation } => {
            let r = load_relation(relation, strict)?;
            let result = match property {
                Property::Reflexive => r.is_reflexive()?,
                Property::Symmetric => r.is_symmetric()?,
                Property::Transitive => r.is_transitive()?,
                Property::Equivalence => r.is_equivalence()?,
            };
            emit(&cli.out, &boolean_report(result))?;
            Ok(if result { 0 } else { 1 })
        }
        Command::Verify { law, trials, gen } => {
            let report = verify::check_law(law, &gen.config(), *trials)?;
            let mut text = serde_json::to_string_pretty(&report).unwrap();
            text.push('\n');
            emit(&cli.out, &text)?;
            Ok(if report.failures == 0 { 0 } else { 1 })
        }
        Command::Hunt {
            claim,
            max_trials,
            gen,
        } => {
            let witness = verify::find_counterexample(claim, &gen.config(), *max_trials)?;
            let found = witness.is_some();
            let mut text = serde_json::to_string_pretty(&json!({
                "claim": claim,
                "witness": witness,
            }))
            .unwrap();
            text.push('\n');
            emit(&cli.out, &text)?;
            Ok(if found { 1 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
