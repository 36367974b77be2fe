use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use fuzzy_closure::document::{self, DocumentError};
use fuzzy_closure::search::{search_counterexample, SearchBounds, SearchOutcome, SearchProperty};
use fuzzy_closure::suite::{run_theorem_suite, Mutation, SuiteConfig};
use fuzzy_closure::{budget_from_env, expr};
use fuzzy_closure_core::constructions::{product, subspace, sum};
use fuzzy_closure_core::corpus::{build_example, Example, ExampleId};
use fuzzy_closure_core::{Error as CoreError, FtAxiom, FuzzyClosureSpace, SpaceMap, Verdict};

/// Čech fuzzy closure spaces on finite universes.
///
/// Exit codes: 0 success or the property holds, 1 the property fails (the
/// witness is printed), 2 input error, 3 enumeration budget exceeded. The
/// budget defaults to 10^6 fuzzy sets and can be raised with FCS_MAX_CARRIER.
#[derive(Parser)]
#[command(name = "fcs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the closure axioms and print any violations.
    Validate { file: PathBuf },
    /// Print c(f).
    Closure {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Print int(f).
    Interior {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Decide every separation axiom.
    Classify { file: PathBuf },
    /// Print the associated fuzzy topology and its FT axioms.
    Topology { file: PathBuf },
    /// Decide continuity of a map document.
    Continuity { file: PathBuf },
    /// Decide whether a map document is a homeomorphism.
    Homeo { file: PathBuf },
    /// Print the disjoint sum of spaces with pairwise distinct element names.
    Sum {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print the product of spaces over a common chain.
    Product {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print the subspace on the given elements.
    Subspace {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<String>,
    },
    /// Run the theorem suite and write a JSON report.
    Suite {
        #[arg(long, default_value_t = 2)]
        exhaustive_n: usize,
        #[arg(long, default_value_t = 2)]
        exhaustive_d: u16,
        #[arg(long, default_value_t = 3)]
        random_n: usize,
        #[arg(long, default_value_t = 4)]
        random_d: u16,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run only these theorems (repeatable).
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Replace a decider with a known-broken one (cft1_always_holds, regular_from_normal).
        #[arg(long)]
        mutation: Option<String>,
        #[arg(long)]
        serial: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Search finitely generated spaces for a witness of a non-implication.
    Search {
        /// t0_not_t1, t1_not_t2, normal_not_regular, regular_not_ts or tau_normal_not_normal.
        #[arg(long)]
        property: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_d: u16,
        #[arg(long)]
        serial: bool,
    },
    /// Print a named example as a document.
    Example {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        d: Option<u16>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e.chain().any(|cause| {
                matches!(cause.downcast_ref::<CoreError>(), Some(CoreError::Budget { .. }))
                    || cause.downcast_ref::<DocumentError>().is_some_and(DocumentError::is_budget)
            });
            ExitCode::from(if budget { 3 } else { 2 })
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_space(path: &Path) -> anyhow::Result<FuzzyClosureSpace> {
    let text = read(path)?;
    document::parse_space_with_budget(&text, budget_from_env()).with_context(|| format!("loading {}", path.display()))
}

fn load_map(path: &Path) -> anyhow::Result<SpaceMap> {
    let text = read(path)?;
    document::parse_map_with_budget(&text, budget_from_env()).with_context(|| format!("loading {}", path.display()))
}

fn verdict_code(v: &Verdict) -> ExitCode {
    ExitCode::from(if v.holds { 0 } else { 1 })
}

fn print_verdict(v: &Verdict, space: &FuzzyClosureSpace) {
    match &v.witness {
        None => println!("{}: true", v.property.id()),
        Some(w) => println!("{}: false ({})", v.property.id(), w.describe(space.carrier())),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => {
            let text = read(&file)?;
            match document::parse_space_with_budget(&text, budget_from_env()) {
                Ok(_) => {
                    println!("valid");
                    Ok(ExitCode::SUCCESS)
                }
                Err(DocumentError::Space(CoreError::Invalid(report))) => {
                    for v in report.violations() {
                        let sets: Vec<String> = v.witnesses.iter().map(ToString::to_string).collect();
                        println!("{:?}: {}", v.axiom, sets.join(", "));
                    }
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Closure { file, set } => {
            let s = load_space(&file)?;
            let f = expr::parse_set(s.carrier(), &set)?;
            println!("{}", s.closure(&f));
            Ok(ExitCode::SUCCESS)
        }
        Command::Interior { file, set } => {
            let s = load_space(&file)?;
            let f = expr::parse_set(s.carrier(), &set)?;
            println!("{}", s.interior(&f));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file } => {
            let s = load_space(&file)?;
            let report = fuzzy_closure_core::classify(&s)?;
            for v in report.verdicts() {
                print_verdict(v, &s);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Topology { file } => {
            let s = load_space(&file)?;
            let tau = s.associated_topology()?;
            println!("opens: {}", tau.opens().len());
            for f in tau.opens() {
                println!("  {f}");
            }
            for axiom in FtAxiom::ALL {
                print_verdict(&tau.ft_axiom(axiom), &s);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Continuity { file } => {
            let m = load_map(&file)?;
            let v = m.is_cf_continuous()?;
            print_verdict(&v, m.source());
            println!("preimage_preserves_open: {}", m.preimage_preserves_open()?);
            Ok(verdict_code(&v))
        }
        Command::Homeo { file } => {
            let m = load_map(&file)?;
            let v = m.is_cf_homeomorphism()?;
            print_verdict(&v, m.source());
            Ok(verdict_code(&v))
        }
        Command::Sum { files } => {
            let spaces = files.iter().map(|f| load_space(f)).collect::<anyhow::Result<Vec<_>>>()?;
            print!("{}", document::serialize_space(&sum(&spaces)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { files } => {
            let spaces = files.iter().map(|f| load_space(f)).collect::<anyhow::Result<Vec<_>>>()?;
            print!("{}", document::serialize_space(product(&spaces)?.space()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Subspace { file, elements } => {
            let s = load_space(&file)?;
            let names: Vec<&str> = elements.iter().map(|e| e.trim()).collect();
            print!("{}", document::serialize_space(&subspace(&s, &names)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Suite {
            exhaustive_n,
            exhaustive_d,
            random_n,
            random_d,
            samples,
            seed,
            theorems,
            mutation,
            serial,
            report,
        } => {
            let mutation = match mutation.as_deref() {
                None => None,
                Some("cft1_always_holds") => Some(Mutation::Cft1AlwaysHolds),
                Some("regular_from_normal") => Some(Mutation::RegularFromNormal),
                Some(other) => anyhow::bail!("unknown mutation `{other}`"),
            };
            let config = SuiteConfig {
                exhaustive_n,
                exhaustive_d,
                random_n,
                random_d,
                samples,
                seed,
                theorems: (!theorems.is_empty()).then_some(theorems),
                mutation,
                parallel: !serial,
            };
            let result = run_theorem_suite(&config)?;
            for t in &result.theorems {
                eprintln!("{:<28} {:>6} cases  {:>9.3}s", t.id, t.cases, t.elapsed.as_secs_f64());
                match &t.counterexample {
                    None => println!("pass {}", t.id),
                    Some(cx) => println!("FAIL {}: {} ({} case {})", t.id, cx.detail, cx.tier, cx.case),
                }
            }
            if let Some(path) = report {
                std::fs::write(&path, result.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(ExitCode::from(if result.passed { 0 } else { 1 }))
        }
        Command::Search {
            property,
            max_n,
            max_d,
            serial,
        } => {
            let property = SearchProperty::from_id(&property)
                .with_context(|| format!("unknown search property `{property}`"))?;
            let bounds = SearchBounds {
                max_n,
                max_d,
                limit: budget_from_env() as u128,
                parallel: !serial,
            };
            match search_counterexample(property, &bounds)? {
                SearchOutcome::Found {
                    n,
                    d,
                    index,
                    space,
                    examined,
                } => {
                    eprintln!("witness: space {index} at n={n}, D={d} ({examined} examined)");
                    print!("{}", document::serialize_space(&space));
                    Ok(ExitCode::SUCCESS)
                }
                SearchOutcome::Exhausted { examined } => {
                    println!("no witness among {examined} spaces");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Example { name, n, d } => {
            let id = ExampleId::from_name(&name).with_context(|| format!("unknown example `{name}`"))?;
            let d = d.unwrap_or(id.default_denominator());
            match build_example(id, n, d)? {
                Example::Space(s) => print!("{}", document::serialize_space(&s)),
                Example::Map(m) => print!("{}", document::serialize_map(&m)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
