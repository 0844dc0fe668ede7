mod cache;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mckay_core::bijection::{build_bijection, verify_bijection, Strategy};
use mckay_core::checks::{run_suite, CheckResult, SuiteConfig};
use mckay_core::lr::{lr_coeff, restriction_constituents};
use mckay_core::normalizer::{enum_norm_n, NormalizerCharLabel};
use mckay_core::scalar::is_prime;
use mckay_core::sylow::{ClassDistribution, StarLabel};
use mckay_core::sym::{enumerate_pprime, MnCache};
use mckay_core::{core_quotient, degree, n_s_invariant, Error, Partition};
use serde::Serialize;
use serde_json::json;

use cache::Cache;
use render::{csv_rows, json_lines, Row};

/// Largest `n` any command accepts unless `--n-cap` lowers it.
const HARD_N_CAP: usize = 120;

#[derive(Parser, Debug)]
#[command(name = "mckay", version, about = "p'-characters of symmetric groups and their Sylow normalizers")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Refuse any n above this (at most 120).
    #[arg(long, global = true, default_value_t = HARD_N_CAP)]
    n_cap: usize,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Recursive,
    Global,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Recursive => Strategy::Recursive,
            StrategyArg::Global => Strategy::Global,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Core, quotient and N_s of a partition for s = p^k.
    Core {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        partition: Partition,
    },
    /// Partitions of n with degree prime to p, with degrees.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// p'-degree characters of the Sylow normalizer of S_n, with degrees.
    Normalizer {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// A Littlewood-Richardson coefficient, or every constituent of a
    /// restriction to S_x × S_{n-x} when --x is given.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, conflicts_with = "x", requires = "gamma")]
        mu: Option<Partition>,
        #[arg(long)]
        gamma: Option<Partition>,
        #[arg(long)]
        x: Option<usize>,
    },
    /// Multiplicity of a linear character of the Sylow p-subgroup in a
    /// restricted character of S_n. Defaults to the star character.
    Restrict {
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        p: usize,
        /// Exponents of the linear label, one per level; |λ| must be p^k.
        #[arg(long, value_delimiter = ',')]
        label: Option<Vec<usize>>,
    },
    /// A degree-dominating bijection, verified before it is printed.
    Bijection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Recursive)]
        strategy: StrategyArg,
    },
    /// The check suite over n ≤ n-max and the given primes.
    Verify {
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7,11,13")]
        primes: Vec<usize>,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        sample: usize,
        /// Keep per-check timings (output is then not byte-stable).
        #[arg(long)]
        timing: bool,
    },
}

enum Failure {
    /// Bad input: exit 2.
    Invalid(String),
    /// A check or verification failed: exit 1.
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Fault(_) => Failure::Failed(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

/// Rendered output plus the failure it reports, if any.
struct Rendered {
    bytes: Vec<u8>,
    failed: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.threads > 0 {
        // Only fails if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.global.threads).build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("invalid input: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let g = &cli.global;
    if g.n_cap > HARD_N_CAP {
        return Err(Failure::Invalid(format!("--n-cap may not exceed {HARD_N_CAP}")));
    }
    validate(&cli.command, g.n_cap)?;
    let key_material = format!("{:?}|{:?}", cli.command, g.format);
    let cacheable = !matches!(cli.command, Command::Verify { timing: true, .. });
    let cache = Cache::from_env().filter(|_| cacheable);
    let key = Cache::key(&key_material);
    let rendered = match cache.as_ref().and_then(|c| c.get(&key)) {
        Some(bytes) => Rendered { failed: None, bytes },
        None => {
            let r = execute(&cli.command, g.format)?;
            if let (Some(c), None) = (&cache, &r.failed) {
                c.put(&key, &r.bytes).map_err(|e| Failure::Invalid(format!("cache write failed: {e}")))?;
            }
            r
        }
    };
    emit(g.output.as_ref(), &rendered.bytes)?;
    match rendered.failed {
        Some(msg) => Err(Failure::Failed(msg)),
        None => Ok(()),
    }
}

fn emit(path: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    let res = match path {
        Some(p) => std::fs::write(p, bytes),
        None => std::io::stdout().lock().write_all(bytes),
    };
    res.map_err(|e| Failure::Invalid(format!("cannot write output: {e}")))
}

fn check_prime(p: usize) -> Result<(), Failure> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("{p} is not prime")))
    }
}

fn check_n(n: usize, cap: usize) -> Result<(), Failure> {
    if n <= cap {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("n = {n} exceeds the cap {cap}")))
    }
}

fn validate(cmd: &Command, cap: usize) -> Result<(), Failure> {
    match cmd {
        Command::Core { p, partition, .. } => {
            check_prime(*p)?;
            check_n(partition.size(), cap)
        }
        Command::Enumerate { n, p } | Command::Normalizer { n, p } | Command::Bijection { n, p, .. } => {
            check_prime(*p)?;
            check_n(*n, cap)
        }
        Command::Lr { lambda, mu, x, .. } => {
            if mu.is_none() && x.is_none() {
                return Err(Failure::Invalid("give either --mu with --gamma, or --x".into()));
            }
            check_n(lambda.size(), cap)
        }
        Command::Restrict { partition, p, .. } => {
            check_prime(*p)?;
            check_n(partition.size(), cap)
        }
        Command::Verify { n_max, primes, .. } => {
            primes.iter().try_for_each(|&p| check_prime(p))?;
            check_n(*n_max, cap)
        }
    }
}

fn execute(cmd: &Command, format: Format) -> Result<Rendered, Failure> {
    let ok = |bytes| Ok(Rendered { bytes, failed: None });
    match cmd {
        Command::Core { p, k, partition } => {
            let s = p.checked_pow(*k).ok_or_else(|| Failure::Invalid("p^k overflows".into()))?;
            let cq = core_quotient(partition, s);
            let value = json!({
                "partition": partition,
                "s": s,
                "core": cq.core,
                "quotient": cq.quotient,
                "nS": n_s_invariant(partition, s),
            });
            ok(json_lines(&[value]))
        }
        Command::Enumerate { n, p } => {
            let parts = enumerate_pprime(*n, *p);
            let table: Vec<(&Partition, String)> = parts.iter().map(|l| (l, degree(l).to_string())).collect();
            ok(render_table(*n, *p, "S", &table, format)?)
        }
        Command::Normalizer { n, p } => {
            let labels = enum_norm_n(*n, *p)?;
            let table: Vec<(&NormalizerCharLabel, String)> =
                labels.iter().map(|l| (l, l.degree().to_string())).collect();
            ok(render_table(*n, *p, "N", &table, format)?)
        }
        Command::Lr { lambda, mu, gamma, x } => {
            let value = match (mu, gamma, x) {
                (Some(mu), Some(gamma), _) => {
                    json!({ "lambda": lambda, "mu": mu, "gamma": gamma, "coefficient": lr_coeff(lambda, mu, gamma)? })
                }
                (_, _, Some(x)) => {
                    json!({ "lambda": lambda, "x": x, "constituents": restriction_constituents(lambda, *x)? })
                }
                _ => unreachable!("validated"),
            };
            ok(json_lines(&[value]))
        }
        Command::Restrict { partition, p, label } => {
            let n = partition.size();
            let (dist, label_json) = match label {
                Some(s) => {
                    let k = s.len() as u32;
                    if p.checked_pow(k) != Some(n) || s.iter().any(|&e| e >= *p) {
                        return Err(Failure::Invalid(format!("label needs {n} = {p}^k and exponents below {p}")));
                    }
                    let star = StarLabel { p: *p, k, s: s.clone() };
                    (ClassDistribution::aggregate(&star), json!(s))
                }
                None => (ClassDistribution::composite_star(n, *p), json!("star")),
            };
            let m = dist.multiplicity(partition, &dist.class_sums(), &MnCache::new())?;
            let value = json!({ "partition": partition, "p": p, "label": label_json, "multiplicity": m.to_string() });
            ok(json_lines(&[value]))
        }
        Command::Bijection { n, p, strategy } => {
            let rec = build_bijection(*n, *p, (*strategy).into())?;
            let report = verify_bijection(&rec)?;
            let bytes = match format {
                Format::Json => rec.json_lines().into_bytes(),
                Format::Csv => {
                    let rows: Vec<Row> = rec
                        .pairs
                        .iter()
                        .flat_map(|pr| {
                            [
                                Row {
                                    n: *n,
                                    p: *p,
                                    side: "S",
                                    label: pr.lambda.to_string(),
                                    degree: pr.global_degree.to_string(),
                                },
                                Row {
                                    n: *n,
                                    p: *p,
                                    side: "N",
                                    label: pr.label.to_string(),
                                    degree: pr.local_degree.to_string(),
                                },
                            ]
                        })
                        .collect();
                    csv_rows(&rows)?
                }
            };
            let failed = (!report.passed).then(|| serde_json::to_string(&report.failures).expect("strings serialize"));
            Ok(Rendered { bytes, failed })
        }
        Command::Verify { n_max, primes, seed, sample, timing } => {
            if format == Format::Csv {
                return Err(Failure::Invalid("verify reports are JSON lines only".into()));
            }
            let cfg = SuiteConfig { n_max: *n_max, primes: primes.clone(), seed: *seed, star_sample: *sample };
            let results: Vec<CheckResult> =
                run_suite(&cfg).into_iter().map(|r| if *timing { r } else { r.without_timing() }).collect();
            let failed: Vec<&CheckResult> = results.iter().filter(|r| !r.passed()).collect();
            let failed = (!failed.is_empty()).then(|| {
                let ids: Vec<String> = failed.iter().map(|r| format!("{} {}", r.check_id, r.params)).collect();
                ids.join("; ")
            });
            Ok(Rendered { bytes: json_lines(&results), failed })
        }
    }
}

/// JSON lines `{"label", "degree"}` or CSV rows for one side.
fn render_table<L: Serialize + std::fmt::Display>(
    n: usize,
    p: usize,
    side: &'static str,
    table: &[(&L, String)],
    format: Format,
) -> Result<Vec<u8>, Failure> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Entry<'a, L> {
                label: &'a L,
                degree: &'a str,
            }
            let entries: Vec<Entry<L>> = table.iter().map(|(label, degree)| Entry { label: *label, degree }).collect();
            Ok(json_lines(&entries))
        }
        Format::Csv => {
            let rows: Vec<Row> =
                table.iter().map(|(l, d)| Row { n, p, side, label: l.to_string(), degree: d.clone() }).collect();
            csv_rows(&rows)
        }
    }
}
