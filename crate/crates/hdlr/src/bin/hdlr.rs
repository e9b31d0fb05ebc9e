use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hdlr::cache::write_atomic;
use hdlr::commands::{gr_constant, gr_table, gr_term, parse_triple, toric, FanSource, GrRequest};
use hdlr::config::{default_cache_dir, Config};
use hdlr::error::{Error, Result};
use hdlr::formats::{render, Format};
use hdlr::harness::{run_suite, SuiteParams, SUITES};
use hdlr_core::cohomology::ClassKind;
use hdlr_core::limits::{Budget, LimitMethod};
use hdlr_core::table::Theory;
use hdlr_core::weightfn::SubsetIndex;

#[derive(Parser)]
#[command(name = "hdlr", version, about = "h-deformed Littlewood-Richardson numbers, computed exactly")]
struct Cli {
    /// Cache directory; defaults to $HDLR_CACHE_DIR or .hdlr-cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Write output here (atomically) instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Csm,
    Mc,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "K", alias = "k")]
    K,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Line,
    Sum,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum CacheCmd {
    Inspect,
    Clear,
}

#[derive(Subcommand)]
enum Command {
    /// Structure constants of a toric space from its fan.
    Toric {
        /// Built-in space: projective, hirzebruch or a2.
        #[arg(long, conflicts_with = "fan", required_unless_present = "fan")]
        builtin: Option<String>,
        /// Dimension of a built-in projective space.
        #[arg(long)]
        m: Option<usize>,
        /// Fan in JSON form.
        #[arg(long)]
        fan: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csm")]
        kind: Kind,
        /// Shelling order: 1-based positions among the maximal cones.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Allow motivic Chern classes beyond projective spaces.
        #[arg(long)]
        experimental: bool,
    },
    /// Structure constants of Gr(d, n) from weight functions.
    Gr {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "H")]
        theory: TheoryArg,
        /// One constant: I,J,K as digit strings ("34,34,14"), or "3,4;3,4;1,4".
        #[arg(long)]
        triple: Option<String>,
        /// Keep the z-variables.
        #[arg(long)]
        equivariant: bool,
        /// With --triple: print only the localization summand at this fixed point.
        #[arg(long)]
        term: Option<String>,
        #[arg(long, value_enum, default_value = "line")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        no_cache: bool,
        /// Raise the budget to d <= 3 and 20 fixed points.
        #[arg(long)]
        extended: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Raise the budget to d <= 3 and 20 fixed points; conjecture reports
        /// beyond Gr(2,4) need it.
        #[arg(long)]
        extended: bool,
        /// Conjecture reports: sample about this many triples with K below I, J.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Inspect or clear the result cache.
    Cache {
        #[command(subcommand)]
        action: CacheCmd,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut cfg = Config { cache_dir: cli.cache_dir.clone().unwrap_or_else(default_cache_dir), ..Config::default() };
    match cli.command {
        Command::Toric { builtin, m, fan, kind, order, format, experimental } => {
            cfg.experimental = experimental;
            let src = match (builtin, fan) {
                (Some(name), _) => FanSource::Builtin { name, m },
                (None, Some(path)) => FanSource::Json(std::fs::read_to_string(path)?),
                (None, None) => return Err(Error::Format("give --builtin or --fan".into())),
            };
            let kind = match kind {
                Kind::Csm => ClassKind::Csm,
                Kind::Mc => ClassKind::Mc,
            };
            let table = toric(&src, kind, order.as_deref(), &cfg)?;
            emit(&cli.output, &render(&table, format)?)?;
        }
        Command::Gr { d, n, theory, triple, equivariant, term, method, format, no_cache, extended } => {
            if extended {
                cfg.budget = Budget::extended();
            }
            let req = GrRequest {
                d,
                n,
                theory: match theory {
                    TheoryArg::H => Theory::H,
                    TheoryArg::K => Theory::K,
                },
                equivariant,
                method: match method {
                    MethodArg::Line => LimitMethod::LineSubstitution,
                    MethodArg::Sum => LimitMethod::SumAndCancel,
                },
                use_cache: !no_cache,
            };
            match triple {
                Some(t) if term.is_some() => {
                    let triple = parse_triple(&t, n)?;
                    let l = SubsetIndex::parse(term.as_deref().unwrap_or_default(), n)?;
                    let v = gr_term(req.theory, &triple, &l, &cfg)?;
                    emit(&cli.output, &format!("{}\n", v.to_canonical_string()))?;
                }
                Some(t) => {
                    let triple = parse_triple(&t, n)?;
                    let (v, _) = gr_constant(&req, &triple, &cfg)?;
                    let [i, j, k] = &triple;
                    let text = match format {
                        Format::Json => {
                            let doc = serde_json::json!({
                                "space": format!("Gr({d},{n})"),
                                "theory": req.theory.to_string(),
                                "equivariant": equivariant,
                                "i": i.to_string(), "j": j.to_string(), "k": k.to_string(),
                                "value": v.to_string(),
                            });
                            serde_json::to_string_pretty(&doc)? + "\n"
                        }
                        _ => format!("{v}\n"),
                    };
                    emit(&cli.output, &text)?;
                }
                None => {
                    let table = gr_table(&req, &cfg)?;
                    emit(&cli.output, &render(&table, format)?)?;
                }
            }
        }
        Command::Verify { suite, max_m, d, n, extended, sample, format } => {
            let params = SuiteParams { max_m, d, n, extended, sample };
            if !SUITES.contains(&suite.as_str()) {
                return Err(Error::Format(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
            }
            let report = run_suite(&suite, &params)?;
            let text = match format {
                ReportFormat::Json => report.to_json()?,
                ReportFormat::Text => report.to_text(),
            };
            emit(&cli.output, &text)?;
            if report.has_hard_failure() {
                eprintln!("{} hard failure(s)", report.summary.hard_fail);
                return Ok(ExitCode::from(1));
            }
        }
        Command::Cache { action } => {
            let cache = cfg.cache();
            match action {
                CacheCmd::Inspect => {
                    let s = cache.inspect()?;
                    emit(
                        &cli.output,
                        &format!("dir: {}\nentries: {}\nbytes: {}\n", s.dir.display(), s.entries, s.bytes),
                    )?;
                }
                CacheCmd::Clear => {
                    let k = cache.clear()?;
                    emit(&cli.output, &format!("removed {k} entries\n"))?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            if let Error::InvalidFan(rep) = &e {
                eprintln!("fan validation report:");
                eprintln!("  primitive: {}", rep.primitive);
                eprintln!("  smooth: {}", rep.smooth);
                eprintln!("  complete: {}", rep.complete);
                eprintln!("  face closed: {}", rep.face_closed);
                for f in &rep.failures {
                    eprintln!("  failure: {f}");
                }
                for w in &rep.warnings {
                    eprintln!("  warning: {w}");
                }
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
