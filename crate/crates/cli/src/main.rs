//! `wiener-roots`: Wiener polynomials, their roots, and verification of the
//! root-location results.
//!
//! Exit status: 0 on success (every verdict `pass`), 1 when a verification
//! or computation fails, 2 on usage, input or I/O errors.

mod params;
mod record;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wiener_roots::claims::{self, ClaimReport, GraphClass, Job, Objective, Profile, VerifyConfig};
use wiener_roots::{FamilySpec, Graph};

use record::{Line, OutputRecord};

const SEED_VAR: &str = "WIENER_ROOTS_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "wiener-roots",
    version,
    about = "Wiener polynomials of connected graphs and the location of their roots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow order-8 labeled graph sweeps (slow).
    #[arg(long, global = true)]
    long: bool,
    /// Tolerance for inequalities on numeric roots.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Polynomial, roots and annulus of each input graph.
    Compute {
        /// graph6 file (one graph per line) or edge-list file; `-` or absent
        /// reads stdin. Edge lists start with the vertex count.
        input: Option<PathBuf>,
    },
    /// Roots of every distinct distance distribution of one order as "re,im"
    /// rows, including 0 once per distribution.
    Scatter {
        #[arg(long)]
        order: usize,
        #[arg(long, value_parser = parse_class)]
        class: GraphClass,
    },
    /// Runs one verifier; parameters are name=value, ranges as name=lo..hi.
    Verify {
        claim: String,
        params: Vec<String>,
        /// Also write the claim_id,params,verdict,runtime table here.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Runs a whole suite of verifiers.
    VerifyAll {
        #[arg(long, default_value = "quick", value_parser = parse_profile)]
        profile: Profile,
        /// Also write the claim_id,params,verdict,runtime table here.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Record for one family member, e.g. `broom:4,12` or `t_n:9`.
    Family { spec: String },
    /// Distributions attaining an extremal root over a whole class.
    Extremal {
        #[arg(long)]
        order: usize,
        #[arg(long, value_parser = parse_objective)]
        objective: Objective,
        #[arg(long, value_parser = parse_class)]
        class: GraphClass,
    },
    /// Lists the claim ids with their parameters.
    Claims,
}

fn parse_class(s: &str) -> Result<GraphClass, String> {
    s.parse()
}

fn parse_objective(s: &str) -> Result<Objective, String> {
    s.parse()
}

fn parse_profile(s: &str) -> Result<Profile, String> {
    s.parse()
}

#[derive(Debug)]
enum Failure {
    /// Exit 1.
    Failed(String),
    /// Exit 2.
    Usage(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(msg)) => {
            if !msg.is_empty() {
                eprintln!("wiener-roots: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("wiener-roots: {msg}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Outcome {
    if std::env::var_os(SEED_VAR).is_some() {
        return Err(Failure::Usage(format!(
            "{SEED_VAR} is set, but every computation here is deterministic and takes no seed; unset it"
        )));
    }
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(Failure::Usage(format!(
            "--tol must be a nonnegative number, got {}",
            cli.tol
        )));
    }
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".to_string()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let config = VerifyConfig {
        eps: cli.tol,
        allow_long: cli.long,
    };
    let ctx = Context {
        format: cli.format,
        out: cli.out,
        config,
    };
    match cli.command {
        Command::Compute { input } => compute(&ctx, input.as_deref()),
        Command::Scatter { order, class } => scatter(&ctx, order, class),
        Command::Verify { claim, params, summary } => verify(&ctx, &claim, &params, summary.as_deref()),
        Command::VerifyAll { profile, summary } => {
            let jobs = claims::profile(profile, &ctx.config);
            run_suite(&ctx, &jobs, summary.as_deref())
        }
        Command::Family { spec } => family(&ctx, &spec),
        Command::Extremal {
            order,
            objective,
            class,
        } => extremal(&ctx, order, objective, class),
        Command::Claims => list_claims(&ctx),
    }
}

struct Context {
    format: Format,
    out: Option<PathBuf>,
    config: VerifyConfig,
}

impl Context {
    /// Single writer for the primary output.
    fn writer(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    fn emit_lines(&self, lines: &[Line]) -> io::Result<()> {
        let mut w = self.writer()?;
        match self.format {
            Format::Json => record::write_json(&mut w, lines)?,
            Format::Csv => record::write_csv(&mut w, lines)?,
        }
        w.flush()
    }
}

fn read_input(input: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match input {
        None => io::stdin().read_to_string(&mut text)?,
        Some(p) if p.as_os_str() == "-" => io::stdin().read_to_string(&mut text)?,
        Some(p) => File::open(p)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
    };
    Ok(text)
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn compute(ctx: &Context, input: Option<&Path>) -> Outcome {
    let text = read_input(input)?;
    // graph6 bytes lie in 63..=126, so a leading integer means an edge list
    let edge_list = content_lines(&text).next().is_some_and(|l| l.parse::<usize>().is_ok());
    let mut parse_failed = false;
    let mut root_failed = false;
    let mut lines = Vec::new();
    let mut push = |desc: String, parsed: Result<Graph, String>| {
        let line = match parsed {
            Err(e) => {
                parse_failed = true;
                Line::Err(record::ErrorRecord {
                    graph_desc: desc,
                    error: e,
                })
            }
            Ok(g) if !g.is_connected() => Line::Err(record::ErrorRecord {
                graph_desc: desc,
                error: "graph is disconnected".to_string(),
            }),
            Ok(g) => match OutputRecord::from_graph(desc.clone(), &g) {
                Ok(r) => Line::Ok(r),
                Err(e) => {
                    root_failed = true;
                    Line::Err(record::ErrorRecord {
                        graph_desc: desc,
                        error: e,
                    })
                }
            },
        };
        lines.push(line);
    };
    if edge_list {
        let desc = input.map_or("stdin".to_string(), |p| p.display().to_string());
        push(desc, Graph::parse_edge_list(&text).map_err(|e| e.to_string()));
    } else {
        for l in content_lines(&text) {
            let g6 = l.strip_prefix(">>graph6<<").unwrap_or(l);
            push(g6.to_string(), Graph::parse_graph6(g6).map_err(|e| e.to_string()));
        }
    }
    ctx.emit_lines(&lines)?;
    if parse_failed {
        Err(Failure::Usage("some inputs could not be parsed".to_string()))
    } else if root_failed {
        Err(Failure::Failed("root finding failed on some inputs".to_string()))
    } else {
        Ok(())
    }
}

fn scatter(ctx: &Context, order: usize, class: GraphClass) -> Outcome {
    let sweep = match class {
        GraphClass::Graphs => claims::graph_root_sets(order, ctx.config.allow_long).map_err(|e| {
            let hint = if order == 8 { " (order 8 needs --long)" } else { "" };
            Failure::Usage(format!("{e}{hint}"))
        })?,
        GraphClass::Trees => claims::tree_root_sets(order).map_err(|e| Failure::Usage(e.to_string()))?,
    };
    let mut w = ctx.writer()?;
    writeln!(w, "re,im")?;
    for set in &sweep.sets {
        let roots = set
            .roots
            .as_ref()
            .map_err(|e| Failure::Failed(format!("{}: {e}", set.label())))?;
        writeln!(w, "{},{}", record::float(0.0), record::float(0.0))?;
        for z in roots {
            writeln!(w, "{},{}", record::float(z.re), record::float(z.im))?;
        }
    }
    w.flush()?;
    eprintln!(
        "{} {class} of order {order}, {} distinct distributions",
        sweep.instances,
        sweep.sets.len()
    );
    Ok(())
}

fn verify(ctx: &Context, id: &str, args: &[String], summary: Option<&Path>) -> Outcome {
    let info = claims::claim(id).map_err(|e| Failure::Usage(e.to_string()))?;
    let grid = params::expand(args).map_err(Failure::Usage)?;
    let jobs: Vec<Job> = grid.into_iter().map(|params| Job { claim: info.id, params }).collect();
    run_suite(ctx, &jobs, summary)
}

fn run_suite(ctx: &Context, jobs: &[Job], summary: Option<&Path>) -> Outcome {
    let reports = claims::run_jobs(jobs, &ctx.config).map_err(|e| Failure::Usage(e.to_string()))?;
    // long suites only echo the runs that did not pass
    let verbose = reports.len() <= 40;
    for r in reports.iter().filter(|r| verbose || !r.passed()) {
        eprintln!(
            "{:<19} {} {} ({:.3}s)",
            r.verdict.to_string(),
            r.claim_id,
            r.params_string(),
            r.runtime_secs
        );
    }
    let mut w = ctx.writer()?;
    match ctx.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &reports).map_err(io::Error::other)?;
            writeln!(w)?;
        }
        Format::Csv => write_summary(&mut w, &reports)?,
    }
    w.flush()?;
    if let Some(p) = summary {
        let mut f = BufWriter::new(File::create(p)?);
        write_summary(&mut f, &reports)?;
        f.flush()?;
    }
    let bad = reports.iter().filter(|r| !r.passed()).count();
    eprintln!("{} of {} runs passed", reports.len() - bad, reports.len());
    if bad == 0 {
        Ok(())
    } else {
        Err(Failure::Failed(String::new()))
    }
}

fn write_summary(out: &mut dyn Write, reports: &[ClaimReport]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["claim_id", "params", "verdict", "runtime"])?;
    for r in reports {
        w.write_record([
            r.claim_id.clone(),
            r.params_string(),
            r.verdict.to_string(),
            format!("{:.6}", r.runtime_secs),
        ])?;
    }
    w.flush()
}

fn family(ctx: &Context, text: &str) -> Outcome {
    let spec: FamilySpec = text
        .parse()
        .map_err(|e: wiener_roots::families::FamilyError| Failure::Usage(e.to_string()))?;
    let w = spec.polynomial().map_err(|e| Failure::Usage(e.to_string()))?;
    let line = match OutputRecord::from_polynomial(spec.to_string(), &w) {
        Ok(r) => Line::Ok(r),
        Err(e) => {
            ctx.emit_lines(&[Line::Err(record::ErrorRecord {
                graph_desc: spec.to_string(),
                error: e.clone(),
            })])?;
            return Err(Failure::Failed(e));
        }
    };
    ctx.emit_lines(&[line])?;
    Ok(())
}

fn extremal(ctx: &Context, order: usize, objective: Objective, class: GraphClass) -> Outcome {
    use claims::SearchError;
    let report = claims::search_extremal(order, objective, class, ctx.config.allow_long).map_err(|e| match e {
        SearchError::Unresolved(_) => Failure::Failed(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    })?;
    let mut w = ctx.writer()?;
    match ctx.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &report).map_err(io::Error::other)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            c.write_record(["best_value", "distribution", "representative", "root"])?;
            for e in &report.argmax {
                c.write_record([
                    record::float(report.best_value),
                    e.distribution.to_string(),
                    e.representative.clone(),
                    e.root.clone(),
                ])?;
            }
            c.flush()?;
        }
    }
    w.flush()?;
    Ok(())
}

fn list_claims(ctx: &Context) -> Outcome {
    let mut w = ctx.writer()?;
    for c in claims::CLAIMS {
        let params: Vec<String> = c
            .params
            .iter()
            .map(|p| format!("{}={} ({}..{})", p.name, p.default, p.lo, p.hi))
            .collect();
        writeln!(w, "{:<26} {:<40} {}", c.id, params.join(" "), c.summary)?;
    }
    w.flush()?;
    Ok(())
}
