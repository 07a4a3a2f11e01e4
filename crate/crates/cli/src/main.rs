use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use gegenlab::gegenbauer::{gen_eigen, gen_eigen_at, gen_recurrence};
use gegenlab::integrals::engine_operator;
use gegenlab::latex::Latex;
use gegenlab::scalars::parse_rational;
use gegenlab::symfun::MAX_VARS;
use gegenlab::{KappaRational, Rational, Weight, ZPolynomial};

use gegenlab_cli::cache::{Cache, Lookup};
use gegenlab_cli::json;
use gegenlab_cli::verify::{self, Limits, UsageError};

#[derive(Parser)]
#[command(name = "gegenlab", version, about = "Exact generalized Gegenbauer polynomials of the A_n Sutherland model")]
struct Cli {
    /// Directory for cached polynomials (GEGENLAB_CACHE takes precedence).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Report timing and cache activity on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate P_m.
    Gen {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_parser = parse_weight)]
        weight: Weight,
        #[arg(long, value_enum, default_value_t = Method::Eigen)]
        method: Method,
        #[arg(long, value_parser = parse_kappa, default_value = "sym", allow_hyphen_values = true)]
        kappa: KappaMode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite; exit 1 if any check does not pass.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        max_components: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the z-space form of an integral of motion.
    Operators {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate P_m exactly at a rational κ and a rational point.
    Eval {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_parser = parse_weight)]
        weight: Weight,
        #[arg(long, value_parser = parse_kappa, allow_hyphen_values = true)]
        kappa: KappaMode,
        /// Comma-separated values of z_1, ..., z_n.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Point,
    },
    /// List every P_m with total degree Σ m_i ≤ --max-degree.
    Table {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        #[arg(long, value_parser = parse_kappa, default_value = "sym", allow_hyphen_values = true)]
        kappa: KappaMode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Eigen,
    Recurrence,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Debug)]
enum KappaMode {
    Symbolic,
    Value(Rational),
}

fn parse_weight(s: &str) -> std::result::Result<Weight, String> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| format!("'{x}' is not a non-negative integer")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Weight)
}

fn parse_kappa(s: &str) -> std::result::Result<KappaMode, String> {
    if s == "sym" {
        return Ok(KappaMode::Symbolic);
    }
    parse_rational(s).map(KappaMode::Value).ok_or_else(|| format!("'{s}' is neither 'sym' nor a rational p/q"))
}

#[derive(Clone, Debug)]
struct Point(Vec<Rational>);

fn parse_point(s: &str) -> std::result::Result<Point, String> {
    s.split(',')
        .map(|x| parse_rational(x).ok_or_else(|| format!("'{x}' is not a rational")))
        .collect::<std::result::Result<_, _>>()
        .map(Point)
}

struct Ctx {
    cache: Option<Cache>,
    verbose: bool,
}

impl Ctx {
    fn note(&self, msg: impl AsRef<str>) {
        if self.verbose {
            eprintln!("{}", msg.as_ref());
        }
    }
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn check_rank(rank: usize) -> Result<usize> {
    if rank == 0 || rank + 1 > MAX_VARS {
        return Err(usage(format!("rank must be between 1 and {}", MAX_VARS - 1)));
    }
    Ok(rank + 1)
}

fn check_weight(rank: usize, w: &Weight) -> Result<usize> {
    let n_vars = check_rank(rank)?;
    if w.rank() != rank {
        return Err(usage(format!("weight {w} has {} entries, rank is {rank}", w.rank())));
    }
    Ok(n_vars)
}

/// Symbolic P_m, through the cache when one is configured.
fn symbolic(ctx: &Ctx, w: &Weight, n_vars: usize, method: Method) -> Result<ZPolynomial<KappaRational>> {
    let start = Instant::now();
    if let (Some(cache), Method::Eigen) = (&ctx.cache, method) {
        match cache.load(w) {
            Lookup::Hit(p) => {
                ctx.note(format!("cache hit for P{w} in {:?}", start.elapsed()));
                return Ok(p);
            }
            Lookup::Rejected(why) => eprintln!("warning: ignoring cache entry for P{w}: {why}"),
            Lookup::Miss => {}
        }
    }
    let p = match method {
        Method::Eigen => gen_eigen(w, n_vars)?,
        Method::Recurrence => gen_recurrence(w, n_vars)?,
    };
    ctx.note(format!("generated P{w} in {:?}", start.elapsed()));
    if let (Some(cache), Method::Eigen) = (&ctx.cache, method) {
        cache.store(w, &p)?;
    }
    Ok(p)
}

fn numeric(ctx: &Ctx, w: &Weight, n_vars: usize, method: Method, kappa: &Rational) -> Result<ZPolynomial<Rational>> {
    match method {
        Method::Eigen => {
            let start = Instant::now();
            let p = gen_eigen_at(w, n_vars, kappa)?;
            ctx.note(format!("generated P{w} at κ = {kappa} in {:?}", start.elapsed()));
            Ok(p)
        }
        Method::Recurrence => Ok(symbolic(ctx, w, n_vars, method)?.try_map_coeffs(|c| c.eval(kappa))?),
    }
}

fn render(ctx: &Ctx, w: &Weight, n_vars: usize, method: Method, kappa: &KappaMode, format: Format) -> Result<String> {
    Ok(match kappa {
        KappaMode::Symbolic => {
            let p = symbolic(ctx, w, n_vars, method)?;
            match format {
                Format::Json => json::to_string(&json::symbolic_doc(w, &p)),
                Format::Latex => p.latex(),
                Format::Text => p.to_string(),
            }
        }
        KappaMode::Value(k) => {
            let p = numeric(ctx, w, n_vars, method, k)?;
            match format {
                Format::Json => json::to_string(&json::numeric_doc(w, &p)),
                Format::Latex => p.latex(),
                Format::Text => p.to_string(),
            }
        }
    })
}

fn label(w: &Weight, format: Format) -> String {
    let parts: Vec<String> = w.0.iter().map(|x| x.to_string()).collect();
    match format {
        Format::Latex => format!("P_{{{}}}", parts.join(",")),
        _ => format!("P{w}"),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let cache_dir = std::env::var_os("GEGENLAB_CACHE").map(PathBuf::from).or(cli.cache);
    let ctx = Ctx { cache: cache_dir.map(Cache::new), verbose: cli.verbose };
    match cli.command {
        Command::Gen { rank, weight, method, kappa, format } => {
            let n_vars = check_weight(rank, &weight)?;
            if matches!(method, Method::Recurrence) && !(1..=3).contains(&rank) {
                return Err(usage("the recurrence method needs rank 1, 2 or 3"));
            }
            println!("{}", render(&ctx, &weight, n_vars, method, &kappa, format)?);
        }
        Command::Verify { suite, rank, max_degree, max_components, format } => {
            check_rank(rank)?;
            let report = verify::run(&suite, rank, Limits { max_degree, max_components })?;
            ctx.note(format!("suite {suite} finished in {:?}", report.elapsed));
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => print!("{}", report.to_text()),
                Format::Latex => return Err(usage("verify supports --format text or json")),
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Operators { rank, order, format } => {
            let n_vars = check_rank(rank)?;
            if !(1..=n_vars.min(4)).contains(&order) {
                return Err(usage(format!("order must be between 1 and {} for rank {rank}", n_vars.min(4))));
            }
            let op = engine_operator(order, n_vars)?;
            match format {
                Format::Text => println!("{}", op.to_text()),
                Format::Latex => println!("{}", op.to_latex()),
                Format::Json => return Err(usage("operators supports --format text or latex")),
            }
        }
        Command::Eval { rank, weight, kappa, point: Point(point) } => {
            let n_vars = check_weight(rank, &weight)?;
            let KappaMode::Value(k) = kappa else {
                return Err(usage("eval needs a numeric --kappa p/q"));
            };
            if point.len() != rank {
                return Err(usage(format!("point has {} entries, rank is {rank}", point.len())));
            }
            let p = symbolic(&ctx, &weight, n_vars, Method::Eigen)?.try_map_coeffs(|c| c.eval(&k))?;
            println!("{}", json::rational_str(&p.eval(&point)?));
        }
        Command::Table { rank, max_degree, kappa, format } => {
            let n_vars = check_rank(rank)?;
            let weights = Weight::all_up_to_total(rank, max_degree);
            if format == Format::Json {
                let mut docs = Vec::new();
                for w in &weights {
                    docs.push(match &kappa {
                        KappaMode::Symbolic => json::symbolic_doc(w, &symbolic(&ctx, w, n_vars, Method::Eigen)?),
                        KappaMode::Value(k) => json::numeric_doc(w, &numeric(&ctx, w, n_vars, Method::Eigen, k)?),
                    });
                }
                println!("{}", serde_json::to_string(&docs)?);
            } else {
                for w in &weights {
                    let body = render(&ctx, w, n_vars, Method::Eigen, &kappa, format)?;
                    let sep = if format == Format::Latex { " &= " } else { " = " };
                    println!("{}{sep}{body}", label(w, format));
                }
            }
        }
    }
    Ok(0)
}

/// 2 for usage errors, 3 for mathematical-domain errors, 1 otherwise.
fn exit_code(err: &anyhow::Error) -> u8 {
    use gegenlab::Error as E;
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<E>() {
        Some(E::KappaPole { .. } | E::SpectralDegeneracy { .. } | E::DivisionByZero | E::NonRealDenominator(_)) => 3,
        Some(E::Unsupported(_) | E::RankMismatch { .. } | E::NonDominant(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
