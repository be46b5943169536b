use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use harmonica::combinatorics::{
    count_basketballs, enumerate_basketballs, enumerate_partitions, rotation_class_count,
    rotation_class_representatives,
};
use harmonica::curves::{parse_radians, CurveAnalysis, TraceConfig};
use harmonica::necklace::{count_necklaces, enumerate_necklaces, SplitRange};
use harmonica::realize::realize_with;
use harmonica::render::{self, RenderKind, RenderSpec};
use harmonica::{
    Basketball, CombinatoricsError, CurveError, Matching, MonicPolynomial, OrderLimit, RealizeError,
};

#[derive(Parser)]
#[command(name = "harmonica", version, about = "Basketballs and necklaces of harmonic polynomial curves")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for the root finder's restart perturbations.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Lift the enumeration order limit.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountKind {
    Basketballs,
    RotationClasses,
    Necklaces,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Basketballs,
    Partitions,
    RotationClasses,
    Necklaces,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderKindArg {
    ChordDiagram,
    CurvePlot,
}

#[derive(Subcommand)]
enum Command {
    /// Count basketballs, rotation classes or necklaces of a given order.
    Count {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "basketballs")]
        kind: CountKind,
    },
    /// List every object of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "basketballs")]
        kind: EnumKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute B(f, alpha, beta) of a polynomial.
    Analyze {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a polynomial whose basketball at (alpha, beta) is the given one.
    Realize {
        #[arg(long, alias = "input")]
        basketball: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the necklace of matchings of a polynomial.
    Necklace {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the count, multiear and pairwise-basketball properties of all
    /// necklaces of an order.
    VerifyNecklaces {
        #[arg(long)]
        order: usize,
    },
    /// Draw the JSON input as SVG: chord diagrams for matchings and basketballs, curves for polynomials.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<RenderKindArg>,
        /// Comma-separated angles, one panel each.
        #[arg(long, allow_hyphen_values = true)]
        thetas: Option<String>,
        /// With --beta, superimpose C_alpha and C_beta in one panel.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, default_value_t = 360)]
        size: u32,
        #[arg(long, default_value_t = 400)]
        grid: usize,
    },
}

/// A failure with its exit code: 1 I/O, 2 invalid input, 3 singular or
/// degenerate input, 4 numerical failure, 5 order limit.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<CombinatoricsError> for Failure {
    fn from(e: CombinatoricsError) -> Self {
        let code = if matches!(e, CombinatoricsError::OrderTooLarge { .. }) { 5 } else { 2 };
        Failure::new(code, e.to_string())
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        let code = match e {
            CurveError::InvalidPolynomial(_) | CurveError::AngleOrder { .. } => 2,
            CurveError::Degenerate | CurveError::SingularTheta { .. } | CurveError::NecklaceDegenerate(_) => 3,
            _ => 4,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<RealizeError> for Failure {
    fn from(e: RealizeError) -> Self {
        match e {
            RealizeError::Curve(c) => c.into(),
            RealizeError::Combinatorics(c) => c.into(),
            other => Failure::new(4, other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn angle(s: &str) -> Result<f64, Failure> {
    parse_radians(s).map_err(|e| Failure::new(2, e))
}

fn emit(out: Option<&PathBuf>, text: String) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(1, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect::<Vec<_>>().join(" ")
}

fn basketball_text(b: &Basketball) -> String {
    format!("even: {}\nodd:  {}\n", pairs_text(b.even()), pairs_text(b.odd()))
}

struct Ctx {
    format: Format,
    limit: OrderLimit,
    config: TraceConfig,
}

fn cmd_count(ctx: &Ctx, order: usize, kind: CountKind) -> Outcome {
    if order == 0 {
        return Err(Failure::new(2, "order must be positive"));
    }
    let within = ctx.limit.check(order).is_ok();
    let (closed, enumerated): (Option<String>, Option<u64>) = match kind {
        CountKind::Basketballs => {
            let e = within
                .then(|| enumerate_basketballs(order, ctx.limit).map(|v| v.len() as u64))
                .transpose()?;
            (Some(count_basketballs(order).to_string()), e)
        }
        CountKind::Necklaces => {
            if order < 2 {
                return Err(Failure::new(2, "necklaces need order at least 2"));
            }
            // 2(2n)^{n-2} grows fast: past order 7 only enumerate on request.
            let e = (within && (order <= 7 || ctx.limit == OrderLimit::unlimited()))
                .then(|| enumerate_necklaces(order, ctx.limit).map(|v| v.len() as u64))
                .transpose()?;
            (Some(count_necklaces(order).to_string()), e)
        }
        CountKind::RotationClasses => (None, Some(rotation_class_count(order, ctx.limit)?)),
    };
    let agree = match (&closed, enumerated) {
        (Some(c), Some(e)) => Some(*c == e.to_string()),
        _ => None,
    };
    let text = match ctx.format {
        Format::Json => to_json(&json!({
            "order": order,
            "closed_form": closed,
            "enumerated": enumerated,
            "agree": agree,
        })),
        Format::Text => {
            let mut s = String::new();
            if let Some(c) = &closed {
                s += &format!("closed form: {c}\n");
            }
            match enumerated {
                Some(e) => s += &format!("enumerated:  {e}\n"),
                None => s += "enumerated:  skipped (order above the enumeration limit)\n",
            }
            if let Some(a) = agree {
                s += if a { "agree\n" } else { "DISAGREE\n" };
            }
            s
        }
    };
    emit(None, text)
}

fn cmd_enumerate(ctx: &Ctx, order: usize, kind: EnumKind, out: Option<&PathBuf>) -> Outcome {
    let (values, lines): (Vec<Value>, Vec<String>) = match kind {
        EnumKind::Basketballs | EnumKind::RotationClasses => {
            let all = if kind == EnumKind::Basketballs {
                enumerate_basketballs(order, ctx.limit)?
            } else {
                rotation_class_representatives(order, ctx.limit)?
            };
            (
                all.iter().map(|b| serde_json::to_value(b).expect("serializable")).collect(),
                all.iter().map(|b| basketball_text(b).replace('\n', "  ").trim_end().to_string()).collect(),
            )
        }
        EnumKind::Partitions => {
            let all = enumerate_partitions(order, ctx.limit)?;
            (
                all.iter().map(|q| serde_json::to_value(q).expect("serializable")).collect(),
                all.iter().map(|q| format!("{:?}", q.blocks())).collect(),
            )
        }
        EnumKind::Necklaces => {
            let all = enumerate_necklaces(order, ctx.limit)?;
            (
                all.iter().map(|nk| serde_json::to_value(nk).expect("serializable")).collect(),
                all.iter()
                    .map(|nk| nk.matchings().iter().map(|m| pairs_text(m.pairs())).collect::<Vec<_>>().join(" | "))
                    .collect(),
            )
        }
    };
    let text = match ctx.format {
        Format::Json => to_json(&values),
        Format::Text => lines.join("\n") + "\n",
    };
    emit(out, text)
}

fn cmd_analyze(ctx: &Ctx, poly: &PathBuf, alpha: &str, beta: &str, out: Option<&PathBuf>) -> Outcome {
    let f: MonicPolynomial = read_json(poly)?;
    let (a, b) = (angle(alpha)?, angle(beta)?);
    let analysis = CurveAnalysis::with_config(&f, ctx.config)?;
    let (bb, certs) = analysis.basketball(a, b)?;
    let text = match ctx.format {
        Format::Json => to_json(&json!({ "basketball": bb, "certificates": certs })),
        Format::Text => basketball_text(&bb),
    };
    emit(out, text)
}

fn cmd_realize(ctx: &Ctx, path: &PathBuf, alpha: &str, beta: &str, out: Option<&PathBuf>) -> Outcome {
    let b: Basketball = read_json(path)?;
    let (a, be) = (angle(alpha)?, angle(beta)?);
    let res = realize_with(&b, a, be, &ctx.config)?;
    let text = match ctx.format {
        Format::Json => to_json(&res),
        Format::Text => format!(
            "f(z) = {}\ninserted R: {:?}\nrotations: {:?}\n{}",
            res.polynomial,
            res.inserted_radii,
            res.rotation_log,
            basketball_text(&res.verification)
        ),
    };
    emit(out, text)
}

fn cmd_necklace(ctx: &Ctx, poly: &PathBuf, out: Option<&PathBuf>) -> Outcome {
    let f: MonicPolynomial = read_json(poly)?;
    let nk = CurveAnalysis::with_config(&f, ctx.config)?.necklace()?;
    let text = match ctx.format {
        Format::Json => to_json(&nk),
        Format::Text => nk.matchings().iter().map(|m| pairs_text(m.pairs()) + "\n").collect(),
    };
    emit(out, text)
}

fn cmd_verify_necklaces(ctx: &Ctx, order: usize) -> Outcome {
    if order < 2 {
        return Err(Failure::new(2, "necklaces need order at least 2"));
    }
    let all = enumerate_necklaces(order, ctx.limit)?;
    let expected = count_necklaces(order).to_string();
    let with_multiear = all.iter().filter(|nk| !nk.multiears(SplitRange::Interior).is_empty()).count();
    let pairwise = all.iter().filter(|nk| nk.pairwise_basketball_check()).count();
    let ok = expected == all.len().to_string() && with_multiear == all.len() && pairwise == all.len();
    let text = match ctx.format {
        Format::Json => to_json(&json!({
            "order": order,
            "count": all.len(),
            "expected": expected,
            "with_multiear": with_multiear,
            "pairwise_basketballs": pairwise,
            "ok": ok,
        })),
        Format::Text => format!(
            "necklaces: {} (expected {expected})\nwith a multiear: {with_multiear}\npairwise basketballs: {pairwise}\n{}\n",
            all.len(),
            if ok { "ok" } else { "FAILED" }
        ),
    };
    emit(None, text)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::new(2, "necklace properties do not hold"))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_render(
    input: &PathBuf,
    out: &PathBuf,
    kind: Option<RenderKindArg>,
    thetas: Option<&str>,
    alpha: Option<&str>,
    beta: Option<&str>,
    size: u32,
    grid: usize,
) -> Outcome {
    let value: Value = read_json(input)?;
    let is_poly = value.get("coeffs").is_some();
    let kind = match kind {
        Some(RenderKindArg::ChordDiagram) => RenderKind::ChordDiagram,
        Some(RenderKindArg::CurvePlot) => RenderKind::CurvePlot,
        None if is_poly => RenderKind::CurvePlot,
        None => RenderKind::ChordDiagram,
    };
    let spec = RenderSpec { kind, size, grid, ..RenderSpec::default() };
    spec.validate().map_err(|e| Failure::new(2, e))?;
    let svg = match kind {
        RenderKind::ChordDiagram => {
            if value.get("even").is_some() {
                let b: Basketball = serde_json::from_value(value).map_err(|e| Failure::new(2, e.to_string()))?;
                render::basketball_diagram(&b, &spec)
            } else if value.get("pairs").is_some() {
                let m: Matching = serde_json::from_value(value).map_err(|e| Failure::new(2, e.to_string()))?;
                render::matching_diagram(&m, &spec)
            } else {
                return Err(Failure::new(2, "chord diagrams need a matching or basketball"));
            }
        }
        RenderKind::CurvePlot => {
            if !is_poly {
                return Err(Failure::new(2, "curve plots need a polynomial"));
            }
            let f: MonicPolynomial = serde_json::from_value(value).map_err(|e| Failure::new(2, e.to_string()))?;
            match (alpha, beta) {
                (Some(a), Some(b)) => render::basketball_plot(&f, angle(a)?, angle(b)?, &spec),
                (None, None) => {
                    let list = thetas.unwrap_or("0,pi/12,pi/6,pi/2");
                    let ts = list.split(',').map(angle).collect::<Result<Vec<_>, _>>()?;
                    render::curve_plot(&f, &ts, &spec)
                }
                _ => return Err(Failure::new(2, "--alpha and --beta go together")),
            }
        }
    };
    emit(Some(out), svg)
}

fn run(cli: Cli) -> Outcome {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::new(2, e.to_string()))?;
    }
    let mut config = TraceConfig::default();
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    let ctx = Ctx {
        format: cli.format,
        limit: if cli.force { OrderLimit::unlimited() } else { OrderLimit::from_env() },
        config,
    };
    match &cli.command {
        Command::Count { order, kind } => cmd_count(&ctx, *order, *kind),
        Command::Enumerate { order, kind, out } => cmd_enumerate(&ctx, *order, *kind, out.as_ref()),
        Command::Analyze { poly, alpha, beta, out } => cmd_analyze(&ctx, poly, alpha, beta, out.as_ref()),
        Command::Realize { basketball, alpha, beta, out } => {
            cmd_realize(&ctx, basketball, alpha, beta, out.as_ref())
        }
        Command::Necklace { poly, out } => cmd_necklace(&ctx, poly, out.as_ref()),
        Command::VerifyNecklaces { order } => cmd_verify_necklaces(&ctx, *order),
        Command::Render { input, out, kind, thetas, alpha, beta, size, grid } => cmd_render(
            input,
            out,
            *kind,
            thetas.as_deref(),
            alpha.as_deref(),
            beta.as_deref(),
            *size,
            *grid,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("harmonica: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
