//! Command-line parsing and dispatch.

use crate::fixtures::{stale_fixtures, write_fixtures};
use crate::render::{render_svg, RenderError, RenderOptions};
use clap::{Args, Parser, Subcommand};
use curvecross::counting::Analyzer;
use curvecross::immersion::{minimal_immersion, Immersion};
use curvecross::oracle::{brute_force_intersection, OracleBudget};
use curvecross::surface::{parse_surface, CombinatorialSurface, QuadSystem, Topology};
use curvecross::unzip::is_simple;
use curvecross::walk::{canonicalize, freely_homotopic, primitive_root, Walk};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Domain(#[from] curvecross::Error),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    /// Process exit status: 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(e) if !e.use_stderr() => 0,
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "curvecross", version, about = "Intersection numbers and simplicity of curves on surfaces")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OneCurve {
    /// Surface file.
    #[arg(short = 's', long = "surface")]
    pub surface: PathBuf,
    /// Curve as signed edge ids or `@<vertex>`, or a file holding one.
    #[arg(short = 'c', long = "curve", allow_hyphen_values = true)]
    pub curve: String,
}

#[derive(Debug, Args)]
pub struct TwoCurves {
    #[arg(short = 's', long = "surface")]
    pub surface: PathBuf,
    #[arg(short = 'c', long = "curve", allow_hyphen_values = true)]
    pub curve: String,
    /// Second curve; `-c2` is accepted as well.
    #[arg(long = "c2", allow_hyphen_values = true)]
    pub curve2: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form on the system of quads.
    Canonicalize(OneCurve),
    /// Primitive root and exponent of the canonical form.
    Root(OneCurve),
    /// Whether two curves are freely homotopic.
    Homotopic(TwoCurves),
    /// Geometric intersection number of two curves.
    Intersect {
        #[command(flatten)]
        curves: TwoCurves,
        /// Also run the brute-force oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Geometric self-intersection number.
    Selfintersect {
        #[command(flatten)]
        curve: OneCurve,
        #[arg(long)]
        oracle: bool,
    },
    /// Immersion with the least number of crossings.
    Immersion(OneCurve),
    /// Whether the curve is homotopic to a simple curve.
    IsSimple(OneCurve),
    /// Embedding of a simple curve; fails on curves that are not simple.
    Embed(OneCurve),
    /// SVG drawing of a minimal immersion, or of two curves.
    Render {
        #[arg(short = 's', long = "surface")]
        surface: PathBuf,
        #[arg(short = 'c', long = "curve", allow_hyphen_values = true)]
        curve: String,
        #[arg(long = "c2", allow_hyphen_values = true)]
        curve2: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 600.0)]
        scale: f64,
    },
    /// Brute-force intersection number, bounded by CURVECROSS_ORACLE_BUDGET.
    Oracle {
        #[arg(short = 's', long = "surface")]
        surface: PathBuf,
        #[arg(short = 'c', long = "curve", allow_hyphen_values = true)]
        curve: String,
        #[arg(long = "c2", allow_hyphen_values = true)]
        curve2: Option<String>,
    },
    /// Writes the bundled fixtures, or checks them with `--check`.
    Fixtures {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        check: bool,
    },
}

/// Rewrites the `-c2` spelling to `--c2`, which a single-dash flag parser
/// would otherwise read as `-c 2`.
pub fn normalize_args<I: IntoIterator<Item = String>>(args: I) -> Vec<String> {
    args.into_iter()
        .map(|a| match a.as_str() {
            "-c2" => "--c2".to_string(),
            _ => a.strip_prefix("-c2=").map(|v| format!("--c2={v}")).unwrap_or(a),
        })
        .collect()
}

/// Parses `args` (program name first) and runs the command, returning what
/// goes to standard output.
pub fn run<I: IntoIterator<Item = String>>(args: I) -> Result<String, CliError> {
    let cli = Cli::try_parse_from(normalize_args(args))?;
    execute(&cli)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_surface(path: &Path) -> Result<CombinatorialSurface, CliError> {
    Ok(parse_surface(&read(path)?)?)
}

fn load_curve(surface: &CombinatorialSurface, arg: &str) -> Result<Walk, CliError> {
    let path = Path::new(arg);
    let text = if path.is_file() { read(path)? } else { arg.to_string() };
    Ok(Walk::parse(surface, &text)?)
}

fn quads(analyzer: &Analyzer) -> Result<&QuadSystem, CliError> {
    analyzer.quads().ok_or_else(|| {
        curvecross::Error::UnsupportedSurface(format!(
            "this command needs a surface of negative Euler characteristic, got {:?}",
            analyzer.topology()
        ))
        .into()
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit(json: bool, value: Value, text: String) -> String {
    if json {
        format!("{value}\n")
    } else {
        text
    }
}

fn oracle_number(analyzer: &Analyzer, c: &Walk, d: Option<&Walk>) -> Result<u64, CliError> {
    let q = quads(analyzer)?;
    let budget = OracleBudget::from_env()?;
    let c = analyzer.transport(c)?;
    let d = d.map(|d| analyzer.transport(d)).transpose()?;
    Ok(brute_force_intersection(q, &c, d.as_ref(), &budget)?)
}

fn homotopic(analyzer: &Analyzer, c: &Walk, d: &Walk) -> Result<bool, CliError> {
    Ok(match analyzer.topology() {
        Topology::Sphere | Topology::Disk => true,
        Topology::Annulus => analyzer.winding_number(c)? == analyzer.winding_number(d)?,
        Topology::Torus => analyzer.torus_class(c)? == analyzer.torus_class(d)?,
        Topology::Hyperbolic => freely_homotopic(quads(analyzer)?, &analyzer.transport(c)?, &analyzer.transport(d)?)?,
    })
}

pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Canonicalize(a) => {
            let s = load_surface(&a.surface)?;
            let analyzer = Analyzer::new(&s)?;
            let c = load_curve(&s, &a.curve)?;
            let q = quads(&analyzer)?;
            let canonical = canonicalize(q, &analyzer.transport(&c)?)?;
            let text = canonical.format(q.surface());
            Ok(emit(json, json!({ "canonical": text, "length": canonical.len() }), format!("{text}\n")))
        }
        Command::Root(a) => {
            let s = load_surface(&a.surface)?;
            let analyzer = Analyzer::new(&s)?;
            let c = load_curve(&s, &a.curve)?;
            let q = quads(&analyzer)?;
            let canonical = canonicalize(q, &analyzer.transport(&c)?)?;
            let (root, power) = primitive_root(q, &canonical)?;
            let text = root.format(q.surface());
            Ok(emit(json, json!({ "root": text, "power": power }), format!("root: {text}\npower: {power}\n")))
        }
        Command::Homotopic(a) => {
            let s = load_surface(&a.surface)?;
            let analyzer = Analyzer::new(&s)?;
            let (c, d) = (load_curve(&s, &a.curve)?, load_curve(&s, &a.curve2)?);
            let h = homotopic(&analyzer, &c, &d)?;
            Ok(emit(json, json!({ "homotopic": h }), format!("{}\n", yes_no(h))))
        }
        Command::Intersect { curves: a, oracle } => {
            let s = load_surface(&a.surface)?;
            let analyzer = Analyzer::new(&s)?;
            let (c, d) = (load_curve(&s, &a.curve)?, load_curve(&s, &a.curve2)?);
            let n = analyzer.intersection(&c, &d)?;
            numbers(json, n, if *oracle { Some(oracle_number(&analyzer, &c, Some(&d))?) } else { None })
        }
        Command::Selfintersect { curve: a, oracle } => {
            let s = load_surface(&a.surface)?;
            let analyzer = Analyzer::new(&s)?;
            let c = load_curve(&s, &a.curve)?;
            let n = analyzer.self_intersection(&c)?;
            numbers(json, n, if *oracle { Some(oracle_number(&analyzer, &c, None)?) } else { None })
        }
        Command::Immersion(a) => {
            let s = load_surface(&a.surface)?;
            let analyzer = Analyzer::new(&s)?;
            let c = load_curve(&s, &a.curve)?;
            let m = minimal_immersion(&s, &c)?;
            let qs = quads(&analyzer)?.surface();
            let curve = m.walk.format(qs);
            let body = m.immersion.format(qs);
            Ok(emit(
                json,
                json!({ "crossings": m.crossings, "curve": curve, "immersion": body, "swaps": m.swap_trace.len() }),
                format!("crossings: {}\ncurve: {curve}\n{body}", m.crossings),
            ))
        }
        Command::IsSimple(a) | Command::Embed(a) => {
            let s = load_surface(&a.surface)?;
            let analyzer = Analyzer::new(&s)?;
            let c = load_curve(&s, &a.curve)?;
            let r = is_simple(&s, &c)?;
            if matches!(cli.command, Command::Embed(_)) && !r.simple {
                return Err(CliError::Failed("curve is not homotopic to a simple curve".into()));
            }
            let on = analyzer.quads().map(|q| q.surface()).unwrap_or(&s);
            let body = r.embedding.as_ref().map(|e| e.format(on)).unwrap_or_default();
            Ok(emit(
                json,
                json!({
                    "simple": r.simple,
                    "curve": r.curve.format(on),
                    "embedding": r.embedding.as_ref().map(|e| e.format(on)),
                }),
                format!("simple: {}\n{body}", yes_no(r.simple)),
            ))
        }
        Command::Render { surface, curve, curve2, out, seed, scale } => {
            let s = load_surface(surface)?;
            let analyzer = Analyzer::new(&s)?;
            let qs = quads(&analyzer)?.surface();
            let c = load_curve(&s, curve)?;
            let mut walks = vec![minimal_immersion(&s, &c)?];
            if let Some(d) = curve2 {
                walks.push(minimal_immersion(&s, &load_curve(&s, d)?)?);
            }
            let imm = combine(qs, &walks.iter().map(|m| &m.immersion).collect::<Vec<_>>())?;
            if *scale <= 0.0 || !scale.is_finite() {
                return Err(CliError::Failed("--scale must be positive".into()));
            }
            let svg = render_svg(qs, &imm, &RenderOptions { seed: *seed, scale: *scale })?;
            let crossings = imm.crossings(qs).len();
            match out {
                Some(path) => {
                    std::fs::write(path, &svg).map_err(|source| CliError::Io { path: path.clone(), source })?;
                    Ok(emit(
                        json,
                        json!({ "out": path.display().to_string(), "crossings": crossings }),
                        format!("wrote {} ({crossings} crossings)\n", path.display()),
                    ))
                }
                None => Ok(svg),
            }
        }
        Command::Oracle { surface, curve, curve2 } => {
            let s = load_surface(surface)?;
            let analyzer = Analyzer::new(&s)?;
            let c = load_curve(&s, curve)?;
            let d = curve2.as_deref().map(|d| load_curve(&s, d)).transpose()?;
            let n = oracle_number(&analyzer, &c, d.as_ref())?;
            Ok(emit(json, json!({ "oracle": n }), format!("{n}\n")))
        }
        Command::Fixtures { dir, check } => {
            if *check {
                let stale = stale_fixtures(dir);
                if !stale.is_empty() {
                    return Err(CliError::Failed(format!("stale fixtures: {}", stale.join(", "))));
                }
                Ok(emit(json, json!({ "stale": [] }), "fixtures up to date\n".into()))
            } else {
                write_fixtures(dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
                Ok(emit(
                    json,
                    json!({ "written": dir.display().to_string() }),
                    format!("wrote fixtures to {}\n", dir.display()),
                ))
            }
        }
    }
}

fn numbers(json: bool, n: u64, oracle: Option<u64>) -> Result<String, CliError> {
    Ok(match oracle {
        None => emit(json, json!({ "intersection": n }), format!("{n}\n")),
        Some(o) => emit(json, json!({ "intersection": n, "oracle": o }), format!("counting: {n}\noracle: {o}\n")),
    })
}

/// Places immersions of single curves side by side in one immersion, the
/// strands of later curves to the right along every even arc.
pub fn combine(surface: &CombinatorialSurface, parts: &[&Immersion]) -> Result<Immersion, CliError> {
    let curves: Vec<Walk> = parts.iter().map(|m| m.curve(0).clone()).collect();
    let mut orders = vec![Vec::new(); surface.edge_count()];
    for (k, m) in parts.iter().enumerate() {
        for (e, order) in m.orders().iter().enumerate() {
            orders[e].extend(order.iter().map(|o| curvecross::immersion::Occurrence { curve: k, ..*o }));
        }
    }
    Ok(Immersion::from_orders(surface, curves, orders)?)
}
