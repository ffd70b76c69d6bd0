//! `ncl`: enumerations, transforms, bijections, drawings and verification
//! suites over non-crossing linked partitions.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncl_core::partitions::{self, NclPartition, RawPartition};
use ncl_core::rational;
use ncl_core::render;
use ncl_core::transforms::{
    self, CumulantSequence, MomentSequence, SeriesInput, SeriesJson, TCoeffSequence,
};
use ncl_core::trees::{self, BicolorPlanarTree, PlanarTree, TreeJson};
use ncl_core::verify::{self, Fault, Suite, VerifyConfig};
use ncl_core::{Error, Limits};

const EXIT_VERIFY: u8 = 1;
const EXIT_LIMIT: u8 = 2;
const EXIT_ZERO_MOMENT: u8 = 3;
const EXIT_DOMAIN: u8 = 4;
const EXIT_USAGE: u8 = 64;
const EXIT_INPUT: u8 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "ncl",
    version,
    about = "Exact combinatorics of non-crossing linked partitions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Override a size cap, e.g. `--limit ncl=7`. Repeatable.
    #[arg(long = "limit", global = true, value_name = "KIND=N")]
    limits: Vec<String>,
    /// Remove all size caps and allow `--limit` above the defaults.
    #[arg(long, global = true)]
    unsafe_limits: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnumKind {
    Nc,
    Ncl,
    Ncs,
    Ncls,
    Trees,
    Bicolor,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    M2k,
    K2m,
    M2t,
    T2m,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Bijection {
    Theta,
    ThetaInv,
    Lambda,
    LambdaInv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convolution {
    /// Product of two t-series.
    T,
    /// Both routes to t(XY) from two moment sequences.
    Verify,
    /// Cumulants of X+Y from two cumulant sequences.
    Additive,
    /// Cumulants of XY from two cumulant sequences.
    Multiplicative,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FaultArg {
    Kreweras,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every object of a kind and size, then a count line.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumKind,
        n: Option<usize>,
        #[arg(long = "n", conflicts_with = "n")]
        n_flag: Option<usize>,
    },
    /// Convert a sequence between moments, cumulants and t-coefficients.
    Transform {
        #[arg(value_enum)]
        direction: Direction,
        /// JSON inline, `@path`, or `-` for stdin (default).
        input: Option<String>,
    },
    /// Apply one of the partition/tree bijections.
    Biject {
        #[arg(value_enum)]
        direction: Bijection,
        /// Partition or tree JSON, `(1,2)(2,3)` text, `@path` or `-`.
        input: Option<String>,
    },
    /// Draw a partition or tree.
    Render {
        /// Partition or tree JSON, `(1,2)(2,3)` text, `@path` or `-`.
        input: Option<String>,
    },
    /// Run verification suites; exit 1 if any identity fails.
    Verify {
        /// A suite name or `all`.
        suite: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size of the random corpus.
        #[arg(long, default_value_t = 12)]
        corpus: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Convolutions of sequences.
    Convolve {
        #[arg(value_enum)]
        operation: Convolution,
        left: String,
        right: String,
        /// Truncation order for `verify` and `multiplicative`.
        #[arg(long)]
        order: Option<usize>,
    },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::LimitExceeded { .. }) => EXIT_LIMIT,
        Some(Error::ZeroFirstMoment | Error::ZeroT0) => EXIT_ZERO_MOMENT,
        Some(Error::NotConnected | Error::NotNclS { .. } | Error::LetterNotInDomain { .. }) => {
            EXIT_DOMAIN
        }
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, code)) => match emit(&cli, &out) {
            Ok(()) => ExitCode::from(code),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(EXIT_INPUT)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn emit(cli: &Cli, out: &str) -> anyhow::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, out).with_context(|| format!("writing {path}")),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(out.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn limits(cli: &Cli) -> anyhow::Result<Limits> {
    if cli.unsafe_limits {
        let mut l = Limits::unlimited();
        for spec in &cli.limits {
            for (k, n) in Limits::parse_assignments(spec)? {
                l.set(k, n);
            }
        }
        return Ok(l);
    }
    let mut l = Limits::default();
    let mut assignments = Vec::new();
    if let Ok(env) = std::env::var("NCL_LIMITS") {
        assignments.extend(Limits::parse_assignments(&env).context("in NCL_LIMITS")?);
    }
    for spec in &cli.limits {
        assignments.extend(Limits::parse_assignments(spec)?);
    }
    for (k, n) in assignments {
        if n > k.default_cap() {
            return Err(Error::LimitExceeded {
                kind: k,
                n,
                cap: k.default_cap(),
            })
            .context("raising a cap above its default needs --unsafe-limits");
        }
        l.set(k, n);
    }
    Ok(l)
}

fn read_input(arg: Option<&str>) -> anyhow::Result<String> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        Some(a) => match a.strip_prefix('@') {
            Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
            None => Ok(a.to_string()),
        },
    }
}

/// `(1,2)(2,3)(4)`; the ground set is `{1..max}`.
fn parse_partition_text(s: &str) -> anyhow::Result<RawPartition> {
    let mut blocks = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Parse(format!("bad partition text {s:?}")))?;
        let block = inner
            .0
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad element {x:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        blocks.push(block);
        rest = inner.1.trim_start();
    }
    let n = blocks.iter().flatten().copied().max().unwrap_or(0);
    Ok(RawPartition { n, blocks })
}

enum Object {
    Partition(NclPartition),
    Tree(PlanarTree),
    Bicolor(BicolorPlanarTree),
}

fn parse_object(text: &str) -> anyhow::Result<Object> {
    let text = text.trim();
    if text.starts_with('(') {
        let raw = parse_partition_text(text)?;
        return Ok(Object::Partition(partitions::validate_ncl(
            raw.n,
            &raw.blocks,
        )?));
    }
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if v.get("blocks").is_some() {
        let raw: RawPartition =
            serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(Object::Partition(partitions::validate_ncl(
            raw.n,
            &raw.blocks,
        )?));
    }
    let tree: TreeJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    if tree.has_colors() {
        Ok(Object::Bicolor(
            serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?,
        ))
    } else {
        Ok(Object::Tree(
            serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?,
        ))
    }
}

fn line<T: serde::Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(v)? + "\n")
}

fn show(obj: &Object, format: Format) -> anyhow::Result<String> {
    match (obj, format) {
        (Object::Partition(p), Format::Json) => line(p),
        (Object::Tree(t), Format::Json) => line(t),
        (Object::Bicolor(t), Format::Json) => line(t),
        (Object::Partition(p), Format::Text) => Ok(format!("{p}\n")),
        (Object::Tree(t), Format::Text) => Ok(render::render_tree(t)),
        (Object::Bicolor(t), Format::Text) => Ok(render::render_bicolor(t)),
    }
}

fn run(cli: &Cli) -> anyhow::Result<(String, u8)> {
    let limits = limits(cli)?;
    let fmt = cli.format;
    match &cli.command {
        Command::Enumerate { kind, n, n_flag } => {
            let n = n
                .or(*n_flag)
                .ok_or_else(|| anyhow!("missing size: give N or --n N"))?;
            let objects: Vec<Object> = match kind {
                EnumKind::Nc => partitions::enumerate_nc_with(n, &limits)?
                    .iter()
                    .map(|p| Object::Partition(p.to_ncl()))
                    .collect(),
                EnumKind::Ncl => partitions::enumerate_ncl_with(n, &limits)?
                    .into_iter()
                    .map(Object::Partition)
                    .collect(),
                EnumKind::Ncs => partitions::enumerate_ncs_with(n, &limits)?
                    .iter()
                    .map(|p| Object::Partition(p.to_ncl()))
                    .collect(),
                EnumKind::Ncls => partitions::enumerate_ncls_with(n, &limits)?
                    .into_iter()
                    .map(Object::Partition)
                    .collect(),
                EnumKind::Trees => trees::enumerate_planar_trees_with(n, &limits)?
                    .into_iter()
                    .map(Object::Tree)
                    .collect(),
                EnumKind::Bicolor => trees::enumerate_bicolor_with(n, &limits)?
                    .into_iter()
                    .map(Object::Bicolor)
                    .collect(),
            };
            let mut out = String::new();
            for o in &objects {
                out += &show(o, fmt)?;
                if fmt == Format::Text && !matches!(o, Object::Partition(_)) {
                    out.push('\n');
                }
            }
            match fmt {
                Format::Json => out += &line(&json!({"count": objects.len()}))?,
                Format::Text => out += &format!("count {}\n", objects.len()),
            }
            Ok((out, 0))
        }
        Command::Transform { direction, input } => {
            let text = read_input(input.as_deref())?;
            let parsed: SeriesInput =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let bare = parsed.is_bare();
            let values = parsed.validated()?;
            let result = match direction {
                Direction::M2k => {
                    transforms::moments_to_cumulants(&MomentSequence::new(values)).into_values()
                }
                Direction::K2m => {
                    transforms::cumulants_to_moments(&CumulantSequence::new(values)).into_values()
                }
                Direction::M2t => {
                    transforms::moments_to_tcoeffs(&MomentSequence::new(values))?.into_values()
                }
                Direction::T2m => {
                    transforms::tcoeffs_to_moments(&TCoeffSequence::new(values))?.into_values()
                }
            };
            Ok((series_out(result, bare, fmt)?, 0))
        }
        Command::Biject { direction, input } => {
            let obj = parse_object(&read_input(input.as_deref())?)?;
            let image = match (direction, obj) {
                (Bijection::Theta, Object::Partition(p)) => Object::Tree(trees::theta(&p)?),
                (Bijection::ThetaInv, Object::Tree(t)) => Object::Partition(trees::theta_inv(&t)),
                (Bijection::Lambda, Object::Partition(p)) => Object::Bicolor(trees::lambda(&p)?),
                (Bijection::LambdaInv, Object::Bicolor(t)) => {
                    Object::Partition(trees::lambda_inv(&t))
                }
                (Bijection::LambdaInv, Object::Tree(t)) if t.size() == 1 => {
                    Object::Partition(trees::lambda_inv(&BicolorPlanarTree::leaf()))
                }
                (d, _) => bail!(Error::Parse(format!("wrong input type for {d:?}"))),
            };
            Ok((show(&image, fmt)?, 0))
        }
        Command::Render { input } => {
            let out = match parse_object(&read_input(input.as_deref())?)? {
                Object::Partition(p) => render::render_ncl(&p),
                Object::Tree(t) => render::render_tree(&t),
                Object::Bicolor(t) => render::render_bicolor(&t),
            };
            Ok((out, 0))
        }
        Command::Verify {
            suite,
            order,
            seed,
            corpus,
            inject_fault,
        } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>()?]
            };
            let cfg = VerifyConfig {
                order: *order,
                seed: *seed,
                corpus: *corpus,
                limits,
                fault: inject_fault.map(|FaultArg::Kreweras| Fault::Kreweras),
            };
            let report = verify::run(&suites, &cfg)?;
            let code = if report.passed { 0 } else { EXIT_VERIFY };
            let out = match fmt {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Text => {
                    let mut s = String::new();
                    for e in &report.entries {
                        s += &format!(
                            "{} {} {} {}\n",
                            if e.pass { "pass" } else { "FAIL" },
                            e.suite,
                            e.name,
                            e.parameters
                        );
                        if let Some(w) = &e.witness {
                            s += &format!("  witness {w}\n");
                        }
                    }
                    s += &format!(
                        "{} entries, {} failed\n",
                        report.entries.len(),
                        report.failures
                    );
                    s
                }
            };
            Ok((out, code))
        }
        Command::Convolve {
            operation,
            left,
            right,
            order,
        } => {
            let parse = |arg: &str| -> anyhow::Result<(Vec<rational::Rational>, bool)> {
                let parsed: SeriesInput = serde_json::from_str(&read_input(Some(arg))?)
                    .map_err(|e| Error::Parse(e.to_string()))?;
                let bare = parsed.is_bare();
                Ok((parsed.validated()?, bare))
            };
            let ((a, bare), (b, _)) = (parse(left)?, parse(right)?);
            match operation {
                Convolution::T => {
                    let r =
                        transforms::t_convolve(&TCoeffSequence::new(a), &TCoeffSequence::new(b))?;
                    Ok((series_out(r.into_values(), bare, fmt)?, 0))
                }
                Convolution::Additive => {
                    let r = transforms::free_additive(
                        &CumulantSequence::new(a),
                        &CumulantSequence::new(b),
                    )?;
                    Ok((series_out(r.into_values(), bare, fmt)?, 0))
                }
                Convolution::Multiplicative => {
                    let n = order.unwrap_or(a.len().min(b.len()));
                    let (x, y) = (CumulantSequence::new(a), CumulantSequence::new(b));
                    let r = (1..=n)
                        .map(|k| transforms::free_multiplicative_with(&x, &y, k, &limits))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok((series_out(r, bare, fmt)?, 0))
                }
                Convolution::Verify => {
                    let n = order.unwrap_or(a.len().min(b.len()));
                    let report = transforms::verify_t_multiplicativity_with(
                        &MomentSequence::new(a),
                        &MomentSequence::new(b),
                        n,
                        &limits,
                    )?;
                    let code = if report.passed { 0 } else { EXIT_VERIFY };
                    let out = match fmt {
                        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                        Format::Text => format!(
                            "t(X)*t(Y) = {}\nvia cumulants = {}\n{}\n",
                            text_series(report.via_convolution.values()),
                            text_series(report.via_cumulants.values()),
                            if report.passed { "pass" } else { "FAIL" }
                        ),
                    };
                    Ok((out, code))
                }
            }
        }
    }
}

fn text_series(v: &[rational::Rational]) -> String {
    v.iter().map(rational::format).collect::<Vec<_>>().join(" ")
}

fn series_out(values: Vec<rational::Rational>, bare: bool, fmt: Format) -> anyhow::Result<String> {
    Ok(match (fmt, bare) {
        (Format::Text, _) => text_series(&values) + "\n",
        (Format::Json, true) => line(&values.iter().map(rational::format).collect::<Vec<_>>())?,
        (Format::Json, false) => line(&SeriesJson::new(values))?,
    })
}
