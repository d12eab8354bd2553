use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use skewlab::classifier::{classify_with, sporadic_pairs, verify_pair, ClassifyOptions};
use skewlab::invariants::invariant_report;
use skewlab::ops::{
    amalgamate, amalgamated_compose, border_decomposition, build_from_staircase, compose_alpha_d, compose_d_beta,
    detect_staircase, join, JoinMode, Nesting, Side, StaircasePresentation,
};
use skewlab::symfunc::{hamel_goulden, jacobi_trudi, pictures, schur_expand_lr};
use skewlab::{Composition, SkewError, SkewShape};

const DEFAULT_MAX_CELLS: usize = 12;

#[derive(Parser)]
#[command(name = "skewlab", version, about = "Skew Schur functions and skew-equivalence of skew diagrams")]
struct Cli {
    /// Input format of diagram arguments.
    #[arg(long = "in", value_enum, default_value_t = InFormat::Compact, global = true)]
    input: InFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InFormat {
    Compact,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Lr,
    Jt,
    Hg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeFormat {
    Ascii,
    Compact,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Se,
    Nw,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Se => Side::Se,
            SideArg::Nw => Side::Nw,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Concat,
    Nearcat,
    Compose,
    Amalgamate,
    Staircase,
    Detect,
}

#[derive(Subcommand)]
enum Command {
    /// Expand s_D in Schur functions (lr, hg) or complete homogeneous functions (jt).
    Expand {
        #[arg(long)]
        a: String,
        #[arg(long, value_enum, default_value_t = Algo::Lr)]
        algo: Algo,
        /// Border used for the Hamel-Goulden decomposition.
        #[arg(long, value_enum, default_value_t = SideArg::Se)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
        /// Also list the pictures behind the expansion (lr only).
        #[arg(long)]
        pictures: bool,
    },
    /// Decide whether two diagrams are skew-equivalent.
    Equal {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Frobenius rank and overlap invariants.
    Invariants {
        #[arg(long)]
        a: String,
        /// Include column overlaps and rectangle counts.
        #[arg(long)]
        all: bool,
    },
    /// Diagram constructions.
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// Ribbon α, as comma-separated parts read bottom to top.
        #[arg(long)]
        alpha: Option<String>,
        /// Ribbon β for D∘β.
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        omega: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Nesting word over `.()|`; defaults to all dots.
        #[arg(long)]
        nesting: Option<String>,
        #[arg(long, value_enum, default_value_t = SideArg::Se)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = ShapeFormat::Ascii)]
        format: ShapeFormat,
    },
    /// Classify all connected diagrams with n cells.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the bundled sporadic equivalences.
    Sporadics,
}

enum Failure {
    Domain(SkewError),
    Usage(String),
}

impl From<SkewError> for Failure {
    fn from(e: SkewError) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_shape(text: &str, format: InFormat) -> Result<SkewShape, Failure> {
    let text = match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?,
        None => text.to_string(),
    };
    Ok(match format {
        InFormat::Compact => SkewShape::from_compact(&text)?,
        InFormat::Ascii => SkewShape::from_ascii(&text.replace(';', "\n"))?,
    })
}

fn read_composition(text: &str) -> Result<Composition, Failure> {
    let parts = text
        .trim()
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| SkewError::Parse(format!("bad part {p:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Composition::new(parts)?)
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    value.as_deref().ok_or_else(|| usage(format!("--{flag} is required")))
}

fn render(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

fn show_shape(d: &SkewShape, format: ShapeFormat) -> String {
    match format {
        ShapeFormat::Ascii => d.to_ascii().trim_end().to_string(),
        ShapeFormat::Compact => d.to_compact(),
    }
}

fn max_cells() -> usize {
    std::env::var("SKEWLAB_MAX_CELLS").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_CELLS)
}

fn expand(d: &SkewShape, algo: Algo, side: SideArg, out: OutFormat, with_pictures: bool) -> Outcome {
    let (value, text) = match algo {
        Algo::Lr => {
            let s = schur_expand_lr(d);
            (serde_json::to_value(&s).unwrap(), s.to_string())
        }
        Algo::Hg => {
            let pi = border_decomposition(d, side.into())?;
            let s = hamel_goulden(d, &pi)?;
            (serde_json::to_value(&s).unwrap(), s.to_string())
        }
        Algo::Jt => {
            let h = jacobi_trudi(d);
            (serde_json::to_value(&h).unwrap(), h.to_string())
        }
    };
    if !with_pictures {
        return Ok(match out {
            OutFormat::Json => render(&value),
            OutFormat::Text => text,
        });
    }
    if !matches!(algo, Algo::Lr) {
        return Err(usage("--pictures needs --algo lr"));
    }
    let pics = pictures(d);
    Ok(match out {
        OutFormat::Json => {
            let rows: Vec<&Vec<Vec<usize>>> = pics.iter().map(|p| &p.rows).collect();
            render(&json!({ "expansion": value, "pictures": rows }))
        }
        OutFormat::Text => {
            let mut s = format!("{text}\n{} pictures\n", pics.len());
            for p in &pics {
                for row in &p.rows {
                    let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    s.push_str(&cells.join(" "));
                    s.push('\n');
                }
                s.push('\n');
            }
            s.trim_end().to_string()
        }
    })
}

fn op(cli_in: InFormat, cmd: &Command) -> Outcome {
    let Command::Op { kind, a, b, alpha, beta, omega, m, k, nesting, side, format } = cmd else { unreachable!() };
    let shape = |v: &Option<String>, flag: &str| -> Result<SkewShape, Failure> { read_shape(required(v, flag)?, cli_in) };
    let result = match kind {
        OpKind::Concat => join(&shape(a, "a")?, &shape(b, "b")?, JoinMode::Concat),
        OpKind::Nearcat => join(&shape(a, "a")?, &shape(b, "b")?, JoinMode::NearConcat),
        OpKind::Compose => match (alpha, beta) {
            (Some(al), None) => compose_alpha_d(&read_composition(al)?, &shape(a, "a")?),
            (None, Some(be)) => compose_d_beta(&shape(a, "a")?, &read_composition(be)?),
            _ => return Err(usage("compose needs exactly one of --alpha (α∘D) or --beta (D∘β)")),
        },
        OpKind::Amalgamate => {
            let d = shape(a, "a")?;
            let w = read_composition(required(omega, "omega")?)?;
            match alpha {
                Some(al) => amalgamated_compose(&read_composition(al)?, &d, &w)?,
                None => amalgamate(&d, &b.as_ref().map(|_| shape(b, "b")).transpose()?.unwrap_or_else(|| d.clone()), &w)?,
            }
        }
        OpKind::Staircase => {
            let al = read_composition(required(alpha, "alpha")?)?;
            let m = m.ok_or_else(|| usage("--m is required"))?;
            let k = k.ok_or_else(|| usage("--k is required"))?;
            let nesting: Nesting = match nesting {
                Some(text) => text.parse()?,
                None => Nesting::dots(k.saturating_sub(1)),
            };
            build_from_staircase(&StaircasePresentation { alpha: al, m, k, nesting, side: (*side).into() })?
        }
        OpKind::Detect => {
            let d = shape(a, "a")?;
            return Ok(match detect_staircase(&d, (*side).into()) {
                Some(p) => render(&json!({
                    "alpha": p.alpha.parts(),
                    "m": p.m,
                    "k": p.k,
                    "nesting": p.nesting.to_string(),
                    "side": match p.side { Side::Se => "se", Side::Nw => "nw" },
                })),
                None => "null".to_string(),
            });
        }
    };
    Ok(show_shape(&result, *format))
}

fn run(cli: Cli) -> Outcome {
    let fmt = cli.input;
    match &cli.command {
        Command::Expand { a, algo, side, out, pictures } => expand(&read_shape(a, fmt)?, *algo, *side, *out, *pictures),
        Command::Equal { a, b } => {
            let (a, b) = (read_shape(a, fmt)?, read_shape(b, fmt)?);
            Ok(format!("equivalent: {}", schur_expand_lr(&a) == schur_expand_lr(&b)))
        }
        Command::Invariants { a, all } => {
            let r = invariant_report(&read_shape(a, fmt)?);
            let v = if *all {
                serde_json::to_value(&r).unwrap()
            } else {
                json!({ "rank": r.rank, "rho": r.rho })
            };
            Ok(render(&v))
        }
        cmd @ Command::Op { .. } => op(fmt, cmd),
        Command::Classify { n, jobs, out } => {
            let limit = max_cells();
            if *n == 0 || *n > limit {
                return Err(usage(format!("--n must be between 1 and {limit} (SKEWLAB_MAX_CELLS)")));
            }
            let report = classify_with(*n, &ClassifyOptions { jobs: *jobs, ..Default::default() });
            let text = render(&serde_json::to_value(&report).unwrap());
            match out {
                Some(path) => {
                    fs::write(path, text + "\n").map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                    Ok(format!("{} classes of {} diagrams written to {}", report.classes.len(), report.total_diagrams(), path.display()))
                }
                None => Ok(text),
            }
        }
        Command::Sporadics => {
            let results: Vec<_> = sporadic_pairs().iter().map(verify_pair).collect();
            if let Some(bad) = results.iter().find(|r| !r.equal) {
                return Err(SkewError::FixtureMismatch(format!("pair {} is not skew-equivalent", bad.pair_id)).into());
            }
            Ok(render(&serde_json::to_value(&results).unwrap()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            // A closed pipe downstream is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            println!("{}", json!({ "error": e.name(), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
