//! The `a2skein` command line.
//!
//! Every subcommand builds a serializable report, printed as text or, with
//! `--json`, as one line of JSON. Exit status is 0 on success, 1 for bad
//! input and 2 when the request falls outside the regime where the level-k
//! theory is determined.
//!
//! Setting `A2SKEIN_CACHE_DIR` stores clasp and web-evaluation reports there,
//! keyed by the SHA-256 of a canonical description of the request.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::clasp::{
    build_clasp, check_clasp, clasp_trace, ClaspCheck, ClaspLabel, DEFAULT_MAX_SIZE,
};
use crate::cyclotomic::{Context, Scalar, DEFAULT_TOLERANCE};
use crate::error::Error;
use crate::fusion::{
    ell_parameter, ell_reduce, enumerate_six_tuples, p_values, triangle_dim, triangle_dim_at_level,
    SixTuple, TripleLabel,
};
use crate::repdata::{
    diagonal_power_trace, enumerate_labellings, genus2_twist_matrix, sweep_words,
    trace_distinguish, ModularDatum, SweepReport, Theory, TraceReport,
};
use crate::surface::{detection_certificate, state_space_dim, Certificate, CurveWord, SpineGraph};
use crate::web::{
    canonicalize, evaluate_closed_with, reduce_with, ReductionOrder, Web, WebJson, WebSum,
};

pub const CACHE_ENV: &str = "A2SKEIN_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "a2skein",
    version,
    about = "SU(3) skein theory and TQFT computations"
)]
pub struct Cli {
    /// Work at level k (A = e^{2πi/6(k+3)}) instead of over Q(A).
    #[arg(long, global = true)]
    pub level: Option<u32>,

    /// Tolerance for numeric comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,

    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The quantum integer [n].
    Qint {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Evaluate a closed web, or reduce an open one to non-elliptic webs.
    EvalWeb(EvalWebArgs),
    /// Build the (m,n) clasp and check its defining properties.
    Clasp(ClaspArgs),
    /// Dimension of the triangle space of three clasp labels.
    FusionDim {
        /// `"(m1,n1),(m2,n2),(m3,n3)"`.
        #[arg(long)]
        labels: String,
        /// List the admissible 6-tuples of the balanced part.
        #[arg(long)]
        tuples: bool,
    },
    /// Compare |Tr| of a word in s, t under Ising and SU(2)_2.
    Distinguish(DistinguishArgs),
    /// Twist about the first loop of the genus-2 dumbbell spine.
    Genus2 {
        #[arg(long, default_value = "ising")]
        theory: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
    },
    /// Weights, complexity, level and leading labelling of a curve.
    Certificate {
        /// Spine JSON file, or one of `torus`, `dumbbell`, `theta`.
        #[arg(long)]
        spine: String,
        /// Curve JSON file.
        #[arg(long)]
        curve: PathBuf,
    },
    /// Dimension of the level-k state space of a handlebody.
    Dim {
        /// Spine JSON file, or one of `torus`, `dumbbell`, `theta`.
        #[arg(long)]
        spine: String,
    },
}

#[derive(Debug, Args)]
pub struct EvalWebArgs {
    /// Web JSON file, `-` for standard input.
    #[arg(long)]
    pub web: PathBuf,
    /// Reduce in a seeded random order instead of the canonical one.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ClaspArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
    pub max_size: u32,
    /// Include the clasp's terms in the report.
    #[arg(long)]
    pub terms: bool,
}

#[derive(Debug, Args)]
pub struct DistinguishArgs {
    /// A word such as `"s^2 t^6"`.
    #[arg(long, required_unless_present = "sweep")]
    pub word: Option<String>,
    /// Check all words of at most this many blocks s^a t^b instead.
    #[arg(long)]
    pub sweep: Option<usize>,
    /// Exponent bound for the sweep.
    #[arg(long, default_value_t = 8)]
    pub bound: i64,
}

/// An exact scalar with its value at the root of unity, when there is one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarReport {
    pub exact: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub numeric: Option<[f64; 2]>,
}

impl ScalarReport {
    fn new(s: &Scalar, ctx: &Context) -> Self {
        let numeric = ctx.level_k().map(|_| {
            let z = ctx.to_complex(s, None).expect("level scalars embed");
            [z.re, z.im]
        });
        Self {
            exact: s.to_string(),
            numeric,
        }
    }

    fn from_residue(r: &crate::cyclotomic::Residue) -> Self {
        let z = r.eval();
        Self {
            exact: r.to_string(),
            numeric: Some([z.re, z.im]),
        }
    }
}

fn mode_name(ctx: &Context) -> String {
    match ctx.level_k() {
        Some(k) => format!("level {k}"),
        None => "generic".into(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QintReport {
    pub n: i64,
    pub mode: String,
    pub value: ScalarReport,
    #[serde(rename = "isZero")]
    pub is_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermReport {
    pub coefficient: ScalarReport,
    pub web: WebJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub mode: String,
    /// The value of a closed web.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<ScalarReport>,
    /// The reduced form of an open web.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terms: Option<Vec<TermReport>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaspReport {
    pub label: ClaspLabel,
    pub mode: String,
    #[serde(rename = "termCount")]
    pub term_count: usize,
    pub check: ClaspCheck,
    pub trace: ScalarReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terms: Option<Vec<TermReport>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusionReport {
    pub labels: TripleLabel,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub level: Option<u32>,
    pub ell: Option<u32>,
    pub dim: u64,
    /// Admissible 6-tuples of the balanced part, when asked for.
    #[serde(rename = "sixTuples", skip_serializing_if = "Option::is_none", default)]
    pub six_tuples: Option<Vec<SixTuple>>,
    #[serde(rename = "pValues")]
    pub p_values: [i64; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Genus2Report {
    pub theory: Theory,
    pub power: i64,
    /// `(loop1, bridge, loop2)` labels in basis order.
    pub basis: Vec<Vec<usize>>,
    pub diagonal: Vec<ScalarReport>,
    #[serde(rename = "traceAbs")]
    pub trace_abs: f64,
    /// `|Tr(M^power)|` of the other theory.
    #[serde(rename = "otherTraceAbs")]
    pub other_trace_abs: f64,
    pub distinct: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimReport {
    pub level: u32,
    pub genus: i64,
    pub dim: u64,
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_spine(arg: &str) -> Result<SpineGraph, Error> {
    let path = Path::new(arg);
    if path.exists() {
        return SpineGraph::from_json(&read_input(path)?);
    }
    match arg {
        "torus" => Ok(SpineGraph::torus()),
        "dumbbell" => Ok(SpineGraph::dumbbell()),
        "theta" => Ok(SpineGraph::theta()),
        _ => Err(Error::InvalidInput(format!("no spine file {arg:?}"))),
    }
}

fn cached<T: Serialize + DeserializeOwned>(
    key: &str,
    compute: impl FnOnce() -> Result<T, Error>,
) -> Result<T, Error> {
    let Some(dir) = std::env::var_os(CACHE_ENV) else {
        return compute();
    };
    let dir = PathBuf::from(dir);
    let file = dir.join(format!(
        "{}.json",
        hex::encode(Sha256::digest(key.as_bytes()))
    ));
    if let Ok(text) = std::fs::read_to_string(&file) {
        if let Ok(v) = serde_json::from_str(&text) {
            return Ok(v);
        }
    }
    let v = compute()?;
    std::fs::create_dir_all(&dir)?;
    // write then rename so readers never see a partial file
    let tmp = file.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string(&v)?)?;
    std::fs::rename(&tmp, &file)?;
    Ok(v)
}

fn sum_terms(ws: &WebSum, ctx: &Context) -> Vec<TermReport> {
    ws.terms()
        .map(|(w, c)| TermReport {
            coefficient: ScalarReport::new(c, ctx),
            web: WebJson::from_web(w),
        })
        .collect()
}

fn eval_web(args: &EvalWebArgs, ctx: &Context) -> Result<EvalReport, Error> {
    let web = canonicalize(&Web::from_json(&read_input(&args.web)?)?);
    let order = args
        .seed
        .map_or(ReductionOrder::Canonical, ReductionOrder::Shuffled);
    let key = format!(
        "eval-web v1 {} {:?} {}",
        mode_name(ctx),
        order,
        web.to_json()
    );
    cached(&key, || {
        if web.is_closed() {
            let v = evaluate_closed_with(&web, ctx, order)?;
            Ok(EvalReport {
                mode: mode_name(ctx),
                value: Some(ScalarReport::new(&v, ctx)),
                terms: None,
            })
        } else {
            let r = reduce_with(&WebSum::single(&web, Scalar::one()), ctx, order)?;
            Ok(EvalReport {
                mode: mode_name(ctx),
                value: None,
                terms: Some(sum_terms(&r, ctx)),
            })
        }
    })
}

fn clasp(args: &ClaspArgs, ctx: &Context) -> Result<ClaspReport, Error> {
    let c = ClaspLabel::new(args.m, args.n);
    let key = format!(
        "clasp v1 {c} {} {} {}",
        mode_name(ctx),
        args.max_size,
        args.terms
    );
    cached(&key, || {
        let p = build_clasp(c, ctx, args.max_size)?;
        Ok(ClaspReport {
            label: c,
            mode: mode_name(ctx),
            term_count: p.len(),
            check: check_clasp(&p, c, ctx)?,
            trace: ScalarReport::new(&p.closure(ctx)?, ctx),
            terms: args.terms.then(|| sum_terms(&p, ctx)),
        })
    })
}

fn fusion_dim(labels: &str, level: Option<u32>, tuples: bool) -> Result<FusionReport, Error> {
    let t = TripleLabel::parse(labels)?;
    let dim = match level {
        Some(k) => triangle_dim_at_level(&t, k)?,
        None => triangle_dim(&t)?,
    };
    let base = ell_reduce(&t)?.map(|(b, _, _)| b);
    Ok(FusionReport {
        labels: t,
        level,
        ell: ell_parameter(&t),
        dim,
        six_tuples: tuples.then(|| base.map(|b| enumerate_six_tuples(&b)).unwrap_or_default()),
        p_values: p_values(&base.unwrap_or(t)).1,
    })
}

fn genus2(theory: &str, power: i64) -> Result<Genus2Report, Error> {
    let theory: Theory = theory.parse()?;
    let other = match theory {
        Theory::Ising => Theory::Su2Level2,
        Theory::Su2Level2 => Theory::Ising,
    };
    let md = ModularDatum::builtin(theory);
    let m = genus2_twist_matrix(&md);
    let m_other = genus2_twist_matrix(&ModularDatum::builtin(other));
    let a = diagonal_power_trace(&m, power);
    let b = diagonal_power_trace(&m_other, power);
    let norm2 = |x: &crate::cyclotomic::Residue| x.mul(&crate::repdata::conj(x));
    Ok(Genus2Report {
        theory,
        power,
        basis: enumerate_labellings(&SpineGraph::dumbbell(), &md),
        diagonal: m.iter().map(ScalarReport::from_residue).collect(),
        trace_abs: a.eval().norm(),
        other_trace_abs: b.eval().norm(),
        distinct: norm2(&a) != norm2(&b),
    })
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    json: bool,
    report: &T,
    text: impl FnOnce() -> String,
) -> Result<(), Error> {
    if json {
        writeln!(out, "{}", serde_json::to_string(report)?)?;
    } else {
        writeln!(out, "{}", text())?;
    }
    Ok(())
}

fn scalar_text(s: &ScalarReport) -> String {
    match s.numeric {
        Some([re, im]) => format!("{} ≈ {re:.12} + {im:.12}i", s.exact),
        None => s.exact.clone(),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Error> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return Err(Error::InvalidInput(
            "--tolerance must be a positive number".into(),
        ));
    }
    let ctx = match cli.level {
        Some(k) => Context::level(k),
        None => Context::generic(),
    };
    let json = cli.json;
    match &cli.command {
        Command::Qint { n } => {
            let v = ctx.qint(*n);
            let r = QintReport {
                n: *n,
                mode: mode_name(&ctx),
                value: ScalarReport::new(&v, &ctx),
                is_zero: v.is_zero(),
            };
            emit(out, json, &r, || {
                format!("[{n}] = {}", scalar_text(&r.value))
            })
        }
        Command::EvalWeb(args) => {
            let r = eval_web(args, &ctx)?;
            emit(out, json, &r, || match (&r.value, &r.terms) {
                (Some(v), _) => scalar_text(v),
                (None, Some(t)) => format!("{} non-elliptic terms", t.len()),
                _ => String::new(),
            })
        }
        Command::Clasp(args) => {
            let r = clasp(args, &ctx)?;
            emit(out, json, &r, || {
                let c = &r.check;
                format!(
                    "clasp {} ({}): {} terms\nidentity coefficient 1: {}\nidempotent: {}\nannihilated: {}\ntrace: {} (expected {})",
                    r.label,
                    r.mode,
                    r.term_count,
                    c.identity_coefficient_one,
                    c.idempotent,
                    c.annihilated,
                    scalar_text(&r.trace),
                    clasp_trace(r.label, &ctx),
                )
            })
        }
        Command::FusionDim { labels, tuples } => {
            let r = fusion_dim(labels, cli.level, *tuples)?;
            emit(out, json, &r, || {
                let mut s = r.dim.to_string();
                for st in r.six_tuples.iter().flatten() {
                    s.push_str(&format!(
                        "\n  (x,y,a,b,u,v) = ({},{},{},{},{},{})",
                        st.x, st.y, st.a, st.b, st.u, st.v
                    ));
                }
                s
            })
        }
        Command::Distinguish(args) => {
            if let Some(blocks) = args.sweep {
                let r: SweepReport = sweep_words(blocks, args.bound, cli.tolerance);
                return emit(out, json, &r, || {
                    let mut s = format!(
                        "{} words checked, {} with gap ≤ {}, minimum gap {:e}",
                        r.words_checked, r.failures, cli.tolerance, r.min_gap
                    );
                    for w in &r.examples {
                        s.push_str(&format!("\n  {w}"));
                    }
                    s
                });
            }
            let word = args.word.as_deref().unwrap_or_default().parse()?;
            let r: TraceReport = trace_distinguish(&word);
            emit(out, json, &r, || {
                format!(
                    "word: {}\n|Tr| Ising:   {:.12}\n|Tr| SU(2)_2: {:.12}\ndistinct: {}\nhypotheses met: {}",
                    r.word, r.tr_ising, r.tr_su2, r.distinct, r.hypotheses_met
                )
            })
        }
        Command::Genus2 { theory, power } => {
            let r = genus2(theory, *power)?;
            emit(out, json, &r, || {
                let diag: Vec<String> = r.diagonal.iter().map(|d| d.exact.clone()).collect();
                format!(
                    "M = diag[{}]\n|Tr(M^{})| = {:.12} (other theory {:.12}), distinct: {}",
                    diag.join(", "),
                    r.power,
                    r.trace_abs,
                    r.other_trace_abs,
                    r.distinct
                )
            })
        }
        Command::Certificate { spine, curve } => {
            let spine = load_spine(spine)?;
            let curve = CurveWord::from_json(&read_input(curve)?)?;
            let r: Certificate = detection_certificate(&spine, &curve)?;
            emit(out, json, &r, || {
                let mut s = format!("complexity {}, level {}\n", r.complexity, r.min_level);
                for (e, l) in &r.leading_labelling {
                    s.push_str(&format!("  {e}: {l}\n"));
                }
                for v in &r.vertices {
                    s.push_str(&format!(
                        "  vertex {}: {} dim {}\n",
                        v.vertex, v.triple, v.dim
                    ));
                }
                s.push_str(&format!(
                    "flux balanced: {}, leading term non-zero: {}",
                    r.flux_balanced, r.leading_term_nonzero
                ));
                s
            })
        }
        Command::Dim { spine } => {
            let k = cli
                .level
                .ok_or_else(|| Error::InvalidInput("dim needs --level".into()))?;
            let spine = load_spine(spine)?;
            let r = DimReport {
                level: k,
                genus: spine.genus(),
                dim: state_space_dim(&spine, k)?,
            };
            emit(out, json, &r, || r.dim.to_string())
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unsupported(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
