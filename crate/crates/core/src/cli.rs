//! Command line front end.
//!
//! Every command reads an ordered graph (a file in the format of
//! [`OrderedGraph::parse`], or a corpus name such as `K3`) and a curve type,
//! runs one stage of the pipeline and prints a report. `--format structured`
//! gives the versioned line format (`arrangelab-v1 ...`) used by the golden
//! files; `--format text` is meant for reading.
//!
//! Exit codes: 0 success, 2 a mathematical invariant or certificate failed,
//! 3 bad input (unreadable file, parse error, non-chordal graph where one is
//! required, size caps).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::duality::{dual_hilbert, dualize, verify_against_reference, LiePresentation, QlaPresentation, QuadraticData};
use crate::error::{Error, Result};
use crate::extalg::{GroebnerBasis, DEFAULT_PAIR_CAP};
use crate::graph::{corpus, OrderedGraph, DEFAULT_ENUMERATION_CAP};
use crate::koszul::{certify_koszul, flat_decomposition, nbc_monomial_basis, DEFAULT_TRUNCATION};
use crate::liealg::{ce_stage, check_stage_quasi_iso, lcs_dims, lcs_quotient_capped, DEFAULT_DIM_CAP};
use crate::models::{build, CurveType, DgaPresentation};
use crate::series::TruncatedSeries;
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVARIANT: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV: &str = "ARRANGELAB_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "arrangelab", version, about = "Models, Koszul duals and minimal models of chordal graphic arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the model DGA.
    Build(Common),
    /// Certify Koszulity: quadratic Gröbner basis and Hilbert series identity.
    Koszul(Common),
    /// Print the quadratic-linear dual Lie algebra presentation.
    Dualize(Common),
    /// Print the standard complex of L/Γ_i L.
    MinimalModel(Common),
    /// Dimensions of the weight pieces of the dual Lie algebra.
    LcsDims(Common),
    /// Run every cross-module consistency check.
    VerifyAll(Common),
}

#[derive(Debug, Clone, clap::Args)]
struct Common {
    /// Graph file, or a corpus name (K3, P4, C5, F4, E2, ...).
    #[arg(long)]
    graph: String,
    /// rational, toric or genus:G.
    #[arg(long, default_value = "rational")]
    curve: String,
    /// Truncation degree of Hilbert series.
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    trunc: usize,
    /// Largest weight for Lie algebra computations.
    #[arg(long, default_value_t = 6)]
    max_weight: u32,
    /// Minimal model stage i (weights < i).
    #[arg(long, default_value_t = 4)]
    stage: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enumeration cap (default from ARRANGELAB_CAP, else built in).
    #[arg(long)]
    cap: Option<usize>,
    /// Write the report to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Validated settings of one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub graph: OrderedGraph,
    pub curve: CurveType,
    pub truncation: usize,
    pub max_weight: u32,
    pub stage: u32,
    pub format: Format,
    pub cap: usize,
}

fn load_graph(spec: &str) -> Result<OrderedGraph> {
    match std::fs::read_to_string(spec) {
        Ok(text) => OrderedGraph::parse(&text),
        Err(e) => corpus::by_name(spec).ok_or_else(|| Error::Parse { line: 0, msg: format!("cannot read graph `{spec}`: {e}") }),
    }
}

fn default_cap() -> Result<usize> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse { line: 0, msg: format!("{CAP_ENV} must be a positive integer, got `{v}`") }),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

impl RunConfig {
    fn from_args(c: &Common) -> Result<Self> {
        if c.trunc < 2 {
            return Err(Error::Parse { line: 0, msg: "--trunc must be at least 2".into() });
        }
        if c.max_weight == 0 {
            return Err(Error::Parse { line: 0, msg: "--max-weight must be positive".into() });
        }
        Ok(RunConfig {
            graph: load_graph(&c.graph)?,
            curve: c.curve.parse()?,
            truncation: c.trunc,
            max_weight: c.max_weight,
            stage: c.stage,
            format: c.format,
            cap: match c.cap {
                Some(k) => k,
                None => default_cap()?,
            },
        })
    }

    fn model(&self) -> Result<DgaPresentation<Rational>> {
        build(&self.graph, self.curve, self.cap)
    }
}

/// Quadratic Gröbner basis, dual QLA and Lie presentation of a model.
fn dual_of(p: &DgaPresentation<Rational>) -> Result<(GroebnerBasis<Rational>, QlaPresentation<Rational>, LiePresentation<Rational>)> {
    let gb = p.groebner_basis(DEFAULT_PAIR_CAP)?.reduce_to_quadratic()?;
    let qla = dualize(&QuadraticData::from_groebner(p, &gb)?)?;
    let lp = qla.to_lie_presentation()?;
    Ok((gb, qla, lp))
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidGraph(_)
        | Error::NotChordal { .. }
        | Error::NotPeo { .. }
        | Error::SizeLimitExceeded { .. }
        | Error::CapExceeded { .. }
        | Error::TooManyVariables(_)
        | Error::VarTableMismatch
        | Error::UnknownVariable(_)
        | Error::GenusZeroUnsupported => EXIT_INPUT,
        Error::NotQuadratic(_)
        | Error::NotQuadraticInput
        | Error::HilbertIdentityFails(_)
        | Error::NotAntisymmetric
        | Error::MalformedQla(_)
        | Error::Invariant { .. } => EXIT_INVARIANT,
    }
}

fn header(cfg: &RunConfig, what: &str) -> String {
    format!("arrangelab-v1 {what}\ngraph {}\ncurve {}\n", cfg.graph.to_text().trim_end().replace('\n', "; "), cfg.curve)
}

fn cmd_build(cfg: &RunConfig) -> Result<String> {
    let p = cfg.model()?;
    Ok(match cfg.format {
        Format::Structured => p.to_text(),
        Format::Text => {
            let mut s = format!("model over {}: {} generators, {} relations\n", cfg.curve, p.num_vars(), p.relations().len());
            for r in p.relations() {
                let _ = writeln!(s, "  0 = {}", p.show(r));
            }
            for (i, d) in p.differential().iter().enumerate().filter(|(_, d)| !d.is_zero()) {
                let _ = writeln!(s, "  d {} = {}", p.vars().name(i), p.show(d));
            }
            if p.has_zero_differential() {
                s.push_str("  differential is zero\n");
            }
            s
        }
    })
}

fn cmd_koszul(cfg: &RunConfig) -> Result<String> {
    let p = cfg.model()?;
    let cert = certify_koszul(&p, cfg.truncation, DEFAULT_PAIR_CAP)?;
    Ok(match cfg.format {
        Format::Structured => cert.to_text(),
        Format::Text => format!(
            "Koszul: quadratic Gröbner basis with {} elements ({})\nh_A(t)  = {}\nh_A!(t) = {}\nh_A(t) h_A!(-t) = 1 through t^{}\n",
            cert.groebner.len(),
            cert.groebner.order_name(),
            cert.hilbert,
            cert.dual_hilbert,
            cert.truncation
        ),
    })
}

fn cmd_dualize(cfg: &RunConfig) -> Result<String> {
    let (_, qla, lp) = dual_of(&cfg.model()?)?;
    Ok(match cfg.format {
        Format::Structured => lp.to_text(),
        Format::Text => {
            let mut s = format!("Lie algebra on {} generators, {} relations\n", lp.dim(), lp.relations().len());
            for r in lp.relations() {
                let _ = writeln!(s, "  {}", lp.relation_text(r));
            }
            let _ = writeln!(s, "enveloping algebra: T(V*)/({})", qla.ideal_generators_text().join(", "));
            s
        }
    })
}

fn cmd_minimal_model(cfg: &RunConfig) -> Result<String> {
    let (_, _, lp) = dual_of(&cfg.model()?)?;
    let stage = lcs_quotient_capped(&lp, cfg.stage, DEFAULT_DIM_CAP)?;
    stage.check_jacobi()?;
    let ce = ce_stage(&stage)?;
    ce.check_d_squared()?;
    if !ce.is_minimal() || !ce.generated_in_degree_one() {
        return Err(Error::invariant("minimality", "stage has a linear differential or a generator outside degree one"));
    }
    Ok(match cfg.format {
        Format::Structured => ce.to_text(),
        Format::Text => {
            let mut s = format!("Ω(L/Γ_{} L): {} generators of degree 1\n", cfg.stage, ce.vars().len());
            for (i, b) in stage.basis().iter().enumerate() {
                let d = &ce.differential()[i];
                let shown = if d.is_zero() { "0".to_string() } else { crate::extalg::to_text(d, ce.vars()) };
                let _ = writeln!(s, "  {} (weight {}, dual to {}): d = {}", b.ce_name, b.weight, b.lie_name, shown);
            }
            s
        }
    })
}

fn cmd_lcs_dims(cfg: &RunConfig) -> Result<String> {
    let (_, _, lp) = dual_of(&cfg.model()?)?;
    let dims = lcs_dims(&lp, cfg.max_weight, DEFAULT_DIM_CAP)?;
    let mut s = match cfg.format {
        Format::Structured => header(cfg, "lcs-dims"),
        Format::Text => String::from("weight  dim L_w\n"),
    };
    for (w, d) in dims.iter().enumerate() {
        let _ = match cfg.format {
            Format::Structured => writeln!(s, "weight {} dim {d}", w + 1),
            Format::Text => writeln!(s, "{:>6}  {d}", w + 1),
        };
    }
    if cfg.format == Format::Structured {
        s.push_str("end\n");
    }
    Ok(s)
}

/// Outcome of one named check in `verify-all`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Ok(String),
    Skipped(String),
    Failed(String),
}

/// Run every consistency check; errors of individual checks become
/// failures, input errors abort.
pub fn verify_all(cfg: &RunConfig) -> Result<Vec<(&'static str, CheckOutcome)>> {
    let p = cfg.model()?;
    let mut out = Vec::new();
    let mut record = |name: &'static str, r: Result<CheckOutcome>| -> Result<()> {
        match r {
            Ok(o) => out.push((name, o)),
            Err(e) if exit_code(&e) == EXIT_INPUT && !matches!(e, Error::NotChordal { .. } | Error::NotPeo { .. }) => return Err(e),
            Err(e) => out.push((name, CheckOutcome::Failed(e.to_string()))),
        }
        Ok(())
    };
    let gb = p.groebner_basis(DEFAULT_PAIR_CAP)?;
    record(
        "d-squared-and-leibniz",
        p.check_differential(&gb).map(|_| CheckOutcome::Ok(format!("{} generators, {} relations", p.num_vars(), p.relations().len()))),
    )?;
    let top = p.num_vars();
    let nbc = match cfg.graph.check_chordal_peo() {
        Err(e) => Ok(CheckOutcome::Skipped(e.to_string())),
        Ok(()) => nbc_monomial_basis(&p, &cfg.graph, cfg.curve, cfg.cap).map(|basis| {
            let standard = gb.standard_monomials(top);
            if basis == standard {
                CheckOutcome::Ok(format!("{} basis monomials", basis.iter().map(Vec::len).sum::<usize>()))
            } else {
                CheckOutcome::Failed("NBC monomials differ from the standard monomials".into())
            }
        }),
    };
    record("nbc-basis", nbc)?;
    let flats = flat_decomposition(&cfg.graph, cfg.curve, cfg.cap, DEFAULT_PAIR_CAP).map(|dec| {
        let h = gb.hilbert_series(dec.total.truncation());
        match h.first_difference(&dec.total) {
            None => CheckOutcome::Ok(format!("{} flats, series {}", dec.entries.len(), dec.total)),
            Some(k) => CheckOutcome::Failed(format!("series differ in degree {k}: {h} vs {}", dec.total)),
        }
    });
    record("flat-decomposition", flats)?;
    let cert = certify_koszul(&p, cfg.truncation, DEFAULT_PAIR_CAP);
    let koszul_ok = cert.is_ok();
    record("hilbert-identity", cert.map(|c| CheckOutcome::Ok(format!("through t^{}", c.truncation))))?;
    if !koszul_ok {
        for name in ["presentation-span", "pbw", "stage-quasi-iso"] {
            out.push((name, CheckOutcome::Skipped("no quadratic Gröbner basis".into())));
        }
        return Ok(out);
    }
    let (_, qla, lp) = dual_of(&p)?;
    let span = match cfg.curve {
        CurveType::Projective(genus) => verify_against_reference(&lp, &cfg.graph, genus).map(|r| {
            if r.equal() {
                CheckOutcome::Ok(format!("span dimension {}", r.joint_dim))
            } else {
                CheckOutcome::Failed(format!("{r:?}"))
            }
        }),
        _ => Ok(CheckOutcome::Skipped("closed-form presentation only for positive genus".into())),
    };
    record("presentation-span", span)?;
    let w = cfg.max_weight as usize;
    let pbw = dual_hilbert(&qla, w).and_then(|dual| {
        let series = dual.weight_series(w);
        let dims = lcs_dims(&lp, cfg.max_weight, DEFAULT_DIM_CAP)?;
        let product = TruncatedSeries::pbw_product(&dims, w);
        Ok(match product.first_difference(&series) {
            None => CheckOutcome::Ok(format!("dims {dims:?} through t^{w}")),
            Some(k) => CheckOutcome::Failed(format!("coefficient of t^{k}: {product} vs {series}")),
        })
    });
    record("pbw", pbw)?;
    let quasi = (|| {
        for i in 1..=cfg.stage {
            let stage = lcs_quotient_capped(&lp, i, DEFAULT_DIM_CAP)?;
            stage.check_jacobi()?;
            let ce = ce_stage(&stage)?;
            ce.check_d_squared()?;
            if !ce.is_minimal() || !ce.generated_in_degree_one() {
                return Ok(CheckOutcome::Failed(format!("stage {i} is not minimal")));
            }
            let r = check_stage_quasi_iso(&p, &ce, i, 3)?;
            if let Some((d, w)) = r.first_mismatch() {
                return Ok(CheckOutcome::Failed(format!("stage {i}: H^{d} weight {w} is {} in the model, {} in the stage", r.model[d][w], r.ce[d][w])));
            }
        }
        Ok(CheckOutcome::Ok(format!("stages 1..={} through degree 3", cfg.stage)))
    })();
    record("stage-quasi-iso", quasi)?;
    Ok(out)
}

fn cmd_verify_all(cfg: &RunConfig) -> Result<(String, bool)> {
    let checks = verify_all(cfg)?;
    let mut s = match cfg.format {
        Format::Structured => header(cfg, "verify-all"),
        Format::Text => String::new(),
    };
    let mut ok = true;
    for (name, o) in &checks {
        let (status, detail) = match o {
            CheckOutcome::Ok(d) => ("ok", d),
            CheckOutcome::Skipped(d) => ("skip", d),
            CheckOutcome::Failed(d) => {
                ok = false;
                ("FAIL", d)
            }
        };
        let _ = writeln!(s, "check {name} {status}: {detail}");
    }
    let _ = writeln!(s, "{}", if ok { "all checks passed" } else { "some checks failed" });
    if cfg.format == Format::Structured {
        s.push_str("end\n");
    }
    Ok((s, ok))
}

/// Parse `args` (including the program name), run, and write the report to
/// `out` (or the `--out` file) and diagnostics to `err`. Returns the exit
/// code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let (common, which) = match &cli.command {
        Command::Build(c) => (c, "build"),
        Command::Koszul(c) => (c, "koszul"),
        Command::Dualize(c) => (c, "dualize"),
        Command::MinimalModel(c) => (c, "minimal-model"),
        Command::LcsDims(c) => (c, "lcs-dims"),
        Command::VerifyAll(c) => (c, "verify-all"),
    };
    let result = RunConfig::from_args(common).and_then(|cfg| match which {
        "build" => cmd_build(&cfg).map(|s| (s, true)),
        "koszul" => cmd_koszul(&cfg).map(|s| (s, true)),
        "dualize" => cmd_dualize(&cfg).map(|s| (s, true)),
        "minimal-model" => cmd_minimal_model(&cfg).map(|s| (s, true)),
        "lcs-dims" => cmd_lcs_dims(&cfg).map(|s| (s, true)),
        _ => cmd_verify_all(&cfg),
    });
    match result {
        Ok((report, ok)) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &report),
                None => out.write_all(report.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write report: {e}");
                return EXIT_INPUT;
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_INVARIANT
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            let kind = if code == EXIT_INPUT { "input error" } else { "invariant failure" };
            let _ = writeln!(err, "{kind}: {e}");
            code
        }
    }
}
