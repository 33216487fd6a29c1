//! Command-line front end: verification suites over the identity catalog
//! and certification sweeps over matrices, pairs, lemmas and chains, with
//! text or JSON reports.
//!
//! Exit codes: 0 all pass, 1 at least one FAIL, 2 usage or configuration
//! error, 3 numeric breakdown (inconclusive runs dominated by sampling
//! exhaustion, with no outright failure).

use clap::{Args, Parser, Subcommand};

use crate::bailey::{BressoudKind, LemmaTag, PairId};
use crate::certify;
use crate::error::{Error, Result};
use crate::registry::{self, Caps, Dims, SuiteEntry};
use crate::report::{emit_report, Report, ReportEntry, ReportFormat};

#[derive(Parser, Debug)]
#[command(name = "elliptica", version, about = "Numerical verification of elliptic hypergeometric identities on root systems")]
struct Cli {
    /// Optional JSON config file: a flat object whose keys mirror the
    /// long flags (n, m, caps, trials, seed, tol, precision_bits,
    /// format, output).
    #[arg(long, global = true)]
    config: Option<String>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List registered identities, matrix kinds, pairs and lemmas.
    List,
    /// Verify one identity over seeded random trials.
    Verify(VerifyArgs),
    /// Verify the whole catalog and certify every engine object.
    VerifyAll(VerifyAllArgs),
    /// Certify matrix-times-inverse against the Kronecker delta.
    MatrixCheck(MatrixCheckArgs),
    /// Certify the defining relation of cataloged WP pairs.
    PairCheck(PairCheckArgs),
    /// Certify lemma-derived pairs against their target matrices.
    LemmaCheck(LemmaCheckArgs),
    /// Certify a lemma chain applied to a seed pair.
    ChainCheck(ChainCheckArgs),
}

#[derive(Args, Debug, Clone, Default)]
struct CommonArgs {
    /// Dimension of the index tuples.
    #[arg(long)]
    n: Option<usize>,
    /// Second dimension for the A_n -> A_m transformations.
    #[arg(long)]
    m: Option<usize>,
    /// Caps: comma-separated per coordinate, or a single scalar broadcast.
    #[arg(long)]
    caps: Option<String>,
    /// Number of seeded trials per entry.
    #[arg(long)]
    trials: Option<u32>,
    /// Base seed; trial t uses seed + t.
    #[arg(long)]
    seed: Option<u64>,
    /// Relative tolerance (defaults to the dimension ladder).
    #[arg(long)]
    tol: Option<f64>,
    /// Working precision in bits (53 or 106).
    #[arg(long)]
    precision_bits: Option<u32>,
    /// Report format: text | json.
    #[arg(long)]
    format: Option<String>,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Registered identity name (see `list`).
    #[arg(long)]
    identity: String,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct VerifyAllArgs {
    /// Small, fast sweep: n <= 2, caps <= 2, 5 trials.
    #[arg(long)]
    quick: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct MatrixCheckArgs {
    /// Matrix kind (B1..B6); all six when omitted.
    #[arg(long)]
    kind: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct PairCheckArgs {
    /// Pair id (see `list`); all nine when omitted.
    #[arg(long)]
    pair: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct LemmaCheckArgs {
    /// Lemma tag (see `list`); all eight when omitted.
    #[arg(long)]
    lemma: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct ChainCheckArgs {
    /// Comma-separated lemma tags applied left to right.
    #[arg(long, default_value = "B1toB4,B4toB1,B1toB2")]
    chain: String,
    /// Seed pair the chain starts from.
    #[arg(long, default_value = "B1_primary")]
    pair: String,
    #[command(flatten)]
    common: CommonArgs,
}

/// Resolved run configuration after merging flags, config file, the
/// ELLIPTICA_PRECISION_BITS environment variable and defaults.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub m: usize,
    pub caps: Vec<usize>,
    pub trials: u32,
    pub seed: u64,
    pub tol: Option<f64>,
    pub precision_bits: u32,
    pub format: ReportFormat,
    pub output: Option<String>,
}

impl RunConfig {
    fn resolve(common: &CommonArgs, config: Option<&serde_json::Value>) -> Result<RunConfig> {
        let cfg_u64 = |key: &str| -> Option<u64> { config.and_then(|c| c.get(key)).and_then(|v| v.as_u64()) };
        let cfg_f64 = |key: &str| -> Option<f64> { config.and_then(|c| c.get(key)).and_then(|v| v.as_f64()) };
        let cfg_str = |key: &str| -> Option<String> {
            config.and_then(|c| c.get(key)).and_then(|v| v.as_str()).map(String::from)
        };

        let n = common.n.or(cfg_u64("n").map(|v| v as usize)).unwrap_or(2);
        let m = common.m.or(cfg_u64("m").map(|v| v as usize)).unwrap_or(2);
        let caps_text = common.caps.clone().or(cfg_str("caps")).unwrap_or_else(|| "2".into());
        let caps = parse_caps(&caps_text, n)?;
        let trials = common.trials.or(cfg_u64("trials").map(|v| v as u32)).unwrap_or(10);
        let seed = common.seed.or(cfg_u64("seed")).unwrap_or(1);
        let tol = common.tol.or(cfg_f64("tol"));
        let precision_bits = common
            .precision_bits
            .or(cfg_u64("precision_bits").map(|v| v as u32))
            .or_else(|| {
                std::env::var("ELLIPTICA_PRECISION_BITS").ok().and_then(|v| v.parse().ok())
            })
            .unwrap_or(53);
        let format_text = common.format.clone().or(cfg_str("format")).unwrap_or_else(|| "text".into());
        let format = ReportFormat::parse(&format_text)
            .ok_or_else(|| Error::Usage(format!("unknown format: {format_text}")))?;
        let output = common.output.clone().or(cfg_str("output"));

        if n == 0 {
            return Err(Error::Usage("n must be at least 1".into()));
        }
        if trials == 0 {
            return Err(Error::Usage("trials must be at least 1".into()));
        }
        if let Some(t) = tol {
            if !t.is_finite() || t <= 0.0 {
                return Err(Error::Usage("tol must be positive".into()));
            }
        }
        if precision_bits < 53 {
            return Err(Error::Usage("precision_bits must be at least 53".into()));
        }
        Ok(RunConfig { n, m, caps, trials, seed, tol, precision_bits, format, output })
    }

    fn cap_scalar(&self) -> usize {
        self.caps.iter().copied().max().unwrap_or(2)
    }

    fn tol_for(&self, n: usize) -> f64 {
        self.tol.unwrap_or_else(|| registry::ladder_tol(n))
    }
}

fn parse_caps(text: &str, n: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if parts.is_empty() {
        return Err(Error::Usage("empty caps list".into()));
    }
    let mut caps = Vec::new();
    for p in &parts {
        caps.push(p.parse::<usize>().map_err(|_| Error::Usage(format!("bad cap value: {p}")))?);
    }
    if caps.len() == 1 {
        Ok(vec![caps[0]; n])
    } else if caps.len() == n {
        Ok(caps)
    } else {
        Err(Error::Usage(format!("caps list has {} entries for n = {n}", caps.len())))
    }
}

/// Parses argv and runs; returns the process exit code and never panics
/// on bad input.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful outcomes.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn load_config(path: &Option<String>) -> Result<Option<serde_json::Value>> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Usage(format!("config {p}: {e}")))?;
            let v: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::Usage(format!("config {p}: {e}")))?;
            if !v.is_object() {
                return Err(Error::Usage(format!("config {p}: expected a flat JSON object")));
            }
            Ok(Some(v))
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    let config = load_config(&cli.config)?;
    match cli.command {
        Cmd::List => {
            use std::io::Write;
            let mut out = String::new();
            let cat = registry::catalog();
            out.push_str(&format!("identities ({}):\n", cat.len()));
            for s in &cat {
                out.push_str(&format!("  {}\n", s.name));
            }
            out.push_str(&format!("matrix kinds ({}):\n", BressoudKind::all().len()));
            for k in BressoudKind::all() {
                out.push_str(&format!("  {}\n", k.name()));
            }
            out.push_str(&format!("pairs ({}):\n", PairId::all().len()));
            for p in PairId::all() {
                out.push_str(&format!("  {}\n", p.name()));
            }
            out.push_str(&format!("lemmas ({}):\n", LemmaTag::all().len()));
            for l in LemmaTag::all() {
                out.push_str(&format!("  {}\n", l.name()));
            }
            // A closed pipe on the consumer side is not an error.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            Ok(0)
        }
        Cmd::Verify(args) => {
            let rc = RunConfig::resolve(&args.common, config.as_ref())?;
            let spec = registry::lookup(&args.identity)?;
            let entry = run_identity(&spec, &rc);
            finish(rc, vec![entry])
        }
        Cmd::VerifyAll(args) => {
            let mut rc = RunConfig::resolve(&args.common, config.as_ref())?;
            if args.quick {
                rc.n = rc.n.min(2);
                rc.caps = vec![rc.cap_scalar().min(2); rc.n];
                rc.trials = rc.trials.min(5);
            }
            let mut entries = Vec::new();
            for spec in registry::catalog() {
                entries.push(run_identity(&spec, &rc));
            }
            let cap = rc.cap_scalar();
            for kind in BressoudKind::all() {
                entries.push(certify::certify_matrix(kind, rc.n, cap, rc.trials, rc.seed, rc.tol_for(rc.n))?);
            }
            for id in PairId::all() {
                entries.push(certify::certify_pair(id, rc.n, cap, rc.trials, rc.seed, rc.tol_for(rc.n))?);
            }
            for tag in LemmaTag::all() {
                for pid in certify::compatible_pairs(tag) {
                    entries.push(certify::certify_lemma(tag, pid, rc.n, cap, rc.trials, rc.seed, rc.tol_for(rc.n))?);
                }
            }
            entries.push(certify::certify_chain(
                &[LemmaTag::B1toB4, LemmaTag::B4toB1, LemmaTag::B1toB2],
                PairId::B1Primary,
                rc.n,
                cap.min(1),
                rc.trials.min(3),
                rc.seed,
                rc.tol_for(rc.n),
            )?);
            finish(rc, entries)
        }
        Cmd::MatrixCheck(args) => {
            let rc = RunConfig::resolve(&args.common, config.as_ref())?;
            let kinds: Vec<BressoudKind> = match &args.kind {
                Some(name) => vec![BressoudKind::parse(name)
                    .ok_or_else(|| Error::Usage(format!("unknown matrix kind: {name}")))?],
                None => BressoudKind::all().to_vec(),
            };
            let mut entries = Vec::new();
            for kind in kinds {
                entries.push(certify::certify_matrix(kind, rc.n, rc.cap_scalar(), rc.trials, rc.seed, rc.tol_for(rc.n))?);
            }
            finish(rc, entries)
        }
        Cmd::PairCheck(args) => {
            let rc = RunConfig::resolve(&args.common, config.as_ref())?;
            let ids: Vec<PairId> = match &args.pair {
                Some(name) => vec![PairId::parse(name)?],
                None => PairId::all().to_vec(),
            };
            let mut entries = Vec::new();
            for id in ids {
                entries.push(certify::certify_pair(id, rc.n, rc.cap_scalar(), rc.trials, rc.seed, rc.tol_for(rc.n))?);
            }
            finish(rc, entries)
        }
        Cmd::LemmaCheck(args) => {
            let rc = RunConfig::resolve(&args.common, config.as_ref())?;
            let tags: Vec<LemmaTag> = match &args.lemma {
                Some(name) => vec![LemmaTag::parse(name)
                    .ok_or_else(|| Error::Usage(format!("unknown lemma: {name}")))?],
                None => LemmaTag::all().to_vec(),
            };
            let mut entries = Vec::new();
            for tag in tags {
                for pid in certify::compatible_pairs(tag) {
                    entries.push(certify::certify_lemma(tag, pid, rc.n, rc.cap_scalar(), rc.trials, rc.seed, rc.tol_for(rc.n))?);
                }
            }
            finish(rc, entries)
        }
        Cmd::ChainCheck(args) => {
            let rc = RunConfig::resolve(&args.common, config.as_ref())?;
            let tags: Vec<LemmaTag> = args
                .chain
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| LemmaTag::parse(s).ok_or_else(|| Error::Usage(format!("unknown lemma: {s}"))))
                .collect::<Result<_>>()?;
            if tags.is_empty() {
                return Err(Error::Usage("empty lemma chain".into()));
            }
            let seed_pair = PairId::parse(&args.pair)?;
            if tags[0].source() != seed_pair.matrix_kind() {
                return Err(Error::KindMismatch(format!(
                    "chain starts at {} but pair {} is attached to {}",
                    tags[0].source().name(),
                    seed_pair.name(),
                    seed_pair.matrix_kind().name()
                )));
            }
            let entry = certify::certify_chain(&tags, seed_pair, rc.n, rc.cap_scalar(), rc.trials, rc.seed, rc.tol_for(rc.n))?;
            finish(rc, vec![entry])
        }
    }
}

fn run_identity(spec: &registry::IdentitySpec, rc: &RunConfig) -> SuiteEntry {
    let n = if spec.has_x { rc.n } else { 1 };
    let m = if spec.uses_m { rc.m } else { 0 };
    let caps = if spec.scalar_caps || !spec.has_x {
        Caps::Scalar(rc.cap_scalar())
    } else {
        Caps::Rect(if rc.caps.len() == n { rc.caps.clone() } else { vec![rc.cap_scalar(); n] })
    };
    registry::verify_trials_cfg(
        spec,
        rc.trials,
        rc.seed,
        Dims { n, m },
        &caps,
        rc.tol_for(n),
        rc.precision_bits,
        None,
    )
}

fn finish(rc: RunConfig, entries: Vec<SuiteEntry>) -> Result<i32> {
    let report = Report::new(
        rc.seed,
        rc.precision_bits,
        entries.iter().map(ReportEntry::from_suite).collect(),
    );
    emit_report(&report, rc.format, rc.output.as_deref())?;
    if report.any_fail() {
        Ok(1)
    } else if report.any_inconclusive() {
        Ok(3)
    } else {
        Ok(0)
    }
}
