//! The `galtypes` command line: per-curve image reports, the censuses, genus profiles,
//! j-map preimages, point searches and batch runs.

mod batch;

use analysis::{
    bounded_point_search, cross_reference_j, enumerate_adic_pairs, enumerate_exceptional_pairs, histogram,
    presieve_count, search_record, triple_scan, SearchModel,
};
use catalog::{Catalog, JMap};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ecq::{EllipticCurveQ, TraceCache};
use galimage::{Assumptions, Classifier, ClassifyConfig, GalError};
use modcurve::{genus_profile, type_to_group, ProfileRecord, TypeDescriptor};
use modmatrix::{closure, full_gl2, parse_generators};
use ratq::{parse_rational, ratfun_preimages, Extended};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub use batch::{run_batch, BatchSummary};

pub const CACHE_ENV: &str = "GALTYPES_CACHE";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("CM curve: {0}")]
    Cm(String),
    #[error(transparent)]
    Image(GalError),
    #[error(transparent)]
    Curve(#[from] ecq::EcqError),
    #[error(transparent)]
    Analysis(#[from] analysis::AnalysisError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    Type(#[from] modcurve::ModcurveError),
    #[error(transparent)]
    Group(#[from] modmatrix::ModError),
    #[error(transparent)]
    Ratq(#[from] ratq::RatqError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<GalError> for CliError {
    fn from(e: GalError) -> Self {
        match e {
            GalError::Cm(j) | GalError::CmCorner(j) => CliError::Cm(format!("j = {j}")),
            e => CliError::Image(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "galtypes", version, about = "Galois images, exceptional types and Serre constants of elliptic curves over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Image of the mod-p representation
    Image {
        #[command(flatten)]
        job: CurveJob,
        #[arg(short, long)]
        p: u32,
    },
    /// Serre's constant A(E)
    Serre {
        #[command(flatten)]
        job: CurveJob,
    },
    /// Full report with the exceptional and adic types
    Type {
        #[command(flatten)]
        job: CurveJob,
    },
    /// Genus profile of a type, "full", or a generator list
    Genus {
        /// Comma-separated labels, "full", or generators "[a,b,c,d],..." (with --level)
        spec: String,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Genus census of pairs or triples
    Census {
        kind: CensusKind,
        /// Pool genera at or above this value in the histogram
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Rational points of a j-map over j; with neither --label nor --pair, cross-references j
    Preimage {
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        pair: Option<String>,
    },
    /// Bounded-height rational points on a catalog curve or on y² = f(x)
    Search {
        /// Catalog search curve name (see `search --list`) or a polynomial f in x
        target: Option<String>,
        #[arg(long, default_value_t = 100)]
        height: u64,
        #[arg(long)]
        list: bool,
    },
    /// Classify every curve of a CSV file, one JSON line each
    Batch {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        opts: ClassifyOpts,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CensusKind {
    Pairs,
    AdicPairs,
    Triples,
}

#[derive(Args, Debug)]
struct CurveJob {
    /// "label,a1,a2,a3,a4,a6" or "a1,a2,a3,a4,a6"
    #[arg(long, allow_hyphen_values = true)]
    curve: String,
    #[command(flatten)]
    opts: ClassifyOpts,
}

#[derive(Args, Debug, Clone)]
struct ClassifyOpts {
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Trace cache file (default: $GALTYPES_CACHE, else in memory)
    #[arg(long, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Report only unconditional results
    #[arg(long)]
    no_assumptions: bool,
    #[arg(long)]
    no_strong_uniformity: bool,
    #[arg(long)]
    no_conjecture_13s4: bool,
}

impl ClassifyOpts {
    fn config(&self) -> Result<ClassifyConfig> {
        if self.samples < 32 {
            return Err(CliError::Usage(format!("--samples must be at least 32, got {}", self.samples)));
        }
        let mut cfg = ClassifyConfig { samples: self.samples, ..Default::default() };
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        cfg.assume = Assumptions {
            strong_uniformity: !(self.no_assumptions || self.no_strong_uniformity),
            conjecture_13s4: !(self.no_assumptions || self.no_conjecture_13s4),
        };
        Ok(cfg)
    }

    fn cache(&self) -> Result<TraceCache> {
        Ok(match &self.cache {
            Some(p) => TraceCache::open(p)?,
            None => TraceCache::memory(),
        })
    }
}

pub fn parse_curve(s: &str) -> Result<(String, EllipticCurveQ)> {
    let fields = s.split(',').count();
    let line = if fields == 5 { format!(",{s}") } else { s.to_string() };
    match EllipticCurveQ::parse_csv_line(&line) {
        Err(ecq::EcqError::Parse(m)) => Err(CliError::Usage(m)),
        r => Ok(r?),
    }
}

fn emit(out: &mut dyn Write, v: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("serializable"))?;
    Ok(())
}

fn merge(base: Value, extra: Value) -> Value {
    match (base, extra) {
        (Value::Object(mut a), Value::Object(b)) => {
            a.extend(b);
            Value::Object(a)
        }
        (a, _) => a,
    }
}

fn curve_command(cmd: &Command, out: &mut dyn Write) -> Result<()> {
    let (Command::Image { job, .. } | Command::Serre { job } | Command::Type { job }) = cmd else {
        unreachable!()
    };
    let (label, e) = parse_curve(&job.curve)?;
    let cache = job.opts.cache()?;
    let c = Classifier::new(job.opts.config()?, &cache);
    match cmd {
        Command::Image { p, .. } => {
            if !galimage::EXCEPTIONAL_CANDIDATES.contains(p) {
                return Err(CliError::Usage(format!("p must be one of {:?}", galimage::EXCEPTIONAL_CANDIDATES)));
            }
            let entry = c.mod_p_image(&e, *p)?;
            let mut v = merge(json!({ "label": label, "p": p }), serde_json::to_value(&entry).unwrap());
            let adic = match p {
                2 => Some(c.adic_level_2(&e)?),
                3 => Some(c.adic_level_3(&e)?),
                _ => None,
            };
            if let Some(a) = adic {
                v["adic"] = serde_json::to_value(a).unwrap();
            }
            emit(out, &v)
        }
        Command::Serre { .. } => {
            let s = c.serre_constant(&e)?;
            emit(out, &merge(json!({ "label": label }), serde_json::to_value(&s).unwrap()))
        }
        _ => {
            let r = c.report(&label, &e)?;
            let extra = json!({
                "type": r.exceptional_type()?.to_string(),
                "adic_type": r.adic_type()?.to_string(),
            });
            emit(out, &merge(serde_json::to_value(&r).unwrap(), extra))
        }
    }
}

fn genus(spec: &str, level: Option<u32>, out: &mut dyn Write) -> Result<()> {
    let cat = Catalog::global();
    let (labels, group) = if spec == "full" {
        let n = level.ok_or_else(|| CliError::Usage("`genus full` needs --level".into()))?;
        (vec![format!("full{n}")], full_gl2(n))
    } else if spec.trim_start().starts_with('[') && level.is_some() {
        let n = level.unwrap();
        (vec![spec.to_string()], closure(&parse_generators(spec, n)?, n)?)
    } else {
        let t = TypeDescriptor::parse(spec)?;
        (t.labels(), type_to_group(&t, cat)?)
    };
    let profile = genus_profile(&group)?;
    emit(out, &ProfileRecord { labels, profile })
}

fn census(kind: CensusKind, cap: Option<u64>, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "type,level,genus,bucket")?;
    match kind {
        CensusKind::Triples => {
            let rows = triple_scan()?;
            for r in &rows {
                writeln!(out, "\"{}\",{},{},{}", r.types, r.level, r.profile.genus, r.bucket.name())?;
            }
            let genera: Vec<u64> = rows.iter().map(|r| r.profile.genus).collect();
            emit(out, &json!({ "kind": "triples", "total": rows.len(), "genera": genera }))
        }
        _ => {
            let (rows, name, cap) = match kind {
                CensusKind::Pairs => (enumerate_exceptional_pairs()?, "pairs", cap.or(Some(20))),
                _ => (enumerate_adic_pairs()?, "adic-pairs", cap),
            };
            for r in &rows {
                writeln!(out, "{}", r.csv())?;
            }
            let mut v = json!({
                "kind": name,
                "total": rows.len(),
                "max_genus": rows.iter().map(|r| r.genus()).max(),
                "histogram": histogram(&rows, cap),
            });
            if matches!(kind, CensusKind::Pairs) {
                v["presieve"] = json!(presieve_count());
            }
            emit(out, &v)
        }
    }
}

fn show(t: &Extended) -> String {
    match t {
        Extended::Finite(q) => q.to_string(),
        Extended::Infinity => "inf".into(),
    }
}

fn preimage(j: &str, label: Option<&str>, pair: Option<&str>, out: &mut dyn Write) -> Result<()> {
    let jq = parse_rational(j).map_err(|e| CliError::Usage(format!("--j: {e}")))?;
    let cat = Catalog::global();
    let target = Extended::Finite(jq.clone());
    match (label, pair) {
        (Some(l), None) => {
            let r = cat.lookup(l)?;
            let v = match &r.j_map {
                JMap::Rational(f) => {
                    let ts: Vec<String> = ratfun_preimages(f, &target)?.iter().map(show).collect();
                    json!({ "label": l, "j": jq.to_string(), "member": !ts.is_empty(), "preimages": ts })
                }
                JMap::Finite(js) => json!({ "label": l, "j": jq.to_string(), "member": js.contains(&jq), "finite_list": true }),
                JMap::None => return Err(CliError::Usage(format!("{l} has no j-map"))),
            };
            emit(out, &v)
        }
        (None, Some(p)) => {
            let t = TypeDescriptor::parse(p)?;
            let f = cat.pair_jmap(&t).ok_or_else(|| CliError::Usage(format!("no j-map for {t}")))?;
            let ts: Vec<String> = ratfun_preimages(f, &target)?.iter().map(show).collect();
            emit(out, &json!({ "type": t.to_string(), "j": jq.to_string(), "member": !ts.is_empty(), "preimages": ts }))
        }
        (None, None) => emit(out, &merge(json!({ "j": jq.to_string() }), serde_json::to_value(cross_reference_j(&jq)?).unwrap())),
        _ => Err(CliError::Usage("give at most one of --label and --pair".into())),
    }
}

fn search(target: Option<&str>, height: u64, list: bool, out: &mut dyn Write) -> Result<()> {
    let cat = Catalog::global();
    if list {
        let names: Vec<&str> = cat.searches().iter().map(|s| s.name.as_str()).collect();
        return emit(out, &names);
    }
    if height < 1 {
        return Err(CliError::Usage("--height must be at least 1".into()));
    }
    let target = target.ok_or_else(|| CliError::Usage("search needs a curve name or polynomial".into()))?;
    let pts = match cat.search(target) {
        Some(_) => search_record(target, height)?,
        None => {
            let f = ratq::parse_ratfun(target, "x").map_err(|e| CliError::Usage(format!("{target}: {e}")))?;
            if !f.den().is_constant() {
                return Err(CliError::Usage(format!("{target} is not a polynomial")));
            }
            let poly = f.num().scale(&f.den().lead().recip());
            bounded_point_search(&SearchModel::Hyperelliptic(poly), height)?
        }
    };
    emit(out, &pts)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match cli.command {
        c @ (Command::Image { .. } | Command::Serre { .. } | Command::Type { .. }) => curve_command(&c, out),
        Command::Genus { spec, level } => genus(&spec, level, out),
        Command::Census { kind, cap } => census(kind, cap, out),
        Command::Preimage { j, label, pair } => preimage(&j, label.as_deref(), pair.as_deref(), out),
        Command::Search { target, height, list } => search(target.as_deref(), height, list, out),
        Command::Batch { input, output, opts } => {
            let cache = opts.cache()?;
            let cfg = opts.config()?;
            let text = std::fs::read_to_string(&input)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", input.display())))?;
            let summary = match output {
                Some(p) => {
                    let mut f = std::io::BufWriter::new(std::fs::File::create(&p)?);
                    let s = run_batch(&text, cfg, &cache, &mut f)?;
                    f.flush()?;
                    s
                }
                None => run_batch(&text, cfg, &cache, out)?,
            };
            writeln!(err, "{summary}")?;
            Ok(())
        }
    }
}

/// Runs the command line and returns the exit code: 0 on success, 1 for usage errors,
/// 2 for mathematical or domain errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 1;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
