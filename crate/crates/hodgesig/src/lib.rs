//! `hodge-sig`: command-line access to `hodgesig-core`.
//!
//! Each subcommand builds a JSON payload (from flags or an input file),
//! validates it, runs the computation and wraps the result in a
//! `hodge-sig/v1` envelope. `enumerate` emits one Weil record per line
//! instead, in the format `ingest` and `analyze --input` read back.

pub mod cache;
pub mod commands;
pub mod config;
pub mod doc;
pub mod error;
pub mod record;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::config::Config;
use crate::doc::Status;
use crate::error::{CliError, CliResult};
use crate::record::{ingest_lmfdb, WeilRecord};

pub const SCHEMA: &str = "hodge-sig/v1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "hodge-sig",
    version,
    about = "Signatures of intersection forms on abelian fourfolds over finite fields"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// TOML config file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Initial mantissa bits of the precision ladder.
    #[arg(long, global = true)]
    pub precision_bits: Option<u32>,
    #[arg(long, global = true)]
    pub max_escalations: Option<u32>,
    /// Worker threads for batch work.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Output file; stdout when absent or `-`.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RecordArgs {
    #[arg(long)]
    pub q: Option<u64>,
    /// Ascending coefficients, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub coeffs: Vec<i64>,
    #[arg(long)]
    pub label: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fourfold signature report for a degree-8 Weil polynomial.
    Analyze {
        #[command(flatten)]
        record: RecordArgs,
        /// Newline-delimited Weil records to analyze as a batch.
        #[arg(long, conflicts_with_all = ["q", "coeffs"])]
        input: Option<PathBuf>,
    },
    /// Stream all Weil polynomials of genus g over F_q.
    Enumerate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        ordinary: bool,
        #[arg(long)]
        supersingular: bool,
        /// Keep only products of factors of genus at most this.
        #[arg(long)]
        compose_max_genus: Option<usize>,
    },
    /// Local invariants of one or two binary forms.
    Forms {
        /// Gram entries g11,g12,g22.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        f1: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        f2: Vec<String>,
        /// Places, e.g. real,2,3,5.
        #[arg(long, value_delimiter = ',')]
        places: Vec<String>,
        /// JSON payload file.
        #[arg(long, conflicts_with_all = ["f1", "f2", "places"])]
        input: Option<PathBuf>,
    },
    /// Norm membership in Q_p(sqrt d), or the period parity verdict for gap i.
    Norm {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, conflicts_with_all = ["p", "x", "d", "i", "kind"])]
        input: Option<PathBuf>,
    },
    /// Predicted definiteness of q_Z, and a consistency check when q_Z is known.
    Signature {
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        qb: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        qz: Vec<String>,
        /// Primes l != p at which q_B and q_Z must agree.
        #[arg(long, value_delimiter = ',')]
        witness: Vec<u64>,
        #[arg(long, conflicts_with_all = ["i", "p", "kind", "d", "qb", "qz", "witness"])]
        input: Option<PathBuf>,
    },
    /// Newton slopes of a Weil polynomial of any degree.
    Slopes {
        #[command(flatten)]
        record: RecordArgs,
    },
    /// Number of Tate classes in codimension n.
    Tate {
        #[command(flatten)]
        record: RecordArgs,
        #[arg(long)]
        n: usize,
    },
    /// Parse and validate a file of Weil records.
    Ingest { path: PathBuf },
    /// Recompute the reference constants.
    Selftest,
}

/// What a run produced: the text for the output sink, diagnostics for
/// stderr, and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn record_payload(r: &RecordArgs) -> CliResult<Value> {
    let q = r.q.ok_or_else(|| CliError::Usage("--q is required".into()))?;
    if r.coeffs.is_empty() {
        return Err(CliError::Usage("--coeffs is required".into()));
    }
    Ok(serde_json::to_value(WeilRecord { label: r.label.clone(), q, p: None, coeffs: r.coeffs.clone() })
        .expect("records serialize"))
}

fn read_json(path: &PathBuf) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn num(s: &str) -> Value {
    match s.trim().parse::<i64>() {
        Ok(n) => json!(n),
        Err(_) => json!(s.trim()),
    }
}

fn gram(entries: &[String], flag: &str) -> CliResult<Option<Value>> {
    match entries.len() {
        0 => Ok(None),
        3 => Ok(Some(Value::Array(entries.iter().map(|s| num(s)).collect()))),
        n => Err(CliError::Usage(format!("--{flag} takes three entries g11,g12,g22, got {n}"))),
    }
}

fn insert(obj: &mut Value, key: &str, v: Option<Value>) {
    if let Some(v) = v {
        obj[key] = v;
    }
}

/// The command name and its payload.
fn payload(cmd: &Command) -> CliResult<(&'static str, Value)> {
    Ok(match cmd {
        Command::Analyze { input: Some(path), .. } => {
            let report = ingest_lmfdb(path)?;
            if let Some(r) = report.rejects.first() {
                return Err(CliError::Input(format!("{}: line {}: {}", path.display(), r.line, r.reason)));
            }
            ("analyze", json!({ "records": report.records }))
        }
        Command::Analyze { record, input: None } => ("analyze", record_payload(record)?),
        Command::Enumerate { q, g, ordinary, supersingular, compose_max_genus } => (
            "enumerate",
            json!({
                "q": q, "g": g, "ordinary": ordinary, "supersingular": supersingular,
                "compose_max_genus": compose_max_genus,
            }),
        ),
        Command::Forms { input: Some(path), .. } => ("forms", read_json(path)?),
        Command::Forms { f1, f2, places, input: None } => {
            let mut v = json!({ "f1": gram(f1, "f1")?.ok_or_else(|| CliError::Usage("--f1 is required".into()))? });
            insert(&mut v, "f2", gram(f2, "f2")?);
            if !places.is_empty() {
                v["places"] = json!(places);
            }
            ("forms", v)
        }
        Command::Norm { input: Some(path), .. } => ("norm", read_json(path)?),
        Command::Norm { p, x, d, i, kind, input: None } => {
            let mut v = json!({});
            insert(&mut v, "p", p.map(|p| json!(p)));
            insert(&mut v, "x", x.as_deref().map(num));
            insert(&mut v, "d", d.as_deref().map(num));
            insert(&mut v, "i", i.map(|i| json!(i)));
            insert(&mut v, "kind", kind.as_ref().map(|k| json!(k)));
            ("norm", v)
        }
        Command::Signature { input: Some(path), .. } => ("signature", read_json(path)?),
        Command::Signature { i, p, kind, d, qb, qz, witness, input: None } => {
            let i = i.ok_or_else(|| CliError::Usage("--i is required".into()))?;
            let mut v = json!({ "i": i, "witnesses": witness });
            insert(&mut v, "p", p.map(|p| json!(p)));
            insert(&mut v, "kind", kind.as_ref().map(|k| json!(k)));
            insert(&mut v, "d", d.as_deref().map(num));
            insert(&mut v, "qb", gram(qb, "qb")?);
            insert(&mut v, "qz", gram(qz, "qz")?);
            ("signature", v)
        }
        Command::Slopes { record } => ("slopes", record_payload(record)?),
        Command::Tate { record, n } => {
            let mut v = record_payload(record)?;
            v["n"] = json!(n);
            ("tate", v)
        }
        Command::Ingest { path } => ("ingest", json!({ "path": path })),
        Command::Selftest => ("selftest", json!({})),
    })
}

/// Rendered output, the status it carries, and the exit code.
struct Rendered {
    text: String,
    code: i32,
}

fn execute(command: &str, payload: &Value, cfg: &Config) -> CliResult<Rendered> {
    use commands::*;
    let doc = |status: Status, result: Value| Rendered {
        text: doc::render(&doc::success(command, status, result)),
        code: status.exit_code(),
    };
    Ok(match command {
        "analyze" if payload.get("records").is_some() => {
            let batch: AnalyzeBatch = parse_payload(command, payload)?;
            let (result, status, code) = analyze_batch(&batch, cfg);
            Rendered { code, ..doc(status, result) }
        }
        "analyze" => {
            let rec: WeilRecord = parse_payload(command, payload)?;
            let (result, status) = analyze_record(&rec, cfg)?;
            doc(status, result)
        }
        "enumerate" => {
            let pl: EnumeratePayload = parse_payload(command, payload)?;
            let lines: Vec<Value> = enumerate_records(&pl, cfg)?
                .into_iter()
                .map(|r| serde_json::to_value(r).expect("records serialize"))
                .collect();
            Rendered { text: doc::render_lines(&lines), code: 0 }
        }
        "forms" => doc(Status::Ok, forms(&parse_payload::<FormsPayload>(command, payload)?)?),
        "norm" => doc(Status::Ok, norm(&parse_payload::<NormPayload>(command, payload)?)?),
        "signature" => doc(Status::Ok, signature(&parse_payload::<SignaturePayload>(command, payload)?)?),
        "slopes" => doc(Status::Ok, slopes(&parse_payload::<WeilRecord>(command, payload)?)?),
        "tate" => doc(Status::Ok, tate(&parse_payload::<TatePayload>(command, payload)?, cfg)?),
        "ingest" => doc(Status::Ok, ingest(&parse_payload::<IngestPayload>(command, payload)?)?),
        "selftest" => {
            let (result, status) = selftest(cfg)?;
            doc(status, result)
        }
        other => return Err(CliError::Usage(format!("unknown command {other}"))),
    })
}

/// Config entries that can change a result; part of every cache key.
fn cache_payload(command: &str, payload: &Value, cfg: &Config) -> Value {
    json!({
        "command": command,
        "payload": payload,
        "precision": cfg.precision,
        "enumeration": cfg.enumeration,
        "report": cfg.report,
    })
}

fn resolve_config(g: &GlobalArgs) -> CliResult<Config> {
    let mut cfg = Config::load(g.config.as_deref())?;
    if let Some(b) = g.precision_bits {
        cfg.precision.initial_bits = b;
    }
    if let Some(m) = g.max_escalations {
        cfg.precision.max_escalations = m;
    }
    if g.jobs.is_some() {
        cfg.jobs = g.jobs;
    }
    if g.cache_dir.is_some() {
        cfg.cache_dir = g.cache_dir.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run_command(cli: &Cli, cfg: &Config) -> CliResult<Rendered> {
    let (command, payload) = payload(&cli.command)?;
    // Files may change under the same path, so ingestion is never cached.
    let cacheable =
        !matches!(command, "ingest" | "selftest") && !matches!(cli.command, Command::Analyze { input: Some(_), .. });
    let cache = match (&cfg.cache_dir, cacheable) {
        (Some(dir), true) => Some(Cache::new(dir)?),
        _ => None,
    };
    let key = cache::key(command, &cache_payload(command, &payload, cfg));
    if let Some(text) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(Rendered { text, code: 0 });
    }
    let work = || execute(command, &payload, cfg);
    let out = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))?
            .install(work)?,
        None => work()?,
    };
    if let (Some(c), 0) = (&cache, out.code) {
        c.put(&key, &out.text)?;
    }
    Ok(out)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Analyze { .. } => "analyze",
        Command::Enumerate { .. } => "enumerate",
        Command::Forms { .. } => "forms",
        Command::Norm { .. } => "norm",
        Command::Signature { .. } => "signature",
        Command::Slopes { .. } => "slopes",
        Command::Tate { .. } => "tate",
        Command::Ingest { .. } => "ingest",
        Command::Selftest => "selftest",
    }
}

/// Parses arguments and runs one command. With `--output` the document goes
/// to that file and `stdout` is left empty.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let name = command_name(&cli.command);
    let result = resolve_config(&cli.global).and_then(|cfg| run_command(&cli, &cfg));
    let (text, code, stderr) = match result {
        Ok(r) => (r.text, r.code, String::new()),
        Err(e) => (doc::render(&doc::failure(name, &e)), e.exit_code(), format!("error: {e}\n")),
    };
    match cli.global.output.as_ref().filter(|p| p.as_os_str() != "-") {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { stdout: String::new(), stderr, code },
            Err(e) => {
                let e = CliError::Io(format!("{}: {e}", path.display()));
                Outcome { stdout: text, stderr: format!("{stderr}error: {e}\n"), code: e.exit_code() }
            }
        },
        None => Outcome { stdout: text, stderr, code },
    }
}
