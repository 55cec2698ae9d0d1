//! `infgon`: create and flip triangulations of the ∞-gon, render windows and
//! quivers, run verification suites, and start the HTTP service.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use infgon::window::set_window_budget;
use infgon::{
    build_exchange_quiver, quantum_mutate, render_ascii, render_svg, run_suite, BaseFamily, ClusterState, Edge, Suite,
    TriangulationDesc, VerifyOptions,
};
use infgon_service::{serve, ServiceConfig, DEFAULT_WINDOW};
use serde_json::json;

const DEFAULT_DESC: &str = "triangulation.json";

#[derive(Parser)]
#[command(name = "infgon", version, about = "Triangulations of the ∞-gon and their cluster structures")]
struct Cli {
    /// Overrides the window materialization budget.
    #[arg(long, env = "INFGON_BUDGET", global = true)]
    budget: Option<i64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a descriptor file and report its classification.
    New(NewArgs),
    /// Flip arcs in a descriptor file, logging one exchange relation per flip.
    Flip(FlipArgs),
    /// Render a window of the triangulation.
    Show(ShowArgs),
    /// Print the exchange quiver of a window.
    Quiver(QuiverArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Start the HTTP service.
    Serve(ServeArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("base").required(true))]
struct NewArgs {
    #[arg(long, group = "base", value_name = "K", allow_negative_numbers = true)]
    fountain: Option<i64>,
    #[arg(long, group = "base", value_name = "C", allow_negative_numbers = true)]
    leapfrog: Option<i64>,
    #[arg(long, group = "base", num_args = 2, value_names = ["L", "R"], allow_negative_numbers = true)]
    split: Option<Vec<i64>>,
    /// A JSON descriptor, inline or as a file path.
    #[arg(long, group = "base", value_name = "JSON|FILE")]
    spec: Option<String>,
    /// Arcs to remove from the base family.
    #[arg(long = "remove", value_name = "I,J")]
    removed: Vec<Edge>,
    /// Arcs to add to the base family.
    #[arg(long = "add", value_name = "I,J")]
    added: Vec<Edge>,
    #[arg(short, long, default_value = DEFAULT_DESC)]
    out: PathBuf,
}

#[derive(Args)]
struct FlipArgs {
    #[arg(required = true, value_name = "I,J")]
    arcs: Vec<Edge>,
    /// Also log the quantum exchange relation.
    #[arg(long)]
    quantum: bool,
    #[arg(short, long, default_value = DEFAULT_DESC)]
    desc: PathBuf,
    /// Where to write the result; defaults to updating the descriptor file.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WindowArg {
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    window: Option<Vec<i64>>,
}

impl WindowArg {
    fn bounds(&self) -> (i64, i64) {
        match self.window.as_deref() {
            Some(&[a, b]) => (a, b),
            _ => DEFAULT_WINDOW,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowFormat {
    Ascii,
    Svg,
    Json,
}

#[derive(Args)]
struct ShowArgs {
    #[arg(short, long, default_value = DEFAULT_DESC)]
    desc: PathBuf,
    #[command(flatten)]
    window: WindowArg,
    #[arg(long, value_enum, default_value = "ascii")]
    format: ShowFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct QuiverArgs {
    #[arg(short, long, default_value = DEFAULT_DESC)]
    desc: PathBuf,
    #[command(flatten)]
    window: WindowArg,
    #[arg(long, value_enum, default_value = "dot")]
    format: QuiverFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Intensity {
    Quick,
    Standard,
    Thorough,
}

impl Intensity {
    fn cases(self) -> usize {
        match self {
            Intensity::Quick => 10,
            Intensity::Standard => 50,
            Intensity::Thorough => 500,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Figures,
    Compat,
    Quantum,
    Flips,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Figures => Suite::Figures,
            SuiteArg::Compat => Suite::Compat,
            SuiteArg::Quantum => Suite::Quantum,
            SuiteArg::Flips => Suite::Flips,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    #[command(flatten)]
    window: WindowArg,
    /// Sweep indices over [-N, N].
    #[arg(long, default_value_t = 4)]
    range: i64,
    #[arg(long, value_enum, default_value = "standard")]
    intensity: Intensity,
    /// Random cases per check; overrides the intensity.
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long, default_value = "127.0.0.1:8080")]
    addr: SocketAddr,
    /// Idle session lifetime in seconds.
    #[arg(long, default_value_t = 3600)]
    ttl: u64,
    #[arg(long)]
    snapshot_dir: Option<PathBuf>,
}

/// Everything that is not a verification failure exits with status 2.
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<ExitCode, UsageError>;

/// Arcs like `-3,-1` would otherwise look like flags; `[-3,-1]` is the same arc.
fn bracket_negative_arcs(arg: String) -> String {
    let is_arc = arg
        .strip_prefix('-')
        .and_then(|rest| rest.split_once(','))
        .is_some_and(|(l, r)| l.parse::<u64>().is_ok() && r.parse::<i64>().is_ok());
    if is_arc {
        format!("[{arg}]")
    } else {
        arg
    }
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) -> Result<(), UsageError> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(std::env::args().map(bracket_negative_arcs));
    if let Some(b) = cli.budget {
        set_window_budget(b);
    }
    let run = match cli.command {
        Command::New(a) => cmd_new(a),
        Command::Flip(a) => cmd_flip(a),
        Command::Show(a) => cmd_show(a),
        Command::Quiver(a) => cmd_quiver(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Serve(a) => cmd_serve(a),
    };
    run.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn read_desc(path: &Path) -> Result<TriangulationDesc, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn write_desc(path: &Path, t: &TriangulationDesc) -> Result<(), UsageError> {
    let text = serde_json::to_string_pretty(t)? + "\n";
    std::fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn cmd_new(a: NewArgs) -> CmdResult {
    let base = if let Some(k) = a.fountain {
        TriangulationDesc::fountain(k)
    } else if let Some(c) = a.leapfrog {
        TriangulationDesc::leapfrog(c)
    } else if let Some(lr) = a.split {
        TriangulationDesc::from_base(BaseFamily::Split { l: lr[0], r: lr[1] })?
    } else {
        let spec = a.spec.expect("one base is required");
        let text = if Path::new(&spec).is_file() { std::fs::read_to_string(&spec)? } else { spec };
        serde_json::from_str(&text).map_err(|e| UsageError(format!("descriptor: {e}")))?
    };
    let mut removed: BTreeSet<Edge> = base.removed().clone();
    let mut added: BTreeSet<Edge> = base.added().clone();
    removed.extend(a.removed);
    added.extend(a.added);
    let t = TriangulationDesc::new(base.base(), removed, added)?;
    t.validate()?;
    write_desc(&a.out, &t)?;
    println!("{}", t.classify());
    if let Some(bridge) = t.bridge() {
        println!("frozen bridge {bridge}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_flip(a: FlipArgs) -> CmdResult {
    let mut state = ClusterState::new(read_desc(&a.desc)?);
    for arc in a.arcs {
        let quantum = if a.quantum { Some(quantum_mutate(&state.desc, arc)?) } else { None };
        let (next, relation) = state.exchange_flip(arc)?;
        let mut log = format!("flip {arc} -> {}\n  {relation}\n", relation.new_label().edge()?);
        if let Some(q) = quantum {
            log += &format!("  {}\n", q.relation);
        }
        emit(&log)?;
        state = next;
    }
    write_desc(a.out.as_deref().unwrap_or(&a.desc), &state.desc)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_show(a: ShowArgs) -> CmdResult {
    let t = read_desc(&a.desc)?;
    let (lo, hi) = a.window.bounds();
    match a.format {
        ShowFormat::Ascii => emit(&render_ascii(&t, lo, hi)?)?,
        ShowFormat::Svg => emit(&(render_svg(&t, lo, hi)? + "\n"))?,
        ShowFormat::Json => {
            let arcs: Vec<_> =
                t.arcs_in_window(lo, hi)?.into_iter().map(|e| json!({ "arc": e, "frozen": t.is_frozen(e) })).collect();
            let view = json!({
                "a": lo,
                "b": hi,
                "class": t.classify().to_string(),
                "bridge": t.bridge(),
                "arcs": arcs,
            });
            emit(&(serde_json::to_string_pretty(&view)? + "\n"))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_quiver(a: QuiverArgs) -> CmdResult {
    let t = read_desc(&a.desc)?;
    let (lo, hi) = a.window.bounds();
    let q = build_exchange_quiver(&t, lo, hi)?;
    match a.format {
        QuiverFormat::Dot => emit(&q.to_dot())?,
        QuiverFormat::Json => emit(&(serde_json::to_string_pretty(&q.to_json())? + "\n"))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let defaults = VerifyOptions::default();
    let opts = VerifyOptions {
        window: a.window.window.as_deref().map_or(defaults.window, |w| (w[0], w[1])),
        range: a.range,
        cases: a.cases.unwrap_or(a.intensity.cases()),
        seed: a.seed,
    };
    let report = run_suite(a.suite.into(), &opts);
    emit(&(serde_json::to_string_pretty(&report)? + "\n"))?;
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_serve(a: ServeArgs) -> CmdResult {
    let config = ServiceConfig { ttl: Duration::from_secs(a.ttl), snapshot_dir: a.snapshot_dir };
    let rt = tokio::runtime::Runtime::new()?;
    eprintln!("listening on http://{}", a.addr);
    rt.block_on(serve(a.addr, config))?;
    Ok(ExitCode::SUCCESS)
}
