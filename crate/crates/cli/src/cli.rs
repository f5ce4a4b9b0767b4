// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use hypercore::bounds::{bound_report, check_core_bounds, BoundReport, LogBound};
use hypercore::filtration::{
    core_to_filtration, filtration_radius, filtration_to_core, validate_filtration,
};
use hypercore::mincore::peel_nm;
use hypercore::oracle::OracleBudget;
use hypercore::propagation::propagate;
use hypercore::reductions::{
    minrep_to_mincore, setcover_to_mincore, setcover_to_mincore_3uniform, threesat_to_mincore_radius,
};
use hypercore::{CoreSet, Distance, Error, Hypergraph};

use crate::format::{self, HceFile, TraceReport};
use crate::parallel::{mincore_parallel, oracle_min_core_parallel, oracle_min_radius_parallel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Result of one invocation: exit code, what goes to stdout and stderr, and
/// the files written.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub files: Vec<PathBuf>,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { code: EXIT_OK, stdout, ..Default::default() }
    }

    fn no(stdout: String) -> Self {
        CommandOutcome { code: EXIT_NO, stdout, ..Default::default() }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CommandOutcome { code, stderr, ..Default::default() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hypercore", version, about = "Minimum cores and their radius in hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a vertex set is a core and print its propagation trace
    CheckCore {
        instance: PathBuf,
        core: PathBuf,
        /// Use the `t` lines of the instance instead of |e| - 1
        #[arg(long)]
        thresholds: bool,
    },
    /// Minimum core by deleting up to `a` edges and peeling
    Mincore {
        instance: PathBuf,
        #[arg(long)]
        max_a: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Degree-one peeling for a core of size n - m
    Peel { instance: PathBuf },
    /// Radius and layers of a core
    Radius { instance: PathBuf, core: PathBuf },
    /// Exhaustive minimum core (or minimum radius over minimum cores)
    Oracle {
        instance: PathBuf,
        #[arg(long)]
        min_radius: bool,
        /// Largest vertex count accepted [default: 18, or 12 with --min-radius]
        #[arg(long)]
        budget: Option<usize>,
        /// Largest number of subsets visited
        #[arg(long, default_value_t = 1 << 26)]
        max_subsets: u64,
        #[arg(long)]
        thresholds: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Compile a Set Cover, MINREP or 3-SAT instance into a hypergraph
    Reduce {
        kind: ReduceKind,
        input: PathBuf,
        #[arg(short)]
        k: Option<usize>,
        /// Write the hypergraph here instead of stdout
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Convert between cores and transfer filtrations
    Convert {
        #[command(subcommand)]
        direction: Convert,
    },
    /// Lower bounds on the radius of any core of the given size
    Bounds {
        instance: PathBuf,
        #[arg(long)]
        core_size: usize,
        /// Also check the bounds against this core
        #[arg(long)]
        core: Option<PathBuf>,
    },
    /// Seeded random instance
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        emin: usize,
        #[arg(long)]
        emax: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Convert {
    CoreToFiltration { instance: PathBuf, core: PathBuf },
    FiltrationToCore { instance: PathBuf, filtration: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReduceKind {
    Setcover,
    Setcover3,
    Minrep,
    #[value(name = "3sat")]
    ThreeSat,
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { CommandOutcome::fail(EXIT_INPUT, text) } else { CommandOutcome::ok(text) };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) | Err(outcome) => outcome,
    }
}

type Step<T> = Result<T, CommandOutcome>;

fn read(path: &Path) -> Step<String> {
    std::fs::read_to_string(path).map_err(|e| CommandOutcome::fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, format::ParseError>) -> Step<T> {
    r.map_err(|e| CommandOutcome::fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Step<HceFile> {
    parsed(path, format::parse_hce(&read(path)?))
}

fn load_core(path: &Path, h: &Hypergraph) -> Step<CoreSet> {
    parsed(path, format::parse_vertex_set(&read(path)?, h.n()))
}

/// Library errors in user terms, with 1-based indices.
fn describe(e: &Error) -> String {
    match e {
        Error::VertexOutOfRange { vertex, n } => format!("vertex {} out of range for {n} vertices", vertex + 1),
        Error::EmptyEdge { edge } => format!("edge {} is empty", edge + 1),
        Error::DuplicateVertex { edge, vertex } => format!("edge {} lists vertex {} twice", edge + 1, vertex + 1),
        Error::EdgeOutOfRange { edge, m } => format!("edge {} out of range for {m} edges", edge + 1),
        Error::EdgeTooSmall { edge, size, min } => {
            format!("edge {} has {size} vertices, at least {min} required", edge + 1)
        }
        Error::InvalidThreshold { edge, threshold, size } => {
            format!("threshold {threshold} invalid for edge {} of size {size}", edge + 1)
        }
        Error::InvalidFiltration { condition, position: Some(p) } => {
            format!("filtration violates condition {condition} at position {}", p + 1)
        }
        Error::FoundationCoversEdge { edge } => format!("edge {} lies entirely inside the foundation", edge + 1),
        Error::UndefinedTransferIndex { position } => {
            format!("no transfer index exists for filtration position {}", position + 1)
        }
        Error::MalformedClause { clause } => format!("clause {} is malformed", clause + 1),
        other => other.to_string(),
    }
}

fn code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::NotACore | Error::NoCoreOfSizeNM | Error::NotFoundWithin { .. } => EXIT_NO,
        _ => EXIT_INPUT,
    }
}

fn lib<T>(r: hypercore::Result<T>) -> Step<T> {
    r.map_err(|e| CommandOutcome::fail(code_for(&e), describe(&e)))
}

fn emit(text: String, out: Option<PathBuf>) -> Step<CommandOutcome> {
    match out {
        None => Ok(CommandOutcome::ok(text)),
        Some(path) => {
            std::fs::write(&path, text)
                .map_err(|e| CommandOutcome::fail(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            let mut outcome = CommandOutcome::ok(format!("c wrote {}\n", path.display()));
            outcome.files.push(path);
            Ok(outcome)
        }
    }
}

fn dispatch(command: Command) -> Step<CommandOutcome> {
    match command {
        Command::CheckCore { instance, core, thresholds } => {
            let file = load_instance(&instance)?;
            let c = load_core(&core, &file.hypergraph)?;
            let t = if thresholds { file.thresholds.as_ref() } else { None };
            let trace = lib(propagate(&file.hypergraph, &c, t))?;
            let text = format::write_trace_report(&TraceReport::from_trace(&trace));
            Ok(if trace.verdict { CommandOutcome::ok(text) } else { CommandOutcome::no(text) })
        }
        Command::Radius { instance, core } => {
            let file = load_instance(&instance)?;
            let c = load_core(&core, &file.hypergraph)?;
            let trace = lib(propagate(&file.hypergraph, &c, None))?;
            let text = format::write_trace_report(&TraceReport::from_trace(&trace));
            Ok(if trace.verdict { CommandOutcome::ok(text) } else { CommandOutcome::no(text) })
        }
        Command::Peel { instance } => {
            let h = load_instance(&instance)?.hypergraph;
            match peel_nm(&h) {
                Ok(peel) => {
                    let mut text = format::write_vertex_set(&peel.core);
                    writeln!(text, "radius {}", peel.radius()).unwrap();
                    Ok(CommandOutcome::ok(text))
                }
                Err(Error::NoCoreOfSizeNM) => Ok(CommandOutcome::no("no core of size n-m possible\n".into())),
                Err(e) => Err(CommandOutcome::fail(code_for(&e), describe(&e))),
            }
        }
        Command::Mincore { instance, max_a, jobs } => {
            let h = load_instance(&instance)?.hypergraph;
            match mincore_parallel(&h, max_a, jobs as usize) {
                Ok(r) => {
                    let mut text = format::write_vertex_set(&r.core);
                    writeln!(text, "radius {}", r.radius).unwrap();
                    if r.deleted_edges.is_empty() {
                        text.push_str("deleted\n");
                    } else {
                        writeln!(text, "deleted {}", join(&r.deleted_edges)).unwrap();
                    }
                    Ok(CommandOutcome::ok(text))
                }
                Err(Error::NotFoundWithin { a_max }) => {
                    Ok(CommandOutcome::no(format!("no core found with at most {a_max} deleted edges\n")))
                }
                Err(e) => Err(CommandOutcome::fail(code_for(&e), describe(&e))),
            }
        }
        Command::Oracle { instance, min_radius, budget, max_subsets, thresholds, jobs } => {
            let file = load_instance(&instance)?;
            let t = if thresholds { file.thresholds.as_ref() } else { None };
            let default = if min_radius { OracleBudget::RADIUS_DEFAULT } else { OracleBudget::CORE_DEFAULT };
            let b = OracleBudget { max_vertices: budget.unwrap_or(default.max_vertices), max_subsets };
            let jobs = jobs as usize;
            let text = if min_radius {
                let r = lib(oracle_min_radius_parallel(&file.hypergraph, t, b, jobs))?;
                format!("{}radius {}\n", format::write_vertex_set(&r.witness), r.radius)
            } else {
                let r = lib(oracle_min_core_parallel(&file.hypergraph, t, b, jobs))?;
                format::write_vertex_set(&r.witness)
            };
            Ok(CommandOutcome::ok(text))
        }
        Command::Reduce { kind, input, k, o } => {
            let text = read(&input)?;
            let cert = match kind {
                ReduceKind::Setcover => setcover_to_mincore(&parsed(&input, format::parse_setcover(&text))?),
                ReduceKind::Setcover3 => {
                    setcover_to_mincore_3uniform(&parsed(&input, format::parse_setcover(&text))?)
                }
                ReduceKind::Minrep => minrep_to_mincore(&parsed(&input, format::parse_minrep(&text))?),
                ReduceKind::ThreeSat => {
                    let formula = parsed(&input, format::parse_cnf(&text))?;
                    let Some(k) = k else {
                        return Err(CommandOutcome::fail(EXIT_INPUT, "3sat needs -k <k>"));
                    };
                    lib(threesat_to_mincore_radius(&formula, k))?
                }
            };
            emit(format::write_hce(&cert.instance, None), o)
        }
        Command::Convert { direction: Convert::CoreToFiltration { instance, core } } => {
            let h = load_instance(&instance)?.hypergraph;
            let c = load_core(&core, &h)?;
            let f = lib(core_to_filtration(&h, &c))?;
            let r = lib(filtration_radius(&h, &f))?;
            Ok(CommandOutcome::ok(format!("{}radius {r}\n", format::write_filtration(&f))))
        }
        Command::Convert { direction: Convert::FiltrationToCore { instance, filtration } } => {
            let h = load_instance(&instance)?.hypergraph;
            let f = parsed(&filtration, format::parse_filtration(&read(&filtration)?, &h))?;
            if let Some(v) = lib(validate_filtration(&h, &f))? {
                let at = v.position.map(|p| format!(" at position {}", p + 1)).unwrap_or_default();
                return Ok(CommandOutcome::no(format!("invalid filtration: condition {}{at}\n", v.condition)));
            }
            let c = lib(filtration_to_core(&h, &f))?;
            let r = lib(filtration_radius(&h, &f))?;
            Ok(CommandOutcome::ok(format!("{}radius {r}\n", format::write_vertex_set(&c))))
        }
        Command::Bounds { instance, core_size, core } => {
            let h = load_instance(&instance)?.hypergraph;
            let report = lib(bound_report(&h, core_size))?;
            let mut text = write_bound_report(&report);
            if let Some(path) = core {
                let c = load_core(&path, &h)?;
                let check = lib(check_core_bounds(&h, &c))?;
                writeln!(text, "radius: {}", check.radius).unwrap();
                writeln!(text, "neighbor_holds: {}", check.neighbor_holds).unwrap();
                writeln!(text, "degree_holds: {}", check.degree_holds).unwrap();
                if let (Some(s), Some(w)) = (check.diameter_strict_holds, check.diameter_weak_holds) {
                    writeln!(text, "diameter_strict_holds: {s}").unwrap();
                    writeln!(text, "diameter_weak_holds: {w}").unwrap();
                }
                writeln!(text, "layer_distance_holds: {}", check.layer_distance_holds).unwrap();
                writeln!(text, "all_provable_hold: {}", check.all_provable_hold()).unwrap();
            }
            Ok(CommandOutcome::ok(text))
        }
        Command::Gen { n, m, emin, emax, seed, o } => {
            let h = lib(Hypergraph::generate_random(n, m, emin, emax, seed))?;
            emit(format::write_hce(&h, None), o)
        }
    }
}

fn join(items: &[usize]) -> String {
    items.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn log_lines(out: &mut String, name: &str, b: &LogBound) {
    writeln!(out, "{name}_bound: {:.9}", b.value).unwrap();
    writeln!(out, "{name}_degenerate: {}", b.degenerate).unwrap();
}

pub fn write_bound_report(r: &BoundReport) -> String {
    let mut out = String::new();
    writeln!(out, "n: {}", r.n).unwrap();
    writeln!(out, "core_size: {}", r.core_size).unwrap();
    writeln!(out, "j_neighbors: {}", r.j_neighbors).unwrap();
    writeln!(out, "d_degree: {}", r.d_degree).unwrap();
    log_lines(&mut out, "neighbor", &r.neighbor_bound);
    log_lines(&mut out, "degree", &r.degree_bound);
    match r.diameter {
        Distance::Finite(d) => writeln!(out, "diameter: {d}").unwrap(),
        Distance::Infinite => out.push_str("diameter: infinite\n"),
    }
    match &r.diameter_bound {
        Some(b) => {
            writeln!(out, "diameter_bound: {}", b.value).unwrap();
            writeln!(out, "diameter_guaranteed: {}", b.guaranteed).unwrap();
            writeln!(out, "diameter_strict_guaranteed: {}", b.strict_guaranteed).unwrap();
        }
        None => out.push_str("diameter_bound: none\n"),
    }
    out
}

/// Reads `key: value` lines back into pairs, in order.
pub fn parse_key_values(text: &str) -> Result<Vec<(String, String)>, format::ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| match l.split_once(": ") {
            Some((k, v)) if !k.contains(char::is_whitespace) => Ok((k.to_string(), v.to_string())),
            _ => Err(format::ParseError { line: i + 1, message: "expected 'key: value'".into() }),
        })
        .collect()
}
