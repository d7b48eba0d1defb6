//! The `distchrom` command line: solve, certify, classify, roots, sweep and
//! enum over graph6 input.
//!
//! Exit codes are a stable scripting contract: 0 success, 1
//! certify-negative, 2 input error, 3 capability exceeded, 10 theorem
//! violation (the falsification signal). stdout carries one machine-parseable
//! `key=value` line per graph; human summaries go to stderr.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::constructive;
use crate::corpus::{self, SweepOptions, SweepSummary, TheoremId, TheoremSpec};
use crate::error::Error;
use crate::exact;
use crate::graph::{class_profile, parse_graph6, write_graph6_string, Graph};
use crate::symmetry::{self, Colouring};

/// Environment variable overriding the sweep cache directory. When unset,
/// sweeps run uncached.
pub const CACHE_ENV: &str = "DISTCHROM_CACHE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFY_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;
pub const EXIT_VIOLATION: i32 = 10;

#[derive(Parser)]
#[command(name = "distchrom", version, about = "Distinguishing chromatic numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants and the exact distinguishing chromatic number.
    Solve {
        /// Feasibility mode: search only for a colouring with at most this
        /// many colours and report `feasible=`.
        #[arg(long)]
        cap: Option<usize>,
        /// Print the witness colouring as vertex:colour pairs.
        #[arg(long)]
        witness: bool,
        /// Read graph6 lines from a file instead of arguments or stdin.
        #[arg(long)]
        file: Option<PathBuf>,
        /// graph6 strings.
        graphs: Vec<String>,
    },
    /// Check a colouring file against a graph; exit 0 iff proper and
    /// distinguishing.
    Certify {
        graph6: String,
        /// File with one `vertex colour` pair per line.
        colouring: PathBuf,
    },
    /// Print class flags and the extremal tag per graph.
    Classify {
        #[arg(long)]
        file: Option<PathBuf>,
        graphs: Vec<String>,
    },
    /// Print a line-graph root per graph, or `not-a-line-graph`.
    Roots {
        #[arg(long)]
        file: Option<PathBuf>,
        graphs: Vec<String>,
    },
    /// Stream one graph6 line per isomorphism class of connected graphs.
    Enum {
        #[arg(long)]
        n: usize,
    },
    /// Run a theorem sweep; exits 10 on any violation.
    Sweep {
        /// Theorem id, e.g. CT-2Delta or ClawDiamondKk.
        #[arg(long)]
        theorem: String,
        /// Clique order for ClawDiamondKk (4 or 5).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "n-max")]
        n_max: usize,
        /// Allow the hours-scale n = 8 sweep.
        #[arg(long)]
        allow_n8: bool,
        /// Write the JSONL report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sweep worker pool size.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// Entry point used by the binary.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version printing through the error.
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Contract(_) | Error::Domain(_) | Error::Io { .. } => EXIT_INPUT,
        Error::Capability(_) => EXIT_CAPABILITY,
        Error::TheoremViolation(_) | Error::Internal(_) => EXIT_VIOLATION,
        Error::Cancelled => EXIT_INPUT,
    }
}

fn dispatch(cli: Cli) -> crate::Result<i32> {
    match cli.command {
        Command::Solve {
            cap,
            witness,
            file,
            graphs,
        } => cmd_solve(cap, witness, gather_inputs(file, graphs)?),
        Command::Certify { graph6, colouring } => cmd_certify(&graph6, &colouring),
        Command::Classify { file, graphs } => cmd_classify(gather_inputs(file, graphs)?),
        Command::Roots { file, graphs } => cmd_roots(gather_inputs(file, graphs)?),
        Command::Enum { n } => cmd_enum(n),
        Command::Sweep {
            theorem,
            k,
            n_max,
            allow_n8,
            out,
            jobs,
        } => cmd_sweep(&theorem, k, n_max, allow_n8, out, jobs),
    }
}

/// Collect graph6 lines from exactly one source: arguments, a file, or
/// stdin. Returns `(line_number, text)` pairs (1-based).
fn gather_inputs(file: Option<PathBuf>, graphs: Vec<String>) -> crate::Result<Vec<(usize, String)>> {
    match (file, graphs.is_empty()) {
        (Some(_), false) => Err(Error::Contract(
            "provide graphs either as arguments or via --file, not both".into(),
        )),
        (Some(path), true) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::io(path.display().to_string(), e))?;
            Ok(number_lines(&text))
        }
        (None, false) => Ok(graphs.into_iter().enumerate().map(|(i, s)| (i + 1, s)).collect()),
        (None, true) => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::io("stdin", e))?;
            Ok(number_lines(&text))
        }
    }
}

fn number_lines(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .collect()
}

fn parse_line(line_no: usize, text: &str) -> crate::Result<Graph> {
    parse_graph6(text.as_bytes()).map_err(|e| match e {
        Error::Parse { offset, msg } => Error::Parse {
            offset,
            msg: format!("line {line_no}: {msg}"),
        },
        other => other,
    })
}

fn witness_field(c: &Colouring) -> String {
    let pairs: Vec<String> = (0..c.n()).map(|v| format!("{v}:{}", c.colour(v))).collect();
    pairs.join(",")
}

fn cmd_solve(cap: Option<usize>, witness: bool, inputs: Vec<(usize, String)>) -> crate::Result<i32> {
    for (line_no, text) in inputs {
        let g = parse_line(line_no, &text)?;
        if !g.is_connected() {
            return Err(Error::Contract(format!(
                "line {line_no}: solve requires connected graphs"
            )));
        }
        let g6 = write_graph6_string(&g)?;
        if let Some(cap) = cap {
            match exact::distinguishing_chromatic_capped(&g, cap, None)? {
                Some(c) => {
                    let mut line = format!("graph6={g6} n={} cap={cap} feasible=true", g.n());
                    if witness {
                        line.push_str(&format!(" witness={}", witness_field(&c)));
                    }
                    println!("{line}");
                }
                None => println!("graph6={g6} n={} cap={cap} feasible=false", g.n()),
            }
            continue;
        }
        let mut solved = exact::distinguishing_chromatic_number(&g)?;
        solved.extremal = Some(constructive::classify_extremal(&g)?);
        let profile = class_profile(&g);
        let mut line = format!(
            "graph6={g6} n={} delta={} chi={} omega={} alpha={} chi_D={} classes={} extremal={}",
            g.n(),
            solved.delta,
            solved.chi,
            solved.omega,
            solved.alpha,
            solved.chi_d,
            profile.flag_names().join(","),
            solved.extremal.as_ref().expect("just set").render(),
        );
        if witness {
            line.push_str(&format!(" witness={}", witness_field(&solved.witness)));
        }
        println!("{line}");
    }
    Ok(EXIT_OK)
}

fn cmd_certify(graph6: &str, colouring_path: &PathBuf) -> crate::Result<i32> {
    let g = parse_line(1, graph6)?;
    let text = std::fs::read_to_string(colouring_path)
        .map_err(|e| Error::io(colouring_path.display().to_string(), e))?;
    let mut colours: Vec<Option<u32>> = vec![None; g.n()];
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (v, c) = match (it.next(), it.next(), it.next()) {
            (Some(v), Some(c), None) => (v, c),
            _ => {
                return Err(Error::Parse {
                    offset: i + 1,
                    msg: format!("colouring line {}: expected 'vertex colour'", i + 1),
                })
            }
        };
        let v: usize = v.parse().map_err(|_| Error::Parse {
            offset: i + 1,
            msg: format!("colouring line {}: bad vertex '{v}'", i + 1),
        })?;
        let c: u32 = c.parse().map_err(|_| Error::Parse {
            offset: i + 1,
            msg: format!("colouring line {}: bad colour '{c}'", i + 1),
        })?;
        if v >= g.n() {
            return Err(Error::Contract(format!(
                "colouring names vertex {v} but the graph has {} vertices",
                g.n()
            )));
        }
        if colours[v].replace(c).is_some() {
            return Err(Error::Contract(format!("vertex {v} coloured twice")));
        }
    }
    let missing: Vec<usize> = colours
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_none())
        .map(|(v, _)| v)
        .collect();
    if !missing.is_empty() {
        return Err(Error::Contract(format!(
            "colouring is partial: vertices {missing:?} are uncoloured"
        )));
    }
    let c = Colouring::new(colours.into_iter().map(|c| c.unwrap()).collect())?;
    let proper = symmetry::is_proper(&g, &c)?;
    let report = symmetry::automorphisms(&g, Some(&c))?;
    let distinguishing = proper && report.order == 1;
    if distinguishing {
        println!("proper=true distinguishing=true aut_order=1");
        Ok(EXIT_OK)
    } else {
        let fixed: Vec<String> = report.fixed.iter().map(|v| v.to_string()).collect();
        let fixed = if fixed.is_empty() { "-".to_string() } else { fixed.join(",") };
        println!(
            "proper={proper} distinguishing=false aut_order={} fixed={fixed}",
            report.order
        );
        Ok(EXIT_CERTIFY_NEGATIVE)
    }
}

fn cmd_classify(inputs: Vec<(usize, String)>) -> crate::Result<i32> {
    for (line_no, text) in inputs {
        let g = parse_line(line_no, &text)?;
        let profile = class_profile(&g);
        let extremal = if g.is_connected() {
            constructive::classify_extremal(&g)?.render()
        } else {
            "disconnected".to_string()
        };
        println!(
            "graph6={} classes={} extremal={extremal}",
            write_graph6_string(&g)?,
            profile.flag_names().join(","),
        );
    }
    Ok(EXIT_OK)
}

fn cmd_roots(inputs: Vec<(usize, String)>) -> crate::Result<i32> {
    for (line_no, text) in inputs {
        let g = parse_line(line_no, &text)?;
        let root = constructive::line_root(&g)?;
        match root {
            Some(h) => println!(
                "graph6={} root={}",
                write_graph6_string(&g)?,
                write_graph6_string(&h)?
            ),
            None => println!("graph6={} root=not-a-line-graph", write_graph6_string(&g)?),
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enum(n: usize) -> crate::Result<i32> {
    for g in corpus::enumerate_connected(n)? {
        println!("{}", write_graph6_string(&g)?);
    }
    Ok(EXIT_OK)
}

fn cmd_sweep(
    theorem: &str,
    k: Option<usize>,
    n_max: usize,
    allow_n8: bool,
    out: Option<PathBuf>,
    jobs: Option<usize>,
) -> crate::Result<i32> {
    let id = TheoremId::parse(theorem).ok_or_else(|| {
        Error::Contract(format!(
            "unknown theorem '{theorem}'; known: {}",
            TheoremId::ALL
                .iter()
                .map(|t| t.id_str())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })?;
    let spec = TheoremSpec::new(id, k)?;
    let cache_dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let opts = SweepOptions {
        n_max,
        allow_n8,
        jobs,
        cache_dir,
    };
    let records = corpus::run_sweep(&spec, &opts)?;
    let header = corpus::ReportHeader::new(id.id_str(), n_max);
    match &out {
        Some(path) => corpus::write_report_with_header(path, &header, &records)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            use std::io::Write;
            serde_json::to_writer(&mut lock, &header).map_err(|e| Error::Internal(e.to_string()))?;
            writeln!(lock).map_err(|e| Error::io("stdout", e))?;
            for r in &records {
                serde_json::to_writer(&mut lock, r).map_err(|e| Error::Internal(e.to_string()))?;
                writeln!(lock).map_err(|e| Error::io("stdout", e))?;
            }
        }
    }
    let summary = SweepSummary::from_records(id.id_str(), &records);
    eprintln!("sweep {} n_max={n_max}: {} records, all bounds hold", id.id_str(), summary.records);
    for (n, count) in &summary.per_n {
        eprintln!("  n={n}: {count} graphs");
    }
    if !summary.equality_graph6.is_empty() {
        eprintln!("  equality cases: {}", summary.equality_graph6.join(" "));
    }
    if !summary.exception_graph6.is_empty() {
        eprintln!("  exceptions (bound exceeded as stated): {}", summary.exception_graph6.join(" "));
    }
    if let Some(max) = summary.max_constructive_colours {
        eprintln!("  max constructive colours: {max}");
    }
    let hits = corpus::CACHE_HITS.load(std::sync::atomic::Ordering::Relaxed);
    let misses = corpus::CACHE_MISSES.load(std::sync::atomic::Ordering::Relaxed);
    if hits + misses > 0 {
        eprintln!("  cache: {hits} hits, {misses} misses");
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_are_stable() {
        assert_eq!(
            exit_code_for(&Error::Parse {
                offset: 0,
                msg: String::new()
            }),
            EXIT_INPUT
        );
        assert_eq!(exit_code_for(&Error::Contract(String::new())), EXIT_INPUT);
        assert_eq!(exit_code_for(&Error::Domain(String::new())), EXIT_INPUT);
        assert_eq!(exit_code_for(&Error::Capability(String::new())), EXIT_CAPABILITY);
        assert_eq!(
            exit_code_for(&Error::TheoremViolation(String::new())),
            EXIT_VIOLATION
        );
        assert_eq!(exit_code_for(&Error::Internal(String::new())), EXIT_VIOLATION);
    }

    #[test]
    fn line_numbering_skips_blanks() {
        let lines = number_lines("@\n\nA_\n");
        assert_eq!(lines, vec![(1, "@".to_string()), (3, "A_".to_string())]);
    }
}
