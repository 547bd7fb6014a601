//! The `ktree` command line.
//!
//! Exit codes are stable: 0 ok, 1 I/O failure, 2 bad input or arguments,
//! 3 `reduce --check-minimal` found a non-minimal output, 4 input is not a
//! k-tree, 5 not k-edge-connected, 6 insensitive edges present.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ktree_core::{
    build_ktree, edge_connectivity, enumerate_cliques, generate, is_minimally_k_edge_connected,
    recognize_ktree, reduce_k_tree, reduce_two_tree, ConnectivityVerdict, Edge, Family, GenSpec,
    Minimality, Mode, ReductionError,
};

use crate::bench::{format_table, run_bench};
use crate::dot::to_dot;
use crate::format::{parse_graph_file, write_graph_file, write_report, write_trace, GraphFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_MINIMAL: i32 = 3;
pub const EXIT_NOT_KTREE: i32 = 4;
pub const EXIT_NOT_CONNECTED: i32 = 5;
pub const EXIT_INSENSITIVE: i32 = 6;

const AFTER_HELP: &str = "\
Vertex ids in every file are 0-based: the k-tree vertex with recursive label j \
(labels starting at 1) is written as j-1.

Graph files: a header line `n m k` (k = 0 when the file makes no k-tree claim) \
followed by m lines `u v` with u < v, sorted.

Exit codes: 0 ok, 1 I/O error, 2 parse or argument error, 3 output not minimal \
(reduce --check-minimal), 4 not a k-tree, 5 not k-edge-connected, 6 insensitive \
edges present.";

#[derive(Debug, Parser)]
#[command(name = "ktree", version, about = "Build, recognize and reduce k-trees", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    Random,
    Book,
    Path,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgorithmArg {
    /// Remove every edge in more than one triangle (k = 2 only).
    Tri,
    /// Remove edges between vertices of degree at least k + 1.
    Degree,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    PaperFaithful,
    Verified,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a k-tree and write its graph file and construction trace.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Graph file to write (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Trace file to write (defaults to `<out>.trace` when --out is given).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check that a graph is a k-tree and print a construction trace.
    Recognize {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a k-tree to a minimally k-edge-connected graph.
    Reduce {
        input: PathBuf,
        /// Defaults to the k in the file header.
        #[arg(long)]
        k: Option<usize>,
        /// Defaults to `tri` for k = 2 and `degree` otherwise.
        #[arg(long, value_enum)]
        algorithm: Option<AlgorithmArg>,
        /// Only used by the degree algorithm.
        #[arg(long, value_enum, default_value = "paper-faithful")]
        mode: ModeArg,
        /// Run the minimality oracle on the output; exit 3 if it fails.
        #[arg(long)]
        check_minimal: bool,
        /// Reduced graph file (not written when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report file (stdout when absent).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide whether a graph is minimally k-edge-connected.
    Verify {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print the edge connectivity and a minimum cut.
    Cut { input: PathBuf },
    /// Count and list the cliques of a given size.
    Cliques {
        input: PathBuf,
        #[arg(long)]
        size: usize,
    },
    /// Export a graph as Graphviz DOT.
    Dot {
        input: PathBuf,
        /// Stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time generation plus paper-faithful degree reduction for several n.
    Bench {
        #[arg(long)]
        k: usize,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            code
        }
    }
}

pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "ktree: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Outcome {
    match command {
        Command::Gen {
            family,
            n,
            k,
            seed,
            out,
            trace,
        } => cmd_gen(family, n, k, seed, out, trace, stdout),
        Command::Recognize { input, k, out } => cmd_recognize(&input, k, out, stdout),
        Command::Reduce {
            input,
            k,
            algorithm,
            mode,
            check_minimal,
            out,
            report,
        } => cmd_reduce(
            &input,
            k,
            algorithm,
            mode,
            check_minimal,
            out,
            report,
            stdout,
        ),
        Command::Verify { input, k } => cmd_verify(&input, k, stdout),
        Command::Cut { input } => cmd_cut(&input, stdout),
        Command::Cliques { input, size } => cmd_cliques(&input, size, stdout),
        Command::Dot { input, out } => cmd_dot(&input, out, stdout),
        Command::Bench {
            k,
            n,
            seed,
            repeats,
        } => cmd_bench(k, &n, seed, repeats, stdout),
    }
}

fn read_graph(path: &Path) -> Result<GraphFile, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    parse_graph_file(&text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| fail(EXIT_IO, format!("cannot write {}: {e}", path.display())))
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| fail(EXIT_IO, e.to_string()))
}

fn resolve_k(flag: Option<usize>, file: &GraphFile) -> Result<usize, Failure> {
    match flag {
        Some(k) if k > 0 => Ok(k),
        Some(_) => Err(fail(EXIT_PARSE, "k must be positive")),
        None if file.k > 0 => Ok(file.k),
        None => Err(fail(
            EXIT_PARSE,
            "k not given: pass --k or set it in the file header",
        )),
    }
}

fn cmd_gen(
    family: FamilyArg,
    n: usize,
    k: usize,
    seed: u64,
    out: Option<PathBuf>,
    trace_path: Option<PathBuf>,
    stdout: &mut dyn Write,
) -> Outcome {
    let family = match family {
        FamilyArg::Random => Family::Random,
        FamilyArg::Book => Family::Book,
        FamilyArg::Path => Family::Path,
    };
    let trace =
        generate(&GenSpec { n, k, seed, family }).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let graph = build_ktree(&trace).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let graph_text = write_graph_file(&graph, k);
    let trace_path = trace_path.or_else(|| {
        out.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(".trace");
            PathBuf::from(s)
        })
    });
    match &out {
        Some(path) => write_file(path, &graph_text)?,
        None => emit(stdout, &graph_text)?,
    }
    if let Some(path) = trace_path {
        write_file(&path, &write_trace(&trace))?;
    }
    Ok(EXIT_OK)
}

fn cmd_recognize(
    input: &Path,
    k: Option<usize>,
    out: Option<PathBuf>,
    stdout: &mut dyn Write,
) -> Outcome {
    let file = read_graph(input)?;
    let k = resolve_k(k, &file)?;
    let trace = recognize_ktree(&file.graph, k)
        .map_err(|e| fail(EXIT_NOT_KTREE, format!("not a {k}-tree: {e}")))?;
    let text = write_trace(&trace);
    match out {
        Some(path) => write_file(&path, &text)?,
        None => emit(stdout, &text)?,
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_reduce(
    input: &Path,
    k: Option<usize>,
    algorithm: Option<AlgorithmArg>,
    mode: ModeArg,
    check_minimal: bool,
    out: Option<PathBuf>,
    report_path: Option<PathBuf>,
    stdout: &mut dyn Write,
) -> Outcome {
    let file = read_graph(input)?;
    let k = resolve_k(k, &file)?;
    let algorithm = algorithm.unwrap_or(if k == 2 {
        AlgorithmArg::Tri
    } else {
        AlgorithmArg::Degree
    });
    let mode = match mode {
        ModeArg::PaperFaithful => Mode::PaperFaithful,
        ModeArg::Verified => Mode::Verified,
    };
    let result = match algorithm {
        AlgorithmArg::Tri if k != 2 => {
            return Err(fail(
                EXIT_PARSE,
                format!("--algorithm tri needs k = 2, got k = {k}"),
            ))
        }
        AlgorithmArg::Tri => reduce_two_tree(&file.graph),
        AlgorithmArg::Degree => reduce_k_tree(&file.graph, k, mode),
    };
    let (graph, mut report) = result.map_err(|e| match e {
        ReductionError::NotKTree { .. } => fail(EXIT_NOT_KTREE, e.to_string()),
        _ => fail(EXIT_PARSE, e.to_string()),
    })?;

    let mut code = EXIT_OK;
    if check_minimal {
        let verdict = report
            .record_minimality(&graph)
            .map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
        if !verdict.is_minimal() {
            code = EXIT_NOT_MINIMAL;
        }
    }
    if let Some(path) = &out {
        write_file(path, &write_graph_file(&graph, k))?;
    }
    let text = write_report(&report);
    match &report_path {
        Some(path) => write_file(path, &text)?,
        None => emit(stdout, &text)?,
    }
    if code == EXIT_NOT_MINIMAL {
        return Err(fail(
            code,
            "reduced graph is not minimally k-edge-connected",
        ));
    }
    Ok(code)
}

fn edge_list(edges: &[Edge]) -> String {
    edges
        .iter()
        .map(Edge::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_verify(input: &Path, k: Option<usize>, stdout: &mut dyn Write) -> Outcome {
    let file = read_graph(input)?;
    let k = resolve_k(k, &file)?;
    let verdict = is_minimally_k_edge_connected(&file.graph, k)
        .map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let (line, code) = match verdict {
        Minimality::Minimal => ("minimal".to_string(), EXIT_OK),
        Minimality::NotKEdgeConnected(cut) => (
            format!("not-k-edge-connected (cut: {})", edge_list(&cut.cut_edges)),
            EXIT_NOT_CONNECTED,
        ),
        Minimality::InsensitiveEdges(edges) => (
            format!("insensitive-edges: {}", edge_list(&edges)),
            EXIT_INSENSITIVE,
        ),
    };
    emit(stdout, &format!("{line}\n"))?;
    Ok(code)
}

fn cmd_cut(input: &Path, stdout: &mut dyn Write) -> Outcome {
    let file = read_graph(input)?;
    let text = match edge_connectivity(&file.graph) {
        ConnectivityVerdict::Unbounded => "lambda=inf\n".to_string(),
        ConnectivityVerdict::Finite { lambda, witness } => {
            let side = witness
                .side
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            let mut s = format!("lambda={lambda}\nside: {side}\n");
            for e in &witness.cut_edges {
                s.push_str(&format!("edge {} {}\n", e.u(), e.v()));
            }
            s
        }
    };
    emit(stdout, &text)?;
    Ok(EXIT_OK)
}

fn cmd_cliques(input: &Path, size: usize, stdout: &mut dyn Write) -> Outcome {
    let file = read_graph(input)?;
    let cliques = enumerate_cliques(&file.graph, size);
    let mut text = format!("count={}\n", cliques.len());
    for c in &cliques {
        text.push_str(&c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
        text.push('\n');
    }
    emit(stdout, &text)?;
    Ok(EXIT_OK)
}

fn cmd_dot(input: &Path, out: Option<PathBuf>, stdout: &mut dyn Write) -> Outcome {
    let file = read_graph(input)?;
    let text = to_dot(&file.graph, "G");
    match out {
        Some(path) => write_file(&path, &text)?,
        None => emit(stdout, &text)?,
    }
    Ok(EXIT_OK)
}

fn cmd_bench(
    k: usize,
    sizes: &[usize],
    seed: u64,
    repeats: usize,
    stdout: &mut dyn Write,
) -> Outcome {
    let rows = run_bench(k, sizes, seed, repeats).map_err(|e| fail(EXIT_PARSE, e))?;
    emit(stdout, &format_table(&rows))?;
    Ok(EXIT_OK)
}
