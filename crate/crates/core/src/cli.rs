//! The `matchroots` command line.
//!
//! Exit codes: 0 on success or a confirmed claim, 1 when a verification
//! found a counterexample, 2 on usage, parse or I/O errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cache::SpillCache;
use crate::enumerate::{enumerate_graphs, EnumSpec, MAX_ENUMERATION_ORDER};
use crate::error::Error;
use crate::families::{describe, parse_graph_input, recognize_all};
use crate::graph::{read_graph6_stream, Graph};
use crate::matching::{characteristic_polynomial, matching_vector, MatchingVector};
use crate::spectrum::summarize_polynomial;
use crate::verify::{run_selector, Selector, DEFAULT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "matchroots", version, about = "Matching polynomials, root structure and comatching searches")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to one per core. Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matching polynomial, matching vector and maximum matching size.
    Mu {
        /// graph6, a descriptor such as `S(3,5)` or `K_{1,5} + K_3`, `@file` of graph6 lines, or `-` for stdin.
        input: String,
        /// Also print the characteristic polynomial and the forest verdict.
        #[arg(long)]
        charpoly: bool,
    },
    /// Distinct roots, zero multiplicity, isolating intervals and family.
    Classify { input: String },
    /// Non-isomorphic graphs as graph6, one per line.
    Enumerate {
        #[arg(short = 'n', long = "order")]
        order: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        edges: Option<usize>,
        /// Print only the number of classes.
        #[arg(long)]
        count: bool,
    },
    /// Check a claim: classification, tables, appendix, exceptions:<id>, comatching:<input> or all.
    Verify {
        selector: String,
        /// Largest order searched.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write JSON-lines reports to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Omit elapsed_ms so reports compare byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// Whether two inputs are isomorphic.
    Iso { first: String, second: String },
}

/// Failures that end the run with [`EXIT_USAGE`].
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (program name first) and runs the command, writing to the
/// given sinks. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n.max(1));
    }
    let result = match pool.build() {
        Ok(pool) => pool.install(|| dispatch(&cli, out, err)),
        Err(e) => Err(CliError::Usage(e.to_string())),
    };
    match result {
        Ok(code) => code,
        // A closed stdout (e.g. piping into `head`) ends the run quietly.
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> CliResult<i32> {
    let cache = SpillCache::from_env()?;
    match &cli.command {
        Command::Mu { input, charpoly } => {
            let graphs = read_inputs(input)?;
            for (i, (name, g)) in graphs.iter().enumerate() {
                let v = vector(cache.as_ref(), g);
                cmd_mu(cli.format, name, g, &v, *charpoly, graphs.len() > 1 && i > 0, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify { input } => {
            for (name, g) in read_inputs(input)? {
                let v = vector(cache.as_ref(), &g);
                cmd_classify(cli.format, &name, &g, &v, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { order, connected, edges, count } => {
            let mut spec = if *connected { EnumSpec::connected(*order) } else { EnumSpec::all(*order) };
            if let Some(m) = edges {
                spec = spec.with_edges(*m);
            }
            let stream = enumerate_graphs(spec)?;
            if *count {
                let n = stream.count();
                match cli.format {
                    Format::Json => writeln!(out, "{}", json!({ "count": n }))?,
                    _ => writeln!(out, "{n}")?,
                }
            } else {
                for g in stream {
                    let g6 = g.to_graph6()?;
                    match cli.format {
                        Format::Json => writeln!(out, "{}", json!({ "graph6": g6 }))?,
                        _ => writeln!(out, "{g6}")?,
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { selector, cap, report, no_timing } => {
            let selector: Selector = selector.parse()?;
            if *cap > MAX_ENUMERATION_ORDER {
                return Err(Error::OrderCap { order: *cap, cap: MAX_ENUMERATION_ORDER }.into());
            }
            if *cap == MAX_ENUMERATION_ORDER && matches!(selector, Selector::Classification | Selector::All) {
                writeln!(err, "warning: cap {cap} sweeps about twelve million graphs; expect a long run")?;
            }
            let mut reports = run_selector(&selector, *cap)?;
            if *no_timing {
                reports = reports.iter().map(|r| r.without_timing()).collect();
            }
            let lines: Vec<String> = reports.iter().map(|r| r.to_json_line()).collect();
            if let Some(path) = report {
                let mut f = File::create(path)?;
                for line in &lines {
                    writeln!(f, "{line}")?;
                }
            }
            match cli.format {
                Format::Json => lines.iter().try_for_each(|l| writeln!(out, "{l}"))?,
                _ => reports.iter().try_for_each(|r| write!(out, "{r}"))?,
            }
            let failed = reports.iter().any(|r| r.is_counterexample());
            Ok(if failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
        }
        Command::Iso { first, second } => {
            let a = single_input(first)?;
            let b = single_input(second)?;
            let iso = a.is_isomorphic(&b);
            match cli.format {
                Format::Json => writeln!(out, "{}", json!({ "isomorphic": iso }))?,
                _ => writeln!(out, "{}", if iso { "isomorphic" } else { "not isomorphic" })?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn vector(cache: Option<&SpillCache>, g: &Graph) -> MatchingVector {
    match cache {
        Some(c) => c.matching_vector(g),
        None => matching_vector(g),
    }
}

fn single_input(arg: &str) -> CliResult<Graph> {
    let mut graphs = read_inputs(arg)?;
    if graphs.len() != 1 {
        return Err(CliError::Usage(format!("{arg} holds {} graphs, expected one", graphs.len())));
    }
    Ok(graphs.remove(0).1)
}

/// One graph for a literal input; every line for `@file` or `-`. A bare
/// `@` is the graph6 encoding of `K_1`.
fn read_inputs(arg: &str) -> CliResult<Vec<(String, Graph)>> {
    let from_stream = |reader: Box<dyn BufRead>| -> CliResult<Vec<(String, Graph)>> {
        read_graph6_stream(reader)
            .map(|g| {
                let g = g?;
                Ok((g.to_graph6()?, g))
            })
            .collect()
    };
    if arg == "-" {
        from_stream(Box::new(BufReader::new(io::stdin())))
    } else if let Some(path) = arg.strip_prefix('@').filter(|p| !p.is_empty()) {
        from_stream(Box::new(BufReader::new(File::open(path)?)))
    } else {
        Ok(vec![(arg.to_string(), parse_graph_input(arg)?)])
    }
}

fn counts(v: &MatchingVector) -> Vec<String> {
    v.counts().iter().map(|c| c.to_string()).collect()
}

fn cmd_mu(
    format: Format,
    name: &str,
    g: &Graph,
    v: &MatchingVector,
    charpoly: bool,
    separate: bool,
    out: &mut (dyn Write + Send),
) -> CliResult<()> {
    let mu = v.to_polynomial();
    let phi = charpoly.then(|| characteristic_polynomial(g));
    match format {
        Format::Graph6 => writeln!(out, "{}", g.to_graph6()?)?,
        Format::Json => {
            let mut value = json!({
                "input": name,
                "graph6": g.to_graph6()?,
                "mu": mu.to_string(),
                "matching_vector": counts(v),
                "max_matching_size": v.max_matching_size(),
            });
            if let Some(phi) = &phi {
                value["charpoly"] = json!(phi.to_string());
                value["charpoly_equals_mu"] = json!(*phi == mu);
                value["forest"] = json!(g.is_forest());
            }
            writeln!(out, "{value}")?;
        }
        Format::Text => {
            if separate {
                writeln!(out)?;
            }
            writeln!(out, "{mu}")?;
            writeln!(out, "matching vector: {}", counts(v).join(" "))?;
            writeln!(out, "max matching size: {}", v.max_matching_size())?;
            if let Some(phi) = &phi {
                writeln!(out, "charpoly: {phi}")?;
                writeln!(out, "charpoly equals mu: {}", *phi == mu)?;
                writeln!(out, "forest: {}", g.is_forest())?;
            }
        }
    }
    Ok(())
}

fn cmd_classify(format: Format, name: &str, g: &Graph, v: &MatchingVector, out: &mut (dyn Write + Send)) -> CliResult<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph.into());
    }
    let summary = summarize_polynomial(&v.to_polynomial(), g.order())?;
    let families: Vec<String> =
        recognize_all(g).iter().filter(|d| d.is_classification_family()).map(|d| d.to_string()).collect();
    match format {
        Format::Graph6 => writeln!(out, "{}", g.to_graph6()?)?,
        Format::Json => {
            let roots: Vec<_> = summary
                .roots()
                .iter()
                .map(|(iv, m)| json!({ "interval": iv.to_string(), "multiplicity": m }))
                .collect();
            let value = json!({
                "input": name,
                "graph6": g.to_graph6()?,
                "mu": summary.polynomial().to_string(),
                "z": summary.distinct_roots(),
                "zero_multiplicity": summary.zero_multiplicity(),
                "roots": roots,
                "rendered": summary.render(),
                "families": families,
                "description": describe(g),
            });
            writeln!(out, "{value}")?;
        }
        Format::Text => {
            writeln!(out, "z={}", summary.distinct_roots())?;
            writeln!(out, "mu: {}", summary.polynomial())?;
            writeln!(out, "zero multiplicity: {}", summary.zero_multiplicity())?;
            writeln!(out, "R = {}", summary.render())?;
            for (iv, m) in summary.roots() {
                writeln!(out, "  {iv}  multiplicity {m}")?;
            }
            let family = if families.is_empty() { "none".to_string() } else { families.join(", ") };
            writeln!(out, "family: {family}")?;
            writeln!(out, "description: {}", describe(g))?;
        }
    }
    Ok(())
}
