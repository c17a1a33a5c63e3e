//! The `odiam` command line: build extremal graphs, orient graphs within
//! `n - 2`, compute exact oriented diameters, and sweep small orders.
//!
//! Exit codes: 0 success or claim holds, 1 usage or I/O error, 2 claim fails
//! (the witness is printed), 3 a size cap was exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use odiam::constructions::{self, Family};
use odiam::format::{
    parse_arc_list, parse_edge_list, parse_graph6, serialize_arc_list, serialize_edge_list,
};
use odiam::graph::{diameter, Distance, Orientation, UndirectedGraph};
use odiam::oracle::{
    code_hex, oriented_diameter_with_cap, sweep, verify_lower_bound_with_cap, ClassRecord,
    SweepOptions, SweepReport, Verdict, DEFAULT_CAP,
};
use odiam::orient::{orient_bounded_with, orient_hamiltonian, OrientOptions, UpperCertificate};
use odiam::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_CLAIM_FAILS: u8 = 2;
pub const EXIT_CAP: u8 = 3;

/// Environment variable overriding the default exhaustive-search edge cap.
pub const CAP_ENV: &str = "ODIAM_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "odiam",
    version,
    about = "Orientations of bounded diameter for bridgeless graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an extremal graph as an edge list.
    Construct {
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Orient a graph to diameter at most n-2 and write the arc list.
    Orient {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Re-read the written arc list and confirm the reported diameter.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
        /// Read the input as graph6 instead of an edge list.
        #[arg(long)]
        graph6: bool,
    },
    /// Diameter of an arc list.
    Diameter {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact oriented diameter by exhaustive search.
    Od {
        file: PathBuf,
        #[arg(long, env = CAP_ENV)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        graph6: bool,
    },
    /// Worst oriented diameter per edge count and the resulting thresholds.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<usize>,
        #[arg(long)]
        json: bool,
        /// Allow order 7 (slow).
        #[arg(long)]
        extended: bool,
        #[arg(long, env = CAP_ENV)]
        cap: Option<usize>,
    },
    /// Confirm a graph has no orientation of diameter at most d.
    VerifyLower {
        /// `gnd`, `h`, or a path to an edge list.
        target: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: usize,
        #[arg(long, env = CAP_ENV)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        graph6: bool,
    },
    /// Compare empirical thresholds with C(n-d, 2) + n + 2 for 2 <= d <= n-2.
    CheckConjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, env = CAP_ENV)]
        cap: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Gnd,
    H,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Gnd => Family::Gnd,
            FamilyArg::H => Family::H,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Hamiltonian,
    General,
}

/// Machine-readable summary of an `orient` run.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct OrientReport {
    pub n: usize,
    pub m: usize,
    pub method: String,
    pub diameter: Option<usize>,
    pub bound: usize,
    pub holds: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    /// Claim does not hold; the report has been printed.
    Claim,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> Outcome {
        writeln!(self.out, "{}", s.as_ref())
            .map_err(|e| Failure::Usage(format!("write failed: {e}")))
    }

    fn json<T: Serialize>(&mut self, value: &T) -> Outcome {
        let text =
            serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
        self.line(text)
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if informational {
                let _ = write!(out, "{text}");
                return EXIT_OK;
            }
            let _ = write!(err, "{text}");
            return EXIT_USAGE;
        }
    };
    let mut io = Io { out };
    match dispatch(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure::Claim) => EXIT_CLAIM_FAILS,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Cap(_) => EXIT_CAP,
                Error::Exhaustion(_) | Error::Verification { .. } => EXIT_CLAIM_FAILS,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn read_graph(path: &Path, graph6: bool) -> std::result::Result<UndirectedGraph, Failure> {
    let text = read(path)?;
    Ok(if graph6 {
        parse_graph6(&text)?
    } else {
        parse_edge_list(&text)?
    })
}

fn cap_or_default(cap: Option<usize>) -> usize {
    cap.unwrap_or(DEFAULT_CAP)
}

fn distance_value(d: Distance) -> Option<usize> {
    d.finite()
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Outcome {
    match command {
        Command::Construct {
            family,
            n,
            d,
            output,
        } => {
            let (g, _) = constructions::build(family.into(), n, d)?;
            let text = serialize_edge_list(&g);
            match output {
                Some(path) => write_file(&path, &text),
                None => io.line(text.trim_end()),
            }
        }
        Command::Orient {
            file,
            output,
            method,
            verify,
            json,
            graph6,
        } => orient(
            io,
            &read_graph(&file, graph6)?,
            &output,
            method,
            verify,
            json,
        ),
        Command::Diameter { file, json } => {
            let o = parse_arc_list(&read(&file)?)?;
            let d = diameter(&o);
            if json {
                io.json(&serde_json::json!({
                    "n": o.order(),
                    "m": o.base().size(),
                    "diameter": distance_value(d),
                }))
            } else {
                io.line(format!("diameter {d}"))
            }
        }
        Command::Od {
            file,
            cap,
            json,
            graph6,
        } => {
            let g = read_graph(&file, graph6)?;
            let od = oriented_diameter_with_cap(&g, cap_or_default(cap))?;
            if json {
                io.json(&serde_json::json!({
                    "n": g.order(),
                    "m": g.size(),
                    "oriented_diameter": distance_value(od.diameter),
                    "examined": od.examined,
                    "witness": od.witness.arcs().collect::<Vec<_>>(),
                }))
            } else {
                io.line(format!(
                    "oriented diameter {} over {} orientations",
                    od.diameter, od.examined
                ))?;
                io.line("# witness")?;
                io.line(serialize_arc_list(&od.witness).trim_end())
            }
        }
        Command::Sweep {
            n,
            d,
            json,
            extended,
            cap,
        } => {
            let report = sweep(
                n,
                &d,
                &SweepOptions {
                    extended,
                    cap: cap_or_default(cap),
                },
            )?;
            if json {
                io.json(&sweep_json(&report))
            } else {
                print_sweep(io, &report)
            }
        }
        Command::VerifyLower {
            target,
            n,
            d,
            cap,
            json,
            graph6,
        } => {
            let g = match target.as_str() {
                "gnd" | "h" => {
                    let n =
                        n.ok_or_else(|| Failure::Usage(format!("--n is required for {target}")))?;
                    let family = if target == "gnd" {
                        Family::Gnd
                    } else {
                        Family::H
                    };
                    constructions::build(family, n, Some(d))?.0
                }
                path => read_graph(Path::new(path), graph6)?,
            };
            let cert = verify_lower_bound_with_cap(&g, d, cap_or_default(cap))?;
            if json {
                io.json(&serde_json::json!({
                    "n": g.order(),
                    "m": g.size(),
                    "code": cert.graph_code.as_deref().map(code_hex),
                    "threshold": d,
                    "examined": cert.orientations_examined,
                    "minimum_diameter": distance_value(cert.minimum_diameter),
                    "valid": cert.is_valid(),
                    "witness": cert.witness.arcs().collect::<Vec<_>>(),
                }))?;
            } else {
                io.line(format!(
                    "minimum diameter {} over {} orientations; bound {d} {}",
                    cert.minimum_diameter,
                    cert.orientations_examined,
                    if cert.is_valid() {
                        "exceeded: lower bound holds"
                    } else {
                        "met: lower bound fails"
                    }
                ))?;
                if !cert.is_valid() {
                    io.line("# orientation meeting the bound")?;
                    io.line(serialize_arc_list(&cert.witness).trim_end())?;
                }
            }
            if cert.is_valid() {
                Ok(())
            } else {
                Err(Failure::Claim)
            }
        }
        Command::CheckConjecture {
            n,
            extended,
            json,
            cap,
        } => {
            if n < 4 {
                return Err(Failure::Usage(format!(
                    "the conjecture needs n >= 4, got {n}"
                )));
            }
            let ds: Vec<usize> = (2..=n - 2).collect();
            let report = sweep(
                n,
                &ds,
                &SweepOptions {
                    extended,
                    cap: cap_or_default(cap),
                },
            )?;
            if json {
                io.json(&sweep_json(&report))?;
            } else {
                print_sweep(io, &report)?;
            }
            let all_agree = report
                .thresholds
                .iter()
                .all(|t| t.verdict.as_ref().is_none_or(Verdict::agrees));
            if all_agree {
                Ok(())
            } else {
                Err(Failure::Claim)
            }
        }
    }
}

fn orient(
    io: &mut Io<'_>,
    g: &UndirectedGraph,
    output: &Path,
    method: MethodArg,
    verify: bool,
    json: bool,
) -> Outcome {
    let n = g.order();
    let cert: UpperCertificate = match method {
        MethodArg::Auto => orient_bounded_with(g, &OrientOptions::default())?,
        MethodArg::General => orient_bounded_with(
            g,
            &OrientOptions {
                hamiltonian_budget: 0,
                oracle_fallback: false,
                ..Default::default()
            },
        )?,
        MethodArg::Hamiltonian => {
            orient_hamiltonian(g, OrientOptions::default().hamiltonian_budget)?.ok_or_else(
                || Failure::Usage("no Hamiltonian cycle found within the search budget".into()),
            )?
        }
    };
    let text = serialize_arc_list(&cert.orientation);
    write_file(output, &text)?;
    let bound = n - 2;
    let report = OrientReport {
        n,
        m: g.size(),
        method: cert.method.name(),
        diameter: distance_value(cert.diameter),
        bound,
        holds: cert.diameter.within(bound),
    };
    if json {
        io.json(&report)?;
    } else {
        io.line(format!(
            "n {} m {} method {} diameter {} bound {} {}",
            report.n,
            report.m,
            report.method,
            cert.diameter,
            bound,
            if report.holds { "holds" } else { "fails" }
        ))?;
    }
    if verify {
        let reread: Orientation = parse_arc_list(&read(output)?)?;
        let d = diameter(&reread);
        if reread.base() != g || d != cert.diameter {
            io.line(format!(
                "verify: re-read orientation has diameter {d}, reported {}",
                cert.diameter
            ))?;
            return Err(Failure::Claim);
        }
        if !json {
            io.line(format!(
                "verify: {} re-read, diameter {d} confirmed",
                output.display()
            ))?;
        }
    }
    if report.holds {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

fn sweep_json(report: &SweepReport) -> serde_json::Value {
    serde_json::json!({
        "n": report.n,
        "rows": report.rows,
        "thresholds": report.thresholds,
    })
}

fn describe(c: &ClassRecord) -> String {
    let edges: Vec<String> = c.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!(
        "code {} m {} oriented diameter {} edges {}",
        c.code,
        c.size(),
        c.oriented_diameter,
        edges.join(" ")
    )
}

fn print_sweep(io: &mut Io<'_>, report: &SweepReport) -> Outcome {
    io.line(format!("order {}", report.n))?;
    io.line(format!(
        "{:>4} {:>8} {:>6}  extremal",
        "m", "classes", "max-od"
    ))?;
    for row in &report.rows {
        io.line(format!(
            "{:>4} {:>8} {:>6}  {}",
            row.m,
            row.classes,
            row.max_diameter.to_string(),
            row.extremal.join(",")
        ))?;
    }
    for t in &report.thresholds {
        io.line(format!(
            "m_empirical({}, {}) = {}",
            report.n, t.d, t.threshold
        ))?;
        let Some(verdict) = &t.verdict else { continue };
        match verdict {
            Verdict::Agrees { value, extremal } => {
                io.line(format!("  conjecture C(n-d,2)+n+2 = {value}: agrees"))?;
                if let Some(c) = extremal {
                    io.line(format!("  extremal witness: {}", describe(c)))?;
                }
            }
            Verdict::UpperFails {
                conjectured,
                counterexample,
                ..
            } => {
                io.line(format!(
                    "  conjecture C(n-d,2)+n+2 = {conjectured}: fails, a class at or above it exceeds d"
                ))?;
                io.line(format!("  counterexample: {}", describe(counterexample)))?;
            }
            Verdict::LowerFails {
                conjectured,
                largest_violator,
                ..
            } => {
                io.line(format!(
                    "  conjecture C(n-d,2)+n+2 = {conjectured}: fails, every class from {} edges meets d",
                    t.threshold
                ))?;
                if let Some(c) = largest_violator {
                    io.line(format!("  largest class exceeding d: {}", describe(c)))?;
                }
            }
        }
    }
    Ok(())
}
