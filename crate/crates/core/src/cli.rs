//! The `deltah` command line. [`run`] takes the argument list and output
//! streams so it can be driven from tests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};

use crate::delta::{classify, DeltaResult, Outcome};
use crate::error::{Error, Result};
use crate::gallery::{gallery_graph, GalleryId};
use crate::graph::{decode, encode, Format, Graph};
use crate::hom::{chromatic_number, has_homomorphism};
use crate::rational::Rational;
use crate::verify::{
    brute_min_edits_to_k_partite, check_haggkvist, check_hom_odd_girth, check_locally_bipartite_claims, check_properties,
    CorpusSpec, VerificationReport,
};
use crate::witness::{certify, witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "deltah", version, about = "Minimum-degree stability thresholds of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a named graph from the built-in gallery.
    Gallery {
        id: GalleryId,
        #[arg(long, default_value = "g6")]
        format: Format,
    },
    /// Find a homomorphism from PATTERN to TARGET, or print NONE.
    Hom {
        pattern: PathBuf,
        target: PathBuf,
        /// Input format for both files, overriding the extension.
        #[arg(long)]
        format: Option<Format>,
    },
    /// Chromatic number.
    Chromatic {
        file: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Length of the shortest odd cycle, or "none".
    Oddgirth {
        file: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Classify the stability threshold of a graph.
    Delta {
        file: PathBuf,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long)]
        json: bool,
    },
    /// Build the extremal witness on N vertices.
    Witness {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        format: Option<Format>,
        /// Output format; defaults to the extension of --out, else g6.
        #[arg(long)]
        out_format: Option<Format>,
    },
    /// Build the witness on N vertices and check it against the classification.
    Certify {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Run a check over a graph corpus.
    Verify {
        /// odd-girth[:GMAX], haggkvist[:G], properties:R or local-bip:A
        suite: Suite,
        /// exhaustive:K or random:COUNT,ORDER,P,SEED
        #[arg(long, default_value = "exhaustive:6")]
        corpus: CorpusSpec,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Fewest edge deletions leaving the graph K-partite.
    Edits {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        format: Option<Format>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Suite {
    OddGirth(usize),
    Haggkvist(usize),
    Properties(usize),
    LocalBip(usize),
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let number = |default: Option<usize>| -> Result<usize> {
            match arg {
                Some(a) => a.parse().map_err(|_| Error::invalid(format!("suite parameter `{a}` is not a number"))),
                None => default.ok_or_else(|| Error::invalid(format!("suite `{name}` needs a parameter"))),
            }
        };
        match name {
            "odd-girth" => Ok(Suite::OddGirth(number(Some(3))?)),
            "haggkvist" => Ok(Suite::Haggkvist(number(Some(2))?)),
            "properties" => Ok(Suite::Properties(number(None)?)),
            "local-bip" => Ok(Suite::LocalBip(number(None)?)),
            _ => Err(Error::invalid(format!("unknown suite `{name}`"))),
        }
    }
}

fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph> {
    let format = format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| Error::invalid(format!("cannot tell the format of {}; pass --format", path.display())))?;
    let text = fs::read_to_string(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
    decode(&text, format)
}

/// Up to six decimals, trailing zeros dropped.
fn decimal(r: Rational) -> String {
    let s = format!("{:.6}", r.to_f64());
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn describe(result: &DeltaResult) -> String {
    match result.outcome {
        Outcome::OddCycle { g, value } => format!("{value} ({}) [odd-cycle branch, g={g}]", decimal(value)),
        Outcome::FSequence { j, value, .. } => format!("{value} ({}) [F-sequence branch, j={j}]", decimal(value)),
        Outcome::Interval { g, lower, upper } => format!(
            "[{lower}, {upper}] ([{}, {}]) [interval branch, g={g}]",
            decimal(lower),
            decimal(upper)
        ),
    }
}

fn join_numbers<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn write_report(out: &mut dyn Write, label: &str, report: &VerificationReport, json: bool) -> Result<i32> {
    let io = |e: std::io::Error| Error::invalid(e.to_string());
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(report).expect("report serialises")).map_err(io)?;
    } else {
        writeln!(
            out,
            "{label}: checked {}, applicable {}, violations {} ({:.2}s)",
            report.checked,
            report.applicable,
            report.violations.len(),
            report.elapsed.as_secs_f64()
        )
        .map_err(io)?;
        for v in &report.violations {
            writeln!(out, "  #{} {}: {}", v.index, v.graph, v.detail).map_err(io)?;
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATION })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::invalid(e.to_string());
    match command {
        Command::Gallery { id, format } => {
            writeln!(out, "{}", encode(&gallery_graph(id), format)?.trim_end()).map_err(io)?;
        }
        Command::Hom { pattern, target, format } => {
            let p = read_graph(&pattern, format)?;
            let t = read_graph(&target, format)?;
            match has_homomorphism(&p, &t) {
                Some(w) => writeln!(out, "{}", join_numbers(&w.mapping)),
                None => writeln!(out, "NONE"),
            }
            .map_err(io)?;
        }
        Command::Chromatic { file, format } => {
            writeln!(out, "{}", chromatic_number(&read_graph(&file, format)?)).map_err(io)?;
        }
        Command::Oddgirth { file, format } => {
            let g = read_graph(&file, format)?;
            match g.odd_girth() {
                Some(len) => writeln!(out, "{len}"),
                None => writeln!(out, "none"),
            }
            .map_err(io)?;
        }
        Command::Delta { file, format, json } => {
            let result = classify(&read_graph(&file, format)?)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&result).expect("result serialises")).map_err(io)?;
            } else {
                writeln!(out, "{}", describe(&result)).map_err(io)?;
                for entry in &result.certificate {
                    writeln!(out, "  maps to {}: {}", entry.target, join_numbers(&entry.witness.mapping)).map_err(io)?;
                }
                writeln!(out, "  search nodes: {}", result.nodes).map_err(io)?;
            }
        }
        Command::Witness { file, n, out: path, format, out_format } => {
            let result = classify(&read_graph(&file, format)?)?;
            let w = witness(&result, n)?;
            let fmt = out_format
                .or_else(|| path.as_deref().and_then(Format::from_path))
                .unwrap_or(Format::Graph6);
            let text = encode(&w, fmt)?;
            match path {
                Some(p) => fs::write(&p, text).map_err(|e| Error::invalid(format!("{}: {e}", p.display())))?,
                None => write!(out, "{text}").map_err(io)?,
            }
        }
        Command::Certify { file, n, format } => {
            let h = read_graph(&file, format)?;
            let result = classify(&h)?;
            let rep = certify(&h, &result, n)?;
            let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
            writeln!(out, "{}", describe(&result)).map_err(io)?;
            writeln!(
                out,
                "witness: order {}, base order {}, min degree {}",
                rep.witness_order, rep.base_order, rep.min_degree
            )
            .map_err(io)?;
            writeln!(out, "hom-free base: {}", mark(rep.hom_free)).map_err(io)?;
            writeln!(
                out,
                "density: {} ({}/{} >= {} - {})",
                mark(rep.ratio_ok),
                rep.min_degree,
                rep.witness_order,
                rep.target,
                rep.slack
            )
            .map_err(io)?;
            writeln!(out, "edit bound: {} ({})", mark(rep.edit_ok), rep.edit_bound).map_err(io)?;
            return Ok(if rep.passed() { EXIT_OK } else { EXIT_VIOLATION });
        }
        Command::Verify { suite, corpus, json } => {
            let (label, report) = match suite {
                Suite::OddGirth(g_max) => (format!("odd-girth:{g_max} on {corpus}"), check_hom_odd_girth(&corpus, g_max)),
                Suite::Haggkvist(g) => (format!("haggkvist:{g} on {corpus}"), check_haggkvist(&corpus, g)?),
                Suite::Properties(r) => (format!("properties:{r}"), check_properties(r, 11)?),
                Suite::LocalBip(a) => (format!("local-bip:{a} on {corpus}"), check_locally_bipartite_claims(a, &corpus)?),
            };
            return write_report(out, &label, &report, json);
        }
        Command::Oracle {
            oracle: OracleCommand::Edits { file, k, format },
        } => {
            let g = read_graph(&file, format)?;
            writeln!(out, "{}", brute_min_edits_to_k_partite(&g, k)?).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Resource(_) => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("deltah").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn suite_names() {
        assert_eq!("odd-girth".parse::<Suite>().unwrap(), Suite::OddGirth(3));
        assert_eq!("haggkvist:3".parse::<Suite>().unwrap(), Suite::Haggkvist(3));
        assert_eq!("properties:4".parse::<Suite>().unwrap(), Suite::Properties(4));
        assert!("properties".parse::<Suite>().is_err());
        assert!("local-bip:x".parse::<Suite>().is_err());
        assert!("girth".parse::<Suite>().is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(Rational::new(5, 8)), "0.625");
        assert_eq!(decimal(Rational::new(2, 5)), "0.4");
        assert_eq!(decimal(Rational::new(8, 11)), "0.727273");
    }

    #[test]
    fn gallery_and_usage() {
        let w5 = format!("{}\n", encode(&Graph::wheel(5).unwrap(), Format::Graph6).unwrap());
        assert_eq!(call(&["gallery", "W5"]), (0, w5, String::new()));
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("delta"));
        assert_eq!(call(&["gallery", "nope"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_properties() {
        let (code, out, _) = call(&["verify", "properties:3"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.starts_with("properties:3: checked 23, applicable 23, violations 0"));
    }
}
