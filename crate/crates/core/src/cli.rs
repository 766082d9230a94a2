//! Command-line front end.
//!
//! Exit statuses: 0 success, 1 failed verification, 2 usage or parse error,
//! 3 operator applied to a chord of the wrong size.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::chord::{
    chord_to_composition, chord_to_partition, chords_of_partition, enumerate_chords, enumerate_partitions, Chord,
    Partition,
};
use crate::classify::{classify, Classification};
use crate::error::Error;
use crate::graph::{build_chord_graph, export_dot, export_json};
use crate::transform::{apply_word, orbit, parse_generators, OperatorWord};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ARITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "chordgroup", version)]
#[command(about = "Inversion, duality and augmented-diminished duality on twelve-tone chords")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply an operator word (letters i, d, a; left to right) to a chord.
    Apply {
        /// e.g. `iid`; the empty string is the identity.
        word: String,
        /// e.g. `0,4,7` or `(0,4,7)`.
        chord: String,
    },
    /// List the orbit of a chord under a set of generators.
    Orbit {
        /// Comma list over i, d, a, e.g. `i,d`.
        generators: String,
        chord: String,
    },
    /// Print the harmonic label of a three- or four-tone chord.
    Classify { chord: String },
    /// Gap sequence and partition of a chord, or the chords of a partition.
    #[command(group(ArgGroup::new("input").required(true).args(["chord", "chords", "list"])))]
    Partition {
        chord: Option<String>,
        /// List every chord whose gaps rearrange to this partition, e.g. `[3,4,5]`.
        #[arg(long)]
        chords: Option<String>,
        /// List every partition of 12 into this many parts.
        #[arg(long)]
        list: Option<i64>,
    },
    /// List all chords of a given size.
    Enumerate {
        #[arg(long)]
        tones: i64,
        /// Only harmonic chords (3 or 4 tones), each followed by its label.
        #[arg(long)]
        harmonic: bool,
    },
    /// Export the chord graph on harmonic four-tone chords.
    Graph {
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Include the diminished-diminished chord as an isolated node.
        #[arg(long)]
        include_dd: bool,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run every self-check and print one line per check.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WrongArity { .. } => EXIT_ARITY,
            Error::IsomorphismViolation(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut text = String::new();
    let mut line = |s: &dyn std::fmt::Display| {
        text.push_str(&s.to_string());
        text.push('\n');
    };
    let mut code = EXIT_OK;
    match command {
        Command::Apply { word, chord } => {
            let word: OperatorWord = word.parse()?;
            let chord: Chord = chord.parse()?;
            line(&apply_word(&word, &chord)?);
        }
        Command::Orbit { generators, chord } => {
            let gens = parse_generators(&generators)?;
            let chord: Chord = chord.parse()?;
            for c in orbit(&chord, &gens)? {
                line(&c);
            }
        }
        Command::Classify { chord } => {
            let chord: Chord = chord.parse()?;
            line(&classify(&chord)?);
        }
        Command::Partition { chord, chords, list } => {
            if let Some(c) = chord {
                let c: Chord = c.parse()?;
                line(&format!("composition: {}", chord_to_composition(&c)));
                line(&format!("partition: {}", chord_to_partition(&c)));
            } else if let Some(p) = chords {
                let p: Partition = p.parse()?;
                for c in chords_of_partition(&p) {
                    line(&c);
                }
            } else if let Some(k) = list {
                for p in enumerate_partitions(k)? {
                    line(&p);
                }
            }
        }
        Command::Enumerate { tones, harmonic } => {
            if harmonic {
                if !(3..=4).contains(&tones) {
                    return Err(usage(format!("--harmonic needs --tones 3 or 4, got {tones}")));
                }
                for c in enumerate_chords(tones)? {
                    match classify(&c)? {
                        Classification::Harmonic(label) => line(&format!("{c} {label}")),
                        Classification::HarmonicUnlabeled => line(&format!("{c} unlabeled")),
                        Classification::NotHarmonic => {}
                    }
                }
            } else {
                for c in enumerate_chords(tones)? {
                    line(&c);
                }
            }
        }
        Command::Graph {
            format,
            include_dd,
            output,
        } => {
            let g = build_chord_graph(include_dd);
            let doc = match format {
                GraphFormat::Dot => export_dot(&g),
                GraphFormat::Json => export_json(&g),
            };
            match output {
                Some(path) => {
                    std::fs::write(&path, doc).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?
                }
                None => text.push_str(&doc),
            }
        }
        Command::Verify => {
            for check in verify::run_all() {
                if !check.passed {
                    code = EXIT_VERIFY_FAILED;
                }
                line(&check);
            }
        }
    }
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("cannot write output: {e}")))?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("chordgroup").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn apply() {
        assert_eq!(run_args(&["apply", "d", "0,4,7"]), (0, "0,5,8\n".into(), String::new()));
        assert_eq!(run_args(&["apply", "", "0,4,7"]).1, "0,4,7\n");
        assert_eq!(run_args(&["apply", "a", "0,4,7"]).0, EXIT_ARITY);
        assert_eq!(run_args(&["apply", "x", "0,4,7"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["apply", "i", "0,7,4"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["apply", "I", "(0,4,7)"]).1, "0,3,8\n");
    }

    #[test]
    fn orbit_cmd() {
        assert_eq!(run_args(&["orbit", "i", "0,3,6"]).1, "0,3,6\n0,3,9\n0,6,9\n");
        assert_eq!(run_args(&["orbit", "i,d,a", "0,3,6,9"]).1, "0,3,6,9\n");
        assert_eq!(run_args(&["orbit", "i,d", "0,4,7,11"]).1.lines().count(), 4);
        assert_eq!(run_args(&["orbit", "a", "0,4,7"]).0, EXIT_ARITY);
        assert_eq!(run_args(&["orbit", "q", "0,4,7"]).0, EXIT_USAGE);
    }

    #[test]
    fn classify_cmd() {
        assert_eq!(run_args(&["classify", "0,2,6,9"]).1, "Mm3\n");
        assert_eq!(
            run_args(&["classify", "0,1,2,3"]),
            (0, "not harmonic\n".into(), String::new())
        );
        assert_eq!(run_args(&["classify", "0,3,8"]).1, "Major1\n");
        assert_eq!(run_args(&["classify", "0,3"]).0, EXIT_ARITY);
        assert_eq!(run_args(&["classify", "banana"]).0, EXIT_USAGE);
    }

    #[test]
    fn partition_cmd() {
        assert_eq!(
            run_args(&["partition", "0,4,7"]).1,
            "composition: [4,3,5]\npartition: [3,4,5]\n"
        );
        assert_eq!(run_args(&["partition", "--chords", "[3,3,3,3]"]).1, "0,3,6,9\n");
        assert_eq!(run_args(&["partition", "--list", "1"]).1, "[12]\n");
        assert_eq!(run_args(&["partition"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["partition", "--list", "13"]).0, EXIT_USAGE);
    }

    #[test]
    fn enumerate_cmd() {
        let sevenths = run_args(&["enumerate", "--tones", "4", "--harmonic"]).1;
        assert_eq!(sevenths.lines().count(), 37);
        assert_eq!(sevenths.lines().filter(|l| !l.ends_with("unlabeled")).count(), 25);
        assert!(sevenths.lines().any(|l| l == "0,3,6,11 unlabeled"));
        assert_eq!(
            run_args(&["enumerate", "--tones", "3", "--harmonic"]).1.lines().count(),
            10
        );
        assert_eq!(run_args(&["enumerate", "--tones", "1"]).1, "0\n");
        assert_eq!(run_args(&["enumerate", "--tones", "5", "--harmonic"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["enumerate", "--tones", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn graph_cmd() {
        let (code, dot, _) = run_args(&["graph", "--format", "dot"]);
        assert_eq!(code, 0);
        assert!(dot.starts_with("digraph"));
        assert_eq!(run_args(&["graph", "--format", "svg"]).0, EXIT_USAGE);
        let json = run_args(&["graph", "--format", "json", "--include-dd"]).1;
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 25);
    }

    #[test]
    fn verify_cmd() {
        let (code, text, _) = run_args(&["verify"]);
        // the count of harmonic four-tone chords is 37, not the expected 25
        assert_eq!(code, EXIT_VERIFY_FAILED, "{text}");
        let failing: Vec<&str> = text.lines().filter(|l| !l.contains("PASS")).collect();
        assert_eq!(failing.len(), 1, "{text}");
        assert!(failing[0].starts_with("harmonic-tetrads: 37 FAIL"), "{text}");
        assert!(text.lines().any(|l| l == "seventh-rows: PASS"));
        assert!(text.lines().any(|l| l == "relations(k=4): PASS"));
        assert!(text.lines().any(|l| l == "components: 12+12 PASS"));
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("classify"));
    }
}
