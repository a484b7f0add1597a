//! Command-line surface. `run` holds all the logic; the binary only forwards
//! its arguments and exit code.
//!
//! Exit codes: 0 achiral / success, 1 intrinsically chiral, 2 usage or input
//! error, 3 internal self-check failure or oracle disagreement.

pub mod batch;
pub mod output;
pub mod parse;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use batch::{classify_lines, BatchRecord, RecordError};
pub use output::{OutputDocument, SCHEMA_VERSION};
pub use parse::parse_spec;
pub use verify::{run_suite, Suite, SuiteSummary};

use crate::classifier::{classify, match_theorem1, match_theorem2, match_theorem3, Witness};
use crate::partition::PartitionSpec;
use crate::embedding::{build_plan, check_lemma1};
use crate::error::Error;

pub const EXIT_ACHIRAL: i32 = 0;
pub const EXIT_CHIRAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "multichiral", version, about = "Chirality of complete multipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a complete multipartite graph has an achiral embedding.
    Classify {
        /// Part sizes: "3,3,1", "3 3 1" or "K_{3,3,1}".
        spec: String,
        #[arg(long)]
        json: bool,
        /// Print the witness, or the ruled-out attempts when chiral.
        #[arg(long)]
        witness: bool,
    },
    /// Build and self-check a symmetric embedding plan.
    Embed {
        spec: String,
        #[arg(long)]
        json: bool,
        /// Build from this form instead of the default preference order.
        #[arg(long, value_enum)]
        form: Option<Form>,
    },
    /// Sweep small specs and compare against the brute-force oracles.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Classify one spec per line of a file.
    Batch {
        file: PathBuf,
        #[arg(long)]
        json_lines: bool,
        /// Keep going after a malformed line; with `false` the batch stops
        /// at the first error and exits 2.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        keep_going: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Form {
    Rotoreflection,
    Inversion,
    Reflection,
}

impl Form {
    pub fn find(self, spec: &PartitionSpec) -> Option<Witness> {
        match self {
            Form::Rotoreflection => match_theorem1(spec).map(Witness::Rotoreflection),
            Form::Inversion => match_theorem2(spec).map(Witness::Inversion),
            Form::Reflection => match_theorem3(spec).map(Witness::Reflection),
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_ACHIRAL };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match cli.command {
        Command::Classify { spec, json, witness } => cmd_classify(&spec, json, witness, out, err),
        Command::Embed { spec, json, form } => cmd_embed(&spec, json, form, out, err),
        Command::Verify { suite, max_vertices } => cmd_verify(suite, max_vertices, out, err),
        Command::Batch {
            file,
            json_lines,
            keep_going,
        } => cmd_batch(&file, json_lines, keep_going, out, err),
    }
}

fn report_input_error(input: &str, e: &Error, err: &mut dyn Write) {
    let _ = writeln!(err, "error: {e}");
    if let Error::Parse { position, .. } = e {
        let _ = writeln!(err, "  {input}");
        let _ = writeln!(err, "  {}^", " ".repeat(position.saturating_sub(1)));
    }
}

fn cmd_classify(input: &str, json: bool, witness: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let spec = match parse_spec(input) {
        Ok(s) => s,
        Err(e) => {
            report_input_error(input, &e, err);
            return EXIT_USAGE;
        }
    };
    let verdict = classify(&spec);
    let code = if verdict.achiral { EXIT_ACHIRAL } else { EXIT_CHIRAL };
    if json {
        let _ = writeln!(out, "{}", OutputDocument::new(verdict).to_json_pretty());
    } else {
        let _ = write!(out, "{}", output::render_verdict(&verdict, witness));
    }
    code
}

fn cmd_embed(input: &str, json: bool, form: Option<Form>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let spec = match parse_spec(input) {
        Ok(s) => s,
        Err(e) => {
            report_input_error(input, &e, err);
            return EXIT_USAGE;
        }
    };
    let mut verdict = classify(&spec);
    if let (Some(f), true) = (form, verdict.achiral) {
        match f.find(&spec) {
            Some(w) => verdict.witness = Some(w),
            None => {
                let _ = writeln!(err, "error: {} has no {f:?} witness", spec.k_notation());
                return EXIT_USAGE;
            }
        }
    }
    let Some(witness) = verdict.witness.clone() else {
        let _ = writeln!(err, "error: {}: {}", spec.k_notation(), Error::ChiralInput);
        return EXIT_CHIRAL;
    };
    let built = build_plan(&witness).and_then(|p| check_lemma1(&p).map(|r| (p, r)));
    let (plan, report) = match built {
        Ok(pr) => pr,
        Err(e) => {
            let _ = writeln!(err, "internal error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let passed = report.passed();
    if json {
        let mut doc = OutputDocument::new(verdict);
        doc.plan = Some(plan);
        doc.lemma1_report = Some(report);
        let _ = writeln!(out, "{}", doc.to_json_pretty());
    } else {
        let _ = write!(out, "{}", output::render_plan(&plan, &report));
    }
    if passed {
        EXIT_ACHIRAL
    } else {
        let _ = writeln!(err, "internal error: embedding plan failed its self-check");
        EXIT_INTERNAL
    }
}

fn cmd_verify(suite: Suite, max_vertices: Option<usize>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let budget = max_vertices.unwrap_or_else(|| suite.default_max_vertices());
    let summary = match run_suite(suite, budget) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let unit = if suite == Suite::Feasibility { "cases" } else { "specs" };
    let _ = writeln!(out, "suite {suite:?}, budget {budget}: {} {unit} checked", summary.checked);
    if matches!(suite, Suite::Classifier | Suite::Lemma1) {
        let _ = writeln!(out, "achiral {}, chiral {}", summary.achiral, summary.chiral);
    }
    let _ = writeln!(out, "disagreements: {}", summary.disagreements.len());
    for d in &summary.disagreements {
        let _ = writeln!(out, "  {d}");
    }
    if summary.disagreements.is_empty() {
        EXIT_ACHIRAL
    } else {
        EXIT_INTERNAL
    }
}

fn cmd_batch(
    path: &std::path::Path,
    json_lines: bool,
    keep_going: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    for rec in classify_lines(&text) {
        if json_lines {
            let _ = writeln!(out, "{}", serde_json::to_string(&rec).expect("records always serialize"));
        } else if let Some(doc) = &rec.document {
            let _ = writeln!(
                out,
                "{}: {} {}",
                rec.line,
                doc.input.k_notation(),
                output::verdict_word(&doc.verdict)
            );
        } else if let Some(e) = &rec.error {
            let _ = writeln!(out, "{}: error: {}", rec.line, e.message);
        }
        if rec.error.is_some() && !keep_going {
            let _ = writeln!(err, "stopping at line {} (--keep-going false)", rec.line);
            return EXIT_USAGE;
        }
    }
    EXIT_ACHIRAL
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["multichiral"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn classify_exit_codes() {
        assert_eq!(run_str(&["classify", "3,3,1"]).0, 0);
        assert_eq!(run_str(&["classify", "K_{3,3,1,1}"]).0, 1);
        let (code, _, err) = run_str(&["classify", "3,0,2"]);
        assert_eq!(code, 2);
        assert!(err.contains("position 1"), "{err}");
        assert_eq!(run_str(&["classify"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
    }

    #[test]
    fn classify_json_round_trips() {
        let (code, out, _) = run_str(&["classify", "--json", "2,2,5"]);
        assert_eq!(code, 0);
        let doc = OutputDocument::from_json(&out).unwrap();
        assert_eq!(doc.schema_version, SCHEMA_VERSION);
        assert!(doc.verdict.witness.is_some());
        assert_eq!(doc.to_json_pretty().trim(), out.trim());
    }

    #[test]
    fn embed_cases() {
        assert_eq!(run_str(&["embed", "1,1,1,1,1,1"]).0, 0);
        assert_eq!(run_str(&["embed", "1,1,1,1,1,1,1"]).0, 1);
        let (code, out, _) = run_str(&["embed", "--json", "--form", "inversion", "2,2,5"]);
        assert_eq!(code, 0);
        let doc = OutputDocument::from_json(&out).unwrap();
        assert!(doc.lemma1_report.unwrap().passed());
        let plan = doc.plan.unwrap();
        assert_eq!(plan.scenario.kind, crate::embedding::ScenarioKind::Inversion2);
        assert_eq!(plan.placement.last(), Some(&crate::embedding::SymbolicPoint::PointO));
        let no_inversion = crate::oracle::enumerate_specs(&crate::oracle::SweepConfig::up_to(8))
            .find(|s| classify(s).achiral && match_theorem2(s).is_none())
            .unwrap();
        let arg = no_inversion.to_string();
        assert_eq!(run_str(&["embed", "--form", "inversion", &arg]).0, 2);
    }

    #[test]
    fn verify_budget() {
        assert_eq!(run_str(&["verify", "--suite", "planarity", "--max-vertices", "6"]).0, 0);
        assert_eq!(run_str(&["verify", "--suite", "planarity", "--max-vertices", "40"]).0, 2);
    }
}
