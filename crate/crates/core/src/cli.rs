//! The `so4` command line: argument parsing, input documents and reports.
//!
//! Exit codes are 0 on success, 1 when `verify-tables` finds a failure and 2
//! for unreadable or invalid input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::catalog::{Catalog, ClassLabel, EMBEDDED_CATALOG};
use crate::classify::{classify, profile, ClassifyError};
use crate::conjugacy::{find_witness, random_inner, ConjugacyError, InnerAutomorphism};
use crate::lie::{Element, LieError, Subalgebra};
use crate::modulerep::{adjoint_decompose, ModuleError, Sl2Triple};
use crate::scalar::Scalar;
use crate::verify::{verify_tables, VerifyConfig, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Format version written to and accepted from subalgebra documents.
pub const DOCUMENT_FORMAT_VERSION: &str = "1";

#[derive(Debug, Parser)]
#[command(name = "so4", version, about = "Classify subalgebras of so(4,C) up to inner automorphism")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the class of a subalgebra.
    Classify {
        /// Subalgebra document, or `-` for stdin.
        input: PathBuf,
    },
    /// Decide whether two subalgebras are conjugate.
    Equivalent {
        a: PathBuf,
        b: PathBuf,
        /// Candidates to try when searching for an explicit automorphism.
        #[arg(long, default_value_t = 64)]
        witness_budget: usize,
    },
    /// Apply a seeded random inner automorphism.
    Conjugate {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        complexity: usize,
    },
    /// Decompose so(4,C) under a 3-dimensional simple subalgebra.
    Decompose { input: PathBuf },
    /// Check the catalog against the classifier.
    VerifyTables {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        complexity: usize,
        /// Catalog file to check instead of the embedded one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {reason}")]
    Document { path: String, reason: String },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Conjugacy(#[from] ConjugacyError),
    #[error(transparent)]
    Catalog(#[from] crate::catalog::CatalogError),
}

/// One basis vector, as Chevalley coordinates or as a 4×4 block matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisRow {
    Coords(Vec<Scalar>),
    Matrix(Vec<Vec<Scalar>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraDocument {
    pub format_version: String,
    pub basis: Vec<BasisRow>,
}

impl SubalgebraDocument {
    pub fn from_elements(elements: &[Element]) -> Self {
        SubalgebraDocument {
            format_version: DOCUMENT_FORMAT_VERSION.into(),
            basis: elements.iter().map(|e| BasisRow::Coords(e.to_vec())).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let doc: SubalgebraDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if doc.format_version != DOCUMENT_FORMAT_VERSION {
            return Err(format!("unsupported format_version {:?}", doc.format_version));
        }
        Ok(doc)
    }

    pub fn elements(&self) -> Result<Vec<Element>, String> {
        let coords = self.basis.iter().filter(|r| matches!(r, BasisRow::Coords(_))).count();
        if coords != 0 && coords != self.basis.len() {
            return Err("basis mixes coordinate rows and matrices".into());
        }
        self.basis
            .iter()
            .enumerate()
            .map(|(k, row)| match row {
                BasisRow::Coords(c) if c.len() == 6 => Ok(Element::from_slice(c)),
                BasisRow::Coords(c) => Err(format!("basis row {k} has {} coordinates, expected 6", c.len())),
                BasisRow::Matrix(m) => {
                    if m.len() != 4 || m.iter().any(|r| r.len() != 4) {
                        return Err(format!("basis matrix {k} is not 4×4"));
                    }
                    Element::from_matrix(m).map_err(|e| format!("basis matrix {k}: {e}"))
                }
            })
            .collect()
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load_subalgebra(path: &Path) -> Result<Subalgebra, CliError> {
    let doc_err = |reason| CliError::Document { path: path.display().to_string(), reason };
    let doc = SubalgebraDocument::parse(&read_input(path)?).map_err(doc_err)?;
    let elements = doc.elements().map_err(doc_err)?;
    Ok(Subalgebra::span_close(&elements)?)
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut stdout = std::io::stdout().lock();
    match execute(&cli, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            if cli.json {
                let _ = writeln!(stdout, "{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

/// Runs a parsed command, writing the report to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = match &cli.command {
        Command::Classify { input } => classify_report(&load_subalgebra(input)?, cli.json)?,
        Command::Equivalent { a, b, witness_budget } => {
            equivalent_report(&load_subalgebra(a)?, &load_subalgebra(b)?, *witness_budget, cli.json)?
        }
        Command::Conjugate { input, seed, complexity } => {
            let s = load_subalgebra(input)?;
            let phi = random_inner(*seed, *complexity)?;
            conjugate_document(&s, &phi, *seed, *complexity)
        }
        Command::Decompose { input } => decompose_report(&load_subalgebra(input)?, cli.json)?,
        Command::VerifyTables { trials, seed, complexity, catalog } => {
            if *complexity == 0 {
                return Err(ConjugacyError::ZeroComplexity.into());
            }
            let cat = match catalog {
                Some(path) => Catalog::from_json(&read_input(path)?)
                    .map_err(|e| CliError::Document { path: path.display().to_string(), reason: e.to_string() })?,
                None => Catalog::from_json(EMBEDDED_CATALOG)?,
            };
            let report = verify_tables(&cat, VerifyConfig { trials: *trials, seed: *seed, complexity: *complexity });
            let text = if cli.json { pretty(&report) } else { verify_text(&report) };
            write_out(out, &text)?;
            return Ok(if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    writeln!(out, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

pub fn classify_report(s: &Subalgebra, as_json: bool) -> Result<String, CliError> {
    let label = classify(s)?;
    let (levi, radical) = match s.levi_decomposition() {
        Ok((l, r)) => (Some(l), r),
        Err(_) => (None, s.radical()),
    };
    if as_json {
        return Ok(pretty(&json!({
            "label": label,
            "name": label.to_string(),
            "dim": s.dim(),
            "solvable": s.is_solvable(),
            "derived_dims": s.derived_dims(),
            "basis": s.basis(),
            "levi_factor": levi.as_ref().map(|l| l.basis().to_vec()),
            "radical": radical.basis(),
            "profile": profile(s),
        })));
    }
    let mut lines = vec![
        format!("class: {label}"),
        format!("dim: {}", s.dim()),
        format!("basis: {s}"),
        format!("solvable: {}", if s.is_solvable() { "yes" } else { "no" }),
        format!("derived series dims: {:?}", s.derived_dims()),
    ];
    if let Some(l) = levi {
        lines.push(format!("Levi factor: {l}"));
        lines.push(format!("radical: {radical}"));
    }
    Ok(lines.join("\n"))
}

pub fn equivalent_report(s: &Subalgebra, t: &Subalgebra, budget: usize, as_json: bool) -> Result<String, CliError> {
    let (ls, lt) = (classify(s)?, classify(t)?);
    let equivalent = ls == lt;
    let witness = if equivalent { find_witness(s, t, budget) } else { None };
    if as_json {
        return Ok(pretty(&json!({
            "equivalent": equivalent,
            "labels": [ls, lt],
            "names": [ls.to_string(), lt.to_string()],
            "witness_budget": budget,
            "witness": witness,
        })));
    }
    let mut lines = vec![
        format!("{}: {ls} vs {lt}", if equivalent { "equivalent" } else { "inequivalent" }),
    ];
    if equivalent {
        match witness {
            Some(w) => {
                lines.push(format!("witness A = {}", render_mat(w.first())));
                lines.push(format!("witness B = {}", render_mat(w.second())));
            }
            None => lines.push(format!("no witness found within budget {budget}")),
        }
    }
    Ok(lines.join("\n"))
}

fn render_mat(m: &crate::lie::Mat2) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

/// The image document; it carries the automorphism and seed as extra fields,
/// which `classify` ignores when reading it back.
pub fn conjugate_document(s: &Subalgebra, phi: &InnerAutomorphism, seed: u64, complexity: usize) -> String {
    let image = phi.apply_subalgebra(s);
    let doc = SubalgebraDocument::from_elements(image.basis());
    let mut value = serde_json::to_value(&doc).expect("document serializes");
    let map = value.as_object_mut().expect("object");
    map.insert("seed".into(), json!(seed));
    map.insert("complexity".into(), json!(complexity));
    map.insert("automorphism".into(), serde_json::to_value(phi).expect("serializes"));
    pretty(&value)
}

pub fn decompose_report(s: &Subalgebra, as_json: bool) -> Result<String, CliError> {
    let triple = Sl2Triple::from_subalgebra(s)?;
    let d = adjoint_decompose(&triple)?;
    let label: Option<ClassLabel> = classify(s).ok();
    if as_json {
        return Ok(pretty(&json!({
            "label": label,
            "triple": triple,
            "decomposition": d.to_string(),
            "summands": d.summands,
            "highest_weight_vectors": d.highest_weight_vectors,
        })));
    }
    let mut lines = vec![
        format!("triple: h = {}, x = {}, y = {}", triple.h, triple.x, triple.y),
        format!("so(4) ≅ {d}"),
    ];
    for (m, v) in d.summands.iter().zip(&d.highest_weight_vectors) {
        lines.push(format!("  V({m}): highest weight vector {v}"));
    }
    Ok(lines.join("\n"))
}

fn verify_text(report: &VerifyReport) -> String {
    let c = &report.config;
    let mut lines = vec![format!("seed {}, trials {}, complexity {}", c.seed, c.trials, c.complexity)];
    for check in &report.checks {
        let status = if check.ok() { "PASS" } else { "FAIL" };
        lines.push(format!("{status} {} ({}/{})", check.name, check.passed, check.total));
        for f in &check.failures {
            lines.push(format!("    {f}"));
        }
    }
    lines.push("classes by dimension:".into());
    for (dim, names) in &report.families_by_dim {
        lines.push(format!("  dim {dim} ({}): {}", names.len(), names.join(", ")));
    }
    lines.push(if report.all_passed() { "all checks passed".into() } else { "verification FAILED".into() });
    lines.join("\n")
}
