use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use hammock_core::appkit::{preset_by_name, PresetSeq};
use hammock_core::arquiver::{build_ar_quiver, ARQuiver};
use hammock_core::catalogs::{build_catalog, quiver_by_id, CategoryCatalog};
use hammock_core::exactla::FieldPrime;
use hammock_core::hammock::{
    contravariant_hammock, covariant_hammock, verify_theorem_isolated, HammockFunction, LeftExactSeq,
    RightExactSeq, TheoremVerdict,
};
use hammock_core::repcore::morphism_from_json;
use hammock_core::Error;
use serde_json::Value;

use crate::render::{render, Format, RenderSpec};
use crate::suites::{run_suite, Suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "hammocks", version, about = "Hammock functions on Auslander-Reiten quivers")]
struct Cli {
    /// Prime field characteristic.
    #[arg(long, global = true, default_value_t = 10007)]
    prime: u64,
    /// Master seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest ambient dimension enumerated for subspace categories.
    #[arg(long = "dim-bound", global = true, default_value_t = 8)]
    dim_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the indecomposables of a category.
    Catalog {
        #[arg(long)]
        category: String,
        #[arg(long)]
        json: bool,
    },
    /// Emit the AR quiver.
    Arq {
        #[arg(long)]
        category: String,
        #[arg(long, default_value = "dot")]
        format: Format,
    },
    /// Evaluate, classify and render a hammock function.
    Hammock {
        #[arg(long)]
        category: String,
        /// Preset name such as `cok@alpha`, or `@file.json` with a morphism.
        #[arg(long)]
        functor: String,
        #[arg(long, default_value = "ascii")]
        format: Format,
        /// Append the theorem verdict and oracle comparison.
        #[arg(long)]
        report: bool,
    },
    /// Run a verification suite and print a JSON verdict.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        trials: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::BadPath(_)
            | Error::BadElement(_)
            | Error::InvalidRange(_)
            | Error::InvalidPicket { .. }
            | Error::UnknownObject(_)
            | Error::PreconditionViolated(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing to `out`;
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Internal(e.to_string())
}

fn catalog(cli: &Cli, id: &str) -> Result<CategoryCatalog, Failure> {
    Ok(build_catalog(id, field(cli)?, cli.dim_bound)?)
}

fn field(cli: &Cli) -> Result<FieldPrime, Failure> {
    FieldPrime::new(cli.prime).ok_or_else(|| Failure::Usage(format!("{} is not a usable prime", cli.prime)))
}

fn ar(cli: &Cli, id: &str) -> Result<ARQuiver, Failure> {
    Ok(build_ar_quiver(Arc::new(catalog(cli, id)?))?)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Catalog { category, json } => {
            let c = catalog(&cli, category)?;
            if *json {
                writeln!(out, "{}", serde_json::to_string_pretty(&c.to_json()).expect("json")).map_err(io)?;
            } else {
                for o in &c.objects {
                    let mut flags = Vec::new();
                    if o.projective {
                        flags.push("projective");
                    }
                    if o.injective {
                        flags.push("injective");
                    }
                    let dims: Vec<String> = o.rep.dims().iter().map(usize::to_string).collect();
                    writeln!(out, "{}\tdims {}\t{}", o.label, dims.join(","), flags.join(" "))
                        .map_err(io)?;
                }
            }
        }
        Command::Arq { category, format } => {
            let ar = ar(&cli, category)?;
            write!(out, "{}", render(&ar, &RenderSpec::plain(*format))).map_err(io)?;
        }
        Command::Hammock {
            category,
            functor,
            format,
            report,
        } => hammock(&cli, category, functor, *format, *report, out)?,
        Command::Verify { suite, trials } => {
            let cfg = SuiteConfig {
                field: field(&cli)?,
                seed: cli.seed,
                trials: trials.unwrap_or(suite.default_trials()),
                dim_bound: cli.dim_bound,
            };
            let report = run_suite(*suite, &cfg)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).expect("json")).map_err(io)?;
            if !report.pass() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

/// Sequence read from `{"variance": "covariant" | "contravariant", "morphism": {..}}`.
fn sequence_from_file(path: &str, catalog: &CategoryCatalog) -> Result<PresetSeq, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let resolve = |id: &str| quiver_by_id(id);
    let m = value
        .get("morphism")
        .ok_or_else(|| Failure::Usage(format!("{path}: missing morphism")))?;
    let morphism = morphism_from_json(m, catalog.field, &resolve)?;
    if morphism.source().quiver().as_ref() != catalog.quiver.as_ref()
        || !catalog.contains(morphism.source()) || !catalog.contains(morphism.target()) {
        return Err(Failure::Usage(format!("{path}: objects outside {}", catalog.id)));
    }
    match value.get("variance").and_then(Value::as_str).unwrap_or("covariant") {
        "covariant" => Ok(PresetSeq::Right(RightExactSeq::from_morphism(morphism, catalog))),
        "contravariant" => Ok(PresetSeq::Left(LeftExactSeq::from_morphism(morphism))),
        other => Err(Failure::Usage(format!("{path}: unknown variance {other}"))),
    }
}

fn hammock(
    cli: &Cli,
    category: &str,
    functor: &str,
    format: Format,
    report: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let ar = ar(cli, category)?;
    let (h, verdict, oracle, notes): (HammockFunction, TheoremVerdict, Option<Vec<String>>, Vec<String>) =
        if let Some(path) = functor.strip_prefix('@') {
            let seq = sequence_from_file(path, &ar.catalog)?;
            let (h, (x, y, z)) = match &seq {
                PresetSeq::Right(s) => (covariant_hammock(s, &ar)?, (s.x().clone(), s.y().clone(), s.z.clone())),
                PresetSeq::Left(s) => (contravariant_hammock(s, &ar)?, (s.x.clone(), s.y().clone(), s.z().clone())),
            };
            let verdict = verify_theorem_isolated(&x, &y, &z, &h, &ar)?;
            (h, verdict, None, Vec::new())
        } else {
            let preset = preset_by_name(&ar.catalog, functor)?;
            let (h, verdict) = preset.verify(&ar)?;
            let mismatches = preset.oracle_mismatches(&ar)?;
            (h, verdict, Some(mismatches), preset.notes.clone())
        };
    let spec = RenderSpec {
        format,
        overlay: Some(h),
        verdict: Some(verdict.clone()),
        decorations: true,
    };
    write!(out, "{}", render(&ar, &spec)).map_err(io)?;
    if report && format != Format::Json {
        writeln!(out, "theorem1: {}", if verdict.pass { "pass" } else { "FAIL" }).map_err(io)?;
        for v in &verdict.violations {
            writeln!(out, "  {v}").map_err(io)?;
        }
        match &oracle {
            Some(m) if m.is_empty() => writeln!(out, "oracle: match").map_err(io)?,
            Some(m) => {
                writeln!(out, "oracle: {} mismatches", m.len()).map_err(io)?;
                for line in m {
                    writeln!(out, "  {line}").map_err(io)?;
                }
            }
            None => writeln!(out, "oracle: none").map_err(io)?,
        }
        for n in &notes {
            writeln!(out, "note: {n}").map_err(io)?;
        }
    }
    if report && !verdict.pass {
        return Err(Failure::Verification);
    }
    Ok(())
}
