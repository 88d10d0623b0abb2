//! Command-line front end: argument definitions and command runners.
//!
//! Exit codes: 0 when every verdict matches its expectation, 1 when some
//! verdict does not (a vacuously passing control counts as a mismatch),
//! 2 for parse, type and usage errors.

pub mod parse;
pub mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braidist_core::braid::{braid_equal, strict_image};
use braidist_core::conditions::{
    default_assignment, run_suite, ConditionName, Expectation, Outcome, UnknownCondition,
};
use braidist_core::diagram::Orientation;
use braidist_core::graded::{Assignment, GradedModel};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::parse::{
    braid_word, parse_assignment, parse_binding, parse_braid, parse_diagram, parse_morphism,
};

#[derive(Debug, Parser)]
#[command(
    name = "braidist",
    version,
    about = "Check coherence diagrams of braided distributive categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check catalogue conditions in the graded model.
    Check(CheckArgs),
    /// Print the matrix of a morphism.
    Eval(EvalArgs),
    /// Compare two braid words (or two multiplicative morphisms).
    Braid(BraidArgs),
    /// Check a diagram read from a file.
    Diagram(DiagramArgs),
    /// Print the source and target of a morphism.
    Typecheck { morphism: String },
    /// List the catalogue.
    List,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Atom bases as NAME=d1,d2,... (an empty list is the zero module).
    #[arg(long, value_name = "NAME=DEGREES", num_args = 1..)]
    pub atoms: Vec<String>,
    /// File of `NAME = d1, d2, ...` lines.
    #[arg(long, value_name = "FILE")]
    pub assignment: Option<PathBuf>,
    /// Evaluate with q := 1, which makes the braiding symmetric.
    #[arg(long)]
    pub q1: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExpectBraid {
    Equal,
    Unequal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrientationArg {
    Cw,
    Ccw,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Condition names, diagram labels (F17) or lemma labels (LapIX).
    pub names: Vec<String>,
    /// Check the whole catalogue (the default when no names are given).
    #[arg(long)]
    pub all: bool,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Override the expected verdict of every selected condition.
    #[arg(long, value_enum)]
    pub expect: Option<Expect>,
    #[arg(long)]
    pub json: bool,
    /// Check conditions one at a time instead of on a thread pool.
    #[arg(long)]
    pub serial: bool,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub morphism: String,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Args)]
pub struct BraidArgs {
    pub first: String,
    pub second: String,
    /// Strand count for both words; by default the fewest that fit.
    #[arg(long)]
    pub strands: Option<usize>,
    /// Read both arguments as multiplicative morphisms over one atom.
    #[arg(long)]
    pub morphisms: bool,
    /// The atom used with --morphisms.
    #[arg(long, default_value = "x")]
    pub atom: String,
    #[arg(long, value_enum)]
    pub expect: Option<ExpectBraid>,
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_enum, default_value = "pass")]
    pub expect: Expect,
    /// Vertex the loop starts from.
    #[arg(long, default_value_t = 0)]
    pub base: usize,
    #[arg(long, value_enum, default_value = "cw")]
    pub orientation: OrientationArg,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{context}: {source}")]
    Parse {
        context: String,
        source: parse::ParseError,
    },
    #[error("{0}")]
    DiagramFile(#[from] parse::DiagramFileError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Unknown(#[from] UnknownCondition),
    #[error("{0}")]
    Failed(String),
}

fn failed(e: impl ToString) -> CliError {
    CliError::Failed(e.to_string())
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

impl ModelArgs {
    fn model(&self) -> GradedModel {
        if self.q1 {
            GradedModel::symmetric()
        } else {
            GradedModel::generic()
        }
    }

    /// Default bases, then the file, then individual `--atoms`.
    fn assignment(&self) -> Result<Assignment, CliError> {
        let mut a = default_assignment();
        if let Some(path) = &self.assignment {
            let parsed = parse_assignment(&read(path)?).map_err(|source| CliError::Parse {
                context: path.display().to_string(),
                source,
            })?;
            for (k, v) in parsed.iter() {
                a.insert(k.clone(), v.clone());
            }
        }
        for b in &self.atoms {
            let (k, v) = parse_binding(b).map_err(|source| CliError::Parse {
                context: format!("--atoms {b}"),
                source,
            })?;
            a.insert(k, v);
        }
        Ok(a)
    }
}

fn expectation(e: Expect) -> Expectation {
    match e {
        Expect::Pass => Expectation::Commutes,
        Expect::Fail => Expectation::Fails,
    }
}

fn check(args: &CheckArgs) -> Result<bool, CliError> {
    let names: Vec<ConditionName> = if args.all || args.names.is_empty() {
        ConditionName::ALL.to_vec()
    } else {
        args.names
            .iter()
            .map(|n| n.parse())
            .collect::<Result<_, _>>()?
    };
    let model = args.model.model();
    let assignment = args.model.assignment()?;
    let report = run_suite(&names, &model, &assignment, !args.serial).map_err(failed)?;
    let mut outcomes = Vec::with_capacity(report.results.len());
    for r in &report.results {
        let expected = args.expect.map_or(r.expected, expectation);
        outcomes.push(Outcome::classify(expected, r.verdict().commutes()));
    }
    if args.json {
        let entries: Vec<_> = report
            .results
            .iter()
            .map(|r| {
                let mut e = report::json_condition(r);
                if let Some(x) = args.expect {
                    e.expected = match x {
                        Expect::Pass => "commutes",
                        Expect::Fail => "fails",
                    };
                }
                e
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&entries).map_err(failed)?
        );
    } else {
        println!(
            "assignment: {assignment}{}",
            if args.model.q1 { "  (q := 1)" } else { "" }
        );
        for (r, o) in report.results.iter().zip(&outcomes) {
            println!("{}", report::human_line(r, *o));
        }
        let count = |o: Outcome| outcomes.iter().filter(|x| **x == o).count();
        println!(
            "{} pass, {} expected fail, {} vacuous control, {} mismatch in {:?}",
            count(Outcome::Pass),
            count(Outcome::ExpectedFail),
            count(Outcome::VacuousControl),
            count(Outcome::Unexpected),
            report.elapsed
        );
    }
    for (r, o) in report.results.iter().zip(&outcomes) {
        if *o == Outcome::VacuousControl {
            eprintln!(
                "vacuous control: {} was expected to fail but commutes under this assignment; \
                 it needs basis vectors of non-zero degree and generic q to say anything",
                r.name
            );
        }
    }
    Ok(outcomes.iter().all(|o| o.is_met()))
}

fn eval(args: &EvalArgs) -> Result<bool, CliError> {
    let m = parse_morphism(&args.morphism).map_err(|source| CliError::Parse {
        context: "morphism".into(),
        source,
    })?;
    let (dom, cod) = m.typecheck().map_err(failed)?;
    let assignment = args.model.assignment()?;
    let matrix = args
        .model
        .model()
        .interpret_morphism(&m, &assignment)
        .map_err(failed)?;
    println!("{dom} -> {cod}");
    println!("{matrix}");
    Ok(true)
}

fn typecheck(src: &str) -> Result<bool, CliError> {
    let m = parse_morphism(src).map_err(|source| CliError::Parse {
        context: "morphism".into(),
        source,
    })?;
    let (dom, cod) = m.typecheck().map_err(failed)?;
    println!("{dom} -> {cod}");
    Ok(true)
}

fn braid(args: &BraidArgs) -> Result<bool, CliError> {
    let (w1, w2) = if args.morphisms {
        let image = |src: &str| {
            let m = parse_morphism(src).map_err(|source| CliError::Parse {
                context: format!("morphism `{src}`"),
                source,
            })?;
            m.typecheck().map_err(failed)?;
            strict_image(&m, &args.atom).map_err(failed)
        };
        (image(&args.first)?, image(&args.second)?)
    } else {
        let word = |src: &str| {
            parse_braid(src).map_err(|source| CliError::Parse {
                context: format!("braid `{src}`"),
                source,
            })
        };
        let (c1, c2) = (word(&args.first)?, word(&args.second)?);
        let needed = c1.iter().chain(&c2).map(|c| c.index + 1).max().unwrap_or(1);
        let strands = Some(args.strands.unwrap_or(needed));
        (
            braid_word(c1, strands).map_err(failed)?,
            braid_word(c2, strands).map_err(failed)?,
        )
    };
    let equal = braid_equal(&w1, &w2).map_err(failed)?;
    println!(
        "{w1}  vs  {w2}  on {} strands: {}",
        w1.strands,
        if equal { "equal" } else { "not equal" }
    );
    Ok(match args.expect {
        None => true,
        Some(ExpectBraid::Equal) => equal,
        Some(ExpectBraid::Unequal) => !equal,
    })
}

fn diagram(args: &DiagramArgs) -> Result<bool, CliError> {
    let d = parse_diagram(&read(&args.file)?)?;
    if args.base >= d.vertices().len() {
        return Err(failed(format!(
            "vertex {} out of range ({} vertices)",
            args.base,
            d.vertices().len()
        )));
    }
    let orientation = match args.orientation {
        OrientationArg::Cw => Orientation::Clockwise,
        OrientationArg::Ccw => Orientation::Counterclockwise,
    };
    let model = args.model.model();
    let assignment = args.model.assignment()?;
    let report = d
        .check_commutes_from(&model, &assignment, args.base, orientation)
        .map_err(failed)?;
    let expected = expectation(args.expect);
    let outcome = Outcome::classify(expected, report.verdict.commutes());
    if args.json {
        let entry = report::json_entry(&report, None, expected);
        println!(
            "{}",
            serde_json::to_string_pretty(&[entry]).map_err(failed)?
        );
    } else {
        println!("{}", report::human_report(&report, outcome));
    }
    if outcome == Outcome::VacuousControl {
        eprintln!(
            "vacuous control: {} was expected to fail but commutes",
            report.diagram
        );
    }
    Ok(outcome.is_met())
}

fn list() -> Result<bool, CliError> {
    let mut out = io::stdout().lock();
    for &c in ConditionName::ALL {
        let line = writeln!(
            out,
            "{:<16} {:<5} {:<9} {} atoms  expect {:<9} {}",
            c.as_str(),
            c.figure().unwrap_or("-"),
            c.lemma().unwrap_or("-"),
            c.arity(),
            c.expectation().to_string(),
            c.summary()
        );
        // A closed pipe (`braidist list | head`) is not an error.
        if line.is_err() {
            break;
        }
    }
    Ok(true)
}

pub fn run(cli: &Cli) -> ExitCode {
    let result = match &cli.command {
        Command::Check(a) => check(a),
        Command::Eval(a) => eval(a),
        Command::Braid(a) => braid(a),
        Command::Diagram(a) => diagram(a),
        Command::Typecheck { morphism } => typecheck(morphism),
        Command::List => list(),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
