//! Command-line front end.
//!
//! Exit codes: 0 success, 2 unreadable input or parse error, 3 the
//! operation rejected its input, 4 a verification failed.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use deltamat_core::graph::recognize_binary;
use deltamat_core::hopf::{Flavor, HopfEngine};
use deltamat_core::invariants::{
    convolution_log, conway_functional, conway_w, tutte_eval_ordered, tutte_solve, Pivot,
    TutteParams, TutteSolution,
};
use deltamat_core::moves::{exchange, four_term, slide, BinaryCheck};
use deltamat_core::ribbon::ChordEnd;
use deltamat_core::{Rational, SetSystem};

use crate::format::{
    inline_code, parse_chords, parse_framed_graph, parse_mask, parse_rational, parse_ribbon,
    parse_set_system, parse_set_system_raw, write_chords, write_matrix, write_set_system,
    LabelledChords, ParseError,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Read { path: String, message: String },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Domain(#[from] deltamat_core::Error),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Parse { .. } => 2,
            CliError::Domain(deltamat_core::Error::CoidealViolation { .. })
            | CliError::Verification(_) => 4,
            CliError::Domain(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "deltamat",
    version,
    about = "Binary delta-matroids, Vassiliev moves and their Hopf algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Set-system predicates and operations
    #[command(subcommand)]
    Ss(SsCommand),
    /// Framed graphs given as symmetric F2 matrices
    #[command(subcommand)]
    Graph(GraphCommand),
    /// One-vertex ribbon graphs given as chord words
    #[command(subcommand)]
    Chord(ChordCommand),
    /// Ribbon graphs given as rotation systems
    #[command(subcommand)]
    Ribbon(RibbonCommand),
    /// Dimensions in the graded Hopf algebras
    #[command(subcommand)]
    Hopf(HopfCommand),
    /// Tutte recursions and the Conway weight system
    #[command(subcommand)]
    Inv(InvCommand),
}

#[derive(Debug, Args)]
pub struct Pair {
    #[arg(short = 'a')]
    pub a: usize,
    #[arg(short = 'b')]
    pub b: usize,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Print the labelled result instead of its canonical form
    #[arg(long)]
    pub raw: bool,
}

#[derive(Debug, Subcommand)]
pub enum SsCommand {
    /// Print the predicates of a set system
    Check { file: PathBuf },
    /// Symmetric difference of every feasible set with a mask
    Twist {
        file: PathBuf,
        #[arg(long, value_parser = mask_arg)]
        set: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Second move: slide a over b
    Slide {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        output: Output,
    },
    /// First move: exchange ends of a and b
    Exchange {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        output: Output,
    },
    /// The four signed terms D, D', D~, D~'
    Fourterm {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
        /// Reject input that is not a binary delta-matroid
        #[arg(long)]
        require_binary: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Disjoint union; elements of the second file follow those of the first
    Product {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Restriction to the elements of a mask
    Restrict {
        file: PathBuf,
        #[arg(long, value_parser = mask_arg)]
        keep: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Delete one element
    Delete {
        file: PathBuf,
        #[arg(short = 'e')]
        element: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Contract one element
    Contract {
        file: PathBuf,
        #[arg(short = 'e')]
        element: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Canonical representative of the isomorphism class
    Canon { file: PathBuf },
    /// Twisting set and framed graph witnessing that the system is binary
    Binary { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    /// Nondegeneracy delta-matroid
    Dm { file: PathBuf },
    /// Add row and column b to row and column a
    Slide {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EndArg {
    First,
    Second,
}

#[derive(Debug, Subcommand)]
pub enum ChordCommand {
    /// Framed intersection graph
    Igraph { file: PathBuf },
    /// Quasi-tree delta-matroid
    Dm { file: PathBuf },
    /// Slide an end of chord a along chord b (chords numbered by first appearance)
    Slide {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "first")]
        end: EndArg,
    },
    /// Swap the ends at positions p and p+1
    Exchange {
        file: PathBuf,
        #[arg(short = 'p')]
        position: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum RibbonCommand {
    /// Quasi-tree delta-matroid
    Dm { file: PathBuf },
    /// Number of boundary circles of a spanning subgraph
    Boundary {
        file: PathBuf,
        #[arg(long, value_parser = mask_arg)]
        edges: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Basis,
    Primitive,
    Decomposable,
    Quotient,
    QuotientPrimitive,
}

#[derive(Debug, Subcommand)]
pub enum HopfCommand {
    /// Print one dimension
    Dims {
        #[arg(long, value_parser = flavor_arg)]
        flavor: Flavor,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Primitive dimensions in degrees 1 and 2 against the published table
    Table1,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(short = 'x', value_parser = rational_arg, allow_hyphen_values = true)]
    pub x: Rational,
    #[arg(short = 'y', value_parser = rational_arg, allow_hyphen_values = true)]
    pub y: Rational,
    #[arg(short = 'z', value_parser = rational_arg, allow_hyphen_values = true)]
    pub z: Rational,
    #[arg(short = 'w', value_parser = rational_arg, allow_hyphen_values = true)]
    pub w: Rational,
}

impl ParamArgs {
    fn params(&self) -> TutteParams {
        TutteParams::new(
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
            self.w.clone(),
        )
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PivotArg {
    Lowest,
    Highest,
}

#[derive(Debug, Subcommand)]
pub enum InvCommand {
    /// Evaluate the Tutte-type recursion
    Tutte {
        file: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "lowest")]
        pivot: PivotArg,
        /// Also compare every removal order
        #[arg(long)]
        audit: bool,
    },
    /// Solve for functionals satisfying the recursion on all binary classes
    Solve {
        #[arg(long = "n")]
        n_max: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Conway weight system: 1 iff the ground set is feasible
    Conway { file: PathBuf },
    /// Convolution logarithm of the Conway weight system
    Logwc {
        #[arg(long)]
        degree: usize,
    },
}

fn mask_arg(s: &str) -> Result<u32, String> {
    parse_mask(s)
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s)
}

fn flavor_arg(s: &str) -> Result<Flavor, String> {
    Flavor::from_name(s)
        .ok_or_else(|| format!("unknown flavor `{s}`; expected one of S B Be K Ke FB FBe FK FKe"))
}

fn read(path: &Path) -> Result<String, CliError> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    text.map_err(|e| CliError::Read {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn parsed<T>(
    path: &Path,
    parse: impl FnOnce(&str) -> Result<T, ParseError>,
) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn emit(out: &mut String, s: &SetSystem, output: &Output) -> Result<(), CliError> {
    if output.raw {
        out.push_str(&write_set_system(s));
    } else {
        out.push_str(&write_set_system(&s.canonical_form()?.to_set_system()));
    }
    Ok(())
}

/// Runs one command, appending its standard output to `out`.
pub fn run(cli: Cli, out: &mut String) -> Result<(), CliError> {
    match cli.command {
        Command::Ss(cmd) => run_ss(cmd, out),
        Command::Graph(cmd) => run_graph(cmd, out),
        Command::Chord(cmd) => run_chord(cmd, out),
        Command::Ribbon(cmd) => run_ribbon(cmd, out),
        Command::Hopf(cmd) => run_hopf(cmd, out),
        Command::Inv(cmd) => run_inv(cmd, out),
    }
}

fn run_ss(cmd: SsCommand, out: &mut String) -> Result<(), CliError> {
    match cmd {
        SsCommand::Check { file } => {
            let (n, phi) = parsed(&file, parse_set_system_raw)?;
            let s = SetSystem::new(n, phi).ok();
            let flag = |f: fn(&SetSystem) -> bool| s.as_ref().is_some_and(f);
            writeln!(out, "proper: {}", s.is_some()).unwrap();
            writeln!(out, "delta-matroid: {}", flag(SetSystem::is_delta_matroid)).unwrap();
            writeln!(out, "even: {}", flag(SetSystem::is_even)).unwrap();
            writeln!(out, "binary: {}", flag(|s| recognize_binary(s).is_some())).unwrap();
            writeln!(out, "empty-feasible: {}", flag(SetSystem::contains_empty)).unwrap();
        }
        SsCommand::Twist { file, set, output } => {
            emit(out, &parsed(&file, parse_set_system)?.twist(set)?, &output)?
        }
        SsCommand::Slide { file, pair, output } => emit(
            out,
            &slide(&parsed(&file, parse_set_system)?, pair.a, pair.b)?,
            &output,
        )?,
        SsCommand::Exchange { file, pair, output } => emit(
            out,
            &exchange(&parsed(&file, parse_set_system)?, pair.a, pair.b)?,
            &output,
        )?,
        SsCommand::Fourterm {
            file,
            pair,
            require_binary,
            output,
        } => {
            let check = if require_binary {
                BinaryCheck::Enforce
            } else {
                BinaryCheck::Skip
            };
            let combo = four_term(&parsed(&file, parse_set_system)?, pair.a, pair.b, check)?;
            for (sign, s) in &combo.terms {
                writeln!(out, "{sign:+}").unwrap();
                emit(out, s, &output)?;
            }
        }
        SsCommand::Product {
            first,
            second,
            output,
        } => {
            let p =
                parsed(&first, parse_set_system)?.product(&parsed(&second, parse_set_system)?)?;
            emit(out, &p, &output)?
        }
        SsCommand::Restrict { file, keep, output } => emit(
            out,
            &parsed(&file, parse_set_system)?.restrict(keep)?,
            &output,
        )?,
        SsCommand::Delete {
            file,
            element,
            output,
        } => emit(
            out,
            &parsed(&file, parse_set_system)?.delete(element)?,
            &output,
        )?,
        SsCommand::Contract {
            file,
            element,
            output,
        } => emit(
            out,
            &parsed(&file, parse_set_system)?.contract(element)?,
            &output,
        )?,
        SsCommand::Canon { file } => emit(
            out,
            &parsed(&file, parse_set_system)?,
            &Output { raw: false },
        )?,
        SsCommand::Binary { file } => match recognize_binary(&parsed(&file, parse_set_system)?) {
            Some(w) => {
                writeln!(
                    out,
                    "binary: true\ntwist: {}",
                    crate::format::format_mask(w.twist_set)
                )
                .unwrap();
                out.push_str(&write_matrix(w.graph.adjacency()));
            }
            None => out.push_str("binary: false\n"),
        },
    }
    Ok(())
}

fn run_graph(cmd: GraphCommand, out: &mut String) -> Result<(), CliError> {
    match cmd {
        GraphCommand::Dm { file } => out.push_str(&write_set_system(
            &parsed(&file, parse_framed_graph)?.nondeg_delta_matroid(),
        )),
        GraphCommand::Slide { file, pair } => out.push_str(&write_matrix(
            parsed(&file, parse_framed_graph)?
                .slide(pair.a, pair.b)?
                .adjacency(),
        )),
    }
    Ok(())
}

fn run_chord(cmd: ChordCommand, out: &mut String) -> Result<(), CliError> {
    match cmd {
        ChordCommand::Igraph { file } => out.push_str(&write_matrix(
            parsed(&file, parse_chords)?
                .diagram
                .intersection_graph()
                .adjacency(),
        )),
        ChordCommand::Dm { file } => out.push_str(&write_set_system(
            &parsed(&file, parse_chords)?.diagram.delta_matroid()?,
        )),
        ChordCommand::Slide { file, pair, end } => {
            let c = parsed(&file, parse_chords)?;
            let end = match end {
                EndArg::First => ChordEnd::First,
                EndArg::Second => ChordEnd::Second,
            };
            let diagram = c.diagram.slide(pair.a, pair.b, end)?;
            out.push_str(&write_chords(&LabelledChords {
                labels: c.labels,
                diagram,
            }));
        }
        ChordCommand::Exchange { file, position } => {
            let c = parsed(&file, parse_chords)?;
            let diagram = c.diagram.end_exchange(position)?;
            out.push_str(&write_chords(&LabelledChords {
                labels: c.labels,
                diagram,
            }));
        }
    }
    Ok(())
}

fn run_ribbon(cmd: RibbonCommand, out: &mut String) -> Result<(), CliError> {
    match cmd {
        RibbonCommand::Dm { file } => out.push_str(&write_set_system(
            &parsed(&file, parse_ribbon)?.delta_matroid()?,
        )),
        RibbonCommand::Boundary { file, edges } => {
            writeln!(
                out,
                "{}",
                parsed(&file, parse_ribbon)?.boundary_components(edges)?
            )
            .unwrap();
        }
    }
    Ok(())
}

fn run_hopf(cmd: HopfCommand, out: &mut String) -> Result<(), CliError> {
    let mut engine = HopfEngine::new();
    match cmd {
        HopfCommand::Dims {
            flavor,
            degree,
            what,
        } => {
            let value = match what {
                What::Basis => engine.basis_dim(flavor, degree)?,
                What::Primitive => engine.primitive_dim(flavor, degree)?,
                What::Decomposable => engine.decomposable_dim(flavor, degree)?,
                What::Quotient => engine.four_term_quotient(flavor, degree)?.quotient_dim,
                What::QuotientPrimitive => engine.quotient_primitive_dim(flavor, degree)?,
            };
            writeln!(out, "{value}").unwrap();
        }
        HopfCommand::Table1 => {
            let report = engine.table1_report()?;
            write!(out, "{report}").unwrap();
            if !report.all_match() {
                let bad: Vec<&str> = report
                    .rows
                    .iter()
                    .filter(|r| !r.matches())
                    .map(|r| r.flavor.name())
                    .collect();
                return Err(CliError::Verification(format!(
                    "table rows differ from expected: {}",
                    bad.join(", ")
                )));
            }
        }
    }
    Ok(())
}

fn run_inv(cmd: InvCommand, out: &mut String) -> Result<(), CliError> {
    match cmd {
        InvCommand::Tutte {
            file,
            params,
            pivot,
            audit,
        } => {
            let pivot = match pivot {
                PivotArg::Lowest => Pivot::Lowest,
                PivotArg::Highest => Pivot::Highest,
            };
            let ev = tutte_eval_ordered(
                &parsed(&file, parse_set_system)?,
                &params.params(),
                pivot,
                audit,
            )?;
            writeln!(out, "{}", ev.value).unwrap();
            if let Some(same) = ev.order_independent {
                writeln!(
                    out,
                    "audit: {}",
                    if same {
                        "order-independent"
                    } else {
                        "order-dependent"
                    }
                )
                .unwrap();
            }
        }
        InvCommand::Solve { n_max, params } => {
            let mut engine = HopfEngine::new();
            match tutte_solve(&mut engine, n_max, &params.params())? {
                TutteSolution::Infeasible => out.push_str("infeasible\n"),
                TutteSolution::Solved(space) => {
                    writeln!(out, "dimension: {}", space.dim()).unwrap();
                    out.push_str("particular:\n");
                    for (code, v) in &space.particular.values {
                        writeln!(out, "  {} -> {v}", inline_code(code)).unwrap();
                    }
                    for (i, dir) in space.kernel.iter().enumerate() {
                        writeln!(out, "direction {i}:").unwrap();
                        for (code, v) in dir {
                            writeln!(out, "  {} -> {v}", inline_code(code)).unwrap();
                        }
                    }
                }
            }
        }
        InvCommand::Conway { file } => {
            writeln!(out, "{}", conway_w(&parsed(&file, parse_set_system)?)).unwrap()
        }
        InvCommand::Logwc { degree } => {
            let mut engine = HopfEngine::new();
            let wc = conway_functional(&mut engine, degree)?;
            let log = convolution_log(&mut engine, &wc, degree)?;
            for (code, v) in &log.values {
                writeln!(out, "{} -> {v}", inline_code(code)).unwrap();
            }
        }
    }
    Ok(())
}
