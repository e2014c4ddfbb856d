//! `betti`: read, build, check and decompose Betti diagrams from the shell.
//!
//! [`run`] does all the work and returns the exit status with the text that
//! would go to stdout and stderr, so the binary is a thin wrapper and the
//! tests drive the same code path.

use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use betti_core::format::{self, Display};
use betti_core::order_complex::boundary_table;
use betti_core::rational::{self, int};
use betti_core::{
    check_bounds, codim2_pure_construction, enumerate_poset, facets, gorenstein3_decompose,
    gorenstein3_diagram, greedy_decompose, hilbert_function, is_quasipure, is_strictly_quasipure,
    koszul_diagram, phi_with, pure_diagram, pure_multiplicity, space_dimension, BettiDiagram,
    BoundaryCase, BoundsVerdict, DegreeSequence, Error, Exec, GorensteinData, PhiContext,
    ShiftBounds,
};
use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_NOT_IN_CONE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "betti", version, about = "Exact Betti diagram toolkit")]
struct Cli {
    /// How diagrams are printed.
    #[arg(long, global = true, value_enum, default_value_t = DisplayArg::Absolute)]
    display: DisplayArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum DisplayArg {
    Absolute,
    PaperRows,
}

impl From<DisplayArg> for Display {
    fn from(d: DisplayArg) -> Self {
        match d {
            DisplayArg::Absolute => Display::Absolute,
            DisplayArg::PaperRows => Display::PaperRows,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pure diagram of a degree sequence, e.g. `pure 0,2,5`.
    Pure { degrees: DegreeSequence },
    /// Greedy chain decomposition of a diagram file.
    Decompose { file: PathBuf },
    /// Multiplicity bounds and quasipurity of a diagram file.
    Check { file: PathBuf },
    /// Poset between two degree sequences, its facets and boundary faces.
    Poset {
        low: DegreeSequence,
        high: DegreeSequence,
    },
    /// Koszul diagram of a regular sequence of the given degrees.
    Ci { degrees: DegreeSequence },
    /// Gorenstein codimension-3 diagram and its chain decomposition.
    Gor3 { gens: GenDegrees, socle: i64 },
    /// Drop column `k` of a diagram file whose column `k` is concentrated.
    Reduce { file: PathBuf, k: usize },
    /// Monomial module with pure resolution for a length-3 sequence.
    Hilbert { degrees: DegreeSequence },
    /// Divide a diagram file by its zeroth Betti number.
    Normalize { file: PathBuf },
    /// Report which power-sum equations a diagram file violates.
    Validate { file: PathBuf },
}

/// Sorted generator degrees; repeats allowed, unlike a degree sequence.
#[derive(Debug, Clone)]
struct GenDegrees(Vec<i64>);

impl std::str::FromStr for GenDegrees {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(GenDegrees)
    }
}

/// Exit status with captured output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, msg: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help and --version
                Outcome::ok(text)
            };
        }
    };
    let display = Display::from(cli.display);
    match execute(cli.command, display) {
        Ok(outcome) => outcome,
        Err(Error::NotInCone { partial, remainder }) => Outcome::with_code(
            EXIT_NOT_IN_CONE,
            format::render_not_in_cone(&partial, &remainder),
        ),
        Err(e) => Outcome::error(EXIT_DOMAIN, e),
    }
}

fn read_diagram(path: &Path) -> betti_core::Result<BettiDiagram> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        reason: format!("{}: {e}", path.display()),
    })?;
    format::parse_diagram(&text)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict_name(v: BoundsVerdict) -> String {
    match v {
        BoundsVerdict::StrictlyInside => "strictly-inside".into(),
        BoundsVerdict::EqualLower => "equal-lower".into(),
        BoundsVerdict::EqualUpper => "equal-upper".into(),
        BoundsVerdict::EqualBoth => "equal-both".into(),
        BoundsVerdict::Violated(side) => format!("violated-{}", format!("{side:?}").to_lowercase()),
    }
}

fn case_name(c: BoundaryCase) -> &'static str {
    match c {
        BoundaryCase::EndpointRemoved => "endpoint-removed",
        BoundaryCase::OnePositionGap => "one-position-gap",
        BoundaryCase::AdjacentStaircase => "adjacent-staircase",
        BoundaryCase::Interior => "interior",
    }
}

fn execute(command: Command, display: Display) -> betti_core::Result<Outcome> {
    let mut out = String::new();
    match command {
        Command::Pure { degrees } => {
            out.push_str(&format::render_diagram(&pure_diagram(&degrees), display));
            let _ = writeln!(
                out,
                "# multiplicity {}",
                rational::format(&pure_multiplicity(&degrees))
            );
        }
        Command::Decompose { file } => {
            let dec = greedy_decompose(&read_diagram(&file)?)?;
            out.push_str(&format::render_decomposition(&dec));
        }
        Command::Check { file } => {
            let d = read_diagram(&file)?;
            let r = check_bounds(&d)?;
            let _ = writeln!(out, "lower {}", rational::format(&r.lower));
            let _ = writeln!(out, "upper {}", rational::format(&r.upper));
            let _ = writeln!(
                out,
                "scaled-multiplicity {}",
                rational::format(&r.scaled_multiplicity)
            );
            let _ = writeln!(out, "verdict {}", verdict_name(r.verdict));
            let _ = writeln!(out, "pure {}", yes_no(r.is_pure));
            if r.extended {
                out.push_str("extended yes\n");
            }
            let _ = writeln!(out, "quasipure {}", yes_no(is_quasipure(&d)?));
            let _ = writeln!(
                out,
                "strictly-quasipure {}",
                yes_no(is_strictly_quasipure(&d)?)
            );
        }
        Command::Poset { low, high } => {
            let bounds = ShiftBounds::new(low, high)?;
            poset_report(&bounds, &mut out)?;
        }
        Command::Ci { degrees } => {
            let d = koszul_diagram(degrees.degrees())?;
            out.push_str(&format::render_diagram(&d, display));
        }
        Command::Gor3 { gens, socle } => {
            let g = GorensteinData::new(socle, gens.0)?;
            out.push_str(&format::render_diagram(&gorenstein3_diagram(&g)?, display));
            out.push('\n');
            out.push_str(&format::render_decomposition(&gorenstein3_decompose(&g)?));
        }
        Command::Reduce { file, k } => {
            let d = read_diagram(&file)?;
            let ctx = PhiContext::infer(&d, k)?.ok_or(Error::MissingColumn(k))?;
            let _ = writeln!(out, "# phi_{k} with pivot {}", ctx.pivot);
            out.push_str(&format::render_diagram(&phi_with(&d, ctx)?, display));
        }
        Command::Hilbert { degrees } => {
            let spec = codim2_pure_construction(&degrees)?;
            let window = spec.support_window();
            let hf = hilbert_function(&spec, window.clone())?;
            let h = spec.claimed_h_vector()?;
            let _ = writeln!(out, "{spec}");
            let _ = writeln!(
                out,
                "hilbert {}..{}: {}",
                window.start(),
                window.end(),
                hf.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
            );
            let _ = writeln!(out, "h-vector {h}");
            let pass = window.zip(&hf).all(|(t, &v)| h.coeff(t) == int(v));
            out.push_str(if pass { "PASS\n" } else { "FAIL\n" });
            if !pass {
                return Ok(Outcome::with_code(EXIT_DOMAIN, out));
            }
        }
        Command::Normalize { file } => {
            let d = read_diagram(&file)?.normalize()?;
            out.push_str(&format::render_diagram(&d, display));
        }
        Command::Validate { file } => {
            let d = read_diagram(&file)?;
            let v = d.validate();
            if v.is_valid() {
                let _ = writeln!(out, "valid codim {}", d.codim());
            } else {
                for m in &v.violated {
                    let _ = writeln!(
                        out,
                        "violated m={m}: sum (-1)^i j^{m} b[i][j] = {}",
                        rational::format(&d.power_sum(*m as u32))
                    );
                }
                return Ok(Outcome::with_code(EXIT_DOMAIN, out));
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn poset_report(bounds: &ShiftBounds, out: &mut String) -> betti_core::Result<()> {
    let view = enumerate_poset(bounds)?;
    let _ = writeln!(out, "elements {}", view.len());
    for e in view.elements() {
        let _ = writeln!(out, "  {e}");
    }
    let _ = writeln!(out, "dimension {}", space_dimension(bounds));
    let faces = facets(bounds)?;
    let _ = writeln!(out, "facets {}", faces.len());
    for (n, f) in faces.iter().enumerate() {
        let chain: Vec<String> = f.chain().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  {n}: {}", chain.join(" < "));
    }
    out.push_str("boundary\n");
    for (f, i, v) in boundary_table(bounds, Exec::default())? {
        let halfspace = v
            .halfspace
            .map_or("-".to_string(), |(k, j)| format!("b[{k}][{j}]=0"));
        let _ = writeln!(
            out,
            "  facet {f} drop {i}: {} {} {halfspace}",
            if v.on_boundary {
                "boundary"
            } else {
                "interior"
            },
            case_name(v.case)
        );
    }
    Ok(())
}
