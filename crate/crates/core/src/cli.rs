//! Command-line front end.
//!
//! Exit codes: `0` on success, `1` when a verification fails or the library
//! reports a mathematical error (for example `NotPrime`), `2` for usage and
//! parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expmap::{format_rational, ExpMap};
use crate::grading::{FiltrationSpec, Grading, DEFAULT_ITERATION_CAP};
use crate::poly::{parse, Polynomial, Symbol, SymbolSet, MAX_PARAM_INDEX};
use crate::quotient::QuotientRingSpec;
use crate::replay::{replay_all, EtaChoice, ReplayConfig, RingChoice};

/// Environment variable overriding the filtration iteration cap.
pub const ITER_CAP_VAR: &str = "KRW_ITER_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "krw",
    version,
    about = "Exact computations in k[x,y,z,t]/(x^2*y + z^2 + t^3 + eta(x))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct EtaArgs {
    /// eta as a polynomial in x and parameters c0..c99
    #[arg(long, conflicts_with = "eta_generic", allow_hyphen_values = true)]
    eta: Option<String>,
    /// Use the generic eta = c0 + c1*x + ... + cN*x^N
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u8).range(0..=MAX_PARAM_INDEX as i64))]
    eta_generic: Option<u8>,
}

#[derive(Args, Debug)]
struct Output {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the full verification suite and print the report
    Verify {
        #[command(flatten)]
        eta: EtaArgs,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random samples per sampled check
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Canonical normal form
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        eta: EtaArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Decomposition h + sum (u_j*x + v_j)*y^j
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        eta: EtaArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Filtration degree and leading form
    Lf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        grading: String,
        #[command(flatten)]
        eta: EtaArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Filtration degree
    Degree {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        grading: String,
        #[command(flatten)]
        eta: EtaArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Exponential maps
    #[command(subcommand)]
    Exp(ExpCommand),
}

#[derive(Subcommand, Debug)]
enum ExpCommand {
    /// Image of an element in R[U]
    Apply {
        /// phi1, phi2 or a JSON map file
        #[arg(long)]
        map: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        eta: EtaArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Well-definedness and iterativity
    Check {
        #[arg(long)]
        map: String,
        #[command(flatten)]
        eta: EtaArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Whether an element is fixed
    Fixed {
        #[arg(long)]
        map: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        eta: EtaArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Induced map on the associated graded ring
    Induce {
        #[arg(long)]
        map: String,
        #[arg(long)]
        grading: String,
        #[command(flatten)]
        eta: EtaArgs,
        #[command(flatten)]
        output: Output,
    },
}

/// Failure of a command, carrying its exit code.
enum Failure {
    Usage(String),
    Library(Error),
    /// The computation ran but a verification did not hold. The report has
    /// already been written.
    Unverified,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Library(e) => match e {
                Error::Syntax { .. }
                | Error::UnknownIdentifier(_)
                | Error::UnknownName(_)
                | Error::ContainsY(_)
                | Error::ConfigInvalid(_)
                | Error::MapFile(_) => 2,
                _ => 1,
            },
            Failure::Unverified => 1,
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Runs the CLI with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
                return 0;
            }
            let _ = err.write_all(rendered.as_bytes());
            return 2;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
                Failure::Library(e) => {
                    let _ = writeln!(err, "error: {e}");
                }
                Failure::Unverified => {}
            }
            failure.exit_code()
        }
    }
}

fn iteration_cap() -> std::result::Result<usize, Failure> {
    match std::env::var(ITER_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{ITER_CAP_VAR} must be a nonnegative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_ITERATION_CAP),
    }
}

fn eta_choice(args: &EtaArgs) -> Result<EtaChoice> {
    match (&args.eta, args.eta_generic) {
        (Some(text), _) => {
            let allowed = SymbolSet::new(
                std::iter::once(Symbol::X).chain((0..=MAX_PARAM_INDEX).map(Symbol::Param)),
            );
            Ok(EtaChoice::Explicit(parse(text, &allowed)?))
        }
        (None, Some(n)) => Ok(EtaChoice::Generic(n)),
        (None, None) => Ok(EtaChoice::Generic(3)),
    }
}

fn ring(args: &EtaArgs) -> Result<Arc<QuotientRingSpec>> {
    QuotientRingSpec::translate(&eta_choice(args)?.polynomial())
}

fn expression(text: &str) -> Result<Polynomial> {
    parse(text, &SymbolSet::main_with_params(Some(MAX_PARAM_INDEX)))
}

fn grading(name: &str) -> std::result::Result<Grading, Failure> {
    Grading::by_name(name).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown grading `{name}` (expected omega1 or omega2)"
        ))
    })
}

/// The filtration for `grading`. `omega2` is a filtration of `R_c` with
/// `c = eta(0)`, so the ring is replaced accordingly.
fn filtration(
    ring: &Arc<QuotientRingSpec>,
    eta: &EtaArgs,
    grading: Grading,
    err: &mut dyn Write,
) -> std::result::Result<FiltrationSpec, Failure> {
    let ring = if grading.name() == "omega2" {
        let eta = eta_choice(eta)?.polynomial();
        let c = eta.substitute_one(Symbol::X, &Polynomial::zero());
        if c != eta {
            let _ = writeln!(err, "note: omega2 acts on the ring with eta = {c}");
        }
        QuotientRingSpec::translate(&c)?
    } else {
        ring.clone()
    };
    Ok(FiltrationSpec::new(&ring, grading)?.with_iteration_cap(iteration_cap()?))
}

fn load_map(spec: &str, ring: &Arc<QuotientRingSpec>) -> Result<ExpMap> {
    match spec {
        "phi1" | "phi2" => ExpMap::builtin(spec, ring),
        path => {
            let text = std::fs::read_to_string(Path::new(path))
                .map_err(|e| Error::MapFile(format!("{path}: {e}")))?;
            Ok(ExpMap::from_json(&text, ring)?.with_name(path))
        }
    }
}

fn emit(out: &mut dyn Write, json: bool, value: Value, text: impl std::fmt::Display) -> CmdResult {
    let written = if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&value).expect("json value")
        )
    } else {
        writeln!(out, "{text}")
    };
    written.map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Verify {
            eta,
            seed,
            samples,
            output,
        } => {
            let cfg = ReplayConfig {
                ring: RingChoice::Translate(eta_choice(&eta)?),
                sample_count: samples,
                rng_seed: seed,
                ..ReplayConfig::default()
            };
            let report = replay_all(&cfg)?;
            let text = if output.json {
                report.to_json()
            } else {
                report.to_string()
            };
            writeln!(out, "{text}")
                .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Unverified)
            }
        }
        Command::Nf { expr, eta, output } => {
            let r = ring(&eta)?;
            let nf = r.element(&expression(&expr)?);
            emit(
                out,
                output.json,
                json!({ "relation": r.relation().to_string(), "normalForm": nf.to_string() }),
                &nf,
            )
        }
        Command::Decompose { expr, eta, output } => {
            let r = ring(&eta)?;
            let d = r.element(&expression(&expr)?).decompose();
            let pairs: Vec<Value> = d
                .pairs
                .iter()
                .map(|(u, v)| json!({ "u": u.to_string(), "v": v.to_string() }))
                .collect();
            emit(
                out,
                output.json,
                json!({ "epsilon": d.epsilon, "h": d.h.to_string(), "pairs": pairs }),
                &d,
            )
        }
        Command::Lf {
            expr,
            grading: name,
            eta,
            output,
        } => {
            let r = ring(&eta)?;
            let filt = filtration(&r, &eta, grading(&name)?, err)?;
            let e = filt.ring().element(&expression(&expr)?);
            let lf = filt.degree_leading(&e)?;
            emit(
                out,
                output.json,
                json!({
                    "grading": name,
                    "degree": lf.degree,
                    "leadingForm": lf.form.to_string(),
                    "gradedRelation": filt.graded_ring().relation().to_string(),
                }),
                format_args!("degree: {}\nleading form: {}", lf.degree, lf.form),
            )
        }
        Command::Degree {
            expr,
            grading: name,
            eta,
            output,
        } => {
            let r = ring(&eta)?;
            let filt = filtration(&r, &eta, grading(&name)?, err)?;
            let d = filt.degree(&filt.ring().element(&expression(&expr)?))?;
            emit(out, output.json, json!({ "grading": name, "degree": d }), d)
        }
        Command::Exp(cmd) => exp(cmd, out, err),
    }
}

fn exp(cmd: ExpCommand, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        ExpCommand::Apply {
            map,
            expr,
            eta,
            output,
        } => {
            let r = ring(&eta)?;
            let phi = load_map(&map, &r)?;
            let image = phi.apply(&r.element(&expression(&expr)?))?;
            emit(
                out,
                output.json,
                json!({ "map": phi.name(), "image": image.to_string() }),
                &image,
            )
        }
        ExpCommand::Check { map, eta, output } => {
            let r = ring(&eta)?;
            let phi = load_map(&map, &r)?;
            let wd = phi.check_well_defined();
            let it = if wd.holds {
                Some(phi.check_iterative()?)
            } else {
                None
            };
            let iterative = it.as_ref().is_some_and(|o| o.holds);
            let mut text = format!("well-defined: {}", wd.holds);
            if let Some(w) = &wd.witness {
                text.push_str(&format!("\n  residue: {w}"));
            }
            match &it {
                Some(o) => {
                    text.push_str(&format!("\niterative: {}", o.holds));
                    if let Some(w) = &o.witness {
                        text.push_str(&format!("\n  mismatch: {w}"));
                    }
                }
                None => text.push_str("\niterative: not checked"),
            }
            let outcome = |holds: bool, witness: &Option<String>| json!({ "holds": holds, "witness": witness });
            emit(
                out,
                output.json,
                json!({
                    "map": phi.name(),
                    "relation": r.relation().to_string(),
                    "wellDefined": outcome(wd.holds, &wd.witness),
                    "iterative": it.as_ref().map(|o| outcome(o.holds, &o.witness)),
                }),
                text,
            )?;
            if wd.holds && iterative {
                Ok(())
            } else {
                Err(Failure::Unverified)
            }
        }
        ExpCommand::Fixed {
            map,
            expr,
            eta,
            output,
        } => {
            let r = ring(&eta)?;
            let phi = load_map(&map, &r)?;
            let e = r.element(&expression(&expr)?);
            let res = phi.is_fixed(&e)?;
            let text = match &res.witness {
                None => "fixed".to_string(),
                Some((i, d)) => format!("not fixed: D{i}({e}) = {d}"),
            };
            emit(
                out,
                output.json,
                json!({
                    "fixed": res.fixed,
                    "component": res.witness.as_ref().map(|(i, _)| i),
                    "witness": res.witness.as_ref().map(|(_, d)| d.to_string()),
                }),
                text,
            )
        }
        ExpCommand::Induce {
            map,
            grading: name,
            eta,
            output,
        } => {
            let r = ring(&eta)?;
            let filt = filtration(&r, &eta, grading(&name)?, err)?;
            let phi = load_map(&map, filt.ring())?;
            let res = phi.induce_graded(&filt)?;
            emit(
                out,
                output.json,
                json!({
                    "map": phi.name(),
                    "grading": res.grading.name(),
                    "uWeight": format_rational(&res.u_weight),
                    "scale": res.scale,
                    "verified": res.verified,
                    "images": res.induced.to_map_file(),
                    "gradedRelation": filt.graded_ring().relation().to_string(),
                }),
                &res,
            )
        }
    }
}
