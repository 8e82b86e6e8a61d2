//! `plethyra`: command-line front end for the generating-series engine.

mod input;
mod render;

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use plethyra::coeffring::LaurentPoly;
use plethyra::equivariant::{group_macdonald, lefschetz_zeta, GradedEndomorphism};
use plethyra::genfun::{
    alternating_series, char_series, configuration_series, curve_punctual_series, hilbert_series, kunneth_series,
    macdonald_series, quotient_polynomial, schur_decomposition, schur_value, twisted_character, HilbertMode,
};
use plethyra::verify::{run_all, VerifyConfig};

use input::{
    parse_assignment, parse_character, parse_group, parse_json, parse_poly, parse_series, parse_subgroup,
    parse_symfunc, SeriesInput, SpaceArgs, Specialization,
};
use render::{Post, Report};

const DEFAULT_MAX_DEGREE: usize = 12;
const DEFAULT_CAP: usize = 24;

#[derive(Parser)]
#[command(
    name = "plethyra",
    version,
    about = "Exact generating series for characters of symmetric group actions on tensor powers"
)]
struct Cli {
    /// Truncation degree in t
    #[arg(short = 'N', long = "max-degree", global = true)]
    max_degree: Option<usize>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Power-sum specialization: p=1, p=alt, p=forget or p=[v1,v2,...]
    #[arg(long, global = true)]
    specialize: Option<String>,

    /// Substitute into output polynomials, e.g. --set z=1 or --set y=x=1
    #[arg(long = "set", global = true)]
    set: Vec<String>,

    /// Shorthand for --set z=VALUE
    #[arg(long, global = true)]
    z: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Ordered,
    Symmetric,
}

#[derive(Subcommand)]
enum Command {
    /// Character series Σ tr H*(X^n) t^n with power-sum coefficients
    Series {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Twisted character ch(V) evaluated on X
    Twist {
        /// triv:n, sign:n, regular:n, irr:2,1, JSON or @file
        #[arg(long = "char")]
        character: String,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Schur functor value: Poincaré polynomial of the V-isotypic part
    Schur {
        #[arg(long = "char")]
        character: String,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Decomposition of H*(X^n) into Schur functors
    Decompose {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Poincaré series of the symmetric products
    Macdonald {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Poincaré series of the sign-isotypic parts
    Alternating {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// exp(P t): the action forgotten
    Kunneth {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Poincaré polynomial of X^n / K
    Quotient {
        /// trivial:n, sym:n, cyclic:n, JSON or @file
        #[arg(long)]
        subgroup: String,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Character series of ordered configuration spaces
    ConfigSpace {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Hilbert-scheme style series from a punctual series
    Hilbert {
        /// Punctual series JSON or @file (default 1 + t + t^2 + …)
        #[arg(long)]
        punctual: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Symmetric)]
        mode: ModeArg,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Lefschetz zeta function of a graded endomorphism
    Zeta {
        /// Endomorphism JSON or @file
        #[arg(long)]
        endo: String,
        /// Ignore the grading (z = 1)
        #[arg(long)]
        ungraded: bool,
    },
    /// Macdonald series of a class function on a finite group
    GroupMacdonald {
        /// trivial, cyclic:n, sym:n, JSON or @file
        #[arg(long)]
        group: String,
        /// JSON object mapping class names to polynomials, or @file
        #[arg(long = "class-function")]
        class_function: String,
    },
    /// Plethysm f ∘ g of symmetric functions
    Plethysm {
        /// p:2,1, h:n, e:n, s:2,1, a polynomial, JSON or @file
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
    },
    /// exp of a series with zero constant term
    Exp {
        #[arg(long)]
        series: String,
    },
    /// log of a series with constant term 1
    Log {
        #[arg(long)]
        series: String,
    },
    /// Plethystic exponential
    Pexp {
        #[arg(long)]
        series: String,
    },
    /// Plethystic logarithm
    Plog {
        #[arg(long)]
        series: String,
    },
    /// Power structure (1 + A)^b
    Power {
        #[arg(long)]
        base: String,
        /// Polynomial or symmetric function exponent
        #[arg(long)]
        exponent: String,
    },
    /// Run the invariant suite; exit status 1 on any failure
    Verify {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

enum Outcome {
    Done(Report),
    VerifyFailed(Report),
}

fn max_degree_cap() -> Result<usize> {
    match std::env::var("PLETHYRA_MAX_DEGREE") {
        Ok(v) => v.trim().parse().with_context(|| format!("PLETHYRA_MAX_DEGREE must be an integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum SeriesOp {
    Exp,
    Log,
    Pexp,
    Plog,
}

fn series_op(arg: &str, n: usize, op: SeriesOp, post: &Post) -> Result<Report> {
    macro_rules! apply {
        ($s:expr) => {
            match op {
                SeriesOp::Exp => $s.exp(),
                SeriesOp::Log => $s.log(),
                SeriesOp::Pexp => $s.plethystic_exp(),
                SeriesOp::Plog => $s.plethystic_log(),
            }
        };
    }
    match parse_series(arg, n)? {
        SeriesInput::Poly(s) => Report::of(&post.poly_series(&apply!(s)?)?),
        SeriesInput::Char(s) => post.char_series(&apply!(s)?),
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let cap = max_degree_cap()?;
    let n = cli.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
    if n > cap {
        bail!("-N {n} exceeds the cap {cap}; raise it with PLETHYRA_MAX_DEGREE");
    }
    let mut assignment = BTreeMap::new();
    for s in &cli.set {
        parse_assignment(s, &mut assignment)?;
    }
    if let Some(z) = &cli.z {
        assignment.insert("z".to_string(), parse_poly(z)?);
    }
    let specialization = cli.specialize.as_deref().map(Specialization::parse).transpose()?;
    let post = Post { specialization, assignment };

    let report = match &cli.command {
        Command::Series { space } => post.char_series(&char_series(&space.descriptor()?, n))?,
        Command::Twist { character, space } => {
            post.symfunc(&twisted_character(&parse_character(character)?, &space.descriptor()?))?
        }
        Command::Schur { character, space } => {
            Report::of(&post.poly(&schur_value(&parse_character(character)?, &space.descriptor()?))?)?
        }
        Command::Decompose { degree, space } => {
            let dec = schur_decomposition(&space.descriptor()?, *degree);
            let entries = dec
                .iter()
                .filter(|(_, c)| c.num_terms() > 0)
                .map(|(mu, c)| Ok((mu.to_string(), post.poly(c)?)))
                .collect::<Result<_>>()?;
            Report::map::<LaurentPoly>(&entries)?
        }
        Command::Macdonald { space } => Report::of(&post.poly_series(&macdonald_series(&space.descriptor()?, n))?)?,
        Command::Alternating { space } => Report::of(&post.poly_series(&alternating_series(&space.descriptor()?, n))?)?,
        Command::Kunneth { space } => Report::of(&post.poly_series(&kunneth_series(&space.descriptor()?, n))?)?,
        Command::Quotient { subgroup, space } => {
            Report::of(&post.poly(&quotient_polynomial(&parse_subgroup(subgroup)?, &space.descriptor()?)?)?)?
        }
        Command::ConfigSpace { space } => post.char_series(&configuration_series(&space.descriptor()?, n))?,
        Command::Hilbert { punctual, mode, space } => {
            let punctual = match punctual {
                None => curve_punctual_series(n),
                Some(arg) => match parse_series(arg, n)? {
                    SeriesInput::Poly(s) => s,
                    SeriesInput::Char(_) => bail!("the punctual series must have polynomial coefficients"),
                },
            };
            let mode = match mode {
                ModeArg::Ordered => HilbertMode::Ordered,
                ModeArg::Symmetric => HilbertMode::Symmetric,
            };
            let n = n.min(punctual.max_degree());
            post.char_series(&hilbert_series(&space.descriptor()?, &punctual, n, mode)?)?
        }
        Command::Zeta { endo, ungraded } => {
            let g: GradedEndomorphism = parse_json(endo, "graded endomorphism")?;
            Report::of(&post.poly_series(&lefschetz_zeta(&g, n, !ungraded)?)?)?
        }
        Command::GroupMacdonald { group, class_function } => {
            let g = parse_group(group, n)?;
            let h: BTreeMap<String, LaurentPoly> = parse_json(class_function, "class function values")?;
            let series = group_macdonald(&g, &h, n)?;
            let entries = series.iter().map(|(k, s)| Ok((k.clone(), post.poly_series(s)?))).collect::<Result<_>>()?;
            Report::map(&entries)?
        }
        Command::Plethysm { outer, inner } => {
            post.symfunc(&parse_symfunc(outer)?.plethysm(&parse_symfunc(inner)?, n)?)?
        }
        Command::Exp { series } => series_op(series, n, SeriesOp::Exp, &post)?,
        Command::Log { series } => series_op(series, n, SeriesOp::Log, &post)?,
        Command::Pexp { series } => series_op(series, n, SeriesOp::Pexp, &post)?,
        Command::Plog { series } => series_op(series, n, SeriesOp::Plog, &post)?,
        Command::Power { base, exponent } => match parse_series(base, n)? {
            SeriesInput::Poly(s) => {
                let b = parse_symfunc(exponent)?;
                if b.top_degree().unwrap_or(0) > 0 {
                    bail!("a polynomial series needs a polynomial exponent");
                }
                Report::of(&post.poly_series(&s.power_structure(&b.constant_term())?)?)?
            }
            SeriesInput::Char(s) => post.char_series(&s.power_structure(&parse_symfunc(exponent)?)?)?,
        },
        Command::Verify { seed } => {
            let outcomes = run_all(VerifyConfig { max_degree: n, seed: *seed });
            let text = outcomes
                .iter()
                .map(|o| if o.passed { format!("PASS {}", o.name) } else { format!("FAIL {}: {}", o.name, o.detail) })
                .collect::<Vec<_>>()
                .join("\n");
            let report = Report { text, json: serde_json::to_value(&outcomes)? };
            return Ok(if outcomes.iter().all(|o| o.passed) {
                Outcome::Done(report)
            } else {
                Outcome::VerifyFailed(report)
            });
        }
    };
    Ok(Outcome::Done(report))
}

fn emit(format: Format, report: &Report) {
    match format {
        Format::Text => println!("{}", report.text),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).unwrap_or_default()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(Outcome::Done(report)) => {
            emit(format, &report);
            ExitCode::SUCCESS
        }
        Ok(Outcome::VerifyFailed(report)) => {
            emit(format, &report);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
