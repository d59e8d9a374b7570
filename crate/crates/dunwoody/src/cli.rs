//! Subcommands. Exit codes: 0 success or all checks pass, 1 a verification
//! (or admissibility) failure, 2 bad usage or parameters.

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dunwoody_core::diagram::{Diagram, DunwoodyParams, FamilySign, TorusFamily};
use dunwoody_core::presentations::Presentation;
use dunwoody_core::verify::verify_family;

use crate::dot::to_dot;
use crate::json::{homology_document, report_document, DiagramDocument, PresentationDoc};
use crate::text::format_presentation;

#[derive(Debug, Parser)]
#[command(
    name = "dunwoody",
    version,
    about = "Dunwoody diagrams and torus-knot branched coverings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a diagram and print it as JSON or DOT.
    Diagram {
        #[command(flatten)]
        select: Selector,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Json)]
        format: DiagramFormat,
    },
    /// Print the group presentation read off the diagram.
    Group {
        #[command(flatten)]
        select: Selector,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Print the first homology of the presented group.
    Homology {
        #[command(flatten)]
        select: Selector,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Verify one family member and print its report.
    Verify {
        /// `p,m,sign`
        #[arg(long, allow_hyphen_values = true)]
        family: FamilyArg,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
    },
    /// Verify a grid of family members, one JSON report per line.
    VerifyFamily {
        /// Inclusive range `lo..hi` (or a single value).
        #[arg(long)]
        p_range: RangeArg,
        #[arg(long)]
        m_range: RangeArg,
        #[arg(long, allow_hyphen_values = true)]
        sign: SignArg,
        #[arg(long, default_value_t = 8)]
        n_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Selector {
    /// `a,b,c,n,r,s`
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["family", "n"], required_unless_present = "family")]
    params: Option<ParamsArg>,
    /// `p,m,sign` with sign `+` or `-`
    #[arg(long, allow_hyphen_values = true)]
    family: Option<FamilyArg>,
    /// Covering degree for `--family`.
    #[arg(long, default_value_t = 1)]
    n: i64,
}

fn split_ints<const K: usize>(s: &str) -> Result<[i64; K], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != K {
        return Err(format!("expected {K} comma-separated integers"));
    }
    let mut out = [0i64; K];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .parse()
            .map_err(|_| format!("not an integer: {part:?}"))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
pub struct ParamsArg([i64; 6]);

impl FromStr for ParamsArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        split_ints::<6>(s).map(ParamsArg)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SignArg(FamilySign);

impl FromStr for SignArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim().parse().map(SignArg).map_err(str::to_string)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FamilyArg {
    p: i64,
    m: i64,
    sign: FamilySign,
}

impl FromStr for FamilyArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (nums, sign) = s.rsplit_once(',').ok_or("expected p,m,sign")?;
        let [p, m] = split_ints::<2>(nums)?;
        let SignArg(sign) = sign.parse()?;
        Ok(FamilyArg { p, m, sign })
    }
}

#[derive(Debug, Clone)]
pub struct RangeArg(RangeInclusive<i64>);

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("not an integer: {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (int(lo)?, int(hi.strip_prefix('=').unwrap_or(hi))?),
            None => (int(s)?, int(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(RangeArg(lo..=hi))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn family(arg: FamilyArg) -> Result<TorusFamily, CliError> {
    TorusFamily::new(arg.p, arg.m, arg.sign).map_err(usage)
}

fn resolve(select: &Selector) -> Result<DunwoodyParams, CliError> {
    match (&select.params, &select.family) {
        (Some(ParamsArg([a, b, c, n, r, s])), _) => {
            DunwoodyParams::new(*a, *b, *c, *n, *r, *s).map_err(usage)
        }
        (None, Some(f)) => family(*f)?.params(select.n).map_err(usage),
        (None, None) => Err(usage("one of --params or --family is required")),
    }
}

/// The closed `<α, γ | w, γ>` for `n = 1`, otherwise the cyclic
/// presentation; relators in cyclic normal form.
fn group_of(params: DunwoodyParams) -> Result<Presentation, CliError> {
    let pres = Diagram::new(params)
        .heegaard_presentation()
        .map_err(|e| CliError::Failed(format!("{params}: {e}")))?;
    let chosen = pres.closed.unwrap_or(pres.cyclic);
    let relators = chosen
        .relators()
        .iter()
        .map(|w| w.cyclic_normal_form(false))
        .collect();
    Ok(
        Presentation::new(chosen.generator_count(), relators, chosen.alphabet())
            .expect("same generators"),
    )
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Diagram { select, format } => {
            let d = Diagram::new(resolve(&select)?);
            match format {
                DiagramFormat::Json => json_line(out, &DiagramDocument::from_diagram(&d))?,
                DiagramFormat::Dot => out.write_all(to_dot(&d).as_bytes())?,
            }
        }
        Command::Group { select, format } => {
            let g = group_of(resolve(&select)?)?;
            match format {
                TextFormat::Text => writeln!(out, "{}", format_presentation(&g))?,
                TextFormat::Json => json_line(out, &PresentationDoc::new(&g))?,
            }
        }
        Command::Homology { select, format } => {
            let h = group_of(resolve(&select)?)?.homology();
            match format {
                TextFormat::Text => writeln!(out, "{h}")?,
                TextFormat::Json => json_line(out, &homology_document(&h))?,
            }
        }
        Command::Verify { family: f, n_max } => {
            let report = verify_family(family(f)?, n_max);
            json_line(out, &report_document(&report))?;
            if !report.verdict {
                return Err(CliError::Failed(format!(
                    "verification failed for {}",
                    report.family
                )));
            }
        }
        Command::VerifyFamily {
            p_range,
            m_range,
            sign: SignArg(sign),
            n_max,
        } => {
            // validate the whole grid before printing anything
            let grid = p_range
                .0
                .flat_map(|p| m_range.0.clone().map(move |m| (p, m)))
                .map(|(p, m)| TorusFamily::new(p, m, sign).map_err(usage))
                .collect::<Result<Vec<_>, _>>()?;
            let mut failures = Vec::new();
            for f in grid {
                let report = verify_family(f, n_max);
                json_line(out, &report_document(&report))?;
                out.flush()?;
                if !report.verdict {
                    failures.push(f.to_string());
                }
            }
            if !failures.is_empty() {
                return Err(CliError::Failed(format!(
                    "verification failed for {}",
                    failures.join(" ")
                )));
            }
        }
    }
    Ok(())
}
