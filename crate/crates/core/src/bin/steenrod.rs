use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use steenrod_harmonics::experiments::{run, Command, ExperimentConfig, FamilySpec, Format, ParamSpec};
use steenrod_harmonics::scalar::Rational;

#[derive(Parser)]
#[command(name = "steenrod", version, about = "Harmonic spaces of deformed Steenrod operators")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hilbert series of a family's kernel.
    Hilbert(Opts),
    /// Graded Frobenius characteristic of a symmetric family.
    Frobenius(Opts),
    /// Tilde kernel as a sum of hat kernels.
    TildeDecomp(Opts),
    /// q-layers of the symbolic q-Steenrod kernel.
    QLayers(Opts),
    /// Low-degree kernel dimensions against [n]!_t.
    CoeffEquality(Opts),
    /// Closed-form kernel of a single operator.
    PsiBasis(Opts),
    /// Garnir polynomials and the induced lower bound.
    GarnirBound(Opts),
    /// Regularity of weighted power sums.
    Regseq(Opts),
    /// Bigraded diagonal kernel and apex polynomial.
    Diagonal(Opts),
    /// Monomial basis of the tilde quotient.
    WoodBasis(Opts),
}

#[derive(Args, Clone)]
struct Opts {
    /// Number of variables.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// classical, q-steenrod, tilde, hat or general.
    #[arg(long, default_value = "tilde")]
    family: String,
    /// Deformation parameter: a rational or "symbolic".
    #[arg(long, default_value = "symbolic")]
    q: String,
    /// Comma-separated coefficients or "symbolic".
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Comma-separated coefficients for general families.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Operator index or ideal shift.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Degree cap.
    #[arg(long)]
    cap: Option<usize>,
    /// text, json or csv.
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn config(command: Command, o: &Opts) -> steenrod_harmonics::Result<ExperimentConfig> {
    let mut c = ExperimentConfig::new(command, o.n);
    c.family = o.family.parse::<FamilySpec>()?;
    c.q = o.q.parse::<ParamSpec>()?;
    c.a = o.a.as_deref().map(str::parse).transpose()?;
    c.b = o
        .b
        .as_deref()
        .map(|s| s.split(',').map(|t| t.trim().parse::<Rational>()).collect())
        .transpose()?;
    c.k = o.k;
    c.cap = o.cap;
    c.format = o.format.parse::<Format>()?;
    c.seed = o.seed;
    Ok(c)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, opts) = match &cli.command {
        Cmd::Hilbert(o) => (Command::Hilbert, o),
        Cmd::Frobenius(o) => (Command::Frobenius, o),
        Cmd::TildeDecomp(o) => (Command::TildeDecomp, o),
        Cmd::QLayers(o) => (Command::QLayers, o),
        Cmd::CoeffEquality(o) => (Command::CoeffEquality, o),
        Cmd::PsiBasis(o) => (Command::PsiBasis, o),
        Cmd::GarnirBound(o) => (Command::GarnirBound, o),
        Cmd::Regseq(o) => (Command::Regseq, o),
        Cmd::Diagonal(o) => (Command::Diagonal, o),
        Cmd::WoodBasis(o) => (Command::WoodBasis, o),
    };
    let config = match config(command, opts) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(config.format);
    match &opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
