use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use eigencurve_cli::{run, AnalysisRequest, Format, InputDocument, Subcommand, EXIT_USAGE};
use eigencurve_core::random::InstanceGenerator;
use eigencurve_core::Rational;

/// Multiplicities of eigenvalues of matrix polynomials, computed from the
/// determinant and as intersection indices with the singular matrices.
#[derive(Parser)]
#[command(name = "eigencurve", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Determinant, rational eigenvalues and factorization.
    Spectrum(AnalysisArgs),
    /// Algebraic multiplicity at each eigenvalue.
    Multiplicity(AnalysisArgs),
    /// Curve ideal and the admissibility verdict.
    Admissible(AnalysisArgs),
    /// Affine intersection index with det = 0.
    Intersect(AnalysisArgs),
    /// Intersection index on the graph of L.
    Resolve(AnalysisArgs),
    /// Degree count including the contribution at infinity.
    Bezout(AnalysisArgs),
    /// Generalized eigenspaces of T for pencils L = T1 (λI - T).
    Classical(AnalysisArgs),
    /// Every analysis above.
    All(AnalysisArgs),
    /// Print a seeded random input document.
    Generate(GenerateArgs),
}

#[derive(clap::Args)]
struct AnalysisArgs {
    /// Input document, or `-` for stdin.
    input: PathBuf,
    /// Point λ0 to analyze; defaults to every rational eigenvalue.
    #[arg(long, value_parser = parse_rational)]
    at: Option<Rational>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest truncation order N tried before reporting a non-isolated point.
    #[arg(long, default_value_t = eigencurve_core::multipoly::DEFAULT_MAX_TRUNCATION)]
    max_truncation: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// T1·λ + T0 with random T0 and nonzero T1.
    Pencil,
    /// P·D(λ)·Q with triangular D, so every eigenvalue is rational.
    Split,
    /// λ²I + λA + B.
    Monic,
}

#[derive(clap::Args)]
struct GenerateArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Kind::Split)]
    kind: Kind,
    /// Entry degree bound for `split`.
    #[arg(long, default_value_t = 2)]
    degree: usize,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: eigencurve_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (subcommand, args) = match cli.command {
        Command::Generate(g) => return generate(&g),
        Command::Spectrum(a) => (Subcommand::Spectrum, a),
        Command::Multiplicity(a) => (Subcommand::Multiplicity, a),
        Command::Admissible(a) => (Subcommand::Admissible, a),
        Command::Intersect(a) => (Subcommand::Intersect, a),
        Command::Resolve(a) => (Subcommand::Resolve, a),
        Command::Bezout(a) => (Subcommand::Bezout, a),
        Command::Classical(a) => (Subcommand::Classical, a),
        Command::All(a) => (Subcommand::All, a),
    };
    let req = AnalysisRequest {
        input: args.input,
        subcommand,
        at: args.at,
        format: args.format,
        max_truncation: args.max_truncation,
    };
    match run(&req) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn generate(args: &GenerateArgs) -> ExitCode {
    if args.n == 0 || args.degree == 0 {
        eprintln!("error: --n and --degree must be positive");
        return ExitCode::from(EXIT_USAGE);
    }
    let mut g = InstanceGenerator::new(args.seed);
    let l = match args.kind {
        Kind::Pencil => g.pencil(args.n),
        Kind::Split => g.curve_with_rational_spectrum(args.n, args.degree),
        Kind::Monic => g.monic_quadratic(args.n),
    };
    println!("{}", InputDocument::from_matrix_polynomial(&l).to_json());
    ExitCode::SUCCESS
}
