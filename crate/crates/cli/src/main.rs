mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use report::{CliError, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "intlin", version, about = "Exact rational interval linear algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide or test a matrix property.
    Check {
        property: Property,
        matrix: PathBuf,
        /// Use sufficient condition K instead of the exact decision.
        #[arg(long, conflicts_with = "exact")]
        cond: Option<u8>,
        /// Use the exact decision (the default where one exists).
        #[arg(long)]
        exact: bool,
        /// Test semidefiniteness instead of definiteness (strong-pd).
        #[arg(long)]
        semidefinite: bool,
    },
    /// Hull or enclosure of the solution set of A x = b.
    Solve {
        matrix: PathBuf,
        rhs: PathBuf,
        #[arg(long, value_enum, default_value_t = SolveMethod::Auto)]
        method: SolveMethod,
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Weak, strong, nonnegative, tolerance or control solvability.
    Solvable {
        matrix: PathBuf,
        rhs: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Treat the system as A x <= b.
        #[arg(long)]
        ineq: bool,
    },
    /// Membership of a point in a solution set.
    Member {
        matrix: PathBuf,
        rhs: PathBuf,
        #[arg(long)]
        x: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Solution)]
        kind: Kind,
        /// Parameter box (K x 1) for `--kind parametric`; the matrix and
        /// right-hand side files then stack the K coefficient blocks.
        #[arg(long)]
        params: Option<PathBuf>,
    },
    /// Interval inverse.
    Inverse {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = InverseMethod::Exact)]
        method: InverseMethod,
    },
    /// Determinant range.
    Det {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = DetArg::Exact)]
        method: DetArg,
    },
    /// Eigenvalue and eigenvector queries.
    Eig {
        matrix: PathBuf,
        /// Restrict to symmetric members.
        #[arg(long)]
        sym: bool,
        #[arg(long, group = "query", allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, group = "query")]
        vector: Option<PathBuf>,
        /// With `--vector`: test for a Perron vector.
        #[arg(long, requires = "vector")]
        perron: bool,
        #[arg(long, group = "query")]
        range: bool,
        #[arg(long, group = "query")]
        rho: bool,
    },
    /// Seeded random instance in .imx form.
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1/2")]
        radius: String,
        #[arg(long, value_enum, default_value_t = Class::General)]
        class: Class,
        /// Emit an m x 1 right-hand side instead of a matrix.
        #[arg(long)]
        rhs: bool,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Subcommand, Debug)]
enum OracleOp {
    /// Sample members on a rational grid.
    Sample {
        matrix: PathBuf,
        #[arg(long)]
        rhs: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long)]
        symmetric: bool,
    },
    /// Singularity from the signs of all endpoint determinants (n <= 3).
    DetSingularity { matrix: PathBuf },
    /// Hull of all endpoint-system solutions (n <= 3).
    SystemHull { matrix: PathBuf, rhs: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    Regular,
    Singular,
    Fullrank,
    InverseNonneg,
    StrongPd,
    WeakPd,
    Hurwitz,
    HurwitzSym,
    SchurSym,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SolveMethod {
    Auto,
    Hull,
    IntGe,
    Jacobi,
    GaussSeidel,
    Krawczyk,
    Hbr,
    Bidiagonal,
    Diagonal,
    InverseNonneg,
    Lsq,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Weak,
    Strong,
    NonnegWeak,
    NonnegStrong,
    Tolerance,
    Control,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Solution,
    Tolerance,
    Control,
    Parametric,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum InverseMethod {
    Exact,
    Enclosure,
    UnitMidpoint,
    Nonneg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DetArg {
    Exact,
    Enclosure,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    General,
    Bidiagonal,
    #[value(name = "mmatrix")]
    MMatrix,
    Symmetric,
    UnitMidpoint,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let start = Instant::now();
    let result = commands::run(cli.command);
    eprintln!("time_ms={}", start.elapsed().as_millis());
    match result {
        Ok(report) => {
            print!("{}", report.render());
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
