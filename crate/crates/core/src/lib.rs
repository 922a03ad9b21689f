//! Exact rational interval linear algebra.
//!
//! Interval matrices with rational endpoints, exact deciders (regularity,
//! full column rank, solvability, hulls, inverses, definiteness) built on
//! orthant decomposition and an exact simplex, plus sufficient conditions and
//! enclosure methods returning three-valued verdicts.

pub mod eigen;
pub mod error;
pub mod generate;
pub mod imx;
pub mod interval;
pub mod interval_matrix;
pub mod inverse;
pub mod lp;
pub mod matrix;
pub mod oracles;
pub mod orthant;
pub mod rational;
pub mod regularity;
pub mod spectral;
pub mod systems;
pub mod verdict;

pub use eigen::{Definiteness, EigenRangeReport, SymmetricIntervalMatrix};
pub use error::{Error, Result};
pub use generate::MatrixClass;
pub use interval::Interval;
pub use interval_matrix::{IntervalMatrix, IntervalVector, SignVector};
pub use inverse::{DetMethod, IntervalInverse};
pub use matrix::RealMatrix;
pub use rational::Rational;
pub use systems::{EnclosureOptions, Method, Preconditioning, SolveReport, SolvabilityMode, TcKind};
pub use verdict::{Certificate, Decision, Verdict, VerdictState};
