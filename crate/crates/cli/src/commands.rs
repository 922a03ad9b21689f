use std::fs;
use std::path::Path;

use intlin_core::eigen::{self, Definiteness, SymmetricIntervalMatrix};
use intlin_core::generate::{generate, generate_rhs};
use intlin_core::imx::{emit_matrix, emit_vector, parse_matrix, parse_real_vector, parse_vector};
use intlin_core::inverse::{self, IntervalInverse};
use intlin_core::matrix::format_vector;
use intlin_core::rational::parse_rational;
use intlin_core::regularity;
use intlin_core::systems::{self, ParametricSystem};
use intlin_core::{
    oracles, Decision, DetMethod, EnclosureOptions, Error, IntervalMatrix, IntervalVector, MatrixClass, Method,
    RealMatrix, SolvabilityMode, SolveReport, TcKind,
};

use crate::report::{CliError, CliResult, Report};
use crate::{Class, Command, DetArg, InverseMethod, Kind, Mode, OracleOp, Property, SolveMethod};

/// Largest order for which `--method auto` falls back to the orthant hull.
const AUTO_HULL_MAX: usize = 10;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<IntervalMatrix, CliError> {
    Ok(parse_matrix(&read(path)?)?)
}

fn load_vector(path: &Path) -> Result<IntervalVector, CliError> {
    Ok(parse_vector(&read(path)?)?)
}

fn symmetric(a: IntervalMatrix) -> Result<SymmetricIntervalMatrix, CliError> {
    Ok(SymmetricIntervalMatrix::new(a)?)
}

pub fn run(command: Command) -> CliResult {
    match command {
        Command::Check {
            property,
            matrix,
            cond,
            exact: _,
            semidefinite,
        } => check(property, &load_matrix(&matrix)?, cond, semidefinite),
        Command::Solve {
            matrix,
            rhs,
            method,
            max_iter,
        } => solve(&load_matrix(&matrix)?, &load_vector(&rhs)?, method, max_iter),
        Command::Solvable { matrix, rhs, mode, ineq } => {
            solvable(&load_matrix(&matrix)?, &load_vector(&rhs)?, mode, ineq)
        }
        Command::Member {
            matrix,
            rhs,
            x,
            kind,
            params,
        } => member(&matrix, &rhs, &x, kind, params.as_deref()),
        Command::Inverse { matrix, method } => invert(&load_matrix(&matrix)?, method),
        Command::Det { matrix, method } => {
            let m = match method {
                DetArg::Exact => DetMethod::Exact,
                DetArg::Enclosure => DetMethod::Enclosure,
            };
            let d = inverse::det_range(&load_matrix(&matrix)?, m)?;
            let mut r = Report::new("det");
            r.put("method", m)
                .put("det", d.to_string())
                .put("contains_zero", d.contains_zero())
                .put("exact", m == DetMethod::Exact);
            Ok(r)
        }
        Command::Eig {
            matrix,
            sym,
            lambda,
            vector,
            perron,
            range: _,
            rho,
        } => eig(&load_matrix(&matrix)?, sym, lambda, vector.as_deref(), perron, rho),
        Command::Gen {
            m,
            n,
            seed,
            radius,
            class,
            rhs,
        } => {
            let radius = parse_rational(&radius)?;
            let mut r = Report::default();
            let text = if rhs {
                emit_vector(&generate_rhs(m, seed, &radius))
            } else {
                let class = match class {
                    Class::General => MatrixClass::General,
                    Class::Bidiagonal => MatrixClass::Bidiagonal,
                    Class::MMatrix => MatrixClass::MMatrix,
                    Class::Symmetric => MatrixClass::Symmetric,
                    Class::UnitMidpoint => MatrixClass::UnitMidpoint,
                };
                emit_matrix(&generate(m, n, seed, &radius, class)?)
            };
            r.raw(text);
            Ok(r)
        }
        Command::Oracle { op } => oracle(op),
    }
}

fn check(p: Property, a: &IntervalMatrix, cond: Option<u8>, semi: bool) -> CliResult {
    let name = format!("check {}", property_name(p));
    let mut r = Report::new(&name);
    let no_cond = || -> Result<(), CliError> {
        match cond {
            Some(_) => Err(CliError::Usage(format!("{name} has no sufficient conditions"))),
            None => Ok(()),
        }
    };
    match p {
        Property::Regular => match cond {
            Some(k) => {
                r.verdict(&regularity::regularity_sufficient(a, k)?);
            }
            None => {
                r.decision(&regularity::is_regular_exact(a)?);
            }
        },
        Property::Singular => match cond {
            Some(k) => {
                r.verdict(&regularity::singularity_sufficient(a, k)?);
            }
            None => {
                let d = regularity::is_regular_exact(a)?;
                r.decision(&Decision {
                    answer: !d.answer,
                    certificate: d.certificate,
                });
            }
        },
        Property::Fullrank => match cond {
            Some(k) => {
                r.verdict(&regularity::fcr_sufficient(a, k)?);
            }
            None => {
                r.decision(&regularity::has_full_column_rank_exact(a)?);
            }
        },
        Property::InverseNonneg => {
            no_cond()?;
            let (d, inv) = inverse::inverse_nonneg(a)?;
            r.decision(&d);
            if let Some(inv) = inv {
                r.put("inverse", &inv.matrix);
            }
        }
        Property::StrongPd => {
            let s = symmetric(a.clone())?;
            let kind = if semi { Definiteness::Semidefinite } else { Definiteness::Definite };
            match cond {
                Some(k) => {
                    r.verdict(&eigen::strong_pd_sufficient(&s, k, kind)?);
                }
                None => {
                    r.decision(&eigen::strong_pd_vertex(&s, kind)?);
                }
            }
        }
        Property::WeakPd => {
            no_cond()?;
            r.verdict(&eigen::weak_pd(&symmetric(a.clone())?)?);
        }
        Property::Hurwitz => {
            no_cond()?;
            r.verdict(&eigen::hurwitz_general(a)?);
        }
        Property::HurwitzSym => {
            no_cond()?;
            r.decision(&eigen::hurwitz_sym(&symmetric(a.clone())?)?);
        }
        Property::SchurSym => {
            no_cond()?;
            r.verdict(&eigen::schur_sym(&symmetric(a.clone())?)?);
        }
    }
    r.put("exact", cond.is_none());
    Ok(r)
}

fn property_name(p: Property) -> &'static str {
    match p {
        Property::Regular => "regular",
        Property::Singular => "singular",
        Property::Fullrank => "fullrank",
        Property::InverseNonneg => "inverse-nonneg",
        Property::StrongPd => "strong-pd",
        Property::WeakPd => "weak-pd",
        Property::Hurwitz => "hurwitz",
        Property::HurwitzSym => "hurwitz-sym",
        Property::SchurSym => "schur-sym",
    }
}

fn core_method(m: SolveMethod) -> Option<Method> {
    Some(match m {
        SolveMethod::IntGe => Method::IntGe,
        SolveMethod::Jacobi => Method::Jacobi,
        SolveMethod::GaussSeidel => Method::GaussSeidel,
        SolveMethod::Krawczyk => Method::Krawczyk,
        SolveMethod::Hbr => Method::Hbr,
        _ => return None,
    })
}

/// Exact and cheap first: diagonal, bidiagonal, inverse-nonnegative closed
/// form, M-matrix Gauss–Seidel, Hansen–Bliek–Rohn, orthant hull, Krawczyk.
fn solve_auto(a: &IntervalMatrix, b: &IntervalVector, opts: &EnclosureOptions) -> Result<SolveReport, Error> {
    let square = a.is_square();
    if square && a.is_diagonal() {
        if let Ok(r) = systems::hull_diagonal(a, b) {
            return Ok(r);
        }
    }
    if square && (a.is_lower_bidiagonal() || a.is_upper_bidiagonal()) {
        if let Ok(r) = systems::hull_bidiagonal(a, b) {
            return Ok(r);
        }
    }
    if square {
        if let Ok(r) = systems::hull_inverse_nonneg(a, b) {
            return Ok(r);
        }
        if a.is_m_matrix() {
            if let Ok(r) = systems::enclosure(a, b, Method::GaussSeidel, opts) {
                return Ok(r);
            }
        }
        if let Ok(r) = systems::enclosure(a, b, Method::Hbr, opts) {
            return Ok(r);
        }
    }
    if a.cols() <= AUTO_HULL_MAX {
        return systems::hull_exact(a, b);
    }
    if !square {
        return systems::lsq_enclosure(a, b);
    }
    systems::enclosure(a, b, Method::Krawczyk, opts)
}

fn solve(a: &IntervalMatrix, b: &IntervalVector, method: SolveMethod, max_iter: Option<usize>) -> CliResult {
    let mut opts = EnclosureOptions::default();
    if let Some(k) = max_iter {
        opts.max_iter = k;
    }
    let report = match method {
        SolveMethod::Auto => solve_auto(a, b, &opts)?,
        SolveMethod::Hull => systems::hull_exact(a, b)?,
        SolveMethod::Bidiagonal => systems::hull_bidiagonal(a, b)?,
        SolveMethod::Diagonal => systems::hull_diagonal(a, b)?,
        SolveMethod::InverseNonneg => systems::hull_inverse_nonneg(a, b)?,
        SolveMethod::Lsq => systems::lsq_enclosure(a, b)?,
        m => systems::enclosure(a, b, core_method(m).expect("enclosure method"), &opts)?,
    };
    let mut r = Report::new("solve");
    r.put("method", &report.method);
    match &report.enclosure {
        Some(x) => r.put("box", x),
        None => r.put("box", "empty"),
    };
    r.put("exact", report.exact)
        .put("iterations", report.iterations)
        .put("converged", report.converged)
        .put("insolvable", report.insolvability_detected);
    Ok(r)
}

fn solvable(a: &IntervalMatrix, b: &IntervalVector, mode: Mode, ineq: bool) -> CliResult {
    let mut r = Report::new("solvable");
    let core = match mode {
        Mode::Weak => Some(SolvabilityMode::Weak),
        Mode::Strong => Some(SolvabilityMode::Strong),
        Mode::NonnegWeak => Some(SolvabilityMode::NonnegWeak),
        Mode::NonnegStrong => Some(SolvabilityMode::NonnegStrong),
        Mode::Tolerance | Mode::Control => None,
    };
    let d = match (core, ineq) {
        (Some(m), false) => systems::solvability(a, b, m)?,
        (Some(m), true) => systems::ineq_solvability(a, b, m)?,
        (None, true) => return Err(CliError::Usage("--ineq applies to weak, strong and nonneg modes".into())),
        (None, false) => {
            let kind = if mode == Mode::Tolerance { TcKind::Tolerance } else { TcKind::Control };
            systems::tc_existence(a, b, kind)?
        }
    };
    r.put("mode", mode_name(mode)).put("system", if ineq { "inequalities" } else { "equations" });
    r.decision(&d);
    Ok(r)
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Weak => "weak",
        Mode::Strong => "strong",
        Mode::NonnegWeak => "nonneg-weak",
        Mode::NonnegStrong => "nonneg-strong",
        Mode::Tolerance => "tolerance",
        Mode::Control => "control",
    }
}

fn member(matrix: &Path, rhs: &Path, x: &Path, kind: Kind, params: Option<&Path>) -> CliResult {
    let x = parse_real_vector(&read(x)?)?;
    let mut r = Report::new("member");
    if kind == Kind::Parametric {
        let params = params.ok_or_else(|| CliError::Usage("--kind parametric needs --params".into()))?;
        let p = load_vector(params)?;
        let sys = parametric(&load_matrix(matrix)?, &load_vector(rhs)?, p)?;
        let hit = systems::is_solution_parametric(&sys, &x)?;
        r.put("kind", "parametric").put("verdict", hit.is_some());
        if let Some(p) = hit {
            r.put("parameters", format_vector(&p));
        }
        return Ok(r);
    }
    let (a, b) = (load_matrix(matrix)?, load_vector(rhs)?);
    let (name, ok) = match kind {
        Kind::Solution => ("solution", systems::is_solution(&a, &b, &x)?),
        Kind::Tolerance => ("tolerance", systems::tc_membership(&a, &b, &x, TcKind::Tolerance)?),
        Kind::Control => ("control", systems::tc_membership(&a, &b, &x, TcKind::Control)?),
        Kind::Parametric => unreachable!(),
    };
    r.put("kind", name).put("verdict", ok);
    Ok(r)
}

/// Splits stacked `(K m) x n` and `(K m) x 1` files into `K` coefficient terms.
fn parametric(a: &IntervalMatrix, b: &IntervalVector, params: IntervalVector) -> Result<ParametricSystem, CliError> {
    let k = params.len();
    if k == 0 || !a.rows().is_multiple_of(k) || b.len() != a.rows() {
        return Err(CliError::Core(Error::DimensionMismatch(format!(
            "{} stacked rows for {k} parameters",
            a.rows()
        ))));
    }
    if !a.is_degenerate() || !b.is_degenerate() {
        return Err(CliError::Core(Error::PreconditionViolated(
            "parametric coefficient blocks must be real".into(),
        )));
    }
    let m = a.rows() / k;
    let mid = a.midpoint();
    let bm = b.midpoint();
    let matrices = (0..k)
        .map(|t| RealMatrix::from_fn(m, a.cols(), |i, j| mid[(t * m + i, j)].clone()))
        .collect();
    let vectors = (0..k).map(|t| bm[t * m..(t + 1) * m].to_vec()).collect();
    Ok(ParametricSystem::new(matrices, vectors, params)?)
}

fn put_inverse(r: &mut Report, inv: &IntervalInverse) {
    r.put("method", &inv.method).put("inverse", &inv.matrix).put("exact", inv.exact);
}

fn invert(a: &IntervalMatrix, method: InverseMethod) -> CliResult {
    let mut r = Report::new("inverse");
    match method {
        InverseMethod::Exact => put_inverse(&mut r, &inverse::inverse_exact(a)?),
        InverseMethod::Enclosure => {
            let opts = EnclosureOptions::default();
            let inv = [Method::Hbr, Method::Krawczyk, Method::GaussSeidel, Method::IntGe]
                .into_iter()
                .map(|m| inverse::inverse_enclosure(a, m, &opts))
                .reduce(|acc, next| acc.or(next))
                .expect("nonempty")?;
            put_inverse(&mut r, &inv);
        }
        InverseMethod::UnitMidpoint => {
            let n = a.require_square()?;
            if a.midpoint() != RealMatrix::identity(n) {
                return Err(Error::PreconditionViolated("midpoint matrix must be the identity".into()).into());
            }
            put_inverse(&mut r, &inverse::inverse_unit_midpoint(&a.radius())?);
        }
        InverseMethod::Nonneg => {
            let (d, inv) = inverse::inverse_nonneg(a)?;
            r.decision(&d);
            if let Some(inv) = inv {
                put_inverse(&mut r, &inv);
            }
        }
    }
    Ok(r)
}

fn eig(
    a: &IntervalMatrix,
    sym: bool,
    lambda: Option<String>,
    vector: Option<&Path>,
    perron: bool,
    rho: bool,
) -> CliResult {
    let mut r = Report::new("eig");
    if sym && (lambda.is_some() || vector.is_some()) {
        return Err(CliError::Usage("--sym applies to --range only".into()));
    }
    if let Some(l) = lambda {
        let l = parse_rational(&l)?;
        r.decision(&eigen::is_eigenvalue(a, &l)?);
        return Ok(r);
    }
    if let Some(v) = vector {
        let x = parse_real_vector(&read(v)?)?;
        let d = if perron {
            eigen::is_perron_vector(a, &x)?
        } else {
            eigen::is_eigenvector(a, &x)?
        };
        r.decision(&d);
        return Ok(r);
    }
    if rho {
        let (lo, hi) = eigen::spectral_radius_range(a)?;
        r.put("rho_lower", &lo).put("rho_upper", &hi);
        r.put("rho", intlin_core::Interval::new(lo.lo().clone(), hi.hi().clone())?);
        return Ok(r);
    }
    let s = symmetric(a.clone())?;
    let rep = eigen::sym_eigen_range(&s)?;
    r.put("lambda_min", &rep.lambda_min)
        .put("lambda_max", &rep.lambda_max)
        .put("exact_min", rep.exact_min)
        .put("exact_max", rep.exact_max)
        .put("subclass", rep.subclass.as_deref().unwrap_or("none"));
    if let Some(v) = &rep.vertex_min {
        r.put("vertex_min", v);
    }
    if let Some(v) = &rep.vertex_max {
        r.put("vertex_max", v);
    }
    Ok(r)
}

fn oracle(op: OracleOp) -> CliResult {
    match op {
        OracleOp::Sample {
            matrix,
            rhs,
            seed,
            count,
            symmetric,
        } => {
            let a = load_matrix(&matrix)?;
            let mut r = Report::new("oracle sample");
            if symmetric {
                symmetric_check(&a)?;
                for m in oracles::sample_symmetric_members(&a, seed, count) {
                    r.put("member", m);
                }
                return Ok(r);
            }
            let b = rhs.as_deref().map(load_vector).transpose()?;
            for s in oracles::sample_members(&a, b.as_ref(), seed, count) {
                r.put("member", &s.matrix);
                if b.is_some() {
                    r.put("rhs", format_vector(&s.rhs));
                }
            }
            Ok(r)
        }
        OracleOp::DetSingularity { matrix } => {
            let singular = oracles::vertex_det_singularity(&load_matrix(&matrix)?)?;
            let mut r = Report::new("oracle det-singularity");
            r.put("verdict", singular);
            Ok(r)
        }
        OracleOp::SystemHull { matrix, rhs } => {
            let h = oracles::vertex_system_hull(&load_matrix(&matrix)?, &load_vector(&rhs)?)?;
            let mut r = Report::new("oracle system-hull");
            r.put("box", h);
            Ok(r)
        }
    }
}

fn symmetric_check(a: &IntervalMatrix) -> Result<(), CliError> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric.into());
    }
    Ok(())
}
