//! Command-line front end. Reads polynomial documents, runs one command and
//! renders a JSON result. Exit status: 0 on success, 1 on a domain error,
//! 2 on malformed input or usage.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bezout::{bezout_matrix, sizing_degree, stacked};
use crate::error::Error;
use crate::exactlinalg::{Scalar, Tolerance, DEFAULT_TOL};
use crate::gcd_engine::{gcd_with, BasisChoice, GcdMethod, GcdResult};
use crate::json::{parse_poly_file, parse_roots, BasisSpec, DocError};
use crate::kernel_structure::{
    simple_common_root_with, verify_kernel_structure_with, KernelDescription, RootBlockSpec,
};
use crate::poly_bases::{Basis, BasisKind, Poly};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScalarMode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Barnett,
    Nullspace,
    Euclid,
}

impl From<MethodArg> for GcdMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Barnett => GcdMethod::BarnettPhi,
            MethodArg::Nullspace => GcdMethod::NullspacePhi,
            MethodArg::Euclid => GcdMethod::EuclidOracle,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bezout",
    version,
    about = "Bezout matrices and polynomial gcds in arbitrary bases"
)]
pub struct JobConfig {
    /// Scalar arithmetic.
    #[arg(long, global = true, value_enum, default_value = "exact")]
    pub scalar: ScalarMode,
    /// Relative zero tolerance (float mode only).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bezout matrix of P and Q.
    Bezout {
        /// `native`, `monomial`, `bernstein`, or a JSON basis object.
        #[arg(long)]
        basis: Option<String>,
        p: PathBuf,
        q: PathBuf,
    },
    /// Null space of the stacked Bezout matrix of P against Q1..Qr.
    Nullspace {
        /// `native`, `monomial`, `bernstein`, or a JSON basis object.
        #[arg(long)]
        basis: Option<String>,
        p: PathBuf,
        #[arg(required = true)]
        qs: Vec<PathBuf>,
    },
    /// The unique simple common root of P and Q.
    CommonRoot {
        /// `native`, `monomial`, `bernstein`, or a JSON basis object.
        #[arg(long)]
        basis: Option<String>,
        p: PathBuf,
        q: PathBuf,
    },
    /// Monic gcd of the inputs.
    Gcd {
        /// Extraction method.
        #[arg(long, value_enum)]
        method: MethodArg,
        /// `native`, `monomial`, `bernstein`, or a JSON basis object.
        #[arg(long)]
        basis: Option<String>,
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<PathBuf>,
    },
    /// Re-express P in another basis of the same degree.
    Convert {
        /// Target basis: `monomial`, `bernstein`, or a JSON basis object.
        #[arg(long)]
        to: String,
        p: PathBuf,
    },
    /// Check the null-space block structure for given common roots.
    VerifyKernel {
        /// JSON array of {"root": "...", "multiplicity": k}, inline or a file path.
        #[arg(long)]
        roots: String,
        /// `native`, `monomial`, `bernstein`, or a JSON basis object.
        #[arg(long)]
        basis: Option<String>,
        p: PathBuf,
        q: PathBuf,
    },
}

#[derive(Debug)]
pub enum CliError {
    Domain(Error),
    Input(DocError),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) | CliError::Usage(_) => 2,
        }
    }

    /// `{"error": code, "detail": message}`.
    pub fn to_json(&self) -> String {
        let (code, detail) = match self {
            CliError::Domain(e) => (e.code(), e.to_string()),
            CliError::Input(e) => (e.code(), e.to_string()),
            CliError::Usage(m) => ("Usage", m.clone()),
        };
        json!({"error": code, "detail": detail}).to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Input(e)
    }
}

/// Runs a parsed job and returns the JSON text to emit.
pub fn run(config: &JobConfig) -> Result<String, CliError> {
    let value = match (config.scalar, config.tol) {
        (ScalarMode::Exact, Some(_)) => {
            return Err(CliError::Usage(
                "--tol is only valid with --scalar float".into(),
            ))
        }
        (ScalarMode::Exact, None) => execute::<Rational>(&config.command, Tolerance::default())?,
        (ScalarMode::Float, tol) => {
            let tol = tol.unwrap_or(DEFAULT_TOL);
            if !(tol >= 0.0 && tol.is_finite()) {
                return Err(CliError::Usage(
                    "--tol must be a non-negative number".into(),
                ));
            }
            let mut v = execute::<f64>(&config.command, Tolerance(tol))?;
            if let Value::Object(map) = &mut v {
                map.insert("tol".into(), json!(tol.to_string()));
            }
            v
        }
    };
    Ok(value.to_string())
}

fn load<S: Scalar>(path: &PathBuf) -> Result<Poly<S>, CliError> {
    Ok(parse_poly_file(path)?.map_scalar(S::from_rational)?)
}

fn parse_spec(basis: &Option<String>) -> Result<Option<BasisSpec>, CliError> {
    basis
        .as_deref()
        .map(BasisSpec::parse)
        .transpose()
        .map_err(CliError::from)
}

/// Bezout basis of degree `n - 1` for the given polynomials. With no flag,
/// a basis shared by all inputs is truncated; otherwise monomial.
fn resolve_basis<S: Scalar>(
    spec: Option<BasisSpec>,
    ps: &[&Poly<S>],
    n: usize,
) -> Result<Basis<S>, CliError> {
    let shared = ps.iter().all(|p| p.basis() == ps[0].basis())
        || ps.iter().all(|p| p.basis().kind() == BasisKind::Monomial);
    Ok(match spec {
        None | Some(BasisSpec::Native) if shared && ps[0].basis().kind() == BasisKind::Monomial => {
            Basis::monomial(n - 1)
        }
        None if shared => ps[0].basis().truncated(n - 1)?,
        None => Basis::monomial(n - 1),
        Some(BasisSpec::Native) if shared => ps[0].basis().truncated(n - 1)?,
        Some(BasisSpec::Native) => return Err(Error::MixedBases.into()),
        Some(BasisSpec::Shorthand(kind)) => shorthand(kind, n - 1),
        Some(BasisSpec::Explicit(b)) => b.map_scalar(S::from_rational),
    })
}

fn shorthand<S: Scalar>(kind: BasisKind, degree: usize) -> Basis<S> {
    match kind {
        BasisKind::Bernstein => Basis::bernstein(degree),
        _ => Basis::monomial(degree),
    }
}

fn execute<S: Scalar>(command: &Command, tol: Tolerance) -> Result<Value, CliError> {
    match command {
        Command::Bezout { basis, p, q } => {
            let (p, q) = (load::<S>(p)?, load::<S>(q)?);
            let n = sizing_degree(&p, &q)?;
            let phi = resolve_basis(parse_spec(basis)?, &[&p, &q], n)?;
            let b = bezout_matrix(&p, &q, &phi)?;
            Ok(serde_json::to_value(&b).expect("serializable"))
        }
        Command::Nullspace { basis, p, qs } => {
            let p = load::<S>(p)?;
            let qs = qs.iter().map(load::<S>).collect::<Result<Vec<_>, _>>()?;
            let n = p.effective_degree().ok_or(Error::DegreeTooLow)?;
            if n == 0 {
                return Err(Error::DegreeTooLow.into());
            }
            let mut all = vec![&p];
            all.extend(qs.iter());
            let phi = resolve_basis(parse_spec(basis)?, &all, n)?;
            let stack = stacked(&p, &qs, &phi)?;
            let ns = stack.matrix().null_space_basis_with(tol);
            let columns: Vec<Vec<String>> = (0..ns.cols())
                .map(|c| ns.column(c).iter().map(ToString::to_string).collect())
                .collect();
            Ok(json!({
                "basis": stack.basis(),
                "n": n,
                "rank": n - ns.cols(),
                "nullity": ns.cols(),
                "null_space": columns,
            }))
        }
        Command::CommonRoot { basis, p, q } => {
            let (p, q) = (load::<S>(p)?, load::<S>(q)?);
            let n = sizing_degree(&p, &q)?;
            let phi = resolve_basis(parse_spec(basis)?, &[&p, &q], n)?;
            let b = bezout_matrix(&p, &q, &phi)?;
            let root = simple_common_root_with(&b, tol)?;
            Ok(json!({"root": root.to_string()}))
        }
        Command::Gcd {
            method,
            basis,
            inputs,
        } => {
            let ps = inputs
                .iter()
                .map(load::<S>)
                .collect::<Result<Vec<_>, _>>()?;
            let n = ps
                .iter()
                .filter_map(Poly::effective_degree)
                .max()
                .unwrap_or(0);
            let choice = if n == 0 {
                BasisChoice::Native
            } else {
                let refs: Vec<&Poly<S>> = ps.iter().collect();
                BasisChoice::Explicit(resolve_basis(parse_spec(basis)?, &refs, n)?)
            };
            let result = gcd_with(&ps, (*method).into(), &choice, tol)?;
            Ok(gcd_json(&result, n))
        }
        Command::Convert { to, p } => {
            let p = load::<S>(p)?;
            let target = match BasisSpec::parse(to)? {
                BasisSpec::Native => p.basis().clone(),
                BasisSpec::Shorthand(kind) => shorthand(kind, p.basis().degree()),
                BasisSpec::Explicit(b) => b.map_scalar(S::from_rational),
            };
            let out = p.convert(&target)?;
            Ok(serde_json::to_value(&out).expect("serializable"))
        }
        Command::VerifyKernel { roots, basis, p, q } => {
            let text = if roots.trim_start().starts_with('[') {
                roots.clone()
            } else {
                std::fs::read_to_string(roots).map_err(|e| DocError::Io {
                    path: roots.clone(),
                    detail: e.to_string(),
                })?
            };
            let roots = parse_roots(&text)?;
            let (p, q) = (load::<S>(p)?, load::<S>(q)?);
            let n = sizing_degree(&p, &q)?;
            let phi = resolve_basis(parse_spec(basis)?, &[&p, &q], n)?;
            let b = bezout_matrix(&p, &q, &phi)?;
            let desc = KernelDescription {
                blocks: roots
                    .iter()
                    .map(|(r, k)| RootBlockSpec {
                        root: S::from_rational(r),
                        multiplicity: *k,
                    })
                    .collect(),
                n,
            };
            let verdict = verify_kernel_structure_with(&b, &desc, tol);
            Ok(serde_json::to_value(&verdict).expect("serializable"))
        }
    }
}

fn gcd_json<S: Scalar>(result: &GcdResult<S>, n: usize) -> Value {
    let coeffs: Vec<String> = result
        .monic_coeffs
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut v = json!({
        "degree": result.degree,
        "monic_coeffs_high_to_low": coeffs,
        "method": result.method.name(),
        "rank": result.rank.unwrap_or(n.saturating_sub(result.degree)),
    });
    if !result.authoritative {
        v["authoritative"] = json!(false);
    }
    v
}
