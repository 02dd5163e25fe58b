//! Library side of the `ladder-hilbert` command: instance loading, the
//! subcommands and their report types.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use ladder_hilbert::hilbert::entry_spec;
use ladder_hilbert::oracle::{enumerate_arrays, enumerate_path_families, OracleError};
use ladder_hilbert::tagf::{gf_direct, RecursiveEngine};
use ladder_hilbert::{
    endpoints_from_bivector, hilbert_series, path_gf, series_expand, validate_general_endpoints,
    Bivector, EndpointConfig, HalfPolynomial, HilbertSeries, LadderFunction, LatticePoint, Method,
    ModelError,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed instance: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Compute(#[from] ladder_hilbert::Error),
    #[error("no instance given (use --input <file>)")]
    MissingInput,
    #[error("instance has no bivector (keys \"u\" and \"v\")")]
    MissingBivector,
    #[error("instance has no endpoints (keys \"starts\"/\"ends\" or \"u\"/\"v\")")]
    MissingEndpoints,
    #[error(transparent)]
    Resource(#[from] OracleError),
    #[error(transparent)]
    MismatchFound(Box<Mismatch>),
}

/// First coefficient on which two computations of the same polynomial differ.
#[derive(Debug, Error)]
#[error("mismatch in {check}: coefficient of q^{exponent} is {expected} by {reference} but {got} by {candidate}")]
pub struct Mismatch {
    pub check: String,
    pub exponent: usize,
    pub reference: String,
    pub expected: String,
    pub candidate: String,
    pub got: String,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::MismatchFound(_) => EXIT_MISMATCH,
            CliError::Resource(_) => EXIT_RESOURCE,
            _ => EXIT_VALIDATION,
        }
    }
}

/// The on-disk instance format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub a: i64,
    pub b: i64,
    pub f: Vec<i64>,
    #[serde(default)]
    pub u: Vec<i64>,
    #[serde(default)]
    pub v: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub starts: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ends: Option<Vec<[i64; 2]>>,
}

/// A validated instance.
#[derive(Debug, Clone)]
pub struct ProblemInstance {
    pub ladder: LadderFunction,
    pub bivector: Option<Bivector>,
    pub endpoints: Option<EndpointConfig>,
}

impl ProblemInstance {
    pub fn from_file(file: InstanceFile) -> Result<Self, CliError> {
        let ladder = LadderFunction::new(file.a, file.b, file.f)?;
        let bivector = if file.u.is_empty() && file.v.is_empty() {
            None
        } else {
            Some(Bivector::new(file.u, file.v)?)
        };
        let endpoints = match (file.starts, file.ends) {
            (None, None) => None,
            (starts, ends) => {
                let to_points = |v: Option<Vec<[i64; 2]>>| {
                    v.unwrap_or_default()
                        .into_iter()
                        .map(|[x, y]| LatticePoint::new(x, y))
                        .collect::<Vec<_>>()
                };
                Some(validate_general_endpoints(&ladder, &to_points(starts), &to_points(ends))?)
            }
        };
        Ok(Self {
            ladder,
            bivector,
            endpoints,
        })
    }

    pub fn parse(json: &str) -> Result<Self, CliError> {
        Self::from_file(serde_json::from_str(json)?)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    fn bivector(&self) -> Result<&Bivector, CliError> {
        self.bivector.as_ref().ok_or(CliError::MissingBivector)
    }

    /// Explicit endpoints if given, otherwise those of the bivector.
    pub fn endpoint_config(&self) -> Result<EndpointConfig, CliError> {
        if let Some(cfg) = &self.endpoints {
            return Ok(cfg.clone());
        }
        match &self.bivector {
            Some(m) => Ok(endpoints_from_bivector(&self.ladder, m)?),
            None => Err(CliError::MissingEndpoints),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum MethodChoice {
    Direct,
    #[default]
    Recursive,
    /// Run both methods and require identical results.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Scope {
    Tagf,
    Pathgf,
    #[default]
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Pretty,
}

fn decimal(cs: &[BigInt]) -> Vec<String> {
    cs.iter().map(BigInt::to_string).collect()
}

/// Compares two polynomials and reports the first differing coefficient.
pub fn compare(
    check: &str,
    reference: &str,
    expected: &HalfPolynomial,
    candidate: &str,
    got: &HalfPolynomial,
) -> Result<(), CliError> {
    if expected == got {
        return Ok(());
    }
    let len = expected.coeffs().len().max(got.coeffs().len());
    let exponent = (0..len)
        .find(|&k| expected.coeff(k) != got.coeff(k))
        .expect("unequal polynomials differ somewhere");
    Err(CliError::MismatchFound(Box::new(Mismatch {
        check: check.to_string(),
        exponent,
        reference: reference.to_string(),
        expected: expected.coeff(exponent).to_string(),
        candidate: candidate.to_string(),
        got: got.coeff(exponent).to_string(),
    })))
}

fn run_methods<T>(
    choice: MethodChoice,
    check: &str,
    mut run: impl FnMut(Method) -> Result<T, CliError>,
    poly: impl Fn(&T) -> &HalfPolynomial,
) -> Result<T, CliError> {
    match choice {
        MethodChoice::Direct => run(Method::Direct),
        MethodChoice::Recursive => run(Method::Recursive),
        MethodChoice::Both => {
            let direct = run(Method::Direct)?;
            let recursive = run(Method::Recursive)?;
            compare(check, "direct", poly(&direct), "recursive", poly(&recursive))?;
            Ok(recursive)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    /// Coefficients of `z^0, z^1, ...`.
    pub numerator: Vec<String>,
    pub denominator_exponent: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_function: Option<Vec<String>>,
}

pub fn cmd_hilbert(
    instance: &ProblemInstance,
    method: MethodChoice,
    series_terms: Option<usize>,
) -> Result<HilbertReport, CliError> {
    let m = instance.bivector()?;
    let series: HilbertSeries = run_methods(
        method,
        "numerator",
        |method| Ok(hilbert_series(&instance.ladder, m, method)?),
        HilbertSeries::numerator,
    )?;
    Ok(HilbertReport {
        numerator: decimal(&series.numerator_z_coeffs()),
        denominator_exponent: series.denom_exponent(),
        hilbert_function: series_terms.map(|t| decimal(&series_expand(&series, t))),
    })
}

impl HilbertReport {
    pub fn render_pretty(&self) -> String {
        let num = HalfPolynomial::from_z_coeffs(
            self.numerator.iter().map(|c| c.parse().expect("decimal coefficient")).collect(),
        );
        let mut out = format!("({})/(1-z)^{}\n", num.display_z(), self.denominator_exponent);
        if let Some(h) = &self.hilbert_function {
            let _ = writeln!(out, "hilbert function: {}", h.join(", "));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathGfReport {
    /// Number of families with `k` turns, for `k = 0, 1, ...`.
    pub coefficients: Vec<String>,
}

pub fn cmd_pathgf(instance: &ProblemInstance, method: MethodChoice) -> Result<PathGfReport, CliError> {
    let cfg = instance.endpoint_config()?;
    let gf = run_methods(
        method,
        "path generating function",
        |method| Ok(path_gf(&instance.ladder, &cfg.starts, &cfg.ends, method)?),
        |p| p,
    )?;
    Ok(PathGfReport {
        coefficients: decimal(&gf.z_coeffs()),
    })
}

impl PathGfReport {
    pub fn render_pretty(&self) -> String {
        let p = HalfPolynomial::from_z_coeffs(
            self.coefficients.iter().map(|c| c.parse().expect("decimal coefficient")).collect(),
        );
        format!("{}\n", p.display_z())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<String>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn render_pretty(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "ok {c}");
        }
        let _ = writeln!(out, "{} checks passed", self.checks.len());
        out
    }
}

/// What a verification hook is asked to post-process.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Checked {
    Entry { s: usize, t: usize, method: Method },
    Family { method: Method },
}

pub fn cmd_verify(instance: &ProblemInstance, scope: Scope, size_cap: i64) -> Result<VerifyReport, CliError> {
    cmd_verify_with(instance, scope, size_cap, |_, p| p)
}

/// [`cmd_verify`] with a hook applied to every fast-method result before it
/// is compared against the oracle.
pub fn cmd_verify_with(
    instance: &ProblemInstance,
    scope: Scope,
    size_cap: i64,
    hook: impl Fn(Checked, HalfPolynomial) -> HalfPolynomial,
) -> Result<VerifyReport, CliError> {
    let ladder = &instance.ladder;
    let cfg = instance.endpoint_config()?;
    let mut checks = Vec::new();
    if matches!(scope, Scope::Tagf | Scope::All) {
        let engine = RecursiveEngine::new(ladder);
        for s in 0..cfg.n() {
            for t in 0..cfg.n() {
                let spec = entry_spec(ladder, &cfg, s, t);
                let name = format!("entry ({}, {})", s + 1, t + 1);
                let oracle = enumerate_arrays(&spec, size_cap)?;
                let direct = gf_direct(&spec).map_err(ladder_hilbert::Error::from)?;
                let direct = hook(Checked::Entry { s, t, method: Method::Direct }, direct);
                compare(&name, "oracle", &oracle, "direct", &direct)?;
                let rec = engine
                    .gf(spec.l, spec.start, spec.end, spec.d)
                    .map_err(ladder_hilbert::Error::from)?;
                let rec = hook(Checked::Entry { s, t, method: Method::Recursive }, rec);
                compare(&name, "oracle", &oracle, "recursive", &rec)?;
                checks.push(format!("{name}: oracle = direct = recursive"));
            }
        }
    }
    if matches!(scope, Scope::Pathgf | Scope::All) {
        let oracle = enumerate_path_families(ladder, &cfg.starts, &cfg.ends)?;
        for method in [Method::Direct, Method::Recursive] {
            let got = path_gf(ladder, &cfg.starts, &cfg.ends, method)?;
            let got = hook(Checked::Family { method }, got);
            compare("path families", "oracle", &oracle, &method.to_string(), &got)?;
        }
        checks.push("path families: oracle = direct = recursive".to_string());
    }
    Ok(VerifyReport { checks, passed: true })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub direct_seconds: f64,
    pub recursive_seconds: f64,
    /// Direct time over recursive time.
    pub ratio: f64,
}

impl BenchReport {
    pub fn render_pretty(&self) -> String {
        format!(
            "direct:    {:.6} s\nrecursive: {:.6} s\nratio:     {:.1}\n",
            self.direct_seconds, self.recursive_seconds, self.ratio
        )
    }
}

/// Best-of-`repeats` wall-clock time of each method on the instance's main
/// computation (the Hilbert series if a bivector is given, otherwise the path
/// generating function).
pub fn cmd_bench(instance: &ProblemInstance, repeats: usize) -> Result<BenchReport, CliError> {
    let cfg = instance.endpoint_config()?;
    let time = |method: Method| -> Result<f64, CliError> {
        let mut best = f64::INFINITY;
        for _ in 0..repeats.max(1) {
            let t0 = Instant::now();
            match (&instance.bivector, &instance.endpoints) {
                (Some(m), None) => {
                    hilbert_series(&instance.ladder, m, method)?;
                }
                _ => {
                    path_gf(&instance.ladder, &cfg.starts, &cfg.ends, method)?;
                }
            }
            best = best.min(t0.elapsed().as_secs_f64());
        }
        Ok(best)
    };
    let direct_seconds = time(Method::Direct)?;
    let recursive_seconds = time(Method::Recursive)?;
    Ok(BenchReport {
        direct_seconds,
        recursive_seconds,
        ratio: direct_seconds / recursive_seconds,
    })
}

/// Serializes a report as pretty JSON with a trailing newline.
pub fn render_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}
