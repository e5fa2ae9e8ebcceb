//! Orchestration of the core analyses into one report per request.

use std::path::PathBuf;

use eigencurve_core::classical::{classical_report, verify_spectral_identity, ClassicalReport, SpectralIdentityReport};
use eigencurve_core::geometry::{
    curve_ideal, gcd_witness, intersection_index_affine_local, intersection_index_resolution_local,
    matrix_variable_names,
};
use eigencurve_core::multipoly::LocalMultiplicity;
use eigencurve_core::projective::{bezout_check, projective_spectrum, BezoutReport};
use eigencurve_core::{Error as CoreError, Matrix, MatrixPolynomial, Rational, UniPoly};
use serde::Serialize;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Subcommand {
    Spectrum,
    Multiplicity,
    Admissible,
    Intersect,
    Resolve,
    Bezout,
    Classical,
    All,
}

impl Subcommand {
    fn needs_points(self) -> bool {
        matches!(self, Subcommand::Multiplicity | Subcommand::Intersect | Subcommand::Resolve)
    }

    fn includes(self, part: Subcommand) -> bool {
        self == part || self == Subcommand::All
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug)]
pub struct AnalysisRequest {
    pub input: PathBuf,
    pub subcommand: Subcommand,
    pub at: Option<Rational>,
    pub format: Format,
    pub max_truncation: usize,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexView {
    pub value: usize,
    pub stabilized_at: usize,
    /// `d_1, ..., d_{N+1}` with `d_N = dim Q[x]/(J + m^N)`.
    pub sequence: Vec<usize>,
}

impl From<LocalMultiplicity> for IndexView {
    fn from(m: LocalMultiplicity) -> Self {
        IndexView { value: m.value, stabilized_at: m.stabilized_at, sequence: m.sequence }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootView {
    pub value: Rational,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorView {
    pub factor: UniPoly,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumView {
    pub rational_eigenvalues: Vec<RootView>,
    pub factors: Vec<FactorView>,
    pub total_finite_multiplicity: usize,
    /// Multiplicity carried by roots outside `Q`.
    pub irrational_multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub at: Rational,
    /// Monic gcd of `L_i(λ) - L_i(at)` over all entries.
    pub gcd: UniPoly,
    pub linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityView {
    pub admissible: bool,
    /// Generators of the ideal of the curve, in `x11, x12, ...`.
    pub curve_ideal: Vec<String>,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvalueView {
    pub at: Rational,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub affine_index: Option<IndexView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolution_index: Option<IndexView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BezoutView {
    #[serde(flatten)]
    pub report: BezoutReport,
    /// Rational points of the projective spectrum, with `∞` last.
    pub projective_points: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalView {
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// `T` with `L(λ) = T1 (λI - T)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Matrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<SpectralIdentityReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub eigenvalues: Vec<ClassicalReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    /// Whether a violation makes the run fail.
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subcommand: Subcommand,
    pub n: usize,
    pub degree: usize,
    pub det: UniPoly,
    pub identically_singular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marker: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissibility: Option<AdmissibilityView>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub eigenvalues: Vec<EigenvalueView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bezout: Option<BezoutView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classical: Option<ClassicalView>,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Ok => EXIT_OK,
            Status::Failed => EXIT_CHECK_FAILED,
            Status::Degenerate => EXIT_DEGENERATE,
        }
    }
}

struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    fn check(&mut self, name: impl Into<String>, holds: bool, required: bool, note: Option<String>) {
        self.checks.push(Check { name: name.into(), holds, required, note });
    }
}

pub fn analyze(l: &MatrixPolynomial, req: &AnalysisRequest) -> Result<Report, UsageError> {
    let spectrum = l.spectrum();
    let mut report = Report {
        subcommand: req.subcommand,
        n: l.n(),
        degree: l.degree(),
        det: spectrum.det.clone(),
        identically_singular: spectrum.identically_singular,
        marker: None,
        spectrum: None,
        admissibility: None,
        eigenvalues: Vec::new(),
        bezout: None,
        classical: None,
        checks: Vec::new(),
        status: Status::Ok,
    };
    if spectrum.identically_singular {
        report.marker = Some("Σ(L) = k".into());
        report.status = Status::Degenerate;
        return Ok(report);
    }

    let sub = req.subcommand;
    let points: Vec<Rational> = match &req.at {
        Some(at) => vec![at.clone()],
        None => spectrum.rational_eigenvalues.iter().map(|(r, _)| r.clone()).collect(),
    };
    if sub.needs_points() && points.is_empty() {
        return Err(UsageError("no rational eigenvalues; pass --at to choose a point".into()));
    }
    let mut b = Builder { checks: Vec::new() };

    if sub.includes(Subcommand::Spectrum) {
        report.spectrum = Some(SpectrumView {
            rational_eigenvalues: spectrum
                .rational_eigenvalues
                .iter()
                .map(|(r, m)| RootView { value: r.clone(), multiplicity: *m })
                .collect(),
            factors: spectrum
                .factor_table
                .iter()
                .map(|(f, m)| FactorView { factor: f.clone(), multiplicity: *m })
                .collect(),
            total_finite_multiplicity: spectrum.total_finite_multiplicity,
            irrational_multiplicity: spectrum.irrational_multiplicity(),
        });
    }

    let admissibility = (sub.includes(Subcommand::Admissible) || sub.includes(Subcommand::Intersect))
        .then(|| admissibility(l, &points, &mut b, sub.includes(Subcommand::Admissible)));
    let admissible = admissibility.as_ref().map(|a| a.admissible);
    if sub.includes(Subcommand::Admissible) {
        report.admissibility = admissibility;
    }

    if sub.needs_points() || sub == Subcommand::All {
        for at in &points {
            report.eigenvalues.push(eigenvalue(l, at, sub, admissible, req.max_truncation, &mut b));
        }
    }

    if sub.includes(Subcommand::Bezout) {
        report.bezout = Some(bezout(l, &mut b));
    }

    if sub.includes(Subcommand::Classical) {
        let view = classical(l, &mut b);
        if sub == Subcommand::Classical && !view.applicable {
            return Err(UsageError(format!("classical analysis needs {}", view.reason.unwrap_or_default())));
        }
        report.classical = Some(view);
    }

    report.status = if b.checks.iter().any(|c| c.required && !c.holds) { Status::Failed } else { Status::Ok };
    report.checks = b.checks;
    Ok(report)
}

fn admissibility(l: &MatrixPolynomial, points: &[Rational], b: &mut Builder, record: bool) -> AdmissibilityView {
    let ideal = curve_ideal(l);
    let names = matrix_variable_names(l.n());
    let curve_ideal = ideal.generators.iter().map(|g| g.display_with(&names).to_string()).collect();
    let mut sample: Vec<Rational> = points.to_vec();
    if sample.is_empty() {
        sample.push(Rational::zero());
    }
    let mut witnesses = Vec::new();
    let mut note = None;
    for at in sample {
        match gcd_witness(l, &at) {
            Ok(gcd) => {
                let linear = gcd == UniPoly::linear_root(&at);
                witnesses.push(Witness { at, gcd, linear });
            }
            Err(CoreError::ConstantCurve) => {
                note = Some("constant curve: every entry is constant".into());
                break;
            }
            Err(e) => unreachable!("gcd witness on a validated input: {e}"),
        }
    }
    if record && ideal.admissible {
        let holds = witnesses.iter().all(|w| w.linear);
        b.check("admissible curve has linear gcd witnesses", holds, true, None);
    }
    AdmissibilityView { admissible: ideal.admissible, curve_ideal, witnesses, note }
}

fn eigenvalue(
    l: &MatrixPolynomial,
    at: &Rational,
    sub: Subcommand,
    admissible: Option<bool>,
    max_truncation: usize,
    b: &mut Builder,
) -> EigenvalueView {
    let multiplicity = l.algebraic_multiplicity(at).finite().expect("not identically singular");
    let mut view =
        EigenvalueView { at: at.clone(), multiplicity, affine_index: None, resolution_index: None, note: None };
    if sub.includes(Subcommand::Intersect) {
        let admissible = admissible.expect("admissibility is computed for intersect");
        match intersection_index_affine_local(l, at, max_truncation) {
            Ok(index) => {
                let agrees = index.value == multiplicity;
                let note =
                    (!agrees && !admissible).then(|| "mismatch expected: the curve is not admissible".to_string());
                view.note = note.clone();
                b.check(format!("affine index = multiplicity at {at}"), agrees, admissible, note);
                view.affine_index = Some(index.into());
            }
            Err(e) => b.check(format!("affine index = multiplicity at {at}"), false, true, Some(e.to_string())),
        }
    }
    if sub.includes(Subcommand::Resolve) {
        match intersection_index_resolution_local(l, at, max_truncation) {
            Ok(index) => {
                b.check(format!("resolution index = multiplicity at {at}"), index.value == multiplicity, true, None);
                view.resolution_index = Some(index.into());
            }
            Err(e) => b.check(format!("resolution index = multiplicity at {at}"), false, true, Some(e.to_string())),
        }
    }
    view
}

fn bezout(l: &MatrixPolynomial, b: &mut Builder) -> BezoutView {
    let report = bezout_check(l).expect("not identically singular");
    let ps = projective_spectrum(l);
    let mut projective_points: Vec<String> =
        ps.finite.rational_eigenvalues.iter().map(|(r, _)| r.to_string()).collect();
    if ps.meets_infinity {
        projective_points.push("∞".into());
    }
    b.check("finite sum + infinity multiplicity = d·n", report.identity_holds, true, None);
    let note = report.meets_infinity.then(|| format!("infinity contributes {}", report.infinity_multiplicity));
    b.check("finite sum = d·n", report.affine_identity_holds, false, note);
    BezoutView { report, projective_points }
}

fn not_applicable(reason: &str) -> ClassicalView {
    ClassicalView {
        applicable: false,
        reason: Some(reason.into()),
        t: None,
        split: None,
        identity: None,
        eigenvalues: Vec::new(),
    }
}

fn classical(l: &MatrixPolynomial, b: &mut Builder) -> ClassicalView {
    if l.degree() != 1 {
        return not_applicable("a pencil T1·λ + T0");
    }
    let [t0, t1] = l.coefficients() else { unreachable!("degree one") };
    let Some(inv) = t1.inverse() else {
        return not_applicable("an invertible leading coefficient T1");
    };
    let t = (&inv * t0).scale(&-Rational::one());
    let mut view = ClassicalView {
        applicable: true,
        reason: None,
        t: Some(t.clone()),
        split: None,
        identity: None,
        eigenvalues: Vec::new(),
    };
    match verify_spectral_identity(&t) {
        Ok(identity) => {
            b.check("generalized eigenspaces give a direct sum of dimension n", identity.holds, true, None);
            view.split = Some(true);
            view.eigenvalues = identity.eigenvalues.clone();
            view.identity = Some(identity);
        }
        Err(CoreError::NotSplit(_)) => {
            view.split = Some(false);
            for (at, _) in l.spectrum().rational_eigenvalues {
                view.eigenvalues.push(classical_report(&t, &at).expect("rational eigenvalue of T"));
            }
        }
        Err(e) => unreachable!("square matrix: {e}"),
    }
    for r in &view.eigenvalues {
        let m = l.algebraic_multiplicity(&r.eigenvalue).finite().expect("finite");
        let holds = r.generalized_dim == r.char_poly_ord && r.generalized_dim == m;
        b.check(format!("generalized eigenspace dimension = multiplicity at {}", r.eigenvalue), holds, true, None);
    }
    view
}
