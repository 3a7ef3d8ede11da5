//! Evaluation-set machinery for (extended) generalized Reed-Solomon
//! codes: point products, the character conditions for self-duality,
//! weight solving, generator matrices, and the self-dual / MDS verifiers.

mod linalg;

pub use linalg::{
    gram_is_zero, mds_by_submatrix_elimination, rank, Mat, MINORS_BUDGET, WEIGHT_ENUM_BUDGET,
};

use crate::combinat::{binomial_capped, pow_capped};
use crate::galois::{Elem, Field, FieldError, Poly};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrsError {
    #[error("evaluation set must be nonempty")]
    EmptySet,
    #[error("evaluation set has size {0}; an odd size is required")]
    OddSizeRequired(usize),
    #[error("evaluation set has size {0}; an even size is required")]
    EvenSizeRequired(usize),
    #[error("duplicate evaluation point {0}")]
    DuplicatePoint(Elem),
    #[error("point {0} is not in the evaluation set")]
    PointNotInSet(Elem),
    #[error("weight vector entries must be nonzero")]
    ZeroWeight,
    #[error("expected {expected} weights, got {got}")]
    WeightLengthMismatch { expected: usize, got: usize },
    #[error("matrix is {k} x {n}; need k <= n")]
    BadDimensions { k: usize, n: usize },
    #[error("self-duality condition unsatisfied: {0}")]
    ConditionUnsatisfied(String),
    #[error("too large to certify: C({n},{k}) minors and {q}^{k} codewords both exceed budgets")]
    CertificateTooLarge { n: usize, k: usize, q: u64 },
    #[error("verification backstop failed (this falsifies the canonical weight rule): {0}")]
    VerificationBackstop(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Whether a code is a plain GRS code or carries the extra coefficient
/// coordinate of the extended construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Grs,
    Egrs,
}

/// An ordered, duplicate-free set of evaluation points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EvalSet {
    points: Vec<Elem>,
}

impl EvalSet {
    pub fn new(field: &Field, points: Vec<Elem>) -> Result<Self, GrsError> {
        if points.is_empty() {
            return Err(GrsError::EmptySet);
        }
        let mut seen = vec![false; field.q() as usize];
        for &a in &points {
            field.check(a)?;
            if seen[a as usize] {
                return Err(GrsError::DuplicatePoint(a));
            }
            seen[a as usize] = true;
        }
        Ok(EvalSet { points })
    }

    pub fn points(&self) -> &[Elem] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.points.contains(&a)
    }
}

/// Nonzero column scalings, one per evaluation point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weights(Vec<Elem>);

impl Weights {
    pub fn new(entries: Vec<Elem>) -> Result<Self, GrsError> {
        if entries.iter().any(|&v| v == 0) {
            return Err(GrsError::ZeroWeight);
        }
        Ok(Weights(entries))
    }

    pub fn entries(&self) -> &[Elem] {
        &self.0
    }
}

/// A constructed code: evaluation data plus its generator matrix, whose
/// rows are the images of the monomials 1, x, ..., x^{k-1}.
#[derive(Debug, Clone)]
pub struct CodeArtifact {
    pub kind: CodeKind,
    pub set: EvalSet,
    pub weights: Weights,
    pub k: usize,
    pub matrix: Mat,
}

/// The product of (a - b) over all other points b of the set; the empty
/// product for a singleton is 1. Always nonzero.
pub fn delta(f: &Field, set: &EvalSet, a: Elem) -> Result<Elem, GrsError> {
    if !set.contains(a) {
        return Err(GrsError::PointNotInSet(a));
    }
    Ok(set
        .points
        .iter()
        .filter(|&&b| b != a)
        .fold(1, |acc, &b| f.mul(acc, f.sub(a, b))))
}

/// `delta` at every point of the set, in set order.
pub fn delta_all(f: &Field, set: &EvalSet) -> Vec<Elem> {
    set.points
        .iter()
        .map(|&a| {
            set.points
                .iter()
                .filter(|&&b| b != a)
                .fold(1, |acc, &b| f.mul(acc, f.sub(a, b)))
        })
        .collect()
}

/// Same quantity through the derivative of the vanishing polynomial; the
/// independent route used to cross-check `delta`.
pub fn delta_via_derivative(f: &Field, set: &EvalSet, a: Elem) -> Result<Elem, GrsError> {
    if !set.contains(a) {
        return Err(GrsError::PointNotInSet(a));
    }
    let vanishing = Poly::from_roots(f, set.points())?;
    Ok(vanishing.derivative(f).eval(f, a))
}

/// Outcome of the even-size character test: the code admits self-dualizing
/// weights iff all characters of the point products agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrsConditionResult {
    Uniform(i8),
    Mixed { plus: Elem, minus: Elem },
}

pub fn grs_condition(f: &Field, set: &EvalSet) -> Result<GrsConditionResult, GrsError> {
    if set.len() % 2 != 0 {
        return Err(GrsError::EvenSizeRequired(set.len()));
    }
    let deltas = delta_all(f, set);
    let sign_of = |d: Elem| {
        f.quadratic_character(d)
            .expect("point product of distinct points is nonzero")
    };
    let first = sign_of(deltas[0]);
    for (i, &d) in deltas.iter().enumerate().skip(1) {
        if sign_of(d) != first {
            let (plus, minus) = if first > 0 {
                (set.points[0], set.points[i])
            } else {
                (set.points[i], set.points[0])
            };
            return Ok(GrsConditionResult::Mixed { plus, minus });
        }
    }
    Ok(GrsConditionResult::Uniform(first))
}

/// Outcome of the odd-size character test: the extended code is self-dual
/// for some weights iff the character of every negated point product is +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgrsConditionResult {
    Holds,
    Fails { witness: Elem },
}

pub fn egrs_condition(f: &Field, set: &EvalSet) -> Result<EgrsConditionResult, GrsError> {
    if set.len() % 2 == 0 {
        return Err(GrsError::OddSizeRequired(set.len()));
    }
    let deltas = delta_all(f, set);
    for (&a, &d) in set.points.iter().zip(&deltas) {
        let sign = f
            .quadratic_character(f.neg(d))
            .expect("point product of distinct points is nonzero");
        if sign != 1 {
            return Ok(EgrsConditionResult::Fails { witness: a });
        }
    }
    Ok(EgrsConditionResult::Holds)
}

/// Canonical weight rule. For the even case, pick lambda in {1, theta}
/// so that lambda / delta is a square at every point and take its canonical
/// square root; for the odd case use -1 / delta. Both choices are
/// justified by the Lagrange identity (see the oracle module) and always
/// re-checked by `verify_self_dual` downstream.
pub fn solve_weights(f: &Field, kind: CodeKind, set: &EvalSet) -> Result<Weights, GrsError> {
    let deltas = delta_all(f, set);
    let scale = match kind {
        CodeKind::Grs => match grs_condition(f, set)? {
            GrsConditionResult::Uniform(sign) => {
                if sign > 0 {
                    1
                } else {
                    f.generator()
                }
            }
            GrsConditionResult::Mixed { plus, minus } => {
                return Err(GrsError::ConditionUnsatisfied(format!(
                    "mixed characters: +1 at point {plus}, -1 at point {minus}"
                )));
            }
        },
        CodeKind::Egrs => match egrs_condition(f, set)? {
            EgrsConditionResult::Holds => f.neg(1),
            EgrsConditionResult::Fails { witness } => {
                return Err(GrsError::ConditionUnsatisfied(format!(
                    "character of negated point product is -1 at point {witness}"
                )));
            }
        },
    };
    let entries = deltas
        .iter()
        .map(|&d| {
            let target = f.mul(scale, f.inv(d).expect("delta is nonzero"));
            f.sqrt(target)
                .expect("scaled inverse delta is a square once the condition holds")
        })
        .collect();
    Weights::new(entries)
}

/// Generator matrix whose row i is the codeword of x^i. The extended kind
/// appends the coefficient coordinate: 1 on the last row, 0 elsewhere.
pub fn generator_matrix(
    f: &Field,
    kind: CodeKind,
    set: &EvalSet,
    weights: &Weights,
) -> Result<CodeArtifact, GrsError> {
    let s = set.len();
    if weights.entries().len() != s {
        return Err(GrsError::WeightLengthMismatch { expected: s, got: weights.entries().len() });
    }
    let (k, cols) = match kind {
        CodeKind::Grs => {
            if s % 2 != 0 {
                return Err(GrsError::EvenSizeRequired(s));
            }
            (s / 2, s)
        }
        CodeKind::Egrs => {
            if s % 2 == 0 {
                return Err(GrsError::OddSizeRequired(s));
            }
            ((s + 1) / 2, s + 1)
        }
    };
    let mut matrix = Mat::zeros(k, cols);
    for (j, (&a, &v)) in set.points().iter().zip(weights.entries()).enumerate() {
        let mut pw = v;
        for i in 0..k {
            matrix.set(i, j, pw);
            pw = f.mul(pw, a);
        }
    }
    if kind == CodeKind::Egrs {
        matrix.set(k - 1, cols - 1, 1);
    }
    Ok(CodeArtifact { kind, set: set.clone(), weights: weights.clone(), k, matrix })
}

/// Orthogonality and rank facts for a generator matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfDualCheck {
    pub gram_zero: bool,
    pub rank: usize,
    pub length: usize,
}

impl SelfDualCheck {
    /// Self-orthogonal with full half-length rank and even length.
    pub fn ok(&self) -> bool {
        self.gram_zero && self.length % 2 == 0 && self.rank * 2 == self.length
    }

    pub fn rank_ok(&self) -> bool {
        self.length % 2 == 0 && self.rank * 2 == self.length
    }
}

/// Checks `G G^T = 0` and `rank G = n/2`. Odd lengths simply fail.
pub fn verify_self_dual(f: &Field, matrix: &Mat) -> SelfDualCheck {
    SelfDualCheck {
        gram_zero: gram_is_zero(f, matrix),
        rank: rank(f, matrix),
        length: matrix.cols(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsMethod {
    Minors,
    WeightEnum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdsCheck {
    pub is_mds: bool,
    pub method: MdsMethod,
    /// Column indices of a singular k-subset when not MDS.
    pub witness: Option<Vec<usize>>,
}

/// Certifies the MDS property exactly: all maximal minors nonzero, via the
/// layered minor scan, or by exhausting codeword weights, whichever is
/// cheaper and within budget. Never silently skips; over-budget inputs
/// return [`GrsError::CertificateTooLarge`].
pub fn verify_mds(f: &Field, matrix: &Mat) -> Result<MdsCheck, GrsError> {
    let (k, n) = (matrix.rows(), matrix.cols());
    if k > n {
        return Err(GrsError::BadDimensions { k, n });
    }
    let q = f.q();
    let c_minors = binomial_capped(n as u64, k as u64, MINORS_BUDGET + 1);
    let c_words = pow_capped(q, k as u32, WEIGHT_ENUM_BUDGET + 1);
    let minors_ok = c_minors <= MINORS_BUDGET && linalg::minors_layers_fit(k, n - k);
    let words_ok = c_words <= WEIGHT_ENUM_BUDGET;
    let use_minors = match (minors_ok, words_ok) {
        (true, true) => c_minors <= c_words,
        (true, false) => true,
        (false, true) => false,
        (false, false) => return Err(GrsError::CertificateTooLarge { n, k, q }),
    };
    let (is_mds, witness, method) = if use_minors {
        let (ok, w) = linalg::mds_by_minors(f, matrix);
        (ok, w, MdsMethod::Minors)
    } else {
        let (ok, w) = linalg::mds_by_weight_enum(f, matrix);
        (ok, w, MdsMethod::WeightEnum)
    };
    Ok(MdsCheck { is_mds, method, witness })
}

/// Condition outcome in report form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionOutcome {
    UniformPlus,
    UniformMinus,
    EgrsHolds,
    Mixed { plus: Elem, minus: Elem },
    EgrsFails { witness: Elem },
}

impl ConditionOutcome {
    pub fn ok(&self) -> bool {
        matches!(self, Self::UniformPlus | Self::UniformMinus | Self::EgrsHolds)
    }

    pub fn describe(&self) -> String {
        match self {
            Self::UniformPlus => "uniform(+1)".into(),
            Self::UniformMinus => "uniform(-1)".into(),
            Self::EgrsHolds => "ok".into(),
            Self::Mixed { plus, minus } => format!("mixed({plus} vs {minus})"),
            Self::EgrsFails { witness } => format!("fail({witness})"),
        }
    }
}

/// MDS outcome in report form; `Capped` records a code whose certificate
/// exceeds both budgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MdsOutcome {
    Pass { method: MdsMethod },
    Fail { method: MdsMethod, witness: Vec<usize> },
    Capped { minors_needed: u64, words_needed: u64 },
}

impl MdsOutcome {
    pub fn ok(&self) -> bool {
        matches!(self, Self::Pass { .. })
    }

    pub fn capped(&self) -> bool {
        matches!(self, Self::Capped { .. })
    }

    pub fn describe(&self) -> String {
        match self {
            Self::Pass { method: MdsMethod::Minors } => "pass(minors)".into(),
            Self::Pass { method: MdsMethod::WeightEnum } => "pass(weight-enum)".into(),
            Self::Fail { witness, .. } => format!("fail(columns {witness:?})"),
            Self::Capped { .. } => "capped".into(),
        }
    }
}

/// Everything re-derivable about a code from its set and matrix.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub condition: ConditionOutcome,
    pub self_dual: SelfDualCheck,
    pub mds: MdsOutcome,
}

impl VerificationReport {
    pub fn condition_ok(&self) -> bool {
        self.condition.ok()
    }

    pub fn self_dual_ok(&self) -> bool {
        self.self_dual.gram_zero && self.self_dual.length % 2 == 0
    }

    pub fn rank_ok(&self) -> bool {
        self.self_dual.rank_ok()
    }

    pub fn mds_ok(&self) -> bool {
        self.mds.ok()
    }

    /// All four checks hold with a completed MDS certificate.
    pub fn fully_verified(&self) -> bool {
        self.condition_ok() && self.self_dual_ok() && self.rank_ok() && self.mds_ok()
    }

    /// Condition, orthogonality and rank hold but the MDS certificate
    /// exceeded its budgets.
    pub fn verified_except_capped(&self) -> bool {
        self.condition_ok() && self.self_dual_ok() && self.rank_ok() && self.mds.capped()
    }
}

/// Re-derives the full report for a (set, matrix) pair of the given kind.
/// Check failures land in the report; only structural problems error.
pub fn verify_code(
    f: &Field,
    kind: CodeKind,
    set: &EvalSet,
    matrix: &Mat,
) -> Result<VerificationReport, GrsError> {
    let condition = match kind {
        CodeKind::Grs => match grs_condition(f, set)? {
            GrsConditionResult::Uniform(1) => ConditionOutcome::UniformPlus,
            GrsConditionResult::Uniform(_) => ConditionOutcome::UniformMinus,
            GrsConditionResult::Mixed { plus, minus } => ConditionOutcome::Mixed { plus, minus },
        },
        CodeKind::Egrs => match egrs_condition(f, set)? {
            EgrsConditionResult::Holds => ConditionOutcome::EgrsHolds,
            EgrsConditionResult::Fails { witness } => ConditionOutcome::EgrsFails { witness },
        },
    };
    let self_dual = verify_self_dual(f, matrix);
    let mds = match verify_mds(f, matrix) {
        Ok(check) if check.is_mds => MdsOutcome::Pass { method: check.method },
        Ok(check) => MdsOutcome::Fail {
            method: check.method,
            witness: check.witness.unwrap_or_default(),
        },
        Err(GrsError::CertificateTooLarge { n, k, q }) => MdsOutcome::Capped {
            minors_needed: binomial_capped(n as u64, k as u64, u64::MAX),
            words_needed: pow_capped(q, k as u32, u64::MAX),
        },
        Err(e) => return Err(e),
    };
    Ok(VerificationReport { condition, self_dual, mds })
}

/// The full pipeline for a candidate set: condition, weights, matrix, and
/// all verifications. A condition failure is an ordinary error; a
/// verification failure after the condition held is a backstop violation
/// and is surfaced loudly, never patched.
pub fn build_and_verify(
    f: &Field,
    kind: CodeKind,
    set: &EvalSet,
) -> Result<(CodeArtifact, VerificationReport), GrsError> {
    let weights = solve_weights(f, kind, set)?;
    let artifact = generator_matrix(f, kind, set, &weights)?;
    let report = verify_code(f, kind, set, &artifact.matrix)?;
    if !report.self_dual_ok() || !report.rank_ok() {
        return Err(GrsError::VerificationBackstop(format!(
            "condition held on {:?} but the derived code is not self-dual",
            set.points()
        )));
    }
    if matches!(report.mds, MdsOutcome::Fail { .. }) {
        return Err(GrsError::VerificationBackstop(format!(
            "condition held on {:?} but the derived code is not MDS",
            set.points()
        )));
    }
    Ok((artifact, report))
}
