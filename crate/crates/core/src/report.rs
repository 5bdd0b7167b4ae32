//! Violation reports shared by every verifier.

use std::fmt;

use crate::scalar::{self, Scalar};
use crate::tensor::Vector;

/// Every identity the verifiers check. The id is what appears in report
/// lines; the family groups sub-checks of one named axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    // Lie, pre-Lie and Rota-Baxter identities
    Skew,
    Jacobi,
    PreLie,
    RotaBaxter,
    LieHom,
    RbCommute,
    RepHom,
    RepRb,
    // 2-term L∞ conditions
    L2Skew,
    L3Alt,
    A1,
    A2,
    B,
    C,
    D,
    // Rota-Baxter triple
    ChainMap,
    R2Skew,
    Rb1,
    Rb2,
    Rb3,
    // homomorphisms
    HomChain,
    Phi2Skew,
    Hom1,
    Hom2,
    Hom3,
    RbLh1,
    RbLh2,
    RbLh3,
    // morphism calculus
    RbCoh,
    RbCohNode,
    RbCohm,
    RbCohmNode,
    Naturality,
    RoundTrip,
    // crossed modules
    BoundaryHom,
    Action,
    Derivation,
    Peiffer1,
    Peiffer2,
    BoundaryCommute,
    BoundaryLeft,
    BoundaryRight,
    LeftBoundary,
    RightBoundary,
    LeftRep,
    RepCompat,
    HomAction,
}

impl Condition {
    pub fn id(self) -> &'static str {
        use Condition::*;
        match self {
            Skew => "skew",
            Jacobi => "jacobi",
            PreLie => "pre-lie",
            RotaBaxter => "rota-baxter",
            LieHom => "lie-hom",
            RbCommute => "rb-commute",
            RepHom => "rep-hom",
            RepRb => "rep-rb",
            L2Skew => "l2-skew",
            L3Alt => "l3-alt",
            A1 => "a1",
            A2 => "a2",
            B => "b",
            C => "c",
            D => "d",
            ChainMap => "chain-map",
            R2Skew => "r2-skew",
            Rb1 => "rb1",
            Rb2 => "rb2",
            Rb3 => "rb3",
            HomChain => "hom-chain",
            Phi2Skew => "phi2-skew",
            Hom1 => "hom1",
            Hom2 => "hom2",
            Hom3 => "hom3",
            RbLh1 => "rblh1",
            RbLh2 => "rblh2",
            RbLh3 => "rblh3",
            RbCoh => "rbcoh",
            RbCohNode => "rbcoh-node",
            RbCohm => "rbcohm",
            RbCohmNode => "rbcohm-node",
            Naturality => "rb-naturality",
            RoundTrip => "roundtrip",
            BoundaryHom => "boundary-hom",
            Action => "action",
            Derivation => "derivation",
            Peiffer1 => "peiffer1",
            Peiffer2 => "peiffer2",
            BoundaryCommute => "boundary-commute",
            BoundaryLeft => "boundary-left",
            BoundaryRight => "boundary-right",
            LeftBoundary => "left-boundary",
            RightBoundary => "right-boundary",
            LeftRep => "left-rep",
            RepCompat => "rep-compat",
            HomAction => "hom-action",
        }
    }

    /// The named axiom this check belongs to; `a1` and `a2` are both `a`.
    pub fn family(self) -> &'static str {
        match self {
            Condition::A1 | Condition::A2 => "a",
            other => other.id(),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One failing instance of an identity, located by basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    /// Which sub-structure the identity was checked on, e.g. `g0`,
    /// `source`, `p1`; empty for the top level.
    pub scope: String,
    pub condition: Condition,
    pub indices: Vec<usize>,
    /// `lhs - rhs` of the identity at these indices.
    pub residual: Vector,
}

impl Violation {
    pub fn new(condition: Condition, indices: Vec<usize>, residual: Vector) -> Self {
        Self {
            scope: String::new(),
            condition,
            indices,
            residual,
        }
    }

    /// `scope/condition`, or just the condition id at top level.
    pub fn qualified_id(&self) -> String {
        if self.scope.is_empty() {
            self.condition.id().to_string()
        } else {
            format!("{}/{}", self.scope, self.condition.id())
        }
    }

    fn sort_key(&self) -> (&str, Condition, &[usize]) {
        (&self.scope, self.condition, &self.indices)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        let res: Vec<String> = self.residual.iter().map(scalar::format).collect();
        write!(
            f,
            "VIOLATION {} ({}) [{}]",
            self.qualified_id(),
            idx.join(","),
            res.join(",")
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    /// Records a violation when `residual` is nonzero.
    pub fn check(&mut self, condition: Condition, indices: Vec<usize>, residual: Vector) {
        if !crate::tensor::is_zero(&residual) {
            self.push(Violation::new(condition, indices, residual));
        }
    }

    /// Appends `other`, prefixing every scope with `scope`.
    pub fn extend_scoped(&mut self, scope: &str, other: VerificationReport) {
        for mut v in other.violations {
            v.scope = if v.scope.is_empty() {
                scope.to_string()
            } else {
                format!("{scope}/{}", v.scope)
            };
            self.violations.push(v);
        }
    }

    pub fn sort(&mut self) {
        self.violations
            .sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }

    pub fn sorted(mut self) -> Self {
        self.sort();
        self
    }

    /// Distinct condition families named by the report.
    pub fn families(&self) -> std::collections::BTreeSet<&'static str> {
        self.violations
            .iter()
            .map(|v| v.condition.family())
            .collect()
    }

    pub fn conditions(&self) -> std::collections::BTreeSet<Condition> {
        self.violations.iter().map(|v| v.condition).collect()
    }

    pub fn of(&self, condition: Condition) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(move |v| v.condition == condition)
    }

    /// Index tuples at which `condition` fails.
    pub fn sites(&self, condition: Condition) -> std::collections::BTreeSet<Vec<usize>> {
        self.of(condition).map(|v| v.indices.clone()).collect()
    }

    pub fn lines(&self) -> Vec<String> {
        self.violations.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl Extend<Violation> for VerificationReport {
    fn extend<I: IntoIterator<Item = Violation>>(&mut self, iter: I) {
        self.violations.extend(iter);
    }
}

impl IntoIterator for VerificationReport {
    type Item = Violation;
    type IntoIter = std::vec::IntoIter<Violation>;

    fn into_iter(self) -> Self::IntoIter {
        self.violations.into_iter()
    }
}

impl FromIterator<Violation> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = Violation>>(iter: I) -> Self {
        Self {
            violations: iter.into_iter().collect(),
        }
    }
}

/// A violation of `condition` at `indices` when `residual` is nonzero.
pub fn hit(condition: Condition, indices: Vec<usize>, residual: Vector) -> Option<Violation> {
    if crate::tensor::is_zero(&residual) {
        None
    } else {
        Some(Violation::new(condition, indices, residual))
    }
}

/// `hit` with the residual written as `lhs - rhs`.
pub fn hit_eq(
    condition: Condition,
    indices: Vec<usize>,
    lhs: &[Scalar],
    rhs: &[Scalar],
) -> Option<Violation> {
    hit(condition, indices, crate::tensor::sub(lhs, rhs))
}
