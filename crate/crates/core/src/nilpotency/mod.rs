//! Nilpotency criteria for fusion systems.
//!
//! Each criterion returns a [`CriterionVerdict`]: whether it applies, the
//! verdict, a witness on failure and the cost of evaluating it. The
//! necessary-and-sufficient criteria must agree on every saturated system;
//! [`run_all`] evaluates them together and summarizes agreement.

mod criteria;
mod witness;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::fusion::{FusionError, FusionSystem};

pub use criteria::{
    crit_abelian, crit_control_fusion, crit_definition, crit_element_fusion, crit_focal, crit_frobenius, crit_quillen,
    crit_quillen_category, crit_tuple_fusion, suff_central_elements, suff_omega_center, FrobeniusScope,
};
pub use witness::{reverify, Witness};

/// Default tuple length for the tuple-fusion criterion.
pub const DEFAULT_TUPLE_N: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionId {
    Definition,
    ElementFusion,
    TupleFusion,
    FrobeniusAll,
    FrobeniusCentric,
    Focal,
    Abelian,
    Quillen,
    QuillenCategory,
    ControlFusion,
    SuffCentralElements,
    SuffOmegaCenter,
}

impl CriterionId {
    pub const ALL: [CriterionId; 12] = [
        CriterionId::Definition,
        CriterionId::ElementFusion,
        CriterionId::TupleFusion,
        CriterionId::FrobeniusAll,
        CriterionId::FrobeniusCentric,
        CriterionId::Focal,
        CriterionId::Abelian,
        CriterionId::Quillen,
        CriterionId::QuillenCategory,
        CriterionId::ControlFusion,
        CriterionId::SuffCentralElements,
        CriterionId::SuffOmegaCenter,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CriterionId::Definition => "definition",
            CriterionId::ElementFusion => "element-fusion",
            CriterionId::TupleFusion => "tuple-fusion",
            CriterionId::FrobeniusAll => "frobenius-all",
            CriterionId::FrobeniusCentric => "frobenius-centric",
            CriterionId::Focal => "focal",
            CriterionId::Abelian => "abelian",
            CriterionId::Quillen => "quillen",
            CriterionId::QuillenCategory => "quillen-category",
            CriterionId::ControlFusion => "control-fusion",
            CriterionId::SuffCentralElements => "suff-central-elements",
            CriterionId::SuffOmegaCenter => "suff-omega-center",
        }
    }

    /// Sufficient-only checks never assert non-nilpotency.
    pub fn is_sufficient_only(self) -> bool {
        matches!(self, CriterionId::SuffCentralElements | CriterionId::SuffOmegaCenter)
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown criterion `{0}`")]
pub struct UnknownCriterion(pub String);

impl FromStr for CriterionId {
    type Err = UnknownCriterion;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CriterionId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| UnknownCriterion(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Applicability {
    Applicable,
    NotApplicable,
    /// The hypothesis is evaluated, but it does not characterize
    /// nilpotency under the current conditions.
    HypothesisOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    True,
    False,
    /// A sufficient check whose hypothesis failed.
    Inconclusive,
    /// Skipped because a resource cap was hit or the criterion cannot be
    /// evaluated on this system.
    NotComputed,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cost {
    pub elapsed_us: u64,
    pub hom_queries: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionVerdict {
    pub criterion: CriterionId,
    pub applicability: Applicability,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub cost: Cost,
}

impl CriterionVerdict {
    /// Whether this verdict takes part in the agreement check.
    pub fn counts_for_agreement(&self) -> bool {
        !self.criterion.is_sufficient_only()
            && self.applicability == Applicability::Applicable
            && self.verdict != Verdict::NotComputed
    }
}

/// What a criterion body produces before timing is attached.
#[derive(Debug, Clone)]
pub(crate) struct Outcome {
    pub applicability: Applicability,
    pub reason: Option<String>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn decided(witness: Option<Witness>) -> Self {
        Outcome {
            applicability: Applicability::Applicable,
            reason: None,
            verdict: Verdict::from_bool(witness.is_none()),
            witness,
            note: None,
        }
    }

    pub fn with_applicability(mut self, applicability: Applicability, reason: &str) -> Self {
        self.applicability = applicability;
        self.reason = Some(reason.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub(crate) fn timed(
    f: &FusionSystem,
    criterion: CriterionId,
    body: impl FnOnce() -> Result<Outcome, FusionError>,
) -> CriterionVerdict {
    let start = Instant::now();
    let queries = f.hom_query_count();
    let outcome = body();
    let cost = Cost { elapsed_us: start.elapsed().as_micros() as u64, hom_queries: f.hom_query_count() - queries };
    match outcome {
        Ok(o) => CriterionVerdict {
            criterion,
            applicability: o.applicability,
            reason: o.reason,
            verdict: o.verdict,
            witness: o.witness,
            note: o.note,
            cost,
        },
        Err(e) => CriterionVerdict {
            criterion,
            applicability: Applicability::Applicable,
            reason: Some(e.to_string()),
            verdict: Verdict::NotComputed,
            witness: None,
            note: None,
            cost,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriteriaOptions {
    pub tuple_n: usize,
}

impl Default for CriteriaOptions {
    fn default() -> Self {
        CriteriaOptions { tuple_n: DEFAULT_TUPLE_N }
    }
}

/// Evaluates one criterion.
pub fn run_criterion(f: &FusionSystem, id: CriterionId, options: CriteriaOptions) -> CriterionVerdict {
    match id {
        CriterionId::Definition => crit_definition(f),
        CriterionId::ElementFusion => crit_element_fusion(f),
        CriterionId::TupleFusion => crit_tuple_fusion(f, options.tuple_n),
        CriterionId::FrobeniusAll => crit_frobenius(f, FrobeniusScope::All),
        CriterionId::FrobeniusCentric => crit_frobenius(f, FrobeniusScope::Centric),
        CriterionId::Focal => crit_focal(f),
        CriterionId::Abelian => crit_abelian(f),
        CriterionId::Quillen => crit_quillen(f),
        CriterionId::QuillenCategory => crit_quillen_category(f),
        CriterionId::ControlFusion => crit_control_fusion(f),
        CriterionId::SuffCentralElements => suff_central_elements(f),
        CriterionId::SuffOmegaCenter => suff_omega_center(f),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementSummary {
    /// The common verdict of the participating criteria, if they share one.
    pub verdict: Option<bool>,
    pub agreed: bool,
    pub participants: Vec<CriterionId>,
    /// Participants whose verdict differs from the majority, or that were
    /// inconclusive.
    pub dissenters: Vec<CriterionId>,
    /// Sufficient checks that returned true although the common verdict is
    /// false.
    pub sufficiency_violations: Vec<CriterionId>,
}

/// Agreement over a set of verdicts. Ties between true and false are
/// reported with `verdict: None`.
pub fn summarize(verdicts: &[CriterionVerdict]) -> AgreementSummary {
    let participants: Vec<&CriterionVerdict> = verdicts.iter().filter(|v| v.counts_for_agreement()).collect();
    let trues = participants.iter().filter(|v| v.verdict == Verdict::True).count();
    let falses = participants.iter().filter(|v| v.verdict == Verdict::False).count();
    let majority = match trues.cmp(&falses) {
        std::cmp::Ordering::Greater => Some(true),
        std::cmp::Ordering::Less => Some(false),
        std::cmp::Ordering::Equal => None,
    };
    let dissenters: Vec<CriterionId> = participants
        .iter()
        .filter(|v| majority.is_none() || v.verdict.as_bool() != majority)
        .map(|v| v.criterion)
        .collect();
    let agreed = dissenters.is_empty() && (majority.is_some() || participants.is_empty());
    let sufficiency_violations = verdicts
        .iter()
        .filter(|v| v.criterion.is_sufficient_only() && v.verdict == Verdict::True && majority == Some(false))
        .map(|v| v.criterion)
        .collect();
    let verdict = if dissenters.is_empty() { majority } else { None };
    AgreementSummary {
        verdict,
        agreed,
        participants: participants.iter().map(|v| v.criterion).collect(),
        dissenters: if participants.is_empty() { Vec::new() } else { dissenters },
        sufficiency_violations,
    }
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub verdicts: Vec<CriterionVerdict>,
    pub agreement: AgreementSummary,
}

/// Runs the selected criteria in the order of [`CriterionId::ALL`].
pub fn run_selected(f: &FusionSystem, selection: &[CriterionId], options: CriteriaOptions) -> RunResult {
    let verdicts: Vec<CriterionVerdict> = CriterionId::ALL
        .into_iter()
        .filter(|id| selection.contains(id))
        .map(|id| run_criterion(f, id, options))
        .collect();
    let agreement = summarize(&verdicts);
    RunResult { verdicts, agreement }
}

pub fn run_all(f: &FusionSystem, options: CriteriaOptions) -> RunResult {
    run_selected(f, &CriterionId::ALL, options)
}
