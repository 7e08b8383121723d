use serde::{Deserialize, Serialize};

use crate::nilpotency::{AgreementSummary, CriterionId, CriterionVerdict, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub p_nilpotent: bool,
    pub p_prime_subgroup_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTrace {
    pub criterion: CriterionId,
    pub text: String,
    pub reverified: bool,
}

/// Results for one (group, prime) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub group: String,
    pub order: usize,
    pub prime: u64,
    pub sylow_order: usize,
    /// `p` does not divide `|G|`; the Sylow subgroup is trivial and the
    /// system is nilpotent.
    pub degenerate: bool,
    pub verdicts: Vec<CriterionVerdict>,
    pub oracle: OracleSummary,
    pub agreement: AgreementSummary,
    /// The criteria agree among themselves and with the oracle, and no
    /// sufficient check claims nilpotency of a non-nilpotent system.
    pub agreed: bool,
    pub witnesses: Vec<WitnessTrace>,
    pub elapsed_us: u64,
}

impl PairReport {
    pub fn key(&self) -> String {
        format!("{}@{}", self.group, self.prime)
    }

    pub fn verdict(&self, id: CriterionId) -> Option<&CriterionVerdict> {
        self.verdicts.iter().find(|v| v.criterion == id)
    }

    /// Every false verdict's witness re-verified.
    pub fn witnesses_valid(&self) -> bool {
        self.witnesses.iter().all(|w| w.reverified)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pairs: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub degenerate: usize,
    pub not_computed: usize,
    pub p_nilpotent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pairs: Vec<PairReport>,
    pub totals: Totals,
    /// Keys `group@prime` of pairs that disagree or carry an invalid witness.
    pub disagreements: Vec<String>,
}

impl Report {
    pub fn from_pairs(pairs: Vec<PairReport>) -> Self {
        let mut totals = Totals { pairs: pairs.len(), ..Totals::default() };
        let mut disagreements = Vec::new();
        for r in &pairs {
            if r.agreed && r.witnesses_valid() {
                totals.agreements += 1;
            } else {
                totals.disagreements += 1;
                disagreements.push(r.key());
            }
            totals.degenerate += r.degenerate as usize;
            totals.p_nilpotent += r.oracle.p_nilpotent as usize;
            totals.not_computed += r.verdicts.iter().filter(|v| v.verdict == Verdict::NotComputed).count();
        }
        Report { pairs, totals, disagreements }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// 0 when every pair agrees, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.disagreements.is_empty() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.pairs {
            out.push_str(&r.to_text());
        }
        let t = &self.totals;
        out.push_str(&format!(
            "\n{} pairs: {} agree, {} disagree, {} degenerate, {} p-nilpotent, {} verdicts not computed\n",
            t.pairs, t.agreements, t.disagreements, t.degenerate, t.p_nilpotent, t.not_computed
        ));
        if !self.disagreements.is_empty() {
            out.push_str(&format!("disagreements: {}\n", self.disagreements.join(", ")));
        }
        out
    }
}

fn verdict_word(v: &CriterionVerdict) -> &'static str {
    match v.verdict {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Inconclusive => "inconclusive",
        Verdict::NotComputed => "not-computed",
    }
}

impl PairReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} (|G| = {}) at p = {}: |S| = {}{}, oracle p-nilpotent = {}, {}\n",
            self.group,
            self.order,
            self.prime,
            self.sylow_order,
            if self.degenerate { " (degenerate: trivial Sylow)" } else { "" },
            self.oracle.p_nilpotent,
            if self.agreed { "agree" } else { "DISAGREE" }
        );
        for v in &self.verdicts {
            let mut line = format!("  {:<22} {:<13}", v.criterion.as_str(), verdict_word(v));
            match v.applicability {
                crate::nilpotency::Applicability::Applicable => {}
                crate::nilpotency::Applicability::NotApplicable => line.push_str(" [not applicable]"),
                crate::nilpotency::Applicability::HypothesisOnly => line.push_str(" [hypothesis only]"),
            }
            line.push_str(&format!(" {}us {} queries", v.cost.elapsed_us, v.cost.hom_queries));
            out.push_str(line.trim_end());
            out.push('\n');
        }
        for w in &self.witnesses {
            out.push_str(&format!("  witness {}: {}\n", w.criterion, w.text));
        }
        out
    }
}
