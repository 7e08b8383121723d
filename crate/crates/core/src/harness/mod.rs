//! Group specs, the built-in corpus, criterion runs against the oracle, and
//! reports.

mod citations;
mod corpus;
mod report;
mod spec;

use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::fusion::{FusionError, FusionLimits, FusionSystem, DEFAULT_MORPHISM_BUDGET};
use crate::group::{is_prime, FiniteGroup, DEFAULT_MAX_ORDER, DEFAULT_MAX_SUBGROUP_ENUMERATION};
use crate::nilpotency::{reverify, run_criterion, run_selected, CriteriaOptions, CriterionId, DEFAULT_TUPLE_N};
use crate::oracle::is_p_nilpotent;

pub use citations::condition;
pub use corpus::builtin_corpus;
pub use report::{OracleSummary, PairReport, Report, Totals, WitnessTrace};
pub use spec::{parse_group_spec, BuildError, GroupSpec, SpecError, MAX_DEGREE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    /// Largest Sylow order whose subgroup lattice is enumerated.
    pub max_sylow: usize,
    pub morphism_budget: usize,
    pub tuple_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_sylow: DEFAULT_MAX_SUBGROUP_ENUMERATION,
            morphism_budget: DEFAULT_MORPHISM_BUDGET,
            tuple_n: DEFAULT_TUPLE_N,
        }
    }
}

impl Limits {
    pub fn fusion(&self) -> FusionLimits {
        FusionLimits { max_subgroup_enumeration: self.max_sylow, morphism_budget: self.morphism_budget }
    }

    pub fn criteria(&self) -> CriteriaOptions {
        CriteriaOptions { tuple_n: self.tuple_n }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Runs the selected criteria and the oracle on `F_S(G)` for one prime.
pub fn analyze(
    name: &str,
    g: &FiniteGroup,
    p: u64,
    selection: &[CriterionId],
    limits: &Limits,
) -> Result<PairReport, HarnessError> {
    if !is_prime(p) {
        return Err(HarnessError::NotPrime(p));
    }
    let start = Instant::now();
    let f = FusionSystem::from_group(g, p, limits.fusion())?;
    let oracle = is_p_nilpotent(g, p);
    let run = run_selected(&f, selection, limits.criteria());
    let witnesses = run
        .verdicts
        .iter()
        .filter_map(|v| {
            v.witness.as_ref().map(|w| WitnessTrace {
                criterion: v.criterion,
                text: w.describe(&f),
                reverified: reverify(&f, v),
            })
        })
        .collect();
    let agreed = run.agreement.agreed
        && run.agreement.sufficiency_violations.is_empty()
        && run.agreement.verdict.is_none_or(|v| v == oracle.p_nilpotent);
    Ok(PairReport {
        group: name.to_string(),
        order: g.order(),
        prime: p,
        sylow_order: f.sylow().order(),
        degenerate: f.sylow().order() == 1,
        verdicts: run.verdicts,
        oracle: OracleSummary {
            p_nilpotent: oracle.p_nilpotent,
            p_prime_subgroup_order: oracle.p_prime_subgroup_order,
        },
        agreement: run.agreement,
        agreed,
        witnesses,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

/// `check`: the selected criteria (all by default) for one prime.
pub fn cmd_check(
    spec: &GroupSpec,
    p: u64,
    selection: Option<&[CriterionId]>,
    limits: &Limits,
) -> Result<PairReport, HarnessError> {
    let g = spec.build(limits.max_order)?;
    analyze(&spec.name, &g, p, selection.unwrap_or(&CriterionId::ALL), limits)
}

/// `cross-validate`: every criterion on every (group, prime) pair, run in
/// parallel and reported in input order.
pub fn cmd_cross_validate(specs: &[GroupSpec], limits: &Limits) -> Result<Report, HarnessError> {
    let groups: Vec<FiniteGroup> = specs.par_iter().map(|s| s.build(limits.max_order)).collect::<Result<_, _>>()?;
    let tasks: Vec<(&GroupSpec, &FiniteGroup, u64)> =
        specs.iter().zip(&groups).flat_map(|(s, g)| s.primes.iter().map(move |&p| (s, g, p))).collect();
    let pairs = tasks
        .par_iter()
        .map(|&(s, g, p)| analyze(&s.name, g, p, &CriterionId::ALL, limits))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report::from_pairs(pairs))
}

/// `explain`: one criterion with its witness and the condition it violates.
pub fn cmd_explain(spec: &GroupSpec, p: u64, criterion: CriterionId, limits: &Limits) -> Result<String, HarnessError> {
    if !is_prime(p) {
        return Err(HarnessError::NotPrime(p));
    }
    let g = spec.build(limits.max_order)?;
    let f = FusionSystem::from_group(&g, p, limits.fusion())?;
    let v = run_criterion(&f, criterion, limits.criteria());
    let oracle = is_p_nilpotent(&g, p);
    let mut out = format!(
        "{} at p = {}: |G| = {}, |S| = {}\ncriterion {}: {:?} ({:?})\n",
        spec.name,
        p,
        g.order(),
        f.sylow().order(),
        criterion,
        v.verdict,
        v.applicability
    );
    if let Some(reason) = &v.reason {
        out.push_str(&format!("reason: {reason}\n"));
    }
    out.push_str(&format!("condition: {}\n", condition(criterion)));
    match &v.witness {
        Some(w) => out.push_str(&format!("witness: {}\nwitness re-verified: {}\n", w.describe(&f), reverify(&f, &v))),
        None => out.push_str("witness: none\n"),
    }
    if let Some(note) = &v.note {
        out.push_str(&format!("note: {note}\n"));
    }
    out.push_str(&format!("oracle: p-nilpotent = {}\n", oracle.p_nilpotent));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotency::{Applicability, Verdict};

    fn spec(name: &str) -> GroupSpec {
        builtin_corpus().into_iter().find(|s| s.name == name).unwrap()
    }

    #[test]
    fn check_sl23_quillen() {
        let r = cmd_check(&spec("SL(2,3)"), 2, Some(&[CriterionId::Quillen]), &Limits::default()).unwrap();
        assert_eq!(r.verdicts.len(), 1);
        assert_eq!(r.verdicts[0].applicability, Applicability::HypothesisOnly);
        assert_eq!(r.verdicts[0].verdict, Verdict::True);
        assert!(!r.oracle.p_nilpotent);
        assert!(r.agreed);
    }

    #[test]
    fn check_s3_at_two() {
        let r = cmd_check(&spec("S3"), 2, None, &Limits::default()).unwrap();
        assert!(r.oracle.p_nilpotent);
        assert!(r.agreed);
        assert!(r.verdicts.iter().all(|v| matches!(v.verdict, Verdict::True | Verdict::NotComputed)));
    }

    #[test]
    fn degenerate_prime() {
        let r = cmd_check(&spec("S3"), 5, None, &Limits::default()).unwrap();
        assert!(r.degenerate);
        assert!(r.oracle.p_nilpotent);
        assert_eq!(r.agreement.verdict, Some(true));
    }

    #[test]
    fn sylow_cap_reports_not_computed() {
        let limits = Limits { max_sylow: 4, ..Limits::default() };
        let r = cmd_check(&spec("S4"), 2, None, &limits).unwrap();
        let def = r.verdicts.iter().find(|v| v.criterion == CriterionId::Definition).unwrap();
        assert_eq!(def.verdict, Verdict::NotComputed);
        assert!(r.agreed);
    }

    #[test]
    fn explain_mentions_condition_and_witness() {
        let text = cmd_explain(&spec("A4"), 2, CriterionId::ElementFusion, &Limits::default()).unwrap();
        assert!(text.contains("witness: elements"));
        assert!(text.contains("re-verified: true"));
        assert!(text.contains(condition(CriterionId::ElementFusion)));
    }

    #[test]
    fn bad_prime_is_rejected() {
        assert_eq!(cmd_check(&spec("S3"), 6, None, &Limits::default()).unwrap_err(), HarnessError::NotPrime(6));
    }
}
