use std::collections::HashSet;

use crate::fusion::{
    aut_f, center_zf, f_class_element, f_class_subgroup, focal_generators, is_centric, quillen_inclusion_full,
    FMorphism, FocalMode, FusionError, FusionSystem,
};
use crate::group::{derived_subgroup, is_power_of, omega, Elem, FiniteGroup, Subgroup};

use super::{timed, Applicability, CriterionId, CriterionVerdict, Outcome, Verdict, Witness};

const ODD_ONLY: &str = "requires odd p";

/// A morphism out of `p` that is not an `S`-conjugation, if any.
fn non_conjugation(f: &FusionSystem, p: &Subgroup) -> Option<FMorphism> {
    let homs = f.hom_to_sylow(p);
    if homs.len() == f.hom_s(p, f.whole()).len() {
        return None;
    }
    homs.iter().find(|phi| !f.is_s_conjugation(phi)).cloned()
}

fn morphism_witness(f: &FusionSystem, phi: &FMorphism) -> Witness {
    Witness::morphism(phi, &phi.image(f.sylow()))
}

/// `F = F_S(S)`: every `Hom_F(P, S)` consists of `S`-conjugations. Large
/// subgroups are tried first, so the witness is as informative as possible.
pub fn crit_definition(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::Definition, || {
        for p in f.subgroups()?.iter().rev() {
            if let Some(phi) = non_conjugation(f, p) {
                return Ok(Outcome::decided(Some(morphism_witness(f, &phi))));
            }
        }
        Ok(Outcome::decided(None))
    })
}

/// F-conjugacy of elements coincides with `S`-conjugacy.
pub fn crit_element_fusion(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::ElementFusion, || {
        let s = f.sylow();
        let mut done = vec![false; s.order()];
        for a in s.elements() {
            if done[a.index()] {
                continue;
            }
            let class = f_class_element(f, a);
            let conj: HashSet<Elem> = s.elements().map(|g| s.conj(g, a)).collect();
            if let Some(&b) = class.iter().find(|b| !conj.contains(b)) {
                return Ok(Outcome::decided(Some(Witness::ElementPair { a, b })));
            }
            for x in class {
                done[x.index()] = true;
            }
        }
        Ok(Outcome::decided(None))
    })
}

fn commuting_tuples(s: &FiniteGroup, n: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &out {
            for x in s.elements().filter(|&x| t.iter().all(|&y| s.commutes(x, y))) {
                let mut longer: Vec<Elem> = t.clone();
                longer.push(x);
                next.push(longer);
            }
        }
        out = next;
    }
    out
}

/// F-conjugacy of commuting `n`-tuples coincides with `S`-conjugacy.
pub fn crit_tuple_fusion(f: &FusionSystem, n: usize) -> CriterionVerdict {
    timed(f, CriterionId::TupleFusion, || {
        if n < 2 {
            return Ok(Outcome {
                applicability: Applicability::NotApplicable,
                reason: Some("tuple length must be at least 2".into()),
                verdict: Verdict::NotComputed,
                witness: None,
                note: None,
            });
        }
        let s = f.sylow();
        let mut done: HashSet<Vec<Elem>> = HashSet::new();
        for a in commuting_tuples(s, n) {
            if done.contains(&a) {
                continue;
            }
            let orbit = crate::fusion::f_class_tuple(f, &a)?;
            let conj: HashSet<Vec<Elem>> = crate::fusion::s_class_tuple(f, &a).into_iter().collect();
            if let Some(b) = orbit.iter().find(|b| !conj.contains(*b)) {
                return Ok(Outcome::decided(Some(Witness::TuplePair { a, b: b.clone() })));
            }
            done.extend(orbit);
        }
        Ok(Outcome::decided(None).with_note(format!("n = {n}")))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusScope {
    All,
    Centric,
}

/// `Aut_F(P)` is a p-group for every `P` in scope.
pub fn crit_frobenius(f: &FusionSystem, scope: FrobeniusScope) -> CriterionVerdict {
    let id = match scope {
        FrobeniusScope::All => CriterionId::FrobeniusAll,
        FrobeniusScope::Centric => CriterionId::FrobeniusCentric,
    };
    timed(f, id, || {
        let p = f.prime();
        for sub in f.subgroups()? {
            if scope == FrobeniusScope::Centric && !is_centric(f, sub) {
                continue;
            }
            let autos = f.hom_set(sub, sub);
            if is_power_of(autos.len() as u64, p) {
                continue;
            }
            let aut = aut_f(f, sub);
            let alpha = aut.p_prime_element(p).expect("non-p-group has a p'-element");
            return Ok(Outcome::decided(Some(Witness::morphism(alpha, sub))));
        }
        Ok(Outcome::decided(None))
    })
}

/// `Foc(F) = [S,S]`.
pub fn crit_focal(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::Focal, || {
        let derived = derived_subgroup(f.sylow());
        let witness =
            focal_generators(f, FocalMode::AlperinReduced)?.into_iter().find(|g| !derived.contains(g.value)).map(|g| {
                let subgroup = g.subgroup.generators().to_vec();
                let images = subgroup.iter().map(|&x| g.automorphism.apply(x).unwrap()).collect();
                Witness::FocalGenerator { subgroup, images, element: g.element, value: g.value }
            });
        Ok(Outcome::decided(witness))
    })
}

/// For abelian `S`: `Aut_F(S) = 1`, cross-checked against singleton
/// element classes.
pub fn crit_abelian(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::Abelian, || {
        let s = f.sylow();
        if !s.is_abelian() {
            return Ok(Outcome {
                applicability: Applicability::NotApplicable,
                reason: Some("requires abelian S".into()),
                verdict: Verdict::NotComputed,
                witness: None,
                note: None,
            });
        }
        let whole = f.whole();
        let witness =
            f.hom_set(whole, whole).into_iter().find(|a| !a.is_identity()).map(|a| Witness::morphism(&a, whole));
        let singletons = s.elements().all(|x| f_class_element(f, x).len() == 1);
        let outcome = Outcome::decided(witness);
        if singletons != (outcome.verdict == Verdict::True) {
            return Ok(Outcome { verdict: Verdict::Inconclusive, witness: None, ..outcome }
                .with_note("automorphism and element-class checks disagree"));
        }
        Ok(outcome)
    })
}

/// Every elementary abelian `V ⊴ S` is weakly closed with `Aut_F(V)` a
/// p-group. Characterizes nilpotency only for odd `p`.
pub fn crit_quillen(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::Quillen, || {
        let s = f.sylow();
        let p = f.prime();
        let mut witness = None;
        for v in f.subgroups()? {
            if v.is_trivial() || !v.is_elementary_abelian(s, p) || !v.is_normal(s) {
                continue;
            }
            let class = f_class_subgroup(f, v);
            if class.len() > 1 {
                let phi = f.hom_to_sylow(v).iter().find(|phi| phi.image(s) != *v).cloned().unwrap();
                witness = Some(morphism_witness(f, &phi));
                break;
            }
            let aut = aut_f(f, v);
            if let Some(alpha) = aut.p_prime_element(p) {
                witness = Some(Witness::morphism(alpha, v));
                break;
            }
        }
        let outcome = Outcome::decided(witness);
        Ok(if p == 2 {
            outcome.with_applicability(
                Applicability::HypothesisOnly,
                "at p = 2 the hypothesis does not imply nilpotency (SL(2,3) is a counterexample)",
            )
        } else {
            outcome
        })
    })
}

/// The inclusion of Quillen categories `ε_S → ε_F` is full.
pub fn crit_quillen_category(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::QuillenCategory, || {
        let witness = quillen_inclusion_full(f)?.map(|(_, w, phi)| Witness::morphism(&phi, &w));
        let outcome = Outcome::decided(witness);
        Ok(if f.prime() == 2 { outcome.with_applicability(Applicability::NotApplicable, ODD_ONLY) } else { outcome })
    })
}

/// `S` controls fusion of `C_p`-subgroups: every morphism out of `⟨x⟩`
/// with `x^p = 1` (`x^4 = 1` when `p = 2`) is an `S`-conjugation.
pub fn crit_control_fusion(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::ControlFusion, || {
        let s = f.sylow();
        let e = if f.prime() == 2 { 4 } else { f.prime() };
        let mut seen: HashSet<Subgroup> = HashSet::new();
        for x in s.elements().filter(|&x| s.pow(x, e) == s.identity()) {
            let cyclic = f.subgroup([x]);
            if !seen.insert(cyclic.clone()) {
                continue;
            }
            if let Some(phi) = non_conjugation(f, &cyclic) {
                let image = phi.image(s);
                let domain = vec![x];
                let images = vec![phi.apply(x).unwrap()];
                let witness = Witness::Morphism { domain, codomain: image.generators().to_vec(), images };
                return Ok(Outcome::decided(Some(witness)));
            }
        }
        Ok(Outcome::decided(None))
    })
}

fn sufficient(hypothesis: Result<Option<String>, FusionError>) -> Result<Outcome, FusionError> {
    let failure = hypothesis?;
    Ok(Outcome {
        applicability: Applicability::Applicable,
        reason: None,
        verdict: if failure.is_none() { Verdict::True } else { Verdict::Inconclusive },
        witness: None,
        note: failure,
    })
}

/// Smallest `n` with `p^n > 2`.
fn small_exponent(p: u64) -> u32 {
    if p == 2 {
        2
    } else {
        1
    }
}

/// Sufficient: every `x` with `x^(p^n) = 1`, for the least `n` with
/// `p^n > 2`, is fixed by every morphism whose domain contains it.
pub fn suff_central_elements(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::SuffCentralElements, || {
        sufficient((|| {
            let s = f.sylow();
            let q = f.prime().pow(small_exponent(f.prime()));
            for x in s.elements().filter(|&x| s.pow(x, q) == s.identity()) {
                // every morphism containing x restricts to one out of ⟨x⟩
                let cyclic = f.subgroup([x]);
                if let Some(phi) = f.hom_to_sylow(&cyclic).iter().find(|phi| phi.apply(x) != Some(x)) {
                    return Ok(Some(format!("{} is moved to {}", f.label(x), f.label(phi.apply(x).unwrap()))));
                }
            }
            Ok(None)
        })())
    })
}

/// Sufficient: `Ω_1(S) ≤ Z_F(S)` for odd `p`, `Ω_2(S) ≤ Z_F(S)` for `p = 2`.
pub fn suff_omega_center(f: &FusionSystem) -> CriterionVerdict {
    timed(f, CriterionId::SuffOmegaCenter, || {
        sufficient((|| {
            let i = small_exponent(f.prime());
            let om = omega(f.sylow(), f.prime(), i);
            let z = center_zf(f)?;
            Ok((!om.is_subgroup_of(&z))
                .then(|| format!("Omega_{i}(S) has order {} but Z_F(S) has order {}", om.order(), z.order())))
        })())
    })
}
