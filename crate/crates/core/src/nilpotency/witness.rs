use serde::{Deserialize, Serialize};

use crate::fusion::{aut_f, f_class_element, f_class_tuple, is_centric, s_class_tuple, FMorphism, FusionSystem};
use crate::group::{derived_subgroup, is_power_of, Elem, Subgroup};

use super::{CriterionId, CriterionVerdict, Verdict};

/// A concrete counterexample, in element handles of the system's `S`.
///
/// Subgroups are given by generators. A morphism is given by the images of
/// the listed domain generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Morphism { domain: Vec<Elem>, codomain: Vec<Elem>, images: Vec<Elem> },
    ElementPair { a: Elem, b: Elem },
    TuplePair { a: Vec<Elem>, b: Vec<Elem> },
    FocalGenerator { subgroup: Vec<Elem>, images: Vec<Elem>, element: Elem, value: Elem },
}

impl Witness {
    /// `φ` described by the generators of its domain and of `codomain`.
    pub fn morphism(phi: &FMorphism, codomain: &Subgroup) -> Self {
        let domain = phi.domain().generators().to_vec();
        let images = domain.iter().map(|&x| phi.apply(x).unwrap()).collect();
        Witness::Morphism { domain, codomain: codomain.generators().to_vec(), images }
    }

    /// Human-readable rendering with cycle labels where available.
    pub fn describe(&self, f: &FusionSystem) -> String {
        let label = |x: &Elem| f.label(*x);
        let list = |xs: &[Elem]| xs.iter().map(label).collect::<Vec<_>>().join(", ");
        match self {
            Witness::Morphism { domain, codomain, images } => {
                let pairs: Vec<String> =
                    domain.iter().zip(images).map(|(x, y)| format!("{} -> {}", label(x), label(y))).collect();
                format!("morphism from <{}> to <{}>: {}", list(domain), list(codomain), pairs.join("; "))
            }
            Witness::ElementPair { a, b } => format!("elements {} and {}", label(a), label(b)),
            Witness::TuplePair { a, b } => format!("tuples ({}) and ({})", list(a), list(b)),
            Witness::FocalGenerator { subgroup, images, element, value } => {
                let pairs: Vec<String> =
                    subgroup.iter().zip(images).map(|(x, y)| format!("{} -> {}", label(x), label(y))).collect();
                format!(
                    "g = {} in <{}>, automorphism {}, g^-1 alpha(g) = {}",
                    label(element),
                    list(subgroup),
                    pairs.join("; "),
                    label(value)
                )
            }
        }
    }
}

fn in_range(f: &FusionSystem, xs: &[Elem]) -> bool {
    xs.iter().all(|x| x.index() < f.sylow().order())
}

/// Rebuilds a morphism witness as an element of `Hom_F`, or `None` if the
/// data do not describe one.
fn rebuild(f: &FusionSystem, domain: &[Elem], codomain: &[Elem], images: &[Elem]) -> Option<(FMorphism, Subgroup)> {
    if !in_range(f, domain) || !in_range(f, codomain) || !in_range(f, images) {
        return None;
    }
    let s = f.sylow();
    let d = f.subgroup(domain.iter().copied());
    let c = f.subgroup(codomain.iter().copied());
    let phi = FMorphism::extend(s, d, c.clone(), domain, images).ok()?;
    f.contains_morphism(&phi).then_some((phi, c))
}

fn is_c_p_element(f: &FusionSystem, x: Elem) -> bool {
    let p = f.prime();
    let e = if p == 2 { 4 } else { p };
    f.sylow().pow(x, e) == f.sylow().identity()
}

/// Re-checks the witness of a false verdict from scratch. Verdicts that
/// are not false have nothing to re-verify and pass.
pub fn reverify(f: &FusionSystem, verdict: &CriterionVerdict) -> bool {
    if verdict.verdict != Verdict::False {
        return verdict.witness.is_none();
    }
    let Some(witness) = &verdict.witness else { return false };
    let s = f.sylow();
    let p = f.prime();
    match (verdict.criterion, witness) {
        (CriterionId::Definition, Witness::Morphism { domain, codomain, images }) => {
            rebuild(f, domain, codomain, images).is_some_and(|(phi, _)| !f.is_s_conjugation(&phi))
        }
        (CriterionId::ControlFusion, Witness::Morphism { domain, codomain, images }) => {
            domain.len() == 1
                && rebuild(f, domain, codomain, images)
                    .is_some_and(|(phi, _)| is_c_p_element(f, domain[0]) && !f.is_s_conjugation(&phi))
        }
        (CriterionId::QuillenCategory, Witness::Morphism { domain, codomain, images }) => {
            rebuild(f, domain, codomain, images).is_some_and(|(phi, w)| {
                phi.domain().is_elementary_abelian(s, p)
                    && w.is_elementary_abelian(s, p)
                    && phi.image(s).is_subgroup_of(&w)
                    && !f.is_s_conjugation(&phi)
            })
        }
        (CriterionId::FrobeniusAll | CriterionId::FrobeniusCentric, Witness::Morphism { domain, codomain, images }) => {
            rebuild(f, domain, codomain, images).is_some_and(|(phi, c)| {
                &c == phi.domain()
                    && phi.image(s) == c
                    && !is_power_of(phi.automorphism_order() as u64, p)
                    && (verdict.criterion == CriterionId::FrobeniusAll || is_centric(f, &c))
            })
        }
        (CriterionId::Abelian, Witness::Morphism { domain, codomain, images }) => {
            rebuild(f, domain, codomain, images).is_some_and(|(phi, _)| phi.domain() == f.whole() && !phi.is_identity())
        }
        (CriterionId::Quillen, Witness::Morphism { domain, codomain, images }) => rebuild(f, domain, codomain, images)
            .is_some_and(|(phi, _)| {
                let v = phi.domain();
                let moved = phi.image(s) != *v;
                v.is_elementary_abelian(s, p)
                    && v.is_normal(s)
                    && (moved || !is_power_of(phi.automorphism_order() as u64, p))
            }),
        (CriterionId::ElementFusion, Witness::ElementPair { a, b }) => {
            in_range(f, &[*a, *b]) && f_class_element(f, *a).contains(b) && !s.elements().any(|g| s.conj(g, *a) == *b)
        }
        (CriterionId::TupleFusion, Witness::TuplePair { a, b }) => {
            in_range(f, a)
                && in_range(f, b)
                && a.len() == b.len()
                && f_class_tuple(f, a).is_ok_and(|orbit| orbit.contains(b))
                && !s_class_tuple(f, a).contains(b)
        }
        (CriterionId::Focal, Witness::FocalGenerator { subgroup, images, element, value }) => {
            if !in_range(f, subgroup) || !in_range(f, images) || !in_range(f, &[*element, *value]) {
                return false;
            }
            let p_sub = f.subgroup(subgroup.iter().copied());
            let Ok(alpha) = FMorphism::extend(s, p_sub.clone(), p_sub.clone(), subgroup, images) else {
                return false;
            };
            p_sub.contains(*element)
                && alpha.image(s) == p_sub
                && aut_f(f, &p_sub).maps().iter().any(|m| m.same_map(&alpha))
                && s.mul(s.inv(*element), alpha.apply(*element).unwrap()) == *value
                && !derived_subgroup(s).contains(*value)
        }
        _ => false,
    }
}
