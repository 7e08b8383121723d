use std::collections::HashMap;

use crate::group::{p_part, Subgroup};

use super::{aut_f, is_fully_centralized, is_fully_normalized, n_phi, FMorphism, FusionError, FusionSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SaturationViolation {
    /// Axiom I: fully normalized but not fully centralized.
    NotFullyCentralized { subgroup: Subgroup },
    /// Axiom I: `Aut_S(P)` is not a Sylow subgroup of `Aut_F(P)`.
    AutSNotSylow { subgroup: Subgroup, aut_s_order: usize, aut_f_order: usize },
    /// Axiom II: `φ(P)` is fully centralized but `φ` has no extension to `N_φ`.
    NoExtension { morphism: FMorphism, n_phi: Subgroup },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SaturationReport {
    pub axiom_one: Vec<SaturationViolation>,
    pub axiom_two: Vec<SaturationViolation>,
}

impl SaturationReport {
    pub fn is_saturated(&self) -> bool {
        self.axiom_one.is_empty() && self.axiom_two.is_empty()
    }
}

/// Checks both saturation axioms over every subgroup of `S`.
///
/// Axiom I: every fully normalized `P` is fully centralized and
/// `Aut_S(P) ∈ Syl_p(Aut_F(P))`. Axiom II: every `φ ∈ Hom_F(P, S)` with
/// `φ(P)` fully centralized extends to some `φ̄ ∈ Hom_F(N_φ, S)`.
pub fn check_saturation(f: &FusionSystem) -> Result<SaturationReport, FusionError> {
    let subgroups = f.subgroups()?;
    let p = f.prime();
    let mut report = SaturationReport::default();
    let mut fully_centralized: HashMap<Subgroup, bool> = HashMap::new();

    for sub in subgroups {
        let centralized = *fully_centralized.entry(sub.clone()).or_insert_with(|| is_fully_centralized(f, sub));
        if is_fully_normalized(f, sub) {
            if !centralized {
                report.axiom_one.push(SaturationViolation::NotFullyCentralized { subgroup: sub.clone() });
            }
            let aut_s_order = f.aut_s(sub).len();
            let aut_f_order = aut_f(f, sub).order();
            if aut_s_order as u64 != p_part(aut_f_order as u64, p) {
                report.axiom_one.push(SaturationViolation::AutSNotSylow {
                    subgroup: sub.clone(),
                    aut_s_order,
                    aut_f_order,
                });
            }
        }
    }

    for sub in subgroups {
        for phi in f.hom_to_sylow(sub).iter() {
            let image = phi.image(f.sylow());
            let centralized =
                *fully_centralized.entry(image.clone()).or_insert_with(|| is_fully_centralized(f, &image));
            if !centralized {
                continue;
            }
            let n = n_phi(f, phi);
            let extends = f
                .hom_to_sylow(&n)
                .iter()
                .any(|psi| sub.members().iter().zip(phi.images()).all(|(&x, &y)| psi.apply(x) == Some(y)));
            if !extends {
                report.axiom_two.push(SaturationViolation::NoExtension { morphism: phi.clone(), n_phi: n });
            }
        }
    }
    Ok(report)
}
