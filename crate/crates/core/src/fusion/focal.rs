//! Focal and hyperfocal subgroups and the center `Z_F(S)`.

use std::collections::HashSet;

use crate::group::{center, normal_closure, o_p_prime_part, Elem, Subgroup};

use super::{alperin_subgroups, aut_f, is_centric, FMorphism, FusionError, FusionSystem};

/// Which subgroups `P ≤ S` contribute generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FocalMode {
    /// Fully normalized, centric, radical subgroups plus `[S,S]`.
    /// Correct for saturated systems.
    #[default]
    AlperinReduced,
    /// Every subgroup of `S`.
    Exhaustive,
}

/// One generator `g⁻¹ α(g)` with `g ∈ P` and `α ∈ Aut_F(P)`.
#[derive(Debug, Clone)]
pub struct FocalGenerator {
    pub subgroup: Subgroup,
    pub automorphism: FMorphism,
    pub element: Elem,
    pub value: Elem,
}

fn range(f: &FusionSystem, mode: FocalMode) -> Result<Vec<Subgroup>, FusionError> {
    match mode {
        FocalMode::AlperinReduced => alperin_subgroups(f),
        FocalMode::Exhaustive => Ok(f.subgroups()?.to_vec()),
    }
}

fn collect(
    f: &FusionSystem,
    subgroups: Vec<Subgroup>,
    hyper: bool,
    out: &mut Vec<FocalGenerator>,
    seen: &mut HashSet<Elem>,
) {
    let s = f.sylow();
    for p in subgroups {
        let aut = aut_f(f, &p);
        let allowed: Vec<usize> = if hyper {
            o_p_prime_part(aut.group(), f.prime()).members().iter().map(|e| e.index()).collect()
        } else {
            (0..aut.order()).collect()
        };
        for i in allowed {
            let alpha = &aut.maps()[i];
            for (&g, &ag) in p.members().iter().zip(alpha.images()) {
                let value = s.mul(s.inv(g), ag);
                if seen.insert(value) {
                    out.push(FocalGenerator { subgroup: p.clone(), automorphism: alpha.clone(), element: g, value });
                }
            }
        }
    }
}

/// Distinct generator values `g⁻¹ α(g)` over the chosen range, in discovery
/// order. In reduced mode the commutators of a generating set of `S` come
/// first, as `g⁻¹ c_s(g)`.
pub fn focal_generators(f: &FusionSystem, mode: FocalMode) -> Result<Vec<FocalGenerator>, FusionError> {
    let s = f.sylow();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    if mode == FocalMode::AlperinReduced {
        let whole = f.whole();
        for &x in whole.generators() {
            let c = FMorphism::conjugation(s, whole, whole, x);
            for &g in whole.generators() {
                let value = s.mul(s.inv(g), c.apply(g).unwrap());
                if seen.insert(value) {
                    out.push(FocalGenerator { subgroup: whole.clone(), automorphism: c.clone(), element: g, value });
                }
            }
        }
    }
    collect(f, range(f, mode)?, false, &mut out, &mut seen);
    Ok(out)
}

/// `Foc(F) = ⟨g⁻¹ α(g) : g ∈ P ≤ S, α ∈ Aut_F(P)⟩`.
pub fn focal(f: &FusionSystem, mode: FocalMode) -> Result<Subgroup, FusionError> {
    let values = focal_generators(f, mode)?.into_iter().map(|g| g.value);
    Ok(match mode {
        FocalMode::AlperinReduced => normal_closure(f.sylow(), f.whole(), values),
        FocalMode::Exhaustive => Subgroup::closure(f.sylow(), values),
    })
}

/// `Hyp(F) = ⟨g⁻¹ α(g) : g ∈ P ≤ S, α ∈ O^p(Aut_F(P))⟩`.
pub fn hyperfocal(f: &FusionSystem, mode: FocalMode) -> Result<Subgroup, FusionError> {
    let mut out = Vec::new();
    collect(f, range(f, mode)?, true, &mut out, &mut HashSet::new());
    let values = out.into_iter().map(|g| g.value);
    Ok(match mode {
        FocalMode::AlperinReduced => normal_closure(f.sylow(), f.whole(), values),
        FocalMode::Exhaustive => Subgroup::closure(f.sylow(), values),
    })
}

/// `Z_F(S)`: elements of `Z(S)` fixed by every morphism between F-centric
/// subgroups. Centric subgroups contain `Z(S)`, so every such morphism is
/// defined on all of it.
pub fn center_zf(f: &FusionSystem) -> Result<Subgroup, FusionError> {
    let z = center(f.sylow());
    let mut fixed: Vec<Elem> = z.members().to_vec();
    for p in f.subgroups()? {
        if fixed.len() == 1 {
            break;
        }
        if !is_centric(f, p) {
            continue;
        }
        let homs = f.hom_to_sylow(p);
        fixed.retain(|&x| homs.iter().all(|phi| phi.apply(x) == Some(x)));
    }
    Ok(Subgroup::from_closed_members(f.sylow(), fixed))
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;
    use crate::group::{derived_subgroup, testing::d8};

    #[test]
    fn focal_of_p_group_system_is_derived() {
        let f = FusionSystem::of_p_group(&d8(), 2, Default::default()).unwrap();
        let derived = derived_subgroup(f.sylow());
        assert_eq!(focal(&f, FocalMode::AlperinReduced).unwrap(), derived);
        assert_eq!(focal(&f, FocalMode::Exhaustive).unwrap(), derived);
        assert!(hyperfocal(&f, FocalMode::Exhaustive).unwrap().is_trivial());
    }

    #[test]
    fn a4_focal_and_hyperfocal_are_everything() {
        let f = a4_at_2();
        for mode in [FocalMode::AlperinReduced, FocalMode::Exhaustive] {
            assert_eq!(focal(&f, mode).unwrap().order(), 4);
            assert_eq!(hyperfocal(&f, mode).unwrap().order(), 4);
        }
    }

    #[test]
    fn s4_focal_is_normal_klein() {
        let f = s4_at_2();
        let v = sub(&f, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        assert_eq!(focal(&f, FocalMode::AlperinReduced).unwrap(), v);
        assert_eq!(focal(&f, FocalMode::Exhaustive).unwrap(), v);
    }

    #[test]
    fn fast_path_matches_exhaustive() {
        for f in [s3_at_3(), sl23_at_2(), c7c3_at(7), c7c3_at(3), q8_at_2()] {
            assert_eq!(focal(&f, FocalMode::AlperinReduced).unwrap(), focal(&f, FocalMode::Exhaustive).unwrap());
            assert_eq!(
                hyperfocal(&f, FocalMode::AlperinReduced).unwrap(),
                hyperfocal(&f, FocalMode::Exhaustive).unwrap()
            );
        }
    }

    #[test]
    fn center_examples() {
        let f = FusionSystem::of_p_group(&d8(), 2, Default::default()).unwrap();
        assert_eq!(center_zf(&f).unwrap(), center(f.sylow()));
        assert_eq!(center_zf(&sl23_at_2()).unwrap().order(), 2);
        assert!(center_zf(&a4_at_2()).unwrap().is_trivial());
    }
}
