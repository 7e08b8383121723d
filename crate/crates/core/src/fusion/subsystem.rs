//! The normalizer and centralizer subsystems `N_F(Q)` and `C_F(Q)`.

use std::collections::HashSet;
use std::sync::Arc;

use crate::group::{all_subgroups, Elem, Subgroup};

use super::{FMorphism, FusionError, FusionSystem, HomTable, SystemKind};

/// `N_F(Q)` over `N_S(Q)`: `φ ∈ Hom_F(P, P')` such that some
/// `ψ ∈ Hom_F(PQ, P'Q)` restricts to `φ` and maps `Q` onto `Q`.
pub fn normalizer_system(f: &FusionSystem, q: &Subgroup) -> Result<FusionSystem, FusionError> {
    let base = f.normalizer_in_s(q);
    subsystem(f, q, &base, SystemKind::Normalizer, |psi| q.members().iter().all(|&x| q.contains(psi.apply(x).unwrap())))
}

/// `C_F(Q)` over `C_S(Q)`: `φ ∈ Hom_F(P, P')` such that some
/// `ψ ∈ Hom_F(PQ, P'Q)` restricts to `φ` and is the identity on `Q`.
pub fn centralizer_system(f: &FusionSystem, q: &Subgroup) -> Result<FusionSystem, FusionError> {
    let base = f.centralizer_in_s(q);
    subsystem(f, q, &base, SystemKind::Centralizer, |psi| q.members().iter().all(|&x| psi.apply(x) == Some(x)))
}

fn subsystem(
    f: &FusionSystem,
    q: &Subgroup,
    base: &Subgroup,
    kind: SystemKind,
    keep: impl Fn(&FMorphism) -> bool,
) -> Result<FusionSystem, FusionError> {
    let s = f.sylow();
    let (t, embedding) = s.subgroup_as_group(base);
    let mut local = vec![u32::MAX; s.order()];
    for (i, e) in embedding.iter().enumerate() {
        local[e.index()] = i as u32;
    }
    let lattice = all_subgroups(&t, f.limits().max_subgroup_enumeration)?;
    let t_whole = Subgroup::whole(&t);

    let mut homs = HomTable::with_capacity(lattice.len());
    for p in &lattice {
        let p_in_s = Subgroup::closure(s, p.members().iter().map(|x| embedding[x.index()]));
        let pq = Subgroup::join(s, &p_in_s, q.generators().iter().copied());
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let mut maps = Vec::new();
        for psi in f.hom_to_sylow(&pq).iter().filter(|psi| keep(psi)) {
            let images: Option<Vec<Elem>> = p
                .members()
                .iter()
                .map(|x| {
                    let y = psi.apply(embedding[x.index()]).unwrap();
                    let l = local[y.index()];
                    (l != u32::MAX).then(|| Elem::new(l as usize))
                })
                .collect();
            // ψ(P) normalizes (resp. centralizes) Q, so images stay in the base
            let images = images.expect("image of P lies in the base of the subsystem");
            if seen.insert(images.clone()) {
                maps.push(images);
            }
        }
        maps.sort();
        let morphisms: Arc<[FMorphism]> =
            maps.into_iter().map(|images| FMorphism::from_parts(p.clone(), t_whole.clone(), images)).collect();
        homs.insert(p.bits().clone(), morphisms);
    }
    Ok(FusionSystem::from_table(t, f.prime(), f.limits(), kind, lattice, homs, Vec::new(), Some(embedding)))
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;
    use crate::fusion::aut_f;
    use crate::group::center;

    #[test]
    fn center_of_q8_in_sl23_is_normal_and_central() {
        let f = sl23_at_2();
        let z = center(f.sylow());
        let n = normalizer_system(&f, &z).unwrap();
        let c = centralizer_system(&f, &z).unwrap();
        assert_eq!(n.kind(), SystemKind::Normalizer);
        assert_eq!(n.hom_table().unwrap(), f.hom_table().unwrap());
        assert_eq!(c.hom_table().unwrap(), f.hom_table().unwrap());
    }

    #[test]
    fn normalizer_of_s_keeps_aut_s() {
        let f = s4_at_2();
        let n = normalizer_system(&f, f.whole()).unwrap();
        assert_eq!(aut_f(&n, n.whole()).order(), aut_f(&f, f.whole()).order());
    }

    #[test]
    fn centralizer_of_involution_in_a4() {
        let f = a4_at_2();
        let q = sub(&f, &["(0 1)(2 3)"]);
        let c = centralizer_system(&f, &q).unwrap();
        assert_eq!(c.sylow().order(), 4);
        assert_eq!(aut_f(&c, c.whole()).order(), 1);
        let n = normalizer_system(&f, &q).unwrap();
        assert_eq!(aut_f(&n, n.whole()).order(), 1);
    }

    #[test]
    fn subsystem_over_proper_subgroup() {
        let f = s4_at_2();
        let q = sub(&f, &["(0 2)"]);
        let n = normalizer_system(&f, &q).unwrap();
        assert_eq!(n.sylow().order(), 4);
        let emb = n.parent_embedding().unwrap();
        assert!(emb.iter().all(|&x| f.normalizer_in_s(&q).contains(x)));
    }
}
