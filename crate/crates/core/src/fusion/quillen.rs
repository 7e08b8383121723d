//! Quillen categories: elementary abelian subgroups of `S` with morphisms
//! from `S`-conjugation or from the fusion system.

use crate::group::Subgroup;

use super::{FMorphism, FusionError, FusionSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuillenHoms {
    /// `ε_S`: maps induced by conjugation in `S`.
    Conjugation,
    /// `ε_F`: every morphism of the fusion system.
    Fusion,
}

/// Objects are the nontrivial elementary abelian subgroups of `S`, sorted
/// by order; `homs[i][j]` holds the morphisms from object `i` to object `j`.
#[derive(Debug, Clone)]
pub struct QuillenCategory {
    pub kind: QuillenHoms,
    pub objects: Vec<Subgroup>,
    pub homs: Vec<Vec<Vec<FMorphism>>>,
}

impl QuillenCategory {
    pub fn hom_count(&self) -> usize {
        self.homs.iter().flatten().map(Vec::len).sum()
    }
}

fn objects(f: &FusionSystem) -> Result<Vec<Subgroup>, FusionError> {
    Ok(f.subgroups()?
        .iter()
        .filter(|v| !v.is_trivial() && v.is_elementary_abelian(f.sylow(), f.prime()))
        .cloned()
        .collect())
}

pub fn quillen_category(f: &FusionSystem, kind: QuillenHoms) -> Result<QuillenCategory, FusionError> {
    let objects = objects(f)?;
    let homs = objects
        .iter()
        .map(|v| {
            objects
                .iter()
                .map(|w| match kind {
                    QuillenHoms::Conjugation => f.hom_s(v, w),
                    QuillenHoms::Fusion => f.hom_set(v, w),
                })
                .collect()
        })
        .collect();
    Ok(QuillenCategory { kind, objects, homs })
}

/// Whether the identity-on-objects inclusion `ε_S → ε_F` is full. Returns
/// `None` when it is, otherwise the first `(V, W, φ)` with
/// `φ ∈ Hom_F(V, W) \ Hom_S(V, W)`.
pub fn quillen_inclusion_full(f: &FusionSystem) -> Result<Option<(Subgroup, Subgroup, FMorphism)>, FusionError> {
    let s = f.sylow();
    for v in objects(f)? {
        for phi in f.hom_to_sylow(&v).iter() {
            if !f.is_s_conjugation(phi) {
                let w = phi.image(s);
                return Ok(Some((v.clone(), w.clone(), phi.with_codomain(&w))));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;
    use crate::group::testing::d8;

    #[test]
    fn p_group_inclusion_is_full() {
        let f = FusionSystem::of_p_group(&d8(), 2, Default::default()).unwrap();
        assert!(quillen_inclusion_full(&f).unwrap().is_none());
        let es = quillen_category(&f, QuillenHoms::Conjugation).unwrap();
        let ef = quillen_category(&f, QuillenHoms::Fusion).unwrap();
        assert_eq!(es.hom_count(), ef.hom_count());
        assert!(es.objects.iter().all(|v| v.is_elementary_abelian(f.sylow(), 2)));
    }

    #[test]
    fn a4_inclusion_is_not_full() {
        let f = a4_at_2();
        let (v, w, phi) = quillen_inclusion_full(&f).unwrap().unwrap();
        assert!(!f.is_s_conjugation(&phi));
        assert_eq!(phi.domain(), &v);
        assert_eq!(phi.image(f.sylow()), w);
        let es = quillen_category(&f, QuillenHoms::Conjugation).unwrap();
        let ef = quillen_category(&f, QuillenHoms::Fusion).unwrap();
        let top = es.objects.iter().position(|x| x == f.whole()).unwrap();
        assert_eq!(es.homs[top][top].len(), 1);
        assert_eq!(ef.homs[top][top].len(), 3);
    }

    #[test]
    fn s3_at_two_is_full() {
        assert!(quillen_inclusion_full(&s3_at_2()).unwrap().is_none());
        assert!(quillen_inclusion_full(&s3_at_3()).unwrap().is_some());
    }

    #[test]
    fn conjugation_homs_lie_in_fusion_homs() {
        let f = s4_at_2();
        let es = quillen_category(&f, QuillenHoms::Conjugation).unwrap();
        let ef = quillen_category(&f, QuillenHoms::Fusion).unwrap();
        for (row_s, row_f) in es.homs.iter().zip(&ef.homs) {
            for (a, b) in row_s.iter().zip(row_f) {
                assert!(a.iter().all(|x| b.iter().any(|y| y.same_map(x))));
            }
        }
    }
}
