//! Automorphism groups, F-conjugacy classes and the structural predicates
//! on subgroups of `S`.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::group::{is_power_of, p_core, quotient, Elem, FiniteGroup, Subgroup};

use super::{FMorphism, FusionError, FusionSystem};

/// `Aut_F(P)` realized as an enumerated group: handle `i` is `maps()[i]`,
/// with the identity first, and the product `i·j` is `maps[i] ∘ maps[j]`.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    subgroup: Subgroup,
    maps: Vec<FMorphism>,
    group: FiniteGroup,
    inner: Subgroup,
}

impl AutomorphismGroup {
    /// `maps` must be a group of automorphisms of `p` under composition.
    pub(crate) fn from_maps(s: &FiniteGroup, p: &Subgroup, mut maps: Vec<FMorphism>) -> Self {
        let id = maps.iter().position(FMorphism::is_identity).expect("identity automorphism");
        maps.swap(0, id);
        maps[1..].sort_by(|a, b| a.images().cmp(b.images()));
        let index: HashMap<&[Elem], u32> = maps.iter().enumerate().map(|(i, f)| (f.images(), i as u32)).collect();
        let n = maps.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in maps.iter().enumerate() {
            for (j, b) in maps.iter().enumerate() {
                table[i * n + j] = index[a.after(b).images()];
            }
        }
        let group = FiniteGroup::from_table_unchecked(table);
        let inner: BTreeSet<Elem> = p
            .members()
            .iter()
            .map(|&x| {
                let images: Vec<Elem> = p.members().iter().map(|&y| s.conj(x, y)).collect();
                Elem::new(index[images.as_slice()] as usize)
            })
            .collect();
        let inner = Subgroup::from_closed_members(&group, inner);
        AutomorphismGroup { subgroup: p.clone(), maps, group, inner }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[FMorphism] {
        &self.maps
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn map(&self, e: Elem) -> &FMorphism {
        &self.maps[e.index()]
    }

    /// `Inn(P)` as a normal subgroup of [`group`](Self::group).
    pub fn inner(&self) -> &Subgroup {
        &self.inner
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }

    /// A non-identity automorphism of order prime to `p`, if any.
    pub fn p_prime_element(&self, p: u64) -> Option<&FMorphism> {
        let g = &self.group;
        g.elements().find_map(|x| {
            let mut k = g.element_order(x) as u64;
            while k.is_multiple_of(p) {
                k /= p;
            }
            if k == 1 {
                return None;
            }
            // x^(p-part) has order exactly k
            let y = g.pow(x, g.element_order(x) as u64 / k);
            Some(&self.maps[y.index()])
        })
    }

    /// `Out_F(P) = Aut_F(P)/Inn(P)`.
    pub fn outer(&self) -> FiniteGroup {
        quotient(&self.group, &self.inner).expect("Inn(P) is normal in Aut(P)").0
    }
}

/// `Aut_F(P)`.
pub fn aut_f(f: &FusionSystem, p: &Subgroup) -> AutomorphismGroup {
    AutomorphismGroup::from_maps(f.sylow(), p, f.hom_set(p, p))
}

/// `Out_F(P)`.
pub fn out_f(f: &FusionSystem, p: &Subgroup) -> FiniteGroup {
    aut_f(f, p).outer()
}

/// The distinct images of `P` under `Hom_F(P, S)`, sorted.
pub fn f_class_subgroup(f: &FusionSystem, p: &Subgroup) -> Vec<Subgroup> {
    let s = f.sylow();
    let class: BTreeSet<Subgroup> = f.hom_to_sylow(p).iter().map(|h| h.image(s)).collect();
    class.into_iter().collect()
}

/// `{φ(x) : φ ∈ Hom_F(⟨x⟩, S)}`, sorted.
pub fn f_class_element(f: &FusionSystem, x: Elem) -> Vec<Elem> {
    let cyclic = f.subgroup([x]);
    let class: BTreeSet<Elem> = f.hom_to_sylow(&cyclic).iter().map(|h| h.apply(x).unwrap()).collect();
    class.into_iter().collect()
}

/// The orbit of a tuple of pairwise commuting elements under
/// `Hom_F(⟨x_1, …, x_n⟩, S)`, sorted.
pub fn f_class_tuple(f: &FusionSystem, tuple: &[Elem]) -> Result<Vec<Vec<Elem>>, FusionError> {
    check_commuting(f.sylow(), tuple)?;
    let h = f.subgroup(tuple.iter().copied());
    let orbit: BTreeSet<Vec<Elem>> =
        f.hom_to_sylow(&h).iter().map(|phi| tuple.iter().map(|&x| phi.apply(x).unwrap()).collect()).collect();
    Ok(orbit.into_iter().collect())
}

/// The orbit of a tuple under simultaneous conjugation by `S`, sorted.
pub fn s_class_tuple(f: &FusionSystem, tuple: &[Elem]) -> Vec<Vec<Elem>> {
    let s = f.sylow();
    let orbit: BTreeSet<Vec<Elem>> = s.elements().map(|g| tuple.iter().map(|&x| s.conj(g, x)).collect()).collect();
    orbit.into_iter().collect()
}

fn check_commuting(s: &FiniteGroup, tuple: &[Elem]) -> Result<(), FusionError> {
    for (i, &a) in tuple.iter().enumerate() {
        for &b in &tuple[i + 1..] {
            if !s.commutes(a, b) {
                return Err(FusionError::NonCommutingTuple);
            }
        }
    }
    Ok(())
}

/// `|N_S(P)| ≥ |N_S(P')|` for every `P'` F-conjugate to `P`.
pub fn is_fully_normalized(f: &FusionSystem, p: &Subgroup) -> bool {
    let own = f.normalizer_in_s(p).order();
    f_class_subgroup(f, p).iter().all(|q| f.normalizer_in_s(q).order() <= own)
}

/// `|C_S(P)| ≥ |C_S(P')|` for every `P'` F-conjugate to `P`.
pub fn is_fully_centralized(f: &FusionSystem, p: &Subgroup) -> bool {
    let own = f.centralizer_in_s(p).order();
    f_class_subgroup(f, p).iter().all(|q| f.centralizer_in_s(q).order() <= own)
}

/// `C_S(P') ≤ P'` for every `P'` F-conjugate to `P`.
pub fn is_centric(f: &FusionSystem, p: &Subgroup) -> bool {
    f_class_subgroup(f, p).iter().all(|q| f.centralizer_in_s(q).is_subgroup_of(q))
}

/// `O_p(Out_F(P)) = 1`.
pub fn is_radical(f: &FusionSystem, p: &Subgroup) -> bool {
    p_core(&out_f(f, p), f.prime()).is_trivial()
}

/// No other subgroup of `S` is F-conjugate to `P`.
pub fn is_weakly_closed(f: &FusionSystem, p: &Subgroup) -> bool {
    f_class_subgroup(f, p).len() == 1
}

/// `N_φ = {g ∈ N_S(P) : φ c_g φ⁻¹ ∈ Aut_S(φP)}` for `φ ∈ Hom_F(P, S)`.
pub fn n_phi(f: &FusionSystem, phi: &FMorphism) -> Subgroup {
    let s = f.sylow();
    let p = phi.domain();
    let image = phi.image(s);
    let inverse = phi.inverse(s);
    let aut_s: HashSet<Vec<Elem>> = f.aut_s(&image).into_iter().map(|a| a.images().to_vec()).collect();
    let normalizer = f.normalizer_in_s(p);
    let members = normalizer.members().iter().copied().filter(|&g| {
        let twisted: Vec<Elem> =
            image.members().iter().map(|&y| phi.apply(s.conj(g, inverse.apply(y).unwrap())).unwrap()).collect();
        aut_s.contains(&twisted)
    });
    Subgroup::from_closed_members(s, members.collect::<Vec<_>>())
}
