//! Fusion-free ground truth for group-induced systems.
//!
//! Nothing here touches [`crate::fusion`]; the answers come from direct
//! sweeps over the ambient group.

use std::collections::BTreeSet;

use crate::group::{derived_subgroup, Elem, FiniteGroup, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub p_nilpotent: bool,
    /// Order of `K = ⟨x ∈ G : p ∤ |x|⟩`.
    pub p_prime_subgroup_order: usize,
    /// `K` itself when it is a normal p-complement.
    pub complement: Option<Subgroup>,
}

/// `G` is p-nilpotent exactly when `K = ⟨p'-elements⟩` has order prime to
/// `p`. `K` is normal because its generating set is closed under
/// conjugation, and any normal p-complement contains every p'-element, so
/// `K` is the complement whenever one exists.
pub fn is_p_nilpotent(g: &FiniteGroup, p: u64) -> OracleVerdict {
    let k = Subgroup::closure(g, g.elements().filter(|&x| !(g.element_order(x) as u64).is_multiple_of(p)));
    let p_nilpotent = !(k.order() as u64).is_multiple_of(p);
    OracleVerdict { p_nilpotent, p_prime_subgroup_order: k.order(), complement: p_nilpotent.then_some(k) }
}

/// `S ∩ [G,G]`, which equals `Foc(F_S(G))` by the focal subgroup theorem.
pub fn focal_via_derived(g: &FiniteGroup, s: &Subgroup) -> Subgroup {
    s.intersection(g, &derived_subgroup(g))
}

fn conjugation_maps(
    g: &FiniteGroup,
    by: impl Iterator<Item = Elem>,
    p: &Subgroup,
    q: &Subgroup,
) -> BTreeSet<Vec<Elem>> {
    by.filter_map(|x| {
        let images: Vec<Elem> = p.members().iter().map(|&y| g.conj(x, y)).collect();
        images.iter().all(|&y| q.contains(y)).then_some(images)
    })
    .collect()
}

/// Whether `G` and `S` induce the same conjugation maps `P → Q`.
pub fn hom_equality_bruteforce(g: &FiniteGroup, s: &Subgroup, p: &Subgroup, q: &Subgroup) -> bool {
    conjugation_maps(g, g.elements(), p, q) == conjugation_maps(g, s.members().iter().copied(), p, q)
}
