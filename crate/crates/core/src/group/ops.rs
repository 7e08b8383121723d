use super::subgroup::Accumulator;
use super::{Elem, FiniteGroup, Subgroup};

/// `C_G(P) = {g : gx = xg for all x ∈ P}`.
pub fn centralizer(g: &FiniteGroup, p: &Subgroup) -> Subgroup {
    let gens = p.generators();
    Subgroup::from_closed_members(g, g.elements().filter(|&x| gens.iter().all(|&y| g.commutes(x, y))))
}

/// `N_G(P) = {g : gPg⁻¹ = P}`.
pub fn normalizer(g: &FiniteGroup, p: &Subgroup) -> Subgroup {
    Subgroup::from_closed_members(g, transporter(g, p, p))
}

/// `N_G(P, Q) = {g : gPg⁻¹ ≤ Q}`.
pub fn transporter(g: &FiniteGroup, p: &Subgroup, q: &Subgroup) -> Vec<Elem> {
    if p.order() > q.order() {
        return Vec::new();
    }
    let gens = p.generators();
    g.elements().filter(|&x| gens.iter().all(|&y| q.contains(g.conj(x, y)))).collect()
}

/// `xPx⁻¹`.
pub fn conjugate_subgroup(g: &FiniteGroup, p: &Subgroup, x: Elem) -> Subgroup {
    Subgroup::from_closed_members(g, p.members().iter().map(|&y| g.conj(x, y)))
}

/// Smallest subgroup of `g` normalized by `ambient` and containing `seed`.
pub fn normal_closure(g: &FiniteGroup, ambient: &Subgroup, seed: impl IntoIterator<Item = Elem>) -> Subgroup {
    let mut acc = Accumulator::new(g);
    let mut pending: Vec<Elem> = seed.into_iter().collect();
    while let Some(x) = pending.pop() {
        if acc.add(x) {
            for &s in ambient.generators() {
                pending.push(g.conj(s, x));
            }
        }
    }
    // conjugates of generators lie inside; the subgroup is normalized
    acc.finish()
}
