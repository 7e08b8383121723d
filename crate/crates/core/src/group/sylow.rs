use super::{conjugate_subgroup, normalizer, p_part, FiniteGroup, Subgroup};

/// A Sylow `p`-subgroup of `g`, grown one factor of `p` at a time: given a
/// `p`-subgroup `P` below the full `p`-part, `N_G(P)/P` has an element of
/// order `p`, and adjoining a preimage multiplies `|P|` by `p`.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = p_part(g.order() as u64, p) as usize;
    let mut current = Subgroup::trivial(g);
    while current.order() < target {
        let n = normalizer(g, &current);
        let step = n
            .members()
            .iter()
            .copied()
            .find(|&x| !current.contains(x) && current.contains(g.pow(x, p)))
            .expect("N_G(P)/P has an element of order p below the Sylow order");
        current = Subgroup::join(g, &current, [step]);
    }
    current
}

/// `O_p(G)`: the largest normal `p`-subgroup, as the intersection of all
/// conjugates of one Sylow `p`-subgroup.
pub fn p_core(g: &FiniteGroup, p: u64) -> Subgroup {
    let sylow = sylow_subgroup(g, p);
    let mut core = sylow.clone();
    for x in g.elements() {
        if core.is_trivial() {
            break;
        }
        core = core.intersection(g, &conjugate_subgroup(g, &sylow, x));
    }
    core
}
