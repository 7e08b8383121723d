use super::subgroup::Accumulator;
use super::{normal_closure, p_part, prime_factors, quotient, Elem, FiniteGroup, GroupError, Subgroup};

/// `[G,G]`, as the normal closure of the commutators of a generating set.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let whole = Subgroup::whole(g);
    let gens = whole.generators();
    let commutators: Vec<Elem> = gens.iter().flat_map(|&a| gens.iter().map(move |&b| g.commutator(a, b))).collect();
    normal_closure(g, &whole, commutators)
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let whole = Subgroup::whole(g);
    super::centralizer(g, &whole)
}

/// `1 = Z_0 < Z_1 < …` up to the hypercenter, where
/// `Z_(i+1) = {x : [x, y] ∈ Z_i for all y}`. The last entry is the whole
/// group exactly when `g` is nilpotent.
pub fn upper_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let whole = Subgroup::whole(g);
    let mut series = vec![Subgroup::trivial(g)];
    loop {
        let current = series.last().unwrap();
        let next = Subgroup::from_closed_members(
            g,
            g.elements().filter(|&x| whole.generators().iter().all(|&y| current.contains(g.commutator(x, y)))),
        );
        if next == *current {
            return series;
        }
        series.push(next);
    }
}

/// `Ω_i(S) = ⟨x : x^(p^i) = 1⟩`.
pub fn omega(s: &FiniteGroup, p: u64, i: u32) -> Subgroup {
    let q = p.pow(i);
    Subgroup::closure(s, s.elements().filter(|&x| s.pow(x, q) == s.identity()))
}

/// `O^p(A)`: the subgroup generated by the elements of order prime to `p`.
pub fn o_p_prime_part(a: &FiniteGroup, p: u64) -> Subgroup {
    let mut acc = Accumulator::new(a);
    for x in a.elements() {
        if !(a.element_order(x) as u64).is_multiple_of(p) {
            acc.add(x);
        }
    }
    acc.finish()
}

/// Invariants of an abelian group as a sorted list of prime powers.
///
/// A cyclic subgroup generated by an element of maximal order is a direct
/// factor, so `A ≅ ⟨x⟩ × A/⟨x⟩`; the factor is split off and the quotient
/// handled recursively.
pub fn abelian_invariants(a: &FiniteGroup) -> Result<Vec<u64>, GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let mut out = Vec::new();
    let mut current = a.clone();
    while current.order() > 1 {
        let x = current.elements().max_by_key(|&x| current.element_order(x)).unwrap();
        let m = current.element_order(x) as u64;
        for q in prime_factors(m) {
            out.push(p_part(m, q));
        }
        let cyclic = Subgroup::closure(&current, [x]);
        current = quotient(&current, &cyclic)?.0;
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;

    #[test]
    fn derived_of_d8_is_center() {
        let g = d8();
        let d = derived_subgroup(&g);
        assert_eq!(d.order(), 2);
        assert_eq!(d, center(&g));
        assert_eq!(derived_subgroup(&s4()).order(), 12);
        assert_eq!(derived_subgroup(&a4()).order(), 4);
    }

    #[test]
    fn upper_central_series_of_d8() {
        let g = d8();
        let orders: Vec<usize> = upper_central_series(&g).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 8]);
        // S3 is not nilpotent: the series stalls at the trivial group
        assert_eq!(upper_central_series(&s3()).len(), 1);
    }

    #[test]
    fn omega_of_q8() {
        let q = q8();
        let o1 = omega(&q, 2, 1);
        assert_eq!(o1.order(), 2);
        assert_eq!(o1, center(&q));
        assert_eq!(omega(&q, 2, 2).order(), 8);
    }

    #[test]
    fn o_p_prime_parts() {
        assert_eq!(o_p_prime_part(&s4(), 2).order(), 12);
        assert_eq!(o_p_prime_part(&s3(), 2).order(), 3);
        assert_eq!(o_p_prime_part(&q8(), 2).order(), 1);
    }

    #[test]
    fn invariants() {
        let c = perm_group(6, &["(0 1 2 3)", "(4 5)"]);
        assert_eq!(abelian_invariants(&c).unwrap(), vec![2, 4]);
        let c6 = perm_group(5, &["(0 1 2)(3 4)"]);
        assert_eq!(abelian_invariants(&c6).unwrap(), vec![2, 3]);
        assert_eq!(abelian_invariants(&FiniteGroup::trivial()).unwrap(), Vec::<u64>::new());
        assert_eq!(abelian_invariants(&s3()), Err(GroupError::NotAbelian));
    }
}
