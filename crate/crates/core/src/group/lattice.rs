use std::collections::HashSet;

use super::{normalizer, prime_factors, FiniteGroup, GroupError, Subgroup};

/// Every subgroup of the p-group `s`, each exactly once, sorted by order and
/// then by members.
///
/// Built layer by layer: each subgroup of order `p^(k+1)` contains a normal
/// subgroup of order `p^k`, so extending every order-`p^k` subgroup `H` by
/// the elements `x ∈ N(H) \ H` with `x^p ∈ H` reaches all of them.
pub fn all_subgroups(s: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>, GroupError> {
    if s.order() > cap {
        return Err(GroupError::SubgroupCapExceeded { order: s.order(), cap });
    }
    if s.order() == 1 {
        return Ok(vec![Subgroup::trivial(s)]);
    }
    let p = match prime_factors(s.order() as u64).as_slice() {
        [p] => *p,
        factors => return Err(GroupError::NotAPGroup { order: s.order(), p: factors[0] }),
    };

    let mut all = vec![Subgroup::trivial(s)];
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let mut next = Vec::new();
        for h in &layer {
            let n = normalizer(s, h);
            let mut extensions: Vec<Subgroup> = Vec::new();
            for &x in n.members() {
                if h.contains(x) || !h.contains(s.pow(x, p)) {
                    continue;
                }
                if extensions.iter().any(|k| k.contains(x)) {
                    continue;
                }
                let k = Subgroup::join(s, h, [x]);
                extensions.push(k.clone());
                if seen.insert(k.clone()) {
                    next.push(k);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort();
    Ok(all)
}

/// For each subgroup in `lattice` (a complete subgroup list of a p-group),
/// the indices of its maximal subgroups, i.e. those of index `p`.
pub fn maximal_subgroups(lattice: &[Subgroup]) -> Vec<Vec<usize>> {
    lattice
        .iter()
        .map(|big| {
            lattice
                .iter()
                .enumerate()
                .filter(|(_, small)| {
                    small.order() < big.order()
                        && big.order() / small.order() == smallest_prime_factor(big.order())
                        && small.is_subgroup_of(big)
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

fn smallest_prime_factor(n: usize) -> usize {
    prime_factors(n as u64).first().copied().unwrap_or(1) as usize
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::super::Elem;
    use super::*;

    /// Brute force: close every subset of the group.
    fn subset_closure_count(g: &FiniteGroup) -> usize {
        let n = g.order();
        assert!(n <= 16);
        let mut found: HashSet<Vec<Elem>> = HashSet::new();
        for mask in 0u32..(1 << n) {
            let seed = (0..n).filter(|i| mask & (1 << i) != 0).map(Elem::new);
            found.insert(Subgroup::closure(g, seed).members().to_vec());
        }
        found.len()
    }

    #[test]
    fn dihedral_and_quaternion_counts() {
        let d = d8();
        assert_eq!(all_subgroups(&d, 256).unwrap().len(), 10);
        let q = q8();
        let subs = all_subgroups(&q, 256).unwrap();
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
        assert_eq!(subset_closure_count(&d), 10);
        assert_eq!(subset_closure_count(&q), 6);
    }

    #[test]
    fn trivial_group() {
        assert_eq!(all_subgroups(&FiniteGroup::trivial(), 256).unwrap().len(), 1);
    }

    #[test]
    fn caps_and_non_p_groups() {
        assert!(matches!(all_subgroups(&d8(), 4), Err(GroupError::SubgroupCapExceeded { .. })));
        assert!(matches!(all_subgroups(&s3(), 256), Err(GroupError::NotAPGroup { .. })));
    }

    #[test]
    fn maximal_subgroups_of_d8() {
        let lattice = all_subgroups(&d8(), 256).unwrap();
        let maxes = maximal_subgroups(&lattice);
        assert_eq!(maxes.last().unwrap().len(), 3);
        assert!(maxes[0].is_empty());
    }
}
