//! Group-engine results checked against independent brute-force oracles.

use std::collections::{BTreeMap, HashSet};

use pfusion::group::{
    abelian_invariants, all_subgroups, center, derived_subgroup, is_power_of, omega, p_part, prime_factors, quotient,
    sylow_subgroup, upper_central_series, FiniteGroup, Permutation, Subgroup,
};
use pfusion::harness::builtin_corpus;
use proptest::prelude::*;

fn perm(degree: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(cycles, degree).unwrap()
}

/// Every subgroup arises from the trivial one by repeatedly adjoining one
/// element, so a breadth-first search over `⟨H, x⟩` finds them all.
fn subgroup_count_by_adjoining(s: &FiniteGroup) -> usize {
    let trivial = Subgroup::trivial(s);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(vec![0]);
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for x in s.elements().filter(|&x| !h.contains(x)) {
            let k = Subgroup::join(s, &h, [x]);
            let key: Vec<u32> = k.members().iter().map(|e| e.index() as u32).collect();
            if seen.insert(key) {
                frontier.push(k);
            }
        }
    }
    seen.len()
}

fn corpus_sylows(max: usize) -> Vec<(String, u64, FiniteGroup)> {
    let mut out = Vec::new();
    for spec in builtin_corpus() {
        let g = spec.build(5000).unwrap();
        for &p in &spec.primes {
            let s = sylow_subgroup(&g, p);
            if s.order() <= max {
                out.push((format!("{}@{p}", spec.name), p, g.subgroup_as_group(&s).0));
            }
        }
    }
    out
}

#[test]
fn subgroup_counts_match_adjoining_oracle() {
    let mut checked = 0;
    for (name, p, s) in corpus_sylows(32) {
        let lattice = all_subgroups(&s, 256).unwrap();
        assert_eq!(lattice.len(), subgroup_count_by_adjoining(&s), "{name}");
        for h in &lattice {
            assert_eq!(s.order() % h.order(), 0);
            assert!(is_power_of(h.order() as u64, p));
        }
        checked += 1;
    }
    assert!(checked >= 20);
}

#[test]
fn known_subgroup_counts() {
    let d8 = FiniteGroup::generate(&[perm(4, "(0 1 2 3)"), perm(4, "(0 2)")], 100).unwrap();
    assert_eq!(all_subgroups(&d8, 256).unwrap().len(), 10);
    let q8 = FiniteGroup::generate(&[perm(8, "(0 2 1 3)(4 6 5 7)"), perm(8, "(0 4 1 5)(2 7 3 6)")], 100).unwrap();
    assert_eq!(all_subgroups(&q8, 256).unwrap().len(), 6);
    assert_eq!(all_subgroups(&FiniteGroup::trivial(), 256).unwrap().len(), 1);
}

/// `|{x : x^(q^k) = 1}|` for each prime `q` and `k`, straight from the group.
fn order_statistics(a: &FiniteGroup) -> BTreeMap<(u64, u32), usize> {
    let mut out = BTreeMap::new();
    for q in prime_factors(a.order() as u64) {
        let mut k = 1;
        while q.pow(k) <= a.order() as u64 {
            out.insert((q, k), a.elements().filter(|&x| a.pow(x, q.pow(k)) == a.identity()).count());
            k += 1;
        }
    }
    out
}

/// The same counts predicted by a list of prime-power invariants:
/// `∏_i q^min(a_i, k)` over the `q`-parts.
fn predicted_statistics(order: usize, invariants: &[u64]) -> BTreeMap<(u64, u32), usize> {
    let mut out = BTreeMap::new();
    for q in prime_factors(order as u64) {
        let exps: Vec<u32> =
            invariants.iter().filter(|&&m| m % q == 0).map(|&m| (m as f64).log(q as f64).round() as u32).collect();
        let mut k = 1;
        while q.pow(k) <= order as u64 {
            out.insert((q, k), exps.iter().map(|&a| q.pow(a.min(k)) as usize).product());
            k += 1;
        }
    }
    out
}

fn disjoint_cycles(lengths: &[usize]) -> (usize, Vec<Permutation>) {
    let degree: usize = lengths.iter().sum();
    let mut start = 0;
    let mut gens = Vec::new();
    for &l in lengths {
        let cycle: Vec<String> = (start..start + l).map(|i| i.to_string()).collect();
        gens.push(perm(degree, &format!("({})", cycle.join(" "))));
        start += l;
    }
    (degree, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn abelian_invariants_match_order_statistics(lengths in prop::collection::vec(prop::sample::select(vec![2usize, 3, 4, 5, 6, 8, 9]), 1..4)) {
        let (degree, gens) = disjoint_cycles(&lengths);
        let a = FiniteGroup::generate_with_degree(degree, &gens, 5000).unwrap();
        let inv = abelian_invariants(&a).unwrap();
        prop_assert_eq!(inv.iter().product::<u64>(), a.order() as u64);
        prop_assert!(inv.iter().all(|&m| prime_factors(m).len() == 1));
        prop_assert_eq!(predicted_statistics(a.order(), &inv), order_statistics(&a));
    }
}

fn random_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn random_group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=6)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(random_perm(d), 1..3)))
        .prop_map(|(d, gens)| FiniteGroup::generate_with_degree(d, &gens, 5000).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn lagrange_and_sylow(g in random_group(), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let seed: Vec<_> = picks.iter().map(|i| pfusion::group::Elem::new(i.index(g.order()))).collect();
        let h = Subgroup::closure(&g, seed);
        prop_assert_eq!(g.order() % h.order(), 0);
        for p in prime_factors(g.order() as u64) {
            let s = sylow_subgroup(&g, p);
            prop_assert_eq!(s.order() as u64, p_part(g.order() as u64, p));
            for x in g.elements().step_by(7) {
                let conj = pfusion::group::conjugate_subgroup(&g, &s, x);
                prop_assert_eq!(conj.order(), s.order());
            }
            let (sg, _) = g.subgroup_as_group(&s);
            let series = upper_central_series(&sg);
            prop_assert_eq!(series.last().unwrap().order(), sg.order());
        }
    }

    #[test]
    fn quotients_are_homomorphisms(g in random_group()) {
        for n in [derived_subgroup(&g), center(&g), Subgroup::whole(&g)] {
            let (q, proj) = quotient(&g, &n).unwrap();
            prop_assert_eq!(q.order() * n.order(), g.order());
            prop_assert!(proj.is_homomorphism(&g, &q));
            prop_assert_eq!(proj.kernel(&g, &q), n);
        }
    }

    #[test]
    fn cycle_notation_round_trips(p in (1usize..12).prop_flat_map(random_perm)) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, p.degree()).unwrap(), p);
    }

    #[test]
    fn omega_is_generated_by_small_elements(g in random_group()) {
        for p in prime_factors(g.order() as u64) {
            let s = sylow_subgroup(&g, p);
            let (sg, _) = g.subgroup_as_group(&s);
            let om = omega(&sg, p, 1);
            prop_assert!(om.is_normal(&sg));
            prop_assert!(sg.elements().filter(|&x| sg.element_order(x) as u64 == p).all(|x| om.contains(x)));
        }
    }
}
