//! Finite groups by exhaustive enumeration.
//!
//! Every group is stored as a Cayley table over dense element handles
//! `0..order`, with handle `0` the identity. Permutation-generated groups
//! keep their permutations alongside the table for display; quotients and
//! rebased subgroups are table-only. All higher layers work on handles, so
//! the two backings are interchangeable.

mod lattice;
mod map;
mod ops;
mod perm;
mod quotient;
mod series;
mod subgroup;
mod sylow;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use lattice::{all_subgroups, maximal_subgroups};
pub use map::GroupMap;
pub use ops::{centralizer, conjugate_subgroup, normal_closure, normalizer, transporter};
pub use perm::{CycleParseError, NotABijection, Permutation};
pub use quotient::quotient;
pub use series::{abelian_invariants, center, derived_subgroup, o_p_prime_part, omega, upper_central_series};
pub use subgroup::Subgroup;
pub use sylow::{p_core, sylow_subgroup};

/// Default cap on enumerated group order.
pub const DEFAULT_MAX_ORDER: usize = 5000;

/// Default cap on the order of a p-group whose subgroup lattice is enumerated.
pub const DEFAULT_MAX_SUBGROUP_ENUMERATION: usize = 256;

/// Handle of an element inside one [`FiniteGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn new(index: usize) -> Self {
        Elem(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch { index: usize, expected: usize, found: usize },
    #[error("subgroup enumeration requires order at most {cap}, got {order}")]
    SubgroupCapExceeded { order: usize, cap: usize },
    #[error("operation requires a p-group, but the order {order} is not a power of {p}")]
    NotAPGroup { order: usize, p: u64 },
    #[error("operation requires an abelian group")]
    NotAbelian,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(&'static str),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(&'static str),
}

#[derive(Debug)]
enum Backing {
    Permutations { degree: usize, perms: Vec<Permutation> },
    Table,
}

#[derive(Debug)]
struct GroupData {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    backing: Backing,
}

/// An enumerated finite group. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct FiniteGroup(Arc<GroupData>);

impl FiniteGroup {
    /// Closes the given permutations under composition. The degree is taken
    /// from the first generator, or is zero when there are none.
    pub fn generate(generators: &[Permutation], max_order: usize) -> Result<Self, GroupError> {
        let degree = generators.first().map_or(0, Permutation::degree);
        Self::generate_with_degree(degree, generators, max_order)
    }

    pub fn generate_with_degree(
        degree: usize,
        generators: &[Permutation],
        max_order: usize,
    ) -> Result<Self, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { index, expected: degree, found: g.degree() });
            }
        }
        let identity = Permutation::identity(degree);
        let mut perms = vec![identity.clone()];
        let mut index: HashMap<Permutation, u32> = HashMap::from([(identity, 0)]);
        let mut cursor = 0;
        while cursor < perms.len() {
            for g in generators {
                let next = perms[cursor].compose(g);
                if !index.contains_key(&next) {
                    if perms.len() >= max_order {
                        return Err(GroupError::OrderCapExceeded { cap: max_order });
                    }
                    index.insert(next.clone(), perms.len() as u32);
                    perms.push(next);
                }
            }
            cursor += 1;
        }

        let order = perms.len();
        let mut table = vec![0u32; order * order];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                table[a * order + b] = index[&pa.compose(pb)];
            }
        }
        let inverses = perms.iter().map(|p| index[&p.inverse()]).collect();
        Ok(FiniteGroup(Arc::new(GroupData {
            order,
            table,
            inverses,
            backing: Backing::Permutations { degree, perms },
        })))
    }

    pub fn trivial() -> Self {
        Self::from_table_unchecked(vec![0])
    }

    /// Builds a group from a row-major Cayley table whose handle `0` is the
    /// identity. The table is validated: Latin square, two-sided identity,
    /// and associativity (exhaustive up to order 64, sampled beyond).
    pub fn from_cayley_table(table: Vec<u32>) -> Result<Self, GroupError> {
        let n = (table.len() as f64).sqrt().round() as usize;
        if n == 0 || n * n != table.len() {
            return Err(GroupError::InvalidTable("table is not square"));
        }
        for a in 0..n {
            if table[a] as usize != a || table[a * n] as usize != a {
                return Err(GroupError::InvalidTable("handle 0 is not the identity"));
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                let r = table[a * n + b] as usize;
                let c = table[b * n + a] as usize;
                if r >= n || c >= n || row[r] || col[c] {
                    return Err(GroupError::InvalidTable("not a Latin square"));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let step = if n <= 64 { 1 } else { n / 16 + 1 };
        for a in (0..n).step_by(step) {
            for b in 0..n {
                for c in (0..n).step_by(step) {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(GroupError::InvalidTable("not associative"));
                    }
                }
            }
        }
        Ok(Self::from_table_unchecked(table))
    }

    pub(crate) fn from_table_unchecked(table: Vec<u32>) -> Self {
        let order = (table.len() as f64).sqrt().round() as usize;
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverses[a] = b as u32;
                    break;
                }
            }
        }
        FiniteGroup(Arc::new(GroupData { order, table, inverses, backing: Backing::Table }))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.order).map(Elem::new)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.table[a.index() * self.0.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.0.inverses[a.index()])
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::IDENTITY;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != Elem::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.commutes(Elem::new(a), Elem::new(b))))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn permutation(&self, a: Elem) -> Option<&Permutation> {
        match &self.0.backing {
            Backing::Permutations { perms, .. } => perms.get(a.index()),
            Backing::Table => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match &self.0.backing {
            Backing::Permutations { degree, .. } => Some(*degree),
            Backing::Table => None,
        }
    }

    pub fn find_permutation(&self, p: &Permutation) -> Option<Elem> {
        match &self.0.backing {
            Backing::Permutations { perms, .. } => perms.iter().position(|q| q == p).map(Elem::new),
            Backing::Table => None,
        }
    }

    /// Cycle notation for permutation-backed groups, `#i` otherwise.
    pub fn label(&self, a: Elem) -> String {
        match self.permutation(a) {
            Some(p) => p.to_string(),
            None => a.to_string(),
        }
    }

    #[cfg(test)]
    pub(crate) fn table(&self) -> &[u32] {
        &self.0.table
    }

    /// Rebases a subgroup as a group of its own. Handles follow the sorted
    /// member order, so the identity stays at `0` and rebasing the whole
    /// group is the identity on handles. Returns the group and the embedding
    /// `new handle -> old handle`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<Elem>) {
        let members = h.members().to_vec();
        let n = members.len();
        let mut local = vec![u32::MAX; self.order()];
        for (i, m) in members.iter().enumerate() {
            local[m.index()] = i as u32;
        }
        let mut table = vec![0u32; n * n];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table[i * n + j] = local[self.mul(a, b).index()];
            }
        }
        let inverses = members.iter().map(|&a| local[self.inv(a).index()]).collect();
        let backing = match &self.0.backing {
            Backing::Permutations { degree, perms } => Backing::Permutations {
                degree: *degree,
                perms: members.iter().map(|m| perms[m.index()].clone()).collect(),
            },
            Backing::Table => Backing::Table,
        };
        (FiniteGroup(Arc::new(GroupData { order: n, table, inverses, backing })), members)
    }

    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    if n == 0 || p < 2 {
        return false;
    }
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}


#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;

    #[test]
    fn generates_expected_orders() {
        assert_eq!(s3().order(), 6);
        assert_eq!(s4().order(), 24);
        assert_eq!(FiniteGroup::generate(&[], DEFAULT_MAX_ORDER).unwrap().order(), 1);
        assert_eq!(q8().order(), 8);
        assert_eq!(sl23().order(), 24);
    }

    #[test]
    fn group_axioms_hold_on_tables() {
        for g in [s3(), s4(), q8()] {
            let table = g.table().to_vec();
            assert!(FiniteGroup::from_cayley_table(table).is_ok());
            for a in g.elements() {
                assert_eq!(g.mul(a, g.inv(a)), g.identity());
                assert_eq!(g.mul(g.identity(), a), a);
            }
        }
    }

    #[test]
    fn generation_errors() {
        let big = Permutation::parse_cycles("(0 1 2 3 4 5 6)", 7).unwrap();
        let t = Permutation::parse_cycles("(0 1)", 7).unwrap();
        assert_eq!(
            FiniteGroup::generate(&[big.clone(), t], 100).unwrap_err(),
            GroupError::OrderCapExceeded { cap: 100 }
        );
        let small = Permutation::parse_cycles("(0 1)", 3).unwrap();
        assert!(matches!(
            FiniteGroup::generate(&[big, small], 100),
            Err(GroupError::DegreeMismatch { index: 1, expected: 7, found: 3 })
        ));
    }

    #[test]
    fn invalid_tables_are_rejected() {
        assert!(FiniteGroup::from_cayley_table(vec![0, 1, 1, 1]).is_err());
        assert!(FiniteGroup::from_cayley_table(vec![0, 1, 2]).is_err());
        assert!(FiniteGroup::from_cayley_table(vec![0, 1, 1, 0]).is_ok());
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_prime(7) && !is_prime(4) && !is_prime(1));
        assert_eq!(prime_factors(168), vec![2, 3, 7]);
        assert!(is_power_of(27, 3) && is_power_of(1, 3) && !is_power_of(12, 2));
        assert_eq!(q8().exponent(), 4);
    }

    #[test]
    fn rebasing_whole_group_is_identity_on_handles() {
        let g = s4();
        let (h, emb) = g.subgroup_as_group(&Subgroup::whole(&g));
        assert_eq!(h.table(), g.table());
        assert!(emb.iter().enumerate().all(|(i, e)| e.index() == i));
    }
}
