use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteGroup, GroupError};

#[derive(Debug)]
struct SubgroupData {
    bits: FixedBitSet,
    members: Vec<Elem>,
    generators: Vec<Elem>,
}

/// A subgroup of some parent [`FiniteGroup`], held as a membership bitset
/// over the parent's handles together with the sorted member list and a
/// small generating set. Cloning is cheap.
///
/// Equality, hashing and ordering look only at the member set; comparing
/// subgroups of different parents is meaningless.
#[derive(Clone)]
pub struct Subgroup(Arc<SubgroupData>);

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::closure(g, std::iter::empty())
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        let mut bits = FixedBitSet::with_capacity(g.order());
        bits.insert_range(..);
        let members: Vec<Elem> = g.elements().collect();
        let generators = greedy_generators(g, &members);
        Subgroup(Arc::new(SubgroupData { bits, members, generators }))
    }

    /// Smallest subgroup of `g` containing `seed`.
    pub fn closure(g: &FiniteGroup, seed: impl IntoIterator<Item = Elem>) -> Self {
        let mut acc = Accumulator::new(g);
        for x in seed {
            acc.add(x);
        }
        acc.finish()
    }

    /// `⟨h, extra⟩`, reusing the generators of `h`.
    pub fn join(g: &FiniteGroup, h: &Subgroup, extra: impl IntoIterator<Item = Elem>) -> Self {
        let mut acc = Accumulator::from_subgroup(g, h);
        for x in extra {
            acc.add(x);
        }
        acc.finish()
    }

    /// Validates that `members` is closed under the group law before wrapping it.
    pub fn from_members(g: &FiniteGroup, members: impl IntoIterator<Item = Elem>) -> Result<Self, GroupError> {
        let mut bits = FixedBitSet::with_capacity(g.order());
        for m in members {
            if m.index() >= g.order() {
                return Err(GroupError::NotASubgroup("element handle out of range"));
            }
            bits.insert(m.index());
        }
        if !bits.contains(0) {
            return Err(GroupError::NotASubgroup("missing identity"));
        }
        let list: Vec<Elem> = bits.ones().map(Elem::new).collect();
        for &a in &list {
            if !bits.contains(g.inv(a).index()) {
                return Err(GroupError::NotASubgroup("not closed under inverses"));
            }
            for &b in &list {
                if !bits.contains(g.mul(a, b).index()) {
                    return Err(GroupError::NotASubgroup("not closed under products"));
                }
            }
        }
        Ok(Self::from_bits_unchecked(g, bits))
    }

    /// Wraps a member set already known to be closed.
    pub(crate) fn from_bits_unchecked(g: &FiniteGroup, bits: FixedBitSet) -> Self {
        let members: Vec<Elem> = bits.ones().map(Elem::new).collect();
        let generators = greedy_generators(g, &members);
        Subgroup(Arc::new(SubgroupData { bits, members, generators }))
    }

    pub(crate) fn from_closed_members(g: &FiniteGroup, members: impl IntoIterator<Item = Elem>) -> Self {
        let mut bits = FixedBitSet::with_capacity(g.order());
        for m in members {
            bits.insert(m.index());
        }
        Self::from_bits_unchecked(g, bits)
    }

    pub fn order(&self) -> usize {
        self.0.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.0.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.0.generators
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.0.bits
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.0.bits.contains(x.index())
    }

    /// Position of `x` in [`members`](Self::members).
    pub fn position(&self, x: Elem) -> Option<usize> {
        self.0.members.binary_search(&x).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.0.bits.is_subset(&other.0.bits)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn intersection(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut bits = self.0.bits.clone();
        bits.intersect_with(&other.0.bits);
        Self::from_bits_unchecked(g, bits)
    }

    pub fn is_normal_in(&self, g: &FiniteGroup, ambient: &Subgroup) -> bool {
        ambient.generators().iter().all(|&s| self.generators().iter().all(|&x| self.contains(g.conj(s, x))))
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.is_normal_in(g, &Subgroup::whole(g))
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
    }

    /// Every non-identity member has order `p`.
    pub fn is_elementary_abelian(&self, g: &FiniteGroup, p: u64) -> bool {
        self.is_abelian(g) && self.members().iter().all(|&x| g.pow(x, p) == g.identity())
    }

    /// Largest element order within the subgroup.
    pub fn exponent(&self, g: &FiniteGroup) -> usize {
        self.members().iter().map(|&x| g.element_order(x)).max().unwrap_or(1)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.bits == other.0.bits
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size first, then lexicographically by members.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.0.members.cmp(&other.0.members))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup").field("order", &self.order()).field("generators", &self.0.generators).finish()
    }
}

/// Incremental subgroup closure: each new element outside the current
/// subgroup becomes a generator and the member set is re-closed.
pub(crate) struct Accumulator<'g> {
    group: &'g FiniteGroup,
    bits: FixedBitSet,
    members: Vec<Elem>,
    generators: Vec<Elem>,
}

impl<'g> Accumulator<'g> {
    pub(crate) fn new(group: &'g FiniteGroup) -> Self {
        let mut bits = FixedBitSet::with_capacity(group.order());
        bits.insert(0);
        Accumulator { group, bits, members: vec![Elem::IDENTITY], generators: Vec::new() }
    }

    pub(crate) fn from_subgroup(group: &'g FiniteGroup, h: &Subgroup) -> Self {
        Accumulator {
            group,
            bits: h.bits().clone(),
            members: h.members().to_vec(),
            generators: h.generators().to_vec(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.members.len()
    }

    /// Returns whether the subgroup grew.
    pub(crate) fn add(&mut self, x: Elem) -> bool {
        if self.bits.contains(x.index()) {
            return false;
        }
        self.generators.push(x);
        let g = self.group;
        let mut queue = self.members.clone();
        while let Some(a) = queue.pop() {
            for &s in &self.generators {
                let b = g.mul(a, s);
                if !self.bits.put(b.index()) {
                    self.members.push(b);
                    queue.push(b);
                }
            }
        }
        true
    }

    pub(crate) fn finish(mut self) -> Subgroup {
        self.members.sort_unstable();
        Subgroup(Arc::new(SubgroupData { bits: self.bits, members: self.members, generators: self.generators }))
    }
}

fn greedy_generators(g: &FiniteGroup, members: &[Elem]) -> Vec<Elem> {
    // prefer high-order elements so the generating set stays small
    let mut sorted: Vec<Elem> = members.to_vec();
    sorted.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut acc = Accumulator::new(g);
    for x in sorted {
        if acc.len() == members.len() {
            break;
        }
        acc.add(x);
    }
    acc.generators
}
