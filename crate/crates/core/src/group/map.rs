use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteGroup, GroupError, Subgroup};

/// A map from a subgroup of one group into a subgroup of another, stored as
/// a total table aligned with `domain.members()`.
///
/// Equality is extensional: same domain, codomain and images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupMap {
    domain: Subgroup,
    codomain: Subgroup,
    images: Vec<Elem>,
}

impl GroupMap {
    /// Checks that the images lie in `codomain` and respect products.
    pub fn new(
        source: &FiniteGroup,
        domain: Subgroup,
        target: &FiniteGroup,
        codomain: Subgroup,
        images: Vec<Elem>,
    ) -> Result<Self, GroupError> {
        if images.len() != domain.order() {
            return Err(GroupError::NotASubgroup("image table length differs from domain order"));
        }
        if images.iter().any(|&y| y.index() >= target.order() || !codomain.contains(y)) {
            return Err(GroupError::NotASubgroup("image outside the codomain"));
        }
        let map = GroupMap { domain, codomain, images };
        if !map.is_homomorphism(source, target) {
            return Err(GroupError::NotASubgroup("map does not respect products"));
        }
        Ok(map)
    }

    pub(crate) fn new_unchecked(
        _source: &FiniteGroup,
        domain: Subgroup,
        _target: &FiniteGroup,
        codomain: Subgroup,
        images: Vec<Elem>,
    ) -> Self {
        debug_assert_eq!(images.len(), domain.order());
        GroupMap { domain, codomain, images }
    }

    pub(crate) fn from_parts(domain: Subgroup, codomain: Subgroup, images: Vec<Elem>) -> Self {
        debug_assert_eq!(images.len(), domain.order());
        GroupMap { domain, codomain, images }
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain(&self) -> &Subgroup {
        &self.codomain
    }

    /// Images in the order of `domain().members()`.
    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn apply(&self, x: Elem) -> Option<Elem> {
        self.domain.position(x).map(|i| self.images[i])
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        let members = self.domain.members();
        members.iter().zip(&self.images).all(|(&a, &fa)| {
            members.iter().zip(&self.images).all(|(&b, &fb)| self.apply(source.mul(a, b)) == Some(target.mul(fa, fb)))
        })
    }

    pub fn is_injective(&self) -> bool {
        let distinct: HashSet<Elem> = self.images.iter().copied().collect();
        distinct.len() == self.images.len()
    }

    pub fn kernel(&self, source: &FiniteGroup, target: &FiniteGroup) -> Subgroup {
        let id = target.identity();
        Subgroup::from_closed_members(
            source,
            self.domain.members().iter().zip(&self.images).filter(|(_, &y)| y == id).map(|(&x, _)| x),
        )
    }

    /// Image of the domain, as a subgroup of the target group.
    pub fn image(&self, target: &FiniteGroup) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(target.order());
        for y in &self.images {
            bits.insert(y.index());
        }
        Subgroup::from_bits_unchecked(target, bits)
    }
}
