use std::fmt;

use crate::group::{Elem, FiniteGroup, GroupMap, Subgroup};

use super::FusionError;

/// An injective homomorphism between two subgroups of the Sylow group `S`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FMorphism(GroupMap);

impl FMorphism {
    /// Validates that `images` (aligned with `domain.members()`) define an
    /// injective homomorphism into `codomain`.
    pub fn new(s: &FiniteGroup, domain: Subgroup, codomain: Subgroup, images: Vec<Elem>) -> Result<Self, FusionError> {
        let map =
            GroupMap::new(s, domain, s, codomain, images).map_err(|e| FusionError::InvalidMorphism(e.to_string()))?;
        if !map.is_injective() {
            return Err(FusionError::InvalidMorphism("map is not injective".into()));
        }
        Ok(FMorphism(map))
    }

    /// Builds a morphism from images of `domain.generators()`, extending
    /// multiplicatively.
    pub fn from_generator_images(
        s: &FiniteGroup,
        domain: Subgroup,
        codomain: Subgroup,
        generator_images: &[Elem],
    ) -> Result<Self, FusionError> {
        let gens = domain.generators().to_vec();
        Self::extend(s, domain, codomain, &gens, generator_images)
    }

    /// Like [`from_generator_images`](Self::from_generator_images) for an
    /// arbitrary generating list `gens` of `domain`.
    pub fn extend(
        s: &FiniteGroup,
        domain: Subgroup,
        codomain: Subgroup,
        gens: &[Elem],
        generator_images: &[Elem],
    ) -> Result<Self, FusionError> {
        if gens.len() != generator_images.len() {
            return Err(FusionError::InvalidMorphism(format!(
                "expected {} generator images, got {}",
                gens.len(),
                generator_images.len()
            )));
        }
        // breadth-first over words in the generators
        let mut images: Vec<Option<Elem>> = vec![None; domain.order()];
        images[0] = Some(s.identity());
        let mut queue = vec![(s.identity(), s.identity())];
        while let Some((x, fx)) = queue.pop() {
            for (&g, &fg) in gens.iter().zip(generator_images) {
                let y = s.mul(x, g);
                let fy = s.mul(fx, fg);
                let i = domain
                    .position(y)
                    .ok_or_else(|| FusionError::InvalidMorphism("generator outside the domain".into()))?;
                match images[i] {
                    None => {
                        images[i] = Some(fy);
                        queue.push((y, fy));
                    }
                    Some(prev) if prev != fy => {
                        return Err(FusionError::InvalidMorphism(
                            "generator images do not extend to a homomorphism".into(),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
        let images = images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| FusionError::InvalidMorphism("generators do not generate the domain".into()))?;
        Self::new(s, domain, codomain, images)
    }

    pub(crate) fn from_parts(domain: Subgroup, codomain: Subgroup, images: Vec<Elem>) -> Self {
        FMorphism(GroupMap::from_parts(domain, codomain, images))
    }

    /// `c_x` restricted to `domain`, `y ↦ x y x⁻¹`.
    pub fn conjugation(s: &FiniteGroup, domain: &Subgroup, codomain: &Subgroup, x: Elem) -> Self {
        let images = domain.members().iter().map(|&y| s.conj(x, y)).collect();
        Self::from_parts(domain.clone(), codomain.clone(), images)
    }

    pub fn identity(domain: &Subgroup) -> Self {
        Self::from_parts(domain.clone(), domain.clone(), domain.members().to_vec())
    }

    pub fn inclusion(domain: &Subgroup, codomain: &Subgroup) -> Self {
        Self::from_parts(domain.clone(), codomain.clone(), domain.members().to_vec())
    }

    pub fn domain(&self) -> &Subgroup {
        self.0.domain()
    }

    pub fn codomain(&self) -> &Subgroup {
        self.0.codomain()
    }

    pub fn images(&self) -> &[Elem] {
        self.0.images()
    }

    pub fn apply(&self, x: Elem) -> Option<Elem> {
        self.0.apply(x)
    }

    pub fn as_group_map(&self) -> &GroupMap {
        &self.0
    }

    pub fn image(&self, s: &FiniteGroup) -> Subgroup {
        self.0.image(s)
    }

    pub fn is_identity(&self) -> bool {
        self.domain().members() == self.images()
    }

    /// Maps agree pointwise on the same domain; codomains are ignored.
    pub fn same_map(&self, other: &FMorphism) -> bool {
        self.domain() == other.domain() && self.images() == other.images()
    }

    /// `self ∘ first`. The image of `first` must lie in the domain of `self`.
    pub fn after(&self, first: &FMorphism) -> FMorphism {
        let images = first.images().iter().map(|&y| self.apply(y).expect("composable morphisms")).collect();
        Self::from_parts(first.domain().clone(), self.codomain().clone(), images)
    }

    pub fn restrict(&self, sub: &Subgroup) -> FMorphism {
        let images =
            sub.members().iter().map(|&y| self.apply(y).expect("restriction to a subgroup of the domain")).collect();
        Self::from_parts(sub.clone(), self.codomain().clone(), images)
    }

    pub fn with_codomain(&self, codomain: &Subgroup) -> FMorphism {
        Self::from_parts(self.domain().clone(), codomain.clone(), self.images().to_vec())
    }

    /// The inverse isomorphism from the image back onto the domain.
    pub fn inverse(&self, s: &FiniteGroup) -> FMorphism {
        let image = self.image(s);
        let mut images = vec![Elem::IDENTITY; image.order()];
        for (&x, &y) in self.domain().members().iter().zip(self.images()) {
            images[image.position(y).expect("image member")] = x;
        }
        Self::from_parts(image, self.domain().clone(), images)
    }

    /// Order as an element of `Aut(P)`; only meaningful for automorphisms.
    pub fn automorphism_order(&self) -> usize {
        let mut k = 1;
        let mut power = self.clone();
        while !power.is_identity() {
            power = self.after(&power);
            k += 1;
        }
        k
    }

    pub fn power(&self, k: usize) -> FMorphism {
        let mut acc = FMorphism::identity(self.domain());
        for _ in 0..k {
            acc = self.after(&acc);
        }
        acc.with_codomain(self.codomain())
    }
}

impl fmt::Debug for FMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> =
            self.domain().generators().iter().map(|&g| format!("{}->{}", g, self.apply(g).unwrap())).collect();
        write!(f, "FMorphism[{}]", pairs.join(", "))
    }
}
