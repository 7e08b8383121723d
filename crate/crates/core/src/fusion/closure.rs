//! Fixpoint closure of a set of morphisms into a fusion system.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::group::{maximal_subgroups, Elem, FiniteGroup, Subgroup};

use super::{FMorphism, FusionError, HomTable};

struct Closure<'a> {
    s: &'a FiniteGroup,
    lattice: &'a [Subgroup],
    index: HashMap<&'a FixedBitSet, usize>,
    maps: Vec<Vec<Vec<Elem>>>,
    seen: Vec<HashSet<Vec<Elem>>>,
    image_of: Vec<Vec<usize>>,
    by_image: Vec<Vec<(usize, usize)>>,
    queue: VecDeque<(usize, usize)>,
    total: usize,
    budget: usize,
}

impl<'a> Closure<'a> {
    fn insert(&mut self, dom: usize, images: Vec<Elem>) -> Result<(), FusionError> {
        if self.seen[dom].contains(&images) {
            return Ok(());
        }
        self.total += 1;
        if self.total > self.budget {
            return Err(FusionError::MorphismBudgetExceeded { budget: self.budget });
        }
        let mut bits = FixedBitSet::with_capacity(self.s.order());
        for y in &images {
            bits.insert(y.index());
        }
        let img = *self
            .index
            .get(&bits)
            .ok_or_else(|| FusionError::InvalidMorphism("image of a generating morphism is not a subgroup".into()))?;
        self.seen[dom].insert(images.clone());
        let k = self.maps[dom].len();
        self.maps[dom].push(images);
        self.image_of[dom].push(img);
        self.by_image[img].push((dom, k));
        self.queue.push_back((dom, k));
        Ok(())
    }

    fn pos(&self, sub: usize, x: Elem) -> usize {
        self.lattice[sub].position(x).expect("element of the subgroup")
    }
}

/// Closes `generators` together with all conjugations by `S` under
/// restriction, composition and inversion. `lattice` must list every
/// subgroup of `s`. Returns `Hom_F(P, S)` for every `P`.
pub(super) fn close(
    s: &FiniteGroup,
    lattice: &[Subgroup],
    generators: &[FMorphism],
    budget: usize,
) -> Result<HomTable, FusionError> {
    let n = lattice.len();
    let mut st = Closure {
        s,
        lattice,
        index: lattice.iter().enumerate().map(|(i, h)| (h.bits(), i)).collect(),
        maps: vec![Vec::new(); n],
        seen: vec![HashSet::new(); n],
        image_of: vec![Vec::new(); n],
        by_image: vec![Vec::new(); n],
        queue: VecDeque::new(),
        total: 0,
        budget,
    };
    let maximal = maximal_subgroups(lattice);

    for (i, p) in lattice.iter().enumerate() {
        for x in s.elements() {
            st.insert(i, p.members().iter().map(|&y| s.conj(x, y)).collect())?;
        }
    }
    for g in generators {
        let dom = *st
            .index
            .get(g.domain().bits())
            .ok_or_else(|| FusionError::InvalidMorphism("domain is not a subgroup of S".into()))?;
        st.insert(dom, g.images().to_vec())?;
    }

    while let Some((d, k)) = st.queue.pop_front() {
        let phi = st.maps[d][k].clone();
        let q = st.image_of[d][k];

        // inverse isomorphism φ(P) → P
        let mut inverse = vec![Elem::IDENTITY; lattice[q].order()];
        for (i, &y) in phi.iter().enumerate() {
            inverse[st.pos(q, y)] = lattice[d].members()[i];
        }
        st.insert(q, inverse)?;

        for &r in &maximal[d] {
            let restricted = lattice[r].members().iter().map(|&m| phi[st.pos(d, m)]).collect();
            st.insert(r, restricted)?;
        }

        // ψ ∘ φ for ψ out of φ(P)
        let after: Vec<Vec<Elem>> = st.maps[q].clone();
        for psi in after {
            let composed = phi.iter().map(|&y| psi[st.pos(q, y)]).collect();
            st.insert(d, composed)?;
        }

        // φ ∘ χ for χ landing exactly on P
        let before: Vec<(usize, usize)> = st.by_image[d].clone();
        for (r, j) in before {
            let composed = st.maps[r][j].iter().map(|&y| phi[st.pos(d, y)]).collect();
            st.insert(r, composed)?;
        }
    }

    let whole = Subgroup::whole(s);
    let mut table = HomTable::with_capacity(n);
    for (i, p) in lattice.iter().enumerate() {
        let mut maps = std::mem::take(&mut st.maps[i]);
        maps.sort();
        let morphisms: Arc<[FMorphism]> =
            maps.into_iter().map(|images| FMorphism::from_parts(p.clone(), whole.clone(), images)).collect();
        table.insert(p.bits().clone(), morphisms);
    }
    Ok(table)
}
