//! Fusion systems over a finite p-group `S`.
//!
//! A [`FusionSystem`] answers hom-set queries `Hom_F(P, Q)` for subgroups
//! `P, Q ≤ S`. Group-induced systems compute them on demand from
//! transporters in the ambient group; generated systems and the normalizer
//! and centralizer subsystems hold a precomputed table over the whole
//! subgroup lattice.
//!
//! Morphisms are compared extensionally. `Hom_F(P, S)` is the primary
//! query; `Hom_F(P, Q)` is the subset whose images land in `Q`.

mod alperin;
mod closure;
mod focal;
mod morphism;
mod quillen;
mod saturation;
mod structure;
mod subsystem;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::group::{
    all_subgroups, centralizer, is_power_of, is_prime, normalizer, p_part, sylow_subgroup, transporter, Elem,
    FiniteGroup, GroupError, Subgroup, DEFAULT_MAX_SUBGROUP_ENUMERATION,
};

pub use alperin::{alperin_generators, alperin_subgroups, verify_alperin_generation, AlperinGenerator};
pub use focal::{center_zf, focal, focal_generators, hyperfocal, FocalGenerator, FocalMode};
pub use morphism::FMorphism;
pub use quillen::{quillen_category, quillen_inclusion_full, QuillenCategory, QuillenHoms};
pub use saturation::{check_saturation, SaturationReport, SaturationViolation};
pub use structure::{
    aut_f, f_class_element, f_class_subgroup, f_class_tuple, is_centric, is_fully_centralized, is_fully_normalized,
    is_radical, is_weakly_closed, n_phi, out_f, s_class_tuple, AutomorphismGroup,
};
pub use subsystem::{centralizer_system, normalizer_system};

/// Budget on the number of morphisms a generated closure may produce.
pub const DEFAULT_MORPHISM_BUDGET: usize = 500_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the Sylow group has order {order}, which is not a power of {p}")]
    NotAPGroup { order: usize, p: u64 },
    #[error("subgroup of order {order} is not a Sylow {p}-subgroup (expected order {expected})")]
    NotSylow { order: usize, p: u64, expected: usize },
    #[error("morphism closure exceeded the budget of {budget} morphisms")]
    MorphismBudgetExceeded { budget: usize },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("elements do not pairwise commute")]
    NonCommutingTuple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FusionLimits {
    /// Largest `|S|` whose subgroup lattice may be enumerated.
    pub max_subgroup_enumeration: usize,
    /// Largest number of morphisms a generated closure may hold.
    pub morphism_budget: usize,
}

impl Default for FusionLimits {
    fn default() -> Self {
        FusionLimits {
            max_subgroup_enumeration: DEFAULT_MAX_SUBGROUP_ENUMERATION,
            morphism_budget: DEFAULT_MORPHISM_BUDGET,
        }
    }
}

/// How a fusion system was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    /// `F_S(G)` for a Sylow subgroup `S` of an ambient group.
    Group,
    /// Closure of explicit generating morphisms.
    Generated,
    /// `N_F(Q)` over `N_S(Q)`.
    Normalizer,
    /// `C_F(Q)` over `C_S(Q)`.
    Centralizer,
}

type HomTable = HashMap<FixedBitSet, Arc<[FMorphism]>>;

enum Source {
    Group {
        ambient: FiniteGroup,
        /// `S` handle → ambient handle.
        embedding: Vec<Elem>,
        /// ambient handle → `S` handle, `u32::MAX` outside `S`.
        locate: Vec<u32>,
        cache: RwLock<HomTable>,
    },
    Table {
        kind: SystemKind,
        homs: HomTable,
        generators: Vec<FMorphism>,
        /// For subsystems: handle of this `S` → handle in the parent's `S`.
        parent_embedding: Option<Vec<Elem>>,
    },
}

/// A fusion system over a finite p-group. Immutable after construction;
/// hom-set memoization is internal and safe to share across threads.
pub struct FusionSystem {
    sylow: FiniteGroup,
    whole: Subgroup,
    prime: u64,
    limits: FusionLimits,
    source: Source,
    lattice: OnceLock<Result<Vec<Subgroup>, GroupError>>,
    hom_queries: AtomicU64,
}

impl FusionSystem {
    /// `F_S(G)` for a Sylow `p`-subgroup `S` of `g` found by
    /// [`sylow_subgroup`].
    pub fn from_group(g: &FiniteGroup, p: u64, limits: FusionLimits) -> Result<Self, FusionError> {
        if !is_prime(p) {
            return Err(FusionError::NotPrime(p));
        }
        let s = sylow_subgroup(g, p);
        Self::from_group_and_sylow(g, &s, p, limits)
    }

    pub fn from_group_and_sylow(
        g: &FiniteGroup,
        sylow: &Subgroup,
        p: u64,
        limits: FusionLimits,
    ) -> Result<Self, FusionError> {
        if !is_prime(p) {
            return Err(FusionError::NotPrime(p));
        }
        let expected = p_part(g.order() as u64, p) as usize;
        if sylow.order() != expected || !is_power_of(sylow.order() as u64, p) {
            return Err(FusionError::NotSylow { order: sylow.order(), p, expected });
        }
        let (s, embedding) = g.subgroup_as_group(sylow);
        let mut locate = vec![u32::MAX; g.order()];
        for (i, e) in embedding.iter().enumerate() {
            locate[e.index()] = i as u32;
        }
        Ok(FusionSystem {
            whole: Subgroup::whole(&s),
            sylow: s,
            prime: p,
            limits,
            source: Source::Group { ambient: g.clone(), embedding, locate, cache: RwLock::default() },
            lattice: OnceLock::new(),
            hom_queries: AtomicU64::new(0),
        })
    }

    /// `F_S(S)`.
    pub fn of_p_group(s: &FiniteGroup, p: u64, limits: FusionLimits) -> Result<Self, FusionError> {
        if !is_prime(p) {
            return Err(FusionError::NotPrime(p));
        }
        if !s.is_p_group(p) {
            return Err(FusionError::NotAPGroup { order: s.order(), p });
        }
        Self::from_group_and_sylow(s, &Subgroup::whole(s), p, limits)
    }

    /// The smallest fusion system over `s` containing every `S`-conjugation
    /// and the given morphisms, closed under restriction, composition and
    /// inversion of isomorphisms.
    pub fn generated(
        s: &FiniteGroup,
        p: u64,
        generators: Vec<FMorphism>,
        limits: FusionLimits,
    ) -> Result<Self, FusionError> {
        if !is_prime(p) {
            return Err(FusionError::NotPrime(p));
        }
        if !s.is_p_group(p) {
            return Err(FusionError::NotAPGroup { order: s.order(), p });
        }
        let whole = Subgroup::whole(s);
        for g in &generators {
            let valid = FMorphism::new(s, g.domain().clone(), whole.clone(), g.images().to_vec())?;
            debug_assert!(valid.same_map(g));
        }
        let lattice = all_subgroups(s, limits.max_subgroup_enumeration)?;
        let homs = closure::close(s, &lattice, &generators, limits.morphism_budget)?;
        Ok(Self::from_table(s.clone(), p, limits, SystemKind::Generated, lattice, homs, generators, None))
    }

    #[allow(clippy::too_many_arguments)]
    fn from_table(
        s: FiniteGroup,
        p: u64,
        limits: FusionLimits,
        kind: SystemKind,
        lattice: Vec<Subgroup>,
        homs: HomTable,
        generators: Vec<FMorphism>,
        parent_embedding: Option<Vec<Elem>>,
    ) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Ok(lattice));
        FusionSystem {
            whole: Subgroup::whole(&s),
            sylow: s,
            prime: p,
            limits,
            source: Source::Table { kind, homs, generators, parent_embedding },
            lattice: cell,
            hom_queries: AtomicU64::new(0),
        }
    }

    pub fn sylow(&self) -> &FiniteGroup {
        &self.sylow
    }

    /// `S` as a subgroup of itself.
    pub fn whole(&self) -> &Subgroup {
        &self.whole
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn limits(&self) -> FusionLimits {
        self.limits
    }

    pub fn kind(&self) -> SystemKind {
        match &self.source {
            Source::Group { .. } => SystemKind::Group,
            Source::Table { kind, .. } => *kind,
        }
    }

    /// The ambient group and the embedding `S → G` for group-induced systems.
    pub fn ambient(&self) -> Option<(&FiniteGroup, &[Elem])> {
        match &self.source {
            Source::Group { ambient, embedding, .. } => Some((ambient, embedding)),
            Source::Table { .. } => None,
        }
    }

    /// Generating morphisms of a generated system.
    pub fn generators(&self) -> &[FMorphism] {
        match &self.source {
            Source::Table { generators, .. } => generators,
            Source::Group { .. } => &[],
        }
    }

    /// For normalizer and centralizer subsystems, the embedding of this
    /// system's `S` into the parent system's `S`.
    pub fn parent_embedding(&self) -> Option<&[Elem]> {
        match &self.source {
            Source::Table { parent_embedding, .. } => parent_embedding.as_deref(),
            Source::Group { .. } => None,
        }
    }

    /// Cycle notation when `S` is permutation-backed, `#i` otherwise.
    pub fn label(&self, x: Elem) -> String {
        self.sylow.label(x)
    }

    /// Every subgroup of `S`, sorted by order. Fails beyond the configured
    /// enumeration cap.
    pub fn subgroups(&self) -> Result<&[Subgroup], FusionError> {
        self.lattice
            .get_or_init(|| all_subgroups(&self.sylow, self.limits.max_subgroup_enumeration))
            .as_deref()
            .map_err(|e| FusionError::Group(e.clone()))
    }

    pub fn subgroup(&self, seed: impl IntoIterator<Item = Elem>) -> Subgroup {
        Subgroup::closure(&self.sylow, seed)
    }

    pub fn normalizer_in_s(&self, p: &Subgroup) -> Subgroup {
        normalizer(&self.sylow, p)
    }

    pub fn centralizer_in_s(&self, p: &Subgroup) -> Subgroup {
        centralizer(&self.sylow, p)
    }

    /// Number of hom-set queries served so far.
    pub fn hom_query_count(&self) -> u64 {
        self.hom_queries.load(Ordering::Relaxed)
    }

    /// `Hom_F(P, S)`, sorted by images.
    pub fn hom_to_sylow(&self, p: &Subgroup) -> Arc<[FMorphism]> {
        self.hom_queries.fetch_add(1, Ordering::Relaxed);
        match &self.source {
            Source::Table { homs, .. } => homs.get(p.bits()).cloned().expect("hom table covers every subgroup of S"),
            Source::Group { ambient, embedding, locate, cache } => {
                if let Some(hit) = cache.read().unwrap().get(p.bits()) {
                    return hit.clone();
                }
                let computed: Arc<[FMorphism]> = self.group_homs(ambient, embedding, locate, p).into();
                cache.write().unwrap().entry(p.bits().clone()).or_insert(computed).clone()
            }
        }
    }

    fn group_homs(&self, g: &FiniteGroup, embedding: &[Elem], locate: &[u32], p: &Subgroup) -> Vec<FMorphism> {
        let gens: Vec<Elem> = p.generators().iter().map(|x| embedding[x.index()]).collect();
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let mut out = Vec::new();
        'outer: for x in g.elements() {
            let mut key = Vec::with_capacity(gens.len());
            for &y in &gens {
                let l = locate[g.conj(x, y).index()];
                if l == u32::MAX {
                    continue 'outer;
                }
                key.push(Elem::new(l as usize));
            }
            if seen.insert(key) {
                let images = p
                    .members()
                    .iter()
                    .map(|m| Elem::new(locate[g.conj(x, embedding[m.index()]).index()] as usize))
                    .collect();
                out.push(FMorphism::from_parts(p.clone(), self.whole.clone(), images));
            }
        }
        out.sort_by(|a, b| a.images().cmp(b.images()));
        out
    }

    /// `Hom_F(P, Q)`.
    pub fn hom_set(&self, p: &Subgroup, q: &Subgroup) -> Vec<FMorphism> {
        if p.order() > q.order() {
            return Vec::new();
        }
        self.hom_to_sylow(p)
            .iter()
            .filter(|f| f.images().iter().all(|&y| q.contains(y)))
            .map(|f| f.with_codomain(q))
            .collect()
    }

    /// `Hom_S(P, Q)`: distinct conjugation maps `c_s` with `sPs⁻¹ ≤ Q`.
    pub fn hom_s(&self, p: &Subgroup, q: &Subgroup) -> Vec<FMorphism> {
        let s = &self.sylow;
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let mut out = Vec::new();
        for x in transporter(s, p, q) {
            let f = FMorphism::conjugation(s, p, q, x);
            if seen.insert(f.images().to_vec()) {
                out.push(f);
            }
        }
        out.sort_by(|a, b| a.images().cmp(b.images()));
        out
    }

    /// `Aut_S(P) = N_S(P)/C_S(P)` as maps.
    pub fn aut_s(&self, p: &Subgroup) -> Vec<FMorphism> {
        self.hom_s(p, p)
    }

    /// Whether `f` is realized by conjugation with some element of `S`.
    pub fn is_s_conjugation(&self, f: &FMorphism) -> bool {
        let s = &self.sylow;
        let gens = f.domain().generators();
        s.elements().any(|x| gens.iter().all(|&y| Some(s.conj(x, y)) == f.apply(y)))
    }

    /// Every hom-set `Hom_F(P, S)` keyed by the members of `P`, as sorted
    /// image lists. Two systems over the same `S` are equal exactly when
    /// their tables are.
    pub fn hom_table(&self) -> Result<BTreeMap<Vec<Elem>, BTreeSet<Vec<Elem>>>, FusionError> {
        Ok(self
            .subgroups()?
            .iter()
            .map(|p| (p.members().to_vec(), self.hom_to_sylow(p).iter().map(|f| f.images().to_vec()).collect()))
            .collect())
    }

    /// Whether `f` is a morphism of this system (ignoring its codomain).
    pub fn contains_morphism(&self, f: &FMorphism) -> bool {
        self.hom_to_sylow(f.domain()).iter().any(|g| g.images() == f.images())
    }
}

impl std::fmt::Debug for FusionSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FusionSystem")
            .field("order", &self.sylow.order())
            .field("prime", &self.prime)
            .field("kind", &self.kind())
            .finish()
    }
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;
    use crate::group::Permutation;

    pub fn group(degree: usize, gens: &[&str]) -> FiniteGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| Permutation::parse_cycles(s, degree).unwrap()).collect();
        FiniteGroup::generate_with_degree(degree, &gens, 5000).unwrap()
    }

    pub fn system(degree: usize, gens: &[&str], p: u64) -> FusionSystem {
        FusionSystem::from_group(&group(degree, gens), p, FusionLimits::default()).unwrap()
    }

    pub fn a4_at_2() -> FusionSystem {
        system(4, &["(0 1 2)", "(0 1)(2 3)"], 2)
    }
    /// `S4` at 2 with `S = ⟨(0 1 2 3), (0 2)⟩`.
    pub fn s4_at_2() -> FusionSystem {
        let g = group(4, &["(0 1 2 3)", "(0 1)"]);
        let d8 = Subgroup::closure(&g, ["(0 1 2 3)", "(0 2)"].map(|c| find(&g, c)));
        FusionSystem::from_group_and_sylow(&g, &d8, 2, FusionLimits::default()).unwrap()
    }

    pub fn find(g: &FiniteGroup, cycles: &str) -> Elem {
        g.find_permutation(&Permutation::parse_cycles(cycles, g.degree().unwrap()).unwrap()).unwrap()
    }
    pub fn s3_at_2() -> FusionSystem {
        system(3, &["(0 1 2)", "(0 1)"], 2)
    }
    pub fn s3_at_3() -> FusionSystem {
        system(3, &["(0 1 2)", "(0 1)"], 3)
    }
    pub fn sl23_at_2() -> FusionSystem {
        system(8, &["(0 3 6)(1 7 4)", "(2 3 4)(5 7 6)"], 2)
    }
    pub fn q8_at_2() -> FusionSystem {
        system(8, &["(0 2 1 3)(4 6 5 7)", "(0 4 1 5)(2 7 3 6)"], 2)
    }
    pub fn d8_at_2() -> FusionSystem {
        system(4, &["(0 1 2 3)", "(0 2)"], 2)
    }
    pub fn c7c3_at(p: u64) -> FusionSystem {
        system(7, &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"], p)
    }

    /// Subgroup of `F`'s Sylow group generated by the given permutations of
    /// the ambient group.
    pub fn sub(f: &FusionSystem, cycles: &[&str]) -> Subgroup {
        f.subgroup(cycles.iter().map(|c| elem(f, c)))
    }

    pub fn elem(f: &FusionSystem, cycles: &str) -> Elem {
        let degree = f.sylow().degree().unwrap();
        let p = Permutation::parse_cycles(cycles, degree).unwrap();
        f.sylow().find_permutation(&p).unwrap_or_else(|| panic!("{cycles} not in S"))
    }
}
