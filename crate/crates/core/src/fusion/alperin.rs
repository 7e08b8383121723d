//! Generation of a saturated system by automorphisms of its fully
//! normalized, centric, radical subgroups.

use crate::group::Subgroup;

use super::{aut_f, is_centric, is_fully_normalized, is_radical, AutomorphismGroup, FusionError, FusionSystem};

#[derive(Debug, Clone)]
pub struct AlperinGenerator {
    pub subgroup: Subgroup,
    pub automorphisms: AutomorphismGroup,
}

/// Subgroups that are fully normalized, F-centric and F-radical, by order.
pub fn alperin_subgroups(f: &FusionSystem) -> Result<Vec<Subgroup>, FusionError> {
    Ok(f.subgroups()?
        .iter()
        .filter(|q| is_centric(f, q) && is_fully_normalized(f, q) && is_radical(f, q))
        .cloned()
        .collect())
}

/// `Aut_F(Q)` for every subgroup returned by [`alperin_subgroups`].
pub fn alperin_generators(f: &FusionSystem) -> Result<Vec<AlperinGenerator>, FusionError> {
    Ok(alperin_subgroups(f)?
        .into_iter()
        .map(|q| AlperinGenerator { automorphisms: aut_f(f, &q), subgroup: q })
        .collect())
}

/// Closes the Alperin generators under restriction, composition and
/// inclusion, and compares the result with every hom-set of `f`.
pub fn verify_alperin_generation(f: &FusionSystem) -> Result<bool, FusionError> {
    let generators = alperin_generators(f)?.into_iter().flat_map(|g| g.automorphisms.maps().to_vec()).collect();
    let regenerated = FusionSystem::generated(f.sylow(), f.prime(), generators, f.limits())?;
    Ok(regenerated.hom_table()? == f.hom_table()?)
}
