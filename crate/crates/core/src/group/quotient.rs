use super::{Elem, FiniteGroup, GroupError, GroupMap, Subgroup};

/// `G/N` with table backing, plus the projection `G → G/N`. Coset handles
/// follow the order in which cosets are first met, so the identity coset
/// is handle `0`.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupMap), GroupError> {
    if !n.is_normal(g) {
        return Err(GroupError::NotNormal);
    }
    let mut coset = vec![u32::MAX; g.order()];
    let mut reps: Vec<Elem> = Vec::new();
    for x in g.elements() {
        if coset[x.index()] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &m in n.members() {
            coset[g.mul(x, m).index()] = id;
        }
    }
    let k = reps.len();
    let mut table = vec![0u32; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * k + j] = coset[g.mul(a, b).index()];
        }
    }
    let q = FiniteGroup::from_table_unchecked(table);
    let images = g.elements().map(|x| Elem(coset[x.index()])).collect();
    let projection = GroupMap::new_unchecked(g, Subgroup::whole(g), &q, Subgroup::whole(&q), images);
    Ok((q, projection))
}
