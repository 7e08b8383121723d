use crate::nilpotency::CriterionId;

/// The condition each criterion tests, stated so that a witness can be read
/// as a violation of it.
pub fn condition(id: CriterionId) -> &'static str {
    match id {
        CriterionId::Definition => {
            "F is nilpotent when it equals F_S(S): every morphism between subgroups of S is conjugation by an element of S."
        }
        CriterionId::ElementFusion => {
            "F is nilpotent iff any two elements of S that are F-conjugate are already conjugate in S."
        }
        CriterionId::TupleFusion => {
            "F is nilpotent iff commuting n-tuples of S that are F-conjugate (by one morphism applied entrywise) are conjugate by one element of S."
        }
        CriterionId::FrobeniusAll => "F is nilpotent iff Aut_F(P) is a p-group for every P <= S.",
        CriterionId::FrobeniusCentric => "F is nilpotent iff Aut_F(P) is a p-group for every F-centric P <= S.",
        CriterionId::Focal => {
            "F is nilpotent iff its focal subgroup, generated by all g^-1 a(g) with a in Aut_F(P) and g in P, equals [S,S]."
        }
        CriterionId::Abelian => "For abelian S, F is nilpotent iff Aut_F(S) is trivial.",
        CriterionId::Quillen => {
            "For odd p, F is nilpotent iff every elementary abelian normal subgroup V of S is weakly closed in F with Aut_F(V) a p-group. At p = 2 this does not suffice."
        }
        CriterionId::QuillenCategory => {
            "For odd p, F is nilpotent iff every F-morphism between elementary abelian subgroups of S is induced by conjugation in S."
        }
        CriterionId::ControlFusion => {
            "F is nilpotent iff S controls fusion of its C_p-subgroups: every F-morphism out of <x>, where x^p = 1 (x^4 = 1 for p = 2), is conjugation by an element of S."
        }
        CriterionId::SuffCentralElements => {
            "Sufficient: if the elements of S of order dividing p^n, for the least n with p^n > 2, are fixed by every F-morphism, then F is nilpotent."
        }
        CriterionId::SuffOmegaCenter => {
            "Sufficient: if Omega_1(S) (Omega_2(S) for p = 2) lies in the center Z_F(S), then F is nilpotent."
        }
    }
}
