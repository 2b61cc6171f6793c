//! Both sides of each characterization of central automorphisms of finite
//! p-groups, evaluated independently and compared.
//!
//! The structural side is computed from abelian invariants of `G/Z(G)`,
//! `G/γ₂(G)` and `Z(G)`; the automorphism side from an exhaustive enumeration
//! of `Aut(G)`. Equalities of automorphism groups are always tested as sets.
//! Where a Hom-order formula predicts a cardinality, that is reconciled too.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::OnceCell;

use num_bigint::BigUint;

use crate::abelian::{
    class_two_invariants, hom_order, invariants, lemma4_compare, subgroup_invariants, AbelianType,
    ClassTwoInvariants, Lemma4Outcome,
};
use crate::automorphism::{
    all_automorphisms, alpha_from_f, aut_fixing_quotient, aut_fixing_subgroup, autcent_within,
    endomorphism_from_f, f_from_alpha, find_abelian_direct_factor, homs_to_central_subgroup,
    inner_automorphisms, is_central_automorphism, AbelianFactor, AutSet, Automorphism,
};
use crate::error::{Error, Result};
use crate::group::{extend_on_generated, Group, Limits, Subgroup};

#[cfg(feature = "serde")]
pub(crate) mod big_string {
    use alloc::string::{String, ToString};
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// The three structural conditions and their conjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct ConditionSide {
    pub r_eq_s: bool,
    pub residual_iso: bool,
    pub exp_eq: bool,
    pub all: bool,
}

impl ConditionSide {
    pub fn from_invariants(inv: &ClassTwoInvariants) -> ConditionSide {
        let r_eq_s = inv.r() == inv.s();
        // finite abelian groups are isomorphic iff their types agree
        let residual_iso = inv.z_residual.exps() == inv.ab_residual.exps();
        let exp_eq = inv.exp_z == inv.exp_gamma2;
        ConditionSide {
            r_eq_s,
            residual_iso,
            exp_eq,
            all: r_eq_s && residual_iso && exp_eq,
        }
    }
}

/// `r = s`, `(G/Z)/M̄ ≅ (G/γ₂)/N̄`, `exp Z(G) = exp γ₂(G)` for a class-2 p-group.
pub fn theorem_condition(g: &Group) -> Result<ConditionSide> {
    Ok(ConditionSide::from_invariants(&class_two_invariants(g)?))
}

/// Sizes and set comparisons from the automorphism enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct OracleSide {
    pub autcent_order: usize,
    #[cfg_attr(feature = "serde", serde(rename = "autZZOrder"))]
    pub aut_zz_order: usize,
    pub inn_order: usize,
    #[cfg_attr(feature = "serde", serde(rename = "autcentEqualsAutZZ"))]
    pub autcent_equals_aut_zz: bool,
    pub autcent_equals_inn: bool,
}

/// Type of the abelianization of `G/N`, which is what `Hom(G/N, M)` sees for abelian `M`.
fn abelianized_quotient_type(g: &Group, n: &Subgroup, p: u64) -> Result<AbelianType> {
    let q = g.quotient(n)?.target;
    let ab = q.quotient(&q.commutator_subgroup())?.target;
    invariants(&ab, p)
}

/// Per-group cache of the subgroups and automorphism sets every check needs.
pub struct Analysis<'g> {
    g: &'g Group,
    limits: Limits,
    prime: Option<u64>,
    class: Option<usize>,
    center: Subgroup,
    gamma2: Subgroup,
    aut: OnceCell<Result<AutSet>>,
    inn: OnceCell<AutSet>,
    autcent: OnceCell<Result<AutSet>>,
    aut_zz: OnceCell<Result<AutSet>>,
    factor: OnceCell<Result<Option<AbelianFactor>>>,
}

fn cached<T>(cell: &OnceCell<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

impl<'g> Analysis<'g> {
    pub fn new(g: &'g Group, limits: Limits) -> Analysis<'g> {
        Analysis {
            g,
            limits,
            prime: g.p_group_prime(),
            class: g.nilpotency_class().ok(),
            center: g.center(),
            gamma2: g.commutator_subgroup(),
            aut: OnceCell::new(),
            inn: OnceCell::new(),
            autcent: OnceCell::new(),
            aut_zz: OnceCell::new(),
            factor: OnceCell::new(),
        }
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    pub fn class(&self) -> Option<usize> {
        self.class
    }

    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    pub fn gamma2(&self) -> &Subgroup {
        &self.gamma2
    }

    fn require_p_group(&self) -> Result<u64> {
        self.prime.ok_or(Error::NotPGroup)
    }

    fn require_nonabelian_p_group(&self) -> Result<u64> {
        let p = self.require_p_group()?;
        if self.center.order() == self.g.order() {
            return Err(Error::HypothesisViolated("group is abelian"));
        }
        Ok(p)
    }

    pub fn aut(&self) -> Result<&AutSet> {
        cached(&self.aut, || all_automorphisms(self.g, &self.limits))
    }

    pub fn inn(&self) -> &AutSet {
        self.inn.get_or_init(|| inner_automorphisms(self.g))
    }

    pub fn autcent(&self) -> Result<&AutSet> {
        cached(&self.autcent, || {
            autcent_within(self.g, self.aut()?, self.inn())
        })
    }

    /// Central automorphisms that also fix `Z(G)` element-wise.
    pub fn aut_zz(&self) -> Result<&AutSet> {
        cached(&self.aut_zz, || {
            let central = aut_fixing_quotient(self.g, &self.center, self.aut()?)?;
            Ok(aut_fixing_subgroup(self.g, &self.center, &central))
        })
    }

    pub fn abelian_factor(&self) -> Result<Option<&AbelianFactor>> {
        cached(&self.factor, || {
            find_abelian_direct_factor(self.g, &self.limits)
        })
        .map(Option::as_ref)
    }

    pub fn is_purely_nonabelian(&self) -> Result<bool> {
        Ok(self.abelian_factor()?.is_none())
    }

    fn oracle_side(&self) -> Result<OracleSide> {
        let autcent = self.autcent()?;
        let aut_zz = self.aut_zz()?;
        let inn = self.inn();
        if !aut_zz.is_subset_of(autcent) {
            return Err(Error::InternalDisagreement(
                "Aut^Z_Z(G) is not inside Autcent(G)",
            ));
        }
        Ok(OracleSide {
            autcent_order: autcent.len(),
            aut_zz_order: aut_zz.len(),
            inn_order: inn.len(),
            autcent_equals_aut_zz: autcent == aut_zz,
            autcent_equals_inn: autcent == inn,
        })
    }

    /// Structural condition against `Autcent(G) = Aut^Z_Z(G)`.
    pub fn verify_theorem(&self) -> Result<TheoremCheck> {
        let invariants = class_two_invariants(self.g)?;
        let condition = ConditionSide::from_invariants(&invariants);
        let oracle = self.oracle_side()?;
        let p = invariants.p;
        let z_type = subgroup_invariants(self.g, &self.center, p)?;
        let aut_zz_formula = hom_order(&invariants.z_type, &z_type)?;
        if BigUint::from(oracle.aut_zz_order) != aut_zz_formula {
            return Err(Error::InternalDisagreement(
                "|Aut^Z_Z(G)| differs from |Hom(G/Z, Z)|",
            ));
        }
        let autcent_formula = if self.is_purely_nonabelian()? {
            let f = hom_order(&invariants.ab_type, &z_type)?;
            if BigUint::from(oracle.autcent_order) != f {
                return Err(Error::InternalDisagreement(
                    "|Autcent(G)| differs from |Hom(G/γ₂, Z)| for a purely non-abelian group",
                ));
            }
            Some(f)
        } else {
            None
        };
        let witness = self.autcent()?.difference(self.aut_zz()?).next().cloned();
        Ok(TheoremCheck {
            agrees: condition.all == oracle.autcent_equals_aut_zz,
            invariants,
            condition,
            oracle,
            aut_zz_formula,
            autcent_formula,
            witness,
        })
    }

    /// For every `M ≤ Z(G)`: `Aut^M_Z(G) = Inn(G)` against
    /// `class 2 ∧ γ₂ ≤ M ∧ M cyclic`.
    pub fn verify_proposition1(&self) -> Result<Vec<Prop1Case>> {
        let p = self.require_nonabelian_p_group()?;
        let aut = self.aut()?;
        let inn = self.inn();
        let fix_z = aut_fixing_subgroup(self.g, &self.center, aut);
        let g_mod_z = abelianized_quotient_type(self.g, &self.center, p)?;
        let class_two = self.class == Some(2);
        let mut cases = Vec::new();
        for m in self.g.all_subgroups_of(&self.center, &self.limits)? {
            let aut_m_z = aut_fixing_quotient(self.g, &m, &fix_z)?;
            let automorphism_side = &aut_m_z == inn;
            let gamma2_in_m = self.gamma2.is_subset_of(&m);
            let m_cyclic = self.g.is_cyclic(&m);
            let condition_side = class_two && gamma2_in_m && m_cyclic;
            let hom_formula = hom_order(&g_mod_z, &subgroup_invariants(self.g, &m, p)?)?;
            let count_matches = BigUint::from(aut_m_z.len()) == hom_formula;
            cases.push(Prop1Case {
                agrees: automorphism_side == condition_side && count_matches,
                m_order: m.order(),
                m,
                m_cyclic,
                gamma2_in_m,
                class_two,
                automorphism_side,
                condition_side,
                aut_m_z_order: aut_m_z.len(),
                hom_formula,
            });
        }
        Ok(cases)
    }

    /// `Autcent(G) = Inn(G)` against `Z(G) = γ₂(G)` cyclic.
    pub fn verify_corollary1(&self) -> Result<Corollary1Check> {
        self.require_nonabelian_p_group()?;
        let autcent_equals_inn = self.autcent()? == self.inn();
        let z_equals_gamma2 = self.center == self.gamma2;
        let z_cyclic = self.g.is_cyclic(&self.center);
        let condition = z_equals_gamma2 && z_cyclic;
        Ok(Corollary1Check {
            autcent_equals_inn,
            z_equals_gamma2,
            z_cyclic,
            condition,
            agrees: autcent_equals_inn == condition,
        })
    }

    /// `Aut^Z_Z(G) = Inn(G)` against `G` abelian or (class 2 and `Z(G)` cyclic).
    pub fn verify_attar(&self) -> Result<AttarCheck> {
        self.require_p_group()?;
        let aut_zz_equals_inn = self.aut_zz()? == self.inn();
        let abelian = self.center.order() == self.g.order();
        let z_cyclic = self.g.is_cyclic(&self.center);
        let condition = abelian || (self.class == Some(2) && z_cyclic);
        Ok(AttarCheck {
            aut_zz_equals_inn,
            abelian,
            z_cyclic,
            condition,
            agrees: aut_zz_equals_inn == condition,
        })
    }

    /// For one central `M`: the hypothesis `M ≤ ∩ Ker f`, the
    /// bijection `Hom(G, M) → Aut^M(G)` under it, and
    /// `|Aut^M_Z(G)| = |Hom(G/Z, M)|`.
    pub fn verify_lemma0(&self, m: &Subgroup) -> Result<Lemma0Case> {
        let p = self.require_p_group()?;
        let homs = homs_to_central_subgroup(self.g, m)?;
        let hypothesis_holds = homs.iter().all(|f| f.kills(self.g, m));
        let aut_m = aut_fixing_quotient(self.g, m, self.aut()?)?;
        let aut_m_z = aut_fixing_subgroup(self.g, &self.center, &aut_m);
        let bijection_holds = hypothesis_holds.then(|| {
            let images: Option<Vec<Automorphism>> =
                homs.iter().map(|f| alpha_from_f(self.g, f)).collect();
            images.is_some_and(|v| AutSet::from_vec(v) == aut_m && homs.len() == aut_m.len())
        });
        let formula = hom_order(
            &abelianized_quotient_type(self.g, &self.center, p)?,
            &subgroup_invariants(self.g, m, p)?,
        )?;
        let iso_count_holds = BigUint::from(aut_m_z.len()) == formula;
        Ok(Lemma0Case {
            m_order: m.order(),
            hypothesis_holds,
            hom_count: homs.len(),
            aut_m_order: aut_m.len(),
            bijection_holds,
            aut_m_z_order: aut_m_z.len(),
            formula,
            iso_count_holds,
        })
    }

    /// The single-`M` check for every subgroup of `Z(G)`.
    pub fn verify_lemma0_all(&self) -> Result<Vec<Lemma0Case>> {
        self.require_p_group()?;
        self.g
            .all_subgroups_of(&self.center, &self.limits)?
            .iter()
            .map(|m| self.verify_lemma0(m))
            .collect()
    }

    /// For purely non-abelian `G`, `α ↦ f_α` maps `Autcent(G)` onto
    /// `Hom(G/γ₂, Z)` one-to-one.
    pub fn verify_lemma0a(&self) -> Result<Lemma0aCheck> {
        let p = self.require_p_group()?;
        if !self.is_purely_nonabelian()? {
            return Err(Error::NotPurelyNonabelian);
        }
        let autcent = self.autcent()?;
        let formula = hom_order(
            &abelianized_quotient_type(self.g, &self.gamma2, p)?,
            &subgroup_invariants(self.g, &self.center, p)?,
        )?;
        let mut from_alpha: Vec<Vec<usize>> = autcent
            .iter()
            .filter_map(|a| f_from_alpha(self.g, a, &self.center).map(|f| f.values))
            .collect();
        let all_landed = from_alpha.len() == autcent.len();
        from_alpha.sort_unstable();
        from_alpha.dedup();
        let mut homs: Vec<Vec<usize>> = homs_to_central_subgroup(self.g, &self.center)?
            .into_iter()
            .map(|f| f.values)
            .collect();
        homs.sort_unstable();
        let correspondence_bijective =
            all_landed && from_alpha.len() == autcent.len() && from_alpha == homs;
        Ok(Lemma0aCheck {
            autcent_order: autcent.len(),
            agrees: correspondence_bijective && BigUint::from(autcent.len()) == formula,
            formula,
            correspondence_bijective,
        })
    }

    /// `Autcent(G) = Aut^Z_Z(G)` forces `G` purely non-abelian; when `G` has
    /// an abelian direct factor, builds the central automorphism that moves
    /// a central element.
    pub fn verify_lemma3(&self) -> Result<Lemma3Check> {
        let p = self.require_p_group()?;
        if self.center.order() == self.g.order() {
            // the witness needs a non-abelian complement; abelian groups
            // are handled separately (C2 has Autcent = Aut^Z_Z = 1)
            return Err(Error::HypothesisViolated("group is abelian"));
        }
        let autcent = self.autcent()?;
        let aut_zz = self.aut_zz()?;
        let autcent_equals_aut_zz = autcent == aut_zz;
        let factor = self.abelian_factor()?.cloned();
        let witness = match &factor {
            Some(f) => Some(self.lemma3_witness(f, p, autcent, aut_zz)?),
            None => None,
        };
        let witness_ok = witness.as_ref().is_none_or(Lemma3Witness::is_valid);
        Ok(Lemma3Check {
            autcent_equals_aut_zz,
            purely_nonabelian: factor.is_none(),
            holds: (!autcent_equals_aut_zz || factor.is_none()) && witness_ok,
            factor,
            witness,
        })
    }

    fn lemma3_witness(
        &self,
        factor: &AbelianFactor,
        p: u64,
        autcent: &AutSet,
        aut_zz: &AutSet,
    ) -> Result<Lemma3Witness> {
        let g = self.g;
        let h = &factor.complement;
        let phi = g.frattini_subgroup()?;
        let z_h: Vec<usize> = h
            .members()
            .iter()
            .copied()
            .filter(|&z| h.members().iter().all(|&x| g.mul(x, z) == g.mul(z, x)))
            .collect();
        let z = z_h
            .iter()
            .copied()
            .find(|&z| z != g.identity() && phi.contains(z) && g.pow(z, p) == g.identity())
            .ok_or(Error::InternalDisagreement(
                "Z(H) ∩ Φ(G) has no element of order p",
            ))?;
        let mut generators = g.minimal_generating_set_of(h)?;
        let factor_generators = g.minimal_generating_set_of(&factor.factor)?;
        generators.extend(&factor_generators);
        let images: Vec<usize> = generators.iter().map(|&w| g.mul(w, z)).collect();
        let map = extend_on_generated(g, &generators, &images, g, true)
            .filter(|m| m.iter().all(|&v| v != usize::MAX))
            .ok_or(Error::InternalDisagreement(
                "w ↦ wz on the generators is not an automorphism",
            ))?;
        let automorphism = Automorphism::from_images(g, map)?;
        let moved_central_element = factor_generators
            .iter()
            .copied()
            .find(|&y| automorphism.apply(y) != y);
        Ok(Lemma3Witness {
            z,
            generators,
            is_central: is_central_automorphism(g, &automorphism),
            in_autcent: autcent.contains(&automorphism),
            outside_aut_zz: !aut_zz.contains(&automorphism),
            moved_central_element,
            automorphism,
        })
    }

    /// The Hom-order threshold applied to `A = G/Z(G)`, `B = G/γ₂(G)`, `C = Z(G)` when its
    /// hypotheses hold for those types.
    pub fn verify_lemma4(&self) -> Result<Lemma4Outcome> {
        let inv = class_two_invariants(self.g)?;
        let z_type = subgroup_invariants(self.g, &self.center, inv.p)?;
        lemma4_compare(&inv.z_type, &inv.ab_type, &z_type)
    }

    /// Internal consistency of the automorphism engine on this group.
    pub fn engine_self_check(&self) -> Result<EngineCheck> {
        self.require_p_group()?;
        let g = self.g;
        let aut = self.aut()?;
        let autcent = self.autcent()?;
        let inn = self.inn();
        let inn_order_matches = inn.len() * self.center.order() == g.order();
        let inn_in_autcent = inn.is_subset_of(autcent);
        let inn_containment_matches_class =
            inn_in_autcent == matches!(self.class, Some(c) if c <= 2);

        let homs = homs_to_central_subgroup(g, &self.center)?;
        let mut criterion_matches_bijectivity = true;
        let mut round_trip_holds = true;
        let mut accepted = Vec::new();
        for f in &homs {
            let endo = endomorphism_from_f(g, f);
            let mut sorted = endo.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let bijective = sorted.len() == g.order();
            let alpha = alpha_from_f(g, f);
            criterion_matches_bijectivity &= alpha.is_some() == bijective;
            if let Some(a) = alpha {
                round_trip_holds &= f_from_alpha(g, &a, &self.center).as_ref() == Some(f);
                accepted.push(a);
            }
        }
        let accepted_count = accepted.len();
        let accepted = AutSet::from_vec(accepted);
        let alpha_injective = accepted.len() == accepted_count;
        // Aut^Z(G) = Autcent(G), and every element should come back from its f_α
        for a in autcent {
            match f_from_alpha(g, a, &self.center) {
                Some(f) => round_trip_holds &= alpha_from_f(g, &f).as_ref() == Some(a),
                None => round_trip_holds = false,
            }
        }
        let aut_closed = aut.len() > 512 || aut.is_group();
        Ok(EngineCheck {
            aut_order: aut.len(),
            inn_order_matches,
            inn_containment_matches_class,
            criterion_matches_bijectivity,
            alpha_injective,
            round_trip_holds,
            accepted_equals_autcent: &accepted == autcent,
            aut_closed,
        })
    }
}

/// Outcome of the main equivalence on one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub invariants: ClassTwoInvariants,
    pub condition: ConditionSide,
    pub oracle: OracleSide,
    /// `|Hom(G/Z, Z)|`, which `|Aut^Z_Z(G)|` must equal
    pub aut_zz_formula: BigUint,
    /// `|Hom(G/γ₂, Z)|` when `G` is purely non-abelian
    pub autcent_formula: Option<BigUint>,
    /// some element of `Autcent(G) \ Aut^Z_Z(G)`
    pub witness: Option<Automorphism>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop1Case {
    pub m: Subgroup,
    pub m_order: usize,
    pub m_cyclic: bool,
    pub gamma2_in_m: bool,
    pub class_two: bool,
    pub automorphism_side: bool,
    pub condition_side: bool,
    pub aut_m_z_order: usize,
    pub hom_formula: BigUint,
    pub agrees: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corollary1Check {
    pub autcent_equals_inn: bool,
    pub z_equals_gamma2: bool,
    pub z_cyclic: bool,
    pub condition: bool,
    pub agrees: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttarCheck {
    pub aut_zz_equals_inn: bool,
    pub abelian: bool,
    pub z_cyclic: bool,
    pub condition: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma0Case {
    pub m_order: usize,
    pub hypothesis_holds: bool,
    pub hom_count: usize,
    pub aut_m_order: usize,
    /// `None` when the hypothesis fails
    pub bijection_holds: Option<bool>,
    pub aut_m_z_order: usize,
    pub formula: BigUint,
    pub iso_count_holds: bool,
}

impl Lemma0Case {
    pub fn passes(&self) -> bool {
        self.bijection_holds != Some(false) && self.iso_count_holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma0aCheck {
    pub autcent_order: usize,
    pub formula: BigUint,
    pub correspondence_bijective: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma3Witness {
    /// element of order p in `Z(H) ∩ Φ(G)`
    pub z: usize,
    /// minimal generators of `H` followed by those of `A`
    pub generators: Vec<usize>,
    pub automorphism: Automorphism,
    pub is_central: bool,
    pub in_autcent: bool,
    pub outside_aut_zz: bool,
    pub moved_central_element: Option<usize>,
}

impl Lemma3Witness {
    pub fn is_valid(&self) -> bool {
        self.is_central
            && self.in_autcent
            && self.outside_aut_zz
            && self.moved_central_element.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma3Check {
    pub autcent_equals_aut_zz: bool,
    pub purely_nonabelian: bool,
    pub factor: Option<AbelianFactor>,
    pub witness: Option<Lemma3Witness>,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineCheck {
    pub aut_order: usize,
    pub inn_order_matches: bool,
    pub inn_containment_matches_class: bool,
    pub criterion_matches_bijectivity: bool,
    pub alpha_injective: bool,
    pub round_trip_holds: bool,
    pub accepted_equals_autcent: bool,
    /// closure is only checked for `|Aut(G)| ≤ 512`
    pub aut_closed: bool,
}

impl EngineCheck {
    pub fn passes(&self) -> bool {
        self.inn_order_matches
            && self.inn_containment_matches_class
            && self.criterion_matches_bijectivity
            && self.alpha_injective
            && self.round_trip_holds
            && self.accepted_equals_autcent
            && self.aut_closed
    }
}

pub fn verify_theorem(g: &Group, limits: Limits) -> Result<TheoremCheck> {
    Analysis::new(g, limits).verify_theorem()
}

pub fn verify_proposition1(g: &Group, limits: Limits) -> Result<Vec<Prop1Case>> {
    Analysis::new(g, limits).verify_proposition1()
}

pub fn verify_corollary1(g: &Group, limits: Limits) -> Result<Corollary1Check> {
    Analysis::new(g, limits).verify_corollary1()
}

pub fn verify_lemma0(g: &Group, m: &Subgroup, limits: Limits) -> Result<Lemma0Case> {
    Analysis::new(g, limits).verify_lemma0(m)
}

pub fn verify_lemma0a(g: &Group, limits: Limits) -> Result<Lemma0aCheck> {
    Analysis::new(g, limits).verify_lemma0a()
}

pub fn verify_lemma3(g: &Group, limits: Limits) -> Result<Lemma3Check> {
    Analysis::new(g, limits).verify_lemma3()
}

pub fn verify_attar(g: &Group, limits: Limits) -> Result<AttarCheck> {
    Analysis::new(g, limits).verify_attar()
}

/// Exhaustive Hom-order threshold sweep at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct Lemma4Sweep {
    pub p: u64,
    pub max_exp: u32,
    pub triples: u64,
    pub strict_triples: u64,
    pub failures: Vec<(AbelianType, AbelianType, AbelianType)>,
}

impl Lemma4Sweep {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every `(A, B, C)` with orders at most `p^max_exp` satisfying the
/// hypotheses: same number of factors, `b_j ≥ a_j`, strict somewhere.
pub fn verify_lemma4_sweep(p: u64, max_exp: u32) -> Result<Lemma4Sweep> {
    let types = AbelianType::all_up_to(p, max_exp);
    let mut sweep = Lemma4Sweep {
        p,
        max_exp,
        triples: 0,
        strict_triples: 0,
        failures: Vec::new(),
    };
    for a in types.iter().filter(|t| t.rank() > 0) {
        for b in &types {
            let dominated = b.rank() == a.rank()
                && a.exps().iter().zip(b.exps()).all(|(x, y)| y >= x)
                && a != b;
            if !dominated {
                continue;
            }
            for c in &types {
                let out = lemma4_compare(a, b, c)?;
                sweep.triples += 1;
                sweep.strict_triples += u64::from(out.strict);
                if !out.equivalence_holds() {
                    sweep.failures.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    Ok(sweep)
}

/// The checks a scan can run on a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Check {
    Theorem,
    Prop1,
    Cor1,
    Lemma0,
    Lemma0a,
    Lemma3,
    Lemma4,
    Attar,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem,
        Check::Prop1,
        Check::Cor1,
        Check::Lemma0,
        Check::Lemma0a,
        Check::Lemma3,
        Check::Lemma4,
        Check::Attar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Prop1 => "prop1",
            Check::Cor1 => "cor1",
            Check::Lemma0 => "lemma0",
            Check::Lemma0a => "lemma0a",
            Check::Lemma3 => "lemma3",
            Check::Lemma4 => "lemma4",
            Check::Attar => "attar",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl core::fmt::Display for Check {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
    Error,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not-applicable",
            CheckStatus::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckOutcome {
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Verdict {
    #[cfg_attr(feature = "serde", serde(rename = "agree"))]
    Agree,
    #[cfg_attr(feature = "serde", serde(rename = "COUNTEREXAMPLE"))]
    Counterexample,
    #[cfg_attr(feature = "serde", serde(rename = "not-applicable"))]
    NotApplicable,
    #[cfg_attr(feature = "serde", serde(rename = "error"))]
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Agree => "agree",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Error => "error",
        }
    }
}

/// An automorphism attached to a failed check, for post-mortem.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub check: String,
    pub description: String,
    pub images: Vec<usize>,
}

/// Everything a scan records about one group.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct TheoremReport {
    pub group_id: String,
    pub order: usize,
    pub prime: Option<u64>,
    pub class: Option<usize>,
    pub condition_side: Option<ConditionSide>,
    pub oracle_side: Option<OracleSide>,
    pub lemma_checks: BTreeMap<String, CheckOutcome>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

fn is_inapplicable(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPGroup
            | Error::WrongClass(_)
            | Error::NotPurelyNonabelian
            | Error::HypothesisViolated(_)
            | Error::NotNilpotent
    )
}

fn outcome(passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        status: if passed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        detail,
    }
}

impl TheoremReport {
    pub fn check(&self, check: Check) -> Option<&CheckOutcome> {
        self.lemma_checks.get(check.name())
    }
}

/// Runs `checks` on one group and folds the outcomes into a report.
/// Per-check errors are recorded, never propagated.
pub fn run_checks(group_id: &str, g: &Group, checks: &[Check], limits: Limits) -> TheoremReport {
    let analysis = Analysis::new(g, limits);
    let mut report = TheoremReport {
        group_id: group_id.to_string(),
        order: g.order(),
        prime: analysis.prime(),
        class: analysis.class(),
        condition_side: theorem_condition(g).ok(),
        oracle_side: None,
        lemma_checks: BTreeMap::new(),
        verdict: Verdict::Agree,
        witnesses: Vec::new(),
    };
    for &check in checks {
        let result = run_one(&analysis, check, &mut report);
        let entry = match result {
            Ok(o) => o,
            Err(e) if is_inapplicable(&e) => CheckOutcome {
                status: CheckStatus::NotApplicable,
                detail: e.to_string(),
            },
            Err(e) => CheckOutcome {
                status: CheckStatus::Error,
                detail: e.to_string(),
            },
        };
        report.lemma_checks.insert(check.name().to_string(), entry);
    }
    let statuses: Vec<CheckStatus> = report.lemma_checks.values().map(|o| o.status).collect();
    report.verdict = if statuses.contains(&CheckStatus::Fail) {
        Verdict::Counterexample
    } else if statuses.contains(&CheckStatus::Error) {
        Verdict::Error
    } else if statuses.iter().all(|s| *s == CheckStatus::NotApplicable) {
        Verdict::NotApplicable
    } else {
        Verdict::Agree
    };
    report
}

fn run_one(a: &Analysis<'_>, check: Check, report: &mut TheoremReport) -> Result<CheckOutcome> {
    match check {
        Check::Theorem => {
            let t = a.verify_theorem()?;
            report.oracle_side = Some(t.oracle);
            if !t.agrees {
                report.witnesses.push(Witness {
                    check: check.name().to_string(),
                    description: String::from("condition and automorphism sets disagree"),
                    images: t
                        .witness
                        .as_ref()
                        .map(|w| w.images().to_vec())
                        .unwrap_or_default(),
                });
            }
            Ok(outcome(
                t.agrees,
                format!(
                    "condition={} |Autcent|={} |Aut^Z_Z|={} |Inn|={} Autcent=Aut^Z_Z:{}",
                    t.condition.all,
                    t.oracle.autcent_order,
                    t.oracle.aut_zz_order,
                    t.oracle.inn_order,
                    t.oracle.autcent_equals_aut_zz
                ),
            ))
        }
        Check::Prop1 => {
            let cases = a.verify_proposition1()?;
            let failed: Vec<usize> = cases
                .iter()
                .filter(|c| !c.agrees)
                .map(|c| c.m_order)
                .collect();
            let both_true = cases
                .iter()
                .filter(|c| c.automorphism_side && c.condition_side)
                .count();
            Ok(outcome(
                failed.is_empty(),
                format!(
                    "{} central subgroups, {} with Aut^M_Z = Inn, failing orders {:?}",
                    cases.len(),
                    both_true,
                    failed
                ),
            ))
        }
        Check::Cor1 => {
            let c = a.verify_corollary1()?;
            Ok(outcome(
                c.agrees,
                format!(
                    "Autcent=Inn:{} Z=gamma2:{} Z cyclic:{}",
                    c.autcent_equals_inn, c.z_equals_gamma2, c.z_cyclic
                ),
            ))
        }
        Check::Lemma0 => {
            let cases = a.verify_lemma0_all()?;
            let hyp = cases.iter().filter(|c| c.hypothesis_holds).count();
            let ok = cases.iter().all(Lemma0Case::passes);
            Ok(outcome(
                ok,
                format!(
                    "{} central subgroups, hypothesis holds for {}",
                    cases.len(),
                    hyp
                ),
            ))
        }
        Check::Lemma0a => {
            let c = a.verify_lemma0a()?;
            Ok(outcome(
                c.agrees,
                format!(
                    "|Autcent|={} |Hom(G/gamma2, Z)|={}",
                    c.autcent_order, c.formula
                ),
            ))
        }
        Check::Lemma3 => {
            let c = a.verify_lemma3()?;
            if let Some(w) = &c.witness {
                if !w.is_valid() {
                    report.witnesses.push(Witness {
                        check: check.name().to_string(),
                        description: format!("constructed map with z = {} fails validation", w.z),
                        images: w.automorphism.images().to_vec(),
                    });
                }
            }
            Ok(outcome(
                c.holds,
                format!(
                    "Autcent=Aut^Z_Z:{} purely non-abelian:{} witness:{}",
                    c.autcent_equals_aut_zz,
                    c.purely_nonabelian,
                    c.witness.as_ref().map_or("none", |w| if w.is_valid() {
                        "valid"
                    } else {
                        "invalid"
                    })
                ),
            ))
        }
        Check::Lemma4 => {
            let o = a.verify_lemma4()?;
            Ok(outcome(
                o.equivalence_holds(),
                format!(
                    "t={} threshold={} strict={} |Hom(G/Z,Z)|={} |Hom(G/gamma2,Z)|={}",
                    o.t, o.threshold, o.strict, o.hom_a, o.hom_b
                ),
            ))
        }
        Check::Attar => {
            let c = a.verify_attar()?;
            Ok(outcome(
                c.agrees,
                format!(
                    "Aut^Z_Z=Inn:{} abelian:{} Z cyclic:{}",
                    c.aut_zz_equals_inn, c.abelian, c.z_cyclic
                ),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn structural_condition_examples() {
        let c = theorem_condition(&build("D8").unwrap()).unwrap();
        assert!(c.r_eq_s && c.residual_iso && c.exp_eq && c.all);
        let c = theorem_condition(&build("M16").unwrap()).unwrap();
        assert!(!c.exp_eq && !c.all);
        let c = theorem_condition(&build("D8xC2").unwrap()).unwrap();
        assert!(!c.r_eq_s);
        assert_eq!(
            theorem_condition(&build("D16").unwrap()),
            Err(Error::WrongClass(3))
        );
    }

    #[test]
    fn condition_against_enumeration() {
        let t = verify_theorem(&build("D8").unwrap(), lim()).unwrap();
        assert!(t.condition.all && t.oracle.autcent_equals_aut_zz && t.agrees);
        assert_eq!((t.oracle.autcent_order, t.oracle.aut_zz_order), (4, 4));

        let t = verify_theorem(&build("D8xC2").unwrap(), lim()).unwrap();
        assert!(!t.condition.all && !t.oracle.autcent_equals_aut_zz && t.agrees);
        assert!(t.oracle.autcent_order > t.oracle.aut_zz_order);
        assert!(t.witness.is_some());
    }

    #[test]
    fn central_subgroup_cases() {
        let d8 = build("D8").unwrap();
        let cases = verify_proposition1(&d8, lim()).unwrap();
        assert_eq!(cases.len(), 2);
        let trivial = &cases[0];
        assert_eq!(trivial.m_order, 1);
        assert!(!trivial.automorphism_side && !trivial.condition_side && trivial.agrees);
        let whole = &cases[1];
        assert!(whole.automorphism_side && whole.condition_side && whole.agrees);
        assert!(matches!(
            verify_proposition1(&build("C4").unwrap(), lim()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn autcent_inner_cases() {
        for name in ["D8", "Heis3"] {
            let c = verify_corollary1(&build(name).unwrap(), lim()).unwrap();
            assert!(c.autcent_equals_inn && c.condition && c.agrees, "{name}");
        }
        let c = verify_corollary1(&build("M16").unwrap(), lim()).unwrap();
        assert!(c.agrees);
    }

    #[test]
    fn hom_to_aut_correspondence() {
        for name in ["D8", "Q8"] {
            let g = build(name).unwrap();
            let c = verify_lemma0(&g, &g.center(), lim()).unwrap();
            assert!(c.hypothesis_holds);
            assert_eq!((c.hom_count, c.aut_m_order), (4, 4));
            assert_eq!(c.bijection_holds, Some(true));
            assert!(c.passes());
        }
        let e = build("C2xC2").unwrap();
        let c = verify_lemma0(&e, &e.whole(), lim()).unwrap();
        assert!(!c.hypothesis_holds);
        assert_eq!(c.bijection_holds, None);
    }

    #[test]
    fn autcent_hom_counts() {
        for (name, n) in [("D8", 4u32), ("Q8", 4), ("Heis3", 9)] {
            let c = verify_lemma0a(&build(name).unwrap(), lim()).unwrap();
            assert_eq!(c.autcent_order, n as usize, "{name}");
            assert_eq!(c.formula, BigUint::from(n));
            assert!(c.agrees && c.correspondence_bijective);
        }
        assert_eq!(
            verify_lemma0a(&build("D8xC2").unwrap(), lim()),
            Err(Error::NotPurelyNonabelian)
        );
    }

    #[test]
    fn abelian_factor_witnesses() {
        let c = verify_lemma3(&build("D8").unwrap(), lim()).unwrap();
        assert!(c.autcent_equals_aut_zz && c.purely_nonabelian && c.holds);
        for name in ["D8xC2", "Q8xC4"] {
            let c = verify_lemma3(&build(name).unwrap(), lim()).unwrap();
            assert!(
                !c.purely_nonabelian && !c.autcent_equals_aut_zz && c.holds,
                "{name}"
            );
            let w = c.witness.unwrap();
            assert!(w.is_valid());
        }
    }

    #[test]
    fn c2_is_an_abelian_exception() {
        // Aut(C2) is trivial, so Autcent = Aut^Z_Z even though C2 is its own
        // abelian direct factor; only non-abelian groups are checked.
        let g = build("C2").unwrap();
        let a = Analysis::new(&g, lim());
        assert_eq!(a.autcent().unwrap(), a.aut_zz().unwrap());
        assert!(!a.is_purely_nonabelian().unwrap());
        assert!(matches!(
            a.verify_lemma3(),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn aut_zz_inner_cases() {
        let c = verify_attar(&build("C4").unwrap(), lim()).unwrap();
        assert!(c.aut_zz_equals_inn && c.condition && c.agrees);
        let c = verify_attar(&build("D8").unwrap(), lim()).unwrap();
        assert!(c.aut_zz_equals_inn && c.condition);
    }

    #[test]
    fn threshold_sweeps_small() {
        for p in [2, 3] {
            let s = verify_lemma4_sweep(p, 3).unwrap();
            assert!(s.passes());
            assert!(s.triples > 0);
        }
    }

    #[test]
    fn report_verdicts() {
        let r = run_checks("D8", &build("D8").unwrap(), &Check::ALL, lim());
        assert_eq!(r.verdict, Verdict::Agree);
        assert_eq!(r.lemma_checks.len(), 8);
        assert!(r.oracle_side.is_some());
        let r = run_checks("S3", &build("S3").unwrap(), &Check::ALL, lim());
        assert_eq!(r.verdict, Verdict::NotApplicable);
        let tight = Limits {
            aut_budget: 2,
            ..lim()
        };
        let r = run_checks("Q8", &build("Q8").unwrap(), &[Check::Theorem], tight);
        assert_eq!(r.verdict, Verdict::Error);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::from_name(c.name()), Some(c));
        }
        assert_eq!(Check::from_name("nope"), None);
    }
}
