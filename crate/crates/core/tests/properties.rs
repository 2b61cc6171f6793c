use centauts_core::abelian::{hom_order, invariants, AbelianType};
use centauts_core::automorphism::{all_automorphisms, autcent, inner_automorphisms};
use centauts_core::catalog::{self, catalog};
use centauts_core::theory::{theorem_condition, Analysis};
use centauts_core::{Group, Limits, Subgroup};
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_groups(max: usize) -> Vec<(&'static str, Group)> {
    catalog()
        .into_iter()
        .filter(|e| e.order <= max)
        .map(|e| (e.name, e.build().unwrap()))
        .collect()
}

fn abelian_type() -> impl Strategy<Value = AbelianType> {
    (
        prop_oneof![Just(2u64), Just(3u64)],
        prop::collection::vec(1u32..=3, 0..=3),
    )
        .prop_filter("order within the element cap", |(p, e)| {
            p.pow(e.iter().sum::<u32>()) <= 512
        })
        .prop_map(|(p, e)| AbelianType::from_unsorted(p, e).unwrap())
}

fn realize(t: &AbelianType) -> Group {
    catalog::abelian(t.p() as usize, t.exps()).unwrap()
}

fn elements_killed_by(g: &Group, k: u64) -> u64 {
    (0..g.order())
        .filter(|&x| g.pow(x, k) == g.identity())
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn abelian_invariants_round_trip(t in abelian_type()) {
        let g = realize(&t);
        prop_assert_eq!(invariants(&g, t.p()).unwrap(), t);
    }

    #[test]
    fn hom_order_is_symmetric(a in abelian_type(), b in abelian_type()) {
        prop_assume!(a.p() == b.p());
        prop_assert_eq!(hom_order(&a, &b).unwrap(), hom_order(&b, &a).unwrap());
    }

    #[test]
    fn hom_order_matches_element_census(a in abelian_type(), b in abelian_type()) {
        prop_assume!(a.p() == b.p() && b.log_order() <= 5);
        let target = realize(&b);
        let count: BigUint = a
            .exps()
            .iter()
            .map(|&e| BigUint::from(elements_killed_by(&target, a.p().pow(e))))
            .product();
        prop_assert_eq!(hom_order(&a, &b).unwrap(), count);
    }

    #[test]
    fn relabeling_preserves_everything(idx in 0usize..64, seed in any::<u64>()) {
        let groups = small_groups(32);
        let (name, g) = &groups[idx % groups.len()];
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(h.center().order(), g.center().order(), "{}", name);
        prop_assert_eq!(h.nilpotency_class().ok(), g.nilpotency_class().ok());
        prop_assert_eq!(h.exponent(), g.exponent());
        prop_assert_eq!(theorem_condition(&h).ok(), theorem_condition(g).ok());
        let limits = Limits::default();
        prop_assert_eq!(
            all_automorphisms(&h, &limits).unwrap().len(),
            all_automorphisms(g, &limits).unwrap().len()
        );
        prop_assert_eq!(autcent(&h, &limits).unwrap().len(), autcent(g, &limits).unwrap().len());
    }
}

#[test]
fn frattini_is_intersection_of_maximal_subgroups() {
    let limits = Limits::default();
    for (name, g) in small_groups(64) {
        let Some(p) = g.p_group_prime() else { continue };
        let subgroups = g.all_subgroups_of(&g.whole(), &limits).unwrap();
        let mut meet = g.whole();
        for s in subgroups
            .iter()
            .filter(|s| s.order() * p as usize == g.order())
        {
            meet = meet.intersection(s);
        }
        assert_eq!(g.frattini_subgroup().unwrap(), meet, "{name}");
    }
}

#[test]
fn automorphism_sets_are_groups() {
    let limits = Limits::default();
    for (name, g) in small_groups(32) {
        let a = Analysis::new(&g, limits);
        let aut = a.aut().unwrap();
        if aut.len() <= 1536 {
            assert!(aut.is_group(), "{name}");
        }
        assert!(a.autcent().unwrap().is_group(), "{name}");
        assert!(a.inn().is_group(), "{name}");
        if g.p_group_prime().is_some() {
            assert!(a.aut_zz().unwrap().is_group(), "{name}");
        }
    }
}

#[test]
fn inner_automorphisms_count_cosets_of_center() {
    for (name, g) in small_groups(81) {
        assert_eq!(
            inner_automorphisms(&g).len() * g.center().order(),
            g.order(),
            "{name}"
        );
    }
}

#[test]
fn class_two_centers_contain_commutators() {
    for (name, g) in small_groups(125) {
        let gamma2: Subgroup = g.commutator_subgroup();
        let inside = gamma2.is_subset_of(&g.center());
        assert_eq!(
            inside,
            g.nilpotency_class().map(|c| c <= 2).unwrap_or(false),
            "{name}"
        );
    }
}
