//! Exhaustive automorphism enumeration and the classification filters built
//! on top of it: inner, central, centralizing a quotient, fixing a subgroup.
//! Also the correspondence between homomorphisms into a central subgroup and
//! automorphisms `x ↦ x·f(x)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{extend_on_generated, Group, Limits, Subgroup};

/// A permutation of element indices that respects multiplication.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Automorphism {
    images: Vec<usize>,
}

impl Automorphism {
    pub fn identity(g: &Group) -> Automorphism {
        Automorphism {
            images: (0..g.order()).collect(),
        }
    }

    /// Validates bijectivity and the homomorphism property over all pairs.
    pub fn from_images(g: &Group, images: Vec<usize>) -> Result<Automorphism> {
        let n = g.order();
        let mut seen = vec![false; n];
        if images.len() != n
            || images
                .iter()
                .any(|&v| v >= n || core::mem::replace(&mut seen[v], true))
        {
            return Err(Error::InvalidInput(alloc::string::String::from(
                "image table is not a permutation",
            )));
        }
        for x in 0..n {
            for y in 0..n {
                if images[g.mul(x, y)] != g.mul(images[x], images[y]) {
                    return Err(Error::InvalidInput(alloc::format!(
                        "not multiplicative at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(Automorphism { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Automorphism { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn commutes_with(&self, other: &Automorphism) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| self.images[b] == other.images[a])
    }
}

/// A set of automorphisms kept sorted by image table and deduplicated, so
/// set equality is list equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AutSet {
    elements: Vec<Automorphism>,
}

impl AutSet {
    pub fn from_vec(mut elements: Vec<Automorphism>) -> AutSet {
        elements.sort_unstable();
        elements.dedup();
        AutSet { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Automorphism> {
        self.elements.iter()
    }

    pub fn contains(&self, a: &Automorphism) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    pub fn is_subset_of(&self, other: &AutSet) -> bool {
        self.elements.iter().all(|a| other.contains(a))
    }

    /// Elements of `self` missing from `other`.
    pub fn difference<'a>(
        &'a self,
        other: &'a AutSet,
    ) -> impl Iterator<Item = &'a Automorphism> + 'a {
        self.elements.iter().filter(move |a| !other.contains(a))
    }

    pub fn filter<F: FnMut(&Automorphism) -> bool>(&self, mut keep: F) -> AutSet {
        AutSet {
            elements: self.elements.iter().filter(|a| keep(a)).cloned().collect(),
        }
    }

    /// Contains the identity and is closed under composition and inversion.
    pub fn is_group(&self) -> bool {
        let Some(first) = self.elements.first() else {
            return false;
        };
        let n = first.images.len();
        let id = Automorphism {
            images: (0..n).collect(),
        };
        self.contains(&id)
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.after(b)))
            })
    }
}

impl<'a> IntoIterator for &'a AutSet {
    type Item = &'a Automorphism;
    type IntoIter = core::slice::Iter<'a, Automorphism>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Every automorphism of a p-group.
///
/// Images are assigned to a minimal generating set one generator at a time.
/// A candidate image must have the generator's order and, for p-groups, lie
/// outside `Φ(G)`; other groups fall back to a greedy generating set.
/// each partial assignment must extend to an injective homomorphism on the
/// subgroup generated so far, otherwise the branch is cut. A complete
/// assignment that survives is an automorphism.
pub fn all_automorphisms(g: &Group, limits: &Limits) -> Result<AutSet> {
    if g.order() == 1 {
        return Ok(AutSet::from_vec(vec![Automorphism::identity(g)]));
    }
    let (gens, phi) = match g.p_group_prime() {
        Some(_) => (g.minimal_generating_set()?, g.frattini_subgroup()?),
        None => (g.greedy_generating_set(), g.trivial_subgroup()),
    };
    let orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (0..g.order())
                .filter(|&y| orders[y] == orders[x] && !phi.contains(y))
                .collect()
        })
        .collect();
    let candidate_space = candidates
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));

    let mut search = Search {
        g,
        gens: &gens,
        candidates: &candidates,
        images: Vec::with_capacity(gens.len()),
        visited: 0,
        budget: limits.aut_budget,
        found: Vec::new(),
    };
    if !search.descend() {
        return Err(Error::BudgetExceeded {
            budget: limits.aut_budget,
            candidate_space,
        });
    }
    Ok(AutSet::from_vec(search.found))
}

struct Search<'a> {
    g: &'a Group,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    images: Vec<usize>,
    visited: u64,
    budget: u64,
    found: Vec<Automorphism>,
}

impl Search<'_> {
    /// Returns false once the budget is spent.
    fn descend(&mut self) -> bool {
        let level = self.images.len();
        for &y in &self.candidates[level] {
            self.visited += 1;
            if self.visited > self.budget {
                return false;
            }
            self.images.push(y);
            let partial =
                extend_on_generated(self.g, &self.gens[..=level], &self.images, self.g, true);
            if let Some(map) = partial {
                if level + 1 == self.gens.len() {
                    debug_assert!(map.iter().all(|&v| v != usize::MAX));
                    self.found.push(Automorphism { images: map });
                } else if !self.descend() {
                    return false;
                }
            }
            self.images.pop();
        }
        true
    }
}

/// Conjugation maps `x ↦ g⁻¹xg`.
pub fn inner_automorphisms(g: &Group) -> AutSet {
    AutSet::from_vec(
        (0..g.order())
            .map(|by| Automorphism {
                images: (0..g.order()).map(|x| g.conjugate(x, by)).collect(),
            })
            .collect(),
    )
}

/// `x⁻¹α(x) ∈ Z(G)` for every `x`.
pub fn is_central_automorphism(g: &Group, alpha: &Automorphism) -> bool {
    moves_into(g, alpha, &g.center())
}

fn moves_into(g: &Group, alpha: &Automorphism, target: &Subgroup) -> bool {
    let mask = target.mask(g.order());
    (0..g.order()).all(|x| mask[g.mul(g.inv(x), alpha.apply(x))])
}

/// Central automorphisms of `G` among `aut`, computed both as the centrality
/// filter and as the centralizer of `inn`; the two must agree.
pub fn autcent_within(g: &Group, aut: &AutSet, inn: &AutSet) -> Result<AutSet> {
    let center = g.center();
    let by_filter = aut.filter(|a| moves_into(g, a, &center));
    let by_centralizer = aut.filter(|a| inn.iter().all(|i| a.commutes_with(i)));
    if by_filter != by_centralizer {
        return Err(Error::InternalDisagreement(
            "central automorphisms differ from the centralizer of Inn(G)",
        ));
    }
    Ok(by_filter)
}

/// `Autcent(G)` from a full enumeration of `Aut(G)`.
pub fn autcent(g: &Group, limits: &Limits) -> Result<AutSet> {
    let aut = all_automorphisms(g, limits)?;
    autcent_within(g, &aut, &inner_automorphisms(g))
}

/// Automorphisms in `within` acting trivially on `G/N`.
pub fn aut_fixing_quotient(g: &Group, normal: &Subgroup, within: &AutSet) -> Result<AutSet> {
    if let Some((member, by)) = g.normality_witness(normal) {
        return Err(Error::NotNormal { member, by });
    }
    Ok(within.filter(|a| moves_into(g, a, normal)))
}

/// Automorphisms in `within` fixing `M` element-wise.
pub fn aut_fixing_subgroup(_g: &Group, m: &Subgroup, within: &AutSet) -> AutSet {
    within.filter(|a| m.members().iter().all(|&x| a.apply(x) == x))
}

/// A homomorphism from `G` into a central subgroup, as a value table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CentralHom {
    pub target: Subgroup,
    pub values: Vec<usize>,
}

impl CentralHom {
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_zero(&self, g: &Group) -> bool {
        self.values.iter().all(|&v| v == g.identity())
    }

    /// Every element of `s` lies in the kernel.
    pub fn kills(&self, g: &Group, s: &Subgroup) -> bool {
        s.members().iter().all(|&x| self.values[x] == g.identity())
    }
}

/// All homomorphisms `G → M` for central `M`.
///
/// `M` is abelian, so these factor through `G/γ₂(G)`: images are assigned to
/// a generating set of the abelianization and pulled back along the
/// projection. The list is in lexicographic order of generator images.
pub fn homs_to_central_subgroup(g: &Group, m: &Subgroup) -> Result<Vec<CentralHom>> {
    if !m.is_subset_of(&g.center()) {
        return Err(Error::NotCentral);
    }
    let q = g.quotient(&g.commutator_subgroup())?;
    let ab = &q.target;
    let gens = if ab.order() > 1 && ab.p_group_prime().is_some() {
        ab.minimal_generating_set()?
    } else {
        ab.greedy_generating_set()
    };
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let members = m.members();
    loop {
        let images: Vec<usize> = choice.iter().map(|&i| members[i]).collect();
        if let Some(map) = extend_on_generated(ab, &gens, &images, g, false) {
            out.push(CentralHom {
                target: m.clone(),
                values: q.projection.iter().map(|&y| map[y]).collect(),
            });
        }
        // odometer over |M|^d choices
        let mut pos = gens.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < members.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// The endomorphism `x ↦ x·f(x)` as a raw image table.
pub fn endomorphism_from_f(g: &Group, f: &CentralHom) -> Vec<usize> {
    (0..g.order()).map(|x| g.mul(x, f.apply(x))).collect()
}

/// `x ↦ x·f(x)` when it is an automorphism, decided by the criterion that
/// `f(m) ≠ m⁻¹` for every nontrivial `m` in the target.
pub fn alpha_from_f(g: &Group, f: &CentralHom) -> Option<Automorphism> {
    let accepted = f
        .target
        .members()
        .iter()
        .filter(|&&m| m != g.identity())
        .all(|&m| f.apply(m) != g.inv(m));
    if !accepted {
        return None;
    }
    let images = endomorphism_from_f(g, f);
    let mut seen = vec![false; g.order()];
    for &y in &images {
        assert!(!seen[y], "criterion accepted a non-injective endomorphism");
        seen[y] = true;
    }
    Some(Automorphism { images })
}

/// `x ↦ x⁻¹α(x)` as a homomorphism into `m`, when all values land in `m`.
pub fn f_from_alpha(g: &Group, alpha: &Automorphism, m: &Subgroup) -> Option<CentralHom> {
    let values: Vec<usize> = (0..g.order())
        .map(|x| g.mul(g.inv(x), alpha.apply(x)))
        .collect();
    values.iter().all(|&v| m.contains(v)).then(|| CentralHom {
        target: m.clone(),
        values,
    })
}

/// An internal direct decomposition `G = H × A` with `A` abelian and nontrivial.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AbelianFactor {
    pub complement: Subgroup,
    pub factor: Subgroup,
}

/// Searches normal subgroups for a nontrivial abelian `A` and a normal `H`
/// with `H ∩ A = 1`, `|H|·|A| = |G|` and `[H, A] = 1`. The smallest such `A`
/// (then the first `H`) in `(order, members)` order is returned.
pub fn find_abelian_direct_factor(g: &Group, limits: &Limits) -> Result<Option<AbelianFactor>> {
    let normals = g.normal_subgroups(limits)?;
    for a in normals.iter().filter(|a| a.order() > 1 && a.is_abelian(g)) {
        let want = g.order() / a.order();
        for h in normals.iter().filter(|h| h.order() == want) {
            if h.intersection(a).order() != 1 {
                continue;
            }
            let commute = h
                .members()
                .iter()
                .all(|&x| a.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
            if commute {
                return Ok(Some(AbelianFactor {
                    complement: h.clone(),
                    factor: a.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// No nontrivial abelian direct factor.
pub fn is_purely_nonabelian(g: &Group, limits: &Limits) -> Result<bool> {
    Ok(find_abelian_direct_factor(g, limits)?.is_none())
}
