//! Finite groups as dense multiplication tables, plus the subgroup and
//! quotient machinery the rest of the crate is built on.
//!
//! Elements are indices `0..n`. Subsets are kept as strictly increasing
//! index lists so that equality of subgroups is plain list equality.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default cap on the number of elements of any constructed group.
pub const DEFAULT_ELEMENT_CAP: usize = 512;

/// Resource caps shared by the enumeration routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Limits {
    /// Largest group any constructor will produce.
    pub max_elements: usize,
    /// Largest subgroup whose full subgroup lattice may be enumerated.
    pub max_lattice_source: usize,
    /// Largest number of subgroups a lattice enumeration may return.
    pub max_subgroups: usize,
    /// Search-tree nodes the automorphism enumerator may visit.
    pub aut_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: DEFAULT_ELEMENT_CAP,
            max_lattice_source: 256,
            max_subgroups: 100_000,
            aut_budget: 10_000_000,
        }
    }
}

/// A finite group with a full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    n: usize,
    // row-major n×n
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Group {
    /// Validates a Cayley table and locates identity and inverses.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup {
                reason: "empty table",
                witness: [0; 3],
            });
        }
        if n > DEFAULT_ELEMENT_CAP {
            return Err(Error::SizeLimitExceeded {
                what: "Cayley table",
                cap: DEFAULT_ELEMENT_CAP,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup {
                    reason: "row length differs from element count",
                    witness: [x, row.len(), n],
                });
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotAGroup {
                        reason: "table entry out of range",
                        witness: [x, y, v],
                    });
                }
            }
            mul.extend_from_slice(row);
        }
        Self::from_flat(n, mul)
    }

    fn from_flat(n: usize, mul: Vec<usize>) -> Result<Group> {
        let at = |x: usize, y: usize| mul[x * n + y];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NotAGroup {
                reason: "no two-sided identity",
                witness: [0; 3],
            })?;
        let mut inv = vec![0; n];
        for (x, slot) in inv.iter_mut().enumerate() {
            let y = (0..n)
                .find(|&y| at(x, y) == identity)
                .ok_or(Error::NotAGroup {
                    reason: "element has no inverse",
                    witness: [x, identity, identity],
                })?;
            if at(y, x) != identity {
                return Err(Error::NotAGroup {
                    reason: "right inverse is not a left inverse",
                    witness: [x, y, identity],
                });
            }
            *slot = y;
        }
        for x in 0..n {
            for y in 0..n {
                let xy = at(x, y);
                for z in 0..n {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(Error::NotAGroup {
                            reason: "associativity fails",
                            witness: [x, y, z],
                        });
                    }
                }
            }
        }
        Ok(Group {
            n,
            mul,
            identity,
            inv,
            labels: None,
        })
    }

    /// Closure of permutation generators on `0..degree`.
    ///
    /// Products compose left to right: `(p*q)(i) = q(p(i))`. Elements are
    /// numbered in breadth-first discovery order starting from the identity,
    /// extending each discovered element by the generators in the given order.
    pub fn from_permutation_generators(
        degree: usize,
        gens: &[Vec<usize>],
        cap: usize,
    ) -> Result<Group> {
        for (i, g) in gens.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree
                || g.iter()
                    .any(|&v| v >= degree || core::mem::replace(&mut seen[v], true))
            {
                return Err(Error::InvalidInput(format!(
                    "generator {i} is not a permutation of 0..{degree}"
                )));
            }
        }
        let compose =
            |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&i| q[i]).collect() };
        let mut elems: Vec<Vec<usize>> = vec![(0..degree).collect()];
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        index.insert(elems[0].clone(), 0);
        let mut head = 0;
        while head < elems.len() {
            for g in gens {
                let next = compose(&elems[head], g);
                if !index.contains_key(&next) {
                    if elems.len() >= cap {
                        return Err(Error::SizeLimitExceeded {
                            what: "permutation closure",
                            cap,
                        });
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
            head += 1;
        }
        let n = elems.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                mul.push(index[&compose(a, b)]);
            }
        }
        Self::from_flat(n, mul)
    }

    /// Attaches human-readable element names.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Group> {
        if labels.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// `[x, y] = x⁻¹y⁻¹xy`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv[x], self.inv[y]), self.mul(x, y))
    }

    /// `y⁻¹xy`.
    pub fn conjugate(&self, x: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv[by], x), by)
    }

    pub fn pow(&self, x: usize, mut k: u64) -> usize {
        let mut base = x;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.mul[x * self.n..(x + 1) * self.n]
    }

    /// The multiplication table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// The same group with element `x` renamed to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Group> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&v| v >= n || core::mem::replace(&mut seen[v], true))
        {
            return Err(Error::InvalidInput(String::from(
                "relabeling is not a permutation",
            )));
        }
        let mut mul = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        Self::from_flat(n, mul)
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, x| lcm(acc, self.element_order(x)))
    }

    /// The prime `p` with `|G| = p^k`, `k ≥ 1`.
    pub fn p_group_prime(&self) -> Option<u64> {
        prime_power_base(self.n as u64)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.n).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![self.identity],
        }
    }

    pub fn center(&self) -> Subgroup {
        Subgroup {
            members: (0..self.n)
                .filter(|&z| (0..self.n).all(|g| self.mul(g, z) == self.mul(z, g)))
                .collect(),
        }
    }

    /// The subgroup generated by all commutators `[g, h]`.
    pub fn commutator_subgroup(&self) -> Subgroup {
        let seed: BTreeSet<usize> = (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        self.subgroup_generated(seed)
    }

    /// The smallest subgroup containing `seed`.
    pub fn subgroup_generated<I: IntoIterator<Item = usize>>(&self, seed: I) -> Subgroup {
        let gens: Vec<usize> = seed.into_iter().filter(|&x| x != self.identity).collect();
        let mut inside = vec![false; self.n];
        inside[self.identity] = true;
        let mut found = vec![self.identity];
        let mut head = 0;
        while head < found.len() {
            let x = found[head];
            for &s in &gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    found.push(y);
                }
            }
            head += 1;
        }
        found.sort_unstable();
        Subgroup { members: found }
    }

    /// `[A, B]` for subsets given as subgroups.
    pub fn commutator_of(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let seed: BTreeSet<usize> = a
            .members
            .iter()
            .flat_map(|&x| b.members.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        self.subgroup_generated(seed)
    }

    /// Lower central series `G = γ₁ ≥ γ₂ ≥ …`, ending at the first repeat.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        loop {
            let next = self.commutator_of(series.last().unwrap(), &whole);
            if &next == series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// Number of steps from `G` down to the trivial subgroup; 0 for the trivial group.
    pub fn nilpotency_class(&self) -> Result<usize> {
        let series = self.lower_central_series();
        if series.last().unwrap().order() != 1 {
            return Err(Error::NotNilpotent);
        }
        Ok(series.len() - 1)
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.normality_witness(s).is_none()
    }

    /// Some `(member, by)` with `by⁻¹·member·by` outside `s`, if `s` is not normal.
    pub fn normality_witness(&self, s: &Subgroup) -> Option<(usize, usize)> {
        let mask = s.mask(self.n);
        for by in 0..self.n {
            for &m in &s.members {
                if !mask[self.conjugate(m, by)] {
                    return Some((m, by));
                }
            }
        }
        None
    }

    /// Quotient by a normal subgroup on least-index coset representatives.
    pub fn quotient(&self, normal: &Subgroup) -> Result<QuotientMap> {
        if let Some((member, by)) = self.normality_witness(normal) {
            return Err(Error::NotNormal { member, by });
        }
        let unset = usize::MAX;
        let mut projection = vec![unset; self.n];
        let mut representatives = Vec::new();
        for x in 0..self.n {
            if projection[x] != unset {
                continue;
            }
            let idx = representatives.len();
            representatives.push(x);
            for &m in &normal.members {
                projection[self.mul(x, m)] = idx;
            }
        }
        let q = representatives.len();
        let table: Vec<Vec<usize>> = representatives
            .iter()
            .map(|&a| {
                representatives
                    .iter()
                    .map(|&b| projection[self.mul(a, b)])
                    .collect()
            })
            .collect();
        let target = Group::from_cayley_table(&table)?;
        debug_assert_eq!(q * normal.order(), self.n);
        Ok(QuotientMap {
            target,
            projection,
            representatives,
        })
    }

    /// Frattini subgroup of a p-group, generated by p-th powers and commutators.
    pub fn frattini_subgroup(&self) -> Result<Subgroup> {
        self.frattini_of(&self.whole())
    }

    /// Frattini subgroup of a p-subgroup `s`.
    pub fn frattini_of(&self, s: &Subgroup) -> Result<Subgroup> {
        if s.order() == 1 {
            return Ok(self.trivial_subgroup());
        }
        let p = prime_power_base(s.order() as u64).ok_or(Error::NotPGroup)?;
        let mut seed: BTreeSet<usize> = s.members.iter().map(|&x| self.pow(x, p)).collect();
        seed.extend(
            s.members
                .iter()
                .flat_map(|&x| s.members.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.commutator(x, y)),
        );
        Ok(self.subgroup_generated(seed))
    }

    /// Every subgroup of `s`, sorted by `(order, members)`.
    ///
    /// Built by cyclic extension: start from the cyclic subgroups and keep
    /// joining known subgroups with cyclic ones until nothing new appears.
    pub fn all_subgroups_of(&self, s: &Subgroup, limits: &Limits) -> Result<Vec<Subgroup>> {
        if s.order() > limits.max_lattice_source {
            return Err(Error::SizeLimitExceeded {
                what: "subgroup lattice source",
                cap: limits.max_lattice_source,
            });
        }
        // one generator per distinct cyclic subgroup
        let mut cyclic: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &x in &s.members {
            cyclic
                .entry(self.subgroup_generated([x]).members)
                .or_insert(x);
        }
        let cyclic_gens: Vec<usize> = cyclic.values().copied().collect();
        let mut known: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let mut frontier: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for (members, &g) in &cyclic {
            let gens = if members.len() == 1 {
                Vec::new()
            } else {
                vec![g]
            };
            known.insert(members.clone(), gens.clone());
            frontier.push((members.clone(), gens));
        }
        while let Some((members, gens)) = frontier.pop() {
            let mask = mask_of(&members, self.n);
            for &c in &cyclic_gens {
                if mask[c] {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(c);
                let joined = self.subgroup_generated(joined_gens.iter().copied());
                if known.contains_key(&joined.members) {
                    continue;
                }
                if known.len() >= limits.max_subgroups {
                    return Err(Error::SizeLimitExceeded {
                        what: "subgroup count",
                        cap: limits.max_subgroups,
                    });
                }
                known.insert(joined.members.clone(), joined_gens.clone());
                frontier.push((joined.members, joined_gens));
            }
        }
        let mut out: Vec<Subgroup> = known
            .into_keys()
            .map(|members| Subgroup { members })
            .collect();
        out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        Ok(out)
    }

    /// Every normal subgroup, sorted by `(order, members)`.
    ///
    /// Each normal subgroup is a join of normal closures of single elements,
    /// so those closures seed a join search.
    pub fn normal_subgroups(&self, limits: &Limits) -> Result<Vec<Subgroup>> {
        let mut closures: BTreeSet<Vec<usize>> = BTreeSet::new();
        for x in 0..self.n {
            let conj: BTreeSet<usize> = (0..self.n).map(|g| self.conjugate(x, g)).collect();
            closures.insert(self.subgroup_generated(conj).members);
        }
        let closures: Vec<Vec<usize>> = closures.into_iter().collect();
        let mut known: BTreeSet<Vec<usize>> = closures.iter().cloned().collect();
        let mut frontier: Vec<Vec<usize>> = closures.clone();
        while let Some(members) = frontier.pop() {
            let mask = mask_of(&members, self.n);
            for c in &closures {
                if c.iter().all(|&x| mask[x]) {
                    continue;
                }
                let joined = self.subgroup_generated(members.iter().chain(c).copied());
                if known.contains(&joined.members) {
                    continue;
                }
                if known.len() >= limits.max_subgroups {
                    return Err(Error::SizeLimitExceeded {
                        what: "normal subgroup count",
                        cap: limits.max_subgroups,
                    });
                }
                known.insert(joined.members.clone());
                frontier.push(joined.members);
            }
        }
        let mut out: Vec<Subgroup> = known
            .into_iter()
            .map(|members| Subgroup { members })
            .collect();
        out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        Ok(out)
    }

    /// Direct product with element `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(&self, other: &Group) -> Result<Group> {
        self.direct_product_capped(other, DEFAULT_ELEMENT_CAP)
    }

    pub fn direct_product_capped(&self, other: &Group, cap: usize) -> Result<Group> {
        let (a, b) = (self.n, other.n);
        let n = a
            .checked_mul(b)
            .filter(|&n| n <= cap)
            .ok_or(Error::SizeLimitExceeded {
                what: "direct product",
                cap,
            })?;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (g1, h1) = (x / b, x % b);
            for y in 0..n {
                let (g2, h2) = (y / b, y % b);
                mul.push(self.mul(g1, g2) * b + other.mul(h1, h2));
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(l1), Some(l2)) => Some(
                (0..n)
                    .map(|x| format!("({},{})", l1[x / b], l2[x % b]))
                    .collect(),
            ),
            _ => None,
        };
        let inv = (0..n)
            .map(|x| self.inv(x / b) * b + other.inv(x % b))
            .collect();
        Ok(Group {
            n,
            mul,
            identity: self.identity * b + other.identity,
            inv,
            labels,
        })
    }

    /// A generating set of the p-subgroup `s` whose size is the rank of
    /// `s/Φ(s)`: elements are taken by decreasing order, then index, whenever
    /// they fall outside the span of `Φ(s)` and the elements already chosen.
    pub fn minimal_generating_set_of(&self, s: &Subgroup) -> Result<Vec<usize>> {
        let phi = self.frattini_of(s)?;
        let mut order: Vec<(usize, usize)> = s
            .members
            .iter()
            .map(|&x| (self.element_order(x), x))
            .collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut gens = Vec::new();
        let mut span = phi.clone();
        let mut mask = span.mask(self.n);
        for (_, x) in order {
            if span.order() == s.order() {
                break;
            }
            if mask[x] {
                continue;
            }
            gens.push(x);
            span = self.subgroup_generated(phi.members.iter().chain(&gens).copied());
            mask = span.mask(self.n);
        }
        Ok(gens)
    }

    pub fn minimal_generating_set(&self) -> Result<Vec<usize>> {
        if self.n > 1 && self.p_group_prime().is_none() {
            return Err(Error::NotPGroup);
        }
        self.minimal_generating_set_of(&self.whole())
    }

    /// A generating set for any finite group: greedily add the first element
    /// outside the span so far.
    pub fn greedy_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        while span.order() < self.n {
            let mask = span.mask(self.n);
            let x = (0..self.n).find(|&x| !mask[x]).unwrap();
            gens.push(x);
            span = self.subgroup_generated(gens.iter().copied());
        }
        gens
    }

    /// Whether the subgroup `s` is cyclic.
    pub fn is_cyclic(&self, s: &Subgroup) -> bool {
        s.members
            .iter()
            .any(|&x| self.element_order(x) == s.order())
    }
}

/// A subgroup as the sorted list of its member indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates that `members` is a subgroup of `g`.
    pub fn new(g: &Group, mut members: Vec<usize>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x >= g.order()) {
            return Err(Error::InvalidInput(String::from(
                "subgroup member out of range",
            )));
        }
        let mask = mask_of(&members, g.order());
        if !mask[g.identity()] {
            return Err(Error::InvalidInput(String::from(
                "subset lacks the identity",
            )));
        }
        for &x in &members {
            if !mask[g.inv(x)] || members.iter().any(|&y| !mask[g.mul(x, y)]) {
                return Err(Error::InvalidInput(format!(
                    "subset is not closed at element {x}"
                )));
            }
        }
        debug_assert_eq!(g.order() % members.len(), 0);
        Ok(Subgroup { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    /// Membership table of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        mask_of(&self.members, n)
    }

    pub fn exponent(&self, g: &Group) -> usize {
        self.members
            .iter()
            .fold(1, |acc, &x| lcm(acc, g.element_order(x)))
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        self.members
            .iter()
            .all(|&x| self.members.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }
}

/// A surjective homomorphism onto a quotient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub target: Group,
    /// source index → target index
    pub projection: Vec<usize>,
    /// least source index of each coset, indexed by target element
    pub representatives: Vec<usize>,
}

fn mask_of(members: &[usize], n: usize) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &x in members {
        mask[x] = true;
    }
    mask
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// `Some(p)` when `n = p^k` with `k ≥ 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Integer `k` with `p^k = n`, if any.
pub fn exact_log(p: u64, mut n: u64) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// Extends `gens[i] ↦ images[i]` over the subgroup generated by `gens`,
/// requiring `φ(x·s) = φ(x)·φ(s)` on every edge of the breadth-first walk.
/// Elements outside that subgroup map to `usize::MAX`. With `injective`, the
/// extension must also be one-to-one.
pub(crate) fn extend_on_generated(
    src: &Group,
    gens: &[usize],
    images: &[usize],
    dst: &Group,
    injective: bool,
) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; src.order()];
    let mut used = if injective {
        vec![false; dst.order()]
    } else {
        Vec::new()
    };
    map[src.identity()] = dst.identity();
    if injective {
        used[dst.identity()] = true;
    }
    let mut queue = vec![src.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = src.mul(x, s);
            let img = dst.mul(map[x], t);
            if map[y] == UNSET {
                if injective {
                    if used[img] {
                        return None;
                    }
                    used[img] = true;
                }
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}
