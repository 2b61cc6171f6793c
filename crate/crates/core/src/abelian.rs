//! Invariant-factor types of finite abelian p-groups and Hom-group orders.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::{exact_log, prime_power_base, Group, Subgroup};

/// `C_{p^a₁} × … × C_{p^a_r}` with `a₁ ≥ … ≥ a_r > 0`; no factors is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AbelianType {
    p: u64,
    exps: Vec<u32>,
}

impl AbelianType {
    /// Checks that `exps` is strictly positive and nonincreasing.
    pub fn new(p: u64, exps: Vec<u32>) -> Result<AbelianType> {
        if prime_power_base(p) != Some(p) {
            return Err(Error::InvalidInput(alloc::format!("{p} is not prime")));
        }
        if exps.contains(&0) || exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(alloc::format!(
                "exponents {exps:?} are not positive and nonincreasing"
            )));
        }
        Ok(AbelianType { p, exps })
    }

    /// Sorts and drops zero exponents.
    pub fn from_unsorted(p: u64, mut exps: Vec<u32>) -> Result<AbelianType> {
        exps.retain(|&e| e > 0);
        exps.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(p, exps)
    }

    pub fn trivial(p: u64) -> AbelianType {
        AbelianType {
            p,
            exps: Vec::new(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    /// `k` with order `p^k`.
    pub fn log_order(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `e` with exponent `p^e`.
    pub fn log_exponent(&self) -> u32 {
        self.exps.first().copied().unwrap_or(0)
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.log_order())
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.is_empty()
    }

    /// Factors `range` of the decomposition as a type of its own.
    pub fn slice(&self, range: core::ops::Range<usize>) -> AbelianType {
        AbelianType {
            p: self.p,
            exps: self.exps[range].to_vec(),
        }
    }

    /// Every type of order `p^m`, in reverse lexicographic order of exponents.
    pub fn all_of_log_order(p: u64, m: u32) -> Vec<AbelianType> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                rec(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out.into_iter()
            .map(|exps| AbelianType { p, exps })
            .collect()
    }

    /// Every type of order at most `p^max`.
    pub fn all_up_to(p: u64, max: u32) -> Vec<AbelianType> {
        (0..=max)
            .flat_map(|m| Self::all_of_log_order(p, m))
            .collect()
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, e) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "C{}", self.p.pow(*e))?;
        }
        Ok(())
    }
}

/// Recovers the type from element orders.
///
/// The number of `x` with `x^(p^i) = 1` is `p^(Σ_j min(a_j, i))`, so the
/// successive differences of those logarithms count the `a_j ≥ i`.
fn type_from_orders<I: IntoIterator<Item = usize>>(p: u64, orders: I) -> Result<AbelianType> {
    let mut logs: Vec<u32> = Vec::new();
    for o in orders {
        logs.push(exact_log(p, o as u64).ok_or(Error::NotPGroup)?);
    }
    let top = logs.iter().copied().max().unwrap_or(0) as usize;
    let mut census = vec![0u64; top + 1];
    for &l in &logs {
        census[l as usize] += 1;
    }
    let mut cumulative = Vec::with_capacity(top + 1);
    let mut running = 0;
    for c in census {
        running += c;
        cumulative.push(exact_log(p, running).ok_or(Error::InternalDisagreement(
            "element census is not a prime power",
        ))?);
    }
    // at_least[i] = #{j : a_j ≥ i}
    let mut at_least = vec![0u32; top + 2];
    for i in 1..=top {
        at_least[i] = cumulative[i] - cumulative[i - 1];
    }
    let mut exps = Vec::new();
    for i in (1..=top).rev() {
        let multiplicity =
            at_least[i]
                .checked_sub(at_least[i + 1])
                .ok_or(Error::InternalDisagreement(
                    "element census is not a valid type",
                ))?;
        exps.extend(core::iter::repeat_n(i as u32, multiplicity as usize));
    }
    Ok(AbelianType { p, exps })
}

/// The invariant type of an abelian p-group.
pub fn invariants(g: &Group, p: u64) -> Result<AbelianType> {
    subgroup_invariants(g, &g.whole(), p)
}

/// The invariant type of an abelian p-subgroup.
pub fn subgroup_invariants(g: &Group, s: &Subgroup, p: u64) -> Result<AbelianType> {
    if !s.is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    if s.order() > 1 {
        match prime_power_base(s.order() as u64) {
            Some(q) if q == p => {}
            Some(q) => return Err(Error::PrimeMismatch(p, q)),
            None => return Err(Error::NotPGroup),
        }
    }
    type_from_orders(p, s.members().iter().map(|&x| g.element_order(x)))
}

/// Type of `G/N` for normal `N` with abelian quotient.
pub fn quotient_type(g: &Group, normal: &Subgroup, p: u64) -> Result<AbelianType> {
    invariants(&g.quotient(normal)?.target, p)
}

/// `|Hom(A, B)| = Π_{i,j} p^min(a_i, b_j)`.
pub fn hom_order(a: &AbelianType, b: &AbelianType) -> Result<BigUint> {
    if a.p != b.p {
        return Err(Error::PrimeMismatch(a.p, b.p));
    }
    let log: u32 = a
        .exps
        .iter()
        .map(|&x| b.exps.iter().map(|&y| x.min(y)).sum::<u32>())
        .sum();
    Ok(BigUint::from(a.p).pow(log))
}

/// The data attached to a p-group of class 2: the types of `G/Z(G)` and
/// `G/γ₂(G)`, the common exponent `p^c`, the number `k` of leading factors of
/// `G/Z(G)` of exponent exactly `c`, and the splits at `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassTwoInvariants {
    pub p: u64,
    /// type of `G/Z(G)`, exponents `a_j`
    pub z_type: AbelianType,
    /// type of `G/γ₂(G)`, exponents `b_j`
    pub ab_type: AbelianType,
    pub c: u32,
    pub k: usize,
    pub m_bar_type: AbelianType,
    pub n_bar_type: AbelianType,
    pub z_residual: AbelianType,
    pub ab_residual: AbelianType,
    pub exp_z: u64,
    pub exp_gamma2: u64,
}

impl ClassTwoInvariants {
    pub fn r(&self) -> usize {
        self.z_type.rank()
    }

    pub fn s(&self) -> usize {
        self.ab_type.rank()
    }
}

/// Computes [`ClassTwoInvariants`] and checks the relations every class-2
/// p-group must satisfy (`k ≥ 2`, `r ≤ s`, `b_j ≥ a_j`, equal exponents of
/// `G/Z(G)` and `γ₂(G)`).
pub fn class_two_invariants(g: &Group) -> Result<ClassTwoInvariants> {
    let p = g.p_group_prime().ok_or(Error::NotPGroup)?;
    let class = g.nilpotency_class()?;
    if class != 2 {
        return Err(Error::WrongClass(class));
    }
    let z = g.center();
    let gamma2 = g.commutator_subgroup();
    let z_type = quotient_type(g, &z, p)?;
    let ab_type = quotient_type(g, &gamma2, p)?;
    let c = z_type.log_exponent();
    let exp_gamma2 = gamma2.exponent(g) as u64;
    if exp_gamma2 != p.pow(c) {
        return Err(Error::InternalDisagreement(
            "exponents of G/Z(G) and the commutator subgroup differ",
        ));
    }
    let k = z_type.exps.iter().take_while(|&&a| a == c).count();
    if k < 2 {
        return Err(Error::InternalDisagreement(
            "fewer than two factors of maximal exponent",
        ));
    }
    let (r, s) = (z_type.rank(), ab_type.rank());
    if r > s || (0..r).any(|j| ab_type.exps[j] < z_type.exps[j]) {
        return Err(Error::InternalDisagreement(
            "G/Z(G) type is not dominated by the abelianization type",
        ));
    }
    Ok(ClassTwoInvariants {
        p,
        m_bar_type: z_type.slice(0..k),
        n_bar_type: ab_type.slice(0..k),
        z_residual: z_type.slice(k..r),
        ab_residual: ab_type.slice(k..s),
        z_type,
        ab_type,
        c,
        k,
        exp_z: z.exponent(g) as u64,
        exp_gamma2,
    })
}

/// Result of comparing `|Hom(A, C)|` with `|Hom(B, C)|` for `A` dominated by `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Lemma4Outcome {
    /// 1-based index of the last factor where `a_t ≠ b_t`
    pub t: usize,
    #[cfg_attr(feature = "serde", serde(with = "crate::theory::big_string"))]
    pub threshold: BigUint,
    /// exponent of `C` is at least `threshold`
    pub strict: bool,
    #[cfg_attr(feature = "serde", serde(with = "crate::theory::big_string"))]
    pub hom_a: BigUint,
    #[cfg_attr(feature = "serde", serde(with = "crate::theory::big_string"))]
    pub hom_b: BigUint,
}

impl Lemma4Outcome {
    /// The threshold test agrees with the Hom-order comparison.
    pub fn equivalence_holds(&self) -> bool {
        self.strict == (self.hom_a < self.hom_b)
    }
}

/// For `A`, `B` with the same number of factors, `b_j ≥ a_j` everywhere and
/// `b_j > a_j` somewhere: `|Hom(A, C)| < |Hom(B, C)|` should hold exactly when
/// the exponent of `C` reaches `p^(a_t + 1)`.
pub fn lemma4_compare(a: &AbelianType, b: &AbelianType, c: &AbelianType) -> Result<Lemma4Outcome> {
    if a.p != b.p {
        return Err(Error::PrimeMismatch(a.p, b.p));
    }
    if a.p != c.p {
        return Err(Error::PrimeMismatch(a.p, c.p));
    }
    if a.rank() != b.rank() {
        return Err(Error::HypothesisViolated(
            "A and B have different numbers of factors",
        ));
    }
    if a.exps.iter().zip(&b.exps).any(|(x, y)| y < x) {
        return Err(Error::HypothesisViolated("some b_j < a_j"));
    }
    let t = a
        .exps
        .iter()
        .zip(&b.exps)
        .rposition(|(x, y)| x != y)
        .ok_or(Error::HypothesisViolated("A and B are equal"))?
        + 1;
    let a_t = a.exps[t - 1];
    let threshold = BigUint::from(a.p).pow(a_t + 1);
    Ok(Lemma4Outcome {
        t,
        strict: c.log_exponent() > a_t,
        threshold,
        hom_a: hom_order(a, c)?,
        hom_b: hom_order(b, c)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ty(p: u64, e: &[u32]) -> AbelianType {
        AbelianType::new(p, e.to_vec()).unwrap()
    }

    #[test]
    fn type_validation() {
        assert!(AbelianType::new(2, vec![1, 2]).is_err());
        assert!(AbelianType::new(2, vec![2, 0]).is_err());
        assert!(AbelianType::new(4, vec![1]).is_err());
        assert_eq!(
            AbelianType::from_unsorted(3, vec![0, 1, 2]).unwrap(),
            ty(3, &[2, 1])
        );
        assert_eq!(AbelianType::all_of_log_order(2, 4).len(), 5);
        assert_eq!(AbelianType::all_up_to(2, 3).len(), 1 + 1 + 2 + 3);
    }

    #[test]
    fn census_examples() {
        let t = Group::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(invariants(&t, 2).unwrap(), AbelianType::trivial(2));
        let c2c4 = catalog::build("C2xC4").unwrap();
        assert_eq!(invariants(&c2c4, 2).unwrap(), ty(2, &[2, 1]));
        let k4 = catalog::build("C2xC2").unwrap();
        assert_eq!(invariants(&k4, 2).unwrap(), ty(2, &[1, 1]));
        let q8 = catalog::build("Q8").unwrap();
        assert_eq!(invariants(&q8, 2), Err(Error::NotAbelian));
        let c6 = catalog::build("C6").unwrap();
        assert_eq!(invariants(&c6, 2), Err(Error::NotPGroup));
        assert_eq!(invariants(&k4, 3), Err(Error::PrimeMismatch(3, 2)));
    }

    #[test]
    fn hom_order_examples() {
        assert_eq!(
            hom_order(&ty(2, &[]), &ty(2, &[3, 1])).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            hom_order(&ty(2, &[1]), &ty(2, &[1])).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            hom_order(&ty(2, &[2, 1]), &ty(2, &[1, 1])).unwrap(),
            BigUint::from(16u32)
        );
        assert_eq!(
            hom_order(&ty(2, &[1]), &ty(3, &[1])),
            Err(Error::PrimeMismatch(2, 3))
        );
        // 3^(20·20) needs far more than 64 bits
        let big = ty(3, &[1; 20]);
        assert_eq!(hom_order(&big, &big).unwrap(), BigUint::from(3u32).pow(400));
    }

    #[test]
    fn class_two_examples() {
        let d8 = catalog::build("D8").unwrap();
        let inv = class_two_invariants(&d8).unwrap();
        assert_eq!(inv.z_type, ty(2, &[1, 1]));
        assert_eq!(inv.ab_type, ty(2, &[1, 1]));
        assert_eq!((inv.c, inv.k), (1, 2));
        assert!(inv.z_residual.is_trivial() && inv.ab_residual.is_trivial());
        assert_eq!((inv.exp_z, inv.exp_gamma2), (2, 2));

        let heis = catalog::build("Heis3").unwrap();
        let inv = class_two_invariants(&heis).unwrap();
        assert_eq!(
            (inv.z_type.clone(), inv.ab_type.clone()),
            (ty(3, &[1, 1]), ty(3, &[1, 1]))
        );
        assert_eq!(inv.k, 2);
        assert_eq!((inv.exp_z, inv.exp_gamma2), (3, 3));

        let m16 = catalog::build("M16").unwrap();
        let inv = class_two_invariants(&m16).unwrap();
        assert_eq!((inv.exp_z, inv.exp_gamma2), (4, 2));

        let d16 = catalog::build("D16").unwrap();
        assert_eq!(class_two_invariants(&d16), Err(Error::WrongClass(3)));
        let s3 = catalog::build("S3").unwrap();
        assert_eq!(class_two_invariants(&s3), Err(Error::NotPGroup));
    }

    #[test]
    fn threshold_examples() {
        let out = lemma4_compare(&ty(2, &[1]), &ty(2, &[2]), &ty(2, &[1])).unwrap();
        assert_eq!(
            (out.t, out.threshold.clone(), out.strict),
            (1, BigUint::from(4u32), false)
        );
        assert_eq!(out.hom_a, out.hom_b);
        assert!(out.equivalence_holds());

        let out = lemma4_compare(&ty(2, &[1]), &ty(2, &[2]), &ty(2, &[2])).unwrap();
        assert!(out.strict);
        assert_eq!(
            (out.hom_a.clone(), out.hom_b.clone()),
            (BigUint::from(2u32), BigUint::from(4u32))
        );

        let out = lemma4_compare(&ty(2, &[1, 1]), &ty(2, &[2, 1]), &ty(2, &[2])).unwrap();
        assert_eq!(
            (out.t, out.threshold.clone(), out.strict),
            (1, BigUint::from(4u32), true)
        );
        assert_eq!(
            (out.hom_a.clone(), out.hom_b.clone()),
            (BigUint::from(4u32), BigUint::from(8u32))
        );

        assert!(matches!(
            lemma4_compare(&ty(2, &[2]), &ty(2, &[1]), &ty(2, &[1])),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            lemma4_compare(&ty(2, &[1]), &ty(2, &[1]), &ty(2, &[1])),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            lemma4_compare(&ty(2, &[1]), &ty(2, &[2, 1]), &ty(2, &[1])),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
