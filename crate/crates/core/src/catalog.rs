//! Builtin groups: cyclic and abelian p-groups, metacyclic families
//! (dihedral, quaternion, semidihedral, modular, split `C_m ⋊ C_n`),
//! Heisenberg groups over `Z/q`, central products, and direct products of
//! these. Every name maps to one fixed construction, so indices are stable.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;

/// A named constructor.
#[derive(Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub order: usize,
    pub description: &'static str,
    build: fn() -> Result<Group>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<Group> {
        (self.build)()
    }
}

impl core::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

/// `C_m` with element `i` standing for `a^i`.
pub fn cyclic(m: usize) -> Result<Group> {
    let table: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).map(|j| (i + j) % m).collect())
        .collect();
    Group::from_cayley_table(&table)?.with_labels((0..m).map(|i| format!("a^{i}")).collect())
}

/// `C_{p^e₁} × C_{p^e₂} × …`.
pub fn abelian(p: usize, exps: &[u32]) -> Result<Group> {
    let mut g = cyclic(1)?;
    for &e in exps {
        g = g.direct_product(&cyclic(p.pow(e))?)?;
    }
    Ok(g)
}

/// `⟨a, b | a^m = 1, b^n = a^t, b⁻¹ab = a^r⟩` on normal forms `a^i b^j`,
/// element index `i·n + j`.
pub fn metacyclic(m: usize, n: usize, t: usize, r: usize) -> Result<Group> {
    // b a b⁻¹ = a^s with s = r⁻¹ mod m
    let s = (1..=m)
        .find(|&s| (s * r) % m == 1 % m)
        .ok_or_else(|| Error::InvalidInput(format!("{r} is not invertible mod {m}")))?;
    let mut spow = Vec::with_capacity(n);
    let mut acc = 1 % m;
    for _ in 0..n {
        spow.push(acc);
        acc = acc * s % m;
    }
    let size = m * n;
    let table: Vec<Vec<usize>> = (0..size)
        .map(|x| {
            let (i, j) = (x / n, x % n);
            (0..size)
                .map(|y| {
                    let (k, l) = (y / n, y % n);
                    let mut a = i + k * spow[j];
                    let mut b = j + l;
                    if b >= n {
                        b -= n;
                        a += t * spow[b];
                    }
                    (a % m) * n + b
                })
                .collect()
        })
        .collect();
    let labels = (0..size)
        .map(|x| format!("a^{}b^{}", x / n, x % n))
        .collect();
    Group::from_cayley_table(&table)?.with_labels(labels)
}

/// Dihedral group of the given order (`2m` symmetries of an `m`-gon).
pub fn dihedral(order: usize) -> Result<Group> {
    let m = order / 2;
    metacyclic(m, 2, 0, m - 1)
}

/// Generalized quaternion group of order `4k`.
pub fn quaternion(order: usize) -> Result<Group> {
    let m = order / 2;
    metacyclic(m, 2, m / 2, m - 1)
}

pub fn semidihedral(order: usize) -> Result<Group> {
    let m = order / 2;
    metacyclic(m, 2, 0, m / 2 - 1)
}

/// `M(p^k) = ⟨a, b | a^{p^{k-1}} = b^p = 1, b⁻¹ab = a^{1+p^{k-2}}⟩`.
pub fn modular(p: usize, k: u32) -> Result<Group> {
    let m = p.pow(k - 1);
    metacyclic(m, p, 0, 1 + p.pow(k - 2))
}

/// Upper unitriangular 3×3 matrices over `Z/q`, as triples
/// `(x, y, z)·(x', y', z') = (x+x', y+y', z+z'+xy')`.
pub fn heisenberg(q: usize) -> Result<Group> {
    let size = q * q * q;
    let split = |e: usize| (e / (q * q), (e / q) % q, e % q);
    let table: Vec<Vec<usize>> = (0..size)
        .map(|e| {
            let (x, y, z) = split(e);
            (0..size)
                .map(|f| {
                    let (x2, y2, z2) = split(f);
                    ((x + x2) % q) * q * q + ((y + y2) % q) * q + (z + z2 + x * y2) % q
                })
                .collect()
        })
        .collect();
    Group::from_cayley_table(&table)
}

/// `(G × H) / ⟨(a, b⁻¹)⟩` for central `a ∈ G`, `b ∈ H` of equal order.
pub fn central_product(g: &Group, h: &Group, a: usize, b: usize) -> Result<Group> {
    if !g.center().contains(a)
        || !h.center().contains(b)
        || g.element_order(a) != h.element_order(b)
    {
        return Err(Error::InvalidInput(String::from(
            "central product needs central elements of equal order",
        )));
    }
    let prod = g.direct_product(h)?;
    let glue = prod.subgroup_generated([a * h.order() + h.inv(b)]);
    Ok(prod.quotient(&glue)?.target)
}

/// The unique central involution of a group with cyclic center of even order.
fn central_involution(g: &Group) -> usize {
    g.center()
        .members()
        .iter()
        .copied()
        .find(|&z| g.element_order(z) == 2)
        .expect("group has a central involution")
}

fn central_element_of_order(g: &Group, k: usize) -> usize {
    g.center()
        .members()
        .iter()
        .copied()
        .find(|&z| g.element_order(z) == k)
        .expect("central element of requested order")
}

fn product(names: &[&str]) -> Result<Group> {
    let mut g = cyclic(1)?;
    for name in names {
        g = g.direct_product(&build(name)?)?;
    }
    Ok(g)
}

macro_rules! entry {
    ($name:expr, $order:expr, $desc:expr, $body:expr) => {
        CatalogEntry {
            name: $name,
            order: $order,
            description: $desc,
            build: {
                fn f() -> Result<Group> {
                    $body
                }
                f as fn() -> Result<Group>
            },
        }
    };
}

/// The full builtin catalog, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    alloc::vec![
        // abelian
        entry!("C2", 2, "cyclic", cyclic(2)),
        entry!("C3", 3, "cyclic", cyclic(3)),
        entry!("C4", 4, "cyclic", cyclic(4)),
        entry!("C5", 5, "cyclic", cyclic(5)),
        entry!("C6", 6, "cyclic, not a p-group", cyclic(6)),
        entry!("C8", 8, "cyclic", cyclic(8)),
        entry!("C9", 9, "cyclic", cyclic(9)),
        entry!("C16", 16, "cyclic", cyclic(16)),
        entry!("C27", 27, "cyclic", cyclic(27)),
        entry!("C2xC2", 4, "Klein four group", abelian(2, &[1, 1])),
        entry!("C2xC4", 8, "abelian", abelian(2, &[1, 2])),
        entry!("C2xC2xC2", 8, "elementary abelian", abelian(2, &[1, 1, 1])),
        entry!("C2xC8", 16, "abelian", abelian(2, &[1, 3])),
        entry!("C4xC4", 16, "abelian", abelian(2, &[2, 2])),
        entry!("C2xC2xC4", 16, "abelian", abelian(2, &[1, 1, 2])),
        entry!("C3xC3", 9, "elementary abelian", abelian(3, &[1, 1])),
        entry!("C3xC9", 27, "abelian", abelian(3, &[1, 2])),
        entry!("C5xC5", 25, "elementary abelian", abelian(5, &[1, 1])),
        // non-abelian controls outside class 2
        entry!(
            "S3",
            6,
            "symmetric group on 3 points, not a p-group",
            dihedral(6)
        ),
        entry!("D16", 16, "dihedral, class 3", dihedral(16)),
        entry!("Q16", 16, "generalized quaternion, class 3", quaternion(16)),
        entry!("SD16", 16, "semidihedral, class 3", semidihedral(16)),
        entry!("D32", 32, "dihedral, class 4", dihedral(32)),
        // class 2, p = 2
        entry!("D8", 8, "dihedral", dihedral(8)),
        entry!("Q8", 8, "quaternion", quaternion(8)),
        entry!(
            "M16",
            16,
            "modular: a^8 = b^2 = 1, b^-1 a b = a^5",
            modular(2, 4)
        ),
        entry!(
            "C4sdC4",
            16,
            "C4 ⋊ C4: b^-1 a b = a^3",
            metacyclic(4, 4, 0, 3)
        ),
        entry!("D8xC2", 16, "direct product", product(&["D8", "C2"])),
        entry!("Q8xC2", 16, "direct product", product(&["Q8", "C2"])),
        entry!("C4oD8", 16, "central product (Pauli group)", {
            let (c4, d8) = (cyclic(4)?, dihedral(8)?);
            central_product(&c4, &d8, 2, central_involution(&d8))
        }),
        entry!("D8xC4", 32, "direct product", product(&["D8", "C4"])),
        entry!("Q8xC4", 32, "direct product", product(&["Q8", "C4"])),
        entry!(
            "D8xC2xC2",
            32,
            "direct product",
            product(&["D8", "C2", "C2"])
        ),
        entry!(
            "Q8xC2xC2",
            32,
            "direct product",
            product(&["Q8", "C2", "C2"])
        ),
        entry!("M16xC2", 32, "direct product", product(&["M16", "C2"])),
        entry!(
            "C4sdC4xC2",
            32,
            "direct product",
            product(&["C4sdC4", "C2"])
        ),
        entry!("D8oD8", 32, "extraspecial 2^(1+4), plus type", {
            let d8 = dihedral(8)?;
            let z = central_involution(&d8);
            central_product(&d8, &d8, z, z)
        }),
        entry!("D8oQ8", 32, "extraspecial 2^(1+4), minus type", {
            let (d8, q8) = (dihedral(8)?, quaternion(8)?);
            central_product(&d8, &q8, central_involution(&d8), central_involution(&q8))
        }),
        entry!(
            "M32",
            32,
            "modular: a^16 = b^2 = 1, b^-1 a b = a^9",
            modular(2, 5)
        ),
        entry!(
            "C4sdC8",
            32,
            "C4 ⋊ C8: b^-1 a b = a^3",
            metacyclic(4, 8, 0, 3)
        ),
        entry!("C8oD8", 32, "central product, cyclic center of order 8", {
            let (c8, d8) = (cyclic(8)?, dihedral(8)?);
            central_product(&c8, &d8, 4, central_involution(&d8))
        }),
        entry!("D8xQ8", 64, "direct product", product(&["D8", "Q8"])),
        entry!("D8xD8", 64, "direct product", product(&["D8", "D8"])),
        entry!("Q8xQ8", 64, "direct product", product(&["Q8", "Q8"])),
        entry!("D8xC8", 64, "direct product", product(&["D8", "C8"])),
        entry!("Q8xC8", 64, "direct product", product(&["Q8", "C8"])),
        entry!("M16xC4", 64, "direct product", product(&["M16", "C4"])),
        entry!("M32xC2", 64, "direct product", product(&["M32", "C2"])),
        entry!(
            "C4sdC4xC4",
            64,
            "direct product",
            product(&["C4sdC4", "C4"])
        ),
        entry!(
            "C8sdC8",
            64,
            "C8 ⋊ C8: b^-1 a b = a^5",
            metacyclic(8, 8, 0, 5)
        ),
        entry!(
            "Heis4",
            64,
            "unitriangular 3x3 matrices over Z/4",
            heisenberg(4)
        ),
        // class 2, odd p
        entry!(
            "Heis3",
            27,
            "Heisenberg group mod 3, exponent 3",
            heisenberg(3)
        ),
        entry!(
            "M27",
            27,
            "extraspecial of exponent 9: b^-1 a b = a^4",
            modular(3, 3)
        ),
        entry!("Heis3xC3", 81, "direct product", product(&["Heis3", "C3"])),
        entry!("M27xC3", 81, "direct product", product(&["M27", "C3"])),
        entry!(
            "M81",
            81,
            "modular: a^27 = b^3 = 1, b^-1 a b = a^10",
            modular(3, 4)
        ),
        entry!(
            "C9sdC9",
            81,
            "C9 ⋊ C9: b^-1 a b = a^4",
            metacyclic(9, 9, 0, 4)
        ),
        entry!(
            "Heis3oC9",
            81,
            "central product, cyclic center of order 9",
            {
                let (heis, c9) = (heisenberg(3)?, cyclic(9)?);
                let z = central_element_of_order(&heis, 3);
                central_product(&heis, &c9, z, 3)
            }
        ),
        entry!(
            "Heis5",
            125,
            "Heisenberg group mod 5, exponent 5",
            heisenberg(5)
        ),
        entry!(
            "M125",
            125,
            "extraspecial of exponent 25: b^-1 a b = a^6",
            modular(5, 3)
        ),
    ]
}

/// Looks up and builds a catalog group by name.
pub fn build(name: &str) -> Result<Group> {
    catalog()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown catalog group {name:?}")))?
        .build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{subgroup_invariants, AbelianType};

    #[test]
    fn declared_orders_match() {
        for e in catalog() {
            let g = e.build().unwrap();
            assert_eq!(g.order(), e.order, "{}", e.name);
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = catalog().iter().map(|e| e.name).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(names.len(), before);
        assert!(build("nope").is_err());
    }

    #[test]
    fn spot_checks() {
        let q8 = build("Q8").unwrap();
        assert_eq!((0..8).filter(|&x| q8.element_order(x) == 2).count(), 1);
        let heis = build("Heis3").unwrap();
        assert_eq!(
            (
                heis.order(),
                heis.nilpotency_class().unwrap(),
                heis.exponent()
            ),
            (27, 2, 3)
        );
        let dq = build("D8xQ8").unwrap();
        assert_eq!(dq.order(), 64);
        assert_eq!(
            subgroup_invariants(&dq, &dq.center(), 2).unwrap(),
            AbelianType::new(2, alloc::vec![1, 1]).unwrap()
        );
        assert_eq!(build("M27").unwrap().exponent(), 9);
        assert_eq!(build("Heis5").unwrap().exponent(), 5);
        let c8d8 = build("C8oD8").unwrap();
        assert_eq!(c8d8.center().order(), 8);
        assert!(c8d8.is_cyclic(&c8d8.center()));
    }
}
