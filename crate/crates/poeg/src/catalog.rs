//! The verification catalog: every abelian group up to a given order (one
//! spec per isomorphism class, from integer partitions of the prime-power
//! exponents), the dihedral and dicyclic families, and the bundled A4
//! table.

use crate::group::{Group, GroupSpec};
use crate::numth;

const A4_TABLE: &str = include_str!("../assets/a4.table");

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub descriptor: String,
    pub group: Group,
}

impl CatalogEntry {
    fn from_spec(spec: GroupSpec) -> CatalogEntry {
        let group = Group::new(&spec).expect("catalog specs are valid");
        CatalogEntry {
            descriptor: spec.to_string(),
            group,
        }
    }
}

/// Non-increasing integer partitions of n.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = max.min(n);
        while part >= 1 {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// One GroupSpec per isomorphism class of abelian groups of order n.
/// Factors are listed with primes ascending and prime-power parts
/// non-increasing within each prime.
pub fn abelian_specs_of_order(n: usize) -> Vec<GroupSpec> {
    if n == 1 {
        return vec![GroupSpec::Cyclic(1)];
    }
    let factorization = numth::factorize(n as u64);
    let per_prime: Vec<Vec<Vec<usize>>> = factorization
        .iter()
        .map(|&(p, e)| {
            partitions(e)
                .into_iter()
                .map(|parts| parts.iter().map(|&a| (p as usize).pow(a)).collect())
                .collect()
        })
        .collect();
    // cross product of the per-prime choices
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for choices in per_prime {
        let mut next = Vec::new();
        for base in &combos {
            for choice in &choices {
                let mut c = base.clone();
                c.extend_from_slice(choice);
                next.push(c);
            }
        }
        combos = next;
    }
    combos
        .into_iter()
        .map(|factors| {
            if factors.len() == 1 {
                GroupSpec::Cyclic(factors[0])
            } else {
                GroupSpec::Product(factors.into_iter().map(GroupSpec::Cyclic).collect())
            }
        })
        .collect()
}

/// Every abelian group with 1 <= |G| <= max, by ascending order.
pub fn abelian_groups_up_to(max: usize) -> Vec<CatalogEntry> {
    (1..=max)
        .flat_map(abelian_specs_of_order)
        .map(CatalogEntry::from_spec)
        .collect()
}

/// D_n for 2 <= n <= max_index.
pub fn dihedral_groups(max_index: usize) -> Vec<CatalogEntry> {
    (2..=max_index)
        .map(|n| CatalogEntry::from_spec(GroupSpec::Dihedral(n)))
        .collect()
}

/// Dicyclic groups of order 4m for 2 <= m <= max_index.
pub fn dicyclic_groups(max_index: usize) -> Vec<CatalogEntry> {
    (2..=max_index)
        .map(|m| CatalogEntry::from_spec(GroupSpec::Dicyclic(m)))
        .collect()
}

/// The alternating group on 4 points, from the bundled Cayley table.
pub fn alternating_4() -> CatalogEntry {
    let group = Group::from_cayley_table_text("A4", A4_TABLE).expect("bundled A4 table is valid");
    CatalogEntry {
        descriptor: "A4".to_string(),
        group,
    }
}

/// The default verification catalog: abelian groups up to `max_abelian`,
/// D_n for n <= 16, dicyclic groups of order <= 32, and A4.
pub fn default_catalog(max_abelian: usize) -> Vec<CatalogEntry> {
    let mut out = abelian_groups_up_to(max_abelian);
    out.extend(dihedral_groups(16));
    out.extend(dicyclic_groups(8));
    out.push(alternating_4());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        // p(1..7) = 1, 2, 3, 5, 7, 11, 15
        let expect = [1, 2, 3, 5, 7, 11, 15];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(partitions(i as u32 + 1).len(), e);
        }
        for p in partitions(6) {
            assert!(p.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(p.iter().sum::<u32>(), 6);
        }
    }

    #[test]
    fn abelian_class_counts() {
        assert_eq!(abelian_specs_of_order(1).len(), 1);
        assert_eq!(abelian_specs_of_order(8).len(), 3);
        assert_eq!(abelian_specs_of_order(16).len(), 5);
        assert_eq!(abelian_specs_of_order(36).len(), 4); // p(2)^2
        assert_eq!(abelian_specs_of_order(30).len(), 1); // squarefree
        assert_eq!(abelian_specs_of_order(72).len(), 6); // p(3)*p(2)
    }

    #[test]
    fn catalog_orders_and_descriptors() {
        let cat = abelian_groups_up_to(16);
        for e in &cat {
            assert!(e.group.order() <= 16);
            assert!(e.group.is_abelian());
        }
        // descriptors unique
        let mut d: Vec<&str> = cat.iter().map(|e| e.descriptor.as_str()).collect();
        d.sort_unstable();
        d.dedup();
        assert_eq!(d.len(), cat.len());
        assert!(cat.iter().any(|e| e.descriptor == "Z:8xZ:2"));
    }

    #[test]
    fn a4_is_the_right_group() {
        let a4 = alternating_4();
        assert_eq!(a4.group.order(), 12);
        assert!(!a4.group.is_abelian());
        let orders: Vec<usize> = (0..12).map(|g| a4.group.element_order(g)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 3);
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 8);
        assert_eq!(a4.group.exponent(), 6);
    }

    #[test]
    fn default_catalog_contents() {
        let cat = default_catalog(20);
        assert!(cat.iter().any(|e| e.descriptor == "A4"));
        assert!(cat.iter().any(|e| e.descriptor == "D:16"));
        assert!(cat.iter().any(|e| e.descriptor == "Dic:8"));
    }
}
