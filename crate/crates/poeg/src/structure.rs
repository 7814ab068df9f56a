//! Group-structure predicates behind the planarity and clique
//! classifications: subgroup detectors for 2-groups, elementary abelian
//! rank, closed-form clique numbers, and the planarity clause checks.

use crate::clique::max_clique;
use crate::error::{Error, Result};
use crate::graph::build_poeg;
use crate::graph::classify::{classify_component, ComponentLabel};
use crate::group::Group;
use crate::numth;
use crate::planar::is_planar;
use serde::Serialize;
use std::collections::BTreeMap;

/// Largest t with Z_p^t <= G, computed as log_p of the p-torsion size and
/// cross-checked against the cyclic-factor count when a shape is known.
pub fn elementary_abelian_rank(group: &Group, p: u64) -> Result<u32> {
    let torsion = group.p_torsion(p)?; // rejects non-abelian and non-prime p
    let mut size = torsion.len() as u64;
    let mut rank = 0u32;
    while size.is_multiple_of(p) {
        size /= p;
        rank += 1;
    }
    assert_eq!(size, 1, "p-torsion of an abelian group has p-power size");
    if let Some(shape) = group.abelian_shape() {
        let by_shape = shape
            .iter()
            .filter(|&&n| (n as u64).is_multiple_of(p))
            .count() as u32;
        assert_eq!(rank, by_shape, "torsion rank must match the factor count");
    }
    Ok(rank)
}

/// ω(Γ(G)) for an abelian p-group: 2^t for p = 2, (p^k + 1)/2 for odd p,
/// with t, k the elementary abelian rank.
#[allow(clippy::manual_div_ceil)] // keep the (p^k + 1)/2 form of the statement
pub fn clique_closed_form_abelian(group: &Group) -> Result<usize> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let factors = numth::factorize(group.order() as u64);
    if group.order() == 1 {
        return Ok(1);
    }
    if factors.len() != 1 {
        return Err(Error::NotPGroup {
            expected: "p^m".into(),
            got: group.order(),
        });
    }
    let p = factors[0].0;
    let rank = elementary_abelian_rank(group, p)?;
    if p == 2 {
        Ok(1usize << rank)
    } else {
        Ok(((p.pow(rank) + 1) / 2) as usize)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenSubgroups {
    pub has_d4: bool,
    pub has_z2_cubed: bool,
    pub involution_count: usize,
}

/// Searches a 2-group for D_4 and Z_2^3 subgroups by closing generated sets.
///
/// Two involutions whose product has order 4 generate a D_4; a product of
/// order 2^l > 4 generates a dihedral group containing D_4, and that group
/// in turn contains an involution pair with product of exact order 4, so
/// sweeping all pairs is complete. Z_2^3 is found as three involutions whose
/// closure has order 8 with every non-identity element an involution.
pub fn detect_forbidden_2group_subgroups(group: &Group) -> Result<ForbiddenSubgroups> {
    if !is_power_of(group.order() as u64, 2) {
        return Err(Error::NotPGroup {
            expected: "2^n".into(),
            got: group.order(),
        });
    }
    let involutions: Vec<usize> = (0..group.order())
        .filter(|&g| group.element_order(g) == 2)
        .collect();

    let mut has_d4 = false;
    'pairs: for (i, &x) in involutions.iter().enumerate() {
        for &y in &involutions[i + 1..] {
            if group.element_order(group.op(x, y)) == 4 {
                let closure = group.generated_subgroup(&[x, y]);
                let non_abelian = closure
                    .iter()
                    .any(|&a| closure.iter().any(|&b| group.op(a, b) != group.op(b, a)));
                let has_order4 = closure.iter().any(|&g| group.element_order(g) == 4);
                assert!(
                    closure.len() == 8 && non_abelian && has_order4,
                    "involution pair with order-4 product must close to D4"
                );
                has_d4 = true;
                break 'pairs;
            }
        }
    }

    let mut has_z2_cubed = false;
    'triples: for (i, &x) in involutions.iter().enumerate() {
        for (j, &y) in involutions.iter().enumerate().skip(i + 1) {
            if group.op(x, y) != group.op(y, x) {
                continue;
            }
            for &z in &involutions[j + 1..] {
                let closure = group.generated_subgroup(&[x, y, z]);
                if closure.len() == 8
                    && closure
                        .iter()
                        .all(|&g| g == 0 || group.element_order(g) == 2)
                {
                    has_z2_cubed = true;
                    break 'triples;
                }
            }
        }
    }

    Ok(ForbiddenSubgroups {
        has_d4,
        has_z2_cubed,
        involution_count: involutions.len(),
    })
}

/// The clauses a group can satisfy when Γ(G) is planar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PlanarClause {
    /// G ≅ Z_5.
    Z5,
    /// G is a cyclic 3-group.
    Cyclic3Group,
    /// G is a 2-group with exactly one or three involutions.
    TwoGroupWithOneOrThreeInvolutions,
    /// |G| = 2^m 3^n with unique subgroups of order 2 and of order 3.
    Order2m3nUniqueSubgroups,
}

impl std::fmt::Display for PlanarClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlanarClause::Z5 => write!(f, "Z5"),
            PlanarClause::Cyclic3Group => write!(f, "cyclic-3-group"),
            PlanarClause::TwoGroupWithOneOrThreeInvolutions => {
                write!(f, "2-group-with-1-or-3-involutions")
            }
            PlanarClause::Order2m3nUniqueSubgroups => {
                write!(f, "2^m*3^n-with-unique-subgroups-of-order-2-and-3")
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NecessaryConditionVerdict {
    /// Clauses that hold for this group.
    pub clauses: Vec<PlanarClause>,
    pub satisfied: bool,
}

/// Which clauses of the planarity classification the group satisfies.
/// When Γ(G) is planar, at least one clause must hold.
pub fn planarity_necessary_condition(group: &Group) -> NecessaryConditionVerdict {
    let order = group.order() as u64;
    let n2 = group.involution_count();
    let n3 = count_elements_of_order(group, 3);
    let mut clauses = Vec::new();

    if order == 5 {
        clauses.push(PlanarClause::Z5);
    }
    if is_power_of(order, 3) && group.exponent() == group.order() {
        clauses.push(PlanarClause::Cyclic3Group);
    }
    if is_power_of(order, 2) && order > 1 && (n2 == 1 || n2 == 3) {
        clauses.push(PlanarClause::TwoGroupWithOneOrThreeInvolutions);
    }
    let f = numth::factorize(order);
    let only_2_3 = f.iter().all(|&(p, _)| p == 2 || p == 3);
    if only_2_3 && f.len() == 2 && n2 == 1 && n3 == 2 {
        clauses.push(PlanarClause::Order2m3nUniqueSubgroups);
    }
    NecessaryConditionVerdict {
        satisfied: !clauses.is_empty(),
        clauses,
    }
}

/// Census of Γ(G) components for a 2-group, with the planarity and
/// component-shape assertions of the no-D4 / no-Z_2^3 sufficiency statement.
#[derive(Clone, Debug, Serialize)]
pub struct TwoGroupCensus {
    pub involution_count: usize,
    pub has_d4: bool,
    pub has_z2_cubed: bool,
    /// Both forbidden subgroups absent.
    pub qualifies: bool,
    /// Planarity of Γ(G); only evaluated when the group qualifies.
    pub planar: Option<bool>,
    /// (label, count), sorted by label.
    pub census: Vec<(String, usize)>,
    /// Labels outside the guaranteed CLIQUE(1+n2)/CYCLE4/CUBE shapes:
    /// isolated vertices and inverse pairs from the single-involution case.
    pub degenerate_labels: Vec<String>,
    /// When the group qualifies: planar and every component within the
    /// allowed shapes (degenerate ones flagged, not failed).
    pub conforms: Option<bool>,
}

pub fn two_group_sufficiency_check(group: &Group) -> Result<TwoGroupCensus> {
    let flags = detect_forbidden_2group_subgroups(group)?;
    let qualifies = !flags.has_d4 && !flags.has_z2_cubed;
    let graph = build_poeg(group)?;
    let comps = graph.components();
    let n2 = flags.involution_count;

    let mut census: BTreeMap<String, usize> = BTreeMap::new();
    let mut degenerate = Vec::new();
    let mut all_allowed = true;
    for comp in &comps {
        let label = classify_component(&graph, comp)?;
        let is_identity_comp = comp.contains(&0);
        let allowed = if is_identity_comp {
            label == ComponentLabel::Clique(1 + n2)
        } else {
            match label {
                ComponentLabel::Cycle4 | ComponentLabel::Cube => true,
                // single-involution groups shatter into inverse pairs and
                // isolated self-paired vertices
                ComponentLabel::Clique(1) | ComponentLabel::Clique(2) => {
                    degenerate.push(label.to_string());
                    true
                }
                _ => false,
            }
        };
        if !allowed {
            all_allowed = false;
        }
        *census.entry(label.to_string()).or_insert(0) += 1;
    }
    degenerate.sort();
    degenerate.dedup();

    let (planar, conforms) = if qualifies {
        let p = is_planar(&graph).planar;
        (Some(p), Some(p && all_allowed))
    } else {
        (None, None)
    };

    Ok(TwoGroupCensus {
        involution_count: n2,
        has_d4: flags.has_d4,
        has_z2_cubed: flags.has_z2_cubed,
        qualifies,
        planar,
        census: census.into_iter().collect(),
        degenerate_labels: degenerate,
        conforms,
    })
}

/// Exact ω(Γ(G)) with closed-form cross-check when available.
pub fn clique_of_poeg(group: &Group) -> Result<crate::clique::CliqueResult> {
    let g = build_poeg(group)?;
    Ok(max_clique(&g))
}

pub fn count_elements_of_order(group: &Group, k: usize) -> usize {
    (0..group.order())
        .filter(|&g| group.element_order(g) == k)
        .count()
}

fn is_power_of(n: u64, p: u64) -> bool {
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn g(spec: GroupSpec) -> Group {
        Group::new(&spec).unwrap()
    }

    fn product(ns: &[usize]) -> Group {
        g(GroupSpec::Product(
            ns.iter().map(|&n| GroupSpec::Cyclic(n)).collect(),
        ))
    }

    #[test]
    fn ranks() {
        assert_eq!(elementary_abelian_rank(&product(&[2, 4]), 2).unwrap(), 2);
        assert_eq!(
            elementary_abelian_rank(&g(GroupSpec::Cyclic(9)), 3).unwrap(),
            1
        );
        assert_eq!(
            elementary_abelian_rank(&g(GroupSpec::Cyclic(5)), 2).unwrap(),
            0
        );
        assert!(elementary_abelian_rank(&g(GroupSpec::Dihedral(4)), 2).is_err());
    }

    #[test]
    fn closed_form_cliques() {
        assert_eq!(clique_closed_form_abelian(&product(&[4, 2])).unwrap(), 4);
        assert_eq!(clique_closed_form_abelian(&product(&[3, 9])).unwrap(), 5);
        assert_eq!(
            clique_closed_form_abelian(&g(GroupSpec::Cyclic(25))).unwrap(),
            3
        );
        assert!(clique_closed_form_abelian(&g(GroupSpec::Cyclic(6))).is_err());
        assert!(clique_closed_form_abelian(&g(GroupSpec::Dihedral(4))).is_err());
    }

    #[test]
    fn closed_form_matches_search() {
        for group in [
            product(&[4, 2]),
            product(&[3, 9]),
            g(GroupSpec::Cyclic(25)),
            product(&[2, 2, 2]),
            g(GroupSpec::Cyclic(27)),
            product(&[5, 5]),
        ] {
            let closed = clique_closed_form_abelian(&group).unwrap();
            let exact = clique_of_poeg(&group).unwrap().omega;
            assert_eq!(closed, exact, "{}", group.name());
        }
    }

    #[test]
    fn forbidden_subgroup_detectors() {
        let q8 = g(GroupSpec::Dicyclic(2));
        let r = detect_forbidden_2group_subgroups(&q8).unwrap();
        assert_eq!(
            r,
            ForbiddenSubgroups {
                has_d4: false,
                has_z2_cubed: false,
                involution_count: 1
            }
        );

        let d4 = g(GroupSpec::Dihedral(4));
        let r = detect_forbidden_2group_subgroups(&d4).unwrap();
        assert!(r.has_d4);
        assert_eq!(r.involution_count, 5);

        let z2cubed = product(&[2, 2, 2]);
        let r = detect_forbidden_2group_subgroups(&z2cubed).unwrap();
        assert!(!r.has_d4);
        assert!(r.has_z2_cubed);
        assert_eq!(r.involution_count, 7);

        // D8 contains D4 even though no involution pair closes to order 8
        // directly at the top level
        let d8 = g(GroupSpec::Dihedral(8));
        assert!(detect_forbidden_2group_subgroups(&d8).unwrap().has_d4);

        assert!(detect_forbidden_2group_subgroups(&g(GroupSpec::Cyclic(6))).is_err());
    }

    #[test]
    fn necessary_condition_clauses() {
        let v = planarity_necessary_condition(&g(GroupSpec::Cyclic(5)));
        assert_eq!(v.clauses, vec![PlanarClause::Z5]);

        let v = planarity_necessary_condition(&g(GroupSpec::Cyclic(27)));
        assert_eq!(v.clauses, vec![PlanarClause::Cyclic3Group]);

        let v = planarity_necessary_condition(&g(GroupSpec::Cyclic(7)));
        assert!(!v.satisfied);

        let v = planarity_necessary_condition(&g(GroupSpec::Cyclic(12)));
        assert_eq!(v.clauses, vec![PlanarClause::Order2m3nUniqueSubgroups]);

        let v = planarity_necessary_condition(&g(GroupSpec::Dicyclic(2)));
        assert_eq!(
            v.clauses,
            vec![PlanarClause::TwoGroupWithOneOrThreeInvolutions]
        );

        // the trivial group is the trivial cyclic 3-group
        let v = planarity_necessary_condition(&g(GroupSpec::Cyclic(1)));
        assert!(v.satisfied);
    }

    #[test]
    fn sufficiency_census_z8z2() {
        let group = product(&[8, 2]);
        let census = two_group_sufficiency_check(&group).unwrap();
        assert!(census.qualifies);
        assert_eq!(census.planar, Some(true));
        assert_eq!(census.conforms, Some(true));
        assert_eq!(
            census.census,
            vec![
                ("CLIQUE(4)".to_string(), 1),
                ("CUBE".to_string(), 1),
                ("CYCLE4".to_string(), 1)
            ]
        );
        assert!(census.degenerate_labels.is_empty());
    }

    #[test]
    fn sufficiency_census_z16() {
        let census = two_group_sufficiency_check(&g(GroupSpec::Cyclic(16))).unwrap();
        assert!(census.qualifies);
        assert_eq!(census.planar, Some(true));
        assert_eq!(census.conforms, Some(true));
        // identity pairs with the unique involution; order-4 elements are
        // self-paired hence isolated; everything else falls into K2 pairs
        assert_eq!(
            census.census,
            vec![("CLIQUE(1)".to_string(), 2), ("CLIQUE(2)".to_string(), 7)]
        );
        assert_eq!(
            census.degenerate_labels,
            vec!["CLIQUE(1)".to_string(), "CLIQUE(2)".to_string()]
        );
    }

    #[test]
    fn sufficiency_census_q8() {
        let census = two_group_sufficiency_check(&g(GroupSpec::Dicyclic(2))).unwrap();
        assert!(census.qualifies);
        assert_eq!(census.planar, Some(true));
        assert_eq!(census.conforms, Some(true));
    }

    #[test]
    fn sufficiency_census_d4_disqualified() {
        let census = two_group_sufficiency_check(&g(GroupSpec::Dihedral(4))).unwrap();
        assert!(!census.qualifies);
        assert_eq!(census.planar, None);
        assert_eq!(census.conforms, None);
    }
}
