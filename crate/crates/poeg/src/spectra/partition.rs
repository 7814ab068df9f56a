//! Equitable partitions, quotient matrices, and the divisibility check of
//! the quotient characteristic polynomial into the adjacency one.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::Group;
use crate::matrix::IntMatrix;
use crate::spectra::adjacency_matrix;
use std::collections::BTreeMap;

/// An ordered partition of the vertex set into disjoint non-empty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Partition> {
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidPartition(
                "blocks do not cover all vertices".into(),
            ));
        }
        Ok(Partition { blocks, n })
    }

    /// One block per vertex.
    pub fn discrete(n: usize) -> Partition {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            n,
        }
    }

    /// A single block with every vertex.
    pub fn unit(n: usize) -> Partition {
        Partition {
            blocks: vec![(0..n).collect()],
            n,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// block index of each vertex
    pub fn block_of(&self) -> Vec<usize> {
        let mut of = vec![usize::MAX; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                of[v] = i;
            }
        }
        of
    }

    /// True iff every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.n != coarser.n {
            return false;
        }
        let of = coarser.block_of();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| of[v] == of[b[0]]))
    }
}

/// The `b[i][j]` matrix of an equitable partition: every vertex of block i
/// has exactly `b[i][j]` neighbours in block j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix(pub IntMatrix);

impl QuotientMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }
}

/// Blocks grouped by element order, ordered by increasing order value.
pub fn order_partition(group: &Group) -> Partition {
    let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..group.order() {
        by_order.entry(group.element_order(v)).or_default().push(v);
    }
    Partition {
        blocks: by_order.into_values().collect(),
        n: group.order(),
    }
}

/// Quotient matrix if the partition is equitable, otherwise the offending
/// block pair and vertex pair.
pub fn equitable_quotient(g: &Graph, pi: &Partition) -> Result<QuotientMatrix> {
    if pi.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition is over {} vertices, graph has {}",
            pi.n(),
            g.n()
        )));
    }
    let of = pi.block_of();
    let m = pi.len();
    let mut b = IntMatrix::zero(m);
    for (i, block) in pi.blocks().iter().enumerate() {
        let u = block[0];
        let mut ref_counts = vec![0usize; m];
        for w in g.neighbors(u) {
            ref_counts[of[w]] += 1;
        }
        for &v in &block[1..] {
            let mut counts = vec![0usize; m];
            for w in g.neighbors(v) {
                counts[of[w]] += 1;
            }
            if counts != ref_counts {
                let j = (0..m).find(|&j| counts[j] != ref_counts[j]).unwrap();
                return Err(Error::NotEquitable {
                    block: i,
                    into: j,
                    u,
                    v,
                    cu: ref_counts[j],
                    cv: counts[j],
                });
            }
        }
        for (j, &c) in ref_counts.iter().enumerate() {
            b.set(i, j, c as i64);
        }
    }
    Ok(QuotientMatrix(b))
}

pub fn is_equitable(g: &Graph, pi: &Partition) -> Option<QuotientMatrix> {
    equitable_quotient(g, pi).ok()
}

/// Coarsest equitable partition refining `pi`, by iterated splitting on
/// neighbour-count signatures. Idempotent on equitable inputs. New blocks
/// keep the parent block's position and are ordered by signature, so the
/// result is deterministic.
pub fn coarsest_equitable_refinement(g: &Graph, pi: &Partition) -> Partition {
    let n = g.n();
    let mut blocks: Vec<Vec<usize>> = pi.blocks().to_vec();
    loop {
        let mut of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                of[v] = i;
            }
        }
        let m = blocks.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(m);
        let mut split = false;
        for b in &blocks {
            let mut by_sig: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in b {
                let mut sig = vec![0usize; m];
                for w in g.neighbors(v) {
                    sig[of[w]] += 1;
                }
                by_sig.entry(sig).or_default().push(v);
            }
            if by_sig.len() > 1 {
                split = true;
            }
            next.extend(by_sig.into_values());
        }
        blocks = next;
        if !split {
            return Partition { blocks, n };
        }
    }
}

/// Theorem check: the characteristic polynomial of the quotient matrix of an
/// equitable partition divides the characteristic polynomial of the
/// adjacency matrix. Non-equitable partitions are rejected.
pub fn quotient_divides_char_poly(g: &Graph, pi: &Partition) -> Result<bool> {
    let q = equitable_quotient(g, pi)?;
    let cp_adj = adjacency_matrix(g).char_poly()?;
    let cp_q = q.matrix().char_poly()?;
    Ok(cp_adj.div_exact(&cp_q).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_poeg, Graph};
    use crate::group::GroupSpec;
    use crate::poly::IntPoly;

    fn poeg(spec: GroupSpec) -> (Group, Graph) {
        let grp = Group::new(&spec).unwrap();
        let g = build_poeg(&grp).unwrap();
        (grp, g)
    }

    #[test]
    fn z5_order_partition_quotient() {
        let (grp, g) = poeg(GroupSpec::Cyclic(5));
        let pi = order_partition(&grp);
        assert_eq!(pi.blocks(), &[vec![0], vec![1, 2, 3, 4]]);
        let q = equitable_quotient(&g, &pi).unwrap();
        assert_eq!(q.matrix(), &IntMatrix::from_rows(&[vec![0, 4], vec![1, 2]]));
        let cp = q.matrix().char_poly().unwrap();
        assert_eq!(cp, IntPoly::from_i64_coeffs(&[-4, -2, 1]));
    }

    #[test]
    fn discrete_partition_always_equitable() {
        let (_, g) = poeg(GroupSpec::Cyclic(5));
        let q = equitable_quotient(&g, &Partition::discrete(5)).unwrap();
        assert_eq!(q.matrix(), &adjacency_matrix(&g));
    }

    #[test]
    fn z9_order_partition_with_zero_block() {
        let (grp, g) = poeg(GroupSpec::Cyclic(9));
        let pi = order_partition(&grp);
        assert_eq!(pi.blocks(), &[vec![0], vec![3, 6], vec![1, 2, 4, 5, 7, 8]]);
        let q = equitable_quotient(&g, &pi).unwrap();
        // no edges between the identity-or-order-3 block and order-9 block
        assert_eq!(q.matrix().get(2, 0), 0);
        assert_eq!(q.matrix().get(0, 2), 0);
        assert_eq!(q.matrix().get(1, 2), 0);
        assert_eq!(q.matrix().get(2, 1), 0);
    }

    #[test]
    fn non_equitable_witness() {
        // path on 3 vertices, all in one block: endpoint vs middle degree
        let mut g = Graph::new(3).unwrap();
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        let err = equitable_quotient(&g, &Partition::unit(3)).unwrap_err();
        match err {
            Error::NotEquitable { cu, cv, .. } => assert_ne!(cu, cv),
            other => panic!("expected NotEquitable, got {other}"),
        }
    }

    #[test]
    fn refinement_fixed_point_and_k4_minus_edge() {
        let (grp, g) = poeg(GroupSpec::Cyclic(9));
        let pi = order_partition(&grp);
        let refined = coarsest_equitable_refinement(&g, &pi);
        assert_eq!(refined, pi, "equitable input is a fixed point");

        // K4 minus the edge {2,3}: refinement splits by degree
        let mut h = Graph::new(4).unwrap();
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
            h.add_edge(u, v);
        }
        let refined = coarsest_equitable_refinement(&h, &Partition::unit(4));
        assert_eq!(refined.blocks(), &[vec![2, 3], vec![0, 1]]);
        assert!(is_equitable(&h, &refined).is_some());
    }

    #[test]
    fn refinement_from_unit_refines_order_partition() {
        let (grp, g) = poeg(GroupSpec::Cyclic(9));
        let refined = coarsest_equitable_refinement(&g, &Partition::unit(9));
        assert!(is_equitable(&g, &refined).is_some());
        // for Z9 the unit refinement lands exactly on the order partition
        let pi = order_partition(&grp);
        assert!(refined.refines(&pi));
    }

    #[test]
    fn quotient_divides_for_z5_and_k32() {
        let (grp, g) = poeg(GroupSpec::Cyclic(5));
        assert!(quotient_divides_char_poly(&g, &order_partition(&grp)).unwrap());

        let (grp, g) = poeg(GroupSpec::Product(vec![
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(2),
        ]));
        assert!(quotient_divides_char_poly(&g, &order_partition(&grp)).unwrap());
    }

    #[test]
    fn quotient_chain_z27_contains_z9_quotient() {
        let (g9, gr9) = poeg(GroupSpec::Cyclic(9));
        let (g27, gr27) = poeg(GroupSpec::Cyclic(27));
        let q9 = equitable_quotient(&gr9, &order_partition(&g9)).unwrap();
        let q27 = equitable_quotient(&gr27, &order_partition(&g27)).unwrap();
        assert!(quotient_divides_char_poly(&gr27, &order_partition(&g27)).unwrap());
        let cp9 = q9.matrix().char_poly().unwrap();
        let cp27 = q27.matrix().char_poly().unwrap();
        assert!(cp27.div_exact(&cp9).is_some(), "{cp9} should divide {cp27}");
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![1, 2]], 3).is_err());
        assert!(Partition::new(vec![vec![0, 1]], 3).is_err());
        assert!(Partition::new(vec![vec![0], vec![]], 1).is_err());
        assert!(Partition::new(vec![vec![0, 5]], 3).is_err());
        assert!(Partition::new(vec![vec![2, 0, 1]], 3).is_ok());
    }
}
