//! Exact maximum clique by branch and bound with greedy-coloring bounds.
//!
//! Vertices are statically reordered by descending degree (ties by index);
//! candidates are expanded in coloring order, highest color first, and a
//! branch is cut when |R| + color(v) cannot beat the incumbent. Only a
//! strictly larger clique replaces the incumbent, so the returned witness
//! is the deterministic first maximum of the ordered expansion.

use crate::graph::Graph;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CliqueResult {
    pub omega: usize,
    /// Vertices of a maximum clique, ascending.
    pub witness: Vec<usize>,
}

struct Search {
    stride: usize,
    /// relabeled adjacency bitsets
    adj: Vec<u64>,
    /// relabeled index -> original vertex
    label: Vec<usize>,
    best: Vec<usize>,
}

pub fn max_clique(g: &Graph) -> CliqueResult {
    let n = g.n();
    if n == 0 {
        return CliqueResult {
            omega: 0,
            witness: Vec::new(),
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let stride = n.div_ceil(64);
    let mut adj = vec![0u64; stride * n];
    for (u, v) in g.edges() {
        let (iu, iv) = (pos[u], pos[v]);
        adj[iu * stride + iv / 64] |= 1 << (iv % 64);
        adj[iv * stride + iu / 64] |= 1 << (iu % 64);
    }
    let mut search = Search {
        stride,
        adj,
        label: order,
        best: Vec::new(),
    };
    let mut all = vec![0u64; stride];
    for i in 0..n {
        all[i / 64] |= 1 << (i % 64);
    }
    let mut r = Vec::new();
    search.expand(&mut r, &all);

    let mut witness: Vec<usize> = search.best.iter().map(|&i| search.label[i]).collect();
    witness.sort_unstable();
    // post-hoc verification of the witness
    for (a, &u) in witness.iter().enumerate() {
        for &v in &witness[a + 1..] {
            assert!(g.has_edge(u, v), "clique witness must be pairwise adjacent");
        }
    }
    CliqueResult {
        omega: witness.len(),
        witness,
    }
}

impl Search {
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    fn expand(&mut self, r: &mut Vec<usize>, p: &[u64]) {
        // greedy coloring of the candidate set; classes in ascending index order
        let mut classes: Vec<Vec<u64>> = Vec::new();
        let mut colored: Vec<(usize, usize)> = Vec::new(); // (vertex, color)
        for (w, &word) in p.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let row = self.row(v);
                let c = classes
                    .iter()
                    .position(|class| class.iter().zip(row).all(|(a, b)| a & b == 0))
                    .unwrap_or_else(|| {
                        classes.push(vec![0u64; self.stride]);
                        classes.len() - 1
                    });
                classes[c][v / 64] |= 1 << (v % 64);
                colored.push((v, c + 1));
            }
        }
        // highest color last; expand from the back
        colored.sort_by_key(|&(v, c)| (c, v));
        for &(v, color) in colored.iter().rev() {
            if r.len() + color <= self.best.len() {
                return; // every remaining candidate has color <= this one
            }
            let mut next = vec![0u64; self.stride];
            let row = self.row(v);
            let mut empty = true;
            // candidates below v in the colored order, intersected with N(v)
            for w in 0..self.stride {
                next[w] = p[w] & row[w];
            }
            // remove v itself and everything after it in colored order
            next[v / 64] &= !(1 << (v % 64));
            for &(u, cu) in colored.iter().rev() {
                if (u, cu) == (v, color) {
                    break;
                }
                next[u / 64] &= !(1 << (u % 64));
            }
            for w in &next {
                if *w != 0 {
                    empty = false;
                    break;
                }
            }
            r.push(v);
            if empty {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, &next);
            }
            r.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify::{template_clique, template_cycle};
    use crate::graph::{build_poeg, Graph};
    use crate::group::{Group, GroupSpec};

    fn poeg(spec: GroupSpec) -> Graph {
        build_poeg(&Group::new(&spec).unwrap()).unwrap()
    }

    #[test]
    fn cliques_of_classics() {
        assert_eq!(max_clique(&template_clique(8)).omega, 8);
        assert_eq!(max_clique(&template_cycle(5)).omega, 2);
        assert_eq!(max_clique(&template_cycle(3)).omega, 3);
        assert_eq!(max_clique(&Graph::new(4).unwrap()).omega, 1);
        assert_eq!(max_clique(&Graph::new(0).unwrap()).omega, 0);
    }

    #[test]
    fn poeg_spot_values() {
        // K8 from the elementary abelian 2-group of rank 3
        let g = poeg(GroupSpec::Product(vec![
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(2),
        ]));
        assert_eq!(max_clique(&g).omega, 8);
        assert_eq!(max_clique(&poeg(GroupSpec::Cyclic(9))).omega, 2);
        let z3z3 = poeg(GroupSpec::Product(vec![
            GroupSpec::Cyclic(3),
            GroupSpec::Cyclic(3),
        ]));
        assert_eq!(max_clique(&z3z3).omega, 5);
        assert_eq!(max_clique(&poeg(GroupSpec::Cyclic(25))).omega, 3);
    }

    #[test]
    fn witness_is_valid_and_deterministic() {
        let g = poeg(GroupSpec::Product(vec![
            GroupSpec::Cyclic(3),
            GroupSpec::Cyclic(3),
        ]));
        let a = max_clique(&g);
        let b = max_clique(&g);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.witness.len(), a.omega);
    }

    #[test]
    fn brute_force_agreement_small() {
        // compare against exhaustive subset search on all first poeg graphs
        for spec in [
            GroupSpec::Cyclic(6),
            GroupSpec::Cyclic(9),
            GroupSpec::Cyclic(12),
            GroupSpec::Dihedral(4),
            GroupSpec::Dihedral(6),
            GroupSpec::Dicyclic(3),
        ] {
            let g = poeg(spec);
            let n = g.n();
            let mut best = 0usize;
            for mask in 0u32..(1 << n) {
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if verts.len() <= best {
                    continue;
                }
                let ok = verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
                if ok {
                    best = verts.len();
                }
            }
            assert_eq!(max_clique(&g).omega, best);
        }
    }
}
