//! Independent oracles for cross-checking the production paths. These stay
//! deliberately naive: the characteristic polynomial comes from the
//! Faddeev-LeVerrier trace recurrence over big integers (no modular
//! arithmetic, no Hessenberg form), and planarity of small graphs comes
//! from an exhaustive K5/K33 minor search (Wagner's theorem) instead of the
//! left-right criterion.

// shared between test binaries; not every binary uses every oracle
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use poeg::{Graph, IntMatrix, IntPoly};

/// det(xI - M) by the Faddeev-LeVerrier recurrence:
/// M_1 = A, c_{n-1} = -tr(M_1); M_k = A M_{k-1} + c_{n-k+1} I,
/// c_{n-k} = -tr(M_k)/k. Every division is exact.
pub fn char_poly_faddeev_leverrier(m: &IntMatrix) -> IntPoly {
    let n = m.n();
    if n == 0 {
        return IntPoly::one();
    }
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk: Vec<Vec<BigInt>> = a.clone();
    for k in 1..=n {
        let tr: BigInt = (0..n).map(|i| mk[i][i].clone()).sum();
        let c = -tr / BigInt::from(k as u64);
        coeffs[n - k] = c.clone();
        if k == n {
            break;
        }
        // M_{k+1} = A * (M_k + c I)
        let mut shifted = mk;
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += &c;
        }
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for (l, srow) in shifted.iter().enumerate() {
                let f = &a[i][l];
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += f * &srow[j];
                }
            }
        }
        mk = next;
    }
    IntPoly::from_coeffs(coeffs)
}

fn contract_edge(g: &Graph, u: usize, v: usize) -> Graph {
    // merge v into u, renumber the survivors
    let n = g.n();
    let keep: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    let pos: std::collections::HashMap<usize, usize> =
        keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut out = Graph::new(n - 1).unwrap();
    for (a, b) in g.edges() {
        let (a2, b2) = (if a == v { u } else { a }, if b == v { u } else { b });
        if a2 != b2 {
            out.add_edge(pos[&a2], pos[&b2]);
        }
    }
    out
}

fn has_clique5(g: &Graph) -> bool {
    let n = g.n();
    if n < 5 {
        return false;
    }
    let vs: Vec<usize> = (0..n).collect();
    fn rec(g: &Graph, vs: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == 5 {
            return true;
        }
        for i in start..vs.len() {
            let v = vs[i];
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                if rec(g, vs, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(g, &vs, 0, &mut Vec::new())
}

fn has_k33_subgraph(g: &Graph) -> bool {
    let n = g.n();
    if n < 6 {
        return false;
    }
    let triples: Vec<[usize; 3]> = {
        let mut t = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    t.push([a, b, c]);
                }
            }
        }
        t
    };
    for (i, left) in triples.iter().enumerate() {
        for right in triples.iter().skip(i + 1) {
            if left.iter().any(|x| right.contains(x)) {
                continue;
            }
            if left
                .iter()
                .all(|&u| right.iter().all(|&v| g.has_edge(u, v)))
            {
                return true;
            }
        }
    }
    false
}

fn has_minor(g: &Graph, check_subgraph: &dyn Fn(&Graph) -> bool, min_vertices: usize) -> bool {
    if g.n() < min_vertices {
        return false;
    }
    if check_subgraph(g) {
        return true;
    }
    for (u, v) in g.edges() {
        if has_minor(&contract_edge(g, u, v), check_subgraph, min_vertices) {
            return true;
        }
    }
    false
}

/// Planarity by Wagner's theorem: no K5 minor and no K33 minor. Exponential;
/// intended for graphs with at most ~8 vertices.
pub fn planar_by_minor_search(g: &Graph) -> bool {
    assert!(g.n() <= 10, "minor-search oracle is for small graphs");
    !has_minor(g, &has_clique5, 5) && !has_minor(g, &has_k33_subgraph, 6)
}
