//! Undirected simple graphs on group elements.
//!
//! Adjacency is a dense symmetric bitset, which keeps spectral extraction
//! and clique search simple at desk scale; graphs above 4096 vertices are
//! rejected.

pub mod classify;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::numth;
use std::fmt::Write as _;

pub const MAX_GRAPH_VERTICES: usize = 4096;

/// Simple undirected graph: vertex count plus symmetric irreflexive adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::DimensionCap {
                dim: n,
                cap: MAX_GRAPH_VERTICES,
            });
        }
        let stride = n.div_ceil(64).max(1);
        Ok(Graph {
            n,
            stride,
            bits: vec![0; stride * n],
            edge_count: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops");
        if !self.has_edge(u, v) {
            self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
            self.bits[v * self.stride + u / 64] |= 1 << (u % 64);
            self.edge_count += 1;
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.bits[v * self.stride..(v + 1) * self.stride];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    /// All edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("same size");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph; vertex i of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len()).expect("induced subgraph within cap");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// 2-coloring check by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            let mut i = 0;
            while i < queue.len() {
                let v = queue[i];
                i += 1;
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// DOT emission with deterministic edge order; labels default to indices.
    pub fn to_dot(&self, name: &str, labels: Option<&[String]>) -> String {
        let mut s = String::new();
        writeln!(s, "graph \"{name}\" {{").unwrap();
        for v in 0..self.n {
            match labels {
                Some(l) => writeln!(s, "  {v} [label=\"{v}: {}\"];", l[v]).unwrap(),
                None => writeln!(s, "  {v};").unwrap(),
            }
        }
        for (u, v) in self.edges() {
            writeln!(s, "  {u} -- {v};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Γ(G): x ~ y iff x ≠ y and the order of x∘y is prime.
///
/// x∘y and y∘x are conjugate, so their orders agree even in non-abelian
/// groups; the builder asserts this instead of assuming it.
pub fn build_poeg(group: &Group) -> Result<Graph> {
    let n = group.order();
    let mut g = Graph::new(n)?;
    for x in 0..n {
        for y in x + 1..n {
            let oxy = group.element_order(group.op(x, y));
            let oyx = group.element_order(group.op(y, x));
            assert_eq!(oxy, oyx, "order of xy and yx must agree");
            if numth::is_prime(oxy as u64) {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

/// Cay+(G, S): g ~ h iff g ≠ h and g∘h ∈ S. Abelian groups only.
pub fn build_cayley_sum(group: &Group, connection: &[usize]) -> Result<Graph> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = group.order();
    let mut in_s = vec![false; n];
    for &s in connection {
        assert!(s < n, "connection set element out of range");
        in_s[s] = true;
    }
    let mut g = Graph::new(n)?;
    for x in 0..n {
        for y in x + 1..n {
            if in_s[group.op(x, y)] {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

/// Human-readable vertex labels for DOT output.
pub fn element_labels(group: &Group) -> Vec<String> {
    (0..group.order()).map(|v| group.element_name(v)).collect()
}
