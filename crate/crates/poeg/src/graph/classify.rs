//! Component classification against closed-form structural templates.
//!
//! Components of size <= 16 are matched by explicit isomorphism testing
//! against constructed template instances; larger ones by direct structural
//! checks. Template priority puts the more specific name first, so a
//! 4-cycle reports CYCLE4 (not the m = 2 complete multipartite form) and an
//! 8-vertex cube reports CUBE (not the n = 4 clique-prism complement).

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt;

/// Structural label of a connected component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentLabel {
    /// K_k.
    Clique(usize),
    /// C_4.
    Cycle4,
    /// C_4 □ P_2, the 3-regular cube on 8 vertices.
    Cube,
    /// Join of m copies of the 2-vertex empty graph (complete m-partite,
    /// all parts of size 2). m >= 3 here; m = 2 is CYCLE4.
    CompleteMultipartite2Parts(usize),
    /// Complement of K_n □ P_2, n >= 3 (n = 4 is CUBE).
    ComplementKnBoxP2(usize),
    /// No template matched; carries the sorted degree sequence.
    Other(Vec<usize>),
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentLabel::Clique(k) => write!(f, "CLIQUE({k})"),
            ComponentLabel::Cycle4 => write!(f, "CYCLE4"),
            ComponentLabel::Cube => write!(f, "CUBE"),
            ComponentLabel::CompleteMultipartite2Parts(m) => {
                write!(f, "COMPLETE_MULTIPARTITE_2PARTS({m})")
            }
            ComponentLabel::ComplementKnBoxP2(n) => write!(f, "COMPLEMENT_KN_BOX_P2({n})"),
            ComponentLabel::Other(_) => write!(f, "OTHER"),
        }
    }
}

/// K_k.
pub fn template_clique(k: usize) -> Graph {
    let mut g = Graph::new(k).unwrap();
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
    }
    g
}

/// C_n.
pub fn template_cycle(n: usize) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    g
}

/// The cube C_4 □ P_2: two 4-cycles joined by a perfect matching.
pub fn template_cube() -> Graph {
    let mut g = Graph::new(8).unwrap();
    for v in 0..4 {
        g.add_edge(v, (v + 1) % 4);
        g.add_edge(4 + v, 4 + (v + 1) % 4);
        g.add_edge(v, 4 + v);
    }
    g
}

/// Complete m-partite with parts {2i, 2i+1}.
pub fn template_complete_multipartite_2parts(m: usize) -> Graph {
    let mut g = Graph::new(2 * m).unwrap();
    for u in 0..2 * m {
        for v in u + 1..2 * m {
            if u / 2 != v / 2 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// K_n □ P_2: two n-cliques {0..n} and {n..2n} plus the matching i -- n+i.
pub fn template_kn_box_p2(n: usize) -> Graph {
    let mut g = Graph::new(2 * n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
            g.add_edge(n + u, n + v);
        }
        g.add_edge(u, n + u);
    }
    g
}

pub fn template_complement_kn_box_p2(n: usize) -> Graph {
    template_kn_box_p2(n).complement()
}

/// Exact isomorphism test for small graphs by degree-pruned backtracking.
pub fn is_isomorphic_small(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let n = a.n();
    if n == 0 {
        return true;
    }
    // map a-vertices in descending-degree order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut mapping = vec![usize::MAX; n]; // a -> b
    let mut used = vec![false; n];

    fn backtrack(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        pos: usize,
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let va = order[pos];
        for vb in 0..b.n() {
            if used[vb] || a.degree(va) != b.degree(vb) {
                continue;
            }
            let consistent = order[..pos]
                .iter()
                .all(|&wa| a.has_edge(va, wa) == b.has_edge(vb, mapping[wa]));
            if !consistent {
                continue;
            }
            mapping[va] = vb;
            used[vb] = true;
            if backtrack(a, b, order, pos + 1, mapping, used) {
                return true;
            }
            mapping[va] = usize::MAX;
            used[vb] = false;
        }
        false
    }

    backtrack(a, b, &order, 0, &mut mapping, &mut used)
}

fn is_complete(h: &Graph) -> bool {
    (0..h.n()).all(|v| h.degree(v) == h.n() - 1)
}

/// Complement (within the component) is a perfect matching.
fn is_complete_multipartite_2parts(h: &Graph) -> bool {
    let n = h.n();
    n.is_multiple_of(2) && n >= 4 && (0..n).all(|v| h.degree(v) == n - 2)
    // degree n-2 everywhere on a simple graph forces the non-neighbour
    // relation to be a perfect matching
}

fn is_cube(h: &Graph) -> bool {
    h.n() == 8 && h.edge_count() == 12 && (0..8).all(|v| h.degree(v) == 3) && h.is_bipartite()
}

/// Complement of K_n □ P_2 for n >= 3: the complement graph splits into two
/// n-cliques joined by a perfect matching.
fn is_complement_kn_box_p2(h: &Graph) -> Option<usize> {
    let total = h.n();
    if !total.is_multiple_of(2) || total < 6 {
        return None;
    }
    let n = total / 2;
    if (0..total).any(|v| h.degree(v) != total - 1 - n) {
        return None;
    }
    let c = h.complement(); // should be K_n □ P_2: n-regular
    let nb0: Vec<usize> = c.neighbors(0).collect();
    debug_assert_eq!(nb0.len(), n);
    'partner: for &w in &nb0 {
        // try w as the matched partner of vertex 0
        let mut clique1: Vec<usize> = vec![0];
        clique1.extend(nb0.iter().copied().filter(|&x| x != w));
        if clique1.len() != n {
            continue;
        }
        let in1 = {
            let mut f = vec![false; total];
            for &v in &clique1 {
                f[v] = true;
            }
            f
        };
        let clique2: Vec<usize> = (0..total).filter(|&v| !in1[v]).collect();
        for set in [&clique1, &clique2] {
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    if !c.has_edge(u, v) {
                        continue 'partner;
                    }
                }
            }
        }
        // cross edges must form a perfect matching
        let mut matched = vec![0usize; total];
        for &u in &clique1 {
            let cross: Vec<usize> = c.neighbors(u).filter(|&v| !in1[v]).collect();
            if cross.len() != 1 {
                continue 'partner;
            }
            matched[cross[0]] += 1;
        }
        if clique2.iter().all(|&v| matched[v] == 1) {
            return Some(n);
        }
    }
    None
}

/// Classifies a connected component of `g` against the templates.
///
/// `comp` must be exactly one connected component (ascending vertex order is
/// not required); anything else is rejected.
pub fn classify_component(g: &Graph, comp: &[usize]) -> Result<ComponentLabel> {
    // comp must be closed under adjacency and internally connected
    let mut in_comp = vec![false; g.n()];
    for &v in comp {
        if v >= g.n() || in_comp[v] {
            return Err(Error::NotAComponent);
        }
        in_comp[v] = true;
    }
    for &v in comp {
        if g.neighbors(v).any(|u| !in_comp[u]) {
            return Err(Error::NotAComponent);
        }
    }
    let h = g.induced(comp);
    if !h.is_connected() {
        return Err(Error::NotAComponent);
    }

    let n = h.n();
    if n <= 16 {
        if is_isomorphic_small(&h, &template_clique(n)) {
            return Ok(ComponentLabel::Clique(n));
        }
        if n == 4 && is_isomorphic_small(&h, &template_cycle(4)) {
            return Ok(ComponentLabel::Cycle4);
        }
        if n == 8 && is_isomorphic_small(&h, &template_cube()) {
            return Ok(ComponentLabel::Cube);
        }
        if n.is_multiple_of(2)
            && n >= 6
            && is_isomorphic_small(&h, &template_complete_multipartite_2parts(n / 2))
        {
            return Ok(ComponentLabel::CompleteMultipartite2Parts(n / 2));
        }
        if n.is_multiple_of(2)
            && n >= 6
            && is_isomorphic_small(&h, &template_complement_kn_box_p2(n / 2))
        {
            return Ok(ComponentLabel::ComplementKnBoxP2(n / 2));
        }
    } else {
        if is_complete(&h) {
            return Ok(ComponentLabel::Clique(n));
        }
        if is_complete_multipartite_2parts(&h) {
            return Ok(ComponentLabel::CompleteMultipartite2Parts(n / 2));
        }
        if is_cube(&h) {
            return Ok(ComponentLabel::Cube);
        }
        if let Some(k) = is_complement_kn_box_p2(&h) {
            return Ok(ComponentLabel::ComplementKnBoxP2(k));
        }
    }
    Ok(ComponentLabel::Other(h.degree_sequence()))
}
