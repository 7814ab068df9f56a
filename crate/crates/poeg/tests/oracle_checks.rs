//! Cross-validation of the production paths against independent oracles.

mod common;

use common::{char_poly_faddeev_leverrier, planar_by_minor_search};
use poeg::graph::{build_poeg, Graph};
use poeg::group::{Group, GroupSpec};
use poeg::planar::is_planar;
use poeg::spectra::partition::{equitable_quotient, order_partition};
use poeg::spectra::{adjacency_matrix, laplacian_matrix};
use poeg::IntMatrix;

/// xorshift, good enough for reproducible test instances
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_matrix(rng: &mut Rng, n: usize, lo: i64, hi: i64) -> IntMatrix {
    let mut m = IntMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, lo + rng.below((hi - lo + 1) as u64) as i64);
        }
    }
    m
}

fn random_graph(rng: &mut Rng, n: usize, density_pct: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(100) < density_pct {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn char_poly_matches_trace_recurrence_on_random_matrices() {
    let mut rng = Rng(0x9E3779B97F4A7C15);
    for n in 1..=12 {
        for _ in 0..8 {
            let m = random_matrix(&mut rng, n, -4, 4);
            assert_eq!(
                m.char_poly().unwrap(),
                char_poly_faddeev_leverrier(&m),
                "dimension {n}"
            );
        }
    }
    // larger sparse ones
    for n in [20, 33, 40] {
        let mut m = IntMatrix::zero(n);
        for _ in 0..3 * n {
            let i = rng.below(n as u64) as usize;
            let j = rng.below(n as u64) as usize;
            m.set(i, j, rng.below(7) as i64 - 3);
        }
        assert_eq!(m.char_poly().unwrap(), char_poly_faddeev_leverrier(&m));
    }
}

#[test]
fn char_poly_matches_oracle_on_poeg_matrices() {
    for spec in [
        GroupSpec::Cyclic(9),
        GroupSpec::Cyclic(16),
        GroupSpec::Cyclic(25),
        GroupSpec::Dihedral(7),
        GroupSpec::Dicyclic(4),
        GroupSpec::Product(vec![GroupSpec::Cyclic(4), GroupSpec::Cyclic(4)]),
        GroupSpec::Product(vec![GroupSpec::Cyclic(3), GroupSpec::Cyclic(9)]),
    ] {
        let group = Group::new(&spec).unwrap();
        let g = build_poeg(&group).unwrap();
        let a = adjacency_matrix(&g);
        assert_eq!(a.char_poly().unwrap(), char_poly_faddeev_leverrier(&a));
        let l = laplacian_matrix(&g);
        assert_eq!(l.char_poly().unwrap(), char_poly_faddeev_leverrier(&l));
        // quotient matrices are non-symmetric; check those too
        let pi = order_partition(&group);
        if let Ok(q) = equitable_quotient(&g, &pi) {
            assert_eq!(
                q.matrix().char_poly().unwrap(),
                char_poly_faddeev_leverrier(q.matrix())
            );
        }
    }
}

#[test]
fn planarity_agrees_with_minor_search_on_small_poeg_graphs() {
    // every catalog group of order <= 8 (graph small enough for the oracle)
    for entry in poeg::catalog::default_catalog(8) {
        if entry.group.order() > 8 {
            continue;
        }
        let g = build_poeg(&entry.group).unwrap();
        assert_eq!(
            is_planar(&g).planar,
            planar_by_minor_search(&g),
            "{}",
            entry.descriptor
        );
    }
}

#[test]
fn planarity_agrees_with_minor_search_on_random_graphs() {
    let mut rng = Rng(0xDEADBEEFCAFEF00D);
    let mut planar_seen = 0;
    let mut nonplanar_seen = 0;
    for n in 5..=8 {
        for density in [20, 30, 50, 70, 85, 95] {
            for _ in 0..10 {
                let g = random_graph(&mut rng, n, density);
                let lr = is_planar(&g).planar;
                let oracle = planar_by_minor_search(&g);
                assert_eq!(lr, oracle, "n={n} density={density} edges={:?}", g.edges());
                if lr {
                    planar_seen += 1;
                } else {
                    nonplanar_seen += 1;
                }
            }
        }
    }
    // make sure the sample actually exercised both verdicts
    assert!(planar_seen > 10, "sample too skewed: {planar_seen} planar");
    assert!(
        nonplanar_seen > 10,
        "sample too skewed: {nonplanar_seen} non-planar"
    );
}

#[test]
fn planarity_known_verdicts_k5_k33_families() {
    // K5 and K33 with increasing subdivision depth
    for extra in 0..3 {
        let mut g = Graph::new(5 + extra).unwrap();
        // K5 with one edge subdivided into a path through the extra vertices
        for u in 0..5usize {
            for v in u + 1..5 {
                if (u, v) != (0, 1) {
                    g.add_edge(u, v);
                }
            }
        }
        let mut prev = 0;
        for k in 0..extra {
            g.add_edge(prev, 5 + k);
            prev = 5 + k;
        }
        g.add_edge(prev, 1);
        assert!(!is_planar(&g).planar, "subdivided K5, extra={extra}");
        if g.n() <= 8 {
            assert!(!planar_by_minor_search(&g));
        }
    }
}
