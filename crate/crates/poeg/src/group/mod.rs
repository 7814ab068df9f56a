//! Finite groups with exact element arithmetic.
//!
//! Elements are indexed 0..|G|-1 with 0 the identity. Cyclic, product,
//! dihedral and dicyclic groups compose in closed form; anything else is
//! backed by a validated Cayley table. Product groups index elements in
//! mixed radix with the leftmost factor most significant, which keeps
//! reported element sets and golden outputs stable.

pub mod cayley;
pub mod character;

use crate::error::{Error, Result};
use crate::numth;
use std::fmt;
use std::path::PathBuf;

pub use character::CharacterIndex;

/// How a finite group is presented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Z_n, n >= 1.
    Cyclic(usize),
    /// Direct product of one or more factors.
    Product(Vec<GroupSpec>),
    /// D_n of order 2n, n >= 2; elements are rotation/reflection pairs.
    Dihedral(usize),
    /// Dicyclic group of order 4m, m >= 2: <a, b | a^{2m} = e, b^2 = a^m,
    /// b a b^{-1} = a^{-1}>. Generalized quaternion when m is a power of 2.
    Dicyclic(usize),
    /// Explicit Cayley table loaded from a file (validated on load).
    CayleyTable(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z:{n}"),
            GroupSpec::Product(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Dicyclic(m) => write!(f, "Dic:{m}"),
            GroupSpec::CayleyTable(p) => write!(f, "table:{}", p.display()),
        }
    }
}

#[derive(Clone, Debug)]
enum Composition {
    Cyclic(usize),
    Product(Vec<Group>),
    Dihedral(usize),
    Dicyclic(usize),
    Table(cayley::CayleyTable),
}

/// An immutable finite group. All queries are pure.
#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    comp: Composition,
    abelian: bool,
    abelian_shape: Option<Vec<usize>>,
    exponent: usize,
    element_orders: Vec<usize>,
    name: String,
}

impl Group {
    pub fn new(spec: &GroupSpec) -> Result<Group> {
        let comp = match spec {
            GroupSpec::Cyclic(n) => {
                if *n < 1 {
                    return Err(Error::InvalidSpec("cyclic order must be >= 1".into()));
                }
                Composition::Cyclic(*n)
            }
            GroupSpec::Product(factors) => {
                if factors.is_empty() {
                    return Err(Error::InvalidSpec("product needs >= 1 factor".into()));
                }
                let groups = factors.iter().map(Group::new).collect::<Result<Vec<_>>>()?;
                Composition::Product(groups)
            }
            GroupSpec::Dihedral(n) => {
                if *n < 2 {
                    return Err(Error::InvalidSpec("dihedral index must be >= 2".into()));
                }
                Composition::Dihedral(*n)
            }
            GroupSpec::Dicyclic(m) => {
                if *m < 2 {
                    return Err(Error::InvalidSpec("dicyclic index must be >= 2".into()));
                }
                Composition::Dicyclic(*m)
            }
            GroupSpec::CayleyTable(path) => {
                let text = std::fs::read_to_string(path)?;
                Composition::Table(cayley::CayleyTable::parse_and_validate(&text)?)
            }
        };
        Ok(Self::finish(comp, spec.to_string()))
    }

    /// Builds a group from Cayley-table text (same format as table files).
    pub fn from_cayley_table_text(name: &str, text: &str) -> Result<Group> {
        let table = cayley::CayleyTable::parse_and_validate(text)?;
        Ok(Self::finish(Composition::Table(table), name.to_string()))
    }

    fn finish(comp: Composition, name: String) -> Group {
        let order = match &comp {
            Composition::Cyclic(n) => *n,
            Composition::Product(gs) => gs.iter().map(|g| g.order).product(),
            Composition::Dihedral(n) => 2 * n,
            Composition::Dicyclic(m) => 4 * m,
            Composition::Table(t) => t.order(),
        };
        let abelian_shape = match &comp {
            Composition::Cyclic(n) => Some(vec![*n]),
            Composition::Product(gs) => {
                let mut shape = Vec::new();
                let mut all = true;
                for g in gs {
                    match &g.abelian_shape {
                        Some(s) => shape.extend_from_slice(s),
                        None => {
                            all = false;
                            break;
                        }
                    }
                }
                if all {
                    Some(shape)
                } else {
                    None
                }
            }
            // D_2 is the Klein four-group
            Composition::Dihedral(2) => Some(vec![2, 2]),
            _ => None,
        };
        let mut g = Group {
            order,
            abelian: abelian_shape.is_some(),
            abelian_shape,
            exponent: 1,
            element_orders: Vec::new(),
            comp,
            name,
        };
        if !g.abelian {
            g.abelian = g.commutes_everywhere();
        }
        g.element_orders = (0..order).map(|x| g.order_by_iteration(x)).collect();
        g.exponent = g
            .element_orders
            .iter()
            .fold(1u64, |acc, &o| numth::lcm(acc, o as u64)) as usize;
        g
    }

    fn commutes_everywhere(&self) -> bool {
        for a in 0..self.order {
            for b in a + 1..self.order {
                if self.op(a, b) != self.op(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    /// Cyclic factor orders (n_1, ..., n_k) when the group was built from an
    /// abelian presentation; None for table-backed or non-abelian groups.
    pub fn abelian_shape(&self) -> Option<&[usize]> {
        self.abelian_shape.as_deref()
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.comp {
            Composition::Cyclic(n) => (a + b) % n,
            Composition::Product(gs) => {
                let ca = self.decode(a);
                let cb = self.decode(b);
                let mut out = 0usize;
                for (g, (&x, &y)) in gs.iter().zip(ca.iter().zip(&cb)) {
                    out = out * g.order + g.op(x, y);
                }
                out
            }
            Composition::Dihedral(n) => {
                let (i, e) = (a % n, a / n);
                let (j, d) = (b % n, b / n);
                let jj = if e == 1 { (n - j) % n } else { j };
                (i + jj) % n + n * (e ^ d)
            }
            Composition::Dicyclic(m) => {
                let n2 = 2 * m;
                let (i, e) = (a % n2, a / n2);
                let (j, d) = (b % n2, b / n2);
                match (e, d) {
                    (0, _) => (i + j) % n2 + n2 * d,
                    (_, 0) => (i + n2 - j) % n2 + n2,
                    _ => (i + n2 - j + m) % n2,
                }
            }
            Composition::Table(t) => t.op(a, b),
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        match &self.comp {
            Composition::Cyclic(n) => (n - a) % n,
            Composition::Product(gs) => {
                let coords = self.decode(a);
                let inv: Vec<usize> = gs.iter().zip(&coords).map(|(g, &c)| g.inverse(c)).collect();
                self.encode(&inv)
            }
            Composition::Dihedral(n) => {
                let (i, e) = (a % n, a / n);
                if e == 1 {
                    a
                } else {
                    (n - i) % n
                }
            }
            Composition::Dicyclic(m) => {
                let n2 = 2 * m;
                let (i, e) = (a % n2, a / n2);
                if e == 0 {
                    (n2 - i) % n2
                } else {
                    (i + m) % n2 + n2
                }
            }
            Composition::Table(t) => t.inverse(a),
        }
    }

    /// Coordinates of a product-group element (leftmost factor first).
    /// For non-product groups returns the singleton `[a]`.
    pub fn decode(&self, a: usize) -> Vec<usize> {
        match &self.comp {
            Composition::Product(gs) => {
                let mut coords = vec![0; gs.len()];
                let mut rest = a;
                for (k, g) in gs.iter().enumerate().rev() {
                    coords[k] = rest % g.order;
                    rest /= g.order;
                }
                coords
            }
            _ => vec![a],
        }
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        match &self.comp {
            Composition::Product(gs) => {
                assert_eq!(coords.len(), gs.len());
                let mut out = 0usize;
                for (g, &c) in gs.iter().zip(coords) {
                    out = out * g.order + c;
                }
                out
            }
            _ => {
                assert_eq!(coords.len(), 1);
                coords[0]
            }
        }
    }

    /// Coordinates w.r.t. the abelian shape (n_1, ..., n_k); requires shape.
    pub fn shape_coords(&self, a: usize) -> Vec<usize> {
        let shape = self.abelian_shape.as_ref().expect("abelian shape required");
        let mut coords = vec![0; shape.len()];
        let mut rest = a;
        for (k, &n) in shape.iter().enumerate().rev() {
            coords[k] = rest % n;
            rest /= n;
        }
        coords
    }

    pub fn shape_encode(&self, coords: &[usize]) -> usize {
        let shape = self.abelian_shape.as_ref().expect("abelian shape required");
        assert_eq!(coords.len(), shape.len());
        let mut out = 0usize;
        for (&n, &c) in shape.iter().zip(coords) {
            debug_assert!(c < n);
            out = out * n + c;
        }
        out
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    fn order_by_iteration(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1usize;
        while x != 0 {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Order via the divisor-of-exponent shortcut available to abelian-shape
    /// groups; used to cross-check the iterative path.
    pub fn order_by_shape(&self, a: usize) -> Option<usize> {
        let shape = self.abelian_shape.as_ref()?;
        let coords = self.shape_coords(a);
        let o = shape
            .iter()
            .zip(&coords)
            .map(|(&n, &c)| {
                let n = n as u64;
                let c = c as u64;
                n / numth::gcd(n, c)
            })
            .fold(1u64, numth::lcm);
        Some(o as usize)
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        let mut acc = 0usize;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            k >>= 1;
        }
        acc
    }

    /// S = { g : the order of g is prime }, ascending. Never contains 0.
    pub fn prime_order_set(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&g| numth::is_prime(self.element_orders[g] as u64))
            .collect()
    }

    /// The atom of g: generators of the cyclic subgroup generated by g,
    /// i.e. `{ g^k : gcd(k, ord(g)) = 1 }`.
    pub fn atom(&self, g: usize) -> Vec<usize> {
        let o = self.element_orders[g] as u64;
        let mut out: Vec<usize> = (1..=o)
            .filter(|&k| numth::gcd(k, o) == 1)
            .map(|k| self.power(g, k as usize))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> usize {
        self.element_orders.iter().filter(|&&o| o == 2).count()
    }

    /// { g : g^p = identity } for prime p; abelian groups only.
    pub fn p_torsion(&self, p: u64) -> Result<Vec<usize>> {
        if !self.abelian {
            return Err(Error::NotAbelian);
        }
        if !numth::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok((0..self.order)
            .filter(|&g| self.power(g, p as usize) == 0)
            .collect())
    }

    /// Human-readable element name for DOT labels and reports.
    pub fn element_name(&self, a: usize) -> String {
        match &self.comp {
            Composition::Cyclic(_) => format!("{a}"),
            Composition::Product(_) => {
                let coords = self.decode(a);
                let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            Composition::Dihedral(n) => {
                let (i, e) = (a % n, a / n);
                match (i, e) {
                    (0, 0) => "e".into(),
                    (_, 0) => format!("r{i}"),
                    (0, _) => "s".into(),
                    (_, _) => format!("r{i}s"),
                }
            }
            Composition::Dicyclic(m) => {
                let n2 = 2 * m;
                let (i, e) = (a % n2, a / n2);
                match (i, e) {
                    (0, 0) => "e".into(),
                    (_, 0) => format!("a{i}"),
                    (0, _) => "b".into(),
                    (_, _) => format!("a{i}b"),
                }
            }
            Composition::Table(_) => format!("g{a}"),
        }
    }

    /// Closure of a generating set under the group operation.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut frontier = vec![0usize];
        for &g in generators {
            if !seen[g] {
                seen[g] = true;
                frontier.push(g);
            }
        }
        let mut i = 0;
        while i < frontier.len() {
            let x = frontier[i];
            i += 1;
            for &g in generators {
                for y in [self.op(x, g), self.op(g, x)] {
                    if !seen[y] {
                        seen[y] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        let mut out: Vec<usize> = (0..self.order).filter(|&v| seen[v]).collect();
        out.sort_unstable();
        out
    }
}
