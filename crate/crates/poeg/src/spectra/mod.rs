//! Exact adjacency and Laplacian spectra.
//!
//! The brute-force path builds the requested matrix, takes its exact
//! characteristic polynomial and splits off integer roots; the graph is
//! integral for that matrix precisely when the residual factor is constant,
//! since a monic integer polynomial has no non-integer rational roots and a
//! symmetric matrix has a real spectrum.
//!
//! For abelian groups the Laplacian multiset is also assembled from
//! character sums over the prime-order set: |S| - χ(S) for each real
//! character and |S| ± |χ(S)| for each conjugate pair of non-real ones.
//! Closed forms for cyclic groups of odd prime-power and odd composite
//! order are provided alongside, so each route can check the others.

pub mod partition;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::Group;
use crate::matrix::IntMatrix;
use crate::numth;
use crate::poly::IntPoly;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixKind::Adjacency => write!(f, "adjacency"),
            MatrixKind::Laplacian => write!(f, "laplacian"),
        }
    }
}

/// Integer eigenvalues with multiplicities plus the monic residual factor
/// that has no integer roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub kind: MatrixKind,
    /// Sorted ascending by eigenvalue.
    pub eigenvalues: Vec<(i64, usize)>,
    /// Low-to-high coefficients; degree 0 iff the spectrum is fully integer.
    pub residual: IntPoly,
    /// Vertex count (= matrix dimension).
    pub n: usize,
    pub integral: bool,
}

impl SpectrumReport {
    fn new(kind: MatrixKind, n: usize, eigenvalues: Vec<(i64, usize)>, residual: IntPoly) -> Self {
        let integral = residual.degree() == 0;
        let report = SpectrumReport {
            kind,
            eigenvalues,
            residual,
            n,
            integral,
        };
        debug_assert_eq!(report.multiplicity_total() + report.residual.degree(), n);
        report
    }

    fn from_char_poly(kind: MatrixKind, n: usize, cp: &IntPoly) -> Self {
        let (roots, residual) = cp.integer_roots();
        let eigenvalues = roots
            .into_iter()
            .map(|(r, m)| (r.to_i64().expect("graph eigenvalues fit in i64"), m))
            .collect();
        Self::new(kind, n, eigenvalues, residual)
    }

    fn from_multiset(kind: MatrixKind, n: usize, mult: BTreeMap<i64, usize>) -> Self {
        let eigenvalues: Vec<(i64, usize)> = mult.into_iter().filter(|&(_, m)| m > 0).collect();
        Self::new(kind, n, eigenvalues, IntPoly::one())
    }

    pub fn multiplicity_total(&self) -> usize {
        self.eigenvalues.iter().map(|&(_, m)| m).sum()
    }

    /// Sum of all eigenvalues: Σ λ·mult plus the residual roots, which add
    /// up to minus the residual's second-highest coefficient.
    pub fn eigenvalue_sum(&self) -> num_bigint::BigInt {
        let mut s: num_bigint::BigInt = self
            .eigenvalues
            .iter()
            .map(|&(v, m)| num_bigint::BigInt::from(v) * num_bigint::BigInt::from(m as u64))
            .sum();
        let d = self.residual.degree();
        if d > 0 {
            s += -self.residual.coeff(d - 1);
        }
        s
    }

    pub fn multiplicity_of(&self, value: i64) -> usize {
        self.eigenvalues
            .iter()
            .find(|&&(v, _)| v == value)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }

    pub fn value_set(&self) -> BTreeSet<i64> {
        self.eigenvalues.iter().map(|&(v, _)| v).collect()
    }

    /// Structured text: kind, sorted (value, multiplicity) pairs, residual
    /// coefficients low-to-high, integrality verdict.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "kind: {}", self.kind).unwrap();
        let pairs: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|&(v, m)| format!("({v}, {m})"))
            .collect();
        writeln!(s, "eigenvalues: {}", pairs.join(" ")).unwrap();
        let coeffs: Vec<String> = self
            .residual
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect();
        writeln!(s, "residual: [{}]", coeffs.join(", ")).unwrap();
        writeln!(s, "integral: {}", self.integral).unwrap();
        s
    }

    /// One row per (eigenvalue, multiplicity).
    pub fn to_csv(&self) -> String {
        let mut s = String::from("eigenvalue,multiplicity\n");
        for &(v, m) in &self.eigenvalues {
            writeln!(s, "{v},{m}").unwrap();
        }
        s
    }
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zero(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    m
}

/// Degree diagonal minus adjacency.
pub fn laplacian_matrix(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zero(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, -1);
        m.set(v, u, -1);
    }
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as i64);
    }
    m
}

/// Exact spectrum split for the requested matrix of `g`.
pub fn integrality_verdict(g: &Graph, kind: MatrixKind) -> Result<SpectrumReport> {
    let m = match kind {
        MatrixKind::Adjacency => adjacency_matrix(g),
        MatrixKind::Laplacian => laplacian_matrix(g),
    };
    let cp = m.char_poly()?;
    Ok(SpectrumReport::from_char_poly(kind, g.n(), &cp))
}

/// Laplacian spectrum of Γ(G) for abelian G via character sums; always a
/// fully integer multiset.
pub fn laplacian_spectrum_abelian(group: &Group) -> Result<SpectrumReport> {
    let s_size = group.prime_order_set().len() as i64;
    let chars = group.character_indices()?;
    let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
    for t in &chars {
        if group.is_real_character(t)? {
            *mult
                .entry(s_size - group.character_sum_prime_order_set(t)?)
                .or_insert(0) += 1;
        } else {
            let conj = group.conjugate_character(t)?;
            if *t < conj {
                let c = group.character_sum_prime_order_set(t)?.abs();
                *mult.entry(s_size + c).or_insert(0) += 1;
                *mult.entry(s_size - c).or_insert(0) += 1;
            }
        }
    }
    Ok(SpectrumReport::from_multiset(
        MatrixKind::Laplacian,
        group.order(),
        mult,
    ))
}

/// Closed-form Laplacian spectrum of Γ(Z_{p^r}) for odd prime p:
/// 0 with (p^{r-1}+1)/2, 2(p-1) with (p^{r-1}-1)/2, and p, p-2 each with
/// (p^r - p^{r-1})/2. Zero multiplicities (r = 1) are dropped.
pub fn laplacian_spectrum_cyclic_prime_power(p: u64, r: u32) -> Result<SpectrumReport> {
    if p == 2 || !numth::is_prime(p) {
        return Err(Error::OddPrimeRequired(p));
    }
    if r == 0 {
        return Err(Error::BadFactorization("exponent must be >= 1".into()));
    }
    let pr = p
        .checked_pow(r)
        .filter(|&v| v <= 1 << 32)
        .ok_or_else(|| Error::BadFactorization(format!("{p}^{r} is out of range")))?;
    let pr1 = p.pow(r - 1);
    let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
    let mut add = |value: i64, m: u64| {
        if m > 0 {
            *mult.entry(value).or_insert(0) += m as usize;
        }
    };
    add(0, pr1.div_ceil(2));
    add(2 * (p as i64 - 1), (pr1 - 1) / 2);
    add(p as i64, (pr - pr1) / 2);
    add(p as i64 - 2, (pr - pr1) / 2);
    Ok(SpectrumReport::from_multiset(
        MatrixKind::Laplacian,
        pr as usize,
        mult,
    ))
}

/// Laplacian eigenvalue set (values only, no multiplicities) of Γ(Z_n) for
/// odd n given as its prime factorization. Writing P for the sum of the
/// distinct primes and k for their count, the set is
/// {0, P, P - 2k} ∪ {P - p(A), P + p(A) - 2k : ∅ ≠ A ⊊ primes} plus
/// 2(P - k) exactly when n is not square-free.
pub fn laplacian_eigenvalue_set_cyclic_odd(factors: &[(u64, u32)]) -> Result<BTreeSet<i64>> {
    if factors.is_empty() {
        return Err(Error::BadFactorization(
            "need at least one prime factor".into(),
        ));
    }
    let mut seen = BTreeSet::new();
    for &(p, r) in factors {
        if p == 2 || !numth::is_prime(p) {
            return Err(Error::OddPrimeRequired(p));
        }
        if r == 0 {
            return Err(Error::BadFactorization(format!(
                "exponent of {p} must be >= 1"
            )));
        }
        if !seen.insert(p) {
            return Err(Error::BadFactorization(format!("repeated prime {p}")));
        }
    }
    if factors.len() > 20 {
        return Err(Error::BadFactorization("too many prime factors".into()));
    }
    let k = factors.len() as i64;
    let psum: i64 = factors.iter().map(|&(p, _)| p as i64).sum();
    let mut set = BTreeSet::new();
    set.insert(0);
    set.insert(psum);
    set.insert(psum - 2 * k);
    if factors.iter().any(|&(_, r)| r >= 2) {
        set.insert(2 * (psum - k));
    }
    let kk = factors.len();
    for mask in 1..(1u32 << kk) - 1 {
        let pa: i64 = factors
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(p, _))| p as i64)
            .sum();
        set.insert(psum - pa);
        set.insert(psum + pa - 2 * k);
    }
    Ok(set)
}

/// Ramanujan sum c(s, n) = Σ_{gcd(k,n)=1} e^{2πiks/n}, computed through the
/// totient/Möbius identity with g = gcd(s, n): φ(n)/φ(n/g) · μ(n/g).
pub fn ramanujan_sum(s: u64, n: u64) -> i64 {
    assert!(n >= 1);
    let g = numth::gcd(s, n);
    let m = n / g;
    let phi_n = numth::totient(n);
    let phi_m = numth::totient(m);
    debug_assert_eq!(phi_n % phi_m, 0, "phi(m) divides phi(n) for m | n");
    (phi_n / phi_m) as i64 * numth::mobius(m)
}
