//! Exact characteristic polynomials of integer matrices.
//!
//! The polynomial is computed modulo a set of 62-bit primes (Hessenberg
//! reduction plus the standard recurrence, O(n^3) per prime) and recombined
//! by the Chinese remainder theorem. The prime product is chosen to exceed
//! twice a provable coefficient bound, so the result is exact integer
//! arithmetic end to end: coefficients of det(xI - M) are elementary
//! symmetric functions of the eigenvalues, and every eigenvalue is bounded
//! in absolute value by the largest absolute row sum (Gershgorin).

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::sync::Mutex;

/// Hard dimension limit for exact characteristic polynomials.
pub const CHAR_POLY_HARD_CAP: usize = 4096;

/// Default dimension cap applied by user-facing entry points; overridable.
pub const DEFAULT_SPECTRUM_DIM_CAP: usize = 300;

/// Dense square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            a: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = IntMatrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.a[i * n + j] = v;
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    fn max_abs_row_sum(&self) -> u64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).unsigned_abs()).sum())
            .max()
            .unwrap_or(0)
    }

    /// det(xI - M), monic of degree n, exact.
    pub fn char_poly(&self) -> Result<IntPoly> {
        let n = self.n;
        if n > CHAR_POLY_HARD_CAP {
            return Err(Error::DimensionCap {
                dim: n,
                cap: CHAR_POLY_HARD_CAP,
            });
        }
        if n == 0 {
            return Ok(IntPoly::one());
        }
        let bound = coefficient_bound(n, self.max_abs_row_sum());
        let primes = primes_for_bound(&bound);
        let residue_polys: Vec<Vec<u64>> = primes
            .iter()
            .map(|&p| char_poly_mod_p(&self.a, n, p))
            .collect();
        Ok(crt_combine(&residue_polys, &primes, n))
    }
}

/// max_k C(n,k) * R^k with R = max(row-sum bound, 1); every coefficient of the
/// characteristic polynomial is bounded by this in absolute value.
fn coefficient_bound(n: usize, row_sum: u64) -> BigInt {
    let r = BigInt::from(row_sum.max(1));
    let mut binom = BigInt::one();
    let mut rpow = BigInt::one();
    let mut best = BigInt::one();
    for k in 1..=n {
        binom = binom * BigInt::from((n - k + 1) as u64) / BigInt::from(k as u64);
        rpow *= &r;
        let cand = &binom * &rpow;
        if cand > best {
            best = cand;
        }
    }
    best
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

static PRIME_POOL: Mutex<Vec<u64>> = Mutex::new(Vec::new());

/// Returns primes just below 2^62 whose product exceeds 2*bound + 1.
fn primes_for_bound(bound: &BigInt) -> Vec<u64> {
    let target = bound * 2 + 1;
    let mut pool = PRIME_POOL.lock().unwrap();
    let mut product = BigInt::one();
    let mut used = 0usize;
    loop {
        while used >= pool.len() {
            let mut cand = pool.last().map(|&p| p - 2).unwrap_or((1u64 << 62) - 1);
            while !is_prime_u64(cand) {
                cand -= 2;
            }
            pool.push(cand);
        }
        product *= BigInt::from(pool[used]);
        used += 1;
        if product > target {
            return pool[..used].to_vec();
        }
    }
}

/// Characteristic polynomial of an integer matrix modulo prime p, low-to-high,
/// via similarity reduction to upper Hessenberg form and the leading-minor
/// recurrence.
fn char_poly_mod_p(a: &[i64], n: usize, p: u64) -> Vec<u64> {
    let red = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut m: Vec<u64> = a.iter().map(|&v| red(v)).collect();
    let idx = |i: usize, j: usize| i * n + j;

    // Hessenberg reduction: M <- P M P^{-1} with elementary similarities.
    for k in 0..n.saturating_sub(2) {
        let pivot = (k + 1..n).find(|&r| m[idx(r, k)] != 0);
        let Some(pivot) = pivot else { continue };
        if pivot != k + 1 {
            for j in 0..n {
                m.swap(idx(pivot, j), idx(k + 1, j));
            }
            for i in 0..n {
                m.swap(idx(i, pivot), idx(i, k + 1));
            }
        }
        let inv = inv_mod(m[idx(k + 1, k)], p);
        for i in k + 2..n {
            let f = mul_mod(m[idx(i, k)], inv, p);
            if f == 0 {
                continue;
            }
            // row_i -= f * row_{k+1}
            for j in k..n {
                let sub = mul_mod(f, m[idx(k + 1, j)], p);
                m[idx(i, j)] = (m[idx(i, j)] + p - sub) % p;
            }
            // col_{k+1} += f * col_i
            for r in 0..n {
                let add = mul_mod(f, m[idx(r, i)], p);
                m[idx(r, k + 1)] = (m[idx(r, k + 1)] + add) % p;
            }
        }
    }

    // p_0 = 1; p_i = (x - h_ii) p_{i-1} - sum_k h_ki * (prod subdiagonals) * p_{k-1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for i in 1..=n {
        let h = |r: usize, c: usize| m[idx(r - 1, c - 1)];
        let prev = &polys[i - 1];
        let mut cur = vec![0u64; i + 1];
        // (x - h_ii) * prev
        for (d, &c) in prev.iter().enumerate() {
            cur[d + 1] = (cur[d + 1] + c) % p;
            let sub = mul_mod(h(i, i), c, p);
            cur[d] = (cur[d] + p - sub) % p;
        }
        let mut subdiag_prod = 1u64;
        for k in (1..i).rev() {
            subdiag_prod = mul_mod(subdiag_prod, h(k + 1, k), p);
            if subdiag_prod == 0 {
                break;
            }
            let scale = mul_mod(h(k, i), subdiag_prod, p);
            if scale == 0 {
                continue;
            }
            for (d, &c) in polys[k - 1].iter().enumerate() {
                let sub = mul_mod(scale, c, p);
                cur[d] = (cur[d] + p - sub) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// Garner-style CRT combination into symmetric-range BigInt coefficients.
fn crt_combine(residue_polys: &[Vec<u64>], primes: &[u64], n: usize) -> IntPoly {
    let mut coeffs = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let mut x = BigInt::from(residue_polys[0][d]);
        let mut modulus = BigInt::from(primes[0]);
        for (rp, &p) in residue_polys.iter().zip(primes).skip(1) {
            let x_mod_p = big_mod_u64(&x, p);
            let delta = (rp[d] + p - x_mod_p) % p;
            let minv = inv_mod(big_mod_u64(&modulus, p), p);
            let t = mul_mod(delta, minv, p);
            x += &modulus * BigInt::from(t);
            modulus *= BigInt::from(p);
        }
        // symmetric range
        if &x * 2 > modulus {
            x -= &modulus;
        }
        coeffs.push(x);
    }
    IntPoly::from_coeffs(coeffs)
}

fn big_mod_u64(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.is_negative() {
        r + BigInt::from(p)
    } else {
        r
    };
    u64::try_from(r).unwrap()
}
