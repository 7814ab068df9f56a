//! Monic integer polynomials with exact division and integer-root extraction.
//!
//! All arithmetic is over arbitrary-precision integers; there is no floating
//! point anywhere in this module. A monic integer polynomial has no rational
//! roots other than integers, so splitting off every integer root leaves a
//! monic residual factor whose real roots (if any) are irrational.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

/// A monic polynomial with integer coefficients, stored low-to-high.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The constant polynomial 1 (degree 0).
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds from low-to-high coefficients. Panics if not monic.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            coeffs.last().map(|c| c.is_one()).unwrap_or(false),
            "IntPoly must be monic"
        );
        IntPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x - r
    pub fn linear(root: &BigInt) -> Self {
        IntPoly {
            coeffs: vec![-root.clone(), BigInt::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Exact division by a monic divisor. Returns None if the remainder is
    /// nonzero. Since the divisor is monic, no fractions ever appear.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.degree() > self.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let qd = self.degree() - dd;
        let mut quot = vec![BigInt::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let q = rem[k + dd].clone();
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Synthetic division by (x - root); None if root is not a root.
    pub fn divide_linear(&self, root: &BigInt) -> Option<IntPoly> {
        if self.degree() == 0 {
            return None;
        }
        let mut out = vec![BigInt::zero(); self.degree()];
        let mut carry = BigInt::zero();
        for i in (0..self.degree()).rev() {
            carry = &carry * root + &self.coeffs[i + 1];
            out[i] = carry.clone();
        }
        let rem = &carry * root + &self.coeffs[0];
        if rem.is_zero() {
            Some(IntPoly::from_coeffs(out))
        } else {
            None
        }
    }

    /// Upper bound on the absolute value of every complex root
    /// (Fujiwara: |z| <= 2 * max_k |c_{n-k}|^{1/k}), intersected with the
    /// Cauchy bound 1 + max|c_i|. Returns at least 0.
    fn root_bound(&self) -> BigInt {
        let n = self.degree();
        if n == 0 {
            return BigInt::zero();
        }
        let mut fujiwara = BigInt::zero();
        for k in 1..=n {
            let c = self.coeffs[n - k].abs();
            if c.is_zero() {
                continue;
            }
            // ceil(c^(1/k))
            let mut r = c.nth_root(k as u32);
            if num_traits::pow::Pow::pow(&r, k as u32) < c {
                r += 1;
            }
            if r > fujiwara {
                fujiwara = r;
            }
        }
        fujiwara *= 2;
        let cauchy = self
            .coeffs
            .iter()
            .take(n)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
            + 1;
        fujiwara.min(cauchy)
    }

    /// Splits off every integer root (with multiplicity) and returns the
    /// monic residual factor, which has no integer roots.
    ///
    /// Candidates are divisors of the constant term within the root bound;
    /// a root of any monic factor of `self` is a root of `self`, so one
    /// candidate sweep suffices. The sweep requires the bound to fit in u64,
    /// which holds for every characteristic polynomial of a bounded-entry
    /// matrix (the bound is at most twice the largest row sum).
    pub fn integer_roots(&self) -> (Vec<(BigInt, usize)>, IntPoly) {
        let mut roots: Vec<(BigInt, usize)> = Vec::new();
        let mut res = self.clone();

        // x^m factors first
        let mut zero_mult = 0usize;
        while res.degree() > 0 && res.coeffs[0].is_zero() {
            res = res
                .divide_linear(&BigInt::zero())
                .expect("zero constant term implies root 0");
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((BigInt::zero(), zero_mult));
        }
        if res.degree() == 0 {
            return (roots, res);
        }

        let bound = res.root_bound();
        let bound: u64 = u64::try_from(&bound).unwrap_or_else(|_| {
            panic!("integer root bound {bound} exceeds the supported sweep range")
        });
        let original = res.clone();
        for mag in 1..=bound {
            for sign in [1i64, -1i64] {
                let cand = BigInt::from(sign) * mag;
                // Divisibility of the original constant term is necessary for
                // any root of any monic factor.
                if !original.coeffs[0].is_multiple_of(&cand) {
                    continue;
                }
                let mut mult = 0usize;
                while let Some(q) = res.divide_linear(&cand) {
                    res = q;
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((cand, mult));
                }
            }
            if res.degree() == 0 {
                break;
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, res)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for i in (0..=n).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() && !(n == 0 && i == 0) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Serialized as decimal strings low-to-high, so reports stay readable and
/// exact regardless of coefficient size.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}
