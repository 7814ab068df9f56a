//! Irreducible characters of abelian groups, evaluated exactly.
//!
//! For a group with cyclic-factor shape (n_1, ..., n_k) the character
//! indexed by t = (t_1, ..., t_k) sends x to exp(2πi Σ t_i x_i / n_i).
//! Whether a character is trivial on a subgroup, real, or equal to another
//! is decided with rational rotation numbers (fractions of a full turn) in
//! integer arithmetic; floats appear only in the sanity cross-check API.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::numth;

/// Index t = (t_1, ..., t_k), 0 <= t_i < n_i, of an irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterIndex(pub Vec<usize>);

impl CharacterIndex {
    pub fn trivial(shape: &[usize]) -> Self {
        CharacterIndex(vec![0; shape.len()])
    }
}

impl Group {
    fn require_shape(&self) -> Result<&[usize]> {
        self.abelian_shape().ok_or(Error::NotAbelian)
    }

    /// All |G| character indices in lexicographic order.
    pub fn character_indices(&self) -> Result<Vec<CharacterIndex>> {
        let shape = self.require_shape()?;
        let mut out = Vec::with_capacity(self.order());
        let mut t = vec![0usize; shape.len()];
        loop {
            out.push(CharacterIndex(t.clone()));
            let mut k = shape.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                t[k] += 1;
                if t[k] < shape[k] {
                    break;
                }
                t[k] = 0;
            }
        }
    }

    /// Index of the complex-conjugate character, (-t_i mod n_i).
    pub fn conjugate_character(&self, t: &CharacterIndex) -> Result<CharacterIndex> {
        let shape = self.require_shape()?;
        Ok(CharacterIndex(
            shape
                .iter()
                .zip(&t.0)
                .map(|(&n, &ti)| (n - ti) % n)
                .collect(),
        ))
    }

    /// A character is real iff it equals its conjugate, i.e. 2t == 0
    /// componentwise.
    pub fn is_real_character(&self, t: &CharacterIndex) -> Result<bool> {
        let shape = self.require_shape()?;
        Ok(shape.iter().zip(&t.0).all(|(&n, &ti)| (2 * ti) % n == 0))
    }

    /// True iff χ_t(g) = 1, decided by the rotation number
    /// Σ t_i x_i / n_i mod 1 over a common denominator.
    pub fn character_is_one_at(&self, t: &CharacterIndex, g: usize) -> Result<bool> {
        let shape = self.require_shape()?;
        let coords = self.shape_coords(g);
        let l = shape.iter().fold(1u64, |acc, &n| numth::lcm(acc, n as u64));
        let mut turn = 0u128;
        for ((&n, &ti), &xi) in shape.iter().zip(&t.0).zip(&coords) {
            turn += ti as u128 * xi as u128 * (l as u128 / n as u128);
        }
        Ok(turn.is_multiple_of(l as u128))
    }

    /// χ_t summed over the prime-order set S, exactly.
    ///
    /// S is the disjoint union over primes p | |G| of `G[p] \ {e}`, and the
    /// sum of a character over the subgroup `G[p]` is its size when the
    /// restriction is trivial and 0 otherwise. Triviality is decided on the
    /// generators `(n_i/p)·e_i` of `G[p]`. The result is always an integer.
    pub fn character_sum_prime_order_set(&self, t: &CharacterIndex) -> Result<i64> {
        let shape = self.require_shape()?.to_vec();
        assert_eq!(t.0.len(), shape.len(), "character index must match shape");
        let mut sum = 0i64;
        for (p, _) in numth::factorize(self.order() as u64) {
            let torsion = self.p_torsion(p)?;
            let mut trivial = true;
            for (i, &n) in shape.iter().enumerate() {
                if !(n as u64).is_multiple_of(p) {
                    continue;
                }
                let mut coords = vec![0usize; shape.len()];
                coords[i] = n / p as usize;
                let gen = self.shape_encode(&coords);
                if !self.character_is_one_at(t, gen)? {
                    trivial = false;
                    break;
                }
            }
            sum += if trivial { torsion.len() as i64 } else { 0 } - 1;
        }
        Ok(sum)
    }

    /// Floating-point χ_t(g) as (re, im); cross-check use only.
    pub fn character_value_float(&self, t: &CharacterIndex, g: usize) -> Result<(f64, f64)> {
        let shape = self.require_shape()?;
        let coords = self.shape_coords(g);
        let mut angle = 0.0f64;
        for ((&n, &ti), &xi) in shape.iter().zip(&t.0).zip(&coords) {
            angle += (ti as f64) * (xi as f64) / (n as f64);
        }
        let theta = 2.0 * std::f64::consts::PI * angle;
        Ok((theta.cos(), theta.sin()))
    }

    /// Floating-point Σ_{s in S} χ_t(s); cross-check use only.
    pub fn character_sum_prime_order_set_float(&self, t: &CharacterIndex) -> Result<(f64, f64)> {
        let mut re = 0.0;
        let mut im = 0.0;
        for s in self.prime_order_set() {
            let (r, i) = self.character_value_float(t, s)?;
            re += r;
            im += i;
        }
        Ok((re, im))
    }
}
