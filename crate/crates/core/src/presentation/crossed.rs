//! Words in the generators `u_ij` and `u_χ` of the crossed product
//! `C[SU_q(n)] ⋊ T̂_τ`, with `χ = χ_nat` and `u_χ u_ij = c_ij u_ij u_χ`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

use super::scalar::TauScalar;

/// A generator: `u_ij` (1-based) or `u_χ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    U(usize, usize),
    Chi,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::U(i, j) => write!(f, "u{i}{j}"),
            Letter::Chi => write!(f, "uχ"),
        }
    }
}

/// `c_ij = ∏_{p<i} τ_p · ∏_{p<j} τ_p^{-1}`, the scalar by which `u_χ` acts on `u_ij`.
pub fn eaction_scalar(n: usize, i: usize, j: usize) -> Result<TauScalar> {
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::BadIndex(format!("u_{i}{j} for n = {n}")));
    }
    let e: Vec<i64> = (1..n).map(|p| i64::from(p < i) - i64::from(p < j)).collect();
    Ok(TauScalar::tau(n, &e))
}

/// A linear combination of words with [`TauScalar`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CrossedPoly {
    n: usize,
    terms: BTreeMap<Vec<Letter>, TauScalar>,
}

/// A term in normal form: `scalar · word · u_χ^chi_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedTerm {
    pub scalar: TauScalar,
    pub word: Vec<(usize, usize)>,
    pub chi_power: usize,
}

impl CrossedPoly {
    pub fn zero(n: usize) -> Self {
        CrossedPoly { n, terms: BTreeMap::new() }
    }

    pub fn word(n: usize, letters: Vec<Letter>, scalar: TauScalar) -> Self {
        let mut p = Self::zero(n);
        p.insert(letters, scalar);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::word(n, vec![], TauScalar::one(n))
    }

    pub fn u(n: usize, i: usize, j: usize) -> Self {
        Self::word(n, vec![Letter::U(i, j)], TauScalar::one(n))
    }

    pub fn chi(n: usize) -> Self {
        Self::word(n, vec![Letter::Chi], TauScalar::one(n))
    }

    /// `v_ij = u_ij u_χ`.
    pub fn v(n: usize, i: usize, j: usize) -> Self {
        Self::word(n, vec![Letter::U(i, j), Letter::Chi], TauScalar::one(n))
    }

    /// Product of `v_{i_1 j_1} ⋯ v_{i_k j_k}`.
    pub fn v_word(n: usize, idx: &[(usize, usize)]) -> Self {
        let letters = idx.iter().flat_map(|&(i, j)| [Letter::U(i, j), Letter::Chi]).collect();
        Self::word(n, letters, TauScalar::one(n))
    }

    /// Product of `u_{i_1 j_1} ⋯ u_{i_k j_k}`.
    pub fn u_word(n: usize, idx: &[(usize, usize)]) -> Self {
        Self::word(n, idx.iter().map(|&(i, j)| Letter::U(i, j)).collect(), TauScalar::one(n))
    }

    fn insert(&mut self, w: Vec<Letter>, s: TauScalar) {
        if s.is_zero() {
            return;
        }
        let merged = match self.terms.get(&w) {
            Some(old) => old.add(&s),
            None => s,
        };
        if merged.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, merged);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn raw_terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &TauScalar)> {
        self.terms.iter()
    }

    pub fn scale(&self, s: &TauScalar) -> CrossedPoly {
        let mut p = Self::zero(self.n);
        for (w, c) in &self.terms {
            p.insert(w.clone(), c.mul(s));
        }
        p
    }

    pub fn add(&self, other: &CrossedPoly) -> CrossedPoly {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.insert(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &CrossedPoly) -> CrossedPoly {
        self.add(&other.scale(&TauScalar::int(self.n, -1)))
    }

    /// Concatenation of words, bilinear.
    pub fn mul(&self, other: &CrossedPoly) -> CrossedPoly {
        let mut p = Self::zero(self.n);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                p.insert(w, c1.mul(c2));
            }
        }
        p
    }

    /// Moves every `u_χ` to the right using `u_χ u_ij = c_ij u_ij u_χ` and
    /// reduces the power of `u_χ` modulo `n`.
    pub fn normalize(&self) -> CrossedPoly {
        let n = self.n;
        let mut p = Self::zero(n);
        for (w, c) in &self.terms {
            let mut scalar = c.clone();
            let mut pending = 0usize;
            let mut us = Vec::with_capacity(w.len());
            for &l in w {
                match l {
                    Letter::Chi => pending += 1,
                    Letter::U(i, j) => {
                        if pending > 0 {
                            let cij = eaction_scalar(n, i, j).expect("valid letter");
                            for _ in 0..pending {
                                scalar = scalar.mul(&cij);
                            }
                        }
                        us.push(l);
                    }
                }
            }
            us.extend(std::iter::repeat_n(Letter::Chi, pending % n));
            p.insert(us, scalar);
        }
        p
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(|w| {
            let first_chi = w.iter().position(|&l| l == Letter::Chi).unwrap_or(w.len());
            w[first_chi..].iter().all(|&l| l == Letter::Chi) && w.len() - first_chi < self.n
        })
    }

    /// Terms of a normal-form polynomial.
    pub fn terms(&self) -> Vec<CrossedTerm> {
        self.normalize()
            .terms
            .into_iter()
            .map(|(w, scalar)| {
                let word: Vec<(usize, usize)> = w
                    .iter()
                    .filter_map(|l| match l {
                        Letter::U(i, j) => Some((*i, *j)),
                        Letter::Chi => None,
                    })
                    .collect();
                let chi_power = w.len() - word.len();
                CrossedTerm { scalar, word, chi_power }
            })
            .collect()
    }

    /// Replaces every occurrence of the word `from` (followed only by `u_χ`
    /// letters) by `to`, keeping the trailing `u_χ` power.
    pub fn rewrite(&self, from: &[Letter], to: &CrossedPoly) -> CrossedPoly {
        let mut p = Self::zero(self.n);
        for (w, c) in &self.terms {
            let tail_ok = w.len() >= from.len() && w[from.len()..].iter().all(|&l| l == Letter::Chi);
            if tail_ok && &w[..from.len()] == from {
                let tail = CrossedPoly::word(self.n, w[from.len()..].to_vec(), c.clone());
                p = p.add(&to.mul(&tail));
            } else {
                p.insert(w.clone(), c.clone());
            }
        }
        p
    }
}

impl fmt::Display for CrossedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for l in w {
                write!(f, " {l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CrossedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn eaction_values() {
        assert!(eaction_scalar(3, 1, 1).unwrap().is_one());
        assert_eq!(eaction_scalar(3, 1, 2).unwrap(), TauScalar::tau_p(3, 1, -1));
        assert_eq!(eaction_scalar(3, 2, 1).unwrap(), TauScalar::tau_p(3, 1, 1));
        assert!(matches!(eaction_scalar(3, 0, 1), Err(Error::BadIndex(_))));
        assert!(matches!(eaction_scalar(3, 1, 4), Err(Error::BadIndex(_))));
    }

    #[test]
    fn moving_chi() {
        let n = 3;
        let p = CrossedPoly::chi(n).mul(&CrossedPoly::u(n, 1, 1)).normalize();
        assert_eq!(p, CrossedPoly::word(n, vec![Letter::U(1, 1), Letter::Chi], TauScalar::one(n)));
        let p = CrossedPoly::chi(n).mul(&CrossedPoly::u(n, 1, 2)).normalize();
        assert_eq!(p, CrossedPoly::word(n, vec![Letter::U(1, 2), Letter::Chi], TauScalar::tau_p(n, 1, -1)));
        let chin = (0..n).fold(CrossedPoly::one(n), |acc, _| acc.mul(&CrossedPoly::chi(n)));
        assert_eq!(chin.normalize(), CrossedPoly::one(n));
        let t = &p.terms()[0];
        assert_eq!((t.word.clone(), t.chi_power), (vec![(1, 2)], 1));
    }

    fn letters(n: usize) -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec(
            prop_oneof![Just(Letter::Chi), (1..=n, 1..=n).prop_map(|(i, j)| Letter::U(i, j))],
            0..7,
        )
    }

    proptest! {
        #[test]
        fn normalize_idempotent_and_multiplicative(n in 2usize..=4, a in letters(4), b in letters(4)) {
            let clip = |w: Vec<Letter>| -> Vec<Letter> {
                w.into_iter().filter(|l| match l { Letter::U(i, j) => *i <= n && *j <= n, Letter::Chi => true }).collect()
            };
            let p = CrossedPoly::word(n, clip(a), TauScalar::q_pow(n, 1));
            let q = CrossedPoly::word(n, clip(b), TauScalar::tau_p(n, 1, 1));
            let np = p.normalize();
            prop_assert!(np.is_normal());
            prop_assert_eq!(np.normalize(), np.clone());
            prop_assert_eq!(p.mul(&q).normalize(), np.mul(&q.normalize()).normalize());
        }
    }
}
