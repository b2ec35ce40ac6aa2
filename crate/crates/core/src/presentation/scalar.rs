//! Laurent polynomials in `q` over the group ring of `(Z/n)^{n-1}`, whose
//! generators are the formal `τ_1, …, τ_{n-1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::abelian::CircleValue;
use crate::cyclotomic::Cyclo;

/// `Σ c · q^a · τ^e` with integer `c`, `a ∈ Z` and `e ∈ (Z/n)^{n-1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TauScalar {
    n: usize,
    terms: BTreeMap<(i64, Vec<i64>), i64>,
}

/// One monomial `c · q^a · τ^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Monomial {
    #[serde(rename = "int")]
    pub coeff: i64,
    pub qexp: i64,
    pub tauexp: Vec<i64>,
}

impl TauScalar {
    pub fn zero(n: usize) -> Self {
        TauScalar { n, terms: BTreeMap::new() }
    }

    pub fn monomial(n: usize, coeff: i64, qexp: i64, tauexp: &[i64]) -> Self {
        assert_eq!(tauexp.len(), n - 1, "τ-exponent of the wrong length");
        let mut s = Self::zero(n);
        s.insert(qexp, tauexp.iter().map(|&e| e.rem_euclid(n as i64)).collect(), coeff);
        s
    }

    pub fn int(n: usize, c: i64) -> Self {
        Self::monomial(n, c, 0, &vec![0; n - 1])
    }

    pub fn one(n: usize) -> Self {
        Self::int(n, 1)
    }

    /// `q^a`.
    pub fn q_pow(n: usize, a: i64) -> Self {
        Self::monomial(n, 1, a, &vec![0; n - 1])
    }

    /// `τ^e`.
    pub fn tau(n: usize, e: &[i64]) -> Self {
        Self::monomial(n, 1, 0, e)
    }

    /// `τ_p^s` for 1-based `p`.
    pub fn tau_p(n: usize, p: usize, s: i64) -> Self {
        let mut e = vec![0; n - 1];
        e[p - 1] = s;
        Self::tau(n, &e)
    }

    fn insert(&mut self, qexp: i64, tauexp: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        let key = (qexp, tauexp);
        let v = self.terms.entry(key.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.n)
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.terms
            .iter()
            .map(|((a, e), &c)| Monomial { coeff: c, qexp: *a, tauexp: e.clone() })
            .collect()
    }

    pub fn add(&self, other: &TauScalar) -> TauScalar {
        assert_eq!(self.n, other.n);
        let mut s = self.clone();
        for ((a, e), &c) in &other.terms {
            s.insert(*a, e.clone(), c);
        }
        s
    }

    pub fn neg(&self) -> TauScalar {
        TauScalar { n: self.n, terms: self.terms.iter().map(|(k, &c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &TauScalar) -> TauScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TauScalar) -> TauScalar {
        assert_eq!(self.n, other.n);
        let n = self.n as i64;
        let mut s = Self::zero(self.n);
        for ((a, e), &c) in &self.terms {
            for ((b, f), &d) in &other.terms {
                let g = e.iter().zip(f).map(|(x, y)| (x + y).rem_euclid(n)).collect();
                s.insert(a + b, g, c * d);
            }
        }
        s
    }

    /// Substitutes `τ_p = ζ_n^{t_p}`; the result maps each power of `q` to
    /// its coefficient in `Q(ζ_n)`, zero coefficients dropped.
    pub fn specialize(&self, t: &[i64]) -> BTreeMap<i64, Cyclo> {
        assert_eq!(t.len(), self.n - 1);
        let mut out: BTreeMap<i64, Cyclo> = BTreeMap::new();
        for ((a, e), &c) in &self.terms {
            let k: i64 = e.iter().zip(t).map(|(x, y)| x * y).sum();
            let z = &Cyclo::from_circle(CircleValue::new(k, self.n as i64)) * &Cyclo::from_int(c);
            let slot = out.entry(*a).or_insert_with(Cyclo::zero);
            *slot = &*slot + &z;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// The same substitution, collected as `c · q^a · ζ_n^k` monomials.
    pub fn specialize_monomials(&self, t: &[i64]) -> Vec<(i64, i64, i64)> {
        let n = self.n as i64;
        let mut acc: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        for ((a, e), &c) in &self.terms {
            let k: i64 = e.iter().zip(t).map(|(x, y)| x * y).sum::<i64>().rem_euclid(n);
            // fold ζ^{n/2} = -1 into the sign
            let (c, k) = if n % 2 == 0 && k >= n / 2 { (-c, k - n / 2) } else { (c, k) };
            *acc.entry((*a, k)).or_insert(0) += c;
        }
        acc.into_iter().filter(|(_, c)| *c != 0).map(|((a, k), c)| (c, a, k)).collect()
    }
}

fn fmt_factor(f: &mut fmt::Formatter<'_>, first: &mut bool, s: &str) -> fmt::Result {
    if !*first {
        write!(f, " ")?;
    }
    *first = false;
    write!(f, "{s}")
}

/// `c q^a τ1^e1 …` without the sign; `first` tracks spacing.
pub(crate) fn fmt_monomial_body(f: &mut fmt::Formatter<'_>, c: i64, qexp: i64, tau: &[i64]) -> fmt::Result {
    let mut first = true;
    let c = c.abs();
    let trivial = qexp == 0 && tau.iter().all(|&x| x == 0);
    if c != 1 || trivial {
        fmt_factor(f, &mut first, &c.to_string())?;
    }
    match qexp {
        0 => {}
        1 => fmt_factor(f, &mut first, "q")?,
        a => fmt_factor(f, &mut first, &format!("q^{a}"))?,
    }
    for (p, &e) in tau.iter().enumerate() {
        match e {
            0 => {}
            1 => fmt_factor(f, &mut first, &format!("τ{}", p + 1))?,
            e => fmt_factor(f, &mut first, &format!("τ{}^{e}", p + 1))?,
        }
    }
    Ok(())
}

impl fmt::Display for TauScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((a, e), &c)) in self.terms.iter().enumerate() {
            match (idx, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            fmt_monomial_body(f, c, *a, e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TauScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_ops() {
        let n = 3;
        let t1 = TauScalar::tau_p(n, 1, 1);
        let cube = t1.mul(&t1).mul(&t1);
        assert!(cube.is_one());
        let x = TauScalar::q_pow(n, 1).sub(&TauScalar::q_pow(n, -1));
        assert_eq!(x.monomials().len(), 2);
        assert!(x.sub(&x).is_zero());
        assert_eq!(format!("{}", TauScalar::monomial(n, -2, 1, &[2, 0])), "-2 q τ1^2");
        assert_eq!(format!("{}", TauScalar::int(n, 1)), "1");
    }

    #[test]
    fn specialization() {
        let n = 2;
        let s = TauScalar::tau_p(n, 1, 1).add(&TauScalar::one(n));
        assert!(s.specialize(&[1]).is_empty());
        assert_eq!(s.specialize(&[0]).get(&0), Some(&Cyclo::from_int(2)));
        assert_eq!(TauScalar::tau_p(n, 1, 1).specialize_monomials(&[1]), vec![(-1, 0, 0)]);
        assert_eq!(TauScalar::zero(n).specialize(&[1]).len(), 0);
    }
}
