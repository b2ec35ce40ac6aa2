//! Admissible representations of `U_q(g)` on weight bases, at rational `q`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cyclotomic::{Cyclo, CycloMatrix, Matrix};
use crate::error::{Error, Result};
use crate::roots::{weight_l, RootDatum, Weight};

/// Matrices of `E_i`, `F_i`, `K_i`, `K_i^{-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Generators {
    pub e: Vec<CycloMatrix>,
    pub f: Vec<CycloMatrix>,
    pub k: Vec<CycloMatrix>,
    pub kinv: Vec<CycloMatrix>,
}

impl Generators {
    pub fn dim(&self) -> usize {
        self.k.first().map_or(0, |m| m.rows())
    }
}

/// A finite-dimensional admissible representation: `K_i` acts on a vector of
/// weight `χ` by `q^{(α_i, χ)}`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightedRep {
    rd: RootDatum,
    q: BigRational,
    weights: Vec<Weight>,
    gens: Generators,
}

pub(crate) fn rat(x: BigRational) -> Cyclo {
    Cyclo::from_rational(x)
}

pub(crate) fn q_pow(q: &BigRational, m: i64) -> BigRational {
    q.pow(i32::try_from(m).expect("exponent too large"))
}

pub fn check_q(q: &BigRational) -> Result<()> {
    if *q <= BigRational::zero() || q.is_one() {
        return Err(Error::BadQ(format!("q = {q} must be positive and different from 1")));
    }
    Ok(())
}

/// Parses `"2"` or `"3/2"` and checks it with [`check_q`].
pub fn parse_q(text: &str) -> Result<BigRational> {
    let q: BigRational = text
        .trim()
        .parse()
        .map_err(|_| Error::BadQ(format!("{text:?} is not a fraction p/q")))?;
    check_q(&q)?;
    Ok(q)
}

/// `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn q_number(q: &BigRational, n: i64) -> BigRational {
    (q_pow(q, n) - q_pow(q, -n)) / (q - q.recip())
}

/// Gaussian binomial `[m choose k]_q` in the symmetric normalization.
pub fn q_binomial(q: &BigRational, m: i64, k: i64) -> BigRational {
    if k < 0 || k > m {
        return BigRational::zero();
    }
    let fact = |n: i64| (1..=n).fold(BigRational::one(), |acc, j| acc * q_number(q, j));
    fact(m) / (fact(k) * fact(m - k))
}

impl WeightedRep {
    /// Builds `K_i^{±1}` from the weights; `e` and `f` are taken as given.
    pub fn new(
        rd: &RootDatum,
        q: BigRational,
        weights: Vec<Weight>,
        e: Vec<CycloMatrix>,
        f: Vec<CycloMatrix>,
    ) -> Result<Self> {
        check_q(&q)?;
        let (r, d) = (rd.rank(), weights.len());
        if weights.iter().any(|w| w.len() != r) {
            return Err(Error::Mismatch(format!("weights must have {r} coordinates")));
        }
        if e.len() != r || f.len() != r || e.iter().chain(&f).any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Mismatch(format!("need {r} matrices of size {d} for E and for F")));
        }
        let sym = rd.symmetrizer();
        let kdiag = |i: usize, s: i64| -> CycloMatrix {
            Matrix::diagonal(weights.iter().map(|w| rat(q_pow(&q, s * sym[i] * w[i]))).collect())
        };
        let k = (0..r).map(|i| kdiag(i, 1)).collect();
        let kinv = (0..r).map(|i| kdiag(i, -1)).collect();
        Ok(WeightedRep { rd: rd.clone(), q, weights, gens: Generators { e, f, k, kinv } })
    }

    /// Raw constructor without admissibility; used for negative controls.
    pub fn from_parts(rd: &RootDatum, q: BigRational, weights: Vec<Weight>, gens: Generators) -> Self {
        WeightedRep { rd: rd.clone(), q, weights, gens }
    }

    /// The one-dimensional representation `ε`.
    pub fn trivial(rd: &RootDatum, q: BigRational) -> Result<Self> {
        let z = vec![CycloMatrix::zeros(1, 1); rd.rank()];
        Self::new(rd, q, vec![vec![0; rd.rank()]], z.clone(), z)
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub fn e(&self, i: usize) -> &CycloMatrix {
        &self.gens.e[i]
    }

    pub fn f(&self, i: usize) -> &CycloMatrix {
        &self.gens.f[i]
    }

    pub fn k(&self, i: usize) -> &CycloMatrix {
        &self.gens.k[i]
    }

    pub fn kinv(&self, i: usize) -> &CycloMatrix {
        &self.gens.kinv[i]
    }

    /// Tensor product through `Δ_q(E) = E⊗1 + K⊗E`, `Δ_q(F) = F⊗K^{-1} + 1⊗F`.
    pub fn tensor(&self, other: &WeightedRep) -> Result<WeightedRep> {
        same_setting(&self.rd, &self.q, &other.rd, &other.q)?;
        let (a, b) = (&self.gens, &other.gens);
        let (ia, ib) = (Matrix::identity(self.dim()), Matrix::identity(other.dim()));
        let r = self.rd.rank();
        let gens = Generators {
            e: (0..r).map(|i| &a.e[i].kron(&ib) + &a.k[i].kron(&b.e[i])).collect(),
            f: (0..r).map(|i| &a.f[i].kron(&b.kinv[i]) + &ia.kron(&b.f[i])).collect(),
            k: (0..r).map(|i| a.k[i].kron(&b.k[i])).collect(),
            kinv: (0..r).map(|i| a.kinv[i].kron(&b.kinv[i])).collect(),
        };
        Ok(WeightedRep { rd: self.rd.clone(), q: self.q.clone(), weights: tensor_weights(&self.weights, &other.weights), gens })
    }
}

impl fmt::Debug for WeightedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedRep({}, q = {}, dim {})", self.rd, self.q, self.dim())
    }
}

pub(crate) fn same_setting(rd1: &RootDatum, q1: &BigRational, rd2: &RootDatum, q2: &BigRational) -> Result<()> {
    if rd1 != rd2 {
        return Err(Error::Mismatch(format!("root data {rd1} and {rd2} differ")));
    }
    if q1 != q2 {
        return Err(Error::Mismatch(format!("q = {q1} and q = {q2} differ")));
    }
    Ok(())
}

pub(crate) fn tensor_weights(a: &[Weight], b: &[Weight]) -> Vec<Weight> {
    a.iter()
        .cartesian_product(b)
        .map(|(x, y)| x.iter().zip(y).map(|(s, t)| s + t).collect())
        .collect()
}

/// `Λ^k C^n` for `U_q(sl_n)`: basis `e_S` over `k`-subsets, `E_i e_S = e_{S - {i+1} + {i}}`
/// when defined, weight `Σ_{s ∈ S} L_s`.
pub fn wedge_rep(n: usize, k: usize, q: BigRational) -> Result<WeightedRep> {
    if !(1..n).contains(&k) {
        return Err(Error::Invalid(format!("Λ^{k} C^{n} is not a fundamental representation")));
    }
    let rd = RootDatum::type_a(n)?;
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let index = |s: &[usize]| subsets.iter().position(|t| t == s).expect("subset");
    let d = subsets.len();
    let weights = subsets
        .iter()
        .map(|s| {
            s.iter().fold(vec![0; n - 1], |acc, &i| acc.iter().zip(weight_l(n, i + 1)).map(|(a, b)| a + b).collect())
        })
        .collect();
    let mut e = vec![CycloMatrix::zeros(d, d); n - 1];
    let mut f = vec![CycloMatrix::zeros(d, d); n - 1];
    for (col, s) in subsets.iter().enumerate() {
        for i in 0..n - 1 {
            let (has_i, has_next) = (s.contains(&i), s.contains(&(i + 1)));
            if has_next && !has_i {
                let t: Vec<usize> = s.iter().map(|&x| if x == i + 1 { i } else { x }).sorted().collect();
                e[i].set(index(&t), col, Cyclo::one());
            }
            if has_i && !has_next {
                let t: Vec<usize> = s.iter().map(|&x| if x == i { i + 1 } else { x }).sorted().collect();
                f[i].set(index(&t), col, Cyclo::one());
            }
        }
    }
    WeightedRep::new(&rd, q, weights, e, f)
}

/// The natural representation on `C^n`, with `E_i = e_{i,i+1}` and `F_i = e_{i+1,i}`.
pub fn fundamental_rep(n: usize, q: BigRational) -> Result<WeightedRep> {
    if n < 2 {
        return Err(Error::Invalid(format!("SU({n}) has no natural representation here")));
    }
    wedge_rep(n, 1, q)
}

/// First failing relation, with 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub relation: String,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (i = {}, j = {})", self.relation, self.i, self.j)
    }
}

/// Checks every defining relation of `U_q(g)` as an exact matrix identity.
pub fn check_relations(rep: &WeightedRep) -> std::result::Result<(), RelationFailure> {
    check_relations_for(&rep.rd, &rep.q, &rep.gens)
}

pub fn check_relations_for(rd: &RootDatum, q: &BigRational, g: &Generators) -> std::result::Result<(), RelationFailure> {
    let r = rd.rank();
    let d = g.dim();
    let id: CycloMatrix = Matrix::identity(d);
    let sym = rd.symmetrizer();
    let fail = |relation: &str, i: usize, j: usize| RelationFailure { relation: relation.into(), i: i + 1, j: j + 1 };
    for i in 0..r {
        if &g.k[i] * &g.kinv[i] != id || &g.kinv[i] * &g.k[i] != id {
            return Err(fail("K_i K_i^-1 = 1", i, i));
        }
    }
    for i in 0..r {
        let qi = q_pow(q, sym[i]);
        for j in 0..r {
            if !g.k[i].commutator(&g.k[j]).is_zero() {
                return Err(fail("[K_i, K_j] = 0", i, j));
            }
            let lhs = g.e[i].commutator(&g.f[j]);
            let rhs = if i == j {
                (&g.k[i] - &g.kinv[i]).scale(&rat((&qi - qi.recip()).recip()))
            } else {
                CycloMatrix::zeros(d, d)
            };
            if lhs != rhs {
                return Err(fail("[E_i, F_j] = δ_ij (K_i - K_i^-1)/(q_i - q_i^-1)", i, j));
            }
            let a = rd.cartan()[i][j];
            let s = rat(q_pow(&qi, a));
            if &(&g.k[i] * &g.e[j]) * &g.kinv[i] != g.e[j].scale(&s) {
                return Err(fail("K_i E_j K_i^-1 = q_i^a_ij E_j", i, j));
            }
            let s = rat(q_pow(&qi, -a));
            if &(&g.k[i] * &g.f[j]) * &g.kinv[i] != g.f[j].scale(&s) {
                return Err(fail("K_i F_j K_i^-1 = q_i^-a_ij F_j", i, j));
            }
            if i != j {
                if !serre(&g.e[i], &g.e[j], &qi, a).is_zero() {
                    return Err(fail("q-Serre relation for E", i, j));
                }
                if !serre(&g.f[i], &g.f[j], &qi, a).is_zero() {
                    return Err(fail("q-Serre relation for F", i, j));
                }
            }
        }
    }
    Ok(())
}

/// `Σ_k (-1)^k [1-a choose k]_{q_i} X_i^k X_j X_i^{1-a-k}`.
fn serre(xi: &CycloMatrix, xj: &CycloMatrix, qi: &BigRational, a: i64) -> CycloMatrix {
    let m = 1 - a;
    let d = xi.rows();
    let mut powers = vec![Matrix::identity(d)];
    for k in 1..=m as usize {
        powers.push(&powers[k - 1] * xi);
    }
    let mut acc = CycloMatrix::zeros(d, d);
    for k in 0..=m {
        let c = q_binomial(qi, m, k) * BigRational::from_integer(BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
        let term = &(&powers[k as usize] * xj) * &powers[(m - k) as usize];
        acc = &acc + &term.scale(&rat(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::abs_hom;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn q_numbers() {
        let two = q(2, 1);
        assert_eq!(q_number(&two, 2), q(5, 2));
        assert_eq!(q_binomial(&two, 2, 1), q(5, 2));
        assert_eq!(q_binomial(&two, 3, 0), q(1, 1));
        assert_eq!(q_binomial(&two, 3, 1), q_number(&two, 3));
    }

    #[test]
    fn natural_rep_small() {
        let v = fundamental_rep(2, q(2, 1)).unwrap();
        assert_eq!(v.k(0), &Matrix::diagonal(vec![rat(q(2, 1)), rat(q(1, 2))]));
        let v = fundamental_rep(3, q(3, 2)).unwrap();
        assert_eq!(v.e(0).get(0, 1), &Cyclo::one());
        assert!(v.e(0).get(0, 0).is_zero());
        for (k, w) in v.weights().iter().enumerate() {
            assert_eq!(w, &weight_l(3, k + 1));
            assert_eq!(abs_hom(3, w).rem_euclid(3), 2);
        }
    }

    #[test]
    fn relations_hold() {
        for n in 2..=5 {
            for qq in [q(2, 1), q(3, 2), q(5, 3)] {
                let v = fundamental_rep(n, qq.clone()).unwrap();
                assert_eq!(check_relations(&v), Ok(()), "n = {n}, q = {qq}");
            }
        }
        for k in 1..4 {
            assert_eq!(check_relations(&wedge_rep(4, k, q(2, 1)).unwrap()), Ok(()));
        }
        let v = fundamental_rep(3, q(2, 1)).unwrap();
        assert_eq!(check_relations(&v.tensor(&wedge_rep(3, 2, q(2, 1)).unwrap()).unwrap()), Ok(()));
    }

    #[test]
    fn swapped_generators_fail() {
        let v = fundamental_rep(2, q(2, 1)).unwrap();
        let mut g = v.generators().clone();
        std::mem::swap(&mut g.e[0], &mut g.f[0]);
        let bad = WeightedRep::from_parts(v.root_datum(), q(2, 1), v.weights().to_vec(), g);
        let err = check_relations(&bad).unwrap_err();
        assert!(err.relation.starts_with("[E_i, F_j]"), "{err}");
    }

    #[test]
    fn bad_q() {
        assert!(matches!(fundamental_rep(2, q(1, 1)), Err(Error::BadQ(_))));
        assert!(matches!(fundamental_rep(2, q(-1, 2)), Err(Error::BadQ(_))));
    }
}
