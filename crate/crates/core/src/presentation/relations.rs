//! Relations of `C[SU_q^τ(n)]` in the generators `v_ij = u_ij u_χ`, and their
//! verification against the relations of `C[SU_q(n)]`.
//!
//! Permutations are 1-based image vectors: `sigma[k - 1] = σ(k)`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

use super::crossed::{CrossedPoly, Letter};
use super::scalar::TauScalar;

/// The four quadratic families, for a product `v_ij v_kl`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    /// `i = k`, `j < l`.
    Row,
    /// `j = l`, `i < k`.
    Column,
    /// `i > k`, `j < l`.
    Commute,
    /// `i < k`, `j < l`.
    Cross,
}

impl RelationKind {
    pub const ALL: [RelationKind; 4] = [RelationKind::Row, RelationKind::Column, RelationKind::Commute, RelationKind::Cross];

    pub fn name(self) -> &'static str {
        match self {
            RelationKind::Row => "row",
            RelationKind::Column => "column",
            RelationKind::Commute => "commute",
            RelationKind::Cross => "cross",
        }
    }

    pub fn admits(self, n: usize, (i, j, k, l): (usize, usize, usize, usize)) -> bool {
        let inside = [i, j, k, l].iter().all(|x| (1..=n).contains(x));
        inside
            && match self {
                RelationKind::Row => i == k && j < l,
                RelationKind::Column => j == l && i < k,
                RelationKind::Commute => i > k && j < l,
                RelationKind::Cross => i < k && j < l,
            }
    }

    /// All admissible `(i, j, k, l)`.
    pub fn index_tuples(self, n: usize) -> Vec<(usize, usize, usize, usize)> {
        (1..=n)
            .cartesian_product(1..=n)
            .cartesian_product((1..=n).cartesian_product(1..=n))
            .map(|((i, j), (k, l))| (i, j, k, l))
            .filter(|&t| self.admits(n, t))
            .collect()
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" | "1a" | "row" => Ok(RelationKind::Row),
            "1b" | "col" | "column" => Ok(RelationKind::Column),
            "2" | "2a" | "commute" => Ok(RelationKind::Commute),
            "2b" | "3" | "cross" => Ok(RelationKind::Cross),
            other => Err(Error::Invalid(format!("unknown relation family '{other}'"))),
        }
    }
}

/// `coeff · x_{i_1 j_1} ⋯ x_{i_k j_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelTerm {
    pub coeff: TauScalar,
    pub word: Vec<(usize, usize)>,
}

impl RelTerm {
    pub fn new(coeff: TauScalar, word: Vec<(usize, usize)>) -> Self {
        RelTerm { coeff, word }
    }
}

/// `Σ lhs = Σ rhs`. `kind` is `None` for the determinant relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub n: usize,
    pub kind: Option<RelationKind>,
    pub indices: Vec<usize>,
    pub lhs: Vec<RelTerm>,
    pub rhs: Vec<RelTerm>,
}

/// `∏_{a ≤ p < b} τ_p^s`.
fn tau_range(n: usize, a: usize, b: usize, s: i64) -> TauScalar {
    let e: Vec<i64> = (1..n).map(|p| if a <= p && p < b { s } else { 0 }).collect();
    TauScalar::tau(n, &e)
}

fn q_minus_qinv(n: usize) -> TauScalar {
    TauScalar::q_pow(n, 1).sub(&TauScalar::q_pow(n, -1))
}

fn check_indices(n: usize, kind: RelationKind, t: (usize, usize, usize, usize)) -> Result<()> {
    if kind.admits(n, t) {
        Ok(())
    } else {
        Err(Error::BadIndices { relation: kind.name().into(), indices: vec![t.0, t.1, t.2, t.3] })
    }
}

/// The relation of `C[SU_q(n)]` for `u_ij u_kl`.
pub fn untwisted_relation(n: usize, kind: RelationKind, t: (usize, usize, usize, usize)) -> Result<Relation> {
    check_indices(n, kind, t)?;
    let (i, j, k, l) = t;
    let one = TauScalar::one(n);
    let (lhs, rhs) = match kind {
        RelationKind::Row | RelationKind::Column => {
            (vec![RelTerm::new(one, vec![(i, j), (k, l)])], vec![RelTerm::new(TauScalar::q_pow(n, 1), vec![(k, l), (i, j)])])
        }
        RelationKind::Commute => (vec![RelTerm::new(one.clone(), vec![(i, j), (k, l)])], vec![RelTerm::new(one, vec![(k, l), (i, j)])]),
        RelationKind::Cross => (
            vec![RelTerm::new(one.clone(), vec![(i, j), (k, l)]), RelTerm::new(one.neg(), vec![(k, l), (i, j)])],
            vec![RelTerm::new(q_minus_qinv(n), vec![(i, l), (k, j)])],
        ),
    };
    Ok(Relation { n, kind: Some(kind), indices: vec![i, j, k, l], lhs, rhs })
}

/// The relation of `C[SU_q^τ(n)]` for `v_ij v_kl`.
pub fn twisted_relation(n: usize, kind: RelationKind, t: (usize, usize, usize, usize)) -> Result<Relation> {
    check_indices(n, kind, t)?;
    let (i, j, k, l) = t;
    let q = TauScalar::q_pow(n, 1);
    let one = TauScalar::one(n);
    let (lhs, rhs) = match kind {
        RelationKind::Row => (vec![RelTerm::new(one, vec![(i, j), (i, l)])], vec![RelTerm::new(tau_range(n, j, l, -1).mul(&q), vec![(i, l), (i, j)])]),
        RelationKind::Column => (vec![RelTerm::new(one, vec![(i, j), (k, j)])], vec![RelTerm::new(tau_range(n, i, k, 1).mul(&q), vec![(k, j), (i, j)])]),
        RelationKind::Commute => (
            vec![RelTerm::new(one, vec![(i, j), (k, l)])],
            vec![RelTerm::new(tau_range(n, k, i, -1).mul(&tau_range(n, j, l, -1)), vec![(k, l), (i, j)])],
        ),
        RelationKind::Cross => (
            vec![RelTerm::new(tau_range(n, j, l, 1), vec![(i, j), (k, l)]), RelTerm::new(tau_range(n, i, k, 1).neg(), vec![(k, l), (i, j)])],
            vec![RelTerm::new(q_minus_qinv(n), vec![(i, l), (k, j)])],
        ),
    };
    Ok(Relation { n, kind: Some(kind), indices: vec![i, j, k, l], lhs, rhs })
}

fn side_poly(n: usize, terms: &[RelTerm], twisted: bool) -> CrossedPoly {
    terms.iter().fold(CrossedPoly::zero(n), |acc, t| {
        let w = if twisted { CrossedPoly::v_word(n, &t.word) } else { CrossedPoly::u_word(n, &t.word) };
        acc.add(&w.scale(&t.coeff))
    })
}

/// `lhs − rhs` of a relation in the `v`'s, rewritten as `u`-words and
/// reduced with the single untwisted relation of the same family and
/// indices. Zero iff the relation holds in the crossed product.
pub fn relation_residual(rel: &Relation) -> Result<CrossedPoly> {
    let n = rel.n;
    let kind = rel.kind.ok_or_else(|| Error::Invalid("the determinant is checked by qdet_check".into()))?;
    let t = match rel.indices[..] {
        [i, j, k, l] => (i, j, k, l),
        _ => return Err(Error::BadIndices { relation: kind.name().into(), indices: rel.indices.clone() }),
    };
    let diff = side_poly(n, &rel.lhs, true).sub(&side_poly(n, &rel.rhs, true)).normalize();
    // u_ij u_kl  ->  (everything else in the untwisted relation)
    let base = untwisted_relation(n, kind, t)?;
    let lead = &base.lhs[0];
    let from: Vec<Letter> = lead.word.iter().map(|&(a, b)| Letter::U(a, b)).collect();
    let rest = side_poly(n, &base.rhs, false).sub(&side_poly(n, &base.lhs[1..], false));
    Ok(diff.rewrite(&from, &rest).normalize())
}

pub fn twisted_relation_residual(n: usize, kind: RelationKind, t: (usize, usize, usize, usize)) -> Result<CrossedPoly> {
    relation_residual(&twisted_relation(n, kind, t)?)
}

/// Every quadratic relation, in family order.
pub fn quadratic_relations(n: usize) -> Vec<Relation> {
    RelationKind::ALL
        .iter()
        .flat_map(|&kind| kind.index_tuples(n).into_iter().map(move |t| twisted_relation(n, kind, t).expect("admissible")))
        .collect()
}

/// Number of admissible index tuples over all families.
pub fn relation_census(n: usize) -> usize {
    let pairs = n * n.saturating_sub(1) / 2;
    2 * n * pairs + 2 * pairs * pairs
}

/// First relation with a nonzero residual, if any.
pub fn check_all_relations(n: usize) -> Option<(Relation, CrossedPoly)> {
    quadratic_relations(n)
        .into_par_iter()
        .filter_map(|rel| {
            let r = relation_residual(&rel).expect("well-formed");
            (!r.is_zero()).then_some((rel, r))
        })
        .find_first(|_| true)
}

pub fn inversion_number(sigma: &[usize]) -> usize {
    (0..sigma.len()).tuple_combinations().filter(|&(a, b)| sigma[a] > sigma[b]).count()
}

/// `m(σ)_i = Σ_{k ≥ 2} (k − 1) m_i^{(k, σ(k))}` with `m_i^{(k,j)} = 1` for
/// `k ≤ i < j`, `−1` for `j ≤ i < k`, `0` otherwise.
pub fn m_multiindex(sigma: &[usize]) -> Vec<i64> {
    let n = sigma.len();
    (1..n)
        .map(|i| {
            (2..=n)
                .map(|k| {
                    let j = sigma[k - 1];
                    let m = if k <= i && i < j {
                        1
                    } else if j <= i && i < k {
                        -1
                    } else {
                        0
                    };
                    (k as i64 - 1) * m
                })
                .sum()
        })
        .collect()
}

fn is_permutation(sigma: &[usize]) -> bool {
    let mut seen = vec![false; sigma.len()];
    sigma.iter().all(|&s| (1..=sigma.len()).contains(&s) && !std::mem::replace(&mut seen[s - 1], true))
}

/// `(−q)^a`.
fn minus_q_pow(n: usize, a: i64) -> TauScalar {
    TauScalar::monomial(n, if a.rem_euclid(2) == 0 { 1 } else { -1 }, a, &vec![0; n - 1])
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QdetRow {
    pub sigma: Vec<usize>,
    pub inversions: usize,
    pub m: Vec<i64>,
    /// Scalar collected by moving the `u_χ` letters of `v_{1σ(1)} ⋯ v_{nσ(n)}` right.
    pub shift: TauScalar,
    /// `τ^{m(σ)}` times `shift`; must be 1.
    pub product: TauScalar,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct QdetReport {
    pub n: usize,
    pub rows: Vec<QdetRow>,
    /// The whole twisted sum equals the untwisted quantum determinant.
    pub sum_matches: bool,
}

impl QdetReport {
    pub fn all_hold(&self) -> bool {
        self.sum_matches && self.rows.iter().all(|r| r.holds)
    }
}

pub const QDET_MAX_N: usize = 6;

/// Per-permutation check that `τ^{m(σ)} v_{1σ(1)} ⋯ v_{nσ(n)} = u_{1σ(1)} ⋯ u_{nσ(n)}`,
/// using an arbitrary exponent map `m`.
pub fn qdet_check_with(n: usize, m: &(dyn Fn(&[usize]) -> Vec<i64> + Sync)) -> Result<QdetReport> {
    if !(2..=QDET_MAX_N).contains(&n) {
        return Err(Error::Invalid(format!("qdet check needs 2 ≤ n ≤ {QDET_MAX_N}, got {n}")));
    }
    let rows: Vec<QdetRow> = permutations(n).into_par_iter().map(|sigma| qdet_row(sigma, m)).collect();
    let det = qdet_relation_with(n, m);
    let twisted = side_poly(n, &det.lhs, true).normalize();
    let plain = permutations(n).into_iter().fold(CrossedPoly::zero(n), |acc, sigma| {
        let word: Vec<(usize, usize)> = (1..=n).map(|b| (b, sigma[b - 1])).collect();
        acc.add(&CrossedPoly::u_word(n, &word).scale(&minus_q_pow(n, inversion_number(&sigma) as i64)))
    });
    Ok(QdetReport { n, rows, sum_matches: twisted == plain })
}

/// The identity for a single permutation.
pub fn qdet_row(sigma: Vec<usize>, m: &(dyn Fn(&[usize]) -> Vec<i64> + Sync)) -> QdetRow {
    let n = sigma.len();
    let word: Vec<(usize, usize)> = (1..=n).map(|b| (b, sigma[b - 1])).collect();
    let normal = CrossedPoly::v_word(n, &word).normalize();
    let shift = normal.terms().into_iter().next().map(|t| t.scalar).unwrap_or_else(|| TauScalar::zero(n));
    let mm = m(&sigma);
    let product = TauScalar::tau(n, &mm).mul(&shift);
    QdetRow { inversions: inversion_number(&sigma), holds: product.is_one(), sigma, m: mm, shift, product }
}

pub fn qdet_check(n: usize) -> Result<QdetReport> {
    qdet_check_with(n, &|s: &[usize]| m_multiindex(s))
}

fn qdet_relation_with(n: usize, m: &(dyn Fn(&[usize]) -> Vec<i64> + Sync)) -> Relation {
    let lhs = permutations(n)
        .into_iter()
        .map(|sigma| {
            let coeff = TauScalar::tau(n, &m(&sigma)).mul(&minus_q_pow(n, inversion_number(&sigma) as i64));
            RelTerm::new(coeff, (1..=n).map(|b| (b, sigma[b - 1])).collect())
        })
        .collect();
    Relation { n, kind: None, indices: vec![], lhs, rhs: vec![RelTerm::new(TauScalar::one(n), vec![])] }
}

/// `Σ_σ τ^{m(σ)} (−q)^{|σ|} v_{1σ(1)} ⋯ v_{nσ(n)} = 1`.
pub fn qdet_relation(n: usize) -> Relation {
    qdet_relation_with(n, &|s: &[usize]| m_multiindex(s))
}

/// Outcome of checking the whole presentation within a budget.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationCheck {
    pub n: usize,
    pub relations_checked: usize,
    pub relations_total: usize,
    pub permutations_checked: usize,
    /// `n!`, saturating.
    pub permutations_total: u128,
    /// Some family was checked on a random sample only.
    pub sampled: bool,
    pub failure: Option<String>,
}

impl PresentationCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks every quadratic relation and every per-permutation determinant
/// identity, or `budget` random ones of each kind when there are more.
pub fn check_presentation(n: usize, budget: usize, seed: u64) -> Result<PresentationCheck> {
    if n < 2 {
        return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
    }
    let budget = budget.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = quadratic_relations(n);
    let relations_total = all.len();
    let rels: Vec<Relation> = if relations_total <= budget { all } else { all.choose_multiple(&mut rng, budget).cloned().collect() };
    let mut failure = rels.par_iter().find_map_first(|rel| {
        let r = relation_residual(rel).expect("well-formed");
        (!r.is_zero()).then(|| format!("{} {:?}: residual {r}", rel.kind.map(|k| k.name()).unwrap_or(""), rel.indices))
    });
    let permutations_total = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX);
    let m = |s: &[usize]| m_multiindex(s);
    let (permutations_checked, perm_sampled) = if n <= QDET_MAX_N && permutations_total <= budget as u128 {
        let rep = qdet_check(n)?;
        if failure.is_none() {
            if let Some(r) = rep.rows.iter().find(|r| !r.holds) {
                failure = Some(format!("determinant, σ = {:?}: τ^m · shift = {}", r.sigma, r.product));
            } else if !rep.sum_matches {
                failure = Some("determinant: twisted sum differs from the quantum determinant".into());
            }
        }
        (rep.rows.len(), false)
    } else {
        let sigmas: Vec<Vec<usize>> = (0..budget)
            .map(|_| {
                let mut s: Vec<usize> = (1..=n).collect();
                s.shuffle(&mut rng);
                s
            })
            .collect();
        if failure.is_none() {
            failure = sigmas.into_par_iter().map(|s| qdet_row(s, &m)).find_map_first(|r| {
                (!r.holds).then(|| format!("determinant, σ = {:?}: τ^m · shift = {}", r.sigma, r.product))
            });
        }
        (budget, true)
    };
    Ok(PresentationCheck {
        n,
        relations_checked: rels.len(),
        relations_total,
        permutations_checked,
        permutations_total,
        sampled: rels.len() < relations_total || perm_sampled,
        failure,
    })
}

pub const MINOR_MAX_N: usize = 5;

/// `u_ij* = (−q)^{j−i} det_q` of the matrix `(u_ab)` with row `i` and column `j` removed.
pub fn involution_minor(n: usize, i: usize, j: usize) -> Result<Vec<RelTerm>> {
    if !(2..=MINOR_MAX_N).contains(&n) {
        return Err(Error::Invalid(format!("involution minors need 2 ≤ n ≤ {MINOR_MAX_N}, got {n}")));
    }
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::BadIndex(format!("u_{i}{j} for n = {n}")));
    }
    let rows: Vec<usize> = (1..=n).filter(|&a| a != i).collect();
    let cols: Vec<usize> = (1..=n).filter(|&b| b != j).collect();
    let pre = minus_q_pow(n, j as i64 - i as i64);
    Ok(permutations(n - 1)
        .into_iter()
        .map(|pi| {
            let word = rows.iter().zip(&pi).map(|(&a, &p)| (a, cols[p - 1])).collect();
            RelTerm::new(pre.mul(&minus_q_pow(n, inversion_number(&pi) as i64)), word)
        })
        .collect())
}

/// Checks that `sigma` is a permutation before computing `m(σ)`.
pub fn m_multiindex_checked(sigma: &[usize]) -> Result<Vec<i64>> {
    if is_permutation(sigma) {
        Ok(m_multiindex(sigma))
    } else {
        Err(Error::Invalid(format!("{sigma:?} is not a permutation")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_examples() {
        assert!(twisted_relation_residual(2, RelationKind::Row, (1, 1, 1, 2)).unwrap().is_zero());
        assert!(twisted_relation_residual(3, RelationKind::Commute, (2, 1, 1, 2)).unwrap().is_zero());
        assert!(twisted_relation_residual(3, RelationKind::Cross, (1, 1, 2, 2)).unwrap().is_zero());
        let rel = twisted_relation(2, RelationKind::Row, (1, 1, 1, 2)).unwrap();
        assert_eq!(rel.rhs[0].coeff, TauScalar::monomial(2, 1, 1, &[-1]));
    }

    #[test]
    fn bad_indices() {
        let e = twisted_relation_residual(3, RelationKind::Row, (1, 2, 1, 1)).unwrap_err();
        assert!(matches!(e, Error::BadIndices { .. }));
        assert!(twisted_relation(3, RelationKind::Cross, (2, 1, 1, 2)).is_err());
        assert!(twisted_relation(3, RelationKind::Column, (1, 1, 4, 1)).is_err());
    }

    #[test]
    fn all_residuals_vanish() {
        for n in 2..=5 {
            assert_eq!(quadratic_relations(n).len(), relation_census(n));
            if let Some((rel, r)) = check_all_relations(n) {
                panic!("{rel:?}: {r}");
            }
        }
        assert_eq!(relation_census(3), 36);
    }

    #[test]
    fn shifted_commute_prefactor_fails() {
        // ∏ over i < p ≤ k (empty for i > k) instead of k ≤ p < i
        let (n, t) = (3, (2, 1, 1, 2));
        let mut rel = twisted_relation(n, RelationKind::Commute, t).unwrap();
        rel.rhs[0].coeff = tau_range(n, 1, 2, -1);
        let r = relation_residual(&rel).unwrap();
        assert!(!r.is_zero());
        // the failure is invisible at trivial τ but not at τ_1 = ζ_3
        let at = |t: &[i64]| r.raw_terms().all(|(_, c)| c.specialize(t).is_empty());
        assert!(at(&[0, 0]));
        assert!(!at(&[1, 0]));
    }

    proptest::proptest! {
        #[test]
        fn specialized_residuals_vanish(n in 2usize..=5, pick in 0usize..1000, t in proptest::collection::vec(0i64..5, 4)) {
            let rels = quadratic_relations(n);
            let rel = &rels[pick % rels.len()];
            let t: Vec<i64> = t[..n - 1].iter().map(|x| x % n as i64).collect();
            let r = relation_residual(rel).unwrap();
            proptest::prop_assert!(r.raw_terms().all(|(_, c)| c.specialize(&t).is_empty()));
            // the unreduced difference only vanishes after the untwisted relation is applied
            let lhs = side_poly(n, &rel.lhs, true).sub(&side_poly(n, &rel.rhs, true)).normalize();
            proptest::prop_assert!(!lhs.is_zero());
        }
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("2a".parse::<RelationKind>().unwrap(), RelationKind::Commute);
        assert_eq!("3".parse::<RelationKind>().unwrap(), RelationKind::Cross);
        assert_eq!("Column".parse::<RelationKind>().unwrap(), RelationKind::Column);
        assert!("4".parse::<RelationKind>().is_err());
    }

    #[test]
    fn m_examples() {
        assert_eq!(m_multiindex(&[1, 2, 3]), vec![0, 0]);
        assert_eq!(m_multiindex(&[2, 1]), vec![-1]);
        assert_eq!(m_multiindex(&[2, 3, 1]), vec![-2, -1]);
        assert!(m_multiindex_checked(&[1, 1]).is_err());
        assert_eq!(inversion_number(&[4, 3, 2, 1]), 6);
        assert_eq!(inversion_number(&[2, 1]), 1);
        assert_eq!(inversion_number(&[1, 2, 3]), 0);
    }

    #[test]
    fn qdet_small() {
        for n in 2..=5 {
            let rep = qdet_check(n).unwrap();
            assert!(rep.all_hold(), "n = {n}");
            assert_eq!(rep.rows.len(), (1..=n).product::<usize>());
        }
        let det = qdet_relation(2);
        assert_eq!(det.lhs[1].word, vec![(1, 2), (2, 1)]);
        assert_eq!(det.lhs[1].coeff, TauScalar::monomial(2, -1, 1, &[-1]));
        assert_eq!(det.lhs[1].coeff.specialize_monomials(&[1]), vec![(1, 1, 0)]);
        assert!(qdet_check(7).is_err());
    }

    #[test]
    fn m_is_unique() {
        for n in 2..=4 {
            for p in 0..n - 1 {
                for delta in 1..n as i64 {
                    let rep = qdet_check_with(n, &|s: &[usize]| {
                        let mut m = m_multiindex(s);
                        m[p] += delta;
                        m
                    })
                    .unwrap();
                    assert!(rep.rows.iter().all(|r| !r.holds));
                    assert!(!rep.sum_matches);
                }
            }
        }
    }

    #[test]
    fn budgeted_check() {
        let full = check_presentation(3, 1000, 1).unwrap();
        assert!(full.passed() && !full.sampled);
        assert_eq!((full.relations_checked, full.permutations_checked), (36, 6));
        let s = check_presentation(8, 50, 7).unwrap();
        assert!(s.passed() && s.sampled);
        assert_eq!(s.permutations_total, 40320);
    }

    #[test]
    fn minors() {
        let m = involution_minor(2, 1, 1).unwrap();
        assert_eq!(m, vec![RelTerm::new(TauScalar::one(2), vec![(2, 2)])]);
        let m = involution_minor(2, 1, 2).unwrap();
        assert_eq!(m, vec![RelTerm::new(TauScalar::monomial(2, -1, 1, &[0]), vec![(2, 1)])]);
        let m = involution_minor(3, 2, 2).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].word, vec![(1, 1), (3, 3)]);
        assert_eq!(m[1].word, vec![(1, 3), (3, 1)]);
        assert_eq!(m[1].coeff, TauScalar::monomial(3, -1, 1, &[0, 0]));
        assert!(involution_minor(6, 1, 1).is_err());
    }
}
