//! n-characters (functions multiplicative in each slot) and the test for
//! being a coboundary via their alternation.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{CircleValue, GroupElement, IntMatrix};
use crate::error::{Error, Result};

use super::classify::classify_3cocycle;
use super::cochain::Cochain;

const MAX_ALTERNATION_DEGREE: usize = 4;
const CHARACTER_SAMPLES: usize = 2_000;
const EXHAUSTIVE_CHARACTER_BUDGET: usize = 1 << 20;

fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let inv = (0..n).tuple_combinations().filter(|&(a, b)| p[a] > p[b]).count();
            let s = if inv % 2 == 0 { 1 } else { -1 };
            (p, s)
        })
        .collect()
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `⟨φ, γ_1 ∧ … ∧ γ_n⟩ = Σ_σ sgn(σ) φ(γ_σ(1), …, γ_σ(n))`.
pub fn alternation_pair(phi: &Cochain, gammas: &[&GroupElement]) -> Result<CircleValue> {
    let n = phi.degree();
    if n > MAX_ALTERNATION_DEGREE {
        return Err(Error::DegreeTooHigh(n));
    }
    if gammas.len() != n {
        return Err(Error::Mismatch(format!("{} arguments for a degree {n} cochain", gammas.len())));
    }
    Ok(signed_permutations(n)
        .into_iter()
        .map(|(p, s)| {
            let args: Vec<&GroupElement> = p.iter().map(|&i| gammas[i]).collect();
            phi.eval(&args).pow(s)
        })
        .sum())
}

/// Checks multiplicativity in every slot; exhaustive for small groups,
/// sampled otherwise.
fn check_character(phi: &Cochain) -> Result<()> {
    let g = phi.group();
    let n = phi.degree();
    let order = g.order();
    let fail = |slot: usize, args: &[GroupElement], x: &GroupElement, y: &GroupElement| {
        let coords: Vec<&[i64]> = args.iter().map(|a| a.coords()).collect();
        Error::NotACharacter(format!(
            "slot {} not additive at {coords:?} with {:?} + {:?}",
            slot + 1,
            x.coords(),
            y.coords()
        ))
    };
    let check = |slot: usize, args: &mut Vec<GroupElement>, x: &GroupElement, y: &GroupElement| -> Result<()> {
        args[slot] = x.clone();
        let fx = phi.eval(&args.iter().collect::<Vec<_>>());
        args[slot] = y.clone();
        let fy = phi.eval(&args.iter().collect::<Vec<_>>());
        args[slot] = g.add(x, y);
        let fxy = phi.eval(&args.iter().collect::<Vec<_>>());
        if fxy != fx + fy {
            return Err(fail(slot, args, x, y));
        }
        Ok(())
    };
    let exhaustive = (0..=n).try_fold(1usize, |acc, _| acc.checked_mul(order)).is_some_and(|t| t <= EXHAUSTIVE_CHARACTER_BUDGET);
    if exhaustive {
        let gens: Vec<GroupElement> = (0..g.ngens()).map(|i| g.generator(i)).collect();
        for slot in 0..n {
            for t in 0..order.pow(n as u32 - 1) {
                let mut rest = t;
                let mut args: Vec<GroupElement> = (0..n - 1)
                    .map(|_| {
                        let e = g.element_at(rest % order);
                        rest /= order;
                        e
                    })
                    .collect();
                args.insert(slot, g.zero());
                // additivity against generators in one slot implies it in general
                for y in &gens {
                    for x in g.enumerate() {
                        check(slot, &mut args, &x, y)?;
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6368_6172);
        let random = |rng: &mut ChaCha8Rng| g.element_at(rng.gen_range(0..order));
        for _ in 0..CHARACTER_SAMPLES {
            let slot = rng.gen_range(0..n);
            let mut args: Vec<GroupElement> = (0..n).map(|_| random(&mut rng)).collect();
            let (x, y) = (random(&mut rng), random(&mut rng));
            check(slot, &mut args, &x, &y)?;
        }
    }
    Ok(())
}

/// Whether an n-character on a finite group is a coboundary.
///
/// Degree 1: only the zero character. Degree 2: the alternation vanishes on
/// all pairs of generators. Degree 3: decided by the class in `H^3`, since a
/// 3-character vanishing on wedges of a finite group need not be trivial.
pub fn is_character_coboundary(chi: &Cochain) -> Result<bool> {
    let n = chi.degree();
    if n == 0 || n > 3 {
        return Err(Error::UnsupportedDegree(n));
    }
    check_character(chi)?;
    let g = chi.group();
    match n {
        1 => Ok((0..g.ngens()).all(|i| chi.eval(&[&g.generator(i)]).is_zero())),
        2 => {
            for (i, j) in (0..g.ngens()).tuple_combinations() {
                if !alternation_pair(chi, &[&g.generator(i), &g.generator(j)])?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Ok(classify_3cocycle(chi)?.is_zero()),
    }
}

pub type LatticeEvaluator = Arc<dyn Fn(&[&[i64]]) -> CircleValue + Send + Sync>;

/// A closed-form n-cochain on `Z^rank`.
#[derive(Clone)]
pub struct LatticeCochain {
    rank: usize,
    degree: usize,
    f: LatticeEvaluator,
}

impl LatticeCochain {
    pub fn new<F>(rank: usize, degree: usize, f: F) -> Self
    where
        F: Fn(&[&[i64]]) -> CircleValue + Send + Sync + 'static,
    {
        LatticeCochain { rank, degree, f: Arc::new(f) }
    }

    /// The n-character with the given values on basis tuples `(e_{i_1}, …, e_{i_n})`,
    /// indexed lexicographically.
    pub fn from_basis_values(rank: usize, degree: usize, values: Vec<CircleValue>) -> Result<Self> {
        let expected = rank.pow(degree as u32);
        if values.len() != expected {
            return Err(Error::Mismatch(format!("{} values, expected {expected}", values.len())));
        }
        Ok(Self::new(rank, degree, move |x| {
            let mut total = CircleValue::ZERO;
            for (idx, v) in values.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut rest = idx;
                let mut coeff: i64 = 1;
                for slot in (0..degree).rev() {
                    coeff *= x[slot][rest % rank];
                    rest /= rank;
                    if coeff == 0 {
                        break;
                    }
                }
                total += v.pow(coeff);
            }
            total
        }))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, args: &[&[i64]]) -> CircleValue {
        debug_assert_eq!(args.len(), self.degree);
        (self.f)(args)
    }

    fn basis(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        e
    }

    /// Alternation at `(e_{i_1}, …, e_{i_n})`.
    pub fn alternation_on_basis(&self, idx: &[usize]) -> Result<CircleValue> {
        let n = self.degree;
        if n > MAX_ALTERNATION_DEGREE {
            return Err(Error::DegreeTooHigh(n));
        }
        let vecs: Vec<Vec<i64>> = idx.iter().map(|&i| self.basis(i)).collect();
        Ok(signed_permutations(n)
            .into_iter()
            .map(|(p, s)| {
                let args: Vec<&[i64]> = p.iter().map(|&i| vecs[i].as_slice()).collect();
                self.eval(&args).pow(s)
            })
            .sum())
    }

    /// Multiplicativity on seeded samples from `[-3, 3]^rank` in every slot.
    pub fn validate(&self) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6c61_7474);
        let (m, n) = (self.rank, self.degree);
        let sample = |rng: &mut ChaCha8Rng| (0..m).map(|_| rng.gen_range(-3..=3)).collect::<Vec<i64>>();
        for _ in 0..CHARACTER_SAMPLES / 4 {
            for slot in 0..n {
                let mut args: Vec<Vec<i64>> = (0..n).map(|_| sample(&mut rng)).collect();
                let (x, y) = (sample(&mut rng), sample(&mut rng));
                let xy: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
                let mut at = |v: &Vec<i64>| {
                    args[slot] = v.clone();
                    self.eval(&args.iter().map(|a| a.as_slice()).collect::<Vec<_>>())
                };
                if at(&xy) != at(&x) + at(&y) {
                    return Err(Error::NotACharacter(format!("slot {} not additive at {x:?} + {y:?}", slot + 1)));
                }
            }
        }
        Ok(())
    }

    fn increasing_tuples(&self) -> Vec<Vec<usize>> {
        (0..self.rank).combinations(self.degree).collect()
    }

    /// The character of `⋀^n Z^rank` with value `c_I` on `e_I`, where `c_I` is
    /// the smallest nonnegative `n!`-th root of the alternation at `e_I`.
    /// Evaluated through `n × n` minors.
    pub fn alternating_representative(&self) -> Result<LatticeCochain> {
        if self.degree == 0 || self.degree > MAX_ALTERNATION_DEGREE {
            return Err(Error::DegreeTooHigh(self.degree));
        }
        self.validate()?;
        let nf = factorial(self.degree);
        let coeffs: Vec<(Vec<usize>, CircleValue)> = self
            .increasing_tuples()
            .into_iter()
            .map(|idx| {
                let a = self.alternation_on_basis(&idx)?;
                Ok((idx, a.principal_root(nf)))
            })
            .collect::<Result<_>>()?;
        let n = self.degree;
        Ok(LatticeCochain::new(self.rank, n, move |x| {
            coeffs
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| {
                    let rows: Vec<Vec<i64>> = (0..n).map(|s| idx.iter().map(|&i| x[s][i]).collect()).collect();
                    let det = IntMatrix::from_rows(&rows).determinant();
                    let k = det.mod_floor(&c.denom().into()).to_i64().unwrap();
                    c.pow(k)
                })
                .sum()
        }))
    }
}

impl fmt::Debug for LatticeCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeCochain(Z^{}, degree {})", self.rank, self.degree)
    }
}

/// Whether an n-character on `Z^rank` is a coboundary: its alternation vanishes
/// on every `e_I` with `I` increasing.
pub fn is_lattice_character_coboundary(chi: &LatticeCochain) -> Result<bool> {
    if chi.degree > MAX_ALTERNATION_DEGREE {
        return Err(Error::DegreeTooHigh(chi.degree));
    }
    chi.validate()?;
    for idx in chi.increasing_tuples() {
        if !chi.alternation_on_basis(&idx)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;
    use crate::cohomology::generators::{generator_phi, Generator};

    #[test]
    fn symmetric_pairing_alternates_to_zero() {
        let g = FinAbGroup::new(&[6, 3]).unwrap();
        let chi = Cochain::closed(&g, 2, |x| CircleValue::new(x[0][0] * x[1][0] + 2 * (x[0][1] * x[1][1]), 6));
        for a in g.enumerate() {
            for b in g.enumerate() {
                assert!(alternation_pair(&chi, &[&a, &b]).unwrap().is_zero());
            }
        }
        assert!(is_character_coboundary(&chi).unwrap());
    }

    #[test]
    fn triple_alternation() {
        let e = FinAbGroup::new(&[2, 2, 2]).unwrap();
        let phi = generator_phi(&e, Generator::Triple(0, 1, 2)).unwrap();
        let (a, b, c) = (e.generator(0), e.generator(1), e.generator(2));
        assert_eq!(alternation_pair(&phi, &[&a, &b, &c]).unwrap(), CircleValue::new(1, 2));
        assert!(alternation_pair(&phi, &[&a, &a, &c]).unwrap().is_zero());
        assert!(!is_character_coboundary(&phi).unwrap());
    }

    #[test]
    fn antisymmetric_pairing_on_finite_group() {
        let g = FinAbGroup::new(&[2, 2]).unwrap();
        let chi = Cochain::closed(&g, 2, |x| CircleValue::new(x[0][0] * x[1][1], 2));
        assert!(!is_character_coboundary(&chi).unwrap());
    }

    #[test]
    fn degree_guards() {
        let g = FinAbGroup::new(&[2]).unwrap();
        let z5 = Cochain::zero(&g, 5);
        let u = g.generator(0);
        assert!(matches!(alternation_pair(&z5, &[&u, &u, &u, &u, &u]), Err(Error::DegreeTooHigh(5))));
        assert!(matches!(is_character_coboundary(&Cochain::zero(&g, 4)), Err(Error::UnsupportedDegree(4))));
    }

    #[test]
    fn non_character_rejected() {
        let g = FinAbGroup::new(&[4]).unwrap();
        let f = Cochain::closed(&g, 2, |x| CircleValue::new(x[0][0] * x[0][0] * x[1][0], 4));
        assert!(matches!(is_character_coboundary(&f), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn lattice_examples() {
        let anti = LatticeCochain::new(2, 2, |x| CircleValue::new(x[0][0] * x[1][1] - x[0][1] * x[1][0], 2));
        assert_eq!(anti.eval(&[&[1, 0], &[0, 1]]), CircleValue::new(1, 2));
        assert_eq!(anti.eval(&[&[0, 1], &[1, 0]]), CircleValue::new(-1, 2));
        assert!(is_lattice_character_coboundary(&anti).unwrap());

        let det4 = LatticeCochain::new(3, 3, |x: &[&[i64]]| {
            let rows: Vec<Vec<i64>> = x.iter().map(|r| r.to_vec()).collect();
            let d = IntMatrix::from_rows(&rows).determinant().mod_floor(&4.into()).to_i64().unwrap();
            CircleValue::new(d, 4)
        });
        assert!(!is_lattice_character_coboundary(&det4).unwrap());

        let bad = LatticeCochain::new(1, 1, |x| CircleValue::new(x[0][0] * x[0][0], 5));
        assert!(matches!(is_lattice_character_coboundary(&bad), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn alternating_representative_matches_alternation() {
        let values = vec![
            CircleValue::new(1, 3),
            CircleValue::new(1, 4),
            CircleValue::new(2, 5),
            CircleValue::new(0, 1),
        ];
        let chi = LatticeCochain::from_basis_values(2, 2, values).unwrap();
        let alt = chi.alternating_representative().unwrap();
        // alternation of the root is twice the root, which gives back the alternation
        let a = chi.alternation_on_basis(&[0, 1]).unwrap();
        assert_eq!(alt.alternation_on_basis(&[0, 1]).unwrap(), a);
        assert_eq!(alt.eval(&[&[0, 1], &[1, 0]]), alt.eval(&[&[1, 0], &[0, 1]]).pow(-1));
        assert!(is_lattice_character_coboundary(&alt).is_ok());
    }
}
