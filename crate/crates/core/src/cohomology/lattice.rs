//! 3-cocycles on `Γ = Γ_1 / Γ_0` obtained as `∂f` of a function on the lattice
//! `Γ_1 = Z^m`, and the map from characters of `Γ_0 ⊗ Γ` to `H^3(Γ; T)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::abelian::{CircleValue, FinAbGroup, GroupElement};
use crate::error::{Error, Result};

use super::classify::{classify_3cocycle, H3Class};
use super::cochain::Cochain;
use super::generators::Generator;

/// Largest `|Γ|^3` for which `lconstruction` stores a table.
const TABLE_BUDGET: usize = 1 << 22;
const LIFT_SHIFT_SAMPLES: usize = 200;

/// A character of `Γ_0 ⊗ Γ`, where `Γ_0` is the relation lattice of the
/// presentation of `Γ`. Stored by its values `χ(r_l ⊗ u_j)` on relation
/// columns `r_l` and generators `u_j`.
#[derive(Clone)]
pub struct Gamma0Character {
    group: FinAbGroup,
    values: Vec<Vec<CircleValue>>,
    // χ(γ ⊗ u_j) = w_j · γ mod 1 for γ ∈ Γ_0, as (numerators, denominator)
    functional: Vec<(Vec<i64>, i64)>,
}

impl Gamma0Character {
    /// From values `values[l][j] = χ(r_l ⊗ u_j)`. Checks `n_j χ(r_l ⊗ u_j) = 0`
    /// and compatibility with the integer relations among the `r_l`.
    pub fn new(group: &FinAbGroup, values: Vec<Vec<CircleValue>>) -> Result<Self> {
        let p = group.presentation()?;
        let (m, nrel) = (p.rank(), p.relations().cols());
        if values.len() != nrel || values.iter().any(|r| r.len() != group.ngens()) {
            return Err(Error::Mismatch(format!(
                "need {nrel} rows of {} values, one per relation and generator",
                group.ngens()
            )));
        }
        for (l, row) in values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.pow(group.factors()[j]).is_zero() {
                    return Err(Error::NotACharacter(format!(
                        "value {v} on relation {} and generator {} has order not dividing {}",
                        l + 1,
                        j + 1,
                        group.factors()[j]
                    )));
                }
            }
        }
        let smith = p.smith();
        for k in m..nrel {
            for j in 0..group.ngens() {
                let s: CircleValue = (0..nrel).map(|l| big_pow(values[l][j], &smith.v[(l, k)])).sum();
                if !s.is_zero() {
                    return Err(Error::NotACharacter(format!(
                        "values are inconsistent with a relation among the relation vectors (generator {})",
                        j + 1
                    )));
                }
            }
        }
        let functional = build_functional(group, &values)?;
        Ok(Gamma0Character { group: group.clone(), values, functional })
    }

    /// From values on the basis `b_k` of `Γ_0` formed by the first `rank`
    /// columns of `M V` (Smith form `U M V = D`).
    pub fn from_basis_values(group: &FinAbGroup, basis_values: Vec<Vec<CircleValue>>) -> Result<Self> {
        let p = group.presentation()?;
        let (m, nrel) = (p.rank(), p.relations().cols());
        if basis_values.len() != m || basis_values.iter().any(|r| r.len() != group.ngens()) {
            return Err(Error::Mismatch(format!("need {m} rows of {} values", group.ngens())));
        }
        let v_inv = &p.smith().v_inv;
        let values = (0..nrel)
            .map(|l| {
                (0..group.ngens())
                    .map(|j| (0..m).map(|k| big_pow(basis_values[k][j], &v_inv[(k, l)])).sum())
                    .collect()
            })
            .collect();
        Self::new(group, values)
    }

    /// Restriction of the character `ρ` of `Γ_1 ⊗ Γ` with `rho[k][j] = ρ(e_k ⊗ u_j)`.
    pub fn restricted_from_lattice(group: &FinAbGroup, rho: &[Vec<CircleValue>]) -> Result<Self> {
        let p = group.presentation()?;
        let (m, nrel) = (p.rank(), p.relations().cols());
        if rho.len() != m || rho.iter().any(|r| r.len() != group.ngens()) {
            return Err(Error::Mismatch(format!("need {m} rows of {} values", group.ngens())));
        }
        let rel = p.relations();
        let values = (0..nrel)
            .map(|l| {
                (0..group.ngens())
                    .map(|j| (0..m).map(|k| big_pow(rho[k][j], &rel[(k, l)])).sum())
                    .collect()
            })
            .collect();
        Self::new(group, values)
    }

    pub fn zero(group: &FinAbGroup) -> Result<Self> {
        let nrel = group.presentation()?.relations().cols();
        Self::new(group, vec![vec![CircleValue::ZERO; group.ngens()]; nrel])
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// `χ(r_l ⊗ u_j)`.
    pub fn value(&self, l: usize, j: usize) -> CircleValue {
        self.values[l][j]
    }

    pub fn values(&self) -> &[Vec<CircleValue>] {
        &self.values
    }

    pub fn add(&self, other: &Gamma0Character) -> Result<Gamma0Character> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| x + y).collect())
            .collect();
        Self::new(&self.group, values)
    }

    /// `χ(γ ⊗ β)` for `γ ∈ Γ_0`. No membership check.
    fn eval_unchecked(&self, gamma: &[i64], beta: &GroupElement) -> CircleValue {
        self.functional
            .iter()
            .zip(beta.coords())
            .filter(|(_, &b)| b != 0)
            .map(|((w, den), &b)| {
                let s: i128 = w.iter().zip(gamma).map(|(&a, &g)| a as i128 * g as i128).sum();
                CircleValue::new((s.rem_euclid(*den as i128) as i64 * b) % den, *den)
            })
            .sum()
    }

    /// `χ(γ ⊗ β)`; `γ` must lie in `Γ_0`.
    pub fn eval(&self, gamma: &[i64], beta: &GroupElement) -> Result<CircleValue> {
        if !self.group.project(gamma)?.is_zero() {
            return Err(Error::Invalid(format!("{gamma:?} is not in the relation lattice")));
        }
        Ok(self.eval_unchecked(gamma, beta))
    }
}

impl fmt::Debug for Gamma0Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gamma0Character({}, {:?})", self.group, self.values)
    }
}

fn big_pow(x: CircleValue, k: &BigInt) -> CircleValue {
    if x.is_zero() {
        return x;
    }
    x.pow(k.mod_floor(&BigInt::from(x.denom())).to_i64().unwrap())
}

fn build_functional(group: &FinAbGroup, values: &[Vec<CircleValue>]) -> Result<Vec<(Vec<i64>, i64)>> {
    let p = group.presentation()?;
    let s = p.smith();
    let (m, nrel) = (p.rank(), p.relations().cols());
    let d = s.diagonal();
    // c(γ)_l = Σ_{k<m} V_{lk} (Uγ)_k / d_k
    let pinv: Vec<Vec<BigRational>> = (0..nrel)
        .map(|l| {
            (0..m)
                .map(|i| {
                    (0..m)
                        .filter(|&k| !d[k].is_zero())
                        .map(|k| BigRational::new(&s.v[(l, k)] * &s.u[(k, i)], d[k].clone()))
                        .fold(BigRational::zero(), |a, b| a + b)
                })
                .collect()
        })
        .collect();
    (0..group.ngens())
        .map(|j| {
            let w: Vec<BigRational> = (0..m)
                .map(|i| {
                    let t = (0..nrel)
                        .map(|l| {
                            let v = values[l][j];
                            BigRational::new(v.numer().into(), v.denom().into()) * &pinv[l][i]
                        })
                        .fold(BigRational::zero(), |a, b| a + b);
                    &t - t.floor()
                })
                .collect();
            let den = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let den64 = den.to_i64().ok_or_else(|| Error::Invalid("character denominators too large".into()))?;
            let nums = w.iter().map(|x| (x.numer() * (&den / x.denom())).to_i64().unwrap()).collect();
            Ok((nums, den64))
        })
        .collect()
}

pub type LatticeFn = Arc<dyn Fn(&[i64], &[i64]) -> CircleValue + Send + Sync>;

/// `f: Γ_1 × Γ_1 → T` with `f(α, β + γ) = f(α, β)` and
/// `f(α + γ, β) = χ(γ ⊗ β̄) f(α, β)` for `γ ∈ Γ_0`.
#[derive(Clone)]
pub struct LatticeFunction2 {
    chi: Gamma0Character,
    f: LatticeFn,
}

impl LatticeFunction2 {
    pub fn new<F>(chi: Gamma0Character, f: F) -> Self
    where
        F: Fn(&[i64], &[i64]) -> CircleValue + Send + Sync + 'static,
    {
        LatticeFunction2 { chi, f: Arc::new(f) }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.chi.group
    }

    pub fn character(&self) -> &Gamma0Character {
        &self.chi
    }

    pub fn eval(&self, a: &[i64], b: &[i64]) -> CircleValue {
        (self.f)(a, b)
    }

    /// `f_i(α, β) = χ_{n_i}(-⌊α_i/n_i⌋ β_i)` and `f_ij(α, β) = χ_{n_j}(-⌊α_i/n_i⌋ β_j)`
    /// on the diagonal presentation `Z^m / ⊕ n_i Z`.
    pub fn standard(group: &FinAbGroup, which: Generator) -> Result<Self> {
        which.validate(group)?;
        let p = group.presentation()?;
        let n = group.factors().to_vec();
        let m = n.len();
        let rel = p.relations();
        let diagonal = p.rank() == m
            && rel.cols() == m
            && (0..m).all(|a| (0..m).all(|b| rel.get_i64(a, b) == if a == b { n[a] } else { 0 }));
        if !diagonal {
            return Err(Error::Invalid("standard lattice functions need the diagonal presentation".into()));
        }
        let (i, j) = match which {
            Generator::Single(i) => (i, i),
            Generator::Pair(i, j) => (i, j),
            Generator::Triple(..) => {
                return Err(Error::NotLemmaForm("triple generators do not lift to coboundaries".into()))
            }
        };
        let mut values = vec![vec![CircleValue::ZERO; m]; m];
        values[i][j] = CircleValue::new(-1, n[j]);
        let chi = Gamma0Character::new(group, values)?;
        let (ni, nj) = (n[i], n[j]);
        Ok(Self::new(chi, move |a, b| CircleValue::new((-Integer::div_floor(&a[i], &ni) * b[j]).rem_euclid(nj), nj)))
    }

    /// `f(α, β) = χ((α - s(ᾱ)) ⊗ β̄)` with `s` the transversal, by default the
    /// lift with normal-form coordinates in `[0, n_i)`. A custom transversal
    /// lists one lift per element, in enumeration order.
    pub fn representative(chi: &Gamma0Character, transversal: Option<Vec<Vec<i64>>>) -> Result<Self> {
        let g = chi.group.clone();
        let lifts = match transversal {
            None => g.enumerate().map(|e| g.lift(&e)).collect::<Result<Vec<_>>>()?,
            Some(t) => {
                if t.len() != g.order() {
                    return Err(Error::BadTransversal(format!("{} lifts for {} elements", t.len(), g.order())));
                }
                for (idx, s) in t.iter().enumerate() {
                    if g.project(s)? != g.element_at(idx) {
                        return Err(Error::BadTransversal(format!("{s:?} does not lie over element {idx}")));
                    }
                }
                t
            }
        };
        let chi2 = chi.clone();
        Ok(Self::new(chi.clone(), move |a, b| {
            let abar = g.project(a).expect("lattice vector of the wrong length");
            let s = &lifts[g.index_of(&abar)];
            let gamma: Vec<i64> = a.iter().zip(s).map(|(x, y)| x - y).collect();
            let bbar = g.project(b).expect("lattice vector of the wrong length");
            chi2.eval_unchecked(&gamma, &bbar)
        }))
    }

    /// Checks both identities for every relation column against a seeded set
    /// of lattice points (zero, the standard basis, and random vectors).
    pub fn validate(&self) -> Result<()> {
        let g = self.group();
        let p = g.presentation()?;
        let m = p.rank();
        let rel = p.relations();
        let mut pts: Vec<Vec<i64>> = vec![vec![0; m]];
        for k in 0..m {
            let mut e = vec![0; m];
            e[k] = 1;
            pts.push(e);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x6c63_6f6e);
        for _ in 0..6 {
            pts.push((0..m).map(|_| rng.gen_range(-5..=5)).collect());
        }
        for l in 0..rel.cols() {
            let r: Vec<i64> = (0..m).map(|i| rel.get_i64(i, l)).collect();
            for a in &pts {
                for b in &pts {
                    let f = self.eval(a, b);
                    let bplus: Vec<i64> = b.iter().zip(&r).map(|(x, y)| x + y).collect();
                    if self.eval(a, &bplus) != f {
                        return Err(Error::NotLemmaForm(format!(
                            "f({a:?}, β + r) ≠ f({a:?}, β) for β = {b:?}, relation {}",
                            l + 1
                        )));
                    }
                    let aplus: Vec<i64> = a.iter().zip(&r).map(|(x, y)| x + y).collect();
                    let bbar = g.project(b)?;
                    if self.eval(&aplus, b) != self.chi.eval_unchecked(&r, &bbar) + f {
                        return Err(Error::NotLemmaForm(format!(
                            "f(α + r, β) ≠ χ(r ⊗ β̄) f(α, β) at α = {a:?}, β = {b:?}, relation {}",
                            l + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn coboundary_at(&self, a: &[i64], b: &[i64], c: &[i64]) -> CircleValue {
        let ab: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        let bc: Vec<i64> = b.iter().zip(c).map(|(x, y)| x + y).collect();
        self.eval(b, c) - self.eval(&ab, c) + self.eval(a, &bc) - self.eval(a, b)
    }
}

impl fmt::Debug for LatticeFunction2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeFunction2({:?})", self.chi)
    }
}

/// `(∂f)(α, β, γ) = f(β, γ) - f(α+β, γ) + f(α, β+γ) - f(α, β)` on lifts, as a
/// 3-cocycle on `Γ`. Validates `f` first, then re-evaluates on shifted lifts
/// at seeded sample points.
pub fn lconstruction(f: &LatticeFunction2) -> Result<Cochain> {
    f.validate()?;
    let g = f.group().clone();
    let p = g.presentation()?;
    let m = p.rank();
    let lifts: Arc<Vec<Vec<i64>>> = Arc::new(g.enumerate().map(|e| g.lift(&e)).collect::<Result<_>>()?);
    let order = g.order();

    let mut rng = ChaCha8Rng::seed_from_u64(0x7368_6966);
    let rel = p.relations();
    for _ in 0..LIFT_SHIFT_SAMPLES {
        let idx: Vec<usize> = (0..3).map(|_| rng.gen_range(0..order)).collect();
        let base: Vec<&[i64]> = idx.iter().map(|&i| lifts[i].as_slice()).collect();
        let shifted: Vec<Vec<i64>> = base
            .iter()
            .map(|v| {
                let mut w = v.to_vec();
                for l in 0..rel.cols() {
                    let k = rng.gen_range(-2..=2);
                    for (i, x) in w.iter_mut().enumerate() {
                        *x += k * rel.get_i64(i, l);
                    }
                }
                w
            })
            .collect();
        let v0 = f.coboundary_at(base[0], base[1], base[2]);
        let v1 = f.coboundary_at(&shifted[0], &shifted[1], &shifted[2]);
        if v0 != v1 {
            return Err(Error::NotLemmaForm(format!(
                "∂f differs between lifts {base:?} and {shifted:?}"
            )));
        }
    }

    let total = order.checked_pow(3).filter(|&t| t <= TABLE_BUDGET);
    if total.is_some() {
        let values: Vec<CircleValue> = (0..order * order * order)
            .into_par_iter()
            .map(|t| {
                let (a, b, c) = (t / (order * order), (t / order) % order, t % order);
                f.coboundary_at(&lifts[a], &lifts[b], &lifts[c])
            })
            .collect();
        return Cochain::from_table(&g, 3, values);
    }
    let f = f.clone();
    let g2 = g.clone();
    debug_assert_eq!(lifts.first().map(|v| v.len()), Some(m));
    Ok(Cochain::closed(&g, 3, move |x| {
        let l: Vec<&Vec<i64>> = x.iter().map(|c| &lifts[g2.index_of_coords(c)]).collect();
        f.coboundary_at(l[0], l[1], l[2])
    }))
}

/// Class of `∂f` for the representative `f` of `χ`; all triple exponents vanish.
pub fn tor_class_map(chi: &Gamma0Character) -> Result<H3Class> {
    tor_class_map_with(chi, None)
}

pub fn tor_class_map_with(chi: &Gamma0Character, transversal: Option<Vec<Vec<i64>>>) -> Result<H3Class> {
    let f = LatticeFunction2::representative(chi, transversal)?;
    classify_3cocycle(&lconstruction(&f)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::IntMatrix;
    use crate::cohomology::generators::generator_phi;

    #[test]
    fn zero_function_gives_zero_cocycle() {
        let g = FinAbGroup::new(&[2, 4]).unwrap();
        let f = LatticeFunction2::new(Gamma0Character::zero(&g).unwrap(), |_, _| CircleValue::ZERO);
        let c = lconstruction(&f).unwrap();
        assert!(c.agrees_with(&Cochain::zero(&g, 3)).unwrap());
    }

    #[test]
    fn standard_functions_give_generators() {
        let g = FinAbGroup::new(&[2, 4, 6]).unwrap();
        for gen in [Generator::Single(0), Generator::Single(2), Generator::Pair(0, 1), Generator::Pair(1, 2)] {
            let f = LatticeFunction2::standard(&g, gen).unwrap();
            let c = lconstruction(&f).unwrap();
            assert!(c.agrees_with(&generator_phi(&g, gen).unwrap()).unwrap(), "{gen}");
        }
    }

    #[test]
    fn cyclic_generator_maps_to_inverse() {
        for n in [2, 3, 5, 6] {
            let g = FinAbGroup::cyclic(n);
            let chi = Gamma0Character::new(&g, vec![vec![CircleValue::new(1, n)]]).unwrap();
            let c = tor_class_map(&chi).unwrap();
            assert_eq!(c.get(Generator::Single(0)), n - 1, "Z/{n}");
        }
    }

    #[test]
    fn non_lemma_form_rejected() {
        let g = FinAbGroup::cyclic(3);
        let chi = Gamma0Character::zero(&g).unwrap();
        let f = LatticeFunction2::new(chi, |a, _| CircleValue::new(a[0], 5));
        assert!(matches!(lconstruction(&f), Err(Error::NotLemmaForm(_))));
    }

    #[test]
    fn inconsistent_values_rejected() {
        // Z / (2Z + 2Z): the two relation columns coincide
        let g = FinAbGroup::quotient(1, &IntMatrix::from_rows(&[[2, 2]])).unwrap();
        let bad = Gamma0Character::new(&g, vec![vec![CircleValue::new(1, 2)], vec![CircleValue::ZERO]]);
        assert!(matches!(bad, Err(Error::NotACharacter(_))));
        let bad_order = Gamma0Character::new(&FinAbGroup::cyclic(2), vec![vec![CircleValue::new(1, 3)]]);
        assert!(matches!(bad_order, Err(Error::NotACharacter(_))));
    }

    #[test]
    fn eval_checks_membership() {
        let g = FinAbGroup::cyclic(4);
        let chi = Gamma0Character::new(&g, vec![vec![CircleValue::new(1, 4)]]).unwrap();
        assert_eq!(chi.eval(&[8], &g.generator(0)).unwrap(), CircleValue::new(2, 4));
        assert!(chi.eval(&[3], &g.generator(0)).is_err());
    }

    #[test]
    fn bad_transversal() {
        let g = FinAbGroup::cyclic(3);
        let chi = Gamma0Character::zero(&g).unwrap();
        let r = LatticeFunction2::representative(&chi, Some(vec![vec![0], vec![2], vec![1]]));
        assert!(matches!(r, Err(Error::BadTransversal(_))));
    }
}
