//! The function `f` attached to `τ`, the cocycle `Φ^τ`, and the invariants
//! `Θ` and `Υ`.
//!
//! Orientation: `f(λ + α_i, μ) = ⟨τ_i, μ⟩ f(λ, μ)` and `phi_tau` returns `∂f`.
//! The associator acts by the complex conjugate of `∂f`, so
//! `Θ(τ) = -[∂f]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abelian::{solve_mod_one, CircleValue, FinAbGroup, IntMatrix};
use crate::cohomology::{
    classify_3cocycle, is_lattice_character_coboundary, lconstruction, Cochain, Gamma0Character, H3Class,
    LatticeCochain, LatticeFunction2,
};
use crate::error::{Error, Result};

use super::center::{abs_hom, weight_l, CenterElement, TauTuple};
use super::datum::RootDatum;

/// The unitary associator is the conjugate of `∂f`.
pub const PHI_IS_CONJUGATE: bool = true;

/// Largest `|P/Q|` for which `upsilon` solves `∂g = ∂f` on `P/Q`.
pub const UPSILON_MAX_CENTER: usize = 12;

/// `χ(α_l ⊗ u_k) = ⟨τ_l, u_k⟩` on `Q ⊗ P/Q`.
pub fn tau_character(rd: &RootDatum, tau: &TauTuple) -> Result<Gamma0Character> {
    check_len(rd, tau)?;
    let center = rd.center_group()?;
    let values = tau
        .elems()
        .iter()
        .map(|z| (0..center.ngens()).map(|k| z.on_generator(k)).collect())
        .collect();
    Gamma0Character::new(&center, values)
}

fn check_len(rd: &RootDatum, tau: &TauTuple) -> Result<()> {
    if tau.len() != rd.rank() {
        return Err(Error::Mismatch(format!("{} center elements for rank {}", tau.len(), rd.rank())));
    }
    Ok(())
}

/// `f(λ_i + Σ m_j α_j, μ) = Σ m_j ⟨τ_j, μ⟩`, where `λ_i` runs over `reps`
/// (one weight per element of `P/Q`, in enumeration order; by default the
/// normal-form lifts).
pub fn f_from_tau(rd: &RootDatum, tau: &TauTuple, reps: Option<Vec<Vec<i64>>>) -> Result<LatticeFunction2> {
    let chi = tau_character(rd, tau)?;
    let f = LatticeFunction2::representative(&chi, reps)?;
    f.validate()?;
    Ok(f)
}

/// `∂f` as a 3-cocycle on `P/Q`.
pub fn phi_tau(rd: &RootDatum, tau: &TauTuple) -> Result<Cochain> {
    phi_tau_with(rd, tau, None)
}

pub fn phi_tau_with(rd: &RootDatum, tau: &TauTuple, reps: Option<Vec<Vec<i64>>>) -> Result<Cochain> {
    lconstruction(&f_from_tau(rd, tau, reps)?)
}

/// Both orientations: the class of `∂f` and `Θ(τ)`.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaReport {
    pub dphi: H3Class,
    pub theta: H3Class,
}

pub fn theta_report(rd: &RootDatum, tau: &TauTuple) -> Result<ThetaReport> {
    let dphi = classify_3cocycle(&phi_tau(rd, tau)?)?;
    let theta = if PHI_IS_CONJUGATE { dphi.neg() } else { dphi.clone() };
    Ok(ThetaReport { dphi, theta })
}

/// `Θ(τ) ∈ H^3(P/Q; T)`.
pub fn theta_of_tau(rd: &RootDatum, tau: &TauTuple) -> Result<H3Class> {
    Ok(theta_report(rd, tau)?.theta)
}

/// For `SU(n)`: the exponent `e` with `class = ζ_n^e` under
/// `H^3(P/Q; T) ≅ H^3(Z/n; T) ≅ μ_n`, pulling back along `1 ↦ ϖ_{n-1}`.
pub fn su_n_class_exponent(rd: &RootDatum, class: &H3Class) -> Result<i64> {
    let n = rd.su_n().ok_or_else(|| Error::Invalid(format!("{rd} is not of type A")))?;
    let center = rd.center_group()?;
    if class.group() != &center {
        return Err(Error::GroupMismatch);
    }
    let gen = center.project(&rd.fundamental_weight(n - 2))?;
    let rep = class.representative();
    let zn = FinAbGroup::cyclic(n as i64);
    let pulled = Cochain::closed(&zn, 3, move |x| {
        let e: Vec<_> = x.iter().map(|c| center.scale(&gen, c[0])).collect();
        rep.eval(&[&e[0], &e[1], &e[2]])
    })
    .materialize();
    let c = classify_3cocycle(&pulled)?;
    Ok(c.get(crate::cohomology::Generator::Single(0)))
}

/// `-Σ i t_i mod n`, the exponent of `∏ τ_i^{-i}` for `τ_i = ζ_n^{t_i}`.
pub fn su_n_theta_closed_form(n: usize, exps: &[i64]) -> i64 {
    let s: i64 = exps.iter().enumerate().map(|(i, &t)| (i as i64 + 1) * t).sum();
    (-s).rem_euclid(n as i64)
}

/// Antisymmetry of a representative 2-cocycle of `Υ(τ)`.
#[derive(Clone, Debug, Serialize)]
pub struct UpsilonReport {
    /// `"L"` for the weights `L_1, …, L_n` of `SU(n)`, `"varpi"` otherwise.
    pub basis: String,
    /// `(i, j, f(b_i, b_j) - f(b_j, b_i))` for `i < j`, 1-based.
    pub antisymmetry: Vec<(usize, usize, CircleValue)>,
    /// The representative is a coboundary on `P`.
    pub coboundary_on_p: bool,
    /// The class vanishes in `H^2(P; T) / H^2(P/Q; T)`.
    pub trivial: bool,
}

/// `Υ(τ)` for `τ ∈ ker Θ`.
pub fn upsilon(rd: &RootDatum, tau: &TauTuple) -> Result<UpsilonReport> {
    let theta = theta_of_tau(rd, tau)?;
    if !theta.is_zero() {
        return Err(Error::NotInKernel(theta.to_string()));
    }
    match tau.su_n_exponents(rd) {
        Some(exps) => upsilon_su_n(rd, &exps),
        None => upsilon_general(rd, tau),
    }
}

/// The character `f(L_i, μ) = -(t_1 + … + t_{i-1}) |μ| / n` of `P ⊗ P/Q`.
fn su_n_character(n: usize, exps: &[i64]) -> impl Fn(&[i64], &[i64]) -> CircleValue + Send + Sync + 'static {
    // λ = Σ a_k ϖ_k = Σ_i (a_i + … + a_{n-1}) L_i up to Σ L_i = 0
    let partial: Vec<i64> = std::iter::once(0)
        .chain(exps.iter().scan(0, |s, &t| {
            *s += t;
            Some(*s)
        }))
        .collect();
    move |lam: &[i64], mu: &[i64]| {
        let m = abs_hom(n, mu);
        let mut coeff = 0i64;
        let mut tail = 0i64;
        for i in (0..n - 1).rev() {
            tail += lam[i];
            coeff += tail * partial[i];
        }
        CircleValue::new(-coeff * m, n as i64)
    }
}

fn upsilon_su_n(rd: &RootDatum, exps: &[i64]) -> Result<UpsilonReport> {
    let n = rd.su_n().expect("type A");
    let f = su_n_character(n, exps);
    let ls: Vec<Vec<i64>> = (1..=n).map(|i| weight_l(n, i)).collect();
    let mut antisymmetry = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            antisymmetry.push((i + 1, j + 1, f(&ls[i], &ls[j]) - f(&ls[j], &ls[i])));
        }
    }
    let r = rd.rank();
    let lc = LatticeCochain::new(r, 2, move |x| f(x[0], x[1]));
    let coboundary_on_p = is_lattice_character_coboundary(&lc)?;
    Ok(UpsilonReport { basis: "L".into(), trivial: coboundary_on_p, antisymmetry, coboundary_on_p })
}

/// Solves `∂g = ∂f` on `P/Q`, forms `h = f - g∘π` on `P` (conjugated so that
/// `∂h` is the associator) and reads off the alternation of `h` on the `ϖ`
/// basis. The class is trivial iff the alternation vanishes on `Q × P`.
fn upsilon_general(rd: &RootDatum, tau: &TauTuple) -> Result<UpsilonReport> {
    let center = rd.center_group()?;
    let n = center.order();
    if n > UPSILON_MAX_CENTER {
        return Err(Error::Invalid(format!("|P/Q| = {n} is too large for Υ (at most {UPSILON_MAX_CENTER})")));
    }
    let f = f_from_tau(rd, tau, None)?;
    let df = lconstruction(&f)?.materialize();
    let add = |a: usize, b: usize| center.index_of(&center.add(&center.element_at(a), &center.element_at(b)));
    let mut m = IntMatrix::zeros(n * n * n, n * n);
    let mut rhs = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let row = (a * n + b) * n + c;
                m[(row, b * n + c)] += 1;
                m[(row, add(a, b) * n + c)] -= 1;
                m[(row, a * n + add(b, c))] += 1;
                m[(row, a * n + b)] -= 1;
                rhs.push(df.eval_indices(&[a, b, c]));
            }
        }
    }
    let g = solve_mod_one(&m, &rhs).expect("∂f is a coboundary on P/Q when lifted; a solution must exist");
    let sign = if PHI_IS_CONJUGATE { -1 } else { 1 };
    let r = rd.rank();
    let h = |x: &[i64], y: &[i64]| -> Result<CircleValue> {
        let (i, j) = (center.index_of(&center.project(x)?), center.index_of(&center.project(y)?));
        Ok((f.eval(x, y) - g[i * n + j]).pow(sign))
    };
    let mut b = vec![vec![CircleValue::ZERO; r]; r];
    for i in 0..r {
        for j in 0..r {
            let (wi, wj) = (rd.fundamental_weight(i), rd.fundamental_weight(j));
            b[i][j] = h(&wi, &wj)? - h(&wj, &wi)?;
        }
    }
    let antisymmetry =
        (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).map(|(i, j)| (i + 1, j + 1, b[i][j])).collect();
    let mut upper = vec![CircleValue::ZERO; r * r];
    for i in 0..r {
        for j in i + 1..r {
            upper[i * r + j] = b[i][j];
        }
    }
    let coboundary_on_p = is_lattice_character_coboundary(&LatticeCochain::from_basis_values(r, 2, upper)?)?;
    let trivial = (0..r).all(|l| {
        let alpha = rd.simple_root(l);
        (0..r).all(|j| alpha.iter().enumerate().map(|(i, &a)| b[i][j].pow(a)).sum::<CircleValue>().is_zero())
    });
    Ok(UpsilonReport { basis: "varpi".into(), antisymmetry, coboundary_on_p, trivial })
}

/// Sufficient criterion for `G_q^τ ≅ G_q^{τ'}`: `τ'τ^{-1} ∈ ker Θ ∩ ker Υ`.
pub fn iso_equivalent(rd: &RootDatum, tau: &TauTuple, tau2: &TauTuple) -> Result<bool> {
    check_len(rd, tau)?;
    check_len(rd, tau2)?;
    let d = tau2.mul(&tau.inv());
    if !theta_of_tau(rd, &d)?.is_zero() {
        return Ok(false);
    }
    Ok(upsilon(rd, &d)?.trivial)
}

/// Outcome of `f_conjugation_check`; `witness` is `(i, λ, μ)` for a failed
/// shift by `α_i` in the first (`first = true`) or second argument.
#[derive(Clone, Debug, Serialize)]
pub struct ConjugationReport {
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<ConjugationWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugationWitness {
    pub root: usize,
    pub first: bool,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
}

/// Checks `f(λ + α_i, μ) - f(λ, μ) = ⟨τ_i, μ⟩` and `f(λ, μ + α_i) = f(λ, μ)`
/// for the `f` built from `τ`.
pub fn f_conjugation_check(rd: &RootDatum, tau: &TauTuple) -> Result<ConjugationReport> {
    let f = f_from_tau(rd, tau, None)?;
    f_conjugation_check_with(rd, tau, &|a, b| f.eval(a, b))
}

/// Same check for an arbitrary `f`, on all pairs from the transversal window
/// (normal-form lifts shifted by `0` and `±ϖ_k`) plus seeded random weights.
pub fn f_conjugation_check_with(
    rd: &RootDatum,
    tau: &TauTuple,
    f: &dyn Fn(&[i64], &[i64]) -> CircleValue,
) -> Result<ConjugationReport> {
    check_len(rd, tau)?;
    let r = rd.rank();
    let center = rd.center_group()?;
    let mut pts: Vec<Vec<i64>> = center.enumerate().map(|e| center.lift(&e)).collect::<Result<_>>()?;
    for k in 0..r {
        for s in [1, -1] {
            let mut w = vec![0; r];
            w[k] = s;
            pts.push(w);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x636f_6e6a);
    for _ in 0..8 {
        pts.push((0..r).map(|_| rng.gen_range(-6..=6)).collect());
    }
    let mut checked = 0;
    for lam in &pts {
        for mu in &pts {
            let base = f(lam, mu);
            for i in 0..r {
                let alpha = rd.simple_root(i);
                let shifted: Vec<i64> = lam.iter().zip(&alpha).map(|(x, y)| x + y).collect();
                checked += 2;
                if f(&shifted, mu) - base != tau.get(i).pair(mu) {
                    return Ok(fail(checked, i, true, lam, mu));
                }
                let shifted: Vec<i64> = mu.iter().zip(&alpha).map(|(x, y)| x + y).collect();
                if f(lam, &shifted) != base {
                    return Ok(fail(checked, i, false, lam, mu));
                }
            }
        }
    }
    Ok(ConjugationReport { holds: true, checked, witness: None })
}

fn fail(checked: usize, i: usize, first: bool, lam: &[i64], mu: &[i64]) -> ConjugationReport {
    ConjugationReport {
        holds: false,
        checked,
        witness: Some(ConjugationWitness { root: i + 1, first, lambda: lam.to_vec(), mu: mu.to_vec() }),
    }
}

/// `τ` with `τ_i = z_i`; convenience for tests and the CLI.
pub fn tau_from_elems(rd: &RootDatum, elems: Vec<CenterElement>) -> Result<TauTuple> {
    TauTuple::new(rd, elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::lifts_to_coboundary;
    use itertools::Itertools;

    fn all_tuples(n: i64, len: usize) -> impl Iterator<Item = Vec<i64>> {
        (0..len).map(|_| 0..n).multi_cartesian_product()
    }

    #[test]
    fn trivial_tau() {
        let rd = RootDatum::parse("B2").unwrap();
        let t = TauTuple::trivial(&rd).unwrap();
        let f = f_from_tau(&rd, &t, None).unwrap();
        assert!(f.eval(&[3, -1], &[1, 1]).is_zero());
        assert!(theta_of_tau(&rd, &t).unwrap().is_zero());
        let u = upsilon(&rd, &t).unwrap();
        assert!(u.trivial && u.coboundary_on_p);
        assert!(iso_equivalent(&rd, &t, &t).unwrap());
        assert!(f_conjugation_check(&rd, &t).unwrap().holds);
    }

    #[test]
    fn a1_shift_identity() {
        let rd = RootDatum::type_a(2).unwrap();
        let t = TauTuple::su_n(&rd, &[1]).unwrap();
        let f = f_from_tau(&rd, &t, None).unwrap();
        for lam in -4..=4 {
            for mu in -4..=4i64 {
                let d = f.eval(&[lam + 2], &[mu]) - f.eval(&[lam], &[mu]);
                assert_eq!(d, CircleValue::new(mu.rem_euclid(2), 2));
                assert_eq!(f.eval(&[lam], &[mu + 2]), f.eval(&[lam], &[mu]));
            }
        }
        let th = theta_of_tau(&rd, &t).unwrap();
        assert!(!th.is_zero());
        assert!(f_conjugation_check(&rd, &t).unwrap().holds);
    }

    #[test]
    fn a2_example() {
        let rd = RootDatum::type_a(3).unwrap();
        let t = TauTuple::su_n(&rd, &[1, 0]).unwrap();
        let th = theta_of_tau(&rd, &t).unwrap();
        assert_eq!(su_n_class_exponent(&rd, &th).unwrap(), 2);
    }

    #[test]
    fn closed_form_small_n() {
        for n in 2..=4usize {
            let rd = RootDatum::type_a(n).unwrap();
            for exps in all_tuples(n as i64, n - 1) {
                let t = TauTuple::su_n(&rd, &exps).unwrap();
                let phi = phi_tau(&rd, &t).unwrap();
                assert!(lifts_to_coboundary(&phi).unwrap());
                let th = theta_of_tau(&rd, &t).unwrap();
                assert_eq!(su_n_class_exponent(&rd, &th).unwrap(), su_n_theta_closed_form(n, &exps), "{exps:?}");
            }
        }
    }

    #[test]
    fn transversal_independence() {
        let rd = RootDatum::type_a(4).unwrap();
        let t = TauTuple::su_n(&rd, &[1, 3, 2]).unwrap();
        let c = rd.center_group().unwrap();
        let reps: Vec<Vec<i64>> = c
            .enumerate()
            .enumerate()
            .map(|(k, e)| {
                let mut w = c.lift(&e).unwrap();
                for (x, a) in w.iter_mut().zip(rd.simple_root(k % 3)) {
                    *x += (k as i64 - 1) * a;
                }
                w
            })
            .collect();
        let a = classify_3cocycle(&phi_tau(&rd, &t).unwrap()).unwrap();
        let b = classify_3cocycle(&phi_tau_with(&rd, &t, Some(reps)).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(matches!(phi_tau_with(&rd, &t, Some(vec![vec![0, 0, 0]; 4])), Err(Error::BadTransversal(_))));
    }

    #[test]
    fn theta_additive_d4() {
        let rd = RootDatum::parse("D4").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut rand_tau = || {
            let coords: Vec<Vec<i64>> = (0..4).map(|_| vec![rng.gen_range(0..2), rng.gen_range(0..2)]).collect();
            TauTuple::from_coords(&rd, &coords).unwrap()
        };
        for _ in 0..6 {
            let (a, b) = (rand_tau(), rand_tau());
            let lhs = theta_of_tau(&rd, &a.mul(&b)).unwrap();
            let rhs = theta_of_tau(&rd, &a).unwrap().add(&theta_of_tau(&rd, &b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn upsilon_type_a() {
        let rd = RootDatum::type_a(3).unwrap();
        // Θ = 0 iff t_1 + 2 t_2 = 0 mod 3
        let t = TauTuple::su_n(&rd, &[1, 1]).unwrap();
        let u = upsilon(&rd, &t).unwrap();
        let at = |i, j| u.antisymmetry.iter().find(|x| x.0 == i && x.1 == j).unwrap().2;
        assert_eq!(at(2, 3), CircleValue::new(-1, 3));
        assert!(!u.trivial);
        assert!(matches!(upsilon(&rd, &TauTuple::su_n(&rd, &[1, 0]).unwrap()), Err(Error::NotInKernel(_))));
        for n in 2..=5usize {
            let rd = RootDatum::type_a(n).unwrap();
            for exps in all_tuples(n as i64, n - 1) {
                if su_n_theta_closed_form(n, &exps) != 0 {
                    continue;
                }
                let t = TauTuple::su_n(&rd, &exps).unwrap();
                let u = upsilon(&rd, &t).unwrap();
                assert_eq!(u.trivial, exps.iter().all(|&x| x == 0), "{exps:?}");
                let g = upsilon_general(&rd, &t).unwrap();
                assert_eq!(g.trivial, u.trivial);
            }
        }
    }

    #[test]
    fn upsilon_routes_agree_on_varpi_basis() {
        let n = 4;
        let rd = RootDatum::type_a(n).unwrap();
        let exps = [2, 1, 0];
        let t = TauTuple::su_n(&rd, &exps).unwrap();
        let f = su_n_character(n, &exps);
        let g = upsilon_general(&rd, &t).unwrap();
        for (i, j, v) in g.antisymmetry {
            let (wi, wj) = (rd.fundamental_weight(i - 1), rd.fundamental_weight(j - 1));
            assert_eq!(v, f(&wi, &wj) - f(&wj, &wi));
        }
    }

    #[test]
    fn flip_is_not_detected() {
        let rd = RootDatum::type_a(3).unwrap();
        let t = TauTuple::su_n(&rd, &[1, 2]).unwrap();
        let flip = TauTuple::su_n(&rd, &[1, 2]).unwrap().inv();
        let flip = TauTuple::new(&rd, flip.elems().iter().rev().cloned().collect()).unwrap();
        assert!(!iso_equivalent(&rd, &t, &flip).unwrap() || t == flip);
    }

    #[test]
    fn corrupted_f_fails() {
        let rd = RootDatum::type_a(3).unwrap();
        let t = TauTuple::su_n(&rd, &[1, 2]).unwrap();
        let r = f_conjugation_check_with(&rd, &t, &|_, _| CircleValue::ZERO).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert!(w.first);
        assert!(!t.get(w.root - 1).pair(&w.mu).is_zero());
    }

    #[test]
    fn product_type_upsilon() {
        let rd = RootDatum::parse("A1xA1").unwrap();
        let t = TauTuple::from_coords(&rd, &[vec![0, 1], vec![1, 0]]).unwrap();
        let th = theta_of_tau(&rd, &t).unwrap();
        if th.is_zero() {
            let u = upsilon(&rd, &t).unwrap();
            assert_eq!(u.basis, "varpi");
        }
    }
}
