//! Finite data of the primitive spectrum of `C(SU_q^τ(n))`, `q ≠ 1`: the maps
//! `ψ̃` and `θ_w`, and per Weyl element the image and stabilizer subgroups.
//!
//! Points of the torus are `n` circle values summing to zero. Weyl elements
//! are 1-based image vectors `w = [w(1), …, w(n)]`, acting on points by
//! `(w·t)_k = t_{w^{-1}(k)}`, so that `w^{-1}(t)_k = t_{w(k)}`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::CircleValue;
use crate::error::{Error, Result};

pub const SPECTRUM_MAX_N: usize = 4;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct TorusPoint(Vec<CircleValue>);

impl TorusPoint {
    pub fn new(coords: Vec<CircleValue>) -> Result<Self> {
        if coords.iter().copied().sum::<CircleValue>().is_zero() {
            Ok(TorusPoint(coords))
        } else {
            Err(Error::Invalid(format!("{coords:?} does not have determinant one")))
        }
    }

    pub fn identity(n: usize) -> Self {
        TorusPoint(vec![CircleValue::ZERO; n])
    }

    /// `(x, …, x)`.
    pub fn scalar(n: usize, x: CircleValue) -> Self {
        TorusPoint(vec![x; n])
    }

    pub fn coords(&self) -> &[CircleValue] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, other: &TorusPoint) -> TorusPoint {
        TorusPoint(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn inv(&self) -> TorusPoint {
        TorusPoint(self.0.iter().map(|&a| -a).collect())
    }

    /// `w^{-1}(t)`.
    pub fn act_inverse(&self, w: &[usize]) -> TorusPoint {
        TorusPoint(w.iter().map(|&k| self.0[k - 1]).collect())
    }

    /// `⟨t, α_i⟩ = t_i − t_{i+1}`, 1-based `i`.
    pub fn root_value(&self, i: usize) -> CircleValue {
        self.0[i - 1] - self.0[i]
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|c| c.to_string()).join(", "))
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `T_τ ⊆ μ_n` for `τ_p = ζ_n^{t_p}`, with its dual. `T_τ` is cyclic,
/// generated by `ζ_n^g`, `g = gcd(t, n)`; the character `χ_a` sends
/// `ζ_n^g` to `ζ_m^a`, `m = n/g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSubgroupDual {
    n: usize,
    t: Vec<i64>,
    g: i64,
}

impl TauSubgroupDual {
    pub fn new(n: usize, t: &[i64]) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
        }
        if t.len() != n - 1 {
            return Err(Error::Mismatch(format!("{} τ exponents for n = {n}", t.len())));
        }
        let nn = n as i64;
        let t: Vec<i64> = t.iter().map(|x| x.rem_euclid(nn)).collect();
        let g = t.iter().fold(nn, |acc, &x| acc.gcd(&x));
        Ok(TauSubgroupDual { n, t, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> &[i64] {
        &self.t
    }

    /// `|T_τ| = |T̂_τ|`.
    pub fn order(&self) -> usize {
        (self.n as i64 / self.g) as usize
    }

    /// `T_τ` as points `(ζ, …, ζ)` of the torus.
    pub fn elements(&self) -> Vec<TorusPoint> {
        (0..self.order() as i64).map(|k| TorusPoint::scalar(self.n, CircleValue::new(k * self.g, self.n as i64))).collect()
    }

    pub fn contains(&self, p: &TorusPoint) -> bool {
        let c = p.coords();
        c.iter().all(|&x| x == c[0]) && c[0].as_power_of_zeta(self.n as i64).is_some_and(|e| e % self.g == 0)
    }

    /// `χ_a(τ_p)`, 1-based `p`.
    pub fn chi(&self, a: usize, p: usize) -> CircleValue {
        CircleValue::new(a as i64 * (self.t[p - 1] / self.g), self.order() as i64)
    }

    /// `a` with `χ_a = χ_b χ_c`.
    pub fn chi_mul(&self, b: usize, c: usize) -> usize {
        (b + c) % self.order()
    }
}

/// `ψ̃(χ_a) = (z, z χ(τ_1)^{-1}, …, z χ(τ_1⋯τ_{n−1})^{-1})` with
/// `z^n = ∏ χ(τ_i)^{-i}`; `branch` picks `z` among the `n` roots, 0 being the
/// one of smallest nonnegative argument.
pub fn psi_tilde(dual: &TauSubgroupDual, a: usize, branch: usize) -> TorusPoint {
    let n = dual.n;
    let x: Vec<CircleValue> = (1..n).map(|p| dual.chi(a, p)).collect();
    let zn: CircleValue = x.iter().enumerate().map(|(i, &xi)| -xi.pow(i as i64 + 1)).sum();
    let z = zn.principal_root(n as i64) + CircleValue::new(branch as i64, n as i64);
    let mut coords = vec![z];
    let mut acc = z;
    for &xi in &x {
        acc = acc - xi;
        coords.push(acc);
    }
    TorusPoint::new(coords).expect("ψ̃ lands in the maximal torus")
}

/// `θ_w(χ) = w^{-1}(ψ̃(χ)) ψ̃(χ)^{-1}`.
pub fn theta_w(dual: &TauSubgroupDual, w: &[usize], a: usize, branch: usize) -> TorusPoint {
    let p = psi_tilde(dual, a, branch);
    p.act_inverse(w).mul(&p.inv())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stabilizer {
    /// `|θ_w^{-1}(T_τ)|`, which is also the order of its dual.
    pub order: usize,
    /// Generators as character labels `a` of `χ_a`.
    pub generators: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub w: Vec<usize>,
    /// `θ_w(T̂_τ) ⊆ T`.
    pub image: Vec<TorusPoint>,
    pub stabilizer: Stabilizer,
    /// `|ker θ_w|`.
    pub kernel_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub tau: Vec<i64>,
    pub q: &'static str,
    /// `|T_τ| = |T̂_τ|`.
    pub tau_group_order: usize,
    pub t_tau: Vec<TorusPoint>,
    pub rows: Vec<SpectrumRow>,
}

/// All of `S_n` as 1-based image vectors, in lexicographic order.
pub fn weyl_group(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

/// Cyclic subgroup of `Z/m` given by its elements; returns the generator.
fn cyclic_generator(elems: &[usize], m: usize) -> Vec<usize> {
    let g = elems.iter().fold(m, |acc, &a| acc.gcd(&a));
    if g == m {
        vec![]
    } else {
        vec![g]
    }
}

pub fn spectrum_report(n: usize, tau: &[i64]) -> Result<SpectrumReport> {
    if !(2..=SPECTRUM_MAX_N).contains(&n) {
        return Err(Error::Invalid(format!("spectrum tables need 2 ≤ n ≤ {SPECTRUM_MAX_N}, got {n}")));
    }
    let dual = TauSubgroupDual::new(n, tau)?;
    let m = dual.order();
    let rows = weyl_group(n)
        .into_par_iter()
        .map(|w| {
            let values: Vec<TorusPoint> = (0..m).map(|a| theta_w(&dual, &w, a, 0)).collect();
            let image: BTreeSet<TorusPoint> = values.iter().cloned().collect();
            let stab: Vec<usize> = (0..m).filter(|&a| dual.contains(&values[a])).collect();
            let kernel_order = values.iter().filter(|p| p.is_identity()).count();
            SpectrumRow {
                w,
                image: image.into_iter().collect(),
                stabilizer: Stabilizer { order: stab.len(), generators: cyclic_generator(&stab, m) },
                kernel_order,
            }
        })
        .collect();
    Ok(SpectrumReport { n, tau: dual.tau().to_vec(), q: "q ≠ 1", tau_group_order: m, t_tau: dual.elements(), rows })
}

impl SpectrumReport {
    pub fn to_text(&self) -> String {
        let mut out = vec![
            format!("primitive spectrum data, SU(n) with n = {}, τ = {:?}, {}", self.n, self.tau, self.q),
            format!("|T_τ| = |T̂_τ| = {}", self.tau_group_order),
        ];
        for r in &self.rows {
            let gens = r.stabilizer.generators.iter().map(|a| format!("χ_{a}")).join(", ");
            out.push(format!(
                "w = {:?}: image {{{}}}, stabilizer of order {} generated by {{{}}}",
                r.w,
                r.image.iter().map(|p| p.to_string()).join(", "),
                r.stabilizer.order,
                gens
            ));
        }
        out.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(a: i64, b: i64) -> CircleValue {
        CircleValue::new(a, b)
    }

    #[test]
    fn psi_examples() {
        let d = TauSubgroupDual::new(2, &[1]).unwrap();
        assert_eq!(d.order(), 2);
        assert!(psi_tilde(&d, 0, 0).is_identity());
        assert_eq!(psi_tilde(&d, 1, 0).coords(), &[cv(1, 4), cv(3, 4)]);
        let shifted = psi_tilde(&d, 1, 1).mul(&psi_tilde(&d, 1, 0).inv());
        assert_eq!(shifted, TorusPoint::scalar(2, cv(1, 2)));
    }

    #[test]
    fn theta_examples() {
        let d = TauSubgroupDual::new(2, &[1]).unwrap();
        assert!(theta_w(&d, &[1, 2], 1, 0).is_identity());
        assert_eq!(theta_w(&d, &[2, 1], 1, 0), TorusPoint::scalar(2, cv(1, 2)));
        assert_eq!(theta_w(&d, &[2, 1], 1, 1), TorusPoint::scalar(2, cv(1, 2)));
    }

    #[test]
    fn small_reports() {
        let r = spectrum_report(2, &[0]).unwrap();
        assert_eq!(r.tau_group_order, 1);
        assert!(r.rows.iter().all(|row| row.stabilizer.order == 1 && row.image.len() == 1));
        let r = spectrum_report(2, &[1]).unwrap();
        for row in &r.rows {
            assert_eq!(row.stabilizer.order, 2);
            assert_eq!(row.stabilizer.generators, vec![1]);
        }
        let r = spectrum_report(3, &[1, 0]).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert_eq!(r.tau_group_order, 3);
        assert!(spectrum_report(5, &[0; 4]).is_err());
    }

    #[test]
    fn subgroup_orders() {
        assert_eq!(TauSubgroupDual::new(4, &[2, 0, 2]).unwrap().order(), 2);
        assert_eq!(TauSubgroupDual::new(4, &[2, 1, 0]).unwrap().order(), 4);
        assert_eq!(TauSubgroupDual::new(4, &[0, 0, 0]).unwrap().order(), 1);
        assert!(TauSubgroupDual::new(4, &[0, 0]).is_err());
    }

    #[test]
    fn bad_point() {
        assert!(TorusPoint::new(vec![cv(1, 2), cv(0, 1)]).is_err());
    }
}
