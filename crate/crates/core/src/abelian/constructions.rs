//! Tensor products, Tor and exterior powers of finite abelian groups.
//!
//! All three are computed factor by factor from the cyclic decompositions, and
//! each result remembers which factor pair (or triple) every output
//! coordinate comes from.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::group::{FinAbGroup, GroupElement};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TensorProduct {
    group: FinAbGroup,
    // (i, j) for each coordinate of `group`
    pairs: Vec<(usize, usize)>,
    left: FinAbGroup,
    right: FinAbGroup,
}

impl TensorProduct {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Source factor pair of each coordinate.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Coordinates of `a ⊗ b`.
    pub fn elementary(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let c: Vec<i64> = self.pairs.iter().map(|&(i, j)| a.coords()[i] * b.coords()[j]).collect();
        self.group.element(&c).unwrap()
    }

    pub fn left(&self) -> &FinAbGroup {
        &self.left
    }

    pub fn right(&self) -> &FinAbGroup {
        &self.right
    }
}

fn pairwise(a: &FinAbGroup, b: &FinAbGroup) -> (FinAbGroup, Vec<(usize, usize)>) {
    let mut factors = Vec::new();
    let mut pairs = Vec::new();
    for (i, &n) in a.factors().iter().enumerate() {
        for (j, &m) in b.factors().iter().enumerate() {
            let g = n.gcd(&m);
            if g > 1 {
                factors.push(g);
                pairs.push((i, j));
            }
        }
    }
    (FinAbGroup::new(&factors).unwrap(), pairs)
}

/// `Γ ⊗ Δ = ⊕_{i,j} Z/(n_i, m_j)`.
pub fn tensor_product(a: &FinAbGroup, b: &FinAbGroup) -> TensorProduct {
    let (group, pairs) = pairwise(a, b);
    TensorProduct { group, pairs, left: a.clone(), right: b.clone() }
}

/// An element `γ ⊗ δ` of `Γ_0 ⊗ Δ`, where `γ` is an integer vector in the
/// relation subgroup `Γ_0 ⊆ Z^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTensor {
    pub lattice: Vec<i64>,
    pub element: GroupElement,
}

#[derive(Clone, Debug)]
pub struct TorGroup {
    group: FinAbGroup,
    pairs: Vec<(usize, usize)>,
    left: FinAbGroup,
    right: FinAbGroup,
}

impl TorGroup {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Generators of `ker(Γ_0 ⊗ Δ → Z^rank ⊗ Δ)`, where `Γ = Z^rank / Γ_0` is the
    /// presentation attached to the left group.
    ///
    /// With `U M V = D`, the columns `b_l = (M V)_l = d_l (U^{-1})_l` form a
    /// basis of `Γ_0`, and `b_l ⊗ δ` maps to `(U^{-1})_l ⊗ d_l δ`. So the kernel
    /// is `⊕_l Δ[d_l]`, generated by `b_l ⊗ (m_j / (d_l, m_j)) v_j`.
    pub fn kernel_generators(&self) -> Result<Vec<LatticeTensor>> {
        let p = self.left.presentation()?;
        let s = p.smith();
        let mv = p.relations() * &s.v;
        let mut out = Vec::new();
        for (l, d) in s.diagonal().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let d = d.to_i64().ok_or_else(|| Error::Invalid("invariant factor too large".into()))?;
            let b: Vec<i64> = (0..p.rank()).map(|i| mv.get_i64(i, l)).collect();
            for (j, &m) in self.right.factors().iter().enumerate() {
                let g = d.gcd(&m);
                if g == 1 {
                    continue;
                }
                let v = self.right.scale(&self.right.generator(j), m / g);
                out.push(LatticeTensor { lattice: b.clone(), element: v });
            }
        }
        Ok(out)
    }
}

/// `Tor_1(Γ, Δ)`, which for finite groups has the same factors as `Γ ⊗ Δ`.
pub fn tor_group(a: &FinAbGroup, b: &FinAbGroup) -> TorGroup {
    let (group, pairs) = pairwise(a, b);
    TorGroup { group, pairs, left: a.clone(), right: b.clone() }
}

#[derive(Clone, Debug)]
pub struct ExteriorPower {
    group: FinAbGroup,
    degree: usize,
    tuples: Vec<Vec<usize>>,
}

impl ExteriorPower {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Increasing index tuple behind each coordinate.
    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Coordinates of `x_1 ∧ ... ∧ x_n`: the minors of the coordinate matrix.
    pub fn wedge(&self, xs: &[GroupElement]) -> Result<GroupElement> {
        if xs.len() != self.degree {
            return Err(Error::Mismatch(format!(
                "{} arguments for a degree {} wedge",
                xs.len(),
                self.degree
            )));
        }
        let c: Vec<i64> = self
            .tuples
            .iter()
            .map(|t| minor(xs, t))
            .collect();
        self.group.element(&c)
    }
}

fn minor(xs: &[GroupElement], t: &[usize]) -> i64 {
    let e = |r: usize, c: usize| xs[r].coords()[t[c]] as i128;
    let v = match t.len() {
        2 => e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0),
        3 => {
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
                - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        }
        _ => unreachable!(),
    };
    v as i64
}

/// `⋀^n Γ` for `n ∈ {2, 3}`: `⊕_{i<j} Z/(n_i,n_j)` and `⊕_{i<j<k} Z/(n_i,n_j,n_k)`.
pub fn exterior_power(g: &FinAbGroup, n: usize) -> Result<ExteriorPower> {
    if n != 2 && n != 3 {
        return Err(Error::UnsupportedDegree(n));
    }
    let f = g.factors();
    let m = f.len();
    let mut factors = Vec::new();
    let mut tuples = Vec::new();
    let mut push = |t: Vec<usize>| {
        let d = t.iter().fold(0i64, |acc, &i| acc.gcd(&f[i]));
        if d > 1 {
            factors.push(d);
            tuples.push(t);
        }
    };
    for i in 0..m {
        for j in i + 1..m {
            if n == 2 {
                push(vec![i, j]);
            } else {
                for k in j + 1..m {
                    push(vec![i, j, k]);
                }
            }
        }
    }
    Ok(ExteriorPower { group: FinAbGroup::new(&factors).unwrap(), degree: n, tuples })
}
