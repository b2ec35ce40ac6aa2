//! The explicit 3-cocycles `φ_i, φ_ij, φ_ijk` generating `H^3(Γ; T)` and the
//! dual 3-cycles `θ_i, θ_ij, θ_ijk`.

use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::abelian::{CircleValue, FinAbGroup, GroupElement};
use crate::error::{Error, Result};

use super::chain::BarChain;
use super::cochain::Cochain;

/// Carry bit of `a + b` in base `n`: `⌊(a+b)/n⌋ - ⌊a/n⌋ - ⌊b/n⌋`.
pub fn omega(n: i64, a: i64, b: i64) -> i64 {
    Integer::div_floor(&(a + b), &n) - Integer::div_floor(&a, &n) - Integer::div_floor(&b, &n)
}

/// Index of a generator of `H^3`. Indices are 0-based; they are printed 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Single(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

impl Generator {
    /// Cyclic order of the generator in `H^3(Γ; T)`.
    pub fn order(&self, g: &FinAbGroup) -> i64 {
        let f = g.factors();
        match *self {
            Generator::Single(i) => f[i],
            Generator::Pair(i, j) => f[i].gcd(&f[j]),
            Generator::Triple(i, j, k) => f[i].gcd(&f[j]).gcd(&f[k]),
        }
    }

    pub fn validate(&self, g: &FinAbGroup) -> Result<()> {
        let m = g.ngens();
        let ok = match *self {
            Generator::Single(i) => i < m,
            Generator::Pair(i, j) => i < j && j < m,
            Generator::Triple(i, j, k) => i < j && j < k && k < m,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadIndex(format!("{self} on a group with {m} factors")))
        }
    }

    /// Every generator in the order singles, pairs, triples.
    pub fn all(g: &FinAbGroup) -> Vec<Generator> {
        let m = g.ngens();
        let mut out: Vec<Generator> = (0..m).map(Generator::Single).collect();
        out.extend((0..m).tuple_combinations().map(|(i, j)| Generator::Pair(i, j)));
        out.extend((0..m).tuple_combinations().map(|(i, j, k)| Generator::Triple(i, j, k)));
        out
    }

    /// Generators of nontrivial order.
    pub fn nontrivial(g: &FinAbGroup) -> Vec<Generator> {
        Self::all(g).into_iter().filter(|x| x.order(g) > 1).collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Single(i) => write!(f, "{}", i + 1),
            Generator::Pair(i, j) => write!(f, "{},{}", i + 1, j + 1),
            Generator::Triple(i, j, k) => write!(f, "{},{},{}", i + 1, j + 1, k + 1),
        }
    }
}

/// `φ_i(a,b,c) = χ_{n_i}(ω_{n_i}(a_i,b_i) c_i)`,
/// `φ_ij(a,b,c) = χ_{n_j}(ω_{n_i}(a_i,b_i) c_j)`,
/// `φ_ijk(a,b,c) = χ_{(n_i,n_j,n_k)}(a_i b_j c_k)`.
pub fn generator_phi(g: &FinAbGroup, which: Generator) -> Result<Cochain> {
    which.validate(g)?;
    let f = g.factors().to_vec();
    Ok(match which {
        Generator::Single(i) => {
            let n = f[i];
            Cochain::closed(g, 3, move |x| CircleValue::new(omega(n, x[0][i], x[1][i]) * x[2][i], n))
        }
        Generator::Pair(i, j) => {
            let (ni, nj) = (f[i], f[j]);
            Cochain::closed(g, 3, move |x| CircleValue::new(omega(ni, x[0][i], x[1][i]) * x[2][j], nj))
        }
        Generator::Triple(i, j, k) => {
            let d = which.order(g);
            Cochain::closed(g, 3, move |x| CircleValue::new((x[0][i] * x[1][j] % d) * x[2][k], d))
        }
    })
}

/// The dual cycles:
/// `θ_i = Σ_a [u_i|a u_i|u_i]`;
/// `θ_ij = (n_j/g) Σ_a ([a u_i|u_i|u_j] - [a u_i|u_j|u_i] + [u_j|a u_i|u_i])
///        + (n_i/g) Σ_b ([u_i|b u_j|u_j] - [b u_j|u_i|u_j] + [b u_j|u_j|u_i])` with `g = (n_i, n_j)`;
/// `θ_ijk = Σ_{σ ∈ S_3} sgn(σ) [u_σ(i)|u_σ(j)|u_σ(k)]`.
pub fn cycle_theta(g: &FinAbGroup, which: Generator) -> Result<BarChain> {
    which.validate(g)?;
    let u = |i: usize| g.generator(i);
    let mul = |i: usize, a: i64| g.scale(&g.generator(i), a);
    let mut terms: Vec<(i64, Vec<GroupElement>)> = Vec::new();
    match which {
        Generator::Single(i) => {
            for a in 0..g.factors()[i] {
                terms.push((1, vec![u(i), mul(i, a), u(i)]));
            }
        }
        Generator::Pair(i, j) => {
            let (ni, nj) = (g.factors()[i], g.factors()[j]);
            let d = ni.gcd(&nj);
            let (ci, cj) = (nj / d, ni / d);
            for a in 0..ni {
                terms.push((ci, vec![mul(i, a), u(i), u(j)]));
                terms.push((-ci, vec![mul(i, a), u(j), u(i)]));
                terms.push((ci, vec![u(j), mul(i, a), u(i)]));
            }
            for b in 0..nj {
                terms.push((cj, vec![u(i), mul(j, b), u(j)]));
                terms.push((-cj, vec![mul(j, b), u(i), u(j)]));
                terms.push((cj, vec![mul(j, b), u(j), u(i)]));
            }
        }
        Generator::Triple(i, j, k) => {
            for p in [i, j, k].into_iter().permutations(3) {
                let sign = permutation_sign(&p);
                terms.push((sign, p.iter().map(|&x| u(x)).collect()));
            }
        }
    }
    BarChain::from_terms(g, 3, terms)
}

fn permutation_sign(p: &[usize]) -> i64 {
    let inv = (0..p.len()).tuple_combinations().filter(|&(a, b)| p[a] > p[b]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
