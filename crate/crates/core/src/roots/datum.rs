//! Cartan matrices, symmetrizers, weight and root lattices, and simple
//! reflections.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::Deserialize;

use crate::abelian::{FinAbGroup, IntMatrix};
use crate::error::{Error, Result};

/// Simple component of a root datum, e.g. `('A', 3)`.
pub type Component = (char, usize);

/// Root datum given by a Cartan matrix `a_ij = 2(α_i, α_j)/(α_i, α_i)`.
///
/// Weights are integer vectors in the basis of fundamental weights `ϖ_i`;
/// the simple root `α_j` has coordinates `(a_1j, …, a_rj)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RootDatum {
    name: String,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    components: Vec<Component>,
}

impl RootDatum {
    /// Validates a user Cartan matrix and computes the symmetrizer.
    pub fn from_cartan(name: &str, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let r = cartan.len();
        if r == 0 || cartan.iter().any(|row| row.len() != r) {
            return Err(Error::Invalid("Cartan matrix must be square and nonempty".into()));
        }
        for i in 0..r {
            if cartan[i][i] != 2 {
                return Err(Error::Invalid(format!("diagonal entry {} is not 2", i + 1)));
            }
            for j in 0..r {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::Invalid(format!("entries ({}, {}) and ({}, {}) are incompatible", i + 1, j + 1, j + 1, i + 1)));
                }
            }
        }
        let sym = symmetrizer(&cartan)?;
        let m = IntMatrix::from_rows(&cartan);
        if m.determinant() == 0.into() {
            return Err(Error::NonFiniteCenter);
        }
        Ok(RootDatum { name: name.to_string(), cartan, sym, components: Vec::new() })
    }

    /// Built-in simple types `A_n, B_n, C_n, D_n, E_6, E_7, E_8, F_4, G_2`
    /// with Bourbaki numbering.
    pub fn simple(kind: char, rank: usize) -> Result<Self> {
        let gram = gram_matrix(kind, rank)?;
        let cartan = cartan_from_gram(&gram);
        let sym = (0..rank).map(|i| gram[i][i] / 2).collect();
        Ok(RootDatum { name: format!("{kind}{rank}"), cartan, sym, components: vec![(kind, rank)] })
    }

    /// Type `A_{n-1}`, the root datum of `SU(n)`.
    pub fn type_a(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("SU(n) needs n ≥ 2".into()));
        }
        Self::simple('A', n - 1)
    }

    /// Block-diagonal sum.
    pub fn product(parts: &[RootDatum]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invalid("empty product of root data".into()));
        }
        let r: usize = parts.iter().map(|p| p.rank()).sum();
        let mut cartan = vec![vec![0; r]; r];
        let mut sym = Vec::with_capacity(r);
        let mut components = Vec::new();
        let mut off = 0;
        for p in parts {
            for i in 0..p.rank() {
                for j in 0..p.rank() {
                    cartan[off + i][off + j] = p.cartan[i][j];
                }
            }
            sym.extend_from_slice(&p.sym);
            components.extend_from_slice(&p.components);
            off += p.rank();
        }
        let name = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("x");
        Ok(RootDatum { name, cartan, sym, components })
    }

    /// `A3`, `D4`, `A1xA1xA1`, or JSON `{"cartan": [[2, -1], [-1, 2]]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('{') {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct CartanJson {
                cartan: Vec<Vec<i64>>,
                name: Option<String>,
            }
            let j: CartanJson = serde_json::from_str(t).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            return Self::from_cartan(j.name.as_deref().unwrap_or("custom"), j.cartan);
        }
        let mut parts = Vec::new();
        let mut col = 1;
        for piece in t.split(['x', 'X', '×']) {
            let p = piece.trim();
            let err = |msg: &str| Error::Parse { line: 1, column: col, message: msg.to_string() };
            let mut chars = p.chars();
            let kind = chars.next().ok_or_else(|| err("expected a type letter"))?.to_ascii_uppercase();
            let rank: usize = chars.as_str().parse().map_err(|_| err("expected a rank after the type letter"))?;
            parts.push(Self::simple(kind, rank).map_err(|e| err(&e.to_string()))?);
            col += piece.chars().count() + 1;
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Self::product(&parts)
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Simple components; empty for user matrices.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// `d_i = (α_i, α_i)/2`, with short roots of squared length 2.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    /// `(α_i, α_j) = d_i a_ij`.
    pub fn root_pairing(&self, i: usize, j: usize) -> i64 {
        self.sym[i] * self.cartan[i][j]
    }

    /// `(α_i, λ) = d_i λ_i` for a weight in the `ϖ` basis.
    pub fn root_weight_pairing(&self, i: usize, w: &[i64]) -> i64 {
        self.sym[i] * w[i]
    }

    pub fn simple_root(&self, j: usize) -> Vec<i64> {
        (0..self.rank()).map(|i| self.cartan[i][j]).collect()
    }

    pub fn fundamental_weight(&self, i: usize) -> Vec<i64> {
        let mut w = vec![0; self.rank()];
        w[i] = 1;
        w
    }

    /// Columns are the simple roots.
    pub fn root_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.cartan)
    }

    /// `s_i(λ) = λ - ⟨λ, α_i^∨⟩ α_i = λ - λ_i α_i`.
    pub fn reflect(&self, i: usize, w: &[i64]) -> Vec<i64> {
        let a = self.simple_root(i);
        w.iter().zip(&a).map(|(x, y)| x - w[i] * y).collect()
    }

    /// Matrix of `s_i` on `P` in the `ϖ` basis.
    pub fn weyl_generator(&self, i: usize) -> IntMatrix {
        let r = self.rank();
        let cols: Vec<Vec<i64>> = (0..r).map(|k| self.reflect(i, &self.fundamental_weight(k))).collect();
        IntMatrix::from_columns(r, &cols)
    }

    /// `P/Q` with coordinates in its invariant-factor basis.
    pub fn center_group(&self) -> Result<FinAbGroup> {
        FinAbGroup::quotient(self.rank(), &self.root_matrix()).map_err(|e| match e {
            Error::InfiniteQuotient { .. } => Error::NonFiniteCenter,
            e => e,
        })
    }

    /// `Some(n)` for the root datum of `SU(n)` (a single component `A_{n-1}`).
    pub fn su_n(&self) -> Option<usize> {
        match self.components[..] {
            [('A', r)] => Some(r + 1),
            _ => None,
        }
    }
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({}, {:?})", self.name, self.cartan)
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

fn cartan_from_gram(g: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = g.len();
    (0..r).map(|i| (0..r).map(|j| 2 * g[i][j] / g[i][i]).collect()).collect()
}

/// Inner products of simple roots, short roots of squared length 2.
fn gram_matrix(kind: char, r: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::Invalid(format!("no simple type {kind}{r}"));
    let mut g = vec![vec![0i64; r]; r];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match kind {
        'A' if r >= 1 => {
            for i in 0..r {
                g[i][i] = 2;
            }
            for i in 1..r {
                link(&mut g, i, i + 1, -1);
            }
        }
        'B' if r >= 2 => {
            for i in 0..r - 1 {
                g[i][i] = 4;
            }
            g[r - 1][r - 1] = 2;
            for i in 1..r {
                link(&mut g, i, i + 1, -2);
            }
        }
        'C' if r >= 2 => {
            for i in 0..r - 1 {
                g[i][i] = 2;
            }
            g[r - 1][r - 1] = 4;
            for i in 1..r - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, r - 1, r, -2);
        }
        'D' if r >= 3 => {
            for i in 0..r {
                g[i][i] = 2;
            }
            for i in 1..r - 1 {
                link(&mut g, i, i + 1, -1);
            }
            // the last node hangs off r-2
            link(&mut g, r - 2, r, -1);
        }
        'E' if (6..=8).contains(&r) => {
            for i in 0..r {
                g[i][i] = 2;
            }
            link(&mut g, 1, 3, -1);
            link(&mut g, 2, 4, -1);
            for i in 3..r {
                link(&mut g, i, i + 1, -1);
            }
        }
        'F' if r == 4 => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -2);
            link(&mut g, 3, 4, -1);
        }
        'G' if r == 2 => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 1, 2, -3);
        }
        _ => return Err(bad()),
    }
    Ok(g)
}

/// `d_i` with `d_i a_ij = d_j a_ji`, smallest positive integers per connected
/// component.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let r = a.len();
    // d_i as num/den
    let mut d: Vec<Option<(i64, i64)>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        let mut comp = vec![start];
        d[start] = Some((1, 1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let (n, m) = d[i].unwrap();
            for j in 0..r {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let (mut nj, mut mj) = (n * a[i][j], m * a[j][i]);
                if mj < 0 {
                    nj = -nj;
                    mj = -mj;
                }
                let g = nj.gcd(&mj);
                let val = (nj / g, mj / g);
                match d[j] {
                    None => {
                        d[j] = Some(val);
                        comp.push(j);
                        queue.push_back(j);
                    }
                    Some(v) if v != val => {
                        return Err(Error::Invalid("Cartan matrix is not symmetrizable".into()));
                    }
                    _ => {}
                }
            }
        }
        let l = comp.iter().fold(1i64, |acc, &i| acc.lcm(&d[i].unwrap().1));
        let ints: Vec<i64> = comp.iter().map(|&i| d[i].unwrap().0 * (l / d[i].unwrap().1)).collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&i, &x) in comp.iter().zip(&ints) {
            d[i] = Some((x / g, 1));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().0).collect())
}
