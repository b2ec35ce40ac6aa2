//! Integer chains `Σ c · [γ_1|…|γ_n]` of the bar complex, with coefficients
//! in `Z` (the group action on the first face is trivial after `1 ⊗ -`).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::abelian::{CircleValue, FinAbGroup, GroupElement};
use crate::error::{Error, Result};

use super::cochain::Cochain;

#[derive(Clone, PartialEq, Eq)]
pub struct BarChain {
    group: FinAbGroup,
    degree: usize,
    terms: BTreeMap<Vec<GroupElement>, i64>,
}

impl BarChain {
    pub fn zero(group: &FinAbGroup, degree: usize) -> Self {
        BarChain { group: group.clone(), degree, terms: BTreeMap::new() }
    }

    /// Builds a chain from `(coefficient, simplex)` pairs, merging repeats.
    pub fn from_terms<I>(group: &FinAbGroup, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Vec<GroupElement>)>,
    {
        let mut c = Self::zero(group, degree);
        for (k, s) in terms {
            if s.len() != degree {
                return Err(Error::Mismatch(format!("simplex of length {} in a degree {degree} chain", s.len())));
            }
            if s.iter().any(|g| g.len() != group.ngens()) {
                return Err(Error::GroupMismatch);
            }
            c.add_term(k, s);
        }
        Ok(c)
    }

    fn add_term(&mut self, k: i64, s: Vec<GroupElement>) {
        if k == 0 {
            return;
        }
        match self.terms.entry(s) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(k);
            }
        }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<GroupElement>, i64)> {
        self.terms.iter().map(|(s, &k)| (s, k))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &BarChain) -> Result<BarChain> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::Mismatch(format!("degrees {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (s, k) in other.terms() {
            out.add_term(k, s.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> BarChain {
        let mut out = Self::zero(&self.group, self.degree);
        for (s, c) in self.terms() {
            out.add_term(c * k, s.clone());
        }
        out
    }

    /// `d[γ_1|…|γ_n] = [γ_2|…|γ_n] + Σ_{i=1}^{n-1} (-1)^i [γ_1|…|γ_iγ_{i+1}|…|γ_n] + (-1)^n [γ_1|…|γ_{n-1}]`.
    pub fn boundary(&self) -> Result<BarChain> {
        let n = self.degree;
        if n == 0 {
            return Err(Error::Invalid("boundary of a degree 0 chain".into()));
        }
        let g = &self.group;
        let mut out = Self::zero(g, n - 1);
        for (s, k) in self.terms() {
            out.add_term(k, s[1..].to_vec());
            for i in 0..n - 1 {
                let mut face = s[..i].to_vec();
                face.push(g.add(&s[i], &s[i + 1]));
                face.extend_from_slice(&s[i + 2..]);
                let sign = if i % 2 == 0 { -1 } else { 1 };
                out.add_term(sign * k, face);
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            out.add_term(sign * k, s[..n - 1].to_vec());
        }
        Ok(out)
    }
}

/// `d` on chains.
pub fn chain_boundary(c: &BarChain) -> Result<BarChain> {
    c.boundary()
}

/// `⟨φ, c⟩ = Σ k · φ(simplex)`.
pub fn pair(phi: &Cochain, c: &BarChain) -> Result<CircleValue> {
    if phi.group() != c.group() {
        return Err(Error::GroupMismatch);
    }
    if phi.degree() != c.degree() {
        return Err(Error::Mismatch(format!(
            "pairing a degree {} cochain with a degree {} chain",
            phi.degree(),
            c.degree()
        )));
    }
    Ok(c.terms()
        .map(|(s, k)| {
            let refs: Vec<&GroupElement> = s.iter().collect();
            phi.eval(&refs).pow(k)
        })
        .sum())
}

impl fmt::Debug for BarChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, k)| {
                let cells: Vec<String> = s.iter().map(|g| format!("{:?}", g.coords())).collect();
                format!("{k}[{}]", cells.join("|"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_and_two_boundaries() {
        let g = FinAbGroup::new(&[5]).unwrap();
        let a = g.element(&[2]).unwrap();
        let b = g.element(&[4]).unwrap();
        let c1 = BarChain::from_terms(&g, 1, [(1, vec![a.clone()])]).unwrap();
        assert!(c1.boundary().unwrap().is_zero());
        let c2 = BarChain::from_terms(&g, 2, [(1, vec![a.clone(), b.clone()])]).unwrap();
        let expected = BarChain::from_terms(
            &g,
            1,
            [(1, vec![b.clone()]), (-1, vec![g.add(&a, &b)]), (1, vec![a.clone()])],
        )
        .unwrap();
        assert_eq!(c2.boundary().unwrap(), expected);
    }

    #[test]
    fn terms_merge_and_cancel() {
        let g = FinAbGroup::new(&[2]).unwrap();
        let u = g.generator(0);
        let c = BarChain::from_terms(&g, 1, [(2, vec![u.clone()]), (-2, vec![u.clone()])]).unwrap();
        assert!(c.is_zero());
    }
}
