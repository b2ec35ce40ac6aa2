//! Classes in `H^3(Γ; T) ≅ ⊕ Z/n_i ⊕ ⊕ Z/(n_i,n_j) ⊕ ⊕ Z/(n_i,n_j,n_k)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};

use super::chain::pair;
use super::cochain::Cochain;
use super::generators::{cycle_theta, generator_phi, Generator};

/// Exponents of a class against the generators `φ_*`, each reduced modulo
/// the generator's order. Every generator is present, including those of
/// order one.
#[derive(Clone, PartialEq, Eq)]
pub struct H3Class {
    group: FinAbGroup,
    exps: BTreeMap<Generator, i64>,
}

impl H3Class {
    pub fn zero(group: &FinAbGroup) -> Self {
        let exps = Generator::all(group).into_iter().map(|g| (g, 0)).collect();
        H3Class { group: group.clone(), exps }
    }

    /// Class with the given exponents; generators not listed get exponent 0.
    pub fn from_exponents<I>(group: &FinAbGroup, exps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Generator, i64)>,
    {
        let mut c = Self::zero(group);
        for (g, e) in exps {
            g.validate(group)?;
            let n = g.order(group);
            *c.exps.get_mut(&g).unwrap() = (c.exps[&g] + e).rem_euclid(n);
        }
        Ok(c)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn get(&self, g: Generator) -> i64 {
        self.exps.get(&g).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Generator, i64)> + '_ {
        self.exps.iter().map(|(&g, &e)| (g, e))
    }

    pub fn is_zero(&self) -> bool {
        self.exps.values().all(|&e| e == 0)
    }

    /// All `e_ijk` vanish.
    pub fn triple_part_is_zero(&self) -> bool {
        self.exps.iter().all(|(g, &e)| !matches!(g, Generator::Triple(..)) || e == 0)
    }

    pub fn add(&self, other: &H3Class) -> Result<H3Class> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Self::from_exponents(&self.group, self.exponents().chain(other.exponents()))
    }

    pub fn scale(&self, k: i64) -> H3Class {
        Self::from_exponents(&self.group, self.exponents().map(|(g, e)| (g, e * k))).unwrap()
    }

    pub fn neg(&self) -> H3Class {
        self.scale(-1)
    }

    /// `∏ φ_*^{e_*}` as a closed-form cocycle.
    pub fn representative(&self) -> Cochain {
        let parts: Vec<Cochain> = self
            .exponents()
            .filter(|&(_, e)| e != 0)
            .map(|(g, e)| generator_phi(&self.group, g).unwrap().scale(e))
            .collect();
        let group = self.group.clone();
        if parts.is_empty() {
            return Cochain::zero(&group, 3);
        }
        Cochain::closed(&group, 3, move |x| parts.iter().map(|p| p.eval_coords(x)).sum())
    }
}

impl fmt::Display for H3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .filter(|(_, &e)| e != 0)
            .map(|(g, e)| format!("e[{g}]={e}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for H3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H3Class({} | {self})", self.group)
    }
}

#[derive(Serialize, Deserialize)]
struct H3ClassJson {
    factors: Vec<i64>,
    e_i: Vec<i64>,
    e_ij: BTreeMap<String, i64>,
    e_ijk: BTreeMap<String, i64>,
}

impl Serialize for H3Class {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut j = H3ClassJson {
            factors: self.group.factors().to_vec(),
            e_i: Vec::new(),
            e_ij: BTreeMap::new(),
            e_ijk: BTreeMap::new(),
        };
        for (g, e) in self.exponents() {
            match g {
                Generator::Single(_) => j.e_i.push(e),
                Generator::Pair(..) => {
                    j.e_ij.insert(g.to_string(), e);
                }
                Generator::Triple(..) => {
                    j.e_ijk.insert(g.to_string(), e);
                }
            }
        }
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for H3Class {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = H3ClassJson::deserialize(d)?;
        let group = FinAbGroup::new(&j.factors).map_err(D::Error::custom)?;
        if j.e_i.len() != group.ngens() {
            return Err(D::Error::custom("e_i must have one entry per factor"));
        }
        let parse = |key: &str| -> std::result::Result<Vec<usize>, D::Error> {
            key.split(',')
                .map(|t| t.trim().parse::<usize>().ok().and_then(|x| x.checked_sub(1)))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| D::Error::custom(format!("bad index key {key:?}")))
        };
        let mut exps: Vec<(Generator, i64)> =
            j.e_i.iter().enumerate().map(|(i, &e)| (Generator::Single(i), e)).collect();
        for (k, &e) in &j.e_ij {
            match parse(k)?[..] {
                [a, b] => exps.push((Generator::Pair(a, b), e)),
                _ => return Err(D::Error::custom(format!("bad pair key {k:?}"))),
            }
        }
        for (k, &e) in &j.e_ijk {
            match parse(k)?[..] {
                [a, b, c] => exps.push((Generator::Triple(a, b, c), e)),
                _ => return Err(D::Error::custom(format!("bad triple key {k:?}"))),
            }
        }
        H3Class::from_exponents(&group, exps).map_err(D::Error::custom)
    }
}

fn require_cocycle(phi: &Cochain) -> Result<()> {
    if phi.degree() != 3 {
        return Err(Error::Mismatch(format!("expected a 3-cochain, got degree {}", phi.degree())));
    }
    let r = phi.check_cocycle();
    if let Some((w, v)) = r.witness {
        let coords: Vec<&[i64]> = w.iter().map(|g| g.coords()).collect();
        return Err(Error::NotACocycle { witness: format!("∂φ{coords:?} = {v}") });
    }
    Ok(())
}

/// Class of a 3-cocycle, read off from the pairings with the dual cycles.
pub fn classify_3cocycle(phi: &Cochain) -> Result<H3Class> {
    require_cocycle(phi)?;
    classify_unchecked(phi)
}

/// As [`classify_3cocycle`] but skips the cocycle test. The pairings still
/// reject values of the wrong order.
pub fn classify_unchecked(phi: &Cochain) -> Result<H3Class> {
    let g = phi.group();
    let mut exps = Vec::new();
    for gen in Generator::all(g) {
        let n = gen.order(g);
        let v = pair(phi, &cycle_theta(g, gen)?)?;
        let e = v.as_power_of_zeta(n).ok_or_else(|| Error::NotACocycle {
            witness: format!("pairing with θ[{gen}] is {v}, not an {n}-th root of unity"),
        })?;
        exps.push((gen, e));
    }
    H3Class::from_exponents(g, exps)
}

/// Whether the cocycle lifts to a coboundary on a free cover, i.e. pairs
/// trivially with every `θ_ijk`.
pub fn lifts_to_coboundary(phi: &Cochain) -> Result<bool> {
    require_cocycle(phi)?;
    let g = phi.group();
    for gen in Generator::all(g) {
        if let Generator::Triple(..) = gen {
            if !pair(phi, &cycle_theta(g, gen)?)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::CircleValue;

    #[test]
    fn dual_basis() {
        let g = FinAbGroup::new(&[4, 4]).unwrap();
        for gen in Generator::all(&g) {
            let c = classify_3cocycle(&generator_phi(&g, gen).unwrap()).unwrap();
            assert_eq!(c, H3Class::from_exponents(&g, [(gen, 1)]).unwrap());
        }
    }

    #[test]
    fn mixed_product() {
        let g = FinAbGroup::new(&[4, 4]).unwrap();
        let want = H3Class::from_exponents(&g, [(Generator::Single(0), 1), (Generator::Pair(0, 1), 2)]).unwrap();
        let c = classify_3cocycle(&want.representative()).unwrap();
        assert_eq!(c, want);
        assert_eq!(c.get(Generator::Single(0)), 1);
        assert_eq!(c.get(Generator::Pair(0, 1)), 2);
    }

    #[test]
    fn non_cocycle_rejected() {
        let g = FinAbGroup::cyclic(3);
        let bad = Cochain::closed(&g, 3, |x| CircleValue::new(x[0][0] * x[0][0] * x[1][0], 3));
        assert!(matches!(classify_3cocycle(&bad), Err(Error::NotACocycle { .. })));
    }

    #[test]
    fn lifting() {
        let e = FinAbGroup::new(&[2, 2, 2]).unwrap();
        assert!(!lifts_to_coboundary(&generator_phi(&e, Generator::Triple(0, 1, 2)).unwrap()).unwrap());
        assert!(lifts_to_coboundary(&generator_phi(&e, Generator::Single(1)).unwrap()).unwrap());
        let z = FinAbGroup::cyclic(6);
        assert!(lifts_to_coboundary(&generator_phi(&z, Generator::Single(0)).unwrap().scale(5)).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let g = FinAbGroup::new(&[2, 4, 6]).unwrap();
        let c = H3Class::from_exponents(
            &g,
            [(Generator::Single(2), 5), (Generator::Pair(1, 2), 1), (Generator::Triple(0, 1, 2), 1)],
        )
        .unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"e_ijk\":{\"1,2,3\":1}"), "{s}");
        let back: H3Class = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
