//! Elements of the center `Z(G)`, as characters of `P/Q`, and tuples of them.

use std::fmt;

use serde_json::Value;

use crate::abelian::{CircleValue, FinAbGroup, GroupElement};
use crate::error::{Error, Result};

use super::datum::RootDatum;

/// `|·|: P → Z` for `SU(n)`, with `L_1 ↦ n-1` and `L_i ↦ -1` otherwise; on
/// the `ϖ` basis `|ϖ_k| = n - k`.
pub fn abs_hom(n: usize, mu: &[i64]) -> i64 {
    assert_eq!(mu.len(), n - 1, "weight of the wrong rank for SU({n})");
    mu.iter().enumerate().map(|(k, &a)| a * (n - 1 - k) as i64).sum()
}

/// The weight `L_i` of `SU(n)` (1-based `i`) in the `ϖ` basis:
/// `L_1 = ϖ_1`, `L_i = ϖ_i - ϖ_{i-1}`, `L_n = -ϖ_{n-1}`.
pub fn weight_l(n: usize, i: usize) -> Vec<i64> {
    assert!((1..=n).contains(&i));
    let mut w = vec![0; n - 1];
    if i < n {
        w[i - 1] += 1;
    }
    if i > 1 {
        w[i - 2] -= 1;
    }
    w
}

/// A character of `P/Q`, stored by its values `c_k / n_k` on the generators
/// of the center group.
#[derive(Clone, PartialEq, Eq)]
pub struct CenterElement {
    center: FinAbGroup,
    chi: GroupElement,
}

impl CenterElement {
    pub fn new(center: &FinAbGroup, coords: &[i64]) -> Result<Self> {
        Ok(CenterElement { center: center.clone(), chi: center.element(coords)? })
    }

    pub fn identity(center: &FinAbGroup) -> Self {
        CenterElement { center: center.clone(), chi: center.zero() }
    }

    /// From a homomorphism `P → T` given on weights; checked to vanish on
    /// the simple roots and to agree with the result on the `ϖ` basis.
    pub fn from_weight_character<F>(rd: &RootDatum, f: F) -> Result<Self>
    where
        F: Fn(&[i64]) -> CircleValue,
    {
        let center = rd.center_group()?;
        for j in 0..rd.rank() {
            let v = f(&rd.simple_root(j));
            if !v.is_zero() {
                return Err(Error::NotACharacter(format!("value {v} on the simple root {}", j + 1)));
            }
        }
        let p = center.presentation()?;
        let mut coords = Vec::with_capacity(center.ngens());
        for (k, &nk) in center.factors().iter().enumerate() {
            let v = f(&p.lift_generator(k));
            if nk % v.denom() != 0 {
                return Err(Error::NotACharacter(format!("value {v} on a generator of order {nk}")));
            }
            coords.push(v.numer() * (nk / v.denom()));
        }
        let z = CenterElement { chi: center.element(&coords)?, center };
        for i in 0..rd.rank() {
            let w = rd.fundamental_weight(i);
            if z.pair(&w) != f(&w) {
                return Err(Error::NotACharacter(format!("not additive on the fundamental weight {}", i + 1)));
            }
        }
        Ok(z)
    }

    /// `ζ_n^t ∈ μ_n ≅ Z(SU(n))`, pairing as `⟨ζ^t, μ⟩ = ζ^{-t|μ|}`.
    pub fn su_n(rd: &RootDatum, t: i64) -> Result<Self> {
        let n = rd.su_n().ok_or_else(|| Error::Invalid(format!("{rd} is not of type A")))?;
        Self::from_weight_character(rd, |mu| CircleValue::new(-t * abs_hom(n, mu), n as i64))
    }

    pub fn center(&self) -> &FinAbGroup {
        &self.center
    }

    /// Coordinates `c_k` of the character `u_k ↦ c_k / n_k`.
    pub fn coords(&self) -> &[i64] {
        self.chi.coords()
    }

    /// `⟨z, u_k⟩` on the `k`-th generator of the center group.
    pub fn on_generator(&self, k: usize) -> CircleValue {
        CircleValue::new(self.chi.coords()[k], self.center.factors()[k])
    }

    /// `⟨z, μ⟩` for a weight in the `ϖ` basis.
    pub fn pair(&self, mu: &[i64]) -> CircleValue {
        let a = self.center.project(mu).expect("weight of the wrong rank");
        self.pair_class(&a)
    }

    /// `⟨z, a⟩` for a class `a ∈ P/Q`.
    pub fn pair_class(&self, a: &GroupElement) -> CircleValue {
        self.center.character_value(&self.chi, a)
    }

    pub fn mul(&self, other: &CenterElement) -> CenterElement {
        CenterElement { center: self.center.clone(), chi: self.center.add(&self.chi, &other.chi) }
    }

    pub fn inv(&self) -> CenterElement {
        CenterElement { center: self.center.clone(), chi: self.center.neg(&self.chi) }
    }

    pub fn pow(&self, k: i64) -> CenterElement {
        CenterElement { center: self.center.clone(), chi: self.center.scale(&self.chi, k) }
    }

    pub fn is_identity(&self) -> bool {
        self.chi.is_zero()
    }

    pub fn order(&self) -> i64 {
        self.center.element_order(&self.chi)
    }

    /// Exponent `t` with `z = ζ_n^t`, for `SU(n)`.
    pub fn su_n_exponent(&self, rd: &RootDatum) -> Option<i64> {
        let n = rd.su_n()? as i64;
        // ⟨ζ^t, ϖ_{n-1}⟩ = ζ^{-t}
        let v = self.pair(&rd.fundamental_weight(rd.rank() - 1));
        v.as_power_of_zeta(n).map(|e| (-e).rem_euclid(n))
    }
}

impl fmt::Debug for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CenterElement{:?}", self.chi.coords())
    }
}

/// `τ = (τ_1, …, τ_r) ∈ Z(G)^r`.
#[derive(Clone, PartialEq, Eq)]
pub struct TauTuple {
    elems: Vec<CenterElement>,
}

impl TauTuple {
    pub fn new(rd: &RootDatum, elems: Vec<CenterElement>) -> Result<Self> {
        if elems.len() != rd.rank() {
            return Err(Error::Mismatch(format!("{} center elements for rank {}", elems.len(), rd.rank())));
        }
        let center = rd.center_group()?;
        if elems.iter().any(|z| z.center != center) {
            return Err(Error::GroupMismatch);
        }
        Ok(TauTuple { elems })
    }

    pub fn trivial(rd: &RootDatum) -> Result<Self> {
        let c = rd.center_group()?;
        Ok(TauTuple { elems: vec![CenterElement::identity(&c); rd.rank()] })
    }

    /// `τ_i = ζ_n^{t_i}` for `SU(n)`.
    pub fn su_n(rd: &RootDatum, exps: &[i64]) -> Result<Self> {
        let elems = exps.iter().map(|&t| CenterElement::su_n(rd, t)).collect::<Result<Vec<_>>>()?;
        Self::new(rd, elems)
    }

    /// Dual-group coordinates for each `τ_i`.
    pub fn from_coords(rd: &RootDatum, coords: &[Vec<i64>]) -> Result<Self> {
        let c = rd.center_group()?;
        let elems = coords.iter().map(|x| CenterElement::new(&c, x)).collect::<Result<Vec<_>>>()?;
        Self::new(rd, elems)
    }

    /// `1,0`, `[1, 0]` or `[[1, 0], [0, 1]]`. For `SU(n)` plain integers are
    /// exponents of `ζ_n`; otherwise each entry lists dual-group coordinates
    /// (a plain integer is allowed when the center is cyclic).
    pub fn parse(rd: &RootDatum, text: &str) -> Result<Self> {
        let t = text.trim();
        let json = if t.starts_with('[') { t.to_string() } else { format!("[{t}]") };
        let v: Value = serde_json::from_str(&json).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column().saturating_sub(usize::from(!t.starts_with('['))).max(1),
            message: e.to_string(),
        })?;
        let items = v.as_array().ok_or_else(|| Error::Invalid("τ must be a list".into()))?;
        let int = |x: &Value| x.as_i64().ok_or_else(|| Error::Invalid(format!("{x} is not an integer")));
        if items.iter().all(|x| x.is_i64()) {
            let ints = items.iter().map(int).collect::<Result<Vec<_>>>()?;
            if rd.su_n().is_some() {
                return Self::su_n(rd, &ints);
            }
            let c = rd.center_group()?;
            if c.ngens() > 1 {
                return Err(Error::Invalid(format!("the center {c} is not cyclic; give coordinate lists")));
            }
            let coords: Vec<Vec<i64>> = ints.iter().map(|&x| if c.ngens() == 1 { vec![x] } else { vec![] }).collect();
            return Self::from_coords(rd, &coords);
        }
        let coords = items
            .iter()
            .map(|x| {
                x.as_array()
                    .ok_or_else(|| Error::Invalid(format!("{x} is not a coordinate list")))?
                    .iter()
                    .map(int)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coords(rd, &coords)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn get(&self, i: usize) -> &CenterElement {
        &self.elems[i]
    }

    pub fn elems(&self) -> &[CenterElement] {
        &self.elems
    }

    pub fn mul(&self, other: &TauTuple) -> TauTuple {
        TauTuple { elems: self.elems.iter().zip(&other.elems).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn inv(&self) -> TauTuple {
        TauTuple { elems: self.elems.iter().map(|a| a.inv()).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.iter().all(|z| z.is_identity())
    }

    /// `(t_1, …, t_{n-1})` with `τ_i = ζ_n^{t_i}`, for `SU(n)`.
    pub fn su_n_exponents(&self, rd: &RootDatum) -> Option<Vec<i64>> {
        self.elems.iter().map(|z| z.su_n_exponent(rd)).collect()
    }
}

impl fmt::Debug for TauTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elems.iter().map(|z| z.coords())).finish()
    }
}
