use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::circle::CircleValue;
use super::intmat::IntMatrix;
use super::snf::{smith_normal_form, SmithDecomposition};
use crate::error::{Error, Result};

/// An element of a finite abelian group, as coordinates with respect to the
/// generators of the group's decomposition. Each coordinate lies in `[0, n_i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    coords: Vec<i64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// `Z^rank / (column span of relations)`, together with its Smith form.
///
/// `project` reads off coordinates of the quotient in the normal-form basis:
/// those are the rows of `U` belonging to nontrivial invariant factors.
/// `lift` sends the `k`-th normal-form generator to the matching column of
/// `U^{-1}`.
#[derive(Clone, Debug)]
pub struct Presentation {
    rank: usize,
    relations: IntMatrix,
    smith: SmithDecomposition,
    // number of leading unit invariant factors
    offset: usize,
}

impl Presentation {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Columns generate the relation subgroup `Γ_0`.
    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.smith
    }

    /// Normal-form coordinates of the class of `x`, unreduced.
    pub(crate) fn project_raw(&self, x: &[i64]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.rank);
        let u = &self.smith.u;
        (self.offset..self.rank)
            .map(|i| {
                u.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(_, &c)| c != 0)
                    .map(|(a, &c)| a * c)
                    .sum()
            })
            .collect()
    }

    /// Lift of the `k`-th normal-form generator to `Z^rank`.
    pub fn lift_generator(&self, k: usize) -> Vec<i64> {
        let col = self.offset + k;
        (0..self.rank).map(|i| self.smith.u_inv.get_i64(i, col)).collect()
    }
}

/// Finite abelian group given as `⊕ Z/n_i` in a fixed (user-chosen) order.
///
/// The invariant-factor form is kept alongside for isomorphism tests, with the
/// change of basis between the two coordinate systems.
#[derive(Clone)]
pub struct FinAbGroup {
    factors: Vec<i64>,
    invariant: Vec<i64>,
    // rows: normal-form coordinate as an integer combination of factor coordinates
    to_normal: Vec<Vec<i64>>,
    // columns: factor coordinates of each normal-form generator
    from_normal: Vec<Vec<i64>>,
    strides: Vec<usize>,
    order: usize,
    presentation: Option<Presentation>,
}

impl PartialEq for FinAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for FinAbGroup {}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Maximum order accepted for a group we enumerate.
const MAX_ORDER: i64 = 1 << 40;

impl FinAbGroup {
    /// `⊕ Z/n_i` with the given factor order. Factors equal to 1 are dropped.
    pub fn new(factors: &[i64]) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&n| n < 1) {
            return Err(Error::Invalid(format!("cyclic factor must be positive, got {bad}")));
        }
        let kept: Vec<i64> = factors.iter().copied().filter(|&n| n > 1).collect();
        let mut g = Self::with_coordinates(kept.clone())?;
        let m = kept.len();
        let rel = IntMatrix::diagonal(&kept);
        g.presentation = Some(presentation_of(m, rel));
        Ok(g)
    }

    pub fn trivial() -> Self {
        Self::new(&[]).unwrap()
    }

    pub fn cyclic(n: i64) -> Self {
        Self::new(&[n]).expect("cyclic order must be positive")
    }

    /// Group in the given coordinates without any presentation attached.
    pub(crate) fn with_coordinates(factors: Vec<i64>) -> Result<Self> {
        let mut order: i64 = 1;
        for &n in &factors {
            order = order
                .checked_mul(n)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or_else(|| Error::Invalid("group order too large".into()))?;
        }
        let m = factors.len();
        let s = smith_normal_form(&IntMatrix::diagonal(&factors));
        let diag: Vec<i64> = s.diagonal().iter().map(|d| d.to_i64().unwrap()).collect();
        let offset = diag.iter().take_while(|&&d| d == 1).count();
        let invariant = diag[offset..].to_vec();
        let to_normal = (offset..m)
            .map(|i| (0..m).map(|j| s.u.get_i64(i, j)).collect())
            .collect();
        let from_normal = (offset..m)
            .map(|k| (0..m).map(|i| s.u_inv.get_i64(i, k)).collect())
            .collect();
        let mut strides = vec![1usize; m];
        for i in (0..m.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1] as usize;
        }
        Ok(FinAbGroup {
            factors,
            invariant,
            to_normal,
            from_normal,
            strides,
            order: order as usize,
            presentation: None,
        })
    }

    /// `Z^rank` modulo the subgroup generated by the columns of `relations`.
    /// Coordinates of the result are the invariant-factor coordinates.
    pub fn quotient(rank: usize, relations: &IntMatrix) -> Result<Self> {
        if relations.rows() != rank {
            return Err(Error::Mismatch(format!(
                "relation vectors have length {}, expected rank {rank}",
                relations.rows()
            )));
        }
        let pres = presentation_of(rank, relations.clone());
        let diag = pres.smith.diagonal();
        for i in 0..rank {
            if i >= diag.len() || diag[i].is_zero() {
                return Err(Error::InfiniteQuotient { index: i + 1 });
            }
        }
        let invariant: Vec<i64> = diag[pres.offset..]
            .iter()
            .map(|d| d.to_i64().ok_or_else(|| Error::Invalid("invariant factor too large".into())))
            .collect::<Result<_>>()?;
        let mut g = Self::with_coordinates(invariant)?;
        g.presentation = Some(pres);
        Ok(g)
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn ngens(&self) -> usize {
        self.factors.len()
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariant
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn presentation(&self) -> Result<&Presentation> {
        self.presentation.as_ref().ok_or(Error::NoPresentation)
    }

    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.invariant == other.invariant
    }

    /// Exponent of the group (largest invariant factor).
    pub fn exponent(&self) -> i64 {
        self.invariant.last().copied().unwrap_or(1)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.ngens()] }
    }

    /// Generator `u_i` (0-based).
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.ngens()];
        c[i] = 1 % self.factors[i];
        GroupElement { coords: c }
    }

    /// Element with the given coordinates, reduced mod the factors.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.ngens() {
            return Err(Error::Mismatch(format!(
                "element has {} coordinates, group has {} factors",
                coords.len(),
                self.ngens()
            )));
        }
        Ok(GroupElement {
            coords: coords.iter().zip(&self.factors).map(|(&c, &n)| c.rem_euclid(n)).collect(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.factors)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.scale(a, -1)
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &GroupElement, k: i64) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &n)| ((x as i128 * k as i128).rem_euclid(n as i128)) as i64)
                .collect(),
        }
    }

    pub fn element_order(&self, a: &GroupElement) -> i64 {
        a.coords
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (&x, &n)| acc.lcm(&(n / x.gcd(&n))))
    }

    /// Position of an element in lexicographic order (last coordinate fastest).
    pub fn index_of(&self, a: &GroupElement) -> usize {
        self.index_of_coords(&a.coords)
    }

    pub(crate) fn index_of_coords(&self, c: &[i64]) -> usize {
        c.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum()
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut coords = vec![0; self.ngens()];
        for i in 0..self.ngens() {
            coords[i] = (idx / self.strides[i]) as i64;
            idx %= self.strides[i];
        }
        GroupElement { coords }
    }

    /// Every element exactly once, in lexicographic order of coordinates.
    pub fn enumerate(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    /// Coordinates in the invariant-factor basis.
    pub fn to_normal_form(&self, a: &GroupElement) -> Vec<i64> {
        self.to_normal
            .iter()
            .zip(&self.invariant)
            .map(|(row, &d)| {
                let s: i128 = row.iter().zip(&a.coords).map(|(&r, &x)| r as i128 * x as i128).sum();
                s.rem_euclid(d as i128) as i64
            })
            .collect()
    }

    pub fn from_normal_form(&self, y: &[i64]) -> GroupElement {
        assert_eq!(y.len(), self.invariant.len());
        let mut coords = vec![0i128; self.ngens()];
        for (col, &yk) in self.from_normal.iter().zip(y) {
            for (c, &v) in coords.iter_mut().zip(col) {
                *c += v as i128 * yk as i128;
            }
        }
        GroupElement {
            coords: coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(n as i128) as i64)
                .collect(),
        }
    }

    /// Image of an integer vector under the presentation's projection.
    pub fn project(&self, x: &[i64]) -> Result<GroupElement> {
        let p = self.presentation()?;
        if x.len() != p.rank {
            return Err(Error::Mismatch(format!("vector of length {}, rank is {}", x.len(), p.rank)));
        }
        let raw = p.project_raw(x);
        // The presentation's Smith basis is the group's normal-form basis: for
        // `new` both come from the same diagonal matrix, and for `quotient`
        // the coordinates already are the invariant ones.
        let y: Vec<i64> = raw
            .iter()
            .zip(&p.smith.diagonal()[p.offset..])
            .map(|(v, d)| v.mod_floor(d).to_i64().unwrap())
            .collect();
        Ok(self.from_normal_form(&y))
    }

    /// Lift of an element to `Z^rank`, using coordinates in `[0, n_i)`.
    pub fn lift(&self, a: &GroupElement) -> Result<Vec<i64>> {
        let p = self.presentation()?;
        let y = self.to_normal_form(a);
        let mut out = vec![0i64; p.rank];
        for (k, &yk) in y.iter().enumerate() {
            if yk == 0 {
                continue;
            }
            for (o, v) in out.iter_mut().zip(p.lift_generator(k)) {
                *o += v * yk;
            }
        }
        Ok(out)
    }

    /// Value of the character with coordinates `chi` (`u_i ↦ chi_i/n_i`) at `a`.
    pub fn character_value(&self, chi: &GroupElement, a: &GroupElement) -> CircleValue {
        chi.coords
            .iter()
            .zip(&a.coords)
            .zip(&self.factors)
            .map(|((&c, &x), &n)| CircleValue::new((c as i128 * x as i128 % n as i128) as i64, n))
            .sum()
    }

    /// Characters of the group, identified with elements via `u_i ↦ chi_i/n_i`.
    pub fn characters(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.enumerate()
    }

    /// Direct sum, factors concatenated.
    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        FinAbGroup::new(&f).expect("factors already validated")
    }
}

fn presentation_of(rank: usize, relations: IntMatrix) -> Presentation {
    let smith = smith_normal_form(&relations);
    let offset = smith.diagonal().iter().take_while(|d| d.is_one()).count();
    Presentation { rank, relations, smith, offset }
}

/// `Z^rank / relations` (relation vectors are the columns).
pub fn quotient_group(rank: usize, relations: &IntMatrix) -> Result<FinAbGroup> {
    FinAbGroup::quotient(rank, relations)
}

/// Homomorphism between finite abelian groups, stored as the images of the
/// source generators in target coordinates.
#[derive(Clone, Debug)]
pub struct AbHom {
    source: FinAbGroup,
    target: FinAbGroup,
    images: Vec<GroupElement>,
}

impl AbHom {
    pub fn new(source: &FinAbGroup, target: &FinAbGroup, images: Vec<Vec<i64>>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::Mismatch(format!(
                "{} generator images for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        let images: Vec<GroupElement> =
            images.iter().map(|v| target.element(v)).collect::<Result<_>>()?;
        for (i, (img, &n)) in images.iter().zip(source.factors()).enumerate() {
            if !target.scale(img, n).is_zero() {
                return Err(Error::Invalid(format!(
                    "image of generator {} has order not dividing {n}",
                    i + 1
                )));
            }
        }
        Ok(AbHom { source: source.clone(), target: target.clone(), images })
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let images = (0..g.ngens()).map(|i| g.generator(i)).collect();
        AbHom { source: g.clone(), target: g.clone(), images }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn apply(&self, a: &GroupElement) -> GroupElement {
        let mut out = self.target.zero();
        for (img, &c) in self.images.iter().zip(a.coords()) {
            if c != 0 {
                out = self.target.add(&out, &self.target.scale(img, c));
            }
        }
        out
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AbHom) -> Result<AbHom> {
        if self.target != other.source {
            return Err(Error::Mismatch("composing homomorphisms with different middle groups".into()));
        }
        let images = self.images.iter().map(|g| other.apply(g)).collect();
        Ok(AbHom { source: self.source.clone(), target: other.target.clone(), images })
    }

    pub fn kernel_order(&self) -> usize {
        self.source.enumerate().filter(|a| self.apply(a).is_zero()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_examples() {
        let g = quotient_group(1, &IntMatrix::from_rows(&[[5]])).unwrap();
        assert_eq!(g.invariant_factors(), &[5]);
        let g = quotient_group(2, &IntMatrix::diagonal(&[2, 2])).unwrap();
        assert_eq!(g.invariant_factors(), &[2, 2]);
        let g = quotient_group(2, &IntMatrix::from_rows(&[[2, 1], [0, 2]])).unwrap();
        assert_eq!(g.invariant_factors(), &[4]);
        assert_eq!(
            quotient_group(2, &IntMatrix::from_rows(&[[2], [0]])).unwrap_err(),
            Error::InfiniteQuotient { index: 2 }
        );
        assert!(matches!(
            quotient_group(2, &IntMatrix::from_rows(&[[2, 4], [1, 2]])),
            Err(Error::InfiniteQuotient { .. })
        ));
    }

    #[test]
    fn projection_kills_relations() {
        let m = IntMatrix::from_rows(&[[2, 1], [0, 2]]);
        let g = quotient_group(2, &m).unwrap();
        for j in 0..2 {
            let col: Vec<i64> = (0..2).map(|i| m.get_i64(i, j)).collect();
            assert!(g.project(&col).unwrap().is_zero());
        }
        // e_1 and e_2 generate, and the projection is onto
        let mut seen: Vec<GroupElement> = (0..4)
            .flat_map(|a| (0..4).map(move |b| vec![a, b]))
            .map(|v| g.project(&v).unwrap())
            .collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 4);
        for a in g.enumerate() {
            assert_eq!(g.project(&g.lift(&a).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn normal_form_round_trip() {
        let g = FinAbGroup::new(&[6, 4, 1, 3]).unwrap();
        assert_eq!(g.factors(), &[6, 4, 3]);
        assert_eq!(g.invariant_factors(), &[6, 12]);
        assert_eq!(g.order(), 72);
        for a in g.enumerate() {
            assert_eq!(g.from_normal_form(&g.to_normal_form(&a)), a);
        }
        // normal-form coordinates form a homomorphism
        let x = g.element(&[1, 3, 2]).unwrap();
        let y = g.element(&[5, 2, 2]).unwrap();
        let s = g.to_normal_form(&g.add(&x, &y));
        let t: Vec<i64> = g
            .to_normal_form(&x)
            .iter()
            .zip(g.to_normal_form(&y))
            .zip(g.invariant_factors())
            .map(|((a, b), n)| (a + b) % n)
            .collect();
        assert_eq!(s, t);
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(FinAbGroup::trivial().enumerate().count(), 1);
        let z3: Vec<Vec<i64>> = FinAbGroup::cyclic(3).enumerate().map(|e| e.coords().to_vec()).collect();
        assert_eq!(z3, vec![vec![0], vec![1], vec![2]]);
        let k = FinAbGroup::new(&[2, 2]).unwrap();
        let all: Vec<usize> = k.enumerate().map(|e| k.index_of(&e)).collect();
        assert_eq!(all, vec![0, 1, 2, 3]);
    }

    #[test]
    fn homomorphisms() {
        let z4 = FinAbGroup::cyclic(4);
        let z2 = FinAbGroup::cyclic(2);
        let h = AbHom::new(&z4, &z2, vec![vec![1]]).unwrap();
        assert_eq!(h.kernel_order(), 2);
        assert!(AbHom::new(&z2, &z4, vec![vec![1]]).is_err());
        let dbl = AbHom::new(&z2, &z4, vec![vec![2]]).unwrap();
        let comp = dbl.then(&h).unwrap();
        assert_eq!(comp.kernel_order(), 2);
    }
}
