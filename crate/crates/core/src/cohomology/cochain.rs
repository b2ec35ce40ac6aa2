//! Circle-valued cochains on a finite abelian group, written additively.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::abelian::{CircleValue, FinAbGroup, GroupElement};
use crate::error::{Error, Result};

pub type Evaluator = Arc<dyn Fn(&[&[i64]]) -> CircleValue + Send + Sync>;

/// Largest number of `∂φ` evaluations done exhaustively (`36^4`).
pub const EXHAUSTIVE_BUDGET: u64 = 36 * 36 * 36 * 36;

/// Tuples tested when the exhaustive budget is exceeded.
pub const SAMPLE_SIZE: usize = 100_000;

/// Seed for every sampled check, so runs are reproducible.
pub const SAMPLE_SEED: u64 = 0x5eed_c0c4_c1e5;

#[derive(Clone)]
enum Backing {
    Table(Arc<Vec<CircleValue>>),
    Closed(Evaluator),
}

/// A map `Γ^n → T`. Either a full table indexed by element positions, or a
/// closed-form evaluator.
#[derive(Clone)]
pub struct Cochain {
    group: FinAbGroup,
    degree: usize,
    backing: Backing,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.backing {
            Backing::Table(_) => "table",
            Backing::Closed(_) => "closed form",
        };
        write!(f, "Cochain(degree {} on {}, {kind})", self.degree, self.group)
    }
}

/// Outcome of a cocycle check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    pub holds: bool,
    /// First tuple where `∂φ` is nonzero, with the value found there.
    pub witness: Option<(Vec<GroupElement>, CircleValue)>,
    pub exhaustive: bool,
    pub tested: u64,
}

impl Cochain {
    pub fn from_table(group: &FinAbGroup, degree: usize, values: Vec<CircleValue>) -> Result<Self> {
        let expected = (group.order() as u64).pow(degree as u32);
        if values.len() as u64 != expected {
            return Err(Error::Mismatch(format!(
                "table has {} entries, expected {expected}",
                values.len()
            )));
        }
        Ok(Cochain { group: group.clone(), degree, backing: Backing::Table(Arc::new(values)) })
    }

    pub fn closed<F>(group: &FinAbGroup, degree: usize, f: F) -> Self
    where
        F: Fn(&[&[i64]]) -> CircleValue + Send + Sync + 'static,
    {
        Cochain { group: group.clone(), degree, backing: Backing::Closed(Arc::new(f)) }
    }

    pub fn zero(group: &FinAbGroup, degree: usize) -> Self {
        Self::closed(group, degree, |_| CircleValue::ZERO)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_table(&self) -> bool {
        matches!(self.backing, Backing::Table(_))
    }

    pub fn eval(&self, args: &[&GroupElement]) -> CircleValue {
        let c: Vec<&[i64]> = args.iter().map(|g| g.coords()).collect();
        self.eval_coords(&c)
    }

    /// Evaluates at reduced coordinate vectors.
    pub fn eval_coords(&self, args: &[&[i64]]) -> CircleValue {
        debug_assert_eq!(args.len(), self.degree);
        match &self.backing {
            Backing::Closed(f) => f(args),
            Backing::Table(t) => {
                let n = self.group.order();
                let idx = args.iter().fold(0usize, |acc, a| acc * n + self.group.index_of_coords(a));
                t[idx]
            }
        }
    }

    /// Value at a tuple of element positions.
    pub fn eval_indices(&self, idx: &[usize]) -> CircleValue {
        match &self.backing {
            Backing::Table(t) => {
                let n = self.group.order();
                t[idx.iter().fold(0usize, |acc, &i| acc * n + i)]
            }
            Backing::Closed(f) => {
                let els: Vec<GroupElement> = idx.iter().map(|&i| self.group.element_at(i)).collect();
                let c: Vec<&[i64]> = els.iter().map(|g| g.coords()).collect();
                f(&c)
            }
        }
    }

    /// The same cochain backed by a full table.
    pub fn materialize(&self) -> Cochain {
        if self.is_table() {
            return self.clone();
        }
        let n = self.group.order();
        let total = n.pow(self.degree as u32);
        let values: Vec<CircleValue> = (0..total)
            .into_par_iter()
            .map(|mut k| {
                let mut idx = vec![0usize; self.degree];
                for slot in (0..self.degree).rev() {
                    idx[slot] = k % n;
                    k /= n;
                }
                self.eval_indices(&idx)
            })
            .collect();
        Cochain { group: self.group.clone(), degree: self.degree, backing: Backing::Table(Arc::new(values)) }
    }

    /// `∂φ`, as a closed form built on top of this cochain:
    /// `(∂φ)(γ_1..γ_{n+1}) = φ(γ_2..) + Σ_i (-1)^i φ(..γ_i γ_{i+1}..) + (-1)^{n+1} φ(γ_1..γ_n)`.
    pub fn coboundary(&self) -> Cochain {
        let phi = self.clone();
        let factors = self.group.factors().to_vec();
        let n = self.degree;
        Cochain::closed(&self.group, n + 1, move |args| {
            let mut acc = phi.eval_coords(&args[1..]);
            let mut merged: Vec<i64> = vec![0; factors.len()];
            for i in 0..n {
                for (k, m) in merged.iter_mut().enumerate() {
                    *m = (args[i][k] + args[i + 1][k]) % factors[k];
                }
                let mut face: Vec<&[i64]> = Vec::with_capacity(n);
                face.extend_from_slice(&args[..i]);
                face.push(&merged);
                face.extend_from_slice(&args[i + 2..]);
                let v = phi.eval_coords(&face);
                acc += if i % 2 == 0 { -v } else { v };
            }
            let last = phi.eval_coords(&args[..n]);
            acc += if n % 2 == 0 { -last } else { last };
            acc
        })
    }

    /// Pointwise sum (the product of cochains in multiplicative notation).
    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let (a, b) = (self.clone(), other.clone());
        Ok(Cochain::closed(&self.group, self.degree, move |x| a.eval_coords(x) + b.eval_coords(x)))
    }

    pub fn neg(&self) -> Cochain {
        self.scale(-1)
    }

    /// `k`-th power in multiplicative notation.
    pub fn scale(&self, k: i64) -> Cochain {
        let a = self.clone();
        Cochain::closed(&self.group, self.degree, move |x| a.eval_coords(x).pow(k))
    }

    /// `φ_{321}(a, b, c) = φ(c, b, a)` for a 3-cochain.
    pub fn reversed(&self) -> Cochain {
        let a = self.clone();
        Cochain::closed(&self.group, self.degree, move |x| {
            let r: Vec<&[i64]> = x.iter().rev().copied().collect();
            a.eval_coords(&r)
        })
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::Mismatch(format!("degrees {} and {}", self.degree, other.degree)));
        }
        Ok(())
    }

    /// Pointwise equality on every tuple (exhaustive) or on a fixed sample.
    pub fn agrees_with(&self, other: &Cochain) -> Result<bool> {
        self.check_compatible(other)?;
        let diff = self.add(&other.neg())?;
        Ok(diff.find_nonzero(self.degree, |t| diff.eval_indices(t)).0.is_none())
    }

    pub fn is_cocycle(&self) -> bool {
        self.check_cocycle().holds
    }

    /// Tests `∂φ = 0`: on all of `Γ^{n+1}` when that has at most
    /// [`EXHAUSTIVE_BUDGET`] tuples, otherwise on [`SAMPLE_SIZE`] tuples drawn
    /// with a fixed seed.
    pub fn check_cocycle(&self) -> CocycleReport {
        let n = self.group.order() as u64;
        let total = n.saturating_pow(self.degree as u32 + 1);
        if total <= EXHAUSTIVE_BUDGET {
            let dense = self.materialize();
            if let Some(fast) = FastTable::new(&dense) {
                return fast.check(&self.group);
            }
        }
        let d = self.coboundary();
        let (witness, tested, exhaustive) = self.find_nonzero(self.degree + 1, |t| d.eval_indices(t));
        CocycleReport {
            holds: witness.is_none(),
            witness: witness.map(|(t, v)| (t.iter().map(|&i| self.group.element_at(i)).collect(), v)),
            exhaustive,
            tested,
        }
    }

    // Scans Γ^arity, exhaustively within budget, otherwise on a seeded sample.
    #[allow(clippy::type_complexity)]
    fn find_nonzero<F>(&self, arity: usize, f: F) -> (Option<(Vec<usize>, CircleValue)>, u64, bool)
    where
        F: Fn(&[usize]) -> CircleValue + Sync,
    {
        let n = self.group.order();
        let total = (n as u64).saturating_pow(arity as u32);
        if total <= EXHAUSTIVE_BUDGET {
            let hit = (0..total).into_par_iter().find_map_first(|mut k| {
                let mut idx = vec![0usize; arity];
                for slot in (0..arity).rev() {
                    idx[slot] = (k % n as u64) as usize;
                    k /= n as u64;
                }
                let v = f(&idx);
                (!v.is_zero()).then_some((idx, v))
            });
            (hit, total, true)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            let samples: Vec<Vec<usize>> =
                (0..SAMPLE_SIZE).map(|_| (0..arity).map(|_| rng.gen_range(0..n)).collect()).collect();
            let hit = samples.into_par_iter().find_map_first(|idx| {
                let v = f(&idx);
                (!v.is_zero()).then_some((idx, v))
            });
            (hit, SAMPLE_SIZE as u64, false)
        }
    }
}

/// A table cochain with all values over one common denominator, and the
/// group's addition table, for the hot exhaustive loops.
struct FastTable {
    n: usize,
    degree: usize,
    den: u64,
    nums: Vec<u64>,
}

impl FastTable {
    fn new(c: &Cochain) -> Option<Self> {
        let Backing::Table(t) = &c.backing else { return None };
        let mut den: u64 = 1;
        for v in t.iter() {
            den = den.lcm(&(v.denom() as u64));
            if den > u32::MAX as u64 {
                return None;
            }
        }
        let nums = t.iter().map(|v| v.numer() as u64 * (den / v.denom() as u64)).collect();
        Some(FastTable { n: c.group.order(), degree: c.degree, den, nums })
    }

    fn check(&self, group: &FinAbGroup) -> CocycleReport {
        let n = self.n;
        let d = self.degree;
        let add: Vec<u32> = (0..n * n)
            .map(|k| {
                let (a, b) = (group.element_at(k / n), group.element_at(k % n));
                group.index_of(&group.add(&a, &b)) as u32
            })
            .collect();
        let total = (n as u64).pow(d as u32 + 1);
        let den = self.den;
        let at = |idx: &[usize]| -> u64 { self.nums[idx.iter().fold(0usize, |acc, &i| acc * n + i)] };
        let hit = (0..n).into_par_iter().find_map_first(|x0| {
            let mut idx = vec![0usize; d + 1];
            idx[0] = x0;
            let mut face = vec![0usize; d];
            let rest = n.pow(d as u32);
            for mut k in 0..rest {
                for slot in (1..=d).rev() {
                    idx[slot] = k % n;
                    k /= n;
                }
                // signed face sum, positive terms minus negative terms
                let mut pos = at(&idx[1..]);
                let mut neg = 0u64;
                for i in 0..d {
                    face[..i].copy_from_slice(&idx[..i]);
                    face[i] = add[idx[i] * n + idx[i + 1]] as usize;
                    face[i + 1..].copy_from_slice(&idx[i + 2..]);
                    if i % 2 == 0 {
                        neg += at(&face);
                    } else {
                        pos += at(&face);
                    }
                }
                if d % 2 == 0 {
                    neg += at(&idx[..d]);
                } else {
                    pos += at(&idx[..d]);
                }
                if (pos + den * (d as u64 + 2) - neg) % den != 0 {
                    let v = CircleValue::new(((pos + den * (d as u64 + 2) - neg) % den) as i64, den as i64);
                    return Some((idx.clone(), v));
                }
            }
            None
        });
        CocycleReport {
            holds: hit.is_none(),
            witness: hit.map(|(t, v)| (t.iter().map(|&i| group.element_at(i)).collect(), v)),
            exhaustive: true,
            tested: total,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_cochain(g: &FinAbGroup, degree: usize, den: i64, seed: u64) -> Cochain {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let total = g.order().pow(degree as u32);
        let vals = (0..total).map(|_| CircleValue::new(rng.gen_range(0..den), den)).collect();
        Cochain::from_table(g, degree, vals).unwrap()
    }

    #[test]
    fn coboundary_of_zero_is_zero() {
        let g = FinAbGroup::new(&[2, 3]).unwrap();
        let z = Cochain::zero(&g, 2).coboundary();
        assert_eq!(z.degree(), 3);
        for a in g.enumerate() {
            assert!(z.eval(&[&a, &a, &g.generator(0)]).is_zero());
        }
    }

    #[test]
    fn bicharacter_is_cocycle() {
        let g = FinAbGroup::new(&[4, 2]).unwrap();
        let chi = Cochain::closed(&g, 2, |x| CircleValue::new(2 * x[0][0] * x[1][1] + 3 * x[0][0] * x[1][0], 4));
        assert!(chi.coboundary().materialize().agrees_with(&Cochain::zero(&g, 3)).unwrap());
        assert!(chi.is_cocycle());
    }

    #[test]
    fn dd_is_zero() {
        for f in [vec![4], vec![2, 2], vec![3, 3], vec![2, 4]] {
            let g = FinAbGroup::new(&f).unwrap();
            for deg in 1..=2 {
                let c = random_cochain(&g, deg, 12, 7 + deg as u64);
                let r = c.coboundary().check_cocycle();
                assert!(r.holds && r.exhaustive, "{f:?} degree {deg}");
            }
        }
    }

    #[test]
    fn random_table_is_not_a_cocycle() {
        let g = FinAbGroup::new(&[3]).unwrap();
        let c = random_cochain(&g, 3, 5, 1);
        let r = c.check_cocycle();
        assert!(!r.holds);
        let (w, v) = r.witness.unwrap();
        let refs: Vec<&GroupElement> = w.iter().collect();
        // oracle: evaluate ∂φ at the witness directly
        let direct = c.eval(&refs[1..]) - c.eval(&[&g.add(refs[0], refs[1]), refs[2], refs[3]])
            + c.eval(&[refs[0], &g.add(refs[1], refs[2]), refs[3]])
            - c.eval(&[refs[0], refs[1], &g.add(refs[2], refs[3])])
            + c.eval(&refs[..3]);
        assert_eq!(direct, v);
        assert!(!direct.is_zero());
    }

    #[test]
    fn sampled_mode_above_budget() {
        let g = FinAbGroup::new(&[37]).unwrap();
        let chi = Cochain::closed(&g, 3, |x| CircleValue::new(x[0][0] * x[1][0] * x[2][0], 37));
        let r = chi.check_cocycle();
        assert!(r.holds && !r.exhaustive);
        assert_eq!(r.tested, SAMPLE_SIZE as u64);
    }
}
