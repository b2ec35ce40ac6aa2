//! `τ`-admissible representations of the extended algebra `Ũ_q(g)` and the
//! twisted coproduct `Δ̂(E_i) = E_i⊗C_i + K_i⊗E_i`.

use std::fmt;

use serde::Serialize;

use crate::abelian::CircleValue;
use crate::cyclotomic::{Cyclo, CycloMatrix, Matrix};
use crate::error::{Error, Result};
use crate::roots::{f_from_tau, RootDatum, TauTuple, Weight};

use super::rep::{check_relations_for, same_setting, tensor_weights, Generators, RelationFailure, WeightedRep};

/// Which formula to use for `Δ̂(F_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FCoproduct {
    /// `F_i ⊗ K_i^{-1} C_i^{-1} + 1 ⊗ F_i`, obtained by conjugating `Δ_q(F_i)` with `f`.
    Conjugated,
    /// `F_i ⊗ K_i^{-1} + C_i^{-1} ⊗ F_i`; breaks `[E_i, F_i]` when `τ_i ≠ 1`.
    Naive,
}

/// A representation of `Ũ_q(g)`: an admissible representation together
/// with matrices `C_i^{±1}` for the central unitaries.
#[derive(Clone, PartialEq, Eq)]
pub struct TauRep {
    rep: WeightedRep,
    tau: TauTuple,
    c: Vec<CycloMatrix>,
    cinv: Vec<CycloMatrix>,
}

fn circle(x: CircleValue) -> Cyclo {
    Cyclo::from_circle(x)
}

impl TauRep {
    /// The `τ`-admissible extension: `C_i` acts on weight `χ` by `⟨τ_i, χ⟩`.
    pub fn new(rep: WeightedRep, tau: &TauTuple) -> Result<Self> {
        let rd = rep.root_datum();
        if tau.len() != rd.rank() {
            return Err(Error::Mismatch(format!("{} center elements for rank {}", tau.len(), rd.rank())));
        }
        let diag = |i: usize, s: i64| -> CycloMatrix {
            Matrix::diagonal(rep.weights().iter().map(|w| circle(tau.get(i).pair(w).pow(s))).collect())
        };
        let c = (0..rd.rank()).map(|i| diag(i, 1)).collect();
        let cinv = (0..rd.rank()).map(|i| diag(i, -1)).collect();
        Ok(TauRep { rep, tau: tau.clone(), c, cinv })
    }

    /// One-dimensional representation with `E, F = 0`, `K = 1` and `C_i = values[i]`
    /// (roots of unity as circle values); `ε̂` is the case of all zeros.
    pub fn scalar(rd: &RootDatum, q: num_rational::BigRational, tau: &TauTuple, values: &[CircleValue]) -> Result<Self> {
        if values.len() != rd.rank() {
            return Err(Error::Mismatch("one value per C_i".into()));
        }
        let rep = WeightedRep::trivial(rd, q)?;
        let c = values.iter().map(|&v| Matrix::diagonal(vec![circle(v)])).collect();
        let cinv = values.iter().map(|&v| Matrix::diagonal(vec![circle(-v)])).collect();
        Ok(TauRep { rep, tau: tau.clone(), c, cinv })
    }

    pub fn counit(rd: &RootDatum, q: num_rational::BigRational, tau: &TauTuple) -> Result<Self> {
        Self::scalar(rd, q, tau, &vec![CircleValue::ZERO; rd.rank()])
    }

    pub fn rep(&self) -> &WeightedRep {
        &self.rep
    }

    pub fn tau(&self) -> &TauTuple {
        &self.tau
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn weights(&self) -> &[Weight] {
        self.rep.weights()
    }

    pub fn c(&self, i: usize) -> &CycloMatrix {
        &self.c[i]
    }

    pub fn cinv(&self, i: usize) -> &CycloMatrix {
        &self.cinv[i]
    }

    /// `C_i` commutes with `E_j`, `F_j`, `K_j` and is invertible.
    pub fn check_central(&self) -> std::result::Result<(), RelationFailure> {
        let g = self.rep.generators();
        let id: CycloMatrix = Matrix::identity(self.dim());
        let r = self.c.len();
        for i in 0..r {
            if &self.c[i] * &self.cinv[i] != id {
                return Err(RelationFailure { relation: "C_i C_i^-1 = 1".into(), i: i + 1, j: i + 1 });
            }
            for j in 0..r {
                for (name, x) in [("E", &g.e[j]), ("F", &g.f[j]), ("K", &g.k[j]), ("C", &self.c[j])] {
                    if !self.c[i].commutator(x).is_zero() {
                        return Err(RelationFailure { relation: format!("[C_i, {name}_j] = 0"), i: i + 1, j: j + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// `C_i` acts on each weight space by `⟨τ_i, χ⟩`.
    pub fn is_tau_admissible(&self) -> bool {
        TauRep::new(self.rep.clone(), &self.tau).map(|t| t.c == self.c).unwrap_or(false)
    }

    /// Relations of `U_q(g)` plus centrality of the `C_i`.
    pub fn check_relations(&self) -> std::result::Result<(), RelationFailure> {
        super::rep::check_relations(&self.rep)?;
        self.check_central()
    }
}

impl fmt::Debug for TauRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TauRep({:?}, τ = {:?})", self.rep, self.tau)
    }
}

/// `V ⊗ W` through the twisted coproduct.
pub fn twisted_tensor(v: &TauRep, w: &TauRep) -> Result<TauRep> {
    twisted_tensor_with(v, w, FCoproduct::Conjugated)
}

pub fn twisted_tensor_with(v: &TauRep, w: &TauRep, variant: FCoproduct) -> Result<TauRep> {
    let (a, b) = (&v.rep, &w.rep);
    same_setting(a.root_datum(), a.q(), b.root_datum(), b.q())?;
    if v.tau != w.tau {
        return Err(Error::Mismatch("the two representations use different τ".into()));
    }
    let (ga, gb) = (a.generators(), b.generators());
    let ia: CycloMatrix = Matrix::identity(a.dim());
    let r = a.root_datum().rank();
    let f = (0..r)
        .map(|i| match variant {
            FCoproduct::Conjugated => &ga.f[i].kron(&(&gb.kinv[i] * &w.cinv[i])) + &ia.kron(&gb.f[i]),
            FCoproduct::Naive => &ga.f[i].kron(&gb.kinv[i]) + &v.cinv[i].kron(&gb.f[i]),
        })
        .collect();
    let gens = Generators {
        e: (0..r).map(|i| &ga.e[i].kron(&w.c[i]) + &ga.k[i].kron(&gb.e[i])).collect(),
        f,
        k: (0..r).map(|i| ga.k[i].kron(&gb.k[i])).collect(),
        kinv: (0..r).map(|i| ga.kinv[i].kron(&gb.kinv[i])).collect(),
    };
    let rep = WeightedRep::from_parts(a.root_datum(), a.q().clone(), tensor_weights(a.weights(), b.weights()), gens);
    Ok(TauRep {
        rep,
        tau: v.tau.clone(),
        c: (0..r).map(|i| v.c[i].kron(&w.c[i])).collect(),
        cinv: (0..r).map(|i| v.cinv[i].kron(&w.cinv[i])).collect(),
    })
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub holds: bool,
    pub witness: Option<String>,
}

impl AxiomResult {
    fn ok() -> Self {
        AxiomResult { holds: true, witness: None }
    }

    fn fail(w: impl Into<String>) -> Self {
        AxiomResult { holds: false, witness: Some(w.into()) }
    }

    fn and(self, other: AxiomResult) -> AxiomResult {
        if self.holds {
            other
        } else {
            self
        }
    }
}

/// Antipode matrices found on a representation.
#[derive(Clone, Debug)]
pub struct AntipodeMatrices {
    pub e: Vec<CycloMatrix>,
    pub f: Vec<CycloMatrix>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    /// `Δ̂` respects the relations on `V⊗W` and `(V⊗W)⊗U`.
    pub algebra_map: AxiomResult,
    pub coassociativity: AxiomResult,
    /// `ε̂ ⊗ ι` and `ι ⊗ ε̂` give back `V`.
    pub counit: AxiomResult,
    /// Slotting `ε̂(C_i) = ζ ≠ 1` breaks the counit axiom.
    pub counit_forced: bool,
    pub antipode: AxiomResult,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.algebra_map.holds && self.coassociativity.holds && self.counit.holds && self.counit_forced && self.antipode.holds
    }
}

fn relations_result(label: &str, t: &TauRep) -> AxiomResult {
    match t.check_relations() {
        Ok(()) if t.is_tau_admissible() => AxiomResult::ok(),
        Ok(()) => AxiomResult::fail(format!("{label}: C_i is not ⟨τ_i, χ⟩ on weight spaces")),
        Err(e) => AxiomResult::fail(format!("{label}: {e}")),
    }
}

fn compare(label: &str, x: &TauRep, y: &TauRep) -> AxiomResult {
    let (gx, gy) = (x.rep.generators(), y.rep.generators());
    let r = gx.e.len();
    for i in 0..r {
        for (name, a, b) in [
            ("E", &gx.e[i], &gy.e[i]),
            ("F", &gx.f[i], &gy.f[i]),
            ("K", &gx.k[i], &gy.k[i]),
            ("C", &x.c[i], &y.c[i]),
        ] {
            if a.rows() != b.rows() {
                return AxiomResult::fail(format!("{label}: dimensions differ"));
            }
            if let Some((p, q)) = a.first_difference(b) {
                return AxiomResult::fail(format!(
                    "{label}: {name}_{} differs at ({}, {}): {} vs {}",
                    i + 1,
                    p + 1,
                    q + 1,
                    a.get(p, q),
                    b.get(p, q)
                ));
            }
        }
    }
    AxiomResult::ok()
}

/// Solves `S(E_i) C_i + S(K_i) E_i = 0` and `S(F_i) K_i^{-1} C_i^{-1} + F_i = 0`
/// for `S(E_i)`, `S(F_i)` with `S(K_i) = K_i^{-1}`, `S(C_i) = C_i^{-1}`, then
/// checks the other side of the axiom and that the transposed matrices satisfy
/// the relations (so `S` is an anti-homomorphism).
pub fn antipode_check(v: &TauRep) -> (AxiomResult, AntipodeMatrices) {
    let g = v.rep.generators();
    let r = g.e.len();
    let minus = Cyclo::from_int(-1);
    let se: Vec<CycloMatrix> = (0..r).map(|i| (&(&g.kinv[i] * &g.e[i]) * &v.cinv[i]).scale(&minus)).collect();
    let sf: Vec<CycloMatrix> = (0..r).map(|i| (&(&g.f[i] * &g.k[i]) * &v.c[i]).scale(&minus)).collect();
    let mats = AntipodeMatrices { e: se.clone(), f: sf.clone() };
    for i in 0..r {
        if !(&(&se[i] * &v.c[i]) + &(&g.kinv[i] * &g.e[i])).is_zero() {
            return (AxiomResult::fail(format!("S(E_{0}) C_{0} + S(K_{0}) E_{0} ≠ 0", i + 1)), mats);
        }
        if !(&(&g.e[i] * &v.cinv[i]) + &(&g.k[i] * &se[i])).is_zero() {
            return (AxiomResult::fail(format!("E_{0} S(C_{0}) + K_{0} S(E_{0}) ≠ 0", i + 1)), mats);
        }
        let kc = &g.kinv[i] * &v.cinv[i];
        if !(&(&sf[i] * &kc) + &g.f[i]).is_zero() {
            return (AxiomResult::fail(format!("S(F_{0}) K_{0}^-1 C_{0}^-1 + F_{0} ≠ 0", i + 1)), mats);
        }
        let skc = &g.k[i] * &v.c[i];
        if !(&(&g.f[i] * &skc) + &sf[i]).is_zero() {
            return (AxiomResult::fail(format!("F_{0} S(K_{0}^-1 C_{0}^-1) + S(F_{0}) ≠ 0", i + 1)), mats);
        }
    }
    let opposite = Generators {
        e: se.iter().map(|m| m.transpose()).collect(),
        f: sf.iter().map(|m| m.transpose()).collect(),
        k: g.kinv.iter().map(|m| m.transpose()).collect(),
        kinv: g.k.iter().map(|m| m.transpose()).collect(),
    };
    match check_relations_for(v.rep.root_datum(), v.rep.q(), &opposite) {
        Ok(()) => (AxiomResult::ok(), mats),
        Err(e) => (AxiomResult::fail(format!("S is not an anti-homomorphism: {e}")), mats),
    }
}

/// Hopf axioms of `Ũ_q(g)` with the twisted coproduct, checked on `V`, `W`, `U`.
pub fn hopf_check(v: &TauRep, w: &TauRep, u: &TauRep) -> Result<HopfReport> {
    hopf_check_with(v, w, u, FCoproduct::Conjugated)
}

pub fn hopf_check_with(v: &TauRep, w: &TauRep, u: &TauRep, variant: FCoproduct) -> Result<HopfReport> {
    let vw = twisted_tensor_with(v, w, variant)?;
    let vw_u = twisted_tensor_with(&vw, u, variant)?;
    let wu = twisted_tensor_with(w, u, variant)?;
    let v_wu = twisted_tensor_with(v, &wu, variant)?;

    let algebra_map = relations_result("V⊗W", &vw).and(relations_result("(V⊗W)⊗U", &vw_u));
    let coassociativity = compare("(V⊗W)⊗U vs V⊗(W⊗U)", &vw_u, &v_wu);

    let rd = v.rep.root_datum();
    let q = v.rep.q().clone();
    let eps = TauRep::counit(rd, q.clone(), &v.tau)?;
    let counit = compare("ε⊗V vs V", &twisted_tensor_with(&eps, v, variant)?, v)
        .and(compare("V⊗ε vs V", &twisted_tensor_with(v, &eps, variant)?, v));

    // any other value of ε̂(C_i) must break the axiom on a representation where E_i ≠ 0
    let mut counit_forced = true;
    for i in 0..rd.rank() {
        if v.rep.e(i).is_zero() {
            continue;
        }
        for zeta in [CircleValue::new(1, 2), CircleValue::new(1, 3), CircleValue::new(1, 4)] {
            let mut vals = vec![CircleValue::ZERO; rd.rank()];
            vals[i] = zeta;
            let other = TauRep::scalar(rd, q.clone(), &v.tau, &vals)?;
            if compare("", &twisted_tensor_with(v, &other, variant)?, v).holds {
                counit_forced = false;
            }
        }
    }

    let mut antipode = AxiomResult::ok();
    for (name, t) in [("V", v), ("W", w), ("U", u), ("V⊗W", &vw)] {
        let (res, _) = antipode_check(t);
        if !res.holds {
            antipode = AxiomResult::fail(format!("{name}: {}", res.witness.unwrap_or_default()));
            break;
        }
    }
    Ok(HopfReport { algebra_map, coassociativity, counit, counit_forced, antipode })
}

/// Conjugates the untwisted `Δ_q` action on `V⊗W` by the diagonal operator
/// `f(λ, μ)` and compares with `twisted_tensor` on `E_i`, `F_i`, `K_i`.
pub fn delta_f_comparison(v: &TauRep, w: &TauRep, reps: Option<Vec<Weight>>) -> Result<AxiomResult> {
    let tau = v.tau.clone();
    let rd = v.rep.root_datum();
    let f = f_from_tau(rd, &tau, reps)?;
    let twisted = twisted_tensor(v, w)?;
    let plain = v.rep.tensor(&w.rep)?;
    let mut fd = Vec::with_capacity(plain.dim());
    let mut fdinv = Vec::with_capacity(plain.dim());
    for a in v.weights() {
        for b in w.weights() {
            let x = f.eval(a, b);
            fd.push(circle(x));
            fdinv.push(circle(-x));
        }
    }
    let (fm, fminv): (CycloMatrix, CycloMatrix) = (Matrix::diagonal(fd), Matrix::diagonal(fdinv));
    let conj = |m: &CycloMatrix| &(&fm * m) * &fminv;
    let g = plain.generators();
    let gens = Generators {
        e: g.e.iter().map(conj).collect(),
        f: g.f.iter().map(conj).collect(),
        k: g.k.iter().map(conj).collect(),
        kinv: g.kinv.iter().map(conj).collect(),
    };
    let conjugated = TauRep {
        rep: WeightedRep::from_parts(rd, plain.q().clone(), plain.weights().to_vec(), gens),
        tau: tau.clone(),
        c: twisted.c.clone(),
        cinv: twisted.cinv.clone(),
    };
    debug_assert!(fm.is_diagonal() && (&fm * &fminv) == Matrix::identity(plain.dim()));
    Ok(compare("f Δ_q f* vs Δ̂", &conjugated, &twisted))
}

/// Hopf checks for `SU(n)` on `V = C^n`, `W = Λ^{n-1} C^n` and `U = V`.
#[derive(Clone, Debug, Serialize)]
pub struct TypeAHopfReport {
    pub n: usize,
    pub q: String,
    pub tau: Vec<i64>,
    pub hopf: HopfReport,
    /// `f Δ_q(·) f*` against `Δ̂` on `V⊗W` and on `V⊗V`.
    pub delta_f: AxiomResult,
}

impl TypeAHopfReport {
    pub fn all_pass(&self) -> bool {
        self.hopf.all_pass() && self.delta_f.holds
    }
}

pub fn type_a_hopf_suite(n: usize, q: &num_rational::BigRational, tau_exps: &[i64]) -> Result<TypeAHopfReport> {
    let rd = RootDatum::type_a(n)?;
    let tau = TauTuple::su_n(&rd, tau_exps)?;
    let v = TauRep::new(super::rep::fundamental_rep(n, q.clone())?, &tau)?;
    let w = TauRep::new(super::rep::wedge_rep(n, n - 1, q.clone())?, &tau)?;
    let hopf = hopf_check(&v, &w, &v)?;
    let delta_f = delta_f_comparison(&v, &w, None)?.and(delta_f_comparison(&v, &v, None)?);
    Ok(TypeAHopfReport { n, q: q.to_string(), tau: tau_exps.iter().map(|t| t.rem_euclid(n as i64)).collect(), hopf, delta_f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgroup::rep::{fundamental_rep, wedge_rep};
    use num_rational::BigRational;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn a1_minus(qq: BigRational) -> (RootDatum, TauTuple, TauRep) {
        let rd = RootDatum::type_a(2).unwrap();
        let tau = TauTuple::su_n(&rd, &[1]).unwrap();
        let v = TauRep::new(fundamental_rep(2, qq).unwrap(), &tau).unwrap();
        (rd, tau, v)
    }

    #[test]
    fn e_on_e2_e2() {
        let (_, _, v) = a1_minus(q(2, 1));
        let t = twisted_tensor(&v, &v).unwrap();
        // basis e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2
        let e = t.rep().e(0);
        assert_eq!(e.get(1, 3), &Cyclo::from_int(-1));
        assert_eq!(e.get(2, 3), &Cyclo::from_rational(q(1, 2)));
        assert!(e.get(0, 3).is_zero());
        assert_eq!(t.weights()[3], vec![-2]);
    }

    #[test]
    fn trivial_tau_reduces_to_plain_coproduct() {
        let rd = RootDatum::type_a(3).unwrap();
        let tau = TauTuple::trivial(&rd).unwrap();
        let v = TauRep::new(fundamental_rep(3, q(2, 1)).unwrap(), &tau).unwrap();
        let w = TauRep::new(wedge_rep(3, 2, q(2, 1)).unwrap(), &tau).unwrap();
        let t = twisted_tensor(&v, &w).unwrap();
        assert_eq!(t.rep(), &v.rep().tensor(w.rep()).unwrap());
    }

    #[test]
    fn hopf_a1_minus_one() {
        let (_, _, v) = a1_minus(q(2, 1));
        let rep = hopf_check(&v, &v, &v).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert!(delta_f_comparison(&v, &v, None).unwrap().holds);
    }

    #[test]
    fn naive_f_coproduct_fails() {
        let (_, _, v) = a1_minus(q(2, 1));
        let rep = hopf_check_with(&v, &v, &v, FCoproduct::Naive).unwrap();
        assert!(!rep.algebra_map.holds);
        assert!(rep.algebra_map.witness.unwrap().contains("[E_i, F_j]"));
    }

    #[test]
    fn hopf_a2() {
        let rd = RootDatum::type_a(3).unwrap();
        let qq = q(3, 2);
        let tau = TauTuple::su_n(&rd, &[1, 2]).unwrap();
        let v = TauRep::new(fundamental_rep(3, qq.clone()).unwrap(), &tau).unwrap();
        let w = TauRep::new(wedge_rep(3, 2, qq).unwrap(), &tau).unwrap();
        let rep = hopf_check(&v, &w, &v).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert!(delta_f_comparison(&v, &w, None).unwrap().holds);
    }

    #[test]
    fn delta_f_transversal_independent() {
        let rd = RootDatum::type_a(3).unwrap();
        let tau = TauTuple::su_n(&rd, &[2, 1]).unwrap();
        let v = TauRep::new(fundamental_rep(3, q(2, 1)).unwrap(), &tau).unwrap();
        let reps = vec![vec![0, 0], vec![3, -1], vec![-1, 3]];
        let c = rd.center_group().unwrap();
        // reorder to enumeration order
        let mut ordered = vec![Vec::new(); 3];
        for r in reps {
            let i = c.index_of(&c.project(&r).unwrap());
            ordered[i] = r;
        }
        assert!(delta_f_comparison(&v, &v, Some(ordered)).unwrap().holds);
    }

    #[test]
    fn central_and_admissible() {
        let rd = RootDatum::type_a(4).unwrap();
        let tau = TauTuple::su_n(&rd, &[1, 2, 3]).unwrap();
        let v = TauRep::new(wedge_rep(4, 2, q(2, 1)).unwrap(), &tau).unwrap();
        assert_eq!(v.check_central(), Ok(()));
        assert!(v.is_tau_admissible());
    }
}
