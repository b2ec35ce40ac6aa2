//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`, and dense matrices over
//! any exact ring.
//!
//! An element is a polynomial in `ζ_n` of degree below `φ(n)`, reduced modulo
//! the cyclotomic polynomial `Φ_n`. Elements of different fields are combined
//! in `Q(ζ_lcm)`. Rationals live in `Q(ζ_1) = Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::abelian::CircleValue;

#[derive(Debug, PartialEq, Eq)]
pub struct CycloRing {
    n: u64,
    // monic Φ_n, lowest coefficient first
    modulus: Vec<BigInt>,
}

impl CycloRing {
    pub fn new(n: u64) -> Arc<Self> {
        assert!(n >= 1);
        Arc::new(CycloRing { n, modulus: cyclotomic_polynomial(n) })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// `φ(n)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        for k in (d..p.len()).rev() {
            let c = std::mem::take(&mut p[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                let m = &self.modulus[i];
                if !m.is_zero() {
                    p[k - d + i] -= &c * BigRational::from_integer(m.clone());
                }
            }
        }
        p.truncate(d);
        p.resize(d, BigRational::zero());
        p
    }
}

/// `Φ_n` with integer coefficients, lowest first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            p = exact_div(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            r[k + i] -= &c * di;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(|x| x.is_zero()));
    q
}

#[derive(Clone)]
pub struct Cyclo {
    ring: Arc<CycloRing>,
    coeffs: Vec<BigRational>,
}

thread_local! {
    static RATIONALS: Arc<CycloRing> = CycloRing::new(1);
}

impl Cyclo {
    pub fn from_rational(q: BigRational) -> Self {
        Cyclo { ring: RATIONALS.with(|r| r.clone()), coeffs: vec![q] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(k.into()))
    }

    /// `ζ_n^k` in `Q(ζ_n)`.
    pub fn root_of_unity(ring: &Arc<CycloRing>, k: i64) -> Self {
        let n = ring.n as i64;
        let k = k.rem_euclid(n) as usize;
        let mut p = vec![BigRational::zero(); k.max(ring.degree()) + 1];
        p[k] = BigRational::one();
        Cyclo { ring: ring.clone(), coeffs: ring.reduce(p) }
    }

    /// `exp(2πi x)` for a circle value `x`, in `Q(ζ_den)`.
    pub fn from_circle(x: CircleValue) -> Self {
        if x.is_zero() {
            return Self::from_int(1);
        }
        Self::root_of_unity(&CycloRing::new(x.denom() as u64), x.numer())
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image in `Q(ζ_m)` for a multiple `m` of the current order.
    pub fn embed(&self, target: &Arc<CycloRing>) -> Self {
        if Arc::ptr_eq(&self.ring, target) || self.ring.n == target.n {
            return Cyclo { ring: target.clone(), coeffs: self.coeffs.clone() };
        }
        assert!(target.n % self.ring.n == 0, "cannot embed Q(ζ_{}) into Q(ζ_{})", self.ring.n, target.n);
        let step = (target.n / self.ring.n) as usize;
        let len = (self.coeffs.len().saturating_sub(1)) * step + 1;
        let mut p = vec![BigRational::zero(); len.max(target.degree())];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i * step] = c.clone();
        }
        Cyclo { ring: target.clone(), coeffs: target.reduce(p) }
    }

    fn align(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        if a.ring.n == b.ring.n {
            return (a.clone(), b.clone());
        }
        if a.ring.n == 1 {
            return (a.embed(&b.ring), b.clone());
        }
        if b.ring.n == 1 {
            return (a.clone(), b.embed(&a.ring));
        }
        let l = a.ring.n.lcm(&b.ring.n);
        let ring = if l == a.ring.n {
            a.ring.clone()
        } else if l == b.ring.n {
            b.ring.clone()
        } else {
            CycloRing::new(l)
        };
        (a.embed(&ring), b.embed(&ring))
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Self::from_int(0)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclo::align(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = Cyclo::align(self, rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclo { ring: a.ring, coeffs }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = Cyclo::align(self, rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Cyclo { ring: a.ring, coeffs }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.ring.n == 1 || rhs.ring.n == 1 {
            let (s, other) = if self.ring.n == 1 { (&self.coeffs[0], rhs) } else { (&rhs.coeffs[0], self) };
            if s.is_zero() {
                return Cyclo { ring: other.ring.clone(), coeffs: vec![BigRational::zero(); other.coeffs.len()] };
            }
            return Cyclo { ring: other.ring.clone(), coeffs: other.coeffs.iter().map(|c| c * s).collect() };
        }
        let (a, b) = Cyclo::align(self, rhs);
        let d = a.coeffs.len();
        let mut p = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        Cyclo { ring: a.ring.clone(), coeffs: a.ring.reduce(p) }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! by_value {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $f(self, rhs: Cyclo) -> Cyclo {
                (&self).$f(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl From<BigRational> for Cyclo {
    fn from(q: BigRational) -> Self {
        Cyclo::from_rational(q)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "z{}", self.ring.n)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exact ring operations used by [`Matrix`].
pub trait Scalar: Clone + PartialEq + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Scalar for BigRational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Scalar for Cyclo {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Dense matrix over an exact ring.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RationalMatrix = Matrix<BigRational>;
pub type CycloMatrix = Matrix<Cyclo>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// Matrix unit `e_{ij}` (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = T::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s.mul_ref(x))
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg_ref())
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a.mul_ref(b));
                        }
                    }
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// First entry where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        (0..self.rows * self.cols).find(|&t| self.data[t] != other.data[t]).map(|t| (t / self.cols, t % self.cols))
    }

    /// Commutator `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut data = vec![T::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        data[idx] = data[idx].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Matrix { rows: self.rows, cols: rhs.cols, data }
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), int(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), int(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), int(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), int(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), int(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), int(&[1, 0, -1, 0, 1]));
        // the first one with a coefficient other than 0, ±1
        assert!(cyclotomic_polynomial(105).contains(&BigInt::from(-2)));
    }

    #[test]
    fn roots_of_unity() {
        for n in 1..=12u64 {
            let r = CycloRing::new(n);
            let z = Cyclo::root_of_unity(&r, 1);
            assert_eq!(z.pow(n as u32), Cyclo::one(), "ζ_{n}^{n}");
            for k in 1..n {
                assert_ne!(z.pow(k as u32), Cyclo::one(), "ζ_{n}^{k}");
            }
            // 1 + ζ + ... + ζ^{n-1} = 0 for n > 1
            let s = (0..n).fold(Cyclo::zero(), |acc, k| &acc + &z.pow(k as u32));
            assert_eq!(s.is_zero(), n > 1);
        }
    }

    #[test]
    fn mixed_orders_embed_into_lcm() {
        let a = Cyclo::from_circle(CircleValue::new(1, 2));
        let b = Cyclo::from_circle(CircleValue::new(1, 3));
        let c = Cyclo::from_circle(CircleValue::new(5, 6));
        assert_eq!(&a * &b, c);
        assert_eq!(a, Cyclo::from_int(-1));
        let i = Cyclo::from_circle(CircleValue::new(1, 4));
        assert_eq!(&i * &i, Cyclo::from_int(-1));
    }

    #[test]
    fn matrix_algebra() {
        let a: RationalMatrix = Matrix::unit(2, 0, 1);
        let b: RationalMatrix = Matrix::unit(2, 1, 0);
        let h = a.commutator(&b);
        assert_eq!(
            h,
            Matrix::diagonal(vec![BigRational::one(), -BigRational::one()])
        );
        let k = a.kron(&Matrix::identity(3));
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert!((&k * &k).is_zero());
    }
}
