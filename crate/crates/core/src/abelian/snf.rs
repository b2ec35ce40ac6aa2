//! Smith normal form over the integers.
//!
//! Pivoting always picks a nonzero entry of minimal absolute value in the
//! remaining block (first in row-major order on ties), so the transforms are
//! deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::circle::CircleValue;
use super::intmat::IntMatrix;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `d_0, ..., d_{min(rows, cols) - 1}` (zeros included).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let mut t = Trackers {
        u: Some(IntMatrix::identity(m.rows())),
        u_inv: Some(IntMatrix::identity(m.rows())),
        v: Some(IntMatrix::identity(m.cols())),
        v_inv: Some(IntMatrix::identity(m.cols())),
        rhs: None,
    };
    let mut d = m.clone();
    reduce(&mut d, &mut t);
    SmithDecomposition {
        u: t.u.unwrap(),
        u_inv: t.u_inv.unwrap(),
        d,
        v: t.v.unwrap(),
        v_inv: t.v_inv.unwrap(),
    }
}

/// Only the invariant factors, without transforms.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut t = Trackers::default();
    let mut d = m.clone();
    reduce(&mut d, &mut t);
    (0..d.rows().min(d.cols())).map(|i| d[(i, i)].clone()).collect()
}

/// Solves `m * x = rhs` for `x` with entries in `R/Z`, where `m` is an integer
/// matrix. Returns `None` if no solution exists. The row transform is applied
/// to `rhs` on the fly, so tall systems never materialize the `rows x rows`
/// transform.
pub fn solve_mod_one(m: &IntMatrix, rhs: &[CircleValue]) -> Option<Vec<CircleValue>> {
    assert_eq!(m.rows(), rhs.len());
    let mut t = Trackers {
        v: Some(IntMatrix::identity(m.cols())),
        rhs: Some(rhs.to_vec()),
        ..Default::default()
    };
    let mut d = m.clone();
    reduce(&mut d, &mut t);
    let rhs = t.rhs.unwrap();
    let v = t.v.unwrap();
    let k = d.rows().min(d.cols());
    let mut h = vec![CircleValue::ZERO; m.cols()];
    for (i, r) in rhs.iter().enumerate() {
        let di = if i < k { d[(i, i)].clone() } else { BigInt::zero() };
        if di.is_zero() {
            if !r.is_zero() {
                return None;
            }
        } else {
            let di = di.to_i64().expect("invariant factor too large");
            h[i] = r.principal_root(di);
        }
    }
    let x = (0..m.cols())
        .map(|j| (0..m.cols()).map(|i| scale(h[i], &v[(j, i)])).sum())
        .collect();
    Some(x)
}

fn scale(x: CircleValue, c: &BigInt) -> CircleValue {
    if x.is_zero() || c.is_zero() {
        return CircleValue::ZERO;
    }
    let k = c.mod_floor(&BigInt::from(x.denom())).to_i64().unwrap();
    x.pow(k)
}

#[derive(Default)]
struct Trackers {
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
    rhs: Option<Vec<CircleValue>>,
}

impl Trackers {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
        if let Some(r) = &mut self.rhs {
            r.swap(i, j);
        }
    }

    fn add_row(&mut self, src: usize, dst: usize, c: &BigInt) {
        if let Some(u) = &mut self.u {
            u.add_row_multiple(src, dst, c);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.add_col_multiple(dst, src, &-c);
        }
        if let Some(r) = &mut self.rhs {
            let add = scale(r[src], c);
            r[dst] += add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i);
        }
        if let Some(r) = &mut self.rhs {
            r[i] = -r[i];
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(i, j);
        }
    }

    fn add_col(&mut self, src: usize, dst: usize, c: &BigInt) {
        if let Some(v) = &mut self.v {
            v.add_col_multiple(src, dst, c);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.add_row_multiple(dst, src, &-c);
        }
    }
}

fn find_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d[(bi, bj)].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn reduce(d: &mut IntMatrix, tr: &mut Trackers) {
    let steps = d.rows().min(d.cols());
    for t in 0..steps {
        loop {
            let Some((pi, pj)) = find_pivot(d, t) else {
                return;
            };
            d.swap_rows(t, pi);
            tr.swap_rows(t, pi);
            d.swap_cols(t, pj);
            tr.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..d.rows() {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(t, i, &q);
                tr.add_row(t, i, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..d.cols() {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(t, j, &q);
                tr.add_col(t, j, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pull an offending row into the pivot row
            let offending = (t + 1..d.rows())
                .find(|&i| (t + 1..d.cols()).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(i, t, &one);
                    tr.add_row(i, t, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            tr.negate_row(t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d, "U M V != D for {m:?}");
        assert!(s.d.is_diagonal());
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(m.cols()));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            assert!(!w[0].is_zero() && w[1].is_multiple_of(&w[0]), "divisibility fails: {diag:?}");
        }
        assert!(diag.iter().all(|x| !x.is_negative()));
        s
    }

    fn diag_i64(s: &SmithDecomposition) -> Vec<i64> {
        s.diagonal().iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn identity_and_already_normal() {
        assert_eq!(diag_i64(&check(&IntMatrix::identity(2))), vec![1, 1]);
        assert_eq!(diag_i64(&check(&IntMatrix::diagonal(&[2, 2]))), vec![2, 2]);
    }

    #[test]
    fn hand_reduced_example() {
        // [[2,1],[0,2]]: gcd of entries is 1 and |det| = 4, so diag(1, 4)
        let m = IntMatrix::from_rows(&[[2, 1], [0, 2]]);
        assert_eq!(diag_i64(&check(&m)), vec![1, 4]);
    }

    #[test]
    fn non_divisible_diagonal_is_fixed() {
        let m = IntMatrix::diagonal(&[4, 6]);
        assert_eq!(diag_i64(&check(&m)), vec![2, 12]);
    }

    #[test]
    fn empty_and_rectangular() {
        let e = IntMatrix::zeros(0, 0);
        let s = smith_normal_form(&e);
        assert!(s.d.is_empty());
        let r = IntMatrix::from_rows(&[[2, 4, 6], [4, 8, 13]]);
        assert_eq!(diag_i64(&check(&r)), vec![1, 2]);
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(diag_i64(&check(&z)), vec![0, 0]);
    }

    #[test]
    fn solve_mod_one_finds_preimage() {
        let m = IntMatrix::from_rows(&[[2, 1], [0, 3], [1, 1]]);
        let x = [CircleValue::new(1, 5), CircleValue::new(2, 7)];
        let rhs: Vec<CircleValue> = (0..3)
            .map(|i| x[0].pow(m.get_i64(i, 0)) + x[1].pow(m.get_i64(i, 1)))
            .collect();
        let sol = solve_mod_one(&m, &rhs).unwrap();
        for i in 0..3 {
            assert_eq!(sol[0].pow(m.get_i64(i, 0)) + sol[1].pow(m.get_i64(i, 1)), rhs[i]);
        }
        // 2x = 1/2 and x = 0 is inconsistent
        let bad = IntMatrix::from_rows(&[[2], [1]]);
        assert!(solve_mod_one(&bad, &[CircleValue::new(1, 2), CircleValue::ZERO]).is_none());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn round_trip_random(rows in 1usize..=8, cols in 1usize..=8, seed in proptest::collection::vec(-10_000i64..=10_000, 64)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 8 + j]).collect()).collect();
            check(&IntMatrix::from_rows(&data));
        }

        #[test]
        fn round_trip_sparse_small(rows in 1usize..=6, cols in 1usize..=6, seed in proptest::collection::vec(-3i64..=3, 36)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 6 + j]).collect()).collect();
            check(&IntMatrix::from_rows(&data));
        }
    }
}
