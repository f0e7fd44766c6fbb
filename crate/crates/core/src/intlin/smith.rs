//! Smith normal form with explicit unimodular transforms.
//!
//! The elimination runs on `i128` first with every operation checked; the
//! first overflow abandons that attempt and the whole reduction is redone on
//! `BigInt`. Both passes execute the same pivot sequence, so results do not
//! depend on which one finished.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntMatrix;

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | … | d_rank` positive and every later diagonal entry zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
    /// `U⁻¹`, tracked during the elimination.
    pub u_inverse: IntMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries `d_1, …, d_rank`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

trait Scalar: Clone + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// Euclidean quotient and remainder (`0 ≤ r < |b|`).
    fn div_rem_euclid(&self, b: &Self) -> (Self, Self);
    /// `self - q * b`.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add(&self, b: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn div_rem_euclid(&self, b: &Self) -> (Self, Self) {
        (self.div_euclid(*b), self.rem_euclid(*b))
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn div_rem_euclid(&self, b: &Self) -> (Self, Self) {
        let (q, r) = self.div_mod_floor(b);
        if Signed::is_negative(&r) {
            // only reachable for negative b
            (q + 1, r - b)
        } else {
            (q, r)
        }
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

struct Work<T> {
    m: usize,
    n: usize,
    d: Vec<T>,
    u: Vec<T>,
    v: Vec<T>,
    ui: Vec<T>,
}

impl<T: Scalar> Work<T> {
    fn new(m: usize, n: usize, d: Vec<T>) -> Self {
        let ident = |k: usize| {
            let mut x = vec![T::zero(); k * k];
            for i in 0..k {
                x[i * k + i] = T::one();
            }
            x
        };
        Work {
            m,
            n,
            d,
            u: ident(m),
            v: ident(n),
            ui: ident(m),
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> &T {
        &self.d[i * self.n + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.d.swap(a * self.n + j, b * self.n + j);
        }
        for j in 0..self.m {
            self.u.swap(a * self.m + j, b * self.m + j);
            self.ui.swap(j * self.m + a, j * self.m + b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.m {
            self.d.swap(i * self.n + a, i * self.n + b);
        }
        for i in 0..self.n {
            self.v.swap(i * self.n + a, i * self.n + b);
        }
    }

    /// row_target -= q * row_src
    fn row_sub(&mut self, target: usize, src: usize, q: &T) -> Option<()> {
        for j in 0..self.n {
            let s = self.d[src * self.n + j].clone();
            if !s.is_zero() {
                let t = &mut self.d[target * self.n + j];
                *t = t.sub_mul(q, &s)?;
            }
        }
        for j in 0..self.m {
            let s = self.u[src * self.m + j].clone();
            if !s.is_zero() {
                let t = &mut self.u[target * self.m + j];
                *t = t.sub_mul(q, &s)?;
            }
        }
        // U⁻¹: col_src += q * col_target
        let nq = q.neg()?;
        for i in 0..self.m {
            let s = self.ui[i * self.m + target].clone();
            if !s.is_zero() {
                let t = &mut self.ui[i * self.m + src];
                *t = t.sub_mul(&nq, &s)?;
            }
        }
        Some(())
    }

    /// col_target -= q * col_src
    fn col_sub(&mut self, target: usize, src: usize, q: &T) -> Option<()> {
        for i in 0..self.m {
            let s = self.d[i * self.n + src].clone();
            if !s.is_zero() {
                let t = &mut self.d[i * self.n + target];
                *t = t.sub_mul(q, &s)?;
            }
        }
        for i in 0..self.n {
            let s = self.v[i * self.n + src].clone();
            if !s.is_zero() {
                let t = &mut self.v[i * self.n + target];
                *t = t.sub_mul(q, &s)?;
            }
        }
        Some(())
    }

    fn row_add(&mut self, target: usize, src: usize) -> Option<()> {
        for j in 0..self.n {
            let s = self.d[src * self.n + j].clone();
            let t = &mut self.d[target * self.n + j];
            *t = t.add(&s)?;
        }
        for j in 0..self.m {
            let s = self.u[src * self.m + j].clone();
            let t = &mut self.u[target * self.m + j];
            *t = t.add(&s)?;
        }
        for i in 0..self.m {
            let s = self.ui[i * self.m + target].clone();
            let t = &mut self.ui[i * self.m + src];
            *t = t.sub_mul(&T::one(), &s)?;
        }
        Some(())
    }

    fn negate_row(&mut self, r: usize) -> Option<()> {
        for j in 0..self.n {
            let t = &mut self.d[r * self.n + j];
            *t = t.neg()?;
        }
        for j in 0..self.m {
            let t = &mut self.u[r * self.m + j];
            *t = t.neg()?;
            let t = &mut self.ui[j * self.m + r];
            *t = t.neg()?;
        }
        Some(())
    }

    /// Smallest nonzero |entry| in the trailing block starting at (t, t).
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = self.at(i, j);
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs_lt(self.at(bi, bj))) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) -> Option<usize> {
        let mut t = 0;
        while t < self.m.min(self.n) {
            let Some((pi, pj)) = self.smallest_in_block(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.m {
                    if !self.at(i, t).is_zero() {
                        let (q, r) = self.at(i, t).div_rem_euclid(self.at(t, t));
                        self.row_sub(i, t, &q)?;
                        if !r.is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..self.n {
                    if !self.at(t, j).is_zero() {
                        let (q, r) = self.at(t, j).div_rem_euclid(self.at(t, t));
                        self.col_sub(j, t, &q)?;
                        if !r.is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    // a remainder smaller than the pivot survived; promote it
                    let mut best = (t, t);
                    for i in t + 1..self.m {
                        let x = self.at(i, t);
                        if !x.is_zero() && x.abs_lt(self.at(best.0, best.1)) {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..self.n {
                        let x = self.at(t, j);
                        if !x.is_zero() && x.abs_lt(self.at(best.0, best.1)) {
                            best = (t, j);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                let offender = (t + 1..self.m).find(|&i| {
                    (t + 1..self.n).any(|j| {
                        let x = self.at(i, j);
                        !x.is_zero() && !x.div_rem_euclid(self.at(t, t)).1.is_zero()
                    })
                });
                match offender {
                    Some(i) => self.row_add(t, i)?,
                    None => break,
                }
            }
            if self.at(t, t).is_negative() {
                self.negate_row(t)?;
            }
            t += 1;
        }
        Some(t)
    }
}

fn to_matrix<T: Clone>(rows: usize, cols: usize, data: &[T], conv: impl Fn(&T) -> BigInt) -> IntMatrix {
    IntMatrix::new(rows, cols, data.iter().map(conv).collect()).expect("shape is consistent")
}

fn try_small(a: &IntMatrix) -> Option<SmithDecomposition> {
    let data: Option<Vec<i128>> = a.entries().iter().map(ToPrimitive::to_i128).collect();
    let mut w = Work::new(a.rows(), a.cols(), data?);
    let rank = w.run()?;
    let conv = |x: &i128| BigInt::from(*x);
    Some(SmithDecomposition {
        u: to_matrix(w.m, w.m, &w.u, conv),
        d: to_matrix(w.m, w.n, &w.d, conv),
        v: to_matrix(w.n, w.n, &w.v, conv),
        rank,
        u_inverse: to_matrix(w.m, w.m, &w.ui, conv),
    })
}

/// Computes `U · A · V = D`. Total: every input, including empty ones, has a
/// decomposition.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    if let Some(s) = try_small(a) {
        return s;
    }
    let mut w = Work::new(a.rows(), a.cols(), a.entries().to_vec());
    let rank = w.run().expect("BigInt arithmetic cannot overflow");
    SmithDecomposition {
        u: to_matrix(w.m, w.m, &w.u, Clone::clone),
        d: to_matrix(w.m, w.n, &w.d, Clone::clone),
        v: to_matrix(w.n, w.n, &w.v, Clone::clone),
        rank,
        u_inverse: to_matrix(w.m, w.m, &w.ui, Clone::clone),
    }
}

#[cfg(test)]
mod tests {
    use super::{smith_normal_form, IntMatrix, SmithDecomposition};
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, Zero};

    fn check(a: &IntMatrix, s: &SmithDecomposition) {
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.mul(&s.u_inverse).unwrap(), IntMatrix::identity(a.rows()));
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag = s.diagonal();
        assert!(diag.iter().all(|x| x.is_positive()));
        for w in diag.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        for i in s.rank..s.d.rows().min(s.d.cols()) {
            assert!(s.d[(i, i)].is_zero());
        }
    }

    /// Invariant factors by gcd of k×k minors, the determinantal-divisor
    /// characterisation. Independent of the elimination above.
    fn determinantal_factors(a: &IntMatrix) -> Vec<BigInt> {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let mut divisors = vec![BigInt::from(1)];
        for k in 1..=a.rows().min(a.cols()) {
            let mut g = BigInt::from(0);
            for rs in subsets(a.rows(), k) {
                for cs in subsets(a.cols(), k) {
                    let minor = IntMatrix::from_fn(k, k, |i, j| a[(rs[i], cs[j])].clone());
                    g = g.gcd(&minor.determinant().unwrap());
                }
            }
            if g.is_zero() {
                break;
            }
            divisors.push(g);
        }
        divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
    }

    #[test]
    fn diag_two_three() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.rank, 2);
        assert_eq!(s.diagonal(), determinantal_factors(&a));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMatrix::identity(4);
        let s = smith_normal_form(&a);
        assert_eq!(s.u, a);
        assert_eq!(s.v, a);
        assert_eq!(s.d, a);
    }

    #[test]
    fn zero_matrix() {
        let a = IntMatrix::zeros(2, 3);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.rank, 0);
        assert!(s.d.is_zero());
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let a = IntMatrix::zeros(r, c);
            let s = smith_normal_form(&a);
            check(&a, &s);
            assert_eq!(s.rank, 0);
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big: BigInt = "170141183460469231731687303715884105727".parse().unwrap();
        let a = IntMatrix::new(
            2,
            2,
            vec![big.clone(), &big - 1, BigInt::from(3), BigInt::from(5)],
        )
        .unwrap();
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.diagonal(), determinantal_factors(&a));
    }

    #[test]
    fn matches_determinantal_divisors() {
        let cases = [
            IntMatrix::from_rows(&[vec![4, 6, 8], vec![6, 9, 12]]),
            IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            IntMatrix::from_rows(&[vec![0, 0], vec![0, 5], vec![3, 0]]),
        ];
        for a in &cases {
            let s = smith_normal_form(a);
            check(a, &s);
            assert_eq!(s.diagonal(), determinantal_factors(a), "{a:?}");
        }
    }
}
