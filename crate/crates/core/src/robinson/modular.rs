//! Linear systems over `Z/e` for small `e`, by diagonalising with
//! determinant-one row and column operations reduced mod `e`.

fn bezout(a: i64, b: i64) -> (i64, i64, i64) {
    // returns (g, s, t) with s·a + t·b = g ≥ 0
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Dense `rows × cols` system `a·x ≡ b (mod e)` with entries in `[0, e)`.
#[derive(Clone, Debug)]
pub(crate) struct ModSystem {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub e: i64,
}

impl ModSystem {
    pub fn new(rows: usize, cols: usize, e: i64) -> Self {
        ModSystem {
            rows,
            cols,
            a: vec![0; rows * cols],
            b: vec![0; rows],
            e,
        }
    }

    fn at(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.cols + j]
    }

    /// `row_i, row_k ← (s·row_i + t·row_k, u·row_i + v·row_k)`.
    fn row_op(&mut self, i: usize, k: usize, [s, t, u, v]: [i64; 4]) {
        let e = self.e;
        for j in 0..self.cols {
            let (x, y) = (self.at(i, j), self.at(k, j));
            self.a[i * self.cols + j] = (s * x + t * y).rem_euclid(e);
            self.a[k * self.cols + j] = (u * x + v * y).rem_euclid(e);
        }
        let (x, y) = (self.b[i], self.b[k]);
        self.b[i] = (s * x + t * y).rem_euclid(e);
        self.b[k] = (u * x + v * y).rem_euclid(e);
    }

    fn col_op(&mut self, j: usize, k: usize, [s, t, u, v]: [i64; 4], basis: &mut [i64]) {
        let e = self.e;
        let n = self.cols;
        for i in 0..self.rows {
            let (x, y) = (self.at(i, j), self.at(i, k));
            self.a[i * n + j] = (s * x + t * y).rem_euclid(e);
            self.a[i * n + k] = (u * x + v * y).rem_euclid(e);
        }
        for i in 0..n {
            let (x, y) = (basis[i * n + j], basis[i * n + k]);
            basis[i * n + j] = (s * x + t * y).rem_euclid(e);
            basis[i * n + k] = (u * x + v * y).rem_euclid(e);
        }
    }

    /// Determinant-one 2×2 step sending `(p, q)` to `(gcd, 0)`; the pivot
    /// is left alone when it already divides `q`, so the sweep terminates.
    fn eliminator(p: i64, q: i64) -> [i64; 4] {
        if q % p == 0 {
            return [1, 0, -q / p, 1];
        }
        let (g, s, u) = bezout(p, q);
        [s, u, -q / g, p / g]
    }

    /// Some solution in `[0, e)^cols`, or `None`.
    pub fn solve(mut self) -> Option<Vec<i64>> {
        let (m, n, e) = (self.rows, self.cols, self.e);
        let mut basis = vec![0i64; n * n];
        for i in 0..n {
            basis[i * n + i] = 1 % e;
        }
        let mut t = 0;
        while t < m.min(n) {
            let Some(pos) = (t * n..m * n).find(|&p| p % n >= t && self.a[p] != 0) else {
                break;
            };
            let (pi, pj) = (pos / n, pos % n);
            if pi != t {
                self.row_op(t, pi, [0, 1, 1, 0]);
            }
            if pj != t {
                self.col_op(t, pj, [0, 1, 1, 0], &mut basis);
            }
            loop {
                let mut dirty = false;
                for i in t + 1..m {
                    let q = self.at(i, t);
                    if q != 0 {
                        let op = Self::eliminator(self.at(t, t), q);
                        self.row_op(t, i, op);
                    }
                }
                for j in t + 1..n {
                    let q = self.at(t, j);
                    if q != 0 {
                        let op = Self::eliminator(self.at(t, t), q);
                        self.col_op(t, j, op, &mut basis);
                        dirty = true;
                    }
                }
                if !dirty || (t + 1..m).all(|i| self.at(i, t) == 0) {
                    break;
                }
            }
            t += 1;
        }
        let mut y = vec![0i64; n];
        for i in 0..m {
            let d = if i < t { self.at(i, i) } else { 0 };
            let (g, s, _) = bezout(d, e);
            if self.b[i] % g != 0 {
                return None;
            }
            if i < t {
                // d·y ≡ b with g = s·d + (·)·e, so y = s·(b/g)
                y[i] = (s * (self.b[i] / g)).rem_euclid(e);
            }
        }
        let x = (0..n)
            .map(|i| (0..n).map(|j| basis[i * n + j] * y[j]).sum::<i64>().rem_euclid(e))
            .collect();
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(sys: &ModSystem) -> bool {
        let n = sys.cols;
        let total = (sys.e as usize).pow(n as u32);
        (0..total).any(|mut code| {
            let x: Vec<i64> = (0..n)
                .map(|_| {
                    let v = (code % sys.e as usize) as i64;
                    code /= sys.e as usize;
                    v
                })
                .collect();
            satisfies(sys, &x)
        })
    }

    fn satisfies(sys: &ModSystem, x: &[i64]) -> bool {
        (0..sys.rows).all(|i| {
            let l: i64 = (0..sys.cols).map(|j| sys.a[i * sys.cols + j] * x[j]).sum();
            (l - sys.b[i]).rem_euclid(sys.e) == 0
        })
    }

    #[test]
    fn agrees_with_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..3000 {
            let e = rng.gen_range(1..=12);
            let rows = rng.gen_range(0..=4);
            let cols = rng.gen_range(0..=3);
            let mut sys = ModSystem::new(rows, cols, e);
            for v in sys.a.iter_mut() {
                *v = rng.gen_range(0..e);
            }
            for v in sys.b.iter_mut() {
                *v = rng.gen_range(0..e);
            }
            let found = sys.clone().solve();
            if let Some(x) = &found {
                assert!(satisfies(&sys, x), "{sys:?} {x:?}");
            }
            assert_eq!(found.is_some(), brute(&sys), "{sys:?}");
        }
    }
}
