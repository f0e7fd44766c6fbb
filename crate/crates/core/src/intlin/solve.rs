use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{smith_normal_form, IntMatrix, SmithDecomposition};
use crate::error::{Error, Result};

/// Basis of the lattice `{x ∈ Z^cols : A·x = 0}`, one basis vector per column.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    column_hermite(&s.v.select_cols(s.rank..a.cols()))
}

/// Basis of the column lattice of `A` (as columns of the result), in
/// column Hermite form.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    column_hermite(a)
}

/// Column Hermite form of the lattice spanned by the columns of `a`, zero
/// columns dropped. Column `k` has its first nonzero entry, positive, in row
/// `p_k` with `p_0 < p_1 < …`, and every other column's entry in row `p_k`
/// lies in `[0, a[p_k, k])`. Keeps bases from the SNF transforms small.
pub fn column_hermite(a: &IntMatrix) -> IntMatrix {
    let rows = a.rows();
    let mut cols = a.columns();
    let mut k = 0;
    for i in 0..rows {
        loop {
            let mut best: Option<usize> = None;
            for j in k..cols.len() {
                if !cols[j][i].is_zero()
                    && best.map_or(true, |b| cols[j][i].abs() < cols[b][i].abs())
                {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            cols.swap(k, b);
            let mut done = true;
            for j in k + 1..cols.len() {
                if cols[j][i].is_zero() {
                    continue;
                }
                let q = cols[j][i].div_floor(&cols[k][i]);
                let (head, tail) = cols.split_at_mut(j);
                axpy(&mut tail[0], &q, &head[k], i);
                if !tail[0][i].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if k == cols.len() || cols[k][i].is_zero() {
            continue;
        }
        if cols[k][i].is_negative() {
            for x in cols[k][i..].iter_mut() {
                *x = -&*x;
            }
        }
        for j in 0..k {
            let q = cols[j][i].div_floor(&cols[k][i]);
            if !q.is_zero() {
                let (head, tail) = cols.split_at_mut(k);
                axpy(&mut head[j], &q, &tail[0], i);
            }
        }
        k += 1;
        if k == cols.len() {
            break;
        }
    }
    cols.truncate(k);
    IntMatrix::from_columns(rows, &cols).expect("column lengths agree")
}

// x -= q·y, where y vanishes above row `from`
fn axpy(x: &mut [BigInt], q: &BigInt, y: &[BigInt], from: usize) {
    for (a, b) in x[from..].iter_mut().zip(&y[from..]) {
        if !b.is_zero() {
            *a -= q * b;
        }
    }
}

/// Integer solution set of `A·x = b`: `particular + span(kernel columns)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSolution {
    pub particular: Vec<BigInt>,
    pub kernel: IntMatrix,
}

/// Solves `A·x = b` over the integers. `Ok(None)` means no integer solution.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Option<IntSolution>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for a system with {} rows",
            b.len(),
            a.rows()
        )));
    }
    let s = smith_normal_form(a);
    solve_with_smith(&s, b)
}

/// [`solve_integer`] against a precomputed decomposition of the system.
pub fn solve_with_smith(s: &SmithDecomposition, b: &[BigInt]) -> Result<Option<IntSolution>> {
    let cols = s.v.rows();
    let ub = s.u.mul_vec(b)?;
    let mut y = vec![BigInt::zero(); cols];
    for (i, c) in ub.iter().enumerate() {
        if i < s.rank {
            let (q, r) = c.div_rem(&s.d[(i, i)]);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !c.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(IntSolution {
        particular: s.v.mul_vec(&y)?,
        kernel: s.v.select_cols(s.rank..cols),
    }))
}

/// `coefficients · x ≡ rhs (mod moduli)` row by row; modulus 0 means an
/// equation over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSystem {
    pub coefficients: IntMatrix,
    pub rhs: Vec<BigInt>,
    pub moduli: Vec<BigInt>,
}

impl CongruenceSystem {
    pub fn new(coefficients: IntMatrix, rhs: Vec<BigInt>, moduli: Vec<BigInt>) -> Result<Self> {
        if rhs.len() != coefficients.rows() || moduli.len() != coefficients.rows() {
            return Err(Error::Dimension(format!(
                "{} equations but {} right-hand sides and {} moduli",
                coefficients.rows(),
                rhs.len(),
                moduli.len()
            )));
        }
        if moduli.iter().any(Signed::is_negative) {
            return Err(Error::InvalidInput("negative modulus".into()));
        }
        Ok(CongruenceSystem {
            coefficients,
            rhs,
            moduli,
        })
    }

    pub fn unknowns(&self) -> usize {
        self.coefficients.cols()
    }

    pub fn is_satisfied_by(&self, x: &[BigInt]) -> bool {
        let Ok(lhs) = self.coefficients.mul_vec(x) else {
            return false;
        };
        lhs.iter()
            .zip(&self.rhs)
            .zip(&self.moduli)
            .all(|((l, r), m)| {
                let diff = l - r;
                if m.is_zero() {
                    diff.is_zero()
                } else {
                    diff.mod_floor(m).is_zero()
                }
            })
    }
}

/// Solves a congruence system by adding one auxiliary unknown `t_i` per
/// nonzero-modulus row (`a_i·x − m_i·t_i = b_i`) and solving over Z.
pub fn solve_congruence(sys: &CongruenceSystem) -> Result<Option<Vec<BigInt>>> {
    let m = sys.coefficients.rows();
    let k = sys.unknowns();
    let aux: Vec<usize> = (0..m).filter(|&i| !sys.moduli[i].is_zero()).collect();
    let lifted = IntMatrix::from_fn(m, k + aux.len(), |i, j| {
        if j < k {
            sys.coefficients[(i, j)].clone()
        } else if aux[j - k] == i {
            -&sys.moduli[i]
        } else {
            BigInt::zero()
        }
    });
    Ok(solve_integer(&lifted, &sys.rhs)?.map(|s| s.particular[..k].to_vec()))
}

/// `[[A, 0], [0, B]]`.
pub fn block_diagonal(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    IntMatrix::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |i, j| {
        match (i < a.rows(), j < a.cols()) {
            (true, true) => a[(i, j)].clone(),
            (false, false) => b[(i - a.rows(), j - a.cols())].clone(),
            _ => BigInt::zero(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_two_three() {
        let a = IntMatrix::from_rows(&[vec![2, 3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        let col = k.column(0);
        // proportional to (3, -2) and primitive
        assert_eq!(&col[0] * BigInt::from(-2), &col[1] * BigInt::from(3));
        assert!(col[0].abs() == BigInt::from(3));
        // brute force: every small solution is a multiple of the basis vector
        for x in -9i64..=9 {
            for y in -9i64..=9 {
                if 2 * x + 3 * y == 0 {
                    let t = BigInt::from(x) / &col[0];
                    assert_eq!(&t * &col[0], BigInt::from(x));
                    assert_eq!(&t * &col[1], BigInt::from(y));
                }
            }
        }
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);
        let k = kernel_basis(&IntMatrix::zeros(1, 2));
        assert_eq!(k.cols(), 2);
        assert!(k.is_unimodular());
    }

    #[test]
    fn solve_examples() {
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(solve_integer(&two, &v(&[4])).unwrap().unwrap().particular, v(&[2]));
        assert!(solve_integer(&two, &v(&[3])).unwrap().is_none());
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let s = solve_integer(&a, &v(&[5, 11])).unwrap().unwrap();
        assert_eq!(s.particular, v(&[1, 2]));
        assert_eq!(s.kernel.cols(), 0);
        assert!(matches!(solve_integer(&a, &v(&[1])), Err(Error::Dimension(_))));
    }

    #[test]
    fn congruence_examples() {
        let sys = CongruenceSystem::new(IntMatrix::from_rows(&[vec![2]]), v(&[1]), v(&[4])).unwrap();
        assert!(solve_congruence(&sys).unwrap().is_none());
        for x in 0..4 {
            assert!(!sys.is_satisfied_by(&v(&[x])));
        }

        let sys = CongruenceSystem::new(IntMatrix::from_rows(&[vec![1]]), v(&[0]), v(&[1])).unwrap();
        let x = solve_congruence(&sys).unwrap().unwrap();
        assert!(sys.is_satisfied_by(&x));
        assert!(sys.is_satisfied_by(&v(&[0])));

        let sys = CongruenceSystem::new(
            IntMatrix::from_rows(&[vec![1], vec![1]]),
            v(&[1, 1]),
            v(&[4, 6]),
        )
        .unwrap();
        let x = solve_congruence(&sys).unwrap().unwrap();
        assert_eq!(x[0].mod_floor(&BigInt::from(12)), BigInt::from(1));
        let brute: Vec<i64> = (0..12).filter(|&x| x % 4 == 1 && x % 6 == 1).collect();
        assert_eq!(brute, vec![1]);
    }

    #[test]
    fn congruence_rejects_bad_shapes() {
        assert!(CongruenceSystem::new(IntMatrix::zeros(2, 1), v(&[0]), v(&[0, 0])).is_err());
        assert!(CongruenceSystem::new(IntMatrix::zeros(1, 1), v(&[0]), v(&[-3])).is_err());
    }

    #[test]
    fn block_diagonal_examples() {
        let a = IntMatrix::from_rows(&[vec![1]]);
        let b = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(block_diagonal(&a, &b), IntMatrix::from_rows(&[vec![1, 0], vec![0, 2]]));
        assert_eq!(block_diagonal(&IntMatrix::zeros(0, 0), &b), b);
        let c = block_diagonal(
            &IntMatrix::from_rows(&[vec![1, 1]]),
            &IntMatrix::from_rows(&[vec![2], vec![3]]),
        );
        assert_eq!(
            c,
            IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 0, 2], vec![0, 0, 3]])
        );
    }
}
