//! Solving linear equations whose unknown is a homomorphism.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{FgAbGroup, GroupHom};
use crate::error::{Error, Result};
use crate::intlin::{solve_integer, IntMatrix};

/// `left ∘ X ∘ right = equals`, where `X: P → Q` is the unknown. A missing
/// `left` or `right` stands for the identity.
#[derive(Clone, Copy, Debug)]
pub struct HomEquation<'a> {
    pub left: Option<&'a GroupHom>,
    pub right: Option<&'a GroupHom>,
    pub equals: &'a GroupHom,
}

impl<'a> HomEquation<'a> {
    /// `after ∘ X = equals`.
    pub fn post(after: &'a GroupHom, equals: &'a GroupHom) -> Self {
        HomEquation {
            left: Some(after),
            right: None,
            equals,
        }
    }

    /// `X ∘ before = equals`.
    pub fn pre(before: &'a GroupHom, equals: &'a GroupHom) -> Self {
        HomEquation {
            left: None,
            right: Some(before),
            equals,
        }
    }
}

/// One solution plus the homogeneous directions (matrices `Δ` such that
/// `X + Δ` also solves the system).
#[derive(Clone, Debug)]
pub struct HomSolution {
    pub hom: GroupHom,
    pub homogeneous: Vec<IntMatrix>,
}

impl HomSolution {
    /// Whether every homogeneous direction is the zero map, i.e. the solution
    /// is unique as a homomorphism.
    pub fn is_unique(&self) -> Result<bool> {
        let q = self.hom.target();
        for d in &self.homogeneous {
            if !q.columns_are_relations(d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Rows expressing `X · R_P = R_Q · C` for unknowns `(vec X, vec C)` laid out
/// as `X[i][j] ↦ i·p + j` then `C[t][c] ↦ q·p + t·rp + c`.
pub(crate) fn well_definedness_rows(p: &FgAbGroup, q: &FgAbGroup, total_cols: usize) -> IntMatrix {
    let (pg, qg) = (p.generators(), q.generators());
    let (rp, rq) = (p.relations().cols(), q.relations().cols());
    let c_off = qg * pg;
    let mut m = IntMatrix::zeros(qg * rp, total_cols);
    for r in 0..qg {
        for c in 0..rp {
            let row = r * rp + c;
            for j in 0..pg {
                let v = &p.relations()[(j, c)];
                if !v.is_zero() {
                    m[(row, r * pg + j)] = v.clone();
                }
            }
            for t in 0..rq {
                let v = &q.relations()[(r, t)];
                if !v.is_zero() {
                    m[(row, c_off + t * rp + c)] = -v;
                }
            }
        }
    }
    m
}

/// Finds `X: p → q` satisfying every equation, or `None` if none exists.
pub fn solve_hom(
    p: &FgAbGroup,
    q: &FgAbGroup,
    equations: &[HomEquation<'_>],
) -> Result<Option<HomSolution>> {
    let (pg, qg) = (p.generators(), q.generators());
    let (rp, rq) = (p.relations().cols(), q.relations().cols());
    let x_len = qg * pg;
    let mut offsets = Vec::new();
    let mut cols = x_len + rq * rp;
    let mut rows = qg * rp;
    for (k, eq) in equations.iter().enumerate() {
        let t = eq.equals.target();
        let s = eq.equals.source();
        if let Some(l) = eq.left {
            if l.source() != q || l.target() != t {
                return Err(Error::Mismatch(format!("equation {k}: left factor does not fit")));
            }
        } else if t != q {
            return Err(Error::Mismatch(format!("equation {k}: target mismatch")));
        }
        if let Some(r) = eq.right {
            if r.target() != p || r.source() != s {
                return Err(Error::Mismatch(format!("equation {k}: right factor does not fit")));
            }
        } else if s != p {
            return Err(Error::Mismatch(format!("equation {k}: source mismatch")));
        }
        offsets.push((rows, cols));
        rows += t.generators() * s.generators();
        cols += t.relations().cols() * s.generators();
    }

    let wd = well_definedness_rows(p, q, cols);
    let mut system = IntMatrix::zeros(rows, cols);
    for i in 0..wd.rows() {
        for j in 0..cols {
            system[(i, j)] = wd[(i, j)].clone();
        }
    }
    let mut rhs = vec![BigInt::zero(); rows];
    for (eq, &(row_off, col_off)) in equations.iter().zip(&offsets) {
        let t = eq.equals.target();
        let s = eq.equals.source();
        let l = eq
            .left
            .map_or_else(|| IntMatrix::identity(qg), |h| h.matrix().clone());
        let r = eq
            .right
            .map_or_else(|| IntMatrix::identity(pg), |h| h.matrix().clone());
        let (tg, sg, rt) = (t.generators(), s.generators(), t.relations().cols());
        for a in 0..tg {
            for b in 0..sg {
                let row = row_off + a * sg + b;
                for i in 0..qg {
                    if l[(a, i)].is_zero() {
                        continue;
                    }
                    for j in 0..pg {
                        if !r[(j, b)].is_zero() {
                            system[(row, i * pg + j)] += &l[(a, i)] * &r[(j, b)];
                        }
                    }
                }
                for u in 0..rt {
                    let v = &t.relations()[(a, u)];
                    if !v.is_zero() {
                        system[(row, col_off + u * sg + b)] = -v;
                    }
                }
                rhs[row] = eq.equals.matrix()[(a, b)].clone();
            }
        }
    }
    let Some(sol) = solve_integer(&system, &rhs)? else {
        return Ok(None);
    };
    let x = IntMatrix::new(qg, pg, sol.particular[..x_len].to_vec())?;
    let homogeneous = (0..sol.kernel.cols())
        .map(|c| IntMatrix::from_fn(qg, pg, |i, j| sol.kernel[(i * pg + j, c)].clone()))
        .collect();
    Ok(Some(HomSolution {
        hom: GroupHom::new(p, q, x)?,
        homogeneous,
    }))
}
