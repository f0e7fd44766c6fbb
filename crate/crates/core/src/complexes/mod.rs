//! Bounded chain complexes of finitely generated abelian groups.
//!
//! A complex is stored on a finite support `lowest..=highest`; every group
//! outside it is zero, and so is every boundary touching it.

mod les;
mod map;

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::{cokernel, direct_sum, factor_through_injection, kernel, PresentationJson};
use crate::fgab::{FgAbGroup, GroupElement, GroupHom};
use crate::intlin::{block_diagonal, solve_integer, IntMatrix};

pub use les::{
    connecting_morphism, long_exact_sequence, naturality_check, ComplexSES, Ladder,
    LesTerm, LongExactSequence,
};
pub use map::{induced_map, ChainMap};

#[derive(Clone)]
pub struct ChainComplex(Arc<Inner>);

struct Inner {
    lowest: i64,
    groups: Vec<FgAbGroup>,
    // boundaries[k] = d_{lowest + k + 1}
    boundaries: Vec<GroupHom>,
    homology: Vec<OnceLock<Arc<Homology>>>,
}

impl ChainComplex {
    /// `groups[k]` sits in degree `lowest + k`; `boundaries[k]` maps
    /// `groups[k + 1] → groups[k]`. Only shapes are checked here, see
    /// [`ChainComplex::validate`].
    pub fn new(lowest: i64, groups: Vec<FgAbGroup>, boundaries: Vec<GroupHom>) -> Result<Self> {
        if boundaries.len() != groups.len().saturating_sub(1) {
            return Err(Error::Dimension(format!(
                "{} groups need {} boundaries, got {}",
                groups.len(),
                groups.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, d) in boundaries.iter().enumerate() {
            if d.source() != &groups[k + 1] || d.target() != &groups[k] {
                return Err(Error::Dimension(format!(
                    "boundary out of degree {} does not connect the adjacent groups",
                    lowest + k as i64 + 1
                )));
            }
        }
        let homology = (0..groups.len()).map(|_| OnceLock::new()).collect();
        Ok(ChainComplex(Arc::new(Inner {
            lowest,
            groups,
            boundaries,
            homology,
        })))
    }

    /// Like [`ChainComplex::new`] but with boundaries given as matrices.
    pub fn from_matrices(lowest: i64, groups: Vec<FgAbGroup>, matrices: Vec<IntMatrix>) -> Result<Self> {
        if matrices.len() != groups.len().saturating_sub(1) {
            return Err(Error::Dimension(format!(
                "{} groups need {} boundaries, got {}",
                groups.len(),
                groups.len().saturating_sub(1),
                matrices.len()
            )));
        }
        let boundaries = matrices
            .into_iter()
            .enumerate()
            .map(|(k, m)| GroupHom::new(&groups[k + 1], &groups[k], m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lowest, groups, boundaries)
    }

    pub fn zero() -> Self {
        Self::new(0, Vec::new(), Vec::new()).expect("empty complex")
    }

    /// `g` in degree `n`, zero elsewhere.
    pub fn concentrated(n: i64, g: &FgAbGroup) -> Self {
        Self::new(n, vec![g.clone()], Vec::new()).expect("single group")
    }

    /// `0 → source →f target → 0` with `target` in degree `n`.
    pub fn two_term(n: i64, f: &GroupHom) -> Self {
        Self::new(n, vec![f.target().clone(), f.source().clone()], vec![f.clone()])
            .expect("single boundary")
    }

    pub fn lowest(&self) -> i64 {
        self.0.lowest
    }

    /// Top degree of the support; below `lowest` when the support is empty.
    pub fn highest(&self) -> i64 {
        self.0.lowest + self.0.groups.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.groups.is_empty()
    }

    fn slot(&self, n: i64) -> Option<usize> {
        let k = n.checked_sub(self.0.lowest)?;
        usize::try_from(k).ok().filter(|&k| k < self.0.groups.len())
    }

    /// `C_n`, zero outside the support.
    pub fn group(&self, n: i64) -> FgAbGroup {
        self.slot(n)
            .map_or_else(FgAbGroup::zero, |k| self.0.groups[k].clone())
    }

    /// `d_n: C_n → C_{n−1}`.
    pub fn boundary(&self, n: i64) -> GroupHom {
        match (self.slot(n), self.slot(n - 1)) {
            (Some(k), Some(_)) => self.0.boundaries[k - 1].clone(),
            _ => GroupHom::zero(&self.group(n), &self.group(n - 1)),
        }
    }

    /// Whether `d_{n} ∘ d_{n+1} = 0` everywhere.
    pub fn validate(&self) -> bool {
        self.0
            .boundaries
            .windows(2)
            .all(|w| w[0].compose(&w[1]).map_or(false, |h| h.is_zero()))
    }

    /// `H_n = Ker d_n / Im d_{n+1}`. Fails if `d_n ∘ d_{n+1} ≠ 0`.
    pub fn homology(&self, n: i64) -> Result<Arc<Homology>> {
        match self.slot(n) {
            Some(k) => {
                if let Some(h) = self.0.homology[k].get() {
                    return Ok(h.clone());
                }
                let h = Arc::new(self.compute_homology(n)?);
                Ok(self.0.homology[k].get_or_init(|| h).clone())
            }
            None => Ok(Arc::new(self.compute_homology(n)?)),
        }
    }

    fn compute_homology(&self, n: i64) -> Result<Homology> {
        let (_, incl) = kernel(&self.boundary(n))?;
        let into_cycles = factor_through_injection(&self.boundary(n + 1), &incl).map_err(|_| {
            Error::InvalidInput(format!("d_{n} ∘ d_{} is not zero", n + 1))
        })?;
        let (group, projection) = cokernel(&into_cycles)?;
        Ok(Homology {
            degree: n,
            inclusion: incl,
            projection,
            group,
        })
    }

    /// Degreewise direct sum over the union of the supports.
    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        let (lo, hi) = hull(&[self, other]);
        if hi < lo {
            return ChainComplex::zero();
        }
        let groups: Vec<_> = (lo..=hi)
            .map(|n| direct_sum(&self.group(n), &other.group(n)).group)
            .collect();
        let boundaries = (lo + 1..=hi)
            .map(|n| {
                let m = block_diagonal(self.boundary(n).matrix(), other.boundary(n).matrix());
                let k = (n - lo) as usize;
                GroupHom::new(&groups[k], &groups[k - 1], m).expect("blockwise well defined")
            })
            .collect();
        ChainComplex::new(lo, groups, boundaries).expect("shapes agree")
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            degrees: [self.lowest(), self.highest()],
            groups: self.0.groups.iter().map(PresentationJson::from).collect(),
            boundaries: self.0.boundaries.iter().map(|d| d.matrix().clone()).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: ComplexJson = serde_json::from_str(text).map_err(|e| {
            Error::parse(e.column(), format!("line {}: {e}", e.line()))
        })?;
        j.into_complex()
    }
}

/// Smallest degree range covering every support.
pub(crate) fn hull(cs: &[&ChainComplex]) -> (i64, i64) {
    let live: Vec<_> = cs.iter().filter(|c| !c.is_empty()).collect();
    if live.is_empty() {
        return (0, -1);
    }
    (
        live.iter().map(|c| c.lowest()).min().unwrap(),
        live.iter().map(|c| c.highest()).max().unwrap(),
    )
}

impl PartialEq for ChainComplex {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || {
            let (lo, hi) = hull(&[self, other]);
            (lo..=hi).all(|n| self.group(n) == other.group(n))
                && (lo + 1..=hi).all(|n| self.boundary(n).matrix() == other.boundary(n).matrix())
        }
    }
}

impl std::fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainComplex[{}..={}](", self.lowest(), self.highest())?;
        for (k, g) in self.0.groups.iter().enumerate().rev() {
            if k + 1 < self.0.groups.len() {
                write!(f, " ← ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Wire form: `degrees` is `[lowest, highest]`, `boundaries` lists
/// `d_{lowest+1} … d_{highest}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub degrees: [i64; 2],
    pub groups: Vec<PresentationJson>,
    pub boundaries: Vec<IntMatrix>,
}

impl ComplexJson {
    pub fn into_complex(self) -> Result<ChainComplex> {
        let [lo, hi] = self.degrees;
        let expected = if hi < lo { 0 } else { (hi - lo + 1) as usize };
        if self.groups.len() != expected {
            return Err(Error::Dimension(format!(
                "degrees {lo}..={hi} need {expected} groups, got {}",
                self.groups.len()
            )));
        }
        let groups = self
            .groups
            .into_iter()
            .map(PresentationJson::into_group)
            .collect::<Result<Vec<_>>>()?;
        if self.boundaries.len() != expected.saturating_sub(1) {
            return Err(Error::Dimension(format!(
                "{} groups need {} boundaries, got {}",
                expected,
                expected.saturating_sub(1),
                self.boundaries.len()
            )));
        }
        let matrices = self
            .boundaries
            .into_iter()
            .enumerate()
            .map(|(k, m)| {
                let (r, c) = (groups[k].generators(), groups[k + 1].generators());
                if m.rows() == 0 && m.cols() == 0 && r * c == 0 {
                    IntMatrix::zeros(r, c)
                } else {
                    m
                }
            })
            .collect();
        ChainComplex::from_matrices(lo, groups, matrices)
    }
}

/// `H_n` in canonical form, tied to the cycles it came from.
#[derive(Clone, Debug)]
pub struct Homology {
    degree: i64,
    inclusion: GroupHom,
    projection: GroupHom,
    group: FgAbGroup,
}

impl Homology {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    /// `Z_n ↪ C_n`.
    pub fn cycle_inclusion(&self) -> &GroupHom {
        &self.inclusion
    }

    /// `Z_n ↠ H_n`.
    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }

    /// Class of the cycle with coordinates `z` in `C_n`.
    pub fn class_of(&self, z: &[BigInt]) -> Result<GroupElement> {
        let chains = self.inclusion.target();
        let system = self.inclusion.matrix().hstack(chains.relations())?;
        let sol = solve_integer(&system, z)?
            .ok_or_else(|| Error::InvalidInput(format!("chain is not a cycle in degree {}", self.degree)))?;
        let k = self.inclusion.source().generators();
        self.projection
            .apply(&GroupElement::new(self.inclusion.source(), sol.particular[..k].to_vec())?)
    }

    /// A cycle in `C_n` representing `h`.
    pub fn representative(&self, h: &GroupElement) -> Result<Vec<BigInt>> {
        if h.owner() != &self.group {
            return Err(Error::Mismatch("class does not belong to this homology group".into()));
        }
        let system = self.projection.matrix().hstack(self.group.relations())?;
        let sol = solve_integer(&system, h.coords())?
            .ok_or_else(|| Error::Contract("homology projection is not onto".into()))?;
        let k = self.inclusion.source().generators();
        self.inclusion.apply_coords(&sol.particular[..k])
    }
}
