//! A finite model of the torsion category `Tor^Z(A, B)` for finite `A`, `B`.
//!
//! Objects are triples `(Z^n, ε, η)` with `ε: Z^n → A` and `η: (Z^n)* → B`,
//! written as lists `eps[i] = ε(e_i)` and `eta[i] = η(e_i*)`. A morphism
//! `(Z^n, ε, η) → (Z^m, ε', η')` is an `m × n` integer matrix `M` with
//! `Mᵀε' = ε` and `Mη = η'`. Both conditions are congruences modulo the
//! exponent `e` of `A ⊕ B`, so residue matrices mod `e` are a complete search
//! space and existence is decided by solving a congruence system.
//!
//! [`Truncation`] enumerates every object of rank at most `R`; [`pi0`] joins
//! objects connected by a morphism in either direction, and
//! [`component_group`] compares the components with `A ⊗ B` through the
//! invariant `χ(x) = Σ eps[i] ⊗ eta[i]`.

mod modular;
mod nerve;
mod worked;
mod pi0;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fgab::{smith_form, tensor, FgAbGroup, GroupElement, TensorProduct};
use crate::intlin::{solve_congruence, CongruenceSystem, IntMatrix};
use modular::ModSystem;

pub use nerve::{nerve_h1, nerve_h1_experiment, FiniteCategory, NerveReport};
pub use worked::{worked_example_report, WorkedExampleReport, StepCheck};
pub use pi0::{
    box_respects_components, component_group, pi0, pi0_report, ComponentGroup, ComponentPartition,
    Pi0Report,
};

/// The pair `(A, B)` in canonical form, with element coordinates taken
/// modulo the invariant factors.
#[derive(Debug)]
pub struct Ambient {
    a: FgAbGroup,
    b: FgAbGroup,
    a_moduli: Vec<u64>,
    b_moduli: Vec<u64>,
    exponent: u64,
    tensor: TensorProduct,
}

fn small_moduli(g: &FgAbGroup) -> Result<Vec<u64>> {
    if !g.is_finite() {
        return Err(Error::Infinite(format!("{g} is not finite")));
    }
    g.canonical()
        .invariant_factors
        .iter()
        .map(|d| d.to_u64().ok_or_else(|| Error::TooLarge(format!("invariant factor {d}"))))
        .collect()
}

impl Ambient {
    pub fn new(a: &FgAbGroup, b: &FgAbGroup) -> Result<Arc<Self>> {
        let a_moduli = small_moduli(a)?;
        let b_moduli = small_moduli(b)?;
        let exponent = a_moduli
            .iter()
            .chain(&b_moduli)
            .fold(1u64, |acc, &d| acc.lcm(&d));
        if exponent > 1 << 20 {
            return Err(Error::TooLarge(format!("exponent {exponent}")));
        }
        let a = smith_form(a)?.group;
        let b = smith_form(b)?.group;
        let tensor = tensor(&a, &b);
        Ok(Arc::new(Ambient {
            a,
            b,
            a_moduli,
            b_moduli,
            exponent,
            tensor,
        }))
    }

    /// `A` in canonical presentation.
    pub fn a(&self) -> &FgAbGroup {
        &self.a
    }

    pub fn b(&self) -> &FgAbGroup {
        &self.b
    }

    pub fn a_moduli(&self) -> &[u64] {
        &self.a_moduli
    }

    pub fn b_moduli(&self) -> &[u64] {
        &self.b_moduli
    }

    /// `e = lcm(exponent A, exponent B)`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn tensor(&self) -> &TensorProduct {
        &self.tensor
    }

    fn elements(moduli: &[u64]) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in moduli {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |r| {
                        let mut v = prefix.clone();
                        v.push(r);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Every element of `A` as reduced canonical coordinates.
    pub fn elements_a(&self) -> Vec<Vec<u64>> {
        Self::elements(&self.a_moduli)
    }

    pub fn elements_b(&self) -> Vec<Vec<u64>> {
        Self::elements(&self.b_moduli)
    }
}

/// `(Z^n, ε, η)` with `eps[i] = ε(e_i) ∈ A` and `eta[i] = η(e_i*) ∈ B` in
/// canonical coordinates.
#[derive(Clone, Debug)]
pub struct TorTriple {
    ambient: Arc<Ambient>,
    eps: Vec<Vec<u64>>,
    eta: Vec<Vec<u64>>,
}

impl PartialEq for TorTriple {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) && self.eps == other.eps && self.eta == other.eta
    }
}

impl Eq for TorTriple {}

fn reduce(v: &[u64], moduli: &[u64]) -> Result<Vec<u64>> {
    if v.len() != moduli.len() {
        return Err(Error::Dimension(format!(
            "element with {} coordinates in a group with {} cyclic factors",
            v.len(),
            moduli.len()
        )));
    }
    Ok(v.iter().zip(moduli).map(|(x, d)| x % d).collect())
}

impl TorTriple {
    pub fn new(ambient: &Arc<Ambient>, eps: Vec<Vec<u64>>, eta: Vec<Vec<u64>>) -> Result<Self> {
        if eps.len() != eta.len() {
            return Err(Error::Dimension(format!(
                "{} values of ε but {} values of η",
                eps.len(),
                eta.len()
            )));
        }
        let eps = eps
            .iter()
            .map(|v| reduce(v, &ambient.a_moduli))
            .collect::<Result<_>>()?;
        let eta = eta
            .iter()
            .map(|v| reduce(v, &ambient.b_moduli))
            .collect::<Result<_>>()?;
        Ok(TorTriple {
            ambient: ambient.clone(),
            eps,
            eta,
        })
    }

    /// Shorthand for cyclic `A` and `B`: `(Z^n, (x₁, …), (y₁, …))`.
    pub fn cyclic(ambient: &Arc<Ambient>, eps: &[u64], eta: &[u64]) -> Result<Self> {
        let wrap = |v: &[u64], moduli: &[u64]| -> Vec<Vec<u64>> {
            v.iter()
                .map(|&x| if moduli.is_empty() { vec![] } else { vec![x] })
                .collect()
        };
        if ambient.a_moduli.len() > 1 || ambient.b_moduli.len() > 1 {
            return Err(Error::InvalidInput("ambient groups are not cyclic".into()));
        }
        Self::new(ambient, wrap(eps, &ambient.a_moduli), wrap(eta, &ambient.b_moduli))
    }

    /// `(0, 0, 0)`.
    pub fn zero(ambient: &Arc<Ambient>) -> Self {
        TorTriple {
            ambient: ambient.clone(),
            eps: Vec::new(),
            eta: Vec::new(),
        }
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn rank(&self) -> usize {
        self.eps.len()
    }

    pub fn eps(&self) -> &[Vec<u64>] {
        &self.eps
    }

    pub fn eta(&self) -> &[Vec<u64>] {
        &self.eta
    }

    pub fn is_zero_object(&self) -> bool {
        self.eps.is_empty()
    }

    /// `k·(Z^n, ε, η) = (Z^n, kε, kη)`, entries reduced in `A` and `B`.
    pub fn scale(&self, k: u64) -> Self {
        let s = |vs: &[Vec<u64>], moduli: &[u64]| -> Vec<Vec<u64>> {
            vs.iter()
                .map(|v| v.iter().zip(moduli).map(|(x, d)| (x * (k % d)) % d).collect())
                .collect()
        };
        TorTriple {
            ambient: self.ambient.clone(),
            eps: s(&self.eps, &self.ambient.a_moduli),
            eta: s(&self.eta, &self.ambient.b_moduli),
        }
    }

    pub fn to_literal(&self) -> String {
        let show = |v: &[u64]| match v {
            [x] => x.to_string(),
            _ => format!("{v:?}"),
        };
        if self.is_zero_object() {
            return "(0,0,0)".into();
        }
        let eps: Vec<_> = self.eps.iter().map(|v| show(v)).collect();
        let eta: Vec<_> = self.eta.iter().map(|v| show(v)).collect();
        let p = match self.rank() {
            1 => "Z".to_string(),
            n => format!("Z^{n}"),
        };
        if self.rank() == 1 {
            format!("({p},{},{})", eps[0], eta[0])
        } else {
            format!("({p},({}),({}))", eps.join(","), eta.join(","))
        }
    }
}

impl std::fmt::Display for TorTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_literal())
    }
}

fn check_ambient(x: &TorTriple, y: &TorTriple) -> Result<()> {
    if Arc::ptr_eq(&x.ambient, &y.ambient) {
        Ok(())
    } else {
        Err(Error::Mismatch("objects come from different ambients".into()))
    }
}

/// `x □ y`: ranks add, the lists concatenate.
pub fn box_sum(x: &TorTriple, y: &TorTriple) -> Result<TorTriple> {
    check_ambient(x, y)?;
    Ok(TorTriple {
        ambient: x.ambient.clone(),
        eps: x.eps.iter().chain(&y.eps).cloned().collect(),
        eta: x.eta.iter().chain(&y.eta).cloned().collect(),
    })
}

/// Rows of the morphism conditions, one per (basis vector, cyclic factor):
/// `Σ_j M[j][i] ε_y[j] = ε_x[i]` in `A` and `Σ_i M[j][i] η_x[i] = η_y[j]`
/// in `B`. Unknown `M[j][i]` has index `j·rank(x) + i`. Each row is
/// `(coefficients, rhs, modulus)`.
fn morphism_rows(x: &TorTriple, y: &TorTriple) -> Vec<(Vec<u64>, u64, u64)> {
    let amb = &x.ambient;
    let (rx, ry) = (x.rank(), y.rank());
    let mut rows = Vec::new();
    for i in 0..rx {
        for (k, &d) in amb.a_moduli.iter().enumerate() {
            let mut c = vec![0; rx * ry];
            for j in 0..ry {
                c[j * rx + i] = y.eps[j][k];
            }
            rows.push((c, x.eps[i][k], d));
        }
    }
    for j in 0..ry {
        for (l, &d) in amb.b_moduli.iter().enumerate() {
            let mut c = vec![0; rx * ry];
            for i in 0..rx {
                c[j * rx + i] = x.eta[i][l];
            }
            rows.push((c, y.eta[j][l], d));
        }
    }
    rows
}

/// Whether `m` (`rank(y) × rank(x)`) is a morphism `x → y`.
pub fn is_morphism(x: &TorTriple, y: &TorTriple, m: &IntMatrix) -> Result<bool> {
    check_ambient(x, y)?;
    if m.rows() != y.rank() || m.cols() != x.rank() {
        return Ok(false);
    }
    let rx = x.rank();
    Ok(morphism_rows(x, y).iter().all(|(c, rhs, d)| {
        let lhs: BigInt = c
            .iter()
            .enumerate()
            .map(|(u, &cu)| &m[(u / rx, u % rx)] * BigInt::from(cu))
            .sum();
        (lhs - BigInt::from(*rhs)).mod_floor(&BigInt::from(*d)) == BigInt::from(0)
    }))
}

/// A witness matrix for a morphism `x → y`, or `None` when there is none.
/// Entries lie in `[0, e)`.
pub fn morphism_exists(x: &TorTriple, y: &TorTriple) -> Result<Option<IntMatrix>> {
    check_ambient(x, y)?;
    let e = x.ambient.exponent as i64;
    let rows = morphism_rows(x, y);
    let n = x.rank() * y.rank();
    let mut sys = ModSystem::new(rows.len(), n, e);
    for (r, (c, rhs, d)) in rows.iter().enumerate() {
        // a congruence mod d | e becomes one mod e after scaling by e/d
        let scale = e / *d as i64;
        for (j, &cj) in c.iter().enumerate() {
            sys.a[r * n + j] = (cj as i64 * scale) % e;
        }
        sys.b[r] = (*rhs as i64 * scale) % e;
    }
    let Some(sol) = sys.solve() else {
        return Ok(None);
    };
    let m = IntMatrix::new(
        y.rank(),
        x.rank(),
        sol.into_iter().map(BigInt::from).collect(),
    )?;
    if !is_morphism(x, y, &m)? {
        return Err(Error::Contract(format!("witness for {x} → {y} fails the conditions")));
    }
    Ok(Some(m))
}

/// The same decision through the general integer congruence solver.
pub fn morphism_exists_exact(x: &TorTriple, y: &TorTriple) -> Result<Option<IntMatrix>> {
    check_ambient(x, y)?;
    let rows = morphism_rows(x, y);
    let n = x.rank() * y.rank();
    let coefficients = IntMatrix::from_fn(rows.len(), n, |i, j| BigInt::from(rows[i].0[j]));
    let sys = CongruenceSystem::new(
        coefficients,
        rows.iter().map(|r| BigInt::from(r.1)).collect(),
        rows.iter().map(|r| BigInt::from(r.2)).collect(),
    )?;
    let Some(sol) = solve_congruence(&sys)? else {
        return Ok(None);
    };
    let e = BigInt::from(x.ambient.exponent);
    let m = IntMatrix::new(y.rank(), x.rank(), sol.iter().map(|v| v.mod_floor(&e)).collect())?;
    Ok(Some(m))
}

/// `χ(x) = Σ eps[i] ⊗ eta[i] ∈ A ⊗ B`.
pub fn classifying_invariant(x: &TorTriple) -> Result<GroupElement> {
    let amb = &x.ambient;
    let t = &amb.tensor;
    let mut acc = GroupElement::zero(t.group());
    for (e, h) in x.eps.iter().zip(&x.eta) {
        let to_big = |v: &[u64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        let a = GroupElement::from_canonical_coords(&amb.a, &to_big(e))?;
        let b = GroupElement::from_canonical_coords(&amb.b, &to_big(h))?;
        acc = acc.add(&t.pair(&a, &b)?)?;
    }
    Ok(acc)
}

/// All objects of rank at most `max_rank`, ordered by rank and then
/// lexicographically.
#[derive(Clone, Debug)]
pub struct Truncation {
    ambient: Arc<Ambient>,
    max_rank: usize,
    objects: Vec<TorTriple>,
}

impl Truncation {
    /// Refuses truncations with more than `limit` objects.
    pub fn enumerate(a: &FgAbGroup, b: &FgAbGroup, max_rank: usize, limit: usize) -> Result<Self> {
        let ambient = Ambient::new(a, b)?;
        let ea = ambient.elements_a();
        let eb = ambient.elements_b();
        let per_rank = (ea.len() * eb.len()) as u128;
        let count: u128 = (0..=max_rank as u32).map(|n| per_rank.pow(n)).sum();
        if count > limit as u128 {
            return Err(Error::TooLarge(format!(
                "{count} objects exceed the enumeration bound {limit}"
            )));
        }
        let pairs: Vec<(&Vec<u64>, &Vec<u64>)> =
            ea.iter().flat_map(|x| eb.iter().map(move |y| (x, y))).collect();
        let mut objects = vec![TorTriple::zero(&ambient)];
        let mut layer = vec![TorTriple::zero(&ambient)];
        for _ in 0..max_rank {
            let mut next = Vec::with_capacity(layer.len() * pairs.len());
            for base in &layer {
                for (x, y) in &pairs {
                    let mut t = base.clone();
                    t.eps.push((*x).clone());
                    t.eta.push((*y).clone());
                    next.push(t);
                }
            }
            objects.extend(next.iter().cloned());
            layer = next;
        }
        Ok(Truncation {
            ambient,
            max_rank,
            objects,
        })
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn max_rank(&self) -> usize {
        self.max_rank
    }

    pub fn objects(&self) -> &[TorTriple] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Index of `x`, if it lies in the truncation.
    pub fn index_of(&self, x: &TorTriple) -> Option<usize> {
        if !Arc::ptr_eq(&x.ambient, &self.ambient) || x.rank() > self.max_rank {
            return None;
        }
        let na = self.ambient.elements_a().len();
        let nb = self.ambient.elements_b().len();
        let radix = |v: &[u64], moduli: &[u64]| {
            v.iter().zip(moduli).fold(0usize, |acc, (c, d)| acc * *d as usize + *c as usize)
        };
        let per = na * nb;
        let offset: usize = (0..x.rank()).map(|n| per.pow(n as u32)).sum();
        let mut idx = 0usize;
        for (e, h) in x.eps.iter().zip(&x.eta) {
            idx = idx * per + radix(e, &self.ambient.a_moduli) * nb + radix(h, &self.ambient.b_moduli);
        }
        Some(offset + idx)
    }
}

/// Default upper bound on the number of enumerated objects.
pub const DEFAULT_OBJECT_LIMIT: usize = 50_000;

#[cfg(test)]
mod tests {
    use super::*;

    fn amb(a: u64, b: u64) -> Arc<Ambient> {
        Ambient::new(&FgAbGroup::cyclic(a), &FgAbGroup::cyclic(b)).unwrap()
    }

    #[test]
    fn object_counts() {
        let t = Truncation::enumerate(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(6), 1, 1000).unwrap();
        assert_eq!(t.len(), 25);
        let t0 = Truncation::enumerate(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(6), 0, 1000).unwrap();
        assert_eq!(t0.len(), 1);
        let t2 = Truncation::enumerate(&FgAbGroup::zero(), &FgAbGroup::cyclic(6), 2, 1000).unwrap();
        assert_eq!(t2.len(), 1 + 6 + 36);
        assert!(t2.objects().iter().all(|x| x.eps().iter().all(|v| v.is_empty())));
        assert!(Truncation::enumerate(&FgAbGroup::integers(), &FgAbGroup::cyclic(2), 1, 10).is_err());
        assert!(Truncation::enumerate(&FgAbGroup::cyclic(6), &FgAbGroup::cyclic(6), 3, 1000).is_err());
    }

    #[test]
    fn index_of_matches_enumeration() {
        let t = Truncation::enumerate(&FgAbGroup::parse("Z/2 + Z/2").unwrap(), &FgAbGroup::cyclic(3), 2, 1000)
            .unwrap();
        for (i, x) in t.objects().iter().enumerate() {
            assert_eq!(t.index_of(x), Some(i));
        }
    }

    #[test]
    fn worked_example_morphisms() {
        let a = amb(4, 6);
        let zero = TorTriple::zero(&a);
        let t = |x, y| TorTriple::cyclic(&a, &[x], &[y]).unwrap();
        assert!(morphism_exists(&t(0, 1), &zero).unwrap().is_some());
        assert!(morphism_exists(&t(1, 1), &zero).unwrap().is_none());
        assert!(morphism_exists(&zero, &t(1, 1)).unwrap().is_none());
        assert!(morphism_exists(&zero, &t(3, 0)).unwrap().is_some());
        let x = t(1, 1);
        let id = morphism_exists(&x, &x).unwrap().unwrap();
        assert!(is_morphism(&x, &x, &IntMatrix::identity(1)).unwrap());
        assert!(is_morphism(&x, &x, &id).unwrap());
    }

    #[test]
    fn mixed_ambients_are_rejected() {
        let x = TorTriple::zero(&amb(4, 6));
        let y = TorTriple::zero(&amb(4, 6));
        assert!(morphism_exists(&x, &y).is_err());
        assert!(box_sum(&x, &y).is_err());
    }

    #[test]
    fn box_examples() {
        let a = amb(4, 6);
        let x = TorTriple::cyclic(&a, &[1], &[1]).unwrap();
        let xx = box_sum(&x, &x).unwrap();
        assert_eq!(xx, TorTriple::cyclic(&a, &[1, 1], &[1, 1]).unwrap());
        assert_eq!(box_sum(&x, &TorTriple::zero(&a)).unwrap(), x);
        let y = TorTriple::cyclic(&a, &[2], &[5]).unwrap();
        assert_eq!(
            box_sum(&box_sum(&x, &y).unwrap(), &xx).unwrap(),
            box_sum(&x, &box_sum(&y, &xx).unwrap()).unwrap()
        );
        assert_eq!(xx.to_literal(), "(Z^2,(1,1),(1,1))");
        assert_eq!(x.scale(4).to_literal(), "(Z,0,4)");
    }

    #[test]
    fn chi_examples() {
        let a = amb(4, 6);
        let x = TorTriple::cyclic(&a, &[1], &[1]).unwrap();
        let c = classifying_invariant(&x).unwrap();
        assert!(!c.is_zero());
        assert_eq!(c.owner().order(), Some(BigInt::from(2)));
        assert!(classifying_invariant(&TorTriple::zero(&a)).unwrap().is_zero());
        for y in 0..6 {
            let z = TorTriple::cyclic(&a, &[0], &[y]).unwrap();
            assert!(classifying_invariant(&z).unwrap().is_zero());
        }
        let xx = box_sum(&x, &x).unwrap();
        assert_eq!(
            classifying_invariant(&xx).unwrap(),
            c.add(&c).unwrap()
        );
    }

    /// Enumerates residue matrices mod `e`.
    fn brute_force(x: &TorTriple, y: &TorTriple) -> bool {
        let e = x.ambient().exponent();
        let n = x.rank() * y.rank();
        (0..e.pow(n as u32)).any(|mut code| {
            let entries: Vec<BigInt> = (0..n)
                .map(|_| {
                    let v = code % e;
                    code /= e;
                    BigInt::from(v)
                })
                .collect();
            let m = IntMatrix::new(y.rank(), x.rank(), entries).unwrap();
            is_morphism(x, y, &m).unwrap()
        })
    }

    #[test]
    fn solver_matches_enumeration_and_exact_solver() {
        for (a, b) in [(2u64, 3u64), (2, 6), (4, 2), (3, 3), (2, 2), (1, 4)] {
            let t = Truncation::enumerate(&FgAbGroup::cyclic(a), &FgAbGroup::cyclic(b), 1, 100).unwrap();
            for x in t.objects() {
                for y in t.objects() {
                    let fast = morphism_exists(x, y).unwrap();
                    let exact = morphism_exists_exact(x, y).unwrap();
                    assert_eq!(fast.is_some(), brute_force(x, y), "{x} → {y}");
                    assert_eq!(fast.is_some(), exact.is_some());
                    if let Some(m) = exact {
                        assert!(is_morphism(x, y, &m).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn solver_matches_exact_solver_at_rank_two() {
        let t = Truncation::enumerate(&FgAbGroup::parse("Z/2 + Z/2").unwrap(), &FgAbGroup::cyclic(2), 2, 1000)
            .unwrap();
        let objs = t.objects();
        for (i, x) in objs.iter().enumerate().step_by(3) {
            for y in objs.iter().skip(i % 5).step_by(7) {
                assert_eq!(
                    morphism_exists(x, y).unwrap().is_some(),
                    morphism_exists_exact(x, y).unwrap().is_some(),
                    "{x} → {y}"
                );
            }
        }
    }

    #[test]
    fn witnesses_compose() {
        let t = Truncation::enumerate(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(6), 1, 100).unwrap();
        let objs = t.objects();
        for x in objs.iter().step_by(2) {
            for y in objs.iter().step_by(3) {
                let Some(f) = morphism_exists(x, y).unwrap() else { continue };
                for z in objs.iter().step_by(5) {
                    if let Some(g) = morphism_exists(y, z).unwrap() {
                        assert!(is_morphism(x, z, &g.mul(&f).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}
