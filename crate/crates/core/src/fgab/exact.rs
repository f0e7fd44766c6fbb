use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::lift::{solve_hom, HomEquation};
use super::{hom_group, kernel, tensor, tensor_hom, FgAbGroup, GroupHom};
use crate::error::{Error, Result};
use crate::intlin::{smith_normal_form, solve_with_smith};

/// Whether `A →f B →g C` is exact at `B`: `Im f = Ker g` as subgroups.
pub fn is_exact_at(f: &GroupHom, g: &GroupHom) -> Result<bool> {
    if f.target() != g.source() {
        return Err(Error::Mismatch("maps are not composable".into()));
    }
    if !g.compose(f)?.is_zero() {
        return Ok(false);
    }
    let (_, incl) = kernel(g)?;
    let system = smith_normal_form(&f.matrix().hstack(f.target().relations())?);
    for v in incl.matrix().columns() {
        if solve_with_smith(&system, &v)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `0 → A →f B →g C → 0`, validated on construction.
#[derive(Clone, Debug)]
pub struct ShortExactSeq {
    f: GroupHom,
    g: GroupHom,
}

impl ShortExactSeq {
    pub fn new(f: GroupHom, g: GroupHom) -> Result<Self> {
        if f.target() != g.source() {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        if !f.is_injective()? {
            return Err(Error::InvalidInput("first map is not injective".into()));
        }
        if !g.is_surjective()? {
            return Err(Error::InvalidInput("second map is not surjective".into()));
        }
        if !is_exact_at(&f, &g)? {
            return Err(Error::InvalidInput("image of f differs from kernel of g".into()));
        }
        Ok(ShortExactSeq { f, g })
    }

    pub fn f(&self) -> &GroupHom {
        &self.f
    }

    pub fn g(&self) -> &GroupHom {
        &self.g
    }

    pub fn left(&self) -> &FgAbGroup {
        self.f.source()
    }

    pub fn middle(&self) -> &FgAbGroup {
        self.f.target()
    }

    pub fn right(&self) -> &FgAbGroup {
        self.g.target()
    }
}

/// Witnesses of a splitting: `g ∘ section = 1_C` and `retraction ∘ f = 1_A`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub section: GroupHom,
    pub retraction: GroupHom,
}

/// Returns splitting witnesses exactly when the sequence splits.
pub fn is_split(s: &ShortExactSeq) -> Result<Option<Splitting>> {
    let id_c = GroupHom::identity(s.right());
    let Some(section) = solve_hom(s.right(), s.middle(), &[HomEquation::post(s.g(), &id_c)])?
    else {
        return Ok(None);
    };
    let id_a = GroupHom::identity(s.left());
    let retraction = solve_hom(s.middle(), s.left(), &[HomEquation::pre(s.f(), &id_a)])?
        .ok_or_else(|| Error::Contract("section exists but retraction does not".into()))?;
    Ok(Some(Splitting {
        section: section.hom,
        retraction: retraction.hom,
    }))
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Purity of `0 → A → B → C → 0`: `f ⊗ Z/d` stays injective for every `d`
/// dividing the exponent of the torsion of `C`. Free probes never detect
/// anything, and other cyclic probes reduce to these because every element
/// of `C` of order `n` generates a summand whose order divides the exponent.
pub fn is_pure(s: &ShortExactSeq) -> Result<bool> {
    let exponent = match s.right().canonical().invariant_factors.last() {
        None => return Ok(true),
        Some(e) => e
            .to_u64()
            .ok_or_else(|| Error::TooLarge(format!("torsion exponent {e}")))?,
    };
    for d in divisors(exponent).into_iter().filter(|&d| d >= 2) {
        let zd = FgAbGroup::cyclic(d);
        let fd = tensor_hom(s.f(), &GroupHom::identity(&zd))?;
        if !fd.is_injective()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive check that `f ↦ (a ↦ f(a ⊗ −))` is a bijection
/// `Hom(A ⊗ B, C) → Hom(A, Hom(B, C))`. `bound` caps the number of homs
/// enumerated.
pub fn hom_tensor_adjunction_check(
    a: &FgAbGroup,
    b: &FgAbGroup,
    c: &FgAbGroup,
    bound: u64,
) -> Result<bool> {
    for g in [a, b, c] {
        if !g.is_finite() {
            return Err(Error::Infinite(format!(
                "exhaustive adjunction check needs finite groups, got {g}"
            )));
        }
    }
    let t = tensor(a, b);
    let lhs = hom_group(t.group(), c)?;
    let hom_bc = hom_group(b, c)?;
    let rhs = hom_group(a, hom_bc.group())?;
    let rhs_order = rhs.group().finite_order()?;

    let mut seen = HashSet::new();
    let elements = lhs.group().enumerate_canonical(bound)?;
    let lhs_order = elements.len() as u64;
    let unit = |n: usize, i: usize| -> Vec<BigInt> {
        (0..n).map(|k| BigInt::from(u8::from(k == i))).collect()
    };
    for coords in elements {
        let x = super::GroupElement::from_canonical_coords(lhs.group(), &coords)?;
        let f = lhs.hom_of(&x)?;
        let mut columns = Vec::with_capacity(a.generators());
        for i in 0..a.generators() {
            // b ↦ f(a_i ⊗ b) as a hom B → C
            let mut m_cols = Vec::with_capacity(b.generators());
            for j in 0..b.generators() {
                let v = t.pair_coords(&unit(a.generators(), i), &unit(b.generators(), j));
                m_cols.push(f.apply_coords(&v)?);
            }
            let m = crate::intlin::IntMatrix::from_columns(c.generators(), &m_cols)?;
            let Ok(partial) = GroupHom::new(b, c, m) else {
                return Ok(false);
            };
            columns.push(hom_bc.element_of(&partial)?.coords().to_vec());
        }
        let m = crate::intlin::IntMatrix::from_columns(hom_bc.group().generators(), &columns)?;
        let Ok(phi) = GroupHom::new(a, hom_bc.group(), m) else {
            return Ok(false);
        };
        seen.insert(rhs.element_of(&phi)?.canonical_coords());
    }
    Ok(seen.len() as u64 == lhs_order && lhs_order == rhs_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::direct_sum;

    fn ses(f: GroupHom, g: GroupHom) -> ShortExactSeq {
        ShortExactSeq::new(f, g).unwrap()
    }

    fn z_times(m: i64) -> ShortExactSeq {
        let z = FgAbGroup::integers();
        let zm = FgAbGroup::cyclic(m as u64);
        ses(
            GroupHom::scalar(&z, m),
            GroupHom::from_i64(&z, &zm, &[vec![1]]).unwrap(),
        )
    }

    fn z2_z4_z2() -> ShortExactSeq {
        let z2 = FgAbGroup::cyclic(2);
        let z4 = FgAbGroup::cyclic(4);
        ses(
            GroupHom::from_i64(&z2, &z4, &[vec![2]]).unwrap(),
            GroupHom::from_i64(&z4, &z2, &[vec![1]]).unwrap(),
        )
    }

    #[test]
    fn exactness_examples() {
        let z = FgAbGroup::integers();
        let zero = FgAbGroup::zero();
        let five = GroupHom::scalar(&z, 5);
        assert!(is_exact_at(&GroupHom::zero(&zero, &z), &five).unwrap());
        assert!(is_exact_at(&GroupHom::zero(&zero, &z), &GroupHom::identity(&z)).unwrap());
        let z2 = FgAbGroup::cyclic(2);
        assert!(!is_exact_at(&GroupHom::zero(&zero, &z2), &GroupHom::zero(&z2, &zero)).unwrap());
    }

    #[test]
    fn invalid_sequences_are_rejected() {
        let z = FgAbGroup::integers();
        let z5 = FgAbGroup::cyclic(5);
        let g = GroupHom::from_i64(&z, &z5, &[vec![1]]).unwrap();
        assert!(ShortExactSeq::new(GroupHom::scalar(&z, 0), g.clone()).is_err());
        assert!(ShortExactSeq::new(GroupHom::scalar(&z, 10), g).is_err());
    }

    #[test]
    fn splitting_examples() {
        assert!(is_split(&z_times(5)).unwrap().is_none());
        assert!(is_split(&z2_z4_z2()).unwrap().is_none());
        let a = FgAbGroup::parse("Z/4 + Z").unwrap();
        let c = FgAbGroup::cyclic(6);
        let sum = direct_sum(&a, &c);
        let s = ses(sum.injections[0].clone(), sum.projections[1].clone());
        let w = is_split(&s).unwrap().unwrap();
        assert!(s.g().compose(&w.section).unwrap().is_identity());
        assert!(w.retraction.compose(s.f()).unwrap().is_identity());
    }

    #[test]
    fn exhaustive_section_search_agrees() {
        // well-defined candidate sections Z/2 → Z/4 send 1 to x with 2x = 0;
        // a section also needs x ≡ 1 (mod 2)
        let candidates: Vec<i64> = (0..4).filter(|x| (2 * x) % 4 == 0).collect();
        assert_eq!(candidates.len(), 2);
        assert!(!candidates.iter().any(|x| x % 2 == 1));
        assert!(is_split(&z2_z4_z2()).unwrap().is_none());
    }

    #[test]
    fn purity_examples() {
        let a = FgAbGroup::cyclic(3);
        let c = FgAbGroup::parse("Z/4 + Z").unwrap();
        let sum = direct_sum(&a, &c);
        assert!(is_pure(&ses(sum.injections[0].clone(), sum.projections[1].clone())).unwrap());
        assert!(!is_pure(&z2_z4_z2()).unwrap());
        assert!(!is_pure(&z_times(2)).unwrap());
        let z = FgAbGroup::integers();
        let iso = ses(GroupHom::identity(&z), GroupHom::zero(&z, &FgAbGroup::zero()));
        assert!(is_pure(&iso).unwrap());
    }

    #[test]
    fn adjunction_examples() {
        let z2 = FgAbGroup::cyclic(2);
        assert!(hom_tensor_adjunction_check(&z2, &z2, &z2, 1000).unwrap());
        assert!(hom_tensor_adjunction_check(&FgAbGroup::zero(), &z2, &z2, 1000).unwrap());
        assert!(hom_tensor_adjunction_check(
            &FgAbGroup::cyclic(4),
            &FgAbGroup::cyclic(6),
            &z2,
            1000
        )
        .unwrap());
        assert!(matches!(
            hom_tensor_adjunction_check(&FgAbGroup::integers(), &z2, &z2, 10),
            Err(Error::Infinite(_))
        ));
    }
}
