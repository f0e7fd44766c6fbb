//! Free resolutions and `Tor^Z`.
//!
//! `Tor_n(A, B)` is the `n`-th homology of `P ⊗ B`, where `P` is a deleted
//! free resolution of `A`. Over `Z` every presentation gives a resolution of
//! length at most one, so `Tor_n` vanishes for `n ≥ 2`; padded resolutions
//! exist to exercise independence of the choice.

mod axioms;
mod checks;
mod les;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::fgab::{is_exact_at, tensor, tensor_hom, Canonical, FgAbGroup, GroupElement, GroupHom};
use crate::intlin::{block_diagonal, image_basis, IntMatrix};

pub use axioms::{
    standard_battery, tor_axiom_suite, AxiomBattery, AxiomReport, ConstantZero, DegreeShifted,
    TorCandidate, TorFunctor,
};
pub use checks::{schanuel_check, tor_additivity_check, tor_symmetry_check};
pub use les::{tor_les, TorLes};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ResolutionStyle {
    /// `0 → Z^r → Z^g → G → 0` read off the presentation.
    #[default]
    Minimal,
    /// The minimal resolution plus `k` cancelling pairs `Z^k →1 Z^k` in
    /// degrees `(1, 0)` and `(2, 1)`.
    Padded(usize),
}

/// `… → Z^{r₁} → Z^{r₀} → G → 0`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    target: FgAbGroup,
    ranks: Vec<usize>,
    // boundaries[k]: Z^{r_{k+1}} → Z^{r_k}
    boundaries: Vec<IntMatrix>,
    augmentation: GroupHom,
}

pub fn free_resolution(g: &FgAbGroup, style: ResolutionStyle) -> FreeResolution {
    let gens = g.generators();
    let d1 = image_basis(g.relations());
    let r = d1.cols();
    match style {
        ResolutionStyle::Minimal | ResolutionStyle::Padded(0) => {
            let boundaries = if r == 0 { vec![] } else { vec![d1] };
            let ranks = if r == 0 { vec![gens] } else { vec![gens, r] };
            FreeResolution {
                target: g.clone(),
                ranks,
                augmentation: GroupHom::new(&FgAbGroup::free(gens), g, IntMatrix::identity(gens))
                    .expect("generators map onto the group"),
                boundaries,
            }
        }
        ResolutionStyle::Padded(k) => {
            // P₁ = Z^r ⊕ Z^k ⊕ Z^k, the last block is the image of P₂ = Z^k
            let d1 = block_diagonal(&d1, &IntMatrix::identity(k))
                .hstack(&IntMatrix::zeros(gens + k, k))
                .expect("rows agree");
            let d2 = IntMatrix::zeros(r + k, k)
                .vstack(&IntMatrix::identity(k))
                .expect("columns agree");
            let aug = IntMatrix::identity(gens)
                .hstack(&IntMatrix::zeros(gens, k))
                .expect("rows agree");
            FreeResolution {
                target: g.clone(),
                ranks: vec![gens + k, r + 2 * k, k],
                boundaries: vec![d1, d2],
                augmentation: GroupHom::new(&FgAbGroup::free(gens + k), g, aug)
                    .expect("generators map onto the group"),
            }
        }
    }
}

impl FreeResolution {
    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    /// `r₀, r₁, …`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `d_{k+1}: Z^{r_{k+1}} → Z^{r_k}` at index `k`.
    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    pub fn augmentation(&self) -> &GroupHom {
        &self.augmentation
    }

    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    fn boundary_hom(&self, k: usize) -> GroupHom {
        GroupHom::new(
            &FgAbGroup::free(self.ranks[k + 1]),
            &FgAbGroup::free(self.ranks[k]),
            self.boundaries[k].clone(),
        )
        .expect("maps between free groups are well defined")
    }

    /// Checks exactness of the augmented sequence at every position.
    pub fn is_exact(&self) -> Result<bool> {
        if !self.augmentation.is_surjective()? {
            return Ok(false);
        }
        let mut maps: Vec<GroupHom> = (0..self.length()).rev().map(|k| self.boundary_hom(k)).collect();
        let top = FgAbGroup::free(*self.ranks.last().expect("nonempty"));
        maps.insert(0, GroupHom::zero(&FgAbGroup::zero(), &top));
        maps.push(self.augmentation.clone());
        for w in maps.windows(2) {
            if !is_exact_at(&w[0], &w[1])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The resolution with `G` removed, as a complex in degrees `0..=length`.
    pub fn deleted(&self) -> ChainComplex {
        let groups = self.ranks.iter().map(|&r| FgAbGroup::free(r)).collect();
        let boundaries = (0..self.length()).map(|k| self.boundary_hom(k)).collect();
        ChainComplex::new(0, groups, boundaries).expect("free boundaries fit")
    }
}

/// `C ⊗ B` degreewise.
pub fn tensor_complex(c: &ChainComplex, b: &FgAbGroup) -> ChainComplex {
    if c.is_empty() {
        return ChainComplex::zero();
    }
    let id = GroupHom::identity(b);
    let groups = (c.lowest()..=c.highest())
        .map(|n| tensor(&c.group(n), b).group().clone())
        .collect();
    let boundaries = (c.lowest() + 1..=c.highest())
        .map(|n| tensor_hom(&c.boundary(n), &id).expect("tensor of well-defined maps"))
        .collect();
    ChainComplex::new(c.lowest(), groups, boundaries).expect("shapes agree")
}

/// `Tor_n(A, B)` with cycles in `P_n ⊗ B` representing each canonical
/// generator.
#[derive(Clone, Debug)]
pub struct TorResult {
    pub degree: usize,
    pub group: FgAbGroup,
    pub witness: Vec<Vec<BigInt>>,
}

/// `H_n(P ⊗ B)` for a free resolution `P` of `a` (minimal unless given).
pub fn tor(
    a: &FgAbGroup,
    b: &FgAbGroup,
    n: usize,
    resolution: Option<&FreeResolution>,
) -> Result<TorResult> {
    let owned;
    let res = match resolution {
        Some(r) => {
            if r.target() != a {
                return Err(Error::Mismatch("resolution does not resolve the first argument".into()));
            }
            r
        }
        None => {
            owned = free_resolution(a, ResolutionStyle::Minimal);
            &owned
        }
    };
    let complex = tensor_complex(&res.deleted(), b);
    let h = complex.homology(n as i64)?;
    let witness = (0..h.group().generators())
        .map(|j| h.representative(&GroupElement::generator(h.group(), j)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(TorResult {
        degree: n,
        group: h.group().clone(),
        witness,
    })
}

/// One row of a Tor table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorEntry {
    pub n: usize,
    #[serde(flatten)]
    pub group: Canonical,
}

/// Wire form `{A, B, results: [{n, invariant_factors, free_rank}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorTable {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    pub results: Vec<TorEntry>,
}

/// `Tor_0 … Tor_nmax` of `(a, b)`.
pub fn tor_table(a: &FgAbGroup, b: &FgAbGroup, nmax: usize) -> Result<TorTable> {
    let res = free_resolution(a, ResolutionStyle::Minimal);
    let results = (0..=nmax)
        .map(|n| {
            Ok(TorEntry {
                n,
                group: tor(a, b, n, Some(&res))?.group.canonical().clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TorTable {
        a: a.to_literal(),
        b: b.to_literal(),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(lit: &str) -> Canonical {
        FgAbGroup::parse(lit).unwrap().canonical().clone()
    }

    #[test]
    fn resolution_of_z5() {
        let z5 = FgAbGroup::cyclic(5);
        let r = free_resolution(&z5, ResolutionStyle::Minimal);
        assert_eq!(r.ranks(), &[1, 1]);
        assert_eq!(r.boundaries()[0], IntMatrix::from_rows(&[vec![5]]));
        assert!(r.is_exact().unwrap());
        let d = r.deleted();
        assert_eq!(d.homology(0).unwrap().group().canonical(), &c("Z/5"));
        assert!(d.homology(1).unwrap().group().is_trivial());
    }

    #[test]
    fn free_groups_resolve_in_length_zero() {
        let g = FgAbGroup::free(3);
        let r = free_resolution(&g, ResolutionStyle::Minimal);
        assert_eq!(r.length(), 0);
        assert!(r.augmentation().is_isomorphism().unwrap());
        let d = r.deleted();
        assert_eq!((d.lowest(), d.highest()), (0, 0));
        assert!(d.homology(0).unwrap().group().is_isomorphic(&g));
    }

    #[test]
    fn padded_resolutions_are_exact_and_agree() {
        let g = FgAbGroup::parse("Z/4 + Z/6 + Z").unwrap();
        for k in 0..3 {
            let r = free_resolution(&g, ResolutionStyle::Padded(k));
            assert!(r.is_exact().unwrap(), "k = {k}");
            let d = r.deleted();
            assert!(d.validate());
            assert!(d.homology(0).unwrap().group().is_isomorphic(&g));
            for n in 1..4 {
                assert!(d.homology(n).unwrap().group().is_trivial());
            }
        }
        let z4 = FgAbGroup::cyclic(4);
        let padded = free_resolution(&z4, ResolutionStyle::Padded(1));
        assert_eq!(padded.length(), 2);
        let b = FgAbGroup::cyclic(6);
        for n in 0..3 {
            assert_eq!(
                tor(&z4, &b, n, Some(&padded)).unwrap().group.canonical(),
                tor(&z4, &b, n, None).unwrap().group.canonical()
            );
        }
    }

    #[test]
    fn tor_values() {
        let z4 = FgAbGroup::cyclic(4);
        let z6 = FgAbGroup::cyclic(6);
        assert_eq!(tor(&z4, &z6, 0, None).unwrap().group.canonical(), &c("Z/2"));
        assert_eq!(tor(&z4, &z6, 1, None).unwrap().group.canonical(), &c("Z/2"));
        assert!(tor(&z4, &z6, 2, None).unwrap().group.is_trivial());
        for k in 0..3 {
            let f = FgAbGroup::free(k);
            for n in 1..3 {
                assert!(tor(&f, &z6, n, None).unwrap().group.is_trivial());
            }
        }
    }

    #[test]
    fn tor_one_witness_is_a_cycle() {
        // Tor_1(Z/4, Z/6) is generated by 1 ⊗ 3 in Z ⊗ Z/6, i.e. 4·3 = 0 in Z/6
        let t = tor(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(6), 1, None).unwrap();
        assert_eq!(t.witness.len(), 1);
        let w = t.witness[0][0].clone();
        let z6 = BigInt::from(6);
        assert_eq!((w.clone() * 4) % &z6, BigInt::from(0));
        assert_ne!(w % z6, BigInt::from(0));
    }

    #[test]
    fn resolution_must_match() {
        let r = free_resolution(&FgAbGroup::cyclic(3), ResolutionStyle::Minimal);
        assert!(tor(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(2), 1, Some(&r)).is_err());
    }

    #[test]
    fn table_json_shape() {
        let t = tor_table(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(6), 2).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["A"], "Z/4");
        assert_eq!(v["results"][1]["invariant_factors"][0], "2");
        assert_eq!(v["results"][2]["free_rank"], 0);
        let back: TorTable = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
    }
}
