use std::collections::BTreeMap;

use super::{hull, ChainComplex};
use crate::error::{Error, Result};
use crate::fgab::GroupHom;
use crate::intlin::IntMatrix;

/// A chain map `f: C → D`, one hom per degree. Degrees without an explicit
/// component carry the zero map.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: BTreeMap<i64, GroupHom>,
}

impl ChainMap {
    /// `components[k]` is `f_{lowest + k}`. Checks every component's shape
    /// and `f_{n−1} ∘ d_n = d'_n ∘ f_n` in every degree.
    pub fn new(
        source: &ChainComplex,
        target: &ChainComplex,
        lowest: i64,
        components: Vec<GroupHom>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, f) in components.into_iter().enumerate() {
            let n = lowest + k as i64;
            if f.source() != &source.group(n) || f.target() != &target.group(n) {
                return Err(Error::Dimension(format!(
                    "component in degree {n} does not connect the chain groups"
                )));
            }
            map.insert(n, f);
        }
        let f = ChainMap {
            source: source.clone(),
            target: target.clone(),
            components: map,
        };
        let (lo, hi) = hull(&[source, target]);
        for n in lo..=hi + 1 {
            let lhs = f.component(n - 1).compose(&source.boundary(n))?;
            let rhs = target.boundary(n).compose(&f.component(n))?;
            if !lhs.equals(&rhs) {
                return Err(Error::IllDefined(format!(
                    "square at degree {n} does not commute"
                )));
            }
        }
        Ok(f)
    }

    /// Builds components from matrices over the hull of both supports.
    pub fn from_matrices(
        source: &ChainComplex,
        target: &ChainComplex,
        lowest: i64,
        matrices: Vec<IntMatrix>,
    ) -> Result<Self> {
        let comps = matrices
            .into_iter()
            .enumerate()
            .map(|(k, m)| {
                let n = lowest + k as i64;
                GroupHom::new(&source.group(n), &target.group(n), m)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, lowest, comps)
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let comps = (c.lowest()..=c.highest())
            .map(|n| GroupHom::identity(&c.group(n)))
            .collect();
        Self::new(c, c, c.lowest(), comps).expect("identity commutes")
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Self {
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            components: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    /// `f_n`.
    pub fn component(&self, n: i64) -> GroupHom {
        self.components.get(&n).cloned().unwrap_or_else(|| {
            GroupHom::zero(&self.source.group(n), &self.target.group(n))
        })
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap> {
        if first.target != self.source {
            return Err(Error::Mismatch("chain maps are not composable".into()));
        }
        let (lo, hi) = hull(&[&first.source, &self.target]);
        let comps = (lo..=hi)
            .map(|n| self.component(n).compose(&first.component(n)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&first.source, &self.target, lo, comps)
    }

    /// Degreewise equality as homs.
    pub fn equals(&self, other: &ChainMap) -> bool {
        let (lo, hi) = hull(&[&self.source, &self.target]);
        self.source == other.source
            && self.target == other.target
            && (lo..=hi).all(|n| self.component(n).equals(&other.component(n)))
    }
}

/// `H_n(f): z + B_n ↦ f_n(z) + B'_n`.
pub fn induced_map(f: &ChainMap, n: i64) -> Result<GroupHom> {
    let hs = f.source.homology(n)?;
    let ht = f.target.homology(n)?;
    let fz = f.component(n);
    let mut cols = Vec::with_capacity(hs.group().generators());
    for j in 0..hs.group().generators() {
        let gen = crate::fgab::GroupElement::generator(hs.group(), j)?;
        let z = hs.representative(&gen)?;
        let image = fz.apply_coords(&z)?;
        cols.push(ht.class_of(&image)?.coords().to_vec());
    }
    GroupHom::new(
        hs.group(),
        ht.group(),
        IntMatrix::from_columns(ht.group().generators(), &cols)?,
    )
}
