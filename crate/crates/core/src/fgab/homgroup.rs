use num_bigint::BigInt;

use super::construct::{smith_form, SmithForm};
use super::lift::well_definedness_rows;
use super::{FgAbGroup, GroupElement, GroupHom};
use crate::error::{Error, Result};
use crate::intlin::{
    image_basis, kernel_basis, smith_normal_form, solve_with_smith, IntMatrix, SmithDecomposition,
};

/// `Hom(P, Q)` as a presented group, with a hom for each canonical generator.
///
/// A hom is a `q × p` matrix `X` with `X·R_P ⊆ span R_Q`; two matrices give
/// the same hom when their difference has columns in `span R_Q`. Internally
/// the valid matrices form a lattice with a fixed basis, and the group is
/// that lattice modulo the null homs.
#[derive(Clone, Debug)]
pub struct HomGroup {
    source: FgAbGroup,
    target: FgAbGroup,
    lattice: SmithDecomposition,
    smith: SmithForm,
    basis: Vec<GroupHom>,
}

pub fn hom_group(p: &FgAbGroup, q: &FgAbGroup) -> Result<HomGroup> {
    let (pg, qg) = (p.generators(), q.generators());
    let (rp, rq) = (p.relations().cols(), q.relations().cols());
    let x_len = qg * pg;
    let system = well_definedness_rows(p, q, x_len + rq * rp);
    let valid = kernel_basis(&system).select_rows(0..x_len);
    let lattice = image_basis(&valid);
    let k = lattice.cols();

    let ls = smith_normal_form(&lattice);
    let mut null_cols = Vec::with_capacity(rq * pg);
    for t in 0..rq {
        for c in 0..pg {
            let mut v = vec![BigInt::from(0); x_len];
            for i in 0..qg {
                v[i * pg + c] = q.relations()[(i, t)].clone();
            }
            let z = solve_with_smith(&ls, &v)?
                .ok_or_else(|| Error::Contract("null hom outside the valid lattice".into()))?;
            null_cols.push(z.particular);
        }
    }
    let raw = FgAbGroup::new(k, IntMatrix::from_columns(k, &null_cols)?)?;
    let smith = smith_form(&raw)?;
    let mut basis = Vec::with_capacity(smith.group.generators());
    for j in 0..smith.group.generators() {
        let z = smith.from_canonical.matrix().column(j);
        let v = lattice.mul_vec(&z)?;
        basis.push(GroupHom::new(p, q, IntMatrix::new(qg, pg, v)?)?);
    }
    Ok(HomGroup {
        source: p.clone(),
        target: q.clone(),
        lattice: ls,
        smith,
        basis,
    })
}

impl HomGroup {
    /// The group of homs, in canonical presentation.
    pub fn group(&self) -> &FgAbGroup {
        &self.smith.group
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    /// The hom corresponding to each generator of [`HomGroup::group`].
    pub fn basis(&self) -> &[GroupHom] {
        &self.basis
    }

    /// The element of [`HomGroup::group`] representing `h`.
    pub fn element_of(&self, h: &GroupHom) -> Result<GroupElement> {
        if h.source() != &self.source || h.target() != &self.target {
            return Err(Error::Mismatch("hom does not belong to this Hom group".into()));
        }
        let v = h.matrix().entries().to_vec();
        let z = solve_with_smith(&self.lattice, &v)?
            .ok_or_else(|| Error::Contract("well-defined hom outside the valid lattice".into()))?;
        let raw = GroupElement::new(self.smith.to_canonical.source(), z.particular)?;
        self.smith.to_canonical.apply(&raw)
    }

    /// The hom represented by an element of [`HomGroup::group`].
    pub fn hom_of(&self, x: &GroupElement) -> Result<GroupHom> {
        if x.owner() != self.group() {
            return Err(Error::Mismatch("element is not in this Hom group".into()));
        }
        let mut acc = GroupHom::zero(&self.source, &self.target);
        for (c, b) in x.coords().iter().zip(&self.basis) {
            acc = acc.add(&b.scale(c))?;
        }
        Ok(acc)
    }
}

/// `Hom(G, Z)`.
pub fn dual(g: &FgAbGroup) -> Result<HomGroup> {
    hom_group(g, &FgAbGroup::integers())
}

/// Precomposition with `f: G → H` as a map `Hom(H, C) → Hom(G, C)`.
pub fn precompose(f: &GroupHom, from: &HomGroup, to: &HomGroup) -> Result<GroupHom> {
    if from.source() != f.target() || to.source() != f.source() || from.target() != to.target() {
        return Err(Error::Mismatch("Hom groups do not fit the map".into()));
    }
    let mut cols = Vec::with_capacity(from.basis().len());
    for phi in from.basis() {
        cols.push(to.element_of(&phi.compose(f)?)?.coords().to_vec());
    }
    GroupHom::new(
        from.group(),
        to.group(),
        IntMatrix::from_columns(to.group().generators(), &cols)?,
    )
}

/// The dual map `f*: Hom(H, Z) → Hom(G, Z)` of `f: G → H`.
pub fn dual_hom(f: &GroupHom) -> Result<GroupHom> {
    precompose(f, &dual(f.target())?, &dual(f.source())?)
}
