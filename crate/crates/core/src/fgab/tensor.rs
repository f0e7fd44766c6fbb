use num_bigint::BigInt;
use num_traits::Zero;

use super::{FgAbGroup, GroupElement, GroupHom};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// `G ⊗ H` presented on generators `x_i ⊗ y_j` (index `i·h + j`) with
/// relations `r ⊗ y_j` and `x_i ⊗ s` for every relator `r` of `G` and `s`
/// of `H`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    left: FgAbGroup,
    right: FgAbGroup,
    group: FgAbGroup,
}

pub fn tensor(g: &FgAbGroup, h: &FgAbGroup) -> TensorProduct {
    let (gg, hg) = (g.generators(), h.generators());
    let rel = g
        .relations()
        .kron(&IntMatrix::identity(hg))
        .hstack(&IntMatrix::identity(gg).kron(h.relations()))
        .expect("both blocks have g·h rows");
    TensorProduct {
        left: g.clone(),
        right: h.clone(),
        group: FgAbGroup::new(gg * hg, rel).expect("shape"),
    }
}

impl TensorProduct {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn left(&self) -> &FgAbGroup {
        &self.left
    }

    pub fn right(&self) -> &FgAbGroup {
        &self.right
    }

    /// Coordinates of `x ⊗ y` from coordinates of `x` and `y`.
    pub fn pair_coords(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(x.len() * y.len());
        for a in x {
            for b in y {
                out.push(if a.is_zero() || b.is_zero() {
                    BigInt::zero()
                } else {
                    a * b
                });
            }
        }
        out
    }

    /// The universal bilinear map `(x, y) ↦ x ⊗ y`.
    pub fn pair(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        if x.owner() != &self.left || y.owner() != &self.right {
            return Err(Error::Mismatch("factors do not belong to this tensor product".into()));
        }
        GroupElement::new(&self.group, self.pair_coords(x.coords(), y.coords()))
    }
}

/// `f ⊗ g: G ⊗ H → G' ⊗ H'`.
pub fn tensor_hom(f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
    let src = tensor(f.source(), g.source());
    let tgt = tensor(f.target(), g.target());
    GroupHom::new(src.group(), tgt.group(), f.matrix().kron(g.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::Canonical;

    #[test]
    fn cyclic_examples() {
        let t = tensor(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(6));
        assert_eq!(t.group().canonical(), &Canonical::cyclic(2));
        assert!(tensor(&FgAbGroup::cyclic(2), &FgAbGroup::cyclic(3)).group().is_trivial());
        let g = FgAbGroup::parse("Z^2 + Z/4 + Z/12").unwrap();
        assert!(tensor(&g, &FgAbGroup::integers()).group().is_isomorphic(&g));
    }

    #[test]
    fn pairing_is_bilinear() {
        let a = FgAbGroup::parse("Z/4 + Z").unwrap();
        let b = FgAbGroup::parse("Z/6 + Z/2").unwrap();
        let t = tensor(&a, &b);
        let x1 = GroupElement::from_i64(&a, &[1, 2]).unwrap();
        let x2 = GroupElement::from_i64(&a, &[3, -1]).unwrap();
        let y1 = GroupElement::from_i64(&b, &[5, 1]).unwrap();
        let y2 = GroupElement::from_i64(&b, &[2, 0]).unwrap();
        let lhs = t.pair(&x1.add(&x2).unwrap(), &y1).unwrap();
        let rhs = t.pair(&x1, &y1).unwrap().add(&t.pair(&x2, &y1).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = t.pair(&x1, &y1.add(&y2).unwrap()).unwrap();
        let rhs = t.pair(&x1, &y1).unwrap().add(&t.pair(&x1, &y2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let k = BigInt::from(3);
        assert_eq!(
            t.pair(&x1.scale(&k), &y1).unwrap(),
            t.pair(&x1, &y1.scale(&k)).unwrap()
        );
    }

    #[test]
    fn tensor_of_maps() {
        let z = FgAbGroup::integers();
        let z6 = FgAbGroup::cyclic(6);
        let f = tensor_hom(&GroupHom::scalar(&z, 2), &GroupHom::identity(&z6)).unwrap();
        // ×2 on Z ⊗ Z/6 ≅ Z/6 has kernel of order 2
        let (k, _) = crate::fgab::kernel(&f).unwrap();
        assert_eq!(k.canonical(), &Canonical::cyclic(2));
    }
}
