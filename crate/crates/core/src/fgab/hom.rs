use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{FgAbGroup, GroupElement, PresentationJson};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// A homomorphism of presented groups.
///
/// `matrix` sends source generators to target coordinates; `certificate`
/// witnesses well-definedness: `matrix · R_src = R_tgt · certificate`.
#[derive(Clone)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
    certificate: IntMatrix,
}

impl GroupHom {
    /// Builds the hom given by `matrix`, rejecting it if some source relator
    /// does not map into the target's relation lattice.
    pub fn new(source: &FgAbGroup, target: &FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(Error::Dimension(format!(
                "hom matrix is {}x{} but the groups have {} and {} generators",
                matrix.rows(),
                matrix.cols(),
                target.generators(),
                source.generators()
            )));
        }
        let images = matrix.mul(source.relations())?;
        let mut cert_cols = Vec::with_capacity(images.cols());
        for (j, col) in images.columns().into_iter().enumerate() {
            let sol = target.relation_coefficients(&col)?.ok_or_else(|| {
                Error::IllDefined(format!(
                    "relator {j} of {source} does not map to a relation of {target}"
                ))
            })?;
            cert_cols.push(sol);
        }
        let certificate = IntMatrix::from_columns(target.relations().cols(), &cert_cols)?;
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
            certificate,
        })
    }

    /// Trusted constructor for homs whose certificate is known by
    /// construction. Checked in debug builds.
    pub(crate) fn with_certificate(
        source: &FgAbGroup,
        target: &FgAbGroup,
        matrix: IntMatrix,
        certificate: IntMatrix,
    ) -> Self {
        debug_assert_eq!(
            matrix.mul(source.relations()).unwrap(),
            target.relations().mul(&certificate).unwrap()
        );
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
            certificate,
        }
    }

    pub fn from_i64(source: &FgAbGroup, target: &FgAbGroup, rows: &[Vec<i64>]) -> Result<Self> {
        let m = if rows.is_empty() {
            IntMatrix::zeros(0, source.generators())
        } else {
            IntMatrix::from_rows(rows)
        };
        Self::new(source, target, m)
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        Self::with_certificate(
            g,
            g,
            IntMatrix::identity(g.generators()),
            IntMatrix::identity(g.relations().cols()),
        )
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        Self::with_certificate(
            source,
            target,
            IntMatrix::zeros(target.generators(), source.generators()),
            IntMatrix::zeros(target.relations().cols(), source.relations().cols()),
        )
    }

    /// Multiplication by `k` on `g`.
    pub fn scalar(g: &FgAbGroup, k: i64) -> Self {
        let k = BigInt::from(k);
        Self::with_certificate(
            g,
            g,
            IntMatrix::identity(g.generators()).scale(&k),
            IntMatrix::identity(g.relations().cols()).scale(&k),
        )
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn certificate(&self) -> &IntMatrix {
        &self.certificate
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target != self.source {
            return Err(Error::Mismatch(format!(
                "cannot compose: {} → {} after {} → {}",
                self.source, self.target, first.source, first.target
            )));
        }
        Ok(GroupHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix)?,
            certificate: self.certificate.mul(&first.certificate)?,
        })
    }

    fn check_parallel(&self, other: &GroupHom) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Mismatch("homs are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupHom) -> Result<GroupHom> {
        self.check_parallel(other)?;
        Ok(GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix)?,
            certificate: self.certificate.add(&other.certificate)?,
        })
    }

    pub fn sub(&self, other: &GroupHom) -> Result<GroupHom> {
        self.check_parallel(other)?;
        Ok(GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.sub(&other.matrix)?,
            certificate: self.certificate.sub(&other.certificate)?,
        })
    }

    pub fn neg(&self) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.neg(),
            certificate: self.certificate.neg(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(k),
            certificate: self.certificate.scale(k),
        }
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.owner() != &self.source {
            return Err(Error::Mismatch("element is not in the source".into()));
        }
        GroupElement::new(&self.target, self.matrix.mul_vec(x.coords())?)
    }

    /// Image of a coordinate vector (not reduced).
    pub fn apply_coords(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        self.matrix.mul_vec(x)
    }

    pub fn is_zero(&self) -> bool {
        self.target
            .columns_are_relations(&self.matrix)
            .expect("shapes fixed at construction")
    }

    /// Equal as maps: parallel and the difference is zero.
    pub fn equals(&self, other: &GroupHom) -> bool {
        self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.equals(&GroupHom::identity(&self.source))
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(super::kernel(self)?.0.is_trivial())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(super::cokernel(self)?.0.is_trivial())
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_injective()? && self.is_surjective()?)
    }

    pub fn to_json(&self) -> HomJson {
        HomJson {
            source: (&self.source).into(),
            target: (&self.target).into(),
            matrix: self.matrix.clone(),
        }
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} → {}, {:?})", self.source, self.target, self.matrix)
    }
}

/// Wire form `{source, target, matrix}` with decimal-string entries.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomJson {
    pub source: PresentationJson,
    pub target: PresentationJson,
    pub matrix: IntMatrix,
}

impl HomJson {
    pub fn into_hom(self) -> Result<GroupHom> {
        let source = self.source.into_group()?;
        let target = self.target.into_group()?;
        let matrix = if self.matrix.rows() == 0 && self.matrix.cols() == 0 {
            IntMatrix::zeros(target.generators(), source.generators())
        } else {
            self.matrix
        };
        GroupHom::new(&source, &target, matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ill_defined_maps_are_rejected() {
        let z4 = FgAbGroup::cyclic(4);
        let z6 = FgAbGroup::cyclic(6);
        // 1 ↦ 1 from Z/4 to Z/6 is not well defined
        assert!(matches!(
            GroupHom::from_i64(&z4, &z6, &[vec![1]]),
            Err(Error::IllDefined(_))
        ));
        // 1 ↦ 3 is
        let f = GroupHom::from_i64(&z4, &z6, &[vec![3]]).unwrap();
        assert_eq!(f.certificate(), &IntMatrix::from_rows(&[vec![2]]));
        assert!(!f.is_zero());
        assert!(f.scale(&BigInt::from(2)).is_zero());
    }

    #[test]
    fn composition_carries_certificates() {
        let z4 = FgAbGroup::cyclic(4);
        let z2 = FgAbGroup::cyclic(2);
        let z8 = FgAbGroup::cyclic(8);
        let f = GroupHom::from_i64(&z4, &z2, &[vec![1]]).unwrap();
        let g = GroupHom::from_i64(&z2, &z8, &[vec![4]]).unwrap();
        let h = g.compose(&f).unwrap();
        assert_eq!(
            h.matrix().mul(z4.relations()).unwrap(),
            z8.relations().mul(h.certificate()).unwrap()
        );
        assert!(f.compose(&g).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = GroupHom::from_i64(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(6), &[vec![3]]).unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        assert!(text.contains("\"3\""));
        let back: HomJson = serde_json::from_str(&text).unwrap();
        assert!(back.into_hom().unwrap().equals(&f));
    }
}
