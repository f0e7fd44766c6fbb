use std::fmt;

use num_bigint::BigInt;

use super::FgAbGroup;
use crate::error::{Error, Result};

/// An element `Σ c_i x_i` of a presented group, kept in reduced form.
#[derive(Clone)]
pub struct GroupElement {
    owner: FgAbGroup,
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn new(owner: &FgAbGroup, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != owner.generators() {
            return Err(Error::Dimension(format!(
                "{} coordinates for a group on {} generators",
                coords.len(),
                owner.generators()
            )));
        }
        let coords = owner.reduce(&coords)?;
        Ok(GroupElement {
            owner: owner.clone(),
            coords,
        })
    }

    pub fn from_i64(owner: &FgAbGroup, coords: &[i64]) -> Result<Self> {
        Self::new(owner, coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(owner: &FgAbGroup) -> Self {
        GroupElement {
            owner: owner.clone(),
            coords: vec![BigInt::from(0); owner.generators()],
        }
    }

    /// The `i`-th generator.
    pub fn generator(owner: &FgAbGroup, i: usize) -> Result<Self> {
        let mut c = vec![BigInt::from(0); owner.generators()];
        *c.get_mut(i)
            .ok_or_else(|| Error::InvalidInput(format!("no generator {i}")))? = BigInt::from(1);
        Self::new(owner, c)
    }

    pub fn from_canonical_coords(owner: &FgAbGroup, c: &[BigInt]) -> Result<Self> {
        Self::new(owner, owner.from_canonical_coords(c)?)
    }

    pub fn owner(&self) -> &FgAbGroup {
        &self.owner
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn canonical_coords(&self) -> Vec<BigInt> {
        self.owner
            .canonical_coords(&self.coords)
            .expect("length checked at construction")
    }

    fn check_owner(&self, other: &Self) -> Result<()> {
        if self.owner != other.owner {
            return Err(Error::Mismatch("elements of different groups".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        Self::new(
            &self.owner,
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        Self::new(
            &self.owner,
            self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.owner, self.coords.iter().map(|a| -a).collect())
            .expect("same shape")
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(&self.owner, self.coords.iter().map(|a| a * k).collect())
            .expect("same shape")
    }

    pub fn is_zero(&self) -> bool {
        self.owner
            .is_relation(&self.coords)
            .expect("length checked at construction")
    }
}

/// Equality is membership of the difference in the relation lattice.
impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.owner == other.owner
            && self
                .sub(other)
                .map(|d| d.is_zero())
                .unwrap_or(false)
    }
}

impl Eq for GroupElement {}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) in {}", c.join(", "), self.owner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::IntMatrix;

    #[test]
    fn equality_modulo_relations() {
        let g = FgAbGroup::new(2, IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])).unwrap();
        let a = GroupElement::from_i64(&g, &[1, 1]).unwrap();
        let b = GroupElement::from_i64(&g, &[3, -2]).unwrap();
        assert_eq!(a, b);
        let c = GroupElement::from_i64(&g, &[0, 1]).unwrap();
        assert_ne!(a, c);
        assert!(a.scale(&BigInt::from(6)).is_zero());
        assert!(!a.scale(&BigInt::from(3)).is_zero());
    }

    #[test]
    fn mixing_groups_is_rejected() {
        let a = GroupElement::generator(&FgAbGroup::cyclic(4), 0).unwrap();
        let b = GroupElement::generator(&FgAbGroup::cyclic(6), 0).unwrap();
        assert!(a.add(&b).is_err());
        assert_ne!(a, b);
    }
}
