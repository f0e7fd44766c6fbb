use super::tor;
use crate::error::{Error, Result};
use crate::fgab::{direct_sum, direct_sum_many, kernel, FgAbGroup, GroupHom};

/// `Tor_n(A, B) ≅ Tor_n(B, A)`.
pub fn tor_symmetry_check(a: &FgAbGroup, b: &FgAbGroup, n: usize) -> Result<bool> {
    Ok(tor(a, b, n, None)?.group.is_isomorphic(&tor(b, a, n, None)?.group))
}

/// `Tor_n(A, ⊕ B_k) ≅ ⊕ Tor_n(A, B_k)`.
pub fn tor_additivity_check(a: &FgAbGroup, bs: &[FgAbGroup], n: usize) -> Result<bool> {
    let lhs = tor(a, &direct_sum_many(bs).group, n, None)?.group;
    let parts = bs
        .iter()
        .map(|b| Ok(tor(a, b, n, None)?.group))
        .collect::<Result<Vec<_>>>()?;
    Ok(lhs.is_isomorphic(&direct_sum_many(&parts).group))
}

fn check_presentation(p: &GroupHom, g: &FgAbGroup) -> Result<()> {
    if p.target() != g {
        return Err(Error::Mismatch("presentation does not land in the group".into()));
    }
    if !p.source().relations().is_zero() {
        return Err(Error::InvalidInput("presentation source is not free".into()));
    }
    if !p.is_surjective()? {
        return Err(Error::InvalidInput("presentation is not onto".into()));
    }
    Ok(())
}

/// For surjections `p: F → G` and `p': F' → G` from free groups,
/// `Ker p ⊕ F' ≅ Ker p' ⊕ F`.
pub fn schanuel_check(g: &FgAbGroup, p: &GroupHom, q: &GroupHom) -> Result<bool> {
    check_presentation(p, g)?;
    check_presentation(q, g)?;
    let (k, _) = kernel(p)?;
    let (k2, _) = kernel(q)?;
    let lhs = direct_sum(&k, q.source()).group;
    let rhs = direct_sum(&k2, p.source()).group;
    Ok(lhs.is_isomorphic(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_examples() {
        let z4 = FgAbGroup::cyclic(4);
        let z6 = FgAbGroup::cyclic(6);
        assert!(tor_symmetry_check(&z4, &z6, 1).unwrap());
        assert!(tor_symmetry_check(&z4, &FgAbGroup::zero(), 1).unwrap());
        let b = FgAbGroup::parse("Z/6 + Z").unwrap();
        for n in 0..3 {
            assert!(tor_symmetry_check(&FgAbGroup::integers(), &b, n).unwrap());
            assert!(tor_symmetry_check(&b, &z4, n).unwrap());
        }
        assert!(tor(&FgAbGroup::integers(), &b, 0, None).unwrap().group.is_isomorphic(&b));
    }

    #[test]
    fn additivity_examples() {
        let z4 = FgAbGroup::cyclic(4);
        let bs = [FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)];
        assert!(tor_additivity_check(&z4, &bs, 1).unwrap());
        assert_eq!(
            tor(&z4, &direct_sum_many(&bs).group, 1, None).unwrap().group.canonical(),
            &crate::fgab::Canonical::cyclic(2)
        );
        assert!(tor_additivity_check(&z4, &bs[..1], 1).unwrap());
        assert!(tor_additivity_check(&z4, &[FgAbGroup::free(1), FgAbGroup::free(2)], 1).unwrap());
    }

    #[test]
    fn schanuel_examples() {
        let z4 = FgAbGroup::cyclic(4);
        let z = FgAbGroup::integers();
        let z2 = FgAbGroup::free(2);
        let p = GroupHom::from_i64(&z, &z4, &[vec![1]]).unwrap();
        assert!(schanuel_check(&z4, &p, &p).unwrap());
        let q = GroupHom::from_i64(&z2, &z4, &[vec![1, 2]]).unwrap();
        assert!(schanuel_check(&z4, &p, &q).unwrap());
        // G free: ranks g and g + 1
        let g = FgAbGroup::free(2);
        let iso = GroupHom::identity(&g);
        let wide = GroupHom::from_i64(&FgAbGroup::free(3), &g, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert!(schanuel_check(&g, &iso, &wide).unwrap());
        assert!(kernel(&wide).unwrap().0.is_isomorphic(&z));
    }

    #[test]
    fn non_surjective_presentation_is_rejected() {
        let z4 = FgAbGroup::cyclic(4);
        let z = FgAbGroup::integers();
        let p = GroupHom::from_i64(&z, &z4, &[vec![1]]).unwrap();
        let bad = GroupHom::from_i64(&z, &z4, &[vec![2]]).unwrap();
        assert!(schanuel_check(&z4, &p, &bad).is_err());
        let not_free = GroupHom::identity(&z4);
        assert!(schanuel_check(&z4, &p, &not_free).is_err());
    }
}
