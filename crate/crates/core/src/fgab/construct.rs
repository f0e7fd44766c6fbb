//! Limits, colimits and presentation bookkeeping.

use num_bigint::BigInt;

use super::{FgAbGroup, GroupHom};
use crate::error::{Error, Result};
use crate::intlin::{
    block_diagonal, image_basis, kernel_basis, smith_normal_form, solve_with_smith, IntMatrix,
};

/// A group in canonical presentation together with mutually inverse
/// isomorphisms to and from the presentation it was computed from.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub group: FgAbGroup,
    pub to_canonical: GroupHom,
    pub from_canonical: GroupHom,
}

/// Rewrites `g` in canonical presentation (`Z/d_1 ⊕ … ⊕ Z^r`, one generator
/// per summand, no killed generators).
pub fn smith_form(g: &FgAbGroup) -> Result<SmithForm> {
    let s = g.smith();
    let c = s.canonical.clone();
    let canon = FgAbGroup::from_canonical(&c);
    let n = g.generators();
    let to = s.decomposition.u.select_rows(s.units..n);
    let from = s.decomposition.u_inverse.select_cols(s.units..n);
    Ok(SmithForm {
        to_canonical: GroupHom::new(g, &canon, to)?,
        from_canonical: GroupHom::new(&canon, g, from)?,
        group: canon,
    })
}

/// `G ⊕ H` with its injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub group: FgAbGroup,
    pub injections: Vec<GroupHom>,
    pub projections: Vec<GroupHom>,
}

pub fn direct_sum(g: &FgAbGroup, h: &FgAbGroup) -> DirectSum {
    direct_sum_many(&[g.clone(), h.clone()])
}

/// External direct sum of finitely many groups; generators are concatenated.
pub fn direct_sum_many(parts: &[FgAbGroup]) -> DirectSum {
    let rel = parts
        .iter()
        .fold(IntMatrix::zeros(0, 0), |acc, p| block_diagonal(&acc, p.relations()));
    let total_g: usize = parts.iter().map(FgAbGroup::generators).sum();
    let total_r = rel.cols();
    let group = FgAbGroup::new(total_g, rel).expect("block shape");
    let (mut injections, mut projections) = (Vec::new(), Vec::new());
    let (mut go, mut ro) = (0, 0);
    for p in parts {
        let (g, r) = (p.generators(), p.relations().cols());
        let inj = IntMatrix::from_fn(total_g, g, |i, j| unit(i == go + j));
        let inj_cert = IntMatrix::from_fn(total_r, r, |i, j| unit(i == ro + j));
        let proj = IntMatrix::from_fn(g, total_g, |i, j| unit(j == go + i));
        let proj_cert = IntMatrix::from_fn(r, total_r, |i, j| unit(j == ro + i));
        injections.push(GroupHom::with_certificate(p, &group, inj, inj_cert));
        projections.push(GroupHom::with_certificate(&group, p, proj, proj_cert));
        go += g;
        ro += r;
    }
    DirectSum {
        group,
        injections,
        projections,
    }
}

fn unit(b: bool) -> BigInt {
    BigInt::from(u8::from(b))
}

fn simplify_sub(group: FgAbGroup, inclusion: GroupHom) -> Result<(FgAbGroup, GroupHom)> {
    let sf = smith_form(&group)?;
    let incl = inclusion.compose(&sf.from_canonical)?;
    Ok((sf.group, incl))
}

/// Subgroup of `g` generated by the columns of `vectors`, in canonical
/// presentation, with its inclusion.
pub fn subgroup_generated(g: &FgAbGroup, vectors: &IntMatrix) -> Result<(FgAbGroup, GroupHom)> {
    if vectors.rows() != g.generators() {
        return Err(Error::Dimension(format!(
            "generating vectors have {} rows, group has {} generators",
            vectors.rows(),
            g.generators()
        )));
    }
    let k = vectors.cols();
    let ker = kernel_basis(&vectors.hstack(g.relations())?);
    let rel = ker.select_rows(0..k);
    let sub = FgAbGroup::new(k, rel)?;
    let incl = GroupHom::new(&sub, g, vectors.clone())?;
    simplify_sub(sub, incl)
}

/// `Ker f` in canonical presentation with its inclusion into the source.
pub fn kernel(f: &GroupHom) -> Result<(FgAbGroup, GroupHom)> {
    let src = f.source();
    let sg = src.generators();
    // x ∈ Z^sg with f(x) a relation of the target
    let ker = kernel_basis(&f.matrix().hstack(f.target().relations())?);
    let preimage = image_basis(&ker.select_rows(0..sg));
    let rank = preimage.cols();
    let ps = smith_normal_form(&preimage);
    let mut rel_cols = Vec::with_capacity(src.relations().cols());
    for col in src.relations().columns() {
        let sol = solve_with_smith(&ps, &col)?.ok_or_else(|| {
            Error::Contract("source relator outside the preimage lattice".into())
        })?;
        rel_cols.push(sol.particular);
    }
    let rel = IntMatrix::from_columns(rank, &rel_cols)?;
    let k = FgAbGroup::new(rank, rel)?;
    let incl = GroupHom::with_certificate(
        &k,
        src,
        preimage,
        IntMatrix::identity(src.relations().cols()),
    );
    simplify_sub(k, incl)
}

/// `Coker f = target / Im f` in canonical presentation with its projection.
pub fn cokernel(f: &GroupHom) -> Result<(FgAbGroup, GroupHom)> {
    let tgt = f.target();
    let rt = tgt.relations().cols();
    let rel = tgt.relations().hstack(f.matrix())?;
    let q = FgAbGroup::new(tgt.generators(), rel)?;
    let cert = IntMatrix::identity(rt).vstack(&IntMatrix::zeros(f.matrix().cols(), rt))?;
    let proj = GroupHom::with_certificate(tgt, &q, IntMatrix::identity(tgt.generators()), cert);
    let sf = smith_form(&q)?;
    let proj = sf.to_canonical.compose(&proj)?;
    Ok((sf.group, proj))
}

/// `Im f` as a subgroup of the target.
pub fn image(f: &GroupHom) -> Result<(FgAbGroup, GroupHom)> {
    subgroup_generated(f.target(), f.matrix())
}

/// Factors `h: P → B` through an injective `incl: K → B`, i.e. finds the
/// unique `u` with `incl ∘ u = h`. Fails if `Im h ⊄ Im incl`.
pub fn factor_through_injection(h: &GroupHom, incl: &GroupHom) -> Result<GroupHom> {
    if h.target() != incl.target() {
        return Err(Error::Mismatch("factorisation needs a common target".into()));
    }
    let b = incl.target();
    let system = incl.matrix().hstack(b.relations())?;
    let k = incl.source().generators();
    let ss = smith_normal_form(&system);
    let mut cols = Vec::with_capacity(h.matrix().cols());
    for col in h.matrix().columns() {
        let sol = solve_with_smith(&ss, &col)?.ok_or_else(|| {
            Error::InvalidInput("image is not contained in the subgroup".into())
        })?;
        cols.push(sol.particular[..k].to_vec());
    }
    GroupHom::new(h.source(), incl.source(), IntMatrix::from_columns(k, &cols)?)
}

/// Pullback of `f: A → C` and `g: B → C`: `D = {(a, b) : f(a) = g(b)}`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub group: FgAbGroup,
    pub to_left: GroupHom,
    pub to_right: GroupHom,
}

pub fn pullback(f: &GroupHom, g: &GroupHom) -> Result<Pullback> {
    if f.target() != g.target() {
        return Err(Error::Mismatch("pullback of maps with different targets".into()));
    }
    let sum = direct_sum(f.source(), g.source());
    let diff = f
        .compose(&sum.projections[0])?
        .sub(&g.compose(&sum.projections[1])?)?;
    let (d, incl) = kernel(&diff)?;
    Ok(Pullback {
        to_left: sum.projections[0].compose(&incl)?,
        to_right: sum.projections[1].compose(&incl)?,
        group: d,
    })
}

/// Pushout of `f: C → A` and `g: C → B`: `(A ⊕ B) / {(f(c), −g(c))}`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub group: FgAbGroup,
    pub from_left: GroupHom,
    pub from_right: GroupHom,
}

pub fn pushout(f: &GroupHom, g: &GroupHom) -> Result<Pushout> {
    if f.source() != g.source() {
        return Err(Error::Mismatch("pushout of maps with different sources".into()));
    }
    let sum = direct_sum(f.target(), g.target());
    let diff = sum.injections[0]
        .compose(f)?
        .sub(&sum.injections[1].compose(g)?)?;
    let (d, proj) = cokernel(&diff)?;
    Ok(Pushout {
        from_left: proj.compose(&sum.injections[0])?,
        from_right: proj.compose(&sum.injections[1])?,
        group: d,
    })
}

/// `Ker(f − g)`.
pub fn equalizer(f: &GroupHom, g: &GroupHom) -> Result<(FgAbGroup, GroupHom)> {
    kernel(&f.sub(g)?)
}

/// `Coker(f − g)`, the colimit of the parallel pair.
pub fn coequalizer(f: &GroupHom, g: &GroupHom) -> Result<(FgAbGroup, GroupHom)> {
    cokernel(&f.sub(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::{Canonical, GroupElement};

    fn canon(factors: &[i64], free: usize) -> Canonical {
        Canonical {
            invariant_factors: factors.iter().map(|&d| BigInt::from(d)).collect(),
            free_rank: free,
        }
    }

    fn mul(g: &FgAbGroup, k: i64) -> GroupHom {
        GroupHom::scalar(g, k)
    }

    #[test]
    fn direct_sum_examples_and_identities() {
        let s = direct_sum(&FgAbGroup::cyclic(2), &FgAbGroup::cyclic(3));
        assert_eq!(s.group.canonical(), &canon(&[6], 0));
        let g = FgAbGroup::parse("Z + Z/4").unwrap();
        assert!(direct_sum(&g, &FgAbGroup::zero()).group.is_isomorphic(&g));
        assert_eq!(
            direct_sum(&FgAbGroup::integers(), &FgAbGroup::integers()).group.canonical(),
            &canon(&[], 2)
        );
        let s = direct_sum(&g, &FgAbGroup::cyclic(6));
        for k in 0..2 {
            for j in 0..2 {
                let pi = s.projections[k].compose(&s.injections[j]).unwrap();
                if k == j {
                    assert!(pi.is_identity());
                } else {
                    assert!(pi.is_zero());
                }
            }
        }
        let sum = s.injections[0]
            .compose(&s.projections[0])
            .unwrap()
            .add(&s.injections[1].compose(&s.projections[1]).unwrap())
            .unwrap();
        assert!(sum.is_identity());
    }

    #[test]
    fn kernel_examples() {
        let z = FgAbGroup::integers();
        assert!(kernel(&mul(&z, 5)).unwrap().0.is_trivial());
        let (k, incl) = kernel(&GroupHom::zero(&z, &FgAbGroup::zero())).unwrap();
        assert_eq!(k.canonical(), &canon(&[], 1));
        assert!(incl.is_isomorphism().unwrap());
        let z4 = FgAbGroup::cyclic(4);
        let z2 = FgAbGroup::cyclic(2);
        let p = GroupHom::from_i64(&z4, &z2, &[vec![1]]).unwrap();
        let (k, incl) = kernel(&p).unwrap();
        assert_eq!(k.canonical(), &canon(&[2], 0));
        // enumeration oracle: elements of Z/4 mapping to 0 mod 2 are {0, 2}
        let brute: Vec<i64> = (0..4).filter(|x| x % 2 == 0).collect();
        assert_eq!(brute.len() as u64, k.finite_order().unwrap());
        assert!(p.compose(&incl).unwrap().is_zero());
        assert!(incl.is_injective().unwrap());
    }

    #[test]
    fn cokernel_examples() {
        let z = FgAbGroup::integers();
        let (c, proj) = cokernel(&mul(&z, 5)).unwrap();
        assert_eq!(c.canonical(), &canon(&[5], 0));
        assert!(proj.compose(&mul(&z, 5)).unwrap().is_zero());
        assert!(proj.is_surjective().unwrap());
        let g = FgAbGroup::parse("Z/6 + Z").unwrap();
        assert!(cokernel(&GroupHom::identity(&g)).unwrap().0.is_trivial());
        let (c, _) = cokernel(&GroupHom::zero(&FgAbGroup::zero(), &g)).unwrap();
        assert!(c.is_isomorphic(&g));
    }

    #[test]
    fn pullback_examples() {
        let z = FgAbGroup::integers();
        let pb = pullback(&mul(&z, 2), &mul(&z, 3)).unwrap();
        assert_eq!(pb.group.canonical(), &canon(&[], 1));
        // generated by (3, 2)
        let gen = GroupElement::generator(&pb.group, 0).unwrap();
        let a = pb.to_left.apply(&gen).unwrap().coords()[0].clone();
        let b = pb.to_right.apply(&gen).unwrap().coords()[0].clone();
        assert!(a == BigInt::from(3) && b == BigInt::from(2) || a == BigInt::from(-3) && b == BigInt::from(-2));
        let ker = kernel_basis(&IntMatrix::from_rows(&[vec![2, -3]]));
        assert_eq!(ker.cols(), 1);

        let a4 = FgAbGroup::parse("Z/4 + Z").unwrap();
        let f = GroupHom::from_i64(&a4, &FgAbGroup::cyclic(2), &[vec![1, 1]]).unwrap();
        let pb = pullback(&f, &GroupHom::identity(&FgAbGroup::cyclic(2))).unwrap();
        assert!(pb.group.is_isomorphic(&a4));

        let b = FgAbGroup::cyclic(6);
        let pb = pullback(
            &GroupHom::zero(&a4, &FgAbGroup::zero()),
            &GroupHom::zero(&b, &FgAbGroup::zero()),
        )
        .unwrap();
        assert!(pb.group.is_isomorphic(&direct_sum(&a4, &b).group));
    }

    #[test]
    fn pushout_examples() {
        let a = FgAbGroup::parse("Z/4 + Z").unwrap();
        let b = FgAbGroup::cyclic(6);
        let zero = FgAbGroup::zero();
        let po = pushout(&GroupHom::zero(&zero, &a), &GroupHom::zero(&zero, &b)).unwrap();
        assert!(po.group.is_isomorphic(&direct_sum(&a, &b).group));

        let f = GroupHom::from_i64(&FgAbGroup::cyclic(2), &a, &[vec![2], vec![0]]).unwrap();
        let id = GroupHom::identity(&FgAbGroup::cyclic(2));
        let po = pushout(&f, &id).unwrap();
        assert!(po.group.is_isomorphic(&a));

        let z = FgAbGroup::integers();
        let po = pushout(&mul(&z, 2), &mul(&z, 2)).unwrap();
        assert_eq!(po.group.canonical(), &canon(&[2], 1));
        let lhs = po.from_left.compose(&mul(&z, 2)).unwrap();
        let rhs = po.from_right.compose(&mul(&z, 2)).unwrap();
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn equalizer_and_coequalizer_examples() {
        let z = FgAbGroup::integers();
        let (e, _) = equalizer(&mul(&z, 2), &mul(&z, 2)).unwrap();
        assert!(e.is_isomorphic(&z));
        assert!(equalizer(&mul(&z, 2), &mul(&z, 3)).unwrap().0.is_trivial());
        let z4 = FgAbGroup::cyclic(4);
        let (e, _) = equalizer(&mul(&z4, 1), &mul(&z4, 3)).unwrap();
        let brute = (0..4).filter(|x| (x - 3 * x) % 4 == 0).count() as u64;
        assert_eq!(e.finite_order().unwrap(), brute);
        assert_eq!(e.canonical(), &canon(&[2], 0));

        let (c, _) = coequalizer(&mul(&z, 2), &mul(&z, 2)).unwrap();
        assert!(c.is_isomorphic(&z));
        let (c, _) = coequalizer(&mul(&z, 2), &mul(&z, 0)).unwrap();
        assert_eq!(c.canonical(), &canon(&[2], 0));
        let (c, _) = coequalizer(&mul(&z, 5), &mul(&z, 1)).unwrap();
        assert_eq!(c.canonical(), &canon(&[4], 0));
        assert!(equalizer(&mul(&z, 1), &mul(&z4, 1)).is_err());
    }

    #[test]
    fn factor_through_injection_recovers_the_lift() {
        let z8 = FgAbGroup::cyclic(8);
        let z4 = FgAbGroup::cyclic(4);
        let incl = GroupHom::from_i64(&z4, &z8, &[vec![2]]).unwrap();
        let h = GroupHom::from_i64(&z4, &z8, &[vec![6]]).unwrap();
        let u = factor_through_injection(&h, &incl).unwrap();
        assert!(incl.compose(&u).unwrap().equals(&h));
        let odd = GroupHom::from_i64(&z8, &z8, &[vec![1]]).unwrap();
        assert!(factor_through_injection(&odd, &incl).is_err());
    }
}
