use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hull, induced_map, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::fgab::{is_exact_at, FgAbGroup, GroupElement, GroupHom, ShortExactSeq};
use crate::intlin::{solve_integer, IntMatrix};

/// `0 → C₁ →ι C₂ →π C₃ → 0`, exact in every degree.
#[derive(Clone, Debug)]
pub struct ComplexSES {
    iota: ChainMap,
    pi: ChainMap,
}

impl ComplexSES {
    pub fn new(iota: ChainMap, pi: ChainMap) -> Result<Self> {
        if iota.target() != pi.source() {
            return Err(Error::InvalidInput("chain maps are not composable".into()));
        }
        let (lo, hi) = hull(&[iota.source(), iota.target(), pi.target()]);
        for n in lo..=hi {
            ShortExactSeq::new(iota.component(n), pi.component(n)).map_err(|e| {
                Error::InvalidInput(format!("degree {n} is not short exact: {e}"))
            })?;
        }
        Ok(ComplexSES { iota, pi })
    }

    pub fn iota(&self) -> &ChainMap {
        &self.iota
    }

    pub fn pi(&self) -> &ChainMap {
        &self.pi
    }

    pub fn left(&self) -> &ChainComplex {
        self.iota.source()
    }

    pub fn middle(&self) -> &ChainComplex {
        self.iota.target()
    }

    pub fn right(&self) -> &ChainComplex {
        self.pi.target()
    }

    pub(crate) fn degrees(&self) -> (i64, i64) {
        hull(&[self.left(), self.middle(), self.right()])
    }
}

/// Some `x` with `f(x) = y`, shifted by a random element of the solution
/// set when `rng` is given.
fn preimage(f: &GroupHom, y: &[BigInt], rng: Option<&mut ChaCha8Rng>) -> Result<Option<Vec<BigInt>>> {
    let system = f.matrix().hstack(f.target().relations())?;
    let Some(sol) = solve_integer(&system, y)? else {
        return Ok(None);
    };
    let k = f.source().generators();
    let mut x = sol.particular[..k].to_vec();
    if let Some(rng) = rng {
        for col in sol.kernel.columns() {
            let c = BigInt::from(rng.gen_range(-3i64..=3));
            for (xi, v) in x.iter_mut().zip(&col[..k]) {
                *xi += &c * v;
            }
        }
    }
    Ok(Some(x))
}

/// `∂_n: H_n(C₃) → H_{n−1}(C₁)`: lift a cycle through `π`, apply `d`, pull
/// back through `ι`. `seed` perturbs every lift choice; the result does
/// not depend on it.
pub fn connecting_morphism(s: &ComplexSES, n: i64, seed: Option<u64>) -> Result<GroupHom> {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let h3 = s.right().homology(n)?;
    let h1 = s.left().homology(n - 1)?;
    let pi_n = s.pi.component(n);
    let iota = s.iota.component(n - 1);
    let d = s.middle().boundary(n);
    let mut cols = Vec::with_capacity(h3.group().generators());
    for j in 0..h3.group().generators() {
        let z = h3.representative(&GroupElement::generator(h3.group(), j)?)?;
        let lift = preimage(&pi_n, &z, rng.as_mut())?
            .ok_or_else(|| Error::Contract(format!("π_{n} is not onto")))?;
        let boundary = d.apply_coords(&lift)?;
        let back = preimage(&iota, &boundary, rng.as_mut())?.ok_or_else(|| {
            Error::Contract(format!("boundary of a lift misses the image of ι_{}", n - 1))
        })?;
        cols.push(h1.class_of(&back)?.coords().to_vec());
    }
    GroupHom::new(
        h3.group(),
        h1.group(),
        IntMatrix::from_columns(h1.group().generators(), &cols)?,
    )
}

/// One position of a long exact sequence.
#[derive(Clone, Debug)]
pub struct LesTerm {
    /// e.g. `H_1(C₂)`, or `0` at the two ends.
    pub label: String,
    pub group: FgAbGroup,
}

/// `0 → H_top(C₁) → H_top(C₂) → H_top(C₃) →∂ H_{top−1}(C₁) → … → H_bot(C₃) → 0`.
/// `maps[i]` goes from `terms[i]` to `terms[i + 1]`, and `exactness[i]`
/// reports exactness at `terms[i + 1]`.
#[derive(Clone, Debug)]
pub struct LongExactSequence {
    pub terms: Vec<LesTerm>,
    pub maps: Vec<GroupHom>,
    pub exactness: Vec<bool>,
}

impl LongExactSequence {
    pub fn is_exact(&self) -> bool {
        self.exactness.iter().all(|&b| b)
    }

    /// Assembles the sequence from its inner terms and maps, padding both
    /// ends with zero and checking exactness at every inner term.
    pub fn assemble(mut terms: Vec<LesTerm>, mut maps: Vec<GroupHom>) -> Result<Self> {
        let zero = FgAbGroup::zero();
        let (first, last) = match (terms.first(), terms.last()) {
            (Some(f), Some(l)) => (f.group.clone(), l.group.clone()),
            _ => {
                return Ok(LongExactSequence {
                    terms: Vec::new(),
                    maps: Vec::new(),
                    exactness: Vec::new(),
                })
            }
        };
        let zero_term = || LesTerm {
            label: "0".into(),
            group: zero.clone(),
        };
        terms.insert(0, zero_term());
        terms.push(zero_term());
        maps.insert(0, GroupHom::zero(&zero, &first));
        maps.push(GroupHom::zero(&last, &zero));
        let exactness = maps
            .windows(2)
            .map(|w| is_exact_at(&w[0], &w[1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(LongExactSequence {
            terms,
            maps,
            exactness,
        })
    }
}

/// The long exact homology sequence of `s`, with each position checked.
pub fn long_exact_sequence(s: &ComplexSES) -> Result<LongExactSequence> {
    let (lo, hi) = s.degrees();
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    for n in (lo..=hi).rev() {
        for (name, c) in [("C₁", s.left()), ("C₂", s.middle()), ("C₃", s.right())] {
            terms.push(LesTerm {
                label: format!("H_{n}({name})"),
                group: c.homology(n)?.group().clone(),
            });
        }
        maps.push(induced_map(&s.iota, n)?);
        maps.push(induced_map(&s.pi, n)?);
        if n > lo {
            maps.push(connecting_morphism(s, n, None)?);
        }
    }
    LongExactSequence::assemble(terms, maps)
}

/// A morphism of short exact sequences of complexes:
/// `α: C₁ → D₁`, `β: C₂ → D₂`, `γ: C₃ → D₃` with `β ι = ι' α` and `γ π = π' β`.
#[derive(Clone, Debug)]
pub struct Ladder {
    pub top: ComplexSES,
    pub bottom: ComplexSES,
    pub alpha: ChainMap,
    pub beta: ChainMap,
    pub gamma: ChainMap,
}

impl Ladder {
    pub fn new(
        top: ComplexSES,
        bottom: ComplexSES,
        alpha: ChainMap,
        beta: ChainMap,
        gamma: ChainMap,
    ) -> Result<Self> {
        let fits = alpha.source() == top.left()
            && alpha.target() == bottom.left()
            && beta.source() == top.middle()
            && beta.target() == bottom.middle()
            && gamma.source() == top.right()
            && gamma.target() == bottom.right();
        if !fits {
            return Err(Error::InvalidInput("vertical maps do not connect the rows".into()));
        }
        let left = beta.compose(top.iota())?;
        let left2 = bottom.iota().compose(&alpha)?;
        let right = gamma.compose(top.pi())?;
        let right2 = bottom.pi().compose(&beta)?;
        if !left.equals(&left2) || !right.equals(&right2) {
            return Err(Error::InvalidInput("ladder does not commute".into()));
        }
        Ok(Ladder {
            top,
            bottom,
            alpha,
            beta,
            gamma,
        })
    }
}

/// Whether every square of the induced ladder of long exact sequences
/// commutes, the ones through `∂` included.
pub fn naturality_check(l: &Ladder) -> Result<bool> {
    let (a, b) = (l.top.degrees(), l.bottom.degrees());
    let (lo, hi) = (a.0.min(b.0), a.1.max(b.1));
    for n in lo..=hi + 1 {
        let ha = induced_map(&l.alpha, n)?;
        let hb = induced_map(&l.beta, n)?;
        let hc = induced_map(&l.gamma, n)?;
        let sq1 = hb
            .compose(&induced_map(l.top.iota(), n)?)?
            .equals(&induced_map(l.bottom.iota(), n)?.compose(&ha)?);
        let sq2 = hc
            .compose(&induced_map(l.top.pi(), n)?)?
            .equals(&induced_map(l.bottom.pi(), n)?.compose(&hb)?);
        let ha_below = induced_map(&l.alpha, n - 1)?;
        let sq3 = ha_below
            .compose(&connecting_morphism(&l.top, n, None)?)?
            .equals(&connecting_morphism(&l.bottom, n, None)?.compose(&hc)?);
        if !(sq1 && sq2 && sq3) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::Canonical;

    fn z() -> FgAbGroup {
        FgAbGroup::integers()
    }

    /// Complexes concentrated in degree 0 realising `0 → Z →×2 Z → Z/2 → 0`,
    /// tensored against the test complex `Z →×2 Z` in degrees 1, 0.
    fn bockstein() -> ComplexSES {
        let z2 = FgAbGroup::cyclic(2);
        let c1 = ChainComplex::two_term(0, &GroupHom::scalar(&z(), 2));
        let c2 = ChainComplex::two_term(0, &GroupHom::scalar(&z(), 2));
        let c3 = ChainComplex::two_term(0, &GroupHom::scalar(&z2, 2));
        let iota = ChainMap::new(&c1, &c2, 0, vec![GroupHom::scalar(&z(), 2); 2]).unwrap();
        let p = GroupHom::from_i64(&z(), &z2, &[vec![1]]).unwrap();
        let pi = ChainMap::new(&c2, &c3, 0, vec![p.clone(), p]).unwrap();
        ComplexSES::new(iota, pi).unwrap()
    }

    fn split(a: &ChainComplex, c: &ChainComplex) -> ComplexSES {
        let b = a.direct_sum(c);
        let (lo, hi) = hull(&[a, c]);
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for n in lo..=hi {
            let ds = crate::fgab::direct_sum(&a.group(n), &c.group(n));
            inj.push(GroupHom::new(&a.group(n), &b.group(n), ds.injections[0].matrix().clone()).unwrap());
            proj.push(GroupHom::new(&b.group(n), &c.group(n), ds.projections[1].matrix().clone()).unwrap());
        }
        ComplexSES::new(
            ChainMap::new(a, &b, lo, inj).unwrap(),
            ChainMap::new(&b, c, lo, proj).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn bockstein_connecting_map() {
        let s = bockstein();
        // H_1(C₃) = Z/2 and H_0(C₁) = Z/2; the chase sends the class of 1 to
        // the class of 1
        let d = connecting_morphism(&s, 1, None).unwrap();
        assert_eq!(d.source().canonical(), &Canonical::cyclic(2));
        assert_eq!(d.target().canonical(), &Canonical::cyclic(2));
        assert!(d.is_isomorphism().unwrap());
        for seed in 0..5 {
            assert!(connecting_morphism(&s, 1, Some(seed)).unwrap().equals(&d));
        }
        let les = long_exact_sequence(&s).unwrap();
        assert!(les.is_exact());
        assert_eq!(les.terms.len(), 3 * 2 + 2);
    }

    #[test]
    fn bockstein_matches_element_chase() {
        // brute force over representatives 0..4 of chains: x ∈ Z/2 in degree 1
        // lifts to any odd integer u, d(u) = 2u, and 2u = 2·w forces w = u,
        // whose class in H_0(C₁) = Z/2 is u mod 2 = 1
        let s = bockstein();
        let d = connecting_morphism(&s, 1, None).unwrap();
        let h1 = s.left().homology(0).unwrap();
        for u in [1i64, 3, -1, 5] {
            let class = h1.class_of(&[BigInt::from(u)]).unwrap();
            let x = GroupElement::generator(d.source(), 0).unwrap();
            assert_eq!(d.apply(&x).unwrap(), class);
        }
    }

    #[test]
    fn split_sequences_have_zero_connecting_maps() {
        let a = ChainComplex::two_term(0, &GroupHom::scalar(&z(), 3));
        let c = ChainComplex::two_term(0, &GroupHom::scalar(&z(), 4))
            .direct_sum(&ChainComplex::concentrated(2, &FgAbGroup::cyclic(2)));
        let s = split(&a, &c);
        for n in -1..4 {
            assert!(connecting_morphism(&s, n, None).unwrap().is_zero());
        }
        assert!(long_exact_sequence(&s).unwrap().is_exact());
    }

    #[test]
    fn acyclic_middle_gives_isomorphisms() {
        // C₁ = (Z →×2 Z), C₂ = (Z →1 Z) is acyclic, C₃ = Z/2 in degree 1
        let c1 = ChainComplex::two_term(0, &GroupHom::scalar(&z(), 2));
        let c2 = ChainComplex::two_term(0, &GroupHom::scalar(&z(), 1));
        let z2 = FgAbGroup::cyclic(2);
        let c3 = ChainComplex::concentrated(1, &z2);
        let iota = ChainMap::new(
            &c1,
            &c2,
            0,
            vec![GroupHom::scalar(&z(), 1), GroupHom::scalar(&z(), 2)],
        )
        .unwrap();
        let pi = ChainMap::new(
            &c2,
            &c3,
            0,
            vec![
                GroupHom::zero(&z(), &FgAbGroup::zero()),
                GroupHom::from_i64(&z(), &z2, &[vec![1]]).unwrap(),
            ],
        )
        .unwrap();
        let s = ComplexSES::new(iota, pi).unwrap();
        for n in -1..3 {
            assert!(connecting_morphism(&s, n, None).unwrap().is_isomorphism().unwrap());
        }
        assert_eq!(
            connecting_morphism(&s, 1, None).unwrap().source().canonical(),
            &Canonical::cyclic(2)
        );
        assert!(long_exact_sequence(&s).unwrap().is_exact());
    }

    #[test]
    fn zero_sequence_is_exact() {
        let zc = ChainComplex::zero();
        let s = ComplexSES::new(ChainMap::zero(&zc, &zc), ChainMap::zero(&zc, &zc)).unwrap();
        assert!(long_exact_sequence(&s).unwrap().is_exact());
    }

    #[test]
    fn non_exact_rows_are_rejected() {
        let c = ChainComplex::concentrated(0, &z());
        let two = ChainMap::new(&c, &c, 0, vec![GroupHom::scalar(&z(), 2)]).unwrap();
        assert!(ComplexSES::new(two.clone(), ChainMap::identity(&c)).is_err());
    }

    #[test]
    fn identity_and_zero_ladders_commute() {
        let s = bockstein();
        let id = |c: &ChainComplex| ChainMap::identity(c);
        let l = Ladder::new(
            s.clone(),
            s.clone(),
            id(s.left()),
            id(s.middle()),
            id(s.right()),
        )
        .unwrap();
        assert!(naturality_check(&l).unwrap());
        let zero = |c: &ChainComplex| ChainMap::zero(c, c);
        let l = Ladder::new(
            s.clone(),
            s.clone(),
            zero(s.left()),
            zero(s.middle()),
            zero(s.right()),
        )
        .unwrap();
        assert!(naturality_check(&l).unwrap());
    }

    #[test]
    fn non_commuting_ladder_is_rejected() {
        let s = bockstein();
        let l = Ladder::new(
            s.clone(),
            s.clone(),
            ChainMap::identity(s.left()),
            ChainMap::zero(s.middle(), s.middle()),
            ChainMap::identity(s.right()),
        );
        assert!(l.is_err());
    }
}
