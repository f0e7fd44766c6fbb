use super::{free_resolution, FreeResolution, ResolutionStyle};
use crate::complexes::{
    connecting_morphism, long_exact_sequence, ChainComplex, ChainMap, ComplexSES,
    LongExactSequence,
};
use crate::error::Result;
use crate::fgab::{tensor, tensor_hom, FgAbGroup, GroupHom, ShortExactSeq};

/// The long exact `Tor` sequence of `0 → A₁ → A₂ → A₃ → 0` against `B`,
/// realised as the homology sequence of `0 → A₁ ⊗ P → A₂ ⊗ P → A₃ ⊗ P → 0`
/// for a free resolution `P` of `B`. Tensoring with a free module keeps
/// every degree short exact.
#[derive(Clone, Debug)]
pub struct TorLes {
    pub resolution: FreeResolution,
    pub complexes: ComplexSES,
    pub sequence: LongExactSequence,
}

impl TorLes {
    /// `∂_n: Tor_n(A₃, B) → Tor_{n−1}(A₁, B)`.
    pub fn connecting(&self, n: usize) -> Result<GroupHom> {
        connecting_morphism(&self.complexes, n as i64, None)
    }
}

fn left_tensor(a: &FgAbGroup, p: &ChainComplex) -> ChainComplex {
    let id = GroupHom::identity(a);
    let groups = (p.lowest()..=p.highest())
        .map(|n| tensor(a, &p.group(n)).group().clone())
        .collect();
    let boundaries = (p.lowest() + 1..=p.highest())
        .map(|n| tensor_hom(&id, &p.boundary(n)).expect("tensor of well-defined maps"))
        .collect();
    ChainComplex::new(p.lowest(), groups, boundaries).expect("shapes agree")
}

fn left_tensor_map(f: &GroupHom, p: &ChainComplex, src: &ChainComplex, tgt: &ChainComplex) -> Result<ChainMap> {
    let comps = (p.lowest()..=p.highest())
        .map(|n| tensor_hom(f, &GroupHom::identity(&p.group(n))))
        .collect::<Result<Vec<_>>>()?;
    ChainMap::new(src, tgt, p.lowest(), comps)
}

pub fn tor_les(s: &ShortExactSeq, b: &FgAbGroup) -> Result<TorLes> {
    let resolution = free_resolution(b, ResolutionStyle::Minimal);
    let p = resolution.deleted();
    let c1 = left_tensor(s.left(), &p);
    let c2 = left_tensor(s.middle(), &p);
    let c3 = left_tensor(s.right(), &p);
    let iota = left_tensor_map(s.f(), &p, &c1, &c2)?;
    let pi = left_tensor_map(s.g(), &p, &c2, &c3)?;
    let complexes = ComplexSES::new(iota, pi)?;
    let sequence = long_exact_sequence(&complexes)?;
    Ok(TorLes {
        resolution,
        complexes,
        sequence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::{direct_sum, kernel, Canonical};

    fn z_times(m: u64) -> ShortExactSeq {
        let z = FgAbGroup::integers();
        let zm = FgAbGroup::cyclic(m);
        ShortExactSeq::new(
            GroupHom::scalar(&z, m as i64),
            GroupHom::from_i64(&z, &zm, &[vec![1]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn connecting_map_is_the_m_torsion() {
        for (m, n) in [(4u64, 6u64), (3, 5), (2, 2), (6, 9)] {
            let les = tor_les(&z_times(m), &FgAbGroup::cyclic(n)).unwrap();
            assert!(les.sequence.is_exact());
            let d = les.connecting(1).unwrap();
            assert!(d.is_injective().unwrap());
            let g = num_integer::gcd(m, n);
            assert_eq!(d.source().canonical(), &Canonical::cyclic(g));
            let times_m = GroupHom::scalar(d.target(), m as i64);
            let (k, _) = kernel(&times_m).unwrap();
            assert!(crate::fgab::is_exact_at(&d, &times_m).unwrap());
            assert_eq!(k.canonical(), &Canonical::cyclic(g));
        }
    }

    #[test]
    fn split_sequences_have_zero_connecting_maps() {
        let a = FgAbGroup::cyclic(4);
        let c = FgAbGroup::parse("Z/6 + Z").unwrap();
        let sum = direct_sum(&a, &c);
        let s = ShortExactSeq::new(sum.injections[0].clone(), sum.projections[1].clone()).unwrap();
        let les = tor_les(&s, &FgAbGroup::cyclic(2)).unwrap();
        assert!(les.sequence.is_exact());
        assert!(les.connecting(1).unwrap().is_zero());
    }

    #[test]
    fn tensoring_with_integers_returns_the_sequence() {
        let les = tor_les(&z_times(5), &FgAbGroup::integers()).unwrap();
        assert!(les.sequence.is_exact());
        // 0 → Z → Z → Z/5 → 0 and nothing else
        let nonzero: Vec<_> = les
            .sequence
            .terms
            .iter()
            .filter(|t| !t.group.is_trivial())
            .map(|t| t.group.canonical().clone())
            .collect();
        assert_eq!(
            nonzero,
            vec![Canonical::cyclic(0), Canonical::cyclic(0), Canonical::cyclic(5)]
        );
    }
}
