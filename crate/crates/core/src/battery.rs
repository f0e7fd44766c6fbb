//! Seeded random inputs and the named property suites that run on them.
//!
//! Every generator takes a [`ChaCha8Rng`], so a suite is reproducible from
//! its seed alone.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complexes::{
    connecting_morphism, long_exact_sequence, naturality_check, ChainComplex, ChainMap,
    ComplexSES, Ladder,
};
use crate::error::{Error, Result};
use crate::fgab::{
    cokernel, direct_sum, factor_through_injection, hom_group, is_pure, is_split, solve_hom,
    subgroup_generated, FgAbGroup, GroupElement, GroupHom, HomEquation, ShortExactSeq,
};
use crate::intlin::{block_diagonal, smith_normal_form, IntMatrix};
use crate::torfun::{
    free_resolution, schanuel_check, standard_battery, tor, tor_axiom_suite, ConstantZero,
    DegreeShifted, ResolutionStyle, TorFunctor,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// A random `n × n` unimodular matrix and its inverse, as a product of
/// elementary operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n == 0 {
        return (u, inv);
    }
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut e = IntMatrix::identity(n);
        let mut e_inv = IntMatrix::identity(n);
        if i == j {
            if rng.gen_bool(0.5) {
                e[(i, i)] = big(-1);
                e_inv[(i, i)] = big(-1);
            }
        } else {
            let c = [-2, -1, 1, 2][rng.gen_range(0..4)];
            e[(i, j)] = big(c);
            e_inv[(i, j)] = big(-c);
        }
        u = e.mul(&u).expect("square");
        inv = inv.mul(&e_inv).expect("square");
    }
    (u, inv)
}

/// `d₁ | d₂ | … | d_k` with `k ≤ max_count` and every `d_i` in `[2, max_factor]`.
pub fn random_invariant_factors(rng: &mut ChaCha8Rng, max_factor: u64, max_count: usize) -> Vec<u64> {
    let count = rng.gen_range(0..=max_count);
    if count == 0 || max_factor < 2 {
        return Vec::new();
    }
    let mut cur = rng.gen_range(2..=max_factor);
    let mut out = vec![cur];
    for _ in 1..count {
        let divisors: Vec<u64> = (2..=cur).filter(|d| cur % d == 0).collect();
        cur = divisors[rng.gen_range(0..divisors.len())];
        out.push(cur);
    }
    out.reverse();
    out
}

/// A presentation of `Z^free ⊕ Z/d₁ ⊕ …` scrambled by unimodular changes of
/// generators and relators, sometimes with an extra killed generator.
pub fn disguised_group(rng: &mut ChaCha8Rng, factors: &[u64], free: usize) -> FgAbGroup {
    let mut g = factors.len() + free;
    let mut cols: Vec<Vec<BigInt>> = factors
        .iter()
        .enumerate()
        .map(|(i, &d)| (0..g).map(|k| if k == i { big(d as i64) } else { BigInt::zero() }).collect())
        .collect();
    if rng.gen_bool(0.5) {
        for c in cols.iter_mut() {
            c.push(BigInt::zero());
        }
        let mut unit = vec![BigInt::zero(); g + 1];
        unit[g] = BigInt::one();
        cols.push(unit);
        g += 1;
    }
    let rel = IntMatrix::from_columns(g, &cols).expect("column lengths agree");
    let (u, _) = random_unimodular(rng, g);
    let (v, _) = random_unimodular(rng, rel.cols());
    let rel = u.mul(&rel).and_then(|m| m.mul(&v)).expect("shapes agree");
    FgAbGroup::new(g, rel).expect("valid presentation")
}

/// Invariant factors at most `max_factor` (at most three of them) and free
/// rank at most `max_free`.
pub fn random_group(rng: &mut ChaCha8Rng, max_factor: u64, max_free: usize) -> FgAbGroup {
    let factors = random_invariant_factors(rng, max_factor, 3);
    let free = rng.gen_range(0..=max_free);
    disguised_group(rng, &factors, free)
}

pub fn random_finite_group(rng: &mut ChaCha8Rng, max_factor: u64) -> FgAbGroup {
    random_group(rng, max_factor, 0)
}

/// At most three generators, each of order at most 12 or infinite.
pub fn random_small_group(rng: &mut ChaCha8Rng) -> FgAbGroup {
    let g = rng.gen_range(0..=3);
    let mut cols = Vec::new();
    for i in 0..g {
        if rng.gen_range(0..6) == 0 {
            continue;
        }
        let order = rng.gen_range(1..=12i64);
        cols.push((0..g).map(|k| if k == i { big(order) } else { BigInt::zero() }).collect());
    }
    FgAbGroup::new(g, IntMatrix::from_columns(g, &cols).expect("lengths agree")).expect("valid")
}

/// A uniformly random element of `Hom(p, q)` (free coordinates in `[-3, 3]`).
pub fn random_hom(rng: &mut ChaCha8Rng, p: &FgAbGroup, q: &FgAbGroup) -> Result<GroupHom> {
    let h = hom_group(p, q)?;
    let coords: Vec<BigInt> = h
        .group()
        .canonical_moduli()
        .iter()
        .map(|m| {
            if m.is_zero() {
                big(rng.gen_range(-3..=3))
            } else {
                big(rng.gen_range(0..m.to_i64().unwrap_or(i64::MAX)))
            }
        })
        .collect();
    let x = GroupElement::from_canonical_coords(h.group(), &coords)?;
    h.hom_of(&x)
}

/// `rows × cols` with both at most `max_dim` and entries in `[-bound, bound]`;
/// a quarter of the samples repeat a row to force rank deficiency.
pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let (r, c) = (rng.gen_range(0..=max_dim), rng.gen_range(0..=max_dim));
    let mut m = IntMatrix::from_fn(r, c, |_, _| big(rng.gen_range(-bound..=bound)));
    if r >= 2 && rng.gen_range(0..4) == 0 {
        let (src, dst) = (rng.gen_range(0..r), rng.gen_range(0..r));
        for j in 0..c {
            m[(dst, j)] = m[(src, j)].clone();
        }
    }
    m
}

/// A surjection `Z^k → g` with `k` between `gens(g)` and `gens(g) + 2`.
pub fn random_presentation(rng: &mut ChaCha8Rng, g: &FgAbGroup) -> Result<GroupHom> {
    let n = g.generators();
    let extra = rng.gen_range(0..=2);
    let k = n + extra;
    let tail = IntMatrix::from_fn(n, extra, |_, _| big(rng.gen_range(-5..=5)));
    let (v, _) = random_unimodular(rng, k);
    let m = IntMatrix::identity(n).hstack(&tail)?.mul(&v)?;
    GroupHom::new(&FgAbGroup::free(k), g, m)
}

/// The map `Z/a → Z/b` (or from `Z`) sending the generator to `k`.
fn cyclic_map(src: &FgAbGroup, tgt: &FgAbGroup, k: i64) -> GroupHom {
    let m = IntMatrix::from_fn(tgt.generators(), src.generators(), |_, _| big(k));
    GroupHom::new(src, tgt, m).expect("well defined")
}

/// `0 → Z →×m Z → Z/m → 0`.
pub fn z_times(m: u64) -> ShortExactSeq {
    let z = FgAbGroup::integers();
    let zm = FgAbGroup::cyclic(m);
    ShortExactSeq::new(GroupHom::scalar(&z, m as i64), cyclic_map(&z, &zm, 1)).expect("exact")
}

/// `0 → Z/m →×n Z/mn → Z/n → 0`, split exactly when `gcd(m, n) = 1`.
pub fn cyclic_extension(m: u64, n: u64) -> ShortExactSeq {
    let left = FgAbGroup::cyclic(m);
    let mid = FgAbGroup::cyclic(m * n);
    let right = FgAbGroup::cyclic(n);
    ShortExactSeq::new(cyclic_map(&left, &mid, n as i64), cyclic_map(&mid, &right, 1))
        .expect("exact")
}

/// `0 → Z/p^a → Z/p^{a+b} → Z/p^b → 0`.
pub fn prime_power(p: u64, a: u32, b: u32) -> ShortExactSeq {
    cyclic_extension(p.pow(a), p.pow(b))
}

/// `0 → A → A ⊕ C → C → 0` with the canonical maps.
pub fn split_sequence(a: &FgAbGroup, c: &FgAbGroup) -> ShortExactSeq {
    let s = direct_sum(a, c);
    ShortExactSeq::new(s.injections[0].clone(), s.projections[1].clone()).expect("exact")
}

/// Degreewise direct sum of two short exact sequences.
pub fn ses_sum(s: &ShortExactSeq, t: &ShortExactSeq) -> Result<ShortExactSeq> {
    let l = direct_sum(s.left(), t.left()).group;
    let m = direct_sum(s.middle(), t.middle()).group;
    let r = direct_sum(s.right(), t.right()).group;
    let f = GroupHom::new(&l, &m, block_diagonal(s.f().matrix(), t.f().matrix()))?;
    let g = GroupHom::new(&m, &r, block_diagonal(s.g().matrix(), t.g().matrix()))?;
    ShortExactSeq::new(f, g)
}

/// A fresh presentation of `g` with the isomorphisms to and from it.
fn reshuffle(rng: &mut ChaCha8Rng, g: &FgAbGroup) -> Result<(GroupHom, GroupHom)> {
    let n = g.generators();
    let (u, inv) = random_unimodular(rng, n);
    let (v, _) = random_unimodular(rng, g.relations().cols());
    let h = FgAbGroup::new(n, u.mul(g.relations())?.mul(&v)?)?;
    Ok((GroupHom::new(g, &h, u)?, GroupHom::new(&h, g, inv)?))
}

/// The same sequence up to isomorphism, with every term re-presented.
pub fn disguise(rng: &mut ChaCha8Rng, s: &ShortExactSeq) -> Result<ShortExactSeq> {
    let (_, a_back) = reshuffle(rng, s.left())?;
    let (b_to, b_back) = reshuffle(rng, s.middle())?;
    let (c_to, _) = reshuffle(rng, s.right())?;
    let f = b_to.compose(&s.f().compose(&a_back)?)?;
    let g = c_to.compose(&s.g().compose(&b_back)?)?;
    ShortExactSeq::new(f, g)
}

pub fn random_split_ses(rng: &mut ChaCha8Rng) -> Result<ShortExactSeq> {
    let a = random_group(rng, 12, 1);
    let c = random_group(rng, 12, 1);
    disguise(rng, &split_sequence(&a, &c))
}

/// A non-split core (`×m` on `Z`, or `Z/m → Z/mn` with `gcd(m, n) > 1`),
/// sometimes summed with a split sequence.
pub fn random_non_split_ses(rng: &mut ChaCha8Rng) -> Result<ShortExactSeq> {
    let core = if rng.gen_bool(0.3) {
        z_times(rng.gen_range(2..=12))
    } else {
        loop {
            let (m, n) = (rng.gen_range(2..=8u64), rng.gen_range(2..=8u64));
            if m.gcd(&n) > 1 {
                break cyclic_extension(m, n);
            }
        }
    };
    let s = if rng.gen_bool(0.5) {
        let a = random_group(rng, 6, 1);
        let c = random_group(rng, 6, 1);
        ses_sum(&core, &split_sequence(&a, &c))?
    } else {
        core
    };
    disguise(rng, &s)
}

#[derive(Clone, Debug)]
pub struct SesFamily {
    pub split: Vec<ShortExactSeq>,
    pub non_split: Vec<ShortExactSeq>,
}

/// `size / 2` split and `size - size / 2` non-split sequences.
pub fn ses_family(seed: u64, size: usize) -> Result<SesFamily> {
    let mut r = rng(seed);
    let mut split = Vec::new();
    let mut non_split = Vec::new();
    for k in 0..size {
        if k < size / 2 {
            split.push(random_split_ses(&mut r)?);
        } else {
            non_split.push(random_non_split_ses(&mut r)?);
        }
    }
    Ok(SesFamily { split, non_split })
}

/// Support `lowest .. lowest + len`, every boundary a random hom killing the
/// image of the one above it.
pub fn random_complex(rng: &mut ChaCha8Rng, lowest: i64, len: usize) -> Result<ChainComplex> {
    let groups: Vec<FgAbGroup> = (0..len).map(|_| random_small_group(rng)).collect();
    let mut down: Vec<GroupHom> = Vec::new();
    for k in (1..len).rev() {
        let d = match down.last() {
            None => random_hom(rng, &groups[k], &groups[k - 1])?,
            Some(above) => {
                let (q, proj) = cokernel(above)?;
                random_hom(rng, &q, &groups[k - 1])?.compose(&proj)?
            }
        };
        down.push(d);
    }
    down.reverse();
    ChainComplex::new(lowest, groups, down)
}

/// Subcomplex generated by `gens[n]` and its boundary, in degree order.
struct Sub {
    complex: ChainComplex,
    inclusion: ChainMap,
    quotient: ChainComplex,
    projection: ChainMap,
}

fn sub_and_quotient(c: &ChainComplex, gens: &[IntMatrix]) -> Result<Sub> {
    let lo = c.lowest();
    let len = gens.len();
    let mut subs = Vec::with_capacity(len);
    for k in 0..len {
        let n = lo + k as i64;
        let mut v = gens[k].clone();
        if k + 1 < len {
            v = v.hstack(&c.boundary(n + 1).matrix().mul(&gens[k + 1])?)?;
        }
        subs.push(subgroup_generated(&c.group(n), &v)?);
    }
    let sub_d = (1..len)
        .map(|k| {
            let d = c.boundary(lo + k as i64);
            factor_through_injection(&d.compose(&subs[k].1)?, &subs[k - 1].1)
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = ChainComplex::new(lo, subs.iter().map(|s| s.0.clone()).collect(), sub_d)?;
    let inclusion = ChainMap::new(&complex, c, lo, subs.iter().map(|s| s.1.clone()).collect())?;

    let quots = subs.iter().map(|s| cokernel(&s.1)).collect::<Result<Vec<_>>>()?;
    let quot_d = (1..len)
        .map(|k| {
            let d = c.boundary(lo + k as i64);
            let rhs = quots[k - 1].1.compose(&d)?;
            solve_hom(&quots[k].0, &quots[k - 1].0, &[HomEquation::pre(&quots[k].1, &rhs)])?
                .map(|s| s.hom)
                .ok_or_else(|| Error::Contract("boundary does not descend to the quotient".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let quotient = ChainComplex::new(lo, quots.iter().map(|q| q.0.clone()).collect(), quot_d)?;
    let projection = ChainMap::new(c, &quotient, lo, quots.iter().map(|q| q.1.clone()).collect())?;
    Ok(Sub {
        complex,
        inclusion,
        quotient,
        projection,
    })
}

fn random_vectors(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| big(rng.gen_range(-3..=3)))
}

/// `0 → C′ → C → C/C′ → 0` for a random complex `C` of support length at
/// most 4 and a subcomplex generated by a few random chains.
pub fn random_complex_ses(rng: &mut ChaCha8Rng) -> Result<ComplexSES> {
    let len = rng.gen_range(1..=4);
    let lowest = rng.gen_range(-1..=1);
    let c = random_complex(rng, lowest, len)?;
    let gens: Vec<IntMatrix> = (0..len)
        .map(|k| {
            let n = rng.gen_range(0..=2);
            random_vectors(rng, c.group(lowest + k as i64).generators(), n)
        })
        .collect();
    let s = sub_and_quotient(&c, &gens)?;
    ComplexSES::new(s.inclusion, s.projection)
}

/// For subcomplexes `C′ ⊆ C″ ⊆ C`, the ladder from `C′ ⊆ C` to `C″ ⊆ C`
/// given by the inclusion, the identity and the induced quotient map.
pub fn random_ladder(rng: &mut ChaCha8Rng) -> Result<Ladder> {
    let len = rng.gen_range(1..=3);
    let c = random_complex(rng, 0, len)?;
    let small: Vec<IntMatrix> = (0..len)
        .map(|k| {
            let n = rng.gen_range(0..=1);
            random_vectors(rng, c.group(k as i64).generators(), n)
        })
        .collect();
    let large = small
        .iter()
        .map(|m| {
            let n = rng.gen_range(0..=1);
            m.hstack(&random_vectors(rng, m.rows(), n))
        })
        .collect::<Result<Vec<_>>>()?;
    let a = sub_and_quotient(&c, &small)?;
    let b = sub_and_quotient(&c, &large)?;
    let alpha = (0..len as i64)
        .map(|n| factor_through_injection(&a.inclusion.component(n), &b.inclusion.component(n)))
        .collect::<Result<Vec<_>>>()?;
    let gamma = (0..len as i64)
        .map(|n| {
            let (pa, pb) = (a.projection.component(n), b.projection.component(n));
            solve_hom(pa.target(), pb.target(), &[HomEquation::pre(&pa, &pb)])?
                .map(|s| s.hom)
                .ok_or_else(|| Error::Contract("quotient map does not descend".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let alpha = ChainMap::new(&a.complex, &b.complex, 0, alpha)?;
    let gamma = ChainMap::new(&a.quotient, &b.quotient, 0, gamma)?;
    let top = ComplexSES::new(a.inclusion, a.projection)?;
    let bottom = ComplexSES::new(b.inclusion, b.projection)?;
    Ladder::new(top, bottom, alpha, ChainMap::identity(&c), gamma)
}

/// Outcome of one named suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64) -> Self {
        SuiteReport {
            suite: suite.into(),
            seed,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

pub const SUITES: &[&str] = &[
    "splitting-lemma",
    "purity",
    "schanuel",
    "tor-axioms",
    "les-exactness",
    "snf",
    "resolution-independence",
];

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    match name {
        "splitting-lemma" => splitting_suite(seed, 100),
        "purity" => purity_suite(seed, 100),
        "schanuel" => schanuel_suite(seed, 50),
        "tor-axioms" => tor_axioms_suite(seed),
        "les-exactness" => les_suite(seed, 50),
        "snf" => snf_suite(seed, 500),
        "resolution-independence" => resolution_suite(seed, 100),
        _ => Err(Error::InvalidInput(format!(
            "unknown suite {name:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

pub fn splitting_suite(seed: u64, size: usize) -> Result<SuiteReport> {
    let fam = ses_family(seed, size)?;
    let mut rep = SuiteReport::new("splitting-lemma", seed);
    for (k, s) in fam.split.iter().enumerate() {
        let ok = match is_split(s)? {
            None => false,
            Some(w) => {
                s.g().compose(&w.section)?.is_identity() && w.retraction.compose(s.f())?.is_identity()
            }
        };
        rep.check(ok, || format!("split sequence {k}: no valid witnesses"));
    }
    for (k, s) in fam.non_split.iter().enumerate() {
        let ok = is_split(s)?.is_none();
        rep.check(ok, || format!("non-split sequence {k}: witnesses returned"));
    }
    Ok(rep)
}

pub fn purity_suite(seed: u64, size: usize) -> Result<SuiteReport> {
    let fam = ses_family(seed, size)?;
    let mut rep = SuiteReport::new("purity", seed);
    for (k, s) in fam.split.iter().enumerate() {
        let ok = is_pure(s)?;
        rep.check(ok, || format!("split sequence {k} reported impure"));
    }
    for (k, s) in fam.non_split.iter().enumerate() {
        let ok = !is_pure(s)?;
        rep.check(ok, || format!("non-split sequence {k} reported pure"));
    }
    Ok(rep)
}

pub fn schanuel_suite(seed: u64, size: usize) -> Result<SuiteReport> {
    let mut r = rng(seed);
    let mut rep = SuiteReport::new("schanuel", seed);
    for k in 0..size {
        let g = random_group(&mut r, 20, 2);
        let p = random_presentation(&mut r, &g)?;
        let q = random_presentation(&mut r, &g)?;
        let ok = schanuel_check(&g, &p, &q)?;
        rep.check(ok, || format!("group {k} ({g}): kernels disagree"));
    }
    Ok(rep)
}

/// `tor` passes everything; the constant-zero candidate fails degree zero
/// and the shifted candidate fails vanishing, for a few random `M ≠ 0`.
pub fn tor_axioms_suite(seed: u64) -> Result<SuiteReport> {
    let mut r = rng(seed);
    let battery = standard_battery();
    let mut rep = SuiteReport::new("tor-axioms", seed);
    let mut ms = vec![FgAbGroup::integers()];
    while ms.len() < 4 {
        let m = random_finite_group(&mut r, 12);
        if !m.is_trivial() {
            ms.push(m);
        }
    }
    for m in &ms {
        let good = tor_axiom_suite(&TorFunctor, m, &battery)?;
        rep.check(good.all_pass(), || format!("tor against {m}: {:?}", good.failures));
        let zero = tor_axiom_suite(&ConstantZero, m, &battery)?;
        rep.check(!zero.degree_zero, || format!("constant zero passed degree zero against {m}"));
        let shifted = tor_axiom_suite(&DegreeShifted, m, &battery)?;
        rep.check(!shifted.vanishing, || format!("shifted tor passed vanishing against {m}"));
    }
    Ok(rep)
}

/// Exactness of every assembled homology sequence, lift-independence of
/// every connecting map, and naturality on random ladders.
pub fn les_suite(seed: u64, size: usize) -> Result<SuiteReport> {
    let mut r = rng(seed);
    let mut rep = SuiteReport::new("les-exactness", seed);
    for k in 0..size {
        let s = random_complex_ses(&mut r)?;
        let les = long_exact_sequence(&s)?;
        rep.check(les.is_exact(), || format!("sequence {k}: not exact at {:?}", les.exactness));
        let (lo, hi) = s.degrees();
        for n in lo..=hi + 1 {
            let base = connecting_morphism(&s, n, None)?;
            let a = connecting_morphism(&s, n, Some(r.gen()))?;
            let b = connecting_morphism(&s, n, Some(r.gen()))?;
            rep.check(base.equals(&a) && base.equals(&b), || {
                format!("sequence {k}: ∂_{n} depends on the lifts")
            });
        }
    }
    for k in 0..size / 5 {
        let l = random_ladder(&mut r)?;
        let ok = naturality_check(&l)?;
        rep.check(ok, || format!("ladder {k}: homology ladder does not commute"));
    }
    Ok(rep)
}

pub fn snf_suite(seed: u64, size: usize) -> Result<SuiteReport> {
    let mut r = rng(seed);
    let mut rep = SuiteReport::new("snf", seed);
    for k in 0..size {
        let a = random_matrix(&mut r, 8, 100);
        let s = smith_normal_form(&a);
        let product = s.u.mul(&a)?.mul(&s.v)?;
        let diag_ok = (0..s.d.rows()).all(|i| {
            (0..s.d.cols()).all(|j| {
                let x = &s.d[(i, j)];
                if i != j || i >= s.rank {
                    x.is_zero()
                } else {
                    x.is_positive() && (i == 0 || x.is_multiple_of(&s.d[(i - 1, i - 1)]))
                }
            })
        });
        let ok = product == s.d && s.u.is_unimodular() && s.v.is_unimodular() && diag_ok;
        rep.check(ok, || format!("matrix {k}: {:?}", a.to_json_value()));
    }
    Ok(rep)
}

pub fn resolution_suite(seed: u64, size: usize) -> Result<SuiteReport> {
    let mut r = rng(seed);
    let mut rep = SuiteReport::new("resolution-independence", seed);
    for k in 0..size {
        let g = random_group(&mut r, 20, 2);
        let b = random_finite_group(&mut r, 20);
        let pad = r.gen_range(1..=2);
        let minimal = free_resolution(&g, ResolutionStyle::Minimal);
        let padded = free_resolution(&g, ResolutionStyle::Padded(pad));
        for n in 0..=2 {
            let x = tor(&g, &b, n, Some(&minimal))?;
            let y = tor(&g, &b, n, Some(&padded))?;
            rep.check(x.group.is_isomorphic(&y.group), || {
                format!("case {k}: Tor_{n}({g}, {b}) is {} or {}", x.group, y.group)
            });
        }
    }
    Ok(rep)
}
