//! `H_1` of the nerve of a small finite category, through its normalised
//! simplicial chain complex `C₂ → C₁ → C₀`.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::{is_morphism, Ambient, TorTriple};
use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::fgab::{Canonical, FgAbGroup};
use crate::intlin::IntMatrix;
use crate::torfun::tor;

/// Objects `0..objects` and non-identity arrows `(source, target)`.
/// `compose[(f, g)]` is `g ∘ f` for composable non-identity arrows, with
/// `None` standing for an identity.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    pub objects: usize,
    pub arrows: Vec<(usize, usize)>,
    pub compose: HashMap<(usize, usize), Option<usize>>,
}

impl FiniteCategory {
    /// Builds the composition table from a function on composable pairs.
    pub fn new(
        objects: usize,
        arrows: Vec<(usize, usize)>,
        compose: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        if arrows.iter().any(|&(s, t)| s >= objects || t >= objects) {
            return Err(Error::InvalidInput("arrow endpoint out of range".into()));
        }
        let mut table = HashMap::new();
        for (f, &(_, b)) in arrows.iter().enumerate() {
            for (g, &(c, _)) in arrows.iter().enumerate() {
                if b == c {
                    table.insert((f, g), compose(f, g));
                }
            }
        }
        Ok(FiniteCategory {
            objects,
            arrows,
            compose: table,
        })
    }

    /// `{•}`.
    pub fn point() -> Self {
        Self::new(1, Vec::new(), |_, _| None).expect("valid")
    }

    /// `{• ⇉ •}`.
    pub fn parallel_pair() -> Self {
        Self::new(2, vec![(0, 1), (0, 1)], |_, _| None).expect("valid")
    }

    /// The poset `0 < 1 < … < n`.
    pub fn simplex(n: usize) -> Self {
        let arrows: Vec<(usize, usize)> = (0..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let index: HashMap<(usize, usize), usize> =
            arrows.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let a2 = arrows.clone();
        Self::new(n + 1, arrows, move |f, g| index.get(&(a2[f].0, a2[g].1)).copied())
            .expect("valid")
    }

    /// Number of non-degenerate 2-simplices.
    pub fn triangles(&self) -> usize {
        self.compose.len()
    }
}

/// Normalised chains: vertices, non-identity arrows, composable pairs of
/// non-identity arrows (faces `g`, `g ∘ f`, `f`).
pub fn nerve_complex(c: &FiniteCategory) -> Result<ChainComplex> {
    let (v, e) = (c.objects, c.arrows.len());
    let mut pairs: Vec<_> = c.compose.iter().collect();
    pairs.sort_by_key(|(k, _)| **k);
    let mut d1 = IntMatrix::zeros(v, e);
    for (k, &(s, t)) in c.arrows.iter().enumerate() {
        d1[(t, k)] += 1;
        d1[(s, k)] -= 1;
    }
    let mut d2 = IntMatrix::zeros(e, pairs.len());
    for (k, (&(f, g), h)) in pairs.iter().enumerate() {
        d2[(g, k)] += 1;
        d2[(f, k)] += 1;
        if let Some(h) = h {
            d2[(*h, k)] -= 1;
        }
    }
    ChainComplex::from_matrices(
        0,
        vec![FgAbGroup::free(v), FgAbGroup::free(e), FgAbGroup::free(pairs.len())],
        vec![d1, d2],
    )
}

pub fn nerve_h1(c: &FiniteCategory) -> Result<Canonical> {
    let complex = nerve_complex(c)?;
    if !complex.validate() {
        return Err(Error::Contract("nerve boundaries do not compose to zero".into()));
    }
    Ok(complex.homology(1)?.group().canonical().clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct NerveReport {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    pub objects: usize,
    pub arrows: usize,
    pub triangles: usize,
    pub h1: Canonical,
    pub tor1: Canonical,
    pub agrees: bool,
}

/// Largest number of 2-simplices the experiment will assemble.
pub const NERVE_TRIANGLE_LIMIT: usize = 4000;

/// The full subcategory on objects of rank at most one, with arrows taken
/// as residue matrices mod `e`. Compares `H_1` of its nerve with
/// `Tor_1(A, B)` and reports the outcome without judging it.
pub fn nerve_h1_experiment(a: &FgAbGroup, b: &FgAbGroup) -> Result<NerveReport> {
    let amb = Ambient::new(a, b)?;
    let (ea, eb) = (amb.elements_a(), amb.elements_b());
    if ea.len() * eb.len() > 30 {
        return Err(Error::TooLarge(format!(
            "|A|·|B| = {} exceeds 30",
            ea.len() * eb.len()
        )));
    }
    let e = amb.exponent();
    let mut objects = vec![TorTriple::zero(&amb)];
    for x in &ea {
        for y in &eb {
            objects.push(TorTriple::new(&amb, vec![x.clone()], vec![y.clone()])?);
        }
    }
    // arrows as (source, target, residues of the rank(t) × rank(s) matrix)
    let mut arrows: Vec<(usize, usize, Vec<u64>)> = Vec::new();
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            let n = x.rank() * y.rank();
            for code in 0..e.pow(n as u32) {
                let entries = if n == 0 { vec![] } else { vec![code] };
                if i == j && entries.iter().all(|&m| m % e == 1 % e) {
                    continue;
                }
                let m = IntMatrix::new(
                    y.rank(),
                    x.rank(),
                    entries.iter().map(|&v| BigInt::from(v)).collect(),
                )?;
                if is_morphism(x, y, &m)? {
                    arrows.push((i, j, entries));
                }
            }
        }
    }
    let mut into = vec![0usize; objects.len()];
    let mut out = vec![0usize; objects.len()];
    for (s, t, _) in &arrows {
        out[*s] += 1;
        into[*t] += 1;
    }
    let triangles: usize = into.iter().zip(&out).map(|(i, o)| i * o).sum();
    if triangles > NERVE_TRIANGLE_LIMIT {
        return Err(Error::TooLarge(format!(
            "{triangles} two-simplices exceed the limit {NERVE_TRIANGLE_LIMIT}"
        )));
    }
    let index: HashMap<(usize, usize, Vec<u64>), usize> = arrows
        .iter()
        .enumerate()
        .map(|(k, a)| (a.clone(), k))
        .collect();
    let compose = |f: usize, g: usize| -> Option<usize> {
        let (s, _, mf) = &arrows[f];
        let (_, t, mg) = &arrows[g];
        // rank ≤ 1 on every object, so the product has at most one entry
        let entries = match (mf.first(), mg.first()) {
            (Some(x), Some(y)) => vec![(x * y) % e],
            _ if objects[*s].rank() * objects[*t].rank() == 1 => vec![0],
            _ => vec![],
        };
        if s == t && entries.iter().all(|&m| m % e == 1 % e) {
            return None;
        }
        Some(*index.get(&(*s, *t, entries)).expect("composite is an arrow"))
    };
    let cat = FiniteCategory::new(
        objects.len(),
        arrows.iter().map(|(s, t, _)| (*s, *t)).collect(),
        compose,
    )?;
    let h1 = nerve_h1(&cat)?;
    let tor1 = tor(amb.a(), amb.b(), 1, None)?.group.canonical().clone();
    Ok(NerveReport {
        a: amb.a().to_literal(),
        b: amb.b().to_literal(),
        objects: objects.len(),
        arrows: arrows.len(),
        triangles: cat.triangles(),
        agrees: h1 == tor1,
        h1,
        tor1,
    })
}
