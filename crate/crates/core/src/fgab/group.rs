use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::{decimal_vec, smith_normal_form, solve_with_smith, IntMatrix, SmithDecomposition};

/// Isomorphism invariant of a finitely generated abelian group:
/// `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `2 ≤ d_1 | d_2 | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Canonical {
    #[serde(with = "decimal_vec")]
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl Canonical {
    pub fn trivial() -> Self {
        Canonical {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn cyclic(n: u64) -> Self {
        let invariant_factors = if n <= 1 { vec![] } else { vec![BigInt::from(n)] };
        Canonical {
            invariant_factors,
            free_rank: usize::from(n == 0),
        }
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.invariant_factors.iter().product())
    }

    pub fn exponent(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| {
            self.invariant_factors
                .last()
                .cloned()
                .unwrap_or_else(BigInt::one)
        })
    }

    /// Literal such as `Z^2 + Z/2 + Z/6`; the trivial group is `0`.
    pub fn to_literal(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for Canonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// Smith data of the relation matrix, computed once per group.
#[derive(Debug)]
pub(crate) struct SmithData {
    pub decomposition: SmithDecomposition,
    /// Number of leading unit diagonal entries (killed coordinates).
    pub units: usize,
    pub canonical: Canonical,
}

#[derive(Debug)]
struct Inner {
    generators: usize,
    relations: IntMatrix,
    smith: OnceLock<SmithData>,
}

/// `Z^g / column-span(relations)`.
///
/// Cloning is cheap; the presentation is shared. Two groups compare equal
/// when their presentations are identical, which is what homomorphisms need
/// to be composable. Use [`FgAbGroup::is_isomorphic`] for isomorphism.
#[derive(Clone)]
pub struct FgAbGroup(Arc<Inner>);

impl FgAbGroup {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::Dimension(format!(
                "relation matrix has {} rows but there are {generators} generators",
                relations.rows()
            )));
        }
        Ok(FgAbGroup(Arc::new(Inner {
            generators,
            relations,
            smith: OnceLock::new(),
        })))
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, IntMatrix::zeros(rank, 0)).expect("shape")
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the trivial group (with no
    /// generators).
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::integers(),
            1 => Self::zero(),
            _ => Self::new(1, IntMatrix::from_i64(1, 1, &[n as i64])).expect("shape"),
        }
    }

    /// Group in canonical presentation: one generator per invariant factor
    /// (after normalisation), then the free generators.
    pub fn from_invariant_factors(factors: &[BigInt], free_rank: usize) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|d| !d.is_positive()) {
            return Err(Error::InvalidInput(format!(
                "invariant factor {bad} must be positive"
            )));
        }
        let diag = IntMatrix::diagonal(factors.len(), factors.len(), factors);
        let normal = smith_normal_form(&diag).diagonal();
        let kept: Vec<BigInt> = normal.into_iter().filter(|d| !d.is_one()).collect();
        Ok(Self::canonical_presentation(&kept, free_rank))
    }

    pub(crate) fn canonical_presentation(factors: &[BigInt], free_rank: usize) -> Self {
        let g = factors.len() + free_rank;
        let rel = IntMatrix::diagonal(g, factors.len(), factors);
        Self::new(g, rel).expect("shape")
    }

    pub fn from_canonical(c: &Canonical) -> Self {
        Self::canonical_presentation(&c.invariant_factors, c.free_rank)
    }

    pub fn generators(&self) -> usize {
        self.0.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.0.relations
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn smith(&self) -> &SmithData {
        self.0.smith.get_or_init(|| {
            let decomposition = smith_normal_form(&self.0.relations);
            let diag = decomposition.diagonal();
            let units = diag.iter().take_while(|d| d.is_one()).count();
            let canonical = Canonical {
                invariant_factors: diag[units..].to_vec(),
                free_rank: self.0.generators - decomposition.rank,
            };
            SmithData {
                decomposition,
                units,
                canonical,
            }
        })
    }

    pub fn canonical(&self) -> &Canonical {
        &self.smith().canonical
    }

    /// `(invariant factors, free rank)`.
    pub fn canonical_decomposition(&self) -> (Vec<BigInt>, usize) {
        let c = self.canonical();
        (c.invariant_factors.clone(), c.free_rank)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_trivial(&self) -> bool {
        self.canonical().is_trivial()
    }

    pub fn is_finite(&self) -> bool {
        self.canonical().free_rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.canonical().order()
    }

    pub fn exponent(&self) -> Option<BigInt> {
        self.canonical().exponent()
    }

    /// Order as a machine integer, rejecting infinite groups.
    pub fn finite_order(&self) -> Result<u64> {
        let order = self
            .order()
            .ok_or_else(|| Error::Infinite(self.canonical().to_literal()))?;
        order
            .to_u64()
            .ok_or_else(|| Error::TooLarge(format!("group of order {order}")))
    }

    /// Moduli of the canonical coordinates: each invariant factor, then `0`
    /// for every free coordinate.
    pub fn canonical_moduli(&self) -> Vec<BigInt> {
        let c = self.canonical();
        let mut m = c.invariant_factors.clone();
        m.extend(std::iter::repeat(BigInt::zero()).take(c.free_rank));
        m
    }

    /// Coordinates of the class of `x ∈ Z^g` in the canonical basis, each
    /// reduced into `[0, d_i)` (free coordinates untouched).
    pub fn canonical_coords(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        let s = self.smith();
        let y = s.decomposition.u.mul_vec(x)?;
        Ok(y[s.units..]
            .iter()
            .zip(self.canonical_moduli())
            .map(|(c, m)| if m.is_zero() { c.clone() } else { c.mod_floor(&m) })
            .collect())
    }

    /// A representative in `Z^g` of the element with the given canonical
    /// coordinates.
    pub fn from_canonical_coords(&self, c: &[BigInt]) -> Result<Vec<BigInt>> {
        let s = self.smith();
        if c.len() + s.units != self.generators() {
            return Err(Error::Dimension(format!(
                "{} canonical coordinates for a group with {} non-trivial coordinates",
                c.len(),
                self.generators() - s.units
            )));
        }
        let mut y = vec![BigInt::zero(); s.units];
        y.extend(c.iter().cloned());
        s.decomposition.u_inverse.mul_vec(&y)
    }

    /// Reduced representative of the class of `x`.
    pub fn reduce(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        let c = self.canonical_coords(x)?;
        self.from_canonical_coords(&c)
    }

    /// Whether `x` lies in the relation lattice, i.e. represents zero.
    pub fn is_relation(&self, x: &[BigInt]) -> Result<bool> {
        Ok(self.relation_coefficients(x)?.is_some())
    }

    /// Some `c` with `relations · c = x`, if `x` is a relation.
    pub(crate) fn relation_coefficients(&self, x: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        Ok(solve_with_smith(&self.smith().decomposition, x)?.map(|s| s.particular))
    }

    /// Whether every column of `m` (a matrix with `g` rows) represents zero.
    pub fn columns_are_relations(&self, m: &IntMatrix) -> Result<bool> {
        for c in m.columns() {
            if !self.is_relation(&c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All canonical coordinate tuples of a finite group, in lexicographic
    /// order. Rejects infinite groups and groups larger than `limit`.
    pub fn enumerate_canonical(&self, limit: u64) -> Result<Vec<Vec<BigInt>>> {
        let order = self.finite_order()?;
        if order > limit {
            return Err(Error::TooLarge(format!(
                "group of order {order} exceeds the enumeration bound {limit}"
            )));
        }
        let moduli = self.canonical_moduli();
        let mut out = vec![Vec::new()];
        for m in &moduli {
            let m = m.to_u64().expect("bounded by order");
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..m).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(BigInt::from(k));
                        p
                    })
                })
                .collect();
        }
        Ok(out)
    }

    pub fn to_literal(&self) -> String {
        self.canonical().to_literal()
    }

    /// Parses `Z^r + Z/d1 + Z/d2 + …` (whitespace-insensitive). `Z` means
    /// `Z^1` and `0` the trivial group. The resulting presentation has one
    /// generator per summand, in the order written.
    pub fn parse(literal: &str) -> Result<Self> {
        let summands = parse_literal(literal)?;
        let mut gens = 0usize;
        let mut rels = Vec::new();
        for s in &summands {
            match s {
                Summand::Free(r) => gens += r,
                Summand::Cyclic(d) => {
                    rels.push((gens, d.clone()));
                    gens += 1;
                }
            }
        }
        let relations = IntMatrix::from_fn(gens, rels.len(), |i, j| {
            if rels[j].0 == i {
                rels[j].1.clone()
            } else {
                BigInt::zero()
            }
        });
        Self::new(gens, relations)
    }

    /// The canonical presentation described by a literal.
    pub fn parse_canonical(literal: &str) -> Result<Self> {
        Ok(Self::from_canonical(Self::parse(literal)?.canonical()))
    }
}

enum Summand {
    Free(usize),
    Cyclic(BigInt),
}

fn parse_literal(literal: &str) -> Result<Vec<Summand>> {
    let chars: Vec<(usize, char)> = literal
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(Error::parse(0, "empty group literal"));
    }
    let mut out = Vec::new();
    let mut i = 0;
    let end_pos = literal.chars().count();
    let pos = |i: usize| chars.get(i).map_or(end_pos, |c| c.0);
    let number = |i: &mut usize| -> Result<BigInt> {
        let start = *i;
        while *i < chars.len() && chars[*i].1.is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            return Err(Error::parse(pos(start), "expected a decimal number"));
        }
        let s: String = chars[start..*i].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("digits"))
    };
    loop {
        match chars.get(i).map(|c| c.1) {
            Some('0') if out.is_empty() && chars.len() == i + 1 => {
                i += 1;
            }
            Some('Z') => {
                i += 1;
                match chars.get(i).map(|c| c.1) {
                    Some('^') => {
                        i += 1;
                        let r = number(&mut i)?;
                        let r = r
                            .to_usize()
                            .ok_or_else(|| Error::parse(pos(i), "free rank too large"))?;
                        out.push(Summand::Free(r));
                    }
                    Some('/') => {
                        i += 1;
                        let at = pos(i);
                        let d = number(&mut i)?;
                        if d.is_zero() {
                            return Err(Error::parse(at, "Z/0 is not allowed; write Z"));
                        }
                        out.push(Summand::Cyclic(d));
                    }
                    _ => out.push(Summand::Free(1)),
                }
            }
            Some(c) => {
                return Err(Error::parse(
                    pos(i),
                    format!("unexpected '{c}', expected 'Z', 'Z^r' or 'Z/d'"),
                ))
            }
            None => return Err(Error::parse(pos(i), "expected a summand")),
        }
        match chars.get(i).map(|c| c.1) {
            None => break,
            Some('+') => {
                i += 1;
                if i == chars.len() {
                    return Err(Error::parse(pos(i), "dangling '+'"));
                }
            }
            Some(c) => return Err(Error::parse(pos(i), format!("unexpected '{c}', expected '+'"))),
        }
    }
    Ok(out)
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other)
            || (self.0.generators == other.0.generators && self.0.relations == other.0.relations)
    }
}

impl Eq for FgAbGroup {}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FgAbGroup({} gens, {} rels ≅ {})",
            self.generators(),
            self.relations().cols(),
            self.canonical()
        )
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self.canonical(), f)
    }
}

/// Wire form of a presentation: `{generators, relations}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: usize,
    pub relations: IntMatrix,
}

impl From<&FgAbGroup> for PresentationJson {
    fn from(g: &FgAbGroup) -> Self {
        PresentationJson {
            generators: g.generators(),
            relations: g.relations().clone(),
        }
    }
}

impl PresentationJson {
    pub fn into_group(self) -> Result<FgAbGroup> {
        // `[]` deserialises as 0x0; widen it to g x 0.
        let relations = if self.relations.rows() == 0 && self.relations.cols() == 0 {
            IntMatrix::zeros(self.generators, 0)
        } else {
            self.relations
        };
        FgAbGroup::new(self.generators, relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(factors: &[i64], free: usize) -> Canonical {
        Canonical {
            invariant_factors: factors.iter().map(|&d| BigInt::from(d)).collect(),
            free_rank: free,
        }
    }

    #[test]
    fn invariant_factor_constructor() {
        let z4 = FgAbGroup::from_invariant_factors(&[BigInt::from(4)], 0).unwrap();
        assert_eq!(z4.canonical(), &c(&[4], 0));
        let z = FgAbGroup::from_invariant_factors(&[], 1).unwrap();
        assert_eq!(z.canonical(), &c(&[], 1));
        let merged =
            FgAbGroup::from_invariant_factors(&[BigInt::from(2), BigInt::from(3)], 0).unwrap();
        assert_eq!(merged.canonical(), &c(&[6], 0));
        assert_eq!(merged.generators(), 1);
        assert!(FgAbGroup::from_invariant_factors(&[BigInt::from(0)], 0).is_err());
        assert!(FgAbGroup::from_invariant_factors(&[BigInt::from(-2)], 0).is_err());
        let trivial = FgAbGroup::from_invariant_factors(&[BigInt::from(1)], 0).unwrap();
        assert_eq!(trivial.generators(), 0);
    }

    #[test]
    fn canonical_decomposition_examples() {
        let g = FgAbGroup::new(2, IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(g.canonical(), &c(&[6], 0));
        assert_eq!(FgAbGroup::free(2).canonical(), &c(&[], 2));
        let killed = FgAbGroup::new(1, IntMatrix::from_rows(&[vec![1]])).unwrap();
        assert!(killed.is_trivial());
    }

    #[test]
    fn literal_parsing() {
        let g = FgAbGroup::parse("Z^2 + Z/2 + Z/6").unwrap();
        assert_eq!(g.canonical(), &c(&[2, 6], 2));
        assert_eq!(FgAbGroup::parse(" Z/2+Z/3 ").unwrap().canonical(), &c(&[6], 0));
        assert_eq!(FgAbGroup::parse("Z").unwrap().canonical(), &c(&[], 1));
        assert!(FgAbGroup::parse("0").unwrap().is_trivial());
        assert_eq!(FgAbGroup::parse("0").unwrap().generators(), 0);
        assert_eq!(c(&[2, 6], 2).to_literal(), "Z^2 + Z/2 + Z/6");
        assert_eq!(Canonical::trivial().to_literal(), "0");
    }

    #[test]
    fn literal_errors_point_at_the_problem() {
        for (text, at) in [("Z/", 2), ("Z + Q", 4), ("Z/4 +", 5), ("Z/0", 2), ("", 0), ("Z^x", 2)] {
            match FgAbGroup::parse(text) {
                Err(Error::Parse { position, .. }) => assert_eq!(position, at, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_coordinates_round_trip() {
        let g = FgAbGroup::new(2, IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])).unwrap();
        let x = vec![BigInt::from(1), BigInt::from(1)];
        let cc = g.canonical_coords(&x).unwrap();
        assert_eq!(cc.len(), 1);
        let back = g.from_canonical_coords(&cc).unwrap();
        let diff: Vec<BigInt> = back.iter().zip(&x).map(|(a, b)| a - b).collect();
        assert!(g.is_relation(&diff).unwrap());
        assert_eq!(g.enumerate_canonical(100).unwrap().len(), 6);
        assert!(matches!(
            FgAbGroup::integers().enumerate_canonical(100),
            Err(Error::Infinite(_))
        ));
    }
}
