//! The three properties characterising `Tor_n(−, M)` up to natural
//! isomorphism, checked on a finite battery for any candidate functor.

use serde::Serialize;

use super::{tor, tor_les};
use crate::complexes::{LesTerm, LongExactSequence};
use crate::battery::{prime_power, z_times};
use crate::error::Result;
use crate::fgab::{direct_sum, tensor, FgAbGroup, GroupHom, ShortExactSeq};

/// A candidate for `Tor_n(−, M)`: its values and its long exact sequences.
pub trait TorCandidate {
    fn name(&self) -> String;

    fn value(&self, a: &FgAbGroup, m: &FgAbGroup, n: usize) -> Result<FgAbGroup>;

    /// `0 → T_k(A₁) → T_k(A₂) → T_k(A₃) → T_{k−1}(A₁) → … → T_0(A₃) → 0`,
    /// top degree first, three terms per degree.
    fn long_exact_sequence(&self, s: &ShortExactSeq, m: &FgAbGroup) -> Result<LongExactSequence>;
}

/// `Tor_n(−, M)` as computed by this crate.
#[derive(Clone, Copy, Debug, Default)]
pub struct TorFunctor;

impl TorCandidate for TorFunctor {
    fn name(&self) -> String {
        "tor".into()
    }

    fn value(&self, a: &FgAbGroup, m: &FgAbGroup, n: usize) -> Result<FgAbGroup> {
        Ok(tor(a, m, n, None)?.group)
    }

    fn long_exact_sequence(&self, s: &ShortExactSeq, m: &FgAbGroup) -> Result<LongExactSequence> {
        Ok(tor_les(s, m)?.sequence)
    }
}

/// The zero functor with its (exact) zero sequences.
#[derive(Clone, Copy, Debug, Default)]
pub struct ConstantZero;

impl TorCandidate for ConstantZero {
    fn name(&self) -> String {
        "constant-zero".into()
    }

    fn value(&self, _: &FgAbGroup, _: &FgAbGroup, _: usize) -> Result<FgAbGroup> {
        Ok(FgAbGroup::zero())
    }

    fn long_exact_sequence(&self, _: &ShortExactSeq, _: &FgAbGroup) -> Result<LongExactSequence> {
        let zero = FgAbGroup::zero();
        let terms = (1..=3)
            .map(|i| LesTerm {
                label: format!("T_0(A{i})"),
                group: zero.clone(),
            })
            .collect();
        let maps = vec![GroupHom::identity(&zero); 2];
        LongExactSequence::assemble(terms, maps)
    }
}

/// `T_n = Tor_{n−1}` for `n ≥ 1` and `T_0 = Tor_0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DegreeShifted;

impl TorCandidate for DegreeShifted {
    fn name(&self) -> String {
        "degree-shifted".into()
    }

    fn value(&self, a: &FgAbGroup, m: &FgAbGroup, n: usize) -> Result<FgAbGroup> {
        Ok(tor(a, m, n.saturating_sub(1), None)?.group)
    }

    fn long_exact_sequence(&self, s: &ShortExactSeq, m: &FgAbGroup) -> Result<LongExactSequence> {
        let real = tor_les(s, m)?.sequence;
        let len = real.terms.len();
        let mut terms = real.terms[1..len - 1].to_vec();
        let mut maps = real.maps[1..len - 2].to_vec();
        let bottom: Vec<_> = terms[terms.len() - 3..].to_vec();
        let bottom_maps: Vec<_> = maps[maps.len() - 2..].to_vec();
        let last = terms.last().expect("three terms per row").group.clone();
        maps.push(GroupHom::zero(&last, &bottom[0].group));
        maps.extend(bottom_maps);
        terms.extend(bottom);
        LongExactSequence::assemble(terms, maps)
    }
}

/// Sequences and groups the axioms are checked on.
#[derive(Clone, Debug)]
pub struct AxiomBattery {
    pub sequences: Vec<ShortExactSeq>,
    pub groups: Vec<FgAbGroup>,
    pub free: Vec<FgAbGroup>,
    pub max_degree: usize,
}

pub fn standard_battery() -> AxiomBattery {
    let split = {
        let a = FgAbGroup::cyclic(4);
        let c = FgAbGroup::parse("Z/6 + Z").expect("literal");
        let s = direct_sum(&a, &c);
        ShortExactSeq::new(s.injections[0].clone(), s.projections[1].clone()).expect("exact")
    };
    let groups = ["0", "Z", "Z/4", "Z/6", "Z^2 + Z/3", "Z/2 + Z/4"]
        .iter()
        .map(|l| FgAbGroup::parse(l).expect("literal"))
        .collect();
    AxiomBattery {
        sequences: vec![
            z_times(2),
            z_times(3),
            z_times(6),
            prime_power(2, 1, 1),
            prime_power(3, 1, 1),
            prime_power(2, 1, 2),
            split,
        ],
        groups,
        free: (0..4).map(FgAbGroup::free).collect(),
        max_degree: 2,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub candidate: String,
    /// Every battery sequence yields an exact sequence built from the
    /// candidate's own values.
    pub long_exact_sequence: bool,
    /// `T_0(A) ≅ A ⊗ M`.
    pub degree_zero: bool,
    /// `T_n(F) = 0` for free `F` and `n ≥ 1`.
    pub vanishing: bool,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.long_exact_sequence && self.degree_zero && self.vanishing
    }
}

fn les_matches(
    candidate: &dyn TorCandidate,
    s: &ShortExactSeq,
    m: &FgAbGroup,
) -> Result<std::result::Result<(), String>> {
    let les = candidate.long_exact_sequence(s, m)?;
    if !les.is_exact() {
        return Ok(Err("sequence is not exact".into()));
    }
    let inner = les.terms.len().saturating_sub(2);
    if inner == 0 || inner % 3 != 0 {
        return Ok(Err(format!("{inner} inner terms is not a whole number of rows")));
    }
    let rows = inner / 3;
    let parts = [s.left(), s.middle(), s.right()];
    for (idx, term) in les.terms[1..=inner].iter().enumerate() {
        let degree = rows - 1 - idx / 3;
        let expected = candidate.value(parts[idx % 3], m, degree)?;
        if !expected.is_isomorphic(&term.group) {
            return Ok(Err(format!(
                "term {} is {} but T_{degree}(A{}) is {}",
                idx + 1,
                term.group,
                idx % 3 + 1,
                expected
            )));
        }
    }
    if !candidate.value(s.right(), m, rows)?.is_trivial() {
        return Ok(Err(format!("sequence stops although T_{rows}(A₃) ≠ 0")));
    }
    Ok(Ok(()))
}

/// Checks the long exact sequence, degree-zero and vanishing properties
/// of `candidate` against `−, M` on `battery`.
pub fn tor_axiom_suite(
    candidate: &dyn TorCandidate,
    m: &FgAbGroup,
    battery: &AxiomBattery,
) -> Result<AxiomReport> {
    let mut report = AxiomReport {
        candidate: candidate.name(),
        long_exact_sequence: true,
        degree_zero: true,
        vanishing: true,
        failures: Vec::new(),
    };
    for (k, s) in battery.sequences.iter().enumerate() {
        if let Err(why) = les_matches(candidate, s, m)? {
            report.long_exact_sequence = false;
            report.failures.push(format!("les, sequence {k}: {why}"));
        }
    }
    for a in &battery.groups {
        let t0 = candidate.value(a, m, 0)?;
        let expected = tensor(a, m);
        if !t0.is_isomorphic(expected.group()) {
            report.degree_zero = false;
            report.failures.push(format!(
                "degree zero: T_0({a}) = {t0}, expected {}",
                expected.group()
            ));
        }
    }
    for f in &battery.free {
        for n in 1..=battery.max_degree {
            let t = candidate.value(f, m, n)?;
            if !t.is_trivial() {
                report.vanishing = false;
                report.failures.push(format!("vanishing: T_{n}({f}) = {t}"));
            }
        }
    }
    Ok(report)
}
