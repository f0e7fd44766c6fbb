use std::collections::HashMap;

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{box_sum, classifying_invariant, morphism_exists, Truncation};
use crate::error::{Error, Result};
use crate::fgab::Canonical;

/// Connected components of the truncation, where `x` and `y` are joined
/// whenever a morphism goes either way.
#[derive(Clone, Debug)]
pub struct ComponentPartition {
    /// Component label of each object; labels are numbered by smallest member.
    pub component_of: Vec<usize>,
    /// Smallest object index in each component.
    pub representatives: Vec<usize>,
    /// Ordered pairs `x ≠ y` with a morphism `x → y`.
    pub edge_count: u64,
    /// Canonical coordinates of `χ` per object, as an index into `chi_values`.
    pub chi_of: Vec<usize>,
    pub chi_values: Vec<Vec<BigInt>>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn same_component(&self, x: usize, y: usize) -> bool {
        self.component_of[x] == self.component_of[y]
    }
}

/// Runs over every ordered pair of objects. With a seed, objects and pairs
/// are visited in a shuffled order; the partition does not depend on it.
/// Every edge found is checked to preserve `χ`.
pub fn pi0(t: &Truncation, seed: Option<u64>) -> Result<ComponentPartition> {
    let n = t.len();
    let mut chi_index: HashMap<Vec<BigInt>, usize> = HashMap::new();
    let mut chi_values = Vec::new();
    let mut chi_of = Vec::with_capacity(n);
    for x in t.objects() {
        let key = classifying_invariant(x)?.canonical_coords();
        let next = chi_values.len();
        let id = *chi_index.entry(key.clone()).or_insert(next);
        if id == next {
            chi_values.push(key);
        }
        chi_of.push(id);
    }

    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    if let Some(rng) = rng.as_mut() {
        order.shuffle(rng);
    }
    let objs = t.objects();
    let mut uf = UnionFind::<usize>::new(n);
    let mut edge_count = 0u64;
    for &i in &order {
        let mut inner = order.clone();
        if let Some(rng) = rng.as_mut() {
            if rng.gen_bool(0.5) {
                inner.reverse();
            }
        }
        for &j in &inner {
            if i == j {
                continue;
            }
            if morphism_exists(&objs[i], &objs[j])?.is_some() {
                edge_count += 1;
                if chi_of[i] != chi_of[j] {
                    return Err(Error::Contract(format!(
                        "χ differs along the morphism {} → {}",
                        objs[i], objs[j]
                    )));
                }
                uf.union(i, j);
            }
        }
    }
    let mut label_of_root = HashMap::new();
    let mut component_of = Vec::with_capacity(n);
    let mut representatives = Vec::new();
    for i in 0..n {
        let root = uf.find_mut(i);
        let label = *label_of_root.entry(root).or_insert_with(|| {
            representatives.push(i);
            representatives.len() - 1
        });
        component_of.push(label);
    }
    Ok(ComponentPartition {
        component_of,
        representatives,
        edge_count,
        chi_of,
        chi_values,
    })
}

/// `χ̄: components → A ⊗ B` and how close it is to a bijection.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentGroup {
    pub chi_image_size: usize,
    pub tensor_order: u64,
    pub injective: bool,
    pub surjective: bool,
    pub bijection: bool,
    /// `A ⊗ B` when `χ̄` is a bijection.
    pub group: Option<Canonical>,
    /// `comp(r □ s)` carries `χ̄(r) + χ̄(s)` for all representatives with
    /// `rank r + rank s ≤ R`.
    pub box_adds: bool,
}

pub fn component_group(t: &Truncation, p: &ComponentPartition) -> Result<ComponentGroup> {
    let mut chi_of_component: Vec<Option<usize>> = vec![None; p.count()];
    for (i, &c) in p.component_of.iter().enumerate() {
        match chi_of_component[c] {
            None => chi_of_component[c] = Some(p.chi_of[i]),
            Some(v) if v != p.chi_of[i] => {
                return Err(Error::Contract(format!("χ is not constant on component {c}")));
            }
            _ => {}
        }
    }
    let mut image: Vec<usize> = chi_of_component.iter().flatten().copied().collect();
    image.sort_unstable();
    image.dedup();
    let tensor = t.ambient().tensor().group();
    let tensor_order = tensor.finite_order()?;
    let injective = image.len() == p.count();
    let surjective = image.len() as u64 == tensor_order;

    let objs = t.objects();
    let mut box_adds = true;
    for &r in &p.representatives {
        for &s in &p.representatives {
            if objs[r].rank() + objs[s].rank() > t.max_rank() {
                continue;
            }
            let sum = box_sum(&objs[r], &objs[s])?;
            let idx = t
                .index_of(&sum)
                .ok_or_else(|| Error::Contract("box of two objects left the truncation".into()))?;
            let lhs = classifying_invariant(&objs[r])?.add(&classifying_invariant(&objs[s])?)?;
            let label = &p.chi_values[chi_of_component[p.component_of[idx]].expect("labelled")];
            if &lhs.canonical_coords() != label {
                box_adds = false;
            }
        }
    }
    Ok(ComponentGroup {
        chi_image_size: image.len(),
        tensor_order,
        injective,
        surjective,
        bijection: injective && surjective,
        group: (injective && surjective).then(|| tensor.canonical().clone()),
        box_adds,
    })
}

/// Samples triples `(x, x', y)` with `x ∼ x'` and checks `x □ y ∼ x' □ y`
/// whenever both boxes stay in the truncation. Returns the number of
/// triples checked, or the first counterexample.
pub fn box_respects_components(
    t: &Truncation,
    p: &ComponentPartition,
    samples: usize,
    seed: u64,
) -> Result<std::result::Result<usize, (usize, usize, usize)>> {
    let objs = t.objects();
    let mut by_component: Vec<Vec<usize>> = vec![Vec::new(); p.count()];
    for (i, &c) in p.component_of.iter().enumerate() {
        by_component[c].push(i);
    }
    let small: Vec<usize> = (0..objs.len())
        .filter(|&i| 2 * objs[i].rank() <= t.max_rank())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..samples {
        let x = small[rng.gen_range(0..small.len())];
        let peers: Vec<usize> = by_component[p.component_of[x]]
            .iter()
            .copied()
            .filter(|&i| 2 * objs[i].rank() <= t.max_rank())
            .collect();
        let x2 = peers[rng.gen_range(0..peers.len())];
        let y = small[rng.gen_range(0..small.len())];
        let a = t.index_of(&box_sum(&objs[x], &objs[y])?);
        let b = t.index_of(&box_sum(&objs[x2], &objs[y])?);
        if let (Some(a), Some(b)) = (a, b) {
            checked += 1;
            if !p.same_component(a, b) {
                return Ok(Err((x, x2, y)));
            }
        }
    }
    Ok(Ok(checked))
}

/// Wire form of a π₀ run.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Pi0Report {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    pub max_rank: usize,
    pub object_count: usize,
    pub edge_count: u64,
    pub component_count: usize,
    pub chi_image_size: usize,
    pub bijection: bool,
    pub component_group: Option<Canonical>,
    /// Each component's smallest object and its `χ` in canonical
    /// coordinates of `A ⊗ B`.
    pub components: Vec<ComponentSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub representative: String,
    pub size: usize,
    #[serde(with = "crate::intlin::decimal_vec")]
    pub chi: Vec<BigInt>,
}

pub fn pi0_report(t: &Truncation, p: &ComponentPartition, g: &ComponentGroup) -> Pi0Report {
    let mut sizes = vec![0usize; p.count()];
    for &c in &p.component_of {
        sizes[c] += 1;
    }
    let components = p
        .representatives
        .iter()
        .zip(sizes)
        .map(|(&r, size)| ComponentSummary {
            representative: t.objects()[r].to_literal(),
            size,
            chi: p.chi_values[p.chi_of[r]].clone(),
        })
        .collect();
    Pi0Report {
        a: t.ambient().a().to_literal(),
        b: t.ambient().b().to_literal(),
        max_rank: t.max_rank(),
        object_count: t.len(),
        edge_count: p.edge_count,
        component_count: p.count(),
        chi_image_size: g.chi_image_size,
        bijection: g.bijection,
        component_group: g.group.clone(),
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::FgAbGroup;

    fn run(a: &str, b: &str, r: usize) -> (Truncation, ComponentPartition, ComponentGroup) {
        let t = Truncation::enumerate(
            &FgAbGroup::parse(a).unwrap(),
            &FgAbGroup::parse(b).unwrap(),
            r,
            10_000,
        )
        .unwrap();
        let p = pi0(&t, None).unwrap();
        let g = component_group(&t, &p).unwrap();
        (t, p, g)
    }

    #[test]
    fn z4_z6_has_two_components() {
        let (t, p, g) = run("Z/4", "Z/6", 2);
        assert_eq!(p.count(), 2);
        assert!(g.bijection);
        assert_eq!(g.group, Some(Canonical::cyclic(2)));
        assert!(g.box_adds);
        let a = t.ambient();
        let x = super::super::TorTriple::cyclic(a, &[1], &[1]).unwrap();
        let xx = box_sum(&x, &x).unwrap();
        let zero = t.index_of(&super::super::TorTriple::zero(a)).unwrap();
        assert!(p.same_component(t.index_of(&xx).unwrap(), zero));
        assert!(!p.same_component(t.index_of(&x).unwrap(), zero));
    }

    #[test]
    fn coprime_and_trivial_cases_are_connected() {
        let (_, p, g) = run("Z/2", "Z/3", 2);
        assert_eq!(p.count(), 1);
        assert!(g.bijection);
        assert_eq!(g.group, Some(Canonical::trivial()));
        let (_, p, g) = run("0", "Z/6", 2);
        assert_eq!(p.count(), 1);
        assert_eq!(g.group, Some(Canonical::trivial()));
    }

    #[test]
    fn partition_ignores_visiting_order() {
        let t = Truncation::enumerate(&FgAbGroup::cyclic(2), &FgAbGroup::cyclic(4), 2, 10_000).unwrap();
        let base = pi0(&t, None).unwrap();
        for seed in 1..4 {
            let other = pi0(&t, Some(seed)).unwrap();
            assert_eq!(other.component_of, base.component_of);
            assert_eq!(other.edge_count, base.edge_count);
        }
    }

    #[test]
    fn component_count_bounds_chi_image() {
        for (a, b, r) in [("Z/4", "Z/6", 1), ("Z/2", "Z/2", 1), ("Z/4", "Z/4", 1), ("Z/3", "Z/3", 2)] {
            let (_, p, g) = run(a, b, r);
            assert!(p.count() >= g.chi_image_size);
            assert_eq!(p.count() == g.chi_image_size, g.injective);
        }
    }

    #[test]
    fn box_is_compatible_with_components() {
        let (t, p, _) = run("Z/4", "Z/6", 2);
        let checked = box_respects_components(&t, &p, 500, 3).unwrap().unwrap();
        assert!(checked > 0);
    }

    #[test]
    fn report_shape() {
        let (t, p, g) = run("Z/4", "Z/6", 1);
        let v = serde_json::to_value(pi0_report(&t, &p, &g)).unwrap();
        for key in [
            "A", "B", "maxRank", "objectCount", "edgeCount", "componentCount", "chiImageSize",
            "bijection", "componentGroup",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["objectCount"], 25);
    }
}
