//! Shared fixtures and brute-force oracles. The oracles work straight from
//! the definitions (enumerating independent sets, spanning sets, matchings)
//! and never call the library's union, intersection or Rado code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use corado::{GroundSet, Matroid, SetSystem, Subset};

/// The 5-vertex, 7-edge graph whose cycle matroid is the running example.
pub fn example_graph() -> Matroid {
    let vertices = ["0", "1", "2", "3", "4"];
    let edges = [
        ("0", "1", "1"),
        ("0", "2", "2"),
        ("0", "3", "3"),
        ("2", "3", "4"),
        ("3", "1", "5"),
        ("1", "2", "6"),
        ("2", "4", "7"),
    ];
    Matroid::graphic(&vertices, &edges).unwrap()
}

/// `A1 = {2,3,4}`, `A2 = {4,6}` on the example's ground set.
pub fn example_system(m: &Matroid) -> SetSystem {
    SetSystem::from_labels(m.ground().clone(), &[&["2", "3", "4"][..], &["4", "6"][..]]).unwrap()
}

pub fn labels(m: &Matroid, s: Subset) -> String {
    m.ground().labels_of(s).concat()
}

pub fn g(n: usize) -> GroundSet {
    GroundSet::numbered(n).unwrap()
}

/// Independent sets by brute force: subsets of some basis.
pub fn independents(m: &Matroid) -> BTreeSet<Subset> {
    Subset::full(m.len())
        .subsets()
        .filter(|s| m.bases().iter().any(|b| s.is_subset_of(*b)))
        .collect()
}

fn maximal_by_size(family: &BTreeSet<Subset>) -> Vec<Subset> {
    let top = family.iter().map(|s| s.len()).max().unwrap();
    family.iter().copied().filter(|s| s.len() == top).collect()
}

fn minimal_by_size(family: &BTreeSet<Subset>) -> Vec<Subset> {
    let bottom = family.iter().map(|s| s.len()).min().unwrap();
    family
        .iter()
        .copied()
        .filter(|s| s.len() == bottom)
        .collect()
}

/// `M ∨ N` from its definition: all unions `I ∪ J`.
pub fn union_oracle(m: &Matroid, n: &Matroid) -> Matroid {
    let im = independents(m);
    let inn = independents(n);
    let all: BTreeSet<Subset> = im
        .iter()
        .flat_map(|i| inn.iter().map(move |j| i.union(*j)))
        .collect();
    Matroid::from_bases(m.ground().clone(), maximal_by_size(&all)).unwrap()
}

/// `M ∧ N` from spanning sets: the minimal intersections `S ∩ T`.
pub fn intersection_oracle(m: &Matroid, n: &Matroid) -> Matroid {
    let spanning = |x: &Matroid| -> Vec<Subset> {
        Subset::full(x.len())
            .subsets()
            .filter(|s| x.bases().iter().any(|b| b.is_subset_of(*s)))
            .collect()
    };
    let (sm, sn) = (spanning(m), spanning(n));
    let all: BTreeSet<Subset> = sm
        .iter()
        .flat_map(|s| sn.iter().map(move |t| s.intersection(*t)))
        .collect();
    Matroid::from_bases(m.ground().clone(), minimal_by_size(&all)).unwrap()
}

/// Whether some injective choice of representatives from `sets` is
/// independent in `m`, by trying every assignment.
pub fn matching_oracle(sets: &[Subset], m: &Matroid) -> bool {
    fn go(i: usize, used: Subset, sets: &[Subset], m: &Matroid) -> bool {
        if i == sets.len() {
            return m.bases().iter().any(|b| used.is_subset_of(*b));
        }
        sets[i]
            .iter()
            .filter(|&e| !used.contains(e))
            .any(|e| go(i + 1, used.with(e), sets, m))
    }
    go(0, Subset::EMPTY, sets, m)
}

/// Rank of a set by scanning its subsets for the largest independent one.
pub fn rank_oracle(m: &Matroid, s: Subset) -> usize {
    s.subsets()
        .filter(|t| m.bases().iter().any(|b| t.is_subset_of(*b)))
        .map(|t| t.len())
        .max()
        .unwrap()
}

/// Number of chains `∅ ⊊ F_1 ⊊ ⋯ ⊊ F_k` of flats with exponents
/// `1 <= a_i < rk F_i - rk F_{i-1}` summing to `c`, counted by walking all
/// subsets of the ground set rather than the library's flat list.
pub fn monomial_count_oracle(m: &Matroid, c: usize) -> usize {
    let n = m.len();
    let flats: Vec<Subset> = Subset::full(n)
        .subsets()
        .filter(|&s| !s.is_empty())
        .filter(|&s| {
            let r = rank_oracle(m, s);
            (0..n)
                .filter(|&e| !s.contains(e))
                .all(|e| rank_oracle(m, s.with(e)) > r)
        })
        .collect();
    fn count(m: &Matroid, flats: &[Subset], prev: Subset, left: usize) -> usize {
        if left == 0 {
            return 1;
        }
        let pr = rank_oracle(m, prev);
        flats
            .iter()
            .filter(|&&f| f != prev && prev.is_subset_of(f))
            .map(|&f| {
                let gap = rank_oracle(m, f) - pr;
                (1..gap.min(left + 1))
                    .map(|a| count(m, flats, f, left - a))
                    .sum::<usize>()
            })
            .sum()
    }
    count(m, &flats, Subset::EMPTY, c)
}
