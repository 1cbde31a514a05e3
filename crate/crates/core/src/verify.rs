//! Exhaustive verification sweeps. Instances are enumerated in a canonical
//! order and checked in parallel; the reported counterexample is always the
//! first one in that order, so transcripts do not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bergman::{strict_gammoid_via_dual, strict_gammoid_via_hyperplanes};
use crate::chow::{
    degree, degree_via_intersection, independent_transversal_avoiding,
    independent_transversal_extending, monomial_basis, relative_nested_quotient, satisfies_dhr,
};
use crate::enumerate::{
    all_matroids, loopless_matroids, random_representable, set_systems, up_to_isomorphism,
};
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::matroid::Matroid;
use crate::ops::{intersect_all, intersection, principal_truncation, union};
use crate::rado::{corado, find_independent_transversal, rado_condition, SetSystem};

/// Largest ground set swept without `force`.
pub const SWEEP_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    pub instances: usize,
    pub counterexample: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: all {} instances agree", self.name, self.instances),
            Some(c) => write!(
                f,
                "{}: counterexample among {} instances: {}",
                self.name, self.instances, c
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    pub up_to_iso: bool,
    pub force: bool,
}

fn check_size(n: usize, opts: SweepOptions) -> Result<()> {
    if n > SWEEP_LIMIT && !opts.force {
        return Err(Error::SearchTooLarge {
            size: n,
            limit: SWEEP_LIMIT,
        });
    }
    Ok(())
}

fn matroid_pool(max_elements: usize, loopless: bool, opts: SweepOptions) -> Result<Vec<Matroid>> {
    check_size(max_elements, opts)?;
    let mut out = Vec::new();
    for n in 0..=max_elements {
        let ms = if loopless {
            loopless_matroids(n)?
        } else {
            all_matroids(n)?
        };
        out.extend(if opts.up_to_iso {
            up_to_isomorphism(ms)
        } else {
            ms
        });
    }
    Ok(out)
}

/// Runs `check` on every item in parallel; each call returns how many
/// instances it covered and the first failure among them.
fn run<T, F>(name: &str, items: &[T], check: F) -> SweepReport
where
    T: Sync,
    F: Fn(&T) -> (usize, Option<String>) + Sync + Send,
{
    let results: Vec<(usize, Option<String>)> = items.par_iter().map(check).collect();
    SweepReport {
        name: name.to_string(),
        instances: results.iter().map(|r| r.0).sum(),
        counterexample: results.into_iter().find_map(|r| r.1),
    }
}

fn describe(m: &Matroid, a: &SetSystem) -> String {
    format!("M bases {:?}, system {}", m.format_bases(), a.format())
}

fn hyperplanes(m: &Matroid, a: &SetSystem) -> Result<Vec<Matroid>> {
    a.members()
        .iter()
        .map(|&s| Matroid::hyperplane(m.ground().clone(), s))
        .collect()
}

/// The coRado matroid equals the iterated intersection with hyperplane
/// matroids, for every loopless matroid on at most `max_elements` elements
/// and every system of at most `max_sets` members. `ordered` sweeps all
/// member sequences instead of multisets.
pub fn theorem_sweep(
    max_elements: usize,
    max_sets: usize,
    ordered: bool,
    opts: SweepOptions,
) -> Result<SweepReport> {
    let pool = matroid_pool(max_elements, true, opts)?;
    Ok(run("theorem", &pool, |m| {
        let mut count = 0;
        for k in 0..=max_sets {
            for a in set_systems(m.ground(), k, ordered) {
                count += 1;
                let lhs = corado(m, &a);
                let rhs = hyperplanes(m, &a).and_then(|hs| intersect_all(m, &hs));
                if lhs != rhs {
                    return (count, Some(describe(m, &a)));
                }
            }
        }
        (count, None)
    }))
}

fn dhr_pool(max_elements: usize, max_rank: usize, opts: SweepOptions) -> Result<Vec<Matroid>> {
    Ok(matroid_pool(max_elements, true, opts)?
        .into_iter()
        .filter(|m| (1..=max_rank).contains(&m.rank()))
        .collect())
}

fn avoids_all<F>(m: &Matroid, find: F) -> bool
where
    F: Fn(usize) -> Result<Option<Vec<usize>>>,
{
    (0..m.len()).all(|e| matches!(find(e), Ok(Some(_))))
}

/// Degree via coRado = degree via intersections = [DHR holds]; DHR holds iff
/// for every `e` some independent transversal `I` has `I ∪ {e}` independent
/// with `e ∉ I`; and DHR implies an independent transversal avoiding each
/// `e`.
pub fn dhr_sweep(max_elements: usize, max_rank: usize, opts: SweepOptions) -> Result<SweepReport> {
    let pool = dhr_pool(max_elements, max_rank, opts)?;
    Ok(run("dhr", &pool, |m| {
        let mut count = 0;
        for a in set_systems(m.ground(), m.rank() - 1, false) {
            count += 1;
            let bad = || Some(describe(m, &a));
            let (Ok(d1), Ok(d2)) = (degree(m, &a), degree_via_intersection(m, &a)) else {
                return (count, bad());
            };
            let dhr = satisfies_dhr(m, &a);
            if d1 != d2 || (d1 == 1) != dhr {
                return (count, bad());
            }
            if avoids_all(m, |e| independent_transversal_extending(m, &a, e)) != dhr {
                return (count, bad());
            }
            if dhr && !avoids_all(m, |e| independent_transversal_avoiding(m, &a, e)) {
                return (count, bad());
            }
        }
        (count, None)
    }))
}

/// Checks the converse "an independent transversal avoids every `e` implies
/// DHR". It does not hold in general, so a passing report only means no
/// counterexample exists in range.
pub fn avoidance_converse_sweep(
    max_elements: usize,
    max_rank: usize,
    opts: SweepOptions,
) -> Result<SweepReport> {
    let pool = dhr_pool(max_elements, max_rank, opts)?;
    Ok(run("avoidance converse", &pool, |m| {
        let mut count = 0;
        for a in set_systems(m.ground(), m.rank() - 1, false) {
            count += 1;
            if avoids_all(m, |e| independent_transversal_avoiding(m, &a, e))
                && !satisfies_dhr(m, &a)
            {
                return (count, Some(describe(m, &a)));
            }
        }
        (count, None)
    }))
}

fn rado_agrees(nbhd: &[Subset], m: &Matroid) -> bool {
    Subset::full(nbhd.len()).subsets().all(|lefts| {
        let sets: Vec<Subset> = lefts.iter().map(|i| nbhd[i]).collect();
        rado_condition(&sets, m) == find_independent_transversal(&sets, m).is_some()
    })
}

/// The matroids placed on the right part of random graphs: all uniform
/// matroids, their duals, direct sums of two uniforms, and `random` column
/// matroids over a small prime field.
pub fn rado_matroid_pool(max_right: usize, random: usize, seed: u64) -> Result<Vec<Matroid>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 1..=max_right {
        let g = GroundSet::numbered(n)?;
        for k in 0..=n {
            let u = Matroid::uniform(k, g.clone())?;
            out.push(u.dual());
            out.push(u);
        }
        for split in 1..n {
            let left = GroundSet::new((1..=split).map(|i| i.to_string()))?;
            let right = GroundSet::new((split + 1..=n).map(|i| i.to_string()))?;
            for a in 0..=split {
                for b in 0..=(n - split) {
                    let s = Matroid::uniform(a, left.clone())?
                        .direct_sum(&Matroid::uniform(b, right.clone())?)?;
                    out.push(s);
                }
            }
        }
    }
    for _ in 0..random {
        let n = rng.gen_range(1..=max_right);
        let g = GroundSet::numbered(n)?;
        let r = rng.gen_range(0..=n);
        let m = random_representable(&mut rng, &g, r);
        out.push(if rng.gen_bool(0.5) { m.dual() } else { m });
    }
    Ok(out)
}

/// Rado's theorem: the rank criterion and the matching search agree on every
/// left subset. Exhaustive over all graphs and matroids with both parts of
/// size at most 3, then `graphs_per_matroid` random graphs with up to
/// `max_left` left vertices against [`rado_matroid_pool`].
pub fn rado_sweep(
    max_left: usize,
    max_right: usize,
    graphs_per_matroid: usize,
    seed: u64,
) -> Result<SweepReport> {
    let mut exhaustive = Vec::new();
    for r in 1..=max_right.min(3) {
        for m in all_matroids(r)? {
            for l in 1..=max_left.min(3) {
                exhaustive.push((l, m.clone()));
            }
        }
    }
    let small = run("rado (exhaustive)", &exhaustive, |(l, m)| {
        let r = m.len();
        let mut count = 0;
        for code in 0u64..(1u64 << (l * r)) {
            let nbhd: Vec<Subset> = (0..*l)
                .map(|i| Subset((code >> (i * r)) & ((1 << r) - 1)))
                .collect();
            count += 1;
            if !rado_agrees(&nbhd, m) {
                return (
                    count,
                    Some(format!(
                        "neighborhoods {nbhd:?}, M bases {:?}",
                        m.format_bases()
                    )),
                );
            }
        }
        (count, None)
    });
    if !small.passed() {
        return Ok(small);
    }

    let pool = rado_matroid_pool(max_right, 200, seed)?;
    let seeded: Vec<(u64, Matroid)> = pool
        .into_iter()
        .enumerate()
        .map(|(i, m)| (seed.wrapping_add(i as u64), m))
        .collect();
    let sampled = run("rado (sampled)", &seeded, |(s, m)| {
        let mut rng = ChaCha8Rng::seed_from_u64(*s);
        let r = m.len();
        for g in 0..graphs_per_matroid {
            let l = rng.gen_range(1..=max_left);
            let nbhd: Vec<Subset> = (0..l)
                .map(|_| Subset(rng.gen_range(0..(1u64 << r))))
                .collect();
            if !rado_agrees(&nbhd, m) {
                return (
                    g + 1,
                    Some(format!(
                        "neighborhoods {nbhd:?}, M bases {:?}",
                        m.format_bases()
                    )),
                );
            }
        }
        (graphs_per_matroid, None)
    });
    Ok(SweepReport {
        name: "rado".into(),
        instances: small.instances + sampled.instances,
        counterexample: sampled.counterexample,
    })
}

/// Every relative nested quotient is loopless of rank `rank(M) - degree`.
pub fn nested_quotient_sweep(max_elements: usize, opts: SweepOptions) -> Result<SweepReport> {
    let pool = matroid_pool(max_elements, true, opts)?;
    Ok(run("nested quotients", &pool, |m| {
        let mut count = 0;
        for c in 0..m.rank() {
            let Ok(basis) = monomial_basis(m, c) else {
                return (
                    count,
                    Some(format!("monomial basis failed for {:?}", m.format_bases())),
                );
            };
            for mono in basis {
                count += 1;
                match relative_nested_quotient(m, &mono) {
                    Ok(q) if q.is_loopless() && q.rank() + c == m.rank() => {}
                    _ => {
                        return (
                            count,
                            Some(format!(
                                "M bases {:?}, monomial {}",
                                m.format_bases(),
                                mono.format(m.ground())
                            )),
                        )
                    }
                }
            }
        }
        (count, None)
    }))
}

/// The hyperplane-presentation and dual-transversal recognition routes agree
/// on every matroid.
pub fn gammoid_routes_sweep(max_elements: usize, opts: SweepOptions) -> Result<SweepReport> {
    let pool = matroid_pool(max_elements, false, opts)?;
    Ok(run("strict gammoid routes", &pool, |m| {
        let a = strict_gammoid_via_hyperplanes(m, opts.force);
        let b = strict_gammoid_via_dual(m, opts.force);
        match (a, b) {
            (Ok(a), Ok(b)) if a.is_some() == b.is_some() => (1, None),
            _ => (1, Some(format!("M bases {:?}", m.format_bases()))),
        }
    }))
}

/// Every loopless `corado(U_{|E|,E}, A)` is recognized as a strict gammoid.
pub fn corado_free_sweep(max_elements: usize, opts: SweepOptions) -> Result<SweepReport> {
    check_size(max_elements, opts)?;
    let mut produced = BTreeMap::new();
    let mut systems = 0;
    for n in 0..=max_elements {
        let g = GroundSet::numbered(n)?;
        let free = Matroid::free(g.clone());
        // k = n leaves rank zero, which is never loopless on a nonempty ground
        for k in 0..n.max(1) {
            let batch: Vec<SetSystem> = set_systems(&g, k, false);
            systems += batch.len();
            let results: Vec<Result<Matroid>> =
                batch.par_iter().map(|a| corado(&free, a)).collect();
            for r in results {
                let p = r?;
                if p.is_loopless() {
                    produced.insert((p.len(), p.bases().to_vec()), p);
                }
            }
        }
    }
    let distinct: Vec<Matroid> = produced.into_values().collect();
    let mut report =
        run(
            "coRado of free matroids",
            &distinct,
            |m| match crate::bergman::is_strict_gammoid_with(m, opts.force) {
                Ok(Some(_)) => (1, None),
                _ => (1, Some(format!("M bases {:?}", m.format_bases()))),
            },
        );
    report.name = format!("{} ({systems} systems)", report.name);
    Ok(report)
}

/// Dual involution, De Morgan, commutativity and the truncation-intersection
/// correspondence on every matroid, plus associativity on every triple of
/// matroids with at most `triple_elements` elements.
pub fn identities_sweep(
    max_elements: usize,
    triple_elements: usize,
    opts: SweepOptions,
) -> Result<SweepReport> {
    let pool = matroid_pool(max_elements, false, opts)?;
    let single = run("identities", &pool, |m| {
        let fail = |what: &str| Some(format!("{what} fails for {:?}", m.format_bases()));
        if m.dual().dual() != *m {
            return (1, fail("dual involution"));
        }
        let mut count = 1;
        if m.is_loopless() {
            for a in crate::enumerate::nonempty_subsets(m.len()) {
                count += 1;
                let h = Matroid::hyperplane(m.ground().clone(), a).expect("nonempty support");
                let lhs = intersection(m, &h);
                let rhs = principal_truncation(m, m.closure(a));
                if lhs.is_err() || lhs != rhs {
                    return (count, fail("truncation-intersection correspondence"));
                }
            }
        }
        (count, None)
    });
    if !single.passed() {
        return Ok(single);
    }

    let pairs: Vec<(&Matroid, &Matroid)> = pool
        .iter()
        .flat_map(|m| {
            pool.iter()
                .filter(|n| n.ground() == m.ground())
                .map(move |n| (m, n))
        })
        .collect();
    let pair = run("identities (pairs)", &pairs, |&(m, n)| {
        let u = union(m, n).ok();
        let i = intersection(m, n).ok();
        let ok = u.is_some()
            && i.is_some()
            && u == union(n, m).ok()
            && i == intersection(n, m).ok()
            && i.as_ref() == union(&m.dual(), &n.dual()).ok().map(|x| x.dual()).as_ref()
            && u.as_ref()
                == intersection(&m.dual(), &n.dual())
                    .ok()
                    .map(|x| x.dual())
                    .as_ref();
        let msg = (!ok).then(|| format!("pair {:?} / {:?}", m.format_bases(), n.format_bases()));
        (1, msg)
    });
    if !pair.passed() {
        return Ok(pair);
    }

    let triples_pool = matroid_pool(triple_elements.min(max_elements), false, opts)?;
    let mut triples = Vec::new();
    for m in &triples_pool {
        for n in triples_pool.iter().filter(|n| n.ground() == m.ground()) {
            triples.push((m, n));
        }
    }
    let triple = run("identities (triples)", &triples, |&(m, n)| {
        let mut count = 0;
        for p in triples_pool.iter().filter(|p| p.ground() == m.ground()) {
            count += 1;
            let ul = union(&union(m, n).unwrap(), p).unwrap();
            let ur = union(m, &union(n, p).unwrap()).unwrap();
            let il = intersection(&intersection(m, n).unwrap(), p).unwrap();
            let ir = intersection(m, &intersection(n, p).unwrap()).unwrap();
            if ul != ur || il != ir {
                return (
                    count,
                    Some(format!(
                        "triple {:?} / {:?} / {:?}",
                        m.format_bases(),
                        n.format_bases(),
                        p.format_bases()
                    )),
                );
            }
        }
        (count, None)
    });
    Ok(SweepReport {
        name: "identities".into(),
        instances: single.instances + pair.instances + triple.instances,
        counterexample: triple.counterexample,
    })
}
