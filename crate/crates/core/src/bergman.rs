//! Bergman fans, stable intersection with tropical hyperplanes, and
//! recognition of transversal matroids and strict gammoids.

use std::collections::{BTreeMap, BTreeSet};

use crate::enumerate::nonempty_subsets;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::matroid::{Matroid, RankTable};
use crate::rado::{corado, SetSystem};

/// Largest ground set the presentation searches accept without `force`.
pub const SEARCH_LIMIT: usize = 8;

/// A strictly increasing chain of proper nonempty flats.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag(Vec<Subset>);

impl Flag {
    pub fn flats(&self) -> &[Subset] {
        &self.0
    }

    /// Cone dimension.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The Bergman fan of a loopless matroid, stored combinatorially as its set
/// of cones, each cone being a flag of flats spanned by the rays `e_F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergmanFan {
    ground: GroundSet,
    cones: BTreeSet<Flag>,
}

/// Normalizes a ray in `R^E / <e_E>`: shift so the minimum entry is zero,
/// then divide by the gcd of the entries.
pub fn normalize_ray(v: &[i64]) -> Vec<i64> {
    let min = v.iter().copied().min().unwrap_or(0);
    let shifted: Vec<i64> = v.iter().map(|x| x - min).collect();
    let g = shifted.iter().fold(0, |acc, &x| gcd(acc, x));
    if g <= 1 {
        shifted
    } else {
        shifted.into_iter().map(|x| x / g).collect()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl BergmanFan {
    /// Builds a fan from cones given by raw ray generators. Each ray must
    /// normalize to the indicator vector of a proper nonempty subset, and the
    /// rays of a cone must form a chain. Subchains are added.
    pub fn from_ray_cones(ground: GroundSet, cones: &[Vec<Vec<i64>>]) -> Result<BergmanFan> {
        let n = ground.len();
        let mut out = BTreeSet::new();
        for cone in cones {
            let mut chain = Vec::with_capacity(cone.len());
            for ray in cone {
                if ray.len() != n {
                    return Err(Error::InvalidRay(format!("{ray:?} has wrong length")));
                }
                let norm = normalize_ray(ray);
                if norm.iter().any(|&x| x > 1) || norm.iter().all(|&x| x == 0) {
                    return Err(Error::InvalidRay(format!(
                        "{ray:?} is not an indicator ray"
                    )));
                }
                chain.push(
                    norm.iter()
                        .enumerate()
                        .filter(|(_, &x)| x == 1)
                        .map(|(i, _)| i)
                        .collect::<Subset>(),
                );
            }
            chain.sort();
            chain.dedup();
            if chain.windows(2).any(|w| !w[0].is_subset_of(w[1])) {
                return Err(Error::InvalidRay("cone rays do not form a chain".into()));
            }
            for sub in Subset::full(chain.len()).subsets() {
                out.insert(Flag(sub.iter().map(|i| chain[i]).collect()));
            }
        }
        Ok(BergmanFan { ground, cones: out })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// All cones, including the apex (empty flag).
    pub fn cones(&self) -> &BTreeSet<Flag> {
        &self.cones
    }

    /// Cones not contained in any other cone.
    pub fn maximal_cones(&self) -> Vec<&Flag> {
        let rays = self.ray_flats();
        self.cones
            .iter()
            .filter(|c| {
                !rays.iter().any(|r| {
                    if c.0.contains(r) {
                        return false;
                    }
                    let mut bigger = c.0.clone();
                    bigger.push(*r);
                    bigger.sort();
                    self.cones.contains(&Flag(bigger))
                })
            })
            .collect()
    }

    /// Flats spanning the one-dimensional cones.
    pub fn ray_flats(&self) -> Vec<Subset> {
        self.cones
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c.0[0])
            .collect()
    }

    /// Normalized ray vector of every one-dimensional cone.
    pub fn rays(&self) -> BTreeMap<Subset, Vec<i64>> {
        let n = self.ground.len();
        self.ray_flats()
            .into_iter()
            .map(|f| {
                let v: Vec<i64> = (0..n).map(|i| i64::from(f.contains(i))).collect();
                (f, normalize_ray(&v))
            })
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.cones.iter().map(Flag::len).max().unwrap_or(0)
    }
}

/// `Σ_M`: cones over all flags of proper nonempty flats of a loopless `M`.
pub fn bergman_fan(m: &Matroid) -> Result<BergmanFan> {
    if !m.is_loopless() {
        return Err(Error::LoopyMatroid);
    }
    let full = m.ground().full();
    let proper: Vec<Subset> = m
        .flats()
        .into_iter()
        .filter(|&f| !f.is_empty() && f != full)
        .collect();
    let mut cones = BTreeSet::new();
    let mut chain = Vec::new();
    extend_chains(&proper, &mut chain, &mut cones);
    Ok(BergmanFan {
        ground: m.ground().clone(),
        cones,
    })
}

fn extend_chains(flats: &[Subset], chain: &mut Vec<Subset>, out: &mut BTreeSet<Flag>) {
    out.insert(Flag(chain.clone()));
    for &f in flats {
        let above = chain
            .last()
            .is_none_or(|&top| top != f && top.is_subset_of(f));
        if above {
            chain.push(f);
            extend_chains(flats, chain, out);
            chain.pop();
        }
    }
}

pub fn fans_equal(a: &BergmanFan, b: &BergmanFan) -> Result<bool> {
    if a.ground != b.ground {
        return Err(Error::GroundSetMismatch);
    }
    Ok(a.cones == b.cones)
}

/// Outcome of intersecting a Bergman fan with tropical hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StableIntersection {
    Fan(BergmanFan),
    /// The intersection matroid acquired a loop; there is no Bergman fan.
    Vanished,
}

/// Stable intersection of `Σ_M` with the hyperplanes `Σ_{H_A}` for the
/// members `A` of `system`, computed as the Bergman fan of the coRado
/// matroid.
pub fn stable_intersection_with_hyperplanes(
    m: &Matroid,
    system: &SetSystem,
) -> Result<StableIntersection> {
    if !m.is_loopless() {
        return Err(Error::LoopyMatroid);
    }
    let p = corado(m, system)?;
    if p.is_loopless() {
        Ok(StableIntersection::Fan(bergman_fan(&p)?))
    } else {
        Ok(StableIntersection::Vanished)
    }
}

fn guard(m: &Matroid, force: bool) -> Result<()> {
    if !force && m.len() > SEARCH_LIMIT {
        return Err(Error::SearchTooLarge {
            size: m.len(),
            limit: SEARCH_LIMIT,
        });
    }
    Ok(())
}

/// Independence table of the transversal matroid on `E` presented by
/// `sets`, via Hall's condition.
fn partial_transversals(n: usize, sets: &[Subset]) -> RankTable {
    let mut indep = vec![false; 1 << n];
    for s in 0..(1usize << n) {
        let set = Subset(s as u64);
        if !set.iter().all(|e| indep[s & !(1 << e)]) {
            continue;
        }
        let hit = sets.iter().filter(|x| x.intersects(set)).count();
        // Hall on every subset: subsets already passed, so check `set` itself
        indep[s] = hit >= set.len();
    }
    RankTable::from_independence(n, &indep)
}

/// Search over canonical multisets of nonempty subsets, growing a prefix
/// while `fits` accepts it. `fits(prefix)` must reject every prefix that
/// cannot be completed to a presentation.
fn presentation_search<F>(n: usize, size: usize, mut fits: F) -> Option<Vec<Subset>>
where
    F: FnMut(&[Subset]) -> bool,
{
    let pool = nonempty_subsets(n);
    let mut prefix = Vec::with_capacity(size);
    fn go<F: FnMut(&[Subset]) -> bool>(
        start: usize,
        size: usize,
        pool: &[Subset],
        prefix: &mut Vec<Subset>,
        fits: &mut F,
    ) -> bool {
        if !fits(prefix) {
            return false;
        }
        if prefix.len() == size {
            return true;
        }
        for i in start..pool.len() {
            prefix.push(pool[i]);
            if go(i, size, pool, prefix, fits) {
                return true;
            }
            prefix.pop();
        }
        false
    }
    go(0, size, &pool, &mut prefix, &mut fits).then_some(prefix)
}

/// Checks whether a partial presentation `prefix` (of `k` members, with
/// transversal matroid independence given by `table`) can still grow into a
/// presentation of `target` by `target.rank()` members: every set it makes
/// independent must be independent in `target`, and every basis of `target`
/// must already have rank `k`, since each further member adds at most one.
fn prefix_fits(table: &RankTable, target: &Matroid, target_table: &RankTable, k: usize) -> bool {
    let n = target.len();
    (0..(1u64 << n))
        .map(Subset)
        .all(|s| !table.is_independent(s) || target_table.is_independent(s))
        && target.bases().iter().all(|&b| table.rank(b) >= k)
}

/// Searches for a presentation of `m` as a transversal matroid on its ground
/// set by exactly `rank(m)` sets.
pub fn is_transversal(m: &Matroid) -> Result<Option<SetSystem>> {
    is_transversal_with(m, false)
}

pub fn is_transversal_with(m: &Matroid, force: bool) -> Result<Option<SetSystem>> {
    guard(m, force)?;
    let n = m.len();
    let target_table = m.rank_table();
    let found = presentation_search(n, m.rank(), |prefix| {
        let table = partial_transversals(n, prefix);
        prefix_fits(&table, m, &target_table, prefix.len())
    });
    found
        .map(|members| SetSystem::new(m.ground().clone(), members))
        .transpose()
}

/// Strict-gammoid test through hyperplane presentations: a system `A` of
/// `|E| - rank(m)` sets with `corado(U_{|E|,E}, A) = m`.
pub fn strict_gammoid_via_hyperplanes(m: &Matroid, force: bool) -> Result<Option<SetSystem>> {
    guard(m, force)?;
    let n = m.len();
    let free = Matroid::free(m.ground().clone());
    let dual = m.dual();
    let dual_table = dual.rank_table();
    let mut failure = None;
    let found = presentation_search(n, n - m.rank(), |prefix| {
        let system = SetSystem::new(m.ground().clone(), prefix.to_vec())
            .expect("pool holds nonempty subsets");
        // the Rado side of the construction grows monotonically with the system
        match corado(&free, &system) {
            Ok(p) => prefix_fits(&p.dual().rank_table(), &dual, &dual_table, prefix.len()),
            Err(e) => {
                failure.get_or_insert(e);
                false
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let Some(members) = found else {
        return Ok(None);
    };
    let system = SetSystem::new(m.ground().clone(), members)?;
    if corado(&free, &system)? != *m {
        return Err(Error::InternalInconsistency(
            "hyperplane presentation search accepted a wrong system".into(),
        ));
    }
    Ok(Some(system))
}

/// Strict-gammoid test through duality: `m*` is transversal.
pub fn strict_gammoid_via_dual(m: &Matroid, force: bool) -> Result<Option<SetSystem>> {
    is_transversal_with(&m.dual(), force)
}

/// Whether the loopless matroid `m` is a strict gammoid, i.e. its Bergman fan
/// is a stable intersection of tropical hyperplanes centered at the origin.
/// Both recognition routes run and must agree; the witness is the hyperplane
/// system.
pub fn is_strict_gammoid(m: &Matroid) -> Result<Option<SetSystem>> {
    is_strict_gammoid_with(m, false)
}

pub fn is_strict_gammoid_with(m: &Matroid, force: bool) -> Result<Option<SetSystem>> {
    if !m.is_loopless() {
        return Err(Error::LoopyMatroid);
    }
    let via_hyperplanes = strict_gammoid_via_hyperplanes(m, force)?;
    let via_dual = strict_gammoid_via_dual(m, force)?;
    if via_hyperplanes.is_some() != via_dual.is_some() {
        return Err(Error::InternalInconsistency(
            "strict gammoid recognition routes disagree".into(),
        ));
    }
    Ok(via_hyperplanes)
}
