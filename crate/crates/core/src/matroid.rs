//! Matroids over explicit, canonically ordered basis families.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};

/// A finite matroid given by its bases.
///
/// The basis family is deduplicated and sorted in canonical subset order, so
/// two matroids on the same ground set are equal exactly when they are equal
/// as Rust values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: GroundSet,
    bases: Vec<Subset>,
    rank: usize,
}

impl Matroid {
    /// Validates a basis family and builds the matroid.
    pub fn from_bases<I>(ground: GroundSet, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        if bases.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for &b in &bases {
            ground.check_subset(b)?;
        }
        let rank = bases[0].len();
        if let Some(b) = bases.iter().find(|b| b.len() != rank) {
            return Err(Error::UnequalCardinalities {
                expected: rank,
                found: b.len(),
            });
        }
        bases.sort_unstable();
        bases.dedup();
        if let Some((b1, b2, e)) = exchange_violation(ground.len(), &bases) {
            return Err(Error::ExchangeAxiomViolation {
                first: ground.labels_of(b1),
                second: ground.labels_of(b2),
                element: ground.label(e).to_string(),
            });
        }
        Ok(Matroid {
            ground,
            bases,
            rank,
        })
    }

    /// Builds a matroid from a family already known to satisfy the axioms.
    pub(crate) fn from_bases_unchecked(ground: GroundSet, mut bases: Vec<Subset>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        let rank = bases.first().map_or(0, |b| b.len());
        debug_assert!(!bases.is_empty());
        debug_assert!(bases.iter().all(|b| b.len() == rank));
        Matroid {
            ground,
            bases,
            rank,
        }
    }

    /// `U_{k,E}`: every `k`-subset is a basis.
    pub fn uniform(k: usize, ground: GroundSet) -> Result<Matroid> {
        let n = ground.len();
        if k > n {
            return Err(Error::RankOutOfRange { k, size: n });
        }
        let bases = k_subsets(n, k).collect();
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    /// The free matroid `U_{|E|,E}`.
    pub fn free(ground: GroundSet) -> Matroid {
        let full = ground.full();
        Matroid::from_bases_unchecked(ground, vec![full])
    }

    /// Cycle matroid of a multigraph. Edge labels form the ground set;
    /// parallel edges and graph loops are allowed.
    pub fn graphic<V, L>(vertices: &[V], edges: &[(V, V, L)]) -> Result<Matroid>
    where
        V: AsRef<str>,
        L: AsRef<str>,
    {
        let vindex = |v: &V| {
            vertices
                .iter()
                .position(|w| w.as_ref() == v.as_ref())
                .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))
        };
        let mut labels: Vec<String> = Vec::with_capacity(edges.len());
        let mut ends = Vec::with_capacity(edges.len());
        for (u, v, l) in edges {
            let l = l.as_ref();
            if labels.iter().any(|x| x == l) {
                return Err(Error::DuplicateEdgeLabel(l.to_string()));
            }
            labels.push(l.to_string());
            ends.push((vindex(u)?, vindex(v)?));
        }
        let ground = GroundSet::new(labels)?;

        let forest = |set: Subset| -> Option<usize> {
            let mut uf = UnionFind::new(vertices.len());
            let mut size = 0;
            for e in set.iter() {
                let (a, b) = ends[e];
                if !uf.union(a, b) {
                    return None;
                }
                size += 1;
            }
            Some(size)
        };

        let mut uf = UnionFind::new(vertices.len());
        let rank = ends.iter().filter(|&&(a, b)| uf.union(a, b)).count();
        let bases: Vec<Subset> = k_subsets(ground.len(), rank)
            .filter(|&s| forest(s).is_some())
            .collect();
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    /// `H_S`: the corank-1 matroid with bases `E - s` for `s` in `S`.
    pub fn hyperplane(ground: GroundSet, support: Subset) -> Result<Matroid> {
        ground.check_subset(support)?;
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        let full = ground.full();
        let bases = support.iter().map(|s| full.without(s)).collect();
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// Rank of `s`: the largest intersection of `s` with a basis.
    pub fn rank_of(&self, s: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.bases.iter().any(|&b| s.is_subset_of(b))
    }

    pub fn is_spanning(&self, s: Subset) -> bool {
        self.bases.iter().any(|&b| b.is_subset_of(s))
    }

    /// Precomputed ranks of every subset of the ground set.
    pub fn rank_table(&self) -> RankTable {
        RankTable::new(self)
    }

    pub fn independent_sets(&self) -> Vec<Subset> {
        self.rank_table().independent_sets()
    }

    pub fn circuits(&self) -> Vec<Subset> {
        self.rank_table().circuits()
    }

    pub fn spanning_sets(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self
            .ground
            .full()
            .subsets()
            .filter(|&s| self.is_spanning(s))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        (0..self.len())
            .filter(|&e| s.contains(e) || self.rank_of(s.with(e)) == r)
            .collect()
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    /// All flats in canonical order; `E` is always last.
    pub fn flats(&self) -> Vec<Subset> {
        self.rank_table().flats()
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Subset {
        let covered = self
            .bases
            .iter()
            .fold(Subset::EMPTY, |acc, &b| acc.union(b));
        self.ground.full().difference(covered)
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Subset {
        self.bases
            .iter()
            .fold(self.ground.full(), |acc, &b| acc.intersection(b))
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground.full();
        let bases = self.bases.iter().map(|&b| full.difference(b)).collect();
        Matroid::from_bases_unchecked(self.ground.clone(), bases)
    }

    /// `M ⊕ N` on the concatenation of the two ground sets.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        if let Some(l) = other
            .ground
            .labels()
            .iter()
            .find(|l| self.ground.index_of(l).is_some())
        {
            return Err(Error::GroundSetsOverlap(l.clone()));
        }
        let shift = self.len();
        let labels = self
            .ground
            .labels()
            .iter()
            .chain(other.ground.labels())
            .cloned()
            .collect();
        let ground = GroundSet::derived(labels)?;
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b in &self.bases {
            for &c in &other.bases {
                bases.push(Subset(b.bits() | (c.bits() << shift)));
            }
        }
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    /// Renames ground labels; positions (and hence bitmasks) are kept.
    pub fn relabel(&self, map: &HashMap<String, String>) -> Result<Matroid> {
        self.relabel_with(|l| map.get(l).cloned())
    }

    pub fn relabel_with<F>(&self, f: F) -> Result<Matroid>
    where
        F: Fn(&str) -> Option<String>,
    {
        let mut labels = Vec::with_capacity(self.len());
        for l in self.ground.labels() {
            let img = f(l).ok_or_else(|| Error::NotABijection(format!("`{l}` has no image")))?;
            if labels.contains(&img) {
                return Err(Error::NotABijection(format!("`{img}` is hit twice")));
            }
            labels.push(img);
        }
        let ground = GroundSet::derived(labels)?;
        Ok(Matroid {
            ground,
            bases: self.bases.clone(),
            rank: self.rank,
        })
    }

    /// Same bases, reinterpreted on an equal-sized ground set.
    pub(crate) fn with_ground(&self, ground: GroundSet) -> Matroid {
        debug_assert_eq!(ground.len(), self.len());
        Matroid {
            ground,
            bases: self.bases.clone(),
            rank: self.rank,
        }
    }

    /// Renders bases as label sets, e.g. `{1,7}`.
    pub fn format_bases(&self) -> Vec<String> {
        self.bases.iter().map(|&b| self.ground.format(b)).collect()
    }
}

/// Finds `(B1, B2, e)` with `e ∈ B1 - B2` such that no `f ∈ B2 - B1`
/// makes `B1 - e + f` a basis. `bases` must be sorted and deduplicated.
fn exchange_violation(n: usize, bases: &[Subset]) -> Option<(Subset, Subset, usize)> {
    let lookup = BasisLookup::new(n, bases);
    for &b1 in bases {
        for &b2 in bases {
            let only1 = b1.difference(b2);
            if only1.is_empty() {
                continue;
            }
            let only2 = b2.difference(b1);
            for e in only1.iter() {
                let dropped = b1.without(e);
                if !only2.iter().any(|f| lookup.contains(dropped.with(f))) {
                    return Some((b1, b2, e));
                }
            }
        }
    }
    None
}

enum BasisLookup<'a> {
    Dense(Vec<bool>),
    Sorted(&'a [Subset]),
}

impl<'a> BasisLookup<'a> {
    fn new(n: usize, bases: &'a [Subset]) -> Self {
        if n <= 20 {
            let mut table = vec![false; 1 << n];
            for b in bases {
                table[b.bits() as usize] = true;
            }
            BasisLookup::Dense(table)
        } else {
            BasisLookup::Sorted(bases)
        }
    }

    fn contains(&self, s: Subset) -> bool {
        match self {
            BasisLookup::Dense(t) => t[s.bits() as usize],
            BasisLookup::Sorted(b) => b.binary_search(&s).is_ok(),
        }
    }
}

/// All `k`-subsets of `{0..n}` in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    let limit: u128 = 1u128 << n;
    let mut cur: Option<u128> = if k > n { None } else { Some((1u128 << k) - 1) };
    std::iter::from_fn(move || {
        let c = cur?;
        if c >= limit {
            cur = None;
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            Some((((ripple ^ c) >> 2) / low) | ripple)
        };
        Some(Subset(c as u64))
    })
}

/// Ranks of all `2^n` subsets, for operations that need many rank queries.
#[derive(Clone, Debug)]
pub struct RankTable {
    n: usize,
    ranks: Vec<u8>,
}

/// Largest ground set for which a dense rank table is built.
pub const RANK_TABLE_LIMIT: usize = 24;

impl RankTable {
    pub fn new(m: &Matroid) -> RankTable {
        let n = m.len();
        assert!(
            n <= RANK_TABLE_LIMIT,
            "rank table requested for {n} elements"
        );
        let size = 1usize << n;
        // independence by downward closure from the bases
        let mut indep = vec![false; size];
        for b in m.bases() {
            indep[b.bits() as usize] = true;
        }
        for s in (0..size).rev() {
            if indep[s] {
                continue;
            }
            indep[s] = (0..n).any(|e| s >> e & 1 == 0 && indep[s | 1 << e]);
        }
        let mut ranks = vec![0u8; size];
        for s in 1..size {
            ranks[s] = if indep[s] {
                s.count_ones() as u8
            } else {
                (0..n)
                    .filter(|e| s >> e & 1 == 1)
                    .map(|e| ranks[s & !(1 << e)])
                    .max()
                    .unwrap_or(0)
            };
        }
        RankTable { n, ranks }
    }

    /// Table from an explicit independence predicate that is closed under
    /// taking subsets.
    pub(crate) fn from_independence(n: usize, indep: &[bool]) -> RankTable {
        let size = 1usize << n;
        let mut ranks = vec![0u8; size];
        for s in 1..size {
            ranks[s] = if indep[s] {
                s.count_ones() as u8
            } else {
                (0..n)
                    .filter(|e| s >> e & 1 == 1)
                    .map(|e| ranks[s & !(1 << e)])
                    .max()
                    .unwrap_or(0)
            };
        }
        RankTable { n, ranks }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self, s: Subset) -> usize {
        self.ranks[s.bits() as usize] as usize
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }

    fn all(&self) -> impl Iterator<Item = Subset> + '_ {
        (0..self.ranks.len() as u64).map(Subset)
    }

    pub fn independent_sets(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.all().filter(|&s| self.is_independent(s)).collect();
        v.sort_unstable();
        v
    }

    pub fn circuits(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self
            .all()
            .filter(|&s| {
                !self.is_independent(s) && s.iter().all(|e| self.is_independent(s.without(e)))
            })
            .collect();
        v.sort_unstable();
        v
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank(s);
        (0..self.n)
            .filter(|&e| s.contains(e) || self.rank(s.with(e)) == r)
            .collect()
    }

    pub fn flats(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.all().filter(|&s| self.closure(s) == s).collect();
        v.sort_unstable();
        v
    }

    /// Bases of the matroid this table describes.
    pub fn bases(&self) -> Vec<Subset> {
        let r = self.rank(Subset::full(self.n));
        k_subsets(self.n, r)
            .filter(|&s| self.is_independent(s))
            .collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> GroundSet {
        GroundSet::numbered(n).unwrap()
    }

    fn s(ground: &GroundSet, labels: &[&str]) -> Subset {
        ground.subset(labels).unwrap()
    }

    #[test]
    fn from_bases_examples() {
        let e = g(2);
        let m = Matroid::from_bases(e.clone(), [s(&e, &["1"]), s(&e, &["2"])]).unwrap();
        assert_eq!(m, Matroid::uniform(1, e).unwrap());

        let e = g(3);
        let m = Matroid::from_bases(e.clone(), [s(&e, &["1", "2"]), s(&e, &["1", "3"])]).unwrap();
        assert_eq!(m.rank(), 2);

        assert_eq!(
            Matroid::from_bases(e.clone(), [s(&e, &["1", "2"]), s(&e, &["3"])]),
            Err(Error::UnequalCardinalities {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            Matroid::from_bases(e.clone(), Vec::new()),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn exchange_violation_reports_witness() {
        // {1,2} and {3,4}: dropping 1 from {1,2} needs {2,3} or {2,4}
        let e = g(4);
        let err =
            Matroid::from_bases(e.clone(), [s(&e, &["1", "2"]), s(&e, &["3", "4"])]).unwrap_err();
        match err {
            Error::ExchangeAxiomViolation { first, second, .. } => {
                assert_ne!(first, second);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn uniform_examples() {
        let m = Matroid::uniform(1, GroundSet::new(["a", "b", "c"]).unwrap()).unwrap();
        assert_eq!(m.bases().len(), 3);
        let z = Matroid::uniform(0, GroundSet::new(["a", "b"]).unwrap()).unwrap();
        assert_eq!(z.bases(), &[Subset::EMPTY]);
        assert!(matches!(
            Matroid::uniform(3, g(2)),
            Err(Error::RankOutOfRange { k: 3, size: 2 })
        ));
        let a = Matroid::uniform(2, GroundSet::new(["A1", "A2"]).unwrap()).unwrap();
        assert_eq!(a.bases(), &[Subset::full(2)]);
    }

    #[test]
    fn graphic_small_cases() {
        let tri = Matroid::graphic(
            &["u", "v", "w"],
            &[("u", "v", "1"), ("v", "w", "2"), ("w", "u", "3")],
        )
        .unwrap();
        assert_eq!(tri, Matroid::uniform(2, g(3)).unwrap());

        let lp = Matroid::graphic(&["u"], &[("u", "u", "l")]).unwrap();
        assert_eq!(lp.rank(), 0);
        assert_eq!(lp.loops(), Subset::singleton(0));

        assert!(matches!(
            Matroid::graphic(&["u", "v"], &[("u", "v", "1"), ("v", "u", "1")]),
            Err(Error::DuplicateEdgeLabel(_))
        ));
        assert!(matches!(
            Matroid::graphic(&["u"], &[("u", "x", "1")]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn hyperplane_examples() {
        let e = g(3);
        let h = Matroid::hyperplane(e.clone(), s(&e, &["1", "2"])).unwrap();
        let expect =
            Matroid::from_bases(e.clone(), [s(&e, &["2", "3"]), s(&e, &["1", "3"])]).unwrap();
        assert_eq!(h, expect);
        assert_eq!(h.coloops(), s(&e, &["3"]));

        let full = Matroid::hyperplane(e.clone(), e.full()).unwrap();
        assert_eq!(full, Matroid::uniform(2, e.clone()).unwrap());
        assert_eq!(
            Matroid::hyperplane(e, Subset::EMPTY),
            Err(Error::EmptySupport)
        );
    }

    #[test]
    fn u12_sets() {
        let m = Matroid::uniform(1, g(2)).unwrap();
        assert_eq!(
            m.independent_sets(),
            vec![Subset::EMPTY, Subset::singleton(0), Subset::singleton(1)]
        );
        assert_eq!(m.circuits(), vec![Subset::full(2)]);
        assert_eq!(m.spanning_sets().len(), 3);
    }

    #[test]
    fn flats_of_u23() {
        let m = Matroid::uniform(2, g(3)).unwrap();
        let f = m.flats();
        assert_eq!(f.len(), 5);
        assert_eq!(f[0], Subset::EMPTY);
        assert_eq!(*f.last().unwrap(), Subset::full(3));
        assert!(f[1..4].iter().all(|x| x.len() == 1));
    }

    #[test]
    fn closure_of_empty_is_loops() {
        let e = g(3);
        let m = Matroid::from_bases(e.clone(), [s(&e, &["1"]), s(&e, &["2"])]).unwrap();
        assert_eq!(m.closure(Subset::EMPTY), s(&e, &["3"]));
        assert_eq!(m.loops(), s(&e, &["3"]));
    }

    #[test]
    fn dual_and_direct_sum() {
        let m = Matroid::uniform(1, g(3)).unwrap();
        assert_eq!(m.dual(), Matroid::uniform(2, g(3)).unwrap());
        assert_eq!(m.dual().dual(), m);

        let a = Matroid::uniform(1, g(2)).unwrap();
        let b = a.relabel_with(|l| Some(format!("{l}'"))).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(sum.rank(), 2);
        assert_eq!(sum.bases().len(), 4);
        assert!(matches!(a.direct_sum(&a), Err(Error::GroundSetsOverlap(_))));

        let empty = Matroid::free(GroundSet::new(Vec::<String>::new()).unwrap());
        assert_eq!(a.direct_sum(&empty).unwrap(), a);
    }

    #[test]
    fn relabel_checks_bijection() {
        let a = Matroid::uniform(1, g(2)).unwrap();
        let mut map = HashMap::new();
        map.insert("1".to_string(), "x".to_string());
        assert!(matches!(a.relabel(&map), Err(Error::NotABijection(_))));
        map.insert("2".to_string(), "x".to_string());
        assert!(matches!(a.relabel(&map), Err(Error::NotABijection(_))));
        map.insert("2".to_string(), "y".to_string());
        let r = a.relabel(&map).unwrap();
        assert_eq!(r.ground().labels(), &["x", "y"]);
        let id = a.relabel_with(|l| Some(l.to_string())).unwrap();
        assert_eq!(id, a);
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(4, 0).collect::<Vec<_>>(), vec![Subset::EMPTY]);
        assert_eq!(k_subsets(3, 3).count(), 1);
        assert_eq!(k_subsets(0, 0).count(), 1);
        assert_eq!(k_subsets(2, 3).count(), 0);
        assert_eq!(k_subsets(64, 1).count(), 64);
    }

    #[test]
    fn loops_and_coloops() {
        let e = g(4);
        let h = Matroid::hyperplane(e.clone(), s(&e, &["1", "2"])).unwrap();
        assert_eq!(h.coloops(), s(&e, &["3", "4"]));
        assert_eq!(h.loops(), Subset::EMPTY);
        assert_eq!(h.dual().loops(), h.coloops());
        assert!(Matroid::uniform(2, e).unwrap().is_loopless());
    }
}
