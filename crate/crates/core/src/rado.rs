//! Set systems, bipartite presentations, Rado matroids and the coRado
//! construction of `M ∧ H_{A_1} ∧ ... ∧ H_{A_m}`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::matroid::{Matroid, RANK_TABLE_LIMIT};

/// An ordered multiset of nonempty subsets of a ground set.
///
/// Members are identified by position: `A1, A2, ...` are distinct labels
/// even when the underlying sets coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: GroundSet,
    members: Vec<Subset>,
}

impl SetSystem {
    pub fn new(ground: GroundSet, members: Vec<Subset>) -> Result<SetSystem> {
        for (i, &m) in members.iter().enumerate() {
            ground.check_subset(m)?;
            if m.is_empty() {
                return Err(Error::EmptyMember(i + 1));
            }
        }
        Ok(SetSystem { ground, members })
    }

    pub fn empty(ground: GroundSet) -> SetSystem {
        SetSystem {
            ground,
            members: Vec::new(),
        }
    }

    /// Builds a system from member label lists.
    pub fn from_labels<M, S>(ground: GroundSet, members: &[M]) -> Result<SetSystem>
    where
        M: AsRef<[S]>,
        S: AsRef<str>,
    {
        let members = members
            .iter()
            .map(|m| ground.subset(m.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, members)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Synthetic member labels `A1..Am`. If a ground label already has that
    /// form, the labels get a leading hat marker so they stay distinct.
    pub fn labels(&self) -> Vec<String> {
        let plain: Vec<String> = (1..=self.len()).map(|i| format!("A{i}")).collect();
        if plain.iter().any(|l| self.ground.index_of(l).is_some()) {
            plain.into_iter().map(|l| format!("^{l}")).collect()
        } else {
            plain
        }
    }

    /// The system with its members reordered: member `i` of the result is
    /// member `order[i]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> SetSystem {
        SetSystem {
            ground: self.ground.clone(),
            members: order.iter().map(|&i| self.members[i]).collect(),
        }
    }

    /// The first `k` members.
    pub fn prefix(&self, k: usize) -> SetSystem {
        SetSystem {
            ground: self.ground.clone(),
            members: self.members[..k].to_vec(),
        }
    }

    pub fn push(&mut self, member: Subset) -> Result<()> {
        self.ground.check_subset(member)?;
        if member.is_empty() {
            return Err(Error::EmptyMember(self.members.len() + 1));
        }
        self.members.push(member);
        Ok(())
    }

    pub fn union_of(&self, indices: Subset) -> Subset {
        indices
            .iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(self.members[i]))
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self
            .members
            .iter()
            .map(|&m| self.ground.format(m))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

/// A bipartite graph with labeled parts; edges are stored as one neighborhood
/// bitmask (over the right part) per left vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: GroundSet,
    right: GroundSet,
    adjacency: Vec<Subset>,
}

impl BipartiteGraph {
    pub fn new<L, R, S, T>(left: L, right: R, edges: &[(S, T)]) -> Result<BipartiteGraph>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        R: IntoIterator,
        R::Item: Into<String>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let left = GroundSet::derived(left.into_iter().map(Into::into).collect())?;
        let right = GroundSet::derived(right.into_iter().map(Into::into).collect())?;
        let mut adjacency = vec![Subset::EMPTY; left.len()];
        for (u, v) in edges {
            let i = left
                .index_of(u.as_ref())
                .ok_or_else(|| Error::UnknownLabel(u.as_ref().to_string()))?;
            let j = right
                .index_of(v.as_ref())
                .ok_or_else(|| Error::UnknownLabel(v.as_ref().to_string()))?;
            adjacency[i] = adjacency[i].with(j);
        }
        Self::from_adjacency(left, right, adjacency)
    }

    pub fn from_adjacency(
        left: GroundSet,
        right: GroundSet,
        adjacency: Vec<Subset>,
    ) -> Result<BipartiteGraph> {
        if let Some(l) = left.labels().iter().find(|l| right.index_of(l).is_some()) {
            return Err(Error::LabelCollision(l.clone()));
        }
        if adjacency.len() != left.len() {
            return Err(Error::InternalInconsistency(
                "adjacency does not cover the left part".into(),
            ));
        }
        for &n in &adjacency {
            right.check_subset(n)?;
        }
        Ok(BipartiteGraph {
            left,
            right,
            adjacency,
        })
    }

    pub fn left(&self) -> &GroundSet {
        &self.left
    }

    pub fn right(&self) -> &GroundSet {
        &self.right
    }

    pub fn adjacency(&self) -> &[Subset] {
        &self.adjacency
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.adjacency[l].contains(r)
    }

    /// Edges as `(left index, right index)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.iter().map(move |j| (i, j)))
            .collect()
    }

    pub fn neighborhood(&self, lefts: Subset) -> Subset {
        lefts
            .iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(self.adjacency[i]))
    }
}

/// The graph `G(𝒜)` with bipartition `(E, Ê ∪ 𝒜)`: each `e` is joined to its
/// hat copy `ê` and to every member containing it.
pub fn build_g(system: &SetSystem) -> Result<BipartiteGraph> {
    let ground = system.ground();
    let n = ground.len();
    let hats = ground.hat_copy();
    let mut right: Vec<String> = hats.labels().to_vec();
    right.extend(system.labels());
    let right = GroundSet::derived(right)?;
    let adjacency = (0..n)
        .map(|e| {
            system
                .members()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(e))
                .fold(Subset::singleton(e), |acc, (i, _)| acc.with(n + i))
        })
        .collect();
    BipartiteGraph::from_adjacency(ground.clone(), right, adjacency)
}

/// Rado's condition: `rk_M(∪_{j∈J} X_j) >= |J|` for every subfamily `J`.
pub fn rado_condition(sets: &[Subset], m: &Matroid) -> bool {
    Subset::full(sets.len()).subsets().all(|j| {
        let union = j.iter().fold(Subset::EMPTY, |acc, i| acc.union(sets[i]));
        m.rank_of(union) >= j.len()
    })
}

/// Searches for distinct representatives of `sets` forming an independent
/// set of `m`. Returns the representative of each set, in order.
pub fn find_independent_transversal(sets: &[Subset], m: &Matroid) -> Option<Vec<usize>> {
    fn go(
        i: usize,
        chosen: Subset,
        sets: &[Subset],
        m: &Matroid,
        picks: &mut Vec<usize>,
        dead: &mut HashSet<(usize, u64)>,
    ) -> bool {
        if i == sets.len() {
            return true;
        }
        if dead.contains(&(i, chosen.bits())) {
            return false;
        }
        for e in sets[i].difference(chosen).iter() {
            let next = chosen.with(e);
            if !m.is_independent(next) {
                continue;
            }
            picks.push(e);
            if go(i + 1, next, sets, m, picks, dead) {
                return true;
            }
            picks.pop();
        }
        dead.insert((i, chosen.bits()));
        false
    }

    let mut picks = Vec::with_capacity(sets.len());
    let mut dead = HashSet::new();
    go(0, Subset::EMPTY, sets, m, &mut picks, &mut dead).then_some(picks)
}

/// Decides by Rado's condition whether `system` has an `m`-independent
/// transversal, and if so returns one found by search.
pub fn has_independent_transversal(system: &SetSystem, m: &Matroid) -> Result<Option<Vec<usize>>> {
    if system.ground() != m.ground() {
        return Err(Error::GroundSetMismatch);
    }
    if !rado_condition(system.members(), m) {
        return Ok(None);
    }
    find_independent_transversal(system.members(), m)
        .map(Some)
        .ok_or_else(|| {
            Error::InternalInconsistency(
                "Rado's condition holds but no independent transversal was found".into(),
            )
        })
}

/// Maps each right vertex of `graph` to the matching element of `m`.
fn right_to_matroid(graph: &BipartiteGraph, m: &Matroid) -> Result<Vec<usize>> {
    if graph.right().len() != m.len() {
        return Err(Error::GroundSetMismatch);
    }
    graph
        .right()
        .labels()
        .iter()
        .map(|l| m.ground().index_of(l).ok_or(Error::GroundSetMismatch))
        .collect()
}

fn translate(s: Subset, map: &[usize]) -> Subset {
    s.iter().map(|j| map[j]).collect()
}

/// `R_{H,M}`: the matroid on the left part of `graph` whose independent sets
/// are the left subsets matchable onto an `m`-independent set.
///
/// Independence is decided by Rado's condition on neighborhoods; the
/// resulting family is revalidated as a matroid.
pub fn rado_matroid(graph: &BipartiteGraph, m: &Matroid) -> Result<Matroid> {
    let map = right_to_matroid(graph, m)?;
    let n = graph.left().len();
    if n > RANK_TABLE_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            cap: RANK_TABLE_LIMIT,
        });
    }
    let nbhd: Vec<Subset> = graph
        .adjacency()
        .iter()
        .map(|&a| translate(a, &map))
        .collect();
    let mut indep = vec![false; 1 << n];
    let mut best = 0;
    for s in 0..(1usize << n) {
        let set = Subset(s as u64);
        // subsets of an independent set are independent, so check those first
        if !set.iter().all(|e| indep[s & !(1 << e)]) {
            continue;
        }
        let union = set.iter().fold(Subset::EMPTY, |acc, i| acc.union(nbhd[i]));
        if m.rank_of(union) >= set.len() {
            indep[s] = true;
            best = best.max(set.len());
        }
    }
    let bases = (0..(1usize << n))
        .filter(|&s| indep[s] && s.count_ones() as usize == best)
        .map(|s| Subset(s as u64));
    Matroid::from_bases(graph.left().clone(), bases)
}

/// A matching of the left vertices in `lefts` onto an `m`-independent set,
/// as `(left, right)` index pairs, if one exists.
pub fn rado_matching(
    graph: &BipartiteGraph,
    m: &Matroid,
    lefts: Subset,
) -> Result<Option<Vec<(usize, usize)>>> {
    let map = right_to_matroid(graph, m)?;
    let mut back = vec![0; map.len()];
    for (j, &k) in map.iter().enumerate() {
        back[k] = j;
    }
    let order: Vec<usize> = lefts.iter().collect();
    let sets: Vec<Subset> = order
        .iter()
        .map(|&i| translate(graph.adjacency()[i], &map))
        .collect();
    Ok(find_independent_transversal(&sets, m).map(|reps| {
        order
            .into_iter()
            .zip(reps.into_iter().map(|k| back[k]))
            .collect()
    }))
}

/// The auxiliary matroid `N = M̂* ⊕ U_{m,𝒜}` on `Ê ∪ 𝒜`.
pub fn corado_target(m: &Matroid, system: &SetSystem) -> Result<Matroid> {
    let hat = m.dual().with_ground(m.ground().hat_copy());
    let labels = GroundSet::derived(system.labels())?;
    let uniform = Matroid::uniform(system.len(), labels)?;
    hat.direct_sum(&uniform)
}

/// The coRado matroid `(R_{G(𝒜), N})*`, equal to
/// `M ∧ H_{A_1} ∧ ... ∧ H_{A_m}`.
pub fn corado(m: &Matroid, system: &SetSystem) -> Result<Matroid> {
    if system.ground() != m.ground() {
        return Err(Error::GroundSetMismatch);
    }
    let target = corado_target(m, system)?;
    let graph = build_g(system)?;
    Ok(rado_matroid(&graph, &target)?.dual())
}

/// Transversal matroid on the member labels `A1..Am`: a subfamily is
/// independent iff it has a system of distinct representatives.
pub fn transversal_matroid(system: &SetSystem) -> Result<Matroid> {
    let left = GroundSet::derived(system.labels())?;
    let right = system.ground().clone();
    let free = Matroid::free(right.clone());
    let graph = BipartiteGraph::from_adjacency(left, right, system.members().to_vec())?;
    rado_matroid(&graph, &free)
}

/// Transversal matroid on the ground set: the partial transversals of the
/// system are the independent sets.
pub fn transversal_matroid_on_ground(system: &SetSystem) -> Result<Matroid> {
    let ground = system.ground().clone();
    let right = GroundSet::derived(system.labels())?;
    let adjacency = (0..ground.len())
        .map(|e| {
            system
                .members()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(e))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let free = Matroid::free(right.clone());
    let graph = BipartiteGraph::from_adjacency(ground, right, adjacency)?;
    rado_matroid(&graph, &free)
}
