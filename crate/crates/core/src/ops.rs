//! Matroid union, intersection and principal truncation.

use crate::error::{Error, Result};
use crate::ground::Subset;
use crate::matroid::{Matroid, RankTable};

fn same_ground(m: &Matroid, n: &Matroid) -> Result<()> {
    if m.ground() == n.ground() {
        Ok(())
    } else {
        Err(Error::GroundSetMismatch)
    }
}

/// `M ∨ N`, whose independent sets are the unions `I ∪ J`.
///
/// A set `S` is independent in the union iff `|T| <= rk_M(T) + rk_N(T)` for
/// every `T ⊆ S`, which is the rank formula specialised to independence.
pub fn union(m: &Matroid, n: &Matroid) -> Result<Matroid> {
    same_ground(m, n)?;
    let size = m.len();
    let (rm, rn) = (m.rank_table(), n.rank_table());
    let mut indep = vec![false; 1 << size];
    for s in 0..(1usize << size) {
        let set = Subset(s as u64);
        indep[s] =
            set.len() <= rm.rank(set) + rn.rank(set) && set.iter().all(|e| indep[s & !(1 << e)]);
    }
    let table = RankTable::from_independence(size, &indep);
    Ok(Matroid::from_bases_unchecked(
        m.ground().clone(),
        table.bases(),
    ))
}

/// `M ∧ N = (M* ∨ N*)*`.
pub fn intersection(m: &Matroid, n: &Matroid) -> Result<Matroid> {
    Ok(union(&m.dual(), &n.dual())?.dual())
}

/// Left fold of [`intersection`] over `rest`, starting from `first`.
pub fn intersect_all<'a, I>(first: &Matroid, rest: I) -> Result<Matroid>
where
    I: IntoIterator<Item = &'a Matroid>,
{
    rest.into_iter()
        .try_fold(first.clone(), |acc, n| intersection(&acc, n))
}

/// `T_F(M)`: bases `B - f` for every basis `B` and every `f ∈ B ∩ F`.
pub fn principal_truncation(m: &Matroid, flat: Subset) -> Result<Matroid> {
    m.ground().check_subset(flat)?;
    if flat.is_empty() {
        return Err(Error::EmptyFlat);
    }
    if m.rank_of(flat) == 0 {
        return Err(Error::RankZeroFlat);
    }
    let bases = m
        .bases()
        .iter()
        .flat_map(|&b| b.intersection(flat).iter().map(move |f| b.without(f)))
        .collect();
    Ok(Matroid::from_bases_unchecked(m.ground().clone(), bases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;

    fn g(n: usize) -> GroundSet {
        GroundSet::numbered(n).unwrap()
    }

    #[test]
    fn union_of_two_u12_is_free() {
        let u = Matroid::uniform(1, g(2)).unwrap();
        assert_eq!(union(&u, &u).unwrap(), Matroid::free(g(2)));
    }

    #[test]
    fn rank_zero_is_union_identity() {
        let m = Matroid::uniform(2, g(4)).unwrap();
        let z = Matroid::uniform(0, g(4)).unwrap();
        assert_eq!(union(&m, &z).unwrap(), m);
    }

    #[test]
    fn free_is_intersection_identity() {
        let m = Matroid::uniform(2, g(4)).unwrap();
        assert_eq!(intersection(&m, &Matroid::free(g(4))).unwrap(), m);
    }

    #[test]
    fn u23_meet_full_hyperplane() {
        let e = g(3);
        let h = Matroid::hyperplane(e.clone(), e.full()).unwrap();
        let u23 = Matroid::uniform(2, e.clone()).unwrap();
        assert_eq!(
            intersection(&u23, &h).unwrap(),
            Matroid::uniform(1, e).unwrap()
        );
    }

    #[test]
    fn mismatched_grounds_rejected() {
        let a = Matroid::uniform(1, g(2)).unwrap();
        let b = Matroid::uniform(1, GroundSet::new(["x", "y"]).unwrap()).unwrap();
        assert_eq!(union(&a, &b), Err(Error::GroundSetMismatch));
        assert_eq!(intersection(&a, &b), Err(Error::GroundSetMismatch));
    }

    #[test]
    fn truncation_examples() {
        let e = g(3);
        let u23 = Matroid::uniform(2, e.clone()).unwrap();
        // only the bases through 1 survive, so 1 becomes a loop
        let t = principal_truncation(&u23, Subset::singleton(0)).unwrap();
        assert_eq!(t.format_bases(), vec!["{2}", "{3}"]);
        assert_eq!(t.loops(), Subset::singleton(0));
        let m = Matroid::from_bases(
            e.clone(),
            [e.subset(["1", "2"]).unwrap(), e.subset(["1", "3"]).unwrap()],
        )
        .unwrap();
        let t = principal_truncation(&m, e.full()).unwrap();
        assert_eq!(t, Matroid::uniform(1, e.clone()).unwrap());
        assert_eq!(
            principal_truncation(&m, Subset::EMPTY),
            Err(Error::EmptyFlat)
        );
    }

    #[test]
    fn truncation_at_loops_rejected() {
        let e = g(2);
        let m = Matroid::from_bases(e.clone(), [Subset::singleton(0)]).unwrap();
        assert_eq!(
            principal_truncation(&m, Subset::singleton(1)),
            Err(Error::RankZeroFlat)
        );
    }
}
