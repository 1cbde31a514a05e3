//! Generators for exhaustive and randomized sweeps: every matroid on a small
//! labeled ground set, set systems, and random representable matroids.

use std::collections::HashSet;

use rand::Rng;

use crate::error::Result;
use crate::ground::{GroundSet, Subset};
use crate::matroid::{k_subsets, Matroid};
use crate::rado::SetSystem;

/// Every matroid on the ground set `1..=n`, ordered by rank and then by
/// canonical basis family. Feasible up to `n = 6`.
pub fn all_matroids(n: usize) -> Result<Vec<Matroid>> {
    let ground = GroundSet::numbered(n)?;
    let mut out = Vec::new();
    for r in 0..=n {
        let pool: Vec<Subset> = k_subsets(n, r).collect();
        let mut found = Vec::new();
        for pick in 1u64..(1u64 << pool.len()) {
            let family = Subset(pick).iter().map(|i| pool[i]);
            if let Ok(m) = Matroid::from_bases(ground.clone(), family) {
                found.push(m);
            }
        }
        found.sort_by(|a, b| a.bases().cmp(b.bases()));
        out.extend(found);
    }
    Ok(out)
}

pub fn loopless_matroids(n: usize) -> Result<Vec<Matroid>> {
    Ok(all_matroids(n)?
        .into_iter()
        .filter(Matroid::is_loopless)
        .collect())
}

/// Canonical form under permutations of the ground set: the
/// lexicographically least sorted basis family over all relabelings.
pub fn canonical_form(m: &Matroid) -> Vec<Subset> {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Subset>> = None;
    loop {
        let mut fam: Vec<Subset> = m
            .bases()
            .iter()
            .map(|b| b.iter().map(|i| perm[i]).collect())
            .collect();
        fam.sort_unstable();
        if best.as_ref().is_none_or(|b| fam < *b) {
            best = Some(fam);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

/// Keeps the first representative of each isomorphism class.
pub fn up_to_isomorphism(ms: Vec<Matroid>) -> Vec<Matroid> {
    let mut seen = HashSet::new();
    ms.into_iter()
        .filter(|m| seen.insert((m.len(), canonical_form(m))))
        .collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Nonempty subsets of an `n`-element ground set in canonical order.
pub fn nonempty_subsets(n: usize) -> Vec<Subset> {
    let mut v: Vec<Subset> = Subset::full(n).subsets().skip(1).collect();
    v.sort_unstable();
    v
}

/// Non-decreasing index sequences of length `k` over `0..pool`, i.e.
/// multisets, in lexicographic order.
pub fn multiset_indices(pool: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, pool: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool {
            cur.push(i);
            go(i, pool, k, cur, out);
            cur.pop();
        }
    }
    go(0, pool, k, &mut cur, &mut out);
    out
}

/// All sequences of length `k` over `0..pool`, in lexicographic order.
pub fn sequence_indices(pool: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..pool).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

/// Set systems of `k` nonempty members on `ground`: all ordered sequences
/// when `ordered`, otherwise one per multiset.
pub fn set_systems(ground: &GroundSet, k: usize, ordered: bool) -> Vec<SetSystem> {
    let pool = nonempty_subsets(ground.len());
    let idx = if ordered {
        sequence_indices(pool.len(), k)
    } else {
        multiset_indices(pool.len(), k)
    };
    idx.into_iter()
        .map(|ix| {
            SetSystem::new(ground.clone(), ix.into_iter().map(|i| pool[i]).collect())
                .expect("members are nonempty subsets of the ground set")
        })
        .collect()
}

/// Column matroid of a random `rank x n` matrix over GF(7); zero columns
/// become loops. The rank of the result may fall below `rank`.
pub fn random_representable<R: Rng>(rng: &mut R, ground: &GroundSet, rank: usize) -> Matroid {
    const P: i64 = 7;
    let n = ground.len();
    let rank = rank.min(n);
    let cols: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.1) {
                vec![0; rank]
            } else {
                (0..rank).map(|_| rng.gen_range(0..P)).collect()
            }
        })
        .collect();
    let rank_of = |s: Subset| gf_rank(s.iter().map(|i| cols[i].clone()).collect(), P);
    let r = rank_of(ground.full());
    let bases: Vec<Subset> = k_subsets(n, r).filter(|&s| rank_of(s) == r).collect();
    Matroid::from_bases(ground.clone(), bases).expect("column matroids satisfy the exchange axiom")
}

/// Rank of a set of vectors over GF(p).
fn gf_rank(mut vecs: Vec<Vec<i64>>, p: i64) -> usize {
    let dim = vecs.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..dim {
        let Some(piv) = (rank..vecs.len()).find(|&i| vecs[i][col] % p != 0) else {
            continue;
        };
        vecs.swap(rank, piv);
        let inv = mod_pow(vecs[rank][col].rem_euclid(p), p - 2, p);
        for i in 0..vecs.len() {
            if i != rank && vecs[i][col] % p != 0 {
                let f = vecs[i][col] * inv % p;
                let pivot = vecs[rank].clone();
                for (x, y) in vecs[i].iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labeled_matroid_counts() {
        // number of matroids on n labeled elements: 1, 2, 5, 16, 68
        let counts: Vec<usize> = (0..=4).map(|n| all_matroids(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 68]);
    }

    #[test]
    fn unlabeled_matroid_counts() {
        // non-isomorphic matroids on n elements: 1, 2, 4, 8, 17
        let counts: Vec<usize> = (0..=4)
            .map(|n| up_to_isomorphism(all_matroids(n).unwrap()).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 17]);
    }

    #[test]
    fn multiset_and_sequence_counts() {
        assert_eq!(multiset_indices(4, 2).len(), 10);
        assert_eq!(sequence_indices(3, 2).len(), 9);
        assert_eq!(multiset_indices(5, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn random_representable_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = GroundSet::numbered(6).unwrap();
        for r in 0..=4 {
            let m = random_representable(&mut rng, &g, r);
            assert!(m.rank() <= r);
        }
    }

    #[test]
    fn gf_rank_basics() {
        assert_eq!(gf_rank(vec![vec![1, 0], vec![0, 1], vec![1, 1]], 7), 2);
        assert_eq!(gf_rank(vec![vec![2, 4], vec![1, 2]], 7), 1);
        assert_eq!(gf_rank(vec![], 7), 0);
    }
}
