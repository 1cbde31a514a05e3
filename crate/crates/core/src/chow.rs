//! Products of simplicial generators `h_A` as Bergman classes, the monomial
//! basis of the Chow ring in simplicial generators, relative nested
//! quotients, and the Dragon-Hall-Rado condition.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::matroid::Matroid;
use crate::ops::intersect_all;
use crate::rado::{corado, find_independent_transversal, rado_condition, SetSystem};

/// A class represented by a loopless matroid, or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BergmanClass {
    Zero,
    Matroid(Matroid),
}

impl BergmanClass {
    pub fn is_zero(&self) -> bool {
        matches!(self, BergmanClass::Zero)
    }

    pub fn matroid(&self) -> Option<&Matroid> {
        match self {
            BergmanClass::Zero => None,
            BergmanClass::Matroid(m) => Some(m),
        }
    }
}

/// The one place deciding when a product vanishes: the coRado matroid must be
/// loopless and have dropped rank once per factor.
fn class_of(product: Matroid, source_rank: usize, factors: usize) -> BergmanClass {
    if product.is_loopless() && factors <= source_rank && product.rank() == source_rank - factors {
        BergmanClass::Matroid(product)
    } else {
        BergmanClass::Zero
    }
}

/// `h_{A_1} ⋯ h_{A_m}` in the Chow ring of the loopless matroid `m`.
pub fn product_class(m: &Matroid, system: &SetSystem) -> Result<BergmanClass> {
    if !m.is_loopless() {
        return Err(Error::LoopyInput);
    }
    let p = corado(m, system)?;
    Ok(class_of(p, m.rank(), system.len()))
}

/// `h_{F_1}^{a_1} ⋯ h_{F_k}^{a_k}` over a chain of nonempty flats.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialMonomial {
    flats: Vec<Subset>,
    exponents: Vec<usize>,
}

impl SimplicialMonomial {
    /// The empty monomial, `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// Validates a monomial against the basis conditions for `m`:
    /// `∅ ⊊ F_1 ⊊ ⋯ ⊊ F_k` flats and `1 <= a_i < rk(F_i) - rk(F_{i-1})`.
    pub fn new(m: &Matroid, flats: Vec<Subset>, exponents: Vec<usize>) -> Result<Self> {
        if flats.len() != exponents.len() {
            return Err(Error::InvalidMonomial(
                "flats and exponents differ in length".into(),
            ));
        }
        let mut prev = Subset::EMPTY;
        let mut prev_rank = 0;
        for (&f, &a) in flats.iter().zip(&exponents) {
            m.ground().check_subset(f)?;
            if f == prev || !prev.is_subset_of(f) {
                return Err(Error::InvalidMonomial(format!(
                    "{} does not strictly contain the previous flat",
                    m.ground().format(f)
                )));
            }
            if !m.is_flat(f) {
                return Err(Error::InvalidMonomial(format!(
                    "{} is not a flat",
                    m.ground().format(f)
                )));
            }
            let r = m.rank_of(f);
            if a == 0 || a >= r - prev_rank {
                return Err(Error::InvalidMonomial(format!(
                    "exponent {a} outside 1..{} for {}",
                    r - prev_rank,
                    m.ground().format(f)
                )));
            }
            prev = f;
            prev_rank = r;
        }
        Ok(SimplicialMonomial { flats, exponents })
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().sum()
    }

    /// The multiset with `a_i` copies of `F_i`.
    pub fn system(&self, ground: &GroundSet) -> Result<SetSystem> {
        let members = self
            .flats
            .iter()
            .zip(&self.exponents)
            .flat_map(|(&f, &a)| std::iter::repeat_n(f, a))
            .collect();
        SetSystem::new(ground.clone(), members)
    }

    /// Renders e.g. `h{1,2}^2 h{1,2,3}`; the empty monomial is `1`.
    pub fn format(&self, ground: &GroundSet) -> String {
        if self.flats.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        for (i, (&f, &a)) in self.flats.iter().zip(&self.exponents).enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push('h');
            out.push_str(&ground.format(f));
            if a > 1 {
                let _ = write!(out, "^{a}");
            }
        }
        out
    }
}

/// The degree-`c` monomial basis in simplicial generators, in canonical order.
pub fn monomial_basis(m: &Matroid, c: usize) -> Result<Vec<SimplicialMonomial>> {
    if !m.is_loopless() {
        return Err(Error::LoopyInput);
    }
    let table = m.rank_table();
    let flats: Vec<(Subset, usize)> = table
        .flats()
        .into_iter()
        .filter(|f| !f.is_empty())
        .map(|f| (f, table.rank(f)))
        .collect();

    fn go(
        flats: &[(Subset, usize)],
        prev: Subset,
        prev_rank: usize,
        left: usize,
        cur: &mut SimplicialMonomial,
        out: &mut Vec<SimplicialMonomial>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for &(f, r) in flats {
            if f == prev || !prev.is_subset_of(f) || r < prev_rank + 2 {
                continue;
            }
            for a in 1..(r - prev_rank).min(left + 1) {
                cur.flats.push(f);
                cur.exponents.push(a);
                go(flats, f, r, left - a, cur, out);
                cur.flats.pop();
                cur.exponents.pop();
            }
        }
    }

    let mut out = Vec::new();
    go(
        &flats,
        Subset::EMPTY,
        0,
        c,
        &mut SimplicialMonomial::one(),
        &mut out,
    );
    out.sort();
    Ok(out)
}

/// The relative nested quotient of `m` indexed by `mono`: the coRado matroid
/// of the multiset holding `a_i` copies of `F_i`.
pub fn relative_nested_quotient(m: &Matroid, mono: &SimplicialMonomial) -> Result<Matroid> {
    if !m.is_loopless() {
        return Err(Error::LoopyInput);
    }
    let degree = mono.degree();
    if degree > m.rank().saturating_sub(1) {
        return Err(Error::DegreeTooLarge {
            degree,
            rank: m.rank(),
        });
    }
    let mono = SimplicialMonomial::new(m, mono.flats.clone(), mono.exponents.clone())?;
    let q = corado(m, &mono.system(m.ground())?)?;
    if !q.is_loopless() || q.rank() + degree != m.rank() {
        return Err(Error::InternalInconsistency(format!(
            "nested quotient for {} has rank {} and loops {}",
            mono.format(m.ground()),
            q.rank(),
            m.ground().format(q.loops())
        )));
    }
    Ok(q)
}

/// The first subfamily `J` (by size, then canonical order) violating
/// `rk_M(∪_{j∈J} A_j) >= |J| + 1`, as 0-based member indices.
pub fn dhr_witness(m: &Matroid, system: &SetSystem) -> Option<Vec<usize>> {
    let mut js: Vec<Subset> = Subset::full(system.len()).subsets().skip(1).collect();
    js.sort_unstable();
    js.into_iter()
        .find(|&j| m.rank_of(system.union_of(j)) < j.len() + 1)
        .map(|j| j.iter().collect())
}

/// Whether `system` satisfies the Dragon-Hall-Rado condition for `m`.
pub fn satisfies_dhr(m: &Matroid, system: &SetSystem) -> bool {
    dhr_witness(m, system).is_none()
}

fn check_degree_input(m: &Matroid, system: &SetSystem) -> Result<()> {
    if !m.is_loopless() {
        return Err(Error::LoopyInput);
    }
    if system.len() + 1 != m.rank() {
        return Err(Error::RankMismatch {
            members: system.len(),
            rank: m.rank(),
        });
    }
    Ok(())
}

/// Degree of the top-degree product `h_{A_1} ⋯ h_{A_d}` for `m` of rank
/// `d + 1`: 1 when the coRado matroid is `U_{1,E}`, else 0.
pub fn degree(m: &Matroid, system: &SetSystem) -> Result<u8> {
    check_degree_input(m, system)?;
    let p = corado(m, system)?;
    Ok(u8::from(p == Matroid::uniform(1, m.ground().clone())?))
}

/// [`degree`] computed by folding intersections with hyperplane matroids.
pub fn degree_via_intersection(m: &Matroid, system: &SetSystem) -> Result<u8> {
    check_degree_input(m, system)?;
    let hs = system
        .members()
        .iter()
        .map(|&a| Matroid::hyperplane(m.ground().clone(), a))
        .collect::<Result<Vec<_>>>()?;
    let p = intersect_all(m, &hs)?;
    Ok(u8::from(p == Matroid::uniform(1, m.ground().clone())?))
}

/// An `m`-independent transversal of `system` avoiding element `e`, if any.
pub fn independent_transversal_avoiding(
    m: &Matroid,
    system: &SetSystem,
    e: usize,
) -> Result<Option<Vec<usize>>> {
    if system.ground() != m.ground() {
        return Err(Error::GroundSetMismatch);
    }
    if e >= m.len() {
        return Err(Error::NotASubset);
    }
    let sets: Vec<Subset> = system.members().iter().map(|a| a.without(e)).collect();
    if sets.iter().any(|s| s.is_empty()) || !rado_condition(&sets, m) {
        return Ok(None);
    }
    find_independent_transversal(&sets, m)
        .map(Some)
        .ok_or_else(|| {
            Error::InternalInconsistency(
                "Rado's condition holds but no avoiding transversal was found".into(),
            )
        })
}

/// An `m`-independent transversal `I` of `system` with `e ∉ I` and
/// `I ∪ {e}` independent, i.e. an independent transversal of `M / e`.
pub fn independent_transversal_extending(
    m: &Matroid,
    system: &SetSystem,
    e: usize,
) -> Result<Option<Vec<usize>>> {
    if system.ground() != m.ground() {
        return Err(Error::GroundSetMismatch);
    }
    if e >= m.len() {
        return Err(Error::NotASubset);
    }
    let through: Vec<Subset> = m
        .bases()
        .iter()
        .filter(|b| b.contains(e))
        .map(|b| b.without(e))
        .collect();
    let contracted = if through.is_empty() {
        m.clone()
    } else {
        Matroid::from_bases_unchecked(m.ground().clone(), through)
    };
    let sets: Vec<Subset> = system.members().iter().map(|a| a.without(e)).collect();
    if !rado_condition(&sets, &contracted) {
        return Ok(None);
    }
    find_independent_transversal(&sets, &contracted)
        .map(Some)
        .ok_or_else(|| {
            Error::InternalInconsistency(
                "Rado's condition holds but no extending transversal was found".into(),
            )
        })
}
