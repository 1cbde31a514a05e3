//! Labeled ground sets and bitmask subsets.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on user-supplied ground sets.
pub const DEFAULT_MAX_GROUND: usize = 16;

/// Bit width of [`Subset`]; derived ground sets (hat copies, direct sums)
/// may grow past the user cap but never past this.
pub const HARD_MAX_GROUND: usize = 64;

/// Marker appended to labels of a hat copy. Rejected in user labels.
pub const HAT: char = '^';

/// The configured ground-set cap: `CORADO_MAX_GROUND` if set and valid,
/// otherwise [`DEFAULT_MAX_GROUND`].
pub fn max_ground() -> usize {
    std::env::var("CORADO_MAX_GROUND")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.min(HARD_MAX_GROUND))
        .unwrap_or(DEFAULT_MAX_GROUND)
}

/// A subset of a ground set, stored as a bitmask over element positions.
///
/// Subsets are ordered canonically: first by cardinality, then
/// lexicographically on their sorted element positions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        Subset(it.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Element positions in increasing order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Position of the smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// All subsets of `self` in increasing numeric order of their masks.
    pub fn subsets(self) -> SubmaskIter {
        SubmaskIter {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    Ordering::Equal
                } else if self.0 & diff & diff.wrapping_neg() != 0 {
                    // self holds the smallest element of the symmetric difference
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Subset::from_indices(iter)
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

pub struct SubmaskIter {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubmaskIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // standard "next submask" step: ((cur | !mask) + 1) & mask
        let step = (cur | !self.mask).wrapping_add(1) & self.mask;
        self.next = (step != 0).then_some(step);
        Some(Subset(cur))
    }
}

/// An ordered sequence of distinct labels; positions define bitmask bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Validates user labels: distinct, nonempty, free of the hat marker,
    /// and no more than [`max_ground`] of them.
    pub fn new<I, S>(labels: I) -> Result<GroundSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(labels, max_ground())
    }

    pub fn with_cap<I, S>(labels: I, cap: usize) -> Result<GroundSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if let Some(l) = labels.iter().find(|l| l.contains(HAT)) {
            return Err(Error::ReservedLabel(l.clone()));
        }
        Self::checked(labels, cap.min(HARD_MAX_GROUND))
    }

    /// Ground set with labels `1..=n`.
    pub fn numbered(n: usize) -> Result<GroundSet> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    /// Ground sets built by the library itself; the hat marker is allowed and
    /// only the hard bitmask width applies.
    pub(crate) fn derived(labels: Vec<String>) -> Result<GroundSet> {
        Self::checked(labels, HARD_MAX_GROUND)
    }

    fn checked(labels: Vec<String>, cap: usize) -> Result<GroundSet> {
        if labels.len() > cap {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                cap,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn contains_subset(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    pub fn check_subset(&self, s: Subset) -> Result<Subset> {
        if self.contains_subset(s) {
            Ok(s)
        } else {
            Err(Error::NotASubset)
        }
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            s = s.with(i);
        }
        Ok(s)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Renders a subset as `{a,b,c}`.
    pub fn format(&self, s: Subset) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    /// Copy of this ground set with every label suffixed by [`HAT`].
    pub fn hat_copy(&self) -> GroundSet {
        GroundSet {
            labels: self.labels.iter().map(|l| format!("{l}{HAT}")).collect(),
        }
    }
}
