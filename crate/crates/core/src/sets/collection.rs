use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::FiniteSet;
use crate::{Error, Result};

/// A duplicate-free collection of non-empty sets, kept in lexicographic order.
///
/// Serialises as `{"sets": [[1,2],[2,3]]}`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "CollectionJson", into = "CollectionJson")]
pub struct SetCollection {
    members: Vec<FiniteSet>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CollectionJson {
    sets: Vec<FiniteSet>,
}

impl TryFrom<CollectionJson> for SetCollection {
    type Error = Error;

    fn try_from(json: CollectionJson) -> Result<Self> {
        SetCollection::new(json.sets)
    }
}

impl From<SetCollection> for CollectionJson {
    fn from(c: SetCollection) -> Self {
        CollectionJson { sets: c.members }
    }
}

impl SetCollection {
    pub fn new<I: IntoIterator<Item = FiniteSet>>(members: I) -> Result<Self> {
        let mut members: Vec<FiniteSet> = members.into_iter().collect();
        if members.iter().any(FiniteSet::is_empty) {
            return Err(Error::EmptyMember);
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMember(w[0].elements().to_vec()));
        }
        Ok(SetCollection { members })
    }

    /// Convenience constructor from raw id lists.
    pub fn from_sets<I, J>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = u32>,
    {
        let members = sets
            .into_iter()
            .map(FiniteSet::new)
            .collect::<Result<Vec<_>>>()?;
        SetCollection::new(members)
    }

    /// Members must already be sorted, distinct and non-empty.
    pub(crate) fn from_sorted(members: Vec<FiniteSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetCollection { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[FiniteSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FiniteSet> {
        self.members.iter()
    }

    pub fn contains(&self, s: &FiniteSet) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn is_subcollection_of(&self, other: &SetCollection) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// `⋃` of all members; empty for the empty collection.
    pub fn union_all(&self) -> FiniteSet {
        self.iter().fold(FiniteSet::empty(), |acc, s| acc.union(s))
    }

    /// `⋂` of all members; `None` for the empty collection.
    pub fn intersection_all(&self) -> Option<FiniteSet> {
        let (first, rest) = self.members.split_first()?;
        Some(
            rest.iter()
                .fold(first.clone(), |acc, s| acc.intersection(s)),
        )
    }

    /// The collection with `s` removed.
    pub fn without(&self, s: &FiniteSet) -> Result<SetCollection> {
        let pos = self
            .members
            .binary_search(s)
            .map_err(|_| Error::NotAMember(s.elements().to_vec()))?;
        let mut members = self.members.clone();
        members.remove(pos);
        Ok(SetCollection { members })
    }

    /// Members selected by a bitmask over member positions.
    pub(crate) fn select(&self, mask: u64) -> SetCollection {
        let members = self
            .members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, s)| s.clone())
            .collect();
        SetCollection { members }
    }

    pub(crate) fn full_mask(&self) -> u64 {
        full_mask(self.len())
    }
}

impl fmt::Debug for SetCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

impl fmt::Display for SetCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members.iter().join(","))
    }
}

impl<'a> IntoIterator for &'a SetCollection {
    type Item = &'a FiniteSet;
    type IntoIter = std::slice::Iter<'a, FiniteSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// `collection![[1, 2], [2, 3]]`. Panics on invalid input.
#[macro_export]
macro_rules! collection {
    ($([$($x:expr),* $(,)?]),* $(,)?) => {
        $crate::SetCollection::new([$($crate::set![$($x),*]),*]).expect("valid collection literal")
    };
}

/// An ordered split of a collection into two non-empty disjoint parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    part1: SetCollection,
    part2: SetCollection,
}

impl Bipartition {
    pub fn new(part1: SetCollection, part2: SetCollection) -> Result<Self> {
        if part1.is_empty() || part2.is_empty() {
            return Err(Error::BadBipartition("both parts must be non-empty"));
        }
        if part1.iter().any(|s| part2.contains(s)) {
            return Err(Error::BadBipartition("parts must be disjoint"));
        }
        Ok(Bipartition { part1, part2 })
    }

    /// Splits `parent` into `part1` and its complement.
    pub fn of(parent: &SetCollection, part1: &SetCollection) -> Result<Self> {
        if !part1.is_subcollection_of(parent) {
            return Err(Error::BadBipartition("part1 is not inside the parent"));
        }
        let part2 = parent
            .iter()
            .filter(|s| !part1.contains(s))
            .cloned()
            .collect::<Vec<_>>();
        Bipartition::new(part1.clone(), SetCollection::from_sorted(part2))
    }

    pub(crate) fn from_masks(parent: &SetCollection, mask1: u64, mask2: u64) -> Self {
        Bipartition {
            part1: parent.select(mask1),
            part2: parent.select(mask2),
        }
    }

    pub fn part1(&self) -> &SetCollection {
        &self.part1
    }

    pub fn part2(&self) -> &SetCollection {
        &self.part2
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            part1: self.part2.clone(),
            part2: self.part1.clone(),
        }
    }

    pub fn parent(&self) -> SetCollection {
        SetCollection::new(self.part1.iter().chain(self.part2.iter()).cloned())
            .expect("parts are disjoint")
    }
}

pub(crate) fn full_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn indices_to_mask(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

/// Masks over `k` positions with at least `min_size` bits, ordered by
/// increasing size and then lexicographically on the chosen indices.
pub(crate) fn masks_by_size(k: usize, min_size: usize) -> impl Iterator<Item = u64> {
    (min_size.max(1)..=k)
        .flat_map(move |size| (0..k).combinations(size).map(|c| indices_to_mask(&c)))
}

fn mask_bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Unordered bipartitions of the positions in `mask`, each produced once with
/// the smaller side first (ties broken by which side holds the lowest index).
pub(crate) fn unordered_bipartitions(mask: u64) -> impl Iterator<Item = (u64, u64)> {
    let bits = mask_bits(mask);
    let len = bits.len();
    let first = bits.first().copied();
    (1..=len / 2).flat_map(move |size| {
        let bits = bits.clone();
        bits.clone()
            .into_iter()
            .combinations(size)
            .filter(move |c| 2 * size < len || c.first().copied() == first)
            .map(move |c| {
                let m1 = indices_to_mask(&c);
                (m1, mask & !m1)
            })
    })
}

/// Every ordered bipartition `(part1, part2)` of the positions in `mask`.
pub(crate) fn ordered_bipartitions(mask: u64) -> impl Iterator<Item = (u64, u64)> {
    let bits = mask_bits(mask);
    let len = bits.len();
    (1..len).flat_map(move |size| {
        bits.clone().into_iter().combinations(size).map(move |c| {
            let m1 = indices_to_mask(&c);
            (m1, mask & !m1)
        })
    })
}

/// Members re-encoded as bit rows over the compressed universe `⋃c`, so that
/// unions and intersections of subcollections are word operations.
pub(crate) struct Packed {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl Packed {
    pub(crate) fn new(c: &SetCollection) -> Self {
        let universe = c.union_all();
        let words = universe.len().div_ceil(64).max(1);
        let rows = c
            .iter()
            .map(|s| {
                let mut row = vec![0u64; words];
                for x in s.iter() {
                    let pos = universe.elements().binary_search(&x).expect("in union");
                    row[pos / 64] |= 1 << (pos % 64);
                }
                row
            })
            .collect();
        Packed { words, rows }
    }

    fn or_word(&self, mask: u64, w: usize) -> u64 {
        let mut acc = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            acc |= self.rows[i][w];
            m &= m - 1;
        }
        acc
    }

    fn and_word(&self, mask: u64, w: usize) -> u64 {
        let mut acc = u64::MAX;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            acc &= self.rows[i][w];
            m &= m - 1;
        }
        acc
    }

    /// `e` of the members in `mask` (which must be non-empty).
    pub(crate) fn e(&self, mask: u64) -> usize {
        debug_assert!(mask != 0);
        (0..self.words)
            .map(|w| {
                (self.or_word(mask, w).count_ones() + self.and_word(mask, w).count_ones()) as usize
            })
            .sum()
    }

    /// `|⋂m1 − ⋃m2| − |⋂m2 − ⋃m1|`.
    pub(crate) fn defect(&self, m1: u64, m2: u64) -> i64 {
        (0..self.words)
            .map(|w| {
                let left = self.and_word(m1, w) & !self.or_word(m2, w);
                let right = self.and_word(m2, w) & !self.or_word(m1, w);
                left.count_ones() as i64 - right.count_ones() as i64
            })
            .sum()
    }
}
