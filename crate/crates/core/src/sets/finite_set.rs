use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A finite set of positive element ids, stored strictly increasing.
///
/// Because the storage is canonical, structural equality is set equality and
/// the derived `Ord` is lexicographic on the element sequence.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FiniteSet(Vec<u32>);

impl FiniteSet {
    /// Builds a set from ids in any order. Ids must be `>= 1` and distinct.
    pub fn new<I: IntoIterator<Item = u32>>(elements: I) -> Result<Self> {
        let mut elements: Vec<u32> = elements.into_iter().collect();
        elements.sort_unstable();
        if elements.first() == Some(&0) {
            return Err(Error::ZeroElement);
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        Ok(FiniteSet(elements))
    }

    pub fn empty() -> Self {
        FiniteSet(Vec::new())
    }

    /// Caller guarantees `elements` is strictly increasing and zero-free.
    pub(crate) fn from_sorted(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.first() != Some(&0));
        FiniteSet(elements)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max_element(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        FiniteSet(out)
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.iter().filter(|&x| other.contains(x)).collect())
    }

    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.iter().filter(|&x| !other.contains(x)).collect())
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.len() <= other.len() && self.iter().all(|x| other.contains(x))
    }
}

impl TryFrom<Vec<u32>> for FiniteSet {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        FiniteSet::new(v)
    }
}

impl From<FiniteSet> for Vec<u32> {
    fn from(s: FiniteSet) -> Self {
        s.0
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Shorthand used heavily in tests: `set![1, 2, 3]`. Panics on invalid input.
#[macro_export]
macro_rules! set {
    ($($x:expr),* $(,)?) => {
        $crate::FiniteSet::new([$($x as u32),*]).expect("valid set literal")
    };
}
