use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

/// A set of indices into a fixed universe (the objects or the attributes of
/// one context).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(FixedBitSet);

/// Set of object indices.
pub type ObjectSet = IndexSet;
/// Set of attribute indices.
pub type AttributeSet = IndexSet;

impl IndexSet {
    pub fn empty(universe: usize) -> Self {
        IndexSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        IndexSet(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Size of the underlying universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    /// Panics if `i` is outside the universe.
    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.0.set(i, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersect_with(&mut self, other: &IndexSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn union_with(&mut self, other: &IndexSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Number of members of `self` that are not in `other`.
    pub fn difference_len(&self, other: &IndexSet) -> usize {
        self.0.difference_count(&other.0)
    }

    /// Members strictly below `bound`.
    pub fn prefix(&self, bound: usize) -> IndexSet {
        let mut out = self.clone();
        out.0.remove_range(bound..);
        out
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.0.ones().next()
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
