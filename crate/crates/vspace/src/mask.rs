//! Subsets of a ground set as bit masks.
//!
//! All set algebra in the crate runs on [`SubsetMask`]: one bit per ground
//! element, at most 16 bits. The *canonical order* used everywhere for
//! reports, witnesses and file output sorts subsets by cardinality first and
//! by numeric value of the characteristic vector second.

use std::fmt;
use std::ops::{BitAnd, BitOr};

/// A subset of a ground set, one bit per element.
///
/// The mask itself does not know its ground set; operations that need the
/// ground size (complement, enumeration, label rendering) live on
/// [`crate::ground::GroundSet`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(u16);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_bits(bits: u16) -> Self {
        SubsetMask(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < 16);
        SubsetMask(1 << index)
    }

    pub fn contains(self, index: usize) -> bool {
        index < 16 && self.0 & (1 << index) != 0
    }

    pub fn insert(self, index: usize) -> Self {
        SubsetMask(self.0 | (1 << index))
    }

    pub fn remove(self, index: usize) -> Self {
        SubsetMask(self.0 & !(1 << index))
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    /// Set difference `self − other`.
    pub fn minus(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn card(self) -> u32 {
        self.0.count_ones()
    }

    /// Indices of the elements in the subset, ascending.
    pub fn members(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..16).filter(move |i| bits & (1 << i) != 0)
    }

    /// Sort key for the canonical (cardinality, characteristic value) order.
    pub fn canonical_key(self) -> (u32, u16) {
        (self.card(), self.0)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({:#018b})", self.0)
    }
}
