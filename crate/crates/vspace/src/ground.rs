//! Finite ground sets with labelled elements.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// Hard cap on ground-set size; every algorithm in the crate is exponential
/// in the number of elements.
pub const MAX_GROUND: usize = 16;

/// An ordered finite set of distinct element labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                n: labels.len(),
                max: MAX_GROUND,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Ground set labelled `"1"`, `"2"`, …, `"n"`.
    pub fn numbered(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| i.to_string()))
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

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> usize {
        1 << self.labels.len()
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::from_bits(((1u32 << self.labels.len()) - 1) as u16)
    }

    /// Complement of `m` inside this ground set.
    pub fn complement(&self, m: SubsetMask) -> SubsetMask {
        self.full_mask().minus(m)
    }

    /// All subsets in raw numeric order of the characteristic vector.
    pub fn masks_numeric(&self) -> impl Iterator<Item = SubsetMask> {
        (0..self.subset_count() as u32).map(|v| SubsetMask::from_bits(v as u16))
    }

    /// All subsets in canonical order: by cardinality, then by numeric value.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> {
        let mut all: Vec<SubsetMask> = self.masks_numeric().collect();
        all.sort_by_key(|m| m.canonical_key());
        all.into_iter()
    }

    /// Build a mask from element labels; rejects unknown and repeated labels.
    pub fn parse_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetMask> {
        let mut mask = SubsetMask::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let idx = self
                .index_of(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            if mask.contains(idx) {
                return Err(Error::DuplicateElement(l.to_string()));
            }
            mask = mask.insert(idx);
        }
        Ok(mask)
    }

    /// Labels of the members of `m`, in ground order.
    pub fn set_labels(&self, m: SubsetMask) -> Vec<String> {
        m.members()
            .filter(|&i| i < self.labels.len())
            .map(|i| self.labels[i].clone())
            .collect()
    }

    /// Renders `m` the way reports print sets: `{1,3}`, or `∅` when empty.
    pub fn format_set(&self, m: SubsetMask) -> String {
        if m.is_empty() {
            return "∅".to_string();
        }
        format!("{{{}}}", self.set_labels(m).join(","))
    }
}
