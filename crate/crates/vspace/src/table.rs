//! Operator tables: total maps `2^E → 2^E` stored explicitly.
//!
//! A table is either in τ-form (closure-style operator) or in V-form
//! (violator mapping). The type assumes *no* axiom; every property is
//! checked, never presumed. Conversion between the two forms is explicit and
//! lives in [`crate::duality`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::mask::SubsetMask;

/// Which presentation the table stores.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum OperatorKind {
    /// Closure-style operator τ.
    Tau,
    /// Violator mapping V.
    Violator,
}

impl OperatorKind {
    /// Operator symbol used when rendering reports.
    pub fn symbol(self) -> &'static str {
        match self {
            OperatorKind::Tau => "τ",
            OperatorKind::Violator => "V",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::Tau => write!(f, "tau"),
            OperatorKind::Violator => write!(f, "violator"),
        }
    }
}

/// A total set operator on all subsets of a ground set.
///
/// `images[m]` is the image of the subset whose characteristic vector has
/// numeric value `m`, so totality holds by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorTable {
    ground: GroundSet,
    kind: OperatorKind,
    images: Vec<SubsetMask>,
}

impl OperatorTable {
    pub fn new(ground: GroundSet, kind: OperatorKind, images: Vec<SubsetMask>) -> Result<Self> {
        if images.len() != ground.subset_count() {
            return Err(Error::WrongImageCount {
                expected: ground.subset_count(),
                got: images.len(),
            });
        }
        let full = ground.full_mask();
        for img in &images {
            if !img.is_subset_of(full) {
                return Err(Error::UnknownLabel(format!("bit {:#b}", img.bits())));
            }
        }
        Ok(OperatorTable {
            ground,
            kind,
            images,
        })
    }

    /// Builds the table by evaluating `f` on every subset.
    pub fn from_fn(
        ground: GroundSet,
        kind: OperatorKind,
        mut f: impl FnMut(SubsetMask) -> SubsetMask,
    ) -> Result<Self> {
        let images = ground.masks_numeric().map(&mut f).collect();
        OperatorTable::new(ground, kind, images)
    }

    /// τ(X) = X for all X.
    pub fn identity(ground: GroundSet) -> Self {
        OperatorTable::from_fn(ground, OperatorKind::Tau, |m| m).unwrap()
    }

    /// V(X) = E − X for all X.
    pub fn complement(ground: GroundSet) -> Self {
        let full = ground.full_mask();
        OperatorTable::from_fn(ground, OperatorKind::Violator, |m| full.minus(m)).unwrap()
    }

    /// Constant operator mapping every subset to `value`.
    pub fn constant(ground: GroundSet, kind: OperatorKind, value: SubsetMask) -> Result<Self> {
        OperatorTable::from_fn(ground, kind, |_| value)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn image(&self, m: SubsetMask) -> SubsetMask {
        self.images[m.bits() as usize]
    }

    pub fn images(&self) -> &[SubsetMask] {
        &self.images
    }

    pub fn require_kind(&self, expected: OperatorKind) -> Result<()> {
        if self.kind != expected {
            return Err(Error::WrongKind {
                expected,
                actual: self.kind,
            });
        }
        Ok(())
    }

    /// Same images under a different kind tag; used by duality only.
    pub(crate) fn with_kind_and_images(&self, kind: OperatorKind, images: Vec<SubsetMask>) -> Self {
        OperatorTable {
            ground: self.ground.clone(),
            kind,
            images,
        }
    }

    /// Parses the operator file format.
    ///
    /// ```json
    /// { "ground": ["1","2","3"],
    ///   "kind": "tau" | "violator",
    ///   "default": "identity" | "complement" | "none",
    ///   "map": [ {"set": ["1"], "image": ["2"]}, ... ] }
    /// ```
    ///
    /// Subsets omitted from `map` are filled from the default rule; with
    /// `"default": "none"` (or no default) all `2^n` entries are required.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: OperatorFile = serde_json::from_str(text)?;
        let ground = GroundSet::new(file.ground)?;
        let kind = match file.kind.as_str() {
            "tau" => OperatorKind::Tau,
            "violator" => OperatorKind::Violator,
            other => {
                return Err(Error::Json(serde::de::Error::custom(format!(
                    "unknown kind `{other}` (expected \"tau\" or \"violator\")"
                ))))
            }
        };
        let default = match file.default.as_deref() {
            None | Some("none") => None,
            Some("identity") => Some(DefaultRule::Identity),
            Some("complement") => Some(DefaultRule::Complement),
            Some(other) => {
                return Err(Error::Json(serde::de::Error::custom(format!(
                    "unknown default rule `{other}`"
                ))))
            }
        };

        let mut images: Vec<Option<SubsetMask>> = vec![None; ground.subset_count()];
        for entry in &file.map {
            let set = ground.parse_set(&entry.set)?;
            let image = ground.parse_set(&entry.image)?;
            let slot = &mut images[set.bits() as usize];
            if slot.is_some() {
                return Err(Error::DuplicateEntry(ground.format_set(set)));
            }
            *slot = Some(image);
        }

        let full = ground.full_mask();
        let mut filled = Vec::with_capacity(images.len());
        let mut missing = 0usize;
        for (value, slot) in images.into_iter().enumerate() {
            let mask = SubsetMask::from_bits(value as u16);
            match (slot, default) {
                (Some(img), _) => filled.push(img),
                (None, Some(DefaultRule::Identity)) => filled.push(mask),
                (None, Some(DefaultRule::Complement)) => filled.push(full.minus(mask)),
                (None, None) => {
                    missing += 1;
                    filled.push(mask); // placeholder, rejected below
                }
            }
        }
        if missing > 0 {
            return Err(Error::IncompleteMap { missing });
        }
        OperatorTable::new(ground, kind, filled)
    }

    /// Serializes in the operator file format, pretty-printed.
    ///
    /// Output is canonical: the default rule is `identity` for τ-tables and
    /// `complement` for V-tables, and `map` lists only the entries that
    /// deviate from it, in canonical subset order. `from_json ∘ to_json` is
    /// the identity on tables.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("table serialization cannot fail")
    }

    /// Single-line variant of [`Self::to_json`], for logs and sweep reports.
    pub fn to_json_compact(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("table serialization cannot fail")
    }

    fn to_file(&self) -> OperatorFile {
        let (default, rule): (&str, fn(&GroundSet, SubsetMask) -> SubsetMask) = match self.kind {
            OperatorKind::Tau => ("identity", |_, m| m),
            OperatorKind::Violator => ("complement", |g, m| g.complement(m)),
        };
        let mut map = Vec::new();
        for set in self.ground.subsets() {
            let image = self.image(set);
            if image != rule(&self.ground, set) {
                map.push(MapEntry {
                    set: self.ground.set_labels(set),
                    image: self.ground.set_labels(image),
                });
            }
        }
        OperatorFile {
            ground: self.ground.labels().to_vec(),
            kind: self.kind.to_string(),
            default: Some(default.to_string()),
            map,
        }
    }
}

#[derive(Clone, Copy)]
enum DefaultRule {
    Identity,
    Complement,
}

#[derive(Serialize, Deserialize)]
struct OperatorFile {
    ground: Vec<String>,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    default: Option<String>,
    #[serde(default)]
    map: Vec<MapEntry>,
}

#[derive(Serialize, Deserialize)]
struct MapEntry {
    set: Vec<String>,
    image: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1_file() -> &'static str {
        r#"{ "ground": ["1","2","3"],
             "kind": "violator",
             "default": "complement",
             "map": [ {"set": ["1"], "image": ["2"]} ] }"#
    }

    #[test]
    fn load_fills_defaults() {
        let t = OperatorTable::from_json(ex1_file()).unwrap();
        assert_eq!(t.kind(), OperatorKind::Violator);
        assert_eq!(t.images().len(), 8);
        let g = t.ground().clone();
        let one = g.parse_set(&["1"]).unwrap();
        let two = g.parse_set(&["2"]).unwrap();
        assert_eq!(t.image(one), two);
        // every other subset follows the complement rule
        let pair = g.parse_set(&["1", "2"]).unwrap();
        assert_eq!(t.image(pair), g.parse_set(&["3"]).unwrap());
        assert_eq!(t.image(SubsetMask::EMPTY), g.full_mask());
    }

    #[test]
    fn load_empty_ground() {
        let t =
            OperatorTable::from_json(r#"{ "ground": [], "kind": "tau", "default": "identity" }"#)
                .unwrap();
        assert_eq!(t.images().len(), 1);
        assert_eq!(t.image(SubsetMask::EMPTY), SubsetMask::EMPTY);
    }

    #[test]
    fn load_rejects_unknown_label() {
        let bad = r#"{ "ground": ["1","2","3"], "kind": "tau", "default": "identity",
                       "map": [ {"set": ["1","5"], "image": ["1"]} ] }"#;
        assert!(matches!(
            OperatorTable::from_json(bad),
            Err(Error::UnknownLabel(l)) if l == "5"
        ));
    }

    #[test]
    fn load_rejects_duplicate_entry() {
        let bad = r#"{ "ground": ["1"], "kind": "tau", "default": "identity",
                       "map": [ {"set": ["1"], "image": ["1"]}, {"set": ["1"], "image": []} ] }"#;
        assert!(matches!(
            OperatorTable::from_json(bad),
            Err(Error::DuplicateEntry(_))
        ));
    }

    #[test]
    fn load_rejects_incomplete_map_without_default() {
        let bad = r#"{ "ground": ["1"], "kind": "tau", "default": "none",
                       "map": [ {"set": [], "image": []} ] }"#;
        assert!(matches!(
            OperatorTable::from_json(bad),
            Err(Error::IncompleteMap { missing: 1 })
        ));
    }

    #[test]
    fn load_rejects_duplicate_in_set_literal() {
        let bad = r#"{ "ground": ["1","2"], "kind": "tau", "default": "identity",
                       "map": [ {"set": ["1","1"], "image": ["1"]} ] }"#;
        assert!(matches!(
            OperatorTable::from_json(bad),
            Err(Error::DuplicateElement(_))
        ));
    }

    #[test]
    fn save_identity_has_no_overrides() {
        let t = OperatorTable::identity(GroundSet::numbered(3).unwrap());
        let text = t.to_json();
        assert!(text.contains("\"identity\""));
        assert!(text.contains("\"map\": []"));
        assert_eq!(OperatorTable::from_json(&text).unwrap(), t);
    }

    #[test]
    fn round_trip_is_identity() {
        let t = OperatorTable::from_json(ex1_file()).unwrap();
        let reloaded = OperatorTable::from_json(&t.to_json()).unwrap();
        assert_eq!(reloaded, t);
        // byte-level fixpoint after one canonicalizing save
        assert_eq!(reloaded.to_json(), t.to_json());
    }
}
