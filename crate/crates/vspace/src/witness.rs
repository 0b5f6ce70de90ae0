//! Self-certifying violation witnesses.
//!
//! Every failed axiom check returns a [`Witness`] that can be replayed
//! against the operator table it came from: [`Witness::replay`] re-evaluates
//! exactly the violated condition on the witness tuple and must come back
//! `true`. Theorem-level checks (biconditionals between whole properties)
//! report a [`TheoremViolation`] instead, which records the sets involved and
//! a rendered explanation.

use crate::mask::SubsetMask;
use crate::table::{OperatorKind, OperatorTable};

/// A concrete violation of a single axiom.
///
/// The chain-shaped variant [`Witness::Convexity`] is shared by the τ-form
/// sandwich property and the V-form monotonicity check; both assert the same
/// condition on the stored images (equal ends, deviating middle).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// X ⊄ τ(X).
    C1 { set: SubsetMask },
    /// X ⊆ Y but τ(X) ⊄ τ(Y).
    C2 {
        lower: SubsetMask,
        upper: SubsetMask,
    },
    /// τ(τ(X)) ≠ τ(X).
    C3 { set: SubsetMask },
    /// F ⊆ G ⊆ τ(F) but τ(G) ≠ τ(F).
    C22 {
        lower: SubsetMask,
        upper: SubsetMask,
    },
    /// X ⊆ Y ⊆ Z with equal images at X and Z but not at Y.
    Convexity {
        lower: SubsetMask,
        mid: SubsetMask,
        upper: SubsetMask,
    },
    /// p,q ∉ τ(X), p ∈ τ(X∪q) and q ∈ τ(X∪p).
    AntiExchange { set: SubsetMask, p: usize, q: usize },
    /// G ∩ V(G) ≠ ∅.
    Consistency { set: SubsetMask },
    /// F ⊆ G with G ∩ V(F) = ∅ but V(G) ≠ V(F).
    Locality {
        lower: SubsetMask,
        upper: SubsetMask,
    },
    /// `set` has two distinct inclusion-minimal generators.
    TwoBases {
        set: SubsetMask,
        first: SubsetMask,
        second: SubsetMask,
    },
    /// The equivalence class with this image value is not an interval.
    NonInterval { class_value: SubsetMask },
}

impl Witness {
    /// Re-evaluates the violated condition on the witness data.
    ///
    /// Returns `true` iff the violation is reproduced on `op`, so a genuine
    /// witness produced from `op` always replays to `true`.
    pub fn replay(&self, op: &OperatorTable) -> bool {
        let tau = op.kind() == OperatorKind::Tau;
        match *self {
            Witness::C1 { set } => tau && !set.is_subset_of(op.image(set)),
            Witness::C2 { lower, upper } => {
                tau && lower.is_subset_of(upper) && !op.image(lower).is_subset_of(op.image(upper))
            }
            Witness::C3 { set } => tau && op.image(op.image(set)) != op.image(set),
            Witness::C22 { lower, upper } => {
                tau && lower.is_subset_of(upper)
                    && upper.is_subset_of(op.image(lower))
                    && op.image(upper) != op.image(lower)
            }
            Witness::Convexity { lower, mid, upper } => {
                lower.is_subset_of(mid)
                    && mid.is_subset_of(upper)
                    && op.image(lower) == op.image(upper)
                    && op.image(mid) != op.image(lower)
            }
            Witness::AntiExchange { set, p, q } => {
                let closed = op.image(set);
                tau && p != q
                    && !closed.contains(p)
                    && !closed.contains(q)
                    && op.image(set.insert(q)).contains(p)
                    && op.image(set.insert(p)).contains(q)
            }
            Witness::Consistency { set } => !tau && !set.intersection(op.image(set)).is_empty(),
            Witness::Locality { lower, upper } => {
                !tau && lower.is_subset_of(upper)
                    && upper.intersection(op.image(lower)).is_empty()
                    && op.image(upper) != op.image(lower)
            }
            Witness::TwoBases { set, first, second } => {
                let value = op.image(set);
                first != second
                    && op.image(first) == value
                    && op.image(second) == value
                    && is_minimal_in_class(op, first)
                    && is_minimal_in_class(op, second)
            }
            Witness::NonInterval { class_value } => {
                let members: Vec<SubsetMask> = op
                    .ground()
                    .masks_numeric()
                    .filter(|&m| op.image(m) == class_value)
                    .collect();
                !members.is_empty() && !class_is_interval(&members)
            }
        }
    }

    /// Renders the witness with element labels, mirroring how the violated
    /// condition is usually written.
    pub fn render(&self, op: &OperatorTable) -> String {
        let g = op.ground();
        let s = op.kind().symbol();
        let f = |m: SubsetMask| g.format_set(m);
        match *self {
            Witness::C1 { set } => {
                format!("X={} ⊄ {s}(X)={}", f(set), f(op.image(set)))
            }
            Witness::C2 { lower, upper } => format!(
                "X={} ⊆ Y={} but {s}(X)={} ⊄ {s}(Y)={}",
                f(lower),
                f(upper),
                f(op.image(lower)),
                f(op.image(upper))
            ),
            Witness::C3 { set } => format!(
                "{s}({s}(X)) ≠ {s}(X) for X={}: {s}(X)={}, {s}({s}(X))={}",
                f(set),
                f(op.image(set)),
                f(op.image(op.image(set)))
            ),
            Witness::C22 { lower, upper } => format!(
                "F={} ⊆ G={} ⊆ {s}(F)={} but {s}(G)={} ≠ {s}(F)",
                f(lower),
                f(upper),
                f(op.image(lower)),
                f(op.image(upper))
            ),
            Witness::Convexity { lower, mid, upper } => format!(
                "X={} ⊆ Y={} ⊆ Z={} with {s}(X)={s}(Z)={} but {s}(Y)={}",
                f(lower),
                f(mid),
                f(upper),
                f(op.image(lower)),
                f(op.image(mid))
            ),
            Witness::AntiExchange { set, p, q } => format!(
                "X={}, p={}, q={}: p,q ∉ {s}(X)={} yet p ∈ {s}(X∪q)={} and q ∈ {s}(X∪p)={}",
                f(set),
                g.label(p),
                g.label(q),
                f(op.image(set)),
                f(op.image(set.insert(q))),
                f(op.image(set.insert(p)))
            ),
            Witness::Consistency { set } => format!(
                "G={} ∩ {s}(G)={} = {} ≠ ∅",
                f(set),
                f(op.image(set)),
                f(set.intersection(op.image(set)))
            ),
            Witness::Locality { lower, upper } => format!(
                "F={} ⊆ G={} with G ∩ {s}(F) = ∅ but {s}(G)={} ≠ {s}(F)={}",
                f(lower),
                f(upper),
                f(op.image(upper)),
                f(op.image(lower))
            ),
            Witness::TwoBases { set, first, second } => format!(
                "X={} has two bases B1={} and B2={}",
                f(set),
                f(first),
                f(second)
            ),
            Witness::NonInterval { class_value } => {
                let members: Vec<String> = op
                    .ground()
                    .subsets()
                    .filter(|&m| op.image(m) == class_value)
                    .map(f)
                    .collect();
                format!(
                    "class of value {} with members {} is not an interval",
                    f(class_value),
                    members.join(", ")
                )
            }
        }
    }
}

/// Outcome of a decidable check: pass, or fail with evidence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict<W = Witness> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    pub fn from_violation(v: Option<W>) -> Self {
        match v {
            None => Verdict::Pass,
            Some(w) => Verdict::Fail(w),
        }
    }
}

/// A failed theorem-level check: a biconditional or derived property whose
/// sides disagree on this table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremViolation {
    /// Identifier of the violated proposition.
    pub proposition: &'static str,
    /// The subsets at which the disagreement was observed, in the order the
    /// statement mentions them.
    pub sets: Vec<SubsetMask>,
    /// Rendered explanation with element labels.
    pub detail: String,
}

fn is_minimal_in_class(op: &OperatorTable, member: SubsetMask) -> bool {
    let value = op.image(member);
    op.ground()
        .masks_numeric()
        .all(|m| !(op.image(m) == value && m != member && m.is_subset_of(member)))
}

/// A set family is an interval iff it holds exactly the sets between its
/// intersection and its union.
pub(crate) fn class_is_interval(members: &[SubsetMask]) -> bool {
    let lower = members
        .iter()
        .fold(members[0], |acc, &m| acc.intersection(m));
    let upper = members
        .iter()
        .fold(SubsetMask::EMPTY, |acc, &m| acc.union(m));
    members.len() == 1 << (upper.card() - lower.card())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;

    #[test]
    fn c1_witness_replays() {
        // τ({1}) = ∅ on a one-element ground set
        let g = GroundSet::numbered(1).unwrap();
        let t = OperatorTable::from_fn(g, OperatorKind::Tau, |_| SubsetMask::EMPTY).unwrap();
        let w = Witness::C1 {
            set: SubsetMask::from_bits(1),
        };
        assert!(w.replay(&t));
        let ok = OperatorTable::identity(GroundSet::numbered(1).unwrap());
        assert!(!w.replay(&ok));
    }

    #[test]
    fn interval_recognition() {
        let m = |b: u16| SubsetMask::from_bits(b);
        assert!(class_is_interval(&[m(0b01), m(0b11), m(0b101), m(0b111)]));
        assert!(class_is_interval(&[m(0b1)]));
        // {∅, {1}, {2}} misses {1,2}
        assert!(!class_is_interval(&[m(0b00), m(0b01), m(0b10)]));
    }
}
