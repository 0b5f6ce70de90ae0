//! Decidable axiom checks with witness extraction, and the space classifier.
//!
//! Every check enumerates its quantifier domain exhaustively in canonical
//! subset order and returns the first violation found, so witnesses are
//! stable fixtures. Checks assume nothing about the table beyond its kind.
//!
//! Class vocabulary used throughout the crate:
//! - closure space: C1 ∧ C2 ∧ C3
//! - violator space: C1 ∧ C22 in τ-form, consistency ∧ locality in V-form
//! - convex space: C1 ∧ the sandwich property (equal images at the ends of a
//!   chain force the same image in between)
//! - convex geometry: closure space ∧ anti-exchange

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::duality::{as_tau, as_violator};
use crate::error::{Error, Result};
use crate::table::{OperatorKind, OperatorTable};
use crate::witness::{Verdict, Witness};

/// Identifiers for the eight checkable axioms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Axiom {
    C1,
    C2,
    C3,
    C22,
    Convexity,
    AntiExchange,
    Consistency,
    Locality,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::C1,
        Axiom::C2,
        Axiom::C3,
        Axiom::C22,
        Axiom::Convexity,
        Axiom::AntiExchange,
        Axiom::Consistency,
        Axiom::Locality,
    ];

    /// Runs this axiom's check on the matching form of `op`.
    pub fn check(self, op: &OperatorTable) -> Result<Verdict> {
        match self {
            Axiom::C1 => check_c1(op),
            Axiom::C2 => check_c2(op),
            Axiom::C3 => check_c3(op),
            Axiom::C22 => check_c22(op),
            Axiom::Convexity => check_convexity(op),
            Axiom::AntiExchange => check_anti_exchange(op),
            Axiom::Consistency => check_consistency(op),
            Axiom::Locality => check_locality(op),
        }
    }

    /// Which table form the axiom is stated on.
    pub fn kind(self) -> OperatorKind {
        match self {
            Axiom::Consistency | Axiom::Locality => OperatorKind::Violator,
            _ => OperatorKind::Tau,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::C22 => "C22",
            Axiom::Convexity => "convexity",
            Axiom::AntiExchange => "anti-exchange",
            Axiom::Consistency => "consistency",
            Axiom::Locality => "locality",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c1" => Ok(Axiom::C1),
            "c2" => Ok(Axiom::C2),
            "c3" => Ok(Axiom::C3),
            "c22" => Ok(Axiom::C22),
            "convexity" => Ok(Axiom::Convexity),
            "anti-exchange" | "antiexchange" => Ok(Axiom::AntiExchange),
            "consistency" => Ok(Axiom::Consistency),
            "locality" => Ok(Axiom::Locality),
            other => Err(Error::UnknownAxiom(other.to_string())),
        }
    }
}

/// X ⊆ τ(X) for all X.
pub fn check_c1(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Tau)?;
    for x in op.ground().subsets() {
        if !x.is_subset_of(op.image(x)) {
            return Ok(Verdict::Fail(Witness::C1 { set: x }));
        }
    }
    Ok(Verdict::Pass)
}

/// X ⊆ Y implies τ(X) ⊆ τ(Y).
pub fn check_c2(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Tau)?;
    for x in op.ground().subsets() {
        for y in op.ground().subsets() {
            if x.is_subset_of(y) && !op.image(x).is_subset_of(op.image(y)) {
                return Ok(Verdict::Fail(Witness::C2 { lower: x, upper: y }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// τ(τ(X)) = τ(X) for all X.
pub fn check_c3(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Tau)?;
    for x in op.ground().subsets() {
        if op.image(op.image(x)) != op.image(x) {
            return Ok(Verdict::Fail(Witness::C3 { set: x }));
        }
    }
    Ok(Verdict::Pass)
}

/// F ⊆ G ⊆ τ(F) implies τ(G) = τ(F).
pub fn check_c22(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Tau)?;
    for f in op.ground().subsets() {
        let closed = op.image(f);
        for g in op.ground().subsets() {
            if f.is_subset_of(g) && g.is_subset_of(closed) && op.image(g) != closed {
                return Ok(Verdict::Fail(Witness::C22 { lower: f, upper: g }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// X ⊆ Y ⊆ Z and τ(X) = τ(Z) imply τ(Y) = τ(X).
///
/// Checked in the pairwise form: for every pair X ⊆ Z with equal images,
/// every Y in between must share the image.
pub fn check_convexity(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Tau)?;
    Ok(Verdict::from_violation(chain_violation(op)))
}

/// Shared by τ-form convexity and V-form monotonicity: first chain
/// X ⊆ Y ⊆ Z with equal images at the ends and a deviating middle.
fn chain_violation(op: &OperatorTable) -> Option<Witness> {
    for x in op.ground().subsets() {
        for z in op.ground().subsets() {
            if !(x.is_subset_of(z) && op.image(x) == op.image(z)) {
                continue;
            }
            for y in op.ground().subsets() {
                if x.is_subset_of(y) && y.is_subset_of(z) && op.image(y) != op.image(x) {
                    return Some(Witness::Convexity {
                        lower: x,
                        mid: y,
                        upper: z,
                    });
                }
            }
        }
    }
    None
}

/// p,q ∉ τ(X) and p ∈ τ(X∪q) forbid q ∈ τ(X∪p).
pub fn check_anti_exchange(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Tau)?;
    let n = op.ground().len();
    for x in op.ground().subsets() {
        let closed = op.image(x);
        for p in 0..n {
            if closed.contains(p) {
                continue;
            }
            for q in (p + 1)..n {
                if closed.contains(q) {
                    continue;
                }
                if op.image(x.insert(q)).contains(p) && op.image(x.insert(p)).contains(q) {
                    return Ok(Verdict::Fail(Witness::AntiExchange { set: x, p, q }));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// G ∩ V(G) = ∅ for all G.
pub fn check_consistency(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Violator)?;
    for g in op.ground().subsets() {
        if !g.intersection(op.image(g)).is_empty() {
            return Ok(Verdict::Fail(Witness::Consistency { set: g }));
        }
    }
    Ok(Verdict::Pass)
}

/// F ⊆ G and G ∩ V(F) = ∅ imply V(G) = V(F).
pub fn check_locality(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Violator)?;
    for f in op.ground().subsets() {
        let vf = op.image(f);
        for g in op.ground().subsets() {
            if f.is_subset_of(g) && g.intersection(vf).is_empty() && op.image(g) != vf {
                return Ok(Verdict::Fail(Witness::Locality { lower: f, upper: g }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// V(F) = V(G) implies V(E) = V(F) for all chains F ⊆ E ⊆ G.
///
/// Must pass on every table satisfying consistency ∧ locality; kept as a
/// cross-check rather than folded into the classifier.
pub fn check_monotonicity(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Violator)?;
    Ok(Verdict::from_violation(chain_violation(op)))
}

/// Derived class flags of a table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpaceClasses {
    pub closure_space: bool,
    pub violator_space: bool,
    pub convex_space: bool,
    pub convex_geometry: bool,
}

impl SpaceClasses {
    /// Compact signature for census counting: the classes that hold, in
    /// implication order, or `"none"`.
    pub fn signature(&self) -> String {
        let mut parts = Vec::new();
        if self.closure_space {
            parts.push("closure");
        }
        if self.violator_space {
            parts.push("violator");
        }
        if self.convex_space {
            parts.push("convex");
        }
        if self.convex_geometry {
            parts.push("geometry");
        }
        if parts.is_empty() {
            "none".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// Full per-axiom report for one table.
///
/// Regardless of the submitted form, τ-axioms are evaluated on the τ-form
/// view and V-axioms on the V-form view, so all eight flags are always
/// present. Witnesses refer to the view named by [`Axiom::kind`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    /// Kind of the table the report was computed from.
    pub kind: OperatorKind,
    pub flags: BTreeMap<Axiom, bool>,
    pub witnesses: BTreeMap<Axiom, Witness>,
    /// Witnesses rendered with element labels, ready for display.
    pub witness_text: BTreeMap<Axiom, String>,
    pub classes: SpaceClasses,
}

impl AxiomReport {
    pub fn passes(&self, axiom: Axiom) -> bool {
        self.flags[&axiom]
    }
}

/// Checks all eight axioms and derives the class flags.
pub fn classify(op: &OperatorTable) -> AxiomReport {
    let tau = as_tau(op);
    let violator = as_violator(op);

    let mut flags = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut witness_text = BTreeMap::new();
    for axiom in Axiom::ALL {
        let view = match axiom.kind() {
            OperatorKind::Tau => &tau,
            OperatorKind::Violator => &violator,
        };
        let verdict = axiom.check(view).expect("view matches axiom kind");
        flags.insert(axiom, verdict.is_pass());
        if let Some(w) = verdict.into_witness() {
            witness_text.insert(axiom, w.render(view));
            witnesses.insert(axiom, w);
        }
    }

    let violator_space = match op.kind() {
        OperatorKind::Tau => flags[&Axiom::C1] && flags[&Axiom::C22],
        OperatorKind::Violator => flags[&Axiom::Consistency] && flags[&Axiom::Locality],
    };
    let closure_space = flags[&Axiom::C1] && flags[&Axiom::C2] && flags[&Axiom::C3];
    let classes = SpaceClasses {
        closure_space,
        violator_space,
        convex_space: flags[&Axiom::C1] && flags[&Axiom::Convexity],
        convex_geometry: closure_space && flags[&Axiom::AntiExchange],
    };
    AxiomReport {
        kind: op.kind(),
        flags,
        witnesses,
        witness_text,
        classes,
    }
}
