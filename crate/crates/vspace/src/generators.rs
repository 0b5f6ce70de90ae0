//! Generators and bases, unique generation, extreme points, and the theorem
//! checks tying them together.
//!
//! A generator of X is any Y with τ(Y) = τ(X); a basis is an
//! inclusion-minimal generator. Generators are *not* restricted to subsets of
//! X by default — [`GeneratorScope`] makes the restriction explicit because
//! the two conventions give different families and the extreme-point results
//! are stated under the restricted one.
//!
//! The `check_*` functions here evaluate biconditionals between whole
//! properties. They enforce only the table kind; the class assumptions under
//! which a statement is a theorem (violator space, convex space, …) are
//! documented per function, so the checks can also be run diagnostically on
//! out-of-class tables where they may legitimately fail.

use crate::error::{Error, Result};
use crate::hypercube::equivalence_classes;
use crate::mask::SubsetMask;
use crate::table::{OperatorKind, OperatorTable};
use crate::witness::{TheoremViolation, Verdict, Witness};

/// Whether generators may range over all of `2^E` or only over subsets of
/// the target set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorScope {
    /// Any Y ⊆ E with τ(Y) = τ(X).
    All,
    /// Only Y ⊆ X with τ(Y) = τ(X).
    WithinTarget,
}

/// All generators and bases of one target set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisFamily {
    pub target: SubsetMask,
    pub closure_value: SubsetMask,
    /// Every generator in scope, canonical order. Always contains `target`.
    pub generators: Vec<SubsetMask>,
    /// The inclusion-minimal generators, canonical order.
    pub bases: Vec<SubsetMask>,
}

/// Enumerates the generators of `x` and extracts the inclusion-minimal ones.
pub fn generators_of(
    op: &OperatorTable,
    x: SubsetMask,
    scope: GeneratorScope,
) -> Result<BasisFamily> {
    op.require_kind(OperatorKind::Tau)?;
    let value = op.image(x);
    let generators: Vec<SubsetMask> = op
        .ground()
        .subsets()
        .filter(|&y| {
            op.image(y) == value
                && match scope {
                    GeneratorScope::All => true,
                    GeneratorScope::WithinTarget => y.is_subset_of(x),
                }
        })
        .collect();
    let bases = minimal_members(&generators);
    Ok(BasisFamily {
        target: x,
        closure_value: value,
        generators,
        bases,
    })
}

fn minimal_members(family: &[SubsetMask]) -> Vec<SubsetMask> {
    family
        .iter()
        .copied()
        .filter(|&y| !family.iter().any(|&z| z != y && z.is_subset_of(y)))
        .collect()
}

/// Every set has exactly one basis.
///
/// On failure, the witness names the first class (in canonical order of
/// first appearance) with two bases; its `set` is the class's image value
/// when that value belongs to the class, otherwise the first member.
pub fn is_uniquely_generated(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Tau)?;
    let mut seen = vec![false; op.ground().subset_count()];
    for x in op.ground().subsets() {
        let value = op.image(x);
        if seen[value.bits() as usize] {
            continue;
        }
        seen[value.bits() as usize] = true;
        let members: Vec<SubsetMask> = op
            .ground()
            .subsets()
            .filter(|&y| op.image(y) == value)
            .collect();
        let minimal = minimal_members(&members);
        if minimal.len() > 1 {
            let set = if members.contains(&value) {
                value
            } else {
                members[0]
            };
            return Ok(Verdict::Fail(Witness::TwoBases {
                set,
                first: minimal[0],
                second: minimal[1],
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// Every set has exactly one basis among its own subsets.
///
/// This is unique generation under the restricted convention where all
/// generators of X are taken inside X. It is implied by the unrestricted
/// notion on every table, and equivalent to it on violator spaces (on convex
/// spaces the two genuinely differ: two unrestricted bases of a class need
/// not share any target set). The spanning theorems checked by
/// [`check_krein_milman`] are stated under this convention.
pub fn is_uniquely_generated_within(op: &OperatorTable) -> Result<Verdict> {
    op.require_kind(OperatorKind::Tau)?;
    for x in op.ground().subsets() {
        let family = generators_of(op, x, GeneratorScope::WithinTarget)?;
        if family.bases.len() > 1 {
            return Ok(Verdict::Fail(Witness::TwoBases {
                set: x,
                first: family.bases[0],
                second: family.bases[1],
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// Unique generation holds iff a basis of each set is contained in every
/// generator of that set. A theorem on all tables; checked side-by-side.
pub fn check_u1(op: &OperatorTable) -> Result<Verdict<TheoremViolation>> {
    op.require_kind(OperatorKind::Tau)?;
    let unique = is_uniquely_generated(op)?.is_pass();
    let mut contained = true;
    let mut offender: Option<(SubsetMask, SubsetMask, SubsetMask)> = None;
    'outer: for class in equivalence_classes(op)? {
        let bases = minimal_members(&class.members);
        for &b in &bases {
            for &y in &class.members {
                if !b.is_subset_of(y) {
                    contained = false;
                    offender = Some((class.value, b, y));
                    break 'outer;
                }
            }
        }
    }
    if unique == contained {
        return Ok(Verdict::Pass);
    }
    let g = op.ground();
    let detail = match offender {
        Some((value, b, y)) => format!(
            "uniquely generated, yet basis {} of the class with value {} is not contained in generator {}",
            g.format_set(b),
            g.format_set(value),
            g.format_set(y)
        ),
        None => "not uniquely generated, yet every basis is contained in every generator".to_string(),
    };
    Ok(Verdict::Fail(TheoremViolation {
        proposition: "unique-basis-containment",
        sets: offender.map(|(v, b, y)| vec![v, b, y]).unwrap_or_default(),
        detail,
    }))
}

/// For convex spaces, unique generation, closure of classes under pairwise
/// intersection, and "the basis is the intersection of all generators" are
/// equivalent; verifies the three-way agreement.
pub fn check_uq_intersection(op: &OperatorTable) -> Result<Verdict<TheoremViolation>> {
    op.require_kind(OperatorKind::Tau)?;
    let unique = is_uniquely_generated(op)?.is_pass();

    let mut meet_closed = true;
    let mut meet_pair: Option<(SubsetMask, SubsetMask)> = None;
    'outer: for x in op.ground().subsets() {
        for y in op.ground().subsets() {
            if x != y && op.image(x) == op.image(y) && op.image(x.intersection(y)) != op.image(x) {
                meet_closed = false;
                meet_pair = Some((x, y));
                break 'outer;
            }
        }
    }

    let mut basis_is_intersection = true;
    for class in equivalence_classes(op)? {
        let inter = class
            .members
            .iter()
            .fold(class.members[0], |acc, &m| acc.intersection(m));
        if minimal_members(&class.members) != vec![inter] {
            basis_is_intersection = false;
            break;
        }
    }

    if unique == meet_closed && meet_closed == basis_is_intersection {
        return Ok(Verdict::Pass);
    }
    let g = op.ground();
    Ok(Verdict::Fail(TheoremViolation {
        proposition: "unique-generation-intersection",
        sets: meet_pair.map(|(x, y)| vec![x, y]).unwrap_or_default(),
        detail: format!(
            "sides disagree: uniquely_generated={unique}, intersection_stays_in_class={meet_closed}, basis_equals_intersection={basis_is_intersection}{}",
            meet_pair
                .map(|(x, y)| format!(" (first intersection failure at X={}, Y={})", g.format_set(x), g.format_set(y)))
                .unwrap_or_default()
        ),
    }))
}

/// x ∉ τ(A) iff τ(A) ≠ τ(A ∪ x); a theorem on violator spaces.
pub fn check_add_lemma(op: &OperatorTable) -> Result<Verdict<TheoremViolation>> {
    op.require_kind(OperatorKind::Tau)?;
    let g = op.ground();
    for a in g.subsets() {
        let closed = op.image(a);
        for x in 0..g.len() {
            let outside = !closed.contains(x);
            let changes = op.image(a.insert(x)) != closed;
            if outside != changes {
                return Ok(Verdict::Fail(TheoremViolation {
                    proposition: "add-lemma",
                    sets: vec![a, SubsetMask::singleton(x)],
                    detail: format!(
                        "A={}, x={}: x ∉ τ(A) is {} but τ(A) ≠ τ(A∪x) is {}",
                        g.format_set(a),
                        g.label(x),
                        outside,
                        changes
                    ),
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// The two extreme-point sets of one target set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExtremeSets {
    /// Points x ∈ A with x ∉ τ(A − x).
    pub extreme: SubsetMask,
    /// Points x ∈ A whose removal changes the image: τ(A) ≠ τ(A − x).
    pub closure_critical: SubsetMask,
}

/// Which extreme-point definition a check should use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtremeDef {
    /// Membership form, x ∉ τ(A − x).
    Extreme,
    /// Image-change form, τ(A) ≠ τ(A − x).
    ClosureCritical,
}

pub fn extreme_points(op: &OperatorTable, a: SubsetMask) -> Result<ExtremeSets> {
    op.require_kind(OperatorKind::Tau)?;
    let mut extreme = SubsetMask::EMPTY;
    let mut closure_critical = SubsetMask::EMPTY;
    for x in a.members() {
        let rest = op.image(a.remove(x));
        if !rest.contains(x) {
            extreme = extreme.insert(x);
        }
        if rest != op.image(a) {
            closure_critical = closure_critical.insert(x);
        }
    }
    Ok(ExtremeSets {
        extreme,
        closure_critical,
    })
}

/// The two extreme-point definitions agree on violator spaces and satisfy
/// strict one-way inclusion on convex spaces.
///
/// The table's class decides the mode: violator spaces are held to equality,
/// convex (non-violator) spaces to inclusion. Any other table is rejected.
pub fn check_expoint(op: &OperatorTable) -> Result<Verdict<TheoremViolation>> {
    op.require_kind(OperatorKind::Tau)?;
    let equality = required_equality_mode(op)?;
    let g = op.ground();
    for a in g.subsets() {
        let sets = extreme_points(op, a)?;
        let ok = if equality {
            sets.extreme == sets.closure_critical
        } else {
            sets.extreme.is_subset_of(sets.closure_critical)
        };
        if !ok {
            return Ok(Verdict::Fail(TheoremViolation {
                proposition: "extreme-point-forms",
                sets: vec![a],
                detail: format!(
                    "A={}: membership-form extreme set {} vs image-change form {}",
                    g.format_set(a),
                    g.format_set(sets.extreme),
                    g.format_set(sets.closure_critical)
                ),
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// On violator spaces the extreme points of X are exactly the intersection
/// of all generators of X contained in X; on convex spaces only the
/// inclusion holds. Mode selection as in [`check_expoint`].
pub fn check_extreme_in_generators(op: &OperatorTable) -> Result<Verdict<TheoremViolation>> {
    op.require_kind(OperatorKind::Tau)?;
    let equality = required_equality_mode(op)?;
    let g = op.ground();
    for x in g.subsets() {
        let family = generators_of(op, x, GeneratorScope::WithinTarget)?;
        // the family always contains x, so x is the identity of the fold
        let inter = family
            .generators
            .iter()
            .fold(x, |acc, &m| acc.intersection(m));
        let extreme = extreme_points(op, x)?.extreme;
        let ok = if equality {
            extreme == inter
        } else {
            extreme.is_subset_of(inter)
        };
        if !ok {
            return Ok(Verdict::Fail(TheoremViolation {
                proposition: "extreme-generators",
                sets: vec![x],
                detail: format!(
                    "X={}: extreme points {} vs intersection of within-X generators {}",
                    g.format_set(x),
                    g.format_set(extreme),
                    g.format_set(inter)
                ),
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// Unique generation holds iff τ(X) = τ(ext(X)) for every X, where `ext` is
/// the chosen extreme-point definition.
///
/// Unique generation is taken in the within-target sense of
/// [`is_uniquely_generated_within`]; the spanning statements are theorems
/// under that convention — with [`ExtremeDef::Extreme`] on violator spaces
/// (where the two senses coincide), with [`ExtremeDef::ClosureCritical`] on
/// convex spaces. Run elsewhere, the check reports how the biconditional
/// breaks.
pub fn check_krein_milman(
    op: &OperatorTable,
    def: ExtremeDef,
) -> Result<Verdict<TheoremViolation>> {
    op.require_kind(OperatorKind::Tau)?;
    let unique = is_uniquely_generated_within(op)?.is_pass();
    let g = op.ground();
    let mut spanned = true;
    let mut offender: Option<SubsetMask> = None;
    for x in g.subsets() {
        let sets = extreme_points(op, x)?;
        let ext = match def {
            ExtremeDef::Extreme => sets.extreme,
            ExtremeDef::ClosureCritical => sets.closure_critical,
        };
        if op.image(ext) != op.image(x) {
            spanned = false;
            offender = Some(x);
            break;
        }
    }
    if unique == spanned {
        return Ok(Verdict::Pass);
    }
    let detail = match offender {
        Some(x) => {
            let sets = extreme_points(op, x)?;
            let ext = match def {
                ExtremeDef::Extreme => sets.extreme,
                ExtremeDef::ClosureCritical => sets.closure_critical,
            };
            format!(
                "uniquely generated but X={} has τ(X)={} ≠ τ(ext(X))={} for ext(X)={}",
                g.format_set(x),
                g.format_set(op.image(x)),
                g.format_set(op.image(ext)),
                g.format_set(ext)
            )
        }
        None => {
            "extreme points span every set, yet the table is not uniquely generated".to_string()
        }
    };
    Ok(Verdict::Fail(TheoremViolation {
        proposition: match def {
            ExtremeDef::Extreme => "krein-milman-ex",
            ExtremeDef::ClosureCritical => "krein-milman-EX",
        },
        sets: offender.map(|x| vec![x]).unwrap_or_default(),
        detail,
    }))
}

/// τ(X) = τ(Y) implies τ(X ∪ Y) = τ(X); a theorem on violator spaces,
/// refutable on convex spaces.
pub fn check_union_property(op: &OperatorTable) -> Result<Verdict<TheoremViolation>> {
    op.require_kind(OperatorKind::Tau)?;
    let g = op.ground();
    for x in g.subsets() {
        for y in g.subsets() {
            if x != y && op.image(x) == op.image(y) && op.image(x.union(y)) != op.image(x) {
                return Ok(Verdict::Fail(TheoremViolation {
                    proposition: "union-property",
                    sets: vec![x, y],
                    detail: format!(
                        "τ(X)=τ(Y)={} for X={}, Y={} but τ(X∪Y)={}",
                        g.format_set(op.image(x)),
                        g.format_set(x),
                        g.format_set(y),
                        g.format_set(op.image(x.union(y)))
                    ),
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Violator spaces are held to equality-form statements, convex spaces to
/// inclusion form; anything else has no guaranteed statement to check.
fn required_equality_mode(op: &OperatorTable) -> Result<bool> {
    let report = crate::axioms::classify(op);
    if report.classes.violator_space {
        Ok(true)
    } else if report.classes.convex_space {
        Ok(false)
    } else {
        Err(Error::PreconditionNotMet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::tau_from_violator;
    use crate::fixtures::Fixture;
    use crate::ground::GroundSet;

    fn ex1_tau() -> OperatorTable {
        tau_from_violator(&Fixture::Ex1.table()).unwrap()
    }

    #[test]
    fn ex1_generators_and_bases_of_13() {
        let t = ex1_tau();
        let g = t.ground().clone();
        let x = g.parse_set(&["1", "3"]).unwrap();
        let family = generators_of(&t, x, GeneratorScope::All).unwrap();
        let sets = |labels: &[&[&str]]| -> Vec<SubsetMask> {
            labels.iter().map(|l| g.parse_set(l).unwrap()).collect()
        };
        assert_eq!(family.generators, sets(&[&["1"], &["3"], &["1", "3"]]));
        assert_eq!(family.bases, sets(&[&["1"], &["3"]]));
        assert_eq!(family.closure_value, x);
    }

    #[test]
    fn constant_operator_bases_are_empty_set() {
        let g = GroundSet::numbered(3).unwrap();
        let t = OperatorTable::constant(g.clone(), OperatorKind::Tau, g.full_mask()).unwrap();
        let family = generators_of(&t, g.parse_set(&["2"]).unwrap(), GeneratorScope::All).unwrap();
        assert_eq!(family.bases, vec![SubsetMask::EMPTY]);
    }

    #[test]
    fn exms_full_set_basis() {
        let t = Fixture::Exms.table();
        let g = t.ground().clone();
        let family = generators_of(&t, g.full_mask(), GeneratorScope::All).unwrap();
        assert_eq!(family.bases, vec![g.parse_set(&["1", "3"]).unwrap()]);
    }

    #[test]
    fn ex1_two_bases_witness() {
        let t = ex1_tau();
        let g = t.ground().clone();
        let w = is_uniquely_generated(&t).unwrap().into_witness().unwrap();
        assert_eq!(
            w,
            Witness::TwoBases {
                set: g.parse_set(&["1", "3"]).unwrap(),
                first: g.parse_set(&["1"]).unwrap(),
                second: g.parse_set(&["3"]).unwrap(),
            }
        );
        assert!(w.replay(&t));
    }

    #[test]
    fn exms_and_identity_are_uniquely_generated() {
        assert!(is_uniquely_generated(&Fixture::Exms.table())
            .unwrap()
            .is_pass());
        let id = OperatorTable::identity(GroundSet::numbered(3).unwrap());
        assert!(is_uniquely_generated(&id).unwrap().is_pass());
    }

    #[test]
    fn within_target_unique_generation_is_strictly_weaker() {
        // τ = id except τ({1}) = τ({2}) = {1,2}, τ({1,2}) = {1,2,3}: every
        // set has a unique basis among its subsets, but the class with value
        // {1,2} has the two unrestricted bases {1} and {2}
        let g = GroundSet::numbered(3).unwrap();
        let pair = g.parse_set(&["1", "2"]).unwrap();
        let full = g.full_mask();
        let t = OperatorTable::from_fn(g.clone(), OperatorKind::Tau, |m| {
            if m == g.parse_set(&["1"]).unwrap() || m == g.parse_set(&["2"]).unwrap() {
                pair
            } else if m == pair {
                full
            } else {
                m
            }
        })
        .unwrap();
        assert!(crate::axioms::classify(&t).classes.convex_space);
        assert!(is_uniquely_generated_within(&t).unwrap().is_pass());
        assert!(!is_uniquely_generated(&t).unwrap().is_pass());
    }

    #[test]
    fn u1_biconditional_on_fixtures() {
        assert!(check_u1(&ex1_tau()).unwrap().is_pass());
        assert!(check_u1(&Fixture::Exms.table()).unwrap().is_pass());
        let id = OperatorTable::identity(GroundSet::numbered(2).unwrap());
        assert!(check_u1(&id).unwrap().is_pass());
    }

    #[test]
    fn uq_intersection_sides_agree_on_fixtures() {
        // amended ex1: all three sides false, so the equivalence holds
        assert!(check_uq_intersection(&ex1_tau()).unwrap().is_pass());
        assert!(check_uq_intersection(&Fixture::Exms.table())
            .unwrap()
            .is_pass());
        let g = GroundSet::numbered(3).unwrap();
        let constant =
            OperatorTable::constant(g.clone(), OperatorKind::Tau, g.full_mask()).unwrap();
        assert!(check_uq_intersection(&constant).unwrap().is_pass());
    }

    #[test]
    fn add_lemma_on_violator_fixtures() {
        assert!(check_add_lemma(&ex1_tau()).unwrap().is_pass());
        let id = OperatorTable::identity(GroundSet::numbered(3).unwrap());
        assert!(check_add_lemma(&id).unwrap().is_pass());
    }

    #[test]
    fn exms_extreme_sets_of_123() {
        let t = Fixture::Exms.table();
        let g = t.ground().clone();
        let a = g.parse_set(&["1", "2", "3"]).unwrap();
        let sets = extreme_points(&t, a).unwrap();
        assert_eq!(sets.extreme, g.parse_set(&["1"]).unwrap());
        assert_eq!(sets.closure_critical, g.parse_set(&["1", "3"]).unwrap());
    }

    #[test]
    fn identity_extreme_sets_are_the_set_itself() {
        let id = OperatorTable::identity(GroundSet::numbered(3).unwrap());
        let a = SubsetMask::from_bits(0b101);
        let sets = extreme_points(&id, a).unwrap();
        assert_eq!(sets.extreme, a);
        assert_eq!(sets.closure_critical, a);
    }

    #[test]
    fn constant_operator_has_no_extreme_points() {
        let g = GroundSet::numbered(3).unwrap();
        let t = OperatorTable::constant(g.clone(), OperatorKind::Tau, g.full_mask()).unwrap();
        let sets = extreme_points(&t, g.full_mask()).unwrap();
        assert_eq!(sets.extreme, SubsetMask::EMPTY);
        assert_eq!(sets.closure_critical, SubsetMask::EMPTY);
    }

    #[test]
    fn expoint_inclusion_on_exms() {
        assert!(check_expoint(&Fixture::Exms.table()).unwrap().is_pass());
    }

    #[test]
    fn extreme_in_generators_on_fixtures() {
        // violator space: equality everywhere, including ex({1,3}) = ∅
        let t = ex1_tau();
        assert!(check_extreme_in_generators(&t).unwrap().is_pass());
        let g = t.ground().clone();
        let x = g.parse_set(&["1", "3"]).unwrap();
        assert_eq!(extreme_points(&t, x).unwrap().extreme, SubsetMask::EMPTY);

        // convex space: inclusion, strict at {1,2,3}
        let exms = Fixture::Exms.table();
        assert!(check_extreme_in_generators(&exms).unwrap().is_pass());
        let ge = exms.ground().clone();
        let a = ge.parse_set(&["1", "2", "3"]).unwrap();
        let family = generators_of(&exms, a, GeneratorScope::WithinTarget).unwrap();
        let inter = family
            .generators
            .iter()
            .fold(a, |acc, &m| acc.intersection(m));
        assert_eq!(inter, ge.parse_set(&["1", "3"]).unwrap());
        assert_eq!(
            extreme_points(&exms, a).unwrap().extreme,
            ge.parse_set(&["1"]).unwrap()
        );
    }

    #[test]
    fn krein_milman_on_exms_both_definitions() {
        let t = Fixture::Exms.table();
        assert!(check_krein_milman(&t, ExtremeDef::ClosureCritical)
            .unwrap()
            .is_pass());
        let v = check_krein_milman(&t, ExtremeDef::Extreme)
            .unwrap()
            .into_witness()
            .unwrap();
        let g = t.ground().clone();
        assert_eq!(v.sets, vec![g.parse_set(&["1", "2", "3"]).unwrap()]);
    }

    #[test]
    fn union_property_fails_on_ex5_1() {
        let t = Fixture::Ex5_1.table();
        let g = t.ground().clone();
        let v = check_union_property(&t).unwrap().into_witness().unwrap();
        assert_eq!(
            v.sets,
            vec![
                g.parse_set(&["1", "2"]).unwrap(),
                g.parse_set(&["1", "3"]).unwrap()
            ]
        );
    }
}
