//! Equivalence classes of subsets under equal images, interval partitions of
//! the subset lattice, and the translation between partitions and operators.
//!
//! Intervals are tested purely by mask arithmetic: a class is an interval iff
//! it holds exactly the subsets between its intersection and its union.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::mask::SubsetMask;
use crate::table::{OperatorKind, OperatorTable};
use crate::witness::{class_is_interval, TheoremViolation, Verdict, Witness};

/// One equivalence class: the common image value and every subset mapping to
/// it. `members` is in canonical order; the class may be empty of structure
/// but never empty of members.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivClass {
    pub value: SubsetMask,
    pub members: Vec<SubsetMask>,
}

/// All subsets grouped by image value, classes ordered canonically by value.
pub fn equivalence_classes(op: &OperatorTable) -> Result<Vec<EquivClass>> {
    op.require_kind(OperatorKind::Tau)?;
    let mut classes: Vec<EquivClass> = Vec::new();
    for m in op.ground().subsets() {
        let value = op.image(m);
        match classes.iter_mut().find(|c| c.value == value) {
            Some(c) => c.members.push(m),
            None => classes.push(EquivClass {
                value,
                members: vec![m],
            }),
        }
    }
    classes.sort_by_key(|c| c.value.canonical_key());
    Ok(classes)
}

/// The interval `[lower, upper]` of all subsets between the two bounds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Interval {
    lower: SubsetMask,
    upper: SubsetMask,
}

impl Interval {
    pub fn new(lower: SubsetMask, upper: SubsetMask, ground: &GroundSet) -> Result<Self> {
        if !lower.is_subset_of(upper) {
            return Err(Error::BadInterval {
                lower: ground.format_set(lower),
                upper: ground.format_set(upper),
            });
        }
        Ok(Interval { lower, upper })
    }

    pub fn lower(&self) -> SubsetMask {
        self.lower
    }

    pub fn upper(&self) -> SubsetMask {
        self.upper
    }

    pub fn contains(&self, m: SubsetMask) -> bool {
        self.lower.is_subset_of(m) && m.is_subset_of(self.upper)
    }

    /// Number of subsets in the interval, `2^(|upper|−|lower|)`.
    pub fn len(&self) -> usize {
        1 << (self.upper.card() - self.lower.card())
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A partition of all of `2^E` into pairwise disjoint intervals.
///
/// Validated on construction: intervals must not overlap and must cover
/// every subset. Intervals are kept sorted canonically by lower endpoint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalPartition {
    ground: GroundSet,
    intervals: Vec<Interval>,
}

impl IntervalPartition {
    pub fn new(ground: GroundSet, mut intervals: Vec<Interval>) -> Result<Self> {
        let mut owner: Vec<Option<usize>> = vec![None; ground.subset_count()];
        for (idx, iv) in intervals.iter().enumerate() {
            for m in ground.masks_numeric() {
                if iv.contains(m) {
                    let slot = &mut owner[m.bits() as usize];
                    if slot.is_some() {
                        return Err(Error::PartitionOverlap(ground.format_set(m)));
                    }
                    *slot = Some(idx);
                }
            }
        }
        for m in ground.masks_numeric() {
            if owner[m.bits() as usize].is_none() {
                return Err(Error::PartitionGap(ground.format_set(m)));
            }
        }
        intervals.sort_by_key(|iv| iv.lower().canonical_key());
        Ok(IntervalPartition { ground, intervals })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Parses the partition file format:
    /// `{ "ground": [...], "intervals": [ {"lower": [...], "upper": [...]}, ... ] }`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: PartitionFile = serde_json::from_str(text)?;
        let ground = GroundSet::new(file.ground)?;
        let mut intervals = Vec::with_capacity(file.intervals.len());
        for entry in &file.intervals {
            let lower = ground.parse_set(&entry.lower)?;
            let upper = ground.parse_set(&entry.upper)?;
            intervals.push(Interval::new(lower, upper, &ground)?);
        }
        IntervalPartition::new(ground, intervals)
    }

    pub fn to_json(&self) -> String {
        let file = PartitionFile {
            ground: self.ground.labels().to_vec(),
            intervals: self
                .intervals
                .iter()
                .map(|iv| IntervalEntry {
                    lower: self.ground.set_labels(iv.lower()),
                    upper: self.ground.set_labels(iv.upper()),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("partition serialization cannot fail")
    }

    pub fn to_json_compact(&self) -> String {
        let file = PartitionFile {
            ground: self.ground.labels().to_vec(),
            intervals: self
                .intervals
                .iter()
                .map(|iv| IntervalEntry {
                    lower: self.ground.set_labels(iv.lower()),
                    upper: self.ground.set_labels(iv.upper()),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("partition serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionFile {
    ground: Vec<String>,
    intervals: Vec<IntervalEntry>,
}

#[derive(Serialize, Deserialize)]
struct IntervalEntry {
    lower: Vec<String>,
    upper: Vec<String>,
}

/// Result of trying to read the equivalence classes as an interval partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IntervalCheck {
    /// Every class is an interval; the resulting partition.
    Partition(IntervalPartition),
    /// Some class is not an interval; the witness names its image value.
    NonInterval(Witness),
}

/// Reads the equivalence classes of `op` as intervals, if they all are.
///
/// For a uniquely generated violator space the intervals come out as
/// `[unique basis, image value]`; the first class (canonically by value) that
/// is not an interval aborts the translation.
pub fn classes_as_intervals(op: &OperatorTable) -> Result<IntervalCheck> {
    let classes = equivalence_classes(op)?;
    let mut intervals = Vec::with_capacity(classes.len());
    for class in &classes {
        if !class_is_interval(&class.members) {
            return Ok(IntervalCheck::NonInterval(Witness::NonInterval {
                class_value: class.value,
            }));
        }
        let lower = class
            .members
            .iter()
            .fold(class.members[0], |acc, &m| acc.intersection(m));
        let upper = class
            .members
            .iter()
            .fold(SubsetMask::EMPTY, |acc, &m| acc.union(m));
        intervals.push(Interval::new(lower, upper, op.ground())?);
    }
    Ok(IntervalCheck::Partition(IntervalPartition::new(
        op.ground().clone(),
        intervals,
    )?))
}

/// The unique inclusion-maximal generator of `x`'s class, when it exists.
///
/// A class has a unique maximal member exactly when the union of its members
/// is itself a member; the union is then that maximal member.
pub fn max_generator(op: &OperatorTable, x: SubsetMask) -> Result<Option<SubsetMask>> {
    op.require_kind(OperatorKind::Tau)?;
    let value = op.image(x);
    let union = op
        .ground()
        .masks_numeric()
        .filter(|&m| op.image(m) == value)
        .fold(SubsetMask::EMPTY, |acc, m| acc.union(m));
    Ok((op.image(union) == value).then_some(union))
}

/// τ(X) = τ(Y) implies τ(X∩Y) = τ(X) = τ(X∪Y).
///
/// Holds on every uniquely generated violator space; evaluated on arbitrary
/// τ-tables so that counterexamples (the union side on convex spaces) can be
/// exhibited.
pub fn check_class_lattice_closure(op: &OperatorTable) -> Result<Verdict<TheoremViolation>> {
    op.require_kind(OperatorKind::Tau)?;
    let g = op.ground();
    for x in g.subsets() {
        for y in g.subsets() {
            if x == y || op.image(x) != op.image(y) {
                continue;
            }
            let meet = x.intersection(y);
            if op.image(meet) != op.image(x) {
                return Ok(Verdict::Fail(TheoremViolation {
                    proposition: "class-lattice-closure",
                    sets: vec![x, y],
                    detail: format!(
                        "τ(X)=τ(Y)={} for X={}, Y={} but τ(X∩Y)={}",
                        g.format_set(op.image(x)),
                        g.format_set(x),
                        g.format_set(y),
                        g.format_set(op.image(meet)),
                    ),
                }));
            }
            let join = x.union(y);
            if op.image(join) != op.image(x) {
                return Ok(Verdict::Fail(TheoremViolation {
                    proposition: "class-lattice-closure",
                    sets: vec![x, y],
                    detail: format!(
                        "τ(X)=τ(Y)={} for X={}, Y={} but τ(X∪Y)={}",
                        g.format_set(op.image(x)),
                        g.format_set(x),
                        g.format_set(y),
                        g.format_set(op.image(join)),
                    ),
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Builds the τ-table whose image at X is the upper endpoint of the interval
/// containing X. The partition's invariants guarantee totality.
pub fn operator_from_partition(p: &IntervalPartition) -> OperatorTable {
    let intervals = p.intervals().to_vec();
    OperatorTable::from_fn(p.ground().clone(), OperatorKind::Tau, |m| {
        intervals
            .iter()
            .find(|iv| iv.contains(m))
            .expect("partition covers every subset")
            .upper()
    })
    .expect("partition images lie inside the ground set")
}

/// Cap for exhaustive interval-partition enumeration.
pub const MAX_ENUM_GROUND: usize = 3;

/// Every partition of `2^E` into disjoint intervals, each exactly once.
///
/// Backtracks over the canonically least uncovered subset: that subset must
/// be the lower endpoint of its interval, so trying every admissible upper
/// endpoint generates each partition once. Order is deterministic.
pub fn enumerate_interval_partitions(ground: &GroundSet) -> Result<Vec<IntervalPartition>> {
    if ground.len() > MAX_ENUM_GROUND {
        return Err(Error::TooLargeForEnumeration {
            n: ground.len(),
            max: MAX_ENUM_GROUND,
        });
    }
    let order: Vec<SubsetMask> = ground.subsets().collect();
    let mut covered = vec![false; ground.subset_count()];
    let mut stack: Vec<Interval> = Vec::new();
    let mut out = Vec::new();
    backtrack(ground, &order, &mut covered, &mut stack, &mut out);
    Ok(out)
}

fn backtrack(
    ground: &GroundSet,
    order: &[SubsetMask],
    covered: &mut Vec<bool>,
    stack: &mut Vec<Interval>,
    out: &mut Vec<IntervalPartition>,
) {
    let Some(&lower) = order.iter().find(|m| !covered[m.bits() as usize]) else {
        out.push(
            IntervalPartition::new(ground.clone(), stack.clone())
                .expect("backtracking maintains partition invariants"),
        );
        return;
    };
    // candidate uppers in canonical order, keeping the whole interval free
    for &upper in order {
        if !lower.is_subset_of(upper) {
            continue;
        }
        let cells: Vec<SubsetMask> = ground
            .masks_numeric()
            .filter(|&m| lower.is_subset_of(m) && m.is_subset_of(upper))
            .collect();
        if cells.iter().any(|m| covered[m.bits() as usize]) {
            continue;
        }
        for &m in &cells {
            covered[m.bits() as usize] = true;
        }
        stack.push(Interval { lower, upper });
        backtrack(ground, order, covered, stack, out);
        stack.pop();
        for &m in &cells {
            covered[m.bits() as usize] = false;
        }
    }
}
