//! Exhaustive and seeded-random sweeps over operator tables, and the theorem
//! registry that turns each proposition into a model check.
//!
//! Every registered statement is checked on every table of its universe
//! (all tables with C1, all violator spaces, …) on small ground sets. For
//! genuine theorems the violation list must come back empty; for stated
//! non-implications the sweep must find at least one counterexample, so the
//! expectation is part of the registration.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::{classify, Axiom};
use crate::duality::{as_violator, tau_from_violator};
use crate::error::{Error, Result};
use crate::generators::{
    check_add_lemma, check_expoint, check_extreme_in_generators, check_krein_milman,
    check_union_property, is_uniquely_generated, ExtremeDef,
};
use crate::ground::GroundSet;
use crate::hypercube::{
    classes_as_intervals, enumerate_interval_partitions, equivalence_classes, max_generator,
    operator_from_partition, IntervalCheck, IntervalPartition,
};
use crate::mask::SubsetMask;
use crate::table::{OperatorKind, OperatorTable};
use crate::witness::Verdict;

/// Cap for exhaustive table enumeration; the C1 universe has
/// `2^(Σ_X (n−|X|))` members, 4096 at n = 3 and 2^32 at n = 4.
pub const MAX_SWEEP_GROUND: usize = 3;

/// All τ-tables with X ⊆ τ(X) for every X, each exactly once.
pub fn enumerate_c1_tables(ground: &GroundSet) -> Result<C1Tables> {
    if ground.len() > MAX_SWEEP_GROUND {
        return Err(Error::TooLargeForEnumeration {
            n: ground.len(),
            max: MAX_SWEEP_GROUND,
        });
    }
    // per subset, the admissible images are X ∪ S for S ⊆ complement(X)
    let choices: Vec<Vec<SubsetMask>> = ground
        .masks_numeric()
        .map(|m| {
            ground
                .masks_numeric()
                .filter(|&img| m.is_subset_of(img))
                .collect()
        })
        .collect();
    Ok(C1Tables {
        ground: ground.clone(),
        state: vec![0; choices.len()],
        choices,
        exhausted: false,
    })
}

/// Odometer over the per-subset image choices.
pub struct C1Tables {
    ground: GroundSet,
    choices: Vec<Vec<SubsetMask>>,
    state: Vec<usize>,
    exhausted: bool,
}

impl Iterator for C1Tables {
    type Item = OperatorTable;

    fn next(&mut self) -> Option<OperatorTable> {
        if self.exhausted {
            return None;
        }
        let images: Vec<SubsetMask> = self
            .state
            .iter()
            .zip(&self.choices)
            .map(|(&i, options)| options[i])
            .collect();
        let table = OperatorTable::new(self.ground.clone(), OperatorKind::Tau, images)
            .expect("admissible images are valid");

        // advance the odometer
        self.exhausted = true;
        for (digit, options) in self.state.iter_mut().zip(&self.choices) {
            *digit += 1;
            if *digit < options.len() {
                self.exhausted = false;
                break;
            }
            *digit = 0;
        }
        Some(table)
    }
}

/// How many tables [`enumerate_c1_tables`] will yield.
pub fn c1_universe_size(ground: &GroundSet) -> u64 {
    let n = ground.len() as u32;
    let exponent: u32 = ground.masks_numeric().map(|m| n - m.card()).sum();
    1u64 << exponent
}

/// Attempts per table before a constrained random stream gives up.
const REJECTION_BUDGET: usize = 100_000;

/// Deterministic stream of pseudorandom τ-tables satisfying `constraint`.
///
/// C1 is imposed by direct construction when requested; every other axiom in
/// the constraint is enforced by rejection, with a fixed attempt budget per
/// table. The same seed always yields the same stream.
pub fn random_tables(
    ground: &GroundSet,
    seed: u64,
    count: usize,
    constraint: &[Axiom],
) -> Result<RandomTables> {
    for axiom in constraint {
        if axiom.kind() != OperatorKind::Tau {
            return Err(Error::WrongKind {
                expected: OperatorKind::Tau,
                actual: OperatorKind::Violator,
            });
        }
    }
    Ok(RandomTables {
        ground: ground.clone(),
        rng: ChaCha8Rng::seed_from_u64(seed),
        remaining: count,
        direct_c1: constraint.contains(&Axiom::C1),
        rejection: constraint
            .iter()
            .copied()
            .filter(|&a| a != Axiom::C1)
            .collect(),
    })
}

pub struct RandomTables {
    ground: GroundSet,
    rng: ChaCha8Rng,
    remaining: usize,
    direct_c1: bool,
    rejection: Vec<Axiom>,
}

impl Iterator for RandomTables {
    type Item = OperatorTable;

    fn next(&mut self) -> Option<OperatorTable> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let full = self.ground.full_mask();
        for _ in 0..REJECTION_BUDGET {
            let images: Vec<SubsetMask> = self
                .ground
                .masks_numeric()
                .map(|m| {
                    let noise = SubsetMask::from_bits(self.rng.gen::<u16>()).intersection(full);
                    if self.direct_c1 {
                        m.union(noise)
                    } else {
                        noise
                    }
                })
                .collect();
            let table = OperatorTable::new(self.ground.clone(), OperatorKind::Tau, images)
                .expect("masked noise stays inside the ground set");
            let ok = self.rejection.iter().all(|a| {
                a.check(&table)
                    .expect("τ-form axiom on τ-form table")
                    .is_pass()
            });
            if ok {
                return Some(table);
            }
        }
        panic!(
            "no table satisfying the constraint found within {REJECTION_BUDGET} attempts; \
             the constraint is too sparse for rejection sampling at n={}",
            self.ground.len()
        );
    }
}

/// The family a sweep quantifies over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Universe {
    C1Tables,
    ViolatorSpaces,
    ConvexSpaces,
    ClosureSpaces,
    UgViolatorSpaces,
    IntervalPartitions,
}

impl Universe {
    pub fn descriptor(self) -> &'static str {
        match self {
            Universe::C1Tables => "all tables with C1",
            Universe::ViolatorSpaces => "all violator spaces",
            Universe::ConvexSpaces => "all convex spaces",
            Universe::ClosureSpaces => "all closure spaces",
            Universe::UgViolatorSpaces => "all uniquely generated violator spaces",
            Universe::IntervalPartitions => "all interval partitions",
        }
    }

    fn admits(self, op: &OperatorTable) -> Result<bool> {
        let classes = classify(op).classes;
        Ok(match self {
            Universe::C1Tables => true,
            Universe::ViolatorSpaces => classes.violator_space,
            Universe::ConvexSpaces => classes.convex_space,
            Universe::ClosureSpaces => classes.closure_space,
            Universe::UgViolatorSpaces => {
                classes.violator_space && is_uniquely_generated(op)?.is_pass()
            }
            Universe::IntervalPartitions => unreachable!("partition universes skip table filters"),
        })
    }
}

enum Checker {
    Table(fn(&OperatorTable) -> Result<Option<String>>),
    Partition(fn(&IntervalPartition) -> Result<Option<String>>),
}

/// One registered statement: a universe plus a per-member checker.
pub struct TheoremDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub universe: Universe,
    /// `true` for stated non-implications: the sweep must find at least one
    /// counterexample instead of none.
    pub expect_counterexamples: bool,
    checker: Checker,
}

/// A member of the universe on which the checked statement failed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepViolation {
    /// The table (or partition) as a single-line operator file.
    pub subject: String,
    pub detail: String,
}

/// Outcome of one sweep.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepReport {
    pub theorem: String,
    pub statement: String,
    pub ground_size: usize,
    pub universe: &'static str,
    pub universe_count: u64,
    /// Members of the universe per class signature; sums to `universe_count`.
    pub counts: BTreeMap<String, u64>,
    pub violations: Vec<SweepViolation>,
    pub expect_counterexamples: bool,
}

impl SweepReport {
    /// Did the sweep confirm the registered expectation?
    pub fn conforms(&self) -> bool {
        if self.expect_counterexamples {
            !self.violations.is_empty()
        } else {
            self.violations.is_empty()
        }
    }
}

/// Runs the named sweep over every member of its universe on `ground`.
pub fn run_theorem_sweep(ground: &GroundSet, theorem_id: &str) -> Result<SweepReport> {
    let def = registry()
        .iter()
        .find(|d| d.id == theorem_id)
        .ok_or_else(|| Error::UnknownTheorem(theorem_id.to_string()))?;

    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut universe_count = 0u64;

    match def.checker {
        Checker::Table(check) => {
            for table in enumerate_c1_tables(ground)? {
                if !def.universe.admits(&table)? {
                    continue;
                }
                universe_count += 1;
                *counts
                    .entry(classify(&table).classes.signature())
                    .or_insert(0) += 1;
                if let Some(detail) = check(&table)? {
                    violations.push(SweepViolation {
                        subject: table.to_json_compact(),
                        detail,
                    });
                }
            }
        }
        Checker::Partition(check) => {
            for partition in enumerate_interval_partitions(ground)? {
                universe_count += 1;
                let table = operator_from_partition(&partition);
                *counts
                    .entry(classify(&table).classes.signature())
                    .or_insert(0) += 1;
                if let Some(detail) = check(&partition)? {
                    violations.push(SweepViolation {
                        subject: partition.to_json_compact(),
                        detail,
                    });
                }
            }
        }
    }

    Ok(SweepReport {
        theorem: def.id.to_string(),
        statement: def.statement.to_string(),
        ground_size: ground.len(),
        universe: def.universe.descriptor(),
        universe_count,
        counts,
        violations,
        expect_counterexamples: def.expect_counterexamples,
    })
}

pub fn theorem_ids() -> Vec<&'static str> {
    registry().iter().map(|d| d.id).collect()
}

pub fn theorem_def(id: &str) -> Option<&'static TheoremDef> {
    registry().iter().find(|d| d.id == id)
}

/// Class counts over the full C1 universe on one ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Census {
    pub ground_size: usize,
    pub c1_tables: u64,
    pub closure_spaces: u64,
    pub violator_spaces: u64,
    pub convex_spaces: u64,
    pub convex_geometries: u64,
    pub signature_counts: BTreeMap<String, u64>,
}

pub fn census(ground: &GroundSet) -> Result<Census> {
    let mut out = Census {
        ground_size: ground.len(),
        c1_tables: 0,
        closure_spaces: 0,
        violator_spaces: 0,
        convex_spaces: 0,
        convex_geometries: 0,
        signature_counts: BTreeMap::new(),
    };
    for table in enumerate_c1_tables(ground)? {
        let classes = classify(&table).classes;
        out.c1_tables += 1;
        out.closure_spaces += classes.closure_space as u64;
        out.violator_spaces += classes.violator_space as u64;
        out.convex_spaces += classes.convex_space as u64;
        out.convex_geometries += classes.convex_geometry as u64;
        *out.signature_counts.entry(classes.signature()).or_insert(0) += 1;
    }
    Ok(out)
}

fn registry() -> &'static [TheoremDef] {
    static REGISTRY: std::sync::OnceLock<Vec<TheoremDef>> = std::sync::OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

fn build_registry() -> Vec<TheoremDef> {
    let table = |id, statement, universe, expect, f| TheoremDef {
        id,
        statement,
        universe,
        expect_counterexamples: expect,
        checker: Checker::Table(f),
    };
    vec![
        table(
            "c2c3-implies-c22",
            "C2 and C3 imply C22",
            Universe::C1Tables,
            false,
            |op| {
                premise_conclusion(
                    op,
                    &[Axiom::C2, Axiom::C3],
                    Axiom::C22,
                )
            },
        ),
        table(
            "c1c22-implies-c3",
            "C1 and C22 imply C3",
            Universe::C1Tables,
            false,
            |op| premise_conclusion(op, &[Axiom::C22], Axiom::C3),
        ),
        table(
            "convexity-c3-implies-c22",
            "convexity and C3 imply C22",
            Universe::C1Tables,
            false,
            |op| {
                premise_conclusion(
                    op,
                    &[Axiom::Convexity, Axiom::C3],
                    Axiom::C22,
                )
            },
        ),
        table(
            "c1c22-implies-convexity",
            "C1 and C22 imply convexity",
            Universe::C1Tables,
            false,
            |op| premise_conclusion(op, &[Axiom::C22], Axiom::Convexity),
        ),
        table(
            "c1-convexity-implies-c22",
            "C1 and convexity do NOT imply C22",
            Universe::C1Tables,
            true,
            |op| premise_conclusion(op, &[Axiom::Convexity], Axiom::C22),
        ),
        table(
            "uniquegen-iff-antiexchange",
            "a violator space is uniquely generated iff it satisfies anti-exchange",
            Universe::ViolatorSpaces,
            false,
            |op| {
                let unique = is_uniquely_generated(op)?.is_pass();
                let anti = Axiom::AntiExchange.check(op)?.is_pass();
                Ok((unique != anti).then(|| {
                    format!("uniquely_generated={unique} but anti_exchange={anti}")
                }))
            },
        ),
        table(
            "uniquegen-iff-antiexchange-convex",
            "unique generation does NOT force anti-exchange on convex spaces",
            Universe::ConvexSpaces,
            true,
            |op| {
                let unique = is_uniquely_generated(op)?.is_pass();
                let anti = Axiom::AntiExchange.check(op)?.is_pass();
                Ok((unique && !anti)
                    .then(|| "uniquely generated without anti-exchange".to_string()))
            },
        ),
        table(
            "krein-milman-ex",
            "a violator space is uniquely generated iff every set is spanned by its extreme points",
            Universe::ViolatorSpaces,
            false,
            |op| Ok(theorem_detail(check_krein_milman(op, ExtremeDef::Extreme)?)),
        ),
        table(
            "krein-milman-EX",
            "a convex space is uniquely generated iff every set is spanned by its image-change extreme points",
            Universe::ConvexSpaces,
            false,
            |op| {
                Ok(theorem_detail(check_krein_milman(
                    op,
                    ExtremeDef::ClosureCritical,
                )?))
            },
        ),
        table(
            "krein-milman-ex-convex",
            "membership-form extreme points do NOT span every set on uniquely generated convex spaces",
            Universe::ConvexSpaces,
            true,
            |op| Ok(theorem_detail(check_krein_milman(op, ExtremeDef::Extreme)?)),
        ),
        table(
            "extreme-point-forms",
            "the two extreme-point definitions agree on violator spaces",
            Universe::ViolatorSpaces,
            false,
            |op| Ok(theorem_detail(check_expoint(op)?)),
        ),
        table(
            "extreme-point-forms-convex",
            "membership-form extreme points are image-change extreme points on convex spaces",
            Universe::ConvexSpaces,
            false,
            |op| Ok(theorem_detail(check_expoint(op)?)),
        ),
        table(
            "extreme-generators",
            "on violator spaces the extreme points of X equal the intersection of the generators inside X",
            Universe::ViolatorSpaces,
            false,
            |op| Ok(theorem_detail(check_extreme_in_generators(op)?)),
        ),
        table(
            "extreme-generators-convex",
            "on convex spaces the extreme points of X lie in every generator inside X",
            Universe::ConvexSpaces,
            false,
            |op| Ok(theorem_detail(check_extreme_in_generators(op)?)),
        ),
        table(
            "union-property",
            "on violator spaces, equal images are preserved by unions",
            Universe::ViolatorSpaces,
            false,
            |op| Ok(theorem_detail(check_union_property(op)?)),
        ),
        table(
            "union-property-convex",
            "the union property FAILS for some convex space",
            Universe::ConvexSpaces,
            true,
            |op| Ok(theorem_detail(check_union_property(op)?)),
        ),
        table(
            "add-lemma",
            "on violator spaces, x ∉ τ(A) iff τ(A) ≠ τ(A∪x)",
            Universe::ViolatorSpaces,
            false,
            |op| Ok(theorem_detail(check_add_lemma(op)?)),
        ),
        table(
            "monotonicity",
            "the V-form of a violator space satisfies chain monotonicity",
            Universe::ViolatorSpaces,
            false,
            |op| {
                let v = as_violator(op);
                Ok(crate::axioms::check_monotonicity(&v)?
                    .into_witness()
                    .map(|w| w.render(&v)))
            },
        ),
        table(
            "unique-basis-containment",
            "unique generation is equivalent to bases being contained in all generators",
            Universe::C1Tables,
            false,
            |op| Ok(theorem_detail(crate::generators::check_u1(op)?)),
        ),
        table(
            "unique-generation-intersection",
            "on convex spaces, unique generation, intersection-closure of classes, and basis-equals-intersection agree",
            Universe::ConvexSpaces,
            false,
            |op| Ok(theorem_detail(crate::generators::check_uq_intersection(op)?)),
        ),
        table(
            "hypercube-partition",
            "the classes of a uniquely generated violator space form an interval partition [basis, image]",
            Universe::UgViolatorSpaces,
            false,
            check_hypercube_partition,
        ),
        table(
            "convex-maxgen-partition",
            "a uniquely generated convex space with unique maximal generators has interval classes [basis, max generator]",
            Universe::ConvexSpaces,
            false,
            check_convex_maxgen_partition,
        ),
        table(
            "closure-to-violator",
            "complementing a closure operator yields a consistent, local violator mapping",
            Universe::ClosureSpaces,
            false,
            |op| {
                let v = as_violator(op);
                let consistency = Axiom::Consistency.check(&v)?;
                let locality = Axiom::Locality.check(&v)?;
                Ok(match (consistency.into_witness(), locality.into_witness()) {
                    (None, None) => None,
                    (Some(w), _) | (_, Some(w)) => Some(w.render(&v)),
                })
            },
        ),
        table(
            "violator-to-closure",
            "complementing a consistent, local violator mapping yields an operator with C1, C22 and C3",
            Universe::ViolatorSpaces,
            false,
            |op| {
                // the universe is kept in τ-form; round-trip through V-form
                let t = tau_from_violator(&as_violator(op))?;
                if t != *op {
                    return Ok(Some("double complement is not the identity".to_string()));
                }
                for axiom in [Axiom::C1, Axiom::C22, Axiom::C3] {
                    if let Some(w) = axiom.check(&t)?.into_witness() {
                        return Ok(Some(w.render(&t)));
                    }
                }
                Ok(None)
            },
        ),
        table(
            "consistency-locality-iff-c1c22",
            "consistency and locality of the V-form are equivalent to C1 and C22 of the τ-form",
            Universe::C1Tables,
            false,
            |op| {
                let v = as_violator(op);
                let tau_side =
                    Axiom::C1.check(op)?.is_pass() && Axiom::C22.check(op)?.is_pass();
                let v_side = Axiom::Consistency.check(&v)?.is_pass()
                    && Axiom::Locality.check(&v)?.is_pass();
                Ok((tau_side != v_side).then(|| {
                    format!("τ-form C1∧C22 = {tau_side} but V-form consistency∧locality = {v_side}")
                }))
            },
        ),
        TheoremDef {
            id: "partition-to-space",
            statement:
                "every interval partition is the class partition of a uniquely generated violator space",
            universe: Universe::IntervalPartitions,
            expect_counterexamples: false,
            checker: Checker::Partition(check_partition_to_space),
        },
    ]
}

/// Violation when all premises pass but the conclusion fails.
fn premise_conclusion(
    op: &OperatorTable,
    premises: &[Axiom],
    conclusion: Axiom,
) -> Result<Option<String>> {
    for p in premises {
        if !p.check(op)?.is_pass() {
            return Ok(None);
        }
    }
    Ok(conclusion
        .check(op)?
        .into_witness()
        .map(|w| format!("{conclusion} fails: {}", w.render(op))))
}

fn theorem_detail(verdict: Verdict<crate::witness::TheoremViolation>) -> Option<String> {
    verdict.into_witness().map(|v| v.detail)
}

fn check_hypercube_partition(op: &OperatorTable) -> Result<Option<String>> {
    let partition = match classes_as_intervals(op)? {
        IntervalCheck::Partition(p) => p,
        IntervalCheck::NonInterval(w) => return Ok(Some(w.render(op))),
    };
    // intervals must be [unique basis, image value], and rebuilding the
    // operator from them must reproduce the table
    for class in equivalence_classes(op)? {
        let basis = class
            .members
            .iter()
            .fold(class.members[0], |acc, &m| acc.intersection(m));
        let found = partition
            .intervals()
            .iter()
            .find(|iv| iv.contains(class.members[0]))
            .expect("partition covers every subset");
        if found.lower() != basis || found.upper() != class.value {
            return Ok(Some(format!(
                "class of value {} is the interval [{}, {}], not [basis, value]",
                op.ground().format_set(class.value),
                op.ground().format_set(found.lower()),
                op.ground().format_set(found.upper()),
            )));
        }
    }
    if operator_from_partition(&partition) != *op {
        return Ok(Some(
            "rebuilding the operator from its class partition does not reproduce it".to_string(),
        ));
    }
    Ok(None)
}

fn check_convex_maxgen_partition(op: &OperatorTable) -> Result<Option<String>> {
    if !is_uniquely_generated(op)?.is_pass() {
        return Ok(None);
    }
    for x in op.ground().subsets() {
        if max_generator(op, x)?.is_none() {
            return Ok(None);
        }
    }
    // precondition holds: classes must be intervals [basis, max generator]
    let partition = match classes_as_intervals(op)? {
        IntervalCheck::Partition(p) => p,
        IntervalCheck::NonInterval(w) => return Ok(Some(w.render(op))),
    };
    for class in equivalence_classes(op)? {
        let basis = class
            .members
            .iter()
            .fold(class.members[0], |acc, &m| acc.intersection(m));
        let gmax = max_generator(op, class.members[0])?.expect("checked above");
        let found = partition
            .intervals()
            .iter()
            .find(|iv| iv.contains(class.members[0]))
            .expect("partition covers every subset");
        if found.lower() != basis || found.upper() != gmax {
            return Ok(Some(format!(
                "class of value {} is not [basis, max generator]",
                op.ground().format_set(class.value)
            )));
        }
    }
    Ok(None)
}

fn check_partition_to_space(p: &IntervalPartition) -> Result<Option<String>> {
    let op = operator_from_partition(p);
    let report = classify(&op);
    if !report.classes.violator_space {
        return Ok(Some(
            "constructed table is not a violator space".to_string(),
        ));
    }
    if !is_uniquely_generated(&op)?.is_pass() {
        return Ok(Some(
            "constructed table is not uniquely generated".to_string(),
        ));
    }
    match classes_as_intervals(&op)? {
        IntervalCheck::Partition(q) if q == *p => Ok(None),
        IntervalCheck::Partition(_) => Ok(Some(
            "constructed table's classes do not reproduce the partition".to_string(),
        )),
        IntervalCheck::NonInterval(w) => Ok(Some(w.render(&op))),
    }
}
