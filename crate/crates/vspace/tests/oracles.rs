//! Independent re-derivations of the axiom checks.
//!
//! Each axiom is re-implemented here as a naive quantifier loop with no
//! shared code beyond the mask type, and compared against the library on
//! fixtures and on seeded random tables (including tables violating
//! everything). The library's witnesses must also replay.

use proptest::prelude::*;

use vspace::axioms::{classify, Axiom};
use vspace::duality::{as_violator, tau_from_violator, violator_from_tau};
use vspace::enumeration::random_tables;
use vspace::fixtures::Fixture;
use vspace::ground::GroundSet;
use vspace::mask::SubsetMask;
use vspace::table::{OperatorKind, OperatorTable};

fn subsets(op: &OperatorTable) -> Vec<SubsetMask> {
    op.ground().masks_numeric().collect()
}

fn naive_c1(op: &OperatorTable) -> bool {
    subsets(op).iter().all(|&x| x.is_subset_of(op.image(x)))
}

fn naive_c2(op: &OperatorTable) -> bool {
    let all = subsets(op);
    all.iter().all(|&x| {
        all.iter()
            .all(|&y| !x.is_subset_of(y) || op.image(x).is_subset_of(op.image(y)))
    })
}

fn naive_c3(op: &OperatorTable) -> bool {
    subsets(op)
        .iter()
        .all(|&x| op.image(op.image(x)) == op.image(x))
}

fn naive_c22(op: &OperatorTable) -> bool {
    let all = subsets(op);
    all.iter().all(|&f| {
        all.iter().all(|&g| {
            !(f.is_subset_of(g) && g.is_subset_of(op.image(f))) || op.image(g) == op.image(f)
        })
    })
}

fn naive_convexity(op: &OperatorTable) -> bool {
    let all = subsets(op);
    for &x in &all {
        for &y in &all {
            for &z in &all {
                if x.is_subset_of(y)
                    && y.is_subset_of(z)
                    && op.image(x) == op.image(z)
                    && op.image(y) != op.image(x)
                {
                    return false;
                }
            }
        }
    }
    true
}

fn naive_anti_exchange(op: &OperatorTable) -> bool {
    let n = op.ground().len();
    for &x in &subsets(op) {
        for p in 0..n {
            for q in 0..n {
                if p == q || op.image(x).contains(p) || op.image(x).contains(q) {
                    continue;
                }
                if op.image(x.insert(q)).contains(p) && op.image(x.insert(p)).contains(q) {
                    return false;
                }
            }
        }
    }
    true
}

fn naive_consistency(op: &OperatorTable) -> bool {
    subsets(op)
        .iter()
        .all(|&g| g.intersection(op.image(g)).is_empty())
}

fn naive_locality(op: &OperatorTable) -> bool {
    let all = subsets(op);
    all.iter().all(|&f| {
        all.iter().all(|&g| {
            !(f.is_subset_of(g) && g.intersection(op.image(f)).is_empty())
                || op.image(g) == op.image(f)
        })
    })
}

type NaiveCheck = fn(&OperatorTable) -> bool;

fn compare_all(op: &OperatorTable) {
    let tau = match op.kind() {
        OperatorKind::Tau => op.clone(),
        OperatorKind::Violator => tau_from_violator(op).unwrap(),
    };
    let violator = as_violator(op);
    let pairs: [(Axiom, NaiveCheck, &OperatorTable); 8] = [
        (Axiom::C1, naive_c1, &tau),
        (Axiom::C2, naive_c2, &tau),
        (Axiom::C3, naive_c3, &tau),
        (Axiom::C22, naive_c22, &tau),
        (Axiom::Convexity, naive_convexity, &tau),
        (Axiom::AntiExchange, naive_anti_exchange, &tau),
        (Axiom::Consistency, naive_consistency, &violator),
        (Axiom::Locality, naive_locality, &violator),
    ];
    for (axiom, naive, view) in pairs {
        let verdict = axiom.check(view).unwrap();
        assert_eq!(
            verdict.is_pass(),
            naive(view),
            "library and oracle disagree on {axiom}"
        );
        if let Some(w) = verdict.witness() {
            assert!(w.replay(view), "witness for {axiom} does not replay");
        }
    }
}

#[test]
fn oracles_agree_on_fixtures() {
    for fixture in Fixture::ALL {
        compare_all(&fixture.table());
    }
    // anti-exchange on the τ-form of ex1, settled by the oracle
    let tau = tau_from_violator(&Fixture::Ex1.table()).unwrap();
    assert!(!naive_anti_exchange(&tau));
    assert!(!Axiom::AntiExchange.check(&tau).unwrap().is_pass());
    let literal = tau_from_violator(&Fixture::Ex1Literal.table()).unwrap();
    assert_eq!(
        naive_anti_exchange(&literal),
        Axiom::AntiExchange.check(&literal).unwrap().is_pass()
    );
}

#[test]
fn oracles_agree_on_unconstrained_random_tables() {
    for n in 0..=3usize {
        let g = GroundSet::numbered(n).unwrap();
        for table in random_tables(&g, 7 + n as u64, 200, &[]).unwrap() {
            compare_all(&table);
        }
    }
}

#[test]
fn oracles_agree_on_random_c1_tables_n4() {
    let g = GroundSet::numbered(4).unwrap();
    for table in random_tables(&g, 11, 100, &[Axiom::C1]).unwrap() {
        compare_all(&table);
    }
}

#[test]
fn classify_agrees_with_duality_transfer() {
    // consistency∧locality of the V-form is C1∧C22 of the τ-form, on
    // arbitrary tables
    let g = GroundSet::numbered(3).unwrap();
    for table in random_tables(&g, 23, 200, &[]).unwrap() {
        let report = classify(&table);
        let v = as_violator(&table);
        assert_eq!(
            report.passes(Axiom::C1) && report.passes(Axiom::C22),
            naive_consistency(&v) && naive_locality(&v)
        );
    }
}

prop_compose! {
    /// Arbitrary total table on 0..=4 elements, no axioms guaranteed.
    fn arb_table()(n in 0usize..=4)(
        kind in prop::bool::ANY,
        images in prop::collection::vec(0u16..(1 << n) as u16, 1 << n),
        n in Just(n),
    ) -> OperatorTable {
        let ground = GroundSet::numbered(n).unwrap();
        let kind = if kind { OperatorKind::Tau } else { OperatorKind::Violator };
        OperatorTable::new(
            ground,
            kind,
            images.into_iter().map(SubsetMask::from_bits).collect(),
        )
        .unwrap()
    }
}

proptest! {
    #[test]
    fn file_round_trip_is_identity(table in arb_table()) {
        let text = table.to_json();
        let reloaded = OperatorTable::from_json(&text).unwrap();
        prop_assert_eq!(&reloaded, &table);
        prop_assert_eq!(reloaded.to_json(), text);
    }

    #[test]
    fn duality_is_an_involution(table in arb_table()) {
        let round = match table.kind() {
            OperatorKind::Tau => {
                tau_from_violator(&violator_from_tau(&table).unwrap()).unwrap()
            }
            OperatorKind::Violator => {
                violator_from_tau(&tau_from_violator(&table).unwrap()).unwrap()
            }
        };
        prop_assert_eq!(round, table);
    }

    #[test]
    fn every_witness_replays(table in arb_table()) {
        let report = classify(&table);
        let tau = match table.kind() {
            OperatorKind::Tau => table.clone(),
            OperatorKind::Violator => tau_from_violator(&table).unwrap(),
        };
        let violator = as_violator(&table);
        for (axiom, witness) in &report.witnesses {
            let view = match axiom.kind() {
                OperatorKind::Tau => &tau,
                OperatorKind::Violator => &violator,
            };
            prop_assert!(witness.replay(view), "{} witness does not replay", axiom);
        }
    }
}
