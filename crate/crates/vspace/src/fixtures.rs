//! Canned example spaces used across tests and the CLI.
//!
//! Each fixture is a small table with a known classification; the expected
//! signatures are frozen in tests and in the acceptance suite. `ex1` ships in
//! two readings: the amended form, where both {1} and {3} map to {2} so that
//! τ({1}) = τ({3}) = {1,3}, and the literal form with the single override
//! V({1}) = {2}. The amended form is the one whose downstream consequences
//! (violator space, C2 failure, two bases for {1,3}) are asserted; the
//! literal form is, by exhaustive check, a uniquely generated violator space.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::table::{OperatorKind, OperatorTable};

/// Identifiers of the canned tables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fixture {
    /// n=3, V-form: complement except V({1}) = V({3}) = {2}.
    Ex1,
    /// n=3, V-form: complement except V({1}) = {2}.
    Ex1Literal,
    /// n=3, τ-form: identity except τ({1}) = {1,2}, τ({1,2}) = {1,2,3}.
    Ex2_2,
    /// n=4, τ-form: identity except τ({1,2}) = {1,2,3} and
    /// τ({1,3}) = τ({1,2,3}) = τ({1,3,4}) = τ({1,2,3,4}) = {1,2,3,4}.
    Exms,
    /// n=4, τ-form: identity except τ({1}) = τ({1,2}) = τ({1,3}) = {1,2,3}
    /// and τ({1,2,3}) = {1,2,3,4}.
    Ex5_1,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Ex1,
        Fixture::Ex1Literal,
        Fixture::Ex2_2,
        Fixture::Exms,
        Fixture::Ex5_1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Fixture::Ex1 => "ex1",
            Fixture::Ex1Literal => "ex1-literal",
            Fixture::Ex2_2 => "ex2_2",
            Fixture::Exms => "exms",
            Fixture::Ex5_1 => "ex5_1",
        }
    }

    /// Builds the fixture's operator table.
    pub fn table(self) -> OperatorTable {
        match self {
            Fixture::Ex1 => violator_with_overrides(3, &[(&["1"], &["2"]), (&["3"], &["2"])]),
            Fixture::Ex1Literal => violator_with_overrides(3, &[(&["1"], &["2"])]),
            Fixture::Ex2_2 => {
                tau_with_overrides(3, &[(&["1"], &["1", "2"]), (&["1", "2"], &["1", "2", "3"])])
            }
            Fixture::Exms => tau_with_overrides(
                4,
                &[
                    (&["1", "2"], &["1", "2", "3"]),
                    (&["1", "3"], &["1", "2", "3", "4"]),
                    (&["1", "2", "3"], &["1", "2", "3", "4"]),
                    (&["1", "3", "4"], &["1", "2", "3", "4"]),
                    (&["1", "2", "3", "4"], &["1", "2", "3", "4"]),
                ],
            ),
            Fixture::Ex5_1 => tau_with_overrides(
                4,
                &[
                    (&["1"], &["1", "2", "3"]),
                    (&["1", "2"], &["1", "2", "3"]),
                    (&["1", "3"], &["1", "2", "3"]),
                    (&["1", "2", "3"], &["1", "2", "3", "4"]),
                ],
            ),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ex1" => Ok(Fixture::Ex1),
            "ex1-literal" | "ex1_literal" => Ok(Fixture::Ex1Literal),
            "ex2_2" | "ex2.2" => Ok(Fixture::Ex2_2),
            "exms" => Ok(Fixture::Exms),
            "ex5_1" | "ex5.1" => Ok(Fixture::Ex5_1),
            other => Err(Error::UnknownFixture(other.to_string())),
        }
    }
}

fn tau_with_overrides(n: usize, overrides: &[(&[&str], &[&str])]) -> OperatorTable {
    with_overrides(n, OperatorKind::Tau, overrides)
}

fn violator_with_overrides(n: usize, overrides: &[(&[&str], &[&str])]) -> OperatorTable {
    with_overrides(n, OperatorKind::Violator, overrides)
}

fn with_overrides(n: usize, kind: OperatorKind, overrides: &[(&[&str], &[&str])]) -> OperatorTable {
    let ground = GroundSet::numbered(n).expect("fixture ground sets are small");
    let pairs: Vec<_> = overrides
        .iter()
        .map(|(set, image)| {
            (
                ground.parse_set(set).expect("fixture labels are valid"),
                ground.parse_set(image).expect("fixture labels are valid"),
            )
        })
        .collect();
    OperatorTable::from_fn(ground.clone(), kind, |m| {
        pairs
            .iter()
            .find(|(set, _)| *set == m)
            .map(|&(_, image)| image)
            .unwrap_or(match kind {
                OperatorKind::Tau => m,
                OperatorKind::Violator => ground.complement(m),
            })
    })
    .expect("fixtures are total by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::classify;

    #[test]
    fn fixture_ids_round_trip() {
        for f in Fixture::ALL {
            assert_eq!(f.id().parse::<Fixture>().unwrap(), f);
        }
        assert!("nope".parse::<Fixture>().is_err());
    }

    #[test]
    fn ex1_signatures() {
        let amended = classify(&Fixture::Ex1.table());
        assert!(amended.classes.violator_space);
        assert!(!amended.classes.closure_space);
        let literal = classify(&Fixture::Ex1Literal.table());
        assert!(literal.classes.violator_space);
        assert!(!literal.classes.closure_space);
    }

    #[test]
    fn ex2_2_is_convex_only() {
        let report = classify(&Fixture::Ex2_2.table());
        assert!(report.classes.convex_space);
        assert!(!report.classes.violator_space);
        assert!(!report.classes.closure_space);
    }

    #[test]
    fn exms_and_ex5_1_are_convex_not_violator() {
        for f in [Fixture::Exms, Fixture::Ex5_1] {
            let report = classify(&f.table());
            assert!(report.classes.convex_space, "{f}");
            assert!(!report.classes.violator_space, "{f}");
        }
    }
}
