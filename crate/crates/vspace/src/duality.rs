//! The pointwise correspondence between τ-form and V-form tables.
//!
//! Both directions complement every image inside the ground set; they are
//! defined on arbitrary tables and never repair or filter, so sweeps can test
//! exactly which axiom sets survive the conversion.

use crate::error::Result;
use crate::table::{OperatorKind, OperatorTable};

/// V(X) = E − τ(X) for every X.
pub fn violator_from_tau(op: &OperatorTable) -> Result<OperatorTable> {
    op.require_kind(OperatorKind::Tau)?;
    Ok(complemented(op, OperatorKind::Violator))
}

/// τ(X) = H − V(X) for every X.
pub fn tau_from_violator(op: &OperatorTable) -> Result<OperatorTable> {
    op.require_kind(OperatorKind::Violator)?;
    Ok(complemented(op, OperatorKind::Tau))
}

/// The τ-form view of a table: the table itself if already τ-form, otherwise
/// its complement.
pub fn as_tau(op: &OperatorTable) -> OperatorTable {
    match op.kind() {
        OperatorKind::Tau => op.clone(),
        OperatorKind::Violator => complemented(op, OperatorKind::Tau),
    }
}

/// The V-form view of a table.
pub fn as_violator(op: &OperatorTable) -> OperatorTable {
    match op.kind() {
        OperatorKind::Violator => op.clone(),
        OperatorKind::Tau => complemented(op, OperatorKind::Violator),
    }
}

fn complemented(op: &OperatorTable, kind: OperatorKind) -> OperatorTable {
    let g = op.ground();
    let images = op.images().iter().map(|&img| g.complement(img)).collect();
    op.with_kind_and_images(kind, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::ground::GroundSet;
    use crate::mask::SubsetMask;

    #[test]
    fn identity_maps_to_complement() {
        let id = OperatorTable::identity(GroundSet::numbered(2).unwrap());
        let v = violator_from_tau(&id).unwrap();
        assert_eq!(
            v,
            OperatorTable::complement(GroundSet::numbered(2).unwrap())
        );
    }

    #[test]
    fn constant_full_maps_to_constant_empty() {
        let g = GroundSet::numbered(3).unwrap();
        let full = g.full_mask();
        let t = OperatorTable::constant(g, OperatorKind::Tau, full).unwrap();
        let v = violator_from_tau(&t).unwrap();
        assert!(v.images().iter().all(|&m| m == SubsetMask::EMPTY));
        assert_eq!(tau_from_violator(&v).unwrap(), t);
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let id = OperatorTable::identity(GroundSet::numbered(1).unwrap());
        assert!(matches!(
            tau_from_violator(&id),
            Err(Error::WrongKind { .. })
        ));
    }

    #[test]
    fn single_override_round_trips_through_both_forms() {
        // V = complement except V({1}) = {2}; its τ-form maps {1} to {1,3}
        let v = crate::fixtures::Fixture::Ex1Literal.table();
        let tau = tau_from_violator(&v).unwrap();
        let g = tau.ground().clone();
        let one = g.parse_set(&["1"]).unwrap();
        assert_eq!(tau.image(one), g.parse_set(&["1", "3"]).unwrap());
        let back = violator_from_tau(&tau).unwrap();
        assert_eq!(back, v);
        assert_eq!(back.image(one), g.parse_set(&["2"]).unwrap());
    }
}
