//! Analysis toolkit for stabilizer quantum error-correcting codes.
//!
//! Pauli operators are kept in binary-symplectic (check matrix) form with an
//! exact `i^k` phase exponent, so signed group enumeration, membership, code
//! parameters `[[n, k, d]]`, codespace bases, and the strong / weak /
//! Clifford-twisted automorphism groups of a code are all computed exactly.
//! Automorphism groups come from a pruned depth-first scan over slot
//! permutations; every returned element carries a checkable witness.
//!
//! ```
//! use qecaut::{AutomorphismKind, SearchOptions, StabilizerGroup};
//!
//! let group =
//!     StabilizerGroup::from_strings(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]).unwrap();
//! assert_eq!((group.n(), group.k()), (5, 1));
//! assert_eq!(qecaut::distance(&group).unwrap().params.d, 3);
//!
//! let strong =
//!     qecaut::compute_group(&group, AutomorphismKind::Strong, &SearchOptions::default())
//!         .unwrap();
//! assert_eq!(strong.order, 10);
//! assert!(strong.is_cyclic);
//! ```

pub mod analysis;
pub mod aut;
pub mod catalog;
pub mod error;
pub mod group;
pub mod pauli;
pub mod perm;
pub mod report;
pub mod twist;

pub use analysis::{
    check_correctable, codespace_basis, distance, BasisVector, CodeParameters, CodespaceBasis,
    CorrectabilityReport, DistanceResult, GaussInt,
};
pub use aut::{
    compute_group, find_clifford_twist, is_clifford, is_strong, is_weak, transitivity_degree,
    weak_signs, weak_twist_witness, AutomorphismKind, AutomorphismResult, SearchOptions, Witness,
};
pub use catalog::{catalog, catalog_lookup, parse_code_file, CatalogEntry, Expected};
pub use error::{Error, Result};
pub use group::{MembershipAnswer, MembershipStatus, StabilizerGroup};
pub use pauli::{complexity, Letter, PauliOperator, Sign, MAX_QUBITS};
pub use perm::Permutation;
pub use report::AutReport;
pub use twist::{LetterPerm, LocalCliffordTwist};
