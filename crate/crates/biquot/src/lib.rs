//! Classification machinery for compact homogeneous spaces and biquotients
//! whose rational cohomology is that of a sphere or a projective space.
//!
//! The crate has three layers:
//!
//! * a catalog of compact simple Lie groups with their rational
//!   sphere-decomposition exponents ([`lie_catalog`]), the rational balance
//!   condition a quotient must satisfy ([`rational_model`]), and an
//!   exhaustive matcher that rediscovers the classified pairs
//!   ([`enumeration`]) against curated tables ([`tables`]);
//! * integral cohomology of the specific low-dimensional quotients in closed
//!   form, certified degreewise by a Gysin-sequence checker ([`cohomology`]),
//!   and the Pontrjagin-class arithmetic distinguishing the homeomorphism
//!   types ([`char_class`]);
//! * a verification pipeline that re-derives everything and reports
//!   pass/fail per item ([`verify`], [`report`]).

pub mod char_class;
pub mod cohomology;
pub mod enumeration;
pub mod lie_catalog;
pub mod rational_model;
pub mod report;
pub mod tables;
pub mod verify;

pub use char_class::{
    distinguish_cp_pair, quotient_order, solve_p1_tangent, weight_decompose, CharClassError,
    CpPairVerdict, Distinction, PlaneBundle, StableBundleRelation, WeightDecomposition,
};
pub use cohomology::{
    check_gysin_consistency, circle_quotient_ring, g2_group_cohomology, g2_su2_cohomology,
    poincare_dual, quaternionic_quotient_ring, unit_tangent_cohomology, CohomologyError,
    DividedRing, FibrationSpec, GradedAbelianGroup, GysinOutcome, Homogeneous,
};
pub use enumeration::{
    match_odd_sphere_pairs, verify_quotient_rows, EnumerationError, RowCheck, SpherePairCandidate,
};
pub use lie_catalog::{
    load_catalog, CatalogError, Family, GroupCatalog, SimpleGroup, SphereMultiset,
};
pub use rational_model::{
    fiber_pi3_map, rational_balance, EmbeddingIndex, RationalModelError, RationalType,
};
pub use report::{CheckRecord, Report};
pub use tables::{CuratedTables, QuotientRow, TableError};
pub use verify::{
    cohomology_report_at, distinction_report_at, p1_report_at, run_verification, VerifyError,
};
