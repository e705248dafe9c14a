//! Lie algebras given by structure constants.

mod algebra;
mod random;
mod series;

pub use algebra::{basis_vector, JacobiViolation, StructureConstants, ValidationReport};
pub use random::{random_algebra, random_unimodular};
pub use series::{
    center, characteristic_sequence, characteristic_sequence_at, derived_algebra, is_filiform, is_nilpotent,
    is_quasi_filiform, lower_central_series, nilindex, CharacteristicSequence, SAMPLE_RANGE,
};
