//! Construction, verification, and spectral analysis of compound
//! magic squares of order 3^l (and compounded order-4^l most-perfect
//! squares): exact integer matrices, magic-property predicates,
//! singular-value spectra (numeric and closed form), entropy and
//! compression measures, and exhaustive family enumeration with clan
//! classification.

pub mod construction;
pub mod enumeration;
pub mod error;
pub mod io;
pub mod matrix;
pub mod measures;
pub mod properties;
pub mod spectra;

pub mod verify;

pub use construction::{
    catalog, compound, construct_frierson, frierson_block, lucas_square, Couple, FriersonSpec,
    LucasParams,
};
pub use error::{Error, Result};
pub use matrix::{BlockGrid, IntSquareMatrix};
pub use measures::{entropy_compression, MeasureReport};
pub use properties::{analyze_properties, equivalent_up_to_symmetry, symmetry_variants, PropertyReport};
pub use spectra::{
    closed_form_svs, closed_form_svs_mppd, fourth_power_indices, m3_characteristic_checks,
    singular_values_numeric, SpectralProfile,
};
