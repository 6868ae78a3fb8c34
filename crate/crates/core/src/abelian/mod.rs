//! Finitely generated abelian groups: Smith normal form, quotient
//! invariants, multiplicities and homomorphism enumeration.

mod group;
mod homs;
mod matrix;
pub mod snf;

pub use group::{
    q_image_order, quotient_map, quotient_structure, CoordinateMap, FgGroup, GroupElement, QuotientStructure,
    VectorList,
};
pub(crate) use group::image_order;
pub use homs::{enumerate_homs, hom_count, hom_zero_histogram, Homomorphism};
pub(crate) use homs::Odometer;
pub use matrix::IntMatrix;
pub use snf::{kernel_basis, smith_normal_form, Smith};
