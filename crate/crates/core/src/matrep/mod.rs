//! Matrix representations of groups over finite and rational fields.

mod format;
mod group;
mod identity;
mod rep;

pub use format::{parse_matrix, Catalog, RepFile};
pub use group::{element_images, group_closure, kernel_elements, FiniteGroupTable, GroupElement};
pub use identity::{
    check_action_identity, check_polynomial_identity, find_action_witness, find_polynomial_witness, Witness,
};
pub use rep::{
    aug_image_nilpotency, enveloping_algebra, enveloping_subspace, t_natural, triangular_product,
    units_of_scalar_plus_nilpotent, ut_natural, MatrixRepresentation,
};
