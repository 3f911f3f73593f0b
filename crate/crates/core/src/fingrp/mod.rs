//! Explicit finite groups: matrix groups over prime fields, their central
//! quotients, affine and cyclic groups, with subgroup, nilpotency and
//! permutation-action machinery.
//!
//! Every group is fully enumerated. Elements are `u32` indices into the
//! enumeration; [`FiniteGroup::element`] gives back the canonical encoding.

mod action;
mod field;
mod group;
mod nilpotent;
mod subgroup;

pub use action::{
    affine_line_action, coset_action, projective_points, projective_space_action, regular_action, GroupAction,
};
pub use field::PrimeField;
pub use group::{
    affine_group, central_quotient, cyclic_group, image_in_quotient, monomial_n, projective_canonical, rank_mod,
    scalar_subgroup, sl_order, special_linear_group, unitriangular_u, upper_triangular_b, Elem, FiniteGroup,
    GroupKind, DEFAULT_MAX_ORDER, TABLE_MAX_ORDER,
};
pub use nilpotent::{
    fitting_subgroup, fitting_subgroup_brute, is_nilpotent, lower_central_series, p_core, prime_factors, sylow,
    BRUTE_FITTING_MAX_ORDER, FITTING_MAX_ORDER,
};
pub use subgroup::Subgroup;
