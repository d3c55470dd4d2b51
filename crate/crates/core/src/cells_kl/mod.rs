//! Kazhdan–Lusztig polynomials, cells, cell modules and the isotypic
//! vectors `R_σ`.

mod cells;
mod equivariance;
mod isotypic;
mod kl;
mod module;
mod poly;
mod worked;

pub use cells::{CellPartition, CellId};
pub use equivariance::{equivariance_check, equivariance_of_map, equivariance_sweep, EquivarianceReport, IsotypicCheck};
pub use kl::{KLTable, KL_RANK_CAP, KL_RANK_CAP_LONG};
pub use module::CellModule;
pub use poly::{LaurentPolynomial, Poly};
pub use isotypic::{
    cell_decomposition, cell_intersection, generate_submodule, intersection_elements, intersection_from, r_sigma,
    signed_sum, signed_sums_irreducible, submodule_character, verify_theorem2, verify_theorem2_all, CellIntersection,
    IntersectionMember, IsotypicVector, Theorem2Report, CELL_COLORING,
};
pub use worked::{
    open_cycle_class, self_intersection, worked_example, ExampleMember, ListedShape, PairIntersection, SignCheck,
    WorkedExampleReport, ALTERNATIVES, DISPLAYED_553221, DISPLAYED_553311, DISPLAY_ORDER, LISTED_CONSTITUENTS,
};
