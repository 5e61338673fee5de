//! Classification and exact Hodge-theoretic invariants of symmetric
//! Calabi-Yau threefold hypersurfaces in weighted projective 4-space.
//!
//! The crate is organized bottom-up:
//!
//! * [`arith`]: exact integer and truncated polynomial arithmetic,
//!   including a bigraded variant carrying a residue class.
//! * [`wtypes`]: weighted hypersurface types, well-formedness and
//!   quasi-smoothness tests, and the symmetric Calabi-Yau family
//!   together with its cyclic quotients.
//! * [`hodge`]: Jacobian-ring dimension series and the Hodge numbers,
//!   Kuranishi dimensions, and curve genera they determine.
//! * [`equivariant`]: the eigenspace refinement of middle cohomology
//!   under the cyclic symmetry, its isotypical decomposition, and the
//!   Hodge numbers of quotient threefolds.
//! * [`enumerate`]: the unit-fraction search driving the full
//!   classification, plus the three family searches and row
//!   verification reports.

pub mod arith;
pub mod enumerate;
pub mod equivariant;
pub mod hodge;
pub mod wtypes;

pub use arith::{ArithError, BigradedPolynomial, IntPolynomial};
pub use enumerate::{
    classify_fermat, distinct_type_classes, egyptian_counts, egyptian_five, search_case1,
    search_case2, verify_row, EgyptianSolution, FermatRow, NonFermatRow, VerificationCheck,
    VerificationReport, SEARCH_DENOMINATOR_BOUND,
};
pub use equivariant::{
    cross_check_h12, eigenspace_table, isotypical_decomposition, quotient_hodge, rep_string,
    EigenspaceTable, EquivariantError, IsotypicalComponent, IsotypicalDecomposition,
};
pub use hodge::{
    genus, hodge_numbers_cy3, kuranishi_dim, milnor_series, socle_degree, HodgeError, HodgeVector,
};
pub use wtypes::{
    quasi_smooth_general, QuasiSmoothStatus, QuasiSmoothVerdict, SymmetricCYType, TypeError,
    WeightedType,
};
