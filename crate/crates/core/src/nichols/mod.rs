//! Nichols algebras of braided vector spaces.

mod braid_word;
mod braided;
mod diagonal;
mod qs;
mod quadratic;
mod square_zero;

pub use braid_word::{
    braid_generator_matrix, braid_word_matrix, inversions, left_descent_word, matsumoto_lift, permutations, BraidWord,
};
pub use braided::BraidedSpace;
pub use diagonal::{
    a2_criterion, a2_criterion_indices, diagonal_data, infinite_precheck, sum_criterion, A2Verdict, Component,
    DynkinData, SumVerdict, Witness,
};
pub use qs::{
    graded_dims, graded_dims_with, memory_limit_mb, quantum_symmetrizer, quantum_symmetrizer_limited, word_digits,
    word_index, GradedReport, NicholsOptions, NicholsStatus,
};
pub use quadratic::{fomin_kirillov_relations, quadratic_relations_w, quadratic_target, x_basis};
pub use square_zero::{
    is_square_zero, presentation_check, square_zero_monomial_space, PresentationReport, SquareZeroSpace, TensorPoly,
    SQUARE_ZERO_MAX_DIM,
};
