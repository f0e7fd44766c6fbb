//! Exact integer linear algebra.
//!
//! Smith normal form drives integer and congruence solving. Kernel and image
//! bases come out of its transforms and are then put in column Hermite form.

mod matrix;
mod smith;
mod solve;

pub use matrix::{decimal_vec, IntMatrix};
pub use smith::{smith_normal_form, SmithDecomposition};
pub use solve::{
    block_diagonal, column_hermite, image_basis, kernel_basis, solve_congruence, solve_integer, solve_with_smith,
    CongruenceSystem,
    IntSolution,
};
