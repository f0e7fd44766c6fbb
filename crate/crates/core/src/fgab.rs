//! Finitely generated abelian groups as presented objects.
//!
//! A group is `Z^g / span(R)` for an integer relation matrix `R`. Elements,
//! homomorphisms (with well-definedness certificates), the categorical
//! constructions, `Hom`, `⊗`, and the exactness, splitting and purity tests
//! all reduce to integer linear algebra on presentations.

mod construct;
mod element;
mod exact;
mod group;
mod hom;
mod homgroup;
mod lift;
mod tensor;

pub use construct::{
    cokernel, coequalizer, direct_sum, direct_sum_many, equalizer, factor_through_injection,
    image, kernel, pullback, pushout, smith_form, subgroup_generated, DirectSum, Pullback,
    Pushout, SmithForm,
};
pub use element::GroupElement;
pub use exact::{hom_tensor_adjunction_check, is_exact_at, is_pure, is_split, ShortExactSeq, Splitting};
pub use group::{Canonical, FgAbGroup, PresentationJson};
pub use hom::{GroupHom, HomJson};
pub use homgroup::{dual, dual_hom, hom_group, precompose, HomGroup};
pub use lift::{solve_hom, HomEquation, HomSolution};
pub use tensor::{tensor, tensor_hom, TensorProduct};
