//! Decision procedures for the eventual stabilization of free-group
//! endomorphisms and of integer / GF(2) matrix image chains.
//!
//! Given the map `Φ` induced on `π₁(P)` by a homeomorphism restricted to a
//! trapping region `P` whose fundamental group is free, the inclusion of the
//! attractor into its basin is a shape equivalence exactly when the chain
//! `im Φ ≥ im Φ² ≥ …` becomes constant. This crate decides that question
//! exactly:
//!
//! * [`words`]: freely reduced words and endomorphisms given by generator
//!   images (with an optional basepoint-change conjugator).
//! * [`stallings`]: folded core graphs of finitely generated subgroups,
//!   membership and rank.
//! * [`stabilize`]: the rank sequence `r₀ > r₁ > … > r_n = r_{n+1}` and the
//!   membership test at the first repeat.
//! * [`abelian`]: Hermite / row-echelon image chains for matrices over ℤ and
//!   GF(2), the stable-image isomorphism check and ℤ₂-homology verdicts.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod abelian;
mod error;
pub mod stabilize;
pub mod stallings;
pub mod words;

pub use abelian::{
    abelianize, homology_verdict, image_chain, stable_image_isomorphism_check, ChainOutcome,
    HomologyVerdict, ImageBasis, Matrix, MatrixChainReport, Ring, DEFAULT_MAX_STEPS,
};
pub use error::Error;
pub use stabilize::{
    component_power, decide_stabilization, image_rank_sequence, injectivity_equivalent, iterate_images,
    ComponentPermutation, StabilizationReport,
};
pub use stallings::{subgroup_equal, SubgroupGraph, SubgroupHandle};
pub use words::{Alphabet, FreeEndomorphism, Letter, Word, DEFAULT_MAX_WORD_LEN};

pub type Result<T, E = Error> = core::result::Result<T, E>;
