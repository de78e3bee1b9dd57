//! Extensions of finite abstract argumentation frameworks computed on
//! Boolean attack matrices.
//!
//! The pipeline is: enumerate conflict-free sets level by level from the
//! basic sets of the attack matrix ([`cfenum`]); decide stable, admissible
//! and complete sets with column and row tests on the candidate's sub-blocks
//! or on its norm form ([`matrix`], [`semantics`]); derive preferred,
//! grounded, ideal, semi-stable and eager extensions by set comparison.
//! [`oracle`] holds brute-force definitions used to cross-check all of it.
//!
//! ```
//! use afmatrix::{compute, ArgSet, Framework, SemanticsTag};
//!
//! let f = Framework::new(5, [(1, 2), (2, 3), (2, 5), (4, 3), (5, 4)])?;
//! let stable = compute(&f, SemanticsTag::Stable)?;
//! assert_eq!(stable.sets.into_iter().collect::<Vec<_>>(), vec![ArgSet::new(vec![1, 3, 5])?]);
//! # Ok::<(), afmatrix::Error>(())
//! ```

pub mod bits;
pub mod cfenum;
mod error;
pub mod framework;
pub mod frontend;
pub mod matrix;
pub mod oracle;
pub mod semantics;
pub mod verify;

pub use cfenum::{basic_sets, enumerate_conflict_free, for_each_conflict_free, is_conflict_free, BasicSets, CfFamily};
pub use error::{Error, Result};
pub use framework::{Arg, ArgSet, Framework, Permutation};
pub use matrix::{
    build_matrix, dual_interchange, extract_subblocks, split_blocks, to_norm_form, to_partition_form, AttackMatrix, NormForm,
    SubBlocks,
};
pub use semantics::{
    compute, compute_derived, compute_family, compute_family_with, is_admissible, is_complete, is_stable, query,
    Answer, ExtensionFamily, Question, Route, SemanticsTag,
};
