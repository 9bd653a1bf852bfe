//! Exact computation of how the Δ-operators attached to miniscule coweights
//! permute the level-`k` integrable highest-weight modules of an untwisted
//! affine Lie algebra.
//!
//! Weights are integer vectors in the fundamental-weight basis, roots are
//! integer vectors in the simple-root basis, and all arithmetic is exact and
//! overflow-checked.
//!
//! ```
//! use deltashift::{delta_closed_form, LieType, RootSystem, Weight};
//!
//! let rs = RootSystem::new("A1".parse::<LieType>()?)?;
//! // L(3, λ_1) is sent to L(3, 2λ_1)
//! let image = delta_closed_form(&rs, 3, &Weight::new(vec![1]), 1)?;
//! assert_eq!(image, Weight::new(vec![2]));
//! # Ok::<(), deltashift::Error>(())
//! ```

pub mod delta;
pub mod error;
pub mod linalg;
pub mod root_system;
pub mod sweep;
pub mod types;
pub mod weyl;

pub use delta::{
    action_table, all_orbits, delta_brute_force, delta_closed_form, enumerate_admissible,
    is_admissible, orbit, ActionTable, CoweightMap, LevelWeight,
};
pub use error::{Error, Result};
pub use linalg::Rational;
pub use root_system::{
    cartan_matrix, comarks, coweight_in_coroot_lattice, fundamental_group_order,
    highest_long_root, marks, miniscule_coweight_indices, pairing_with_theta, positive_roots,
    symmetrizer, CartanMatrix, RootSystem,
};
pub use sweep::{verify_type, CheckOutcome, VerifyReport};
pub use types::{Family, LieType, RootVector, Weight};
pub use weyl::{
    affine_root_image, affine_root_permutation, apply_word, canonical_word,
    expected_permutation, reflect, WeylWord,
};
