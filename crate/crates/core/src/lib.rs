//! Exact homomorphism spaces between Weyl modules of `GL_n` over F_p.
//!
//! [`hom_space`] computes `Hom_G(Δ(lambda), Δ(mu))` as the kernel of the
//! conditions imposed on the maps `phi_T` by the box-map presentation;
//! [`theorems`] checks the hypotheses of the stability, nonvanishing and
//! Carter–Payne criteria on concrete partitions.

pub mod combinatorics;
pub mod error;
pub mod homspace;
pub mod linalg;
pub mod modp;
pub mod theorems;
pub mod weyl;

pub use combinatorics::{
    conjugate, dominates, enumerate_rsst, enumerate_sst, in_lambda_g, in_p, kostka, partitions, shift_tableau, Partition, Tableau,
    Weight,
};
pub use error::{Error, Result};
pub use homspace::{
    box_image_formula, box_image_formula_triangular, build_psi, hom_dim_oracle, hom_space, hom_space_with, is_hom,
    is_hom_with, BlockStats, HomSpaceResult, HomVector, Limits,
};
pub use modp::{binom_mod, hom_stats, lp, Field, FpScalar, HomStats, Prime};
pub use theorems::{
    carter_payne_witnesses, check_nonvanishing, check_stability, sweep_dk, sweep_dk_with, Sweep, Verdict,
};
pub use weyl::{
    apply_phi, box_apply, phi_expand, straighten, two_row_identity, weight_space, weight_space_with_cap, FormalSum,
    PairStraightener, StraightenContext, WeylVector, DEFAULT_MONOMIAL_CAP,
};
