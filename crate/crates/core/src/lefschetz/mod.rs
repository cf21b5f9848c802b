//! Lefschetz maps, pairings, biased Poincaré duality, the perturbation and
//! approximation lemmas, and Kazhdan's example.
//!
//! Checks come in two layers: pure functions taking an already built ring
//! (and element ℓ), and sampling wrappers that draw the realization and ℓ
//! from a seed and retry a fixed number of times. A pass from a wrapper is a
//! certificate for the recorded witness; a fail only means no witness was
//! found among the samples.

mod certify;
mod kazhdan;
mod pairing;
mod perturb;

pub use certify::{
    decaying_element, l_decomposable_lefschetz, lefschetz_check, lefschetz_check_fixed, lefschetz_rank, ring_for, sample_ring, witness, BallStep,
    LDecompositionReport, LefschetzCertificate, SampleOptions, Variant,
};
pub use kazhdan::{kazhdan_delta, kazhdan_example, KazhdanReport};
pub use pairing::{
    biased_pd, biased_pd_check, gram_matrix, hall_laman, hall_laman_check, hodge_riemann_form, kappa_monotonicity, poincare_pairing, signature,
    KappaReport, PairingKind, PairingReport, Provenance, Signature,
};
pub use perturb::{approximation_check, perturbation_check, principal_angle, random_low_rank, ApproximationReport, PerturbationReport};
