//! Random point sets on quartic surfaces over GF(p) and the Koszul-homology
//! computation of their graded Betti numbers.

mod koszul;
mod points;
mod trials;

pub use koszul::{graded_betti, CoordinateRing};
pub use points::{
    complete_intersection_points, ideal_graded_piece, monomials, normalize, random_points,
    sample_points_on_surface, sample_surface, Point, PointSet, Quartic, MONOMIAL_ORDER,
    QUARTIC_TERMS,
};
pub use trials::{run_trial, run_trials, trial_rng, BatchSummary, TrialOptions, TrialReport};
