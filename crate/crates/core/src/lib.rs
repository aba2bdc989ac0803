//! Betti-number predictions, Gorenstein linkage arithmetic and a Koszul
//! homology engine for finite point sets on surfaces in P^3.

pub mod betti;
pub mod error;
pub mod experiment;
pub mod ff;
pub mod hilbert;
pub mod liaison;

pub use betti::{BettiTable, Format, MrcShape};
pub use error::{Error, Result};
pub use experiment::{PointSet, TrialReport};
pub use ff::{PrimeField, PrimeFieldMatrix, DEFAULT_PRIME};
pub use hilbert::{FamilyParams, HVector};
