//! Analysis of singular (descriptor) discrete-time linear systems
//! `F·Y_{k+1} = G·Y_k` where the leading coefficient `F` may be singular.
//!
//! The crate is organized around the pipeline a user walks through when
//! handed a pair `(F, G)`:
//!
//! 1. [`pencil::certify_regularity`] — establish that the pencil `sF − G`
//!    is regular (otherwise nothing downstream is well defined),
//! 2. [`pencil::weierstrass_decompose`] — split the pencil into its finite
//!    dynamics `J_p` and nilpotent infinite structure `H_q`,
//! 3. [`solution::check_consistency`] / [`solution::optimal_trajectory`] —
//!    detect non-consistent initial conditions and simulate the
//!    least-squares-optimal trajectory,
//! 4. [`stability::classify_stability`] — classify the equilibrium set and
//!    the stability of the optimal solution.
//!
//! All matrices are dense and complex ([`nalgebra::DMatrix`] over
//! [`num_complex::Complex<f64>`]); real systems are embedded with zero
//! imaginary parts and reported back as real when the imaginary residue is
//! below tolerance.

pub mod numerics;
pub mod pencil;
pub mod solution;
pub mod stability;

// pub use numerics::{JordanStructure, NumericsError, Tolerances};
// pub use pencil::{PencilError, RegularSystem, SpectralSummary, WeierstrassDecomposition};
// pub use solution::{ConsistencyReport, SolutionError, TrajectoryRecord};
// pub use stability::{EquilibriumSet, StabilityClass, StabilityVerdict};

/// Complex scalar used throughout the crate.
pub type Scalar = num_complex::Complex<f64>;
/// Dense complex matrix.
pub type CMat = nalgebra::DMatrix<Scalar>;
/// Dense complex column vector.
pub type CVec = nalgebra::DVector<Scalar>;
