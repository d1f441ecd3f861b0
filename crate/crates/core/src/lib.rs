//! Energy-based SBP-SAT finite difference discretization of the wave
//! equation in second order form, with boundary and interface dissipation
//! controls, a fast diagonalization solver for constant coefficients, an
//! ICHOL-preconditioned CG path for variable coefficients, and a
//! convergence-study harness.
//!
//! The discretization evolves the pair (u, v) = (displacement, velocity)
//! with u_t weakly coupled to v through the stiffness seminorm: the
//! equation A (u_t - v) = SAT is closed by a mean-zero constraint and
//! solved by a bordered factorization (1D, and as a 2D test oracle), fast
//! diagonalization (2D constant coefficients) or PCG (2D variable
//! coefficients). Energy u'Au + v'Hv is conserved or dissipated exactly by
//! construction, with no mesh-dependent penalty parameter.

pub mod grid;
pub mod linalg;
pub mod sbp;
pub mod semidisc1d;
pub mod semidisc2d;
pub mod study;
pub mod timestepper;

pub use grid::{CoefficientProfile, Grid1D};
pub use sbp::SbpOps;
pub use semidisc1d::{BoundaryKind, BoundarySpec, InterfaceSpec, Semi1D, State1D};
pub use semidisc2d::{Coefficients2D, FastDiag, Grid2D, Semi2D, State2D};
pub use study::{ConvergenceReport, ManufacturedCase};
pub use timestepper::StepPolicy;
