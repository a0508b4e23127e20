//! A two-dimensional discrete neuron map with a cosine memristor term, and the
//! analysis machinery around it: orbit iteration and firing statistics, fixed
//! points with eigenvalue classification, one-parameter continuation with
//! codimension-1 critical points, the Neimark-Sacker critical coupling and its
//! normal-form coefficient, basins of attraction, largest Lyapunov exponents,
//! Grassberger-Procaccia correlation dimension, and ring-star networks of
//! coupled neurons with spatiotemporal metrics.
//!
//! The state of a single neuron is `(x, phi)` (membrane potential, memristor
//! flux) and one iteration applies
//!
//! ```text
//! x'   = x^2 exp(r - x) + k0 + k x cos(pi phi)
//! phi' = k1 x - k2 phi
//! ```
//!
//! Everything in this crate is a pure function over value types; results are
//! deterministic and independent of thread count.

pub mod attractors;
pub mod bifurcation;
pub mod fixed_points;
pub mod map;
pub mod network;
pub mod presets;
pub mod rng;

pub use map::{DriveSignal, MapParams, NeuronState, Orbit, ParamName, ESCAPE_RADIUS};
