//! Solvers for stationary Hamilton-Jacobi-Bellman equations.
//!
//! The crate discretizes the infinite-horizon discounted control problem
//! sup_α { -tr[a^α(x) D²u] - b^α(x)·Du + c^α(x) u - f^α(x) } = 0 on a box,
//! with two fixed-point schemes built on the same interpolation backbone:
//!
//! * a semi-Lagrangian scheme evaluating the iterate at characteristic foot
//!   points y + h b ± √(hP) σ_i ([`sl`]),
//! * a finite-difference scheme casting the operator as a controlled Markov
//!   chain over eigendirection stencils ([`fd`]).
//!
//! Both interpolate with tensorized Gauss-Lobatto-Legendre Lagrange
//! polynomials clamped per mesh to the range of the nodal values
//! ([`interp`]), which keeps the iteration nearly monotone at high order.
//! [`solver`] drives the sweeps to a fixed point; [`cases`] ships the four
//! benchmark problems and [`config`] loads user-defined ones.
//!
//! Sweeps run in parallel through rayon when the default `parallel` feature
//! is enabled; every sweep is a pure per-point map, so results are
//! bit-identical for any thread count.

pub mod error;
pub mod gll;

mod par;

pub use error::{Error, Result};
pub use gll::{legendre_eval, GllRule};
