//! Market game simulator and complexity laboratory.
//!
//! This crate models repeated Bertrand-style market games with imperfect
//! monitoring and studies when collusion is computationally sustainable.
//! It provides:
//!
//! - [`market`]: compact market game descriptions (demand, noise, costs,
//!   demand-state spaces) with exact and Monte Carlo profit evaluation.
//! - [`equilibria`]: polynomial-time competitive machinery (best responses,
//!   fixed points, joint-profit optima) and the `delta*` sustainability
//!   threshold.
//! - [`complexity`]: the three collusion decision problems (CSP, CDP, OPP)
//!   with budgeted search solvers, hardness reductions from Max-Weighted-SAT,
//!   3-SAT and Minimum Vertex Cover, and empirical detection-accuracy
//!   measurement.
//! - [`repeated`]: a repeated-game engine with trigger policies, budgeted
//!   deviation detection, undetectable-deviation search, capacity sweeps and
//!   regime classification.
//! - [`experiments`]: named experiments (transparency/ambiguity sweep, the
//!   binary-demand duopoly example).
//!
//! All operations are pure functions of their inputs plus an explicit seed;
//! see [`seed`] for the derivation rule that makes parallel runs reproducible.

pub mod complexity;
pub mod equilibria;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod linalg;
pub mod market;
pub mod profile;
pub mod repeated;
pub mod sat;
pub mod seed;

pub use error::{Error, Result};
