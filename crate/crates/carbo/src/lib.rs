//! Cost-aware Bayesian optimization under an evaluation-cost budget.
//!
//! Most global optimizers budget in iterations, which silently assumes every
//! evaluation costs the same. This crate budgets in evaluation cost (time,
//! energy, money) instead: it learns a cost model alongside the objective
//! surrogate and spends the budget where it buys the most information.
//!
//! The pieces:
//!
//! - [`space`]: mixed continuous/log/integer/categorical search spaces encoded
//!   into the unit hypercube.
//! - [`gp`]: Matérn-5/2 Gaussian-process regression with marginal-likelihood
//!   hyperparameter fitting.
//! - [`cost`]: positive cost surrogates — a warped GP over log cost, linear
//!   flop-feature models fit by Huber regression, and a hybrid of the two.
//! - [`design`]: cost-effective initial designs that minimize fill under a
//!   warm-start cost budget.
//! - [`acquisition`]: expected improvement, EI per unit cost, and cost-cooled
//!   EI with its budget-driven exponent schedule.
//! - [`fantasy`]: batch proposals via posterior fantasizing.
//! - [`optimizer`]: the CArBO run loop and its baselines (EI, EIpu, EI-cool,
//!   random search) under identical budget accounting.
//! - [`problems`] / [`external`]: synthetic benchmark problems with analytic
//!   cost fields, a simulated cost clock, and a line-delimited subprocess
//!   protocol for real black boxes.
//!
//! The `carbo` binary drives all of this from the command line; see the
//! repository README for the config schema and file formats.

pub mod acquisition;
pub mod config;
pub mod cost;
pub mod design;
pub mod external;
pub mod fantasy;
pub mod gp;
pub mod optimizer;
pub mod problems;
pub mod rng;
pub mod sobol;
mod sobol_table;
pub mod space;

mod error;
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
