//! Federated optimization under arbitrary client participation.
//!
//! The crate models one communication round of a star-topology federated
//! system as a small stack of stochastic matrices (pull, local update,
//! average, collect), generates participant sets from several sampling
//! regimes, and runs three optimization engines against synthetic ridge
//! problems with known optima:
//!
//! * **FedAvg** — the classic pull / local-update / average baseline, which
//!   plateaus away from the optimum under heterogeneous data or non-uniform
//!   sampling;
//! * **FOCUS** — a push-pull scheme that pulls models with a row-stochastic
//!   matrix and pushes gradient trackers with a column-stochastic matrix,
//!   converging linearly to the exact optimum under any participation
//!   pattern with non-zero rates;
//! * **SG-FOCUS** — the stochastic-gradient variant, which keeps the
//!   tracking ledger exact by caching each client's previous stochastic
//!   gradient and converges to an `O(eta)` noise floor.
//!
//! Every run is a pure function of its configuration and master seed; the
//! experiment harness emits byte-identical CSV or JSON-lines output for
//! identical inputs. See the `book/` directory for a guided tour; its code
//! snippets compile and run as doc-tests of the [`guide`] module.

pub mod algorithms;
pub mod graph;
pub mod guide;
pub mod harness;
pub mod participation;
pub mod problems;

mod error;

pub use error::{Error, Result};
