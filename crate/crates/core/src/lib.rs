//! Asynchronous single-cell boolean iterations, the metric space they live in,
//! and a 256-bit hash function driven by them.
//!
//! The crate is organized in four layers:
//!
//! * [`engine`] — states, strategies and the one-cell-per-step iteration maps.
//! * [`topology`] — the distance on (strategy, state) pairs, constructive
//!   periodic/transitive witnesses and a sensitivity probe.
//! * [`hash`] — message preprocessing, strategy derivation and the digest.
//! * [`analysis`] — avalanche campaigns and truncated-digest collision scans.
//!
//! Reference bit strings and digest vectors for the worked example live in
//! [`fixtures`].

pub mod analysis;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod hash;
pub mod topology;

pub use engine::{BitState, IterationFunction, Strategy, SystemPoint};
pub use error::{Error, Result};
