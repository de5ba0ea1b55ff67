//! Core library for modeling multipath transport over lossy, heterogeneous
//! paths: closed-form throughput models for MPTCP and its network-coded
//! variant, a round-based Monte Carlo simulator of the coded sub-flow
//! dynamics, GF(2^8) random linear network coding, and loss/RTT trace
//! handling.
//!
//! The crate is `no_std` (with `alloc`); all file and terminal I/O lives in
//! the companion `mpnc-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod clock;
pub mod coding;
pub mod error;
pub mod gf256;
mod math;
pub mod mptcp;
pub mod mptcpnc;
pub mod path;
pub mod series;
pub mod sim;
pub mod trace;

pub use clock::RoundClock;
pub use error::{Error, Result};
pub use path::PathParams;
pub use series::ThroughputSeries;
