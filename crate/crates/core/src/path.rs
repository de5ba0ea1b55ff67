//! Per-sub-flow model parameters.

use alloc::string::String;

use crate::error::{Error, Result};

/// Inputs of the coded sub-flow model for one path.
#[derive(Debug, Clone, PartialEq)]
pub struct PathParams {
    /// Label identifying the path (usually the network name).
    pub id: String,
    /// Packet loss probability, in `[0, 1)` for the closed forms; the
    /// simulator also accepts 1 (total outage).
    pub loss: f64,
    /// Round-trip time in seconds.
    pub rtt: f64,
    /// Coded packets transmitted per window packet, `>= 1`.
    pub redundancy: f64,
    /// Maximum congestion window in packets.
    pub max_window: f64,
    /// Expected initial window in packets. Defaults to 1 (no slow start).
    pub initial_window: f64,
}

impl PathParams {
    /// Builds params with redundancy 1 and the default initial window of 1.
    pub fn new(id: impl Into<String>, loss: f64, rtt: f64, max_window: f64) -> Self {
        Self {
            id: id.into(),
            loss,
            rtt,
            redundancy: 1.0,
            max_window,
            initial_window: 1.0,
        }
    }

    pub fn with_redundancy(mut self, redundancy: f64) -> Self {
        self.redundancy = redundancy;
        self
    }

    pub fn with_initial_window(mut self, initial_window: f64) -> Self {
        self.initial_window = initial_window;
        self
    }

    /// Checks the field invariants: `0 <= loss <= 1`, `rtt > 0`, `R >= 1`,
    /// `max_window >= initial_window >= 1`.
    pub fn validate(&self) -> Result<()> {
        if !self.loss.is_finite() || !(0.0..=1.0).contains(&self.loss) {
            return Err(Error::InvalidParameter {
                name: "loss",
                requirement: "in [0, 1]",
                value: self.loss,
            });
        }
        if !self.rtt.is_finite() || self.rtt <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "rtt",
                requirement: "finite and > 0",
                value: self.rtt,
            });
        }
        if !self.redundancy.is_finite() || self.redundancy < 1.0 {
            return Err(Error::InvalidParameter {
                name: "redundancy",
                requirement: ">= 1",
                value: self.redundancy,
            });
        }
        if !self.initial_window.is_finite() || self.initial_window < 1.0 {
            return Err(Error::InvalidParameter {
                name: "initial_window",
                requirement: ">= 1",
                value: self.initial_window,
            });
        }
        if !self.max_window.is_finite() || self.max_window < self.initial_window {
            return Err(Error::InvalidParameter {
                name: "max_window",
                requirement: ">= initial_window",
                value: self.max_window,
            });
        }
        Ok(())
    }
}
