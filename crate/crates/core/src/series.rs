//! Time-indexed throughput samples for a named protocol.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Ordered `(time, packets per second)` samples for one protocol.
#[derive(Debug, Clone, PartialEq)]
pub struct ThroughputSeries {
    pub protocol: String,
    samples: Vec<(f64, f64)>,
}

impl ThroughputSeries {
    pub fn new(protocol: impl Into<String>) -> Self {
        Self {
            protocol: protocol.into(),
            samples: Vec::new(),
        }
    }

    /// Appends a sample, enforcing strictly increasing times and
    /// non-negative throughput.
    pub fn push(&mut self, time: f64, throughput: f64) -> Result<()> {
        if !time.is_finite() || self.samples.last().is_some_and(|&(t, _)| time <= t) {
            return Err(Error::InvalidParameter {
                name: "time",
                requirement: "finite and strictly increasing",
                value: time,
            });
        }
        if !throughput.is_finite() || throughput < 0.0 {
            return Err(Error::InvalidParameter {
                name: "throughput",
                requirement: "finite and >= 0",
                value: throughput,
            });
        }
        self.samples.push((time, throughput));
        Ok(())
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Arithmetic mean of the throughput samples.
    pub fn mean(&self) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        self.samples.iter().map(|&(_, v)| v).sum::<f64>() / self.samples.len() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_enforces_ordering_and_sign() {
        let mut s = ThroughputSeries::new("mptcp");
        s.push(0.0, 1.0).unwrap();
        s.push(5.0, 0.0).unwrap();
        assert!(s.push(5.0, 1.0).is_err());
        assert!(s.push(4.0, 1.0).is_err());
        assert!(s.push(10.0, -1.0).is_err());
        assert_eq!(s.len(), 2);
        assert_eq!(s.mean(), 0.5);
    }
}
