//! Shared round clock for heterogeneous sub-flows.
//!
//! The models advance in rounds of a common duration `t_rnd`, chosen as the
//! greatest common divisor of the sub-flows' round-trip times so that each
//! sub-flow acts every `alpha_j` rounds with `alpha_j = RTT_j / t_rnd` an
//! exact integer. A GCD of real-valued RTTs is ill-defined, so RTTs are first
//! quantized to an integer number of `quantum` seconds (nearest multiple,
//! minimum one quantum) and the GCD is taken over the integer units.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Common round duration and the per-sub-flow integer multipliers.
///
/// Internally everything is kept in integer quantum units so that
/// `multiplier * round_duration` reproduces each quantized RTT exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundClock {
    quantum: f64,
    round_units: u64,
    multipliers: Vec<u64>,
}

impl RoundClock {
    /// Builds the clock from one RTT per sub-flow.
    ///
    /// Every RTT is rounded to the nearest multiple of `quantum` (at least
    /// one), and the round duration is the GCD of the quantized RTTs.
    pub fn from_rtts(rtts: &[f64], quantum: f64) -> Result<Self> {
        if rtts.is_empty() {
            return Err(Error::EmptyInput("rtt list"));
        }
        if !quantum.is_finite() || quantum <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "quantum",
                requirement: "finite and > 0",
                value: quantum,
            });
        }
        let mut units = Vec::with_capacity(rtts.len());
        for &rtt in rtts {
            units.push(quantize(rtt, quantum)?);
        }
        let round_units = units.iter().copied().fold(0, gcd);
        let multipliers = units.iter().map(|&u| u / round_units).collect();
        Ok(Self {
            quantum,
            round_units,
            multipliers,
        })
    }

    pub fn quantum(&self) -> f64 {
        self.quantum
    }

    /// Round duration `t_rnd` in seconds.
    pub fn round_duration(&self) -> f64 {
        self.round_units as f64 * self.quantum
    }

    /// One integer multiplier per sub-flow, in input order.
    pub fn multipliers(&self) -> &[u64] {
        &self.multipliers
    }

    pub fn len(&self) -> usize {
        self.multipliers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multipliers.is_empty()
    }

    /// The quantized RTT of each sub-flow, in seconds.
    pub fn quantized_rtts(&self) -> Vec<f64> {
        self.multipliers
            .iter()
            .map(|&a| (a * self.round_units) as f64 * self.quantum)
            .collect()
    }

    /// Maps an RTT back to its integer multiplier under this clock.
    ///
    /// Fails if the quantized RTT is not a multiple of the round duration,
    /// which means the clock was built from a different RTT set.
    pub fn multiplier_for(&self, rtt: f64) -> Result<u64> {
        let units = quantize(rtt, self.quantum)?;
        if units % self.round_units != 0 {
            return Err(Error::ClockMismatch {
                rtt,
                t_rnd: self.round_duration(),
            });
        }
        Ok(units / self.round_units)
    }
}

/// Rounds an RTT to the nearest positive number of quantum units.
fn quantize(rtt: f64, quantum: f64) -> Result<u64> {
    if !rtt.is_finite() || rtt <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "rtt",
            requirement: "finite and > 0",
            value: rtt,
        });
    }
    let units = math::round(rtt / quantum) as u64;
    Ok(units.max(1))
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_flow_clock() {
        let clock = RoundClock::from_rtts(&[0.2, 0.3], 0.1).unwrap();
        assert_eq!(clock.round_duration(), 0.1);
        assert_eq!(clock.multipliers(), &[2, 3]);
    }

    #[test]
    fn single_flow_round_is_rtt() {
        let clock = RoundClock::from_rtts(&[0.5], 0.1).unwrap();
        assert_eq!(clock.round_duration(), 0.5);
        assert_eq!(clock.multipliers(), &[1]);
    }

    #[test]
    fn empirical_rtts_coprime_at_millisecond_quantum() {
        // gcd{1653, 607, 87} = 1 by Euclid's algorithm.
        let clock = RoundClock::from_rtts(&[1.653, 0.607, 0.087], 0.001).unwrap();
        assert_eq!(clock.round_duration(), 0.001);
        assert_eq!(clock.multipliers(), &[1653, 607, 87]);
    }

    #[test]
    fn multiplier_roundtrip() {
        let clock = RoundClock::from_rtts(&[0.2, 0.3], 0.1).unwrap();
        assert_eq!(clock.multiplier_for(0.3).unwrap(), 3);
        assert_eq!(clock.multiplier_for(0.1).unwrap(), 1);
        let clock = RoundClock::from_rtts(&[1.653, 0.607, 0.087], 0.001).unwrap();
        assert_eq!(clock.multiplier_for(1.653).unwrap(), 1653);
    }

    #[test]
    fn inconsistent_rtt_rejected() {
        let clock = RoundClock::from_rtts(&[0.2, 0.4], 0.1).unwrap();
        assert_eq!(clock.round_duration(), 0.2);
        assert!(matches!(
            clock.multiplier_for(0.3),
            Err(Error::ClockMismatch { .. })
        ));
    }

    #[test]
    fn multiplier_times_round_reproduces_quantized_rtt_exactly() {
        let clock = RoundClock::from_rtts(&[1.653, 0.607, 0.087], 0.001).unwrap();
        for (&alpha, q) in clock.multipliers().iter().zip(clock.quantized_rtts()) {
            assert_eq!(alpha as f64 * clock.round_duration(), q);
        }
    }

    #[test]
    fn sub_quantum_rtt_clamps_to_one_unit() {
        let clock = RoundClock::from_rtts(&[0.0004, 0.01], 0.001).unwrap();
        assert_eq!(clock.multipliers(), &[1, 10]);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(matches!(
            RoundClock::from_rtts(&[], 0.1),
            Err(Error::EmptyInput(_))
        ));
        assert!(RoundClock::from_rtts(&[0.2], 0.0).is_err());
        assert!(RoundClock::from_rtts(&[0.2], f64::NAN).is_err());
        assert!(RoundClock::from_rtts(&[-0.2], 0.1).is_err());
        assert!(RoundClock::from_rtts(&[f64::INFINITY], 0.1).is_err());
    }
}
