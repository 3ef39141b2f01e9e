//! Certification report shared by every check.

use serde::{Deserialize, Serialize};

/// One exact waypoint comparison: an input point, the value the map was
/// expected to take there, the value it actually took, and whether the
/// two agree exactly (rational arithmetic) or only as floats.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WaypointRecord {
    pub input: Vec<String>,
    pub expected: Vec<String>,
    pub got: Vec<String>,
    pub exact: bool,
}

/// Outcome of a containment, coverage, or waypoint check.
///
/// `violations` counts samples (or waypoints) that failed against the
/// stated tolerance; `worst_margin` is the most negative membership
/// margin observed (`0` when clean). `coverage_gap` is the largest
/// distance from a target-set sample to the mapped image cloud, when a
/// coverage check ran. `interval_certified` is reserved for a future
/// rigorous interval-arithmetic mode and is always `null` today.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct VerifyReport {
    pub n_samples: usize,
    pub violations: usize,
    pub worst_margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage_gap: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub waypoints: Vec<WaypointRecord>,
    pub elapsed_ms: u64,
    #[serde(default)]
    pub interval_certified: Option<bool>,
}

impl VerifyReport {
    /// No violations, all waypoints exact, and — when a coverage gap was
    /// measured — the gap within `gap_tol`.
    pub fn passed(&self, gap_tol: f64) -> bool {
        self.violations == 0
            && self.waypoints.iter().all(|w| w.exact)
            && self.coverage_gap.is_none_or(|g| g <= gap_tol)
    }

    /// Merge another report into this one (counts add, margins and gaps
    /// take the worst, waypoints concatenate).
    pub fn absorb(&mut self, other: VerifyReport) {
        self.n_samples += other.n_samples;
        self.violations += other.violations;
        self.worst_margin = self.worst_margin.min(other.worst_margin);
        self.coverage_gap = match (self.coverage_gap, other.coverage_gap) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.waypoints.extend(other.waypoints);
        self.elapsed_ms += other.elapsed_ms;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let rep = VerifyReport {
            n_samples: 10,
            violations: 1,
            worst_margin: -0.25,
            coverage_gap: Some(0.01),
            waypoints: vec![WaypointRecord {
                input: vec!["1".into()],
                expected: vec!["0".into()],
                got: vec!["0".into()],
                exact: true,
            }],
            elapsed_ms: 3,
            interval_certified: None,
        };
        let s = serde_json::to_string(&rep).unwrap();
        let back: VerifyReport = serde_json::from_str(&s).unwrap();
        assert_eq!(rep, back);
        assert!(!rep.passed(0.05));
    }

    #[test]
    fn passed_requires_gap_within_tolerance() {
        let mut rep = VerifyReport {
            n_samples: 5,
            ..Default::default()
        };
        assert!(rep.passed(0.05));
        rep.coverage_gap = Some(0.2);
        assert!(!rep.passed(0.05));
        assert!(rep.passed(0.25));
    }
}
