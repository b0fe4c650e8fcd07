//! Closed-form bounds for r-regular digraphs and upper-bound propagation
//! across degrees.

use crate::rational::{format_rational, rat, Rational};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("degree must be at least 1")]
    ZeroDegree,
}

/// Bounds implied for every r-regular digraph: c is at least ceil(3r/22)
/// and at most 7*ceil(r/8) (further capped by the trivial c <= r), directed
/// tree-width is at least floor(r/20), and the asymptotic ratio c_r/r lies
/// in [3/22, 7/8]. For small r the uncapped upper bound may exceed r; only
/// the capped field is guaranteed at or below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub r: usize,
    pub c_lower: usize,
    pub c_upper: usize,
    pub c_upper_capped: usize,
    pub dtw_lower: usize,
    pub limit_interval: (Rational, Rational),
}

impl BoundsReport {
    pub fn to_value(&self) -> Value {
        json!({
            "c_lower": self.c_lower,
            "c_upper": self.c_upper,
            "c_upper_capped": self.c_upper_capped,
            "dtw_lower": self.dtw_lower,
            "limit_interval": [
                format_rational(&self.limit_interval.0),
                format_rational(&self.limit_interval.1),
            ],
            "r": self.r,
        })
    }

    /// One-line human rendering; the upper bound shown is the capped one.
    pub fn human_line(&self) -> String {
        format!(
            "c_lower={} c_upper={} dtw_lower={}",
            self.c_lower, self.c_upper_capped, self.dtw_lower
        )
    }
}

pub fn theorem_bounds(r: usize) -> Result<BoundsReport, BoundsError> {
    if r == 0 {
        return Err(BoundsError::ZeroDegree);
    }
    let c_upper = 7 * r.div_ceil(8);
    Ok(BoundsReport {
        r,
        c_lower: (3 * r).div_ceil(22),
        c_upper,
        c_upper_capped: c_upper.min(r),
        dtw_lower: r / 20,
        limit_interval: (rat(3, 22), rat(7, 8)),
    })
}

/// Best upper bound on c for degree n derivable from known per-degree
/// bounds: c_n <= ceil(n/r) * ub(r) for each known r, since c is monotone
/// in the degree and blow-ups multiply it; capped by the trivial c_n <= n.
pub fn propagate_upper_bounds(known: &BTreeMap<usize, usize>, n: usize) -> usize {
    let derived = known
        .iter()
        .filter(|&(&r, _)| r >= 1)
        .map(|(&r, &ub)| n.div_ceil(r) * ub)
        .min()
        .unwrap_or(n);
    derived.min(n)
}
