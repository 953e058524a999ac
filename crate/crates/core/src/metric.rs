//! L_p distance between interval numbers and between TRIFNs.
//!
//! An interval `[a, b]` is identified with the line `f(x) = (a - b)x + b` on
//! `[0, 1]`, and two intervals are as far apart as the L_p norm of the
//! difference of their lines. That difference is again a line
//! `h(x) = (e1 - e0)x + e0` with `e1 = a - c` and `e0 = b - d`, so everything
//! reduces to the L_p norm of a line on the unit interval.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::indices::{va_index, Lambda, VaIndex};
use crate::trifn::Trifn;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("p={0} must be a finite number greater than 1")]
pub struct PNormError(pub f64);

/// Exponent of the L_p norm; always finite and `> 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct PNorm(f64);

impl PNorm {
    pub const TWO: PNorm = PNorm(2.0);
    pub const THREE: PNorm = PNorm(3.0);

    pub fn new(p: f64) -> Result<Self, PNormError> {
        if p.is_finite() && p > 1.0 {
            Ok(PNorm(p))
        } else {
            Err(PNormError(p))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for PNorm {
    fn default() -> Self {
        PNorm::TWO
    }
}

impl TryFrom<f64> for PNorm {
    type Error = PNormError;

    fn try_from(p: f64) -> Result<Self, Self::Error> {
        PNorm::new(p)
    }
}

impl From<PNorm> for f64 {
    fn from(p: PNorm) -> f64 {
        p.0
    }
}

/// Interval `[a, b]` read as the line `(a - b)x + b`: `a` at `x = 1`, `b` at `x = 0`.
///
/// No ordering between `a` and `b` is required.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EndpointPair {
    pub a: f64,
    pub b: f64,
}

impl EndpointPair {
    pub fn new(a: f64, b: f64) -> Self {
        EndpointPair { a, b }
    }

    pub fn at(&self, x: f64) -> f64 {
        (self.a - self.b) * x + self.b
    }
}

/// `(integral over [0,1] of |(e1 - e0)x + e0|^p dx)^(1/p)`.
///
/// Evaluated through the antiderivative `sgn(h)|h|^(p+1) / (p+1)`, rearranged
/// so that neither a sign change of `h` nor `e0 ~ e1` loses precision. The
/// result is symmetric under `(e0, e1) -> (e1, e0)` and `(e0, e1) -> (-e0, -e1)`
/// bit for bit.
pub fn line_lp_norm(p: PNorm, e0: f64, e1: f64) -> f64 {
    let (m0, m1) = (e0.abs(), e1.abs());
    let (big, small) = if m0 >= m1 { (m0, m1) } else { (m1, m0) };
    if big == 0.0 {
        return 0.0;
    }
    let p = p.get();
    let q = p + 1.0;
    let ratio = small / big;
    let changes_sign = small != 0.0 && (e0 < 0.0) != (e1 < 0.0);
    // mean of |h/big|^p over [0, 1]
    let mean = if changes_sign {
        (1.0 + ratio.powf(q)) / (q * (1.0 + ratio))
    } else {
        let gap = (big - small) / big;
        if gap == 0.0 {
            1.0
        } else {
            -(q * (-gap).ln_1p()).exp_m1() / (q * gap)
        }
    };
    big * mean.powf(1.0 / p)
}

/// L_p distance between two intervals.
pub fn interval_distance(p: PNorm, left: EndpointPair, right: EndpointPair) -> f64 {
    line_lp_norm(p, left.b - right.b, left.a - right.a)
}

/// Which index goes to the `x = 1` end of the line when building intervals
/// from `(V, A)` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalOrder {
    /// `[A, V]`, used when the left operand has `V >= 0`.
    AmbiguityFirst,
    /// `[V, A]`, used when the left operand has `V < 0`.
    ValueFirst,
}

impl IntervalOrder {
    pub fn for_value(value: f64) -> Self {
        if value >= 0.0 {
            IntervalOrder::AmbiguityFirst
        } else {
            IntervalOrder::ValueFirst
        }
    }

    pub fn pair(self, idx: &VaIndex) -> EndpointPair {
        match self {
            IntervalOrder::AmbiguityFirst => EndpointPair::new(idx.ambiguity, idx.value),
            IntervalOrder::ValueFirst => EndpointPair::new(idx.value, idx.ambiguity),
        }
    }
}

/// Distance between two index pairs with an explicit interval order.
///
/// Both orders give the same number: swapping the ends of both intervals
/// reflects the difference line about `x = 1/2`, which leaves its norm alone.
pub fn va_distance_with_order(p: PNorm, x: &VaIndex, y: &VaIndex, order: IntervalOrder) -> f64 {
    interval_distance(p, order.pair(x), order.pair(y))
}

/// Distance between two index pairs, ordering the intervals by the sign of
/// `x.value`.
pub fn va_distance(p: PNorm, x: &VaIndex, y: &VaIndex) -> f64 {
    va_distance_with_order(p, x, y, IntervalOrder::for_value(x.value))
}

/// L_p distance between two TRIFNs through their value/ambiguity indices.
pub fn trifn_distance(p: PNorm, x: &Trifn, y: &Trifn, lambda: Lambda) -> f64 {
    va_distance(p, &va_index(x, lambda), &va_index(y, lambda))
}

/// Fixed-exponent closed forms for `p = 2` and `p = 3`.
pub mod special {
    use super::EndpointPair;

    /// `p = 2` distance between `[a, b]` and `[c, d]`.
    pub fn euclidean(left: EndpointPair, right: EndpointPair) -> f64 {
        let (da, db) = (left.a - right.a, left.b - right.b);
        ((da * da + db * db + da * db) / 3.0).sqrt()
    }

    /// `p = 2` distance between `[a, b]` and the degenerate interval `[c, c]`.
    pub fn euclidean_to_point(interval: EndpointPair, c: f64) -> f64 {
        let (da, db) = (interval.a - c, interval.b - c);
        ((da * da + db * db + da * db) / 3.0).sqrt()
    }

    /// `p = 2` distance between `[a, b]` and 0.
    pub fn euclidean_to_origin(interval: EndpointPair) -> f64 {
        let (a, b) = (interval.a, interval.b);
        ((a * a + b * b + a * b) / 3.0).sqrt()
    }

    /// `p = 3` distance, valid only when `a - c` and `b - d` do not have
    /// opposite signs; returns `None` otherwise. When both differences are
    /// non-positive the bracket is negative and its magnitude is used.
    pub fn cubic(left: EndpointPair, right: EndpointPair) -> Option<f64> {
        cubic_from_differences(left.a - right.a, left.b - right.b)
    }

    /// `p = 3` distance between `[a, b]` and 0 under the same sign condition.
    pub fn cubic_to_origin(interval: EndpointPair) -> Option<f64> {
        cubic_from_differences(interval.a, interval.b)
    }

    fn cubic_from_differences(x: f64, y: f64) -> Option<f64> {
        if (x < 0.0 && y > 0.0) || (x > 0.0 && y < 0.0) {
            return None;
        }
        let bracket = x * x * x + y * y * y + x * x * y + x * y * y;
        Some((bracket / 4.0).abs().cbrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn p_must_exceed_one() {
        assert!(PNorm::new(1.0).is_err());
        assert!(PNorm::new(0.5).is_err());
        assert!(PNorm::new(f64::INFINITY).is_err());
        assert!(PNorm::new(f64::NAN).is_err());
        assert!(PNorm::new(1.000_001).is_ok());
    }

    #[test]
    fn table_cell_distance_to_origin() {
        let d = interval_distance(
            PNorm::TWO,
            EndpointPair::new(0.525, 0.099),
            EndpointPair::new(0.0, 0.0),
        );
        assert_abs_diff_eq!(d, 0.335_360_999_5, epsilon = 1e-9);
    }

    #[test]
    fn identical_pairs_are_zero() {
        let x = EndpointPair::new(0.3, -0.7);
        for p in [1.5, 2.0, 3.0, 5.5] {
            assert_eq!(interval_distance(PNorm::new(p).unwrap(), x, x), 0.0);
        }
    }

    #[test]
    fn sign_changing_line() {
        // sqrt(0.02485363), from integrating (-0.3558x + 0.0583)^2 by hand
        let d = line_lp_norm(PNorm::TWO, 0.0583, -0.2975);
        assert_abs_diff_eq!(d, 0.024_853_63_f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(d, 0.157_650_340_9, epsilon = 1e-9);
    }

    #[test]
    fn constant_line() {
        assert_abs_diff_eq!(line_lp_norm(PNorm::new(3.7).unwrap(), 0.18, 0.18), 0.18, epsilon = 1e-16);
        assert_abs_diff_eq!(line_lp_norm(PNorm::TWO, -0.18, -0.18), 0.18, epsilon = 1e-16);
    }

    #[test]
    fn nearly_constant_line_keeps_precision() {
        let e = 0.25;
        let d = line_lp_norm(PNorm::new(2.5).unwrap(), e, e * (1.0 + 1e-13));
        assert_abs_diff_eq!(d, e, epsilon = 1e-13);
    }

    #[test]
    fn one_sided_ramp() {
        // integral of (x)^p is 1/(p+1)
        for p in [1.5, 2.0, 4.0] {
            let expected = (1.0 / (p + 1.0_f64)).powf(1.0 / p);
            assert_abs_diff_eq!(line_lp_norm(PNorm::new(p).unwrap(), 0.0, 1.0), expected, epsilon = 1e-15);
        }
    }

    #[test]
    fn trifn_distance_set1() {
        let a = Trifn::triangular(0.5, 0.7, 0.9, 0.7, 0.2).unwrap();
        let b = Trifn::triangular(0.2, 0.3, 0.4, 0.6, 0.4).unwrap();
        let d = trifn_distance(PNorm::TWO, &a, &b, Lambda::HALF);
        assert_abs_diff_eq!(d, 0.218_574_929_9, epsilon = 1e-9);
        let to_origin = trifn_distance(PNorm::TWO, &a, &Trifn::ORIGIN, Lambda::HALF);
        assert_abs_diff_eq!(to_origin, 0.335_720_618_0, epsilon = 1e-9);
        assert_eq!(trifn_distance(PNorm::TWO, &a, &a, Lambda::HALF), 0.0);
    }

    #[test]
    fn cubic_form_rejects_sign_change() {
        assert!(special::cubic_to_origin(EndpointPair::new(0.2, -0.1)).is_none());
        let d = special::cubic_to_origin(EndpointPair::new(0.099, 0.525)).unwrap();
        assert_abs_diff_eq!(d, 0.354_437_264_9, epsilon = 1e-9);
    }
}
