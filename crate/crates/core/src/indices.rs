//! Value and ambiguity of a TRIFN and the lambda-weighted indices built on them.
//!
//! The membership-side quantities weight the alpha-cuts with `f(a) = 2a / w`
//! and the non-membership side weights beta-cuts with
//! `g(b) = 2(1 - b) / (1 - u)`. Both integrals have exact closed forms, which
//! is what this module evaluates; [`crate::oracle`] integrates them
//! numerically as a cross-check.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::trifn::Trifn;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("lambda={0} outside [0, 1]")]
pub struct LambdaError(pub f64);

/// Decision-maker preference weight in `[0, 1]`.
///
/// Values below one half lean pessimistic about hesitation, above one half
/// optimistic.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Lambda(f64);

impl Lambda {
    pub const HALF: Lambda = Lambda(0.5);

    pub fn new(value: f64) -> Result<Self, LambdaError> {
        if (0.0..=1.0).contains(&value) {
            Ok(Lambda(value))
        } else {
            Err(LambdaError(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for Lambda {
    fn default() -> Self {
        Lambda::HALF
    }
}

impl TryFrom<f64> for Lambda {
    type Error = LambdaError;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        Lambda::new(value)
    }
}

impl From<Lambda> for f64 {
    fn from(lambda: Lambda) -> f64 {
        lambda.0
    }
}

/// Values and ambiguities of the membership (`mu`) and non-membership (`nu`)
/// functions.
///
/// `a_mu <= a_nu` always. `v_mu <= v_nu` only when the support's weighted
/// location is non-negative; for a negatively located number the order flips
/// and `V` falls as `lambda` grows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VaComponents {
    pub v_mu: f64,
    pub v_nu: f64,
    pub a_mu: f64,
    pub a_nu: f64,
}

/// Value index `V` and ambiguity index `A` at a given `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VaIndex {
    pub value: f64,
    pub ambiguity: f64,
    pub lambda: Lambda,
}

pub fn components(n: &Trifn) -> VaComponents {
    let [a1, a2, a3, a4] = n.abscissae();
    let location = (a1 + a4 + 2.0 * (a2 + a3)) / 6.0;
    let spread = ((a4 - a1) - 2.0 * (a2 - a3)) / 3.0;
    let nu_weight = 1.0 - n.u();
    VaComponents {
        v_mu: location * n.w(),
        v_nu: location * nu_weight,
        a_mu: spread * n.w(),
        a_nu: spread * nu_weight,
    }
}

impl VaComponents {
    pub fn blend(&self, lambda: Lambda) -> VaIndex {
        let l = lambda.get();
        VaIndex {
            value: self.v_mu + l * (self.v_nu - self.v_mu),
            ambiguity: self.a_nu - l * (self.a_nu - self.a_mu),
            lambda,
        }
    }
}

pub fn va_index(n: &Trifn, lambda: Lambda) -> VaIndex {
    components(n).blend(lambda)
}
