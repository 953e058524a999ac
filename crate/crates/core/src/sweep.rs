//! Randomized agreement sweep between the closed forms and the oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::indices::{components, Lambda};
use crate::metric::{line_lp_norm, trifn_distance, PNorm};
use crate::oracle::{ambiguity_by_quadrature, lp_by_quadrature, value_by_quadrature, OracleError, QuadratureSpec, Side};
use crate::sample;
use crate::trifn::Trifn;

pub const SWEEP_EXPONENTS: [f64; 4] = [2.0, 2.5, 3.0, 4.0];
pub const AGREEMENT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Deviation {
    pub quantity: String,
    pub max_abs_diff: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub deviations: Vec<Deviation>,
}

impl SweepReport {
    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().map(|d| d.max_abs_diff).fold(0.0, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.max_deviation() <= self.tolerance
    }
}

#[derive(Default)]
struct Tracker {
    max: f64,
    count: usize,
}

impl Tracker {
    fn record(&mut self, closed: f64, numeric: f64) {
        let diff = (closed - numeric).abs();
        // NaN must not hide behind f64::max
        self.max = if diff.is_nan() { f64::NAN } else { self.max.max(diff) };
        self.count += 1;
    }
}

/// Index pair rebuilt from quadrature only.
fn oracle_index(n: &Trifn, lambda: Lambda) -> (f64, f64) {
    let l = lambda.get();
    let v_mu = value_by_quadrature(n, Side::Membership);
    let v_nu = value_by_quadrature(n, Side::NonMembership);
    let a_mu = ambiguity_by_quadrature(n, Side::Membership);
    let a_nu = ambiguity_by_quadrature(n, Side::NonMembership);
    (v_mu + l * (v_nu - v_mu), a_nu - l * (a_nu - a_mu))
}

/// Quadrature-only distance: indices by cut integration, norm by adaptive Simpson,
/// using the `V >= 0` interval order regardless of sign.
pub fn oracle_distance(p: PNorm, x: &Trifn, y: &Trifn, lambda: Lambda) -> Result<f64, OracleError> {
    let (vx, ax) = oracle_index(x, lambda);
    let (vy, ay) = oracle_index(y, lambda);
    lp_by_quadrature(p, vx - vy, ax - ay, &QuadratureSpec::for_norms())
}

/// Draws `samples` random numbers (and pairs) and records the largest
/// closed-form vs quadrature disagreement for each quantity.
pub fn run(samples: usize, seed: u64, lambda: Lambda) -> Result<SweepReport, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = QuadratureSpec::for_norms();
    let mut v_mu = Tracker::default();
    let mut v_nu = Tracker::default();
    let mut a_mu = Tracker::default();
    let mut a_nu = Tracker::default();
    let mut lines: Vec<Tracker> = SWEEP_EXPONENTS.iter().map(|_| Tracker::default()).collect();
    let mut distances: Vec<Tracker> = SWEEP_EXPONENTS.iter().map(|_| Tracker::default()).collect();

    for _ in 0..samples {
        let x = sample::trifn(&mut rng, 2.0);
        let y = sample::trifn(&mut rng, 2.0);
        let c = components(&x);
        v_mu.record(c.v_mu, value_by_quadrature(&x, Side::Membership));
        v_nu.record(c.v_nu, value_by_quadrature(&x, Side::NonMembership));
        a_mu.record(c.a_mu, ambiguity_by_quadrature(&x, Side::Membership));
        a_nu.record(c.a_nu, ambiguity_by_quadrature(&x, Side::NonMembership));

        let e0: f64 = rng.gen_range(-1.0..=1.0);
        let e1: f64 = rng.gen_range(-1.0..=1.0);
        for (i, &p) in SWEEP_EXPONENTS.iter().enumerate() {
            let p = PNorm::new(p).expect("sweep exponents exceed 1");
            lines[i].record(line_lp_norm(p, e0, e1), lp_by_quadrature(p, e0, e1, &spec)?);
            distances[i].record(trifn_distance(p, &x, &y, lambda), oracle_distance(p, &x, &y, lambda)?);
        }
    }

    let mut deviations = vec![
        Deviation { quantity: "V_mu".into(), max_abs_diff: v_mu.max, samples: v_mu.count },
        Deviation { quantity: "V_nu".into(), max_abs_diff: v_nu.max, samples: v_nu.count },
        Deviation { quantity: "A_mu".into(), max_abs_diff: a_mu.max, samples: a_mu.count },
        Deviation { quantity: "A_nu".into(), max_abs_diff: a_nu.max, samples: a_nu.count },
    ];
    for (i, p) in SWEEP_EXPONENTS.iter().enumerate() {
        deviations.push(Deviation {
            quantity: format!("line L_{p}"),
            max_abs_diff: lines[i].max,
            samples: lines[i].count,
        });
        deviations.push(Deviation {
            quantity: format!("D p={p}"),
            max_abs_diff: distances[i].max,
            samples: distances[i].count,
        });
    }
    Ok(SweepReport {
        seed,
        samples,
        tolerance: AGREEMENT_TOLERANCE,
        deviations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_agrees() {
        let report = run(50, 7, Lambda::HALF).unwrap();
        assert!(report.passed(), "{report:#?}");
        assert_eq!(report.deviations.len(), 12);
    }
}
