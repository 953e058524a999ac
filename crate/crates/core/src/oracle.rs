//! Numerical-integration oracle for the closed forms.
//!
//! Nothing here calls into [`crate::indices`] or the closed-form branch of
//! [`crate::metric`]: values and ambiguities are integrated straight from the
//! cut endpoints, and L_p norms straight from `|h(x)|^p`.

use thiserror::Error;

use crate::metric::PNorm;
use crate::trifn::{CutInterval, Trifn};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("quadrature tolerance {abs_tol:e} not reached within depth {max_depth} on [{lower}, {upper}]")]
    ToleranceNotReached {
        abs_tol: f64,
        max_depth: u32,
        lower: f64,
        upper: f64,
    },
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureRule {
    /// Fixed composite Simpson with `2^max_depth` panels; never reports failure.
    CompositeSimpson,
    /// Recursive Simpson bisection until the Richardson error estimate drops
    /// below the (halved per level) tolerance.
    AdaptiveBisection,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    rule: QuadratureRule,
    abs_tol: f64,
    max_depth: u32,
}

impl QuadratureSpec {
    pub fn new(rule: QuadratureRule, abs_tol: f64, max_depth: u32) -> Result<Self, OracleError> {
        if !(abs_tol > 0.0) {
            return Err(OracleError::InvalidSpec("abs_tol must be positive"));
        }
        if max_depth < 1 {
            return Err(OracleError::InvalidSpec("max_depth must be at least 1"));
        }
        if rule == QuadratureRule::CompositeSimpson && max_depth > 24 {
            return Err(OracleError::InvalidSpec("composite Simpson depth above 24"));
        }
        Ok(QuadratureSpec {
            rule,
            abs_tol,
            max_depth,
        })
    }

    pub fn rule(&self) -> QuadratureRule {
        self.rule
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    /// 32-panel composite Simpson: exact (to round-off) on the quadratic
    /// integrands of values and ambiguities.
    pub fn for_indices() -> Self {
        QuadratureSpec {
            rule: QuadratureRule::CompositeSimpson,
            abs_tol: 1e-10,
            max_depth: 5,
        }
    }

    /// Adaptive bisection used for `|h|^p`.
    pub fn for_norms() -> Self {
        QuadratureSpec {
            rule: QuadratureRule::AdaptiveBisection,
            abs_tol: 1e-13,
            max_depth: 60,
        }
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec::for_norms()
    }
}

/// Integrates `f` over `[lower, upper]` according to `spec`.
pub fn integrate<F>(f: F, lower: f64, upper: f64, spec: &QuadratureSpec) -> Result<f64, OracleError>
where
    F: Fn(f64) -> f64,
{
    match spec.rule {
        QuadratureRule::CompositeSimpson => Ok(composite_simpson(&f, lower, upper, 1 << spec.max_depth)),
        QuadratureRule::AdaptiveBisection => adaptive_simpson(&f, lower, upper, spec),
    }
}

fn composite_simpson<F: Fn(f64) -> f64>(f: &F, lower: f64, upper: f64, panels: usize) -> f64 {
    let panels = panels.max(2) & !1;
    let h = (upper - lower) / panels as f64;
    let node = |i: usize| {
        if i == panels {
            upper
        } else {
            (lower + h * i as f64).min(upper)
        }
    };
    let mut sum = f(lower) + f(upper);
    for i in 1..panels {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += weight * f(node(i));
    }
    sum * h / 3.0
}

struct Panel {
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> Panel {
    let m = 0.5 * (a + b);
    let fm = f(m);
    Panel {
        a,
        fa,
        m,
        fm,
        b,
        fb,
        whole: (b - a) / 6.0 * (fa + 4.0 * fm + fb),
    }
}

fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    lower: f64,
    upper: f64,
    spec: &QuadratureSpec,
) -> Result<f64, OracleError> {
    if lower == upper {
        return Ok(0.0);
    }
    let panel = simpson(f, lower, f(lower), upper, f(upper));
    refine(f, panel, spec.abs_tol, 0, spec)
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    panel: Panel,
    tol: f64,
    depth: u32,
    spec: &QuadratureSpec,
) -> Result<f64, OracleError> {
    let left = simpson(f, panel.a, panel.fa, panel.m, panel.fm);
    let right = simpson(f, panel.m, panel.fm, panel.b, panel.fb);
    let err = left.whole + right.whole - panel.whole;
    if err.abs() <= 15.0 * tol {
        return Ok(left.whole + right.whole + err / 15.0);
    }
    // no representable midpoint left, or out of depth
    if depth >= spec.max_depth || left.m <= panel.a || right.m >= panel.b {
        return Err(OracleError::ToleranceNotReached {
            abs_tol: spec.abs_tol,
            max_depth: spec.max_depth,
            lower: panel.a,
            upper: panel.b,
        });
    }
    let half = tol / 2.0;
    Ok(refine(f, left, half, depth + 1, spec)? + refine(f, right, half, depth + 1, spec)?)
}

/// Membership side integrates over alpha-cuts, non-membership side over beta-cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Membership,
    NonMembership,
}

/// Weighted integral of `kernel(cut)` over the cuts on `side`.
fn integrate_cuts<K>(n: &Trifn, side: Side, kernel: K) -> f64
where
    K: Fn(CutInterval) -> f64,
{
    let spec = QuadratureSpec::for_indices();
    let result = match side {
        Side::Membership => {
            let w = n.w();
            if w == 0.0 {
                return 0.0;
            }
            let weight = |alpha: f64| 2.0 * alpha / w;
            integrate(
                |alpha| {
                    let cut = n.alpha_cut(alpha.clamp(0.0, w)).expect("alpha inside [0, w]");
                    kernel(cut) * weight(alpha)
                },
                0.0,
                w,
                &spec,
            )
        }
        Side::NonMembership => {
            let u = n.u();
            if u == 1.0 {
                return 0.0;
            }
            let weight = |beta: f64| 2.0 * (1.0 - beta) / (1.0 - u);
            integrate(
                |beta| {
                    let cut = n.beta_cut(beta.clamp(u, 1.0)).expect("beta inside [u, 1]");
                    kernel(cut) * weight(beta)
                },
                u,
                1.0,
                &spec,
            )
        }
    };
    result.expect("composite Simpson cannot fail")
}

/// `V_mu` or `V_nu` by integrating cut midpoints.
pub fn value_by_quadrature(n: &Trifn, side: Side) -> f64 {
    integrate_cuts(n, side, |cut| cut.midpoint())
}

/// `A_mu` or `A_nu` by integrating cut widths.
pub fn ambiguity_by_quadrature(n: &Trifn, side: Side) -> f64 {
    integrate_cuts(n, side, |cut| cut.width())
}

/// L_p norm of `h(x) = (e1 - e0)x + e0` on `[0, 1]` by quadrature.
///
/// The line is first divided by `max(|e0|, |e1|)` so the integrand is bounded
/// by 1, and the interval is split at the root of `h` when it falls inside,
/// leaving each piece smooth in its interior.
pub fn lp_by_quadrature(p: PNorm, e0: f64, e1: f64, spec: &QuadratureSpec) -> Result<f64, OracleError> {
    let scale = e0.abs().max(e1.abs());
    if scale == 0.0 {
        return Ok(0.0);
    }
    let (s0, s1) = (e0 / scale, e1 / scale);
    let p = p.get();
    let integrand = |x: f64| ((s1 - s0) * x + s0).abs().powf(p);
    let mut breaks = vec![0.0];
    if s0 != s1 {
        let root = -s0 / (s1 - s0);
        if root > 0.0 && root < 1.0 {
            breaks.push(root);
        }
    }
    breaks.push(1.0);
    let mut total = 0.0;
    for piece in breaks.windows(2) {
        total += integrate(integrand, piece[0], piece[1], spec)?;
    }
    Ok(scale * total.powf(1.0 / p))
}
