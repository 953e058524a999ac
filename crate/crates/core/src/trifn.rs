//! Trapezoidal intuitionistic fuzzy numbers (TRIFNs).
//!
//! A [`Trifn`] `<(a1, a2, a3, a4); w, u>` has a trapezoidal membership
//! function rising from 0 at `a1` to the plateau `w` on `[a2, a3]` and back
//! to 0 at `a4`, and a mirrored non-membership function falling from 1 to the
//! floor `u` on the same plateau. Triangular numbers are the special case
//! `a2 == a3`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which field of a six-tuple a validation error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    A1,
    A2,
    A3,
    A4,
    W,
    U,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Field::A1 => "a1",
            Field::A2 => "a2",
            Field::A3 => "a3",
            Field::A4 => "a4",
            Field::W => "w",
            Field::U => "u",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrifnError {
    #[error("{field} is not a finite number ({value})")]
    NonFinite { field: Field, value: f64 },
    #[error("abscissae out of order: {left_field}={left} > {right_field}={right}")]
    Ordering {
        left_field: Field,
        left: f64,
        right_field: Field,
        right: f64,
    },
    #[error("degree {field}={value} outside [0, 1]")]
    DegreeRange { field: Field, value: f64 },
    #[error("w + u = {sum} exceeds 1 (w={w}, u={u})")]
    DegreeSum { w: f64, u: f64, sum: f64 },
    #[error("expected 3 or 4 abscissae, got {0}")]
    AbscissaCount(usize),
    #[error("alpha={alpha} outside [0, w={w}]")]
    AlphaOutOfRange { alpha: f64, w: f64 },
    #[error("beta={beta} outside [u={u}, 1]")]
    BetaOutOfRange { beta: f64, u: f64 },
    #[error("multiplication needs sign-definite operands; {operand} operand has support [{lower}, {upper}]")]
    MixedSign {
        operand: &'static str,
        lower: f64,
        upper: f64,
    },
    #[error("reciprocal undefined: support [{lower}, {upper}] contains 0")]
    ReciprocalSpansZero { lower: f64, upper: f64 },
}

/// A closed real interval produced by an alpha- or beta-cut.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutInterval {
    pub lower: f64,
    pub upper: f64,
}

impl CutInterval {
    pub fn midpoint(&self) -> f64 {
        (self.lower + self.upper) / 2.0
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// `true` if `self` lies inside `other`.
    pub fn is_within(&self, other: &CutInterval) -> bool {
        other.lower <= self.lower && self.upper <= other.upper
    }
}

/// Trapezoidal intuitionistic fuzzy number `<(a1, a2, a3, a4); w, u>`.
///
/// Constructed only through [`Trifn::new`] (or the helpers built on it), so
/// every value satisfies `a1 <= a2 <= a3 <= a4`, `0 <= w, u <= 1` and
/// `w + u <= 1`. Comparisons are exact; there is no epsilon slack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trifn {
    a: [f64; 4],
    w: f64,
    u: f64,
}

impl Trifn {
    /// The origin `<(0, 0, 0, 0); 0, 1>` used as the reference point for ranking.
    pub const ORIGIN: Trifn = Trifn {
        a: [0.0; 4],
        w: 0.0,
        u: 1.0,
    };

    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64, w: f64, u: f64) -> Result<Self, TrifnError> {
        let fields = [
            (Field::A1, a1),
            (Field::A2, a2),
            (Field::A3, a3),
            (Field::A4, a4),
            (Field::W, w),
            (Field::U, u),
        ];
        for (field, value) in fields {
            if !value.is_finite() {
                return Err(TrifnError::NonFinite { field, value });
            }
        }
        for pair in fields[..4].windows(2) {
            let ((left_field, left), (right_field, right)) = (pair[0], pair[1]);
            if !(left <= right) {
                return Err(TrifnError::Ordering {
                    left_field,
                    left,
                    right_field,
                    right,
                });
            }
        }
        for (field, value) in [(Field::W, w), (Field::U, u)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(TrifnError::DegreeRange { field, value });
            }
        }
        let sum = w + u;
        if sum > 1.0 {
            return Err(TrifnError::DegreeSum { w, u, sum });
        }
        Ok(Trifn {
            a: [a1, a2, a3, a4],
            w,
            u,
        })
    }

    /// Triangular number `<(t1, t2, t3); w, u>`, stored with `a2 == a3 == t2`.
    pub fn triangular(t1: f64, t2: f64, t3: f64, w: f64, u: f64) -> Result<Self, TrifnError> {
        Self::new(t1, t2, t2, t3, w, u)
    }

    /// Builds from 3 (triangular) or 4 (trapezoidal) abscissae.
    pub fn from_abscissae(abscissae: &[f64], w: f64, u: f64) -> Result<Self, TrifnError> {
        match *abscissae {
            [t1, t2, t3] => Self::triangular(t1, t2, t3, w, u),
            [a1, a2, a3, a4] => Self::new(a1, a2, a3, a4, w, u),
            _ => Err(TrifnError::AbscissaCount(abscissae.len())),
        }
    }

    /// Crisp number `t` carried as a degenerate TRIFN with the given degrees.
    pub fn crisp(t: f64, w: f64, u: f64) -> Result<Self, TrifnError> {
        Self::new(t, t, t, t, w, u)
    }

    pub fn abscissae(&self) -> [f64; 4] {
        self.a
    }

    pub fn a1(&self) -> f64 {
        self.a[0]
    }

    pub fn a2(&self) -> f64 {
        self.a[1]
    }

    pub fn a3(&self) -> f64 {
        self.a[2]
    }

    pub fn a4(&self) -> f64 {
        self.a[3]
    }

    /// Maximum membership degree.
    pub fn w(&self) -> f64 {
        self.w
    }

    /// Minimum non-membership degree.
    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn is_triangular(&self) -> bool {
        self.a[1] == self.a[2]
    }

    pub fn membership(&self, x: f64) -> f64 {
        let [a1, a2, a3, a4] = self.a;
        if a1 <= x && x < a2 {
            (x - a1) / (a2 - a1) * self.w
        } else if a2 <= x && x <= a3 {
            self.w
        } else if a3 < x && x <= a4 {
            (a4 - x) / (a4 - a3) * self.w
        } else {
            0.0
        }
    }

    pub fn nonmembership(&self, x: f64) -> f64 {
        let [a1, a2, a3, a4] = self.a;
        let u = self.u;
        if a1 <= x && x < a2 {
            ((a2 - x) + u * (x - a1)) / (a2 - a1)
        } else if a2 <= x && x <= a3 {
            u
        } else if a3 < x && x <= a4 {
            ((x - a3) + u * (a4 - x)) / (a4 - a3)
        } else {
            1.0
        }
    }

    /// Hesitation degree `1 - mu(x) - nu(x)`.
    pub fn indeterminacy(&self, x: f64) -> f64 {
        1.0 - self.membership(x) - self.nonmembership(x)
    }

    /// `{x : mu(x) >= alpha}` for `alpha` in `[0, w]`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<CutInterval, TrifnError> {
        if !(0.0 <= alpha && alpha <= self.w) {
            return Err(TrifnError::AlphaOutOfRange { alpha, w: self.w });
        }
        let [a1, a2, a3, a4] = self.a;
        if self.w == 0.0 {
            return Ok(CutInterval {
                lower: a1,
                upper: a4,
            });
        }
        Ok(CutInterval {
            lower: a1 + alpha * (a2 - a1) / self.w,
            upper: a4 - alpha * (a4 - a3) / self.w,
        })
    }

    /// `{x : nu(x) <= beta}` for `beta` in `[u, 1]`.
    pub fn beta_cut(&self, beta: f64) -> Result<CutInterval, TrifnError> {
        if !(self.u <= beta && beta <= 1.0) {
            return Err(TrifnError::BetaOutOfRange { beta, u: self.u });
        }
        let [a1, a2, a3, a4] = self.a;
        let span = 1.0 - self.u;
        if span == 0.0 {
            return Ok(CutInterval {
                lower: a1,
                upper: a4,
            });
        }
        Ok(CutInterval {
            lower: ((1.0 - beta) * a2 + (beta - self.u) * a1) / span,
            upper: ((1.0 - beta) * a3 + (beta - self.u) * a4) / span,
        })
    }

    /// Scalar multiple; a negative factor reverses the abscissae.
    pub fn scale(&self, lambda: f64) -> Trifn {
        let [a1, a2, a3, a4] = self.a;
        let a = if lambda >= 0.0 {
            [lambda * a1, lambda * a2, lambda * a3, lambda * a4]
        } else {
            [lambda * a4, lambda * a3, lambda * a2, lambda * a1]
        };
        Trifn { a, ..*self }
    }

    /// Product of two sign-definite numbers.
    ///
    /// An operand counts as non-negative when `a1 >= 0` and non-positive
    /// when `a4 <= 0`; anything straddling zero is rejected.
    pub fn checked_mul(&self, other: &Trifn) -> Result<Trifn, TrifnError> {
        let sx = self.sign("left")?;
        let sy = other.sign("right")?;
        let [a1, a2, a3, a4] = self.a;
        let [b1, b2, b3, b4] = other.a;
        let a = match (sx, sy) {
            (Sign::NonNegative, Sign::NonNegative) => [a1 * b1, a2 * b2, a3 * b3, a4 * b4],
            (Sign::NonPositive, Sign::NonNegative) => [a1 * b4, a2 * b3, a3 * b2, a4 * b1],
            (Sign::NonNegative, Sign::NonPositive) => [a4 * b1, a3 * b2, a2 * b3, a1 * b4],
            (Sign::NonPositive, Sign::NonPositive) => [a4 * b4, a3 * b3, a2 * b2, a1 * b1],
        };
        Ok(Trifn {
            a,
            w: self.w.min(other.w),
            u: self.u.max(other.u),
        })
    }

    /// `<(1/a4, 1/a3, 1/a2, 1/a1); w, u>` for supports not containing 0.
    pub fn reciprocal(&self) -> Result<Trifn, TrifnError> {
        let [a1, a2, a3, a4] = self.a;
        if a1 <= 0.0 && 0.0 <= a4 {
            return Err(TrifnError::ReciprocalSpansZero {
                lower: a1,
                upper: a4,
            });
        }
        Ok(Trifn {
            a: [1.0 / a4, 1.0 / a3, 1.0 / a2, 1.0 / a1],
            ..*self
        })
    }

    fn sign(&self, operand: &'static str) -> Result<Sign, TrifnError> {
        if self.a[0] >= 0.0 {
            Ok(Sign::NonNegative)
        } else if self.a[3] <= 0.0 {
            Ok(Sign::NonPositive)
        } else {
            Err(TrifnError::MixedSign {
                operand,
                lower: self.a[0],
                upper: self.a[3],
            })
        }
    }

    fn combine_degrees(&self, other: &Trifn, a: [f64; 4]) -> Trifn {
        Trifn {
            a,
            w: self.w.min(other.w),
            u: self.u.max(other.u),
        }
    }
}

#[derive(Clone, Copy)]
enum Sign {
    NonNegative,
    NonPositive,
}

impl Add for Trifn {
    type Output = Trifn;

    fn add(self, rhs: Trifn) -> Trifn {
        let [a1, a2, a3, a4] = self.a;
        let [b1, b2, b3, b4] = rhs.a;
        self.combine_degrees(&rhs, [a1 + b1, a2 + b2, a3 + b3, a4 + b4])
    }
}

impl Sub for Trifn {
    type Output = Trifn;

    fn sub(self, rhs: Trifn) -> Trifn {
        let [a1, a2, a3, a4] = self.a;
        let [b1, b2, b3, b4] = rhs.a;
        self.combine_degrees(&rhs, [a1 - b4, a2 - b3, a3 - b2, a4 - b1])
    }
}

impl Neg for Trifn {
    type Output = Trifn;

    fn neg(self) -> Trifn {
        self.scale(-1.0)
    }
}

impl fmt::Display for Trifn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4] = self.a;
        write!(f, "<({a1}, {a2}, {a3}, {a4}); {}, {}>", self.w, self.u)
    }
}
