//! Random valid inputs for sweeps and property checks.

use rand::Rng;

use crate::trifn::Trifn;

/// Random valid [`Trifn`] with abscissae in `[-range, range]`.
///
/// Roughly one draw in eight is a boundary case: `w = 0`, `u = 1`,
/// `w + u = 1`, a triangular number or a crisp point.
pub fn trifn<R: Rng + ?Sized>(rng: &mut R, range: f64) -> Trifn {
    let mut a: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-range..=range));
    a.sort_by(f64::total_cmp);
    let mut w: f64 = rng.gen_range(0.0..=1.0);
    let mut u: f64 = rng.gen_range(0.0..=1.0 - w);
    match rng.gen_range(0..48) {
        0 => w = 0.0,
        1 => u = 1.0 - w,
        2 => {
            w = 0.0;
            u = 1.0;
        }
        3 => a[2] = a[1],
        4 => a = [a[0]; 4],
        5 => u = 0.0,
        _ => {}
    }
    Trifn::new(a[0], a[1], a[2], a[3], w, u).expect("sampled values satisfy the invariants")
}

/// Random valid [`Trifn`] whose support lies in `[0, range]`.
pub fn positive_trifn<R: Rng + ?Sized>(rng: &mut R, range: f64) -> Trifn {
    let n = trifn(rng, range / 2.0);
    n + Trifn::crisp(range / 2.0, 1.0, 0.0).expect("crisp shift is valid")
}

/// Random exponent in `(1, max]`.
pub fn exponent<R: Rng + ?Sized>(rng: &mut R, max: f64) -> f64 {
    loop {
        let p = rng.gen_range(1.0..=max);
        if p > 1.0 {
            return p;
        }
    }
}
