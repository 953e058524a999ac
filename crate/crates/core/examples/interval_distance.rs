//! L_p distance between intervals and between TRIFNs.
//!
//! cargo run -p ifn-rank --example interval_distance

use ifn_rank::metric::special;
use ifn_rank::{interval_distance, line_lp_norm, trifn_distance, EndpointPair, Lambda, PNorm, Trifn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let left = EndpointPair::new(0.1, 0.525);
    let right = EndpointPair::new(0.04, 0.18);
    for p in [1.5, 2.0, 3.0, 8.0] {
        let p = PNorm::new(p)?;
        println!("p={:<4} D = {:.6}", p.get(), interval_distance(p, left, right));
    }
    println!("euclidean shortcut  {:.6}", special::euclidean(left, right));
    println!("cubic shortcut      {:.6}", special::cubic(left, right).unwrap_or(f64::NAN));

    // The line crosses zero here, so the cubic shortcut does not apply.
    let crossing = EndpointPair::new(-0.2, 0.3);
    println!(
        "crossing: L_3 = {:.6}, shortcut = {:?}",
        line_lp_norm(PNorm::THREE, crossing.b, crossing.a),
        special::cubic_to_origin(crossing)
    );

    let a = Trifn::triangular(0.5, 0.7, 0.9, 0.7, 0.2)?;
    let b = Trifn::triangular(0.2, 0.3, 0.4, 0.6, 0.4)?;
    println!("\nD_2(a, b) = {:.6}", trifn_distance(PNorm::TWO, &a, &b, Lambda::HALF));
    println!("D_2(a, 0) = {:.6}", trifn_distance(PNorm::TWO, &a, &Trifn::ORIGIN, Lambda::HALF));
    Ok(())
}
