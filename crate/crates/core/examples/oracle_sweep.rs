//! Closed forms against numerical quadrature on random inputs.
//!
//! cargo run -p ifn-rank --release --example oracle_sweep [samples] [seed]

use ifn_rank::oracle::{integrate, lp_by_quadrature, QuadratureSpec};
use ifn_rank::{line_lp_norm, sweep, Lambda, PNorm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let samples: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2000);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);

    let spec = QuadratureSpec::for_norms();
    let p = PNorm::new(2.5)?;
    println!(
        "single line, p=2.5: closed {:.15} quadrature {:.15}",
        line_lp_norm(p, -0.2, 0.3),
        lp_by_quadrature(p, -0.2, 0.3, &spec)?
    );
    println!("integral of x^2 on [0, 1]: {:.15}", integrate(|x| x * x, 0.0, 1.0, &spec)?);

    let report = sweep::run(samples, seed, Lambda::HALF)?;
    println!("\n{samples} samples, seed {seed}");
    for d in &report.deviations {
        println!("{:<12}{:.2e}", d.quantity, d.max_abs_diff);
    }
    println!("passed: {}", report.passed());
    Ok(())
}
