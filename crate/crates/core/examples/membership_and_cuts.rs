//! Membership, non-membership and cuts of a single TRIFN.
//!
//! cargo run -p ifn-rank --example membership_and_cuts

use ifn_rank::Trifn;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = Trifn::new(0.2, 0.4, 0.5, 0.9, 0.5, 0.3)?;
    println!("{n}");

    println!("x\tmu\tnu\tpi");
    for i in 0..=12 {
        let x = 0.1 + 0.075 * i as f64;
        println!(
            "{x:.3}\t{:.3}\t{:.3}\t{:.3}",
            n.membership(x),
            n.nonmembership(x),
            n.indeterminacy(x)
        );
    }

    println!("\nalpha\tcut");
    for k in 0..=4 {
        let alpha = n.w() * k as f64 / 4.0;
        let cut = n.alpha_cut(alpha)?;
        println!("{alpha:.3}\t[{:.3}, {:.3}]", cut.lower, cut.upper);
    }
    println!("\nbeta\tcut");
    for k in 0..=4 {
        let beta = n.u() + (1.0 - n.u()) * k as f64 / 4.0;
        let cut = n.beta_cut(beta)?;
        println!("{beta:.3}\t[{:.3}, {:.3}]", cut.lower, cut.upper);
    }

    // alpha above w is outside the domain
    if let Err(e) = n.alpha_cut(0.8) {
        println!("\n{e}");
    }
    Ok(())
}
