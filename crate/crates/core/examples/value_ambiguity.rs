//! Value and ambiguity indices across the preference weight lambda.
//!
//! cargo run -p ifn-rank --example value_ambiguity

use ifn_rank::{components, va_index, Lambda, Trifn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let positive = Trifn::triangular(0.5, 0.7, 0.9, 0.7, 0.2)?;
    let negative = -positive;

    for (name, n) in [("positive", positive), ("negative", negative)] {
        let c = components(&n);
        println!("{name}: {n}");
        println!(
            "  V_mu={:.4} V_nu={:.4} A_mu={:.4} A_nu={:.4}",
            c.v_mu, c.v_nu, c.a_mu, c.a_nu
        );
        println!("  lambda\tV\tA");
        for k in 0..=4 {
            let lambda = Lambda::new(k as f64 / 4.0)?;
            let idx = va_index(&n, lambda);
            println!("  {:.2}\t{:.4}\t{:.4}", lambda.get(), idx.value, idx.ambiguity);
        }
    }
    // V rises with lambda for the positive number and falls for its negative;
    // A falls in both.
    Ok(())
}
