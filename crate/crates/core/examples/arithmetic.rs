//! Addition, subtraction, scaling, products and reciprocals.
//!
//! cargo run -p ifn-rank --example arithmetic

use ifn_rank::Trifn;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = Trifn::new(0.3, 0.4, 0.5, 0.6, 0.2, 0.4)?;
    let b = Trifn::new(0.1, 0.2, 0.3, 0.4, 0.3, 0.5)?;

    println!("a       = {a}");
    println!("b       = {b}");
    println!("a + b   = {}", a + b);
    println!("a - b   = {}", a - b);
    println!("-a      = {}", -a);
    println!("2.5 a   = {}", a.scale(2.5));
    println!("-2 a    = {}", a.scale(-2.0));
    println!("a * b   = {}", a.checked_mul(&b)?);
    println!("a * -b  = {}", a.checked_mul(&-b)?);
    println!("1 / a   = {}", a.reciprocal()?);

    let straddles = Trifn::new(-0.1, 0.0, 0.2, 0.3, 0.5, 0.2)?;
    match a.checked_mul(&straddles) {
        Ok(p) => println!("a * s   = {p}"),
        Err(e) => println!("a * s   : {e}"),
    }
    match straddles.reciprocal() {
        Ok(r) => println!("1 / s   = {r}"),
        Err(e) => println!("1 / s   : {e}"),
    }
    Ok(())
}
