//! Ranking a handful of alternatives, including negative ones and a tie.
//!
//! cargo run -p ifn-rank --example rank_alternatives [p]

use ifn_rank::{rank, Lambda, PNorm, RankConfig, Trifn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: f64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2.0);
    let config = RankConfig {
        p: PNorm::new(p)?,
        lambda: Lambda::HALF,
        ..RankConfig::default()
    };

    let supplier = |a1, a2, a3, a4, w, u| Trifn::new(a1, a2, a3, a4, w, u);
    let items = vec![
        ("north", supplier(0.3, 0.4, 0.5, 0.6, 0.2, 0.4)?),
        ("south", supplier(0.1, 0.2, 0.3, 0.4, 0.3, 0.5)?),
        ("east", supplier(0.5, 0.6, 0.7, 0.8, 0.2, 0.6)?),
        ("west", supplier(-0.4, -0.3, -0.1, 0.0, 0.6, 0.3)?),
        ("east-copy", supplier(0.5, 0.6, 0.7, 0.8, 0.2, 0.6)?),
    ];

    let outcome = rank(&items, config)?;
    println!("rank\tid\tV\tA\trho");
    for (pos, group) in outcome.tie_groups.iter().enumerate() {
        for e in &outcome.entries[group.clone()] {
            println!("{}\t{}\t{:.4}\t{:.4}\t{:.4}", pos + 1, e.id, e.value, e.ambiguity, e.rho);
        }
    }
    println!("{}", outcome.render_descending());
    Ok(())
}
