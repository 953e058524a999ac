//! Recomputes the published tables and lists every cell that does not match.
//!
//! cargo run -p ifn-rank --example reproduce_tables

use ifn_rank::report;

fn main() {
    let report = report::tables();
    let (cells, orders) = report.discrepancies();
    let total = report.illustrative_cells.len() + report.comparison_p2_cells.len() + report.comparison_p3_cells.len();
    println!("{} of {total} cells reproduced", total - cells.len());
    for c in &cells {
        println!(
            "  {} {} {} {}: computed {:.4}, printed {} [{}]",
            c.table,
            c.set,
            c.id,
            c.column,
            c.computed,
            c.printed,
            c.known.unwrap_or("unexplained")
        );
    }
    for o in &orders {
        println!("  {} {} p={}: computed {}, printed {}", o.table, o.set, o.p, o.computed, o.printed);
    }
    println!("\nfull report:\n");
    print!("{}", report::render_text(&report, 4));
}
