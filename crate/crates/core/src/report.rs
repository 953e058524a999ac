//! Recomputes the published tables and compares them cell by cell.

use serde::Serialize;

use crate::fixtures::{self, ExampleSet};
use crate::indices::{va_index, Lambda};
use crate::metric::PNorm;
use crate::ranking::{rank, rho, RankConfig};

/// Allowed `|computed - printed|` for four-decimal cells.
pub const TABLE_TOLERANCE: f64 = 2e-3;
/// Allowed `|computed - printed|` for two-decimal comparison cells.
pub const COMPARISON_TOLERANCE: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellCheck {
    pub table: &'static str,
    pub set: &'static str,
    pub id: &'static str,
    pub column: &'static str,
    pub printed: f64,
    pub computed: f64,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub within: bool,
    pub known: Option<&'static str>,
}

impl CellCheck {
    fn new(
        table: &'static str,
        set: &'static str,
        id: &'static str,
        column: &'static str,
        printed: f64,
        computed: f64,
        tolerance: f64,
    ) -> Self {
        let abs_diff = (computed - printed).abs();
        CellCheck {
            table,
            set,
            id,
            column,
            printed,
            computed,
            abs_diff,
            tolerance,
            within: abs_diff <= tolerance,
            known: fixtures::known_deviation(table, set, id, column).map(|d| d.note),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderCheck {
    pub table: &'static str,
    pub set: &'static str,
    pub p: f64,
    pub printed: String,
    pub computed: String,
    pub matches: bool,
    pub known: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TablesReport {
    pub lambda: f64,
    pub illustrative_cells: Vec<CellCheck>,
    pub illustrative_orders: Vec<OrderCheck>,
    pub example_orders: Vec<OrderCheck>,
    pub comparison_p2_cells: Vec<CellCheck>,
    pub comparison_p2_orders: Vec<OrderCheck>,
    pub comparison_p3_cells: Vec<CellCheck>,
    pub other_methods: &'static str,
}

impl TablesReport {
    /// Cells and orders that miss their tolerance, known or not.
    pub fn discrepancies(&self) -> (Vec<&CellCheck>, Vec<&OrderCheck>) {
        let cells = self
            .illustrative_cells
            .iter()
            .chain(&self.comparison_p2_cells)
            .chain(&self.comparison_p3_cells)
            .filter(|c| !c.within)
            .collect();
        let orders = self
            .illustrative_orders
            .iter()
            .chain(&self.example_orders)
            .chain(&self.comparison_p2_orders)
            .filter(|o| !o.matches)
            .collect();
        (cells, orders)
    }
}

fn ascending(ids: &[&str]) -> String {
    ids.join(" ≺ ")
}

fn descending(ids: &[&str]) -> String {
    ids.join(" ≻ ")
}

fn computed_ranking(items: &[(&'static str, crate::Trifn)], p: PNorm) -> crate::RankOutcome<&'static str> {
    rank(items, RankConfig::with_p(p)).expect("fixture sets are non-empty")
}

fn example_order(table: &'static str, set: &ExampleSet, p: PNorm) -> OrderCheck {
    let computed = computed_ranking(&set.items, p).render_descending();
    let printed = descending(&set.printed_descending);
    OrderCheck {
        table,
        set: set.name,
        p: p.get(),
        matches: printed == computed,
        printed,
        computed,
        known: None,
    }
}

/// Regenerates every reproducible published number at `lambda = 1/2`.
pub fn tables() -> TablesReport {
    let lambda = Lambda::HALF;
    let mut illustrative_cells = Vec::new();
    let mut illustrative_orders = Vec::new();
    for set in fixtures::illustrative_table() {
        for row in &set.rows {
            let idx = va_index(&row.trifn, lambda);
            let cells = [
                ("V", row.printed.value, idx.value),
                ("A", row.printed.ambiguity, idx.ambiguity),
                ("rho(p=2)", row.printed.rho_p2, rho(&row.trifn, PNorm::TWO, lambda)),
                ("rho(p=3)", row.printed.rho_p3, rho(&row.trifn, PNorm::THREE, lambda)),
            ];
            for (column, printed, computed) in cells {
                illustrative_cells.push(CellCheck::new(
                    "illustrative",
                    set.name,
                    row.id,
                    column,
                    printed,
                    computed,
                    TABLE_TOLERANCE,
                ));
            }
        }
        let items: Vec<_> = set.rows.iter().map(|r| (r.id, r.trifn)).collect();
        for p in [PNorm::TWO, PNorm::THREE] {
            let computed = computed_ranking(&items, p).render_ascending();
            let printed = ascending(&set.printed_ascending);
            illustrative_orders.push(OrderCheck {
                table: "illustrative",
                set: set.name,
                p: p.get(),
                matches: printed == computed,
                printed,
                computed,
                known: fixtures::known_deviation("illustrative", set.name, "order", "result").map(|d| d.note),
            });
        }
    }

    let example_orders = fixtures::worked_examples()
        .iter()
        .map(|set| example_order("examples", set, PNorm::TWO))
        .collect();

    let mut comparison_p2_cells = Vec::new();
    let mut comparison_p3_cells = Vec::new();
    let mut comparison_p2_orders = Vec::new();
    for column in fixtures::comparison_table() {
        for (i, (id, n)) in column.example.items.iter().enumerate() {
            comparison_p2_cells.push(CellCheck::new(
                "comparison",
                column.name,
                id,
                "rho(p=2)",
                column.printed_p2[i],
                rho(n, PNorm::TWO, lambda),
                COMPARISON_TOLERANCE,
            ));
            comparison_p3_cells.push(CellCheck::new(
                "comparison",
                column.name,
                id,
                "rho(p=3)",
                column.printed_p3[i],
                rho(n, PNorm::THREE, lambda),
                COMPARISON_TOLERANCE,
            ));
        }
        let computed = computed_ranking(&column.example.items, PNorm::TWO).render_ascending();
        let printed = ascending(&column.printed_ascending);
        comparison_p2_orders.push(OrderCheck {
            table: "comparison",
            set: column.name,
            p: 2.0,
            matches: printed == computed,
            printed,
            computed,
            known: None,
        });
    }

    TablesReport {
        lambda: lambda.get(),
        illustrative_cells,
        illustrative_orders,
        example_orders,
        comparison_p2_cells,
        comparison_p2_orders,
        comparison_p3_cells,
        other_methods: fixtures::OTHER_METHODS,
    }
}

/// Plain-text rendering: tab-separated tables followed by the discrepancy list.
pub fn render_text(report: &TablesReport, precision: usize) -> String {
    let mut out = String::new();
    let fmt = |x: f64, digits: usize| format!("{x:.digits$}");
    let cell_line = |c: &CellCheck, digits: usize| {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{:.2e}\t{}\n",
            c.set,
            c.id,
            c.column,
            fmt(c.computed, digits),
            fmt(c.printed, digits),
            c.abs_diff,
            if c.within { "ok" } else { "FLAG" }
        )
    };
    let order_line = |o: &OrderCheck| {
        format!(
            "{}\tp={}\t{}\t{}\t{}\n",
            o.set,
            o.p,
            o.computed,
            o.printed,
            if o.matches { "ok" } else { "FLAG" }
        )
    };

    out.push_str(&format!("# illustrative table (lambda = {})\n", report.lambda));
    out.push_str("set\tid\tcolumn\tcomputed\tprinted\t|diff|\tstatus\n");
    for c in &report.illustrative_cells {
        out.push_str(&cell_line(c, precision));
    }
    out.push_str("\n# illustrative table orders\nset\tp\tcomputed\tprinted\tstatus\n");
    for o in &report.illustrative_orders {
        out.push_str(&order_line(o));
    }
    out.push_str("\n# worked example orders (best first)\nset\tp\tcomputed\tprinted\tstatus\n");
    for o in &report.example_orders {
        out.push_str(&order_line(o));
    }
    out.push_str("\n# comparison table, proposed method p=2\n");
    out.push_str("set\tid\tcolumn\tcomputed\tprinted\t|diff|\tstatus\n");
    for c in &report.comparison_p2_cells {
        out.push_str(&cell_line(c, 2));
    }
    out.push_str("set\tp\tcomputed\tprinted\tstatus\n");
    for o in &report.comparison_p2_orders {
        out.push_str(&order_line(o));
    }
    out.push_str("\n# comparison table, proposed method p=3 (printed row not reproducible)\n");
    out.push_str("set\tid\tcolumn\tcomputed\tprinted\t|diff|\tstatus\n");
    for c in &report.comparison_p3_cells {
        out.push_str(&cell_line(c, 2));
    }
    out.push_str("\n# comparison table, other methods (as published, not recomputed)\n");
    out.push_str(report.other_methods);

    let (cells, orders) = report.discrepancies();
    out.push_str(&format!(
        "\n# discrepancies: {} cells, {} orders\n",
        cells.len(),
        orders.len()
    ));
    for c in cells {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\tcomputed {}\tprinted {}\t{}\n",
            c.table,
            c.set,
            c.id,
            c.column,
            fmt(c.computed, precision),
            c.printed,
            c.known.unwrap_or("unexplained")
        ));
    }
    for o in orders {
        out.push_str(&format!(
            "{}\t{}\tp={}\tcomputed {}\tprinted {}\t{}\n",
            o.table,
            o.set,
            o.p,
            o.computed,
            o.printed,
            o.known.unwrap_or("unexplained")
        ));
    }
    out
}
