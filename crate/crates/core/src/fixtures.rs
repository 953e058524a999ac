//! Published reference data: the three sets of the illustrative table, the
//! three worked examples, and the cross-method comparison table.
//!
//! Printed cells are kept exactly as published, including the ones that do
//! not agree with the formulas; [`KNOWN_DEVIATIONS`] lists those.

use crate::trifn::Trifn;

fn trap(a1: f64, a2: f64, a3: f64, a4: f64, w: f64, u: f64) -> Trifn {
    Trifn::new(a1, a2, a3, a4, w, u).expect("fixture is a valid TRIFN")
}

fn tri(t1: f64, t2: f64, t3: f64, w: f64, u: f64) -> Trifn {
    Trifn::triangular(t1, t2, t3, w, u).expect("fixture is a valid TRIFN")
}

/// Printed `V`, `A`, `rho(p=2)` and `rho(p=3)` cells of one table row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedCells {
    pub value: f64,
    pub ambiguity: f64,
    pub rho_p2: f64,
    pub rho_p3: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub id: &'static str,
    pub trifn: Trifn,
    pub printed: PrintedCells,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableSet {
    pub name: &'static str,
    pub rows: Vec<TableRow>,
    /// Printed result column, worst first (`b ≺ c ≺ a` is `["b", "c", "a"]`).
    pub printed_ascending: Vec<&'static str>,
}

fn row(id: &'static str, trifn: Trifn, cells: [f64; 4]) -> TableRow {
    TableRow {
        id,
        trifn,
        printed: PrintedCells {
            value: cells[0],
            ambiguity: cells[1],
            rho_p2: cells[2],
            rho_p3: cells[3],
        },
    }
}

/// The illustrative table: nine numbers in three sets, `lambda = 1/2`.
pub fn illustrative_table() -> Vec<TableSet> {
    vec![
        TableSet {
            name: "Set I",
            rows: vec![
                row("a", tri(0.5, 0.7, 0.9, 0.7, 0.2), [0.5250, 0.0990, 0.3353, 0.3544]),
                row("b", tri(0.2, 0.3, 0.4, 0.6, 0.4), [0.1800, 0.0400, 0.1171, 0.1232]),
                row("c", tri(0.4, 0.7, 0.9, 0.6, 0.3), [0.4441, 0.1083, 0.2927, 0.3067]),
            ],
            printed_ascending: vec!["b", "c", "a"],
        },
        TableSet {
            name: "Set II",
            rows: vec![
                row("a", trap(0.10, 0.19, 0.25, 0.30, 0.7, 0.2), [0.1599, 0.0799, 0.1221, 0.1241]),
                row("b", trap(0.12, 0.2, 0.23, 0.28, 0.8, 0.1), [0.1785, 0.0623, 0.1249, 0.1291]),
                row("c", trap(0.21, 0.27, 0.32, 0.35, 0.6, 0.3), [0.1885, 0.0520, 0.1265, 0.1319]),
            ],
            printed_ascending: vec!["a", "b", "c"],
        },
        TableSet {
            name: "Set III",
            rows: vec![
                row("a", tri(0.2, 0.5, 0.7, 0.7, 0.2), [0.3624, 0.1249, 0.2531, 0.2615]),
                row("b", tri(0.2, 0.3, 0.9, 0.6, 0.4), [0.2300, 0.1400, 0.1868, 0.1885]),
                row("c", trap(0.2, 0.4, 0.5, 0.9, 0.5, 0.3), [0.1933, 0.1800, 0.1866, 0.1883]),
            ],
            printed_ascending: vec!["c", "b", "a"],
        },
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleSet {
    pub name: &'static str,
    pub items: Vec<(&'static str, Trifn)>,
    /// Published order, best first.
    pub printed_descending: Vec<&'static str>,
}

/// Three numbers whose intuitive order disagrees with score/accuracy ranking.
pub fn intuition_example() -> ExampleSet {
    ExampleSet {
        name: "intuition",
        items: vec![
            ("a", trap(0.3, 0.4, 0.5, 0.6, 0.2, 0.4)),
            ("b", trap(0.1, 0.2, 0.3, 0.4, 0.3, 0.5)),
            ("c", trap(0.5, 0.6, 0.7, 0.8, 0.2, 0.6)),
        ],
        printed_descending: vec!["c", "a", "b"],
    }
}

/// Three positive numbers, ranked as published.
pub fn reversal_example() -> ExampleSet {
    ExampleSet {
        name: "reversal",
        items: vec![
            ("a", trap(0.7, 0.8, 0.9, 1.0, 0.2, 0.5)),
            ("b", trap(0.3, 0.4, 0.5, 0.6, 0.7, 0.1)),
            ("c", trap(0.5, 0.6, 0.7, 0.8, 0.8, 0.2)),
        ],
        printed_descending: vec!["c", "b", "a"],
    }
}

/// Negatives of [`reversal_example`]; the published order reverses.
///
/// The published negative of `a` lists `u = .05`; negation leaves the
/// degrees unchanged, so `u = 0.5` is used.
pub fn negated_reversal_example() -> ExampleSet {
    let base = reversal_example();
    ExampleSet {
        name: "reversal, negated",
        items: base
            .items
            .iter()
            .map(|(id, n)| {
                let id = match *id {
                    "a" => "-a",
                    "b" => "-b",
                    _ => "-c",
                };
                (id, -*n)
            })
            .collect(),
        printed_descending: vec!["-a", "-b", "-c"],
    }
}

/// Three numbers sharing the same degrees.
pub fn shared_degrees_example() -> ExampleSet {
    ExampleSet {
        name: "shared degrees",
        items: vec![
            ("a", trap(0.3, 0.4, 0.5, 0.6, 0.5, 0.3)),
            ("b", trap(0.7, 0.8, 0.9, 1.0, 0.5, 0.3)),
            ("c", trap(0.2, 0.4, 0.6, 0.8, 0.5, 0.3)),
        ],
        printed_descending: vec!["b", "c", "a"],
    }
}

pub fn worked_examples() -> Vec<ExampleSet> {
    vec![
        intuition_example(),
        reversal_example(),
        negated_reversal_example(),
        shared_degrees_example(),
    ]
}

/// One column (set) of the comparison table's proposed-method rows.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonColumn {
    pub name: &'static str,
    pub example: ExampleSet,
    /// Printed two-decimal `rho` for `a`, `b`, `c` at `p = 2`.
    pub printed_p2: [f64; 3],
    /// Printed two-decimal values of the `p = 3` row.
    pub printed_p3: [f64; 3],
    /// Printed result, worst first; identical for both exponents.
    pub printed_ascending: Vec<&'static str>,
}

/// Sets I, II and III of the comparison table are the three worked examples.
pub fn comparison_table() -> Vec<ComparisonColumn> {
    vec![
        ComparisonColumn {
            name: "Set I",
            example: intuition_example(),
            printed_p2: [0.12, 0.08, 0.17],
            printed_p3: [0.04, 0.02, 0.07],
            printed_ascending: vec!["b", "a", "c"],
        },
        ComparisonColumn {
            name: "Set II",
            example: reversal_example(),
            printed_p2: [0.18, 0.25, 0.34],
            printed_p3: [0.08, 0.13, 0.21],
            printed_ascending: vec!["a", "b", "c"],
        },
        ComparisonColumn {
            name: "Set III",
            example: shared_degrees_example(),
            printed_p2: [0.17, 0.30, 0.28],
            printed_p3: [0.07, 0.19, 0.12],
            printed_ascending: vec!["a", "c", "b"],
        },
    ]
}

/// Rows of the comparison table for the other methods, verbatim. Their
/// formulas are not implemented; they are shown for side-by-side reading.
pub const OTHER_METHODS: &str = "\
method\tIFN\tSet I\tSet II\tSet III
Xu and Yager\ta\t0.6\t-0.3\t0.2
Xu and Yager\tb\t0.8\t0.8\t0.2
Xu and Yager\tc\t0.8\t0.6\t0.2
Xu and Yager\tresult\tc≺a≺b\ta≺c≺b\ta∼b∼c
Ye\ta\t-0.2\t-0.1\t0.3
Ye\tb\t0.1\t0.5\t0.3
Ye\tc\t0\t0.8\t0.3
Ye\tresult\ta≺c≺b\ta≺b≺c\ta∼b∼c
Wei\ta\t0.82\t0.70\t0.73
Wei\tb\t0.90\t0.64\t0.41
Wei\tc\t0.80\t0.48\t0.70
Wei\tresult\tb≺a≺c\ta≺b≺c\ta≺c≺b
D.F. Li\ta\t0.18\t0.29\t0.27
D.F. Li\tb\t0.10\t0.36\t0.51
D.F. Li\tc\t0.26\t0.52\t0.30
D.F. Li\tresult\tb≺a≺c\ta≺b≺c\ta≺c≺b
Li, lambda=1/2\ta\t0.16\t0.28\t0.26
Li, lambda=1/2\tb\t0.09\t0.31\t0.48
Li, lambda=1/2\tc\t0.24\t0.45\t0.25
Li, lambda=1/2\tresult\tb≺a≺c\ta≺b≺c\tc≺a≺b
";

/// Where a published cell is not reproduced, and why.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownDeviation {
    pub table: &'static str,
    pub set: &'static str,
    pub id: &'static str,
    pub column: &'static str,
    pub note: &'static str,
}

const SET3_C_NOTE: &str =
    "printed V disagrees with the closed form on <(0.2,0.4,0.5,0.9);0.5,0.3> (0.2900); its A cell matches";

pub const KNOWN_DEVIATIONS: &[KnownDeviation] = &[
    KnownDeviation {
        table: "illustrative",
        set: "Set III",
        id: "c",
        column: "V",
        note: SET3_C_NOTE,
    },
    KnownDeviation {
        table: "illustrative",
        set: "Set III",
        id: "c",
        column: "rho(p=2)",
        note: "follows from the Set III c V cell",
    },
    KnownDeviation {
        table: "illustrative",
        set: "Set III",
        id: "c",
        column: "rho(p=3)",
        note: "follows from the Set III c V cell",
    },
    KnownDeviation {
        table: "illustrative",
        set: "Set III",
        id: "order",
        column: "result",
        note: "printed order follows from the Set III c V cell; computed order is b ≺ c ≺ a",
    },
    KnownDeviation {
        table: "comparison",
        set: "Set I",
        id: "c",
        column: "rho(p=2)",
        note: "printed cell matches c with u=0.4, but the intuition set lists u=0.6",
    },
    KnownDeviation {
        table: "comparison",
        set: "*",
        id: "*",
        column: "rho(p=3)",
        note: "printed p=3 row is not reproducible from the L_3 distance",
    },
];

pub fn known_deviation(table: &str, set: &str, id: &str, column: &str) -> Option<&'static KnownDeviation> {
    KNOWN_DEVIATIONS.iter().find(|d| {
        d.table == table
            && (d.set == "*" || d.set == set)
            && (d.id == "*" || d.id == id)
            && d.column == column
    })
}
