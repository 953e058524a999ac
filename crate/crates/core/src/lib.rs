//! Ranking of trapezoidal intuitionistic fuzzy numbers by their signed L_p
//! distance to the origin.
//!
//! The pipeline is
//!
//! 1. [`indices::va_index`]: collapse a [`Trifn`] to a value index `V` and an
//!    ambiguity index `A` at a preference weight `lambda`;
//! 2. [`metric::trifn_distance`]: measure two numbers apart as the L_p norm
//!    of the difference of the lines through their `(A, V)` intervals;
//! 3. [`ranking::rank`]: score each number with `rho = sign(V) * D(n, 0)`
//!    and sort.
//!
//! [`oracle`] re-derives every closed form by numerical quadrature, and
//! [`sample`] generates random valid inputs for sweeps.
//!
//! ```
//! use ifn_rank::{rank, Lambda, PNorm, RankConfig, Trifn};
//!
//! let items = vec![
//!     ("a", Trifn::triangular(0.5, 0.7, 0.9, 0.7, 0.2).unwrap()),
//!     ("b", Trifn::triangular(0.2, 0.3, 0.4, 0.6, 0.4).unwrap()),
//! ];
//! let outcome = rank(&items, RankConfig { p: PNorm::TWO, lambda: Lambda::HALF, ..Default::default() }).unwrap();
//! assert_eq!(outcome.render_descending(), "a ≻ b");
//! ```

pub mod cli;
pub mod dataset;
pub mod fixtures;
pub mod indices;
pub mod metric;
pub mod oracle;
pub mod ranking;
pub mod report;
pub mod sample;
pub mod sweep;
pub mod trifn;

pub use indices::{components, va_index, Lambda, VaComponents, VaIndex};
pub use metric::{interval_distance, line_lp_norm, trifn_distance, EndpointPair, PNorm};
pub use ranking::{delta, rank, rho, RankConfig, RankOutcome, Sign};
pub use trifn::{CutInterval, Trifn, TrifnError};
