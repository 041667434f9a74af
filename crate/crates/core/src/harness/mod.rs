//! Sweeps over ranges of triples and the Xu-bound audit behind the CLI.

mod conjecture;
mod range;
mod sweep;

pub use conjecture::{conjecture_report, in_expected_tight_family, ConjectureReport, ConjectureRow};
pub use range::{Bound, TripleRange};
pub use sweep::{
    status_counts, summary_line, sweep, sweep_row, to_csv, Cell, GammaCell, Status, SweepConfig,
    SweepRow, CSV_HEADER, CSV_VERSION_LINE,
};
