//! The Fundamental Iterative Algorithm (Feng–Tzeng) and its structured
//! variants.
//!
//! All variants scan a matrix column by column, keeping a connection
//! polynomial `T` that annihilates every row visited so far. A nonzero
//! discrepancy at a row with a stored discrepancy is eliminated with the
//! stored polynomial; otherwise it is a *true* discrepancy, the state is
//! stored for that row and the next column is examined.
//!
//! * [`fia_generic`]: arbitrary dense matrix, every column restarts at row 0.
//! * [`fia_hankel`]: single Hankel matrix, a new column restarts one row
//!   above the last true discrepancy with `T ← x·T`.
//! * [`fia_sudan`]: horizontal band of Hankel matrices, columns in
//!   [`OrderH`] order, one stored row pointer per sub-matrix.
//! * [`fia_gs`]: Block-Hankel matrix, rows additionally interleaved in
//!   [`OrderV`] order.

mod band;
mod generic;
mod order;

pub use band::{fia_gs, fia_gs_with, fia_sudan, fia_sudan_with, BandOutcome, FiaOptions};
pub use generic::{fia_generic, fia_hankel, HankelOutcome};
pub use order::{OrderH, OrderV};

/// One iteration of an FIA run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    /// Column index in the scan order.
    pub column: usize,
    pub nu: usize,
    pub mu: usize,
    /// Row index in the scan order.
    pub row: usize,
    pub theta: usize,
    pub kappa: usize,
    pub true_discrepancy: bool,
}

/// Append-only record of pointer movements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiaTrace {
    steps: Vec<TraceStep>,
}

impl FiaTrace {
    pub(crate) fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    /// Number of iterations.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn true_discrepancies(&self) -> usize {
        self.steps.iter().filter(|s| s.true_discrepancy).count()
    }

    pub const CSV_HEADER: &'static str = "step,C_col,nu,mu,R_row,theta,kappa,true_discrepancy";

    /// CSV with header `step,C_col,nu,mu,R_row,theta,kappa,true_discrepancy`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for (i, s) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                i,
                s.column,
                s.nu,
                s.mu,
                s.row,
                s.theta,
                s.kappa,
                u8::from(s.true_discrepancy)
            ));
        }
        out
    }
}
