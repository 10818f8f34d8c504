//! Wall-clock search budget.

use std::time::{Duration, Instant};

use twodist::clique::BudgetCheck;

/// Stops a search once a wall-clock deadline passes. The solver polls the
/// budget about once every thousand nodes, so overshoot is tiny.
pub struct WallClockBudget {
    deadline: Instant,
}

impl WallClockBudget {
    pub fn new(limit: Duration) -> Self {
        Self {
            deadline: Instant::now() + limit,
        }
    }

    /// Budget from a `--time-budget` value in seconds.
    pub fn from_seconds(seconds: f64) -> Self {
        Self::new(Duration::from_secs_f64(seconds.max(0.0)))
    }
}

impl BudgetCheck for WallClockBudget {
    fn exhausted(&mut self, _nodes_explored: u64) -> bool {
        Instant::now() >= self.deadline
    }
}
