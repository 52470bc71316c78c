use std::time::Duration;

/// Default branch-node budget for every exact solver.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// The search finished; `value` is the optimum.
    Optimal,
    /// The node budget ran out; `value` is only the best certificate found.
    UpperBoundOnly,
}

/// Outcome of an exact solve: the invariant value, a witnessing set and
/// search statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    /// Vertex ids, ascending.
    pub certificate: Vec<usize>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub status: Status,
    /// Proven bound on the other side of the optimum: a lower bound for
    /// minimization problems, an upper bound for maximization problems.
    /// Equals `value` when `status` is `Optimal`.
    pub bound: usize,
}

impl SolveResult {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}
