//! Node budgets and outcomes for the backtracking searches.

use std::cell::Cell;

use crate::error::{Error, Result};

/// Limit on the number of decision-tree nodes a search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_nodes: u64,
    exhaustive: bool,
}

impl SearchBudget {
    pub fn limited(max_nodes: u64) -> Result<Self> {
        if max_nodes == 0 {
            return Err(Error::ConfigError("node budget must be at least 1".into()));
        }
        Ok(Self {
            max_nodes,
            exhaustive: false,
        })
    }

    /// No limit; a `NoneExists` result is then a completeness certificate.
    pub fn exhaustive() -> Self {
        Self {
            max_nodes: u64::MAX,
            exhaustive: true,
        }
    }

    pub fn max_nodes(&self) -> Option<u64> {
        (!self.exhaustive).then_some(self.max_nodes)
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus<W> {
    Found(W),
    /// The whole search space was explored without a witness.
    NoneExists,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<W> {
    pub status: SearchStatus<W>,
    pub nodes_explored: u64,
}

impl<W> SearchOutcome<W> {
    pub fn witness(&self) -> Option<&W> {
        match &self.status {
            SearchStatus::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self.status {
            SearchStatus::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.status, SearchStatus::Found(_))
    }

    pub fn is_none_exists(&self) -> bool {
        matches!(self.status, SearchStatus::NoneExists)
    }

    pub fn is_budget_exhausted(&self) -> bool {
        matches!(self.status, SearchStatus::BudgetExhausted)
    }
}

/// Control signal threaded through the recursive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Continue,
    Found,
    OutOfBudget,
}

/// Node counter shared by the nested search levels of one invocation.
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: Cell<u64>,
    limit: Option<u64>,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Self {
            nodes: Cell::new(0),
            limit: budget.max_nodes(),
        }
    }

    /// Counts one node; `false` once the budget is spent.
    pub(crate) fn tick(&self) -> bool {
        let n = self.nodes.get();
        if self.limit.is_some_and(|limit| n >= limit) {
            return false;
        }
        self.nodes.set(n + 1);
        true
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.get()
    }

    pub(crate) fn finish<W>(&self, step: Step, witness: impl FnOnce() -> W) -> SearchOutcome<W> {
        let status = match step {
            Step::Found => SearchStatus::Found(witness()),
            Step::Continue => SearchStatus::NoneExists,
            Step::OutOfBudget => SearchStatus::BudgetExhausted,
        };
        SearchOutcome {
            status,
            nodes_explored: self.nodes(),
        }
    }
}
