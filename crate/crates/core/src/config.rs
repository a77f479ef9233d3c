//! Enumeration budgets for the certifiers.

use crate::error::CheckError;

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Resource limits for one check. Exceeding a limit is an explicit error,
/// never a silent truncation.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Maximum number of terminal payoff evaluations per check.
    pub budget: u64,
    /// Maximum number of pure strategies a single enumeration may produce.
    pub enumeration_cap: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            budget: DEFAULT_BUDGET,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl CheckConfig {
    pub fn with_budget(budget: u64) -> Self {
        CheckConfig { budget, ..CheckConfig::default() }
    }
}

/// Counts terminal payoff evaluations against a limit.
#[derive(Debug)]
pub struct BudgetMeter {
    limit: u64,
    used: u64,
}

impl BudgetMeter {
    pub fn new(config: &CheckConfig) -> Self {
        BudgetMeter { limit: config.budget, used: 0 }
    }

    /// Record `n` payoff evaluations.
    #[inline]
    pub fn spend(&mut self, n: u64) -> Result<(), CheckError> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(CheckError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
