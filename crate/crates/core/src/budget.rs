//! Node and wall-clock caps for the exhaustive searches.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Environment variable that overrides every wall-clock cap, in seconds.
pub const CAP_SECONDS_ENV: &str = "POSETLAB_CAP_SECONDS";

/// Limits for one search. Both caps are checked together by [`Meter::tick`].
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;
    pub const DEFAULT_SECONDS: u64 = 300;

    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        Budget {
            max_nodes,
            max_time,
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
            max_time: Duration::from_secs(u64::MAX / 4),
        }
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = nodes;
        self
    }

    pub fn with_time(mut self, time: Duration) -> Self {
        self.max_time = time;
        self
    }

    pub fn start(&self) -> Meter {
        Meter {
            budget: *self,
            started: Instant::now(),
            nodes: 0,
        }
    }
}

impl Default for Budget {
    /// 10^7 nodes and 300 s, unless `POSETLAB_CAP_SECONDS` is set.
    fn default() -> Self {
        let secs = std::env::var(CAP_SECONDS_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .unwrap_or(Self::DEFAULT_SECONDS);
        Budget::new(Self::DEFAULT_NODES, Duration::from_secs(secs))
    }
}

/// Running counter for a single search.
#[derive(Debug)]
pub struct Meter {
    budget: Budget,
    started: Instant,
    nodes: u64,
}

impl Meter {
    /// Counts one search node; fails once either cap is hit.
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExceeded(format!(
                "node cap {}",
                self.budget.max_nodes
            )));
        }
        // clock reads are comparatively expensive
        if self.nodes & 0x3ff == 0 && self.started.elapsed() > self.budget.max_time {
            return Err(Error::BudgetExceeded(format!(
                "wall cap {:.1}s",
                self.budget.max_time.as_secs_f64()
            )));
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }
}
