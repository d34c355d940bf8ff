use crate::error::{Error, Resource, Result};

/// Limits for the exact searches.  One `Budget` governs one top-level
/// operation; nested searches inside that operation draw from the same meter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum search-node expansions across all searches of the operation.
    pub max_nodes: u64,
    /// Maximum covers examined across all enumerations of the operation.
    pub max_covers: u64,
    /// Largest vertex count accepted by the expensive exact solvers.
    pub size_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 50_000_000,
            max_covers: 2_000_000,
            size_cap: 24,
        }
    }
}

impl Budget {
    pub fn with_max_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_max_covers(mut self, max_covers: u64) -> Self {
        self.max_covers = max_covers;
        self
    }
}

/// Running consumption against a [`Budget`].
pub(crate) struct Meter {
    nodes_left: u64,
    covers_left: u64,
    max_nodes: u64,
    max_covers: u64,
    size_cap: usize,
}

impl Meter {
    pub(crate) fn new(budget: &Budget) -> Self {
        Meter {
            nodes_left: budget.max_nodes,
            covers_left: budget.max_covers,
            max_nodes: budget.max_nodes,
            max_covers: budget.max_covers,
            size_cap: budget.size_cap,
        }
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<()> {
        if n > self.size_cap {
            return Err(Error::Budget {
                resource: Resource::SizeCap,
                limit: self.size_cap as u64,
            });
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn charge_nodes(&mut self, k: u64) -> Result<()> {
        if self.nodes_left < k {
            return Err(Error::Budget {
                resource: Resource::Nodes,
                limit: self.max_nodes,
            });
        }
        self.nodes_left -= k;
        Ok(())
    }

    #[inline]
    pub(crate) fn charge_cover(&mut self) -> Result<()> {
        if self.covers_left == 0 {
            return Err(Error::Budget {
                resource: Resource::Covers,
                limit: self.max_covers,
            });
        }
        self.covers_left -= 1;
        Ok(())
    }

    pub(crate) fn covers_limit(&self) -> u64 {
        self.max_covers
    }
}
