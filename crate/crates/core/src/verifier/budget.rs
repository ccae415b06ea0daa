use crate::error::{Error, Result};
use crate::symmetry::SearchBudget;

pub const BUDGET_ENV: &str = "TREEDIST_BUDGET";

/// Limits on how much work the oracles may do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest tree the oracles accept.
    pub max_vertices: usize,
    /// Color-preserving automorphisms enumerated explicitly before giving up.
    pub max_automorphisms: u64,
    /// Step limit for the distinguishing-number search.
    pub max_search_steps: u64,
    /// Tree size limit for the distinguishing-number search.
    pub max_search_vertices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        let search = SearchBudget::default();
        Budget {
            max_vertices: 64,
            max_automorphisms: 1_000_000,
            max_search_steps: search.max_steps,
            max_search_vertices: search.max_vertices,
        }
    }
}

impl Budget {
    /// Parses `key=value` pairs separated by commas on top of the defaults.
    /// Keys: `vertices`, `automorphisms`, `search`, `search_vertices`. A bare
    /// number sets `automorphisms`.
    pub fn parse(spec: &str) -> Result<Budget> {
        let mut budget = Budget::default();
        let bad = |msg: String| Error::BadParams(format!("{BUDGET_ENV}: {msg}"));
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').unwrap_or(("automorphisms", item));
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| bad(format!("'{value}' is not a number")))?;
            match key.trim() {
                "vertices" => budget.max_vertices = value as usize,
                "automorphisms" => budget.max_automorphisms = value,
                "search" => budget.max_search_steps = value,
                "search_vertices" => budget.max_search_vertices = value as usize,
                other => return Err(bad(format!("unknown key '{other}'"))),
            }
        }
        Ok(budget)
    }

    /// Defaults, overridden by the environment variable if set.
    pub fn from_env() -> Result<Budget> {
        match std::env::var(BUDGET_ENV) {
            Ok(spec) => Budget::parse(&spec),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn search(&self) -> SearchBudget {
        SearchBudget {
            max_vertices: self.max_search_vertices,
            max_steps: self.max_search_steps,
        }
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::OracleBudgetExceeded(format!(
                "{n} vertices, limit {}",
                self.max_vertices
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let b = Budget::parse("vertices=10, search=5").unwrap();
        assert_eq!(b.max_vertices, 10);
        assert_eq!(b.max_search_steps, 5);
        assert_eq!(b.max_automorphisms, 1_000_000);
        assert_eq!(Budget::parse("42").unwrap().max_automorphisms, 42);
        assert_eq!(Budget::parse("").unwrap(), Budget::default());
        assert!(Budget::parse("colors=3").is_err());
        assert!(Budget::parse("vertices=x").is_err());
    }
}
