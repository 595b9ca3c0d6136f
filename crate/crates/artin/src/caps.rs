//! Workload caps for the search-shaped operations.

/// Caps bounding the exponential-in-the-worst-case procedures.
///
/// Every cap is a precondition, not a heuristic: exceeding one yields a
/// distinct "cap exceeded" outcome, never a silent wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum word length λ admitted by the rewriting-closure (BFS)
    /// equality decider.
    pub bfs_lambda: usize,
    /// Maximum candidate-root length λ(c_G)/k admitted by the root search.
    pub search_len: usize,
    /// Maximum number of quantifier assignments (|G|^q) admitted by the
    /// finite-model evaluator.
    pub assign: u64,
    /// Maximum group order admitted by Coxeter-group enumeration.
    pub enumerate: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            bfs_lambda: 14,
            search_len: 10,
            assign: 10_000_000,
            enumerate: 100_000,
        }
    }
}

impl Caps {
    /// Parse an override string of the form `bfs=14,search=10,assign=10000000`.
    ///
    /// Keys may appear in any order and any subset; unknown keys are
    /// rejected. This is the format of the `ARTIN_EQ_CAPS` environment
    /// variable honored by the CLI.
    pub fn parse_overrides(s: &str) -> crate::Result<Self> {
        let mut caps = Caps::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| crate::Error::Parse(format!("cap override `{item}`: expected key=value")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| crate::Error::Parse(format!("cap override `{item}`: bad number")))?;
            match key.trim() {
                "bfs" => caps.bfs_lambda = value as usize,
                "search" => caps.search_len = value as usize,
                "assign" => caps.assign = value,
                "enumerate" => caps.enumerate = value as usize,
                other => {
                    return Err(crate::Error::Parse(format!("unknown cap key `{other}`")));
                }
            }
        }
        Ok(caps)
    }
}
