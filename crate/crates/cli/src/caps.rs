//! Size limits, from defaults, `DIMFORCE_CAPS` and flags in that order.

use anyhow::{bail, Context, Result};
use dimforce_core::checks::Caps;

pub const ENV: &str = "DIMFORCE_CAPS";

/// Largest order for all-connected-graph enumeration without `--big`.
pub const ENUMERATION: usize = 7;
pub const ENUMERATION_BIG: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub search: Caps,
    pub enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            search: Caps::default(),
            enumeration: ENUMERATION,
        }
    }
}

impl Limits {
    /// Parses `key=value` pairs separated by commas, e.g. `search=18,path_cover=10`.
    pub fn apply(&mut self, text: &str) -> Result<()> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .with_context(|| format!("expected key=value in `{item}`"))?;
            let value: usize = value.trim().parse().with_context(|| {
                format!(
                    "cap `{}` needs a non-negative integer, got `{value}`",
                    key.trim()
                )
            })?;
            match key.trim() {
                "search" => self.search.search = value,
                "path_cover" => self.search.path_cover = value,
                "one_step" => self.search.one_step = value,
                "perturbation" => self.search.perturbation = value,
                "enumeration" => self.enumeration = value,
                other => bail!(
                    "unknown cap `{other}`; use search, path_cover, one_step, perturbation or enumeration"
                ),
            }
        }
        Ok(())
    }

    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        if let Ok(text) = std::env::var(ENV) {
            limits
                .apply(&text)
                .with_context(|| format!("in {ENV}=`{text}`"))?;
        }
        Ok(limits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_overrides() {
        let mut l = Limits::default();
        l.apply("search=18, enumeration=8").unwrap();
        assert_eq!(
            (l.search.search, l.search.path_cover, l.enumeration),
            (18, 12, 8)
        );
    }

    #[test]
    fn rejects_unknown_keys_and_values() {
        let mut l = Limits::default();
        assert!(l
            .apply("speed=3")
            .unwrap_err()
            .to_string()
            .contains("unknown cap"));
        assert!(l.apply("search=x").is_err());
        assert!(l.apply("search").is_err());
    }
}
