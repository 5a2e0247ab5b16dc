use std::path::Path;

use serde::Deserialize;
use spotflat_core::graph::SearchLimits;
use spotflat_core::{Error, Result};

/// Settings read from a TOML file. Every field is optional; command-line
/// flags override whatever is set here.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub cap: Option<u32>,
    pub height_cap: Option<u64>,
    pub max_visited: Option<usize>,
    #[serde(default)]
    pub certify: CertifySection,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertifySection {
    pub n: Option<usize>,
    pub seed: Option<String>,
    pub model: Option<String>,
    pub height_cap: Option<u64>,
    pub out: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Config(e.to_string()))
    }
}

pub const DEFAULT_CAP: u32 = 16;
pub const DEFAULT_BALL_HEIGHT_CAP: u64 = 8;

/// Effective settings after merging file and flags.
#[derive(Clone, Debug)]
pub struct Settings {
    pub cap: u32,
    /// Explicit height cap; `None` lets pair queries pick one from their
    /// endpoints.
    pub height_cap: Option<u64>,
    pub limits: SearchLimits,
}

impl Settings {
    pub fn merge(file: &FileConfig, cap: Option<u32>, height_cap: Option<u64>, max_visited: Option<usize>) -> Settings {
        Settings {
            cap: cap.or(file.cap).unwrap_or(DEFAULT_CAP),
            height_cap: height_cap.or(file.height_cap),
            limits: SearchLimits {
                max_visited: max_visited.or(file.max_visited).unwrap_or(SearchLimits::DEFAULT_MAX_VISITED),
            },
        }
    }

    /// Height cap for a query between vertices of the given heights. Farey
    /// geodesics stay below the higher endpoint, so twice that is ample.
    pub fn pair_height_cap(&self, heights: &[u64]) -> u64 {
        self.height_cap
            .unwrap_or_else(|| 2 * heights.iter().copied().max().unwrap_or(1).max(1))
    }

    pub fn ball_height_cap(&self) -> u64 {
        self.height_cap.unwrap_or(DEFAULT_BALL_HEIGHT_CAP)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: FileConfig = toml::from_str("cap = 9\nheight_cap = 5\n[certify]\nn = 3\n").unwrap();
        let s = Settings::merge(&file, Some(4), None, None);
        assert_eq!(s.cap, 4);
        assert_eq!(s.height_cap, Some(5));
        assert_eq!(s.limits, SearchLimits::default());
        assert_eq!(file.certify.n, Some(3));
    }

    #[test]
    fn automatic_height_cap() {
        let s = Settings::merge(&FileConfig::default(), None, None, None);
        assert_eq!(s.cap, DEFAULT_CAP);
        assert_eq!(s.pair_height_cap(&[1, 55]), 110);
        assert_eq!(s.ball_height_cap(), DEFAULT_BALL_HEIGHT_CAP);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(toml::from_str::<FileConfig>("radius = 3").is_err());
    }
}
