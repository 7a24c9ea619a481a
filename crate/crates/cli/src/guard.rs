//! Size limits for anything that enumerates exhaustively.

use crate::error::CliError;

pub const ENV_OVERRIDE: &str = "CATKIT_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resource {
    /// Dyck paths and tableaux, measured by semilength.
    Paths,
    /// Permutations, measured by length.
    Permutations,
    /// Decks, measured by the number of red cards.
    Decks,
}

impl Resource {
    fn default_limit(self) -> usize {
        match self {
            Resource::Paths => 10,
            Resource::Permutations | Resource::Decks => 9,
        }
    }

    fn noun(self) -> &'static str {
        match self {
            Resource::Paths => "semilength",
            Resource::Permutations => "permutation length",
            Resource::Decks => "deck half-size",
        }
    }
}

/// Limits in force for one invocation. A `--max-n` flag beats the
/// environment, which beats the defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Guards {
    pub override_limit: Option<usize>,
}

impl Guards {
    pub fn from_env(env_value: Option<String>) -> Result<Self, CliError> {
        let override_limit = match env_value {
            None => None,
            Some(v) => Some(
                v.trim()
                    .parse()
                    .map_err(|_| CliError::usage(format!("{ENV_OVERRIDE}={v:?} is not a nonnegative integer")))?,
            ),
        };
        Ok(Self { override_limit })
    }

    pub fn with_flag(self, flag: Option<usize>) -> Self {
        Self {
            override_limit: flag.or(self.override_limit),
        }
    }

    pub fn limit(&self, r: Resource) -> usize {
        self.override_limit.unwrap_or_else(|| r.default_limit())
    }

    pub fn check(&self, r: Resource, n: usize) -> Result<(), CliError> {
        let limit = self.limit(r);
        if n > limit {
            return Err(CliError::precondition(format!(
                "{} {n} <= {limit} (resource guard; raise with --max-n or {ENV_OVERRIDE})",
                r.noun()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let g = Guards::from_env(None).unwrap();
        assert_eq!(g.limit(Resource::Paths), 10);
        assert_eq!(g.limit(Resource::Permutations), 9);
        let g = Guards::from_env(Some("12".into())).unwrap();
        assert_eq!(g.limit(Resource::Decks), 12);
        assert_eq!(g.with_flag(Some(5)).limit(Resource::Decks), 5);
        assert!(Guards::from_env(Some("x".into())).is_err());
    }

    #[test]
    fn check_names_the_limit() {
        let err = Guards::default().check(Resource::Permutations, 10).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("permutation length 10 <= 9"));
    }
}
