//! Flag parsing for the command registry: `--key value` pairs after the
//! subcommand name, with typed accessors and usage errors.

use std::collections::BTreeMap;

use glmn_core::scalars::{parse_scalar, Scalar};

#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Json,
    Table,
}

/// Parsed invocation: subcommand name plus `--key value` flags.
pub struct CommandConfig {
    pub command: String,
    flags: BTreeMap<String, String>,
}

impl CommandConfig {
    pub fn parse(args: &[String]) -> Result<CommandConfig, UsageError> {
        let mut it = args.iter();
        let command = it
            .next()
            .ok_or_else(|| UsageError("missing subcommand".into()))?
            .clone();
        let mut flags = BTreeMap::new();
        while let Some(key) = it.next() {
            let name = key
                .strip_prefix("--")
                .ok_or_else(|| UsageError(format!("expected a --flag, got `{key}`")))?;
            let value = it
                .next()
                .ok_or_else(|| UsageError(format!("flag --{name} needs a value")))?;
            flags.insert(name.to_string(), value.clone());
        }
        Ok(CommandConfig { command, flags })
    }

    pub fn format(&self) -> Result<OutputFormat, UsageError> {
        match self.flags.get("format").map(|s| s.as_str()) {
            None | Some("json") => Ok(OutputFormat::Json),
            Some("table") => Ok(OutputFormat::Table),
            Some(other) => Err(UsageError(format!("unknown format `{other}`"))),
        }
    }

    pub fn str_opt(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(|s| s.as_str())
    }

    pub fn str_or(&self, name: &str, default: &'static str) -> String {
        self.flags
            .get(name)
            .cloned()
            .unwrap_or_else(|| default.to_string())
    }

    pub fn usize_req(&self, name: &str) -> Result<usize, UsageError> {
        self.flags
            .get(name)
            .ok_or_else(|| UsageError(format!("missing required flag --{name}")))?
            .parse()
            .map_err(|_| UsageError(format!("flag --{name} must be a nonnegative integer")))
    }

    pub fn usize_or(&self, name: &str, default: usize) -> Result<usize, UsageError> {
        match self.flags.get(name) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| UsageError(format!("flag --{name} must be a nonnegative integer"))),
        }
    }

    pub fn dims(&self) -> Result<(usize, usize), UsageError> {
        let m = self.usize_req("m")?;
        let n = self.usize_req("n")?;
        if m < 1 || n < 1 {
            return Err(UsageError("M and N must be at least 1".into()));
        }
        Ok((m, n))
    }

    pub fn lambda(&self, m: usize, n: usize) -> Result<Vec<i64>, UsageError> {
        let raw = self
            .flags
            .get("lambda")
            .ok_or_else(|| UsageError("missing required flag --lambda".into()))?;
        let coords: Result<Vec<i64>, _> = raw.split(',').map(|p| p.trim().parse()).collect();
        let coords =
            coords.map_err(|_| UsageError("--lambda must be a comma-separated integer list".into()))?;
        if coords.len() != m + n {
            return Err(UsageError(format!(
                "--lambda needs {} coordinates for gl({m},{n})",
                m + n
            )));
        }
        Ok(coords)
    }

    pub fn bool_flag(&self, name: &str) -> Result<bool, UsageError> {
        match self.flags.get(name).map(|s| s.as_str()) {
            None => Ok(false),
            Some("true") | Some("1") | Some("yes") => Ok(true),
            Some("false") | Some("0") | Some("no") => Ok(false),
            Some(other) => Err(UsageError(format!(
                "flag --{name} must be true/false, got `{other}`"
            ))),
        }
    }

    pub fn scalar_opt(&self, name: &str) -> Result<Option<Scalar>, UsageError> {
        match self.flags.get(name) {
            None => Ok(None),
            Some(text) => parse_scalar(text)
                .map(Some)
                .map_err(|e| UsageError(format!("flag --{name}: {e}"))),
        }
    }

    /// The enumeration cell cap, overridable by environment.
    pub fn cell_cap(&self) -> Result<usize, UsageError> {
        if let Some(v) = self.flags.get("cap") {
            return v
                .parse()
                .map_err(|_| UsageError("--cap must be a nonnegative integer".into()));
        }
        if let Ok(v) = std::env::var("GLMN_CELL_CAP") {
            return v
                .parse()
                .map_err(|_| UsageError("GLMN_CELL_CAP must be a nonnegative integer".into()));
        }
        Ok(glmn_core::youngcomb::DEFAULT_CELL_CAP)
    }
}
