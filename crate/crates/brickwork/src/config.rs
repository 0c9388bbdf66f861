//! Run-wide settings resolved from three layers: command-line flags
//! beat the `BRICKWORK_FORMAT` environment variable, which beats an
//! optional key=value config file, which beats the built-in defaults.
//! Only the output format is readable from the environment; the rest
//! would make runs depend on invisible state for no gain.

use crate::error::{Error, Result};
use crate::render::OutputFormat;
use crate::verify::{DEFAULT_SERIES_CAP, DEFAULT_WINDOW};

/// Environment variable consulted for the default output format.
pub const FORMAT_ENV: &str = "BRICKWORK_FORMAT";

/// Ceiling on truncation degrees and variable caps accepted from
/// configuration; beyond this the dense series representations stop
/// being desk-scale.
pub const MAX_SERIES_CAP: usize = 128;

/// Fully resolved settings a run executes under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub format: OutputFormat,
    /// Worker threads for suite fan-out; None leaves the pool at its
    /// library default.
    pub jobs: Option<usize>,
    /// Truncation degree for series pipelines.
    pub series_cap: usize,
    /// Run length that counts as a stabilized tail.
    pub window: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            format: OutputFormat::Plain,
            jobs: None,
            series_cap: DEFAULT_SERIES_CAP,
            window: DEFAULT_WINDOW,
        }
    }
}

/// Settings read from a config file; every field optional.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FileSettings {
    pub format: Option<OutputFormat>,
    pub jobs: Option<usize>,
    pub series_cap: Option<usize>,
    pub window: Option<usize>,
}

/// Parses key=value lines. Blank lines and #-comments are skipped;
/// unknown keys are rejected so typos fail loudly instead of being
/// silently ignored.
pub fn parse_config_file(text: &str) -> Result<FileSettings> {
    let mut out = FileSettings::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse(format!(
                "config line {}: expected key=value, got {line:?}",
                lineno + 1
            )));
        };
        let key = key.trim();
        let value = value.trim();
        let parse_usize = |what: &str| -> Result<usize> {
            value.parse::<usize>().map_err(|_| {
                Error::Parse(format!(
                    "config line {}: {what} wants a positive integer, got {value:?}",
                    lineno + 1
                ))
            })
        };
        match key {
            "format" => out.format = Some(value.parse()?),
            "jobs" => out.jobs = Some(parse_usize("jobs")?),
            "series-cap" => out.series_cap = Some(parse_usize("series-cap")?),
            "window" => out.window = Some(parse_usize("window")?),
            other => {
                return Err(Error::Parse(format!(
                    "config line {}: unknown key {other:?}",
                    lineno + 1
                )));
            }
        }
    }
    Ok(out)
}

/// Merges the three layers into final settings and checks the bounds
/// that apply regardless of where a value came from.
pub fn resolve(
    cli_format: Option<OutputFormat>,
    cli_jobs: Option<usize>,
    cli_series_cap: Option<usize>,
    cli_window: Option<usize>,
    env_format: Option<&str>,
    file: &FileSettings,
) -> Result<Settings> {
    let env_format = match env_format {
        Some(s) => Some(s.parse::<OutputFormat>()?),
        None => None,
    };
    let defaults = Settings::default();
    let settings = Settings {
        format: cli_format.or(env_format).or(file.format).unwrap_or(defaults.format),
        jobs: cli_jobs.or(file.jobs),
        series_cap: cli_series_cap.or(file.series_cap).unwrap_or(defaults.series_cap),
        window: cli_window.or(file.window).unwrap_or(defaults.window),
    };
    if settings.jobs == Some(0) {
        return Err(Error::InvalidInput("jobs must be at least 1".into()));
    }
    if settings.series_cap == 0 || settings.series_cap > MAX_SERIES_CAP {
        return Err(Error::ResourceLimit(format!(
            "series cap must be between 1 and {MAX_SERIES_CAP}, got {}",
            settings.series_cap
        )));
    }
    if settings.window == 0 || settings.window > settings.series_cap {
        return Err(Error::InvalidInput(format!(
            "window must be between 1 and the series cap {}, got {}",
            settings.series_cap, settings.window
        )));
    }
    Ok(settings)
}
