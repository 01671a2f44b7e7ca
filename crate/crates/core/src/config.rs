//! Flat `key = value` run configuration.
//!
//! ```text
//! # Symmetric cells, everything in units of g
//! g = 1
//! kappa = 2
//! omega_a = 2
//! gamma = 0.01
//! gamma_c = 0.02
//! gamma_a = 0.05
//! sweep_start = -5
//! sweep_stop = 5
//! sweep_count = 2001
//! ```
//!
//! `omega_c` defaults to 0 and `omega_a` to `omega_c`. `kappa` and every
//! damping rate default to 0. `g` is required. `gamma` sets both atomic
//! rates and may not be combined with `gamma1`/`gamma2`; `gamma_c` likewise
//! for the cavity rates. `out` and `format` are optional and are overridden
//! by the matching command-line flags.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{DampingParams, SystemParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::config("format", format!("expected csv or json, got `{other}`"))),
        }
    }
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Evenly spaced grid `start..=stop` with `count` points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl SweepSpec {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::config("sweep_count", format!("must be >= 2, got {count}")));
        }
        if !(start < stop) {
            return Err(Error::config("sweep_start", format!("must be < sweep_stop ({start} >= {stop})")));
        }
        Ok(Self { start, stop, count })
    }

    pub fn grid(&self) -> Vec<f64> {
        crate::spectrum::linspace(self.start, self.stop, self.count)
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct OutputSpec {
    pub path: Option<PathBuf>,
    pub format: Format,
}

/// Damping as written in a config; `gamma_a` is only needed for absorption.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DampingSpec {
    pub gamma1: f64,
    pub gamma2: f64,
    pub gammac1: f64,
    pub gammac2: f64,
    pub gamma_a: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub params: SystemParams<f64>,
    pub damping: DampingSpec,
    pub sweep: Option<SweepSpec>,
    pub output: OutputSpec,
}

const KEYS: &[&str] = &[
    "omega_c", "omega_a", "g", "kappa", "gamma", "gamma_c", "gamma1", "gamma2", "gammac1", "gammac2", "gamma_a",
    "sweep_start", "sweep_stop", "sweep_count", "out", "format",
];

impl RunConfig {
    pub fn new(params: SystemParams<f64>) -> Self {
        Self { params, damping: DampingSpec::default(), sweep: None, output: OutputSpec::default() }
    }

    /// Parses the `key = value` text form.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(&str, &str)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::config(line, format!("line {}: expected `key = value`", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            if !KEYS.contains(&key) {
                return Err(Error::config(key, "unknown key"));
            }
            if entries.iter().any(|(k, _)| *k == key) {
                return Err(Error::config(key, "given more than once"));
            }
            entries.push((key, value));
        }
        let get = |k: &str| entries.iter().find(|(key, _)| *key == k).map(|(_, v)| *v);
        let num = |k: &str| -> Result<Option<f64>> {
            get(k)
                .map(|v| {
                    let x: f64 = v.parse().map_err(|_| Error::config(k, format!("not a number: `{v}`")))?;
                    if x.is_finite() {
                        Ok(x)
                    } else {
                        Err(Error::config(k, "must be finite"))
                    }
                })
                .transpose()
        };
        let rate = |k: &str| -> Result<Option<f64>> {
            match num(k)? {
                Some(x) if x < 0.0 => Err(Error::config(k, "rates must be >= 0")),
                other => Ok(other),
            }
        };

        let omega_c = num("omega_c")?.unwrap_or(0.0);
        let omega_a = num("omega_a")?.unwrap_or(omega_c);
        let g = num("g")?.ok_or_else(|| Error::config("g", "missing"))?;
        if g < 0.0 {
            return Err(Error::config("g", "must be >= 0"));
        }
        let kappa = num("kappa")?.unwrap_or(0.0);

        let pair = |common: &str, a: &str, b: &str| -> Result<(f64, f64)> {
            match (rate(common)?, rate(a)?, rate(b)?) {
                (Some(_), Some(_), _) => Err(Error::config(a, format!("cannot be combined with `{common}`"))),
                (Some(_), _, Some(_)) => Err(Error::config(b, format!("cannot be combined with `{common}`"))),
                (Some(x), None, None) => Ok((x, x)),
                (None, x, y) => Ok((x.unwrap_or(0.0), y.unwrap_or(0.0))),
            }
        };
        let (gamma1, gamma2) = pair("gamma", "gamma1", "gamma2")?;
        let (gammac1, gammac2) = pair("gamma_c", "gammac1", "gammac2")?;
        let gamma_a = num("gamma_a")?;
        if let Some(x) = gamma_a {
            if x <= 0.0 {
                return Err(Error::config("gamma_a", "must be > 0"));
            }
        }

        let sweep = match (num("sweep_start")?, num("sweep_stop")?, get("sweep_count")) {
            (None, None, None) => None,
            (Some(start), Some(stop), Some(count)) => {
                let count = count
                    .parse::<usize>()
                    .map_err(|_| Error::config("sweep_count", format!("not a count: `{count}`")))?;
                Some(SweepSpec::new(start, stop, count)?)
            }
            (start, stop, _) => {
                let missing = if start.is_none() {
                    "sweep_start"
                } else if stop.is_none() {
                    "sweep_stop"
                } else {
                    "sweep_count"
                };
                return Err(Error::config(missing, "sweep needs sweep_start, sweep_stop and sweep_count"));
            }
        };

        let output = OutputSpec {
            path: get("out").map(PathBuf::from),
            format: get("format").map(str::parse).transpose()?.unwrap_or_default(),
        };

        Ok(Self {
            params: SystemParams::new(omega_c, omega_a, g, kappa),
            damping: DampingSpec { gamma1, gamma2, gammac1, gammac2, gamma_a },
            sweep,
            output,
        })
    }

    /// Text form that [`RunConfig::parse`] reads back to an identical value.
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let p = &self.params;
        let d = &self.damping;
        let _ = writeln!(s, "omega_c = {}", p.omega_c);
        let _ = writeln!(s, "omega_a = {}", p.omega_a);
        let _ = writeln!(s, "g = {}", p.g);
        let _ = writeln!(s, "kappa = {}", p.kappa);
        if d.gamma1 == d.gamma2 {
            let _ = writeln!(s, "gamma = {}", d.gamma1);
        } else {
            let _ = writeln!(s, "gamma1 = {}\ngamma2 = {}", d.gamma1, d.gamma2);
        }
        if d.gammac1 == d.gammac2 {
            let _ = writeln!(s, "gamma_c = {}", d.gammac1);
        } else {
            let _ = writeln!(s, "gammac1 = {}\ngammac2 = {}", d.gammac1, d.gammac2);
        }
        if let Some(ga) = d.gamma_a {
            let _ = writeln!(s, "gamma_a = {ga}");
        }
        if let Some(sw) = &self.sweep {
            let _ = writeln!(s, "sweep_start = {}\nsweep_stop = {}\nsweep_count = {}", sw.start, sw.stop, sw.count);
        }
        if let Some(path) = &self.output.path {
            let _ = writeln!(s, "out = {}", path.display());
        }
        let _ = writeln!(s, "format = {}", self.output.format.as_str());
        s
    }

    /// Damping with the probe linewidth resolved.
    pub fn damping(&self) -> Result<DampingParams<f64>> {
        let d = &self.damping;
        let gamma_a = d.gamma_a.ok_or_else(|| Error::config("gamma_a", "missing"))?;
        Ok(DampingParams { gamma1: d.gamma1, gamma2: d.gamma2, gammac1: d.gammac1, gammac2: d.gammac2, gamma_a })
    }

    pub fn sweep(&self) -> Result<SweepSpec> {
        self.sweep.ok_or_else(|| Error::config("sweep_start", "missing sweep (sweep_start, sweep_stop, sweep_count)"))
    }
}
