use ainf_core::surface::{Orientability, SpecialSurface};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Mod2,
}

/// Which surface a command talks about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceTarget {
    Canonical { genus: u32, orientability: Orientability },
    Word { word: String, t: Option<usize> },
    Special(SpecialSurface),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyTarget {
    Polygon { n: usize, t: usize },
    Surface(SurfaceTarget),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Polygon { n: usize, t: usize, k: Option<usize>, boundary: bool },
    Surface { target: SurfaceTarget, k: Option<usize> },
    Verify { target: VerifyTarget, relations: Option<(usize, usize)> },
    Sweep { n_max: usize },
    Cup { target: SurfaceTarget },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub coefficients: Coefficients,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] ainf_core::Error),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError::Invalid(msg.into()))
}

fn check_polygon(n: usize, t: usize) -> Result<(), ConfigError> {
    if n < 3 || t < 2 || t > n {
        return invalid(format!("need n ≥ 3 and 1 < t ≤ n, got n = {n}, t = {t}"));
    }
    Ok(())
}

fn check_surface(target: &SurfaceTarget) -> Result<(), ConfigError> {
    match target {
        SurfaceTarget::Canonical { genus, orientability } => match orientability {
            Orientability::Unorientable if *genus < 2 => {
                invalid("unorientable genus must be ≥ 2; use --special projective_plane for genus 1")
            }
            Orientability::Orientable if *genus < 1 => {
                invalid("orientable genus must be ≥ 1; use --special sphere for genus 0")
            }
            _ => Ok(()),
        },
        SurfaceTarget::Word { word, .. } if word.trim().is_empty() => invalid("empty word"),
        _ => Ok(()),
    }
}

impl RunConfig {
    /// Rejects inadmissible parameter combinations before any computation.
    pub fn validate(&self) -> Result<(), ConfigError> {
        match &self.command {
            Command::Polygon { n, t, k, .. } => {
                check_polygon(*n, *t)?;
                if matches!(k, Some(k) if *k < 2) {
                    return invalid("k must be ≥ 2");
                }
            }
            Command::Surface { target, k } => {
                check_surface(target)?;
                if matches!(k, Some(k) if *k < 2) {
                    return invalid("k must be ≥ 2");
                }
            }
            Command::Verify { target, relations } => {
                match target {
                    VerifyTarget::Polygon { n, t } => check_polygon(*n, *t)?,
                    VerifyTarget::Surface(s) => check_surface(s)?,
                }
                if let Some((lo, hi)) = relations {
                    if *lo < 2 || lo > hi {
                        return invalid(format!("relation range {lo}..={hi} must satisfy 2 ≤ min ≤ max"));
                    }
                }
            }
            Command::Sweep { n_max } => {
                if *n_max < 3 {
                    return invalid("n-max must be ≥ 3");
                }
            }
            Command::Cup { target } => check_surface(target)?,
        }
        Ok(())
    }

    pub fn command_name(&self) -> &'static str {
        match self.command {
            Command::Polygon { .. } => "polygon",
            Command::Surface { .. } => "surface",
            Command::Verify { .. } => "verify",
            Command::Sweep { .. } => "sweep",
            Command::Cup { .. } => "cup",
        }
    }

    /// The parameters echoed into reports.
    pub fn params(&self) -> Map<String, Value> {
        let mut m = Map::new();
        let surface = |m: &mut Map<String, Value>, target: &SurfaceTarget| match target {
            SurfaceTarget::Canonical { genus, orientability } => {
                m.insert("genus".into(), json!(genus));
                m.insert("orientability".into(), json!(orientability.to_string()));
            }
            SurfaceTarget::Word { word, t } => {
                m.insert("word".into(), json!(word));
                if let Some(t) = t {
                    m.insert("t".into(), json!(t));
                }
            }
            SurfaceTarget::Special(kind) => {
                m.insert("special".into(), json!(kind.name()));
            }
        };
        match &self.command {
            Command::Polygon { n, t, k, boundary } => {
                m.insert("n".into(), json!(n));
                m.insert("t".into(), json!(t));
                if let Some(k) = k {
                    m.insert("k".into(), json!(k));
                }
                if *boundary {
                    m.insert("boundary".into(), json!(true));
                }
            }
            Command::Surface { target, k } => {
                surface(&mut m, target);
                if let Some(k) = k {
                    m.insert("k".into(), json!(k));
                }
            }
            Command::Verify { target, relations } => {
                match target {
                    VerifyTarget::Polygon { n, t } => {
                        m.insert("n".into(), json!(n));
                        m.insert("t".into(), json!(t));
                    }
                    VerifyTarget::Surface(s) => surface(&mut m, s),
                }
                if let Some((lo, hi)) = relations {
                    m.insert("relations".into(), json!([lo, hi]));
                }
            }
            Command::Sweep { n_max } => {
                m.insert("n_max".into(), json!(n_max));
            }
            Command::Cup { target } => surface(&mut m, target),
        }
        let coefficients = match self.coefficients {
            Coefficients::Integers => "Z",
            Coefficients::Mod2 => "Z2",
        };
        m.insert("coefficients".into(), json!(coefficients));
        m
    }
}
