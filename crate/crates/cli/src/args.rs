//! Command-line parsing into a [`RunConfig`].

use ainf_core::surface::{Orientability, SpecialSurface};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{Coefficients, Command, ConfigError, Format, RunConfig, SurfaceTarget, VerifyTarget};

#[derive(Debug, Parser)]
#[command(name = "ainf", version, about = "A-infinity coalgebra structures on polygons and closed surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Reduce coefficients mod 2.
    #[arg(long, global = true)]
    pub mod2: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SpecialArg {
    Sphere,
    #[value(name = "projective_plane")]
    ProjectivePlane,
    Torus,
    #[value(name = "klein_bottle")]
    KleinBottle,
}

impl From<SpecialArg> for SpecialSurface {
    fn from(s: SpecialArg) -> Self {
        match s {
            SpecialArg::Sphere => SpecialSurface::Sphere,
            SpecialArg::ProjectivePlane => SpecialSurface::ProjectivePlane,
            SpecialArg::Torus => SpecialSurface::Torus,
            SpecialArg::KleinBottle => SpecialSurface::KleinBottle,
        }
    }
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[arg(long)]
    pub genus: Option<u32>,
    /// Canonical orientable scheme (default: unorientable).
    #[arg(long, requires = "genus")]
    pub orientable: bool,
    /// Edge word such as "a a b b c c" or "a b A B".
    #[arg(long, conflicts_with_all = ["genus", "special"])]
    pub word: Option<String>,
    /// Terminal vertex of the polygon.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_enum, conflicts_with = "genus")]
    pub special: Option<SpecialArg>,
}

impl SurfaceArgs {
    fn target(&self) -> Result<Option<SurfaceTarget>, ConfigError> {
        if let Some(word) = &self.word {
            return Ok(Some(SurfaceTarget::Word {
                word: word.clone(),
                t: self.t,
            }));
        }
        if self.t.is_some() {
            return Err(ConfigError::Invalid("--t applies to --word or --n".into()));
        }
        if let Some(s) = self.special {
            return Ok(Some(SurfaceTarget::Special(s.into())));
        }
        Ok(self.genus.map(|genus| SurfaceTarget::Canonical {
            genus,
            orientability: if self.orientable {
                Orientability::Orientable
            } else {
                Orientability::Unorientable
            },
        }))
    }

    fn required_target(&self) -> Result<SurfaceTarget, ConfigError> {
        self.target()?
            .ok_or_else(|| ConfigError::Invalid("give one of --genus, --word, --special".into()))
    }
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Print Δ_k (and optionally ∂) on a polygon.
    Polygon {
        #[arg(long)]
        n: usize,
        /// Terminal vertex (default: n).
        #[arg(long)]
        t: Option<usize>,
        /// Arity; all nonvanishing arities when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// Also print the boundary of every cell.
        #[arg(long)]
        boundary: bool,
    },
    /// Print projected and closed-form diagonals of a surface.
    Surface {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check the structure relations on a polygon or surface.
    Verify {
        /// Polygon size (otherwise a surface option is required).
        #[arg(long, conflicts_with_all = ["genus", "word", "special"])]
        n: Option<usize>,
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Smallest relation index (default 2).
        #[arg(long)]
        r_min: Option<usize>,
        /// Largest relation index (default: polygon size + 1).
        #[arg(long)]
        r_max: Option<usize>,
    },
    /// Verify every polygon with n ≤ n-max: relations and split identities.
    Sweep {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Print the mod-2 cup product matrix on H¹.
    Cup {
        #[command(flatten)]
        surface: SurfaceArgs,
    },
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, ConfigError> {
        let command = match self.command {
            CliCommand::Polygon { n, t, k, boundary } => Command::Polygon {
                n,
                t: t.unwrap_or(n),
                k,
                boundary,
            },
            CliCommand::Surface { surface, k } => Command::Surface {
                target: surface.required_target()?,
                k,
            },
            CliCommand::Verify {
                n,
                surface,
                r_min,
                r_max,
            } => {
                let target = match n {
                    Some(n) => VerifyTarget::Polygon {
                        n,
                        t: surface.t.unwrap_or(n),
                    },
                    None => VerifyTarget::Surface(surface.required_target()?),
                };
                let relations = match (r_min, r_max) {
                    (None, None) => None,
                    (lo, Some(hi)) => Some((lo.unwrap_or(2), hi)),
                    (Some(_), None) => {
                        return Err(ConfigError::Invalid("--r-min needs --r-max".into()))
                    }
                };
                Command::Verify { target, relations }
            }
            CliCommand::Sweep { n_max } => Command::Sweep { n_max },
            CliCommand::Cup { surface } => Command::Cup {
                target: surface.required_target()?,
            },
        };
        let config = RunConfig {
            command,
            format: match self.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            },
            coefficients: if self.mod2 {
                Coefficients::Mod2
            } else {
                Coefficients::Integers
            },
        };
        config.validate()?;
        Ok(config)
    }
}
