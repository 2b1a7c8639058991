use std::path::PathBuf;

use clap::{Args, ValueEnum};
use tangential::geometry::GridSpec;
use tangential::{DEFAULT_CAP, Error};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Options shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Jet degree cap N.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u32,
    /// Working order W (defaults to N - 1).
    #[arg(long, global = true)]
    pub order: Option<u32>,
    /// Grid nodes per side.
    #[arg(long, global = true, default_value_t = tangential::geometry::DEFAULT_RESOLUTION)]
    pub grid: usize,
    /// Sampled rectangle: `r` for [-r, r]^2, `lo,hi` for a square or `xlo,xhi,tlo,thi`.
    #[arg(long, global = true, default_value = "1")]
    pub domain: String,
    /// Output directory for SVG, OBJ and manifest files.
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl RunConfig {
    /// W, checked against the derivative trust bound `W ≤ N − 1`.
    pub fn order(&self) -> Result<u32, CliError> {
        let trusted = self.cap.saturating_sub(1);
        let order = self.order.unwrap_or(trusted);
        if order > trusted || self.cap == 0 {
            return Err(Error::OrderTooLarge { order, trusted, cap: self.cap }.into());
        }
        Ok(order)
    }

    pub fn grid_spec(&self) -> Result<GridSpec, CliError> {
        let parts = self
            .domain
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Input(format!("bad --domain {:?}: {e}", self.domain)))?;
        let (xi, t) = match parts[..] {
            [r] => ([-r, r], [-r, r]),
            [lo, hi] => ([lo, hi], [lo, hi]),
            [a, b, c, d] => ([a, b], [c, d]),
            _ => return Err(CliError::Input(format!("bad --domain {:?}", self.domain))),
        };
        Ok(GridSpec::new(xi, t, self.grid, self.grid)?)
    }

    pub fn create_out_dir(&self) -> Result<(), CliError> {
        std::fs::create_dir_all(&self.out)?;
        Ok(())
    }
}
