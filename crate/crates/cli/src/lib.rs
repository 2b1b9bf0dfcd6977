//! Sweeps over scaled time for the quantities in `swapsim-core`, and the
//! figure recipes that drive them. Output is CSV with `%.12e` numbers.

pub mod config;
pub mod error;
pub mod recipes;
pub mod series;
pub mod sweep;

pub use config::{Curve, Quantity, Settings, SweepConfig};
pub use error::{CliError, Result};
pub use recipes::{fig_recipe, FIG_IDS};
pub use series::{format_c_exp, TimeSeries};
pub use sweep::run_sweep;
