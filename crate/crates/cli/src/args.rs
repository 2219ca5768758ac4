use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Evanescent-wave Johnson noise above a metal and the qubit T1 it causes.
#[derive(Debug, Parser)]
#[command(name = "ewjn", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Electric and magnetic spectral densities at one point.
    Spectral(SpectralArgs),
    /// Relaxation time of one qubit.
    T1(T1Args),
    /// Sweep height, frequency or temperature.
    Sweep(SweepArgs),
    /// Coincident-point Green's function of the bulk metal.
    Bulk(BulkArgs),
    /// Regenerate the data of a reference figure (fig1, fig2, fig3, fig4).
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Preset name or path of a material file.
    #[arg(long, default_value = "copper")]
    pub material: String,
    /// Relative quadrature tolerance.
    #[arg(long)]
    pub rel_tol: Option<f64>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectralArgs {
    #[command(flatten)]
    pub common: Common,
    /// Height above the surface, m.
    #[arg(long)]
    pub z: f64,
    /// Angular frequency, rad/s.
    #[arg(long, default_value_t = ewjn::DEFAULT_OMEGA)]
    pub omega: f64,
    /// local-quasistatic, nonlocal-quasistatic, local-retarded or auto.
    #[arg(long, default_value = "auto")]
    pub model: String,
}

#[derive(Debug, Args)]
pub struct T1Args {
    #[command(flatten)]
    pub common: Common,
    /// Height above the surface, m.
    #[arg(long)]
    pub z: f64,
    /// Level splitting, rad/s.
    #[arg(long, default_value_t = ewjn::DEFAULT_OMEGA)]
    pub omega: f64,
    /// Temperature, K.
    #[arg(long, default_value_t = 0.0)]
    pub temp: f64,
    /// charge or spin.
    #[arg(long, default_value = "charge")]
    pub qubit: String,
    /// Dipole moment (C m for charge, J/T for spin); |e| a_B or μ_B when omitted.
    #[arg(long)]
    pub moment: Option<f64>,
    /// x, y or z.
    #[arg(long, default_value = "x")]
    pub orientation: String,
    #[arg(long, default_value = "auto")]
    pub model: String,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Flat key = value sweep description; flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// z, omega or temperature.
    #[arg(long)]
    pub axis: Option<String>,
    /// log or linear.
    #[arg(long)]
    pub spacing: Option<String>,
    #[arg(long)]
    pub min: Option<f64>,
    #[arg(long)]
    pub max: Option<f64>,
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long)]
    pub material: Option<String>,
    #[arg(long)]
    pub z: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    /// Temperature, K; repeat for one column group per temperature.
    #[arg(long)]
    pub temp: Vec<f64>,
    #[arg(long)]
    pub qubit: Option<String>,
    #[arg(long)]
    pub moment: Option<f64>,
    #[arg(long)]
    pub orientation: Option<String>,
    /// Repeat for one column group per model.
    #[arg(long)]
    pub model: Vec<String>,
    /// Add the r_s / r_p split of the magnetic xx density.
    #[arg(long)]
    pub decomposition: bool,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Debug, Args)]
pub struct BulkArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = ewjn::DEFAULT_OMEGA)]
    pub omega: f64,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// fig1, fig2, fig3 or fig4.
    pub name: String,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long, default_value = "csv")]
    pub format: String,
    #[arg(long)]
    pub rel_tol: Option<f64>,
}
