//! Data behind the four reference plots: T1 against height and against
//! frequency, for charge and spin qubits above copper.

use std::fmt;
use std::str::FromStr;

use crate::bulk::{bulk_chi_b_ladder, bulk_chi_e, bulk_im_d_ladder};
use crate::constants::HBAR;
use crate::error::{Error, Result};
use crate::materials::Material;
use crate::parallel::Execution;
use crate::quadrature::QuadratureConfig;
use crate::relaxation::{Orientation, QubitKind};
use crate::spectral::ModelSelector;
use crate::sweep::{run_sweep, Axis, Cell, Grid, SweepConfig, Table};
use crate::DEFAULT_OMEGA;

/// Heights of the distance plots in units of `λ_F`.
pub const Z_RANGE: (f64, f64, usize) = (0.1, 1e4, 51);
/// Frequencies of the spectrum plots, rad/s.
pub const OMEGA_RANGE: (f64, f64, usize) = (1e7, 1e11, 41);
/// Height of the spectrum plots in units of `λ_F`.
pub const SPECTRUM_HEIGHT: f64 = 10.0;
pub const SPECTRUM_TEMPERATURES: [f64; 2] = [0.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::Fig1, Figure::Fig2, Figure::Fig3, Figure::Fig4];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
        }
    }

    fn qubit(self) -> QubitKind {
        match self {
            Figure::Fig1 | Figure::Fig2 => QubitKind::Charge,
            Figure::Fig3 | Figure::Fig4 => QubitKind::Spin,
        }
    }

    fn versus_height(self) -> bool {
        matches!(self, Figure::Fig1 | Figure::Fig3)
    }

    /// Sweep behind the figure's curves.
    pub fn sweep(self, quadrature: QuadratureConfig) -> SweepConfig {
        let material = Material::copper();
        let lf = material.fermi_wavelength();
        let qubit = self.qubit();
        let (axis, grid, z, temperatures, models) = if self.versus_height() {
            (
                Axis::Z,
                Grid::log(Z_RANGE.0 * lf, Z_RANGE.1 * lf, Z_RANGE.2),
                f64::NAN,
                vec![0.0],
                vec![ModelSelector::LocalQuasistatic, ModelSelector::NonlocalQuasistatic],
            )
        } else {
            (
                Axis::Omega,
                Grid::log(OMEGA_RANGE.0, OMEGA_RANGE.1, OMEGA_RANGE.2),
                SPECTRUM_HEIGHT * lf,
                SPECTRUM_TEMPERATURES.to_vec(),
                vec![ModelSelector::NonlocalQuasistatic],
            )
        };
        SweepConfig {
            axis,
            grid,
            material,
            z,
            omega: DEFAULT_OMEGA,
            temperatures,
            qubit,
            moment: qubit.default_moment(),
            orientation: Orientation::X,
            models,
            quadrature,
            decomposition: qubit == QubitKind::Spin,
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown figure `{s}` (expected fig1, fig2, fig3 or fig4)")))
    }
}

/// A named table belonging to a figure.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub name: String,
    pub table: Table,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub figure: Figure,
    pub tables: Vec<FigureTable>,
    pub failures: usize,
    pub first_error: Option<Error>,
}

impl FigureData {
    pub fn exit_code(&self) -> i32 {
        self.first_error.as_ref().map_or(0, Error::exit_code)
    }
}

/// Bulk reference level with its cutoff ladder, one row per cutoff.
fn bulk_table(figure: Figure, quadrature: &QuadratureConfig, exec: &Execution) -> Result<(Table, Option<Error>)> {
    let material = Material::copper();
    let qubit = figure.qubit();
    let m2 = qubit.default_moment().powi(2);
    let t1 = |chi: f64| HBAR * HBAR / (m2 * chi);
    let (columns, rows, converged) = match qubit {
        QubitKind::Charge => {
            let r = bulk_im_d_ladder(&material, DEFAULT_OMEGA, quadrature, exec)?;
            let to_chi = bulk_chi_e(&r) / r.im_d_xx;
            let rows: Vec<Vec<f64>> = r
                .convergence_series
                .iter()
                .map(|&(k, d)| vec![k, d, d * to_chi, t1(d * to_chi)])
                .collect();
            let columns = ["k_max [1/m]", "im_D [J s/m]", "chi_E [V^2 m^-2 s]", "t1 [s]"];
            (columns.map(String::from).to_vec(), rows, r.converged)
        }
        QubitKind::Spin => {
            let r = bulk_chi_b_ladder(&material, DEFAULT_OMEGA, quadrature, exec)?;
            let rows = r
                .convergence_series
                .iter()
                .map(|&(k, chi)| vec![k, chi, t1(chi)])
                .collect();
            let columns = ["k_max [1/m]", "chi_B [T^2 s]", "t1 [s]"];
            (columns.map(String::from).to_vec(), rows, r.converged)
        }
    };
    let error = (!converged).then(|| Error::LadderNotConverged {
        series: rows.iter().map(|r| (r[0], r[1])).collect(),
    });
    let status = if converged { "ok" } else { "ladder-not-converged" };
    let mut columns = columns;
    columns.push("status".into());
    let rows = rows
        .into_iter()
        .map(|r| {
            let mut cells: Vec<Cell> = r.into_iter().map(Cell::Number).collect();
            cells.push(Cell::Text(status.into()));
            cells
        })
        .collect();
    Ok((Table { columns, rows }, error))
}

/// Evaluate every table of a figure.
pub fn figure_data(figure: Figure, quadrature: QuadratureConfig, exec: &Execution) -> Result<FigureData> {
    let sweep = run_sweep(&figure.sweep(quadrature), exec)?;
    let mut tables = vec![FigureTable {
        name: figure.name().to_string(),
        table: sweep.table,
    }];
    let mut failures = sweep.failures;
    let mut first_error = sweep.first_error;
    if figure.versus_height() {
        let (table, err) = bulk_table(figure, &quadrature, exec)?;
        tables.push(FigureTable {
            name: format!("{}_bulk", figure.name()),
            table,
        });
        if let Some(e) = err {
            failures += 1;
            first_error.get_or_insert(e);
        }
    }
    Ok(FigureData {
        figure,
        tables,
        failures,
        first_error,
    })
}
