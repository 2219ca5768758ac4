//! Parameter sweeps and their tabular output.
//!
//! Every grid point and model is an independent work item. Items may be
//! evaluated in any order; the table is assembled in grid order by a single
//! writer, so the bytes never depend on the execution strategy.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::materials::Material;
use crate::parallel::Execution;
use crate::quadrature::QuadratureConfig;
use crate::relaxation::{relaxation_from_tensor, thermal_factor, Orientation, QubitKind, QubitSpec};
use crate::spectral::{spectral_density, ModelSelector, SpectralDensityTensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Z,
    Omega,
    Temperature,
}

impl Axis {
    pub fn header(self) -> &'static str {
        match self {
            Axis::Z => "z [m]",
            Axis::Omega => "omega [rad/s]",
            Axis::Temperature => "temperature [K]",
        }
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z" => Ok(Axis::Z),
            "omega" => Ok(Axis::Omega),
            "temperature" | "temp" => Ok(Axis::Temperature),
            other => Err(Error::Validation(format!(
                "unknown axis `{other}` (expected z, omega or temperature)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "log" => Ok(Spacing::Log),
            "linear" | "lin" => Ok(Spacing::Linear),
            other => Err(Error::Validation(format!(
                "unknown spacing `{other}` (expected log or linear)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl Grid {
    pub fn log(min: f64, max: f64, count: usize) -> Self {
        Grid {
            min,
            max,
            count,
            spacing: Spacing::Log,
        }
    }

    pub fn linear(min: f64, max: f64, count: usize) -> Self {
        Grid {
            min,
            max,
            count,
            spacing: Spacing::Linear,
        }
    }

    /// Grid values, strictly increasing, with both endpoints exact.
    pub fn values(&self) -> Result<Vec<f64>> {
        if self.count < 2 {
            return Err(Error::Validation(format!(
                "grid needs at least 2 points, got {}",
                self.count
            )));
        }
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(Error::Validation(format!(
                "grid needs finite min < max, got [{}, {}]",
                self.min, self.max
            )));
        }
        let last = (self.count - 1) as f64;
        let mut values: Vec<f64> = match self.spacing {
            Spacing::Linear => (0..self.count)
                .map(|i| self.min + (self.max - self.min) * (i as f64 / last))
                .collect(),
            Spacing::Log => {
                if self.min <= 0.0 {
                    return Err(Error::Validation(format!("log grid needs min > 0, got {}", self.min)));
                }
                let (a, b) = (self.min.ln(), self.max.ln());
                (0..self.count)
                    .map(|i| (a + (b - a) * (i as f64 / last)).exp())
                    .collect()
            }
        };
        values[0] = self.min;
        values[self.count - 1] = self.max;
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Validation(
                "grid is not strictly increasing at double precision".into(),
            ));
        }
        Ok(values)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Validation(format!(
                "unknown format `{other}` (expected csv or json)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub axis: Axis,
    pub grid: Grid,
    pub material: Material,
    /// Height, m; ignored on a z sweep.
    pub z: f64,
    /// Level splitting, rad/s; ignored on an omega sweep.
    pub omega: f64,
    /// One column group per model and temperature; ignored on a temperature sweep.
    pub temperatures: Vec<f64>,
    pub qubit: QubitKind,
    pub moment: f64,
    pub orientation: Orientation,
    pub models: Vec<ModelSelector>,
    pub quadrature: QuadratureConfig,
    /// Add the signed `r_s`/`r_p` split of the magnetic `χ_xx`.
    pub decomposition: bool,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<Vec<f64>> {
        let values = self.grid.values()?;
        if self.axis != Axis::Z {
            require_positive("z", self.z)?;
        }
        if self.axis != Axis::Omega {
            require_positive("omega", self.omega)?;
        }
        match self.axis {
            Axis::Z | Axis::Omega if values[0] <= 0.0 => {
                return Err(Error::Validation(format!(
                    "{} grid must be positive",
                    self.axis.header()
                )));
            }
            Axis::Temperature if values[0] < 0.0 => {
                return Err(Error::Validation("temperature grid must be non-negative".into()));
            }
            _ => {}
        }
        if self.axis != Axis::Temperature {
            if self.temperatures.is_empty() {
                return Err(Error::Validation("at least one temperature is required".into()));
            }
            for &t in &self.temperatures {
                if !(t >= 0.0 && t.is_finite()) {
                    return Err(Error::Validation(format!("temperature must be non-negative, got {t}")));
                }
            }
        }
        if self.models.is_empty() {
            return Err(Error::Validation("at least one model is required".into()));
        }
        QubitSpec::new(
            self.qubit,
            self.moment,
            self.orientation,
            if self.axis == Axis::Omega { 1.0 } else { self.omega },
        )?;
        self.quadrature.validate()?;
        Ok(values)
    }

    fn group_temperatures(&self) -> Vec<Option<f64>> {
        match self.axis {
            Axis::Temperature => vec![None],
            _ => self.temperatures.iter().map(|&t| Some(t)).collect(),
        }
    }
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Text(String),
}

/// Labeled rows ready for serialization.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

pub fn format_number(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.8e}")
    } else {
        "nan".to_string()
    }
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Number(x) => format_number(*x),
                    Cell::Text(s) => s.clone(),
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    /// Rows as objects keyed by column header; numbers keep the CSV digits
    /// and non-finite values become `null`.
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    let value = match cell {
                        Cell::Number(x) if x.is_finite() => format_number(*x)
                            .parse::<serde_json::Number>()
                            .map(serde_json::Value::Number)
                            .unwrap_or(serde_json::Value::Null),
                        Cell::Number(_) => serde_json::Value::Null,
                        Cell::Text(s) => serde_json::Value::String(s.clone()),
                    };
                    obj.insert(name.clone(), value);
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "columns": self.columns, "rows": rows });
        let mut text = serde_json::to_string_pretty(&doc).expect("table serializes");
        text.push('\n');
        text
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn write(&self, path: &Path, format: OutputFormat) -> Result<()> {
        std::fs::write(path, self.render(format))
            .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub table: Table,
    /// Number of (point, column group) entries that failed.
    pub failures: usize,
    /// First failure, kept for the exit status.
    pub first_error: Option<Error>,
}

impl SweepOutput {
    pub fn exit_code(&self) -> i32 {
        self.first_error.as_ref().map_or(0, Error::exit_code)
    }
}

fn group_label(model: ModelSelector, temperature: Option<f64>, many_temperatures: bool) -> String {
    match temperature {
        Some(t) if many_temperatures => format!("{model}@{t}K"),
        _ => model.to_string(),
    }
}

/// Evaluate a sweep. Per-point failures are reported in the status columns.
pub fn run_sweep(cfg: &SweepConfig, exec: &Execution) -> Result<SweepOutput> {
    let values = cfg.validate()?;
    let units = cfg.qubit.field().units();
    let temps = cfg.group_temperatures();
    let many = temps.len() > 1;

    let mut columns = vec![cfg.axis.header().to_string()];
    for &model in &cfg.models {
        for &t in &temps {
            let g = group_label(model, t, many);
            columns.push(format!("{g}:chi_xx [{units}]"));
            columns.push(format!("{g}:chi_zz [{units}]"));
            columns.push(format!("{g}:rate [1/s]"));
            columns.push(format!("{g}:t1 [s]"));
            columns.push(format!("{g}:err [{units}]"));
            if cfg.decomposition {
                columns.push(format!("{g}:chi_xx_rs [{units}]"));
                columns.push(format!("{g}:chi_xx_rp [{units}]"));
            }
            if model == ModelSelector::Auto {
                columns.push(format!("{g}:model"));
            }
            columns.push(format!("{g}:status"));
        }
    }

    let tasks: Vec<(usize, usize)> = (0..values.len())
        .flat_map(|i| (0..cfg.models.len()).map(move |m| (i, m)))
        .collect();
    let tensors: Vec<Result<SpectralDensityTensor>> = exec.map(&tasks, |&(i, m)| {
        let (z, omega) = match cfg.axis {
            Axis::Z => (values[i], cfg.omega),
            Axis::Omega => (cfg.z, values[i]),
            Axis::Temperature => (cfg.z, cfg.omega),
        };
        spectral_density(
            &cfg.material,
            cfg.qubit.field(),
            z,
            omega,
            cfg.models[m],
            &cfg.quadrature,
        )
    });

    let mut failures = 0;
    let mut first_error = None;
    let mut rows = Vec::with_capacity(values.len());
    let mut tensors = tensors.into_iter();
    for &x in &values {
        let mut row = vec![Cell::Number(x)];
        for &model in &cfg.models {
            let tensor = tensors.next().expect("one tensor per task");
            for &t in &temps {
                let temperature = t.unwrap_or(x);
                let omega = if cfg.axis == Axis::Omega { x } else { cfg.omega };
                let outcome = tensor.as_ref().map_err(Clone::clone).and_then(|chi| {
                    let qubit = QubitSpec::new(cfg.qubit, cfg.moment, cfg.orientation, omega)?;
                    thermal_factor(omega, temperature)?;
                    Ok((chi, relaxation_from_tensor(&qubit, chi, temperature)?))
                });
                match outcome {
                    Ok((chi, r)) => {
                        row.extend([
                            Cell::Number(chi.chi_xx),
                            Cell::Number(chi.chi_zz),
                            Cell::Number(r.rate),
                            Cell::Number(r.t1),
                            Cell::Number(r.chi_error),
                        ]);
                        if cfg.decomposition {
                            let (rs, rp) = chi
                                .decomposition
                                .map_or((f64::NAN, f64::NAN), |d| (d.chi_xx_rs, d.chi_xx_rp));
                            row.extend([Cell::Number(rs), Cell::Number(rp)]);
                        }
                        if model == ModelSelector::Auto {
                            row.push(Cell::Text(chi.model.to_string()));
                        }
                        row.push(Cell::Text("ok".into()));
                    }
                    Err(e) => {
                        failures += 1;
                        let blanks = 5 + if cfg.decomposition { 2 } else { 0 };
                        row.extend(std::iter::repeat_n(Cell::Number(f64::NAN), blanks));
                        if model == ModelSelector::Auto {
                            row.push(Cell::Text(String::new()));
                        }
                        row.push(Cell::Text(e.tag().into()));
                        first_error.get_or_insert(e);
                    }
                }
            }
        }
        rows.push(row);
    }

    Ok(SweepOutput {
        table: Table { columns, rows },
        failures,
        first_error,
    })
}

/// Flat `key = value` sweep description as read from a config file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepFile {
    pub axis: Option<String>,
    pub spacing: Option<String>,
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub count: Option<usize>,
    pub material: Option<String>,
    pub z: Option<f64>,
    pub omega: Option<f64>,
    pub temperature: Option<f64>,
    pub temperatures: Option<Vec<f64>>,
    pub qubit: Option<String>,
    pub moment: Option<f64>,
    pub orientation: Option<String>,
    pub model: Option<String>,
    pub models: Option<Vec<String>>,
    pub rel_tol: Option<f64>,
    pub decomposition: Option<bool>,
    pub format: Option<String>,
    pub out: Option<String>,
}

impl SweepFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Validation(format!("sweep config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Fill in defaults and check every field.
    pub fn into_config(self) -> Result<SweepConfig> {
        let missing = |k: &str| Error::Validation(format!("sweep config is missing `{k}`"));
        let axis: Axis = self.axis.as_deref().ok_or_else(|| missing("axis"))?.parse()?;
        let spacing = self.spacing.as_deref().map(str::parse).transpose()?.unwrap_or_default();
        let grid = Grid {
            min: self.min.ok_or_else(|| missing("min"))?,
            max: self.max.ok_or_else(|| missing("max"))?,
            count: self.count.ok_or_else(|| missing("count"))?,
            spacing,
        };
        let material = Material::load(self.material.as_deref().unwrap_or("copper"))?;
        let qubit: QubitKind = self
            .qubit
            .as_deref()
            .map(str::parse)
            .transpose()?
            .unwrap_or(QubitKind::Charge);
        let orientation = self
            .orientation
            .as_deref()
            .map(str::parse)
            .transpose()?
            .unwrap_or(Orientation::X);
        let models = match (self.model, self.models) {
            (Some(_), Some(_)) => return Err(Error::Validation("give either `model` or `models`, not both".into())),
            (Some(m), None) => vec![m.parse()?],
            (None, Some(ms)) => ms.iter().map(|m| m.parse()).collect::<Result<_>>()?,
            (None, None) => vec![ModelSelector::Auto],
        };
        let temperatures = match (self.temperature, self.temperatures) {
            (Some(_), Some(_)) => {
                return Err(Error::Validation(
                    "give either `temperature` or `temperatures`, not both".into(),
                ))
            }
            (Some(t), None) => vec![t],
            (None, Some(ts)) => ts,
            (None, None) => vec![0.0],
        };
        let mut quadrature = QuadratureConfig::default();
        if let Some(tol) = self.rel_tol {
            quadrature = quadrature.with_rel_tol(tol);
        }
        let cfg = SweepConfig {
            axis,
            grid,
            material,
            z: self.z.unwrap_or(f64::NAN),
            omega: self.omega.unwrap_or(crate::DEFAULT_OMEGA),
            temperatures,
            qubit,
            moment: self.moment.unwrap_or_else(|| qubit.default_moment()),
            orientation,
            models,
            quadrature,
            decomposition: self.decomposition.unwrap_or(false),
        };
        if axis != Axis::Z && self.z.is_none() {
            return Err(missing("z"));
        }
        cfg.validate()?;
        Ok(cfg)
    }
}
