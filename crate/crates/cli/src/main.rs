mod args;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use ewjn::bulk::{bulk_im_d_ladder, surface_limit_im_d};
use ewjn::figures::{figure_data, Figure};
use ewjn::parallel::Execution;
use ewjn::relaxation::{relaxation_from_tensor, Orientation, QubitKind, QubitSpec};
use ewjn::spectral::{regime_select, spectral_density, FieldKind, ModelSelector, SpectralDensityTensor};
use ewjn::sweep::{run_sweep, OutputFormat, SweepFile};
use ewjn::{Error, Material, QuadratureConfig, Result};

use args::{BulkArgs, Cli, Command, FigureArgs, SpectralArgs, SweepArgs, T1Args};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Spectral(a) => spectral(a),
        Command::T1(a) => single_t1(a),
        Command::Sweep(a) => sweep(a),
        Command::Bulk(a) => bulk(a),
        Command::Figure(a) => figure(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn invalid(msg: String) -> Error {
    Error::Validation(msg)
}

fn positive(name: &str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(invalid(format!("--{name} must be positive, got {value}")))
    }
}

fn quadrature(rel_tol: Option<f64>) -> Result<QuadratureConfig> {
    let cfg = rel_tol.map_or_else(QuadratureConfig::default, |t| {
        QuadratureConfig::default().with_rel_tol(t)
    });
    cfg.validate()?;
    Ok(cfg)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| invalid(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| invalid(format!("cannot write to stdout: {e}"))),
    }
}

fn emit_json(out: Option<&Path>, doc: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc).expect("json document");
    text.push('\n');
    emit(out, &text)
}

fn material_json(m: &Material) -> Value {
    json!({
        "name": m.name(),
        "omega_p_rad_s": m.plasma_frequency(),
        "nu_rad_s": m.collision_rate(),
        "fermi_energy_ev": m.fermi_energy() / ewjn::constants::EV,
        "fermi_wavelength_m": m.fermi_wavelength(),
    })
}

fn tensor_json(t: &SpectralDensityTensor) -> Value {
    let mut doc = json!({
        "units": t.units(),
        "chi_xx": t.chi_xx,
        "chi_yy": t.chi_xx,
        "chi_zz": t.chi_zz,
        "error_xx": t.error_xx,
        "error_zz": t.error_zz,
        "model": t.model,
    });
    if let Some(d) = t.decomposition {
        doc["chi_xx_rs"] = json!(d.chi_xx_rs);
        doc["chi_xx_rp"] = json!(d.chi_xx_rp);
    }
    doc
}

fn spectral(a: SpectralArgs) -> Result<i32> {
    let z = positive("z", a.z)?;
    let omega = positive("omega", a.omega)?;
    let model: ModelSelector = a.model.parse()?;
    let cfg = quadrature(a.common.rel_tol)?;
    let material = Material::load(&a.common.material)?;
    let regime = regime_select(&material, z, omega)?;
    let e = spectral_density(&material, FieldKind::Electric, z, omega, model, &cfg)?;
    let b = spectral_density(&material, FieldKind::Magnetic, z, omega, model, &cfg)?;
    let doc = json!({
        "inputs": {
            "material": material_json(&material),
            "z_m": z,
            "omega_rad_s": omega,
            "model": model,
            "rel_tol": cfg.rel_tol,
        },
        "model": e.model,
        "enhancement_window": regime.enhancement && e.model == ModelSelector::NonlocalQuasistatic,
        "electric": tensor_json(&e),
        "magnetic": tensor_json(&b),
    });
    emit_json(a.common.out.as_deref(), &doc)?;
    Ok(0)
}

fn single_t1(a: T1Args) -> Result<i32> {
    let z = positive("z", a.z)?;
    let omega = positive("omega", a.omega)?;
    if !(a.temp >= 0.0 && a.temp.is_finite()) {
        return Err(invalid(format!("--temp must be non-negative, got {}", a.temp)));
    }
    let kind: QubitKind = a.qubit.parse()?;
    let orientation: Orientation = a.orientation.parse()?;
    let moment = positive("moment", a.moment.unwrap_or_else(|| kind.default_moment()))?;
    let model: ModelSelector = a.model.parse()?;
    let cfg = quadrature(a.common.rel_tol)?;
    let material = Material::load(&a.common.material)?;
    let qubit = QubitSpec::new(kind, moment, orientation, omega)?;
    let regime = regime_select(&material, z, omega)?;
    let chi = spectral_density(&material, kind.field(), z, omega, model, &cfg)?;
    let r = relaxation_from_tensor(&qubit, &chi, a.temp)?;
    let doc = json!({
        "inputs": {
            "material": material_json(&material),
            "z_m": z,
            "omega_rad_s": omega,
            "temperature_k": a.temp,
            "qubit": kind,
            "moment": moment,
            "moment_units": kind.moment_units(),
            "orientation": orientation,
            "model": model,
            "rel_tol": cfg.rel_tol,
        },
        "model": r.model,
        "enhancement_window": regime.enhancement && r.model == ModelSelector::NonlocalQuasistatic,
        "chi": tensor_json(&chi),
        "chi_component_used": { "value": r.chi, "error": r.chi_error, "units": r.chi_units },
        "thermal_factor": r.thermal_factor,
        "rate_per_s": r.rate,
        "t1_s": r.t1,
    });
    emit_json(a.common.out.as_deref(), &doc)?;
    Ok(0)
}

fn sweep(a: SweepArgs) -> Result<i32> {
    let mut file = match &a.config {
        Some(path) => SweepFile::load(path)?,
        None => SweepFile::default(),
    };
    macro_rules! take {
        ($($field:ident),*) => { $( if a.$field.is_some() { file.$field = a.$field.clone(); } )* };
    }
    take!(
        axis,
        spacing,
        min,
        max,
        count,
        material,
        z,
        omega,
        qubit,
        moment,
        orientation,
        rel_tol,
        format
    );
    if !a.temp.is_empty() {
        file.temperature = None;
        file.temperatures = Some(a.temp.clone());
    }
    if !a.model.is_empty() {
        file.model = None;
        file.models = Some(a.model.clone());
    }
    if a.decomposition {
        file.decomposition = Some(true);
    }
    let format: OutputFormat = file.format.as_deref().map(str::parse).transpose()?.unwrap_or_default();
    let out = a.out.clone().or_else(|| file.out.clone().map(Into::into));
    let cfg = file.into_config()?;
    let exec = Execution::from_env()?;
    let result = run_sweep(&cfg, &exec)?;
    emit(out.as_deref(), &result.table.render(format))?;
    eprintln!(
        "sweep: {} points x {} column groups, {} failed",
        result.table.rows.len(),
        cfg.models.len()
            * if cfg.axis == ewjn::sweep::Axis::Temperature {
                1
            } else {
                cfg.temperatures.len()
            },
        result.failures
    );
    Ok(result.exit_code())
}

fn bulk(a: BulkArgs) -> Result<i32> {
    let omega = positive("omega", a.omega)?;
    let cfg = quadrature(a.common.rel_tol)?;
    let material = Material::load(&a.common.material)?;
    let exec = Execution::from_env()?;
    let r = bulk_im_d_ladder(&material, omega, &cfg, &exec)?;
    let surface = surface_limit_im_d(&material, omega, &cfg)?;
    let doc = json!({
        "inputs": { "material": material_json(&material), "omega_rad_s": omega, "rel_tol": cfg.rel_tol },
        "units": "J s/m",
        "im_D_xx": r.im_d_xx,
        "im_D_zz": r.im_d_zz,
        "k_max_used_per_m": r.k_max_used,
        "converged": r.converged,
        "convergence_series": r.convergence_series,
        "surface": { "z_m": surface.z, "im_D_xx": surface.im_d_xx, "im_D_zz": surface.im_d_zz },
        "status": if r.converged { "ok" } else { "ladder-not-converged" },
    });
    emit_json(a.common.out.as_deref(), &doc)?;
    if r.converged {
        Ok(0)
    } else {
        let e = Error::LadderNotConverged {
            series: r.convergence_series,
        };
        eprintln!("bulk: {e}");
        Ok(e.exit_code())
    }
}

fn figure(a: FigureArgs) -> Result<i32> {
    let fig: Figure = a.name.parse()?;
    let format: OutputFormat = a.format.parse()?;
    let cfg = quadrature(a.rel_tol)?;
    let exec = Execution::from_env()?;
    std::fs::create_dir_all(&a.out).map_err(|e| invalid(format!("cannot create {}: {e}", a.out.display())))?;
    let data = figure_data(fig, cfg, &exec)?;
    for t in &data.tables {
        let path = a.out.join(format!("{}.{}", t.name, format.extension()));
        t.table.write(&path, format)?;
        eprintln!("{}: {} rows -> {}", t.name, t.table.rows.len(), path.display());
    }
    if let Some(e) = &data.first_error {
        eprintln!("{fig}: {} failed entries; first: {e}", data.failures);
    }
    Ok(data.exit_code())
}
