//! Acceptance criteria for the copper reference device. Each criterion prints
//! one PASS/FAIL line with the numbers it was judged on; the process exits
//! non-zero if any criterion fails.

use std::process::ExitCode;

use num_complex::Complex64;

use ewjn::bulk::{bulk_im_d_coincident, bulk_im_d_ladder, surface_limit_im_d};
use ewjn::constants::{BOLTZMANN, HBAR, SPEED_OF_LIGHT};
use ewjn::figures::{figure_data, Figure};
use ewjn::fresnel::{nonlocal_rp_quasistatic, nonlocal_rs_quasistatic};
use ewjn::materials::{drude_epsilon, epsilon_l, epsilon_t, skin_depth};
use ewjn::parallel::Execution;
use ewjn::relaxation::{t1, Orientation, QubitKind, QubitSpec};
use ewjn::spectral::*;
use ewjn::{ComplexPermittivity, Material, QuadratureConfig, UniformPermittivity, DEFAULT_OMEGA};

const OMEGA: f64 = DEFAULT_OMEGA;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn within(x: f64, target: f64, rel: f64) -> bool {
    (x / target - 1.0).abs() <= rel
}

fn bulk_value() -> Verdict {
    let m = Material::copper();
    let target = 3.2e-15;
    match bulk_im_d_coincident(&m, OMEGA, &cfg()) {
        Ok(r) => verdict(
            within(r.im_d_xx, target, 0.3) && within(r.im_d_zz, target, 0.3),
            format!(
                "Im D_xx = {:.3e}, Im D_zz = {:.3e} J s/m (target {target:.1e} ± 30%), k_max = {:.2e}",
                r.im_d_xx, r.im_d_zz, r.k_max_used
            ),
        ),
        Err(e) => {
            let r = bulk_im_d_ladder(&m, OMEGA, &cfg(), &Execution::default()).expect("ladder evaluates");
            let series: Vec<String> = r
                .convergence_series
                .iter()
                .map(|(k, v)| format!("{:.0}kF:{v:.3e}", k / m.fermi_wavevector()))
                .collect();
            verdict(
                false,
                format!("{} [{}] (target {target:.1e} ± 30%)", e.tag(), series.join(", ")),
            )
        }
    }
}

fn surface_limit() -> Verdict {
    let m = Material::copper();
    let s = surface_limit_im_d(&m, OMEGA, &cfg()).unwrap();
    let bulk = bulk_im_d_ladder(&m, OMEGA, &cfg(), &Execution::default()).unwrap();
    let ratio = s.im_d_zz / s.im_d_xx;
    let pass = within(s.im_d_xx, 1.32e-15, 0.25)
        && within(s.im_d_zz, 2.6e-15, 0.25)
        && within(ratio, 2.0, 0.05)
        && s.im_d_xx < bulk.im_d_xx
        && s.im_d_zz < bulk.im_d_xx;
    verdict(
        pass,
        format!(
            "Im D_xx = {:.3e}, Im D_zz = {:.3e} J s/m (targets 1.32e-15, 2.6e-15 ± 25%), zz/xx = {ratio:.4}, bulk ladder top = {:.3e}",
            s.im_d_xx, s.im_d_zz, bulk.im_d_xx
        ),
    )
}

fn quasistatic_validity() -> Verdict {
    let m = Material::copper();
    let z = skin_depth(&m, OMEGA).unwrap() / 20.0;
    let er = chi_e_local_retarded(&m, z, OMEGA, &cfg()).unwrap();
    let eq = chi_e_quasistatic_local(&m, z, OMEGA).unwrap();
    let br = chi_b_local_retarded(&m, z, OMEGA, &cfg()).unwrap();
    let bq = chi_b_quasistatic_local(&m, z, OMEGA).unwrap();
    let d = [
        er.chi_xx / eq.chi_xx - 1.0,
        er.chi_zz / eq.chi_zz - 1.0,
        br.chi_xx / bq.chi_xx - 1.0,
        br.chi_zz / bq.chi_zz - 1.0,
    ];
    verdict(
        d.iter().all(|x| x.abs() < 0.01),
        format!(
            "z = δ/20 = {z:.3e} m; E xx {:+.3e}, E zz {:+.3e}, B xx {:+.3e}, B zz {:+.3e} (limit ±1e-2)",
            d[0], d[1], d[2], d[3]
        ),
    )
}

fn divergence_removal() -> Verdict {
    let m = Material::copper();
    let lf = m.fermi_wavelength();
    let z = 1e-3 * lf;
    let a = chi_e_quasistatic_nonlocal(&m, z, OMEGA, &cfg()).unwrap();
    let b = chi_e_quasistatic_nonlocal(&m, z / 2.0, OMEGA, &cfg()).unwrap();
    let change = [b.chi_xx / a.chi_xx - 1.0, b.chi_zz / a.chi_zz - 1.0];
    let l1 = chi_e_quasistatic_local(&m, z, OMEGA).unwrap().chi_xx;
    let l2 = chi_e_quasistatic_local(&m, z / 2.0, OMEGA).unwrap().chi_xx;
    let slope = (l2 / l1).ln() / 0.5f64.ln();
    let finite = a.chi_xx.is_finite() && a.chi_zz.is_finite() && b.chi_xx.is_finite();
    verdict(
        finite && change.iter().all(|c| c.abs() < 0.02) && (slope + 3.0).abs() < 1e-6,
        format!(
            "nonlocal chi_xx(1e-3 λF) = {:.3e}, change on halving z: xx {:+.3e}, zz {:+.3e} (limit ±2e-2); local slope {slope:.9}",
            a.chi_xx, change[0], change[1]
        ),
    )
}

fn crossover_window() -> Verdict {
    let m = Material::copper();
    let lf = m.fermi_wavelength();
    let mut pass = true;
    let mut parts = Vec::new();
    for n in [30.0, 300.0, 3000.0] {
        let z = n * lf;
        let e = chi_e_quasistatic_nonlocal(&m, z, OMEGA, &cfg()).unwrap().chi_xx
            / chi_e_quasistatic_local(&m, z, OMEGA).unwrap().chi_xx;
        let b = chi_b_quasistatic_nonlocal(&m, z, OMEGA, &cfg()).unwrap().chi_zz
            / chi_b_quasistatic_local(&m, z, OMEGA).unwrap().chi_zz;
        pass &= e > 1.0 && e < 1.5 && b <= 1.0;
        parts.push(format!("{n}λF: E {e:.4}, B {b:.4}"));
    }
    verdict(pass, format!("{} (E in (1, 1.5), B ≤ 1)", parts.join("; ")))
}

fn t1_magnitude() -> Verdict {
    let m = Material::copper();
    let q = QubitSpec::reference(QubitKind::Charge, Orientation::X, OMEGA).unwrap();
    let z = 30.0 * m.fermi_wavelength();
    let local = t1(&m, &q, z, 0.0, ModelSelector::LocalQuasistatic, &cfg()).unwrap().t1;
    let nonlocal = t1(&m, &q, z, 0.0, ModelSelector::NonlocalQuasistatic, &cfg())
        .unwrap()
        .t1;
    let ok = |t: f64| (0.1..=10.0).contains(&t);
    verdict(
        ok(local) && ok(nonlocal),
        format!("T1 local {local:.4e} s, nonlocal {nonlocal:.4e} s (window [0.1, 10] s)"),
    )
}

fn thermal_scaling() -> Verdict {
    let m = Material::copper();
    let z = 10.0 * m.fermi_wavelength();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for kind in [QubitKind::Charge, QubitKind::Spin] {
        for model in ModelSelector::CONCRETE {
            for omega in [1e8, 1e9, 1e10] {
                let q = QubitSpec::reference(kind, Orientation::X, omega).unwrap();
                let cold = t1(&m, &q, z, 0.0, model, &cfg()).unwrap().t1;
                let warm = t1(&m, &q, z, 2.0, model, &cfg()).unwrap().t1;
                let x = HBAR * omega / (2.0 * BOLTZMANN * 2.0);
                worst = worst.max((warm / cold / x.tanh() - 1.0).abs());
                count += 1;
            }
        }
    }
    verdict(
        worst < 1e-6,
        format!("{count} cases, worst relative deviation {worst:.2e} (limit 1e-6)"),
    )
}

fn local_limit_oracles() -> Verdict {
    let m = Material::copper();
    let c = cfg();
    let tol = 10.0 * c.rel_tol;
    let drude = drude_epsilon(&m, OMEGA).unwrap();
    let mut worst_rp: f64 = 0.0;
    let mut worst_rs: f64 = 0.0;
    for eps in [
        drude,
        ComplexPermittivity::new(2.0, 0.5),
        ComplexPermittivity::new(-50.0, 3.0),
    ] {
        let stub = UniformPermittivity(eps);
        let e = eps.value();
        for p in [1e5, 1e7, 1e9] {
            let rp = nonlocal_rp_quasistatic(&stub, p, OMEGA, &c).unwrap();
            let rs = nonlocal_rs_quasistatic(&stub, p, OMEGA, &c).unwrap();
            let rp0 = (e - 1.0) / (e + 1.0);
            let rs0 = (e - 1.0) * OMEGA * OMEGA / (4.0 * p * p * SPEED_OF_LIGHT * SPEED_OF_LIGHT);
            worst_rp = worst_rp.max(componentwise(rp, rp0));
            worst_rs = worst_rs.max(componentwise(rs, rs0));
        }
    }
    let k = 1e-6 * m.fermi_wavevector();
    let d = drude.value();
    let dev_l = (epsilon_l(&m, k, OMEGA).unwrap().value() - d).norm() / d.norm();
    let dev_t = (epsilon_t(&m, k, OMEGA).unwrap().value() - d).norm() / d.norm();
    verdict(
        worst_rp < tol && worst_rs < tol && dev_l < 1e-6 && dev_t < 1e-6,
        format!(
            "stub r_p {worst_rp:.2e}, r_s {worst_rs:.2e} (limit {tol:.0e}); at 1e-6 kF: eps_l {dev_l:.2e}, eps_t {dev_t:.2e} (limit 1e-6)"
        ),
    )
}

fn componentwise(got: Complex64, want: Complex64) -> f64 {
    let re = (got.re - want.re).abs() / want.re.abs();
    let im = (got.im - want.im).abs() / want.im.abs();
    re.max(im)
}

fn skin_depth_value() -> Verdict {
    let d = skin_depth(&Material::copper(), OMEGA).unwrap();
    verdict(within(d, 3e-6, 0.15), format!("δ = {d:.4e} m (target 3e-6 ± 15%)"))
}

fn fit_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (xs, ys): (Vec<f64>, Vec<f64>) = points.iter().map(|&(x, y)| (x.ln(), y.abs().ln())).unzip();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

fn fig4_structure() -> Verdict {
    let m = Material::copper();
    let z = 10.0 * m.fermi_wavelength();
    let mut rs = Vec::new();
    let mut rp = Vec::new();
    for i in 0..=8 {
        let omega = 1e7 * 10f64.powf(i as f64 / 4.0);
        let d = chi_b_quasistatic_nonlocal(&m, z, omega, &cfg())
            .unwrap()
            .decomposition
            .unwrap();
        rs.push((omega, d.chi_xx_rs));
        rp.push((omega, d.chi_xx_rp));
    }
    let (a, b) = (fit_slope(&rs), fit_slope(&rp));
    let sign = |v: &[(f64, f64)]| {
        if v.iter().all(|p| p.1 > 0.0) {
            "positive"
        } else if v.iter().all(|p| p.1 < 0.0) {
            "negative"
        } else {
            "mixed"
        }
    };
    verdict(
        (a - 1.0).abs() <= 0.1 && (b - 3.0).abs() <= 0.2,
        format!(
            "r_s part slope {a:.4} (1.0 ± 0.1), r_p part slope {b:.4} (3.0 ± 0.2); signs: r_s {}, r_p {} (not asserted)",
            sign(&rs),
            sign(&rp)
        ),
    )
}

fn determinism() -> Verdict {
    let render = |exec: Execution| -> Vec<String> {
        figure_data(Figure::Fig1, cfg(), &exec)
            .unwrap()
            .tables
            .iter()
            .map(|t| t.table.to_csv())
            .collect()
    };
    let first = render(Execution::default());
    let second = render(Execution::default());
    let serial = render(Execution::Serial);
    let capped = render(Execution::Parallel { threads: Some(3) });
    let bytes: usize = first.iter().map(String::len).sum();
    verdict(
        first == second && first == serial && first == capped,
        format!(
            "fig1 ({bytes} bytes over {} files): repeat {}, serial {}, 3 threads {}",
            first.len(),
            same(&first, &second),
            same(&first, &serial),
            same(&first, &capped)
        ),
    )
}

fn same(a: &[String], b: &[String]) -> &'static str {
    if a == b {
        "identical"
    } else {
        "DIFFERENT"
    }
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("bulk value", bulk_value),
        ("surface limit", surface_limit),
        ("quasistatic validity", quasistatic_validity),
        ("divergence removal", divergence_removal),
        ("crossover window", crossover_window),
        ("T1 magnitude", t1_magnitude),
        ("thermal scaling", thermal_scaling),
        ("local-limit oracles", local_limit_oracles),
        ("skin depth", skin_depth_value),
        ("fig4 structure", fig4_structure),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} {name}: {}", i + 1, v.detail);
        failed += usize::from(!v.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
