//! Implementations of the CLI subcommands. Each returns `Ok(())` on
//! success or a [`CliError`] whose variant selects the process exit code.

use std::fs;
use std::path::Path;

use geodiscord_core::dynamics::SERIES_GRID;
use geodiscord_core::{
    classify_state, db_from_fmax, discord_of_state, discord_trace_with_grid, dt_bell_diagonal,
    dt_measurement_oracle, dt_xstate, fmax_2xn, fmax_bell_diagonal, herm_eigvals, steady_common,
    BellDiagonalParams, DensityMatrix, InitialPhi, Measure, MeasurementGrid, ReservoirParams,
    StateClass, Subsystem, XStateParams,
};

use crate::config::ExperimentConfig;
use crate::csvfmt::{self, Row};
use crate::figures::{chart_series, measure_name, y_axis_label, FigureId};
use crate::matfile::{self, MatfileError};
use crate::parallel;
use crate::svg;
use crate::verify;
use crate::CliError;

fn numeric(e: geodiscord_core::Error) -> CliError {
    CliError::Numeric(e.to_string())
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

/// `figure <id> [--out DIR]`: evaluate a preset, write `<id>.csv`, then
/// chart the parsed-back CSV into `<id>.svg` so the plot is exactly what a
/// round trip through the file yields.
pub fn cmd_figure(id: FigureId, out_dir: &Path) -> Result<(), CliError> {
    let preset = id.preset();
    let rows = crate::figures::compute_rows(&preset).map_err(numeric)?;

    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", out_dir.display())))?;
    let csv_path = out_dir.join(format!("{id}.csv"));
    write_file(&csv_path, &csvfmt::to_csv(&rows))?;

    let parsed = csvfmt::parse_csv(
        &fs::read_to_string(&csv_path)
            .map_err(|e| CliError::Usage(format!("cannot re-read {}: {e}", csv_path.display())))?,
    )
    .map_err(|e| CliError::Numeric(format!("emitted CSV failed to parse: {e}")))?;

    let series = chart_series(preset.kind, &parsed);
    let chart = svg::line_chart(
        id.name(),
        "γ₀t",
        y_axis_label(&preset.measures),
        &series,
    );
    let svg_path = out_dir.join(format!("{id}.svg"));
    write_file(&svg_path, &chart)?;

    println!("wrote {}", csv_path.display());
    println!("wrote {}", svg_path.display());
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    Closed,
    Oracle,
}

fn class_name(class: StateClass) -> &'static str {
    match class {
        StateClass::Pure => "pure",
        StateClass::XState => "x-state",
        StateClass::BellDiagonal => "bell-diagonal",
        StateClass::General => "general",
    }
}

/// Closed-form-only evaluation; errors when no closed form covers the state.
fn closed_form_value(rho: &DensityMatrix, measure: Measure) -> Result<f64, CliError> {
    match measure {
        Measure::Trace => {
            if let Ok(bd) = BellDiagonalParams::from_density(rho) {
                return Ok(dt_bell_diagonal(&bd));
            }
            if let Ok(x) = XStateParams::from_density(rho) {
                return Ok(dt_xstate(&x));
            }
            Err(CliError::Usage(
                "no closed form for the trace measure of a general state; use --method auto or --method oracle".into(),
            ))
        }
        Measure::Bures => {
            let fmax = match classify_state(rho) {
                StateClass::Pure => {
                    let reduced = rho.partial_trace((2, 2), Subsystem::A).map_err(numeric)?;
                    herm_eigvals(reduced.matrix()).map_err(numeric)?[0].clamp(0.0, 1.0)
                }
                StateClass::BellDiagonal => {
                    let bd = BellDiagonalParams::from_density(rho).map_err(numeric)?;
                    fmax_bell_diagonal(&bd).map_err(numeric)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "no closed form for the Bures measure of this state; use --method auto or --method oracle".into(),
                    ))
                }
            };
            db_from_fmax(fmax).map_err(numeric)
        }
    }
}

/// `measure <file> --measure trace|bures [--method auto|closed|oracle]`.
pub fn cmd_measure(state_file: &Path, measure: Measure, method: Method) -> Result<(), CliError> {
    let text = fs::read_to_string(state_file)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", state_file.display())))?;
    let rho = matfile::parse_density(&text).map_err(|e| match e {
        MatfileError::Parse { .. } => {
            CliError::Usage(format!("{}: {e}", state_file.display()))
        }
        MatfileError::State(_) => CliError::Numeric(e.to_string()),
    })?;

    let grid = MeasurementGrid::default();
    let value = match method {
        Method::Auto => discord_of_state(&rho, measure, &grid).map_err(numeric)?,
        Method::Closed => closed_form_value(&rho, measure)?,
        Method::Oracle => match measure {
            Measure::Trace => dt_measurement_oracle(&rho, &grid).map_err(numeric)?,
            Measure::Bures => {
                db_from_fmax(fmax_2xn(&rho, 2, &grid).map_err(numeric)?.fmax).map_err(numeric)?
            }
        },
    };

    let label = match measure {
        Measure::Trace => "D_T",
        Measure::Bures => "D_B",
    };
    println!("{label} = {value:.12}");
    println!("route = {}", class_name(classify_state(&rho)));
    println!(
        "method = {}",
        match method {
            Method::Auto => "auto",
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        }
    );
    Ok(())
}

/// Trace-distance discord of an X-form density matrix.
fn dt_of(rho: &DensityMatrix) -> Result<f64, CliError> {
    let x = XStateParams::from_density(rho).map_err(numeric)?;
    Ok(dt_xstate(&x))
}

/// The α² below which the common-reservoir steady state carries more
/// trace-distance discord than the initial superposition, located by
/// bisection to width 1e-6.
pub fn threshold_alpha2() -> Result<f64, CliError> {
    let gap = |alpha2: f64| -> Result<f64, CliError> {
        let init = InitialPhi::new(alpha2, 0.0).map_err(numeric)?;
        let steady = dt_of(&steady_common(&init))?;
        let initial = dt_of(&init.projector())?;
        Ok(steady - initial)
    };
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    if gap(lo)? <= 0.0 || gap(hi)? >= 0.0 {
        return Err(CliError::Numeric(
            "threshold bracket [0, 0.5] does not straddle a sign change".into(),
        ));
    }
    while hi - lo > 1e-6 {
        let mid = 0.5 * (lo + hi);
        if gap(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `threshold`: print the bisected crossover weight.
pub fn cmd_threshold() -> Result<(), CliError> {
    let alpha2_c = threshold_alpha2()?;
    println!("alpha2_c = {alpha2_c:.6}");
    Ok(())
}

/// `verify [--seed N] [--samples N]`: run the property suites and report
/// one line per suite.
pub fn cmd_verify(seed: u64, samples: usize) -> Result<(), CliError> {
    let reports = verify::run_all(seed, samples);
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
    println!(
        "{:<width$}  {:>7}  {:>10}  {:>8}  status",
        "suite", "samples", "worst", "tol"
    );
    let mut failures = Vec::new();
    for r in &reports {
        println!(
            "{:<width$}  {:>7}  {:>10.3e}  {:>8.1e}  {}",
            r.name,
            r.samples,
            r.worst,
            r.tol,
            if r.pass() { "PASS" } else { "FAIL" }
        );
        if !r.pass() {
            failures.push(r.name);
        }
    }
    if failures.is_empty() {
        println!(
            "all {} suites passed (seed {seed}, samples {samples})",
            reports.len()
        );
        Ok(())
    } else {
        Err(CliError::Numeric(format!(
            "{} of {} property suites failed: {}",
            failures.len(),
            reports.len(),
            failures.join(", ")
        )))
    }
}

/// Evaluate a parsed sweep configuration into CSV rows sorted by
/// (alpha2, measure, time) with the trace measure before Bures.
pub fn sweep_rows(cfg: &ExperimentConfig) -> Result<Vec<Row>, CliError> {
    let mut alphas = cfg.alpha2_list.clone();
    alphas.sort_by(|a, b| a.partial_cmp(b).expect("validated finite"));
    let mut measures = cfg.measures.clone();
    measures.sort_by_key(|m| matches!(m, Measure::Bures) as u8);

    let times = cfg.time_grid();
    let mut jobs = Vec::new();
    for &alpha2 in &alphas {
        for &measure in &measures {
            jobs.push((alpha2, measure));
        }
    }
    let results = parallel::map_ordered(&jobs, parallel::thread_cap(), |_, &(alpha2, measure)| {
        let init = InitialPhi::new(alpha2, 0.0)?;
        let reservoir = ReservoirParams::scaled(
            cfg.lambda_over_gamma0,
            cfg.delta_over_gamma0,
            cfg.topology,
        )?;
        discord_trace_with_grid(&init, &reservoir, &times, measure, &SERIES_GRID)
    });

    let mut rows = Vec::with_capacity(jobs.len() * times.len());
    for ((alpha2, measure), result) in jobs.into_iter().zip(results) {
        let series = result.map_err(numeric)?;
        for (&t, &v) in series.scaled_times.iter().zip(&series.values) {
            rows.push(Row {
                scaled_time: t,
                parameter: alpha2,
                measure: measure_name(measure).to_string(),
                value: v,
            });
        }
    }
    Ok(rows)
}

/// `sweep <config>`: run the configured Cartesian product and write
/// `sweep.csv` under the configured output directory.
pub fn cmd_sweep(config_file: &Path) -> Result<(), CliError> {
    let text = fs::read_to_string(config_file)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", config_file.display())))?;
    let cfg = crate::config::parse_config(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", config_file.display())))?;

    let rows = sweep_rows(&cfg)?;
    let out_dir = Path::new(&cfg.output_dir);
    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", out_dir.display())))?;
    let csv_path = out_dir.join("sweep.csv");
    write_file(&csv_path, &csvfmt::to_csv(&rows))?;
    println!("wrote {}", csv_path.display());
    Ok(())
}
