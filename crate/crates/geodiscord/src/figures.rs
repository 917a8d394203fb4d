//! Built-in figure presets: frozen parameter sets that regenerate the
//! reference plots as CSV tables plus SVG charts.
//!
//! Eight presets are available. Figures 1–3 sweep the initial superposition
//! weight α² over {0.1, 0.3, 0.5, 0.7, 0.9}; figure 4 zooms into small α²
//! for the common reservoir; figure 5 sweeps the detuning δ/γ₀ at α² = 0.5.

use crate::csvfmt::Row;
use crate::parallel;
use crate::svg::Series;
use geodiscord_core::dynamics::SERIES_GRID;
use geodiscord_core::{discord_trace_with_grid, Error, InitialPhi, Measure, ReservoirParams, Topology};

/// Identifier of a built-in figure preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig1a,
    Fig1b,
    Fig2a,
    Fig2b,
    Fig3a,
    Fig3b,
    Fig4,
    Fig5,
}

impl FigureId {
    pub const ALL: [FigureId; 8] = [
        FigureId::Fig1a,
        FigureId::Fig1b,
        FigureId::Fig2a,
        FigureId::Fig2b,
        FigureId::Fig3a,
        FigureId::Fig3b,
        FigureId::Fig4,
        FigureId::Fig5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig1a => "fig1a",
            FigureId::Fig1b => "fig1b",
            FigureId::Fig2a => "fig2a",
            FigureId::Fig2b => "fig2b",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
        }
    }
}

impl core::str::FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown figure `{s}`; expected one of fig1a, fig1b, fig2a, fig2b, fig3a, fig3b, fig4, fig5"
                )
            })
    }
}

impl core::fmt::Display for FigureId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// What the swept parameter column means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Alpha2,
    DetuningOverGamma0,
}

impl ParamKind {
    pub fn legend_symbol(self) -> &'static str {
        match self {
            ParamKind::Alpha2 => "α²",
            ParamKind::DetuningOverGamma0 => "δ/γ₀",
        }
    }
}

/// A frozen figure configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct FigurePreset {
    pub topology: Topology,
    pub lambda_over_gamma0: f64,
    pub kind: ParamKind,
    /// Values of the swept parameter (α² or δ/γ₀), one curve each.
    pub params: Vec<f64>,
    /// α² when the swept parameter is the detuning.
    pub alpha2_fixed: f64,
    pub measures: Vec<Measure>,
    pub time_grid: Vec<f64>,
}

/// `n` equally spaced times on `[0, t_max]`.
pub fn linear_grid(t_max: f64, n: usize) -> Vec<f64> {
    let step = t_max / (n - 1) as f64;
    (0..n).map(|i| i as f64 * step).collect()
}

/// The long-horizon grid: 500 linear points on [0, 1], then 4500
/// logarithmically spaced points on (1, 1000], resolving both the early
/// oscillations and the approach to the steady state.
pub fn long_horizon_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (0..500).map(|i| i as f64 / 499.0).collect();
    grid.extend((1..=4500).map(|k| 10f64.powf(3.0 * k as f64 / 4500.0)));
    grid
}

const ALPHA2_PRESETS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

impl FigureId {
    pub fn preset(self) -> FigurePreset {
        let alpha_sweep = ALPHA2_PRESETS.to_vec();
        match self {
            FigureId::Fig1a => FigurePreset {
                topology: Topology::Independent,
                lambda_over_gamma0: 10.0,
                kind: ParamKind::Alpha2,
                params: alpha_sweep,
                alpha2_fixed: 0.5,
                measures: vec![Measure::Trace],
                time_grid: linear_grid(10.0, 3001),
            },
            FigureId::Fig1b => FigurePreset {
                topology: Topology::Independent,
                lambda_over_gamma0: 0.1,
                kind: ParamKind::Alpha2,
                params: alpha_sweep,
                alpha2_fixed: 0.5,
                measures: vec![Measure::Trace],
                time_grid: linear_grid(30.0, 3001),
            },
            FigureId::Fig2a => FigurePreset {
                topology: Topology::Common,
                lambda_over_gamma0: 10.0,
                kind: ParamKind::Alpha2,
                params: alpha_sweep,
                alpha2_fixed: 0.5,
                measures: vec![Measure::Trace],
                time_grid: linear_grid(10.0, 3001),
            },
            FigureId::Fig2b => FigurePreset {
                topology: Topology::Common,
                lambda_over_gamma0: 0.1,
                kind: ParamKind::Alpha2,
                params: alpha_sweep,
                alpha2_fixed: 0.5,
                measures: vec![Measure::Trace],
                time_grid: linear_grid(50.0, 3001),
            },
            FigureId::Fig3a => FigurePreset {
                topology: Topology::Independent,
                lambda_over_gamma0: 0.1,
                kind: ParamKind::Alpha2,
                params: alpha_sweep,
                alpha2_fixed: 0.5,
                measures: vec![Measure::Bures],
                time_grid: linear_grid(30.0, 1501),
            },
            FigureId::Fig3b => FigurePreset {
                topology: Topology::Common,
                lambda_over_gamma0: 0.1,
                kind: ParamKind::Alpha2,
                params: alpha_sweep,
                alpha2_fixed: 0.5,
                measures: vec![Measure::Bures],
                time_grid: linear_grid(50.0, 1501),
            },
            FigureId::Fig4 => FigurePreset {
                topology: Topology::Common,
                lambda_over_gamma0: 0.1,
                kind: ParamKind::Alpha2,
                params: vec![0.0, 0.01, 0.02, 0.05],
                alpha2_fixed: 0.5,
                measures: vec![Measure::Trace, Measure::Bures],
                time_grid: long_horizon_grid(),
            },
            FigureId::Fig5 => FigurePreset {
                topology: Topology::Independent,
                lambda_over_gamma0: 0.1,
                kind: ParamKind::DetuningOverGamma0,
                params: vec![0.0, 0.5, 1.0, 2.0, 4.0],
                alpha2_fixed: 0.5,
                measures: vec![Measure::Trace, Measure::Bures],
                time_grid: linear_grid(30.0, 1501),
            },
        }
    }
}

pub fn measure_name(m: Measure) -> &'static str {
    match m {
        Measure::Trace => "trace",
        Measure::Bures => "bures",
    }
}

/// The y-axis label appropriate to the measures present.
pub fn y_axis_label(measures: &[Measure]) -> &'static str {
    let trace = measures.contains(&Measure::Trace);
    let bures = measures.contains(&Measure::Bures);
    match (trace, bures) {
        (true, false) => "trace-distance discord D_T",
        (false, true) => "Bures-distance discord D_B",
        _ => "geometric discord",
    }
}

/// Evaluate a preset into CSV rows ordered by (parameter, measure, time),
/// with trace before Bures. Curves are computed concurrently; assembly is
/// an ordered merge, so output is independent of the thread count.
pub fn compute_rows(preset: &FigurePreset) -> Result<Vec<Row>, Error> {
    let mut jobs: Vec<(f64, Measure)> = Vec::new();
    for &param in &preset.params {
        for &measure in &preset.measures {
            jobs.push((param, measure));
        }
    }
    let results = parallel::map_ordered(&jobs, parallel::thread_cap(), |_, &(param, measure)| {
        let (alpha2, delta) = match preset.kind {
            ParamKind::Alpha2 => (param, 0.0),
            ParamKind::DetuningOverGamma0 => (preset.alpha2_fixed, param),
        };
        let init = InitialPhi::new(alpha2, 0.0)?;
        let reservoir =
            ReservoirParams::scaled(preset.lambda_over_gamma0, delta, preset.topology)?;
        discord_trace_with_grid(&init, &reservoir, &preset.time_grid, measure, &SERIES_GRID)
    });
    let mut rows = Vec::with_capacity(jobs.len() * preset.time_grid.len());
    for ((param, measure), result) in jobs.into_iter().zip(results) {
        let series = result?;
        for (&t, &v) in series.scaled_times.iter().zip(&series.values) {
            rows.push(Row {
                scaled_time: t,
                parameter: param,
                measure: measure_name(measure).to_string(),
                value: v,
            });
        }
    }
    Ok(rows)
}

/// Group rows into chart series, one polyline per (parameter, measure) run.
/// Rows are consumed in order, so this is exact on both freshly computed
/// and round-tripped CSV data.
pub fn chart_series(kind: ParamKind, rows: &[Row]) -> Vec<Series> {
    let multi_measure = rows
        .first()
        .map(|r| rows.iter().any(|q| q.measure != r.measure))
        .unwrap_or(false);
    let mut series: Vec<Series> = Vec::new();
    let mut current: Option<(f64, String)> = None;
    for row in rows {
        let key = (row.parameter, row.measure.clone());
        if current.as_ref() != Some(&key) {
            let mut label = format!("{} = {}", kind.legend_symbol(), row.parameter);
            if multi_measure {
                let short = if row.measure == "trace" { "D_T" } else { "D_B" };
                label.push_str(", ");
                label.push_str(short);
            }
            series.push(Series {
                label,
                points: Vec::new(),
            });
            current = Some(key);
        }
        series
            .last_mut()
            .expect("series started before first point")
            .points
            .push((row.scaled_time, row.value));
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_table_is_frozen() {
        use FigureId::*;
        let expect = [
            (Fig1a, Topology::Independent, 10.0, 1, 3001, 10.0),
            (Fig1b, Topology::Independent, 0.1, 1, 3001, 30.0),
            (Fig2a, Topology::Common, 10.0, 1, 3001, 10.0),
            (Fig2b, Topology::Common, 0.1, 1, 3001, 50.0),
            (Fig3a, Topology::Independent, 0.1, 1, 1501, 30.0),
            (Fig3b, Topology::Common, 0.1, 1, 1501, 50.0),
            (Fig4, Topology::Common, 0.1, 2, 5000, 1000.0),
            (Fig5, Topology::Independent, 0.1, 2, 1501, 30.0),
        ];
        for (id, topology, lambda, n_measures, n_times, t_end) in expect {
            let p = id.preset();
            assert_eq!(p.topology, topology, "{id}");
            assert_eq!(p.lambda_over_gamma0, lambda, "{id}");
            assert_eq!(p.measures.len(), n_measures, "{id}");
            assert_eq!(p.time_grid.len(), n_times, "{id}");
            let last = *p.time_grid.last().unwrap();
            assert!((last - t_end).abs() < 1e-9, "{id}: grid ends at {last}");
            assert_eq!(p.time_grid[0], 0.0, "{id}");
        }
        assert_eq!(Fig1a.preset().params, vec![0.1, 0.3, 0.5, 0.7, 0.9]);
        assert_eq!(Fig4.preset().params, vec![0.0, 0.01, 0.02, 0.05]);
        assert_eq!(Fig5.preset().params, vec![0.0, 0.5, 1.0, 2.0, 4.0]);
        assert_eq!(Fig5.preset().kind, ParamKind::DetuningOverGamma0);
        assert_eq!(Fig5.preset().alpha2_fixed, 0.5);
        assert_eq!(
            Fig4.preset().measures,
            vec![Measure::Trace, Measure::Bures]
        );
    }

    #[test]
    fn figure_names_round_trip() {
        for id in FigureId::ALL {
            assert_eq!(id.name().parse::<FigureId>().unwrap(), id);
        }
        assert!("fig9".parse::<FigureId>().is_err());
    }

    #[test]
    fn long_horizon_grid_is_monotone_and_spans_three_decades() {
        let grid = long_horizon_grid();
        assert_eq!(grid.len(), 5000);
        assert_eq!(grid[0], 0.0);
        assert!((grid[499] - 1.0).abs() < 1e-12);
        assert!((grid[4999] - 1000.0).abs() < 1e-9);
        assert!(grid.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn rows_group_into_one_series_per_parameter_and_measure() {
        let mut rows = Vec::new();
        for &p in &[0.1, 0.9] {
            for m in ["trace", "bures"] {
                for i in 0..3 {
                    rows.push(Row {
                        scaled_time: i as f64,
                        parameter: p,
                        measure: m.to_string(),
                        value: 0.5,
                    });
                }
            }
        }
        let series = chart_series(ParamKind::Alpha2, &rows);
        assert_eq!(series.len(), 4);
        assert_eq!(series[0].label, "α² = 0.1, D_T");
        assert_eq!(series[3].label, "α² = 0.9, D_B");
        assert!(series.iter().all(|s| s.points.len() == 3));
    }

    #[test]
    fn small_figure_slice_computes() {
        let mut preset = FigureId::Fig1b.preset();
        preset.params = vec![0.5];
        preset.time_grid = vec![0.0, 8.242034];
        let rows = compute_rows(&preset).unwrap();
        assert_eq!(rows.len(), 2);
        assert!((rows[0].value - 1.0).abs() < 1e-9, "initial Bell-like discord");
        assert!(rows[1].value < 1e-6, "vanishes at the first critical time");
    }
}
