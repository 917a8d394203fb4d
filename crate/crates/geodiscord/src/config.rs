//! Flat `key = value` sweep configuration files.
//!
//! `#` starts a comment (whole-line or trailing); blank lines are ignored.
//! Example:
//!
//! ```text
//! # lossy cavities, strong coupling
//! topology = independent
//! lambda_over_gamma0 = 0.1
//! alpha2_list = 0.1, 0.5, 0.9
//! t_max = 30.0
//! n_points = 301
//! measures = trace, bures
//! ```

use geodiscord_core::{Measure, Topology};

/// A fully validated sweep request.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub topology: Topology,
    pub lambda_over_gamma0: f64,
    pub delta_over_gamma0: f64,
    pub alpha2_list: Vec<f64>,
    pub t_max: f64,
    pub n_points: usize,
    pub measures: Vec<Measure>,
    pub seed: Option<u64>,
    pub output_dir: String,
}

impl ExperimentConfig {
    /// The evaluation grid: `n_points` equally spaced times on `[0, t_max]`,
    /// or just `{0}` when a single point is requested.
    pub fn time_grid(&self) -> Vec<f64> {
        if self.n_points == 1 {
            return vec![0.0];
        }
        let step = self.t_max / (self.n_points - 1) as f64;
        (0..self.n_points).map(|i| i as f64 * step).collect()
    }
}

fn err(line: usize, message: impl Into<String>) -> String {
    format!("line {line}: {}", message.into())
}

fn parse_f64(line: usize, key: &str, value: &str) -> Result<f64, String> {
    value
        .parse()
        .map_err(|_| err(line, format!("{key} must be a number, got `{value}`")))
}

/// Parse and validate a configuration file.
pub fn parse_config(text: &str) -> Result<ExperimentConfig, String> {
    let mut topology = None;
    let mut lambda = None;
    let mut delta = None;
    let mut alpha2_list: Option<(usize, Vec<f64>)> = None;
    let mut t_max = None;
    let mut n_points = None;
    let mut measures: Option<Vec<Measure>> = None;
    let mut seed = None;
    let mut output_dir = None;

    for (idx, raw) in text.lines().enumerate() {
        let n = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(n, format!("expected `key = value`, got `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if value.is_empty() {
            return Err(err(n, format!("{key} has no value")));
        }

        macro_rules! set_once {
            ($slot:ident, $val:expr) => {{
                if $slot.is_some() {
                    return Err(err(n, format!("duplicate key `{key}`")));
                }
                $slot = Some($val);
            }};
        }

        match key {
            "topology" => set_once!(
                topology,
                match value {
                    "independent" => Topology::Independent,
                    "common" => Topology::Common,
                    _ => {
                        return Err(err(
                            n,
                            format!("topology must be `independent` or `common`, got `{value}`"),
                        ))
                    }
                }
            ),
            "lambda_over_gamma0" => set_once!(lambda, parse_f64(n, key, value)?),
            "delta_over_gamma0" => set_once!(delta, parse_f64(n, key, value)?),
            "alpha2_list" => {
                let mut list = Vec::new();
                for part in value.split(',') {
                    let part = part.trim();
                    if part.is_empty() {
                        continue;
                    }
                    list.push(parse_f64(n, key, part)?);
                }
                set_once!(alpha2_list, (n, list));
            }
            "t_max" => set_once!(t_max, parse_f64(n, key, value)?),
            "n_points" => set_once!(
                n_points,
                value
                    .parse::<usize>()
                    .map_err(|_| err(n, format!("n_points must be a positive integer, got `{value}`")))?
            ),
            "measures" => {
                let mut list = Vec::new();
                for part in value.split(',') {
                    match part.trim() {
                        "" => continue,
                        "trace" => list.push(Measure::Trace),
                        "bures" => list.push(Measure::Bures),
                        other => {
                            return Err(err(
                                n,
                                format!("measures entries must be `trace` or `bures`, got `{other}`"),
                            ))
                        }
                    }
                }
                set_once!(measures, list);
            }
            "seed" => set_once!(
                seed,
                value
                    .parse::<u64>()
                    .map_err(|_| err(n, format!("seed must be a non-negative integer, got `{value}`")))?
            ),
            "output_dir" => set_once!(output_dir, value.to_string()),
            _ => return Err(err(n, format!("unknown key `{key}`"))),
        }
    }

    let missing = |key: &str| format!("missing required key `{key}`");
    let topology = topology.ok_or_else(|| missing("topology"))?;
    let lambda_over_gamma0 = lambda.ok_or_else(|| missing("lambda_over_gamma0"))?;
    let (alpha_line, alpha2_list) = alpha2_list.ok_or_else(|| missing("alpha2_list"))?;
    let t_max = t_max.ok_or_else(|| missing("t_max"))?;
    let n_points = n_points.ok_or_else(|| missing("n_points"))?;
    let measures = measures.ok_or_else(|| missing("measures"))?;

    if lambda_over_gamma0 <= 0.0 {
        return Err(format!(
            "lambda_over_gamma0 must be positive, got {lambda_over_gamma0}"
        ));
    }
    let delta_over_gamma0 = delta.unwrap_or(0.0);
    if delta_over_gamma0 < 0.0 {
        return Err(format!(
            "delta_over_gamma0 must be non-negative, got {delta_over_gamma0}"
        ));
    }
    if alpha2_list.is_empty() {
        return Err("alpha2_list must be non-empty".into());
    }
    for &a in &alpha2_list {
        if !(0.0..=1.0).contains(&a) || !a.is_finite() {
            return Err(err(alpha_line, format!("alpha2 values must lie in [0, 1], got {a}")));
        }
    }
    if !(t_max > 0.0) {
        return Err(format!("t_max must be positive, got {t_max}"));
    }
    if n_points < 1 {
        return Err("n_points must be at least 1".into());
    }
    if measures.is_empty() {
        return Err("measures must be non-empty".into());
    }

    Ok(ExperimentConfig {
        topology,
        lambda_over_gamma0,
        delta_over_gamma0,
        alpha2_list,
        t_max,
        n_points,
        measures,
        seed,
        output_dir: output_dir.unwrap_or_else(|| ".".into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = "\
# a comment
topology = independent
lambda_over_gamma0 = 0.1
alpha2_list = 0.1, 0.5, 0.9
t_max = 30.0
n_points = 301
measures = trace, bures # trailing comment
";

    #[test]
    fn parses_a_complete_file() {
        let cfg = parse_config(GOOD).unwrap();
        assert_eq!(cfg.topology, Topology::Independent);
        assert_eq!(cfg.lambda_over_gamma0, 0.1);
        assert_eq!(cfg.delta_over_gamma0, 0.0);
        assert_eq!(cfg.alpha2_list, vec![0.1, 0.5, 0.9]);
        assert_eq!(cfg.n_points, 301);
        assert_eq!(cfg.measures, vec![Measure::Trace, Measure::Bures]);
        assert_eq!(cfg.seed, None);
        assert_eq!(cfg.output_dir, ".");
        let grid = cfg.time_grid();
        assert_eq!(grid.len(), 301);
        assert_eq!(grid[0], 0.0);
        assert!((grid[300] - 30.0).abs() < 1e-12);
    }

    #[test]
    fn single_point_grid_is_time_zero() {
        let text = GOOD.replace("n_points = 301", "n_points = 1");
        assert_eq!(parse_config(&text).unwrap().time_grid(), vec![0.0]);
    }

    #[test]
    fn rejects_bad_input_with_line_numbers() {
        let cases = [
            ("topology = sideways", "line 2"),
            ("alpha2_list = 0.1, 1.5, 0.9", "line 4"),
            ("n_points = 301\nn_points = 5", "duplicate key `n_points`"),
            ("t_max = 30.0", "t_max must be positive"),
        ];
        let rewrites = [
            GOOD.replace("topology = independent", cases[0].0),
            GOOD.replace("alpha2_list = 0.1, 0.5, 0.9", cases[1].0),
            GOOD.replace("n_points = 301", cases[2].0),
            GOOD.replace(cases[3].0, "t_max = -1.0"),
        ];
        for (text, (_, want)) in rewrites.iter().zip(&cases) {
            let msg = parse_config(text).unwrap_err();
            assert!(msg.contains(want), "expected `{want}` in `{msg}`");
        }

        let msg = parse_config(&GOOD.replace("alpha2_list = 0.1, 0.5, 0.9", "alpha2_list = ,"))
            .unwrap_err();
        assert_eq!(msg, "alpha2_list must be non-empty");

        let msg = parse_config(&GOOD.replace("t_max = 30.0", "")).unwrap_err();
        assert!(msg.contains("missing required key `t_max`"), "{msg}");

        let msg = parse_config(&format!("{GOOD}mystery = 1\n")).unwrap_err();
        assert!(msg.contains("unknown key `mystery`"), "{msg}");
    }

    #[test]
    fn optional_keys_are_honored() {
        let text = format!("{GOOD}delta_over_gamma0 = 2.0\nseed = 7\noutput_dir = out\n");
        let cfg = parse_config(&text).unwrap();
        assert_eq!(cfg.delta_over_gamma0, 2.0);
        assert_eq!(cfg.seed, Some(7));
        assert_eq!(cfg.output_dir, "out");
    }
}
