//! Hand-rolled SVG line charts: a viewBox, axes with ticks, one polyline
//! per series, and a text legend. Verification aids, not publication
//! graphics, so there are no styling options — output is a pure function
//! of the input series.

/// One curve: a legend label and `(x, y)` samples in data coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 72.0;
const RIGHT: f64 = 936.0;
const TOP: f64 = 48.0;
const BOTTOM: f64 = 540.0;
const N_TICKS: usize = 6;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
];

fn fmt2(x: f64) -> String {
    // Canonical pixel coordinate: two decimals, no negative zero.
    let s = format!("{:.2}", x);
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn tick_label(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let a = x.abs();
    if (1e-3..1e5).contains(&a) {
        let s = format!("{:.4}", x);
        let s = s.trim_end_matches('0').trim_end_matches('.');
        s.to_string()
    } else {
        format!("{:e}", x)
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render a line chart. The x range spans the data; the y range is
/// `[0, 1.05 × max]` (discord measures are non-negative), falling back to
/// `[0, 1]` when every value is zero.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_max = 0.0f64;
    for s in series {
        for &(x, y) in &s.points {
            x_min = x_min.min(x);
            x_max = x_max.max(x);
            y_max = y_max.max(y);
        }
    }
    if !x_min.is_finite() || x_max <= x_min {
        x_min = 0.0;
        x_max = 1.0;
    }
    let y_top = if y_max > 0.0 { y_max * 1.05 } else { 1.0 };

    let sx = |x: f64| LEFT + (x - x_min) / (x_max - x_min) * (RIGHT - LEFT);
    let sy = |y: f64| BOTTOM - y / y_top * (BOTTOM - TOP);

    let mut svg = String::with_capacity(16 * 1024);
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         font-family=\"sans-serif\" font-size=\"14\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"18\">{}</text>\n",
        (LEFT + RIGHT) / 2.0,
        escape(title)
    ));

    // Axes.
    svg.push_str(&format!(
        "  <line x1=\"{LEFT}\" y1=\"{BOTTOM}\" x2=\"{RIGHT}\" y2=\"{BOTTOM}\" stroke=\"black\"/>\n\
         \x20 <line x1=\"{LEFT}\" y1=\"{TOP}\" x2=\"{LEFT}\" y2=\"{BOTTOM}\" stroke=\"black\"/>\n"
    ));

    // Ticks and grid lines.
    for i in 0..N_TICKS {
        let f = i as f64 / (N_TICKS - 1) as f64;
        let xv = x_min + f * (x_max - x_min);
        let yv = f * y_top;
        let xp = fmt2(sx(xv));
        let yp = fmt2(sy(yv));
        svg.push_str(&format!(
            "  <line x1=\"{xp}\" y1=\"{BOTTOM}\" x2=\"{xp}\" y2=\"{}\" stroke=\"black\"/>\n",
            BOTTOM + 6.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{xp}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            BOTTOM + 24.0,
            tick_label(xv)
        ));
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{yp}\" x2=\"{LEFT}\" y2=\"{yp}\" stroke=\"black\"/>\n",
            LEFT - 6.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{yp}\" text-anchor=\"end\" dominant-baseline=\"middle\">{}</text>\n",
            LEFT - 10.0,
            tick_label(yv)
        ));
    }

    // Axis labels.
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
        (LEFT + RIGHT) / 2.0,
        HEIGHT - 14.0,
        escape(x_label)
    ));
    svg.push_str(&format!(
        "  <text x=\"20\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {})\">{}</text>\n",
        (TOP + BOTTOM) / 2.0,
        (TOP + BOTTOM) / 2.0,
        escape(y_label)
    ));

    // Data polylines.
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut points = String::with_capacity(s.points.len() * 14);
        for (k, &(x, y)) in s.points.iter().enumerate() {
            if k > 0 {
                points.push(' ');
            }
            points.push_str(&fmt2(sx(x)));
            points.push(',');
            points.push_str(&fmt2(sy(y)));
        }
        svg.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{points}\"/>\n"
        ));
    }

    // Legend, top-right inside the plot area.
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let y = TOP + 16.0 + 20.0 * i as f64;
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"{color}\" stroke-width=\"3\"/>\n",
            RIGHT - 190.0,
            RIGHT - 160.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" dominant-baseline=\"middle\">{}</text>\n",
            RIGHT - 152.0,
            y + 1.0,
            escape(&s.label)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}
