//! Deterministic CSV: `%.12e`-style floats, a fixed header, LF endings.
//!
//! Emitted text is a fixed point of parse-then-format: thirteen significant
//! digits survive the decimal → binary → decimal round trip unchanged, so
//! re-emitting a parsed file reproduces it byte for byte.

/// Column header shared by figure and sweep output. The second column holds
/// whichever parameter the run varies (α² for most figures and sweeps, δ/γ₀
/// for the detuning figure).
pub const HEADER: &str = "scaled_time,alpha2_or_delta,measure,value";

/// One output record.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub scaled_time: f64,
    pub parameter: f64,
    pub measure: String,
    pub value: f64,
}

/// Format like C's `%.12e`: twelve fractional digits and a signed,
/// two-digit-minimum exponent (`8.242000000000e+00`). Rust's `{:e}` writes
/// bare exponents (`8.242e0`), which breaks column-stable output.
pub fn format_e12(x: f64) -> String {
    debug_assert!(x.is_finite(), "CSV values must be finite");
    let x = if x == 0.0 { 0.0 } else { x }; // collapse -0.0
    let raw = format!("{x:.12e}");
    let (mantissa, exp) = raw.split_once('e').expect("{:e} always writes an exponent");
    let exp: i32 = exp.parse().expect("{:e} exponents are integers");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

/// Render rows under the fixed header, LF-terminated.
pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::with_capacity(HEADER.len() + 1 + rows.len() * 64);
    out.push_str(HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format_e12(row.scaled_time));
        out.push(',');
        out.push_str(&format_e12(row.parameter));
        out.push(',');
        out.push_str(&row.measure);
        out.push(',');
        out.push_str(&format_e12(row.value));
        out.push('\n');
    }
    out
}

/// Parse text produced by [`to_csv`]. Errors carry 1-based line numbers.
pub fn parse_csv(text: &str) -> Result<Vec<Row>, String> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first == HEADER => {}
        Some((_, first)) => return Err(format!("line 1: expected header `{HEADER}`, got `{first}`")),
        None => return Err("empty CSV".into()),
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let n = idx + 1;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(format!("line {n}: expected 4 fields, got {}", fields.len()));
        }
        let num = |field: &str, what: &str| -> Result<f64, String> {
            field
                .parse::<f64>()
                .map_err(|_| format!("line {n}: invalid {what} `{field}`"))
        };
        rows.push(Row {
            scaled_time: num(fields[0], "scaled_time")?,
            parameter: num(fields[1], "alpha2_or_delta")?,
            measure: fields[2].to_string(),
            value: num(fields[3], "value")?,
        });
    }
    Ok(rows)
}
