//! Plain-text density-matrix files.
//!
//! First line: the dimension. Then `dim` lines of `dim` whitespace-separated
//! complex entries written `re+imj` (`0.5+0.0j`, `1.0e-3-2.5e-4j`); both
//! parts accept scientific notation. Example, the maximally mixed qubit pair:
//!
//! ```text
//! 4
//! 0.25+0.0j 0.0+0.0j 0.0+0.0j 0.0+0.0j
//! 0.0+0.0j 0.25+0.0j 0.0+0.0j 0.0+0.0j
//! 0.0+0.0j 0.0+0.0j 0.25+0.0j 0.0+0.0j
//! 0.0+0.0j 0.0+0.0j 0.0+0.0j 0.25+0.0j
//! ```

use geodiscord_core::{ComplexMatrix, DensityMatrix, Error, C64};

/// What went wrong with a state file: the text never parsed, or it parsed
/// into a matrix that is not a valid density matrix.
#[derive(Debug)]
pub enum MatfileError {
    Parse { line: usize, message: String },
    State(Error),
}

impl core::fmt::Display for MatfileError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MatfileError::Parse { line, message } => write!(f, "line {line}: {message}"),
            MatfileError::State(e) => write!(f, "invalid density matrix: {e}"),
        }
    }
}

/// Parse one `re+imj` token. The imaginary part is mandatory; its sign is
/// found by scanning from the right for a `+`/`-` that neither leads the
/// token nor follows an exponent marker.
pub fn parse_complex(token: &str) -> Result<C64, String> {
    let body = token
        .strip_suffix('j')
        .ok_or_else(|| format!("complex entry `{token}` must end in `j`"))?;
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
        .ok_or_else(|| format!("complex entry `{token}` must be formatted re+imj"))?;
    let re: f64 = body[..split]
        .parse()
        .map_err(|_| format!("invalid real part in `{token}`"))?;
    let im: f64 = body[split..]
        .parse()
        .map_err(|_| format!("invalid imaginary part in `{token}`"))?;
    Ok(C64::new(re, im))
}

/// Render a matrix in the file format, `%.12e` parts on both components.
pub fn format_matrix(m: &ComplexMatrix) -> String {
    use crate::csvfmt::format_e12;
    let n = m.rows();
    let mut out = format!("{n}\n");
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            let v = m.get(i, j);
            let im = format_e12(v.im);
            let sign = if im.starts_with('-') { "" } else { "+" };
            out.push_str(&format!("{}{sign}{im}j", format_e12(v.re)));
        }
        out.push('\n');
    }
    out
}

/// Parse the full file into a square complex matrix.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, MatfileError> {
    let parse = |line: usize, message: String| MatfileError::Parse { line, message };
    let mut lines = text.lines().enumerate();
    let (_, first) = lines
        .next()
        .ok_or_else(|| parse(1, "empty file; expected a dimension line".into()))?;
    let dim: usize = first
        .trim()
        .parse()
        .map_err(|_| parse(1, format!("expected the matrix dimension, got `{first}`")))?;
    if dim == 0 {
        return Err(parse(1, "dimension must be positive".into()));
    }
    let mut m = ComplexMatrix::zeros(dim, dim);
    let mut row = 0;
    for (idx, line) in lines {
        let n = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if row == dim {
            return Err(parse(n, format!("unexpected extra line after {dim} matrix rows")));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != dim {
            return Err(parse(n, format!("expected {dim} entries, got {}", tokens.len())));
        }
        for (col, token) in tokens.iter().enumerate() {
            m.set(row, col, parse_complex(token).map_err(|msg| parse(n, msg))?);
        }
        row += 1;
    }
    if row != dim {
        return Err(parse(
            text.lines().count().max(1),
            format!("expected {dim} matrix rows, got {row}"),
        ));
    }
    Ok(m)
}

/// Parse and validate as a density matrix (Hermitian, unit trace, PSD).
pub fn parse_density(text: &str) -> Result<DensityMatrix, MatfileError> {
    let m = parse_matrix(text)?;
    DensityMatrix::new(m).map_err(MatfileError::State)
}
