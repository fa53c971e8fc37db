//! Plain-text matrix exchange format.
//!
//! First line: the dimension. Then `dim` lines of `dim` entries, each entry
//! written as `re+imj` (for example `0.5-0.25j`), separated by single
//! spaces. Numbers use `.` as the decimal separator regardless of locale;
//! reals are printed with Rust's shortest round-trip formatting, so
//! `load(dump(m)) == m` bit for bit.

use std::fs;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

fn format_entry(z: Complex64) -> String {
    let (sign, im_abs) = if z.im.is_sign_negative() {
        ('-', -z.im)
    } else {
        ('+', z.im)
    };
    format!("{}{}{}j", z.re, sign, im_abs)
}

fn parse_entry(token: &str) -> Result<Complex64> {
    let bad = |msg: &str| Error::Parse(format!("entry `{token}`: {msg}"));
    let body = token
        .strip_suffix('j')
        .ok_or_else(|| bad("missing trailing `j`"))?;
    let bytes = body.as_bytes();
    // split point: the last '+'/'-' that starts the imaginary part, i.e. not
    // the leading sign and not an exponent sign
    let mut split = None;
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if (b == b'+' || b == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
        }
    }
    let split = split.ok_or_else(|| bad("expected `re+imj` with both parts"))?;
    let re: f64 = body[..split]
        .parse()
        .map_err(|_| bad("real part is not a number"))?;
    let im: f64 = body[split..]
        .parse()
        .map_err(|_| bad("imaginary part is not a number"))?;
    Ok(Complex64::new(re, im))
}

/// Serialize a matrix to the text format.
pub fn matrix_to_text(m: &ComplexMatrix) -> String {
    let dim = m.dim();
    let mut out = String::new();
    out.push_str(&dim.to_string());
    out.push('\n');
    for i in 0..dim {
        let row: Vec<String> = (0..dim).map(|j| format_entry(m.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse a matrix from the text format.
pub fn matrix_from_text(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let dim_line = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let dim: usize = dim_line
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension line `{}`", dim_line.trim())))?;
    if dim == 0 {
        return Err(Error::Parse("dimension must be positive".into()));
    }

    let mut entries = Vec::with_capacity(dim * dim);
    for row in 0..dim {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {} of {}", row + 1, dim)))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != dim {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {}",
                row + 1,
                tokens.len(),
                dim
            )));
        }
        for token in tokens {
            entries.push(parse_entry(token)?);
        }
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!(
            "unexpected content after row {}: `{}`",
            dim,
            extra.trim()
        )));
    }
    Ok(ComplexMatrix::new(dim, entries))
}

/// Write a matrix to a file in the text format.
pub fn write_matrix_file<P: AsRef<Path>>(path: P, m: &ComplexMatrix) -> Result<()> {
    fs::write(path, matrix_to_text(m))?;
    Ok(())
}

/// Read a matrix from a file in the text format.
pub fn read_matrix_file<P: AsRef<Path>>(path: P) -> Result<ComplexMatrix> {
    let text = fs::read_to_string(path)?;
    matrix_from_text(&text)
}
