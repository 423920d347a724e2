//! CSV and JSON renderings of line lists.

use std::io::{self, Write};

use serde::Serialize;

use crate::spectrum_engine::SpectralLine;

pub const CSV_HEADER: &str =
    "band,freq_cm1,intensity,J_lo,K_lo,species_lo,J_up,K_up,species_up,sp_forbidden,ss_forbidden";

/// C-style `%.{precision}g` formatting.
pub fn format_g(x: f64, precision: usize) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let p = precision.max(1);
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

pub fn csv_row(line: &SpectralLine) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        line.band,
        format_g(line.frequency, 10),
        format_g(line.relative_intensity, 10),
        line.lower.j,
        line.lower.k.unsigned_abs(),
        line.lower.species.label(),
        line.upper.j,
        line.upper.k.unsigned_abs(),
        line.upper.species.label(),
        flag(line.sp_forbidden),
        flag(line.ss_forbidden),
    )
}

pub fn write_csv<W: Write>(out: &mut W, lines: &[SpectralLine]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for line in lines {
        writeln!(out, "{}", csv_row(line))?;
    }
    Ok(())
}

pub fn to_csv_string(lines: &[SpectralLine]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, lines).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

/// One line-list row with the CSV column names.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LineRecord {
    pub band: String,
    pub freq_cm1: f64,
    pub intensity: f64,
    #[serde(rename = "J_lo")]
    pub j_lo: u32,
    #[serde(rename = "K_lo")]
    pub k_lo: u32,
    pub species_lo: &'static str,
    #[serde(rename = "J_up")]
    pub j_up: u32,
    #[serde(rename = "K_up")]
    pub k_up: u32,
    pub species_up: &'static str,
    pub sp_forbidden: bool,
    pub ss_forbidden: bool,
}

impl From<&SpectralLine> for LineRecord {
    fn from(line: &SpectralLine) -> Self {
        // same rounding as the CSV so both formats carry identical numbers
        let round = |x: f64| format_g(x, 10).parse::<f64>().expect("formatted float parses");
        LineRecord {
            band: line.band.clone(),
            freq_cm1: round(line.frequency),
            intensity: round(line.relative_intensity),
            j_lo: line.lower.j,
            k_lo: line.lower.k.unsigned_abs(),
            species_lo: line.lower.species.label(),
            j_up: line.upper.j,
            k_up: line.upper.k.unsigned_abs(),
            species_up: line.upper.species.label(),
            sp_forbidden: line.sp_forbidden,
            ss_forbidden: line.ss_forbidden,
        }
    }
}

pub fn to_json(lines: &[SpectralLine]) -> String {
    let records: Vec<LineRecord> = lines.iter().map(LineRecord::from).collect();
    serde_json::to_string_pretty(&records).expect("records serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_g_matches_printf() {
        let cases = [
            (0.0, "0"),
            (1.0, "1"),
            (1065.0, "1065"),
            (1064.3, "1064.3"),
            (0.1, "0.1"),
            (1.0 / 3.0, "0.3333333333"),
            (2.0 / 3.0, "0.6666666667"),
            (1e-5, "1e-05"),
            (1.234e-7, "1.234e-07"),
            (0.0001, "0.0001"),
            (12345678901.0, "1.23456789e+10"),
            (1234567890.0, "1234567890"),
            (-2.5, "-2.5"),
            (9.99999999999, "10"),
        ];
        for (x, want) in cases {
            assert_eq!(format_g(x, 10), want, "{x}");
        }
    }
}
