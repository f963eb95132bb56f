//! CSV output: lowercase scientific notation with 9 significant digits,
//! `.` as decimal separator, `\n` line endings.

use std::io::{self, Write};

use ebitgap_core::experiments::SweepRecord;

pub const SWEEP_HEADER: &str = "p,witness_n,negativity,log_negativity_ebits";
pub const FIGURE_HEADER: &str = "p,e_n_ebits,twenty_abs_n,ec_bound_ebits";

/// `x` in lowercase scientific notation with 9 significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.8e}")
}

pub fn write_sweep_csv<W: Write>(out: &mut W, records: &[SweepRecord]) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{}",
            sci(r.p),
            sci(r.witness_n),
            sci(r.negativity),
            sci(r.log_negativity)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scientific_format() {
        assert_eq!(sci(2.6657220009e-4), "2.66572200e-4");
        assert_eq!(sci(0.0), "0.00000000e0");
        assert_eq!(sci(-1.0 / 3.0), "-3.33333333e-1");
        assert_eq!(sci(1.0), "1.00000000e0");
    }

    #[test]
    fn sweep_csv_layout() {
        let rec = SweepRecord {
            p: 0.5,
            witness_n: -0.25,
            negativity: 0.125,
            log_negativity: 0.25,
        };
        let mut buf = Vec::new();
        write_sweep_csv(&mut buf, &[rec]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "p,witness_n,negativity,log_negativity_ebits\n\
             5.00000000e-1,-2.50000000e-1,1.25000000e-1,2.50000000e-1\n"
        );
    }
}
