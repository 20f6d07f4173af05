// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! Decimal rendering and CSV emission.

use std::io::{self, Write};

use qresonance::resonance::ScanEntry;
use qresonance::{Curve64, Metrics64};

pub const SWEEP_HEADER: &str = "x,N,C,F,H_out,b1,b2,b3";
pub const SCAN_HEADER: &str = "a1,a2,a3,cap_enh,fid_enh,noise_peak_x";

/// Shortest decimal that round-trips the value rounded to `precision`
/// significant digits. Magnitudes outside `[1e-6, 1e15)` use exponent form.
pub fn format_float(v: f64, precision: usize) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    let rounded: f64 = format!("{:.*e}", precision.saturating_sub(1), v)
        .parse()
        .expect("valid float literal");
    let mag = rounded.abs();
    if (1e-6..1e15).contains(&mag) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

fn join(values: &[f64], precision: usize) -> String {
    values
        .iter()
        .map(|&v| format_float(v, precision))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn sweep_row(m: &Metrics64, precision: usize) -> String {
    let [b1, b2, b3] = m.output_bloch.components();
    let x = m.x.expect("swept samples carry x");
    join(
        &[x, m.noise, m.coherent_info, m.fidelity, m.output_entropy, b1, b2, b3],
        precision,
    )
}

pub fn write_sweep_csv<W: Write>(out: &mut W, curve: &Curve64, precision: usize) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for m in &curve.samples {
        writeln!(out, "{}", sweep_row(m, precision))?;
    }
    out.flush()
}

pub fn write_scan_csv<W: Write>(out: &mut W, entries: &[ScanEntry<f64>], precision: usize) -> io::Result<()> {
    writeln!(out, "{SCAN_HEADER}")?;
    for e in entries {
        let peak = e.noise_peak_x.map(|x| format_float(x, precision)).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{peak}",
            join(&e.state.components(), precision),
            u8::from(e.capacity_enhanced),
            u8::from(e.fidelity_enhanced)
        )?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fixed_examples() {
        assert_eq!(format_float(0.5, 12), "0.5");
        assert_eq!(format_float(-0.5, 12), "-0.5");
        assert_eq!(format_float(1.5, 12), "1.5");
        assert_eq!(format_float(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_float(2.0 / 3.0, 4), "0.6667");
        assert_eq!(format_float(-0.0, 12), "0");
        assert_eq!(format_float(5.773e-15, 12), "5.773e-15");
        assert_eq!(format_float(0.7, 12), "0.7");
    }

    proptest! {
        #[test]
        fn parses_back_to_the_rounded_value(v in -1e3..1e3f64, p in 1usize..=17) {
            let s = format_float(v, p);
            let parsed: f64 = s.parse().unwrap();
            let rounded: f64 = format!("{:.*e}", p - 1, v).parse().unwrap();
            prop_assert_eq!(parsed, if rounded == 0.0 { 0.0 } else { rounded });
            if p == 17 {
                prop_assert_eq!(parsed, v);
            }
        }
    }
}
