//! Normalised `|A|²` patterns with exact and floating columns.

use std::fmt::Write as _;

use super::line::{amplitude_1d_dp_with_rule, LocalRule1D, Source};
use super::QuantizerError;
use crate::exact_algebra::CyclotomicInt;

#[derive(Debug, Clone, PartialEq)]
pub struct PatternRow {
    pub position: i64,
    pub amplitude: CyclotomicInt,
    /// `A · conj(A)`, exact.
    pub squared: CyclotomicInt,
    /// `|A|²` at the chosen root, normalised over the pattern. Exactly 0.0
    /// whenever the exact value vanishes there.
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Pattern {
    /// Embedding exponent `r`, `w = exp(2πi r / M)`.
    pub root: usize,
    pub rows: Vec<PatternRow>,
}

impl Pattern {
    pub fn from_amplitudes(
        amplitudes: impl IntoIterator<Item = (i64, CyclotomicInt)>,
        root: usize,
    ) -> Result<Self, QuantizerError> {
        let mut rows: Vec<PatternRow> = amplitudes
            .into_iter()
            .map(|(position, amplitude)| {
                let squared = &amplitude * &amplitude.conj();
                let raw = if squared.is_zero_at_root(root) {
                    0.0
                } else {
                    squared.embed(root).re
                };
                PatternRow {
                    position,
                    amplitude,
                    squared,
                    probability: raw,
                }
            })
            .collect();
        let total: f64 = rows.iter().map(|r| r.probability).sum();
        if total == 0.0 {
            return Err(QuantizerError::AllZero);
        }
        for r in &mut rows {
            r.probability /= total;
        }
        Ok(Self { root, rows })
    }

    pub fn probability(&self, position: i64) -> Option<f64> {
        self.rows.iter().find(|r| r.position == position).map(|r| r.probability)
    }

    /// Header `x,|A|^2_exact,probability`; the exact column is the
    /// `M;c0,...` form, quoted.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["x", "|A|^2_exact", "probability"])
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.position.to_string(),
                r.squared.to_machine_string(),
                r.probability.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }

    /// A minimal line chart of the probability column.
    pub fn to_svg(&self, title: &str) -> String {
        const W: f64 = 640.0;
        const H: f64 = 360.0;
        const PAD: f64 = 40.0;
        let xs: Vec<i64> = self.rows.iter().map(|r| r.position).collect();
        let (x0, x1) = (
            *xs.iter().min().unwrap_or(&0) as f64,
            *xs.iter().max().unwrap_or(&0) as f64,
        );
        let pmax = self.rows.iter().map(|r| r.probability).fold(0.0, f64::max);
        let sx = |x: i64| PAD + (x as f64 - x0) / (x1 - x0).max(1.0) * (W - 2.0 * PAD);
        let sy = |p: f64| H - PAD - p / if pmax > 0.0 { pmax } else { 1.0 } * (H - 2.0 * PAD);
        let points: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("{:.2},{:.2}", sx(r.position), sy(r.probability)))
            .collect();
        let mut s = String::new();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
        )
        .unwrap();
        writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
        writeln!(
            s,
            r#"<text x="{PAD}" y="24" font-family="sans-serif" font-size="14">{}</text>"#,
            escape(title)
        )
        .unwrap();
        writeln!(
            s,
            r#"<line x1="{PAD}" y1="{y}" x2="{x2}" y2="{y}" stroke="black"/>"#,
            y = H - PAD,
            x2 = W - PAD
        )
        .unwrap();
        writeln!(
            s,
            r#"<line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{y}" stroke="black"/>"#,
            y = H - PAD
        )
        .unwrap();
        for (x, anchor) in [(x0 as i64, "start"), (x1 as i64, "end")] {
            writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="{anchor}">{x}</text>"#,
                sx(x),
                H - PAD + 16.0
            )
            .unwrap();
        }
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="end">{pmax:.4}</text>"#,
            PAD - 4.0,
            PAD + 4.0
        )
        .unwrap();
        writeln!(
            s,
            r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
            points.join(" ")
        )
        .unwrap();
        s.push_str("</svg>\n");
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Free-particle pattern at the primitive root, positions spanning
/// `[min source - t, max source + t]`.
pub fn interference_pattern(sources: &[Source], t: u64, modulus: usize) -> Result<Pattern, QuantizerError> {
    interference_pattern_with(sources, t, &LocalRule1D::free(modulus), 1)
}

pub fn interference_pattern_with(
    sources: &[Source],
    t: u64,
    rule: &LocalRule1D,
    root: usize,
) -> Result<Pattern, QuantizerError> {
    let amps = amplitude_1d_dp_with_rule(sources, t, rule)?;
    let positions: Vec<i64> = amps.positions().collect();
    Pattern::from_amplitudes(positions.into_iter().zip(amps.values), root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_sources(phase: usize) -> Pattern {
        interference_pattern(&[Source::new(-4, 0), Source::new(4, phase)], 20, 4).unwrap()
    }

    #[test]
    fn opposite_phases_cancel_at_the_centre() {
        let p = two_sources(2);
        assert_eq!(p.probability(0), Some(0.0));
        let row = p.rows.iter().find(|r| r.position == 0).unwrap();
        assert!(row.amplitude.is_zero_at_primitive_root());
        assert_eq!(p.rows.first().unwrap().position, -24);
        assert_eq!(p.rows.last().unwrap().position, 24);
        let sum: f64 = p.rows.iter().map(|r| r.probability).sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equal_phases_are_mirror_symmetric_with_central_peak() {
        let p = two_sources(0);
        for x in 0..=24 {
            assert_eq!(p.probability(x), p.probability(-x));
        }
        let centre = p.probability(0).unwrap();
        assert!(p
            .rows
            .iter()
            .filter(|r| r.position != 0)
            .all(|r| r.probability < centre));
    }

    #[test]
    fn all_zero_is_reported() {
        // phases 1 and w = -1 on the same site cancel everywhere
        let srcs = [Source::new(0, 0), Source::new(0, 1)];
        let err = interference_pattern(&srcs, 3, 2).unwrap_err();
        assert_eq!(err, QuantizerError::AllZero);
    }

    #[test]
    fn csv_and_svg_shapes() {
        let p = interference_pattern(&[Source::new(0, 0)], 1, 4).unwrap();
        let csv = p.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("x,|A|^2_exact,probability"));
        assert_eq!(lines.next(), Some("-1,\"4;1,0,0,0\",0.3333333333333333"));
        assert_eq!(csv.lines().count(), 4);
        let svg = p.to_svg("a < b");
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("a &lt; b"));
        assert_eq!(svg.matches("<polyline").count(), 1);
    }
}
