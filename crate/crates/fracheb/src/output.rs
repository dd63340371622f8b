//! Deterministic CSV and SVG emission. CSV cells render floats with 17
//! significant digits so identical runs produce identical bytes; SVG
//! plots are plain polylines with axes and a legend, no external
//! renderer involved.

use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

/// 17-significant-digit decimal rendering used in every CSV cell.
pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.16e}")
    }
}

/// Write a CSV file with a header row, comma separators and LF endings.
/// Fields containing separators or quotes are quoted.
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let quote = |cell: &str| -> String {
        if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
            format!("\"{}\"", cell.replace('"', "\"\""))
        } else {
            cell.to_string()
        }
    };
    let mut out = String::new();
    out.push_str(&header.iter().map(|h| quote(h)).collect::<Vec<_>>().join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(|c| quote(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    std::fs::write(path, out)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

/// One named curve of an SVG plot.
pub struct Curve {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

const PALETTE: [&str; 7] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"];

const W: f64 = 720.0;
const H: f64 = 480.0;
const ML: f64 = 72.0;
const MR: f64 = 24.0;
const MT: f64 = 40.0;
const MB: f64 = 56.0;

/// Render polyline curves into an SVG document. `y_clip`, when given,
/// fixes the vertical window (points outside break the line).
pub fn render_svg(
    title: &str,
    x_label: &str,
    y_label: &str,
    curves: &[Curve],
    y_clip: Option<(f64, f64)>,
) -> String {
    let finite = |v: f64| v.is_finite();
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for c in curves {
        for &(x, y) in &c.points {
            if finite(x) {
                x_min = x_min.min(x);
                x_max = x_max.max(x);
            }
            if finite(y) {
                if let Some((lo, hi)) = y_clip {
                    if y < lo || y > hi {
                        continue;
                    }
                }
                y_min = y_min.min(y);
                y_max = y_max.max(y);
            }
        }
    }
    if let Some((lo, hi)) = y_clip {
        y_min = lo;
        y_max = hi;
    }
    if !(x_min < x_max) {
        x_max = x_min + 1.0;
    }
    if !(y_min < y_max) {
        y_max = y_min + 1.0;
    }
    let pad = 0.04 * (y_max - y_min);
    let (y_lo, y_hi) = if y_clip.is_some() { (y_min, y_max) } else { (y_min - pad, y_max + pad) };

    let px = |x: f64| ML + (x - x_min) / (x_max - x_min) * (W - ML - MR);
    let py = |y: f64| H - MB - (y - y_lo) / (y_hi - y_lo) * (H - MT - MB);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
        0.5 * W,
        title
    );

    // axes
    let _ = writeln!(
        s,
        r#"<line x1="{ML}" y1="{MT}" x2="{ML}" y2="{}" stroke="black"/>"#,
        H - MB
    );
    let _ = writeln!(
        s,
        r#"<line x1="{ML}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        H - MB,
        W - MR,
        H - MB
    );
    for i in 0..=5 {
        let f = i as f64 / 5.0;
        let xv = x_min + f * (x_max - x_min);
        let yv = y_lo + f * (y_hi - y_lo);
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="11">{}</text>"#,
            px(xv),
            H - MB + 18.0,
            trim_tick(xv)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end" font-family="sans-serif" font-size="11">{}</text>"#,
            ML - 6.0,
            py(yv) + 4.0,
            trim_tick(yv)
        );
        let _ = writeln!(
            s,
            r##"<line x1="{:.1}" y1="{}" x2="{:.1}" y2="{}" stroke="#cccccc" stroke-width="0.5"/>"##,
            px(xv),
            MT,
            px(xv),
            H - MB
        );
        let _ = writeln!(
            s,
            r##"<line x1="{ML}" y1="{:.1}" x2="{}" y2="{:.1}" stroke="#cccccc" stroke-width="0.5"/>"##,
            py(yv),
            W - MR,
            py(yv)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="13">{}</text>"#,
        0.5 * W,
        H - 12.0,
        x_label
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 18 {})">{}</text>"#,
        0.5 * H,
        0.5 * H,
        y_label
    );

    for (ci, c) in curves.iter().enumerate() {
        let color = PALETTE[ci % PALETTE.len()];
        let mut d = String::new();
        let mut pen_down = false;
        for &(x, y) in &c.points {
            let visible = x.is_finite() && y.is_finite() && y >= y_lo && y <= y_hi;
            if visible {
                let cmd = if pen_down { 'L' } else { 'M' };
                let _ = write!(d, "{}{:.2} {:.2} ", cmd, px(x), py(y));
                pen_down = true;
            } else {
                pen_down = false;
            }
        }
        if !d.is_empty() {
            let _ = writeln!(
                s,
                r#"<path d="{}" fill="none" stroke="{}" stroke-width="1.6"/>"#,
                d.trim_end(),
                color
            );
        }
        // legend entry
        let ly = MT + 16.0 * ci as f64 + 8.0;
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{ly}" x2="{}" y2="{ly}" stroke="{}" stroke-width="2"/>"#,
            W - MR - 150.0,
            W - MR - 122.0,
            color
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">{}</text>"#,
            W - MR - 116.0,
            ly + 4.0,
            c.label
        );
    }
    s.push_str("</svg>\n");
    s
}

fn trim_tick(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let a = v.abs();
    if (1e-3..1e4).contains(&a) {
        let s = format!("{v:.3}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        format!("{v:.2e}")
    }
}

/// Write an SVG plot next to its backing CSV.
pub fn write_svg(path: &Path, svg: &str) -> Result<()> {
    std::fs::write(path, svg)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_rendering_is_17_digits() {
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_f64(f64::NAN), "nan");
    }

    #[test]
    fn svg_is_well_formed_enough() {
        let c = Curve { label: "c".into(), points: vec![(0.0, 0.0), (1.0, 1.0)] };
        let s = render_svg("t", "x", "y", &[c], None);
        assert!(s.starts_with("<svg"));
        assert!(s.ends_with("</svg>\n"));
        assert!(s.contains("<path"));
    }
}
