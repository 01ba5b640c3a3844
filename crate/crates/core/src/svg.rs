//! Minimal static SVG line charts: axes, one polyline per series and an
//! optional shaded band (e.g. a confidence interval).

use std::fmt::Write;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 56.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
];

#[derive(Debug, Clone, Default)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
    /// `(x, low, high)` triples drawn as a translucent band.
    pub band: Vec<(f64, f64, f64)>,
}

#[derive(Debug, Clone, Default)]
pub struct LineChart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    /// Plot `log10(x)` positions; x values must be positive.
    pub log_x: bool,
    pub series: Vec<Series>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl LineChart {
    fn bounds(&self) -> ((f64, f64), (f64, f64)) {
        let tx = |x: f64| if self.log_x { x.log10() } else { x };
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for s in &self.series {
            for &(x, y) in &s.points {
                xs.push(tx(x));
                ys.push(y);
            }
            for &(x, lo, hi) in &s.band {
                xs.push(tx(x));
                ys.extend([lo, hi]);
            }
        }
        let span = |v: &[f64]| {
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            match (lo.is_finite(), hi.is_finite()) {
                (true, true) if hi > lo => (lo, hi),
                (true, true) => (lo - 0.5, hi + 0.5),
                _ => (0.0, 1.0),
            }
        };
        (span(&xs), span(&ys))
    }

    pub fn render(&self) -> String {
        let ((x0, x1), (y0, y1)) = self.bounds();
        let px = |x: f64| {
            let x = if self.log_x { x.log10() } else { x };
            MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN)
        };
        let py = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        )
        .unwrap();
        writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="20" text-anchor="middle" font-size="14">{}</text>"#,
            WIDTH / 2.0,
            escape(&self.title)
        )
        .unwrap();
        // axes
        let (left, right, top, bottom) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
        writeln!(
            out,
            r#"<path d="M{left} {top} L{left} {bottom} L{right} {bottom}" stroke="black" fill="none"/>"#
        )
        .unwrap();
        for (value, anchor_y) in [(y0, bottom), (y1, top)] {
            writeln!(
                out,
                r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
                left - 4.0,
                anchor_y + 4.0,
                format_tick(value)
            )
            .unwrap();
        }
        for (value, anchor_x) in [(x0, left), (x1, right)] {
            let shown = if self.log_x { 10f64.powf(value) } else { value };
            writeln!(
                out,
                r#"<text x="{anchor_x}" y="{}" text-anchor="middle">{}</text>"#,
                bottom + 16.0,
                format_tick(shown)
            )
            .unwrap();
        }
        writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            WIDTH / 2.0,
            HEIGHT - 12.0,
            escape(&self.x_label)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{}</text>"#,
            HEIGHT / 2.0,
            HEIGHT / 2.0,
            escape(&self.y_label)
        )
        .unwrap();

        for (i, s) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            if !s.band.is_empty() {
                let upper = s.band.iter().map(|&(x, _, hi)| (px(x), py(hi)));
                let lower = s.band.iter().rev().map(|&(x, lo, _)| (px(x), py(lo)));
                let pts: Vec<String> = upper
                    .chain(lower)
                    .map(|(x, y)| format!("{x:.2},{y:.2}"))
                    .collect();
                writeln!(
                    out,
                    r#"<polygon points="{}" fill="{color}" fill-opacity="0.2" stroke="none"/>"#,
                    pts.join(" ")
                )
                .unwrap();
            }
            let pts: Vec<String> = s
                .points
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            writeln!(
                out,
                r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
                pts.join(" ")
            )
            .unwrap();
            writeln!(
                out,
                r#"<text x="{}" y="{}" fill="{color}">{}</text>"#,
                right - 120.0,
                top + 16.0 * (i as f64 + 1.0),
                escape(&s.name)
            )
            .unwrap();
        }
        out.push_str("</svg>\n");
        out
    }
}

fn format_tick(v: f64) -> String {
    if v != 0.0 && (v.abs() < 1e-3 || v.abs() >= 1e5) {
        format!("{v:.2e}")
    } else {
        format!("{}", (v * 1e4).round() / 1e4)
    }
}
