use std::fmt::Write as _;

use crate::error::{domain, Result};

/// A labeled line to draw.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    /// `(τ, value)` pairs with `τ ∈ [0, 100]`.
    pub points: Vec<(f64, f64)>,
    pub dashed: bool,
}

impl Series {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
            dashed: false,
        }
    }

    pub fn dashed(mut self) -> Self {
        self.dashed = true;
        self
    }
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 180.0;
const TOP: f64 = 44.0;
const BOTTOM: f64 = 56.0;
const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Renders series as a standalone SVG 1.1 line chart over `% mastication time`.
///
/// Output depends only on the inputs. Values outside `[0, axis_max_y]` are
/// clipped to the plot area.
pub fn render_svg(series: &[Series], axis_max_y: f64, title: &str) -> Result<String> {
    if series.is_empty() {
        return Err(domain("nothing to plot: no series"));
    }
    if let Some(s) = series.iter().find(|s| s.points.is_empty()) {
        return Err(domain(format!("series `{}` has no points", s.label)));
    }
    if !(axis_max_y > 0.0 && axis_max_y.is_finite()) {
        return Err(domain(format!(
            "axis maximum must be positive, got {axis_max_y}"
        )));
    }
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let x = |tau: f64| LEFT + tau.clamp(0.0, 100.0) / 100.0 * plot_w;
    let y = |v: f64| TOP + plot_h - v.clamp(0.0, axis_max_y) / axis_max_y * plot_h;

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(
        w,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        w,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        LEFT + plot_w / 2.0,
        escape(title)
    );

    // axes, grid and ticks
    let _ = writeln!(w, r##"<g stroke="#000" stroke-width="1" fill="none">"##);
    let _ = writeln!(
        w,
        r#"<path d="M{:.2},{:.2} V{:.2} H{:.2}"/>"#,
        LEFT,
        TOP,
        TOP + plot_h,
        LEFT + plot_w
    );
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, r##"<g stroke="#ddd" stroke-width="0.5">"##);
    for i in 1..=5 {
        let tau = 20.0 * i as f64;
        let _ = writeln!(
            w,
            r#"<line x1="{0:.2}" y1="{1:.2}" x2="{0:.2}" y2="{2:.2}"/>"#,
            x(tau),
            TOP,
            TOP + plot_h
        );
        let v = axis_max_y * i as f64 / 5.0;
        let _ = writeln!(
            w,
            r#"<line x1="{0:.2}" y1="{1:.2}" x2="{2:.2}" y2="{1:.2}"/>"#,
            LEFT,
            y(v),
            LEFT + plot_w
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, r#"<g text-anchor="middle">"#);
    for i in 0..=5 {
        let tau = 20.0 * i as f64;
        let _ = writeln!(
            w,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            x(tau),
            TOP + plot_h + 18.0,
            tau
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, r#"<g text-anchor="end">"#);
    for i in 0..=5 {
        let v = axis_max_y * i as f64 / 5.0;
        let _ = writeln!(
            w,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            LEFT - 6.0,
            y(v) + 4.0,
            trim_number(v)
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">% mastication time</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 14.0
    );

    // data
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let dash = if s.dashed {
            r#" stroke-dasharray="6,4""#
        } else {
            ""
        };
        let coords: Vec<String> = s
            .points
            .iter()
            .map(|&(t, v)| format!("{:.2},{:.2}", x(t), y(v)))
            .collect();
        let _ = writeln!(
            w,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{}"/>"#,
            coords.join(" ")
        );
    }

    // legend
    let _ = writeln!(w, r#"<g class="legend">"#);
    let lx = LEFT + plot_w + 16.0;
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let dash = if s.dashed {
            r#" stroke-dasharray="6,4""#
        } else {
            ""
        };
        let ly = TOP + 8.0 + 18.0 * i as f64;
        let _ = writeln!(
            w,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"{dash}/>"#,
            lx + 22.0
        );
        let _ = writeln!(
            w,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 28.0,
            ly + 4.0,
            escape(&s.label)
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, "</svg>");
    Ok(out)
}

fn trim_number(v: f64) -> String {
    let s = format!("{v:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_owned()
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}
