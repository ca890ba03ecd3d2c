//! SVG 1.1 drawings of embedded graphs.
//!
//! One drawing unit is one matchstick. The y axis is flipped so the picture
//! has the usual mathematical orientation.

use std::fmt::Write;

use crate::planegraph::EmbeddedGraph;

pub const STROKE_WIDTH: f64 = 0.05;
pub const PADDING: f64 = 0.6;
pub const PENNY_RADIUS: f64 = 0.5;

/// Fixed four-decimal formatting with trailing zeros removed.
fn num(x: f64) -> String {
    let s = format!("{:.4}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" | "" => "0".to_string(),
        _ => s.to_string(),
    }
}

pub fn render_svg(g: &EmbeddedGraph, pennies: bool) -> String {
    let pts: Vec<(f64, f64)> = g.vertices().iter().map(|p| (p.x, -p.y)).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
    }
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let (vx, vy) = (x0 - PADDING, y0 - PADDING);
    let (w, h) = (x1 - x0 + 2.0 * PADDING, y1 - y0 + 2.0 * PADDING);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(vx),
        num(vy),
        num(w),
        num(h),
        num(w * 100.0),
        num(h * 100.0)
    )
    .unwrap();
    if pennies {
        writeln!(out, "  <g fill=\"none\" stroke=\"#888888\" stroke-width=\"{}\">", num(STROKE_WIDTH / 2.0)).unwrap();
        for &(x, y) in &pts {
            writeln!(out, "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", num(x), num(y), num(PENNY_RADIUS)).unwrap();
        }
        out.push_str("  </g>\n");
    }
    writeln!(out, "  <g stroke=\"#000000\" stroke-width=\"{}\" stroke-linecap=\"round\">", num(STROKE_WIDTH)).unwrap();
    for &(i, j) in g.edges() {
        let ((xa, ya), (xb, yb)) = (pts[i], pts[j]);
        writeln!(out, "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", num(xa), num(ya), num(xb), num(yb)).unwrap();
    }
    out.push_str("  </g>\n");
    writeln!(out, "  <g fill=\"#000000\">").unwrap();
    for &(x, y) in &pts {
        writeln!(out, "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", num(x), num(y), num(STROKE_WIDTH)).unwrap();
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
