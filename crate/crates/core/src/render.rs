//! SVG and TikZ pictures of colored arc diagrams.
//!
//! Points sit on a unit-spaced baseline at `x = 1 .. n+1`. An arc leaves
//! its left endpoint, passes each interior point at a vertical offset of
//! `0.4` on its side, and ends at its right endpoint; consecutive waypoints
//! are joined by cubic curves with horizontal tangents.

use std::fmt::Write;

use crate::arc::{Arc, Color, ColoredArc, Side};

pub const OFFSET: f64 = 0.4;
const SCALE: f64 = 40.0;
const MARGIN: f64 = 0.6;

/// Waypoints in diagram units, `y` positive above the baseline.
fn waypoints(arc: &Arc) -> Vec<(f64, f64)> {
    let mut pts = vec![(arc.left() as f64, 0.0)];
    for m in arc.interior() {
        let y = match arc.side(m).expect("interior point") {
            Side::Above => OFFSET,
            Side::Below => -OFFSET,
        };
        pts.push((m as f64, y));
    }
    pts.push((arc.right() as f64, 0.0));
    pts
}

fn px(x: f64) -> String {
    format!("{:.1}", (x - 1.0 + MARGIN) * SCALE)
}

fn py(y: f64) -> String {
    // SVG y grows downwards
    format!("{:.1}", (MARGIN - y) * SCALE)
}

fn svg_path(arc: &Arc) -> String {
    let pts = waypoints(arc);
    let mut d = format!("M {} {}", px(pts[0].0), py(pts[0].1));
    for w in pts.windows(2) {
        let ((x0, y0), (x1, y1)) = (w[0], w[1]);
        let h = (x1 - x0) / 2.0;
        write!(
            d,
            " C {} {} {} {} {} {}",
            px(x0 + h),
            py(y0),
            px(x1 - h),
            py(y1),
            px(x1),
            py(y1)
        )
        .unwrap();
    }
    d
}

/// Standalone SVG 1.1 document for `n + 1` points and the given arcs.
pub fn to_svg(n: usize, arcs: &[ColoredArc]) -> String {
    let width = (n as f64 + 2.0 * MARGIN) * SCALE;
    let height = 2.0 * MARGIN * SCALE;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    )
    .unwrap();
    for e in arcs {
        let style = match e.color {
            Color::Green => r##"stroke="#1a9641""##,
            Color::Red => r##"stroke="#d7191c" stroke-dasharray="4 3""##,
        };
        writeln!(
            out,
            r#"  <path d="{}" fill="none" stroke-width="2" {style}/>"#,
            svg_path(&e.arc)
        )
        .unwrap();
    }
    for k in 1..=n + 1 {
        writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="3" fill="black"/>"#,
            px(k as f64),
            py(0.0)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// TikZ picture with points one centimetre apart.
pub fn to_tikz(n: usize, arcs: &[ColoredArc]) -> String {
    let mut out = String::from("\\begin{tikzpicture}\n");
    out.push_str(
        "  \\begin{scope}[every node/.style={circle, fill=black, inner sep=.5mm, outer sep=0}]\n",
    );
    for k in 1..=n + 1 {
        writeln!(out, "    \\node ({k}) at ({k},0) {{}};").unwrap();
    }
    out.push_str("  \\end{scope}\n  \\begin{scope}[thick, rounded corners=8pt]\n");
    for e in arcs {
        let style = match e.color {
            Color::Green => "green",
            Color::Red => "red,dotted",
        };
        let pts = waypoints(&e.arc);
        let mut parts = vec![format!("({})", e.arc.left())];
        for &(x, y) in &pts[1..pts.len() - 1] {
            let sign = if y > 0.0 { '+' } else { '-' };
            parts.push(format!("($({}) {sign} (0,3mm)$)", x as usize));
        }
        parts.push(format!("({})", e.arc.right()));
        writeln!(out, "    \\draw[{style}] {};", parts.join("--")).unwrap();
    }
    out.push_str("  \\end{scope}\n\\end{tikzpicture}\n");
    out
}
