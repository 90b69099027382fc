//! Region diagram of the charge-1 stability plane.
//!
//! Output is a pure function of its inputs: fixed canvas, fixed element
//! order, coordinates printed with two decimals, no metadata.

use std::fmt::Write as _;

use instanton_quiver::stability::geometry::Ray;
use instanton_quiver::stability::Wall;
use instanton_quiver::StabilityRegion;
use num_traits::ToPrimitive;

const SIZE: f64 = 480.0;
const C: f64 = 240.0;
const R: f64 = 200.0;

/// A stability region drawn over the base diagram.
pub struct Overlay {
    pub label: String,
    pub region: StabilityRegion,
}

fn unit(r: &Ray) -> (f64, f64) {
    let a = r.alpha().to_f64().unwrap_or(0.0);
    let g = r.gamma().to_f64().unwrap_or(0.0);
    let len = (a * a + g * g).sqrt();
    (a / len, g / len)
}

/// Canvas coordinates of the plane point `(α, γ)`; γ points up.
fn xy(a: f64, g: f64) -> (f64, f64) {
    (C + a * R, C - g * R)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn polygon(out: &mut String, points: &[(f64, f64)], style: &str) {
    let pts: Vec<String> = points
        .iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect();
    writeln!(out, r#"  <polygon points="{}" {style}/>"#, pts.join(" ")).unwrap();
}

fn text(out: &mut String, x: f64, y: f64, lines: &[&str]) {
    write!(
        out,
        r#"  <text x="{x:.2}" y="{y:.2}" font-size="11" text-anchor="middle">"#
    )
    .unwrap();
    for (i, l) in lines.iter().enumerate() {
        let dy = if i == 0 { 0.0 } else { 13.0 };
        write!(
            out,
            r#"<tspan x="{x:.2}" dy="{dy:.2}">{}</tspan>"#,
            escape(l)
        )
        .unwrap();
    }
    out.push_str("</text>\n");
}

/// The five regions of the (α, γ)-plane for dimension `(1,4,1)`, the
/// candidate walls as dotted lines, and one dashed outline per overlay.
pub fn figure(walls: &[Wall], overlays: &[Overlay]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    let (lo, hi) = (C - R, C + R);
    polygon(
        &mut out,
        &[(lo, lo), (hi, lo), (hi, C), (C, C), (C, hi), (lo, hi)],
        r##"fill="#e6e6e6" stroke="none""##,
    );
    polygon(
        &mut out,
        &[(C, C), (C, hi), (hi, hi)],
        r##"fill="#cfe3f7" stroke="none""##,
    );
    polygon(
        &mut out,
        &[(C, C), (hi, hi), (hi, C)],
        r##"fill="#f7dfc8" stroke="none""##,
    );

    for w in walls {
        let (a, g) = unit(&w.direction);
        let (x0, y0) = xy(-a, -g);
        let (x1, y1) = xy(a, g);
        writeln!(
            out,
            r##"  <line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}" stroke="#999999" stroke-width="0.75" stroke-dasharray="2,3"/>"##
        )
        .unwrap();
    }
    writeln!(
        out,
        r##"  <line x1="{lo:.2}" y1="{C:.2}" x2="{hi:.2}" y2="{C:.2}" stroke="#333333" stroke-width="1.5"/>"##
    )
    .unwrap();
    writeln!(
        out,
        r##"  <line x1="{C:.2}" y1="{lo:.2}" x2="{C:.2}" y2="{hi:.2}" stroke="#333333" stroke-width="1.5"/>"##
    )
    .unwrap();
    writeln!(
        out,
        r##"  <line x1="{C:.2}" y1="{C:.2}" x2="{hi:.2}" y2="{hi:.2}" stroke="#b22222" stroke-width="2.5"/>"##
    )
    .unwrap();

    for o in overlays {
        for s in &o.region.sectors {
            let pts: Vec<(f64, f64)> = [&s.start, &s.interior_point(), &s.end]
                .into_iter()
                .map(|r| {
                    let (a, g) = unit(r);
                    xy(0.95 * a, 0.95 * g)
                })
                .collect();
            polygon(
                &mut out,
                &[(C, C), pts[0], pts[1], pts[2]],
                r##"fill="none" stroke="#2e7d32" stroke-width="1.5" stroke-dasharray="6,3""##,
            );
        }
        let (x, y) = xy(0.05, 0.95);
        text(&mut out, x, y, &[&format!("overlay: {}", o.label)]);
    }

    text(
        &mut out,
        C - R / 2.0,
        C - R / 2.0,
        &["outside the fourth quadrant:", "empty"],
    );
    text(
        &mut out,
        C + R / 2.0,
        C - R / 2.0,
        &["outside the fourth quadrant:", "empty"],
    );
    text(
        &mut out,
        C - R / 2.0,
        C + R / 2.0,
        &["outside the fourth quadrant:", "empty"],
    );
    text(
        &mut out,
        C + R * 0.3,
        C + R * 0.8,
        &["γ < -α: P^5;", "quadric = non-locally-free"],
    );
    text(
        &mut out,
        C + R * 0.75,
        C + R * 0.3,
        &["γ > -α: P^5;", "quadric = perverse duals"],
    );
    text(&mut out, C + R * 0.72, C + R * 0.62, &["wall γ = -α"]);
    text(&mut out, C + R * 0.75, C - 8.0, &["axes: empty"]);
    out.push_str("</svg>\n");
    out
}
