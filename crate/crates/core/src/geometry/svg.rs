//! SVG export of conductor outlines, 1 SVG unit = 1 µm.

use crate::geometry::pad::DeviceLayout;
use crate::geometry::polygon::Polygon;

const COLORS: [&str; 4] = ["#4878cf", "#d65f5f", "#6acc65", "#956cb4"];

fn path_data(p: &Polygon) -> String {
    let mut d = String::new();
    for (i, v) in p.vertices.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd}{:.4},{:.4} ", v[0], -v[1]));
    }
    d.push('Z');
    d
}

/// Render a device layout. The y axis is flipped so +y points up.
pub fn device_svg(dev: &DeviceLayout) -> String {
    let (lo, hi) = dev.bounding_box();
    let margin = 20.0;
    let w = hi[0] - lo[0] + 2.0 * margin;
    let h = hi[1] - lo[1] + 2.0 * margin;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.1}\" height=\"{h:.1}\" \
         viewBox=\"{:.1} {:.1} {w:.1} {h:.1}\">\n",
        lo[0] - margin,
        -hi[1] - margin,
    ));
    out.push_str(&format!(
        "  <title>{}</title>\n  <rect x=\"{:.1}\" y=\"{:.1}\" width=\"{w:.1}\" height=\"{h:.1}\" fill=\"white\"/>\n",
        dev.name,
        lo[0] - margin,
        -hi[1] - margin,
    ));
    for (ci, c) in dev.conductors.iter().enumerate() {
        let color = COLORS[ci % COLORS.len()];
        for r in &c.regions {
            let mut d = path_data(&r.outer);
            for hole in &r.holes {
                d.push(' ');
                d.push_str(&path_data(hole));
            }
            out.push_str(&format!(
                "  <path d=\"{d}\" fill=\"{color}\" fill-rule=\"evenodd\" fill-opacity=\"0.55\" \
                 stroke=\"{color}\" stroke-width=\"0.5\"><title>{}</title></path>\n",
                c.label
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Render a simple polyline chart (used for convergence plots), with x/y
/// data mapped into a fixed 640x400 canvas.
pub fn line_chart_svg(title: &str, xs: &[f64], ys: &[f64]) -> String {
    let (w, h, pad) = (640.0, 400.0, 45.0);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\">\n\
         <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n\
         <text x=\"{:.0}\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">{title}</text>\n",
        w / 2.0
    );
    if xs.len() >= 2 && xs.len() == ys.len() {
        let (x0, x1) = (
            xs.iter().cloned().fold(f64::INFINITY, f64::min),
            xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        );
        let (y0, y1) = (
            ys.iter().cloned().fold(f64::INFINITY, f64::min),
            ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        );
        let sx = |x: f64| pad + (x - x0) / (x1 - x0).max(1e-12) * (w - 2.0 * pad);
        let sy = |y: f64| h - pad - (y - y0) / (y1 - y0).max(1e-12) * (h - 2.0 * pad);
        let pts: Vec<String> = xs
            .iter()
            .zip(ys)
            .map(|(&x, &y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        out.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#4878cf\" stroke-width=\"1.5\"/>\n",
            pts.join(" ")
        ));
        out.push_str(&format!(
            "<text x=\"{pad}\" y=\"{:.0}\" font-size=\"11\">{y1:.4e}</text>\n\
             <text x=\"{pad}\" y=\"{:.0}\" font-size=\"11\">{y0:.4e}</text>\n",
            pad + 10.0,
            h - pad - 4.0
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::baseline::{make_baseline, BaselineGeometry, BaselineKind, BaselineParams};

    #[test]
    fn svg_contains_all_conductors() {
        let BaselineGeometry::Pad(dev) = make_baseline(
            BaselineKind::DoublePad,
            &BaselineParams::default(),
            100.0,
            200.0,
        )
        .unwrap() else {
            panic!()
        };
        let svg = device_svg(&dev);
        assert!(svg.contains("<svg"));
        assert!(svg.contains("pad1"));
        assert!(svg.contains("pad2"));
        assert!(svg.contains("ground"));
        assert!(svg.matches("<path").count() >= 3);
    }
}
