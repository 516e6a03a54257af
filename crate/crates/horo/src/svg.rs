//! Deterministic SVG 1.1 emitters: Ford circles over the Farey fractions,
//! and upper half-plane cross-sections of decorated horospheres.
//!
//! Only `circle`, `line`, `path`, and `text` (tick labels) elements are
//! used. World coordinates are hyperbolic half-plane coordinates; the
//! vertical axis is flipped when mapping to pixels so "up" renders up.
//! Every coordinate is written with exactly four decimals.

use std::fmt::Write as _;

use horolib::{BoundaryPointU, DecoratedHorosphereU, FordCircle};

fn fmt4(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

/// World-to-pixel canvas with a flipped y axis.
struct Canvas {
    out: String,
    scale: f64,
    xmin: f64,
    ymax: f64,
}

impl Canvas {
    fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64, pixel_width: f64) -> Self {
        let scale = pixel_width / (xmax - xmin);
        let mut out = String::new();
        let h = (ymax - ymin) * scale;
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
            fmt4(pixel_width),
            fmt4(h),
            fmt4(pixel_width),
            fmt4(h),
        );
        Self { out, scale, xmin, ymax }
    }

    fn px(&self, x: f64) -> String {
        fmt4((x - self.xmin) * self.scale)
    }

    fn py(&self, y: f64) -> String {
        fmt4((self.ymax - y) * self.scale)
    }

    fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, width: f64) {
        let _ = writeln!(
            self.out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="{}"/>"#,
            self.px(x1),
            self.py(y1),
            self.px(x2),
            self.py(y2),
            fmt4(width),
        );
    }

    fn circle(&mut self, cx: f64, cy: f64, r: f64, width: f64) {
        let _ = writeln!(
            self.out,
            r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
            self.px(cx),
            self.py(cy),
            fmt4(r * self.scale),
            fmt4(width),
        );
    }

    /// Arrow from (x, y) of the given world length at the given world
    /// angle (counterclockwise from the positive real axis).
    fn arrow(&mut self, x: f64, y: f64, angle: f64, len: f64, width: f64) {
        let (tx, ty) = (x + len * angle.cos(), y + len * angle.sin());
        let head = 0.3 * len;
        let (a1, a2) = (angle + 2.6, angle - 2.6);
        let (h1x, h1y) = (tx + head * a1.cos(), ty + head * a1.sin());
        let (h2x, h2y) = (tx + head * a2.cos(), ty + head * a2.sin());
        let _ = writeln!(
            self.out,
            r#"<path d="M {} {} L {} {} M {} {} L {} {} M {} {} L {} {}" fill="none" stroke="black" stroke-width="{}"/>"#,
            self.px(x),
            self.py(y),
            self.px(tx),
            self.py(ty),
            self.px(h1x),
            self.py(h1y),
            self.px(tx),
            self.py(ty),
            self.px(h2x),
            self.py(h2y),
            self.px(tx),
            self.py(ty),
            fmt4(width),
        );
    }

    fn text(&mut self, x: f64, y: f64, font_px: f64, body: &str) {
        let _ = writeln!(
            self.out,
            r#"<text x="{}" y="{}" font-size="{}" font-family="sans-serif" text-anchor="middle">{}</text>"#,
            self.px(x),
            self.py(y),
            fmt4(font_px),
            body,
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Ford circles of the Farey fractions in [0, 1], resting on the real
/// axis, with a p/q tick label under each tangency point.
pub fn ford_svg(circles: &[FordCircle]) -> String {
    let mut canvas = Canvas::new(-0.08, 1.08, -0.14, 1.05, 900.0);
    canvas.line(-0.08, 0.0, 1.08, 0.0, 1.0);
    let font = (240.0 / circles.len().max(5) as f64).clamp(6.0, 20.0);
    for c in circles {
        let x = c.p() as f64 / c.q() as f64;
        let r = 0.5 / (c.q() * c.q()) as f64;
        canvas.circle(x, r, r, 1.0);
        canvas.text(x, -0.07, font, &format!("{}/{}", c.p(), c.q()));
    }
    canvas.finish()
}

/// Cross-section of each horosphere by the vertical plane through the real
/// axis: a circle of diameter |δ| tangent at Re(center), or a horizontal
/// line at height |δ| for center ∞, with the decoration arrow anchored at
/// the north pole at angle arg(δ) − π/2.
pub fn scene_svg(horospheres: &[DecoratedHorosphereU]) -> String {
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut top: f64 = 0.0;
    for h in horospheres {
        top = top.max(h.size());
        if let BoundaryPointU::Finite(z) = h.center() {
            xmin = xmin.min(z.re - h.size());
            xmax = xmax.max(z.re + h.size());
        }
    }
    if !xmin.is_finite() || xmax - xmin < 0.1 {
        let mid = if xmin.is_finite() { 0.5 * (xmin + xmax) } else { 0.0 };
        xmin = mid - 1.0;
        xmax = mid + 1.0;
    }
    let mid = 0.5 * (xmin + xmax);
    let pad = 0.08 * (xmax - xmin);
    let ymax = (1.25 * top).max(0.5);
    let stroke = (xmax - xmin + 2.0 * pad) / 900.0;

    let mut canvas = Canvas::new(xmin - pad, xmax + pad, -0.05 * ymax, ymax, 900.0);
    canvas.line(xmin - pad, 0.0, xmax + pad, 0.0, stroke);
    for h in horospheres {
        let size = h.size();
        let north = match h.center() {
            BoundaryPointU::Finite(z) => {
                canvas.circle(z.re, size / 2.0, size / 2.0, stroke);
                (z.re, size)
            }
            BoundaryPointU::Infinity => {
                canvas.line(xmin - pad, size, xmax + pad, size, stroke);
                (mid, size)
            }
        };
        let angle = h.delta().arg() - std::f64::consts::FRAC_PI_2;
        canvas.arrow(north.0, north.1, angle, 0.4 * size, stroke);
    }
    canvas.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use horolib::{farey_enumerate, horosphere_of_spinor, NonzeroSpinor};
    use num_complex::Complex64;

    fn tag_names(svg: &str) -> Vec<&str> {
        let mut names = Vec::new();
        let bytes = svg.as_bytes();
        for (i, _) in svg.match_indices('<') {
            let rest = &svg[i + 1..];
            let rest = rest.strip_prefix('/').unwrap_or(rest);
            let end = rest
                .find(|c: char| !c.is_ascii_alphanumeric())
                .unwrap_or(rest.len());
            if end > 0 && bytes[i + 1] != b'!' {
                names.push(&rest[..end]);
            }
        }
        names
    }

    #[test]
    fn ford_depth_three_structure() {
        let svg = ford_svg(&farey_enumerate(3).unwrap());
        assert!(svg.starts_with("<svg "));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<circle").count(), 5);
        for label in ["0/1", "1/3", "1/2", "2/3", "1/1"] {
            assert!(svg.contains(&format!(">{label}</text>")), "missing label {label}");
        }
        for name in tag_names(&svg) {
            assert!(
                matches!(name, "svg" | "circle" | "line" | "path" | "text"),
                "unexpected element {name}"
            );
        }
        assert!(!svg.contains("-0.0000"));
    }

    #[test]
    fn ford_output_is_deterministic() {
        let circles = farey_enumerate(5).unwrap();
        assert_eq!(ford_svg(&circles), ford_svg(&circles));
    }

    #[test]
    fn scene_draws_line_circle_and_arrows() {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let plane = horosphere_of_spinor(
            &NonzeroSpinor::from_components(c(1.0, 0.0), c(0.0, 0.0)).unwrap(),
        );
        let sphere = horosphere_of_spinor(
            &NonzeroSpinor::from_components(c(0.0, 0.0), c(1.0, 0.0)).unwrap(),
        );
        let svg = scene_svg(&[plane, sphere]);
        // axis + plane lines, one circle, two decoration arrows
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<path").count(), 2);
        for name in tag_names(&svg) {
            assert!(matches!(name, "svg" | "circle" | "line" | "path" | "text"));
        }
    }

    #[test]
    fn scene_of_single_plane_has_fallback_viewport() {
        let plane = horosphere_of_spinor(
            &NonzeroSpinor::from_components(Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0))
                .unwrap(),
        );
        let svg = scene_svg(&[plane]);
        assert!(svg.starts_with("<svg "));
        assert_eq!(svg.matches("<line").count(), 2);
    }
}
