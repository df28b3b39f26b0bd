//! Static SVG figures of moment cones and plumbing fans.
//!
//! Output is deterministic: elements are emitted in a fixed order and every
//! coordinate is printed with four decimals. Only rays and angles are drawn;
//! L-shape vertices are not.

use std::f64::consts::{PI, TAU};
use std::fmt::Write;

use crate::cone::MomentCone;
use crate::error::{Error, Result};
use crate::exact_angle::{ArcClass, Direction};
use crate::plumbing::{decompose, fan, Plumbing};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    canvas_size: u32,
    ray_length: f64,
    show_labels: bool,
}

impl RenderOptions {
    pub fn new(canvas_size: u32, ray_length: f64, show_labels: bool) -> Result<Self> {
        if canvas_size < 64 {
            return Err(Error::BadInput(format!("canvas size {canvas_size} is below 64")));
        }
        if !(ray_length.is_finite() && ray_length > 0.0) {
            return Err(Error::BadInput(format!("ray length {ray_length} must be positive")));
        }
        Ok(RenderOptions { canvas_size, ray_length, show_labels })
    }

    pub fn canvas_size(&self) -> u32 {
        self.canvas_size
    }

    pub fn ray_length(&self) -> f64 {
        self.ray_length
    }

    pub fn show_labels(&self) -> bool {
        self.show_labels
    }
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { canvas_size: 400, ray_length: 160.0, show_labels: true }
    }
}

fn num(v: f64) -> String {
    // Avoid "-0.0000".
    let s = format!("{v:.4}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.0000".to_string()
    } else {
        s
    }
}

/// Maps math coordinates (y up) to SVG coordinates (y down) around the
/// canvas center.
struct Canvas {
    out: String,
    center: f64,
}

impl Canvas {
    fn new(o: &RenderOptions, title: &str) -> Self {
        let size = o.canvas_size;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
        );
        let _ = writeln!(out, "<title>{title}</title>");
        let _ = writeln!(out, "<rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>");
        Canvas { out, center: f64::from(size) / 2.0 }
    }

    fn point(&self, angle: f64, radius: f64) -> (String, String) {
        (num(self.center + radius * angle.cos()), num(self.center - radius * angle.sin()))
    }

    fn ray(&mut self, angle: f64, length: f64, label: Option<String>) {
        let c = num(self.center);
        let (x, y) = self.point(angle, length);
        let _ = writeln!(
            self.out,
            "<line class=\"ray\" x1=\"{c}\" y1=\"{c}\" x2=\"{x}\" y2=\"{y}\" stroke=\"black\" stroke-width=\"2\"/>"
        );
        if let Some(label) = label {
            let (x, y) = self.point(angle, length + 14.0);
            let _ = writeln!(
                self.out,
                "<text x=\"{x}\" y=\"{y}\" font-size=\"12\" text-anchor=\"middle\">{label}</text>"
            );
        }
    }

    /// Counterclockwise arc of `sweep` radians in `(0, 2π)` from `start`.
    fn arc_path(&self, start: f64, sweep: f64, radius: f64, closed: bool) -> String {
        let (x0, y0) = self.point(start, radius);
        let (x1, y1) = self.point(start + sweep, radius);
        let r = num(radius);
        let large = u8::from(sweep > PI);
        // Counterclockwise in math coordinates is sweep-flag 0 once y is flipped.
        if closed {
            let c = num(self.center);
            format!("M {c} {c} L {x0} {y0} A {r} {r} 0 {large} 0 {x1} {y1} Z")
        } else {
            format!("M {x0} {y0} A {r} {r} 0 {large} 0 {x1} {y1}")
        }
    }

    fn circle(&mut self, class: &str, radius: f64) {
        let c = num(self.center);
        let _ = writeln!(
            self.out,
            "<circle class=\"{class}\" cx=\"{c}\" cy=\"{c}\" r=\"{}\" fill=\"none\" stroke=\"#1f5fa8\"/>",
            num(radius)
        );
    }

    fn text(&mut self, angle: f64, radius: f64, body: &str) {
        let (x, y) = self.point(angle, radius);
        let _ = writeln!(
            self.out,
            "<text x=\"{x}\" y=\"{y}\" font-size=\"12\" text-anchor=\"middle\" fill=\"#1f5fa8\">{body}</text>"
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn fractional_sweep(class: ArcClass, from: &Direction, to: &Direction) -> f64 {
    match class {
        ArcClass::Zero => 0.0,
        ArcClass::Straight => PI,
        _ => (to.to_radians() - from.to_radians()).rem_euclid(TAU),
    }
}

fn turns(w: u64) -> String {
    if w == 1 {
        "+1 turn".to_string()
    } else {
        format!("+{w} turns")
    }
}

/// Two rays, the arc swept from `r1` to `r2` (annotated with the winding),
/// and a shaded sector when the cone spans less than a full turn.
pub fn render_cone_svg(c: &MomentCone, o: &RenderOptions) -> String {
    let mut canvas = Canvas::new(o, &format!("moment cone {c}"));
    let start = c.r1().to_radians();
    let sweep = fractional_sweep(c.arc_class(), c.r1(), c.r2());
    let len = o.ray_length;

    if c.winding() == 0 {
        let d = canvas.arc_path(start, sweep, len, true);
        let _ = writeln!(canvas.out, "<path class=\"sector\" d=\"{d}\" fill=\"#cfe0f3\" stroke=\"none\"/>");
    }

    let arc_radius = len * 0.3;
    if sweep > 0.0 {
        let d = canvas.arc_path(start, sweep, arc_radius, false);
        let _ = writeln!(canvas.out, "<path class=\"arc\" d=\"{d}\" fill=\"none\" stroke=\"#1f5fa8\"/>");
    } else {
        canvas.circle("arc", arc_radius);
    }
    if c.winding() >= 1 {
        canvas.text(start + sweep / 2.0, arc_radius + 14.0, &turns(c.winding()));
    }

    let label = |name: &str, d: &Direction| o.show_labels.then(|| format!("{name} {d}"));
    canvas.ray(start, len, label("r1", c.r1()));
    canvas.ray(c.r2().to_radians(), len, label("r2", c.r2()));
    canvas.finish()
}

/// The glued L-shape fan of a plumbing: `n` rays, one arc per piece.
pub fn render_plumbing_svg(p: &Plumbing, o: &RenderOptions) -> String {
    let mut canvas = Canvas::new(o, &format!("plumbing {p}"));
    let fan = fan(p);
    let pieces = decompose(p);
    let len = o.ray_length;

    let mut start = fan.rays[0].to_radians();
    for (j, piece) in pieces.iter().enumerate() {
        let (from, to) = (&fan.rays[j], &fan.rays[j + 1]);
        let class = from.mul_conj(to).arc_class();
        let sweep = match class {
            // Pieces never close up; a parallel pair here is a half turn.
            ArcClass::Zero | ArcClass::Straight => PI,
            _ => (to.to_radians() - from.to_radians()).rem_euclid(TAU),
        };
        // Nested radii keep successive pieces of a multi-turn fan apart.
        let radius = len * (0.25 + 0.5 * (j as f64 + 0.5) / pieces.len() as f64);
        let d = canvas.arc_path(start, sweep, radius, false);
        let _ = writeln!(canvas.out, "<path class=\"piece\" d=\"{d}\" fill=\"none\" stroke=\"#1f5fa8\"/>");
        if o.show_labels {
            canvas.text(start + sweep / 2.0, radius + 10.0, &format!("({},{})", piece.a, piece.b));
        }
        start += sweep;
    }

    for (i, ray) in fan.rays.iter().enumerate() {
        let label = o.show_labels.then(|| format!("R{} {ray}", i + 1));
        canvas.ray(ray.to_radians(), len, label);
    }
    canvas.finish()
}
