//! SVG drawings of Farey paths and horocycles, and aligned text grids.
//!
//! All geometry is exact until the final conversion to `f64` for coordinate output,
//! which is printed with six decimals so that output is byte-stable.

use std::fmt::Write as _;

use farey_tilings::{horocycle, ExtRat, FareyPath, FareyVertex, Frieze, Hypertiling, Int, Rat, Tiling};
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    UpperHalfPlane,
    Disc,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub model: Model,
    /// Visible boundary interval in the half-plane model.
    pub x_range: (i64, i64),
    /// Disc radius in pixels.
    pub radius: f64,
    /// Width of the half-plane picture in pixels.
    pub width: f64,
    /// Background edges join fractions with denominators up to this bound.
    pub depth: u32,
    pub background: bool,
    pub labels: bool,
    pub horocycles: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            model: Model::UpperHalfPlane,
            x_range: (-3, 3),
            radius: 300.0,
            width: 900.0,
            depth: 12,
            background: true,
            labels: true,
            horocycles: false,
        }
    }
}

impl RenderSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.x_range.1 <= self.x_range.0 {
            return Err("x range must be nonempty".into());
        }
        if !(self.radius > 0.0 && self.width > 0.0) {
            return Err("picture dimensions must be positive".into());
        }
        if self.depth == 0 {
            return Err("depth must be positive".into());
        }
        Ok(())
    }
}

const PATH_COLOURS: [&str; 6] = ["#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#117a65"];
const MARGIN: f64 = 20.0;

fn f(x: f64) -> String {
    let s = format!("{x:.6}");
    // Avoid "-0.000000" so that output does not depend on the sign of zero.
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".to_string()
    } else {
        s
    }
}

fn rat_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Screen position for a label.
#[derive(Clone, Debug)]
struct Point {
    x: f64,
    y: f64,
}

trait Canvas {
    fn size(&self) -> (f64, f64);
    fn frame(&self, out: &mut String);
    fn geodesic(&self, p: &ExtRat, q: &ExtRat) -> String;
    /// Circle (cx, cy, r) or horizontal line for the horocycle at `∞`.
    fn horocycle(&self, centre: &ExtRat, size: &Rat) -> String;
    fn boundary(&self, p: &ExtRat) -> Point;
}

struct HalfPlane {
    x0: f64,
    x1: f64,
    scale: f64,
    height: f64,
}

impl HalfPlane {
    fn new(spec: &RenderSpec) -> Self {
        let (x0, x1) = (spec.x_range.0 as f64, spec.x_range.1 as f64);
        let scale = (spec.width - 2.0 * MARGIN) / (x1 - x0);
        // Unit semicircles are the largest finite geodesics between integers.
        let height = scale * 0.5 * 1.25 + 2.0 * MARGIN;
        HalfPlane { x0, x1, scale, height }
    }

    fn sx(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) * self.scale
    }

    fn baseline(&self) -> f64 {
        self.height - MARGIN
    }
}

impl Canvas for HalfPlane {
    fn size(&self) -> (f64, f64) {
        (self.sx(self.x1) + MARGIN, self.height)
    }

    fn frame(&self, out: &mut String) {
        let y = f(self.baseline());
        let _ = writeln!(
            out,
            r#"<line class="axis" x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="1"/>"#,
            f(self.sx(self.x0)),
            f(self.sx(self.x1))
        );
    }

    fn geodesic(&self, p: &ExtRat, q: &ExtRat) -> String {
        let base = self.baseline();
        match (p, q) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => {
                let (mut u, mut v) = (self.sx(rat_f64(a)), self.sx(rat_f64(b)));
                if u > v {
                    std::mem::swap(&mut u, &mut v);
                }
                let r = (v - u) / 2.0;
                format!(r#"M {} {} A {} {} 0 0 1 {} {}"#, f(u), f(base), f(r), f(r), f(v), f(base))
            }
            (ExtRat::Finite(a), ExtRat::Infinity) | (ExtRat::Infinity, ExtRat::Finite(a)) => {
                let x = f(self.sx(rat_f64(a)));
                format!("M {x} {} L {x} {}", f(base), f(0.0))
            }
            (ExtRat::Infinity, ExtRat::Infinity) => String::new(),
        }
    }

    fn horocycle(&self, centre: &ExtRat, size: &Rat) -> String {
        let d = rat_f64(size) * self.scale;
        match centre {
            ExtRat::Finite(a) => {
                let r = d / 2.0;
                format!(
                    r##"<circle class="horocycle" cx="{}" cy="{}" r="{}" fill="none" stroke="#555" stroke-width="0.8"/>"##,
                    f(self.sx(rat_f64(a))),
                    f(self.baseline() - r),
                    f(r)
                )
            }
            ExtRat::Infinity => {
                let y = f((self.baseline() - d).max(0.0));
                format!(
                    r##"<line class="horocycle" x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="#555" stroke-width="0.8"/>"##,
                    f(self.sx(self.x0)),
                    f(self.sx(self.x1))
                )
            }
        }
    }

    fn boundary(&self, p: &ExtRat) -> Point {
        match p {
            ExtRat::Finite(a) => Point { x: self.sx(rat_f64(a)), y: self.baseline() + 14.0 },
            ExtRat::Infinity => Point { x: self.sx(self.x1) - 10.0, y: 14.0 },
        }
    }
}

/// Poincaré disc through the Cayley transform `z -> (z - i)/(z + i)`.
struct Disc {
    r: f64,
}

impl Disc {
    fn c(&self) -> f64 {
        self.r + MARGIN
    }

    /// Image of a point `x + i y` of the closed upper half-plane in the unit disc.
    fn cayley(x: f64, y: f64) -> (f64, f64) {
        // (x + i(y - 1)) / (x + i(y + 1))
        let den = x * x + (y + 1.0) * (y + 1.0);
        ((x * x + y * y - 1.0) / den, (-2.0 * x) / den)
    }

    fn unit_boundary(p: &ExtRat) -> (f64, f64) {
        match p {
            ExtRat::Finite(a) => Disc::cayley(rat_f64(a), 0.0),
            ExtRat::Infinity => (1.0, 0.0),
        }
    }

    /// Screen coordinates; the disc's imaginary axis points up.
    fn screen(&self, (u, v): (f64, f64)) -> (f64, f64) {
        (self.c() + self.r * u, self.c() - self.r * v)
    }
}

fn circumcircle(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> (f64, f64, f64) {
    let d = 2.0 * (a.0 * (b.1 - c.1) + b.0 * (c.1 - a.1) + c.0 * (a.1 - b.1));
    let sq = |p: (f64, f64)| p.0 * p.0 + p.1 * p.1;
    let ux = (sq(a) * (b.1 - c.1) + sq(b) * (c.1 - a.1) + sq(c) * (a.1 - b.1)) / d;
    let uy = (sq(a) * (c.0 - b.0) + sq(b) * (a.0 - c.0) + sq(c) * (b.0 - a.0)) / d;
    (ux, uy, ((a.0 - ux).powi(2) + (a.1 - uy).powi(2)).sqrt())
}

impl Canvas for Disc {
    fn size(&self) -> (f64, f64) {
        (2.0 * self.c(), 2.0 * self.c())
    }

    fn frame(&self, out: &mut String) {
        let c = f(self.c());
        let _ = writeln!(
            out,
            r#"<circle class="boundary" cx="{c}" cy="{c}" r="{}" fill="none" stroke="black" stroke-width="1"/>"#,
            f(self.r)
        );
    }

    fn geodesic(&self, p: &ExtRat, q: &ExtRat) -> String {
        let (a, b) = (Disc::unit_boundary(p), Disc::unit_boundary(q));
        let (sa, sb) = (self.screen(a), self.screen(b));
        let dot = a.0 * b.0 + a.1 * b.1;
        if dot <= -1.0 + 1e-12 {
            return format!("M {} {} L {} {}", f(sa.0), f(sa.1), f(sb.0), f(sb.1));
        }
        let theta = dot.clamp(-1.0, 1.0).acos();
        let r = self.r * (theta / 2.0).tan();
        let cross = (sa.0 - self.c()) * (sb.1 - self.c()) - (sa.1 - self.c()) * (sb.0 - self.c());
        let sweep = if cross < 0.0 { 1 } else { 0 };
        format!("M {} {} A {} {} 0 0 {sweep} {} {}", f(sa.0), f(sa.1), f(r), f(r), f(sb.0), f(sb.1))
    }

    fn horocycle(&self, centre: &ExtRat, size: &Rat) -> String {
        let d = rat_f64(size);
        // Three points of the horocycle in the half-plane, mapped and joined by a circle.
        let pts = match centre {
            ExtRat::Finite(a) => {
                let x = rat_f64(a);
                [(x, d), (x - d / 2.0, d / 2.0), (x + d / 2.0, d / 2.0)]
            }
            ExtRat::Infinity => [(0.0, d), (-1.0, d), (1.0, d)],
        };
        let [p, q, s] = pts.map(|(x, y)| self.screen(Disc::cayley(x, y)));
        let (cx, cy, r) = circumcircle(p, q, s);
        format!(
            r##"<circle class="horocycle" cx="{}" cy="{}" r="{}" fill="none" stroke="#555" stroke-width="0.8"/>"##,
            f(cx),
            f(cy),
            f(r)
        )
    }

    fn boundary(&self, p: &ExtRat) -> Point {
        let (u, v) = Disc::unit_boundary(p);
        let (x, y) = self.screen((u * 1.06, v * 1.06));
        Point { x, y }
    }
}

fn ext(a: i64, b: i64) -> ExtRat {
    if b == 0 {
        ExtRat::Infinity
    } else {
        ExtRat::Finite(Rat::new(Int::from(a), Int::from(b)))
    }
}

/// Edges of the classical Farey graph between reduced fractions `a/b` with
/// `b <= depth` lying in `[lo, hi]`, together with the vertical edges to `∞`.
pub fn background_edges(lo: i64, hi: i64, depth: u32) -> Vec<(ExtRat, ExtRat)> {
    let depth = depth as i64;
    let mut fracs = Vec::new();
    for b in 1..=depth {
        for a in lo * b..=hi * b {
            if num_integer_gcd(a, b) == 1 {
                fracs.push((a, b));
            }
        }
    }
    fracs.sort_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
    let mut edges: Vec<(ExtRat, ExtRat)> = (lo..=hi).map(|n| (ext(n, 1), ExtRat::Infinity)).collect();
    for (i, &(a, b)) in fracs.iter().enumerate() {
        for &(c, d) in &fracs[i + 1..] {
            if (a * d - b * c).abs() == 1 {
                edges.push((ext(a, b), ext(c, d)));
            }
        }
    }
    edges
}

fn num_integer_gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn vertex_label(v: &FareyVertex) -> String {
    if v.b.is_zero() {
        format!("{}/0", v.a)
    } else {
        format!("{}/{}", v.a, v.b)
    }
}

/// Deterministic SVG of the Farey tessellation with highlighted paths.
pub fn render_farey_svg(paths: &[FareyPath], spec: &RenderSpec) -> Result<String, String> {
    spec.validate()?;
    let canvas: Box<dyn Canvas> = match spec.model {
        Model::UpperHalfPlane => Box::new(HalfPlane::new(spec)),
        Model::Disc => Box::new(Disc { r: spec.radius }),
    };
    let (w, h) = canvas.size();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        f(w),
        f(h),
        f(w),
        f(h)
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    canvas.frame(&mut out);
    if spec.background {
        let _ = writeln!(out, r##"<g class="tessellation" fill="none" stroke="#bbb" stroke-width="0.6">"##);
        for (p, q) in background_edges(spec.x_range.0, spec.x_range.1, spec.depth) {
            let d = canvas.geodesic(&p, &q);
            if !d.is_empty() {
                let _ = writeln!(out, r#"<path d="{d}"/>"#);
            }
        }
        let _ = writeln!(out, "</g>");
    }
    for (n, path) in paths.iter().enumerate() {
        let colour = PATH_COLOURS[n % PATH_COLOURS.len()];
        let values = path.values();
        let _ = writeln!(out, r#"<g class="path" fill="none" stroke="{colour}" stroke-width="2.5">"#);
        for w in values.windows(2) {
            let d = canvas.geodesic(&w[0], &w[1]);
            if !d.is_empty() {
                let _ = writeln!(out, r#"<path d="{d}"/>"#);
            }
        }
        let _ = writeln!(out, "</g>");
        if spec.horocycles {
            let _ = writeln!(out, r#"<g class="horocycles">"#);
            for v in path.vertices() {
                if let Some(hc) = horocycle(v) {
                    let _ = writeln!(out, "{}", canvas.horocycle(&hc.center, &hc.size));
                }
            }
            let _ = writeln!(out, "</g>");
        }
        if spec.labels {
            let _ = writeln!(
                out,
                r#"<g class="labels" font-family="sans-serif" font-size="11" fill="{colour}" text-anchor="middle">"#
            );
            for (v, value) in path.vertices().iter().zip(&values) {
                let p = canvas.boundary(value);
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}">{}</text>"#,
                    f(p.x),
                    f(p.y + 12.0 * n as f64),
                    xml_escape(&vertex_label(v))
                );
            }
            let _ = writeln!(out, "</g>");
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn aligned(rows: &[Vec<String>]) -> Vec<String> {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
    rows.iter().map(|r| r.iter().map(|s| format!("{s:>width$}")).collect::<Vec<_>>().join(" ")).collect()
}

/// Right-aligned columns, one line per row.
pub fn ascii_tiling(t: &Tiling) -> String {
    let rows: Vec<Vec<String>> = t.to_rows().iter().map(|r| r.iter().map(Int::to_string).collect()).collect();
    aligned(&rows).join("\n") + "\n"
}

/// Layers of fixed last index side by side, separated by `|`; rows are the first
/// index and columns the second.
pub fn ascii_hypertiling(h: &Hypertiling) -> String {
    let [d0, d1, d2] = h.dims();
    let width = h.entries().iter().map(|v| v.to_string().len()).max().unwrap_or(0);
    let mut lines = Vec::with_capacity(d0);
    for p in 0..d0 {
        let layers: Vec<String> = (0..d2)
            .map(|r| (0..d1).map(|q| format!("{:>width$}", h.at(p, q, r).to_string())).collect::<Vec<_>>().join(" "))
            .collect();
        lines.push(layers.join(" | "));
    }
    lines.join("\n") + "\n"
}

/// Rows `m_{j+d, j}` for `d = 0 ..= width`, staggered by half a cell and cut to a
/// common window of about two periods.
pub fn ascii_frieze(fr: &Frieze) -> String {
    let n = fr.width() as i64;
    // Entry m_{j+d, j} sits at half-cell position 2j + d.
    let (x0, x1) = (n, 5 * n);
    let rows: Vec<Vec<(i64, String)>> = (0..=n)
        .map(|d| {
            let first = (x0 - d).div_euclid(2) + i64::from((x0 - d).rem_euclid(2) != 0);
            (first..)
                .map(|j| (2 * j + d, j))
                .take_while(|&(x, _)| x < x1)
                .map(|(x, j)| (x, rat_string(&fr.entry(j + d, j))))
                .collect()
        })
        .collect();
    let mut width = rows.iter().flatten().map(|(_, s)| s.len()).max().unwrap_or(0);
    if width % 2 == 0 {
        width += 1;
    }
    let half = (width + 1) / 2;
    rows.iter()
        .map(|row| {
            let mut text = String::new();
            for (x, s) in row {
                let col = (*x - x0) as usize * half;
                text.push_str(&" ".repeat(col.saturating_sub(text.len())));
                text.push_str(&format!("{s:^width$}"));
            }
            text.trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

/// The quiddity cycle as space separated rationals.
pub fn quiddity_string(fr: &Frieze) -> String {
    fr.quiddity_cycle().iter().map(rat_string).collect::<Vec<_>>().join(" ")
}

pub fn sign_string(x: &Int) -> &'static str {
    if x.is_negative() {
        "negative"
    } else if x.is_zero() {
        "zero"
    } else {
        "positive"
    }
}
