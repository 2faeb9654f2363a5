//! Static SVG figures of polygons, triangulations, guards and blindspots.

use std::fmt::Write;

use crate::exact::{Point, Segment};
use crate::polygon::{Color, Coloring, SimplePolygon, Triangulation};

#[derive(Clone, Debug, PartialEq)]
pub struct Style {
    pub fill: String,
    pub stroke: String,
    pub blindspot: String,
    pub window: String,
    pub guard: String,
    pub stroke_width: f64,
    pub vertex_radius: f64,
    pub font_size: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            fill: "#f5f3ea".into(),
            stroke: "#222222".into(),
            blindspot: "#e8796f".into(),
            window: "#7a7a7a".into(),
            guard: "#111111".into(),
            stroke_width: 2.0,
            vertex_radius: 4.0,
            font_size: 12.0,
        }
    }
}

/// Everything a figure can show. Only `polygon` is required.
#[derive(Clone, Debug)]
pub struct RenderSpec<'a> {
    pub polygon: &'a SimplePolygon,
    pub triangulation: Option<&'a Triangulation>,
    pub coloring: Option<&'a Coloring>,
    pub guards: &'a [usize],
    pub blindspots: &'a [[Point; 3]],
    pub windows: &'a [Segment],
    pub width: u32,
    pub height: u32,
    pub style: Style,
}

impl<'a> RenderSpec<'a> {
    pub fn new(polygon: &'a SimplePolygon) -> Self {
        RenderSpec {
            polygon,
            triangulation: None,
            coloring: None,
            guards: &[],
            blindspots: &[],
            windows: &[],
            width: 640,
            height: 640,
            style: Style::default(),
        }
    }
}

fn color_hex(c: Color) -> &'static str {
    match c {
        Color::R => "#d62728",
        Color::G => "#2ca02c",
        Color::B => "#1f77b4",
    }
}

/// Maps polygon coordinates to canvas pixels, +y up, aspect preserved.
struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
    pad_x: f64,
    pad_y: f64,
}

impl Frame {
    fn new(poly: &SimplePolygon, width: u32, height: u32) -> Self {
        let (lo, hi) = poly.bounds();
        let margin = 28.0;
        let (w, h) = (
            f64::from(width) - 2.0 * margin,
            f64::from(height) - 2.0 * margin,
        );
        let (dx, dy) = ((&hi.x - &lo.x).to_f64(), (&hi.y - &lo.y).to_f64());
        let scale = (w / dx.max(1e-9)).min(h / dy.max(1e-9));
        Frame {
            x0: lo.x.to_f64(),
            y1: hi.y.to_f64(),
            scale,
            pad_x: margin + (w - dx * scale) / 2.0,
            pad_y: margin + (h - dy * scale) / 2.0,
        }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        (
            self.pad_x + (p.x.to_f64() - self.x0) * self.scale,
            self.pad_y + (self.y1 - p.y.to_f64()) * self.scale,
        )
    }

    fn points(&self, pts: &[Point]) -> String {
        pts.iter()
            .map(|p| {
                let (x, y) = self.map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn render_svg(spec: &RenderSpec) -> String {
    let poly = spec.polygon;
    let st = &spec.style;
    let f = Frame::new(poly, spec.width, spec.height);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let outline = f.points(poly.vertices());
    let _ = writeln!(
        s,
        r#"<polygon class="interior" points="{outline}" fill="{}" stroke="none"/>"#,
        st.fill
    );
    for t in spec.blindspots {
        let _ = writeln!(
            s,
            r#"<polygon class="blindspot" points="{}" fill="{c}" stroke="{c}" stroke-width="0.5"/>"#,
            f.points(t),
            c = st.blindspot
        );
    }
    for w in spec.windows {
        let ((x1, y1), (x2, y2)) = (f.map(&w.a), f.map(&w.b));
        let _ = writeln!(
            s,
            r#"<line class="window" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{}" stroke-width="1"/>"#,
            st.window
        );
    }
    if let Some(t) = spec.triangulation {
        for &(a, b) in t.diagonals() {
            let ((x1, y1), (x2, y2)) = (f.map(poly.vertex(a)), f.map(poly.vertex(b)));
            let _ = writeln!(
                s,
                r#"<line class="diagonal" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{}" stroke-width="1" stroke-dasharray="6 4"/>"#,
                st.stroke
            );
        }
    }
    let _ = writeln!(
        s,
        r#"<polygon class="outline" points="{outline}" fill="none" stroke="{}" stroke-width="{}" stroke-linejoin="round"/>"#,
        st.stroke, st.stroke_width
    );
    for &g in spec.guards {
        let (x, y) = f.map(poly.vertex(g));
        let _ = writeln!(
            s,
            r#"<circle class="guard" cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="{}"/>"#,
            st.vertex_radius * 2.0,
            st.guard
        );
    }
    for (i, p) in poly.vertices().iter().enumerate() {
        let (x, y) = f.map(p);
        let fill = spec.coloring.map_or("#ffffff", |c| color_hex(c.color(i)));
        let _ = writeln!(
            s,
            r#"<circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="{fill}" stroke="{}" stroke-width="1"/>"#,
            st.vertex_radius, st.stroke
        );
        let _ = writeln!(
            s,
            r#"<text class="label" x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="{}">{i}</text>"#,
            x + st.vertex_radius + 2.0,
            y - st.vertex_radius - 2.0,
            st.font_size
        );
    }
    s.push_str("</svg>\n");
    s
}
