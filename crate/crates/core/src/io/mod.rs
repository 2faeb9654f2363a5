//! Polygon files and SVG figures.

mod format;
mod svg;

pub use format::{
    emit_polygon, emit_polygon_file, parse_polygon, parse_polygon_file, polygon_json, ser_point,
    ser_points, ser_rational, ser_segment, ser_triangles, IoError, PolygonFile,
};
pub use svg::{render_svg, RenderSpec, Style};
