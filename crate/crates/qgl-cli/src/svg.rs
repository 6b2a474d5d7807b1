//! Deterministic SVG scenes for slice hulls and root markers.
//!
//! Every hull becomes exactly one `<polygon>` element and every root
//! exactly one `<circle>` marker, so scenes are easy to assert on and
//! diff. Coordinates are printed with the same 12-significant-digit
//! format as the rest of the harness.

use qgl_core::ConvexRegion2D;

use crate::io::sig12;

const VIEW: f64 = 640.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#ff7f0e", "#17becf",
];

/// One hull (stroked outline) or marker set (filled circles) to draw.
pub struct Layer<'a> {
    pub name: &'a str,
    pub region: Option<&'a ConvexRegion2D>,
    pub points: Vec<[f64; 2]>,
}

impl<'a> Layer<'a> {
    pub fn hull(name: &'a str, region: &'a ConvexRegion2D) -> Self {
        Layer { name, region: Some(region), points: Vec::new() }
    }

    pub fn markers(name: &'a str, points: Vec<[f64; 2]>) -> Self {
        Layer { name, region: None, points }
    }
}

fn finite(p: &[f64; 2]) -> bool {
    p[0].is_finite() && p[1].is_finite()
}

/// Data bounding box over all layer geometry, padded so degenerate
/// scenes (single points, empty hulls) still get a sane viewport.
fn bounds(layers: &[Layer]) -> [f64; 4] {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    let mut grow = |p: &[f64; 2]| {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    };
    for layer in layers {
        if let Some(region) = layer.region {
            for v in region.vertices().iter().filter(|v| finite(v)) {
                grow(v);
            }
        }
        for p in layer.points.iter().filter(|p| finite(p)) {
            grow(p);
        }
    }
    if lo[0] > hi[0] {
        return [-1.0, -1.0, 1.0, 1.0];
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let pad = if span > 0.0 { 0.1 * span } else { 1.0 };
    [lo[0] - pad, lo[1] - pad, hi[0] + pad, hi[1] + pad]
}

/// Renders the layers into a standalone square SVG document. The chart's
/// y axis points up, so it is flipped into screen coordinates.
pub fn render(layers: &[Layer]) -> String {
    let [x0, y0, x1, y1] = bounds(layers);
    let scale = VIEW / (x1 - x0).max(y1 - y0);
    let to_screen = |p: &[f64; 2]| -> [f64; 2] {
        [(p[0] - x0) * scale, VIEW - (p[1] - y0) * scale]
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{VIEW}\" height=\"{VIEW}\" \
         viewBox=\"0 0 {VIEW} {VIEW}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{VIEW}\" height=\"{VIEW}\" fill=\"white\" stroke=\"#cccccc\"/>\n"
    ));
    for (idx, layer) in layers.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        if let Some(region) = layer.region {
            let pts: Vec<[f64; 2]> = match region {
                // No boundary vertices; cover the whole viewport.
                ConvexRegion2D::WholePlane => vec![
                    [0.0, 0.0],
                    [VIEW, 0.0],
                    [VIEW, VIEW],
                    [0.0, VIEW],
                ],
                _ => region
                    .vertices()
                    .iter()
                    .filter(|v| finite(v))
                    .map(|v| to_screen(v))
                    .collect(),
            };
            let coords: Vec<String> = pts
                .iter()
                .map(|p| format!("{},{}", sig12(p[0]), sig12(p[1])))
                .collect();
            out.push_str(&format!(
                "  <polygon class=\"hull {}\" points=\"{}\" fill=\"{}\" \
                 fill-opacity=\"0.08\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                layer.name,
                coords.join(" "),
                color,
                color
            ));
        }
        for p in layer.points.iter().filter(|p| finite(p)) {
            let s = to_screen(p);
            out.push_str(&format!(
                "  <circle class=\"root {}\" cx=\"{}\" cy=\"{}\" r=\"4\" \
                 fill=\"{}\" fill-opacity=\"0.9\"/>\n",
                layer.name,
                sig12(s[0]),
                sig12(s[1]),
                color
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}
