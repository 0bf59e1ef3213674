//! Static SVG figures for convex polygons: a single overlay viewport with a
//! legend, or a 2x2 panel grid. All panels share one world bounding box so
//! shapes stay visually comparable, the aspect ratio is preserved, and the
//! y axis is flipped so mathematical orientation matches the screen.

use wulff_core::euclid::ConvexPolygon;

/// Pixel dimensions of the output. Both must be positive.
#[derive(Debug, Clone, Copy)]
pub struct RenderSpec {
    width: u32,
    height: u32,
}

impl RenderSpec {
    pub fn new(width: u32, height: u32) -> Result<Self, String> {
        if width == 0 || height == 0 {
            return Err(format!("render dimensions must be positive, got {width}x{height}"));
        }
        Ok(Self { width, height })
    }
}

/// One polygon with its stroke color and legend label.
pub struct Layer<'a> {
    pub shape: &'a ConvexPolygon,
    pub stroke: &'a str,
    pub label: &'a str,
}

/// Default stroke palette, consumed in order by the render command.
pub const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

struct WorldBox {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl WorldBox {
    /// Bounding box of all layers, widened by a 10% margin per axis.
    /// Degenerate extents fall back to a unit span so the transform stays
    /// finite.
    fn of(layers: &[Layer]) -> WorldBox {
        let mut min_x = f64::INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for layer in layers {
            for v in layer.shape.vertices() {
                min_x = min_x.min(v.x);
                min_y = min_y.min(v.y);
                max_x = max_x.max(v.x);
                max_y = max_y.max(v.y);
            }
        }
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        WorldBox {
            min_x: min_x - 0.1 * span_x,
            max_x: max_x + 0.1 * span_x,
            min_y: min_y - 0.1 * span_y,
            max_y: max_y + 0.1 * span_y,
        }
    }

    fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    fn height(&self) -> f64 {
        self.max_y - self.min_y
    }
}

/// Pixel transform into a sub-viewport: uniform scale, centered, y flipped.
struct Viewport {
    scale: f64,
    offset_x: f64,
    offset_y: f64,
}

impl Viewport {
    fn new(world: &WorldBox, px_x: f64, px_y: f64, px_w: f64, px_h: f64) -> Viewport {
        let scale = (px_w / world.width()).min(px_h / world.height());
        let center_x = (world.min_x + world.max_x) / 2.0;
        let center_y = (world.min_y + world.max_y) / 2.0;
        Viewport {
            scale,
            offset_x: px_x + px_w / 2.0 - center_x * scale,
            offset_y: px_y + px_h / 2.0 + center_y * scale,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (self.offset_x + x * self.scale, self.offset_y - y * self.scale)
    }
}

fn path_element(shape: &ConvexPolygon, stroke: &str, vp: &Viewport) -> String {
    let mut d = String::new();
    for (i, v) in shape.vertices().iter().enumerate() {
        let (x, y) = vp.map(v.x, v.y);
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd} {x:.3} {y:.3} "));
    }
    d.push('Z');
    format!(
        "  <path d=\"{d}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"1.5\" stroke-linejoin=\"round\"/>\n"
    )
}

fn document(spec: &RenderSpec, body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>\n{body}</svg>\n",
        w = spec.width,
        h = spec.height,
    )
}

/// All layers in one shared viewport, with a legend in the top-left corner.
pub fn overlay(layers: &[Layer], spec: &RenderSpec) -> String {
    let world = WorldBox::of(layers);
    let vp = Viewport::new(&world, 0.0, 0.0, spec.width as f64, spec.height as f64);
    let mut body = String::new();
    for layer in layers {
        body.push_str(&path_element(layer.shape, layer.stroke, &vp));
    }
    for (i, layer) in layers.iter().enumerate() {
        body.push_str(&format!(
            "  <text x=\"10\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" fill=\"{}\">{}</text>\n",
            20 + 18 * i,
            layer.stroke,
            layer.label
        ));
    }
    document(spec, &body)
}

/// A 2x2 grid of panels, one layer each, sharing the common world box.
/// Panels beyond the fourth are ignored; missing panels stay blank.
pub fn panels(layers: &[Layer], spec: &RenderSpec) -> String {
    let world = WorldBox::of(layers);
    let (half_w, half_h) = (spec.width as f64 / 2.0, spec.height as f64 / 2.0);
    let mut body = String::new();
    for (i, layer) in layers.iter().take(4).enumerate() {
        let col = (i % 2) as f64;
        let row = (i / 2) as f64;
        let (px, py) = (col * half_w, row * half_h);
        // Inset the drawing area to leave room for the panel title.
        let vp = Viewport::new(&world, px + 8.0, py + 24.0, half_w - 16.0, half_h - 32.0);
        body.push_str(&path_element(layer.shape, layer.stroke, &vp));
        body.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#444444\">{}</text>\n",
            px + 10.0,
            py + 17.0,
            layer.label
        ));
    }
    body.push_str(&format!(
        "  <line x1=\"{half_w}\" y1=\"0\" x2=\"{half_w}\" y2=\"{}\" stroke=\"#cccccc\"/>\n",
        spec.height
    ));
    body.push_str(&format!(
        "  <line x1=\"0\" y1=\"{half_h}\" x2=\"{}\" y2=\"{half_h}\" stroke=\"#cccccc\"/>\n",
        spec.width
    ));
    document(spec, &body)
}
