//! SVG drawings of stick representations.
//!
//! A foot at parameter `p` is drawn at `(p, p)` in SVG coordinates (the
//! y axis points down), so the ground line has slope −1 on screen. Vertical
//! sticks go up from their foot, horizontal ones go right.

use std::fmt::Write;

use stickkit_core::rational::to_f64;
use stickkit_core::{components, Instance, Rational, Representation, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorBy {
    Set,
    Component,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Pixels per unit.
    pub scale: Rational,
    pub show_labels: bool,
    pub color_by: ColorBy,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { scale: Rational::from_integer(40), show_labels: true, color_by: ColorBy::Set }
    }
}

const PALETTE: [&str; 8] = ["#1b6ca8", "#c0392b", "#27865a", "#8e44ad", "#d68910", "#117a65", "#7b241c", "#2e4053"];
const MARGIN: f64 = 20.0;

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        String::from("0")
    } else {
        String::from(s)
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn render_svg(inst: &Instance, rep: &Representation, opts: &RenderOptions) -> String {
    let scale = to_f64(&opts.scale);
    let sticks: Vec<Vertex> = inst.vertices().collect();
    let mut color = vec![0usize; inst.num_vertices()];
    let slot = |v: Vertex| if v.is_a() { v.index } else { inst.num_a() + v.index };
    match opts.color_by {
        ColorBy::Set => sticks.iter().for_each(|&v| color[slot(v)] = usize::from(!v.is_a())),
        ColorBy::Component => {
            for (k, comp) in components(inst).iter().enumerate() {
                comp.iter().for_each(|&v| color[slot(v)] = k % PALETTE.len());
            }
        }
    }

    // Bounding box in unscaled coordinates.
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut top = 0.0f64;
    if let Some(first) = sticks.first() {
        lo = to_f64(&rep.foot(*first));
        hi = lo;
        top = lo;
    }
    for &v in &sticks {
        let (p, len) = (to_f64(&rep.foot(v)), to_f64(&rep.length(v)));
        lo = lo.min(p);
        hi = hi.max(if v.is_a() { p } else { p + len });
        top = top.min(if v.is_a() { p - len } else { p });
        hi = hi.max(p);
    }
    let x = |u: f64| MARGIN + (u - lo) * scale;
    let y = |u: f64| MARGIN + (u - top) * scale;
    let width = x(hi) + MARGIN;
    let bottom = sticks.iter().map(|&v| to_f64(&rep.foot(v))).fold(if sticks.is_empty() { 1.0 } else { lo }, f64::max);
    let height = y(bottom) + MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(width),
        num(height),
        num(width),
        num(height)
    );
    let (g0, g1) = if sticks.is_empty() {
        (0.0, 1.0)
    } else {
        let feet = sticks.iter().map(|&v| to_f64(&rep.foot(v)));
        (feet.clone().fold(f64::INFINITY, f64::min), feet.fold(f64::NEG_INFINITY, f64::max))
    };
    let _ = writeln!(
        out,
        r##"<line class="ground" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999999" stroke-width="1"/>"##,
        num(x(g0)),
        num(y(g0)),
        num(x(g1)),
        num(y(g1))
    );
    for &v in &sticks {
        let (p, len) = (to_f64(&rep.foot(v)), to_f64(&rep.length(v)));
        let (x2, y2) = if v.is_a() { (p, p - len) } else { (p + len, p) };
        let _ = writeln!(
            out,
            r#"<line class="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="2"/>"#,
            if v.is_a() { "vertical" } else { "horizontal" },
            num(x(p)),
            num(y(p)),
            num(x(x2)),
            num(y(y2)),
            PALETTE[color[slot(v)]]
        );
    }
    if opts.show_labels {
        for &v in &sticks {
            let p = to_f64(&rep.foot(v));
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="10" font-family="sans-serif">{}</text>"#,
                num(x(p) + 3.0),
                num(y(p) + 11.0),
                escape(inst.name(v))
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
