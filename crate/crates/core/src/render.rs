//! SVG drawings of packings and the aspect-ratio scatter data.
//!
//! All numbers are written with six fixed decimals so output is byte-stable.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::packclass::PackingRealization;
use crate::search::SearchResult;
use crate::theory;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Pixels per circle radius.
    pub scale: f64,
    pub stroke_width: f64,
    pub show_holes: bool,
    pub show_labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { scale: 20.0, stroke_width: 1.0, show_holes: true, show_labels: false }
    }
}

fn num(x: f64) -> String {
    // avoid "-0.000000"
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        "0.000000".into()
    } else {
        s
    }
}

pub fn to_svg(r: &PackingRealization, opts: &RenderOptions) -> Result<String> {
    if opts.scale.is_nan() || opts.scale <= 0.0 {
        return Err(Error::InvalidParameter(format!("scale must be positive, got {}", opts.scale)));
    }
    r.validate(1e-9)?;
    let k = opts.scale;
    let (w, h) = (r.width * k, r.height * k);
    let rad = r.radius * k;
    // SVG y grows downward; flip so the first row sits at the bottom.
    let px = |x: f64| num(x * k);
    let py = |y: f64| num((r.height - y) * k);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        num(w),
        num(h),
        num(w),
        num(h)
    );
    let _ = writeln!(
        svg,
        "<rect class=\"container\" x=\"0.000000\" y=\"0.000000\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>",
        num(w),
        num(h),
        num(opts.stroke_width)
    );
    for (i, &(x, y)) in r.centers.iter().enumerate() {
        let _ = writeln!(
            svg,
            "<circle class=\"disk\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#cfdcf0\" stroke=\"black\" stroke-width=\"{}\"/>",
            px(x),
            py(y),
            num(rad),
            num(opts.stroke_width)
        );
        if opts.show_labels {
            let _ = writeln!(
                svg,
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
                px(x),
                py(y),
                num(rad * 0.8),
                i + 1
            );
        }
    }
    if opts.show_holes {
        for &(x, y) in &r.holes {
            let _ = writeln!(
                svg,
                "<circle class=\"hole\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-dasharray=\"4 3\"/>",
                px(x),
                py(y),
                num(rad),
                num(opts.stroke_width)
            );
            let _ = writeln!(
                svg,
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">?</text>",
                px(x),
                py(y),
                num(rad)
            );
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Whether every optimum for this n is a pure hexagonal block.
pub fn is_hex_optimal(r: &SearchResult) -> bool {
    r.argmin.iter().all(|c| c.h >= 2 && c.s == 0)
}

/// `n,aspect` rows for n whose optima are pure hexagonal blocks; square
/// grid optima and ties involving hybrids are left out. A final `ref` row
/// carries the limiting ratio `2 − √3`.
pub fn aspect_scatter_csv<'a>(results: impl IntoIterator<Item = &'a SearchResult>) -> String {
    let mut out = String::from("n,aspect\n");
    for r in results.into_iter().filter(|r| is_hex_optimal(r)) {
        let _ = writeln!(out, "{},{}", r.n, num(r.primary().aspect_ratio()));
    }
    let _ = writeln!(out, "ref,{}", num(theory::limit_ratio_exact().to_f64()));
    out
}
