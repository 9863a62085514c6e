//! CSV and SVG renderings of a sampled motion.

use crate::document::format_decimal;
use anyhow::{Context, Result};
use std::fmt::Write as _;
use std::path::Path;
use symflex_core::colourings::{Colour, ThreeColouring};
use symflex_core::flexes::{sample_flex, ParametricFlex};
use symflex_core::SymmetricGraph;

/// One row per vertex per frame, frames in ascending parameter order.
pub fn write_csv(
    g: &SymmetricGraph,
    flex: &ParametricFlex,
    frames: usize,
    path: &Path,
) -> Result<()> {
    let samples = sample_flex(flex, frames).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut out = String::from("t,vertex,x,y\n");
    for (t, positions) in &samples {
        for u in 0..g.vertex_count() as u32 {
            let p = positions[u as usize];
            writeln!(
                out,
                "{},{},{},{}",
                format_decimal(*t),
                g.vertex_name(u),
                format_decimal(p[0]),
                format_decimal(p[1])
            )
            .expect("string write");
        }
    }
    std::fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn stroke(colour: Option<Colour>) -> &'static str {
    match colour {
        Some(Colour::Red) => "#c0392b",
        Some(Colour::Blue) => "#2e6fb7",
        Some(Colour::Gold) => "#d4a017",
        None => "#777777",
    }
}

/// One SVG file per frame, with a shared view box covering the whole motion
/// and the mirror axis drawn.
pub fn write_svg_frames(
    g: &SymmetricGraph,
    flex: &ParametricFlex,
    colouring: Option<&ThreeColouring>,
    frames: usize,
    dir: &Path,
) -> Result<Vec<std::path::PathBuf>> {
    let samples = sample_flex(flex, frames).map_err(|e| anyhow::anyhow!("{e}"))?;
    let (mut min_x, mut min_y, mut max_x, mut max_y) =
        (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (_, positions) in &samples {
        for p in positions {
            min_x = min_x.min(p[0]);
            max_x = max_x.max(p[0]);
            min_y = min_y.min(p[1]);
            max_y = max_y.max(p[1]);
        }
    }
    min_x = min_x.min(0.0);
    max_x = max_x.max(0.0);
    let margin = 0.08 * (max_x - min_x).max(max_y - min_y).max(1.0);
    let (x0, y0) = (min_x - margin, min_y - margin);
    let (w, h) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let view = format!(
        "{} {} {} {}",
        format_decimal(x0),
        format_decimal(-y0 - h),
        format_decimal(w),
        format_decimal(h)
    );
    let radius = format_decimal(0.02 * w.max(h));
    let width = format_decimal(0.008 * w.max(h));
    let mut written = Vec::new();
    for (i, (_, positions)) in samples.iter().enumerate() {
        let mut svg = String::new();
        writeln!(
            svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view}\" width=\"480\">"
        )
        .unwrap();
        // y grows upwards in the plane; flip into SVG coordinates
        writeln!(
            svg,
            "  <line x1=\"0\" y1=\"{}\" x2=\"0\" y2=\"{}\" stroke=\"#bbbbbb\" \
             stroke-width=\"{width}\" stroke-dasharray=\"0.1,0.06\"/>",
            format_decimal(-y0 - h),
            format_decimal(-y0)
        )
        .unwrap();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let (p, q) = (positions[u as usize], positions[v as usize]);
            writeln!(
                svg,
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" \
                 stroke-width=\"{width}\" stroke-linecap=\"round\"/>",
                format_decimal(p[0]),
                format_decimal(-p[1]),
                format_decimal(q[0]),
                format_decimal(-q[1]),
                stroke(colouring.map(|c| c.get(e)))
            )
            .unwrap();
        }
        for p in positions {
            writeln!(
                svg,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"#222222\"/>",
                format_decimal(p[0]),
                format_decimal(-p[1])
            )
            .unwrap();
        }
        svg.push_str("</svg>\n");
        let path = dir.join(format!("frame_{i:04}.svg"));
        std::fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}
