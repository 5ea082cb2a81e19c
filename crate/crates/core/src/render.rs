//! Deterministic SVG output. Elements are emitted in a fixed order and all
//! coordinates are printed with three decimals, so equal inputs give
//! byte-identical files.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::aztec::{frozen_mask, DominoTiling, DominoType, Orientation};
use crate::error::{Error, Result};
use crate::shape::r_field;
use crate::tableaux::{Jump, JumpSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ColorBy {
    /// Four classes: orientation together with the checkerboard colour of the
    /// lower-left cell, i.e. north, south, east and west dominoes.
    #[default]
    TypeParity,
    /// Horizontal versus vertical.
    Orientation,
    /// Polar regions by type, temperate dominoes grey.
    Frozen,
}

impl std::str::FromStr for ColorBy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "type" | "type-parity" => Ok(ColorBy::TypeParity),
            "orientation" => Ok(ColorBy::Orientation),
            "frozen" => Ok(ColorBy::Frozen),
            _ => Err(Error::InvalidArgument(format!(
                "unknown colouring {s:?}; expected type-parity, orientation or frozen"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TilingStyle {
    pub color_by: ColorBy,
    pub overlay_circle: bool,
    /// Pixels per lattice unit.
    pub unit: f64,
}

impl Default for TilingStyle {
    fn default() -> Self {
        TilingStyle { color_by: ColorBy::TypeParity, overlay_circle: false, unit: 12.0 }
    }
}

const TYPE_COLORS: [(DominoType, &str); 4] = [
    (DominoType::North, "#d62728"),
    (DominoType::South, "#1f77b4"),
    (DominoType::East, "#2ca02c"),
    (DominoType::West, "#e6b800"),
];
const TEMPERATE: &str = "#d9d9d9";

fn type_color(t: DominoType) -> &'static str {
    TYPE_COLORS.iter().find(|(k, _)| *k == t).expect("all types listed").1
}

fn header(out: &mut String, w: f64, h: f64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{w:.3}" height="{h:.3}" fill="white"/>"#).unwrap();
}

/// Tiling of `AD_n`, north up. The optional overlay is the circle
/// `x^2 + y^2 = 1/2` in coordinates scaled by `1/n`.
pub fn render_tiling(t: &DominoTiling, style: &TilingStyle) -> String {
    let n = t.order() as f64;
    let u = style.unit;
    let margin = u;
    let side = 2.0 * n * u + 2.0 * margin;
    let mut out = String::new();
    header(&mut out, side, side);
    let d = t.diamond();
    let mask = (style.color_by == ColorBy::Frozen).then(|| frozen_mask(t));
    writeln!(out, r#"<g stroke="black" stroke-width="{:.3}">"#, u / 12.0).unwrap();
    for (k, dom) in t.dominoes().iter().enumerate() {
        let ty = DominoType::of(dom, &d);
        let color = match style.color_by {
            ColorBy::TypeParity => type_color(ty),
            ColorBy::Orientation => match dom.orientation {
                Orientation::Horizontal => type_color(DominoType::North),
                Orientation::Vertical => type_color(DominoType::South),
            },
            ColorBy::Frozen => match mask.as_ref().and_then(|m| m.region(k)) {
                Some(region) => type_color(region),
                None => TEMPERATE,
            },
        };
        let (w, h) = match dom.orientation {
            Orientation::Horizontal => (2.0, 1.0),
            Orientation::Vertical => (1.0, 2.0),
        };
        let x = margin + (dom.x as f64 + n) * u;
        let y = margin + (n - dom.y as f64 - h) * u;
        writeln!(
            out,
            r#"<rect x="{x:.3}" y="{y:.3}" width="{:.3}" height="{:.3}" fill="{color}"/>"#,
            w * u,
            h * u
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if style.overlay_circle {
        let c = margin + n * u;
        writeln!(
            out,
            r#"<circle cx="{c:.3}" cy="{c:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="{:.3}"/>"#,
            n * u * FRAC_1_SQRT_2,
            u / 4.0
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Space-time diagram: position left to right, time running downwards, one
/// polyline per particle.
pub fn render_jumps(j: &JumpSequence, unit: f64) -> Result<String> {
    let jumps: Vec<Jump> = j.replay()?;
    let n = j.order();
    let total = (n * n) as f64;
    let width = 2.0 * n as f64 * unit;
    // time axis scaled so the plot is square
    let dt = width / total;
    let margin = unit;
    let mut out = String::new();
    header(&mut out, width + 2.0 * margin, width + 2.0 * margin);
    let mut paths: Vec<Vec<(f64, f64)>> =
        (1..=n).map(|p| vec![(p as f64 - 0.5, 0.0)]).collect();
    for jump in &jumps {
        let path = &mut paths[jump.particle - 1];
        let t = jump.time as f64 - 0.5;
        path.push((jump.from as f64 - 0.5, t));
        path.push((jump.from as f64 + 0.5, t));
    }
    for (p, path) in paths.iter_mut().enumerate() {
        path.push(((n + p + 1) as f64 - 0.5, total));
    }
    writeln!(out, r#"<g fill="none" stroke="black" stroke-width="{:.3}">"#, unit / 8.0).unwrap();
    for path in &paths {
        let pts: Vec<String> = path
            .iter()
            .map(|&(x, t)| format!("{:.3},{:.3}", margin + x * unit, margin + t * dt))
            .collect();
        writeln!(out, r#"<polyline points="{}"/>"#, pts.join(" ")).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}

/// Values of `R(u, v)` on the `(grid + 1)^2` lattice over `[-1, 1]^2`,
/// `None` outside the diamond `|u| + |v| <= 1`. Rows run over `v`.
pub fn r_field_grid(grid: usize) -> Result<Vec<Vec<Option<f64>>>> {
    if grid < 2 {
        return Err(Error::InvalidArgument("grid needs at least 2 cells".into()));
    }
    let step = 2.0 / grid as f64;
    (0..=grid)
        .map(|b| {
            let v = -1.0 + b as f64 * step;
            (0..=grid)
                .map(|a| {
                    let u = -1.0 + a as f64 * step;
                    if u.abs() + v.abs() <= 1.0 + 1e-12 {
                        r_field(u, v).map(Some)
                    } else {
                        Ok(None)
                    }
                })
                .collect()
        })
        .collect()
}

/// Level-set segments of a gridded field by marching squares; squares with a
/// missing corner are skipped. Coordinates are in grid units.
pub fn contour_segments(field: &[Vec<Option<f64>>], level: f64) -> Vec<[(f64, f64); 2]> {
    let mut segs = Vec::new();
    for b in 0..field.len().saturating_sub(1) {
        for a in 0..field[b].len().saturating_sub(1) {
            let corners = [(a, b), (a + 1, b), (a + 1, b + 1), (a, b + 1)];
            let vals: Option<Vec<f64>> = corners.iter().map(|&(x, y)| field[y][x]).collect();
            let Some(vals) = vals else { continue };
            let mut cuts = Vec::new();
            for e in 0..4 {
                let (p, q) = (e, (e + 1) % 4);
                let (vp, vq) = (vals[p] - level, vals[q] - level);
                if (vp < 0.0) != (vq < 0.0) {
                    let t = vp / (vp - vq);
                    let (xp, yp) = corners[p];
                    let (xq, yq) = corners[q];
                    cuts.push((
                        xp as f64 + t * (xq as f64 - xp as f64),
                        yp as f64 + t * (yq as f64 - yp as f64),
                    ));
                }
            }
            // Saddles give four cuts; pair them in edge order.
            for pair in cuts.chunks_exact(2) {
                segs.push([pair[0], pair[1]]);
            }
        }
    }
    segs
}

/// Contour plot of the limiting height function `R` with the arctic circle.
pub fn render_shape(grid: usize, levels: usize, unit: f64) -> Result<String> {
    let field = r_field_grid(grid)?;
    let (lo, hi) = field
        .iter()
        .flatten()
        .flatten()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
    let size = grid as f64 * unit;
    let margin = 10.0;
    let mut out = String::new();
    header(&mut out, size + 2.0 * margin, size + 2.0 * margin);
    let c = margin + size / 2.0;
    writeln!(
        out,
        r#"<polygon points="{c:.3},{m:.3} {r:.3},{c:.3} {c:.3},{r:.3} {m:.3},{c:.3}" fill="none" stroke="black"/>"#,
        m = margin,
        r = margin + size
    )
    .unwrap();
    writeln!(
        out,
        r##"<circle cx="{c:.3}" cy="{c:.3}" r="{:.3}" fill="none" stroke="#d62728" stroke-dasharray="4 3"/>"##,
        size / 2.0 * FRAC_1_SQRT_2
    )
    .unwrap();
    writeln!(out, r##"<g stroke="#1f77b4" stroke-width="1">"##).unwrap();
    for l in 1..=levels {
        let level = lo + (hi - lo) * l as f64 / (levels + 1) as f64;
        for [(x0, y0), (x1, y1)] in contour_segments(&field, level) {
            writeln!(
                out,
                r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
                margin + x0 * unit,
                margin + size - y0 * unit,
                margin + x1 * unit,
                margin + size - y1 * unit
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aztec::sample_tiling;
    use crate::tableaux::{sample_tableau, tableau_to_jumps};

    #[test]
    fn tiling_svg_has_one_rect_per_domino() {
        let t = sample_tiling(3, 1);
        for color_by in [ColorBy::TypeParity, ColorBy::Orientation, ColorBy::Frozen] {
            let style = TilingStyle { color_by, overlay_circle: true, unit: 10.0 };
            let svg = render_tiling(&t, &style);
            // background plus 12 dominoes
            assert_eq!(svg.matches("<rect").count(), 13);
            assert_eq!(svg.matches("<circle").count(), 1);
            assert_eq!(svg, render_tiling(&t, &style));
        }
    }

    #[test]
    fn jump_plot_has_one_path_per_particle() {
        let j = tableau_to_jumps(&sample_tableau(5, 2));
        let svg = render_jumps(&j, 10.0).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 5);
    }

    #[test]
    fn contours_of_a_plane() {
        let field: Vec<Vec<Option<f64>>> =
            (0..3).map(|b| (0..3).map(|a| Some(a as f64 + 0.1 * b as f64)).collect()).collect();
        let segs = contour_segments(&field, 0.5);
        assert_eq!(segs.len(), 2);
        for [p, q] in segs {
            assert!((0.25..=0.5).contains(&p.0) && (0.25..=0.5).contains(&q.0));
        }
        let svg = render_shape(20, 5, 8.0).unwrap();
        assert!(svg.matches("<line").count() > 20);
    }
}
