//! SVG drawings of snakes, wug-snakes and embeddings. One unit cell is 32px.

use std::fmt::Write;

use crate::classic::Cell;
use crate::error::{Error, Result};
use crate::lattice::Embedding;
use crate::wugsnake::WugSnake;

pub const UNIT: i64 = 32;
const MARGIN: i64 = 16;
const HEAD_FILL: &str = "#b7e4a7";
const BODY_FILL: &str = "#a9c8f0";

fn header(w: i64, h: i64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    )
}

/// Squares in the plane, `y` pointing up; the first `head` cells are tinted.
pub fn cells_svg(cells: &[Cell], head: usize) -> Result<String> {
    if cells.is_empty() {
        return Err(Error::InvalidInput("nothing to draw".into()));
    }
    let min_x = cells.iter().map(|c| c.0).min().unwrap();
    let max_x = cells.iter().map(|c| c.0).max().unwrap();
    let min_y = cells.iter().map(|c| c.1).min().unwrap();
    let max_y = cells.iter().map(|c| c.1).max().unwrap();
    let w = (max_x - min_x + 1) * UNIT + 2 * MARGIN;
    let h = (max_y - min_y + 1) * UNIT + 2 * MARGIN;
    let mut s = header(w, h);
    for (k, &(x, y)) in cells.iter().enumerate() {
        let px = MARGIN + (x - min_x) * UNIT;
        let py = MARGIN + (max_y - y) * UNIT;
        let fill = if k < head { HEAD_FILL } else { BODY_FILL };
        writeln!(
            s,
            "  <rect x=\"{px}\" y=\"{py}\" width=\"{UNIT}\" height=\"{UNIT}\" fill=\"{fill}\" stroke=\"black\"/>"
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Planar embedding with the head tinted and the last cell outlined in red.
pub fn embedding2_svg(e: &Embedding) -> Result<String> {
    if e.dim != 2 {
        return Err(Error::DimensionMismatch(format!(
            "{}-dimensional embedding",
            e.dim
        )));
    }
    let cells: Vec<Cell> = e.cells.iter().map(|c| (c[0], c[1])).collect();
    let mut s = cells_svg(&cells, e.head + 1)?;
    let max_y = cells.iter().map(|c| c.1).max().unwrap();
    let min_x = cells.iter().map(|c| c.0).min().unwrap();
    let centre = |c: Cell| {
        (
            MARGIN + (c.0 - min_x) * UNIT + UNIT / 2,
            MARGIN + (max_y - c.1) * UNIT + UNIT / 2,
        )
    };
    let (x0, y0) = centre(cells[e.head]);
    let (x1, y1) = centre(cells[e.last]);
    s.truncate(s.len() - "</svg>\n".len());
    writeln!(
        s,
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y1}\" stroke=\"red\" stroke-width=\"2\"/>"
    )
    .unwrap();
    s.push_str("</svg>\n");
    Ok(s)
}

/// Cubes in an isometric view, drawn back to front.
pub fn embedding3_svg(e: &Embedding) -> Result<String> {
    if e.dim != 3 {
        return Err(Error::DimensionMismatch(format!(
            "{}-dimensional embedding",
            e.dim
        )));
    }
    // screen position of a lattice point, before offsetting
    let proj = |x: i64, y: i64, z: i64| -> (f64, f64) {
        let u = UNIT as f64;
        (
            (x - y) as f64 * u * 0.866,
            (x + y) as f64 * u * 0.5 - z as f64 * u,
        )
    };
    let mut order: Vec<usize> = (0..e.cells.len()).collect();
    order.sort_by_key(|&k| {
        let c = &e.cells[k];
        (c[0] + c[1] + c[2], c[2], k)
    });
    let mut pts = Vec::new();
    for c in &e.cells {
        for dx in 0..2 {
            for dy in 0..2 {
                for dz in 0..2 {
                    pts.push(proj(c[0] + dx, c[1] + dy, c[2] + dz));
                }
            }
        }
    }
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let m = MARGIN as f64;
    let w = (max_x - min_x + 2.0 * m).ceil() as i64;
    let h = (max_y - min_y + 2.0 * m).ceil() as i64;
    let mut s = header(w, h);
    for k in order {
        let c = &e.cells[k];
        let p = |dx, dy, dz| {
            let (a, b) = proj(c[0] + dx, c[1] + dy, c[2] + dz);
            format!("{:.1},{:.1}", a - min_x + m, b - min_y + m)
        };
        let fill = if k == e.head { HEAD_FILL } else { BODY_FILL };
        let faces = [
            // top
            [p(0, 0, 1), p(1, 0, 1), p(1, 1, 1), p(0, 1, 1)],
            // front faces toward the viewer
            [p(1, 0, 0), p(1, 1, 0), p(1, 1, 1), p(1, 0, 1)],
            [p(0, 1, 0), p(1, 1, 0), p(1, 1, 1), p(0, 1, 1)],
        ];
        for f in faces {
            writeln!(
                s,
                "  <polygon points=\"{}\" fill=\"{fill}\" stroke=\"black\"/>",
                f.join(" ")
            )
            .unwrap();
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Bipartite drawing: `u_i` on top, `v_j` below, weights at edge midpoints.
///
/// The first `head` vertices of each side are tinted.
pub fn wug_svg(w: &WugSnake, head: usize) -> Result<String> {
    let n = w.len() as i64;
    if n == 0 {
        return Err(Error::InvalidInput("empty wug-snake".into()));
    }
    let gap = 3 * UNIT;
    let width = n * UNIT + 2 * MARGIN;
    let height = gap + 2 * MARGIN + UNIT;
    let ux = |i: i64| MARGIN + (i - 1) * UNIT + UNIT / 2;
    let (top, bottom) = (MARGIN + UNIT / 2, MARGIN + UNIT / 2 + gap);
    let mut s = header(width, height);
    let edge = |s: &mut String, i: i64, j: i64, label: String| {
        let (x0, x1) = (ux(i), ux(j));
        writeln!(
            s,
            "  <line x1=\"{x0}\" y1=\"{top}\" x2=\"{x1}\" y2=\"{bottom}\" stroke=\"black\"/>"
        )
        .unwrap();
        if !label.is_empty() {
            let mx = (x0 + x1) / 2;
            let my = (top + bottom) / 2;
            writeln!(
                s,
                "  <text x=\"{mx}\" y=\"{my}\" font-size=\"11\" text-anchor=\"middle\">{label}</text>"
            )
            .unwrap();
        }
    };
    for j in 1..n {
        edge(&mut s, j + 1, j, String::new());
    }
    for (i, j, x) in w.triples() {
        let label = if x == 1.into() {
            String::new()
        } else {
            x.to_string()
        };
        edge(&mut s, i as i64, j as i64, label);
    }
    for k in 1..=n {
        let fill = if (k as usize) <= head {
            HEAD_FILL
        } else {
            "white"
        };
        for (y, name) in [(top, "u"), (bottom, "v")] {
            writeln!(
                s,
                "  <circle cx=\"{}\" cy=\"{y}\" r=\"6\" fill=\"{fill}\" stroke=\"black\"><title>{name}{k}</title></circle>",
                ux(k)
            )
            .unwrap();
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
