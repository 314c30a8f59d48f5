//! SVG rendering of lattice paths.
//!
//! The a-axis points right and the b-axis up. All coordinates are integer
//! multiples of the cell size, so the output is a pure function of the
//! [`RenderSpec`].

use std::fmt::Write as _;

use cklein_core::element::{evaluate, lattice_path, par, PathVertex};
use cklein_core::word::{format_word, Word};
use cklein_core::young::{young_decomposition, YoungDecomposition, YoungDiagram};

use crate::error::CliError;

pub const DEFAULT_CELL_SIZE: u32 = 40;

/// Largest viewport side, in cells.
pub const MAX_CELLS: i64 = 2048;

const UPPER_FILL: [&str; 2] = ["#4f81bd", "#2c4f7c"];
const LOWER_FILL: [&str; 2] = ["#f5a623", "#b8741a"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub word: Word,
    pub cell_size: u32,
    /// Per-cell orientation glyphs: clockwise in even columns,
    /// counterclockwise in odd ones.
    pub cells: bool,
    /// Shade the Young decomposition and draw its rectangle.
    pub young: bool,
}

impl RenderSpec {
    pub fn new(word: Word) -> Self {
        RenderSpec {
            word,
            cell_size: DEFAULT_CELL_SIZE,
            cells: false,
            young: false,
        }
    }
}

struct Frame {
    x0: i64,
    y1: i64,
    cs: i64,
    width: i64,
    height: i64,
}

impl Frame {
    fn px(&self, x: i64) -> i64 {
        (x - self.x0 + 1) * self.cs
    }

    fn py(&self, y: i64) -> i64 {
        (self.y1 - y + 1) * self.cs
    }
}

pub fn render_svg(spec: &RenderSpec) -> Result<String, CliError> {
    if spec.cell_size < 8 || spec.cell_size > 400 {
        return Err(CliError::Parse(format!(
            "cell size {} outside 8..=400",
            spec.cell_size
        )));
    }
    let path = lattice_path(&spec.word)?;
    let young = if spec.young {
        Some(young_decomposition(&spec.word)?)
    } else {
        None
    };
    let mut xs: Vec<i64> = path.iter().map(|v| v.x).collect();
    let mut ys: Vec<i64> = path.iter().map(|v| v.y).collect();
    if let Some(d) = &young {
        xs.extend([d.rectangle.x_min(), d.rectangle.x_max()]);
        ys.extend([d.rectangle.y_min(), d.rectangle.y_max()]);
    }
    let (x0, x1) = (*xs.iter().min().unwrap_or(&0), *xs.iter().max().unwrap_or(&0));
    let (y0, y1) = (*ys.iter().min().unwrap_or(&0), *ys.iter().max().unwrap_or(&0));
    let (cols, rows) = (x1 - x0 + 2, y1 - y0 + 2);
    if cols > MAX_CELLS || rows > MAX_CELLS {
        return Err(CliError::Resource(format!(
            "viewport of {cols}x{rows} cells exceeds {MAX_CELLS}"
        )));
    }
    let cs = i64::from(spec.cell_size);
    let f = Frame {
        x0,
        y1,
        cs,
        width: cols * cs,
        height: rows * cs,
    };

    let mut s = String::new();
    let (w, h) = (f.width, f.height);
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(
        s,
        "<title>{} = {}</title>",
        if spec.word.is_empty() { "1".to_string() } else { format_word(&spec.word) },
        evaluate(&spec.word)?
    );
    let _ = writeln!(s, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
    if let Some(d) = &young {
        young_layer(&mut s, &f, &path, d);
    }
    grid_layer(&mut s, &f, x0, x1, y0, y1);
    if spec.cells {
        orientation_layer(&mut s, &f, x0, x1, y0, y1);
    }
    if let Some(d) = &young {
        rectangle_layer(&mut s, &f, d);
    }
    let points: Vec<String> = path
        .iter()
        .map(|v| format!("{},{}", f.px(v.x), f.py(v.y)))
        .collect();
    let _ = writeln!(
        s,
        "<polyline id=\"path\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-linejoin=\"round\" stroke-linecap=\"round\"/>",
        points.join(" "),
        (cs / 12).max(2)
    );
    let last = path.last().copied().unwrap_or(PathVertex { x: 0, y: 0, area: 0 });
    let r = (cs / 6).max(3);
    let _ = writeln!(
        s,
        "<circle id=\"end\" cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>",
        f.px(last.x),
        f.py(last.y)
    );
    let _ = writeln!(
        s,
        "<circle id=\"start\" cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"red\"/>",
        f.px(0),
        f.py(0)
    );
    s.push_str("</svg>\n");
    Ok(s)
}

fn grid_layer(s: &mut String, f: &Frame, x0: i64, x1: i64, y0: i64, y1: i64) {
    s.push_str("<g id=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n");
    for x in x0 - 1..=x1 + 1 {
        let _ = writeln!(s, "<line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{1}\"/>", f.px(x), f.height);
    }
    for y in y0 - 1..=y1 + 1 {
        let _ = writeln!(s, "<line x1=\"0\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\"/>", f.py(y), f.width);
    }
    s.push_str("</g>\n");
    let _ = writeln!(
        s,
        "<g id=\"axes\" stroke=\"#808080\" stroke-width=\"2\">\n<line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{1}\"/>\n<line x1=\"0\" y1=\"{2}\" x2=\"{3}\" y2=\"{2}\"/>\n</g>",
        f.px(0),
        f.height,
        f.py(0),
        f.width
    );
}

fn orientation_layer(s: &mut String, f: &Frame, x0: i64, x1: i64, y0: i64, y1: i64) {
    let size = f.cs / 2;
    let _ = writeln!(
        s,
        "<g id=\"orientation\" font-family=\"sans-serif\" font-size=\"{size}\" text-anchor=\"middle\" fill=\"#909090\">"
    );
    for x in x0 - 1..=x1 {
        let glyph = if par(x) == 0 { "&#x21BB;" } else { "&#x21BA;" };
        for y in y0 - 1..=y1 {
            let _ = writeln!(
                s,
                "<text x=\"{}\" y=\"{}\">{glyph}</text>",
                f.px(x) + f.cs / 2,
                f.py(y) - f.cs / 2 + size / 3
            );
        }
    }
    s.push_str("</g>\n");
}

/// Horizontal steps of the path as `(left column edge, strip height)`.
fn strips(path: &[PathVertex]) -> Vec<(i64, i64)> {
    path.windows(2)
        .filter(|p| p[0].x != p[1].x)
        .map(|p| (p[0].x.min(p[1].x), p[0].y))
        .collect()
}

fn young_layer(s: &mut String, f: &Frame, path: &[PathVertex], d: &YoungDecomposition) {
    let strips = strips(path);
    let y_max = d.rectangle.y_max();
    s.push_str("<g id=\"young\" fill-opacity=\"0.35\" stroke=\"none\">\n");
    let mut shade = |diagrams: &[YoungDiagram], fills: [&str; 2], upper: bool| {
        for (i, diagram) in diagrams.iter().enumerate() {
            for (j, &height) in diagram.heights.iter().enumerate() {
                let Some(&(x, strip)) = strips.get(diagram.start + j) else {
                    continue;
                };
                let top = if upper { y_max } else { strip };
                let _ = writeln!(
                    s,
                    "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
                    f.px(x),
                    f.py(top),
                    f.cs,
                    height as i64 * f.cs,
                    fills[i % 2]
                );
            }
        }
    };
    shade(&d.upper, UPPER_FILL, true);
    shade(&d.lower, LOWER_FILL, false);
    s.push_str("</g>\n");
}

fn rectangle_layer(s: &mut String, f: &Frame, d: &YoungDecomposition) {
    let r = &d.rectangle;
    let _ = writeln!(
        s,
        "<rect id=\"rectangle\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#3060a0\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>",
        f.px(r.x_min()),
        f.py(r.y_max()),
        (r.x_max() - r.x_min()) * f.cs,
        (r.y_max() - r.y_min()) * f.cs
    );
    let size = f.cs / 3;
    let _ = writeln!(
        s,
        "<g id=\"corners\" font-family=\"sans-serif\" font-size=\"{size}\" fill=\"#3060a0\">"
    );
    for (label, (x, y)) in [("A", r.a), ("B", r.b), ("C", r.c), ("D", r.d)] {
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\">{label}</text>",
            f.px(x) + 3,
            f.py(y) - 3
        );
    }
    s.push_str("</g>\n");
}
