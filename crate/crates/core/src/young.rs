//! Young-diagram decomposition of geodesic lattice paths.
//!
//! A geodesic of a normalized element crosses each column strip at some
//! height. Measured against a bounding rectangle, the strip heights above the
//! path (`upper`) and below it (`lower`) are cut into maximal weakly monotone
//! runs; each run is one Young diagram. The rectangle comes from the sign of
//! `(k, m)`:
//!
//! | case                 | A          | B          | C        | D        |
//! |----------------------|------------|------------|----------|----------|
//! | `k < 0`, `-k > m`    | `(n, k+m)` | `(0, k+m)` | `(0,-k)` | `(n,-k)` |
//! | `k > 0`              | `(n, k+m)` | `(0, k+m)` | `(0,-k)` | `(n,-k)` |
//! | otherwise            | `(n, 0)`   | `(0, 0)`   | `(0, m)` | `(n, m)` |
//!
//! For `n = 0` loops the x-range is widened to the column the loop visits.

use alloc::vec::Vec;

use thiserror::Error;

use crate::element::{alternating_sign, evaluate, lattice_path, Element, Overflow};
use crate::geodesic::is_geodesic;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error("{0} is not in the quadrant m, n >= 0")]
    NotNormalized(Element),
    #[error("word is not geodesic")]
    NotGeodesic,
    #[error("path shape is not a monotone staircase or a single loop")]
    UnsupportedShape,
    #[error("upper and lower diagrams disagree")]
    Inconsistent,
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// Corners as `(x, y)`: `A`, `D` on the right edge, `B`, `C` on the left;
/// `A`, `B` share one horizontal edge and `C`, `D` the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rectangle {
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub c: (i64, i64),
    pub d: (i64, i64),
}

impl Rectangle {
    fn new(x_min: i64, x_max: i64, y1: i64, y2: i64) -> Self {
        Rectangle {
            a: (x_max, y1),
            b: (x_min, y1),
            c: (x_min, y2),
            d: (x_max, y2),
        }
    }

    pub fn x_min(&self) -> i64 {
        self.b.0
    }

    pub fn x_max(&self) -> i64 {
        self.a.0
    }

    pub fn y_min(&self) -> i64 {
        self.a.1.min(self.c.1)
    }

    pub fn y_max(&self) -> i64 {
        self.a.1.max(self.c.1)
    }
}

/// Rectangle of a normalized element, x-range `[0, n]`.
pub fn reference_rectangle(g: &Element) -> Result<Rectangle, Overflow> {
    let Element { k, m, n } = *g;
    let km = k.checked_add(m).ok_or(Overflow)?;
    let neg_k = k.checked_neg().ok_or(Overflow)?;
    let dominant_negative = k < 0 && k.unsigned_abs() > m.unsigned_abs();
    Ok(if k > 0 || dominant_negative {
        Rectangle::new(0, n, km, neg_k)
    } else {
        Rectangle::new(0, n, 0, m)
    })
}

/// Column heights of one Young diagram, starting at horizontal step `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    pub start: usize,
    pub heights: Vec<u64>,
}

impl YoungDiagram {
    /// Row-length partition (heights sorted in decreasing order).
    fn partition(&self) -> Vec<u64> {
        let mut p = self.heights.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    pub fn is_sub_diagram_of(&self, other: &YoungDiagram) -> bool {
        let (p, q) = (self.partition(), other.partition());
        p.len() <= q.len() && p.iter().zip(&q).all(|(a, b)| a <= b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungDecomposition {
    pub element: Element,
    pub rectangle: Rectangle,
    pub upper: Vec<YoungDiagram>,
    pub lower: Vec<YoungDiagram>,
}

fn split_into_diagrams(heights: &[u64]) -> Vec<YoungDiagram> {
    let mut out: Vec<YoungDiagram> = Vec::new();
    // direction of the current run: 0 flat so far, 1 rising, -1 falling
    let mut dir = 0i8;
    let mut open = false;
    for (i, &h) in heights.iter().enumerate() {
        if h == 0 {
            open = false;
            continue;
        }
        if open {
            let run = out.last_mut().expect("open run");
            let prev = *run.heights.last().expect("nonempty run");
            let step = match h.cmp(&prev) {
                core::cmp::Ordering::Greater => 1,
                core::cmp::Ordering::Less => -1,
                core::cmp::Ordering::Equal => 0,
            };
            if step == 0 || dir == 0 || step == dir {
                if dir == 0 {
                    dir = step;
                }
                run.heights.push(h);
                continue;
            }
        }
        out.push(YoungDiagram {
            start: i,
            heights: alloc::vec![h],
        });
        dir = 0;
        open = true;
    }
    out
}

fn expand(diagrams: &[YoungDiagram], len: usize) -> Result<Vec<u64>, YoungError> {
    let mut heights = alloc::vec![0u64; len];
    for d in diagrams {
        for (i, &h) in d.heights.iter().enumerate() {
            let slot = heights.get_mut(d.start + i).ok_or(YoungError::Inconsistent)?;
            *slot = h;
        }
    }
    Ok(heights)
}

/// Directions (`+1` for `a`, `-1` for `a^-1`) of the horizontal steps of a
/// geodesic for `g` spanning `rect`.
fn step_directions(g: &Element, rect: &Rectangle) -> Result<Vec<i64>, YoungError> {
    match (g.n, rect.x_min(), rect.x_max()) {
        (n, 0, x) if n >= 1 && x == n => Ok(alloc::vec![1; n as usize]),
        (0, 0, 0) => Ok(Vec::new()),
        (0, 0, 1) => Ok(alloc::vec![1, -1]),
        (0, -1, 0) => Ok(alloc::vec![-1, 1]),
        _ => Err(YoungError::UnsupportedShape),
    }
}

pub fn young_decomposition(w: &Word) -> Result<YoungDecomposition, YoungError> {
    let g = evaluate(w)?;
    if !g.is_normalized() {
        return Err(YoungError::NotNormalized(g));
    }
    if !is_geodesic(w)? {
        return Err(YoungError::NotGeodesic);
    }
    let path = lattice_path(w)?;
    let mut heights = Vec::new();
    let mut directions = Vec::new();
    for pair in path.windows(2) {
        if pair[0].x != pair[1].x {
            heights.push(pair[0].y);
            directions.push(pair[1].x - pair[0].x);
        }
    }
    let x_lo = path.iter().map(|v| v.x).min().unwrap_or(0).min(0);
    let x_hi = path.iter().map(|v| v.x).max().unwrap_or(0).max(g.n);
    let base = reference_rectangle(&g)?;
    let rectangle = Rectangle::new(x_lo, x_hi, base.a.1, base.c.1);
    if step_directions(&g, &rectangle)? != directions {
        return Err(YoungError::UnsupportedShape);
    }
    let (y_min, y_max) = (rectangle.y_min(), rectangle.y_max());
    if path.iter().any(|v| v.y < y_min || v.y > y_max) {
        return Err(YoungError::UnsupportedShape);
    }
    let upper: Vec<u64> = heights.iter().map(|&h| (y_max - h) as u64).collect();
    let lower: Vec<u64> = heights.iter().map(|&h| (h - y_min) as u64).collect();
    Ok(YoungDecomposition {
        element: g,
        rectangle,
        upper: split_into_diagrams(&upper),
        lower: split_into_diagrams(&lower),
    })
}

impl YoungDecomposition {
    /// Rebuilds the word from the rectangle and the upper diagrams, checking
    /// the lower diagrams against them.
    pub fn reconstruct(&self) -> Result<Word, YoungError> {
        let directions = step_directions(&self.element, &self.rectangle)?;
        let (y_min, y_max) = (self.rectangle.y_min(), self.rectangle.y_max());
        let upper = expand(&self.upper, directions.len())?;
        let lower = expand(&self.lower, directions.len())?;
        let mut w = Word::empty();
        let (mut x, mut y) = (0i64, 0i64);
        for (i, &dir) in directions.iter().enumerate() {
            let h = y_max - upper[i] as i64;
            if h - y_min != lower[i] as i64 {
                return Err(YoungError::Inconsistent);
            }
            w.push_power(Letter::B, (h - y) * alternating_sign(x));
            w.push_power(Letter::A, dir);
            x += dir;
            y = h;
        }
        w.push_power(Letter::B, (self.element.m - y) * alternating_sign(x));
        Ok(w)
    }

    /// No diagram is a sub-diagram of its neighbour in either sequence.
    pub fn neighbours_incomparable(&self) -> bool {
        [&self.upper, &self.lower].iter().all(|side| {
            side.windows(2)
                .all(|p| !p[0].is_sub_diagram_of(&p[1]) && !p[1].is_sub_diagram_of(&p[0]))
        })
    }
}
