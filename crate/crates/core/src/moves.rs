//! Basic moves on geodesic words: even castling, detowering and clipping.
//!
//! Each generator proposes local rewrites and keeps only those that represent
//! the same element, have the same length and are geodesic.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::element::{evaluate, Element, Overflow};
use crate::geodesic::{is_geodesic, std_rep};
use crate::model::CkModel;
use crate::oracle::{sort_by_text, BallIndex, OracleError};
use crate::word::{format_word, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "SCREAMING_SNAKE_CASE"))]
pub enum MoveKind {
    EvenCastling,
    Detowering,
    Clipping,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::EvenCastling => "EVEN_CASTLING",
            MoveKind::Detowering => "DETOWERING",
            MoveKind::Clipping => "CLIPPING",
        })
    }
}

/// A validated rewrite between two geodesic words of one element.
///
/// `site` holds letter indices: the start of the three-letter window for
/// castling, the two `a`-letters for detowering, the two transposition
/// positions (in application order) for clipping.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveEdge {
    pub from: Word,
    pub to: Word,
    pub kind: MoveKind,
    pub site: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("orbit exceeded the cap of {cap} words")]
    CapExceeded { cap: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// `to` is a different geodesic word of the same length and element as `from`.
pub fn is_valid_move(from: &Word, to: &Word) -> Result<bool, Overflow> {
    if from == to || from.len() != to.len() {
        return Ok(false);
    }
    Ok(evaluate(from)? == evaluate(to)? && is_geodesic(to)?)
}

fn keep(
    out: &mut Vec<MoveEdge>,
    from: &Word,
    to: Word,
    kind: MoveKind,
    site: Vec<usize>,
) -> Result<(), Overflow> {
    if is_valid_move(from, &to)? && !out.iter().any(|e| e.to == to) {
        out.push(MoveEdge {
            from: from.clone(),
            to,
            kind,
            site,
        });
    }
    Ok(())
}

/// Transposes an `a^{+-2}` block with an adjacent `b^{+-1}`.
pub fn castling_neighbors(w: &Word) -> Result<Vec<MoveEdge>, Overflow> {
    let letters = w.letters();
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(2) {
        let (x, y, z) = (letters[i], letters[i + 1], letters[i + 2]);
        let swapped = if x == y && x.is_a() && z.is_b() {
            Some([z, x, y])
        } else if y == z && y.is_a() && x.is_b() {
            Some([y, z, x])
        } else {
            None
        };
        if let Some(window) = swapped {
            let mut v = letters.to_vec();
            v[i..i + 3].copy_from_slice(&window);
            keep(&mut out, w, Word::from(v), MoveKind::EvenCastling, alloc::vec![i])?;
        }
    }
    Ok(out)
}

/// `b`-syllable exponents around the `a`-letters: `e_0 x_1 e_1 ... x_r e_r`.
struct Syllables {
    exponents: Vec<i64>,
    a_letters: Vec<(usize, Letter)>,
}

impl Syllables {
    fn of(w: &Word) -> Self {
        let mut exponents = alloc::vec![0];
        let mut a_letters = Vec::new();
        for (i, &l) in w.letters().iter().enumerate() {
            if l.is_a() {
                a_letters.push((i, l));
                exponents.push(0);
            } else if let Some(e) = exponents.last_mut() {
                *e += l.sign();
            }
        }
        Syllables { exponents, a_letters }
    }

    fn weight(exponents: &[i64]) -> u64 {
        exponents.iter().map(|e| e.unsigned_abs()).sum()
    }

    fn assemble(&self, exponents: &[i64]) -> Word {
        let mut w = Word::empty();
        for (i, &e) in exponents.iter().enumerate() {
            w.push_power(Letter::B, e);
            if let Some(&(_, l)) = self.a_letters.get(i) {
                w.push(l);
            }
        }
        w
    }
}

/// Moves tower height between two `a`-corners: the `b`-syllables adjacent to
/// two distinct `a`-letters are each shifted by `-1`, `0` or `+1`, keeping the
/// total number of letters.
pub fn detowering_neighbors(w: &Word) -> Result<Vec<MoveEdge>, Overflow> {
    let syl = Syllables::of(w);
    let weight = Syllables::weight(&syl.exponents);
    let r = syl.a_letters.len();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut slots: Vec<usize> = alloc::vec![i, i + 1, j, j + 1];
            slots.dedup();
            let combos = 3usize.pow(slots.len() as u32);
            for mut code in 0..combos {
                let mut exps = syl.exponents.clone();
                for &slot in &slots {
                    exps[slot] += (code % 3) as i64 - 1;
                    code /= 3;
                }
                if exps == syl.exponents || Syllables::weight(&exps) != weight {
                    continue;
                }
                let site = alloc::vec![syl.a_letters[i].0, syl.a_letters[j].0];
                keep(&mut out, w, syl.assemble(&exps), MoveKind::Detowering, site)?;
            }
        }
    }
    Ok(out)
}

/// Single boundary transpositions `a^e b^s <-> b^-s a^e`, each shifting the
/// area by one. Returns `(position, rewritten word)`.
fn transpositions(letters: &[Letter]) -> Vec<(usize, Vec<Letter>)> {
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(1) {
        let (x, y) = (letters[i], letters[i + 1]);
        let swapped = if x.is_a() && y.is_b() {
            [y.inverse(), x]
        } else if x.is_b() && y.is_a() {
            [y, x.inverse()]
        } else {
            continue;
        };
        let mut v = letters.to_vec();
        v[i..i + 2].copy_from_slice(&swapped);
        out.push((i, v));
    }
    out
}

/// Pairs of boundary transpositions, applied in sequence, whose area shifts
/// cancel.
pub fn clipping_neighbors(w: &Word) -> Result<Vec<MoveEdge>, Overflow> {
    let mut out = Vec::new();
    for (i, u) in transpositions(w.letters()) {
        for (j, v) in transpositions(&u) {
            keep(&mut out, w, Word::from(v), MoveKind::Clipping, alloc::vec![i, j])?;
        }
    }
    Ok(out)
}

/// Union of the three move generators, one edge per target word (castling
/// first, then detowering, then clipping), sorted by target text.
pub fn neighbors(w: &Word) -> Result<Vec<MoveEdge>, Overflow> {
    let mut by_target: BTreeMap<String, MoveEdge> = BTreeMap::new();
    for edges in [castling_neighbors(w)?, detowering_neighbors(w)?, clipping_neighbors(w)?] {
        for e in edges {
            by_target.entry(format_word(&e.to)).or_insert(e);
        }
    }
    Ok(by_target.into_values().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted by formatted text.
    pub words: Vec<Word>,
    /// Every edge leaving an orbit word, in the order of `words`.
    pub edges: Vec<MoveEdge>,
}

/// Breadth-first closure of `w` under [`neighbors`].
pub fn orbit(w: &Word, cap: usize) -> Result<Orbit, MoveError> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut edges_of: BTreeMap<Word, Vec<MoveEdge>> = BTreeMap::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        let edges = neighbors(&x)?;
        for e in &edges {
            if seen.insert(e.to.clone()) {
                if seen.len() > cap {
                    return Err(MoveError::CapExceeded { cap });
                }
                queue.push_back(e.to.clone());
            }
        }
        edges_of.insert(x, edges);
    }
    let words = sort_by_text(seen.into_iter().collect());
    let edges = words
        .iter()
        .flat_map(|w| edges_of.remove(w).unwrap_or_default())
        .collect();
    Ok(Orbit { words, edges })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub element: Element,
    pub geodesic_count: usize,
    pub orbit_size: usize,
    pub contains_std_rep: bool,
    pub connected: bool,
    pub orbit: Orbit,
}

/// Compares the move orbit of `std_rep(g)` with every geodesic of `g`
/// enumerated from the ball.
pub fn check_move_connectivity(
    ball: &BallIndex<CkModel>,
    g: &Element,
    orbit_cap: usize,
    geodesic_cap: usize,
) -> Result<ConnectivityReport, MoveError> {
    let geodesics = ball.enumerate_geodesics(g, geodesic_cap)?;
    let start = std_rep(g)?;
    let orbit = orbit(&start, orbit_cap)?;
    Ok(ConnectivityReport {
        element: *g,
        geodesic_count: geodesics.len(),
        orbit_size: orbit.words.len(),
        contains_std_rep: geodesics.contains(&start),
        connected: orbit.words == geodesics,
        orbit,
    })
}
