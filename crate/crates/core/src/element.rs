//! Normal form `(k, m, n)` of the central extension and its arithmetic.
//!
//! `k` is the Dehn area (exponent of the central generator `t = a b a^-1 b`),
//! `(m, n)` the endpoint of the projected lattice path: `m` along the b-axis,
//! `n` along the a-axis. Generators: `a = (0,0,1)`, `b = (0,1,0)`.
//!
//! Product rule:
//! `(k1,m1,n1)(k2,m2,n2) = (k1 + k2 + m2*par(n1), m1 + m2*(-1)^n1, n1 + n2)`
//! with `par(n) = n mod 2` taken in `{0, 1}`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::word::{Letter, LetterMap, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow in group arithmetic")]
pub struct Overflow;

/// Nonnegative residue of `n` modulo 2.
#[inline]
pub const fn par(n: i64) -> i64 {
    n.rem_euclid(2)
}

/// `(-1)^n`.
#[inline]
pub const fn alternating_sign(n: i64) -> i64 {
    1 - 2 * par(n)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Element {
    pub k: i64,
    pub m: i64,
    pub n: i64,
}

impl Element {
    pub const IDENTITY: Element = Element::new(0, 0, 0);
    /// The central generator `t = a b a^-1 b`.
    pub const T: Element = Element::new(1, 0, 0);
    pub const A: Element = Element::new(0, 0, 1);
    pub const B: Element = Element::new(0, 1, 0);

    pub const fn new(k: i64, m: i64, n: i64) -> Self {
        Element { k, m, n }
    }

    pub const fn generator(letter: Letter) -> Self {
        match letter {
            Letter::A => Element::new(0, 0, 1),
            Letter::AInv => Element::new(0, 0, -1),
            Letter::B => Element::new(0, 1, 0),
            Letter::BInv => Element::new(0, -1, 0),
        }
    }

    pub fn multiply(&self, rhs: &Element) -> Result<Element, Overflow> {
        let twist = rhs.m.checked_mul(par(self.n)).ok_or(Overflow)?;
        let k = self
            .k
            .checked_add(rhs.k)
            .and_then(|k| k.checked_add(twist))
            .ok_or(Overflow)?;
        let m = rhs
            .m
            .checked_mul(alternating_sign(self.n))
            .and_then(|dm| self.m.checked_add(dm))
            .ok_or(Overflow)?;
        let n = self.n.checked_add(rhs.n).ok_or(Overflow)?;
        Ok(Element { k, m, n })
    }

    /// Right multiplication by a single generator letter.
    pub fn step(&self, letter: Letter) -> Result<Element, Overflow> {
        self.multiply(&Element::generator(letter))
    }

    pub fn inverse(&self) -> Result<Element, Overflow> {
        let n = self.n.checked_neg().ok_or(Overflow)?;
        let m = self
            .m
            .checked_mul(alternating_sign(self.n))
            .and_then(i64::checked_neg)
            .ok_or(Overflow)?;
        let k = m
            .checked_mul(par(self.n))
            .and_then(|x| self.k.checked_add(x))
            .and_then(i64::checked_neg)
            .ok_or(Overflow)?;
        Ok(Element { k, m, n })
    }

    pub fn apply_isometry(&self, kind: IsometryKind) -> Result<Element, Overflow> {
        match kind {
            IsometryKind::NFlip => Ok(Element::new(self.k, self.m, self.n.checked_neg().ok_or(Overflow)?)),
            IsometryKind::FullFlip => Ok(Element::new(
                self.k.checked_neg().ok_or(Overflow)?,
                self.m.checked_neg().ok_or(Overflow)?,
                self.n.checked_neg().ok_or(Overflow)?,
            )),
        }
    }

    pub const fn is_normalized(&self) -> bool {
        self.m >= 0 && self.n >= 0
    }

    /// Moves `self` into the quadrant `m, n >= 0` with at most two isometries.
    /// Preference order: none, `[NFlip]`, `[FullFlip]`, `[FullFlip, NFlip]`.
    pub fn normalize_quadrant(&self) -> Result<NormalizationRecord, Overflow> {
        let candidates: [&[IsometryKind]; 4] = [
            &[],
            &[IsometryKind::NFlip],
            &[IsometryKind::FullFlip],
            &[IsometryKind::FullFlip, IsometryKind::NFlip],
        ];
        for applied in candidates {
            let mut g = *self;
            for &kind in applied {
                g = g.apply_isometry(kind)?;
            }
            if g.is_normalized() {
                return Ok(NormalizationRecord {
                    original: *self,
                    normalized: g,
                    applied: applied.to_vec(),
                });
            }
        }
        // -i64::MIN is the only way to land here
        Err(Overflow)
    }

    pub const fn project_to_klein(&self) -> KleinElement {
        KleinElement::new(self.m, self.n)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.m, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected an element of the form (k,m,n)")]
pub struct ParseElementError;

impl FromStr for Element {
    type Err = ParseElementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or(ParseElementError)?;
        let mut parts = inner.split(',').map(|p| p.trim().parse::<i64>());
        let mut next = || parts.next().ok_or(ParseElementError)?.map_err(|_| ParseElementError);
        let (k, m, n) = (next()?, next()?, next()?);
        if parts.next().is_some() {
            return Err(ParseElementError);
        }
        Ok(Element::new(k, m, n))
    }
}

/// The two Cayley-graph isometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum IsometryKind {
    /// `(k,m,n) -> (k,m,-n)`, induced by [`LetterMap::FlipA`].
    NFlip,
    /// `(k,m,n) -> (-k,-m,-n)`, induced by [`LetterMap::FlipBoth`].
    FullFlip,
}

impl IsometryKind {
    pub const fn letter_map(self) -> LetterMap {
        match self {
            IsometryKind::NFlip => LetterMap::FlipA,
            IsometryKind::FullFlip => LetterMap::FlipBoth,
        }
    }
}

impl From<LetterMap> for IsometryKind {
    fn from(map: LetterMap) -> Self {
        match map {
            LetterMap::FlipA => IsometryKind::NFlip,
            LetterMap::FlipBoth => IsometryKind::FullFlip,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationRecord {
    pub original: Element,
    pub normalized: Element,
    /// Isometries applied to `original`, in order.
    pub applied: Vec<IsometryKind>,
}

impl NormalizationRecord {
    /// Maps a word for `normalized` back to a word for `original`.
    pub fn pull_back(&self, w: &Word) -> Word {
        self.applied
            .iter()
            .rev()
            .fold(w.clone(), |acc, kind| acc.map_letters(kind.letter_map()))
    }
}

/// Left-to-right product of generator images.
pub fn evaluate(w: &Word) -> Result<Element, Overflow> {
    w.letters()
        .iter()
        .try_fold(Element::IDENTITY, |g, &l| g.step(l))
}

/// Element of the Klein bottle group as a pair `(m, n)`, with product
/// `(m1 + m2*(-1)^n1, n1 + n2)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KleinElement {
    pub m: i64,
    pub n: i64,
}

impl KleinElement {
    pub const IDENTITY: KleinElement = KleinElement::new(0, 0);

    pub const fn new(m: i64, n: i64) -> Self {
        KleinElement { m, n }
    }

    pub fn multiply(&self, rhs: &KleinElement) -> Result<KleinElement, Overflow> {
        let m = rhs
            .m
            .checked_mul(alternating_sign(self.n))
            .and_then(|dm| self.m.checked_add(dm))
            .ok_or(Overflow)?;
        let n = self.n.checked_add(rhs.n).ok_or(Overflow)?;
        Ok(KleinElement { m, n })
    }

    pub fn step(&self, letter: Letter) -> Result<KleinElement, Overflow> {
        let g = Element::generator(letter);
        self.multiply(&KleinElement::new(g.m, g.n))
    }
}

impl fmt::Display for KleinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A vertex visited by a lattice path: `x` along the a-axis, `y` along the
/// b-axis, and the area accumulated so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathVertex {
    pub x: i64,
    pub y: i64,
    pub area: i64,
}

/// The polyline traced by `w` on the Klein-bottle lattice.
///
/// `a^{+-1}` moves `x` by one; `b^s` moves `y` by `s*(-1)^x` and adds
/// `s*par(x)` to the area. The final vertex equals `evaluate(w)` read as
/// `(area, y, x)`.
pub fn lattice_path(w: &Word) -> Result<Vec<PathVertex>, Overflow> {
    let mut v = PathVertex { x: 0, y: 0, area: 0 };
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(v);
    for &l in w.letters() {
        if l.is_a() {
            v.x = v.x.checked_add(l.sign()).ok_or(Overflow)?;
        } else {
            let s = l.sign();
            v.y = v.y.checked_add(s * alternating_sign(v.x)).ok_or(Overflow)?;
            v.area = v.area.checked_add(s * par(v.x)).ok_or(Overflow)?;
        }
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn e(k: i64, m: i64, n: i64) -> Element {
        Element::new(k, m, n)
    }

    fn ev(s: &str) -> Element {
        evaluate(&parse_word(s).unwrap()).unwrap()
    }

    /// Brute-force inverse: search a box for the x with g*x = id.
    fn brute_inverse(g: Element) -> Element {
        let mut found = None;
        for k in -4..=4 {
            for m in -4..=4 {
                for n in -4..=4 {
                    let x = e(k, m, n);
                    if g.multiply(&x).unwrap() == Element::IDENTITY {
                        assert!(found.is_none());
                        found = Some(x);
                    }
                }
            }
        }
        found.unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(e(0, 0, 1).multiply(&e(0, 1, 0)).unwrap(), e(1, -1, 1));
        let g = e(3, -2, 5);
        assert_eq!(Element::IDENTITY.multiply(&g).unwrap(), g);
        assert_eq!(e(1, -1, 1).multiply(&e(0, -1, -1)).unwrap(), Element::IDENTITY);
    }

    #[test]
    fn product_matches_relator_rewriting() {
        // ab = t b^-1 a
        assert_eq!(ev("ab"), Element::T.multiply(&ev("B a")).unwrap());
        assert_eq!(ev("Ab"), Element::T.multiply(&ev("B A")).unwrap());
        assert_eq!(ev("aB"), Element::T.inverse().unwrap().multiply(&ev("b a")).unwrap());
        assert_eq!(ev("AB"), Element::T.inverse().unwrap().multiply(&ev("b A")).unwrap());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(e(0, 0, 1).inverse().unwrap(), e(0, 0, -1));
        assert_eq!(e(1, -1, 1).inverse().unwrap(), e(0, -1, -1));
        assert_eq!(Element::T.inverse().unwrap(), e(-1, 0, 0));
        for g in [e(1, -1, 1), e(2, 1, 3), e(-1, 2, -1), e(0, 3, 2)] {
            assert_eq!(g.inverse().unwrap(), brute_inverse(g));
        }
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(ev("a b a^-1 b"), e(1, 0, 0));
        assert_eq!(ev("a^2 b a^-2 b^-1"), Element::IDENTITY);
        assert_eq!(ev("a b^-1 a^2 b^-2"), e(-3, 3, 3));
        assert_eq!(ev("a b^-3 a^2"), e(-3, 3, 3));
        assert_eq!(ev("a b a^-1 b^-1"), e(1, -2, 0));
        assert_eq!(ev("b^3 a^2"), e(0, 3, 2));
    }

    #[test]
    fn isometries() {
        assert_eq!(e(1, -1, 1).apply_isometry(IsometryKind::NFlip).unwrap(), e(1, -1, -1));
        assert_eq!(ev("A b"), e(1, -1, -1));
        assert_eq!(e(1, -1, 1).apply_isometry(IsometryKind::FullFlip).unwrap(), e(-1, 1, -1));
        assert_eq!(ev("A B"), e(-1, 1, -1));
        assert_eq!(Element::IDENTITY.apply_isometry(IsometryKind::NFlip).unwrap(), Element::IDENTITY);
    }

    #[test]
    fn quadrant_normalization() {
        let r = e(2, 1, 4).normalize_quadrant().unwrap();
        assert_eq!((r.normalized, r.applied.len()), (e(2, 1, 4), 0));
        let r = e(2, 1, -4).normalize_quadrant().unwrap();
        assert_eq!(r.normalized, e(2, 1, 4));
        assert_eq!(r.applied, [IsometryKind::NFlip]);
        let r = e(2, -1, 4).normalize_quadrant().unwrap();
        assert_eq!(r.normalized, e(-2, 1, 4));
        assert_eq!(r.applied, [IsometryKind::FullFlip, IsometryKind::NFlip]);
        let r = e(2, -1, -4).normalize_quadrant().unwrap();
        assert_eq!(r.normalized, e(-2, 1, 4));
        assert_eq!(r.applied, [IsometryKind::FullFlip]);
    }

    #[test]
    fn klein_projection() {
        assert_eq!(e(7, 2, 3).project_to_klein(), KleinElement::new(2, 3));
        let w = parse_word("ab").unwrap();
        let klein = w
            .letters()
            .iter()
            .try_fold(KleinElement::IDENTITY, |g, &l| g.step(l))
            .unwrap();
        assert_eq!(klein, KleinElement::new(-1, 1));
        assert_eq!(evaluate(&w).unwrap().project_to_klein(), klein);
    }

    #[test]
    fn lattice_paths() {
        let p = lattice_path(&parse_word("a").unwrap()).unwrap();
        assert_eq!((p[1].x, p[1].y, p[1].area), (1, 0, 0));
        let p = lattice_path(&parse_word("ab").unwrap()).unwrap();
        assert_eq!((p[2].x, p[2].y, p[2].area), (1, -1, 1));
        let last = *lattice_path(&parse_word("b^3 a b^2 a^3").unwrap()).unwrap().last().unwrap();
        assert_eq!((last.x, last.y, last.area), (4, 1, 2));
    }

    #[test]
    fn overflow_is_reported() {
        let big = e(i64::MAX, 0, 1);
        assert_eq!(big.multiply(&e(1, 0, 0)), Err(Overflow));
        assert_eq!(e(0, i64::MIN, 0).inverse(), Err(Overflow));
        assert_eq!(e(0, i64::MAX, 1).multiply(&e(0, i64::MIN, 0)), Err(Overflow));
    }

    #[test]
    fn element_text_form() {
        assert_eq!("(2,1,-4)".parse::<Element>().unwrap(), e(2, 1, -4));
        assert_eq!(" ( -1, 3 , 4 ) ".parse::<Element>().unwrap(), e(-1, 3, 4));
        assert!("(1,2)".parse::<Element>().is_err());
        assert!("(1,2,3,4)".parse::<Element>().is_err());
        assert!("1,2,3".parse::<Element>().is_err());
        assert_eq!(alloc::format!("{}", e(-3, 3, 3)), "(-3,3,3)");
    }
}
