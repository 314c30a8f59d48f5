//! Closed-form word length, standard representatives, continuation sets and
//! dead-end detection.

use core::fmt;

use crate::element::{evaluate, Element, Overflow};
use crate::word::{Letter, Word};

/// Subset of the four letters, iterated in canonical letter order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSet(u8);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);
    pub const ALL: LetterSet = LetterSet(0b1111);

    const fn bit(l: Letter) -> u8 {
        match l {
            Letter::A => 1,
            Letter::AInv => 2,
            Letter::B => 4,
            Letter::BInv => 8,
        }
    }

    pub const fn of(letters: &[Letter]) -> LetterSet {
        let mut bits = 0;
        let mut i = 0;
        while i < letters.len() {
            bits |= Self::bit(letters[i]);
            i += 1;
        }
        LetterSet(bits)
    }

    pub fn insert(&mut self, l: Letter) {
        self.0 |= Self::bit(l);
    }

    pub const fn contains(self, l: Letter) -> bool {
        self.0 & Self::bit(l) != 0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_subset(self, other: LetterSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn difference(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Letter> {
        Letter::ALL.into_iter().filter(move |&l| self.contains(l))
    }

    pub fn map(self, f: impl Fn(Letter) -> Letter) -> LetterSet {
        self.iter().map(f).collect()
    }
}

impl FromIterator<Letter> for LetterSet {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        let mut s = LetterSet::EMPTY;
        for l in iter {
            s.insert(l);
        }
        s
    }
}

/// Space-separated letters, e.g. `a a^-1 b b^-1`.
impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Which continuation regime a normalized element falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "SCREAMING_SNAKE_CASE"))]
pub enum RegionCase {
    /// `k < 0`, `|k| > m`.
    NegKDominant,
    /// `k < 0`, `|k| <= m`, `n` even.
    NegKSmallEven,
    /// `k < 0`, `|k| <= m`, `n` odd.
    NegKSmallOdd,
    /// `k > 0`.
    PosK,
    /// `k = 0`; no continuation claim attached.
    ZeroK,
    /// Outside the quadrant `m, n >= 0`. Never returned by [`classify_region`],
    /// which normalizes first.
    Unnormalized,
}

impl RegionCase {
    /// Letters claimed to extend every geodesic of an element in this case.
    pub const fn claimed_continuations(self) -> LetterSet {
        match self {
            RegionCase::NegKDominant | RegionCase::NegKSmallOdd => {
                LetterSet::of(&[Letter::A, Letter::BInv])
            }
            RegionCase::NegKSmallEven | RegionCase::PosK => LetterSet::of(&[Letter::A, Letter::B]),
            RegionCase::ZeroK | RegionCase::Unnormalized => LetterSet::EMPTY,
        }
    }

    pub const fn label(self) -> &'static str {
        match self {
            RegionCase::NegKDominant => "NEG_K_DOMINANT",
            RegionCase::NegKSmallEven => "NEG_K_SMALL_EVEN",
            RegionCase::NegKSmallOdd => "NEG_K_SMALL_ODD",
            RegionCase::PosK => "POS_K",
            RegionCase::ZeroK => "ZERO_K",
            RegionCase::Unnormalized => "UNNORMALIZED",
        }
    }
}

impl fmt::Display for RegionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Case of a normalized element; `Unnormalized` if `m < 0` or `n < 0`.
pub fn region_of_normalized(g: &Element) -> RegionCase {
    if !g.is_normalized() {
        return RegionCase::Unnormalized;
    }
    match g.k {
        0 => RegionCase::ZeroK,
        k if k > 0 => RegionCase::PosK,
        k if k.unsigned_abs() > g.m.unsigned_abs() => RegionCase::NegKDominant,
        _ if g.n % 2 == 0 => RegionCase::NegKSmallEven,
        _ => RegionCase::NegKSmallOdd,
    }
}

pub fn classify_region(g: &Element) -> Result<RegionCase, Overflow> {
    Ok(region_of_normalized(&g.normalize_quadrant()?.normalized))
}

/// Standard representative of `g`.
///
/// For `m, n >= 0` and `n >= 1` this is `b^{k+m} a b^k a^{n-1}`; other
/// quadrants are pulled back through the letter maps. For `n = 0` the word is
/// `a b^k a^-1 b^{k+m}` (just `b^m` when `k = 0`) in every quadrant, so that
/// the `n = 0` words chain by appending `b`-letters.
pub fn std_rep(g: &Element) -> Result<Word, Overflow> {
    if g.n == 0 {
        let mut w = Word::empty();
        if g.k == 0 {
            w.push_power(Letter::B, g.m);
        } else {
            w.push(Letter::A);
            w.push_power(Letter::B, g.k);
            w.push(Letter::AInv);
            w.push_power(Letter::B, g.k.checked_add(g.m).ok_or(Overflow)?);
        }
        return Ok(w);
    }
    let record = g.normalize_quadrant()?;
    let Element { k, m, n } = record.normalized;
    let mut w = Word::empty();
    w.push_power(Letter::B, k.checked_add(m).ok_or(Overflow)?);
    w.push(Letter::A);
    w.push_power(Letter::B, k);
    w.push_power(Letter::A, n - 1);
    Ok(record.pull_back(&w.free_reduce()))
}

/// Word length of `g` with respect to `{a, b}`.
///
/// In normalized coordinates: `m + n` when `k = 0`, otherwise
/// `|k+m| + |k| + 1 + |n-1|`. Equal to `|std_rep(g)|`.
pub fn length(g: &Element) -> Result<u64, Overflow> {
    let Element { k, m, n } = g.normalize_quadrant()?.normalized;
    let (k, m, n) = (i128::from(k), i128::from(m), i128::from(n));
    let l = if k == 0 {
        m + n
    } else {
        (k + m).abs() + k.abs() + 1 + (n - 1).abs()
    };
    u64::try_from(l).map_err(|_| Overflow)
}

pub fn is_geodesic(w: &Word) -> Result<bool, Overflow> {
    Ok(length(&evaluate(w)?)? == w.len() as u64)
}

/// Letters `s` with `l(g s) = l(g) + 1`.
pub fn continuations(g: &Element) -> Result<LetterSet, Overflow> {
    let base = length(g)?;
    let mut out = LetterSet::EMPTY;
    for l in Letter::ALL {
        if length(&g.step(l)?)? == base + 1 {
            out.insert(l);
        }
    }
    Ok(out)
}

pub fn is_dead_end(g: &Element) -> Result<bool, Overflow> {
    Ok(continuations(g)?.is_empty())
}

/// Least `r >= 0` such that some element within distance `r + 1` of `g` is
/// longer than `g`.
pub fn depth(g: &Element) -> Result<u64, Overflow> {
    let base = length(g)?;
    let mut frontier = alloc::vec![*g];
    let mut seen = hashbrown::HashSet::new();
    seen.insert(*g);
    let mut r = 0;
    loop {
        let mut next = alloc::vec::Vec::new();
        for h in &frontier {
            for l in Letter::ALL {
                let x = h.step(l)?;
                if length(&x)? > base {
                    return Ok(r);
                }
                if seen.insert(x) {
                    next.push(x);
                }
            }
        }
        frontier = next;
        r += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn e(k: i64, m: i64, n: i64) -> Element {
        Element::new(k, m, n)
    }

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn standard_representatives() {
        assert_eq!(std_rep(&e(2, 1, 4)).unwrap(), w("b^3 a b^2 a^3"));
        assert_eq!(std_rep(&e(-4, 2, 4)).unwrap(), w("b^-2 a b^-4 a^3"));
        assert_eq!(std_rep(&e(0, 3, 0)).unwrap(), w("b^3"));
        assert_eq!(std_rep(&e(0, 3, 2)).unwrap(), w("b^3 a^2"));
        assert_eq!(std_rep(&e(3, 0, 0)).unwrap(), w("a b^3 a^-1 b^3"));
        assert_eq!(std_rep(&e(-1, 1, 0)).unwrap(), w("a b^-1 a^-1"));
        for g in [e(2, 1, -4), e(2, -1, 4), e(-3, -5, -2), e(1, -4, 0), e(0, -2, -3)] {
            let s = std_rep(&g).unwrap();
            assert_eq!(evaluate(&s).unwrap(), g, "{g}");
            assert!(s.is_reduced());
            assert_eq!(s.len() as u64, length(&g).unwrap());
        }
    }

    #[test]
    fn lengths() {
        assert_eq!(length(&e(3, 0, 0)).unwrap(), 8);
        assert_eq!(length(&e(-2, 5, 3)).unwrap(), 8);
        assert_eq!(length(&Element::IDENTITY).unwrap(), 0);
        assert_eq!(length(&e(-4, 2, 4)).unwrap(), 10);
        assert_eq!(length(&Element::T).unwrap(), 4);
        assert_eq!(length(&e(i64::MAX, i64::MAX, 0)), Err(Overflow));
    }

    #[test]
    fn geodesic_predicate() {
        assert!(is_geodesic(&w("b^3 a b^2 a^3")).unwrap());
        assert!(!is_geodesic(&w("a a^-1")).unwrap());
        assert!(is_geodesic(&w("a b a^-1 b")).unwrap());
        assert!(!is_geodesic(&w("a b a^-1 b^-1 a b")).unwrap());
    }

    #[test]
    fn continuation_examples() {
        assert!(continuations(&e(3, 0, 0)).unwrap().contains(Letter::B));
        let c = continuations(&e(2, 1, 4)).unwrap();
        assert!(LetterSet::of(&[Letter::A, Letter::B]).is_subset(c));
        assert_eq!(continuations(&Element::IDENTITY).unwrap(), LetterSet::ALL);
        assert_eq!(alloc::format!("{}", LetterSet::ALL), "a a^-1 b b^-1");
        // n = 0 with k != 0: neither a-letter extends
        assert_eq!(continuations(&e(1, 0, 0)).unwrap(), LetterSet::of(&[Letter::B]));
    }

    #[test]
    fn regions() {
        assert_eq!(classify_region(&e(-4, 2, 4)).unwrap(), RegionCase::NegKDominant);
        assert_eq!(classify_region(&e(-2, 5, 4)).unwrap(), RegionCase::NegKSmallEven);
        assert_eq!(classify_region(&e(-2, 5, 3)).unwrap(), RegionCase::NegKSmallOdd);
        assert_eq!(classify_region(&e(0, 5, 2)).unwrap(), RegionCase::ZeroK);
        assert_eq!(classify_region(&e(2, 1, 4)).unwrap(), RegionCase::PosK);
        // (2,-1,4) normalizes to (-2,1,4)
        assert_eq!(classify_region(&e(2, -1, 4)).unwrap(), RegionCase::NegKDominant);
        assert_eq!(region_of_normalized(&e(1, -1, 1)), RegionCase::Unnormalized);
    }

    #[test]
    fn dead_ends_and_depth() {
        for g in [Element::IDENTITY, e(5, 0, 0), e(-3, 7, 2), e(1, 0, 0)] {
            assert!(!is_dead_end(&g).unwrap());
            assert_eq!(depth(&g).unwrap(), 0);
        }
    }
}
