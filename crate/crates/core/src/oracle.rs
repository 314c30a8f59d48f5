//! Brute-force ground truth: Cayley balls with exact distances, full geodesic
//! enumeration, and audits of the dead-end, parity, last-letter and
//! standard-language claims.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};
use thiserror::Error;

use crate::element::{evaluate, Element, Overflow};
use crate::geodesic::{self, region_of_normalized, LetterSet, RegionCase};
use crate::model::{CkModel, GroupModel};
use crate::word::{format_word, Letter, Word};

pub const DEFAULT_MAX_STATES: usize = 20_000_000;
pub const DEFAULT_GEODESIC_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("ball exceeded {limit} states while expanding level {level} (level sizes so far: {level_sizes:?})")]
    ResourceExhausted {
        level: u32,
        limit: usize,
        level_sizes: Vec<usize>,
    },
    #[error("{state} lies outside the ball of radius {radius}")]
    OutsideBall { state: String, radius: u32 },
    #[error("more than {cap} geodesics for {state}")]
    GeodesicCap { state: String, cap: usize },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// All states within `radius` of the identity, with exact distances.
///
/// Built level by level; each level is stored sorted, so the contents and
/// iteration order are independent of hashing.
#[derive(Debug, Clone)]
pub struct BallIndex<M: GroupModel> {
    model: M,
    radius: u32,
    distances: HashMap<M::State, u32>,
    levels: Vec<Vec<M::State>>,
}

impl<M: GroupModel> BallIndex<M> {
    pub fn build(model: M, radius: u32) -> Result<Self, OracleError> {
        Self::build_with_budget(model, radius, DEFAULT_MAX_STATES)
    }

    pub fn build_with_budget(model: M, radius: u32, max_states: usize) -> Result<Self, OracleError> {
        let id = model.identity();
        let mut distances = HashMap::new();
        distances.insert(id.clone(), 0);
        let mut levels = alloc::vec![alloc::vec![id]];
        for r in 1..=radius {
            let mut next = Vec::new();
            for s in &levels[(r - 1) as usize] {
                for l in Letter::ALL {
                    let t = model.step(s, l)?;
                    if !distances.contains_key(&t) {
                        distances.insert(t.clone(), r);
                        next.push(t);
                    }
                }
                if distances.len() > max_states {
                    return Err(OracleError::ResourceExhausted {
                        level: r,
                        limit: max_states,
                        level_sizes: levels.iter().map(Vec::len).collect(),
                    });
                }
            }
            next.sort();
            levels.push(next);
        }
        Ok(BallIndex {
            model,
            radius,
            distances,
            levels,
        })
    }

    pub fn model(&self) -> &M {
        &self.model
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    pub fn distance(&self, s: &M::State) -> Option<u32> {
        self.distances.get(s).copied()
    }

    pub fn levels(&self) -> &[Vec<M::State>] {
        &self.levels
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// `(state, distance)` in level order, sorted within each level.
    pub fn iter(&self) -> impl Iterator<Item = (&M::State, u32)> + '_ {
        self.levels
            .iter()
            .enumerate()
            .flat_map(|(d, level)| level.iter().map(move |s| (s, d as u32)))
    }

    /// States at distance at most `radius - 1`: all their neighbours are in
    /// the ball.
    pub fn interior(&self) -> impl Iterator<Item = (&M::State, u32)> + '_ {
        let r = self.radius;
        self.iter().filter(move |&(_, d)| d < r)
    }

    pub fn exact_length(&self, s: &M::State) -> Result<u32, OracleError> {
        self.distance(s).ok_or_else(|| OracleError::OutsideBall {
            state: s.to_string(),
            radius: self.radius,
        })
    }

    /// Every geodesic word for `target`, sorted by formatted text.
    pub fn enumerate_geodesics(&self, target: &M::State, cap: usize) -> Result<Vec<Word>, OracleError> {
        let d = self.exact_length(target)?;
        let mut out = Vec::new();
        let mut suffix: Vec<Letter> = Vec::with_capacity(d as usize);
        self.descend(target, d, &mut suffix, &mut out, cap)?;
        Ok(sort_by_text(out))
    }

    fn descend(
        &self,
        s: &M::State,
        d: u32,
        suffix: &mut Vec<Letter>,
        out: &mut Vec<Word>,
        cap: usize,
    ) -> Result<(), OracleError> {
        if d == 0 {
            if out.len() >= cap {
                return Err(OracleError::GeodesicCap {
                    state: s.to_string(),
                    cap,
                });
            }
            out.push(suffix.iter().rev().copied().collect());
            return Ok(());
        }
        for l in Letter::ALL {
            let prev = self.model.step(s, l.inverse())?;
            if self.distance(&prev) == Some(d - 1) {
                suffix.push(l);
                self.descend(&prev, d - 1, suffix, out, cap)?;
                suffix.pop();
            }
        }
        Ok(())
    }

    /// Letters `s` with `d(g s) = d(g) + 1`; `g` must be interior.
    pub fn continuations(&self, s: &M::State) -> Result<LetterSet, OracleError> {
        let d = self.exact_length(s)?;
        let mut out = LetterSet::EMPTY;
        for l in Letter::ALL {
            let t = self.model.step(s, l)?;
            if self.exact_length(&t)? == d + 1 {
                out.insert(l);
            }
        }
        Ok(out)
    }
}

pub(crate) fn sort_by_text(words: Vec<Word>) -> Vec<Word> {
    let mut keyed: Vec<(String, Word)> = words.into_iter().map(|w| (format_word(&w), w)).collect();
    keyed.sort();
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, w)| w).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of a dead-end or standard-language audit. `verdict` is `Pass`
/// iff every failure list is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AuditReport {
    pub model: String,
    pub radius: u32,
    pub states_checked: usize,
    pub standard_words_checked: usize,
    pub certified_elements: usize,
    pub geodesic_failures: Vec<String>,
    pub prefix_failures: Vec<String>,
    pub dead_end_candidates: Vec<String>,
    pub parity_violations: Vec<String>,
    pub criterion_violations: Vec<String>,
    pub verdict: Verdict,
}

impl AuditReport {
    fn new(model: &str, radius: u32) -> Self {
        AuditReport {
            model: model.to_string(),
            radius,
            states_checked: 0,
            standard_words_checked: 0,
            certified_elements: 0,
            geodesic_failures: Vec::new(),
            prefix_failures: Vec::new(),
            dead_end_candidates: Vec::new(),
            parity_violations: Vec::new(),
            criterion_violations: Vec::new(),
            verdict: Verdict::Fail,
        }
    }

    fn finish(mut self) -> Self {
        let clean = self.geodesic_failures.is_empty()
            && self.prefix_failures.is_empty()
            && self.dead_end_candidates.is_empty()
            && self.parity_violations.is_empty()
            && self.criterion_violations.is_empty();
        self.verdict = if clean { Verdict::Pass } else { Verdict::Fail };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Exhaustive dead-end audit of the ball interior.
///
/// Every interior state needs a letter that increases its distance by one;
/// every step must change distance by exactly one (parity flips). For the
/// states in `dec_sample` the dead-end criterion "geodesics end in every
/// letter" is compared against the direct answer.
pub fn audit_dead_ends<M: GroupModel>(
    ball: &BallIndex<M>,
    dec_sample: &[M::State],
    geodesic_cap: usize,
) -> Result<AuditReport, OracleError> {
    let mut report = AuditReport::new(ball.model().name(), ball.radius());
    for (s, d) in ball.interior() {
        report.states_checked += 1;
        let mut grows = false;
        for l in Letter::ALL {
            let t = ball.model().step(s, l)?;
            let dt = ball.exact_length(&t)?;
            if dt == d + 1 {
                grows = true;
            } else if dt + 1 != d {
                report
                    .parity_violations
                    .push(format!("{s} * {l}: distance {d} -> {dt}"));
            }
        }
        if !grows {
            report.dead_end_candidates.push(s.to_string());
        }
    }
    for s in dec_sample {
        let d = ball.exact_length(s)?;
        if d >= ball.radius() {
            continue;
        }
        let dead = ball.continuations(s)?.is_empty();
        let endings: LetterSet = ball
            .enumerate_geodesics(s, geodesic_cap)?
            .iter()
            .filter_map(Word::last)
            .collect();
        if dead != (endings == LetterSet::ALL) {
            report.criterion_violations.push(format!(
                "{s}: dead end = {dead}, geodesic endings = {{{endings}}}"
            ));
        }
    }
    Ok(report.finish())
}

/// A language with one word per group element, used as a certificate that
/// no dead ends exist.
pub trait StandardLanguage {
    fn name(&self) -> String;

    /// Every word of the language with at most `max_len` letters, reduced.
    fn words(&self, max_len: usize) -> Result<Vec<Word>, Overflow>;
}

/// Standard representatives of all elements of `cK`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CkStandardLanguage;

impl StandardLanguage for CkStandardLanguage {
    fn name(&self) -> String {
        "ck-standard".to_string()
    }

    fn words(&self, max_len: usize) -> Result<Vec<Word>, Overflow> {
        let bound = max_len as i64;
        let mut out = Vec::new();
        // l(k,m,n) >= |m| + |n| and >= |k| + 1 for k != 0
        for k in -bound..=bound {
            for m in -bound..=bound {
                for n in -bound..=bound {
                    let g = Element::new(k, m, n);
                    if geodesic::length(&g)? <= max_len as u64 {
                        out.push(geodesic::std_rep(&g)?);
                    }
                }
            }
        }
        Ok(sort_by_text(out))
    }
}

/// `b^m a^n` for all `(m, n)`: normal forms of the Klein bottle group and of
/// `Z^2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PlaneStandardLanguage;

impl StandardLanguage for PlaneStandardLanguage {
    fn name(&self) -> String {
        "plane-standard".to_string()
    }

    fn words(&self, max_len: usize) -> Result<Vec<Word>, Overflow> {
        let bound = max_len as i64;
        let mut out = Vec::new();
        for m in -bound..=bound {
            for n in -bound..=bound {
                if m.abs() + n.abs() <= bound {
                    let mut w = Word::power(Letter::B, m);
                    w.push_power(Letter::A, n);
                    out.push(w);
                }
            }
        }
        Ok(sort_by_text(out))
    }
}

/// Negative control: the words of `inner`, cut to at most `cap` letters.
#[derive(Debug, Clone, Copy)]
pub struct TruncatedLanguage<L> {
    pub inner: L,
    pub cap: usize,
}

impl<L: StandardLanguage> StandardLanguage for TruncatedLanguage<L> {
    fn name(&self) -> String {
        format!("{}-truncated-{}", self.inner.name(), self.cap)
    }

    fn words(&self, max_len: usize) -> Result<Vec<Word>, Overflow> {
        let words = self
            .inner
            .words(max_len)?
            .into_iter()
            .map(|w| w.prefix(w.len().min(self.cap)))
            .collect();
        Ok(sort_by_text(words))
    }
}

/// Checks the sufficient condition for the absence of dead ends:
/// (1) every language word of length `<= radius` is geodesic; (2) every
/// language word of length `< radius` is a proper prefix of a longer language
/// word; (3) for each word passing both, its element grows by the next letter
/// of that extension.
pub fn check_standard_language<M: GroupModel, L: StandardLanguage + ?Sized>(
    ball: &BallIndex<M>,
    language: &L,
) -> Result<AuditReport, OracleError> {
    let mut report = AuditReport::new(ball.model().name(), ball.radius());
    let words = language.words(ball.radius() as usize)?;
    let mut extensions: HashMap<&[Letter], Letter> = HashMap::new();
    for w in &words {
        for i in 0..w.len() {
            extensions.entry(&w.letters()[..i]).or_insert(w.letters()[i]);
        }
    }
    let mut certified: HashSet<M::State> = HashSet::new();
    for w in &words {
        report.standard_words_checked += 1;
        let s = ball.model().evaluate(w)?;
        let d = ball.exact_length(&s)?;
        let geodesic = d as usize == w.len();
        if !geodesic {
            report
                .geodesic_failures
                .push(format!("{} represents {s} at distance {d}", format_word(w)));
        }
        if w.len() >= ball.radius() as usize {
            continue;
        }
        match extensions.get(w.letters()) {
            None => report
                .prefix_failures
                .push(format!("{} ({s}) is not a proper prefix of a language word", format_word(w))),
            Some(&next) if geodesic => {
                let t = ball.model().step(&s, next)?;
                if ball.exact_length(&t)? == d + 1 {
                    certified.insert(s);
                } else {
                    report.dead_end_candidates.push(s.to_string());
                }
            }
            Some(_) => {}
        }
    }
    report.certified_elements = certified.len();
    Ok(report.finish())
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LastLetterReport {
    pub radius: u32,
    pub elements_checked: usize,
    pub pairs_checked: usize,
    pub violations: Vec<String>,
}

/// For interior states `g` and letters `s`: `g s` is one step further out
/// iff no geodesic of `g` ends with `s^-1`. Checks at most `max_elements`
/// states in level order.
pub fn check_last_letter<M: GroupModel>(
    ball: &BallIndex<M>,
    max_elements: Option<usize>,
    geodesic_cap: usize,
) -> Result<LastLetterReport, OracleError> {
    let mut report = LastLetterReport {
        radius: ball.radius(),
        elements_checked: 0,
        pairs_checked: 0,
        violations: Vec::new(),
    };
    for (s, _) in ball.interior().take(max_elements.unwrap_or(usize::MAX)) {
        report.elements_checked += 1;
        let endings: LetterSet = ball
            .enumerate_geodesics(s, geodesic_cap)?
            .iter()
            .filter_map(Word::last)
            .collect();
        let grows = ball.continuations(s)?;
        for l in Letter::ALL {
            report.pairs_checked += 1;
            if grows.contains(l) == endings.contains(l.inverse()) {
                report.violations.push(format!(
                    "{s} * {l}: extends = {}, geodesic ending in inverse = {}",
                    grows.contains(l),
                    endings.contains(l.inverse())
                ));
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ContinuationViolation {
    pub element: Element,
    pub region: RegionCase,
    pub missing: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ContinuationReport {
    pub radius: u32,
    pub elements_checked: usize,
    pub violations: Vec<ContinuationViolation>,
    /// Observed continuation sets for `k = 0`, with counts. Informational.
    pub zero_k_continuations: BTreeMap<String, usize>,
    pub verdict: Verdict,
}

/// Checks the region-wise continuation claims on every normalized interior
/// element, using exact ball distances.
pub fn check_continuation_claims(ball: &BallIndex<CkModel>) -> Result<ContinuationReport, OracleError> {
    let mut report = ContinuationReport {
        radius: ball.radius(),
        elements_checked: 0,
        violations: Vec::new(),
        zero_k_continuations: BTreeMap::new(),
        verdict: Verdict::Pass,
    };
    for (g, _) in ball.interior() {
        if !g.is_normalized() {
            continue;
        }
        report.elements_checked += 1;
        let region = region_of_normalized(g);
        let actual = ball.continuations(g)?;
        if region == RegionCase::ZeroK {
            *report.zero_k_continuations.entry(actual.to_string()).or_insert(0) += 1;
            continue;
        }
        let missing = region.claimed_continuations().difference(actual);
        if !missing.is_empty() {
            report.violations.push(ContinuationViolation {
                element: *g,
                region,
                missing: missing.to_string(),
            });
        }
    }
    if !report.violations.is_empty() {
        report.verdict = Verdict::Fail;
    }
    Ok(report)
}

/// Elements where the closed-form length disagrees with the ball distance.
pub fn certify_lengths(ball: &BallIndex<CkModel>) -> Result<Vec<String>, OracleError> {
    let mut failures = Vec::new();
    for (g, d) in ball.iter() {
        let closed = geodesic::length(g)?;
        if closed != u64::from(d) {
            failures.push(format!("{g}: closed form {closed}, distance {d}"));
        }
    }
    Ok(failures)
}

/// Elements whose standard representative fails to evaluate to the element,
/// has the wrong length, or has a non-geodesic prefix.
pub fn certify_standard_representatives(ball: &BallIndex<CkModel>) -> Result<Vec<String>, OracleError> {
    let mut failures = Vec::new();
    for (g, d) in ball.iter() {
        let w = geodesic::std_rep(g)?;
        if evaluate(&w)? != *g {
            failures.push(format!("{g}: std_rep {} evaluates elsewhere", format_word(&w)));
            continue;
        }
        if w.free_reduce().len() != d as usize {
            failures.push(format!("{g}: |std_rep| = {}, distance {d}", w.len()));
            continue;
        }
        for p in w.prefixes() {
            let h = evaluate(&p)?;
            if ball.exact_length(&h)? as usize != p.len() {
                failures.push(format!("{g}: prefix {} of std_rep is not geodesic", format_word(&p)));
                break;
            }
        }
    }
    Ok(failures)
}

/// Ball states sorted into `(k, m, n, distance)` rows, level order.
pub fn export_rows<M: GroupModel>(ball: &BallIndex<M>) -> Vec<([i64; 3], u32)> {
    ball.iter()
        .map(|(s, d)| (ball.model().coordinates(s), d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{KleinModel, Z2Model};
    use crate::word::parse_word;

    #[test]
    fn small_balls() {
        assert_eq!(BallIndex::build(CkModel, 0).unwrap().len(), 1);
        assert_eq!(BallIndex::build(CkModel, 1).unwrap().len(), 5);
        let b4 = BallIndex::build(CkModel, 4).unwrap();
        assert_eq!(b4.distance(&Element::T), Some(4));
        assert_eq!(BallIndex::build(Z2Model, 10).unwrap().len(), 221);
    }

    #[test]
    fn budget_is_enforced() {
        let err = BallIndex::build_with_budget(CkModel, 10, 100).unwrap_err();
        match err {
            OracleError::ResourceExhausted { limit, ref level_sizes, .. } => {
                assert_eq!(limit, 100);
                assert!(!level_sizes.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn exact_lengths() {
        let ball = BallIndex::build(CkModel, 9).unwrap();
        assert_eq!(ball.exact_length(&Element::IDENTITY).unwrap(), 0);
        assert_eq!(ball.exact_length(&Element::new(3, 0, 0)).unwrap(), 8);
        assert_eq!(ball.exact_length(&Element::new(-2, 5, 3)).unwrap(), 8);
        assert!(matches!(
            ball.exact_length(&Element::new(9, 9, 9)),
            Err(OracleError::OutsideBall { .. })
        ));
    }

    #[test]
    fn geodesic_enumeration() {
        let ball = BallIndex::build(CkModel, 9).unwrap();
        let g = ball.enumerate_geodesics(&Element::new(0, 3, 0), 10).unwrap();
        assert_eq!(g, [parse_word("b^3").unwrap()]);
        let t = ball.enumerate_geodesics(&Element::T, 10).unwrap();
        let mut shifts = sort_by_text(parse_word("a b A b").unwrap().cyclic_shifts());
        shifts.sort();
        let mut got = t.clone();
        got.sort();
        assert_eq!(got, shifts);
        assert!(ball.enumerate_geodesics(&Element::new(-1, 3, 4), 100).unwrap().len() >= 2);
        assert!(matches!(
            ball.enumerate_geodesics(&Element::new(3, 0, 0), 3),
            Err(OracleError::GeodesicCap { cap: 3, .. })
        ));
    }

    #[test]
    fn z2_and_klein_audits() {
        let z2 = BallIndex::build(Z2Model, 10).unwrap();
        assert!(audit_dead_ends(&z2, &[], 1000).unwrap().passed());
        assert!(check_standard_language(&z2, &PlaneStandardLanguage).unwrap().passed());
        let klein = BallIndex::build(KleinModel, 8).unwrap();
        let report = audit_dead_ends(&klein, &[], 1000).unwrap();
        assert_eq!(report.states_checked, klein.interior().count());
    }

    #[test]
    fn truncated_language_fails_prefix_check() {
        let z2 = BallIndex::build(Z2Model, 6).unwrap();
        let broken = TruncatedLanguage {
            inner: PlaneStandardLanguage,
            cap: 3,
        };
        let report = check_standard_language(&z2, &broken).unwrap();
        assert!(!report.prefix_failures.is_empty());
        assert_eq!(report.verdict, Verdict::Fail);
    }

    #[test]
    fn last_letter_at_small_radius() {
        let ball = BallIndex::build(CkModel, 9).unwrap();
        let g = Element::new(3, 0, 0);
        assert!(ball.continuations(&g).unwrap().contains(Letter::B));
        let ends_in_b_inv = ball
            .enumerate_geodesics(&g, 100)
            .unwrap()
            .iter()
            .any(|w| w.last() == Some(Letter::BInv));
        assert!(!ends_in_b_inv);
        let report = check_last_letter(&ball, Some(200), 1000).unwrap();
        assert!(report.violations.is_empty());
        assert_eq!(report.pairs_checked, 4 * report.elements_checked);
    }
}
