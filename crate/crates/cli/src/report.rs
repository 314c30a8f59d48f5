//! JSON reports for move orbits and audits.

use cklein_core::element::{evaluate, Element};
use cklein_core::geodesic;
use cklein_core::model::{CkModel, GroupModel, KleinModel, Z2Model};
use cklein_core::moves::{self, MoveEdge, Orbit};
use cklein_core::oracle::{
    self, AuditReport, BallIndex, CkStandardLanguage, ContinuationReport, LastLetterReport,
    PlaneStandardLanguage, StandardLanguage, TruncatedLanguage, Verdict,
};
use cklein_core::word::{format_word, Word};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// States sampled for the dead-end criterion (every geodesic of each is
/// enumerated).
pub const DEAD_END_SAMPLE: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: String,
    pub to: String,
    pub kind: String,
}

impl From<&MoveEdge> for EdgeRecord {
    fn from(e: &MoveEdge) -> Self {
        EdgeRecord {
            from: format_word(&e.from),
            to: format_word(&e.to),
            kind: e.kind.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub element: Element,
    pub word: String,
    pub orbit_size: usize,
    pub words: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

impl OrbitReport {
    pub fn new(word: &Word, orbit: &Orbit) -> Result<Self, CliError> {
        Ok(OrbitReport {
            element: evaluate(word)?,
            word: format_word(word),
            orbit_size: orbit.words.len(),
            words: orbit.words.iter().map(format_word).collect(),
            edges: orbit.edges.iter().map(EdgeRecord::from).collect(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("element {}\nwords {}\n", self.element, self.orbit_size);
        for w in &self.words {
            s.push_str(&format!("  {w}\n"));
        }
        s.push_str(&format!("edges {}\n", self.edges.len()));
        for e in &self.edges {
            s.push_str(&format!("  {} -> {} {}\n", e.from, e.to, e.kind));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveReport {
    pub element: Element,
    pub geodesic_count: usize,
    pub orbit_size: usize,
    pub contains_std_rep: bool,
    pub connected: bool,
    pub edges: Vec<EdgeRecord>,
}

impl MoveReport {
    /// Builds the ball of radius `length(g)` and compares the move orbit of
    /// the standard representative with the full geodesic set.
    pub fn check(g: &Element, max_states: usize, cap: usize) -> Result<Self, CliError> {
        let radius = u32::try_from(geodesic::length(g)?)
            .map_err(|_| CliError::Resource(format!("{g} is too long for a ball search")))?;
        let ball = BallIndex::build_with_budget(CkModel, radius, max_states)?;
        let r = moves::check_move_connectivity(&ball, g, cap, cap)?;
        Ok(MoveReport {
            element: r.element,
            geodesic_count: r.geodesic_count,
            orbit_size: r.orbit_size,
            contains_std_rep: r.contains_std_rep,
            connected: r.connected,
            edges: r.orbit.edges.iter().map(EdgeRecord::from).collect(),
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "element {}\ngeodesic_count {}\norbit_size {}\ncontains_std_rep {}\nconnected {}\n",
            self.element, self.geodesic_count, self.orbit_size, self.contains_std_rep, self.connected
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Ck,
    Klein,
    Z2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum LanguageKind {
    Standard,
    /// Standard words truncated to half the radius; a negative control.
    Broken,
}

/// Sections of a full audit. `verdict` is `pass` iff every section passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub model: ModelKind,
    pub radius: u32,
    pub language: LanguageKind,
    pub seed: u64,
    pub ball_size: usize,
    /// Dead ends, parity flips and the sampled dead-end criterion.
    pub no_dead_ends: AuditReport,
    /// The standard-language certificate.
    pub standard_language: AuditReport,
    /// Region-wise continuation claims, `cK` only.
    pub continuations: Option<ContinuationReport>,
    pub last_letter: LastLetterReport,
    pub verdict: Verdict,
}

impl AuditSummary {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AuditOptions {
    pub model: ModelKind,
    pub radius: u32,
    pub language: LanguageKind,
    pub seed: u64,
    pub max_states: usize,
    pub geodesic_cap: usize,
}

pub fn run_audit(opts: &AuditOptions) -> Result<AuditSummary, CliError> {
    match opts.model {
        ModelKind::Ck => {
            let ball = BallIndex::build_with_budget(CkModel, opts.radius, opts.max_states)?;
            let continuations = oracle::check_continuation_claims(&ball)?;
            audit_ball(&ball, CkStandardLanguage, opts, Some(continuations))
        }
        ModelKind::Klein => {
            let ball = BallIndex::build_with_budget(KleinModel, opts.radius, opts.max_states)?;
            audit_ball(&ball, PlaneStandardLanguage, opts, None)
        }
        ModelKind::Z2 => {
            let ball = BallIndex::build_with_budget(Z2Model, opts.radius, opts.max_states)?;
            audit_ball(&ball, PlaneStandardLanguage, opts, None)
        }
    }
}

fn audit_ball<M: GroupModel, L: StandardLanguage + Copy>(
    ball: &BallIndex<M>,
    language: L,
    opts: &AuditOptions,
    continuations: Option<ContinuationReport>,
) -> Result<AuditSummary, CliError> {
    let mut interior: Vec<M::State> = ball.interior().map(|(s, _)| s.clone()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    interior.shuffle(&mut rng);
    interior.truncate(DEAD_END_SAMPLE);
    interior.sort();
    let no_dead_ends = oracle::audit_dead_ends(ball, &interior, opts.geodesic_cap)?;
    let standard_language = match opts.language {
        LanguageKind::Standard => oracle::check_standard_language(ball, &language)?,
        LanguageKind::Broken => {
            let broken = TruncatedLanguage {
                inner: language,
                cap: opts.radius as usize / 2,
            };
            oracle::check_standard_language(ball, &broken)?
        }
    };
    let last_letter = oracle::check_last_letter(ball, None, opts.geodesic_cap)?;
    let pass = no_dead_ends.passed()
        && standard_language.passed()
        && continuations.as_ref().is_none_or(|c| c.verdict == Verdict::Pass)
        && last_letter.violations.is_empty();
    Ok(AuditSummary {
        model: opts.model,
        radius: opts.radius,
        language: opts.language,
        seed: opts.seed,
        ball_size: ball.len(),
        no_dead_ends,
        standard_language,
        continuations,
        last_letter,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}
