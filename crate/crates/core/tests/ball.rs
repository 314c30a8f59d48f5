use cklein_core::element::{evaluate, IsometryKind, KleinElement};
use cklein_core::geodesic::{self, RegionCase};
use cklein_core::model::{CkModel, GroupModel, KleinModel, Z2Model};
use cklein_core::moves::{self, is_valid_move};
use cklein_core::oracle::{self, BallIndex, CkStandardLanguage, PlaneStandardLanguage};
use cklein_core::word::{Letter, Word};
use cklein_core::young::young_decomposition;
use std::sync::OnceLock;

const R: u32 = 10;

fn ball() -> &'static BallIndex<CkModel> {
    static BALL: OnceLock<BallIndex<CkModel>> = OnceLock::new();
    BALL.get_or_init(|| BallIndex::build(CkModel, R).unwrap())
}

#[test]
fn closed_forms_match_the_ball() {
    assert!(oracle::certify_lengths(ball()).unwrap().is_empty());
    assert!(oracle::certify_standard_representatives(ball()).unwrap().is_empty());
}

#[test]
fn ball_is_deterministic() {
    let again = BallIndex::build(CkModel, R).unwrap();
    assert_eq!(again.levels(), ball().levels());
    assert_eq!(oracle::export_rows(&again), oracle::export_rows(ball()));
}

#[test]
fn distance_is_isometry_invariant() {
    for (g, d) in ball().iter() {
        for kind in [IsometryKind::NFlip, IsometryKind::FullFlip] {
            assert_eq!(ball().distance(&g.apply_isometry(kind).unwrap()), Some(d), "{g}");
        }
    }
}

#[test]
fn projection_never_increases_distance() {
    let klein = BallIndex::build(KleinModel, R).unwrap();
    for (g, d) in ball().iter() {
        let p: KleinElement = g.project_to_klein();
        assert!(klein.distance(&p).unwrap() <= d, "{g}");
    }
}

#[test]
fn enumerated_geodesics_are_geodesic_throughout() {
    for (g, d) in ball().iter().filter(|(_, d)| *d <= 7) {
        let words = ball().enumerate_geodesics(g, 10_000).unwrap();
        assert!(!words.is_empty());
        for w in &words {
            assert_eq!(w.len(), d as usize);
            assert_eq!(evaluate(w).unwrap(), *g);
            for p in w.prefixes() {
                assert!(geodesic::is_geodesic(&p).unwrap(), "{g}: {p}");
            }
        }
    }
}

#[test]
fn no_dead_ends_in_the_planar_models() {
    let report = oracle::audit_dead_ends(ball(), &[], 1000).unwrap();
    assert!(report.dead_end_candidates.is_empty());
    assert!(report.parity_violations.is_empty());
    let z2 = BallIndex::build(Z2Model, R).unwrap();
    assert!(oracle::audit_dead_ends(&z2, &[], 1000).unwrap().passed());
    assert!(oracle::check_standard_language(&z2, &PlaneStandardLanguage).unwrap().passed());
}

#[test]
fn standard_language_certifies_the_ball() {
    let report = oracle::check_standard_language(ball(), &CkStandardLanguage).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.certified_elements, ball().interior().count());
}

#[test]
fn continuation_claims_fail_only_on_the_n_zero_line() {
    let report = oracle::check_continuation_claims(ball()).unwrap();
    assert!(!report.violations.is_empty());
    for v in &report.violations {
        assert_eq!((v.element.n, v.missing.as_str()), (0, "a"), "{v:?}");
        assert_ne!(v.element.k, 0);
    }
    for (g, _) in ball().interior() {
        assert_eq!(geodesic::continuations(g).unwrap(), ball().continuations(g).unwrap(), "{g}");
    }
}

#[test]
fn last_letter_criterion_holds() {
    let report = oracle::check_last_letter(ball(), None, 10_000).unwrap();
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert_eq!(report.pairs_checked, 4 * report.elements_checked);
}

#[test]
fn region_labels_are_exhaustive() {
    for (g, _) in ball().iter() {
        let r = geodesic::classify_region(g).unwrap();
        assert_ne!(r, RegionCase::Unnormalized);
    }
}

#[test]
fn move_relation_is_symmetric_and_valid() {
    for (g, d) in ball().iter().filter(|(_, d)| (4..=8).contains(d)) {
        if !g.is_normalized() {
            continue;
        }
        for w in ball().enumerate_geodesics(g, 10_000).unwrap() {
            for e in moves::neighbors(&w).unwrap() {
                assert!(is_valid_move(&e.from, &e.to).unwrap());
                let back = moves::neighbors(&e.to).unwrap();
                assert!(back.iter().any(|b| b.to == w), "{} -> {} ({d})", e.from, e.to);
            }
        }
    }
}

#[test]
fn orbits_are_complete_away_from_n_zero() {
    for (g, _) in ball().iter().filter(|(_, d)| *d <= 8) {
        if !g.is_normalized() {
            continue;
        }
        let report = moves::check_move_connectivity(ball(), g, 100_000, 100_000).unwrap();
        assert!(report.contains_std_rep);
        assert_eq!(report.connected, g.n != 0 || g.k == 0, "{g}");
    }
}

#[test]
fn young_decomposition_round_trips() {
    for (g, _) in ball().iter().filter(|(_, d)| *d <= 8) {
        if !g.is_normalized() {
            continue;
        }
        let words = ball().enumerate_geodesics(g, 10_000).unwrap();
        let mut seen = std::collections::HashSet::new();
        for w in &words {
            let d = young_decomposition(w).unwrap();
            assert_eq!(&d.reconstruct().unwrap(), w);
            assert!(seen.insert(d), "{g}: two geodesics share a decomposition");
        }
    }
}

#[test]
fn steps_are_inverted_in_every_ball_state() {
    for (g, _) in ball().iter() {
        for l in Letter::ALL {
            let h = CkModel.step(g, l).unwrap();
            assert_eq!(CkModel.step(&h, l.inverse()).unwrap(), *g);
        }
    }
    assert_eq!(KleinModel.evaluate(&Word::empty()).unwrap(), KleinElement::IDENTITY);
}
