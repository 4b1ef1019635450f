//! Every named battery must pass end to end on the built-in corpus.

use hochhodge::suite::{all_suites, suite_by_name, CheckOutcome, SuiteConfig, SUITE_NAMES};

fn assert_all_pass(outcomes: &[CheckOutcome]) {
    let failed: Vec<&CheckOutcome> = outcomes.iter().filter(|o| !o.passed).collect();
    if !failed.is_empty() {
        for o in &failed {
            eprintln!("FAIL {} ({})", o.name, o.details);
        }
        panic!("{} of {} checks failed", failed.len(), outcomes.len());
    }
    assert!(!outcomes.is_empty());
}

fn default() -> SuiteConfig {
    SuiteConfig::default()
}

#[test]
fn homotopy_battery_passes() {
    assert_all_pass(&suite_by_name("homotopy", default()).unwrap().unwrap());
}

#[test]
fn bracket_battery_passes() {
    assert_all_pass(&suite_by_name("bracket", default()).unwrap().unwrap());
}

#[test]
fn hodge_battery_passes() {
    assert_all_pass(&suite_by_name("hodge", default()).unwrap().unwrap());
}

#[test]
fn bicomplex_battery_passes() {
    assert_all_pass(&suite_by_name("bicomplex", default()).unwrap().unwrap());
}

#[test]
fn mc_battery_passes() {
    assert_all_pass(&suite_by_name("mc", default()).unwrap().unwrap());
}

#[test]
fn star_battery_passes() {
    assert_all_pass(&suite_by_name("star", default()).unwrap().unwrap());
}

#[test]
fn schouten_battery_passes() {
    assert_all_pass(&suite_by_name("schouten", default()).unwrap().unwrap());
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(suite_by_name("nonsense", default()).is_none());
    for name in SUITE_NAMES {
        assert!(suite_by_name(name, default()).is_some());
    }
}

#[test]
fn narrow_windows_and_small_trial_counts_still_pass() {
    let cfg = SuiteConfig {
        seed: 11,
        window: 3,
        trials: 10,
    };
    assert_all_pass(&suite_by_name("homotopy", cfg).unwrap().unwrap());
    assert_all_pass(&suite_by_name("bicomplex", cfg).unwrap().unwrap());
}

#[test]
fn batteries_are_deterministic() {
    let a = suite_by_name("star", SuiteConfig::seeded(7)).unwrap().unwrap();
    let b = suite_by_name("star", SuiteConfig::seeded(7)).unwrap().unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.name, y.name);
        assert_eq!(x.passed, y.passed);
        assert_eq!(x.details, y.details);
    }
}

#[test]
fn seed_changes_only_randomized_details() {
    let a = all_suites(SuiteConfig::seeded(1)).unwrap();
    let b = all_suites(SuiteConfig::seeded(2)).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.name, y.name);
        assert!(x.passed && y.passed, "{} with seeds 1/2", x.name);
    }
}
