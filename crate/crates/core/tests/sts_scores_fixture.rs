//! Reproduction of the aggregate statistics derived from the bundled score table.
//!
//! Expected values were computed independently from the table cells (scipy /
//! numpy) and agree with the published summary figures.

use recos_core::harness::compare;
use recos_core::io::{load_results, sts_scores, Centi};
use recos_core::stats::{cohens_d_paired, Alternative};

#[test]
fn fixture_integrity() {
    let t = sts_scores();
    assert_eq!(t.len(), 231);
    let r = compare(&t, "recos", "cos").unwrap();
    assert_eq!(r.descriptive.n, 77);
    assert_eq!(r.descriptive.ties, 5);
    let losses: Vec<_> = r
        .diffs
        .diffs()
        .iter()
        .zip(r.diffs.labels())
        .filter(|(d, _)| **d < 0.0)
        .map(|(d, l)| (l.model.as_str(), l.dataset.as_str(), *d))
        .collect();
    assert_eq!(losses, [("BGE", "STS13", -0.31)]);
    assert_eq!(t.score("BGE", "recos", "STS13"), Some(Centi(3188)));
}

#[test]
fn fixture_file_matches_bundled_copy() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/sts_scores.csv");
    assert_eq!(load_results(path).unwrap(), sts_scores());
}

#[test]
fn recos_vs_cos_descriptives() {
    let r = compare(&sts_scores(), "recos", "cos").unwrap();
    let s = &r.descriptive;
    assert_eq!((s.wins, s.ties, s.losses), (71, 5, 1));
    assert!((s.mean - 0.2924675324675325).abs() < 1e-12);
    assert!((s.sd - 0.3564117807882066).abs() < 1e-12);
    assert!((s.se - 0.040616891995630136).abs() < 1e-12);
    assert!((s.median - 0.16).abs() < 1e-12);
    assert_eq!(s.min, -0.31);
    assert_eq!(s.max, 1.36);
    assert!((s.q1 - 0.07).abs() < 1e-12);
    assert!((s.q3 - 0.35).abs() < 1e-12);
    assert!((s.win_rate_excl_ties - 71.0 / 72.0).abs() < 1e-15);
    assert!((s.win_rate_all - 71.0 / 77.0).abs() < 1e-15);
}

#[test]
fn recos_vs_cos_tests() {
    let r = compare(&sts_scores(), "recos", "cos").unwrap();

    let w = r.wilcoxon.as_ref().unwrap();
    assert_eq!(w.statistic, 2580.5);
    assert_eq!(w.statistic.round(), 2581.0);
    assert_eq!(w.n_used, 72);
    assert!((w.p_value - 6.011633306417904e-13).abs() / 6.011633306417904e-13 < 1e-8);
    assert!((w.effect_size - 0.8373444419103795).abs() < 1e-10);

    let s = r.sign.as_ref().unwrap();
    assert_eq!((s.statistic, s.n_used), (71.0, 72));
    assert!((s.p_value - 1.545835128739098e-20).abs() / 1.545835128739098e-20 < 1e-9);

    let t = r.t_test.as_ref().unwrap();
    assert!((t.statistic - 7.200637914368196).abs() < 1e-9);
    assert_eq!(t.df, Some(76.0));
    assert!((t.p_value - 1.834965483187058e-10).abs() < 1e-16);

    assert!((r.pooled_d.clone().unwrap() - 0.02739563867052171).abs() < 1e-10);
    assert!((cohens_d_paired(&r.diffs).unwrap() - 0.2924675324675325 / 0.3564117807882066).abs() < 1e-12);

    let lodo = r.lodo.as_ref().unwrap();
    assert!((lodo.test.statistic - 75.34936953844813).abs() < 1e-8);
    assert_eq!(lodo.test.df, Some(6.0));
    assert!((lodo.mean_improvement - 0.2924675).abs() < 1e-3);
    assert_eq!(lodo.exclusion_means.len(), 7);

    assert!((r.micro_avg_a - 66.11675324675326).abs() < 1e-9);
    assert!((r.micro_avg_b - 65.8242857142857).abs() < 1e-9);
    assert_eq!(r.bh_adjusted.len(), 3);
    for (name, adj) in &r.bh_adjusted {
        assert!(*adj < 1e-9, "{name}: {adj}");
    }
}

#[test]
fn cos_vs_decos() {
    let t = sts_scores();
    let r = compare(&t, "cos", "decos").unwrap();
    assert_eq!((r.descriptive.wins, r.descriptive.ties, r.descriptive.losses), (58, 17, 2));
    assert!((r.micro_avg_b - 65.64675324675324).abs() < 1e-9);
}

#[test]
fn comparison_is_antisymmetric() {
    let t = sts_scores();
    let ab = compare(&t, "recos", "cos").unwrap();
    let ba = compare(&t, "cos", "recos").unwrap();
    assert!((ab.descriptive.mean + ba.descriptive.mean).abs() < 1e-15);
    assert_eq!(ab.descriptive.wins, ba.descriptive.losses);
    assert_eq!(ab.descriptive.losses, ba.descriptive.wins);
    assert_eq!(ab.descriptive.n, 77);
}

#[test]
fn self_comparison_is_all_ties() {
    let r = compare(&sts_scores(), "recos", "recos").unwrap();
    assert_eq!(r.descriptive.ties, 77);
    assert!(r.wilcoxon.is_err());
    assert!(r.sign.is_err());
    assert!(r.t_test.is_err());
    assert!(r.bh_adjusted.is_empty());
    assert!(!r.all_tests_ran());
}

#[test]
fn two_sided_doubles_t_tail() {
    let t = sts_scores();
    let one = compare(&t, "recos", "cos").unwrap();
    let two = recos_core::compare_with(&t, "recos", "cos", Alternative::TwoSided).unwrap();
    let (p1, p2) = (one.t_test.unwrap().p_value, two.t_test.unwrap().p_value);
    assert!((p2 - 2.0 * p1).abs() < 1e-18);
}
