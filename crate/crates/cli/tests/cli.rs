use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const SCORES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/sts_scores.csv");

fn recos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recos")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn pair_file(rows: &[(f64, [f64; 2], [f64; 2])]) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
    writeln!(f, "gold,u_0,u_1,v_0,v_1").unwrap();
    for (gold, u, v) in rows {
        writeln!(f, "{gold},{},{},{},{}", u[0], u[1], v[0], v[1]).unwrap();
    }
    f
}

/// Second vectors have cosine 1, 0, 0.6, -0.8, 0.8 against (1, 0).
const PARTNERS: [[f64; 2]; 5] = [[2.0, 0.0], [0.0, 3.0], [0.6, 0.8], [-0.8, 0.6], [0.8, 0.6]];

fn cos_pairs(gold: [f64; 5]) -> NamedTempFile {
    let rows: Vec<_> = gold.iter().zip(PARTNERS).map(|(&g, v)| (g, [1.0, 0.0], v)).collect();
    pair_file(&rows)
}

fn bench(path: &Path, metric: &str) -> Output {
    recos(&["bench", "--pairs", path.to_str().unwrap(), "--metric", metric])
}

fn rho_line(o: &Output) -> String {
    stdout(o).lines().find(|l| l.starts_with("rho_x100")).unwrap().to_owned()
}

#[test]
fn sim_prints_six_decimals() {
    let o = recos(&["sim", "--metric", "recos", "--u", "1,5.5,2,4", "--v", "1,8.5,2,4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1.000000\n");
    let o = recos(&["sim", "--metric", "cos", "--u", "1,5.5,2,4", "--v", "1.225,6.7375,2.45,4.9"]);
    assert_eq!(stdout(&o), "1.000000\n");
}

#[test]
fn sim_accepts_negative_components() {
    let o = recos(&["sim", "--metric", "cos", "--u", "-1,0", "--v", "1,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-1.000000\n");
}

#[test]
fn sim_dimension_mismatch_is_a_data_error() {
    let o = recos(&["sim", "--metric", "cos", "--u", "1,2", "--v", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("dimension mismatch: --u has 2 components, --v has 1"));
    assert!(o.stdout.is_empty());
}

#[test]
fn sim_rejects_unknown_metric_as_usage_error() {
    let o = recos(&["sim", "--metric", "jaccard", "--u", "1", "--v", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sim_rejects_unparseable_component() {
    let o = recos(&["sim", "--metric", "cos", "--u", "1,x", "--v", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: --u"));
}

fn bound_values(u: &str, v: &str) -> Vec<f64> {
    let o = recos(&["bounds", "--u", u, "--v", v]);
    assert!(o.status.success(), "{}", stderr(&o));
    stdout(&o).lines().map(|l| l.split_whitespace().last().unwrap().parse().unwrap()).collect()
}

#[test]
fn bounds_examples() {
    assert_eq!(bound_values("1,2", "2,1"), [4.0, 5.0, 5.0, 5.0]);
    assert_eq!(bound_values("1,0", "1,0"), [1.0, 1.0, 1.0, 1.0]);
    assert_eq!(bound_values("1,2", "2,4"), [10.0, 10.0, 10.0, 12.5]);
}

#[test]
fn bounds_labels_in_chain_order() {
    let o = recos(&["bounds", "--u", "1,2", "--v", "2,1"]);
    let labels: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_owned()).collect();
    assert_eq!(labels, ["|u·v|", "rearrangement", "cauchy_schwarz", "am_qm"]);
}

#[test]
fn bench_perfect_and_reversed_gold() {
    let f = cos_pairs([1.0, 0.0, 0.6, -0.8, 0.8]);
    let o = bench(f.path(), "cos");
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(rho_line(&o), "rho_x100  100.00");
    assert!(stdout(&o).contains("n_pairs   5"));

    let f = cos_pairs([-1.0, 0.0, -0.6, 0.8, -0.8]);
    assert_eq!(rho_line(&bench(f.path(), "cos")), "rho_x100  -100.00");
}

#[test]
fn bench_five_pair_oracle() {
    // ranks 5,2,3,1,4 against gold ranks 4,1,2.5,2.5,5: 7/sqrt(95)
    let f = cos_pairs([3.0, 0.5, 1.0, 1.0, 4.0]);
    assert_eq!(rho_line(&bench(f.path(), "cos")), "rho_x100  71.82");
}

#[test]
fn bench_names_dataset_after_file_stem() {
    let f = cos_pairs([1.0, 0.0, 0.6, -0.8, 0.8]);
    let stem = f.path().file_stem().unwrap().to_str().unwrap().to_owned();
    assert!(stdout(&bench(f.path(), "cos")).contains(&format!("dataset   {stem}")));
}

#[test]
fn bench_missing_file_is_a_data_error() {
    let o = bench(Path::new("/nonexistent/pairs.csv"), "cos");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn bench_malformed_row_is_a_data_error() {
    let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
    writeln!(f, "gold,u_0,v_0\n1,2,3\n1,oops,3").unwrap();
    let o = bench(f.path(), "cos");
    assert_eq!(o.status.code(), Some(1));
}

fn compare(a: &str, b: &str, extra: &[&str]) -> Output {
    let mut args = vec!["compare", "--results", SCORES, "--a", a, "--b", b];
    args.extend_from_slice(extra);
    recos(&args)
}

#[test]
fn compare_recos_against_cos() {
    let o = compare("recos", "cos", &[]);
    assert!(o.status.success(), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("77 paired cells, alternative greater"), "{s}");
    assert!(s.contains("71 / 5 / 1"), "{s}");
    assert!(s.contains("98.6% of 72 non-tied"), "{s}");
    assert!(s.contains("V = 2580.5 (2581 rounded)"), "{s}");
    assert!(s.contains("71/72 successes"), "{s}");
}

#[test]
fn compare_cos_against_decos() {
    let o = compare("cos", "decos", &[]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("58 / 17 / 2"), "{}", stdout(&o));
}

#[test]
fn compare_two_sided_doubles_one_sided_sign_p() {
    let p = |extra: &[&str]| -> f64 {
        let o = compare("recos", "cos", &[&["--format", "csv"], extra].concat());
        let s = stdout(&o);
        s.lines().find_map(|l| l.strip_prefix("sign_p,")).unwrap().parse().unwrap()
    };
    let (one, two) = (p(&[]), p(&["--two-sided"]));
    assert!((two - 2.0 * one).abs() <= 1e-12 * two, "{one} {two}");
}

#[test]
fn compare_csv_format() {
    let o = compare("recos", "cos", &["--format", "csv"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("statistic,value"));
    assert!(lines.all(|l| l.split(',').count() == 2));
    assert!(s.contains("\nwins,71\n"));
    assert!(s.contains("\nwilcoxon_statistic,2580.5\n"));
}

#[test]
fn compare_method_with_itself_is_a_data_error() {
    let o = compare("recos", "recos", &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("agree on every cell"));
    assert!(stdout(&o).contains("0 / 77 / 0"));
}

#[test]
fn compare_unknown_method_is_a_data_error() {
    let o = compare("recos", "manhattan", &[]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn selftest_passes_and_is_deterministic() {
    let a = recos(&["selftest", "--seed", "7", "--trials", "1"]);
    let b = recos(&["selftest", "--seed", "7", "--trials", "1"]);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("selftest seed=7 trials=1"));
    assert!(stdout(&a).trim_end().ends_with("all 9 properties passed"));
}

#[test]
fn selftest_rejects_zero_trials() {
    assert_eq!(recos(&["selftest", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    assert_eq!(recos(&[]).status.code(), Some(2));
}
