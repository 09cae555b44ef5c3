use std::io::{self, Write};

use recos_core::harness::round_half_away;
use recos_core::stats::{Alternative, TestResult};
use recos_core::{ComparisonReport, StatsError};

fn p_value(p: f64) -> String {
    format!("{p:.2e}")
}

fn not_applicable(e: &StatsError) -> String {
    format!("n/a ({e})")
}

pub(crate) fn write_table(r: &ComparisonReport, alternative: Alternative, out: &mut dyn Write) -> io::Result<()> {
    let s = &r.descriptive;
    writeln!(
        out,
        "{} vs {}: {} paired cells, alternative {}",
        r.method_a,
        r.method_b,
        s.n,
        alternative.as_str()
    )?;
    writeln!(out)?;
    writeln!(out, "differences ({} - {})", r.method_a, r.method_b)?;
    let rows = [
        ("mean", s.mean),
        ("sd", s.sd),
        ("se", s.se),
        ("median", s.median),
        ("min", s.min),
        ("max", s.max),
        ("q1", s.q1),
        ("q3", s.q3),
        ("iqr", s.iqr),
    ];
    for (name, value) in rows {
        writeln!(out, "  {name:<24}{value:.3}")?;
    }
    writeln!(out, "  {:<24}{} / {} / {}", "wins / ties / losses", s.wins, s.ties, s.losses)?;
    if s.wins + s.losses > 0 {
        writeln!(
            out,
            "  {:<24}{:.1}% of {} non-tied",
            "win rate",
            100.0 * s.win_rate_excl_ties,
            s.wins + s.losses
        )?;
    }
    writeln!(out, "  {:<24}{:.1}% of {} cells", "win rate", 100.0 * s.win_rate_all, s.n)?;
    writeln!(out)?;

    writeln!(out, "tests")?;
    match &r.wilcoxon {
        Ok(t) => {
            let v = t.statistic;
            writeln!(out, "  {:<24}V = {} ({} rounded), n = {}", "wilcoxon", v, round_half_away(v, 0), t.n_used)?;
            write_p(out, t, r)?;
            writeln!(out, "  {:<24}r = {:.3}", "", t.effect_size)?;
        }
        Err(e) => writeln!(out, "  {:<24}{}", "wilcoxon", not_applicable(e))?,
    }
    match &r.sign {
        Ok(t) => {
            writeln!(out, "  {:<24}{}/{} successes", "sign test", t.statistic, t.n_used)?;
            write_p(out, t, r)?;
        }
        Err(e) => writeln!(out, "  {:<24}{}", "sign test", not_applicable(e))?,
    }
    match &r.t_test {
        Ok(t) => {
            writeln!(out, "  {:<24}t = {:.3}, df = {}", "paired t", t.statistic, t.df.unwrap_or(f64::NAN))?;
            write_p(out, t, r)?;
            writeln!(out, "  {:<24}d_z = {:.3}", "", t.effect_size)?;
        }
        Err(e) => writeln!(out, "  {:<24}{}", "paired t", not_applicable(e))?,
    }
    match &r.pooled_d {
        Ok(d) => writeln!(out, "  {:<24}{:.3}", "pooled cohen's d", d)?,
        Err(e) => writeln!(out, "  {:<24}{}", "pooled cohen's d", not_applicable(e))?,
    }
    match &r.lodo {
        Ok(l) => {
            let t = &l.test;
            writeln!(
                out,
                "  {:<24}t = {:.3}, df = {}, p = {}",
                "leave-one-dataset-out",
                t.statistic,
                t.df.unwrap_or(f64::NAN),
                p_value(t.p_value)
            )?;
            for (dataset, mean) in &l.exclusion_means {
                writeln!(out, "  {:<24}without {dataset}: {mean:.3}", "")?;
            }
        }
        Err(e) => writeln!(out, "  {:<24}{}", "leave-one-dataset-out", not_applicable(e))?,
    }
    writeln!(out)?;
    writeln!(out, "micro-averages")?;
    writeln!(out, "  {:<24}{:.2}", r.method_a, round_half_away(r.micro_avg_a, 2))?;
    writeln!(out, "  {:<24}{:.2}", r.method_b, round_half_away(r.micro_avg_b, 2))?;
    Ok(())
}

fn write_p(out: &mut dyn Write, t: &TestResult, r: &ComparisonReport) -> io::Result<()> {
    match r.bh_adjusted.get(t.method_name) {
        Some(adj) => writeln!(out, "  {:<24}p = {}, BH p = {}", "", p_value(t.p_value), p_value(*adj)),
        None => writeln!(out, "  {:<24}p = {}", "", p_value(t.p_value)),
    }
}

/// `statistic,value` rows; values use Rust's shortest round-trip formatting.
pub(crate) fn write_csv(r: &ComparisonReport, alternative: Alternative, out: &mut dyn Write) -> io::Result<()> {
    let s = &r.descriptive;
    let mut rows: Vec<(String, String)> = vec![
        ("method_a".into(), r.method_a.clone()),
        ("method_b".into(), r.method_b.clone()),
        ("alternative".into(), alternative.as_str().into()),
        ("n".into(), s.n.to_string()),
        ("mean_diff".into(), s.mean.to_string()),
        ("sd_diff".into(), s.sd.to_string()),
        ("se_diff".into(), s.se.to_string()),
        ("median_diff".into(), s.median.to_string()),
        ("min_diff".into(), s.min.to_string()),
        ("max_diff".into(), s.max.to_string()),
        ("q1_diff".into(), s.q1.to_string()),
        ("q3_diff".into(), s.q3.to_string()),
        ("iqr_diff".into(), s.iqr.to_string()),
        ("wins".into(), s.wins.to_string()),
        ("ties".into(), s.ties.to_string()),
        ("losses".into(), s.losses.to_string()),
        ("win_rate_excl_ties".into(), s.win_rate_excl_ties.to_string()),
        ("win_rate_all".into(), s.win_rate_all.to_string()),
    ];
    let mut test_rows = |prefix: &str, t: &Result<TestResult, StatsError>| match t {
        Ok(t) => {
            rows.push((format!("{prefix}_statistic"), t.statistic.to_string()));
            rows.push((format!("{prefix}_p"), t.p_value.to_string()));
            if let Some(adj) = r.bh_adjusted.get(t.method_name) {
                rows.push((format!("{prefix}_p_bh"), adj.to_string()));
            }
            rows.push((format!("{prefix}_effect_size"), t.effect_size.to_string()));
            rows.push((format!("{prefix}_n_used"), t.n_used.to_string()));
            if let Some(df) = t.df {
                rows.push((format!("{prefix}_df"), df.to_string()));
            }
        }
        Err(_) => rows.push((format!("{prefix}_statistic"), "NA".into())),
    };
    test_rows("wilcoxon", &r.wilcoxon);
    test_rows("sign", &r.sign);
    test_rows("t", &r.t_test);
    test_rows("lodo", &r.lodo.as_ref().map(|l| l.test.clone()).map_err(Clone::clone));
    if let Ok(l) = &r.lodo {
        for (dataset, mean) in &l.exclusion_means {
            rows.push((format!("lodo_mean_without_{dataset}"), mean.to_string()));
        }
    }
    rows.push((
        "pooled_cohens_d".into(),
        r.pooled_d.as_ref().map_or("NA".into(), |d| d.to_string()),
    ));
    rows.push(("micro_avg_a".into(), r.micro_avg_a.to_string()));
    rows.push(("micro_avg_b".into(), r.micro_avg_b.to_string()));

    writeln!(out, "statistic,value")?;
    for (name, value) in rows {
        writeln!(out, "{name},{value}")?;
    }
    Ok(())
}
