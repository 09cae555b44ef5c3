use std::fmt::Display;
use std::io::{self, Write};
use std::path::Path;

use recos_core::harness::{compare_with, evaluate};
use recos_core::io::{load_pairs, load_results, parse_vector};
use recos_core::stats::Alternative;
use recos_core::{bound_chain, similarity, DenseVector, MetricKind};

use crate::report::{write_csv, write_table};
use crate::{Format, EXIT_DATA};

/// A failed command: exit code plus the message for stderr.
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Display) -> Self {
        Self {
            code,
            message: message.to_string(),
        }
    }

    fn data(message: impl Display) -> Self {
        Self::new(EXIT_DATA, message)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::data(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn vector_arg(name: &str, text: &str) -> Result<DenseVector, Failure> {
    parse_vector(text).map_err(|e| Failure::data(format!("--{name}: {e}")))
}

fn vector_pair(u: &str, v: &str) -> Result<(DenseVector, DenseVector), Failure> {
    let (u, v) = (vector_arg("u", u)?, vector_arg("v", v)?);
    if u.dim() != v.dim() {
        return Err(Failure::data(format!(
            "dimension mismatch: --u has {} components, --v has {}",
            u.dim(),
            v.dim()
        )));
    }
    Ok((u, v))
}

pub(crate) fn sim(metric: MetricKind, u: &str, v: &str, out: &mut dyn Write) -> Outcome {
    let (u, v) = vector_pair(u, v)?;
    let score = similarity(metric, &u, &v).map_err(|e| Failure::data(format!("{metric}: {e}")))?;
    writeln!(out, "{score:.6}")?;
    Ok(())
}

pub(crate) fn bounds(u: &str, v: &str, out: &mut dyn Write) -> Outcome {
    let (u, v) = vector_pair(u, v)?;
    let chain = bound_chain(&u, &v).map_err(Failure::data)?;
    let labels = ["|u·v|", "rearrangement", "cauchy_schwarz", "am_qm"];
    for (label, value) in labels.iter().zip(chain.as_array()) {
        writeln!(out, "{label:<16}{value:.6}")?;
    }
    Ok(())
}

pub(crate) fn bench(path: &Path, metric: MetricKind, out: &mut dyn Write) -> Outcome {
    let dataset = load_pairs(path).map_err(Failure::data)?;
    let report = evaluate(&dataset, metric).map_err(Failure::data)?;
    writeln!(out, "dataset   {}", report.dataset)?;
    writeln!(out, "metric    {}", report.metric)?;
    writeln!(out, "n_pairs   {}", report.n_pairs)?;
    writeln!(out, "rho_x100  {:.2}", report.rho_x100_rounded())?;
    Ok(())
}

pub(crate) fn compare(path: &Path, a: &str, b: &str, two_sided: bool, format: Format, out: &mut dyn Write) -> Outcome {
    let table = load_results(path).map_err(Failure::data)?;
    let alternative = if two_sided {
        Alternative::TwoSided
    } else {
        Alternative::Greater
    };
    let report = compare_with(&table, a, b, alternative).map_err(Failure::data)?;
    match format {
        Format::Table => write_table(&report, alternative, out)?,
        Format::Csv => write_csv(&report, alternative, out)?,
    }
    if report.descriptive.ties == report.descriptive.n {
        return Err(Failure::data(format!(
            "`{a}` and `{b}` agree on every cell; the paired tests are not applicable"
        )));
    }
    Ok(())
}
