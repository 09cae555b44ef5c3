//! On-disk formats: pair CSV, results CSV and vector literals.
//!
//! # Pair CSV
//!
//! ```text
//! gold,u_0,...,u_{d-1},v_0,...,v_{d-1}
//! 4.0,1,0,1,0
//! ```
//!
//! The header fixes `d`; each following line is one record. Fields are
//! comma-separated decimal literals with `.` as the decimal point. LF and CRLF
//! line endings are both accepted. Gold scores are not range-checked.
//!
//! # Results CSV
//!
//! ```text
//! model,method,dataset,score
//! Word2Vec,recos,STS16,67.69
//! ```
//!
//! Scores carry at most two decimals and are held as exact hundredths
//! ([`Centi`]), so differences and tie detection involve no rounding.
//!
//! Parse errors report the 1-based line number of the offending line.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::DataError;
use crate::vector::DenseVector;

/// Bundled score table: 11 models × 3 methods × 7 STS datasets.
pub const STS_SCORES_CSV: &str = include_str!("../../../fixtures/sts_scores.csv");

/// Bundled expert rating vectors `e1`..`e6`.
pub const EXPERTS_CSV: &str = include_str!("../../../fixtures/experts.csv");

/// A decimal with exactly two fractional digits, stored as an integer count of hundredths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Centi(pub i64);

impl Centi {
    pub fn hundredths(self) -> i64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 100.0
    }
}

impl FromStr for Centi {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        let digits_ok = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if int_part.is_empty() || !digits_ok(int_part) || !digits_ok(frac_part) {
            return Err(format!("`{s}` is not a decimal score"));
        }
        if frac_part.len() > 2 || (body.contains('.') && frac_part.is_empty()) {
            return Err(format!("`{s}` must have one or two decimals"));
        }
        let whole: i64 = int_part
            .parse()
            .map_err(|_| format!("`{s}` is out of range"))?;
        let mut frac: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().unwrap() };
        if frac_part.len() == 1 {
            frac *= 10;
        }
        let v = whole
            .checked_mul(100)
            .and_then(|w| w.checked_add(frac))
            .ok_or_else(|| format!("`{s}` is out of range"))?;
        Ok(Centi(if negative { -v } else { v }))
    }
}

impl fmt::Display for Centi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let a = self.0.unsigned_abs();
        write!(f, "{sign}{}.{:02}", a / 100, a % 100)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairRecord {
    pub gold: f64,
    pub u: DenseVector,
    pub v: DenseVector,
}

/// Gold-scored vector pairs sharing one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PairDataset {
    name: String,
    dim: usize,
    records: Vec<PairRecord>,
}

impl PairDataset {
    pub fn new(name: impl Into<String>, records: Vec<PairRecord>) -> Result<Self, DataError> {
        if records.len() < 2 {
            return Err(DataError::TooFewRecords(records.len()));
        }
        let dim = records[0].u.dim();
        for (i, r) in records.iter().enumerate() {
            if r.u.dim() != dim || r.v.dim() != dim {
                return Err(DataError::Parse {
                    line: i as u64 + 2,
                    message: format!(
                        "record dimensions ({}, {}) differ from dataset dimension {dim}",
                        r.u.dim(),
                        r.v.dim()
                    ),
                });
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            records,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn records(&self) -> &[PairRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultRow {
    pub model: String,
    pub method: String,
    pub dataset: String,
    pub score: Centi,
}

/// `(model, method, dataset) → score` records; triples are unique.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ResultsTable {
    rows: Vec<ResultRow>,
}

impl ResultsTable {
    pub fn new(rows: Vec<ResultRow>) -> Result<Self, DataError> {
        let mut seen = HashSet::new();
        for (i, r) in rows.iter().enumerate() {
            if !seen.insert((&r.model, &r.method, &r.dataset)) {
                return Err(DataError::Duplicate {
                    model: r.model.clone(),
                    method: r.method.clone(),
                    dataset: r.dataset.clone(),
                    line: i as u64 + 2,
                });
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[ResultRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn methods(&self) -> BTreeSet<&str> {
        self.rows.iter().map(|r| r.method.as_str()).collect()
    }

    pub fn score(&self, model: &str, method: &str, dataset: &str) -> Option<Centi> {
        self.rows
            .iter()
            .find(|r| r.model == model && r.method == method && r.dataset == dataset)
            .map(|r| r.score)
    }

    /// Rows of one method, in table order.
    pub fn method_rows<'a>(&'a self, method: &'a str) -> impl Iterator<Item = &'a ResultRow> + 'a {
        self.rows.iter().filter(move |r| r.method == method)
    }
}

fn reader<R: Read>(input: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input)
}

fn line_of(record: &csv::StringRecord) -> u64 {
    record.position().map_or(0, |p| p.line())
}

fn parse_component(token: &str, line: u64, column: &str) -> Result<f64, DataError> {
    let x: f64 = token.parse().map_err(|_| DataError::Parse {
        line,
        message: format!("column {column}: `{token}` is not a number"),
    })?;
    if !x.is_finite() {
        return Err(DataError::Parse {
            line,
            message: format!("column {column}: `{token}` is not finite"),
        });
    }
    Ok(x)
}

fn open(path: &Path) -> Result<File, DataError> {
    File::open(path).map_err(|source| DataError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Reads a pair CSV. The dataset is named after the file stem.
pub fn load_pairs(path: impl AsRef<Path>) -> Result<PairDataset, DataError> {
    let path = path.as_ref();
    read_pairs(open(path)?, stem(path))
}

pub fn read_pairs<R: Read>(input: R, name: impl Into<String>) -> Result<PairDataset, DataError> {
    let mut records = reader(input).into_records();
    let header = match records.next() {
        Some(h) => h?,
        None => {
            return Err(DataError::Parse {
                line: 1,
                message: "missing header".into(),
            })
        }
    };
    let header_line = line_of(&header);
    let fields = header.len();
    if fields < 3 || fields % 2 == 0 {
        return Err(DataError::Parse {
            line: header_line,
            message: format!("header has {fields} columns; expected gold plus 2·d vector columns"),
        });
    }
    let dim = (fields - 1) / 2;
    let expected = pair_header(dim);
    if let Some((i, (got, want))) = header.iter().zip(&expected).enumerate().find(|(_, (g, w))| g != w) {
        return Err(DataError::Parse {
            line: header_line,
            message: format!("header column {}: expected `{want}`, found `{got}`", i + 1),
        });
    }

    let mut out = Vec::new();
    for rec in records {
        let rec = rec?;
        let line = line_of(&rec);
        if rec.len() != fields {
            return Err(DataError::Parse {
                line,
                message: format!("expected {fields} fields (d = {dim}), found {}", rec.len()),
            });
        }
        let mut values = Vec::with_capacity(fields);
        for (token, column) in rec.iter().zip(&expected) {
            values.push(parse_component(token, line, column)?);
        }
        let gold = values[0];
        // components already checked finite and non-empty
        let u = DenseVector::new(values[1..=dim].to_vec()).expect("validated components");
        let v = DenseVector::new(values[dim + 1..].to_vec()).expect("validated components");
        out.push(PairRecord { gold, u, v });
    }
    PairDataset::new(name, out)
}

fn pair_header(dim: usize) -> Vec<String> {
    std::iter::once("gold".to_string())
        .chain((0..dim).map(|i| format!("u_{i}")))
        .chain((0..dim).map(|i| format!("v_{i}")))
        .collect()
}

/// Writes a pair CSV. Numbers use the shortest representation that parses back exactly.
pub fn write_pairs<W: Write>(dataset: &PairDataset, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", pair_header(dataset.dim()).join(","))?;
    for r in dataset.records() {
        write!(out, "{}", r.gold)?;
        for x in r.u.iter().chain(r.v.iter()) {
            write!(out, ",{x}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn save_pairs(dataset: &PairDataset, path: impl AsRef<Path>) -> Result<(), DataError> {
    let path = path.as_ref();
    let io_err = |source| DataError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut w = std::io::BufWriter::new(file);
    write_pairs(dataset, &mut w).map_err(io_err)?;
    w.flush().map_err(io_err)
}

const RESULTS_HEADER: [&str; 4] = ["model", "method", "dataset", "score"];

pub fn load_results(path: impl AsRef<Path>) -> Result<ResultsTable, DataError> {
    read_results(open(path.as_ref())?)
}

pub fn read_results<R: Read>(input: R) -> Result<ResultsTable, DataError> {
    let mut records = reader(input).into_records();
    let header = match records.next() {
        Some(h) => h?,
        None => {
            return Err(DataError::Parse {
                line: 1,
                message: "missing header".into(),
            })
        }
    };
    if header.iter().ne(RESULTS_HEADER) {
        return Err(DataError::Parse {
            line: line_of(&header),
            message: format!("expected header `{}`", RESULTS_HEADER.join(",")),
        });
    }

    let mut rows = Vec::new();
    let mut seen = HashSet::new();
    for rec in records {
        let rec = rec?;
        let line = line_of(&rec);
        if rec.len() != 4 {
            return Err(DataError::Parse {
                line,
                message: format!("expected 4 fields, found {}", rec.len()),
            });
        }
        let score: Centi = rec[3]
            .parse()
            .map_err(|message| DataError::Parse { line, message })?;
        let row = ResultRow {
            model: rec[0].to_string(),
            method: rec[1].to_string(),
            dataset: rec[2].to_string(),
            score,
        };
        if !seen.insert((row.model.clone(), row.method.clone(), row.dataset.clone())) {
            return Err(DataError::Duplicate {
                model: row.model,
                method: row.method,
                dataset: row.dataset,
                line,
            });
        }
        rows.push(row);
    }
    ResultsTable::new(rows)
}

pub fn write_results<W: Write>(table: &ResultsTable, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", RESULTS_HEADER.join(","))?;
    for r in table.rows() {
        writeln!(out, "{},{},{},{}", r.model, r.method, r.dataset, r.score)?;
    }
    Ok(())
}

pub fn save_results(table: &ResultsTable, path: impl AsRef<Path>) -> Result<(), DataError> {
    let path = path.as_ref();
    let io_err = |source| DataError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut w = std::io::BufWriter::new(file);
    write_results(table, &mut w).map_err(io_err)?;
    w.flush().map_err(io_err)
}

/// Parses a comma-separated literal such as `1,5.5,2,4`.
pub fn parse_vector(text: &str) -> Result<DenseVector, DataError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(DataError::Literal("empty vector literal".into()));
    }
    let mut xs = Vec::new();
    for (i, token) in text.split(',').enumerate() {
        let token = token.trim();
        if token.is_empty() {
            return Err(DataError::Literal(format!("component {i} is empty")));
        }
        let x: f64 = token
            .parse()
            .map_err(|_| DataError::Literal(format!("component {i}: `{token}` is not a number")))?;
        if !x.is_finite() {
            return Err(DataError::Literal(format!("component {i}: `{token}` is not finite")));
        }
        xs.push(x);
    }
    DenseVector::new(xs).map_err(|e| DataError::Literal(e.to_string()))
}

/// Reads labelled vectors: a header `label,c_0,...,c_{d-1}` then one vector per line.
pub fn read_named_vectors<R: Read>(input: R) -> Result<Vec<(String, DenseVector)>, DataError> {
    let mut records = reader(input).into_records();
    let header = match records.next() {
        Some(h) => h?,
        None => {
            return Err(DataError::Parse {
                line: 1,
                message: "missing header".into(),
            })
        }
    };
    let fields = header.len();
    if fields < 2 {
        return Err(DataError::Parse {
            line: line_of(&header),
            message: "header needs a label column and at least one component".into(),
        });
    }
    let mut out = Vec::new();
    for rec in records {
        let rec = rec?;
        let line = line_of(&rec);
        if rec.len() != fields {
            return Err(DataError::Parse {
                line,
                message: format!("expected {fields} fields, found {}", rec.len()),
            });
        }
        let xs = rec
            .iter()
            .zip(header.iter())
            .skip(1)
            .map(|(t, c)| parse_component(t, line, c))
            .collect::<Result<Vec<_>, _>>()?;
        out.push((rec[0].to_string(), DenseVector::new(xs).expect("validated components")));
    }
    Ok(out)
}

/// The bundled expert vectors, by label.
pub fn expert_vectors() -> Vec<(String, DenseVector)> {
    read_named_vectors(EXPERTS_CSV.as_bytes()).expect("bundled experts fixture is well-formed")
}

/// The bundled score table.
pub fn sts_scores() -> ResultsTable {
    read_results(STS_SCORES_CSV.as_bytes()).expect("bundled table fixture is well-formed")
}
