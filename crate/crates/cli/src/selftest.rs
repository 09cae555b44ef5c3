//! Randomized property suite behind `recos selftest`.
//!
//! Every trial draws standard-normal vectors from a ChaCha8 stream seeded by
//! the user, so a seed and trial count fully determine the output.

use std::io::{self, Write};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use recos_core::{
    bound_chain, brute_force_rearrangement, cosine, decos, decos_from_tanimoto, dot, norm, recos,
    rearrangement_bound, tanimoto, DenseVector,
};

/// Dimensions cycled through by the random-pair properties.
pub const DIMS: [usize; 5] = [2, 3, 8, 64, 512];
/// Dimensions for the exhaustive-permutation oracle.
pub const ORACLE_DIMS: [usize; 6] = [2, 3, 4, 5, 6, 7];

const CHAIN_REL_TOL: f64 = 1e-9;
const EQUALITY_TOL: f64 = 1e-9;
const IDENTITY_TOL: f64 = 1e-12;

type Check = fn(&DenseVector, &DenseVector) -> Result<(), String>;

struct Property {
    name: &'static str,
    /// Draws an input pair for trial `t`.
    draw: fn(&mut ChaCha8Rng, u64) -> (DenseVector, DenseVector),
    check: Check,
    /// Whether dropping coordinates keeps the input within the property's premise.
    shrinkable: bool,
}

fn normal_vec(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    (0..d).map(|_| rng.sample(StandardNormal)).collect()
}

fn dv(xs: Vec<f64>) -> DenseVector {
    DenseVector::new(xs).expect("generated components are finite")
}

fn cycled(t: u64) -> usize {
    DIMS[(t % DIMS.len() as u64) as usize]
}

fn random_pair(rng: &mut ChaCha8Rng, t: u64) -> (DenseVector, DenseVector) {
    let d = cycled(t);
    (dv(normal_vec(rng, d)), dv(normal_vec(rng, d)))
}

fn oracle_pair(rng: &mut ChaCha8Rng, t: u64) -> (DenseVector, DenseVector) {
    let d = ORACLE_DIMS[(t % ORACLE_DIMS.len() as u64) as usize];
    (dv(normal_vec(rng, d)), dv(normal_vec(rng, d)))
}

/// `v = ±(a·u + b·u³)`: similarly (or oppositely) ordered, with dot sign matching.
fn monotone_pair(rng: &mut ChaCha8Rng, t: u64) -> (DenseVector, DenseVector) {
    let u = normal_vec(rng, cycled(t));
    let a: f64 = rng.random_range(0.1..3.0);
    let b: f64 = rng.random_range(0.0..1.0);
    let s = random_sign(rng);
    let v = u.iter().map(|x| s * (a * x + b * x * x * x)).collect();
    (dv(u), dv(v))
}

/// A shuffle of `u` with `u·Pu > 0`, so `v = kPu` has `sign(u·v) = sign(k)`.
/// Falls back to the identity, which always qualifies for nonzero `u`.
fn aligned_permutation(rng: &mut ChaCha8Rng, u: &[f64]) -> Vec<f64> {
    let mut p = u.to_vec();
    for _ in 0..64 {
        p.shuffle(rng);
        if u.iter().zip(&p).map(|(a, b)| a * b).sum::<f64>() > 0.0 {
            return p;
        }
    }
    u.to_vec()
}

fn random_sign(rng: &mut ChaCha8Rng) -> f64 {
    if rng.random_bool(0.5) {
        1.0
    } else {
        -1.0
    }
}

/// `v = k·P·u` with `sign(k) = sign(u·v)`.
fn permuted_scaled_pair(rng: &mut ChaCha8Rng, t: u64) -> (DenseVector, DenseVector) {
    let u = normal_vec(rng, cycled(t));
    let p = aligned_permutation(rng, &u);
    let k = random_sign(rng) * rng.random_range(0.5..2.0);
    (dv(u), dv(p.into_iter().map(|x| k * x).collect()))
}

/// `v = ±P·u` with the sign of `u·v`.
fn permuted_pair(rng: &mut ChaCha8Rng, t: u64) -> (DenseVector, DenseVector) {
    let u = normal_vec(rng, cycled(t));
    let p = aligned_permutation(rng, &u);
    let s = random_sign(rng);
    (dv(u), dv(p.into_iter().map(|x| s * x).collect()))
}

/// `v = ±u`.
fn parallel_pair(rng: &mut ChaCha8Rng, t: u64) -> (DenseVector, DenseVector) {
    let u = normal_vec(rng, cycled(t));
    let s = random_sign(rng);
    let v = u.iter().map(|x| s * x).collect();
    (dv(u), dv(v))
}

/// Random pair with `v` flipped so that `u·v >= 0`, keeping Tanimoto in `[0, 1]`.
fn nonnegative_pair(rng: &mut ChaCha8Rng, t: u64) -> (DenseVector, DenseVector) {
    let (u, v) = random_pair(rng, t);
    if pair_dot(&u, &v) < 0.0 {
        (u, v.negated())
    } else {
        (u, v)
    }
}

fn pair_dot(u: &DenseVector, v: &DenseVector) -> f64 {
    dot(u, v).expect("generated pairs share a dimension")
}

fn err<T: std::fmt::Display>(e: T) -> String {
    e.to_string()
}

fn check_chain(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    let c = bound_chain(u, v).map_err(err)?;
    match c.first_violation(CHAIN_REL_TOL) {
        None => Ok(()),
        Some(i) => Err(format!("link {i} broken: {:?}", c.as_array())),
    }
}

fn check_hierarchy(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    if pair_dot(u, v) == 0.0 {
        return Ok(());
    }
    let r = recos(u, v).map_err(err)?.value().abs();
    let c = cosine(u, v).map_err(err)?.value().abs();
    let d = decos(u, v).map_err(err)?.value().abs();
    if d <= c + EQUALITY_TOL && c <= r + EQUALITY_TOL {
        Ok(())
    } else {
        Err(format!("|decos| {d} |cos| {c} |recos| {r}"))
    }
}

fn check_saturation(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    if pair_dot(u, v) == 0.0 {
        return Ok(());
    }
    let r = recos(u, v).map_err(err)?.value();
    if (r.abs() - 1.0).abs() <= EQUALITY_TOL {
        Ok(())
    } else {
        Err(format!("|recos| = {}", r.abs()))
    }
}

fn check_permuted_scaled(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    let rb = rearrangement_bound(u, v).map_err(err)?;
    let cs = norm(u) * norm(v);
    if (rb - cs).abs() > EQUALITY_TOL {
        return Err(format!("rearrangement {rb} vs cauchy_schwarz {cs}"));
    }
    let r = recos(u, v).map_err(err)?.value().abs();
    let c = cosine(u, v).map_err(err)?.value().abs();
    if (r - c).abs() > EQUALITY_TOL {
        return Err(format!("|recos| {r} vs |cos| {c}"));
    }
    Ok(())
}

fn check_permuted(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    check_permuted_scaled(u, v)?;
    let c = bound_chain(u, v).map_err(err)?;
    if (c.rearrangement - c.arithmetic_quadratic).abs() > EQUALITY_TOL {
        return Err(format!("rearrangement {} vs am_qm {}", c.rearrangement, c.arithmetic_quadratic));
    }
    Ok(())
}

fn check_parallel(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    let d = decos(u, v).map_err(err)?.value().abs();
    if (d - 1.0).abs() <= IDENTITY_TOL {
        Ok(())
    } else {
        Err(format!("|decos| = {d}"))
    }
}

fn check_norm_identity(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    let (Some(u), Some(v)) = (u.normalized(), v.normalized()) else {
        return Ok(());
    };
    let gap = (decos(&u, &v).map_err(err)?.value() - cosine(&u, &v).map_err(err)?.value()).abs();
    if gap < IDENTITY_TOL {
        Ok(())
    } else {
        Err(format!("|decos - cos| = {gap:e} on unit vectors"))
    }
}

fn check_bijection(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    let t = tanimoto(u, v).map_err(err)?;
    if !(0.0..=1.0).contains(&t) {
        return Ok(());
    }
    let lhs = decos(u, v).map_err(err)?.value();
    let rhs = decos_from_tanimoto(t).map_err(err)?;
    if (lhs - rhs).abs() < IDENTITY_TOL {
        Ok(())
    } else {
        Err(format!("decos {lhs} vs 2t/(1+t) {rhs}"))
    }
}

fn check_oracle(u: &DenseVector, v: &DenseVector) -> Result<(), String> {
    let fast = rearrangement_bound(u, v).map_err(err)?;
    let slow = brute_force_rearrangement(u, v).map_err(err)?;
    if (fast - slow).abs() <= EQUALITY_TOL {
        Ok(())
    } else {
        Err(format!("sorted {fast} vs exhaustive {slow}"))
    }
}

const PROPERTIES: [Property; 9] = [
    Property { name: "chain_ordering", draw: random_pair, check: check_chain, shrinkable: true },
    Property { name: "hierarchy", draw: random_pair, check: check_hierarchy, shrinkable: true },
    Property { name: "similar_order_saturation", draw: monotone_pair, check: check_saturation, shrinkable: true },
    Property { name: "scaled_permutation_equality", draw: permuted_scaled_pair, check: check_permuted_scaled, shrinkable: false },
    Property { name: "permutation_am_equality", draw: permuted_pair, check: check_permuted, shrinkable: false },
    Property { name: "parallel_decos_saturation", draw: parallel_pair, check: check_parallel, shrinkable: true },
    Property { name: "unit_norm_identity", draw: random_pair, check: check_norm_identity, shrinkable: true },
    Property { name: "tanimoto_bijection", draw: nonnegative_pair, check: check_bijection, shrinkable: true },
    Property { name: "brute_force_oracle", draw: oracle_pair, check: check_oracle, shrinkable: true },
];

/// The first failure seen for a property.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub trial: u64,
    pub u: DenseVector,
    pub v: DenseVector,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub seed: u64,
    pub trials: u64,
    pub properties: Vec<PropertyOutcome>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0)
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "selftest seed={} trials={}", self.seed, self.trials)?;
        for p in &self.properties {
            let status = if p.failed == 0 { "ok" } else { "FAIL" };
            let count = format!("{}/{}", p.passed, p.passed + p.failed);
            writeln!(out, "  {:<30}{count:>15}  {status}", p.name)?;
        }
        for p in &self.properties {
            if let Some(c) = &p.counterexample {
                writeln!(out, "property {} failed (seed {}, trial {}): {}", p.name, self.seed, c.trial, c.detail)?;
                writeln!(out, "  u = {}", c.u)?;
                writeln!(out, "  v = {}", c.v)?;
            }
        }
        let failed = self.properties.iter().filter(|p| p.failed > 0).count();
        if failed == 0 {
            writeln!(out, "all {} properties passed", self.properties.len())
        } else {
            writeln!(out, "{failed} of {} properties failed", self.properties.len())
        }
    }
}

/// Greedily drops coordinates while the check still fails.
fn shrink(check: Check, mut u: Vec<f64>, mut v: Vec<f64>) -> (DenseVector, DenseVector, String) {
    let mut detail = check(&dv(u.clone()), &dv(v.clone())).err().unwrap_or_default();
    let mut i = 0;
    while i < u.len() && u.len() > 1 {
        let (mut su, mut sv) = (u.clone(), v.clone());
        su.remove(i);
        sv.remove(i);
        match check(&dv(su.clone()), &dv(sv.clone())) {
            Err(d) => {
                (u, v, detail) = (su, sv, d);
            }
            Ok(()) => i += 1,
        }
    }
    (dv(u), dv(v), detail)
}

/// Runs every property for `trials` draws. Each property has its own stream
/// derived from `seed`, so adding a property does not perturb the others.
pub fn run(seed: u64, trials: u64) -> Summary {
    let properties = PROPERTIES
        .iter()
        .enumerate()
        .map(|(index, p)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(index as u64);
            let mut outcome = PropertyOutcome {
                name: p.name,
                passed: 0,
                failed: 0,
                counterexample: None,
            };
            for trial in 0..trials {
                let (u, v) = (p.draw)(&mut rng, trial);
                match (p.check)(&u, &v) {
                    Ok(()) => outcome.passed += 1,
                    Err(detail) => {
                        outcome.failed += 1;
                        if outcome.counterexample.is_none() {
                            let (u, v, detail) = if p.shrinkable {
                                shrink(p.check, u.into_inner(), v.into_inner())
                            } else {
                                (u, v, detail)
                            };
                            outcome.counterexample = Some(Counterexample { trial, u, v, detail });
                        }
                    }
                }
            }
            outcome
        })
        .collect();
    Summary {
        seed,
        trials,
        properties,
    }
}
