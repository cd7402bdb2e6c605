//! Theorem registry, randomized exact checking and the constructions the
//! theorems are stated in terms of.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{GeomError, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::projective::{ProjLine, ProjPoint};

mod checks;
pub mod conic;
pub mod constructions;
pub mod generate;

pub use conic::{circle_conic, Conic};
pub use constructions::*;
pub use generate::{generate, Gen, GeneratorKind};

/// Retries per trial before a degenerate configuration is recorded as a skip.
pub const MAX_ATTEMPTS: u32 = 64;

/// Anything a configuration can bind a label to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Point(ProjPoint),
    Line(ProjLine),
    Scalar(FieldElement),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Point(p) => p.fmt(f),
            Object::Line(l) => l.fmt(f),
            Object::Scalar(x) => x.fmt(f),
        }
    }
}

impl From<ProjPoint> for Object {
    fn from(p: ProjPoint) -> Self {
        Object::Point(p)
    }
}

impl From<ProjLine> for Object {
    fn from(l: ProjLine) -> Self {
        Object::Line(l)
    }
}

impl From<FieldElement> for Object {
    fn from(x: FieldElement) -> Self {
        Object::Scalar(x)
    }
}

/// Labelled objects plus where they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub generator: String,
    pub seed: u64,
    pub bindings: Vec<(String, Object)>,
}

impl Configuration {
    pub fn new(generator: &str, seed: u64) -> Self {
        Configuration { generator: generator.to_string(), seed, bindings: Vec::new() }
    }

    pub fn bind(&mut self, label: &str, obj: impl Into<Object>) {
        self.bindings.push((label.to_string(), obj.into()));
    }

    pub fn get(&self, label: &str) -> Option<&Object> {
        self.bindings.iter().find(|(l, _)| l == label).map(|(_, o)| o)
    }

    pub fn point(&self, label: &str) -> Option<&ProjPoint> {
        match self.get(label) {
            Some(Object::Point(p)) => Some(p),
            _ => None,
        }
    }

    pub fn line(&self, label: &str) -> Option<&ProjLine> {
        match self.get(label) {
            Some(Object::Line(l)) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# generator {} seed {}", self.generator, self.seed)?;
        for (label, obj) in &self.bindings {
            writeln!(f, "{label} = {obj}")?;
        }
        Ok(())
    }
}

/// What one successful evaluation of a theorem produced.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    /// Failed equalities, each with its offending values.
    pub failures: Vec<String>,
    /// Facts tallied across trials without being asserted.
    pub observations: Vec<String>,
}

impl Outcome {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn check_zero(&mut self, name: &str, value: &FieldElement) {
        self.check(value.is_zero(), || format!("{name}: residual {value}"));
    }

    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, name: &str, lhs: &T, rhs: &T) {
        self.check(lhs == rhs, || format!("{name}: {lhs} != {rhs}"));
    }

    pub fn observe(&mut self, note: impl Into<String>) {
        self.observations.push(note.into());
    }
}

/// A failed trial with everything needed to reproduce it.
#[derive(Clone, Debug)]
pub struct Witness {
    pub trial: u64,
    pub messages: Vec<String>,
    pub config: Configuration,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub theorem: String,
    pub field: FieldCtx,
    pub trials: u64,
    pub passes: u64,
    pub skips: u64,
    pub failures: Vec<Witness>,
    pub observations: BTreeMap<String, u64>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// The tab-separated summary line.
    pub fn summary(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.theorem,
            self.trials,
            self.passes,
            self.skips,
            self.failures.len()
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for (note, count) in &self.observations {
            writeln!(f, "#\t{note}\t{count}")?;
        }
        for w in &self.failures {
            writeln!(f, "--- witness: {} trial {} field {}", self.theorem, w.trial, self.field)?;
            for m in &w.messages {
                writeln!(f, "! {m}")?;
            }
            write!(f, "{}", w.config)?;
        }
        Ok(())
    }
}

pub type TrialFn = fn(&mut Gen, &mut Configuration) -> Result<Outcome>;

/// A registered theorem check.
pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    pub trial: TrialFn,
}

pub fn registry() -> &'static [Theorem] {
    checks::REGISTRY
}

pub fn find(id: &str) -> Result<&'static Theorem> {
    registry()
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| GeomError::UnknownTheorem(id.to_string()))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for one attempt of one trial; independent of scheduling.
pub fn trial_seed(seed: u64, trial: u64, attempt: u32) -> u64 {
    splitmix64(splitmix64(seed ^ splitmix64(trial)) ^ attempt as u64)
}

enum TrialResult {
    Pass(Vec<String>),
    Skip,
    Fail(Witness, Vec<String>),
}

fn run_trial(theorem: &Theorem, ctx: FieldCtx, seed: u64, trial: u64) -> TrialResult {
    for attempt in 0..MAX_ATTEMPTS {
        let s = trial_seed(seed, trial, attempt);
        let mut gen = Gen::new(ctx, s);
        let mut config = Configuration::new(theorem.id, s);
        match (theorem.trial)(&mut gen, &mut config) {
            Err(_) => continue,
            Ok(outcome) if outcome.failures.is_empty() => return TrialResult::Pass(outcome.observations),
            Ok(outcome) => {
                let witness = Witness { trial, messages: outcome.failures, config };
                return TrialResult::Fail(witness, outcome.observations);
            }
        }
    }
    TrialResult::Skip
}

/// Runs `trials` independent exact checks of one theorem.
pub fn run_check(id: &str, trials: u64, seed: u64, ctx: FieldCtx) -> Result<CheckReport> {
    let theorem = find(id)?;
    let results: Vec<TrialResult> =
        (0..trials).into_par_iter().map(|t| run_trial(theorem, ctx, seed, t)).collect();
    let mut report = CheckReport {
        theorem: id.to_string(),
        field: ctx,
        trials,
        passes: 0,
        skips: 0,
        failures: Vec::new(),
        observations: BTreeMap::new(),
    };
    for r in results {
        let notes = match r {
            TrialResult::Pass(notes) => {
                report.passes += 1;
                notes
            }
            TrialResult::Skip => {
                report.skips += 1;
                Vec::new()
            }
            TrialResult::Fail(w, notes) => {
                report.failures.push(w);
                notes
            }
        };
        for n in notes {
            *report.observations.entry(n).or_default() += 1;
        }
    }
    Ok(report)
}

/// Evaluates a theorem once on a given seed, returning the configuration;
/// used to reproduce witnesses.
pub fn replay(id: &str, ctx: FieldCtx, seed: u64) -> Result<(Configuration, Outcome)> {
    let theorem = find(id)?;
    let mut gen = Gen::new(ctx, seed);
    let mut config = Configuration::new(id, seed);
    let outcome = (theorem.trial)(&mut gen, &mut config)?;
    Ok((config, outcome))
}
