//! Windowed erasure recovery on the truncated sliding generator `G_j^c`.
//!
//! A window of `j + 1` blocks carries `k(j+1)` message symbols in `n(j+1)`
//! code symbols. Recovery solves `u G_j^c = v` restricted to the unerased
//! columns.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::construction::SCHEMA_VERSION;
use crate::conv::{truncate, MatrixKind, PolyMatrix};
use crate::error::{Error, Result};
use crate::gf::{ExtensionField, FieldElement};
use crate::linalg::{rank, solve_left, vec_mat, Matrix};
use crate::par::{map_reduce, Execution};

/// Largest window width for which every erasure pattern is enumerated.
pub const EXHAUSTIVE_WIDTH_LIMIT: usize = 16;

const TRIAL_CHUNK: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ErasurePattern {
    pub j: usize,
    /// 1-based, strictly increasing column indices in `[1, n(j+1)]`.
    pub erased: Vec<usize>,
}

impl ErasurePattern {
    pub fn new(j: usize, n: usize, mut erased: Vec<usize>) -> Result<Self> {
        let width = n * (j + 1);
        erased.sort_unstable();
        if erased.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Pattern("repeated erasure index".into()));
        }
        if let Some(&bad) = erased.iter().find(|&&c| c == 0 || c > width) {
            return Err(Error::Pattern(format!("index {bad} outside [1, {width}]")));
        }
        Ok(ErasurePattern { j, erased })
    }

    /// Bit `i` of `mask` erases column `i + 1`.
    pub fn from_mask(j: usize, mask: u64, width: usize) -> Self {
        ErasurePattern {
            j,
            erased: (0..width).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
        }
    }

    pub fn is_erased(&self, col: usize) -> bool {
        self.erased.binary_search(&(col + 1)).is_ok()
    }
}

/// `G_j^c` of a code together with its shape.
#[derive(Clone, Debug)]
pub struct Window {
    pub field: ExtensionField,
    pub n: usize,
    pub k: usize,
    pub j: usize,
    pub matrix: Matrix,
}

impl Window {
    pub fn new(field: &ExtensionField, g: &PolyMatrix, j: usize) -> Self {
        let t = truncate(field, g, j, MatrixKind::Generator);
        Window {
            field: field.clone(),
            n: g.cols(),
            k: g.rows(),
            j,
            matrix: t.matrix,
        }
    }

    pub fn width(&self) -> usize {
        self.n * (self.j + 1)
    }

    pub fn message_len(&self) -> usize {
        self.k * (self.j + 1)
    }

    fn check(&self, pattern: &ErasurePattern) -> Result<()> {
        if pattern.j != self.j {
            return Err(Error::Pattern(format!("pattern for window {} used on window {}", pattern.j, self.j)));
        }
        if pattern.erased.last().is_some_and(|&c| c > self.width()) {
            return Err(Error::Pattern(format!("index outside [1, {}]", self.width())));
        }
        Ok(())
    }

    fn unerased(&self, pattern: &ErasurePattern) -> Vec<usize> {
        (0..self.width()).filter(|&c| !pattern.is_erased(c)).collect()
    }

    pub fn encode(&self, u: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if u.len() != self.message_len() {
            return Err(Error::Dimension(format!("expected {} message symbols", self.message_len())));
        }
        Ok(vec_mat(&self.field, u, &self.matrix))
    }

    /// Whether the unerased columns determine `u_0..u_j` uniquely.
    pub fn recoverable(&self, pattern: &ErasurePattern) -> Result<bool> {
        self.check(pattern)?;
        let cols = self.unerased(pattern);
        Ok(rank(&self.field, &self.matrix.select_columns(&cols)) == self.message_len())
    }

    /// Recovers `u_0..u_j` from the unerased symbols, given in column order.
    pub fn recover(&self, pattern: &ErasurePattern, received: &[FieldElement]) -> Result<Recovery> {
        self.check(pattern)?;
        let cols = self.unerased(pattern);
        if received.len() != cols.len() {
            return Err(Error::Dimension(format!(
                "expected {} unerased symbols, got {}",
                cols.len(),
                received.len()
            )));
        }
        let messages = solve_left(&self.field, &self.matrix.select_columns(&cols), received)?;
        let codeword = vec_mat(&self.field, &messages, &self.matrix);
        if cols.iter().zip(received).any(|(&c, &r)| codeword[c] != r) {
            return Err(Error::Inconsistent);
        }
        Ok(Recovery { messages, codeword })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recovery {
    pub messages: Vec<FieldElement>,
    /// The full window codeword, erased positions filled in.
    pub codeword: Vec<FieldElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternFailure {
    pub erased: Vec<usize>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimMode {
    Sampled,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub schema: u32,
    pub mode: SimMode,
    pub n: usize,
    pub k: usize,
    pub j: usize,
    /// Erasure probability; absent in exhaustive mode.
    pub p: Option<f64>,
    pub seed: u64,
    pub trials: u64,
    pub recovered: u64,
    pub unrecoverable: u64,
    /// Recoverable patterns on which recovery did not reproduce the message.
    pub decode_errors: u64,
    /// Unrecoverable patterns with their multiplicities, sorted by pattern.
    pub failures: Vec<PatternFailure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternOutcome {
    pub erased: Vec<usize>,
    pub recoverable: bool,
    /// Whether a random message survived erase-and-recover; `None` when unrecoverable.
    pub round_trip: Option<bool>,
}

pub fn outcomes_csv(outcomes: &[PatternOutcome]) -> String {
    let mut out = String::from("erased,recoverable,round_trip\n");
    for o in outcomes {
        let erased: Vec<String> = o.erased.iter().map(|c| c.to_string()).collect();
        let rt = match o.round_trip {
            Some(true) => "yes",
            Some(false) => "no",
            None => "",
        };
        let rec = if o.recoverable { "yes" } else { "no" };
        out.push_str(&format!("{},{rec},{rt}\n", erased.join(" ")));
    }
    out
}

#[derive(Clone, Default)]
struct Tally {
    recovered: u64,
    unrecoverable: u64,
    decode_errors: u64,
    failures: BTreeMap<Vec<usize>, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.recovered += other.recovered;
        self.unrecoverable += other.unrecoverable;
        self.decode_errors += other.decode_errors;
        for (k, v) in other.failures {
            *self.failures.entry(k).or_default() += v;
        }
        self
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn random_message(w: &Window, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let order = w.field.order();
    (0..w.message_len()).map(|_| w.field.element(rng.gen_range(0..order))).collect()
}

/// Erase, recover and compare; `None` when the pattern is unrecoverable.
fn round_trip(w: &Window, pattern: &ErasurePattern, u: &[FieldElement]) -> Option<bool> {
    if !w.recoverable(pattern).expect("pattern fits the window") {
        return None;
    }
    let v = w.encode(u).expect("message length");
    let received: Vec<FieldElement> = (0..w.width()).filter(|&c| !pattern.is_erased(c)).map(|c| v[c]).collect();
    Some(matches!(w.recover(pattern, &received), Ok(r) if r.messages == u && r.codeword == v))
}

fn finish(w: &Window, mode: SimMode, p: Option<f64>, seed: u64, trials: u64, tally: Tally, start: Instant) -> SimReport {
    SimReport {
        schema: SCHEMA_VERSION,
        mode,
        n: w.n,
        k: w.k,
        j: w.j,
        p,
        seed,
        trials,
        recovered: tally.recovered,
        unrecoverable: tally.unrecoverable,
        decode_errors: tally.decode_errors,
        failures: tally
            .failures
            .into_iter()
            .map(|(erased, count)| PatternFailure { erased, count })
            .collect(),
        elapsed: start.elapsed(),
    }
}

/// I.i.d. column erasures with probability `p`; trial `i` draws from stream `i` of `seed`.
pub fn simulate(w: &Window, p: f64, trials: u64, seed: u64) -> Result<SimReport> {
    simulate_with(w, p, trials, seed, Execution::default())
}

pub fn simulate_with(w: &Window, p: f64, trials: u64, seed: u64, exec: Execution) -> Result<SimReport> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameters(format!("erasure probability {p} outside [0, 1]")));
    }
    let start = Instant::now();
    let tally = map_reduce(
        exec,
        trials,
        TRIAL_CHUNK,
        Tally::default(),
        |range| {
            let mut t = Tally::default();
            for trial in range {
                let mut rng = trial_rng(seed, trial);
                let erased = (1..=w.width()).filter(|_| rng.gen_bool(p)).collect();
                let pattern = ErasurePattern { j: w.j, erased };
                let u = random_message(w, &mut rng);
                match round_trip(w, &pattern, &u) {
                    Some(true) => t.recovered += 1,
                    Some(false) => t.decode_errors += 1,
                    None => {
                        t.unrecoverable += 1;
                        *t.failures.entry(pattern.erased).or_default() += 1;
                    }
                }
            }
            t
        },
        Tally::merge,
    );
    Ok(finish(w, SimMode::Sampled, Some(p), seed, trials, tally, start))
}

/// Every one of the `2^{n(j+1)}` patterns, each round-tripped with a seeded random message.
pub fn census(w: &Window, seed: u64) -> Result<(SimReport, Vec<PatternOutcome>)> {
    census_with(w, seed, Execution::default())
}

pub fn census_with(w: &Window, seed: u64, exec: Execution) -> Result<(SimReport, Vec<PatternOutcome>)> {
    let width = w.width();
    if width > EXHAUSTIVE_WIDTH_LIMIT {
        return Err(Error::Infeasible {
            what: "exhaustive erasure census",
            size: 1u128 << width.min(127),
            limit: 1u128 << EXHAUSTIVE_WIDTH_LIMIT,
        });
    }
    let start = Instant::now();
    let total = 1u64 << width;
    let outcomes = map_reduce(
        exec,
        total,
        TRIAL_CHUNK,
        Vec::new(),
        |range| {
            range
                .map(|mask| {
                    let pattern = ErasurePattern::from_mask(w.j, mask, width);
                    let u = random_message(w, &mut trial_rng(seed, mask));
                    let round_trip = round_trip(w, &pattern, &u);
                    (
                        mask,
                        PatternOutcome {
                            erased: pattern.erased,
                            recoverable: round_trip.is_some(),
                            round_trip,
                        },
                    )
                })
                .collect::<Vec<_>>()
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    let mut outcomes = outcomes;
    outcomes.sort_by_key(|(mask, _)| *mask);
    let outcomes: Vec<PatternOutcome> = outcomes.into_iter().map(|(_, o)| o).collect();
    let mut tally = Tally::default();
    for o in &outcomes {
        match o.round_trip {
            Some(true) => tally.recovered += 1,
            Some(false) => tally.decode_errors += 1,
            None => {
                tally.unrecoverable += 1;
                tally.failures.insert(o.erased.clone(), 1);
            }
        }
    }
    Ok((finish(w, SimMode::Exhaustive, None, seed, total, tally, start), outcomes))
}
