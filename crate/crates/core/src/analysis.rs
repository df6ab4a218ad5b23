//! Statistical evaluation of the hash: avalanche campaigns over seeded
//! single-edit message pairs, and collision sampling on truncated digests.
//!
//! Every campaign is driven by one explicit seeded generator (ChaCha8, seeded
//! with `seed_from_u64`) so reports are reproducible bit for bit from the
//! corpus parameters, trial count and seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::IterationFunction;
use crate::error::{Error, Result};
use crate::hash::digest;

/// Parameters of the random-message corpus: printable ASCII (0x20..=0x7E),
/// uniformly random length in `min_len..=max_len`.
#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub min_len: usize,
    pub max_len: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { min_len: 10, max_len: 500 }
    }
}

fn random_message(rng: &mut ChaCha8Rng, corpus: &CorpusSpec) -> Vec<u8> {
    let len = rng.random_range(corpus.min_len..=corpus.max_len);
    (0..len).map(|_| rng.random_range(0x20..=0x7Eu8)).collect()
}

/// One random single-character edit: a case flip for letters (half the time),
/// otherwise a flip of one random bit of the 7-bit code. Always changes the
/// message.
fn mutate(rng: &mut ChaCha8Rng, message: &[u8]) -> Vec<u8> {
    let mut out = message.to_vec();
    let pos = rng.random_range(0..out.len());
    let byte = out[pos];
    if byte.is_ascii_alphabetic() && rng.random_bool(0.5) {
        out[pos] = byte ^ 0x20;
    } else {
        out[pos] = byte ^ (1 << rng.random_range(0..7));
    }
    out
}

/// Hamming distance between the digests of two distinct messages.
pub fn avalanche_trial(text: &[u8], mutated: &[u8]) -> Result<u32> {
    if text == mutated {
        return Err(Error::IdenticalTexts);
    }
    let a = digest(text, IterationFunction::Negation)?;
    let b = digest(mutated, IterationFunction::Negation)?;
    a.state.hamming(&b.state)
}

/// Aggregated avalanche statistics over a campaign of single-edit pairs.
#[derive(Clone, Debug)]
pub struct AvalancheReport {
    pub trials: u32,
    pub seed: u64,
    pub mean_distance: f64,
    pub std_distance: f64,
    /// Flip rate of each of the 256 output bit positions, in [0, 1].
    pub per_bit_flip_rate: Vec<f64>,
    /// Counts of observed Hamming distances 0..=256.
    pub histogram: Vec<u32>,
    /// One distance per trial, in trial order, for the optional flat table.
    pub distances: Vec<u32>,
}

/// Runs `trials` seeded single-edit avalanche trials over random messages
/// drawn from `corpus`.
pub fn avalanche_report(corpus: &CorpusSpec, trials: u32, seed: u64) -> Result<AvalancheReport> {
    if trials < 1 {
        return Err(Error::TooFewTrials { min: 1, got: trials as u64 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut histogram = vec![0u32; 257];
    let mut bit_flips = vec![0u32; 256];
    let mut distances = Vec::with_capacity(trials as usize);

    for _ in 0..trials {
        let message = random_message(&mut rng, corpus);
        let mutated = mutate(&mut rng, &message);
        let a = digest(&message, IterationFunction::Negation)?;
        let b = digest(&mutated, IterationFunction::Negation)?;
        let mut dist = 0u32;
        for (i, (&x, &y)) in a.state.cells().iter().zip(b.state.cells()).enumerate() {
            if x != y {
                dist += 1;
                bit_flips[i] += 1;
            }
        }
        histogram[dist as usize] += 1;
        distances.push(dist);
    }

    let n = trials as f64;
    let mean = distances.iter().map(|&d| d as f64).sum::<f64>() / n;
    let var = distances.iter().map(|&d| (d as f64 - mean).powi(2)).sum::<f64>() / n;

    Ok(AvalancheReport {
        trials,
        seed,
        mean_distance: mean,
        std_distance: var.sqrt(),
        per_bit_flip_rate: bit_flips.iter().map(|&c| c as f64 / n).collect(),
        histogram,
        distances,
    })
}

impl AvalancheReport {
    /// Machine-readable key-value rendering; `with_table` appends one row
    /// per trial for external plotting.
    pub fn render(&self, with_table: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("trials: {}\n", self.trials));
        out.push_str(&format!("seed: {}\n", self.seed));
        out.push_str(&format!("mean_distance: {:.6}\n", self.mean_distance));
        out.push_str(&format!("std_distance: {:.6}\n", self.std_distance));
        let min_rate = self.per_bit_flip_rate.iter().cloned().fold(f64::INFINITY, f64::min);
        let max_rate = self.per_bit_flip_rate.iter().cloned().fold(0.0, f64::max);
        out.push_str(&format!("min_bit_flip_rate: {min_rate:.6}\n"));
        out.push_str(&format!("max_bit_flip_rate: {max_rate:.6}\n"));
        out.push_str("per_bit_flip_rate:");
        for rate in &self.per_bit_flip_rate {
            out.push_str(&format!(" {rate:.4}"));
        }
        out.push('\n');
        out.push_str("histogram:");
        for (dist, &count) in self.histogram.iter().enumerate() {
            if count > 0 {
                out.push_str(&format!(" {dist}:{count}"));
            }
        }
        out.push('\n');
        if with_table {
            out.push_str("table: trial distance\n");
            for (i, &d) in self.distances.iter().enumerate() {
                out.push_str(&format!("{i} {d}\n"));
            }
        }
        out
    }
}

/// Result of a truncated-digest collision scan.
#[derive(Clone, Copy, Debug)]
pub struct CollisionReport {
    pub width: u32,
    pub samples: u32,
    pub seed: u64,
    /// Observed number of colliding pairs among the truncated digests.
    pub observed: u64,
    /// Birthday approximation: samples * (samples - 1) / 2^(width + 1).
    pub expected: f64,
}

/// Truncates digests of `samples` distinct random messages to their first
/// `width` bits and counts colliding pairs.
pub fn collision_scan(width: u32, samples: u32, seed: u64) -> Result<CollisionReport> {
    if !(8..=32).contains(&width) {
        return Err(Error::TruncationWidth { width });
    }
    if samples < 2 {
        return Err(Error::TooFewTrials { min: 2, got: samples as u64 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corpus = CorpusSpec::default();
    let mut seen = std::collections::HashSet::new();
    let mut buckets = std::collections::HashMap::<u32, u64>::new();

    while seen.len() < samples as usize {
        let message = random_message(&mut rng, &corpus);
        if !seen.insert(message.clone()) {
            continue;
        }
        let d = digest(&message, IterationFunction::Negation)?;
        let truncated = d
            .state
            .cells()
            .iter()
            .take(width as usize)
            .fold(0u32, |acc, &b| acc << 1 | b as u32);
        *buckets.entry(truncated).or_insert(0) += 1;
    }

    let observed = buckets.values().map(|&c| c * (c - 1) / 2).sum();
    let n = samples as f64;
    let expected = n * (n - 1.0) / 2f64.powi(width as i32 + 1);
    Ok(CollisionReport { width, samples, seed, observed, expected })
}

impl CollisionReport {
    pub fn render(&self) -> String {
        format!(
            "width: {}\nsamples: {}\nseed: {}\nobserved_pairs: {}\nexpected_pairs: {:.4}\n",
            self.width, self.samples, self.seed, self.observed, self.expected
        )
    }
}
