//! Seeded Monte Carlo statistics on random permutations.
//!
//! The number of nontrivial intervals of a uniformly random permutation of
//! length `n` is approximately Poisson with mean 2 for large `n`, nearly all
//! of them doubletons, so the fraction of simple permutations approaches
//! `e⁻²`. [`interval_count_experiment`] measures this; [`inessential_trend`]
//! tabulates the mean number of inessential entries of simple permutations
//! exhaustively, which grows like `n`.
//!
//! # Reproducibility
//!
//! Samples are drawn in blocks of [`BLOCK_SIZE`]. Block `b` uses ChaCha8
//! (`rand_chacha::ChaCha8Rng`) seeded with `seed_from_u64(seed)` and switched
//! to stream `b` with `set_stream(b)`. Each permutation is a Fisher–Yates
//! shuffle of `1..=n`. Blocks are independent, so a report depends only on
//! `(n, samples, seed)`, never on the number of worker threads.
//!
//! The acceptance thresholds used with these reports (TV distance, distance
//! of the simple fraction from `e⁻²`) are engineering tolerances; the
//! underlying statements are asymptotic and come with no rate.

use std::io;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{bruteforce_unguarded, check_guard, for_each_with_first};
use crate::error::Result;
use crate::essential::{count_inessential, extension_analysis, EXHAUSTIVE_GUARD};
use crate::intervals::interval_census;
use crate::perm::Permutation;

pub const BLOCK_SIZE: u64 = 1024;
pub const GENERATOR: &str = "ChaCha8Rng (rand_chacha); seed_from_u64(seed), set_stream(block), 1024 samples per block";
pub const TREND_GUARD: usize = 9;

pub const E_MINUS_2: f64 = 0.135_335_283_236_612_7;

/// A uniformly random permutation of length `n` (Fisher–Yates).
pub fn sample_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    assert!(n >= 1, "permutations have length at least 1");
    let mut values: Vec<u32> = (1..=n as u32).collect();
    values.shuffle(rng);
    Permutation::from_vec_unchecked(values)
}

/// The generator for block `block` of a run seeded with `seed`.
pub fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

/// e⁻² 2ᵏ / k!
pub fn poisson2_pmf(k: usize) -> f64 {
    (1..=k).fold(E_MINUS_2, |acc, i| acc * 2.0 / i as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bucket {
    /// Number of nontrivial intervals.
    pub intervals: usize,
    pub frequency: u64,
    pub empirical: f64,
    /// Poisson(2) mass; the last bucket carries the whole upper tail.
    pub poisson: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub generator: String,
    pub mode: String,
    /// Nested intervals each count once.
    pub histogram: Vec<Bucket>,
    pub tv_distance: f64,
    pub simple_fraction: f64,
    pub e_minus_2: f64,
    pub mean_interval_count: f64,
    /// Fraction of samples with a nontrivial interval of size at least 3.
    pub large_interval_fraction: f64,
    pub note: String,
}

#[derive(Debug, Clone, Default)]
struct Tally {
    freq: Vec<u64>,
    samples: u64,
    with_large: u64,
    total_intervals: u64,
}

impl Tally {
    fn record(&mut self, perm: &Permutation) {
        let (count, largest) = interval_census(perm);
        if self.freq.len() <= count {
            self.freq.resize(count + 1, 0);
        }
        self.freq[count] += 1;
        self.samples += 1;
        self.total_intervals += count as u64;
        if largest >= 3 {
            self.with_large += 1;
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        if self.freq.len() < other.freq.len() {
            self.freq.resize(other.freq.len(), 0);
        }
        for (a, b) in self.freq.iter_mut().zip(other.freq) {
            *a += b;
        }
        self.samples += other.samples;
        self.with_large += other.with_large;
        self.total_intervals += other.total_intervals;
        self
    }

    fn into_report(self, n: usize, seed: u64, generator: &str, mode: &str) -> StatsReport {
        let total = self.samples as f64;
        let max = self.freq.len().saturating_sub(1);
        let mut histogram: Vec<Bucket> = self
            .freq
            .iter()
            .enumerate()
            .map(|(k, &f)| Bucket {
                intervals: k,
                frequency: f,
                empirical: f as f64 / total,
                poisson: poisson2_pmf(k),
            })
            .collect();
        let below: f64 = (0..max).map(poisson2_pmf).sum();
        if let Some(last) = histogram.last_mut() {
            last.poisson = 1.0 - below;
        }
        let tv_distance = 0.5 * histogram.iter().map(|b| (b.empirical - b.poisson).abs()).sum::<f64>();
        StatsReport {
            n,
            samples: self.samples,
            seed,
            generator: generator.to_string(),
            mode: mode.to_string(),
            simple_fraction: self.freq.first().copied().unwrap_or(0) as f64 / total,
            histogram,
            tv_distance,
            e_minus_2: E_MINUS_2,
            mean_interval_count: self.total_intervals as f64 / total,
            large_interval_fraction: self.with_large as f64 / total,
            note: "tolerances applied to this report are engineering choices; the Poisson(2) limit carries no rate"
                .into(),
        }
    }
}

/// Samples `samples` random permutations of length `n` and compares their
/// nontrivial-interval counts with Poisson(2).
pub fn interval_count_experiment(n: usize, samples: u64, seed: u64) -> Result<StatsReport> {
    check_guard(n, 4, usize::MAX)?;
    if samples == 0 {
        return Err(crate::Error::BadArguments("samples must be at least 1".into()));
    }
    let blocks = samples.div_ceil(BLOCK_SIZE);
    let tally = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = block_rng(seed, b);
            let count = BLOCK_SIZE.min(samples - b * BLOCK_SIZE);
            let mut t = Tally::default();
            for _ in 0..count {
                t.record(&sample_permutation(n, &mut rng));
            }
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    Ok(tally.into_report(n, seed, GENERATOR, "sampled"))
}

/// The same statistics over all `n!` permutations instead of a sample.
pub fn interval_count_exhaustive(n: usize) -> Result<StatsReport> {
    check_guard(n, 1, EXHAUSTIVE_GUARD)?;
    let tally = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut t = Tally::default();
            for_each_with_first(n, first, |vals| {
                t.record(&Permutation::from_vec_unchecked(vals.to_vec()));
            });
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    Ok(tally.into_report(n, 0, "exhaustive (no generator)", "exhaustive"))
}

impl StatsReport {
    /// One row per histogram bucket; seed and generator repeat on each row.
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "n",
            "samples",
            "seed",
            "generator",
            "intervals",
            "frequency",
            "empirical",
            "poisson",
        ])?;
        for b in &self.histogram {
            w.write_record([
                self.n.to_string(),
                self.samples.to_string(),
                self.seed.to_string(),
                self.generator.clone(),
                b.intervals.to_string(),
                b.frequency.to_string(),
                b.empirical.to_string(),
                b.poisson.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrendRow {
    pub n: usize,
    pub simple_count: usize,
    pub total_inessential: usize,
    pub mean_inessential: f64,
    pub mean_over_n: f64,
    /// Simple one-point extension slots summed over the simple
    /// permutations of length n − 1.
    pub extension_slots: usize,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InessentialTrend {
    pub rows: Vec<TrendRow>,
}

pub fn inessential_trend(max_n: usize) -> Result<InessentialTrend> {
    inessential_trend_range(5, max_n, TREND_GUARD)
}

/// Exhaustive mean number of inessential entries over the simple
/// permutations of each length in `min_n..=max_n` (`min_n ≥ 4`), each
/// total cross-checked by counting simple extensions of the length below.
pub fn inessential_trend_range(min_n: usize, max_n: usize, guard: usize) -> Result<InessentialTrend> {
    if min_n > max_n {
        return Err(crate::Error::BadArguments(format!(
            "empty length range {min_n}..={max_n}"
        )));
    }
    check_guard(min_n, 4, guard)?;
    check_guard(max_n, 4, guard)?;
    let mut rows = Vec::new();
    let mut below = bruteforce_unguarded(min_n - 1).permutations;
    for n in min_n..=max_n {
        let level = bruteforce_unguarded(n).permutations;
        let total: usize = level.par_iter().map(count_inessential).sum();
        let extension_slots: usize = if n > 4 {
            below
                .par_iter()
                .map(|t| extension_analysis(t).map(|r| r.counts.simple))
                .sum::<Result<usize>>()?
        } else {
            0
        };
        let mean = if level.is_empty() {
            0.0
        } else {
            total as f64 / level.len() as f64
        };
        rows.push(TrendRow {
            n,
            simple_count: level.len(),
            total_inessential: total,
            mean_inessential: mean,
            mean_over_n: mean / n as f64,
            extension_slots,
            consistent: total == extension_slots,
        });
        below = level;
    }
    Ok(InessentialTrend { rows })
}

impl InessentialTrend {
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row)?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_permutation(30, &mut block_rng(7, 0));
        let b = sample_permutation(30, &mut block_rng(7, 0));
        assert_eq!(a, b);
        assert_ne!(a, sample_permutation(30, &mut block_rng(7, 1)));
        assert_eq!(sample_permutation(1, &mut block_rng(7, 0)), Permutation::identity(1));
    }

    #[test]
    fn poisson_pmf_sums_to_one() {
        let s: f64 = (0..40).map(poisson2_pmf).sum();
        assert!((s - 1.0).abs() < 1e-12);
        assert!((poisson2_pmf(2) - 2.0 * E_MINUS_2).abs() < 1e-15);
        assert!((E_MINUS_2 - (-2.0f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn exhaustive_length_four() {
        let r = interval_count_exhaustive(4).unwrap();
        assert_eq!(r.samples, 24);
        assert_eq!(r.simple_fraction, 2.0 / 24.0);
        assert_eq!(r.histogram.iter().map(|b| b.frequency).sum::<u64>(), 24);
        let tail: f64 = r.histogram.iter().map(|b| b.poisson).sum();
        assert!((tail - 1.0).abs() < 1e-12);
    }

    #[test]
    fn small_experiment_invariants() {
        let r = interval_count_experiment(20, 3000, 42).unwrap();
        assert_eq!(r.histogram.iter().map(|b| b.frequency).sum::<u64>(), 3000);
        assert!((0.0..=1.0).contains(&r.tv_distance));
        assert_eq!(r.simple_fraction, r.histogram[0].frequency as f64 / 3000.0);
        assert!(interval_count_experiment(3, 10, 1).is_err());
        assert!(interval_count_experiment(10, 0, 1).is_err());
    }

    #[test]
    fn trend_rows() {
        let t = inessential_trend_range(4, 6, TREND_GUARD).unwrap();
        assert_eq!(t.rows[0].mean_inessential, 0.0);
        assert_eq!((t.rows[1].simple_count, t.rows[1].total_inessential), (6, 10));
        assert!(t.rows.iter().all(|r| r.consistent));
        assert!(inessential_trend(10).is_err());
        assert!(inessential_trend(4).is_err());
    }
}
