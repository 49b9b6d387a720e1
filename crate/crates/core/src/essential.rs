//! Inessential entries, the exhaustive theorem check, and the census of
//! one-point extensions.
//!
//! An entry of a simple permutation is inessential when deleting it leaves a
//! simple permutation, and essential otherwise. Every simple permutation that
//! is not a parallel alternation has at least one inessential entry;
//! [`verify_theorem`] checks this exhaustively at a given length.
//!
//! [`extension_analysis`] classifies the `(n+1)²` slots of a simple
//! permutation by building each extension and testing it. The naive count
//! of simple extensions is `n² − 3` (all slots, minus `2n` doubleton
//! slots and 4 corners); the census instead finds `4n` doubleton slots,
//! pairing up into `2n` distinct results, and so `(n+1)(n−3)` simple slots.
//! Both are reported side by side. Either way the count grows like `n²`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::is_parallel_alternation;
use crate::enumerate::{bruteforce_unguarded, check_guard};
use crate::error::{Error, Result};
use crate::intervals::is_simple;
use crate::perm::{Permutation, Slot};

pub const EXHAUSTIVE_GUARD: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryStatus {
    pub position: usize,
    pub value: usize,
    pub inessential: bool,
    /// σ − x, present when it is simple.
    pub remainder: Option<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EssentialityReport {
    pub permutation: Permutation,
    pub inessential_count: usize,
    pub entries: Vec<EntryStatus>,
}

impl EssentialityReport {
    pub fn inessential(&self) -> impl Iterator<Item = &EntryStatus> {
        self.entries.iter().filter(|e| e.inessential)
    }
}

fn require_simple(perm: &Permutation) -> Result<()> {
    if !is_simple(perm).simple {
        return Err(Error::NotSimple(perm.to_string()));
    }
    Ok(())
}

pub fn inessential_entries(perm: &Permutation) -> Result<EssentialityReport> {
    if perm.len() < 2 {
        return Err(Error::TooSmall { n: perm.len(), min: 2 });
    }
    require_simple(perm)?;
    let entries: Vec<EntryStatus> = perm
        .entries()
        .map(|e| {
            let rest = perm.delete(e.position).expect("n >= 2");
            let inessential = is_simple(&rest).simple;
            EntryStatus {
                position: e.position,
                value: e.value,
                inessential,
                remainder: inessential.then_some(rest),
            }
        })
        .collect();
    Ok(EssentialityReport {
        permutation: perm.clone(),
        inessential_count: entries.iter().filter(|e| e.inessential).count(),
        entries,
    })
}

/// Number of inessential entries of a simple permutation of length ≥ 2.
pub(crate) fn count_inessential(perm: &Permutation) -> usize {
    (1..=perm.len())
        .filter(|&p| is_simple(&perm.delete(p).expect("n >= 2")).simple)
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub simple_count: usize,
    pub parallel_alternation_simple_count: usize,
    pub simple_with_inessential_count: usize,
    /// Simple permutations that are not parallel alternations and have no
    /// inessential entry. Must be empty.
    pub counterexamples: Vec<Permutation>,
    pub holds: bool,
}

pub fn verify_theorem(n: usize) -> Result<TheoremReport> {
    verify_theorem_with_guard(n, EXHAUSTIVE_GUARD)
}

/// Enumerates the simple permutations of length `n` by brute force and
/// checks each.
///
/// At length 1 the only deletion leaves the empty permutation, which has no
/// nontrivial interval; the entry of `1` is counted as inessential.
pub fn verify_theorem_with_guard(n: usize, guard: usize) -> Result<TheoremReport> {
    check_guard(n, 1, guard)?;
    if n == 1 {
        return Ok(TheoremReport {
            n,
            simple_count: 1,
            parallel_alternation_simple_count: 0,
            simple_with_inessential_count: 1,
            counterexamples: Vec::new(),
            holds: true,
        });
    }
    let simples = bruteforce_unguarded(n).permutations;
    // (is parallel alternation, has an inessential entry)
    let flags: Vec<(bool, bool)> = simples
        .par_iter()
        .map(|p| (is_parallel_alternation(p).is_some(), count_inessential(p) > 0))
        .collect();
    let counterexamples: Vec<Permutation> = simples
        .iter()
        .zip(&flags)
        .filter(|(_, &(pa, ines))| !pa && !ines)
        .map(|(p, _)| p.clone())
        .collect();
    Ok(TheoremReport {
        n,
        simple_count: simples.len(),
        parallel_alternation_simple_count: flags.iter().filter(|f| f.0).count(),
        simple_with_inessential_count: flags.iter().filter(|f| f.1).count(),
        holds: counterexamples.is_empty(),
        counterexamples,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SlotClass {
    /// The new entry forms a two-entry interval with an old one.
    Doubleton,
    /// The old entries form an interval of length `n`.
    Corner,
    Simple,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlotRecord {
    pub position: usize,
    pub value: usize,
    pub class: SlotClass,
    pub result: Permutation,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub doubleton: usize,
    pub corner: usize,
    pub simple: usize,
    pub other: usize,
}

impl ClassCounts {
    pub fn total(&self) -> usize {
        self.doubleton + self.corner + self.simple + self.other
    }

    fn bump(&mut self, class: SlotClass) {
        match class {
            SlotClass::Doubleton => self.doubleton += 1,
            SlotClass::Corner => self.corner += 1,
            SlotClass::Simple => self.simple += 1,
            SlotClass::Other => self.other += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub base: Permutation,
    pub n: usize,
    pub slot_count: usize,
    pub counts: ClassCounts,
    pub distinct_results: usize,
    pub distinct_doubleton_results: usize,
    /// `n² − 3`, from the naive argument; carried for comparison only.
    pub predicted_simple: usize,
    /// `(n+1)(n−3)`, what the census measures for every simple base.
    pub measured_formula_simple: usize,
    pub slots: Vec<SlotRecord>,
}

fn classify_slot(base: &Permutation, slot: Slot, ext: &Permutation) -> SlotClass {
    let n = base.len();
    let vals = ext.values();
    let new = slot.value as i64;
    let p = slot.position - 1;
    let adjacent = |k: usize| (vals[k] as i64 - new).abs() == 1;
    if (p > 0 && adjacent(p - 1)) || (p + 1 < vals.len() && adjacent(p + 1)) {
        return SlotClass::Doubleton;
    }
    let rest_window = match slot.position {
        1 => Some((2, n + 1)),
        q if q == n + 1 => Some((1, n)),
        _ => None,
    };
    if let Some((i, j)) = rest_window {
        let w = &vals[i - 1..j];
        let (lo, hi) = (w.iter().min().unwrap(), w.iter().max().unwrap());
        if (hi - lo) as usize == j - i {
            return SlotClass::Corner;
        }
    }
    if is_simple(ext).simple {
        SlotClass::Simple
    } else {
        SlotClass::Other
    }
}

/// Builds and classifies all `(n+1)²` one-point extensions of a simple
/// permutation of length at least 4.
pub fn extension_analysis(base: &Permutation) -> Result<ExtensionReport> {
    let n = base.len();
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    require_simple(base)?;
    let mut counts = ClassCounts::default();
    let mut slots = Vec::with_capacity((n + 1) * (n + 1));
    for slot in Slot::all(n) {
        let result = base.insert(slot)?;
        let class = classify_slot(base, slot, &result);
        counts.bump(class);
        slots.push(SlotRecord {
            position: slot.position,
            value: slot.value,
            class,
            result,
        });
    }
    let distinct_results = slots.iter().map(|s| &s.result).collect::<HashSet<_>>().len();
    let distinct_doubleton_results = slots
        .iter()
        .filter(|s| s.class == SlotClass::Doubleton)
        .map(|s| &s.result)
        .collect::<HashSet<_>>()
        .len();
    Ok(ExtensionReport {
        base: base.clone(),
        n,
        slot_count: slots.len(),
        counts,
        distinct_results,
        distinct_doubleton_results,
        predicted_simple: n * n - 3,
        measured_formula_simple: (n + 1) * (n - 3),
        slots,
    })
}

impl ExtensionReport {
    pub fn simple_results(&self) -> Vec<Permutation> {
        self.slots
            .iter()
            .filter(|s| s.class == SlotClass::Simple)
            .map(|s| s.result.clone())
            .collect()
    }

    /// How many slots produced each doubleton result.
    pub fn doubleton_multiplicities(&self) -> BTreeMap<Permutation, usize> {
        let mut m = BTreeMap::new();
        for s in self.slots.iter().filter(|s| s.class == SlotClass::Doubleton) {
            *m.entry(s.result.clone()).or_insert(0) += 1;
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCountReport {
    pub n: usize,
    /// Σ over simple σ of length n+1 of the number of inessential entries.
    pub inessential_pairs: usize,
    /// Σ over simple τ of length n of the number of simple extension slots.
    pub simple_extension_slots: usize,
    pub equal: bool,
}

pub fn double_count_check(n: usize) -> Result<DoubleCountReport> {
    double_count_check_with_guard(n, EXHAUSTIVE_GUARD)
}

/// Counts pairs (σ, x) with x an inessential entry of a simple σ of length
/// n+1 in two ways: directly, and as simple one-point extensions of the
/// simple permutations of length n.
pub fn double_count_check_with_guard(n: usize, guard: usize) -> Result<DoubleCountReport> {
    check_guard(n, 4, guard.saturating_sub(1))?;
    let longer = bruteforce_unguarded(n + 1).permutations;
    let shorter = bruteforce_unguarded(n).permutations;
    let inessential_pairs: usize = longer.par_iter().map(count_inessential).sum();
    let simple_extension_slots: usize = shorter
        .par_iter()
        .map(|t| extension_analysis(t).map(|r| r.counts.simple))
        .sum::<Result<usize>>()?;
    Ok(DoubleCountReport {
        n,
        inessential_pairs,
        simple_extension_slots,
        equal: inessential_pairs == simple_extension_slots,
    })
}
