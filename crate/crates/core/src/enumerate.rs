//! Exhaustive generation of simple permutations.
//!
//! Two routes produce the same sets. Brute force walks all `n!`
//! permutations in lexicographic order and filters them. One-point
//! extension grows the simple permutations of length `k` into those of
//! length `k + 1`: every simple permutation that is not a parallel
//! alternation has an entry whose removal leaves a simple permutation, so it
//! is reached by inserting that entry back. The simple parallel alternations
//! are not reached that way and are seeded explicitly at every even length.
//!
//! Both routes shard over rayon's current thread pool and merge in sorted
//! order, so results do not depend on the number of workers. Extension
//! keeps a whole level in memory: about 3.5 million permutations at
//! length 11.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{all_parallel_alternations, canonical_parallel_alternation, is_parallel_alternation};
use crate::error::{Error, Result};
use crate::intervals::is_simple;
use crate::perm::{Permutation, Slot, Symmetry};

pub const BRUTE_FORCE_GUARD: usize = 9;
pub const EXTENSION_GUARD: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    Extension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleSet {
    pub n: usize,
    pub method: Method,
    /// Sorted lexicographically, no duplicates.
    pub permutations: Vec<Permutation>,
}

impl SimpleSet {
    pub fn len(&self) -> usize {
        self.permutations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutations.is_empty()
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        self.permutations.binary_search(perm).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.permutations.iter()
    }
}

pub(crate) fn check_guard(n: usize, min: usize, guard: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall { n, min });
    }
    if n > guard {
        return Err(Error::TooLarge { n, guard });
    }
    Ok(())
}

/// Rearranges `xs` into its lexicographic successor; false once `xs` is the
/// last (decreasing) arrangement.
pub fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|x| *x > xs[i]).expect("xs[i + 1] > xs[i]");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// All permutations of length `n` with a given first value, lexicographic.
pub(crate) fn for_each_with_first(n: usize, first: u32, mut visit: impl FnMut(&[u32])) {
    let mut buf: Vec<u32> = std::iter::once(first)
        .chain((1..=n as u32).filter(|&v| v != first))
        .collect();
    loop {
        visit(&buf);
        if !next_permutation(&mut buf[1..]) {
            break;
        }
    }
}

/// Every permutation of length `n` satisfying `keep`, in lexicographic
/// order. Sharded by first value.
pub fn filter_all_permutations(n: usize, keep: impl Fn(&Permutation) -> bool + Sync) -> Vec<Permutation> {
    assert!(n >= 1);
    (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            for_each_with_first(n, first, |vals| {
                let p = Permutation::from_vec_unchecked(vals.to_vec());
                if keep(&p) {
                    out.push(p);
                }
            });
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub(crate) fn bruteforce_unguarded(n: usize) -> SimpleSet {
    SimpleSet {
        n,
        method: Method::BruteForce,
        permutations: filter_all_permutations(n, |p| is_simple(p).simple),
    }
}

pub fn all_simple_bruteforce(n: usize) -> Result<SimpleSet> {
    all_simple_bruteforce_with_guard(n, BRUTE_FORCE_GUARD)
}

pub fn all_simple_bruteforce_with_guard(n: usize, guard: usize) -> Result<SimpleSet> {
    check_guard(n, 1, guard)?;
    Ok(bruteforce_unguarded(n))
}

/// Whether inserting at `slot` makes the new entry part of a two-entry
/// interval with a neighbour of `base`.
pub fn is_doubleton_slot(base: &Permutation, slot: Slot) -> bool {
    let vals = base.values();
    let v = slot.value as u32;
    // After the shift, an old value w is adjacent to v iff w ∈ {v − 1, v}.
    let adjacent = |w: u32| w + 1 == v || w == v;
    let left = slot.position >= 2 && adjacent(vals[slot.position - 2]);
    let right = slot.position <= vals.len() && adjacent(vals[slot.position - 1]);
    left || right
}

/// Whether `slot` is one of the four corners, where the base becomes an
/// interval of the extension.
pub fn is_corner_slot(n: usize, slot: Slot) -> bool {
    (slot.position == 1 || slot.position == n + 1) && (slot.value == 1 || slot.value == n + 1)
}

/// The simple one-point extensions of `base`, one per simple slot (so with
/// repetition, in slot order). With `prune`, doubleton and corner slots are
/// skipped without being tested.
pub fn simple_extensions(base: &Permutation, prune: bool) -> Vec<Permutation> {
    let n = base.len();
    Slot::all(n)
        .filter(|&s| !prune || !(is_corner_slot(n, s) || is_doubleton_slot(base, s)))
        .map(|s| base.insert(s).expect("slot within range"))
        .filter(|p| is_simple(p).simple)
        .collect()
}

fn fixed_small(n: usize) -> Vec<Permutation> {
    let table: &[&[u32]] = match n {
        1 => &[&[1]],
        2 => &[&[1, 2], &[2, 1]],
        3 => &[],
        _ => &[&[2, 4, 1, 3], &[3, 1, 4, 2]],
    };
    table
        .iter()
        .map(|v| Permutation::from_vec_unchecked(v.to_vec()))
        .collect()
}

/// The next level of the extension route: all simple extensions of `level`
/// plus the simple parallel alternations of the new length.
pub fn extend_level(level: &[Permutation], prune: bool) -> Vec<Permutation> {
    let next_len = level.first().map_or(0, |p| p.len() + 1);
    let mut found: HashSet<Permutation> = level
        .par_iter()
        .map(|p| simple_extensions(p, prune))
        .flatten()
        .collect();
    if next_len > 0 {
        found.extend(pa_seeds(next_len).permutations);
    }
    let mut out: Vec<Permutation> = found.into_iter().collect();
    out.par_sort_unstable();
    out
}

pub fn simple_via_extension(n: usize) -> Result<SimpleSet> {
    simple_via_extension_with_guard(n, EXTENSION_GUARD)
}

pub fn simple_via_extension_with_guard(n: usize, guard: usize) -> Result<SimpleSet> {
    check_guard(n, 1, guard)?;
    let mut level = fixed_small(n.min(4));
    for _ in 4..n {
        level = extend_level(&level, true);
    }
    Ok(SimpleSet {
        n,
        method: Method::Extension,
        permutations: level,
    })
}

/// All simple parallel alternations of length `n`: the orbit of the
/// canonical alternation under the eight symmetries, filtered by
/// simplicity. Empty for odd `n`.
pub fn pa_seeds(n: usize) -> SimpleSet {
    let mut perms: Vec<Permutation> = if n >= 2 && n % 2 == 0 {
        Symmetry::ALL
            .iter()
            .map(|&s| canonical_parallel_alternation(n / 2, s).expect("n / 2 >= 1"))
            .filter(|p| is_simple(p).simple)
            .collect()
    } else {
        Vec::new()
    };
    perms.sort();
    perms.dedup();
    debug_assert_eq!(
        perms,
        all_parallel_alternations(n)
            .into_iter()
            .filter(|p| is_parallel_alternation(p).is_some() && is_simple(p).simple)
            .collect::<Vec<_>>(),
        "symmetry orbit disagrees with the recognition sweep at length {n}"
    );
    SimpleSet {
        n,
        method: Method::Extension,
        permutations: perms,
    }
}
