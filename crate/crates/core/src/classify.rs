//! Parallel alternations and separation.
//!
//! A parallel alternation of length `2ℓ` splits into two halves of `ℓ`
//! entries, both increasing or both decreasing, that interleave perfectly.
//! The halves are read off a dividing line: either the low values `1..=ℓ`
//! against the high values (and then the positions must alternate between
//! halves), or the left positions `1..=ℓ` against the right ones (and then
//! the values must alternate). Under the looser reading where any
//! interleaving bipartition counts, `2143` would qualify; here it does not.
//!
//! Entry `x1` separates `x2` and `x3` when it lies strictly between them in
//! exactly one of the two coordinates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intervals::is_simple;
use crate::perm::{EntryRef, Permutation, Symmetry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitAxis {
    /// Low values vs. high values; positions alternate.
    ValueSplit,
    /// Left positions vs. right positions; values alternate.
    PositionSplit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternationWitness {
    pub axis: SplitAxis,
    pub direction: Direction,
    /// Per position, 0 for the low/left half and 1 for the high/right half.
    pub halves: Vec<u8>,
}

fn alternates(halves: impl Iterator<Item = u8>) -> bool {
    let mut prev = None;
    for h in halves {
        if prev == Some(h) {
            return false;
        }
        prev = Some(h);
    }
    true
}

fn monotone(seq: &[u32], dir: Direction) -> bool {
    seq.windows(2).all(|w| match dir {
        Direction::Increasing => w[0] < w[1],
        Direction::Decreasing => w[0] > w[1],
    })
}

fn split_witness(perm: &Permutation, axis: SplitAxis) -> Option<AlternationWitness> {
    let vals = perm.values();
    let half = (vals.len() / 2) as u32;
    let halves: Vec<u8> = match axis {
        SplitAxis::ValueSplit => vals.iter().map(|&v| (v > half) as u8).collect(),
        SplitAxis::PositionSplit => (0..vals.len()).map(|i| (i as u32 >= half) as u8).collect(),
    };
    let interleaved = match axis {
        SplitAxis::ValueSplit => alternates(halves.iter().copied()),
        SplitAxis::PositionSplit => {
            let inv = perm.inverse();
            alternates(inv.values().iter().map(|&p| halves[p as usize - 1]))
        }
    };
    if !interleaved {
        return None;
    }
    let part = |h: u8| -> Vec<u32> {
        vals.iter()
            .zip(&halves)
            .filter(|&(_, &x)| x == h)
            .map(|(&v, _)| v)
            .collect()
    };
    let (a, b) = (part(0), part(1));
    [Direction::Increasing, Direction::Decreasing]
        .into_iter()
        .find(|&d| monotone(&a, d) && monotone(&b, d))
        .map(|direction| AlternationWitness {
            axis,
            direction,
            halves,
        })
}

/// A witness when `perm` is a parallel alternation. Odd lengths never are.
///
/// The value split is tried before the position split, and increasing
/// before decreasing.
pub fn is_parallel_alternation(perm: &Permutation) -> Option<AlternationWitness> {
    if perm.len() % 2 != 0 {
        return None;
    }
    split_witness(perm, SplitAxis::ValueSplit).or_else(|| split_witness(perm, SplitAxis::PositionSplit))
}

/// `(ℓ+1) 1 (ℓ+2) 2 ⋯ (2ℓ) ℓ`, transformed by `variant`.
pub fn canonical_parallel_alternation(half_len: usize, variant: Symmetry) -> Result<Permutation> {
    if half_len == 0 {
        return Err(Error::TooSmall { n: 0, min: 1 });
    }
    let values: Vec<u32> = (1..=half_len as u32).flat_map(|k| [half_len as u32 + k, k]).collect();
    Ok(Permutation::from_vec_unchecked(values).apply(variant))
}

/// Every parallel alternation of length `n`, built directly from the split
/// axis, the direction, and which half comes first. Sorted, deduplicated.
pub fn all_parallel_alternations(n: usize) -> Vec<Permutation> {
    if n == 0 || n % 2 != 0 {
        return Vec::new();
    }
    let half = (n / 2) as u32;
    let mut out = Vec::new();
    for high_first in [false, true] {
        for dir in [Direction::Increasing, Direction::Decreasing] {
            // Value split: positions alternate between the low and high halves.
            let values: Vec<u32> = (0..half)
                .flat_map(|k| {
                    let k = match dir {
                        Direction::Increasing => k,
                        Direction::Decreasing => half - 1 - k,
                    };
                    let (low, high) = (k + 1, half + k + 1);
                    if high_first {
                        [high, low]
                    } else {
                        [low, high]
                    }
                })
                .collect();
            let p = Permutation::from_vec_unchecked(values);
            // The position split is the same construction on the inverse.
            out.push(p.inverse());
            out.push(p);
        }
    }
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Repair {
    pub removed: Vec<EntryRef>,
    pub result: Permutation,
}

/// Removes at most two entries of a parallel alternation to reach a simple
/// permutation. Removal sets are tried by size, then in lexicographic
/// position order; the first simple result wins.
pub fn simplify_parallel_alternation(perm: &Permutation) -> Result<Repair> {
    if is_parallel_alternation(perm).is_none() {
        return Err(Error::NotAParallelAlternation(perm.to_string()));
    }
    let n = perm.len();
    let entry = |p: usize| EntryRef {
        position: p,
        value: perm.value_at(p),
    };
    if is_simple(perm).simple {
        return Ok(Repair {
            removed: Vec::new(),
            result: perm.clone(),
        });
    }
    for p in 1..=n {
        let rest = perm.delete(p)?;
        if is_simple(&rest).simple {
            return Ok(Repair {
                removed: vec![entry(p)],
                result: rest,
            });
        }
    }
    for p in 1..=n {
        for q in p + 1..=n {
            let keep: Vec<usize> = (1..=n).filter(|&k| k != p && k != q).collect();
            let rest = perm.pattern_of(&keep)?;
            if is_simple(&rest).simple {
                return Ok(Repair {
                    removed: vec![entry(p), entry(q)],
                    result: rest,
                });
            }
        }
    }
    Err(Error::BadArguments(format!(
        "no simple permutation within two removals of {perm}"
    )))
}

fn strictly_between(x: usize, a: usize, b: usize) -> bool {
    a.min(b) < x && x < a.max(b)
}

fn sep(x1: EntryRef, x2: EntryRef, x3: EntryRef) -> bool {
    strictly_between(x1.position, x2.position, x3.position) ^ strictly_between(x1.value, x2.value, x3.value)
}

/// Whether `x1` lies between `x2` and `x3` horizontally or vertically, but
/// not both.
pub fn separates(perm: &Permutation, x1: EntryRef, x2: EntryRef, x3: EntryRef) -> Result<bool> {
    for e in [x1, x2, x3] {
        EntryRef::checked(perm, e.position, e.value)?;
    }
    if x1 == x2 || x1 == x3 || x2 == x3 {
        return Err(Error::NotDistinct);
    }
    Ok(sep(x1, x2, x3))
}

/// Whether `x` lies outside the rectangular hull of `set` and separates some
/// pair of its entries.
pub fn separates_set(perm: &Permutation, x: EntryRef, set: &[EntryRef]) -> Result<bool> {
    if set.len() < 2 {
        return Err(Error::BadArguments("the set needs at least two entries".into()));
    }
    if set.contains(&x) {
        return Err(Error::BadArguments(format!("{x} belongs to the set")));
    }
    EntryRef::checked(perm, x.position, x.value)?;
    let hull = perm.rect_hull(set)?;
    if hull.contains(x) {
        return Ok(false);
    }
    Ok(set
        .iter()
        .enumerate()
        .any(|(k, &a)| set[k + 1..].iter().any(|&b| sep(x, a, b))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn e(position: usize, value: usize) -> EntryRef {
        EntryRef { position, value }
    }

    #[test]
    fn recognition_examples() {
        let w = is_parallel_alternation(&p("1324")).unwrap();
        assert_eq!(w.axis, SplitAxis::ValueSplit);
        assert_eq!(w.direction, Direction::Increasing);
        assert_eq!(w.halves, vec![0, 1, 0, 1]);
        assert!(is_parallel_alternation(&p("2413")).is_some());
        assert!(is_parallel_alternation(&p("3142")).is_some());
        assert!(is_parallel_alternation(&p("12")).is_some());
        assert!(is_parallel_alternation(&p("21")).is_some());
        assert!(is_parallel_alternation(&p("2143")).is_none());
        assert!(is_parallel_alternation(&p("1")).is_none());
        assert!(is_parallel_alternation(&p("25314")).is_none());
    }

    #[test]
    fn position_split_witness() {
        // 142536 splits as 1 2 3 | 4 5 6 by value; its inverse 135246 needs
        // the left/right split.
        let w = is_parallel_alternation(&p("135246")).unwrap();
        assert_eq!(w.axis, SplitAxis::PositionSplit);
        assert_eq!(w.direction, Direction::Increasing);
        assert_eq!(w.halves, vec![0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonical_parallel_alternation(3, Symmetry::Identity).unwrap(),
            p("415263")
        );
        assert_eq!(
            canonical_parallel_alternation(2, Symmetry::Identity).unwrap(),
            p("3142")
        );
        assert_eq!(canonical_parallel_alternation(1, Symmetry::Identity).unwrap(), p("21"));
        assert!(canonical_parallel_alternation(0, Symmetry::Identity).is_err());
    }

    #[test]
    fn repair_examples() {
        let r = simplify_parallel_alternation(&p("2413")).unwrap();
        assert!(r.removed.is_empty());
        assert_eq!(r.result, p("2413"));

        // Removing the first two entries (values 1 and 3) leaves 12.
        let r = simplify_parallel_alternation(&p("1324")).unwrap();
        assert_eq!(r.removed, vec![e(1, 1), e(2, 3)]);
        assert_eq!(r.result, p("12"));

        let r = simplify_parallel_alternation(&p("415263")).unwrap();
        assert!(r.removed.is_empty());

        assert!(matches!(
            simplify_parallel_alternation(&p("2143")),
            Err(Error::NotAParallelAlternation(_))
        ));
    }

    #[test]
    fn separation_examples() {
        let s = p("2413");
        assert!(separates(&s, e(1, 2), e(2, 4), e(3, 1)).unwrap());
        assert!(!separates(&s, e(1, 2), e(2, 4), e(4, 3)).unwrap());
        assert!(separates(&s, e(3, 1), e(2, 4), e(4, 3)).unwrap());
        let id = p("123");
        assert!(!separates(&id, e(2, 2), e(1, 1), e(3, 3)).unwrap());
        assert_eq!(separates(&s, e(1, 2), e(1, 2), e(3, 1)), Err(Error::NotDistinct));
        assert!(separates(&s, e(1, 3), e(2, 4), e(3, 1)).is_err());
    }

    #[test]
    fn set_separation_examples() {
        let s = p("52413");
        let copy: Vec<_> = (2..=5).map(|k| e(k, s.value_at(k))).collect();
        assert!(!separates_set(&s, e(1, 5), &copy).unwrap());

        let s = p("2413");
        assert!(separates_set(&s, e(1, 2), &[e(2, 4), e(3, 1)]).unwrap());
        // outside the hull [1,3]x[3,4], between the pair horizontally only
        assert!(separates_set(&p("3142"), e(2, 1), &[e(1, 3), e(3, 4)]).unwrap());

        let s = p("25314");
        assert!(!separates_set(&s, e(3, 3), &[e(1, 2), e(2, 5), e(4, 1)]).unwrap());
        assert!(separates_set(&s, e(1, 2), &[e(2, 5)]).is_err());
        assert!(separates_set(&s, e(1, 2), &[e(1, 2), e(2, 5)]).is_err());
        assert!(separates_set(&s, e(1, 3), &[e(2, 5), e(4, 1)]).is_err());
    }
}
