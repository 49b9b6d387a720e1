//! Intervals (blocks) and the simplicity test.
//!
//! An interval is a set of entries whose positions and values both form
//! contiguous ranges. Since the positions must be contiguous, every interval
//! is a window `[i, j]` of positions; it is an interval exactly when
//! `max − min = j − i` over the window's values. Windows are scanned with
//! running extrema, constant work per window, so a full scan is quadratic.
//!
//! Intervals of size 0, 1 and `n` are trivial. "Nontrivial" below always
//! means size `2..=n−1`, and a permutation is simple when it has none.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{EntryRef, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntervalWindow {
    pub i: usize,
    pub j: usize,
    pub vmin: usize,
    pub vmax: usize,
}

impl IntervalWindow {
    pub fn len(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_interval(&self) -> bool {
        self.vmax - self.vmin == self.j - self.i
    }

    /// `other` lies within `self`.
    pub fn contains(&self, other: &IntervalWindow) -> bool {
        self.i <= other.i && other.j <= self.j
    }

    pub fn entries(&self, perm: &Permutation) -> Vec<EntryRef> {
        (self.i..=self.j)
            .map(|p| EntryRef {
                position: p,
                value: perm.value_at(p),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub simple: bool,
    pub witness: Option<IntervalWindow>,
}

/// The window `[i, j]` with its value range.
pub fn window(perm: &Permutation, i: usize, j: usize) -> Result<IntervalWindow> {
    let n = perm.len();
    if i == 0 || i > n {
        return Err(Error::OutOfRange {
            what: "window start",
            value: i,
            max: n,
        });
    }
    if j < i || j > n {
        return Err(Error::OutOfRange {
            what: "window end",
            value: j,
            max: n,
        });
    }
    let vals = &perm.values()[i - 1..j];
    Ok(IntervalWindow {
        i,
        j,
        vmin: *vals.iter().min().unwrap() as usize,
        vmax: *vals.iter().max().unwrap() as usize,
    })
}

pub fn is_interval_window(perm: &Permutation, i: usize, j: usize) -> Result<bool> {
    Ok(window(perm, i, j)?.is_interval())
}

/// Calls `visit` on every nontrivial interval in lexicographic `(i, j)` order
/// until it returns `false`.
fn scan_nontrivial(perm: &Permutation, mut visit: impl FnMut(IntervalWindow) -> bool) {
    let vals = perm.values();
    let n = vals.len();
    if n < 3 {
        return;
    }
    for i in 0..n - 1 {
        let (mut lo, mut hi) = (vals[i], vals[i]);
        // A window starting at i = 0 may not reach the last position.
        let last = if i == 0 { n - 2 } else { n - 1 };
        for (j, &v) in vals.iter().enumerate().take(last + 1).skip(i + 1) {
            lo = lo.min(v);
            hi = hi.max(v);
            if (hi - lo) as usize == j - i {
                let w = IntervalWindow {
                    i: i + 1,
                    j: j + 1,
                    vmin: lo as usize,
                    vmax: hi as usize,
                };
                if !visit(w) {
                    return;
                }
            }
        }
    }
}

/// All intervals of size `2..=n−1`, in lexicographic `(i, j)` order.
pub fn nontrivial_intervals(perm: &Permutation) -> Vec<IntervalWindow> {
    let mut out = Vec::new();
    scan_nontrivial(perm, |w| {
        out.push(w);
        true
    });
    out
}

/// Number of nontrivial intervals and the largest of their sizes (0 when
/// there are none). Allocation free.
pub fn interval_census(perm: &Permutation) -> (usize, usize) {
    let (mut count, mut largest) = (0, 0);
    scan_nontrivial(perm, |w| {
        count += 1;
        largest = largest.max(w.len());
        true
    });
    (count, largest)
}

/// Inclusion-minimal nontrivial intervals, lexicographic order.
pub fn minimal_nontrivial_intervals(perm: &Permutation) -> Vec<IntervalWindow> {
    let all = nontrivial_intervals(perm);
    all.iter()
        .filter(|w| !all.iter().any(|o| o != *w && w.contains(o)))
        .copied()
        .collect()
}

pub fn is_simple(perm: &Permutation) -> SimplicityReport {
    let mut witness = None;
    scan_nontrivial(perm, |w| {
        witness = Some(w);
        false
    });
    SimplicityReport {
        simple: witness.is_none(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn w(i: usize, j: usize, perm: &Permutation) -> IntervalWindow {
        window(perm, i, j).unwrap()
    }

    #[test]
    fn window_test_examples() {
        assert!(!is_interval_window(&p("2413"), 1, 2).unwrap());
        let id = Permutation::identity(6);
        for i in 1..=6 {
            for j in i..=6 {
                assert!(is_interval_window(&id, i, j).unwrap());
            }
        }
        assert!(is_interval_window(&p("52413"), 2, 5).unwrap());
        assert!(is_interval_window(&p("2413"), 3, 2).is_err());
        assert!(is_interval_window(&p("2413"), 0, 2).is_err());
        assert!(is_interval_window(&p("2413"), 1, 5).is_err());
    }

    #[test]
    fn nontrivial_examples() {
        assert!(nontrivial_intervals(&p("2413")).is_empty());
        let id = Permutation::identity(4);
        let got: Vec<_> = nontrivial_intervals(&id).iter().map(|w| (w.i, w.j)).collect();
        assert_eq!(got, vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        let s = p("23514");
        assert_eq!(nontrivial_intervals(&s), vec![w(1, 2, &s)]);
        assert!(nontrivial_intervals(&p("1")).is_empty());
        assert!(nontrivial_intervals(&p("21")).is_empty());
    }

    #[test]
    fn minimal_examples() {
        let s = p("52413");
        assert_eq!(minimal_nontrivial_intervals(&s), vec![w(2, 5, &s)]);
        let id = Permutation::identity(4);
        let got: Vec<_> = minimal_nontrivial_intervals(&id).iter().map(|w| (w.i, w.j)).collect();
        assert_eq!(got, vec![(1, 2), (2, 3), (3, 4)]);
        let s = p("23514");
        assert_eq!(minimal_nontrivial_intervals(&s), vec![w(1, 2, &s)]);
    }

    #[test]
    fn simplicity_examples() {
        assert!(is_simple(&p("2413")).simple);
        let r = is_simple(&p("132"));
        assert!(!r.simple);
        assert_eq!(r.witness.map(|w| (w.i, w.j)), Some((2, 3)));
        assert!(is_simple(&p("42513")).simple);
        for s in ["1", "12", "21"] {
            assert_eq!(
                is_simple(&p(s)),
                SimplicityReport {
                    simple: true,
                    witness: None
                }
            );
        }
    }

    #[test]
    fn census_matches_enumeration() {
        let s = p("123");
        assert_eq!(interval_census(&s), (2, 2));
        let s = p("52413");
        assert_eq!(interval_census(&s), (1, 4));
    }
}
