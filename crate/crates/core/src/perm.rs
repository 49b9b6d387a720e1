//! The permutation value type and the basic operations on plots.
//!
//! Positions and values are 1-based everywhere in the public API: a
//! permutation of length `n` is identified with its plot, the point set
//! `{(i, σ(i)) : 1 ≤ i ≤ n}`, with positions running horizontally and values
//! vertically.
//!
//! # Symmetries
//!
//! The eight symmetries of the square are generated by `reverse` (flip the
//! positions), `complement` (flip the values) and `inverse` (swap the two
//! axes). Compound names read left to right in order of application, so
//! `inverse-reverse` first inverts and then reverses. [`Symmetry::compose`]
//! follows the same convention: `a.compose(b)` is "apply `a`, then `b`".
//!
//! Composition table, row `a`, column `b`, entry `a.compose(b)`. Letters:
//! `e` identity, `r` reverse, `c` complement, `rc` reverse-complement,
//! `i` inverse, `ir` inverse-reverse, `ic` inverse-complement,
//! `irc` inverse-reverse-complement.
//!
//! ```text
//!         e    r    c    rc   i    ir   ic   irc
//!  e      e    r    c    rc   i    ir   ic   irc
//!  r      r    e    rc   c    ic   irc  i    ir
//!  c      c    rc   e    r    ir   i    irc  ic
//!  rc     rc   c    r    e    irc  ic   ir   i
//!  i      i    ir   ic   irc  e    r    c    rc
//!  ir     ir   i    irc  ic   c    rc   e    r
//!  ic     ic   irc  i    ir   r    e    rc   c
//!  irc    irc  ic   ir   i    rc   c    r    e
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation, `n ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

/// One point `(position, value)` of a permutation's plot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EntryRef {
    pub position: usize,
    pub value: usize,
}

/// Where a new entry lands when extending a permutation of length `n`.
///
/// `value` is the rank of the new entry in the extended permutation: existing
/// values `>= value` move up by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub position: usize,
    pub value: usize,
}

/// Axis-aligned box `[pmin, pmax] × [vmin, vmax]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectHull {
    pub pmin: usize,
    pub pmax: usize,
    pub vmin: usize,
    pub vmax: usize,
}

impl RectHull {
    pub fn contains(&self, e: EntryRef) -> bool {
        (self.pmin..=self.pmax).contains(&e.position) && (self.vmin..=self.vmax).contains(&e.value)
    }
}

impl EntryRef {
    /// The entry of `perm` at `position`.
    pub fn at(perm: &Permutation, position: usize) -> Result<Self> {
        perm.check_position(position)?;
        Ok(EntryRef {
            position,
            value: perm.value_at(position),
        })
    }

    /// Checks that `(position, value)` is actually a point of `perm`.
    pub fn checked(perm: &Permutation, position: usize, value: usize) -> Result<Self> {
        let e = Self::at(perm, position)?;
        if e.value != value {
            return Err(Error::BadArguments(format!(
                "({position}, {value}) is not an entry of {perm}"
            )));
        }
        Ok(e)
    }
}

impl fmt::Display for EntryRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.position, self.value)
    }
}

impl Slot {
    pub fn new(position: usize, value: usize) -> Self {
        Slot { position, value }
    }

    /// All `(n+1)²` slots of a length-`n` permutation, ordered by position
    /// and then value.
    pub fn all(n: usize) -> impl Iterator<Item = Slot> {
        (1..=n + 1).flat_map(move |p| (1..=n + 1).map(move |v| Slot::new(p, v)))
    }
}

impl Permutation {
    /// Validates `seq` as a bijection on `1..=n`.
    pub fn from_sequence(seq: &[usize]) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::NotAPermutation("empty sequence".into()));
        }
        let n = seq.len();
        if n > u32::MAX as usize {
            return Err(Error::NotAPermutation("sequence too long".into()));
        }
        let mut seen = vec![false; n];
        for (i, &v) in seq.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation(format!(
                    "value {v} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPermutation(format!(
                    "value {v} repeated at position {}",
                    i + 1
                )));
            }
        }
        Ok(Permutation {
            values: seq.iter().map(|&v| v as u32).collect(),
        })
    }

    /// Caller guarantees `values` is a bijection on `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(!values.is_empty());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have length at least 1");
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize).collect()
    }

    /// σ(position). Panics when `position` is outside `1..=n`.
    pub fn value_at(&self, position: usize) -> usize {
        self.values[position - 1] as usize
    }

    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.values.iter().position(|&v| v as usize == value).map(|i| i + 1)
    }

    pub fn entries(&self) -> impl Iterator<Item = EntryRef> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| EntryRef {
            position: i + 1,
            value: v as usize,
        })
    }

    fn check_position(&self, position: usize) -> Result<()> {
        if position == 0 || position > self.len() {
            return Err(Error::OutOfRange {
                what: "position",
                value: position,
                max: self.len(),
            });
        }
        Ok(())
    }

    /// Removes the entry at `position` and renormalizes the remaining ranks.
    pub fn delete(&self, position: usize) -> Result<Permutation> {
        self.check_position(position)?;
        if self.len() == 1 {
            return Err(Error::Underflow);
        }
        let gone = self.values[position - 1];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != position - 1)
            .map(|(_, &v)| if v > gone { v - 1 } else { v })
            .collect();
        Ok(Permutation { values })
    }

    /// Inserts a new entry at `slot`. Inverse of [`Permutation::delete`] at
    /// `slot.position`.
    pub fn insert(&self, slot: Slot) -> Result<Permutation> {
        let m = self.len() + 1;
        for (what, value) in [("slot position", slot.position), ("slot value", slot.value)] {
            if value == 0 || value > m {
                return Err(Error::OutOfRange { what, value, max: m });
            }
        }
        let new = slot.value as u32;
        let mut values = Vec::with_capacity(m);
        values.extend(self.values.iter().map(|&v| if v >= new { v + 1 } else { v }));
        values.insert(slot.position - 1, new);
        Ok(Permutation { values })
    }

    /// The pattern formed by the entries at `positions` (a set: order and
    /// repetition are ignored).
    pub fn pattern_of(&self, positions: &[usize]) -> Result<Permutation> {
        let mut pos = positions.to_vec();
        pos.sort_unstable();
        pos.dedup();
        if pos.is_empty() {
            return Err(Error::EmptySet);
        }
        for &p in &pos {
            self.check_position(p)?;
        }
        let picked: Vec<u32> = pos.iter().map(|&p| self.values[p - 1]).collect();
        Ok(Permutation {
            values: rank_reduce(&picked),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values }
    }

    pub fn apply(&self, sym: Symmetry) -> Permutation {
        let n = self.len();
        let mut values = vec![0u32; n];
        for e in self.entries() {
            let img = sym.map_entry(n, e);
            values[img.position - 1] = img.value as u32;
        }
        Permutation { values }
    }

    /// Bounding box of `entries`, all of which must be entries of `self`.
    pub fn rect_hull(&self, entries: &[EntryRef]) -> Result<RectHull> {
        let first = entries.first().ok_or(Error::EmptySet)?;
        let mut hull = RectHull {
            pmin: first.position,
            pmax: first.position,
            vmin: first.value,
            vmax: first.value,
        };
        for &e in entries {
            EntryRef::checked(self, e.position, e.value)?;
            hull.pmin = hull.pmin.min(e.position);
            hull.pmax = hull.pmax.max(e.position);
            hull.vmin = hull.vmin.min(e.value);
            hull.vmax = hull.vmax.max(e.value);
        }
        Ok(hull)
    }

    /// Entries lying in the closed box `hull`, in position order.
    pub fn entries_in_hull(&self, hull: &RectHull) -> Result<Vec<EntryRef>> {
        let n = self.len();
        for (what, lo, hi) in [
            ("hull positions", hull.pmin, hull.pmax),
            ("hull values", hull.vmin, hull.vmax),
        ] {
            if lo == 0 || hi > n {
                return Err(Error::OutOfRange {
                    what,
                    value: if lo == 0 { lo } else { hi },
                    max: n,
                });
            }
            if lo > hi {
                return Err(Error::BadArguments(format!("{what}: {lo} > {hi}")));
            }
        }
        Ok((hull.pmin..=hull.pmax)
            .map(|p| EntryRef {
                position: p,
                value: self.value_at(p),
            })
            .filter(|e| hull.contains(*e))
            .collect())
    }
}

/// Replaces distinct numbers by their ranks `1..=len`.
fn rank_reduce(xs: &[u32]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_unstable_by_key(|&i| xs[i]);
    let mut out = vec![0u32; xs.len()];
    for (rank, i) in order.into_iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_sequence(&v)
    }
}

/// Accepts `"2 4 1 3"`, `"2,4,1,3"` (any mix of commas and whitespace) and the
/// compact digit form `"2413"` for lengths up to 9.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let is_sep = |c: char| c == ',' || c.is_whitespace();
        let trimmed = text.trim_matches(is_sep);
        if trimmed.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty input".into(),
            });
        }
        let offset = text.len() - text.trim_start_matches(is_sep).len();

        if let Some((i, c)) = trimmed
            .char_indices()
            .find(|&(_, c)| !(c.is_ascii_digit() || is_sep(c)))
        {
            return Err(Error::Parse {
                position: offset + i,
                message: format!("unexpected character {c:?}"),
            });
        }

        let seq: Vec<usize> = if trimmed.contains(is_sep) {
            let mut seq = Vec::new();
            for (start, tok) in tokens(trimmed, is_sep) {
                if tok.is_empty() {
                    return Err(Error::Parse {
                        position: offset + start,
                        message: "empty entry between separators".into(),
                    });
                }
                let v = tok.parse::<usize>().map_err(|e| Error::Parse {
                    position: offset + start,
                    message: e.to_string(),
                })?;
                seq.push(v);
            }
            seq
        } else if trimmed.len() <= 9 {
            trimmed.bytes().map(|b| (b - b'0') as usize).collect()
        } else {
            return Err(Error::Parse {
                position: offset,
                message: "compact digit form is only accepted for length at most 9".into(),
            });
        };
        Permutation::from_sequence(&seq)
    }
}

/// Splits on runs of whitespace, with at most one comma per run.
fn tokens(s: &str, is_sep: impl Fn(char) -> bool) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut commas = 0;
    let mut in_sep = false;
    for (i, c) in s.char_indices() {
        if is_sep(c) {
            if !in_sep {
                out.push((start, &s[start..i]));
                in_sep = true;
                commas = 0;
            }
            if c == ',' {
                commas += 1;
                if commas > 1 {
                    out.push((i, ""));
                }
            }
        } else if in_sep {
            in_sep = false;
            start = i;
        }
    }
    out.push((start, &s[start..]));
    out
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of the dihedral group of the square acting on plots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    Identity,
    Reverse,
    Complement,
    ReverseComplement,
    Inverse,
    InverseReverse,
    InverseComplement,
    InverseReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
        Symmetry::Inverse,
        Symmetry::InverseReverse,
        Symmetry::InverseComplement,
        Symmetry::InverseReverseComplement,
    ];

    // (swap axes, flip positions, flip values), applied in that order.
    fn flags(self) -> (bool, bool, bool) {
        use Symmetry::*;
        match self {
            Identity => (false, false, false),
            Reverse => (false, true, false),
            Complement => (false, false, true),
            ReverseComplement => (false, true, true),
            Inverse => (true, false, false),
            InverseReverse => (true, true, false),
            InverseComplement => (true, false, true),
            InverseReverseComplement => (true, true, true),
        }
    }

    fn from_flags(flags: (bool, bool, bool)) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|s| s.flags() == flags)
            .expect("all eight flag combinations are named")
    }

    pub fn name(self) -> &'static str {
        use Symmetry::*;
        match self {
            Identity => "identity",
            Reverse => "reverse",
            Complement => "complement",
            ReverseComplement => "reverse-complement",
            Inverse => "inverse",
            InverseReverse => "inverse-reverse",
            InverseComplement => "inverse-complement",
            InverseReverseComplement => "inverse-reverse-complement",
        }
    }

    /// Image of the point `e` of a length-`n` plot.
    pub fn map_entry(self, n: usize, e: EntryRef) -> EntryRef {
        let (swap, flip_p, flip_v) = self.flags();
        let (mut p, mut v) = if swap {
            (e.value, e.position)
        } else {
            (e.position, e.value)
        };
        if flip_p {
            p = n + 1 - p;
        }
        if flip_v {
            v = n + 1 - v;
        }
        EntryRef { position: p, value: v }
    }

    /// `self` followed by `then`.
    pub fn compose(self, then: Symmetry) -> Symmetry {
        let (s_swap, s_fp, s_fv) = self.flags();
        let (t_swap, t_fp, t_fv) = then.flags();
        // A swap in `then` exchanges the axes that `self` flipped.
        let (fp, fv) = if t_swap { (s_fv, s_fp) } else { (s_fp, s_fv) };
        Symmetry::from_flags((s_swap ^ t_swap, fp ^ t_fp, fv ^ t_fv))
    }

    pub fn inverse(self) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|&t| self.compose(t) == Symmetry::Identity)
            .expect("group elements have inverses")
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symmetry::ALL
            .into_iter()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::BadArguments(format!("unknown symmetry {s:?}")))
    }
}

impl Serialize for Symmetry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
