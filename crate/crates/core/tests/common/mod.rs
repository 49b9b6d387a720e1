//! Independent oracles shared by the integration tests. Nothing here calls
//! the scanning or generation code it is used to check.

#![allow(dead_code)]

use simperm::Permutation;

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// All permutations of length `n` by recursive insertion of the largest
/// value, sorted.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    fn grow(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![1]];
        }
        let mut out = Vec::new();
        for p in grow(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n);
                out.push(q);
            }
        }
        out
    }
    let mut v: Vec<Permutation> = grow(n)
        .into_iter()
        .map(|s| Permutation::from_sequence(&s).unwrap())
        .collect();
    v.sort();
    v
}

/// Window test by sorting the window's values.
pub fn window_is_interval(p: &Permutation, i: usize, j: usize) -> bool {
    let mut w: Vec<usize> = (i..=j).map(|k| p.value_at(k)).collect();
    w.sort_unstable();
    w.windows(2).all(|x| x[1] == x[0] + 1)
}

/// Nontrivial intervals by sorting each window, lexicographic.
pub fn intervals_oracle(p: &Permutation) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let len = j - i + 1;
            if len < n && window_is_interval(p, i, j) {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn simple_oracle(p: &Permutation) -> bool {
    intervals_oracle(p).is_empty()
}

/// Entry-set definition: the set of positions `mask` is an interval when its
/// positions and its values each form a run of consecutive integers.
pub fn set_is_interval(p: &Permutation, mask: u32) -> bool {
    let pos: Vec<usize> = (1..=p.len()).filter(|k| mask >> (k - 1) & 1 == 1).collect();
    let mut vals: Vec<usize> = pos.iter().map(|&k| p.value_at(k)).collect();
    vals.sort_unstable();
    pos.windows(2).all(|x| x[1] == x[0] + 1) && vals.windows(2).all(|x| x[1] == x[0] + 1)
}

/// Parallel alternation by trying every balanced bipartition of the
/// entries: both parts monotone in the same direction, separated by a
/// horizontal or vertical line, and alternating along the other axis.
pub fn pa_oracle(p: &Permutation) -> bool {
    let n = p.len();
    if n % 2 == 1 {
        return false;
    }
    let half = n / 2;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != half {
            continue;
        }
        let part = |bit: u32| -> Vec<(usize, usize)> {
            (1..=n)
                .filter(|k| (mask >> (k - 1) & 1) == bit)
                .map(|k| (k, p.value_at(k)))
                .collect()
        };
        let (a, b) = (part(1), part(0));
        let inc = |s: &[(usize, usize)]| s.windows(2).all(|w| w[0].1 < w[1].1);
        let dec = |s: &[(usize, usize)]| s.windows(2).all(|w| w[0].1 > w[1].1);
        if !((inc(&a) && inc(&b)) || (dec(&a) && dec(&b))) {
            continue;
        }
        let max_v = |s: &[(usize, usize)]| s.iter().map(|e| e.1).max().unwrap();
        let min_v = |s: &[(usize, usize)]| s.iter().map(|e| e.1).min().unwrap();
        let max_p = |s: &[(usize, usize)]| s.iter().map(|e| e.0).max().unwrap();
        let min_p = |s: &[(usize, usize)]| s.iter().map(|e| e.0).min().unwrap();
        let in_a = |k: usize| mask >> (k - 1) & 1 == 1;
        let horizontal_line = max_v(&a) < min_v(&b) || max_v(&b) < min_v(&a);
        let vertical_line = max_p(&a) < min_p(&b) || max_p(&b) < min_p(&a);
        let positions_alternate = (1..n).all(|k| in_a(k) != in_a(k + 1));
        let inv = p.inverse();
        let values_alternate = (1..n).all(|v| in_a(inv.value_at(v)) != in_a(inv.value_at(v + 1)));
        if (horizontal_line && positions_alternate) || (vertical_line && values_alternate) {
            return true;
        }
    }
    false
}

/// Pattern of the chosen positions by pairwise comparison.
pub fn pattern_oracle(p: &Permutation, positions: &[usize]) -> Vec<usize> {
    positions
        .iter()
        .map(|&a| 1 + positions.iter().filter(|&&b| p.value_at(b) < p.value_at(a)).count())
        .collect()
}

pub fn inessential_positions_oracle(p: &Permutation) -> Vec<usize> {
    (1..=p.len())
        .filter(|&k| {
            let rest: Vec<usize> = (1..=p.len()).filter(|&q| q != k).collect();
            let pat = pattern_oracle(p, &rest);
            simple_oracle(&Permutation::from_sequence(&pat).unwrap())
        })
        .collect()
}
