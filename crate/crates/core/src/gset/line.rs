//! Aut(ℚ, <) acting on increasing tuples ℚ^(n).
//!
//! Maps are increasing selections; orbits of ℚ^(n) × ℚ^(m) are merge words
//! over {L, B, R}, where B marks a coincidence. Their number is the Delannoy
//! number D(n, m).

use super::{Atom, FactorStep, FiberClass, Letter, OrbitLabel};

pub(super) fn increasing(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Merge words with `n` left and `m` right letters, ordered with L < B < R.
pub(super) fn merge_words(n: usize, m: usize) -> Vec<Vec<Letter>> {
    fn go(l: usize, r: usize, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if l == 0 && r == 0 {
            out.push(cur.clone());
            return;
        }
        if l > 0 {
            cur.push(Letter::L);
            go(l - 1, r, cur, out);
            cur.pop();
        }
        if l > 0 && r > 0 {
            cur.push(Letter::B);
            go(l - 1, r - 1, cur, out);
            cur.pop();
        }
        if r > 0 {
            cur.push(Letter::R);
            go(l, r - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, &mut Vec::new(), &mut out);
    out
}

/// Merge words of ℚ^(n) × ℚ^(m) over the diagonal of ℚ^(k): left coordinate
/// f[i] coincides with right coordinate g[i], and no other coincidences are forced.
pub(super) fn fiber_words(n: usize, m: usize, f: &[usize], g: &[usize]) -> Vec<Vec<Letter>> {
    let mut tag_left = vec![None; n];
    let mut tag_right = vec![None; m];
    for (k, (&i, &j)) in f.iter().zip(g).enumerate() {
        tag_left[i] = Some(k);
        tag_right[j] = Some(k);
    }
    fn go(
        i: usize,
        j: usize,
        tl: &[Option<usize>],
        tr: &[Option<usize>],
        cur: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        let (n, m) = (tl.len(), tr.len());
        if i == n && j == m {
            out.push(cur.clone());
            return;
        }
        if i < n && tl[i].is_none() {
            cur.push(Letter::L);
            go(i + 1, j, tl, tr, cur, out);
            cur.pop();
        }
        if i < n && j < m && tl[i] == tr[j] {
            cur.push(Letter::B);
            go(i + 1, j + 1, tl, tr, cur, out);
            cur.pop();
        }
        if j < m && tr[j].is_none() {
            cur.push(Letter::R);
            go(i, j + 1, tl, tr, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, &tag_left, &tag_right, &mut Vec::new(), &mut out);
    out
}

pub(super) fn swap_word(word: &[Letter]) -> Vec<Letter> {
    word.iter()
        .map(|l| match l {
            Letter::L => Letter::R,
            Letter::B => Letter::B,
            Letter::R => Letter::L,
        })
        .collect()
}

pub(super) fn projections(word: &[Letter]) -> (Vec<usize>, Vec<usize>) {
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for (pos, l) in word.iter().enumerate() {
        if matches!(l, Letter::L | Letter::B) {
            p1.push(pos);
        }
        if matches!(l, Letter::R | Letter::B) {
            p2.push(pos);
        }
    }
    (p1, p2)
}

pub(super) fn pair_into(f: &[usize], g: &[usize]) -> (OrbitLabel, Vec<usize>) {
    let (mut i, mut j) = (0, 0);
    let mut word = Vec::new();
    let mut coords = Vec::new();
    while i < f.len() || j < g.len() {
        let take_left = j == g.len() || (i < f.len() && f[i] < g[j]);
        let take_right = i == f.len() || (j < g.len() && g[j] < f[i]);
        if take_left {
            word.push(Letter::L);
            coords.push(f[i]);
            i += 1;
        } else if take_right {
            word.push(Letter::R);
            coords.push(g[j]);
            j += 1;
        } else {
            word.push(Letter::B);
            coords.push(f[i]);
            i += 1;
            j += 1;
        }
    }
    (OrbitLabel::Word(word), coords)
}

/// Drops unselected coordinates from the highest index down.
pub(super) fn factorize(n: usize, select: &[usize]) -> Vec<FactorStep> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut steps = Vec::new();
    for c in (0..n).rev() {
        if select.contains(&c) {
            continue;
        }
        current.retain(|&x| x != c);
        let below = current.iter().any(|&x| x < c);
        let above = current.iter().any(|&x| x > c);
        let fiber = if below && above { FiberClass::Interval } else { FiberClass::Ray };
        steps.push(FactorStep { source: Atom::Line(current.len() + 1), target: Atom::Line(current.len()), fiber });
    }
    steps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fiber_words_pin_coincidences() {
        assert_eq!(fiber_words(1, 1, &[], &[]).len(), 3);
        let w = fiber_words(2, 2, &[0], &[0]);
        assert_eq!(w.len(), 3);
        assert!(w.iter().all(|w| w[0] == Letter::B));
        assert!(fiber_words(2, 2, &[0], &[1]).iter().all(|w| w.contains(&Letter::B)));
    }

    #[test]
    fn delannoy_counts() {
        assert_eq!(merge_words(1, 1).len(), 3);
        assert_eq!(merge_words(2, 2).len(), 13);
        assert_eq!(merge_words(3, 3).len(), 63);
    }

    #[test]
    fn words_are_sorted() {
        let w = merge_words(1, 1);
        assert_eq!(w, vec![vec![Letter::L, Letter::R], vec![Letter::B], vec![Letter::R, Letter::L]]);
    }

    #[test]
    fn fiber_classes_of_drops() {
        assert_eq!(factorize(2, &[0])[0].fiber, FiberClass::Ray);
        assert_eq!(factorize(3, &[0, 2])[0].fiber, FiberClass::Interval);
        assert_eq!(factorize(1, &[])[0].fiber, FiberClass::Ray);
    }
}
