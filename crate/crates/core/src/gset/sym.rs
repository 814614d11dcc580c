//! The infinite symmetric group restricted to the class of sets Ω^[n].
//!
//! A map Ω^[n] → Ω^[m] is coordinate selection by an injection [m] ↪ [n],
//! stored as the vector of selected source coordinates. Orbits of
//! Ω^[n] × Ω^[m] are partial injective matchings between the coordinates.

use super::{FactorStep, FiberClass, OrbitLabel};

pub(super) fn injections(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, m: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, m, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    if m <= n {
        go(n, m, &mut Vec::new(), &mut vec![false; n], &mut out);
    }
    out
}

/// Partial injective matchings [n] ⇀ [m] as sorted pair lists, in lexicographic order.
pub(super) fn matchings(n: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(i: usize, n: usize, m: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        go(i + 1, n, m, used, cur, out);
        for j in 0..m {
            if !used[j] {
                used[j] = true;
                cur.push((i, j));
                go(i + 1, n, m, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut vec![false; m], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Orbit arity and both projections for a matching of Ω^[n] × Ω^[m].
///
/// The orbit's coordinates are the n coordinates of the first factor followed
/// by the unmatched coordinates of the second, in increasing order.
pub(super) fn orbit_of_matching(n: usize, m: usize, matching: &[(usize, usize)]) -> (usize, Vec<usize>, Vec<usize>) {
    let proj1: Vec<usize> = (0..n).collect();
    let mut proj2 = vec![usize::MAX; m];
    for &(i, j) in matching {
        proj2[j] = i;
    }
    let mut next = n;
    for slot in proj2.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    (next, proj1, proj2)
}

/// Classifies the image of Ω^[k] under (f, g) in Ω^[n] × Ω^[m].
pub(super) fn pair_into(f: &[usize], g: &[usize]) -> (OrbitLabel, Vec<usize>) {
    let mut matching = Vec::new();
    for (i, x) in f.iter().enumerate() {
        if let Some(j) = g.iter().position(|y| y == x) {
            matching.push((i, j));
        }
    }
    let mut coords = f.to_vec();
    for y in g {
        if !f.contains(y) {
            coords.push(*y);
        }
    }
    (OrbitLabel::Matching(matching), coords)
}

/// Matchings of Ω^[n] × Ω^[m] whose orbits lie over the diagonal of Ω^[k]
/// under selections `f` and `g`: all pairs (f[i], g[i]) plus any matching of
/// the remaining coordinates.
pub(super) fn fiber_matchings(n: usize, m: usize, f: &[usize], g: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let forced: Vec<(usize, usize)> = f.iter().copied().zip(g.iter().copied()).collect();
    let free_left: Vec<usize> = (0..n).filter(|i| !f.contains(i)).collect();
    let free_right: Vec<usize> = (0..m).filter(|j| !g.contains(j)).collect();
    matchings(free_left.len(), free_right.len())
        .into_iter()
        .map(|extra| {
            let mut mt = forced.clone();
            mt.extend(extra.into_iter().map(|(i, j)| (free_left[i], free_right[j])));
            mt.sort();
            mt
        })
        .collect()
}

/// The matching with first and second factors exchanged.
pub(super) fn swap_matching(matching: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = matching.iter().map(|&(i, j)| (j, i)).collect();
    out.sort();
    out
}

pub(super) fn factorize(n: usize, m: usize) -> Vec<FactorStep> {
    use super::Atom;
    (m + 1..=n)
        .rev()
        .map(|k| FactorStep { source: Atom::Sym(k), target: Atom::Sym(k - 1), fiber: FiberClass::OmegaMinus(k - 1) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        // sum_k C(n,k) C(m,k) k!
        assert_eq!(matchings(1, 1).len(), 2);
        assert_eq!(matchings(2, 2).len(), 7);
        assert_eq!(matchings(3, 3).len(), 34);
        assert_eq!(matchings(2, 0).len(), 1);
    }

    #[test]
    fn fiber_matchings_over_a_point() {
        assert_eq!(fiber_matchings(2, 2, &[], &[]).len(), 7);
        // Ω^[2] ×_Ω Ω^[2] along the first coordinates: {x0=y0} plus maybe x1=y1
        assert_eq!(fiber_matchings(2, 2, &[0], &[0]), vec![vec![(0, 0)], vec![(0, 0), (1, 1)]]);
    }

    #[test]
    fn injection_counts() {
        assert_eq!(injections(2, 1).len(), 2);
        assert_eq!(injections(1, 2).len(), 0);
        assert_eq!(injections(4, 2).len(), 12);
    }

    #[test]
    fn orbit_coordinates() {
        let (k, p1, p2) = orbit_of_matching(2, 2, &[(1, 0)]);
        assert_eq!(k, 3);
        assert_eq!(p1, vec![0, 1]);
        assert_eq!(p2, vec![1, 2]);
    }
}
