//! Brute-force models used as oracles. The helpers in this file never call
//! into the library; `finite` holds the comparisons against explicit matrices.

#![allow(dead_code)]

pub mod finite;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Injective n-tuples from {0..N}.
pub fn injections(n: usize, big_n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &out {
            for x in 0..big_n {
                if !t.contains(&x) {
                    let mut u = t.clone();
                    u.push(x);
                    next.push(u);
                }
            }
        }
        out = next;
    }
    out
}

/// Strictly increasing n-tuples from {0..N}.
pub fn increasing(n: usize, big_n: usize) -> Vec<Vec<usize>> {
    injections(n, big_n).into_iter().filter(|t| t.windows(2).all(|w| w[0] < w[1])).collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Number of orbits of the group generated by `gens` (permutations of
/// {0..N}) on pairs drawn from `xs` × `ys`, found by union-find.
pub fn pair_orbits(xs: &[Vec<usize>], ys: &[Vec<usize>], gens: &[Vec<usize>]) -> usize {
    use std::collections::HashMap;
    let index: HashMap<(&[usize], &[usize]), usize> = xs
        .iter()
        .flat_map(|x| ys.iter().map(move |y| (x.as_slice(), y.as_slice())))
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    let mut uf = UnionFind((0..index.len()).collect());
    for x in xs {
        for y in ys {
            let here = index[&(x.as_slice(), y.as_slice())];
            for g in gens {
                let gx: Vec<usize> = x.iter().map(|&p| g[p]).collect();
                let gy: Vec<usize> = y.iter().map(|&p| g[p]).collect();
                if let Some(&there) = index.get(&(gx.as_slice(), gy.as_slice())) {
                    uf.union(here, there);
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..index.len()).map(|i| uf.find(i)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Generators of S_N: an N-cycle and a transposition.
pub fn symmetric_generators(big_n: usize) -> Vec<Vec<usize>> {
    let cycle: Vec<usize> = (0..big_n).map(|i| (i + 1) % big_n).collect();
    let mut swap: Vec<usize> = (0..big_n).collect();
    swap.swap(0, 1);
    vec![cycle, swap]
}

/// D(m, n) from D(m, n) = D(m-1, n) + D(m, n-1) + D(m-1, n-1).
pub fn delannoy(m: usize, n: usize) -> u64 {
    let mut d = vec![vec![1u64; n + 1]; m + 1];
    for i in 1..=m {
        for j in 1..=n {
            d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
        }
    }
    d[m][n]
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rank over ℚ by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for k in c..ncols {
                    let sub = &f * &rows[r][k];
                    rows[i][k] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

pub type Mat = Vec<Vec<BigRational>>;

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect()
}

/// Permutation matrix sending basis vector x to basis vector p[x].
pub fn perm_matrix(p: &[usize]) -> Mat {
    let n = p.len();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for (x, &y) in p.iter().enumerate() {
        m[y][x] = BigRational::one();
    }
    m
}

/// dim { M : P_Y(g) M = M P_X(g) for every generator g }, solved as a linear
/// system in the |Y|·|X| unknown entries of M.
pub fn commutant_dim(px: &[Vec<usize>], py: &[Vec<usize>]) -> usize {
    let (nx, ny) = (px[0].len(), py[0].len());
    let unknown = |y: usize, x: usize| y * nx + x;
    let mut rows = Vec::new();
    for (gx, gy) in px.iter().zip(py) {
        // (P_Y M)(gy[y], x) = M(y, x) and (M P_X)(y, gx[x]) = M(y, x): M(gy[y], gx[x]) = M(y, x)
        for y in 0..ny {
            for x in 0..nx {
                let mut row = vec![BigRational::zero(); nx * ny];
                row[unknown(gy[y], gx[x])] += BigRational::one();
                row[unknown(y, x)] -= BigRational::one();
                rows.push(row);
            }
        }
    }
    nx * ny - rank(rows)
}
