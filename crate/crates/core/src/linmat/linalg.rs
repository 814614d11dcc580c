use crate::coeff::Scalar;
use crate::error::Result;

/// Row echelon form in place; returns the pivot columns.
fn echelon(rows: &mut [Vec<Scalar>]) -> Result<Vec<usize>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse()?;
        for x in rows[r].iter_mut() {
            *x = x.checked_mul(&inv)?;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for k in 0..ncols {
                    let d = factor.checked_mul(&rows[r][k])?;
                    rows[i][k] = rows[i][k].checked_sub(&d)?;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank(rows: &[Vec<Scalar>]) -> Result<usize> {
    let mut rows = rows.to_vec();
    Ok(echelon(&mut rows)?.len())
}

/// A basis of { v : M v = 0 }.
pub fn kernel(rows: &[Vec<Scalar>], ncols: usize) -> Result<Vec<Vec<Scalar>>> {
    let mut rows = rows.to_vec();
    let pivots = echelon(&mut rows)?;
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&rows[r][free];
        }
        basis.push(v);
    }
    Ok(basis)
}
