//! Finds every measure on a bounded fragment.
//!
//! Fiber classes are the unknowns. Their cut-at-a-point relations are linear
//! and are solved exactly; atom values then follow from fiber chains, and the
//! product and path-independence identities are substituted as residuals.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{identities, Measure};
use crate::coeff::{Field, Poly, Ring, Scalar};
use crate::error::{Error, Result};
use crate::gset::{Atom, Backend, BackendId, FiberClass};

#[derive(Clone, Debug, Serialize)]
pub struct MeasureFamily {
    pub backend: BackendId,
    pub field: Field,
    pub params: Vec<char>,
    #[serde(serialize_with = "pairs")]
    pub atoms: BTreeMap<Atom, Scalar>,
    #[serde(serialize_with = "pairs")]
    pub fibers: BTreeMap<FiberClass, Scalar>,
    /// Polynomials in the parameter that must vanish; empty for a free family.
    pub residual: Vec<Scalar>,
    /// Rational roots of the residual, when it is nonempty.
    #[serde(serialize_with = "rationals")]
    pub solutions: Vec<BigRational>,
}

fn pairs<K: Serialize, S: serde::Serializer>(m: &BTreeMap<K, Scalar>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter())
}

fn rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

impl MeasureFamily {
    pub fn generic_measure(&self, backend: &Backend) -> Measure {
        let mut m = Measure::new(backend, self.field);
        m.atoms = self.atoms.clone();
        m.fibers = self.fibers.clone();
        m
    }

    /// Sets the parameter to `value`.
    pub fn specialize(&self, backend: &Backend, value: &BigRational) -> Result<Measure> {
        if self.params.is_empty() {
            return Ok(self.generic_measure(backend));
        }
        let sub = |v: &Scalar| match self.field {
            Field::RatFuncQ(_) => v.evaluate_at(value),
            _ => v.substitute(value),
        };
        let field = match self.field {
            Field::RatFuncQ(_) => Field::Rational,
            f => f,
        };
        let mut m = Measure::new(backend, field);
        for (a, v) in &self.atoms {
            m.set_atom(*a, sub(v)?);
        }
        for (c, v) in &self.fibers {
            m.set_fiber(*c, sub(v)?);
        }
        Ok(m)
    }

    pub fn is_free(&self) -> bool {
        self.residual.is_empty()
    }
}

/// Fiber classes met by maps among atoms within bound and their pairwise products.
fn fiber_classes(backend: &Backend, bound: usize) -> BTreeSet<FiberClass> {
    let atoms = backend.atoms_up_to(bound);
    let mut sources: BTreeSet<Atom> = atoms.iter().copied().collect();
    for &a in &atoms {
        for &b in &atoms {
            sources.extend(backend.product(a, b).orbits.iter().map(|o| o.atom));
        }
    }
    let mut classes = BTreeSet::new();
    for &a in &sources {
        let targets = if backend.group().is_some() { backend.atoms_up_to(usize::MAX) } else { atoms.clone() };
        for b in targets {
            for f in backend.hom(a, b) {
                if let Ok(steps) = backend.factorize(a, b, &f) {
                    classes.extend(steps.into_iter().map(|s| s.fiber));
                }
            }
        }
    }
    classes
}

/// Reduced row echelon form; pivots are chosen from the last column backwards
/// so that the smallest classes stay free.
fn solve_linear(rows: Vec<Vec<BigRational>>, n: usize) -> Result<(Vec<Option<usize>>, Vec<Vec<BigRational>>)> {
    let mut rows = rows;
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut r = 0;
    for col in (0..n).rev() {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &factor * y;
                }
            }
        }
        pivot_of_col[col] = Some(r);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Err(Error::Inconsistent { bound: 0, reason: "fiber relations have no solution".into() });
    }
    Ok((pivot_of_col, rows))
}

fn roots(p: &Poly, ring: Ring) -> Vec<BigRational> {
    match ring {
        Ring::Q => p.rational_roots(),
        Ring::Fp(q) if q <= 10_000 => (0..q)
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .filter(|x| p.eval(x, ring).is_zero())
            .collect(),
        Ring::Fp(_) => Vec::new(),
    }
}

pub fn solve_measures(backend: &Backend, bound: usize, field: Field) -> Result<MeasureFamily> {
    let inconsistent = |reason: String| Error::Inconsistent { bound, reason };
    let classes: Vec<FiberClass> = fiber_classes(backend, bound).into_iter().collect();
    let col: BTreeMap<FiberClass, usize> = classes.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let n = classes.len();
    let mut rows = Vec::new();
    for &c in &classes {
        for rel in backend.fiber_relations(c) {
            if rel.parts.iter().any(|p| !col.contains_key(p)) {
                continue;
            }
            let mut row = vec![BigRational::zero(); n + 1];
            row[col[&c]] += BigRational::one();
            for p in &rel.parts {
                row[col[p]] -= BigRational::one();
            }
            row[n] = BigRational::from_integer(BigInt::from(rel.points));
            rows.push(row);
        }
    }
    let (pivots, rows) = if rows.is_empty() {
        (vec![None; n], rows)
    } else {
        solve_linear(rows, n).map_err(|_| inconsistent("fiber relations have no solution".into()))?
    };
    let free: Vec<usize> = (0..n).filter(|&j| pivots[j].is_none()).collect();
    if free.len() > 1 {
        return Err(Error::TooManyParameters(free.len()));
    }
    let field = match (free.is_empty(), field) {
        (false, Field::Rational) => Field::RatFuncQ('a'),
        (_, f) => f,
    };
    let param = field.var();
    let mut values: Vec<Scalar> = vec![Scalar::zero(); n];
    for &j in &free {
        values[j] = Scalar::var(field);
    }
    for j in 0..n {
        if let Some(r) = pivots[j] {
            let mut v = Scalar::rational(rows[r][n].clone());
            for &k in &free {
                v = v.checked_sub(&Scalar::rational(rows[r][k].clone()).checked_mul(&values[k])?)?;
            }
            values[j] = v.in_field(field).unwrap_or(v);
        }
    }

    let mut m = Measure::new(backend, field);
    for (c, v) in classes.iter().zip(values) {
        m.set_fiber(*c, v);
    }
    for a in backend.atoms_up_to(bound) {
        let v = m.mu_atom(backend, a)?;
        m.set_atom(a, v);
    }

    let mut residual_polys: Vec<Poly> = Vec::new();
    for id in identities(backend, &m, bound)? {
        let r = id.residual();
        if !r.is_zero() {
            if free.is_empty() {
                return Err(inconsistent(format!("{} fails: {} vs {}", id.description, id.lhs, id.rhs())));
            }
            residual_polys.push(r.numer().clone());
        }
    }
    let ring = field.ring();
    let (residual, solutions) = if residual_polys.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let g = residual_polys.iter().fold(Poly::zero(), |acc, p| acc.gcd(p, ring));
        if g.is_constant() {
            return Err(inconsistent("residual constraints have no common root".into()));
        }
        let sols = roots(&g, ring);
        (vec![Scalar::from_poly(field, g)], sols)
    };
    Ok(MeasureFamily {
        backend: backend.id(),
        field,
        params: if free.is_empty() { Vec::new() } else { param.into_iter().collect() },
        atoms: m.atoms,
        fibers: m.fibers,
        residual,
        solutions,
    })
}
