//! Idempotents of Γ(B ⊗ B) encoding equivalence relations, and the subalgebras
//! they cut out.

use serde::Serialize;

use super::{build_frobenius, build_on, FrobeniusStructure};
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::gset::{fiber_product, GMap, GObject, MapPattern, OrbitLabel, Product};
use crate::linmat::{kernel, rank, InvariantMatrix};
use crate::permcat::{record_equal, PermCat, PermMorphism, PermObject};
use crate::report::{Check, Report, Witness};

#[derive(Clone, Debug, Serialize)]
pub struct EIdempotent {
    pub ambient: FrobeniusStructure,
    /// An invariant function on B × B, as a map 1 → B ⊗ B.
    pub gamma: PermMorphism,
}

impl EIdempotent {
    /// γ = α, the finest relation; B^γ = B.
    pub fn diagonal(cat: &PermCat, b: &GObject) -> Result<Self> {
        let ambient = build_frobenius(cat, b)?;
        let gamma = ambient.splitting(cat)?;
        Ok(EIdempotent { ambient, gamma })
    }

    /// γ = 1, the coarsest relation; B^γ is the unit.
    pub fn everything(cat: &PermCat, b: &GObject) -> Result<Self> {
        let ambient = build_frobenius(cat, b)?;
        let gamma = build_on(cat, &ambient.carrier.tensor(&ambient.carrier))?.unit;
        Ok(EIdempotent { ambient, gamma })
    }
}

fn pointwise(f: &PermMorphism, g: &PermMorphism) -> Result<PermMorphism> {
    Ok(PermMorphism { matrix: f.matrix.hadamard(&g.matrix)?, ..f.clone() })
}

/// γ·γ = γ, α·γ = α, τ(γ) = γ and γ₁₂γ₂₃ = γ₁₂γ₁₃ = γ₁₃γ₂₃.
pub fn e_idempotent_check(cat: &PermCat, e: &EIdempotent) -> Result<Report> {
    let b = &e.ambient.carrier;
    let g = &e.gamma;
    let alpha = e.ambient.splitting(cat)?;
    let mut report = Report::new();

    let mut check = Check::new("idempotent");
    record_equal(&mut check, "gamma gamma = gamma", pointwise(g, g), Ok(g.clone()));
    report.push(check);

    let mut check = Check::new("contains the diagonal");
    record_equal(&mut check, "alpha gamma = alpha", pointwise(&alpha, g), Ok(alpha.clone()));
    report.push(check);

    let mut check = Check::new("symmetric");
    record_equal(&mut check, "tau gamma = gamma", cat.compose(&cat.symmetry(b, b)?, g), Ok(g.clone()));
    report.push(check);

    let n = b.factors().len();
    let eta = &e.ambient.unit;
    let g12 = cat.tensor(g, eta)?;
    let g23 = cat.tensor(eta, g)?;
    let bbb = b.power(3);
    let swap23: Vec<usize> = (0..n).chain(2 * n..3 * n).chain(n..2 * n).collect();
    let ident: Vec<usize> = (0..3 * n).collect();
    let g13 = cat.compose(&cat.wiring(&bbb, &swap23, &bbb, &ident)?, &g12)?;
    let mut check = Check::new("transitive");
    let first = pointwise(&g12, &g23);
    record_equal(&mut check, "gamma_12 gamma_23 = gamma_12 gamma_13", first.clone(), pointwise(&g12, &g13));
    record_equal(&mut check, "gamma_12 gamma_23 = gamma_13 gamma_23", first, pointwise(&g13, &g23));
    report.push(check);
    Ok(report)
}

/// γ on B ⊗ B from values on orbits of B_i × B_j, positions 0-based.
pub fn gamma_from_orbits(cat: &PermCat, b: &GObject, entries: &[(usize, usize, OrbitLabel, Scalar)]) -> Result<EIdempotent> {
    let bk = cat.backend;
    let p = Product::of(bk, &[b, b]);
    let one = GObject::atom(bk.terminal());
    let mut gamma = InvariantMatrix::zero(p.object.clone(), one);
    for (i, j, label, v) in entries {
        let (x, y) = match (b.atoms().get(*i), b.atoms().get(*j)) {
            (Some(&x), Some(&y)) => (x, y),
            _ => return Err(Error::ShapeMismatch(format!("atom position out of range in {b}"))),
        };
        if bk.product(x, y).position(label).is_none() {
            return Err(Error::Parse(format!("{label} is not an orbit of {x} x {y}")));
        }
        let o = bk.orbit(x, y, label);
        let (pos, iso) = p.locate(bk, o.atom, &[(*i, o.proj1.clone()), (*j, o.proj2.clone())]);
        gamma.set(unit_key(cat, &p, pos, &iso, o.atom), v.clone());
    }
    let ambient = build_frobenius(cat, b)?;
    let bb = ambient.carrier.tensor(&ambient.carrier);
    let gamma = cat.morphism(&PermObject::unit(), &bb, gamma)?;
    Ok(EIdempotent { ambient, gamma })
}

fn unit_key(cat: &PermCat, p: &Product, pos: usize, iso: &MapPattern, w: crate::gset::Atom) -> crate::linmat::OrbitKey {
    let bk = cat.backend;
    let (label, _) = bk.pair_label(iso, p.object.atoms()[pos], &bk.to_terminal(w), bk.terminal());
    (pos, 0, label)
}

/// The kernel pair of a surjection f: Y → X as an E-idempotent on Vec_Y, with
/// the checks tying it back to f.
pub fn gamma_of_projection(cat: &PermCat, f: &GMap) -> Result<(EIdempotent, Report)> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective(f.to_string()));
    }
    let bk = cat.backend;
    let (k, p1, p2) = fiber_product(bk, f, f)?;
    let p = Product::of(bk, &[&f.source, &f.source]);
    let mut gamma = InvariantMatrix::zero(p.object.clone(), GObject::atom(bk.terminal()));
    for (pos, &w) in k.atoms().iter().enumerate() {
        let (q, iso) = p.locate(bk, w, &[p1.assign[pos].clone(), p2.assign[pos].clone()]);
        gamma.set(unit_key(cat, &p, q, &iso, w), Scalar::one());
    }
    let ambient = build_frobenius(cat, &f.source)?;
    let yy = ambient.carrier.tensor(&ambient.carrier);
    let e = EIdempotent { gamma: cat.morphism(&PermObject::unit(), &yy, gamma)?, ambient };

    let mut report = e_idempotent_check(cat, &e)?;
    let mut check = Check::new("pullback of the splitting idempotent");
    let alpha_x = build_frobenius(cat, &f.target)?.splitting(cat)?;
    let bf = cat.pullback(f);
    record_equal(&mut check, "(f x f)^* alpha_X = gamma", cat.tensor(&bf, &bf).and_then(|t| cat.compose(&t, &alpha_x)), Ok(e.gamma.clone()));
    report.push(check);
    if bk.group().is_some() {
        report.push(invariant_subalgebra(cat, f, &e)?);
    }
    Ok((e, report))
}

/// Finite groups only: B^γ = ker(x ↦ γ·(x⊗1 − 1⊗x)) on all functions on Y,
/// compared with f^*(k[X]).
fn invariant_subalgebra(cat: &PermCat, f: &GMap, e: &EIdempotent) -> Result<Check> {
    let bk = cat.backend;
    let points = |x: &GObject| -> Vec<(usize, usize)> {
        x.atoms().iter().enumerate().flat_map(|(i, &a)| (0..bk.size(a)).map(move |c| (i, c))).collect()
    };
    let (ys, xs) = (points(&f.source), points(&f.target));
    let p = Product::of(bk, &[&f.source, &f.source]);
    let unit = (0, MapPattern::Point(0));
    let mut rows = Vec::new();
    for &(j1, c1) in &ys {
        for &(j2, c2) in &ys {
            let at = p.locate(bk, bk.terminal(), &[(j1, MapPattern::Point(c1)), (j2, MapPattern::Point(c2))]);
            let g = e.gamma.matrix.at(bk, &at, &unit);
            if g.is_zero() || (j1, c1) == (j2, c2) {
                continue;
            }
            let row: Vec<Scalar> = ys
                .iter()
                .map(|&y| if y == (j1, c1) { g.clone() } else if y == (j2, c2) { -&g } else { Scalar::zero() })
                .collect();
            rows.push(row);
        }
    }
    let fixed = kernel(&rows, ys.len())?;
    let image = |&(j, c): &(usize, usize)| -> (usize, usize) {
        let (i, q) = &f.assign[j];
        match bk.then(&MapPattern::Point(c), f.source.atoms()[j], q, f.target.atoms()[*i]) {
            MapPattern::Point(x) => (*i, x),
            MapPattern::Select(_) => unreachable!("finite maps are points"),
        }
    };
    let pulled: Vec<Vec<Scalar>> = xs
        .iter()
        .map(|x| ys.iter().map(|y| if image(y) == *x { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    let joint = rank(&fixed.iter().chain(&pulled).cloned().collect::<Vec<_>>())?;
    let mut check = Check::new("B^gamma = f^*(k[X])");
    check.record(fixed.len() == xs.len() && joint == xs.len(), || {
        Witness::new(format!("dim B^gamma = |X| for {f}"), fixed.len(), xs.len()).with_labels(vec![format!("joint rank {joint}")])
    });
    Ok(check.note(format!("dim B^gamma = {}", fixed.len())))
}
