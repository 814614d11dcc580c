//! Vec_X as a commutative Frobenius algebra: structure maps, the Frobenius and
//! étale axioms, trace forms, and splitting idempotents.

mod eidem;

use serde::Serialize;

use crate::error::Result;
use crate::gset::GObject;
use crate::permcat::{record_equal, PermCat, PermMorphism, PermObject};
use crate::report::{Check, Report, Witness};

pub use eidem::{e_idempotent_check, gamma_from_orbits, gamma_of_projection, EIdempotent};

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusStructure {
    pub carrier: PermObject,
    pub unit: PermMorphism,
    pub mult: PermMorphism,
    pub counit: PermMorphism,
    pub comult: PermMorphism,
}

/// Pointwise multiplication and its transpose on Vec_X, with the constant
/// function as unit and integration as counit.
pub fn build_frobenius(cat: &PermCat, x: &GObject) -> Result<FrobeniusStructure> {
    build_on(cat, &PermObject::new(x.clone()))
}

/// The same structure on a tensor product of permutation modules.
pub fn build_on(cat: &PermCat, a: &PermObject) -> Result<FrobeniusStructure> {
    let n = a.factors().len();
    let one: Vec<usize> = (0..n).collect();
    let two: Vec<usize> = (0..n).chain(0..n).collect();
    let (aa, unit_obj) = (a.tensor(a), PermObject::unit());
    Ok(FrobeniusStructure {
        carrier: a.clone(),
        unit: cat.wiring(a, &one, &unit_obj, &[])?,
        mult: cat.wiring(a, &one, &aa, &two)?,
        counit: cat.wiring(&unit_obj, &[], a, &one)?,
        comult: cat.wiring(&aa, &two, a, &one)?,
    })
}

impl FrobeniusStructure {
    /// β = ε ∘ μ.
    pub fn trace_pairing(&self, cat: &PermCat) -> Result<PermMorphism> {
        cat.compose(&self.counit, &self.mult)
    }

    /// α = δ ∘ η.
    pub fn splitting(&self, cat: &PermCat) -> Result<PermMorphism> {
        cat.compose(&self.comult, &self.unit)
    }

    /// ev ∘ (μ ⊗ id) ∘ (id ⊗ coev), or the same with the swapped duality data.
    pub fn trace_form(&self, cat: &PermCat, swapped: bool) -> Result<PermMorphism> {
        let a = &self.carrier;
        let (mut coev, mut ev) = cat.duality_data(a)?;
        if swapped {
            let s = cat.symmetry(a, a)?;
            coev = cat.compose(&s, &coev)?;
            ev = cat.compose(&ev, &s)?;
        }
        let id = cat.identity(a);
        cat.chain(&[&ev, &cat.tensor(&self.mult, &id)?, &cat.tensor(&id, &coev)?])
    }
}

/// Algebra, coalgebra, Frobenius compatibility and μ ∘ δ = id.
pub fn verify_frobenius(cat: &PermCat, f: &FrobeniusStructure) -> Report {
    let a = &f.carrier;
    let id = cat.identity(a);
    let t = |x: &PermMorphism, y: &PermMorphism| cat.tensor(x, y);
    let c = |x: Result<PermMorphism>, y: Result<PermMorphism>| -> Result<PermMorphism> { cat.compose(&x?, &y?) };
    let sigma = cat.symmetry(a, a);
    let mut report = Report::new();

    let mut check = Check::new("associativity");
    record_equal(&mut check, "mu (mu x id) = mu (id x mu)", c(Ok(f.mult.clone()), t(&f.mult, &id)), c(Ok(f.mult.clone()), t(&id, &f.mult)));
    report.push(check);

    let mut check = Check::new("commutativity");
    record_equal(&mut check, "mu sigma = mu", c(Ok(f.mult.clone()), sigma.clone()), Ok(f.mult.clone()));
    report.push(check);

    let mut check = Check::new("unit");
    record_equal(&mut check, "mu (eta x id) = id", c(Ok(f.mult.clone()), t(&f.unit, &id)), Ok(id.clone()));
    record_equal(&mut check, "mu (id x eta) = id", c(Ok(f.mult.clone()), t(&id, &f.unit)), Ok(id.clone()));
    report.push(check);

    let mut check = Check::new("coassociativity");
    record_equal(&mut check, "(delta x id) delta = (id x delta) delta", c(t(&f.comult, &id), Ok(f.comult.clone())), c(t(&id, &f.comult), Ok(f.comult.clone())));
    report.push(check);

    let mut check = Check::new("cocommutativity");
    record_equal(&mut check, "sigma delta = delta", c(sigma, Ok(f.comult.clone())), Ok(f.comult.clone()));
    report.push(check);

    let mut check = Check::new("counit");
    record_equal(&mut check, "(eps x id) delta = id", c(t(&f.counit, &id), Ok(f.comult.clone())), Ok(id.clone()));
    record_equal(&mut check, "(id x eps) delta = id", c(t(&id, &f.counit), Ok(f.comult.clone())), Ok(id.clone()));
    report.push(check);

    let mut check = Check::new("frobenius compatibility");
    let middle = c(Ok(f.comult.clone()), Ok(f.mult.clone()));
    record_equal(&mut check, "(id x mu)(delta x id) = delta mu", c(t(&id, &f.mult), t(&f.comult, &id)), middle.clone());
    record_equal(&mut check, "(mu x id)(id x delta) = delta mu", c(t(&f.mult, &id), t(&id, &f.comult)), middle);
    report.push(check);

    let mut check = Check::new("separability");
    record_equal(&mut check, "mu delta = id", c(Ok(f.mult.clone()), Ok(f.comult.clone())), Ok(id));
    report.push(check);
    report
}

/// The trace form equals ε for either choice of duality data, and ε is the
/// transpose of η.
pub fn check_trace_form(cat: &PermCat, f: &FrobeniusStructure) -> Report {
    let mut report = Report::new();
    let mut check = Check::new("trace form is the counit");
    record_equal(&mut check, "ev (mu x id)(id x coev) = eps", f.trace_form(cat, false), Ok(f.counit.clone()));
    record_equal(&mut check, "trace form with swapped duality = eps", f.trace_form(cat, true), Ok(f.counit.clone()));
    report.push(check);
    let mut check = Check::new("counit is the transposed unit");
    let transposed = f.unit.matrix.transpose(cat.backend);
    let same = transposed == f.counit.matrix;
    check.record(same, || {
        let (key, l, r) = transposed.first_difference(&f.counit.matrix).expect("a difference");
        Witness::new("eps = eta transposed", r, l).with_labels(vec![transposed.describe_key(&key)])
    });
    report.push(check);
    report
}

/// The snake identities for β = ε ∘ μ and α = δ ∘ η.
pub fn check_perfect_pairing(cat: &PermCat, f: &FrobeniusStructure) -> Report {
    let id = cat.identity(&f.carrier);
    let mut check = Check::new("perfect pairing");
    let snakes = || -> Result<(PermMorphism, PermMorphism)> {
        let (beta, alpha) = (f.trace_pairing(cat)?, f.splitting(cat)?);
        let left = cat.compose(&cat.tensor(&beta, &id)?, &cat.tensor(&id, &alpha)?)?;
        let right = cat.compose(&cat.tensor(&id, &beta)?, &cat.tensor(&alpha, &id)?)?;
        Ok((left, right))
    };
    match snakes() {
        Ok((left, right)) => {
            record_equal(&mut check, "(beta x id)(id x alpha) = id", Ok(left), Ok(id.clone()));
            record_equal(&mut check, "(id x beta)(alpha x id) = id", Ok(right), Ok(id));
        }
        Err(e) => check.fail(Witness::new("snake identities", e, "a value")),
    }
    let mut report = Report::new();
    report.push(check);
    report
}

/// α = δ(1) with μ(α) = 1, (x ⊗ 1)α = (1 ⊗ x)α, and δ recovered from α.
pub fn splitting_idempotent(cat: &PermCat, f: &FrobeniusStructure) -> Result<(PermMorphism, Report)> {
    let alpha = f.splitting(cat)?;
    let id = cat.identity(&f.carrier);
    let mut report = Report::new();

    let mut check = Check::new("mu(alpha) = 1");
    record_equal(&mut check, "mu alpha = eta", cat.compose(&f.mult, &alpha), Ok(f.unit.clone()));
    report.push(check);

    let mut check = Check::new("alpha is idempotent");
    let square = alpha.matrix.hadamard(&alpha.matrix).map(|m| PermMorphism { matrix: m, ..alpha.clone() });
    record_equal(&mut check, "alpha alpha = alpha", square, Ok(alpha.clone()));
    report.push(check);

    let mut check = Check::new("alpha is balanced");
    let left = cat.tensor(&id, &alpha).and_then(|ia| cat.compose(&cat.tensor(&f.mult, &id)?, &ia));
    let right = cat.tensor(&alpha, &id).and_then(|ai| cat.compose(&cat.tensor(&id, &f.mult)?, &ai));
    record_equal(&mut check, "(x (x) 1) alpha = (1 (x) x) alpha", left.clone(), right);
    report.push(check);

    let mut check = Check::new("delta from alpha");
    record_equal(&mut check, "(mu x id)(id x alpha) = delta", left, Ok(f.comult.clone()));
    report.push(check);
    Ok((alpha, report))
}

/// ε and β of X ⨿ Y and X ⊗ Y assembled from those of X and Y.
pub fn check_sum_tensor_traces(cat: &PermCat, x: &GObject, y: &GObject) -> Result<Report> {
    let b = cat.backend;
    let (fx, fy) = (build_frobenius(cat, x)?, build_frobenius(cat, y)?);
    let (sum, left, right) = x.coproduct(y);
    let fs = build_frobenius(cat, &sum)?;
    let incl = |part: &GObject, pos: &[usize]| crate::gset::GMap {
        source: part.clone(),
        target: sum.clone(),
        assign: part.atoms().iter().zip(pos).map(|(&a, &p)| (p, b.identity(a))).collect(),
    };
    let (ix, iy) = (cat.pushforward(&incl(x, &left)), cat.pushforward(&incl(y, &right)));
    let beta_s = fs.trace_pairing(cat)?;
    let mut report = Report::new();

    let mut check = Check::new("sum: counit");
    record_equal(&mut check, "eps restricted to X", cat.compose(&fs.counit, &ix), Ok(fx.counit.clone()));
    record_equal(&mut check, "eps restricted to Y", cat.compose(&fs.counit, &iy), Ok(fy.counit.clone()));
    report.push(check);

    let mut check = Check::new("sum: pairing");
    record_equal(&mut check, "beta restricted to X x X", cat.compose(&beta_s, &cat.tensor(&ix, &ix)?), fx.trace_pairing(cat));
    record_equal(&mut check, "beta restricted to Y x Y", cat.compose(&beta_s, &cat.tensor(&iy, &iy)?), fy.trace_pairing(cat));
    let cross = cat.compose(&beta_s, &cat.tensor(&ix, &iy)?)?;
    check.record(cross.matrix.is_zero(), || Witness::new("beta vanishes on X x Y", cross.matrix.to_string().trim_end(), 0));
    report.push(check);

    let (px, py) = (PermObject::new(x.clone()), PermObject::new(y.clone()));
    let ft = build_on(cat, &px.tensor(&py))?;
    let mut check = Check::new("tensor: counit");
    record_equal(&mut check, "eps of X (x) Y", Ok(ft.counit.clone()), cat.tensor(&fx.counit, &fy.counit));
    report.push(check);
    let mut check = Check::new("tensor: pairing");
    // X Y X Y -> X X Y Y
    let xyxy = px.tensor(&py).tensor(&px).tensor(&py);
    let xxyy = px.tensor(&px).tensor(&py).tensor(&py);
    let shuffle = cat.wiring(&xxyy, &[0, 2, 1, 3], &xyxy, &[0, 1, 2, 3])?;
    let assembled = cat.compose(&cat.tensor(&fx.trace_pairing(cat)?, &fy.trace_pairing(cat)?)?, &shuffle);
    record_equal(&mut check, "beta of X (x) Y", ft.trace_pairing(cat), assembled);
    report.push(check);
    Ok(report)
}

/// Every algebra check on Vec_X.
pub fn frobenius_suite(cat: &PermCat, x: &GObject) -> Result<Report> {
    let f = build_frobenius(cat, x)?;
    let mut report = verify_frobenius(cat, &f);
    report.extend(check_trace_form(cat, &f));
    report.extend(check_perfect_pairing(cat, &f));
    report.extend(splitting_idempotent(cat, &f)?.1);
    Ok(report)
}
