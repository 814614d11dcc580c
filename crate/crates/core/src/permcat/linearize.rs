use super::{record_equal as equal, PermCat, PermObject};
use crate::coeff::Scalar;
use crate::error::Result;
use crate::gset::{Backend, GMap, GObject};
use crate::measure::Measure;
use crate::report::{Check, Report, Witness};

/// The linearization of G-sets into uPerm(G; μ), checked within bound, and μ
/// read back from it.
pub fn check_linearization(backend: &Backend, m: &Measure, bound: usize) -> Report {
    let cat = PermCat::new(backend, m);
    let atoms = backend.atoms_up_to(bound);
    let mut report = Report::new();

    let mut additive = Check::new("additivity");
    for (i, &a) in atoms.iter().enumerate() {
        for &b in &atoms[i..] {
            let (x, y) = (GObject::atom(a), GObject::atom(b));
            let (sum, left, right) = x.coproduct(&y);
            let incl = |part: &GObject, pos: usize| GMap {
                source: part.clone(),
                target: sum.clone(),
                assign: vec![(pos, backend.identity(part.atoms()[0]))],
            };
            let (il, ir) = (incl(&x, left[0]), incl(&y, right[0]));
            let (al, bl) = (cat.pushforward(&il), cat.pullback(&il));
            let (ar, br) = (cat.pushforward(&ir), cat.pullback(&ir));
            equal(&mut additive, format!("beta alpha = id on {a} in {sum}"), cat.compose(&bl, &al), Ok(cat.identity(&al.source)));
            equal(&mut additive, format!("beta alpha = id on {b} in {sum}"), cat.compose(&br, &ar), Ok(cat.identity(&ar.source)));
            let total = cat.compose(&al, &bl).and_then(|l| cat.add(&l, &cat.compose(&ar, &br)?));
            equal(&mut additive, format!("sum of alpha beta = id on {sum}"), total, Ok(cat.identity(&PermObject::new(sum.clone()))));
        }
    }
    report.push(additive);

    let mut plenary = Check::new("plenarity");
    let unit = PermObject::unit();
    plenary.record(cat.hom_dim(&unit, &unit) == 1, || Witness::new("dim End(1) = 1", cat.hom_dim(&unit, &unit), 1));
    for &a in &atoms {
        let x = PermObject::new(GObject::atom(a));
        let basis = cat.hom_basis(&x, &unit);
        plenary.record(basis.len() == 1, || Witness::new(format!("dim Hom(Vec({a}), 1) = 1"), basis.len(), 1));
        equal(&mut plenary, format!("Hom(Vec({a}), 1) is spanned by integration"), Ok(basis[0].clone()), cat.integration(&x));
    }
    report.push(plenary);

    let mut assoc = Check::new("associativity");
    let mut extract = Check::new("re-extraction");
    let mut pushed = Check::new("pushforward of one");
    for &a in &atoms {
        for &b in &atoms {
            for p in backend.hom(a, b) {
                let f = GMap::of_atoms(a, b, p.clone());
                let (x, y) = (PermObject::new(f.source.clone()), PermObject::new(f.target.clone()));
                let mut run = || -> Result<()> {
                    let (af, bf) = (cat.pushforward(&f), cat.pullback(&f));
                    let (eta_x, eta_y) = (cat.unit_invariant(&x)?, cat.unit_invariant(&y)?);
                    let (int_x, int_y) = (cat.integration(&x)?, cat.integration(&y)?);
                    let stored = m.mu_map(backend, a, b, &p)?;

                    let l = cat.compose(&cat.compose(&int_y, &af)?, &eta_x)?;
                    let r = cat.compose(&int_y, &cat.compose(&af, &eta_x)?)?;
                    let (lv, rv) = (cat.scalar(&l), cat.scalar(&r));
                    assoc.record(lv == rv, || Witness::new(format!("(alpha_Y A_f) eta_X = alpha_Y (A_f eta_X) for {f}"), &lv, &rv));

                    // alpha_X B_f = mu'(f) alpha_Y, read off at the single orbit of 1 x Y
                    let back = cat.compose(&int_x, &bf)?;
                    let mu_back = back.matrix.entries().values().next().cloned().unwrap_or_else(Scalar::zero);
                    let fits = back.matrix == int_y.matrix.scale(&mu_back)?;
                    extract.record(fits && mu_back == stored, || {
                        Witness::new(format!("alpha_X B_f = mu(f) alpha_Y for {f}"), &mu_back, &stored)
                    });

                    let image = cat.compose(&af, &eta_x)?;
                    let expected = cat.scale(&eta_y, &stored)?;
                    pushed.record(image.matrix == expected.matrix, || {
                        Witness::new(format!("A_f eta_X = mu(f) eta_Y for {f}"), image.matrix.to_string().trim_end(), &stored)
                    });
                    Ok(())
                };
                if let Err(e) = run() {
                    extract.fail(Witness::new(format!("evaluating {f}"), e, "a value"));
                }
            }
        }
    }
    report.push(assoc);
    report.push(extract);
    report.push(pushed);
    report
}
