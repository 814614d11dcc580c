use serde_json::json;

use super::{Context, Outcome};
use crate::coeff::Scalar;
use crate::error::Result;
use crate::frob::{check_sum_tensor_traces, e_idempotent_check, frobenius_suite, gamma_of_projection, EIdempotent};
use crate::gset::{pregalois_check, Atom, GMap, GObject};
use crate::linmat::{check_associativity, expand_finite, matmul, AssocOptions, InvariantMatrix};
use crate::measure::check_measure_axioms;
use crate::permcat::{check_linearization, PermCat, PermObject};
use crate::report::{Check, Report, Witness};

/// Folds `part` into `into` under `prefix`, one check per name.
fn merge(into: &mut Report, prefix: &str, part: Report) {
    for c in part.checks {
        let name = format!("{prefix}/{}", c.name);
        match into.checks.iter_mut().find(|d| d.name == name) {
            Some(d) => {
                d.instances += c.instances;
                if d.note != c.note {
                    d.note = None;
                }
                if d.pass && !c.pass {
                    d.pass = false;
                    d.witness = c.witness;
                }
            }
            None => into.push(Check { name, ..c }),
        }
    }
}

fn failed(name: &str, what: String, e: crate::error::Error) -> Report {
    let mut c = Check::new(name);
    c.fail(Witness::new(what, e, "a value"));
    Report { checks: vec![c] }
}

/// Every checker on the context's backend and measure. Infinite backends are
/// capped at arity 3 for the matrix-level checks.
pub fn run_suite(ctx: &Context) -> Result<Outcome> {
    let b = &ctx.backend;
    let m = ctx.measure()?;
    let cat = PermCat::new(b, &m);
    let finite = b.group().is_some();
    let small = if finite { ctx.bound } else { ctx.bound.min(3) };
    let atoms = b.atoms_up_to(small);
    let mut report = Report::new();

    merge(&mut report, "measure", check_measure_axioms(b, &m, ctx.bound));

    let assoc = check_associativity(b, &m, AssocOptions { bound: small, seed: ctx.seed, ..AssocOptions::default() });
    merge(&mut report, "linmat", Report { checks: vec![assoc] });
    if finite {
        merge(&mut report, "linmat", literal_products(ctx, &m, &atoms));
    }

    merge(&mut report, "permcat", check_linearization(b, &m, small));
    let mut dims = Check::new("dimension is the measure");
    for &a in &atoms {
        let x = PermObject::new(GObject::atom(a));
        match (cat.categorical_dim(&x), m.mu_atom(b, a)) {
            (Ok(d), Ok(mu)) => dims.record(d == mu, || Witness::new(format!("dim Vec({a}) = mu({a})"), &d, &mu)),
            (Err(e), _) | (_, Err(e)) => dims.fail(Witness::new(format!("dim Vec({a})"), e, "a value")),
        }
    }
    merge(&mut report, "permcat", Report { checks: vec![dims] });

    for &a in &atoms {
        let x = GObject::atom(a);
        let part = frobenius_suite(&cat, &x).unwrap_or_else(|e| failed("frobenius", format!("structure on {a}"), e));
        merge(&mut report, "frob", part);
    }
    let pairs_up_to = if finite { small } else { 2 };
    let low: Vec<Atom> = atoms.iter().copied().filter(|&a| b.size(a) <= pairs_up_to).collect();
    for (i, &a) in low.iter().enumerate() {
        for &c in &low[i..] {
            let part = check_sum_tensor_traces(&cat, &GObject::atom(a), &GObject::atom(c))
                .unwrap_or_else(|e| failed("traces", format!("{a} and {c}"), e));
            merge(&mut report, "frob", part);
        }
    }

    for &a in &low {
        let x = GObject::atom(a);
        for e in [EIdempotent::diagonal(&cat, &x), EIdempotent::everything(&cat, &x)] {
            let part = e.and_then(|e| e_idempotent_check(&cat, &e)).unwrap_or_else(|e| failed("idempotent", format!("on {a}"), e));
            merge(&mut report, "eidem", part);
        }
    }
    for &y in &atoms {
        for &x in &atoms {
            for p in b.hom(y, x) {
                let f = GMap::of_atoms(y, x, p);
                let part = gamma_of_projection(&cat, &f).map(|(_, r)| r).unwrap_or_else(|e| failed("gamma of projection", f.to_string(), e));
                merge(&mut report, "eidem", part);
            }
        }
    }

    merge(&mut report, "pregalois", super::commands::axiom_checks(&pregalois_check(b, ctx.bound)));

    let data = json!({ "bound": ctx.bound, "matrix_bound": small, "checks": report.checks.len() });
    Ok(Outcome { report, measure: Some(m), data, text: String::new() })
}

/// Finite groups: integral products of orbit indicators agree with literal
/// products of their expanded matrices.
fn literal_products(ctx: &Context, m: &crate::measure::Measure, atoms: &[Atom]) -> Report {
    let b = &ctx.backend;
    let mut check = Check::new("products are literal");
    let objects: Vec<GObject> = atoms.iter().map(|&a| GObject::atom(a)).collect();
    for z in &objects {
        for y in &objects {
            for x in &objects {
                for bm in InvariantMatrix::basis(b, z, y) {
                    for am in InvariantMatrix::basis(b, y, x) {
                        let run = || -> Result<(Vec<Vec<Scalar>>, Vec<Vec<Scalar>>)> {
                            let (eb, ea) = (expand_finite(b, &bm)?, expand_finite(b, &am)?);
                            let literal: Vec<Vec<Scalar>> = eb
                                .iter()
                                .map(|row| {
                                    (0..ea[0].len())
                                        .map(|j| row.iter().zip(&ea).fold(Scalar::zero(), |acc, (u, col)| &acc + &(u * &col[j])))
                                        .collect()
                                })
                                .collect();
                            Ok((expand_finite(b, &matmul(b, m, &bm, &am)?)?, literal))
                        };
                        match run() {
                            Ok((ours, literal)) => check.record(ours == literal, || {
                                let (r, c) = (0..ours.len())
                                    .flat_map(|r| (0..ours[r].len()).map(move |c| (r, c)))
                                    .find(|&(r, c)| ours[r][c] != literal[r][c])
                                    .unwrap_or((0, 0));
                                let at = format!("entry ({r}, {c}) of {} x {}", bm.describe_key(&bm.entries().keys().next().cloned().unwrap()), am.describe_key(&am.entries().keys().next().cloned().unwrap()));
                                Witness::new(format!("B A on {z} <- {y} <- {x}"), &ours[r][c], &literal[r][c]).with_labels(vec![at])
                            }),
                            Err(e) => check.fail(Witness::new(format!("B A on {z} <- {y} <- {x}"), e, "a value")),
                        }
                    }
                }
            }
        }
    }
    Report { checks: vec![check] }
}
