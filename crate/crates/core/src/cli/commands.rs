use std::fmt::Write;
use std::path::PathBuf;

use serde_json::{json, Value};

use super::{read, Context, Outcome};
use crate::coeff::{parse_scalar, Field, Scalar};
use crate::error::{Error, Result};
use crate::frob::{e_idempotent_check, frobenius_suite, gamma_from_orbits, gamma_of_projection};
use crate::gset::{parse_gmap, parse_object, parse_orbit_label, pregalois_check, strip_comment, AxiomResult, Backend, OrbitLabel};
use crate::linmat::InvariantMatrix;
use crate::measure::{check_measure_axioms, classify_measure, solve_measures, Measure};
use crate::permcat::{check_linearization as linearization, PermCat, PermObject};
use crate::report::{Check, Report, Witness};

/// Factors separated by `(x)`, each an object expression.
pub fn parse_perm_object(backend: &Backend, s: &str) -> Result<PermObject> {
    if s.trim() == "1" {
        return Ok(PermObject::unit());
    }
    s.split("(x)")
        .map(|f| parse_object(backend, f).map(PermObject::new))
        .try_fold(PermObject::unit(), |acc, f| Ok(acc.tensor(&f?)))
}

fn outcome(report: Report, measure: Option<Measure>, data: Value, text: String) -> Result<Outcome> {
    Ok(Outcome { report, measure, data, text })
}

pub fn atoms(ctx: &Context) -> Result<Outcome> {
    let b = &ctx.backend;
    let m = ctx.measure()?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for a in b.atoms_up_to(ctx.bound) {
        let mu = m.mu_atom(b, a)?;
        let _ = writeln!(text, "{a}  size {}  mu {mu}", b.size(a));
        rows.push(json!({ "atom": a.to_string(), "size": b.size(a), "measure": mu.to_string() }));
    }
    outcome(Report::new(), Some(m), Value::Array(rows), text)
}

pub fn homdim(ctx: &Context, x: &str, y: &str) -> Result<Outcome> {
    let m = ctx.measure()?;
    let cat = PermCat::new(&ctx.backend, &m);
    let (x, y) = (parse_perm_object(&ctx.backend, x)?, parse_perm_object(&ctx.backend, y)?);
    let d = cat.hom_dim(&x, &y);
    let text = format!("dim Hom({x}, {y}) = {d}\n");
    outcome(Report::new(), None, json!({ "X": x, "Y": y, "dim": d }), text)
}

pub fn compose(ctx: &Context, lhs: &PathBuf, rhs: &PathBuf) -> Result<Outcome> {
    let m = ctx.measure()?;
    let cat = PermCat::new(&ctx.backend, &m);
    let morphism = |path: &PathBuf| -> Result<_> {
        let mat = InvariantMatrix::parse(&ctx.backend, &read(path)?, m.field())?;
        cat.morphism(&PermObject::new(mat.source.clone()), &PermObject::new(mat.target.clone()), mat)
    };
    let (g, f) = (morphism(lhs)?, morphism(rhs)?);
    let h = cat.compose(&g, &f)?;
    let text = h.matrix.to_text();
    outcome(Report::new(), Some(m), json!({ "composite": h.matrix }), text)
}

pub fn dim(ctx: &Context, x: &str) -> Result<Outcome> {
    let m = ctx.measure()?;
    let cat = PermCat::new(&ctx.backend, &m);
    let x = parse_perm_object(&ctx.backend, x)?;
    let d = cat.categorical_dim(&x)?;
    let text = format!("dim {x} = {d}\n");
    outcome(Report::new(), Some(m), json!({ "X": x, "dim": d }), text)
}

pub fn measure_solve(ctx: &Context) -> Result<Outcome> {
    let b = &ctx.backend;
    let fam = solve_measures(b, ctx.bound, ctx.field())?;
    let atoms: Vec<String> = fam.atoms.keys().map(ToString::to_string).collect();
    let values: Vec<String> = fam.atoms.values().map(ToString::to_string).collect();
    let params: Vec<String> = fam.params.iter().map(char::to_string).collect();
    let mut text = String::new();
    for (a, v) in atoms.iter().zip(&values) {
        let _ = writeln!(text, "mu({a}) = {v}");
    }
    for (c, v) in &fam.fibers {
        let _ = writeln!(text, "fiber {c} = {v}");
    }
    let _ = writeln!(text, "parameters: [{}]", params.join(", "));
    let residual: Vec<String> = fam.residual.iter().map(ToString::to_string).collect();
    if !residual.is_empty() {
        let _ = writeln!(text, "residual: {}", residual.join(", "));
    }
    let generic = fam.generic_measure(b);
    let report = if fam.is_free() { check_measure_axioms(b, &generic, ctx.bound) } else { Report::new() };
    let fibers: Vec<Value> = fam.fibers.iter().map(|(c, v)| json!([c, v])).collect();
    let solutions: Vec<String> = fam.solutions.iter().map(ToString::to_string).collect();
    let data = json!({
        "atoms": atoms,
        "values": values,
        "fibers": fibers,
        "family_params": params,
        "residual": residual,
        "solutions": solutions,
    });
    outcome(report, Some(generic), data, text)
}

pub fn measure_check(ctx: &Context, spec: &PathBuf) -> Result<Outcome> {
    let b = &ctx.backend;
    let m = Measure::parse(b, &read(spec)?, ctx.field())?;
    let report = check_measure_axioms(b, &m, ctx.bound);
    let (data, text) = match classify_measure(b, &m, ctx.bound) {
        Ok(c) => (json!({ "classification": c }), format!("regular {}  normal within bound {}\n", c.regular, c.normal_within_bound)),
        Err(e) => (json!({ "classification": null }), format!("not classified: {e}\n")),
    };
    outcome(report, Some(m), data, text)
}

pub fn frob_verify(ctx: &Context, x: &str) -> Result<Outcome> {
    let m = ctx.measure()?;
    let cat = PermCat::new(&ctx.backend, &m);
    let x = parse_object(&ctx.backend, x)?;
    let report = frobenius_suite(&cat, &x)?;
    outcome(report, Some(m), json!({ "X": x }), String::new())
}

/// Lines `i j orbit = value`, atom positions 1-based.
fn parse_gamma(field: Field, text: &str) -> Result<Vec<(usize, usize, OrbitLabel, Scalar)>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = strip_comment(line);
        if line.is_empty() {
            continue;
        }
        let mut parts = line.splitn(4, char::is_whitespace).map(str::trim);
        let (Some(i), Some(j), Some(label), Some(value)) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!("expected `i j orbit = value` in `{line}`")));
        };
        let pos = |s: &str| s.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1).ok_or_else(|| Error::Parse(format!("bad atom position `{s}`")));
        let value = value.strip_prefix('=').ok_or_else(|| Error::Parse(format!("missing `=` in `{line}`")))?;
        out.push((pos(i)?, pos(j)?, parse_orbit_label(label)?, parse_scalar(value, field)?));
    }
    Ok(out)
}

pub fn frob_eidem(ctx: &Context, gamma: &PathBuf, b: &str) -> Result<Outcome> {
    let m = ctx.measure()?;
    let cat = PermCat::new(&ctx.backend, &m);
    let b = parse_object(&ctx.backend, b)?;
    let entries = parse_gamma(m.field(), &read(gamma)?)?;
    let e = gamma_from_orbits(&cat, &b, &entries)?;
    let report = e_idempotent_check(&cat, &e)?;
    outcome(report, Some(m), json!({ "B": b, "gamma": e.gamma.matrix }), String::new())
}

pub fn frob_gamma_of(ctx: &Context, map: &PathBuf) -> Result<Outcome> {
    let m = ctx.measure()?;
    let cat = PermCat::new(&ctx.backend, &m);
    let text = read(map)?;
    let expr: String = text.lines().map(strip_comment).collect::<Vec<_>>().join(" ");
    let f = parse_gmap(&ctx.backend, &expr)?;
    let (e, report) = gamma_of_projection(&cat, &f)?;
    let text = e.gamma.matrix.to_text();
    outcome(report, Some(m), json!({ "map": f.to_string(), "gamma": e.gamma.matrix }), text)
}

/// Bounded axiom results as report checks.
pub fn axiom_checks(results: &[AxiomResult]) -> Report {
    let mut report = Report::new();
    for r in results {
        let mut c = Check::new(format!("({}) {}", r.axiom, r.name));
        c.pass = r.pass;
        c.instances = r.instances;
        c.witness = r.witness.as_ref().map(|w| Witness::new(w.clone(), false, true));
        c.note = r.note.clone();
        report.push(c);
    }
    report
}

pub fn pregalois(ctx: &Context) -> Result<Outcome> {
    let results = pregalois_check(&ctx.backend, ctx.bound);
    outcome(axiom_checks(&results), None, Value::Null, String::new())
}

pub fn check_linearization(ctx: &Context) -> Result<Outcome> {
    let m = ctx.measure()?;
    let report = linearization(&ctx.backend, &m, ctx.bound);
    outcome(report, Some(m), Value::Null, String::new())
}
