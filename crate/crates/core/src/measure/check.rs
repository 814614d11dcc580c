//! The measure axioms, checked on all atoms and atom maps within a bound.

use super::Measure;
use crate::coeff::Scalar;
use crate::error::Result;
use crate::gset::Backend;
use crate::report::{Check, Report, Witness};

/// `lhs = Σ rhs_terms`, one instance of an axiom.
#[derive(Clone, Debug)]
pub struct Identity {
    pub axiom: char,
    pub description: String,
    pub lhs: Scalar,
    pub rhs_terms: Vec<(String, Scalar)>,
}

impl Identity {
    pub fn rhs(&self) -> Scalar {
        self.rhs_terms.iter().map(|(_, v)| v.clone()).sum()
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs()
    }

    pub fn residual(&self) -> Scalar {
        &self.lhs - &self.rhs()
    }

    fn witness(&self) -> Witness {
        let terms: Vec<String> = self
            .rhs_terms
            .iter()
            .map(|(_, v)| {
                let s = v.to_string();
                if self.rhs_terms.len() > 1 && s.contains(' ') {
                    format!("({s})")
                } else {
                    s
                }
            })
            .collect();
        Witness::new(self.description.clone(), &self.lhs, terms.join(" + "))
            .with_labels(self.rhs_terms.iter().map(|(l, v)| format!("{l} -> {v}")).collect())
    }
}

/// μ(a)·μ(b) = Σ μ(orbit) over the orbits of a × b (axiom c), and
/// μ(a) = μ(f)·μ(b), μ(g∘f) = μ(f)·μ(g) for maps within bound (axiom e).
pub fn identities(backend: &Backend, m: &Measure, bound: usize) -> Result<Vec<Identity>> {
    let atoms = backend.atoms_up_to(bound);
    let mut out = Vec::new();
    for (i, &a) in atoms.iter().enumerate() {
        for &b in &atoms[i..] {
            let table = backend.product(a, b);
            let mut terms = Vec::new();
            for o in &table.orbits {
                terms.push((format!("{} {}", o.label, o.atom), m.mu_atom(backend, o.atom)?));
            }
            out.push(Identity {
                axiom: 'c',
                description: format!("product identity on {a} x {b}"),
                lhs: m.mu_atom(backend, a)?.checked_mul(&m.mu_atom(backend, b)?)?,
                rhs_terms: terms,
            });
        }
    }
    for &a in &atoms {
        for &b in &atoms {
            for f in backend.hom(a, b) {
                let mf = m.mu_map(backend, a, b, &f)?;
                out.push(Identity {
                    axiom: 'e',
                    description: format!("mu({a}) = mu({f}: {a} -> {b}) * mu({b})"),
                    lhs: m.mu_atom(backend, a)?,
                    rhs_terms: vec![(format!("{f}"), mf.checked_mul(&m.mu_atom(backend, b)?)?)],
                });
                for &c in &atoms {
                    for g in backend.hom(b, c) {
                        let gf = backend.then(&f, b, &g, c);
                        out.push(Identity {
                            axiom: 'e',
                            description: format!("mu({f} then {g}: {a} -> {b} -> {c}) is path independent"),
                            lhs: m.mu_map(backend, a, c, &gf)?,
                            rhs_terms: vec![(format!("{f} then {g}"), mf.checked_mul(&m.mu_map(backend, b, c, &g)?)?)],
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn check_measure_axioms(backend: &Backend, m: &Measure, bound: usize) -> Report {
    let atoms = backend.atoms_up_to(bound);
    let mut report = Report::new();

    let mut iso = Check::new("a: isomorphism invariance");
    for &a in &atoms {
        for &b in &atoms {
            if backend.is_iso(a, b) && !backend.hom(a, b).is_empty() {
                match (m.mu_atom(backend, a), m.mu_atom(backend, b)) {
                    (Ok(x), Ok(y)) => iso.record(x == y, || Witness::new(format!("mu({a}) = mu({b})"), &x, &y)),
                    (Err(e), _) | (_, Err(e)) => iso.fail(Witness::new(format!("mu of {a}, {b}"), e, "a value")),
                }
            }
        }
    }
    report.push(iso);

    let mut norm = Check::new("b: normalization");
    let one = backend.terminal();
    match m.mu_atom(backend, one) {
        Ok(v) => norm.record(v.is_one(), || Witness::new(format!("mu({one}) = 1"), &v, 1)),
        Err(e) => norm.fail(Witness::new(format!("mu({one})"), e, 1)),
    }
    report.push(norm);

    let mut additivity = Check::new("c: additivity on products");
    let mut multiplicativity = Check::new("e: multiplicativity along maps");
    match identities(backend, m, bound) {
        Ok(ids) => {
            for id in ids {
                let target = if id.axiom == 'c' { &mut additivity } else { &mut multiplicativity };
                target.record(id.holds(), || id.witness());
            }
        }
        Err(e) => {
            let w = Witness::new("evaluating identities within bound", e, "a value");
            additivity.fail(w.clone());
            multiplicativity.fail(w);
        }
    }
    report.push(additivity);
    report.push(Check::new("d: conjugation invariance").note("structural: atom labels are conjugation-invariant"));
    report.push(multiplicativity);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::gset::{Atom, FiberClass, FiniteGroup};

    fn deligne(b: &Backend) -> Measure {
        let f = Field::RatFuncQ('t');
        let mut m = Measure::new(b, f);
        for c in 0..8 {
            m.set_fiber(FiberClass::OmegaMinus(c), Scalar::var(f) - Scalar::int(c as i64));
        }
        m
    }

    #[test]
    fn deligne_measure_passes() {
        let b = Backend::sym();
        assert!(check_measure_axioms(&b, &deligne(&b), 4).pass());
    }

    #[test]
    fn perturbation_breaks_additivity() {
        let b = Backend::sym();
        let t = Scalar::var(Field::RatFuncQ('t'));
        let m = deligne(&b).with_atom(Atom::Sym(2), &t * &(&t - &Scalar::one()) + Scalar::one());
        let r = check_measure_axioms(&b, &m, 2);
        let c = r.get("c: additivity on products").unwrap();
        assert!(!c.pass);
        let w = c.witness.as_ref().unwrap();
        assert_eq!(w.lhs, "t^2");
        assert_eq!(w.rhs, "(t^2 - t + 1) + t");
    }

    #[test]
    fn counting_measure_passes() {
        let b = Backend::finite(FiniteGroup::parse("S3").unwrap());
        assert!(check_measure_axioms(&b, &Measure::counting(&b, 6).unwrap(), 6).pass());
    }
}
