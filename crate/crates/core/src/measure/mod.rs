//! Measures: values on atoms and on elementary fibers, with μ of objects and
//! of maps between atoms.

mod check;
mod classify;
mod solve;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::coeff::{parse_field, parse_scalar, Field, Scalar};
use crate::error::{Error, Result};
use crate::gset::{parse_atom, strip_comment, Atom, Backend, BackendId, FiberClass, GMap, GObject, MapPattern};

pub use check::{check_measure_axioms, identities, Identity};
pub use classify::{classify_measure, Classification};
pub use solve::{solve_measures, MeasureFamily};

/// The data μ(f) is computed from: a stored atom value or a multiset of fiber classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapKey {
    Stored(Atom),
    Chain(Vec<FiberClass>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Measure {
    backend: BackendId,
    field: Field,
    #[serde(serialize_with = "as_pairs")]
    atoms: BTreeMap<Atom, Scalar>,
    #[serde(serialize_with = "as_pairs")]
    fibers: BTreeMap<FiberClass, Scalar>,
}

fn as_pairs<K: Serialize, S: serde::Serializer>(m: &BTreeMap<K, Scalar>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter())
}

impl Measure {
    pub fn new(backend: &Backend, field: Field) -> Self {
        Measure { backend: backend.id(), field, atoms: BTreeMap::new(), fibers: BTreeMap::new() }
    }

    pub fn backend_id(&self) -> &BackendId {
        &self.backend
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn atom_values(&self) -> &BTreeMap<Atom, Scalar> {
        &self.atoms
    }

    pub fn fiber_values(&self) -> &BTreeMap<FiberClass, Scalar> {
        &self.fibers
    }

    pub fn set_atom(&mut self, a: Atom, v: Scalar) {
        self.atoms.insert(a, v);
    }

    pub fn set_fiber(&mut self, c: FiberClass, v: Scalar) {
        self.fibers.insert(c, v);
    }

    pub fn with_atom(mut self, a: Atom, v: Scalar) -> Self {
        self.set_atom(a, v);
        self
    }

    /// The counting measure of a finite group, on atoms up to `bound`.
    pub fn counting(backend: &Backend, bound: usize) -> Result<Self> {
        let group = backend.group().ok_or_else(|| Error::BackendMismatch(backend.id().to_string(), "finite".into()))?;
        let mut m = Measure::new(backend, Field::Rational);
        for k in 0..group.classes().len() {
            let a = Atom::Finite(k);
            let n = backend.size(a);
            m.set_fiber(FiberClass::Card(n), Scalar::int(n as i64));
            if n <= bound {
                m.set_atom(a, Scalar::int(n as i64));
            }
        }
        Ok(m)
    }

    fn check_backend(&self, backend: &Backend) -> Result<()> {
        if backend.id() == self.backend {
            Ok(())
        } else {
            Err(Error::BackendMismatch(self.backend.to_string(), backend.id().to_string()))
        }
    }

    fn chain(&self, backend: &Backend, a: Atom, b: Atom, f: &MapPattern) -> Result<Scalar> {
        self.key_value(&MapKey::Chain(self.chain_classes(backend, a, b, f)?))
    }

    fn chain_classes(&self, backend: &Backend, a: Atom, b: Atom, f: &MapPattern) -> Result<Vec<FiberClass>> {
        let mut classes: Vec<FiberClass> = backend.factorize(a, b, f)?.into_iter().map(|s| s.fiber).collect();
        classes.sort();
        Ok(classes)
    }

    /// μ of an atom: the stored value, or the fiber chain down to the point.
    pub fn mu_atom(&self, backend: &Backend, a: Atom) -> Result<Scalar> {
        self.check_backend(backend)?;
        backend.check_atom(a)?;
        if let Some(v) = self.atoms.get(&a) {
            return Ok(v.clone());
        }
        let one = backend.terminal();
        let base = self.atoms.get(&one).cloned().unwrap_or_else(Scalar::one);
        if a == one {
            return Ok(base);
        }
        self.chain(backend, a, one, &backend.to_terminal(a))?.checked_mul(&base)
    }

    pub fn mu_object(&self, backend: &Backend, x: &GObject) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for &a in x.atoms() {
            acc = acc.checked_add(&self.mu_atom(backend, a)?)?;
        }
        Ok(acc)
    }

    /// μ(f) for a map of atoms: the measure of any fiber.
    ///
    /// A map to the point has the source as its fiber, so the stored atom
    /// value is used there; otherwise fiber values multiply along the chain.
    pub fn mu_map(&self, backend: &Backend, a: Atom, b: Atom, f: &MapPattern) -> Result<Scalar> {
        self.key_value(&self.map_key(backend, a, b, f)?)
    }

    /// What μ(f) depends on; equal keys give equal values, for memoization.
    pub fn map_key(&self, backend: &Backend, a: Atom, b: Atom, f: &MapPattern) -> Result<MapKey> {
        self.check_backend(backend)?;
        if b == backend.terminal() && a != b && self.atoms.contains_key(&a) {
            backend.factorize(a, b, f)?;
            return Ok(MapKey::Stored(a));
        }
        Ok(MapKey::Chain(self.chain_classes(backend, a, b, f)?))
    }

    pub fn key_value(&self, key: &MapKey) -> Result<Scalar> {
        match key {
            MapKey::Stored(a) => Ok(self.atoms[a].clone()),
            MapKey::Chain(classes) => {
                let mut acc = Scalar::one();
                for c in classes {
                    acc = acc.checked_mul(&self.fiber_value(*c)?)?;
                }
                Ok(acc)
            }
        }
    }

    /// The stored value, or one forced by removing a point from a stored class.
    pub fn fiber_value(&self, c: FiberClass) -> Result<Scalar> {
        if let Some(v) = self.fibers.get(&c) {
            return Ok(v.clone());
        }
        match c {
            FiberClass::OmegaMinus(k) if k > 0 && self.fibers.keys().any(|d| matches!(d, FiberClass::OmegaMinus(j) if *j < k)) => {
                self.fiber_value(FiberClass::OmegaMinus(k - 1))?.checked_sub(&Scalar::one())
            }
            FiberClass::Card(n) => Ok(Scalar::int(n as i64)),
            _ => Err(Error::UnknownAtom(format!("fiber class {c}"))),
        }
    }

    pub fn mu_gmap(&self, backend: &Backend, f: &GMap) -> Result<Scalar> {
        if !f.is_atom_map() {
            return Err(Error::ShapeMismatch(format!("{f} is not a map of atoms")));
        }
        self.mu_map(backend, f.source.atoms()[0], f.target.atoms()[0], &f.assign[0].1)
    }

    /// Renders the measure in the text format read by [`Measure::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let field = match self.field {
            Field::Rational => "q".to_string(),
            Field::RatFuncQ(v) => format!("qt:{v}"),
            Field::RatFuncFp(p, v) => format!("fp:{p}:{v}"),
        };
        let _ = writeln!(s, "field {field}");
        for (a, v) in &self.atoms {
            let _ = writeln!(s, "atom {a} = {v}");
        }
        for (c, v) in &self.fibers {
            let _ = writeln!(s, "fiber {c} = {v}");
        }
        s
    }

    /// Reads lines `field qt`, `atom sym:inj[1] = t`, `fiber omega-minus{1} = t - 1`;
    /// `#` after whitespace starts a comment.
    pub fn parse(backend: &Backend, text: &str, default_field: Field) -> Result<Self> {
        let mut m = Measure::new(backend, default_field);
        for line in text.lines() {
            let line = strip_comment(line);
            if line.is_empty() {
                continue;
            }
            let (kind, rest) = line.split_once(char::is_whitespace).ok_or_else(|| Error::Parse(format!("bad line `{line}`")))?;
            match kind {
                "field" => m.field = parse_field(rest)?,
                "backend" => {}
                "atom" | "fiber" => {
                    let (lhs, rhs) = rest.split_once('=').ok_or_else(|| Error::Parse(format!("missing `=` in `{line}`")))?;
                    let v = parse_scalar(rhs, m.field)?;
                    if kind == "atom" {
                        m.set_atom(parse_atom(backend, lhs)?, v);
                    } else {
                        m.set_fiber(parse_fiber_class(lhs)?, v);
                    }
                }
                _ => return Err(Error::Parse(format!("unknown entry `{kind}`"))),
            }
        }
        Ok(m)
    }
}

pub fn parse_fiber_class(s: &str) -> Result<FiberClass> {
    let s = s.trim();
    let num = |body: &str| body.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad fiber class `{s}`")));
    if let Some(b) = s.strip_prefix("omega-minus{").and_then(|r| r.strip_suffix('}')) {
        return Ok(FiberClass::OmegaMinus(num(b)?));
    }
    if let Some(b) = s.strip_prefix("card{").and_then(|r| r.strip_suffix('}')) {
        return Ok(FiberClass::Card(num(b)?));
    }
    match s {
        "ray" => Ok(FiberClass::Ray),
        "interval" => Ok(FiberClass::Interval),
        _ => Err(Error::Parse(format!("bad fiber class `{s}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deligne() -> (Backend, Measure) {
        let b = Backend::sym();
        let f = Field::RatFuncQ('t');
        let mut m = Measure::new(&b, f);
        for c in 0..8 {
            m.set_fiber(FiberClass::OmegaMinus(c), Scalar::var(f) - Scalar::int(c as i64));
        }
        (b, m)
    }

    #[test]
    fn falling_factorials_by_chain() {
        let (b, m) = deligne();
        assert_eq!(m.mu_atom(&b, Atom::Sym(2)).unwrap().to_string(), "t^2 - t");
        let x = GObject::new(vec![Atom::Sym(1), Atom::Sym(1)]);
        assert_eq!(m.mu_object(&b, &x).unwrap().to_string(), "2*t");
        let f = MapPattern::Select(vec![0]);
        assert_eq!(m.mu_map(&b, Atom::Sym(2), Atom::Sym(1), &f).unwrap().to_string(), "t - 1");
        assert!(m.mu_map(&b, Atom::Sym(2), Atom::Sym(2), &MapPattern::Select(vec![1, 0])).unwrap().is_one());
    }

    #[test]
    fn unknown_fiber_is_reported() {
        let b = Backend::line();
        let m = Measure::new(&b, Field::Rational);
        assert!(matches!(m.mu_atom(&b, Atom::Line(1)), Err(Error::UnknownAtom(_))));
    }

    #[test]
    fn fibers_extend_by_removing_points() {
        let (b, m) = deligne();
        assert_eq!(m.fiber_value(FiberClass::OmegaMinus(10)).unwrap().to_string(), "t - 10");
        assert_eq!(m.mu_atom(&b, Atom::Sym(1)).unwrap().to_string(), "t");
        assert!(Measure::new(&b, Field::Rational).fiber_value(FiberClass::OmegaMinus(3)).is_err());
    }

    #[test]
    fn text_round_trip() {
        let (b, m) = deligne();
        let m = m.with_atom(Atom::Sym(1), Scalar::var(Field::RatFuncQ('t')));
        let back = Measure::parse(&b, &m.to_text(), Field::Rational).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn counting_measure_of_s3() {
        let b = Backend::finite(crate::gset::FiniteGroup::parse("S3").unwrap());
        let m = Measure::counting(&b, 6).unwrap();
        assert_eq!(m.mu_atom(&b, Atom::Finite(3)).unwrap(), Scalar::int(6));
        assert_eq!(m.mu_map(&b, Atom::Finite(3), Atom::Finite(1), &MapPattern::Point(0)).unwrap(), Scalar::int(3));
    }
}
