//! Invariant functions and matrices on products of G-objects, integration
//! against a measure, and integral matrix multiplication.

mod assoc;
mod linalg;
mod text;
mod wiring;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::gset::{Atom, Backend, GMap, GObject, MapPattern, OrbitLabel, Product};
use crate::measure::Measure;

pub use assoc::{check_associativity, AssocOptions};
pub use linalg::{kernel, rank};
pub use wiring::wiring;

/// Index of an orbit of Y × X: atom of Y, atom of X, orbit label.
pub type OrbitKey = (usize, usize, OrbitLabel);

/// An invariant function on a G-object, one coefficient per atom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchwartzFn {
    pub carrier: GObject,
    pub coeffs: BTreeMap<usize, Scalar>,
}

impl SchwartzFn {
    pub fn new(carrier: GObject) -> Self {
        SchwartzFn { carrier, coeffs: BTreeMap::new() }
    }

    pub fn constant(carrier: GObject, c: Scalar) -> Self {
        let coeffs = (0..carrier.len()).map(|i| (i, c.clone())).filter(|(_, v)| !v.is_zero()).collect();
        SchwartzFn { carrier, coeffs }
    }

    pub fn set(&mut self, pos: usize, c: Scalar) {
        if c.is_zero() {
            self.coeffs.remove(&pos);
        } else {
            self.coeffs.insert(pos, c);
        }
    }

    /// A matrix on Y × X read as a function on the product object.
    pub fn of_matrix(backend: &Backend, m: &InvariantMatrix) -> Self {
        let p = Product::of(backend, &[&m.target, &m.source]);
        let mut f = SchwartzFn::new(p.object.clone());
        for ((i, j, label), v) in &m.entries {
            let (a, b) = (m.target.atoms()[*i], m.source.atoms()[*j]);
            let o = backend.product(a, b).position(label).expect("orbit label of a stored entry");
            let pos = p.position(*i, *j, o).expect("orbit of the product");
            f.set(pos, v.clone());
        }
        f
    }
}

/// ∫ φ dμ: each coefficient weighted by the measure of its orbit.
pub fn integrate(backend: &Backend, m: &Measure, phi: &SchwartzFn) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (&pos, c) in &phi.coeffs {
        let a = phi.carrier.atoms()[pos];
        acc = acc.checked_add(&c.checked_mul(&m.mu_atom(backend, a)?)?)?;
    }
    Ok(acc)
}

/// An invariant Y × X matrix, i.e. a map Vec_X → Vec_Y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMatrix {
    pub target: GObject,
    pub source: GObject,
    entries: BTreeMap<OrbitKey, Scalar>,
}

impl InvariantMatrix {
    pub fn zero(target: GObject, source: GObject) -> Self {
        InvariantMatrix { target, source, entries: BTreeMap::new() }
    }

    /// The indicator of one orbit.
    pub fn indicator(target: GObject, source: GObject, key: OrbitKey) -> Self {
        let mut m = InvariantMatrix::zero(target, source);
        m.entries.insert(key, Scalar::one());
        m
    }

    pub fn identity(backend: &Backend, x: &GObject) -> Self {
        let mut m = InvariantMatrix::zero(x.clone(), x.clone());
        for (i, &a) in x.atoms().iter().enumerate() {
            let id = backend.identity(a);
            let (label, _) = backend.pair_label(&id, a, &id, a);
            m.entries.insert((i, i, label), Scalar::one());
        }
        m
    }

    /// Every orbit of target × source, in canonical order.
    pub fn orbit_keys(backend: &Backend, target: &GObject, source: &GObject) -> Vec<OrbitKey> {
        let mut keys = Vec::new();
        for (i, &a) in target.atoms().iter().enumerate() {
            for (j, &b) in source.atoms().iter().enumerate() {
                keys.extend(backend.product(a, b).orbits.iter().map(|o| (i, j, o.label.clone())));
            }
        }
        keys.sort();
        keys
    }

    /// Orbit indicators, a basis of the invariant matrices.
    pub fn basis(backend: &Backend, target: &GObject, source: &GObject) -> Vec<InvariantMatrix> {
        InvariantMatrix::orbit_keys(backend, target, source)
            .into_iter()
            .map(|k| InvariantMatrix::indicator(target.clone(), source.clone(), k))
            .collect()
    }

    pub fn entries(&self) -> &BTreeMap<OrbitKey, Scalar> {
        &self.entries
    }

    pub fn entry(&self, key: &OrbitKey) -> Scalar {
        self.entries.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, key: OrbitKey, v: Scalar) {
        if v.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
    }

    pub fn add_to(&mut self, key: OrbitKey, v: &Scalar) -> Result<()> {
        let sum = self.entry(&key).checked_add(v)?;
        self.set(key, sum);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_same_shape(&self, other: &InvariantMatrix) -> Result<()> {
        if self.target != other.target || self.source != other.source {
            return Err(Error::ShapeMismatch(format!(
                "{} <- {} vs {} <- {}",
                self.target, self.source, other.target, other.source
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &InvariantMatrix) -> Result<InvariantMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_to(k.clone(), v)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &InvariantMatrix) -> Result<InvariantMatrix> {
        self.add(&other.scale(&Scalar::int(-1))?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<InvariantMatrix> {
        let mut out = InvariantMatrix::zero(self.target.clone(), self.source.clone());
        for (k, v) in &self.entries {
            out.set(k.clone(), v.checked_mul(c)?);
        }
        Ok(out)
    }

    /// Pointwise product of two invariant functions on the same product.
    pub fn hadamard(&self, other: &InvariantMatrix) -> Result<InvariantMatrix> {
        self.check_same_shape(other)?;
        let mut out = InvariantMatrix::zero(self.target.clone(), self.source.clone());
        for (k, v) in &self.entries {
            if let Some(w) = other.entries.get(k) {
                out.set(k.clone(), v.checked_mul(w)?);
            }
        }
        Ok(out)
    }

    /// The value at the point of Y × X given by maps out of some atom.
    pub fn at(&self, backend: &Backend, to_target: &(usize, MapPattern), to_source: &(usize, MapPattern)) -> Scalar {
        let (i, f) = to_target;
        let (j, g) = to_source;
        let (label, _) = backend.pair_label(f, self.target.atoms()[*i], g, self.source.atoms()[*j]);
        self.entry(&(*i, *j, label))
    }

    pub fn transpose(&self, backend: &Backend) -> InvariantMatrix {
        let mut out = InvariantMatrix::zero(self.source.clone(), self.target.clone());
        for ((i, j, label), v) in &self.entries {
            let (a, b) = (self.target.atoms()[*i], self.source.atoms()[*j]);
            out.entries.insert((*j, *i, backend.swap_label(a, b, label)), v.clone());
        }
        out
    }

    /// A_f: the indicator of the graph of f, as a Y × X matrix.
    pub fn pushforward(backend: &Backend, f: &GMap) -> InvariantMatrix {
        let mut out = InvariantMatrix::zero(f.target.clone(), f.source.clone());
        for (j, (i, p)) in f.assign.iter().enumerate() {
            let a = f.source.atoms()[j];
            let (label, _) = backend.pair_label(p, f.target.atoms()[*i], &backend.identity(a), a);
            out.entries.insert((*i, j, label), Scalar::one());
        }
        out
    }

    /// B_f: the graph of f as an X × Y matrix.
    pub fn pullback(backend: &Backend, f: &GMap) -> InvariantMatrix {
        InvariantMatrix::pushforward(backend, f).transpose(backend)
    }

    /// The first orbit, in canonical order, where the two matrices differ.
    pub fn first_difference(&self, other: &InvariantMatrix) -> Option<(OrbitKey, Scalar, Scalar)> {
        let mut keys: Vec<&OrbitKey> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.into_iter().find(|k| self.entry(k) != other.entry(k)).map(|k| (k.clone(), self.entry(k), other.entry(k)))
    }

    /// Rendering used in reports: one orbit per line.
    pub fn describe_key(&self, key: &OrbitKey) -> String {
        let (i, j, label) = key;
        format!("{} x {} {}", self.target.atoms()[*i], self.source.atoms()[*j], label)
    }
}

impl fmt::Display for InvariantMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} <- {}", self.target, self.source)?;
        for (k, v) in &self.entries {
            writeln!(f, "  {} : {}", self.describe_key(k), v)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct EntryView<'a> {
    row: usize,
    col: usize,
    orbit: &'a OrbitLabel,
    value: &'a Scalar,
}

impl Serialize for InvariantMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<EntryView> = self
            .entries
            .iter()
            .map(|((i, j, label), v)| EntryView { row: *i, col: *j, orbit: label, value: v })
            .collect();
        let mut st = s.serialize_struct("InvariantMatrix", 3)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// (B A)(z, x) = ∫ B(z, y) A(y, x) dy.
///
/// Each pair of nonzero entries contributes over the orbits of the fiber product
/// of their orbits along Y, weighted by μ of the map onto the image orbit in Z × X.
pub fn matmul(backend: &Backend, m: &Measure, b: &InvariantMatrix, a: &InvariantMatrix) -> Result<InvariantMatrix> {
    if b.source != a.target {
        return Err(Error::ShapeMismatch(format!("cannot compose {} <- {} after {} <- {}", b.target, b.source, a.target, a.source)));
    }
    let mut by_row: BTreeMap<usize, Vec<(&usize, &OrbitLabel, &Scalar)>> = BTreeMap::new();
    for ((i, j, label), v) in &a.entries {
        by_row.entry(*i).or_default().push((j, label, v));
    }
    let mut memo: HashMap<(Atom, Atom, MapPattern), Scalar> = HashMap::new();
    let mut out = InvariantMatrix::zero(b.target.clone(), a.source.clone());
    for ((k, i, lb), vb) in &b.entries {
        let Some(row) = by_row.get(i) else { continue };
        let (z, y) = (b.target.atoms()[*k], b.source.atoms()[*i]);
        let ob = backend.orbit(z, y, lb);
        for &(j, la, va) in row {
            let x = a.source.atoms()[*j];
            let oa = backend.orbit(y, x, la);
            let weight = vb.checked_mul(va)?;
            for tau in backend.fiber_orbits(ob.atom, &ob.proj2, oa.atom, &oa.proj1, y) {
                let to_z = backend.then(&tau.proj1, ob.atom, &ob.proj1, z);
                let to_x = backend.then(&tau.proj2, oa.atom, &oa.proj2, x);
                let (lw, onto) = backend.pair_label(&to_z, z, &to_x, x);
                let w = backend.orbit(z, x, &lw).atom;
                let mu = match memo.get(&(tau.atom, w, onto.clone())) {
                    Some(v) => v.clone(),
                    None => {
                        let v = m.mu_map(backend, tau.atom, w, &onto)?;
                        memo.insert((tau.atom, w, onto), v.clone());
                        v
                    }
                };
                out.add_to((*k, *j, lw), &weight.checked_mul(&mu)?)?;
            }
        }
    }
    Ok(out)
}

/// For a finite group: the explicit matrix on points, rows indexed by the
/// points of the target (atom by atom, coset by coset).
pub fn expand_finite(backend: &Backend, m: &InvariantMatrix) -> Result<Vec<Vec<Scalar>>> {
    if backend.group().is_none() {
        return Err(Error::BackendMismatch(backend.id().to_string(), "finite".into()));
    }
    let points = |x: &GObject| -> Vec<(usize, usize)> {
        x.atoms().iter().enumerate().flat_map(|(i, &a)| (0..backend.size(a)).map(move |c| (i, c))).collect()
    };
    let (rows, cols) = (points(&m.target), points(&m.source));
    Ok(rows
        .iter()
        .map(|&(i, q)| {
            cols.iter()
                .map(|&(j, p)| {
                    let (a, b) = (m.target.atoms()[i], m.source.atoms()[j]);
                    let (label, _) = backend.pair_label(&MapPattern::Point(q), a, &MapPattern::Point(p), b);
                    m.entry(&(i, j, label))
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::gset::{FiniteGroup, Letter};
    use crate::measure::solve_measures;

    fn sym_t() -> (Backend, Measure) {
        let b = Backend::sym();
        let m = solve_measures(&b, 3, Field::RatFuncQ('t')).unwrap().generic_measure(&b);
        (b, m)
    }

    fn t() -> Scalar {
        Scalar::var(Field::RatFuncQ('t'))
    }

    fn omega() -> GObject {
        GObject::atom(Atom::Sym(1))
    }

    #[test]
    fn integrals() {
        let (b, m) = sym_t();
        assert_eq!(integrate(&b, &m, &SchwartzFn::constant(omega(), Scalar::one())).unwrap(), t());
        let diag = InvariantMatrix::identity(&b, &omega());
        assert_eq!(integrate(&b, &m, &SchwartzFn::of_matrix(&b, &diag)).unwrap(), t());
    }

    #[test]
    fn off_diagonal_square() {
        let (b, m) = sym_t();
        let x = omega();
        let eq = InvariantMatrix::identity(&b, &x);
        let ne = InvariantMatrix::indicator(x.clone(), x.clone(), (0, 0, OrbitLabel::Matching(vec![])));
        let sq = matmul(&b, &m, &ne, &ne).unwrap();
        let one = Scalar::one();
        let expected = eq.scale(&(&t() - &one)).unwrap().add(&ne.scale(&(&t() - &Scalar::int(2))).unwrap()).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn line_order_square() {
        let b = Backend::line();
        let m = solve_measures(&b, 3, Field::Rational).unwrap().generic_measure(&b);
        let x = GObject::atom(Atom::Line(1));
        // first coordinate (the row) above the second
        let lt = InvariantMatrix::indicator(x.clone(), x.clone(), (0, 0, OrbitLabel::Word(vec![Letter::R, Letter::L])));
        assert_eq!(matmul(&b, &m, &lt, &lt).unwrap(), lt.scale(&Scalar::int(-1)).unwrap());
    }

    #[test]
    fn pushforward_after_pullback() {
        let (b, m) = sym_t();
        let f = GMap::of_atoms(Atom::Sym(2), Atom::Sym(1), MapPattern::Select(vec![0]));
        let af = InvariantMatrix::pushforward(&b, &f);
        let bf = InvariantMatrix::pullback(&b, &f);
        assert_eq!(af.transpose(&b), bf);
        assert_eq!(bf.transpose(&b).transpose(&b), bf);
        let id = InvariantMatrix::identity(&b, &omega());
        assert_eq!(matmul(&b, &m, &af, &bf).unwrap(), id.scale(&(&t() - &Scalar::one())).unwrap());
        assert_eq!(matmul(&b, &m, &id, &af).unwrap(), af);
        assert_eq!(InvariantMatrix::pushforward(&b, &GMap::identity(&b, &omega())), id);
    }

    #[test]
    fn shape_mismatch() {
        let (b, m) = sym_t();
        let id1 = InvariantMatrix::identity(&b, &omega());
        let id2 = InvariantMatrix::identity(&b, &GObject::atom(Atom::Sym(2)));
        assert!(matches!(matmul(&b, &m, &id1, &id2), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn finite_products_are_literal() {
        let b = Backend::finite(FiniteGroup::parse("S3").unwrap());
        let m = Measure::counting(&b, 6).unwrap();
        let objs: Vec<GObject> = b.atoms_up_to(6).into_iter().map(GObject::atom).collect();
        for z in &objs {
            for y in &objs {
                for x in &objs {
                    for bm in InvariantMatrix::basis(&b, z, y) {
                        for am in InvariantMatrix::basis(&b, y, x) {
                            let got = expand_finite(&b, &matmul(&b, &m, &bm, &am).unwrap()).unwrap();
                            let (eb, ea) = (expand_finite(&b, &bm).unwrap(), expand_finite(&b, &am).unwrap());
                            for (r, row) in got.iter().enumerate() {
                                for (c, v) in row.iter().enumerate() {
                                    let lit: Scalar = (0..ea.len()).map(|k| &eb[r][k] * &ea[k][c]).sum();
                                    assert_eq!(*v, lit);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_detects_perturbation() {
        let (b, m) = sym_t();
        let opts = AssocOptions { bound: 2, ..AssocOptions::default() };
        assert!(check_associativity(&b, &m, opts).pass);
        let bad = m.clone().with_atom(Atom::Sym(2), &(&t() * &(&t() - &Scalar::one())) + &Scalar::one());
        let c = check_associativity(&b, &bad, opts);
        assert!(!c.pass);
        assert!(c.witness.is_some());
    }
}
