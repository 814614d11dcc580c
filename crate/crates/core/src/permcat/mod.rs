//! The tensor category of permutation modules Vec_X: invariant matrices as
//! morphisms, composed by integration against a measure.

mod linearize;

use std::fmt;

use serde::Serialize;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::gset::{Backend, GMap, GObject, MapPattern, Product};
use crate::linmat::{matmul, wiring, InvariantMatrix};
use crate::measure::Measure;
use crate::report::{Check, Witness};

pub use linearize::check_linearization;

/// Vec_X for X = X₁ × ⋯ × Xₙ; no factors is the unit object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PermObject {
    factors: Vec<GObject>,
}

impl PermObject {
    pub fn new(x: GObject) -> Self {
        PermObject { factors: vec![x] }
    }

    pub fn unit() -> Self {
        PermObject::default()
    }

    pub fn factors(&self) -> &[GObject] {
        &self.factors
    }

    pub fn tensor(&self, other: &PermObject) -> PermObject {
        PermObject { factors: self.factors.iter().chain(&other.factors).cloned().collect() }
    }

    /// The n-fold tensor power.
    pub fn power(&self, n: usize) -> PermObject {
        (0..n).fold(PermObject::unit(), |acc, _| acc.tensor(self))
    }

    pub fn product(&self, backend: &Backend) -> Product {
        let refs: Vec<&GObject> = self.factors.iter().collect();
        Product::of(backend, &refs)
    }

    /// The underlying G-object.
    pub fn object(&self, backend: &Backend) -> GObject {
        self.product(backend).object
    }
}

impl fmt::Display for PermObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|x| format!("Vec({x})")).collect();
        write!(f, "{}", parts.join(" (x) "))
    }
}

impl Serialize for PermObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermMorphism {
    pub source: PermObject,
    pub target: PermObject,
    pub matrix: InvariantMatrix,
}

impl fmt::Display for PermMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}\n{}", self.source, self.target, self.matrix)
    }
}

/// uPerm(G; μ) for one backend and measure.
pub struct PermCat<'a> {
    pub backend: &'a Backend,
    pub measure: &'a Measure,
}

impl<'a> PermCat<'a> {
    pub fn new(backend: &'a Backend, measure: &'a Measure) -> Self {
        PermCat { backend, measure }
    }

    pub fn morphism(&self, source: &PermObject, target: &PermObject, matrix: InvariantMatrix) -> Result<PermMorphism> {
        if matrix.source != source.object(self.backend) || matrix.target != target.object(self.backend) {
            return Err(Error::ShapeMismatch(format!("matrix {} <- {} between {source} and {target}", matrix.target, matrix.source)));
        }
        Ok(PermMorphism { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn hom_basis(&self, x: &PermObject, y: &PermObject) -> Vec<PermMorphism> {
        let (sx, ty) = (x.object(self.backend), y.object(self.backend));
        InvariantMatrix::basis(self.backend, &ty, &sx)
            .into_iter()
            .map(|matrix| PermMorphism { source: x.clone(), target: y.clone(), matrix })
            .collect()
    }

    pub fn hom_dim(&self, x: &PermObject, y: &PermObject) -> usize {
        InvariantMatrix::orbit_keys(self.backend, &y.object(self.backend), &x.object(self.backend)).len()
    }

    pub fn identity(&self, x: &PermObject) -> PermMorphism {
        let obj = x.object(self.backend);
        PermMorphism { source: x.clone(), target: x.clone(), matrix: InvariantMatrix::identity(self.backend, &obj) }
    }

    /// g ∘ f.
    pub fn compose(&self, g: &PermMorphism, f: &PermMorphism) -> Result<PermMorphism> {
        let matrix = matmul(self.backend, self.measure, &g.matrix, &f.matrix)?;
        Ok(PermMorphism { source: f.source.clone(), target: g.target.clone(), matrix })
    }

    /// Composes right to left: `chain(&[h, g, f])` is h ∘ g ∘ f.
    pub fn chain(&self, maps: &[&PermMorphism]) -> Result<PermMorphism> {
        let (last, rest) = maps.split_last().ok_or_else(|| Error::ShapeMismatch("empty composite".into()))?;
        rest.iter().rev().try_fold((*last).clone(), |acc, g| self.compose(g, &acc))
    }

    pub fn scale(&self, f: &PermMorphism, c: &Scalar) -> Result<PermMorphism> {
        Ok(PermMorphism { matrix: f.matrix.scale(c)?, ..f.clone() })
    }

    pub fn add(&self, f: &PermMorphism, g: &PermMorphism) -> Result<PermMorphism> {
        Ok(PermMorphism { matrix: f.matrix.add(&g.matrix)?, ..f.clone() })
    }

    /// A structural map between tensor products; see [`wiring`].
    pub fn wiring(&self, target: &PermObject, target_wires: &[usize], source: &PermObject, source_wires: &[usize]) -> Result<PermMorphism> {
        let (t, s) = (target.product(self.backend), source.product(self.backend));
        let matrix = wiring(self.backend, &t, target_wires, &s, source_wires)?;
        Ok(PermMorphism { source: source.clone(), target: target.clone(), matrix })
    }

    /// X ⊗ Y → Y ⊗ X.
    pub fn symmetry(&self, x: &PermObject, y: &PermObject) -> Result<PermMorphism> {
        let (n, m) = (x.factors.len(), y.factors.len());
        let source_wires: Vec<usize> = (0..n + m).collect();
        let target_wires: Vec<usize> = (n..n + m).chain(0..n).collect();
        self.wiring(&y.tensor(x), &target_wires, &x.tensor(y), &source_wires)
    }

    /// f ⊗ g, with entries multiplied over pairs of orbits.
    pub fn tensor(&self, f: &PermMorphism, g: &PermMorphism) -> Result<PermMorphism> {
        let b = self.backend;
        let source = f.source.tensor(&g.source);
        let target = f.target.tensor(&g.target);
        let (sp, tp) = (source.product(b), target.product(b));
        let parts = [
            (f.source.product(b), f.target.product(b)),
            (g.source.product(b), g.target.product(b)),
        ];
        let mut out = InvariantMatrix::zero(tp.object.clone(), sp.object.clone());
        for (kf, vf) in f.matrix.entries() {
            let of = b.orbit(f.matrix.target.atoms()[kf.0], f.matrix.source.atoms()[kf.1], &kf.2);
            for (kg, vg) in g.matrix.entries() {
                let og = b.orbit(g.matrix.target.atoms()[kg.0], g.matrix.source.atoms()[kg.1], &kg.2);
                let value = vf.checked_mul(vg)?;
                for tau in b.product(of.atom, og.atom).orbits.iter() {
                    // τ → each leaf of the target and of the source
                    let mut to_target = Vec::new();
                    let mut to_source = Vec::new();
                    for ((src, tgt), (key, orbit, proj)) in parts.iter().zip([(kf, &of, &tau.proj1), (kg, &og, &tau.proj2)]) {
                        let into_t = b.then(proj, orbit.atom, &orbit.proj1, tgt.object.atoms()[key.0]);
                        let into_s = b.then(proj, orbit.atom, &orbit.proj2, src.object.atoms()[key.1]);
                        to_target.extend(legs_through(b, tgt, key.0, &into_t));
                        to_source.extend(legs_through(b, src, key.1, &into_s));
                    }
                    let (ti, tm) = tp.locate(b, tau.atom, &to_target);
                    let (si, sm) = sp.locate(b, tau.atom, &to_source);
                    let (label, _) = b.pair_label(&tm, tp.object.atoms()[ti], &sm, sp.object.atoms()[si]);
                    out.add_to((ti, si, label), &value)?;
                }
            }
        }
        Ok(PermMorphism { source, target, matrix: out })
    }

    /// (coev: 1 → X ⊗ X, ev: X ⊗ X → 1), both diagonal indicators.
    pub fn duality_data(&self, x: &PermObject) -> Result<(PermMorphism, PermMorphism)> {
        let n = x.factors.len();
        let wires: Vec<usize> = (0..n).chain(0..n).collect();
        let xx = x.tensor(x);
        let coev = self.wiring(&xx, &wires, &PermObject::unit(), &[])?;
        let ev = self.wiring(&PermObject::unit(), &[], &xx, &wires)?;
        Ok((coev, ev))
    }

    /// ev ∘ σ ∘ coev.
    pub fn categorical_dim(&self, x: &PermObject) -> Result<Scalar> {
        let (coev, ev) = self.duality_data(x)?;
        let sigma = self.symmetry(x, x)?;
        Ok(self.scalar(&self.chain(&[&ev, &sigma, &coev])?))
    }

    /// The value of an endomorphism of the unit.
    pub fn scalar(&self, f: &PermMorphism) -> Scalar {
        f.matrix.entries().values().next().cloned().unwrap_or_else(Scalar::zero)
    }

    /// Orbit indicators spanning Hom(1, Vec_X).
    pub fn gamma_invariants(&self, x: &PermObject) -> Vec<PermMorphism> {
        self.hom_basis(&PermObject::unit(), x)
    }

    /// The unit invariant η_X: 1 → Vec_X, constant 1.
    pub fn unit_invariant(&self, x: &PermObject) -> Result<PermMorphism> {
        let wires: Vec<usize> = (0..x.factors.len()).collect();
        self.wiring(x, &wires, &PermObject::unit(), &[])
    }

    /// Integration α_X: Vec_X → 1.
    pub fn integration(&self, x: &PermObject) -> Result<PermMorphism> {
        let wires: Vec<usize> = (0..x.factors.len()).collect();
        self.wiring(&PermObject::unit(), &[], x, &wires)
    }

    /// A_f = f_* for a map of G-objects.
    pub fn pushforward(&self, f: &GMap) -> PermMorphism {
        PermMorphism {
            source: PermObject::new(f.source.clone()),
            target: PermObject::new(f.target.clone()),
            matrix: InvariantMatrix::pushforward(self.backend, f),
        }
    }

    /// B_f = f^*.
    pub fn pullback(&self, f: &GMap) -> PermMorphism {
        PermMorphism {
            source: PermObject::new(f.target.clone()),
            target: PermObject::new(f.source.clone()),
            matrix: InvariantMatrix::pullback(self.backend, f),
        }
    }
}

/// Records `lhs = rhs`; a failure names the first differing orbit and both values.
pub fn record_equal(check: &mut Check, identity: impl Into<String>, lhs: Result<PermMorphism>, rhs: Result<PermMorphism>) {
    let identity = identity.into();
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            if l.source != r.source || l.target != r.target || l.matrix.target != r.matrix.target {
                check.fail(Witness::new(identity, format!("{} -> {}", l.source, l.target), format!("{} -> {}", r.source, r.target)));
                return;
            }
            let diff = l.matrix.first_difference(&r.matrix);
            check.record(diff.is_none(), || {
                let (key, a, b) = diff.clone().expect("a difference");
                Witness::new(identity, a, b).with_labels(vec![l.matrix.describe_key(&key)])
            });
        }
        (Err(e), _) | (_, Err(e)) => check.fail(Witness::new(identity, e, "a value")),
    }
}

/// Maps from some atom to each factor of `p`, given a map into atom `pos` of `p`.
fn legs_through(b: &Backend, p: &Product, pos: usize, into: &MapPattern) -> Vec<(usize, MapPattern)> {
    let atom = p.object.atoms()[pos];
    p.legs[pos]
        .iter()
        .enumerate()
        .map(|(k, leg)| (leg.atom, b.then(into, atom, &leg.map, p.factors[k].atoms()[leg.atom])))
        .collect()
}
