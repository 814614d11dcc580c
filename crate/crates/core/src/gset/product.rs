//! Iterated products of G-objects with their projections, and fiber products.

use std::collections::HashMap;

use super::{Atom, Backend, GMap, GObject, MapPattern};
use crate::error::{Error, Result};

/// Projection of a product atom onto one factor: target atom position and map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Leg {
    pub atom: usize,
    pub map: MapPattern,
}

#[derive(Clone, Debug)]
enum Shape {
    Unit,
    Leaf,
    Pair { left: Box<Product>, right: Box<Product>, index: HashMap<(usize, usize, usize), usize> },
}

/// X₁ × ⋯ × Xₙ, nested to the left, with every atom's projections to the factors.
#[derive(Clone, Debug)]
pub struct Product {
    pub object: GObject,
    /// `legs[i][k]` projects atom `i` onto factor `k`.
    pub legs: Vec<Vec<Leg>>,
    pub factors: Vec<GObject>,
    shape: Shape,
}

impl Product {
    /// The empty product, i.e. the terminal object.
    pub fn unit(backend: &Backend) -> Self {
        Product { object: GObject::atom(backend.terminal()), legs: vec![Vec::new()], factors: Vec::new(), shape: Shape::Unit }
    }

    pub fn leaf(backend: &Backend, x: &GObject) -> Self {
        let legs = x
            .atoms()
            .iter()
            .enumerate()
            .map(|(i, &a)| vec![Leg { atom: i, map: backend.identity(a) }])
            .collect();
        Product { object: x.clone(), legs, factors: vec![x.clone()], shape: Shape::Leaf }
    }

    pub fn pair(backend: &Backend, left: &Product, right: &Product) -> Self {
        let mut entries: Vec<(Atom, (usize, usize, usize), Vec<Leg>)> = Vec::new();
        for (pa, &a) in left.object.atoms().iter().enumerate() {
            for (pb, &b) in right.object.atoms().iter().enumerate() {
                let table = backend.product(a, b);
                for (o, orbit) in table.orbits.iter().enumerate() {
                    let lift = |side: &Product, pos: usize, proj: &MapPattern, via: Atom| -> Vec<Leg> {
                        side.legs[pos]
                            .iter()
                            .enumerate()
                            .map(|(k, leg)| Leg {
                                atom: leg.atom,
                                map: backend.then(proj, via, &leg.map, side.factors[k].atoms()[leg.atom]),
                            })
                            .collect()
                    };
                    let mut legs = lift(left, pa, &orbit.proj1, a);
                    legs.extend(lift(right, pb, &orbit.proj2, b));
                    entries.push((orbit.atom, (pa, pb, o), legs));
                }
            }
        }
        entries.sort_by_key(|e| e.0);
        let index = entries.iter().enumerate().map(|(i, e)| (e.1, i)).collect();
        let object = GObject { atoms: entries.iter().map(|e| e.0).collect() };
        let legs = entries.into_iter().map(|e| e.2).collect();
        let factors = left.factors.iter().chain(&right.factors).cloned().collect();
        Product {
            object,
            legs,
            factors,
            shape: Shape::Pair { left: Box::new(left.clone()), right: Box::new(right.clone()), index },
        }
    }

    /// ((X₁ × X₂) × X₃) × ⋯
    pub fn of(backend: &Backend, factors: &[&GObject]) -> Self {
        match factors {
            [] => Product::unit(backend),
            [x] => Product::leaf(backend, x),
            [rest @ .., last] => Product::pair(backend, &Product::of(backend, rest), &Product::leaf(backend, last)),
        }
    }

    /// Finds the product atom through which a map out of `tau` with the given
    /// factor components passes, with the map `tau → that atom`.
    pub fn locate(&self, backend: &Backend, tau: Atom, maps: &[(usize, MapPattern)]) -> (usize, MapPattern) {
        match &self.shape {
            Shape::Unit => (0, backend.to_terminal(tau)),
            Shape::Leaf => maps[0].clone(),
            Shape::Pair { left, right, index } => {
                let (lm, rm) = maps.split_at(left.factors.len());
                let (pa, ma) = left.locate(backend, tau, lm);
                let (pb, mb) = right.locate(backend, tau, rm);
                let (o, iso) = backend.pair_into(&ma, left.object.atoms()[pa], &mb, right.object.atoms()[pb]);
                (index[&(pa, pb, o)], iso)
            }
        }
    }

    /// For a binary product: the position of orbit `o` of `left[pa] × right[pb]`.
    pub fn position(&self, pa: usize, pb: usize, o: usize) -> Option<usize> {
        match &self.shape {
            Shape::Pair { index, .. } => index.get(&(pa, pb, o)).copied(),
            _ => None,
        }
    }

    /// The projection of the whole product onto factor `k`.
    pub fn projection(&self, k: usize) -> GMap {
        GMap {
            source: self.object.clone(),
            target: self.factors[k].clone(),
            assign: self.legs.iter().map(|l| (l[k].atom, l[k].map.clone())).collect(),
        }
    }
}

/// X ×_Z Y with its two projections.
pub fn fiber_product(backend: &Backend, f: &GMap, g: &GMap) -> Result<(GObject, GMap, GMap)> {
    if f.target != g.target {
        return Err(Error::ShapeMismatch(format!("fiber product over {} and {}", f.target, g.target)));
    }
    let mut entries = Vec::new();
    for (i, &a) in f.source.atoms().iter().enumerate() {
        for (j, &b) in g.source.atoms().iter().enumerate() {
            let ((zf, pf), (zg, pg)) = (&f.assign[i], &g.assign[j]);
            if zf != zg {
                continue;
            }
            let z = f.target.atoms()[*zf];
            for o in backend.product(a, b).orbits.iter() {
                if backend.then(&o.proj1, a, pf, z) == backend.then(&o.proj2, b, pg, z) {
                    entries.push((o.atom, (i, o.proj1.clone()), (j, o.proj2.clone())));
                }
            }
        }
    }
    entries.sort_by_key(|e| e.0);
    let object = GObject { atoms: entries.iter().map(|e| e.0).collect() };
    let p1 = GMap { source: object.clone(), target: f.source.clone(), assign: entries.iter().map(|e| e.1.clone()).collect() };
    let p2 = GMap { source: object.clone(), target: g.source.clone(), assign: entries.into_iter().map(|e| e.2).collect() };
    Ok((object, p1, p2))
}

/// f × g : X × X' → Y × Y', as a map between the binary products.
pub fn product_map(backend: &Backend, f: &GMap, g: &GMap) -> GMap {
    let source = Product::of(backend, &[&f.source, &g.source]);
    let target = Product::of(backend, &[&f.target, &g.target]);
    let assign = source
        .object
        .atoms()
        .iter()
        .zip(&source.legs)
        .map(|(&s, legs)| {
            let image = |h: &GMap, leg: &Leg| {
                let (t, p) = &h.assign[leg.atom];
                (*t, backend.then(&leg.map, h.source.atoms()[leg.atom], p, h.target.atoms()[*t]))
            };
            target.locate(backend, s, &[image(f, &legs[0]), image(g, &legs[1])])
        })
        .collect();
    GMap { source: source.object, target: target.object, assign }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_pair_of_first_coordinate() {
        let b = Backend::sym();
        let f = GMap::of_atoms(Atom::Sym(2), Atom::Sym(1), MapPattern::Select(vec![0]));
        let (obj, _, _) = fiber_product(&b, &f, &f).unwrap();
        assert_eq!(obj.atoms(), &[Atom::Sym(2), Atom::Sym(3)]);
    }

    #[test]
    fn fiber_product_over_point_is_product() {
        let b = Backend::sym();
        let f = GMap::of_atoms(Atom::Sym(1), Atom::Sym(0), MapPattern::Select(vec![]));
        let (obj, _, _) = fiber_product(&b, &f, &f).unwrap();
        assert_eq!(obj.atoms(), &[Atom::Sym(1), Atom::Sym(2)]);
    }

    #[test]
    fn kernel_pair_of_identity_is_diagonal() {
        let b = Backend::line();
        let x = GObject::atom(Atom::Line(2));
        let id = GMap::identity(&b, &x);
        let (obj, p1, p2) = fiber_product(&b, &id, &id).unwrap();
        assert_eq!(obj, x);
        assert_eq!(p1, id);
        assert_eq!(p2, id);
    }

    #[test]
    fn triple_product_legs_locate_back() {
        let b = Backend::sym();
        let x = GObject::atom(Atom::Sym(1));
        let p = Product::of(&b, &[&x, &x, &x]);
        // 1 + 3 + 1 orbits: all equal, three ways for one pair equal, all distinct
        assert_eq!(p.object.len(), 5);
        for (i, (&a, legs)) in p.object.atoms().iter().zip(&p.legs).enumerate() {
            let maps: Vec<(usize, MapPattern)> = legs.iter().map(|l| (l.atom, l.map.clone())).collect();
            let (j, iso) = p.locate(&b, a, &maps);
            assert_eq!((j, iso), (i, b.identity(a)));
        }
    }

    #[test]
    fn product_map_of_identities() {
        let b = Backend::finite(super::super::FiniteGroup::parse("S3").unwrap());
        let x = GObject::new(vec![Atom::Finite(1), Atom::Finite(2)]);
        let id = GMap::identity(&b, &x);
        let pm = product_map(&b, &id, &id);
        assert_eq!(pm, GMap::identity(&b, &pm.source));
    }
}
