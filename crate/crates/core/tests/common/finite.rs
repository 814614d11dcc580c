//! Explicit permutation-matrix model of a finite group's G-sets.

use num_rational::BigRational;
use num_traits::{One, Zero};
use oligoperm::frob::build_frobenius;
use oligoperm::gset::{Atom, Backend, GObject, MapPattern};
use oligoperm::linmat::{expand_finite, matmul, InvariantMatrix};
use oligoperm::measure::Measure;
use oligoperm::permcat::{PermCat, PermMorphism, PermObject};

use super::*;

fn expand(b: &Backend, m: &InvariantMatrix) -> Mat {
    expand_finite(b, m)
        .unwrap()
        .into_iter()
        .map(|row| row.into_iter().map(|s| s.as_rational().unwrap()).collect())
        .collect()
}

/// Each group element as a permutation of the points of `x`, atoms in order.
fn action(b: &Backend, x: &GObject) -> Vec<Vec<usize>> {
    let g = b.group().unwrap();
    (0..g.order())
        .map(|e| {
            let mut perm = Vec::new();
            let mut offset = 0;
            for &a in x.atoms() {
                let Atom::Finite(k) = a else { unreachable!() };
                let space = g.class(k);
                perm.extend((0..space.size()).map(|c| offset + space.act(e, c)));
                offset += space.size();
            }
            perm
        })
        .collect()
}

fn offsets(b: &Backend, x: &GObject) -> Vec<usize> {
    x.atoms().iter().scan(0, |acc, &a| {
        let here = *acc;
        *acc += b.size(a);
        Some(here)
    }).collect()
}

/// Points of a tensor product as tuples of points of its factors.
fn factor_points(b: &Backend, x: &PermObject) -> Vec<Vec<usize>> {
    let p = x.product(b);
    let offs: Vec<Vec<usize>> = p.factors.iter().map(|f| offsets(b, f)).collect();
    let mut out = Vec::new();
    for (pos, &a) in p.object.atoms().iter().enumerate() {
        for c in 0..b.size(a) {
            let tuple = p.legs[pos]
                .iter()
                .enumerate()
                .map(|(k, leg)| {
                    let fa = p.factors[k].atoms()[leg.atom];
                    match b.then(&MapPattern::Point(c), a, &leg.map, fa) {
                        MapPattern::Point(q) => offs[k][leg.atom] + q,
                        _ => unreachable!(),
                    }
                })
                .collect();
            out.push(tuple);
        }
    }
    out
}

fn indicator(cond: bool) -> BigRational {
    if cond {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

pub fn total_oracle(b: &Backend, extra: &[GObject]) {
    let m = Measure::counting(b, 6).unwrap();
    let cat = PermCat::new(b, &m);
    let mut objects: Vec<GObject> = b.atoms_up_to(6).into_iter().map(GObject::atom).collect();
    objects.extend(extra.iter().cloned());

    for x in &objects {
        assert_eq!(m.mu_object(b, x).unwrap().as_rational().unwrap(), q(x.atoms().iter().map(|&a| b.size(a) as i64).sum()));
        for y in &objects {
            let dim = cat.hom_dim(&PermObject::new(x.clone()), &PermObject::new(y.clone()));
            assert_eq!(dim, commutant_dim(&action(b, x), &action(b, y)), "Hom({x}, {y})");
            for basis in InvariantMatrix::basis(b, y, x) {
                // each basis matrix is invariant
                let e = expand(b, &basis);
                for (gx, gy) in action(b, x).iter().zip(action(b, y)) {
                    assert_eq!(mat_mul(&perm_matrix(&gy), &e), mat_mul(&e, &perm_matrix(gx)));
                }
            }
        }
    }

    for z in &objects {
        for y in &objects {
            for x in &objects {
                for bm in InvariantMatrix::basis(b, z, y) {
                    for am in InvariantMatrix::basis(b, y, x) {
                        let ours = expand(b, &matmul(b, &m, &bm, &am).unwrap());
                        assert_eq!(ours, mat_mul(&expand(b, &bm), &expand(b, &am)), "{z} <- {y} <- {x}");
                    }
                }
            }
        }
    }

    let small: Vec<&GObject> = objects.iter().filter(|o| o.atoms().iter().map(|&a| b.size(a)).sum::<usize>() <= 3).collect();
    for &x in &small {
        for &y in &small {
            for &x2 in &small {
                for &y2 in &small {
                    check_tensor(b, &cat, x, y, x2, y2);
                }
            }
        }
    }

    for x in &objects {
        check_structure(b, &cat, x);
    }
}

fn check_tensor(b: &Backend, cat: &PermCat, x: &GObject, y: &GObject, x2: &GObject, y2: &GObject) {
    let (px, py, px2, py2) = [x, y, x2, y2].map(|o| PermObject::new(o.clone())).into();
    let source_points = factor_points(b, &px.tensor(&px2));
    let target_points = factor_points(b, &py.tensor(&py2));
    for f in cat.hom_basis(&px, &py) {
        for g in cat.hom_basis(&px2, &py2) {
            let t = expand(b, &cat.tensor(&f, &g).unwrap().matrix);
            let (ef, eg) = (expand(b, &f.matrix), expand(b, &g.matrix));
            for (r, tp) in target_points.iter().enumerate() {
                for (c, sp) in source_points.iter().enumerate() {
                    assert_eq!(t[r][c], &ef[tp[0]][sp[0]] * &eg[tp[1]][sp[1]]);
                }
            }
        }
    }
}

fn check_structure(b: &Backend, cat: &PermCat, x: &GObject) {
    let a = PermObject::new(x.clone());
    let pairs = factor_points(b, &a.tensor(&a));
    let n: usize = x.atoms().iter().map(|&at| b.size(at)).sum();
    let row = |m: &PermMorphism| expand(b, &m.matrix);

    let (coev, ev) = cat.duality_data(&a).unwrap();
    let diag: Vec<BigRational> = pairs.iter().map(|p| indicator(p[0] == p[1])).collect();
    assert_eq!(row(&ev), vec![diag.clone()]);
    assert_eq!(row(&coev), diag.iter().map(|v| vec![v.clone()]).collect::<Mat>());
    assert_eq!(cat.categorical_dim(&a).unwrap().as_rational().unwrap(), q(n as i64));

    let f = build_frobenius(cat, x).unwrap();
    let mult: Mat = (0..n).map(|z| pairs.iter().map(|p| indicator(p[0] == z && p[1] == z)).collect()).collect();
    assert_eq!(row(&f.mult), mult);
    assert_eq!(row(&f.comult), (0..pairs.len()).map(|r| (0..n).map(|z| mult[z][r].clone()).collect()).collect::<Mat>());
    assert_eq!(row(&f.unit), vec![vec![BigRational::one()]; n]);
    assert_eq!(row(&f.counit), vec![vec![BigRational::one(); n]]);
    assert_eq!(row(&cat.identity(&a)), identity(n));
}
