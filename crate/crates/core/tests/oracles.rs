//! Cross-checks against brute-force finite models.

mod common;

use common::*;
use num_rational::BigRational;
use num_traits::{One, Zero};
use oligoperm::coeff::{Field, Scalar};
use oligoperm::gset::{Atom, Backend, FiberClass, OrbitLabel};
use oligoperm::linmat::{matmul, InvariantMatrix};
use oligoperm::measure::solve_measures;
use oligoperm::permcat::{PermCat, PermObject};

fn rat(s: &Scalar) -> BigRational {
    s.as_rational().expect("a rational value")
}

#[test]
fn sym_family_counts_injections() {
    let b = Backend::sym();
    let fam = solve_measures(&b, 4, Field::Rational).unwrap();
    assert_eq!(fam.params.len(), 1);
    assert!(fam.residual.is_empty());
    for big_n in [5, 7] {
        let m = fam.specialize(&b, &q(big_n)).unwrap();
        for n in 0..=4 {
            let count = injections(n, big_n as usize).len() as i64;
            assert_eq!(rat(&m.mu_atom(&b, Atom::Sym(n)).unwrap()), q(count), "n = {n}, N = {big_n}");
        }
    }
}

#[test]
fn line_measure_solves_the_decomposition_equations() {
    // ι = 2ι + 1 fixes the interval; a ray is order-isomorphic to the line,
    // so m = 2r + 1 with r = m; r = r + ι + 1 must then hold
    let iota = q(-1);
    let m = q(-1);
    let r = m.clone();
    assert_eq!(&iota * q(2) + q(1), iota);
    assert_eq!(&r + &iota + q(1), r);
    assert_eq!(&r * q(2) + q(1), m);

    let b = Backend::line();
    let fam = solve_measures(&b, 4, Field::Rational).unwrap();
    assert!(fam.params.is_empty() && fam.residual.is_empty());
    assert_eq!(rat(&fam.fibers[&FiberClass::Ray]), r);
    assert_eq!(rat(&fam.fibers[&FiberClass::Interval]), iota);
    let mut expected = BigRational::one();
    for n in 0..=4 {
        assert_eq!(rat(&fam.atoms[&Atom::Line(n)]), expected, "line:inc[{n}]");
        // ℚ^(n+1) fibers over ℚ^(n) in rays
        expected = if n == 0 { m.clone() } else { &expected * &r };
    }
}

#[test]
fn line_hom_dimensions_are_delannoy() {
    let b = Backend::line();
    let m = solve_measures(&b, 3, Field::Rational).unwrap().generic_measure(&b);
    let cat = PermCat::new(&b, &m);
    for n in 0..=3 {
        for k in 0..=3 {
            let x = PermObject::new(oligoperm::gset::GObject::atom(Atom::Line(n)));
            let y = PermObject::new(oligoperm::gset::GObject::atom(Atom::Line(k)));
            assert_eq!(cat.hom_dim(&x, &y) as u64, delannoy(n, k), "D({n}, {k})");
        }
    }
    assert_eq!((delannoy(1, 1), delannoy(2, 2), delannoy(3, 3)), (3, 13, 63));
}

#[test]
fn sym_hom_dimensions_count_orbits_in_eight_points() {
    let b = Backend::sym();
    let m = solve_measures(&b, 3, Field::RatFuncQ('t')).unwrap().generic_measure(&b);
    let cat = PermCat::new(&b, &m);
    let gens = symmetric_generators(8);
    for n in 0..=3 {
        for k in n..=3 {
            let expected = pair_orbits(&injections(n, 8), &injections(k, 8), &gens);
            let x = PermObject::new(oligoperm::gset::GObject::atom(Atom::Sym(n)));
            let y = PermObject::new(oligoperm::gset::GObject::atom(Atom::Sym(k)));
            assert_eq!(cat.hom_dim(&x, &y), expected, "Hom(sym:inj[{n}], sym:inj[{k}])");
            assert_eq!(cat.hom_dim(&y, &x), expected);
        }
    }
}

#[test]
fn line_hom_dimensions_count_orbits_of_increasing_tuples() {
    // order-preserving relabelings of {0..N} for N large enough act like Aut(ℚ, <)
    // on pairs of small tuples: count classes of relative orders directly
    for n in 0..=3 {
        for k in 0..=3 {
            let mut classes = std::collections::BTreeSet::new();
            for x in increasing(n, n + k) {
                for y in increasing(k, n + k) {
                    let mut all: Vec<usize> = x.iter().chain(&y).copied().collect();
                    all.sort_unstable();
                    all.dedup();
                    let rank = |v: &usize| all.binary_search(v).unwrap();
                    classes.insert((x.iter().map(rank).collect::<Vec<_>>(), y.iter().map(rank).collect::<Vec<_>>()));
                }
            }
            assert_eq!(classes.len() as u64, delannoy(n, k));
        }
    }
}

#[test]
fn off_diagonal_square_evaluates_to_literal_products() {
    let b = Backend::sym();
    let f = Field::RatFuncQ('t');
    let m = solve_measures(&b, 3, f).unwrap().generic_measure(&b);
    let x = oligoperm::gset::GObject::atom(Atom::Sym(1));
    let eq = OrbitLabel::Matching(vec![(0, 0)]);
    let ne = OrbitLabel::Matching(vec![]);
    let e_ne = InvariantMatrix::indicator(x.clone(), x.clone(), (0, 0, ne.clone()));
    let sq = matmul(&b, &m, &e_ne, &e_ne).unwrap();
    let t = Scalar::var(f);
    assert_eq!(sq.entry(&(0, 0, eq.clone())), &t - &Scalar::one());
    assert_eq!(sq.entry(&(0, 0, ne.clone())), &t - &Scalar::int(2));
    for big_n in 5..=8usize {
        let j_minus_i: Mat = (0..big_n)
            .map(|i| (0..big_n).map(|j| if i == j { BigRational::zero() } else { BigRational::one() }).collect())
            .collect();
        let literal = mat_mul(&j_minus_i, &j_minus_i);
        let at = |label: &OrbitLabel| rat(&sq.entry(&(0, 0, label.clone())).evaluate(big_n as i64).unwrap());
        for (i, row) in literal.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { at(&eq) } else { at(&ne) });
            }
        }
    }
}
