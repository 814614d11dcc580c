//! Finite groups: every construction against explicit permutation matrices.

mod common;

use common::finite::total_oracle;
use oligoperm::gset::{Atom, Backend, FiniteGroup, GObject};

#[test]
fn s3_matches_permutation_matrices() {
    let b = Backend::finite(FiniteGroup::parse("S3").unwrap());
    let natural = GObject::new(b.group().unwrap().natural_orbits().into_iter().map(Atom::Finite).collect());
    total_oracle(&b, &[natural]);
}

#[test]
fn intransitive_c2_matches_permutation_matrices() {
    let b = Backend::finite(FiniteGroup::parse("(1 2)(3 4)@4").unwrap());
    let natural = GObject::new(b.group().unwrap().natural_orbits().into_iter().map(Atom::Finite).collect());
    assert_eq!(natural.len(), 2);
    total_oracle(&b, &[natural]);
}
