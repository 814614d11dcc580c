//! E-idempotents on Vec(Y) and the subalgebras they cut out.

use oligoperm::coeff::{Field, Scalar};
use oligoperm::frob::{e_idempotent_check, gamma_from_orbits, gamma_of_projection, EIdempotent};
use oligoperm::gset::{Atom, Backend, FiniteGroup, GMap, GObject, OrbitLabel};
use oligoperm::measure::{solve_measures, Measure};
use oligoperm::permcat::PermCat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = Backend::sym();
    let m = solve_measures(&b, 3, Field::RatFuncQ('t'))?.generic_measure(&b);
    let cat = PermCat::new(&b, &m);
    let y = GObject::atom(Atom::Sym(2));
    let first = gamma_from_orbits(
        &cat,
        &y,
        &[
            (0, 0, OrbitLabel::Matching(vec![(0, 0)]), Scalar::one()),
            (0, 0, OrbitLabel::Matching(vec![(0, 0), (1, 1)]), Scalar::one()),
        ],
    )?;
    for (name, e) in [("diagonal", EIdempotent::diagonal(&cat, &y)?), ("everything", EIdempotent::everything(&cat, &y)?), ("first coordinate", first)] {
        let r = e_idempotent_check(&cat, &e)?;
        println!("{name}: pass = {}", r.pass());
    }

    let s3 = Backend::finite(FiniteGroup::parse("S3")?);
    let counting = Measure::counting(&s3, 6)?;
    let cat = PermCat::new(&s3, &counting);
    let atoms = s3.atoms_up_to(6);
    for &src in &atoms {
        for &dst in &atoms {
            for p in s3.hom(src, dst) {
                let f = GMap::of_atoms(src, dst, p);
                let (_, r) = gamma_of_projection(&cat, &f)?;
                let note = r.get("B^gamma = f^*(k[X])").and_then(|c| c.note.clone()).unwrap_or_default();
                println!("{f}: {note}");
            }
        }
    }
    Ok(())
}
