//! The Frobenius algebra on Vec(X) and its structure checks.

use oligoperm::coeff::Field;
use oligoperm::frob::{build_frobenius, check_perfect_pairing, splitting_idempotent, verify_frobenius};
use oligoperm::gset::{Atom, Backend, GObject};
use oligoperm::measure::solve_measures;
use oligoperm::permcat::PermCat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = Backend::sym();
    let m = solve_measures(&b, 3, Field::RatFuncQ('t'))?.generic_measure(&b);
    let cat = PermCat::new(&b, &m);
    let x = GObject::new(vec![Atom::Sym(1), Atom::Sym(2)]);
    let f = build_frobenius(&cat, &x)?;
    println!("counit on {x}:\n{}", f.counit);

    let mut report = verify_frobenius(&cat, &f);
    report.extend(check_perfect_pairing(&cat, &f));
    report.extend(splitting_idempotent(&cat, &f)?.1);
    println!("{report}");
    Ok(())
}
