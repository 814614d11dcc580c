//! Linearization into the permutation-module category, and reading the measure
//! back off categorical dimensions.

use oligoperm::coeff::Field;
use oligoperm::gset::{Atom, Backend, GObject};
use oligoperm::measure::solve_measures;
use oligoperm::permcat::{check_linearization, PermCat, PermObject};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (b, field, point) in [(Backend::sym(), Field::RatFuncQ('t'), Atom::Sym(1)), (Backend::line(), Field::Rational, Atom::Line(1))] {
        let m = solve_measures(&b, 3, field)?.generic_measure(&b);
        let cat = PermCat::new(&b, &m);
        for a in b.atoms_up_to(3) {
            let x = PermObject::new(GObject::atom(a));
            println!("dim Vec({a}) = {}", cat.categorical_dim(&x)?);
        }
        let x = PermObject::new(GObject::atom(point));
        let sq = x.tensor(&x);
        println!("dim of the square = {}", cat.categorical_dim(&sq)?);
        println!("{}", check_linearization(&b, &m, 3));
    }
    Ok(())
}
