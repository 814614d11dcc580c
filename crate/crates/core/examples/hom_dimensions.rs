//! Hom dimensions between atoms: Delannoy numbers on the line, orbit counts on
//! the symmetric backend.

use oligoperm::coeff::Field;
use oligoperm::gset::{Atom, Backend, GObject};
use oligoperm::measure::solve_measures;
use oligoperm::permcat::{PermCat, PermObject};

fn table(name: &str, b: &Backend, field: Field, atom: fn(usize) -> Atom) -> Result<(), Box<dyn std::error::Error>> {
    let m = solve_measures(b, 3, field)?.generic_measure(b);
    let cat = PermCat::new(b, &m);
    println!("{name}");
    for n in 0..=4 {
        let row: Vec<String> = (0..=4)
            .map(|k| {
                let x = PermObject::new(GObject::atom(atom(n)));
                let y = PermObject::new(GObject::atom(atom(k)));
                format!("{:>4}", cat.hom_dim(&x, &y))
            })
            .collect();
        println!("{}", row.join(""));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    table("line", &Backend::line(), Field::Rational, Atom::Line)?;
    table("sym", &Backend::sym(), Field::RatFuncQ('t'), Atom::Sym)
}
