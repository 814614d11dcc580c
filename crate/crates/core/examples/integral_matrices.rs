//! Integral matrix multiplication in the symmetric backend, and what breaks
//! when the measure is perturbed.

use oligoperm::coeff::{Field, Scalar};
use oligoperm::gset::{Atom, Backend, GObject, OrbitLabel};
use oligoperm::linmat::{check_associativity, matmul, AssocOptions, InvariantMatrix};
use oligoperm::measure::solve_measures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = Backend::sym();
    let m = solve_measures(&b, 3, Field::RatFuncQ('t'))?.generic_measure(&b);
    let x = GObject::atom(Atom::Sym(1));
    let ne = InvariantMatrix::indicator(x.clone(), x, (0, 0, OrbitLabel::Matching(vec![])));
    println!("e_ne * e_ne =\n{}", matmul(&b, &m, &ne, &ne)?);

    let opts = AssocOptions { bound: 3, ..AssocOptions::default() };
    let start = std::time::Instant::now();
    let ok = check_associativity(&b, &m, opts);
    println!("{} instances, pass = {} ({:?})", ok.instances, ok.pass, start.elapsed());
    if let Some(w) = &ok.witness {
        println!("witness: {w}");
    }

    let t = Scalar::var(Field::RatFuncQ('t'));
    let bumped = &(&t * &(&t - &Scalar::one())) + &Scalar::one();
    let bad = m.with_atom(Atom::Sym(2), bumped);
    let c = check_associativity(&b, &bad, opts);
    println!("perturbed: pass = {}", c.pass);
    if let Some(w) = &c.witness {
        println!("witness: {w}");
    }
    Ok(())
}
