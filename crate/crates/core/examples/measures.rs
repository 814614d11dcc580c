//! Solving for measures: a one-parameter family on the symmetric backend and
//! a unique measure on the line backend.

use oligoperm::coeff::Field;
use oligoperm::gset::Backend;
use oligoperm::measure::{check_measure_axioms, solve_measures};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sym = Backend::sym();
    let fam = solve_measures(&sym, 4, Field::RatFuncQ('t'))?;
    println!("sym: parameters {:?}", fam.params);
    for (atom, value) in &fam.atoms {
        println!("  mu({atom}) = {value}");
    }
    let at_six = fam.specialize(&sym, &num_rational::BigRational::from_integer(6.into()))?;
    println!("{}", at_six.to_text());

    let line = Backend::line();
    let fam = solve_measures(&line, 4, Field::Rational)?;
    println!("line: parameters {:?}, residual {:?}", fam.params, fam.residual);
    for (class, value) in &fam.fibers {
        println!("  fiber {class} = {value}");
    }
    let m = fam.generic_measure(&line);
    let report = check_measure_axioms(&line, &m, 3);
    println!("{report}");
    Ok(())
}
