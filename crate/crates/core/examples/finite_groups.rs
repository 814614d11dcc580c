//! A finite permutation group: its orbit atoms, the counting measure, and hom
//! dimensions that agree with ordinary permutation modules.

use oligoperm::gset::{Backend, FiniteGroup, GObject};
use oligoperm::measure::Measure;
use oligoperm::permcat::{PermCat, PermObject};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "S3".into());
    let b = Backend::finite(FiniteGroup::parse(&spec)?);
    let m = Measure::counting(&b, 6)?;
    let cat = PermCat::new(&b, &m);
    let atoms = b.atoms_up_to(6);
    for &a in &atoms {
        let x = PermObject::new(GObject::atom(a));
        println!("{a}: size {}, dim {}", b.size(a), cat.categorical_dim(&x)?);
    }
    for &a in &atoms {
        let row: Vec<String> = atoms
            .iter()
            .map(|&c| format!("{:>3}", cat.hom_dim(&PermObject::new(GObject::atom(a)), &PermObject::new(GObject::atom(c)))))
            .collect();
        println!("{}", row.join(""));
    }
    Ok(())
}
