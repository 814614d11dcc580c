//! The pre-Galois axioms on finite and infinite backends.

use oligoperm::gset::{pregalois_check, Backend, FiniteGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (b, bound) in [(Backend::finite(FiniteGroup::parse("S3")?), 6), (Backend::sym(), 3), (Backend::line(), 3)] {
        println!("{}", b.id());
        for r in pregalois_check(&b, bound) {
            let status = if r.pass { "ok  " } else { "FAIL" };
            println!("  {status} ({}) {}", r.axiom, r.witness.as_deref().unwrap_or(""));
        }
    }
    Ok(())
}
