use serde::Serialize;

use std::collections::HashMap;

use super::{MapKey, Measure};
use crate::error::Result;
use crate::gset::Backend;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub regular: bool,
    /// Bounded evidence only: surjectivity of pushforwards among invariants.
    pub normal_within_bound: bool,
}

/// Regular: every atom value within bound is a unit. Normal within bound: for
/// every atom map f and atom c within bound, (id_c × f)_* is onto on invariants.
pub fn classify_measure(backend: &Backend, m: &Measure, bound: usize) -> Result<Classification> {
    let atoms = backend.atoms_up_to(bound);
    let mut regular = true;
    for &a in &atoms {
        regular &= !m.mu_atom(backend, a)?.is_zero();
    }
    let mut normal = true;
    let mut vanishes: HashMap<MapKey, bool> = HashMap::new();
    for &a in &atoms {
        for &b in &atoms {
            for f in backend.hom(a, b) {
                for &c in &atoms {
                    // each orbit of c × a pushes forward to a multiple of one orbit of c × b
                    let target = backend.product(c, b);
                    let mut hit = vec![false; target.orbits.len()];
                    for o in backend.product(c, a).orbits.iter() {
                        let g = backend.then(&o.proj2, a, &f, b);
                        let (w, iso) = backend.pair_into(&o.proj1, c, &g, b);
                        let key = m.map_key(backend, o.atom, target.orbits[w].atom, &iso)?;
                        let zero = match vanishes.get(&key) {
                            Some(&z) => z,
                            None => {
                                let z = m.key_value(&key)?.is_zero();
                                vanishes.insert(key, z);
                                z
                            }
                        };
                        if !zero {
                            hit[w] = true;
                        }
                    }
                    normal &= hit.iter().all(|&h| h);
                }
            }
        }
    }
    Ok(Classification { regular, normal_within_bound: normal })
}
