use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{matmul, InvariantMatrix, OrbitKey};
use crate::error::Result;
use crate::gset::{Backend, GObject};
use crate::measure::Measure;
use crate::report::{Check, Witness};

#[derive(Clone, Copy, Debug)]
pub struct AssocOptions {
    pub bound: usize,
    pub seed: u64,
    /// Quadruples with at most this many basis triples are checked exhaustively.
    pub exhaustive_limit: usize,
    /// Triples drawn for larger quadruples.
    pub samples: usize,
}

impl Default for AssocOptions {
    fn default() -> Self {
        AssocOptions { bound: 3, seed: 0, exhaustive_limit: 256, samples: 32 }
    }
}

/// (C B) A = C (B A) on orbit indicators C: W ← Z, B: Z ← Y, A: Y ← X for
/// atoms W, Z, Y, X within bound.
pub fn check_associativity(backend: &Backend, m: &Measure, opts: AssocOptions) -> Check {
    let mut check = Check::new("composition associativity");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let objects: Vec<GObject> = backend.atoms_up_to(opts.bound).into_iter().map(GObject::atom).collect();
    for w in &objects {
        for z in &objects {
            let kc = InvariantMatrix::orbit_keys(backend, w, z);
            for y in &objects {
                let kb = InvariantMatrix::orbit_keys(backend, z, y);
                for x in &objects {
                    let ka = InvariantMatrix::orbit_keys(backend, y, x);
                    let total = kc.len() * kb.len() * ka.len();
                    let triples: Vec<(usize, usize, usize)> = if total <= opts.exhaustive_limit {
                        (0..total).map(|t| (t / (kb.len() * ka.len()), (t / ka.len()) % kb.len(), t % ka.len())).collect()
                    } else {
                        (0..opts.samples)
                            .map(|_| (rng.gen_range(0..kc.len()), rng.gen_range(0..kb.len()), rng.gen_range(0..ka.len())))
                            .collect()
                    };
                    for (ic, ib, ia) in triples {
                        let c = InvariantMatrix::indicator(w.clone(), z.clone(), kc[ic].clone());
                        let b = InvariantMatrix::indicator(z.clone(), y.clone(), kb[ib].clone());
                        let a = InvariantMatrix::indicator(y.clone(), x.clone(), ka[ia].clone());
                        match both_sides(backend, m, &c, &b, &a) {
                            Ok((lhs, rhs)) => check.record(lhs == rhs, || witness(&c, &b, &a, &lhs, &rhs)),
                            Err(e) => check.fail(Witness::new("(C B) A = C (B A)", e, "a value")),
                        }
                    }
                }
            }
        }
    }
    check
}

fn both_sides(
    backend: &Backend,
    m: &Measure,
    c: &InvariantMatrix,
    b: &InvariantMatrix,
    a: &InvariantMatrix,
) -> Result<(InvariantMatrix, InvariantMatrix)> {
    let lhs = matmul(backend, m, &matmul(backend, m, c, b)?, a)?;
    let rhs = matmul(backend, m, c, &matmul(backend, m, b, a)?)?;
    Ok((lhs, rhs))
}

fn only_key(m: &InvariantMatrix) -> &OrbitKey {
    m.entries().keys().next().expect("an orbit indicator")
}

fn witness(c: &InvariantMatrix, b: &InvariantMatrix, a: &InvariantMatrix, lhs: &InvariantMatrix, rhs: &InvariantMatrix) -> Witness {
    let key = lhs
        .entries()
        .keys()
        .chain(rhs.entries().keys())
        .find(|k| lhs.entry(k) != rhs.entry(k))
        .expect("sides differ somewhere")
        .clone();
    Witness::new("(C B) A = C (B A)", lhs.entry(&key), rhs.entry(&key)).with_labels(vec![
        format!("C = {}", c.describe_key(only_key(c))),
        format!("B = {}", b.describe_key(only_key(b))),
        format!("A = {}", a.describe_key(only_key(a))),
        format!("at {}", lhs.describe_key(&key)),
    ])
}
