use super::InvariantMatrix;
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::gset::{Backend, GObject, MapPattern, Product};

/// The 0/1 matrix between two products that is 1 exactly where factors on the
/// same wire carry the same point.
///
/// `target_wires[k]` names the wire of target factor `k`. Every wire must be
/// used, and factors sharing a wire must be the same object. Multiplication,
/// comultiplication, unit, counit, evaluation, coevaluation and all symmetry
/// and reassociation maps are of this form.
pub fn wiring(
    backend: &Backend,
    target: &Product,
    target_wires: &[usize],
    source: &Product,
    source_wires: &[usize],
) -> Result<InvariantMatrix> {
    if target_wires.len() != target.factors.len() || source_wires.len() != source.factors.len() {
        return Err(Error::ShapeMismatch("one wire per factor is required".into()));
    }
    let n = target_wires.iter().chain(source_wires).map(|w| w + 1).max().unwrap_or(0);
    let mut wires: Vec<Option<&GObject>> = vec![None; n];
    let leaves = target_wires.iter().zip(&target.factors).chain(source_wires.iter().zip(&source.factors));
    for (&w, x) in leaves {
        match wires[w] {
            None => wires[w] = Some(x),
            Some(y) if y == x => {}
            Some(y) => return Err(Error::ShapeMismatch(format!("wire {w} joins {y} and {x}"))),
        }
    }
    let wires: Vec<&GObject> = wires
        .into_iter()
        .enumerate()
        .map(|(w, x)| x.ok_or_else(|| Error::ShapeMismatch(format!("wire {w} is unused"))))
        .collect::<Result<_>>()?;
    let space = Product::of(backend, &wires);
    let mut out = InvariantMatrix::zero(target.object.clone(), source.object.clone());
    for (p, &w) in space.object.atoms().iter().enumerate() {
        let legs = &space.legs[p];
        let comps = |ws: &[usize]| -> Vec<(usize, MapPattern)> { ws.iter().map(|&k| (legs[k].atom, legs[k].map.clone())).collect() };
        let (tpos, tmap) = target.locate(backend, w, &comps(target_wires));
        let (spos, smap) = source.locate(backend, w, &comps(source_wires));
        let (label, _) = backend.pair_label(&tmap, target.object.atoms()[tpos], &smap, source.object.atoms()[spos]);
        out.set((tpos, spos, label), Scalar::one());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gset::Atom;

    #[test]
    fn straight_wires_give_identity() {
        let b = Backend::sym();
        let x = GObject::new(vec![Atom::Sym(1), Atom::Sym(2)]);
        let p = Product::leaf(&b, &x);
        assert_eq!(wiring(&b, &p, &[0], &p, &[0]).unwrap(), InvariantMatrix::identity(&b, &x));
    }

    #[test]
    fn multiplication_on_a_point_set() {
        let b = Backend::sym();
        let x = GObject::atom(Atom::Sym(1));
        let m = wiring(&b, &Product::leaf(&b, &x), &[0], &Product::of(&b, &[&x, &x]), &[0, 0]).unwrap();
        assert_eq!(m.entries().len(), 1);
        assert_eq!(m.source.atoms(), &[Atom::Sym(1), Atom::Sym(2)]);
        assert!(m.entries().keys().all(|k| k.1 == 0));
        assert!(wiring(&b, &Product::leaf(&b, &x), &[0], &Product::unit(&b), &[]).is_ok());
        assert!(wiring(&b, &Product::leaf(&b, &x), &[1], &Product::unit(&b), &[]).is_err());
    }
}
