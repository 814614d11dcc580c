//! Bounded checks of the pre-Galois axioms (a)–(h) for a backend.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::{fiber_product, Atom, Backend, GMap, GObject, MapPattern, OrbitLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: char,
    pub name: &'static str,
    pub pass: bool,
    pub instances: usize,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl AxiomResult {
    fn new(axiom: char, name: &'static str) -> Self {
        AxiomResult { axiom, name, pass: true, instances: 0, witness: None, note: None }
    }

    fn fail(&mut self, witness: String) {
        if self.pass {
            self.pass = false;
            self.witness = Some(witness);
        }
    }
}

/// Runs every axiom over all atoms of size at most `bound`.
pub fn pregalois_check(backend: &Backend, bound: usize) -> Vec<AxiomResult> {
    let atoms = backend.atoms_up_to(bound);
    vec![
        coproducts(backend, &atoms),
        atomic_decomposition(backend, &atoms),
        maps_into_coproducts(backend, &atoms),
        fiber_products(backend, &atoms),
        monos_are_isos(backend, &atoms),
        nonempty_fiber_products(backend, &atoms),
        atomic_terminal(backend, &atoms),
        effective_relations(backend, &atoms),
    ]
}

fn coproducts(backend: &Backend, atoms: &[Atom]) -> AxiomResult {
    let mut r = AxiomResult::new('a', "finite coproducts");
    for &c in atoms {
        r.instances += 1;
        // the empty object is initial: exactly one (empty) map out of it
        if GMap::new(backend, GObject::empty(), GObject::atom(c), Vec::new()).is_err() {
            r.fail(format!("no map 0 -> {c}"));
        }
        for &a in atoms {
            for &b in atoms {
                r.instances += 1;
                let (x, ia, ib) = GObject::atom(a).coproduct(&GObject::atom(b));
                let (ha, hb) = (backend.hom(a, c), backend.hom(b, c));
                let mut seen = HashSet::new();
                for f in &ha {
                    for g in &hb {
                        let mut assign = vec![(0, f.clone()); 2];
                        assign[ia[0]] = (0, f.clone());
                        assign[ib[0]] = (0, g.clone());
                        let m = GMap::new(backend, x.clone(), GObject::atom(c), assign);
                        if m.is_err() || !seen.insert(m.unwrap()) {
                            r.fail(format!("maps {a} + {b} -> {c} not in bijection with pairs"));
                        }
                    }
                }
            }
        }
    }
    r.note = Some("objects are stored as coproducts of atoms, so maps out of X + Y are pairs of maps".into());
    r
}

fn atomic_decomposition(backend: &Backend, atoms: &[Atom]) -> AxiomResult {
    let mut r = AxiomResult::new('b', "objects are finite coproducts of atoms");
    for &a in atoms {
        r.instances += 1;
        if backend.hom(a, a).is_empty() {
            r.fail(format!("{a} is empty"));
        }
    }
    r.note = Some("holds by representation of objects as atom multisets".into());
    r
}

fn maps_into_coproducts(backend: &Backend, atoms: &[Atom]) -> AxiomResult {
    let mut r = AxiomResult::new('c', "maps from an atom into Y + Z");
    for &x in atoms {
        for &y in atoms {
            for &z in atoms {
                r.instances += 1;
                let (yz, _, _) = GObject::atom(y).coproduct(&GObject::atom(z));
                let total: usize = yz.atoms().iter().map(|&t| backend.hom(x, t).len()).sum();
                if total != backend.hom(x, y).len() + backend.hom(x, z).len() {
                    r.fail(format!("Hom({x}, {y} + {z}) has {total} elements"));
                }
            }
        }
    }
    r
}

/// Pairs (u, v) of maps w → x, w → y agreeing in z.
fn cone_count(backend: &Backend, w: Atom, f: &GMap, g: &GMap) -> BTreeSet<(MapPattern, MapPattern)> {
    let (x, y, z) = (f.source.atoms()[0], g.source.atoms()[0], f.target.atoms()[0]);
    let mut out = BTreeSet::new();
    for u in backend.hom(w, x) {
        for v in backend.hom(w, y) {
            if backend.then(&u, x, &f.assign[0].1, z) == backend.then(&v, y, &g.assign[0].1, z) {
                out.insert((u.clone(), v));
            }
        }
    }
    out
}

fn cospans(backend: &Backend, atoms: &[Atom]) -> Vec<(GMap, GMap)> {
    let mut out = Vec::new();
    for &z in atoms {
        for &x in atoms {
            for &y in atoms {
                for f in backend.hom(x, z) {
                    for g in backend.hom(y, z) {
                        out.push((GMap::of_atoms(x, z, f.clone()), GMap::of_atoms(y, z, g)));
                    }
                }
            }
        }
    }
    out
}

fn fiber_products(backend: &Backend, atoms: &[Atom]) -> AxiomResult {
    let mut r = AxiomResult::new('d', "fiber products and a final object");
    let one = backend.terminal();
    for &w in atoms {
        r.instances += 1;
        if backend.hom(w, one).len() != 1 {
            r.fail(format!("{w} has {} maps to the final object", backend.hom(w, one).len()));
        }
    }
    for (f, g) in cospans(backend, atoms) {
        let (p, p1, p2) = fiber_product(backend, &f, &g).expect("cospan shares its target");
        let (x, y) = (f.source.atoms()[0], g.source.atoms()[0]);
        for &w in atoms {
            r.instances += 1;
            let expected = cone_count(backend, w, &f, &g);
            let mut got = BTreeSet::new();
            let mut total = 0;
            for (k, &a) in p.atoms().iter().enumerate() {
                for h in backend.hom(w, a) {
                    total += 1;
                    got.insert((backend.then(&h, a, &p1.assign[k].1, x), backend.then(&h, a, &p2.assign[k].1, y)));
                }
            }
            if got != expected || total != expected.len() {
                r.fail(format!("{} x_{} {} is not universal for maps from {w}", x, f.target, y));
            }
        }
    }
    r
}

fn monos_are_isos(backend: &Backend, atoms: &[Atom]) -> AxiomResult {
    let mut r = AxiomResult::new('e', "monomorphisms of atoms are isomorphisms");
    for &a in atoms {
        for &b in atoms {
            for f in backend.hom(a, b) {
                r.instances += 1;
                let m = GMap::of_atoms(a, b, f.clone());
                let (_, p1, p2) = fiber_product(backend, &m, &m).expect("kernel pair");
                let mono = p1 == p2;
                if mono && !backend.is_iso(a, b) {
                    r.fail(format!("{f}: {a} -> {b} is mono but not iso"));
                }
            }
        }
    }
    r
}

fn nonempty_fiber_products(backend: &Backend, atoms: &[Atom]) -> AxiomResult {
    let mut r = AxiomResult::new('f', "fiber products of atoms are nonempty");
    for (f, g) in cospans(backend, atoms) {
        r.instances += 1;
        let (p, _, _) = fiber_product(backend, &f, &g).expect("cospan shares its target");
        if p.is_empty() {
            r.fail(format!("{} x_{} {} is empty", f.source, f.target, g.source));
        }
    }
    r
}

fn atomic_terminal(backend: &Backend, atoms: &[Atom]) -> AxiomResult {
    let mut r = AxiomResult::new('g', "the final object is an atom");
    let one = backend.terminal();
    r.instances = 1;
    if backend.size(one) != usize::from(backend.group().is_some()) || !atoms.contains(&one) {
        r.fail(format!("{one} is not a one-point atom"));
    }
    r
}

type Relation = BTreeSet<usize>;

struct RelationData {
    diagonal: usize,
    swap: Vec<usize>,
    compose: Vec<Vec<BTreeSet<usize>>>,
}

impl RelationData {
    fn new(backend: &Backend, x: Atom) -> Self {
        let table = backend.product(x, x);
        let n = table.orbits.len();
        let id = backend.identity(x);
        let diagonal = backend.pair_into(&id, x, &id, x).0;
        let swap = (0..n).map(|o| backend.swap(x, x, o)).collect();
        let mut compose = vec![vec![BTreeSet::new(); n]; n];
        for (i, oi) in table.orbits.iter().enumerate() {
            for (j, oj) in table.orbits.iter().enumerate() {
                // (u, v) in oi and (v, w) in oj give (u, w)
                let f = GMap::of_atoms(oi.atom, x, oi.proj2.clone());
                let g = GMap::of_atoms(oj.atom, x, oj.proj1.clone());
                let (p, s1, s2) = fiber_product(backend, &f, &g).expect("same target");
                for k in 0..p.len() {
                    let u = backend.then(&s1.assign[k].1, oi.atom, &oi.proj1, x);
                    let w = backend.then(&s2.assign[k].1, oj.atom, &oj.proj2, x);
                    compose[i][j].insert(backend.pair_into(&u, x, &w, x).0);
                }
            }
        }
        RelationData { diagonal, swap, compose }
    }

    fn close(&self, mut r: Relation) -> Relation {
        r.insert(self.diagonal);
        loop {
            let mut next = r.clone();
            for &o in &r {
                next.insert(self.swap[o]);
                for &p in &r {
                    next.extend(self.compose[o][p].iter().copied());
                }
            }
            if next == r {
                return r;
            }
            r = next;
        }
    }

    fn all(&self, n: usize) -> Vec<Relation> {
        let start = self.close(Relation::new());
        let mut found = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(r) = queue.pop_front() {
            for o in 0..n {
                if !r.contains(&o) {
                    let mut s = r.clone();
                    s.insert(o);
                    let s = self.close(s);
                    if found.insert(s.clone()) {
                        queue.push_back(s);
                    }
                }
            }
        }
        let mut out: Vec<Relation> = found.into_iter().collect();
        out.sort_by_key(|r| (r.len(), r.clone()));
        out
    }
}

fn kernel_pairs(backend: &Backend, x: Atom, atoms: &[Atom]) -> HashSet<Relation> {
    let table = backend.product(x, x);
    let mut out = HashSet::new();
    for &q in atoms {
        for f in backend.hom(x, q) {
            let k: Relation = table
                .orbits
                .iter()
                .enumerate()
                .filter(|(_, o)| backend.then(&o.proj1, x, &f, q) == backend.then(&o.proj2, x, &f, q))
                .map(|(i, _)| i)
                .collect();
            out.insert(k);
        }
    }
    out
}

fn describe(backend: &Backend, x: Atom, r: &Relation) -> String {
    let table = backend.product(x, x);
    let labels: Vec<&OrbitLabel> = r.iter().map(|&o| &table.orbits[o].label).collect();
    let all_permutations = labels.iter().all(|l| match l {
        OrbitLabel::Matching(m) => m.len() == backend.size(x),
        _ => false,
    });
    let kind = match (all_permutations, r.len()) {
        (true, 2) => "coordinate-swap relation",
        (true, _) => "coordinate-permutation relation",
        _ => "equivalence relation",
    };
    let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    format!("{kind} {{{}}} on {x} is not the kernel pair of any map", parts.join(", "))
}

fn effective_relations(backend: &Backend, atoms: &[Atom]) -> AxiomResult {
    let mut r = AxiomResult::new('h', "equivalence relations are effective");
    let mut bad = Vec::new();
    for &x in atoms {
        let data = RelationData::new(backend, x);
        let kernels = kernel_pairs(backend, x, atoms);
        for rel in data.all(backend.product(x, x).orbits.len()) {
            r.instances += 1;
            if !kernels.contains(&rel) {
                bad.push(describe(backend, x, &rel));
            }
        }
    }
    if let Some(first) = bad.first() {
        r.fail(first.clone());
        r.note = Some(format!("{} non-effective relations within bound", bad.len()));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gset::FiniteGroup;

    #[test]
    fn sym_fails_only_effectiveness() {
        let report = pregalois_check(&Backend::sym(), 3);
        let failing: Vec<char> = report.iter().filter(|a| !a.pass).map(|a| a.axiom).collect();
        assert_eq!(failing, vec!['h']);
        let w = report[7].witness.as_deref().unwrap();
        assert!(w.starts_with("coordinate-swap relation"), "{w}");
        assert!(w.contains("sym:inj[2]"), "{w}");
    }

    #[test]
    fn finite_group_is_pregalois() {
        let b = Backend::finite(FiniteGroup::parse("S3").unwrap());
        assert!(pregalois_check(&b, 6).iter().all(|a| a.pass));
    }

    #[test]
    fn relations_on_a_coset_space_match_overgroups() {
        // S3/1 has one relation per subgroup of S3: six of them
        let b = Backend::finite(FiniteGroup::parse("S3").unwrap());
        let x = Atom::Finite(3);
        let data = RelationData::new(&b, x);
        assert_eq!(data.all(b.product(x, x).orbits.len()).len(), 6);
    }
}
