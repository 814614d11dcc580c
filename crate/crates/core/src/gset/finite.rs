//! Explicit finite permutation groups.
//!
//! Atoms are coset spaces G/H, one per conjugacy class of subgroups. Classes
//! are ordered by index, then by the sorted element list of the chosen
//! representative (the lexicographically least conjugate). A map G/H → G/K is
//! recorded as the image of the base coset H.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

/// One transitive G-set G/H, with H a fixed class representative.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub subgroup: Vec<usize>,
    /// Least group element of each coset; coset 0 is H itself.
    pub reps: Vec<usize>,
    coset_of: Vec<usize>,
    act: Vec<Vec<usize>>,
}

impl CosetSpace {
    pub fn size(&self) -> usize {
        self.reps.len()
    }

    /// Image of coset `c` under group element `g`.
    pub fn act(&self, g: usize, c: usize) -> usize {
        self.act[g][c]
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    degree: usize,
    elements: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    classes: Vec<CosetSpace>,
}

/// Orbit decomposition of G/H × G/K.
#[derive(Clone, Debug)]
pub(super) struct FiniteProduct {
    /// (class of the orbit, chosen base point).
    pub orbits: Vec<(usize, (usize, usize))>,
    /// Point (p, q), flattened as p * |G/K| + q, to (orbit, coset of the orbit atom).
    pub points: Vec<(usize, usize)>,
}

impl FiniteGroup {
    /// Builds the group generated by permutations of `0..degree`.
    pub fn from_generators(name: &str, degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        for g in &generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::Parse(format!("generator {g:?} is not a permutation of {degree} points")));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = compose(g, &x);
                if found.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Vec<usize>> = found.into_iter().collect();
        let index: HashMap<&Vec<usize>, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let mut group = FiniteGroup { name: name.to_string(), degree, elements, mul, classes: Vec::new() };
        group.classes = group.subgroup_classes().into_iter().map(|h| group.coset_space(h)).collect();
        Ok(group)
    }

    /// Parses `S<n>`, `C<n>`, `D<n>`, or generators in cycle notation such as
    /// `(1 2 3),(1 2)`; an optional `@n` suffix fixes the degree.
    pub fn parse(spec: &str) -> Result<Self> {
        let s = spec.trim();
        let named = |prefix: char| -> Option<usize> {
            s.strip_prefix(prefix).and_then(|r| r.parse().ok()).filter(|&n: &usize| n >= 1)
        };
        if let Some(n) = named('S') {
            let mut gens = vec![cycle_perm(n, &(0..n).collect::<Vec<_>>())];
            if n > 2 {
                gens.push(cycle_perm(n, &[0, 1]));
            }
            return FiniteGroup::from_generators(s, n, gens);
        }
        if let Some(n) = named('C') {
            return FiniteGroup::from_generators(s, n, vec![cycle_perm(n, &(0..n).collect::<Vec<_>>())]);
        }
        if let Some(n) = named('D') {
            let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            return FiniteGroup::from_generators(s, n, vec![cycle_perm(n, &(0..n).collect::<Vec<_>>()), reflection]);
        }
        let (body, degree) = match s.split_once('@') {
            Some((b, d)) => (b, Some(d.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad degree in `{s}`")))?)),
            None => (s, None),
        };
        let mut cycles_per_gen = Vec::new();
        for gen in body.split([',', ';']).map(str::trim).filter(|g| !g.is_empty()) {
            let mut cycles = Vec::new();
            for part in gen.split(')') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                let inner = part
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("bad cycle notation `{gen}`")))?;
                let pts: Vec<usize> = inner
                    .split_whitespace()
                    .map(|x| x.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse(format!("bad point in `{gen}`")))?;
                cycles.push(pts);
            }
            cycles_per_gen.push(cycles);
        }
        if cycles_per_gen.is_empty() {
            return Err(Error::Parse(format!("no generators in `{s}`")));
        }
        let max = cycles_per_gen.iter().flatten().flatten().map(|&p| p + 1).max().unwrap_or(1);
        let degree = degree.unwrap_or(max).max(max);
        let mut gens = Vec::new();
        for cycles in cycles_per_gen {
            let mut g: Vec<usize> = (0..degree).collect();
            for c in cycles {
                let c_perm = cycle_perm(degree, &c);
                g = compose(&c_perm, &g);
            }
            gens.push(g);
        }
        FiniteGroup::from_generators(s, degree, gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, g: usize) -> &[usize] {
        &self.elements[g]
    }

    pub fn classes(&self) -> &[CosetSpace] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &CosetSpace {
        &self.classes[k]
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut found = BTreeSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul[g][x];
                if found.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        found.into_iter().collect()
    }

    fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.mul[g][h] == 0).expect("group element without inverse")
    }

    fn least_conjugate(&self, h: &[usize]) -> Vec<usize> {
        (0..self.order())
            .map(|g| {
                let gi = self.inverse(g);
                let mut c: Vec<usize> = h.iter().map(|&x| self.mul[self.mul[g][x]][gi]).collect();
                c.sort_unstable();
                c
            })
            .min()
            .expect("nonempty group")
    }

    fn subgroup_classes(&self) -> Vec<Vec<usize>> {
        let cyclic: BTreeSet<Vec<usize>> = (0..self.order()).map(|g| self.closure(&[g])).collect();
        let mut all: BTreeSet<Vec<usize>> = cyclic.clone();
        let mut frontier: Vec<Vec<usize>> = cyclic.iter().cloned().collect();
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                if c.iter().all(|x| h.binary_search(x).is_ok()) {
                    continue;
                }
                let gens: Vec<usize> = h.iter().chain(c.iter()).copied().collect();
                let joined = self.closure(&gens);
                if all.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        let reps: BTreeSet<Vec<usize>> = all.iter().map(|h| self.least_conjugate(h)).collect();
        let mut reps: Vec<Vec<usize>> = reps.into_iter().collect();
        reps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        reps
    }

    fn coset_space(&self, subgroup: Vec<usize>) -> CosetSpace {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] == usize::MAX {
                let c = reps.len();
                reps.push(x);
                for &h in &subgroup {
                    coset_of[self.mul[x][h]] = c;
                }
            }
        }
        let act = (0..n)
            .map(|g| reps.iter().map(|&r| coset_of[self.mul[g][r]]).collect())
            .collect();
        CosetSpace { subgroup, reps, coset_of, act }
    }

    /// Points of G/K fixed by H_k' for the source class, i.e. the maps G/H → G/K.
    pub(super) fn hom(&self, source: usize, target: usize) -> Vec<usize> {
        let h = &self.classes[source].subgroup;
        let t = &self.classes[target];
        (0..t.size()).filter(|&c| h.iter().all(|&x| t.act(x, c) == c)).collect()
    }

    /// Image of point `p` of class `source` under the map sending the base coset to `q`.
    pub(super) fn apply(&self, source: usize, p: usize, target: usize, q: usize) -> usize {
        self.classes[target].act(self.classes[source].reps[p], q)
    }

    fn stabilizer(&self, a: usize, p: usize, b: usize, q: usize) -> Vec<usize> {
        let (ca, cb) = (&self.classes[a], &self.classes[b]);
        (0..self.order()).filter(|&g| ca.act(g, p) == p && cb.act(g, q) == q).collect()
    }

    pub(super) fn product(&self, a: usize, b: usize) -> FiniteProduct {
        let (ca, cb) = (&self.classes[a], &self.classes[b]);
        let (na, nb) = (ca.size(), cb.size());
        let mut seen = vec![false; na * nb];
        let mut found = Vec::new();
        for start in 0..na * nb {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < orbit.len() {
                let (p, q) = (orbit[i] / nb, orbit[i] % nb);
                for g in 0..self.order() {
                    let y = ca.act(g, p) * nb + cb.act(g, q);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            let (p0, q0) = (orbit[0] / nb, orbit[0] % nb);
            let canon = self.least_conjugate(&self.stabilizer(a, p0, b, q0));
            let k = self.classes.iter().position(|c| c.subgroup == canon).expect("stabilizer class");
            let base = orbit
                .iter()
                .map(|&x| (x / nb, x % nb))
                .find(|&(p, q)| self.stabilizer(a, p, b, q) == self.classes[k].subgroup)
                .expect("point with representative stabilizer");
            found.push((k, base));
        }
        found.sort_unstable();
        let mut points = vec![(usize::MAX, usize::MAX); na * nb];
        for (o, &(k, (p, q))) in found.iter().enumerate() {
            for (c, &x) in self.classes[k].reps.iter().enumerate() {
                points[ca.act(x, p) * nb + cb.act(x, q)] = (o, c);
            }
        }
        FiniteProduct { orbits: found, points }
    }

    /// Class index and point-stabilizer class for each orbit of the natural action on `0..degree`.
    pub fn natural_orbits(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if seen[x] {
                continue;
            }
            for e in &self.elements {
                seen[e[x]] = true;
            }
            let stab: Vec<usize> = (0..self.order()).filter(|&g| self.elements[g][x] == x).collect();
            let canon = self.least_conjugate(&stab);
            out.push(self.classes.iter().position(|c| c.subgroup == canon).expect("stabilizer class"));
        }
        out
    }

    /// Group element index acting as `perm`, if it lies in the group.
    pub fn find(&self, perm: &[usize]) -> Option<usize> {
        self.elements.iter().position(|e| e == perm)
    }

    /// The coset of G/H_k containing group element `g`.
    pub fn coset_of(&self, k: usize, g: usize) -> usize {
        self.classes[k].coset_of[g]
    }
}

/// `a ∘ b` as maps on points.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn cycle_perm(degree: usize, cycle: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for (i, &x) in cycle.iter().enumerate() {
        p[x] = cycle[(i + 1) % cycle.len()];
    }
    p
}
