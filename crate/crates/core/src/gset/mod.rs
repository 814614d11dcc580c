//! Finitary G-sets for three concrete groups: the infinite symmetric group
//! (restricted to unions of Ω^[n]), the order-automorphisms of ℚ, and explicit
//! finite permutation groups.

mod finite;
mod grammar;
mod line;
mod pregalois;
mod product;
mod sym;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};

pub use finite::{CosetSpace, FiniteGroup};
pub use grammar::{parse_atom, parse_gmap, parse_object, parse_orbit_label, parse_pattern, strip_comment};
pub use pregalois::{pregalois_check, AxiomResult};
pub use product::{fiber_product, product_map, Leg, Product};

/// A transitive G-set, up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// Ω^[n]: n distinct points.
    Sym(usize),
    /// ℚ^(n): increasing n-tuples.
    Line(usize),
    /// G/H for the k-th subgroup class.
    Finite(usize),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Sym(n) => write!(f, "sym:inj[{n}]"),
            Atom::Line(n) => write!(f, "line:inc[{n}]"),
            Atom::Finite(k) => write!(f, "finite:orbit#{k}"),
        }
    }
}

impl Serialize for Atom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Finite coproduct of atoms, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GObject {
    atoms: Vec<Atom>,
}

impl GObject {
    pub fn new(mut atoms: Vec<Atom>) -> Self {
        atoms.sort();
        GObject { atoms }
    }

    pub fn atom(a: Atom) -> Self {
        GObject { atoms: vec![a] }
    }

    /// The initial object.
    pub fn empty() -> Self {
        GObject::default()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// X ⨿ Y with the positions of X's and Y's atoms inside it.
    pub fn coproduct(&self, other: &GObject) -> (GObject, Vec<usize>, Vec<usize>) {
        let mut tagged: Vec<(Atom, usize, usize)> = self
            .atoms
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, 0, i))
            .chain(other.atoms.iter().enumerate().map(|(i, &a)| (a, 1, i)))
            .collect();
        tagged.sort();
        let mut left = vec![0; self.len()];
        let mut right = vec![0; other.len()];
        for (pos, &(_, side, i)) in tagged.iter().enumerate() {
            if side == 0 {
                left[i] = pos;
            } else {
                right[i] = pos;
            }
        }
        (GObject { atoms: tagged.into_iter().map(|t| t.0).collect() }, left, right)
    }
}

impl fmt::Display for GObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for GObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An equivariant map between atoms.
///
/// `Select(v)` maps a tuple x to (x[v[0]], x[v[1]], ...); `Point(c)` sends the
/// base coset to coset `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapPattern {
    Select(Vec<usize>),
    Point(usize),
}

impl fmt::Display for MapPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapPattern::Select(v) => {
                let parts: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            MapPattern::Point(c) => write!(f, "coset#{c}"),
        }
    }
}

impl Serialize for MapPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An equivariant map of G-objects: each source atom goes to one target atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GMap {
    pub source: GObject,
    pub target: GObject,
    pub assign: Vec<(usize, MapPattern)>,
}

impl GMap {
    pub fn new(backend: &Backend, source: GObject, target: GObject, assign: Vec<(usize, MapPattern)>) -> Result<Self> {
        if assign.len() != source.len() {
            return Err(Error::ShapeMismatch(format!("{} assignments for {} source atoms", assign.len(), source.len())));
        }
        for (a, (t, p)) in source.atoms().iter().zip(&assign) {
            let b = target
                .atoms()
                .get(*t)
                .ok_or_else(|| Error::ShapeMismatch(format!("target position {t} out of range")))?;
            if !backend.is_map(*a, *b, p) {
                return Err(Error::Parse(format!("{p} is not a map {a} -> {b}")));
            }
        }
        Ok(GMap { source, target, assign })
    }

    pub fn identity(backend: &Backend, x: &GObject) -> Self {
        let assign = x.atoms().iter().enumerate().map(|(i, &a)| (i, backend.identity(a))).collect();
        GMap { source: x.clone(), target: x.clone(), assign }
    }

    /// The map between single atoms given by `p`.
    pub fn of_atoms(a: Atom, b: Atom, p: MapPattern) -> Self {
        GMap { source: GObject::atom(a), target: GObject::atom(b), assign: vec![(0, p)] }
    }

    /// `self` followed by `g`.
    pub fn then(&self, backend: &Backend, g: &GMap) -> Result<GMap> {
        if self.target != g.source {
            return Err(Error::ShapeMismatch(format!("cannot compose into {} from {}", self.target, g.source)));
        }
        let assign = self
            .assign
            .iter()
            .map(|(t, p)| {
                let (u, q) = &g.assign[*t];
                (*u, backend.then(p, self.target.atoms()[*t], q, g.target.atoms()[*u]))
            })
            .collect();
        Ok(GMap { source: self.source.clone(), target: g.target.clone(), assign })
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.target.len()).all(|t| self.assign.iter().any(|(u, _)| *u == t))
    }

    pub fn is_atom_map(&self) -> bool {
        self.source.len() == 1 && self.target.len() == 1
    }
}

impl fmt::Display for GMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.assign.iter().map(|(t, p)| format!("{}@{}", p, t + 1)).collect();
        write!(f, "{} -> {} : {}", self.source, self.target, parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    L,
    B,
    R,
}

/// Canonical combinatorial description of an orbit of a product of atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitLabel {
    /// Matched coordinate pairs (first factor, second factor).
    Matching(Vec<(usize, usize)>),
    /// Interleaving of the two increasing tuples.
    Word(Vec<Letter>),
    /// Chosen base point of the orbit.
    Pair(usize, usize),
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Matching(m) => {
                let parts: Vec<String> = m.iter().map(|(i, j)| format!("{}={}", i + 1, j + 1)).collect();
                write!(f, "m{{{}}}", parts.join(","))
            }
            OrbitLabel::Word(w) => {
                let s: String = w.iter().map(|l| format!("{l:?}")).collect();
                write!(f, "w:{s}")
            }
            OrbitLabel::Pair(p, q) => write!(f, "o({p},{q})"),
        }
    }
}

impl Serialize for OrbitLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductOrbit {
    pub atom: Atom,
    pub proj1: MapPattern,
    pub proj2: MapPattern,
    pub label: OrbitLabel,
}

#[derive(Debug)]
pub struct ProductTable {
    pub orbits: Vec<ProductOrbit>,
    index: HashMap<OrbitLabel, usize>,
    points: Vec<(usize, usize)>,
    right_size: usize,
}

impl ProductTable {
    pub fn position(&self, label: &OrbitLabel) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// Isomorphism class of the fiber of a one-step projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberClass {
    /// Ω with c points removed.
    OmegaMinus(usize),
    /// An unbounded open ray of ℚ (ℚ itself included).
    Ray,
    /// A bounded open interval of ℚ.
    Interval,
    /// A finite set of n points.
    Card(usize),
}

impl fmt::Display for FiberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberClass::OmegaMinus(c) => write!(f, "omega-minus{{{c}}}"),
            FiberClass::Ray => write!(f, "ray"),
            FiberClass::Interval => write!(f, "interval"),
            FiberClass::Card(n) => write!(f, "card{{{n}}}"),
        }
    }
}

impl Serialize for FiberClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorStep {
    pub source: Atom,
    pub target: Atom,
    pub fiber: FiberClass,
}

/// A decomposition `class = parts ⨿ (points one-point sets)` of a fiber class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberRelation {
    pub class: FiberClass,
    pub parts: Vec<FiberClass>,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BackendId {
    Sym,
    Line,
    Finite(String),
}

impl fmt::Display for BackendId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackendId::Sym => write!(f, "sym"),
            BackendId::Line => write!(f, "line"),
            BackendId::Finite(g) => write!(f, "finite({g})"),
        }
    }
}

impl Serialize for BackendId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug)]
pub enum Kind {
    Sym,
    Line,
    Finite(FiniteGroup),
}

/// A group together with its category of finitary G-sets.
///
/// Product decompositions are memoized; the cache only ever stores the value
/// the computation would return.
#[derive(Debug)]
pub struct Backend {
    kind: Kind,
    cache: Mutex<HashMap<(Atom, Atom), Arc<ProductTable>>>,
}

impl Backend {
    fn with_kind(kind: Kind) -> Self {
        Backend { kind, cache: Mutex::new(HashMap::new()) }
    }

    pub fn sym() -> Self {
        Backend::with_kind(Kind::Sym)
    }

    pub fn line() -> Self {
        Backend::with_kind(Kind::Line)
    }

    pub fn finite(group: FiniteGroup) -> Self {
        Backend::with_kind(Kind::Finite(group))
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn id(&self) -> BackendId {
        match &self.kind {
            Kind::Sym => BackendId::Sym,
            Kind::Line => BackendId::Line,
            Kind::Finite(g) => BackendId::Finite(g.name().to_string()),
        }
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        match &self.kind {
            Kind::Finite(g) => Some(g),
            _ => None,
        }
    }

    fn group_of(&self) -> &FiniteGroup {
        self.group().expect("finite atom outside a finite backend")
    }

    pub fn terminal(&self) -> Atom {
        match self.kind {
            Kind::Sym => Atom::Sym(0),
            Kind::Line => Atom::Line(0),
            Kind::Finite(_) => Atom::Finite(0),
        }
    }

    /// Arity for the infinite backends, cardinality for finite ones.
    pub fn size(&self, a: Atom) -> usize {
        match a {
            Atom::Sym(n) | Atom::Line(n) => n,
            Atom::Finite(k) => self.group_of().class(k).size(),
        }
    }

    pub fn owns(&self, a: Atom) -> bool {
        match (&self.kind, a) {
            (Kind::Sym, Atom::Sym(_)) | (Kind::Line, Atom::Line(_)) => true,
            (Kind::Finite(g), Atom::Finite(k)) => k < g.classes().len(),
            _ => false,
        }
    }

    pub fn check_atom(&self, a: Atom) -> Result<()> {
        if self.owns(a) {
            Ok(())
        } else {
            Err(Error::BackendMismatch(a.to_string(), self.id().to_string()))
        }
    }

    /// All atoms of size at most `bound`, in canonical order.
    pub fn atoms_up_to(&self, bound: usize) -> Vec<Atom> {
        match &self.kind {
            Kind::Sym => (0..=bound).map(Atom::Sym).collect(),
            Kind::Line => (0..=bound).map(Atom::Line).collect(),
            Kind::Finite(g) => (0..g.classes().len())
                .filter(|&k| g.class(k).size() <= bound)
                .map(Atom::Finite)
                .collect(),
        }
    }

    /// Every equivariant map a → b.
    pub fn hom(&self, a: Atom, b: Atom) -> Vec<MapPattern> {
        match (a, b) {
            (Atom::Sym(n), Atom::Sym(m)) => sym::injections(n, m).into_iter().map(MapPattern::Select).collect(),
            (Atom::Line(n), Atom::Line(m)) => line::increasing(n, m).into_iter().map(MapPattern::Select).collect(),
            (Atom::Finite(i), Atom::Finite(j)) => self.group_of().hom(i, j).into_iter().map(MapPattern::Point).collect(),
            _ => Vec::new(),
        }
    }

    pub fn is_map(&self, a: Atom, b: Atom, p: &MapPattern) -> bool {
        if !(self.owns(a) && self.owns(b)) {
            return false;
        }
        match (a, b, p) {
            (Atom::Sym(n), Atom::Sym(m), MapPattern::Select(v)) => {
                let mut seen = vec![false; n];
                v.len() == m && v.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
            }
            (Atom::Line(n), Atom::Line(m), MapPattern::Select(v)) => {
                v.len() == m && v.iter().all(|&i| i < n) && v.windows(2).all(|w| w[0] < w[1])
            }
            (Atom::Finite(i), Atom::Finite(j), MapPattern::Point(c)) => self.group_of().hom(i, j).contains(c),
            _ => false,
        }
    }

    pub fn identity(&self, a: Atom) -> MapPattern {
        match a {
            Atom::Sym(n) | Atom::Line(n) => MapPattern::Select((0..n).collect()),
            Atom::Finite(_) => MapPattern::Point(0),
        }
    }

    pub fn to_terminal(&self, a: Atom) -> MapPattern {
        match a {
            Atom::Sym(_) | Atom::Line(_) => MapPattern::Select(Vec::new()),
            Atom::Finite(_) => MapPattern::Point(0),
        }
    }

    /// `f: a → mid` followed by `g: mid → target`.
    pub fn then(&self, f: &MapPattern, mid: Atom, g: &MapPattern, target: Atom) -> MapPattern {
        match (f, g) {
            (MapPattern::Select(f), MapPattern::Select(g)) => MapPattern::Select(g.iter().map(|&i| f[i]).collect()),
            (MapPattern::Point(p), MapPattern::Point(q)) => {
                let (Atom::Finite(i), Atom::Finite(j)) = (mid, target) else {
                    panic!("point pattern on a non-finite atom");
                };
                MapPattern::Point(self.group_of().apply(i, *p, j, *q))
            }
            _ => panic!("mixed map patterns"),
        }
    }

    pub fn is_iso(&self, a: Atom, b: Atom) -> bool {
        self.size(a) == self.size(b)
    }

    /// Orbit decomposition of a × b, in canonical label order.
    pub fn product(&self, a: Atom, b: Atom) -> Arc<ProductTable> {
        if let Some(t) = self.cache.lock().expect("product cache").get(&(a, b)) {
            return Arc::clone(t);
        }
        let table = Arc::new(self.compute_product(a, b));
        self.cache.lock().expect("product cache").entry((a, b)).or_insert(table).clone()
    }

    fn compute_product(&self, a: Atom, b: Atom) -> ProductTable {
        let mut points = Vec::new();
        let mut right_size = 0;
        let orbits: Vec<ProductOrbit> = match (a, b) {
            (Atom::Sym(n), Atom::Sym(m)) => sym::matchings(n, m)
                .into_iter()
                .map(|mt| {
                    let (k, p1, p2) = sym::orbit_of_matching(n, m, &mt);
                    ProductOrbit {
                        atom: Atom::Sym(k),
                        proj1: MapPattern::Select(p1),
                        proj2: MapPattern::Select(p2),
                        label: OrbitLabel::Matching(mt),
                    }
                })
                .collect(),
            (Atom::Line(n), Atom::Line(m)) => line::merge_words(n, m)
                .into_iter()
                .map(|w| {
                    let (p1, p2) = line::projections(&w);
                    ProductOrbit {
                        atom: Atom::Line(w.len()),
                        proj1: MapPattern::Select(p1),
                        proj2: MapPattern::Select(p2),
                        label: OrbitLabel::Word(w),
                    }
                })
                .collect(),
            (Atom::Finite(i), Atom::Finite(j)) => {
                let fp = self.group_of().product(i, j);
                points = fp.points;
                right_size = self.group_of().class(j).size();
                fp.orbits
                    .into_iter()
                    .map(|(k, (p, q))| {
                        // the base coset of G/H_k lands on (p, q)
                        ProductOrbit {
                            atom: Atom::Finite(k),
                            proj1: MapPattern::Point(p),
                            proj2: MapPattern::Point(q),
                            label: OrbitLabel::Pair(p, q),
                        }
                    })
                    .collect()
            }
            _ => panic!("product of atoms from different backends"),
        };
        let index = orbits.iter().enumerate().map(|(i, o)| (o.label.clone(), i)).collect();
        ProductTable { orbits, index, points, right_size }
    }

    /// Locates the image of τ under (f, g) in a × b: the orbit index and the
    /// isomorphism-onto-orbit map τ → orbit atom.
    pub fn pair_into(&self, f: &MapPattern, a: Atom, g: &MapPattern, b: Atom) -> (usize, MapPattern) {
        let table = self.product(a, b);
        match (f, g) {
            (MapPattern::Select(f), MapPattern::Select(g)) => {
                let (label, coords) = match a {
                    Atom::Sym(_) => sym::pair_into(f, g),
                    _ => line::pair_into(f, g),
                };
                (table.index[&label], MapPattern::Select(coords))
            }
            (MapPattern::Point(p), MapPattern::Point(q)) => {
                let (o, c) = table.points[p * table.right_size + q];
                (o, MapPattern::Point(c))
            }
            _ => panic!("mixed map patterns"),
        }
    }

    /// Index in b × a of the swap of orbit `idx` of a × b.
    pub fn swap(&self, a: Atom, b: Atom, idx: usize) -> usize {
        let o = self.product(a, b).orbits[idx].clone();
        self.pair_into(&o.proj2, b, &o.proj1, a).0
    }

    /// The orbit of a × b with the given label, without building the full table
    /// for the infinite backends.
    pub fn orbit(&self, a: Atom, b: Atom, label: &OrbitLabel) -> ProductOrbit {
        match (a, b, label) {
            (Atom::Sym(n), Atom::Sym(m), OrbitLabel::Matching(mt)) => {
                let (k, p1, p2) = sym::orbit_of_matching(n, m, mt);
                ProductOrbit {
                    atom: Atom::Sym(k),
                    proj1: MapPattern::Select(p1),
                    proj2: MapPattern::Select(p2),
                    label: label.clone(),
                }
            }
            (Atom::Line(_), Atom::Line(_), OrbitLabel::Word(w)) => {
                let (p1, p2) = line::projections(w);
                ProductOrbit {
                    atom: Atom::Line(w.len()),
                    proj1: MapPattern::Select(p1),
                    proj2: MapPattern::Select(p2),
                    label: label.clone(),
                }
            }
            _ => {
                let table = self.product(a, b);
                table.orbits[table.index[label]].clone()
            }
        }
    }

    /// Like [`Backend::pair_into`], returning the orbit label.
    pub fn pair_label(&self, f: &MapPattern, a: Atom, g: &MapPattern, b: Atom) -> (OrbitLabel, MapPattern) {
        match (f, g, a) {
            (MapPattern::Select(f), MapPattern::Select(g), Atom::Sym(_)) => {
                let (label, coords) = sym::pair_into(f, g);
                (label, MapPattern::Select(coords))
            }
            (MapPattern::Select(f), MapPattern::Select(g), _) => {
                let (label, coords) = line::pair_into(f, g);
                (label, MapPattern::Select(coords))
            }
            _ => {
                let (o, iso) = self.pair_into(f, a, g, b);
                (self.product(a, b).orbits[o].label.clone(), iso)
            }
        }
    }

    /// The label in b × a of the swap of an orbit of a × b.
    pub fn swap_label(&self, a: Atom, b: Atom, label: &OrbitLabel) -> OrbitLabel {
        match label {
            OrbitLabel::Matching(mt) => OrbitLabel::Matching(sym::swap_matching(mt)),
            OrbitLabel::Word(w) => OrbitLabel::Word(line::swap_word(w)),
            OrbitLabel::Pair(..) => {
                let o = self.orbit(a, b, label);
                self.pair_label(&o.proj2, b, &o.proj1, a).0
            }
        }
    }

    /// Orbits of the fiber product a ×_y b along f: a → y and g: b → y.
    pub fn fiber_orbits(&self, a: Atom, f: &MapPattern, b: Atom, g: &MapPattern, y: Atom) -> Vec<ProductOrbit> {
        match (a, b, f, g) {
            (Atom::Sym(n), Atom::Sym(m), MapPattern::Select(f), MapPattern::Select(g)) => sym::fiber_matchings(n, m, f, g)
                .into_iter()
                .map(|mt| self.orbit(a, b, &OrbitLabel::Matching(mt)))
                .collect(),
            (Atom::Line(n), Atom::Line(m), MapPattern::Select(f), MapPattern::Select(g)) => line::fiber_words(n, m, f, g)
                .into_iter()
                .map(|w| self.orbit(a, b, &OrbitLabel::Word(w)))
                .collect(),
            _ => self
                .product(a, b)
                .orbits
                .iter()
                .filter(|o| self.then(&o.proj1, a, f, y) == self.then(&o.proj2, b, g, y))
                .cloned()
                .collect(),
        }
    }

    /// Writes f: a → b as a chain of one-step projections.
    pub fn factorize(&self, a: Atom, b: Atom, f: &MapPattern) -> Result<Vec<FactorStep>> {
        if !self.is_map(a, b, f) {
            return Err(Error::NotFactorizable(format!("{f} is not a map {a} -> {b}")));
        }
        Ok(match (a, b, f) {
            (Atom::Sym(n), Atom::Sym(m), _) => sym::factorize(n, m),
            (Atom::Line(n), Atom::Line(_), MapPattern::Select(sel)) => line::factorize(n, sel),
            (Atom::Finite(_), Atom::Finite(_), _) => {
                let (sa, sb) = (self.size(a), self.size(b));
                if sa == sb {
                    Vec::new()
                } else {
                    vec![FactorStep { source: a, target: b, fiber: FiberClass::Card(sa / sb) }]
                }
            }
            _ => return Err(Error::NotFactorizable(format!("{a} -> {b}"))),
        })
    }

    /// Decompositions of the fiber class into smaller classes and points.
    pub fn fiber_relations(&self, class: FiberClass) -> Vec<FiberRelation> {
        let rel = |parts: Vec<FiberClass>, points: usize| FiberRelation { class, parts, points };
        match class {
            // removing one more point
            FiberClass::OmegaMinus(c) => vec![rel(vec![FiberClass::OmegaMinus(c + 1)], 1)],
            // cutting at a point: ℚ ≅ ray, and a ray splits into an interval and a ray
            FiberClass::Ray => vec![rel(vec![FiberClass::Ray, FiberClass::Ray], 1), rel(vec![FiberClass::Interval, FiberClass::Ray], 1)],
            FiberClass::Interval => vec![rel(vec![FiberClass::Interval, FiberClass::Interval], 1)],
            FiberClass::Card(n) => vec![rel(Vec::new(), n)],
        }
    }

    /// The classes the relations of `class` mention, other than itself.
    pub fn fiber_neighbors(&self, class: FiberClass) -> Vec<FiberClass> {
        let mut out: Vec<FiberClass> = self
            .fiber_relations(class)
            .into_iter()
            .flat_map(|r| r.parts)
            .filter(|c| *c != class)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}
