//! Line-oriented text form of invariant matrices.
//!
//! ```text
//! target sym:inj[1]
//! source sym:inj[1]
//! entry 1 1 m{1=1} = t - 1     # target atom, source atom (1-based), orbit, value
//! ```

use std::fmt::Write;

use super::InvariantMatrix;
use crate::coeff::{parse_scalar, Field};
use crate::error::{Error, Result};
use crate::gset::{parse_object, parse_orbit_label, strip_comment, Backend, GObject};

impl InvariantMatrix {
    pub fn parse(backend: &Backend, text: &str, field: Field) -> Result<Self> {
        let mut target: Option<GObject> = None;
        let mut source: Option<GObject> = None;
        let mut entries = Vec::new();
        for line in text.lines() {
            let line = strip_comment(line);
            if line.is_empty() {
                continue;
            }
            let (kind, rest) = line.split_once(char::is_whitespace).ok_or_else(|| Error::Parse(format!("bad line `{line}`")))?;
            match kind {
                "target" => target = Some(parse_object(backend, rest)?),
                "source" => source = Some(parse_object(backend, rest)?),
                "entry" => entries.push(rest.to_string()),
                _ => return Err(Error::Parse(format!("unknown entry `{kind}`"))),
            }
        }
        let (target, source) = match (target, source) {
            (Some(t), Some(s)) => (t, s),
            _ => return Err(Error::Parse("a matrix needs `target` and `source` lines".into())),
        };
        let mut m = InvariantMatrix::zero(target, source);
        for e in entries {
            let mut parts = e.splitn(4, char::is_whitespace).map(str::trim);
            let (Some(i), Some(j), Some(label), Some(value)) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
                return Err(Error::Parse(format!("expected `i j orbit = value` in `{e}`")));
            };
            let value = value.strip_prefix('=').ok_or_else(|| Error::Parse(format!("missing `=` in `{e}`")))?;
            let pos = |s: &str, obj: &GObject| {
                s.parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1 && v <= obj.len())
                    .map(|v| v - 1)
                    .ok_or_else(|| Error::Parse(format!("atom position `{s}` out of range for {obj}")))
            };
            let (i, j) = (pos(i, &m.target)?, pos(j, &m.source)?);
            let label = parse_orbit_label(label)?;
            let (y, x) = (m.target.atoms()[i], m.source.atoms()[j]);
            if backend.product(y, x).position(&label).is_none() {
                return Err(Error::Parse(format!("{label} is not an orbit of {y} x {x}")));
            }
            let v = parse_scalar(value, field)?;
            m.add_to((i, j, label), &v)?;
        }
        Ok(m)
    }

    /// Renders the form read by [`InvariantMatrix::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "target {}", self.target);
        let _ = writeln!(s, "source {}", self.source);
        for ((i, j, label), v) in &self.entries {
            let _ = writeln!(s, "entry {} {} {} = {}", i + 1, j + 1, label, v);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gset::{Atom, OrbitLabel};

    #[test]
    fn text_round_trip() {
        let b = Backend::sym();
        let f = Field::RatFuncQ('t');
        let text = "target sym:inj[1]\nsource sym:inj[1]\nentry 1 1 m{} = t - 1\nentry 1 1 m{1=1} = 2 # diagonal\n";
        let m = InvariantMatrix::parse(&b, text, f).unwrap();
        assert_eq!(m.entries().len(), 2);
        assert_eq!(m.entry(&(0, 0, OrbitLabel::Matching(vec![(0, 0)]))), crate::coeff::Scalar::int(2));
        assert_eq!(InvariantMatrix::parse(&b, &m.to_text(), f).unwrap(), m);
        assert_eq!(m.target, GObject::atom(Atom::Sym(1)));
        assert!(InvariantMatrix::parse(&b, "target sym:inj[1]\nsource sym:inj[1]\nentry 1 1 m{1=2} = 1", f).is_err());
        assert!(InvariantMatrix::parse(&b, "target sym:inj[1]\nentry 1 1 m{} = 1", f).is_err());
    }
}
