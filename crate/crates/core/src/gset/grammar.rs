//! Text forms of atoms, objects and maps.
//!
//! ```text
//! sym:inj[2]   line:inc[3]   finite:orbit#2          atoms
//! sym:inj[1] + sym:inj[2]    0                       objects
//! [2,1]   drop{1}   coset#3                          atom maps (1-based)
//! m{1=2}   w:LBR   o(0,3)                            product orbits
//! sym:inj[1] + sym:inj[2] -> sym:inj[1] : [1]@1 [2]@1   object maps
//! ```

use super::{Atom, Backend, GMap, GObject, Letter, MapPattern, OrbitLabel};
use crate::error::{Error, Result};

/// Drops a trailing comment: `#` at the start of a line or after whitespace.
/// A `#` inside a token such as `finite:orbit#2` is kept.
pub fn strip_comment(line: &str) -> &str {
    let cut = line
        .char_indices()
        .find(|&(i, c)| c == '#' && line[..i].chars().next_back().is_none_or(char::is_whitespace))
        .map_or(line.len(), |(i, _)| i);
    line[..cut].trim()
}

pub fn parse_atom(backend: &Backend, s: &str) -> Result<Atom> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad atom `{s}`"));
    let atom = if let Some(rest) = s.strip_prefix("sym:inj[") {
        Atom::Sym(rest.strip_suffix(']').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?)
    } else if let Some(rest) = s.strip_prefix("line:inc[") {
        Atom::Line(rest.strip_suffix(']').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?)
    } else if let Some(rest) = s.strip_prefix("finite:orbit#") {
        Atom::Finite(rest.trim().parse().map_err(|_| bad())?)
    } else {
        return Err(bad());
    };
    backend.check_atom(atom)?;
    Ok(atom)
}

pub fn parse_object(backend: &Backend, s: &str) -> Result<GObject> {
    let s = s.trim();
    if s == "0" {
        return Ok(GObject::empty());
    }
    let atoms = s.split('+').map(|a| parse_atom(backend, a)).collect::<Result<Vec<_>>>()?;
    Ok(GObject::new(atoms))
}

/// Parses a map pattern `a → b`.
pub fn parse_pattern(backend: &Backend, a: Atom, b: Atom, s: &str) -> Result<MapPattern> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad map pattern `{s}`"));
    let indices = |body: &str| -> Result<Vec<usize>> {
        body.split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1).ok_or_else(bad))
            .collect()
    };
    let p = if let Some(body) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        MapPattern::Select(indices(body)?)
    } else if let Some(body) = s.strip_prefix("drop{").and_then(|r| r.strip_suffix('}')) {
        let dropped = indices(body)?;
        MapPattern::Select((0..backend.size(a)).filter(|i| !dropped.contains(i)).collect())
    } else if let Some(k) = s.strip_prefix("coset#") {
        MapPattern::Point(k.trim().parse().map_err(|_| bad())?)
    } else {
        return Err(bad());
    };
    if !backend.is_map(a, b, &p) {
        return Err(Error::Parse(format!("`{s}` is not a map {a} -> {b}")));
    }
    Ok(p)
}

/// Parses `SOURCE -> TARGET : p₁@t₁ p₂@t₂ …`, one pattern per source atom in
/// canonical order.
/// The `@t` part may be omitted when the target is a single atom.
pub fn parse_gmap(backend: &Backend, s: &str) -> Result<GMap> {
    let (src, rest) = s.split_once("->").ok_or_else(|| Error::Parse(format!("missing `->` in map `{s}`")))?;
    // atoms contain ':' too, but always followed by a letter
    let sep = rest
        .char_indices()
        .rfind(|&(i, c)| c == ':' && rest[i + 1..].chars().next().is_none_or(char::is_whitespace))
        .map(|(i, _)| i)
        .ok_or_else(|| Error::Parse(format!("missing `:` in map `{s}`")))?;
    let (tgt, pats) = (&rest[..sep], &rest[sep + 1..]);
    let source = parse_object(backend, src)?;
    let target = parse_object(backend, tgt)?;
    let tokens: Vec<&str> = pats.split_whitespace().collect();
    if tokens.len() != source.len() {
        return Err(Error::Parse(format!("{} patterns for {} source atoms", tokens.len(), source.len())));
    }
    let mut assign = Vec::new();
    for (tok, &a) in tokens.iter().zip(source.atoms()) {
        let (pat, pos) = match tok.rsplit_once('@') {
            Some((p, t)) => (p, t.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1).ok_or_else(|| Error::Parse(format!("bad target position in `{tok}`")))?),
            None if target.len() == 1 => (*tok, 0),
            None => return Err(Error::Parse(format!("`{tok}` needs an @target position"))),
        };
        let b = *target.atoms().get(pos).ok_or_else(|| Error::Parse(format!("target position out of range in `{tok}`")))?;
        assign.push((pos, parse_pattern(backend, a, b, pat)?));
    }
    GMap::new(backend, source, target, assign)
}

/// Parses an orbit label as printed: `m{1=2,2=1}`, `w:LBR` or `o(p,q)`.
pub fn parse_orbit_label(s: &str) -> Result<OrbitLabel> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad orbit label `{s}`"));
    if let Some(body) = s.strip_prefix("m{").and_then(|r| r.strip_suffix('}')) {
        let mut pairs = Vec::new();
        for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (i, j) = part.split_once('=').ok_or_else(bad)?;
            let one_based = |x: &str| x.trim().parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1).ok_or_else(bad);
            pairs.push((one_based(i)?, one_based(j)?));
        }
        pairs.sort();
        return Ok(OrbitLabel::Matching(pairs));
    }
    if let Some(body) = s.strip_prefix("w:") {
        let word = body
            .chars()
            .map(|c| match c {
                'L' => Ok(Letter::L),
                'B' => Ok(Letter::B),
                'R' => Ok(Letter::R),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(OrbitLabel::Word(word));
    }
    if let Some(body) = s.strip_prefix("o(").and_then(|r| r.strip_suffix(')')) {
        let (p, q) = body.split_once(',').ok_or_else(bad)?;
        return Ok(OrbitLabel::Pair(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?));
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_and_objects() {
        let b = Backend::sym();
        assert_eq!(parse_atom(&b, "sym:inj[2]").unwrap(), Atom::Sym(2));
        assert!(parse_atom(&b, "line:inc[2]").is_err());
        let x = parse_object(&b, "sym:inj[2] + sym:inj[1]").unwrap();
        assert_eq!(x.to_string(), "sym:inj[1] + sym:inj[2]");
        assert!(parse_object(&b, "0").unwrap().is_empty());
    }

    #[test]
    fn patterns() {
        let b = Backend::sym();
        assert_eq!(parse_pattern(&b, Atom::Sym(2), Atom::Sym(1), "[2]").unwrap(), MapPattern::Select(vec![1]));
        assert_eq!(parse_pattern(&b, Atom::Sym(3), Atom::Sym(2), "drop{1}").unwrap(), MapPattern::Select(vec![1, 2]));
        assert!(parse_pattern(&b, Atom::Sym(1), Atom::Sym(2), "[1,1]").is_err());
        let l = Backend::line();
        assert!(parse_pattern(&l, Atom::Line(2), Atom::Line(2), "[2,1]").is_err());
    }

    #[test]
    fn maps_round_trip() {
        let b = Backend::sym();
        let f = parse_gmap(&b, "sym:inj[2] -> sym:inj[1] : [1]").unwrap();
        assert_eq!(f.assign, vec![(0, MapPattern::Select(vec![0]))]);
        let g = parse_gmap(&b, "sym:inj[1] + sym:inj[2] -> sym:inj[1] : [1]@1 [2]@1").unwrap();
        assert_eq!(parse_gmap(&b, &g.to_string()).unwrap(), g);
    }

    #[test]
    fn comments() {
        assert_eq!(strip_comment("finite:orbit#2 = 3 # three points"), "finite:orbit#2 = 3");
        assert_eq!(strip_comment("# whole line"), "");
        assert_eq!(strip_comment("coset#1"), "coset#1");
    }

    #[test]
    fn orbit_labels_round_trip() {
        for b in [Backend::sym(), Backend::line()] {
            for (x, y) in [(2, 2), (3, 1), (0, 2)] {
                let (x, y) = match b.kind() {
                    super::super::Kind::Sym => (Atom::Sym(x), Atom::Sym(y)),
                    _ => (Atom::Line(x), Atom::Line(y)),
                };
                for o in b.product(x, y).orbits.iter() {
                    assert_eq!(parse_orbit_label(&o.label.to_string()).unwrap(), o.label);
                }
            }
        }
        assert_eq!(parse_orbit_label("o(0,3)").unwrap(), OrbitLabel::Pair(0, 3));
        assert!(parse_orbit_label("m{1=}").is_err());
        assert!(parse_orbit_label("w:LXR").is_err());
    }
}
