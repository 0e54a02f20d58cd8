//! Finite lattices presented as join-semilattices by generators and relations.
//!
//! ```text
//! generators: a a' b c u v
//! rel: a' <= a
//! rel: a <= b|c
//! ```

use std::collections::{HashMap, HashSet};

use super::FinLattice;
use crate::bits::{ElemSet, MAX_ELEMENTS};
use crate::error::{parse_err, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    /// `(g, h)`: `g <= h`.
    pub leq_relations: Vec<(usize, usize)>,
    /// `(g, body)`: `g <= join of body`.
    pub cover_relations: Vec<(usize, Vec<usize>)>,
}

impl Presentation {
    pub fn new<S: AsRef<str>>(generators: &[S], relations: &[(S, &[S])]) -> Result<Presentation> {
        let generators: Vec<String> = generators.iter().map(|s| s.as_ref().to_string()).collect();
        let mut pres = Presentation {
            generators,
            leq_relations: Vec::new(),
            cover_relations: Vec::new(),
        };
        pres.check_generators()?;
        for (head, body) in relations {
            let head = pres.generator(head.as_ref())?;
            let body = body
                .iter()
                .map(|b| pres.generator(b.as_ref()))
                .collect::<Result<Vec<_>>>()?;
            pres.push_relation(head, body);
        }
        Ok(pres)
    }

    fn check_generators(&self) -> Result<()> {
        if self.generators.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "generator set",
                size: self.generators.len(),
                bound: MAX_ELEMENTS,
            });
        }
        let mut seen = HashSet::new();
        for g in &self.generators {
            if !seen.insert(g) {
                return Err(Error::DuplicateLabel(g.clone()));
            }
        }
        Ok(())
    }

    fn generator(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    fn push_relation(&mut self, head: usize, body: Vec<usize>) {
        if body.len() == 1 {
            self.leq_relations.push((head, body[0]));
        } else {
            self.cover_relations.push((head, body));
        }
    }

    /// Horn rules `body ⊆ S => head ∈ S`.
    fn rules(&self) -> Vec<(ElemSet, usize)> {
        self.leq_relations
            .iter()
            .map(|&(g, h)| (ElemSet::singleton(h), g))
            .chain(
                self.cover_relations
                    .iter()
                    .map(|(g, body)| (body.iter().copied().collect(), *g)),
            )
            .collect()
    }

    pub fn parse(text: &str) -> Result<Presentation> {
        let mut generators: Option<Vec<String>> = None;
        let mut rels: Vec<(usize, String, Vec<String>)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(line_no, format!("expected `key: ...`, got `{line}`")))?;
            match key.trim() {
                "generators" => {
                    if generators.is_some() {
                        return Err(parse_err(line_no, "duplicate `generators:` line"));
                    }
                    generators = Some(rest.split_whitespace().map(String::from).collect());
                }
                "rel" => {
                    let (head, body) = rest
                        .split_once("<=")
                        .ok_or_else(|| parse_err(line_no, "relation needs `<=`"))?;
                    let head = head.trim();
                    let body: Vec<String> = body.split('|').map(|s| s.trim().to_string()).collect();
                    if head.is_empty()
                        || head.contains(char::is_whitespace)
                        || body
                            .iter()
                            .any(|b| b.is_empty() || b.contains(char::is_whitespace))
                    {
                        return Err(parse_err(
                            line_no,
                            format!("malformed relation `{}`", rest.trim()),
                        ));
                    }
                    rels.push((line_no, head.to_string(), body));
                }
                other => return Err(parse_err(line_no, format!("unknown key `{other}`"))),
            }
        }
        let generators = generators.ok_or_else(|| parse_err(0, "missing `generators:` line"))?;
        let mut pres = Presentation {
            generators,
            leq_relations: Vec::new(),
            cover_relations: Vec::new(),
        };
        pres.check_generators()
            .map_err(|e| parse_err(1, e.to_string()))?;
        for (line_no, head, body) in rels {
            let look = |s: &str| {
                pres.generator(s)
                    .map_err(|_| parse_err(line_no, format!("unknown generator `{s}`")))
            };
            let h = look(&head)?;
            let b = body.iter().map(|s| look(s)).collect::<Result<Vec<_>>>()?;
            pres.push_relation(h, b);
        }
        Ok(pres)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\n", self.generators.join(" "));
        for &(g, h) in &self.leq_relations {
            out.push_str(&format!(
                "rel: {} <= {}\n",
                self.generators[g], self.generators[h]
            ));
        }
        for (g, body) in &self.cover_relations {
            let names: Vec<&str> = body.iter().map(|&b| self.generators[b].as_str()).collect();
            out.push_str(&format!(
                "rel: {} <= {}\n",
                self.generators[*g],
                names.join("|")
            ));
        }
        out
    }
}

fn horn_closure(rules: &[(ElemSet, usize)], set: ElemSet) -> ElemSet {
    let mut s = set;
    loop {
        let before = s;
        for &(body, head) in rules {
            if body.is_subset(s) {
                s.insert(head);
            }
        }
        if s == before {
            return s;
        }
    }
}

/// The closed sets of the presentation, ordered by inclusion.
///
/// A closed set equal to the closure of a generator is labelled by the first
/// such generator, any other closed set by its members in set notation.
pub fn lattice_from_join_presentation(pres: &Presentation) -> Result<FinLattice> {
    let (lattice, _) = closed_sets_lattice(pres)?;
    Ok(lattice)
}

/// As [`lattice_from_join_presentation`], also returning the closed set behind each element.
pub fn closed_sets_lattice(pres: &Presentation) -> Result<(FinLattice, Vec<ElemSet>)> {
    pres.check_generators()?;
    let rules = pres.rules();
    let n = pres.generators.len();
    let bottom = horn_closure(&rules, ElemSet::EMPTY);
    let mut seen: HashSet<ElemSet> = HashSet::from([bottom]);
    let mut stack = vec![bottom];
    while let Some(s) = stack.pop() {
        for g in ElemSet::full(n).difference(s).iter() {
            let t = horn_closure(&rules, s.with(g));
            if seen.insert(t) {
                if seen.len() > super::LATTICE_BOUND {
                    return Err(Error::TooLarge {
                        what: "presented lattice",
                        size: seen.len(),
                        bound: super::LATTICE_BOUND,
                    });
                }
                stack.push(t);
            }
        }
    }
    let mut sets: Vec<ElemSet> = seen.into_iter().collect();
    sets.sort_by_key(|s| (s.len(), s.0));
    let index: HashMap<ElemSet, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut labels: Vec<Option<String>> = vec![None; sets.len()];
    for g in 0..n {
        let c = horn_closure(&rules, ElemSet::singleton(g));
        let slot = &mut labels[index[&c]];
        if slot.is_none() {
            *slot = Some(pres.generators[g].clone());
        }
    }
    let labels = labels
        .into_iter()
        .zip(&sets)
        .map(|(l, s)| {
            l.unwrap_or_else(|| {
                let names: Vec<&str> = s.iter().map(|g| pres.generators[g].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
        })
        .collect();
    let lattice = FinLattice::from_ops(
        labels,
        |x, y| index[&horn_closure(&rules, sets[x].union(sets[y]))],
        |x, y| index[&sets[x].intersection(sets[y])],
    )?;
    Ok((lattice, sets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_and_related() {
        let free = Presentation::new(&["x", "y"], &[]).unwrap();
        assert_eq!(lattice_from_join_presentation(&free).unwrap().len(), 4);
        let rel = Presentation::new(&["g", "h"], &[("g", &["h"][..])]).unwrap();
        let (l, sets) = closed_sets_lattice(&rel).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(sets, vec![ElemSet(0), ElemSet(1), ElemSet(3)]);
        assert_eq!(l.labels(), &["{}", "g", "h"]);
    }

    #[test]
    fn closure_is_a_closure_operator() {
        let pres =
            Presentation::parse("generators: a b c d\nrel: a <= b|c\nrel: d <= a\n").unwrap();
        let rules = pres.rules();
        for m in 0u64..16 {
            let s = ElemSet(m);
            let c = horn_closure(&rules, s);
            assert!(s.is_subset(c));
            assert_eq!(horn_closure(&rules, c), c);
            for m2 in 0u64..16 {
                if s.is_subset(ElemSet(m2)) {
                    assert!(c.is_subset(horn_closure(&rules, ElemSet(m2))));
                }
            }
        }
        let (l, sets) = closed_sets_lattice(&pres).unwrap();
        for x in 0..l.len() {
            for y in 0..l.len() {
                assert_eq!(sets[l.meet(x, y)], sets[x].intersection(sets[y]));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let text = "generators: a a' b\nrel: a' <= a\nrel: a <= a'|b\n";
        let pres = Presentation::parse(text).unwrap();
        assert_eq!(pres.to_text(), text);
        let err = Presentation::parse("generators: a b\nrel: a <= z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Presentation::parse("generators: a b\nrel: a b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
