//! Planar diagram codes and their Wirtinger-style presentations.
//!
//! A crossing `X(i,j,k,l)` lists edge labels counterclockwise starting at
//! the incoming under-edge: `i` and `k` are the under-edges, `j` and `l`
//! belong to the over-strand.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Presentation, Relation, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
}

impl PdCode {
    /// Validates that every label is positive and appears exactly twice.
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &crossings {
            for &label in x {
                if label == 0 {
                    return Err(Error::InvalidPd("arc labels must be positive".into()));
                }
                *counts.entry(label).or_default() += 1;
            }
        }
        if let Some((label, n)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(Error::InvalidPd(format!(
                "arc label {label} appears {n} times, expected 2"
            )));
        }
        Ok(PdCode { crossings })
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[i, j, k, l]| format!("X({i},{j},{k},{l})"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `X(i,j,k,l),X(...)...`. Whitespace is ignored; an empty string is
/// the crossingless unknot.
pub fn parse_pd(text: &str) -> Result<PdCode> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut crossings = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix("X(")
            .ok_or_else(|| Error::InvalidPd(format!("expected `X(` at `{rest}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::InvalidPd("unterminated crossing".into()))?;
        let labels: Vec<u32> = body[..close]
            .split(',')
            .map(|n| {
                n.parse::<u32>()
                    .map_err(|_| Error::InvalidPd(format!("bad arc label `{n}`")))
            })
            .collect::<Result<_>>()?;
        let tuple: [u32; 4] = labels.try_into().map_err(|v: Vec<u32>| {
            Error::InvalidPd(format!("crossing has {} labels, expected 4", v.len()))
        })?;
        crossings.push(tuple);
        rest = &body[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(Error::InvalidPd("trailing comma".into()));
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(Error::InvalidPd(format!("expected `,` at `{rest}`")));
        }
    }
    PdCode::new(crossings)
}

/// One generator per arc (edges joined through over-crossings), one relation
/// `x_i = x_k ^ x_j` per crossing. Generators are named `x<n>` after the
/// smallest edge label on the arc.
pub fn wirtinger_presentation(pd: &PdCode) -> Presentation {
    if pd.is_empty() {
        return Presentation::new(vec!["x1".into()], vec![]).expect("one generator");
    }
    let labels: Vec<u32> = {
        let mut v: Vec<u32> = pd.crossings().iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let index = |l: u32| labels.binary_search(&l).expect("label present");
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &[_, j, _, l] in pd.crossings() {
        let (a, b) = (find(&mut parent, index(j)), find(&mut parent, index(l)));
        // keep the smaller label as root so names are stable
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    let mut arc_of = vec![usize::MAX; labels.len()];
    let mut names = Vec::new();
    for e in 0..labels.len() {
        let root = find(&mut parent, e);
        if arc_of[root] == usize::MAX {
            arc_of[root] = names.len();
            names.push(format!("x{}", labels[root]));
        }
        arc_of[e] = arc_of[root];
    }
    let relations = pd
        .crossings()
        .iter()
        .map(|&[i, j, k, _]| {
            let (ai, aj, ak) = (arc_of[index(i)], arc_of[index(j)], arc_of[index(k)]);
            Relation::new(ak, Word::letter(aj), ai)
        })
        .collect();
    Presentation::new(names, relations).expect("arcs cover all relation indices")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const TREFOIL: &str = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
    pub const HOPF: &str = "X(1,3,2,4),X(3,1,4,2)";

    #[test]
    fn parses_standard_codes() {
        assert_eq!(parse_pd(TREFOIL).unwrap().crossings().len(), 3);
        assert_eq!(parse_pd(HOPF).unwrap().crossings().len(), 2);
        assert_eq!(
            parse_pd(" X(1, 4,2,5), X(3,6,4,1) ,X(5,2,6,3)")
                .unwrap()
                .to_string(),
            TREFOIL
        );
    }

    #[test]
    fn label_counts_are_validated() {
        assert!(parse_pd("X(1,1,2,2)").is_ok());
        assert!(matches!(parse_pd("X(1,2,3,4)"), Err(Error::InvalidPd(_))));
        assert!(parse_pd("X(1,2,3)").is_err());
        assert!(parse_pd("X(1,1,2,2),").is_err());
        assert!(parse_pd("Y(1,1,2,2)").is_err());
        assert!(parse_pd("X(0,0,2,2)").is_err());
    }

    #[test]
    fn wirtinger_shapes() {
        let t = wirtinger_presentation(&parse_pd(TREFOIL).unwrap());
        assert_eq!((t.num_generators(), t.relations().len()), (3, 3));
        let h = wirtinger_presentation(&parse_pd(HOPF).unwrap());
        assert_eq!((h.num_generators(), h.relations().len()), (2, 2));
        let u = wirtinger_presentation(&parse_pd("").unwrap());
        assert_eq!((u.num_generators(), u.relations().len()), (1, 0));
    }
}
