//! Structure of enumerated quandles: orbit decomposition, pointwise
//! relation checks and isomorphism search.

use std::collections::VecDeque;

use crate::family::{SuiteCheck, SuiteItem};
use crate::report::{CheckOutcome, VerificationReport};
use crate::table::{full_op_table, CayleyTable, QuandleOpTable};

/// Connected components of the Cayley graph, i.e. orbits under the
/// generator actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub count: usize,
    /// Component orders, ascending.
    pub sizes: Vec<usize>,
    /// Component id of each element; ids follow the smallest member.
    pub membership: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

pub fn components(t: &CayleyTable) -> ComponentReport {
    let n = t.size();
    let mut membership = vec![usize::MAX; n];
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if membership[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut comp = vec![start];
        membership[start] = id;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &u in t.row(v) {
                if membership[u] == usize::MAX {
                    membership[u] = id;
                    comp.push(u);
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        members.push(comp);
    }
    let mut sizes: Vec<usize> = members.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    ComponentReport {
        count: members.len(),
        sizes,
        membership,
        members,
    }
}

/// Checks each suite item: relations at the generator seeds, identities at
/// every element.
pub fn verify_relations(t: &CayleyTable, suite: &[SuiteItem]) -> VerificationReport {
    let g = t.num_generators();
    let walk = |v: usize, letters: &[usize]| -> Option<usize> {
        letters
            .iter()
            .try_fold(v, |v, &l| (l < g).then(|| t.act(v, l)))
    };
    let mut report = VerificationReport::new();
    for item in suite {
        let mut outcome = CheckOutcome::new(item.name.clone());
        match &item.check {
            SuiteCheck::AtSeeds(r) => {
                let ok = r.lhs < g
                    && r.rhs < g
                    && walk(t.seed(r.lhs), r.word.letters()) == Some(t.seed(r.rhs));
                outcome.record(ok, || vec![r.lhs]);
            }
            SuiteCheck::Everywhere(s) => {
                for y in 0..t.size() {
                    outcome.record(walk(y, s.word.letters()) == Some(y), || vec![y]);
                }
            }
        }
        report.push(outcome);
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoResult {
    NotIsomorphic(String),
    Isomorphic {
        /// Image of each generator seed of the source.
        generator_images: Vec<usize>,
        /// Element bijection from source to target.
        map: Vec<usize>,
    },
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic { .. })
    }
}

/// Orders, component orders and per-generator fixed-point counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSummary {
    pub size: usize,
    /// Ascending.
    pub components: Vec<usize>,
    /// Number of elements fixed by each generator's action.
    pub fixed_points: Vec<usize>,
}

pub fn structure_summary(t: &CayleyTable) -> StructureSummary {
    let fixed_points = (0..t.num_generators())
        .map(|j| (0..t.size()).filter(|&v| t.act(v, j) == v).count())
        .collect();
    StructureSummary {
        size: t.size(),
        components: components(t).sizes,
        fixed_points,
    }
}

/// Searches for a quandle isomorphism `s → t`.
///
/// A map is determined by the images of the generators of `s`:
/// `map(x ▷ s_j) = map(x) ▷ image_j`. Images are tried in increasing order,
/// pruned by component order and fixed-point count of the right action.
/// The first generator only needs one candidate per component of `t`,
/// since the generator actions of `t` are automorphisms acting
/// transitively on each component; the smallest member is used, so the
/// witness found is the lexicographically smallest.
pub fn is_isomorphic(s: &CayleyTable, t: &CayleyTable) -> IsoResult {
    if s.size() != t.size() {
        return IsoResult::NotIsomorphic(format!("orders differ: {} vs {}", s.size(), t.size()));
    }
    let (cs, ct) = (components(s), components(t));
    if cs.sizes != ct.sizes {
        return IsoResult::NotIsomorphic(format!(
            "component orders differ: {:?} vs {:?}",
            cs.sizes, ct.sizes
        ));
    }
    let n = t.size();
    let top = full_op_table(t);
    let fixed_t: Vec<usize> = (0..n)
        .map(|z| (0..n).filter(|&x| top.op(x, z) == x).count())
        .collect();
    let comp_size_t: Vec<usize> = (0..n).map(|z| ct.members[ct.membership[z]].len()).collect();

    let gs = s.num_generators();
    let fixed_s: Vec<usize> = (0..gs)
        .map(|j| (0..n).filter(|&x| s.act(x, j) == x).count())
        .collect();
    let comp_size_s: Vec<usize> = (0..gs)
        .map(|j| cs.members[cs.membership[s.seed(j)]].len())
        .collect();

    let fits = |j: usize, z: usize| fixed_t[z] == fixed_s[j] && comp_size_t[z] == comp_size_s[j];
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(gs);
    candidates.push(
        ct.members
            .iter()
            .map(|m| m[0])
            .filter(|&z| fits(0, z))
            .collect(),
    );
    for j in 1..gs {
        candidates.push((0..n).filter(|&z| fits(j, z)).collect());
    }
    if candidates.iter().any(Vec::is_empty) {
        return IsoResult::NotIsomorphic(
            "some generator has no image with matching component order and fixed points".into(),
        );
    }

    let mut images = Vec::with_capacity(gs);
    let mut search = Search {
        s,
        top: &top,
        map: vec![usize::MAX; n],
        inverse: vec![usize::MAX; n],
        queue: VecDeque::new(),
    };
    if search.backtrack(&candidates, &mut images) {
        let map = search.extend(&images).expect("accepted images extend");
        IsoResult::Isomorphic {
            generator_images: images,
            map,
        }
    } else {
        IsoResult::NotIsomorphic("no generator images extend to an isomorphism".into())
    }
}

struct Search<'a> {
    s: &'a CayleyTable,
    top: &'a QuandleOpTable,
    map: Vec<usize>,
    inverse: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Search<'_> {
    fn backtrack(&mut self, candidates: &[Vec<usize>], images: &mut Vec<usize>) -> bool {
        let j = images.len();
        if j == candidates.len() {
            return true;
        }
        for &z in &candidates[j] {
            images.push(z);
            if self.extend(images).is_some() && self.backtrack(candidates, images) {
                return true;
            }
            images.pop();
        }
        false
    }

    /// Propagates the partial map from the seeds of the assigned generators
    /// along their edges. Returns the map if it stays single valued and
    /// injective.
    fn extend(&mut self, images: &[usize]) -> Option<Vec<usize>> {
        self.map.fill(usize::MAX);
        self.inverse.fill(usize::MAX);
        self.queue.clear();
        let s = self.s;
        for (j, &z) in images.iter().enumerate() {
            if !self.assign(s.seed(j), z) {
                return None;
            }
        }
        while let Some(x) = self.queue.pop_front() {
            let mx = self.map[x];
            for (h, &zh) in images.iter().enumerate() {
                let y = s.act(x, h);
                let my = self.top.op(mx, zh);
                if !self.assign(y, my) {
                    return None;
                }
            }
        }
        Some(self.map.clone())
    }

    fn assign(&mut self, x: usize, z: usize) -> bool {
        match (self.map[x], self.inverse[z]) {
            (usize::MAX, usize::MAX) => {
                self.map[x] = z;
                self.inverse[z] = x;
                self.queue.push_back(x);
                true
            }
            (mz, ix) => mz == z && ix == x,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_presentation;
    use crate::table::Rep;
    use crate::winker::{enumerate, EnumerationBudget};
    use crate::word::Word;

    fn table(text: &str) -> CayleyTable {
        let p = parse_presentation(text).unwrap();
        enumerate(&p, EnumerationBudget::default())
            .into_table()
            .unwrap()
    }

    #[test]
    fn single_element_component() {
        let t = table("gens: a; rels: ;");
        assert_eq!(components(&t).sizes, vec![1]);
        assert_eq!(structure_summary(&t).fixed_points, vec![1]);
    }

    #[test]
    fn trefoil_components_and_self_iso() {
        let t = table("gens: a b c; rels: a^b = c; b^c = a; c^a = b;");
        assert_eq!(t.size(), 3);
        assert_eq!(components(&t).sizes, vec![3]);
        match is_isomorphic(&t, &t) {
            IsoResult::Isomorphic { map, .. } => assert_eq!(map, vec![0, 1, 2]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn different_orders_are_rejected() {
        let a = table("gens: a; rels: ;");
        let b = table("gens: a b; rels: a^b = a; b^a = b;");
        assert!(matches!(is_isomorphic(&a, &b), IsoResult::NotIsomorphic(_)));
    }

    #[test]
    fn corrupted_table_fails_suite() {
        let mut t = table("gens: a b c; rels: a^b = c; b^c = a; c^a = b;");
        let suite = vec![SuiteItem {
            name: "loop".into(),
            check: SuiteCheck::Everywhere(crate::winker::SecondaryRelation {
                word: Word::new([0, 1, 0, 1, 0, 1]),
            }),
        }];
        assert!(verify_relations(&t, &suite).passed());
        let target = t.act(1, 0);
        t.set_action_unchecked(1, 0, 1);
        let report = verify_relations(&t, &suite);
        assert!(!report.passed(), "{target}");
        assert!(report.checks[0].witness.is_some());
    }

    #[test]
    fn generators_may_map_to_non_generators() {
        // two-element trivial quandle presented with a redundant generator
        let s = table("gens: a b; rels: a^b = a; b^a = b;");
        let t = CayleyTable::from_parts(
            vec!["x".into(), "y".into(), "z".into()],
            vec![vec![0, 0, 0], vec![1, 1, 1]],
            vec![
                Rep {
                    base: 0,
                    word: Word::empty(),
                },
                Rep {
                    base: 1,
                    word: Word::empty(),
                },
            ],
            vec![0, 1, 1],
        )
        .unwrap();
        assert!(is_isomorphic(&s, &t).is_isomorphic());
        assert!(is_isomorphic(&t, &s).is_isomorphic());
    }
}
