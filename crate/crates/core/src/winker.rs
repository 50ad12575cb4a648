//! Winker-style enumeration of a finitely presented involutory quandle.
//!
//! The Cayley graph is grown from one vertex per generator. Primary
//! relations are traced from their seeds, then every vertex is swept with
//! the involutory relations `y^(gg) = y` and all secondary relations.
//! Coincident vertices are merged with a union-find, propagating along
//! equally labelled edges until the graph is quiescent.
//!
//! Edges are stored as a partial involution per generator, so `y^(gg) = y`
//! holds structurally; tracing it only creates the missing `g`-neighbour.

use std::collections::VecDeque;

use crate::table::{CayleyTable, Rep};
use crate::word::{Presentation, Relation, Word};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_elements: usize,
    pub max_steps: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_elements: 10_000,
            max_steps: 10_000_000,
        }
    }
}

impl EnumerationBudget {
    pub fn new(max_elements: usize, max_steps: u64) -> Self {
        assert!(max_elements > 0 && max_steps > 0, "budget must be positive");
        EnumerationBudget {
            max_elements,
            max_steps,
        }
    }
}

/// `y^word = y` for every element `y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SecondaryRelation {
    pub word: Word,
}

/// The secondary relation of `x_j^w = x_k`: `reverse(w) x_j w x_k`.
pub fn secondary_of(r: &Relation) -> SecondaryRelation {
    SecondaryRelation {
        word: r.word.conjugate_of(r.lhs).concat(&Word::letter(r.rhs)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationResult {
    Finite(CayleyTable),
    BudgetExceeded {
        elements_reached: usize,
        steps_used: u64,
    },
}

impl EnumerationResult {
    pub fn table(&self) -> Option<&CayleyTable> {
        match self {
            EnumerationResult::Finite(t) => Some(t),
            EnumerationResult::BudgetExceeded { .. } => None,
        }
    }

    pub fn into_table(self) -> Option<CayleyTable> {
        match self {
            EnumerationResult::Finite(t) => Some(t),
            EnumerationResult::BudgetExceeded { .. } => None,
        }
    }
}

#[derive(Debug)]
struct Exceeded;

type Step<T> = std::result::Result<T, Exceeded>;

/// Mutable enumeration state. Only live vertices appear in `action`, and
/// `action` is a partial involution in every column.
#[derive(Debug, Clone)]
pub struct EnumerationState {
    gens: usize,
    action: Vec<u32>,
    parent: Vec<u32>,
    reps: Vec<Rep>,
    live: usize,
    queue: VecDeque<(u32, u32)>,
    steps: u64,
    budget: EnumerationBudget,
    created: u64,
    merged: u64,
    defined: u64,
}

impl EnumerationState {
    /// One vertex per generator, each with its loop.
    pub fn new(num_generators: usize, budget: EnumerationBudget) -> Self {
        let mut st = EnumerationState {
            gens: num_generators,
            action: Vec::new(),
            parent: Vec::new(),
            reps: Vec::new(),
            live: 0,
            queue: VecDeque::new(),
            steps: 0,
            budget,
            created: 0,
            merged: 0,
            defined: 0,
        };
        for g in 0..num_generators {
            let v = st.push_vertex(Rep {
                base: g,
                word: Word::empty(),
            });
            st.set_edge(v, g, v);
        }
        st
    }

    /// Number of live vertices.
    pub fn live(&self) -> usize {
        self.live
    }

    /// Number of vertices ever created, including merged ones.
    pub fn allocated(&self) -> usize {
        self.parent.len()
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn pending_merges(&self) -> usize {
        self.queue.len()
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        let mut root = v;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        while self.parent[v] as usize != root {
            let next = self.parent[v] as usize;
            self.parent[v] = root as u32;
            v = next;
        }
        root
    }

    pub fn is_live(&self, v: usize) -> bool {
        self.parent[v] as usize == v
    }

    /// Neighbour of a live vertex along `g`, if defined.
    pub fn neighbour(&self, v: usize, g: usize) -> Option<usize> {
        match self.action[v * self.gens + g] {
            NONE => None,
            u => Some(u as usize),
        }
    }

    fn push_vertex(&mut self, rep: Rep) -> usize {
        let v = self.parent.len();
        self.parent.push(v as u32);
        self.action.extend(std::iter::repeat_n(NONE, self.gens));
        self.reps.push(rep);
        self.live += 1;
        self.created += 1;
        v
    }

    fn set_edge(&mut self, u: usize, g: usize, v: usize) {
        self.action[u * self.gens + g] = v as u32;
        self.action[v * self.gens + g] = u as u32;
        self.defined += 1;
    }

    fn tick(&mut self) -> Step<()> {
        self.steps += 1;
        if self.steps > self.budget.max_steps {
            Err(Exceeded)
        } else {
            Ok(())
        }
    }

    fn new_neighbour(&mut self, u: usize, g: usize) -> Step<usize> {
        if self.live >= self.budget.max_elements {
            return Err(Exceeded);
        }
        let rep = Rep {
            base: self.reps[u].base,
            word: self.reps[u].word.concat(&Word::letter(g)),
        };
        let v = self.push_vertex(rep);
        self.set_edge(u, g, v);
        Ok(v)
    }

    /// Queues the identification of two vertices.
    pub fn request_merge(&mut self, u: usize, v: usize) {
        if u != v {
            self.queue.push_back((u as u32, v as u32));
        }
    }

    /// Makes sure a path labelled `word` runs from `start` to `end`, adding
    /// vertices where needed. A forced identification of endpoints is queued
    /// for [`collapse`](Self::collapse).
    fn trace(&mut self, start: usize, word: &[usize], end: usize) -> Step<()> {
        let (mut f, mut i) = (self.find(start), 0);
        let (mut b, mut j) = (self.find(end), word.len());
        loop {
            while i < j {
                match self.neighbour(f, word[i]) {
                    Some(x) => {
                        f = x;
                        i += 1;
                        self.tick()?;
                    }
                    None => break,
                }
            }
            if i == j {
                self.request_merge(f, b);
                return Ok(());
            }
            while j > i {
                match self.neighbour(b, word[j - 1]) {
                    Some(x) => {
                        b = x;
                        j -= 1;
                        self.tick()?;
                    }
                    None => break,
                }
            }
            if i == j {
                self.request_merge(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set_edge(f, word[i], b);
                self.tick()?;
                return Ok(());
            }
            f = self.new_neighbour(f, word[i])?;
            i += 1;
            self.tick()?;
        }
    }

    /// Processes queued identifications until none remain. The smaller
    /// index survives; edges of the absorbed vertex are moved over, and a
    /// clash of labels queues the merge of the two neighbours.
    pub fn collapse(&mut self) -> u64 {
        let before = self.merged;
        while let Some((x, y)) = self.queue.pop_front() {
            let (x, y) = (self.find(x as usize), self.find(y as usize));
            if x == y {
                continue;
            }
            let (keep, kill) = if x < y { (x, y) } else { (y, x) };
            self.parent[kill] = keep as u32;
            self.live -= 1;
            self.merged += 1;
            self.steps += 1;
            for g in 0..self.gens {
                let slot = kill * self.gens + g;
                let w = self.action[slot];
                if w == NONE {
                    continue;
                }
                self.action[slot] = NONE;
                let mut w = w as usize;
                if w == kill {
                    w = keep;
                } else {
                    self.action[w * self.gens + g] = NONE;
                }
                match self.neighbour(keep, g) {
                    Some(existing) => self.request_merge(existing, w),
                    None => {
                        self.action[keep * self.gens + g] = w as u32;
                        self.action[w * self.gens + g] = keep as u32;
                    }
                }
            }
        }
        self.merged - before
    }

    /// Compacts live vertices to dense indices in discovery order.
    fn into_table(mut self, generators: Vec<String>) -> CayleyTable {
        let total = self.parent.len();
        let mut index = vec![usize::MAX; total];
        let mut next = 0;
        for (v, slot) in index.iter_mut().enumerate() {
            if self.parent[v] as usize == v {
                *slot = next;
                next += 1;
            }
        }
        let g = self.gens;
        let mut action = Vec::with_capacity(next);
        let mut reps = Vec::with_capacity(next);
        for v in 0..total {
            if index[v] == usize::MAX {
                continue;
            }
            let row = (0..g)
                .map(|j| index[self.action[v * g + j] as usize])
                .collect();
            action.push(row);
            reps.push(std::mem::replace(
                &mut self.reps[v],
                Rep {
                    base: 0,
                    word: Word::empty(),
                },
            ));
        }
        let seeds = (0..g).map(|j| index[self.find(j)]).collect();
        CayleyTable::from_parts(generators, action, reps, seeds)
            .expect("closed enumeration state is a valid table")
    }

    fn changes(&self) -> (u64, u64, u64) {
        (self.created, self.merged, self.defined)
    }
}

/// Runs Winker's method on `p` within `budget`.
///
/// Primary relations are traced in order, collapsing after each; then
/// vertices are swept in index order, tracing `y^(gg) = y` for every
/// generator and each secondary relation at each vertex. Sweeps repeat
/// until one creates, defines and merges nothing.
pub fn enumerate(p: &Presentation, budget: EnumerationBudget) -> EnumerationResult {
    let mut st = EnumerationState::new(p.num_generators(), budget);
    match run(&mut st, p) {
        Ok(()) => EnumerationResult::Finite(st.into_table(p.generators().to_vec())),
        Err(Exceeded) => EnumerationResult::BudgetExceeded {
            elements_reached: st.live,
            steps_used: st.steps,
        },
    }
}

fn run(st: &mut EnumerationState, p: &Presentation) -> Step<()> {
    if st.live > st.budget.max_elements {
        return Err(Exceeded);
    }
    for r in p.relations() {
        st.trace(r.lhs, r.word.letters(), r.rhs)?;
        st.collapse();
    }
    let secondaries: Vec<SecondaryRelation> = p
        .relations()
        .iter()
        .map(secondary_of)
        .filter(|s| !s.word.is_empty())
        .collect();
    loop {
        let before = st.changes();
        let mut v = 0;
        while v < st.parent.len() {
            if st.is_live(v) {
                sweep_vertex(st, v, &secondaries)?;
            }
            v += 1;
        }
        if st.changes() == before {
            return Ok(());
        }
    }
}

fn sweep_vertex(
    st: &mut EnumerationState,
    v: usize,
    secondaries: &[SecondaryRelation],
) -> Step<()> {
    for g in 0..st.gens {
        if !st.is_live(v) {
            return Ok(());
        }
        if st.neighbour(v, g).is_none() {
            st.trace(v, &[g, g], v)?;
            st.collapse();
        }
    }
    for s in secondaries {
        if !st.is_live(v) {
            return Ok(());
        }
        st.trace(v, s.word.letters(), v)?;
        st.collapse();
    }
    Ok(())
}

/// Traces one relation from its seed in a fresh state and collapses.
/// Exposed for inspecting single steps of the method.
pub fn trace_relation(st: &mut EnumerationState, r: &Relation) -> bool {
    let ok = st.trace(r.lhs, r.word.letters(), r.rhs).is_ok();
    st.collapse();
    ok
}

/// Traces a secondary relation as a loop at `start` and collapses.
pub fn trace_secondary(st: &mut EnumerationState, start: usize, s: &SecondaryRelation) -> bool {
    let ok = st.trace(start, s.word.letters(), start).is_ok();
    st.collapse();
    ok
}
