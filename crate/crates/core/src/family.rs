//! The links `L(k, p/q) ∪ C`: a two-bridge link with `k` half-twists and a
//! `p/q`-tangle, plus an unknotted axis `C`.
//!
//! Generators are always `a`, `b`, `c` (indices 0, 1, 2). The arcs on the
//! left of the half-twist block carry the labels `a^X`, `b^X`, `b^Y` with
//! `X = (ba)^t c` and `Y = (ba)^(t+1) c`.

use crate::error::{Error, Result};
use crate::parser::{flatten_equation, ExprNode};
use crate::winker::{secondary_of, SecondaryRelation};
use crate::word::{Presentation, Relation, Word};

pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;

fn gens() -> Vec<String> {
    vec!["a".into(), "b".into(), "c".into()]
}

/// Normalized parameters: `q >= 2`, `0 < p < q`, `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    k: i64,
    p: i64,
    q: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl FamilyParams {
    /// Brings `p` into `(0, q)` by flypes: each replacement of `p` by
    /// `p ± q` replaces `k` by `k ± 1`, which leaves `kq - p` unchanged.
    pub fn normalize(k: i64, p: i64, q: i64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidDenominator(q));
        }
        let r = p.rem_euclid(q);
        if r == 0 {
            return Err(Error::TrivialTangle { p, q });
        }
        if gcd(r, q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        let shift = (p - r) / q;
        Ok(FamilyParams {
            k: k - shift,
            p: r,
            q,
        })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `kq - p`.
    pub fn d(&self) -> i64 {
        self.k * self.q - self.p
    }

    /// `k/2` for even `k`, `(k-1)/2` for odd `k`.
    pub fn t(&self) -> i64 {
        self.k.div_euclid(2)
    }

    /// Parameters of the mirror image, `(1 - k, q - p, q)`.
    pub fn mirror(&self) -> Self {
        FamilyParams {
            k: 1 - self.k,
            p: self.q - self.p,
            q: self.q,
        }
    }

    /// Notes about parameters outside the range the finite-quandle list
    /// annotates explicitly.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.k == 0 {
            out.push(format!(
                "k = 0 for {self}: the finite-quandle list annotates a related family with k != 0; \
                 finiteness is decided by enumeration"
            ));
        }
        out
    }

    /// `2q(|kq - p| + 1)`.
    pub fn expected_cardinality(&self) -> usize {
        (2 * self.q * (self.d().abs() + 1)) as usize
    }

    /// Component orders as listed in the table of quandle orders, keyed by
    /// the parity of `q`: `{2q|d|, 2q}` for odd `q`, `{q|d|, q|d|, 2q}` for
    /// even `q`. Sorted ascending.
    pub fn expected_components(&self) -> Vec<usize> {
        let (q, d) = (self.q as usize, self.d().unsigned_abs() as usize);
        let mut v = if q % 2 == 1 {
            vec![2 * q * d, 2 * q]
        } else {
            vec![q * d, q * d, 2 * q]
        };
        v.sort_unstable();
        v
    }

    /// Component orders of the Cayley graph keyed by the parity of `kq - p`:
    /// two components `{2q|d|, 2q}` when it is odd, three components
    /// `{q|d|, q|d|, 2q}` when it is even. Sorted ascending.
    pub fn cayley_components(&self) -> Vec<usize> {
        let (q, d) = (self.q as usize, self.d().unsigned_abs() as usize);
        let mut v = if d % 2 == 1 {
            vec![2 * q * d, 2 * q]
        } else {
            vec![q * d, q * d, 2 * q]
        };
        v.sort_unstable();
        v
    }
}

impl std::fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L({}, {}/{}) ∪ C", self.k, self.p, self.q)
    }
}

pub fn normalize_params(k: i64, p: i64, q: i64) -> Result<FamilyParams> {
    FamilyParams::normalize(k, p, q)
}

pub fn mirror_params(fp: &FamilyParams) -> FamilyParams {
    fp.mirror()
}

/// Which side of the tangle box a strand crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Right side, under the arc `a`.
    Right,
    /// Bottom, under `a^X` (odd `k`) or `b^X` (even `k`).
    Bottom,
    /// Top, under `b^Y` (odd `k`) or `a^X` (even `k`).
    Top,
}

/// Arc a strand passes under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnderArc {
    A,
    AX,
    BX,
    BY,
}

/// Crossing sequences of the two strands through the `p/q`-tangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleWalk {
    pub p: i64,
    pub q: i64,
    /// Strand leaving the arc `a`.
    pub first: Vec<Side>,
    /// The other strand: from `b` for odd `q`, from the bottom arc for even `q`.
    pub second: Vec<Side>,
}

/// Walks the slope-one line through the tiled tangle box.
///
/// The line meets the horizontal sides `q - 1` times in total, at
/// positions `2i - 1` (odd `q`) or `2i` (even `q`) modulo `q` for
/// `i = 1..q`, and meets the right side between consecutive horizontal
/// crossings. A horizontal crossing at position below `p` is on the bottom,
/// otherwise on the top. The first strand takes the first `ceil((q-1)/2)`
/// horizontal crossings; for even `q` it ends on the bottom arc and the
/// second strand starts with a right-side crossing.
pub fn tangle_grid_walk(p: i64, q: i64) -> TangleWalk {
    let offset = if q % 2 == 1 { 1 } else { 0 };
    let horizontal: Vec<Side> = (1..q)
        .map(|i| {
            if (2 * i - offset).rem_euclid(q) < p {
                Side::Bottom
            } else {
                Side::Top
            }
        })
        .collect();
    let split = (q as usize) / 2;
    let (h1, h2) = horizontal.split_at(split);
    let mut first = Vec::new();
    let mut second = Vec::new();
    if q % 2 == 1 {
        for &h in h1 {
            first.extend([h, Side::Right]);
        }
        for &h in h2 {
            second.extend([h, Side::Right]);
        }
    } else {
        for (n, &h) in h1.iter().enumerate() {
            if n > 0 {
                first.push(Side::Right);
            }
            first.push(h);
        }
        second.push(Side::Right);
        for &h in h2 {
            second.extend([h, Side::Right]);
        }
    }
    TangleWalk {
        p,
        q,
        first,
        second,
    }
}

impl TangleWalk {
    /// Labels each crossing with the arc passed under, for half-twist
    /// count parity `k_odd`.
    pub fn under_arcs(&self, k_odd: bool) -> (Vec<UnderArc>, Vec<UnderArc>) {
        let label = |s: &Side| match (s, k_odd) {
            (Side::Right, _) => UnderArc::A,
            (Side::Bottom, true) => UnderArc::AX,
            (Side::Top, true) => UnderArc::BY,
            (Side::Bottom, false) => UnderArc::BX,
            (Side::Top, false) => UnderArc::AX,
        };
        (
            self.first.iter().map(label).collect(),
            self.second.iter().map(label).collect(),
        )
    }

    /// (right, bottom, top) crossing counts over both strands.
    pub fn counts(&self) -> (usize, usize, usize) {
        let all = self.first.iter().chain(self.second.iter());
        let mut c = (0, 0, 0);
        for s in all {
            match s {
                Side::Right => c.0 += 1,
                Side::Bottom => c.1 += 1,
                Side::Top => c.2 += 1,
            }
        }
        c
    }
}

// Expression builders over the generators a, b, c.

fn leaf(g: usize) -> ExprNode {
    ExprNode::leaf(g)
}

fn word(letters: &[usize]) -> ExprNode {
    ExprNode::word(letters)
}

fn pow(letters: &[usize], n: i64) -> ExprNode {
    ExprNode::power(word(letters), n)
}

fn seq(items: Vec<ExprNode>) -> ExprNode {
    ExprNode::concat(items)
}

fn elem(base: usize, exponent: Vec<ExprNode>) -> ExprNode {
    if exponent.is_empty() {
        leaf(base)
    } else {
        ExprNode::exp(leaf(base), seq(exponent))
    }
}

fn eq(lhs: ExprNode, rhs: ExprNode) -> Relation {
    flatten_equation(&lhs, &rhs).expect("family expressions are well formed")
}

/// `X = (ba)^t c`.
fn x_word(t: i64) -> ExprNode {
    seq(vec![pow(&[B, A], t), leaf(C)])
}

/// `Y = (ba)^(t+1) c`.
fn y_word(t: i64) -> ExprNode {
    seq(vec![pow(&[B, A], t + 1), leaf(C)])
}

fn arc(u: UnderArc, t: i64) -> ExprNode {
    match u {
        UnderArc::A => leaf(A),
        UnderArc::AX => ExprNode::exp(leaf(A), x_word(t)),
        UnderArc::BX => ExprNode::exp(leaf(B), x_word(t)),
        UnderArc::BY => ExprNode::exp(leaf(B), y_word(t)),
    }
}

fn r1() -> Relation {
    eq(elem(C, vec![word(&[A, B])]), leaf(C))
}

/// The three relations read off the diagram: `R1: c^(ab) = c` and the two
/// tangle relations, with `X` and `Y` substituted and flattened.
pub fn raw_presentation(fp: &FamilyParams) -> Presentation {
    let (p, q, t) = (fp.p(), fp.q(), fp.t());
    let k_odd = fp.k().rem_euclid(2) == 1;
    let walk = tangle_grid_walk(p, q);
    let (s1, s2) = walk.under_arcs(k_odd);
    let (bottom, top) = if k_odd {
        (UnderArc::AX, UnderArc::BY)
    } else {
        (UnderArc::BX, UnderArc::AX)
    };
    let strand = |start: ExprNode, arcs: &[UnderArc], end: ExprNode| {
        let exponent = seq(arcs.iter().map(|&u| arc(u, t)).collect());
        eq(ExprNode::exp(start, exponent), end)
    };
    let (r2, r3) = if q % 2 == 1 {
        let (end1, end2) = if p % 2 == 1 {
            (bottom, top)
        } else {
            (top, bottom)
        };
        (
            strand(leaf(A), &s1, arc(end1, t)),
            strand(leaf(B), &s2, arc(end2, t)),
        )
    } else {
        (
            strand(leaf(A), &s1, leaf(B)),
            strand(arc(bottom, t), &s2, arc(top, t)),
        )
    };
    Presentation::new(gens(), vec![r1(), r2, r3]).expect("three generators")
}

/// Relations depending only on `q` and the parity of `d = kq - p`:
///
/// * odd `d`: `a^((ca)^q) = b^((ab)^((d-1)/2))`, `a^((ac)^q) = b^((ab)^((d-1)/2))`
/// * even `d`: `a^((ca)^q) = a^((ba)^(d/2))`, `b^((bc)^q) = b^((ab)^(d/2))`
///
/// plus `R1`. Negative exponents act by the reversed word.
pub fn reduced_presentation(fp: &FamilyParams) -> Presentation {
    reduced_presentation_from(fp.q(), fp.d())
}

/// [`reduced_presentation`] for arbitrary `q` and `d`, without requiring
/// normalized parameters.
pub fn reduced_presentation_from(q: i64, d: i64) -> Presentation {
    let (r2, r3) = if d.rem_euclid(2) == 1 {
        let m = (d - 1) / 2;
        (
            eq(
                elem(A, vec![pow(&[C, A], q)]),
                elem(B, vec![pow(&[A, B], m)]),
            ),
            eq(
                elem(A, vec![pow(&[A, C], q)]),
                elem(B, vec![pow(&[A, B], m)]),
            ),
        )
    } else {
        let m = d / 2;
        (
            eq(
                elem(A, vec![pow(&[C, A], q)]),
                elem(A, vec![pow(&[B, A], m)]),
            ),
            eq(
                elem(B, vec![pow(&[B, C], q)]),
                elem(B, vec![pow(&[A, B], m)]),
            ),
        )
    };
    Presentation::new(gens(), vec![r1(), r2, r3]).expect("three generators")
}

/// A relation checked at the seeds, or an identity checked at every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteCheck {
    AtSeeds(Relation),
    Everywhere(SecondaryRelation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteItem {
    pub name: String,
    pub check: SuiteCheck,
}

impl SuiteItem {
    fn at_seeds(name: impl Into<String>, r: Relation) -> Self {
        SuiteItem {
            name: name.into(),
            check: SuiteCheck::AtSeeds(r),
        }
    }

    fn everywhere(name: impl Into<String>, word: Word) -> Self {
        SuiteItem {
            name: name.into(),
            check: SuiteCheck::Everywhere(SecondaryRelation { word }),
        }
    }
}

fn action(e: &ExprNode) -> Word {
    crate::parser::action_word(e).expect("family expressions are well formed")
}

/// `z^u = z^v` for all `z`, as the loop word `u reverse(v)`.
fn identity(u: &ExprNode, v: &ExprNode) -> Word {
    action(u).concat(&action(v).reversed())
}

fn letters(s: &str) -> Vec<usize> {
    s.bytes().map(|b| (b - b'a') as usize).collect()
}

/// Every derived relation the Cayley graph construction relies on, fully
/// instantiated: `R4`–`R8`, `α`, `β`, `γ`, the consequences of `R1`, the
/// commutation of `b^Y a` with `a^X a`, and the secondary relations of the
/// reduced presentation.
pub fn lemma_relation_suite(fp: &FamilyParams) -> Vec<SuiteItem> {
    let (q, d) = (fp.q(), fp.d());
    let mut out = Vec::new();
    let reduced = reduced_presentation(fp);
    for (n, r) in reduced.relations().iter().enumerate() {
        out.push(SuiteItem::at_seeds(format!("R{}", n + 1), r.clone()));
    }
    out.push(SuiteItem::at_seeds(
        "R4",
        eq(elem(C, vec![pow(&[A, C], 2 * q)]), leaf(C)),
    ));
    out.push(SuiteItem::at_seeds(
        "R5",
        eq(elem(A, vec![pow(&[C, A], 2 * q)]), leaf(A)),
    ));
    out.push(SuiteItem::at_seeds(
        "R6",
        eq(elem(B, vec![pow(&[C, B], 2 * q)]), leaf(B)),
    ));
    let jmax;
    if d.rem_euclid(2) == 1 {
        jmax = (d.abs() - 1) / 2;
        out.push(SuiteItem::at_seeds(
            "R7",
            eq(
                elem(A, vec![pow(&[B, A], (d - 1) / 2)]),
                elem(B, vec![pow(&[B, C], q)]),
            ),
        ));
        for i in 0..=q {
            for j in 0..=jmax {
                out.push(SuiteItem::at_seeds(
                    format!("alpha[{i},{j}]"),
                    eq(
                        elem(A, vec![pow(&[C, A], i), pow(&[B, A], j), leaf(C)]),
                        elem(A, vec![pow(&[C, A], i), leaf(C), pow(&[B, A], j)]),
                    ),
                ));
                out.push(SuiteItem::at_seeds(
                    format!("beta[{i},{j}]"),
                    eq(
                        elem(A, vec![pow(&[C, A], i), pow(&[A, B], j), word(&[A, B, C])]),
                        elem(A, vec![pow(&[C, A], i + 1), pow(&[B, A], j), leaf(B)]),
                    ),
                ));
            }
        }
    } else {
        jmax = d.abs() / 2;
        out.push(SuiteItem::at_seeds(
            "R7",
            eq(
                elem(A, vec![pow(&[B, A], d / 2)]),
                elem(A, vec![pow(&[A, C], q)]),
            ),
        ));
        out.push(SuiteItem::at_seeds(
            "R8",
            eq(
                elem(B, vec![pow(&[A, B], d / 2)]),
                elem(B, vec![pow(&[B, C], q)]),
            ),
        ));
        for i in 0..=q {
            for j in 0..=jmax {
                out.push(SuiteItem::at_seeds(
                    format!("alpha[{i},{j},a]"),
                    eq(
                        elem(A, vec![pow(&[C, A], i), pow(&[B, A], j), leaf(C)]),
                        elem(A, vec![pow(&[C, A], i), leaf(C), pow(&[B, A], j)]),
                    ),
                ));
                out.push(SuiteItem::at_seeds(
                    format!("alpha[{i},{j},b]"),
                    eq(
                        elem(B, vec![pow(&[C, B], i), pow(&[A, B], j), leaf(C)]),
                        elem(B, vec![pow(&[C, B], i), leaf(C), pow(&[A, B], j)]),
                    ),
                ));
                out.push(SuiteItem::at_seeds(
                    format!("beta[{i},{j},a]"),
                    eq(
                        elem(A, vec![pow(&[C, A], i), pow(&[A, B], j), word(&[A, B, C])]),
                        elem(A, vec![pow(&[C, A], i + 1), pow(&[B, A], j), leaf(B)]),
                    ),
                ));
                out.push(SuiteItem::at_seeds(
                    format!("beta[{i},{j},b]"),
                    eq(
                        elem(B, vec![pow(&[C, B], i), pow(&[B, A], j), word(&[B, A, C])]),
                        elem(B, vec![pow(&[C, B], i + 1), pow(&[A, B], j), leaf(A)]),
                    ),
                ));
            }
        }
    }
    for i in 0..2 * q {
        out.push(SuiteItem::at_seeds(
            format!("gamma[{i}]"),
            eq(
                elem(C, vec![pow(&[A, C], i), leaf(A)]),
                elem(C, vec![pow(&[A, C], i), leaf(B)]),
            ),
        ));
    }
    out.extend(r1_identities());
    out.extend(commutation_identities(fp.t()));
    for (n, r) in reduced.relations().iter().enumerate() {
        out.push(SuiteItem::everywhere(
            format!("SR{}", n + 1),
            secondary_of(r).word,
        ));
    }
    out
}

/// Consequences of `c^a = c^b` that hold at every element.
pub fn r1_identities() -> Vec<SuiteItem> {
    let id = |u: &str, v: &str| identity(&word(&letters(u)), &word(&letters(v)));
    let mut out = vec![
        SuiteItem::everywhere("R1 consequence 1: aca=bcb", id("aca", "bcb")),
        SuiteItem::everywhere("R1 consequence 2: cab=abc", id("cab", "abc")),
        SuiteItem::everywhere("R1 consequence 2: cba=bac", id("cba", "bac")),
    ];
    for w in ["ca", "ac", "cb", "bc"] {
        out.push(SuiteItem::everywhere(
            format!("R1 consequence 3: {w}ab=ba{w}"),
            id(&format!("{w}ab"), &format!("ba{w}")),
        ));
        out.push(SuiteItem::everywhere(
            format!("R1 consequence 3: {w}ba=ab{w}"),
            id(&format!("{w}ba"), &format!("ab{w}")),
        ));
    }
    for w in ["ca", "ac", "cb", "bc"] {
        let w2 = format!("{w}{w}");
        out.push(SuiteItem::everywhere(
            format!("R1 consequence 4: ({w})^2ab=ab({w})^2"),
            id(&format!("{w2}ab"), &format!("ab{w2}")),
        ));
        out.push(SuiteItem::everywhere(
            format!("R1 consequence 4: ({w})^2ba=ba({w})^2"),
            id(&format!("{w2}ba"), &format!("ba{w2}")),
        ));
    }
    out
}

/// `z^(b^Y a a^X) = z^(a^X a b^Y)` and `z^(b^X a a^X) = z^(a^X a b^X)`.
pub fn commutation_identities(t: i64) -> Vec<SuiteItem> {
    let ax = arc(UnderArc::AX, t);
    let bx = arc(UnderArc::BX, t);
    let by = arc(UnderArc::BY, t);
    let lhs1 = seq(vec![by.clone(), leaf(A), ax.clone()]);
    let rhs1 = seq(vec![ax.clone(), leaf(A), by]);
    let lhs2 = seq(vec![bx.clone(), leaf(A), ax.clone()]);
    let rhs2 = seq(vec![ax, leaf(A), bx]);
    vec![
        SuiteItem::everywhere("b^Y a a^X = a^X a b^Y", identity(&lhs1, &rhs1)),
        SuiteItem::everywhere("b^X a a^X = a^X a b^X", identity(&lhs2, &rhs2)),
    ]
}
