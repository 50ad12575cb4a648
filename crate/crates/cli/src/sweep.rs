//! Batch enumeration of `L(k, p/q) ∪ C` over a parameter box.

use std::time::Instant;

use quandle_core::family::reduced_presentation;
use quandle_core::{components, enumerate, EnumerationBudget, FamilyParams};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub k: i64,
    pub p: i64,
    pub q: i64,
    pub d: i64,
    /// Empty when the budget ran out.
    pub size: Option<usize>,
    pub components: String,
    pub formula_size: usize,
    #[serde(rename = "match")]
    pub matches: bool,
    pub elapsed_ms: u128,
}

/// Every `(k, p, q)` with `2 <= q <= q_max`, `0 < p < q` coprime to `q` and
/// `k_min <= k <= k_max`, ordered by `q`, then `p`, then `k`.
pub fn sweep_params(q_max: i64, k_min: i64, k_max: i64) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for q in 2..=q_max {
        for p in 1..q {
            if gcd(p, q) != 1 {
                continue;
            }
            for k in k_min..=k_max {
                out.push(FamilyParams::normalize(k, p, q).expect("coprime 0 < p < q"));
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn join_sizes(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("|")
}

/// Enumerates one parameter triple. A row matches when the order equals
/// `2q(|d| + 1)` and the component orders equal the tabulated ones.
pub fn sweep_row(fp: &FamilyParams, budget: EnumerationBudget) -> SweepRow {
    let start = Instant::now();
    let result = enumerate(&reduced_presentation(fp), budget);
    let elapsed_ms = start.elapsed().as_millis();
    let formula_size = fp.expected_cardinality();
    let (size, sizes) = match result.table() {
        Some(t) => (Some(t.size()), components(t).sizes),
        None => (None, Vec::new()),
    };
    SweepRow {
        k: fp.k(),
        p: fp.p(),
        q: fp.q(),
        d: fp.d(),
        size,
        components: join_sizes(&sizes),
        formula_size,
        matches: size == Some(formula_size) && sizes == fp.expected_components(),
        elapsed_ms,
    }
}

/// Runs the rows in parallel; the output keeps the input order.
pub fn run_sweep(params: &[FamilyParams], budget: EnumerationBudget) -> Vec<SweepRow> {
    params.par_iter().map(|fp| sweep_row(fp, budget)).collect()
}

pub fn write_csv<W: std::io::Write>(rows: &[SweepRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record([
            "k",
            "p",
            "q",
            "d",
            "size",
            "components",
            "formula_size",
            "match",
            "elapsed_ms",
        ])?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_box_is_ordered() {
        let ps = sweep_params(3, 0, 1);
        let triples: Vec<_> = ps.iter().map(|f| (f.k(), f.p(), f.q())).collect();
        assert_eq!(
            triples,
            vec![
                (0, 1, 2),
                (1, 1, 2),
                (0, 1, 3),
                (1, 1, 3),
                (0, 2, 3),
                (1, 2, 3)
            ]
        );
        assert!(sweep_params(1, 0, 3).is_empty());
        assert!(sweep_params(5, 2, 1).is_empty());
    }

    #[test]
    fn empty_sweep_writes_header_only() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "k,p,q,d,size,components,formula_size,match,elapsed_ms\n"
        );
    }

    #[test]
    fn row_reports_formula_order() {
        let fp = FamilyParams::normalize(2, 1, 3).unwrap();
        let row = sweep_row(&fp, EnumerationBudget::default());
        assert_eq!(row.size, Some(36));
        assert_eq!(row.formula_size, 36);
        assert_eq!(row.components, "6|30");
        assert!(row.matches);
    }
}
