//! Subcommands and their exit-code contract.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use quandle_core::family::{
    lemma_relation_suite, raw_presentation, reduced_presentation, SuiteCheck,
};
use quandle_core::{
    check_axioms, components, enumerate, full_op_table, is_isomorphic, parse_pd,
    parse_presentation, secondary_of, verify_relations, wirtinger_presentation, CayleyTable,
    CheckOutcome, EnumerationBudget, EnumerationResult, FamilyParams, IsoResult, Presentation,
    SuiteItem, VerificationReport,
};

use crate::export::{element_label, to_dot, to_json};
use crate::sweep::{run_sweep, sweep_params, write_csv};

/// Largest order for which the cubic axiom check runs under `--verify`.
pub const AXIOM_LIMIT: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Usage = 1,
    BudgetExceeded = 2,
    VerificationFailed = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "quandle",
    version,
    about = "Enumerate finite involutory quandles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Stop once this many elements are live.
    #[arg(long, env = "QUANDLE_MAX_ELEMENTS")]
    pub max_elements: Option<usize>,
    /// Stop after this many enumeration steps.
    #[arg(long)]
    pub max_steps: Option<u64>,
}

impl BudgetArgs {
    pub fn budget(&self) -> Result<EnumerationBudget> {
        let d = EnumerationBudget::default();
        let max_elements = self.max_elements.unwrap_or(d.max_elements);
        let max_steps = self.max_steps.unwrap_or(d.max_steps);
        anyhow::ensure!(max_elements > 0, "--max-elements must be positive");
        anyhow::ensure!(max_steps > 0, "--max-steps must be positive");
        Ok(EnumerationBudget::new(max_elements, max_steps))
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write the Cayley graph in Graphviz format.
    #[arg(long, value_name = "FILE")]
    pub dot: Option<PathBuf>,
    /// Write the action table as JSON.
    #[arg(long, value_name = "FILE")]
    pub json: Option<PathBuf>,
    /// Run the checks and exit with status 3 if any fails.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate a presentation read from a file.
    Enumerate {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate the quandle of L(k, p/q) ∪ C.
    Family {
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(allow_hyphen_values = true)]
        p: i64,
        q: i64,
        /// Use the presentation read off the diagram.
        #[arg(long)]
        raw: bool,
        /// Use the simplified three-relation presentation (default).
        #[arg(long)]
        reduced: bool,
        /// Print the presentation before enumerating.
        #[arg(long)]
        print_presentation: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate a box of parameters and compare with the closed forms.
    Sweep {
        #[arg(long)]
        q_max: i64,
        #[arg(long, allow_hyphen_values = true)]
        k_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        k_max: i64,
        /// Write rows here instead of standard output.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether two presentations define isomorphic quandles.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Enumerate the quandle of a planar diagram code.
    Pd {
        code: String,
        /// Print the presentation before enumerating.
        #[arg(long)]
        print_presentation: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Runs one command. Errors are reported on `err` and mapped to
/// [`ExitStatus::Usage`].
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus {
    match dispatch(cli, out, err) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            ExitStatus::Usage
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<ExitStatus> {
    match &cli.command {
        Command::Enumerate {
            file,
            budget,
            output,
        } => {
            let p = read_presentation(file)?;
            let Some(t) = enumerate_or_report(&p, budget.budget()?, err)? else {
                return Ok(ExitStatus::BudgetExceeded);
            };
            writeln!(out, "{}", size_line(&t))?;
            finish(&t, &presentation_checks(&p, &t), output, out)
        }
        Command::Family {
            k,
            p,
            q,
            raw,
            reduced,
            print_presentation,
            budget,
            output,
        } => cmd_family(
            (*k, *p, *q),
            (*raw, *reduced),
            *print_presentation,
            budget.budget()?,
            output,
            out,
            err,
        ),
        Command::Sweep {
            q_max,
            k_min,
            k_max,
            csv,
            budget,
        } => {
            anyhow::ensure!(*q_max > 0, "--q-max must be positive");
            let rows = run_sweep(&sweep_params(*q_max, *k_min, *k_max), budget.budget()?);
            match csv {
                Some(path) => {
                    let f = fs::File::create(path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_csv(&rows, f)?;
                }
                None => write_csv(&rows, &mut *out)?,
            }
            let bad = rows.iter().filter(|r| !r.matches).count();
            writeln!(err, "{} rows, {} mismatched", rows.len(), bad)?;
            if rows.iter().any(|r| r.size.is_none()) {
                Ok(ExitStatus::BudgetExceeded)
            } else if bad > 0 {
                Ok(ExitStatus::VerificationFailed)
            } else {
                Ok(ExitStatus::Success)
            }
        }
        Command::Iso {
            first,
            second,
            budget,
        } => {
            let budget = budget.budget()?;
            let (pa, pb) = (read_presentation(first)?, read_presentation(second)?);
            let Some(a) = enumerate_or_report(&pa, budget, err)? else {
                return Ok(ExitStatus::BudgetExceeded);
            };
            let Some(b) = enumerate_or_report(&pb, budget, err)? else {
                return Ok(ExitStatus::BudgetExceeded);
            };
            write_iso(&a, &b, out)?;
            Ok(ExitStatus::Success)
        }
        Command::Pd {
            code,
            print_presentation,
            budget,
            output,
        } => {
            let p = wirtinger_presentation(&parse_pd(code)?);
            if *print_presentation {
                write!(out, "{}", p.serialize())?;
            }
            let Some(t) = enumerate_or_report(&p, budget.budget()?, err)? else {
                return Ok(ExitStatus::BudgetExceeded);
            };
            writeln!(out, "{}", size_line(&t))?;
            finish(&t, &presentation_checks(&p, &t), output, out)
        }
    }
}

fn cmd_family(
    (k, p, q): (i64, i64, i64),
    (raw, reduced): (bool, bool),
    print_presentation: bool,
    budget: EnumerationBudget,
    output: &OutputArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<ExitStatus> {
    let fp = FamilyParams::normalize(k, p, q)?;
    for w in fp.warnings() {
        writeln!(err, "warning: {w}")?;
    }
    writeln!(out, "{fp}  d={}", fp.d())?;
    let mut variants = Vec::new();
    if raw {
        variants.push(("raw", raw_presentation(&fp)));
    }
    if reduced || !raw {
        variants.push(("reduced", reduced_presentation(&fp)));
    }
    let mut tables = Vec::new();
    for (name, pres) in &variants {
        if print_presentation {
            write!(out, "{}", pres.serialize())?;
        }
        let Some(t) = enumerate_or_report(pres, budget, err)? else {
            return Ok(ExitStatus::BudgetExceeded);
        };
        if variants.len() > 1 {
            writeln!(out, "{name}: {}", size_line(&t))?;
        } else {
            writeln!(out, "{}", size_line(&t))?;
        }
        tables.push(t);
    }
    let mut report = VerificationReport::new();
    if let [a, b] = &tables[..] {
        let iso = is_isomorphic(a, b);
        match &iso {
            IsoResult::Isomorphic { .. } => writeln!(out, "raw and reduced: isomorphic")?,
            IsoResult::NotIsomorphic(why) => {
                writeln!(out, "raw and reduced: not isomorphic ({why})")?
            }
        }
        let mut c = CheckOutcome::new("raw and reduced isomorphic");
        c.record(iso.is_isomorphic(), Vec::new);
        report.push(c);
    }
    let t = tables.pop().expect("at least one variant");
    if output.verify {
        writeln!(
            out,
            "formula size={} tabulated components={:?}",
            fp.expected_cardinality(),
            fp.expected_components()
        )?;
        let mut order = CheckOutcome::new("order 2q(|kq-p|+1)");
        order.record(t.size() == fp.expected_cardinality(), || vec![t.size()]);
        report.push(order);
        let sizes = components(&t).sizes;
        let mut comps = CheckOutcome::new("component orders by parity of kq-p");
        comps.record(sizes == fp.cayley_components(), || sizes.clone());
        report.push(comps);
        report.extend(verify_relations(&t, &lemma_relation_suite(&fp)));
        report.extend(structural_checks(&t));
    }
    finish(&t, &report, output, out)
}

/// Writes requested exports and, under `--verify`, the report.
fn finish(
    t: &CayleyTable,
    report: &VerificationReport,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> Result<ExitStatus> {
    if let Some(path) = &output.json {
        fs::write(path, to_json(t)).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &output.dot {
        fs::write(path, to_dot(t)).with_context(|| format!("writing {}", path.display()))?;
    }
    if !output.verify {
        return Ok(ExitStatus::Success);
    }
    write!(out, "{report}")?;
    if report.passed() {
        writeln!(out, "all {} checks passed", report.checks.len())?;
        Ok(ExitStatus::Success)
    } else {
        writeln!(
            out,
            "{} of {} checks failed",
            report.failed().count(),
            report.checks.len()
        )?;
        Ok(ExitStatus::VerificationFailed)
    }
}

/// Table invariants, the secondary relation of every defining relation and,
/// for small orders, the quandle axioms.
fn presentation_checks(p: &Presentation, t: &CayleyTable) -> VerificationReport {
    let suite: Vec<SuiteItem> = p
        .relations()
        .iter()
        .enumerate()
        .flat_map(|(i, r)| {
            [
                SuiteItem {
                    name: format!("relation {}", i + 1),
                    check: SuiteCheck::AtSeeds(r.clone()),
                },
                SuiteItem {
                    name: format!("secondary {}", i + 1),
                    check: SuiteCheck::Everywhere(secondary_of(r)),
                },
            ]
        })
        .collect();
    let mut report = verify_relations(t, &suite);
    report.extend(structural_checks(t));
    report
}

fn structural_checks(t: &CayleyTable) -> VerificationReport {
    let mut report = t.check_invariants();
    if t.size() <= AXIOM_LIMIT {
        report.extend(check_axioms(&full_op_table(t)));
    }
    report
}

fn read_presentation(path: &Path) -> Result<Presentation> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_presentation(&text).with_context(|| format!("parsing {}", path.display()))
}

fn enumerate_or_report(
    p: &Presentation,
    budget: EnumerationBudget,
    err: &mut dyn Write,
) -> Result<Option<CayleyTable>> {
    match enumerate(p, budget) {
        EnumerationResult::Finite(t) => Ok(Some(t)),
        EnumerationResult::BudgetExceeded {
            elements_reached,
            steps_used,
        } => {
            writeln!(
                err,
                "budget exceeded: {elements_reached} elements after {steps_used} steps \
                 (limits {} elements, {} steps)",
                budget.max_elements, budget.max_steps
            )?;
            Ok(None)
        }
    }
}

pub fn size_line(t: &CayleyTable) -> String {
    format!("size={} components={:?}", t.size(), components(t).sizes)
}

fn write_iso(a: &CayleyTable, b: &CayleyTable, out: &mut dyn Write) -> Result<()> {
    match is_isomorphic(a, b) {
        IsoResult::Isomorphic {
            generator_images, ..
        } => {
            writeln!(out, "isomorphic")?;
            for (name, &z) in a.generators().iter().zip(&generator_images) {
                writeln!(out, "  {name} -> {z} ({})", element_label(b, z))?;
            }
        }
        IsoResult::NotIsomorphic(reason) => writeln!(out, "not isomorphic: {reason}")?,
    }
    Ok(())
}
