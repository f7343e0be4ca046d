//! The full analysis pipeline and its text / machine renderings.
//!
//! The machine report is a pretty-printed JSON document whose field order is
//! fixed by the structs below; with a fixed seed it is byte-for-byte
//! reproducible.

use std::fmt::Write as _;

use serde::Serialize;

use crate::polyprops::{
    hadamard_filtration, integrality_report, ppoly_criterion_dual, qpoly_criterion_main, suzuki_consistency,
    tridiagonal_witness, FiltrationResult, IntegralityReport, OrderingWitness, RatioResult, SuzukiReport,
    SuzukiStatus, SUPPORT_TOL,
};
use crate::scheme::{validate_axioms, RelationTable};
use crate::spectral::{
    dual_eigenvalue_row, krein_parameters, primitive_idempotents_seeded, DEFAULT_SEED, DEFAULT_TOL,
};
use crate::{is_integral, Error, Result};

/// Which distinguished indices `e` to analyse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    All,
    One(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    pub tol: f64,
    pub seed: u64,
    pub e: Selection,
    pub digits: u32,
    pub support_tol: f64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self { tol: DEFAULT_TOL, seed: DEFAULT_SEED, e: Selection::All, digits: 6, support_tol: SUPPORT_TOL }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundedMatrix {
    pub values: Vec<Vec<f64>>,
    /// Integrality of the unrounded entries.
    pub integral: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Settings {
    pub tol: f64,
    pub support_tol: f64,
    pub seed: u64,
    pub seed_used: u64,
    pub digits: u32,
}

/// Outcome of one ratio criterion, or why it was not run.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RatioOutcome {
    Computed(RatioResult),
    NotDistinct,
    Ambiguous { candidates: Vec<usize> },
}

impl RatioOutcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            RatioOutcome::Computed(r) => Some(r.holds),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EBlock {
    pub e: usize,
    pub multiplicity: usize,
    pub theta_star: Vec<f64>,
    pub theta_star_distinct: bool,
    pub filtration: FiltrationResult,
    pub q_witness: Option<OrderingWitness>,
    pub q_ratio: RatioOutcome,
    pub integrality: Option<IntegralityReport>,
    pub p_witness: Option<OrderingWitness>,
    pub p_ratio: RatioOutcome,
    pub discrepancies: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub n: usize,
    pub d: usize,
    pub valencies: Vec<usize>,
    pub multiplicities: Vec<usize>,
    pub eigenmatrix_p: RoundedMatrix,
    pub eigenmatrix_q: RoundedMatrix,
    pub spectral_residual: f64,
    pub krein_min_entry: f64,
    pub qpoly_es: Vec<usize>,
    pub ppoly_es: Vec<usize>,
    pub per_e: Vec<EBlock>,
    pub suzuki: SuzukiReport,
    pub settings: Settings,
    pub discrepancy: bool,
}

impl AnalysisReport {
    /// 0 when the three routes agree everywhere, 1 on any discrepancy.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.discrepancy)
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        render_text(self)
    }
}

fn round(x: f64, digits: u32) -> f64 {
    let scale = 10f64.powi(digits as i32);
    let r = (x * scale).round() / scale;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn rounded(m: &nalgebra::DMatrix<f64>, digits: u32) -> RoundedMatrix {
    let rows = 0..m.nrows();
    RoundedMatrix {
        values: rows.clone().map(|r| m.row(r).iter().map(|&v| round(v, digits)).collect()).collect(),
        integral: rows.map(|r| m.row(r).iter().map(|&v| is_integral(v)).collect()).collect(),
    }
}

fn ratio_outcome(result: Result<RatioResult>, digits: u32) -> Result<RatioOutcome> {
    match result {
        Ok(mut r) => {
            r.k.iter_mut().for_each(|v| *v = round(*v, digits));
            Ok(RatioOutcome::Computed(r))
        }
        Err(Error::NotDistinct(..)) => Ok(RatioOutcome::NotDistinct),
        Err(Error::AmbiguousWitness(a, b)) => Ok(RatioOutcome::Ambiguous { candidates: vec![a, b] }),
        Err(e) => Err(e),
    }
}

/// Runs every detection route on a scheme and cross-checks them.
///
/// Fails with [`Error::ClassTooSmall`] for `d = 1`, and with
/// [`Error::NotDistinct`] when a single `e` is selected whose dual
/// eigenvalues repeat.
pub fn analyze(name: &str, table: &RelationTable, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let tensor = validate_axioms(table)?;
    let d = table.d();
    if d < 2 {
        return Err(Error::ClassTooSmall(d));
    }
    let basis = primitive_idempotents_seeded(table, &tensor, options.tol, options.seed)?;
    let krein = krein_parameters(&basis)?;
    let residuals = basis.residuals(table);
    let mult = basis.multiplicities();
    let digits = options.digits;

    let es: Vec<usize> = match options.e {
        Selection::All => (1..=d).collect(),
        Selection::One(e) if (1..=d).contains(&e) => {
            if !dual_eigenvalue_row(&basis, e)?.distinct {
                let row = dual_eigenvalue_row(&basis, e)?;
                let (_, a, b) = crate::spectral::min_gap(&row.values).expect("d >= 2");
                return Err(Error::NotDistinct(a, b));
            }
            vec![e]
        }
        Selection::One(e) => return Err(Error::IndexOutOfRange { index: e, d }),
    };

    let mut blocks = Vec::with_capacity(es.len());
    for &e in &es {
        let row = dual_eigenvalue_row(&basis, e)?;
        let filtration = hadamard_filtration(&basis, e, options.tol)?;
        let q_witness = tridiagonal_witness(&krein, e, options.support_tol);
        let p_witness = tridiagonal_witness(&tensor, e, options.support_tol);
        let raw_q = qpoly_criterion_main(&basis, e, options.tol);
        let raw_p = ppoly_criterion_dual(&basis, e, options.tol);

        let integrality = match (&q_witness, &raw_q) {
            (Some(w), Ok(r)) => Some(integrality_report(&basis, w, &r.k)?),
            _ => None,
        };
        let q_ratio = ratio_outcome(raw_q, digits)?;
        let p_ratio = ratio_outcome(raw_p, digits)?;

        let mut discrepancies = Vec::new();
        if filtration.is_qpoly != q_witness.is_some() {
            discrepancies.push(format!(
                "filtration says {} but tridiagonal search says {}",
                filtration.is_qpoly,
                q_witness.is_some()
            ));
        }
        if !filtration.collapse_holds() {
            discrepancies.push("an empty N_i is followed by a nonempty N_(i+1)".into());
        }
        if !filtration.coefficients_nonnegative(options.tol) {
            discrepancies.push(format!("Hadamard power coefficient {:e} is negative", filtration.min_coefficient));
        }
        if !filtration.singletons_when_positive() {
            discrepancies.push("positive filtration with a non-singleton N_h".into());
        }
        if let (Some(order), Some(w)) = (&filtration.ordering, &q_witness) {
            if *order != w.order {
                discrepancies.push(format!("filtration ordering {order:?} differs from witness {:?}", w.order));
            }
        }
        match &q_ratio {
            RatioOutcome::Computed(r) => {
                if r.holds != filtration.is_qpoly {
                    discrepancies.push(format!("ratio criterion says {} but filtration says {}", r.holds, filtration.is_qpoly));
                }
                if let (Some(l), Some(w)) = (r.l_witness, &q_witness) {
                    if l != w.last() || filtration.sets[d] != [l] {
                        discrepancies.push(format!("l = {l} but i_d = {} and N_d = {:?}", w.last(), filtration.sets[d]));
                    }
                }
            }
            RatioOutcome::Ambiguous { candidates } => {
                discrepancies.push(format!("ambiguous Q witness between {candidates:?}"));
            }
            RatioOutcome::NotDistinct => {}
        }
        match &p_ratio {
            RatioOutcome::Computed(r) => {
                if r.holds != p_witness.is_some() {
                    discrepancies.push(format!(
                        "dual ratio criterion says {} but tridiagonal search says {}",
                        r.holds,
                        p_witness.is_some()
                    ));
                }
                if let (Some(l), Some(w)) = (r.l_witness, &p_witness) {
                    if l != w.last() {
                        discrepancies.push(format!("P witness l = {l} but i_d = {}", w.last()));
                    }
                }
            }
            RatioOutcome::Ambiguous { candidates } => {
                discrepancies.push(format!("ambiguous P witness between {candidates:?}"));
            }
            RatioOutcome::NotDistinct => {}
        }
        if integrality.as_ref().is_some_and(|r| r.contradiction) {
            discrepancies.push("integrality hypothesis holds but some K_j is not integral".into());
        }

        blocks.push(EBlock {
            e,
            multiplicity: mult[e],
            theta_star: row.values.iter().map(|&v| round(v, digits)).collect(),
            theta_star_distinct: row.distinct,
            filtration,
            q_witness,
            q_ratio,
            integrality,
            p_witness,
            p_ratio,
            discrepancies,
        });
    }

    let q_witnesses: Vec<OrderingWitness> = blocks.iter().filter_map(|b| b.q_witness.clone()).collect();
    let m1 = q_witnesses.first().map_or(0, |w| mult[w.e]);
    let suzuki = suzuki_consistency(&q_witnesses, d, m1);
    let discrepancy = blocks.iter().any(|b| !b.discrepancies.is_empty())
        || (suzuki.status == SuzukiStatus::Checked && suzuki.violations() > 0);

    Ok(AnalysisReport {
        name: name.to_string(),
        n: table.n(),
        d,
        valencies: tensor.valencies().to_vec(),
        multiplicities: mult,
        eigenmatrix_p: rounded(basis.eigenmatrix_p(), digits),
        eigenmatrix_q: rounded(basis.eigenmatrix_q(), digits),
        spectral_residual: residuals.max(),
        krein_min_entry: krein.min_entry(),
        qpoly_es: blocks.iter().filter(|b| b.q_witness.is_some()).map(|b| b.e).collect(),
        ppoly_es: blocks.iter().filter(|b| b.p_witness.is_some()).map(|b| b.e).collect(),
        per_e: blocks,
        suzuki,
        settings: Settings {
            tol: options.tol,
            support_tol: options.support_tol,
            seed: options.seed,
            seed_used: basis.seed(),
            digits,
        },
        discrepancy,
    })
}

fn fmt_list<T: std::fmt::Display>(items: &[T]) -> String {
    let cells: Vec<String> = items.iter().map(|v| v.to_string()).collect();
    format!("({})", cells.join(", "))
}

fn fmt_matrix(out: &mut String, title: &str, m: &RoundedMatrix) {
    let cells: Vec<Vec<String>> = m.values.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    writeln!(out, "{title}:").unwrap();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "  {}", line.join("  ")).unwrap();
    }
}

fn fmt_ratio(r: &RatioOutcome) -> String {
    match r {
        RatioOutcome::Computed(r) => {
            let l = r.l_witness.map_or("-".to_string(), |l| l.to_string());
            let integral = if r.integral_flags.iter().all(|&f| f) { "integral" } else { "non-integral" };
            format!("{:<5}  l={l}  K={}  {integral}", r.holds, fmt_list(&r.k))
        }
        RatioOutcome::NotDistinct => "skipped (values not distinct)".into(),
        RatioOutcome::Ambiguous { candidates } => format!("AMBIGUOUS {}", fmt_list(candidates)),
    }
}

fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let w = 16;
    writeln!(out, "{:<w$}{}", "scheme", r.name).unwrap();
    writeln!(out, "{:<w$}{}", "points n", r.n).unwrap();
    writeln!(out, "{:<w$}{}", "class d", r.d).unwrap();
    writeln!(out, "{:<w$}{}", "valencies", fmt_list(&r.valencies)).unwrap();
    writeln!(out, "{:<w$}{}", "multiplicities", fmt_list(&r.multiplicities)).unwrap();
    writeln!(out, "{:<w$}{:.3e}", "residual", r.spectral_residual).unwrap();
    writeln!(out, "{:<w$}{:.3e}", "min Krein", r.krein_min_entry).unwrap();
    writeln!(out, "{:<w$}{}", "Q-poly e", fmt_list(&r.qpoly_es)).unwrap();
    writeln!(out, "{:<w$}{}", "P-poly e", fmt_list(&r.ppoly_es)).unwrap();
    fmt_matrix(&mut out, "P (row j, column i: p_i(j))", &r.eigenmatrix_p);
    fmt_matrix(&mut out, "Q (row j, column i: q_i(j))", &r.eigenmatrix_q);
    for b in &r.per_e {
        writeln!(out, "e = {} (m = {})", b.e, b.multiplicity).unwrap();
        writeln!(out, "  {:<14}{}", "theta*", fmt_list(&b.theta_star)).unwrap();
        let sets: Vec<String> = b.filtration.sets.iter().map(|s| fmt_list(s)).collect();
        writeln!(out, "  {:<14}{}  Q-poly={}", "N_h", sets.join(" "), b.filtration.is_qpoly).unwrap();
        let order = |w: &Option<OrderingWitness>| w.as_ref().map_or("-".to_string(), |w| fmt_list(&w.order));
        writeln!(out, "  {:<14}{}", "Q ordering", order(&b.q_witness)).unwrap();
        writeln!(out, "  {:<14}{}", "Q ratios", fmt_ratio(&b.q_ratio)).unwrap();
        if let Some(i) = &b.integrality {
            writeln!(
                out,
                "  {:<14}hypothesis={} all_integral={} contradiction={}",
                "integrality", i.hypothesis, i.all_integral, i.contradiction
            )
            .unwrap();
        }
        writeln!(out, "  {:<14}{}", "P ordering", order(&b.p_witness)).unwrap();
        writeln!(out, "  {:<14}{}", "P ratios", fmt_ratio(&b.p_ratio)).unwrap();
        for msg in &b.discrepancies {
            writeln!(out, "  DISCREPANCY   {msg}").unwrap();
        }
    }
    let suzuki = match r.suzuki.status {
        SuzukiStatus::Checked => {
            let ids: Vec<String> = r
                .suzuki
                .comparisons
                .iter()
                .map(|c| c.pattern.map_or("VIOLATION".to_string(), |p| format!("pattern {p}")))
                .collect();
            ids.join(", ")
        }
        _ => r.suzuki.note.clone().unwrap_or_else(|| "no Q-polynomial ordering".into()),
    };
    writeln!(out, "{:<w$}{suzuki}", "orderings").unwrap();
    writeln!(out, "{:<w$}tol={:e} seed={:#x} digits={}", "settings", r.settings.tol, r.settings.seed, r.settings.digits)
        .unwrap();
    writeln!(out, "{:<w$}{}", "status", if r.discrepancy { "DISCREPANCY" } else { "ok" }).unwrap();
    out
}
