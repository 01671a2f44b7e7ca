//! Data products behind the `spectrum`, `absorption` and `eigenstates` subcommands.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::eigenstates::{amplitudes, entanglement_deviation, r_epsilon};
use crate::error::{Error, Result};
use crate::output::{document, number, Table};
use crate::spectrum::{djc_energies, min_gap, sweep_spectrum, BranchLabel, Sign};
use crate::susceptibility::{
    height_spread, matrix_elements, peak_report, susceptibility_curve, symmetry_metric, transition_probabilities,
    transition_table,
};

/// A table plus the summary object that accompanies it.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub table: Table,
    pub summary: Value,
}

impl Report {
    pub fn render(&self, cfg: &RunConfig, format: Format) -> String {
        match format {
            Format::Csv => self.table.to_csv(),
            Format::Json => document(cfg, &self.table, self.summary.clone()),
        }
    }
}

fn eps_key(eps: Sign) -> &'static str {
    match eps {
        Sign::Plus => "eps_plus",
        Sign::Minus => "eps_minus",
    }
}

/// One-excitation energies over the configured detuning sweep.
pub fn spectrum(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.sweep()?.grid();
    let sweep = sweep_spectrum(&cfg.params, &grid)?;
    let mut table = Table::new(std::iter::once("delta".to_string()).chain(BranchLabel::ALL.iter().map(|l| l.column())));
    for (d, e) in sweep.deltas.iter().zip(&sweep.energies) {
        let mut row = vec![*d];
        row.extend(e.values());
        table.push(row);
    }
    let mut gaps = serde_json::Map::new();
    for eps in Sign::BOTH {
        let (d, gap) = min_gap(&sweep, eps)?;
        gaps.insert(eps_key(eps).into(), json!({ "delta": number(d), "gap": number(gap) }));
    }
    Ok(Report { table, summary: json!({ "min_gap": gaps }) })
}

/// Complex susceptibility over the configured probe sweep, with peak diagnostics.
pub fn absorption(cfg: &RunConfig) -> Result<Report> {
    let grid = cfg.sweep()?.grid();
    let damping = cfg.damping()?;
    if !(cfg.params.g > 0.0) {
        return Err(Error::config("g", "absorption needs g > 0"));
    }
    let curve = susceptibility_curve(&cfg.params, &damping, &grid)?;
    let mut table = Table::new(["omega_p", "re_chi", "im_chi"]);
    for (w, c) in curve.omega_p.iter().zip(&curve.chi) {
        table.push(vec![*w, c.re, c.im]);
    }
    let peaks = peak_report(&curve);
    let transitions = transition_table(&cfg.params, &damping)?;
    let summary = json!({
        "peaks": peaks.iter().map(|p| json!({ "position": number(p.position), "height": number(p.height) })).collect::<Vec<_>>(),
        "symmetry_metric": symmetry_metric(&curve).map(number).unwrap_or(Value::Null),
        "height_spread": height_spread(&peaks).map(number).unwrap_or(Value::Null),
        "transitions": transitions.entries.iter().map(|t| json!({
            "epsilon": t.label.epsilon.symbol().to_string(),
            "branch": t.label.branch.symbol().to_string(),
            "center": number(t.center),
            "gamma_total": number(t.gamma_total),
        })).collect::<Vec<_>>(),
    });
    Ok(Report { table, summary })
}

/// Amplitude report for all four one-excitation states.
///
/// Rows encode `epsilon` and `branch` as `±1` and `dark` as `0/1`.
pub fn eigenstates(cfg: &RunConfig) -> Result<(Report, String)> {
    let p = &cfg.params;
    if !(p.g > 0.0) {
        return Err(Error::config("g", "eigenstates need g > 0"));
    }
    let energies = djc_energies(p);
    let damping = cfg.damping().ok();
    let mut table = Table::new([
        "epsilon", "branch", "r", "u", "w", "energy", "deviation", "atomic_element", "photonic_element", "dark", "gamma_total",
    ]);
    let mut text = String::new();
    let _ = writeln!(text, "delta = {}, g = {}, kappa = {}, omega_c = {}", p.delta(), p.g, p.kappa, p.omega_c);
    for eps in Sign::BOTH {
        let r = r_epsilon(p, eps)?;
        let a = amplitudes(r, eps);
        let dev = entanglement_deviation(&a);
        let elements = matrix_elements(&a, eps);
        let gammas = damping.map(|d| transition_probabilities(&a, &d, eps));
        let _ = writeln!(
            text,
            "eps = {eps}: r = {r}, deviation = {dev}{}",
            if dev <= 1e-12 { " (maximally entangled)" } else { "" }
        );
        for (k, b) in Sign::BOTH.iter().enumerate() {
            let (u, w) = a.branch(*b);
            let m = elements[k];
            let gamma = gammas.map(|(gp, gm)| if k == 0 { gp } else { gm });
            let energy = energies.get(BranchLabel::new(eps, *b));
            let _ = writeln!(
                text,
                "  |{b}, r_{eps}>: energy = {energy}, u = {u}, w = {w}, elements = ({}, {}), {}{}",
                m.atomic,
                m.photonic,
                if m.is_dark() { "dark" } else { "bright" },
                gamma.map(|g| format!(", gamma = {g}")).unwrap_or_default(),
            );
            table.push(vec![
                eps.value(),
                b.value(),
                r,
                u,
                w,
                energy,
                dev,
                m.atomic,
                m.photonic,
                if m.is_dark() { 1.0 } else { 0.0 },
                gamma.unwrap_or(f64::NAN),
            ]);
        }
    }
    Ok((Report { table, summary: json!({}) }, text))
}
