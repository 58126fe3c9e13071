use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::action::Coeffs;
use super::point::EvalPoint;
use super::setup::singularity_setup_check;
use super::window::{build_basis_b, ModuleWindow};
use crate::combinat::ShiftVector;
use crate::error::Result;
use crate::skewops::build_generators;

#[derive(Clone, Debug, Serialize)]
pub struct Step1Entry {
    pub shift: String,
    pub generator: String,
    pub target: String,
    pub nonzero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicityEntry {
    pub element: usize,
    pub shift: String,
    pub word: String,
    pub reached: bool,
    pub steps: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub setup_ok: bool,
    /// Pairs in adjacent rows with integral difference, rendered.
    pub cross_row_violations: Vec<String>,
    pub hypotheses_ok: bool,
    pub error: Option<String>,
    pub step1: Vec<Step1Entry>,
    pub step1_ok: bool,
    pub cyclicity: Vec<CyclicityEntry>,
    pub cyclicity_ok: bool,
}

impl ProbeReport {
    pub fn passes(&self) -> bool {
        self.hypotheses_ok && self.error.is_none() && self.step1_ok && self.cyclicity_ok
    }
}

/// Action tables of all `E_i` and `F_i` on the interior basis elements.
pub fn interior_tables(w: &ModuleWindow) -> Result<Vec<(String, BTreeMap<usize, Coeffs>)>> {
    let g = build_generators(&w.lambda);
    let mut out = Vec::new();
    for (name, op) in g.named() {
        if name.starts_with("gamma") {
            continue;
        }
        let prep = w.prepare(op)?;
        let mut table = BTreeMap::new();
        for b in 0..w.len() {
            if w.is_interior(b) {
                table.insert(b, w.act_prepared(&prep, b)?);
            }
        }
        out.push((name, table));
    }
    Ok(out)
}

/// Checks the simplicity hypotheses and collects finite-window evidence.
pub fn simplicity_probe(v: &EvalPoint, r: i64) -> ProbeReport {
    let setup = singularity_setup_check(v, r);
    let cross: Vec<String> = v.cross_row_integral_pairs().iter().map(|(a, b)| format!("{a}~{b}")).collect();
    let mut report = ProbeReport {
        setup_ok: setup.passes(),
        hypotheses_ok: setup.passes() && cross.is_empty(),
        cross_row_violations: cross,
        error: None,
        step1: Vec::new(),
        step1_ok: false,
        cyclicity: Vec::new(),
        cyclicity_ok: false,
    };
    if let Err(e) = run(v, r, &mut report) {
        report.error = Some(e.to_string());
    }
    report
}

fn run(v: &EvalPoint, r: i64, report: &mut ProbeReport) -> Result<()> {
    let w = build_basis_b(v, r)?;
    let lambda = &w.lambda;
    let tables = interior_tables(&w)?;

    for (j, o) in w.orbits.iter().enumerate() {
        if o.shift.sup_norm() >= r {
            continue;
        }
        let ev = w.index_of(j, &crate::combinat::RowPermutation::identity(lambda)).expect("identity word");
        for (name, table) in &tables {
            let step = if name.starts_with('E') { 1 } else { -1 };
            let i: u32 = name[1..].parse().expect("generator name");
            let image = &table[&ev];
            let mut seen = BTreeSet::new();
            for a in lambda.row(i) {
                let target = o.shift.add(&ShiftVector::unit(a, step));
                let t = w.orbit_of_shift(&target).expect("interior neighbours lie in the window");
                if !seen.insert(t) {
                    continue;
                }
                let pr = w.project(image, &w.orbits[t].character);
                report.step1.push(Step1Entry {
                    shift: o.shift.render(lambda),
                    generator: name.clone(),
                    target: w.orbits[t].shift.render(lambda),
                    nonzero: !pr.is_empty(),
                });
            }
        }
    }
    report.step1_ok = report.step1.iter().all(|e| e.nonzero);

    let base = w.base_index();
    for b in 0..w.len() {
        if !w.is_interior(b) {
            continue;
        }
        let (reached, steps) = reach_base(&w, &tables, b, base);
        report.cyclicity.push(CyclicityEntry {
            element: b,
            shift: w.basis[b].functional.shift.render(lambda),
            word: w.basis[b].functional.word.to_string(),
            reached,
            steps,
        });
    }
    report.cyclicity_ok = report.cyclicity.iter().all(|e| e.reached);
    Ok(())
}

/// Breadth-first search over blocks, applying `E_i`, `F_i` and block
/// projections, until a vector with a nonzero `ev_v` coefficient appears.
fn reach_base(
    w: &ModuleWindow,
    tables: &[(String, BTreeMap<usize, Coeffs>)],
    start: usize,
    base: usize,
) -> (bool, usize) {
    let mut unit = Coeffs::new();
    unit.insert(start, crate::exactalg::Scalar::one());
    let mut visited = BTreeSet::from([w.basis[start].orbit]);
    let mut queue = VecDeque::from([(unit, 0usize)]);
    while let Some((vec, depth)) = queue.pop_front() {
        if vec.get(&base).is_some_and(|s| !s.is_zero()) {
            return (true, depth);
        }
        for (_, table) in tables {
            let Some(img) = w.act_vector(&vec, table) else { continue };
            for (orbit, part) in w.split_blocks(&img) {
                if visited.insert(orbit) {
                    queue.push_back((part, depth + 1));
                }
            }
        }
    }
    (false, 0)
}
