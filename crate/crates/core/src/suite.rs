//! The full identity suite for one instance.

use crate::abelian::FgGroup;
use crate::arithmetic::{
    contraction_representation, deletion_representation, ArithmeticMatroid, Kind, Represented,
};
use crate::error::{Error, Result};
use crate::potts::{
    color_flow_identities, fk_report, fk_specializations, flow_formula_check, orientation_report,
    periodicity_report, quasi_report, WeightedDigraph,
};
use crate::report::Report;
use crate::sample::Sampler;
use crate::tutte::{
    activity_decomposition_report, basis_expansion_report, deletion_contraction_report, geometric_report,
    molecule_sum_identity, nonnegativity_report,
};
use crate::zonotope::ehrhart_report;
use crate::Limits;

/// An instance: a list in a group (optionally from a weighted graph), or
/// explicit rank and multiplicity tables.
#[derive(Clone, Debug)]
pub enum Instance {
    List { rep: Represented, graph: Option<WeightedDigraph> },
    Tables(ArithmeticMatroid),
}

impl Instance {
    pub fn arithmetic(&self) -> &ArithmeticMatroid {
        match self {
            Instance::List { rep, .. } => rep.arithmetic(),
            Instance::Tables(a) => a,
        }
    }

    pub fn represented(&self) -> Option<&Represented> {
        match self {
            Instance::List { rep, .. } => Some(rep),
            Instance::Tables(_) => None,
        }
    }

    pub fn graph(&self) -> Option<&WeightedDigraph> {
        match self {
            Instance::List { graph, .. } => graph.as_ref(),
            Instance::Tables(_) => None,
        }
    }
}

/// Ranges used by the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Closed-form Potts and flow identities for `q = 1..=q_max`.
    pub q_max: u64,
    /// Specialization gates for `q = 1..=q_gate`.
    pub q_gate: u64,
    /// Ehrhart scalings `k ∈ {1..=ehrhart_k}^n`.
    pub ehrhart_k: i64,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions { q_max: 12, q_gate: 24, ehrhart_k: 3 }
    }
}

/// Runs `f`, turning an exceeded cap into a recorded skip.
fn capped(report: &mut Report, name: &str, f: impl FnOnce() -> Result<Report>) -> Result<()> {
    match f() {
        Ok(r) => report.extend(r.scoped(name)),
        Err(Error::CapExceeded { required, cap }) => {
            report.record(format!("{name}: skipped"), true, format!("needs {required} > cap {cap}"))
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

/// Every identity that applies to `instance`, with random points drawn from `seed`.
pub fn check_theorems(instance: &Instance, seed: u64, limits: Limits, options: SuiteOptions) -> Result<Report> {
    let a = instance.arithmetic();
    let mut sampler = Sampler::new(seed);
    let mut report = Report::new();

    let axioms = a.axiom_check();
    let kind = match instance {
        Instance::List { .. } => Kind::Arithmetic,
        Instance::Tables(a) => a.kind(),
    };
    report.record(
        "axioms",
        axioms.supports(kind),
        format!("kind {kind}: A1 {:?}, A2 {:?}, P {:?}", axioms.a1, axioms.a2, axioms.p),
    );

    report.extend(basis_expansion_report(a, &mut sampler)?.scoped("basis expansion"));
    report.extend(nonnegativity_report(a)?.scoped("nonnegativity"));
    for (_, mol) in a.matroid().molecule_partition()? {
        report.extend(molecule_sum_identity(a, &mol, &mut sampler)?.scoped("molecule"));
    }
    report.extend(deletion_contraction_report(a, &mut sampler)?.scoped("deletion-contraction"));
    if a.is_integral() && axioms.all_pass() {
        report.extend(activity_decomposition_report(a)?.scoped("activity polynomials"));
    }

    let Some(rep) = instance.represented() else { return Ok(report) };
    report.extend(commutation_report(rep)?.scoped("minors"));
    let cap = limits.enumeration_cap;
    for q in 1..=options.q_max {
        capped(&mut report, "Potts", || fk_report(rep, &FgGroup::cyclic(q), cap))?;
    }
    for h in [FgGroup::new(0, vec![2u32, 4]).expect("chain"), FgGroup::cyclic(6)] {
        capped(&mut report, "Potts", || fk_report(rep, &h, cap))?;
    }
    for q in 1..=options.q_gate {
        capped(&mut report, "Potts gates", || fk_specializations(rep, q, cap))?;
    }
    capped(&mut report, "quasi-polynomial", || quasi_report(rep, options.q_max, cap, &mut sampler))?;
    report.extend(periodicity_report(rep, options.q_max)?.scoped("quasi-polynomial"));
    for q in 1..=options.q_max {
        capped(&mut report, "flows", || flow_formula_check(rep, q, cap, &mut sampler))?;
        capped(&mut report, "colorings", || color_flow_identities(rep, q, cap))?;
    }
    capped(&mut report, "lattice points", || geometric_report(rep, limits.lattice_cap))?;
    if rep.list().group().is_torsion_free() {
        capped(&mut report, "Ehrhart", || ehrhart_report(rep, options.ehrhart_k, limits.lattice_cap))?;
    }
    if let Some(d) = instance.graph() {
        capped(&mut report, "graph", || orientation_report(d, options.q_max.min(6), cap))?;
    }
    Ok(report)
}

/// The matroid of a deleted or contracted representation equals the
/// deletion or contraction of the matroid, for every element.
pub fn commutation_report(rep: &Represented) -> Result<Report> {
    let a = rep.arithmetic();
    let mut report = Report::new();
    for e in 0..rep.ground_size() {
        let deleted = Represented::new(deletion_representation(rep.list(), e)?)?;
        let contracted = Represented::new(contraction_representation(rep.list(), e)?)?;
        let del_ok = deleted.arithmetic().multiplicities() == a.delete(e)?.multiplicities()
            && deleted.matroid() == a.delete(e)?.matroid();
        let con_ok = contracted.arithmetic().multiplicities() == a.contract(e)?.multiplicities()
            && contracted.matroid() == a.contract(e)?.matroid();
        report.record(format!("deletion of {} commutes", e + 1), del_ok, "");
        report.record(format!("contraction of {} commutes", e + 1), con_ok, "");
    }
    Ok(report)
}
