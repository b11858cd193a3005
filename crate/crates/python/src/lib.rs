//! Python bindings: graphs are passed as a vertex count and an edge list,
//! suite results as `(suite, item, verdict, value, detail)` tuples.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use sepchoose_core::alon_tarsi::{self, Orientation};
use sepchoose_core::choose::{self, DEFAULT_BUDGET};
use sepchoose_core::commands::{self, Fixtures};
use sepchoose_core::config::load_catalog;
use sepchoose_core::discharge::{audit_lp as core_audit_lp, Variant};
use sepchoose_core::graph::Graph;
use sepchoose_core::merge::MERGE_BUDGET;
use sepchoose_core::rational::fmt_q;
use sepchoose_core::report::RunReport;
use sepchoose_core::Error;

create_exception!(sepchoose, BudgetExceeded, PyException);

type Record = (String, String, String, String, String);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Budget(m) => BudgetExceeded::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> PyResult<Graph> {
    Graph::from_edges(n, edges).map_err(py_err)
}

fn records(r: RunReport) -> Vec<Record> {
    r.items
        .into_iter()
        .map(|i| (r.suite.clone(), i.name, i.verdict.as_str().to_owned(), i.value, i.detail))
        .collect()
}

/// Catalog entry names in order.
#[pyfunction]
fn catalog_names() -> PyResult<Vec<String>> {
    let confs = load_catalog(&Fixtures::shipped().catalog).map_err(py_err)?;
    Ok(confs.into_iter().map(|c| c.name).collect())
}

/// `(choosable, witness lists or None, assignments checked, search nodes)`.
#[pyfunction]
#[pyo3(signature = (n, edges, f, s=2, budget=None))]
fn is_fs_choosable(
    n: usize,
    edges: Vec<(usize, usize)>,
    f: Vec<usize>,
    s: usize,
    budget: Option<u64>,
) -> PyResult<(bool, Option<Vec<Vec<u32>>>, u64, u64)> {
    let g = graph(n, &edges)?;
    let v = choose::is_fs_choosable_with_budget(&g, &f, s, budget.unwrap_or(DEFAULT_BUDGET)).map_err(py_err)?;
    Ok((v.choosable, v.witness.map(|w| w.lists), v.assignments, v.nodes))
}

/// Arcs of the first Alon-Tarsi orientation, or None.
#[pyfunction]
fn find_at_orientation(n: usize, edges: Vec<(usize, usize)>, f: Vec<usize>) -> PyResult<Option<Vec<(usize, usize)>>> {
    let g = graph(n, &edges)?;
    Ok(alon_tarsi::find_at_orientation(&g, &f).map_err(py_err)?.map(|o| o.arcs()))
}

/// `(even, odd)` Eulerian subgraph counts of the orientation given by `arcs`.
#[pyfunction]
fn eulerian_counts(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<(u64, u64)> {
    let g = graph(n, &arcs)?;
    let o = Orientation::from_arcs(g, &arcs).map_err(py_err)?;
    let p = alon_tarsi::eulerian_counts(&o).map_err(py_err)?;
    Ok((p.ee, p.eo))
}

#[pyfunction]
#[pyo3(signature = (names=None, budget=None))]
fn verify_catalog(names: Option<Vec<String>>, budget: Option<u64>) -> PyResult<Vec<Record>> {
    let r = commands::cmd_verify_catalog(&Fixtures::shipped(), &names.unwrap_or_default(), budget.unwrap_or(DEFAULT_BUDGET))
        .map_err(py_err)?;
    Ok(records(r))
}

#[pyfunction]
#[pyo3(signature = (names=None, forbidden_len=5, budget=None))]
fn verify_merges(names: Option<Vec<String>>, forbidden_len: usize, budget: Option<u64>) -> PyResult<Vec<Record>> {
    let r = commands::cmd_verify_merges(
        &Fixtures::shipped(),
        &names.unwrap_or_default(),
        forbidden_len,
        budget.unwrap_or(MERGE_BUDGET),
    )
    .map_err(py_err)?;
    Ok(records(r))
}

#[pyfunction]
#[pyo3(signature = (variant=None))]
fn audit_discharging(variant: Option<&str>) -> PyResult<Vec<Record>> {
    let vs: Vec<Variant> = match variant {
        Some(v) => vec![v.parse().map_err(py_err)?],
        None => vec![],
    };
    Ok(records(commands::cmd_audit_discharging(&Fixtures::shipped(), &vs).map_err(py_err)?))
}

/// LP findings as `(name, value, note)` with values written `p/q`.
#[pyfunction]
fn audit_lp() -> Vec<(String, Option<String>, String)> {
    core_audit_lp().summary().into_iter().map(|(n, v, note)| (n, v.map(|x| fmt_q(&x)), note)).collect()
}

#[pymodule]
fn sepchoose(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(is_fs_choosable, m)?)?;
    m.add_function(wrap_pyfunction!(find_at_orientation, m)?)?;
    m.add_function(wrap_pyfunction!(eulerian_counts, m)?)?;
    m.add_function(wrap_pyfunction!(verify_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(verify_merges, m)?)?;
    m.add_function(wrap_pyfunction!(audit_discharging, m)?)?;
    m.add_function(wrap_pyfunction!(audit_lp, m)?)?;
    Ok(())
}
