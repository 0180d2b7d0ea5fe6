//! Python bindings: graphs, switching predicates, canonical forms, and the
//! closure search.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use seidel::canon::{are_isomorphic, automorphisms, canonical_form};
use seidel::catalog::SWITCHABLE_PARAMETERS;
use seidel::embedding::{check_design_moments, gram_from_graph, relative_bound};
use seidel::error::Error;
use seidel::families::{construct_named, Family};
use seidel::graph6;
use seidel::search::{self, ClosureLimits, SetStrategy};
use seidel::srg::{derive_spectrum, verify_srg, SrgClass, SrgParams};
use seidel::switching::{check_thm1, check_thm2, switch, two_graph};
use seidel::{Graph as CoreGraph, VertexSet};

fn to_py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple undirected graph backed by the seidel core.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: graph6::decode(line).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::from_edges(n, &edges).map_err(to_py_err)?,
        })
    }

    fn graph6(&self) -> String {
        graph6::encode(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn complement(&self) -> Graph {
        Graph {
            inner: self.inner.complement(),
        }
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.degree(v))
    }

    /// SRG classification: {"class": str, "params": (v,k,lambda,mu) | None}.
    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let class = verify_srg(&self.inner);
        let d = PyDict::new(py);
        let name = match &class {
            SrgClass::NotRegular => "not-regular",
            SrgClass::CompleteOrEmpty => "complete-or-empty",
            SrgClass::RegularNotSrg => "regular-not-srg",
            SrgClass::ImprimitiveSrg(_) => "imprimitive-srg",
            SrgClass::PrimitiveSrg(_) => "primitive-srg",
        };
        d.set_item("class", name)?;
        d.set_item("params", class.params().map(|p| (p.v, p.k, p.lambda, p.mu)))?;
        Ok(d)
    }

    /// Derived spectrum of the graph's SRG parameters.
    fn spectrum<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let params = verify_srg(&self.inner)
            .params()
            .ok_or_else(|| PyValueError::new_err("graph is not strongly regular"))?;
        let s = derive_spectrum(&params).map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("params", (params.v, params.k, params.lambda, params.mu))?;
        d.set_item("theta1", s.theta1)?;
        d.set_item("theta2", s.theta2)?;
        d.set_item("m1", s.m1)?;
        d.set_item("m2", s.m2)?;
        d.set_item("rho", s.rho)?;
        d.set_item("switchable", s.switchable)?;
        Ok(d)
    }

    /// Seidel switching by a list of vertex indices.
    fn switch(&self, set: Vec<usize>) -> PyResult<Graph> {
        let h = VertexSet::from_indices(self.inner.n(), &set).map_err(to_py_err)?;
        Ok(Graph {
            inner: switch(&self.inner, &h).map_err(to_py_err)?,
        })
    }

    /// Same-parameters switching criterion for a set.
    fn check_thm1(&self, set: Vec<usize>) -> PyResult<bool> {
        let h = VertexSet::from_indices(self.inner.n(), &set).map_err(to_py_err)?;
        check_thm1(&self.inner, &h).map_err(to_py_err)
    }

    /// Shifted-parameters criterion: the parameter shift c, or None.
    fn check_thm2(&self, set: Vec<usize>) -> PyResult<Option<i64>> {
        let h = VertexSet::from_indices(self.inner.n(), &set).map_err(to_py_err)?;
        check_thm2(&self.inner, &h).map_err(to_py_err)
    }

    fn canonical_graph6(&self) -> PyResult<String> {
        let form = canonical_form(&self.inner).map_err(to_py_err)?;
        Ok(graph6::encode(&form.canonical_graph(&self.inner)))
    }

    fn canonical_digest(&self) -> PyResult<String> {
        let form = canonical_form(&self.inner).map_err(to_py_err)?;
        Ok(format!("{:032x}", form.digest))
    }

    fn is_isomorphic(&self, other: &Graph) -> PyResult<bool> {
        Ok(are_isomorphic(&self.inner, &other.inner)
            .map_err(to_py_err)?
            .is_some())
    }

    fn automorphism_order(&self) -> PyResult<u128> {
        Ok(automorphisms(&self.inner).map_err(to_py_err)?.order)
    }

    /// Two-graph statistics: triple count and regularity constant.
    fn two_graph<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let tg = two_graph(&self.inner);
        let d = PyDict::new(py);
        d.set_item("triples", tg.triples.len())?;
        d.set_item("regular", tg.regular)?;
        Ok(d)
    }

    /// Embedding certification: rank, 2-design flag, inner values, bound.
    fn embedding_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let params = verify_srg(&self.inner)
            .params()
            .ok_or_else(|| PyValueError::new_err("graph is not strongly regular"))?;
        let s = derive_spectrum(&params).map_err(to_py_err)?;
        let gram = gram_from_graph(&self.inner, &s).map_err(to_py_err)?;
        let bound = relative_bound(s.m2, s.rho).map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("rank", gram.d)?;
        d.set_item("design2", check_design_moments(&gram, 2))?;
        d.set_item(
            "inner_values",
            gram.inner_values
                .iter()
                .map(|r| (*r.numer(), *r.denom()))
                .collect::<Vec<(i64, i64)>>(),
        )?;
        d.set_item("relative_bound", (*bound.numer(), *bound.denom()))?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, g6={:?})", self.inner.n(), self.graph6())
    }
}

/// Constructs a named family graph.
#[pyfunction]
fn construct(family: &str, order: usize) -> PyResult<Graph> {
    let f: Family = family.parse().map_err(to_py_err)?;
    Ok(Graph {
        inner: construct_named(&f, order).map_err(to_py_err)?,
    })
}

/// The catalog of switchable parameter tuples at v <= 280.
#[pyfunction]
fn catalog_params() -> Vec<(usize, usize, usize, usize)> {
    SWITCHABLE_PARAMETERS
        .iter()
        .map(|p| (p.v, p.k, p.lambda, p.mu))
        .collect()
}

/// The one qualifying clique size for a parameter tuple.
#[pyfunction]
fn clique_switch_size(v: usize, k: usize, lambda: usize, mu: usize) -> PyResult<usize> {
    let s = derive_spectrum(&SrgParams::new(v, k, lambda, mu)).map_err(to_py_err)?;
    search::clique_switch_size(&s).map_err(to_py_err)
}

fn strategy_from_name(name: &str, max_h: usize, max_parts: usize) -> PyResult<SetStrategy> {
    Ok(match name {
        "brute" => SetStrategy::Brute { max_h },
        "cliques" => SetStrategy::Cliques,
        "clique-unions" => SetStrategy::CliqueUnions { max_parts },
        "auto" => SetStrategy::Auto,
        _ => return Err(PyValueError::new_err(format!("unknown strategy '{name}'"))),
    })
}

/// Qualifying switching sets of a graph under a strategy.
#[pyfunction]
#[pyo3(signature = (g, strategy="cliques", max_h=10, max_parts=8, budget=100_000_000))]
fn find_sets(
    g: &Graph,
    strategy: &str,
    max_h: usize,
    max_parts: usize,
    budget: u64,
) -> PyResult<Vec<Vec<usize>>> {
    let params = verify_srg(&g.inner)
        .params()
        .ok_or_else(|| PyValueError::new_err("graph is not strongly regular"))?;
    let s = derive_spectrum(&params).map_err(to_py_err)?;
    let strat = strategy_from_name(strategy, max_h, max_parts)?;
    Ok(search::find_sets(&g.inner, &s, &strat, budget)
        .map_err(to_py_err)?
        .iter()
        .map(|set| set.indices())
        .collect())
}

/// Switching closure; returns {"classes": [g6], "stats": {...}, "truncated": str | None}.
#[pyfunction]
#[pyo3(signature = (g, strategy="auto", max_h=10, max_parts=8, budget=100_000_000, max_graphs=None, max_seconds=None, threads=1))]
#[allow(clippy::too_many_arguments)]
fn closure<'py>(
    py: Python<'py>,
    g: &Graph,
    strategy: &str,
    max_h: usize,
    max_parts: usize,
    budget: u64,
    max_graphs: Option<usize>,
    max_seconds: Option<u64>,
    threads: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let strat = strategy_from_name(strategy, max_h, max_parts)?;
    let limits = ClosureLimits {
        max_graphs,
        max_seconds,
        subset_budget: budget,
        threads,
        ..ClosureLimits::default()
    };
    // Long-running search; let other Python threads make progress.
    let state = py
        .detach(|| search::closure(&g.inner, &strat, &limits))
        .map_err(to_py_err)?;
    closure_dict(py, &state)
}

/// Search for graphs with the shifted parameter set.
#[pyfunction]
#[pyo3(signature = (g, budget=100_000_000, max_graphs=None, max_seconds=None))]
fn closure_thm2<'py>(
    py: Python<'py>,
    g: &Graph,
    budget: u64,
    max_graphs: Option<usize>,
    max_seconds: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let limits = ClosureLimits {
        max_graphs,
        max_seconds,
        subset_budget: budget,
        ..ClosureLimits::default()
    };
    let state = py
        .detach(|| search::closure_thm2(&g.inner, &limits))
        .map_err(to_py_err)?;
    closure_dict(py, &state)
}

fn closure_dict<'py>(
    py: Python<'py>,
    state: &search::ClosureState,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item(
        "classes",
        state
            .sorted_classes()
            .iter()
            .map(|r| r.graph6.clone())
            .collect::<Vec<String>>(),
    )?;
    let stats = PyDict::new(py);
    stats.set_item("graphs_visited", state.stats.graphs_visited)?;
    stats.set_item("sets_tried", state.stats.sets_tried)?;
    stats.set_item("classes_found", state.stats.classes_found)?;
    d.set_item("stats", stats)?;
    d.set_item("truncated", state.truncated.clone())?;
    Ok(d)
}

#[pymodule]
fn seidel_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_params, m)?)?;
    m.add_function(wrap_pyfunction!(clique_switch_size, m)?)?;
    m.add_function(wrap_pyfunction!(find_sets, m)?)?;
    m.add_function(wrap_pyfunction!(closure, m)?)?;
    m.add_function(wrap_pyfunction!(closure_thm2, m)?)?;
    Ok(())
}
