//! Python bindings: groups, class tables, induced characters and the
//! verification checks.

use coxeter_ls::class_function::ClassFunction;
use coxeter_ls::shape::{cuspidal_labels, shapes};
use coxeter_ls::{Budget, Check, ClassLabel, Group, Shape, VerificationReport, Verifier};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

/// A Coxeter group of type A, B or D.
#[pyclass(name = "Group", frozen)]
struct PyGroup {
    inner: Group,
}

#[pymethods]
impl PyGroup {
    #[new]
    fn new(family: &str, rank: usize) -> PyResult<Self> {
        let family = family.parse().map_err(value_err)?;
        Ok(Self {
            inner: Group::new(family, rank).map_err(value_err)?,
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn family(&self) -> String {
        format!("{:?}", self.inner.family())
    }

    #[getter]
    fn order(&self) -> u64 {
        self.inner.order()
    }

    fn exponents(&self) -> Vec<i64> {
        self.inner.exponents()
    }

    fn hyperplane_count(&self) -> usize {
        self.inner.hyperplane_count()
    }

    /// Conjugacy class labels in canonical order.
    fn class_labels(&self) -> Vec<String> {
        coxeter_ls::classes::class_labels(&self.inner)
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn shapes(&self) -> Vec<String> {
        shapes(&self.inner)
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn cuspidal_labels(&self, shape: &str) -> PyResult<Vec<String>> {
        let shape: Shape = shape.parse().map_err(value_err)?;
        Ok(cuspidal_labels(&self.inner, &shape)
            .map_err(value_err)?
            .iter()
            .map(ToString::to_string)
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

fn report_to_py(py: Python<'_>, report: &VerificationReport) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(report).map_err(runtime_err)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// Class function values as strings, keyed by class label.
fn class_function_to_py(f: &ClassFunction) -> Vec<(String, String)> {
    f.table()
        .classes()
        .iter()
        .zip(f.values())
        .map(|(c, v)| (c.label.to_string(), v.to_string()))
        .collect()
}

/// Runs verification checks on one group with cached intermediate data.
#[pyclass(name = "Verifier", frozen)]
struct PyVerifier {
    inner: Verifier,
}

#[pymethods]
impl PyVerifier {
    #[new]
    #[pyo3(signature = (group, budget_elements=None, budget_flats=None))]
    fn new(
        group: &PyGroup,
        budget_elements: Option<u64>,
        budget_flats: Option<u64>,
    ) -> PyResult<Self> {
        let mut budget = Budget::DESK;
        if let Some(m) = budget_elements {
            budget = budget.with_elements(m);
        }
        if let Some(f) = budget_flats {
            budget = budget.with_flats(f);
        }
        Ok(Self {
            inner: Verifier::new(group.inner, budget).map_err(value_err)?,
        })
    }

    /// Runs `check` and returns the reports as dictionaries.
    #[pyo3(signature = (check, shape=None))]
    fn run<'py>(
        &self,
        py: Python<'py>,
        check: &str,
        shape: Option<&str>,
    ) -> PyResult<Bound<'py, PyList>> {
        let check: Check = check.parse().map_err(value_err)?;
        let shape: Option<Shape> = shape.map(str::parse).transpose().map_err(value_err)?;
        let reports = py
            .detach(|| self.inner.run(check, shape.as_ref()))
            .map_err(runtime_err)?;
        let items = reports
            .iter()
            .map(|r| report_to_py(py, r))
            .collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, items)
    }

    /// `Ind φ_w` for the class `label`, as `(class, value)` pairs.
    fn induced_phi(&self, py: Python<'_>, label: &str) -> PyResult<Vec<(String, String)>> {
        let label: ClassLabel = label.parse().map_err(value_err)?;
        let f = py
            .detach(|| self.inner.induced_phi(&label))
            .map_err(runtime_err)?;
        Ok(class_function_to_py(&f))
    }

    /// `Ind χ_w` for the class `label`.
    fn induced_chi(&self, py: Python<'_>, label: &str) -> PyResult<Vec<(String, String)>> {
        let label: ClassLabel = label.parse().map_err(value_err)?;
        let f = py
            .detach(|| self.inner.induced_chi(&label))
            .map_err(runtime_err)?;
        Ok(class_function_to_py(&f))
    }

    /// Degree-`p` Orlik–Solomon characters, one list per degree.
    fn graded_os_character(&self, py: Python<'_>) -> PyResult<Vec<Vec<(String, String)>>> {
        let graded = py
            .detach(|| self.inner.graded_os_character())
            .map_err(runtime_err)?;
        Ok(graded.iter().map(class_function_to_py).collect())
    }

    /// `(label, [c0, c1, …])` for every class.
    fn poincare_table(&self, py: Python<'_>) -> PyResult<Vec<(String, Vec<i64>)>> {
        let n = self.inner.group().rank() + 1;
        let table = py
            .detach(|| self.inner.poincare_table())
            .map_err(runtime_err)?;
        Ok(table
            .into_iter()
            .map(|(l, p)| (l.to_string(), p.padded(n)))
            .collect())
    }
}

#[pymodule]
fn coxeter_ls_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyVerifier>()?;
    Ok(())
}
